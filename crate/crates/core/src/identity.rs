//! Results of polynomial identity proofs.

use crate::poly::MPoly;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProofMode {
    /// Both sides expanded and subtracted.
    Symbolic,
    /// Randomized evaluation at integer points (Schwartz–Zippel).
    Pit,
}

impl ProofMode {
    pub fn as_str(self) -> &'static str {
        match self {
            ProofMode::Symbolic => "symbolic",
            ProofMode::Pit => "pit",
        }
    }
}

impl std::str::FromStr for ProofMode {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "symbolic" => Ok(ProofMode::Symbolic),
            "pit" => Ok(ProofMode::Pit),
            other => Err(crate::Error::InvalidArgument(format!("unknown proof mode {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofStats {
    pub lhs_degree: Option<usize>,
    pub rhs_degree: Option<usize>,
    /// Degree of the left-hand side in each block of variables (one block per point).
    pub lhs_block_degrees: Vec<Option<usize>>,
    pub rhs_block_degrees: Vec<Option<usize>>,
    pub lhs_terms: usize,
    pub rhs_terms: usize,
    pub trials: usize,
    /// Probability bound that a nonzero difference passed every trial.
    pub failure_bound: Option<Scalar>,
}

/// Outcome of checking `lhs = rhs` as polynomials.
///
/// In symbolic mode `proved` is exactly "the difference is the zero
/// polynomial". In PIT mode the polynomials are not materialized and
/// `proved` means every trial agreed; `stats.failure_bound` bounds the
/// chance that this happened for a nonzero difference.
#[derive(Clone, Debug)]
pub struct IdentityProof {
    pub mode: ProofMode,
    pub lhs: Option<MPoly>,
    pub rhs: Option<MPoly>,
    pub difference: Option<MPoly>,
    pub proved: bool,
    pub stats: ProofStats,
}

impl IdentityProof {
    /// Builds a symbolic proof record; `blocks` lists the variable indices of each block.
    pub fn symbolic(lhs: MPoly, rhs: MPoly, blocks: &[Vec<usize>]) -> IdentityProof {
        let difference = &lhs - &rhs;
        let stats = ProofStats {
            lhs_degree: lhs.total_degree(),
            rhs_degree: rhs.total_degree(),
            lhs_block_degrees: blocks.iter().map(|b| lhs.degree_in(b)).collect(),
            rhs_block_degrees: blocks.iter().map(|b| rhs.degree_in(b)).collect(),
            lhs_terms: lhs.num_terms(),
            rhs_terms: rhs.num_terms(),
            ..ProofStats::default()
        };
        IdentityProof {
            mode: ProofMode::Symbolic,
            proved: difference.is_zero(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            difference: Some(difference),
            stats,
        }
    }
}

/// Variable indices of `count` consecutive blocks of `size` variables.
pub fn point_blocks(count: usize, size: usize) -> Vec<Vec<usize>> {
    (0..count).map(|b| (b * size..(b + 1) * size).collect()).collect()
}
