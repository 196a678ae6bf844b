//! Five lines in `P^4` on a quadric, and the Richmond–Segre–Brown points.
//!
//! Line `L_i` joins the coordinate point `P_i = e_{i-1}` to `Q_i`.
//!
//! * `F` is the determinant of the 10×10 system for a quadric with no
//!   square terms (so through every `P_i`) that contains each `Q_i` and
//!   whose tangent hyperplane at `P_i` contains `Q_i`. Columns are the
//!   monomials `z_a z_b`, `a < b`, in lexicographic order; rows 1–5 are the
//!   on-quadric conditions, rows 6–10 the tangency conditions.
//! * `R_i = L_i ∩ span(L_{i-1}, L_{i+1})` (indices mod 5), computed as
//!   `(h·Q_i) P_i − (h·P_i) Q_i` with `h` the signed maximal minors of the
//!   rows `P_{i-1}, Q_{i-1}, P_{i+1}, Q_{i+1}`. `G` is the determinant of
//!   the five raw `R_i`.
//!
//! With these representatives `F = G` as polynomials of degree 15 in the
//! 25 coordinates of the `Q_i`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::identity::{point_blocks, IdentityProof, ProofMode, ProofStats};
use crate::matrix::Mat;
use crate::poly::{poly_det_with_ceiling, MPoly, PolyMat};
use crate::projective::{frame_map, line_hyperplane_meet_raw, rank_of, span_hyperplane_raw, PLine, PPoint};
use crate::quadric3::vertex_line_rows;
use crate::rng::Lcg64;
use crate::scalar::{int, Scalar};

/// Half-width of the PIT sampling range: coordinates are uniform in
/// `[-2^19, 2^19)`, a grid of size `2^20` per coordinate.
pub const PIT_HALF_RANGE: i64 = 1 << 19;
/// Total degree of `F − G`, for the Schwartz–Zippel bound.
pub const RSB_DEGREE: u32 = 15;

const SAMPLE_RETRIES: usize = 64;
const REFLECTIONS_PER_LINE: usize = 3;

/// Second points `Q_1..Q_5` of five lines through the coordinate points of `P^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsbInstance {
    q: [Vec<Scalar>; 5],
}

impl RsbInstance {
    pub fn new<P: AsRef<[Scalar]>>(q: &[P]) -> Result<Self> {
        if q.len() != 5 || q.iter().any(|p| p.as_ref().len() != 5) {
            return Err(Error::Dimension("five points of P^4 expected".into()));
        }
        Ok(RsbInstance { q: std::array::from_fn(|i| q[i].as_ref().to_vec()) })
    }

    pub fn q(&self) -> &[Vec<Scalar>; 5] {
        &self.q
    }

    /// The five lines `P_i Q_i`.
    pub fn lines(&self) -> Result<[PLine; 5]> {
        let mut out = Vec::with_capacity(5);
        for (i, q) in self.q.iter().enumerate() {
            let l = PLine::new(PPoint::coordinate(4, i), PPoint::new(q.clone())?)
                .map_err(|_| Error::Degeneracy(format!("Q{} coincides with P{}", i + 1, i + 1)))?;
            out.push(l);
        }
        Ok(out.try_into().expect("five lines"))
    }

    /// Copy with `Q_i` (0-based) multiplied by `lambda`.
    pub fn scaled(&self, i: usize, lambda: &Scalar) -> RsbInstance {
        let mut out = self.clone();
        out.q[i] = out.q[i].iter().map(|x| x * lambda).collect();
        out
    }

    /// Relabels the lines cyclically: new line `i` is old line `i + shift`.
    /// The coordinates are permuted along so the `P_i` stay coordinate points.
    pub fn rotated(&self, shift: usize) -> RsbInstance {
        let q = std::array::from_fn(|i| {
            let src = &self.q[(i + shift) % 5];
            (0..5).map(|j| src[(j + shift) % 5].clone()).collect()
        });
        RsbInstance { q }
    }
}

pub fn rsb_f_matrix(inst: &RsbInstance) -> Mat {
    let mut rows = Vec::with_capacity(10);
    let mut tangent = Vec::with_capacity(5);
    for (k, q) in inst.q.iter().enumerate() {
        let (on, tan) = vertex_line_rows(k, q, &Scalar::zero());
        rows.push(on);
        tangent.push(tan);
    }
    rows.extend(tangent);
    Mat::from_rows(&rows).expect("10x10")
}

pub fn rsb_f(inst: &RsbInstance) -> Scalar {
    rsb_f_matrix(inst).det().expect("square")
}

fn span_rows(inst: &RsbInstance, i: usize) -> [Vec<Scalar>; 4] {
    let (prev, next) = ((i + 4) % 5, (i + 1) % 5);
    let e = |k: usize| PPoint::coordinate(4, k).coords().to_vec();
    [e(prev), inst.q[prev].clone(), e(next), inst.q[next].clone()]
}

/// Raw `R_i`; a degenerate index yields the zero vector.
fn rsb_points_unchecked(inst: &RsbInstance) -> [Vec<Scalar>; 5] {
    std::array::from_fn(|i| {
        let rows = span_rows(inst, i);
        let mat = Mat::from_rows(&rows).expect("4x5");
        let h: Vec<Scalar> = (0..5)
            .map(|j| {
                let cols: Vec<usize> = (0..5).filter(|&c| c != j).collect();
                let m = mat.select_columns(&cols).det().expect("4x4");
                if j % 2 == 0 { m } else { -m }
            })
            .collect();
        let (hq, hp) = (crate::scalar::dot(&h, &inst.q[i]), h[i].clone());
        (0..5)
            .map(|j| {
                let pj = if j == i { hq.clone() } else { Scalar::zero() };
                pj - &hp * &inst.q[i][j]
            })
            .collect()
    })
}

/// Raw coordinates of `R_1..R_5`, cubic in the coordinates of the `Q_i`.
pub fn rsb_points_raw(inst: &RsbInstance) -> Result<[Vec<Scalar>; 5]> {
    let mut out: [Vec<Scalar>; 5] = Default::default();
    for i in 0..5 {
        let rows = span_rows(inst, i);
        let h = span_hyperplane_raw(&rows).map_err(|_| {
            Error::Degeneracy(format!("lines L{} and L{} do not span a hyperplane", (i + 4) % 5 + 1, (i + 1) % 5 + 1))
        })?;
        let e = PPoint::coordinate(4, i);
        out[i] = line_hyperplane_meet_raw(e.coords(), &inst.q[i], &h)
            .map_err(|_| Error::Containment(format!("L{} lies in the span of its neighbours", i + 1)))?;
    }
    Ok(out)
}

pub fn rsb_points(inst: &RsbInstance) -> Result<[PPoint; 5]> {
    let raw = rsb_points_raw(inst)?;
    Ok(raw.map(|r| PPoint::new(r).expect("nonzero")))
}

/// Determinant of the five raw `R_i` rows.
pub fn rsb_g(inst: &RsbInstance) -> Result<Scalar> {
    Mat::from_rows(&rsb_points_raw(inst)?)?.det()
}

/// `G` evaluated as a polynomial: degenerate `R_i` contribute zero rows.
fn rsb_g_unchecked(inst: &RsbInstance) -> Scalar {
    Mat::from_rows(&rsb_points_unchecked(inst)).and_then(|m| m.det()).expect("5x5")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RsbVerdict {
    pub quadric_exists: bool,
    pub rsb_type: bool,
    pub f: Scalar,
    pub g: Scalar,
    /// Rank of the 5×5 matrix of the `R_i`.
    pub r_rank: usize,
    pub normalized: RsbInstance,
}

impl RsbVerdict {
    pub fn agree(&self) -> bool {
        self.quadric_exists == self.rsb_type
    }
}

/// Maps the first point of each line to a coordinate point.
///
/// The frame is completed by `P_1 + ... + P_5` (sent to `[1:...:1]`), with
/// `P_i` the first stored point of line `i`. Returns the normalized `Q_i` as
/// primitive integer vectors.
pub fn rsb_normalize(lines: &[PLine; 5]) -> Result<RsbInstance> {
    if lines.iter().any(|l| l.dim() != 4) {
        return Err(Error::Dimension("lines must lie in P^4".into()));
    }
    for i in 0..5 {
        for j in i + 1..5 {
            if rank_of(&[lines[i].a(), lines[i].b(), lines[j].a(), lines[j].b()]) < 4 {
                return Err(Error::Hypothesis(format!("lines {} and {} meet", i + 1, j + 1)));
            }
        }
    }
    let base: Vec<&[Scalar]> = lines.iter().map(|l| l.a().coords()).collect();
    let sum: Vec<Scalar> = (0..5).map(|j| base.iter().fold(Scalar::zero(), |acc, p| acc + &p[j])).collect();
    let mut frame = base.clone();
    frame.push(&sum);
    let m = frame_map(&frame).map_err(|_| Error::Hypothesis("the base points P_i are dependent".into()))?;
    let q = lines
        .iter()
        .map(|l| Ok(PPoint::new(m.mul_vec(l.b().coords())?)?.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    RsbInstance::new(&q)
}

/// Decides whether five lines lie on a quadric, by both determinants.
pub fn rsb_check(lines: &[PLine; 5]) -> Result<RsbVerdict> {
    let inst = rsb_normalize(lines)?;
    let r = rsb_points_raw(&inst).map_err(|e| Error::Hypothesis(e.to_string()))?;
    let f = rsb_f(&inst);
    let g = Mat::from_rows(&r)?.det()?;
    Ok(RsbVerdict {
        quadric_exists: f.is_zero(),
        rsb_type: g.is_zero(),
        f,
        g,
        r_rank: rank_of(&r),
        normalized: inst,
    })
}

/// Symbolic coordinates `q_{i,j}` as variable `5 i + j`.
fn symbolic_q() -> Vec<Vec<MPoly>> {
    (0..5).map(|i| (0..5).map(|j| MPoly::var(5 * i + j, 25)).collect()).collect()
}

pub fn rsb_f_poly(ceiling: usize) -> Result<MPoly> {
    let q = symbolic_q();
    let zero = MPoly::zero(25);
    let mut rows = Vec::with_capacity(10);
    let mut tangent = Vec::with_capacity(5);
    for (k, qk) in q.iter().enumerate() {
        let (on, tan) = vertex_line_rows(k, qk, &zero);
        rows.push(on);
        tangent.push(tan);
    }
    rows.extend(tangent);
    poly_det_with_ceiling(&PolyMat::from_rows(25, rows)?, ceiling)
}

pub fn rsb_g_poly(ceiling: usize) -> Result<MPoly> {
    let q = symbolic_q();
    let e = |k: usize| -> Vec<MPoly> {
        (0..5).map(|j| if j == k { MPoly::one(25) } else { MPoly::zero(25) }).collect()
    };
    let mut r_rows = Vec::with_capacity(5);
    for i in 0..5 {
        let (prev, next) = ((i + 4) % 5, (i + 1) % 5);
        let span = [e(prev), q[prev].clone(), e(next), q[next].clone()];
        let h = (0..5)
            .map(|j| {
                let minor: Vec<Vec<MPoly>> = span
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect())
                    .collect();
                let m = poly_det_with_ceiling(&PolyMat::from_rows(25, minor)?, ceiling)?;
                Ok(if j % 2 == 0 { m } else { -m })
            })
            .collect::<Result<Vec<_>>>()?;
        let hq = h.iter().zip(&q[i]).fold(MPoly::zero(25), |acc, (a, b)| &acc + &(a * b));
        let row = (0..5)
            .map(|j| {
                let t = &h[i] * &q[i][j];
                if j == i { &hq - &t } else { -t }
            })
            .collect();
        r_rows.push(row);
    }
    poly_det_with_ceiling(&PolyMat::from_rows(25, r_rows)?, ceiling)
}

/// Checks `F = G`, symbolically or by random evaluation.
///
/// PIT draws each of the 25 coordinates uniformly from `[-2^19, 2^19)` with
/// the seeded generator; a nonzero `F − G` of degree 15 survives one trial
/// with probability at most `15 / 2^20`, so the reported bound is
/// `(15 / 2^20)^trials`.
pub fn rsb_identity(mode: ProofMode, trials: usize, seed: u64, ceiling: usize) -> Result<IdentityProof> {
    match mode {
        ProofMode::Symbolic => {
            let f = rsb_f_poly(ceiling)?;
            let g = rsb_g_poly(ceiling)?;
            Ok(IdentityProof::symbolic(f, g, &point_blocks(5, 5)))
        }
        ProofMode::Pit => {
            if trials == 0 {
                return Err(Error::InvalidArgument("PIT needs at least one trial".into()));
            }
            let mut rng = Lcg64::new(seed);
            let mut proved = true;
            for _ in 0..trials {
                let q: Vec<Vec<Scalar>> = (0..5)
                    .map(|_| (0..5).map(|_| int(rng.range(-PIT_HALF_RANGE, PIT_HALF_RANGE - 1))).collect())
                    .collect();
                let inst = RsbInstance::new(&q)?;
                if rsb_f(&inst) != rsb_g_unchecked(&inst) {
                    proved = false;
                }
            }
            let per_trial = Scalar::new(BigInt::from(RSB_DEGREE), BigInt::from(2 * PIT_HALF_RANGE));
            let bound = (0..trials).fold(Scalar::one(), |acc, _| acc * &per_trial);
            Ok(IdentityProof {
                mode,
                lhs: None,
                rhs: None,
                difference: None,
                proved,
                stats: ProofStats { trials, failure_bound: Some(bound), ..ProofStats::default() },
            })
        }
    }
}

/// `x0 x1 + x2 x3 + x4²`, the quadric used for sampling.
pub fn sampling_quadric(x: &[Scalar]) -> Scalar {
    &x[0] * &x[1] + &x[2] * &x[3] + &x[4] * &x[4]
}

/// `B(x, y) = Q(x + y) − Q(x) − Q(y)` for [`sampling_quadric`].
fn polar(x: &[Scalar], y: &[Scalar]) -> Scalar {
    &x[0] * &y[1] + &x[1] * &y[0] + &x[2] * &y[3] + &x[3] * &y[2] + int(2) * &x[4] * &y[4]
}

/// Reflection in the hyperplane orthogonal to the anisotropic vector `w`:
/// `x − (B(x, w) / Q(w)) w`. Preserves [`sampling_quadric`].
pub fn reflect(x: &[Scalar], w: &[Scalar]) -> Result<Vec<Scalar>> {
    let qw = sampling_quadric(w);
    if qw.is_zero() {
        return Err(Error::InvalidArgument("reflection vector is isotropic".into()));
    }
    let c = polar(x, w) / qw;
    Ok(x.iter().zip(w).map(|(a, b)| a - &c * b).collect())
}

/// Five lines on `x0 x1 + x2 x3 + x4² = 0` in general position.
///
/// Each line is the image of one of the isotropic planes `span(e0, e2)`,
/// `span(e0, e3)`, `span(e1, e2)`, `span(e1, e3)` under a product of three
/// reflections in random anisotropic integer vectors with entries in `[-3, 3]`.
/// Configurations with meeting lines or a degenerate RSB point are redrawn.
pub fn rsb_sample_on_quadric(seed: u64) -> Result<[PLine; 5]> {
    const BASE: [(usize, usize); 4] = [(0, 2), (0, 3), (1, 2), (1, 3)];
    let mut rng = Lcg64::new(seed);
    for _ in 0..SAMPLE_RETRIES {
        let mut lines = Vec::with_capacity(5);
        for _ in 0..5 {
            let (i, j) = BASE[rng.below(4) as usize];
            let mut a = PPoint::coordinate(4, i).coords().to_vec();
            let mut b = PPoint::coordinate(4, j).coords().to_vec();
            for _ in 0..REFLECTIONS_PER_LINE {
                let w = loop {
                    let w: Vec<Scalar> = (0..5).map(|_| int(rng.range(-3, 3))).collect();
                    if !sampling_quadric(&w).is_zero() {
                        break w;
                    }
                };
                a = reflect(&a, &w)?;
                b = reflect(&b, &w)?;
            }
            lines.push(PLine::new(PPoint::new(a)?, PPoint::new(b)?)?);
        }
        let lines: [PLine; 5] = lines.try_into().expect("five lines");
        if rsb_check(&lines).is_ok() {
            return Ok(lines);
        }
    }
    Err(Error::Generation(format!("no general five-line configuration for seed {seed}")))
}

/// Five lines through pairs of random integer points with entries in `[-5, 5]`.
pub fn random_lines(seed: u64) -> [PLine; 5] {
    let mut rng = Lcg64::new(seed);
    let point = |rng: &mut Lcg64| loop {
        let v: Vec<Scalar> = (0..5).map(|_| int(rng.range(-5, 5))).collect();
        if let Ok(p) = PPoint::new(v) {
            break p;
        }
    };
    let lines: Vec<PLine> = (0..5)
        .map(|_| loop {
            let (a, b) = (point(&mut rng), point(&mut rng));
            if let Ok(l) = PLine::new(a, b) {
                break l;
            }
        })
        .collect();
    lines.try_into().expect("five lines")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ints;

    fn sample_instance() -> RsbInstance {
        RsbInstance::new(&[
            ints(&[2, 1, -3, 4, 5]),
            ints(&[1, 7, 2, -1, 3]),
            ints(&[-2, 3, 1, 5, 1]),
            ints(&[4, -1, 2, 3, 6]),
            ints(&[1, 2, 3, -4, 2]),
        ])
        .unwrap()
    }

    #[test]
    fn on_quadric_row_of_ones() {
        let mut q = sample_instance().q().to_vec();
        q[0] = ints(&[1, 1, 1, 1, 1]);
        let m = rsb_f_matrix(&RsbInstance::new(&q).unwrap());
        assert_eq!(m.row(0), ints(&[1; 10]).as_slice());
    }

    #[test]
    fn tangency_row_at_e0() {
        let inst = sample_instance();
        let m = rsb_f_matrix(&inst);
        // monomials 01 02 03 04 12 13 14 23 24 34
        let q = &inst.q()[0];
        let mut expected = vec![Scalar::zero(); 10];
        expected[..4].clone_from_slice(&q[1..5]);
        assert_eq!(m.row(5), expected.as_slice());
    }

    #[test]
    fn f_equals_g_on_sample() {
        let inst = sample_instance();
        assert_eq!(rsb_f(&inst), rsb_g(&inst).unwrap());
        assert_eq!(rsb_f_matrix(&inst).rank(), 10);
    }

    #[test]
    fn r_points_are_incident() {
        let inst = sample_instance();
        let r = rsb_points_raw(&inst).unwrap();
        for i in 0..5 {
            let rows = span_rows(&inst, i);
            let h = span_hyperplane_raw(&rows).unwrap();
            assert!(crate::scalar::dot(&h, &r[i]).is_zero());
            let line = [PPoint::coordinate(4, i).coords().to_vec(), inst.q()[i].clone(), r[i].clone()];
            assert_eq!(rank_of(&line), 2);
        }
    }

    #[test]
    fn containment_is_reported() {
        // L1 inside span(L5, L2) = span(e4, Q5, e1, Q2): Q5 = e0 + e1, Q1 = Q2 + e4.
        let mut q = sample_instance().q().to_vec();
        q[4] = ints(&[1, 1, 0, 0, 0]);
        q[0] = q[1].iter().enumerate().map(|(j, x)| if j == 4 { x + int(1) } else { x.clone() }).collect();
        let inst = RsbInstance::new(&q).unwrap();
        assert!(matches!(rsb_points_raw(&inst), Err(Error::Containment(msg)) if msg.contains("L1")));
    }

    #[test]
    fn rotation_preserves_values() {
        let inst = sample_instance();
        let f = rsb_f(&inst);
        for s in 1..5 {
            let r = inst.rotated(s);
            assert_eq!(rsb_f(&r).is_zero(), f.is_zero());
            assert_eq!(rsb_g(&r).unwrap().is_zero(), f.is_zero());
        }
    }

    #[test]
    fn reflections_preserve_quadric() {
        let x = ints(&[3, -1, 4, 1, 5]);
        let w = ints(&[1, 2, 0, 1, 1]);
        assert_eq!(sampling_quadric(&reflect(&x, &w).unwrap()), sampling_quadric(&x));
        assert!(reflect(&x, &ints(&[1, 0, 0, 0, 0])).is_err());
    }

    #[test]
    fn sampled_lines_lie_on_quadric() {
        let lines = rsb_sample_on_quadric(3).unwrap();
        for l in &lines {
            for p in l.sample_points() {
                assert!(sampling_quadric(&p).is_zero());
            }
        }
        let v = rsb_check(&lines).unwrap();
        assert!(v.quadric_exists && v.rsb_type);
        assert!(v.r_rank <= 4);
    }

    #[test]
    fn pit_rejects_zero_trials() {
        assert!(rsb_identity(ProofMode::Pit, 0, 1, 10).is_err());
    }
}
