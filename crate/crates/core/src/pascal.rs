//! Pascal's hexagon theorem as a polynomial identity.
//!
//! `F` is the determinant of the six Veronese rows `(x², y², z², xy, xz, yz)`
//! of the points; it vanishes iff they lie on a conic. The sides are
//! `L_i = p_i × p_{i+1}` (indices mod 6) and the derived points are
//! `q_j = L_j × L_{j+3}` for `j = 1, 2, 3`; `G` is the determinant of the
//! three `q_j` rows. With these exact representatives `F = G` holds as
//! polynomials in the 18 coordinates.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::{point_blocks, IdentityProof};
use crate::matrix::Mat;
use crate::poly::{poly_det_with_ceiling, variables, MPoly, PolyMat, DEFAULT_TERM_CEILING};
use crate::projective::{cross, rank_of, veronese2, PPoint};
use crate::scalar::Scalar;

/// Six points of the plane, kept with the representatives they were given.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PascalInstance {
    points: [Vec<Scalar>; 6],
}

impl PascalInstance {
    pub fn new<P: AsRef<[Scalar]>>(points: &[P]) -> Result<Self> {
        if points.len() != 6 {
            return Err(Error::Dimension(format!("a hexagon has 6 vertices, got {}", points.len())));
        }
        for p in points {
            if p.as_ref().len() != 3 {
                return Err(Error::Dimension("hexagon vertices must lie in P^2".into()));
            }
            if p.as_ref().iter().all(Zero::is_zero) {
                return Err(Error::InvalidArgument("zero vector as a vertex".into()));
            }
        }
        Ok(PascalInstance { points: std::array::from_fn(|i| points[i].as_ref().to_vec()) })
    }

    pub fn points(&self) -> &[Vec<Scalar>; 6] {
        &self.points
    }

    /// Index triples (0-based) of collinear vertices.
    pub fn collinear_triples(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    if rank_of(&[&self.points[i], &self.points[j], &self.points[k]]) < 3 {
                        out.push([i, j, k]);
                    }
                }
            }
        }
        out
    }
}

/// Determinant of the 6×6 matrix of Veronese rows.
pub fn pascal_f(inst: &PascalInstance) -> Scalar {
    let rows: Vec<Vec<Scalar>> = inst.points.iter().map(|p| veronese2(p).expect("P^2 point")).collect();
    Mat::from_rows(&rows).and_then(|m| m.det()).expect("6x6 determinant")
}

/// Raw coordinates of `q_1, q_2, q_3`, each quartic in the input coordinates.
pub fn pascal_derived_raw(inst: &PascalInstance) -> Result<[Vec<Scalar>; 3]> {
    let p = &inst.points;
    let sides: Vec<[Scalar; 3]> = (0..6).map(|i| cross(&p[i], &p[(i + 1) % 6])).collect();
    let mut out: [Vec<Scalar>; 3] = Default::default();
    for j in 0..3 {
        let q = cross(&sides[j], &sides[j + 3]);
        if q.iter().all(Zero::is_zero) {
            return Err(Error::Degeneracy(format!(
                "opposite sides L{} and L{} do not meet in a point",
                j + 1,
                j + 4
            )));
        }
        out[j] = q.to_vec();
    }
    Ok(out)
}

pub fn pascal_derived(inst: &PascalInstance) -> Result<[PPoint; 3]> {
    let raw = pascal_derived_raw(inst)?;
    let [a, b, c] = raw.map(|q| PPoint::new(q).expect("nonzero derived point"));
    Ok([a, b, c])
}

/// Determinant of the three raw derived points.
pub fn pascal_g(inst: &PascalInstance) -> Result<Scalar> {
    let q = pascal_derived_raw(inst)?;
    Mat::from_rows(&q)?.det()
}

/// Symbolic coordinates `(x_1, y_1, z_1, ..., x_6, y_6, z_6)`.
fn symbolic_points() -> Vec<[MPoly; 3]> {
    let v = variables(18);
    (0..6).map(|i| [v[3 * i].clone(), v[3 * i + 1].clone(), v[3 * i + 2].clone()]).collect()
}

fn poly_cross(a: &[MPoly; 3], b: &[MPoly; 3]) -> [MPoly; 3] {
    [
        &(&a[1] * &b[2]) - &(&a[2] * &b[1]),
        &(&a[2] * &b[0]) - &(&a[0] * &b[2]),
        &(&a[0] * &b[1]) - &(&a[1] * &b[0]),
    ]
}

/// `F` as a polynomial in the 18 coordinates.
pub fn pascal_f_poly() -> Result<MPoly> {
    let pts = symbolic_points();
    let rows = pts
        .iter()
        .map(|[x, y, z]| vec![x * x, y * y, z * z, x * y, x * z, y * z])
        .collect();
    poly_det_with_ceiling(&PolyMat::from_rows(18, rows)?, DEFAULT_TERM_CEILING)
}

/// `G` as a polynomial in the 18 coordinates.
pub fn pascal_g_poly() -> Result<MPoly> {
    let pts = symbolic_points();
    let sides: Vec<[MPoly; 3]> = (0..6).map(|i| poly_cross(&pts[i], &pts[(i + 1) % 6])).collect();
    let rows = (0..3).map(|j| poly_cross(&sides[j], &sides[j + 3]).to_vec()).collect();
    poly_det_with_ceiling(&PolyMat::from_rows(18, rows)?, DEFAULT_TERM_CEILING)
}

/// Expands `F` and `G` and checks that they coincide.
pub fn pascal_identity() -> Result<IdentityProof> {
    Ok(IdentityProof::symbolic(pascal_f_poly()?, pascal_g_poly()?, &point_blocks(6, 3)))
}
