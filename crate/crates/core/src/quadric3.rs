//! Quadric surfaces in `P^3` through points, lines and sampled curves.
//!
//! A quadric is a coefficient vector over the ten monomials of
//! [`quadric_monomials`] (squares first, then `z_i z_j` for `i < j`).
//! Every constraint expands to point conditions, one linear row each.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::identity::{point_blocks, IdentityProof};
use crate::matrix::Mat;
use crate::poly::{poly_det, MPoly, PolyMat};
use crate::projective::{
    cross, frame_map, general_position, quadric_monomials, rank_of, transversal_through_point, PLine, PPoint,
    Projection,
};
use crate::scalar::{dot, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QuadricConstraint {
    Point(PPoint),
    /// Expands to the three points `a`, `b`, `a + b` of the line.
    Line(PLine),
    /// Explicit sample points of a curve (5 for a conic, 7 for a twisted cubic).
    CurvePoints(Vec<PPoint>),
}

impl QuadricConstraint {
    pub fn sample_points(&self) -> Result<Vec<Vec<Scalar>>> {
        let pts: Vec<Vec<Scalar>> = match self {
            QuadricConstraint::Point(p) => vec![p.coords().to_vec()],
            QuadricConstraint::Line(l) => l.sample_points().to_vec(),
            QuadricConstraint::CurvePoints(ps) => {
                if ps.is_empty() {
                    return Err(Error::InvalidArgument("curve constraint without points".into()));
                }
                ps.iter().map(|p| p.coords().to_vec()).collect()
            }
        };
        if pts.iter().any(|p| p.len() != 4) {
            return Err(Error::Dimension("quadric constraints must live in P^3".into()));
        }
        Ok(pts)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadricForm {
    coeffs: Vec<Scalar>,
}

impl QuadricForm {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        if coeffs.len() != 10 {
            return Err(Error::Dimension(format!("a quadric in P^3 has 10 coefficients, got {}", coeffs.len())));
        }
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("zero quadric".into()));
        }
        Ok(QuadricForm { coeffs })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn eval<P: AsRef<[Scalar]>>(&self, p: &P) -> Scalar {
        dot(&self.coeffs, &quadric_monomials(p))
    }
}

/// One row per expanded point condition, over the ten quadric coefficients.
pub fn quadric_system(constraints: &[QuadricConstraint]) -> Result<Mat> {
    let mut rows = Vec::new();
    for c in constraints {
        for p in c.sample_points()? {
            rows.push(quadric_monomials(&p));
        }
    }
    if rows.is_empty() {
        return Ok(Mat::zeros(0, 10));
    }
    Mat::from_rows(&rows)
}

/// Whether a quadric satisfies all constraints; the quadric is returned
/// when it is unique.
pub fn exists_quadric(constraints: &[QuadricConstraint]) -> Result<(bool, Option<QuadricForm>)> {
    let kernel = quadric_system(constraints)?.nullspace();
    let unique = match kernel.as_slice() {
        [only] => Some(QuadricForm::new(only.clone())?),
        _ => None,
    };
    Ok((!kernel.is_empty(), unique))
}

/// Determinant of the 10×10 matrix of quadratic monomials of ten points.
pub fn ten_points_det<P: AsRef<[Scalar]>>(points: &[P]) -> Result<Scalar> {
    if points.len() != 10 || points.iter().any(|p| p.as_ref().len() != 4) {
        return Err(Error::Dimension("ten points of P^3 expected".into()));
    }
    let rows: Vec<Vec<Scalar>> = points.iter().map(quadric_monomials).collect();
    Mat::from_rows(&rows)?.det()
}

/// Conditions that a quadric through the coordinate points of `P^n`
/// (so with no square terms) contains the line from `e_k` to `q`.
///
/// Returns the row for `q` on the quadric and the row for the tangent
/// hyperplane at `e_k` passing through `q`, both over the monomials
/// `z_i z_j`, `i < j`, in lexicographic order.
pub(crate) fn vertex_line_rows<T>(k: usize, q: &[T], zero: &T) -> (Vec<T>, Vec<T>)
where
    T: Clone,
    for<'a> &'a T: std::ops::Mul<&'a T, Output = T>,
{
    let n = q.len();
    let mut on = Vec::new();
    let mut tangent = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            on.push(&q[i] * &q[j]);
            tangent.push(if i == k {
                q[j].clone()
            } else if j == k {
                q[i].clone()
            } else {
                zero.clone()
            });
        }
    }
    (on, tangent)
}

fn check_frame_points<P: AsRef<[Scalar]>>(r: &[P]) -> Result<()> {
    if r.len() != 3 || r.iter().any(|p| p.as_ref().len() != 4) {
        return Err(Error::Dimension("three points of P^3 expected".into()));
    }
    Ok(())
}

/// The 6×6 matrix for a point and three lines in the frame `P = e_0`,
/// `L_i` through `e_i` and `R_i`: three on-quadric rows for the `R_i`, then
/// three tangency rows.
pub fn p3l_matrix<P: AsRef<[Scalar]>>(r: &[P]) -> Result<Mat> {
    check_frame_points(r)?;
    let mut on = Vec::new();
    let mut tangent = Vec::new();
    for (i, p) in r.iter().enumerate() {
        let (a, b) = vertex_line_rows(i + 1, p.as_ref(), &Scalar::zero());
        on.push(a);
        tangent.push(b);
    }
    on.extend(tangent);
    Mat::from_rows(&on)
}

pub fn p3l_det<P: AsRef<[Scalar]>>(r: &[P]) -> Result<Scalar> {
    p3l_matrix(r)?.det()
}

/// `a21 a30 − a20 a31`, `a12 a30 − a10 a32`, `a10 a23 − a13 a20`: each
/// vanishes when two of the lines meet.
pub fn p3l_degenerate_factors<P: AsRef<[Scalar]>>(r: &[P]) -> Result<[Scalar; 3]> {
    check_frame_points(r)?;
    let a = |i: usize, j: usize| &r[i - 1].as_ref()[j];
    Ok([
        a(2, 1) * a(3, 0) - a(2, 0) * a(3, 1),
        a(1, 2) * a(3, 0) - a(1, 0) * a(3, 2),
        a(1, 0) * a(2, 3) - a(1, 3) * a(2, 0),
    ])
}

/// `a12 a23 a31 − a13 a21 a32`, vanishing iff the projected lines concur.
pub fn p3l_concurrency_factor<P: AsRef<[Scalar]>>(r: &[P]) -> Result<Scalar> {
    check_frame_points(r)?;
    let a = |i: usize, j: usize| &r[i - 1].as_ref()[j];
    Ok(a(1, 2) * a(2, 3) * a(3, 1) - a(1, 3) * a(2, 1) * a(3, 2))
}

/// Proves that the 6×6 determinant equals the product of the three
/// degenerate factors and the concurrency factor, in the twelve variables
/// `a_{ij}` (`i = 1..3` point-major, `j = 0..3`).
pub fn p3l_factorization_identity() -> Result<IdentityProof> {
    let n = 12;
    let a = |i: usize, j: usize| MPoly::var(4 * (i - 1) + j, n);
    let pts: Vec<Vec<MPoly>> = (1..=3).map(|i| (0..4).map(|j| a(i, j)).collect()).collect();
    let mut on = Vec::new();
    let mut tangent = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let (x, y) = vertex_line_rows(i + 1, p, &MPoly::zero(n));
        on.push(x);
        tangent.push(y);
    }
    on.extend(tangent);
    let det = poly_det(&PolyMat::from_rows(n, on)?)?;

    let f1 = &(&a(2, 1) * &a(3, 0)) - &(&a(2, 0) * &a(3, 1));
    let f2 = &(&a(1, 2) * &a(3, 0)) - &(&a(1, 0) * &a(3, 2));
    let f3 = &(-&(&a(1, 3) * &a(2, 0))) + &(&a(1, 0) * &a(2, 3));
    let f4 = &(&(&a(1, 2) * &a(2, 3)) * &a(3, 1)) - &(&(&a(1, 3) * &a(2, 1)) * &a(3, 2));
    let product = &(&(&f1 * &f2) * &f3) * &f4;
    Ok(IdentityProof::symbolic(det, product, &point_blocks(3, 4)))
}

fn require_off_lines(p: &PPoint, lines: &[PLine]) -> Result<()> {
    if p.dim() != 3 || lines.iter().any(|l| l.dim() != 3) {
        return Err(Error::Dimension("point and lines must lie in P^3".into()));
    }
    if let Some(i) = lines.iter().position(|l| l.contains(p)) {
        return Err(Error::Hypothesis(format!("the point lies on line {}", i + 1)));
    }
    Ok(())
}

/// Whether projecting from `p` sends the three lines to concurrent lines of the plane.
pub fn p3l_concurrent(p: &PPoint, lines: &[PLine; 3]) -> Result<bool> {
    require_off_lines(p, lines)?;
    let proj = Projection::new(&[p], 3)?;
    let images = lines
        .iter()
        .map(|l| Ok(cross(&proj.apply_raw(l.a())?, &proj.apply_raw(l.b())?).to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok(Mat::from_rows(&images)?.det()?.is_zero())
}

/// Moves `p` to `e_0` and the first point of each line to `e_1, e_2, e_3`,
/// returning the images `R_i` of the second points.
///
/// The fifth frame point is the sum of the four base points.
pub fn p3l_frame_normalize(p: &PPoint, lines: &[PLine; 3]) -> Result<[Vec<Scalar>; 3]> {
    require_off_lines(p, lines)?;
    let base = [p.coords(), lines[0].a().coords(), lines[1].a().coords(), lines[2].a().coords()];
    let sum: Vec<Scalar> = (0..4).map(|j| base.iter().fold(Scalar::zero(), |acc, v| acc + &v[j])).collect();
    let mut frame: Vec<&[Scalar]> = base.to_vec();
    frame.push(&sum);
    let m = frame_map(&frame).map_err(|_| Error::Hypothesis("point and line base points are not a frame".into()))?;
    let r = lines
        .iter()
        .map(|l| Ok(PPoint::new(m.mul_vec(l.b().coords())?)?.coords().to_vec()))
        .collect::<Result<Vec<_>>>()?;
    Ok([r[0].clone(), r[1].clone(), r[2].clone()])
}

/// Replaces four points and two skew lines by the first point and the
/// transversals through the other three.
///
/// The transversals must be pairwise skew; two of them meet exactly when
/// the corresponding points and a point of `l1` or `l2` are coplanar with
/// it, and then the reduced system no longer determines the quadric.
pub fn reduce_4p2l(points: &[PPoint; 4], l1: &PLine, l2: &PLine) -> Result<(PPoint, [PLine; 3])> {
    if points.iter().any(|p| p.dim() != 3) {
        return Err(Error::Dimension("points must lie in P^3".into()));
    }
    if !general_position(points)? {
        return Err(Error::Hypothesis("the four points are not in general position".into()));
    }
    if rank_of(&[l1.a(), l1.b(), l2.a(), l2.b()]) < 4 {
        return Err(Error::Hypothesis("the two lines are not skew".into()));
    }
    let t = |i: usize| transversal_through_point(&points[i], l1, l2);
    let ts = [t(1)?, t(2)?, t(3)?];
    for i in 0..3 {
        for j in i + 1..3 {
            if rank_of(&[ts[i].a(), ts[i].b(), ts[j].a(), ts[j].b()]) < 4 {
                return Err(Error::Degeneracy(format!("the transversals through points {} and {} meet", i + 2, j + 2)));
            }
        }
    }
    Ok((points[0].clone(), ts))
}
