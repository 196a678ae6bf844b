//! Deciding whether `d+4` points of `P^d` lie on a rational normal curve.
//!
//! Two independent routes are computed:
//!
//! * **Normal form.** A projective map sends the first `d+2` points to the
//!   coordinate points and `[1:...:1]`; the last two become `a` and `b`.
//!   Membership is the vanishing of the `d-1` quartics
//!   `E_i(a, b)`, `i = 0..=d-2` (see [`rnc_equations`]).
//! * **Projections.** With `U` the first `d-1` points, each `p ∈ U` gives a
//!   projection from the span of `U \ {p}` to the plane; the images of `p`
//!   and of the five points outside `U` must lie on a conic.
//!
//! For points in general position the two routes vanish together.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::pascal::{pascal_f, PascalInstance};
use crate::poly::{MPoly, PolyMat};
use crate::projective::{frame_map, general_position, PPoint, Projection};
use crate::rng::Lcg64;
use crate::scalar::{int, Scalar};

const SAMPLE_RETRIES: usize = 64;
const PARAMETER_BOUND: i64 = 12;
const MATRIX_BOUND: i64 = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RncInstance {
    d: usize,
    points: Vec<Vec<Scalar>>,
}

impl RncInstance {
    pub fn new<P: AsRef<[Scalar]>>(d: usize, points: &[P]) -> Result<Self> {
        if d < 2 {
            return Err(Error::InvalidArgument(format!("rational normal curves need d >= 2, got {d}")));
        }
        if points.len() != d + 4 {
            return Err(Error::Dimension(format!("expected {} points in P^{d}, got {}", d + 4, points.len())));
        }
        for p in points {
            if p.as_ref().len() != d + 1 {
                return Err(Error::Dimension(format!("point with {} coordinates in P^{d}", p.as_ref().len())));
            }
            if p.as_ref().iter().all(Zero::is_zero) {
                return Err(Error::InvalidArgument("zero vector as a point".into()));
            }
        }
        Ok(RncInstance { d, points: points.iter().map(|p| p.as_ref().to_vec()).collect() })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Vec<Scalar>] {
        &self.points
    }

    /// Copy with `delta` added to one coordinate of one point.
    pub fn perturbed(&self, point: usize, coord: usize, delta: i64) -> RncInstance {
        let mut out = self.clone();
        out.points[point][coord] += int(delta);
        out
    }

    /// Copy with the points reordered: new point `k` is old point `order[k]`.
    pub fn permuted(&self, order: &[usize]) -> Result<RncInstance> {
        let pts: Vec<&Vec<Scalar>> = order.iter().map(|&i| &self.points[i]).collect();
        RncInstance::new(self.d, &pts)
    }

    pub fn require_general(&self) -> Result<()> {
        if general_position(&self.points)? {
            Ok(())
        } else {
            Err(Error::Hypothesis("points are not in general position".into()))
        }
    }
}

/// Coordinates `a`, `b` of the last two points after frame normalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RncNormalForm {
    d: usize,
    a: Vec<Scalar>,
    b: Vec<Scalar>,
}

impl RncNormalForm {
    pub fn new(d: usize, a: Vec<Scalar>, b: Vec<Scalar>) -> Result<Self> {
        if a.len() != d + 1 || b.len() != d + 1 {
            return Err(Error::Dimension(format!("normal form coordinates must have length {}", d + 1)));
        }
        Ok(RncNormalForm { d, a, b })
    }

    pub fn from_instance(inst: &RncInstance) -> Result<Self> {
        let d = inst.d;
        let m = frame_map(&inst.points[..d + 2])?;
        let image = |p: &Vec<Scalar>| -> Result<Vec<Scalar>> { Ok(PPoint::new(m.mul_vec(p)?)?.coords().to_vec()) };
        Ok(RncNormalForm { d, a: image(&inst.points[d + 2])?, b: image(&inst.points[d + 3])? })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn a(&self) -> &[Scalar] {
        &self.a
    }

    pub fn b(&self) -> &[Scalar] {
        &self.b
    }

    /// The six plane points of the `i`-th projection:
    /// `e_0, e_1, e_2, [1:1:1], [a_i:a_{d-1}:a_d], [b_i:b_{d-1}:b_d]`.
    fn plane_hexagon(&self, i: usize) -> PascalInstance {
        let d = self.d;
        let pick = |v: &[Scalar]| vec![v[i].clone(), v[d - 1].clone(), v[d].clone()];
        let e = |k: usize| PPoint::coordinate(2, k).coords().to_vec();
        let ones = vec![Scalar::one(); 3];
        PascalInstance::new(&[e(0), e(1), e(2), ones, pick(&self.a), pick(&self.b)]).expect("six plane points")
    }
}

/// `E_i = a_i a_d b_{d-1} b_d − a_{d-1} a_d b_i b_d − a_i a_{d-1} b_{d-1} b_d
///      + a_{d-1} a_d b_i b_{d-1} + a_i a_{d-1} b_i b_d − a_i a_d b_i b_{d-1}`
/// for `i = 0..=d-2`.
pub fn rnc_equations(nf: &RncNormalForm) -> Result<Vec<Scalar>> {
    let d = nf.d;
    if d < 3 {
        return Err(Error::InvalidArgument("the quartic equations need d >= 3; use the conic test for d = 2".into()));
    }
    let (a, b) = (&nf.a, &nf.b);
    let (am, ad, bm, bd) = (&a[d - 1], &a[d], &b[d - 1], &b[d]);
    Ok((0..=d - 2)
        .map(|i| {
            let (ai, bi) = (&a[i], &b[i]);
            ai * ad * bm * bd - am * ad * bi * bd - ai * am * bm * bd + am * ad * bi * bm + ai * am * bi * bd
                - ai * ad * bi * bm
        })
        .collect())
}

/// The equations `E_i` as polynomials in `(a_0..a_d, b_0..b_d)`.
pub fn rnc_equation_polys(d: usize) -> Result<Vec<MPoly>> {
    if d < 3 {
        return Err(Error::InvalidArgument("the quartic equations need d >= 3".into()));
    }
    let n = 2 * d + 2;
    let a = |i: usize| MPoly::var(i, n);
    let b = |i: usize| MPoly::var(d + 1 + i, n);
    let prod = |fs: [MPoly; 4]| fs.into_iter().reduce(|x, y| &x * &y).unwrap();
    Ok((0..=d - 2)
        .map(|i| {
            let t = [
                prod([a(i), a(d), b(d - 1), b(d)]),
                -prod([a(d - 1), a(d), b(i), b(d)]),
                -prod([a(i), a(d - 1), b(d - 1), b(d)]),
                prod([a(d - 1), a(d), b(i), b(d - 1)]),
                prod([a(i), a(d - 1), b(i), b(d)]),
                -prod([a(i), a(d), b(i), b(d - 1)]),
            ];
            t.into_iter().reduce(|x, y| &x + &y).unwrap()
        })
        .collect())
}

/// Collinearity determinant of the affine points
/// `(a_i a_{d-1}, b_i b_{d-1})`, `(a_i a_d, b_i b_d)`, `(a_{d-1} a_d, b_{d-1} b_d)`.
pub fn rnc_affine_collinearity(nf: &RncNormalForm, i: usize) -> Result<Scalar> {
    let d = nf.d;
    if d < 3 || i > d - 2 {
        return Err(Error::Index { index: i, bound: d.saturating_sub(1) });
    }
    let (a, b) = (&nf.a, &nf.b);
    let row = |j: usize, k: usize| vec![&a[j] * &a[k], &b[j] * &b[k], Scalar::one()];
    Mat::from_rows(&[row(i, d - 1), row(i, d), row(d - 1, d)])?.det()
}

/// Values that vanish iff the normal form is on a curve: the quartics for
/// `d >= 3`, the conic determinant of the frame hexagon for `d = 2`.
fn normal_form_values(nf: &RncNormalForm) -> Result<Vec<Scalar>> {
    if nf.d == 2 {
        return Ok(vec![pascal_f(&nf.plane_hexagon(0))]);
    }
    rnc_equations(nf)
}

/// Conic determinants of the `d-1` projected hexagons.
pub fn rnc_projection_values(inst: &RncInstance) -> Result<Vec<Scalar>> {
    let d = inst.d;
    let u = &inst.points[..d - 1];
    let rest = &inst.points[d - 1..];
    (0..d - 1)
        .map(|p| {
            let center: Vec<&Vec<Scalar>> = u.iter().enumerate().filter(|&(k, _)| k != p).map(|(_, c)| c).collect();
            let proj = Projection::new(&center, d)?;
            let mut six = vec![proj.apply_raw(&u[p])?];
            for q in rest {
                six.push(proj.apply_raw(q)?);
            }
            Ok(pascal_f(&PascalInstance::new(&six)?))
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RncVerdict {
    pub member: bool,
    /// Witness (i): normal-form equation values.
    pub equations: Vec<Scalar>,
    /// Witness (ii): conic determinants of the projected hexagons.
    pub projections: Vec<Scalar>,
    pub witnesses_agree: bool,
}

/// Membership test for points in general position.
pub fn rnc_check(inst: &RncInstance) -> Result<RncVerdict> {
    inst.require_general()?;
    let nf = RncNormalForm::from_instance(inst)?;
    let equations = normal_form_values(&nf)?;
    let projections = rnc_projection_values(inst)?;
    let zero_eq = equations.iter().all(Zero::is_zero);
    let zero_proj = projections.iter().all(Zero::is_zero);
    Ok(RncVerdict { member: zero_eq && zero_proj, equations, projections, witnesses_agree: zero_eq == zero_proj })
}

/// `d+4` seeded points on a rational normal curve in general position.
///
/// Distinct integer parameters `t_k ∈ [-12, 12]` are mapped through
/// `t ↦ [1:t:...:t^d]` and then through a random invertible integer matrix
/// with entries in `[-3, 3]`. Points are returned as primitive integer vectors.
pub fn rnc_sample(d: usize, seed: u64) -> Result<RncInstance> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("rational normal curves need d >= 2, got {d}")));
    }
    let mut rng = Lcg64::new(seed);
    for _ in 0..SAMPLE_RETRIES {
        let mut params: Vec<i64> = Vec::with_capacity(d + 4);
        while params.len() < d + 4 {
            let t = rng.range(-PARAMETER_BOUND, PARAMETER_BOUND);
            if !params.contains(&t) {
                params.push(t);
            }
        }
        let m = random_invertible(&mut rng, d + 1, MATRIX_BOUND);
        let points = params
            .iter()
            .map(|&t| {
                let curve: Vec<Scalar> = (0..=d as u32).map(|k| int(t.pow(k))).collect();
                Ok(PPoint::new(m.mul_vec(&curve)?)?.coords().to_vec())
            })
            .collect::<Result<Vec<_>>>()?;
        if general_position(&points)? {
            return RncInstance::new(d, &points);
        }
    }
    Err(Error::Generation(format!("no general-position sample for d = {d}, seed = {seed}")))
}

pub(crate) fn random_invertible(rng: &mut Lcg64, n: usize, bound: i64) -> Mat {
    loop {
        let data = (0..n * n).map(|_| int(rng.range(-bound, bound))).collect();
        let m = Mat::new(n, n, data).expect("square");
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

/// Rank of the Jacobian of the `d-1` equations with respect to
/// `(a_0..a_d, b_0..b_d)` at a solution.
pub fn rnc_jacobian_rank(nf: &RncNormalForm) -> Result<usize> {
    if rnc_equations(nf)?.iter().any(|v| !v.is_zero()) {
        return Err(Error::Hypothesis("the normal form does not satisfy the equations".into()));
    }
    jacobian_at(nf).map(|m| m.rank())
}

/// The `(d-1) × (2d+2)` Jacobian matrix evaluated at `(a, b)`.
pub fn jacobian_at(nf: &RncNormalForm) -> Result<Mat> {
    let polys = rnc_equation_polys(nf.d)?;
    let n = 2 * nf.d + 2;
    let point: Vec<Scalar> = nf.a.iter().chain(&nf.b).cloned().collect();
    let rows = polys
        .iter()
        .map(|p| (0..n).map(|v| p.derivative(v)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    PolyMat::from_rows(n, rows)?.eval(&point)
}
