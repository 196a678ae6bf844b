//! Projective points, lines and hyperplanes over the rationals.
//!
//! [`PPoint`] and [`Hyperplane`] store a canonical representative: coprime
//! integer coordinates with the first nonzero entry positive. Routines
//! whose output depends on the chosen representative (determinants of
//! coordinate rows) take raw coordinate slices instead, through
//! `AsRef<[Scalar]>`.

use num_traits::{One, Zero};
use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::{dot, primitive, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PPoint {
    coords: Vec<Scalar>,
}

impl PPoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidArgument("a projective point needs at least one coordinate".into()));
        }
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::InvalidArgument("the zero vector is not a projective point".into()));
        }
        Ok(PPoint { coords: primitive(&coords) })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self> {
        PPoint::new(crate::scalar::ints(coords))
    }

    /// The coordinate point `e_i` of `P^n`.
    pub fn coordinate(n: usize, i: usize) -> Self {
        let mut c = vec![Scalar::zero(); n + 1];
        c[i] = Scalar::one();
        PPoint { coords: c }
    }

    /// `[1:1:...:1]` in `P^n`.
    pub fn ones(n: usize) -> Self {
        PPoint { coords: vec![Scalar::one(); n + 1] }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Dimension `n` of the ambient `P^n`.
    pub fn dim(&self) -> usize {
        self.coords.len() - 1
    }

    /// Image under a linear map given by a square matrix.
    pub fn transform(&self, m: &Mat) -> Result<PPoint> {
        let v = m.mul_vec(&self.coords)?;
        PPoint::new(v).map_err(|_| Error::Rank("linear map sends a point to zero".into()))
    }
}

impl AsRef<[Scalar]> for PPoint {
    fn as_ref(&self) -> &[Scalar] {
        &self.coords
    }
}

impl fmt::Debug for PPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", c.join(":"))
    }
}

/// A line, stored as two distinct points on it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PLine {
    a: PPoint,
    b: PPoint,
}

impl PLine {
    pub fn new(a: PPoint, b: PPoint) -> Result<Self> {
        if a.dim() != b.dim() {
            return Err(Error::Dimension(format!("line through points of P^{} and P^{}", a.dim(), b.dim())));
        }
        if rank_of(&[&a, &b]) < 2 {
            return Err(Error::Degeneracy("a line needs two distinct points".into()));
        }
        Ok(PLine { a, b })
    }

    pub fn a(&self) -> &PPoint {
        &self.a
    }

    pub fn b(&self) -> &PPoint {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn contains<P: AsRef<[Scalar]>>(&self, p: &P) -> bool {
        rank_of(&[self.a.coords(), self.b.coords(), p.as_ref()]) == 2
    }

    /// Three points whose vanishing forces a quadric to contain the line:
    /// `a`, `b` and `a + b`.
    pub fn sample_points(&self) -> [Vec<Scalar>; 3] {
        let sum = self.a.coords.iter().zip(&self.b.coords).map(|(x, y)| x + y).collect();
        [self.a.coords.clone(), self.b.coords.clone(), sum]
    }

    /// Plücker coordinates `p_ij = a_i b_j - a_j b_i` for `i < j`, in
    /// lexicographic order of `(i, j)`.
    pub fn plucker(&self) -> Vec<Scalar> {
        let (a, b) = (&self.a.coords, &self.b.coords);
        let n = a.len();
        let mut out = Vec::with_capacity(n * (n - 1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                out.push(&a[i] * &b[j] - &a[j] * &b[i]);
            }
        }
        out
    }

    pub fn transform(&self, m: &Mat) -> Result<PLine> {
        PLine::new(self.a.transform(m)?, self.b.transform(m)?)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hyperplane {
    coeffs: Vec<Scalar>,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<Scalar>) -> Result<Self> {
        Ok(Hyperplane { coeffs: PPoint::new(coeffs)?.coords })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn contains<P: AsRef<[Scalar]>>(&self, p: &P) -> bool {
        dot(&self.coeffs, p.as_ref()).is_zero()
    }
}

fn common_len<P: AsRef<[Scalar]>>(points: &[P]) -> Result<usize> {
    let Some(first) = points.first() else {
        return Err(Error::InvalidArgument("empty point list".into()));
    };
    let len = first.as_ref().len();
    if points.iter().any(|p| p.as_ref().len() != len) {
        return Err(Error::Dimension("points of different dimensions".into()));
    }
    Ok(len)
}

/// Rank of the matrix whose rows are the given coordinate vectors.
pub fn rank_of<P: AsRef<[Scalar]>>(points: &[P]) -> usize {
    let rows: Vec<&[Scalar]> = points.iter().map(AsRef::as_ref).collect();
    Mat::from_rows(&rows).map(|m| m.rank()).unwrap_or(0)
}

/// True iff every subset of at most `n+1` of the points is linearly
/// independent, i.e. no `k+2` of them lie in a `k`-plane.
pub fn general_position<P: AsRef<[Scalar]>>(points: &[P]) -> Result<bool> {
    let len = common_len(points)?;
    let m = points.len();
    if m <= len {
        return Ok(rank_of(points) == m);
    }
    let mut ok = true;
    for_each_subset(m, len, &mut |idx| {
        let rows: Vec<&[Scalar]> = idx.iter().map(|&i| points[i].as_ref()).collect();
        let det = Mat::from_rows(&rows).and_then(|mat| mat.det()).expect("square submatrix");
        if det.is_zero() {
            ok = false;
        }
        ok
    });
    Ok(ok)
}

/// Calls `f` on each `k`-subset of `0..n` in lexicographic order until it returns false.
fn for_each_subset(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Linear projection of `P^n` from the span of `k` independent points onto `P^{n-k}`.
///
/// The centre is completed to a basis with coordinate vectors, taking the
/// smallest indices that keep full rank; in that basis the centre spans
/// the first `k` coordinates, which are then dropped.
#[derive(Clone, Debug)]
pub struct Projection {
    k: usize,
    to_basis: Mat,
}

impl Projection {
    pub fn new<P: AsRef<[Scalar]>>(center: &[P], n: usize) -> Result<Self> {
        if center.iter().any(|c| c.as_ref().len() != n + 1) {
            return Err(Error::Dimension(format!("centre points must lie in P^{n}")));
        }
        let k = center.len();
        if k > 0 && rank_of(center) < k {
            return Err(Error::Rank("projection centre points are dependent".into()));
        }
        if k > n {
            return Err(Error::Rank(format!("a centre of {k} points leaves nothing of P^{n}")));
        }
        let mut basis: Vec<Vec<Scalar>> = center.iter().map(|c| c.as_ref().to_vec()).collect();
        for i in 0..=n {
            if basis.len() == n + 1 {
                break;
            }
            basis.push(PPoint::coordinate(n, i).coords);
            if rank_of(&basis) < basis.len() {
                basis.pop();
            }
        }
        let to_basis = Mat::from_columns(&basis)?.inverse()?;
        Ok(Projection { k, to_basis })
    }

    /// Image coordinates before canonicalization.
    pub fn apply_raw<P: AsRef<[Scalar]>>(&self, p: &P) -> Result<Vec<Scalar>> {
        let c = self.to_basis.mul_vec(p.as_ref())?;
        let image = c[self.k..].to_vec();
        if image.iter().all(Zero::is_zero) {
            return Err(Error::ProjectionUndefined("point lies in the span of the centre".into()));
        }
        Ok(image)
    }

    pub fn apply<P: AsRef<[Scalar]>>(&self, p: &P) -> Result<PPoint> {
        PPoint::new(self.apply_raw(p)?)
    }
}

pub fn project_from_span<C: AsRef<[Scalar]>, P: AsRef<[Scalar]>>(center: &[C], p: &P) -> Result<PPoint> {
    let n = p.as_ref().len().checked_sub(1).ok_or_else(|| Error::InvalidArgument("empty point".into()))?;
    Projection::new(center, n)?.apply(p)
}

/// Quadratic monomials of a point of `P^2` in the order `x², y², z², xy, xz, yz`.
pub fn veronese2<P: AsRef<[Scalar]>>(p: &P) -> Result<Vec<Scalar>> {
    if p.as_ref().len() != 3 {
        return Err(Error::Dimension(format!("veronese2 expects a point of P^2, got P^{}", p.as_ref().len() as isize - 1)));
    }
    Ok(quadric_monomials(p))
}

/// Index pairs of the degree-2 monomials in `n+1` variables: squares
/// `(i, i)` ascending, then products `(i, j)` with `i < j` lexicographically.
pub fn quadric_monomial_pairs(n: usize) -> Vec<(usize, usize)> {
    let squares = (0..=n).map(|i| (i, i));
    let products = (0..=n).flat_map(|i| (i + 1..=n).map(move |j| (i, j)));
    squares.chain(products).collect()
}

pub fn quadric_monomials<P: AsRef<[Scalar]>>(p: &P) -> Vec<Scalar> {
    let z = p.as_ref();
    quadric_monomial_pairs(z.len() - 1).into_iter().map(|(i, j)| &z[i] * &z[j]).collect()
}

/// Coefficients of the hyperplane through `n` points of `P^n`: the signed
/// maximal minors `h_j = (-1)^j det(M without column j)`, which is the
/// cofactor expansion of `det([x; M])` along its first row.
pub fn span_hyperplane_raw<P: AsRef<[Scalar]>>(points: &[P]) -> Result<Vec<Scalar>> {
    let len = common_len(points)?;
    if points.len() + 1 != len {
        return Err(Error::Dimension(format!("{} points do not span a hyperplane of P^{}", points.len(), len - 1)));
    }
    let m = Mat::from_rows(&points.iter().map(AsRef::as_ref).collect::<Vec<_>>())?;
    let h: Vec<Scalar> = (0..len)
        .map(|j| {
            let cols: Vec<usize> = (0..len).filter(|&c| c != j).collect();
            let minor = m.select_columns(&cols).det().expect("square minor");
            if j % 2 == 0 { minor } else { -minor }
        })
        .collect();
    if h.iter().all(Zero::is_zero) {
        return Err(Error::Rank("points spanning the hyperplane are dependent".into()));
    }
    Ok(h)
}

pub fn span_hyperplane<P: AsRef<[Scalar]>>(points: &[P]) -> Result<Hyperplane> {
    Hyperplane::new(span_hyperplane_raw(points)?)
}

/// `(h·b) a − (h·a) b`, the meet of the line through `a`, `b` with `h`.
pub fn line_hyperplane_meet_raw(a: &[Scalar], b: &[Scalar], h: &[Scalar]) -> Result<Vec<Scalar>> {
    if a.len() != h.len() || b.len() != h.len() {
        return Err(Error::Dimension("line and hyperplane in different spaces".into()));
    }
    let (ha, hb) = (dot(h, a), dot(h, b));
    let p: Vec<Scalar> = a.iter().zip(b).map(|(x, y)| &hb * x - &ha * y).collect();
    if p.iter().all(Zero::is_zero) {
        return Err(Error::Containment("the line lies in the hyperplane".into()));
    }
    Ok(p)
}

pub fn line_hyperplane_meet(l: &PLine, h: &Hyperplane) -> Result<PPoint> {
    PPoint::new(line_hyperplane_meet_raw(l.a.coords(), l.b.coords(), h.coeffs())?)
}

/// Cross product; the line through two points of `P^2`, or the meet of two lines.
pub fn cross(a: &[Scalar], b: &[Scalar]) -> [Scalar; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// The projective transformation sending `points[k]` to `e_k` for
/// `k <= n` and `points[n+1]` to `[1:...:1]`, scaled so that its first
/// nonzero entry (row-major) is 1.
pub fn frame_map<P: AsRef<[Scalar]>>(points: &[P]) -> Result<Mat> {
    let len = common_len(points)?;
    if points.len() != len + 1 {
        return Err(Error::Dimension(format!("a frame of P^{} has {} points, got {}", len - 1, len + 1, points.len())));
    }
    let basis = Mat::from_columns(&points[..len])
        .and_then(|a| a.inverse())
        .map_err(|_| Error::Rank("first n+1 frame points are dependent".into()))?;
    let weights = basis.mul_vec(points[len].as_ref())?;
    if weights.iter().any(Zero::is_zero) {
        return Err(Error::Rank("frame points are not in general position".into()));
    }
    // (A diag(w))^{-1} = diag(1/w) A^{-1}
    let mut m = basis;
    for i in 0..len {
        let inv = weights[i].recip();
        for j in 0..len {
            m[(i, j)] = &m[(i, j)] * &inv;
        }
    }
    let lead = m.entries().iter().find(|x| !x.is_zero()).cloned().expect("invertible");
    Ok(m.scale(&lead.recip()))
}

/// The unique line through `p` meeting the skew lines `l1` and `l2` in `P^3`.
pub fn transversal_through_point<P: AsRef<[Scalar]>>(p: &P, l1: &PLine, l2: &PLine) -> Result<PLine> {
    let p = p.as_ref();
    if p.len() != 4 || l1.dim() != 3 || l2.dim() != 3 {
        return Err(Error::Dimension("transversals are constructed in P^3".into()));
    }
    if rank_of(&[l1.a.coords(), l1.b.coords(), l2.a.coords(), l2.b.coords()]) < 4 {
        return Err(Error::Degeneracy("the two lines are coplanar".into()));
    }
    let plane = |l: &PLine| {
        span_hyperplane_raw(&[p, l.a.coords(), l.b.coords()])
            .map_err(|_| Error::Degeneracy("the point lies on one of the lines".into()))
    };
    let (h1, h2) = (plane(l1)?, plane(l2)?);
    let planes = Mat::from_rows(&[h1, h2])?;
    if planes.rank() < 2 {
        return Err(Error::Degeneracy("the planes through the point and each line coincide".into()));
    }
    let mut kernel = planes.nullspace().into_iter();
    let a = PPoint::new(kernel.next().expect("2-dim kernel"))?;
    let b = PPoint::new(kernel.next().expect("2-dim kernel"))?;
    PLine::new(a, b)
}
