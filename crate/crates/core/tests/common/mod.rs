#![allow(dead_code)]

use mystic_core::matrix::Mat;
use mystic_core::projective::{line_hyperplane_meet_raw, rank_of, span_hyperplane_raw};
use mystic_core::rsb::{rsb_points_raw, RsbInstance};
use mystic_core::scalar::{int, Scalar};
use mystic_core::{Lcg64, PLine, PPoint};
use num_traits::Zero;

pub fn rand_vec(rng: &mut Lcg64, n: usize, bound: i64) -> Vec<Scalar> {
    (0..n).map(|_| int(rng.range(-bound, bound))).collect()
}

/// Random nonzero integer vector.
pub fn rand_nonzero(rng: &mut Lcg64, n: usize, bound: i64) -> Vec<Scalar> {
    loop {
        let v = rand_vec(rng, n, bound);
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

pub fn rand_point(rng: &mut Lcg64, n: usize, bound: i64) -> PPoint {
    PPoint::new(rand_nonzero(rng, n, bound)).unwrap()
}

pub fn rand_line(rng: &mut Lcg64, n: usize, bound: i64) -> PLine {
    loop {
        if let Ok(l) = PLine::new(rand_point(rng, n, bound), rand_point(rng, n, bound)) {
            return l;
        }
    }
}

pub fn rand_invertible(rng: &mut Lcg64, n: usize, bound: i64) -> Mat {
    loop {
        let rows: Vec<Vec<Scalar>> = (0..n).map(|_| rand_vec(rng, n, bound)).collect();
        let m = Mat::from_rows(&rows).unwrap();
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

pub fn transform_raw(m: &Mat, p: &[Scalar]) -> Vec<Scalar> {
    m.mul_vec(p).unwrap()
}

/// A point `[su:sv:tu:tv]` of the quadric `x0 x3 = x1 x2`.
pub fn segre_point(rng: &mut Lcg64) -> Vec<Scalar> {
    loop {
        let [s, t, u, v] = [0; 4].map(|_| rng.range(-5, 5));
        let p = vec![int(s * u), int(s * v), int(t * u), int(t * v)];
        if p.iter().any(|x| !x.is_zero()) {
            return p;
        }
    }
}

/// The ruling line `{[su:sv:tu:tv] : [u:v] ∈ P^1}` for fixed `[s:t]`.
pub fn segre_ruling(rng: &mut Lcg64) -> PLine {
    loop {
        let (s, t) = (rng.range(-5, 5), rng.range(-5, 5));
        if s == 0 && t == 0 {
            continue;
        }
        let a = PPoint::new(vec![int(s), int(0), int(t), int(0)]).unwrap();
        let b = PPoint::new(vec![int(0), int(s), int(0), int(t)]).unwrap();
        return PLine::new(a, b).unwrap();
    }
}

/// Ten points of `P^3`: on a transformed Segre quadric for even seeds,
/// random for odd seeds.
pub fn ten_points(seed: u64) -> Vec<Vec<Scalar>> {
    let mut rng = Lcg64::new(seed);
    if seed % 2 == 0 {
        let m = rand_invertible(&mut rng, 4, 3);
        (0..10).map(|_| transform_raw(&m, &segre_point(&mut rng))).collect()
    } else {
        (0..10).map(|_| rand_nonzero(&mut rng, 4, 6)).collect()
    }
}

/// Frame instance `R_1, R_2, R_3` for the point-and-three-lines determinant.
///
/// Seeds cycle through random coordinates, concurrent projections
/// `R_i = (r_i, α_i e_i + β_i X)`, and a vanishing first degenerate factor
/// `a31 = a21 a30 / a20`.
pub fn p3l_instance(seed: u64) -> [Vec<Scalar>; 3] {
    let mut rng = Lcg64::new(seed);
    match seed % 3 {
        0 => std::array::from_fn(|_| rand_vec(&mut rng, 4, 4)),
        1 => {
            let x = rand_nonzero(&mut rng, 3, 4);
            std::array::from_fn(|i| {
                let (r0, alpha, beta) = (rng.range(-4, 4), rng.range(-4, 4), rng.nonzero(4));
                let mut r = vec![int(r0)];
                r.extend((0..3).map(|j| int(beta) * &x[j] + if j == i { int(alpha) } else { int(0) }));
                r
            })
        }
        _ => {
            let mut r: [Vec<Scalar>; 3] = std::array::from_fn(|_| rand_vec(&mut rng, 4, 4));
            if r[1][0].is_zero() {
                r[1][0] = int(1);
            }
            r[2][1] = &r[1][1] * &r[2][0] / &r[1][0];
            r
        }
    }
}

/// The lines `e_i R_i` of a frame instance, with `P = e_0`.
pub fn p3l_lines(r: &[Vec<Scalar>; 3]) -> Option<[PLine; 3]> {
    let lines: Option<Vec<PLine>> = (0..3)
        .map(|i| PLine::new(PPoint::coordinate(3, i + 1), PPoint::new(r[i].clone()).ok()?).ok())
        .collect();
    lines.map(|l| l.try_into().unwrap())
}

/// Four points and two skew lines in `P^3`: on a common Segre quadric for
/// even seeds (points and two lines of one ruling, then transformed),
/// random for odd seeds.
pub fn four_points_two_lines(seed: u64) -> ([PPoint; 4], PLine, PLine) {
    let mut rng = Lcg64::new(seed);
    if seed % 2 == 0 {
        let m = rand_invertible(&mut rng, 4, 3);
        let pts = std::array::from_fn(|_| PPoint::new(transform_raw(&m, &segre_point(&mut rng))).unwrap());
        let l1 = segre_ruling(&mut rng).transform(&m).unwrap();
        let l2 = segre_ruling(&mut rng).transform(&m).unwrap();
        (pts, l1, l2)
    } else {
        let pts = std::array::from_fn(|_| rand_point(&mut rng, 4, 5));
        (pts, rand_line(&mut rng, 4, 5), rand_line(&mut rng, 4, 5))
    }
}

pub fn rand_rsb(seed: u64, bound: i64) -> RsbInstance {
    let mut rng = Lcg64::new(seed);
    let q: Vec<Vec<Scalar>> = (0..5).map(|_| rand_vec(&mut rng, 5, bound)).collect();
    RsbInstance::new(&q).unwrap()
}

/// Moves `L_5` inside the plane `span(L_5, L_2) ∩ span(L_3, L_5)`, which keeps
/// `R_1` and `R_4` fixed and makes `R_5` linear in the parameter, then solves
/// for the parameter putting `R_5` in the span of `R_1..R_4`.
///
/// Returns `None` when the instance is degenerate or the linear coefficient vanishes.
pub fn forced_rsb_type(seed: u64) -> Option<RsbInstance> {
    let inst = rand_rsb(seed, 9);
    let q = inst.q();
    let e = |k: usize| PPoint::coordinate(4, k).coords().to_vec();
    let h1 = span_hyperplane_raw(&[e(4), q[4].clone(), e(1), q[1].clone()]).ok()?;
    let h4 = span_hyperplane_raw(&[e(2), q[2].clone(), e(4), q[4].clone()]).ok()?;
    let plane = Mat::from_rows(&[h1, h4]).ok()?.nullspace();
    let w = plane.into_iter().find(|w| rank_of(&[e(4), q[4].clone(), w.clone()]) == 3)?;
    let r = rsb_points_raw(&inst).ok()?;
    let h5 = span_hyperplane_raw(&[e(3), q[3].clone(), e(0), q[0].clone()]).ok()?;
    let r5_at = |t: &Scalar| -> Option<Vec<Scalar>> {
        let q5: Vec<Scalar> = q[4].iter().zip(&w).map(|(a, b)| a + t * b).collect();
        line_hyperplane_meet_raw(&e(4), &q5, &h5).ok()
    };
    let det_at = |t: &Scalar| -> Option<Scalar> {
        let rows = [r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone(), r5_at(t)?];
        Mat::from_rows(&rows).ok()?.det().ok()
    };
    let d0 = det_at(&int(0))?;
    let d1 = det_at(&int(1))? - &d0;
    if d1.is_zero() {
        return None;
    }
    let t = -d0 / d1;
    let mut new_q = q.to_vec();
    new_q[4] = q[4].iter().zip(&w).map(|(a, b)| a + &t * b).collect();
    let forced = RsbInstance::new(&new_q).ok()?;
    rsb_points_raw(&forced).ok()?;
    Some(forced)
}
