use mystic_core::rnc::{rnc_check, rnc_equation_polys, rnc_equations, rnc_sample, RncNormalForm};
use mystic_core::{Error, Lcg64};

fn shuffled(n: usize, rng: &mut Lcg64) -> Vec<usize> {
    let mut order: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        order.swap(i, rng.below(i as u64 + 1) as usize);
    }
    order
}

#[test]
fn members_and_perturbed_non_members_small_d() {
    for d in 3..=5 {
        for seed in 0..5 {
            let inst = rnc_sample(d, seed).unwrap();
            let v = rnc_check(&inst).unwrap();
            assert!(v.member && v.witnesses_agree, "d={d} seed={seed}");
            let p = inst.perturbed(d + 3, 0, 1);
            let v = rnc_check(&p).unwrap();
            assert!(!v.member && v.witnesses_agree, "d={d} seed={seed}");
        }
    }
}

#[test]
fn verdict_is_invariant_under_reordering() {
    let mut rng = Lcg64::new(99);
    for d in 3..=6 {
        for seed in 0..3 {
            let member = rnc_sample(d, seed).unwrap();
            let other = member.perturbed(2, 1, 3);
            for inst in [member, other] {
                let expected = rnc_check(&inst).unwrap().member;
                for _ in 0..4 {
                    let order = shuffled(d + 4, &mut rng);
                    let v = rnc_check(&inst.permuted(&order).unwrap()).unwrap();
                    assert_eq!(v.member, expected, "d={d} seed={seed} order={order:?}");
                    assert!(v.witnesses_agree);
                }
            }
        }
    }
}

#[test]
fn symbolic_equations_match_numeric() {
    for d in 3..=6 {
        let inst = rnc_sample(d, 1).unwrap().perturbed(d + 2, 1, 2);
        let nf = RncNormalForm::from_instance(&inst).unwrap();
        let values = rnc_equations(&nf).unwrap();
        let mut point = nf.a().to_vec();
        point.extend_from_slice(nf.b());
        let polys = rnc_equation_polys(d).unwrap();
        assert_eq!(polys.len(), d - 1);
        for (p, v) in polys.iter().zip(&values) {
            assert_eq!(&p.eval(&point).unwrap(), v);
        }
    }
}

#[test]
fn repeated_point_is_a_hypothesis_error() {
    let inst = rnc_sample(3, 0).unwrap();
    let mut pts = inst.points().to_vec();
    pts[6] = pts[0].clone();
    let bad = mystic_core::rnc::RncInstance::new(3, &pts).unwrap();
    assert!(matches!(rnc_check(&bad), Err(e) if e.is_hypothesis()));
    assert!(matches!(rnc_sample(1, 0), Err(Error::InvalidArgument(_))));
}
