//! Cross-module property suites: homomorphism laws for every substitution
//! map in the pipeline, normal-form stability against the kernel basis, and
//! randomized round-trips.

use std::sync::Arc;

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use splitvar::cli::run_pipeline;
use splitvar::cyclotomic::CycloNum;
use splitvar::polyring::{
    parse_poly, GroebnerBasis, LaurentPoly, Mono, MonomialOrder, RingMap, RingSpec,
};
use splitvar::veronese::pi_unit_map;

/// Sparse low-degree random polynomials: at most two variables per
/// monomial, so that images under the substitution maps stay small.
fn random_poly(rng: &mut StdRng, ring: &Arc<RingSpec>, max_terms: usize) -> LaurentPoly {
    let mut f = LaurentPoly::zero(ring);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let mut exps = vec![0i32; ring.num_vars()];
        for _ in 0..rng.gen_range(0..=2) {
            let i = rng.gen_range(0..ring.num_vars());
            if ring.is_invertible(i) {
                exps[i] += *[-1i32, 1].get(rng.gen_range(0..2)).unwrap();
            } else {
                exps[i] += 1;
            }
        }
        f.add_term(Mono(exps), CycloNum::from_integer(ring.coeff_order(), rng.gen_range(-3..=3)));
    }
    f
}

#[test]
fn every_pipeline_map_is_a_ring_homomorphism() {
    let p = run_pipeline(3).unwrap();
    let pi_u = pi_unit_map(3).unwrap();
    let maps: Vec<(&str, &RingMap)> = vec![
        ("theta", p.theta.theta()),
        ("phi", p.theta.phi()),
        ("p", p.eigen.p()),
        ("p_inv", p.eigen.p_inv()),
        ("pi", &pi_u),
        ("pi_prime", p.eigen.pi_prime()),
    ];
    let mut rng = StdRng::seed_from_u64(1234);
    for (name, map) in maps {
        for _ in 0..500 {
            let f = random_poly(&mut rng, map.source(), 3);
            let g = random_poly(&mut rng, map.source(), 3);
            assert_eq!(
                map.apply(&f.mul(&g)),
                map.apply(&f).mul(&map.apply(&g)),
                "{name} fails multiplicativity"
            );
            assert_eq!(
                map.apply(&f.add(&g)),
                map.apply(&f).add(&map.apply(&g)),
                "{name} fails additivity"
            );
        }
    }
}

#[test]
fn normal_form_is_idempotent_against_the_kernel_basis() {
    let p = run_pipeline(3).unwrap();
    let gb = GroebnerBasis::compute(
        p.theta.z_ring(),
        &p.ideal.generators,
        MonomialOrder::GrevLex,
    )
    .unwrap();
    let mut rng = StdRng::seed_from_u64(555);
    for _ in 0..40 {
        let f = random_poly(&mut rng, p.theta.z_ring(), 4);
        let nf = gb.normal_form(&f);
        assert_eq!(gb.normal_form(&nf), nf);
        // the normal form is a canonical representative: f - nf is a member
        assert!(gb.contains(&f.sub(&nf)));
    }
    // every generator reduces to zero against the basis
    for g in &p.ideal.generators {
        assert!(gb.contains(g));
    }
}

#[test]
fn theta_kernel_membership_is_unit_stable() {
    // f in Ker(theta)-ideal iff a*f is, iff b^(-1)*f is
    let p = run_pipeline(3).unwrap();
    let zr = p.theta.z_ring();
    let gb = GroebnerBasis::compute(zr, &p.ideal.generators, MonomialOrder::GrevLex).unwrap();
    let a = parse_poly(zr, "a").unwrap();
    let b_inv = parse_poly(zr, "b^(-1)").unwrap();
    let mut rng = StdRng::seed_from_u64(9000);
    for _ in 0..25 {
        let f = random_poly(&mut rng, zr, 3);
        let m = gb.contains(&f);
        assert_eq!(gb.contains(&f.mul(&a)), m);
        assert_eq!(gb.contains(&f.mul(&b_inv)), m);
    }
}

// --- randomized structural properties of the polynomial arithmetic ---

fn arb_ring() -> Arc<RingSpec> {
    RingSpec::new(3, &["x", "y", "u"], &["u"]).unwrap()
}

fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    let term = (
        prop::collection::vec(0..3i32, 2),
        -2..3i32,
        -3..4i64,
    );
    prop::collection::vec(term, 0..5).prop_map(|terms| {
        let ring = arb_ring();
        let mut f = LaurentPoly::zero(&ring);
        for (plain, unit_exp, coeff) in terms {
            let mono = Mono(vec![plain[0], plain[1], unit_exp]);
            f.add_term(mono, CycloNum::from_integer(3, coeff));
        }
        f
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn display_parse_round_trip(f in arb_poly()) {
        let ring = arb_ring();
        let reparsed = parse_poly(&ring, &f.to_string()).unwrap();
        prop_assert_eq!(reparsed, f);
    }

    #[test]
    fn json_round_trip(f in arb_poly()) {
        let json = serde_json::to_string(&f).unwrap();
        let back: LaurentPoly = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn ring_laws(f in arb_poly(), g in arb_poly(), h in arb_poly()) {
        prop_assert_eq!(f.add(&g), g.add(&f));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.add(&g).mul(&h), f.mul(&h).add(&g.mul(&h)));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.sub(&f), LaurentPoly::zero(&arb_ring()));
    }
}
