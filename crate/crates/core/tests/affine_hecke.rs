use affine_yh::affine_hecke::{
    c_hat, g_hat, is_canonical, kl_basis, phi_suite, transported_bar, BasisChange, IMExpansion, Parabolic,
};
use affine_yh::combinatorics::{enumerate_ball, ExtAffineElem, ResidueTuple, DEFAULT_GUARD};
use affine_yh::idem_presentation::HhatElement;
use affine_yh::{sample, Laurent};

#[test]
fn bar_is_an_involutive_ring_homomorphism() {
    let mut rng = sample::rng(7);
    for n in 1..=3 {
        let p = Parabolic::new(&[n]);
        for _ in 0..100 {
            let a = sample::bernstein_in(&mut rng, &p, 2, 1);
            let b = sample::bernstein_in(&mut rng, &p, 2, 1);
            assert_eq!(a.bar().bar(), a);
            if n <= 2 {
                assert_eq!(a.mul(&b).bar(), a.bar().mul(&b.bar()));
            }
        }
    }
}

#[test]
fn multiplication_is_associative() {
    let mut rng = sample::rng(11);
    let p = Parabolic::new(&[3]);
    for _ in 0..50 {
        let a = sample::bernstein_in(&mut rng, &p, 2, 1);
        let b = sample::bernstein_in(&mut rng, &p, 2, 1);
        let c = sample::bernstein_in(&mut rng, &p, 2, 1);
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }
}

/// Canonical elements are fixed by the bar involution computed in the
/// Bernstein basis, which never uses the Iwahori-Matsumoto reduced words.
#[test]
fn canonical_basis_against_bernstein_bar() {
    for (n, l) in [(2, 4), (3, 3)] {
        let bc = BasisChange::new(n);
        for w in enumerate_ball(n, l, -1..=1, DEFAULT_GUARD).unwrap() {
            let c = kl_basis(&w, DEFAULT_GUARD).unwrap();
            assert!(is_canonical(&w, &c), "{w}");
            let b = bc.to_bernstein(&c);
            assert_eq!(b.bar(), b, "{w}");
            assert_eq!(bc.to_im(&b), c);
        }
    }
}

#[test]
fn phi_is_multiplicative() {
    for (r, n) in [(2u32, 2usize), (2, 3), (3, 2)] {
        let rep = phi_suite(r, n, 100, 3).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn transported_canonical_basis() {
    for (r, n) in [(2u32, 2usize), (2, 3)] {
        for lambda in ResidueTuple::all_sorted(r, n) {
            let p = Parabolic::from_tuple(&lambda).unwrap();
            for w in p.ball(2, -1..=1, DEFAULT_GUARD).unwrap() {
                let c = c_hat(&lambda, &w, DEFAULT_GUARD).unwrap();
                assert_eq!(transported_bar(&c, &lambda).unwrap(), c, "{lambda} {w}");
                let mut rest = c.clone();
                for (y, k) in p.kl_basis(&w, DEFAULT_GUARD).unwrap() {
                    assert!(y == w || k.in_negative_span());
                    rest -= &g_hat(&lambda, &y).unwrap().scale(&k);
                }
                assert!(rest.is_zero());
                assert_eq!(
                    g_hat(&lambda, &ExtAffineElem::identity(n)).unwrap(),
                    HhatElement::idem(&lambda)
                );
            }
        }
    }
}

#[test]
fn im_round_trip_on_balls() {
    for n in 1..=3 {
        let bc = BasisChange::new(n);
        for w in enumerate_ball(n, 3, -1..=1, DEFAULT_GUARD).unwrap() {
            let x = IMExpansion::basis(w.clone()).scale(&Laurent::monomial(2, 1));
            assert_eq!(bc.to_im(&bc.to_bernstein(&x)), x);
        }
    }
}
