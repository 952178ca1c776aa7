use affine_yh::combinatorics::{ResidueTuple, DEFAULT_GUARD};
use affine_yh::idem_presentation::HhatElement;
use affine_yh::matrix_model::{
    canonical_lift_suite, involution_suite, iso_suite, sorted, tau_suite, EElement, MatrixModel,
};
use affine_yh::{sample, Laurent};

#[test]
fn isomorphism_at_small_sizes() {
    for (r, n) in [(2, 2), (3, 2), (2, 3)] {
        let rep = iso_suite(r, n, 2, 30, 1, 1, DEFAULT_GUARD).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn sorting_elements_and_alternate_words() {
    for (r, n) in [(2, 2), (2, 3), (3, 2)] {
        let rep = tau_suite(r, n, 3, 2, DEFAULT_GUARD).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn canonical_lifts() {
    let rep = canonical_lift_suite(2, 2, 2, DEFAULT_GUARD).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn involution() {
    let rep = involution_suite(2, 3, 1, 30, 4, DEFAULT_GUARD).unwrap();
    assert!(rep.passed(), "{rep}");
}

/// Inside one orbit the block product is an ordinary matrix product with
/// entries in `1_{l0} H 1_{l0}`.
#[test]
fn block_product_is_matrix_product() {
    let (r, n) = (2, 3);
    let m = MatrixModel::new(r, n, DEFAULT_GUARD).unwrap();
    let mut rng = sample::rng(9);
    let l0 = ResidueTuple::new(r, vec![1, 1, 2]).unwrap();
    let orbit = l0.orbit();
    let triples: Vec<_> = m
        .triples(1)
        .unwrap()
        .into_iter()
        .filter(|t| sorted(&t.0) == l0)
        .collect();
    let random = |rng: &mut rand_chacha::ChaCha8Rng| {
        let mut x = EElement::zero(r, n);
        for _ in 0..4 {
            let (a, b, w) = &triples[rand::Rng::gen_range(rng, 0..triples.len())];
            x = x
                .try_add(&m.x_basis(a, b, w).unwrap().scale(&sample::laurent(rng)))
                .unwrap();
        }
        x
    };
    for _ in 0..10 {
        let (x, y) = (random(&mut rng), random(&mut rng));
        let xy = x.mul(&y);
        for a in &orbit {
            for b in &orbit {
                let mut entry = HhatElement::<Laurent>::zero(r, n);
                for c in &orbit {
                    entry += &x.block(a, c).mul(&y.block(c, b));
                }
                assert_eq!(xy.block(a, b), entry);
            }
        }
    }
}
