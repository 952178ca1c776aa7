//! Seeded random elements for property checks and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::affine_hecke::{BernsteinElem, Parabolic};
use crate::cellular::{BMatrix, GenMatrixAlgebra, MLaurent, Sigma};
use crate::coeffs::Laurent;
use crate::combinatorics::{Perm, ResidueTuple};
use crate::idem_presentation::{HhatElement, Monomial};

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A Laurent polynomial with up to two terms, degrees in `-1..=1`.
pub fn laurent(rng: &mut impl Rng) -> Laurent {
    let mut out = Laurent::zero();
    while out.is_zero() {
        for _ in 0..rng.gen_range(1..=2) {
            out.add_term(rng.gen_range(-1..=1), rng.gen_range(-2..=2));
        }
    }
    out
}

fn exponents(rng: &mut impl Rng, n: usize, bound: i32) -> Vec<i32> {
    (0..n).map(|_| rng.gen_range(-bound..=bound)).collect()
}

/// A Bernstein element of the parabolic subalgebra with `terms` monomials.
pub fn bernstein_in(rng: &mut impl Rng, p: &Parabolic, terms: usize, bound: i32) -> BernsteinElem {
    let perms: Vec<Perm> = Perm::all(p.n()).into_iter().filter(|w| p.contains_perm(w)).collect();
    let mut out = BernsteinElem::zero(p.n());
    for _ in 0..terms {
        let w = perms.choose(rng).expect("identity is always present").clone();
        out.add_term(exponents(rng, p.n(), bound), w, laurent(rng));
    }
    out
}

/// A random element of the idempotent presentation.
pub fn hhat(rng: &mut impl Rng, r: u32, n: usize, terms: usize, bound: i32) -> HhatElement<Laurent> {
    let perms = Perm::all(n);
    let tuples = ResidueTuple::all(r, n);
    let mut out = HhatElement::zero(r, n);
    for _ in 0..terms {
        let w = perms.choose(rng).expect("nonempty").clone();
        let l = tuples.choose(rng).expect("nonempty").clone();
        out.add_term(Monomial::new(exponents(rng, n, bound), l, w), laurent(rng));
    }
    out
}

/// A multivariate Laurent polynomial with up to three terms, exponents in `-1..=1`.
pub fn mlaurent(rng: &mut impl Rng, nvars: usize) -> MLaurent {
    let mut out = MLaurent::zero(nvars);
    for _ in 0..rng.gen_range(0..=3) {
        out.add_term(exponents(rng, nvars, 1), rng.gen_range(-2..=2));
    }
    out
}

pub fn bmatrix(rng: &mut impl Rng, dim: usize, nvars: usize) -> BMatrix {
    let mut out = BMatrix::zero(dim, nvars);
    for i in 0..dim {
        for j in 0..dim {
            out.set(i, j, mlaurent(rng, nvars));
        }
    }
    out
}

/// One of the identity, inversion of all variables, or a variable swap.
pub fn sigma(rng: &mut impl Rng, nvars: usize) -> Sigma {
    match rng.gen_range(0..3) {
        0 => Sigma::identity(nvars),
        1 => Sigma::invert_all(nvars),
        _ => {
            let mut p: Vec<usize> = (0..nvars).collect();
            if nvars >= 2 {
                p.swap(0, 1);
            }
            Sigma::permute(&p)
        }
    }
}

/// A matrix algebra with a random form satisfying `sigma(psi)^t = psi`.
pub fn gma(rng: &mut impl Rng, dim: usize, nvars: usize) -> GenMatrixAlgebra {
    let s = sigma(rng, nvars);
    let mut psi = BMatrix::zero(dim, nvars);
    for i in 0..dim {
        for j in i..dim {
            let a = mlaurent(rng, nvars);
            if i == j {
                psi.set(i, i, a.add(&s.apply(&a)));
            } else {
                psi.set(j, i, s.apply(&a));
                psi.set(i, j, a);
            }
        }
    }
    GenMatrixAlgebra::new(psi, s).expect("compatible by construction")
}
