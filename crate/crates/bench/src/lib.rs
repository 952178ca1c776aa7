//! Inputs for the benchmarks of the rewriting, multiplication, canonical-basis
//! and matrix-model kernels.

use affine_yh::combinatorics::{enumerate_ball, ExtAffineElem, DEFAULT_GUARD};
use affine_yh::idem_presentation::{GenWord, HhatElement};
use affine_yh::{sample, Laurent};

/// Pairs of random elements with `terms` monomials each.
pub fn hhat_pairs(
    r: u32,
    n: usize,
    terms: usize,
    count: usize,
    seed: u64,
) -> Vec<(HhatElement<Laurent>, HhatElement<Laurent>)> {
    let mut rng = sample::rng(seed);
    (0..count)
        .map(|_| {
            (
                sample::hhat(&mut rng, r, n, terms, 1),
                sample::hhat(&mut rng, r, n, terms, 1),
            )
        })
        .collect()
}

/// The word `(g_1 X_1 ... g_{n-1} X_{n-1} 1(1,..,r))^reps`, every letter used.
pub fn long_word(r: u32, n: usize, reps: usize) -> GenWord {
    let mut src = String::new();
    for _ in 0..reps {
        for i in 1..n {
            src.push_str(&format!("g{i} X{i} "));
        }
        let lam: Vec<String> = (0..n).map(|j| (j as u32 % r + 1).to_string()).collect();
        src.push_str(&format!("1({}) ", lam.join(",")));
    }
    GenWord::parse(r, n, &src).expect("well-formed word")
}

/// The largest element of length `len` with no `pi` factor.
pub fn kl_target(n: usize, len: usize) -> ExtAffineElem {
    enumerate_ball(n, len, 0..=0, DEFAULT_GUARD)
        .expect("small ball")
        .pop()
        .expect("ball contains the identity")
}
