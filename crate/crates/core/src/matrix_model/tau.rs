use rand::Rng;

use super::element::sorted;
use crate::coeffs::Laurent;
use crate::combinatorics::ResidueTuple;
use crate::error::{Error, Result};
use crate::idem_presentation::HhatElement;

/// A sorting word `(s_1, ..., s_k)` with `l0 = s_1 ... s_k l`, every step
/// changing the tuple, and the products `tau = g_{s_1} ... g_{s_k}`,
/// `tau' = g_{s_k} ... g_{s_1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct TauPair {
    pub lambda: ResidueTuple,
    pub word: Vec<usize>,
    pub tau: HhatElement<Laurent>,
    pub tau_prime: HhatElement<Laurent>,
}

/// The word of a stable selection sort: the first minimal entry of the
/// unsorted suffix moves left one adjacent swap at a time.
pub fn selection_sort_word(lambda: &ResidueTuple) -> Vec<usize> {
    let mut cur = lambda.entries().to_vec();
    let mut applied = Vec::new();
    for p in 0..cur.len() {
        let Some(min) = cur[p..].iter().min().copied() else {
            break;
        };
        let j = p + cur[p..].iter().position(|&v| v == min).expect("min is present");
        for i in (p..j).rev() {
            cur.swap(i, i + 1);
            applied.push(i + 1);
        }
    }
    applied.reverse();
    applied
}

/// A random sorting word; at most `detours` steps move away from the sorted
/// tuple.
pub fn random_sort_word(rng: &mut impl Rng, lambda: &ResidueTuple, mut detours: usize) -> Vec<usize> {
    let mut cur = lambda.clone();
    let mut applied = Vec::new();
    while !cur.is_sorted() {
        let n = cur.n();
        let down: Vec<usize> = (1..n).filter(|&i| cur.get(i) > cur.get(i + 1)).collect();
        let up: Vec<usize> = (1..n).filter(|&i| cur.get(i) < cur.get(i + 1)).collect();
        let i = if detours > 0 && !up.is_empty() && rng.gen_bool(0.3) {
            detours -= 1;
            up[rng.gen_range(0..up.len())]
        } else {
            down[rng.gen_range(0..down.len())]
        };
        cur = cur.swap(i);
        applied.push(i);
    }
    applied.reverse();
    applied
}

pub fn make_tau(lambda: &ResidueTuple) -> Result<TauPair> {
    tau_from_word(lambda, selection_sort_word(lambda))
}

/// Builds the pair for an explicit word and checks
/// `1_{l0} tau tau' = 1_{l0}` and `1_l tau' tau = 1_l`.
pub fn tau_from_word(lambda: &ResidueTuple, word: Vec<usize>) -> Result<TauPair> {
    let (r, n) = (lambda.r(), lambda.n());
    let mut cur = lambda.clone();
    for &i in word.iter().rev() {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange { index: i, max: n - 1 });
        }
        let next = cur.swap(i);
        if next == cur {
            return Err(Error::CheckFailed(format!("s{i} fixes {cur} in the word {word:?}")));
        }
        cur = next;
    }
    let l0 = sorted(lambda);
    if cur != l0 {
        return Err(Error::CheckFailed(format!(
            "{word:?} sends {lambda} to {cur}, not {l0}"
        )));
    }
    let one = HhatElement::one(r, n);
    let mut tau = one.clone();
    for &i in word.iter().rev() {
        tau = tau.left_g(i);
    }
    let mut tau_prime = one;
    for &i in &word {
        tau_prime = tau_prime.left_g(i);
    }
    let e0 = HhatElement::idem(&l0);
    let e = HhatElement::idem(lambda);
    if e0.mul(&tau).mul(&tau_prime) != e0 || e.mul(&tau_prime).mul(&tau) != e {
        return Err(Error::CheckFailed(format!("tau identities fail for {lambda}")));
    }
    Ok(TauPair {
        lambda: lambda.clone(),
        word,
        tau,
        tau_prime,
    })
}
