use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::ops::RangeInclusive;

use super::Perm;
use crate::error::{Error, Result};

/// Default cap on enumerated sets (balls, Bruhat intervals).
pub const DEFAULT_GUARD: usize = 200_000;

/// An element `t_mu w` of the extended affine Weyl group `Z^n x| S_n`.
///
/// The product is `(l, u)(m, v) = (l + u.m, uv)` with `(u.m)_i = m_{u^-1(i)}`.
/// Simple reflections are `s_1, ..., s_{n-1}` from `S_n` together with
/// `s_0 = t_{e_1 - e_n} (1 n)`. The length-zero element `pi = t_{e_1} c`, with
/// `c` the cycle `1 -> 2 -> ... -> n`, satisfies `pi s_i pi^-1 = s_{i+1 mod n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExtAffineElem {
    trans: Vec<i32>,
    perm: Perm,
}

impl ExtAffineElem {
    pub fn new(trans: Vec<i32>, perm: Perm) -> Result<Self> {
        if trans.len() != perm.n() {
            return Err(Error::SizeMismatch {
                expected: perm.n(),
                got: trans.len(),
            });
        }
        Ok(Self { trans, perm })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            trans: vec![0; n],
            perm: Perm::identity(n),
        }
    }

    pub fn translation(mu: &[i32]) -> Self {
        Self {
            trans: mu.to_vec(),
            perm: Perm::identity(mu.len()),
        }
    }

    pub fn from_perm(w: Perm) -> Self {
        Self {
            trans: vec![0; w.n()],
            perm: w,
        }
    }

    /// The simple reflection `s_i`, `0 <= i < n`.
    pub fn s(n: usize, i: usize) -> Self {
        assert!(n >= 2 && i < n, "s_{i} outside the affine group of rank {n}");
        if i > 0 {
            return Self::from_perm(Perm::s(n, i));
        }
        let mut trans = vec![0; n];
        trans[0] = 1;
        trans[n - 1] = -1;
        Self {
            trans,
            perm: Perm::transposition(n, 1, n),
        }
    }

    pub fn pi(n: usize) -> Self {
        let mut trans = vec![0; n];
        if n > 0 {
            trans[0] = 1;
        }
        let cycle: Vec<usize> = (0..n).map(|j| (j + 1) % n + 1).collect();
        Self {
            trans,
            perm: Perm::from_one_line(&cycle).expect("cycle is a permutation"),
        }
    }

    pub fn pi_pow(n: usize, k: i32) -> Self {
        let base = if k >= 0 { Self::pi(n) } else { Self::pi(n).inverse() };
        (0..k.unsigned_abs()).fold(Self::identity(n), |acc, _| acc.mul(&base))
    }

    pub fn n(&self) -> usize {
        self.perm.n()
    }

    pub fn trans(&self) -> &[i32] {
        &self.trans
    }

    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::SizeMismatch {
                expected: self.n(),
                got: other.n(),
            });
        }
        Ok(self.mul(other))
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let moved = self.perm.act(&other.trans);
        Self {
            trans: self.trans.iter().zip(&moved).map(|(a, b)| a + b).collect(),
            perm: self.perm.compose(&other.perm),
        }
    }

    pub fn inverse(&self) -> Self {
        let inv = self.perm.inverse();
        Self {
            trans: inv.act(&self.trans).iter().map(|x| -x).collect(),
            perm: inv,
        }
    }

    /// Iwahori-Matsumoto length:
    /// `sum_{i<j} |mu_i - mu_j - [w^-1(i) > w^-1(j)]|`.
    pub fn length(&self) -> usize {
        let n = self.n();
        let inv = self.perm.inverse();
        let mut total = 0;
        for i in 0..n {
            for j in i + 1..n {
                let chi = i32::from(inv.apply(i) > inv.apply(j));
                total += (self.trans[i] - self.trans[j] - chi).unsigned_abs() as usize;
            }
        }
        total
    }

    /// The integer `k` with `self` in the coset `W_aff pi^k`.
    pub fn pi_exponent(&self) -> i32 {
        self.trans.iter().sum()
    }

    pub fn left_mul_s(&self, i: usize) -> Self {
        Self::s(self.n(), i).mul(self)
    }

    pub fn right_mul_s(&self, i: usize) -> Self {
        self.mul(&Self::s(self.n(), i))
    }

    pub fn has_left_descent(&self, i: usize) -> bool {
        self.left_mul_s(i).length() < self.length()
    }

    /// Lexicographically smallest reduced word `[i_1, ..., i_l]` and the
    /// exponent `k` with `self = s_{i_1} ... s_{i_l} pi^k`.
    pub fn reduced_word(&self) -> (Vec<usize>, i32) {
        let n = self.n();
        let mut word = Vec::new();
        let mut cur = self.clone();
        if n >= 2 {
            while let Some(i) = (0..n).find(|&i| cur.has_left_descent(i)) {
                word.push(i);
                cur = cur.left_mul_s(i);
            }
        }
        (word, self.pi_exponent())
    }

    /// `s_{word[0]} ... s_{word[l-1]} pi^k`.
    pub fn from_word(n: usize, word: &[usize], k: i32) -> Self {
        let mut out = Self::identity(n);
        for &i in word {
            out = out.right_mul_s(i);
        }
        out.mul(&Self::pi_pow(n, k))
    }

    /// The element `self * pi^-k` of the non-extended affine Weyl group.
    pub fn affine_part(&self) -> Self {
        self.mul(&Self::pi_pow(self.n(), -self.pi_exponent()))
    }
}

/// All `y <= b` in Bruhat order, as subword products of a reduced word.
pub fn bruhat_interval_below(b: &ExtAffineElem, guard: usize) -> Result<BTreeSet<ExtAffineElem>> {
    let n = b.n();
    let (word, k) = b.reduced_word();
    let mut set: HashSet<ExtAffineElem> = HashSet::from([ExtAffineElem::identity(n)]);
    for &i in &word {
        let extra: Vec<_> = set.iter().map(|x| x.right_mul_s(i)).collect();
        set.extend(extra);
        if set.len() > guard {
            return Err(Error::GuardExceeded {
                what: "Bruhat interval",
                needed: set.len(),
                limit: guard,
            });
        }
    }
    let tail = ExtAffineElem::pi_pow(n, k);
    Ok(set.into_iter().map(|x| x.mul(&tail)).collect())
}

/// Bruhat order; elements of different `pi`-cosets are incomparable.
pub fn bruhat_leq(a: &ExtAffineElem, b: &ExtAffineElem, guard: usize) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: b.n(),
            got: a.n(),
        });
    }
    if a.pi_exponent() != b.pi_exponent() || a.length() > b.length() {
        return Ok(false);
    }
    if a.length() == b.length() {
        return Ok(a == b);
    }
    Ok(bruhat_interval_below(b, guard)?.contains(a))
}

/// Every element of length at most `max_len` whose `pi`-exponent lies in
/// `window`, sorted by length then by value.
pub fn enumerate_ball(
    n: usize,
    max_len: usize,
    window: RangeInclusive<i32>,
    guard: usize,
) -> Result<Vec<ExtAffineElem>> {
    let mut seen: HashSet<ExtAffineElem> = HashSet::new();
    let mut frontier: Vec<ExtAffineElem> = window.map(|k| ExtAffineElem::pi_pow(n, k)).collect();
    seen.extend(frontier.iter().cloned());
    for len in 0..max_len {
        if n < 2 {
            break;
        }
        let mut next = Vec::new();
        for x in &frontier {
            for i in 0..n {
                let y = x.left_mul_s(i);
                if y.length() == len + 1 && seen.insert(y.clone()) {
                    next.push(y);
                }
            }
        }
        if seen.len() > guard {
            return Err(Error::GuardExceeded {
                what: "Bruhat ball",
                needed: seen.len(),
                limit: guard,
            });
        }
        frontier = next;
    }
    let mut out: Vec<_> = seen.into_iter().collect();
    out.sort_by_key(|x| (x.length(), x.clone()));
    Ok(out)
}

impl fmt::Display for ExtAffineElem {
    /// `t[1,0]*s1`, with either factor dropped when trivial and `e` for the
    /// identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.trans.iter().any(|&x| x != 0) {
            let t: Vec<String> = self.trans.iter().map(|x| x.to_string()).collect();
            parts.push(format!("t[{}]", t.join(",")));
        }
        for i in self.perm.reduced_word() {
            parts.push(format!("s{i}"));
        }
        if parts.is_empty() {
            write!(f, "e")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

impl fmt::Debug for ExtAffineElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeMap, VecDeque};

    fn e(n: usize) -> ExtAffineElem {
        ExtAffineElem::identity(n)
    }

    /// Word-metric distance from the length-zero elements, by breadth-first
    /// search over left multiplication by the affine generators.
    fn bfs_lengths(n: usize, radius: usize, window: RangeInclusive<i32>) -> BTreeMap<ExtAffineElem, usize> {
        let mut dist = BTreeMap::new();
        let mut queue = VecDeque::new();
        for k in window {
            let p = (0..k.unsigned_abs()).fold(e(n), |acc, _| {
                let base = ExtAffineElem::pi(n);
                acc.mul(&if k > 0 { base } else { base.inverse() })
            });
            dist.insert(p.clone(), 0);
            queue.push_back(p);
        }
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            if d == radius {
                continue;
            }
            for i in 0..n {
                let y = ExtAffineElem::s(n, i).mul(&x);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    #[test]
    fn semidirect_product_examples() {
        let s1 = ExtAffineElem::s(2, 1);
        assert_eq!(s1.mul(&s1), e(2));
        let t1 = ExtAffineElem::translation(&[1, 0]);
        let t2 = ExtAffineElem::translation(&[0, 1]);
        assert_eq!(t1.mul(&t2), ExtAffineElem::translation(&[1, 1]));
        let lhs = s1.mul(&t1);
        assert_eq!(lhs, ExtAffineElem::new(vec![0, 1], Perm::s(2, 1)).unwrap());
        assert_eq!(s1.mul(&t1).mul(&s1.inverse()), t2);
    }

    #[test]
    fn pi_conjugates_generators_cyclically() {
        for n in 2..=4 {
            let pi = ExtAffineElem::pi(n);
            for i in 0..n {
                let lhs = pi.mul(&ExtAffineElem::s(n, i)).mul(&pi.inverse());
                assert_eq!(lhs, ExtAffineElem::s(n, (i + 1) % n), "n={n} i={i}");
            }
            assert_eq!(pi.length(), 0);
            assert_eq!(
                ExtAffineElem::pi_pow(n, n as i32),
                ExtAffineElem::translation(&vec![1; n])
            );
        }
    }

    #[test]
    fn coxeter_relations() {
        for n in 3..=4 {
            for i in 0..n {
                let s = ExtAffineElem::s(n, i);
                assert_eq!(s.mul(&s), e(n));
                let t = ExtAffineElem::s(n, (i + 1) % n);
                assert_eq!(s.mul(&t).mul(&s), t.mul(&s).mul(&t));
            }
        }
    }

    #[test]
    fn length_examples() {
        assert_eq!(ExtAffineElem::s(3, 1).length(), 1);
        assert_eq!(ExtAffineElem::s(3, 0).length(), 1);
        assert_eq!(ExtAffineElem::translation(&[1, 0]).length(), 1);
        for k in -3..=3 {
            assert_eq!(ExtAffineElem::pi_pow(3, k).length(), 0);
        }
    }

    #[test]
    fn closed_form_length_matches_bfs() {
        for n in 2..=3 {
            let bfs = bfs_lengths(n, 6, -1..=1);
            for (x, d) in &bfs {
                assert_eq!(x.length(), *d, "{x}");
            }
            let ball = enumerate_ball(n, 6, -1..=1, DEFAULT_GUARD).unwrap();
            let ball: BTreeSet<_> = ball.into_iter().collect();
            let bfs_set: BTreeSet<_> = bfs.keys().cloned().collect();
            assert_eq!(ball, bfs_set);
        }
    }

    #[test]
    fn finite_part_length_is_inversions() {
        for w in Perm::all(4) {
            assert_eq!(ExtAffineElem::from_perm(w.clone()).length(), w.length());
        }
    }

    #[test]
    fn length_is_subadditive() {
        for n in 2..=3 {
            let ball = enumerate_ball(n, 4, -1..=1, DEFAULT_GUARD).unwrap();
            let small: Vec<_> = ball.iter().filter(|x| x.length() <= 2).collect();
            for a in &small {
                for b in &ball {
                    let ab = a.mul(b);
                    assert!(ab.length() <= a.length() + b.length());
                    let (wa, ka) = a.reduced_word();
                    let (wb, kb) = b.reduced_word();
                    // a b = s(wa) pi^ka s(wb) pi^kb = s(wa) s(wb shifted) pi^(ka+kb)
                    let shifted: Vec<usize> = wb
                        .iter()
                        .map(|&i| (i as i32 + ka).rem_euclid(n as i32) as usize)
                        .collect();
                    let concat: Vec<usize> = wa.iter().chain(&shifted).copied().collect();
                    assert_eq!(ExtAffineElem::from_word(n, &concat, ka + kb), ab);
                    let stays_reduced = ExtAffineElem::from_word(n, &concat, 0).length() == concat.len();
                    assert_eq!(ab.length() == a.length() + b.length(), stays_reduced);
                }
            }
        }
    }

    #[test]
    fn decomposition_round_trips() {
        for x in enumerate_ball(3, 4, -2..=2, DEFAULT_GUARD).unwrap() {
            let t = ExtAffineElem::translation(x.trans());
            let w = ExtAffineElem::from_perm(x.perm().clone());
            assert_eq!(t.mul(&w), x);
            let (word, k) = x.reduced_word();
            assert_eq!(word.len(), x.length());
            assert_eq!(ExtAffineElem::from_word(3, &word, k), x);
            assert_eq!(x.mul(&x.inverse()), e(3));
        }
    }

    #[test]
    fn ball_examples() {
        let b0 = enumerate_ball(2, 0, -2..=2, DEFAULT_GUARD).unwrap();
        assert_eq!(b0.len(), 5);
        assert!(b0.iter().all(|x| x.length() == 0));
        let b1: BTreeSet<_> = enumerate_ball(2, 1, 0..=0, DEFAULT_GUARD)
            .unwrap()
            .into_iter()
            .collect();
        let expect: BTreeSet<_> = [e(2), ExtAffineElem::s(2, 1), ExtAffineElem::s(2, 0)]
            .into_iter()
            .collect();
        assert_eq!(b1, expect);
        let mut prev = 0;
        for len in 0..6 {
            let size = enumerate_ball(3, len, -1..=1, DEFAULT_GUARD).unwrap().len();
            assert!(size > prev);
            prev = size;
        }
        assert!(enumerate_ball(3, 12, -1..=1, 100).is_err());
    }

    fn brute_subwords(b: &ExtAffineElem) -> BTreeSet<ExtAffineElem> {
        let n = b.n();
        let (word, k) = b.reduced_word();
        let mut out = BTreeSet::new();
        for mask in 0u32..(1 << word.len()) {
            let sub: Vec<usize> = word
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            out.insert(ExtAffineElem::from_word(n, &sub, k));
        }
        out
    }

    #[test]
    fn bruhat_matches_brute_subwords() {
        for n in 2..=3 {
            let ball = enumerate_ball(n, 4, -1..=1, DEFAULT_GUARD).unwrap();
            for b in &ball {
                let below = brute_subwords(b);
                assert_eq!(bruhat_interval_below(b, DEFAULT_GUARD).unwrap(), below);
                for a in &ball {
                    assert_eq!(bruhat_leq(a, b, DEFAULT_GUARD).unwrap(), below.contains(a));
                }
            }
        }
    }

    #[test]
    fn bruhat_examples() {
        let s1 = ExtAffineElem::s(3, 1);
        let s1s2 = s1.mul(&ExtAffineElem::s(3, 2));
        assert!(bruhat_leq(&s1, &s1s2, DEFAULT_GUARD).unwrap());
        assert!(!bruhat_leq(&s1s2, &s1, DEFAULT_GUARD).unwrap());
        let ball = enumerate_ball(2, 4, -1..=1, DEFAULT_GUARD).unwrap();
        for b in ball.iter().filter(|b| b.pi_exponent() == 0) {
            assert!(bruhat_leq(&e(2), b, DEFAULT_GUARD).unwrap());
        }
        for a in &ball {
            for b in &ball {
                if bruhat_leq(a, b, DEFAULT_GUARD).unwrap() && bruhat_leq(b, a, DEFAULT_GUARD).unwrap() {
                    assert_eq!(a, b);
                }
            }
        }
        let pi = ExtAffineElem::pi(2);
        assert!(!bruhat_leq(&e(2), &pi, DEFAULT_GUARD).unwrap());
    }

    #[test]
    fn rank_one_is_the_integers() {
        let pi = ExtAffineElem::pi(1);
        assert_eq!(pi, ExtAffineElem::translation(&[1]));
        assert_eq!(pi.length(), 0);
        assert_eq!(pi.reduced_word(), (vec![], 1));
        assert_eq!(enumerate_ball(1, 3, -2..=2, DEFAULT_GUARD).unwrap().len(), 5);
    }

    #[test]
    fn rendering() {
        let x = ExtAffineElem::new(vec![1, 0], Perm::s(2, 1)).unwrap();
        assert_eq!(x.to_string(), "t[1,0]*s1");
        assert_eq!(e(3).to_string(), "e");
    }
}
