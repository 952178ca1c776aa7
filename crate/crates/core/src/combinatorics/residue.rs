use std::fmt;

use super::Perm;
use crate::error::{Error, Result};

/// An `n`-tuple of `r`-th roots of unity, encoded by indices `1..=r` where `k`
/// stands for `z^(k-1)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueTuple {
    r: u32,
    entries: Vec<u32>,
}

impl ResidueTuple {
    pub fn new(r: u32, entries: Vec<u32>) -> Result<Self> {
        if r == 0 || entries.iter().any(|&k| k == 0 || k > r) {
            return Err(Error::InvalidTuple(format!("{entries:?} with r={r}")));
        }
        Ok(Self { r, entries })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    /// Entry at a 1-based position.
    pub fn get(&self, j: usize) -> u32 {
        self.entries[j - 1]
    }

    /// All `r^n` tuples in lexicographic order.
    pub fn all(r: u32, n: usize) -> Vec<ResidueTuple> {
        let mut out = vec![Vec::with_capacity(n)];
        for _ in 0..n {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (1..=r).map(move |k| {
                        let mut v = prefix.clone();
                        v.push(k);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|entries| Self { r, entries }).collect()
    }

    /// Weakly increasing tuples: one per `S_n`-orbit.
    pub fn all_sorted(r: u32, n: usize) -> Vec<ResidueTuple> {
        Self::all(r, n).into_iter().filter(|t| t.is_sorted()).collect()
    }

    pub fn is_sorted(&self) -> bool {
        self.entries.windows(2).all(|p| p[0] <= p[1])
    }

    /// `w . self`.
    pub fn act(&self, w: &Perm) -> ResidueTuple {
        Self {
            r: self.r,
            entries: w.act(&self.entries),
        }
    }

    /// `s_i . self`, 1-based.
    pub fn swap(&self, i: usize) -> ResidueTuple {
        let mut entries = self.entries.clone();
        entries.swap(i - 1, i);
        Self { r: self.r, entries }
    }

    /// `{i : self_i = self_{i+1}}`.
    pub fn young_stabilizer(&self) -> Vec<usize> {
        (1..self.n()).filter(|&i| self.get(i) == self.get(i + 1)).collect()
    }

    /// Whether `w` fixes this tuple.
    pub fn is_fixed_by(&self, w: &Perm) -> bool {
        self.act(w) == *self
    }

    /// Multiplicities `(n_1, ..., n_r)` of each residue.
    pub fn block_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.r as usize];
        for &k in &self.entries {
            out[k as usize - 1] += 1;
        }
        out
    }

    /// The sorted representative and the orbit size `n! / (n_1! ... n_r!)`.
    pub fn orbit_rep(&self) -> (ResidueTuple, usize) {
        let mut entries = self.entries.clone();
        entries.sort_unstable();
        let size = multinomial(&self.block_sizes());
        (Self { r: self.r, entries }, size)
    }

    /// The orbit `S_n . self` in lexicographic order.
    pub fn orbit(&self) -> Vec<ResidueTuple> {
        let (rep, _) = self.orbit_rep();
        Self::all(self.r, self.n())
            .into_iter()
            .filter(|t| t.orbit_rep().0 == rep)
            .collect()
    }
}

/// `(sum k_i)! / prod k_i!`.
pub fn multinomial(parts: &[usize]) -> usize {
    let mut acc = 1usize;
    let mut total = 0usize;
    for &k in parts {
        for j in 1..=k {
            total += 1;
            acc = acc * total / j;
        }
    }
    acc
}

pub fn factorial(n: usize) -> usize {
    (1..=n).product()
}

impl fmt::Display for ResidueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for ResidueTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(r: u32, e: &[u32]) -> ResidueTuple {
        ResidueTuple::new(r, e.to_vec()).unwrap()
    }

    #[test]
    fn stabilizer_examples() {
        assert_eq!(t(2, &[1, 1]).young_stabilizer(), vec![1]);
        assert!(t(2, &[1, 2]).young_stabilizer().is_empty());
        assert_eq!(t(2, &[1, 1, 2, 2]).young_stabilizer(), vec![1, 3]);
    }

    #[test]
    fn orbit_rep_examples() {
        assert_eq!(t(2, &[2, 1]).orbit_rep(), (t(2, &[1, 2]), 2));
        assert_eq!(t(2, &[1, 1]).orbit_rep(), (t(2, &[1, 1]), 1));
        assert_eq!(t(2, &[2, 1, 1]).orbit_rep(), (t(2, &[1, 1, 2]), 3));
    }

    #[test]
    fn orbit_sizes_match_enumeration() {
        for r in 1..=3 {
            for n in 0..=4 {
                let mut total = 0;
                for rep in ResidueTuple::all_sorted(r, n) {
                    let orbit: std::collections::BTreeSet<_> = Perm::all(n).iter().map(|w| rep.act(w)).collect();
                    assert_eq!(orbit.len(), rep.orbit_rep().1);
                    assert_eq!(orbit.into_iter().collect::<Vec<_>>(), rep.orbit());
                    total += rep.orbit_rep().1;
                }
                assert_eq!(total, (r as usize).pow(n as u32));
            }
        }
    }

    #[test]
    fn same_orbit_iff_same_multiset() {
        let all = ResidueTuple::all(2, 3);
        for a in &all {
            for b in &all {
                let in_orbit = Perm::all(3).iter().any(|w| a.act(w) == *b);
                let mut sa = a.entries().to_vec();
                let mut sb = b.entries().to_vec();
                sa.sort();
                sb.sort();
                assert_eq!(in_orbit, sa == sb);
            }
        }
    }

    #[test]
    fn stabilizer_of_sorted_tuple_is_generated_by_stabilizer_generators() {
        for r in 1..=3 {
            for n in 1..=3 {
                for lam in ResidueTuple::all_sorted(r, n) {
                    let gens = lam.young_stabilizer();
                    let fixed: Vec<_> = Perm::all(n).into_iter().filter(|w| lam.is_fixed_by(w)).collect();
                    for w in &fixed {
                        assert!(w.reduced_word().iter().all(|i| gens.contains(i)));
                    }
                    let prod: usize = lam.block_sizes().iter().map(|&k| factorial(k)).product();
                    assert_eq!(fixed.len(), prod);
                }
            }
        }
    }

    #[test]
    fn stabilizers_of_general_tuples_are_conjugate() {
        for lam in ResidueTuple::all(2, 3) {
            let fixed: Vec<_> = Perm::all(3).into_iter().filter(|w| lam.is_fixed_by(w)).collect();
            let (rep, _) = lam.orbit_rep();
            let u = Perm::all(3).into_iter().find(|u| rep.act(u) == lam).unwrap();
            for w in &fixed {
                let c = u.inverse().compose(w).compose(&u);
                assert!(c.reduced_word().iter().all(|i| rep.young_stabilizer().contains(i)));
            }
        }
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(ResidueTuple::new(2, vec![1, 3]).is_err());
        assert!(ResidueTuple::new(2, vec![0]).is_err());
        assert_eq!(t(2, &[1, 2, 1]).to_string(), "(1,2,1)");
    }
}
