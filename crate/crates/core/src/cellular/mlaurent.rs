use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::Laurent;

/// A Laurent polynomial over `Z` in `nvars` variables `x_1, ..., x_k`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i32>, i64>,
}

impl MLaurent {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: i64) -> Self {
        let mut out = Self::zero(nvars);
        out.add_term(vec![0; nvars], c);
        out
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    /// `c * x^e`.
    pub fn monomial(e: Vec<i32>, c: i64) -> Self {
        let mut out = Self::zero(e.len());
        out.add_term(e, c);
        out
    }

    /// `x_j^e`, 0-based `j`.
    pub fn var(nvars: usize, j: usize, e: i32) -> Self {
        let mut v = vec![0; nvars];
        v[j] = e;
        Self::monomial(v, 1)
    }

    /// The one-variable ring `Z[q, q^-1]`.
    pub fn from_laurent(a: &Laurent) -> Self {
        let mut out = Self::zero(1);
        for (e, c) in a.terms() {
            out.add_term(vec![e], c);
        }
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn add_term(&mut self, e: Vec<i32>, c: i64) {
        assert_eq!(e.len(), self.nvars, "variable count");
        if c == 0 {
            return;
        }
        let slot = self.terms.entry(e.clone()).or_insert(0);
        *slot += c;
        if *slot == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in rhs.terms() {
            out.add_term(e.to_vec(), c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, &c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = Self::zero(self.nvars);
        for (a, c) in self.terms() {
            for (b, d) in rhs.terms() {
                out.add_term(a.iter().zip(b).map(|(x, y)| x + y).collect(), c * d);
            }
        }
        out
    }

    /// Places the variables at `offset..offset + nvars` of a ring with
    /// `total` variables.
    pub fn embed(&self, total: usize, offset: usize) -> Self {
        let mut out = Self::zero(total);
        for (e, c) in self.terms() {
            let mut v = vec![0; total];
            v[offset..offset + self.nvars].copy_from_slice(e);
            out.add_term(v, c);
        }
        out
    }
}

impl fmt::Display for MLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (j, &k) in e.iter().enumerate() {
                if k != 0 {
                    write!(f, "*x{}^{k}", j + 1)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MLaurent({self})")
    }
}

/// A ring endomorphism `x_i -> x_{p(i)}^{e_i}`, `e_i = +-1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sigma {
    images: Vec<(usize, i32)>,
}

impl Sigma {
    pub fn identity(nvars: usize) -> Self {
        Self {
            images: (0..nvars).map(|i| (i, 1)).collect(),
        }
    }

    pub fn invert_all(nvars: usize) -> Self {
        Self {
            images: (0..nvars).map(|i| (i, -1)).collect(),
        }
    }

    pub fn permute(p: &[usize]) -> Self {
        Self {
            images: p.iter().map(|&j| (j, 1)).collect(),
        }
    }

    pub fn new(images: Vec<(usize, i32)>) -> Self {
        Self { images }
    }

    pub fn nvars(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[(usize, i32)] {
        &self.images
    }

    /// Whether this is a well-defined ring involution.
    pub fn is_involution(&self) -> bool {
        let k = self.images.len();
        self.images
            .iter()
            .enumerate()
            .all(|(i, &(j, e))| j < k && (e == 1 || e == -1) && self.images[j].0 == i && self.images[j].1 == e)
    }

    pub fn apply(&self, a: &MLaurent) -> MLaurent {
        assert_eq!(a.nvars(), self.nvars(), "variable count");
        let mut out = MLaurent::zero(a.nvars());
        for (e, c) in a.terms() {
            let mut v = vec![0; e.len()];
            for (i, &k) in e.iter().enumerate() {
                let (j, s) = self.images[i];
                v[j] += s * k;
            }
            out.add_term(v, c);
        }
        out
    }

    /// `sigma_1 (x) sigma_2` on the disjoint union of the variables.
    pub fn tensor(&self, other: &Sigma) -> Sigma {
        let k = self.nvars();
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&(j, e)| (j + k, e)));
        Sigma { images }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let x = MLaurent::var(2, 0, 1);
        let y = MLaurent::var(2, 1, -1);
        let s = x.add(&y);
        let sq = s.mul(&s);
        let expect = MLaurent::monomial(vec![2, 0], 1)
            .add(&MLaurent::monomial(vec![1, -1], 2))
            .add(&MLaurent::monomial(vec![0, -2], 1));
        assert_eq!(sq, expect);
        assert!(s.sub(&s).is_zero());
        assert_eq!(
            MLaurent::from_laurent(&Laurent::q_minus_qinv()).to_string(),
            "-1*x1^-1 + 1*x1^1"
        );
    }

    #[test]
    fn involutions() {
        let a = MLaurent::monomial(vec![2, -1], 3).add(&MLaurent::constant(2, 1));
        for s in [Sigma::identity(2), Sigma::invert_all(2), Sigma::permute(&[1, 0])] {
            assert!(s.is_involution());
            assert_eq!(s.apply(&s.apply(&a)), a);
            let b = MLaurent::var(2, 1, 1);
            assert_eq!(s.apply(&a.mul(&b)), s.apply(&a).mul(&s.apply(&b)));
        }
        assert!(!Sigma::permute(&[1, 2, 0]).is_involution());
        assert!(!Sigma::new(vec![(1, 1), (0, -1)]).is_involution());
    }
}
