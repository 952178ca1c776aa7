use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::Laurent;
use crate::combinatorics::Perm;
use crate::error::{Error, Result};

/// An element of the extended affine Hecke algebra in the basis
/// `Z^a T_w`.
#[derive(Clone, PartialEq, Eq)]
pub struct BernsteinElem {
    n: usize,
    terms: BTreeMap<(Vec<i32>, Perm), Laurent>,
}

fn c() -> Laurent {
    Laurent::q_minus_qinv()
}

impl BernsteinElem {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(a: Vec<i32>, w: Perm, coeff: Laurent) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(a, w, coeff);
        out
    }

    pub fn one(n: usize) -> Self {
        Self::monomial(vec![0; n], Perm::identity(n), Laurent::one())
    }

    /// `Z^a`.
    pub fn z_monomial(a: &[i32]) -> Self {
        Self::monomial(a.to_vec(), Perm::identity(a.len()), Laurent::one())
    }

    /// `Z_j^e`, 1-based `j`.
    pub fn z(n: usize, j: usize, e: i32) -> Self {
        let mut a = vec![0; n];
        a[j - 1] = e;
        Self::z_monomial(&a)
    }

    pub fn t(n: usize, i: usize) -> Self {
        Self::t_w(Perm::s(n, i))
    }

    pub fn t_w(w: Perm) -> Self {
        Self::monomial(vec![0; w.n()], w, Laurent::one())
    }

    /// `T_i^-1 = T_i - (q - q^-1)`.
    pub fn t_inv(n: usize, i: usize) -> Self {
        let mut out = Self::t(n, i);
        out.add_term(vec![0; n], Perm::identity(n), -c());
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &Perm, &Laurent)> {
        self.terms.iter().map(|((a, w), k)| (a.as_slice(), w, k))
    }

    pub fn coeff(&self, a: &[i32], w: &Perm) -> Laurent {
        self.terms.get(&(a.to_vec(), w.clone())).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, a: Vec<i32>, w: Perm, k: Laurent) {
        if k.is_zero() {
            return;
        }
        let key = (a, w);
        let slot = self.terms.entry(key.clone()).or_default();
        *slot += &k;
        if slot.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn scale(&self, k: &Laurent) -> Self {
        let mut out = Self::zero(self.n);
        for ((a, w), v) in &self.terms {
            out.add_term(a.clone(), w.clone(), v * k);
        }
        out
    }

    /// `Z^a * self`.
    pub fn left_z(&self, a: &[i32]) -> Self {
        let mut out = Self::zero(self.n);
        for ((b, w), v) in &self.terms {
            let sum = a.iter().zip(b).map(|(x, y)| x + y).collect();
            out.add_term(sum, w.clone(), v.clone());
        }
        out
    }

    /// `T_i * self`.
    pub fn left_t(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for ((b, v), k) in &self.terms {
            for ((b2, has_t), kk) in commute(i, b) {
                let kk = &kk * k;
                if !has_t {
                    out.add_term(b2, v.clone(), kk);
                    continue;
                }
                let sv = v.left_mul_s(i);
                if sv.length() < v.length() {
                    out.add_term(b2.clone(), v.clone(), &kk * &c());
                }
                out.add_term(b2, sv, kk);
            }
        }
        out
    }

    /// `T_i^-1 * self`.
    pub fn left_t_inv(&self, i: usize) -> Self {
        &self.left_t(i) - &self.scale(&c())
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        let mut out = Self::zero(self.n);
        for ((a, u), k) in &self.terms {
            let mut acc = rhs.clone();
            for &i in u.reduced_word().iter().rev() {
                acc = acc.left_t(i);
            }
            out += &acc.left_z(a).scale(k);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("size mismatch")
    }

    /// The bar involution, computed from `q -> q^-1`, `T_i -> T_i^-1` and the
    /// image of `Z_1` forced by `Z_1 = T_pi T_{n-1}^-1 ... T_1^-1`.
    pub fn bar(&self) -> Self {
        let n = self.n;
        let (zs, zis) = bar_z_images(n);
        let mut out = Self::zero(n);
        for ((a, w), k) in &self.terms {
            let mut acc = Self::one(n);
            for (j, &e) in a.iter().enumerate() {
                let f = if e >= 0 { &zs[j] } else { &zis[j] };
                for _ in 0..e.unsigned_abs() {
                    acc = acc.mul(f);
                }
            }
            for &i in &w.reduced_word() {
                acc = acc.mul(&Self::t_inv(n, i));
            }
            out += &acc.scale(&k.bar());
        }
        out
    }
}

/// `bar(Z_j)` and `bar(Z_j^-1)` for every `j`.
fn bar_z_images(n: usize) -> (Vec<BernsteinElem>, Vec<BernsteinElem>) {
    let t = |i| BernsteinElem::t(n, i);
    let ti = |i| BernsteinElem::t_inv(n, i);
    let mut z1 = BernsteinElem::z(n, 1, 1);
    let mut z1i = BernsteinElem::one(n);
    for i in 1..n {
        z1 = z1.mul(&t(i));
        z1i = z1i.mul(&ti(i));
    }
    for i in (1..n).rev() {
        z1 = z1.mul(&t(i));
        z1i = z1i.mul(&ti(i));
    }
    z1i = z1i.mul(&BernsteinElem::z(n, 1, -1));
    let mut zs = vec![z1];
    let mut zis = vec![z1i];
    for j in 1..n {
        zs.push(ti(j).mul(&zs[j - 1]).mul(&ti(j)));
        zis.push(t(j).mul(&zis[j - 1]).mul(&t(j)));
    }
    (zs, zis)
}

/// `T_i Z^b` as a sum of `Z^b' T_i` (flag `true`) and `Z^b'` (flag `false`),
/// moving one factor `Z_j^{+-1}` at a time.
fn commute(i: usize, b: &[i32]) -> BTreeMap<(Vec<i32>, bool), Laurent> {
    let mut out = BTreeMap::new();
    let Some(j) = b.iter().position(|&e| e != 0) else {
        out.insert((b.to_vec(), true), Laurent::one());
        return out;
    };
    let e = b[j].signum();
    let mut rest = b.to_vec();
    rest[j] -= e;
    let (x, y) = (i - 1, i);
    // T_i Z_j^e = Z_{j'}^e T_i + k Z_m^e
    let (moved, corr) = match (j, e) {
        (j, _) if j != x && j != y => (j, None),
        (j, 1) if j == x => (y, Some((y, -c()))),
        (_, 1) => (x, Some((y, c()))),
        (j, _) if j == x => (y, Some((x, c()))),
        _ => (x, Some((x, -c()))),
    };
    let put = |out: &mut BTreeMap<(Vec<i32>, bool), Laurent>, key: (Vec<i32>, bool), k: Laurent| {
        let slot = out.entry(key.clone()).or_default();
        *slot += &k;
        if slot.is_zero() {
            out.remove(&key);
        }
    };
    for ((mut b2, has_t), k) in commute(i, &rest) {
        b2[moved] += e;
        put(&mut out, (b2, has_t), k);
    }
    if let Some((m, k)) = corr {
        let mut b2 = rest;
        b2[m] += e;
        put(&mut out, (b2, false), k);
    }
    out
}

impl std::ops::AddAssign<&BernsteinElem> for BernsteinElem {
    fn add_assign(&mut self, rhs: &BernsteinElem) {
        assert_eq!(self.n, rhs.n, "size mismatch");
        for ((a, w), k) in &rhs.terms {
            self.add_term(a.clone(), w.clone(), k.clone());
        }
    }
}

impl std::ops::SubAssign<&BernsteinElem> for BernsteinElem {
    fn sub_assign(&mut self, rhs: &BernsteinElem) {
        assert_eq!(self.n, rhs.n, "size mismatch");
        for ((a, w), k) in &rhs.terms {
            self.add_term(a.clone(), w.clone(), -k);
        }
    }
}

impl std::ops::Add for &BernsteinElem {
    type Output = BernsteinElem;
    fn add(self, rhs: Self) -> BernsteinElem {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &BernsteinElem {
    type Output = BernsteinElem;
    fn sub(self, rhs: Self) -> BernsteinElem {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Mul for &BernsteinElem {
    type Output = BernsteinElem;
    fn mul(self, rhs: Self) -> BernsteinElem {
        BernsteinElem::mul(self, rhs)
    }
}

impl fmt::Display for BernsteinElem {
    /// Monomials as `Z[a1,...,an] T[w]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((a, w), k)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let a: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            write!(f, "({k})*Z[{}] T{w}", a.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BernsteinElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bernstein[{}]{{{self}}}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type B = BernsteinElem;

    #[test]
    fn quadratic_relation() {
        let t = B::t(2, 1);
        let expect = &B::one(2) + &t.scale(&c());
        assert_eq!(&t * &t, expect);
        assert_eq!(&t * &B::t_inv(2, 1), B::one(2));
    }

    #[test]
    fn conjugation_gives_next_z() {
        for n in 2..=4 {
            for i in 1..n {
                let t = B::t(n, i);
                assert_eq!(&(&t * &B::z(n, i, 1)) * &t, B::z(n, i + 1, 1));
                let ti = B::t_inv(n, i);
                assert_eq!(&(&ti * &B::z(n, i, -1)) * &ti, B::z(n, i + 1, -1));
            }
        }
    }

    #[test]
    fn symmetric_z_is_central() {
        let s = B::z_monomial(&[1, 1]);
        let t = B::t(2, 1);
        assert_eq!(&s * &t, &t * &s);
        let s = &B::z(3, 1, 2) + &(&B::z(3, 2, 2) + &B::z(3, 3, 2));
        for i in 1..3 {
            assert_eq!(&s * &B::t(3, i), &B::t(3, i) * &s);
        }
    }

    #[test]
    fn commutation_rules() {
        let n = 3;
        let t = B::t(n, 1);
        let lhs = &t * &B::z(n, 2, 1);
        let rhs = &(&B::z(n, 1, 1) * &t) + &B::z(n, 2, 1).scale(&c());
        assert_eq!(lhs, rhs);
        assert_eq!(&t * &B::z(n, 3, -2), &B::z(n, 3, -2) * &t);
    }

    #[test]
    fn bar_examples() {
        assert_eq!(B::t(2, 1).bar(), B::t_inv(2, 1));
        assert_eq!(
            B::one(2).scale(&Laurent::q()).bar(),
            B::one(2).scale(&Laurent::monomial(1, -1))
        );
        for n in 1..=3 {
            for j in 1..=n {
                let z = B::z(n, j, 1);
                assert_eq!(z.bar().bar(), z);
                assert_eq!(&z.bar() * &B::z(n, j, -1).bar(), B::one(n));
            }
        }
    }
}
