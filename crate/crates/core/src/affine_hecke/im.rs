use std::collections::BTreeMap;
use std::fmt;

use super::BernsteinElem;
use crate::coeffs::Laurent;
use crate::combinatorics::{ExtAffineElem, Perm};
use crate::error::{Error, Result};

/// An element of the extended affine Hecke algebra in the basis `T_w`,
/// `w` in the extended affine Weyl group.
#[derive(Clone, PartialEq, Eq)]
pub struct IMExpansion {
    n: usize,
    terms: BTreeMap<ExtAffineElem, Laurent>,
}

fn c() -> Laurent {
    Laurent::q_minus_qinv()
}

impl IMExpansion {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(w: ExtAffineElem) -> Self {
        let mut out = Self::zero(w.n());
        out.add_term(w, Laurent::one());
        out
    }

    pub fn one(n: usize) -> Self {
        Self::basis(ExtAffineElem::identity(n))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExtAffineElem, Laurent)>) -> Self {
        let mut out = Self::zero(n);
        for (w, k) in terms {
            out.add_term(w, k);
        }
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

    pub fn terms(&self) -> &BTreeMap<ExtAffineElem, Laurent> {
        &self.terms
    }

    pub fn coeff(&self, w: &ExtAffineElem) -> Laurent {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, w: ExtAffineElem, k: Laurent) {
        if k.is_zero() {
            return;
        }
        let slot = self.terms.entry(w.clone()).or_default();
        *slot += &k;
        if slot.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn scale(&self, k: &Laurent) -> Self {
        Self::from_terms(self.n, self.terms.iter().map(|(w, v)| (w.clone(), v * k)))
    }

    /// `T_{s_i} * self`, `0 <= i < n`.
    pub fn left_s(&self, i: usize) -> Self {
        let mut out = Self::zero(self.n);
        for (w, k) in &self.terms {
            let sw = w.left_mul_s(i);
            if sw.length() < w.length() {
                out.add_term(w.clone(), k * &c());
            }
            out.add_term(sw, k.clone());
        }
        out
    }

    pub fn left_s_inv(&self, i: usize) -> Self {
        &self.left_s(i) - &self.scale(&c())
    }

    /// `T_pi^k * self`.
    pub fn left_pi(&self, k: i32) -> Self {
        let p = ExtAffineElem::pi_pow(self.n, k);
        Self::from_terms(self.n, self.terms.iter().map(|(w, v)| (p.mul(w), v.clone())))
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.n != rhs.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: rhs.n,
            });
        }
        let mut out = Self::zero(self.n);
        for (x, k) in &self.terms {
            let (word, e) = x.reduced_word();
            let mut acc = rhs.left_pi(e);
            for &i in word.iter().rev() {
                acc = acc.left_s(i);
            }
            out += &acc.scale(k);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("size mismatch")
    }

    /// `bar(T_w) = T_{w^-1}^-1 = T_{i_1}^-1 ... T_{i_l}^-1 T_pi^k` for
    /// `w = s_{i_1} ... s_{i_l} pi^k`, extended semilinearly.
    pub fn bar(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (w, k) in &self.terms {
            out += &bar_of_basis(w).scale(&k.bar());
        }
        out
    }
}

pub fn bar_of_basis(w: &ExtAffineElem) -> IMExpansion {
    let (word, e) = w.reduced_word();
    let mut acc = IMExpansion::basis(ExtAffineElem::pi_pow(w.n(), e));
    for &i in word.iter().rev() {
        acc = acc.left_s_inv(i);
    }
    acc
}

/// Bernstein images of `T_pi` and `T_pi^-1`: `T_pi = Z_1 T_1 ... T_{n-1}`.
pub fn pi_bernstein(n: usize) -> (BernsteinElem, BernsteinElem) {
    let mut pi = BernsteinElem::z(n, 1, 1);
    let mut pi_inv = BernsteinElem::one(n);
    for i in 1..n {
        pi = pi.mul(&BernsteinElem::t(n, i));
    }
    for i in (1..n).rev() {
        pi_inv = pi_inv.mul(&BernsteinElem::t_inv(n, i));
    }
    pi_inv = pi_inv.mul(&BernsteinElem::z(n, 1, -1));
    (pi, pi_inv)
}

/// Bernstein image of `T_{s_i}`, with `T_0 = T_pi^-1 T_1 T_pi`.
pub fn s_bernstein(n: usize, i: usize) -> BernsteinElem {
    if i > 0 {
        return BernsteinElem::t(n, i);
    }
    let (pi, pi_inv) = pi_bernstein(n);
    pi_inv.mul(&BernsteinElem::t(n, 1)).mul(&pi)
}

/// Converts between the two bases of one algebra.
pub struct BasisChange {
    n: usize,
    pi: BernsteinElem,
    pi_inv: BernsteinElem,
    s0: Option<BernsteinElem>,
    z: Vec<IMExpansion>,
    z_inv: Vec<IMExpansion>,
}

impl BasisChange {
    pub fn new(n: usize) -> Self {
        let (pi, pi_inv) = pi_bernstein(n);
        let s0 = (n >= 2).then(|| s_bernstein(n, 0));
        let mut z = Vec::with_capacity(n);
        let mut z_inv = Vec::with_capacity(n);
        if n > 0 {
            let t = |i| IMExpansion::basis(ExtAffineElem::s(n, i));
            let ti = |i| IMExpansion::one(n).left_s_inv(i);
            let mut z1 = IMExpansion::basis(ExtAffineElem::pi(n));
            for i in (1..n).rev() {
                z1 = z1.mul(&ti(i));
            }
            let mut z1i = IMExpansion::one(n);
            for i in 1..n {
                z1i = z1i.mul(&t(i));
            }
            z1i = z1i.mul(&IMExpansion::basis(ExtAffineElem::pi_pow(n, -1)));
            z.push(z1);
            z_inv.push(z1i);
            for j in 1..n {
                let next = t(j).mul(&z[j - 1]).mul(&t(j));
                let next_inv = ti(j).mul(&z_inv[j - 1]).mul(&ti(j));
                z.push(next);
                z_inv.push(next_inv);
            }
        }
        Self {
            n,
            pi,
            pi_inv,
            s0,
            z,
            z_inv,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `T_w` in the Bernstein basis.
    pub fn basis_to_bernstein(&self, w: &ExtAffineElem) -> BernsteinElem {
        let n = self.n;
        let (word, e) = w.reduced_word();
        let p = if e >= 0 { &self.pi } else { &self.pi_inv };
        let mut acc = BernsteinElem::one(n);
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul(p);
        }
        for &i in word.iter().rev() {
            acc = match i {
                0 => self.s0.as_ref().expect("s_0 needs n >= 2").mul(&acc),
                i => acc.left_t(i),
            };
        }
        acc
    }

    pub fn to_bernstein(&self, x: &IMExpansion) -> BernsteinElem {
        let mut out = BernsteinElem::zero(self.n);
        for (w, k) in x.terms() {
            out += &self.basis_to_bernstein(w).scale(k);
        }
        out
    }

    /// `Z^a T_w` in the Iwahori-Matsumoto basis.
    pub fn monomial_to_im(&self, a: &[i32], w: &Perm) -> IMExpansion {
        let mut acc = IMExpansion::basis(ExtAffineElem::from_perm(w.clone()));
        for (j, &e) in a.iter().enumerate().rev() {
            let f = if e >= 0 { &self.z[j] } else { &self.z_inv[j] };
            for _ in 0..e.unsigned_abs() {
                acc = f.mul(&acc);
            }
        }
        acc
    }

    pub fn to_im(&self, x: &BernsteinElem) -> IMExpansion {
        let mut out = IMExpansion::zero(self.n);
        for (a, w, k) in x.terms() {
            out += &self.monomial_to_im(a, w).scale(k);
        }
        out
    }
}

impl std::ops::AddAssign<&IMExpansion> for IMExpansion {
    fn add_assign(&mut self, rhs: &IMExpansion) {
        assert_eq!(self.n, rhs.n, "size mismatch");
        for (w, k) in &rhs.terms {
            self.add_term(w.clone(), k.clone());
        }
    }
}

impl std::ops::SubAssign<&IMExpansion> for IMExpansion {
    fn sub_assign(&mut self, rhs: &IMExpansion) {
        assert_eq!(self.n, rhs.n, "size mismatch");
        for (w, k) in &rhs.terms {
            self.add_term(w.clone(), -k);
        }
    }
}

impl std::ops::Add for &IMExpansion {
    type Output = IMExpansion;
    fn add(self, rhs: Self) -> IMExpansion {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &IMExpansion {
    type Output = IMExpansion;
    fn sub(self, rhs: Self) -> IMExpansion {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Mul for &IMExpansion {
    type Output = IMExpansion;
    fn mul(self, rhs: Self) -> IMExpansion {
        IMExpansion::mul(self, rhs)
    }
}

impl fmt::Display for IMExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (w, k)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({k})*T{{{w}}}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for IMExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IM[{}]{{{self}}}", self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_ball;
    use crate::combinatorics::DEFAULT_GUARD;

    type B = BernsteinElem;

    #[test]
    fn pi_conjugates_generators() {
        for n in 2..=4 {
            let (pi, pi_inv) = pi_bernstein(n);
            assert_eq!(pi.mul(&pi_inv), B::one(n));
            for i in 0..n {
                let lhs = pi.mul(&s_bernstein(n, i)).mul(&pi_inv);
                assert_eq!(lhs, s_bernstein(n, (i + 1) % n), "n={n} i={i}");
            }
            let mut z1 = pi.clone();
            for i in (1..n).rev() {
                z1 = z1.mul(&B::t_inv(n, i));
            }
            assert_eq!(z1, B::z(n, 1, 1));
        }
    }

    #[test]
    fn affine_quadratic_and_braid_relations() {
        for n in 2..=3 {
            let s0 = s_bernstein(n, 0);
            let q = &B::one(n) + &s0.scale(&c());
            assert_eq!(s0.mul(&s0), q);
            if n == 3 {
                let t1 = B::t(3, 1);
                assert_eq!(s0.mul(&t1).mul(&s0), t1.mul(&s0).mul(&t1));
            }
        }
    }

    #[test]
    fn basis_change_round_trip_and_multiplicativity() {
        for n in 1..=3 {
            let bc = BasisChange::new(n);
            let ball = enumerate_ball(n, 3, -1..=1, DEFAULT_GUARD).unwrap();
            for w in &ball {
                let b = bc.basis_to_bernstein(w);
                assert_eq!(bc.to_im(&b), IMExpansion::basis(w.clone()), "{w}");
            }
            for x in ball.iter().take(12) {
                for y in ball.iter().take(12) {
                    let lhs = bc.to_bernstein(&IMExpansion::basis(x.clone()).mul(&IMExpansion::basis(y.clone())));
                    let rhs = bc.basis_to_bernstein(x).mul(&bc.basis_to_bernstein(y));
                    assert_eq!(lhs, rhs, "{x} * {y}");
                }
            }
        }
    }

    #[test]
    fn bar_routes_agree() {
        for n in 1..=3 {
            let bc = BasisChange::new(n);
            for w in enumerate_ball(n, 3, -1..=1, DEFAULT_GUARD).unwrap() {
                let via_im = bc.to_bernstein(&bar_of_basis(&w));
                let via_b = bc.basis_to_bernstein(&w).bar();
                assert_eq!(via_im, via_b, "{w}");
                let x = IMExpansion::basis(w.clone()).scale(&Laurent::q());
                assert_eq!(x.bar().bar(), x);
            }
        }
    }

    #[test]
    fn spec_examples() {
        let bc = BasisChange::new(2);
        assert_eq!(bc.basis_to_bernstein(&ExtAffineElem::identity(2)), B::one(2));
        let t01 = ExtAffineElem::translation(&[0, 1]);
        assert_eq!(ExtAffineElem::s(2, 1).mul(&ExtAffineElem::pi(2)), t01);
        assert_eq!(bc.basis_to_bernstein(&t01), B::z(2, 2, 1));
        let t10 = ExtAffineElem::translation(&[1, 0]);
        let z1 = B::z(2, 1, 1);
        assert_eq!(bc.basis_to_bernstein(&t10), &z1 + &z1.mul(&B::t(2, 1)).scale(&c()));
        let p2 = bc.basis_to_bernstein(&ExtAffineElem::pi_pow(2, 2));
        assert_eq!(p2, B::z_monomial(&[1, 1]));
        assert_eq!(p2.mul(&B::t(2, 1)), B::t(2, 1).mul(&p2));
    }

    #[test]
    fn reduced_products_are_length_additive() {
        for n in 2..=3 {
            let bc = BasisChange::new(n);
            for w in enumerate_ball(n, 3, -1..=1, DEFAULT_GUARD).unwrap() {
                for i in 0..n {
                    let sw = w.left_mul_s(i);
                    if sw.length() == w.length() + 1 {
                        let lhs = s_bernstein(n, i).mul(&bc.basis_to_bernstein(&w));
                        assert_eq!(lhs, bc.basis_to_bernstein(&sw), "s{i} * {w}");
                        let im = IMExpansion::basis(ExtAffineElem::s(n, i)).mul(&IMExpansion::basis(w.clone()));
                        assert_eq!(im, IMExpansion::basis(sw));
                    }
                }
            }
        }
    }

    #[test]
    fn antidominant_translations_are_basis_elements() {
        let bc = BasisChange::new(3);
        for a in [[0, 0, 1], [0, 1, 1], [-1, 0, 2], [-2, -2, 0]] {
            let x = bc.monomial_to_im(&a, &Perm::identity(3));
            assert_eq!(x, IMExpansion::basis(ExtAffineElem::translation(&a)), "{a:?}");
        }
    }
}
