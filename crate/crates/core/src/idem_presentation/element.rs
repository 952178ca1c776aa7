use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::{Laurent, Scalar};
use crate::combinatorics::{Perm, ResidueTuple};
use crate::error::{Error, Result};

/// A PBW monomial `X^alpha 1_lambda g_w`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Monomial {
    pub alpha: Vec<i32>,
    pub lambda: ResidueTuple,
    pub w: Perm,
}

impl Monomial {
    pub fn new(alpha: Vec<i32>, lambda: ResidueTuple, w: Perm) -> Self {
        assert!(
            alpha.len() == lambda.n() && w.n() == lambda.n(),
            "monomial size mismatch"
        );
        Self { alpha, lambda, w }
    }

    pub fn degree(&self) -> i32 {
        self.alpha.iter().sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.alpha.iter().map(|x| x.to_string()).collect();
        write!(f, "X[{}] 1{} g{}", a.join(","), self.lambda, self.w)
    }
}

pub(crate) fn qq<C: Scalar>() -> C {
    C::from_laurent(&Laurent::q_minus_qinv())
}

/// An element of the affine algebra in the idempotent presentation, expanded
/// in the basis `X^alpha 1_lambda g_w`.
#[derive(Clone, PartialEq)]
pub struct HhatElement<C = Laurent> {
    r: u32,
    n: usize,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> HhatElement<C> {
    pub fn zero(r: u32, n: usize) -> Self {
        Self {
            r,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(r: u32, m: Monomial, c: C) -> Self {
        let mut out = Self::zero(r, m.lambda.n());
        out.add_term(m, c);
        out
    }

    fn sum_over_tuples(r: u32, n: usize, alpha: &[i32], w: &Perm, keep: impl Fn(&ResidueTuple) -> bool) -> Self {
        let mut out = Self::zero(r, n);
        for lambda in ResidueTuple::all(r, n).into_iter().filter(|l| keep(l)) {
            out.add_term(Monomial::new(alpha.to_vec(), lambda, w.clone()), C::one());
        }
        out
    }

    /// `sum_lambda 1_lambda`.
    pub fn one(r: u32, n: usize) -> Self {
        Self::sum_over_tuples(r, n, &vec![0; n], &Perm::identity(n), |_| true)
    }

    pub fn idem(lambda: &ResidueTuple) -> Self {
        let n = lambda.n();
        Self::from_monomial(
            lambda.r(),
            Monomial::new(vec![0; n], lambda.clone(), Perm::identity(n)),
            C::one(),
        )
    }

    pub fn g(r: u32, n: usize, i: usize) -> Self {
        Self::g_w(r, n, &Perm::s(n, i))
    }

    pub fn g_w(r: u32, n: usize, w: &Perm) -> Self {
        Self::sum_over_tuples(r, n, &vec![0; n], w, |_| true)
    }

    /// `g_i^-1 = g_i - (q - q^-1) e_i`.
    pub fn g_inv(r: u32, n: usize, i: usize) -> Self {
        let mut out = Self::g(r, n, i);
        out -= &Self::e_hat(r, n, i).scale(&qq());
        out
    }

    /// `e_i = sum over lambda with lambda_i = lambda_{i+1} of 1_lambda`.
    pub fn e_hat(r: u32, n: usize, i: usize) -> Self {
        Self::sum_over_tuples(r, n, &vec![0; n], &Perm::identity(n), |l| l.get(i) == l.get(i + 1))
    }

    /// `X^alpha = sum_lambda X^alpha 1_lambda`.
    pub fn x_monomial(r: u32, alpha: &[i32]) -> Self {
        let n = alpha.len();
        Self::sum_over_tuples(r, n, alpha, &Perm::identity(n), |_| true)
    }

    /// `X_j^m`.
    pub fn x_power(r: u32, n: usize, j: usize, m: i32) -> Result<Self> {
        if j == 0 || j > n {
            return Err(Error::IndexOutOfRange { index: j, max: n });
        }
        let mut alpha = vec![0; n];
        alpha[j - 1] = m;
        Ok(Self::x_monomial(r, &alpha))
    }

    pub fn r(&self) -> u32 {
        self.r
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

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(slot) => {
                slot.add_assign_ref(&c);
                if slot.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), k.mul_ref(c));
        }
        out
    }

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> HhatElement<D> {
        let mut out = HhatElement::zero(self.r, self.n);
        for (m, k) in &self.terms {
            out.add_term(m.clone(), f(k));
        }
        out
    }

    fn check_params(&self, other: &Self) -> Result<()> {
        if self.r != other.r || self.n != other.n {
            return Err(Error::ParamMismatch {
                r1: self.r,
                n1: self.n,
                r2: other.r,
                n2: other.n,
            });
        }
        Ok(())
    }

    /// `g_i * self`.
    pub fn left_g(&self, i: usize) -> Self {
        let c = qq::<C>();
        let mut out = Self::zero(self.r, self.n);
        for (m, k) in &self.terms {
            let mut sa = m.alpha.clone();
            sa.swap(i - 1, i);
            let slam = m.lambda.swap(i);
            let equal = m.lambda.get(i) == m.lambda.get(i + 1);
            let sw = m.w.left_mul_s(i);
            let down = sw.length() < m.w.length();
            out.add_term(Monomial::new(sa.clone(), slam, sw), k.clone());
            if !equal {
                continue;
            }
            let ck = k.mul_ref(&c);
            if down {
                out.add_term(Monomial::new(sa, m.lambda.clone(), m.w.clone()), ck.clone());
            }
            // (q - q^-1) X_{i+1} (f - s_i f) / (X_{i+1} - X_i)
            let (a, b) = (m.alpha[i - 1], m.alpha[i]);
            let (lo, hi, sign) = if a > b { (b, a, ck.neg_ref()) } else { (a, b, ck) };
            for kk in 0..(hi - lo) {
                let mut alpha = m.alpha.clone();
                alpha[i - 1] = lo + kk;
                alpha[i] = hi - kk;
                out.add_term(Monomial::new(alpha, m.lambda.clone(), m.w.clone()), sign.clone());
            }
        }
        out
    }

    /// `g_i^-1 * self`.
    pub fn left_g_inv(&self, i: usize) -> Self {
        let mut out = self.left_g(i);
        out -= &self.left_e_hat(i).scale(&qq());
        out
    }

    /// `e_i * self`.
    pub fn left_e_hat(&self, i: usize) -> Self {
        self.filter(|m| m.lambda.get(i) == m.lambda.get(i + 1))
    }

    /// `1_lambda * self`.
    pub fn left_idem(&self, lambda: &ResidueTuple) -> Self {
        self.filter(|m| m.lambda == *lambda)
    }

    /// `self * 1_lambda`.
    pub fn right_idem(&self, lambda: &ResidueTuple) -> Self {
        self.filter(|m| m.lambda == lambda.act(&m.w))
    }

    /// `X^alpha * self`.
    pub fn left_x(&self, alpha: &[i32]) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (m, k) in &self.terms {
            let shifted = m.alpha.iter().zip(alpha).map(|(a, b)| a + b).collect();
            out.add_term(Monomial::new(shifted, m.lambda.clone(), m.w.clone()), k.clone());
        }
        out
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Self {
            r: self.r,
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, k)| (m.clone(), k.clone()))
                .collect(),
        }
    }

    /// `X^alpha 1_lambda g_w * rhs`.
    pub fn monomial_times(m: &Monomial, rhs: &Self) -> Self {
        let mut acc = rhs.clone();
        for &i in m.w.reduced_word().iter().rev() {
            acc = acc.left_g(i);
        }
        acc.left_idem(&m.lambda).left_x(&m.alpha)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        let mut out = Self::zero(self.r, self.n);
        for (m, k) in &self.terms {
            out += &Self::monomial_times(m, rhs).scale(k);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("parameter mismatch")
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        let mut out = self.clone();
        out += rhs;
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.scale(&C::one().neg_ref())
    }

    /// Terms with `alpha = 0`, i.e. the finite part.
    pub fn is_finite(&self) -> bool {
        self.terms.keys().all(|m| m.alpha.iter().all(|&a| a == 0))
    }
}

impl<C: Scalar> std::ops::AddAssign<&HhatElement<C>> for HhatElement<C> {
    fn add_assign(&mut self, rhs: &HhatElement<C>) {
        assert!(self.r == rhs.r && self.n == rhs.n, "parameter mismatch");
        for (m, k) in &rhs.terms {
            self.add_term(m.clone(), k.clone());
        }
    }
}

impl<C: Scalar> std::ops::SubAssign<&HhatElement<C>> for HhatElement<C> {
    fn sub_assign(&mut self, rhs: &HhatElement<C>) {
        assert!(self.r == rhs.r && self.n == rhs.n, "parameter mismatch");
        for (m, k) in &rhs.terms {
            self.add_term(m.clone(), k.neg_ref());
        }
    }
}

impl<C: Scalar> std::ops::Add for &HhatElement<C> {
    type Output = HhatElement<C>;
    fn add(self, rhs: Self) -> HhatElement<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Scalar> std::ops::Sub for &HhatElement<C> {
    type Output = HhatElement<C>;
    fn sub(self, rhs: Self) -> HhatElement<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Scalar> std::ops::Mul for &HhatElement<C> {
    type Output = HhatElement<C>;
    fn mul(self, rhs: Self) -> HhatElement<C> {
        HhatElement::mul(self, rhs)
    }
}

impl<C: Scalar> fmt::Display for HhatElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, k)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({k})*{m}")?;
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for HhatElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hhat[{},{}]{{{self}}}", self.r, self.n)
    }
}
