//! The finite Yokonuma-Hecke algebra with generators `t_j`, `h_i`, in the
//! basis `t^k h_w` with `0 <= k_j < r`, and its map to the idempotent
//! presentation.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

use crate::coeffs::{CycScalar, Laurent};
use crate::combinatorics::{Perm, ResidueTuple};
use crate::error::{Error, Result};
use crate::idem_presentation::{HhatElement, Monomial};
use crate::report::Report;

/// An element of `Y_{r,n}` over `Z[1/r][q, q^-1][z]`.
#[derive(Clone, PartialEq)]
pub struct YElement {
    r: u32,
    n: usize,
    terms: BTreeMap<(Vec<u32>, Perm), CycScalar>,
}

impl YElement {
    pub fn zero(r: u32, n: usize) -> Self {
        Self {
            r,
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `coeff * t^k h_w`, exponents reduced mod `r`.
    pub fn monomial(r: u32, k: &[i64], w: Perm, coeff: CycScalar) -> Self {
        let mut out = Self::zero(r, w.n());
        out.add_term(k, w, coeff);
        out
    }

    pub fn one(r: u32, n: usize) -> Self {
        Self::monomial(r, &vec![0; n], Perm::identity(n), CycScalar::one(r))
    }

    pub fn t(r: u32, n: usize, j: usize) -> Self {
        Self::t_pow(r, n, j, 1)
    }

    pub fn t_pow(r: u32, n: usize, j: usize, m: i64) -> Self {
        let mut k = vec![0; n];
        k[j - 1] = m;
        Self::monomial(r, &k, Perm::identity(n), CycScalar::one(r))
    }

    pub fn h(r: u32, n: usize, i: usize) -> Self {
        Self::h_w(r, n, Perm::s(n, i))
    }

    pub fn h_w(r: u32, n: usize, w: Perm) -> Self {
        Self::monomial(r, &vec![0; n], w, CycScalar::one(r))
    }

    /// `h_i^-1 = h_i - (q - q^-1) e_i`.
    pub fn h_inv(r: u32, n: usize, i: usize) -> Self {
        let mut out = Self::h(r, n, i);
        out -= &Self::e_idem_unchecked(r, n, i).scale(&qq(r));
        out
    }

    /// `e_i = (1/r) sum_s t_i^s t_{i+1}^-s`.
    pub fn e_idem(r: u32, n: usize, i: usize) -> Result<Self> {
        if i == 0 || i >= n {
            return Err(Error::IndexOutOfRange {
                index: i,
                max: n.saturating_sub(1),
            });
        }
        Ok(Self::e_idem_unchecked(r, n, i))
    }

    fn e_idem_unchecked(r: u32, n: usize, i: usize) -> Self {
        let mut out = Self::zero(r, n);
        let inv_r = CycScalar::from_rational(r, Rational64::new(1, r as i64), 0, 0);
        for s in 0..r as i64 {
            let mut k = vec![0; n];
            k[i - 1] = s;
            k[i] = -s;
            out.add_term(&k, Perm::identity(n), inv_r.clone());
        }
        out
    }

    /// All `r^n n!` basis monomials `t^k h_w`.
    pub fn basis(r: u32, n: usize) -> Vec<YElement> {
        let mut out = Vec::new();
        for lam in ResidueTuple::all(r, n) {
            let k: Vec<i64> = lam.entries().iter().map(|&e| e as i64 - 1).collect();
            for w in Perm::all(n) {
                out.push(Self::monomial(r, &k, w, CycScalar::one(r)));
            }
        }
        out
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

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Perm, &CycScalar)> {
        self.terms.iter().map(|((k, w), c)| (k.as_slice(), w, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: &[i64], w: Perm, c: CycScalar) {
        if c.is_zero() {
            return;
        }
        let key: Vec<u32> = k.iter().map(|&e| e.rem_euclid(self.r as i64) as u32).collect();
        let key = (key, w);
        match self.terms.get_mut(&key) {
            Some(slot) => {
                *slot += &c;
                if slot.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn scale(&self, c: &CycScalar) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for ((k, w), v) in &self.terms {
            out.add_term(&widen(k), w.clone(), v * c);
        }
        out
    }

    /// `h_i * self`.
    pub fn left_h(&self, i: usize) -> Self {
        let c = qq(self.r);
        let inv_r = CycScalar::from_rational(self.r, Rational64::new(1, self.r as i64), 0, 0);
        let ci = &c * &inv_r;
        let mut out = Self::zero(self.r, self.n);
        for ((k, w), v) in &self.terms {
            let mut sk = widen(k);
            sk.swap(i - 1, i);
            let sw = w.left_mul_s(i);
            let down = sw.length() < w.length();
            out.add_term(&sk, sw, v.clone());
            if down {
                let cv = v * &ci;
                for s in 0..self.r as i64 {
                    let mut k2 = sk.clone();
                    k2[i - 1] += s;
                    k2[i] -= s;
                    out.add_term(&k2, w.clone(), cv.clone());
                }
            }
        }
        out
    }

    /// `t^k * self`.
    pub fn left_t(&self, k: &[u32]) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for ((a, w), v) in &self.terms {
            let shifted: Vec<i64> = a.iter().zip(k).map(|(x, y)| *x as i64 + *y as i64).collect();
            out.add_term(&shifted, w.clone(), v.clone());
        }
        out
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.r != rhs.r || self.n != rhs.n {
            return Err(Error::ParamMismatch {
                r1: self.r,
                n1: self.n,
                r2: rhs.r,
                n2: rhs.n,
            });
        }
        let mut out = Self::zero(self.r, self.n);
        for ((k, w), v) in &self.terms {
            let mut acc = rhs.clone();
            for &i in w.reduced_word().iter().rev() {
                acc = acc.left_h(i);
            }
            out += &acc.left_t(k).scale(v);
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("parameter mismatch")
    }
}

fn widen(k: &[u32]) -> Vec<i64> {
    k.iter().map(|&e| e as i64).collect()
}

fn qq(r: u32) -> CycScalar {
    CycScalar::from_laurent(r, &Laurent::q_minus_qinv())
}

impl std::ops::AddAssign<&YElement> for YElement {
    fn add_assign(&mut self, rhs: &YElement) {
        for ((k, w), v) in &rhs.terms {
            self.add_term(&widen(k), w.clone(), v.clone());
        }
    }
}

impl std::ops::SubAssign<&YElement> for YElement {
    fn sub_assign(&mut self, rhs: &YElement) {
        for ((k, w), v) in &rhs.terms {
            self.add_term(&widen(k), w.clone(), -v);
        }
    }
}

impl std::ops::Add for &YElement {
    type Output = YElement;
    fn add(self, rhs: Self) -> YElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl std::ops::Sub for &YElement {
    type Output = YElement;
    fn sub(self, rhs: Self) -> YElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl std::ops::Mul for &YElement {
    type Output = YElement;
    fn mul(self, rhs: Self) -> YElement {
        YElement::mul(self, rhs)
    }
}

impl fmt::Display for YElement {
    /// Monomials as `t1^1 t2^0 * h[1,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((k, w), v)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let ts: Vec<String> = k.iter().enumerate().map(|(j, e)| format!("t{}^{e}", j + 1)).collect();
            write!(f, "{v}*{} * h{w}", ts.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for YElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Y[{},{}]{{{self}}}", self.r, self.n)
    }
}

/// Image under `t_j -> sum_lambda z^(lambda_j - 1) 1_lambda`, `h_i -> g_i`.
pub fn to_idempotent_presentation(a: &YElement) -> HhatElement<CycScalar> {
    let (r, n) = (a.r, a.n);
    let mut out = HhatElement::zero(r, n);
    let tuples = ResidueTuple::all(r, n);
    for (k, w, v) in a.terms() {
        for lam in &tuples {
            let e: i64 = k
                .iter()
                .zip(lam.entries())
                .map(|(&kj, &lj)| kj as i64 * (lj as i64 - 1))
                .sum();
            let coeff = v * &CycScalar::zeta_pow(r, e);
            out.add_term(Monomial::new(vec![0; n], lam.clone(), w.clone()), coeff);
        }
    }
    out
}

/// Inverse of [`to_idempotent_presentation`] on the finite part:
/// `1_lambda -> prod_j (1/r) sum_s z^(-s(lambda_j - 1)) t_j^s`.
pub fn from_idempotent_presentation(h: &HhatElement<CycScalar>) -> Result<YElement> {
    let (r, n) = (h.r(), h.n());
    let mut out = YElement::zero(r, n);
    let inv = Rational64::new(1, (r as i64).pow(n as u32));
    for (m, v) in h.terms() {
        if m.alpha.iter().any(|&a| a != 0) {
            return Err(Error::CheckFailed(format!("{m} is outside the finite part")));
        }
        for lam in ResidueTuple::all(r, n) {
            let k: Vec<i64> = lam.entries().iter().map(|&e| e as i64 - 1).collect();
            let e: i64 = -k
                .iter()
                .zip(m.lambda.entries())
                .map(|(&s, &l)| s * (l as i64 - 1))
                .sum::<i64>();
            let coeff = &(v * &CycScalar::zeta_pow(r, e)) * &CycScalar::from_rational(r, inv, 0, 0);
            out.add_term(&k, m.w.clone(), coeff);
        }
    }
    Ok(out)
}

fn compare_y(lhs: &YElement, rhs: &YElement) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("lhs - rhs = {}", lhs - rhs))
    }
}

fn compare_h(lhs: &HhatElement<CycScalar>, rhs: &HhatElement<CycScalar>) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("lhs - rhs = {}", lhs - rhs))
    }
}

/// Generators of a presentation with `t_j`, `h_i`, `e_i`, `Y_1^{+-1}` and
/// the product used to test relations among them.
trait Gens {
    type E;
    fn one(&self) -> Self::E;
    fn t(&self, j: usize) -> Self::E;
    fn h(&self, i: usize) -> Self::E;
    fn e(&self, i: usize) -> Self::E;
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E;
    fn scale_q(&self, a: &Self::E) -> Self::E;
    fn compare(&self, a: &Self::E, b: &Self::E) -> std::result::Result<(), String>;
}

struct YGens {
    r: u32,
    n: usize,
}

impl Gens for YGens {
    type E = YElement;
    fn one(&self) -> YElement {
        YElement::one(self.r, self.n)
    }
    fn t(&self, j: usize) -> YElement {
        YElement::t(self.r, self.n, j)
    }
    fn h(&self, i: usize) -> YElement {
        YElement::h(self.r, self.n, i)
    }
    fn e(&self, i: usize) -> YElement {
        YElement::e_idem_unchecked(self.r, self.n, i)
    }
    fn mul(&self, a: &YElement, b: &YElement) -> YElement {
        a * b
    }
    fn add(&self, a: &YElement, b: &YElement) -> YElement {
        a + b
    }
    fn scale_q(&self, a: &YElement) -> YElement {
        a.scale(&qq(self.r))
    }
    fn compare(&self, a: &YElement, b: &YElement) -> std::result::Result<(), String> {
        compare_y(a, b)
    }
}

struct ImageGens {
    r: u32,
    n: usize,
}

impl Gens for ImageGens {
    type E = HhatElement<CycScalar>;
    fn one(&self) -> Self::E {
        HhatElement::one(self.r, self.n)
    }
    fn t(&self, j: usize) -> Self::E {
        to_idempotent_presentation(&YElement::t(self.r, self.n, j))
    }
    fn h(&self, i: usize) -> Self::E {
        HhatElement::g(self.r, self.n, i)
    }
    fn e(&self, i: usize) -> Self::E {
        to_idempotent_presentation(&YElement::e_idem_unchecked(self.r, self.n, i))
    }
    fn mul(&self, a: &Self::E, b: &Self::E) -> Self::E {
        a * b
    }
    fn add(&self, a: &Self::E, b: &Self::E) -> Self::E {
        a + b
    }
    fn scale_q(&self, a: &Self::E) -> Self::E {
        a.scale(&qq(self.r))
    }
    fn compare(&self, a: &Self::E, b: &Self::E) -> std::result::Result<(), String> {
        compare_h(a, b)
    }
}

fn finite_relations<G: Gens>(gens: &G, r: u32, n: usize, rep: &mut Report) {
    let m = |a: &G::E, b: &G::E| gens.mul(a, b);
    let h: Vec<G::E> = (1..n).map(|i| gens.h(i)).collect();
    let t: Vec<G::E> = (1..=n).map(|j| gens.t(j)).collect();
    for i in 1..n {
        for j in i + 2..n {
            rep.record_result(
                format!("h{i} h{j} = h{j} h{i}"),
                gens.compare(&m(&h[i - 1], &h[j - 1]), &m(&h[j - 1], &h[i - 1])),
            );
        }
        if i + 1 < n {
            let lhs = m(&m(&h[i - 1], &h[i]), &h[i - 1]);
            let rhs = m(&m(&h[i], &h[i - 1]), &h[i]);
            rep.record_result(
                format!("h{i} h{0} h{i} = h{0} h{i} h{0}", i + 1),
                gens.compare(&lhs, &rhs),
            );
        }
    }
    for i in 1..=n {
        for j in i + 1..=n {
            rep.record_result(
                format!("t{i} t{j} = t{j} t{i}"),
                gens.compare(&m(&t[i - 1], &t[j - 1]), &m(&t[j - 1], &t[i - 1])),
            );
        }
        let pow = (0..r).fold(gens.one(), |acc, _| m(&acc, &t[i - 1]));
        rep.record_result(format!("t{i}^{r} = 1"), gens.compare(&pow, &gens.one()));
    }
    for i in 1..n {
        for j in 1..=n {
            let sj = if j == i {
                i + 1
            } else if j == i + 1 {
                i
            } else {
                j
            };
            rep.record_result(
                format!("h{i} t{j} = t{sj} h{i}"),
                gens.compare(&m(&h[i - 1], &t[j - 1]), &m(&t[sj - 1], &h[i - 1])),
            );
        }
        let e = gens.e(i);
        let rhs = gens.add(&gens.one(), &gens.scale_q(&m(&e, &h[i - 1])));
        rep.record_result(
            format!("h{i}^2 = 1 + (q - q^-1) e{i} h{i}"),
            gens.compare(&m(&h[i - 1], &h[i - 1]), &rhs),
        );
        rep.record_result(format!("e{i}^2 = e{i}"), gens.compare(&m(&e, &e), &e));
        rep.record_result(
            format!("e{i} h{i} = h{i} e{i}"),
            gens.compare(&m(&e, &h[i - 1]), &m(&h[i - 1], &e)),
        );
    }
}

fn guard_check(r: u32, n: usize, guard: usize) -> Result<()> {
    let rank = (r as usize).pow(n as u32) * crate::combinatorics::factorial(n);
    if rank > guard {
        return Err(Error::GuardExceeded {
            what: "finite rank r^n n!",
            needed: rank,
            limit: guard,
        });
    }
    Ok(())
}

/// Every defining relation of `Y_{r,n}` as a normal-form identity, plus
/// invertibility of `h_i`.
pub fn y_relation_suite(r: u32, n: usize, guard: usize) -> Result<Report> {
    guard_check(r, n, guard)?;
    let mut rep = Report::new(format!("relations of Y({r},{n})"));
    finite_relations(&YGens { r, n }, r, n, &mut rep);
    for i in 1..n {
        let lhs = YElement::h(r, n, i).mul(&YElement::h_inv(r, n, i));
        rep.record_result(format!("h{i} h{i}^-1 = 1"), compare_y(&lhs, &YElement::one(r, n)));
    }
    Ok(rep)
}

/// The images of the generators of the finite and affine Yokonuma-Hecke
/// algebras (`Y_1 -> X_1`) satisfy all defining relations, and the finite
/// map is multiplicative on basis pairs with a two-sided inverse.
pub fn isomorphism_images_suite(r: u32, n: usize, guard: usize) -> Result<Report> {
    guard_check(r, n, guard)?;
    let mut rep = Report::new(format!("generator images in Hhat^R({r},{n})"));
    let gens = ImageGens { r, n };
    finite_relations(&gens, r, n, &mut rep);
    for i in 1..n {
        rep.record_result(
            format!("image of e{i} = sum of 1_l with l_i = l_(i+1)"),
            compare_h(&gens.e(i), &HhatElement::e_hat(r, n, i)),
        );
    }
    let x1 = HhatElement::<CycScalar>::x_power(r, n, 1, 1)?;
    let x1i = HhatElement::<CycScalar>::x_power(r, n, 1, -1)?;
    let one = gens.one();
    rep.record_result(
        "Y1 Y1^-1 = Y1^-1 Y1 = 1",
        compare_h(&(&x1 * &x1i), &one).and(compare_h(&(&x1i * &x1), &one)),
    );
    if n >= 2 {
        let h1 = gens.h(1);
        let lhs = &(&(&h1 * &x1) * &h1) * &x1;
        let rhs = &(&(&x1 * &h1) * &x1) * &h1;
        rep.record_result("h1 Y1 h1 Y1 = Y1 h1 Y1 h1", compare_h(&lhs, &rhs));
    }
    for i in 2..n {
        let h = gens.h(i);
        rep.record_result(format!("h{i} Y1 = Y1 h{i}"), compare_h(&(&h * &x1), &(&x1 * &h)));
    }
    for j in 1..=n {
        let t = gens.t(j);
        rep.record_result(format!("t{j} Y1 = Y1 t{j}"), compare_h(&(&t * &x1), &(&x1 * &t)));
    }
    let basis = YElement::basis(r, n);
    let mut ok = Ok(());
    'outer: for a in &basis {
        for b in &basis {
            let lhs = to_idempotent_presentation(&(a * b));
            let rhs = &to_idempotent_presentation(a) * &to_idempotent_presentation(b);
            if let Err(e) = compare_h(&lhs, &rhs) {
                ok = Err(format!("{a} * {b}: {e}"));
                break 'outer;
            }
        }
    }
    rep.record_result("finite map is multiplicative on basis pairs", ok);
    let mut ok = Ok(());
    for a in &basis {
        let back = from_idempotent_presentation(&to_idempotent_presentation(a))?;
        if let Err(e) = compare_y(&back, a) {
            ok = Err(format!("{a}: {e}"));
            break;
        }
    }
    rep.record_result("finite map has a left inverse on the basis", ok);
    Ok(rep)
}

/// Number of distinct basis monomials reached by products of basis pairs,
/// and whether every product lies in their span.
pub fn closure_check(r: u32, n: usize) -> (usize, bool) {
    let basis = YElement::basis(r, n);
    let keys: std::collections::BTreeSet<(Vec<u32>, Perm)> =
        basis.iter().flat_map(|b| b.terms.keys().cloned()).collect();
    let mut closed = true;
    for a in &basis {
        for b in &basis {
            let p = a * b;
            closed &= p.terms.keys().all(|k| keys.contains(k) && k.0.iter().all(|&e| e < r));
        }
    }
    (keys.len(), closed)
}
