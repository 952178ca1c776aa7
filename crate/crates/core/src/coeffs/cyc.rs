use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::{Mutex, OnceLock};

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use super::Laurent;

/// An element of `Z[1/r][q, q^-1][z]` with `z` a primitive `r`-th root of
/// unity, i.e. polynomials in `z` taken modulo the cyclotomic polynomial
/// `Phi_r(z)`.
///
/// Terms are keyed by `(power of z in 0..phi(r), power of q)` with exact
/// rational coefficients. `r == 0` marks a value built without reference to
/// any root of unity (an image of `Z[q, q^-1]`); such values only carry `z^0`
/// terms and adopt the modulus of whatever they are combined with.
#[derive(Clone, Default)]
pub struct CycScalar {
    r: u32,
    terms: BTreeMap<(u32, i32), Rational64>,
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for CycScalar {}

fn join_modulus(a: u32, b: u32) -> u32 {
    match (a, b) {
        (0, m) | (m, 0) => m,
        (m, k) if m == k => m,
        (m, k) => panic!("mixing roots of unity of order {m} and {k}"),
    }
}

impl CycScalar {
    pub fn zero(r: u32) -> Self {
        Self {
            r,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(r: u32) -> Self {
        Self::from_rational(r, Rational64::one(), 0, 0)
    }

    /// `value * z^zeta_exp * q^q_exp`.
    pub fn from_rational(r: u32, value: Rational64, zeta_exp: i64, q_exp: i32) -> Self {
        let mut out = Self::zero(r);
        out.add_term(zeta_exp, q_exp, value);
        out
    }

    /// `z^k`, exponent reduced mod `r`.
    pub fn zeta_pow(r: u32, k: i64) -> Self {
        assert!(r > 0, "root of unity needs a positive order");
        Self::from_rational(r, Rational64::one(), k, 0)
    }

    pub fn from_laurent(r: u32, a: &Laurent) -> Self {
        let mut out = Self::zero(r);
        for (e, c) in a.terms() {
            out.add_term(0, e, Rational64::from_integer(c));
        }
        out
    }

    pub fn modulus(&self) -> u32 {
        self.r
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i32, Rational64)> + '_ {
        self.terms.iter().map(|(&(z, e), &c)| (z, e, c))
    }

    fn reduce_zeta(&self, k: i64) -> u32 {
        if self.r == 0 {
            assert_eq!(k, 0, "z^{k} needs a known order of z");
            0
        } else {
            k.rem_euclid(self.r as i64) as u32
        }
    }

    pub fn add_term(&mut self, zeta_exp: i64, q_exp: i32, c: Rational64) {
        if c.is_zero() {
            return;
        }
        let z = self.reduce_zeta(zeta_exp);
        if self.r > 1 {
            let phi = cyclotomic(self.r);
            let deg = (phi.len() - 1) as u32;
            if z >= deg {
                // z^deg = -(phi_0 + phi_1 z + ... + phi_{deg-1} z^{deg-1})
                for (j, &pj) in phi[..deg as usize].iter().enumerate() {
                    if pj != 0 {
                        let k = (z - deg) as i64 + j as i64;
                        self.add_term(k, q_exp, -c * Rational64::from_integer(pj));
                    }
                }
                return;
            }
        }
        let entry = self.terms.entry((z, q_exp)).or_insert_with(Rational64::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(z, q_exp));
        }
    }

    /// Re-reduces every term into canonical form. Values produced by the public
    /// operations are already canonical, so this is the identity on them.
    pub fn reduce(&self) -> Self {
        let mut out = Self::zero(self.r);
        for (z, e, c) in self.terms() {
            out.add_term(z as i64, e, c);
        }
        out
    }

    /// Coefficient of `z^k` as a Laurent polynomial over the rationals.
    pub fn component(&self, k: u32) -> BTreeMap<i32, Rational64> {
        self.terms
            .iter()
            .filter(|((z, _), _)| *z == k)
            .map(|(&(_, e), &c)| (e, c))
            .collect()
    }

    /// Every denominator divides a power of `r`.
    pub fn denominators_are_r_powers(&self) -> bool {
        let r = self.r.max(1) as i64;
        self.terms.values().all(|c| {
            let mut d = *c.denom();
            loop {
                let g = gcd(d, r);
                if g == 1 {
                    return d == 1;
                }
                d /= g;
            }
        })
    }

    /// Back to `Z[q, q^-1]` when the value has no `z` terms and integral
    /// coefficients.
    pub fn to_laurent(&self) -> Option<Laurent> {
        let mut out = Laurent::zero();
        for (z, e, c) in self.terms() {
            if z != 0 || !c.is_integer() {
                return None;
            }
            out.add_term(e, *c.numer());
        }
        Some(out)
    }

    pub fn scale(&self, c: Rational64) -> Self {
        let mut out = Self::zero(self.r);
        for (z, e, k) in self.terms() {
            out.add_term(z as i64, e, k * c);
        }
        out
    }
}

/// Integer coefficients of the `r`-th cyclotomic polynomial, constant term
/// first.
pub fn cyclotomic(r: u32) -> &'static [i64] {
    static CACHE: OnceLock<Mutex<HashMap<u32, &'static [i64]>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&r) {
        return p;
    }
    // z^r - 1 divided by every Phi_d with d a proper divisor of r
    let mut num = vec![0i64; r as usize + 1];
    num[0] = -1;
    num[r as usize] = 1;
    for d in (1..r).filter(|&d| r.is_multiple_of(d)) {
        num = divide_monic(&num, cyclotomic(d));
    }
    let leaked: &'static [i64] = Box::leak(num.into_boxed_slice());
    cache.lock().unwrap().insert(r, leaked);
    leaked
}

fn divide_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let nd = num.len() - 1;
    let mut quot = vec![0i64; nd - dd + 1];
    for k in (0..=nd - dd).rev() {
        let lead = rem[k + dd];
        quot[k] = lead;
        for (j, &c) in den.iter().enumerate() {
            rem[k + j] -= lead * c;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl AddAssign<&CycScalar> for CycScalar {
    fn add_assign(&mut self, rhs: &CycScalar) {
        self.r = join_modulus(self.r, rhs.r);
        for (z, e, c) in rhs.terms() {
            self.add_term(z as i64, e, c);
        }
    }
}

impl Add for &CycScalar {
    type Output = CycScalar;
    fn add(self, rhs: &CycScalar) -> CycScalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.scale(-Rational64::one())
    }
}

impl Sub for &CycScalar {
    type Output = CycScalar;
    fn sub(self, rhs: &CycScalar) -> CycScalar {
        self + &(-rhs)
    }
}

impl Mul for &CycScalar {
    type Output = CycScalar;
    fn mul(self, rhs: &CycScalar) -> CycScalar {
        let mut out = CycScalar::zero(join_modulus(self.r, rhs.r));
        for (z1, e1, c1) in self.terms() {
            for (z2, e2, c2) in rhs.terms() {
                out.add_term(z1 as i64 + z2 as i64, e1 + e2, c1 * c2);
            }
        }
        out
    }
}

fn write_rational_laurent(f: &mut fmt::Formatter<'_>, comp: &BTreeMap<i32, Rational64>) -> fmt::Result {
    let mut first = true;
    for (&e, c) in comp.iter().rev() {
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                write!(f, "-")?;
            }
        } else if neg {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        if e == 0 {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            if e == 1 {
                write!(f, "q")?;
            } else {
                write!(f, "q^{e}")?;
            }
        }
    }
    Ok(())
}

impl fmt::Display for CycScalar {
    /// `(a0 + a1*z + ...)` where each `ak` is a rational Laurent polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let mut zetas: Vec<u32> = self.terms.keys().map(|(z, _)| *z).collect();
        zetas.dedup();
        write!(f, "(")?;
        for (idx, z) in zetas.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let comp = self.component(*z);
            let wrap = comp.len() > 1 && *z != 0;
            if wrap {
                write!(f, "(")?;
            }
            write_rational_laurent(f, &comp)?;
            if wrap {
                write!(f, ")")?;
            }
            match z {
                0 => {}
                1 => write!(f, "*z")?,
                _ => write!(f, "*z^{z}")?,
            }
        }
        write!(f, ")")
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyc[r={}]{self}", self.r)
    }
}
