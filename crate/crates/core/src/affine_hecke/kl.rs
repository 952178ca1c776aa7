use std::collections::BTreeMap;
use std::fmt::Display;

use super::im::bar_of_basis;
use super::{BasisChange, IMExpansion};
use crate::coeffs::Laurent;
use crate::combinatorics::{bruhat_interval_below, enumerate_ball, ExtAffineElem, Perm};
use crate::error::{Error, Result};
use crate::report::Report;

/// Solves for the unique bar-invariant `c = sum_x p_x T_x` with `p_top = 1`
/// and `p_x` in `q^-1 Z[q^-1]` otherwise.
///
/// `order` lists the interval below `top` so that every `y > x` comes before
/// `x`; `bar_std(y)` is the expansion of `bar(T_y)`. Each step checks that the
/// recursion is consistent, i.e. that the accumulated sum is anti-invariant.
pub fn canonical_solve<K, F>(top: &K, order: &[K], mut bar_std: F) -> Result<BTreeMap<K, Laurent>>
where
    K: Ord + Clone + Display,
    F: FnMut(&K) -> Result<BTreeMap<K, Laurent>>,
{
    if order.first() != Some(top) {
        return Err(Error::CheckFailed(format!("order must start at {top}")));
    }
    let mut p: BTreeMap<K, Laurent> = BTreeMap::new();
    let mut bars: Vec<(Laurent, BTreeMap<K, Laurent>)> = Vec::new();
    for (idx, x) in order.iter().enumerate() {
        let px = if idx == 0 {
            Laurent::one()
        } else {
            let mut acc = Laurent::zero();
            for (pb, b) in &bars {
                if let Some(r) = b.get(x) {
                    acc += &(pb * r);
                }
            }
            if acc.bar() != -&acc {
                return Err(Error::CheckFailed(format!("sum at {x} is not anti-invariant: {acc}")));
            }
            acc.negative_part()
        };
        if !px.is_zero() {
            let b = bar_std(x)?;
            if b.get(x).is_none_or(|k| !k.is_one()) {
                return Err(Error::CheckFailed(format!("bar of {x} is not unitriangular")));
            }
            bars.push((px.bar(), b));
            p.insert(x.clone(), px);
        }
    }
    Ok(p)
}

/// The canonical basis element `c_w` of the extended affine Hecke algebra.
pub fn kl_basis(w: &ExtAffineElem, guard: usize) -> Result<IMExpansion> {
    let mut order: Vec<ExtAffineElem> = bruhat_interval_below(w, guard)?.into_iter().collect();
    order.sort_by(|a, b| b.length().cmp(&a.length()).then_with(|| a.cmp(b)));
    let p = canonical_solve(w, &order, |y| Ok(bar_of_basis(y).terms().clone()))?;
    Ok(IMExpansion::from_terms(w.n(), p))
}

/// A canonical basis element with its top index.
#[derive(Clone, PartialEq, Debug)]
pub struct KLBasisElem {
    pub top: ExtAffineElem,
    pub expansion: IMExpansion,
}

impl KLBasisElem {
    pub fn new(top: &ExtAffineElem, guard: usize) -> Result<Self> {
        Ok(Self {
            top: top.clone(),
            expansion: kl_basis(top, guard)?,
        })
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical(&self.top, &self.expansion)
    }

    /// One `x  coefficient` line per term, longest first.
    pub fn table(&self) -> String {
        let mut rows: Vec<(&ExtAffineElem, &Laurent)> = self.expansion.terms().iter().collect();
        rows.sort_by(|a, b| b.0.length().cmp(&a.0.length()).then_with(|| a.0.cmp(b.0)));
        rows.iter()
            .map(|(x, k)| format!("{x}\t{}\t{k}\n", x.length()))
            .collect()
    }
}

/// The Kazhdan-Lusztig polynomial `P_{x,w}`, normalised so that
/// `c_w = sum_x q^{l(x) - l(w)} P_{x,w}(q^2) T_x`.
pub fn kl_polynomial(x: &ExtAffineElem, w: &ExtAffineElem, guard: usize) -> Result<Laurent> {
    let c = kl_basis(w, guard)?;
    let shifted = c.coeff(x).shift(w.length() as i32 - x.length() as i32);
    let mut out = Laurent::zero();
    for (e, k) in shifted.terms() {
        if e % 2 != 0 {
            return Err(Error::CheckFailed(format!("odd degree in P_{{{x},{w}}}")));
        }
        out.add_term(e / 2, k);
    }
    Ok(out)
}

/// Checks bar invariance and the degree bounds of a canonical basis element.
pub fn is_canonical(top: &ExtAffineElem, c: &IMExpansion) -> bool {
    c.bar() == *c && c.coeff(top).is_one() && c.terms().iter().all(|(x, k)| x == top || k.in_negative_span())
}

/// `x <= w` in `S_n` by the tableau criterion: every sorted prefix of the
/// one-line notation of `x` is entrywise at most that of `w`.
fn finite_bruhat_leq(x: &Perm, w: &Perm) -> bool {
    let (a, b) = (x.one_line(), w.one_line());
    (1..=a.len()).all(|k| {
        let mut pa = a[..k].to_vec();
        let mut pb = b[..k].to_vec();
        pa.sort_unstable();
        pb.sort_unstable();
        pa.iter().zip(&pb).all(|(u, v)| u <= v)
    })
}

/// Canonical basis elements of the ball of radius `max_len` with
/// `pi`-exponents in `-1..=1`, checked against the Bernstein-route bar, and
/// for `n <= 3` the finite part against `P_{x,w} = 1`.
pub fn kl_suite(n: usize, max_len: usize, guard: usize) -> Result<(Report, Vec<KLBasisElem>)> {
    let mut rep = Report::new(format!("canonical basis n={n} l<={max_len}"));
    let ball = enumerate_ball(n, max_len, -1..=1, guard)?;
    let bc = BasisChange::new(n);
    let mut elems = Vec::with_capacity(ball.len());
    let mut bar_fail = None;
    let mut canon_fail = None;
    for w in &ball {
        let t = IMExpansion::basis(w.clone());
        if bar_fail.is_none() && (t.bar().bar() != t || bc.to_bernstein(&t.bar()) != bc.basis_to_bernstein(w).bar()) {
            bar_fail = Some(w.to_string());
        }
        let c = KLBasisElem::new(w, guard)?;
        let b = bc.to_bernstein(&c.expansion);
        let triangular = c.expansion.coeff(w).is_one()
            && c.expansion
                .terms()
                .iter()
                .all(|(x, k)| x == w || (k.in_negative_span() && x.length() < w.length()));
        if canon_fail.is_none() && (b.bar() != b || !triangular) {
            canon_fail = Some(w.to_string());
        }
        elems.push(c);
    }
    rep.record_result(
        format!(
            "bar is an involution matching the Bernstein bar on {} elements",
            ball.len()
        ),
        bar_fail.map_or(Ok(()), Err),
    );
    rep.record_result(
        format!("c_w bar-invariant and unitriangular for {} elements", ball.len()),
        canon_fail.map_or(Ok(()), Err),
    );
    if n <= 3 {
        let mut fail = None;
        let perms = Perm::all(n);
        for w in &perms {
            let mut expect = IMExpansion::zero(n);
            for x in perms.iter().filter(|x| finite_bruhat_leq(x, w)) {
                expect.add_term(
                    ExtAffineElem::from_perm(x.clone()),
                    Laurent::monomial(1, x.length() as i32 - w.length() as i32),
                );
            }
            if kl_basis(&ExtAffineElem::from_perm(w.clone()), guard)? != expect && fail.is_none() {
                fail = Some(format!("{w:?}"));
            }
        }
        rep.record_result(format!("finite part of S{n} has P = 1"), fail.map_or(Ok(()), Err));
    }
    Ok((rep, elems))
}
