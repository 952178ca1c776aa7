use std::collections::BTreeMap;
use std::sync::Arc;

use super::im::{bar_of_basis, BasisChange};
use super::kl::canonical_solve;
use super::{kl_basis, BernsteinElem};
use crate::coeffs::Laurent;
use crate::combinatorics::{bruhat_interval_below, enumerate_ball, ExtAffineElem, Perm, ResidueTuple};
use crate::error::{Error, Result};

/// An expansion `sum_w k_w T_w` over `W_1 x ... x W_k`, keyed by the joined
/// element of the big extended affine Weyl group.
pub type TensorExpansion = BTreeMap<ExtAffineElem, Laurent>;

/// A parabolic subalgebra `H_{n_1} (x) ... (x) H_{n_k}` of the rank-`n`
/// extended affine Hecke algebra, `n = n_1 + ... + n_k` with every `n_i > 0`.
/// Its Iwahori-Matsumoto basis, length, Bruhat order, bar involution and
/// canonical basis are all taken factorwise.
#[derive(Clone)]
pub struct Parabolic {
    sizes: Vec<usize>,
    offsets: Vec<usize>,
    n: usize,
    bases: Vec<Arc<BasisChange>>,
}

impl std::fmt::Debug for Parabolic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Parabolic{:?}", self.sizes)
    }
}

impl PartialEq for Parabolic {
    fn eq(&self, other: &Self) -> bool {
        self.sizes == other.sizes
    }
}

impl Parabolic {
    /// Zero sizes are dropped.
    pub fn new(sizes: &[usize]) -> Self {
        let sizes: Vec<usize> = sizes.iter().copied().filter(|&m| m > 0).collect();
        let mut offsets = Vec::with_capacity(sizes.len());
        let mut n = 0;
        for &m in &sizes {
            offsets.push(n);
            n += m;
        }
        let bases = sizes.iter().map(|&m| Arc::new(BasisChange::new(m))).collect();
        Self {
            sizes,
            offsets,
            n,
            bases,
        }
    }

    /// The factorisation attached to a sorted residue tuple.
    pub fn from_tuple(lambda: &ResidueTuple) -> Result<Self> {
        if !lambda.is_sorted() {
            return Err(Error::InvalidTuple(format!("{lambda} is not sorted")));
        }
        Ok(Self::new(&lambda.block_sizes()))
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn ranges(&self) -> impl Iterator<Item = std::ops::Range<usize>> + '_ {
        self.offsets.iter().zip(&self.sizes).map(|(&o, &m)| o..o + m)
    }

    /// Whether `w` preserves every block.
    pub fn contains_perm(&self, w: &Perm) -> bool {
        w.n() == self.n && self.ranges().all(|r| r.clone().all(|i| r.contains(&w.apply(i))))
    }

    fn split_perm(&self, w: &Perm) -> Result<Vec<Perm>> {
        if !self.contains_perm(w) {
            let bad = (1..self.n).find(|&i| !self.ranges().any(|r| r.contains(&(i - 1)) && r.contains(&i)));
            return Err(Error::NotInYoungSubgroup(bad.unwrap_or(0)));
        }
        self.ranges()
            .map(|r| {
                let img: Vec<usize> = r.clone().map(|i| w.apply(i) - r.start + 1).collect();
                Perm::from_one_line(&img)
            })
            .collect()
    }

    fn join_perm(&self, parts: &[Perm]) -> Perm {
        let mut img = Vec::with_capacity(self.n);
        for (p, &o) in parts.iter().zip(&self.offsets) {
            img.extend(p.one_line().iter().map(|&v| v + o));
        }
        Perm::from_one_line(&img).expect("block permutation")
    }

    pub fn split(&self, x: &ExtAffineElem) -> Result<Vec<ExtAffineElem>> {
        if x.n() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                got: x.n(),
            });
        }
        let perms = self.split_perm(x.perm())?;
        Ok(self
            .ranges()
            .zip(perms)
            .map(|(r, p)| ExtAffineElem::new(x.trans()[r].to_vec(), p).expect("block sizes agree"))
            .collect())
    }

    pub fn join(&self, parts: &[ExtAffineElem]) -> ExtAffineElem {
        assert_eq!(parts.len(), self.sizes.len(), "factor count");
        let trans = parts.iter().flat_map(|p| p.trans().iter().copied()).collect();
        let perms: Vec<Perm> = parts.iter().map(|p| p.perm().clone()).collect();
        ExtAffineElem::new(trans, self.join_perm(&perms)).expect("sizes agree")
    }

    pub fn contains(&self, x: &ExtAffineElem) -> bool {
        x.n() == self.n && self.contains_perm(x.perm())
    }

    pub fn length(&self, x: &ExtAffineElem) -> Result<usize> {
        Ok(self.split(x)?.iter().map(ExtAffineElem::length).sum())
    }

    /// The product of the factor intervals.
    pub fn interval_below(&self, x: &ExtAffineElem, guard: usize) -> Result<Vec<ExtAffineElem>> {
        let parts = self.split(x)?;
        let mut factors = Vec::with_capacity(parts.len());
        let mut size = 1usize;
        for p in &parts {
            let iv: Vec<ExtAffineElem> = bruhat_interval_below(p, guard)?.into_iter().collect();
            size = size.saturating_mul(iv.len());
            factors.push(iv);
        }
        if size > guard {
            return Err(Error::GuardExceeded {
                what: "tensor Bruhat interval",
                needed: size,
                limit: guard,
            });
        }
        Ok(cartesian(&factors).into_iter().map(|ps| self.join(&ps)).collect())
    }

    /// All elements of total length at most `max_len` whose factors have
    /// `pi`-exponent in `window`.
    pub fn ball(
        &self,
        max_len: usize,
        window: std::ops::RangeInclusive<i32>,
        guard: usize,
    ) -> Result<Vec<ExtAffineElem>> {
        let mut out = vec![(0usize, Vec::new())];
        for &m in &self.sizes {
            let f = enumerate_ball(m, max_len, window.clone(), guard)?;
            let mut next = Vec::new();
            for (l, acc) in &out {
                for y in &f {
                    if l + y.length() <= max_len {
                        let mut v: Vec<ExtAffineElem> = acc.clone();
                        v.push(y.clone());
                        next.push((l + y.length(), v));
                    }
                }
            }
            if next.len() > guard {
                return Err(Error::GuardExceeded {
                    what: "tensor ball",
                    needed: next.len(),
                    limit: guard,
                });
            }
            out = next;
        }
        let mut elems: Vec<(usize, ExtAffineElem)> = out.into_iter().map(|(l, ps)| (l, self.join(&ps))).collect();
        elems.sort();
        Ok(elems.into_iter().map(|(_, x)| x).collect())
    }

    /// Embeds a rank-`n_k` element as the `k`-th tensor factor.
    pub fn embed(&self, k: usize, x: &BernsteinElem) -> BernsteinElem {
        let (o, m) = (self.offsets[k], self.sizes[k]);
        assert_eq!(x.n(), m, "factor size");
        let mut out = BernsteinElem::zero(self.n);
        for (a, w, c) in x.terms() {
            let mut full = vec![0; self.n];
            full[o..o + m].copy_from_slice(a);
            let perms: Vec<Perm> = (0..self.sizes.len())
                .map(|j| {
                    if j == k {
                        w.clone()
                    } else {
                        Perm::identity(self.sizes[j])
                    }
                })
                .collect();
            out.add_term(full, self.join_perm(&perms), c.clone());
        }
        out
    }

    /// The image of pure tensors: `x_1 (x) ... (x) x_k`.
    pub fn from_factors(&self, xs: &[BernsteinElem]) -> BernsteinElem {
        assert_eq!(xs.len(), self.sizes.len(), "factor count");
        xs.iter()
            .enumerate()
            .fold(BernsteinElem::one(self.n), |acc, (k, x)| acc.mul(&self.embed(k, x)))
    }

    /// Splits one Bernstein monomial into its factor monomials.
    fn split_monomial(&self, a: &[i32], w: &Perm) -> Result<Vec<(Vec<i32>, Perm)>> {
        let perms = self.split_perm(w)?;
        Ok(self.ranges().zip(perms).map(|(r, p)| (a[r].to_vec(), p)).collect())
    }

    /// `T_x` of the tensor basis in the Bernstein basis of the big algebra.
    pub fn basis_to_bernstein(&self, x: &ExtAffineElem) -> Result<BernsteinElem> {
        let parts = self.split(x)?;
        let images: Vec<BernsteinElem> = parts
            .iter()
            .zip(&self.bases)
            .map(|(p, bc)| bc.basis_to_bernstein(p))
            .collect();
        Ok(self.from_factors(&images))
    }

    pub fn to_bernstein(&self, x: &TensorExpansion) -> Result<BernsteinElem> {
        let mut out = BernsteinElem::zero(self.n);
        for (w, k) in x {
            out += &self.basis_to_bernstein(w)?.scale(k);
        }
        Ok(out)
    }

    /// Inverse of [`Self::to_bernstein`]; fails if `x` leaves the subalgebra.
    pub fn to_expansion(&self, x: &BernsteinElem) -> Result<TensorExpansion> {
        let mut out = TensorExpansion::new();
        for (a, w, k) in x.terms() {
            let parts = self.split_monomial(a, w)?;
            let factors: Vec<Vec<(ExtAffineElem, Laurent)>> = parts
                .iter()
                .zip(&self.bases)
                .map(|((a, w), bc)| bc.monomial_to_im(a, w).terms().clone().into_iter().collect())
                .collect();
            for (key, coeff) in self.tensor_terms(&factors) {
                add_to(&mut out, key, &(&coeff * k));
            }
        }
        Ok(out)
    }

    fn tensor_terms(&self, factors: &[Vec<(ExtAffineElem, Laurent)>]) -> Vec<(ExtAffineElem, Laurent)> {
        cartesian(factors)
            .into_iter()
            .map(|pairs| {
                let (keys, coeffs): (Vec<ExtAffineElem>, Vec<Laurent>) = pairs.into_iter().unzip();
                let k = coeffs.iter().fold(Laurent::one(), |acc, c| &acc * c);
                (self.join(&keys), k)
            })
            .collect()
    }

    /// `bar(T_x)`, the tensor product of the factor bars.
    pub fn bar_of_basis(&self, x: &ExtAffineElem) -> Result<TensorExpansion> {
        let factors: Vec<Vec<(ExtAffineElem, Laurent)>> = self
            .split(x)?
            .iter()
            .map(|p| bar_of_basis(p).terms().clone().into_iter().collect())
            .collect();
        Ok(self.tensor_terms(&factors).into_iter().collect())
    }

    pub fn bar(&self, x: &TensorExpansion) -> Result<TensorExpansion> {
        let mut out = TensorExpansion::new();
        for (w, k) in x {
            for (y, c) in self.bar_of_basis(w)? {
                add_to(&mut out, y, &(&c * &k.bar()));
            }
        }
        Ok(out)
    }

    /// The bar involution of the subalgebra in Bernstein coordinates, applied
    /// factor by factor.
    pub fn bar_bernstein(&self, x: &BernsteinElem) -> Result<BernsteinElem> {
        let mut out = BernsteinElem::zero(self.n);
        for (a, w, k) in x.terms() {
            let parts = self.split_monomial(a, w)?;
            let bars: Vec<BernsteinElem> = parts
                .into_iter()
                .map(|(a, w)| BernsteinElem::monomial(a, w, Laurent::one()).bar())
                .collect();
            out += &self.from_factors(&bars).scale(&k.bar());
        }
        Ok(out)
    }

    /// The canonical basis element `c_x`, solved directly over the product
    /// interval.
    pub fn kl_basis(&self, x: &ExtAffineElem, guard: usize) -> Result<TensorExpansion> {
        let mut order = self.interval_below(x, guard)?;
        let lens: BTreeMap<ExtAffineElem, usize> = order
            .iter()
            .map(|y| Ok((y.clone(), self.length(y)?)))
            .collect::<Result<_>>()?;
        order.sort_by(|a, b| lens[b].cmp(&lens[a]).then_with(|| a.cmp(b)));
        canonical_solve(x, &order, |y| self.bar_of_basis(y))
    }

    /// The tensor product of the factor canonical basis elements.
    pub fn kl_basis_factorwise(&self, x: &ExtAffineElem, guard: usize) -> Result<TensorExpansion> {
        let factors: Vec<Vec<(ExtAffineElem, Laurent)>> = self
            .split(x)?
            .iter()
            .map(|p| Ok(kl_basis(p, guard)?.terms().clone().into_iter().collect()))
            .collect::<Result<_>>()?;
        Ok(self.tensor_terms(&factors).into_iter().collect())
    }
}

fn add_to(map: &mut TensorExpansion, key: ExtAffineElem, k: &Laurent) {
    let slot = map.entry(key.clone()).or_default();
    *slot += k;
    if slot.is_zero() {
        map.remove(&key);
    }
}

fn cartesian<T: Clone>(factors: &[Vec<T>]) -> Vec<Vec<T>> {
    factors.iter().fold(vec![Vec::new()], |acc, f| {
        acc.iter()
            .flat_map(|prefix| {
                f.iter().map(move |x| {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    v
                })
            })
            .collect()
    })
}

/// An element of a parabolic subalgebra, stored through its Bernstein
/// expansion in the big algebra.
#[derive(Clone, PartialEq, Debug)]
pub struct TensorElem {
    parabolic: Parabolic,
    inner: BernsteinElem,
}

impl TensorElem {
    pub fn new(parabolic: &Parabolic, inner: BernsteinElem) -> Result<Self> {
        if inner.n() != parabolic.n() {
            return Err(Error::SizeMismatch {
                expected: parabolic.n(),
                got: inner.n(),
            });
        }
        for (_, w, _) in inner.terms() {
            parabolic.split_perm(w)?;
        }
        Ok(Self {
            parabolic: parabolic.clone(),
            inner,
        })
    }

    pub fn from_factors(parabolic: &Parabolic, xs: &[BernsteinElem]) -> Result<Self> {
        if xs.len() != parabolic.sizes().len() {
            return Err(Error::SizeMismatch {
                expected: parabolic.sizes().len(),
                got: xs.len(),
            });
        }
        for (x, &m) in xs.iter().zip(parabolic.sizes()) {
            if x.n() != m {
                return Err(Error::SizeMismatch {
                    expected: m,
                    got: x.n(),
                });
            }
        }
        Ok(Self {
            parabolic: parabolic.clone(),
            inner: parabolic.from_factors(xs),
        })
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.parabolic
    }

    pub fn inner(&self) -> &BernsteinElem {
        &self.inner
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.parabolic != rhs.parabolic {
            return Err(Error::Incompatible(format!(
                "{:?} vs {:?}",
                self.parabolic, rhs.parabolic
            )));
        }
        Ok(Self {
            parabolic: self.parabolic.clone(),
            inner: self.inner.mul(&rhs.inner),
        })
    }
}
