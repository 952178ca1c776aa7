use std::collections::BTreeMap;

use super::element::{sorted, EElement};
use super::tau::{make_tau, tau_from_word, TauPair};
use crate::affine_hecke::{canonical_solve, flat, phi, phi_inverse, Parabolic, TensorExpansion};
use crate::coeffs::Laurent;
use crate::combinatorics::{factorial, multinomial, ExtAffineElem, ResidueTuple};
use crate::error::{Error, Result};
use crate::idem_presentation::HhatElement;

/// A basis index `(l1, l2, w)` of the matrix model.
pub type Triple = (ResidueTuple, ResidueTuple, ExtAffineElem);

/// One orbit of residue tuples and the matching tensor factorisation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitBlock {
    pub rep: ResidueTuple,
    pub n_lambda: usize,
    pub sizes: Vec<usize>,
}

/// The orbits in the order of their sorted representatives.
pub fn block_decompose(r: u32, n: usize) -> Vec<OrbitBlock> {
    ResidueTuple::all_sorted(r, n)
        .into_iter()
        .map(|rep| {
            let sizes = rep.block_sizes();
            OrbitBlock {
                n_lambda: multinomial(&sizes),
                rep,
                sizes,
            }
        })
        .collect()
}

/// `sum n_lambda^2 prod n_i!`, which equals `r^n n!`.
pub fn block_rank_total(blocks: &[OrbitBlock]) -> usize {
    blocks
        .iter()
        .map(|b| b.n_lambda * b.n_lambda * b.sizes.iter().map(|&m| factorial(m)).product::<usize>())
        .sum()
}

/// The maps between the idempotent presentation with parameters `(r, n)` and
/// its matrix model, for one fixed choice of sorting words.
pub struct MatrixModel {
    r: u32,
    n: usize,
    guard: usize,
    taus: BTreeMap<ResidueTuple, TauPair>,
    parabolics: BTreeMap<ResidueTuple, Parabolic>,
}

impl MatrixModel {
    pub fn new(r: u32, n: usize, guard: usize) -> Result<Self> {
        Self::with_words(r, n, guard, |l| Ok(make_tau(l)?.word))
    }

    /// Uses `word(l)` as the sorting word of every tuple `l`.
    pub fn with_words(
        r: u32,
        n: usize,
        guard: usize,
        mut word: impl FnMut(&ResidueTuple) -> Result<Vec<usize>>,
    ) -> Result<Self> {
        let mut taus = BTreeMap::new();
        for l in ResidueTuple::all(r, n) {
            let w = word(&l)?;
            taus.insert(l.clone(), tau_from_word(&l, w)?);
        }
        let mut parabolics = BTreeMap::new();
        for rep in ResidueTuple::all_sorted(r, n) {
            parabolics.insert(rep.clone(), Parabolic::from_tuple(&rep)?);
        }
        Ok(Self {
            r,
            n,
            guard,
            taus,
            parabolics,
        })
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self, l: &ResidueTuple) -> &TauPair {
        &self.taus[l]
    }

    pub fn parabolic(&self, l0: &ResidueTuple) -> &Parabolic {
        &self.parabolics[l0]
    }

    pub fn unit(&self) -> EElement {
        EElement::unit(self.r, self.n)
    }

    fn check_params(&self, r: u32, n: usize) -> Result<()> {
        if (r, n) != (self.r, self.n) {
            return Err(Error::ParamMismatch {
                r1: self.r,
                n1: self.n,
                r2: r,
                n2: n,
            });
        }
        Ok(())
    }

    /// `Psi(h)_{l1,l2} = tau_{l1} 1_{l1} h 1_{l2} tau'_{l2}`.
    pub fn psi(&self, h: &HhatElement<Laurent>) -> Result<EElement> {
        self.check_params(h.r(), h.n())?;
        let mut parts: BTreeMap<(ResidueTuple, ResidueTuple), HhatElement<Laurent>> = BTreeMap::new();
        for (m, k) in h.terms() {
            let l2 = m.lambda.act(&m.w.inverse());
            parts
                .entry((m.lambda.clone(), l2))
                .or_insert_with(|| HhatElement::zero(self.r, self.n))
                .add_term(m.clone(), k.clone());
        }
        let mut out = EElement::zero(self.r, self.n);
        for ((l1, l2), part) in parts {
            let v = self.taus[&l1].tau.mul(&part).mul(&self.taus[&l2].tau_prime);
            out.add_block(l1, l2, &v)?;
        }
        Ok(out)
    }

    /// `Phi(x) = sum tau'_{l1} x_{l1,l2} tau_{l2}`.
    pub fn phi(&self, x: &EElement) -> Result<HhatElement<Laurent>> {
        self.check_params(x.r(), x.n())?;
        let mut out = HhatElement::zero(self.r, self.n);
        for ((l1, l2), v) in x.blocks() {
            out += &self.taus[l1].tau_prime.mul(v).mul(&self.taus[l2].tau);
        }
        Ok(out)
    }

    /// Checks `(l1, l2, w)` lies in `C` and returns the common `l0`.
    pub fn check_triple(&self, l1: &ResidueTuple, l2: &ResidueTuple, w: &ExtAffineElem) -> Result<ResidueTuple> {
        self.check_params(l1.r(), l1.n())?;
        self.check_params(l2.r(), l2.n())?;
        let l0 = sorted(l1);
        if sorted(l2) != l0 || w.n() != self.n || !l0.is_fixed_by(w.perm()) {
            return Err(Error::NotInC(format!("({l1}, {l2}, {w})")));
        }
        Ok(l0)
    }

    pub fn x_basis(&self, l1: &ResidueTuple, l2: &ResidueTuple, w: &ExtAffineElem) -> Result<EElement> {
        let l0 = self.check_triple(l1, l2, w)?;
        let v = phi(&self.parabolics[&l0].basis_to_bernstein(w)?, &l0)?;
        EElement::single(l1, l2, v)
    }

    /// The block element with value `phi(c_w)`.
    pub fn c_basis(&self, l1: &ResidueTuple, l2: &ResidueTuple, w: &ExtAffineElem) -> Result<EElement> {
        let l0 = self.check_triple(l1, l2, w)?;
        let v = phi(&self.block_value_c(&l0, w)?, &l0)?;
        EElement::single(l1, l2, v)
    }

    fn block_value_c(&self, l0: &ResidueTuple, w: &ExtAffineElem) -> Result<crate::affine_hecke::BernsteinElem> {
        let p = &self.parabolics[l0];
        p.to_bernstein(&p.kl_basis(w, self.guard)?)
    }

    /// The blockwise bar involution transported from the tensor subalgebras.
    pub fn bar(&self, x: &EElement) -> Result<EElement> {
        x.try_map_blocks(|a, b, v| {
            let l0 = sorted(a);
            let p = &self.parabolics[&l0];
            let v2 = phi(&p.bar_bernstein(&phi_inverse(v, &l0)?)?, &l0)?;
            Ok(((a.clone(), b.clone()), v2))
        })
    }

    /// `i(c^{l1,l2;w}) = c^{l2,l1;w^-1}`, extended linearly.
    pub fn involution(&self, x: &EElement) -> Result<EElement> {
        x.try_map_blocks(|a, b, v| {
            let l0 = sorted(a);
            let p = &self.parabolics[&l0];
            let e = flat(&p.to_expansion(&phi_inverse(v, &l0)?)?);
            Ok(((b.clone(), a.clone()), phi(&p.to_bernstein(&e)?, &l0)?))
        })
    }

    /// Coordinates in the basis `x^{l1,l2;w}`.
    pub fn x_coordinates(&self, x: &EElement) -> Result<BTreeMap<Triple, Laurent>> {
        let mut out = BTreeMap::new();
        for ((a, b), v) in x.blocks() {
            let l0 = sorted(a);
            for (w, k) in self.parabolics[&l0].to_expansion(&phi_inverse(v, &l0)?)? {
                out.insert((a.clone(), b.clone(), w), k);
            }
        }
        Ok(out)
    }

    /// `sum k x^{l1,l2;w}` for one block.
    pub fn from_block_expansion(&self, l1: &ResidueTuple, l2: &ResidueTuple, e: &TensorExpansion) -> Result<EElement> {
        let l0 = sorted(l1);
        let v = phi(&self.parabolics[&l0].to_bernstein(e)?, &l0)?;
        EElement::single(l1, l2, v)
    }

    /// `c^{l1,l2;w}` solved inside the matrix model: the bar-invariant element
    /// unitriangular against the `x`-basis, using the bar involution of the
    /// model only.
    pub fn c_basis_solved(&self, l1: &ResidueTuple, l2: &ResidueTuple, w: &ExtAffineElem) -> Result<EElement> {
        let l0 = self.check_triple(l1, l2, w)?;
        let p = &self.parabolics[&l0];
        let mut order = p.interval_below(w, self.guard)?;
        let lens: BTreeMap<ExtAffineElem, usize> = order
            .iter()
            .map(|y| Ok((y.clone(), p.length(y)?)))
            .collect::<Result<_>>()?;
        order.sort_by(|a, b| lens[b].cmp(&lens[a]).then_with(|| a.cmp(b)));
        let coeffs = canonical_solve(w, &order, |y| {
            let bar = self.bar(&self.x_basis(l1, l2, y)?)?;
            Ok(self
                .x_coordinates(&bar)?
                .into_iter()
                .map(|((_, _, z), k)| (z, k))
                .collect())
        })?;
        self.from_block_expansion(l1, l2, &coeffs)
    }

    /// `tau'_{l1} 1_{l0} h 1_{l0} tau_{l2}` for a block value `h`.
    pub fn lift(&self, l1: &ResidueTuple, l2: &ResidueTuple, h: &HhatElement<Laurent>) -> Result<HhatElement<Laurent>> {
        let l0 = self.check_triple(l1, l2, &ExtAffineElem::identity(self.n))?;
        let e0 = HhatElement::idem(&l0);
        Ok(self.taus[l1].tau_prime.mul(&e0).mul(h).mul(&e0).mul(&self.taus[l2].tau))
    }

    /// `c_{w,l0}`.
    pub fn c_hat(&self, l0: &ResidueTuple, w: &ExtAffineElem) -> Result<HhatElement<Laurent>> {
        phi(&self.block_value_c(l0, w)?, l0)
    }

    /// All triples in `C` with `l(w) <= max_len` and factor `pi`-exponents in
    /// `-1..=1`.
    pub fn triples(&self, max_len: usize) -> Result<Vec<Triple>> {
        let mut out = Vec::new();
        for (l0, p) in &self.parabolics {
            let ws = p.ball(max_len, -1..=1, self.guard)?;
            let orbit = l0.orbit();
            for a in &orbit {
                for b in &orbit {
                    for w in &ws {
                        out.push((a.clone(), b.clone(), w.clone()));
                    }
                }
            }
        }
        Ok(out)
    }
}
