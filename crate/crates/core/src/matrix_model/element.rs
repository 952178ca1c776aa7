use std::collections::BTreeMap;
use std::fmt;

use crate::coeffs::Laurent;
use crate::combinatorics::ResidueTuple;
use crate::error::{Error, Result};
use crate::idem_presentation::HhatElement;

pub type BlockKey = (ResidueTuple, ResidueTuple);

/// The sorted representative of the orbit of `lambda`.
pub fn sorted(lambda: &ResidueTuple) -> ResidueTuple {
    lambda.orbit_rep().0
}

/// An element of the matrix model: blocks indexed by pairs in one orbit, the
/// `(l1, l2)` block lying in `1_{l0} H 1_{l0}` for the common sorted
/// representative `l0`. Absent blocks are zero.
#[derive(Clone, PartialEq)]
pub struct EElement {
    r: u32,
    n: usize,
    blocks: BTreeMap<BlockKey, HhatElement<Laurent>>,
}

impl EElement {
    pub fn zero(r: u32, n: usize) -> Self {
        Self {
            r,
            n,
            blocks: BTreeMap::new(),
        }
    }

    /// `1_{l,l} = 1_{l0}` on the diagonal.
    pub fn unit(r: u32, n: usize) -> Self {
        let mut out = Self::zero(r, n);
        for l in ResidueTuple::all(r, n) {
            let v = HhatElement::idem(&sorted(&l));
            out.blocks.insert((l.clone(), l), v);
        }
        out
    }

    /// The element with a single block, validated.
    pub fn single(l1: &ResidueTuple, l2: &ResidueTuple, value: HhatElement<Laurent>) -> Result<Self> {
        let mut out = Self::zero(l1.r(), l1.n());
        out.add_block(l1.clone(), l2.clone(), &value)?;
        Ok(out)
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn blocks(&self) -> &BTreeMap<BlockKey, HhatElement<Laurent>> {
        &self.blocks
    }

    pub fn block(&self, l1: &ResidueTuple, l2: &ResidueTuple) -> HhatElement<Laurent> {
        self.blocks
            .get(&(l1.clone(), l2.clone()))
            .cloned()
            .unwrap_or_else(|| HhatElement::zero(self.r, self.n))
    }

    fn check_key(&self, l1: &ResidueTuple, l2: &ResidueTuple) -> Result<ResidueTuple> {
        for l in [l1, l2] {
            if l.r() != self.r || l.n() != self.n {
                return Err(Error::ParamMismatch {
                    r1: self.r,
                    n1: self.n,
                    r2: l.r(),
                    n2: l.n(),
                });
            }
        }
        let l0 = sorted(l1);
        if sorted(l2) != l0 {
            return Err(Error::Incompatible(format!("{l1} and {l2} lie in different orbits")));
        }
        Ok(l0)
    }

    /// Adds `value` to the `(l1, l2)` block after checking its support.
    pub fn add_block(&mut self, l1: ResidueTuple, l2: ResidueTuple, value: &HhatElement<Laurent>) -> Result<()> {
        let l0 = self.check_key(&l1, &l2)?;
        if value.r() != self.r || value.n() != self.n {
            return Err(Error::ParamMismatch {
                r1: self.r,
                n1: self.n,
                r2: value.r(),
                n2: value.n(),
            });
        }
        if let Some((m, _)) = value.terms().find(|(m, _)| m.lambda != l0 || !l0.is_fixed_by(&m.w)) {
            return Err(Error::Incompatible(format!("{m} is outside 1{l0} H 1{l0}")));
        }
        let key = (l1, l2);
        let slot = self
            .blocks
            .entry(key.clone())
            .or_insert_with(|| HhatElement::zero(self.r, self.n));
        *slot += value;
        if slot.is_zero() {
            self.blocks.remove(&key);
        }
        Ok(())
    }

    fn check_params(&self, rhs: &Self) -> Result<()> {
        if (self.r, self.n) != (rhs.r, rhs.n) {
            return Err(Error::ParamMismatch {
                r1: self.r,
                n1: self.n,
                r2: rhs.r,
                n2: rhs.n,
            });
        }
        Ok(())
    }

    /// `(xy)_{l1,l2} = sum_l x_{l1,l} y_{l,l2}`.
    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        let mut by_row: BTreeMap<&ResidueTuple, Vec<(&ResidueTuple, &HhatElement<Laurent>)>> = BTreeMap::new();
        for ((a, b), v) in &rhs.blocks {
            by_row.entry(a).or_default().push((b, v));
        }
        let mut out = Self::zero(self.r, self.n);
        for ((l1, mid), x) in &self.blocks {
            for (l2, y) in by_row.get(mid).into_iter().flatten() {
                let p = x.mul(y);
                if !p.is_zero() {
                    out.add_block(l1.clone(), (*l2).clone(), &p)?;
                }
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("parameter mismatch")
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.check_params(rhs)?;
        let mut out = self.clone();
        for ((a, b), v) in &rhs.blocks {
            out.add_block(a.clone(), b.clone(), v)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: &Laurent) -> Self {
        let mut out = Self::zero(self.r, self.n);
        for (key, v) in &self.blocks {
            let s = v.scale(k);
            if !s.is_zero() {
                out.blocks.insert(key.clone(), s);
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&Laurent::constant(-1))
    }

    /// Applies `f` to every block; blocks mapping to zero are dropped.
    pub fn try_map_blocks(
        &self,
        mut f: impl FnMut(&ResidueTuple, &ResidueTuple, &HhatElement<Laurent>) -> Result<(BlockKey, HhatElement<Laurent>)>,
    ) -> Result<Self> {
        let mut out = Self::zero(self.r, self.n);
        for ((a, b), v) in &self.blocks {
            let ((a2, b2), v2) = f(a, b, v)?;
            out.add_block(a2, b2, &v2)?;
        }
        Ok(out)
    }
}

impl fmt::Display for EElement {
    /// Blocks grouped by orbit, one `[l1, l2]: value` line each.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut by_orbit: BTreeMap<ResidueTuple, Vec<(&BlockKey, &HhatElement<Laurent>)>> = BTreeMap::new();
        for (k, v) in &self.blocks {
            by_orbit.entry(sorted(&k.0)).or_default().push((k, v));
        }
        let mut first = true;
        for (rep, rows) in by_orbit {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "orbit {rep}:")?;
            for ((a, b), v) in rows {
                write!(f, "\n  [{a}, {b}]: {v}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for EElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{},{}]{{{self}}}", self.r, self.n)
    }
}
