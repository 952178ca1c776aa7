use std::fmt;

use super::mlaurent::{MLaurent, Sigma};
use crate::error::{Error, Result};

/// A square matrix over a multivariate Laurent ring, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct BMatrix {
    dim: usize,
    nvars: usize,
    entries: Vec<MLaurent>,
}

impl BMatrix {
    pub fn zero(dim: usize, nvars: usize) -> Self {
        Self {
            dim,
            nvars,
            entries: vec![MLaurent::zero(nvars); dim * dim],
        }
    }

    pub fn identity(dim: usize, nvars: usize) -> Self {
        let mut out = Self::zero(dim, nvars);
        for i in 0..dim {
            out.set(i, i, MLaurent::one(nvars));
        }
        out
    }

    /// `E_{jl}(b)`, 0-based.
    pub fn elementary(dim: usize, j: usize, l: usize, b: MLaurent) -> Self {
        let mut out = Self::zero(dim, b.nvars());
        out.set(j, l, b);
        out
    }

    pub fn from_rows(rows: Vec<Vec<MLaurent>>) -> Result<Self> {
        let dim = rows.len();
        let nvars = rows.first().and_then(|r| r.first()).map_or(0, MLaurent::nvars);
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::SizeMismatch {
                    expected: dim,
                    got: row.len(),
                });
            }
            for e in row {
                if e.nvars() != nvars {
                    return Err(Error::SizeMismatch {
                        expected: nvars,
                        got: e.nvars(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(Self { dim, nvars, entries })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn get(&self, i: usize, j: usize) -> &MLaurent {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: MLaurent) {
        self.entries[i * self.dim + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(MLaurent::is_zero)
    }

    /// The nonzero entries `(i, j, value)`.
    pub fn support(&self) -> Vec<(usize, usize, &MLaurent)> {
        (0..self.dim)
            .flat_map(|i| (0..self.dim).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_zero())
            .map(|(i, j)| (i, j, self.get(i, j)))
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let entries = self.entries.iter().zip(&rhs.entries).map(|(a, b)| a.add(b)).collect();
        Ok(Self {
            entries,
            ..self.clone()
        })
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        self.check(rhs)?;
        let mut out = Self::zero(self.dim, self.nvars);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let mut acc = MLaurent::zero(self.nvars);
                for k in 0..self.dim {
                    acc = acc.add(&self.get(i, k).mul(rhs.get(k, j)));
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.dim, self.nvars);
        for i in 0..self.dim {
            for j in 0..self.dim {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn map(&self, f: impl Fn(&MLaurent) -> MLaurent) -> Self {
        Self {
            entries: self.entries.iter().map(f).collect(),
            ..self.clone()
        }
    }

    /// The Kronecker product over the tensor product of the base rings.
    pub fn kron(&self, rhs: &Self) -> Self {
        let nv = self.nvars + rhs.nvars;
        let dim = self.dim * rhs.dim;
        let mut out = Self::zero(dim, nv);
        for i1 in 0..self.dim {
            for j1 in 0..self.dim {
                let a = self.get(i1, j1).embed(nv, 0);
                for i2 in 0..rhs.dim {
                    for j2 in 0..rhs.dim {
                        let b = rhs.get(i2, j2).embed(nv, self.nvars);
                        out.set(i1 * rhs.dim + i2, j1 * rhs.dim + j2, a.mul(&b));
                    }
                }
            }
        }
        out
    }

    fn check(&self, rhs: &Self) -> Result<()> {
        if self.dim != rhs.dim || self.nvars != rhs.nvars {
            return Err(Error::SizeMismatch {
                expected: self.dim,
                got: rhs.dim,
            });
        }
        Ok(())
    }
}

impl fmt::Display for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim).map(|j| self.get(i, j).to_string()).collect();
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BMatrix{{{self}}}")
    }
}

/// The generalised matrix algebra on `dim x dim` matrices over `B` with
/// product `x * psi * y` and involution `x -> sigma(x)^t`.
#[derive(Clone, Debug, PartialEq)]
pub struct GenMatrixAlgebra {
    psi: BMatrix,
    sigma: Sigma,
}

impl GenMatrixAlgebra {
    /// Rejects forms with `sigma(psi)^t != psi`.
    pub fn new(psi: BMatrix, sigma: Sigma) -> Result<Self> {
        let out = Self::unchecked(psi, sigma)?;
        if let Some((i, j)) = out.compatibility_witness() {
            return Err(Error::CheckFailed(format!("sigma(psi[{i},{j}]) != psi[{j},{i}]")));
        }
        Ok(out)
    }

    /// Accepts any form; only `sigma` is required to be an involution.
    pub fn unchecked(psi: BMatrix, sigma: Sigma) -> Result<Self> {
        if sigma.nvars() != psi.nvars() || !sigma.is_involution() {
            return Err(Error::CheckFailed(format!(
                "{sigma:?} is not an involution of the base ring"
            )));
        }
        Ok(Self { psi, sigma })
    }

    pub fn dim(&self) -> usize {
        self.psi.dim()
    }

    pub fn nvars(&self) -> usize {
        self.psi.nvars()
    }

    pub fn psi(&self) -> &BMatrix {
        &self.psi
    }

    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    /// An index pair violating `sigma(psi_ij) = psi_ji`.
    pub fn compatibility_witness(&self) -> Option<(usize, usize)> {
        let d = self.dim();
        (0..d)
            .flat_map(|i| (0..d).map(move |j| (i, j)))
            .find(|&(i, j)| self.sigma.apply(self.psi.get(i, j)) != *self.psi.get(j, i))
    }

    pub fn mul(&self, x: &BMatrix, y: &BMatrix) -> Result<BMatrix> {
        x.matmul(&self.psi)?.matmul(y)
    }

    pub fn kappa(&self, x: &BMatrix) -> BMatrix {
        x.transpose().map(|b| self.sigma.apply(b))
    }

    /// Elementary matrices `E_ab(1), E_cd(1)` with
    /// `kappa(xy) != kappa(y) kappa(x)`; none exist iff the form is compatible.
    pub fn anti_automorphism_witness(&self) -> Option<(usize, usize, usize, usize)> {
        let d = self.dim();
        let one = MLaurent::one(self.nvars());
        let idx: Vec<(usize, usize)> = (0..d).flat_map(|i| (0..d).map(move |j| (i, j))).collect();
        for &(a, b) in &idx {
            for &(c, e) in &idx {
                let x = BMatrix::elementary(d, a, b, one.clone());
                let y = BMatrix::elementary(d, c, e, one.clone());
                let lhs = self.kappa(&self.mul(&x, &y).expect("same shape"));
                let rhs = self.mul(&self.kappa(&y), &self.kappa(&x)).expect("same shape");
                if lhs != rhs {
                    return Some((a, b, c, e));
                }
            }
        }
        None
    }

    /// `(A_1 (x) A_2, psi_1 (x) psi_2, sigma_1 (x) sigma_2)`.
    pub fn tensor(&self, other: &Self) -> Self {
        Self {
            psi: self.psi.kron(&other.psi),
            sigma: self.sigma.tensor(&other.sigma),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> MLaurent {
        MLaurent::var(1, 0, 1)
    }

    #[test]
    fn examples() {
        let a = GenMatrixAlgebra::new(BMatrix::identity(2, 1), Sigma::identity(1)).unwrap();
        let b = q();
        let b2 = MLaurent::constant(1, 3);
        let x = BMatrix::elementary(2, 0, 1, b.clone());
        let y = BMatrix::elementary(2, 1, 0, b2.clone());
        assert_eq!(a.mul(&x, &y).unwrap(), BMatrix::elementary(2, 0, 0, b.mul(&b2)));
        let beta = q().add(&MLaurent::var(1, 0, -1));
        let one = GenMatrixAlgebra::new(BMatrix::elementary(1, 0, 0, beta.clone()), Sigma::invert_all(1)).unwrap();
        let x = BMatrix::elementary(1, 0, 0, b.clone());
        let y = BMatrix::elementary(1, 0, 0, b2.clone());
        assert_eq!(
            one.mul(&x, &y).unwrap(),
            BMatrix::elementary(1, 0, 0, b.mul(&beta).mul(&b2))
        );
        let k = one.kappa(&x);
        assert_eq!(k, BMatrix::elementary(1, 0, 0, MLaurent::var(1, 0, -1)));
        let a = GenMatrixAlgebra::new(BMatrix::identity(2, 1), Sigma::invert_all(1)).unwrap();
        let x = BMatrix::elementary(2, 0, 1, b);
        assert_eq!(a.kappa(&x), BMatrix::elementary(2, 1, 0, MLaurent::var(1, 0, -1)));
        assert_eq!(a.kappa(&a.kappa(&x)), x);
    }

    #[test]
    fn incompatible_forms_are_rejected_and_break_kappa() {
        let mut psi = BMatrix::identity(2, 1);
        psi.set(0, 1, q());
        assert!(GenMatrixAlgebra::new(psi.clone(), Sigma::identity(1)).is_err());
        let bad = GenMatrixAlgebra::unchecked(psi.clone(), Sigma::identity(1)).unwrap();
        assert!(bad.anti_automorphism_witness().is_some());
        psi.set(1, 0, q());
        let good = GenMatrixAlgebra::new(psi, Sigma::identity(1)).unwrap();
        assert!(good.anti_automorphism_witness().is_none());
    }
}
