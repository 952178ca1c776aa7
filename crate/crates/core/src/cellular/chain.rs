use std::fmt;

use super::gma::GenMatrixAlgebra;

/// One subquotient `J_k / J_{k-1}` of a cell chain, with its matrix algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Layer {
    pub label: String,
    pub gma: GenMatrixAlgebra,
}

impl Layer {
    pub fn new(label: impl Into<String>, gma: GenMatrixAlgebra) -> Self {
        Self {
            label: label.into(),
            gma,
        }
    }

    pub fn rank(&self) -> usize {
        self.gma.dim()
    }

    /// E.g. `Z[x1^+-1, x2^+-1], sigma = [x1^-1, x2^-1]`.
    pub fn base_description(&self) -> String {
        let k = self.gma.nvars();
        let vars: Vec<String> = (1..=k).map(|j| format!("x{j}^+-1")).collect();
        let images: Vec<String> = self
            .gma
            .sigma()
            .images()
            .iter()
            .map(|&(j, e)| format!("x{}^{e}", j + 1))
            .collect();
        format!("Z[{}], sigma = [{}]", vars.join(", "), images.join(", "))
    }
}

/// A chain of cell ideals `0 = J_0 < J_1 < ... < J_m`, layer `k` being `J_k / J_{k-1}`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ChainSpec {
    pub layers: Vec<Layer>,
}

impl ChainSpec {
    pub fn new(layers: Vec<Layer>) -> Self {
        Self { layers }
    }

    pub fn len(&self) -> usize {
        self.layers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.layers.is_empty()
    }

    /// The ideal indices `1..=m`.
    pub fn indices(&self) -> Vec<usize> {
        (1..=self.layers.len()).collect()
    }

    /// `sum rank^2`, the size of a basis over the layer bases.
    pub fn total_rank(&self) -> usize {
        self.layers.iter().map(|l| l.rank() * l.rank()).sum()
    }
}

impl fmt::Display for ChainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.layers.iter().enumerate() {
            if k > 0 {
                writeln!(f)?;
            }
            write!(
                f,
                "J{}: {} rank {} over {}",
                k + 1,
                l.label,
                l.rank(),
                l.base_description()
            )?;
        }
        Ok(())
    }
}

/// The chain of `A (x) B` built from chains `J_1 < ... < J_n` of `A` and
/// `K_1 < ... < K_m` of `B`: layer `a m + b` is `J_{a+1} / J_a (x) K_b / K_{b-1}`.
pub fn chain_tensor(a: &ChainSpec, b: &ChainSpec) -> ChainSpec {
    let mut layers = Vec::with_capacity(a.len() * b.len());
    for ja in &a.layers {
        for kb in &b.layers {
            layers.push(Layer::new(
                format!("{} x {}", ja.label, kb.label),
                ja.gma.tensor(&kb.gma),
            ));
        }
    }
    ChainSpec::new(layers)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cellular::{BMatrix, MLaurent, Sigma};

    fn layer(label: &str, dim: usize) -> Layer {
        Layer::new(
            label,
            GenMatrixAlgebra::new(BMatrix::identity(dim, 1), Sigma::invert_all(1)).unwrap(),
        )
    }

    #[test]
    fn interleaved_order() {
        let a = ChainSpec::new(vec![layer("J1", 1), layer("J2", 2)]);
        let b = ChainSpec::new(vec![layer("K1", 2), layer("K2", 1)]);
        let t = chain_tensor(&a, &b);
        let labels: Vec<&str> = t.layers.iter().map(|l| l.label.as_str()).collect();
        assert_eq!(labels, ["J1 x K1", "J1 x K2", "J2 x K1", "J2 x K2"]);
        let ranks: Vec<usize> = t.layers.iter().map(Layer::rank).collect();
        assert_eq!(ranks, [2, 1, 4, 2]);
        assert_eq!(t.indices(), [1, 2, 3, 4]);
        assert_eq!(t.total_rank(), a.total_rank() * b.total_rank());
        assert_eq!(t.layers[0].gma.nvars(), 2);
        assert!(t.layers.iter().all(|l| l.gma.compatibility_witness().is_none()));
        assert_eq!(
            t.layers[3].base_description(),
            "Z[x1^+-1, x2^+-1], sigma = [x1^-1, x2^-1]"
        );
        let one = MLaurent::one(2);
        assert_eq!(*t.layers[2].gma.psi().get(3, 3), one);
    }
}
