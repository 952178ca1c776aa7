use rand::Rng;

use super::chain::{chain_tensor, ChainSpec, Layer};
use super::gma::GenMatrixAlgebra;
use super::ideal::cell_ideal_check;
use super::instances::{corrupt_one_image, finite_orbit_instance, identity_instance};
use crate::combinatorics::ResidueTuple;
use crate::error::Result;
use crate::matrix_model::MatrixModel;
use crate::report::Report;
use crate::sample;

fn first(it: impl IntoIterator<Item = std::result::Result<(), String>>) -> std::result::Result<(), String> {
    it.into_iter().find(|r| r.is_err()).unwrap_or(Ok(()))
}

fn random_chain(rng: &mut impl Rng, prefix: &str, nvars: usize) -> ChainSpec {
    let len = rng.gen_range(1..=3);
    let layers = (0..len)
        .map(|k| {
            let dim = rng.gen_range(1..=3);
            Layer::new(format!("{prefix}{}", k + 1), sample::gma(rng, dim, nvars))
        })
        .collect();
    ChainSpec::new(layers)
}

/// Randomised checks of the matrix algebras and chain tensor products, then
/// the finite orbit blocks of `(r, n)`, the rank-one instance and the
/// corrupted control.
pub fn cellular_suite(r: u32, n: usize, samples: usize, seed: u64, guard: usize) -> Result<Report> {
    let mut rep = Report::new(format!("cellular r={r} n={n}"));
    let mut rng = sample::rng(seed);

    let mut assoc = Vec::new();
    let mut kappa = Vec::new();
    for s in 0..samples {
        let dim = rng.gen_range(1..=3);
        let nv = rng.gen_range(1..=3);
        let a = sample::gma(&mut rng, dim, nv);
        let [x, y, z] = [0; 3].map(|_| sample::bmatrix(&mut rng, dim, nv));
        let xy = a.mul(&x, &y)?;
        assoc.push(if a.mul(&xy, &z)? == a.mul(&x, &a.mul(&y, &z)?)? {
            Ok(())
        } else {
            Err(format!("sample {s}: psi = {}", a.psi()))
        });
        let anti = a.kappa(&xy) == a.mul(&a.kappa(&y), &a.kappa(&x))? && a.anti_automorphism_witness().is_none();
        let bad = GenMatrixAlgebra::unchecked(sample::bmatrix(&mut rng, dim, nv), sample::sigma(&mut rng, nv))?;
        let iff = bad.compatibility_witness().is_none() == bad.anti_automorphism_witness().is_none();
        kappa.push(if anti && iff {
            Ok(())
        } else {
            Err(format!("sample {s}: psi = {}", bad.psi()))
        });
    }
    rep.record_result(format!("gma associativity on {samples} samples"), first(assoc));
    rep.record_result(
        format!("kappa anti-automorphism iff sigma(psi)^t = psi on {samples} samples"),
        first(kappa),
    );

    let mut layers = Vec::new();
    for s in 0..samples {
        let (a, b) = (random_chain(&mut rng, "J", 1), random_chain(&mut rng, "K", 1));
        let t = chain_tensor(&a, &b);
        let m = b.len();
        let ok = t.len() == a.len() * m
            && t.layers.iter().enumerate().all(|(k, l)| {
                let (ja, kb) = (&a.layers[k / m], &b.layers[k % m]);
                l.label == format!("{} x {}", ja.label, kb.label)
                    && l.gma == ja.gma.tensor(&kb.gma)
                    && l.gma.compatibility_witness().is_none()
            });
        layers.push(if ok { Ok(()) } else { Err(format!("sample {s}:\n{t}")) });
    }
    rep.record_result(format!("chain_tensor layers on {samples} samples"), first(layers));

    let model = MatrixModel::new(r, n, guard)?;
    for l0 in ResidueTuple::all_sorted(r, n) {
        let inst = finite_orbit_instance(&model, &l0)?;
        let sub = cell_ideal_check(&inst);
        rep.record_result(
            format!("finite orbit {l0} is a cell ideal of rank {}", inst.gma.dim()),
            first(
                sub.failures()
                    .map(|c| Err(format!("{}: {}", c.name, c.witness.clone().unwrap_or_default()))),
            ),
        );
    }
    let id = cell_ideal_check(&identity_instance());
    rep.record("rank-one identity instance", id.passed());

    let regular = ResidueTuple::all_sorted(r, n)
        .into_iter()
        .find(|l| l.young_stabilizer().is_empty());
    if let Some(l0) = regular {
        let inst = finite_orbit_instance(&model, &l0)?;
        let idx = inst.basis.iter().position(|b| {
            (inst.iso)(b)
                .map(|m| m.support().iter().all(|&(j, l, _)| j != l))
                .unwrap_or(false)
        });
        if let Some(idx) = idx {
            let sub = cell_ideal_check(&corrupt_one_image(inst, idx));
            let caught = sub.failures().any(|c| c.name.starts_with("(c)") && c.witness.is_some());
            rep.record(format!("corrupted control at {l0} fails (c)"), caught);
        }
    }
    Ok(rep)
}
