use super::gma::{BMatrix, GenMatrixAlgebra};
use crate::error::Result;
use crate::report::Report;

pub type BinaryOp<'a, T> = Box<dyn Fn(&T, &T) -> T + 'a>;
pub type UnaryOp<'a, T> = Box<dyn Fn(&T) -> T + 'a>;
pub type IsoMap<'a, T> = Box<dyn Fn(&T) -> Result<BMatrix> + 'a>;

/// An ideal `J` with a basis, the ambient product and involution, and a
/// candidate isomorphism of `J` onto a generalised matrix algebra.
pub struct CellIdealInstance<'a, T> {
    pub name: String,
    pub basis: Vec<T>,
    /// Generators of the ambient algebra, used for the two-sided ideal check.
    pub ambient: Vec<T>,
    pub gma: GenMatrixAlgebra,
    pub mul: BinaryOp<'a, T>,
    pub involution: UnaryOp<'a, T>,
    /// Errors when the argument is not in `J`.
    pub iso: IsoMap<'a, T>,
    pub show: Box<dyn Fn(&T) -> String + 'a>,
}

fn first<I: Iterator<Item = std::result::Result<(), String>>>(mut it: I) -> std::result::Result<(), String> {
    it.find(|r| r.is_err()).unwrap_or(Ok(()))
}

/// Checks that `J` is an involution-stable two-sided ideal, that the
/// isomorphism is multiplicative, and that it carries each basis element to
/// some `E_jl(b)` with the involution matching `E_lj(sigma(b))`.
pub fn cell_ideal_check<T: PartialEq>(inst: &CellIdealInstance<'_, T>) -> Report {
    let mut report = Report::new(format!("cell ideal {}", inst.name));
    let show = &inst.show;
    let inv = &inst.involution;
    let mul = &inst.mul;
    let iso = &inst.iso;

    report.record_result(
        "(a) two-sided ideal",
        first(inst.ambient.iter().flat_map(|g| {
            inst.basis.iter().map(move |b| {
                for (side, p) in [("left", mul(g, b)), ("right", mul(b, g))] {
                    iso(&p).map_err(|e| format!("{side} product of {} and {}: {e}", show(g), show(b)))?;
                }
                Ok(())
            })
        })),
    );
    report.record_result(
        "(a) anti-involution",
        first(inst.ambient.iter().chain(&inst.basis).flat_map(|x| {
            inst.basis.iter().map(move |y| {
                if inv(&mul(x, y)) != mul(&inv(y), &inv(x)) {
                    return Err(format!("i({} * {}) != i(y) i(x)", show(x), show(y)));
                }
                if inv(&inv(y)) != *y {
                    return Err(format!("i(i({})) differs", show(y)));
                }
                Ok(())
            })
        })),
    );
    report.record_result(
        "(a) i(J) in J",
        first(
            inst.basis
                .iter()
                .map(|b| iso(&inv(b)).map(|_| ()).map_err(|e| format!("i({}): {e}", show(b)))),
        ),
    );
    report.record_result(
        "(b) multiplicative",
        first(inst.basis.iter().flat_map(|x| {
            inst.basis.iter().map(move |y| {
                let lhs = iso(&mul(x, y)).map_err(|e| e.to_string())?;
                let rhs = inst
                    .gma
                    .mul(&iso(x).map_err(|e| e.to_string())?, &iso(y).map_err(|e| e.to_string())?)
                    .map_err(|e| e.to_string())?;
                if lhs != rhs {
                    return Err(format!("{} * {}: {lhs} vs {rhs}", show(x), show(y)));
                }
                Ok(())
            })
        })),
    );
    let mut images = Vec::new();
    report.record_result(
        "(c) elementary images",
        first(inst.basis.iter().map(|b| {
            let m = iso(b).map_err(|e| e.to_string())?;
            let support = m.support();
            if support.len() != 1 {
                return Err(format!("{} maps to {m}", show(b)));
            }
            let (j, l, v) = support[0];
            let expect = BMatrix::elementary(m.dim(), l, j, inst.gma.sigma().apply(v));
            let got = iso(&inv(b)).map_err(|e| e.to_string())?;
            if got != expect || inst.gma.kappa(&m) != expect {
                return Err(format!("iso(i({})) = {got}, expected {expect}", show(b)));
            }
            images.push(m);
            Ok(())
        })),
    );
    let dim = inst.gma.dim();
    let mut pos = vec![0usize; dim * dim];
    for m in &images {
        let (j, l, _) = m.support()[0];
        pos[j * dim + l] += 1;
    }
    report.record(
        "(c) every position hit once",
        images.len() == inst.basis.len() && pos.iter().all(|&k| k == 1),
    );
    report
}
