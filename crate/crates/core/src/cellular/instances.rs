use super::gma::{BMatrix, GenMatrixAlgebra};
use super::ideal::CellIdealInstance;
use super::mlaurent::{MLaurent, Sigma};
use crate::coeffs::Laurent;
use crate::combinatorics::{ExtAffineElem, Perm, ResidueTuple};
use crate::error::{Error, Result};
use crate::idem_presentation::{HhatElement, Monomial};
use crate::matrix_model::MatrixModel;

/// The longest element of the stabiliser of `l0` in `S_n`.
pub fn longest_stabilizer_element(l0: &ResidueTuple) -> Perm {
    Perm::all(l0.n())
        .into_iter()
        .filter(|w| l0.is_fixed_by(w))
        .max_by_key(Perm::length)
        .expect("identity fixes every tuple")
}

/// `q^-N sum_{x in W} q^{2 l(x)}` over the stabiliser of `l0`, `N = l(w_0)`.
pub fn stabilizer_poincare(l0: &ResidueTuple) -> Laurent {
    let w0 = longest_stabilizer_element(l0).length() as i32;
    let mut out = Laurent::zero();
    for w in Perm::all(l0.n()).iter().filter(|w| l0.is_fixed_by(w)) {
        out.add_term(2 * w.length() as i32 - w0, 1);
    }
    out
}

/// The finite part of the orbit of `l0`: the span of `Phi(E_{l1,l2}(c_{w_0}))`.
///
/// `iso` reads off the coefficient of `c_{w_0}` in each block of `Psi`, and
/// the matrix algebra is `A` with the form `beta I`, `beta` the Poincare
/// polynomial of the stabiliser.
pub fn finite_orbit_instance<'a>(
    model: &'a MatrixModel,
    l0: &ResidueTuple,
) -> Result<CellIdealInstance<'a, HhatElement<Laurent>>> {
    let (r, n) = (model.r(), model.n());
    let orbit = l0.orbit();
    let dim = orbit.len();
    let w0 = longest_stabilizer_element(l0);
    let cell = model.c_hat(l0, &ExtAffineElem::from_perm(w0.clone()))?;
    let top = Monomial::new(vec![0; n], l0.clone(), w0);
    if cell.coeff(&top) != Laurent::one() {
        return Err(Error::CheckFailed(format!("c_w0 at {l0} is not monic")));
    }
    let mut basis = Vec::with_capacity(dim * dim);
    for a in &orbit {
        for b in &orbit {
            let mut x = crate::matrix_model::EElement::zero(r, n);
            x.add_block(a.clone(), b.clone(), &cell)?;
            basis.push(model.phi(&x)?);
        }
    }
    let mut ambient: Vec<HhatElement<Laurent>> = ResidueTuple::all(r, n).iter().map(HhatElement::idem).collect();
    ambient.extend((1..n).map(|i| HhatElement::g(r, n, i)));
    let beta = MLaurent::from_laurent(&stabilizer_poincare(l0));
    let mut psi = BMatrix::zero(dim, 1);
    for j in 0..dim {
        psi.set(j, j, beta.clone());
    }
    let gma = GenMatrixAlgebra::new(psi, Sigma::identity(1))?;
    let iso_orbit = orbit.clone();
    Ok(CellIdealInstance {
        name: format!("finite orbit {l0}"),
        basis,
        ambient,
        gma,
        mul: Box::new(|x, y| x.mul(y)),
        involution: Box::new(move |x| {
            let e = model
                .psi(x)
                .and_then(|p| model.involution(&p))
                .and_then(|i| model.phi(&i));
            e.expect("involution is defined on the whole algebra")
        }),
        iso: Box::new(move |x| {
            let p = model.psi(x)?;
            let mut out = BMatrix::zero(dim, 1);
            for ((a, b), v) in p.blocks() {
                let k = v.coeff(&top);
                if *v != cell.scale(&k) {
                    return Err(Error::CheckFailed(format!(
                        "block ({a}, {b}) = {v} is not a multiple of c_w0"
                    )));
                }
                let j = iso_orbit
                    .iter()
                    .position(|t| t == a)
                    .ok_or_else(|| Error::InvalidTuple(a.to_string()))?;
                let l = iso_orbit
                    .iter()
                    .position(|t| t == b)
                    .ok_or_else(|| Error::InvalidTuple(b.to_string()))?;
                out.set(j, l, MLaurent::from_laurent(&k));
            }
            Ok(out)
        }),
        show: Box::new(|x| x.to_string()),
    })
}

/// `inst` with the image of basis element `index` transposed.
pub fn corrupt_one_image<'a>(
    inst: CellIdealInstance<'a, HhatElement<Laurent>>,
    index: usize,
) -> CellIdealInstance<'a, HhatElement<Laurent>> {
    let target = inst.basis[index].clone();
    let iso = inst.iso;
    CellIdealInstance {
        name: format!("{} with image {index} transposed", inst.name),
        iso: Box::new(move |x| {
            let m = iso(x)?;
            Ok(if *x == target { m.transpose() } else { m })
        }),
        ..inst
    }
}

/// `A` itself as a rank-one cell ideal with the trivial form.
pub fn identity_instance() -> CellIdealInstance<'static, Laurent> {
    CellIdealInstance {
        name: "A over itself".into(),
        basis: vec![Laurent::one()],
        ambient: vec![Laurent::one(), Laurent::q(), Laurent::q().bar()],
        gma: GenMatrixAlgebra::new(BMatrix::identity(1, 1), Sigma::identity(1)).expect("symmetric"),
        mul: Box::new(|x, y| x * y),
        involution: Box::new(Laurent::clone),
        iso: Box::new(|x| Ok(BMatrix::elementary(1, 0, 0, MLaurent::from_laurent(x)))),
        show: Box::new(Laurent::to_string),
    }
}
