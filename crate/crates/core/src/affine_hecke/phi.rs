use super::tensor::{Parabolic, TensorElem, TensorExpansion};
use super::BernsteinElem;
use crate::coeffs::Laurent;
use crate::combinatorics::{ExtAffineElem, ResidueTuple};
use crate::error::{Error, Result};
use crate::idem_presentation::{HhatElement, Monomial};
use crate::report::Report;
use crate::sample;

fn check_fixed(lambda: &ResidueTuple, w: &crate::combinatorics::Perm) -> Result<()> {
    if lambda.is_fixed_by(w) {
        return Ok(());
    }
    let bad = w
        .reduced_word()
        .into_iter()
        .find(|&i| lambda.get(i) != lambda.get(i + 1))
        .unwrap_or(0);
    Err(Error::NotInYoungSubgroup(bad))
}

/// `Z^a T_w -> X^a 1_lambda g_w` for `w` in the stabiliser of `lambda`.
pub fn phi(x: &BernsteinElem, lambda: &ResidueTuple) -> Result<HhatElement<Laurent>> {
    if x.n() != lambda.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            got: x.n(),
        });
    }
    let mut out = HhatElement::zero(lambda.r(), lambda.n());
    for (a, w, k) in x.terms() {
        check_fixed(lambda, w)?;
        out.add_term(Monomial::new(a.to_vec(), lambda.clone(), w.clone()), k.clone());
    }
    Ok(out)
}

pub fn phi_tensor(x: &TensorElem, lambda: &ResidueTuple) -> Result<HhatElement<Laurent>> {
    let expect = Parabolic::from_tuple(lambda)?;
    if *x.parabolic() != expect {
        return Err(Error::Incompatible(format!(
            "factor sizes {:?} vs blocks of {lambda}",
            x.parabolic().sizes()
        )));
    }
    phi(x.inner(), lambda)
}

/// Inverse of [`phi`] on `1_lambda H 1_lambda`.
pub fn phi_inverse(h: &HhatElement<Laurent>, lambda: &ResidueTuple) -> Result<BernsteinElem> {
    let mut out = BernsteinElem::zero(lambda.n());
    for (m, k) in h.terms() {
        if m.lambda != *lambda || !lambda.is_fixed_by(&m.w) {
            return Err(Error::Incompatible(format!("{m} is outside 1{lambda} H 1{lambda}")));
        }
        out.add_term(m.alpha.clone(), m.w.clone(), k.clone());
    }
    Ok(out)
}

/// `g_{w,lambda} = phi(T_w)`, with `T_w` from the tensor basis.
pub fn g_hat(lambda: &ResidueTuple, w: &ExtAffineElem) -> Result<HhatElement<Laurent>> {
    let p = Parabolic::from_tuple(lambda)?;
    phi(&p.basis_to_bernstein(w)?, lambda)
}

/// `c_{w,lambda} = phi(c_w)`.
pub fn c_hat(lambda: &ResidueTuple, w: &ExtAffineElem, guard: usize) -> Result<HhatElement<Laurent>> {
    let p = Parabolic::from_tuple(lambda)?;
    phi(&p.to_bernstein(&p.kl_basis(w, guard)?)?, lambda)
}

/// The bar involution of `1_lambda H 1_lambda` transported along `phi`.
pub fn transported_bar(h: &HhatElement<Laurent>, lambda: &ResidueTuple) -> Result<HhatElement<Laurent>> {
    let p = Parabolic::from_tuple(lambda)?;
    phi(&p.bar_bernstein(&phi_inverse(h, lambda)?)?, lambda)
}

/// The anti-involution `T_w -> T_{w^-1}`.
pub fn flat(x: &TensorExpansion) -> TensorExpansion {
    x.iter().map(|(w, k)| (w.inverse(), k.clone())).collect()
}

/// `phi` is multiplicative on all pairs of generators `Z_j^{+-1}`, `T_i^{+-1}`
/// of each parabolic subalgebra and on `pairs` random pairs, and sends `1`
/// to `1_lambda`.
pub fn phi_suite(r: u32, n: usize, pairs: usize, seed: u64) -> Result<Report> {
    let mut rep = Report::new(format!("phi r={r} n={n}"));
    let mut rng = sample::rng(seed);
    for lambda in ResidueTuple::all_sorted(r, n) {
        let p = Parabolic::from_tuple(&lambda)?;
        let mut gens = vec![BernsteinElem::one(n)];
        for j in 1..=n {
            gens.push(BernsteinElem::z(n, j, 1));
            gens.push(BernsteinElem::z(n, j, -1));
        }
        for i in lambda.young_stabilizer() {
            gens.push(BernsteinElem::t(n, i));
            gens.push(BernsteinElem::t_inv(n, i));
        }
        let mut all: Vec<(BernsteinElem, BernsteinElem)> = Vec::new();
        for a in &gens {
            for b in &gens {
                all.push((a.clone(), b.clone()));
            }
        }
        let gen_pairs = all.len();
        for _ in 0..pairs {
            all.push((
                sample::bernstein_in(&mut rng, &p, 2, 1),
                sample::bernstein_in(&mut rng, &p, 2, 1),
            ));
        }
        let mut ok = Ok(());
        for (a, b) in &all {
            if phi(&a.mul(b), &lambda)? != phi(a, &lambda)?.mul(&phi(b, &lambda)?) {
                ok = Err(format!("{a} ; {b}"));
                break;
            }
        }
        rep.record_result(
            format!("{lambda}: multiplicative on {gen_pairs} generator and {pairs} random pairs"),
            ok,
        );
        rep.record(
            format!("{lambda}: phi(1) = 1_lambda"),
            phi(&BernsteinElem::one(n), &lambda)? == HhatElement::idem(&lambda),
        );
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{Perm, DEFAULT_GUARD};
    use crate::idem_presentation::{nf, GenWord};

    type B = BernsteinElem;

    fn tuple(r: u32, e: &[u32]) -> ResidueTuple {
        ResidueTuple::new(r, e.to_vec()).unwrap()
    }

    #[test]
    fn spec_examples() {
        let l = tuple(2, &[1, 1]);
        assert_eq!(phi(&B::one(2), &l).unwrap(), HhatElement::idem(&l));
        let g1 = HhatElement::g(2, 2, 1).mul(&HhatElement::idem(&l));
        assert_eq!(phi(&B::t(2, 1), &l).unwrap(), g1);
        let lhs = phi(&B::t(2, 1).mul(&B::z(2, 1, 1)).mul(&B::t(2, 1)), &l).unwrap();
        let word = GenWord::parse(2, 2, "X2 1(1,1)").unwrap();
        assert_eq!(lhs, nf::<Laurent>(&word).unwrap());
        assert_eq!(phi(&B::z(2, 2, 1), &l).unwrap(), lhs);
    }

    #[test]
    fn rejects_generators_outside_the_stabiliser() {
        let l = tuple(2, &[1, 2]);
        assert_eq!(phi(&B::t(2, 1), &l), Err(Error::NotInYoungSubgroup(1)));
        let x = phi(&B::z(2, 1, 3), &l).unwrap();
        assert_eq!(phi_inverse(&x, &l).unwrap(), B::z(2, 1, 3));
        assert!(phi_inverse(&HhatElement::g(2, 2, 1), &l).is_err());
    }

    #[test]
    fn canonical_elements_are_transported() {
        let l = tuple(2, &[1, 1]);
        let s = ExtAffineElem::s(2, 1);
        let c = c_hat(&l, &s, DEFAULT_GUARD).unwrap();
        let mut expect = g_hat(&l, &s).unwrap();
        expect += &HhatElement::idem(&l).scale(&Laurent::monomial(1, -1));
        assert_eq!(c, expect);
        assert_eq!(transported_bar(&c, &l).unwrap(), c);
    }

    #[test]
    fn flat_inverts_keys() {
        let w = ExtAffineElem::new(vec![1, 0], Perm::s(2, 1)).unwrap();
        let mut x = TensorExpansion::new();
        x.insert(w.clone(), Laurent::q());
        assert_eq!(flat(&flat(&x)), x);
        assert!(flat(&x).contains_key(&w.inverse()));
    }
}
