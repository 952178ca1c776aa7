use rand::Rng;

use super::model::MatrixModel;
use super::tau::random_sort_word;
use crate::coeffs::Laurent;
use crate::combinatorics::{Perm, ResidueTuple};
use crate::error::Result;
use crate::idem_presentation::{HhatElement, Monomial};
use crate::report::Report;
use crate::sample;

/// Every PBW monomial `X^a 1_l g_w` with entries of `a` in `-1..=1`.
pub fn small_monomials(r: u32, n: usize) -> Vec<HhatElement<Laurent>> {
    let mut alphas: Vec<Vec<i32>> = vec![Vec::new()];
    for _ in 0..n {
        alphas = alphas
            .into_iter()
            .flat_map(|a| {
                (-1..=1).map(move |e| {
                    let mut v = a.clone();
                    v.push(e);
                    v
                })
            })
            .collect();
    }
    let mut out = Vec::new();
    for l in ResidueTuple::all(r, n) {
        for w in Perm::all(n) {
            for a in &alphas {
                let m = Monomial::new(a.clone(), l.clone(), w.clone());
                out.push(HhatElement::from_monomial(r, m, Laurent::one()));
            }
        }
    }
    out
}

fn first_failure<T>(
    items: impl IntoIterator<Item = T>,
    mut ok: impl FnMut(&T) -> Result<bool>,
    show: impl Fn(&T) -> String,
) -> std::result::Result<(), String> {
    for it in items {
        match ok(&it) {
            Ok(true) => {}
            Ok(false) => return Err(show(&it)),
            Err(e) => return Err(format!("{}: {e}", show(&it))),
        }
    }
    Ok(())
}

/// Round trips of `Psi` and `Phi` and their multiplicativity; random
/// elements have `X`-exponents in `-max_deg..=max_deg`.
pub fn iso_suite(
    r: u32,
    n: usize,
    max_len: usize,
    pairs: usize,
    max_deg: i32,
    seed: u64,
    guard: usize,
) -> Result<Report> {
    let m = MatrixModel::new(r, n, guard)?;
    let mut rep = Report::new(format!("matrix model isomorphism r={r} n={n}"));
    let monos = small_monomials(r, n);
    rep.record_result(
        format!("Phi(Psi(h)) = h on {} monomials", monos.len()),
        first_failure(&monos, |h| Ok(m.phi(&m.psi(h)?)? == **h), |h| h.to_string()),
    );
    let triples = m.triples(max_len)?;
    rep.record_result(
        format!("Psi(Phi(x)) = x on {} basis elements, l(w) <= {max_len}", triples.len()),
        first_failure(
            &triples,
            |(a, b, w)| {
                let x = m.x_basis(a, b, w)?;
                Ok(m.psi(&m.phi(&x)?)? == x)
            },
            |(a, b, w)| format!("({a}, {b}, {w})"),
        ),
    );
    let mut rng = sample::rng(seed);
    let hs: Vec<(HhatElement<Laurent>, HhatElement<Laurent>)> = (0..pairs)
        .map(|_| {
            (
                sample::hhat(&mut rng, r, n, 2, max_deg),
                sample::hhat(&mut rng, r, n, 2, max_deg),
            )
        })
        .collect();
    rep.record_result(
        format!("Psi(hh') = Psi(h)Psi(h') on {pairs} random pairs"),
        first_failure(
            &hs,
            |(a, b)| Ok(m.psi(&a.mul(b))? == m.psi(a)?.mul(&m.psi(b)?)),
            |(a, b)| format!("{a} ; {b}"),
        ),
    );
    rep.record_result(
        format!("Phi(Psi(h)) = h on {pairs} random elements"),
        first_failure(&hs, |(a, _)| Ok(m.phi(&m.psi(a)?)? == *a), |(a, _)| a.to_string()),
    );
    let xs: Vec<_> = (0..pairs)
        .map(|_| {
            let pick = |rng: &mut rand_chacha::ChaCha8Rng| {
                let (a, b, w) = &triples[rng.gen_range(0..triples.len())];
                m.x_basis(a, b, w).map(|x| x.scale(&sample::laurent(rng)))
            };
            let mut x = pick(&mut rng)?;
            x = x.try_add(&pick(&mut rng)?)?;
            let y = pick(&mut rng)?.try_add(&pick(&mut rng)?)?;
            Ok((x, y))
        })
        .collect::<Result<_>>()?;
    rep.record_result(
        format!("Phi(xy) = Phi(x)Phi(y) on {pairs} random pairs"),
        first_failure(
            &xs,
            |(x, y)| Ok(m.phi(&x.mul(y))? == m.phi(x)?.mul(&m.phi(y)?)),
            |(x, y)| format!("{x} ; {y}"),
        ),
    );
    Ok(rep)
}

/// The identities of the sorting elements, and invertibility under random
/// alternate sorting words.
pub fn tau_suite(r: u32, n: usize, alternates: usize, seed: u64, guard: usize) -> Result<Report> {
    let mut rep = Report::new(format!("sorting elements r={r} n={n}"));
    let m = MatrixModel::new(r, n, guard)?;
    for l in ResidueTuple::all(r, n) {
        let t = m.tau(&l);
        let l0 = super::sorted(&l);
        let e0 = HhatElement::idem(&l0);
        let e = HhatElement::idem(&l);
        let ok = e0.mul(&t.tau).mul(&t.tau_prime) == e0 && e.mul(&t.tau_prime).mul(&t.tau) == e;
        rep.record(format!("tau identities for {l} with word {:?}", t.word), ok);
    }
    let mut rng = sample::rng(seed);
    let monos = small_monomials(r, n);
    let triples = m.triples(1)?;
    for k in 0..alternates {
        let alt = MatrixModel::with_words(r, n, guard, |l| Ok(random_sort_word(&mut rng, l, 2)))?;
        let picks: Vec<&HhatElement<Laurent>> = (0..20).map(|_| &monos[rng.gen_range(0..monos.len())]).collect();
        let left = first_failure(&picks, |h| Ok(alt.phi(&alt.psi(h)?)? == ***h), |h| h.to_string());
        let right = first_failure(
            &triples,
            |(a, b, w)| {
                let x = alt.x_basis(a, b, w)?;
                Ok(alt.psi(&alt.phi(&x)?)? == x)
            },
            |(a, b, w)| format!("({a}, {b}, {w})"),
        );
        rep.record_result(
            format!("alternate words #{k}: both composites are identities"),
            left.and(right),
        );
    }
    Ok(rep)
}

/// Lifting a canonical block value through the sorting elements gives the
/// canonical element solved inside the matrix model.
pub fn canonical_lift_suite(r: u32, n: usize, max_len: usize, guard: usize) -> Result<Report> {
    let m = MatrixModel::new(r, n, guard)?;
    let mut rep = Report::new(format!("canonical lifts r={r} n={n}"));
    let triples = m.triples(max_len)?;
    rep.record_result(
        format!("Psi(lift(g)) = x on {} triples", triples.len()),
        first_failure(
            &triples,
            |(a, b, w)| {
                let x = m.x_basis(a, b, w)?;
                Ok(m.psi(&m.lift(a, b, &x.block(a, b))?)? == x)
            },
            |(a, b, w)| format!("({a}, {b}, {w})"),
        ),
    );
    rep.record_result(
        format!("Psi(lift(c)) = c on {} triples", triples.len()),
        first_failure(
            &triples,
            |(a, b, w)| {
                let l0 = super::sorted(a);
                let lifted = m.psi(&m.lift(a, b, &m.c_hat(&l0, w)?)?)?;
                let solved = m.c_basis_solved(a, b, w)?;
                Ok(lifted == solved && m.bar(&solved)? == solved)
            },
            |(a, b, w)| format!("({a}, {b}, {w})"),
        ),
    );
    Ok(rep)
}

/// `i(c^{a,b;w}) = c^{b,a;w^-1}`, `i^2 = 1` and `i(xy) = i(y) i(x)`.
pub fn involution_suite(r: u32, n: usize, max_len: usize, pairs: usize, seed: u64, guard: usize) -> Result<Report> {
    let m = MatrixModel::new(r, n, guard)?;
    let mut rep = Report::new(format!("matrix model involution r={r} n={n}"));
    let triples = m.triples(max_len)?;
    rep.record_result(
        format!("i(c) = c' on {} triples", triples.len()),
        first_failure(
            &triples,
            |(a, b, w)| {
                let c = m.c_basis(a, b, w)?;
                let ic = m.involution(&c)?;
                Ok(ic == m.c_basis(b, a, &w.inverse())? && m.involution(&ic)? == c)
            },
            |(a, b, w)| format!("({a}, {b}, {w})"),
        ),
    );
    let mut rng = sample::rng(seed);
    let mut xs = Vec::new();
    for _ in 0..pairs {
        let (a, b, w) = &triples[rng.gen_range(0..triples.len())];
        let (c, d, v) = &triples[rng.gen_range(0..triples.len())];
        xs.push((m.x_basis(a, b, w)?, m.x_basis(c, d, v)?));
    }
    rep.record_result(
        format!("i is an anti-automorphism on {pairs} random pairs"),
        first_failure(
            &xs,
            |(x, y)| Ok(m.involution(&x.mul(y))? == m.involution(y)?.mul(&m.involution(x)?)),
            |(x, y)| format!("{x} ; {y}"),
        ),
    );
    Ok(rep)
}
