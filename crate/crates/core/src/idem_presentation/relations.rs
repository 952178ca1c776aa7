use super::{qq, HhatElement};
use crate::coeffs::Laurent;
use crate::combinatorics::{factorial, ResidueTuple};
use crate::error::{Error, Result};
use crate::report::Report;

type H = HhatElement<Laurent>;

pub(crate) fn compare<C: crate::coeffs::Scalar>(
    lhs: &HhatElement<C>,
    rhs: &HhatElement<C>,
) -> std::result::Result<(), String> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("lhs - rhs = {}", lhs - rhs))
    }
}

pub(crate) fn check_size(r: u32, n: usize, guard: usize) -> Result<()> {
    let rank = (r as usize).pow(n as u32) * factorial(n);
    if rank > guard {
        return Err(Error::GuardExceeded {
            what: "finite rank r^n n!",
            needed: rank,
            limit: guard,
        });
    }
    Ok(())
}

/// Every defining relation of the finite and affine idempotent presentation,
/// plus the derived commutation rules for `X_j = g_{j-1} X_{j-1} g_{j-1}`.
pub fn hhat_relation_suite(r: u32, n: usize, guard: usize) -> Result<Report> {
    check_size(r, n, guard)?;
    let mut rep = Report::new(format!("relations of Hhat({r},{n})"));
    let one = H::one(r, n);
    let g: Vec<H> = (0..n)
        .map(|i| if i == 0 { H::zero(r, n) } else { H::g(r, n, i) })
        .collect();
    let tuples = ResidueTuple::all(r, n);
    let c = qq::<Laurent>();

    for i in 1..n {
        for j in i + 2..n {
            rep.record_result(
                format!("g{i} g{j} = g{j} g{i}"),
                compare(&(&g[i] * &g[j]), &(&g[j] * &g[i])),
            );
        }
        if i + 1 < n {
            let lhs = &(&g[i] * &g[i + 1]) * &g[i];
            let rhs = &(&g[i + 1] * &g[i]) * &g[i + 1];
            rep.record_result(
                format!("g{i} g{} g{i} = g{} g{i} g{}", i + 1, i + 1, i + 1),
                compare(&lhs, &rhs),
            );
        }
        let mut ok = Ok(());
        for lam in &tuples {
            let lhs = &g[i] * &H::idem(lam);
            let rhs = &H::idem(&lam.swap(i)) * &g[i];
            if let Err(e) = compare(&lhs, &rhs) {
                ok = Err(format!("lambda = {lam}: {e}"));
                break;
            }
        }
        rep.record_result(format!("g{i} 1_l = 1_(s{i} l) g{i}"), ok);
        let mut rhs = one.clone();
        for lam in tuples.iter().filter(|l| l.get(i) == l.get(i + 1)) {
            rhs += &(&g[i] * &H::idem(lam)).scale(&c);
        }
        rep.record_result(format!("g{i}^2 quadratic relation"), compare(&(&g[i] * &g[i]), &rhs));
        rep.record_result(
            format!("g{i} g{i}^-1 = g{i}^-1 g{i} = 1"),
            compare(&(&g[i] * &H::g_inv(r, n, i)), &one).and(compare(&(&H::g_inv(r, n, i) * &g[i]), &one)),
        );
    }

    let total = tuples.iter().fold(H::zero(r, n), |acc, l| &acc + &H::idem(l));
    rep.record_result("sum of 1_l = 1", compare(&total, &one));
    let mut ok = Ok(());
    'outer: for a in &tuples {
        for b in &tuples {
            let expect = if a == b { H::idem(a) } else { H::zero(r, n) };
            if let Err(e) = compare(&(&H::idem(a) * &H::idem(b)), &expect) {
                ok = Err(format!("{a} {b}: {e}"));
                break 'outer;
            }
        }
    }
    rep.record_result("1_l 1_m = delta 1_l", ok);

    let x1 = H::x_power(r, n, 1, 1)?;
    let x1i = H::x_power(r, n, 1, -1)?;
    rep.record_result(
        "X1 X1^-1 = X1^-1 X1 = 1",
        compare(&(&x1 * &x1i), &one).and(compare(&(&x1i * &x1), &one)),
    );
    if n >= 2 {
        let lhs = &(&(&g[1] * &x1) * &g[1]) * &x1;
        let rhs = &(&(&x1 * &g[1]) * &x1) * &g[1];
        rep.record_result("g1 X1 g1 X1 = X1 g1 X1 g1", compare(&lhs, &rhs));
    }
    for (i, gi) in g.iter().enumerate().take(n).skip(2) {
        rep.record_result(format!("g{i} X1 = X1 g{i}"), compare(&(gi * &x1), &(&x1 * gi)));
    }
    let mut ok = Ok(());
    for lam in &tuples {
        if let Err(e) = compare(&(&x1 * &H::idem(lam)), &(&H::idem(lam) * &x1)) {
            ok = Err(format!("{lam}: {e}"));
            break;
        }
    }
    rep.record_result("X1 1_l = 1_l X1", ok);

    // X_j built from the generators only
    let mut xs = vec![x1.clone()];
    let mut xis = vec![x1i.clone()];
    for i in 1..n {
        let next = &(&g[i] * &xs[i - 1]) * &g[i];
        let gi = H::g_inv(r, n, i);
        let next_inv = &(&gi * &xis[i - 1]) * &gi;
        rep.record_result(
            format!("g{i} X{i} g{i} = X{}", i + 1),
            compare(&next, &H::x_power(r, n, i + 1, 1)?),
        );
        rep.record_result(
            format!("X{} X{}^-1 = 1", i + 1, i + 1),
            compare(&(&next * &next_inv), &one),
        );
        xs.push(next);
        xis.push(next_inv);
    }
    for a in 0..n {
        for b in a + 1..n {
            rep.record_result(
                format!("X{} X{} = X{} X{}", a + 1, b + 1, b + 1, a + 1),
                compare(&(&xs[a] * &xs[b]), &(&xs[b] * &xs[a])),
            );
        }
        let mut ok = Ok(());
        for lam in &tuples {
            if let Err(e) = compare(&(&xs[a] * &H::idem(lam)), &(&H::idem(lam) * &xs[a])) {
                ok = Err(format!("{lam}: {e}"));
                break;
            }
        }
        rep.record_result(format!("X{} 1_l = 1_l X{}", a + 1, a + 1), ok);
        for (i, gi) in g.iter().enumerate().take(n).skip(1) {
            if a + 1 != i && a + 1 != i + 1 {
                rep.record_result(
                    format!("g{i} X{} = X{} g{i}", a + 1, a + 1),
                    compare(&(gi * &xs[a]), &(&xs[a] * gi)),
                );
            }
        }
    }
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::DEFAULT_GUARD;

    #[test]
    fn suites_pass() {
        for (r, n) in [(2, 2), (3, 2), (2, 3), (1, 3), (2, 1)] {
            let rep = hhat_relation_suite(r, n, DEFAULT_GUARD).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }

    #[test]
    fn guard() {
        assert!(hhat_relation_suite(4, 4, 100).is_err());
    }
}
