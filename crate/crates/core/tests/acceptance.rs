//! One line per acceptance criterion; exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use affine_yh::affine_hecke::{kl_suite, phi_suite};
use affine_yh::cellular::cellular_suite;
use affine_yh::combinatorics::{
    factorial, tableau_from_tuple, tuple_from_tableau, Multitableau, ResidueTuple, DEFAULT_GUARD,
};
use affine_yh::idem_presentation::hhat_relation_suite;
use affine_yh::matrix_model::{block_decompose, block_rank_total, canonical_lift_suite, iso_suite, tau_suite};
use affine_yh::report::Report;
use affine_yh::yokonuma::{closure_check, isomorphism_images_suite, y_relation_suite};

const SIZES: [(u32, usize); 3] = [(2, 2), (3, 2), (2, 3)];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn reports(reps: Vec<affine_yh::Result<Report>>) -> Outcome {
    let mut checks = 0;
    for rep in reps {
        let rep = rep.map_err(|e| e.to_string())?;
        if let Some(c) = rep.failures().next() {
            return Err(format!(
                "{}: {} {}",
                rep.title,
                c.name,
                c.witness.clone().unwrap_or_default()
            ));
        }
        checks += rep.len();
    }
    Ok(format!("{checks} checks"))
}

fn relations() -> Outcome {
    reports(
        SIZES
            .iter()
            .flat_map(|&(r, n)| {
                [
                    y_relation_suite(r, n, DEFAULT_GUARD),
                    hhat_relation_suite(r, n, DEFAULT_GUARD),
                ]
            })
            .collect(),
    )
}

fn closure() -> Outcome {
    let mut seen = Vec::new();
    for ((r, n), expect) in SIZES.iter().zip([8, 18, 48]) {
        let (count, closed) = closure_check(*r, *n);
        if count != expect || count != (*r as usize).pow(*n as u32) * factorial(*n) || !closed {
            return Err(format!("({r},{n}): {count} monomials, closed = {closed}"));
        }
        seen.push(count.to_string());
    }
    Ok(format!("{} monomials", seen.join("/")))
}

/// Every one-column standard multitableau, built column by column from
/// subsets of the remaining entries.
fn one_column_tableaux(r: usize, n: usize) -> Vec<Multitableau> {
    fn go(left: u32, k: usize, r: usize, cols: &mut Vec<Vec<usize>>, out: &mut Vec<Multitableau>) {
        if k + 1 == r {
            let last: Vec<usize> = (0..32).filter(|b| left >> b & 1 == 1).map(|b| b as usize + 1).collect();
            cols.push(last);
            out.push(Multitableau::from_columns(cols.clone()).expect("valid columns"));
            cols.pop();
            return;
        }
        let mut sub = left;
        loop {
            let col: Vec<usize> = (0..32).filter(|b| sub >> b & 1 == 1).map(|b| b as usize + 1).collect();
            cols.push(col);
            go(left & !sub, k + 1, r, cols, out);
            cols.pop();
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & left;
        }
    }
    let mut out = Vec::new();
    go((1u32 << n) - 1, 0, r, &mut Vec::new(), &mut out);
    out
}

fn tableaux() -> Outcome {
    let mut total = 0;
    for r in 1..=3u32 {
        for n in 1..=3usize {
            let tuples = ResidueTuple::all(r, n);
            let ts = one_column_tableaux(r as usize, n);
            if ts.len() != tuples.len() {
                return Err(format!("({r},{n}): {} tableaux vs {} tuples", ts.len(), tuples.len()));
            }
            for l in &tuples {
                if tuple_from_tableau(&tableau_from_tuple(l)).map_err(|e| e.to_string())? != *l {
                    return Err(format!("tuple {l}"));
                }
            }
            for t in &ts {
                let l = tuple_from_tableau(t).map_err(|e| e.to_string())?;
                if tableau_from_tuple(&l) != *t {
                    return Err(format!("tableau {t:?}"));
                }
                for i in 1..n {
                    let same_col = t.component_of(i) == t.component_of(i + 1);
                    if same_col != (l.get(i) == l.get(i + 1)) {
                        return Err(format!("adjacency at {i} in {t:?}"));
                    }
                }
            }
            total += ts.len();
        }
    }
    Ok(format!("{total} tuples and tableaux"))
}

fn images() -> Outcome {
    reports(
        SIZES
            .iter()
            .map(|&(r, n)| isomorphism_images_suite(r, n, DEFAULT_GUARD))
            .collect(),
    )
}

fn phi_multiplicative() -> Outcome {
    reports(SIZES.iter().map(|&(r, n)| phi_suite(r, n, 100, 5)).collect())
}

fn isomorphism() -> Outcome {
    reports(
        SIZES
            .iter()
            .map(|&(r, n)| iso_suite(r, n, 3, 100, 1, 6, DEFAULT_GUARD))
            .collect(),
    )
}

fn tau_identities() -> Outcome {
    let mut reps = Vec::new();
    for r in 1..=3 {
        for n in 1..=3 {
            reps.push(tau_suite(r, n, 3, 7, DEFAULT_GUARD));
        }
    }
    reports(reps)
}

fn ranks() -> Outcome {
    for r in 1..=4u32 {
        for n in 1..=4usize {
            let blocks = block_decompose(r, n);
            let expect = (r as usize).pow(n as u32) * factorial(n);
            if block_rank_total(&blocks) != expect {
                return Err(format!("({r},{n}): {} vs {expect}", block_rank_total(&blocks)));
            }
            let covered: usize = blocks.iter().map(|b| b.rep.orbit().len()).sum();
            let sizes: usize = blocks.iter().map(|b| b.n_lambda).sum();
            let tuples = ResidueTuple::all(r, n).len();
            if covered != tuples || sizes != tuples {
                return Err(format!("({r},{n}): orbits cover {covered} of {tuples} tuples"));
            }
        }
    }
    Ok("r, n <= 4".into())
}

fn kl() -> Outcome {
    let mut reps = Vec::new();
    for (n, l) in [(2, 4), (3, 3)] {
        reps.push(kl_suite(n, l, DEFAULT_GUARD).map(|(rep, _)| rep));
    }
    reports(reps)
}

fn canonical_lifts() -> Outcome {
    reports(
        [(2, 2), (2, 3)]
            .iter()
            .map(|&(r, n)| canonical_lift_suite(r, n, 2, DEFAULT_GUARD))
            .collect(),
    )
}

fn cellular() -> Outcome {
    reports(vec![cellular_suite(2, 2, 60, 8, DEFAULT_GUARD)])
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("relation suites", relations),
        ("rank and closure", closure),
        ("tuple and tableau bijection", tableaux),
        ("generator images", images),
        ("phi multiplicative", phi_multiplicative),
        ("matrix model isomorphism", isomorphism),
        ("sorting element identities", tau_identities),
        ("block rank bookkeeping", ranks),
        ("canonical basis", kl),
        ("canonical lifts", canonical_lifts),
        ("cellular kit", cellular),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail}, {secs:.2}s)", k + 1),
            Err(w) => {
                failed += 1;
                println!("FAIL criterion {}: {name}: {w}", k + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
