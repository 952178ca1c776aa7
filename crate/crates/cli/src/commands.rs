//! Argument parsing and the commands.

use std::fmt::Write as _;
use std::fs;
use std::io;

use affine_yh::affine_hecke::kl_suite;
use affine_yh::cellular::cellular_suite;
use affine_yh::combinatorics::DEFAULT_GUARD;
use affine_yh::idem_presentation::{hhat_relation_suite, nf, GenWord, HhatElement};
use affine_yh::matrix_model::{block_decompose, block_rank_total, iso_suite, tau_suite, MatrixModel};
use affine_yh::report::Report;
use affine_yh::yokonuma::{closure_check, isomorphism_images_suite, to_idempotent_presentation, y_relation_suite};
use affine_yh::{CycScalar, Error, Laurent};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::doc::{Element, ElementDoc};

#[derive(Parser, Debug)]
#[command(
    name = "affine-yh",
    version,
    about = "Exact computations in affine Yokonuma-Hecke algebras"
)]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Number of residues.
    #[arg(long, global = true, default_value_t = 2)]
    pub r: u32,
    /// Rank.
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,
    /// Length bound for Weyl group elements.
    #[arg(long, global = true, default_value_t = 2)]
    pub maxlen: usize,
    /// Exponent bound for random PBW monomials.
    #[arg(long = "max-deg", global = true, default_value_t = 1)]
    pub max_deg: i32,
    /// Number of random samples.
    #[arg(long, global = true, default_value_t = 30)]
    pub samples: usize,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// JSON output.
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Text output (the default).
    #[arg(long, global = true)]
    pub text: bool,
    /// Limit on enumerated sets.
    #[arg(long, global = true, default_value_t = DEFAULT_GUARD)]
    pub guard: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a generator word or an element document.
    Nf {
        /// Generator word such as `g1 X2^-1 1(1,2)`.
        word: Option<String>,
        /// Element document, `-` for stdin.
        #[arg(long)]
        input: Option<String>,
        /// Tag for the output of a word.
        #[arg(long, value_enum, default_value_t = WordAlgebra::Hhat)]
        algebra: WordAlgebra,
    },
    /// Product of two element documents.
    Mul { left: String, right: String },
    /// Runs a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// The orbit decomposition of the matrix model and its rank identity.
    Blocks,
    /// The map into the matrix model.
    Psi {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// The map out of the matrix model.
    Phi {
        #[arg(long, default_value = "-")]
        input: String,
    },
    /// The map from the `t_j, h_i` presentation to the idempotent one.
    ToIdem {
        #[arg(long, default_value = "-")]
        input: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordAlgebra {
    H,
    Hhat,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    RelationsY,
    RelationsHhat,
    IsoRoundtrip,
    TauIdentities,
    Kl,
    Cellular,
}

/// Rendered output and exit status: 0 pass, 1 verification failure,
/// 2 usage or parse error.
#[derive(Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

enum Failure {
    Usage(String),
    Lib(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Res<T> = std::result::Result<T, Failure>;

struct Ctx<'a, F> {
    opts: &'a Opts,
    stdin: Option<F>,
}

impl<F: FnOnce() -> io::Result<String>> Ctx<'_, F> {
    fn read(&mut self, path: &str) -> Res<String> {
        if path == "-" {
            let f = self
                .stdin
                .take()
                .ok_or_else(|| Failure::Usage("stdin can be read only once".into()))?;
            f().map_err(|e| Failure::Usage(format!("stdin: {e}")))
        } else {
            fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
        }
    }

    fn element(&mut self, path: &str) -> Res<Element> {
        let src = self.read(path)?;
        Ok(ElementDoc::parse(&src)?.to_element()?)
    }

    fn render(&self, x: &Element) -> String {
        if self.opts.json {
            ElementDoc::from_element(x).to_json()
        } else {
            x.to_string()
        }
    }
}

fn report_json(reps: &[Report]) -> String {
    let v: Vec<_> = reps
        .iter()
        .map(|r| {
            json!({
                "title": r.title,
                "passed": r.passed(),
                "checks": r.checks.iter().map(|c| json!({"name": c.name, "passed": c.passed, "witness": c.witness})).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::to_string_pretty(&v).expect("plain values")
}

fn verdict(reps: &[Report], json: bool, extra: String) -> Outcome {
    let passed = reps.iter().all(Report::passed);
    let mut stdout = if json {
        report_json(reps)
    } else {
        reps.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
    };
    if !extra.is_empty() && !json {
        stdout.push('\n');
        stdout.push_str(&extra);
    }
    Outcome {
        stdout,
        stderr: String::new(),
        code: if passed { 0 } else { 1 },
    }
}

fn verify(o: &Opts, suite: Suite) -> Res<Outcome> {
    let (r, n) = (o.r, o.n);
    let mut reps = Vec::new();
    let mut extra = String::new();
    match suite {
        Suite::RelationsY => {
            reps.push(y_relation_suite(r, n, o.guard)?);
            let (count, ok) = closure_check(r, n);
            let mut c = Report::new(format!("basis closure r={r} n={n}"));
            c.record(format!("{count} basis monomials, products re-expand"), ok);
            reps.push(c);
        }
        Suite::RelationsHhat => {
            reps.push(hhat_relation_suite(r, n, o.guard)?);
            reps.push(isomorphism_images_suite(r, n, o.guard)?);
        }
        Suite::IsoRoundtrip => reps.push(iso_suite(r, n, o.maxlen, o.samples, o.max_deg, o.seed, o.guard)?),
        Suite::TauIdentities => reps.push(tau_suite(r, n, o.samples, o.seed, o.guard)?),
        Suite::Kl => {
            let (rep, elems) = kl_suite(n, o.maxlen, o.guard)?;
            reps.push(rep);
            for c in elems {
                let _ = write!(extra, "c({}):\n{}", c.top, c.table());
            }
        }
        Suite::Cellular => reps.push(cellular_suite(r, n, o.samples, o.seed, o.guard)?),
    }
    Ok(verdict(&reps, o.json, extra.trim_end().to_string()))
}

fn blocks(o: &Opts) -> Outcome {
    let bs = block_decompose(o.r, o.n);
    let total = block_rank_total(&bs);
    let expect = (o.r as usize).pow(o.n as u32) * (1..=o.n).product::<usize>();
    let ok = total == expect;
    let stdout = if o.json {
        let rows: Vec<_> = bs
            .iter()
            .map(|b| json!({"rep": b.rep.entries(), "n_lambda": b.n_lambda, "sizes": b.sizes}))
            .collect();
        serde_json::to_string_pretty(
            &json!({"r": o.r, "n": o.n, "blocks": rows, "rank": total, "expected": expect, "passed": ok}),
        )
        .expect("plain values")
    } else {
        let mut s = String::from("rep\tn_lambda\tsizes\trank");
        for b in &bs {
            let rank = b.n_lambda * b.n_lambda * b.sizes.iter().map(|&m| (1..=m).product::<usize>()).product::<usize>();
            let _ = write!(s, "\n{}\t{}\t{:?}\t{rank}", b.rep, b.n_lambda, b.sizes);
        }
        let _ = write!(
            s,
            "\ntotal {total}, r^n n! = {expect}: {}",
            if ok { "PASS" } else { "FAIL" }
        );
        s
    };
    Outcome {
        stdout,
        stderr: String::new(),
        code: if ok { 0 } else { 1 },
    }
}

fn same_params(a: &Element, b: &Element) -> bool {
    let doc = |x: &Element| {
        let d = ElementDoc::from_element(x);
        (d.r, d.n)
    };
    doc(a) == doc(b)
}

fn lift(h: &HhatElement<Laurent>) -> HhatElement<CycScalar> {
    h.map_coeffs(|k| CycScalar::from_laurent(h.r(), k))
}

fn mul(a: Element, b: Element) -> Res<Element> {
    if !same_params(&a, &b) {
        return Err(Failure::Usage("factors have different parameters".into()));
    }
    Ok(match (a, b) {
        (Element::Y(x), Element::Y(y)) => Element::Y(x.try_mul(&y)?),
        (Element::Hhat { value: x, finite: f }, Element::Hhat { value: y, finite: g }) => Element::Hhat {
            value: x.try_mul(&y)?,
            finite: f && g,
        },
        (Element::HhatCyc(x), Element::HhatCyc(y)) => Element::HhatCyc(x.try_mul(&y)?),
        (Element::HhatCyc(x), Element::Hhat { value: y, .. }) => Element::HhatCyc(x.try_mul(&lift(&y))?),
        (Element::Hhat { value: x, .. }, Element::HhatCyc(y)) => Element::HhatCyc(lift(&x).try_mul(&y)?),
        (Element::E(x), Element::E(y)) => Element::E(x.try_mul(&y)?),
        (Element::AH(x), Element::AH(y)) => Element::AH(x.try_mul(&y)?),
        _ => return Err(Failure::Usage("factors belong to different algebras".into())),
    })
}

fn dispatch<F: FnOnce() -> io::Result<String>>(cli: &Cli, ctx: &mut Ctx<'_, F>) -> Res<Outcome> {
    let o = &cli.opts;
    let element = |x: Element, ctx: &Ctx<'_, F>| Outcome {
        stdout: ctx.render(&x),
        ..Outcome::default()
    };
    match &cli.command {
        Command::Nf { word, input, algebra } => {
            let x = match (word, input) {
                (Some(w), None) => {
                    let value: HhatElement<Laurent> = nf(&GenWord::parse(o.r, o.n, w)?)?;
                    let finite = *algebra == WordAlgebra::H;
                    if finite && !value.is_finite() {
                        return Err(Failure::Lib(Error::CheckFailed("word leaves the finite part".into())));
                    }
                    Element::Hhat { value, finite }
                }
                (None, Some(path)) => ctx.element(path)?,
                _ => return Err(Failure::Usage("give exactly one of a word or --input".into())),
            };
            Ok(element(x, ctx))
        }
        Command::Mul { left, right } => {
            let a = ctx.element(left)?;
            let b = ctx.element(right)?;
            Ok(element(mul(a, b)?, ctx))
        }
        Command::Verify { suite } => verify(o, *suite),
        Command::Blocks => Ok(blocks(o)),
        Command::Psi { input } => match ctx.element(input)? {
            Element::Hhat { value, .. } => {
                let m = MatrixModel::new(value.r(), value.n(), o.guard)?;
                Ok(element(Element::E(m.psi(&value)?), ctx))
            }
            _ => Err(Failure::Usage(
                "psi expects an Hhat document with integer coefficients".into(),
            )),
        },
        Command::Phi { input } => match ctx.element(input)? {
            Element::E(x) => {
                let m = MatrixModel::new(x.r(), x.n(), o.guard)?;
                Ok(element(
                    Element::Hhat {
                        value: m.phi(&x)?,
                        finite: false,
                    },
                    ctx,
                ))
            }
            _ => Err(Failure::Usage("phi expects an E document".into())),
        },
        Command::ToIdem { input } => match ctx.element(input)? {
            Element::Y(y) => Ok(element(Element::HhatCyc(to_idempotent_presentation(&y)), ctx)),
            _ => Err(Failure::Usage("to-idem expects a Y document".into())),
        },
    }
}

/// Runs one command; `stdin` is read at most once, when an input is `-`.
pub fn run(cli: &Cli, stdin: impl FnOnce() -> io::Result<String>) -> Outcome {
    let mut ctx = Ctx {
        opts: &cli.opts,
        stdin: Some(stdin),
    };
    match dispatch(cli, &mut ctx) {
        Ok(out) => out,
        Err(Failure::Usage(msg)) => Outcome {
            stderr: format!("error: {msg}"),
            code: 2,
            ..Outcome::default()
        },
        Err(Failure::Lib(e)) => Outcome {
            stderr: format!("error: {e}"),
            code: 2,
            ..Outcome::default()
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failed_reports_exit_with_one() {
        let mut bad = Report::new("t");
        bad.record_result("c", Err("witness".into()));
        let out = verdict(&[Report::new("ok"), bad], false, String::new());
        assert_eq!(out.code, 1);
        assert!(out.stdout.contains("FAIL c: witness"));
        let json = verdict(&[Report::new("ok")], true, "ignored".into());
        assert_eq!(json.code, 0);
        assert!(!json.stdout.contains("ignored"));
    }
}
