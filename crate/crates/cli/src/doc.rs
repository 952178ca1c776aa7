//! The JSON element document and its conversion to and from typed elements.

use std::collections::BTreeMap;
use std::fmt;

use affine_yh::affine_hecke::BernsteinElem;
use affine_yh::combinatorics::{Perm, ResidueTuple};
use affine_yh::idem_presentation::{HhatElement, Monomial};
use affine_yh::matrix_model::EElement;
use affine_yh::yokonuma::YElement;
use affine_yh::{CycScalar, Error, Laurent, Result};
use num_rational::Rational64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Algebra {
    /// The finite algebra in the `t_j, h_i` presentation.
    Y,
    /// The finite part of the idempotent presentation.
    H,
    /// The affine algebra in the idempotent presentation.
    Hhat,
    /// The matrix model.
    E,
    /// The extended affine Hecke algebra in the Bernstein basis.
    AH,
}

/// A coefficient: integers keyed by `q`-exponent, or for cyclotomic values
/// `[num, den, zeta-exponent]` triples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CoeffDoc {
    Int(i64),
    Cyc(Vec<(i64, i64, u32)>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub block: Option<[Vec<u32>; 2]>,
    #[serde(default)]
    pub alpha: Vec<i32>,
    #[serde(default)]
    pub lambda: Vec<u32>,
    /// One-line notation, 1-based.
    pub w: Vec<usize>,
    pub coeff: BTreeMap<String, CoeffDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementDoc {
    pub algebra: Algebra,
    pub r: u32,
    pub n: usize,
    pub terms: Vec<TermDoc>,
}

/// An element of one of the supported algebras.
#[derive(Clone, Debug, PartialEq)]
pub enum Element {
    Y(YElement),
    /// `finite` marks the `H` tag.
    Hhat {
        value: HhatElement<Laurent>,
        finite: bool,
    },
    HhatCyc(HhatElement<CycScalar>),
    E(EElement),
    AH(BernsteinElem),
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Y(x) => write!(f, "{x}"),
            Element::Hhat { value, .. } => write!(f, "{value}"),
            Element::HhatCyc(x) => write!(f, "{x}"),
            Element::E(x) => write!(f, "{x}"),
            Element::AH(x) => write!(f, "{x}"),
        }
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::Parse {
        pos: 0,
        msg: msg.into(),
    }
}

fn laurent_doc(k: &Laurent) -> BTreeMap<String, CoeffDoc> {
    k.terms().map(|(e, c)| (e.to_string(), CoeffDoc::Int(c))).collect()
}

fn cyc_doc(k: &CycScalar) -> BTreeMap<String, CoeffDoc> {
    let mut by_q: BTreeMap<i32, Vec<(i64, i64, u32)>> = BTreeMap::new();
    for (z, e, c) in k.terms() {
        by_q.entry(e).or_default().push((*c.numer(), *c.denom(), z));
    }
    by_q.into_iter()
        .map(|(e, v)| (e.to_string(), CoeffDoc::Cyc(v)))
        .collect()
}

fn q_exp(key: &str) -> Result<i32> {
    key.parse().map_err(|_| bad(format!("bad q-exponent `{key}`")))
}

fn parse_laurent(c: &BTreeMap<String, CoeffDoc>) -> Result<Laurent> {
    let mut out = Laurent::zero();
    for (key, v) in c {
        match v {
            CoeffDoc::Int(k) => out.add_term(q_exp(key)?, *k),
            CoeffDoc::Cyc(_) => return Err(bad("cyclotomic coefficient where an integer was expected")),
        }
    }
    Ok(out)
}

fn parse_cyc(r: u32, c: &BTreeMap<String, CoeffDoc>) -> Result<CycScalar> {
    let mut out = CycScalar::zero(r);
    for (key, v) in c {
        let e = q_exp(key)?;
        match v {
            CoeffDoc::Int(k) => out += &CycScalar::from_rational(r, Rational64::from_integer(*k), 0, e),
            CoeffDoc::Cyc(ts) => {
                for &(num, den, z) in ts {
                    if den == 0 {
                        return Err(bad("zero denominator"));
                    }
                    out += &CycScalar::from_rational(r, Rational64::new(num, den), i64::from(z), e);
                }
            }
        }
    }
    Ok(out)
}

fn is_cyc(t: &TermDoc) -> bool {
    t.coeff.values().any(|v| matches!(v, CoeffDoc::Cyc(_)))
}

fn check_len(what: &str, got: usize, n: usize) -> Result<()> {
    if got != n {
        return Err(bad(format!("{what} has length {got}, expected {n}")));
    }
    Ok(())
}

fn monomial(r: u32, n: usize, t: &TermDoc) -> Result<Monomial> {
    let alpha = if t.alpha.is_empty() {
        vec![0; n]
    } else {
        t.alpha.clone()
    };
    check_len("alpha", alpha.len(), n)?;
    check_len("lambda", t.lambda.len(), n)?;
    check_len("w", t.w.len(), n)?;
    Ok(Monomial::new(
        alpha,
        ResidueTuple::new(r, t.lambda.clone())?,
        Perm::from_one_line(&t.w)?,
    ))
}

fn hhat_terms(m: &Monomial, coeff: BTreeMap<String, CoeffDoc>, block: Option<[Vec<u32>; 2]>) -> TermDoc {
    TermDoc {
        block,
        alpha: m.alpha.clone(),
        lambda: m.lambda.entries().to_vec(),
        w: m.w.one_line(),
        coeff,
    }
}

impl ElementDoc {
    pub fn from_element(x: &Element) -> Self {
        let (algebra, r, n, terms) = match x {
            Element::Y(y) => (
                Algebra::Y,
                y.r(),
                y.n(),
                y.terms()
                    .map(|(k, w, c)| TermDoc {
                        block: None,
                        alpha: k.iter().map(|&e| e as i32).collect(),
                        lambda: Vec::new(),
                        w: w.one_line(),
                        coeff: cyc_doc(c),
                    })
                    .collect(),
            ),
            Element::Hhat { value, finite } => (
                if *finite { Algebra::H } else { Algebra::Hhat },
                value.r(),
                value.n(),
                value
                    .terms()
                    .map(|(m, c)| hhat_terms(m, laurent_doc(c), None))
                    .collect(),
            ),
            Element::HhatCyc(h) => (
                Algebra::Hhat,
                h.r(),
                h.n(),
                h.terms().map(|(m, c)| hhat_terms(m, cyc_doc(c), None)).collect(),
            ),
            Element::E(e) => (
                Algebra::E,
                e.r(),
                e.n(),
                e.blocks()
                    .iter()
                    .flat_map(|((a, b), v)| {
                        let key = [a.entries().to_vec(), b.entries().to_vec()];
                        v.terms()
                            .map(move |(m, c)| hhat_terms(m, laurent_doc(c), Some(key.clone())))
                    })
                    .collect(),
            ),
            Element::AH(b) => (
                Algebra::AH,
                0,
                b.n(),
                b.terms()
                    .map(|(a, w, c)| TermDoc {
                        block: None,
                        alpha: a.to_vec(),
                        lambda: Vec::new(),
                        w: w.one_line(),
                        coeff: laurent_doc(c),
                    })
                    .collect(),
            ),
        };
        Self { algebra, r, n, terms }
    }

    pub fn to_element(&self) -> Result<Element> {
        let (r, n) = (self.r, self.n);
        match self.algebra {
            Algebra::Y => {
                let mut out = YElement::zero(r, n);
                for t in &self.terms {
                    check_len("alpha", t.alpha.len(), n)?;
                    let k: Vec<i64> = t.alpha.iter().map(|&e| i64::from(e)).collect();
                    out.add_term(&k, Perm::from_one_line(&t.w)?, parse_cyc(r, &t.coeff)?);
                }
                Ok(Element::Y(out))
            }
            Algebra::H | Algebra::Hhat if self.terms.iter().any(is_cyc) => {
                let mut out = HhatElement::zero(r, n);
                for t in &self.terms {
                    out.add_term(monomial(r, n, t)?, parse_cyc(r, &t.coeff)?);
                }
                Ok(Element::HhatCyc(out))
            }
            Algebra::H | Algebra::Hhat => {
                let finite = self.algebra == Algebra::H;
                let mut out = HhatElement::zero(r, n);
                for t in &self.terms {
                    let m = monomial(r, n, t)?;
                    if finite && m.alpha.iter().any(|&a| a != 0) {
                        return Err(bad(format!("{m} is outside the finite part")));
                    }
                    out.add_term(m, parse_laurent(&t.coeff)?);
                }
                Ok(Element::Hhat { value: out, finite })
            }
            Algebra::E => {
                let mut parts: BTreeMap<[Vec<u32>; 2], HhatElement<Laurent>> = BTreeMap::new();
                for t in &self.terms {
                    let key = t
                        .block
                        .clone()
                        .ok_or_else(|| bad("matrix model term without a block"))?;
                    parts
                        .entry(key)
                        .or_insert_with(|| HhatElement::zero(r, n))
                        .add_term(monomial(r, n, t)?, parse_laurent(&t.coeff)?);
                }
                let mut out = EElement::zero(r, n);
                for ([a, b], v) in parts {
                    out.add_block(ResidueTuple::new(r, a)?, ResidueTuple::new(r, b)?, &v)?;
                }
                Ok(Element::E(out))
            }
            Algebra::AH => {
                let mut out = BernsteinElem::zero(n);
                for t in &self.terms {
                    check_len("alpha", t.alpha.len(), n)?;
                    check_len("w", t.w.len(), n)?;
                    out.add_term(t.alpha.clone(), Perm::from_one_line(&t.w)?, parse_laurent(&t.coeff)?);
                }
                Ok(Element::AH(out))
            }
        }
    }

    pub fn parse(src: &str) -> Result<Self> {
        serde_json::from_str(src).map_err(|e| Error::Parse {
            pos: e.column(),
            msg: format!("line {}: {e}", e.line()),
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialise")
    }
}
