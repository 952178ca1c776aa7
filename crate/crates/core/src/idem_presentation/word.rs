use std::fmt;

use super::HhatElement;
use crate::coeffs::Scalar;
use crate::combinatorics::ResidueTuple;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Letter {
    G(usize),
    GInv(usize),
    Idem(ResidueTuple),
    X1,
    X1Inv,
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::G(i) => write!(f, "g{i}"),
            Letter::GInv(i) => write!(f, "g{i}^-1"),
            Letter::Idem(l) => write!(f, "1{l}"),
            Letter::X1 => write!(f, "X1"),
            Letter::X1Inv => write!(f, "X1^-1"),
        }
    }
}

/// A word in the generators `g_i^{+-1}`, `1_lambda`, `X_1^{+-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenWord {
    pub r: u32,
    pub n: usize,
    pub letters: Vec<Letter>,
}

impl GenWord {
    pub fn new(r: u32, n: usize, letters: Vec<Letter>) -> Result<Self> {
        let w = Self { r, n, letters };
        w.validate()?;
        Ok(w)
    }

    pub fn validate(&self) -> Result<()> {
        for letter in &self.letters {
            match letter {
                Letter::G(i) | Letter::GInv(i) if *i == 0 || *i >= self.n => {
                    return Err(Error::IndexOutOfRange {
                        index: *i,
                        max: self.n.saturating_sub(1),
                    })
                }
                Letter::Idem(l) if l.r() != self.r || l.n() != self.n => {
                    return Err(Error::InvalidTuple(format!("{l} in ({}, {})", self.r, self.n)))
                }
                _ => {}
            }
        }
        Ok(())
    }

    /// The word `g_{j-1} ... g_1 X_1^e g_1 ... g_{j-1}` for `X_j^e`, `e = +-1`.
    pub fn x_letters(j: usize, inverse: bool) -> Vec<Letter> {
        let g = |i| if inverse { Letter::GInv(i) } else { Letter::G(i) };
        let mut out: Vec<Letter> = (1..j).rev().map(g).collect();
        out.push(if inverse { Letter::X1Inv } else { Letter::X1 });
        out.extend((1..j).map(g));
        out
    }

    /// Parses whitespace-separated tokens: `g2`, `g2^-1`, `X1`, `X1^-1`,
    /// `1(1,2)`, and `X3` / `X3^-1` as shorthand for their defining words.
    /// A lone `1` is the empty word.
    pub fn parse(r: u32, n: usize, src: &str) -> Result<Self> {
        let mut letters = Vec::new();
        let mut pos = 0;
        for token in src.split_whitespace() {
            let start = src[pos..].find(token).map(|p| p + pos).unwrap_or(pos);
            pos = start + token.len();
            let err = |msg: &str| Error::Parse {
                pos: start,
                msg: format!("{msg}: `{token}`"),
            };
            if token == "1" {
                continue;
            }
            let (body, inverse) = match token.strip_suffix("^-1") {
                Some(b) => (b, true),
                None => (token, false),
            };
            if let Some(idx) = body.strip_prefix('g') {
                let i: usize = idx.parse().map_err(|_| err("bad generator index"))?;
                if i == 0 || i >= n {
                    return Err(err("generator index out of range"));
                }
                letters.push(if inverse { Letter::GInv(i) } else { Letter::G(i) });
            } else if let Some(idx) = body.strip_prefix('X') {
                let j: usize = idx.parse().map_err(|_| err("bad X index"))?;
                if j == 0 || j > n {
                    return Err(err("X index out of range"));
                }
                letters.extend(Self::x_letters(j, inverse));
            } else if let Some(tuple) = body.strip_prefix("1(").and_then(|t| t.strip_suffix(')')) {
                if inverse {
                    return Err(err("idempotents have no inverse letter"));
                }
                let entries: std::result::Result<Vec<u32>, _> = tuple.split(',').map(|s| s.trim().parse()).collect();
                let entries = entries.map_err(|_| err("bad residue tuple"))?;
                if entries.len() != n {
                    return Err(err("residue tuple has wrong length"));
                }
                let lam = ResidueTuple::new(r, entries).map_err(|_| err("residue out of range"))?;
                letters.push(Letter::Idem(lam));
            } else {
                return Err(err("unknown letter"));
            }
        }
        Self::new(r, n, letters)
    }

    /// Concatenation `self other`.
    pub fn concat(&self, other: &GenWord) -> GenWord {
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().cloned());
        GenWord {
            r: self.r,
            n: self.n,
            letters,
        }
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Left action of one letter.
pub fn apply_letter<C: Scalar>(letter: &Letter, x: &HhatElement<C>) -> HhatElement<C> {
    let n = x.n();
    let unit = |j: usize, e: i32| {
        let mut a = vec![0; n];
        a[j] = e;
        a
    };
    match letter {
        Letter::G(i) => x.left_g(*i),
        Letter::GInv(i) => x.left_g_inv(*i),
        Letter::Idem(l) => x.left_idem(l),
        Letter::X1 => x.left_x(&unit(0, 1)),
        Letter::X1Inv => x.left_x(&unit(0, -1)),
    }
}

/// Normal form of a word: the word acting on `1 = sum_lambda 1_lambda`.
pub fn nf<C: Scalar>(word: &GenWord) -> Result<HhatElement<C>> {
    word.validate()?;
    let mut acc = HhatElement::one(word.r, word.n);
    for letter in word.letters.iter().rev() {
        acc = apply_letter(letter, &acc);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::Laurent;

    type H = HhatElement<Laurent>;

    #[test]
    fn parse_and_render() {
        let w = GenWord::parse(2, 2, "g1 X1^-1 1(1,2) g1^-1").unwrap();
        assert_eq!(w.letters.len(), 4);
        assert_eq!(w.to_string(), "g1 X1^-1 1(1,2) g1^-1");
        assert!(GenWord::parse(2, 2, "1").unwrap().letters.is_empty());
        assert_eq!(GenWord::parse(2, 3, "X3").unwrap().letters.len(), 5);
    }

    #[test]
    fn parse_errors_carry_positions() {
        match GenWord::parse(2, 2, "g1 g7") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("{other:?}"),
        }
        assert!(matches!(GenWord::parse(2, 2, "y1"), Err(Error::Parse { pos: 0, .. })));
        assert!(GenWord::parse(2, 2, "1(1,3)").is_err());
        assert!(GenWord::parse(2, 2, "1(1)").is_err());
    }

    #[test]
    fn nf_examples() {
        let u = nf::<Laurent>(&GenWord::parse(2, 2, "1").unwrap()).unwrap();
        assert_eq!(u, H::one(2, 2));
        let x2 = nf::<Laurent>(&GenWord::parse(2, 2, "g1 X1 g1").unwrap()).unwrap();
        assert_eq!(x2, H::x_power(2, 2, 2, 1).unwrap());
        let x2 = nf::<Laurent>(&GenWord::parse(2, 2, "X2 X2^-1").unwrap()).unwrap();
        assert_eq!(x2, H::one(2, 2));
    }
}
