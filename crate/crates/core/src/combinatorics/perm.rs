use std::fmt;

use crate::error::{Error, Result};

/// A permutation of `{1, ..., n}`, stored 0-based.
///
/// Composition is right-to-left: `(u * v)(i) = u(v(i))`. The simple
/// transposition `s_i` (1-based, `1 <= i < n`) swaps `i` and `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            img: (0..n as u8).collect(),
        }
    }

    /// From 1-based one-line notation.
    pub fn from_one_line(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || seen[v - 1] {
                return Err(Error::InvalidPerm(format!("{images:?}")));
            }
            seen[v - 1] = true;
        }
        Ok(Self {
            img: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    /// 1-based one-line notation.
    pub fn one_line(&self) -> Vec<usize> {
        self.img.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn n(&self) -> usize {
        self.img.len()
    }

    /// Image of a 0-based point.
    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    /// The simple transposition `s_i`, 1-based.
    pub fn s(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i < n, "s_{i} outside S_{n}");
        let mut p = Self::identity(n);
        p.img.swap(i - 1, i);
        p
    }

    /// The transposition of two 1-based points.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.img.swap(a - 1, b - 1);
        p
    }

    /// Product `s_{w[0]} s_{w[1]} ...`.
    pub fn from_word(n: usize, word: &[usize]) -> Self {
        let mut p = Self::identity(n);
        for &i in word {
            p = p.right_mul_s(i);
        }
        p
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.n(), other.n());
        Perm {
            img: other.img.iter().map(|&v| self.img[v as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut img = vec![0u8; self.n()];
        for (i, &v) in self.img.iter().enumerate() {
            img[v as usize] = i as u8;
        }
        Perm { img }
    }

    /// `s_i * self`: swaps the values `i` and `i + 1`.
    pub fn left_mul_s(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm {
            img: self
                .img
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// `self * s_i`: swaps the positions `i` and `i + 1`.
    pub fn right_mul_s(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.img.swap(i - 1, i);
        p
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        (0..n)
            .map(|i| (i + 1..n).filter(|&j| self.img[i] > self.img[j]).count())
            .sum()
    }

    /// `l(s_i w) < l(w)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.img[i - 1] > inv.img[i]
    }

    /// `l(w s_i) < l(w)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.img[i - 1] > self.img[i]
    }

    /// The lexicographically smallest reduced word `[i_1, ..., i_l]` with
    /// `w = s_{i_1} ... s_{i_l}`.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length());
        let mut w = self.clone();
        while let Some(i) = (1..self.n()).find(|&i| w.has_left_descent(i)) {
            word.push(i);
            w = w.left_mul_s(i);
        }
        word
    }

    /// Left action on tuples: `(w . x)_i = x_{w^-1(i)}`.
    pub fn act<T: Clone>(&self, x: &[T]) -> Vec<T> {
        assert_eq!(x.len(), self.n());
        let mut out = x.to_vec();
        for (i, &v) in self.img.iter().enumerate() {
            out[v as usize] = x[i].clone();
        }
        out
    }

    /// All permutations of `n` points in lexicographic one-line order.
    pub fn all(n: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Perm { img: cur.clone() });
            let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| cur[k] < cur[k + 1]) else {
                break;
            };
            let l = (k + 1..n).rev().find(|&l| cur[k] < cur[l]).unwrap();
            cur.swap(k, l);
            cur[k + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.one_line().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
