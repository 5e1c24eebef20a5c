//! Braid words in the classical generators and the `n: w` text format.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A word in `σ_1..σ_{n-1}`: letter `i > 0` is `σ_i`, `-i` is `σ_i^{-1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrands(strands));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange { index: l, strands });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        assert!(strands >= 1);
        BraidWord { strands, letters: Vec::new() }
    }

    /// `(σ_{n-1}…σ_1)(σ_{n-1}…σ_2)…(σ_{n-1})`, a positive word for the half twist.
    pub fn delta(n: usize) -> Self {
        let mut letters = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for lo in 1..n {
            for i in (lo..n).rev() {
                letters.push(i as i32);
            }
        }
        BraidWord { strands: n.max(1), letters }
    }

    /// The pure braid `A_{s,t} = σ_{s,t}^2` with `σ_{s,t} = (σ_{t-1}…σ_{s+1}) σ_s (σ_{s+1}^{-1}…σ_{t-1}^{-1})`.
    pub fn pure_generator(s: usize, t: usize, n: usize) -> Result<Self> {
        if !(1 <= s && s < t && t <= n) {
            return Err(Error::Domain(format!("pure generator A_({s},{t}) out of range for n = {n}")));
        }
        let mut letters = Vec::new();
        for i in (s + 1..t).rev() {
            letters.push(i as i32);
        }
        letters.push(s as i32);
        letters.push(s as i32);
        for i in s + 1..t {
            letters.push(-(i as i32));
        }
        BraidWord::new(n, letters)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    /// Cancels adjacent `σ_i σ_i^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &l in &self.letters {
            p.swap_positions(l.unsigned_abs() as usize - 1);
        }
        p
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    /// `σ_i ↦ σ_{n-i}`; as a group element this is `Δ^{-1} w Δ`.
    pub fn tau(&self) -> BraidWord {
        let n = self.strands as i32;
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&l| l.signum() * (n - l.abs())).collect() }
    }

    /// Mirror image: every letter changes sign.
    pub fn mirror(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&l| -l).collect() }
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn pow(&self, k: usize) -> BraidWord {
        let mut letters = Vec::with_capacity(self.letters.len() * k);
        for _ in 0..k {
            letters.extend_from_slice(&self.letters);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> BraidWord {
        let mut letters = self.letters.clone();
        if !letters.is_empty() {
            let k = k % letters.len();
            letters.rotate_left(k);
        }
        BraidWord { strands: self.strands, letters }
    }

    /// Same letters viewed on more strands.
    pub fn widen(&self, strands: usize) -> Result<BraidWord> {
        BraidWord::new(strands, self.letters.clone())
    }

    /// Deletes strand `k` (one-based) from a braid whose permutation fixes it,
    /// relabelling the letters that cross the remaining strands.
    pub fn remove_strand(&self, k: usize) -> Result<BraidWord> {
        let n = self.strands;
        if k == 0 || k > n || n < 2 {
            return Err(Error::Domain(format!("cannot remove strand {k} from {n} strands")));
        }
        if self.permutation().at(k - 1) != k - 1 {
            return Err(Error::StrandNotFixed(k));
        }
        let mut pos = k;
        let mut letters = Vec::new();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize;
            if i == pos {
                pos += 1;
            } else if i + 1 == pos {
                pos -= 1;
            } else if i + 1 < pos {
                letters.push(l);
            } else {
                letters.push(l.signum() * (i as i32 - 1));
            }
        }
        BraidWord::new(n - 1, letters)
    }

    /// Short ASCII rendering such as `s1 s2^-1`, used in diagnostics.
    pub fn to_sigma_string(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|&l| if l > 0 { format!("s{l}") } else { format!("s{}^-1", -l) })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (head, body) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("expected `n: letters`, got `{s}`")))?;
        let strands: usize = head.trim().parse().map_err(|_| Error::Parse(format!("bad strand count `{head}`")))?;
        let letters = body
            .split_whitespace()
            .map(|tok| tok.parse::<i32>().map_err(|_| Error::Parse(format!("bad letter `{tok}`"))))
            .collect::<Result<Vec<_>>>()?;
        BraidWord::new(strands, letters)
    }
}
