use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1..n}` in one-line notation.
///
/// For a braid, `images[p]` is the starting position of the strand that ends at
/// position `p`. With this reading the map from braids to permutations is a
/// homomorphism for ordinary function composition: `perm(uv) = perm(u) ∘ perm(v)`.
/// Stored zero-based; rendered one-based.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation { images: (0..n as u8).collect() }
    }

    /// The order-reversing permutation, i.e. the permutation of the half twist.
    pub fn reversal(n: usize) -> Self {
        Permutation { images: (0..n as u8).rev().collect() }
    }

    /// The transposition of positions `i` and `j` (zero-based).
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(i, j);
        p
    }

    /// Builds from one-based images, validating bijectivity.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > 255 {
            return Err(Error::NotAPermutation("more than 255 points".into()));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x - 1] = true;
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles of one-based points. Each cycle
    /// `(c0 c1 ... ck)` maps `c0 -> c1 -> ... -> ck -> c0`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (k, &x) in c.iter().enumerate() {
                if x == 0 || x > n || used[x - 1] {
                    return Err(Error::NotAPermutation(format!("{cycles:?}")));
                }
                used[x - 1] = true;
                let y = c[(k + 1) % c.len()];
                images[x - 1] = (y - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Zero-based image of zero-based point `i`.
    #[inline]
    pub fn at(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.len(), other.len());
        Permutation { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut out = vec![0u8; self.len()];
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = i as u8;
        }
        Permutation { images: out }
    }

    /// Right multiplication by the simple transposition `s_i` (zero-based `i`):
    /// swaps the entries at positions `i` and `i+1`.
    pub fn swap_positions(&mut self, i: usize) {
        self.images.swap(i, i + 1);
    }

    /// Number of inversions (Coxeter length).
    pub fn inversions(&self) -> usize {
        let n = self.len();
        let mut count = 0;
        for p in 0..n {
            for q in p + 1..n {
                if self.images[p] > self.images[q] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Disjoint cycles in one-based notation, each starting at its smallest point,
    /// fixed points included.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.at(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths; equal exactly for conjugate permutations.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }

    /// All permutations of `n` points in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            out.push(Permutation { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else { break };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_and_inverse() {
        let a = Permutation::from_images(&[2, 3, 1]).unwrap();
        let b = Permutation::from_images(&[3, 1, 2]).unwrap();
        assert!(a.compose(&b).is_identity());
        assert_eq!(a.inverse(), b);
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::from_images(&[1, 1, 2]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(Permutation::all(1).len(), 1);
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::all(5).len(), 120);
    }

    #[test]
    fn cycles_roundtrip() {
        let p = Permutation::from_cycles(5, &[vec![1, 3, 5], vec![2, 4]]).unwrap();
        assert_eq!(p.images(), vec![3, 4, 5, 2, 1]);
        assert_eq!(p.cycle_type(), vec![2, 3]);
        let q = Permutation::from_cycles(5, &p.cycles()).unwrap();
        assert_eq!(p, q);
    }
}
