//! The band-generator presentation and its Garside structure.
//!
//! Simples are non-crossing partitions of `{1..n}`; each block `b_1 < … < b_k`
//! is the descending cycle `b_k → b_{k-1} → … → b_1 → b_k`, which as a braid is
//! `a_{b_k b_{k-1}} ⋯ a_{b_2 b_1}`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::{Engine, GarsideStructure, NormalForm};
use crate::perm::Permutation;
use crate::word::BraidWord;

/// One band letter `a_{t,s}^{±1}` with `t > s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandLetter {
    pub t: usize,
    pub s: usize,
    pub positive: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BandWord {
    strands: usize,
    letters: Vec<BandLetter>,
}

impl BandWord {
    pub fn new(strands: usize, letters: Vec<BandLetter>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidStrands(0));
        }
        let mut out = Vec::with_capacity(letters.len());
        for l in letters {
            let (t, s) = (l.t.max(l.s), l.t.min(l.s));
            if s == 0 || s == t || t > strands {
                return Err(Error::Domain(format!("band generator ({},{}) invalid for n = {strands}", l.t, l.s)));
            }
            out.push(BandLetter { t, s, positive: l.positive });
        }
        Ok(BandWord { strands, letters: out })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[BandLetter] {
        &self.letters
    }

    pub fn inverse(&self) -> BandWord {
        BandWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| BandLetter { positive: !l.positive, ..*l }).collect(),
        }
    }

    /// `σ_i ↦ a_{i+1,i}`.
    pub fn from_classical(w: &BraidWord) -> BandWord {
        let letters = w
            .letters()
            .iter()
            .map(|&l| {
                let i = l.unsigned_abs() as usize;
                BandLetter { t: i + 1, s: i, positive: l > 0 }
            })
            .collect();
        BandWord { strands: w.strands(), letters }
    }
}

impl fmt::Display for BandWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.strands)?;
        for l in &self.letters {
            write!(f, " {}({},{})", if l.positive { "" } else { "-" }, l.t, l.s)?;
        }
        Ok(())
    }
}

impl FromStr for BandWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (head, body) =
            s.trim().split_once(':').ok_or_else(|| Error::Parse(format!("expected `n: (t,s) ...`, got `{s}`")))?;
        let strands: usize = head.trim().parse().map_err(|_| Error::Parse(format!("bad strand count `{head}`")))?;
        let compact: String = body.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let (positive, r) = match rest.strip_prefix('-') {
                Some(r) => (false, r),
                None => (true, rest),
            };
            let r = r.strip_prefix('(').ok_or_else(|| Error::Parse(format!("expected `(` at `{rest}`")))?;
            let close = r.find(')').ok_or_else(|| Error::Parse("unclosed `(`".into()))?;
            let (a, b) = r[..close].split_once(',').ok_or_else(|| Error::Parse("expected `t,s`".into()))?;
            let t: usize = a.parse().map_err(|_| Error::Parse(format!("bad index `{a}`")))?;
            let s: usize = b.parse().map_err(|_| Error::Parse(format!("bad index `{b}`")))?;
            letters.push(BandLetter { t, s, positive });
            rest = &r[close + 1..];
        }
        BandWord::new(strands, letters)
    }
}

/// Classical letters of `a_{t,s} = (σ_{t-1}…σ_{s+1}) σ_s (σ_{s+1}^{-1}…σ_{t-1}^{-1})`.
fn band_letters(t: usize, s: usize) -> Vec<i32> {
    let mut out = Vec::with_capacity(2 * (t - s) - 1);
    for i in (s + 1..t).rev() {
        out.push(i as i32);
    }
    out.push(s as i32);
    for i in s + 1..t {
        out.push(-(i as i32));
    }
    out
}

pub fn band_to_classical(b: &BandWord) -> BraidWord {
    let mut letters = Vec::new();
    for l in &b.letters {
        let w = band_letters(l.t, l.s);
        if l.positive {
            letters.extend(w);
        } else {
            letters.extend(w.iter().rev().map(|&x| -x));
        }
    }
    BraidWord::new(b.strands, letters).expect("letters in range")
}

/// `δ = a_{n,n-1} ⋯ a_{2,1}`.
pub fn delta_band(n: usize) -> BandWord {
    let letters = (1..n).rev().map(|s| BandLetter { t: s + 1, s, positive: true }).collect();
    BandWord { strands: n.max(1), letters }
}

/// Blocks of the partition underlying a permutation (cycles, sorted ascending).
fn blocks(p: &Permutation) -> Vec<Vec<usize>> {
    p.cycles()
        .into_iter()
        .map(|mut c| {
            c.sort_unstable();
            c
        })
        .collect()
}

fn crosses(a: &[usize], b: &[usize]) -> bool {
    // interlacing on a circle: x1 < y1 < x2 < y2 with x's in one block, y's in the other
    for (i, &x1) in a.iter().enumerate() {
        for &x2 in &a[i + 1..] {
            let inside = b.iter().filter(|&&y| x1 < y && y < x2).count();
            if inside > 0 && inside < b.len() {
                return true;
            }
        }
    }
    false
}

fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Permutation {
    let mut images: Vec<u8> = (0..n as u8).collect();
    for b in blocks {
        for (j, &x) in b.iter().enumerate() {
            let y = if j == 0 { b[b.len() - 1] } else { b[j - 1] };
            images[x - 1] = (y - 1) as u8;
        }
    }
    Permutation::from_zero_based(images)
}

fn block_ids(n: usize, p: &Permutation) -> Vec<usize> {
    let mut id = vec![0; n];
    for (k, b) in blocks(p).iter().enumerate() {
        for &x in b {
            id[x - 1] = k;
        }
    }
    id
}

/// The dual structure on `n` strands.
#[derive(Clone, Debug)]
pub struct Dual {
    n: usize,
}

impl Dual {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        Dual { n }
    }

    /// Absolute length `n - #cycles`.
    pub fn reflection_length(p: &Permutation) -> usize {
        p.len() - p.cycles().len()
    }

    pub fn blocks(&self, p: &Permutation) -> Vec<Vec<usize>> {
        let mut b: Vec<Vec<usize>> = blocks(p).into_iter().filter(|b| b.len() > 1).collect();
        b.sort();
        b
    }
}

impl GarsideStructure for Dual {
    fn strands(&self) -> usize {
        self.n
    }

    fn delta(&self) -> Permutation {
        from_blocks(self.n, &[(1..=self.n).collect()])
    }

    fn delta_length(&self) -> usize {
        self.n - 1
    }

    fn atoms(&self) -> Vec<Permutation> {
        let mut out = Vec::new();
        for t in 2..=self.n {
            for s in 1..t {
                out.push(Permutation::transposition(self.n, s - 1, t - 1));
            }
        }
        out
    }

    fn meet(&self, a: &Permutation, b: &Permutation) -> Permutation {
        let (ia, ib) = (block_ids(self.n, a), block_ids(self.n, b));
        let mut groups: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
        for x in 0..self.n {
            groups.entry((ia[x], ib[x])).or_default().push(x + 1);
        }
        let bl: Vec<Vec<usize>> = groups.into_values().collect();
        from_blocks(self.n, &bl)
    }

    fn join(&self, a: &Permutation, b: &Permutation) -> Permutation {
        let n = self.n;
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        for p in [a, b] {
            for blk in blocks(p) {
                for w in blk.windows(2) {
                    let (x, y) = (find(&mut parent, w[0] - 1), find(&mut parent, w[1] - 1));
                    parent[x] = y;
                }
            }
        }
        loop {
            let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
            for x in 0..n {
                let r = find(&mut parent, x);
                groups.entry(r).or_default().push(x + 1);
            }
            let bl: Vec<Vec<usize>> = groups.into_values().collect();
            let mut merged = false;
            'scan: for i in 0..bl.len() {
                for j in i + 1..bl.len() {
                    if crosses(&bl[i], &bl[j]) || crosses(&bl[j], &bl[i]) {
                        let (x, y) = (find(&mut parent, bl[i][0] - 1), find(&mut parent, bl[j][0] - 1));
                        parent[x] = y;
                        merged = true;
                        break 'scan;
                    }
                }
            }
            if !merged {
                return from_blocks(n, &bl);
            }
        }
    }

    fn left_divides(&self, a: &Permutation, b: &Permutation) -> bool {
        let ib = block_ids(self.n, b);
        blocks(a).iter().all(|blk| blk.iter().all(|&x| ib[x - 1] == ib[blk[0] - 1]))
    }

    fn is_simple(&self, p: &Permutation) -> bool {
        if p.len() != self.n {
            return false;
        }
        let bl = blocks(p);
        if from_blocks(self.n, &bl) != *p {
            return false;
        }
        for i in 0..bl.len() {
            for j in i + 1..bl.len() {
                if crosses(&bl[i], &bl[j]) || crosses(&bl[j], &bl[i]) {
                    return false;
                }
            }
        }
        true
    }

    fn tau_order(&self) -> i64 {
        self.n as i64
    }

    fn tau_pow(&self, a: &Permutation, k: i64) -> Permutation {
        // conjugation by δ rotates the points: δ⁻¹ a δ relabels x ↦ δ⁻¹(x)
        let n = self.n;
        let k = k.rem_euclid(n as i64) as usize;
        if k == 0 {
            return a.clone();
        }
        // δ maps x ↦ x-1 (mod n) on zero-based points, so δ^k maps x ↦ x-k
        let shift = |x: usize| (x + n - k) % n;
        let unshift = |x: usize| (x + k) % n;
        let mut images = vec![0u8; n];
        for x in 0..n {
            images[x] = unshift(a.at(shift(x))) as u8;
        }
        Permutation::from_zero_based(images)
    }

    fn classical_letters(&self, a: &Permutation) -> Vec<i32> {
        let mut out = Vec::new();
        for blk in self.blocks(a) {
            for w in blk.windows(2).rev() {
                out.extend(band_letters(w[1], w[0]));
            }
        }
        out
    }

    fn simple_length(&self, a: &Permutation) -> usize {
        Dual::reflection_length(a)
    }
}

pub fn engine(n: usize) -> Engine<Dual> {
    Engine::new(Dual::new(n))
}

impl Engine<Dual> {
    pub fn normalize_band(&self, b: &BandWord) -> Result<NormalForm> {
        let n = self.strands();
        if b.strands() != n {
            return Err(Error::StrandMismatch(b.strands(), n));
        }
        let atoms: Vec<(Permutation, bool)> =
            b.letters().iter().map(|l| (Permutation::transposition(n, l.s - 1, l.t - 1), l.positive)).collect();
        Ok(self.normalize_atoms(&atoms))
    }

    /// Band letters for a simple: one descending product per block.
    pub fn simple_band_letters(&self, a: &Permutation) -> Vec<BandLetter> {
        let mut out = Vec::new();
        for blk in self.structure().blocks(a) {
            for w in blk.windows(2).rev() {
                out.push(BandLetter { t: w[1], s: w[0], positive: true });
            }
        }
        out
    }

    /// A band word for a dual normal form.
    pub fn to_band_word(&self, a: &NormalForm) -> BandWord {
        let n = self.strands();
        let d = delta_band(n);
        let mut letters = Vec::new();
        let unit = if a.inf >= 0 { d.clone() } else { d.inverse() };
        for _ in 0..a.inf.unsigned_abs() {
            letters.extend_from_slice(unit.letters());
        }
        for f in &a.factors {
            letters.extend(self.simple_band_letters(f));
        }
        BandWord { strands: n, letters }
    }
}

pub fn dual_normalize(b: &BandWord) -> NormalForm {
    engine(b.strands()).normalize_band(b).expect("engine built for these strands")
}

/// `d^i | {blocks} | …`, each factor shown by its non-trivial blocks.
pub fn render_dual(nf: &NormalForm) -> String {
    let d = Dual::new(nf.n);
    let mut s = format!("d^{}", nf.inf);
    for f in &nf.factors {
        let bl: Vec<String> = d
            .blocks(f)
            .iter()
            .map(|b| format!("({})", b.iter().rev().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")))
            .collect();
        s.push_str(" | ");
        s.push_str(&bl.join(""));
    }
    s
}

/// All non-crossing-partition simples on `n` points, sorted.
pub fn dual_divisors(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    fn extend(n: usize, blocks: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<Permutation>) {
        if next > n {
            out.push(from_blocks(n, blocks));
            return;
        }
        for i in 0..blocks.len() {
            blocks[i].push(next);
            let ok = (0..blocks.len()).all(|j| j == i || !(crosses(&blocks[i], &blocks[j]) || crosses(&blocks[j], &blocks[i])));
            if ok {
                extend(n, blocks, next + 1, out);
            }
            blocks[i].pop();
        }
        blocks.push(vec![next]);
        extend(n, blocks, next + 1, out);
        blocks.pop();
    }
    extend(n, &mut Vec::new(), 1, &mut out);
    out.sort();
    out
}

/// Checks both relation families of the band presentation through classical equality.
pub fn verify_dual_relations(n: usize) -> bool {
    let a = |t: usize, s: usize| BandLetter { t, s, positive: true };
    let eq = |x: Vec<BandLetter>, y: Vec<BandLetter>| {
        let u = band_to_classical(&BandWord::new(n, x).expect("valid"));
        let v = band_to_classical(&BandWord::new(n, y).expect("valid"));
        crate::garside::equal(&u, &v).expect("same strands")
    };
    let pairs: Vec<(usize, usize)> = (2..=n).flat_map(|t| (1..t).map(move |s| (t, s))).collect();
    for &(t, s) in &pairs {
        for &(r, q) in &pairs {
            let (ti, si, ri, qi) = (t as i64, s as i64, r as i64, q as i64);
            if (ti - ri) * (ti - qi) * (si - ri) * (si - qi) > 0 && !eq(vec![a(t, s), a(r, q)], vec![a(r, q), a(t, s)]) {
                return false;
            }
        }
    }
    for t in 3..=n {
        for s in 2..t {
            for r in 1..s {
                let x = vec![a(t, s), a(s, r)];
                if !eq(x.clone(), vec![a(t, r), a(t, s)]) || !eq(x, vec![a(s, r), a(t, r)]) {
                    return false;
                }
            }
        }
    }
    true
}
