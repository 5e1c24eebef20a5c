//! Left-greedy normal forms over an abstract Garside structure.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::simple;
use crate::word::BraidWord;

/// A Garside structure on `B_n` whose simple elements are keyed by permutations.
pub trait GarsideStructure: Send + Sync {
    fn strands(&self) -> usize;
    fn delta(&self) -> Permutation;
    /// Letter length of Δ in the atom alphabet.
    fn delta_length(&self) -> usize;
    fn atoms(&self) -> Vec<Permutation>;
    fn meet(&self, a: &Permutation, b: &Permutation) -> Permutation;
    fn join(&self, a: &Permutation, b: &Permutation) -> Permutation;
    fn left_divides(&self, a: &Permutation, b: &Permutation) -> bool;
    fn is_simple(&self, p: &Permutation) -> bool;
    /// `a⁻¹Δ`.
    fn complement(&self, a: &Permutation) -> Permutation {
        a.inverse().compose(&self.delta())
    }
    /// Order of the inner automorphism `x ↦ Δ⁻¹xΔ` on simples.
    fn tau_order(&self) -> i64;
    /// `Δ^{-k} a Δ^k`.
    fn tau_pow(&self, a: &Permutation, k: i64) -> Permutation {
        let d = self.delta();
        let di = d.inverse();
        let k = k.rem_euclid(self.tau_order());
        let mut x = a.clone();
        for _ in 0..k {
            x = di.compose(&x).compose(&d);
        }
        x
    }
    /// Classical letters of a simple element.
    fn classical_letters(&self, a: &Permutation) -> Vec<i32>;
    /// Atom length of a simple element.
    fn simple_length(&self, a: &Permutation) -> usize;
}

/// The classical structure: Δ is the half twist, simples are permutation braids.
#[derive(Clone, Debug)]
pub struct Classical {
    n: usize,
}

impl Classical {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        Classical { n }
    }
}

impl GarsideStructure for Classical {
    fn strands(&self) -> usize {
        self.n
    }
    fn delta(&self) -> Permutation {
        Permutation::reversal(self.n)
    }
    fn delta_length(&self) -> usize {
        self.n * (self.n - 1) / 2
    }
    fn atoms(&self) -> Vec<Permutation> {
        (1..self.n).map(|i| simple::atom(self.n, i)).collect()
    }
    fn meet(&self, a: &Permutation, b: &Permutation) -> Permutation {
        simple::meet(a, b)
    }
    fn join(&self, a: &Permutation, b: &Permutation) -> Permutation {
        simple::join(a, b)
    }
    fn left_divides(&self, a: &Permutation, b: &Permutation) -> bool {
        simple::left_divides(a, b)
    }
    fn is_simple(&self, p: &Permutation) -> bool {
        p.len() == self.n
    }
    fn complement(&self, a: &Permutation) -> Permutation {
        simple::complement(a)
    }
    fn tau_order(&self) -> i64 {
        2
    }
    fn tau_pow(&self, a: &Permutation, k: i64) -> Permutation {
        if k.rem_euclid(2) == 0 {
            a.clone()
        } else {
            simple::tau(a)
        }
    }
    fn classical_letters(&self, a: &Permutation) -> Vec<i32> {
        simple::to_letters(a)
    }
    fn simple_length(&self, a: &Permutation) -> usize {
        a.inversions()
    }
}

/// `Δ^inf · factors[0] ⋯ factors[s-1]`, left-weighted, no factor equal to 1 or Δ.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalForm {
    pub n: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

#[derive(Serialize, Deserialize)]
struct NormalFormJson {
    n: usize,
    inf: i64,
    factors: Vec<Vec<usize>>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        NormalForm { n, inf: 0, factors: Vec::new() }
    }

    pub fn delta_power(n: usize, k: i64) -> Self {
        NormalForm { n, inf: k, factors: Vec::new() }
    }

    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    /// `(inf, sup, canonical length)`.
    pub fn inf_sup_len(&self) -> (i64, i64, usize) {
        (self.inf, self.sup(), self.factors.len())
    }

    pub fn is_identity(&self) -> bool {
        self.inf == 0 && self.factors.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(NormalFormJson {
            n: self.n,
            inf: self.inf,
            factors: self.factors.iter().map(Permutation::images).collect(),
        })
        .expect("serializable")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: NormalFormJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let factors = j.factors.iter().map(|f| Permutation::from_images(f)).collect::<Result<Vec<_>>>()?;
        if factors.iter().any(|f| f.len() != j.n) {
            return Err(Error::Parse("factor length differs from n".into()));
        }
        Ok(NormalForm { n: j.n, inf: j.inf, factors })
    }

    /// A classical word for this element (Δ powers expanded, factors as positive words).
    pub fn to_word<S: GarsideStructure + ?Sized>(&self, s: &S) -> BraidWord {
        let n = self.n;
        let d = s.classical_letters(&s.delta());
        let mut letters = Vec::new();
        if self.inf >= 0 {
            for _ in 0..self.inf {
                letters.extend_from_slice(&d);
            }
        } else {
            let dinv: Vec<i32> = d.iter().rev().map(|&l| -l).collect();
            for _ in 0..-self.inf {
                letters.extend_from_slice(&dinv);
            }
        }
        for f in &self.factors {
            letters.extend(s.classical_letters(f));
        }
        BraidWord::new(n, letters).expect("letters in range")
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "D^{}", self.inf)?;
        for x in &self.factors {
            write!(f, " | {x}")?;
        }
        Ok(())
    }
}

impl std::str::FromStr for NormalForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('|');
        let head = parts.next().unwrap_or("").trim();
        let inf: i64 = head
            .strip_prefix("D^")
            .and_then(|x| x.trim().parse().ok())
            .ok_or_else(|| Error::Parse(format!("bad Δ power `{head}`")))?;
        let mut factors = Vec::new();
        for part in parts {
            let imgs = part
                .split_whitespace()
                .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad image `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            factors.push(Permutation::from_images(&imgs)?);
        }
        let n = factors.first().map(Permutation::len).ok_or_else(|| {
            Error::Parse("strand count is implied by factors; use the JSON form for Δ powers".into())
        })?;
        if factors.iter().any(|f| f.len() != n) {
            return Err(Error::Parse("factors of different sizes".into()));
        }
        Ok(NormalForm { n, inf, factors })
    }
}

/// Normalization routines shared by every structure.
#[derive(Clone)]
pub struct Engine<S: GarsideStructure> {
    s: Arc<S>,
}

impl<S: GarsideStructure> Engine<S> {
    pub fn new(s: S) -> Self {
        Engine { s: Arc::new(s) }
    }

    pub fn structure(&self) -> &S {
        &self.s
    }

    pub fn strands(&self) -> usize {
        self.s.strands()
    }

    fn check(&self, a: &NormalForm) -> Result<()> {
        if a.n != self.s.strands() {
            return Err(Error::StrandMismatch(a.n, self.s.strands()));
        }
        Ok(())
    }

    /// Makes the pair `(a, b)` left-weighted; returns whether anything moved.
    pub fn left_weight(&self, a: &mut Permutation, b: &mut Permutation) -> bool {
        let x = self.s.meet(&self.s.complement(a), b);
        if x.is_identity() {
            return false;
        }
        *a = a.compose(&x);
        *b = x.inverse().compose(b);
        true
    }

    pub fn is_left_weighted(&self, a: &Permutation, b: &Permutation) -> bool {
        self.s.meet(&self.s.complement(a), b).is_identity()
    }

    /// Right-multiplies a left-weighted factor list by one simple and restores
    /// left-weightedness with a single leftward sweep.
    fn push_simple(&self, factors: &mut Vec<Permutation>, x: Permutation) {
        if x.is_identity() {
            return;
        }
        factors.push(x);
        let mut j = factors.len() - 1;
        while j > 0 {
            let (l, r) = factors.split_at_mut(j);
            if !self.left_weight(&mut l[j - 1], &mut r[0]) {
                break;
            }
            j -= 1;
        }
    }

    /// Moves leading Δ factors into the exponent and drops trailing identities.
    fn finish(&self, mut inf: i64, factors: Vec<Permutation>) -> NormalForm {
        let d = self.s.delta();
        let lead = factors.iter().take_while(|f| **f == d).count();
        inf += lead as i64;
        let mut rest: Vec<Permutation> = factors.into_iter().skip(lead).filter(|f| !f.is_identity()).collect();
        // left-weighted sequences keep identities at the end only, Δs at the start only
        debug_assert!(rest.iter().all(|f| *f != d));
        rest.shrink_to_fit();
        NormalForm { n: self.s.strands(), inf, factors: rest }
    }

    /// Normal form of `∏ Δ^{e_k} y_k`.
    pub fn from_pieces(&self, pieces: &[(i64, Permutation)]) -> NormalForm {
        let mut suffix = 0i64;
        let mut shifted = Vec::with_capacity(pieces.len());
        for (e, y) in pieces.iter().rev() {
            shifted.push(self.s.tau_pow(y, suffix));
            suffix += e;
        }
        shifted.reverse();
        let mut factors = Vec::with_capacity(shifted.len());
        for y in shifted {
            self.push_simple(&mut factors, y);
        }
        self.finish(suffix, factors)
    }

    /// Normal form of a word in the atoms: `letters[k] = (atom, sign)`.
    pub fn normalize_atoms(&self, atoms: &[(Permutation, bool)]) -> NormalForm {
        let pieces: Vec<(i64, Permutation)> = atoms
            .iter()
            .map(|(a, positive)| {
                if *positive {
                    (0, a.clone())
                } else {
                    (-1, self.s.tau_pow(&self.s.complement(a), -1))
                }
            })
            .collect();
        self.from_pieces(&pieces)
    }

    pub fn multiply(&self, a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
        self.check(a)?;
        self.check(b)?;
        let mut factors: Vec<Permutation> = a.factors.iter().map(|f| self.s.tau_pow(f, b.inf)).collect();
        for f in &b.factors {
            self.push_simple(&mut factors, f.clone());
        }
        Ok(self.finish(a.inf + b.inf, factors))
    }

    pub fn invert(&self, a: &NormalForm) -> Result<NormalForm> {
        self.check(a)?;
        // x⁻¹ = Δ⁻¹ τ⁻¹(∂x)
        let mut pieces: Vec<(i64, Permutation)> = a
            .factors
            .iter()
            .rev()
            .map(|x| (-1, self.s.tau_pow(&self.s.complement(x), -1)))
            .collect();
        pieces.push((-a.inf, Permutation::identity(a.n)));
        Ok(self.from_pieces(&pieces))
    }

    /// `Δ^{-k} a Δ^k` applied to every factor.
    pub fn tau_form(&self, a: &NormalForm, k: i64) -> NormalForm {
        NormalForm { n: a.n, inf: a.inf, factors: a.factors.iter().map(|f| self.s.tau_pow(f, k)).collect() }
    }

    pub fn simple_form(&self, x: &Permutation) -> NormalForm {
        self.from_pieces(&[(0, x.clone())])
    }

    /// `a⁻¹ x a`.
    pub fn conjugate(&self, x: &NormalForm, a: &NormalForm) -> Result<NormalForm> {
        let ai = self.invert(a)?;
        self.multiply(&self.multiply(&ai, x)?, a)
    }

    pub fn conjugate_by_simple(&self, x: &NormalForm, s: &Permutation) -> NormalForm {
        let sf = self.simple_form(s);
        self.conjugate(x, &sf).expect("same strands")
    }

    /// Checks every structural invariant of a normal form.
    pub fn is_normal(&self, a: &NormalForm) -> bool {
        let d = self.s.delta();
        a.n == self.s.strands()
            && a.factors.iter().all(|f| self.s.is_simple(f) && !f.is_identity() && *f != d)
            && a.factors.windows(2).all(|w| self.is_left_weighted(&w[0], &w[1]))
    }
}

/// The classical engine on `n` strands.
pub fn classical(n: usize) -> Engine<Classical> {
    Engine::new(Classical::new(n))
}

impl Engine<Classical> {
    pub fn normalize(&self, w: &BraidWord) -> Result<NormalForm> {
        if w.strands() != self.strands() {
            return Err(Error::StrandMismatch(w.strands(), self.strands()));
        }
        let n = self.strands();
        let pieces: Vec<(i64, Permutation)> = w
            .letters()
            .iter()
            .map(|&l| {
                let a = simple::atom(n, l.unsigned_abs() as usize);
                if l > 0 {
                    (0, a)
                } else {
                    (-1, simple::tau(&simple::complement(&a)))
                }
            })
            .collect();
        Ok(self.from_pieces(&pieces))
    }
}

pub fn normalize(w: &BraidWord) -> NormalForm {
    classical(w.strands()).normalize(w).expect("engine built for these strands")
}

pub fn equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(normalize(u) == normalize(v))
}

pub fn multiply(a: &NormalForm, b: &NormalForm) -> Result<NormalForm> {
    if a.n != b.n {
        return Err(Error::StrandMismatch(a.n, b.n));
    }
    classical(a.n).multiply(a, b)
}

pub fn invert(a: &NormalForm) -> NormalForm {
    classical(a.n).invert(a).expect("engine built for these strands")
}

/// Number of distinct positive words representing Δ, by depth-first search
/// over positive words whose every prefix normalizes to a single simple factor.
pub fn count_positive_words_of_delta(n: usize) -> u64 {
    assert!(n >= 1);
    let engine = classical(n);
    let target = engine.normalize(&BraidWord::delta(n)).expect("same strands");
    let total = n * (n - 1) / 2;
    let mut letters = Vec::with_capacity(total);
    fn dfs(engine: &Engine<Classical>, n: usize, total: usize, letters: &mut Vec<i32>, target: &NormalForm) -> u64 {
        let w = BraidWord::new(n, letters.clone()).expect("in range");
        let nf = engine.normalize(&w).expect("same strands");
        if letters.len() == total {
            return u64::from(nf == *target);
        }
        let simple = nf.inf == 0 && nf.factors.len() <= 1 || letters.is_empty();
        if !simple {
            return 0;
        }
        let mut count = 0;
        for i in 1..n as i32 {
            letters.push(i);
            count += dfs(engine, n, total, letters, target);
            letters.pop();
        }
        count
    }
    if total == 0 {
        return 1;
    }
    dfs(&engine, n, total, &mut letters, &target)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn perm_of(n: usize, letters: &[i32]) -> Permutation {
        BraidWord::new(n, letters.to_vec()).unwrap().permutation()
    }

    #[test]
    fn leftgreedy_example() {
        let nf = normalize(&w("4: 1 3 2 2 1 3 3 2 3 2"));
        assert_eq!(nf.inf, 0);
        let expected = vec![perm_of(4, &[1, 3, 2, 1]), perm_of(4, &[2, 1, 3, 2]), perm_of(4, &[2]), perm_of(4, &[2])];
        assert_eq!(nf.factors, expected);
        assert_eq!(nf.inf_sup_len(), (0, 4, 4));
    }

    #[test]
    fn small_forms() {
        assert!(normalize(&w("2: 1 -1")).is_identity());
        assert_eq!(normalize(&w("2: -1")), NormalForm::delta_power(2, -1));
        assert_eq!(normalize(&BraidWord::delta(4)), NormalForm::delta_power(4, 1));
        assert_eq!(normalize(&w("3:")).inf_sup_len(), (0, 0, 0));
    }

    #[test]
    fn relations() {
        assert!(equal(&w("3: 1 2 1"), &w("3: 2 1 2")).unwrap());
        assert!(equal(&w("4: 1 3"), &w("4: 3 1")).unwrap());
        assert!(!equal(&w("3: 1"), &w("3: 2")).unwrap());
        assert!(equal(&w("3: 1"), &w("4: 1")).is_err());
    }

    #[test]
    fn multiply_and_invert() {
        let e = classical(4);
        let x = normalize(&w("4: 1 -2 3 3 -1 2"));
        let xi = e.invert(&x).unwrap();
        assert!(e.multiply(&x, &xi).unwrap().is_identity());
        let d = NormalForm::delta_power(4, 1);
        assert_eq!(e.multiply(&d, &d).unwrap(), NormalForm::delta_power(4, 2));
        assert_eq!(xi, normalize(&w("4: 1 -2 3 3 -1 2").inverse()));
        assert_eq!(xi.inf, -x.sup());
    }

    #[test]
    fn tau_is_delta_conjugation() {
        for n in 2..6 {
            let d = BraidWord::delta(n);
            for i in 1..n as i32 {
                let lhs = d.concat(&BraidWord::new(n, vec![i]).unwrap()).unwrap().concat(&d.inverse()).unwrap();
                assert!(equal(&lhs, &BraidWord::new(n, vec![n as i32 - i]).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn text_and_json() {
        let nf = normalize(&w("4: 1 3 2 2 1 3 3 2 3 2 -1"));
        let s = nf.to_string();
        assert!(s.starts_with("D^-1 | "));
        assert_eq!(s.parse::<NormalForm>().unwrap(), nf);
        assert_eq!(NormalForm::from_json(&nf.to_json()).unwrap(), nf);
        assert_eq!(NormalForm::identity(3).to_string(), "D^0");
    }

    #[test]
    fn to_word_roundtrip() {
        let x = w("4: 1 -2 3 3 -1 2 -3 -3");
        let nf = normalize(&x);
        assert_eq!(normalize(&nf.to_word(&Classical::new(4))), nf);
    }

    #[test]
    fn positive_delta_words() {
        assert_eq!(count_positive_words_of_delta(1), 1);
        assert_eq!(count_positive_words_of_delta(2), 1);
        assert_eq!(count_positive_words_of_delta(3), 2);
        assert_eq!(count_positive_words_of_delta(4), 16);
    }
}
