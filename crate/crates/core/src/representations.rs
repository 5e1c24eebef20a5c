//! Burau, reduced Burau and Lawrence–Krammer matrices, the Artin action on the
//! free group, and desingularization of singular braids.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::{classical, NormalForm};
use crate::laurent::{LaurentPoly, Vars};
use crate::word::BraidWord;

/// Square matrix of Laurent polynomials over one registry.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    dim: usize,
    vars: Arc<Vars>,
    entries: Vec<LaurentPoly>,
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows_text()).finish()
    }
}

impl PolyMatrix {
    pub fn identity(vars: &Arc<Vars>, dim: usize) -> Self {
        let mut entries = vec![LaurentPoly::zero(vars); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = LaurentPoly::one(vars);
        }
        PolyMatrix { dim, vars: vars.clone(), entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i * self.dim + j] = p;
    }

    pub fn is_identity(&self) -> bool {
        (0..self.dim).all(|i| (0..self.dim).all(|j| if i == j { self.get(i, j).is_one() } else { self.get(i, j).is_zero() }))
    }

    pub fn mul(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.dim, other.dim);
        let n = self.dim;
        let mut out = PolyMatrix { dim: n, vars: self.vars.clone(), entries: vec![LaurentPoly::zero(&self.vars); n * n] };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    out.entries[i * n + j] = &out.entries[i * n + j] + &(a * b);
                }
            }
        }
        out
    }

    pub fn sub_identity(&self) -> PolyMatrix {
        let mut m = self.clone();
        for i in 0..self.dim {
            let e = m.get(i, i) - &LaurentPoly::one(&self.vars);
            m.set(i, i, e);
        }
        m
    }

    /// Fraction-free Gaussian elimination.
    pub fn det(&self) -> LaurentPoly {
        let n = self.dim;
        if n == 0 {
            return LaurentPoly::one(&self.vars);
        }
        let mut a: Vec<Vec<LaurentPoly>> = (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut sign = false;
        let mut prev = LaurentPoly::one(&self.vars);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                    return LaurentPoly::zero(&self.vars);
                };
                a.swap(k, r);
                sign = !sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                    a[i][j] = num.divide_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    fn minor(&self, r: usize, c: usize) -> PolyMatrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity((n - 1) * (n - 1));
        for i in (0..n).filter(|&i| i != r) {
            for j in (0..n).filter(|&j| j != c) {
                entries.push(self.get(i, j).clone());
            }
        }
        PolyMatrix { dim: n - 1, vars: self.vars.clone(), entries }
    }

    /// Inverse when the determinant is a unit `±monomial`.
    pub fn inverse(&self) -> Result<PolyMatrix> {
        let n = self.dim;
        let d = self.det();
        let mut out = PolyMatrix::identity(&self.vars, n);
        for i in 0..n {
            for j in 0..n {
                let mut c = self.minor(j, i).det();
                if (i + j) % 2 == 1 {
                    c = -c;
                }
                out.set(i, j, c.divide_exact(&d)?);
            }
        }
        Ok(out)
    }

    pub fn substitute(&self, name: &str, value: &LaurentPoly) -> Result<PolyMatrix> {
        let entries = self.entries.iter().map(|e| e.substitute(name, value)).collect::<Result<Vec<_>>>()?;
        Ok(PolyMatrix { dim: self.dim, vars: value.vars().clone(), entries })
    }

    pub fn rows_text(&self) -> Vec<Vec<String>> {
        (0..self.dim).map(|i| (0..self.dim).map(|j| self.get(i, j).to_string()).collect()).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self.rows_text())
    }

    /// Entry-wise evaluation modulo a prime at the given variable values.
    pub fn eval_mod(&self, values: &[u64], p: u64) -> ModMatrix {
        ModMatrix { dim: self.dim, p, entries: self.entries.iter().map(|e| eval_poly_mod(e, values, p)).collect() }
    }
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = (r as u128 * b as u128 % p as u128) as u64;
        }
        b = (b as u128 * b as u128 % p as u128) as u64;
        e >>= 1;
    }
    r
}

fn eval_poly_mod(poly: &LaurentPoly, values: &[u64], p: u64) -> u64 {
    let vars = poly.vars();
    let mut acc = 0u64;
    let pb = BigInt::from(p);
    for (e, c) in poly.terms() {
        let cm = ((c % &pb) + &pb) % &pb;
        let mut t = cm.to_u64().expect("reduced");
        for (i, &x) in e.iter().enumerate() {
            assert!(!vars.is_half(i), "modular evaluation needs integer exponents");
            let v = if x >= 0 { pow_mod(values[i], x as u64, p) } else { pow_mod(pow_mod(values[i], p - 2, p), (-x) as u64, p) };
            t = (t as u128 * v as u128 % p as u128) as u64;
        }
        acc = (acc + t) % p;
    }
    acc
}

/// Matrix over `Z/p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModMatrix {
    dim: usize,
    p: u64,
    entries: Vec<u64>,
}

impl ModMatrix {
    pub fn identity(dim: usize, p: u64) -> Self {
        let mut entries = vec![0; dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = 1;
        }
        ModMatrix { dim, p, entries }
    }

    pub fn mul(&self, o: &ModMatrix) -> ModMatrix {
        let n = self.dim;
        let mut entries = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k] as u128;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let idx = i * n + j;
                    entries[idx] = ((entries[idx] as u128 + a * o.entries[k * n + j] as u128) % self.p as u128) as u64;
                }
            }
        }
        ModMatrix { dim: n, p: self.p, entries }
    }

    pub fn is_identity(&self) -> bool {
        *self == ModMatrix::identity(self.dim, self.p)
    }
}

fn t_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("t", false)])).clone()
}

fn qt_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("q", false), ("t", false)])).clone()
}

fn tpow(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(&t_vars(), "t", k).expect("registered")
}

fn cst(vars: &Arc<Vars>, c: i64) -> LaurentPoly {
    LaurentPoly::constant(vars, c)
}

fn check_rank(w: &BraidWord, n: usize) -> Result<()> {
    if w.strands() != n {
        return Err(Error::StrandMismatch(w.strands(), n));
    }
    Ok(())
}

fn burau_generator(n: usize, i: usize, positive: bool) -> PolyMatrix {
    let v = t_vars();
    let mut m = PolyMatrix::identity(&v, n);
    let (a, b) = (i - 1, i);
    let one = cst(&v, 1);
    if positive {
        m.set(a, a, &one - &tpow(1));
        m.set(a, b, tpow(1));
        m.set(b, a, one);
        m.set(b, b, LaurentPoly::zero(&v));
    } else {
        m.set(a, a, LaurentPoly::zero(&v));
        m.set(a, b, one.clone());
        m.set(b, a, tpow(-1));
        m.set(b, b, &one - &tpow(-1));
    }
    m
}

fn product<F: Fn(i32) -> PolyMatrix>(w: &BraidWord, dim: usize, vars: &Arc<Vars>, gen: F) -> PolyMatrix {
    let mut cache: HashMap<i32, PolyMatrix> = HashMap::new();
    let mut m = PolyMatrix::identity(vars, dim);
    for &l in w.letters() {
        let g = cache.entry(l).or_insert_with(|| gen(l));
        m = m.mul(g);
    }
    m
}

pub fn burau_unreduced(w: &BraidWord) -> PolyMatrix {
    let n = w.strands();
    product(w, n, &t_vars(), |l| burau_generator(n, l.unsigned_abs() as usize, l > 0))
}

fn burau_reduced_generator(n: usize, i: usize, positive: bool) -> PolyMatrix {
    let v = t_vars();
    let dim = n - 1;
    let mut m = PolyMatrix::identity(&v, dim);
    let z = LaurentPoly::zero(&v);
    let one = cst(&v, 1);
    let block: [[LaurentPoly; 3]; 3] = if positive {
        [[one.clone(), -tpow(1), z.clone()], [z.clone(), -tpow(1), z.clone()], [z.clone(), cst(&v, -1), one.clone()]]
    } else {
        [[one.clone(), cst(&v, -1), z.clone()], [z.clone(), -tpow(-1), z.clone()], [z.clone(), -tpow(-1), one.clone()]]
    };
    // block rows/columns sit at positions i-1, i, i+1 (one-based); keep those inside 1..=n-1
    for (bi, r) in (i as i64 - 1..=i as i64 + 1).enumerate() {
        for (bj, c) in (i as i64 - 1..=i as i64 + 1).enumerate() {
            if (1..=dim as i64).contains(&r) && (1..=dim as i64).contains(&c) {
                m.set(r as usize - 1, c as usize - 1, block[bi][bj].clone());
            }
        }
    }
    m
}

pub fn burau_reduced(w: &BraidWord) -> Result<PolyMatrix> {
    let n = w.strands();
    if n < 2 {
        return Err(Error::Domain("reduced Burau needs at least 2 strands".into()));
    }
    Ok(product(w, n - 1, &t_vars(), |l| burau_reduced_generator(n, l.unsigned_abs() as usize, l > 0)))
}

/// Index of basis vector `x_{ij}` (one-based `i < j`).
pub fn lk_index(n: usize, i: usize, j: usize) -> usize {
    // rows ordered (1,2),(1,3),…,(1,n),(2,3),…
    (1..i).map(|r| n - r).sum::<usize>() + (j - i - 1)
}

fn lk_generator(n: usize, k: usize) -> PolyMatrix {
    let v = qt_vars();
    let q = LaurentPoly::var(&v, "q").expect("registered");
    let t = LaurentPoly::var(&v, "t").expect("registered");
    let one = cst(&v, 1);
    let qm1 = &q - &one;
    let qp = |e: usize| q.pow(e as i64).expect("non-negative");
    let dim = n * (n - 1) / 2;
    let mut m = PolyMatrix { dim, vars: v.clone(), entries: vec![LaurentPoly::zero(&v); dim * dim] };
    let kk = lk_index(n, k, k + 1);
    // column = source basis vector, row = target
    let mut put = |src: usize, dst: usize, c: LaurentPoly| {
        let e = &m.entries[dst * dim + src] + &c;
        m.entries[dst * dim + src] = e;
    };
    for i in 1..=n {
        for j in i + 1..=n {
            let s = lk_index(n, i, j);
            if i == k && j == k + 1 {
                put(s, kk, &t * &q);
            } else if j == k && i < k {
                put(s, lk_index(n, i, k), &one - &q);
                put(s, lk_index(n, i, k + 1), q.clone());
            } else if j == k + 1 && i < k {
                put(s, lk_index(n, i, k), one.clone());
                put(s, kk, &(&t * &qp(k - i)) * &qm1);
            } else if i == k && j > k + 1 {
                put(s, kk, &t * &qm1);
                put(s, lk_index(n, k + 1, j), q.clone());
            } else if i == k + 1 && j > k + 1 {
                put(s, lk_index(n, k, j), one.clone());
                put(s, lk_index(n, k + 1, j), &one - &q);
            } else if i < k && k + 1 < j {
                put(s, s, one.clone());
                put(s, kk, &(&t * &qp(k - i - 1)) * &(&qm1 * &qm1));
            } else {
                put(s, s, one.clone());
            }
        }
    }
    m
}

type LkCache = Mutex<HashMap<usize, Arc<Vec<(PolyMatrix, PolyMatrix)>>>>;

/// Generator matrices and their inverses, computed once per strand count.
pub fn lk_generators(n: usize) -> Arc<Vec<(PolyMatrix, PolyMatrix)>> {
    static CACHE: OnceLock<LkCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(g) = cache.lock().expect("poisoned").get(&n) {
        crate::stats::record_cache_hit();
        return g.clone();
    }
    let gens: Vec<(PolyMatrix, PolyMatrix)> = (1..n)
        .map(|k| {
            let g = lk_generator(n, k);
            let gi = g.inverse().expect("generator determinant is a unit");
            (g, gi)
        })
        .collect();
    let gens = Arc::new(gens);
    cache.lock().expect("poisoned").insert(n, gens.clone());
    gens
}

pub fn lk_matrix(w: &BraidWord) -> Result<PolyMatrix> {
    let n = w.strands();
    if n < 2 {
        return Err(Error::Domain("Lawrence–Krammer needs at least 2 strands".into()));
    }
    let gens = lk_generators(n);
    let mut m = PolyMatrix::identity(&qt_vars(), n * (n - 1) / 2);
    for &l in w.letters() {
        let (g, gi) = &gens[l.unsigned_abs() as usize - 1];
        m = m.mul(if l > 0 { g } else { gi });
    }
    Ok(m)
}

/// `q^{2(n-1)} t^2`.
pub fn lk_full_twist_scalar(n: usize) -> LaurentPoly {
    let v = qt_vars();
    LaurentPoly::monomial_raw(&v, vec![2 * (n as i32 - 1), 2], 1)
}

/// Generators (and inverses) of the LK representation reduced mod `p` at `(q, t)`.
pub fn lk_generators_mod(n: usize, q: u64, t: u64, p: u64) -> Vec<(ModMatrix, ModMatrix)> {
    lk_generators(n).iter().map(|(g, gi)| (g.eval_mod(&[q, t], p), gi.eval_mod(&[q, t], p))).collect()
}

/// Alexander polynomial `det(ρ̄(w) - I) / (1 + t + … + t^{n-1})`, normalized to
/// lowest exponent 0 and positive leading coefficient.
pub fn alexander(w: &BraidWord) -> LaurentPoly {
    let n = w.strands();
    let v = t_vars();
    if n == 1 {
        return LaurentPoly::one(&v);
    }
    let m = burau_reduced(w).expect("n >= 2").sub_identity();
    let d = m.det();
    let mut denom = LaurentPoly::zero(&v);
    for k in 0..n as i32 {
        denom = &denom + &tpow(k);
    }
    let q = d.divide_exact(&denom).expect("the Burau determinant is divisible by 1 + t + … + t^(n-1)");
    q.normalize_unit("t").expect("registered")
}

/// Freely reduced word in `x_1..x_rank`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FreeGroupWord {
    pub rank: usize,
    letters: Vec<i32>,
}

impl FreeGroupWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        if letters.iter().any(|&l| l == 0 || l.unsigned_abs() as usize > rank) {
            return Err(Error::Domain(format!("free group letter out of range for rank {rank}")));
        }
        let mut w = FreeGroupWord { rank, letters: Vec::new() };
        w.extend(&letters);
        Ok(w)
    }

    pub fn generator(rank: usize, i: usize) -> Self {
        FreeGroupWord { rank, letters: vec![i as i32] }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    fn extend(&mut self, ls: &[i32]) {
        for &l in ls {
            if self.letters.last() == Some(&-l) {
                self.letters.pop();
            } else {
                self.letters.push(l);
            }
        }
    }

    pub fn inverse(&self) -> Self {
        FreeGroupWord { rank: self.rank, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    pub fn concat(&self, other: &FreeGroupWord) -> Self {
        let mut w = self.clone();
        w.extend(&other.letters);
        w
    }

    /// Replaces each `x_j` by `images[j-1]`.
    pub fn substitute(&self, images: &[FreeGroupWord]) -> Self {
        let mut w = FreeGroupWord { rank: self.rank, letters: Vec::new() };
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                w.extend(&img.letters);
            } else {
                w.extend(&img.inverse().letters);
            }
        }
        w
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.rank)?;
        for l in &self.letters {
            write!(f, " {l}")?;
        }
        Ok(())
    }
}

/// Images of `x_1..x_n` under the automorphism of `w`. Letters compose with the
/// first letter outermost: the automorphism of `uv` is that of `u` after that of `v`
/// applied to the generators, so `images(uv)_j = images(u)` substituted into `images(v)_j`.
pub fn artin_images(w: &BraidWord) -> Vec<FreeGroupWord> {
    let n = w.strands();
    let mut img: Vec<FreeGroupWord> = (1..=n).map(|j| FreeGroupWord::generator(n, j)).collect();
    for &l in w.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (a, b) = (img[i].clone(), img[i + 1].clone());
        if l > 0 {
            // x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}⁻¹ x_i x_{i+1}
            img[i] = b.clone();
            img[i + 1] = b.inverse().concat(&a).concat(&b);
        } else {
            // x_i ↦ x_i x_{i+1} x_i⁻¹, x_{i+1} ↦ x_i
            img[i] = a.concat(&b).concat(&a.inverse());
            img[i + 1] = a;
        }
    }
    img
}

pub fn artin_action(w: &BraidWord, x: &FreeGroupWord) -> Result<FreeGroupWord> {
    if x.rank != w.strands() {
        return Err(Error::StrandMismatch(x.rank, w.strands()));
    }
    Ok(x.substitute(&artin_images(w)))
}

pub fn word_oracle_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(artin_images(u) == artin_images(v))
}

pub fn burau_equal(u: &BraidWord, v: &BraidWord) -> Result<bool> {
    check_rank(v, u.strands())?;
    Ok(burau_unreduced(u) == burau_unreduced(v))
}

/// Letter of a singular braid word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SingularLetter {
    Sigma(i32),
    Tau(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SingularBraidWord {
    pub strands: usize,
    pub letters: Vec<SingularLetter>,
}

impl FromStr for SingularBraidWord {
    type Err = Error;

    /// `n: 1 -2 t1 t3`, where `tK` is the singular crossing `τ_K`.
    fn from_str(s: &str) -> Result<Self> {
        let (head, body) = s.trim().split_once(':').ok_or_else(|| Error::Parse(format!("expected `n: letters`, got `{s}`")))?;
        let strands: usize = head.trim().parse().map_err(|_| Error::Parse(format!("bad strand count `{head}`")))?;
        let mut letters = Vec::new();
        for tok in body.split_whitespace() {
            let l = if let Some(k) = tok.strip_prefix('t').or_else(|| tok.strip_prefix('T')) {
                SingularLetter::Tau(k.parse().map_err(|_| Error::Parse(format!("bad letter `{tok}`")))?)
            } else {
                SingularLetter::Sigma(tok.parse().map_err(|_| Error::Parse(format!("bad letter `{tok}`")))?)
            };
            let idx = match l {
                SingularLetter::Sigma(i) => i.unsigned_abs() as usize,
                SingularLetter::Tau(k) => k,
            };
            if idx == 0 || idx >= strands {
                return Err(Error::LetterOutOfRange { index: idx as i32, strands });
            }
            letters.push(l);
        }
        Ok(SingularBraidWord { strands, letters })
    }
}

/// Finite `Z`-combination of braids keyed by normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupRingElement {
    pub n: usize,
    pub terms: BTreeMap<NormalForm, i64>,
}

impl GroupRingElement {
    pub fn one(n: usize) -> Self {
        GroupRingElement { n, terms: BTreeMap::from([(NormalForm::identity(n), 1)]) }
    }

    fn add_term(&mut self, x: NormalForm, c: i64) {
        let e = self.terms.entry(x).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn mul(&self, other: &GroupRingElement) -> GroupRingElement {
        let e = classical(self.n);
        let mut out = GroupRingElement { n: self.n, terms: BTreeMap::new() };
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(e.multiply(a, b).expect("same strands"), ca * cb);
            }
        }
        out
    }

    pub fn from_terms(n: usize, terms: Vec<(BraidWord, i64)>) -> Self {
        let e = classical(n);
        let mut out = GroupRingElement { n, terms: BTreeMap::new() };
        for (w, c) in terms {
            out.add_term(e.normalize(&w).expect("same strands"), c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (x, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{sign}{}[{x}]", c.abs())?;
        }
        Ok(())
    }
}

/// `τ_i ↦ σ_i - σ_i⁻¹`, extended multiplicatively.
pub fn desingularize(s: &SingularBraidWord) -> GroupRingElement {
    let n = s.strands;
    let mut acc = GroupRingElement::one(n);
    for l in &s.letters {
        let factor = match *l {
            SingularLetter::Sigma(i) => GroupRingElement::from_terms(n, vec![(BraidWord::new(n, vec![i]).expect("checked"), 1)]),
            SingularLetter::Tau(k) => {
                let k = k as i32;
                GroupRingElement::from_terms(
                    n,
                    vec![(BraidWord::new(n, vec![k]).expect("checked"), 1), (BraidWord::new(n, vec![-k]).expect("checked"), -1)],
                )
            }
        };
        acc = acc.mul(&factor);
    }
    acc
}

pub fn singular_equal(a: &SingularBraidWord, b: &SingularBraidWord) -> Result<bool> {
    if a.strands != b.strands {
        return Err(Error::StrandMismatch(a.strands, b.strands));
    }
    Ok(desingularize(a) == desingularize(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn tp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&t_vars(), s).unwrap()
    }

    #[test]
    fn burau_examples() {
        assert!(burau_unreduced(&w("3:")).is_identity());
        let b = burau_unreduced(&w("2: 1"));
        assert_eq!(b.rows_text(), vec![vec!["1 - t", "t"], vec!["1", "0"]]);
        assert!(burau_unreduced(&w("3: 1 -1")).is_identity());
        assert_eq!(burau_reduced(&w("2: 1")).unwrap().rows_text(), vec![vec!["-t"]]);
        assert!(burau_reduced(&w("4:")).unwrap().is_identity());
        assert_eq!(burau_reduced(&w("3: 1 2 1")).unwrap(), burau_reduced(&w("3: 2 1 2")).unwrap());
    }

    #[test]
    fn burau_relations_and_inverses() {
        for n in 2..=5 {
            for i in 1..n as i32 {
                for f in [burau_unreduced as fn(&BraidWord) -> PolyMatrix, |x: &BraidWord| burau_reduced(x).unwrap()] {
                    assert!(f(&BraidWord::new(n, vec![i, -i]).unwrap()).is_identity());
                    assert!(f(&BraidWord::new(n, vec![-i, i]).unwrap()).is_identity());
                    for j in 1..n as i32 {
                        let (a, b) = if (i - j).abs() == 1 {
                            (vec![i, j, i], vec![j, i, j])
                        } else {
                            (vec![i, j], vec![j, i])
                        };
                        assert_eq!(f(&BraidWord::new(n, a).unwrap()), f(&BraidWord::new(n, b).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn burau_at_one_is_permutation_matrix() {
        let x = w("4: 1 -2 3 2 -1 -3 2");
        let m = burau_unreduced(&x).substitute("t", &LaurentPoly::one(&t_vars())).unwrap();
        let p = x.permutation();
        for r in 0..4 {
            for c in 0..4 {
                // column c has its 1 in the row of the strand that ends at c
                let expected = if p.at(c) == r { 1 } else { 0 };
                assert_eq!(m.get(r, c), &LaurentPoly::constant(&t_vars(), expected), "{r} {c}");
            }
        }
    }

    #[test]
    fn alexander_examples() {
        assert!(alexander(&w("2: 1")).is_one());
        assert!(alexander(&w("1:")).is_one());
        assert_eq!(alexander(&w("2: 1 1 1")), tp("1 - t + t^2"));
        assert_eq!(alexander(&w("3: 1 -2 1 -2")), tp("1 - 3*t + t^2"));
    }

    #[test]
    fn lk_relations_and_twist() {
        for n in 3..=4 {
            let gens = lk_generators(n);
            for (g, gi) in gens.iter() {
                assert!(g.mul(gi).is_identity());
            }
            for i in 1..n as i32 {
                for j in 1..n as i32 {
                    let (a, b) = if (i - j).abs() == 1 { (vec![i, j, i], vec![j, i, j]) } else { (vec![i, j], vec![j, i]) };
                    assert_eq!(lk_matrix(&BraidWord::new(n, a).unwrap()).unwrap(), lk_matrix(&BraidWord::new(n, b).unwrap()).unwrap());
                }
            }
            let twist = lk_matrix(&BraidWord::delta(n).pow(2)).unwrap();
            let s = lk_full_twist_scalar(n);
            let dim = n * (n - 1) / 2;
            assert_eq!(twist.dim(), dim);
            for r in 0..dim {
                for c in 0..dim {
                    if r == c {
                        assert_eq!(twist.get(r, c), &s);
                    } else {
                        assert!(twist.get(r, c).is_zero());
                    }
                }
            }
        }
        assert!(lk_matrix(&w("3:")).unwrap().is_identity());
    }

    #[test]
    fn lk_mod_agrees() {
        let p = 1_000_000_007;
        let x = w("3: 1 -2 1 2 -1");
        let m = lk_matrix(&x).unwrap().eval_mod(&[3, 5], p);
        let gens = lk_generators_mod(3, 3, 5, p);
        let mut acc = ModMatrix::identity(3, p);
        for &l in x.letters() {
            let (g, gi) = &gens[l.unsigned_abs() as usize - 1];
            acc = acc.mul(if l > 0 { g } else { gi });
        }
        assert_eq!(acc, m);
    }

    #[test]
    fn artin_examples() {
        let s1 = w("3: 1");
        assert_eq!(artin_action(&s1, &FreeGroupWord::generator(3, 1)).unwrap(), FreeGroupWord::new(3, vec![2]).unwrap());
        assert_eq!(artin_action(&s1, &FreeGroupWord::generator(3, 2)).unwrap(), FreeGroupWord::new(3, vec![-2, 1, 2]).unwrap());
        assert_eq!(artin_action(&w("3:"), &FreeGroupWord::generator(3, 3)).unwrap(), FreeGroupWord::generator(3, 3));
        assert!(word_oracle_equal(&w("3: 1 2 1"), &w("3: 2 1 2")).unwrap());
        assert!(!word_oracle_equal(&w("3: 1"), &w("3: 2")).unwrap());
        let x = w("4: 1 2 -2 3 -1 1");
        assert!(word_oracle_equal(&x, &x.free_reduce()).unwrap());
        assert!(word_oracle_equal(&w("4: 1 3"), &w("4: 3 1")).unwrap());
        // the automorphism respects products of the generators
        let prod = FreeGroupWord::new(4, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(artin_action(&x, &prod).unwrap(), prod);
    }

    #[test]
    fn desingularization() {
        let t1: SingularBraidWord = "2: t1".parse().unwrap();
        let d = desingularize(&t1);
        assert_eq!(d, GroupRingElement::from_terms(2, vec![(w("2: 1"), 1), (w("2: -1"), -1)]));
        let s1: SingularBraidWord = "2: 1".parse().unwrap();
        assert_eq!(desingularize(&s1), GroupRingElement::from_terms(2, vec![(w("2: 1"), 1)]));
        let ts: SingularBraidWord = "3: t1 2".parse().unwrap();
        assert_eq!(desingularize(&ts), GroupRingElement::from_terms(3, vec![(w("3: 1 2"), 1), (w("3: -1 2"), -1)]));
        let eq = |a: &str, b: &str| singular_equal(&a.parse().unwrap(), &b.parse().unwrap()).unwrap();
        assert!(eq("3: 1 t1", "3: t1 1"));
        assert!(!eq("2: t1", "2: 1"));
        assert!(eq("4: t1 t3", "4: t3 t1"));
        assert!(eq("3: 1 2 t1", "3: t2 1 2"));
        assert!(!eq("3: t1 t2", "3: t2 t1"));
    }
}
