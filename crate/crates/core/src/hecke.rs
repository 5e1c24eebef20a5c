//! The Hecke algebra `H_n(t)`, the Ocneanu trace, and the HOMFLY, Jones and
//! Alexander polynomials of closed braids.
//!
//! Basis elements are indexed by permutations; `T_w x_i` is `T_{w s_i}` when the
//! length goes up and `(t-1) T_w + t T_{w s_i}` otherwise.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Vars};
use crate::perm::Permutation;
use crate::word::BraidWord;

pub fn t_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("t", false)])).clone()
}

/// Registry of trace values: `t`, `z`.
pub fn trace_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("t", false), ("z", false)])).clone()
}

/// Registry of HOMFLY polynomials: `l`, `m`.
pub fn homfly_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("l", false), ("m", false)])).clone()
}

/// Registry with `t` flagged half, for Jones and the Alexander specialization.
pub fn half_t_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("t", true)])).clone()
}

fn ls_vars() -> Arc<Vars> {
    static V: OnceLock<Arc<Vars>> = OnceLock::new();
    V.get_or_init(|| Vars::new(&[("l", false), ("s", false)])).clone()
}

#[derive(Clone, PartialEq, Eq)]
pub struct HeckeElement {
    pub n: usize,
    terms: BTreeMap<Vec<u8>, LaurentPoly>,
}

impl HeckeElement {
    pub fn one(n: usize) -> Self {
        HeckeElement { n, terms: BTreeMap::from([(Permutation::identity(n).raw().to_vec(), LaurentPoly::one(&t_vars()))]) }
    }

    pub fn basis(w: &Permutation) -> Self {
        HeckeElement { n: w.len(), terms: BTreeMap::from([(w.raw().to_vec(), LaurentPoly::one(&t_vars()))]) }
    }

    pub fn coefficient(&self, w: &Permutation) -> LaurentPoly {
        self.terms.get(w.raw()).cloned().unwrap_or_else(|| LaurentPoly::zero(&t_vars()))
    }

    pub fn terms(&self) -> impl Iterator<Item = (Permutation, &LaurentPoly)> {
        self.terms.iter().map(|(k, v)| (Permutation::from_zero_based(k.clone()), v))
    }

    fn add(&mut self, key: Vec<u8>, c: LaurentPoly) {
        let e = self.terms.entry(key.clone()).or_insert_with(|| LaurentPoly::zero(&t_vars()));
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    /// Right multiplication by `x_i` (one-based).
    pub fn mul_generator(&self, i: usize) -> HeckeElement {
        let v = t_vars();
        let t = LaurentPoly::var(&v, "t").expect("registered");
        let tm1 = &t - &LaurentPoly::one(&v);
        let mut out = HeckeElement { n: self.n, terms: BTreeMap::new() };
        for (w, c) in &self.terms {
            let mut ws = w.clone();
            ws.swap(i - 1, i);
            if w[i - 1] < w[i] {
                out.add(ws, c.clone());
            } else {
                out.add(w.clone(), c * &tm1);
                out.add(ws, c * &t);
            }
        }
        out
    }

    /// Right multiplication by `x_i^{-1} = t^{-1} x_i + (t^{-1} - 1)`.
    pub fn mul_generator_inverse(&self, i: usize) -> HeckeElement {
        let v = t_vars();
        let ti = LaurentPoly::var_pow(&v, "t", -1).expect("registered");
        let a = self.mul_generator(i);
        let mut out = HeckeElement { n: self.n, terms: BTreeMap::new() };
        for (w, c) in a.terms {
            out.add(w, &c * &ti);
        }
        let k = &ti - &LaurentPoly::one(&v);
        for (w, c) in &self.terms {
            out.add(w.clone(), c * &k);
        }
        out
    }

    pub fn mul_word(&self, w: &BraidWord) -> HeckeElement {
        let mut h = self.clone();
        for &l in w.letters() {
            let i = l.unsigned_abs() as usize;
            h = if l > 0 { h.mul_generator(i) } else { h.mul_generator_inverse(i) };
        }
        h
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = crate::simple::to_letters(&Permutation::from_zero_based(w.clone()));
                let basis = if word.is_empty() {
                    "1".to_string()
                } else {
                    word.iter().map(|i| format!("x{i}")).collect::<Vec<_>>().join("*")
                };
                format!("({c})*{basis}")
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl fmt::Debug for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HeckeElement({self})")
    }
}

pub fn hecke_image(w: &BraidWord) -> HeckeElement {
    HeckeElement::one(w.strands()).mul_word(w)
}

thread_local! {
    static TRACE_MEMO: RefCell<HashMap<Vec<u8>, LaurentPoly>> = RefCell::new(HashMap::new());
}

fn strip_fixed_tail(mut w: Vec<u8>) -> Vec<u8> {
    while let Some(&last) = w.last() {
        if last as usize + 1 == w.len() {
            w.pop();
        } else {
            break;
        }
    }
    w
}

/// `tr(T_w)`. Writing `T_w = T_{w'} x_{m-1} x_{m-2} ⋯ x_{k}` with `w'` fixing the
/// last strand gives `tr(T_w) = z · tr(T_{w'} x_{m-2} ⋯ x_k)`.
fn trace_basis(w: &[u8]) -> LaurentPoly {
    let w = strip_fixed_tail(w.to_vec());
    let tv = trace_vars();
    if w.is_empty() {
        return LaurentPoly::one(&tv);
    }
    if let Some(hit) = TRACE_MEMO.with(|m| m.borrow().get(&w).cloned()) {
        crate::stats::record_cache_hit();
        return hit;
    }
    let m = w.len();
    let pos = w.iter().position(|&x| x as usize == m - 1).expect("a permutation");
    let mut wp = w.clone();
    wp.remove(pos);
    let mut h = HeckeElement { n: m - 1, terms: BTreeMap::from([(wp, LaurentPoly::one(&t_vars()))]) };
    for i in (pos + 1..=m - 2).rev() {
        h = h.mul_generator(i);
    }
    let z = LaurentPoly::var(&tv, "z").expect("registered");
    let mut acc = LaurentPoly::zero(&tv);
    for (v, c) in &h.terms {
        acc = &acc + &(&c.embed(&tv).expect("t is shared") * &trace_basis(v));
    }
    let out = &acc * &z;
    TRACE_MEMO.with(|memo| memo.borrow_mut().insert(w, out.clone()));
    out
}

/// The Ocneanu trace, as a polynomial in `z` with Laurent coefficients in `t`.
pub fn ocneanu_trace(h: &HeckeElement) -> LaurentPoly {
    let tv = trace_vars();
    let mut acc = LaurentPoly::zero(&tv);
    for (w, c) in &h.terms {
        acc = &acc + &(&c.embed(&tv).expect("t is shared") * &trace_basis(w));
    }
    acc
}

/// Rewrites a Laurent polynomial in `s` that is invariant under `s ↦ -1/s` as a
/// polynomial in `m = s - 1/s`.
fn s_to_m(f: &LaurentPoly) -> Result<BTreeMap<i32, BigInt>> {
    let v = ls_vars();
    let s = LaurentPoly::var(&v, "s").expect("registered");
    let m = &s - &LaurentPoly::var_pow(&v, "s", -1).expect("registered");
    let mut rest = f.clone();
    let mut out = BTreeMap::new();
    while !rest.is_zero() {
        let d = rest.max_degree("s")?;
        if d < 0 {
            return Err(Error::Domain("trace does not rescale to a polynomial in m".into()));
        }
        let c = rest.coeff_raw(&[0, d]);
        rest = &rest - &m.pow(d as i64)?.scale(&c);
        out.insert(d, c);
    }
    Ok(out)
}

/// `P(l, m)` of the closure of `w` via the Ocneanu trace with the Markov rescaling
/// `z = (t-1)/(1 - κt)`, `l = √κ √t`, `m = √t - 1/√t`.
pub fn homfly_via_trace(w: &BraidWord) -> LaurentPoly {
    let n = w.strands();
    let e = w.exponent_sum() as i32;
    let tr = ocneanu_trace(&hecke_image(w));
    let v = ls_vars();
    let one = LaurentPoly::one(&v);
    let s2m1 = &LaurentPoly::var_pow(&v, "s", 2).expect("registered") - &one;
    let one_l2 = &one - &LaurentPoly::var_pow(&v, "l", 2).expect("registered");
    // G(l, s) = Σ c_j(s²) (s²-1)^j (1-l²)^{n-1-j} l^E s^{-E}
    let mut g = LaurentPoly::zero(&v);
    for (ex, c) in tr.terms() {
        let (a, j) = (ex[0], ex[1]);
        assert!(j >= 0 && (j as usize) < n, "trace degree in z is below n");
        let mono = LaurentPoly::monomial_raw(&v, vec![e, 2 * a - e], c.clone());
        let term = &(&mono * &s2m1.pow(j as i64).expect("non-negative")) * &one_l2.pow((n - 1) as i64 - j as i64).expect("non-negative");
        g = &g + &term;
    }
    // P = G / (l^{n-1} m^{n-1})
    let hv = homfly_vars();
    let mut by_l: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
    for (ex, c) in g.terms() {
        let slot = by_l.entry(ex[0]).or_insert_with(|| LaurentPoly::zero(&v));
        *slot = &*slot + &LaurentPoly::monomial_raw(&v, vec![0, ex[1]], c.clone());
    }
    let shift = n as i32 - 1;
    let mut p = LaurentPoly::zero(&hv);
    for (le, f) in by_l {
        for (md, c) in s_to_m(&f).expect("HOMFLY rescaling is exact") {
            p = &p + &LaurentPoly::monomial_raw(&hv, vec![le - shift, md - shift], c);
        }
    }
    p
}

/// `V(t) = P(t, √t - 1/√t)`.
pub fn jones_from_homfly(p: &LaurentPoly) -> Result<LaurentPoly> {
    let mid = Vars::new(&[("m", false), ("t", true)]);
    let p = p.embed(&Vars::new(&[("l", false), ("m", false)]))?;
    let step = p.substitute("l", &LaurentPoly::var(&mid, "t")?)?;
    let hv = half_t_vars();
    let m_val = &LaurentPoly::sqrt_var(&hv, "t", 1)? - &LaurentPoly::sqrt_var(&hv, "t", -1)?;
    step.substitute("m", &m_val)
}

pub fn jones(w: &BraidWord) -> LaurentPoly {
    jones_from_homfly(&homfly_via_trace(w)).expect("HOMFLY specializes")
}

/// `P(1, √t - 1/√t)`, normalized to lowest exponent 0 and positive leading coefficient.
pub fn alexander_from_homfly(p: &LaurentPoly) -> Result<LaurentPoly> {
    let hv = half_t_vars();
    let m_only = Vars::new(&[("m", false)]);
    let p = p.embed(&Vars::new(&[("l", false), ("m", false)]))?;
    let step = p.substitute("l", &LaurentPoly::one(&m_only))?;
    let m_val = &LaurentPoly::sqrt_var(&hv, "t", 1)? - &LaurentPoly::sqrt_var(&hv, "t", -1)?;
    step.substitute("m", &m_val)?.normalize_unit("t")
}

/// Agreement of the Burau Alexander polynomial with the `l = 1` specialization, up to units.
pub fn alexander_agrees(w: &BraidWord) -> bool {
    let burau = crate::representations::alexander(w).embed(&half_t_vars()).expect("t embeds");
    let from_p = alexander_from_homfly(&homfly_via_trace(w)).expect("HOMFLY specializes");
    burau.normalize_unit("t").expect("registered") == from_p
}

/// `breadth_l(P)/2 + 1`, a lower bound for the braid index.
pub fn mfw_bound(p: &LaurentPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.breadth("l")? as usize / 2 + 1)
}

pub fn parse_homfly(s: &str) -> Result<LaurentPoly> {
    LaurentPoly::parse(&homfly_vars(), s)
}

/// `(l^{-1} - l)/m`, the factor for a split union.
pub fn unlink_factor() -> LaurentPoly {
    let hv = homfly_vars();
    &LaurentPoly::monomial_raw(&hv, vec![-1, -1], 1) - &LaurentPoly::monomial_raw(&hv, vec![1, -1], 1)
}

impl HeckeElement {
    pub fn is_zero(&self) -> bool {
        self.terms.values().all(|c| c.is_zero())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scalar(n: usize, c: LaurentPoly) -> Self {
        let mut h = HeckeElement { n, terms: BTreeMap::new() };
        if !c.is_zero() {
            h.terms.insert(Permutation::identity(n).raw().to_vec(), c);
        }
        h
    }

    pub fn sum(&self, other: &HeckeElement) -> HeckeElement {
        let mut h = self.clone();
        for (w, c) in &other.terms {
            h.add(w.clone(), c.clone());
        }
        h
    }

    /// Product via right multiplication by a reduced word of each basis element.
    pub fn mul(&self, other: &HeckeElement) -> HeckeElement {
        let mut out = HeckeElement { n: self.n, terms: BTreeMap::new() };
        for (w, c) in &other.terms {
            let mut h = self.clone();
            for i in crate::simple::to_letters(&Permutation::from_zero_based(w.clone())) {
                h = h.mul_generator(i as usize);
            }
            for (k, v) in h.terms {
                out.add(k, &v * c);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn tz(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&trace_vars(), s).unwrap()
    }

    fn tp(s: &str) -> LaurentPoly {
        LaurentPoly::parse(&t_vars(), s).unwrap()
    }

    #[test]
    fn images() {
        let x1 = HeckeElement::basis(&w("2: 1").permutation());
        assert_eq!(hecke_image(&w("2: 1")), x1);
        let sq = hecke_image(&w("2: 1 1"));
        assert_eq!(sq.coefficient(&w("2: 1").permutation()), tp("t - 1"));
        assert_eq!(sq.coefficient(&Permutation::identity(2)), tp("t"));
        let inv = hecke_image(&w("2: -1"));
        assert_eq!(inv.coefficient(&w("2: 1").permutation()), tp("t^-1"));
        assert_eq!(inv.coefficient(&Permutation::identity(2)), tp("t^-1 - 1"));
        assert_eq!(hecke_image(&w("3: 1 -1")), HeckeElement::one(3));
        assert_eq!(hecke_image(&w("3: 1 2 1")), hecke_image(&w("3: 2 1 2")));
        assert_eq!(hecke_image(&w("4: 1 3")), hecke_image(&w("4: 3 1")));
    }

    #[test]
    fn multiplication_is_associative_and_matches_words() {
        let a = w("3: 1 -2 1");
        let b = w("3: 2 2 -1");
        let c = w("3: -1 2");
        let (ha, hb, hc) = (hecke_image(&a), hecke_image(&b), hecke_image(&c));
        assert_eq!(ha.mul(&hb), hecke_image(&a.concat(&b).unwrap()));
        assert_eq!(ha.mul(&hb).mul(&hc), ha.mul(&hb.mul(&hc)));
    }

    #[test]
    fn trace_examples() {
        assert!(ocneanu_trace(&HeckeElement::one(3)).is_one());
        assert_eq!(ocneanu_trace(&hecke_image(&w("2: 1 1 1"))), &(&tz("t^2 - t + 1") * &tz("z")) + &tz("t^2 - t"));
        let x2 = ocneanu_trace(&hecke_image(&w("3: 1 -2 1 -2")));
        let a = tz("3 - t^-1 - t");
        let expected = &(&(&a * &tz("t^-1*z^2")) + &(&a * &tz("t^-1*z - z"))) - &tz("2 - t^-1 - t");
        assert_eq!(x2, expected);
    }

    #[test]
    fn trace_is_conjugation_invariant() {
        let x = w("3: 1 -2 1 2 2");
        let a = w("3: 2 -1");
        let conj = a.inverse().concat(&x).unwrap().concat(&a).unwrap();
        assert_eq!(ocneanu_trace(&hecke_image(&x)), ocneanu_trace(&hecke_image(&conj)));
    }

    #[test]
    fn homfly_examples() {
        assert!(homfly_via_trace(&w("1:")).is_one());
        assert!(homfly_via_trace(&w("2: 1")).is_one());
        assert!(homfly_via_trace(&w("2: -1")).is_one());
        let trefoil = homfly_via_trace(&w("2: 1 1 1"));
        assert_eq!(trefoil.to_string(), "2*l^2 - l^4 + l^2*m^2");
        assert_eq!(homfly_via_trace(&w("3: 1 -2 1 -2")), parse_homfly("l^-2 - m^2 - 1 + l^2").unwrap());
        assert_eq!(homfly_via_trace(&w("2:")), unlink_factor());
        assert_eq!(mfw_bound(&trefoil).unwrap(), 2);
        assert_eq!(mfw_bound(&homfly_via_trace(&w("3: 1 -2 1 -2"))).unwrap(), 3);
        assert_eq!(mfw_bound(&LaurentPoly::one(&homfly_vars())).unwrap(), 1);
        assert!(mfw_bound(&LaurentPoly::zero(&homfly_vars())).is_err());
    }

    #[test]
    fn markov_and_mirror() {
        let x = w("3: 1 1 -2 1 2");
        let p = homfly_via_trace(&x);
        assert_eq!(homfly_via_trace(&x.widen(4).unwrap().concat(&w("4: 3")).unwrap()), p);
        assert_eq!(homfly_via_trace(&x.widen(4).unwrap().concat(&w("4: -3")).unwrap()), p);
        assert_eq!(homfly_via_trace(&x.rotate(2)), p);
        let hv = homfly_vars();
        let mirrored = p
            .substitute("l", &LaurentPoly::parse(&hv, "l^-1").unwrap())
            .unwrap()
            .substitute("m", &LaurentPoly::parse(&hv, "-m").unwrap())
            .unwrap();
        assert_eq!(homfly_via_trace(&x.mirror()), mirrored);
    }

    #[test]
    fn specializations() {
        let hv = half_t_vars();
        assert_eq!(jones(&w("2: 1 1 1")), LaurentPoly::parse(&hv, "t + t^3 - t^4").unwrap());
        assert_eq!(jones(&w("3: 1 -2 1 -2")), LaurentPoly::parse(&hv, "t^-2 - t^-1 + 1 - t + t^2").unwrap());
        assert!(jones(&w("1:")).is_one());
        for x in ["2: 1 1 1", "3: 1 -2 1 -2", "3: 1 1 2 -1 2 2", "2: 1 1", "3: 1 2 1 2"] {
            assert!(alexander_agrees(&w(x)), "{x}");
        }
    }
}
