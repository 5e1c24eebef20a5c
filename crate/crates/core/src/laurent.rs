//! Multivariate Laurent polynomials with exact integer coefficients.
//!
//! Variables live in a registry. A variable flagged `half` stores doubled
//! exponents, so its square root is representable: stored exponent 1 of a half
//! variable `t` is `t^(1/2)`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Vars {
    names: Vec<String>,
    half: Vec<bool>,
}

impl Vars {
    pub fn new(spec: &[(&str, bool)]) -> Arc<Vars> {
        Arc::new(Vars { names: spec.iter().map(|(n, _)| n.to_string()).collect(), half: spec.iter().map(|(_, h)| *h).collect() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn is_half(&self, i: usize) -> bool {
        self.half[i]
    }

    fn scale(&self, i: usize) -> i32 {
        if self.half[i] {
            2
        } else {
            1
        }
    }
}

#[derive(Clone)]
pub struct LaurentPoly {
    vars: Arc<Vars>,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && (Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars)
    }
}

impl Eq for LaurentPoly {}

impl std::hash::Hash for LaurentPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.vars.hash(state);
        self.terms.hash(state);
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly {
    pub fn zero(vars: &Arc<Vars>) -> Self {
        LaurentPoly { vars: vars.clone(), terms: BTreeMap::new() }
    }

    pub fn constant(vars: &Arc<Vars>, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(vec![0; vars.len()], c);
        }
        p
    }

    pub fn one(vars: &Arc<Vars>) -> Self {
        Self::constant(vars, 1)
    }

    /// `c · ∏ v_i^{e_i}` with exponents given in stored units.
    pub fn monomial_raw(vars: &Arc<Vars>, exps: Vec<i32>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        let c = c.into();
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// The variable raised to an integer power.
    pub fn var_pow(vars: &Arc<Vars>, name: &str, k: i32) -> Result<Self> {
        let i = vars.index(name)?;
        let mut e = vec![0; vars.len()];
        e[i] = k * vars.scale(i);
        Ok(Self::monomial_raw(vars, e, 1))
    }

    pub fn var(vars: &Arc<Vars>, name: &str) -> Result<Self> {
        Self::var_pow(vars, name, 1)
    }

    /// Square root of a half variable: stored exponent ±1.
    pub fn sqrt_var(vars: &Arc<Vars>, name: &str, sign: i32) -> Result<Self> {
        let i = vars.index(name)?;
        if !vars.is_half(i) {
            return Err(Error::FractionalExponent(name.to_string()));
        }
        let mut e = vec![0; vars.len()];
        e[i] = sign;
        Ok(Self::monomial_raw(vars, e, 1))
    }

    pub fn vars(&self) -> &Arc<Vars> {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i32>, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a monomial given in stored units.
    pub fn coeff_raw(&self, exps: &[i32]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    fn compatible(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.vars, &other.vars) || self.vars == other.vars {
            Ok(())
        } else {
            Err(Error::RegistryMismatch)
        }
    }

    fn add_term(&mut self, e: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.compatible(other)?;
        let mut out = Self::zero(&self.vars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<i32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(&self.vars);
        }
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect() }
    }

    /// Multiplies by a monomial given in stored units.
    pub fn shift(&self, exps: &[i32]) -> Self {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), c.clone())).collect(),
        }
    }

    fn as_monomial(&self) -> Option<(&Vec<i32>, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    /// Integer power; negative exponents need a unit monomial `±x^e`.
    pub fn pow(&self, k: i64) -> Result<Self> {
        if k < 0 {
            let (e, c) = self.as_monomial().ok_or(Error::NotDivisible)?;
            if !c.abs().is_one() {
                return Err(Error::NotDivisible);
            }
            let inv = Self::monomial_raw(&self.vars, e.iter().map(|x| -x).collect(), c.clone());
            return inv.pow(-k);
        }
        let mut result = Self::one(&self.vars);
        let mut base = self.clone();
        let mut k = k as u64;
        while k > 0 {
            if k & 1 == 1 {
                result = &result * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(result)
    }

    /// Smallest and largest stored exponent of variable `i`.
    fn raw_range(&self, i: usize) -> Option<(i32, i32)> {
        let mut it = self.terms.keys().map(|e| e[i]);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), x| (lo.min(x), hi.max(x))))
    }

    fn real_exponent(&self, i: usize, raw: i32) -> Result<i32> {
        let s = self.vars.scale(i);
        if raw % s != 0 {
            return Err(Error::FractionalExponent(self.vars.names[i].clone()));
        }
        Ok(raw / s)
    }

    pub fn min_degree(&self, name: &str) -> Result<i32> {
        let i = self.vars.index(name)?;
        let (lo, _) = self.raw_range(i).ok_or(Error::ZeroPolynomial)?;
        self.real_exponent(i, lo)
    }

    pub fn max_degree(&self, name: &str) -> Result<i32> {
        let i = self.vars.index(name)?;
        let (_, hi) = self.raw_range(i).ok_or(Error::ZeroPolynomial)?;
        self.real_exponent(i, hi)
    }

    /// Max minus min exponent of a variable.
    pub fn breadth(&self, name: &str) -> Result<i32> {
        let i = self.vars.index(name)?;
        let (lo, hi) = self.raw_range(i).ok_or(Error::ZeroPolynomial)?;
        self.real_exponent(i, hi - lo)
    }

    /// Re-expresses in another registry containing every variable that occurs here.
    pub fn embed(&self, target: &Arc<Vars>) -> Result<Self> {
        if Arc::ptr_eq(&self.vars, target) || *self.vars == **target {
            return Ok(LaurentPoly { vars: target.clone(), terms: self.terms.clone() });
        }
        let used: Vec<bool> = (0..self.vars.len()).map(|i| self.terms.keys().any(|e| e[i] != 0)).collect();
        let mut map = Vec::with_capacity(self.vars.len());
        for i in 0..self.vars.len() {
            if !used[i] {
                map.push(None);
                continue;
            }
            let j = target.index(&self.vars.names[i])?;
            map.push(Some(j));
        }
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (i, &x) in e.iter().enumerate() {
                if let Some(j) = map[i] {
                    let real2 = x * (2 / self.vars.scale(i)); // doubled real exponent
                    let ts = target.scale(j);
                    if (real2 * ts) % 2 != 0 {
                        return Err(Error::FractionalExponent(self.vars.names[i].clone()));
                    }
                    ne[j] += real2 * ts / 2;
                }
            }
            out.add_term(ne, c.clone());
        }
        Ok(out)
    }

    /// Replaces a variable by a polynomial; the result lives in `value`'s registry.
    pub fn substitute(&self, name: &str, value: &LaurentPoly) -> Result<LaurentPoly> {
        let i = self.vars.index(name)?;
        let target = value.vars.clone();
        // group by the real exponent of the substituted variable
        let mut groups: BTreeMap<i32, LaurentPoly> = BTreeMap::new();
        let mut half_steps = false;
        for (e, c) in &self.terms {
            let raw = e[i];
            let k2 = raw * (2 / self.vars.scale(i)); // doubled real exponent
            if k2 % 2 != 0 {
                half_steps = true;
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mono = LaurentPoly { vars: self.vars.clone(), terms: BTreeMap::from([(rest, c.clone())]) };
            let mono = mono.embed(&target)?;
            let g = groups.entry(k2).or_insert_with(|| LaurentPoly::zero(&target));
            *g = g.try_add(&mono)?;
        }
        let root = if half_steps {
            Some(value.sqrt_monomial().ok_or_else(|| Error::FractionalExponent(name.to_string()))?)
        } else {
            None
        };
        let base = root.clone().unwrap_or_else(|| value.clone());
        let step = if half_steps { 1 } else { 2 };
        let lowest = groups.keys().next().copied().unwrap_or(0) / step;
        let unit_base = base.as_monomial().map(|(_, c)| c.abs().is_one()).unwrap_or(false);
        let mut acc = LaurentPoly::zero(&target);
        if lowest >= 0 || unit_base {
            for (k2, g) in &groups {
                acc = acc.try_add(&g.try_mul(&base.pow((*k2 / step) as i64)?)?)?;
            }
            return Ok(acc);
        }
        // negative powers of a non-unit: clear denominators, then divide exactly
        for (k2, g) in &groups {
            acc = acc.try_add(&g.try_mul(&base.pow((*k2 / step - lowest) as i64)?)?)?;
        }
        acc.divide_exact(&base.pow(-lowest as i64)?)
    }

    /// `√value` for a unit-coefficient monomial with even stored exponents on
    /// non-half variables, or any exponents on half variables that halve exactly.
    fn sqrt_monomial(&self) -> Option<LaurentPoly> {
        let (e, c) = self.as_monomial()?;
        if !c.is_one() {
            return None;
        }
        let mut out = Vec::with_capacity(e.len());
        for &x in e {
            if x % 2 != 0 {
                return None;
            }
            out.push(x / 2);
        }
        Some(LaurentPoly::monomial_raw(&self.vars, out, 1))
    }

    /// Exact quotient in the Laurent ring, by lex leading-term division.
    pub fn divide_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly> {
        self.compatible(q)?;
        if q.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let k = self.vars.len();
        let mut lo = vec![0; k];
        let mut hi = vec![0; k];
        for i in 0..k {
            let (pl, ph) = self.raw_range(i).expect("non-zero");
            let (ql, qh) = q.raw_range(i).expect("non-zero");
            lo[i] = pl - ql;
            hi[i] = ph - qh;
        }
        let (qe, qc) = q.terms.iter().next_back().expect("non-zero");
        let mut r = self.clone();
        let mut quotient = LaurentPoly::zero(&self.vars);
        while let Some((re, rc)) = r.terms.iter().next_back() {
            let e: Vec<i32> = re.iter().zip(qe).map(|(a, b)| a - b).collect();
            if (0..k).any(|i| e[i] < lo[i] || e[i] > hi[i]) {
                return Err(Error::NotDivisible);
            }
            let (c, rem) = (rc / qc, rc % qc);
            if !rem.is_zero() {
                return Err(Error::NotDivisible);
            }
            let m = LaurentPoly::monomial_raw(&self.vars, e.clone(), c.clone());
            r = r.try_sub(&q.try_mul(&m)?)?;
            quotient.add_term(e, c);
        }
        Ok(quotient)
    }

    /// `(lowest exponent 0, positive leading coefficient)` normalization for a
    /// one-variable polynomial: divides by `±t^k`.
    pub fn normalize_unit(&self, name: &str) -> Result<LaurentPoly> {
        if self.is_zero() {
            return Ok(self.clone());
        }
        let i = self.vars.index(name)?;
        let (lo, _) = self.raw_range(i).expect("non-zero");
        let mut shift = vec![0; self.vars.len()];
        shift[i] = -lo;
        let mut p = self.shift(&shift);
        let lead = p.terms.iter().max_by_key(|(e, _)| e[i]).map(|(_, c)| c.clone()).expect("non-zero");
        if lead.is_negative() {
            p = -&p;
        }
        Ok(p)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "vars": self.vars.names,
            "half": self.vars.half,
            "terms": self.terms.iter().map(|(e, c)| serde_json::json!([e, c.to_string()])).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<LaurentPoly> {
        #[derive(Deserialize)]
        struct J {
            vars: Vec<String>,
            half: Vec<bool>,
            terms: Vec<(Vec<i32>, String)>,
        }
        let j: J = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if j.vars.len() != j.half.len() {
            return Err(Error::Parse("vars and half differ in length".into()));
        }
        let vars = Arc::new(Vars { names: j.vars, half: j.half });
        let mut p = LaurentPoly::zero(&vars);
        for (e, c) in j.terms {
            if e.len() != vars.len() {
                return Err(Error::Parse("exponent vector length".into()));
            }
            let c: BigInt = c.parse().map_err(|_| Error::Parse(format!("bad coefficient `{c}`")))?;
            p.add_term(e, c);
        }
        Ok(p)
    }

    /// Parses the text rendering against a registry.
    pub fn parse(vars: &Arc<Vars>, s: &str) -> Result<LaurentPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let bytes = s.as_bytes();
        let mut terms = Vec::new();
        let mut start = 0;
        let mut depth = 0;
        for i in 0..bytes.len() {
            match bytes[i] {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if i > start && depth == 0 && bytes[i - 1] != b'^' => {
                    terms.push(&s[start..i]);
                    start = i;
                }
                _ => {}
            }
        }
        terms.push(&s[start..]);
        let mut out = LaurentPoly::zero(vars);
        for t in terms {
            let (neg, body) = match t.as_bytes()[0] {
                b'-' => (true, &t[1..]),
                b'+' => (false, &t[1..]),
                _ => (false, t),
            };
            let mut coeff = BigInt::one();
            let mut e = vec![0; vars.len()];
            for f in body.split('*') {
                if f.is_empty() {
                    return Err(Error::Parse(format!("bad term `{t}`")));
                }
                if f.as_bytes()[0].is_ascii_digit() {
                    coeff *= f.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient `{f}`")))?;
                    continue;
                }
                let (name, exp) = match f.split_once('^') {
                    Some((n, x)) => (n, x),
                    None => (f, "1"),
                };
                let i = vars.index(name)?;
                let raw = if let Some(inner) = exp.strip_prefix('(').and_then(|x| x.strip_suffix(')')) {
                    let (num, den) = inner.split_once('/').ok_or_else(|| Error::Parse(format!("bad exponent `{exp}`")))?;
                    if den != "2" || !vars.is_half(i) {
                        return Err(Error::FractionalExponent(name.to_string()));
                    }
                    num.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent `{exp}`")))?
                } else {
                    exp.parse::<i32>().map_err(|_| Error::Parse(format!("bad exponent `{exp}`")))? * vars.scale(i)
                };
                e[i] += raw;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(e, coeff);
        }
        Ok(out)
    }

    /// Evaluates at integer points for non-half variables (negative exponents
    /// need the value to be ±1). Used for quick sanity checks.
    pub fn eval_i64(&self, values: &[i64]) -> Option<i64> {
        let mut total: i64 = 0;
        for (e, c) in &self.terms {
            let mut t = c.to_i64()?;
            for (i, &x) in e.iter().enumerate() {
                let k = self.real_exponent(i, x).ok()?;
                let v = values[i];
                if k < 0 && v.abs() != 1 {
                    return None;
                }
                t = t.checked_mul(v.checked_pow(k.unsigned_abs())?)?;
            }
            total = total.checked_add(t)?;
        }
        Some(total)
    }

    fn sort_key(&self, e: &[i32]) -> Vec<i32> {
        e.iter().rev().copied().collect()
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<(&Vec<i32>, &BigInt)> = self.terms.iter().collect();
        ordered.sort_by_key(|(e, _)| self.sort_key(e));
        for (k, (e, c)) in ordered.into_iter().enumerate() {
            let mut factors = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                let name = &self.vars.names[i];
                let s = self.vars.scale(i);
                factors.push(if x % s != 0 {
                    format!("{name}^({x}/2)")
                } else if x / s == 1 {
                    name.clone()
                } else {
                    format!("{name}^{}", x / s)
                });
            }
            let mag = c.abs();
            if k == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                f.write_str(&factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { vars: self.vars.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

// Operator forms panic on registry mismatch; the `try_` methods report it.
impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_add(rhs).expect("registry mismatch")
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_sub(rhs).expect("registry mismatch")
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.try_mul(rhs).expect("registry mismatch")
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t_vars() -> Arc<Vars> {
        Vars::new(&[("t", false)])
    }

    fn lm() -> Arc<Vars> {
        Vars::new(&[("l", false), ("m", false)])
    }

    fn p(v: &Arc<Vars>, s: &str) -> LaurentPoly {
        LaurentPoly::parse(v, s).unwrap()
    }

    #[test]
    fn arithmetic() {
        let v = t_vars();
        assert!((&p(&v, "1 - t") + &p(&v, "t")).is_one());
        assert!((&p(&v, "1 - t") * &LaurentPoly::zero(&v)).is_zero());
        let h = Vars::new(&[("t", true)]);
        let m = &LaurentPoly::sqrt_var(&h, "t", 1).unwrap() - &LaurentPoly::sqrt_var(&h, "t", -1).unwrap();
        assert_eq!(m.pow(2).unwrap(), p(&h, "t^-1 - 2 + t"));
        assert_eq!(p(&v, "t^-1").pow(-3).unwrap(), p(&v, "t^3"));
    }

    #[test]
    fn rendering() {
        let v = lm();
        let trefoil = p(&v, "2*l^2 - l^4 + l^2*m^2");
        assert_eq!(trefoil.to_string(), "2*l^2 - l^4 + l^2*m^2");
        assert_eq!(LaurentPoly::zero(&v).to_string(), "0");
        assert_eq!(p(&v, "-1").to_string(), "-1");
        let h = Vars::new(&[("t", true)]);
        assert_eq!(LaurentPoly::sqrt_var(&h, "t", -3).unwrap().to_string(), "t^(-3/2)");
        assert_eq!(p(&h, "t^(1/2) + t").to_string(), "t^(1/2) + t");
        assert!(LaurentPoly::parse(&v, "l^(1/2)").is_err());
    }

    #[test]
    fn division() {
        let v = t_vars();
        assert_eq!(p(&v, "1 - t^2").divide_exact(&p(&v, "1 + t")).unwrap(), p(&v, "1 - t"));
        assert_eq!(p(&v, "-t^3 - 1").divide_exact(&p(&v, "1 + t")).unwrap(), p(&v, "-t^2 + t - 1"));
        let x = p(&v, "3*t^-2 + t^5");
        assert_eq!(x.divide_exact(&LaurentPoly::one(&v)).unwrap(), x);
        assert_eq!(p(&v, "1 + t^2").divide_exact(&p(&v, "1 + t")), Err(Error::NotDivisible));
        assert_eq!(p(&v, "2*t").divide_exact(&p(&v, "3")), Err(Error::NotDivisible));
        let w = lm();
        let a = p(&w, "l^-1 - l + m*l^3");
        let b = p(&w, "l - 2*m^-2 + 7");
        assert_eq!((&a * &b).divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn breadths() {
        let v = lm();
        assert_eq!(p(&v, "2*l^2 - l^4 + l^2*m^2").breadth("l").unwrap(), 2);
        assert_eq!(p(&v, "7").breadth("l").unwrap(), 0);
        assert_eq!(p(&t_vars(), "t + t^-1").breadth("t").unwrap(), 2);
        assert_eq!(LaurentPoly::zero(&v).breadth("l"), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn substitution() {
        let v = lm();
        let h = Vars::new(&[("t", true)]);
        let trefoil = p(&v, "2*l^2 - l^4 + l^2*m^2");
        let m = p(&h, "t^(1/2) - t^(-1/2)");
        let l1 = trefoil.substitute("l", &LaurentPoly::one(&Vars::new(&[("m", false)]))).unwrap();
        let alex = l1.substitute("m", &m).unwrap();
        assert_eq!(alex, p(&h, "t - 1 + t^-1"));
        let jones = trefoil.substitute("l", &p(&Vars::new(&[("t", false), ("m", false)]), "t")).unwrap();
        let jones = jones.substitute("m", &m).unwrap();
        assert_eq!(jones, p(&h, "t + t^3 - t^4"));
        let burau = p(&t_vars(), "1 - t");
        assert!(burau.substitute("t", &LaurentPoly::one(&t_vars())).unwrap().is_zero());
        assert_eq!(burau.substitute("t", &p(&t_vars(), "t")).unwrap(), burau);
    }

    #[test]
    fn negative_powers_of_binomials() {
        // (1 - t^2) / (1 + t) written as a substitution into x^-1 (1 - t^2)
        let xv = Vars::new(&[("x", false), ("t", false)]);
        let expr = p(&xv, "x^-1 - x^-1*t^2");
        let r = expr.substitute("x", &p(&t_vars(), "1 + t")).unwrap();
        assert_eq!(r, p(&t_vars(), "1 - t"));
        let bad = p(&xv, "x^-1");
        assert_eq!(bad.substitute("x", &p(&t_vars(), "1 + t")), Err(Error::NotDivisible));
    }

    #[test]
    fn fractional_exponents() {
        let h = Vars::new(&[("s", true)]);
        let x = LaurentPoly::sqrt_var(&h, "s", 1).unwrap();
        assert!(matches!(x.substitute("s", &p(&t_vars(), "1 + t")), Err(Error::FractionalExponent(_))));
        assert_eq!(x.substitute("s", &p(&t_vars(), "t^2")).unwrap(), p(&t_vars(), "t"));
        assert!(matches!(x.embed(&Vars::new(&[("s", false)])), Err(Error::FractionalExponent(_))));
    }

    #[test]
    fn json_and_parse_roundtrip() {
        let v = lm();
        let a = p(&v, "l^-2 - m^2 - 1 + l^2");
        assert_eq!(LaurentPoly::from_json(&a.to_json()).unwrap(), a);
        assert_eq!(p(&v, &a.to_string()), a);
        assert_eq!(a.try_add(&LaurentPoly::one(&t_vars())), Err(Error::RegistryMismatch));
    }

    #[test]
    fn unit_normalization() {
        let v = t_vars();
        assert_eq!(p(&v, "-t^-1 + 3 - t").normalize_unit("t").unwrap(), p(&v, "1 - 3*t + t^2"));
        assert_eq!(p(&v, "-t^4").normalize_unit("t").unwrap(), LaurentPoly::one(&v));
    }
}
