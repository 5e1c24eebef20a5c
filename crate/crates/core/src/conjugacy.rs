//! Cycling, decycling, super summit and ultra summit sets, and the conjugacy
//! decision with an explicit conjugating element.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::{classical, Engine, GarsideStructure, NormalForm};
use crate::perm::Permutation;
use crate::word::BraidWord;

pub const DEFAULT_USS_CAP: usize = 100_000;

/// `target = witness⁻¹ · source · witness`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyCertificate {
    pub witness: NormalForm,
    pub source: NormalForm,
    pub target: NormalForm,
}

impl ConjugacyCertificate {
    pub fn verify(&self) -> bool {
        let e = classical(self.source.n);
        e.conjugate(&self.source, &self.witness).map(|x| x == self.target).unwrap_or(false)
    }
}

#[derive(Clone, Debug)]
pub struct UltraSummitSet {
    /// Sorted.
    pub elements: Vec<NormalForm>,
    /// Each orbit lists element indices in cycling order.
    pub orbits: Vec<Vec<usize>>,
    /// `(from, c, to)` with `elements[to] = c⁻¹ elements[from] c`, one per element and atom.
    pub edges: Vec<(usize, Permutation, usize)>,
    /// `elements[i] = witnesses[i]⁻¹ · source · witnesses[i]`.
    pub witnesses: Vec<NormalForm>,
}

impl UltraSummitSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, x: &NormalForm) -> Option<usize> {
        self.elements.binary_search(x).ok()
    }

    pub fn contains(&self, x: &NormalForm) -> bool {
        self.position(x).is_some()
    }
}

/// Conjugation by `τ^{-p}(x_1)`: `Δ^p x_1 ⋯ x_r ↦ Δ^p x_2 ⋯ x_r τ^{-p}(x_1)`.
pub fn cycle_with<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm) -> (NormalForm, Permutation) {
    if x.factors.is_empty() {
        return (x.clone(), Permutation::identity(x.n));
    }
    let c = e.structure().tau_pow(&x.factors[0], -x.inf);
    let rest = NormalForm { n: x.n, inf: x.inf, factors: x.factors[1..].to_vec() };
    let y = e.multiply(&rest, &e.simple_form(&c)).expect("same strands");
    (y, c)
}

/// Conjugation by `x_r⁻¹`: `Δ^p x_1 ⋯ x_r ↦ Δ^p τ^p(x_r) x_1 ⋯ x_{r-1}`.
pub fn decycle_with<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm) -> (NormalForm, NormalForm) {
    let Some(last) = x.factors.last() else {
        return (x.clone(), NormalForm::identity(x.n));
    };
    let head = NormalForm { n: x.n, inf: x.inf, factors: vec![e.structure().tau_pow(last, x.inf)] };
    let tail = NormalForm { n: x.n, inf: 0, factors: x.factors[..x.factors.len() - 1].to_vec() };
    let y = e.multiply(&head, &tail).expect("same strands");
    let c = e.invert(&e.simple_form(last)).expect("same strands");
    (y, c)
}

pub fn cycle(x: &NormalForm) -> NormalForm {
    cycle_with(&classical(x.n), x).0
}

pub fn decycle(x: &NormalForm) -> NormalForm {
    decycle_with(&classical(x.n), x).0
}

/// A super summit representative `y` and `w` with `y = w⁻¹ x w`.
pub fn super_summit_with<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm) -> (NormalForm, NormalForm) {
    let k = e.structure().delta_length();
    let mut y = x.clone();
    let mut w = NormalForm::identity(x.n);
    let mut stale = 0;
    while stale < k && !y.factors.is_empty() {
        let (z, c) = cycle_with(e, &y);
        w = e.multiply(&w, &e.simple_form(&c)).expect("same strands");
        stale = if z.inf > y.inf { 0 } else { stale + 1 };
        y = z;
    }
    stale = 0;
    while stale < k && !y.factors.is_empty() {
        let (z, c) = decycle_with(e, &y);
        w = e.multiply(&w, &c).expect("same strands");
        stale = if z.sup() < y.sup() { 0 } else { stale + 1 };
        y = z;
    }
    (y, w)
}

pub fn to_super_summit(x: &NormalForm) -> (NormalForm, NormalForm) {
    super_summit_with(&classical(x.n), x)
}

/// Cycles a super summit element until an element repeats; the first repeated
/// element lies on a closed orbit.
fn seed_with<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm) -> (NormalForm, NormalForm) {
    let (mut y, mut w) = super_summit_with(e, x);
    let mut seen: HashMap<NormalForm, NormalForm> = HashMap::new();
    loop {
        if let Some(wy) = seen.get(&y) {
            return (y, wy.clone());
        }
        seen.insert(y.clone(), w.clone());
        let (z, c) = cycle_with(e, &y);
        w = e.multiply(&w, &e.simple_form(&c)).expect("same strands");
        y = z;
    }
}

struct UssSearch<'a, S: GarsideStructure> {
    e: &'a Engine<S>,
    inf: i64,
    sup: i64,
    member: HashMap<NormalForm, bool>,
}

impl<'a, S: GarsideStructure> UssSearch<'a, S> {
    fn new(e: &'a Engine<S>, y: &NormalForm) -> Self {
        UssSearch { e, inf: y.inf, sup: y.sup(), member: HashMap::new() }
    }

    fn in_uss(&mut self, y: &NormalForm) -> bool {
        if y.inf != self.inf || y.sup() != self.sup {
            return false;
        }
        if let Some(&m) = self.member.get(y) {
            return m;
        }
        let mut seen = HashSet::new();
        let mut z = y.clone();
        let on_orbit = loop {
            if !seen.insert(z.clone()) {
                break z == *y;
            }
            z = cycle_with(self.e, &z).0;
            if z == *y {
                break true;
            }
        };
        if on_orbit {
            // the whole orbit is in the set
            let mut z = y.clone();
            loop {
                self.member.insert(z.clone(), true);
                z = cycle_with(self.e, &z).0;
                if z == *y {
                    break;
                }
            }
        } else {
            self.member.insert(y.clone(), false);
        }
        on_orbit
    }
}

/// `Y⁻¹(Y ∨ τ^p(s))` for `x = Δ^p Y`, computed factor by factor.
fn inf_correction<S: GarsideStructure>(s: &S, x: &NormalForm, c: &Permutation) -> Permutation {
    let mut u = s.tau_pow(c, x.inf);
    for f in &x.factors {
        u = f.inverse().compose(&s.join(f, &u));
    }
    u
}

/// Smallest simple `c` with `a ≼ c` and `x^c` in the super summit set of `x`
/// (which `x` must belong to).
pub fn minimal_sss_conjugator<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm, a: &Permutation) -> Permutation {
    let s = e.structure();
    let xi = e.invert(x).expect("same strands");
    let mut c = a.clone();
    // each pass strictly lengthens c or stops, so at most ‖Δ‖ passes
    loop {
        let next = s.join(&s.join(&c, &inf_correction(s, x, &c)), &inf_correction(s, &xi, &c));
        if next == c {
            return c;
        }
        c = next;
    }
}

fn minimal_uss_conjugator_in<S: GarsideStructure>(
    search: &mut UssSearch<'_, S>,
    x: &NormalForm,
    a: &Permutation,
) -> Permutation {
    let e = search.e;
    let s = e.structure();
    let start = minimal_sss_conjugator(e, x, a);
    let atoms = s.atoms();
    let mut level: BTreeSet<Permutation> = BTreeSet::from([start]);
    loop {
        for c in &level {
            if search.in_uss(&e.conjugate_by_simple(x, c)) {
                return c.clone();
            }
        }
        let mut next = BTreeSet::new();
        for c in &level {
            let comp = s.complement(c);
            for b in &atoms {
                if s.left_divides(b, &comp) {
                    next.insert(c.compose(b));
                }
            }
        }
        assert!(!next.is_empty(), "Δ always conjugates into the ultra summit set");
        level = next;
    }
}

/// Smallest simple `c ≽ a` with `x^c` in the ultra summit set of `x`.
pub fn minimal_conjugator_with<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm, a: &Permutation) -> Permutation {
    let mut search = UssSearch::new(e, x);
    minimal_uss_conjugator_in(&mut search, x, a)
}

pub fn minimal_conjugator(x: &NormalForm, a: &Permutation) -> Permutation {
    minimal_conjugator_with(&classical(x.n), x, a)
}

pub fn ultra_summit_set_with<S: GarsideStructure>(e: &Engine<S>, x: &NormalForm, cap: usize) -> Result<UltraSummitSet> {
    let (seed, w_seed) = seed_with(e, x);
    let mut found: HashMap<NormalForm, NormalForm> = HashMap::new();
    let mut orbit_of: Vec<Vec<NormalForm>> = Vec::new();
    let mut raw_edges: Vec<(NormalForm, Permutation, NormalForm)> = Vec::new();
    let mut queue: VecDeque<NormalForm> = VecDeque::new();
    let mut search = UssSearch::new(e, &seed);

    let mut add_orbit = |y0: NormalForm,
                         w0: NormalForm,
                         found: &mut HashMap<NormalForm, NormalForm>,
                         queue: &mut VecDeque<NormalForm>|
     -> Result<()> {
        let mut orbit = Vec::new();
        let (mut y, mut w) = (y0.clone(), w0);
        loop {
            found.insert(y.clone(), w.clone());
            if found.len() > cap {
                return Err(Error::ResourceCap { what: "ultra summit set size", limit: cap });
            }
            queue.push_back(y.clone());
            orbit.push(y.clone());
            let (z, c) = cycle_with(e, &y);
            if z == y0 {
                break;
            }
            w = e.multiply(&w, &e.simple_form(&c)).expect("same strands");
            y = z;
        }
        orbit_of.push(orbit);
        Ok(())
    };

    add_orbit(seed.clone(), w_seed, &mut found, &mut queue)?;
    let atoms = e.structure().atoms();
    while let Some(y) = queue.pop_front() {
        if y.factors.is_empty() {
            continue;
        }
        let wy = found[&y].clone();
        for a in &atoms {
            let c = minimal_uss_conjugator_in(&mut search, &y, a);
            let z = e.conjugate_by_simple(&y, &c);
            if !found.contains_key(&z) {
                let wz = e.multiply(&wy, &e.simple_form(&c)).expect("same strands");
                add_orbit(z.clone(), wz, &mut found, &mut queue)?;
            }
            raw_edges.push((y.clone(), c, z));
        }
    }

    let mut elements: Vec<NormalForm> = found.keys().cloned().collect();
    elements.sort();
    let index = |x: &NormalForm| elements.binary_search(x).expect("member");
    let witnesses = elements.iter().map(|x| found[x].clone()).collect();
    let mut orbits: Vec<Vec<usize>> = orbit_of.iter().map(|o| o.iter().map(index).collect()).collect();
    // start each orbit at its smallest element, then order orbits
    for o in &mut orbits {
        let m = o.iter().enumerate().min_by_key(|(_, &v)| v).map(|(i, _)| i).unwrap_or(0);
        o.rotate_left(m);
    }
    orbits.sort();
    let mut edges: Vec<(usize, Permutation, usize)> =
        raw_edges.iter().map(|(a, c, b)| (index(a), c.clone(), index(b))).collect();
    edges.sort();
    Ok(UltraSummitSet { elements, orbits, edges, witnesses })
}

pub fn ultra_summit_set(x: &NormalForm) -> Result<UltraSummitSet> {
    ultra_summit_set_with(&classical(x.n), x, DEFAULT_USS_CAP)
}

/// Conjugacy test with a certificate, or `None` when the braids are not conjugate.
pub fn are_conjugate_with_cap(u: &BraidWord, v: &BraidWord, cap: usize) -> Result<Option<ConjugacyCertificate>> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    if u.exponent_sum() != v.exponent_sum() || u.permutation().cycle_type() != v.permutation().cycle_type() {
        return Ok(None);
    }
    let e = classical(u.strands());
    let (xu, xv) = (e.normalize(u)?, e.normalize(v)?);
    let (su, _) = super_summit_with(&e, &xu);
    let (sv, _) = super_summit_with(&e, &xv);
    if su.inf_sup_len() != sv.inf_sup_len() {
        return Ok(None);
    }
    let (seed_v, w_v) = seed_with(&e, &xv);
    let uss = ultra_summit_set_with(&e, &xu, cap)?;
    let Some(i) = uss.position(&seed_v) else {
        return Ok(None);
    };
    // seed_v = w_u⁻¹ u w_u = w_v⁻¹ v w_v, so v = (w_u w_v⁻¹)⁻¹ u (w_u w_v⁻¹)
    let witness = e.multiply(&uss.witnesses[i], &e.invert(&w_v)?)?;
    Ok(Some(ConjugacyCertificate { witness, source: xu, target: xv }))
}

pub fn are_conjugate(u: &BraidWord, v: &BraidWord) -> Result<Option<ConjugacyCertificate>> {
    are_conjugate_with_cap(u, v, DEFAULT_USS_CAP)
}

/// Length of a shortest word in simples and their inverses representing an
/// element of the conjugacy class: `max(s+u, -u, s)` on a super summit
/// representative `Δ^u L_1 ⋯ L_s`.
pub fn geodesic_length(w: &BraidWord) -> i64 {
    let (y, _) = to_super_summit(&crate::garside::normalize(w));
    let (u, s) = (y.inf, y.factors.len() as i64);
    (s + u).max(-u).max(s)
}

/// Reference implementations by exhaustive closure, for cross-checking.
pub mod brute {
    use super::*;

    /// Closure of a super summit element under conjugation by every simple,
    /// restricted to the `(inf, sup)` stratum.
    pub fn super_summit_set(x: &NormalForm, cap: usize) -> Result<BTreeSet<NormalForm>> {
        let e = classical(x.n);
        let (y, _) = super_summit_with(&e, x);
        let simples = Permutation::all(x.n);
        let mut set = BTreeSet::from([y.clone()]);
        let mut queue = VecDeque::from([y.clone()]);
        while let Some(z) = queue.pop_front() {
            for s in &simples {
                let t = e.conjugate_by_simple(&z, s);
                if t.inf == y.inf && t.sup() == y.sup() && set.insert(t.clone()) {
                    if set.len() > cap {
                        return Err(Error::ResourceCap { what: "super summit set size", limit: cap });
                    }
                    queue.push_back(t);
                }
            }
        }
        Ok(set)
    }

    pub fn ultra_summit_set(x: &NormalForm, cap: usize) -> Result<BTreeSet<NormalForm>> {
        let sss = super_summit_set(x, cap)?;
        Ok(sss
            .iter()
            .filter(|y| {
                let mut z = cycle(y);
                for _ in 0..sss.len() {
                    if z == **y {
                        return true;
                    }
                    z = cycle(&z);
                }
                false
            })
            .cloned()
            .collect())
    }

    pub fn are_conjugate(u: &BraidWord, v: &BraidWord, cap: usize) -> Result<bool> {
        let xu = crate::garside::normalize(u);
        let xv = crate::garside::normalize(v);
        let set = super_summit_set(&xu, cap)?;
        let (yv, _) = to_super_summit(&xv);
        Ok(set.contains(&yv))
    }

    /// Shortest length of a word in non-trivial simples and their inverses whose
    /// product is conjugate to `w`, searching up to `max_len`.
    pub fn geodesic_length(w: &BraidWord, max_len: usize) -> Option<usize> {
        let n = w.strands();
        let e = classical(n);
        let target = super_summit_set(&e.normalize(w).ok()?, DEFAULT_USS_CAP).ok()?;
        let mut letters: Vec<NormalForm> = Vec::new();
        for s in Permutation::all(n).into_iter().filter(|s| !s.is_identity()) {
            let f = e.simple_form(&s);
            letters.push(e.invert(&f).ok()?);
            letters.push(f);
        }
        let mut frontier: BTreeSet<NormalForm> = BTreeSet::from([NormalForm::identity(n)]);
        for len in 0..=max_len {
            if frontier.iter().any(|g| target.contains(&to_super_summit(g).0)) {
                return Some(len);
            }
            let mut next = BTreeSet::new();
            for g in &frontier {
                for l in &letters {
                    next.insert(e.multiply(g, l).ok()?);
                }
            }
            frontier = next;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::normalize;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    fn nf(s: &str) -> NormalForm {
        normalize(&w(s))
    }

    #[test]
    fn cycling_examples() {
        let x = nf("3: 1");
        assert_eq!(cycle(&x), x);
        assert_eq!(decycle(&x), x);
        let s11 = nf("3: 1 1");
        assert_eq!(s11.factors.len(), 2);
        assert_eq!(cycle(&s11), s11);
        // (σ₁σ₂)(σ₂) cycles and decycles to σ₂σ₁σ₂ = Δ
        let y = nf("3: 1 2 2");
        assert_eq!(y.factors.len(), 2);
        let c = cycle(&y);
        assert_eq!(c, nf("3: 2 1 2"));
        let d = decycle(&y);
        assert_eq!(d, nf("3: 2 1 2"));
        let z = nf("3: -1 2 2 -1");
        assert_eq!(cycle(&cycle(&NormalForm::delta_power(3, 2))), NormalForm::delta_power(3, 2));
        let e = classical(3);
        let (cz, a) = cycle_with(&e, &z);
        assert_eq!(e.conjugate_by_simple(&z, &a), cz);
        let (dz, b) = decycle_with(&e, &z);
        assert_eq!(e.conjugate(&z, &b).unwrap(), dz);
    }

    #[test]
    fn super_summit_examples() {
        let (y, w0) = to_super_summit(&nf("3: 1 2 -1"));
        assert_eq!((y.inf, y.sup()), (0, 1));
        assert_eq!(classical(3).conjugate(&nf("3: 1 2 -1"), &w0).unwrap(), y);
        let d = NormalForm::delta_power(4, -3);
        assert_eq!(to_super_summit(&d).0, d);
    }

    #[test]
    fn uss_examples() {
        let u = ultra_summit_set(&nf("3: 1")).unwrap();
        assert_eq!(u.elements, {
            let mut v = vec![nf("3: 1"), nf("3: 2")];
            v.sort();
            v
        });
        let d = ultra_summit_set(&NormalForm::delta_power(3, 1)).unwrap();
        assert_eq!(d.len(), 1);
        let x = nf("4: 1 -2 3 3 2 -1");
        let u = ultra_summit_set(&x).unwrap();
        let e = classical(4);
        for (i, y) in u.elements.iter().enumerate() {
            assert_eq!(&e.conjugate(&x, &u.witnesses[i]).unwrap(), y);
        }
        for (a, c, b) in &u.edges {
            assert_eq!(e.conjugate_by_simple(&u.elements[*a], c), u.elements[*b]);
        }
    }

    #[test]
    fn uss_matches_brute_force() {
        for s in ["3: 1 2 -1 2", "3: 1 1 -2", "3: 1 -2 1 -2", "3: 1 1 2 2 -1", "4: 1 2 3 -1", "4: 1 -3 2 2"] {
            let x = nf(s);
            let fast: BTreeSet<NormalForm> = ultra_summit_set(&x).unwrap().elements.into_iter().collect();
            assert_eq!(fast, brute::ultra_summit_set(&x, 100_000).unwrap(), "{s}");
        }
    }

    #[test]
    fn minimal_conjugators() {
        let x = nf("3: 1");
        let s2 = crate::simple::atom(3, 2);
        let c = minimal_conjugator(&x, &s2);
        let y = classical(3).conjugate_by_simple(&x, &c);
        assert_eq!(y, nf("3: 2"));
        let d2 = NormalForm::delta_power(3, 2);
        assert_eq!(minimal_conjugator(&d2, &s2), s2);
        // Δ itself is not central: σ₂⁻¹Δσ₂ = Δσ₁⁻¹σ₂ leaves the summit set
        let d = NormalForm::delta_power(3, 1);
        assert_eq!(minimal_conjugator(&d, &s2), crate::simple::delta(3));
    }

    #[test]
    fn minimal_sss_conjugator_is_minimal() {
        let e = classical(4);
        for s in ["4: 1 -2 3 2", "4: 1 1 2 -3", "4: 2 -1 -3 2 2"] {
            let (x, _) = to_super_summit(&nf(s));
            for a in e.structure().atoms() {
                let c = minimal_sss_conjugator(&e, &x, &a);
                let ok: Vec<Permutation> = Permutation::all(4)
                    .into_iter()
                    .filter(|t| crate::simple::left_divides(&a, t))
                    .filter(|t| {
                        let y = e.conjugate_by_simple(&x, t);
                        y.inf == x.inf && y.sup() == x.sup()
                    })
                    .collect();
                assert!(ok.contains(&c));
                assert!(ok.iter().all(|t| crate::simple::left_divides(&c, t)));
            }
        }
    }

    #[test]
    fn conjugacy_examples() {
        let c = are_conjugate(&w("3: 1 2"), &w("3: 1 2")).unwrap().unwrap();
        assert!(c.verify());
        let c = are_conjugate(&w("3: 1"), &w("3: 2")).unwrap().unwrap();
        assert!(c.verify());
        assert!(are_conjugate(&w("3: 1"), &w("3: -1")).unwrap().is_none());
        assert!(are_conjugate(&w("3: 1 1 2"), &w("3: 1 2 2")).unwrap().unwrap().verify());
        assert!(are_conjugate(&w("3: 1 1 1 2"), &w("3: 1 1 2 2")).unwrap().is_none());
    }

    #[test]
    fn geodesics() {
        assert_eq!(geodesic_length(&BraidWord::delta(3)), 1);
        assert_eq!(geodesic_length(&w("3: -1")), 1);
        assert_eq!(geodesic_length(&w("3:")), 0);
        for s in ["3: 1 -2", "3: 1 1 -2 -2", "3: 1 2 1 1", "3: -1 -1 -2 1"] {
            let x = w(s);
            assert_eq!(Some(geodesic_length(&x) as usize), brute::geodesic_length(&x, 4), "{s}");
        }
    }
}
