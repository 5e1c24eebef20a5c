//! HOMFLY polynomial from the skein relation `m P₀ = l⁻¹ P₊ - l P₋`.
//!
//! Components are traversed from their least edge label, in order of that label.
//! The first crossing met first from below is switched; the smoothing and the
//! switched diagram are computed recursively. A diagram with no such crossing is
//! descending, hence an unlink of `c` components with `P = ((l⁻¹ - l)/m)^{c-1}`.

use std::collections::{HashMap, HashSet};

use super::{Crossing, LinkDiagram};
use crate::error::{Error, Result};
use crate::hecke::{homfly_vars, unlink_factor};
use crate::laurent::LaurentPoly;

pub const DEFAULT_SKEIN_BUDGET: usize = 1_000_000;

struct Skein {
    memo: HashMap<LinkDiagram, LaurentPoly>,
    calls: usize,
    budget: usize,
}

fn first_bad_crossing(d: &LinkDiagram) -> Option<usize> {
    let edges = d.edges();
    let mut seen = HashSet::new();
    for comp in d.link_components() {
        if !edges.contains_key(&comp[0]) {
            continue;
        }
        for e in comp {
            let (c, p) = edges[&e].head;
            if seen.insert(c) && p == 0 {
                return Some(c);
            }
        }
    }
    None
}

/// Removes crossing `c`, joining incoming to outgoing edges as in Seifert smoothing.
fn smooth(d: &LinkDiagram, c: usize) -> LinkDiagram {
    let x = d.crossings()[c];
    let mut crossings: Vec<Crossing> = d.crossings().to_vec();
    crossings.remove(c);
    let mut free = d.free_loops().to_vec();
    let other_in = if x.sign > 0 { 3 } else { 1 };
    let mut joins = [0, other_in].map(|p| (x.ports[p], x.ports[x.smoothing_exit(p)]));
    for k in 0..2 {
        let (incoming, outgoing) = joins[k];
        if incoming == outgoing {
            free.push(incoming);
            continue;
        }
        let rename = |l: &mut u32| {
            if *l == outgoing {
                *l = incoming;
            }
        };
        crossings.iter_mut().for_each(|y| y.ports.iter_mut().for_each(rename));
        for j in joins.iter_mut().skip(k + 1) {
            rename(&mut j.0);
            rename(&mut j.1);
        }
    }
    LinkDiagram::new_unchecked(crossings, free).canonical_labels()
}

impl Skein {
    fn eval(&mut self, d: LinkDiagram) -> Result<LaurentPoly> {
        if let Some(p) = self.memo.get(&d) {
            crate::stats::record_cache_hit();
            return Ok(p.clone());
        }
        self.calls += 1;
        if self.calls > self.budget {
            return Err(Error::ResourceCap { what: "skein recursion", limit: self.budget });
        }
        let hv = homfly_vars();
        let out = match first_bad_crossing(&d) {
            None => unlink_factor().pow(d.component_count() as i64 - 1)?,
            Some(c) => {
                let x = d.crossings()[c];
                let mut switched = d.crossings().to_vec();
                switched[c] = x.switched();
                // labels, and so base points, are kept: the switched crossing stops being bad
                let switched = LinkDiagram::new_unchecked(switched, d.free_loops().to_vec());
                let p_sw = self.eval(switched)?;
                let p0 = self.eval(smooth(&d, c))?;
                let lm = |le: i32, me: i32| LaurentPoly::monomial_raw(&hv, vec![le, me], 1);
                if x.sign > 0 {
                    // P₊ = l² P₋ + l m P₀
                    &(&lm(2, 0) * &p_sw) + &(&lm(1, 1) * &p0)
                } else {
                    // P₋ = l⁻² P₊ - l⁻¹ m P₀
                    &(&lm(-2, 0) * &p_sw) - &(&lm(-1, 1) * &p0)
                }
            }
        };
        self.memo.insert(d, out.clone());
        Ok(out)
    }
}

pub fn homfly_via_skein_with_budget(d: &LinkDiagram, budget: usize) -> Result<LaurentPoly> {
    let mut s = Skein { memo: HashMap::new(), calls: 0, budget };
    s.eval(d.canonical_labels())
}

pub fn homfly_via_skein(d: &LinkDiagram) -> Result<LaurentPoly> {
    homfly_via_skein_with_budget(d, DEFAULT_SKEIN_BUDGET)
}
