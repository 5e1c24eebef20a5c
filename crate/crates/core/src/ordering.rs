//! Left-invariant ordering of Bₙ: `u < v` iff `u⁻¹v` is σ-positive.
//!
//! σ-positivity is decided by handle reduction. A σᵢ-handle is a factor
//! `σᵢᵉ v σᵢ⁻ᵉ` where `v` has no letter of index `≤ i`. Reducing it deletes the
//! ends and replaces each `σᵢ₊₁ᵈ` in `v` by `σᵢ₊₁⁻ᵉ σᵢᵈ σᵢ₊₁ᵉ`. The handle ending
//! leftmost never contains another handle, which keeps the process finite. A
//! word without handles is empty or has its lowest generator with a single sign.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::word::BraidWord;

pub const DEFAULT_REDUCTION_CAP: usize = 1_000_000;

fn leftmost_handle(w: &[i32]) -> Option<(usize, usize)> {
    for j in 1..w.len() {
        let i = w[j].abs();
        for k in (0..j).rev() {
            let a = w[k].abs();
            if a < i {
                break;
            }
            if a == i {
                if w[k] == -w[j] {
                    return Some((k, j));
                }
                break;
            }
        }
    }
    None
}

/// Handle-free word equivalent to `w`.
pub fn handle_reduce_with_cap(w: &BraidWord, cap: usize) -> Result<BraidWord> {
    let mut letters = w.letters().to_vec();
    let mut steps = 0;
    while let Some((k, j)) = leftmost_handle(&letters) {
        steps += 1;
        if steps > cap {
            return Err(Error::ResourceCap { what: "handle reduction", limit: cap });
        }
        let i = letters[k].abs();
        let e = letters[k].signum();
        let mut mid = Vec::with_capacity(j - k);
        for &x in &letters[k + 1..j] {
            if x.abs() == i + 1 {
                mid.extend([-e * (i + 1), x.signum() * i, e * (i + 1)]);
            } else {
                mid.push(x);
            }
        }
        letters.splice(k..=j, mid);
    }
    BraidWord::new(w.strands(), letters)
}

pub fn handle_reduce(w: &BraidWord) -> Result<BraidWord> {
    handle_reduce_with_cap(w, DEFAULT_REDUCTION_CAP)
}

/// Sign of `w` relative to the identity.
pub fn sign(w: &BraidWord) -> Result<Ordering> {
    let r = handle_reduce(w)?;
    Ok(match r.letters().iter().min_by_key(|x| x.abs()) {
        None => Ordering::Equal,
        Some(&x) if x > 0 => Ordering::Greater,
        Some(_) => Ordering::Less,
    })
}

pub fn compare(u: &BraidWord, v: &BraidWord) -> Result<Ordering> {
    if u.strands() != v.strands() {
        return Err(Error::StrandMismatch(u.strands(), v.strands()));
    }
    Ok(sign(&u.inverse().concat(v)?)?.reverse())
}

pub fn is_positive(w: &BraidWord) -> Result<bool> {
    Ok(sign(w)? == Ordering::Greater)
}

/// Checks `1 < g < g² < ... < gᵏ` for `g = w` or `w⁻¹`, whichever exceeds 1.
pub fn torsion_probe(w: &BraidWord, k: usize) -> Result<bool> {
    let g = match sign(w)? {
        Ordering::Equal => return Err(Error::Domain("torsion probe needs a nontrivial braid".into())),
        Ordering::Greater => w.clone(),
        Ordering::Less => w.inverse(),
    };
    let mut prev = BraidWord::identity(w.strands());
    for _ in 0..k {
        let next = prev.concat(&g)?;
        if compare(&prev, &next)? != Ordering::Less || sign(&next)? != Ordering::Greater {
            return Ok(false);
        }
        prev = next;
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::garside::equal;

    fn w(s: &str) -> BraidWord {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        assert_eq!(compare(&w("3:"), &w("3: 1")).unwrap(), Ordering::Less);
        assert_eq!(compare(&w("3: 2"), &w("3: 1")).unwrap(), Ordering::Less);
        assert_eq!(compare(&w("3: 1 2 1"), &w("3: 2 1 2")).unwrap(), Ordering::Equal);
        assert_eq!(compare(&w("3: 1 -2"), &w("3: 1 -2 1 -2")).unwrap(), Ordering::Less);
        assert!(is_positive(&w("4: 3 2 3 1")).unwrap());
        assert!(!is_positive(&w("4:")).unwrap());
        assert!(!is_positive(&w("3: -1 2")).unwrap());
        assert!(is_positive(&w("3: 2 -1")).unwrap() != is_positive(&w("3: 1 -2")).unwrap());
    }

    #[test]
    fn reduced_words_are_handle_free() {
        let r = handle_reduce(&w("3: 1 2 -1")).unwrap();
        assert_eq!(r.letters(), &[-2, 1, 2]);
        assert!(equal(&r, &w("3: 1 2 -1")).unwrap());
        let src = w("4: 1 2 3 -1 -2 -3 -1 2");
        let r = handle_reduce(&src).unwrap();
        assert!(equal(&r, &src).unwrap());
        let low = r.letters().iter().map(|x| x.abs()).min().unwrap();
        let signs: std::collections::BTreeSet<i32> = r.letters().iter().filter(|x| x.abs() == low).map(|x| x.signum()).collect();
        assert_eq!(signs.len(), 1);
    }

    #[test]
    fn torsion() {
        assert!(torsion_probe(&w("3: 1"), 5).unwrap());
        assert!(torsion_probe(&w("3: 1 -2"), 4).unwrap());
        assert!(torsion_probe(&BraidWord::delta(3), 3).unwrap());
        assert!(torsion_probe(&w("3: 1 -1"), 2).is_err());
    }

    #[test]
    fn strand_mismatch() {
        assert!(compare(&w("3: 1"), &w("4: 1")).is_err());
    }
}
