//! Permutation braids: the divisors of Δ in the classical positive monoid.
//!
//! A simple element is identified with its permutation. Its crossing set is the
//! set of strand pairs (labelled by starting position) that cross; left
//! divisibility is inclusion of crossing sets.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::word::BraidWord;

pub type SimpleElement = Permutation;

/// The simple element with the given permutation.
pub fn from_permutation(p: &Permutation) -> SimpleElement {
    p.clone()
}

pub fn atom(n: usize, i: usize) -> SimpleElement {
    let mut p = Permutation::identity(n);
    p.swap_positions(i - 1);
    p
}

pub fn delta(n: usize) -> SimpleElement {
    Permutation::reversal(n)
}

/// Number of crossings, i.e. the letter length of any positive word for `a`.
pub fn length(a: &SimpleElement) -> usize {
    a.inversions()
}

fn check(a: &Permutation, b: &Permutation) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::StrandMismatch(a.len(), b.len()));
    }
    Ok(())
}

/// Crossing matrix: `m[i][j]` for `i < j` iff strands starting at `i` and `j` cross.
fn crossings(a: &Permutation) -> Vec<Vec<bool>> {
    let n = a.len();
    let end = a.inverse();
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            m[i][j] = end.at(i) > end.at(j);
        }
    }
    m
}

fn from_crossings(m: &[Vec<bool>]) -> Permutation {
    let n = m.len();
    let mut end = vec![0u8; n];
    for i in 0..n {
        let right = (i + 1..n).filter(|&j| m[i][j]).count();
        let left = (0..i).filter(|&j| m[j][i]).count();
        end[i] = (i + right - left) as u8;
    }
    Permutation::from_zero_based(end).inverse()
}

pub fn left_divides(a: &SimpleElement, b: &SimpleElement) -> bool {
    let (ca, cb) = (crossings(a), crossings(b));
    let n = a.len();
    (0..n).all(|i| (i + 1..n).all(|j| !ca[i][j] || cb[i][j]))
}

pub fn try_left_divides(a: &SimpleElement, b: &SimpleElement) -> Result<bool> {
    check(a, b)?;
    Ok(left_divides(a, b))
}

/// `a ≽_R b`: `b` is a right divisor of `a`.
pub fn right_divides(b: &SimpleElement, a: &SimpleElement) -> bool {
    left_divides(&b.inverse(), &a.inverse())
}

/// Left gcd: grow a common prefix one atom at a time.
pub fn meet(a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
    let n = a.len();
    let (ca, cb) = (crossings(a), crossings(b));
    let mut c = Permutation::identity(n);
    loop {
        let mut grew = false;
        for i in 0..n.saturating_sub(1) {
            if c.raw()[i] > c.raw()[i + 1] {
                continue;
            }
            // appending s_i makes the strands now at positions i, i+1 cross
            let (x, y) = (c.at(i), c.at(i + 1));
            let (lo, hi) = (x.min(y), x.max(y));
            if ca[lo][hi] && cb[lo][hi] {
                let mut d = c.clone();
                d.swap_positions(i);
                let cd = crossings(&d);
                let ok = (0..n).all(|p| (p + 1..n).all(|q| !cd[p][q] || (ca[p][q] && cb[p][q])));
                if ok {
                    c = d;
                    grew = true;
                }
            }
        }
        if !grew {
            return c;
        }
    }
}

pub fn try_meet(a: &SimpleElement, b: &SimpleElement) -> Result<SimpleElement> {
    check(a, b)?;
    Ok(meet(a, b))
}

/// Left lcm: transitive closure of the union of crossing sets.
pub fn join(a: &SimpleElement, b: &SimpleElement) -> SimpleElement {
    let n = a.len();
    let (ca, cb) = (crossings(a), crossings(b));
    let mut m = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            m[i][j] = ca[i][j] || cb[i][j];
        }
    }
    loop {
        let mut changed = false;
        for i in 0..n {
            for j in i + 1..n {
                if !m[i][j] {
                    continue;
                }
                for k in j + 1..n {
                    if m[j][k] && !m[i][k] {
                        m[i][k] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    from_crossings(&m)
}

pub fn try_join(a: &SimpleElement, b: &SimpleElement) -> Result<SimpleElement> {
    check(a, b)?;
    Ok(join(a, b))
}

/// `∂a = a⁻¹Δ`.
pub fn complement(a: &SimpleElement) -> SimpleElement {
    a.inverse().compose(&Permutation::reversal(a.len()))
}

/// `Δ⁻¹ a Δ`.
pub fn tau(a: &SimpleElement) -> SimpleElement {
    let n = a.len();
    let r = a.raw();
    Permutation::from_zero_based((0..n).map(|p| (n - 1) as u8 - r[n - 1 - p]).collect())
}

/// Positive word: peel the leftmost right descent repeatedly.
pub fn to_letters(a: &SimpleElement) -> Vec<i32> {
    let mut p = a.clone();
    let mut rev = Vec::with_capacity(p.inversions());
    'outer: loop {
        for i in 0..p.len().saturating_sub(1) {
            if p.raw()[i] > p.raw()[i + 1] {
                p.swap_positions(i);
                rev.push(i as i32 + 1);
                continue 'outer;
            }
        }
        break;
    }
    rev.reverse();
    rev
}

pub fn to_word(a: &SimpleElement) -> BraidWord {
    BraidWord::new(a.len(), to_letters(a)).expect("letters in range")
}

/// All `n!` simple elements.
pub fn all(n: usize) -> Vec<SimpleElement> {
    Permutation::all(n)
}

/// Left descents: atoms `σ_i` with `σ_i ≼ a`.
pub fn starting_set(a: &SimpleElement) -> Vec<usize> {
    let inv = a.inverse();
    (0..a.len().saturating_sub(1)).filter(|&i| inv.at(i) > inv.at(i + 1)).map(|i| i + 1).collect()
}

/// Right descents: atoms `σ_i` with `a = b σ_i`.
pub fn finishing_set(a: &SimpleElement) -> Vec<usize> {
    (0..a.len().saturating_sub(1)).filter(|&i| a.at(i) > a.at(i + 1)).map(|i| i + 1).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Permutation {
        Permutation::from_images(v).unwrap()
    }

    fn by_length(a: &Permutation, b: &Permutation) -> bool {
        length(a) + length(&a.inverse().compose(b)) == length(b)
    }

    #[test]
    fn divisibility_matches_length_criterion() {
        for n in 1..=4 {
            let all = all(n);
            for a in &all {
                for b in &all {
                    assert_eq!(left_divides(a, b), by_length(a, b), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn lattice_exhaustive() {
        for n in 1..=4 {
            let all = all(n);
            for a in &all {
                for b in &all {
                    let m = meet(a, b);
                    let j = join(a, b);
                    assert!(left_divides(&m, a) && left_divides(&m, b));
                    assert!(left_divides(a, &j) && left_divides(b, &j));
                    for c in &all {
                        if left_divides(c, a) && left_divides(c, b) {
                            assert!(left_divides(c, &m));
                        }
                        if left_divides(a, c) && left_divides(b, c) {
                            assert!(left_divides(&j, c));
                        }
                    }
                    assert_eq!(meet(a, b), meet(b, a));
                    assert_eq!(join(a, b), join(b, a));
                    assert_eq!(meet(a, &join(a, b)), *a);
                    assert_eq!(join(a, &meet(a, b)), *a);
                }
                assert_eq!(meet(a, a), *a);
                assert_eq!(join(a, a), *a);
            }
        }
    }

    #[test]
    fn named_examples() {
        let d3 = delta(3);
        let s1 = atom(3, 1);
        let s2 = atom(3, 2);
        assert_eq!(meet(&d3, &s1), s1);
        assert!(meet(&s1, &s2).is_identity());
        assert_eq!(join(&s1, &s2), d3);
        assert_eq!(join(&s1, &d3), d3);
        assert!(left_divides(&s1, &d3));
        let s121 = to_word(&d3).permutation();
        let s12 = BraidWord::new(3, vec![1, 2]).unwrap().permutation();
        assert!(!left_divides(&s121, &s12));

        let a = BraidWord::new(4, vec![1, 2]).unwrap().permutation();
        let b = BraidWord::new(4, vec![1, 3]).unwrap().permutation();
        assert_eq!(meet(&a, &b), atom(4, 1));

        assert_eq!(from_permutation(&p(&[2, 1, 3])), s1);
        assert_eq!(from_permutation(&p(&[3, 2, 1])), d3);
    }

    #[test]
    fn words_realize_permutations() {
        for n in 1..=5 {
            for a in all(n) {
                let w = to_word(&a);
                assert!(w.is_positive());
                assert_eq!(w.len(), length(&a));
                assert_eq!(w.permutation(), a);
            }
        }
    }

    #[test]
    fn complements_and_tau() {
        for n in 2..=5 {
            let d = delta(n);
            for i in 1..n {
                let s = atom(n, i);
                // Δ = σ_i R_i = L_i σ_i
                let r = complement(&s);
                assert_eq!(s.compose(&r), d);
                assert!(left_divides(&s, &d));
                let l = d.compose(&s.inverse());
                assert!(right_divides(&s, &d));
                assert_eq!(length(&l) + 1, length(&d));
                assert_eq!(tau(&s), atom(n, n - i));
            }
            for a in all(n) {
                assert_eq!(tau(&tau(&a)), a);
                assert_eq!(length(&complement(&a)) + length(&a), length(&d));
            }
        }
    }

    #[test]
    fn descent_sets() {
        let d = delta(4);
        assert_eq!(starting_set(&d), vec![1, 2, 3]);
        assert_eq!(finishing_set(&d), vec![1, 2, 3]);
        let w = BraidWord::new(4, vec![1, 2]).unwrap().permutation();
        assert_eq!(starting_set(&w), vec![1]);
        assert_eq!(finishing_set(&w), vec![2]);
    }
}
