//! Syntactic Markov and exchange moves on braid words.

use crate::word::BraidWord;

/// `w ↦ w σ_n^{±1}` on `n + 1` strands.
pub fn stabilize(w: &BraidWord, positive: bool) -> BraidWord {
    let n = w.strands();
    let mut letters = w.letters().to_vec();
    letters.push(if positive { n as i32 } else { -(n as i32) });
    BraidWord::new(n + 1, letters).expect("letters fit on n + 1 strands")
}

/// Removes the last strand when `σ_{n-1}^{±1}` occurs exactly once: the closure of
/// `u σ_{n-1}^{±1} v` is that of `uv`. Tries `σ_1` through the flip `τ` too.
pub fn destabilize(w: &BraidWord) -> Option<BraidWord> {
    let n = w.strands();
    if n < 2 {
        return None;
    }
    let top = n as i32 - 1;
    for cand in [w.clone(), w.tau()] {
        let hits: Vec<usize> = (0..cand.len()).filter(|&i| cand.letters()[i].abs() == top).collect();
        if hits.len() == 1 {
            let mut letters = cand.letters().to_vec();
            letters.remove(hits[0]);
            return BraidWord::new(n - 1, letters).ok();
        }
    }
    None
}

/// Finds a cyclic rotation `w₁ σ_{n-1} w₂ σ_{n-1}⁻¹` with `w₁, w₂` over `σ_1..σ_{n-2}`.
pub fn exchange_factorization(w: &BraidWord) -> Option<(BraidWord, BraidWord)> {
    let n = w.strands();
    if n < 3 {
        return None;
    }
    let top = n as i32 - 1;
    let ls = w.letters();
    let pos: Vec<usize> = (0..ls.len()).filter(|&i| ls[i] == top).collect();
    let neg: Vec<usize> = (0..ls.len()).filter(|&i| ls[i] == -top).collect();
    if pos.len() != 1 || neg.len() != 1 {
        return None;
    }
    let r = w.rotate(neg[0] + 1);
    let rl = r.letters();
    let at = rl.iter().position(|&l| l == top).expect("one positive top letter");
    let w1 = BraidWord::new(n, rl[..at].to_vec()).ok()?;
    let w2 = BraidWord::new(n, rl[at + 1..rl.len() - 1].to_vec()).ok()?;
    Some((w1, w2))
}

/// `w₁ σ_{n-1} w₂ σ_{n-1}⁻¹ ↦ w₁ σ_{n-1}⁻¹ w₂ σ_{n-1}`.
pub fn exchange_move(w: &BraidWord) -> Option<BraidWord> {
    let (w1, w2) = exchange_factorization(w)?;
    let top = w.strands() as i32 - 1;
    let mut letters = w1.letters().to_vec();
    letters.push(-top);
    letters.extend_from_slice(w2.letters());
    letters.push(top);
    BraidWord::new(w.strands(), letters).ok()
}
