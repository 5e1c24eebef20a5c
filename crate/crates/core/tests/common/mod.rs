#![allow(dead_code)]

use braid_core::BraidWord;
use proptest::prelude::*;

pub fn letters(n: usize, max_len: usize) -> impl Strategy<Value = Vec<i32>> {
    let top = n as i32 - 1;
    prop::collection::vec((1..=top, any::<bool>()).prop_map(|(i, p)| if p { i } else { -i }), 0..=max_len)
}

pub fn word_on(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    letters(n, max_len).prop_map(move |l| BraidWord::new(n, l).unwrap())
}

pub fn word(strands: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = BraidWord> {
    strands.prop_flat_map(move |n| word_on(n, max_len))
}

/// Two words on a common strand count.
pub fn pair(strands: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord)> {
    strands.prop_flat_map(move |n| (word_on(n, max_len), word_on(n, max_len)))
}

pub fn triple(strands: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = (BraidWord, BraidWord, BraidWord)> {
    strands.prop_flat_map(move |n| (word_on(n, max_len), word_on(n, max_len), word_on(n, max_len)))
}

pub fn positive_word(strands: std::ops::RangeInclusive<usize>, max_len: usize) -> impl Strategy<Value = BraidWord> {
    strands.prop_flat_map(move |n| prop::collection::vec(1..n as i32, 1..=max_len).prop_map(move |l| BraidWord::new(n, l).unwrap()))
}

pub fn cat(a: &BraidWord, b: &BraidWord) -> BraidWord {
    a.concat(b).unwrap()
}

pub fn conj(x: &BraidWord, a: &BraidWord) -> BraidWord {
    cat(&cat(&a.inverse(), x), a)
}

pub fn w(s: &str) -> BraidWord {
    s.parse().unwrap()
}
