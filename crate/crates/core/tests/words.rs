mod common;

use common::{c, family};
use morphic_sa::words::{apply_morphism, length_un, prefix, word_un, Lengths};
use morphic_sa::{ParamWord, Word};
use proptest::prelude::*;

fn param() -> impl Strategy<Value = ParamWord> {
    (2usize..=5)
        .prop_flat_map(|k| proptest::collection::vec(0u32..=3, k))
        .prop_filter_map("WH", |mut d| {
            let k = d.len();
            d[0] = d[0].max(1);
            d[k - 1] = d[k - 1].max(1);
            ParamWord::new(d).ok()
        })
}

/// `u_n = u_{n-1}^{c_0} ⋯ u_{n-k}^{c_{k-1}}`, with the letter `n` closing the
/// product while `n < k`.
fn recursive_word(c: &ParamWord, n: usize) -> Vec<u8> {
    if n == 0 {
        return vec![0];
    }
    let mut w = Vec::new();
    for i in 0..n.min(c.k()) {
        let block = word_un(c, n - 1 - i);
        for _ in 0..c.digit(i) {
            w.extend_from_slice(&block);
        }
    }
    if n < c.k() {
        w.push(n as u8);
    }
    w
}

#[test]
fn recursive_factorization() {
    for c in family(4, 3) {
        for n in 0..=10 {
            assert_eq!(word_un(&c, n).letters(), recursive_word(&c, n), "c = {c}, n = {n}");
        }
    }
}

#[test]
fn table_one_factorization() {
    let c = c("102");
    let u3 = [word_un(&c, 2).letters(), word_un(&c, 0).letters(), word_un(&c, 0).letters()].concat();
    assert_eq!(word_un(&c, 3).letters(), u3);
}

#[test]
fn fibonacci_like_words() {
    assert_eq!(prefix(&c("11"), 13).to_string(), "0100101001001");
    assert_eq!(prefix(&c("12"), 8).to_string(), "01000101");
    assert_eq!(prefix(&c("111"), 7).to_string(), "0102010");
}

proptest! {
    #[test]
    fn growth_and_prefixes(c in param(), n in 0usize..8) {
        let un = word_un(&c, n);
        let next = word_un(&c, n + 1);
        prop_assert!(next.starts_with(&un));
        prop_assert_eq!(&prefix(&c, un.len()), &un);
        prop_assert_eq!(length_un(&c, n), un.len().into());
        prop_assert_eq!(Lengths::new(&c, n).get(n).clone(), length_un(&c, n));
        prop_assert_eq!(apply_morphism(&c, &un).unwrap(), next);
    }

    #[test]
    fn old_block_is_a_suffix(c in param(), extra in 0usize..4) {
        let n = c.k() + extra;
        let un = word_un(&c, n);
        let old = word_un(&c, n - c.k());
        prop_assert!(un.ends_with(&old));
    }

    #[test]
    fn letters_are_followed_by_zero_or_larger(c in param(), m in 1usize..400) {
        let k = c.k() as u8;
        let u = prefix(&c, m);
        for pair in u.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            if a >= 1 {
                prop_assert!(b == 0 || b > a, "{} then {}", a, b);
            }
            if a + 1 == k {
                prop_assert_eq!(b, 0);
            }
        }
    }

    #[test]
    fn larger_successor_needs_zero_digit(c in param(), m in 1usize..400) {
        // a > 0 followed by b > a means b opens the image μ(b - 1) = b
        let u = prefix(&c, m);
        for pair in u.windows(2) {
            let (a, b) = (pair[0] as usize, pair[1] as usize);
            if a >= 1 && b > a {
                prop_assert!(c.digit(b - 1) == 0, "{} then {} in c = {}", a, b, c);
            }
        }
    }

    #[test]
    fn parse_round_trip(c in param()) {
        let again: ParamWord = c.to_string().parse().unwrap();
        prop_assert_eq!(again, c);
    }
}

#[test]
fn one_can_skip_to_three() {
    // inner digits 1, 0 let 1 be followed by 3
    let u = prefix(&c("1101"), 7);
    assert_eq!(u.to_string(), "0102013");
}

#[test]
fn empty_prefix() {
    assert_eq!(prefix(&c("23"), 0), Word::empty());
}
