//! Orders on words, (anti-)Lyndon words and Duval's factorization.
//!
//! Everything here is generic over the letter type so that the same code
//! serves words of the fixed point (`u8` letters) and parameter words
//! (`u32` digits, unbounded in principle).

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Letter order: the natural one or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    Standard,
    Inverse,
}

impl Order {
    pub fn cmp_letters<T: Ord>(self, a: &T, b: &T) -> Ordering {
        match self {
            Order::Standard => a.cmp(b),
            Order::Inverse => b.cmp(a),
        }
    }
}

/// Lexicographic comparison; a proper prefix is smaller.
pub fn lex_compare<T: Ord>(x: &[T], y: &[T], ord: Order) -> Ordering {
    for (a, b) in x.iter().zip(y) {
        match ord.cmp_letters(a, b) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    x.len().cmp(&y.len())
}

/// Genealogical (radix) comparison: shorter first, then lexicographic.
pub fn gen_compare<T: Ord>(x: &[T], y: &[T], ord: Order) -> Ordering {
    x.len()
        .cmp(&y.len())
        .then_with(|| lex_compare(x, y, ord))
}

/// Length of the longest proper border of `w` (0 for the empty word).
pub fn longest_border<T: Eq>(w: &[T]) -> usize {
    if w.is_empty() {
        return 0;
    }
    let mut fail = vec![0usize; w.len()];
    let mut b = 0;
    for i in 1..w.len() {
        while b > 0 && w[i] != w[b] {
            b = fail[b - 1];
        }
        if w[i] == w[b] {
            b += 1;
        }
        fail[i] = b;
    }
    fail[w.len() - 1]
}

/// Smallest period of a non-empty word.
pub fn smallest_period<T: Eq>(w: &[T]) -> usize {
    w.len() - longest_border(w)
}

/// Length of the primitive root of a non-empty word.
pub fn primitive_root_len<T: Eq>(w: &[T]) -> usize {
    let p = smallest_period(w);
    if w.len().is_multiple_of(p) {
        p
    } else {
        w.len()
    }
}

pub fn is_primitive<T: Eq>(w: &[T]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(primitive_root_len(w) == w.len())
}

/// True iff `w` is `≥` all of its conjugates in the standard order.
pub fn is_max_conjugate<T: Ord>(w: &[T]) -> Result<bool> {
    is_extremal_conjugate(w, Order::Inverse)
}

/// True iff `w` is `≤` all of its conjugates in `ord`.
fn is_extremal_conjugate<T: Ord>(w: &[T], ord: Order) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    Ok((1..n).all(|r| {
        let rotated = w[r..].iter().chain(&w[..r]);
        for (a, b) in w.iter().zip(rotated) {
            match ord.cmp_letters(a, b) {
                Ordering::Equal => continue,
                Ordering::Less => return true,
                Ordering::Greater => return false,
            }
        }
        true
    }))
}

/// Lyndon with respect to `ord`: primitive and minimal among its conjugates.
pub fn is_lyndon<T: Ord>(w: &[T], ord: Order) -> Result<bool> {
    Ok(is_primitive(w)? && is_extremal_conjugate(w, ord)?)
}

/// Primitive and maximal among its conjugates (Lyndon for the inverse order).
pub fn is_anti_lyndon<T: Ord>(w: &[T]) -> Result<bool> {
    Ok(is_primitive(w)? && is_max_conjugate(w)?)
}

/// The Lyndon factorization of a word, as borrowed slices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LyndonFactorization<'a, T> {
    pub factors: Vec<&'a [T]>,
    pub order: Order,
}

impl<T: Clone> LyndonFactorization<'_, T> {
    pub fn concat(&self) -> Vec<T> {
        self.factors.iter().flat_map(|f| f.iter().cloned()).collect()
    }
}

/// Duval's algorithm.
///
/// The scan keeps `y = v^e x` with `v` Lyndon (`x` a proper prefix of `v`),
/// `i` points into `v` and `j` at the next unread letter. The end of the word
/// behaves as a letter smaller than every other one. When the comparison
/// fails, every complete copy of `v` is emitted and the scan restarts just
/// after them.
pub fn duval_factorization<T: Ord>(w: &[T], ord: Order) -> Result<LyndonFactorization<'_, T>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let n = w.len();
    let mut factors = Vec::new();
    let mut start = 0;
    while start < n {
        let mut i = start;
        let mut j = start + 1;
        while j < n {
            match ord.cmp_letters(&w[i], &w[j]) {
                Ordering::Less => {
                    j += 1;
                    i = start;
                }
                Ordering::Equal => {
                    j += 1;
                    i += 1;
                }
                Ordering::Greater => break,
            }
        }
        let period = j - i;
        while start <= i {
            factors.push(&w[start..start + period]);
            start += period;
        }
    }
    Ok(LyndonFactorization { factors, order: ord })
}

/// The longest prefix of `w` that is anti-Lyndon.
pub fn longest_anti_lyndon_prefix<T: Ord>(w: &[T]) -> Result<&[T]> {
    Ok(duval_factorization(w, Order::Inverse)?.factors[0])
}

/// Period `w` of the word `a = w^ω`, where `w` is the longest anti-Lyndon
/// prefix of `c_0 ⋯ c_{k-2}`.
pub fn anti_lyndon_root(c: &crate::ParamWord) -> Vec<u32> {
    longest_anti_lyndon_prefix(c.head())
        .expect("k >= 2 so the head is non-empty")
        .to_vec()
}

/// The first `length` letters of `a`.
pub fn anti_lyndon_stream(c: &crate::ParamWord, length: usize) -> Vec<u32> {
    anti_lyndon_root(c).into_iter().cycle().take(length).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ParamWord;
    use proptest::prelude::*;

    fn d(s: &str) -> Vec<u32> {
        crate::words::parse_digits(s).unwrap()
    }

    #[test]
    fn lexicographic() {
        use Ordering::*;
        assert_eq!(lex_compare(&d("01"), &d("0100"), Order::Standard), Less);
        assert_eq!(lex_compare(&d("10"), &d("01"), Order::Inverse), Less);
        assert_eq!(lex_compare(&d("100"), &d("10"), Order::Inverse), Greater);
        assert_eq!(lex_compare(&d("10"), &d("10"), Order::Inverse), Equal);
    }

    #[test]
    fn genealogical() {
        use Ordering::*;
        assert_eq!(gen_compare(&d("10"), &d("100"), Order::Standard), Less);
        assert_eq!(gen_compare(&d("100"), &d("101"), Order::Standard), Less);
        assert_eq!(gen_compare(&d(""), &d("0"), Order::Standard), Less);
        assert_eq!(gen_compare(&d("9"), &d("10"), Order::Standard), Less);
    }

    #[test]
    fn primitivity() {
        assert!(!is_primitive(&d("1010")).unwrap());
        assert!(is_primitive(&d("210")).unwrap());
        assert!(is_primitive(&d("0")).unwrap());
        assert!(is_primitive(&d("10101")).unwrap());
        assert_eq!(is_primitive::<u32>(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn conjugate_maximality() {
        assert!(is_max_conjugate(&d("1010")).unwrap());
        assert!(!is_max_conjugate(&d("0110")).unwrap());
        assert!(is_max_conjugate(&d("2210")).unwrap());
        assert!(!is_max_conjugate(&d("2102")).unwrap());
        assert!(!is_max_conjugate(&d("101")).unwrap());
        assert!(is_max_conjugate(&d("11")).unwrap());
        assert_eq!(is_max_conjugate::<u32>(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn anti_lyndon_predicate() {
        assert!(is_anti_lyndon(&d("110")).unwrap());
        assert!(!is_anti_lyndon(&d("011")).unwrap());
        assert!(!is_anti_lyndon(&d("1010")).unwrap());
    }

    #[test]
    fn duval_examples() {
        let w = d("21022");
        let f = duval_factorization(&w, Order::Inverse).unwrap();
        assert_eq!(f.factors, vec![&[2, 1, 0][..], &[2], &[2]]);
        let w = d("10");
        assert_eq!(duval_factorization(&w, Order::Inverse).unwrap().factors, vec![&[1, 0][..]]);
        let w = d("000");
        assert_eq!(
            duval_factorization(&w, Order::Standard).unwrap().factors,
            vec![&[0][..], &[0], &[0]]
        );
        let w = d("0010100101");
        let f = duval_factorization(&w, Order::Standard).unwrap();
        assert_eq!(f.factors, vec![&[0, 0, 1, 0, 1][..], &[0, 0, 1, 0, 1]]);
        assert!(duval_factorization::<u32>(&[], Order::Standard).is_err());
    }

    #[test]
    fn longest_prefixes() {
        assert_eq!(longest_anti_lyndon_prefix(&d("10")).unwrap(), &[1, 0]);
        assert_eq!(longest_anti_lyndon_prefix(&d("21022")).unwrap(), &[2, 1, 0]);
        assert_eq!(longest_anti_lyndon_prefix(&d("0")).unwrap(), &[0]);
    }

    #[test]
    fn streams() {
        let c = |s: &str| s.parse::<ParamWord>().unwrap();
        assert_eq!(anti_lyndon_stream(&c("102"), 6), d("101010"));
        assert_eq!(anti_lyndon_stream(&c("210221"), 7), d("2102102"));
        assert_eq!(anti_lyndon_stream(&c("11"), 3), d("111"));
    }

    #[test]
    fn binary_anti_lyndon_words_up_to_length_four() {
        let mut found = Vec::new();
        for len in 1..=4u32 {
            // descending numeric order lists the inverse-lexicographic order
            for bits in (0..1u32 << len).rev() {
                let w: Vec<u32> = (0..len).rev().map(|b| (bits >> b) & 1).collect();
                if is_anti_lyndon(&w).unwrap() {
                    found.push(crate::words::format_digits(&w));
                }
            }
        }
        assert_eq!(found, ["1", "0", "10", "110", "100", "1110", "1100", "1000"]);
    }

    fn small_word(max_letter: u32, max_len: usize) -> impl Strategy<Value = Vec<u32>> {
        prop::collection::vec(0..=max_letter, 1..=max_len)
    }

    fn order() -> impl Strategy<Value = Order> {
        prop_oneof![Just(Order::Standard), Just(Order::Inverse)]
    }

    proptest! {
        #[test]
        fn duval_factors_are_lyndon_and_non_increasing(w in small_word(3, 30), ord in order()) {
            let f = duval_factorization(&w, ord).unwrap();
            prop_assert_eq!(f.concat(), w.clone());
            for x in &f.factors {
                prop_assert!(is_lyndon(x, ord).unwrap());
                prop_assert_eq!(longest_border(x), 0);
            }
            for pair in f.factors.windows(2) {
                prop_assert_ne!(lex_compare(pair[0], pair[1], ord), Ordering::Less);
            }
        }

        #[test]
        fn anti_lyndon_routes_agree(w in small_word(3, 12)) {
            let by_duval = duval_factorization(&w, Order::Inverse).unwrap().factors.len() == 1;
            prop_assert_eq!(is_anti_lyndon(&w).unwrap(), by_duval);
        }

        #[test]
        fn comparisons_are_total_orders(
            x in prop::collection::vec(0..3u32, 0..6),
            y in prop::collection::vec(0..3u32, 0..6),
            z in prop::collection::vec(0..3u32, 0..6),
            ord in order(),
        ) {
            for cmp in [lex_compare::<u32>, gen_compare::<u32>] {
                prop_assert_eq!(cmp(&x, &y, ord), cmp(&y, &x, ord).reverse());
                prop_assert_eq!(cmp(&x, &y, ord) == Ordering::Equal, x == y);
                if cmp(&x, &y, ord) != Ordering::Greater && cmp(&y, &z, ord) != Ordering::Greater {
                    prop_assert_ne!(cmp(&x, &z, ord), Ordering::Greater);
                }
            }
        }
    }
}
