//! Parameter words, the morphism `μ_c` and the words it generates.

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Largest supported alphabet size `k`.
pub const MAX_ALPHABET: usize = 64;

/// A letter of `{0, …, k-1}`.
pub type Letter = u8;

/// The parameter word `c = c_0 ⋯ c_{k-1}` with `k ≥ 2` and `c_0, c_{k-1} ≥ 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct ParamWord {
    digits: Vec<u32>,
}

impl ParamWord {
    pub fn new(digits: Vec<u32>) -> Result<Self> {
        let k = digits.len();
        if k < 2 {
            return Err(Error::TooFewDigits(k));
        }
        if k > MAX_ALPHABET {
            return Err(Error::TooManyDigits(k));
        }
        if digits[0] == 0 {
            return Err(Error::LeadingZeroDigit);
        }
        if digits[k - 1] == 0 {
            return Err(Error::TrailingZeroDigit);
        }
        Ok(Self { digits })
    }

    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Alphabet size.
    pub fn k(&self) -> usize {
        self.digits.len()
    }

    pub fn digit(&self, i: usize) -> u32 {
        self.digits[i]
    }

    /// `c_0 ⋯ c_{k-2}`.
    pub fn head(&self) -> &[u32] {
        &self.digits[..self.k() - 1]
    }

    /// `c_0 ⋯ c_{k-2}(c_{k-1} - 1)`, the period of `d*`.
    pub fn dstar_period(&self) -> Vec<u32> {
        let mut p = self.digits.clone();
        *p.last_mut().unwrap() -= 1;
        p
    }

    /// `|μ_c(letter)|`.
    pub fn image_len(&self, letter: Letter) -> usize {
        let i = letter as usize;
        self.digits[i] as usize + usize::from(i + 1 < self.k())
    }

    fn push_image(&self, letter: Letter, out: &mut Vec<Letter>) {
        let i = letter as usize;
        out.extend(std::iter::repeat_n(0, self.digits[i] as usize));
        if i + 1 < self.k() {
            out.push(letter + 1);
        }
    }
}

impl TryFrom<Vec<u32>> for ParamWord {
    type Error = Error;

    fn try_from(digits: Vec<u32>) -> Result<Self> {
        Self::new(digits)
    }
}

impl From<ParamWord> for Vec<u32> {
    fn from(c: ParamWord) -> Self {
        c.digits
    }
}

impl FromStr for ParamWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_digits(s)?)
    }
}

impl fmt::Display for ParamWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digits(&self.digits))
    }
}

/// Parses a digit word.
///
/// Digits are either dot-separated decimal integers (`12.0.3`) or, when
/// every digit is below 10, juxtaposed (`102`). `ε` and the empty string
/// denote the empty word.
pub fn parse_digits(s: &str) -> Result<Vec<u32>> {
    let trimmed = s.trim();
    let err = |position: usize, reason: &str| Error::Parse {
        input: s.to_string(),
        position,
        reason: reason.to_string(),
    };
    if trimmed.is_empty() || trimmed == "ε" {
        return Ok(Vec::new());
    }
    if trimmed.contains('.') {
        let mut offset = 0;
        let mut out = Vec::new();
        for part in trimmed.split('.') {
            if part.is_empty() || !part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err(offset, "expected a decimal integer"));
            }
            out.push(part.parse().map_err(|_| err(offset, "digit too large"))?);
            offset += part.len() + 1;
        }
        Ok(out)
    } else {
        trimmed
            .char_indices()
            .map(|(i, ch)| ch.to_digit(10).ok_or_else(|| err(i, "expected a decimal digit")))
            .collect()
    }
}

/// Inverse of [`parse_digits`]: juxtaposed when all digits are below 10,
/// dot-separated otherwise, `ε` for the empty word.
pub fn format_digits<T: Copy + Into<u64>>(digits: &[T]) -> String {
    if digits.is_empty() {
        return "ε".to_string();
    }
    let sep = if digits.iter().all(|&d| d.into() < 10) { "" } else { "." };
    digits
        .iter()
        .map(|&d| d.into().to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// A finite word over `{0, …, k-1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    /// Checks that every letter is below `k`.
    pub fn check_alphabet(&self, k: usize) -> Result<()> {
        match self.0.iter().find(|&&a| a as usize >= k) {
            Some(&a) => Err(Error::LetterOutOfRange {
                letter: a.into(),
                k,
            }),
            None => Ok(()),
        }
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.0
    }
}

impl From<Vec<Letter>> for Word {
    fn from(v: Vec<Letter>) -> Self {
        Self(v)
    }
}

impl From<&[Letter]> for Word {
    fn from(v: &[Letter]) -> Self {
        Self(v.to_vec())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_digits(s)?
            .into_iter()
            .map(|d| {
                Letter::try_from(d).map_err(|_| Error::LetterOutOfRange {
                    letter: d,
                    k: MAX_ALPHABET,
                })
            })
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digits(&self.0))
    }
}

/// `μ_c(w)`.
pub fn apply_morphism(c: &ParamWord, w: &[Letter]) -> Result<Word> {
    let k = c.k();
    let mut out = Vec::with_capacity(w.len() * 2);
    for &a in w {
        if a as usize >= k {
            return Err(Error::LetterOutOfRange { letter: a.into(), k });
        }
        c.push_image(a, &mut out);
    }
    Ok(Word(out))
}

/// `u_n = μ_c^n(0)`.
pub fn word_un(c: &ParamWord, n: usize) -> Word {
    let mut w = vec![0];
    for _ in 0..n {
        let mut next = Vec::with_capacity(w.len() * 2);
        for &a in &w {
            c.push_image(a, &mut next);
        }
        w = next;
    }
    Word(w)
}

/// `U_n = |u_n|` by the linear recurrence.
pub fn length_un(c: &ParamWord, n: usize) -> BigUint {
    Lengths::new(c, n).get(n).clone()
}

/// The lengths `U_0, …, U_n`, computed with arbitrary precision.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lengths {
    values: Vec<BigUint>,
}

impl Lengths {
    /// Computes `U_0` through `U_last`.
    pub fn new(c: &ParamWord, last: usize) -> Self {
        let k = c.k();
        let mut values: Vec<BigUint> = Vec::with_capacity(last + 1);
        for n in 0..=last {
            let mut u = if n < k { BigUint::one() } else { BigUint::zero() };
            for (i, &ci) in c.digits().iter().enumerate().take(n.min(k)) {
                if ci != 0 {
                    u += &values[n - i - 1] * ci;
                }
            }
            values.push(u);
        }
        Self { values }
    }

    /// Index of the last stored length.
    pub fn last(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, n: usize) -> &BigUint {
        &self.values[n]
    }

    pub fn get_u64(&self, n: usize) -> Option<u64> {
        self.values[n].to_u64()
    }

    pub fn as_slice(&self) -> &[BigUint] {
        &self.values
    }

    /// The unique `N` with `U_N ≤ n < U_{N+1}`, if `n ≥ 1` and it lies in range.
    pub fn index_of(&self, n: &BigUint) -> Option<usize> {
        if n.is_zero() {
            return None;
        }
        (0..self.last()).find(|&i| &self.values[i + 1] > n)
    }
}

/// Smallest `N` such that `U_{N+1} > n`, together with the lengths `U_0..=U_{N+1}`.
pub(crate) fn lengths_covering(c: &ParamWord, n: &BigUint) -> (usize, Lengths) {
    // U_n ≥ n + 1, so n + 1 terms always suffice; grow geometrically instead.
    let mut last = 8;
    loop {
        let lengths = Lengths::new(c, last);
        if lengths.get(last) > n {
            let idx = (0..last).find(|&i| lengths.get(i + 1) > n).unwrap();
            return (idx, lengths);
        }
        last *= 2;
    }
}

/// The first `m` letters of the fixed point `u`.
pub fn prefix(c: &ParamWord, m: usize) -> Word {
    let mut w = vec![0];
    while w.len() < m {
        let mut next = Vec::with_capacity(w.len() * 2);
        for &a in &w {
            c.push_image(a, &mut next);
        }
        w = next;
    }
    w.truncate(m);
    Word(w)
}
