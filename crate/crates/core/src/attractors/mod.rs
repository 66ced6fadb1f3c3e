//! String attractors of prefixes of `u`.
//!
//! An attractor of `y = y_1 ⋯ y_n` is a set `Γ ⊆ {1, …, n}` such that every
//! non-empty factor of `y` has an occurrence containing a position of `Γ`.
//! Positions are 1-based, while letters of `u` are indexed from 0: position
//! `p` is the letter `u[p-1]`.

mod conditions;
mod cover;
mod profile;
mod sam;

use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::lyndon::anti_lyndon_stream;
use crate::words::{prefix, word_un, Lengths, Letter};
use crate::{Error, ParamWord, Result};

pub use conditions::{check_conditions, ijl_sequences, ConditionReport, IjlRow};
pub use cover::{smallest_attractor, smallest_attractor_with_cap, DEFAULT_SEARCH_CAP, SEARCH_LIMIT};
pub use profile::{
    conjecture_test, conjectured_size, minimal_family_check, profile, ConjectureReport,
    ConjectureRow, Profile, ProfileEntry,
};

use sam::SuffixAutomaton;

/// A set of 1-based positions in a word of length `word_len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Attractor {
    positions: Vec<u64>,
    word_len: u64,
}

impl Attractor {
    /// Sorts and deduplicates `positions`; each must lie in `1..=word_len`.
    pub fn new(mut positions: Vec<u64>, word_len: u64) -> Result<Self> {
        positions.sort_unstable();
        positions.dedup();
        if let Some(&bad) = positions.iter().find(|&&p| p == 0 || p > word_len) {
            return Err(Error::PositionOutOfRange {
                position: bad,
                len: word_len,
            });
        }
        Ok(Self {
            positions,
            word_len,
        })
    }

    pub fn positions(&self) -> &[u64] {
        &self.positions
    }

    pub fn word_len(&self) -> u64 {
        self.word_len
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    /// Positions shifted to 0-based letter indices.
    pub fn zero_based(&self) -> Vec<u64> {
        self.positions.iter().map(|p| p - 1).collect()
    }
}

impl fmt::Display for Attractor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.positions.iter().map(u64::to_string).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

/// Whether `gamma` is a string attractor of `w`.
///
/// For an end position `e`, let `d(e)` be the shortest length of a factor
/// ending at `e` that contains a position of `gamma`. A class of the suffix
/// automaton is covered iff the minimum of `d` over its end positions is at
/// most the shortest length of the class.
pub fn is_attractor(w: &[Letter], gamma: &Attractor) -> Result<bool> {
    if gamma.word_len != w.len() as u64 {
        return Err(Error::PositionOutOfRange {
            position: gamma.word_len,
            len: w.len() as u64,
        });
    }
    Ok(covers_all_factors(w, &gamma.zero_based()))
}

/// Checks 0-based positions, sorted ascending and all below `w.len()`.
pub(crate) fn covers_all_factors(w: &[Letter], positions: &[u64]) -> bool {
    let n = w.len();
    // d[e] = e - (last position ≤ e) + 1
    let mut need = vec![usize::MAX; n];
    let mut next = positions.iter().peekable();
    let mut last: Option<usize> = None;
    for (e, slot) in need.iter_mut().enumerate() {
        while let Some(&&p) = next.peek() {
            if p as usize > e {
                break;
            }
            last = Some(p as usize);
            next.next();
        }
        if let Some(p) = last {
            *slot = e - p + 1;
        }
    }
    let sam = SuffixAutomaton::new(w);
    let mut best = vec![usize::MAX; sam.state_count()];
    for s in 1..sam.state_count() {
        if let Some(e) = sam.end[s] {
            best[s] = need[e];
        }
    }
    for s in sam.by_decreasing_len() {
        if best[s] > sam.min_len(s) {
            return false;
        }
        let parent = sam.link[s];
        best[parent] = best[parent].min(best[s]);
    }
    true
}

/// `Γ_n`: `{U_0, …, U_n}` for `n ≤ k-1`, `{U_{n-k+1}, …, U_n}` beyond, and
/// `Γ_{-1} = ∅`.
pub fn gamma_n(c: &ParamWord, n: i64) -> Vec<BigUint> {
    if n < 0 {
        return Vec::new();
    }
    let n = n as usize;
    let lengths = Lengths::new(c, n);
    let first = (n + 1).saturating_sub(c.k());
    (first..=n).map(|i| lengths.get(i).clone()).collect()
}

/// `P_n`.
pub fn p_n(c: &ParamWord, n: usize) -> BigUint {
    p_with(c, &Lengths::new(c, n), n)
}

fn p_with(c: &ParamWord, lengths: &Lengths, n: usize) -> BigUint {
    let k = c.k();
    if n < k {
        lengths.get(n).clone()
    } else {
        lengths.get(n) + lengths.get(n - k + 1) - lengths.get(n - k) - 1u32
    }
}

/// `Q_n = Σ_{i ≤ n} a_i U_{n-i}`.
pub fn q_n_formula(c: &ParamWord, n: usize) -> BigUint {
    q_with(c, &Lengths::new(c, n), n)
}

fn q_with(c: &ParamWord, lengths: &Lengths, n: usize) -> BigUint {
    anti_lyndon_stream(c, n + 1)
        .iter()
        .enumerate()
        .map(|(i, &a)| lengths.get(n - i) * a)
        .sum()
}

/// Length of the longest common prefix of `u` and `u_n^ω`, by letter
/// comparison. Fails rather than answer when `cap` letters agree; the
/// default cap is `4 U_{n+1}`.
pub fn q_n_direct(c: &ParamWord, n: usize, cap: Option<u64>) -> Result<u64> {
    let cap = match cap {
        Some(cap) => cap,
        None => {
            let bound = Lengths::new(c, n + 1).get(n + 1) * 4u32;
            bound.to_u64().ok_or_else(|| Error::Overflow(bound.to_string()))?
        }
    };
    let limit = usize::try_from(cap).map_err(|_| Error::Overflow(cap.to_string()))?;
    let block = word_un(c, n);
    let u = prefix(c, limit);
    match u
        .iter()
        .zip(block.iter().cycle())
        .position(|(a, b)| a != b)
    {
        Some(q) => Ok(q as u64),
        None => Err(Error::CapReached(cap)),
    }
}

fn to_u64(v: &BigUint) -> Result<u64> {
    v.to_u64().ok_or_else(|| Error::Overflow(v.to_string()))
}

/// Which claim of the construction produced an attractor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    /// `Γ_n`, valid on `[P_n, Q_n]`.
    Gamma { n: usize },
    /// `Γ_{n-1} ∪ {U_n}`, valid on `[U_n, Q_n]`.
    GammaPlusLength { n: usize },
}

/// An attractor of `u[0, m)` built from the lengths `U_n`.
pub fn attractor_for_prefix(c: &ParamWord, m: u64) -> Result<Attractor> {
    Ok(attractor_for_prefix_with_origin(c, m)?.0)
}

/// Same as [`attractor_for_prefix`], also reporting which claim applies.
pub fn attractor_for_prefix_with_origin(c: &ParamWord, m: u64) -> Result<(Attractor, Construction)> {
    if m == 0 {
        return Err(Error::ZeroLength);
    }
    if !check_conditions(c)?.all_hold() {
        return Err(Error::OutsideTheoremScope(c.to_string()));
    }
    let target = BigUint::from(m);
    let (top, lengths) = crate::words::lengths_covering(c, &target);
    let k = c.k();
    // smallest set first, Γ_n preferred on ties
    let mut best: Option<((usize, u8), Construction)> = None;
    let mut offer = |key: (usize, u8), origin: Construction| {
        if best.is_none_or(|(b, _)| key < b) {
            best = Some((key, origin));
        }
    };
    for n in 0..=top {
        if target > q_with(c, &lengths, n) {
            continue;
        }
        if p_with(c, &lengths, n) <= target {
            offer(((n + 1).min(k), 0), Construction::Gamma { n });
        }
        if lengths.get(n) <= &target {
            offer(((n + 1).min(k + 1), 1), Construction::GammaPlusLength { n });
        }
    }
    let (_, origin) = best.ok_or_else(|| {
        Error::Inconsistent(format!("no window [U_n, Q_n] contains {m} for c = {c}"))
    })?;
    let positions = match origin {
        Construction::Gamma { n } => window(&lengths, n as i64, k),
        Construction::GammaPlusLength { n } => {
            let mut p = window(&lengths, n as i64 - 1, k);
            p.push(lengths.get(n).clone());
            p
        }
    };
    let positions = positions.iter().map(to_u64).collect::<Result<Vec<_>>>()?;
    let gamma = Attractor::new(positions, m)?;
    if cfg!(debug_assertions) && m <= 1 << 16 {
        let w = prefix(c, m as usize);
        if !is_attractor(&w, &gamma)? {
            return Err(Error::Inconsistent(format!(
                "{gamma} from {origin:?} is not an attractor of u[0,{m}) for c = {c}"
            )));
        }
    }
    Ok((gamma, origin))
}

fn window(lengths: &Lengths, n: i64, k: usize) -> Vec<BigUint> {
    if n < 0 {
        return Vec::new();
    }
    let n = n as usize;
    let first = (n + 1).saturating_sub(k);
    (first..=n).map(|i| lengths.get(i).clone()).collect()
}
