//! Exact smallest attractors by branch-and-bound set cover.
//!
//! A factor class of the suffix automaton with end positions `E` and
//! shortest length `L` is hit by a position `p` iff `p ∈ e-L+1..=e` for some
//! `e ∈ E`; longer members of the class only widen these windows, so one
//! requirement per class suffices.

use super::profile::ProfileEntry;
use super::sam::SuffixAutomaton;
use super::Attractor;
use crate::words::Letter;
use crate::{Error, Result};

/// Longest word the search accepts, whatever the cap.
pub const SEARCH_LIMIT: usize = 256;
pub const DEFAULT_SEARCH_CAP: usize = 200;

const WORDS: usize = SEARCH_LIMIT / 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
struct Bits([u64; WORDS]);

impl Bits {
    fn single(i: usize) -> Self {
        let mut b = Self::default();
        b.0[i / 64] |= 1 << (i % 64);
        b
    }

    fn below(n: usize) -> Self {
        let mut b = Self::default();
        for i in 0..n {
            b.0[i / 64] |= 1 << (i % 64);
        }
        b
    }

    fn or(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] | o.0[i]))
    }

    fn and(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] & o.0[i]))
    }

    fn minus(self, o: Self) -> Self {
        Self(std::array::from_fn(|i| self.0[i] & !o.0[i]))
    }

    fn shr1(self) -> Self {
        Self(std::array::from_fn(|i| {
            let carry = if i + 1 < WORDS { self.0[i + 1] << 63 } else { 0 };
            (self.0[i] >> 1) | carry
        }))
    }

    fn is_empty(self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn count(self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }

    fn contains(self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn is_subset(self, o: Self) -> bool {
        self.minus(o).is_empty()
    }

    fn iter(self) -> impl Iterator<Item = usize> {
        (0..WORDS).flat_map(move |w| {
            let mut word = self.0[w];
            std::iter::from_fn(move || {
                (word != 0).then(|| {
                    let t = word.trailing_zeros() as usize;
                    word &= word - 1;
                    w * 64 + t
                })
            })
        })
    }
}

/// One requirement per factor class, supersets of other requirements dropped.
fn requirements(w: &[Letter]) -> Vec<Bits> {
    let sam = SuffixAutomaton::new(w);
    let mut ends = vec![Bits::default(); sam.state_count()];
    for s in 1..sam.state_count() {
        if let Some(e) = sam.end[s] {
            ends[s] = Bits::single(e);
        }
    }
    let mut reqs = Vec::new();
    for s in sam.by_decreasing_len() {
        let parent = sam.link[s];
        ends[parent] = ends[parent].or(ends[s]);
        let mut window = ends[s];
        let mut shifted = ends[s];
        for _ in 1..sam.min_len(s) {
            shifted = shifted.shr1();
            window = window.or(shifted);
        }
        reqs.push(window);
    }
    reqs.sort_by_key(|b| (b.count(), *b));
    reqs.dedup();
    let mut kept: Vec<Bits> = Vec::new();
    for r in reqs {
        if !kept.iter().any(|k| k.is_subset(r)) {
            kept.push(r);
        }
    }
    kept
}

/// Disjoint requirements found greedily; each needs its own position.
fn packing_bound(reqs: &[Bits], allowed: Bits) -> usize {
    let mut used = Bits::default();
    let mut count = 0;
    for r in reqs {
        let r = r.and(allowed);
        if r.and(used).is_empty() {
            used = used.or(r);
            count += 1;
        }
    }
    count
}

/// Whether `budget` positions from `allowed` hit every requirement.
fn feasible(reqs: &[Bits], budget: usize, allowed: Bits) -> bool {
    if reqs.is_empty() {
        return true;
    }
    if budget == 0 {
        return false;
    }
    let Some(pick) = reqs.iter().map(|r| r.and(allowed)).min_by_key(|r| r.count()) else {
        return true;
    };
    if pick.is_empty() || packing_bound(reqs, allowed) > budget {
        return false;
    }
    let mut allowed = allowed;
    for p in pick.iter() {
        let rest: Vec<Bits> = reqs.iter().copied().filter(|r| !r.contains(p)).collect();
        allowed = allowed.minus(Bits::single(p));
        if feasible(&rest, budget - 1, allowed) {
            return true;
        }
    }
    false
}

/// A smallest attractor of `w`, lexicographically least among those of
/// minimum size, for `|w| ≤` [`DEFAULT_SEARCH_CAP`].
pub fn smallest_attractor(w: &[Letter]) -> Result<ProfileEntry> {
    smallest_attractor_with_cap(w, DEFAULT_SEARCH_CAP)
}

/// [`smallest_attractor`] with an explicit length cap (at most [`SEARCH_LIMIT`]).
pub fn smallest_attractor_with_cap(w: &[Letter], cap: usize) -> Result<ProfileEntry> {
    let cap = cap.min(SEARCH_LIMIT);
    if w.is_empty() {
        return Err(Error::ZeroLength);
    }
    if w.len() > cap {
        return Err(Error::SearchCapExceeded { len: w.len(), cap });
    }
    let reqs = requirements(w);
    let all = Bits::below(w.len());
    let mut size = packing_bound(&reqs, all).max(1);
    while !feasible(&reqs, size, all) {
        size += 1;
    }

    let mut chosen = Vec::with_capacity(size);
    let mut rest = reqs;
    let mut allowed = all;
    for slot in 0..size {
        let p = allowed
            .iter()
            .find(|&p| {
                let left: Vec<Bits> = rest.iter().copied().filter(|r| !r.contains(p)).collect();
                feasible(&left, size - slot - 1, allowed.minus(Bits::below(p + 1)))
            })
            .ok_or_else(|| Error::Inconsistent("lost the witness of a feasible size".into()))?;
        rest.retain(|r| !r.contains(p));
        allowed = allowed.minus(Bits::below(p + 1));
        chosen.push(p as u64 + 1);
    }
    let witness = Attractor::new(chosen, w.len() as u64)?;
    Ok(ProfileEntry {
        m: w.len() as u64,
        size,
        witness,
    })
}
