//! The Dumont–Thomas numeration system `S_c` attached to `μ_c`.
//!
//! Representations are digit words, most significant digit first, accepted
//! by the automaton whose transitions from state `i` read the positions of
//! `μ_c(i)`. Valuation is positional with respect to `(U_n)`.

use std::fmt;
use std::ops::Deref;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::lyndon::{is_max_conjugate, primitive_root_len};
use crate::words::{format_digits, lengths_covering, Lengths, Letter, Word};
use crate::{Error, ParamWord, Result};

/// A digit word of `S_c`, most significant digit first. `ε` represents 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Representation(pub Vec<u32>);

impl Deref for Representation {
    type Target = [u32];

    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_digits(&self.0))
    }
}

/// The automaton `A_{μ_c}`: states `0..k`, all final, initial state 0.
///
/// From state `i < k-1` digits `0..c_i` lead to 0 and digit `c_i` to `i+1`;
/// from `k-1` digits `0..c_{k-1}` lead to 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumerationAutomaton {
    c: ParamWord,
}

impl NumerationAutomaton {
    pub fn new(c: &ParamWord) -> Self {
        Self { c: c.clone() }
    }

    pub fn k(&self) -> usize {
        self.c.k()
    }

    /// Number of outgoing digits from `state`, i.e. `|μ_c(state)|`.
    pub fn out_degree(&self, state: usize) -> u32 {
        self.c.image_len(state as Letter) as u32
    }

    pub fn transition(&self, state: usize, digit: u32) -> Option<usize> {
        let ci = self.c.digit(state);
        if digit < ci {
            Some(0)
        } else if digit == ci && state + 1 < self.k() {
            Some(state + 1)
        } else {
            None
        }
    }

    /// Every transition as `(from, digit, to)`, sorted by state then digit.
    pub fn transitions(&self) -> Vec<(usize, u32, usize)> {
        (0..self.k())
            .flat_map(|s| (0..self.out_degree(s)).map(move |d| (s, d)))
            .map(|(s, d)| (s, d, self.transition(s, d).unwrap()))
            .collect()
    }

    /// Runs `digits` from `state`; `None` when a transition is missing.
    pub fn run_from(&self, state: usize, digits: &[u32]) -> Option<usize> {
        digits
            .iter()
            .try_fold(state, |s, &d| self.transition(s, d))
    }

    /// Graphviz rendering, one line per transition.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("digraph \"A_mu_{}\" {{\n", self.c));
        out.push_str("  rankdir=LR;\n");
        out.push_str("  init [shape=point];\n");
        for s in 0..self.k() {
            out.push_str(&format!("  {s} [shape=doublecircle, label=\"{s}\"];\n"));
        }
        out.push_str("  init -> 0;\n");
        for (from, d, to) in self.transitions() {
            out.push_str(&format!("  {from} -> {to} [label=\"{d}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

pub fn build_automaton(c: &ParamWord) -> NumerationAutomaton {
    NumerationAutomaton::new(c)
}

/// Lengths and maximal path valuations for digit words up to a fixed length.
#[derive(Clone, Debug)]
pub struct NumerationSystem {
    automaton: NumerationAutomaton,
    lengths: Lengths,
    // max_value[t][s]: largest valuation of a length-t path from state s
    max_value: Vec<Vec<BigUint>>,
}

impl NumerationSystem {
    /// Prepared for representations of length up to `depth + 1`.
    pub fn with_depth(c: &ParamWord, depth: usize) -> Self {
        let automaton = NumerationAutomaton::new(c);
        let lengths = Lengths::new(c, depth + 1);
        let k = c.k();
        let mut max_value = vec![vec![BigUint::zero(); k]];
        for t in 1..=depth {
            let prev = &max_value[t - 1];
            let weight = lengths.get(t - 1);
            let row = (0..k)
                .map(|s| {
                    let ci = c.digit(s);
                    let to_zero = (ci > 0).then(|| weight * (ci - 1) + &prev[0]);
                    let to_next = (s + 1 < k).then(|| weight * ci + &prev[s + 1]);
                    to_zero.into_iter().chain(to_next).max().unwrap()
                })
                .collect();
            max_value.push(row);
        }
        Self {
            automaton,
            lengths,
            max_value,
        }
    }

    /// A system able to represent `n`.
    pub fn covering(c: &ParamWord, n: &BigUint) -> Self {
        let (idx, _) = lengths_covering(c, n);
        Self::with_depth(c, idx.max(1))
    }

    pub fn param(&self) -> &ParamWord {
        &self.automaton.c
    }

    pub fn automaton(&self) -> &NumerationAutomaton {
        &self.automaton
    }

    pub fn lengths(&self) -> &Lengths {
        &self.lengths
    }

    fn depth(&self) -> usize {
        self.max_value.len() - 1
    }

    /// Largest valuation of a length-`t` path from `state`.
    pub fn max_value(&self, state: usize, t: usize) -> &BigUint {
        &self.max_value[t][state]
    }

    /// `rep_{S_c}(n)`, by a walk through the automaton that picks at each
    /// step the largest digit whose block of values still contains `n`.
    pub fn rep(&self, n: &BigUint) -> Representation {
        if n.is_zero() {
            return Representation::default();
        }
        let top = match self.lengths.index_of(n) {
            Some(top) if top <= self.depth() => top,
            _ => return Self::covering(self.param(), n).rep(n),
        };
        let c = self.param();
        let mut digits = Vec::with_capacity(top + 1);
        let mut state = 0;
        let mut rest = n.clone();
        for t in (0..=top).rev() {
            let weight = self.lengths.get(t);
            let ci = c.digit(state);
            let fits = |d: u32, to: usize, rest: &BigUint| {
                let used = weight * d;
                used <= *rest && rest - &used <= self.max_value[t][to]
            };
            let digit = if state + 1 < c.k() && fits(ci, state + 1, &rest) {
                ci
            } else {
                let d = (&rest / weight).to_u32().unwrap_or(u32::MAX).min(ci - 1);
                debug_assert!(ci > 0 && fits(d, 0, &rest));
                d
            };
            rest -= weight * digit;
            state = self.automaton.transition(state, digit).unwrap();
            digits.push(digit);
        }
        debug_assert!(rest.is_zero());
        Representation(digits)
    }

    /// `Σ ℓ_i U_{N-i}` without checking membership in the language.
    pub fn val_unchecked(&self, digits: &[u32]) -> BigUint {
        val_with(self.param(), digits)
    }

    /// `val_{S_c}`; rejects words outside the numeration language.
    pub fn val(&self, digits: &[u32]) -> Result<BigUint> {
        check_language(&self.automaton, digits)?;
        Ok(self.val_unchecked(digits))
    }

    /// The letter `u_n`, read off the state reached by `rep(n)`.
    pub fn automatic_letter(&self, n: &BigUint) -> Letter {
        let r = self.rep(n);
        self.automaton.run_from(0, &r).unwrap() as Letter
    }
}

fn val_with(c: &ParamWord, digits: &[u32]) -> BigUint {
    if digits.is_empty() {
        return BigUint::zero();
    }
    let lengths = Lengths::new(c, digits.len() - 1);
    digits
        .iter()
        .rev()
        .enumerate()
        .map(|(t, &d)| lengths.get(t) * d)
        .sum()
}

fn check_language(automaton: &NumerationAutomaton, digits: &[u32]) -> Result<()> {
    let fail = |reason: String| Error::NotInLanguage {
        digits: format_digits(digits),
        reason,
    };
    if digits.first() == Some(&0) {
        return Err(fail("leading digit 0".into()));
    }
    let mut state = 0;
    for (i, &d) in digits.iter().enumerate() {
        state = automaton
            .transition(state, d)
            .ok_or_else(|| fail(format!("no transition on digit {d} from state {state} at index {i}")))?;
    }
    Ok(())
}

/// The first `count` words of the numeration language in genealogical order.
pub fn enumerate_language(c: &ParamWord, count: usize) -> Vec<Representation> {
    let automaton = NumerationAutomaton::new(c);
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(Representation::default());
    let mut len = 1;
    while out.len() < count {
        let mut buf = Vec::with_capacity(len);
        walk(&automaton, 0, len, &mut buf, &mut out, count);
        len += 1;
    }
    out
}

// depth-first, digits ascending: lexicographic order within one length
fn walk(
    automaton: &NumerationAutomaton,
    state: usize,
    len: usize,
    buf: &mut Vec<u32>,
    out: &mut Vec<Representation>,
    count: usize,
) {
    if out.len() >= count {
        return;
    }
    if buf.len() == len {
        out.push(Representation(buf.clone()));
        return;
    }
    let first = u32::from(buf.is_empty());
    for d in first..automaton.out_degree(state) {
        let to = automaton.transition(state, d).unwrap();
        buf.push(d);
        walk(automaton, to, len, buf, out, count);
        buf.pop();
        if out.len() >= count {
            return;
        }
    }
}

/// `rep_{S_c}(n)`.
pub fn rep(c: &ParamWord, n: &BigUint) -> Representation {
    NumerationSystem::covering(c, n).rep(n)
}

/// `val_{S_c}(r)`.
pub fn val(c: &ParamWord, digits: &[u32]) -> Result<BigUint> {
    check_language(&NumerationAutomaton::new(c), digits)?;
    Ok(val_with(c, digits))
}

/// Positional valuation of an arbitrary digit word.
pub fn val_unchecked(c: &ParamWord, digits: &[u32]) -> BigUint {
    val_with(c, digits)
}

/// The Euclidean (largest term first) representation of `n` over `(U_n)`.
pub fn greedy_rep(c: &ParamWord, n: &BigUint) -> Vec<u32> {
    if n.is_zero() {
        return Vec::new();
    }
    let (top, lengths) = lengths_covering(c, n);
    let mut rest = n.clone();
    let mut digits = Vec::with_capacity(top + 1);
    for t in (0..=top).rev() {
        let d = &rest / lengths.get(t);
        rest -= &d * lengths.get(t);
        digits.push(d.to_u32().expect("greedy digit exceeds u32"));
    }
    digits
}

/// The first `length` digits of `d* = (c_0 ⋯ c_{k-2}(c_{k-1}-1))^ω`.
pub fn dstar(c: &ParamWord, length: usize) -> Vec<u32> {
    c.dstar_period().into_iter().cycle().take(length).collect()
}

/// Whether `S_c` is greedy.
///
/// Greediness holds iff every path of the automaton, from any state, is at
/// most the prefix of `d*` of the same length. The lexicographically largest
/// path from a state takes the largest digit at each step, and it is periodic
/// of period `k`, so comparing `k` digits per state suffices.
pub fn is_greedy(c: &ParamWord) -> bool {
    let automaton = NumerationAutomaton::new(c);
    let k = c.k();
    let ceiling = dstar(c, k);
    (0..k).all(|start| {
        let mut state = start;
        let mut path = Vec::with_capacity(k);
        for _ in 0..k {
            let d = automaton.out_degree(state) - 1;
            path.push(d);
            state = automaton.transition(state, d).unwrap();
        }
        path <= ceiling
    })
}

/// The reduction of a greedy `c` to the primitive parameter `c'`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ParryReduction {
    /// `c'`, of length `j`; may have a single digit.
    pub cprime: Vec<u32>,
    /// `ℓ` with `c_0 ⋯ c_{k-2}(c_{k-1}-1) = v^ℓ`.
    pub power: usize,
    /// `v`, anti-Lyndon.
    pub root: Vec<u32>,
    /// The simple Parry number with `d_β(1) = c' 0^ω`.
    pub beta: f64,
    /// Half-width of the final bisection bracket around `beta`.
    pub beta_error: f64,
}

impl ParryReduction {
    /// `j = |c'|`.
    pub fn period(&self) -> usize {
        self.cprime.len()
    }

    /// `σ : i ↦ i mod j`, letterwise.
    pub fn project(&self, w: &[Letter]) -> Word {
        let j = self.period();
        w.iter().map(|&a| (a as usize % j) as Letter).collect::<Vec<_>>().into()
    }

    /// `c'` as a parameter word, when it has at least two digits.
    pub fn cprime_param(&self) -> Option<ParamWord> {
        ParamWord::new(self.cprime.clone()).ok()
    }
}

/// Reduces a greedy `c` to its primitive parameter and locates `β`.
pub fn reduce_parry(c: &ParamWord) -> Result<ParryReduction> {
    let period = c.dstar_period();
    if !is_max_conjugate(&period)? {
        return Err(Error::NotGreedy(c.to_string()));
    }
    let j = primitive_root_len(&period);
    let root = period[..j].to_vec();
    let mut cprime = root.clone();
    *cprime.last_mut().unwrap() += 1;
    if !parry_admissible(&cprime) {
        return Err(Error::Inconsistent(format!(
            "c' = {} fails Parry's admissibility condition",
            format_digits(&cprime)
        )));
    }
    let (beta, beta_error) = parry_number(&cprime);
    Ok(ParryReduction {
        power: c.k() / j,
        cprime,
        root,
        beta,
        beta_error,
    })
}

/// Every shift of `c' 0^ω` is strictly smaller than `c' 0^ω`.
fn parry_admissible(cprime: &[u32]) -> bool {
    let j = cprime.len();
    (1..j).all(|i| {
        let shifted = cprime[i..].iter().copied().chain(std::iter::repeat(0));
        for (a, b) in shifted.zip(cprime.iter().copied()) {
            if a != b {
                return a < b;
            }
        }
        // unreachable since c'_{j-1} ≥ 1; equality would not be admissible
        false
    })
}

/// Root `β > 1` of `Σ c'_i β^{-(i+1)} = 1`, bisected on `(1, 1 + Σ c'_i]`.
pub fn parry_number(cprime: &[u32]) -> (f64, f64) {
    let f = |x: f64| {
        let y = 1.0 / x;
        cprime.iter().rev().fold(0.0, |acc, &d| (acc + d as f64) * y) - 1.0
    };
    let mut lo = 1.0f64;
    let mut hi = 1.0 + cprime.iter().map(|&d| d as f64).sum::<f64>();
    for _ in 0..200 {
        if hi - lo <= 1e-12 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (0.5 * (lo + hi), 0.5 * (hi - lo))
}

/// `σ(w)` for the reduction of `c`.
pub fn sigma_project(c: &ParamWord, w: &[Letter]) -> Result<Word> {
    Ok(reduce_parry(c)?.project(w))
}

/// `u_n` computed through `rep(n)`.
pub fn automatic_letter(c: &ParamWord, n: &BigUint) -> Letter {
    NumerationSystem::covering(c, n).automatic_letter(n)
}

/// The prefix `u_N^{ℓ_0} ⋯ u_0^{ℓ_N}` encoded by a digit word.
pub fn decode_factorization(c: &ParamWord, digits: &[u32]) -> Word {
    let mut blocks: Vec<Word> = vec![Word::new(vec![0])];
    for _ in 1..digits.len() {
        let next = crate::words::apply_morphism(c, blocks.last().unwrap()).unwrap();
        blocks.push(next);
    }
    let mut out = Vec::new();
    for (i, &d) in digits.iter().enumerate() {
        let block = &blocks[digits.len() - 1 - i];
        for _ in 0..d {
            out.extend_from_slice(block);
        }
    }
    Word::new(out)
}

/// `rep(U_n) = 10^n` as a digit vector.
pub fn power_of_base(n: usize) -> Vec<u32> {
    let mut v = vec![0; n + 1];
    v[0] = 1;
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_digits;

    fn c(s: &str) -> ParamWord {
        s.parse().unwrap()
    }

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn d(s: &str) -> Vec<u32> {
        parse_digits(s).unwrap()
    }

    #[test]
    fn automaton_of_102() {
        let a = build_automaton(&c("102"));
        assert_eq!(
            a.transitions(),
            vec![(0, 0, 0), (0, 1, 1), (1, 0, 2), (2, 0, 0), (2, 1, 0)]
        );
        assert_eq!(a.transition(2, 2), None);
        let a = build_automaton(&c("11"));
        assert_eq!(a.transitions(), vec![(0, 0, 0), (0, 1, 1), (1, 0, 0)]);
    }

    #[test]
    fn language_prefix() {
        let words: Vec<String> = enumerate_language(&c("102"), 9)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(words, ["ε", "1", "10", "100", "101", "1000", "1001", "1010", "1011"]);
        let words: Vec<String> = enumerate_language(&c("11"), 4)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(words, ["ε", "1", "10", "100"]);
        assert_eq!(enumerate_language(&c("23"), 1), vec![Representation::default()]);
        assert!(enumerate_language(&c("23"), 0).is_empty());
    }

    #[test]
    fn representations_of_102() {
        let c = c("102");
        assert_eq!(rep(&c, &big(8)).0, d("1011"));
        assert_eq!(rep(&c, &big(14)).0, d("10110"));
        assert_eq!(rep(&c, &big(9)).0, d("10000"));
        assert_eq!(rep(&c, &big(0)).0, d(""));
    }

    #[test]
    fn valuations() {
        let c = c("102");
        assert_eq!(val(&c, &d("10110")).unwrap(), big(14));
        assert_eq!(val(&c, &[]).unwrap(), big(0));
        assert_eq!(val_unchecked(&c, &d("11000")), big(14));
        assert!(matches!(val(&c, &d("11000")), Err(Error::NotInLanguage { .. })));
        assert!(matches!(val(&c, &d("01")), Err(Error::NotInLanguage { .. })));
    }

    #[test]
    fn greedy_representations() {
        let c = c("102");
        assert_eq!(greedy_rep(&c, &big(14)), d("11000"));
        assert_eq!(greedy_rep(&c, &big(8)), d("1100"));
        assert_eq!(greedy_rep(&c, &big(0)), d(""));
    }

    #[test]
    fn periodization() {
        assert_eq!(dstar(&c("102"), 6), d("101101"));
        assert_eq!(dstar(&c("1011"), 8), d("10101010"));
        assert_eq!(dstar(&c("11"), 4), d("1010"));
    }

    #[test]
    fn greediness() {
        assert!(is_greedy(&c("1011")));
        assert!(!is_greedy(&c("102")));
        assert!(is_greedy(&c("12")));
        assert!(is_greedy(&c("211")));
    }

    #[test]
    fn fibonacci_reduction() {
        let r = reduce_parry(&c("1011")).unwrap();
        assert_eq!(r.cprime, d("11"));
        assert_eq!(r.root, d("10"));
        assert_eq!(r.power, 2);
        assert!((r.beta - 1.618_033_988_749_895).abs() < 1e-9);
        assert!(r.beta_error <= 1e-12);

        let r = reduce_parry(&c("11")).unwrap();
        assert_eq!((r.cprime.as_slice(), r.power), (&[1, 1][..], 1));

        // 11 = 1^2: v = 1, c' = 2, β = 2
        let r = reduce_parry(&c("12")).unwrap();
        assert_eq!((r.cprime.as_slice(), r.root.as_slice(), r.power), (&[2][..], &[1][..], 2));
        assert!((r.beta - 2.0).abs() < 1e-9);

        assert_eq!(reduce_parry(&c("102")), Err(Error::NotGreedy("102".into())));
    }

    #[test]
    fn projection() {
        let got = sigma_project(&c("1011"), &"0120301001201".parse::<Word>().unwrap()).unwrap();
        assert_eq!(got.to_string(), "0100101001001");
        let r = reduce_parry(&c("12")).unwrap();
        assert_eq!(r.project(&[0, 1, 0, 0]).to_string(), "0000");
        let r = reduce_parry(&c("11")).unwrap();
        assert_eq!(r.project(&[0, 1, 0, 0]).to_string(), "0100");
    }

    #[test]
    fn automatic_letters() {
        let c = c("102");
        assert_eq!(automatic_letter(&c, &big(2)), 2);
        assert_eq!(automatic_letter(&c, &big(0)), 0);
        assert_eq!(automatic_letter(&c, &big(5)), 0);
    }

    #[test]
    fn dot_export() {
        let dot = build_automaton(&c("102")).to_dot();
        let edges: Vec<&str> = dot.lines().filter(|l| l.contains("[label=")).collect();
        assert_eq!(
            edges,
            [
                "  0 -> 0 [label=\"0\"];",
                "  0 -> 1 [label=\"1\"];",
                "  1 -> 2 [label=\"0\"];",
                "  2 -> 0 [label=\"0\"];",
                "  2 -> 0 [label=\"1\"];",
            ]
        );
        assert_eq!(dot, build_automaton(&c("102")).to_dot());
    }

    #[test]
    fn large_digits() {
        let c = c("12.0.3");
        let sys = NumerationSystem::with_depth(&c, 6);
        for n in 0..500u64 {
            let r = sys.rep(&big(n));
            assert_eq!(sys.val(&r).unwrap(), big(n));
        }
    }

    #[test]
    fn max_value_matches_image_lengths() {
        // largest path value from s over t digits is |μ^t(s)| - 1
        let c = c("2103");
        let sys = NumerationSystem::with_depth(&c, 6);
        for s in 0..c.k() {
            let mut w = Word::new(vec![s as Letter]);
            for t in 0..=6 {
                assert_eq!(sys.max_value(s, t), &big(w.len() as u64 - 1), "s={s} t={t}");
                w = crate::words::apply_morphism(&c, &w).unwrap();
            }
        }
    }
}
