//! The profile function `m ↦ s(m)`, size of a smallest attractor of `u[0, m)`.

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use super::cover::smallest_attractor_with_cap;
use super::{check_conditions, p_with, q_with, Attractor};
use crate::lyndon::anti_lyndon_root;
use crate::words::{prefix, Lengths};
use crate::{Error, ParamWord, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileEntry {
    pub m: u64,
    pub size: usize,
    pub witness: Attractor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    /// Entries for `m = 1, 2, …` in order.
    pub entries: Vec<ProfileEntry>,
    /// First `m` left out because it exceeds the search cap.
    pub truncated_at: Option<u64>,
}

impl Profile {
    pub fn sizes(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.size).collect()
    }
}

/// `s(m)` for `m = 1..=m_max`, stopping before the first `m` above `cap`.
pub fn profile(c: &ParamWord, m_max: u64, cap: usize) -> Result<Profile> {
    let cap = cap.min(super::SEARCH_LIMIT);
    let last = m_max.min(cap as u64);
    let truncated_at = (m_max > last).then_some(last + 1);
    let u = prefix(c, last as usize);
    let run = |m: u64| smallest_attractor_with_cap(&u[..m as usize], cap);
    #[cfg(feature = "parallel")]
    let entries = {
        use rayon::prelude::*;
        (1..=last).into_par_iter().map(run).collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let entries = (1..=last).map(run).collect::<Result<Vec<_>>>()?;
    Ok(Profile {
        entries,
        truncated_at,
    })
}

/// Conjectured `s(m)`: `i + 1` on `[U_i, U_{i+1})` for `i ≤ k-2`, then `k`.
pub fn conjectured_size(c: &ParamWord, m: u64) -> Result<usize> {
    if m == 0 {
        return Err(Error::ZeroLength);
    }
    let k = c.k();
    let lengths = Lengths::new(c, k);
    let m = BigUint::from(m);
    Ok(match lengths.index_of(&m) {
        Some(i) => (i + 1).min(k),
        None => k,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub m: u64,
    pub observed: usize,
    pub predicted: usize,
}

impl ConjectureRow {
    pub fn agrees(&self) -> bool {
        self.observed == self.predicted
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub c: ParamWord,
    pub rows: Vec<ConjectureRow>,
    pub agree: bool,
    pub first_disagreement: Option<u64>,
    pub truncated: Option<u64>,
}

/// Compares the exact profile with [`conjectured_size`]. A disagreement is
/// reported in the result, not as an error.
pub fn conjecture_test(c: &ParamWord, m_max: u64) -> Result<ConjectureReport> {
    require_conditions(c)?;
    let prof = profile(c, m_max, super::DEFAULT_SEARCH_CAP)?;
    let rows = prof
        .entries
        .iter()
        .map(|e| {
            Ok(ConjectureRow {
                m: e.m,
                observed: e.size,
                predicted: conjectured_size(c, e.m)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_disagreement = rows.iter().find(|r| !r.agrees()).map(|r| r.m);
    Ok(ConjectureReport {
        c: c.clone(),
        agree: first_disagreement.is_none(),
        rows,
        first_disagreement,
        truncated: prof.truncated_at,
    })
}

fn require_conditions(c: &ParamWord) -> Result<()> {
    if check_conditions(c)?.all_hold() {
        Ok(())
    } else {
        Err(Error::OutsideTheoremScope(c.to_string()))
    }
}

/// Whether `c = w^ℓ 1` with `w` the longest anti-Lyndon prefix of the head.
/// When it holds, `P_n - 1 ≤ Q_{n-1}` is checked for small `n` as well and a
/// failure is reported as an inconsistency.
pub fn minimal_family_check(c: &ParamWord) -> Result<bool> {
    require_conditions(c)?;
    let head = c.head();
    let w = anti_lyndon_root(c);
    let is_power = head.len().is_multiple_of(w.len()) && head.chunks(w.len()).all(|ch| ch == w.as_slice());
    let member = c.digit(c.k() - 1) == 1 && is_power;
    if member {
        let n_max = 2 * (c.k() + w.len()) + 2;
        let lengths = Lengths::new(c, n_max);
        for n in 1..=n_max {
            if p_with(c, &lengths, n) - 1u32 > q_with(c, &lengths, n - 1) {
                return Err(Error::Inconsistent(format!(
                    "c = {c} has the form w^l 1 but P_{n} - 1 > Q_{}",
                    n - 1
                )));
            }
        }
    }
    Ok(member)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(s: &str) -> ParamWord {
        s.parse().unwrap()
    }

    #[test]
    fn period_doubling_profile() {
        let p = profile(&c("12"), 30, 200).unwrap();
        assert_eq!(p.truncated_at, None);
        assert_eq!(p.sizes()[0], 1);
        assert!(p.sizes()[1..].iter().all(|&s| s == 2));
    }

    #[test]
    fn truncation_marker() {
        let p = profile(&c("11"), 30, 20).unwrap();
        assert_eq!(p.entries.len(), 20);
        assert_eq!(p.truncated_at, Some(21));
    }

    #[test]
    fn conjectured_sizes() {
        // U = 1, 2, 4, 7 for 111
        let got: Vec<usize> = (1..=8).map(|m| conjectured_size(&c("111"), m).unwrap()).collect();
        assert_eq!(got, [1, 2, 2, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn conjecture_reports() {
        assert!(conjecture_test(&c("12"), 30).unwrap().agree);
        assert!(conjecture_test(&c("211"), 30).unwrap().agree);
        assert!(matches!(
            conjecture_test(&c("102"), 10),
            Err(Error::OutsideTheoremScope(_))
        ));
    }

    #[test]
    fn minimal_family() {
        assert!(minimal_family_check(&c("211")).unwrap());
        assert!(!minimal_family_check(&c("12")).unwrap());
        assert!(minimal_family_check(&c("1111")).unwrap());
        assert!(minimal_family_check(&c("21211")).unwrap());
        assert!(!minimal_family_check(&c("2121")).unwrap());
        assert!(minimal_family_check(&c("102")).is_err());
    }
}
