use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::lyndon::{anti_lyndon_root, anti_lyndon_stream, is_max_conjugate};
use crate::numeration::{dstar, is_greedy};
use crate::words::{prefix, Lengths};
use crate::{Error, ParamWord, Result};

/// One step of the recursion describing `q_n = u_n^{ℓ_0} u_{n-1}^{ℓ_1} ⋯`:
/// `ell` is the exponent `ℓ_n`, and `i < j` are the two letters that follow
/// `q_n` in `u` and in `u_n^ω`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IjlRow {
    pub n: usize,
    pub ell: u32,
    pub i: usize,
    pub j: usize,
}

/// Rows `0..=n_max` of the `(ℓ_n, i_n, j_n)` recursion.
pub fn ijl_sequences(c: &ParamWord, n_max: usize) -> Vec<IjlRow> {
    let k = c.k();
    let mut rows = Vec::with_capacity(n_max + 1);
    let mut row = IjlRow {
        n: 0,
        ell: c.digit(0),
        i: 0,
        j: 1,
    };
    rows.push(row);
    for n in 1..=n_max {
        let (ci, cj) = (c.digit(row.i), c.digit(row.j));
        let back = |ell| IjlRow { n, ell, i: 0, j: row.i + 1 };
        row = if row.j + 1 == k {
            back(ci)
        } else {
            match ci.cmp(&cj) {
                Ordering::Greater => IjlRow { n, ell: cj, i: 0, j: row.j + 1 },
                Ordering::Equal => IjlRow { n, ell: cj, i: row.i + 1, j: row.j + 1 },
                Ordering::Less => back(ci),
            }
        };
        rows.push(row);
    }
    rows
}

/// The four conditions under which every prefix of `u` has an attractor
/// made of lengths `U_n`. They are equivalent; [`check_conditions`] evaluates
/// each one on its own and fails when they disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    /// `u[0, U_{n+1} - 1)` is a fractional power of `u_n`.
    pub frac_power_ok: bool,
    /// `d*[0, n] ≤ a[0, n]`.
    pub dstar_le_a: bool,
    /// `c_0 ⋯ c_{k-2}(c_{k-1} - 1)` is maximal among its conjugates.
    pub max_conjugate: bool,
    /// The numeration system is greedy.
    pub greedy: bool,
    /// Conditions 1 and 2 were checked for `0 ≤ n ≤ checked_bound`.
    pub checked_bound: usize,
    /// Largest `n` for which condition 1 was checked on letters; beyond it
    /// the lengths `Q_n` were compared instead.
    pub letters_checked_to: Option<usize>,
}

impl ConditionReport {
    pub fn all_hold(&self) -> bool {
        self.frac_power_ok && self.dstar_le_a && self.max_conjugate && self.greedy
    }
}

/// Longest prefix materialized when checking fractional powers letter by letter.
const LETTER_CHECK_LIMIT: u64 = 1 << 22;

pub fn check_conditions(c: &ParamWord) -> Result<ConditionReport> {
    let k = c.k();
    let root = anti_lyndon_root(c);
    let bound = k - 1 + root.len();
    let lengths = Lengths::new(c, bound + 1);

    let mut frac_power_ok = true;
    let mut letters_checked_to = None;
    let direct_len = (0..=bound)
        .take_while(|&n| lengths.get_u64(n + 1).is_some_and(|u| u <= LETTER_CHECK_LIMIT))
        .last();
    if let Some(last) = direct_len {
        let u = prefix(c, lengths.get_u64(last + 1).unwrap() as usize);
        for n in 0..=last {
            let block = lengths.get_u64(n).unwrap() as usize;
            let end = lengths.get_u64(n + 1).unwrap() as usize - 1;
            if (block..end).any(|i| u[i] != u[i % block]) {
                frac_power_ok = false;
                break;
            }
        }
        letters_checked_to = Some(last);
    }
    let a = anti_lyndon_stream(c, bound + 1);
    let resume = letters_checked_to.map_or(0, |l| l + 1);
    if frac_power_ok {
        for n in resume..=bound {
            let q: num_bigint::BigUint = (0..=n).map(|i| lengths.get(n - i) * a[i]).sum();
            if lengths.get(n + 1) - 1u32 > q {
                frac_power_ok = false;
                break;
            }
        }
    }

    let d = dstar(c, bound + 1);
    let dstar_le_a = (0..=bound).all(|n| d[..=n] <= a[..=n]);
    let max_conjugate = is_max_conjugate(&c.dstar_period())?;
    let greedy = is_greedy(c);

    let report = ConditionReport {
        frac_power_ok,
        dstar_le_a,
        max_conjugate,
        greedy,
        checked_bound: bound,
        letters_checked_to,
    };
    let values = [frac_power_ok, dstar_le_a, max_conjugate, greedy];
    if values.iter().any(|&v| v != values[0]) {
        return Err(Error::Inconsistent(format!(
            "conditions disagree for c = {c}: {report:?}"
        )));
    }
    Ok(report)
}
