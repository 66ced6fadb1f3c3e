use std::ops::RangeInclusive;

use clap::{Args, ValueEnum};
use morphic_sa::attractors::{check_conditions, conjecture_test, minimal_family_check};
use morphic_sa::words::MAX_ALPHABET;
use morphic_sa::ParamWord;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::output::Format;
use crate::{Failure, OutputArgs, Outcome};

/// Sweeps refuse families larger than this.
const MAX_WORDS: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Filter {
    Greedy,
    MinimalFamily,
}

#[derive(Args, Debug)]
pub struct SweepArgs {
    /// Range of k, as `a..b` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range)]
    k: RangeInclusive<usize>,
    #[arg(long)]
    digit_max: u32,
    /// Run the conjecture test up to this prefix length (0 skips it).
    #[arg(long, default_value_t = 0)]
    mmax: u64,
    /// Keep only words passing these filters.
    #[arg(long, value_enum)]
    filter: Vec<Filter>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    output: OutputArgs,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|e| format!("bad lower bound {lo:?}: {e}"))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("bad upper bound {hi:?}: {e}"))?;
    if lo < 2 || hi < lo || hi > MAX_ALPHABET {
        return Err(format!("need 2 <= a <= b <= {MAX_ALPHABET}, got {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub schema: u32,
    pub c: String,
    pub k: usize,
    pub frac_power_ok: bool,
    pub dstar_le_a: bool,
    pub max_conjugate: bool,
    pub greedy: bool,
    /// Only decided when the conditions hold.
    pub minimal_family: Option<bool>,
    /// "agree", "disagree", or empty when not run.
    pub conjecture: String,
    pub first_disagreement: Option<u64>,
}

fn family(k: RangeInclusive<usize>, digit_max: u32) -> Result<Vec<ParamWord>, Failure> {
    let base = u64::from(digit_max) + 1;
    let mut total = 0u64;
    for len in k.clone() {
        total = base
            .checked_pow(len as u32)
            .and_then(|n| n.checked_add(total))
            .filter(|&n| n <= MAX_WORDS)
            .ok_or_else(|| Failure::Domain(format!("family exceeds {MAX_WORDS} parameter words")))?;
    }
    let mut out = Vec::new();
    for len in k {
        for code in 0..base.pow(len as u32) {
            let digits: Vec<u32> = (0..len as u32)
                .rev()
                .map(|i| (code / base.pow(i) % base) as u32)
                .collect();
            if digits[0] > 0 && digits[len - 1] > 0 {
                out.push(ParamWord::new(digits)?);
            }
        }
    }
    Ok(out)
}

fn row(c: &ParamWord, mmax: u64) -> Result<SweepRow, Failure> {
    let r = check_conditions(c)?;
    let holds = r.all_hold();
    let minimal_family = if holds { Some(minimal_family_check(c)?) } else { None };
    let (conjecture, first_disagreement) = if holds && mmax > 0 {
        let report = conjecture_test(c, mmax)?;
        let verdict = if report.agree { "agree" } else { "disagree" };
        (verdict.to_string(), report.first_disagreement)
    } else {
        (String::new(), None)
    };
    Ok(SweepRow {
        schema: 1,
        c: c.to_string(),
        k: c.k(),
        frac_power_ok: r.frac_power_ok,
        dstar_le_a: r.dstar_le_a,
        max_conjugate: r.max_conjugate,
        greedy: r.greedy,
        minimal_family,
        conjecture,
        first_disagreement,
    })
}

fn keep(row: &SweepRow, filters: &[Filter]) -> bool {
    filters.iter().all(|f| match f {
        Filter::Greedy => row.greedy,
        Filter::MinimalFamily => row.minimal_family == Some(true),
    })
}

pub fn run(args: &SweepArgs) -> Outcome {
    let words = family(args.k.clone(), args.digit_max)?;
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(jobs) = args.jobs {
        pool = pool.num_threads(jobs.max(1));
    }
    let pool = pool
        .build()
        .map_err(|e| Failure::Domain(format!("cannot start {} workers: {e}", args.jobs.unwrap_or(0))))?;
    let rows: Vec<SweepRow> = pool.install(|| {
        words
            .par_iter()
            .map(|c| row(c, args.mmax))
            .collect::<Result<Vec<_>, _>>()
    })?;
    // par_iter keeps input order, which is already (k, digits)
    let rows: Vec<SweepRow> = rows.into_iter().filter(|r| keep(r, &args.filter)).collect();

    let mut output = args.output.clone();
    if output.format == Format::Text && !output.json {
        output.format = Format::Csv;
    }
    let header = [
        "schema",
        "c",
        "k",
        "frac_power_ok",
        "dstar_le_a",
        "max_conjugate",
        "greedy",
        "minimal_family",
        "conjecture",
        "first_disagreement",
    ];
    let opt = |v: Option<String>| v.unwrap_or_default();
    let csv_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.schema.to_string(),
                r.c.clone(),
                r.k.to_string(),
                r.frac_power_ok.to_string(),
                r.dstar_le_a.to_string(),
                r.max_conjugate.to_string(),
                r.greedy.to_string(),
                opt(r.minimal_family.map(|b| b.to_string())),
                r.conjecture.clone(),
                opt(r.first_disagreement.map(|m| m.to_string())),
            ]
        })
        .collect();
    output.emitter().emit_table(&rows, |_| Ok(()), &header, &csv_rows)
}
