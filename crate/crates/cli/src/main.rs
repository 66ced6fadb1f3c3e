//! `morphic-sa`: words, numeration and string attractors of the fixed points
//! of `μ_c: i ↦ 0^{c_i}(i+1), k-1 ↦ 0^{c_{k-1}}`.
//!
//! Exit codes: 0 on success, 1 on usage errors, 2 on domain errors.

mod output;
mod sweep;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use morphic_sa::attractors::{
    attractor_for_prefix_with_origin, check_conditions, conjecture_test, minimal_family_check,
    profile, smallest_attractor_with_cap, Attractor, Construction, DEFAULT_SEARCH_CAP,
};
use morphic_sa::numeration::{build_automaton, greedy_rep, reduce_parry, NumerationSystem};
use morphic_sa::words::{format_digits, parse_digits, prefix, word_un, Lengths};
use morphic_sa::{Error, ParamWord};
use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use output::{Emitter, Format};
use sweep::SweepArgs;

/// Longest word the CLI will print.
const PRINT_LIMIT: u64 = 1 << 24;

#[derive(Parser, Debug)]
#[command(name = "morphic-sa", version, about = "Generic k-bonacci words, their numeration systems and string attractors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Shorthand for `--format json`.
    #[arg(long, conflicts_with = "format")]
    json: bool,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl OutputArgs {
    fn emitter(&self) -> Emitter {
        let format = if self.json { Format::Json } else { self.format };
        Emitter::new(format, self.out.clone())
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The words u_n and their lengths U_n, or a prefix of u.
    Words {
        c: String,
        /// Print u_0, ..., u_N.
        #[arg(long, default_value_t = 5, conflicts_with = "prefix")]
        upto: usize,
        /// Print the prefix of length M instead.
        #[arg(long)]
        prefix: Option<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// rep(n) in the Dumont-Thomas numeration system.
    Rep {
        c: String,
        n: BigUint,
        /// Also print the greedy representation over (U_n).
        #[arg(long)]
        greedy: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// val of a digit word ("ε" or "" for the empty word, dots for digits above 9).
    Val {
        c: String,
        digits: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The automaton A_μ reading representations.
    Automaton {
        c: String,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// An attractor of u[0, m), 1-based positions unless --zero-based.
    Attractor {
        c: String,
        m: u64,
        /// Exact smallest attractor instead of the Γ_n construction.
        #[arg(long)]
        minimal: bool,
        #[arg(long)]
        zero_based: bool,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sizes of smallest attractors of u[0, m) for m = 1..=mmax.
    Profile {
        c: String,
        mmax: u64,
        #[arg(long, default_value_t = DEFAULT_SEARCH_CAP)]
        cap: usize,
        #[arg(long)]
        zero_based: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The four equivalent conditions, Parry reduction and family membership.
    Check {
        c: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Compare the profile with the conjectured formula.
    Conjecture {
        c: String,
        mmax: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// One row per parameter word of a family.
    Sweep(SweepArgs),
}

#[derive(Debug)]
enum Failure {
    Domain(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn param(s: &str) -> Result<ParamWord, Failure> {
    Ok(s.parse::<ParamWord>()?)
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Words { c, upto, prefix, output } => words(&param(&c)?, upto, prefix, &output),
        Command::Rep { c, n, greedy, output } => rep(&param(&c)?, &n, greedy, &output),
        Command::Val { c, digits, output } => val(&param(&c)?, &digits, &output),
        Command::Automaton { c, dot } => {
            let a = build_automaton(&param(&c)?);
            if dot {
                print!("{}", a.to_dot());
            } else {
                for (from, digit, to) in a.transitions() {
                    println!("{from} --{digit}--> {to}");
                }
            }
            Ok(())
        }
        Command::Attractor { c, m, minimal, zero_based, cap, output } => {
            attractor(&param(&c)?, m, minimal, zero_based, cap, &output)
        }
        Command::Profile { c, mmax, cap, zero_based, output } => {
            profile_cmd(&param(&c)?, mmax, cap, zero_based, &output)
        }
        Command::Check { c, output } => check(&param(&c)?, &output),
        Command::Conjecture { c, mmax, output } => conjecture(&param(&c)?, mmax, &output),
        Command::Sweep(args) => sweep::run(&args),
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct WordRow {
    n: usize,
    word: String,
    length: BigUint,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct WordsReport {
    schema: u32,
    c: String,
    words: Vec<WordRow>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct PrefixReport {
    schema: u32,
    c: String,
    m: u64,
    prefix: String,
}

fn checked_len(len: &BigUint) -> Result<usize, Failure> {
    match u64::try_from(len) {
        Ok(l) if l <= PRINT_LIMIT => Ok(l as usize),
        _ => Err(Failure::Domain(format!(
            "a word of length {len} is too long to print (limit {PRINT_LIMIT})"
        ))),
    }
}

fn words(c: &ParamWord, upto: usize, m: Option<u64>, output: &OutputArgs) -> Outcome {
    let out = output.emitter();
    if let Some(m) = m {
        let len = checked_len(&BigUint::from(m))?;
        let report = PrefixReport {
            schema: 1,
            c: c.to_string(),
            m,
            prefix: prefix(c, len).to_string(),
        };
        return out.emit(&report, |w| writeln!(w, "{}", report.prefix));
    }
    let lengths = Lengths::new(c, upto);
    let mut rows = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        checked_len(lengths.get(n))?;
        rows.push(WordRow {
            n,
            word: word_un(c, n).to_string(),
            length: lengths.get(n).clone(),
        });
    }
    let report = WordsReport {
        schema: 1,
        c: c.to_string(),
        words: rows,
    };
    let csv_rows: Vec<Vec<String>> = report
        .words
        .iter()
        .map(|r| vec!["1".into(), r.n.to_string(), r.word.clone(), r.length.to_string()])
        .collect();
    out.emit_table(
        &report,
        |w| {
            for r in &report.words {
                writeln!(w, "{}\t{}\t{}", r.n, r.length, r.word)?;
            }
            Ok(())
        },
        &["schema", "n", "word", "length"],
        &csv_rows,
    )
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct RepReport {
    schema: u32,
    c: String,
    n: BigUint,
    rep: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    greedy: Option<String>,
}

fn rep(c: &ParamWord, n: &BigUint, greedy: bool, output: &OutputArgs) -> Outcome {
    let r = NumerationSystem::covering(c, n).rep(n);
    let report = RepReport {
        schema: 1,
        c: c.to_string(),
        n: n.clone(),
        rep: r.to_string(),
        greedy: greedy.then(|| format_digits(&greedy_rep(c, n))),
    };
    output.emitter().emit(
        &report,
        |w| match &report.greedy {
            Some(g) => writeln!(w, "{}\t{g}", report.rep),
            None => writeln!(w, "{}", report.rep),
        },
    )
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct ValReport {
    schema: u32,
    c: String,
    digits: String,
    value: BigUint,
}

fn val(c: &ParamWord, digits: &str, output: &OutputArgs) -> Outcome {
    let d = parse_digits(digits)?;
    let value = morphic_sa::numeration::val(c, &d)?;
    let report = ValReport {
        schema: 1,
        c: c.to_string(),
        digits: format_digits(&d),
        value,
    };
    output.emitter().emit(&report, |w| writeln!(w, "{}", report.value))
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct AttractorReport {
    schema: u32,
    c: String,
    m: u64,
    /// "gamma", "gamma_plus_length" or "minimal".
    method: String,
    n: Option<usize>,
    zero_based: bool,
    positions: Vec<u64>,
    size: usize,
}

fn shown(a: &Attractor, zero_based: bool) -> Vec<u64> {
    if zero_based {
        a.zero_based()
    } else {
        a.positions().to_vec()
    }
}

fn set_text(positions: &[u64]) -> String {
    let inner: Vec<String> = positions.iter().map(u64::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

fn attractor(c: &ParamWord, m: u64, minimal: bool, zero_based: bool, cap: usize, output: &OutputArgs) -> Outcome {
    let (gamma, method, n) = if minimal {
        if m > cap as u64 {
            return Err(Error::SearchCapExceeded { len: m as usize, cap }.into());
        }
        let entry = smallest_attractor_with_cap(&prefix(c, m as usize), cap)?;
        (entry.witness, "minimal", None)
    } else {
        match attractor_for_prefix_with_origin(c, m)? {
            (g, Construction::Gamma { n }) => (g, "gamma", Some(n)),
            (g, Construction::GammaPlusLength { n }) => (g, "gamma_plus_length", Some(n)),
        }
    };
    let positions = shown(&gamma, zero_based);
    let report = AttractorReport {
        schema: 1,
        c: c.to_string(),
        m,
        method: method.into(),
        n,
        zero_based,
        size: positions.len(),
        positions,
    };
    output.emitter().emit(&report, |w| writeln!(w, "{}", set_text(&report.positions)))
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct ProfileRow {
    m: u64,
    size: usize,
    witness: Vec<u64>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct ProfileReport {
    schema: u32,
    c: String,
    zero_based: bool,
    rows: Vec<ProfileRow>,
    truncated_at: Option<u64>,
}

fn profile_cmd(c: &ParamWord, mmax: u64, cap: usize, zero_based: bool, output: &OutputArgs) -> Outcome {
    let p = profile(c, mmax, cap)?;
    let report = ProfileReport {
        schema: 1,
        c: c.to_string(),
        zero_based,
        rows: p
            .entries
            .iter()
            .map(|e| ProfileRow {
                m: e.m,
                size: e.size,
                witness: shown(&e.witness, zero_based),
            })
            .collect(),
        truncated_at: p.truncated_at,
    };
    if let Some(t) = report.truncated_at {
        eprintln!("note: truncated at m = {t}, beyond the search cap {cap}");
    }
    let csv_rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| vec!["1".into(), r.m.to_string(), r.size.to_string(), set_text(&r.witness)])
        .collect();
    output.emitter().emit_table(
        &report,
        |w| {
            for r in &report.rows {
                writeln!(w, "{}\t{}\t{}", r.m, r.size, set_text(&r.witness))?;
            }
            if let Some(t) = report.truncated_at {
                writeln!(w, "truncated at m = {t}")?;
            }
            Ok(())
        },
        &["schema", "m", "size", "witness"],
        &csv_rows,
    )
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct Reduction {
    cprime: String,
    power: usize,
    root: String,
    beta: f64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct CheckReport {
    schema: u32,
    c: String,
    k: usize,
    frac_power_ok: bool,
    dstar_le_a: bool,
    max_conjugate: bool,
    greedy: bool,
    checked_bound: usize,
    reduction: Option<Reduction>,
    minimal_family: Option<bool>,
}

fn check(c: &ParamWord, output: &OutputArgs) -> Outcome {
    let r = check_conditions(c)?;
    let reduction = if r.greedy {
        let red = reduce_parry(c)?;
        Some(Reduction {
            cprime: format_digits(&red.cprime),
            power: red.power,
            root: format_digits(&red.root),
            beta: red.beta,
        })
    } else {
        None
    };
    let minimal_family = if r.all_hold() { Some(minimal_family_check(c)?) } else { None };
    let report = CheckReport {
        schema: 1,
        c: c.to_string(),
        k: c.k(),
        frac_power_ok: r.frac_power_ok,
        dstar_le_a: r.dstar_le_a,
        max_conjugate: r.max_conjugate,
        greedy: r.greedy,
        checked_bound: r.checked_bound,
        reduction,
        minimal_family,
    };
    output.emitter().emit(
        &report,
        |w| {
            writeln!(w, "fractional powers  {}", report.frac_power_ok)?;
            writeln!(w, "d* <= a            {}", report.dstar_le_a)?;
            writeln!(w, "max conjugate      {}", report.max_conjugate)?;
            writeln!(w, "greedy             {}", report.greedy)?;
            writeln!(w, "checked n <=       {}", report.checked_bound)?;
            if let Some(red) = &report.reduction {
                writeln!(w, "c'                 {}", red.cprime)?;
                writeln!(w, "period             ({})^{}", red.root, red.power)?;
                writeln!(w, "beta               {:.12}", red.beta)?;
            }
            if let Some(m) = report.minimal_family {
                writeln!(w, "w^l 1 family       {m}")?;
            }
            Ok(())
        },
    )
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
struct ConjectureOut {
    schema: u32,
    c: String,
    agree: bool,
    first_disagreement: Option<u64>,
    truncated_at: Option<u64>,
    rows: Vec<(u64, usize, usize)>,
}

fn conjecture(c: &ParamWord, mmax: u64, output: &OutputArgs) -> Outcome {
    let r = conjecture_test(c, mmax)?;
    let report = ConjectureOut {
        schema: 1,
        c: c.to_string(),
        agree: r.agree,
        first_disagreement: r.first_disagreement,
        truncated_at: r.truncated,
        rows: r.rows.iter().map(|row| (row.m, row.observed, row.predicted)).collect(),
    };
    let csv_rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|&(m, o, p)| vec!["1".into(), m.to_string(), o.to_string(), p.to_string()])
        .collect();
    output.emitter().emit_table(
        &report,
        |w| {
            for &(m, o, p) in &report.rows {
                let mark = if o == p { "" } else { "\t<- disagrees" };
                writeln!(w, "{m}\t{o}\t{p}{mark}")?;
            }
            match report.first_disagreement {
                None => writeln!(w, "agree"),
                Some(m) => writeln!(w, "DISAGREE from m = {m}"),
            }
        },
        &["schema", "m", "observed", "predicted"],
        &csv_rows,
    )
}
