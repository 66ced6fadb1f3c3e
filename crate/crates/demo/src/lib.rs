//! Browser bindings: a prefix of `u` with an attractor highlighted, the
//! attractor profile, and the numeration automaton as DOT.
//!
//! Every export returns a JSON string (or DOT text); errors surface as JS
//! exceptions carrying the library's message.

use morphic_sa::attractors::{
    attractor_for_prefix_with_origin, check_conditions, profile, smallest_attractor, Construction,
};
use morphic_sa::numeration::build_automaton;
use morphic_sa::words::{prefix, Lengths};
use morphic_sa::ParamWord;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Longest prefix the page will lay out.
pub const MAX_PREFIX: u32 = 4096;
/// Profiles are exact searches; keep them interactive.
pub const MAX_PROFILE: u32 = 120;

#[derive(Serialize)]
struct PrefixView {
    c: String,
    letters: Vec<u8>,
    /// 1-based positions.
    positions: Vec<u64>,
    method: &'static str,
    n: Option<usize>,
    lengths: Vec<u64>,
    conditions_hold: bool,
}

#[derive(Serialize)]
struct ProfileView {
    c: String,
    sizes: Vec<usize>,
    witnesses: Vec<Vec<u64>>,
    lengths: Vec<u64>,
}

fn param(c: &str) -> Result<ParamWord, String> {
    c.trim().parse().map_err(|e: morphic_sa::Error| e.to_string())
}

fn lengths_up_to(c: &ParamWord, m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for n in 0.. {
        let l = Lengths::new(c, n).get_u64(n).unwrap_or(u64::MAX);
        if l > m {
            break;
        }
        out.push(l);
    }
    out
}

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

/// `u[0, m)` with the Γ-construction attractor, or the exact smallest one when
/// `minimal` is set or the conditions fail (exact search needs `m ≤ 200`).
pub fn prefix_view(c: &str, m: u32, minimal: bool) -> Result<String, String> {
    let c = param(c)?;
    if m == 0 || m > MAX_PREFIX {
        return Err(format!("m must lie in 1..={MAX_PREFIX}"));
    }
    let holds = check_conditions(&c).map_err(|e| e.to_string())?.all_hold();
    let letters = prefix(&c, m as usize).into_letters();
    let (positions, method, n) = if minimal || !holds {
        let e = smallest_attractor(&letters).map_err(|e| e.to_string())?;
        (e.witness.positions().to_vec(), "minimal", None)
    } else {
        let (g, origin) = attractor_for_prefix_with_origin(&c, u64::from(m)).map_err(|e| e.to_string())?;
        let (method, n) = match origin {
            Construction::Gamma { n } => ("gamma", n),
            Construction::GammaPlusLength { n } => ("gamma_plus_length", n),
        };
        (g.positions().to_vec(), method, Some(n))
    };
    to_json(&PrefixView {
        c: c.to_string(),
        positions,
        method,
        n,
        lengths: lengths_up_to(&c, u64::from(m)),
        conditions_hold: holds,
        letters,
    })
}

pub fn profile_view(c: &str, mmax: u32) -> Result<String, String> {
    let c = param(c)?;
    if mmax == 0 || mmax > MAX_PROFILE {
        return Err(format!("m_max must lie in 1..={MAX_PROFILE}"));
    }
    let p = profile(&c, u64::from(mmax), MAX_PROFILE as usize).map_err(|e| e.to_string())?;
    to_json(&ProfileView {
        c: c.to_string(),
        sizes: p.sizes(),
        witnesses: p.entries.iter().map(|e| e.witness.positions().to_vec()).collect(),
        lengths: lengths_up_to(&c, u64::from(mmax)),
    })
}

pub fn automaton_view(c: &str) -> Result<String, String> {
    Ok(build_automaton(&param(c)?).to_dot())
}

#[wasm_bindgen(js_name = prefixView)]
pub fn prefix_view_js(c: &str, m: u32, minimal: bool) -> Result<String, JsError> {
    prefix_view(c, m, minimal).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = profileView)]
pub fn profile_view_js(c: &str, mmax: u32) -> Result<String, JsError> {
    profile_view(c, mmax).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = automatonDot)]
pub fn automaton_view_js(c: &str) -> Result<String, JsError> {
    automaton_view(c).map_err(|e| JsError::new(&e))
}
