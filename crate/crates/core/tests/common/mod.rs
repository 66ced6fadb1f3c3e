#![allow(dead_code)]

use morphic_sa::ParamWord;

/// Every parameter word with `2 ≤ k ≤ k_max`, digits in `0..=d_max`, and
/// non-zero first and last digits.
pub fn family(k_max: usize, d_max: u32) -> Vec<ParamWord> {
    let base = d_max + 1;
    let mut out = Vec::new();
    for k in 2..=k_max {
        for code in 0..base.pow(k as u32) {
            let digits: Vec<u32> = (0..k as u32).rev().map(|i| code / base.pow(i) % base).collect();
            if digits[0] > 0 && digits[k - 1] > 0 {
                out.push(ParamWord::new(digits).unwrap());
            }
        }
    }
    out
}

pub fn c(s: &str) -> ParamWord {
    s.parse().unwrap()
}

pub fn letters(s: &str) -> Vec<u8> {
    s.bytes().map(|b| b - b'0').collect()
}

pub fn digits(s: &str) -> Vec<u32> {
    s.bytes().map(|b| u32::from(b - b'0')).collect()
}
