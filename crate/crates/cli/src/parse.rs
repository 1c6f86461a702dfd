use anyhow::{anyhow, bail, Context, Result};
use braidorb::reflgrp::Which;
use braidorb::{parse_cyclo, Cyclotomic, Rational};
use num_complex::Complex64;

/// Split on commas that are not inside parentheses, after dropping one pair of outer brackets.
pub fn split_list(text: &str) -> Vec<String> {
    let t = text.trim();
    let t = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .or_else(|| t.strip_prefix('(').and_then(|s| s.strip_suffix(')')).filter(|s| balanced(s)))
        .unwrap_or(t);
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in t.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if (ch == ',' || ch == ':' || ch == ';') && depth == 0 {
            out.push(cur.trim().to_string());
            cur.clear();
        } else {
            cur.push(ch);
        }
    }
    if !cur.trim().is_empty() || !out.is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

fn balanced(s: &str) -> bool {
    let mut d = 0i32;
    for ch in s.chars() {
        match ch {
            '(' => d += 1,
            ')' => d -= 1,
            _ => {}
        }
        if d < 0 {
            return false;
        }
    }
    d == 0
}

pub fn cyclo_list(text: &str) -> Result<Vec<Cyclotomic>> {
    split_list(text)
        .iter()
        .map(|s| parse_cyclo(s).map_err(|e| anyhow!("cannot parse `{}`: {}", s, e)))
        .collect()
}

pub fn rational_list(text: &str) -> Result<Vec<Rational>> {
    split_list(text).iter().map(|s| rational(s)).collect()
}

pub fn rational(s: &str) -> Result<Rational> {
    s.parse::<Rational>().map_err(|e| anyhow!(e))
}

pub fn float_list(text: &str) -> Result<Vec<f64>> {
    split_list(text).iter().map(|s| s.parse::<f64>().with_context(|| format!("bad number `{}`", s))).collect()
}

/// `re,im`.
pub fn complex(text: &str) -> Result<Complex64> {
    match float_list(text)?.as_slice() {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => bail!("expected `re,im`, got `{}`", text),
    }
}

pub fn which(text: &str) -> Result<Which> {
    match text.to_ascii_lowercase().as_str() {
        "g25" | "hessian" => Ok(Which::G25),
        "g32" | "witting" => Ok(Which::G32),
        other => bail!("unknown group `{}` (expected g25 or g32)", other),
    }
}
