//! Weight vector syntax for the command line.
//!
//! A comma separated list of rationals, where `(v)^r` or `v^r` repeats an
//! entry `r` times and a whole list may be divided by an integer:
//! `(1,1,1,1,1,1,-2,-2,-2)/3` is the same as `(1/3)^6,(-2/3)^3`.

use anyhow::{bail, Context, Result};
use oscoh::exactla::parse_rational;
use oscoh::Rational;

pub fn parse_weights(text: &str) -> Result<Vec<Rational>> {
    let t = text.trim().replace('\u{2212}', "-").replace(char::is_whitespace, "");
    if t.is_empty() {
        bail!("empty weight list");
    }
    if let Some((inner, den)) = split_divided(&t) {
        let den = parse_rational(den).with_context(|| format!("bad divisor `{den}`"))?;
        if den == Rational::from_integer(0.into()) {
            bail!("division of the weight list by zero");
        }
        return Ok(parse_list(inner)?.into_iter().map(|x| x / &den).collect());
    }
    parse_list(&t)
}

/// `(list)/d` with the parentheses enclosing the whole list.
fn split_divided(t: &str) -> Option<(&str, &str)> {
    let rest = t.strip_prefix('(')?;
    let close = matching_paren(t)?;
    let after = t[close + 1..].strip_prefix('/')?;
    let inner = &rest[..close - 1];
    inner.contains(',').then_some((inner, after))
}

fn matching_paren(t: &str) -> Option<usize> {
    let mut depth = 0;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 {
                    return Some(i);
                }
            }
            _ => {}
        }
    }
    None
}

fn parse_list(t: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::new();
    for item in split_top_level(t) {
        let (value, count) = match item.rsplit_once('^') {
            Some((v, r)) => {
                let r: usize = r.parse().with_context(|| format!("bad repetition count in `{item}`"))?;
                (v, r)
            }
            None => (item, 1),
        };
        let value = value.strip_prefix('(').and_then(|v| v.strip_suffix(')')).unwrap_or(value);
        let x = parse_rational(value).with_context(|| format!("bad weight `{item}`"))?;
        out.extend(std::iter::repeat(x).take(count));
    }
    Ok(out)
}

fn split_top_level(t: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&t[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&t[start..]);
    parts
}
