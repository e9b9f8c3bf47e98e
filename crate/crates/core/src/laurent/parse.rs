//! Textual polynomial syntax: sums of terms `c*t^k`, plus the compact
//! window form `[min_exp; c0,c1,...]`.

use num::bigint::BigInt;
use num::Zero;

use super::{LaurentError, LaurentPoly};

pub fn parse_poly(s: &str) -> Result<LaurentPoly, LaurentError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(LaurentError::Parse("empty input".to_string()));
    }
    if s.starts_with('[') {
        return parse_compact(s);
    }
    parse_terms(s)
}

fn parse_compact(s: &str) -> Result<LaurentPoly, LaurentError> {
    let inner = s
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| LaurentError::Parse(format!("malformed compact form: {s}")))?;
    let (exp_part, coeff_part) = inner
        .split_once(';')
        .ok_or_else(|| LaurentError::Parse(format!("compact form needs a ';': {s}")))?;
    let min_exp: i64 = exp_part
        .trim()
        .parse()
        .map_err(|_| LaurentError::Parse(format!("bad exponent in compact form: {exp_part}")))?;
    let coeffs: Result<Vec<BigInt>, _> = coeff_part
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<BigInt>()
                .map_err(|_| LaurentError::Parse(format!("bad coefficient: {c}")))
        })
        .collect();
    Ok(LaurentPoly::from_coeffs(min_exp, coeffs?))
}

fn parse_terms(s: &str) -> Result<LaurentPoly, LaurentError> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut acc = LaurentPoly::zero();
    let mut rest = compact.as_str();
    let mut sign = 1i64;
    if let Some(r) = rest.strip_prefix('-') {
        sign = -1;
        rest = r;
    } else if let Some(r) = rest.strip_prefix('+') {
        rest = r;
    }
    while !rest.is_empty() {
        let end = rest
            .char_indices()
            .skip(1)
            .find(|&(i, c)| (c == '+' || c == '-') && !rest[..i].ends_with('^'))
            .map(|(i, _)| i)
            .unwrap_or(rest.len());
        let term = &rest[..end];
        acc = &acc + &parse_term(term, sign)?;
        rest = &rest[end..];
        if let Some(r) = rest.strip_prefix('-') {
            sign = -1;
            rest = r;
        } else if let Some(r) = rest.strip_prefix('+') {
            sign = 1;
            rest = r;
        } else if !rest.is_empty() {
            return Err(LaurentError::Parse(format!("unexpected input at: {rest}")));
        }
    }
    Ok(acc)
}

fn parse_term(term: &str, sign: i64) -> Result<LaurentPoly, LaurentError> {
    if term.is_empty() {
        return Err(LaurentError::Parse("empty term".to_string()));
    }
    let (coeff_str, var_str) = match term.find('t') {
        Some(i) => (&term[..i], &term[i..]),
        None => (term, ""),
    };
    let coeff: BigInt = match coeff_str.strip_suffix('*').unwrap_or(coeff_str) {
        "" => BigInt::from(1),
        c => c
            .parse()
            .map_err(|_| LaurentError::Parse(format!("bad coefficient: {c}")))?,
    };
    let exp: i64 = match var_str {
        "" => 0,
        "t" => 1,
        _ => {
            let e = var_str
                .strip_prefix("t^")
                .ok_or_else(|| LaurentError::Parse(format!("bad term: {term}")))?;
            e.parse()
                .map_err(|_| LaurentError::Parse(format!("bad exponent: {e}")))?
        }
    };
    if coeff.is_zero() {
        return Ok(LaurentPoly::zero());
    }
    Ok(LaurentPoly::term(coeff * sign, exp))
}
