//! Class expressions such as `2H-E` or `H+1/2E`, evaluated ray-wise.

use std::collections::BTreeMap;

use torzar::rational::Rational;
use torzar::ToricClass;

use crate::CliError;

fn digits(chars: &[char], i: &mut usize) -> Option<String> {
    let start = *i;
    while *i < chars.len() && chars[*i].is_ascii_digit() {
        *i += 1;
    }
    (*i > start).then(|| chars[start..*i].iter().collect())
}

/// Parses `[±][p[/q][*]]NAME (± [p[/q][*]]NAME)*` into `(coefficient, name)` terms.
pub fn parse_terms(text: &str) -> Result<Vec<(Rational, String)>, CliError> {
    let bad = |msg: &str| CliError::Expression(format!("'{text}': {msg}"));
    let word = |c: char| c.is_alphanumeric() || c == '_';
    let raw: Vec<char> = text.chars().collect();
    for (i, c) in raw.iter().enumerate() {
        if c.is_whitespace() {
            let before = raw[..i].iter().rev().find(|c| !c.is_whitespace());
            let after = raw[i..].iter().find(|c| !c.is_whitespace());
            if before.is_some_and(|&c| word(c)) && after.is_some_and(|&c| word(c)) {
                return Err(bad("missing operator"));
            }
        }
    }
    let chars: Vec<char> = raw.into_iter().filter(|c| !c.is_whitespace()).collect();
    if chars.is_empty() {
        return Err(bad("empty expression"));
    }
    let mut i = 0;
    let mut terms = Vec::new();
    while i < chars.len() {
        let mut sign = Rational::from_integer(1.into());
        if chars[i] == '+' || chars[i] == '-' {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        } else if !terms.is_empty() {
            return Err(bad("expected '+' or '-'"));
        }
        let mut coeff = Rational::from_integer(1.into());
        if let Some(p) = digits(&chars, &mut i) {
            let num: torzar::BigInt = p.parse().unwrap();
            let mut den = torzar::BigInt::from(1);
            if i < chars.len() && chars[i] == '/' {
                i += 1;
                den = digits(&chars, &mut i).ok_or_else(|| bad("expected a denominator"))?.parse().unwrap();
                if den == torzar::BigInt::from(0) {
                    return Err(bad("zero denominator"));
                }
            }
            coeff = Rational::new(num, den);
            if i < chars.len() && chars[i] == '*' {
                i += 1;
            }
        }
        let start = i;
        if i < chars.len() && (chars[i].is_alphabetic() || chars[i] == '_') {
            i += 1;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
        }
        if start == i {
            return Err(bad("expected a class name"));
        }
        terms.push((sign * coeff, chars[start..i].iter().collect()));
    }
    Ok(terms)
}

pub fn evaluate(text: &str, classes: &BTreeMap<String, ToricClass>) -> Result<ToricClass, CliError> {
    let terms = parse_terms(text)?;
    let mut acc: Option<ToricClass> = None;
    for (coeff, name) in terms {
        let c = classes.get(&name).ok_or_else(|| CliError::UnknownClass(name.clone()))?;
        acc = Some(match acc {
            None => c.scale(&coeff),
            Some(a) => a.add_scaled(&coeff, c).expect("classes of one instance share a fan"),
        });
    }
    Ok(acc.unwrap())
}
