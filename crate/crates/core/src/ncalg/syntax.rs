//! Relation syntax: `x*x*y - 4*x*y*x + 4*y*x*x`.
//!
//! Terms are joined by `+`/`-`; factors by `*`. A factor is a generator
//! name (optionally `name^k`) or a scalar literal. Parenthesized scalar
//! literals such as `(t+1)/(t-1)` may contain their own operators.

use super::{NCPoly, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Parses a polynomial, reporting errors with line 1 and a 1-based column.
pub fn parse_poly<S: Scalar>(text: &str, names: &[String]) -> Result<NCPoly<S>> {
    parse_poly_at(text, names, 1, 0)
}

/// As [`parse_poly`], with positions offset for embedding in a file.
pub fn parse_poly_at<S: Scalar>(
    text: &str,
    names: &[String],
    line: usize,
    column_offset: usize,
) -> Result<NCPoly<S>> {
    let err = |col: usize, msg: String| Error::parse(line, column_offset + col + 1, msg);
    if text.trim().is_empty() {
        return Err(err(0, "empty polynomial".into()));
    }
    let mut out = NCPoly::zero();
    for (start, sign, body) in split_terms(text).map_err(|c| err(c, "unbalanced parentheses".into()))? {
        if body.trim().is_empty() {
            return Err(err(start, "missing term".into()));
        }
        let mut coeff = if sign { -S::one() } else { S::one() };
        let mut letters = Vec::new();
        let mut offset = start;
        for factor in split_top_level(body, '*') {
            let f = factor.trim();
            let col = offset + (factor.len() - factor.trim_start().len());
            offset += factor.len() + 1;
            if f.is_empty() {
                return Err(err(col, "empty factor".into()));
            }
            let (base, power) = match f.rsplit_once('^') {
                Some((b, e)) if !b.contains('(') || b.ends_with(')') => {
                    let e: usize = e
                        .trim()
                        .parse()
                        .map_err(|_| err(col, format!("bad exponent in `{f}`")))?;
                    (b.trim(), e)
                }
                _ => (f, 1),
            };
            if let Some(g) = names.iter().position(|n| n == base) {
                letters.extend(std::iter::repeat_n(g, power));
            } else if base.starts_with(|c: char| c.is_ascii_digit() || c == '(' || c == 't' && !names.iter().any(|n| n == "t")) {
                let c = S::parse_literal(base).map_err(|e| err(col, e.to_string()))?;
                coeff *= &c.powi(power as i64);
            } else {
                return Err(err(col, format!("unknown generator `{base}`")));
            }
        }
        out.add_term(Word::new(letters), coeff);
    }
    Ok(out)
}

type Term<'a> = (usize, bool, &'a str);

/// Splits at top-level `+`/`-`, returning (byte offset, negated, body).
fn split_terms(text: &str) -> std::result::Result<Vec<Term<'_>>, usize> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    let mut negated = false;
    let mut seen_content = false;
    let mut prev = ' ';
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(i);
                }
            }
            '+' | '-' if depth == 0 && !matches!(prev, '*' | '/' | '^') => {
                if seen_content {
                    terms.push((start, negated, &text[start..i]));
                    negated = c == '-';
                } else {
                    negated ^= c == '-';
                }
                start = i + 1;
                seen_content = false;
                prev = c;
                continue;
            }
            _ => {}
        }
        if !c.is_whitespace() {
            seen_content = true;
            prev = c;
        }
    }
    if depth != 0 {
        return Err(text.len());
    }
    terms.push((start, negated, &text[start..]));
    Ok(terms)
}

fn split_top_level(s: &str, sep: char) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            c if c == sep && depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&s[start..]);
    parts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio, RatFunc, Rational};

    fn xy() -> Vec<String> {
        vec!["x".into(), "y".into()]
    }

    #[test]
    fn parses_signs_and_coefficients() {
        let p: NCPoly<Rational> = parse_poly("x*x*y - 4*x*y*x + 4*y*x*x", &xy()).unwrap();
        assert_eq!(p.coeff(&Word::new(vec![0, 1, 0])), rat(-4));
        assert_eq!(p.coeff(&Word::new(vec![1, 0, 0])), rat(4));
        let q: NCPoly<Rational> = parse_poly("-1/2*y*x + x^2", &xy()).unwrap();
        assert_eq!(q.coeff(&Word::new(vec![1, 0])), ratio(-1, 2));
        assert_eq!(q.coeff(&Word::new(vec![0, 0])), rat(1));
        let r: NCPoly<Rational> = parse_poly("x*y - -1*y*x", &xy()).unwrap();
        assert_eq!(r.coeff(&Word::new(vec![1, 0])), rat(1));
    }

    #[test]
    fn parses_rational_function_coefficients() {
        let p: NCPoly<RatFunc> = parse_poly("x*y - (t+1)/(t-1)*y*x", &xy()).unwrap();
        let c = p.coeff(&Word::new(vec![1, 0]));
        assert_eq!(c.to_string(), "(-t-1)/(t-1)");
        let q: NCPoly<RatFunc> = parse_poly("t*x*y - y*x", &xy()).unwrap();
        assert_eq!(q.coeff(&Word::new(vec![0, 1])), RatFunc::t());
    }

    #[test]
    fn reports_unknown_generators_with_column() {
        let e = parse_poly::<Rational>("x*y - z*x", &xy()).unwrap_err();
        assert_eq!(
            e,
            Error::Parse {
                line: 1,
                column: 7,
                message: "unknown generator `z`".into()
            }
        );
    }

    #[test]
    fn serialization_round_trips() {
        for text in ["x*x*y - 2*x*y*x + y*x*x", "-x*y + 1/3*y*y", "x*y*x*y - 2*x*y*y*x"] {
            let p: NCPoly<Rational> = parse_poly(text, &xy()).unwrap();
            let back: NCPoly<Rational> = parse_poly(&p.to_string_with(&xy()), &xy()).unwrap();
            assert_eq!(back, p);
        }
    }
}
