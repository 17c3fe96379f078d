//! Text formats for presentations (`.alg`) and color Lie algebras (`.cl`).
//!
//! ```text
//! # down-up algebra A(4,-4)
//! generators: x, y
//! scalar: rational
//! x*x*y - 4*x*y*x + 4*y*x*x
//! x*y*y - 4*y*x*y + 4*y*y*x
//! ```
//!
//! ```text
//! rank: 2
//! basis: x:(1,0) y:(0,1) z:(1,1)
//! omega:
//!   1 2
//!   1/2 1
//! [x,y] = z
//! ```
//!
//! `#` starts a comment. Brackets not listed are zero, except that a pair
//! listed in one order only is completed by antisymmetry.

use crate::colorlie::{Bicharacter, ColorLieAlgebra, Degree};
use crate::error::{Error, Result};
use crate::ncalg::{syntax::parse_poly_at, NCPoly, Presentation};
use crate::scalar::{Matrix, Scalar};

/// Lines with comments stripped: (1-based line number, column offset of
/// the trimmed text, trimmed text). Blank lines are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let trimmed = body.trim_start();
        let offset = body.len() - trimmed.len();
        let t = trimmed.trim_end();
        (!t.is_empty()).then_some((i + 1, offset, t))
    })
}

/// `key: rest`, with the column offset of `rest`.
fn header<'a>(t: &'a str, key: &str) -> Option<(&'a str, usize)> {
    let rest = t.strip_prefix(key)?.trim_start().strip_prefix(':')?;
    let trimmed = rest.trim_start();
    Some((trimmed.trim_end(), t.len() - trimmed.len()))
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'')
}

/// The `scalar:` header, if any.
pub fn declared_scalar(text: &str) -> Option<String> {
    content_lines(text).find_map(|(_, _, t)| header(t, "scalar").map(|(v, _)| v.to_string()))
}

/// Parses an `.alg` file. A `scalar:` header, when present, must name the
/// variant `S`.
pub fn parse_algebra<S: Scalar>(text: &str) -> Result<Presentation<S>> {
    let mut names: Option<Vec<String>> = None;
    let mut relations = Vec::new();
    for (line, off, t) in content_lines(text) {
        if let Some((rest, col)) = header(t, "generators") {
            if names.is_some() {
                return Err(Error::parse(line, off + 1, "duplicate generators header"));
            }
            let list: Vec<String> = rest.split(',').map(|s| s.trim().to_string()).collect();
            if let Some(bad) = list.iter().find(|n| !valid_name(n)) {
                return Err(Error::parse(line, off + col + 1, format!("invalid generator name '{bad}'")));
            }
            names = Some(list);
        } else if let Some((rest, col)) = header(t, "scalar") {
            if rest != S::VARIANT {
                return Err(Error::parse(
                    line,
                    off + col + 1,
                    format!("scalar '{rest}' requested, reading as '{}'", S::VARIANT),
                ));
            }
        } else if header(t, "relations").is_some() {
            continue;
        } else {
            let Some(ns) = &names else {
                return Err(Error::parse(line, off + 1, "relation before the generators header"));
            };
            let r: NCPoly<S> = parse_poly_at(t, ns, line, off)?;
            if !r.is_homogeneous() {
                return Err(Error::parse(line, off + 1, "relation is not homogeneous"));
            }
            relations.push(r);
        }
    }
    let names = names.ok_or_else(|| Error::parse(1, 1, "missing generators header"))?;
    Presentation::new(names, relations)
}

pub fn write_algebra<S: Scalar>(p: &Presentation<S>) -> String {
    let mut out = format!("generators: {}\nscalar: {}\n", p.names().join(", "), S::VARIANT);
    for r in p.relations() {
        out.push_str(&p.format(r));
        out.push('\n');
    }
    out
}

fn parse_degree(s: &str, line: usize, col: usize) -> Result<Degree> {
    let inner = s
        .strip_prefix('(')
        .and_then(|x| x.strip_suffix(')'))
        .ok_or_else(|| Error::parse(line, col, "degree must be written (a0,...,am)"))?;
    inner
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<i64>()
                .map_err(|_| Error::parse(line, col, format!("invalid degree entry '{}'", v.trim())))
        })
        .collect()
}

/// Parses a `.cl` file.
pub fn parse_color_lie<S: Scalar>(text: &str) -> Result<ColorLieAlgebra<S>> {
    let mut rank: Option<usize> = None;
    let mut basis: Option<(Vec<String>, Vec<Degree>)> = None;
    let mut omega_rows: Option<Vec<Vec<S>>> = None;
    let mut omega_line = 0;
    let mut brackets: Vec<(usize, usize, usize, usize, &str)> = Vec::new();
    let mut lines = content_lines(text).peekable();
    while let Some((line, off, t)) = lines.next() {
        if let Some((rest, col)) = header(t, "rank") {
            let r = rest
                .parse::<usize>()
                .map_err(|_| Error::parse(line, off + col + 1, "rank must be a positive integer"))?;
            if r == 0 {
                return Err(Error::parse(line, off + col + 1, "rank must be positive"));
            }
            rank = Some(r);
        } else if let Some((rest, col)) = header(t, "basis") {
            let mut names = Vec::new();
            let mut degrees = Vec::new();
            let mut pos = off + col;
            for item in rest.split_whitespace() {
                let here = pos + rest[pos - off - col..].find(item).unwrap_or(0) + 1;
                pos = here - 1 + item.len();
                let (name, deg) = item
                    .split_once(':')
                    .ok_or_else(|| Error::parse(line, here, format!("basis entry '{item}' needs name:(degree)")))?;
                if !valid_name(name) {
                    return Err(Error::parse(line, here, format!("invalid basis name '{name}'")));
                }
                if names.iter().any(|n: &String| n == name) {
                    return Err(Error::parse(line, here, format!("duplicate basis name '{name}'")));
                }
                names.push(name.to_string());
                degrees.push(parse_degree(deg, line, here + name.len() + 1)?);
            }
            basis = Some((names, degrees));
        } else if let Some((rest, col)) = header(t, "omega") {
            let r = rank.ok_or_else(|| Error::parse(line, off + 1, "omega before rank"))?;
            omega_line = line;
            let mut rows = Vec::new();
            let mut pending: Vec<(usize, usize, &str)> = Vec::new();
            if !rest.is_empty() {
                pending.push((line, off + col, rest));
            }
            while pending.len() < r {
                match lines.peek() {
                    Some(&(l, o, t)) if !t.contains(':') && !t.starts_with('[') => {
                        pending.push((l, o, t));
                        lines.next();
                    }
                    _ => break,
                }
            }
            if pending.len() != r {
                return Err(Error::parse(line, off + 1, format!("omega needs {r} rows")));
            }
            for (l, o, row) in pending {
                let vals = row
                    .split_whitespace()
                    .map(|v| S::parse_literal(v).map_err(|e| Error::parse(l, o + 1, e.to_string())))
                    .collect::<Result<Vec<S>>>()?;
                if vals.len() != r {
                    return Err(Error::parse(l, o + 1, format!("omega row needs {r} entries")));
                }
                rows.push(vals);
            }
            omega_rows = Some(rows);
        } else if t.starts_with('[') {
            let close = t.find(']').ok_or_else(|| Error::parse(line, off + 1, "missing ']'"))?;
            let (a, b) = t[1..close]
                .split_once(',')
                .ok_or_else(|| Error::parse(line, off + 2, "bracket needs two entries"))?;
            let eq = t[close..]
                .find('=')
                .map(|e| close + e)
                .ok_or_else(|| Error::parse(line, off + close + 2, "missing '='"))?;
            let names = &basis
                .as_ref()
                .ok_or_else(|| Error::parse(line, off + 1, "bracket before basis"))?
                .0;
            let find = |n: &str, c: usize| {
                names
                    .iter()
                    .position(|x| x == n.trim())
                    .ok_or_else(|| Error::parse(line, c, format!("unknown basis element '{}'", n.trim())))
            };
            let i = find(a, off + 2)?;
            let j = find(b, off + 2 + a.len() + 1)?;
            brackets.push((line, off + eq + 1, i, j, &t[eq + 1..]));
        } else {
            return Err(Error::parse(line, off + 1, format!("unrecognized line '{t}'")));
        }
    }
    let rank = rank.ok_or_else(|| Error::parse(1, 1, "missing rank header"))?;
    let (names, degrees) = basis.ok_or_else(|| Error::parse(1, 1, "missing basis header"))?;
    let omega = match omega_rows {
        Some(rows) => Bicharacter::new(Matrix::from_rows(rank, rows)).map_err(|e| Error::parse(omega_line, 1, e.to_string()))?,
        None => Bicharacter::trivial(rank),
    };
    let mut given = Vec::new();
    for (line, col, i, j, rhs) in brackets {
        let p: NCPoly<S> = parse_poly_at(rhs, &names, line, col)?;
        let mut v = vec![S::zero(); names.len()];
        for (w, c) in p.terms() {
            match w.letters() {
                [k] => v[*k] = c.clone(),
                _ => return Err(Error::parse(line, col + 1, "bracket value must be linear in the basis")),
            }
        }
        if given.iter().any(|(a, b, _)| (*a, *b) == (i, j)) {
            return Err(Error::parse(line, 1, "bracket given twice"));
        }
        given.push((i, j, v));
    }
    ColorLieAlgebra::new(names, degrees, omega, given)
}

fn format_degree(d: &[i64]) -> String {
    let parts: Vec<String> = d.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

fn format_linear<S: Scalar>(l: &ColorLieAlgebra<S>, v: &[S]) -> String {
    let p = NCPoly::from_terms(
        v.iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (crate::ncalg::Word::letter(k), c.clone())),
    );
    p.to_string_with(l.names())
}

pub fn write_color_lie<S: Scalar>(l: &ColorLieAlgebra<S>) -> String {
    let rank = l.bicharacter().rank();
    let mut out = format!("rank: {rank}\nbasis:");
    for (n, d) in l.names().iter().zip(l.degrees()) {
        out.push_str(&format!(" {n}:{}", format_degree(d)));
    }
    out.push_str("\nomega:\n");
    let w = l.bicharacter().omega();
    for i in 0..rank {
        let row: Vec<String> = (0..rank).map(|j| w[(i, j)].to_string()).collect();
        out.push_str(&format!("  {}\n", row.join(" ")));
    }
    let names = l.names();
    let nonzero = |v: &[S]| v.iter().any(|c| !c.is_zero());
    for i in 0..l.dim() {
        if nonzero(l.bracket_basis(i, i)) {
            out.push_str(&format!("[{0},{0}] = {1}\n", names[i], format_linear(l, l.bracket_basis(i, i))));
        }
        for j in i + 1..l.dim() {
            let a = l.bracket_basis(i, j);
            let b = l.bracket_basis(j, i);
            let c = -l.eps(l.degree(j), l.degree(i));
            let completed = a.iter().zip(b).all(|(x, y)| c.clone() * x == *y);
            if completed {
                if nonzero(a) {
                    out.push_str(&format!("[{},{}] = {}\n", names[i], names[j], format_linear(l, a)));
                }
            } else {
                out.push_str(&format!("[{},{}] = {}\n", names[i], names[j], format_linear(l, a)));
                out.push_str(&format!("[{},{}] = {}\n", names[j], names[i], format_linear(l, b)));
            }
        }
    }
    out
}
