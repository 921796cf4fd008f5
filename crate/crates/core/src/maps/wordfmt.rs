//! Line-oriented text format for words over a finite field.
//!
//! One letter per line, indices 1-based, an optional trailing `INV` marks a
//! formal inverse. Lines starting with `//` are comments.
//!
//! ```text
//! T i c                     X_i -> X_i + c
//! S i c                     X_i -> c X_i
//! R i j                     swap X_i and X_j
//! E i a,b,... c             X_i -> X_i + c * (monomial in the other variables)
//! J s1,...,sn | t1 | ... | tn
//! A m11,m12,...;m21,... | b1,...,bn
//! ```
//!
//! Coefficients are integers (reduced mod p) or `#digits` field elements.

use super::gens::{Gen, Letter, Word};
use super::parse::{parse_poly, render_poly};
use crate::error::{Error, Result};
use crate::fields::{render_coeff, Field, Fq};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset: line,
        message: format!("line {}: {}", line + 1, message.into()),
    }
}

fn coeff(f: &Field, s: &str, line: usize) -> Result<Fq> {
    let s = s.trim();
    if let Some(d) = s.strip_prefix('#') {
        return f
            .parse_element(d)
            .map_err(|_| syntax(line, format!("bad field element '{s}'")));
    }
    let v: i64 = s
        .parse()
        .map_err(|_| syntax(line, format!("bad coefficient '{s}'")))?;
    Ok(f.from_int(v))
}

fn index(s: &str, n: usize, line: usize) -> Result<usize> {
    let i: usize = s
        .trim()
        .parse()
        .map_err(|_| syntax(line, format!("bad index '{s}'")))?;
    if i == 0 || i > n {
        return Err(Error::VariableOutOfRange { index: i, n });
    }
    Ok(i - 1)
}

fn csv<T>(s: &str, mut f: impl FnMut(&str) -> Result<T>) -> Result<Vec<T>> {
    s.split(',').map(|x| f(x.trim())).collect()
}

fn parse_line(f: &Field, n: usize, text: &str, line: usize) -> Result<Letter<Fq>> {
    let mut text = text.trim();
    let mut inverse = false;
    if let Some(rest) = text.strip_suffix("INV") {
        text = rest.trim_end();
        inverse = true;
    }
    let (head, rest) = text.split_at(1);
    let rest = rest.trim();
    let toks: Vec<&str> = rest.split_whitespace().collect();
    let arity = |k: usize| {
        if toks.len() == k {
            Ok(())
        } else {
            Err(syntax(line, format!("expected {k} fields after '{head}'")))
        }
    };
    let gen = match head {
        "T" => {
            arity(2)?;
            Gen::Translate {
                i: index(toks[0], n, line)?,
                c: coeff(f, toks[1], line)?,
            }
        }
        "S" => {
            arity(2)?;
            Gen::Scale {
                i: index(toks[0], n, line)?,
                c: coeff(f, toks[1], line)?,
            }
        }
        "R" => {
            arity(2)?;
            Gen::Swap {
                i: index(toks[0], n, line)?,
                j: index(toks[1], n, line)?,
            }
        }
        "E" => {
            arity(3)?;
            let i = index(toks[0], n, line)?;
            let alpha = csv(toks[1], |x| {
                x.parse::<u32>()
                    .map_err(|_| syntax(line, format!("bad exponent '{x}'")))
            })?;
            if alpha.len() + 1 != n {
                return Err(syntax(line, format!("expected {} exponents", n - 1)));
            }
            Gen::Elementary {
                i,
                exps: super::build::full_exps(n, i, &alpha),
                coeff: coeff(f, toks[2], line)?,
            }
        }
        "J" => {
            let parts: Vec<&str> = rest.split('|').collect();
            if parts.len() != n + 1 {
                return Err(syntax(line, format!("expected {n} tails")));
            }
            Gen::Jonq {
                scalars: csv(parts[0], |x| coeff(f, x, line))?,
                tails: parts[1..]
                    .iter()
                    .map(|t| parse_poly(t, f, n).map_err(|e| syntax(line, e.to_string())))
                    .collect::<Result<_>>()?,
            }
        }
        "A" => {
            let (m, b) = rest
                .split_once('|')
                .ok_or_else(|| syntax(line, "expected 'matrix | shift'"))?;
            Gen::Affine {
                matrix: m
                    .split(';')
                    .map(|row| csv(row, |x| coeff(f, x, line)))
                    .collect::<Result<_>>()?,
                shift: csv(b, |x| coeff(f, x, line))?,
            }
        }
        other => return Err(syntax(line, format!("unknown generator '{other}'"))),
    };
    Ok(Letter { gen, inverse })
}

pub fn parse_word(text: &str, f: &Field, n: usize) -> Result<Word<Field>> {
    let mut w = Word::identity(f, n);
    for (line, raw) in text.lines().enumerate() {
        let t = raw.trim();
        if t.is_empty() || t.starts_with("//") {
            continue;
        }
        let l = parse_line(f, n, t, line)?;
        w.push_letter(l)?;
    }
    Ok(w)
}

pub fn render_word(w: &Word<Field>) -> String {
    let f = w.ring();
    let c = |x: &Fq| render_coeff(f, *x);
    let join = |v: &[Fq]| v.iter().map(c).collect::<Vec<_>>().join(",");
    let mut out = String::new();
    for l in w.letters() {
        let s = match &l.gen {
            Gen::Translate { i, c: a } => format!("T {} {}", i + 1, c(a)),
            Gen::Scale { i, c: a } => format!("S {} {}", i + 1, c(a)),
            Gen::Swap { i, j } => format!("R {} {}", i + 1, j + 1),
            Gen::Elementary { i, exps, coeff } => {
                let a: Vec<String> = exps
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| k != i)
                    .map(|(_, e)| e.to_string())
                    .collect();
                format!("E {} {} {}", i + 1, a.join(","), c(coeff))
            }
            Gen::Jonq { scalars, tails } => {
                let t: Vec<String> = tails.iter().map(|t| render_poly(t, f)).collect();
                format!("J {} | {}", join(scalars), t.join(" | "))
            }
            Gen::Affine { matrix, shift } => {
                let rows: Vec<String> = matrix.iter().map(|r| join(r)).collect();
                format!("A {} | {}", rows.join(";"), join(shift))
            }
        };
        out.push_str(&s);
        if l.inverse {
            out.push_str(" INV");
        }
        out.push('\n');
    }
    out
}
