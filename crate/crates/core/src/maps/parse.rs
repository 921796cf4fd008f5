//! Recursive-descent parser for polynomial maps such as `(x1 + x2^2, x2)`.
//!
//! ```text
//! map    := ("(" | "[") poly { "," poly } (")" | "]")
//! poly   := ["-"] term { ("+" | "-") term }
//! term   := [coeff] factor { ["*"] factor } | coeff
//! factor := var ["^" int] | "(" poly ")" ["^" int]
//! var    := "x" int | "x" | "y" | "z"
//! coeff  := int | "#" digits
//! ```
//!
//! `x`, `y`, `z` abbreviate `x1`, `x2`, `x3` when `n <= 3`. Integers are
//! reduced into the prime subfield; `#digits` is a field element written in
//! the canonical base-p digit rendering.

use super::map::PolyMap;
use super::poly::Poly;
use crate::error::{Error, Result};
use crate::fields::{Field, Fq, ZPoly};
use crate::ring::Ring;

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    field: &'a Field,
    nvars: usize,
    resolve: &'a dyn Fn(&str, usize) -> Option<usize>,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: at,
            message: message.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.err(
                self.pos,
                format!("expected '{}', found '{}'", c as char, x as char),
            ),
            None => self.err(
                self.pos,
                format!("expected '{}', found end of input", c as char),
            ),
        }
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected an integer");
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .or_else(|_| self.err(start, "integer too large"))
    }

    fn poly(&mut self) -> Result<Poly<Fq>> {
        let f = self.field;
        let mut acc = Poly::zero(self.nvars);
        let mut negate = false;
        if self.peek() == Some(b'-') {
            self.pos += 1;
            negate = true;
        } else if self.peek() == Some(b'+') {
            self.pos += 1;
        }
        loop {
            let t = self.term()?;
            acc = if negate {
                acc.sub(f, &t)
            } else {
                acc.add(f, &t)
            };
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    negate = false;
                }
                Some(b'-') => {
                    self.pos += 1;
                    negate = true;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&mut self) -> bool {
        matches!(self.peek(), Some(b'x' | b'y' | b'z' | b'('))
    }

    fn term(&mut self) -> Result<Poly<Fq>> {
        let f = self.field;
        let mut acc = match self.peek() {
            Some(c) if c.is_ascii_digit() || c == b'#' => {
                let k = self.coeff()?;
                Poly::constant(f, self.nvars, k)
            }
            Some(_) if self.starts_factor() => Poly::one(f, self.nvars),
            Some(c) => {
                return self.err(self.pos, format!("expected a term, found '{}'", c as char))
            }
            None => return self.err(self.pos, "expected a term, found end of input"),
        };
        let mut need_factor = false;
        loop {
            if self.peek() == Some(b'*') {
                self.pos += 1;
                need_factor = true;
            }
            if self.starts_factor() {
                let fac = self.factor()?;
                acc = acc.mul(f, &fac);
                need_factor = false;
            } else if need_factor {
                let c = self.peek();
                if matches!(c, Some(d) if d.is_ascii_digit() || d == b'#') {
                    let k = self.coeff()?;
                    acc = acc.scale(f, &k);
                    need_factor = false;
                } else {
                    return self.err(self.pos, "expected a factor after '*'");
                }
            } else {
                return Ok(acc);
            }
        }
    }

    fn coeff(&mut self) -> Result<Fq> {
        let f = self.field;
        if self.peek() == Some(b'#') {
            self.pos += 1;
            let start = self.pos;
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_digit() || self.src[self.pos] == b':')
            {
                self.pos += 1;
            }
            let s = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
            return f
                .parse_element(s)
                .or_else(|_| self.err(start, format!("'{s}' is not an element of F_{}", f.q())));
        }
        let v = self.int()?;
        Ok(f.from_int((v % f.p() as u64) as i64))
    }

    fn exponent(&mut self) -> Result<u32> {
        if self.peek() == Some(b'^') {
            self.pos += 1;
            let at = self.pos;
            let e = self.int()?;
            u32::try_from(e).or_else(|_| self.err(at, "exponent too large"))
        } else {
            Ok(1)
        }
    }

    fn factor(&mut self) -> Result<Poly<Fq>> {
        let f = self.field;
        let base = if self.peek() == Some(b'(') {
            self.pos += 1;
            let p = self.poly()?;
            self.expect(b')')?;
            p
        } else {
            let start = self.pos;
            let c = self.src[self.pos];
            self.pos += 1;
            let mut name = (c as char).to_string();
            if c == b'x' {
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    name.push(self.src[self.pos] as char);
                    self.pos += 1;
                }
            }
            let Some(idx) = (self.resolve)(&name, self.nvars) else {
                return Err(Error::VariableOutOfRange {
                    index: name[1..].parse().unwrap_or(0),
                    n: self.nvars,
                })
                .or_else(|e| {
                    if name.len() > 1 {
                        Err(e)
                    } else {
                        self.err(start, format!("variable '{name}' not available"))
                    }
                });
            };
            Poly::var(f, self.nvars, idx)
        };
        let e = self.exponent()?;
        Ok(base.pow(f, e))
    }

    fn finish(&mut self) -> Result<()> {
        if let Some(c) = self.peek() {
            return self.err(self.pos, format!("unexpected trailing '{}'", c as char));
        }
        Ok(())
    }
}

fn map_vars(name: &str, n: usize) -> Option<usize> {
    let idx = match name {
        "x" => 1,
        "y" if n <= 3 => 2,
        "z" if n <= 3 => 3,
        _ => name.strip_prefix('x')?.parse::<usize>().ok()?,
    };
    (1..=n).contains(&idx).then(|| idx - 1)
}

/// Parse a single polynomial in `x1..xn`.
pub fn parse_poly(text: &str, field: &Field, n: usize) -> Result<Poly<Fq>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
        nvars: n,
        resolve: &map_vars,
    };
    let out = p.poly()?;
    p.finish()?;
    Ok(out)
}

/// Parse a map `(F_1, ..., F_n)`; the number of components must equal `n`.
pub fn parse_map(text: &str, field: &Field, n: usize) -> Result<PolyMap<Field>> {
    let mut p = Parser {
        src: text.as_bytes(),
        pos: 0,
        field,
        nvars: n,
        resolve: &map_vars,
    };
    let close = match p.peek() {
        Some(b'(') => b')',
        Some(b'[') => b']',
        _ => return p.err(p.pos, "expected '(' or '['"),
    };
    p.pos += 1;
    let mut comps = vec![p.poly()?];
    while p.peek() == Some(b',') {
        p.pos += 1;
        comps.push(p.poly()?);
    }
    p.expect(close)?;
    p.finish()?;
    if comps.len() != n {
        return Err(Error::DimensionMismatch(comps.len(), n));
    }
    PolyMap::new(field, comps)
}

/// Parse a univariate polynomial in `z` (or `Z`).
pub fn parse_zpoly(text: &str, field: &Field) -> Result<ZPoly> {
    let lowered = text.replace('Z', "z");
    let mut p = Parser {
        src: lowered.as_bytes(),
        pos: 0,
        field,
        nvars: 1,
        resolve: &|name, _| (name == "z").then_some(0),
    };
    let poly = p.poly()?;
    p.finish()?;
    let deg = poly.degree_in(0).unwrap_or(0) as usize;
    let mut coeffs = vec![Fq::ZERO; deg + 1];
    for (e, c) in poly.terms() {
        coeffs[e[0] as usize] = *c;
    }
    Ok(ZPoly::from_coeffs(coeffs))
}

/// Render a map so that [`parse_map`] reads it back.
pub fn render_map(m: &PolyMap<Field>) -> String {
    let f = m.ring();
    let parts: Vec<String> = m.components().iter().map(|c| render_poly(c, f)).collect();
    format!("({})", parts.join(", "))
}

/// Canonical rendering with grammar-compatible coefficients.
pub fn render_poly(p: &Poly<Fq>, f: &Field) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (e, c)) in p.sorted_terms().into_iter().enumerate() {
        if k > 0 {
            out.push_str(" + ");
        }
        let cs = crate::fields::render_coeff(f, *c);
        let vars: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x > 0)
            .map(|(i, &x)| {
                if x == 1 {
                    format!("x{}", i + 1)
                } else {
                    format!("x{}^{}", i + 1, x)
                }
            })
            .collect();
        if vars.is_empty() {
            out.push_str(&cs);
        } else if f.is_one(c) {
            out.push_str(&vars.join("*"));
        } else {
            out.push_str(&format!("{cs}*{}", vars.join("*")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::gens::{build, Word};

    #[test]
    fn elementary_examples() {
        let f2 = Field::new(2, 1).unwrap();
        let m = parse_map("(x1+x2^2, x2)", &f2, 2).unwrap();
        let e = Word::from_gen(&f2, 2, build::e(2, 0, &[2], Fq::ONE)).unwrap();
        assert_eq!(m, e.to_map());
        let f3 = Field::new(3, 1).unwrap();
        let m = parse_map("(x1 + x2*x3, x2, x3)", &f3, 3).unwrap();
        let e = Word::from_gen(&f3, 3, build::e(3, 0, &[1, 1], Fq::ONE)).unwrap();
        assert_eq!(m, e.to_map());
        assert_eq!(
            parse_map("[x+y^2,y]", &f2, 2).unwrap(),
            parse_map("(x1+x2^2,x2)", &f2, 2).unwrap()
        );
    }

    #[test]
    fn syntax_error_offset() {
        let f2 = Field::new(2, 1).unwrap();
        match parse_map("(x1+, x2)", &f2, 2) {
            Err(Error::Syntax { offset, .. }) => assert_eq!(offset, 4),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            parse_map("(x1, x3)", &f2, 2),
            Err(Error::VariableOutOfRange { index: 3, n: 2 })
        ));
        assert!(parse_map("(x1, x2", &f2, 2).is_err());
        assert!(parse_map("(#3, x2)", &f2, 2).is_err());
    }

    #[test]
    fn render_roundtrip_and_field_elements() {
        let f4 = Field::new(2, 2).unwrap();
        let m = parse_map("(x1 + #01*x2^3 + 1, (x2 + #11)^2)", &f4, 2).unwrap();
        let back = parse_map(&render_map(&m), &f4, 2).unwrap();
        assert_eq!(m, back);
        let f5 = Field::new(5, 1).unwrap();
        let m = parse_map("(3x1 - 2 x2 x1, -x2 + 7)", &f5, 2).unwrap();
        assert_eq!(render_map(&m), "(3*x1*x2 + 3*x1, 4*x2 + 2)");
    }

    #[test]
    fn zpoly_parse() {
        let f3 = Field::new(3, 1).unwrap();
        let z = parse_zpoly("Z^2 + 2*z + 1", &f3).unwrap();
        assert_eq!(z.coeffs(), &[Fq(1), Fq(2), Fq(1)]);
    }
}
