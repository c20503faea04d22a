//! Element encodings: nested JSON codes and polynomial expressions in `z`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{Coef, Field, FieldElement, FieldError};

/// Exact encoding of a field element.
///
/// Prime-field elements are strings (`"3"`, `"-1/2"`). Extension elements are
/// vectors of base-field codes, lowest power of the top generator first. A
/// string is also accepted for extension elements and read as an expression
/// in the top generator `z`, e.g. `"1/2*z^3 - z + 1"`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElementCode {
    Scalar(String),
    Vector(Vec<ElementCode>),
}

impl From<&str> for ElementCode {
    fn from(s: &str) -> Self {
        ElementCode::Scalar(s.to_string())
    }
}

pub(super) fn decode(field: &Field, code: &ElementCode) -> Result<FieldElement, FieldError> {
    match code {
        ElementCode::Scalar(s) => parse_expr(field, s),
        ElementCode::Vector(v) => {
            let Some(base) = field.base() else {
                return match v.as_slice() {
                    [single] => decode(field, single),
                    _ => Err(FieldError::Parse {
                        input: format!("{v:?}"),
                        reason: "prime-field elements take a single coefficient".into(),
                    }),
                };
            };
            if v.len() > field.top_degree() {
                return Err(FieldError::Parse {
                    input: format!("{v:?}"),
                    reason: format!("expected at most {} coefficients", field.top_degree()),
                });
            }
            let n = base.degree();
            let ring = field.prime();
            let mut t = Vec::with_capacity(field.degree());
            for c in v {
                let e = decode(base, c)?;
                t.extend(e.c);
            }
            t.resize(field.degree(), super::ScalarRing::zero(&ring));
            debug_assert_eq!(t.len(), n * field.top_degree());
            Ok(field.from_tower_coords(&t))
        }
    }
}

pub(super) fn encode(e: &FieldElement) -> ElementCode {
    match e.field.base() {
        None => ElementCode::Scalar(e.c[0].to_string()),
        Some(_) => ElementCode::Vector(
            e.base_coords()
                .unwrap()
                .iter()
                .map(encode)
                .collect(),
        ),
    }
}

pub(super) fn display(e: &FieldElement, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    let field = &e.field;
    match field.base() {
        None => write!(f, "{}", e.c[0]),
        Some(base) if base.base().is_none() => {
            let mut wrote = false;
            for (i, c) in e.c.iter().enumerate().rev() {
                let (neg, mag) = split_sign(c);
                if is_zero_coef(c) {
                    continue;
                }
                if wrote {
                    write!(f, " {} ", if neg { '-' } else { '+' })?;
                } else if neg {
                    write!(f, "-")?;
                }
                let unit = mag == "1";
                match (i, unit) {
                    (0, _) => write!(f, "{mag}")?,
                    (1, true) => write!(f, "z")?,
                    (1, false) => write!(f, "{mag}*z")?,
                    (_, true) => write!(f, "z^{i}")?,
                    (_, false) => write!(f, "{mag}*z^{i}")?,
                }
                wrote = true;
            }
            if !wrote {
                write!(f, "0")?;
            }
            Ok(())
        }
        Some(_) => write!(
            f,
            "{}",
            serde_json::to_string(&encode(e)).map_err(|_| fmt::Error)?
        ),
    }
}

fn is_zero_coef(c: &Coef) -> bool {
    match c {
        Coef::Q(q) => q.is_zero(),
        Coef::P(v) => *v == 0,
    }
}

fn split_sign(c: &Coef) -> (bool, String) {
    match c {
        Coef::Q(q) if q.is_negative() => (true, (-q).to_string()),
        _ => (false, c.to_string()),
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(BigInt),
    Z,
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<Tok>, String> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        match ch {
            ' ' | '\t' => i += 1,
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                out.push(Tok::Num(digits.parse().map_err(|e| format!("{e}"))?));
            }
            'z' => {
                out.push(Tok::Z);
                i += 1;
            }
            '+' | '-' | '*' | '/' | '^' | '(' | ')' => {
                out.push(Tok::Op(ch));
                i += 1;
            }
            _ => return Err(format!("unexpected character `{ch}`")),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    field: &'a Field,
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Op(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<FieldElement, String> {
        let mut acc = self.term()?;
        loop {
            if self.eat('+') {
                acc = &acc + &self.term()?;
            } else if self.eat('-') {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<FieldElement, String> {
        let mut acc = self.unary()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.unary()?;
            } else if self.eat('/') {
                let d = self.unary()?;
                acc = acc.checked_div(&d).map_err(|e| e.to_string())?;
            } else if matches!(self.peek(), Some(Tok::Z) | Some(Tok::Op('('))) {
                // implicit product, as in `2z` or `3(z+1)`
                acc = &acc * &self.unary()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<FieldElement, String> {
        if self.eat('-') {
            return Ok(-self.unary()?);
        }
        if self.eat('+') {
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<FieldElement, String> {
        let base = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            let Some(Tok::Num(n)) = self.peek().cloned() else {
                return Err("expected an integer exponent".into());
            };
            self.pos += 1;
            let e: i64 = i64::try_from(&n).map_err(|_| "exponent too large".to_string())?;
            return base
                .powi(if neg { -e } else { e })
                .map_err(|e| e.to_string());
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<FieldElement, String> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(self.field.from_bigint(&n))
            }
            Some(Tok::Z) => {
                self.pos += 1;
                self.field
                    .generator()
                    .ok_or_else(|| "`z` is not defined in a prime field".to_string())
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let v = self.expr()?;
                if !self.eat(')') {
                    return Err("missing `)`".into());
                }
                Ok(v)
            }
            Some(t) => Err(format!("unexpected token {t:?}")),
            None => Err("unexpected end of input".into()),
        }
    }
}

pub(super) fn parse_expr(field: &Field, s: &str) -> Result<FieldElement, FieldError> {
    let err = |reason: String| FieldError::Parse {
        input: s.to_string(),
        reason,
    };
    let toks = tokenize(s).map_err(err)?;
    if toks.is_empty() {
        return Err(err("empty expression".into()));
    }
    let mut p = Parser {
        field,
        toks,
        pos: 0,
    };
    let v = p.expr().map_err(err)?;
    if p.pos != p.toks.len() {
        return Err(err("trailing input".into()));
    }
    Ok(v)
}
