//! Text grammar shared by polynomials and divided-power forms.
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := unary (("*" | "/") unary)*
//! unary  := "-" unary | power
//! power  := atom ("^" integer)?
//! atom   := integer | "t" | variable ("[" integer "]")? | "(" expr ")"
//! ```
//!
//! Polynomials use the variables `x y z w`; dual forms use `X Y Z W`, where
//! `X[n]` is the divided power and `X^n` the ordinary power. `t` is the
//! generator of a quadratic extension field. Division is only by nonzero
//! constants.

use num_bigint::BigInt;

use crate::field::FieldDescriptor;
use crate::invsys::{DividedForm, DualMonomial};
use crate::poly::Polynomial;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(s: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let bytes: Vec<(usize, char)> = s.char_indices().collect();
    let mut i = 0;
    while i < bytes.len() {
        let (pos, c) = bytes[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                i += 1;
            }
            let digits: String = bytes[start..i].iter().map(|&(_, c)| c).collect();
            out.push((pos, Tok::Num(digits.parse().expect("ascii digits"))));
        } else if c.is_ascii_alphabetic() {
            out.push((pos, Tok::Ident(c)));
            i += 1;
        } else if "+-*/^()[]".contains(c) {
            out.push((pos, Tok::Op(c)));
            i += 1;
        } else {
            return Err(ParseError { pos, msg: format!("unexpected character {c:?}") });
        }
    }
    Ok(out)
}

#[derive(Debug, Clone)]
enum Expr {
    Num(BigInt),
    Gen,
    Var { name: char, divided: Option<u32> },
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>, usize),
    Neg(Box<Expr>),
    Pow(Box<Expr>, u32, usize),
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { pos: self.pos(), msg: msg.into() })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn integer(&mut self) -> Result<u32, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                u32::try_from(&n).or_else(|_| self.err("exponent too large"))
            }
            _ => self.err("expected an integer"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.peek() == Some(&Tok::Op('/')) {
                let pos = self.pos();
                self.at += 1;
                lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?), pos);
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() == Some(&Tok::Op('^')) {
            let pos = self.pos();
            self.at += 1;
            let e = self.integer()?;
            return Ok(Expr::Pow(Box::new(base), e, pos));
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.at += 1;
                Ok(Expr::Num(n))
            }
            Some(Tok::Ident('t')) => {
                self.at += 1;
                Ok(Expr::Gen)
            }
            Some(Tok::Ident(c)) => {
                self.at += 1;
                let divided = if self.eat('[') {
                    let n = self.integer()?;
                    if !self.eat(']') {
                        return self.err("expected ']'");
                    }
                    Some(n)
                } else {
                    None
                };
                Ok(Expr::Var { name: c, divided })
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.err("expected ')'");
                }
                Ok(e)
            }
            Some(t) => self.err(format!("unexpected token {t:?}")),
            None => self.err("unexpected end of input"),
        }
    }
}

fn parse_expr(s: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(s)?;
    let mut p = Parser { toks, at: 0, end: s.len() };
    let e = p.expr()?;
    if p.at != p.toks.len() {
        return p.err("trailing input");
    }
    Ok(e)
}

fn var_index(c: char, names: &str) -> Option<usize> {
    names.find(c)
}

fn eval_poly(e: &Expr, field: FieldDescriptor) -> Result<Polynomial, ParseError> {
    let at0 = |msg: String| ParseError { pos: 0, msg };
    Ok(match e {
        Expr::Num(n) => Polynomial::constant(field.from_bigint(n)),
        Expr::Gen => Polynomial::constant(
            field
                .generator()
                .ok_or_else(|| at0(format!("'t' needs an extension field, not {field}")))?,
        ),
        Expr::Var { name, divided } => {
            if divided.is_some() {
                return Err(at0(format!("divided power on polynomial variable {name}")));
            }
            let i = var_index(*name, "xyzw").ok_or_else(|| at0(format!("unknown variable {name:?}")))?;
            Polynomial::var(field, i)
        }
        Expr::Add(a, b) => &eval_poly(a, field)? + &eval_poly(b, field)?,
        Expr::Sub(a, b) => &eval_poly(a, field)? - &eval_poly(b, field)?,
        Expr::Mul(a, b) => &eval_poly(a, field)? * &eval_poly(b, field)?,
        Expr::Neg(a) => -&eval_poly(a, field)?,
        Expr::Pow(a, n, _) => eval_poly(a, field)?.pow(*n),
        Expr::Div(a, b, pos) => {
            let d = eval_poly(b, field)?;
            let c = match d.degree() {
                Some(0) => d.constant_term(),
                _ => return Err(ParseError { pos: *pos, msg: "division by a non-constant or zero".into() }),
            };
            let inv = c
                .inv()
                .map_err(|_| ParseError { pos: *pos, msg: format!("divisor vanishes in {field}") })?;
            eval_poly(a, field)?.scale(&inv)
        }
    })
}

fn eval_dual(e: &Expr, field: FieldDescriptor) -> Result<DividedForm, ParseError> {
    let at0 = |msg: String| ParseError { pos: 0, msg };
    Ok(match e {
        Expr::Num(n) => DividedForm::constant(field.from_bigint(n)),
        Expr::Gen => DividedForm::constant(
            field
                .generator()
                .ok_or_else(|| at0(format!("'t' needs an extension field, not {field}")))?,
        ),
        Expr::Var { name, divided } => {
            let i = var_index(*name, "XYZW").ok_or_else(|| at0(format!("unknown dual variable {name:?}")))?;
            let mut e = [0u16; 4];
            e[i] = divided.unwrap_or(1) as u16;
            DividedForm::term(field.one(), DualMonomial(e))
        }
        Expr::Add(a, b) => eval_dual(a, field)?.add(&eval_dual(b, field)?),
        Expr::Sub(a, b) => eval_dual(a, field)?.add(&eval_dual(b, field)?.neg()),
        Expr::Mul(a, b) => eval_dual(a, field)?.dp_multiply(&eval_dual(b, field)?),
        Expr::Neg(a) => eval_dual(a, field)?.neg(),
        Expr::Pow(a, n, pos) => {
            if field.factorial(*n).is_zero() {
                return Err(ParseError {
                    pos: *pos,
                    msg: format!("ordinary power ^{n} has no divided-power form in {field} ({n}! = 0)"),
                });
            }
            let base = eval_dual(a, field)?;
            let mut acc = DividedForm::constant(field.one());
            for _ in 0..*n {
                acc = acc.dp_multiply(&base);
            }
            acc
        }
        Expr::Div(a, b, pos) => {
            let d = eval_dual(b, field)?;
            let c = d
                .as_constant()
                .ok_or_else(|| ParseError { pos: *pos, msg: "division by a non-constant".into() })?;
            let inv = c
                .inv()
                .map_err(|_| ParseError { pos: *pos, msg: format!("divisor vanishes in {field}") })?;
            eval_dual(a, field)?.scale(&inv)
        }
    })
}

/// Parses a polynomial in `x, y, z, w`.
pub fn parse_poly(s: &str, field: FieldDescriptor) -> Result<Polynomial, ParseError> {
    eval_poly(&parse_expr(s)?, field)
}

/// Parses several polynomials separated by commas.
pub fn parse_poly_list(s: &str, field: FieldDescriptor) -> Result<Vec<Polynomial>, ParseError> {
    s.split(',').map(|p| parse_poly(p, field)).collect()
}

/// Parses an ideal file: one polynomial per line, `#` starts a comment.
pub fn parse_ideal_file(s: &str, field: FieldDescriptor) -> Result<Vec<Polynomial>, ParseError> {
    let mut out = Vec::new();
    for (lineno, line) in s.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let p = parse_poly(body, field)
            .map_err(|e| ParseError { pos: e.pos, msg: format!("line {}: {}", lineno + 1, e.msg) })?;
        out.push(p);
    }
    Ok(out)
}

/// Parses an element of the divided-power ring in `X, Y, Z, W`.
pub fn parse_dual(s: &str, field: FieldDescriptor) -> Result<DividedForm, ParseError> {
    eval_dual(&parse_expr(s)?, field)
}

/// Parses a scalar written in the polynomial grammar, e.g. `-3/2` or `2*t - 1`.
pub fn parse_scalar(s: &str, field: FieldDescriptor) -> Result<crate::field::Scalar, ParseError> {
    let p = parse_poly(s, field)?;
    match p.degree() {
        None => Ok(field.zero()),
        Some(0) => Ok(p.constant_term()),
        _ => Err(ParseError { pos: 0, msg: format!("{s:?} is not a constant") }),
    }
}

pub(crate) fn write_dual_monomial(f: &mut std::fmt::Formatter<'_>, m: &DualMonomial) -> std::fmt::Result {
    let mut first = true;
    for (i, &d) in m.0.iter().enumerate() {
        if d == 0 {
            continue;
        }
        if !first {
            write!(f, "*")?;
        }
        first = false;
        let name = ['X', 'Y', 'Z', 'W'][i];
        if d == 1 {
            write!(f, "{name}")?;
        } else {
            write!(f, "{name}[{d}]")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: FieldDescriptor = FieldDescriptor::Rationals;

    #[test]
    fn round_trip() {
        for s in ["3*x^2*y - 1/2*z*w", "-x*y + w^3", "x^2*y^3*z - 7", "0"] {
            let p = parse_poly(s, Q).unwrap();
            assert_eq!(parse_poly(&p.to_string(), Q).unwrap(), p);
        }
        let e = FieldDescriptor::eisenstein();
        let p = parse_poly("3*x^2*y - 1/2*z*w + t*x", e).unwrap();
        assert_eq!(p.to_string(), "3*x^2*y - 1/2*z*w + t*x");
        assert_eq!(parse_poly(&p.to_string(), e).unwrap(), p);
    }

    #[test]
    fn errors_carry_positions() {
        let err = parse_poly("x + * y", Q).unwrap_err();
        assert_eq!(err.pos, 4);
        assert!(parse_poly("x / y", Q).is_err());
        assert!(parse_poly("t*x", Q).is_err());
        assert!(parse_poly("v", Q).is_err());
        assert!(parse_poly("(x + y", Q).is_err());
    }

    #[test]
    fn ideal_file_comments() {
        let gens = parse_ideal_file("# header\nx^2\n\nx*y  # trailing\n", Q).unwrap();
        assert_eq!(gens.len(), 2);
    }

    #[test]
    fn dual_powers_convert() {
        let f = parse_dual("X^3", Q).unwrap();
        assert_eq!(f, parse_dual("6*X[3]", Q).unwrap());
        let gf2 = FieldDescriptor::prime(2).unwrap();
        assert!(parse_dual("X^2*Y", gf2).is_err());
        assert!(parse_dual("X[3] + X*Y*Z", gf2).is_ok());
    }
}
