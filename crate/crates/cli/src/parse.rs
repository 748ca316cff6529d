//! Text expression grammar for elements of A and U.
//!
//! ```text
//! expr   := ['-'] term (('+' | '-') term)*
//! term   := power (['*'] power)*
//! power  := atom ['^' ['-'] int]
//! atom   := '(' expr ')' | number | i | q | s | name | D(int) | exp(expr, expr)
//! ```

use std::fmt;

use num_rational::BigRational;
use qroot_core::elem::{Elem, Monomial};
use qroot_core::envalg::{self, EnvMonomial};
use qroot_core::funalg::{self, FunMonomial};
use qroot_core::{Field, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Algebra {
    Fun,
    Env,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax { expected: Vec<&'static str> },
    UndefinedAtom(String),
    NegativePowerOfNilpotent,
    NotInvertible,
    NotScalar,
    Core(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at byte {}: ", self.offset)?;
        match &self.kind {
            ParseErrorKind::Syntax { expected } => write!(f, "syntax error, expected one of {}", expected.join(", ")),
            ParseErrorKind::UndefinedAtom(a) => write!(f, "undefined atom `{}`", a),
            ParseErrorKind::NegativePowerOfNilpotent => write!(f, "negative power of a nilpotent generator"),
            ParseErrorKind::NotInvertible => write!(f, "negative power of a non-invertible element"),
            ParseErrorKind::NotScalar => write!(f, "expected a scalar expression"),
            ParseErrorKind::Core(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    Comma,
}

/// Names that take a mandatory +/- suffix.
const SIGNED: [&str; 5] = ["eta", "z", "E", "Ecal", "eps"];

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k] as char;
        let start = k;
        if c.is_ascii_whitespace() {
            k += 1;
            continue;
        }
        if c.is_ascii_digit() {
            while k < b.len() && b[k].is_ascii_digit() {
                k += 1;
            }
            out.push((start, Tok::Num(src[start..k].to_string())));
            continue;
        }
        if c.is_ascii_alphabetic() {
            while k < b.len() && b[k].is_ascii_alphabetic() {
                k += 1;
            }
            let mut name = src[start..k].to_string();
            if SIGNED.contains(&name.as_str()) {
                if k < b.len() && (b[k] == b'+' || b[k] == b'-') {
                    name.push(b[k] as char);
                    k += 1;
                } else {
                    return Err(ParseError {
                        offset: k,
                        kind: ParseErrorKind::Syntax { expected: vec!["`+` or `-` suffix"] },
                    });
                }
            }
            out.push((start, Tok::Name(name)));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            ',' => Tok::Comma,
            '/' if k > 0 && b[k - 1].is_ascii_digit() => {
                k += 1;
                continue;
            }
            _ => {
                return Err(ParseError {
                    offset: k,
                    kind: ParseErrorKind::Syntax { expected: vec!["atom", "operator"] },
                })
            }
        };
        out.push((start, t));
        k += 1;
    }
    Ok(out)
}

struct Parser<'a> {
    src: &'a str,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    field: Field,
}

/// A parsed value: either side's element, or a pure scalar.
#[derive(Clone, Debug)]
enum Val {
    Fun(Elem<FunMonomial>),
    Env(Elem<EnvMonomial>),
}

impl Val {
    fn scalar(&self) -> Option<Scalar> {
        match self {
            Val::Fun(e) => scalar_of(e),
            Val::Env(e) => scalar_of(e),
        }
    }
}

fn scalar_of<M: Monomial>(e: &Elem<M>) -> Option<Scalar> {
    let f = e.field();
    let u = M::unit(f);
    if e.iter().all(|(m, _)| *m == u) {
        Some(e.coeff(&u))
    } else {
        None
    }
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.1)
    }

    fn offset(&self) -> usize {
        self.toks.get(self.pos).map(|t| t.0).unwrap_or(self.src.len())
    }

    fn err<T>(&self, expected: Vec<&'static str>) -> Result<T, ParseError> {
        Err(ParseError { offset: self.offset(), kind: ParseErrorKind::Syntax { expected } })
    }

    fn expect(&mut self, t: Tok, name: &'static str) -> Result<(), ParseError> {
        if self.peek() == Some(&t) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(vec![name])
        }
    }

    fn constant(&self, alg: Algebra, c: Scalar) -> Val {
        match alg {
            Algebra::Fun => Val::Fun(Elem::scalar(self.field, c)),
            Algebra::Env => Val::Env(Elem::scalar(self.field, c)),
        }
    }

    fn expr(&mut self, alg: Algebra) -> Result<Val, ParseError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let mut acc = self.term(alg)?;
        if neg {
            acc = neg_val(acc);
        }
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    let t = self.term(alg)?;
                    acc = add_val(acc, t);
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    let t = self.term(alg)?;
                    acc = add_val(acc, neg_val(t));
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_atom(&self) -> bool {
        matches!(self.peek(), Some(Tok::Num(_)) | Some(Tok::Name(_)) | Some(Tok::LParen))
    }

    fn term(&mut self, alg: Algebra) -> Result<Val, ParseError> {
        let mut acc = self.power(alg)?;
        loop {
            if self.peek() == Some(&Tok::Star) {
                self.pos += 1;
            } else if !self.starts_atom() {
                return Ok(acc);
            }
            let r = self.power(alg)?;
            acc = mul_val(acc, r);
        }
    }

    fn power(&mut self, alg: Algebra) -> Result<Val, ParseError> {
        let at = self.offset();
        let base = self.atom(alg)?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        let n: i64 = match self.peek() {
            Some(Tok::Num(s)) => {
                let v = s.parse().map_err(|_| ParseError {
                    offset: self.offset(),
                    kind: ParseErrorKind::Syntax { expected: vec!["integer exponent"] },
                })?;
                self.pos += 1;
                v
            }
            _ => return self.err(vec!["integer exponent"]),
        };
        let n = if neg { -n } else { n };
        pow_val(self.field, base, n).map_err(|kind| ParseError { offset: at, kind })
    }

    fn int_arg(&mut self) -> Result<i64, ParseError> {
        let neg = if self.peek() == Some(&Tok::Minus) {
            self.pos += 1;
            true
        } else {
            false
        };
        match self.peek() {
            Some(Tok::Num(s)) => {
                let v: i64 = s.parse().map_err(|_| ParseError {
                    offset: self.offset(),
                    kind: ParseErrorKind::Syntax { expected: vec!["integer"] },
                })?;
                self.pos += 1;
                Ok(if neg { -v } else { v })
            }
            _ => self.err(vec!["integer"]),
        }
    }

    fn scalar_arg(&mut self, alg: Algebra) -> Result<Scalar, ParseError> {
        let at = self.offset();
        let v = self.expr(alg)?;
        v.scalar().ok_or(ParseError { offset: at, kind: ParseErrorKind::NotScalar })
    }

    fn atom(&mut self, alg: Algebra) -> Result<Val, ParseError> {
        let f = self.field;
        let at = self.offset();
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err(vec!["atom"]),
        };
        self.pos += 1;
        match tok {
            Tok::LParen => {
                let v = self.expr(alg)?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(v)
            }
            Tok::Num(n) => {
                let mut text = n;
                // n/d with the slash directly attached
                let bytes = self.src.as_bytes();
                let end = at + text.len();
                if end < bytes.len() && bytes[end] == b'/' {
                    let d_at = end + 1;
                    match self.toks.get(self.pos) {
                        Some((o, Tok::Num(d))) if *o == d_at => {
                            text = format!("{}/{}", text, d);
                            self.pos += 1;
                        }
                        _ => {
                            return Err(ParseError {
                                offset: d_at,
                                kind: ParseErrorKind::Syntax { expected: vec!["denominator"] },
                            })
                        }
                    }
                }
                let r: BigRational = text.parse().map_err(|_| ParseError {
                    offset: at,
                    kind: ParseErrorKind::Syntax { expected: vec!["nonzero denominator"] },
                })?;
                Ok(self.constant(alg, f.rat(r)))
            }
            Tok::Name(name) => self.named(alg, &name, at),
            _ => {
                self.pos -= 1;
                self.err(vec!["atom"])
            }
        }
    }

    fn named(&mut self, alg: Algebra, name: &str, at: usize) -> Result<Val, ParseError> {
        let f = self.field;
        let undefined = || ParseError { offset: at, kind: ParseErrorKind::UndefinedAtom(name.to_string()) };
        match name {
            "i" => return Ok(self.constant(alg, f.i())),
            "q" => return Ok(self.constant(alg, f.q_pow(1))),
            "s" => return Ok(self.constant(alg, f.q_half(1))),
            _ => {}
        }
        match alg {
            Algebra::Fun => {
                let e = match name {
                    "eta+" => funalg::eta_plus(f),
                    "eta-" => funalg::eta_minus(f),
                    "delta" => funalg::delta_pow(f, 1),
                    "z+" => funalg::z_plus(f),
                    "z-" => funalg::z_minus(f),
                    "rho" => funalg::rho(f),
                    "D" => {
                        self.expect(Tok::LParen, "`(`")?;
                        let k = self.int_arg()?;
                        self.expect(Tok::RParen, "`)`")?;
                        if f.p().is_none() {
                            return Err(ParseError {
                                offset: at,
                                kind: ParseErrorKind::Core("D(k) needs root-of-unity mode".into()),
                            });
                        }
                        funalg::dproj(f, k)
                    }
                    "exp" => {
                        self.expect(Tok::LParen, "`(`")?;
                        let a = self.scalar_arg(alg)?;
                        self.expect(Tok::Comma, "`,`")?;
                        let b = self.scalar_arg(alg)?;
                        self.expect(Tok::RParen, "`)`")?;
                        funalg::exp_token(f, a, b)
                    }
                    _ => return Err(undefined()),
                };
                Ok(Val::Fun(e))
            }
            Algebra::Env => {
                let e = match name {
                    "E+" => envalg::e_plus(f),
                    "E-" => envalg::e_minus(f),
                    "K" => envalg::k_pow(f, 1),
                    "Ecal+" => envalg::ecal_plus(f),
                    "Ecal-" => envalg::ecal_minus(f),
                    "eps+" => envalg::eps(f, true),
                    "eps-" => envalg::eps(f, false),
                    "C" => envalg::casimir(f),
                    _ => return Err(undefined()),
                };
                Ok(Val::Env(e))
            }
        }
    }
}

fn neg_val(v: Val) -> Val {
    match v {
        Val::Fun(e) => Val::Fun(e.neg()),
        Val::Env(e) => Val::Env(e.neg()),
    }
}

fn add_val(a: Val, b: Val) -> Val {
    match (a, b) {
        (Val::Fun(x), Val::Fun(y)) => Val::Fun(x.add(&y)),
        (Val::Env(x), Val::Env(y)) => Val::Env(x.add(&y)),
        _ => unreachable!("one algebra per parse"),
    }
}

fn mul_val(a: Val, b: Val) -> Val {
    match (a, b) {
        (Val::Fun(x), Val::Fun(y)) => Val::Fun(x.mul(&y)),
        (Val::Env(x), Val::Env(y)) => Val::Env(x.mul(&y)),
        _ => unreachable!("one algebra per parse"),
    }
}

fn inverse_of<M: Monomial>(e: &Elem<M>, invert: impl Fn(&M) -> Option<Elem<M>>) -> Option<Elem<M>> {
    if e.len() != 1 {
        return None;
    }
    let (m, c) = e.iter().next()?;
    let ci = c.inv().ok()?;
    Some(invert(m)?.scale(&ci))
}

fn pow_val(f: Field, v: Val, n: i64) -> Result<Val, ParseErrorKind> {
    if n >= 0 {
        return Ok(match v {
            Val::Fun(e) => Val::Fun(e.pow(n as u32)),
            Val::Env(e) => Val::Env(e.pow(n as u32)),
        });
    }
    let k = (-n) as u32;
    match v {
        Val::Fun(e) => {
            if e.iter().any(|(m, _)| m.np > 0 || m.nm > 0) {
                return Err(ParseErrorKind::NegativePowerOfNilpotent);
            }
            let inv = inverse_of(&e, |m| {
                if m.np == 0 && m.nm == 0 && m.zp == 0 && m.zm == 0 {
                    let (a, b) = m.freqs(f);
                    Some(funalg::delta_pow(f, -m.kd).mul(&funalg::exp_token(f, -a, -b)))
                } else {
                    None
                }
            })
            .ok_or(ParseErrorKind::NotInvertible)?;
            Ok(Val::Fun(inv.pow(k)))
        }
        Val::Env(e) => {
            let inv = inverse_of(&e, |m| {
                if m.sp == 0 && m.tm == 0 && m.mp == 0 && m.nm == 0 {
                    Some(envalg::k_pow(f, -m.kk))
                } else {
                    None
                }
            })
            .ok_or(ParseErrorKind::NotInvertible)?;
            Ok(Val::Env(inv.pow(k)))
        }
    }
}

fn run(src: &str, f: Field, alg: Algebra) -> Result<Val, ParseError> {
    let toks = lex(src)?;
    let mut p = Parser { src, toks, pos: 0, field: f };
    if p.toks.is_empty() {
        return p.err(vec!["expression"]);
    }
    let v = p.expr(alg)?;
    if p.pos < p.toks.len() {
        return p.err(vec!["operator", "end of input"]);
    }
    Ok(v)
}

pub fn parse_fun(src: &str, f: Field) -> Result<Elem<FunMonomial>, ParseError> {
    match run(src, f, Algebra::Fun)? {
        Val::Fun(e) => Ok(e),
        Val::Env(_) => unreachable!(),
    }
}

pub fn parse_env(src: &str, f: Field) -> Result<Elem<EnvMonomial>, ParseError> {
    match run(src, f, Algebra::Env)? {
        Val::Env(e) => Ok(e),
        Val::Fun(_) => unreachable!(),
    }
}

/// A scalar expression, e.g. `1/2`, `-q-q^2`, `(1+i)*s`.
pub fn parse_scalar(src: &str, f: Field) -> Result<Scalar, ParseError> {
    let v = run(src, f, Algebra::Fun)?;
    v.scalar().ok_or(ParseError { offset: 0, kind: ParseErrorKind::NotScalar })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f = Field::Root(3);
        let e = parse_fun("eta- * eta+", f).unwrap();
        assert_eq!(e, funalg::eta_plus(f).mul(&funalg::eta_minus(f)).scale(&f.q_pow(2)));
        assert_eq!(parse_env("K^-1", f).unwrap(), envalg::k_pow(f, 2));
        assert_eq!(parse_fun("delta^-2 delta^2", f).unwrap(), Elem::one(f));
        let err = parse_fun("eta+^-1", f).unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::NegativePowerOfNilpotent);
        assert_eq!(err.offset, 0);
    }

    #[test]
    fn scalars_and_juxtaposition() {
        let f = Field::Root(5);
        let e = parse_fun("1/2 q^3 eta+ delta^-1 + i", f).unwrap();
        let want = funalg::eta_plus(f)
            .mul(&funalg::delta_pow(f, -1))
            .scale(&(&f.frac(1, 2) * &f.q_pow(3)))
            .add(&Elem::scalar(f, f.i()));
        assert_eq!(e, want);
        assert_eq!(parse_scalar("-(q + q^4)", f).unwrap(), -&(&f.q_pow(1) + &f.q_pow(4)));
        let x = parse_fun("exp(1/2, -1) z+", f).unwrap();
        assert_eq!(x, funalg::exp_token(f, f.frac(1, 2), f.int(-1)).mul(&funalg::z_plus(f)));
    }

    #[test]
    fn offsets() {
        let f = Field::Root(3);
        let e = parse_fun("eta+ + foo", f).unwrap_err();
        assert_eq!(e.offset, 7);
        assert!(matches!(e.kind, ParseErrorKind::UndefinedAtom(_)));
        let e = parse_env("E+ * (K", f).unwrap_err();
        assert_eq!(e.offset, 7);
        let e = parse_fun("eta", f).unwrap_err();
        assert_eq!(e.offset, 3);
        let e = parse_env("E+ )", f).unwrap_err();
        assert_eq!(e.offset, 3);
    }
}
