//! Text syntax for Mahler equations.
//!
//! ```text
//! equation := sum "=" sum
//! sum      := product (("+" | "-") product)*
//! product  := factor ("*" factor)*
//! factor   := "-" factor | atom ["^" integer]
//! atom     := number | "z" | "F" "(" "z" ["^" integer] ")" | "(" sum ")"
//! number   := integer ["/" integer]
//! ```
//!
//! Both sides are expanded and collected into `sum_e a_e(z) F(z^e)`; the
//! result must be linear and homogeneous in `F`. The radix is the smallest
//! `k` whose powers cover every exponent `e`.

use std::collections::BTreeMap;
use std::fmt::Write;

use mahler_core::algebra::{parse_rat, Poly};
use mahler_core::mahler::MahlerEquation;
use thiserror::Error;

/// Largest exponent accepted on `z` or inside `F(z^e)`.
const MAX_EXPONENT: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DslError {
    #[error("syntax error at offset {position}: expected {}, found {found}", expected.join(" or "))]
    Syntax {
        position: usize,
        expected: Vec<String>,
        found: String,
    },
    #[error("F-arguments use exponents that are not powers of one radix: {0:?}")]
    InconsistentRadix(Vec<u64>),
    #[error("{0}")]
    MissingEndpointTerm(String),
    #[error("terms without F do not cancel; the equation must be homogeneous")]
    Inhomogeneous,
    #[error("product of two F terms at offset {0}; the equation must be linear in F")]
    NonLinear(usize),
    #[error("exponent at offset {0} is too large")]
    ExponentTooLarge(usize),
}

/// A parsed equation and how its radix was chosen.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedEquation {
    pub equation: MahlerEquation,
    /// Other radices that also cover every exponent (e.g. 4 when only
    /// `F(z^4)` and `F(z^16)` occur). The smallest one is used.
    pub alternative_radices: Vec<usize>,
}

pub fn parse_equation(text: &str) -> Result<MahlerEquation, DslError> {
    Ok(parse_equation_detailed(text, None)?.equation)
}

/// Parses with the radix forced when `radix` is given, inferred otherwise.
pub fn parse_equation_detailed(
    text: &str,
    radix: Option<usize>,
) -> Result<ParsedEquation, DslError> {
    let mut p = Parser::new(text)?;
    let lhs = p.sum()?;
    p.expect(&Token::Eq)?;
    let rhs = p.sum()?;
    p.expect(&Token::End)?;
    let collected = lhs.sub(rhs);
    if !collected.free.is_zero() {
        return Err(DslError::Inhomogeneous);
    }
    let terms: BTreeMap<u64, Poly> = collected
        .terms
        .into_iter()
        .filter(|(_, a)| !a.is_zero())
        .collect();
    let exponents: Vec<u64> = terms.keys().copied().filter(|&e| e > 1).collect();
    let (k, alternative_radices) = match radix {
        Some(k) => (k, Vec::new()),
        None => infer_radix(&exponents)?,
    };
    if k < 2 {
        return Err(DslError::InconsistentRadix(exponents));
    }
    if !terms.contains_key(&1) {
        return Err(DslError::MissingEndpointTerm(
            "the coefficient of F(z) vanishes".into(),
        ));
    }
    let mut coeffs: Vec<Poly> = vec![Poly::zero()];
    for (e, a) in terms {
        let j = log_exact(e, k as u64).ok_or_else(|| DslError::InconsistentRadix(exponents.clone()))?;
        if coeffs.len() <= j {
            coeffs.resize(j + 1, Poly::zero());
        }
        coeffs[j] = a;
    }
    let equation = MahlerEquation::new(k, coeffs)
        .map_err(|e| DslError::MissingEndpointTerm(e.to_string()))?;
    Ok(ParsedEquation {
        equation,
        alternative_radices,
    })
}

/// Prints an equation in a form [`parse_equation`] reads back identically
/// (with the radix forced when `k` is itself a perfect power).
pub fn format_equation(eq: &MahlerEquation) -> String {
    let mut out = String::new();
    for (j, a) in eq.coeffs().iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        if !out.is_empty() {
            out.push_str(" + ");
        }
        if *a != Poly::one() {
            let _ = write!(out, "({a})*");
        }
        match j {
            0 => out.push_str("F(z)"),
            _ => {
                let _ = write!(out, "F(z^{})", eq.power(j));
            }
        }
    }
    out.push_str(" = 0");
    out
}

fn log_exact(mut e: u64, k: u64) -> Option<usize> {
    let mut j = 0;
    while e > 1 {
        if !e.is_multiple_of(k) {
            return None;
        }
        e /= k;
        j += 1;
    }
    Some(j)
}

/// `(b, m)` with `e = b^m` and `b` not a perfect power.
fn perfect_power_root(e: u64) -> (u64, u32) {
    for m in (2..=63u32).rev() {
        let b = (e as f64).powf(1.0 / m as f64).round() as u64;
        for cand in b.saturating_sub(1).max(2)..=b + 1 {
            if cand.checked_pow(m) == Some(e) {
                return (cand, m);
            }
        }
    }
    (e, 1)
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn infer_radix(exponents: &[u64]) -> Result<(usize, Vec<usize>), DslError> {
    if exponents.is_empty() {
        return Ok((2, Vec::new()));
    }
    let roots: Vec<(u64, u32)> = exponents.iter().map(|&e| perfect_power_root(e)).collect();
    let base = roots[0].0;
    if roots.iter().any(|&(b, _)| b != base) {
        return Err(DslError::InconsistentRadix(exponents.to_vec()));
    }
    let g = roots.iter().fold(0, |acc, &(_, m)| gcd(acc, m));
    let alternatives = (2..=g)
        .filter(|t| g % t == 0)
        .map(|t| base.pow(t) as usize)
        .collect();
    Ok((base as usize, alternatives))
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(String),
    Z,
    F,
    LParen,
    RParen,
    Plus,
    Minus,
    Star,
    Caret,
    Eq,
    End,
}

impl Token {
    fn describe(&self) -> String {
        match self {
            Token::Number(s) => format!("number {s}"),
            Token::Z => "'z'".into(),
            Token::F => "'F'".into(),
            Token::LParen => "'('".into(),
            Token::RParen => "')'".into(),
            Token::Plus => "'+'".into(),
            Token::Minus => "'-'".into(),
            Token::Star => "'*'".into(),
            Token::Caret => "'^'".into(),
            Token::Eq => "'='".into(),
            Token::End => "end of input".into(),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, DslError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i + 1 < bytes.len() && bytes[i] == b'/' && bytes[i + 1].is_ascii_digit() {
                    i += 1;
                    while i < bytes.len() && bytes[i].is_ascii_digit() {
                        i += 1;
                    }
                }
                out.push((start, Token::Number(text[start..i].to_string())));
                continue;
            }
            b'z' => Token::Z,
            b'F' => Token::F,
            b'(' => Token::LParen,
            b')' => Token::RParen,
            b'+' => Token::Plus,
            b'-' => Token::Minus,
            b'*' => Token::Star,
            b'^' => Token::Caret,
            b'=' => Token::Eq,
            _ => {
                let found = text[start..].chars().next().unwrap_or('?');
                return Err(DslError::Syntax {
                    position: start,
                    expected: vec!["a number, 'z', 'F', an operator or a parenthesis".into()],
                    found: format!("{found:?}"),
                });
            }
        };
        i += 1;
        out.push((start, tok));
    }
    out.push((text.len(), Token::End));
    Ok(out)
}

/// `free(z) + sum_e terms[e](z) F(z^e)`.
#[derive(Clone, Debug, Default)]
struct Linear {
    free: Poly,
    terms: BTreeMap<u64, Poly>,
}

impl Linear {
    fn constant(p: Poly) -> Self {
        Linear {
            free: p,
            terms: BTreeMap::new(),
        }
    }

    fn has_f(&self) -> bool {
        !self.terms.is_empty()
    }

    fn add(mut self, other: Linear) -> Linear {
        self.free = &self.free + &other.free;
        for (e, a) in other.terms {
            let slot = self.terms.entry(e).or_insert_with(Poly::zero);
            *slot = &*slot + &a;
        }
        self
    }

    fn neg(self) -> Linear {
        Linear {
            free: -self.free,
            terms: self.terms.into_iter().map(|(e, a)| (e, -a)).collect(),
        }
    }

    fn sub(self, other: Linear) -> Linear {
        self.add(other.neg())
    }

    fn scale(self, p: &Poly) -> Linear {
        Linear {
            free: &self.free * p,
            terms: self.terms.into_iter().map(|(e, a)| (e, &a * p)).collect(),
        }
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn new(text: &str) -> Result<Self, DslError> {
        Ok(Parser {
            tokens: tokenize(text)?,
            pos: 0,
        })
    }

    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &[&str]) -> DslError {
        DslError::Syntax {
            position: self.offset(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found: self.peek().describe(),
        }
    }

    fn expect(&mut self, t: &Token) -> Result<(), DslError> {
        if self.peek() == t {
            self.bump();
            Ok(())
        } else {
            Err(self.error(&[&t.describe()]))
        }
    }

    fn sum(&mut self) -> Result<Linear, DslError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Token::Plus => {
                    self.bump();
                    acc = acc.add(self.product()?);
                }
                Token::Minus => {
                    self.bump();
                    acc = acc.sub(self.product()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<Linear, DslError> {
        let mut acc = self.factor()?;
        while *self.peek() == Token::Star {
            let at = self.offset();
            self.bump();
            let rhs = self.factor()?;
            acc = match (acc.has_f(), rhs.has_f()) {
                (true, true) => return Err(DslError::NonLinear(at)),
                (false, _) => rhs.scale(&acc.free),
                (true, false) => acc.scale(&rhs.free),
            };
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Linear, DslError> {
        if *self.peek() == Token::Minus {
            self.bump();
            return Ok(self.factor()?.neg());
        }
        let base = self.atom()?;
        if *self.peek() != Token::Caret {
            return Ok(base);
        }
        let at = self.offset();
        self.bump();
        let n = self.exponent()?;
        if n == 1 {
            return Ok(base);
        }
        if base.has_f() {
            return Err(DslError::NonLinear(at));
        }
        let mut acc = Poly::one();
        let mut sq = base.free;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
            if acc.degree().unwrap_or(0) as u64 > MAX_EXPONENT {
                return Err(DslError::ExponentTooLarge(at));
            }
        }
        Ok(Linear::constant(acc))
    }

    fn exponent(&mut self) -> Result<u64, DslError> {
        let at = self.offset();
        match self.peek().clone() {
            Token::Number(s) if !s.contains('/') => {
                self.bump();
                match s.parse::<u64>() {
                    Ok(n) if n <= MAX_EXPONENT => Ok(n),
                    _ => Err(DslError::ExponentTooLarge(at)),
                }
            }
            _ => Err(self.error(&["a nonnegative integer exponent"])),
        }
    }

    fn atom(&mut self) -> Result<Linear, DslError> {
        match self.peek().clone() {
            Token::Number(s) => {
                let at = self.offset();
                self.bump();
                let r = parse_rat(&s).ok_or(DslError::Syntax {
                    position: at,
                    expected: vec!["a nonzero denominator".into()],
                    found: s.clone(),
                })?;
                Ok(Linear::constant(Poly::constant(r)))
            }
            Token::Z => {
                self.bump();
                Ok(Linear::constant(Poly::z()))
            }
            Token::LParen => {
                self.bump();
                let inner = self.sum()?;
                self.expect(&Token::RParen)?;
                Ok(inner)
            }
            Token::F => {
                self.bump();
                self.expect(&Token::LParen)?;
                self.expect(&Token::Z)?;
                let e = if *self.peek() == Token::Caret {
                    self.bump();
                    self.exponent()?
                } else {
                    1
                };
                if e == 0 {
                    return Err(self.error(&["a positive exponent of z inside F"]));
                }
                self.expect(&Token::RParen)?;
                let mut terms = BTreeMap::new();
                terms.insert(e, Poly::one());
                Ok(Linear {
                    free: Poly::zero(),
                    terms,
                })
            }
            _ => Err(self.error(&["a number", "'z'", "'F'", "'('"])),
        }
    }
}
