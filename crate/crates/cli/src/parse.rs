//! Expression syntax.
//!
//! ```text
//! sum     := product ('+' product)*
//! product := power ('*' power)*
//! power   := atom ('^' natural)?
//! atom    := literal | variable | '(' sum ')'
//! literal := '-'? digits ('.' digits | '/' digits)? | '-inf'
//! ```
//!
//! `+` is `⊕` (max) and `*` is `⊗` (plus). Variables are either `x`, `y`,
//! `z` or indexed `x1`, `X2`, ...; one expression uses one style.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use tropical_core::{MaxPlus, Polynomial, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based character column.
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at column {}: {}", self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// How numeric literals are read.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Convention {
    /// Literals are log-domain values: `a ⊗ b = a + b`.
    Log,
    /// Literals are non-negative reals under `(max, ×)`; each is replaced by
    /// its logarithm in `base`, which must be rational.
    Classical { base: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Literal(MaxPlus),
    Variable(usize),
    Add(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

impl Expr {
    /// Number of variables needed: one past the largest index.
    pub fn arity(&self) -> usize {
        match self {
            Expr::Literal(_) => 0,
            Expr::Variable(i) => i + 1,
            Expr::Add(a, b) | Expr::Mul(a, b) => a.arity().max(b.arity()),
            Expr::Pow(a, _) => a.arity(),
        }
    }

    pub fn to_polynomial(&self, arity: usize) -> Polynomial<MaxPlus> {
        match self {
            Expr::Literal(c) => Polynomial::constant(arity, c.clone()),
            Expr::Variable(i) => Polynomial::variable(arity, *i).expect("arity covers the expression"),
            Expr::Add(a, b) => a.to_polynomial(arity).add(&b.to_polynomial(arity)).expect("same arity"),
            Expr::Mul(a, b) => a.to_polynomial(arity).mul(&b.to_polynomial(arity)).expect("same arity"),
            Expr::Pow(a, k) => a.to_polynomial(arity).pow(*k),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Token {
    Number(String),
    NegInf,
    Ident(String),
    Plus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |column: usize, message: String| ParseError { column, message };
    while i < chars.len() {
        let c = chars[i];
        let column = i + 1;
        match c {
            _ if c.is_whitespace() => {
                i += 1;
                continue;
            }
            '+' => out.push((column, Token::Plus)),
            '*' => out.push((column, Token::Star)),
            '^' => out.push((column, Token::Caret)),
            '(' => out.push((column, Token::Open)),
            ')' => out.push((column, Token::Close)),
            '-' | '0'..='9' | '.' => {
                let start = i;
                if c == '-' {
                    i += 1;
                    if chars[i..].starts_with(&['i', 'n', 'f']) {
                        i += 3;
                        if chars.get(i).is_some_and(|c| c.is_alphanumeric()) {
                            return Err(err(column, "malformed literal".into()));
                        }
                        out.push((column, Token::NegInf));
                        continue;
                    }
                    if !chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
                        return Err(err(column, "expected a number or 'inf' after '-'".into()));
                    }
                }
                let mut seen_sep = false;
                while let Some(&d) = chars.get(i) {
                    if d.is_ascii_digit() {
                        i += 1;
                    } else if (d == '.' || d == '/') && !seen_sep {
                        seen_sep = true;
                        i += 1;
                        if !chars.get(i).is_some_and(|c| c.is_ascii_digit()) {
                            return Err(err(i + 1, format!("expected digits after '{d}'")));
                        }
                    } else {
                        break;
                    }
                }
                let literal: String = chars[start..i].iter().collect();
                if literal.starts_with('.') || literal.starts_with("-.") {
                    return Err(err(column, "malformed literal".into()));
                }
                if chars.get(i).is_some_and(|c| c.is_alphabetic()) {
                    return Err(err(i + 1, "missing '*' between a literal and a variable".into()));
                }
                out.push((column, Token::Number(literal)));
                continue;
            }
            _ if c.is_ascii_alphabetic() => {
                let start = i;
                while chars.get(i).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    i += 1;
                }
                out.push((column, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            _ => return Err(err(column, format!("unexpected character '{c}'"))),
        }
        i += 1;
    }
    Ok(out)
}

/// Exact value of a decimal, fraction or integer literal.
fn literal_value(text: &str) -> Option<Rational> {
    if let Some((n, d)) = text.split_once('/') {
        let d: BigInt = d.parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n.parse().ok()?, d));
    }
    if let Some((whole, frac)) = text.split_once('.') {
        let negative = whole.starts_with('-');
        let digits: BigInt = format!("{}{}", whole.trim_start_matches('-'), frac).parse().ok()?;
        let scale = BigInt::from(10).pow(frac.len() as u32);
        let v = Rational::new(digits, scale);
        return Some(if negative { -v } else { v });
    }
    Some(Rational::from_integer(text.parse().ok()?))
}

fn rational_pow(base: &Rational, exp: i64) -> Rational {
    let magnitude = (0..exp.unsigned_abs()).fold(Rational::one(), |acc, _| acc * base);
    if exp < 0 {
        magnitude.recip()
    } else {
        magnitude
    }
}

/// `log_base(v)` when it is a rational with denominator at most 64.
pub fn rational_log(v: &Rational, base: &Rational) -> Option<Rational> {
    if !v.is_positive() || !base.is_positive() || base.is_one() {
        return None;
    }
    if v.is_one() {
        return Some(Rational::zero());
    }
    let ln = |r: &Rational| -> Option<f64> {
        let (n, d) = (r.numer().to_f64()?, r.denom().to_f64()?);
        Some(n.ln() - d.ln())
    };
    let ratio = ln(v)? / ln(base)?;
    for q in 1..=64i64 {
        let p = (ratio * q as f64).round() as i64;
        if p != 0 && rational_pow(v, q) == rational_pow(base, p) {
            return Some(Rational::new(p.into(), q.into()));
        }
    }
    None
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Style {
    Letters,
    Indexed,
}

struct Parser<'a> {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
    convention: &'a Convention,
    style: Option<Style>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.column(), message: message.into() })
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.product()?;
        while self.peek() == Some(&Token::Plus) {
            self.pos += 1;
            acc = Expr::Add(Box::new(acc), Box::new(self.product()?));
        }
        Ok(acc)
    }

    fn product(&mut self) -> Result<Expr, ParseError> {
        let mut acc = self.power()?;
        while self.peek() == Some(&Token::Star) {
            self.pos += 1;
            acc = Expr::Mul(Box::new(acc), Box::new(self.power()?));
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.peek() != Some(&Token::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let Some(Token::Number(n)) = self.peek().cloned() else {
            return self.error("exponent must be a natural number");
        };
        let Ok(k) = n.parse::<u32>() else {
            return self.error(format!("exponent must be a natural number, found '{n}'"));
        };
        self.pos += 1;
        if self.peek() == Some(&Token::Caret) {
            return self.error("chained exponents need parentheses");
        }
        Ok(Expr::Pow(Box::new(base), k))
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let Some(token) = self.peek().cloned() else {
            return self.error("unexpected end of input");
        };
        let expr = match token {
            Token::Open => {
                self.pos += 1;
                let inner = self.sum()?;
                if self.peek() != Some(&Token::Close) {
                    return self.error("expected ')'");
                }
                inner
            }
            Token::Number(text) => Expr::Literal(self.literal(&text)?),
            Token::NegInf => match self.convention {
                Convention::Log => Expr::Literal(MaxPlus::bottom()),
                Convention::Classical { .. } => {
                    return self.error("'-inf' is not a classical value; write 0 for the zero element")
                }
            },
            Token::Ident(name) => Expr::Variable(self.variable(&name)?),
            other => return self.error(format!("unexpected {}", describe(&other))),
        };
        self.pos += 1;
        Ok(expr)
    }

    fn literal(&self, text: &str) -> Result<MaxPlus, ParseError> {
        let Some(v) = literal_value(text) else {
            return self.error(format!("malformed literal '{text}'"));
        };
        match self.convention {
            Convention::Log => Ok(MaxPlus::finite(v)),
            Convention::Classical { base } => {
                if v.is_zero() {
                    return Ok(MaxPlus::bottom());
                }
                match rational_log(&v, base) {
                    Some(l) => Ok(MaxPlus::finite(l)),
                    None => self.error(format!("{v} is not a rational power of the base {base}")),
                }
            }
        }
    }

    fn variable(&mut self, name: &str) -> Result<usize, ParseError> {
        let (style, index) = match name {
            "x" => (Style::Letters, 0),
            "y" => (Style::Letters, 1),
            "z" => (Style::Letters, 2),
            _ => {
                let digits = name.strip_prefix('x').or_else(|| name.strip_prefix('X'));
                match digits.and_then(|d| d.parse::<usize>().ok()).filter(|&i| i >= 1) {
                    Some(i) if !digits.unwrap().starts_with('0') => (Style::Indexed, i - 1),
                    _ => return self.error(format!("unknown variable '{name}'")),
                }
            }
        };
        match self.style {
            Some(s) if s != style => self.error("cannot mix x, y, z with indexed variables"),
            _ => {
                self.style = Some(style);
                Ok(index)
            }
        }
    }
}

fn describe(token: &Token) -> String {
    match token {
        Token::Number(n) => format!("number '{n}'"),
        Token::NegInf => "'-inf'".into(),
        Token::Ident(s) => format!("'{s}'"),
        Token::Plus => "'+'".into(),
        Token::Star => "'*'".into(),
        Token::Caret => "'^'".into(),
        Token::Open => "'('".into(),
        Token::Close => "')'".into(),
    }
}

pub fn parse(text: &str, convention: &Convention) -> Result<Expr, ParseError> {
    let tokens = tokenize(text)?;
    let mut parser = Parser { tokens, pos: 0, end: text.chars().count() + 1, convention, style: None };
    let expr = parser.sum()?;
    if let Some(t) = parser.peek().cloned() {
        return parser.error(format!("unexpected {}", describe(&t)));
    }
    Ok(expr)
}

/// Parses every text and embeds them at their common arity.
pub fn parse_all(texts: &[&str], convention: &Convention) -> Result<Vec<Polynomial<MaxPlus>>, ParseError> {
    let exprs = texts.iter().map(|t| parse(t, convention)).collect::<Result<Vec<_>, _>>()?;
    let arity = exprs.iter().map(Expr::arity).max().unwrap_or(0).max(1);
    Ok(exprs.iter().map(|e| e.to_polynomial(arity)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tropical_core::Exponent;

    fn p(text: &str) -> Polynomial<MaxPlus> {
        parse_all(&[text], &Convention::Log).unwrap().remove(0)
    }

    fn term(e: &[u32], c: i64) -> (Exponent, MaxPlus) {
        (Exponent::new(e.to_vec()), MaxPlus::from_int(c))
    }

    #[test]
    fn documented_examples() {
        assert_eq!(p("0*x^2 + 3*x + 4"), Polynomial::from_terms(1, [term(&[2], 0), term(&[1], 3), term(&[0], 4)]).unwrap());
        assert_eq!(
            p("(x + 0)*(y + 0)"),
            Polynomial::from_terms(2, [term(&[1, 1], 0), term(&[1, 0], 0), term(&[0, 1], 0), term(&[0, 0], 0)]).unwrap()
        );
        assert_eq!(p("x + -inf"), p("x"));
    }

    #[test]
    fn precedence() {
        assert_eq!(p("1 + 2*x^2"), p("1 + (2*(x^2))"));
        assert_eq!(p("2*x^2"), Polynomial::from_terms(1, [term(&[2], 2)]).unwrap());
        assert_eq!(p("(2*x)^2"), Polynomial::from_terms(1, [term(&[2], 4)]).unwrap());
    }

    #[test]
    fn literals_are_exact() {
        let c = |t: &str| p(t).coefficient(&Exponent::new(vec![0]));
        assert_eq!(c("0.25"), MaxPlus::finite(Rational::new(1.into(), 4.into())));
        assert_eq!(c("-1.5"), MaxPlus::finite(Rational::new((-3).into(), 2.into())));
        assert_eq!(c("-6/4"), MaxPlus::finite(Rational::new((-3).into(), 2.into())));
        assert!(p("-inf").is_zero());
    }

    #[test]
    fn indexed_variables() {
        assert_eq!(p("x1 + X3").arity(), 3);
        assert_eq!(p("y").arity(), 2);
        let err = parse("x + x2", &Convention::Log).unwrap_err();
        assert!(err.message.contains("mix"));
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse("x + * y", &Convention::Log).unwrap_err();
        assert_eq!(err.column, 5);
        assert!(parse("x^1.5", &Convention::Log).is_err());
        assert!(parse("x^-1", &Convention::Log).is_err());
        assert!(parse("w", &Convention::Log).unwrap_err().message.contains("unknown variable"));
        assert!(parse("(x + 1", &Convention::Log).is_err());
        assert!(parse("3x", &Convention::Log).is_err());
        assert!(parse("1/0", &Convention::Log).is_err());
        assert!(parse("", &Convention::Log).is_err());
        assert!(parse("x0", &Convention::Log).is_err());
    }

    #[test]
    fn classical_convention() {
        let ten = Convention::Classical { base: Rational::from_integer(10.into()) };
        let q = parse_all(&["100*x + 0.1 + 0"], &ten).unwrap().remove(0);
        assert_eq!(q, Polynomial::from_terms(1, [term(&[1], 2), term(&[0], -1)]).unwrap());
        let four = Convention::Classical { base: Rational::from_integer(4.into()) };
        let r = parse_all(&["2"], &four).unwrap().remove(0);
        assert_eq!(r.coefficient(&Exponent::new(vec![0])), MaxPlus::finite(Rational::new(1.into(), 2.into())));
        assert!(parse("3", &ten).is_err());
        assert!(parse("-inf", &ten).is_err());
        assert!(parse("-2", &ten).is_err());
    }

    #[test]
    fn printing_round_trips() {
        for text in ["0*x^2 + 3*x + 4", "(x + -1/2)*(y + 2)^2", "x1*x2*x3*x4 + 7"] {
            let q = p(text);
            let again = p(&q.to_string()).with_arity(q.arity()).unwrap();
            assert_eq!(again, q);
        }
    }
}
