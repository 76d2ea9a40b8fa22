//! Polynomial expressions over the variables of an algebra.
//!
//! Grammar, with `^` binding tightest and unary minus allowed before any
//! factor:
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := '-' factor | atom ('^' integer)?
//! atom   := integer | variable | '(' expr ')'
//! ```

use thiserror::Error;
use tracelab_core::artinian::ArtinianAlgebra;
use tracelab_core::field::Field;
use tracelab_core::linalg::Vector;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at position {position} in `{input}`")]
pub struct ParseError {
    pub input: String,
    /// 0-based character offset.
    pub position: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    Open,
    Close,
}

fn tokenize(input: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let err = |position: usize, message: String| ParseError {
        input: input.to_string(),
        position,
        message,
    };
    let chars: Vec<char> = input.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let tok = match c {
            ' ' | '\t' => {
                i += 1;
                continue;
            }
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '^' => Token::Caret,
            '(' => Token::Open,
            ')' => Token::Close,
            d if d.is_ascii_digit() => {
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let text: String = chars[start..i].iter().collect();
                let n = text
                    .parse()
                    .map_err(|_| err(start, format!("integer `{text}` is too large")))?;
                out.push((start, Token::Int(n)));
                continue;
            }
            a if a.is_alphabetic() || a == '_' => {
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                out.push((start, Token::Ident(chars[start..i].iter().collect())));
                continue;
            }
            other => return Err(err(start, format!("unexpected character `{other}`"))),
        };
        out.push((start, tok));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, F: Field> {
    input: &'a str,
    tokens: Vec<(usize, Token)>,
    pos: usize,
    algebra: &'a ArtinianAlgebra<F>,
}

impl<F: Field> Parser<'_, F> {
    fn error(&self, message: impl Into<String>) -> ParseError {
        let position = self
            .tokens
            .get(self.pos)
            .map_or(self.input.chars().count(), |t| t.0);
        ParseError {
            input: self.input.to_string(),
            position,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|t| &t.1)
    }

    fn eat(&mut self, tok: &Token) -> bool {
        if self.peek() == Some(tok) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Vector<F>, ParseError> {
        let alg = self.algebra;
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = alg.add(&acc, &self.term()?);
            } else if self.eat(&Token::Minus) {
                acc = alg.sub(&acc, &self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Vector<F>, ParseError> {
        let mut acc = self.factor()?;
        while self.eat(&Token::Star) {
            acc = self.algebra.mul(&acc, &self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Vector<F>, ParseError> {
        if self.eat(&Token::Minus) {
            return Ok(self.algebra.neg(&self.factor()?));
        }
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            match self.peek() {
                Some(&Token::Int(n)) => {
                    let n = u32::try_from(n).map_err(|_| self.error("exponent too large"))?;
                    self.pos += 1;
                    Ok(self.algebra.pow(&base, n))
                }
                _ => Err(self.error("expected an exponent")),
            }
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Vector<F>, ParseError> {
        let alg = self.algebra;
        match self.peek().cloned() {
            Some(Token::Int(n)) => {
                let n = i64::try_from(n).map_err(|_| self.error("integer too large"))?;
                self.pos += 1;
                Ok(alg.scalar(alg.field().from_i64(n)))
            }
            Some(Token::Ident(name)) => {
                let j = alg
                    .var_names()
                    .iter()
                    .position(|v| *v == name)
                    .ok_or_else(|| self.error(format!("unknown variable `{name}`")))?;
                self.pos += 1;
                Ok(alg.var(j))
            }
            Some(Token::Open) => {
                self.pos += 1;
                let inner = self.expr()?;
                if !self.eat(&Token::Close) {
                    return Err(self.error("expected `)`"));
                }
                Ok(inner)
            }
            Some(_) => Err(self.error("expected a number, variable or `(`")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// Parses `expr` to its normal form over `algebra`.
pub fn parse_poly<F: Field>(expr: &str, algebra: &ArtinianAlgebra<F>) -> Result<Vector<F>, ParseError> {
    let tokens = tokenize(expr)?;
    let mut parser = Parser {
        input: expr,
        tokens,
        pos: 0,
        algebra,
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(parser.error("unexpected trailing input"));
    }
    Ok(value)
}

/// Parses a monomial such as `x^2*y` into an exponent vector over `vars`.
pub fn parse_monomial(expr: &str, vars: &[String]) -> Result<Vec<u32>, ParseError> {
    let tokens = tokenize(expr)?;
    let err = |position: usize, message: String| ParseError {
        input: expr.to_string(),
        position,
        message,
    };
    let end = expr.chars().count();
    let mut exps = vec![0u32; vars.len()];
    let mut i = 0;
    loop {
        let (pos, tok) = tokens.get(i).cloned().ok_or_else(|| err(end, "expected a variable".into()))?;
        let Token::Ident(name) = tok else {
            return Err(err(pos, "expected a variable".into()));
        };
        let j = vars
            .iter()
            .position(|v| *v == name)
            .ok_or_else(|| err(pos, format!("unknown variable `{name}`")))?;
        i += 1;
        let mut e = 1;
        if let Some((_, Token::Caret)) = tokens.get(i) {
            match tokens.get(i + 1) {
                Some(&(p, Token::Int(n))) => {
                    e = u32::try_from(n).map_err(|_| err(p, "exponent too large".into()))?;
                    i += 2;
                }
                Some(&(p, _)) => return Err(err(p, "expected an exponent".into())),
                None => return Err(err(end, "expected an exponent".into())),
            }
        }
        exps[j] += e;
        match tokens.get(i) {
            None => return Ok(exps),
            Some((_, Token::Star)) => i += 1,
            Some(&(p, _)) => return Err(err(p, "expected `*` or end of monomial".into())),
        }
    }
}
