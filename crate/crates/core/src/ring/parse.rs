//! Text grammar for polynomials and generator lists.
//!
//! ```text
//! list   := poly (',' poly)*
//! poly   := ['+'|'-'] term (('+'|'-') term)*
//! term   := factor (['*'] factor)*
//! factor := atom ['^' integer]
//! atom   := integer ['/' integer] | name | '(' poly ')'
//! ```
//!
//! e.g. `x^2*y - 3/2*z^3`. Errors carry one-based line and column.

use super::{Monomial, Polynomial, RingContext};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(String),
    Name(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
    End,
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(text: &str) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let (start_line, start_col) = (line, column);
        if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        }
        let tok = if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            column += i - start;
            Tok::Int(chars[start..i].iter().collect())
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            column += i - start;
            Tok::Name(chars[start..i].iter().collect())
        } else {
            let tok = match c {
                '+' => Tok::Plus,
                '-' | '\u{2212}' => Tok::Minus,
                '*' => Tok::Star,
                '/' => Tok::Slash,
                '^' => Tok::Caret,
                '(' => Tok::LParen,
                ')' => Tok::RParen,
                ',' => Tok::Comma,
                other => {
                    return Err(Error::Parse { line, column, message: format!("unexpected character {other:?}") })
                }
            };
            i += 1;
            column += 1;
            tok
        };
        out.push(Spanned { tok, line: start_line, column: start_col });
    }
    out.push(Spanned { tok: Tok::End, line, column });
    Ok(out)
}

/// Identifiers occurring in `text`, in order of first appearance.
pub fn identifiers(text: &str) -> Result<Vec<String>> {
    let mut seen: Vec<String> = Vec::new();
    for t in tokenize(text)? {
        if let Tok::Name(n) = t.tok {
            if !seen.contains(&n) {
                seen.push(n);
            }
        }
    }
    Ok(seen)
}

struct Parser<'a> {
    toks: Vec<Spanned>,
    pos: usize,
    ring: &'a RingContext,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn bump(&mut self) -> Spanned {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Parse { line: t.line, column: t.column, message: message.into() })
    }

    fn list<C: Scalar>(&mut self) -> Result<Vec<Polynomial<C>>> {
        let mut out = vec![self.poly()?];
        while *self.peek() == Tok::Comma {
            self.bump();
            out.push(self.poly()?);
        }
        match self.peek() {
            Tok::End => Ok(out),
            other => self.error(format!("unexpected {other:?}")),
        }
    }

    fn poly<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let n = self.ring.num_vars();
        let mut acc = Polynomial::zero(n);
        let mut negate = false;
        match self.peek() {
            Tok::Plus => {
                self.bump();
            }
            Tok::Minus => {
                self.bump();
                negate = true;
            }
            _ => {}
        }
        loop {
            let term = self.term::<C>()?;
            acc = if negate { &acc - &term } else { &acc + &term };
            match self.peek() {
                Tok::Plus => negate = false,
                Tok::Minus => negate = true,
                _ => return Ok(acc),
            }
            self.bump();
        }
    }

    fn term<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let mut acc = self.factor::<C>()?;
        loop {
            match self.peek() {
                Tok::Star => {
                    self.bump();
                }
                Tok::Int(_) | Tok::Name(_) | Tok::LParen => {}
                _ => return Ok(acc),
            }
            let f = self.factor::<C>()?;
            acc = &acc * &f;
        }
    }

    fn factor<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let base = self.atom::<C>()?;
        if *self.peek() != Tok::Caret {
            return Ok(base);
        }
        self.bump();
        match self.peek().clone() {
            Tok::Int(digits) => match digits.parse::<u32>() {
                Ok(e) if e <= 10_000 => {
                    self.bump();
                    Ok(base.pow(e))
                }
                _ => self.error(format!("exponent {digits} too large")),
            },
            other => self.error(format!("expected an exponent, found {other:?}")),
        }
    }

    fn atom<C: Scalar>(&mut self) -> Result<Polynomial<C>> {
        let n = self.ring.num_vars();
        match self.peek().clone() {
            Tok::Int(num) => {
                self.bump();
                let mut value = C::from_decimal(&num).expect("digits");
                if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.peek().clone() {
                        Tok::Int(den) => {
                            let d = C::from_decimal(&den).expect("digits");
                            if d.is_zero() {
                                return self.error("zero denominator");
                            }
                            self.bump();
                            value /= d;
                        }
                        other => return self.error(format!("expected a denominator, found {other:?}")),
                    }
                }
                Ok(Polynomial::constant(n, value))
            }
            Tok::Name(name) => match self.ring.index_of(&name) {
                Some(i) => {
                    self.bump();
                    Ok(Polynomial::var(n, i))
                }
                None => self.error(format!("unknown variable {name:?} in {}", self.ring)),
            },
            Tok::LParen => {
                self.bump();
                let inner = self.poly()?;
                if *self.peek() != Tok::RParen {
                    return self.error("expected ')'");
                }
                self.bump();
                Ok(inner)
            }
            other => self.error(format!("expected a number, variable or '(', found {other:?}")),
        }
    }
}

pub fn parse_polynomial<C: Scalar>(text: &str, ring: &RingContext) -> Result<Polynomial<C>> {
    let mut parser = Parser { toks: tokenize(text)?, pos: 0, ring };
    let p = parser.poly()?;
    match parser.peek() {
        Tok::End => Ok(p),
        other => parser.error(format!("unexpected {other:?}")),
    }
}

/// Parses a comma-separated list of polynomials.
pub fn parse_polynomial_list<C: Scalar>(text: &str, ring: &RingContext) -> Result<Vec<Polynomial<C>>> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    Parser { toks: tokenize(text)?, pos: 0, ring }.list()
}

/// Parses a single power-product such as `x^2*y`; a leading coefficient is
/// not allowed.
pub fn parse_monomial(text: &str, ring: &RingContext) -> Result<Monomial> {
    let p: Polynomial<crate::Rational> = parse_polynomial(text, ring)?;
    match p.terms() {
        [t] if num_traits::One::is_one(&t.coeff) => Ok(t.mono.clone()),
        _ => Err(Error::Parse { line: 1, column: 1, message: format!("{:?} is not a monomial", text.trim()) }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn ring() -> RingContext {
        RingContext::short(3).unwrap()
    }

    #[test]
    fn grammar_examples() {
        let f: Polynomial<Rational> = parse_polynomial("x^2*y - 3/2*z^3", &ring()).unwrap();
        assert_eq!(f.len(), 2);
        let g: Polynomial<Rational> = parse_polynomial("-(x - y)^2 + 2 x y", &ring()).unwrap();
        let h: Polynomial<Rational> = parse_polynomial("4*x*y - x^2 - y^2", &ring()).unwrap();
        assert_eq!(g, h);
        let list: Vec<Polynomial<Rational>> = parse_polynomial_list("x^2, x*y,\n y^2", &ring()).unwrap();
        assert_eq!(list.len(), 3);
        assert_eq!(parse_monomial("x*z^2", &ring()).unwrap(), Monomial::new([1, 0, 2]));
    }

    #[test]
    fn errors_report_position() {
        let err = parse_polynomial::<Rational>("x +\n  q^2", &ring()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, column: 3, .. }), "{err:?}");
        let err = parse_polynomial::<Rational>("x ^ y", &ring()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 5, .. }), "{err:?}");
        assert!(parse_polynomial::<Rational>("1/0", &ring()).is_err());
        assert!(parse_polynomial::<Rational>("x $ y", &ring()).is_err());
        assert!(parse_monomial("2*x", &ring()).is_err());
        assert!(parse_monomial("x + y", &ring()).is_err());
    }

    #[test]
    fn identifier_scan() {
        assert_eq!(identifiers("x1 + x3*x1").unwrap(), ["x1", "x3"]);
    }
}
