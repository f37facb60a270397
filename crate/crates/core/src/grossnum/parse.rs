//! Recursive-descent parser for gross-number literals.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | '+' unary | power
//! power  := atom ('^' unary)?
//! atom   := INTEGER | 'g' | '①' | '(' expr ')'
//! ```
//!
//! `^` is right-associative and binds tighter than unary minus, so
//! `-g^2` is `-(g^2)` and `2^-1` is `1/2`. Expressions are evaluated while
//! parsing, so the result is always canonical.

use std::str::FromStr;

use num_bigint::BigInt;

use super::{GrossError, GrossNumber};

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Int(BigInt),
    Grossone,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn syntax(offset: usize, message: impl Into<String>) -> GrossError {
    GrossError::Syntax {
        offset,
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, GrossError> {
    let mut tokens = Vec::new();
    let mut chars = text.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        let token = match c {
            c if c.is_whitespace() => continue,
            '0'..='9' => {
                let mut end = at + c.len_utf8();
                while let Some(&(i, d)) = chars.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + d.len_utf8();
                    chars.next();
                }
                Token::Int(text[at..end].parse().expect("digits"))
            }
            'g' | '①' => Token::Grossone,
            '+' => Token::Plus,
            '-' => Token::Minus,
            '*' => Token::Star,
            '/' => Token::Slash,
            '^' => Token::Caret,
            '(' => Token::LParen,
            ')' => Token::RParen,
            other => return Err(syntax(at, format!("unexpected character {other:?}"))),
        };
        tokens.push((at, token));
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(o, _)| *o)
    }

    fn eat(&mut self, token: &Token) -> bool {
        if self.peek() == Some(token) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<GrossNumber, GrossError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(&Token::Plus) {
                acc = &acc + &self.term()?;
            } else if self.eat(&Token::Minus) {
                acc = &acc - &self.term()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<GrossNumber, GrossError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(&Token::Star) {
                acc = &acc * &self.unary()?;
            } else if self.eat(&Token::Slash) {
                acc = acc.checked_div(&self.unary()?)?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<GrossNumber, GrossError> {
        if self.eat(&Token::Minus) {
            Ok(-self.unary()?)
        } else if self.eat(&Token::Plus) {
            self.unary()
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<GrossNumber, GrossError> {
        let base = self.atom()?;
        if self.eat(&Token::Caret) {
            let exponent = self.unary()?;
            base.pow(&exponent)
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<GrossNumber, GrossError> {
        let at = self.offset();
        let Some((_, token)) = self.tokens.get(self.pos).cloned() else {
            return Err(syntax(at, "unexpected end of input"));
        };
        self.pos += 1;
        match token {
            Token::Int(n) => Ok(GrossNumber::from_integer(n)),
            Token::Grossone => Ok(GrossNumber::grossone()),
            Token::LParen => {
                let inner = self.expr()?;
                if !self.eat(&Token::RParen) {
                    return Err(syntax(self.offset(), "expected ')'"));
                }
                Ok(inner)
            }
            other => Err(syntax(at, format!("unexpected token {other:?}"))),
        }
    }
}

/// Parse a gross-number literal such as `3*g^2 - 2*g + 1/2` or `2^(g+1)`.
pub fn parse(text: &str) -> Result<GrossNumber, GrossError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
        end: text.len(),
    };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(syntax(parser.offset(), "trailing input"));
    }
    Ok(value)
}

impl FromStr for GrossNumber {
    type Err = GrossError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse(s)
    }
}
