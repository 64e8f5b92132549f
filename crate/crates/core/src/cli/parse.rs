//! Recursive-descent parser for bundle expressions.
//!
//! ```text
//! expr    := factor { "*" factor }
//! factor  := primary { "(" integer ")" }
//! primary := "O" | "U" | "dual" "(" expr ")" | "(" expr ")"
//! ```
//!
//! Whitespace is ignored. Error offsets are byte offsets into the input.

use crate::bbw::BundleExpr;
use crate::error::{Error, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, c: char) -> Result<()> {
        match self.peek() {
            Some(x) if x == c => {
                self.pos += 1;
                Ok(())
            }
            Some(x) => self.error(format!("expected `{c}`, found `{x}`")),
            None => self.error(format!("expected `{c}`, found end of input")),
        }
    }

    fn expr(&mut self) -> Result<BundleExpr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some('*') {
            self.pos += 1;
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            BundleExpr::Tensor(factors)
        })
    }

    fn factor(&mut self) -> Result<BundleExpr> {
        let mut e = self.primary()?;
        while self.peek() == Some('(') {
            self.pos += 1;
            let k = self.integer()?;
            self.expect(')')?;
            e = e.twist(k);
        }
        Ok(e)
    }

    fn primary(&mut self) -> Result<BundleExpr> {
        match self.peek() {
            Some('O') => {
                self.pos += 1;
                Ok(BundleExpr::O)
            }
            Some('U') => {
                self.pos += 1;
                Ok(BundleExpr::U)
            }
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some('d') if self.src[self.pos..].starts_with("dual") => {
                self.pos += 4;
                self.expect('(')?;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e.dual())
            }
            Some(c) => self.error(format!("unexpected `{c}`; expected O, U, dual( or (")),
            None => self.error("unexpected end of input"),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.src[start..];
        let sign_len = usize::from(rest.starts_with(['-', '+']));
        let digits = rest[sign_len..]
            .chars()
            .take_while(char::is_ascii_digit)
            .count();
        if digits == 0 {
            self.pos = start + sign_len;
            return self.error("expected an integer twist");
        }
        let text = &rest[..sign_len + digits];
        let value = text.parse::<i64>().or_else(|_| self.error("twist out of range"))?;
        self.pos = start + sign_len + digits;
        Ok(value)
    }
}

/// Parses a bundle expression such as `dual(U)*U(-1)`.
pub fn parse_bundle_expr(text: &str) -> Result<BundleExpr> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    match p.peek() {
        None => Ok(e),
        Some(c) => p.error(format!("unexpected trailing `{c}`")),
    }
}
