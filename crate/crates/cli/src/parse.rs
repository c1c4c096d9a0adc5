//! Parser for Picard classes written as `(a; b1, b2, ..., br)`.

use thiserror::Error;
use ulrich_core::picard::PicardClass;

/// Parse failure at a 1-based character position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("malformed class at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor { chars: src.chars().collect(), pos: 0 }
    }

    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError { position: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn expect(&mut self, want: char) -> Result<(), ParseError> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.err(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.err(format!("expected `{want}`, found end of input"))),
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.peek(), Some('-' | '+')) {
            self.pos += 1;
        }
        let digits = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == digits {
            self.pos = start;
            return Err(match self.peek() {
                Some(c) => self.err(format!("expected an integer, found `{c}`")),
                None => self.err("expected an integer, found end of input"),
            });
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| ParseError { position: start + 1, message: format!("integer `{text}` out of range") })
    }
}

pub fn parse_class(src: &str) -> Result<PicardClass, ParseError> {
    let mut cur = Cursor::new(src);
    cur.expect('(')?;
    let a = cur.int()?;
    cur.expect(';')?;
    let mut b = Vec::new();
    cur.skip_ws();
    if cur.peek() != Some(')') {
        loop {
            b.push(cur.int()?);
            cur.skip_ws();
            match cur.peek() {
                Some(',') => cur.pos += 1,
                Some(')') => break,
                Some(c) => return Err(cur.err(format!("expected `,` or `)`, found `{c}`"))),
                None => return Err(cur.err("expected `,` or `)`, found end of input")),
            }
        }
    }
    cur.expect(')')?;
    cur.skip_ws();
    if let Some(c) = cur.peek() {
        return Err(cur.err(format!("unexpected `{c}` after the class")));
    }
    Ok(PicardClass::new(a, b))
}
