//! Line-based text formats.
//!
//! | extension | content |
//! |-----------|---------|
//! | `.rot`    | a plane map as edges plus a cyclic dart order per vertex |
//! | `.flatw`  | a host map, `LAMBDA`, `TAU` and one certificate per guest edge |
//! | `.cemb`   | a planarization, its crossing vertices and one trail per edge |
//! | `.draw`   | vertex coordinates and one polyline per edge, as exact rationals |
//!
//! `#` starts a comment; blank lines are ignored everywhere.

pub mod cemb;
pub mod draw;
pub mod flatw;
pub mod rot;

use std::str::FromStr;

use crate::error::{ParseError, ParseResult};

pub use cemb::{parse_cemb, write_cemb};
pub use draw::{parse_draw, write_draw};
pub use flatw::{parse_flatw, write_flatw, FlatwFile};
pub use rot::{parse_rot, write_rot};

/// Which format a text is in, guessed from its content.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Rot,
    Flatw,
    Cemb,
    Draw,
    Json,
}

pub fn detect(text: &str) -> Kind {
    let mut lines = Lines::new(text);
    let first = lines.peek().map(|(_, l)| l.to_string());
    match first.as_deref() {
        Some(l) if l.starts_with('{') => return Kind::Json,
        Some(l) if l.starts_with("V ") || l.starts_with("P ") => return Kind::Draw,
        _ => {}
    }
    let mut kind = Kind::Rot;
    for (_, l) in lines.by_ref() {
        let head = l.split_whitespace().next().unwrap_or("");
        match head {
            "TAU" | "LAMBDA" | "EDGE" => return Kind::Flatw,
            "X" | "TRAIL" => kind = Kind::Cemb,
            _ => {}
        }
    }
    kind
}

/// Significant lines with their 1-based numbers.
pub(crate) struct Lines<'a> {
    inner: std::iter::Peekable<Box<dyn Iterator<Item = (usize, &'a str)> + 'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    pub(crate) fn new(text: &'a str) -> Self {
        let it: Box<dyn Iterator<Item = (usize, &'a str)> + 'a> = Box::new(
            text.lines()
                .enumerate()
                .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
                .filter(|(_, l)| !l.is_empty()),
        );
        Lines {
            inner: it.peekable(),
            last: 0,
        }
    }

    pub(crate) fn peek(&mut self) -> Option<(usize, &'a str)> {
        self.inner.peek().copied()
    }

    pub(crate) fn expect(&mut self, what: &str) -> ParseResult<(usize, &'a str)> {
        self.next()
            .ok_or_else(|| ParseError::Truncated(format!("expected {what} after line {}", self.last)))
    }

    pub(crate) fn finish(mut self) -> ParseResult<()> {
        match self.next() {
            None => Ok(()),
            Some((n, l)) => Err(ParseError::at(n, format!("unexpected line `{l}`"))),
        }
    }
}

impl<'a> Iterator for Lines<'a> {
    type Item = (usize, &'a str);

    fn next(&mut self) -> Option<Self::Item> {
        let item = self.inner.next();
        if let Some((n, _)) = item {
            self.last = n;
        }
        item
    }
}

pub(crate) fn number<T: FromStr>(line: usize, token: &str) -> ParseResult<T> {
    token
        .parse()
        .map_err(|_| ParseError::at(line, format!("`{token}` is not a valid number")))
}

pub(crate) fn numbers<T: FromStr>(line: usize, text: &str) -> ParseResult<Vec<T>> {
    text.split_whitespace().map(|t| number(line, t)).collect()
}

/// Splits `KEYWORD index: rest` into `(index, rest)`.
pub(crate) fn labelled<'a>(line: usize, text: &'a str, keyword: &str) -> ParseResult<(usize, &'a str)> {
    let rest = text
        .strip_prefix(keyword)
        .ok_or_else(|| ParseError::at(line, format!("expected `{keyword}`")))?;
    let (label, body) = rest
        .split_once(':')
        .ok_or_else(|| ParseError::at(line, "missing `:`"))?;
    Ok((number(line, label.trim())?, body.trim()))
}

pub(crate) fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|t| t.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
