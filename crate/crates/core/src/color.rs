//! Structured color values and the interning table that maps them to dense ids.
//!
//! Several constructions produce tuple-valued colors (the Mubayi-style coloring
//! uses `({x_i, y_i}, a_1, ..., a_t)`, product colorings nest other colors).
//! Colorings store dense [`ColorId`]s and keep the structured value in a
//! [`ColorTable`] so that verifiers run on integers while reports stay readable.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Dense index into a [`ColorTable`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColorId(pub u32);

impl ColorId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One component of a structured color.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Part {
    Int(i64),
    /// A one- or two-element integer set, stored as `lo <= hi`
    /// (`lo == hi` is the singleton).
    Set(i64, i64),
    /// A nested color, used by product colorings.
    Tuple(Vec<Part>),
}

impl Part {
    /// Builds a set component from two (possibly equal) values.
    pub fn set(a: i64, b: i64) -> Self {
        Part::Set(a.min(b), a.max(b))
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Part::Int(v) => Some(*v),
            _ => None,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::Int(v) => write!(f, "{v}"),
            Part::Set(a, b) if a == b => write!(f, "{{{a}}}"),
            Part::Set(a, b) => write!(f, "{{{a},{b}}}"),
            Part::Tuple(parts) => write_tuple(f, parts),
        }
    }
}

fn write_tuple(f: &mut fmt::Formatter<'_>, parts: &[Part]) -> fmt::Result {
    f.write_str("(")?;
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    f.write_str(")")
}

/// A structured color: a finite tuple of [`Part`]s.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub Vec<Part>);

impl Color {
    pub fn int(v: i64) -> Self {
        Color(vec![Part::Int(v)])
    }

    pub fn parts(&self) -> &[Part] {
        &self.0
    }

    /// Wraps the whole color as a single nested component.
    pub fn nested(&self) -> Part {
        Part::Tuple(self.0.clone())
    }
}

impl From<Vec<Part>> for Color {
    fn from(parts: Vec<Part>) -> Self {
        Color(parts)
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0.as_slice() {
            [Part::Int(v)] => write!(f, "{v}"),
            parts => write_tuple(f, parts),
        }
    }
}

impl FromStr for Color {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let color = match p.peek() {
            Some(b'(') => match p.part()? {
                Part::Tuple(parts) => Color(parts),
                _ => unreachable!(),
            },
            _ => Color(vec![p.part()?]),
        };
        if p.pos != p.s.len() {
            return Err(p.err("trailing characters"));
        }
        Ok(color)
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn err(&self, what: &str) -> Error {
        Error::Parse {
            line: 0,
            message: format!(
                "bad color `{}` at offset {}: {what}",
                String::from_utf8_lossy(self.s),
                self.pos
            ),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), Error> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn int(&mut self) -> Result<i64, Error> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .ok()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| self.err("expected integer"))
    }

    fn part(&mut self) -> Result<Part, Error> {
        match self.peek() {
            Some(b'{') => {
                self.pos += 1;
                let a = self.int()?;
                let b = if self.peek() == Some(b',') {
                    self.pos += 1;
                    self.int()?
                } else {
                    a
                };
                self.expect(b'}')?;
                Ok(Part::set(a, b))
            }
            Some(b'(') => {
                self.pos += 1;
                let mut parts = Vec::new();
                if self.peek() != Some(b')') {
                    loop {
                        parts.push(self.part()?);
                        if self.peek() == Some(b',') {
                            self.pos += 1;
                        } else {
                            break;
                        }
                    }
                }
                self.expect(b')')?;
                Ok(Part::Tuple(parts))
            }
            _ => Ok(Part::Int(self.int()?)),
        }
    }
}

/// Injective interning of [`Color`] values into contiguous [`ColorId`]s.
#[derive(Clone, Debug, Default)]
pub struct ColorTable {
    entries: Vec<Color>,
    index: HashMap<Color, ColorId>,
}

impl ColorTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// A table holding the integer colors `1..=r`, with `ColorId(c - 1)` for color `c`.
    pub fn integers(r: usize) -> Self {
        let mut t = Self::new();
        for c in 1..=r {
            t.intern(Color::int(c as i64));
        }
        t
    }

    pub fn intern(&mut self, color: Color) -> ColorId {
        if let Some(&id) = self.index.get(&color) {
            return id;
        }
        let id = ColorId(self.entries.len() as u32);
        self.entries.push(color.clone());
        self.index.insert(color, id);
        id
    }

    pub fn get(&self, color: &Color) -> Option<ColorId> {
        self.index.get(color).copied()
    }

    pub fn value(&self, id: ColorId) -> &Color {
        &self.entries[id.index()]
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (ColorId, &Color)> {
        self.entries
            .iter()
            .enumerate()
            .map(|(i, c)| (ColorId(i as u32), c))
    }
}

impl PartialEq for ColorTable {
    fn eq(&self, other: &Self) -> bool {
        self.entries == other.entries
    }
}

impl Eq for ColorTable {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interning_is_dense_and_injective() {
        let mut t = ColorTable::new();
        let a = t.intern(Color::int(7));
        let b = t.intern(Color(vec![Part::set(1, 0), Part::Int(1)]));
        let a2 = t.intern(Color::int(7));
        assert_eq!(a, ColorId(0));
        assert_eq!(b, ColorId(1));
        assert_eq!(a, a2);
        assert_eq!(t.len(), 2);
        assert_eq!(t.value(b).to_string(), "({0,1},1)");
    }

    #[test]
    fn display_parse_round_trip() {
        let samples = [
            Color::int(-3),
            Color(vec![Part::set(0, 1), Part::Int(1), Part::Int(0)]),
            Color(vec![Part::set(4, 4)]),
            Color(vec![
                Part::Tuple(vec![Part::Int(3), Part::Int(0)]),
                Part::Int(2),
                Part::Tuple(vec![Part::set(2, 5), Part::Int(1)]),
            ]),
        ];
        for c in samples {
            let s = c.to_string();
            assert_eq!(s.parse::<Color>().unwrap(), c, "{s}");
        }
    }

    #[test]
    fn malformed_colors_are_rejected() {
        for bad in ["", "(", "{1,2", "(1,,2)", "1x", "{a}"] {
            assert!(bad.parse::<Color>().is_err(), "{bad}");
        }
    }
}
