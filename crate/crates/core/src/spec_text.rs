//! Textual space descriptors.
//!
//! ```text
//! ci n=<int> [w=<int,...>] [d=<int,...>]
//! grass k=<int> n=<int>
//! product (<spec>) (<spec>)
//! bundle base=(<spec>) c1L=<int>
//! ```
//!
//! Tokens are whitespace separated. Every parse error carries the byte
//! offset where it was detected. The canonical rendering of a parsed
//! descriptor is the label of the space it builds.

use std::fmt;

use crate::error::{Error, Result};
use crate::spaces::{
    make_complete_intersection, make_grassmannian, make_p1_bundle_multiple, make_product,
    CompleteIntersectionSpec, GrassmannianSpec, Space,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpaceSpec {
    CompleteIntersection(CompleteIntersectionSpec),
    Grassmannian(GrassmannianSpec),
    Product(Box<SpaceSpec>, Box<SpaceSpec>),
    Bundle { base: Box<SpaceSpec>, multiple: i64 },
}

impl SpaceSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let mut parser = Parser { text, pos: 0 };
        let spec = parser.spec()?;
        parser.skip_ws();
        if parser.pos < text.len() {
            return Err(parser.error("unexpected trailing input"));
        }
        Ok(spec)
    }

    pub fn build(&self) -> Result<Space> {
        match self {
            SpaceSpec::CompleteIntersection(spec) => make_complete_intersection(spec),
            SpaceSpec::Grassmannian(spec) => make_grassmannian(spec),
            SpaceSpec::Product(a, b) => make_product(&a.build()?, &b.build()?),
            SpaceSpec::Bundle { base, multiple } => make_p1_bundle_multiple(&base.build()?, *multiple),
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceSpec::CompleteIntersection(spec) => f.write_str(&spec.label()),
            SpaceSpec::Grassmannian(spec) => f.write_str(&spec.label()),
            SpaceSpec::Product(a, b) => write!(f, "product ({a}) ({b})"),
            SpaceSpec::Bundle { base, multiple } => write!(f, "bundle base=({base}) c1L={multiple}"),
        }
    }
}

/// Parse and build in one step.
pub fn space_from_text(text: &str) -> Result<Space> {
    SpaceSpec::parse(text)?.build()
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { position: self.pos, message: message.into() }
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn word(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = self.rest();
        let len = rest
            .find(|c: char| c.is_whitespace() || c == '=' || c == '(' || c == ')')
            .unwrap_or(rest.len());
        if len == 0 {
            return Err(self.error("expected a keyword"));
        }
        self.pos += len;
        Ok(&rest[..len])
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected '{c}'")))
        }
    }

    fn spec(&mut self) -> Result<SpaceSpec> {
        let start = {
            self.skip_ws();
            self.pos
        };
        match self.word()? {
            "ci" => self.complete_intersection(),
            "grass" => self.grassmannian(),
            "product" => {
                let a = self.parenthesized()?;
                let b = self.parenthesized()?;
                Ok(SpaceSpec::Product(Box::new(a), Box::new(b)))
            }
            "bundle" => self.bundle(),
            other => {
                self.pos = start;
                Err(self.error(format!("unknown space kind '{other}'")))
            }
        }
    }

    fn parenthesized(&mut self) -> Result<SpaceSpec> {
        self.skip_ws();
        self.expect('(')?;
        let inner = self.spec()?;
        self.skip_ws();
        self.expect(')')?;
        Ok(inner)
    }

    /// `key=` with the key checked against `allowed`; returns the key and
    /// the offset where it began.
    fn key(&mut self, allowed: &[&str]) -> Result<Option<(&'a str, usize)>> {
        self.skip_ws();
        let start = self.pos;
        if self.rest().is_empty() || self.rest().starts_with(')') {
            return Ok(None);
        }
        let key = self.word()?;
        if !allowed.contains(&key) {
            self.pos = start;
            return Err(self.error(format!("unexpected key '{key}', expected one of {}", allowed.join(", "))));
        }
        self.expect('=')?;
        Ok(Some((key, start)))
    }

    fn integer(&mut self) -> Result<i64> {
        let rest = self.rest();
        let len = rest
            .char_indices()
            .find(|&(i, c)| !(c.is_ascii_digit() || (i == 0 && c == '-')))
            .map_or(rest.len(), |(i, _)| i);
        let value = rest[..len]
            .parse::<i64>()
            .map_err(|_| self.error("expected an integer"))?;
        self.pos += len;
        Ok(value)
    }

    fn natural(&mut self) -> Result<u64> {
        let at = self.pos;
        let value = self.integer()?;
        u64::try_from(value).map_err(|_| Error::Parse { position: at, message: "expected a nonnegative integer".into() })
    }

    fn list(&mut self) -> Result<Vec<u64>> {
        let mut out = Vec::new();
        if self.rest().is_empty() || self.rest().starts_with(char::is_whitespace) || self.rest().starts_with(')') {
            return Ok(out);
        }
        loop {
            out.push(self.natural()?);
            if self.rest().starts_with(',') {
                self.pos += 1;
            } else {
                return Ok(out);
            }
        }
    }

    fn duplicate(&self, key: &str, at: usize) -> Error {
        Error::Parse { position: at, message: format!("duplicate key '{key}'") }
    }

    fn missing(&self, key: &str) -> Error {
        self.error(format!("missing key '{key}'"))
    }

    fn complete_intersection(&mut self) -> Result<SpaceSpec> {
        let (mut n, mut w, mut d) = (None, None, None);
        while let Some((key, at)) = self.key(&["n", "w", "d"])? {
            let slot_taken = match key {
                "n" => n.replace(self.natural()?).is_some(),
                "w" => w.replace(self.list()?).is_some(),
                _ => d.replace(self.list()?).is_some(),
            };
            if slot_taken {
                return Err(self.duplicate(key, at));
            }
        }
        let n = n.ok_or_else(|| self.missing("n"))? as usize;
        let weights = w.unwrap_or_else(|| vec![1; n + 1]);
        if weights.len() != n + 1 {
            return Err(self.error(format!("w lists {} weights, n={n} needs {}", weights.len(), n + 1)));
        }
        Ok(SpaceSpec::CompleteIntersection(CompleteIntersectionSpec::new(weights, d.unwrap_or_default())?))
    }

    fn grassmannian(&mut self) -> Result<SpaceSpec> {
        let (mut k, mut n) = (None, None);
        while let Some((key, at)) = self.key(&["k", "n"])? {
            let slot = if key == "k" { &mut k } else { &mut n };
            let value = self.natural()?;
            if slot.replace(value).is_some() {
                return Err(self.duplicate(key, at));
            }
        }
        let k = k.ok_or_else(|| self.missing("k"))? as usize;
        let n = n.ok_or_else(|| self.missing("n"))? as usize;
        Ok(SpaceSpec::Grassmannian(GrassmannianSpec::new(k, n)?))
    }

    fn bundle(&mut self) -> Result<SpaceSpec> {
        let (mut base, mut multiple) = (None, None);
        while let Some((key, at)) = self.key(&["base", "c1L"])? {
            let taken = if key == "base" {
                base.replace(self.parenthesized_here()?).is_some()
            } else {
                multiple.replace(self.integer()?).is_some()
            };
            if taken {
                return Err(self.duplicate(key, at));
            }
        }
        let base = base.ok_or_else(|| self.missing("base"))?;
        let multiple = multiple.ok_or_else(|| self.missing("c1L"))?;
        Ok(SpaceSpec::Bundle { base: Box::new(base), multiple })
    }

    fn parenthesized_here(&mut self) -> Result<SpaceSpec> {
        self.expect('(')?;
        let inner = self.spec()?;
        self.skip_ws();
        self.expect(')')?;
        Ok(inner)
    }
}
