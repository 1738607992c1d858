//! Built-in lattices addressed by short tokens:
//!
//! ```text
//! ID := boolean:N | mo:N | o6 | d16
//!     | product(ID, ID, ...)
//!     | interval(ID, ELEM)        ELEM = label or index in ID
//! ```

use super::{boolean, direct_product, mo, o6, pasting, Oml, RawOml};
use crate::error::{Error, Result};

/// Lattices used by the test and acceptance suites. Everything here except
/// `o6` validates.
pub const CORPUS: &[&str] = &[
    "boolean:1",
    "boolean:2",
    "boolean:3",
    "boolean:4",
    "mo:1",
    "mo:2",
    "mo:3",
    "mo:4",
    "d16",
    "product(mo:2,boolean:1)",
    "product(boolean:1,mo:3)",
    "product(mo:2,mo:3)",
    "product(d16,boolean:1)",
    "product(mo:2,mo:2,boolean:1)",
    "interval(product(d16,boolean:1),(c',1))",
    "product(d16,mo:2)",
    "product(mo:3,mo:4,boolean:1)",
    "product(mo:4,mo:4,boolean:1)",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogId {
    Boolean(u32),
    Mo(usize),
    O6,
    D16,
    Product(Vec<CatalogId>),
    Interval(Box<CatalogId>, String),
}

impl std::fmt::Display for CatalogId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CatalogId::Boolean(n) => write!(f, "boolean:{n}"),
            CatalogId::Mo(n) => write!(f, "mo:{n}"),
            CatalogId::O6 => write!(f, "o6"),
            CatalogId::D16 => write!(f, "d16"),
            CatalogId::Product(parts) => {
                let parts: Vec<String> = parts.iter().map(|p| p.to_string()).collect();
                write!(f, "product({})", parts.join(","))
            }
            CatalogId::Interval(inner, e) => write!(f, "interval({inner},{e})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{s}`")))
        }
    }

    fn error(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn number(&mut self) -> Result<usize> {
        self.skip_ws();
        let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
        if digits.is_empty() {
            return Err(self.error("expected a number"));
        }
        self.pos += digits.len();
        digits.parse().map_err(|_| self.error("number out of range"))
    }

    fn id(&mut self) -> Result<CatalogId> {
        if self.eat("boolean:") {
            let n = self.number()?;
            if n > 10 {
                return Err(self.error("boolean:n is limited to n ≤ 10"));
            }
            Ok(CatalogId::Boolean(n as u32))
        } else if self.eat("mo:") {
            let n = self.number()?;
            if n == 0 || n > 64 {
                return Err(self.error("mo:n needs 1 ≤ n ≤ 64"));
            }
            Ok(CatalogId::Mo(n))
        } else if self.eat("o6") {
            Ok(CatalogId::O6)
        } else if self.eat("d16") {
            Ok(CatalogId::D16)
        } else if self.eat("product(") {
            let mut parts = vec![self.id()?];
            while self.eat(",") {
                parts.push(self.id()?);
            }
            self.expect(")")?;
            Ok(CatalogId::Product(parts))
        } else if self.eat("interval(") {
            let inner = self.id()?;
            self.expect(",")?;
            self.skip_ws();
            // the element label runs to the matching close paren
            let mut depth = 0i32;
            let start = self.pos;
            for (i, ch) in self.rest().char_indices() {
                match ch {
                    '(' => depth += 1,
                    ')' if depth == 0 => {
                        let label = self.src[start..start + i].trim().to_string();
                        self.pos = start + i + 1;
                        if label.is_empty() {
                            return Err(self.error("missing interval element"));
                        }
                        return Ok(CatalogId::Interval(Box::new(inner), label));
                    }
                    ')' => depth -= 1,
                    _ => {}
                }
            }
            Err(self.error("unterminated interval(...)"))
        } else {
            Err(self.error("unknown lattice token"))
        }
    }
}

pub fn parse(token: &str) -> Result<CatalogId> {
    let mut p = Parser { src: token, pos: 0 };
    let id = p.id()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return Err(p.error("trailing input"));
    }
    Ok(id)
}

/// Builds a catalog lattice. `o6` yields [`Error::Axioms`].
pub fn build(id: &CatalogId) -> Result<Oml> {
    let oml = match id {
        CatalogId::Boolean(n) => boolean(*n),
        CatalogId::Mo(n) => mo(*n),
        CatalogId::O6 => Oml::new("o6", o6())?,
        CatalogId::D16 => pasting::d16(),
        CatalogId::Product(parts) => {
            let factors = parts.iter().map(build).collect::<Result<Vec<_>>>()?;
            direct_product(&factors)?
        }
        CatalogId::Interval(inner, label) => {
            let l = build(inner)?;
            let p = l.find(label).ok_or_else(|| {
                Error::Input(format!("no element `{label}` in {}", l.name()))
            })?;
            l.interval(p).oml
        }
    };
    Ok(oml.with_name(id.to_string()))
}

/// Parses and builds in one step.
pub fn load(token: &str) -> Result<Oml> {
    build(&parse(token)?)
}

/// The raw relation behind a token, without insisting that it validates.
pub fn load_raw(token: &str) -> Result<RawOml> {
    match parse(token)? {
        CatalogId::O6 => Ok(o6()),
        id => Ok(build(&id)?.to_raw()),
    }
}
