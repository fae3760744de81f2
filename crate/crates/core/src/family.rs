//! Mini-grammar for naming graphs on the command line:
//!
//! ```text
//! spec := name ":" n | op "(" spec "," spec ")"
//! op   := join | corona | union
//! ```
//!
//! e.g. `path:4`, `union(complete:2,complete:2)`, `join(cycle:9,complete:1)`.

use crate::error::{Error, Result};
use crate::graph::{FamilyKind, Graph};

pub fn parse_family_spec(spec: &str) -> Result<Graph> {
    let compact: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser {
        src: &compact,
        pos: 0,
    };
    let g = parser.spec()?;
    if parser.pos != compact.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(g)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, what: &str) -> Error {
        Error::MalformedFamilySpec(format!("{what} at offset {} in `{}`", self.pos, self.src))
    }

    fn ident(&mut self) -> &str {
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.src[self.pos..].starts_with(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(&format!("expected `{c}`")))
        }
    }

    fn spec(&mut self) -> Result<Graph> {
        let start = self.pos;
        let name = self.ident().to_ascii_lowercase();
        if name.is_empty() {
            return Err(self.error("expected a family name or combinator"));
        }
        match name.as_str() {
            "join" | "corona" | "union" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                match name.as_str() {
                    "join" => a.join(&b),
                    "corona" => a.corona(&b),
                    _ => a.disjoint_union(&b),
                }
            }
            _ => {
                let kind: FamilyKind = name.parse().map_err(|_| {
                    self.pos = start;
                    self.error(&format!("unknown family `{name}`"))
                })?;
                self.expect(':')?;
                let digits = self.ident().to_string();
                let n: usize = digits
                    .parse()
                    .map_err(|_| self.error(&format!("invalid order `{digits}`")))?;
                Graph::family(kind, n)
            }
        }
    }
}
