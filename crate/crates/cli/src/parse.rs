//! The family expression grammar:
//!
//! ```text
//! FAMILY := NAME ':' INT (':' INT)?
//!         | 'join(' FAMILY ',' FAMILY ')' | 'union(' FAMILY ',' FAMILY ')'
//!         | INT FAMILY
//!         | 'K' INT | 'K' INT ',' INT
//! ```
//!
//! Names are `G1`, `G2`, `split`, `cutK2`, `path`, `cycle`, `calG1` and `calG2`.

use hamspec::graph::ExceptionalSet;
use hamspec::FamilySpec;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("at position {pos}: {msg}")]
pub struct ParseError {
    /// Byte offset of the offending token.
    pub pos: usize,
    pub msg: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, msg: msg.into() })
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn token_at(&self, pos: usize) -> String {
        let rest = &self.src[pos..];
        let end = rest.find(['(', ')', ',', ':']).map_or(rest.len(), |i| i.max(1));
        match &rest[..end] {
            "" => "end of input".into(),
            t => format!("'{t}'"),
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            err(self.pos, format!("expected '{}', found {}", c as char, self.token_at(self.pos)))
        }
    }

    fn int(&mut self) -> Result<usize, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return err(start, format!("expected an integer, found {}", self.token_at(start)));
        }
        self.src[start..self.pos]
            .parse()
            .or_else(|_| err(start, format!("integer '{}' out of range", &self.src[start..self.pos])))
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_alphanumeric() || c == b'_') {
            self.pos += 1;
        }
        &self.src[start..self.pos]
    }

    /// A comma followed by an integer that is not the start of `INT FAMILY`.
    fn bipartite_suffix(&self) -> bool {
        let rest = &self.src.as_bytes()[self.pos..];
        if rest.first() != Some(&b',') {
            return false;
        }
        let digits = rest[1..].iter().take_while(|c| c.is_ascii_digit()).count();
        digits > 0 && !rest.get(1 + digits).is_some_and(|c| c.is_ascii_alphabetic() || *c == b'(')
    }

    fn family(&mut self) -> Result<FamilySpec, ParseError> {
        let start = self.pos;
        let spec = match self.peek() {
            None => return err(start, "expected a family, found end of input"),
            Some(c) if c.is_ascii_digit() => {
                let k = self.int()?;
                if k == 0 {
                    return err(start, "copy count must be at least 1");
                }
                match self.family()? {
                    FamilySpec::Complete(1) => FamilySpec::Empty(k),
                    inner => FamilySpec::copies(k, inner),
                }
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                match name {
                    "join" | "union" => {
                        self.expect(b'(')?;
                        let a = self.family()?;
                        self.expect(b',')?;
                        let b = self.family()?;
                        self.expect(b')')?;
                        if name == "join" {
                            FamilySpec::join(a, b)
                        } else {
                            FamilySpec::union(a, b)
                        }
                    }
                    _ if self.peek() == Some(b':') => self.named(name, start)?,
                    _ if name.len() > 1 && name.starts_with('K') && name[1..].bytes().all(|c| c.is_ascii_digit()) => {
                        let a: usize = name[1..]
                            .parse()
                            .or_else(|_| err(start + 1, format!("integer '{}' out of range", &name[1..])))?;
                        if self.bipartite_suffix() {
                            self.pos += 1;
                            let b = self.int()?;
                            FamilySpec::CompleteBipartite(a, b)
                        } else {
                            FamilySpec::Complete(a)
                        }
                    }
                    _ => return err(start, format!("unknown name '{name}'")),
                }
            }
            Some(_) => return err(start, format!("expected a family, found {}", self.token_at(start))),
        };
        if let Err(e) = spec.members() {
            return err(start, format!("{spec}: {e}"));
        }
        Ok(spec)
    }

    fn named(&mut self, name: &str, start: usize) -> Result<FamilySpec, ParseError> {
        let arity = match name {
            "split" => 2,
            "G1" | "G2" | "cutK2" | "path" | "cycle" | "calG1" | "calG2" => 1,
            _ => return err(start, format!("unknown name '{name}'")),
        };
        let mut args = Vec::new();
        while self.peek() == Some(b':') {
            self.pos += 1;
            if args.len() == arity {
                return err(self.pos - 1, format!("{name} takes {arity} argument(s)"));
            }
            args.push(self.int()?);
        }
        if args.len() != arity {
            return err(self.pos, format!("{name} takes {arity} argument(s), got {}", args.len()));
        }
        Ok(match name {
            "split" => FamilySpec::Split { n: args[0], k: args[1] },
            "G1" => FamilySpec::G1(args[0]),
            "G2" => FamilySpec::G2(args[0]),
            "cutK2" => FamilySpec::CutPair(args[0]),
            "path" => FamilySpec::Path(args[0]),
            "cycle" => FamilySpec::Cycle(args[0]),
            "calG1" => FamilySpec::Set(ExceptionalSet::NonTraceable, args[0]),
            _ => FamilySpec::Set(ExceptionalSet::NonHamiltonian, args[0]),
        })
    }
}

/// Parses a family expression such as `join(K2,union(K10,2K1))`.
pub fn parse_family(spec: &str) -> Result<FamilySpec, ParseError> {
    let mut p = Parser { src: spec.trim(), pos: 0 };
    let out = p.family()?;
    if p.pos != p.src.len() {
        return err(p.pos, format!("unexpected trailing {}", p.token_at(p.pos)));
    }
    Ok(out)
}
