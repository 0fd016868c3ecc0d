//! Recursive-descent parser for the term text syntax.
//!
//! Composition is written diagrammatically, `(f;g)` meaning "f then g", and
//! is stored as `Compose(g, f)`. Whitespace is insignificant.

use thiserror::Error;

use super::{ObjTerm, OneCell, TwoCell};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {pos}: {msg}")]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedTerm {
    Obj(ObjTerm),
    One(OneCell),
    Two(TwoCell),
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

type PResult<T> = Result<T, ParseError>;

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { src: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> PResult<T> {
        Err(ParseError { pos: self.pos, msg: msg.into() })
    }

    fn ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> PResult<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(got) => self.err(format!("expected `{}`, found `{}`", c as char, got as char)),
                None => self.err(format!("expected `{}`, found end of input", c as char)),
            }
        }
    }

    fn finish(&mut self) -> PResult<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => self.err(format!("unexpected trailing `{}`", c as char)),
        }
    }

    /// Identifier, optionally followed by a prime (`a'`, `R'`).
    fn name(&mut self) -> PResult<String> {
        self.ws();
        let start = self.pos;
        match self.src.get(self.pos) {
            Some(c) if c.is_ascii_alphabetic() => self.pos += 1,
            Some(b'1') => {
                self.pos += 1;
                return Ok("1".into());
            }
            _ => return self.err("expected identifier"),
        }
        while let Some(c) = self.src.get(self.pos) {
            if c.is_ascii_alphanumeric() || *c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        if self.src.get(self.pos) == Some(&b'\'') {
            self.pos += 1;
        }
        Ok(String::from_utf8_lossy(&self.src[start..self.pos]).into_owned())
    }

    fn obj(&mut self) -> PResult<ObjTerm> {
        if self.eat(b'(') {
            let a = self.obj()?;
            self.expect(b'*')?;
            let b = self.obj()?;
            self.expect(b')')?;
            return Ok(ObjTerm::tensor(a, b));
        }
        let at = self.pos;
        let n = self.name()?;
        if n == "I" {
            Ok(ObjTerm::Unit)
        } else if super::is_ident(&n) {
            Ok(ObjTerm::gen(&n))
        } else {
            self.pos = at;
            self.err(format!("`{n}` is not an object"))
        }
    }

    fn list<T>(&mut self, count: usize, mut item: impl FnMut(&mut Self) -> PResult<T>) -> PResult<Vec<T>> {
        self.expect(b'[')?;
        let mut out = Vec::with_capacity(count);
        for i in 0..count {
            if i > 0 {
                self.expect(b',')?;
            }
            out.push(item(self)?);
        }
        self.expect(b']')?;
        Ok(out)
    }

    fn objs(&mut self, count: usize) -> PResult<Vec<ObjTerm>> {
        self.list(count, |p| p.obj())
    }

    fn cells(&mut self, count: usize) -> PResult<Vec<OneCell>> {
        self.list(count, |p| p.cell())
    }

    fn cell(&mut self) -> PResult<OneCell> {
        if self.eat(b'(') {
            let f = self.cell()?;
            let op = self.peek();
            if op != Some(b';') && op != Some(b'*') {
                return self.err("expected `;` or `*` in 1-cell");
            }
            self.pos += 1;
            let g = self.cell()?;
            self.expect(b')')?;
            return Ok(if op == Some(b';') {
                OneCell::compose(g, f)
            } else {
                OneCell::tensor(f, g)
            });
        }
        let at = self.pos;
        let n = self.name()?;
        let c = match n.as_str() {
            "id" => OneCell::Id(self.objs(1)?.remove(0)),
            "a" | "a'" => {
                let mut v = self.objs(3)?.into_iter();
                let (x, y, z) = (v.next().unwrap(), v.next().unwrap(), v.next().unwrap());
                if n == "a" {
                    OneCell::Assoc(x, y, z)
                } else {
                    OneCell::AssocInv(x, y, z)
                }
            }
            "l" => OneCell::LUnit(self.objs(1)?.remove(0)),
            "l'" => OneCell::LUnitInv(self.objs(1)?.remove(0)),
            "r" => OneCell::RUnit(self.objs(1)?.remove(0)),
            "r'" => OneCell::RUnitInv(self.objs(1)?.remove(0)),
            "R" | "R'" => {
                let mut v = self.objs(2)?.into_iter();
                let (x, y) = (v.next().unwrap(), v.next().unwrap());
                if n == "R" {
                    OneCell::Braid(x, y)
                } else {
                    OneCell::BraidInv(x, y)
                }
            }
            _ => {
                self.pos = at;
                return self.err(format!("unknown 1-cell constructor `{n}`"));
            }
        };
        Ok(c)
    }

    fn two(&mut self) -> PResult<TwoCell> {
        if self.eat(b'(') {
            let a = self.two()?;
            let op = self.peek();
            if !matches!(op, Some(b';') | Some(b'*') | Some(b'.')) {
                return self.err("expected `;`, `*` or `.` in 2-cell");
            }
            self.pos += 1;
            let b = self.two()?;
            self.expect(b')')?;
            return Ok(match op {
                Some(b';') => TwoCell::vcomp(b, a),
                Some(b'.') => TwoCell::hcomp(b, a),
                _ => TwoCell::tensor(a, b),
            });
        }
        let at = self.pos;
        let n = self.name()?;
        use TwoCell::*;
        let c = match n.as_str() {
            "1" => Id2(self.cells(1)?.remove(0)),
            "inv" => {
                self.expect(b'[')?;
                let a = self.two()?;
                self.expect(b']')?;
                TwoCell::inv(a)
            }
            "etaA" | "epsA" | "hexL" | "hexR" => {
                let mut v = self.objs(3)?.into_iter();
                let (x, y, z) = (v.next().unwrap(), v.next().unwrap(), v.next().unwrap());
                match n.as_str() {
                    "etaA" => EtaA(x, y, z),
                    "epsA" => EpsA(x, y, z),
                    "hexL" => HexL(x, y, z),
                    _ => HexR(x, y, z),
                }
            }
            "etaL" => EtaL(self.objs(1)?.remove(0)),
            "epsL" => EpsL(self.objs(1)?.remove(0)),
            "etaRu" => EtaRu(self.objs(1)?.remove(0)),
            "epsRu" => EpsRu(self.objs(1)?.remove(0)),
            "etaB" | "epsB" | "mu" | "lambda" | "rho" | "funct0" => {
                let mut v = self.objs(2)?.into_iter();
                let (x, y) = (v.next().unwrap(), v.next().unwrap());
                match n.as_str() {
                    "etaB" => EtaB(x, y),
                    "epsB" => EpsB(x, y),
                    "mu" => Mu(x, y),
                    "lambda" => Lambda(x, y),
                    "rho" => Rho(x, y),
                    _ => Funct0(x, y),
                }
            }
            "pi" => {
                let mut v = self.objs(4)?.into_iter();
                Pi(v.next().unwrap(), v.next().unwrap(), v.next().unwrap(), v.next().unwrap())
            }
            "natA" => {
                let mut v = self.cells(3)?.into_iter();
                NatA(v.next().unwrap(), v.next().unwrap(), v.next().unwrap())
            }
            "cassoc" => {
                let mut v = self.cells(3)?.into_iter();
                let (f, g, h) = (v.next().unwrap(), v.next().unwrap(), v.next().unwrap());
                CompAssoc(h, g, f)
            }
            "natL" => NatL(self.cells(1)?.remove(0)),
            "natRu" => NatRu(self.cells(1)?.remove(0)),
            "clunit" => CompLUnit(self.cells(1)?.remove(0)),
            "crunit" => CompRUnit(self.cells(1)?.remove(0)),
            "natB" | "ich" => {
                let mut v = self.cells(2)?.into_iter();
                let (f, g) = (v.next().unwrap(), v.next().unwrap());
                if n == "natB" {
                    NatB(f, g)
                } else {
                    Interchange(f, g)
                }
            }
            "funct2" => {
                let mut v = self.cells(4)?.into_iter();
                Funct2(v.next().unwrap(), v.next().unwrap(), v.next().unwrap(), v.next().unwrap())
            }
            _ => {
                self.pos = at;
                return self.err(format!("unknown 2-cell constructor `{n}`"));
            }
        };
        Ok(c)
    }
}

pub fn parse_obj(s: &str) -> Result<ObjTerm, ParseError> {
    let mut p = Parser::new(s);
    let o = p.obj()?;
    p.finish()?;
    Ok(o)
}

pub fn parse_one_cell(s: &str) -> Result<OneCell, ParseError> {
    let mut p = Parser::new(s);
    let c = p.cell()?;
    p.finish()?;
    Ok(c)
}

pub fn parse_two_cell(s: &str) -> Result<TwoCell, ParseError> {
    let mut p = Parser::new(s);
    let c = p.two()?;
    p.finish()?;
    Ok(c)
}

/// A top-level `*`-separated list of objects, e.g. `x*x*x`, without
/// requiring parentheses around the whole list.
pub fn parse_obj_list(s: &str) -> Result<Vec<ObjTerm>, ParseError> {
    let mut p = Parser::new(s);
    let mut out = vec![p.obj()?];
    while p.eat(b'*') {
        out.push(p.obj()?);
    }
    p.finish()?;
    Ok(out)
}

/// Tries 1-cell, then 2-cell, then object syntax. The reported error is the
/// one that got furthest.
pub fn parse_any(s: &str) -> Result<ParsedTerm, ParseError> {
    let e1 = match parse_one_cell(s) {
        Ok(c) => return Ok(ParsedTerm::One(c)),
        Err(e) => e,
    };
    let e2 = match parse_two_cell(s) {
        Ok(c) => return Ok(ParsedTerm::Two(c)),
        Err(e) => e,
    };
    let e3 = match parse_obj(s) {
        Ok(o) => return Ok(ParsedTerm::Obj(o)),
        Err(e) => e,
    };
    Err([e1, e2, e3].into_iter().max_by_key(|e| e.pos).unwrap())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagrammatic_order_is_reversed() {
        let c = parse_one_cell("( id[(x*y)] ; R[x,y] )").unwrap();
        assert_eq!(
            c,
            OneCell::compose(
                OneCell::Braid(ObjTerm::gen("x"), ObjTerm::gen("y")),
                OneCell::Id(ObjTerm::tensor(ObjTerm::gen("x"), ObjTerm::gen("y")))
            )
        );
    }

    #[test]
    fn primes_and_units() {
        let c = parse_one_cell("(a'[x,I,y]*r'[I])").unwrap();
        assert_eq!(c.to_string(), "(a'[x,I,y]*r'[I])");
    }

    #[test]
    fn errors_carry_position() {
        let e = parse_one_cell("R[x,y").unwrap_err();
        assert_eq!(e.pos, 5);
        assert!(parse_one_cell("Q[x]").is_err());
        assert!(parse_obj("x y").is_err());
        assert!(parse_obj("1x").is_err());
    }

    #[test]
    fn two_cells_round_trip() {
        for s in [
            "hexL[x,y,z]",
            "inv[etaB[x,(y*z)]]",
            "((1[R[x,y]]*etaL[z]);inv[1[(R[x,y]*l[z])]])",
            "(natB[id[x],R[y,z]].1[a[x,y,z]])",
            "cassoc[R[x,y],R'[x,y],id[(x*y)]]",
            "funct2[id[x],R[x,x],id[y],id[y]]",
        ] {
            let t = parse_two_cell(s).unwrap();
            assert_eq!(t.to_string(), s);
        }
    }

    #[test]
    fn obj_lists() {
        let v = parse_obj_list("x*x*(y*z)").unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[2].to_string(), "(y*z)");
    }

    #[test]
    fn parse_any_dispatch() {
        assert!(matches!(parse_any("R[x,y]"), Ok(ParsedTerm::One(_))));
        assert!(matches!(parse_any("etaB[x,y]"), Ok(ParsedTerm::Two(_))));
        assert!(matches!(parse_any("(x*I)"), Ok(ParsedTerm::Obj(_))));
    }
}
