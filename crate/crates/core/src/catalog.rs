//! The fixed catalog of named odd-order groups and a small expression
//! language for building others on the command line.
//!
//! ```text
//! expr   := factor (('x' | '×') factor)*
//! factor := 'C' n | name | '(' expr ')' | 'sd(' expr ',' expr ',' '[' perm ']' ')'
//! ```
//!
//! `sd(N, H, [p])` is `N ⋊ H` with the generator of the cyclic `H` acting on
//! `N` by the permutation `p` of `N`'s element indices.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{build_group, GroupSpec, GroupTable};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub spec: GroupSpec,
    pub order: usize,
    pub abelian: bool,
}

impl CatalogEntry {
    pub fn build(&self) -> GroupTable {
        build_group(&self.spec).expect("catalog specs are valid")
    }
}

/// `x ↦ 2x` on `C_7`, of order 3.
pub fn frobenius21_spec() -> GroupSpec {
    GroupSpec::semidirect(GroupSpec::cyclic(7), GroupSpec::cyclic(3), vec![0, 2, 4, 6, 1, 3, 5])
}

/// `(a, b) ↦ (a + b, b)` on `C_3 × C_3`; the result is the Heisenberg group
/// mod 3.
pub fn heisenberg27_spec() -> GroupSpec {
    let action = (0..9).map(|i| ((i / 3 + i % 3) % 3) * 3 + i % 3).collect();
    GroupSpec::semidirect(
        GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(3)),
        GroupSpec::cyclic(3),
        action,
    )
}

pub fn catalog() -> Vec<CatalogEntry> {
    let c = GroupSpec::cyclic;
    let specs: Vec<(&'static str, GroupSpec, usize, bool)> = vec![
        ("C3", c(3), 3, true),
        ("C5", c(5), 5, true),
        ("C7", c(7), 7, true),
        ("C9", c(9), 9, true),
        ("C3xC3", GroupSpec::product(c(3), c(3)), 9, true),
        ("C15", c(15), 15, true),
        ("C3xC5", GroupSpec::product(c(3), c(5)), 15, true),
        ("F21", frobenius21_spec(), 21, false),
        ("Heis27", heisenberg27_spec(), 27, false),
    ];
    specs
        .into_iter()
        .map(|(name, spec, order, abelian)| CatalogEntry { name, spec, order, abelian })
        .collect()
}

pub fn lookup(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name.eq_ignore_ascii_case(name))
}

/// Parses a group expression; catalog names are accepted as factors.
pub fn parse_spec(input: &str) -> Result<GroupSpec> {
    let mut p = Parser { s: input.chars().filter(|c| !c.is_whitespace()).collect(), pos: 0 };
    let spec = p.expr()?;
    if p.pos != p.s.len() {
        return Err(p.error("trailing input"));
    }
    Ok(spec)
}

struct Parser {
    s: Vec<char>,
    pos: usize,
}

impl Parser {
    fn error(&self, what: &str) -> Error {
        let rest: String = self.s[self.pos.min(self.s.len())..].iter().collect();
        Error::Parse(format!("{what} at position {} (remaining {rest:?})", self.pos))
    }

    fn peek(&self) -> Option<char> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected {c:?}")))
        }
    }

    fn starts_with(&self, word: &str) -> bool {
        let w: Vec<char> = word.chars().collect();
        self.s.len() >= self.pos + w.len()
            && self.s[self.pos..self.pos + w.len()]
                .iter()
                .zip(&w)
                .all(|(a, b)| a.eq_ignore_ascii_case(b))
    }

    fn number(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits: String = self.s[start..self.pos].iter().collect();
        digits.parse().map_err(|_| self.error("number out of range"))
    }

    fn expr(&mut self) -> Result<GroupSpec> {
        let mut acc = self.factor()?;
        while self.eat('x') || self.eat('×') || self.eat('X') {
            acc = GroupSpec::product(acc, self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<GroupSpec> {
        if self.eat('(') {
            let e = self.expr()?;
            self.expect(')')?;
            return Ok(e);
        }
        if self.starts_with("sd(") {
            self.pos += 3;
            let normal = self.expr()?;
            self.expect(',')?;
            let acting = self.expr()?;
            self.expect(',')?;
            self.expect('[')?;
            let mut perm = Vec::new();
            if !self.eat(']') {
                loop {
                    perm.push(self.number()?);
                    if self.eat(']') {
                        break;
                    }
                    self.expect(',')?;
                }
            }
            self.expect(')')?;
            return Ok(GroupSpec::semidirect(normal, acting, perm));
        }
        // named groups; none of them is a prefix of a longer one
        for name in ["F21", "Heis27", "Heisenberg27"] {
            if self.starts_with(name) {
                self.pos += name.chars().count();
                return Ok(if name == "F21" { frobenius21_spec() } else { heisenberg27_spec() });
            }
        }
        if self.eat('C') || self.eat('c') {
            let n = self.number()?;
            if n == 0 {
                return Err(self.error("cyclic group of order 0"));
            }
            return Ok(GroupSpec::cyclic(n));
        }
        Err(self.error("expected a group"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_consistent() {
        let cat = catalog();
        assert_eq!(cat.len(), 9);
        for e in &cat {
            let g = e.build();
            assert_eq!(g.order(), e.order, "{}", e.name);
            assert_eq!(g.is_abelian(), e.abelian, "{}", e.name);
            assert!(g.is_odd());
            assert_eq!(parse_spec(e.name).unwrap(), e.spec, "{}", e.name);
        }
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_spec("C3 x C5").unwrap(), GroupSpec::product(GroupSpec::cyclic(3), GroupSpec::cyclic(5)));
        assert_eq!(
            parse_spec("sd(C7,C3,[0,2,4,6,1,3,5])").unwrap(),
            frobenius21_spec()
        );
        let nested = parse_spec("(C3xC3)xC3").unwrap();
        assert_eq!(build_group(&nested).unwrap().order(), 27);
        // C9 ⋊ C3 with x ↦ 4x
        let g = build_group(&parse_spec("sd(C9,C3,[0,4,8,3,7,2,6,1,5])").unwrap()).unwrap();
        assert_eq!(g.order(), 27);
        assert!(!g.is_abelian());
    }

    #[test]
    fn bad_expressions() {
        for s in ["", "C", "C0", "D4", "C3x", "(C3", "sd(C7,C3,[0,2)", "C3 junk"] {
            assert!(matches!(parse_spec(s), Err(Error::Parse(_))), "{s}");
        }
    }
}
