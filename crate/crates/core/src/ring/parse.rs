//! Recursive-descent parser for polynomial strings.
//!
//! Grammar:
//!
//! ```text
//! expr    := ['+' | '-'] term (('+' | '-') term)*
//! term    := factor ('*' factor)*
//! factor  := primary ('^' integer)?
//! primary := integer | identifier | '(' expr ')'
//! ```
//!
//! Juxtaposition (`2q`, `q r`) is rejected. The parser is agnostic about what
//! the identifiers mean: a resolver maps each name to a variable slot, and the
//! result is a sparse map from slot exponents to integer coefficients.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Sparse monomial: variable slot -> positive exponent.
pub(crate) type SparseMonomial = BTreeMap<usize, u32>;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct FlatPoly {
    pub terms: BTreeMap<SparseMonomial, BigInt>,
}

impl FlatPoly {
    fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(SparseMonomial::new(), c);
        }
        FlatPoly { terms }
    }

    fn var(slot: usize) -> Self {
        let mut m = SparseMonomial::new();
        m.insert(slot, 1);
        let mut terms = BTreeMap::new();
        terms.insert(m, BigInt::one());
        FlatPoly { terms }
    }

    fn add_term(&mut self, m: SparseMonomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn add(mut self, other: FlatPoly, sign: i8) -> Self {
        for (m, c) in other.terms {
            self.add_term(m, if sign < 0 { -c } else { c });
        }
        self
    }

    fn mul(&self, other: &FlatPoly) -> Self {
        let mut out = FlatPoly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                for (&slot, &e) in mb {
                    *m.entry(slot).or_insert(0) += e;
                }
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = FlatPoly::constant(BigInt::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

pub(crate) fn parse_flat<F>(src: &str, resolve: F) -> Result<FlatPoly>
where
    F: Fn(&str) -> Option<usize>,
{
    let mut p = Parser {
        src: src.as_bytes(),
        pos: 0,
        resolve,
    };
    p.skip_ws();
    if p.pos == p.src.len() {
        return Err(Error::parse(0, "empty input"));
    }
    let poly = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.unexpected());
    }
    Ok(poly)
}

struct Parser<'a, F> {
    src: &'a [u8],
    pos: usize,
    resolve: F,
}

impl<F> Parser<'_, F>
where
    F: Fn(&str) -> Option<usize>,
{
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self) -> Error {
        match self.src.get(self.pos) {
            Some(&b) if b.is_ascii_alphanumeric() || b == b'_' || b == b'(' => {
                Error::parse(self.pos, "implicit multiplication is not allowed; use `*`")
            }
            Some(&b) => Error::parse(self.pos, format!("unexpected character `{}`", b as char)),
            None => Error::parse(self.pos, "unexpected end of input"),
        }
    }

    fn expr(&mut self) -> Result<FlatPoly> {
        let mut sign = 1i8;
        match self.peek() {
            Some(b'-') => {
                sign = -1;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        let mut acc = FlatPoly::default().add(self.term()?, sign);
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?, 1);
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.add(self.term()?, -1);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<FlatPoly> {
        let mut acc = self.factor()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            acc = acc.mul(&self.factor()?);
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<FlatPoly> {
        let base = self.primary()?;
        if self.peek() == Some(b'^') {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            if matches!(self.src.get(self.pos), Some(b'-') | Some(b'+')) {
                return Err(Error::NonPositiveExponent { pos: start });
            }
            let digits = self.digits();
            if digits.is_empty() {
                return Err(Error::parse(start, "expected an integer exponent"));
            }
            let e: u32 = digits
                .parse()
                .map_err(|_| Error::parse(start, "exponent too large"))?;
            if e == 0 {
                return Err(Error::NonPositiveExponent { pos: start });
            }
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        String::from_utf8_lossy(&self.src[start..self.pos]).into_owned()
    }

    fn primary(&mut self) -> Result<FlatPoly> {
        let start = match self.peek() {
            Some(_) => self.pos,
            None => return Err(Error::parse(self.pos, "unexpected end of input")),
        };
        let b = self.src[start];
        if b == b'(' {
            self.pos += 1;
            let inner = self.expr()?;
            if self.peek() != Some(b')') {
                return Err(Error::parse(self.pos, "expected `)`"));
            }
            self.pos += 1;
            Ok(inner)
        } else if b.is_ascii_digit() {
            let digits = self.digits();
            let value: BigInt = digits.parse().expect("ascii digits");
            Ok(FlatPoly::constant(value))
        } else if b.is_ascii_alphabetic() || b == b'_' {
            while self.pos < self.src.len()
                && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
            {
                self.pos += 1;
            }
            let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii identifier");
            match (self.resolve)(name) {
                Some(slot) => Ok(FlatPoly::var(slot)),
                None => Err(Error::UndeclaredGenerator {
                    pos: start,
                    name: name.to_string(),
                }),
            }
        } else {
            Err(self.unexpected())
        }
    }
}
