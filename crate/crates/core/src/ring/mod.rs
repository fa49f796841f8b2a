//! Exact sparse multivariate polynomials over ℤ with graded generators.
//!
//! A [`Ring`] is an ordered list of named generators, each with a grading
//! weight. [`CoeffPoly`] is an element of ℤ[generators]; [`OperatorPoly`] adds
//! the operator indeterminates `T1, T2, …` on top of a coefficient ring.

mod operator;
pub(crate) mod parse;

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use operator::{OpMonomial, OperatorPoly};

/// Name reserved for the polynomial variable of `p`.
pub const MODULE_VARIABLE: &str = "X";

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// An ordered declaration of ring generators. Declaration order fixes the
/// canonical term order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ring {
    generators: Vec<Generator>,
}

fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// `X` is the variable of `p`; `T<i>` and `D<i>` name derivation operators.
fn is_reserved(name: &str) -> bool {
    if name == MODULE_VARIABLE {
        return true;
    }
    let rest = name.strip_prefix('T').or_else(|| name.strip_prefix('D'));
    matches!(rest, Some(r) if !r.is_empty() && r.bytes().all(|b| b.is_ascii_digit()))
}

impl Ring {
    pub fn new(generators: Vec<Generator>) -> Result<Arc<Ring>> {
        for (i, g) in generators.iter().enumerate() {
            if !is_identifier(&g.name) {
                return Err(Error::RingDeclaration(format!(
                    "`{}` is not a valid identifier",
                    g.name
                )));
            }
            if is_reserved(&g.name) {
                return Err(Error::RingDeclaration(format!(
                    "`{}` is reserved and cannot be a ring generator",
                    g.name
                )));
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(Error::RingDeclaration(format!(
                    "generator `{}` declared twice",
                    g.name
                )));
            }
        }
        Ok(Arc::new(Ring { generators }))
    }

    /// ℤ itself, concentrated in degree 0.
    pub fn integers() -> Arc<Ring> {
        Arc::new(Ring {
            generators: Vec::new(),
        })
    }

    /// Parses `name:degree,name:degree,…`. An empty string declares ℤ.
    pub fn parse_declaration(src: &str) -> Result<Arc<Ring>> {
        let mut gens = Vec::new();
        for item in src.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, degree) = item.split_once(':').ok_or_else(|| {
                Error::RingDeclaration(format!("expected `name:degree`, found `{item}`"))
            })?;
            let degree = degree
                .trim()
                .parse::<u32>()
                .map_err(|_| Error::RingDeclaration(format!("invalid degree in `{item}`")))?;
            gens.push(Generator::new(name.trim(), degree));
        }
        Ring::new(gens)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.name == name)
    }

    /// Appends `extra` unless a generator of that name already exists.
    pub fn with_generator(&self, extra: Generator) -> Result<Arc<Ring>> {
        if self.index_of(&extra.name).is_some() {
            return Ok(Arc::new(self.clone()));
        }
        let mut gens = self.generators.clone();
        gens.push(extra);
        Ring::new(gens)
    }
}

pub(crate) fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// Dense exponent vector, one slot per ring generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub(crate) fn from_exponents(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn weighted_degree(&self, ring: &Ring) -> u64 {
        self.0
            .iter()
            .zip(&ring.generators)
            .map(|(&e, g)| e as u64 * g.degree as u64)
            .sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Graded-lexicographic: total degree first, then the first generator with a
/// differing exponent decides (higher exponent is larger).
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Result of a grading query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Degree {
    /// The zero polynomial, homogeneous of every degree.
    Any,
    Homogeneous(u64),
    Inhomogeneous,
}

impl Degree {
    pub(crate) fn merge(self, d: u64) -> Degree {
        match self {
            Degree::Any => Degree::Homogeneous(d),
            Degree::Homogeneous(e) if e == d => self,
            _ => Degree::Inhomogeneous,
        }
    }
}

/// An element of ℤ[generators] in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CoeffPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<Monomial, BigInt>,
}

impl CoeffPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        CoeffPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &Arc<Ring>, value: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(ring);
        p.add_term(Monomial::unit(ring.len()), value.into());
        p
    }

    pub fn generator(ring: &Arc<Ring>, name: &str) -> Result<Self> {
        let idx = ring
            .index_of(name)
            .ok_or_else(|| Error::UndeclaredGenerator {
                pos: 0,
                name: name.to_string(),
            })?;
        let mut m = Monomial::unit(ring.len());
        m.0[idx] = 1;
        let mut p = Self::zero(ring);
        p.add_term(m, BigInt::one());
        Ok(p)
    }

    pub fn parse(src: &str, ring: &Arc<Ring>) -> Result<Self> {
        let flat = parse::parse_flat(src, |name| ring.index_of(name))?;
        Ok(Self::from_flat(ring, &flat, Some))
    }

    /// Builds a polynomial from parser output, mapping parser slots to ring
    /// generator positions. Terms whose slots map to `None` are dropped.
    pub(crate) fn from_flat<F>(ring: &Arc<Ring>, flat: &parse::FlatPoly, map: F) -> Self
    where
        F: Fn(usize) -> Option<usize>,
    {
        let mut p = Self::zero(ring);
        'terms: for (sparse, c) in &flat.terms {
            let mut m = Monomial::unit(ring.len());
            for (&slot, &e) in sparse {
                match map(slot) {
                    Some(idx) => m.0[idx] += e,
                    None => continue 'terms,
                }
            }
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_unit() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// The integer value if this polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_unit().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_ring(&self, other: &CoeffPoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_ring(other)?;
        let mut out = CoeffPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &BigInt) -> CoeffPoly {
        if factor.is_zero() {
            return CoeffPoly::zero(&self.ring);
        }
        CoeffPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c * factor))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> CoeffPoly {
        let mut base = self.clone();
        let mut acc = CoeffPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Grading query using the declared generator degrees.
    pub fn graded_degree(&self) -> Degree {
        self.terms.keys().fold(Degree::Any, |acc, m| {
            acc.merge(m.weighted_degree(&self.ring))
        })
    }

    /// Re-expresses this polynomial over `target`, matching generators by name.
    pub fn embed(&self, target: &Arc<Ring>) -> Result<CoeffPoly> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = self
            .ring
            .generators
            .iter()
            .map(|g| target.index_of(&g.name))
            .collect();
        let mut out = CoeffPoly::zero(target);
        for (m, c) in &self.terms {
            let mut tm = Monomial::unit(target.len());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let idx = map[i]
                    .ok_or_else(|| Error::NotEmbeddable(self.ring.generators[i].name.clone()))?;
                tm.0[idx] += e;
            }
            out.add_term(tm, c.clone());
        }
        Ok(out)
    }

    /// Substitutes `value` for the generator `name`.
    pub fn substitute(&self, name: &str, value: &CoeffPoly) -> Result<CoeffPoly> {
        self.check_ring(value)?;
        let idx = self
            .ring
            .index_of(name)
            .ok_or_else(|| Error::UndeclaredGenerator {
                pos: 0,
                name: name.to_string(),
            })?;
        let mut out = CoeffPoly::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.0[idx];
            let mut rest = m.clone();
            rest.0[idx] = 0;
            let mut term = CoeffPoly::zero(&self.ring);
            term.add_term(rest, c.clone());
            out = &out + &(&term * &value.pow(e));
        }
        Ok(out)
    }

    pub(crate) fn write_monomial(
        f: &mut impl fmt::Write,
        factors: impl Iterator<Item = (String, u32)>,
    ) -> fmt::Result {
        let mut first = true;
        for (name, e) in factors {
            if !first {
                f.write_char('*')?;
            }
            first = false;
            if e == 1 {
                f.write_str(&name)?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }

    pub(crate) fn monomial_factors<'a>(
        ring: &'a Ring,
        m: &'a Monomial,
    ) -> impl Iterator<Item = (String, u32)> + 'a {
        m.0.iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(move |(i, &e)| (ring.generators[i].name.clone(), e))
    }
}

/// Writes `±c*m` terms joined with ` + ` / ` - `. `terms` must already be in
/// display order; each item is (coefficient, factors of the monomial).
pub(crate) fn write_terms<I, J>(f: &mut impl fmt::Write, terms: I) -> fmt::Result
where
    I: IntoIterator<Item = (BigInt, J)>,
    J: Iterator<Item = (String, u32)>,
{
    let mut first = true;
    for (c, factors) in terms {
        let mut factors = factors.peekable();
        let unit = factors.peek().is_none();
        let neg = c.is_negative();
        let abs = c.abs();
        if first {
            if neg {
                f.write_char('-')?;
            }
        } else {
            f.write_str(if neg { " - " } else { " + " })?;
        }
        first = false;
        if unit {
            write!(f, "{abs}")?;
        } else {
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            CoeffPoly::write_monomial(f, factors)?;
        }
    }
    if first {
        f.write_char('0')?;
    }
    Ok(())
}

impl fmt::Display for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = &*self.ring;
        write_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(m, c)| (c.clone(), CoeffPoly::monomial_factors(ring, m))),
        )
    }
}

impl fmt::Debug for CoeffPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoeffPoly({self})")
    }
}

// Operator impls panic on ring mismatch; use the `try_*` methods when the
// operands may come from different declarations.

impl Add for &CoeffPoly {
    type Output = CoeffPoly;
    fn add(self, rhs: &CoeffPoly) -> CoeffPoly {
        self.try_add(rhs).expect("coefficient ring mismatch")
    }
}

impl Sub for &CoeffPoly {
    type Output = CoeffPoly;
    fn sub(self, rhs: &CoeffPoly) -> CoeffPoly {
        self.try_sub(rhs).expect("coefficient ring mismatch")
    }
}

impl Mul for &CoeffPoly {
    type Output = CoeffPoly;
    fn mul(self, rhs: &CoeffPoly) -> CoeffPoly {
        self.try_mul(rhs).expect("coefficient ring mismatch")
    }
}

impl Neg for &CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        CoeffPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for CoeffPoly {
    type Output = CoeffPoly;
    fn neg(self) -> CoeffPoly {
        -&self
    }
}
