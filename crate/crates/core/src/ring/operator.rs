use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;

use super::{parse, same_ring, write_terms, CoeffPoly, Degree, Monomial, Ring};
use crate::error::{Error, Result};

/// Exponents of `T1, T2, …`; slot `i` holds the exponent of `T(i+1)`.
/// Trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct OpMonomial(Vec<u32>);

impl OpMonomial {
    pub fn one() -> Self {
        OpMonomial(Vec::new())
    }

    /// The indeterminate `T_i`, `i ≥ 1`.
    pub fn var(i: usize) -> Self {
        assert!(i >= 1, "operator indices start at 1");
        let mut v = vec![0; i];
        v[i - 1] = 1;
        OpMonomial(v)
    }

    pub fn from_exponents(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        OpMonomial(exps)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `T_i`.
    pub fn exponent(&self, i: usize) -> u32 {
        self.0.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Degree with `T_i` of weight `i`.
    pub fn weighted_degree(&self) -> u64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &e)| (i as u64 + 1) * e as u64)
            .sum()
    }

    /// Factors `(i, e)` with `e > 0`, ascending in `i`.
    pub fn factors(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i + 1, e))
    }

    pub fn mul(&self, other: &OpMonomial) -> OpMonomial {
        let len = self.0.len().max(other.0.len());
        let v = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        OpMonomial(v)
    }

    fn lex_cmp(&self, other: &OpMonomial) -> Ordering {
        let len = self.0.len().max(other.0.len());
        for i in 0..len {
            let a = self.0.get(i).unwrap_or(&0);
            let b = other.0.get(i).unwrap_or(&0);
            match a.cmp(b) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl Ord for OpMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.lex_cmp(other))
    }
}

impl PartialOrd for OpMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An element of A[T1, T2, …], stored as a map from operator monomials to
/// coefficients in A.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperatorPoly {
    ring: Arc<Ring>,
    terms: BTreeMap<OpMonomial, CoeffPoly>,
}

impl OperatorPoly {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        OperatorPoly {
            ring: ring.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::from_coeff(CoeffPoly::one(ring))
    }

    pub fn constant(ring: &Arc<Ring>, value: impl Into<BigInt>) -> Self {
        Self::from_coeff(CoeffPoly::constant(ring, value))
    }

    pub fn from_coeff(c: CoeffPoly) -> Self {
        Self::monomial(OpMonomial::one(), c)
    }

    pub fn monomial(m: OpMonomial, c: CoeffPoly) -> Self {
        let mut p = Self::zero(c.ring());
        p.add_term(m, c);
        p
    }

    /// The indeterminate `T_i`; `T_0` is 1 and negative indices are 0.
    pub fn t(ring: &Arc<Ring>, i: i64) -> Self {
        match i {
            i if i < 0 => Self::zero(ring),
            0 => Self::one(ring),
            i => Self::monomial(OpMonomial::var(i as usize), CoeffPoly::one(ring)),
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&OpMonomial, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest `i` such that `T_i` occurs, or 0.
    pub fn max_operator(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: OpMonomial, c: CoeffPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_ring(&self, other: &OperatorPoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.check_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.check_ring(other)?;
        let mut out = OperatorPoly::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &CoeffPoly) -> Result<OperatorPoly> {
        let mut out = OperatorPoly::zero(&self.ring);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a.try_mul(c)?);
        }
        Ok(out)
    }

    pub fn embed(&self, target: &Arc<Ring>) -> Result<OperatorPoly> {
        let mut out = OperatorPoly::zero(target);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.embed(target)?);
        }
        Ok(out)
    }

    /// Grading with `T_i` of degree `i` and coefficient generators at their
    /// declared degrees.
    pub fn graded_degree(&self) -> Degree {
        let mut acc = Degree::Any;
        for (m, c) in &self.terms {
            let t = m.weighted_degree();
            for (cm, _) in c.terms() {
                acc = acc.merge(t + cm.weighted_degree(&self.ring));
            }
        }
        acc
    }

    /// Grading that only counts the operator part.
    pub fn operator_degree(&self) -> Degree {
        self.terms
            .keys()
            .fold(Degree::Any, |acc, m| acc.merge(m.weighted_degree()))
    }

    /// True when every term is divisible by one of `T_i`, `i ∈ vars`.
    pub fn in_variable_ideal(&self, vars: &[usize]) -> bool {
        self.terms
            .keys()
            .all(|m| vars.iter().any(|&i| i >= 1 && m.exponent(i) > 0))
    }

    /// Parses a polynomial in the ring generators and `{prefix}1, {prefix}2, …`.
    pub fn parse(src: &str, ring: &Arc<Ring>, prefix: &str) -> Result<Self> {
        let base = ring.len();
        let flat = parse::parse_flat(src, |name| {
            if let Some(i) = ring.index_of(name) {
                return Some(i);
            }
            let digits = name.strip_prefix(prefix)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return None;
            }
            match digits.parse::<usize>() {
                Ok(i) if i >= 1 => Some(base + i - 1),
                _ => None,
            }
        })?;
        let mut out = OperatorPoly::zero(ring);
        for (sparse, c) in &flat.terms {
            let mut cm = vec![0u32; base];
            let mut tm = Vec::new();
            for (&slot, &e) in sparse {
                if slot < base {
                    cm[slot] += e;
                } else {
                    let i = slot - base;
                    if tm.len() <= i {
                        tm.resize(i + 1, 0);
                    }
                    tm[i] += e;
                }
            }
            let mut coeff = CoeffPoly::zero(ring);
            coeff.add_term(Monomial(cm), c.clone());
            out.add_term(OpMonomial::from_exponents(tm), coeff);
        }
        Ok(out)
    }

    /// Canonical text with operators printed as `{prefix}i`.
    ///
    /// Terms are ordered by total degree, then lexicographically with the
    /// operator indeterminates ranked ahead of the ring generators.
    pub fn display_with(&self, prefix: &str) -> String {
        let mut flat: Vec<(&OpMonomial, &Monomial, &BigInt)> = self
            .terms
            .iter()
            .flat_map(|(tm, c)| c.terms().map(move |(cm, k)| (tm, cm, k)))
            .collect();
        flat.sort_by(|a, b| {
            let da = a.0.total_degree() + a.1.total_degree();
            let db = b.0.total_degree() + b.1.total_degree();
            db.cmp(&da)
                .then_with(|| b.0.lex_cmp(a.0))
                .then_with(|| b.1.exponents().cmp(a.1.exponents()))
        });
        let ring = &*self.ring;
        let mut s = String::new();
        write_terms(
            &mut s,
            flat.into_iter().map(|(tm, cm, k)| {
                let ops = tm
                    .factors()
                    .map(|(i, e)| (format!("{prefix}{i}"), e))
                    .collect::<Vec<_>>();
                let coeffs = CoeffPoly::monomial_factors(ring, cm).collect::<Vec<_>>();
                (k.clone(), coeffs.into_iter().chain(ops))
            }),
        )
        .expect("writing to a String");
        s
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("T"))
    }
}

impl fmt::Debug for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorPoly({self})")
    }
}

impl Add for &OperatorPoly {
    type Output = OperatorPoly;
    fn add(self, rhs: &OperatorPoly) -> OperatorPoly {
        self.try_add(rhs).expect("coefficient ring mismatch")
    }
}

impl Sub for &OperatorPoly {
    type Output = OperatorPoly;
    fn sub(self, rhs: &OperatorPoly) -> OperatorPoly {
        self.try_sub(rhs).expect("coefficient ring mismatch")
    }
}

impl Mul for &OperatorPoly {
    type Output = OperatorPoly;
    fn mul(self, rhs: &OperatorPoly) -> OperatorPoly {
        self.try_mul(rhs).expect("coefficient ring mismatch")
    }
}

impl Neg for &OperatorPoly {
    type Output = OperatorPoly;
    fn neg(self) -> OperatorPoly {
        OperatorPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}
