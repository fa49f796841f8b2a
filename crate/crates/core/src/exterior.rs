//! The module M(p) with basis ε¹, …, εⁿ (εⁱ the class of Xⁱ) and its exterior
//! powers.
//!
//! `p = Xⁿ + c₁Xⁿ⁻¹ + … + cₙ` is monic, so εⁿ⁺ʲ can always be rewritten in
//! the basis through `εᵐ = −Σ cᵢ εᵐ⁻ⁱ`. The free module (`p = 0`) has no
//! relation; it is represented with a caller-chosen truncation bound and any
//! index beyond it is an error.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::{parse, CoeffPoly, Generator, Monomial, Ring, MODULE_VARIABLE};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleKind {
    /// `p` monic of degree `coeffs.len()`, coefficients `c₁, …, cₙ`.
    Monic { coeffs: Vec<CoeffPoly> },
    /// `p = 0`, basis truncated at ε^bound.
    Free { bound: u32 },
}

pub struct ModuleSpec {
    ring: Arc<Ring>,
    kind: ModuleKind,
    // reductions[j] = coordinates of ε^(n+1+j) on ε¹..εⁿ
    reductions: Mutex<Vec<Arc<[CoeffPoly]>>>,
}

impl ModuleSpec {
    pub fn monic(ring: &Arc<Ring>, coeffs: Vec<CoeffPoly>) -> Result<Arc<Self>> {
        if coeffs.is_empty() {
            return Err(Error::InvalidModule("p must have positive degree".into()));
        }
        let coeffs = coeffs
            .iter()
            .map(|c| c.embed(ring))
            .collect::<Result<Vec<_>>>()?;
        Ok(Arc::new(ModuleSpec {
            ring: ring.clone(),
            kind: ModuleKind::Monic { coeffs },
            reductions: Mutex::new(Vec::new()),
        }))
    }

    /// `p = Xⁿ` over ℤ.
    pub fn classical(n: u32) -> Result<Arc<Self>> {
        let ring = Ring::integers();
        Self::monic(&ring, vec![CoeffPoly::zero(&ring); n as usize])
    }

    /// `p = Xⁿ + q` over ℤ[q] with `deg q = n`.
    pub fn quantum(n: u32) -> Result<Arc<Self>> {
        let ring = Ring::new(vec![Generator::new("q", n)])?;
        Self::quantum_over(&ring, n)
    }

    /// `p = Xⁿ + q` over a ring that declares `q`.
    pub fn quantum_over(ring: &Arc<Ring>, n: u32) -> Result<Arc<Self>> {
        if n == 0 {
            return Err(Error::InvalidModule("p must have positive degree".into()));
        }
        let mut coeffs = vec![CoeffPoly::zero(ring); n as usize];
        coeffs[n as usize - 1] = CoeffPoly::generator(ring, "q")?;
        Self::monic(ring, coeffs)
    }

    pub fn free(ring: &Arc<Ring>, bound: u32) -> Result<Arc<Self>> {
        if bound == 0 {
            return Err(Error::InvalidModule(
                "truncation bound must be positive".into(),
            ));
        }
        Ok(Arc::new(ModuleSpec {
            ring: ring.clone(),
            kind: ModuleKind::Free { bound },
            reductions: Mutex::new(Vec::new()),
        }))
    }

    /// Parses `p` as a polynomial in `X` over `ring` and checks that it is
    /// monic, of degree `expected_degree` when given.
    pub fn from_polynomial(
        src: &str,
        ring: &Arc<Ring>,
        expected_degree: Option<u32>,
    ) -> Result<Arc<Self>> {
        let x_slot = ring.len();
        let flat = parse::parse_flat(src, |name| {
            if name == MODULE_VARIABLE {
                Some(x_slot)
            } else {
                ring.index_of(name)
            }
        })?;
        let degree = flat
            .terms
            .keys()
            .map(|m| m.get(&x_slot).copied().unwrap_or(0))
            .max()
            .unwrap_or(0);
        let mut by_power: Vec<CoeffPoly> = vec![CoeffPoly::zero(ring); degree as usize + 1];
        for (sparse, c) in &flat.terms {
            let e = sparse.get(&x_slot).copied().unwrap_or(0) as usize;
            let mut exps = vec![0u32; ring.len()];
            for (&slot, &k) in sparse {
                if slot != x_slot {
                    exps[slot] += k;
                }
            }
            let m = Monomial::from_exponents(exps);
            let mut coeff = CoeffPoly::zero(ring);
            coeff.add_term(m, c.clone());
            by_power[e] = &by_power[e] + &coeff;
        }
        if degree == 0 {
            return Err(Error::InvalidModule(format!(
                "`{src}` has degree 0 in X; p must be monic of positive degree"
            )));
        }
        if !by_power[degree as usize].is_one() {
            return Err(Error::InvalidModule(format!(
                "`{src}` is not monic: leading coefficient is {}",
                by_power[degree as usize]
            )));
        }
        if let Some(n) = expected_degree {
            if n != degree {
                return Err(Error::InvalidModule(format!(
                    "p has degree {degree} in X but n = {n}"
                )));
            }
        }
        // c_i is the coefficient of X^(n-i)
        let coeffs = (1..=degree as usize)
            .map(|i| by_power[degree as usize - i].clone())
            .collect();
        Self::monic(ring, coeffs)
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn kind(&self) -> &ModuleKind {
        &self.kind
    }

    pub fn is_free(&self) -> bool {
        matches!(self.kind, ModuleKind::Free { .. })
    }

    /// Rank `n = deg p`, or `None` for the free module.
    pub fn rank(&self) -> Option<u32> {
        match &self.kind {
            ModuleKind::Monic { coeffs } => Some(coeffs.len() as u32),
            ModuleKind::Free { .. } => None,
        }
    }

    /// Largest admissible basis index: `n`, or the truncation bound.
    pub fn basis_bound(&self) -> u32 {
        match &self.kind {
            ModuleKind::Monic { coeffs } => coeffs.len() as u32,
            ModuleKind::Free { bound } => *bound,
        }
    }

    /// `c₁, …, cₙ`; empty for the free module.
    pub fn coefficients(&self) -> &[CoeffPoly] {
        match &self.kind {
            ModuleKind::Monic { coeffs } => coeffs,
            ModuleKind::Free { .. } => &[],
        }
    }

    /// `cᵢ`, zero outside `1..=n`.
    pub fn coefficient(&self, i: usize) -> CoeffPoly {
        match self.coefficients().get(i.wrapping_sub(1)) {
            Some(c) => c.clone(),
            None => CoeffPoly::zero(&self.ring),
        }
    }

    /// `p` printed as a polynomial in `X`.
    pub fn polynomial_string(&self) -> String {
        let coeffs = match &self.kind {
            ModuleKind::Free { .. } => return "0".into(),
            ModuleKind::Monic { coeffs } => coeffs,
        };
        let n = coeffs.len() as u32;
        // X ranks ahead of the ring generators, as operators do in OperatorPoly
        let mut flat: Vec<(u32, &Monomial, &BigInt)> = Vec::new();
        let one = BigInt::one();
        let unit = Monomial::unit(self.ring.len());
        let mut s = String::new();
        for (i, c) in coeffs.iter().enumerate() {
            for (m, k) in c.terms() {
                flat.push((n - 1 - i as u32, m, k));
            }
        }
        flat.push((n, &unit, &one));
        flat.sort_by(|a, b| {
            let da = a.0 as u64 + a.1.total_degree();
            let db = b.0 as u64 + b.1.total_degree();
            db.cmp(&da)
                .then_with(|| b.0.cmp(&a.0))
                .then_with(|| b.1.exponents().cmp(a.1.exponents()))
        });
        let ring = &*self.ring;
        crate::ring::write_terms(
            &mut s,
            flat.into_iter().map(|(e, m, k)| {
                let mut factors: Vec<(String, u32)> =
                    CoeffPoly::monomial_factors(ring, m).collect();
                if e > 0 {
                    factors.push((MODULE_VARIABLE.to_string(), e));
                }
                (k.clone(), factors.into_iter())
            }),
        )
        .expect("writing to a String");
        s
    }

    /// Coordinates of εᵐ on ε¹..εⁿ as `(index, coefficient)` pairs with
    /// nonzero coefficients.
    pub(crate) fn reduce(&self, m: u32) -> Result<Vec<(u32, CoeffPoly)>> {
        if m == 0 {
            return Err(Error::InvalidIndex("basis indices start at 1".into()));
        }
        let n = match &self.kind {
            ModuleKind::Free { bound } => {
                if m > *bound {
                    return Err(Error::TruncationOverflow {
                        index: m,
                        bound: *bound,
                    });
                }
                return Ok(vec![(m, CoeffPoly::one(&self.ring))]);
            }
            ModuleKind::Monic { coeffs } => coeffs.len() as u32,
        };
        if m <= n {
            return Ok(vec![(m, CoeffPoly::one(&self.ring))]);
        }
        let coords = self.reduction_row(m - n - 1);
        Ok(coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32 + 1, c.clone()))
            .collect())
    }

    fn reduction_row(&self, j: u32) -> Arc<[CoeffPoly]> {
        let coeffs = self.coefficients();
        let n = coeffs.len();
        let mut cache = self.reductions.lock().expect("reduction cache poisoned");
        while cache.len() <= j as usize {
            let row: Vec<CoeffPoly> = match cache.last() {
                // ε^(n+1) = -c_n ε¹ - c_(n-1) ε² - … - c₁ εⁿ
                None => (1..=n).map(|i| -&coeffs[n - i]).collect(),
                // multiply the previous row by X and fold the overflow back in
                Some(prev) => {
                    let top = &prev[n - 1];
                    (0..n)
                        .map(|i| {
                            let shifted = if i == 0 {
                                CoeffPoly::zero(&self.ring)
                            } else {
                                prev[i - 1].clone()
                            };
                            &shifted - &(top * &coeffs[n - 1 - i])
                        })
                        .collect()
                }
            };
            cache.push(row.into());
        }
        cache[j as usize].clone()
    }

    /// εᵐ expanded in the basis, as an element of ⋀¹M(p).
    pub fn reduce_index(self: &Arc<Self>, m: u32) -> Result<MultiVector> {
        let mut v = MultiVector::zero(self, 1);
        for (i, c) in self.reduce(m)? {
            v.insert(IndexTuple(vec![i]), c);
        }
        Ok(v)
    }

    pub(crate) fn same(a: &Arc<Self>, b: &Arc<Self>) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl PartialEq for ModuleSpec {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.kind == other.kind
    }
}

impl Eq for ModuleSpec {}

impl fmt::Debug for ModuleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ModuleKind::Monic { .. } => write!(f, "M(p = {})", self.polynomial_string()),
            ModuleKind::Free { bound } => write!(f, "M(free, N = {bound})"),
        }
    }
}

/// Strictly increasing tuple of positive indices, labelling ε^{i₁}∧…∧ε^{i_k}.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct IndexTuple(Vec<u32>);

impl IndexTuple {
    pub fn new(indices: Vec<u32>) -> Result<Self> {
        if indices.first() == Some(&0) {
            return Err(Error::InvalidIndex("indices must be positive".into()));
        }
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidIndex(format!(
                "{indices:?} is not strictly increasing"
            )));
        }
        Ok(IndexTuple(indices))
    }

    /// `(1, 2, …, k)`.
    pub fn lowest(k: usize) -> Self {
        IndexTuple((1..=k as u32).collect())
    }

    pub(crate) fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        IndexTuple(indices)
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.0.last().copied().unwrap_or(0)
    }

    /// `Σⱼ (iⱼ − j)`.
    pub fn weight(&self) -> u32 {
        self.0
            .iter()
            .enumerate()
            .map(|(j, &i)| i - (j as u32 + 1))
            .sum()
    }

    /// All tuples of length `k` with entries in `1..=n`, in lexicographic order.
    pub fn all(k: usize, n: u32) -> Vec<IndexTuple> {
        fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<IndexTuple>) {
            if cur.len() == k {
                out.push(IndexTuple(cur.clone()));
                return;
            }
            let left = (k - cur.len()) as u32;
            let mut i = start;
            while i + left - 1 <= n {
                cur.push(i);
                go(i + 1, n, k, cur, out);
                cur.pop();
                i += 1;
            }
        }
        let mut out = Vec::new();
        go(1, n, k, &mut Vec::with_capacity(k), &mut out);
        out
    }

    /// All tuples of length `k` and weight `w`.
    pub fn of_weight(k: usize, w: u32) -> Vec<IndexTuple> {
        Self::all(k, k as u32 + w)
            .into_iter()
            .filter(|i| i.weight() == w)
            .collect()
    }
}

impl TryFrom<Vec<u32>> for IndexTuple {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        IndexTuple::new(v)
    }
}

impl From<IndexTuple> for Vec<u32> {
    fn from(t: IndexTuple) -> Vec<u32> {
        t.0
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (j, i) in self.0.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}")?;
        }
        f.write_str(")")
    }
}

pub fn weight(i: &IndexTuple) -> u32 {
    i.weight()
}

/// Sorts `raw` in place, returning the sign of the sorting permutation, or
/// `None` if an index repeats.
pub(crate) fn sort_with_sign(raw: &mut [u32]) -> Option<i8> {
    let mut sign = 1i8;
    for i in 1..raw.len() {
        let mut j = i;
        while j > 0 && raw[j - 1] > raw[j] {
            raw.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if raw.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

/// One JSON entry of a serialized [`MultiVector`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WedgeTerm {
    pub indices: Vec<u32>,
    pub coeff: String,
}

/// An element of ⋀ᵏM(p) in the ε-basis.
#[derive(Clone)]
pub struct MultiVector {
    spec: Arc<ModuleSpec>,
    k: usize,
    terms: BTreeMap<IndexTuple, CoeffPoly>,
}

impl MultiVector {
    pub fn zero(spec: &Arc<ModuleSpec>, k: usize) -> Self {
        MultiVector {
            spec: spec.clone(),
            k,
            terms: BTreeMap::new(),
        }
    }

    /// The basis element ∧ᴵε.
    pub fn basis(spec: &Arc<ModuleSpec>, index: &IndexTuple) -> Result<Self> {
        if index.max_index() > spec.basis_bound() {
            return Err(match spec.kind() {
                ModuleKind::Free { bound } => Error::TruncationOverflow {
                    index: index.max_index(),
                    bound: *bound,
                },
                ModuleKind::Monic { .. } => Error::InvalidIndex(format!(
                    "{index} is not a basis tuple of rank {}",
                    spec.basis_bound()
                )),
            });
        }
        let mut v = Self::zero(spec, index.len());
        v.insert(index.clone(), CoeffPoly::one(spec.ring()));
        Ok(v)
    }

    /// ε¹∧…∧εᵏ.
    pub fn lowest(spec: &Arc<ModuleSpec>, k: usize) -> Result<Self> {
        Self::basis(spec, &IndexTuple::lowest(k))
    }

    pub fn spec(&self) -> &Arc<ModuleSpec> {
        &self.spec
    }

    /// Exterior degree.
    pub fn k(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&IndexTuple, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, index: &IndexTuple) -> Option<&CoeffPoly> {
        self.terms.get(index)
    }

    /// Inserts an already-normalized term.
    pub(crate) fn insert(&mut self, index: IndexTuple, c: CoeffPoly) {
        debug_assert_eq!(index.len(), self.k);
        debug_assert!(index.max_index() <= self.spec.basis_bound());
        if c.is_zero() {
            return;
        }
        match self.terms.entry(index) {
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

    /// Adds `coeff · ε^{raw₁}∧…∧ε^{raw_k}` for an arbitrary tuple of positive
    /// indices: sorts with sign, drops repeats and reduces indices past `n`.
    pub(crate) fn accumulate(&mut self, raw: &[u32], coeff: &CoeffPoly) -> Result<()> {
        if raw.len() != self.k {
            return Err(Error::InvalidIndex(format!(
                "expected {} indices, found {}",
                self.k,
                raw.len()
            )));
        }
        if coeff.is_zero() {
            return Ok(());
        }
        let bound = self.spec.basis_bound();
        if raw.iter().all(|&i| i >= 1 && i <= bound) {
            let mut sorted = raw.to_vec();
            if let Some(sign) = sort_with_sign(&mut sorted) {
                let c = if sign < 0 { -coeff } else { coeff.clone() };
                self.insert(IndexTuple(sorted), c);
            }
            return Ok(());
        }
        // expand every out-of-range factor and distribute
        let mut partial: Vec<(Vec<u32>, CoeffPoly)> = vec![(Vec::new(), coeff.clone())];
        for &i in raw {
            let options = self.spec.reduce(i)?;
            let mut next = Vec::with_capacity(partial.len() * options.len());
            for (prefix, c) in &partial {
                for (j, cj) in &options {
                    if prefix.contains(j) {
                        continue;
                    }
                    let mut p = prefix.clone();
                    p.push(*j);
                    next.push((p, c * cj));
                }
            }
            partial = next;
        }
        for (mut indices, c) in partial {
            let sign = sort_with_sign(&mut indices).expect("repeats were pruned");
            self.insert(IndexTuple(indices), if sign < 0 { -c } else { c });
        }
        Ok(())
    }

    fn check_compatible(&self, other: &MultiVector) -> Result<()> {
        if !ModuleSpec::same(&self.spec, &other.spec) {
            return Err(Error::ContextMismatch);
        }
        if self.k != other.k {
            return Err(Error::InvalidIndex(format!(
                "cannot add vectors of exterior degree {} and {}",
                self.k, other.k
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiVector) -> Result<MultiVector> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (i, c) in &other.terms {
            out.insert(i.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &MultiVector) -> Result<MultiVector> {
        self.try_add(&other.neg())
    }

    pub fn neg(&self) -> MultiVector {
        MultiVector {
            spec: self.spec.clone(),
            k: self.k,
            terms: self.terms.iter().map(|(i, c)| (i.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, factor: &CoeffPoly) -> Result<MultiVector> {
        let factor = factor.embed(self.spec.ring())?;
        let mut out = MultiVector::zero(&self.spec, self.k);
        for (i, c) in &self.terms {
            out.insert(i.clone(), c * &factor);
        }
        Ok(out)
    }

    /// α ∧ β.
    pub fn wedge(&self, other: &MultiVector) -> Result<MultiVector> {
        if !ModuleSpec::same(&self.spec, &other.spec) {
            return Err(Error::ContextMismatch);
        }
        let mut out = MultiVector::zero(&self.spec, self.k + other.k);
        let mut raw = Vec::with_capacity(self.k + other.k);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                raw.clear();
                raw.extend_from_slice(&a.0);
                raw.extend_from_slice(&b.0);
                out.accumulate(&raw, &(ca * cb))?;
            }
        }
        Ok(out)
    }

    /// Combined grading `wt(I) + deg(coeff)` across all terms.
    pub fn graded_degree(&self) -> crate::ring::Degree {
        use crate::ring::Degree;
        let mut acc = Degree::Any;
        for (i, c) in &self.terms {
            match c.graded_degree() {
                Degree::Homogeneous(d) => acc = acc.merge(d + i.weight() as u64),
                Degree::Inhomogeneous => return Degree::Inhomogeneous,
                Degree::Any => {}
            }
        }
        acc
    }

    pub fn to_wedge_terms(&self) -> Vec<WedgeTerm> {
        self.terms
            .iter()
            .map(|(i, c)| WedgeTerm {
                indices: i.0.clone(),
                coeff: c.to_string(),
            })
            .collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wedge_terms()).expect("wedge terms serialize")
    }

    /// Inverse of [`MultiVector::to_wedge_terms`].
    pub fn from_wedge_terms(
        spec: &Arc<ModuleSpec>,
        k: usize,
        terms: &[WedgeTerm],
    ) -> Result<MultiVector> {
        let mut out = MultiVector::zero(spec, k);
        for t in terms {
            let c = CoeffPoly::parse(&t.coeff, spec.ring())?;
            out.accumulate(&t.indices, &c)?;
        }
        Ok(out)
    }
}

/// The result of sorting `raw` into the basis with sign, discarding it if an
/// index repeats and reducing indices past `n` modulo `p`.
pub fn normalize_wedge(
    raw: &[u32],
    coeff: &CoeffPoly,
    spec: &Arc<ModuleSpec>,
) -> Result<MultiVector> {
    let coeff = coeff.embed(spec.ring())?;
    if raw.contains(&0) {
        return Err(Error::InvalidIndex("basis indices start at 1".into()));
    }
    let mut v = MultiVector::zero(spec, raw.len());
    v.accumulate(raw, &coeff)?;
    Ok(v)
}

impl PartialEq for MultiVector {
    fn eq(&self, other: &Self) -> bool {
        self.k == other.k && self.terms == other.terms && ModuleSpec::same(&self.spec, &other.spec)
    }
}

impl Eq for MultiVector {}

pub(crate) fn write_coefficient_prefix(
    f: &mut impl fmt::Write,
    c: &CoeffPoly,
    first: bool,
) -> fmt::Result {
    let single_negative = c.len() == 1 && c.terms().next().is_some_and(|(_, k)| k.is_negative());
    let body = if single_negative {
        (-c).to_string()
    } else {
        c.to_string()
    };
    match (first, single_negative) {
        (true, true) => f.write_str("-")?,
        (false, true) => f.write_str(" - ")?,
        (false, false) => f.write_str(" + ")?,
        (true, false) => {}
    }
    if body == "1" {
        return Ok(());
    }
    if c.len() > 1 {
        write!(f, "({body})*")
    } else {
        write!(f, "{body}*")
    }
}

impl fmt::Display for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (i, c)) in self.terms.iter().enumerate() {
            write_coefficient_prefix(f, c, n == 0)?;
            write!(f, "e{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MultiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiVector[k={}]({self})", self.k)
    }
}
