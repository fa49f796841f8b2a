//! Arithmetic in the operator ring on ⋀ᵏM(p), written in the basis of Schur
//! classes σ_λ = Δ_{I(λ)}(D).
//!
//! Evaluation at ε¹∧…∧εᵏ identifies this ring with ⋀ᵏM(p) and σ_λ with the
//! wedge ∧^{I(λ)}ε, so a product σ_λ·σ_μ is computed by applying Δ_{I(λ)}(D)
//! to ∧^{I(μ)}ε and relabelling the result.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::derivation::DerivationEngine;
use crate::error::{Error, Result};
use crate::exterior::{write_coefficient_prefix, ModuleSpec, MultiVector};
use crate::ring::{CoeffPoly, OperatorPoly};
use crate::schur::{index_to_partition, partition_to_index, schur_delta, Partition};

/// The pair `(k, M(p))` that classes live over.
#[derive(Debug, Clone)]
pub struct Context {
    pub spec: Arc<ModuleSpec>,
    pub k: usize,
}

impl Context {
    pub fn new(spec: &Arc<ModuleSpec>, k: usize) -> Result<Self> {
        let bound = spec.basis_bound();
        if k > bound as usize {
            return Err(Error::KOutOfRange { k, n: bound });
        }
        Ok(Context {
            spec: spec.clone(),
            k,
        })
    }

    /// Width of the partition box, `n − k`.
    pub fn cols(&self) -> u32 {
        self.spec.basis_bound() - self.k as u32
    }

    pub fn check_box(&self, partition: &Partition) -> Result<()> {
        if partition.fits_box(self.k, self.cols()) {
            Ok(())
        } else {
            Err(Error::BoxViolation {
                partition: format!("({partition})"),
                rows: self.k,
                cols: self.cols() as usize,
            })
        }
    }

    /// All box partitions, ascending.
    pub fn partitions(&self) -> Vec<Partition> {
        Partition::all_in_box(self.k, self.cols())
    }

    fn same(&self, other: &Context) -> bool {
        self.k == other.k && ModuleSpec::same(&self.spec, &other.spec)
    }
}

#[derive(Debug, Clone)]
pub struct SchubertClass {
    partition: Partition,
    context: Context,
}

impl SchubertClass {
    pub fn new(partition: Partition, context: &Context) -> Result<Self> {
        context.check_box(&partition)?;
        Ok(SchubertClass {
            partition,
            context: context.clone(),
        })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn to_combination(&self) -> ClassCombination {
        let mut c = ClassCombination::zero(&self.context);
        c.insert(
            self.partition.clone(),
            CoeffPoly::one(self.context.spec.ring()),
        );
        c
    }
}

/// One JSON entry of a serialized [`ClassCombination`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassTerm {
    pub partition: String,
    pub coeff: String,
}

#[derive(Clone)]
pub struct ClassCombination {
    context: Context,
    terms: BTreeMap<Partition, CoeffPoly>,
}

impl ClassCombination {
    pub fn zero(context: &Context) -> Self {
        ClassCombination {
            context: context.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn context(&self) -> &Context {
        &self.context
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending order (by size, then parts).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Partition, &CoeffPoly)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, partition: &Partition) -> Option<&CoeffPoly> {
        self.terms.get(partition)
    }

    pub(crate) fn insert(&mut self, partition: Partition, c: CoeffPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(partition) {
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

    pub fn try_add(&self, other: &ClassCombination) -> Result<ClassCombination> {
        if !self.context.same(&other.context) {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.insert(p.clone(), c.clone());
        }
        Ok(out)
    }

    /// Replaces the generator `name` by `value` in every coefficient.
    pub fn substitute(&self, name: &str, value: &CoeffPoly) -> Result<ClassCombination> {
        let mut out = ClassCombination::zero(&self.context);
        for (p, c) in &self.terms {
            out.insert(p.clone(), c.substitute(name, value)?);
        }
        Ok(out)
    }

    /// `Σ c_λ Δ_{I(λ)}(T)` over the coefficient ring.
    pub fn operator(&self) -> Result<OperatorPoly> {
        let ring = self.context.spec.ring();
        let mut acc = OperatorPoly::zero(ring);
        for (p, c) in &self.terms {
            let delta = schur_delta(&partition_to_index(p, self.context.k)?).embed(ring)?;
            acc = acc.try_add(&delta.scale(c)?)?;
        }
        Ok(acc)
    }

    /// Product in the quotient ring, with `self` acting as the operator.
    pub fn multiply(&self, other: &ClassCombination) -> Result<ClassCombination> {
        if !self.context.same(&other.context) {
            return Err(Error::ContextMismatch);
        }
        let v = class_to_vector(other)?;
        let w = DerivationEngine::new(&self.context.spec).apply_operator(&self.operator()?, &v)?;
        vector_to_classes(&w)
    }

    pub fn to_class_terms(&self) -> Vec<ClassTerm> {
        self.terms
            .iter()
            .rev()
            .map(|(p, c)| ClassTerm {
                partition: p.to_string(),
                coeff: c.to_string(),
            })
            .collect()
    }
}

impl PartialEq for ClassCombination {
    fn eq(&self, other: &Self) -> bool {
        self.context.same(&other.context) && self.terms == other.terms
    }
}

impl Eq for ClassCombination {}

/// Largest partitions first: `σ(2) + σ(1,1) + q*σ()`.
impl fmt::Display for ClassCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (p, c)) in self.terms.iter().rev().enumerate() {
            write_coefficient_prefix(f, c, n == 0)?;
            write!(f, "σ({p})")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ClassCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ClassCombination[k={}]({self})", self.context.k)
    }
}

/// `Σ c_λ σ_λ ↦ Σ c_λ ∧^{I(λ)}ε`.
pub fn class_to_vector(c: &ClassCombination) -> Result<MultiVector> {
    let ctx = &c.context;
    let mut v = MultiVector::zero(&ctx.spec, ctx.k);
    for (p, coeff) in &c.terms {
        ctx.check_box(p)?;
        v.insert(partition_to_index(p, ctx.k)?, coeff.clone());
    }
    Ok(v)
}

/// Relabels each ∧ᴵε coordinate by the partition of `I`.
pub fn vector_to_classes(v: &MultiVector) -> Result<ClassCombination> {
    let ctx = Context::new(v.spec(), v.k())?;
    let mut out = ClassCombination::zero(&ctx);
    for (i, c) in v.terms() {
        let p = index_to_partition(i);
        // MultiVector indices never exceed the basis bound
        debug_assert!(p.fits_box(ctx.k, ctx.cols()));
        ctx.check_box(&p)?;
        out.insert(p, c.clone());
    }
    Ok(out)
}

pub fn multiply_classes(a: &SchubertClass, b: &SchubertClass) -> Result<ClassCombination> {
    a.to_combination().multiply(&b.to_combination())
}

/// `Dₕ σ_λ` reduced in the quotient.
pub fn pieri_on_class(h: u32, b: &SchubertClass) -> Result<ClassCombination> {
    let v = class_to_vector(&b.to_combination())?;
    let w = DerivationEngine::new(&b.context.spec).apply_d(h, &v)?;
    vector_to_classes(&w)
}

#[derive(Debug, Clone)]
pub struct StructureConstant {
    pub lhs: Partition,
    pub rhs: Partition,
    pub result: ClassCombination,
}

/// One JSON row of a structure-constant table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantJson {
    pub lhs: String,
    pub rhs: String,
    pub result: Vec<ClassTerm>,
}

impl StructureConstant {
    pub fn to_json(&self) -> StructureConstantJson {
        StructureConstantJson {
            lhs: self.lhs.to_string(),
            rhs: self.rhs.to_string(),
            result: self.result.to_class_terms(),
        }
    }
}

/// `σ_λ · σ_μ` for every ordered pair of box partitions with
/// `|λ| + |μ| ≤ max_weight`, ordered by `(λ, μ)`.
pub fn structure_constants(
    spec: &Arc<ModuleSpec>,
    k: usize,
    max_weight: u32,
) -> Result<Vec<StructureConstant>> {
    let n = spec.rank().ok_or(Error::RequiresFiniteRank)?;
    if k == 0 || k > n as usize {
        return Err(Error::KOutOfRange { k, n });
    }
    let ctx = Context::new(spec, k)?;
    let partitions = ctx.partitions();
    let pairs: Vec<(Partition, Partition)> = partitions
        .iter()
        .flat_map(|a| partitions.iter().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| a.size() + b.size() <= max_weight)
        .collect();
    pairs
        .into_par_iter()
        .map(|(lhs, rhs)| {
            let a = SchubertClass::new(lhs.clone(), &ctx)?;
            let b = SchubertClass::new(rhs.clone(), &ctx)?;
            let result = multiply_classes(&a, &b)?;
            Ok(StructureConstant { lhs, rhs, result })
        })
        .collect()
}
