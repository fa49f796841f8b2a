//! Presentations `A[D₁,…,D_k] / (D̃ₙ₋ₖ₊₁(D,p), …, D̃ₙ(D,p))` of the operator
//! ring acting on ⋀ᵏM(p).
//!
//! `D̃ⱼ(T₁,…,T_k)` is the coefficient of tʲ in
//! `1 / (1 − Δ₍₂₎t + Δ₍₂,₃₎t² − … + (−1)ᵏ Δ₍₂,…,ₖ₊₁₎tᵏ)`.

use std::fmt::Write as _;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classes::{vector_to_classes, ClassCombination};
use crate::derivation::{dbar_operator_poly, DerivationEngine};
use crate::error::{Error, Result};
use crate::exterior::{ModuleSpec, MultiVector};
use crate::ring::{Generator, OperatorPoly, Ring};

/// `[D̃₀, D̃₁, …, D̃_max]` for the given `k`, by truncated series inversion.
pub fn dtilde_series(max: usize, k: usize) -> Vec<OperatorPoly> {
    let z = Ring::integers();
    // denominator coefficients: d_i = (−1)^i Δ₍₂,…,ᵢ₊₁₎
    let denom: Vec<OperatorPoly> = (0..=k)
        .map(|i| {
            let delta = dbar_operator_poly(i as u32);
            if i % 2 == 1 {
                -&delta
            } else {
                delta
            }
        })
        .collect();
    let mut out: Vec<OperatorPoly> = Vec::with_capacity(max + 1);
    out.push(OperatorPoly::one(&z));
    for j in 1..=max {
        let mut acc = OperatorPoly::zero(&z);
        for i in 1..=j.min(k) {
            acc = &acc - &(&denom[i] * &out[j - i]);
        }
        out.push(acc);
    }
    out
}

pub fn dtilde_poly(j: usize, k: usize) -> OperatorPoly {
    dtilde_series(j, k).pop().expect("series has j + 1 entries")
}

fn check_range(spec: &ModuleSpec, k: usize) -> Result<u32> {
    let n = spec.rank().ok_or(Error::RequiresFiniteRank)?;
    if k == 0 || k > n as usize {
        return Err(Error::KOutOfRange { k, n });
    }
    Ok(n)
}

fn relation_from_series(
    j: usize,
    n: usize,
    k: usize,
    series: &[OperatorPoly],
    spec: &ModuleSpec,
) -> Result<OperatorPoly> {
    let ring = spec.ring();
    let top = n - k + j;
    let mut acc = series[top].embed(ring)?;
    for i in 1..=n.min(top) {
        let c = spec.coefficient(i);
        if c.is_zero() {
            continue;
        }
        acc = acc.try_add(&series[top - i].embed(ring)?.scale(&c)?)?;
    }
    Ok(acc)
}

/// `D̃ₙ₋ₖ₊ⱼ(D_k, p) = D̃ₙ₋ₖ₊ⱼ(D_k) + Σᵢ cᵢ D̃ₙ₋ₖ₊ⱼ₋ᵢ(D_k)`.
pub fn relation_poly(j: usize, spec: &ModuleSpec, k: usize) -> Result<OperatorPoly> {
    let n = check_range(spec, k)? as usize;
    if j == 0 {
        return Err(Error::InvalidIndex("relation indices start at 1".into()));
    }
    let series = dtilde_series(n - k + j, k);
    relation_from_series(j, n, k, &series, spec)
}

/// Ring generators serialized in presentation documents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationJson {
    pub k: usize,
    pub n: u32,
    pub ring: Vec<Generator>,
    pub p: String,
    pub generators: Vec<String>,
    pub relations: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct PresentationResult {
    pub k: usize,
    pub n: u32,
    pub ring: Arc<Ring>,
    pub p: String,
    pub relations: Vec<OperatorPoly>,
}

impl PresentationResult {
    /// `D1, …, Dk`; `Di` has degree `i`.
    pub fn generators(&self) -> Vec<String> {
        (1..=self.k).map(|i| format!("D{i}")).collect()
    }

    pub fn relation_strings(&self) -> Vec<String> {
        self.relations.iter().map(|r| r.display_with("D")).collect()
    }

    pub fn to_json(&self) -> PresentationJson {
        PresentationJson {
            k: self.k,
            n: self.n,
            ring: self.ring.generators().to_vec(),
            p: self.p.clone(),
            generators: self.generators(),
            relations: self.relation_strings(),
        }
    }

    /// `A[D1, …, Dk] / (r1, …, rk)` with `A` written out.
    pub fn quotient_string(&self) -> String {
        let mut base = String::from("Z");
        if !self.ring.is_empty() {
            let names: Vec<&str> = self
                .ring
                .generators()
                .iter()
                .map(|g| g.name.as_str())
                .collect();
            write!(base, "[{}]", names.join(", ")).unwrap();
        }
        format!(
            "{base}[{}] / ({})",
            self.generators().join(", "),
            self.relation_strings().join(", ")
        )
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "k = {}, n = {}, p = {}", self.k, self.n, self.p).unwrap();
        let degrees: Vec<String> = self
            .ring
            .generators()
            .iter()
            .map(|g| format!("deg {} = {}", g.name, g.degree))
            .collect();
        if !degrees.is_empty() {
            writeln!(s, "coefficients: {}", degrees.join(", ")).unwrap();
        }
        for (j, r) in self.relation_strings().iter().enumerate() {
            writeln!(s, "relation {}: {r}", j + 1).unwrap();
        }
        writeln!(s, "A*(^{} M(p)) = {}", self.k, self.quotient_string()).unwrap();
        s
    }
}

pub fn presentation(spec: &Arc<ModuleSpec>, k: usize) -> Result<PresentationResult> {
    let n = check_range(spec, k)?;
    let series = dtilde_series(n as usize, k);
    let relations = (1..=k)
        .map(|j| relation_from_series(j, n as usize, k, &series, spec))
        .collect::<Result<Vec<_>>>()?;
    Ok(PresentationResult {
        k,
        n,
        ring: spec.ring().clone(),
        p: spec.polynomial_string(),
        relations,
    })
}

/// The residue class of `P(D)` in Schur-class coordinates, read off from
/// `P(D) ε¹∧…∧εᵏ`. `P` lies in the relation ideal iff the result is zero.
///
/// `P` may use any `Tₕ`; for `h > k` the operator `Dₕ` is itself a
/// polynomial in `D₁…D_k`.
pub fn normal_form(p: &OperatorPoly, spec: &Arc<ModuleSpec>, k: usize) -> Result<ClassCombination> {
    let lowest = MultiVector::lowest(spec, k)?;
    let v = DerivationEngine::new(spec).apply_operator(p, &lowest)?;
    vector_to_classes(&v)
}
