//! Serializable documents shared by the CLI and the C ABI.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::classes::{
    multiply_classes, pieri_on_class, structure_constants, vector_to_classes, ClassTerm, Context,
    SchubertClass, StructureConstantJson,
};
use crate::derivation::DerivationEngine;
use crate::error::{Error, Result};
use crate::exterior::{ModuleSpec, MultiVector, WedgeTerm};
use crate::presentation::{normal_form, presentation, PresentationJson};
use crate::ring::{CoeffPoly, Generator, OperatorPoly, Ring};
use crate::schur::{giambelli_vector, partition_to_index, schur_delta, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductDocument {
    pub k: usize,
    pub n: u32,
    pub p: String,
    pub lhs: String,
    pub rhs: String,
    pub result: Vec<ClassTerm>,
    #[serde(skip)]
    pub result_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PieriDocument {
    pub k: usize,
    pub n: u32,
    pub p: String,
    pub order: u32,
    pub class: String,
    pub result: Vec<ClassTerm>,
    #[serde(skip)]
    pub result_text: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GiambelliDocument {
    pub k: usize,
    pub n: u32,
    pub p: String,
    pub partition: String,
    pub index: Vec<u32>,
    pub delta: String,
    pub vector: Vec<WedgeTerm>,
    #[serde(skip)]
    pub vector_text: String,
}

/// Builds `M(p)` from a textual description: `classical` (Xⁿ), `quantum`
/// (Xⁿ + q with `q` of degree n added to the ring) or a monic polynomial of
/// degree `n` in `X` over the ring declared by `ring` (`name:degree,...`).
pub fn module_from_description(p: &str, n: u32, ring: &str) -> Result<Arc<ModuleSpec>> {
    if n == 0 {
        return Err(Error::InvalidModule("n must be positive".into()));
    }
    let ring = Ring::parse_declaration(ring)?;
    match p.trim() {
        "classical" => ModuleSpec::monic(&ring, vec![CoeffPoly::zero(&ring); n as usize]),
        "quantum" => {
            let ring = ring.with_generator(Generator::new("q", n))?;
            ModuleSpec::quantum_over(&ring, n)
        }
        src => ModuleSpec::from_polynomial(src, &ring, Some(n)),
    }
}

fn rank(spec: &ModuleSpec) -> u32 {
    spec.basis_bound()
}

pub fn presentation_document(spec: &Arc<ModuleSpec>, k: usize) -> Result<PresentationJson> {
    Ok(presentation(spec, k)?.to_json())
}

pub fn product_document(
    spec: &Arc<ModuleSpec>,
    k: usize,
    lhs: &str,
    rhs: &str,
) -> Result<ProductDocument> {
    let ctx = Context::new(spec, k)?;
    let a = SchubertClass::new(lhs.parse()?, &ctx)?;
    let b = SchubertClass::new(rhs.parse()?, &ctx)?;
    let product = multiply_classes(&a, &b)?;
    Ok(ProductDocument {
        k,
        n: rank(spec),
        p: spec.polynomial_string(),
        lhs: a.partition().to_string(),
        rhs: b.partition().to_string(),
        result: product.to_class_terms(),
        result_text: product.to_string(),
    })
}

pub fn pieri_document(
    spec: &Arc<ModuleSpec>,
    k: usize,
    order: u32,
    class: &str,
) -> Result<PieriDocument> {
    let ctx = Context::new(spec, k)?;
    let b = SchubertClass::new(class.parse()?, &ctx)?;
    let result = pieri_on_class(order, &b)?;
    Ok(PieriDocument {
        k,
        n: rank(spec),
        p: spec.polynomial_string(),
        order,
        class: b.partition().to_string(),
        result: result.to_class_terms(),
        result_text: result.to_string(),
    })
}

pub fn giambelli_document(
    spec: &Arc<ModuleSpec>,
    k: usize,
    partition: &str,
) -> Result<GiambelliDocument> {
    let ctx = Context::new(spec, k)?;
    let lambda: Partition = partition.parse()?;
    ctx.check_box(&lambda)?;
    let index = partition_to_index(&lambda, k)?;
    let v = giambelli_vector(&index, spec)?;
    Ok(GiambelliDocument {
        k,
        n: rank(spec),
        p: spec.polynomial_string(),
        partition: lambda.to_string(),
        index: index.indices().to_vec(),
        delta: schur_delta(&index).display_with("D"),
        vector: v.to_wedge_terms(),
        vector_text: v.to_string(),
    })
}

pub fn constants_document(
    spec: &Arc<ModuleSpec>,
    k: usize,
    max_weight: u32,
) -> Result<Vec<StructureConstantJson>> {
    Ok(structure_constants(spec, k, max_weight)?
        .iter()
        .map(|row| row.to_json())
        .collect())
}

/// Normal form of an operator polynomial written in `D1..Dk`.
pub fn normal_form_document(
    spec: &Arc<ModuleSpec>,
    k: usize,
    operator: &str,
) -> Result<Vec<ClassTerm>> {
    let p = OperatorPoly::parse(operator, spec.ring(), "D")?;
    Ok(normal_form(&p, spec, k)?.to_class_terms())
}

/// `D_h` applied to a serialized vector of exterior degree `k`.
pub fn apply_d_document(
    spec: &Arc<ModuleSpec>,
    k: usize,
    h: u32,
    vector: &[WedgeTerm],
) -> Result<Vec<WedgeTerm>> {
    let v = MultiVector::from_wedge_terms(spec, k, vector)?;
    Ok(DerivationEngine::new(spec).apply_d(h, &v)?.to_wedge_terms())
}

/// Schur-class coordinates of a serialized vector.
pub fn classes_of_vector(
    spec: &Arc<ModuleSpec>,
    k: usize,
    vector: &[WedgeTerm],
) -> Result<Vec<ClassTerm>> {
    let v = MultiVector::from_wedge_terms(spec, k, vector)?;
    Ok(vector_to_classes(&v)?.to_class_terms())
}
