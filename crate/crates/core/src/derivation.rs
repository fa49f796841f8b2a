//! The canonical Hasse-Schmidt derivation `D_t = Σ Dₕ tʰ` on ⋀M(p), determined
//! by `Dₕ εⁱ = εⁱ⁺ʰ`, and the coefficients `D̄ₕ` of its inverse
//! `D_t⁻¹ = Σ (−1)ʰ D̄ₕ tʰ`.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exterior::{IndexTuple, ModuleSpec, MultiVector};
use crate::ring::{CoeffPoly, OperatorPoly};
use crate::schur::schur_delta;

/// Dₕ(ε^{i₁}∧…∧ε^{i_k}) by summing ε^{i₁+h₁}∧…∧ε^{i_k+h_k} over every
/// composition `h₁ + … + h_k = h` and normalizing each summand.
///
/// Exponential in `k`; this is the reference the Pieri path is tested against.
pub fn leibniz_expand(h: u32, index: &IndexTuple, spec: &Arc<ModuleSpec>) -> Result<MultiVector> {
    let k = index.len();
    let mut out = MultiVector::zero(spec, k);
    let one = CoeffPoly::one(spec.ring());
    if k == 0 {
        if h == 0 {
            out.insert(IndexTuple::lowest(0), one);
        }
        return Ok(out);
    }
    let base = index.indices();
    let mut raw = base.to_vec();
    let mut result = Ok(());
    for_each_composition(h, k, &mut |parts| {
        if result.is_err() {
            return;
        }
        for (j, hj) in parts.iter().enumerate() {
            raw[j] = base[j] + hj;
        }
        result = out.accumulate(&raw, &one);
    });
    result?;
    Ok(out)
}

fn for_each_composition(h: u32, k: usize, f: &mut impl FnMut(&[u32])) {
    fn go(left: u32, slot: usize, parts: &mut Vec<u32>, f: &mut impl FnMut(&[u32])) {
        if slot + 1 == parts.len() {
            parts[slot] = left;
            f(parts);
            return;
        }
        for x in 0..=left {
            parts[slot] = x;
            go(left - x, slot + 1, parts, f);
        }
    }
    let mut parts = vec![0; k];
    go(h, 0, &mut parts, f);
}

/// The shift tuples `H = (h₁, …, h_k)` with `Σ hⱼ = h` and
/// `iⱼ + hⱼ < iⱼ₊₁` for every `j < k`.
pub fn pieri_shifts(index: &IndexTuple, h: u32) -> Vec<Vec<u32>> {
    fn go(idx: &[u32], j: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if j + 1 == idx.len() {
            cur.push(left);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        let room = idx[j + 1] - idx[j] - 1;
        for x in 0..=left.min(room) {
            cur.push(x);
            go(idx, j + 1, left - x, cur, out);
            cur.pop();
        }
    }
    let idx = index.indices();
    let mut out = Vec::new();
    if idx.is_empty() {
        if h == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    go(idx, 0, h, &mut Vec::with_capacity(idx.len()), &mut out);
    out
}

/// Dₕ(∧ᴵε) by Pieri's formula: only the shifts that keep the indices strictly
/// increasing survive, each with coefficient 1, before reduction mod p.
pub fn pieri_expand(h: u32, index: &IndexTuple, spec: &Arc<ModuleSpec>) -> Result<MultiVector> {
    let mut out = MultiVector::zero(spec, index.len());
    pieri_accumulate(h, index, &CoeffPoly::one(spec.ring()), &mut out)?;
    Ok(out)
}

fn pieri_accumulate(
    h: u32,
    index: &IndexTuple,
    coeff: &CoeffPoly,
    out: &mut MultiVector,
) -> Result<()> {
    let base = index.indices();
    let mut raw = base.to_vec();
    for shift in pieri_shifts(index, h) {
        for (j, hj) in shift.iter().enumerate() {
            raw[j] = base[j] + hj;
        }
        out.accumulate(&raw, coeff)?;
    }
    Ok(())
}

/// Dₕ and D̄ₕ acting on a fixed module.
#[derive(Debug, Clone)]
pub struct DerivationEngine {
    spec: Arc<ModuleSpec>,
}

impl DerivationEngine {
    pub fn new(spec: &Arc<ModuleSpec>) -> Self {
        DerivationEngine { spec: spec.clone() }
    }

    pub fn spec(&self) -> &Arc<ModuleSpec> {
        &self.spec
    }

    fn check(&self, v: &MultiVector) -> Result<()> {
        if ModuleSpec::same(&self.spec, v.spec()) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    pub fn apply_d(&self, h: u32, v: &MultiVector) -> Result<MultiVector> {
        self.check(v)?;
        if h == 0 {
            return Ok(v.clone());
        }
        let mut out = MultiVector::zero(&self.spec, v.k());
        for (index, c) in v.terms() {
            pieri_accumulate(h, index, c, &mut out)?;
        }
        Ok(out)
    }

    /// `[D̄₀v, D̄₁v, …, D̄ₕv]` via `D̄ⱼ = Σᵢ₌₁ʲ (−1)ⁱ⁺¹ Dᵢ D̄ⱼ₋ᵢ`.
    pub fn dbar_sequence(&self, h: u32, v: &MultiVector) -> Result<Vec<MultiVector>> {
        self.check(v)?;
        let mut seq: Vec<MultiVector> = Vec::with_capacity(h as usize + 1);
        seq.push(v.clone());
        for j in 1..=h {
            let mut acc = MultiVector::zero(&self.spec, v.k());
            for i in 1..=j {
                let term = self.apply_d(i, &seq[(j - i) as usize])?;
                acc = if i % 2 == 1 {
                    acc.try_add(&term)?
                } else {
                    acc.try_sub(&term)?
                };
            }
            seq.push(acc);
        }
        Ok(seq)
    }

    pub fn apply_dbar(&self, h: u32, v: &MultiVector) -> Result<MultiVector> {
        Ok(self
            .dbar_sequence(h, v)?
            .pop()
            .expect("sequence has h + 1 entries"))
    }

    /// Evaluates `P(D)` on `v` by substituting `Tᵢ ↦ Dᵢ`. Within a monomial
    /// the operators are applied in ascending index order.
    pub fn apply_operator(&self, p: &OperatorPoly, v: &MultiVector) -> Result<MultiVector> {
        self.check(v)?;
        let mut out = MultiVector::zero(&self.spec, v.k());
        for (m, c) in p.terms() {
            let c = c.embed(self.spec.ring())?;
            let mut w = v.clone();
            for (i, e) in m.factors() {
                for _ in 0..e {
                    if w.is_zero() {
                        break;
                    }
                    w = self.apply_d(i as u32, &w)?;
                }
            }
            out = out.try_add(&w.scale(&c)?)?;
        }
        Ok(out)
    }
}

pub fn apply_d(h: u32, v: &MultiVector) -> Result<MultiVector> {
    DerivationEngine::new(v.spec()).apply_d(h, v)
}

pub fn apply_dbar(h: u32, v: &MultiVector) -> Result<MultiVector> {
    DerivationEngine::new(v.spec()).apply_dbar(h, v)
}

/// `D̄ₕ` as the Schur determinant `Δ₍₂,₃,…,ₕ₊₁₎(T)`.
pub fn dbar_operator_poly(h: u32) -> OperatorPoly {
    if h == 0 {
        return OperatorPoly::one(&crate::ring::Ring::integers());
    }
    let index = IndexTuple::new((2..=h + 1).collect()).expect("increasing");
    schur_delta(&index)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;

    fn t(v: Vec<u32>) -> IndexTuple {
        IndexTuple::new(v).unwrap()
    }

    fn wedge(spec: &Arc<ModuleSpec>, terms: &[&[u32]]) -> MultiVector {
        let mut v = MultiVector::zero(spec, terms[0].len());
        for i in terms {
            v.accumulate(i, &CoeffPoly::one(spec.ring())).unwrap();
        }
        v
    }

    #[test]
    fn leibniz_examples() {
        let spec = ModuleSpec::classical(6).unwrap();
        assert_eq!(
            leibniz_expand(2, &t(vec![1, 2]), &spec).unwrap(),
            wedge(&spec, &[&[1, 4]])
        );
        assert_eq!(
            leibniz_expand(0, &t(vec![2, 5]), &spec).unwrap(),
            wedge(&spec, &[&[2, 5]])
        );
        assert_eq!(
            leibniz_expand(1, &t(vec![1, 2]), &spec).unwrap(),
            wedge(&spec, &[&[1, 3]])
        );
    }

    #[test]
    fn pieri_examples() {
        let spec = ModuleSpec::classical(6).unwrap();
        assert_eq!(
            pieri_expand(2, &t(vec![1, 2]), &spec).unwrap(),
            wedge(&spec, &[&[1, 4]])
        );
        assert_eq!(
            pieri_expand(2, &t(vec![1, 3]), &spec).unwrap(),
            wedge(&spec, &[&[1, 5], &[2, 4]])
        );
        assert_eq!(
            pieri_expand(0, &t(vec![1, 3]), &spec).unwrap(),
            wedge(&spec, &[&[1, 3]])
        );
        assert_eq!(
            pieri_shifts(&t(vec![1, 3]), 2),
            vec![vec![0, 2], vec![1, 1]]
        );
    }

    #[test]
    fn apply_d_examples() {
        let spec = ModuleSpec::classical(6).unwrap();
        let v = wedge(&spec, &[&[1, 2], &[1, 3]]);
        assert_eq!(
            apply_d(1, &v).unwrap(),
            wedge(&spec, &[&[1, 3], &[1, 4], &[2, 3]])
        );
        assert!(apply_d(3, &MultiVector::zero(&spec, 2)).unwrap().is_zero());
        assert_eq!(apply_d(0, &v).unwrap(), v);
    }

    #[test]
    fn dbar_examples() {
        let spec = ModuleSpec::classical(6).unwrap();
        let e1 = wedge(&spec, &[&[1]]);
        assert_eq!(apply_dbar(1, &e1).unwrap(), wedge(&spec, &[&[2]]));
        assert!(apply_dbar(2, &e1).unwrap().is_zero());
        let v = wedge(&spec, &[&[1, 2], &[2, 5]]);
        assert_eq!(apply_dbar(0, &v).unwrap(), v);
    }

    #[test]
    fn dbar_polynomials() {
        let z = Ring::integers();
        let parse = |s| OperatorPoly::parse(s, &z, "T").unwrap();
        assert_eq!(dbar_operator_poly(1), parse("T1"));
        assert_eq!(dbar_operator_poly(2), parse("T1^2 - T2"));
        assert_eq!(dbar_operator_poly(3), parse("T1^3 - 2*T1*T2 + T3"));
        assert!(dbar_operator_poly(4).in_variable_ideal(&[1, 2, 3, 4]));
    }

    #[test]
    fn quantum_reduction_inside_d() {
        let spec = ModuleSpec::quantum(4).unwrap();
        // D₁(ε²∧ε⁴) = ε³∧ε⁴ + ε²∧ε⁵, ε⁵ = −qε¹
        let v = apply_d(1, &wedge(&spec, &[&[2, 4]])).unwrap();
        let q = CoeffPoly::parse("q", spec.ring()).unwrap();
        let mut expected = wedge(&spec, &[&[3, 4]]);
        expected.accumulate(&[1, 2], &q).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn free_module_overflow_is_reported() {
        let spec = ModuleSpec::free(&Ring::integers(), 4).unwrap();
        let err = pieri_expand(2, &t(vec![1, 3]), &spec).unwrap_err();
        assert_eq!(err, Error::TruncationOverflow { index: 5, bound: 4 });
    }

    #[test]
    fn empty_wedge() {
        let spec = ModuleSpec::classical(3).unwrap();
        let unit = MultiVector::lowest(&spec, 0).unwrap();
        assert_eq!(apply_d(0, &unit).unwrap(), unit);
        assert!(apply_d(2, &unit).unwrap().is_zero());
        assert!(leibniz_expand(1, &IndexTuple::lowest(0), &spec)
            .unwrap()
            .is_zero());
    }
}
