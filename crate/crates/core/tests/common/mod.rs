//! Fixtures and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use rand::seq::index::sample;
use rand::Rng;
use schubert_core::{CoeffPoly, Generator, IndexTuple, ModuleSpec, MultiVector, Partition, Ring};

/// `Xⁿ + c₁Xⁿ⁻¹ + … + cₙ` with `cᵢ` a free generator of degree `i`.
pub fn generic_spec(n: u32) -> Arc<ModuleSpec> {
    let ring = Ring::new(
        (1..=n)
            .map(|i| Generator::new(format!("c{i}"), i))
            .collect(),
    )
    .unwrap();
    let coeffs = (1..=n)
        .map(|i| CoeffPoly::generator(&ring, &format!("c{i}")).unwrap())
        .collect();
    ModuleSpec::monic(&ring, coeffs).unwrap()
}

pub fn classical(n: u32) -> Arc<ModuleSpec> {
    ModuleSpec::classical(n).unwrap()
}

pub fn quantum(n: u32) -> Arc<ModuleSpec> {
    ModuleSpec::quantum(n).unwrap()
}

pub fn free(bound: u32) -> Arc<ModuleSpec> {
    ModuleSpec::free(&Ring::integers(), bound).unwrap()
}

/// Classical, quantum and generic specs of rank `n`.
pub fn three_specs(n: u32) -> Vec<(&'static str, Arc<ModuleSpec>)> {
    vec![
        ("classical", classical(n)),
        ("quantum", quantum(n)),
        ("generic", generic_spec(n)),
    ]
}

/// A random coefficient: a small nonzero integer, possibly times a ring
/// generator.
pub fn random_coeff<R: Rng>(rng: &mut R, ring: &Arc<Ring>) -> CoeffPoly {
    let mut c = 0i64;
    while c == 0 {
        c = rng.gen_range(-3..=3);
    }
    let base = CoeffPoly::constant(ring, c);
    if ring.is_empty() || rng.gen_bool(0.5) {
        return base;
    }
    let g = &ring.generators()[rng.gen_range(0..ring.len())];
    base.try_mul(&CoeffPoly::generator(ring, &g.name).unwrap())
        .unwrap()
}

pub fn random_index<R: Rng>(rng: &mut R, k: usize, bound: u32) -> IndexTuple {
    let mut idx: Vec<u32> = sample(rng, bound as usize, k)
        .into_iter()
        .map(|i| i as u32 + 1)
        .collect();
    idx.sort_unstable();
    IndexTuple::new(idx).unwrap()
}

/// A random element of ⋀ᵏ with up to `terms` basis terms.
pub fn random_vector<R: Rng>(
    rng: &mut R,
    spec: &Arc<ModuleSpec>,
    k: usize,
    terms: usize,
) -> MultiVector {
    let mut v = MultiVector::zero(spec, k);
    for _ in 0..rng.gen_range(1..=terms) {
        let b = MultiVector::basis(spec, &random_index(rng, k, spec.basis_bound())).unwrap();
        v = v
            .try_add(&b.scale(&random_coeff(rng, spec.ring())).unwrap())
            .unwrap();
    }
    v
}

pub fn int(ring: &Arc<Ring>, v: i64) -> CoeffPoly {
    CoeffPoly::constant(ring, BigInt::from(v))
}

// ---------------------------------------------------------------------------
// Independent oracle: wedges as raw index lists, reduction by long division.
// ---------------------------------------------------------------------------

/// Coordinates of εᵐ on ε¹..εⁿ, from `X · (X^{m-1} mod p)` computed by
/// schoolbook division. Keys are basis indices.
pub fn division_oracle(spec: &ModuleSpec, m: u32) -> BTreeMap<u32, CoeffPoly> {
    let ring = spec.ring();
    let n = spec.rank().expect("finite rank") as usize;
    let mut r: Vec<CoeffPoly> = vec![CoeffPoly::zero(ring); m as usize];
    r[m as usize - 1] = CoeffPoly::one(ring);
    for d in (n..m as usize).rev() {
        let lead = r[d].clone();
        if lead.is_zero() {
            continue;
        }
        for i in 1..=n {
            let c = spec.coefficient(i);
            r[d - i] = r[d - i].try_sub(&lead.try_mul(&c).unwrap()).unwrap();
        }
        r[d] = CoeffPoly::zero(ring);
    }
    r.into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j as u32 + 1, c))
        .collect()
}

pub type OracleWedge = BTreeMap<Vec<u32>, CoeffPoly>;

fn add_into(acc: &mut OracleWedge, key: Vec<u32>, c: CoeffPoly) {
    let entry = acc
        .entry(key.clone())
        .or_insert_with(|| CoeffPoly::zero(c.ring()));
    *entry = entry.try_add(&c).unwrap();
    if entry.is_zero() {
        acc.remove(&key);
    }
}

/// Sorts by bubble sort, counting transpositions; `None` on a repeat.
fn bubble_sign(raw: &[u32]) -> Option<(Vec<u32>, bool)> {
    let mut v = raw.to_vec();
    let mut odd = false;
    for i in 0..v.len() {
        for j in 0..v.len() - 1 - i {
            if v[j] == v[j + 1] {
                return None;
            }
            if v[j] > v[j + 1] {
                v.swap(j, j + 1);
                odd = !odd;
            }
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some((v, odd))
}

/// Expands a raw wedge ε^{r₁}∧…∧ε^{r_k} multilinearly through the division
/// oracle and normalizes.
fn oracle_reduce_raw(spec: &ModuleSpec, raw: &[u32], coeff: &CoeffPoly, out: &mut OracleWedge) {
    let n = spec.rank().unwrap();
    let factors: Vec<BTreeMap<u32, CoeffPoly>> = raw
        .iter()
        .map(|&m| {
            if m <= n {
                BTreeMap::from([(m, CoeffPoly::one(spec.ring()))])
            } else {
                division_oracle(spec, m)
            }
        })
        .collect();
    let mut partial: Vec<(Vec<u32>, CoeffPoly)> = vec![(Vec::new(), coeff.clone())];
    for f in &factors {
        let mut next = Vec::new();
        for (idx, c) in &partial {
            for (i, fc) in f {
                let mut idx2 = idx.clone();
                idx2.push(*i);
                next.push((idx2, c.try_mul(fc).unwrap()));
            }
        }
        partial = next;
    }
    for (idx, c) in partial {
        if let Some((sorted, odd)) = bubble_sign(&idx) {
            let c = if odd { c.scale(&BigInt::from(-1)) } else { c };
            add_into(out, sorted, c);
        }
    }
}

fn compositions(h: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if h == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=h {
        for mut rest in compositions(h - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// `D_h` by the order-h Leibniz rule applied factor by factor.
pub fn oracle_apply_d(spec: &ModuleSpec, h: u32, v: &OracleWedge) -> OracleWedge {
    let mut out = OracleWedge::new();
    for (idx, c) in v {
        for comp in compositions(h, idx.len()) {
            let raw: Vec<u32> = idx.iter().zip(&comp).map(|(i, s)| i + s).collect();
            oracle_reduce_raw(spec, &raw, c, &mut out);
        }
    }
    out
}

fn permutations(k: usize) -> Vec<(Vec<usize>, bool)> {
    if k == 0 {
        return vec![(vec![], false)];
    }
    let mut out = Vec::new();
    for (p, odd) in permutations(k - 1) {
        // insert k-1 at every position; moving it left by t positions adds t inversions
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            let t = p.len() - pos;
            out.push((q, odd ^ (t % 2 == 1)));
        }
    }
    out
}

/// `det[D_{i_j − i}]` applied to `v` by the permutation expansion of the
/// determinant.
pub fn oracle_apply_schur(spec: &ModuleSpec, index: &[u32], v: &OracleWedge) -> OracleWedge {
    let k = index.len();
    let mut out = OracleWedge::new();
    for (perm, odd) in permutations(k) {
        // row i (1-based), column j: D_{i_j - i}
        let mut orders = Vec::with_capacity(k);
        let mut vanishes = false;
        for (row, &col) in perm.iter().enumerate() {
            let h = index[col] as i64 - (row as i64 + 1);
            if h < 0 {
                vanishes = true;
                break;
            }
            orders.push(h as u32);
        }
        if vanishes {
            continue;
        }
        let mut w = v.clone();
        for h in orders {
            if h > 0 {
                w = oracle_apply_d(spec, h, &w);
            }
        }
        for (idx, c) in w {
            let c = if odd { c.scale(&BigInt::from(-1)) } else { c };
            add_into(&mut out, idx, c);
        }
    }
    out
}

pub fn oracle_basis(spec: &ModuleSpec, index: &[u32]) -> OracleWedge {
    BTreeMap::from([(index.to_vec(), CoeffPoly::one(spec.ring()))])
}

pub fn oracle_index_of(partition: &[u32], k: usize) -> Vec<u32> {
    (1..=k)
        .map(|j| j as u32 + partition.get(k - j).copied().unwrap_or(0))
        .collect()
}

pub fn oracle_partition_of(index: &[u32]) -> Vec<u32> {
    let k = index.len();
    let mut parts: Vec<u32> = (0..k).rev().map(|j| index[j] - (j as u32 + 1)).collect();
    while parts.last() == Some(&0) {
        parts.pop();
    }
    parts
}

/// `σ_λ · σ_μ` as `partition → coefficient`, computed entirely by the oracle.
pub fn oracle_product(
    spec: &ModuleSpec,
    k: usize,
    lambda: &[u32],
    mu: &[u32],
) -> BTreeMap<Vec<u32>, CoeffPoly> {
    let start = oracle_basis(spec, &oracle_index_of(mu, k));
    oracle_apply_schur(spec, &oracle_index_of(lambda, k), &start)
        .into_iter()
        .map(|(idx, c)| (oracle_partition_of(&idx), c))
        .collect()
}

pub fn to_oracle(v: &MultiVector) -> OracleWedge {
    v.terms()
        .map(|(i, c)| (i.indices().to_vec(), c.clone()))
        .collect()
}

pub fn classes_map(c: &schubert_core::ClassCombination) -> BTreeMap<Vec<u32>, CoeffPoly> {
    c.terms()
        .map(|(p, c)| (p.parts().to_vec(), c.clone()))
        .collect()
}

pub fn partition(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}
