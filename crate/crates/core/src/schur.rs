//! Schur determinants `Δ_I(T) = det[T_{i_j − i}]`, partition labels, and
//! Giambelli's formula `∧ᴵε = Δ_I(D) ε¹∧…∧εᵏ`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::derivation::DerivationEngine;
use crate::error::{Error, Result};
use crate::exterior::{IndexTuple, ModuleSpec, MultiVector};
use crate::ring::{OperatorPoly, Ring};

/// A weakly decreasing sequence of positive parts. Zero parts are stripped.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(h)`.
    pub fn row(h: u32) -> Self {
        Partition::new(vec![h]).expect("single part")
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    /// `|λ|`.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// At most `rows` parts, each at most `cols`.
    pub fn fits_box(&self, rows: usize, cols: u32) -> bool {
        self.0.len() <= rows && self.0.first().is_none_or(|&p| p <= cols)
    }

    /// Every partition inside the `rows × cols` box.
    pub fn all_in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn go(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                go(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Comma-separated parts; `""` and `"0"` are the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("`{s}` is not a list of parts")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// `(1 + λ_k, 2 + λ_{k−1}, …, k + λ₁)`.
pub fn partition_to_index(partition: &Partition, k: usize) -> Result<IndexTuple> {
    if partition.len() > k {
        return Err(Error::InvalidPartition(format!(
            "({partition}) has more than {k} parts"
        )));
    }
    let parts = partition.parts();
    let indices = (0..k)
        .map(|j| {
            // position j counts from the smallest part
            let part = parts.get(k - 1 - j).copied().unwrap_or(0);
            j as u32 + 1 + part
        })
        .collect();
    Ok(IndexTuple::from_sorted(indices))
}

/// `(i_k − k, …, i₁ − 1)`.
pub fn index_to_partition(index: &IndexTuple) -> Partition {
    let parts = index
        .indices()
        .iter()
        .enumerate()
        .rev()
        .map(|(j, &i)| i - (j as u32 + 1))
        .collect();
    Partition::new(parts).expect("strictly increasing tuples give partitions")
}

/// `Δ_I(T) = det[(T_{i_j − i})_{1 ≤ i,j ≤ k}]` with `T₀ = 1`, `T₍<0₎ = 0`,
/// expanded by cofactors along the columns with memoized minors.
pub fn schur_delta(index: &IndexTuple) -> OperatorPoly {
    let ring = Ring::integers();
    let idx = index.indices();
    let k = idx.len();
    assert!(k < 64, "determinants beyond 63 rows are not supported");
    let entry = |row: usize, col: usize| -> OperatorPoly {
        OperatorPoly::t(&ring, idx[col] as i64 - (row as i64 + 1))
    };
    let mut memo: HashMap<u64, OperatorPoly> = HashMap::new();

    fn minor(
        rows: u64,
        col: usize,
        k: usize,
        entry: &dyn Fn(usize, usize) -> OperatorPoly,
        memo: &mut HashMap<u64, OperatorPoly>,
        ring: &Arc<Ring>,
    ) -> OperatorPoly {
        if col == k {
            return OperatorPoly::one(ring);
        }
        if let Some(p) = memo.get(&rows) {
            return p.clone();
        }
        let mut acc = OperatorPoly::zero(ring);
        let mut position = 0;
        for r in 0..k {
            if rows & (1 << r) == 0 {
                continue;
            }
            let a = entry(r, col);
            if !a.is_zero() {
                let sub = minor(rows & !(1 << r), col + 1, k, entry, memo, ring);
                let term = &a * &sub;
                acc = if position % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                };
            }
            position += 1;
        }
        memo.insert(rows, acc.clone());
        acc
    }

    let all = if k == 0 { 0 } else { (1u64 << k) - 1 };
    minor(all, 0, k, &entry, &mut memo, &ring)
}

/// `Δ_I(D)` applied to ε¹∧…∧εᵏ.
pub fn giambelli_vector(index: &IndexTuple, spec: &Arc<ModuleSpec>) -> Result<MultiVector> {
    if index.max_index() > spec.basis_bound() {
        return Err(match spec.rank() {
            None => Error::TruncationOverflow {
                index: index.max_index(),
                bound: spec.basis_bound(),
            },
            Some(n) => Error::InvalidIndex(format!("{index} exceeds the rank {n}")),
        });
    }
    let lowest = MultiVector::lowest(spec, index.len())?;
    DerivationEngine::new(spec).apply_operator(&schur_delta(index), &lowest)
}
