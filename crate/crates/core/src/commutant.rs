//! Matrices commuting with the Jordan matrix `J_mu`.
//!
//! A matrix `A` commutes with `J_mu` iff every block `A_{xy}` is an upper
//! triangular Toeplitz matrix, top-justified when `mu_x > mu_y` and
//! right-justified when `mu_x < mu_y`. Parameter `(x, y, k)` is the
//! coefficient on the `k`-th such diagonal; it occupies the diagonal at
//! column offset `k + max(0, mu_y - mu_x)` inside the block, rows
//! `1..=min(mu_x, mu_y) - k`.
//!
//! Nilpotency is imposed by forcing the `k = 0` coefficients between
//! equal-size blocks to be strictly upper triangular (`x < y`).

use std::collections::{BTreeMap, BTreeSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldMatrix, Prime};
use crate::partitions::Partition;

/// Toeplitz coefficient `a^k_{xy}`; `x`, `y` are 1-based block indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ToeplitzParam {
    pub x: usize,
    pub y: usize,
    pub k: usize,
}

impl ToeplitzParam {
    pub fn new(x: usize, y: usize, k: usize) -> Self {
        ToeplitzParam { x, y, k }
    }

    /// In range and not one of the forbidden `a^0_{xy}`, `x >= y`,
    /// `mu_x = mu_y` slots.
    pub fn is_admissible(&self, mu: &Partition) -> bool {
        let t = mu.len();
        if self.x == 0 || self.y == 0 || self.x > t || self.y > t {
            return false;
        }
        let (mx, my) = (mu.part(self.x), mu.part(self.y));
        self.k < mx.min(my) && !(self.k == 0 && mx == my && self.x >= self.y)
    }

    /// Column offset of the occupied diagonal inside block `(x, y)`.
    pub fn offset(&self, mu: &Partition) -> usize {
        self.k + mu.part(self.y).saturating_sub(mu.part(self.x))
    }

    /// Number of entries on the occupied diagonal.
    pub fn run_length(&self, mu: &Partition) -> usize {
        mu.part(self.x).min(mu.part(self.y)) - self.k
    }

    /// 0-based matrix positions `(row, col)` filled by this parameter.
    pub fn positions(&self, mu: &Partition) -> Vec<(usize, usize)> {
        let starts = block_offsets(mu);
        let (r0, c0) = (starts[self.x - 1], starts[self.y - 1]);
        let d = self.offset(mu);
        (0..self.run_length(mu))
            .map(|p| (r0 + p, c0 + p + d))
            .collect()
    }
}

/// 0-based first row of each block.
pub fn block_offsets(mu: &Partition) -> Vec<usize> {
    mu.parts()
        .iter()
        .scan(0, |acc, &m| {
            let start = *acc;
            *acc += m;
            Some(start)
        })
        .collect()
}

/// A set of admissible Toeplitz parameters for a fixed shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutantPattern {
    mu: Partition,
    params: BTreeSet<ToeplitzParam>,
}

/// One serialized parameter, with an optional signed value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEntry {
    pub x: usize,
    pub y: usize,
    pub k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
}

impl CommutantPattern {
    pub fn new(mu: Partition, params: impl IntoIterator<Item = ToeplitzParam>) -> Result<Self> {
        let params: BTreeSet<_> = params.into_iter().collect();
        if let Some(bad) = params.iter().find(|q| !q.is_admissible(&mu)) {
            return Err(Error::Domain(format!(
                "parameter ({},{},{}) is not admissible for {mu}",
                bad.x, bad.y, bad.k
            )));
        }
        Ok(CommutantPattern { mu, params })
    }

    /// Every admissible parameter.
    pub fn full(mu: &Partition) -> Self {
        let t = mu.len();
        let mut params = BTreeSet::new();
        for x in 1..=t {
            for y in 1..=t {
                for k in 0..mu.part(x).min(mu.part(y)) {
                    let q = ToeplitzParam::new(x, y, k);
                    if q.is_admissible(mu) {
                        params.insert(q);
                    }
                }
            }
        }
        CommutantPattern {
            mu: mu.clone(),
            params,
        }
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    pub fn params(&self) -> &BTreeSet<ToeplitzParam> {
        &self.params
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }

    pub fn contains(&self, q: &ToeplitzParam) -> bool {
        self.params.contains(q)
    }

    /// Positions of each parameter, in `params()` order.
    pub fn placements(&self) -> Vec<Vec<(usize, usize)>> {
        self.params.iter().map(|q| q.positions(&self.mu)).collect()
    }

    /// Builds `A` from a value map, then checks `A J = J A` and nilpotency.
    pub fn instantiate(
        &self,
        values: &BTreeMap<ToeplitzParam, u64>,
        p: Prime,
    ) -> Result<FieldMatrix> {
        if let Some(q) = values.keys().find(|q| !self.params.contains(q)) {
            return Err(Error::ParamNotInPattern {
                x: q.x,
                y: q.y,
                k: q.k,
            });
        }
        let mut a = FieldMatrix::zeros(self.mu.n(), p);
        for (q, &v) in values {
            for (r, c) in q.positions(&self.mu) {
                a.set(r, c, v % p.get());
            }
        }
        let j = FieldMatrix::jordan(&self.mu, p);
        assert!(
            a.commutes_with(&j),
            "placement rule produced a non-commuting matrix"
        );
        a.nilpotency_index()?;
        Ok(a)
    }

    /// Fills values given in `params()` order using precomputed placements.
    /// Skips the commutation and nilpotency checks of [`Self::instantiate`].
    pub fn fill(
        placements: &[Vec<(usize, usize)>],
        values: &[u64],
        n: usize,
        p: Prime,
    ) -> FieldMatrix {
        let mut a = FieldMatrix::zeros(n, p);
        for (cells, &v) in placements.iter().zip(values) {
            if v != 0 {
                for &(r, c) in cells {
                    a.set(r, c, v);
                }
            }
        }
        a
    }

    /// Random element with every parameter set to an independent uniform
    /// nonzero residue.
    pub fn sample(&self, seed: u64, p: Prime) -> FieldMatrix {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        self.sample_with(&mut rng, p)
    }

    pub fn sample_with<R: Rng>(&self, rng: &mut R, p: Prime) -> FieldMatrix {
        let values: Vec<u64> = self
            .params
            .iter()
            .map(|_| rng.random_range(1..p.get()))
            .collect();
        Self::fill(&self.placements(), &values, self.mu.n(), p)
    }

    pub fn to_entries(&self, values: Option<&BTreeMap<ToeplitzParam, i64>>) -> Vec<PatternEntry> {
        self.params
            .iter()
            .map(|q| PatternEntry {
                x: q.x,
                y: q.y,
                k: q.k,
                value: values.and_then(|m| m.get(q).copied()),
            })
            .collect()
    }

    /// Parses serialized entries; values, where present, are returned
    /// separately.
    pub fn from_entries(
        mu: &Partition,
        entries: &[PatternEntry],
    ) -> Result<(Self, BTreeMap<ToeplitzParam, i64>)> {
        let params = entries.iter().map(|e| ToeplitzParam::new(e.x, e.y, e.k));
        let values = entries
            .iter()
            .filter_map(|e| e.value.map(|v| (ToeplitzParam::new(e.x, e.y, e.k), v)))
            .collect();
        Ok((Self::new(mu.clone(), params)?, values))
    }
}
