//! Independent checks by sampling and enumeration: sampled maxima, shape
//! censuses of the commutant, direct-sum witnesses and the hard-coded
//! example matrices.

use std::collections::BTreeMap;

use rand::Rng;
use serde::Serialize;

use crate::commutant::CommutantPattern;
use crate::error::{Error, Result};
use crate::exec::{trial_rng, Execution};
use crate::field::{FieldMatrix, Prime};
use crate::partitions::{ord_merge, rpt, Partition};

/// Largest nilpotency index over `trials` random elements of the full
/// commutant pattern.
pub fn sampled_max_nil(mu: &Partition, trials: u64, p: Prime, seed: u64, exec: Execution) -> usize {
    let pattern = CommutantPattern::full(mu);
    let placements = pattern.placements();
    let n = mu.n();
    exec.fold_trials(
        trials,
        || 0usize,
        |best, trial| {
            let mut rng = trial_rng(seed, trial);
            let values: Vec<u64> = placements
                .iter()
                .map(|_| rng.random_range(1..p.get()))
                .collect();
            let a = CommutantPattern::fill(&placements, &values, n, p);
            best.max(
                a.nilpotency_index()
                    .expect("commutant samples are nilpotent"),
            )
        },
        usize::max,
    )
}

/// How parameter values are chosen for each trial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "values", rename_all = "lowercase")]
pub enum ValueMode {
    /// Independent uniform nonzero residues.
    Random,
    /// Every assignment of the given integers to every parameter.
    Exhaustive(Vec<i64>),
    /// Uniform draws from the given integers.
    Subsample(Vec<i64>),
}

/// A recorded assignment reproducing one shape.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub trial: u64,
    /// Signed values in `pattern.params()` order.
    pub values: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeSetReport {
    pub mu: Partition,
    pub mode: ValueMode,
    pub trials: u64,
    pub prime: Prime,
    pub seed: u64,
    /// Each observed shape with the earliest trial producing it.
    pub observed: BTreeMap<Partition, Witness>,
}

impl ShapeSetReport {
    pub fn shapes(&self) -> impl Iterator<Item = &Partition> {
        self.observed.keys()
    }

    pub fn contains(&self, shape: &Partition) -> bool {
        self.observed.contains_key(shape)
    }

    pub fn witness_matrix(&self, shape: &Partition) -> Option<FieldMatrix> {
        let w = self.observed.get(shape)?;
        let pattern = CommutantPattern::full(&self.mu);
        let values: Vec<u64> = w.values.iter().map(|&v| self.prime.lift(v)).collect();
        Some(CommutantPattern::fill(
            &pattern.placements(),
            &values,
            self.mu.n(),
            self.prime,
        ))
    }

    pub fn to_json_value(&self) -> ShapeSetJson {
        ShapeSetJson {
            mu: self.mu.to_string(),
            mode: self.mode.clone(),
            trials: self.trials,
            prime: self.prime.get(),
            seed: self.seed,
            shapes: self.observed.keys().map(|s| s.to_string()).collect(),
            witnesses: self
                .observed
                .keys()
                .map(|s| {
                    let m = self.witness_matrix(s).expect("observed shape");
                    (s.to_string(), m.to_signed_rows())
                })
                .collect(),
        }
    }
}

/// Serialized form of a [`ShapeSetReport`].
#[derive(Clone, Debug, Serialize)]
pub struct ShapeSetJson {
    pub mu: String,
    pub mode: ValueMode,
    pub trials: u64,
    pub prime: u64,
    pub seed: u64,
    pub shapes: Vec<String>,
    pub witnesses: BTreeMap<String, Vec<Vec<i64>>>,
}

/// Shapes of commutant elements chosen by `mode`. `budget` is the trial
/// count for the sampling modes and an upper bound on the number of
/// assignments for exhaustive mode.
pub fn shape_set(
    mu: &Partition,
    mode: ValueMode,
    budget: u64,
    p: Prime,
    seed: u64,
    exec: Execution,
) -> Result<ShapeSetReport> {
    let pattern = CommutantPattern::full(mu);
    let placements = pattern.placements();
    let params = placements.len();
    let n = mu.n();

    let trials = match &mode {
        ValueMode::Exhaustive(vals) => {
            if vals.is_empty() {
                return Err(Error::Domain("empty value set".into()));
            }
            let required = (vals.len() as u128)
                .checked_pow(params as u32)
                .unwrap_or(u128::MAX);
            if required > budget as u128 {
                return Err(Error::BudgetExceeded { required, budget });
            }
            required as u64
        }
        ValueMode::Subsample(vals) if vals.is_empty() => {
            return Err(Error::Domain("empty value set".into()));
        }
        _ => budget,
    };

    let assignment = |trial: u64| -> Vec<i64> {
        match &mode {
            ValueMode::Random => {
                let mut rng = trial_rng(seed, trial);
                (0..params)
                    .map(|_| p.signed(rng.random_range(1..p.get())))
                    .collect()
            }
            ValueMode::Exhaustive(vals) => {
                let base = vals.len() as u64;
                let mut rest = trial;
                (0..params)
                    .map(|_| {
                        let v = vals[(rest % base) as usize];
                        rest /= base;
                        v
                    })
                    .collect()
            }
            ValueMode::Subsample(vals) => {
                let mut rng = trial_rng(seed, trial);
                (0..params)
                    .map(|_| vals[rng.random_range(0..vals.len())])
                    .collect()
            }
        }
    };

    let observed = exec.fold_trials(
        trials,
        BTreeMap::new,
        |mut acc: BTreeMap<Partition, Witness>, trial| {
            let values = assignment(trial);
            let residues: Vec<u64> = values.iter().map(|&v| p.lift(v)).collect();
            let a = CommutantPattern::fill(&placements, &residues, n, p);
            let shape = a.shape().expect("commutant elements are nilpotent");
            acc.entry(shape).or_insert(Witness { trial, values });
            acc
        },
        |mut a, b| {
            for (shape, w) in b {
                match a.get(&shape) {
                    Some(existing) if existing.trial <= w.trial => {}
                    _ => {
                        a.insert(shape, w);
                    }
                }
            }
            a
        },
    );

    Ok(ShapeSetReport {
        mu: mu.clone(),
        mode,
        trials,
        prime: p,
        seed,
        observed,
    })
}

/// `J_{mu_1}^{s_1} ⊕ ... ⊕ J_{mu_t}^{s_t}`.
pub fn expjor2_witness(mu: &Partition, s: &[usize], p: Prime) -> Result<FieldMatrix> {
    if s.len() != mu.len() {
        return Err(Error::DimensionMismatch {
            expected: mu.len(),
            got: s.len(),
        });
    }
    let mut a = FieldMatrix::zeros(mu.n(), p);
    let mut offset = 0;
    for (&m, &power) in mu.parts().iter().zip(s) {
        if power == 0 || power > m {
            return Err(Error::OutOfRange {
                what: "s_i",
                value: power,
                lo: 1,
                hi: m,
            });
        }
        for i in 0..m - power {
            a.set(offset + i, offset + i + power, 1);
        }
        offset += m;
    }
    Ok(a)
}

/// Expected shape of [`expjor2_witness`].
pub fn expjor2_shape(mu: &Partition, s: &[usize]) -> Result<Partition> {
    let pieces = mu
        .parts()
        .iter()
        .zip(s)
        .map(|(&m, &k)| rpt(m, k))
        .collect::<Result<Vec<_>>>()?;
    ord_merge(&pieces)
}

/// A hard-coded example matrix with its expected Jordan shape.
#[derive(Clone, Debug)]
pub struct FixedWitness {
    pub name: &'static str,
    pub mu: Partition,
    pub matrix: FieldMatrix,
    pub expected: Partition,
}

fn sparse(n: usize, ones: &[(usize, usize, i64)], p: Prime) -> FieldMatrix {
    let mut m = FieldMatrix::zeros(n, p);
    for &(r, c, v) in ones {
        m.set(r - 1, c - 1, p.lift(v));
    }
    m
}

/// The three 12x12 matrices for `(4,3,2,2,1)` with every letter set to 1,
/// and the two 8x8 signed matrices for `(5,3)`.
pub fn fixed_witness_suite(p: Prime) -> Vec<FixedWitness> {
    let mu12: Partition = "4,3,2,2,1".parse().expect("valid");
    let mu8: Partition = "5,3".parse().expect("valid");
    let base: Vec<(usize, usize, i64)> = vec![
        (1, 5, 1),
        (2, 6, 1),
        (3, 7, 1),
        (5, 2, 1),
        (5, 8, 1),
        (6, 3, 1),
        (6, 9, 1),
        (7, 4, 1),
        (8, 10, 1),
        (9, 11, 1),
        (10, 6, 1),
        (11, 7, 1),
    ];
    let with = |extra: &[(usize, usize, i64)]| {
        let mut all = base.clone();
        all.extend_from_slice(extra);
        sparse(12, &all, p)
    };
    #[rustfmt::skip]
    let five_three_a: Vec<Vec<i64>> = vec![
        vec![0, 1, 0, 0, 0, -1, 0, 0],
        vec![0, 0, 1, 0, 0, 0, -1, 0],
        vec![0, 0, 0, 1, 0, 0, 0, -1],
        vec![0, 0, 0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, 1, 0, 0, 0, -1, 0],
        vec![0, 0, 0, 1, 0, 0, 0, -1],
        vec![0, 0, 0, 0, 1, 0, 0, 0],
    ];
    #[rustfmt::skip]
    let five_three_b: Vec<Vec<i64>> = vec![
        vec![0, 1, 0, 0, 0, 1, 0, 0],
        vec![0, 0, 1, 0, 0, 0, 1, 0],
        vec![0, 0, 0, 1, 0, 0, 0, 1],
        vec![0, 0, 0, 0, 1, 0, 0, 0],
        vec![0, 0, 0, 0, 0, 0, 0, 0],
        vec![0, 0, -1, 1, 0, 0, -1, 1],
        vec![0, 0, 0, -1, 1, 0, 0, -1],
        vec![0, 0, 0, 0, -1, 0, 0, 0],
    ];
    let shape = |s: &str| s.parse::<Partition>().expect("valid");
    vec![
        FixedWitness {
            name: "A1 (4,3,2,2,1)",
            mu: mu12.clone(),
            matrix: with(&[]),
            expected: shape("9,1^3"),
        },
        FixedWitness {
            name: "A2 (4,3,2,2,1)",
            mu: mu12.clone(),
            matrix: with(&[(1, 2, 1), (2, 3, 1), (3, 4, 1)]),
            expected: shape("9,2,1"),
        },
        FixedWitness {
            name: "A3 (4,3,2,2,1)",
            mu: mu12,
            matrix: with(&[(10, 12, 1), (12, 9, 1)]),
            expected: shape("9,3"),
        },
        FixedWitness {
            name: "A1 (5,3)",
            mu: mu8.clone(),
            matrix: FieldMatrix::from_rows(&five_three_a, p).expect("square"),
            expected: shape("2^4"),
        },
        FixedWitness {
            name: "A2 (5,3)",
            mu: mu8,
            matrix: FieldMatrix::from_rows(&five_three_b, p).expect("square"),
            expected: shape("3^2,1^2"),
        },
    ]
}

/// The seventeen shapes realized in the commutant of `J_{(5,3)}`.
pub fn five_three_shapes() -> Vec<Partition> {
    [
        "5,3", "5,2,1", "5,1^3", "4^2", "4,2^2", "4,2,1^2", "4,1^4", "3^2,2", "3^2,1^2", "3,2^2,1",
        "3,2,1^3", "3,1^5", "2^4", "2^3,1^2", "2^2,1^4", "2,1^6", "1^8",
    ]
    .iter()
    .map(|s| s.parse().expect("valid"))
    .collect()
}
