//! Dense square matrices over a prime field `F_p`, with `p < 2^32` so a
//! product of two residues fits in a `u64`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;

/// `2^31 - 1`.
pub const DEFAULT_PRIME: u64 = 2_147_483_647;

/// A validated odd prime modulus below `2^32`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(into = "u64")]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if !(3..1 << 32).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Prime(p))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// Reduces a signed integer into `0..p`.
    pub fn lift(self, v: i64) -> u64 {
        v.rem_euclid(self.0 as i64) as u64
    }

    /// Centered representative in `(-p/2, p/2]`.
    pub fn signed(self, v: u64) -> i64 {
        if v > self.0 / 2 {
            v as i64 - self.0 as i64
        } else {
            v as i64
        }
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.0 - 2)
    }

    pub fn pow(self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc = 1;
        base %= self.0;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl Default for Prime {
    fn default() -> Self {
        Prime(DEFAULT_PRIME)
    }
}

impl From<Prime> for u64 {
    fn from(p: Prime) -> u64 {
        p.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Smallest prime `>= start` (below `2^32`).
pub fn next_prime(start: u64) -> Result<Prime> {
    let mut c = start.max(3) | 1;
    while c < 1 << 32 {
        if is_prime(c) {
            return Prime::new(c);
        }
        c += 2;
    }
    Err(Error::NotPrime(start))
}

/// Square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    n: usize,
    p: Prime,
    data: Vec<u64>,
}

impl FieldMatrix {
    pub fn zeros(n: usize, p: Prime) -> Self {
        assert!(n >= 1, "matrix dimension must be positive");
        FieldMatrix {
            n,
            p,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize, p: Prime) -> Self {
        let mut m = Self::zeros(n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Rows of signed integers, reduced mod `p`.
    pub fn from_rows(rows: &[Vec<i64>], p: Prime) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch {
                expected: 1,
                got: 0,
            });
        }
        let mut m = Self::zeros(n, p);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, p.lift(v));
            }
        }
        Ok(m)
    }

    /// Block-diagonal upper Jordan matrix with blocks `J_{mu_1}, ..., J_{mu_t}`.
    pub fn jordan(mu: &Partition, p: Prime) -> Self {
        let mut m = Self::zeros(mu.n(), p);
        let mut offset = 0;
        for &size in mu.parts() {
            for i in 0..size - 1 {
                m.set(offset + i, offset + i + 1, 1);
            }
            offset += size;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        debug_assert!(v < self.p.get());
        self.data[i * self.n + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Signed centered rows, for display and serialization.
    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().map(|&v| self.p.signed(v)).collect())
            .collect()
    }

    /// 0/1 support.
    pub fn support(&self) -> Vec<Vec<bool>> {
        self.data
            .chunks(self.n)
            .map(|row| row.iter().map(|&v| v != 0).collect())
            .collect()
    }

    pub fn mul(&self, other: &FieldMatrix) -> FieldMatrix {
        assert_eq!(self.n, other.n);
        let n = self.n;
        let p = self.p;
        let mut out = Self::zeros(n, p);
        for i in 0..n {
            let out_row = &mut out.data[i * n..(i + 1) * n];
            for l in 0..n {
                let a = self.data[i * n + l];
                if a == 0 {
                    continue;
                }
                let row = &other.data[l * n..(l + 1) * n];
                for (o, &b) in out_row.iter_mut().zip(row) {
                    if b != 0 {
                        *o = p.add(*o, p.mul(a, b));
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> FieldMatrix {
        let mut acc = Self::identity(self.n, self.p);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn commutes_with(&self, other: &FieldMatrix) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// Rank by row reduction.
    pub fn rank(&self) -> usize {
        rank_in_place(&mut self.data.clone(), self.n, self.p)
    }

    /// `rank(M^0), rank(M^1), ...` up to and including the first zero power.
    pub fn rank_profile(&self) -> Result<Vec<usize>> {
        let mut ranks = vec![self.n];
        let mut power = self.clone();
        let mut scratch = Vec::with_capacity(self.n * self.n);
        for _ in 0..self.n {
            scratch.clear();
            scratch.extend_from_slice(&power.data);
            let r = rank_in_place(&mut scratch, self.n, self.p);
            ranks.push(r);
            if r == 0 {
                return Ok(ranks);
            }
            power = power.mul(self);
        }
        Err(Error::NotNilpotent)
    }

    /// Jordan shape of a nilpotent matrix from its rank profile: the number
    /// of blocks of size at least `k` is `rank(M^{k-1}) - rank(M^k)`.
    pub fn shape(&self) -> Result<Partition> {
        let ranks = self.rank_profile()?;
        let counts: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
        if counts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::BadRankProfile(ranks));
        }
        let conj = Partition::new(counts).map_err(|_| Error::BadRankProfile(ranks.clone()))?;
        Ok(conj.conjugate())
    }

    /// Smallest `i >= 1` with `M^i = 0`.
    pub fn nilpotency_index(&self) -> Result<usize> {
        let mut power = self.clone();
        for i in 1..=self.n {
            if power.is_zero() {
                return Ok(i);
            }
            power = power.mul(self);
        }
        Err(Error::NotNilpotent)
    }
}

fn rank_in_place(a: &mut [u64], n: usize, p: Prime) -> usize {
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if pivot != rank {
            for j in col..n {
                a.swap(pivot * n + j, rank * n + j);
            }
        }
        let inv = p.inv(a[rank * n + col]);
        for r in rank + 1..n {
            let f = a[r * n + col];
            if f == 0 {
                continue;
            }
            let f = p.mul(f, inv);
            for j in col..n {
                let v = a[rank * n + j];
                if v != 0 {
                    a[r * n + j] = p.sub(a[r * n + j], p.mul(f, v));
                }
            }
        }
        rank += 1;
        if rank == n {
            break;
        }
    }
    rank
}

impl fmt::Display for FieldMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.to_signed_rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Whitespace-separated integer grid, one row per non-blank line.
/// Interpreted mod [`DEFAULT_PRIME`]; use [`parse_matrix`] for another prime.
impl FromStr for FieldMatrix {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_matrix(s, Prime::default())
    }
}

pub fn parse_matrix(text: &str, p: Prime) -> Result<FieldMatrix> {
    let mut rows = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<i64>().map_err(|_| Error::Parse {
                    line: lineno + 1,
                    msg: format!("bad entry `{tok}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    FieldMatrix::from_rows(&rows, p)
}
