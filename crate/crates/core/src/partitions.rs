//! Integer partitions and the combinatorics built on them: balanced
//! partitions `rpt(n, t)`, the families `R(n)` and `R(mu)`, merges,
//! multiplicity form, the Basili indices and the width function.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that must already be weakly decreasing
    /// and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(invalid(&parts, "no parts"));
        }
        if parts.contains(&0) {
            return Err(invalid(&parts, "parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(invalid(&parts, "parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Result<Self> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn largest(&self) -> usize {
        self.parts[0]
    }

    /// `mu_i` with 1-based `i`, where `mu_0 = mu_1 + 1` and `mu_i = 0`
    /// past the last part.
    pub fn part(&self, i: usize) -> usize {
        match i {
            0 => self.parts[0] + 1,
            i if i <= self.parts.len() => self.parts[i - 1],
            _ => 0,
        }
    }

    /// The conjugate partition (transpose of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.largest())
            .map(|k| self.parts.iter().filter(|&&p| p >= k).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at most the matching
    /// prefix sum of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=len {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    pub fn multiplicity_form(&self) -> MultiplicityForm {
        let mut groups: Vec<(usize, usize)> = Vec::new();
        let mut starts = Vec::new();
        for (idx, &p) in self.parts.iter().enumerate() {
            match groups.last_mut() {
                Some((m, r)) if *m == p => *r += 1,
                _ => {
                    groups.push((p, 1));
                    starts.push(idx + 1);
                }
            }
        }
        MultiplicityForm { groups, starts }
    }

    /// All partitions of `n`, in reverse-lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

fn invalid(parts: &[usize], reason: &str) -> Error {
    Error::InvalidPartition {
        input: join(parts),
        reason: reason.to_string(),
    }
}

fn join(parts: &[usize]) -> String {
    parts
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Reverse-lexicographic: `(4) < (3,1)` in this ordering, so sorted
/// collections list the lexicographically largest partition first.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&join(&self.parts))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `4,3,2,2,1` and the shorthand `4,3,2^2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |token: &str, reason: &str| Error::InvalidPartition {
            input: s.to_string(),
            reason: format!("{reason} (token `{token}`)"),
        };
        let mut parts = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            let (base, exp) = match token.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (token, "1"),
            };
            let base: usize = base.parse().map_err(|_| bad(token, "not a number"))?;
            let exp: usize = exp.parse().map_err(|_| bad(token, "bad exponent"))?;
            if base == 0 || exp == 0 {
                return Err(bad(token, "parts and exponents must be positive"));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(bad(&w[1].to_string(), "parts must be weakly decreasing"));
        }
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

/// `(m_1^{r_1}, ..., m_l^{r_l})` with `m_1 > ... > m_l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityForm {
    /// `(m_i, r_i)` pairs.
    pub groups: Vec<(usize, usize)>,
    /// 1-based index of the first part of each group.
    pub starts: Vec<usize>,
}

impl MultiplicityForm {
    pub fn l(&self) -> usize {
        self.groups.len()
    }

    pub fn to_partition(&self) -> Partition {
        let parts = self
            .groups
            .iter()
            .flat_map(|&(m, r)| std::iter::repeat_n(m, r))
            .collect();
        Partition { parts }
    }

    /// Group index (1-based) whose first row is `row`, if any.
    pub fn group_starting_at(&self, row: usize) -> Option<usize> {
        self.starts.iter().position(|&s| s == row).map(|g| g + 1)
    }
}

/// The unique partition of `n` into `t` parts whose largest and smallest
/// parts differ by at most one.
pub fn rpt(n: usize, t: usize) -> Result<Partition> {
    if n == 0 || t == 0 || t > n {
        return Err(Error::OutOfRange {
            what: "t",
            value: t,
            lo: 1,
            hi: n,
        });
    }
    let (q, r) = (n / t, n % t);
    let mut parts = vec![q + 1; r];
    parts.extend(std::iter::repeat_n(q, t - r));
    Ok(Partition { parts })
}

/// `R(n) = { rpt(n, t) : 1 <= t <= n }`.
pub fn rp_set(n: usize) -> BTreeSet<Partition> {
    (1..=n).map(|t| rpt(n, t).expect("t in range")).collect()
}

/// Concatenate and sort weakly decreasing.
pub fn ord_merge<'a, I>(seqs: I) -> Result<Partition>
where
    I: IntoIterator<Item = &'a Partition>,
{
    let parts: Vec<usize> = seqs
        .into_iter()
        .flat_map(|p| p.parts.iter().copied())
        .collect();
    Partition::from_unsorted(parts)
}

/// `R(mu)`: every merge of `rpt(mu_i, s_i)` with `1 <= s_i <= mu_i`.
pub fn rp_of_partition(mu: &Partition) -> BTreeSet<Partition> {
    let mut acc: BTreeSet<Vec<usize>> = BTreeSet::from([Vec::new()]);
    for &m in mu.parts() {
        let pieces: Vec<Partition> = (1..=m).map(|s| rpt(m, s).expect("s in range")).collect();
        acc = acc
            .iter()
            .flat_map(|prefix| {
                pieces.iter().map(move |piece| {
                    let mut v = prefix.clone();
                    v.extend_from_slice(piece.parts());
                    v.sort_unstable_by(|a, b| b.cmp(a));
                    v
                })
            })
            .collect();
    }
    acc.into_iter().map(|parts| Partition { parts }).collect()
}

/// Basili's indices: `k_1 = 1` and each next `k` is the first row whose
/// part is at least two smaller than the part at the previous `k`.
/// Returns `(r_B, k)` with 1-based `k`.
pub fn basili_indices(mu: &Partition) -> (usize, Vec<usize>) {
    let mut ks = vec![1];
    let mut anchor = mu.part(1);
    for i in 2..=mu.len() {
        if anchor - mu.part(i) >= 2 {
            ks.push(i);
            anchor = mu.part(i);
        }
    }
    (ks.len(), ks)
}

/// Width `s(i)` for the 1-based size group `i`.
pub fn s_width(mu: &Partition, group: usize) -> Result<usize> {
    let form = mu.multiplicity_form();
    let l = form.l();
    if group == 0 || group > l {
        return Err(Error::OutOfRange {
            what: "group",
            value: group,
            lo: 1,
            hi: l,
        });
    }
    let (m, r) = form.groups[group - 1];
    if group == l {
        return Ok(r);
    }
    let (m_next, r_next) = form.groups[group];
    Ok(if m - m_next >= 2 { r } else { r + r_next })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    /// Brute force: all partitions of n with exactly t parts and spread <= 1.
    fn balanced_brute(n: usize, t: usize) -> Vec<Partition> {
        Partition::all(n)
            .into_iter()
            .filter(|q| q.len() == t && q.largest() - q.parts()[t - 1] <= 1)
            .collect()
    }

    #[test]
    fn rpt_examples() {
        assert_eq!(rpt(7, 1).unwrap(), p("7"));
        assert_eq!(balanced_brute(5, 2), vec![p("3,2")]);
        assert_eq!(rpt(5, 2).unwrap(), p("3,2"));
        assert_eq!(balanced_brute(12, 5), vec![p("3,3,2,2,2")]);
        assert_eq!(rpt(12, 5).unwrap(), p("3,3,2,2,2"));
        assert!(rpt(3, 0).is_err());
        assert!(rpt(3, 4).is_err());
    }

    #[test]
    fn rpt_is_unique_balanced_partition() {
        for n in 1..=15 {
            for t in 1..=n {
                assert_eq!(
                    balanced_brute(n, t),
                    vec![rpt(n, t).unwrap()],
                    "n={n} t={t}"
                );
            }
        }
        for n in 1..=30 {
            for t in 1..=n {
                let q = rpt(n, t).unwrap();
                assert_eq!((q.n(), q.len()), (n, t));
                assert!(q.largest() - q.parts()[t - 1] <= 1);
            }
        }
    }

    #[test]
    fn rp_set_examples() {
        let expected: BTreeSet<_> = ["4", "2,2", "2,1,1", "1,1,1,1"]
            .iter()
            .map(|s| p(s))
            .collect();
        assert_eq!(rp_set(4), expected);
        for n in 1..=20 {
            assert!(rp_set(n).contains(&p(&format!("1^{n}"))));
            assert_eq!(rp_set(n).len(), n);
        }
        assert!(rp_set(10).contains(&p("4,3,3")));
    }

    #[test]
    fn merge_examples() {
        assert_eq!(ord_merge([&p("3,2"), &p("3")]).unwrap(), p("3,3,2"));
        assert_eq!(ord_merge([&p("5")]).unwrap(), p("5"));
        assert_eq!(ord_merge([&p("2,1"), &p("2,1")]).unwrap(), p("2,2,1,1"));
    }

    #[test]
    fn rp_of_five_three() {
        let set = rp_of_partition(&p("5,3"));
        assert!(set.contains(&p("3,3,2")));
        assert!(!set.contains(&p("4,3,1")));
        let expected: BTreeSet<_> = [
            "5,3", "5,2,1", "5,1^3", "3^2,2", "3,2^2,1", "3,2,1^3", "3,1^5", "2^3,1^2", "2^2,1^4",
            "2,1^6", "1^8",
        ]
        .iter()
        .map(|s| p(s))
        .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn rp_of_single_part_is_rp_set() {
        for n in 1..=12 {
            assert_eq!(
                rp_of_partition(&Partition::new(vec![n]).unwrap()),
                rp_set(n)
            );
        }
    }

    #[test]
    fn basili_examples() {
        assert_eq!(basili_indices(&p("5,5,5,3,3,1,1,1")), (3, vec![1, 4, 6]));
        assert_eq!(basili_indices(&p("5,5,5,4,3,3,2,2,2,2,1,1,1")).0, 3);
        assert_eq!(basili_indices(&p("9")), (1, vec![1]));
    }

    #[test]
    fn basili_single_index_iff_balanced() {
        for n in 1..=12 {
            let rs = rp_set(n);
            for mu in Partition::all(n) {
                assert_eq!(basili_indices(&mu).0 == 1, rs.contains(&mu), "{mu}");
            }
        }
    }

    #[test]
    fn width_examples() {
        let mu = p("4,3,2,2,1");
        let form = mu.multiplicity_form();
        let widths: Vec<_> = [1, 2, 3, 5]
            .iter()
            .map(|&row| s_width(&mu, form.group_starting_at(row).unwrap()).unwrap())
            .collect();
        assert_eq!(widths, vec![2, 3, 3, 1]);
        assert_eq!(s_width(&p("7"), 1).unwrap(), 1);
        assert_eq!(s_width(&p("6,4"), 1).unwrap(), 1);
        assert_eq!(s_width(&p("6,4"), 2).unwrap(), 1);
        assert!(s_width(&p("6,4"), 3).is_err());
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(p("4,3,2^2,1").parts(), &[4, 3, 2, 2, 1]);
        assert_eq!(p("4,3,2^2,1").to_string(), "4,3,2,2,1");
        let err = "4,x,1".parse::<Partition>().unwrap_err().to_string();
        assert!(err.contains("`x`"), "{err}");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }

    #[test]
    fn multiplicity_round_trip() {
        for n in 1..=10 {
            for mu in Partition::all(n) {
                let form = mu.multiplicity_form();
                assert!(form.groups.windows(2).all(|w| w[0].0 > w[1].0));
                assert_eq!(form.groups.iter().map(|(m, r)| m * r).sum::<usize>(), n);
                assert_eq!(form.to_partition(), mu);
            }
        }
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<_> = (1..=14).map(|n| Partition::all(n).len()).collect();
        assert_eq!(
            counts,
            vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135]
        );
    }

    #[test]
    fn conjugate_and_dominance() {
        assert_eq!(p("4,3,1").conjugate(), p("3,2,2,1"));
        assert!(p("2,2").dominated_by(&p("3,1")));
        assert!(!p("3,1").dominated_by(&p("2,2")));
        assert!(p("1^4").dominated_by(&p("4")));
    }
}
