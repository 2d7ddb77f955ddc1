//! Acyclic digraphs and their path-cover invariants.
//!
//! Path lengths count vertices. `d_hat(k)` is the largest number of
//! vertices covered by at most `k` vertex-disjoint directed paths, and the
//! first differences of `d_hat` form the Δ-sequence, which for a generic
//! nilpotent matrix supported on the digraph equals its Jordan shape.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exec::{trial_rng, Execution};
use crate::field::{FieldMatrix, Prime};
use crate::flow::MinCostFlow;
use crate::partitions::Partition;

/// Directed acyclic graph on vertices `0..n` (printed 1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AcyclicDigraph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    succ: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl AcyclicDigraph {
    /// Duplicate edges collapse; self-loops and cycles are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::OutOfRange {
                    what: "vertex",
                    value: u.max(v) + 1,
                    lo: 1,
                    hi: n,
                });
            }
            if u == v {
                return Err(Error::Cyclic);
            }
            set.insert((u, v));
        }
        let mut succ = vec![Vec::new(); n];
        let mut indeg = vec![0usize; n];
        for &(u, v) in &set {
            succ[u].push(v);
            indeg[v] += 1;
        }
        // Kahn, smallest label first
        let mut ready: BTreeSet<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut topo = Vec::with_capacity(n);
        while let Some(u) = ready.pop_first() {
            topo.push(u);
            for &v in &succ[u] {
                indeg[v] -= 1;
                if indeg[v] == 0 {
                    ready.insert(v);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::Cyclic);
        }
        Ok(AcyclicDigraph {
            n,
            edges: set,
            succ,
            topo,
        })
    }

    /// Edge `(i, j)` for every nonzero entry `(i, j)`.
    pub fn from_support(support: &[Vec<bool>]) -> Result<Self> {
        let n = support.len();
        let mut edges = Vec::new();
        for (i, row) in support.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: row.len(),
                });
            }
            edges.extend(
                row.iter()
                    .enumerate()
                    .filter(|(_, &b)| b)
                    .map(|(j, _)| (i, j)),
            );
        }
        Self::new(n, edges)
    }

    pub fn from_matrix(m: &FieldMatrix) -> Result<Self> {
        Self::from_support(&m.support())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u, v))
    }

    pub fn topological_order(&self) -> &[usize] {
        &self.topo
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        Self::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }

    /// Number of vertices on a longest directed path.
    pub fn longest_path(&self) -> usize {
        let mut best = vec![1usize; self.n];
        for &u in self.topo.iter().rev() {
            best[u] = 1 + self.succ[u].iter().map(|&v| best[v]).max().unwrap_or(0);
        }
        best.into_iter().max().unwrap_or(0)
    }

    /// `[d_hat_0, d_hat_1, ..., d_hat_m]` with `d_hat_m = n`, computed by
    /// min-cost flow on the vertex-split network. Each unit of flow is one
    /// path; each covered vertex earns cost `-1`.
    pub fn d_hat_profile(&self) -> Vec<usize> {
        let n = self.n;
        let (s, t) = (2 * n, 2 * n + 1);
        let v_in = |v: usize| 2 * v;
        let v_out = |v: usize| 2 * v + 1;
        let mut net = MinCostFlow::new(2 * n + 2);
        for v in 0..n {
            net.add_edge(s, v_in(v), 1, 0);
            net.add_edge(v_in(v), v_out(v), 1, -1);
            net.add_edge(v_out(v), t, 1, 0);
        }
        for &(u, v) in &self.edges {
            net.add_edge(v_out(u), v_in(v), 1, 0);
        }
        // shortest distances from s, relaxed along the topological order
        let mut pot = vec![0i64; 2 * n + 2];
        for &v in &self.topo {
            let best_pred = pot[v_in(v)];
            pot[v_in(v)] = best_pred.min(0);
            pot[v_out(v)] = pot[v_in(v)] - 1;
            for &w in &self.succ[v] {
                pot[v_in(w)] = pot[v_in(w)].min(pot[v_out(v)]);
            }
        }
        pot[t] = (0..n).map(|v| pot[v_out(v)]).min().unwrap_or(0);
        net.set_potentials(pot);

        let mut profile = vec![0];
        let mut covered = 0usize;
        while covered < n {
            match net.augment(s, t, 1) {
                Some((1, cost)) if cost < 0 => {
                    covered += (-cost) as usize;
                    profile.push(covered);
                }
                _ => break,
            }
        }
        debug_assert_eq!(covered, n);
        profile
    }

    /// `d_hat(k)`; `d_hat(0) = 0`.
    pub fn d_hat(&self, k: usize) -> usize {
        let profile = self.d_hat_profile();
        profile[k.min(profile.len() - 1)]
    }

    pub fn delta_sequence(&self) -> DeltaSequence {
        DeltaSequence::from_profile(self.d_hat_profile())
    }

    /// `n` on the first line, then `u v` per edge, 1-based.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{} {}", u + 1, v + 1);
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (lineno, first) = lines.next().ok_or(Error::Parse {
            line: 1,
            msg: "missing vertex count".into(),
        })?;
        let n: usize = first.parse().map_err(|_| Error::Parse {
            line: lineno,
            msg: format!("bad vertex count `{first}`"),
        })?;
        let mut edges = Vec::new();
        for (lineno, line) in lines {
            let fields: Vec<&str> = line.split_whitespace().collect();
            let parse = |tok: &str| -> Result<usize> {
                match tok.parse::<usize>() {
                    Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                    _ => Err(Error::Parse {
                        line: lineno,
                        msg: format!("bad vertex `{tok}`"),
                    }),
                }
            };
            if fields.len() != 2 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected `u v`, got `{line}`"),
                });
            }
            edges.push((parse(fields[0])?, parse(fields[1])?));
        }
        Self::new(n, edges)
    }

    /// Graphviz export; `labels` overrides the default 1-based names.
    pub fn to_dot(&self, labels: Option<&[String]>) -> String {
        let name = |v: usize| match labels {
            Some(l) => l[v].clone(),
            None => (v + 1).to_string(),
        };
        let mut out = String::from("digraph G {\n  rankdir=LR;\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  v{} [label=\"{}\"];", v + 1, name(v));
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  v{} -> v{};", u + 1, v + 1);
        }
        out.push_str("}\n");
        out
    }

    /// A matrix supported exactly on the edges, with uniform nonzero values.
    pub fn random_matrix<R: Rng>(&self, rng: &mut R, p: Prime) -> FieldMatrix {
        let mut m = FieldMatrix::zeros(self.n.max(1), p);
        for &(u, v) in &self.edges {
            m.set(u, v, rng.random_range(1..p.get()));
        }
        m
    }
}

/// `d_hat_0 = 0, ..., d_hat_m = n` and the partition `Δ` of its
/// first differences.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSequence {
    pub dhat: Vec<usize>,
    pub delta: Partition,
}

impl DeltaSequence {
    pub fn from_profile(dhat: Vec<usize>) -> Self {
        let diffs: Vec<usize> = dhat
            .windows(2)
            .map(|w| w[1] - w[0])
            .filter(|&d| d > 0)
            .collect();
        let delta = Partition::new(diffs).expect("d_hat of a nonempty DAG is concave");
        DeltaSequence { dhat, delta }
    }
}

/// Outcome of comparing Δ with shapes of random matrices on a digraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GansnerSaksReport {
    pub agree: bool,
    pub delta: Partition,
    /// Dominance-largest observed shape.
    pub shape: Partition,
    /// Trials whose shape is not dominated by Δ.
    pub violations: u64,
    pub trials: u64,
}

pub fn verify_gansner_saks(
    g: &AcyclicDigraph,
    p: Prime,
    trials: u64,
    seed: u64,
    exec: Execution,
) -> GansnerSaksReport {
    let delta = g.delta_sequence().delta;
    let shapes = exec.fold_trials(
        trials,
        BTreeSet::new,
        |mut acc, trial| {
            let m = g.random_matrix(&mut trial_rng(seed, trial), p);
            acc.insert(m.shape().expect("acyclic support is nilpotent"));
            acc
        },
        |mut a, b| {
            a.extend(b);
            a
        },
    );
    let violations = shapes.iter().filter(|s| !s.dominated_by(&delta)).count() as u64;
    let agree = shapes.contains(&delta);
    let shape = shapes
        .iter()
        .find(|s| *s == &delta)
        .or_else(|| {
            shapes
                .iter()
                .find(|s| shapes.iter().all(|o| o.dominated_by(s)))
        })
        .or_else(|| shapes.iter().next())
        .cloned()
        .unwrap_or_else(|| delta.clone());
    GansnerSaksReport {
        agree,
        delta,
        shape,
        violations,
        trials,
    }
}

/// Exhaustive `d_hat` by subset dynamic programming over all directed
/// paths. Independent of the flow formulation; intended for `n <= 12`.
pub fn d_hat_exhaustive(g: &AcyclicDigraph) -> Vec<usize> {
    let n = g.n();
    assert!(n <= 16, "exhaustive search is for small digraphs");
    let mut by_low: Vec<Vec<u32>> = vec![Vec::new(); n];
    fn extend(g: &AcyclicDigraph, v: usize, mask: u32, low: usize, out: &mut Vec<Vec<u32>>) {
        out[low].push(mask);
        for w in 0..g.n() {
            if g.has_edge(v, w) && mask & (1 << w) == 0 {
                let m = mask | (1 << w);
                extend(g, w, m, low.min(w), out);
            }
        }
    }
    for v in 0..n {
        extend(g, v, 1 << v, v, &mut by_low);
    }
    for list in &mut by_low {
        list.sort_unstable();
        list.dedup();
    }
    let full = 1usize << n;
    let mut cover = vec![usize::MAX; full];
    cover[0] = 0;
    for mask in 1..full {
        let low = mask.trailing_zeros() as usize;
        let mut best = usize::MAX;
        for &path in &by_low[low] {
            let path = path as usize;
            if path & mask == path && cover[mask ^ path] != usize::MAX {
                best = best.min(cover[mask ^ path] + 1);
            }
        }
        cover[mask] = best;
    }
    let mut profile = vec![0];
    for k in 1..=n {
        let best = (0..full)
            .filter(|&m| cover[m] <= k)
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0);
        profile.push(best);
        if best == n {
            break;
        }
    }
    profile
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;

    /// Six-vertex example digraph, 0-based.
    fn six_vertex_example() -> AcyclicDigraph {
        AcyclicDigraph::new(6, [(0, 2), (0, 4), (1, 3), (1, 5), (4, 3), (4, 5)]).unwrap()
    }

    fn chain(n: usize) -> AcyclicDigraph {
        AcyclicDigraph::new(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    pub(crate) fn random_dag<R: Rng>(rng: &mut R, n: usize, prob: f64) -> AcyclicDigraph {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.random_bool(prob) {
                    edges.push((order[i], order[j]));
                }
            }
        }
        AcyclicDigraph::new(n, edges).unwrap()
    }

    #[test]
    fn six_vertex_example_from_matrix_pattern() {
        let support: Vec<Vec<bool>> = [
            [0, 0, 1, 0, 1, 0],
            [0, 0, 0, 1, 0, 1],
            [0; 6],
            [0; 6],
            [0, 0, 0, 1, 0, 1],
            [0; 6],
        ]
        .iter()
        .map(|r| r.iter().map(|&b| b == 1).collect())
        .collect();
        assert_eq!(
            AcyclicDigraph::from_support(&support).unwrap(),
            six_vertex_example()
        );
    }

    #[test]
    fn cyclic_inputs_rejected() {
        let identity: Vec<Vec<bool>> = (0..3).map(|i| (0..3).map(|j| i == j).collect()).collect();
        assert_eq!(AcyclicDigraph::from_support(&identity), Err(Error::Cyclic));
        assert_eq!(
            AcyclicDigraph::new(3, [(0, 1), (1, 2), (2, 0)]),
            Err(Error::Cyclic)
        );
        let upper: Vec<Vec<bool>> = (0..5).map(|i| (0..5).map(|j| j > i).collect()).collect();
        assert!(AcyclicDigraph::from_support(&upper).is_ok());
    }

    #[test]
    fn six_vertex_example_invariants() {
        let g = six_vertex_example();
        assert_eq!(g.d_hat_profile(), vec![0, 3, 5, 6]);
        assert_eq!(
            (g.d_hat(0), g.d_hat(1), g.d_hat(2), g.d_hat(3), g.d_hat(10)),
            (0, 3, 5, 6, 6)
        );
        assert_eq!(g.delta_sequence().delta.to_string(), "3,2,1");
        assert_eq!(g.longest_path(), 3);
    }

    #[test]
    fn chains_and_edgeless() {
        for n in 1..=9 {
            let c = chain(n);
            assert_eq!(c.delta_sequence().delta, Partition::new(vec![n]).unwrap());
            assert_eq!(c.longest_path(), n);
            let e = AcyclicDigraph::new(n, []).unwrap();
            assert_eq!(
                e.delta_sequence().delta,
                Partition::new(vec![1; n]).unwrap()
            );
            assert_eq!(e.longest_path(), 1);
            assert_eq!(e.d_hat(n + 3), n);
        }
    }

    #[test]
    fn flow_matches_exhaustive_on_random_dags() {
        let mut rng = trial_rng(11, 0);
        for _ in 0..300 {
            let n = rng.random_range(1..=8);
            let prob = rng.random_range(0.1..0.6);
            let g = random_dag(&mut rng, n, prob);
            let flow = g.d_hat_profile();
            assert_eq!(flow, d_hat_exhaustive(&g), "{}", g.to_text());
            // concave, monotone, longest path is d_hat_1
            assert!(flow.windows(2).all(|w| w[0] < w[1]));
            let delta = g.delta_sequence();
            assert_eq!(delta.delta.n(), n);
            assert_eq!(g.longest_path(), flow[1]);
        }
    }

    #[test]
    fn relabeling_preserves_delta() {
        let mut rng = trial_rng(5, 1);
        for _ in 0..100 {
            let n = rng.random_range(2..=10);
            let g = random_dag(&mut rng, n, 0.3);
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            assert_eq!(
                g.relabel(&perm).unwrap().delta_sequence().delta,
                g.delta_sequence().delta
            );
        }
    }

    #[test]
    fn gansner_saks_examples() {
        let p = Prime::default();
        let r = verify_gansner_saks(&six_vertex_example(), p, 10, 0, Execution::Sequential);
        assert!(r.agree);
        assert_eq!(r.shape.to_string(), "3,2,1");
        assert_eq!(r.violations, 0);
        let r = verify_gansner_saks(&chain(7), p, 3, 0, Execution::Parallel);
        assert!(r.agree);
        assert_eq!(r.shape.to_string(), "7");
    }

    #[test]
    fn text_round_trip_and_dot() {
        let g = six_vertex_example();
        let text = g.to_text();
        assert_eq!(text.lines().next(), Some("6"));
        assert_eq!(AcyclicDigraph::parse(&text).unwrap(), g);
        assert!(matches!(
            AcyclicDigraph::parse("3\n1 4\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        let dot = g.to_dot(None);
        assert!(dot.contains("v1 -> v3;") && dot.contains("v5 -> v6;"));
    }
}
