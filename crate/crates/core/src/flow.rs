//! Successive shortest path min-cost flow with Johnson potentials.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

const INF: i64 = i64::MAX / 4;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i64,
    cost: i64,
}

#[derive(Clone, Debug)]
pub struct MinCostFlow {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    potential: Vec<i64>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow {
            arcs: Vec::new(),
            adj: vec![Vec::new(); nodes],
            potential: vec![0; nodes],
        }
    }

    /// Adds `u -> v` and its residual twin; returns the forward arc id.
    pub fn add_edge(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to: v, cap, cost });
        self.arcs.push(Arc {
            to: u,
            cap: 0,
            cost: -cost,
        });
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
        id
    }

    /// Potentials must make every reduced cost of a residual arc
    /// nonnegative. Needed whenever some arc cost is negative.
    pub fn set_potentials(&mut self, potential: Vec<i64>) {
        assert_eq!(potential.len(), self.adj.len());
        self.potential = potential;
    }

    pub fn flow_on(&self, arc: usize) -> i64 {
        self.arcs[arc + 1].cap
    }

    /// Pushes at most `limit` units along one cheapest `s -> t` path.
    /// Returns `(units, total cost)`, or `None` when `t` is unreachable.
    pub fn augment(&mut self, s: usize, t: usize, limit: i64) -> Option<(i64, i64)> {
        let n = self.adj.len();
        let mut dist = vec![INF; n];
        let mut prev = vec![usize::MAX; n];
        let mut heap = BinaryHeap::new();
        dist[s] = 0;
        heap.push(Reverse((0, s)));
        while let Some(Reverse((d, u))) = heap.pop() {
            if d > dist[u] {
                continue;
            }
            for &id in &self.adj[u] {
                let arc = &self.arcs[id];
                if arc.cap <= 0 {
                    continue;
                }
                let reduced = arc.cost + self.potential[u] - self.potential[arc.to];
                debug_assert!(reduced >= 0, "negative reduced cost");
                let nd = d + reduced;
                if nd < dist[arc.to] {
                    dist[arc.to] = nd;
                    prev[arc.to] = id;
                    heap.push(Reverse((nd, arc.to)));
                }
            }
        }
        if dist[t] == INF {
            return None;
        }
        for (h, d) in self.potential.iter_mut().zip(&dist) {
            if *d < INF {
                *h += d;
            }
        }
        let mut units = limit;
        let mut v = t;
        while v != s {
            let id = prev[v];
            units = units.min(self.arcs[id].cap);
            v = self.arcs[id ^ 1].to;
        }
        let mut cost = 0;
        v = t;
        while v != s {
            let id = prev[v];
            self.arcs[id].cap -= units;
            self.arcs[id ^ 1].cap += units;
            cost += self.arcs[id].cost * units;
            v = self.arcs[id ^ 1].to;
        }
        Some((units, cost))
    }
}
