//! Digraphs of patterned elements of the commutant.
//!
//! Vertex `(x, y)` is position `y` of Jordan block `x` (both 1-based);
//! its flat matrix index is `mu_1 + ... + mu_{x-1} + y`. A Toeplitz
//! parameter contributes a family of pairwise parallel edges.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::commutant::{CommutantPattern, ToeplitzParam};
use crate::error::{Error, Result};
use crate::maxnil::max_nilpotency_index;
use crate::partitions::{s_width, Partition};
use crate::path_cover::AcyclicDigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BlockVertex {
    pub x: usize,
    pub y: usize,
}

impl BlockVertex {
    pub fn new(x: usize, y: usize) -> Self {
        BlockVertex { x, y }
    }
}

impl fmt::Display for BlockVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// 1-based flat index of a block vertex.
pub fn vertex_index(mu: &Partition, v: BlockVertex) -> Result<usize> {
    if v.x == 0 || v.x > mu.len() || v.y == 0 || v.y > mu.part(v.x) {
        return Err(Error::Domain(format!("vertex {v} does not exist for {mu}")));
    }
    Ok(mu.parts()[..v.x - 1].iter().sum::<usize>() + v.y)
}

/// Inverse of [`vertex_index`].
pub fn block_vertex(mu: &Partition, index: usize) -> Result<BlockVertex> {
    if index == 0 || index > mu.n() {
        return Err(Error::OutOfRange {
            what: "vertex index",
            value: index,
            lo: 1,
            hi: mu.n(),
        });
    }
    let mut rest = index;
    for (x, &m) in mu.parts().iter().enumerate() {
        if rest <= m {
            return Ok(BlockVertex::new(x + 1, rest));
        }
        rest -= m;
    }
    unreachable!("index bounded by n")
}

pub fn edge_family(mu: &Partition, q: &ToeplitzParam) -> Vec<(BlockVertex, BlockVertex)> {
    let d = q.offset(mu);
    (1..=q.run_length(mu))
        .map(|p| (BlockVertex::new(q.x, p), BlockVertex::new(q.y, p + d)))
        .collect()
}

/// Two block edges are parallel when they join the same pair of blocks
/// with the same position shift.
pub fn is_parallel(a: (BlockVertex, BlockVertex), b: (BlockVertex, BlockVertex)) -> bool {
    a.0.x == b.0.x && a.1.x == b.1.x && a.0.y + b.1.y == a.1.y + b.0.y
}

/// Parameter whose family contains the edge `from -> to`, if admissible.
pub fn param_for_edge(mu: &Partition, from: BlockVertex, to: BlockVertex) -> Option<ToeplitzParam> {
    let shift = mu.part(to.x).saturating_sub(mu.part(from.x));
    let k = (to.y as isize) - (from.y as isize) - (shift as isize);
    if k < 0 {
        return None;
    }
    let q = ToeplitzParam::new(from.x, to.x, k as usize);
    (q.is_admissible(mu) && from.y <= q.run_length(mu)).then_some(q)
}

/// Union of the edge families of every parameter, on flat 0-based labels.
pub fn build(pattern: &CommutantPattern) -> AcyclicDigraph {
    let mu = pattern.mu();
    let flat = |v: BlockVertex| vertex_index(mu, v).expect("family vertices exist") - 1;
    let edges: Vec<_> = pattern
        .params()
        .iter()
        .flat_map(|q| edge_family(mu, q))
        .map(|(a, b)| (flat(a), flat(b)))
        .collect();
    AcyclicDigraph::new(mu.n(), edges).expect("admissible parameters give an acyclic digraph")
}

/// Labels `(x,y)` in flat order, for DOT export.
pub fn vertex_labels(mu: &Partition) -> Vec<String> {
    (1..=mu.n())
        .map(|i| block_vertex(mu, i).expect("in range").to_string())
        .collect()
}

/// The canonical long path starting at block `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BPathReport {
    pub k: usize,
    pub w: usize,
    pub z: usize,
    pub width: usize,
    /// Blocks `k..=w`, row-major.
    pub v_b: Vec<BlockVertex>,
    /// Vertices in path order.
    pub vertices: Vec<BlockVertex>,
    pub length: usize,
}

impl BPathReport {
    /// Vertex listing used in tables: first-column vertices of blocks
    /// `1..=k`, then `v_b`, then last vertices of blocks `1..k` and of `z`,
    /// without repeats.
    pub fn table_listing(&self) -> Vec<BlockVertex> {
        let len = self.vertices.len();
        let mut climb = self.vertices[len + 1 - self.k..].to_vec();
        climb.sort();
        let z_end = self.vertices[len - self.k];
        let mut seen = BTreeSet::new();
        (1..=self.k)
            .map(|x| BlockVertex::new(x, 1))
            .chain(self.v_b.iter().copied())
            .chain(climb)
            .chain(std::iter::once(z_end))
            .filter(|v| seen.insert(*v))
            .collect()
    }

    /// Parameters realizing each consecutive edge of the path.
    pub fn params(&self, mu: &Partition) -> BTreeSet<ToeplitzParam> {
        self.vertices
            .windows(2)
            .map(|e| param_for_edge(mu, e[0], e[1]).expect("path edges are admissible"))
            .collect()
    }
}

pub fn b_path(mu: &Partition, k: usize) -> Result<BPathReport> {
    let t = mu.len();
    if k == 0 || k > t {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            lo: 1,
            hi: t,
        });
    }
    if mu.part(k - 1) == mu.part(k) {
        return Err(Error::Domain(format!(
            "k = {k} does not start a size group of {mu}"
        )));
    }
    let head = mu.part(k);
    let w = (k..=t)
        .take_while(|&x| head - mu.part(x) <= 1)
        .last()
        .expect("x = k");
    let z = (k..=t)
        .take_while(|&x| mu.part(x) == head)
        .last()
        .expect("x = k");
    let form = mu.multiplicity_form();
    let width = s_width(mu, form.group_starting_at(k).expect("k starts a group"))?;

    let v_b: Vec<BlockVertex> = (k..=w)
        .flat_map(|x| (1..=mu.part(x)).map(move |y| BlockVertex::new(x, y)))
        .collect();

    let mut vertices: Vec<BlockVertex> = (1..k).map(|x| BlockVertex::new(x, 1)).collect();
    for col in 1..head {
        vertices.extend((k..=w).map(|x| BlockVertex::new(x, col)));
    }
    vertices.extend((k..=z).map(|x| BlockVertex::new(x, head)));
    // climb back through the last vertices of blocks 1..k-1, smallest
    // size group first, ascending within a group
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for x in 1..k {
        match groups.last_mut() {
            Some(g) if mu.part(g[0]) == mu.part(x) => g.push(x),
            _ => groups.push(vec![x]),
        }
    }
    for g in groups.iter().rev() {
        vertices.extend(g.iter().map(|&x| BlockVertex::new(x, mu.part(x))));
    }

    let length = vertices.len();
    debug_assert_eq!(
        length,
        2 * (k - 1) + (k..=w).map(|x| mu.part(x)).sum::<usize>()
    );
    Ok(BPathReport {
        k,
        w,
        z,
        width,
        v_b,
        vertices,
        length,
    })
}

/// Pattern whose digraph contains a longest B-path; its longest path is
/// the maximal nilpotency index.
pub fn witness_pattern(mu: &Partition) -> CommutantPattern {
    let k = max_nilpotency_index(mu).argmax_i + 1;
    let path = b_path(mu, k).expect("argmax starts a size group");
    CommutantPattern::new(mu.clone(), path.params(mu)).expect("inverted params are admissible")
}
