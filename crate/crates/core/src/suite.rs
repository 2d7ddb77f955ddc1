//! Golden worked examples, runnable as one pass/fail table.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::commutant::CommutantPattern;
use crate::exec::Execution;
use crate::field::{FieldMatrix, Prime};
use crate::maxnil::max_nilpotency_index;
use crate::nb_digraph::{b_path, build, witness_pattern, BlockVertex};
use crate::oracle::{five_three_shapes, fixed_witness_suite, shape_set, ValueMode};
use crate::partitions::{rp_of_partition, Partition};
use crate::path_cover::AcyclicDigraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn check(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> SuiteCheck {
    SuiteCheck {
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn parse(s: &str) -> Partition {
    s.parse().expect("hard-coded partition")
}

fn listing(vs: &[BlockVertex]) -> String {
    vs.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

/// `d_hat` and Δ of the six-vertex example digraph.
fn six_vertex_example() -> AcyclicDigraph {
    AcyclicDigraph::new(6, [(0, 2), (0, 4), (1, 3), (1, 5), (4, 3), (4, 5)]).expect("acyclic")
}

pub fn example_suite(p: Prime, seed: u64, exec: Execution) -> Vec<SuiteCheck> {
    let mut out = Vec::new();

    for (mu, expected) in [("4,3,2,2,1", 9), ("6,4", 6), ("4,3,3", 10)] {
        let got = max_nilpotency_index(&parse(mu)).value;
        out.push(check(
            format!("maxnil {mu}"),
            got == expected,
            format!("{got} (expected {expected})"),
        ));
    }
    let cands: Vec<usize> = max_nilpotency_index(&parse("4,3,2,2,1"))
        .candidates
        .iter()
        .map(|c| c.value)
        .collect();
    out.push(check(
        "candidates 4,3,2,2,1",
        cands == [7, 9, 9, 9],
        format!("{cands:?}"),
    ));

    let g = six_vertex_example();
    let dhat = g.d_hat_profile();
    let delta = g.delta_sequence().delta.to_string();
    out.push(check(
        "six-vertex example d_hat and delta",
        dhat == [0, 3, 5, 6] && delta == "3,2,1",
        format!("d_hat={dhat:?} delta={delta}"),
    ));

    for w in fixed_witness_suite(p) {
        let commutes = w.matrix.commutes_with(&FieldMatrix::jordan(&w.mu, p));
        let shape = w
            .matrix
            .shape()
            .map(|s| s.to_string())
            .unwrap_or_else(|e| e.to_string());
        out.push(check(
            format!("witness {}", w.name),
            commutes && shape == w.expected.to_string(),
            format!("shape {shape}, commutes={commutes}"),
        ));
    }

    let mu = parse("4,3,2,2,1");
    let table: [(usize, usize, usize, usize, usize); 4] = [
        (1, 2, 2, 1, 7),
        (2, 3, 4, 2, 9),
        (3, 3, 5, 4, 9),
        (5, 1, 5, 5, 9),
    ];
    for (k, s, w, z, len) in table {
        let row = b_path(&mu, k).ok();
        let ok = row
            .as_ref()
            .is_some_and(|r| (r.width, r.w, r.z, r.length) == (s, w, z, len));
        let detail = row
            .map(|r| {
                format!(
                    "s={} w={} z={} len={} [{}]",
                    r.width,
                    r.w,
                    r.z,
                    r.length,
                    listing(&r.table_listing())
                )
            })
            .unwrap_or_else(|| "no path".into());
        out.push(check(format!("b-path 4,3,2,2,1 k={k}"), ok, detail));
    }

    let w = witness_pattern(&parse("4,3,3"));
    let lp = build(&w).longest_path();
    out.push(check(
        "witness pattern 4,3,3",
        lp == 10,
        format!("longest path {lp}"),
    ));

    let r53 = rp_of_partition(&parse("5,3"));
    let has = r53.contains(&parse("3,3,2")) && !r53.contains(&parse("4,3,1"));
    out.push(check(
        "R(5,3)",
        has && r53.len() == 11,
        format!("{} elements", r53.len()),
    ));

    let listed: BTreeSet<Partition> = five_three_shapes().into_iter().collect();
    match shape_set(
        &parse("5,3"),
        ValueMode::Exhaustive(vec![-1, 0, 1]),
        1 << 20,
        p,
        seed,
        exec,
    ) {
        Ok(report) => {
            let observed: BTreeSet<Partition> = report.shapes().cloned().collect();
            let lower: BTreeSet<Partition> = r53
                .iter()
                .cloned()
                .chain([parse("2^4"), parse("3^2,1^2")])
                .collect();
            let ok = observed.is_subset(&listed) && lower.is_subset(&observed);
            out.push(check(
                "census 5,3 over {-1,0,1}",
                ok,
                format!("{} shapes observed", observed.len()),
            ));
        }
        Err(e) => out.push(check("census 5,3 over {-1,0,1}", false, e.to_string())),
    }

    let m64 = parse("6,4");
    let forbidden = parse("6,3,1");
    let hit = shape_set(&m64, ValueMode::Random, 10_000, p, seed, exec)
        .map(|r| r.contains(&forbidden))
        .unwrap_or(true);
    out.push(check(
        "6,4 never yields 6,3,1 (10^4 samples)",
        !hit,
        if hit { "observed" } else { "absent" },
    ));

    let pattern = CommutantPattern::full(&m64);
    out.push(check(
        "pattern size 6,4",
        pattern.len() == 16,
        format!("{} params", pattern.len()),
    ));

    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes() {
        let results = example_suite(Prime::default(), 0, Execution::Parallel);
        for r in &results {
            assert!(r.passed, "{}: {}", r.name, r.detail);
        }
        assert!(results.len() >= 15);
    }
}
