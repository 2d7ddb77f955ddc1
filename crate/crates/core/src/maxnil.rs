//! Closed form for the largest nilpotency index among nilpotent matrices
//! commuting with `J_mu`:
//!
//! `max { 2i + mu_{i+1} + ... + mu_{i+r} }` over `i = 0..t-1` with
//! `i = 0` or `mu_i != mu_{i+1}`, and `r` maximal with
//! `mu_{i+1} - mu_{i+r} <= 1`.
//!
//! The `i = 0` term corresponds to the path starting at the first block
//! (`mu_0 = mu_1 + 1`); without it the value for e.g. `(3,3,2)` would be
//! 6 instead of 8.

use serde::Serialize;

use crate::partitions::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Candidate {
    pub i: usize,
    pub r: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MaxNilReport {
    pub value: usize,
    pub candidates: Vec<Candidate>,
    /// Smallest `i` attaining `value`.
    pub argmax_i: usize,
}

pub fn max_nilpotency_index(mu: &Partition) -> MaxNilReport {
    let t = mu.len();
    let candidates: Vec<Candidate> = (0..t)
        .filter(|&i| mu.part(i) != mu.part(i + 1))
        .map(|i| {
            let head = mu.part(i + 1);
            let r = (i + 1..=t).take_while(|&j| head - mu.part(j) <= 1).count();
            let value = 2 * i + (i + 1..=i + r).map(|j| mu.part(j)).sum::<usize>();
            Candidate { i, r, value }
        })
        .collect();
    let value = candidates
        .iter()
        .map(|c| c.value)
        .max()
        .expect("i = 0 always qualifies");
    let argmax_i = candidates
        .iter()
        .find(|c| c.value == value)
        .map(|c| c.i)
        .unwrap_or(0);
    MaxNilReport {
        value,
        candidates,
        argmax_i,
    }
}
