//! Nilpotent matrices commuting with a fixed nilpotent Jordan matrix.
//!
//! Given the Jordan shape `mu` of a nilpotent matrix `B`, this crate
//! computes the largest nilpotency index of a nilpotent matrix commuting
//! with `B` ([`maxnil`]), and provides the machinery behind it: partition
//! combinatorics, exact linear algebra over `F_p`, the Toeplitz
//! parameterization of the commutant, path covers of acyclic digraphs and
//! the canonical B-paths, together with sampling and enumeration oracles.

pub mod commutant;
pub mod error;
pub mod exec;
pub mod field;
pub mod flow;
pub mod maxnil;
pub mod nb_digraph;
pub mod oracle;
pub mod partitions;
pub mod path_cover;
pub mod suite;

pub use commutant::{CommutantPattern, PatternEntry, ToeplitzParam};
pub use error::{Error, Result};
pub use exec::Execution;
pub use field::{FieldMatrix, Prime, DEFAULT_PRIME};
pub use maxnil::{max_nilpotency_index, MaxNilReport};
pub use nb_digraph::{b_path, witness_pattern, BPathReport, BlockVertex};
pub use partitions::{rp_of_partition, rp_set, rpt, Partition};
pub use path_cover::{AcyclicDigraph, DeltaSequence};
