//! Instances, labelings, partitions and the exhaustive oracle.

pub mod cost;
pub mod index;
pub mod oracle;
pub mod partition;

pub use cost::{neg, pos, CostFunction, GroundSet};
pub use index::{pair_count, pair_index, pairs, triple_count, triple_index, triples};
pub use oracle::{
    bell, enumerate_partitions, enumerate_partitions_bounded, minimize_over, solve_exact,
    solve_exact_bounded, DEFAULT_ORACLE_BOUND,
};
pub use partition::{
    evaluate_objective, labeling_from_partition, partition_from_labeling, Labeling, Partition,
};
