//! Shared fixtures for the benchmarks.

use rcwb_core::finpar::{FinParModel, FinSet};

/// The two-atom model closed to the benchmark scale.
pub fn bench_model(max_size: usize, max_objects: usize) -> FinParModel {
    let x = FinSet::atom("X", &["x0", "x1"]).expect("atom");
    let y = FinSet::atom("Y", &["y0"]).expect("atom");
    FinParModel::closed(vec![x, y], 2, max_size, max_objects)
}
