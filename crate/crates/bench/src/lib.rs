//! Benchmark helpers; the benchmarks themselves live under `benches/`.

use slgraph::construct::{build_c123, ConstructedInstance};
use slgraph::graph::PlaneGraph;
use slgraph::slabel::SLabeledGraph;

/// The 24-face base triangulation as an identity-labeled instance.
pub fn base_instance() -> SLabeledGraph {
    let g: PlaneGraph = slgraph::construct::base_triangulation();
    SLabeledGraph::all_id(&g.to_simple(), 4).expect("base graph is simple")
}

/// The (123) construction, built once for reuse across iterations.
pub fn c123_instance() -> ConstructedInstance {
    build_c123().expect("construction succeeds")
}
