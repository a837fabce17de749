//! Benchmark inputs shared by the bench targets.

use medianforge::{corpus, truncate, FiniteGraph, Generator};

/// A named graph together with the cut radius it is benchmarked at.
pub struct Fixture {
    pub name: &'static str,
    pub graph: FiniteGraph,
    pub radius: usize,
}

pub fn fixtures() -> Vec<Fixture> {
    let ladder = truncate(Generator::Ladder, 8).expect("ladder ball").graph;
    let decorated = truncate(Generator::DecoratedTree { degree: 3, cycle_len: 4 }, 4).expect("decorated ball").graph;
    vec![
        Fixture { name: "grid3x3_r2", graph: corpus::grid(3, 3), radius: 2 },
        Fixture { name: "grid3x3_r3", graph: corpus::grid(3, 3), radius: 3 },
        Fixture { name: "q3_r2", graph: corpus::hypercube(3), radius: 2 },
        Fixture { name: "ladder8_r3", graph: ladder, radius: 3 },
        Fixture { name: "decorated4_r3", graph: decorated, radius: 3 },
    ]
}
