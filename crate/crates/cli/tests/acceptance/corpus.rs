//! The fixed corpus of graphs and the duals of their cut pocsets.

use medianforge::{
    build_dual, check_median, corpus, enumerate_cuts, truncate, DualMedianGraph, Error, FiniteGraph, Generator, Pocset,
};

pub struct Named {
    pub name: String,
    pub graph: FiniteGraph,
}

pub struct DualCase {
    pub name: String,
    pub radius: usize,
    pub pocset: Pocset,
    pub dual: DualMedianGraph,
}

pub struct Corpus {
    pub graphs: Vec<Named>,
    pub trees: Vec<Named>,
    pub duals: Vec<DualCase>,
    /// `(graph, radius, reason)` for inputs whose dual hit a budget.
    pub excluded: Vec<(String, usize, String)>,
}

fn named(name: impl Into<String>, graph: FiniteGraph) -> Named {
    Named { name: name.into(), graph }
}

fn truncation(spec: &str, radius: usize) -> Named {
    let generator: Generator = spec.parse().expect("valid generator");
    named(format!("{spec}@{radius}"), truncate(generator, radius).expect("truncation fits").graph)
}

/// Cut radii per graph. The decorated tree at ball radius 6 and beyond has
/// over a million candidate boundaries at cut radius 3, so it stops at 2.
fn cut_radii(name: &str) -> std::ops::RangeInclusive<usize> {
    match name {
        "decorated_tree:3:4@6" | "decorated_tree:3:4@8" => 0..=2,
        _ => 0..=3,
    }
}

impl Corpus {
    pub fn build() -> Self {
        let mut graphs: Vec<Named> = (2..=6).map(|n| named(format!("P{n}"), corpus::path(n))).collect();
        graphs.push(named("C4", corpus::square()));
        graphs.push(named("C6", corpus::cycle(6)));
        graphs.push(named("Q3", corpus::hypercube(3)));
        graphs.push(named("K13", corpus::star(3)));
        graphs.push(named("G33", corpus::grid(3, 3)));
        for r in [2, 4, 6, 8] {
            graphs.push(truncation("ladder", r));
        }
        for r in [2, 4, 6, 8] {
            graphs.push(truncation("decorated_tree:3:4", r));
        }

        let mut trees: Vec<Named> = (2..=6).map(|n| named(format!("P{n}"), corpus::path(n))).collect();
        trees.push(named("K13", corpus::star(3)));
        trees.push(named("B2", corpus::binary_tree(2)));
        trees.push(named("B3", corpus::binary_tree(3)));
        trees.push(truncation("regular_tree:3", 3));
        trees.push(truncation("line", 5));

        let mut duals = Vec::new();
        let mut excluded = Vec::new();
        for g in &graphs {
            for radius in cut_radii(&g.name) {
                let pocset = enumerate_cuts(&g.graph, radius).expect("corpus cuts fit the subset budget");
                match build_dual(&pocset) {
                    Ok(dual) => duals.push(DualCase { name: g.name.clone(), radius, pocset, dual }),
                    Err(e @ Error::BudgetExceeded { .. }) => excluded.push((g.name.clone(), radius, e.to_string())),
                    Err(e) => panic!("dual of {} at radius {radius}: {e}", g.name),
                }
            }
        }
        Self { graphs, trees, duals, excluded }
    }

    /// Corpus graphs that pass the median check, followed by the duals with
    /// at most `dual_cap` vertices.
    pub fn median_graphs(&self, dual_cap: usize) -> Vec<(String, &FiniteGraph)> {
        let primal =
            self.graphs.iter().filter(|g| check_median(&g.graph).is_median).map(|g| (g.name.clone(), &g.graph));
        let duals = self
            .duals
            .iter()
            .filter(|d| d.dual.graph().vertex_count() <= dual_cap)
            .map(|d| (format!("dual({}, R={})", d.name, d.radius), d.dual.graph()));
        primal.chain(duals).collect()
    }
}
