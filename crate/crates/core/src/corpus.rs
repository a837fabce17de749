//! Small named graph families used by tests, benchmarks and examples.

use crate::graph::FiniteGraph;

fn build(names: Vec<String>, edges: Vec<(usize, usize)>) -> FiniteGraph {
    FiniteGraph::from_edges(names, edges).expect("corpus graphs are valid")
}

/// Path on `n ≥ 1` vertices `v0 … v{n-1}`.
pub fn path(n: usize) -> FiniteGraph {
    let names = (0..n).map(|i| format!("v{i}")).collect();
    build(names, (1..n).map(|i| (i - 1, i)).collect())
}

/// Cycle on `n ≥ 3` vertices `v0 … v{n-1}`.
pub fn cycle(n: usize) -> FiniteGraph {
    assert!(n >= 3);
    let names = (0..n).map(|i| format!("v{i}")).collect();
    build(names, (0..n).map(|i| (i, (i + 1) % n)).collect())
}

/// The 4-cycle with corner names, vertex order `tl, tr, bl, br` and edge
/// order `(tl,tr), (tr,br), (br,bl), (bl,tl)`.
pub fn square() -> FiniteGraph {
    let names = ["tl", "tr", "bl", "br"].map(String::from).to_vec();
    build(names, vec![(0, 1), (1, 3), (3, 2), (2, 0)])
}

/// The `d`-dimensional hypercube; vertex names are `d`-digit binary strings,
/// vertex order is numeric.
pub fn hypercube(d: usize) -> FiniteGraph {
    let n = 1usize << d;
    let names = (0..n).map(|v| format!("{v:0d$b}")).collect();
    let mut edges = Vec::new();
    for v in 0..n {
        for bit in (0..d).rev() {
            let w = v ^ (1 << bit);
            if w > v {
                edges.push((v, w));
            }
        }
    }
    build(names, edges)
}

/// Star `K_{1,k}` with centre `c` and leaves `l0 … l{k-1}`.
pub fn star(k: usize) -> FiniteGraph {
    let mut names = vec!["c".to_string()];
    names.extend((0..k).map(|i| format!("l{i}")));
    build(names, (1..=k).map(|i| (0, i)).collect())
}

/// `w × h` grid; vertex `g{x}_{y}` in row-major order.
pub fn grid(w: usize, h: usize) -> FiniteGraph {
    let id = |x: usize, y: usize| y * w + x;
    let mut names = Vec::with_capacity(w * h);
    for y in 0..h {
        for x in 0..w {
            names.push(format!("g{x}_{y}"));
        }
    }
    let mut edges = Vec::new();
    for y in 0..h {
        for x in 0..w {
            if x + 1 < w {
                edges.push((id(x, y), id(x + 1, y)));
            }
            if y + 1 < h {
                edges.push((id(x, y), id(x, y + 1)));
            }
        }
    }
    build(names, edges)
}

/// Complete binary tree of the given depth (root `t`).
pub fn binary_tree(depth: usize) -> FiniteGraph {
    let n = (1usize << (depth + 1)) - 1;
    let names = (0..n).map(|i| format!("t{i}")).collect();
    build(names, (1..n).map(|i| ((i - 1) / 2, i)).collect())
}
