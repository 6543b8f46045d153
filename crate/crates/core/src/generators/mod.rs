//! Named graph families, seeded random generators and exhaustive enumeration.
//!
//! Vertex numbering is fixed and documented per constructor so that golden
//! tests can refer to specific vertices.

mod enumerate;
mod random;

pub use enumerate::{
    enumerate_all_graphs, hereditary_graphs_up_to_iso, graphs_up_to_iso, LabeledGraphs,
    MAX_ISO_ORDER, MAX_LABELED_ORDER,
};
pub use random::{random_bipartite, random_block_cactus, random_chordal, random_graph};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::new(n).complement()
}

pub fn edgeless(n: usize) -> Graph {
    Graph::new(n)
}

/// `K_{p,q}`: vertices `0..p` form the first part, `p..p+q` the second.
pub fn complete_bipartite(p: usize, q: usize) -> Graph {
    let mut g = Graph::new(p + q);
    for u in 0..p {
        for v in p..p + q {
            g.add_edge(u, v);
        }
    }
    g
}

/// `C_n` with edges `i - (i+1) mod n`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::arg(format!("cycle needs at least 3 vertices, got {n}")));
    }
    let mut g = Graph::try_new(n)?;
    for i in 0..n {
        g.add_edge(i, (i + 1) % n);
    }
    Ok(g)
}

/// `P_n` on `n` vertices: `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    let mut g = Graph::new(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

/// `K_{1,q}` with centre 0.
pub fn star(q: usize) -> Graph {
    complete_bipartite(1, q)
}

pub fn claw() -> Graph {
    star(3)
}

/// `K_q` minus the edge `01`.
pub fn complete_minus_edge(q: usize) -> Result<Graph> {
    if q < 2 {
        return Err(Error::arg(format!("K_q minus an edge needs q >= 2, got {q}")));
    }
    let mut g = Graph::try_new(q)?.complement();
    g.remove_edge(0, 1);
    Ok(g)
}

/// `K_{2,q}` (side `{0, 1}`) plus the edge `01`.
pub fn k2q_plus(q: usize) -> Result<Graph> {
    if q < 1 {
        return Err(Error::arg("K_{2,q}^+ needs q >= 1"));
    }
    if q + 2 > crate::bitset::MAX_VERTICES {
        return Err(Error::Unsupported(format!("K_{{2,{q}}}^+ is too large")));
    }
    let mut g = complete_bipartite(2, q);
    g.add_edge(0, 1);
    Ok(g)
}

/// `W_4`: the 4-cycle `0-1-2-3` plus hub 4.
pub fn wheel4() -> Graph {
    let mut g = Graph::new(5);
    for i in 0..4 {
        g.add_edge(i, (i + 1) % 4);
        g.add_edge(i, 4);
    }
    g
}

/// Claw with legs of `a`, `b`, `c` edges. The centre is 0; each leg is
/// numbered outward, first leg first.
pub fn subdivided_claw(a: usize, b: usize, c: usize) -> Result<Graph> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::arg(format!("legs must have length >= 1, got ({a},{b},{c})")));
    }
    let mut g = Graph::try_new(1 + a + b + c)?;
    let mut next = 1;
    for len in [a, b, c] {
        let mut prev = 0;
        for _ in 0..len {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
    }
    Ok(g)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WallSpec {
    pub rows: usize,
    pub columns: usize,
    #[serde(default)]
    pub subdivisions: usize,
}

impl WallSpec {
    pub fn new(rows: usize, columns: usize, subdivisions: usize) -> Self {
        WallSpec { rows, columns, subdivisions }
    }

    fn check(&self) -> Result<()> {
        if self.rows == 0 || self.columns == 0 {
            return Err(Error::arg(format!(
                "wall needs at least one row and column of bricks, got {}x{}",
                self.rows, self.columns
            )));
        }
        Ok(())
    }
}

/// Brick wall with `rows x columns` hexagonal bricks.
///
/// Lattice vertices `(i, j)` for `0 <= i <= rows`, `0 <= j <= 2 columns + 1`
/// are joined along rows, and `(i, j) - (i+1, j)` whenever `j = i (mod 2)`.
/// The two corners left with degree 1 are removed, so every degree is 2 or
/// 3. Remaining vertices are numbered row-major. A single brick is `C_6`.
pub fn elementary_wall(rows: usize, columns: usize) -> Result<Graph> {
    WallSpec::new(rows, columns, 0).check()?;
    let width = 2 * columns + 2;
    let total = (rows + 1) * width;
    if total - 2 > crate::bitset::MAX_VERTICES {
        return Err(Error::Unsupported(format!("{rows}x{columns} wall exceeds 128 vertices")));
    }
    let mut edges = Vec::new();
    let id = |i: usize, j: usize| i * width + j;
    for i in 0..=rows {
        for j in 0..width {
            if j + 1 < width {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i < rows && j % 2 == i % 2 {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    let mut deg = vec![0usize; total];
    for &(u, v) in &edges {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut index = vec![usize::MAX; total];
    let mut n = 0;
    for v in 0..total {
        if deg[v] > 1 {
            index[v] = n;
            n += 1;
        }
    }
    let mut g = Graph::new(n);
    for (u, v) in edges {
        if index[u] != usize::MAX && index[v] != usize::MAX {
            g.add_edge(index[u], index[v]);
        }
    }
    Ok(g)
}

/// Elementary wall with every edge replaced by a path with
/// `spec.subdivisions` internal vertices; new vertices follow the wall's own
/// vertices, edge by edge in lexicographic order.
pub fn q_subdivided_wall(spec: &WallSpec) -> Result<Graph> {
    spec.check()?;
    let wall = elementary_wall(spec.rows, spec.columns)?;
    subdivide_all(&wall, spec.subdivisions)
}

/// Replaces every edge with a path with `q` internal vertices.
pub fn subdivide_all(g: &Graph, q: usize) -> Result<Graph> {
    let edges = g.edges();
    let n = g.n() + q * edges.len();
    let mut h = Graph::try_new(n)?;
    let mut next = g.n();
    for (u, v) in edges {
        let mut prev = u;
        for _ in 0..q {
            h.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        h.add_edge(prev, v);
    }
    Ok(h)
}
