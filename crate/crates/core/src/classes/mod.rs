//! Class recognizers and the dichotomy predicates, each paired with its
//! binding function.

mod dichotomy;
mod planar;

pub use dichotomy::{
    dichotomy, dichotomy_with, finite_set_induced_subgraph_dichotomy, line_graph_root_in_s,
    BindingFunction, DichotomyVerdict, FiniteSetVerdict, DICHOTOMY_MAX_ORDER,
};
pub use planar::{is_planar, is_planar_wagner};

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::budget::{Budget, Meter};
use crate::error::Refused;
use crate::graph::Graph;

/// Outcome of the chordality test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Chordality {
    /// A perfect elimination ordering.
    Chordal { peo: Vec<usize> },
    /// An induced cycle of length at least 4, in cyclic order.
    Hole { cycle: Vec<usize> },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

pub fn is_chordal(g: &Graph) -> bool {
    chordality(g).is_chordal()
}

/// Maximum cardinality search; the reversed visiting order is a perfect
/// elimination ordering exactly when `g` is chordal.
pub fn chordality(g: &Graph) -> Chordality {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (g.vertices() - visited)
            .iter()
            .max_by_key(|&v| (weight[v], usize::MAX - v))
            .unwrap();
        visited.insert(v);
        order.push(v);
        for w in g.neighbors(v) - visited {
            weight[w] += 1;
        }
    }
    order.reverse();
    if is_perfect_elimination_ordering(g, &order) {
        return Chordality::Chordal { peo: order };
    }
    Chordality::Hole {
        cycle: find_hole(g).expect("a graph without a perfect elimination ordering has a hole"),
    }
}

/// Each vertex's neighbours later in `order` form a clique.
pub fn is_perfect_elimination_ordering(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v) & later) {
            return false;
        }
    }
    true
}

/// Some vertex `v` of a hole has two non-adjacent neighbours `x`, `y`
/// joined by a path avoiding the rest of `N[v]`; a shortest such path
/// closes an induced cycle through `v`.
fn find_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for x in nb {
            for y in nb.above(x) - g.neighbors(x) {
                let within = (g.vertices() - g.closed_neighbors(v)) | VertexSet::from_iter([x, y]);
                if let Some(p) = g.shortest_path_within(x, y, within) {
                    let mut cycle = vec![v];
                    cycle.extend(p);
                    return Some(cycle);
                }
            }
        }
    }
    None
}

/// First block that is neither a cycle nor a complete graph.
pub fn block_cactus_violation(g: &Graph) -> Option<VertexSet> {
    g.blocks().into_iter().find(|&b| {
        let k = b.len();
        let m = g.edges_within(b);
        let complete = m == k * (k - 1) / 2;
        let cycle = k >= 3 && m == k && b.iter().all(|v| (g.neighbors(v) & b).len() == 2);
        !(complete || cycle)
    })
}

/// Every block induces a cycle or a complete graph.
pub fn is_block_cactus(g: &Graph) -> bool {
    block_cactus_violation(g).is_none()
}

/// Every component is a path or a subdivided claw.
pub fn in_class_s(h: &Graph) -> bool {
    h.components().into_iter().all(|c| {
        let tree = h.edges_within(c) + 1 == c.len();
        let degs: Vec<usize> = c.iter().map(|v| h.degree(v)).collect();
        tree && degs.iter().all(|&d| d <= 3) && degs.iter().filter(|&&d| d == 3).count() <= 1
    })
}

pub fn is_subcubic(g: &Graph) -> bool {
    g.max_degree() <= 3
}

pub fn is_edgeless(g: &Graph) -> bool {
    g.edge_count() == 0
}

/// An independent set `S` of size `q` and a component `C` of `G - S` in
/// which every vertex of `S` has a neighbour; contracting `C` gives an
/// induced `K_{1,q}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct K1qWitness {
    pub independent: VertexSet,
    pub component: VertexSet,
}

impl K1qWitness {
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let s = self.independent;
        let c = self.component;
        if !g.is_independent(s) {
            return Err("S is not independent".into());
        }
        if c.is_empty() || s.intersects(c) {
            return Err("C must be nonempty and disjoint from S".into());
        }
        if g.component_within(c.first().unwrap(), g.vertices() - s) != c {
            return Err("C is not a component of G - S".into());
        }
        if let Some(v) = s.iter().find(|&v| !g.neighbors(v).intersects(c)) {
            return Err(format!("vertex {v} of S has no neighbour in C"));
        }
        Ok(())
    }
}

pub fn k1q_induced_minor_free(g: &Graph, q: usize) -> Result<bool, Refused> {
    Ok(k1q_induced_minor(g, q, &Budget::default())?.is_none())
}

/// Searches independent `q`-sets in lexicographic order for a component of
/// the remainder seeing all of them.
pub fn k1q_induced_minor(g: &Graph, q: usize, budget: &Budget) -> Result<Option<K1qWitness>, Refused> {
    let mut meter = Meter::new("K_{1,q} induced minor", budget.search_nodes);
    let mut found = None;
    independent_sets(g, q, VertexSet::EMPTY, g.vertices(), &mut meter, &mut |s| {
        let rest = g.vertices() - s;
        for c in g.components_within(rest) {
            if s.iter().all(|v| g.neighbors(v).intersects(c)) {
                found = Some(K1qWitness {
                    independent: s,
                    component: c,
                });
                return true;
            }
        }
        false
    })?;
    Ok(found)
}

fn independent_sets(
    g: &Graph,
    q: usize,
    chosen: VertexSet,
    cand: VertexSet,
    meter: &mut Meter,
    f: &mut dyn FnMut(VertexSet) -> bool,
) -> Result<bool, Refused> {
    meter.tick()?;
    if chosen.len() == q {
        return Ok(f(chosen));
    }
    if chosen.len() + cand.len() < q {
        return Ok(false);
    }
    for v in cand {
        let next = cand.above(v) - g.neighbors(v);
        if independent_sets(g, q, chosen.with(v), next, meter, f)? {
            return Ok(true);
        }
    }
    Ok(false)
}
