//! Tree decompositions and exact treewidth.
//!
//! `tw(G) <= k` is decided on a kernel: vertices of degree at most `k` that
//! are simplicial or almost simplicial are eliminated first (both rules keep
//! the answer unchanged), then each kernel component is searched
//! breadth-first over sets `S` of already eliminated vertices. Eliminating
//! `v` after `S` costs `|Q(S, v)|`, the neighbourhood of the component of
//! `G[S + v]` containing `v`; a maximum clique is kept for last.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::budget::{Budget, Meter};
use crate::error::Refused;
use crate::graph::Graph;

use super::clique::clique_number;

/// A tree (given by its edge list over nodes `0..bags.len()`) with a bag of
/// host vertices on every node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum TdViolation {
    NoNodes,
    NotATree { reason: String },
    BagOutOfRange { node: usize },
    VertexUncovered { vertex: usize },
    EdgeUncovered { u: usize, v: usize },
    SubtreeDisconnected { vertex: usize },
}

impl std::fmt::Display for TdViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            TdViolation::NoNodes => write!(f, "decomposition has no nodes"),
            TdViolation::NotATree { reason } => write!(f, "decomposition tree invalid: {reason}"),
            TdViolation::BagOutOfRange { node } => write!(f, "bag {node} names a vertex outside the graph"),
            TdViolation::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            TdViolation::EdgeUncovered { u, v } => write!(f, "edge {{{u},{v}}} is in no bag"),
            TdViolation::SubtreeDisconnected { vertex } => {
                write!(f, "bags containing vertex {vertex} are not connected")
            }
        }
    }
}

impl TreeDecomposition {
    pub fn single_bag(bag: VertexSet) -> Self {
        TreeDecomposition {
            bags: vec![bag],
            edges: Vec::new(),
        }
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    /// Largest bag size minus one (0 when every bag is empty).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Checks that the node graph is a tree and all three decomposition
    /// axioms, reporting the first violation found.
    pub fn validate(&self, g: &Graph) -> Result<(), TdViolation> {
        let t = self.bags.len();
        if t == 0 {
            return Err(TdViolation::NoNodes);
        }
        if self.edges.len() != t - 1 {
            return Err(TdViolation::NotATree {
                reason: format!("{} nodes but {} edges", t, self.edges.len()),
            });
        }
        for &(a, b) in &self.edges {
            if a >= t || b >= t || a == b {
                return Err(TdViolation::NotATree {
                    reason: format!("bad tree edge ({a},{b})"),
                });
            }
        }
        let adj = self.adjacency();
        let mut seen = vec![false; t];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(TdViolation::NotATree {
                reason: "tree is disconnected".into(),
            });
        }
        for (i, b) in self.bags.iter().enumerate() {
            if !b.is_subset(g.vertices()) {
                return Err(TdViolation::BagOutOfRange { node: i });
            }
        }
        for v in 0..g.n() {
            if !self.bags.iter().any(|b| b.contains(v)) {
                return Err(TdViolation::VertexUncovered { vertex: v });
            }
        }
        for (u, v) in g.edges() {
            if !self.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
                return Err(TdViolation::EdgeUncovered { u, v });
            }
        }
        for v in 0..g.n() {
            let nodes: Vec<usize> = (0..t).filter(|&i| self.bags[i].contains(v)).collect();
            let mut reach = vec![false; t];
            reach[nodes[0]] = true;
            let mut stack = vec![nodes[0]];
            while let Some(x) = stack.pop() {
                for &y in &adj[x] {
                    if !reach[y] && self.bags[y].contains(v) {
                        reach[y] = true;
                        stack.push(y);
                    }
                }
            }
            if nodes.iter().any(|&i| !reach[i]) {
                return Err(TdViolation::SubtreeDisconnected { vertex: v });
            }
        }
        Ok(())
    }
}

pub fn validate_tree_decomposition(g: &Graph, td: &TreeDecomposition) -> Result<(), TdViolation> {
    td.validate(g)
}

/// Width of eliminating `order` (every vertex exactly once) in the
/// elimination game.
pub fn elimination_width(g: &Graph, order: &[usize]) -> usize {
    let mut h = g.clone();
    let mut width = 0;
    let mut gone = VertexSet::EMPTY;
    for &v in order {
        let nb = h.neighbors(v) - gone;
        width = width.max(nb.len());
        make_clique(&mut h, nb);
        gone.insert(v);
    }
    width
}

/// Decomposition with one bag `{v} + later neighbours` per vertex, attached
/// to the bag of the earliest-eliminated later neighbour.
pub fn td_from_elimination_order(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    if n == 0 {
        return TreeDecomposition::single_bag(VertexSet::EMPTY);
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut h = g.clone();
    let mut gone = VertexSet::EMPTY;
    let mut bags = Vec::with_capacity(n);
    let mut later = Vec::with_capacity(n);
    for &v in order {
        let nb = h.neighbors(v) - gone;
        make_clique(&mut h, nb);
        gone.insert(v);
        bags.push(nb.with(v));
        later.push(nb);
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut last_root: Option<usize> = None;
    for (i, nb) in later.iter().enumerate() {
        match nb.iter().min_by_key(|&w| pos[w]) {
            Some(w) => edges.push((i, pos[w])),
            None => {
                if let Some(r) = last_root {
                    edges.push((r, i));
                }
                last_root = Some(i);
            }
        }
    }
    TreeDecomposition { bags, edges }
}

fn make_clique(h: &mut Graph, set: VertexSet) {
    for u in set {
        for w in set.above(u) {
            h.add_edge(u, w);
        }
    }
}

/// `(lower, upper)` with `lower <= tw(g) <= upper`.
///
/// The lower bound is the larger of the degeneracy and the minor-min-width
/// heuristic; the upper bound is the better of greedy min-fill and
/// min-degree elimination.
pub fn treewidth_bounds(g: &Graph) -> (usize, usize) {
    let (upper, _) = greedy_upper(g);
    (lower_bound(g).min(upper), upper)
}

pub(crate) fn lower_bound(g: &Graph) -> usize {
    degeneracy(g).max(minor_min_width(g))
}

pub fn degeneracy(g: &Graph) -> usize {
    let mut alive = g.vertices();
    let mut best = 0;
    while !alive.is_empty() {
        let v = alive.iter().min_by_key(|&v| (g.neighbors(v) & alive).len()).unwrap();
        best = best.max((g.neighbors(v) & alive).len());
        alive.remove(v);
    }
    best
}

/// Repeatedly contract a minimum-degree vertex into its minimum-degree
/// neighbour; the largest minimum degree seen bounds the treewidth of a
/// minor, hence of `g`.
fn minor_min_width(g: &Graph) -> usize {
    let mut h = g.clone();
    let mut alive = h.vertices();
    let mut best = 0;
    while alive.len() > 1 {
        let v = alive.iter().min_by_key(|&v| (h.neighbors(v) & alive).len()).unwrap();
        let nb = h.neighbors(v) & alive;
        best = best.max(nb.len());
        if let Some(u) = nb.iter().min_by_key(|&u| ((h.neighbors(u) & alive).len(), u)) {
            for w in nb.without(u) {
                h.add_edge(u, w);
            }
        }
        alive.remove(v);
    }
    best
}

fn greedy_upper(g: &Graph) -> (usize, Vec<usize>) {
    let a = greedy_order(g, true);
    let b = greedy_order(g, false);
    let (wa, wb) = (elimination_width(g, &a), elimination_width(g, &b));
    if wa <= wb {
        (wa, a)
    } else {
        (wb, b)
    }
}

fn greedy_order(g: &Graph, min_fill: bool) -> Vec<usize> {
    let mut h = g.clone();
    let mut alive = h.vertices();
    let mut order = Vec::with_capacity(g.n());
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| {
                let nb = h.neighbors(v) & alive;
                let fill = if min_fill {
                    let present = h.edges_within(nb);
                    nb.len() * nb.len().saturating_sub(1) / 2 - present
                } else {
                    0
                };
                (fill, nb.len(), v)
            })
            .unwrap();
        let nb = h.neighbors(v) & alive;
        make_clique(&mut h, nb);
        alive.remove(v);
        order.push(v);
    }
    order
}

/// Exact treewidth with a witness decomposition of that width.
pub fn treewidth_exact(g: &Graph) -> Result<(usize, TreeDecomposition), Refused> {
    treewidth_exact_with(g, &Budget::default())
}

pub fn treewidth_exact_with(g: &Graph, budget: &Budget) -> Result<(usize, TreeDecomposition), Refused> {
    let (upper, greedy) = greedy_upper(g);
    let lower = lower_bound(g).min(upper);
    let mut meter = Meter::new("exact treewidth", budget.treewidth_states);
    for k in lower..upper {
        if let Some(order) = decide(g, k, &mut meter)? {
            debug_assert!(elimination_width(g, &order) <= k);
            return Ok((k, td_from_elimination_order(g, &order)));
        }
    }
    Ok((upper, td_from_elimination_order(g, &greedy)))
}

/// Decides `tw(g) <= k`, returning an elimination order of width at most
/// `k` when it holds.
pub fn treewidth_at_most(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Vec<usize>>, Refused> {
    let (upper, greedy) = greedy_upper(g);
    if upper <= k {
        return Ok(Some(greedy));
    }
    if lower_bound(g) > k {
        return Ok(None);
    }
    let mut meter = Meter::new("treewidth decision", budget.treewidth_states);
    decide(g, k, &mut meter)
}

fn decide(g: &Graph, k: usize, meter: &mut Meter) -> Result<Option<Vec<usize>>, Refused> {
    let mut h = g.clone();
    let mut alive = h.vertices();
    let mut order = Vec::with_capacity(g.n());
    // simplicial and almost-simplicial reductions
    loop {
        let mut progress = false;
        for v in alive {
            let nb = h.neighbors(v) & alive;
            if nb.len() > k {
                continue;
            }
            let simplicial = h.is_clique(nb);
            let almost = simplicial || nb.iter().any(|u| h.is_clique(nb.without(u)));
            if almost {
                make_clique(&mut h, nb);
                alive.remove(v);
                order.push(v);
                progress = true;
            }
        }
        if !progress {
            break;
        }
    }
    for comp in h.components_within(alive) {
        match solve_component(&h, comp, k, meter)? {
            Some(part) => order.extend(part),
            None => return Ok(None),
        }
    }
    Ok(Some(order))
}

fn solve_component(h: &Graph, comp: VertexSet, k: usize, meter: &mut Meter) -> Result<Option<Vec<usize>>, Refused> {
    if comp.len() <= k + 1 {
        return Ok(Some(comp.to_vec()));
    }
    let sub = h.induced_subgraph(comp).expect("component within range");
    let local = comp.to_vec();
    let (_, clique) = clique_number(&sub);
    if clique.len() > k + 1 {
        return Ok(None);
    }
    let n = sub.n();
    let all = sub.vertices();
    let choosable = all - clique;
    // parent links: state -> (previous state, vertex eliminated)
    let mut parent: HashMap<VertexSet, (VertexSet, usize)> = HashMap::new();
    let mut level = vec![VertexSet::EMPTY];
    let mut done = None;
    'search: for _ in 0..n {
        let mut next: Vec<VertexSet> = Vec::new();
        for &s in &level {
            if (all - s).len() <= k + 1 {
                done = Some(s);
                break 'search;
            }
            let comps: Vec<(VertexSet, VertexSet)> = sub
                .components_within(s)
                .into_iter()
                .map(|c| (c, sub.neighborhood_of(c)))
                .collect();
            for v in choosable - s {
                let mut q = sub.neighbors(v) - s;
                for &(c, nc) in &comps {
                    if sub.neighbors(v).intersects(c) {
                        q |= nc;
                    }
                }
                q.remove(v);
                if q.len() > k {
                    continue;
                }
                let t = s.with(v);
                if let std::collections::hash_map::Entry::Vacant(e) = parent.entry(t) {
                    meter.tick()?;
                    e.insert((s, v));
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        level = next;
    }
    let Some(mut s) = done else {
        return Ok(None);
    };
    let rest: Vec<usize> = ((all - s) - clique).iter().chain(clique.iter()).collect();
    let mut prefix = Vec::new();
    while let Some(&(p, v)) = parent.get(&s) {
        prefix.push(v);
        s = p;
    }
    prefix.reverse();
    prefix.extend(rest);
    Ok(Some(prefix.into_iter().map(|i| local[i]).collect()))
}
