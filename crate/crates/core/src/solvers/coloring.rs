//! List colouring over tree decompositions and the robust List-k-Colouring
//! pipeline.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::nice::{NiceKind, NiceTreeDecomposition};
use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::classes::BindingFunction;
use crate::error::{Error, Refused, Result};
use crate::graph::Graph;
use crate::invariants::{smallest_clique_of_size, td_from_elimination_order, treewidth_at_most, TreeDecomposition};

/// Colours are `1..=k`; a vertex with an empty list cannot be coloured.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColorListAssignment {
    pub k: usize,
    pub lists: Vec<Vec<usize>>,
}

impl ColorListAssignment {
    pub fn new(k: usize, lists: Vec<Vec<usize>>) -> Result<Self> {
        if k > 255 {
            return Err(Error::arg(format!("at most 255 colours are supported, got {k}")));
        }
        for (v, l) in lists.iter().enumerate() {
            if let Some(&c) = l.iter().find(|&&c| c == 0 || c > k) {
                return Err(Error::arg(format!("colour {c} in the list of vertex {v} is outside 1..={k}")));
            }
        }
        let lists = lists
            .into_iter()
            .map(|mut l| {
                l.sort_unstable();
                l.dedup();
                l
            })
            .collect();
        Ok(ColorListAssignment { k, lists })
    }

    /// Every vertex may use every colour.
    pub fn full(n: usize, k: usize) -> Self {
        ColorListAssignment {
            k,
            lists: vec![(1..=k).collect(); n],
        }
    }

    /// Proper, and every vertex takes a colour from its list.
    pub fn check(&self, g: &Graph, coloring: &[usize]) -> Result<(), String> {
        if coloring.len() != g.n() || self.lists.len() != g.n() {
            return Err("colouring, lists and graph disagree in length".into());
        }
        for (v, (list, &c)) in self.lists.iter().zip(coloring).enumerate() {
            if !list.contains(&c) {
                return Err(format!("vertex {v} has colour {c} outside its list"));
            }
        }
        match g.edges().into_iter().find(|&(u, v)| coloring[u] == coloring[v]) {
            Some((u, v)) => Err(format!("edge {{{u},{v}}} is monochromatic")),
            None => Ok(()),
        }
    }
}

/// Exact list colouring by dynamic programming over a nice form of `td`.
pub fn list_coloring_on_td(g: &Graph, lists: &ColorListAssignment, td: &TreeDecomposition) -> Result<Option<Vec<usize>>> {
    if lists.k > 255 {
        return Err(Error::arg("at most 255 colours are supported"));
    }
    if lists.lists.len() != g.n() {
        return Err(Error::arg(format!("{} lists for {} vertices", lists.lists.len(), g.n())));
    }
    let nice = NiceTreeDecomposition::from_td(g, td)?;
    // state: colours of the bag in increasing vertex order -> a colouring of
    // everything below (0 = not yet coloured)
    let mut tables: Vec<BTreeMap<Vec<u8>, Vec<u8>>> = Vec::with_capacity(nice.nodes.len());
    let key = |bag: VertexSet, col: &[u8]| -> Vec<u8> { bag.iter().map(|v| col[v]).collect() };
    for node in &nice.nodes {
        let mut t = BTreeMap::new();
        match node.kind {
            NiceKind::Leaf => {
                t.insert(Vec::new(), vec![0u8; g.n()]);
            }
            NiceKind::Introduce { vertex, child } => {
                let nb = g.neighbors(vertex) & node.bag;
                for col in tables[child].values() {
                    for &c in &lists.lists[vertex] {
                        let c = c as u8;
                        if nb.iter().all(|w| col[w] != c) {
                            let mut next = col.clone();
                            next[vertex] = c;
                            t.entry(key(node.bag, &next)).or_insert(next);
                        }
                    }
                }
            }
            NiceKind::Forget { child, .. } => {
                for col in tables[child].values() {
                    t.entry(key(node.bag, col)).or_insert_with(|| col.clone());
                }
            }
            NiceKind::Join { left, right } => {
                for (k, cl) in &tables[left] {
                    if let Some(cr) = tables[right].get(k) {
                        let merged = cl.iter().zip(cr).map(|(&a, &b)| a.max(b)).collect();
                        t.insert(k.clone(), merged);
                    }
                }
            }
        }
        tables.push(t);
    }
    let out = tables[nice.root()]
        .values()
        .next()
        .map(|col| col.iter().map(|&c| c as usize).collect::<Vec<_>>());
    if let Some(col) = &out {
        debug_assert!(lists.check(g, col).is_ok());
    }
    Ok(out)
}

/// Exhaustive list colouring (backtracking in vertex order).
pub fn brute_list_coloring(g: &Graph, lists: &ColorListAssignment) -> Option<Vec<usize>> {
    fn go(g: &Graph, lists: &ColorListAssignment, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for &c in &lists.lists[v] {
            if (g.neighbors(v) & VertexSet::full(v)).iter().all(|w| col[w] != c) {
                col[v] = c;
                if go(g, lists, v + 1, col) {
                    return true;
                }
            }
        }
        col[v] = 0;
        false
    }
    let mut col = vec![0; g.n()];
    go(g, lists, 0, &mut col).then_some(col)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum RobustOutcome {
    Colored { coloring: Vec<usize> },
    /// `clique` is a `(k+1)`-clique when that was the reason.
    NotColorable { clique: Option<VertexSet> },
    /// Treewidth exceeds the ceiling `max{f(1), .., f(k)}`.
    NotInClass { ceiling: u64 },
    Refused { what: String, limit: u64 },
}

pub fn robust_list_k_coloring(
    g: &Graph,
    lists: &ColorListAssignment,
    k: usize,
    binding: &BindingFunction,
) -> Result<RobustOutcome> {
    robust_list_k_coloring_with(g, lists, k, binding, &Budget::default())
}

/// Clique test for `K_{k+1}`, then `tw(g) <= c_k` with a witness
/// decomposition, then list colouring on that decomposition.
pub fn robust_list_k_coloring_with(
    g: &Graph,
    lists: &ColorListAssignment,
    k: usize,
    binding: &BindingFunction,
    budget: &Budget,
) -> Result<RobustOutcome> {
    if k == 0 {
        return Err(Error::arg("k must be at least 1"));
    }
    if lists.k != k {
        return Err(Error::arg(format!("lists use {} colours but k = {k}", lists.k)));
    }
    let mut ceiling = 0;
    for i in 1..=k as u64 {
        ceiling = ceiling.max(
            binding
                .eval(i)
                .ok_or_else(|| Error::arg(format!("binding {binding} cannot be evaluated at {i}")))?,
        );
    }
    if let Some(clique) = smallest_clique_of_size(g, k + 1) {
        return Ok(RobustOutcome::NotColorable { clique: Some(clique) });
    }
    let limit = usize::try_from(ceiling).unwrap_or(usize::MAX);
    let order = match treewidth_at_most(g, limit, budget) {
        Ok(Some(order)) => order,
        Ok(None) => return Ok(RobustOutcome::NotInClass { ceiling }),
        Err(Refused { what, limit }) => {
            return Ok(RobustOutcome::Refused {
                what: what.to_string(),
                limit,
            })
        }
    };
    let td = td_from_elimination_order(g, &order);
    Ok(match list_coloring_on_td(g, lists, &td)? {
        Some(coloring) => {
            lists
                .check(g, &coloring)
                .map_err(|e| Error::Precondition(format!("internal colouring check failed: {e}")))?;
            RobustOutcome::Colored { coloring }
        }
        None => RobustOutcome::NotColorable { clique: None },
    })
}
