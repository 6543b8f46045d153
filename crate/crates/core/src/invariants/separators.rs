use std::collections::{BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::budget::{Budget, Meter};
use crate::error::Refused;
use crate::graph::Graph;

/// A minimal separator with the full components that certify it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeparatorReport {
    pub separator: VertexSet,
    pub full_components: Vec<VertexSet>,
    /// A nonadjacent pair separated minimally by `separator`, one vertex
    /// from each of the first two full components.
    pub endpoints: Option<(usize, usize)>,
}

/// Components of `g - s` in which every vertex of `s` has a neighbour.
pub fn full_components(g: &Graph, s: VertexSet) -> Vec<VertexSet> {
    g.components_within(g.vertices() - s)
        .into_iter()
        .filter(|&c| s.is_subset(g.neighborhood_of(c)))
        .collect()
}

/// `s` is a minimal separator iff `g - s` has at least two full components.
pub fn is_minimal_separator(g: &Graph, s: VertexSet) -> bool {
    full_components(g, s).len() >= 2
}

/// All minimal separators, sorted by size and then by bit pattern.
///
/// Generated by closing the neighbourhoods of components of `G - N[v]`
/// under `S -> N(C)` for components `C` of `G - (S + N(x))`, `x` in `S`; the
/// empty set appears exactly when `g` is disconnected.
pub fn minimal_separators(g: &Graph) -> Result<Vec<SeparatorReport>, Refused> {
    minimal_separators_with(g, &Budget::default())
}

pub fn minimal_separators_with(g: &Graph, budget: &Budget) -> Result<Vec<SeparatorReport>, Refused> {
    let mut meter = Meter::new("minimal separators", budget.search_nodes);
    let all = g.vertices();
    let mut found: BTreeSet<VertexSet> = BTreeSet::new();
    let mut queue = VecDeque::new();
    let push = |s: VertexSet, found: &mut BTreeSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
        if found.insert(s) {
            queue.push_back(s);
        }
    };
    for v in 0..g.n() {
        for c in g.components_within(all - g.closed_neighbors(v)) {
            meter.tick()?;
            push(g.neighborhood_of(c), &mut found, &mut queue);
        }
    }
    while let Some(s) = queue.pop_front() {
        for x in s {
            for c in g.components_within(all - s - g.neighbors(x)) {
                meter.tick()?;
                push(g.neighborhood_of(c), &mut found, &mut queue);
            }
        }
    }
    let mut out: Vec<SeparatorReport> = found
        .into_iter()
        .filter_map(|s| {
            let full = full_components(g, s);
            (full.len() >= 2).then(|| SeparatorReport {
                separator: s,
                endpoints: Some((full[0].first().unwrap(), full[1].first().unwrap())),
                full_components: full,
            })
        })
        .collect();
    out.sort_by_key(|r| (r.separator.len(), r.separator));
    Ok(out)
}
