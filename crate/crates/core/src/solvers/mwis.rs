//! Maximum weight independent set: the level dynamic program for
//! `K_{1,q}`-induced-minor-free graphs, a dynamic program over tree
//! decompositions, and a branch-and-bound oracle.

use std::collections::BTreeMap;

use serde::Serialize;

use super::nice::{NiceKind, NiceTreeDecomposition};
use crate::bitset::VertexSet;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Refused, Result};
use crate::graph::WeightedGraph;
use crate::invariants::TreeDecomposition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MwisSolution {
    pub weight: u64,
    pub set: VertexSet,
}

/// One row of a level table: the best weight of an independent set inside
/// levels `0..=i` meeting level `i` exactly in `subset`, and the subset of
/// level `i - 1` it extends.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerEntry {
    pub subset: VertexSet,
    pub best_weight: u64,
    pub back: Option<VertexSet>,
}

/// Level tables of one connected component, rooted at its minimum vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MwisLayerTable {
    pub levels: Vec<VertexSet>,
    /// Rows per level in lexicographic order of their sorted subsets.
    pub rows: Vec<Vec<LayerEntry>>,
}

impl MwisLayerTable {
    fn best(&self) -> MwisSolution {
        let last = self.rows.last().expect("a component has a root level");
        let mut at = last.iter().enumerate().fold(0, |b, (i, e)| {
            if e.best_weight > last[b].best_weight {
                i
            } else {
                b
            }
        });
        let weight = last[at].best_weight;
        let mut set = VertexSet::EMPTY;
        for level in (0..self.rows.len()).rev() {
            let e = &self.rows[level][at];
            set |= e.subset;
            if let Some(t) = e.back {
                at = self.rows[level - 1].iter().position(|r| r.subset == t).unwrap();
            }
        }
        MwisSolution { weight, set }
    }
}

/// Exact MWIS when every BFS level of every component has independence
/// number below `q`, which holds in `K_{1,q}`-induced-minor-free graphs.
///
/// A level with an independent `q`-set is reported as
/// [`Error::InducedStar`]: together with the component of the root in the
/// rest of the graph it is an induced `K_{1,q}` minor.
pub fn mwis_k1q(wg: &WeightedGraph, q: usize) -> Result<MwisSolution> {
    let tables = mwis_k1q_tables(wg, q)?;
    let mut out = MwisSolution {
        weight: 0,
        set: VertexSet::EMPTY,
    };
    for t in &tables {
        let s = t.best();
        out.weight += s.weight;
        out.set |= s.set;
    }
    Ok(out)
}

/// The level tables of [`mwis_k1q`], one per component in order of minimum
/// vertex.
pub fn mwis_k1q_tables(wg: &WeightedGraph, q: usize) -> Result<Vec<MwisLayerTable>> {
    if q < 2 {
        return Err(Error::arg(format!("mwis_k1q needs q >= 2, got {q}")));
    }
    let g = &wg.graph;
    let mut tables = Vec::new();
    for comp in g.components() {
        let root = comp.first().unwrap();
        let levels = g.bfs_levels_within(root, comp);
        let mut rows: Vec<Vec<LayerEntry>> = Vec::with_capacity(levels.len());
        for (i, &level) in levels.iter().enumerate() {
            let mut subsets = Vec::new();
            let cap = if i == 0 { level.len() } else { q };
            independent_subsets(g, level, cap, VertexSet::EMPTY, &mut subsets);
            if let Some(&big) = subsets.iter().find(|s| i > 0 && s.len() == q) {
                let component = g.component_within(root, g.vertices() - big);
                return Err(Error::InducedStar {
                    q,
                    independent: big.to_vec(),
                    component: component.to_vec(),
                });
            }
            let row = subsets
                .into_iter()
                .map(|s| {
                    let own = wg.weight_of(s);
                    if i == 0 {
                        return LayerEntry {
                            subset: s,
                            best_weight: own,
                            back: None,
                        };
                    }
                    let reach = g.neighborhood_of(s);
                    let mut best: Option<&LayerEntry> = None;
                    for t in &rows[i - 1] {
                        if !t.subset.intersects(reach) && best.is_none_or(|b| t.best_weight > b.best_weight) {
                            best = Some(t);
                        }
                    }
                    let t = best.expect("the empty subset is always compatible");
                    LayerEntry {
                        subset: s,
                        best_weight: own + t.best_weight,
                        back: Some(t.subset),
                    }
                })
                .collect();
            rows.push(row);
        }
        tables.push(MwisLayerTable { levels, rows });
    }
    Ok(tables)
}

/// Independent subsets of `within` with at most `cap` vertices, in
/// lexicographic order of their sorted vertex lists.
fn independent_subsets(
    g: &crate::graph::Graph,
    within: VertexSet,
    cap: usize,
    chosen: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    out.push(chosen);
    if chosen.len() == cap {
        return;
    }
    for v in within {
        independent_subsets(g, within.above(v) - g.neighbors(v), cap, chosen.with(v), out);
    }
}

pub const MWIS_BRUTE_MAX_ORDER: usize = 40;

/// Exhaustive MWIS by include-first branching with a remaining-weight bound.
/// Among optimal sets the first in include-first order is returned.
pub fn mwis_brute(wg: &WeightedGraph, budget: &Budget) -> Result<MwisSolution, Refused> {
    if wg.graph.n() > MWIS_BRUTE_MAX_ORDER {
        return Err(Refused {
            what: "brute-force MWIS order",
            limit: MWIS_BRUTE_MAX_ORDER as u64,
        });
    }
    let mut meter = Meter::new("brute-force MWIS", budget.search_nodes);
    let mut best = MwisSolution {
        weight: 0,
        set: VertexSet::EMPTY,
    };
    let mut found = false;
    branch(wg, wg.graph.vertices(), VertexSet::EMPTY, 0, &mut best, &mut found, &mut meter)?;
    Ok(best)
}

fn branch(
    wg: &WeightedGraph,
    cand: VertexSet,
    chosen: VertexSet,
    weight: u64,
    best: &mut MwisSolution,
    found: &mut bool,
    meter: &mut Meter,
) -> Result<(), Refused> {
    meter.tick()?;
    let Some(v) = cand.first() else {
        if !*found || weight > best.weight {
            *best = MwisSolution { weight, set: chosen };
            *found = true;
        }
        return Ok(());
    };
    if *found && weight + wg.weight_of(cand) <= best.weight {
        return Ok(());
    }
    let rest = cand.without(v);
    branch(wg, rest - wg.graph.neighbors(v), chosen.with(v), weight + wg.weights[v], best, found, meter)?;
    branch(wg, rest, chosen, weight, best, found, meter)
}

/// Exact MWIS by dynamic programming over a nice form of `td`.
pub fn mwis_on_td(wg: &WeightedGraph, td: &TreeDecomposition) -> Result<MwisSolution> {
    let g = &wg.graph;
    let nice = NiceTreeDecomposition::from_td(g, td)?;
    // state: independent subset of the bag -> (weight, best set below)
    let mut tables: Vec<BTreeMap<VertexSet, (u64, VertexSet)>> = Vec::with_capacity(nice.nodes.len());
    for node in &nice.nodes {
        let mut t = BTreeMap::new();
        match node.kind {
            NiceKind::Leaf => {
                t.insert(VertexSet::EMPTY, (0, VertexSet::EMPTY));
            }
            NiceKind::Introduce { vertex, child } => {
                for (&s, &(w, set)) in &tables[child] {
                    t.insert(s, (w, set));
                    if !g.neighbors(vertex).intersects(s) {
                        t.insert(s.with(vertex), (w + wg.weights[vertex], set.with(vertex)));
                    }
                }
            }
            NiceKind::Forget { vertex, child } => {
                for (&s, &(w, set)) in &tables[child] {
                    let key = s.without(vertex);
                    let e = t.entry(key).or_insert((w, set));
                    if w > e.0 {
                        *e = (w, set);
                    }
                }
            }
            NiceKind::Join { left, right } => {
                for (&s, &(wl, sl)) in &tables[left] {
                    if let Some(&(wr, sr)) = tables[right].get(&s) {
                        t.insert(s, (wl + wr - wg.weight_of(s), sl | sr));
                    }
                }
            }
        }
        tables.push(t);
    }
    let (weight, set) = tables[nice.root()][&VertexSet::EMPTY];
    Ok(MwisSolution { weight, set })
}
