//! Exhaustive enumeration, labelled and up to isomorphism.

use std::collections::BTreeSet;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::exec::{par_map, Exec};
use crate::graph::{canonical_form, CanonicalForm, Graph};

/// Largest order for labelled enumeration (`2^28` graphs at `n = 8`).
pub const MAX_LABELED_ORDER: usize = 8;

/// Largest order accepted by the isomorphism-reduced enumerators. Beyond
/// `n = 9` only strongly filtered hereditary families are practical.
pub const MAX_ISO_ORDER: usize = 12;

/// Every labelled graph on `n` vertices, in order of the edge bitmask over
/// lexicographically ordered pairs.
#[derive(Clone, Debug)]
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next: u64,
    end: u64,
    connected_only: bool,
}

impl LabeledGraphs {
    pub fn connected_only(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn total(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next < self.end {
            let mask = self.next;
            self.next += 1;
            let mut g = Graph::new(self.n);
            for (i, &(u, v)) in self.pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}

pub fn enumerate_all_graphs(n: usize) -> Result<LabeledGraphs> {
    if n > MAX_LABELED_ORDER {
        return Err(Error::Unsupported(format!(
            "labelled enumeration is limited to n <= {MAX_LABELED_ORDER} (requested {n})"
        )));
    }
    let pairs = Graph::new(n).complement().edges();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next: 0,
        connected_only: false,
    })
}

/// One representative per isomorphism class for each order `0..=n_max`
/// (`levels[k]` holds order `k`), sorted by canonical form. Representatives
/// are in canonical labelling.
pub fn graphs_up_to_iso(n_max: usize, connected_only: bool) -> Result<Vec<Vec<Graph>>> {
    hereditary_graphs_up_to_iso(n_max, connected_only, |_| true)
}

/// As [`graphs_up_to_iso`], restricted to graphs satisfying `keep`.
///
/// Graphs of order `k` are generated by adding one vertex to the kept graphs
/// of order `k - 1`, so `keep` must be closed under vertex deletion. In
/// connected mode this still reaches everything because every connected
/// graph has a vertex whose removal leaves it connected.
pub fn hereditary_graphs_up_to_iso<F>(
    n_max: usize,
    connected_only: bool,
    keep: F,
) -> Result<Vec<Vec<Graph>>>
where
    F: Fn(&Graph) -> bool + Sync + Send,
{
    if n_max > MAX_ISO_ORDER {
        return Err(Error::Unsupported(format!(
            "isomorphism-reduced enumeration is limited to n <= {MAX_ISO_ORDER} (requested {n_max})"
        )));
    }
    let mut levels: Vec<Vec<Graph>> = Vec::with_capacity(n_max + 1);
    let null = Graph::new(0);
    levels.push(if !connected_only && keep(&null) { vec![null] } else { Vec::new() });
    for k in 1..=n_max {
        let parents: Vec<Graph> = if k == 1 {
            vec![Graph::new(0)]
        } else {
            levels[k - 1].clone()
        };
        let children = par_map(Exec::Parallel, &parents, |p| extensions(p, connected_only, &keep));
        let mut all: BTreeSet<CanonicalForm> = BTreeSet::new();
        for batch in children {
            all.extend(batch);
        }
        levels.push(all.into_iter().map(|c| c.to_graph()).collect());
    }
    Ok(levels)
}

fn extensions<F>(parent: &Graph, connected_only: bool, keep: &F) -> Vec<CanonicalForm>
where
    F: Fn(&Graph) -> bool,
{
    let n = parent.n();
    let mut out = BTreeSet::new();
    for bits in 0u128..(1u128 << n) {
        if connected_only && bits == 0 && n > 0 {
            continue;
        }
        let mut g = parent.clone();
        let v = g.push_vertex().expect("order bounded by MAX_ISO_ORDER");
        for u in VertexSet::from_bits(bits) {
            g.add_edge(u, v);
        }
        if keep(&g) {
            out.insert(canonical_form(&g));
        }
    }
    out.into_iter().collect()
}
