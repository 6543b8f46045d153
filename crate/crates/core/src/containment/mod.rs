//! Exact testers for the six containment relations.
//!
//! Every positive answer carries a witness that can be rechecked with
//! [`Witness::validate`] independently of the search that produced it. A
//! search that exhausts its budget returns [`Refused`], never `None`.

mod embed;
mod minor;
mod topological;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitset::VertexSet;
use crate::budget::{Budget, Meter};
use crate::error::{Error, Refused};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Subgraph,
    InducedSubgraph,
    TopologicalMinor,
    InducedTopologicalMinor,
    Minor,
    InducedMinor,
}

impl Relation {
    pub const ALL: [Relation; 6] = [
        Relation::Subgraph,
        Relation::InducedSubgraph,
        Relation::TopologicalMinor,
        Relation::InducedTopologicalMinor,
        Relation::Minor,
        Relation::InducedMinor,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Relation::Subgraph => "subgraph",
            Relation::InducedSubgraph => "induced_subgraph",
            Relation::TopologicalMinor => "topological_minor",
            Relation::InducedTopologicalMinor => "induced_topological_minor",
            Relation::Minor => "minor",
            Relation::InducedMinor => "induced_minor",
        }
    }

    pub fn is_induced(self) -> bool {
        matches!(
            self,
            Relation::InducedSubgraph | Relation::InducedTopologicalMinor | Relation::InducedMinor
        )
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Relation::ALL
            .into_iter()
            .find(|r| r.name() == key)
            .or(match key.as_str() {
                "s" => Some(Relation::Subgraph),
                "is" => Some(Relation::InducedSubgraph),
                "tm" => Some(Relation::TopologicalMinor),
                "itm" => Some(Relation::InducedTopologicalMinor),
                "m" => Some(Relation::Minor),
                "im" => Some(Relation::InducedMinor),
                _ => None,
            })
            .ok_or_else(|| Error::Argument(format!("unknown relation {s:?}")))
    }
}

/// Bags of a (possibly induced) minor model of `pattern`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    pub pattern: Graph,
    pub bags: Vec<VertexSet>,
    pub induced: bool,
}

impl MinorModel {
    pub fn validate(&self, g: &Graph) -> Result<(), String> {
        let h = &self.pattern;
        if self.bags.len() != h.n() {
            return Err(format!("{} bags for {} pattern vertices", self.bags.len(), h.n()));
        }
        let mut seen = VertexSet::EMPTY;
        for (u, &b) in self.bags.iter().enumerate() {
            if b.is_empty() {
                return Err(format!("bag {u} is empty"));
            }
            if !b.is_subset(g.vertices()) {
                return Err(format!("bag {u} leaves the host"));
            }
            if b.intersects(seen) {
                return Err(format!("bag {u} overlaps an earlier bag"));
            }
            if !g.is_connected_set(b) {
                return Err(format!("bag {u} is not connected"));
            }
            seen |= b;
        }
        for u in 0..h.n() {
            for v in u + 1..h.n() {
                let touching = g.neighborhood_of(self.bags[u]).intersects(self.bags[v]);
                if h.has_edge(u, v) && !touching {
                    return Err(format!("no host edge between bags {u} and {v}"));
                }
                if self.induced && !h.has_edge(u, v) && touching {
                    return Err(format!("bags {u} and {v} touch but {u}{v} is not a pattern edge"));
                }
            }
        }
        Ok(())
    }
}

/// Branch vertices plus one host path per pattern edge (in
/// [`Graph::edges`] order), each running from `branch[a]` to `branch[b]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubdivisionModel {
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
    pub induced: bool,
}

impl SubdivisionModel {
    pub fn validate(&self, h: &Graph, g: &Graph) -> Result<(), String> {
        if self.branch.len() != h.n() {
            return Err("wrong number of branch vertices".into());
        }
        let mut used = VertexSet::EMPTY;
        for &b in &self.branch {
            if b >= g.n() || used.contains(b) {
                return Err(format!("branch vertex {b} repeated or out of range"));
            }
            used.insert(b);
        }
        let edges = h.edges();
        if self.paths.len() != edges.len() {
            return Err("wrong number of paths".into());
        }
        let mut path_edges = Graph::new(g.n());
        for (&(a, b), p) in edges.iter().zip(&self.paths) {
            if p.len() < 2 || p[0] != self.branch[a] || *p.last().unwrap() != self.branch[b] {
                return Err(format!("path for {a}{b} has wrong endpoints"));
            }
            for w in p.windows(2) {
                if w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1]) {
                    return Err(format!("path for {a}{b} uses a non-edge"));
                }
                path_edges.add_edge(w[0], w[1]);
            }
            for &x in &p[1..p.len() - 1] {
                if used.contains(x) {
                    return Err(format!("path for {a}{b} reuses vertex {x}"));
                }
                used.insert(x);
            }
        }
        if self.induced {
            for u in used {
                if g.neighbors(u) & used != path_edges.neighbors(u) {
                    return Err(format!("vertex {u} has a chord inside the subdivision"));
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `map[u]` is the host image of pattern vertex `u`.
    Embedding { map: Vec<usize> },
    Subdivision(SubdivisionModel),
    Minor(MinorModel),
}

impl Witness {
    pub fn validate(&self, h: &Graph, g: &Graph, rel: Relation) -> Result<(), String> {
        match (self, rel) {
            (Witness::Embedding { map }, Relation::Subgraph | Relation::InducedSubgraph) => {
                if map.len() != h.n() {
                    return Err("map has the wrong length".into());
                }
                let image: VertexSet = map.iter().collect();
                if image.len() != h.n() || map.iter().any(|&x| x >= g.n()) {
                    return Err("map is not injective into the host".into());
                }
                for u in 0..h.n() {
                    for v in u + 1..h.n() {
                        let e = g.has_edge(map[u], map[v]);
                        if h.has_edge(u, v) && !e {
                            return Err(format!("edge {u}{v} not mapped to an edge"));
                        }
                        if rel.is_induced() && !h.has_edge(u, v) && e {
                            return Err(format!("non-edge {u}{v} mapped to an edge"));
                        }
                    }
                }
                Ok(())
            }
            (Witness::Subdivision(m), Relation::TopologicalMinor | Relation::InducedTopologicalMinor) => {
                if m.induced != rel.is_induced() {
                    return Err("induced flag does not match the relation".into());
                }
                m.validate(h, g)
            }
            (Witness::Minor(m), Relation::Minor | Relation::InducedMinor) => {
                if m.induced != rel.is_induced() || m.pattern != *h {
                    return Err("model does not match the relation or pattern".into());
                }
                m.validate(g)
            }
            _ => Err(format!("witness kind does not fit relation {rel}")),
        }
    }
}

/// Whether `h` is contained in `g` under `rel`, with a witness.
pub fn contains(h: &Graph, g: &Graph, rel: Relation) -> Result<Option<Witness>, Refused> {
    contains_with(h, g, rel, &Budget::default())
}

pub fn contains_with(h: &Graph, g: &Graph, rel: Relation, budget: &Budget) -> Result<Option<Witness>, Refused> {
    let mut meter = Meter::new(rel.name(), budget.search_nodes);
    let out = match rel {
        Relation::Subgraph | Relation::InducedSubgraph => {
            embed::find_embedding(h, g, rel.is_induced(), &mut meter)?.map(|map| Witness::Embedding { map })
        }
        Relation::TopologicalMinor | Relation::InducedTopologicalMinor => {
            topological::find_subdivision(h, g, rel.is_induced(), &mut meter)?.map(Witness::Subdivision)
        }
        Relation::Minor | Relation::InducedMinor => {
            minor::find_model(h, g, rel.is_induced(), &mut meter)?.map(|bags| {
                Witness::Minor(MinorModel {
                    pattern: h.clone(),
                    bags,
                    induced: rel.is_induced(),
                })
            })
        }
    };
    debug_assert!(out.as_ref().is_none_or(|w| w.validate(h, g, rel).is_ok()));
    Ok(out)
}

pub fn find_induced_minor_model(h: &Graph, g: &Graph) -> Result<Option<MinorModel>, Refused> {
    find_minor_model_with(h, g, true, &Budget::default())
}

pub fn find_minor_model_with(
    h: &Graph,
    g: &Graph,
    induced: bool,
    budget: &Budget,
) -> Result<Option<MinorModel>, Refused> {
    let mut meter = Meter::new(if induced { "induced minor" } else { "minor" }, budget.search_nodes);
    Ok(minor::find_model(h, g, induced, &mut meter)?.map(|bags| MinorModel {
        pattern: h.clone(),
        bags,
        induced,
    }))
}

pub fn contains_topological(h: &Graph, g: &Graph, induced: bool) -> Result<Option<SubdivisionModel>, Refused> {
    contains_topological_with(h, g, induced, &Budget::default())
}

pub fn contains_topological_with(
    h: &Graph,
    g: &Graph,
    induced: bool,
    budget: &Budget,
) -> Result<Option<SubdivisionModel>, Refused> {
    let what = if induced { "induced topological minor" } else { "topological minor" };
    let mut meter = Meter::new(what, budget.search_nodes);
    topological::find_subdivision(h, g, induced, &mut meter)
}

/// All six answers for one pair, plus every violated implication.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImplicationReport {
    pub results: Vec<(Relation, bool)>,
    pub violations: Vec<String>,
}

impl ImplicationReport {
    pub fn holds(&self, rel: Relation) -> bool {
        self.results.iter().any(|&(r, b)| r == rel && b)
    }
}

/// `stronger => weaker` pairs between the six relations.
pub const IMPLICATIONS: [(Relation, Relation); 7] = [
    (Relation::Subgraph, Relation::TopologicalMinor),
    (Relation::TopologicalMinor, Relation::Minor),
    (Relation::InducedSubgraph, Relation::InducedTopologicalMinor),
    (Relation::InducedTopologicalMinor, Relation::InducedMinor),
    (Relation::InducedSubgraph, Relation::Subgraph),
    (Relation::InducedTopologicalMinor, Relation::TopologicalMinor),
    (Relation::InducedMinor, Relation::Minor),
];

pub fn relation_implication_check(h: &Graph, g: &Graph) -> Result<ImplicationReport, Refused> {
    let mut results = Vec::with_capacity(6);
    let mut violations = Vec::new();
    for rel in Relation::ALL {
        let w = contains(h, g, rel)?;
        if let Some(w) = &w {
            if let Err(e) = w.validate(h, g, rel) {
                violations.push(format!("{rel} witness invalid: {e}"));
            }
        }
        results.push((rel, w.is_some()));
    }
    let report = ImplicationReport { results, violations };
    let mut violations = report.violations.clone();
    for (a, b) in IMPLICATIONS {
        if report.holds(a) && !report.holds(b) {
            violations.push(format!("{a} holds but {b} does not"));
        }
    }
    Ok(ImplicationReport { violations, ..report })
}
