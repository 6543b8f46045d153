//! Subdivision search: branch vertices first, then internally disjoint
//! paths routed depth-first with neighbours closest to the target tried
//! first.
//!
//! In induced mode every vertex added to a path may see, among the vertices
//! already in the subdivision, only its path predecessor and (when it is the
//! last interior vertex) the path's target; adjacent branch vertices must be
//! joined by their direct edge.

use crate::bitset::VertexSet;
use crate::budget::Meter;
use crate::error::Refused;
use crate::graph::Graph;

use super::SubdivisionModel;

pub(crate) fn find_subdivision(
    h: &Graph,
    g: &Graph,
    induced: bool,
    meter: &mut Meter,
) -> Result<Option<SubdivisionModel>, Refused> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..h.n()).collect();
    order.sort_by_key(|&u| (usize::MAX - h.degree(u), u));
    let mut s = Search {
        h,
        g,
        induced,
        order,
        edges: h.edges(),
        branch: vec![usize::MAX; h.n()],
        paths: Vec::new(),
        meter,
    };
    if s.choose_branch(0, VertexSet::EMPTY)? {
        return Ok(Some(SubdivisionModel {
            branch: s.branch,
            paths: s.paths,
            induced,
        }));
    }
    Ok(None)
}

struct Search<'a, 'm> {
    h: &'a Graph,
    g: &'a Graph,
    induced: bool,
    order: Vec<usize>,
    edges: Vec<(usize, usize)>,
    branch: Vec<usize>,
    paths: Vec<Vec<usize>>,
    meter: &'m mut Meter,
}

impl Search<'_, '_> {
    fn choose_branch(&mut self, i: usize, used: VertexSet) -> Result<bool, Refused> {
        if i == self.order.len() {
            return self.route(0, used);
        }
        self.meter.tick()?;
        let u = self.order[i];
        for c in self.g.vertices() - used {
            if self.g.degree(c) < self.h.degree(u) {
                continue;
            }
            if self.induced {
                // adjacent branch vertices are forced to use their direct edge
                let clash = self.order[..i]
                    .iter()
                    .any(|&w| self.g.has_edge(c, self.branch[w]) && !self.h.has_edge(u, w));
                if clash {
                    continue;
                }
            }
            self.branch[u] = c;
            if self.choose_branch(i + 1, used.with(c))? {
                return Ok(true);
            }
        }
        self.branch[u] = usize::MAX;
        Ok(false)
    }

    fn route(&mut self, e: usize, used: VertexSet) -> Result<bool, Refused> {
        if e == self.edges.len() {
            return Ok(true);
        }
        self.meter.tick()?;
        let (a, b) = self.edges[e];
        let (s, t) = (self.branch[a], self.branch[b]);
        if self.g.has_edge(s, t) {
            self.paths.push(vec![s, t]);
            if self.route(e + 1, used)? {
                return Ok(true);
            }
            self.paths.pop();
            if self.induced {
                return Ok(false);
            }
        }
        let mut path = vec![s];
        if self.extend(e, t, &mut path, used)? {
            return Ok(true);
        }
        Ok(false)
    }

    /// Extends `path` (ending at an interior or source vertex) by one new
    /// interior vertex at a time until it can step onto `t`.
    fn extend(&mut self, e: usize, t: usize, path: &mut Vec<usize>, used: VertexSet) -> Result<bool, Refused> {
        self.meter.tick()?;
        let c = *path.last().unwrap();
        let free = self.g.vertices() - used;
        // vertices that can still reach t through free vertices
        let reach = self.g.component_within(t, free.with(t));
        let mut cands: Vec<usize> = (self.g.neighbors(c) & free & reach).iter().collect();
        if cands.is_empty() {
            return Ok(false);
        }
        let dist = distances_to(self.g, t, free.with(t));
        cands.sort_by_key(|&x| (dist[x], x));
        for x in cands {
            if x == t {
                continue;
            }
            let touches_t = self.g.has_edge(x, t);
            if self.induced {
                let seen = self.g.neighbors(x) & used;
                if !(seen - VertexSet::singleton(c) - VertexSet::singleton(t)).is_empty() {
                    continue;
                }
            }
            path.push(x);
            let used2 = used.with(x);
            if touches_t {
                path.push(t);
                self.paths.push(path.clone());
                if self.route(e + 1, used2)? {
                    return Ok(true);
                }
                self.paths.pop();
                path.pop();
            }
            if !(self.induced && touches_t) && self.extend(e, t, path, used2)? {
                return Ok(true);
            }
            path.pop();
        }
        Ok(false)
    }
}

fn distances_to(g: &Graph, t: usize, within: VertexSet) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[t] = 0;
    let mut frontier = VertexSet::singleton(t);
    let mut seen = frontier;
    let mut d = 0;
    while !frontier.is_empty() {
        d += 1;
        let next = (g.neighborhood_of(frontier) & within) - seen;
        for v in next {
            dist[v] = d;
        }
        seen |= next;
        frontier = next;
    }
    dist
}
