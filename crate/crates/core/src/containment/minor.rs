//! Exhaustive (induced) minor-model search.
//!
//! Pattern vertices are placed one at a time; each receives a connected bag
//! grown from its minimum vertex inside the region still available to it.
//! After every placement the partial model is rejected when
//!
//! - some placed bag has fewer free neighbours than unplaced pattern
//!   neighbours,
//! - some unplaced pattern vertex has no component of its available region
//!   touching all of its placed neighbours' bags, or
//! - fewer free host vertices remain than unplaced pattern vertices.
//!
//! Twins in the pattern are interchangeable, so their bags are placed in
//! increasing order of minimum vertex.

use crate::bitset::VertexSet;
use crate::budget::Meter;
use crate::error::Refused;
use crate::graph::Graph;

use super::embed::connectivity_order;

pub(crate) fn find_model(
    h: &Graph,
    g: &Graph,
    induced: bool,
    meter: &mut Meter,
) -> Result<Option<Vec<VertexSet>>, Refused> {
    if h.n() == 0 {
        return Ok(Some(Vec::new()));
    }
    if h.n() > g.n() || (!induced && h.edge_count() > g.edge_count()) {
        return Ok(None);
    }
    let two_connected = h.n() >= 3 && h.is_connected() && h.blocks().len() == 1;
    if !induced && h.min_degree() >= 3 && two_connected {
        for (block, groups) in reduce_host(g, h) {
            if let Some(bags) = search_regions(h, &block, false, meter)? {
                return Ok(Some(
                    bags.iter()
                        .map(|b| b.iter().fold(VertexSet::EMPTY, |acc, v| acc | groups[v]))
                        .collect(),
                ));
            }
        }
        return Ok(None);
    }
    search_regions(h, g, induced, meter)
}

fn search_regions(
    h: &Graph,
    g: &Graph,
    induced: bool,
    meter: &mut Meter,
) -> Result<Option<Vec<VertexSet>>, Refused> {
    let regions = if h.is_connected() {
        g.components()
            .into_iter()
            .filter(|c| c.len() >= h.n() && (induced || g.edges_within(*c) >= h.edge_count()))
            .collect()
    } else {
        vec![g.vertices()]
    };
    for region in regions {
        let mut s = Search::new(h, g, induced, region, meter);
        if s.place(0)? {
            return Ok(Some(s.bags));
        }
    }
    Ok(None)
}

/// Minor-preserving reductions for 2-connected patterns of minimum degree
/// at least 3: drop vertices of degree at most 1, suppress degree-2
/// vertices, and split into blocks. Returns each block with the set of
/// original vertices every block vertex stands for.
fn reduce_host(g: &Graph, h: &Graph) -> Vec<(Graph, Vec<VertexSet>)> {
    let mut w = g.clone();
    let mut alive = w.vertices();
    let mut groups: Vec<VertexSet> = (0..g.n()).map(VertexSet::singleton).collect();
    loop {
        let mut changed = false;
        for v in alive {
            let nb = w.neighbors(v) & alive;
            match nb.len() {
                0 | 1 => {
                    alive.remove(v);
                    changed = true;
                }
                2 => {
                    let x = nb.first().unwrap();
                    let y = nb.last().unwrap();
                    if !w.has_edge(x, y) {
                        w.add_edge(x, y);
                        groups[x] = groups[x] | groups[v];
                    }
                    alive.remove(v);
                    changed = true;
                }
                _ => {}
            }
        }
        if !changed {
            break;
        }
    }
    let core = w.induced_subgraph(alive).expect("alive within range");
    let index = alive.to_vec();
    core.blocks()
        .into_iter()
        .filter(|b| b.len() >= h.n() && core.edges_within(*b) >= h.edge_count())
        .map(|b| {
            let block = core.induced_subgraph(b).expect("block within range");
            let map = b.iter().map(|i| groups[index[i]]).collect();
            (block, map)
        })
        .collect()
}

struct Search<'a, 'm> {
    h: &'a Graph,
    g: &'a Graph,
    induced: bool,
    region: VertexSet,
    order: Vec<usize>,
    placed: VertexSet,
    twin_prev: Vec<Option<usize>>,
    bags: Vec<VertexSet>,
    meter: &'m mut Meter,
}

impl<'a, 'm> Search<'a, 'm> {
    fn new(h: &'a Graph, g: &'a Graph, induced: bool, region: VertexSet, meter: &'m mut Meter) -> Self {
        let order = connectivity_order(h);
        let mut twin_prev = vec![None; h.n()];
        for (i, &u) in order.iter().enumerate() {
            twin_prev[u] = order[..i]
                .iter()
                .rev()
                .copied()
                .find(|&w| h.neighbors(u).without(w) == h.neighbors(w).without(u));
        }
        Search {
            h,
            g,
            induced,
            region,
            order,
            placed: VertexSet::EMPTY,
            twin_prev,
            bags: vec![VertexSet::EMPTY; h.n()],
            meter,
        }
    }

    fn used(&self) -> VertexSet {
        self.placed.iter().fold(VertexSet::EMPTY, |acc, j| acc | self.bags[j])
    }

    /// Host vertices pattern vertex `u` may still use.
    fn available_for(&self, u: usize, used: VertexSet) -> VertexSet {
        let mut avail = self.region - used;
        if self.induced {
            for j in self.placed - self.h.neighbors(u) {
                avail -= self.g.neighborhood_of(self.bags[j]);
            }
        }
        avail
    }

    fn place(&mut self, i: usize) -> Result<bool, Refused> {
        if i == self.order.len() {
            return Ok(true);
        }
        self.meter.tick()?;
        let u = self.order[i];
        let used = self.used();
        let avail = self.available_for(u, used);
        let targets: Vec<VertexSet> = (self.placed & self.h.neighbors(u))
            .iter()
            .map(|j| self.g.neighborhood_of(self.bags[j]))
            .collect();
        let remaining = self.order.len() - i - 1;
        let max_size = (self.region - used).len().saturating_sub(remaining);
        let min_root = self.twin_prev[u].map(|t| self.bags[t].first().unwrap());
        for r in avail {
            if min_root.is_some_and(|m| r <= m) {
                continue;
            }
            let allowed = avail - VertexSet::full(r);
            let start = VertexSet::singleton(r);
            let ext = self.g.neighbors(r) & allowed;
            if self.grow(i, u, start, ext, start, allowed, &targets, max_size)? {
                return Ok(true);
            }
        }
        Ok(false)
    }

    /// Enumerates every connected `bag` extension inside `allowed` avoiding
    /// `ban`, each exactly once, and recurses on those touching all targets.
    #[allow(clippy::too_many_arguments)]
    fn grow(
        &mut self,
        i: usize,
        u: usize,
        bag: VertexSet,
        ext: VertexSet,
        ban: VertexSet,
        allowed: VertexSet,
        targets: &[VertexSet],
        max_size: usize,
    ) -> Result<bool, Refused> {
        self.meter.tick()?;
        if targets.iter().all(|t| t.intersects(bag)) {
            self.bags[u] = bag;
            self.placed.insert(u);
            if self.feasible() && self.place(i + 1)? {
                return Ok(true);
            }
            self.placed.remove(u);
            self.bags[u] = VertexSet::EMPTY;
        }
        if bag.len() >= max_size {
            return Ok(false);
        }
        let mut ban = ban;
        for v in ext {
            let next = bag.with(v);
            let next_ban = ban.with(v);
            let next_ext = (ext | (self.g.neighbors(v) & allowed)) - next_ban;
            if self.grow(i, u, next, next_ext, next_ban, allowed, targets, max_size)? {
                return Ok(true);
            }
            ban.insert(v);
        }
        Ok(false)
    }

    fn feasible(&self) -> bool {
        let used = self.used();
        let free = self.region - used;
        let unplaced = self.h.vertices() - self.placed;
        if free.len() < unplaced.len() {
            return false;
        }
        for j in self.placed {
            let need = (self.h.neighbors(j) & unplaced).len();
            if need > 0 && (self.g.neighborhood_of(self.bags[j]) & free).len() < need {
                return false;
            }
        }
        for w in unplaced {
            let region = self.available_for(w, used);
            let nbrs = self.placed & self.h.neighbors(w);
            if nbrs.is_empty() {
                if region.is_empty() {
                    return false;
                }
                continue;
            }
            let touch: Vec<VertexSet> = nbrs.iter().map(|j| self.g.neighborhood_of(self.bags[j])).collect();
            let mut seeds = region & touch[0];
            let mut ok = false;
            while let Some(s) = seeds.first() {
                let comp = self.g.component_within(s, region);
                if touch.iter().all(|t| t.intersects(comp)) {
                    ok = true;
                    break;
                }
                seeds -= comp;
            }
            if !ok {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path, random_graph};

    fn run(h: &Graph, g: &Graph, induced: bool) -> Option<Vec<VertexSet>> {
        find_model(h, g, induced, &mut Meter::new("t", u64::MAX)).unwrap()
    }

    #[test]
    fn c4_in_c6_contracts_two_edges() {
        let bags = run(&cycle(4).unwrap(), &cycle(6).unwrap(), true).unwrap();
        let mut sizes: Vec<usize> = bags.iter().map(|b| b.len()).collect();
        sizes.sort();
        assert!(sizes == vec![1, 1, 2, 2] || sizes == vec![1, 1, 1, 3]);
        let k5 = run(&complete(5), &complete(5), true).unwrap();
        assert!(k5.iter().all(|b| b.len() == 1));
        assert!(run(&complete_bipartite(1, 3), &path(5), true).is_none());
    }

    #[test]
    fn reductions_keep_answers() {
        // K4 minors in random sparse graphs, with and without host reduction
        for seed in 0..60u64 {
            let g = random_graph(9, 0.3, seed).unwrap();
            let k4 = complete(4);
            let reduced = run(&k4, &g, false).is_some();
            let mut m = Meter::new("t", u64::MAX);
            let plain = search_regions(&k4, &g, false, &mut m).unwrap().is_some();
            assert_eq!(reduced, plain, "{g:?}");
        }
    }
}
