//! Injective (induced) subgraph embeddings by backtracking.

use crate::bitset::VertexSet;
use crate::budget::Meter;
use crate::error::Refused;
use crate::graph::Graph;

/// `map[u]` is the host vertex of pattern vertex `u`.
pub(crate) fn find_embedding(
    h: &Graph,
    g: &Graph,
    induced: bool,
    meter: &mut Meter,
) -> Result<Option<Vec<usize>>, Refused> {
    if h.n() > g.n() || h.edge_count() > g.edge_count() {
        return Ok(None);
    }
    let order = connectivity_order(h);
    let mut map = vec![usize::MAX; h.n()];
    let found = extend(h, g, induced, &order, 0, &mut map, VertexSet::EMPTY, meter)?;
    Ok(found.then_some(map))
}

/// Max-degree start, then most already-placed neighbours, then degree.
pub(crate) fn connectivity_order(h: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(h.n());
    let mut placed = VertexSet::EMPTY;
    while order.len() < h.n() {
        let v = (h.vertices() - placed)
            .iter()
            .max_by_key(|&v| ((h.neighbors(v) & placed).len(), h.degree(v), usize::MAX - v))
            .unwrap();
        order.push(v);
        placed.insert(v);
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    h: &Graph,
    g: &Graph,
    induced: bool,
    order: &[usize],
    i: usize,
    map: &mut [usize],
    used: VertexSet,
    meter: &mut Meter,
) -> Result<bool, Refused> {
    if i == order.len() {
        return Ok(true);
    }
    meter.tick()?;
    let u = order[i];
    let mut cand = g.vertices() - used;
    for &w in &order[..i] {
        if h.has_edge(u, w) {
            cand &= g.neighbors(map[w]);
        } else if induced {
            cand -= g.neighbors(map[w]);
        }
    }
    for c in cand {
        if g.degree(c) < h.degree(u) {
            continue;
        }
        map[u] = c;
        if extend(h, g, induced, order, i + 1, map, used.with(c), meter)? {
            return Ok(true);
        }
    }
    map[u] = usize::MAX;
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path};

    fn run(h: &Graph, g: &Graph, induced: bool) -> Option<Vec<usize>> {
        find_embedding(h, g, induced, &mut Meter::new("t", u64::MAX)).unwrap()
    }

    #[test]
    fn examples() {
        assert!(run(&cycle(4).unwrap(), &complete_bipartite(2, 3), true).is_some());
        assert!(run(&path(3), &complete(3), false).is_some());
        assert!(run(&path(3), &complete(3), true).is_none());
        assert!(run(&complete(3), &cycle(5).unwrap(), false).is_none());
        assert_eq!(run(&Graph::new(0), &Graph::new(0), true), Some(vec![]));
    }
}
