//! Canonical labelling by equitable partition refinement with
//! individualisation, taking the minimum leaf certificate.
//!
//! No automorphism pruning is done, so highly symmetric graphs cost more;
//! a partition whose cells are pairwise homogeneous (every cell pair complete
//! or empty) is treated as a leaf, which keeps edgeless, complete and
//! complete multipartite graphs cheap.

use super::Graph;
use crate::bitset::VertexSet;

/// Isomorphism-invariant certificate: the adjacency rows of the canonically
/// relabelled graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u128>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    /// The canonical representative of the isomorphism class.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for (u, &row) in self.rows.iter().enumerate() {
            for v in VertexSet::from_bits(row).above(u) {
                g.add_edge(u, v);
            }
        }
        g
    }
}

/// `perm[v]` is the canonical index of vertex `v`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return Vec::new();
    }
    let mut cells = vec![g.vertices()];
    refine(g, &mut cells);
    let mut best: Option<(Vec<u128>, Vec<usize>)> = None;
    search(g, cells, &mut best);
    let (_, order) = best.expect("search visits at least one leaf");
    let mut perm = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    perm
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let perm = canonical_labeling(g);
    let mut order = vec![0; g.n()];
    for (v, &i) in perm.iter().enumerate() {
        order[i] = v;
    }
    CanonicalForm {
        n: g.n(),
        rows: certificate(g, &order),
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da: Vec<usize> = (0..a.n()).map(|v| a.degree(v)).collect();
    let mut db: Vec<usize> = (0..b.n()).map(|v| b.degree(v)).collect();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

fn certificate(g: &Graph, order: &[usize]) -> Vec<u128> {
    let mut pos = [0usize; 128];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u128, |acc, w| acc | (1u128 << pos[w])))
        .collect()
}

fn search(g: &Graph, cells: Vec<VertexSet>, best: &mut Option<(Vec<u128>, Vec<usize>)>) {
    let target = if homogeneous(g, &cells) {
        None
    } else {
        cells.iter().position(|c| c.len() > 1)
    };
    let Some(ci) = target else {
        let order: Vec<usize> = cells.iter().flat_map(|c| c.iter()).collect();
        let cert = certificate(g, &order);
        if best.as_ref().is_none_or(|(b, _)| cert < *b) {
            *best = Some((cert, order));
        }
        return;
    };
    for v in cells[ci] {
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..ci]);
        next.push(VertexSet::singleton(v));
        next.push(cells[ci].without(v));
        next.extend_from_slice(&cells[ci + 1..]);
        refine(g, &mut next);
        search(g, next, best);
    }
}

fn homogeneous(g: &Graph, cells: &[VertexSet]) -> bool {
    cells.iter().all(|&x| {
        cells.iter().all(|&y| {
            let full = x.iter().all(|v| g.neighbors(v) & y == y.without(v));
            full || x.iter().all(|v| !g.neighbors(v).intersects(y))
        })
    })
}

/// Refines to the coarsest equitable partition finer than `cells`, splitting
/// each cell by neighbour count into the splitter, smallest count first.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter = cells[s];
            let mut next = Vec::with_capacity(cells.len() + 2);
            let mut split = false;
            for &cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut by_count: Vec<(usize, VertexSet)> = Vec::new();
                for v in cell {
                    let c = (g.neighbors(v) & splitter).len();
                    match by_count.iter_mut().find(|(k, _)| *k == c) {
                        Some((_, set)) => set.insert(v),
                        None => by_count.push((c, VertexSet::singleton(v))),
                    }
                }
                if by_count.len() > 1 {
                    split = true;
                    by_count.sort_unstable_by_key(|&(k, _)| k);
                }
                next.extend(by_count.into_iter().map(|(_, set)| set));
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, path, random_graph};
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn brute_form(g: &Graph) -> Vec<u128> {
        // minimum certificate over all n! orders
        fn rec(g: &Graph, order: &mut Vec<usize>, used: VertexSet, best: &mut Option<Vec<u128>>) {
            if order.len() == g.n() {
                let c = certificate(g, order);
                if best.as_ref().is_none_or(|b| c < *b) {
                    *best = Some(c);
                }
                return;
            }
            for v in g.vertices() - used {
                order.push(v);
                rec(g, order, used.with(v), best);
                order.pop();
            }
        }
        let mut best = None;
        rec(g, &mut Vec::new(), VertexSet::EMPTY, &mut best);
        best.unwrap_or_default()
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for seed in 0..300u64 {
            let n = 1 + (seed % 11) as usize;
            let g = random_graph(n, 0.45, seed).unwrap();
            let mut perm: Vec<usize> = (0..n).collect();
            perm.shuffle(&mut rng);
            let h = g.permuted(&perm);
            assert_eq!(canonical_form(&g), canonical_form(&h), "{g:?}");
            assert!(is_isomorphic(&g, &h));
            assert!(is_isomorphic(&g, &canonical_form(&g).to_graph()));
        }
    }

    #[test]
    fn separates_what_brute_force_separates() {
        // all labelled graphs on 5 vertices: same canonical form iff same
        // brute-force minimum certificate
        let pairs: Vec<(usize, usize)> = Graph::new(5).complement().edges();
        let mut seen = std::collections::HashMap::new();
        for mask in 0u32..(1 << pairs.len()) {
            let mut g = Graph::new(5);
            for (i, &(u, v)) in pairs.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            let ours = canonical_form(&g);
            let brute = brute_form(&g);
            if let Some(prev) = seen.insert(brute, ours.clone()) {
                assert_eq!(prev, ours);
            }
        }
        assert_eq!(seen.len(), 34);
        let distinct: std::collections::HashSet<_> = seen.values().collect();
        assert_eq!(distinct.len(), 34);
    }

    #[test]
    fn small_non_isomorphic_pairs() {
        assert!(!is_isomorphic(&path(4), &complete_bipartite(1, 3)));
        assert!(!is_isomorphic(&cycle(6).unwrap(), &complete(3).disjoint_union(&complete(3)).unwrap()));
        assert!(is_isomorphic(&cycle(4).unwrap(), &complete_bipartite(2, 2)));
        assert_eq!(canonical_form(&Graph::new(0)).n(), 0);
    }
}
