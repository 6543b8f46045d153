use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Clique number with the lexicographically smallest maximum clique.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let omega = max_clique_in(g, g.vertices(), usize::MAX);
    let witness = smallest_clique_of_size(g, omega).expect("a clique of size omega exists");
    (omega, witness)
}

/// Independence number with the lexicographically smallest maximum
/// independent set.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    clique_number(&g.complement())
}

/// Lexicographically smallest clique of exactly `k` vertices, if any.
pub fn smallest_clique_of_size(g: &Graph, k: usize) -> Option<VertexSet> {
    let mut cand = g.vertices();
    let mut chosen = VertexSet::EMPTY;
    for need in (1..=k).rev() {
        let pick = cand
            .iter()
            .find(|&v| need == 1 || max_clique_in(g, cand & g.neighbors(v), need - 1) >= need - 1)?;
        chosen.insert(pick);
        cand = cand.above(pick) & g.neighbors(pick);
    }
    Some(chosen)
}

/// Size of a maximum clique inside `p`, stopping early once `stop` is reached.
pub(crate) fn max_clique_in(g: &Graph, p: VertexSet, stop: usize) -> usize {
    let mut best = 0;
    expand(g, 0, p, &mut best, stop);
    best
}

fn expand(g: &Graph, size: usize, mut p: VertexSet, best: &mut usize, stop: usize) {
    if p.is_empty() {
        *best = (*best).max(size);
        return;
    }
    let (order, colors) = color_sort(g, p);
    for i in (0..order.len()).rev() {
        if size + colors[i] <= *best || *best >= stop {
            return;
        }
        let v = order[i];
        expand(g, size + 1, p & g.neighbors(v), best, stop);
        p.remove(v);
    }
}

/// Greedy colouring of `p`; vertices come out sorted by colour, and
/// `colors[i]` bounds the clique size among `order[..=i]`.
fn color_sort(g: &Graph, p: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(p.len());
    let mut colors = Vec::with_capacity(p.len());
    let mut uncolored = p;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut q = uncolored;
        while let Some(v) = q.first() {
            order.push(v);
            colors.push(color);
            q -= g.closed_neighbors(v);
            uncolored.remove(v);
        }
    }
    (order, colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_bipartite, cycle, elementary_wall, random_graph};

    fn brute_omega(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .map(|m| VertexSet::from_bits(m as u128))
            .filter(|&s| g.is_clique(s))
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn examples() {
        assert_eq!(clique_number(&complete(5)).0, 5);
        assert_eq!(clique_number(&cycle(5).unwrap()).0, 2);
        assert_eq!(independence_number(&Graph::new(6)).0, 6);
        assert_eq!(independence_number(&complete_bipartite(3, 3)).0, 3);
        assert_eq!(clique_number(&Graph::new(0)), (0, VertexSet::EMPTY));
    }

    #[test]
    fn wall_is_triangle_free() {
        let w = elementary_wall(3, 3).unwrap();
        let verts = w.vertices().to_vec();
        for (i, &a) in verts.iter().enumerate() {
            for (j, &b) in verts.iter().enumerate().skip(i + 1) {
                for &c in &verts[j + 1..] {
                    assert!(!(w.has_edge(a, b) && w.has_edge(b, c) && w.has_edge(a, c)));
                }
            }
        }
        assert_eq!(clique_number(&w).0, 2);
    }

    #[test]
    fn agrees_with_brute_force_and_is_lex_smallest() {
        for seed in 0..300u64 {
            let n = (seed % 12) as usize;
            let g = random_graph(n, 0.5, seed).unwrap();
            let (w, wit) = clique_number(&g);
            assert_eq!(w, brute_omega(&g));
            assert!(g.is_clique(wit) && wit.len() == w);
            let lex = (0u32..1 << n)
                .map(|m| VertexSet::from_bits(m as u128))
                .filter(|&s| s.len() == w && g.is_clique(s))
                .min_by_key(|s| s.to_vec())
                .unwrap();
            assert_eq!(wit, lex);
            let (a, ind) = independence_number(&g);
            assert_eq!(a, brute_omega(&g.complement()));
            assert!(g.is_independent(ind));
        }
    }
}
