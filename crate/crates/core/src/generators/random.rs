//! Seeded random generators.
//!
//! All of them draw from `ChaCha8Rng::seed_from_u64(seed)` in a fixed order,
//! so instances are reproducible across runs and platforms.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_p(p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::arg(format!("edge probability {p} not in [0, 1]")));
    }
    Ok(())
}

/// `G(n, p)`: one `f64` draw per pair `i < j`, pairs in lexicographic order;
/// the edge is present iff the draw is below `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut g = Graph::try_new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen::<f64>() < p {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Random bipartite graph with parts `0..a` and `a..a+b`; pairs are drawn in
/// lexicographic order as in [`random_graph`].
pub fn random_bipartite(a: usize, b: usize, p: f64, seed: u64) -> Result<Graph> {
    check_p(p)?;
    let mut g = Graph::try_new(a + b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..a {
        for j in a..a + b {
            if rng.gen::<f64>() < p {
                g.add_edge(i, j);
            }
        }
    }
    Ok(g)
}

/// Chordal graph grown along a clique tree.
///
/// Vertex `v >= 1` picks a uniformly random maximal clique `K` of the graph
/// so far and a random subset of `K` of size `1..=min(|K|, max_clique - 1)`
/// as its neighbourhood. Every vertex is simplicial when added, so the
/// reverse insertion order is a perfect elimination ordering and the clique
/// number never exceeds `max_clique`.
pub fn random_chordal(n: usize, max_clique: usize, seed: u64) -> Result<Graph> {
    if n == 0 || max_clique == 0 {
        return Err(Error::arg("random_chordal needs n >= 1 and max_clique >= 1"));
    }
    let mut g = Graph::try_new(n)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cliques = vec![VertexSet::singleton(0)];
    for v in 1..n {
        let ki = rng.gen_range(0..cliques.len());
        let k = cliques[ki];
        let cap = k.len().min(max_clique - 1);
        if cap == 0 {
            cliques.push(VertexSet::singleton(v));
            continue;
        }
        let size = rng.gen_range(1..=cap);
        let mut members = k.to_vec();
        let mut chosen = VertexSet::EMPTY;
        for _ in 0..size {
            let i = rng.gen_range(0..members.len());
            chosen.insert(members.swap_remove(i));
        }
        for u in chosen {
            g.add_edge(u, v);
        }
        if chosen == k {
            cliques[ki] = k.with(v);
        } else {
            cliques.push(chosen.with(v));
        }
    }
    Ok(g)
}

/// Block-cactus graph: starting from one vertex, each of `blocks` steps picks
/// a uniformly random existing vertex and glues a new block there, of size
/// `s` uniform in `2..=max_block`; blocks with `s >= 4` are a cycle or a
/// clique with equal probability.
pub fn random_block_cactus(blocks: usize, max_block: usize, seed: u64) -> Result<Graph> {
    if max_block < 2 {
        return Err(Error::arg(format!("max_block must be >= 2, got {max_block}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(1);
    for _ in 0..blocks {
        let at = rng.gen_range(0..g.n());
        let s = rng.gen_range(2..=max_block);
        let as_cycle = s >= 4 && rng.gen_bool(0.5);
        if g.n() + s - 1 > MAX_VERTICES {
            return Err(Error::Unsupported("block cactus exceeds 128 vertices".into()));
        }
        let mut members = vec![at];
        for _ in 1..s {
            members.push(g.push_vertex()?);
        }
        if as_cycle {
            for i in 0..s {
                g.add_edge(members[i], members[(i + 1) % s]);
            }
        } else {
            for i in 0..s {
                for j in i + 1..s {
                    g.add_edge(members[i], members[j]);
                }
            }
        }
    }
    Ok(g)
}
