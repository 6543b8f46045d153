//! Brute-force oracles, independent of the library's searches, and
//! proptest strategies.

#![allow(dead_code)]

use proptest::prelude::*;
use twomega::Graph;

pub fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(move |bits| {
            let mut g = Graph::new(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        g.add_edge(u, v);
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

fn adj_mask(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| (0..g.n()).filter(|&w| g.has_edge(v, w)).fold(0u32, |m, w| m | 1 << w))
        .collect()
}

/// Treewidth by the subset recurrence
/// `TW(S) = min_{v in S} max(TW(S - v), |Q(S - v, v)|)`.
pub fn tw_oracle(g: &Graph) -> usize {
    let n = g.n();
    if n == 0 {
        return 0;
    }
    assert!(n <= 16);
    let adj = adj_mask(g);
    let full = (1u32 << n) - 1;
    // vertices outside s + v reachable from v through s
    let q = |s: u32, v: usize| -> u32 {
        let mut seen = 1u32 << v;
        let mut stack = vec![v];
        let mut out = 0u32;
        while let Some(x) = stack.pop() {
            let mut nb = adj[x] & !seen;
            while nb != 0 {
                let w = nb.trailing_zeros() as usize;
                nb &= nb - 1;
                seen |= 1 << w;
                if s >> w & 1 == 1 {
                    stack.push(w);
                } else {
                    out |= 1 << w;
                }
            }
        }
        out
    };
    let mut tw = vec![usize::MAX; 1 << n];
    tw[0] = 0;
    for s in 1..=full {
        let mut best = usize::MAX;
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let without = s & !(1 << v);
            best = best.min(tw[without as usize].max(q(without, v).count_ones() as usize));
        }
        tw[s as usize] = best;
    }
    tw[full as usize]
}

pub fn clique_oracle(g: &Graph) -> usize {
    let adj = adj_mask(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == s & !(1 << v)))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn independent_sets(g: &Graph) -> Vec<u32> {
    let adj = adj_mask(g);
    (0u32..1 << g.n())
        .filter(|&s| (0..g.n()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .collect()
}

pub fn mwis_oracle(g: &Graph, w: &[u64]) -> u64 {
    independent_sets(g)
        .into_iter()
        .map(|s| (0..g.n()).filter(|&v| s >> v & 1 == 1).map(|v| w[v]).sum())
        .max()
        .unwrap_or(0)
}

fn connected(adj: &[u32], s: u32) -> bool {
    if s == 0 {
        return false;
    }
    let mut seen = 1u32 << s.trailing_zeros();
    loop {
        let mut grow = seen;
        for (v, &a) in adj.iter().enumerate() {
            if seen >> v & 1 == 1 {
                grow |= a & s;
            }
        }
        if grow == seen {
            return seen == s;
        }
        seen = grow;
    }
}

/// (Induced) minor by trying every map of host vertices to bags or to
/// nothing.
pub fn minor_oracle(h: &Graph, g: &Graph, induced: bool) -> bool {
    let (k, n) = (h.n(), g.n());
    if k == 0 {
        return true;
    }
    if k > n {
        return false;
    }
    let adj = adj_mask(g);
    let mut assign = vec![0usize; n];
    loop {
        let mut bags = vec![0u32; k];
        for v in 0..n {
            if assign[v] > 0 {
                bags[assign[v] - 1] |= 1 << v;
            }
        }
        if bags.iter().all(|&b| connected(&adj, b)) {
            let touch = |a: u32, b: u32| (0..n).any(|v| a >> v & 1 == 1 && adj[v] & b != 0);
            let ok = (0..k).all(|u| {
                (u + 1..k).all(|v| {
                    let t = touch(bags[u], bags[v]);
                    if h.has_edge(u, v) {
                        t
                    } else {
                        !(induced && t)
                    }
                })
            });
            if ok {
                return true;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return false;
            }
            assign[i] += 1;
            if assign[i] <= k {
                break;
            }
            assign[i] = 0;
            i += 1;
        }
    }
}

/// (Induced) subgraph by trying every injective map.
pub fn subgraph_oracle(h: &Graph, g: &Graph, induced: bool) -> bool {
    fn go(h: &Graph, g: &Graph, induced: bool, map: &mut Vec<usize>) -> bool {
        let u = map.len();
        if u == h.n() {
            return true;
        }
        for c in 0..g.n() {
            if map.contains(&c) {
                continue;
            }
            let fits = (0..u).all(|w| {
                let e = g.has_edge(c, map[w]);
                if h.has_edge(u, w) {
                    e
                } else {
                    !(induced && e)
                }
            });
            if fits {
                map.push(c);
                if go(h, g, induced, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    go(h, g, induced, &mut Vec::new())
}

/// Whether some proper colouring from the lists exists.
pub fn list_coloring_oracle(g: &Graph, lists: &[Vec<usize>]) -> bool {
    fn go(g: &Graph, lists: &[Vec<usize>], col: &mut Vec<usize>) -> bool {
        let v = col.len();
        if v == g.n() {
            return true;
        }
        for &c in &lists[v] {
            if (0..v).all(|w| !(g.has_edge(v, w) && col[w] == c)) {
                col.push(c);
                if go(g, lists, col) {
                    return true;
                }
                col.pop();
            }
        }
        false
    }
    go(g, lists, &mut Vec::new())
}
