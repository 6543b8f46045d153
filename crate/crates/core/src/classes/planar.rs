//! Planarity by path addition on each block, with the Wagner test
//! (no `K_5` or `K_{3,3}` minor) kept as an independent check.

use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::containment::{contains_with, Relation};
use crate::error::Refused;
use crate::generators::{complete, complete_bipartite};
use crate::graph::Graph;

pub fn is_planar(g: &Graph) -> bool {
    let n = g.n();
    if n >= 3 && g.edge_count() > 3 * n - 6 {
        return false;
    }
    g.blocks().into_iter().filter(|b| b.len() >= 5).all(|b| {
        let block = g.induced_subgraph(b).expect("block within range");
        block.edge_count() <= 3 * block.n() - 6 && block_is_planar(&block)
    })
}

/// No `K_5` and no `K_{3,3}` minor.
pub fn is_planar_wagner(g: &Graph, budget: &Budget) -> Result<bool, Refused> {
    for h in [complete(5), complete_bipartite(3, 3)] {
        if contains_with(&h, g, Relation::Minor, budget)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Demoucron, Malgrange and Pertuiset: grow an embedding from a cycle by
/// adding paths through fragments, placing a fragment with a single
/// admissible face first.
fn block_is_planar(g: &Graph) -> bool {
    let cycle = first_cycle(g);
    let mut embedded = Graph::new(g.n());
    for i in 0..cycle.len() {
        embedded.add_edge(cycle[i], cycle[(i + 1) % cycle.len()]);
    }
    let mut placed: VertexSet = cycle.iter().collect();
    let mut faces = vec![cycle.clone(), cycle.into_iter().rev().collect::<Vec<_>>()];
    loop {
        let fragments = fragments(g, &embedded, placed);
        if fragments.is_empty() {
            return true;
        }
        let face_sets: Vec<VertexSet> = faces.iter().map(|f| f.iter().collect()).collect();
        let mut choice = None;
        for fr in &fragments {
            let admissible: Vec<usize> = (0..faces.len())
                .filter(|&i| fr.attachments.is_subset(face_sets[i]))
                .collect();
            match admissible.len() {
                0 => return false,
                1 => {
                    choice = Some((fr, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fr, admissible[0]));
                    }
                }
            }
        }
        let (fr, fi) = choice.unwrap();
        let path = &fr.path;
        for w in path.windows(2) {
            embedded.add_edge(w[0], w[1]);
        }
        placed |= path.iter().collect::<VertexSet>();
        let face = faces.swap_remove(fi);
        let (a, b) = (path[0], *path.last().unwrap());
        let ia = face.iter().position(|&x| x == a).unwrap();
        let ib = face.iter().position(|&x| x == b).unwrap();
        let len = face.len();
        let interior = &path[1..path.len() - 1];
        // a .. b along the face, then back to a through the path
        let mut f1: Vec<usize> = (0..=(ib + len - ia) % len).map(|k| face[(ia + k) % len]).collect();
        f1.extend(interior.iter().rev());
        // b .. a along the face, then back to b through the path
        let mut f2: Vec<usize> = (0..=(ia + len - ib) % len).map(|k| face[(ib + k) % len]).collect();
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
}

struct Fragment {
    attachments: VertexSet,
    /// A path between two distinct attachments through the fragment.
    path: Vec<usize>,
}

fn fragments(g: &Graph, embedded: &Graph, placed: VertexSet) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in placed {
        for v in (g.neighbors(u) & placed).above(u) {
            if !embedded.has_edge(u, v) {
                out.push(Fragment {
                    attachments: VertexSet::from_iter([u, v]),
                    path: vec![u, v],
                });
            }
        }
    }
    for comp in g.components_within(g.vertices() - placed) {
        let attachments = g.neighborhood_of(comp) & placed;
        let a = attachments.first().expect("blocks have no dangling components");
        let others = attachments.without(a);
        let s = (g.neighbors(a) & comp).first().unwrap();
        let end = comp
            .iter()
            .find(|&x| g.neighbors(x).intersects(others))
            .expect("a 2-connected graph attaches every fragment twice");
        let path = g.shortest_path_within(s, end, comp).unwrap();
        let end = *path.last().unwrap();
        let b = (g.neighbors(end) & others).first().unwrap();
        let mut full = vec![a];
        full.extend(path);
        full.push(b);
        out.push(Fragment { attachments, path: full });
    }
    out
}

fn first_cycle(g: &Graph) -> Vec<usize> {
    // a 2-connected graph on at least 3 vertices: close an edge 0-w by a
    // path avoiding that edge
    let u = 0;
    let w = g.neighbors(u).first().unwrap();
    let mut h = g.clone();
    h.remove_edge(u, w);
    h.shortest_path_within(w, u, h.vertices()).expect("blocks are 2-connected")
}
