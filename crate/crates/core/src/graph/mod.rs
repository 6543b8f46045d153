//! Simple undirected graphs over vertices `0..n`, stored as adjacency bitsets.

mod canon;
mod io;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, scale_rational_weights};

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A simple undirected graph: symmetric, irreflexive adjacency over `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_new`] for
    /// sizes that come from user input.
    pub fn new(n: usize) -> Self {
        Self::try_new(n).expect("vertex count exceeds bitset capacity")
    }

    pub fn try_new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "{n} vertices (at most {MAX_VERTICES} supported)"
            )));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_new(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::arg(format!("edge ({u},{v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::arg(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n() && v < self.n(), "bad edge ({u},{v})");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|s| s.len()).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in self.adj[u].above(u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Union of the neighbourhoods of `set`, minus `set` itself.
    #[inline]
    pub fn neighborhood_of(&self, set: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in set {
            out |= self.adj[v];
        }
        out - set
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| !self.adj[v].intersects(set))
    }

    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter().map(|v| (self.adj[v] & set).len()).sum::<usize>() / 2
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        Graph {
            adj: (0..self.n())
                .map(|v| (full - self.adj[v]).without(v))
                .collect(),
        }
    }

    /// Subgraph induced by `keep`, reindexed densely in ascending order.
    pub fn induced_subgraph(&self, keep: VertexSet) -> Result<Graph> {
        if !keep.is_subset(self.vertices()) {
            return Err(Error::arg(format!(
                "vertex {} out of range for n = {}",
                (keep - self.vertices()).first().unwrap(),
                self.n()
            )));
        }
        let order = keep.to_vec();
        Ok(self.subgraph_in_order(&order))
    }

    /// Subgraph induced by `order`, where `order[i]` becomes vertex `i`.
    pub fn subgraph_in_order(&self, order: &[usize]) -> Graph {
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in order.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(order.len());
        for (i, &v) in order.iter().enumerate() {
            for w in self.adj[v] {
                let j = index[w];
                if j != usize::MAX {
                    g.adj[i].insert(j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v)).unwrap()
    }

    /// Contracts the edge `uv`. The merged vertex keeps index `min(u, v)`;
    /// vertices above `max(u, v)` shift down by one.
    pub fn contract_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
            return Err(Error::arg(format!("({u},{v}) is not an edge")));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut h = self.clone();
        let merged = (h.adj[keep] | h.adj[gone]).without(keep).without(gone);
        for w in h.adj[gone] {
            h.adj[w].remove(gone);
        }
        h.adj[gone] = VertexSet::EMPTY;
        for w in merged {
            h.adj[keep].insert(w);
            h.adj[w].insert(keep);
        }
        Ok(h.delete_vertex(gone))
    }

    /// Replaces the edge `uv` with a path `u - w - v`; `w` gets index `n`.
    pub fn subdivide_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if u >= self.n() || v >= self.n() || !self.has_edge(u, v) {
            return Err(Error::arg(format!("({u},{v}) is not an edge")));
        }
        let mut h = self.clone();
        let w = h.push_vertex()?;
        h.remove_edge(u, v);
        h.add_edge(u, w);
        h.add_edge(w, v);
        Ok(h)
    }

    /// Appends an isolated vertex and returns its index.
    pub fn push_vertex(&mut self) -> Result<usize> {
        if self.n() >= MAX_VERTICES {
            return Err(Error::Unsupported(format!(
                "more than {MAX_VERTICES} vertices"
            )));
        }
        self.adj.push(VertexSet::EMPTY);
        Ok(self.n() - 1)
    }

    /// Line graph, one vertex per edge in lexicographic edge order.
    pub fn line_graph(&self) -> Result<Graph> {
        let edges = self.edges();
        let mut l = Graph::try_new(edges.len())?;
        for i in 0..edges.len() {
            for j in i + 1..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    l.add_edge(i, j);
                }
            }
        }
        Ok(l)
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut g = Graph::try_new(off + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        Ok(g)
    }

    /// Vertices reachable from `v` inside `within` (which must contain `v`).
    #[inline]
    pub fn component_within(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(v);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for u in frontier {
                next |= self.adj[u];
            }
            next &= within;
            next -= seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced by `within`, ordered by
    /// minimum element.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_within(v, within);
            rest -= c;
            out.push(c);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.component_within(0, self.vertices()) == self.vertices()
    }

    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.component_within(v, set) == set,
        }
    }

    /// Breadth-first distance levels from `v`; the graph must be connected.
    pub fn bfs_levels(&self, v: usize) -> Result<Vec<VertexSet>> {
        if v >= self.n() {
            return Err(Error::arg(format!("vertex {v} out of range")));
        }
        if !self.is_connected() {
            return Err(Error::Precondition(
                "bfs_levels needs a connected graph; split by component first".into(),
            ));
        }
        Ok(self.bfs_levels_within(v, self.vertices()))
    }

    pub(crate) fn bfs_levels_within(&self, v: usize, within: VertexSet) -> Vec<VertexSet> {
        let mut levels = vec![VertexSet::singleton(v)];
        let mut seen = VertexSet::singleton(v);
        loop {
            let next = self.neighborhood_of(*levels.last().unwrap()) & within;
            let next = next - seen;
            if next.is_empty() {
                break;
            }
            seen |= next;
            levels.push(next);
        }
        levels
    }

    /// Shortest path from `s` to `t` using only vertices in `within`
    /// (endpoints included), or `None`.
    pub fn shortest_path_within(&self, s: usize, t: usize, within: VertexSet) -> Option<Vec<usize>> {
        let mut prev = [usize::MAX; MAX_VERTICES];
        let mut seen = VertexSet::singleton(s);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for w in (self.adj[u] & within) - seen {
                seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
        None
    }

    /// Biconnected components (blocks). Isolated vertices form singleton
    /// blocks; the list is sorted.
    pub fn blocks(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut stack: Vec<(usize, usize)> = Vec::new();
        let mut out = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.degree(root) == 0 {
                disc[root] = time;
                time += 1;
                out.push(VertexSet::singleton(root));
                continue;
            }
            // iterative DFS: (vertex, parent, remaining neighbours)
            let mut dfs: Vec<(usize, usize, crate::bitset::Iter)> = Vec::new();
            disc[root] = time;
            low[root] = time;
            time += 1;
            dfs.push((root, usize::MAX, self.adj[root].iter()));
            while let Some(top) = dfs.last_mut() {
                let (u, parent) = (top.0, top.1);
                if let Some(w) = top.2.next() {
                    if disc[w] == usize::MAX {
                        stack.push((u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        dfs.push((w, u, self.adj[w].iter()));
                    } else if w != parent && disc[w] < disc[u] {
                        stack.push((u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    dfs.pop();
                    if let Some(&(p, _, _)) = dfs.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] >= disc[p] {
                            let mut block = VertexSet::EMPTY;
                            while let Some((a, b)) = stack.pop() {
                                block.insert(a);
                                block.insert(b);
                                if (a, b) == (p, u) {
                                    break;
                                }
                            }
                            out.push(block);
                        }
                    }
                }
            }
        }
        out.sort();
        out.sort_by_key(|b| b.first());
        out
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Serialized as `{"n": .., "edges": [[u, v], ..]}`.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n(),
            edges: self.edges(),
        }
        .serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = GraphRepr::deserialize(d)?;
        Graph::from_edges(r.n, &r.edges).map_err(serde::de::Error::custom)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

/// A graph with a nonnegative integer weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedGraph {
    pub graph: Graph,
    pub weights: Vec<u64>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<u64>) -> Result<Self> {
        if weights.len() != graph.n() {
            return Err(Error::arg(format!(
                "{} weights for {} vertices",
                weights.len(),
                graph.n()
            )));
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn unit(graph: Graph) -> Self {
        let n = graph.n();
        WeightedGraph {
            graph,
            weights: vec![1; n],
        }
    }

    pub fn weight_of(&self, set: VertexSet) -> u64 {
        set.iter().map(|v| self.weights[v]).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{claw, complete, cycle, path, subdivided_claw};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn induced_subgraph_examples() {
        assert_eq!(complete(3).induced_subgraph(set(&[0, 1])).unwrap(), complete(2));
        assert_eq!(cycle(4).unwrap().induced_subgraph(set(&[0, 1, 2])).unwrap(), path(3));
        let g = cycle(5).unwrap();
        assert_eq!(g.induced_subgraph(g.vertices()).unwrap(), g);
        assert!(matches!(
            complete(3).induced_subgraph(set(&[0, 5])),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn contraction_examples() {
        let k3 = complete(3);
        for (u, v) in k3.edges() {
            assert_eq!(k3.contract_edge(u, v).unwrap(), complete(2));
        }
        let c4 = cycle(4).unwrap();
        assert_eq!(c4.contract_edge(0, 1).unwrap(), cycle(3).unwrap());
        assert!(c4.contract_edge(0, 2).is_err());
    }

    #[test]
    fn subdivision_examples() {
        assert_eq!(complete(2).subdivide_edge(0, 1).unwrap().edges(), vec![(0, 2), (1, 2)]);
        assert!(is_isomorphic(&complete(2).subdivide_edge(0, 1).unwrap(), &path(3)));
        let mut g = cycle(3).unwrap();
        for (u, v) in cycle(3).unwrap().edges() {
            g = g.subdivide_edge(u, v).unwrap();
        }
        assert!(is_isomorphic(&g, &cycle(6).unwrap()));
        let mut c = claw();
        for (u, v) in claw().edges() {
            c = c.subdivide_edge(u, v).unwrap();
        }
        assert!(is_isomorphic(&c, &subdivided_claw(2, 2, 2).unwrap()));
        let w = c.n() - 1;
        assert_eq!(c.degree(w), 2);
        assert!(complete(3).subdivide_edge(0, 0).is_err());
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(path(3).line_graph().unwrap(), complete(2));
        assert_eq!(complete(3).line_graph().unwrap(), complete(3));
        assert_eq!(claw().line_graph().unwrap(), complete(3));
    }

    #[test]
    fn component_examples() {
        let g = complete(3).disjoint_union(&complete(2)).unwrap();
        let comps = g.components();
        assert_eq!(comps.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![3, 2]);
        assert_eq!(Graph::new(4).components().len(), 4);
        assert_eq!(cycle(6).unwrap().components(), vec![VertexSet::full(6)]);
    }

    #[test]
    fn bfs_examples() {
        assert_eq!(
            path(4).bfs_levels(0).unwrap(),
            vec![set(&[0]), set(&[1]), set(&[2]), set(&[3])]
        );
        assert_eq!(complete(4).bfs_levels(0).unwrap(), vec![set(&[0]), set(&[1, 2, 3])]);
        assert_eq!(
            cycle(5).unwrap().bfs_levels(0).unwrap(),
            vec![set(&[0]), set(&[1, 4]), set(&[2, 3])]
        );
        assert!(Graph::new(2).bfs_levels(0).is_err());
    }

    #[test]
    fn block_examples() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        assert_eq!(bowtie.blocks(), vec![set(&[0, 1, 2]), set(&[2, 3, 4])]);
        assert_eq!(cycle(5).unwrap().blocks(), vec![VertexSet::full(5)]);
        let p4 = path(4).blocks();
        assert_eq!(p4.len(), 3);
        assert!(p4.iter().all(|b| b.len() == 2));
        assert_eq!(Graph::new(1).blocks(), vec![set(&[0])]);
    }
}
