//! Nice tree decompositions: leaves with empty bags, and introduce, forget
//! and binary join nodes, rooted at an empty bag.

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::invariants::TreeDecomposition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NiceKind {
    Leaf,
    Introduce { vertex: usize, child: usize },
    Forget { vertex: usize, child: usize },
    Join { left: usize, right: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceNode {
    pub bag: VertexSet,
    pub kind: NiceKind,
}

/// Children always precede their parents; the root is the last node.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NiceTreeDecomposition {
    pub nodes: Vec<NiceNode>,
}

impl NiceTreeDecomposition {
    /// Validates `td` for `g` and converts it, rooting at node 0.
    pub fn from_td(g: &Graph, td: &TreeDecomposition) -> Result<Self> {
        td.validate(g)
            .map_err(|v| Error::arg(format!("invalid tree decomposition: {v}")))?;
        let adj = td.adjacency();
        let mut nice = NiceTreeDecomposition { nodes: Vec::new() };
        // iterative post-order over the decomposition tree
        let mut parent = vec![usize::MAX; td.bags.len()];
        let mut order = Vec::with_capacity(td.bags.len());
        let mut stack = vec![0];
        let mut seen = vec![false; td.bags.len()];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            order.push(x);
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = x;
                    stack.push(y);
                }
            }
        }
        let mut built = vec![usize::MAX; td.bags.len()];
        for &x in order.iter().rev() {
            let bag = td.bags[x];
            let mut top: Option<usize> = None;
            for &y in &adj[x] {
                if parent[y] != x {
                    continue;
                }
                let mut node = built[y];
                for v in td.bags[y] - bag {
                    node = nice.forget(node, v);
                }
                for v in bag - td.bags[y] {
                    node = nice.introduce(node, v);
                }
                top = Some(match top {
                    None => node,
                    Some(t) => nice.push(bag, NiceKind::Join { left: t, right: node }),
                });
            }
            built[x] = match top {
                Some(t) => t,
                None => {
                    let mut node = nice.push(VertexSet::EMPTY, NiceKind::Leaf);
                    for v in bag {
                        node = nice.introduce(node, v);
                    }
                    node
                }
            };
        }
        let mut root = built[0];
        for v in td.bags[0] {
            root = nice.forget(root, v);
        }
        debug_assert_eq!(root, nice.nodes.len() - 1);
        Ok(nice)
    }

    pub fn root(&self) -> usize {
        self.nodes.len() - 1
    }

    fn push(&mut self, bag: VertexSet, kind: NiceKind) -> usize {
        self.nodes.push(NiceNode { bag, kind });
        self.nodes.len() - 1
    }

    fn introduce(&mut self, child: usize, v: usize) -> usize {
        let bag = self.nodes[child].bag.with(v);
        self.push(bag, NiceKind::Introduce { vertex: v, child })
    }

    fn forget(&mut self, child: usize, v: usize) -> usize {
        let bag = self.nodes[child].bag.without(v);
        self.push(bag, NiceKind::Forget { vertex: v, child })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::random_graph;
    use crate::invariants::treewidth_exact;

    /// Every vertex is introduced on each root path at most once and forgotten
    /// exactly once; bags follow the node kinds.
    #[test]
    fn structure() {
        for seed in 0..100u64 {
            let g = random_graph(9, 0.35, seed).unwrap();
            let (tw, td) = treewidth_exact(&g).unwrap();
            let nice = NiceTreeDecomposition::from_td(&g, &td).unwrap();
            let mut forgotten = vec![0; g.n()];
            for node in &nice.nodes {
                assert!(node.bag.len() <= tw + 1);
                match node.kind {
                    NiceKind::Leaf => assert!(node.bag.is_empty()),
                    NiceKind::Introduce { vertex, child } => {
                        assert_eq!(nice.nodes[child].bag.with(vertex), node.bag);
                        assert!(!nice.nodes[child].bag.contains(vertex));
                    }
                    NiceKind::Forget { vertex, child } => {
                        assert_eq!(nice.nodes[child].bag.without(vertex), node.bag);
                        assert!(nice.nodes[child].bag.contains(vertex));
                        forgotten[vertex] += 1;
                    }
                    NiceKind::Join { left, right } => {
                        assert_eq!(nice.nodes[left].bag, node.bag);
                        assert_eq!(nice.nodes[right].bag, node.bag);
                    }
                }
            }
            assert!(forgotten.iter().all(|&c| c == 1));
            assert!(nice.nodes[nice.root()].bag.is_empty());
        }
    }

    #[test]
    fn rejects_invalid() {
        let g = random_graph(5, 1.0, 0).unwrap();
        let td = TreeDecomposition::single_bag(VertexSet::from_iter([0, 1]));
        assert!(NiceTreeDecomposition::from_td(&g, &td).is_err());
    }
}
