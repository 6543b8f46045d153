//! Exact graph invariants with self-checking witnesses.

mod chromatic;
mod clique;
mod separators;
mod treewidth;

pub use chromatic::{chromatic_number, chromatic_number_with, k_coloring};
pub use clique::{clique_number, independence_number, smallest_clique_of_size};
pub use separators::{
    full_components, is_minimal_separator, minimal_separators, minimal_separators_with,
    SeparatorReport,
};
pub use treewidth::{
    degeneracy, elimination_width, td_from_elimination_order, treewidth_at_most, treewidth_bounds,
    treewidth_exact, treewidth_exact_with, validate_tree_decomposition, TdViolation,
    TreeDecomposition,
};

use crate::budget::Budget;
use crate::containment::{contains_with, Relation};
use crate::error::{Error, Refused, Result};
use crate::generators::complete;
use crate::graph::Graph;

/// Largest `p` such that `K_p` is a minor of `g`.
///
/// Scans upward from `omega(g)`, stopping at the first `p` without a model;
/// `p` never exceeds `tw + 1` or the edge-count bound `p(p-1)/2 <= |E|`.
pub fn hadwiger_number(g: &Graph) -> Result<usize, Refused> {
    hadwiger_number_with(g, &Budget::default())
}

pub fn hadwiger_number_with(g: &Graph, budget: &Budget) -> Result<usize, Refused> {
    let (omega, _) = clique_number(g);
    let (_, tw_upper) = treewidth_bounds(g);
    let m = g.edge_count();
    let mut p = omega;
    loop {
        let next = p + 1;
        if next > g.n() || next > tw_upper + 1 || next * (next - 1) / 2 > m {
            return Ok(p);
        }
        match contains_with(&complete(next), g, Relation::Minor, budget) {
            Ok(Some(_)) => p = next,
            Ok(None) => return Ok(p),
            Err(r) => return Err(r),
        }
    }
}

/// The binomial bound `R(k, l) <= C(k + l - 2, k - 1)`.
pub fn ramsey_upper(k: u64, l: u64) -> Result<u64> {
    if k == 0 || l == 0 {
        return Err(Error::arg(format!("ramsey_upper needs k, l >= 1, got ({k},{l})")));
    }
    let n = (k + l - 2) as u128;
    let r = (k - 1).min(l - 1) as u128;
    let mut acc: u128 = 1;
    for i in 1..=r {
        acc = acc * (n - r + i) / i;
        if acc > u64::MAX as u128 {
            return Err(Error::Unsupported(format!(
                "C({}, {}) overflows 64 bits",
                k + l - 2,
                k - 1
            )));
        }
    }
    Ok(acc as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, path, random_graph};

    #[test]
    fn ramsey_examples() {
        for l in 1..30 {
            assert_eq!(ramsey_upper(2, l).unwrap(), l);
        }
        assert_eq!(ramsey_upper(3, 3).unwrap(), 6);
        for k in 1..15 {
            for l in 1..15 {
                assert_eq!(ramsey_upper(k, l).unwrap(), ramsey_upper(l, k).unwrap());
            }
        }
        assert_eq!(ramsey_upper(20, 20).unwrap(), 35_345_263_800);
        assert!(ramsey_upper(0, 3).is_err());
        assert!(ramsey_upper(40, 40).is_err());
    }

    #[test]
    fn hadwiger_examples() {
        assert_eq!(hadwiger_number(&complete(6)).unwrap(), 6);
        assert_eq!(hadwiger_number(&path(6)).unwrap(), 2);
        assert_eq!(hadwiger_number(&cycle(5).unwrap()).unwrap(), 3);
        assert_eq!(hadwiger_number(&Graph::new(3)).unwrap(), 1);
        assert_eq!(hadwiger_number(&Graph::new(0)).unwrap(), 0);
    }

    #[test]
    fn hadwiger_below_treewidth_plus_one() {
        for seed in 0..80u64 {
            let g = random_graph(9, 0.45, seed).unwrap();
            let eta = hadwiger_number(&g).unwrap();
            let tw = treewidth_exact(&g).unwrap().0;
            assert!(eta <= tw + 1);
            assert!(eta >= clique_number(&g).0);
        }
    }
}
