use crate::budget::{Budget, Meter};
use crate::error::Refused;
use crate::graph::Graph;

use super::clique::clique_number;

/// Chromatic number with a witness colouring (`colors[v]` in `0..chi`).
///
/// Tries `k = omega, omega + 1, ...` with DSATUR-ordered backtracking; the
/// lexicographically smallest maximum clique is precoloured `0..omega`.
pub fn chromatic_number(g: &Graph) -> Result<(usize, Vec<usize>), Refused> {
    chromatic_number_with(g, &Budget::default())
}

pub fn chromatic_number_with(g: &Graph, budget: &Budget) -> Result<(usize, Vec<usize>), Refused> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Vec::new()));
    }
    let (omega, clique) = clique_number(g);
    let mut meter = Meter::new("chromatic number", budget.search_nodes);
    for k in omega.max(1)..=n {
        let mut colors = vec![usize::MAX; n];
        for (c, v) in clique.iter().enumerate() {
            colors[v] = c;
        }
        if color(g, k, &mut colors, clique.len(), &mut meter)? {
            return Ok((k, colors));
        }
    }
    unreachable!("n colours always suffice")
}

/// Whether `g` has a proper colouring with `k` colours, as a witness.
pub fn k_coloring(g: &Graph, k: usize, budget: &Budget) -> Result<Option<Vec<usize>>, Refused> {
    let mut colors = vec![usize::MAX; g.n()];
    let mut meter = Meter::new("k-colouring", budget.search_nodes);
    Ok(color(g, k, &mut colors, 0, &mut meter)?.then_some(colors))
}

fn color(
    g: &Graph,
    k: usize,
    colors: &mut [usize],
    used_colors: usize,
    meter: &mut Meter,
) -> Result<bool, Refused> {
    meter.tick()?;
    let n = g.n();
    // DSATUR: most distinct neighbour colours, then highest degree, then index
    let mut pick = None;
    let mut key = (0usize, 0usize);
    let mut pick_forbidden = 0u128;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        let mut forbidden = 0u128;
        for w in g.neighbors(v) {
            if colors[w] != usize::MAX {
                forbidden |= 1 << colors[w];
            }
        }
        let sat = forbidden.count_ones() as usize;
        if sat >= k {
            return Ok(false);
        }
        let cand = (sat, g.degree(v));
        if pick.is_none() || cand > key {
            pick = Some(v);
            key = cand;
            pick_forbidden = forbidden;
        }
    }
    let Some(v) = pick else {
        return Ok(true);
    };
    // a colour never used before is interchangeable with any other unused one
    let limit = k.min(used_colors + 1);
    for c in 0..limit {
        if pick_forbidden >> c & 1 == 0 {
            colors[v] = c;
            if color(g, k, colors, used_colors.max(c + 1), meter)? {
                return Ok(true);
            }
        }
    }
    colors[v] = usize::MAX;
    Ok(false)
}
