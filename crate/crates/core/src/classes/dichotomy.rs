//! Bounded/unbounded verdicts for classes excluding one pattern under each
//! containment relation, and for finite sets of forbidden induced subgraphs.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{in_class_s, is_edgeless, is_planar, is_subcubic};
use crate::budget::{Budget, Meter};
use crate::containment::{contains_with, Relation};
use crate::error::{Refused, Result};
use crate::generators::{complete_bipartite, complete_minus_edge, cycle, k2q_plus, path, subdivided_claw, wheel4};
use crate::graph::{canonical_form, is_isomorphic, Graph};
use crate::invariants::ramsey_upper;

/// Largest pattern order `dichotomy` accepts.
pub const DICHOTOMY_MAX_ORDER: usize = 12;

/// A binding function `f`, evaluated at the clique number `k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum BindingFunction {
    /// `k - offset`, floored at 0.
    LinearMax { offset: u64 },
    /// `max{k - offset, constant}`.
    MaxWithConstant { offset: u64, constant: u64 },
    /// `R(k + 1, order) - 2`, with `R` replaced by the binomial bound.
    RamseyBased { order: u64 },
    /// `max{k, 2 R(k + 1, q) - 2} - 1`, with the binomial bound for `R`.
    SkodinisRamsey { q: u64 },
    /// A constant; `None` when only its existence is known.
    Constant { value: Option<u64> },
    /// `k + c` (a Hadwiger-number binding).
    HadwigerKPlusC { c: u64 },
    /// `max{2p - 4, k}` (a Hadwiger-number binding).
    HadwigerMax { p: u64 },
    /// Exists, but no explicit formula is known.
    NonExplicit,
}

impl BindingFunction {
    /// `None` when the function is non-explicit or the value overflows.
    pub fn eval(&self, k: u64) -> Option<u64> {
        match *self {
            BindingFunction::LinearMax { offset } => Some(k.saturating_sub(offset)),
            BindingFunction::MaxWithConstant { offset, constant } => Some(k.saturating_sub(offset).max(constant)),
            BindingFunction::RamseyBased { order } => Some(ramsey_upper(k + 1, order).ok()?.saturating_sub(2)),
            BindingFunction::SkodinisRamsey { q } => {
                let r = ramsey_upper(k + 1, q).ok()?;
                Some(k.max(r.checked_mul(2)?.saturating_sub(2)).saturating_sub(1))
            }
            BindingFunction::Constant { value } => value,
            BindingFunction::HadwigerKPlusC { c } => k.checked_add(c),
            BindingFunction::HadwigerMax { p } => Some((2 * p).saturating_sub(4).max(k)),
            BindingFunction::NonExplicit => None,
        }
    }

    pub fn is_explicit(&self) -> bool {
        !matches!(
            self,
            BindingFunction::NonExplicit | BindingFunction::Constant { value: None }
        )
    }
}

impl fmt::Display for BindingFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BindingFunction::LinearMax { offset } => write!(f, "k-{offset}"),
            BindingFunction::MaxWithConstant { offset, constant } => write!(f, "max{{k-{offset},{constant}}}"),
            BindingFunction::RamseyBased { order } => write!(f, "R(k+1,{order})-2"),
            BindingFunction::SkodinisRamsey { q } => write!(f, "max{{k,2R(k+1,{q})-2}}-1"),
            BindingFunction::Constant { value: Some(c) } => write!(f, "{c}"),
            BindingFunction::Constant { value: None } => write!(f, "constant (exists, non-explicit)"),
            BindingFunction::HadwigerKPlusC { c } => write!(f, "k+{c}"),
            BindingFunction::HadwigerMax { p } => write!(f, "max{{{},k}}", (2 * p).saturating_sub(4)),
            BindingFunction::NonExplicit => write!(f, "exists, non-explicit"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DichotomyVerdict {
    pub relation: Relation,
    pub pattern: Graph,
    pub bounded: bool,
    pub binding: Option<BindingFunction>,
    pub reason: String,
}

pub fn dichotomy(h: &Graph, rel: Relation) -> Result<DichotomyVerdict> {
    dichotomy_with(h, rel, &Budget::default())
}

pub fn dichotomy_with(h: &Graph, rel: Relation, budget: &Budget) -> Result<DichotomyVerdict> {
    if h.n() > DICHOTOMY_MAX_ORDER {
        return Err(Refused {
            what: "dichotomy pattern order",
            limit: DICHOTOMY_MAX_ORDER as u64,
        }
        .into());
    }
    let verdict = |binding: Option<BindingFunction>, reason: String| DichotomyVerdict {
        relation: rel,
        pattern: h.clone(),
        bounded: binding.is_some(),
        binding,
        reason,
    };
    if h.n() == 0 {
        return Ok(verdict(
            Some(BindingFunction::Constant { value: Some(0) }),
            "H is the empty graph".into(),
        ));
    }
    let n = h.n() as u64;
    let sub = |g: &Graph| -> Result<bool> { Ok(contains_with(h, g, Relation::InducedSubgraph, budget)?.is_some()) };
    let out = match rel {
        Relation::InducedSubgraph => {
            if sub(&path(3))? {
                verdict(
                    Some(BindingFunction::LinearMax { offset: 1 }),
                    "H is an induced subgraph of P3".into(),
                )
            } else if is_edgeless(h) {
                verdict(Some(BindingFunction::RamseyBased { order: n }), "H is edgeless".into())
            } else {
                verdict(None, "H is neither an induced subgraph of P3 nor edgeless".into())
            }
        }
        Relation::InducedTopologicalMinor => {
            if sub(&cycle(3)?)? || sub(&cycle(4)?)? {
                verdict(
                    Some(BindingFunction::LinearMax { offset: 1 }),
                    "H is an induced subgraph of C3 or C4".into(),
                )
            } else if is_isomorphic(h, &complete_minus_edge(4)?) {
                verdict(
                    Some(BindingFunction::MaxWithConstant { offset: 1, constant: 2 }),
                    "H is isomorphic to K4-".into(),
                )
            } else if is_edgeless(h) {
                verdict(Some(BindingFunction::RamseyBased { order: n }), "H is edgeless".into())
            } else {
                verdict(
                    None,
                    "H is not an induced subgraph of C3 or C4, not K4-, and not edgeless".into(),
                )
            }
        }
        Relation::InducedMinor => {
            // the explicit clauses first, so the binding is a formula when one exists
            let mut found = None;
            for q in 1..=h.n() {
                if sub(&complete_bipartite(2, q))? {
                    found = Some(verdict(
                        Some(BindingFunction::SkodinisRamsey { q: q as u64 }),
                        format!("H is an induced subgraph of K_{{2,{q}}}"),
                    ));
                    break;
                }
                if sub(&k2q_plus(q)?)? {
                    found = Some(verdict(
                        Some(BindingFunction::SkodinisRamsey { q: q as u64 + 1 }),
                        format!("H is an induced subgraph of K_{{2,{q}}}+, an induced minor of K_{{2,{}}}", q + 1),
                    ));
                    break;
                }
            }
            match found {
                Some(v) => v,
                None if sub(&wheel4())? => verdict(
                    Some(BindingFunction::NonExplicit),
                    "H is an induced subgraph of W4".into(),
                ),
                None if sub(&complete_minus_edge(5)?)? => verdict(
                    Some(BindingFunction::NonExplicit),
                    "H is an induced subgraph of K5-".into(),
                ),
                None => verdict(
                    None,
                    "H is not an induced subgraph of W4, K5-, K_{2,q} or K_{2,q}+".into(),
                ),
            }
        }
        Relation::Subgraph => {
            if in_class_s(h) {
                verdict(
                    Some(BindingFunction::Constant { value: None }),
                    "every component of H is a path or a subdivided claw".into(),
                )
            } else {
                verdict(None, "H has a component that is not a path or a subdivided claw".into())
            }
        }
        Relation::TopologicalMinor => {
            if is_subcubic(h) && is_planar(h) {
                verdict(
                    Some(BindingFunction::Constant { value: None }),
                    "H is subcubic and planar".into(),
                )
            } else {
                verdict(None, "H is not both subcubic and planar".into())
            }
        }
        Relation::Minor => {
            if is_planar(h) {
                verdict(Some(BindingFunction::Constant { value: None }), "H is planar".into())
            } else {
                verdict(None, "H is not planar".into())
            }
        }
    };
    Ok(out)
}

/// Verdict for the class excluding every graph of a finite set as an
/// induced subgraph, with the index of each required member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiniteSetVerdict {
    pub bounded: bool,
    pub complete_bipartite: Option<usize>,
    pub class_s: Option<usize>,
    /// A member that is the line graph of `root`, a graph in S.
    pub line_graph: Option<(usize, Graph)>,
}

pub fn finite_set_induced_subgraph_dichotomy(hs: &[Graph], budget: &Budget) -> Result<FiniteSetVerdict, Refused> {
    let complete_bipartite = hs.iter().position(|h| complete_bipartite_parts(h).is_some());
    let class_s = hs.iter().position(in_class_s);
    let mut line_graph = None;
    for (i, h) in hs.iter().enumerate() {
        if let Some(root) = line_graph_root_in_s(h, budget)? {
            line_graph = Some((i, root));
            break;
        }
    }
    Ok(FiniteSetVerdict {
        bounded: complete_bipartite.is_some() && class_s.is_some() && line_graph.is_some(),
        complete_bipartite,
        class_s,
        line_graph,
    })
}

/// `(p, q)` with `h` isomorphic to `K_{p,q}`, `p <= q`; edgeless graphs
/// count as `K_{0,q}`.
fn complete_bipartite_parts(h: &Graph) -> Option<(usize, usize)> {
    let c = h.complement();
    let comps = c.components();
    if comps.len() > 2 || !comps.iter().all(|&s| c.is_clique(s)) {
        return None;
    }
    let mut sizes: Vec<usize> = comps.iter().map(|s| s.len()).collect();
    sizes.resize(2, 0);
    sizes.sort();
    Some((sizes[0], sizes[1]))
}

/// A graph in S without isolated vertices whose line graph is `h`, found
/// by enumerating every such graph with `|V(h)|` edges.
pub fn line_graph_root_in_s(h: &Graph, budget: &Budget) -> Result<Option<Graph>, Refused> {
    let mut meter = Meter::new("line graph roots", budget.search_nodes);
    let target = canonical_form(h);
    let mut parts = Vec::new();
    let mut found = None;
    roots(h.n(), h.n(), &mut parts, &mut meter, &mut |root| {
        let l = root.line_graph().expect("roots are small");
        if canonical_form(&l) == target {
            found = Some(root.clone());
            return true;
        }
        false
    })?;
    Ok(found)
}

/// Component shapes of S with a given number of edges: a path, or a
/// subdivided claw with arms `a >= b >= c >= 1`.
fn shapes(m: usize) -> Vec<Graph> {
    let mut out = vec![path(m + 1)];
    for a in 1..=m {
        for b in 1..=a {
            if a + b < m && m - a - b <= b {
                out.push(subdivided_claw(a, b, m - a - b).expect("arms are positive"));
            }
        }
    }
    out
}

fn roots(
    left: usize,
    max_part: usize,
    parts: &mut Vec<Graph>,
    meter: &mut Meter,
    f: &mut dyn FnMut(&Graph) -> bool,
) -> Result<bool, Refused> {
    meter.tick()?;
    if left == 0 {
        let root = parts
            .iter()
            .fold(Graph::new(0), |acc, c| acc.disjoint_union(c).expect("roots are small"));
        return Ok(f(&root));
    }
    for m in (1..=left.min(max_part)).rev() {
        for shape in shapes(m) {
            parts.push(shape);
            let done = roots(left - m, m, parts, meter, f)?;
            parts.pop();
            if done {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{claw, complete, edgeless};

    #[test]
    fn binding_values() {
        let f = BindingFunction::SkodinisRamsey { q: 3 };
        // R(k+1,3) <= C(k+2,2): k=1 -> 3, so max{1,4}-1 = 3
        assert_eq!(f.eval(1), Some(3));
        assert_eq!(f.eval(2), Some(2 * 6 - 2 - 1));
        assert_eq!(BindingFunction::MaxWithConstant { offset: 1, constant: 2 }.eval(5), Some(4));
        assert_eq!(BindingFunction::MaxWithConstant { offset: 1, constant: 2 }.eval(1), Some(2));
        assert_eq!(BindingFunction::RamseyBased { order: 3 }.eval(2), Some(4));
        assert_eq!(BindingFunction::NonExplicit.eval(3), None);
        assert_eq!(BindingFunction::HadwigerMax { p: 4 }.eval(2), Some(4));
        for f in [
            BindingFunction::LinearMax { offset: 1 },
            BindingFunction::RamseyBased { order: 4 },
            BindingFunction::SkodinisRamsey { q: 4 },
            BindingFunction::HadwigerKPlusC { c: 5 },
        ] {
            for k in 1..12 {
                assert!(f.eval(k).unwrap() <= f.eval(k + 1).unwrap());
            }
        }
    }

    #[test]
    fn verdict_examples() {
        let v = dichotomy(&claw(), Relation::Subgraph).unwrap();
        assert!(v.bounded);
        assert!(!dichotomy(&claw(), Relation::InducedSubgraph).unwrap().bounded);
        let v = dichotomy(&complete_bipartite(2, 3), Relation::InducedMinor).unwrap();
        assert_eq!(v.binding, Some(BindingFunction::SkodinisRamsey { q: 3 }));
        let v = dichotomy(&k2q_plus(3).unwrap(), Relation::InducedMinor).unwrap();
        assert_eq!(v.binding, Some(BindingFunction::SkodinisRamsey { q: 4 }));
        let v = dichotomy(&wheel4(), Relation::InducedMinor).unwrap();
        assert_eq!(v.binding, Some(BindingFunction::NonExplicit));
        assert!(!dichotomy(&complete(5), Relation::InducedMinor).unwrap().bounded);
        let v = dichotomy(&complete_minus_edge(4).unwrap(), Relation::InducedTopologicalMinor).unwrap();
        assert_eq!(v.binding, Some(BindingFunction::MaxWithConstant { offset: 1, constant: 2 }));
        let v = dichotomy(&edgeless(4), Relation::InducedSubgraph).unwrap();
        assert_eq!(v.binding, Some(BindingFunction::RamseyBased { order: 4 }));
        let v = dichotomy(&Graph::new(0), Relation::Minor).unwrap();
        assert_eq!(v.binding, Some(BindingFunction::Constant { value: Some(0) }));
        assert!(dichotomy(&path(13), Relation::Minor).is_err());
    }

    #[test]
    fn bounded_iff_binding() {
        for level in crate::generators::graphs_up_to_iso(5, false).unwrap() {
            for h in level {
                for rel in Relation::ALL {
                    let v = dichotomy(&h, rel).unwrap();
                    assert_eq!(v.bounded, v.binding.is_some());
                    match rel {
                        Relation::Subgraph => assert_eq!(v.bounded, in_class_s(&h)),
                        Relation::TopologicalMinor => assert_eq!(v.bounded, is_subcubic(&h) && is_planar(&h)),
                        Relation::Minor => assert_eq!(v.bounded, is_planar(&h)),
                        _ => {}
                    }
                }
            }
        }
    }

    #[test]
    fn line_graph_roots() {
        let b = Budget::default();
        // L(P4) = P3, L(claw) = K3
        assert!(line_graph_root_in_s(&path(3), &b).unwrap().is_some());
        let r = line_graph_root_in_s(&complete(3), &b).unwrap().unwrap();
        assert!(is_isomorphic(&r, &claw()));
        assert!(line_graph_root_in_s(&claw(), &b).unwrap().is_none());
        assert!(line_graph_root_in_s(&cycle(4).unwrap(), &b).unwrap().is_none());
        assert!(line_graph_root_in_s(&edgeless(3), &b).unwrap().is_some());
    }

    #[test]
    fn claw_has_no_root_at_all() {
        // exhaustive over every graph with three edges, not only those in S
        for level in crate::generators::graphs_up_to_iso(6, false).unwrap() {
            for g in level.iter().filter(|g| g.edge_count() == 3) {
                assert!(!is_isomorphic(&g.line_graph().unwrap(), &claw()));
            }
        }
    }

    #[test]
    fn finite_sets() {
        let b = Budget::default();
        let set = [complete_bipartite(2, 2), path(4), complete(3)];
        let v = finite_set_induced_subgraph_dichotomy(&set, &b).unwrap();
        assert!(v.bounded);
        assert!(!finite_set_induced_subgraph_dichotomy(&[complete(5)], &b).unwrap().bounded);
        let v = finite_set_induced_subgraph_dichotomy(&[claw()], &b).unwrap();
        assert!(!v.bounded);
        assert_eq!(v.class_s, Some(0));
        // the claw is K_{1,3}, so only the line-graph member is missing
        assert_eq!(v.complete_bipartite, Some(0));
        assert_eq!(v.line_graph, None);
    }
}
