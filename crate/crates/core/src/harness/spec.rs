//! Experiment specifications and the binding-function verifier.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::report::{ExperimentReport, InstanceRow, Outcome};
use crate::bitset::VertexSet;
use crate::budget::Budget;
use crate::classes::{dichotomy_with, is_block_cactus, is_chordal, BindingFunction};
use crate::containment::{contains_with, Relation};
use crate::error::{Error, Refused, Result};
use crate::exec::{par_map, Exec};
use crate::generators::{
    complete, graphs_up_to_iso, hereditary_graphs_up_to_iso, random_block_cactus, random_chordal, random_graph,
};
use crate::graph::{parse_graph6, Graph, WeightedGraph};
use crate::invariants::{clique_number, independence_number, treewidth_exact_with};
use crate::solvers::{
    approx_clique_with, brute_list_coloring, mwis_brute, mwis_k1q, mwis_k1q_tables, mwis_on_td, robust_list_k_coloring_with,
    ColorListAssignment, CliqueBoundFormula, RobustOutcome,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedClass {
    BlockCactus,
    Chordal,
    /// Disjoint unions of cliques (the `P_3`-free graphs).
    Cluster,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ClassDescriptor {
    Named { class: NamedClass },
    /// Graphs not containing `pattern` (graph6) under `relation`.
    Excludes { relation: Relation, pattern: String },
    /// No membership filter.
    All,
}

impl ClassDescriptor {
    pub fn contains(&self, g: &Graph, budget: &Budget) -> Result<bool, Refused> {
        Ok(match self {
            ClassDescriptor::Named { class } => match class {
                NamedClass::BlockCactus => is_block_cactus(g),
                NamedClass::Chordal => is_chordal(g),
                NamedClass::Cluster => g.components().iter().all(|&c| g.is_clique(c)),
            },
            ClassDescriptor::Excludes { relation, pattern } => {
                let h = parse_graph6(pattern).expect("pattern validated before use");
                contains_with(&h, g, *relation, budget)?.is_none()
            }
            ClassDescriptor::All => true,
        })
    }

    /// The binding attached to the class, if it has an explicit one.
    pub fn default_binding(&self, budget: &Budget) -> Result<Option<BindingFunction>> {
        Ok(match self {
            ClassDescriptor::Named { class } => Some(match class {
                NamedClass::BlockCactus => BindingFunction::MaxWithConstant { offset: 1, constant: 2 },
                NamedClass::Chordal | NamedClass::Cluster => BindingFunction::LinearMax { offset: 1 },
            }),
            ClassDescriptor::Excludes { relation, pattern } => {
                let v = dichotomy_with(&parse_graph6(pattern)?, *relation, budget)?;
                v.binding.filter(BindingFunction::is_explicit)
            }
            ClassDescriptor::All => None,
        })
    }

    fn validate(&self) -> Result<()> {
        if let ClassDescriptor::Excludes { pattern, .. } = self {
            parse_graph6(pattern)?;
        }
        Ok(())
    }
}

/// Where candidate instances come from. Random families draw their size
/// from `n_min..=n_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum Family {
    RandomGraph { n_min: usize, n_max: usize, p: f64 },
    RandomChordal { n_min: usize, n_max: usize, max_clique: usize },
    /// Kept only when at most `n_max` vertices result.
    RandomBlockCactus { max_blocks: usize, max_block: usize, n_max: usize },
    /// Disjoint unions of up to `max_parts` cliques of order at most `max_size`.
    CliqueUnion { max_parts: usize, max_size: usize },
    /// Every graph up to isomorphism with at most `n_max` vertices.
    Exhaustive {
        n_max: usize,
        #[serde(default)]
        connected: bool,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GeneratorPlan {
    #[serde(flatten)]
    pub family: Family,
    /// Members wanted from a random family (ignored when exhaustive).
    #[serde(default)]
    pub count: usize,
    /// Candidates drawn before giving up; defaults to `50 * count`.
    #[serde(default)]
    pub max_attempts: Option<usize>,
}

/// Assertions run on every member.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// `tw(G) <= f(omega(G))`.
    Binding,
    /// The binding on random induced subgraphs.
    HereditaryBinding,
    /// `tw(G) = omega(G) - 1`.
    ChordalEquality,
    /// `mwis_k1q` agrees with brute force and the decomposition DP.
    MwisK1q { q: usize },
    /// The robust list-colouring outcome is consistent with brute force.
    RobustListColoring { k: usize, in_class: bool },
    /// The clique lower bound and the approximation ratio.
    ApproxClique { c: f64, eps: f64 },
}

impl Check {
    fn name(&self) -> String {
        match self {
            Check::Binding => "binding".into(),
            Check::HereditaryBinding => "hereditary_binding".into(),
            Check::ChordalEquality => "chordal_equality".into(),
            Check::MwisK1q { q } => format!("mwis_k1q(q={q})"),
            Check::RobustListColoring { k, .. } => format!("robust_list_coloring(k={k})"),
            Check::ApproxClique { c, eps } => format!("approx_clique(c={c},eps={eps})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentSpec {
    pub name: String,
    pub class: ClassDescriptor,
    pub generators: Vec<GeneratorPlan>,
    pub checks: Vec<Check>,
    /// Overrides the class's own binding function.
    #[serde(default)]
    pub binding: Option<BindingFunction>,
    #[serde(default)]
    pub budget: Option<Budget>,
    #[serde(default)]
    pub seed: u64,
    /// Induced subgraphs sampled per instance by `hereditary_binding`.
    #[serde(default = "default_samples")]
    pub hereditary_samples: usize,
}

fn default_samples() -> usize {
    3
}

impl ExperimentSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: ExperimentSpec =
            serde_json::from_str(text).map_err(|e| Error::arg(format!("experiment spec: {e}")))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        self.class.validate()?;
        if let Some(b) = &self.budget {
            if b.search_nodes == 0 || b.treewidth_states == 0 {
                return Err(Error::arg("budgets must be positive"));
            }
        }
        for g in &self.generators {
            let bad = match &g.family {
                Family::RandomGraph { n_min, n_max, p } => n_min > n_max || !(0.0..=1.0).contains(p),
                Family::RandomChordal { n_min, n_max, max_clique } => n_min > n_max || *max_clique == 0,
                Family::RandomBlockCactus { max_blocks, max_block, .. } => *max_blocks == 0 || *max_block < 2,
                Family::CliqueUnion { max_parts, max_size } => *max_parts == 0 || *max_size == 0,
                Family::Exhaustive { n_max, .. } => *n_max > 10,
            };
            if bad {
                return Err(Error::arg(format!("invalid generator plan {:?}", g.family)));
            }
        }
        Ok(())
    }

    fn budget(&self) -> Budget {
        self.budget.unwrap_or_else(Budget::from_env)
    }
}

struct Instance {
    graph: Graph,
    seed: u64,
    member: Result<bool, Refused>,
}

fn candidate(family: &Family, seed: u64) -> Result<Option<Graph>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok(match *family {
        Family::RandomGraph { n_min, n_max, p } => Some(random_graph(rng.gen_range(n_min..=n_max), p, seed)?),
        Family::RandomChordal {
            n_min,
            n_max,
            max_clique,
        } => Some(random_chordal(rng.gen_range(n_min..=n_max), max_clique, seed)?),
        Family::RandomBlockCactus {
            max_blocks,
            max_block,
            n_max,
        } => Some(random_block_cactus(rng.gen_range(1..=max_blocks), max_block, seed)?).filter(|g| g.n() <= n_max),
        Family::CliqueUnion { max_parts, max_size } => {
            let parts = rng.gen_range(1..=max_parts);
            let mut g = Graph::new(0);
            for _ in 0..parts {
                g = g.disjoint_union(&complete(rng.gen_range(1..=max_size)))?;
            }
            Some(g)
        }
        Family::Exhaustive { .. } => None,
    })
}

/// Members of the class from every plan, in a deterministic order.
fn instances(spec: &ExperimentSpec, exec: Exec) -> Result<Vec<Instance>> {
    let budget = spec.budget();
    let mut out = Vec::new();
    for (pi, plan) in spec.generators.iter().enumerate() {
        if let Family::Exhaustive { n_max, connected } = plan.family {
            let levels = if spec.class == ClassDescriptor::All {
                graphs_up_to_iso(n_max, connected)?
            } else {
                // the classes used here are closed under induced subgraphs;
                // refusals keep the graph so they surface as refusal rows
                let class = spec.class.clone();
                hereditary_graphs_up_to_iso(n_max, connected, move |g: &Graph| {
                    class.contains(g, &budget).unwrap_or(true)
                })?
            };
            let graphs: Vec<Graph> = levels.into_iter().flatten().collect();
            let members = par_map(exec, &graphs, |g| spec.class.contains(g, &budget));
            out.extend(graphs.into_iter().zip(members).map(|(graph, member)| Instance {
                graph,
                seed: spec.seed,
                member,
            }));
            continue;
        }
        let attempts = plan.max_attempts.unwrap_or(50 * plan.count.max(1));
        let base = spec.seed.wrapping_add((pi as u64) << 32);
        let mut found = 0;
        let mut next = 0;
        // draw candidates in parallel chunks, keep the first `count` members
        while found < plan.count && next < attempts {
            let chunk = (plan.count - found).max(16).min(attempts - next);
            let seeds: Vec<u64> = (next..next + chunk).map(|i| base.wrapping_add(i as u64)).collect();
            next += chunk;
            let drawn = par_map(exec, &seeds, |&s| -> Result<Option<Instance>> {
                let Some(graph) = candidate(&plan.family, s)? else {
                    return Ok(None);
                };
                let member = spec.class.contains(&graph, &budget);
                Ok(match member {
                    Ok(false) => None,
                    member => Some(Instance { graph, seed: s, member }),
                })
            });
            for inst in drawn {
                if found == plan.count {
                    break;
                }
                if let Some(inst) = inst? {
                    out.push(inst);
                    found += 1;
                }
            }
        }
    }
    Ok(out)
}

/// Samples members of the class and runs every check on each of them.
pub fn verify_binding(spec: &ExperimentSpec, exec: Exec) -> Result<ExperimentReport> {
    spec.validate()?;
    let budget = spec.budget();
    let binding = match &spec.binding {
        Some(b) => Some(b.clone()),
        None => spec.class.default_binding(&budget)?,
    };
    let needs_binding = spec
        .checks
        .iter()
        .any(|c| matches!(c, Check::Binding | Check::HereditaryBinding));
    if needs_binding && !binding.as_ref().is_some_and(BindingFunction::is_explicit) {
        return Err(Error::arg(format!("{}: the class has no explicit binding function", spec.name)));
    }
    let insts = instances(spec, exec)?;
    let rows = par_map(exec, &insts, |inst| {
        run_instance(spec, binding.as_ref(), &budget, inst)
    });
    let mut rows: Vec<InstanceRow> = rows.into_iter().filter(|r| r.member != Some(false)).collect();
    for (i, r) in rows.iter_mut().enumerate() {
        r.index = i;
    }
    Ok(ExperimentReport::from_rows(spec.name.clone(), rows))
}

fn run_instance(spec: &ExperimentSpec, binding: Option<&BindingFunction>, budget: &Budget, inst: &Instance) -> InstanceRow {
    let g = &inst.graph;
    let mut row = InstanceRow::new(0, g);
    row.seed = Some(inst.seed);
    match &inst.member {
        Ok(m) => row.member = Some(*m),
        Err(r) => {
            row.push("membership", Outcome::refused(r));
            return row;
        }
    }
    if row.member == Some(false) {
        return row;
    }
    let (omega, _) = clique_number(g);
    row.omega = Some(omega);
    let tw = match treewidth_exact_with(g, budget) {
        Ok((tw, _)) => Some(tw),
        Err(r) => {
            row.push("treewidth", Outcome::refused(&r));
            None
        }
    };
    row.tw = tw;
    for check in &spec.checks {
        let name = check.name();
        let outcome = match check {
            Check::Binding => match (tw, binding) {
                (Some(tw), Some(f)) => bound_check(f, omega, tw),
                _ => continue,
            },
            Check::HereditaryBinding => {
                let f = binding.expect("checked above");
                hereditary(g, f, inst.seed, spec.hereditary_samples, budget)
            }
            Check::ChordalEquality => match tw {
                Some(tw) => Outcome::check(tw + 1 == omega || g.n() == 0, || {
                    format!("tw = {tw} but omega = {omega}")
                }),
                None => continue,
            },
            Check::MwisK1q { q } => mwis_check(g, *q, inst.seed, budget),
            Check::RobustListColoring { k, in_class } => coloring_check(g, *k, *in_class, inst.seed, budget),
            Check::ApproxClique { c, eps } => {
                match approx_clique_with(g, CliqueBoundFormula::Polynomial { c: *c, eps: *eps }, budget) {
                    Ok(a) => Outcome::check(a.holds(), || {
                        format!(
                            "bound {} (real {:.4}), omega {}, ratio {:.4} vs guarantee {:?}",
                            a.lower_bound, a.real_bound, a.omega, a.realized_ratio, a.guarantee
                        )
                    }),
                    Err(Error::Refused(r)) => Outcome::refused(&r),
                    Err(e) => Outcome::Violation { detail: e.to_string() },
                }
            }
        };
        row.push(name, outcome);
    }
    row
}

fn bound_check(f: &BindingFunction, omega: usize, tw: usize) -> Outcome {
    match f.eval(omega as u64) {
        Some(bound) => Outcome::check(tw as u64 <= bound, || format!("tw = {tw} > f({omega}) = {bound}")),
        None => Outcome::Refused {
            detail: format!("binding {f} cannot be evaluated at {omega}"),
        },
    }
}

fn hereditary(g: &Graph, f: &BindingFunction, seed: u64, samples: usize, budget: &Budget) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for _ in 0..samples {
        let keep: VertexSet = g.vertices().iter().filter(|_| rng.gen_bool(0.5)).collect();
        let sub = g.induced_subgraph(keep).expect("subset of vertices");
        let (omega, _) = clique_number(&sub);
        match treewidth_exact_with(&sub, budget) {
            Ok((tw, _)) => {
                if let o @ Outcome::Violation { .. } = bound_check(f, omega, tw) {
                    return o;
                }
            }
            Err(r) => return Outcome::refused(&r),
        }
    }
    Outcome::Pass
}

pub(crate) fn random_weights(g: &Graph, seed: u64) -> WeightedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0077_e1a5);
    let w = (0..g.n()).map(|_| rng.gen_range(0..=100)).collect();
    WeightedGraph::new(g.clone(), w).expect("one weight per vertex")
}

pub(crate) fn mwis_check(g: &Graph, q: usize, seed: u64, budget: &Budget) -> Outcome {
    let wg = random_weights(g, seed);
    let brute = match mwis_brute(&wg, budget) {
        Ok(s) => s,
        Err(r) => return Outcome::refused(&r),
    };
    let dp = match mwis_k1q(&wg, q) {
        Ok(s) => s,
        Err(e) => return Outcome::Violation { detail: e.to_string() },
    };
    let td = match treewidth_exact_with(g, budget) {
        Ok((_, td)) => td,
        Err(r) => return Outcome::refused(&r),
    };
    let on_td = match mwis_on_td(&wg, &td) {
        Ok(s) => s,
        Err(e) => return Outcome::Violation { detail: e.to_string() },
    };
    // every level below a root has independence number at most q - 1
    let tables = match mwis_k1q_tables(&wg, q) {
        Ok(t) => t,
        Err(e) => return Outcome::Violation { detail: e.to_string() },
    };
    let wide_level = tables.iter().flat_map(|t| t.levels.iter().skip(1)).find(|&&level| {
        let sub = g.induced_subgraph(level).expect("level within range");
        independence_number(&sub).0 >= q
    });
    if let Some(level) = wide_level {
        return Outcome::Violation {
            detail: format!("level {level:?} has an independent {q}-set"),
        };
    }
    let valid = g.is_independent(dp.set) && wg.weight_of(dp.set) == dp.weight;
    Outcome::check(valid && dp.weight == brute.weight && on_td.weight == brute.weight, || {
        format!("k1q {} / td {} / brute {}", dp.weight, on_td.weight, brute.weight)
    })
}

pub(crate) fn random_lists(n: usize, k: usize, seed: u64) -> ColorListAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1157);
    let lists = (0..n).map(|_| (1..=k).filter(|_| rng.gen_bool(0.8)).collect()).collect();
    ColorListAssignment::new(k, lists).expect("colours within range")
}

/// Consistency of the robust pipeline with brute-force list colouring,
/// using the block-cactus binding.
pub(crate) fn coloring_check(g: &Graph, k: usize, in_class: bool, seed: u64, budget: &Budget) -> Outcome {
    let f = BindingFunction::MaxWithConstant { offset: 1, constant: 2 };
    let lists = random_lists(g.n(), k, seed);
    let out = match robust_list_k_coloring_with(g, &lists, k, &f, budget) {
        Ok(o) => o,
        Err(e) => return Outcome::Violation { detail: e.to_string() },
    };
    let colorable = brute_list_coloring(g, &lists).is_some();
    let ceiling = (1..=k as u64).filter_map(|i| f.eval(i)).max().unwrap_or(0);
    match out {
        RobustOutcome::Colored { coloring } => {
            let ok = lists.check(g, &coloring);
            Outcome::check(ok.is_ok() && colorable, || format!("coloured output invalid: {ok:?}"))
        }
        RobustOutcome::NotColorable { clique } => {
            let clique_ok = clique.is_none_or(|c| c.len() == k + 1 && g.is_clique(c));
            Outcome::check(!colorable && clique_ok, || "reported not colourable".into())
        }
        RobustOutcome::NotInClass { .. } => match treewidth_exact_with(g, budget) {
            Ok((tw, _)) => Outcome::check(!in_class && tw as u64 > ceiling, || {
                format!("NotInClass with tw = {tw} <= {ceiling}")
            }),
            Err(r) => Outcome::refused(&r),
        },
        RobustOutcome::Refused { what, limit } => Outcome::Refused {
            detail: format!("{what}: budget {limit}"),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_json_round_trip() {
        let text = r#"{
            "name": "cactus",
            "class": {"type": "named", "class": "block_cactus"},
            "generators": [{"family": "random_block_cactus", "max_blocks": 4, "max_block": 4, "n_max": 12, "count": 20}],
            "checks": ["binding", "hereditary_binding", {"mwis_k1q": {"q": 3}}],
            "seed": 7
        }"#;
        let spec = ExperimentSpec::from_json(text).unwrap();
        assert_eq!(spec.hereditary_samples, 3);
        let again = ExperimentSpec::from_json(&serde_json::to_string(&spec).unwrap()).unwrap();
        assert_eq!(again, spec);
        assert!(ExperimentSpec::from_json(r#"{"name":"x","class":{"type":"all"},"generators":[],"checks":["nope"]}"#).is_err());
    }

    #[test]
    fn small_binding_run_is_deterministic() {
        let spec = ExperimentSpec {
            name: "cactus".into(),
            class: ClassDescriptor::Named {
                class: NamedClass::BlockCactus,
            },
            generators: vec![GeneratorPlan {
                family: Family::RandomBlockCactus {
                    max_blocks: 4,
                    max_block: 4,
                    n_max: 12,
                },
                count: 30,
                max_attempts: None,
            }],
            checks: vec![Check::Binding, Check::HereditaryBinding],
            binding: None,
            budget: None,
            seed: 3,
            hereditary_samples: 2,
        };
        let a = verify_binding(&spec, Exec::Parallel).unwrap();
        let b = verify_binding(&spec, Exec::Sequential).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rows.len(), 30);
        assert!(a.passed(false));
    }

    #[test]
    fn violations_are_reported_with_graph6() {
        // a false binding: tw <= 0 fails on any graph with an edge
        let spec = ExperimentSpec {
            name: "false".into(),
            class: ClassDescriptor::All,
            generators: vec![GeneratorPlan {
                family: Family::Exhaustive { n_max: 3, connected: true },
                count: 0,
                max_attempts: None,
            }],
            checks: vec![Check::Binding],
            binding: Some(BindingFunction::Constant { value: Some(0) }),
            budget: None,
            seed: 0,
            hereditary_samples: 0,
        };
        let rep = verify_binding(&spec, Exec::Sequential).unwrap();
        assert_eq!(rep.summary.violations, 3);
        let (row, _) = rep.violations().next().unwrap();
        let g = parse_graph6(&row.graph6).unwrap();
        assert!(treewidth_exact_with(&g, &Budget::default()).unwrap().0 > 0);
    }
}
