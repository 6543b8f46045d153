//! Named built-in suites, one per acceptance property, plus `table1` and
//! `all`.

use serde::{Deserialize, Serialize};

use super::report::{ExperimentReport, InstanceRow, Outcome};
use super::spec::{verify_binding, Check, ClassDescriptor, ExperimentSpec, Family, GeneratorPlan, NamedClass};
use super::verify::{
    verify_equivalence, verify_hadwiger, verify_separator_bound, verify_unboundedness, Equivalence, UnboundedFamily,
};
use crate::budget::Budget;
use crate::classes::{dichotomy_with, BindingFunction};
use crate::containment::Relation;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::generators::{
    claw, complete, complete_bipartite, complete_minus_edge, cycle, edgeless, k2q_plus, path, subdivided_claw,
    wheel4,
};
use crate::graph::{emit_graph6, Graph};

/// Suite names in run order; `all` runs every one of them.
pub const SUITES: [&str; 11] = [
    "chordal-equality",
    "block-cactus-equivalence",
    "chordality-equivalence",
    "binding",
    "unboundedness",
    "hadwiger",
    "mwis",
    "list-coloring",
    "approx-clique",
    "separators",
    "table1",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    pub budget: Budget,
    pub exec: Exec,
    /// Added to every built-in seed.
    pub seed: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            budget: Budget::from_env(),
            exec: Exec::Parallel,
            seed: 0,
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<ExperimentReport> {
    let (b, x) = (&opts.budget, opts.exec);
    let rep = match name {
        "chordal-equality" => chordal_equality(opts)?,
        "block-cactus-equivalence" => verify_equivalence(Equivalence::BlockCactus, 7, b, x)?,
        "chordality-equivalence" => verify_equivalence(Equivalence::Chordality, 7, b, x)?,
        "binding" => binding(opts)?,
        "unboundedness" => unboundedness(opts)?,
        "hadwiger" => verify_hadwiger(7, b, x)?,
        "mwis" => mwis(opts)?,
        "list-coloring" => list_coloring(opts)?,
        "approx-clique" => approx_clique(opts)?,
        "separators" => verify_separator_bound(3, 8, b, x)?,
        "table1" => table1(b)?,
        "all" => {
            let parts = SUITES.iter().map(|s| run_suite(s, opts)).collect::<Result<Vec<_>>>()?;
            return Ok(ExperimentReport::merge("all", parts));
        }
        other => {
            return Err(Error::arg(format!(
                "unknown suite {other:?}; expected one of {} or all",
                SUITES.join(", ")
            )))
        }
    };
    Ok(ExperimentReport {
        name: name.to_string(),
        ..rep
    })
}

fn g6(g: &Graph) -> String {
    emit_graph6(g).expect("fixtures are small")
}

fn plan(family: Family, count: usize, max_attempts: Option<usize>) -> GeneratorPlan {
    GeneratorPlan {
        family,
        count,
        max_attempts,
    }
}

fn spec(name: &str, class: ClassDescriptor, generators: Vec<GeneratorPlan>, checks: Vec<Check>, opts: &SuiteOptions, seed: u64) -> ExperimentSpec {
    ExperimentSpec {
        name: name.into(),
        class,
        generators,
        checks,
        binding: None,
        budget: Some(opts.budget),
        seed: seed.wrapping_add(opts.seed),
        hereditary_samples: 3,
    }
}

fn named(class: NamedClass) -> ClassDescriptor {
    ClassDescriptor::Named { class }
}

fn excludes(relation: Relation, h: &Graph) -> ClassDescriptor {
    ClassDescriptor::Excludes {
        relation,
        pattern: g6(h),
    }
}

fn chordal_equality(opts: &SuiteOptions) -> Result<ExperimentReport> {
    let s = spec(
        "chordal",
        named(NamedClass::Chordal),
        vec![
            plan(Family::RandomChordal { n_min: 1, n_max: 18, max_clique: 6 }, 500, None),
            plan(Family::Exhaustive { n_max: 7, connected: false }, 0, None),
        ],
        vec![Check::ChordalEquality, Check::Binding],
        opts,
        101,
    );
    verify_binding(&s, opts.exec)
}

fn binding(opts: &SuiteOptions) -> Result<ExperimentReport> {
    let mut parts = Vec::new();
    let cactus = spec(
        "block_cactus",
        named(NamedClass::BlockCactus),
        vec![plan(Family::RandomBlockCactus { max_blocks: 6, max_block: 5, n_max: 14 }, 500, None)],
        vec![Check::Binding, Check::HereditaryBinding],
        opts,
        201,
    );
    parts.push(verify_binding(&cactus, opts.exec)?);
    let mut p3 = spec(
        "p3_free",
        excludes(Relation::InducedSubgraph, &path(3)),
        vec![plan(Family::CliqueUnion { max_parts: 4, max_size: 6 }, 200, None)],
        vec![Check::Binding, Check::HereditaryBinding],
        opts,
        202,
    );
    p3.binding = Some(BindingFunction::LinearMax { offset: 1 });
    parts.push(verify_binding(&p3, opts.exec)?);
    for order in [3usize, 4] {
        let mut e = spec(
            &format!("edgeless_{order}_free"),
            excludes(Relation::InducedSubgraph, &edgeless(order)),
            vec![plan(Family::RandomGraph { n_min: 4, n_max: 12, p: 0.75 }, 150, Some(20_000))],
            vec![Check::Binding, Check::HereditaryBinding],
            opts,
            203 + order as u64,
        );
        e.binding = Some(BindingFunction::RamseyBased { order: order as u64 });
        parts.push(verify_binding(&e, opts.exec)?);
    }
    let mut k23 = spec(
        "k23_im_free",
        excludes(Relation::InducedMinor, &complete_bipartite(2, 3)),
        vec![
            plan(Family::Exhaustive { n_max: 8, connected: false }, 0, None),
            plan(Family::RandomGraph { n_min: 9, n_max: 14, p: 0.2 }, 100, Some(20_000)),
        ],
        vec![Check::Binding],
        opts,
        210,
    );
    k23.binding = Some(BindingFunction::SkodinisRamsey { q: 3 });
    parts.push(verify_binding(&k23, opts.exec)?);
    Ok(ExperimentReport::merge("binding", parts))
}

fn unboundedness(opts: &SuiteOptions) -> Result<ExperimentReport> {
    let runs = [
        (UnboundedFamily::BalancedBipartite, vec![2, 3, 4, 5]),
        (UnboundedFamily::Wall, vec![1, 2, 3]),
        (UnboundedFamily::SubdividedWall { q: 1 }, vec![1, 2, 3]),
        (UnboundedFamily::LineOfSubdividedWall { q: 1 }, vec![1, 2, 3]),
    ];
    let parts = runs
        .iter()
        .map(|(f, sizes)| verify_unboundedness(*f, sizes, &opts.budget, opts.exec))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentReport::merge("unboundedness", parts))
}

fn mwis(opts: &SuiteOptions) -> Result<ExperimentReport> {
    let claw_free = excludes(Relation::InducedMinor, &claw());
    let exhaustive = spec(
        "exhaustive",
        claw_free.clone(),
        vec![plan(Family::Exhaustive { n_max: 9, connected: true }, 0, None)],
        vec![Check::MwisK1q { q: 3 }],
        opts,
        301,
    );
    let random = spec(
        "random",
        claw_free,
        vec![
            plan(Family::RandomGraph { n_min: 6, n_max: 14, p: 0.7 }, 500, Some(50_000)),
            plan(Family::RandomChordal { n_min: 6, n_max: 14, max_clique: 8 }, 500, Some(200_000)),
        ],
        vec![Check::MwisK1q { q: 3 }],
        opts,
        302,
    );
    Ok(ExperimentReport::merge(
        "mwis",
        vec![verify_binding(&exhaustive, opts.exec)?, verify_binding(&random, opts.exec)?],
    ))
}

fn list_coloring(opts: &SuiteOptions) -> Result<ExperimentReport> {
    let inside = spec(
        "in_class",
        named(NamedClass::BlockCactus),
        vec![plan(Family::RandomBlockCactus { max_blocks: 6, max_block: 4, n_max: 14 }, 100, None)],
        vec![Check::RobustListColoring { k: 3, in_class: true }],
        opts,
        401,
    );
    let outside = spec(
        "out_of_class",
        ClassDescriptor::All,
        vec![plan(Family::RandomGraph { n_min: 6, n_max: 12, p: 0.35 }, 100, None)],
        vec![Check::RobustListColoring { k: 3, in_class: false }],
        opts,
        402,
    );
    Ok(ExperimentReport::merge(
        "list-coloring",
        vec![verify_binding(&inside, opts.exec)?, verify_binding(&outside, opts.exec)?],
    ))
}

fn approx_clique(opts: &SuiteOptions) -> Result<ExperimentReport> {
    let s = spec(
        "chordal",
        named(NamedClass::Chordal),
        vec![plan(Family::RandomChordal { n_min: 1, n_max: 18, max_clique: 8 }, 200, None)],
        vec![Check::ApproxClique { c: 1.0, eps: 0.5 }],
        opts,
        501,
    );
    verify_binding(&s, opts.exec)
}

/// Golden verdicts, one flag per relation in the order subgraph, induced
/// subgraph, topological minor, induced topological minor, minor, induced
/// minor (`1` = bounded).
pub fn table1_fixtures() -> Result<Vec<(&'static str, Graph, [bool; 6])>> {
    let b = |s: &str| {
        let mut out = [false; 6];
        for (i, c) in s.bytes().enumerate() {
            out[i] = c == b'1';
        }
        out
    };
    Ok(vec![
        ("P3", path(3), b("111111")),
        ("claw", claw(), b("101011")),
        ("C3", complete(3), b("001111")),
        ("C4", cycle(4)?, b("001111")),
        ("K4-", complete_minus_edge(4)?, b("001111")),
        ("K4", complete(4), b("001011")),
        ("W4", wheel4(), b("000011")),
        ("K5-", complete_minus_edge(5)?, b("000011")),
        ("K5", complete(5), b("000000")),
        ("K23", complete_bipartite(2, 3), b("001011")),
        ("K23+", k2q_plus(3)?, b("000011")),
        ("K33", complete_bipartite(3, 3), b("000000")),
        ("P7", path(7), b("101010")),
        ("S211", subdivided_claw(2, 1, 1)?, b("101010")),
        ("S222", subdivided_claw(2, 2, 2)?, b("101010")),
        ("S321", subdivided_claw(3, 2, 1)?, b("101010")),
        ("E0", edgeless(0), b("111111")),
        ("E1", edgeless(1), b("111111")),
        ("E2", edgeless(2), b("111111")),
        ("E3", edgeless(3), b("111111")),
        ("E4", edgeless(4), b("111111")),
    ])
}

/// One part per relation, one row per fixture.
pub fn table1(budget: &Budget) -> Result<ExperimentReport> {
    let fixtures = table1_fixtures()?;
    let mut parts = Vec::new();
    for (col, rel) in Relation::ALL.into_iter().enumerate() {
        let mut rows = Vec::new();
        for (i, (label, h, golden)) in fixtures.iter().enumerate() {
            let mut row = InstanceRow::new(i, h);
            let expected = golden[col];
            let outcome = match dichotomy_with(h, rel, budget) {
                Ok(v) => Outcome::check(v.bounded == expected, || {
                    format!("{label}: bounded = {}, golden {expected}", v.bounded)
                }),
                Err(Error::Refused(r)) => Outcome::refused(&r),
                Err(e) => Outcome::Violation {
                    detail: format!("{label}: {e}"),
                },
            };
            row.push(format!("dichotomy[{label}]"), outcome);
            rows.push(row);
        }
        parts.push(ExperimentReport::from_rows(rel.name(), rows));
    }
    Ok(ExperimentReport::merge("table1", parts))
}
