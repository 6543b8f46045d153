//! One line per acceptance criterion; the test fails if any criterion does.

use std::time::Instant;

use twomega::harness::{run_suite, ExperimentReport, SuiteOptions};
use twomega::{Budget, Graph};
use twomega::exec::Exec;
use twomega::graph::parse_graph6;
use twomega::solvers::approx_clique;

struct Criterion {
    id: usize,
    title: &'static str,
    suite: &'static str,
    /// Extra assertions on top of zero violations and zero refusals.
    extra: fn(&ExperimentReport) -> Result<(), String>,
}

fn none(_: &ExperimentReport) -> Result<(), String> {
    Ok(())
}

fn rows_with(rep: &ExperimentReport, prefix: &str) -> usize {
    rep.rows
        .iter()
        .filter(|r| r.checks.iter().any(|c| c.check.starts_with(prefix)))
        .count()
}

fn at_least(rep: &ExperimentReport, prefix: &str, n: usize) -> Result<(), String> {
    let got = rows_with(rep, prefix);
    if got >= n {
        Ok(())
    } else {
        Err(format!("only {got} instances for {prefix}, wanted {n}"))
    }
}

fn chordal_extra(rep: &ExperimentReport) -> Result<(), String> {
    // 500 random members plus every chordal graph on at most 7 vertices
    // (1 + 1 + 2 + 4 + 10 + 27 + 94 + 393 by graph order, including the null graph)
    at_least(rep, "chordal_equality", 500 + 532)
}

fn binding_extra(rep: &ExperimentReport) -> Result<(), String> {
    at_least(rep, "block_cactus/binding", 500)?;
    at_least(rep, "p3_free/binding", 200)?;
    at_least(rep, "edgeless_3_free/binding", 150)?;
    at_least(rep, "edgeless_4_free/binding", 150)?;
    at_least(rep, "k23_im_free/binding", 100)
}

fn unbounded_extra(rep: &ExperimentReport) -> Result<(), String> {
    let tws = |part: &str| -> Vec<usize> {
        rep.rows
            .iter()
            .filter(|r| r.checks.iter().any(|c| c.check.starts_with(part)))
            .map(|r| r.tw.unwrap_or(0))
            .collect()
    };
    let frozen: [(&str, &[usize]); 4] = [
        ("unboundedness/balanced_bipartite/", &[2, 3, 4, 5]),
        ("unboundedness/wall/", &[2, 3, 4]),
        ("unboundedness/subdivided_wall(1)/", &[2, 3, 4]),
        ("unboundedness/line_of_subdivided_wall(1)/", &[2, 4, 5]),
    ];
    for (part, want) in frozen {
        let got = tws(part);
        if got != want {
            return Err(format!("{part}: tw {got:?}, expected {want:?}"));
        }
    }
    Ok(())
}

fn mwis_extra(rep: &ExperimentReport) -> Result<(), String> {
    at_least(rep, "exhaustive/", 1)?;
    at_least(rep, "random/", 1000)?;
    let max_n = rep.rows.iter().filter(|r| r.checks[0].check.starts_with("exhaustive/")).map(|r| r.n).max();
    if max_n != Some(9) {
        return Err(format!("exhaustive part reaches n = {max_n:?}"));
    }
    Ok(())
}

fn coloring_extra(rep: &ExperimentReport) -> Result<(), String> {
    at_least(rep, "in_class/", 100)?;
    at_least(rep, "out_of_class/", 100)
}

fn approx_extra(rep: &ExperimentReport) -> Result<(), String> {
    at_least(rep, "approx_clique", 200)?;
    // recompute both sides of the ratio inequality for every instance
    for r in &rep.rows {
        let g: Graph = parse_graph6(&r.graph6).map_err(|e| e.to_string())?;
        let a = approx_clique(&g, 1.0, 0.5).map_err(|e| e.to_string())?;
        let omega = a.omega as f64;
        let b = ((a.treewidth + 1) as f64).powf(1.0 / 1.5);
        if a.lower_bound as usize > a.omega || (omega > 0.0 && omega / b > omega.powf(1.0 - 1.0 / 1.5) + 1e-9) {
            return Err(format!("{}: omega {omega}, bound {b}", r.graph6));
        }
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria = [
        Criterion { id: 1, title: "chordal equality tw = omega - 1", suite: "chordal-equality", extra: chordal_extra },
        Criterion { id: 2, title: "block cactus triple equivalence", suite: "block-cactus-equivalence", extra: none },
        Criterion { id: 3, title: "chordality triple equivalence", suite: "chordality-equivalence", extra: none },
        Criterion { id: 4, title: "binding suites", suite: "binding", extra: binding_extra },
        Criterion { id: 5, title: "unboundedness witnesses", suite: "unboundedness", extra: unbounded_extra },
        Criterion { id: 6, title: "Hadwiger bounds", suite: "hadwiger", extra: none },
        Criterion { id: 7, title: "MWIS oracle equivalence", suite: "mwis", extra: mwis_extra },
        Criterion { id: 8, title: "robust list 3-colouring", suite: "list-coloring", extra: coloring_extra },
        Criterion { id: 9, title: "clique approximation guarantee", suite: "approx-clique", extra: approx_extra },
        Criterion { id: 10, title: "separator lemma, both directions", suite: "separators", extra: none },
        Criterion { id: 11, title: "dichotomy spot table", suite: "table1", extra: none },
    ];
    let opts = SuiteOptions {
        budget: Budget::default(),
        exec: Exec::Parallel,
        seed: 0,
    };
    let mut failed = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let verdict = match run_suite(c.suite, &opts) {
            Ok(rep) => {
                let s = &rep.summary;
                let base = if rep.passed(false) {
                    Ok(())
                } else {
                    Err(format!("{} violations, {} refusals", s.violations, s.refusals))
                };
                base.and_then(|_| (c.extra)(&rep))
                    .map(|_| format!("{} instances, {} checks passed", s.instances, s.passes))
            }
            Err(e) => Err(e.to_string()),
        };
        let secs = start.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {:>2} PASS  {} [{}] ({detail}, {secs:.1}s)", c.id, c.title, c.suite),
            Err(why) => {
                println!("criterion {:>2} FAIL  {} [{}] ({why}, {secs:.1}s)", c.id, c.title, c.suite);
                failed.push(c.id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
