use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use twomega::budget::{Budget, BUDGET_ENV};
use twomega::classes::{
    block_cactus_violation, chordality, dichotomy_with, finite_set_induced_subgraph_dichotomy, in_class_s,
    is_edgeless, is_planar, is_subcubic, k1q_induced_minor, BindingFunction,
};
use twomega::containment::{contains_with, Relation};
use twomega::exec::{with_jobs, Exec};
use twomega::generators::{
    claw, complete, complete_bipartite, complete_minus_edge, cycle, edgeless, elementary_wall, k2q_plus, path,
    q_subdivided_wall, random_bipartite, random_block_cactus, random_chordal, random_graph, star, subdivided_claw,
    wheel4, WallSpec,
};
use twomega::graph::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6, scale_rational_weights};
use twomega::harness::{run_suite, verify_binding, ExperimentReport, ExperimentSpec, SuiteOptions, SUITES};
use twomega::invariants::{
    chromatic_number_with, clique_number, degeneracy, hadwiger_number_with, independence_number,
    minimal_separators_with, treewidth_bounds, treewidth_exact_with,
};
use twomega::solvers::{
    approx_clique_with, mwis_k1q, robust_list_k_coloring_with, ColorListAssignment, CliqueBoundFormula,
};
use twomega::{Error, Graph, WeightedGraph};

#[derive(Parser)]
#[command(name = "twomega", version, about = "Treewidth versus clique number on small graphs")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Global {
    /// Seed for random generators and sampled suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads (0 = all cores, 1 = sequential).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, env = BUDGET_ENV)]
    budget: Option<u64>,
    /// State budget for the exact treewidth search.
    #[arg(long, global = true)]
    tw_budget: Option<u64>,
}

impl Global {
    fn budget(&self) -> Budget {
        let mut b = Budget::from_env();
        if let Some(n) = self.budget {
            b.search_nodes = n;
        }
        if let Some(n) = self.tw_budget {
            b.treewidth_states = n;
        }
        b
    }

    fn exec(&self) -> Exec {
        if self.jobs == 1 {
            Exec::Sequential
        } else {
            Exec::Parallel
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a named or random graph as graph6.
    Gen {
        /// complete, edgeless, path, cycle, star, claw, complete-bipartite,
        /// complete-minus-edge, k2q-plus, wheel4, subdivided-claw, wall,
        /// line-of-wall, random, random-bipartite, random-chordal,
        /// random-block-cactus
        family: String,
        params: Vec<String>,
        /// Emit an edge list instead of graph6.
        #[arg(long)]
        edge_list: bool,
    },
    /// Compute an invariant with its witness.
    Invariant {
        /// treewidth, tw-bounds, clique, independence, chromatic, hadwiger,
        /// separators, degeneracy
        name: String,
        /// Graph as graph6 or edge list; read from stdin when absent.
        #[arg(long)]
        graph: Option<String>,
    },
    /// Test whether the pattern is contained in the host.
    Contains {
        #[arg(long, value_parser = parse_relation)]
        relation: Relation,
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: Option<String>,
    },
    /// Bounded/unbounded verdict for excluding a pattern.
    Classify {
        #[arg(long, value_parser = parse_relation, required_unless_present = "finite")]
        relation: Option<Relation>,
        #[arg(long, required_unless_present = "finite")]
        pattern: Option<String>,
        /// Comma-separated graph6 patterns excluded as induced subgraphs.
        #[arg(long, conflicts_with_all = ["relation", "pattern"])]
        finite: Option<String>,
    },
    /// Test membership in a named class.
    Recognize {
        /// chordal, block-cactus, s, subcubic, planar, edgeless, k1q-free
        class: String,
        #[arg(long)]
        graph: Option<String>,
        #[arg(long, default_value_t = 3)]
        q: usize,
    },
    /// Run one of the solvers.
    Solve {
        #[command(subcommand)]
        solver: Solver,
    },
    /// Run a built-in suite or a JSON experiment spec.
    Verify {
        #[arg(long, conflicts_with = "spec", required_unless_present = "spec")]
        suite: Option<String>,
        /// Path to an ExperimentSpec JSON file.
        #[arg(long)]
        spec: Option<String>,
        /// Refusals do not fail the run.
        #[arg(long)]
        allow_refusals: bool,
        /// Print the CSV summary instead of JSON lines.
        #[arg(long)]
        csv: bool,
    },
}

#[derive(Subcommand)]
enum Solver {
    /// Maximum weight independent set on K_{1,q}-induced-minor-free graphs.
    MwisK1q {
        #[arg(long, default_value_t = 3)]
        q: usize,
        /// Comma-separated nonnegative rationals (default: all 1).
        #[arg(long)]
        weights: Option<String>,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Robust list k-colouring for a class with the given binding.
    ListColor {
        #[arg(long)]
        k: usize,
        /// JSON array of colour lists (default: every list is 1..=k).
        #[arg(long)]
        lists: Option<String>,
        /// JSON binding function (default: block cactus, max{k-1,2}).
        #[arg(long)]
        binding: Option<String>,
        #[arg(long)]
        graph: Option<String>,
    },
    /// Clique lower bound from the treewidth of a (tw, omega)-bounded graph.
    ApproxClique {
        #[arg(long, default_value_t = 1.0)]
        c: f64,
        #[arg(long, default_value_t = 0.5)]
        eps: f64,
        #[arg(long)]
        graph: Option<String>,
    },
}

fn parse_relation(s: &str) -> Result<Relation, String> {
    let norm = s.replace('-', "_");
    Relation::ALL
        .into_iter()
        .find(|r| r.name() == norm)
        .ok_or_else(|| format!("unknown relation {s:?}"))
}

fn read_graph(arg: Option<&str>) -> Result<Graph> {
    let text = match arg {
        Some(t) => t.to_string(),
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            buf
        }
    };
    let t = text.trim();
    // graph6 is a single token; anything longer is an edge list
    let g = if t.split_ascii_whitespace().count() > 1 {
        parse_edge_list(t)?
    } else {
        parse_graph6(t)?
    };
    Ok(g)
}

fn encode(g: &Graph) -> String {
    emit_graph6(g).unwrap_or_else(|_| emit_edge_list(g))
}

fn num<T: std::str::FromStr>(params: &[String], i: usize, what: &str) -> Result<T> {
    params
        .get(i)
        .ok_or_else(|| anyhow!("missing parameter {what}"))?
        .parse()
        .map_err(|_| anyhow!("parameter {what} is not a number: {:?}", params[i]))
}

fn generate(family: &str, p: &[String], seed: u64) -> Result<Graph> {
    Ok(match family {
        "complete" => complete(num(p, 0, "n")?),
        "edgeless" => edgeless(num(p, 0, "n")?),
        "path" => path(num(p, 0, "n")?),
        "cycle" => cycle(num(p, 0, "n")?)?,
        "star" => star(num(p, 0, "q")?),
        "claw" => claw(),
        "complete-bipartite" => complete_bipartite(num(p, 0, "p")?, num(p, 1, "q")?),
        "complete-minus-edge" => complete_minus_edge(num(p, 0, "q")?)?,
        "k2q-plus" => k2q_plus(num(p, 0, "q")?)?,
        "wheel4" => wheel4(),
        "subdivided-claw" => subdivided_claw(num(p, 0, "a")?, num(p, 1, "b")?, num(p, 2, "c")?)?,
        "wall" => {
            let q = if p.len() > 2 { num(p, 2, "subdivisions")? } else { 0 };
            q_subdivided_wall(&WallSpec::new(num(p, 0, "rows")?, num(p, 1, "columns")?, q))?
        }
        "line-of-wall" => {
            let spec = WallSpec::new(num(p, 0, "rows")?, num(p, 1, "columns")?, num(p, 2, "subdivisions")?);
            q_subdivided_wall(&spec)?.line_graph()?
        }
        "elementary-wall" => elementary_wall(num(p, 0, "rows")?, num(p, 1, "columns")?)?,
        "random" => random_graph(num(p, 0, "n")?, num(p, 1, "p")?, seed)?,
        "random-bipartite" => random_bipartite(num(p, 0, "a")?, num(p, 1, "b")?, num(p, 2, "p")?, seed)?,
        "random-chordal" => random_chordal(num(p, 0, "n")?, num(p, 1, "max_clique")?, seed)?,
        "random-block-cactus" => random_block_cactus(num(p, 0, "blocks")?, num(p, 1, "max_block")?, seed)?,
        other => bail!("unknown family {other:?}"),
    })
}

fn refused(e: twomega::Refused) -> Value {
    json!({"refused": {"what": e.what, "limit": e.limit}})
}

fn invariant(name: &str, g: &Graph, budget: &Budget) -> Result<Value> {
    Ok(match name {
        "treewidth" => match treewidth_exact_with(g, budget) {
            Ok((tw, td)) => json!({"invariant": name, "value": tw, "decomposition": td}),
            Err(r) => refused(r),
        },
        "tw-bounds" => {
            let (lo, hi) = treewidth_bounds(g);
            json!({"invariant": name, "lower": lo, "upper": hi})
        }
        "clique" => {
            let (w, c) = clique_number(g);
            json!({"invariant": name, "value": w, "clique": c})
        }
        "independence" => {
            let (a, s) = independence_number(g);
            json!({"invariant": name, "value": a, "set": s})
        }
        "chromatic" => match chromatic_number_with(g, budget) {
            Ok((chi, col)) => json!({"invariant": name, "value": chi, "coloring": col}),
            Err(r) => refused(r),
        },
        "hadwiger" => match hadwiger_number_with(g, budget) {
            Ok(eta) => json!({"invariant": name, "value": eta}),
            Err(r) => refused(r),
        },
        "separators" => match minimal_separators_with(g, budget) {
            Ok(s) => json!({"invariant": name, "value": s.len(), "separators": s}),
            Err(r) => refused(r),
        },
        "degeneracy" => json!({"invariant": name, "value": degeneracy(g)}),
        other => bail!("unknown invariant {other:?}"),
    })
}

fn recognize(class: &str, g: &Graph, q: usize, budget: &Budget) -> Result<Value> {
    Ok(match class {
        "chordal" => {
            let c = chordality(g);
            json!({"class": class, "member": c.is_chordal(), "witness": c})
        }
        "block-cactus" => {
            let v = block_cactus_violation(g);
            json!({"class": class, "member": v.is_none(), "violating_block": v})
        }
        "s" => json!({"class": class, "member": in_class_s(g)}),
        "subcubic" => json!({"class": class, "member": is_subcubic(g)}),
        "planar" => json!({"class": class, "member": is_planar(g)}),
        "edgeless" => json!({"class": class, "member": is_edgeless(g)}),
        "k1q-free" => match k1q_induced_minor(g, q, budget) {
            Ok(w) => json!({"class": class, "q": q, "member": w.is_none(), "witness": w}),
            Err(r) => refused(r),
        },
        other => bail!("unknown class {other:?}"),
    })
}

fn solve(solver: &Solver, budget: &Budget) -> Result<Value> {
    match solver {
        Solver::MwisK1q { q, weights, graph } => {
            let g = read_graph(graph.as_deref())?;
            let (w, scale) = match weights {
                Some(text) => {
                    let items: Vec<&str> = text.split(',').collect();
                    scale_rational_weights(&items)?
                }
                None => (vec![1; g.n()], 1),
            };
            let wg = WeightedGraph::new(g, w)?;
            let sol = mwis_k1q(&wg, *q)?;
            Ok(json!({"weight": sol.weight, "scale": scale, "set": sol.set}))
        }
        Solver::ListColor { k, lists, binding, graph } => {
            let g = read_graph(graph.as_deref())?;
            let lists = match lists {
                Some(text) => ColorListAssignment::new(*k, serde_json::from_str(text).context("parsing --lists")?)?,
                None => ColorListAssignment::full(g.n(), *k),
            };
            let f: BindingFunction = match binding {
                Some(text) => serde_json::from_str(text).context("parsing --binding")?,
                None => BindingFunction::MaxWithConstant { offset: 1, constant: 2 },
            };
            let out = robust_list_k_coloring_with(&g, &lists, *k, &f, budget)?;
            Ok(serde_json::to_value(out)?)
        }
        Solver::ApproxClique { c, eps, graph } => {
            let g = read_graph(graph.as_deref())?;
            let a = approx_clique_with(&g, CliqueBoundFormula::Polynomial { c: *c, eps: *eps }, budget)?;
            Ok(serde_json::to_value(a)?)
        }
    }
}

fn report_out(rep: &ExperimentReport, csv: bool) {
    if csv {
        print!("{}", rep.to_csv_summary());
    } else {
        print!("{}", rep.to_json_lines());
    }
    let s = &rep.summary;
    eprintln!(
        "{}: {} instances, {} passes, {} violations, {} refusals",
        rep.name, s.instances, s.passes, s.violations, s.refusals
    );
    for n in &s.notes {
        eprintln!("note: {n}");
    }
    for (row, c) in rep.violations().take(10) {
        eprintln!("violation: {} {} {:?}", row.graph6, c.check, c.outcome);
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let g = &cli.global;
    let budget = g.budget();
    let print = |v: Value| println!("{v}");
    match &cli.cmd {
        Cmd::Gen { family, params, edge_list } => {
            let h = generate(family, params, g.seed)?;
            if *edge_list {
                print!("{}", emit_edge_list(&h));
            } else {
                println!("{}", encode(&h));
            }
        }
        Cmd::Invariant { name, graph } => print(invariant(name, &read_graph(graph.as_deref())?, &budget)?),
        Cmd::Contains { relation, pattern, host } => {
            let h = read_graph(Some(pattern))?;
            let host = read_graph(host.as_deref())?;
            match contains_with(&h, &host, *relation, &budget) {
                Ok(w) => print(json!({"relation": relation, "contained": w.is_some(), "witness": w})),
                Err(r) => print(refused(r)),
            }
        }
        Cmd::Classify { relation, pattern, finite } => {
            if let Some(list) = finite {
                let hs = list.split(',').map(|s| read_graph(Some(s))).collect::<Result<Vec<_>>>()?;
                match finite_set_induced_subgraph_dichotomy(&hs, &budget) {
                    Ok(v) => print(serde_json::to_value(v)?),
                    Err(r) => print(refused(r)),
                }
            } else {
                let h = read_graph(pattern.as_deref())?;
                let rel = relation.expect("required by clap");
                match dichotomy_with(&h, rel, &budget) {
                    Ok(v) => print(serde_json::to_value(v)?),
                    Err(Error::Refused(r)) => print(refused(r)),
                    Err(e) => return Err(e.into()),
                }
            }
        }
        Cmd::Recognize { class, graph, q } => print(recognize(class, &read_graph(graph.as_deref())?, *q, &budget)?),
        Cmd::Solve { solver } => print(solve(solver, &budget)?),
        Cmd::Verify {
            suite,
            spec,
            allow_refusals,
            csv,
        } => {
            let rep = match (suite, spec) {
                (Some(name), _) => {
                    if name != "all" && !SUITES.contains(&name.as_str()) {
                        bail!("unknown suite {name:?}; expected one of {} or all", SUITES.join(", "));
                    }
                    let opts = SuiteOptions {
                        budget,
                        exec: g.exec(),
                        seed: g.seed,
                    };
                    run_suite(name, &opts)?
                }
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
                    let mut spec = ExperimentSpec::from_json(&text)?;
                    if g.budget.is_some() || g.tw_budget.is_some() || spec.budget.is_none() {
                        spec.budget = Some(budget);
                    }
                    verify_binding(&spec, g.exec())?
                }
                (None, None) => unreachable!("clap requires one of --suite or --spec"),
            };
            report_out(&rep, *csv);
            if !rep.passed(*allow_refusals) {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = cli.global.jobs;
    match with_jobs(jobs, || run(cli)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
