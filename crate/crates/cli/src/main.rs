use std::fs;
use std::path::PathBuf;
use std::process::exit;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::json;

use squarepaint_core::circulate::{
    count_circulations, diff, diff_restricted, f1_closed_form, g_closed_form, known_orientation_ids,
    lemma_orientation, parse_arc_list, render_arc_list, search_at_orientation,
    verify_at_certificate, weakly_eulerian_diff, AtSearchOutcome, Digraph, WeaklyEulerianMode,
};
use squarepaint_core::claims::{render_json_lines, render_table, verify_all, VerifyOptions};
use squarepaint_core::graph::{parse_edge_list, render_edge_list};
use squarepaint_core::named::{known_graph_ids, named_graph};
use squarepaint_core::paint::{
    audit_strategy, is_f_choosable, paint, play, strategy_from_json, strategy_to_json,
    PlayOutcome,
};
use squarepaint_core::{Graph, TokenFn};

#[derive(Parser)]
#[command(
    name = "squarepaint",
    version,
    about = "Exact tools for graph squares, circulation-parity certificates, and the online list-coloring game"
)]
struct Cli {
    /// Emit machine-readable JSON instead of the human format.
    #[arg(long, global = true)]
    json: bool,
    /// Suppress timing fields so identical runs are byte-identical.
    #[arg(long, global = true)]
    deterministic: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

/// Where a graph comes from: an edge-list file or a registry id.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file: a "n m" header line, then one "u v" line per edge.
    #[arg(long = "in", value_name = "PATH")]
    infile: Option<PathBuf>,
    /// Named graph, e.g. "petersen" or "cycle 6" (see list-graphs).
    #[arg(long, value_name = "ID")]
    graph: Option<String>,
}

impl GraphInput {
    fn load(&self) -> anyhow::Result<Graph> {
        if let Some(path) = &self.infile {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            return Ok(parse_edge_list(&text)?);
        }
        Ok(named_graph(self.graph.as_deref().expect("clap enforces the group"))?)
    }
}

/// Where an orientation comes from: an arc-list file or a registry id.
/// Registry ids also carry their recorded token budgets.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct OrientInput {
    /// Arc-list file: a "n m" header line, then one "u v" line per arc u->v.
    #[arg(long = "in", value_name = "PATH")]
    infile: Option<PathBuf>,
    /// Named orientation, e.g. "fig9a_k4e" or "cycle_pendant 9".
    #[arg(long, value_name = "ID")]
    graph: Option<String>,
}

impl OrientInput {
    fn load(&self) -> anyhow::Result<(Digraph, Option<TokenFn>)> {
        if let Some(path) = &self.infile {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            return Ok((parse_arc_list(&text)?, None));
        }
        let id = self.graph.as_deref().expect("clap enforces the group");
        let (d, f) = lemma_orientation(id)?;
        Ok((d, Some(f)))
    }

    fn id(&self) -> String {
        match (&self.infile, &self.graph) {
            (Some(p), _) => p.display().to_string(),
            (None, Some(id)) => id.clone(),
            _ => unreachable!(),
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Square a graph and print the result as an edge list.
    Square {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Raise a graph to the given power and print the edge list.
    Power {
        #[command(flatten)]
        input: GraphInput,
        /// Power to raise the graph to (1 = the graph itself).
        #[arg(long, value_name = "INT")]
        n: usize,
    },
    /// Length of a shortest cycle.
    Girth {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Size of a largest clique.
    Clique {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Minimum number of colors in a proper coloring.
    Chromatic {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Whether the graph is regular with diameter 2, girth 5.
    Moore {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Count even and odd spanning circulations of an orientation.
    Circulations {
        #[command(flatten)]
        input: OrientInput,
    },
    /// Even-minus-odd circulation difference of an orientation.
    Diff {
        #[command(flatten)]
        input: OrientInput,
        /// Comma-separated vertices; restricts the count to circulations
        /// leaving every listed vertex, by alternating deletions.
        #[arg(long, value_name = "V,V,...")]
        restrict: Option<String>,
    },
    /// Check an orientation as a paintability certificate for its tokens.
    AtVerify {
        #[command(flatten)]
        input: OrientInput,
        /// Token budgets; defaults to the registry budgets for named
        /// orientations. Same comma-list format as in `paint`.
        #[arg(long, value_name = "SPEC")]
        f: Option<String>,
    },
    /// Search all orientations of a graph for a certificate.
    AtSearch {
        #[command(flatten)]
        input: GraphInput,
        /// Token budgets (see `paint --help` for the format).
        #[arg(long, value_name = "SPEC")]
        f: String,
        /// Node budget for the search.
        #[arg(long, default_value_t = 1 << 22)]
        budget: u64,
    },
    /// Imbalance censuses of oriented path squares (modes f1, f2, g).
    F1f2g {
        /// Path length in vertices.
        #[arg(long, value_name = "INT")]
        n: usize,
        /// Which prescribed imbalance to count: f1, f2, or g.
        #[arg(long, value_name = "MODE")]
        mode: String,
    },
    /// Solve the online list-coloring game exactly.
    Paint {
        #[command(flatten)]
        input: GraphInput,
        /// Token budgets: "all=<k>", a comma list with one value per
        /// vertex, "d1" (degree minus one everywhere), or
        /// "d1:low=<v,v,...>" keeping full degree on the listed vertices.
        #[arg(long, value_name = "SPEC")]
        f: String,
        /// Write the winning strategy as a JSON position table.
        #[arg(long, value_name = "PATH")]
        strategy_out: Option<PathBuf>,
        /// Cap on strategy-table entries when writing one out.
        #[arg(long, default_value_t = 1 << 20)]
        budget: u64,
    },
    /// Decide list colorability for the given list sizes.
    Choosable {
        #[command(flatten)]
        input: GraphInput,
        /// List sizes (same format as the paint token spec).
        #[arg(long, value_name = "SPEC")]
        f: String,
    },
    /// Replay a stored strategy against a scripted adversary.
    Play {
        /// Strategy file written by `paint --strategy-out`.
        #[arg(long, value_name = "PATH")]
        strategy: PathBuf,
        /// JSON script: an array of rounds, each an array of vertices.
        #[arg(long, value_name = "PATH")]
        script: PathBuf,
        /// Check the strategy against every adversary line first.
        #[arg(long)]
        audit: bool,
    },
    /// Re-derive every recorded claim and report pass/fail.
    VerifyPaper {
        /// Also run the two large game solves backed by orientation
        /// certificates.
        #[arg(long)]
        extended: bool,
        /// Test hook: corrupt this claim's observed value to exercise
        /// the failure path.
        #[arg(long, value_name = "ID", hide = true)]
        tamper: Option<String>,
    },
    /// List the named graphs and orientations.
    ListGraphs,
}

fn token_fn(spec: &str, g: &Graph) -> anyhow::Result<TokenFn> {
    Ok(TokenFn::parse(spec, g)?)
}

fn print_graph(g: &Graph, as_json: bool) {
    if as_json {
        let labels: Vec<String> = (0..g.n()).map(|v| g.label(v)).collect();
        println!(
            "{}",
            json!({ "n": g.n(), "edges": g.edges(), "labels": labels })
        );
    } else {
        print!("{}", render_edge_list(g));
    }
}

fn parse_vertex_list(s: &str) -> anyhow::Result<Vec<usize>> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| anyhow::anyhow!("bad vertex list: {s}")))
        .collect()
}

fn run(cli: Cli) -> anyhow::Result<i32> {
    let as_json = cli.json;
    match cli.cmd {
        Cmd::Square { input } => {
            let g = input.load()?;
            print_graph(&g.square(), as_json);
        }
        Cmd::Power { input, n } => {
            let g = input.load()?;
            print_graph(&g.power(n)?, as_json);
        }
        Cmd::Girth { input } => {
            let g = input.load()?;
            match (g.girth(), as_json) {
                (Some(k), false) => println!("girth={k}"),
                (None, false) => println!("girth=none"),
                (v, true) => println!("{}", json!({ "girth": v })),
            }
        }
        Cmd::Clique { input } => {
            let g = input.load()?;
            let w = g.clique_number();
            if as_json {
                println!("{}", json!({ "clique": w }));
            } else {
                println!("clique={w}");
            }
        }
        Cmd::Chromatic { input } => {
            let g = input.load()?;
            let chi = g.chromatic_number()?;
            if as_json {
                println!("{}", json!({ "chromatic": chi }));
            } else {
                println!("chromatic={chi}");
            }
        }
        Cmd::Moore { input } => {
            let g = input.load()?;
            let m = g.is_moore();
            if as_json {
                println!("{}", json!({ "moore": m }));
            } else {
                println!("moore={m}");
            }
        }
        Cmd::Circulations { input } => {
            let (d, _) = input.load()?;
            let c = count_circulations(&d)?;
            if as_json {
                println!(
                    "{}",
                    json!({ "ee": c.ee, "eo": c.eo, "diff": c.diff() })
                );
            } else {
                println!("ee={} eo={} diff={}", c.ee, c.eo, c.diff());
            }
        }
        Cmd::Diff { input, restrict } => {
            let (d, _) = input.load()?;
            match restrict {
                None => {
                    let v = diff(&d)?;
                    if as_json {
                        println!("{}", json!({ "diff": v }));
                    } else {
                        println!("diff={v}");
                    }
                }
                Some(spec) => {
                    let w = parse_vertex_list(&spec)?;
                    let v = diff_restricted(&d, &w)?;
                    if as_json {
                        println!("{}", json!({ "diff": v, "restricted_to": w }));
                    } else {
                        let ws: Vec<String> = w.iter().map(|x| x.to_string()).collect();
                        println!("diff={v} restricted_to={}", ws.join(","));
                    }
                }
            }
        }
        Cmd::AtVerify { input, f } => {
            let (d, default_f) = input.load()?;
            let f = match (f, default_f) {
                (Some(spec), _) => token_fn(&spec, &d.underlying())?,
                (None, Some(f)) => f,
                (None, None) => bail!("--f is required for orientations read from a file"),
            };
            let cert = verify_at_certificate(&d, &f, &input.id())?;
            if as_json {
                println!("{}", serde_json::to_string(&cert)?);
            } else {
                println!(
                    "id={} ee={} eo={} diff={} tokens={:?} verdict={}",
                    cert.lemma_id, cert.ee, cert.eo, cert.diff, cert.f, cert.verdict
                );
            }
        }
        Cmd::AtSearch { input, f, budget } => {
            let g = input.load()?;
            let f = token_fn(&f, &g)?;
            let res = search_at_orientation(&g, &f, budget)?;
            match (&res.outcome, as_json) {
                (AtSearchOutcome::Found(d), false) => {
                    println!("found after {} nodes, diff={}", res.nodes, diff(d)?);
                    print!("{}", render_arc_list(d));
                }
                (AtSearchOutcome::Exhausted, false) => {
                    println!("exhausted after {} nodes: no orientation certifies these tokens", res.nodes);
                }
                (AtSearchOutcome::BudgetExceeded, false) => {
                    println!("budget of {budget} nodes exceeded after {} nodes", res.nodes);
                }
                (outcome, true) => {
                    let body = match outcome {
                        AtSearchOutcome::Found(d) => json!({
                            "outcome": "found",
                            "nodes": res.nodes,
                            "diff": diff(d)?,
                            "arcs": d.arcs(),
                        }),
                        AtSearchOutcome::Exhausted => {
                            json!({ "outcome": "exhausted", "nodes": res.nodes })
                        }
                        AtSearchOutcome::BudgetExceeded => {
                            json!({ "outcome": "budget-exceeded", "nodes": res.nodes })
                        }
                    };
                    println!("{body}");
                }
            }
        }
        Cmd::F1f2g { n, mode } => {
            let m = WeaklyEulerianMode::parse(&mode)?;
            let v = weakly_eulerian_diff(n, m)?;
            let closed = match m {
                WeaklyEulerianMode::F1 => Some(f1_closed_form(n)),
                WeaklyEulerianMode::G => Some(g_closed_form(n)),
                WeaklyEulerianMode::F2 => None,
            };
            if as_json {
                println!(
                    "{}",
                    json!({ "mode": mode, "n": n, "diff": v, "closed_form": closed })
                );
            } else {
                match closed {
                    Some(c) => println!("{mode}({n})={v} closed_form={c}"),
                    None => println!("{mode}({n})={v}"),
                }
            }
        }
        Cmd::Paint { input, f, strategy_out, budget } => {
            let g = input.load()?;
            let f = token_fn(&f, &g)?;
            let out = paint(&g, &f)?;
            if let Some(path) = &strategy_out {
                match &out.strategy {
                    Some(strat) => {
                        let text = strategy_to_json(strat, budget as usize)?;
                        fs::write(path, text)
                            .with_context(|| format!("writing {}", path.display()))?;
                    }
                    None => bail!("no strategy to store: the first player wins"),
                }
            }
            if as_json {
                println!(
                    "{}",
                    json!({
                        "painter_wins": out.painter_wins,
                        "nodes": out.stats.nodes,
                        "memo_entries": out.stats.memo_entries,
                        "effective_tokens": out.stats.effective_tokens,
                    })
                );
            } else {
                let who = if out.painter_wins { "painter wins" } else { "lister wins" };
                println!(
                    "{who} nodes={} memo={} effective_tokens={:?}",
                    out.stats.nodes, out.stats.memo_entries, out.stats.effective_tokens
                );
            }
        }
        Cmd::Choosable { input, f } => {
            let g = input.load()?;
            let f = token_fn(&f, &g)?;
            let ok = is_f_choosable(&g, &f)?;
            if as_json {
                println!("{}", json!({ "choosable": ok }));
            } else {
                println!("choosable={ok}");
            }
        }
        Cmd::Play { strategy, script, audit } => {
            let text = fs::read_to_string(&strategy)
                .with_context(|| format!("reading {}", strategy.display()))?;
            let strat = strategy_from_json(&text)?;
            if audit {
                let lines = audit_strategy(&strat)?;
                if !as_json {
                    println!("audit ok: {lines} adversary lines survived");
                }
            }
            let stext = fs::read_to_string(&script)
                .with_context(|| format!("reading {}", script.display()))?;
            let rounds: Vec<Vec<usize>> =
                serde_json::from_str(&stext).context("script must be a JSON array of rounds")?;
            let trace = play(&strat, &rounds)?;
            if as_json {
                println!("{}", serde_json::to_string(&trace)?);
            } else {
                for (i, r) in trace.rounds.iter().enumerate() {
                    let p: Vec<String> = r.presented.iter().map(|v| v.to_string()).collect();
                    let c: Vec<String> = r.colored.iter().map(|v| v.to_string()).collect();
                    println!("round {}: presented {} colored {}", i + 1, p.join(","), c.join(","));
                }
                match &trace.outcome {
                    PlayOutcome::AllColored => println!("all vertices colored"),
                    PlayOutcome::ListerWin { vertex, round } => {
                        println!("vertex {vertex} ran out of tokens in round {round}")
                    }
                    PlayOutcome::ScriptEnded { uncolored } => {
                        let u: Vec<String> = uncolored.iter().map(|v| v.to_string()).collect();
                        println!("script ended with {} uncolored", u.join(","))
                    }
                }
            }
        }
        Cmd::VerifyPaper { extended, tamper } => {
            let report = verify_all(&VerifyOptions { extended, tamper });
            let include_runtime = !cli.deterministic;
            if as_json {
                print!("{}", render_json_lines(&report, include_runtime));
            } else {
                print!("{}", render_table(&report, include_runtime));
            }
            return Ok(if report.all_pass() { 0 } else { 1 });
        }
        Cmd::ListGraphs => {
            if as_json {
                println!(
                    "{}",
                    json!({
                        "graphs": known_graph_ids(),
                        "orientations": known_orientation_ids(),
                    })
                );
            } else {
                println!("graphs:");
                for id in known_graph_ids() {
                    println!("  {id}");
                }
                println!("orientations:");
                for id in known_orientation_ids() {
                    println!("  {id}");
                }
            }
        }
    }
    Ok(0)
}


fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            exit(1);
        }
    }
}
