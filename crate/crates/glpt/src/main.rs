//! Thin command-line front end; all logic lives in the library.

use std::io::{Read, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand};

use glpt::constructions;
use glpt::harness::{
    self, load_corpus, ReportFormat, ScanOptions, TheoremId,
};
use glpt::longest_path::DEFAULT_ENUMERATION_CAP;
use glpt::surgery;
use glpt::{encode_graph6, parse_graph6, Graph, Path as GraphPath};

#[derive(Parser)]
#[command(
    name = "glpt",
    about = "Exact longest-path transversal toolkit: analysis, constructions, theorem scans, counterexample search, and path surgery"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariant record of one or more graphs (graph6, or '-' to
    /// read lines from stdin).
    Analyze {
        /// A graph6 string, or '-' for stdin.
        input: String,
        #[arg(long, default_value = "jsonl")]
        format: String,
        /// Longest-path enumeration budget.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
    },
    /// Build a named construction and emit it as graph6.
    Construct {
        /// petersen | g0 | g1 | g2 | star-blowup | ham-reg | bipartite-gadget | linear-forest
        name: String,
        /// Subdivision length of non-pendant edges (g1/g2).
        #[arg(long)]
        p: Option<usize>,
        /// Subdivision length of pendant edges (g1/g2).
        #[arg(long)]
        q: Option<usize>,
        /// Connectivity parameter (star-blowup, ham-reg).
        #[arg(long)]
        k: Option<usize>,
        /// Clique size (star-blowup, bipartite-gadget).
        #[arg(long)]
        t: Option<usize>,
        /// Remove a matching saturating the small side (bipartite-gadget).
        #[arg(long)]
        minus_matching: bool,
        /// Comma-separated path orders (linear-forest).
        #[arg(long)]
        lengths: Option<String>,
    },
    /// Evaluate a theorem predicate over a corpus.
    Scan {
        #[arg(long)]
        theorem: String,
        /// graph6 file path, or gen:N for all connected graphs with n <= N.
        #[arg(long)]
        input: String,
        /// Connectivity parameter for the Chvatal-Erdos style predicates.
        #[arg(long, default_value_t = 1)]
        k: usize,
        /// Restrict the hypothesis to graphs with alpha <= this bound.
        #[arg(long)]
        alpha_max: Option<usize>,
        #[arg(long, default_value = "summary")]
        format: String,
        /// Worker threads (GLPT_JOBS overrides).
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        /// Skip unparseable corpus lines instead of aborting.
        #[arg(long)]
        skip_bad: bool,
        /// Verify generator counts against the brute-force oracle first.
        #[arg(long)]
        selftest: bool,
    },
    /// Hunt for a connected graph with bounded independence number and no
    /// Gallai vertex.
    Search {
        #[arg(long)]
        alpha_max: usize,
        #[arg(long)]
        input: String,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long)]
        skip_bad: bool,
        #[arg(long)]
        selftest: bool,
    },
    /// Analyze a component attached to a path and report an augmentation
    /// plan when one of the structural clauses applies.
    Surgery {
        /// Host graph as graph6.
        #[arg(long)]
        graph: String,
        /// Comma-separated vertex ids of the host path.
        #[arg(long)]
        path: String,
        /// A vertex of the off-path component to analyze.
        #[arg(long)]
        seed: usize,
    },
}

fn main() {
    if let Err(e) = run(Cli::parse()) {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}

fn run(cli: Cli) -> glpt::Result<()> {
    match cli.command {
        Command::Analyze { input, format, cap } => analyze(&input, &format, cap),
        Command::Construct {
            name,
            p,
            q,
            k,
            t,
            minus_matching,
            lengths,
        } => construct(&name, p, q, k, t, minus_matching, lengths.as_deref()),
        Command::Scan {
            theorem,
            input,
            k,
            alpha_max,
            format,
            jobs,
            cap,
            skip_bad,
            selftest,
        } => {
            if selftest {
                generator_selftest(&input)?;
            }
            let theorem = TheoremId::from_str(&theorem)?;
            let corpus = load_corpus(&input, !skip_bad)?;
            report_skipped(&corpus);
            let opts = ScanOptions {
                k,
                alpha_max,
                cap,
                jobs,
            };
            let report = harness::scan(theorem, &corpus, &opts);
            let format = ReportFormat::from_str(&format)?;
            print!("{}", harness::emit_report(&report, format));
            Ok(())
        }
        Command::Search {
            alpha_max,
            input,
            jobs,
            cap,
            skip_bad,
            selftest,
        } => {
            if selftest {
                generator_selftest(&input)?;
            }
            let corpus = load_corpus(&input, !skip_bad)?;
            report_skipped(&corpus);
            let opts = ScanOptions {
                jobs,
                cap,
                ..ScanOptions::default()
            };
            match harness::search_counterexample(alpha_max, &corpus, &opts)? {
                Some(hit) => {
                    println!("{}", serde_json::to_string(&hit).expect("serializable"));
                }
                None => println!(
                    "no counterexample: every connected corpus graph with alpha <= {alpha_max} has a Gallai vertex"
                ),
            }
            Ok(())
        }
        Command::Surgery { graph, path, seed } => surgery_command(&graph, &path, seed),
    }
}

fn analyze(input: &str, format: &str, cap: usize) -> glpt::Result<()> {
    let format = ReportFormat::from_str(format)?;
    let graphs: Vec<Graph> = if input == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text)?;
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(parse_graph6)
            .collect::<glpt::Result<_>>()?
    } else {
        vec![parse_graph6(input)?]
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for g in &graphs {
        let record = harness::analyze(g, cap);
        match format {
            ReportFormat::Jsonl => {
                writeln!(out, "{}", serde_json::to_string(&record).expect("serializable"))?
            }
            ReportFormat::Summary => {
                writeln!(
                    out,
                    "{}: n={} alpha={} kappa={} delta={} girth={} lpt={} gallai={:?}{}",
                    record.g6,
                    record.n,
                    record.alpha,
                    record.kappa,
                    record.delta,
                    record.girth,
                    record
                        .lpt
                        .map_or_else(|| "?".into(), |v| v.to_string()),
                    record.gallai.clone().unwrap_or_default(),
                    if record.errors.is_empty() {
                        String::new()
                    } else {
                        format!(" errors={:?}", record.errors)
                    }
                )?
            }
        }
    }
    Ok(())
}

fn construct(
    name: &str,
    p: Option<usize>,
    q: Option<usize>,
    k: Option<usize>,
    t: Option<usize>,
    minus_matching: bool,
    lengths: Option<&str>,
) -> glpt::Result<()> {
    let missing = |what: &str| glpt::Error::Domain(format!("{name} requires --{what}"));
    let g = match name {
        "petersen" | "g0" => constructions::canonical_graph(name)?,
        "g1" => constructions::g1(p.ok_or_else(|| missing("p"))?, q.ok_or_else(|| missing("q"))?)?,
        "g2" => constructions::g2(p.ok_or_else(|| missing("p"))?, q.ok_or_else(|| missing("q"))?)?,
        "star-blowup" => constructions::star_blowup(
            k.ok_or_else(|| missing("k"))?,
            t.ok_or_else(|| missing("t"))?,
        )?,
        "ham-reg" => constructions::ham_reg(k.ok_or_else(|| missing("k"))?)?,
        "bipartite-gadget" => {
            constructions::bipartite_gadget(t.ok_or_else(|| missing("t"))?, minus_matching)
        }
        "linear-forest" => {
            let lengths = lengths.ok_or_else(|| missing("lengths"))?;
            let parsed: Vec<usize> = lengths
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| glpt::Error::Domain(format!("bad length '{s}'")))
                })
                .collect::<glpt::Result<_>>()?;
            constructions::linear_forest(&parsed)
        }
        other => {
            return Err(glpt::Error::Domain(format!(
                "unknown construction '{other}' (petersen, g0, g1, g2, star-blowup, ham-reg, bipartite-gadget, linear-forest)"
            )))
        }
    };
    println!("{}", encode_graph6(&g));
    Ok(())
}

fn generator_selftest(input: &str) -> glpt::Result<()> {
    let Some(rest) = input.strip_prefix("gen:") else {
        return Ok(());
    };
    let max_n: usize = rest
        .parse()
        .map_err(|_| glpt::Error::Domain(format!("bad generator spec '{input}'")))?;
    for n in 1..=max_n.min(6) {
        let generated = glpt::generate::generate_connected(n)?.len();
        let brute = glpt::generate::brute_force_connected_count(n);
        if generated != brute {
            return Err(glpt::Error::Domain(format!(
                "generator self-test failed at n={n}: generated {generated}, brute force {brute}"
            )));
        }
        eprintln!("selftest n={n}: {generated} connected graphs (oracle agrees)");
    }
    Ok(())
}

fn report_skipped(corpus: &harness::Corpus) {
    for (line, err) in &corpus.skipped {
        eprintln!("skipping line {line}: {err}");
    }
}

fn surgery_command(graph: &str, path: &str, seed: usize) -> glpt::Result<()> {
    let g = parse_graph6(graph)?;
    let verts: Vec<usize> = path
        .split(',')
        .map(|s| {
            s.trim()
                .parse()
                .map_err(|_| glpt::Error::Domain(format!("bad path vertex '{s}'")))
        })
        .collect::<glpt::Result<_>>()?;
    let host = GraphPath::new(&g, verts)?;
    let ctx = surgery::attachment_context(&g, &host, seed)?;
    println!("path:        {:?}", ctx.path.verts());
    println!("component:   {:?} (t = {})", ctx.comp.to_vec(), ctx.t);
    println!("attachments: {:?}", ctx.attach);
    for (i, seg) in ctx.segments.iter().enumerate() {
        let verts: Vec<usize> = ctx.path.verts()[seg.clone()].to_vec();
        println!("segment {i}:   {verts:?}");
    }
    let ranks: Vec<(usize, usize)> = ctx
        .path
        .verts()
        .iter()
        .filter(|v| !ctx.attach.contains(v))
        .map(|&v| (v, surgery::rank(&ctx, v).expect("non-attachment")))
        .collect();
    println!("ranks:       {ranks:?}");
    match surgery::find_augmentation(&g, &ctx) {
        Some(plan) => {
            println!("plan:        {plan:?} [{:?}]", plan.kind(&ctx.path));
            let longer = surgery::apply_plan(&g, &ctx.path, &plan)?;
            println!(
                "applied:     {:?} ({} -> {} vertices)",
                longer.verts(),
                ctx.path.order(),
                longer.order()
            );
        }
        None => println!("plan:        none (no clause applies)"),
    }
    Ok(())
}
