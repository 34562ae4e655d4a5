//! `qtflows`: command-line front end.
//!
//! Exit status is 0 on success, 1 when a verification or scan finds a
//! failure, and 2 on any argument error (reported on one line).

use std::collections::BTreeMap;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use qtflows::flow::{ehrhart_specialized, enumerate_flows, flow_to_tesler};
use qtflows::graph::PosetPn;
use qtflows::poly::{Slot, Specialization};
use qtflows::tree::{enumerate_parking_functions, enumerate_spanning_trees, pmaj, tutte};
use qtflows::verify::{self, Conjecture, Plan, VerificationReport, DEFAULT_SEED};
use qtflows::{ehrhart_qt, NetflowVector, ThresholdGraph};

const SCAN_NMAX_VAR: &str = "QTFLOWS_SCAN_NMAX";
const DEFAULT_SCAN_NMAX: usize = 6;
const RANDOM_SAMPLES: usize = 32;

#[derive(Parser)]
#[command(name = "qtflows", version, about = "(q,t)-Ehrhart functions of flow polytopes of threshold graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Weighted Ehrhart polynomial of the flow polytope F_G(a)
    Ehr {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        netflow: NetflowArg,
        /// Specialize t before printing
        #[arg(long, value_enum)]
        spec: Option<Spec>,
        #[arg(long)]
        json: bool,
    },
    /// Spanning trees and their inversion statistics
    Trees {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "inv")]
        stat: TreeStat,
        /// Print every tree as its parent array
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// G-parking functions and their statistics
    Parking {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value = "codeg")]
        stat: ParkingStat,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Tutte polynomial of the graph inflated by a (x in the q slot, y in the t slot)
    Tutte {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        netflow: NetflowArg,
        /// Substitute x,y; each is q, t or an integer
        #[arg(long, value_name = "X,Y")]
        at: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Tesler matrices of the integer flows on G with netflow a
    Tesler {
        #[command(flatten)]
        graph: GraphArgs,
        #[command(flatten)]
        netflow: NetflowArg,
        /// Stream the matrices, one per line, as row-major integers
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// The poset of connected threshold graphs on n+1 vertices
    Poset {
        n: usize,
        #[arg(long)]
        json: bool,
    },
    /// Check a theorem or lemma over a range of instances
    Verify {
        #[arg(value_enum)]
        theorem: Theorem,
        /// Largest n (for lemma-t0: k; for lemma-q: d and z)
        #[arg(long, default_value_t = 4)]
        n_max: usize,
        /// Largest netflow entry (for lemma-t0: c; for lemma-q: a)
        #[arg(long, default_value_t = 2)]
        a_max: u64,
        /// Seed for sampled netflow vectors
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Coefficient-sign scan of a conjecture over all connected threshold graphs
    Scan {
        #[arg(value_enum)]
        which: ScanKind,
        /// Defaults to $QTFLOWS_SCAN_NMAX, else 6
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphArgs {
    /// Binary construction sequence, e.g. 1010 or 1,0,1,0
    #[arg(long)]
    beta: Option<String>,
    /// Threshold degree sequence, e.g. 4,3,2,2,1
    #[arg(long, value_delimiter = ',')]
    degrees: Option<Vec<usize>>,
    /// Complete graph on N vertices
    #[arg(long, value_name = "N")]
    complete: Option<usize>,
}

#[derive(Args)]
struct NetflowArg {
    /// Netflow vector a_1,...,a_n (default all ones)
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    a: Option<Vec<i64>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Spec {
    T1,
    T0,
    Tqinv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TreeStat {
    Inv,
    Kappa,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ParkingStat {
    Codeg,
    Pmaj,
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    T1,
    T0,
    Qinv,
    LemmaT0,
    LemmaQ,
}

#[derive(Clone, Copy, ValueEnum)]
enum ScanKind {
    Positivity,
    KMinusG,
    Poset,
}

/// An argument error: reported on one line, exit status 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type Outcome = Result<bool, Usage>;

impl GraphArgs {
    fn build(&self) -> Result<ThresholdGraph, Usage> {
        if let Some(beta) = &self.beta {
            let bits = beta
                .chars()
                .filter(|&c| c != ',')
                .map(|c| match c {
                    '0' => Ok(0),
                    '1' => Ok(1),
                    _ => Err(Usage(format!("--beta: expected binary digits, got {beta:?}"))),
                })
                .collect::<Result<Vec<u8>, _>>()?;
            Ok(ThresholdGraph::from_binary(&bits)?)
        } else if let Some(d) = &self.degrees {
            Ok(ThresholdGraph::from_degree_sequence(d)?)
        } else {
            let k = self.complete.unwrap_or(0);
            if k < 2 {
                return Err(Usage("--complete needs at least 2 vertices".into()));
            }
            Ok(ThresholdGraph::complete(k - 1)?)
        }
    }
}

impl NetflowArg {
    fn build(&self, n: usize) -> Result<NetflowVector, Usage> {
        let a = match &self.a {
            None => return Ok(NetflowVector::ones(n)),
            Some(a) => NetflowVector::new(a)?,
        };
        if a.len() != n {
            return Err(Usage(format!("--a has {} entries, graph needs {n}", a.len())));
        }
        Ok(a)
    }
}

fn parse_slot(s: &str) -> Result<Slot, Usage> {
    match s.trim() {
        "q" | "x" => Ok(Slot::Q),
        "t" | "y" => Ok(Slot::T),
        v => v.parse().map(Slot::Const).map_err(|_| Usage(format!("--at: cannot read {v:?}"))),
    }
}

fn histogram(values: impl Iterator<Item = u64>) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for v in values {
        *h.entry(v).or_insert(0) += 1;
    }
    h
}

fn emit_json(out: &mut impl Write, v: &Value) -> io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("values serialize"))
}

fn emit_histogram(out: &mut impl Write, name: &str, h: &BTreeMap<u64, usize>) -> io::Result<()> {
    for (k, c) in h {
        writeln!(out, "{name} {k}: {c}")?;
    }
    Ok(())
}

fn emit_report(out: &mut impl Write, r: &VerificationReport, json: bool) -> Outcome {
    if json {
        emit_json(out, &serde_json::to_value(r)?)?;
    } else {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        writeln!(out, "{}: {status} ({} instances, {} failures)", r.theorem, r.instances, r.failures.len())?;
        if let Some(seed) = r.seed {
            writeln!(out, "seed: {seed}")?;
        }
        for f in &r.failures {
            writeln!(out, "beta={:?} a={:?}", f.beta, f.a)?;
            writeln!(out, "  lhs: {}", f.lhs)?;
            writeln!(out, "  rhs: {}", f.rhs)?;
        }
    }
    Ok(r.passed())
}

fn run(cmd: Command, out: &mut impl Write) -> Outcome {
    match cmd {
        Command::Ehr { graph, netflow, spec, json } => {
            let g = graph.build()?;
            let a = netflow.build(g.n())?;
            let text = match spec {
                None => ehrhart_qt(&g.dag(), &a)?.to_string(),
                Some(s) => {
                    let mode = match s {
                        Spec::T1 => Specialization::TOne,
                        Spec::T0 => Specialization::TZero,
                        Spec::Tqinv => Specialization::TQInv,
                    };
                    let e = ehrhart_specialized(&g.dag(), &a, mode)?;
                    e.to_poly().map_or_else(|| e.to_string(), |p| p.to_string())
                }
            };
            if json {
                let spec = spec.map(|s| s.to_possible_value().expect("no skipped values").get_name().to_owned());
                emit_json(out, &json!({
                    "graph": g.summary(),
                    "a": a.as_slice(),
                    "spec": spec,
                    "polynomial": text,
                }))?;
            } else {
                writeln!(out, "{text}")?;
            }
        }
        Command::Trees { graph, stat, list, json } => {
            let g = graph.build()?;
            let dag = g.dag();
            let trees: Vec<_> = enumerate_spanning_trees(&dag).collect();
            let value = |t: &qtflows::SpanningTree| match stat {
                TreeStat::Inv => t.inv() as u64,
                TreeStat::Kappa => t.kappa(&dag) as u64,
            };
            let h = histogram(trees.iter().map(value));
            let name = if stat == TreeStat::Inv { "inv" } else { "kappa" };
            if json {
                let mut v = json!({ "graph": g.summary(), "count": trees.len() });
                v[format!("{name}_histogram")] = serde_json::to_value(&h)?;
                if list {
                    v["trees"] = trees.iter().map(|t| json!({ "parents": t.parents(), name: value(t) })).collect();
                }
                emit_json(out, &v)?;
            } else {
                if list {
                    for t in &trees {
                        let p: Vec<String> = t.parents().iter().map(usize::to_string).collect();
                        writeln!(out, "{} {name}={}", p.join(" "), value(t))?;
                    }
                }
                writeln!(out, "trees: {}", trees.len())?;
                emit_histogram(out, name, &h)?;
            }
        }
        Command::Parking { graph, stat, list, json } => {
            let g = graph.build()?;
            let dag = g.dag();
            let pfs = enumerate_parking_functions(&dag);
            let values = pfs
                .iter()
                .map(|p| match stat {
                    ParkingStat::Codeg => Ok(p.codeg(&dag)),
                    ParkingStat::Pmaj => pmaj(&dag, p),
                })
                .collect::<Result<Vec<u64>, _>>()
                .map_err(|e| Usage(format!("--stat pmaj: {e}")))?;
            let h = histogram(values.iter().copied());
            let name = if stat == ParkingStat::Codeg { "codeg" } else { "pmaj" };
            if json {
                let mut v = json!({ "graph": g.summary(), "count": pfs.len() });
                v[format!("{name}_histogram")] = serde_json::to_value(&h)?;
                if list {
                    v["parking_functions"] =
                        pfs.iter().zip(&values).map(|(p, s)| json!({ "values": p.values(), name: s })).collect();
                }
                emit_json(out, &v)?;
            } else {
                if list {
                    for (p, s) in pfs.iter().zip(&values) {
                        writeln!(out, "{p} {name}={s}")?;
                    }
                }
                writeln!(out, "parking functions: {}", pfs.len())?;
                emit_histogram(out, name, &h)?;
            }
        }
        Command::Tutte { graph, netflow, at, json } => {
            let g = graph.build()?;
            let a = netflow.build(g.n())?;
            let mut p = tutte(&g.inflate(a.as_slice())?)?;
            if let Some(at) = &at {
                let (x, y) = at.split_once(',').ok_or_else(|| Usage("--at expects X,Y".into()))?;
                p = p.substitute(parse_slot(x)?, parse_slot(y)?);
            }
            if json {
                emit_json(out, &json!({
                    "graph": g.summary(),
                    "a": a.as_slice(),
                    "at": at,
                    "polynomial": p.to_string(),
                }))?;
            } else {
                writeln!(out, "{p}")?;
            }
        }
        Command::Tesler { graph, netflow, list, json } => {
            let g = graph.build()?;
            let a = netflow.build(g.n())?;
            let dag = g.dag();
            let flows = enumerate_flows(&dag, &a)?;
            if json {
                let matrices: Vec<Vec<u64>> = flows.map(|f| flow_to_tesler(&f).row_major().to_vec()).collect();
                let mut v = json!({ "graph": g.summary(), "a": a.as_slice(), "count": matrices.len() });
                if list {
                    v["matrices"] = json!(matrices);
                }
                emit_json(out, &v)?;
            } else if list {
                for f in flows {
                    writeln!(out, "{}", flow_to_tesler(&f))?;
                }
            } else {
                writeln!(out, "{}", flows.count())?;
            }
        }
        Command::Poset { n, json } => {
            if !(1..=qtflows::graph::MAX_POSET_N).contains(&n) {
                return Err(Usage(format!("poset: n must be in 1..={}", qtflows::graph::MAX_POSET_N)));
            }
            let p = PosetPn::new(n);
            let bits = |i: usize| p.element(i).beta().iter().map(u8::to_string).collect::<String>();
            if json {
                emit_json(out, &json!({
                    "n": n,
                    "elements": p.elements().iter().map(ThresholdGraph::summary).collect::<Vec<_>>(),
                    "covers": p.covers(),
                }))?;
            } else {
                for i in 0..p.len() {
                    writeln!(out, "{i} {} edges={}", bits(i), p.edge_count(i))?;
                }
                for &(h, g) in p.covers() {
                    writeln!(out, "{} < {}", bits(h), bits(g))?;
                }
            }
        }
        Command::Verify { theorem, n_max, a_max, seed, json } => {
            if n_max == 0 || a_max == 0 {
                return Err(Usage("--n-max and --a-max must be positive".into()));
            }
            let plan = || Plan::standard(n_max, a_max, RANDOM_SAMPLES, seed);
            let report = match theorem {
                Theorem::T1 => verify::verify_t1(&plan()),
                Theorem::T0 => verify::verify_t0(&plan()),
                Theorem::Qinv => verify::verify_qinv(&plan()),
                Theorem::LemmaT0 => verify::verify_lemma_t0(n_max, a_max),
                Theorem::LemmaQ => {
                    let (a, d) = (u32::try_from(a_max)?, u32::try_from(n_max)?);
                    verify::verify_lemma_q(a, d, d)
                }
            };
            return emit_report(out, &report, json);
        }
        Command::Scan { which, n_max, json } => {
            let n_max = match n_max {
                Some(n) => n,
                None => match std::env::var(SCAN_NMAX_VAR) {
                    Ok(v) => v.trim().parse().map_err(|_| Usage(format!("{SCAN_NMAX_VAR}: not an integer: {v:?}")))?,
                    Err(_) => DEFAULT_SCAN_NMAX,
                },
            };
            if n_max == 0 {
                return Err(Usage("--n-max must be positive".into()));
            }
            let which = match which {
                ScanKind::Positivity => Conjecture::Positivity,
                ScanKind::KMinusG => Conjecture::CompleteMinusG,
                ScanKind::Poset => Conjecture::PosetCovers,
            };
            return emit_report(out, &verify::scan_conjectures(which, n_max), json);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            eprintln!("{}", text.lines().next().unwrap_or("error: invalid arguments"));
            return ExitCode::from(2);
        }
    };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out);
    let flushed = out.flush();
    match result {
        Ok(true) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(_) => ExitCode::from(1),
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
