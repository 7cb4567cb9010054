use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context as _;
use clap::{Parser, Subcommand, ValueEnum};
use coxkl::analysis::{fingerprint, find_isomorphisms, Constraint};
use coxkl::bruhat::build_interval;
use coxkl::{CoxeterSystem, Element, GeneratorSet, KlEngine, ParabolicContext, XParam};
use coxkl_harness::dump::{table, write_table, TableKind};
use coxkl_harness::spec::SystemEntry;
use coxkl_harness::{reproduce_remark, run_campaign, CampaignSpec, HarnessError};

#[derive(Parser)]
#[command(name = "coxkl", version, about = "Bruhat intervals and parabolic Kazhdan-Lusztig polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Inspect a Coxeter system.
    System {
        #[command(subcommand)]
        action: SystemAction,
    },
    /// Inspect a Bruhat interval.
    Interval {
        #[command(subcommand)]
        action: IntervalAction,
    },
    /// Print one polynomial.
    Poly {
        kind: Kind,
        /// Type name such as `A3`, or a TOML system file.
        system: String,
        u: String,
        v: String,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        x: String,
    },
    /// Run a verification campaign.
    Verify {
        campaign: PathBuf,
        #[arg(long)]
        parallelism: Option<usize>,
        /// Where to write the JSON report; overrides the campaign file.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Reproduce the S4 example of atom-respecting isomorphic intervals with
    /// different `P^{J,-1}`.
    Remark {
        #[arg(long)]
        json: bool,
    },
    /// Write a polynomial table.
    Dump {
        system: String,
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long = "J", default_value = "")]
        j: String,
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        x: String,
        /// Output file; standard output when omitted.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Search for isomorphisms between two intervals.
    Iso {
        system: String,
        u1: String,
        v1: String,
        u2: String,
        v2: String,
        #[arg(long, value_enum, default_value = "none")]
        constraint: ConstraintKind,
        #[arg(long = "J1", default_value = "")]
        j1: String,
        #[arg(long = "J2", default_value = "")]
        j2: String,
        #[arg(long, default_value_t = 1)]
        limit: usize,
    },
}

#[derive(Subcommand)]
enum SystemAction {
    /// Build the system and print its basic data.
    Validate { system: String },
}

#[derive(Subcommand)]
enum IntervalAction {
    /// Print the elements, covers and fingerprint of `[u, v]`.
    Show {
        system: String,
        u: String,
        v: String,
        /// Also compute the Bruhat graph.
        #[arg(long)]
        graph: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    R,
    P,
}

impl From<Kind> for TableKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::R => TableKind::R,
            Kind::P => TableKind::P,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ConstraintKind {
    None,
    Atoms,
    Quotient,
}

/// Failures that should exit with status 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage<T>(message: impl Into<String>) -> anyhow::Result<T> {
    Err(Usage(message.into()).into())
}

fn load_system(text: &str) -> anyhow::Result<CoxeterSystem> {
    let path = Path::new(text);
    let entry = if path.is_file() {
        let body = std::fs::read_to_string(path).with_context(|| format!("reading {text}"))?;
        match toml::from_str::<SystemEntry>(&body) {
            Ok(e) => e,
            Err(e) => return usage(format!("{text}: {e}")),
        }
    } else {
        SystemEntry::named(text)
    };
    match CoxeterSystem::build(&entry.description()) {
        Ok(sys) => Ok(sys),
        Err(e) => usage(e.to_string()),
    }
}

fn element(sys: &CoxeterSystem, word: &str) -> anyhow::Result<Element> {
    match sys.parse_element(word) {
        Ok(w) => Ok(w),
        Err(e) => usage(e.to_string()),
    }
}

fn subset(sys: &CoxeterSystem, text: &str) -> anyhow::Result<GeneratorSet> {
    match GeneratorSet::parse(text, sys.rank()) {
        Ok(j) => Ok(j),
        Err(e) => usage(e.to_string()),
    }
}

fn xparam(text: &str) -> anyhow::Result<XParam> {
    match XParam::parse(text) {
        Ok(x) => Ok(x),
        Err(e) => usage(e.to_string()),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::System { action: SystemAction::Validate { system } } => {
            let sys = load_system(&system)?;
            println!("name: {}", sys.name());
            println!("rank: {}", sys.rank());
            println!("backend: {}", sys.backend().name());
            println!("finite: {}", sys.is_finite_group());
            if let Some(cap) = sys.length_cap() {
                println!("length cap: {cap}");
            }
            println!("elements: {}", sys.len());
            println!("max length: {}", sys.max_length());
            for row in sys.matrix().rows() {
                println!("  {}", row.iter().map(|m| if *m == 0 { "inf".into() } else { m.to_string() }).collect::<Vec<_>>().join(" "));
            }
        }
        Command::Interval { action: IntervalAction::Show { system, u, v, graph } } => {
            let sys = load_system(&system)?;
            let (u, v) = (element(&sys, &u)?, element(&sys, &v)?);
            let interval = match build_interval(&sys, u, v, graph) {
                Ok(i) => i,
                Err(e) => return usage(e.to_string()),
            };
            println!("[{}, {}]: {} elements, height {}", sys.display(u), sys.display(v), interval.len(), interval.height());
            for (i, &w) in interval.elements().iter().enumerate() {
                let below: Vec<String> =
                    interval.poset().down(i).iter().map(|&d| sys.word_string(interval.element(d))).collect();
                println!("  {:>3}  rank {}  {:<16} covers {}", i, interval.poset().rank(i), sys.word_string(w), below.join(" "));
            }
            if let Some(edges) = interval.bruhat_edges() {
                println!("bruhat edges: {}", edges.len());
                for e in edges {
                    println!(
                        "  {} -> {}  via {}",
                        sys.word_string(interval.element(e.lower)),
                        sys.word_string(interval.element(e.upper)),
                        e.reflection.map_or("?".to_string(), |t| sys.word_string(t))
                    );
                }
            }
            println!("fingerprint: {}", serde_json::to_string(&fingerprint(&interval))?);
        }
        Command::Poly { kind, system, u, v, j, x } => {
            let sys = load_system(&system)?;
            let (u, v) = (element(&sys, &u)?, element(&sys, &v)?);
            let ctx = ParabolicContext::new(subset(&sys, &j)?, xparam(&x)?);
            let kl = KlEngine::new(&sys);
            let p = match kind {
                Kind::R => kl.parabolic_r_poly(u, v, ctx),
                Kind::P => kl.parabolic_p_poly(u, v, ctx),
            };
            match p {
                Ok(p) => println!("{}\t{p}", serde_json::to_string(&p)?),
                Err(e) => return usage(e.to_string()),
            }
        }
        Command::Verify { campaign, parallelism, output } => {
            let mut spec = match CampaignSpec::load(&campaign) {
                Ok(s) => s,
                Err(e @ HarnessError::Config(_)) => return usage(e.to_string()),
                Err(e) => return Err(e.into()),
            };
            if let Some(n) = parallelism {
                spec.parallelism = n;
            }
            if output.is_some() {
                spec.output_path = output;
            }
            let start = Instant::now();
            let report = match run_campaign(&spec) {
                Ok(r) => r,
                Err(e @ (HarnessError::Config(_) | HarnessError::Core(_))) => return usage(e.to_string()),
                Err(e) => return Err(e.into()),
            };
            print!("{}", report.summary());
            eprintln!("elapsed: {:.2?} on {} workers", start.elapsed(), spec.parallelism);
            if let Some(path) = &spec.output_path {
                std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
                eprintln!("report written to {}", path.display());
            }
            if report.total_violations > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Remark { json } => {
            let start = Instant::now();
            let r = reproduce_remark()?;
            if json {
                println!("{}", serde_json::to_string_pretty(&r)?);
            } else {
                println!("S4: [{}, {}] with J1 = {} and [{}, {}] with J2 = {}", r.u1, r.v1, r.j1, r.u2, r.v2, r.j2);
                println!("sizes: {} and {}", r.sizes.0, r.sizes.1);
                println!("Boolean lattice fingerprint: {}", r.boolean_fingerprint);
                println!("atom counts: ({}, {})", r.atom_counts.0, r.atom_counts.1);
                println!("atom-respecting isomorphism found: {}", r.isomorphism_found);
                let show = |p: &coxkl::IntPolynomial| format!("{} = {p}", serde_json::to_string(p).unwrap_or_default());
                println!("p_J1_xminus1: {}", show(&r.p_J1_xminus1));
                println!("p_J2_xminus1: {}", show(&r.p_J2_xminus1));
                println!("p_J1_q: {}", show(&r.p_J1_q));
                println!("p_J2_q: {}", show(&r.p_J2_q));
                println!("P^(J,q) equal: {}", r.p_q_equal);
            }
            eprintln!("elapsed: {:.2?}", start.elapsed());
        }
        Command::Dump { system, kind, j, x, output } => {
            let sys = load_system(&system)?;
            let ctx = ParabolicContext::new(subset(&sys, &j)?, xparam(&x)?);
            let kl = KlEngine::new(&sys);
            let rows = table(&kl, ctx, kind.into())?;
            match output {
                Some(path) => {
                    let mut file = std::fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    write_table(&mut file, &sys, ctx, kind.into(), &rows)?;
                    eprintln!("{} entries written to {}", rows.len(), path.display());
                }
                None => write_table(&mut std::io::stdout().lock(), &sys, ctx, kind.into(), &rows)?,
            }
        }
        Command::Iso { system, u1, v1, u2, v2, constraint, j1, j2, limit } => {
            let sys = load_system(&system)?;
            let (u1, v1) = (element(&sys, &u1)?, element(&sys, &v1)?);
            let (u2, v2) = (element(&sys, &u2)?, element(&sys, &v2)?);
            let (j1, j2) = (subset(&sys, &j1)?, subset(&sys, &j2)?);
            let constraint = match constraint {
                ConstraintKind::None => Constraint::None,
                ConstraintKind::Atoms => Constraint::AtomBijection { j1, j2 },
                ConstraintKind::Quotient => Constraint::QuotientIso { j1, j2 },
            };
            let (i1, i2) = match (build_interval(&sys, u1, v1, false), build_interval(&sys, u2, v2, false)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage(e.to_string()),
            };
            let found = find_isomorphisms(&i1, &i2, constraint, limit)?;
            println!("{} isomorphism(s)", found.len());
            for w in &found {
                println!("respects atoms: {}, respects quotient: {}", w.respects_atoms, w.respects_quotient);
                for (a, b) in w.pairs(&i1, &i2) {
                    println!("  {} -> {}", sys.word_string(a), sys.word_string(b));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::FAILURE
            }
        }
    }
}
