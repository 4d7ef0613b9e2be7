//! Command-line front end: construction, solving, certification, adapters,
//! DOT export and randomized invariant suites.
//!
//! Exit codes: 0 success, 1 negative mathematical answer (an instance is
//! UNSAT, a certificate fails to verify), 2 usage or input errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use slgraph::certify::{make_certificate, verify_certificate};
use slgraph::construct::{
    bad_witness, base_triangulation, build_c123, build_c1234, lemma1_graph, BadWitness,
};
use slgraph::formats::{decode, encode, Document, EdgeListInput};
use slgraph::graph::SimpleGraph;
use slgraph::perm::{parse_cycles, symmetric_group, PermSet, Permutation, SignedMode};
use slgraph::slabel::{
    from_gain, from_group_zk, from_signed, labels_within, relabel_colours, reverse_arc, Arc,
    Colouring, SLabeledGraph, Sign,
};
use slgraph::solver::{
    brute_force_colourings, enumerate_colourings, solve_with, SolveOptions, Status,
};

#[derive(Parser)]
#[command(name = "slgraph", version, about = "S-labeled graph colouring toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Case {
    /// The 24-face stacked triangulation, identity labels, k = 4.
    Base,
    /// The fixed-up uniquely 4-colourable core, identity labels, k = 4.
    Lemma1,
    /// The non-colourable instance over {id, (123)}.
    C123,
    /// The non-colourable instance over {id, (1234)}.
    C1234,
}

#[derive(Clone, Copy, ValueEnum)]
enum AdaptKind {
    Signed,
    Zk,
    Gain,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Nk,
    Zk,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Conjugation,
    Reversal,
    Monotonicity,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the stock graphs or labeled instances.
    Construct {
        #[arg(long, value_enum)]
        case: Case,
        /// Output path; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A non-4-colourable instance with labels in {id, p}, or the citation
    /// that settles the class of p.
    BadWitness {
        /// The permutation p in cycle notation, e.g. "(123)" or "(12)(34)".
        #[arg(long)]
        perm: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide an instance, or enumerate / count its proper colourings.
    Solve {
        path: PathBuf,
        /// List up to N colourings instead of deciding.
        #[arg(long, conflicts_with = "count")]
        enumerate: Option<usize>,
        /// Print the number of proper colourings.
        #[arg(long)]
        count: bool,
        /// Break colour symmetry (identity-labeled instances only).
        #[arg(long)]
        symmetry: bool,
    },
    /// Produce a refutation certificate for a constructed instance.
    Certify {
        path: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Verify a certificate against its instance.
    CheckCert { cert: PathBuf, path: PathBuf },
    /// Translate a signed / Z_k-weighted / gain edge list into a labeled
    /// instance.
    Adapt {
        #[arg(long = "from", value_enum)]
        from: AdaptKind,
        /// Colour count (gain colour count for --from gain).
        #[arg(long)]
        k: usize,
        /// Signed flavour: nk pairs colours, zk negates in Z_k.
        #[arg(long, value_enum, default_value = "nk")]
        mode: ModeArg,
        #[arg(long)]
        out: Option<PathBuf>,
        path: PathBuf,
    },
    /// Print DOT text for a stored graph, instance or labeling.
    Export {
        /// Input document to render.
        #[arg(long)]
        dot: PathBuf,
    },
    /// Run a named randomized invariant suite.
    Props {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0x51ab)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Construct { case, out } => construct(case, out.as_deref()),
        Command::BadWitness { perm, out } => witness(&perm, out.as_deref()),
        Command::Solve {
            path,
            enumerate,
            count,
            symmetry,
        } => solve_cmd(&path, enumerate, count, symmetry),
        Command::Certify { path, out } => certify_cmd(&path, &out),
        Command::CheckCert { cert, path } => check_cert(&cert, &path),
        Command::Adapt {
            from,
            k,
            mode,
            out,
            path,
        } => adapt(from, k, mode, out.as_deref(), &path),
        Command::Export { dot } => export_dot(&dot),
        Command::Props { suite, cases, seed } => props(suite, cases, seed),
    }
}

fn read_document(path: &Path) -> Result<Document> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    decode(&bytes).with_context(|| format!("parsing {}", path.display()))
}

fn emit(doc: &Document, out: Option<&Path>) -> Result<()> {
    let bytes = encode(doc);
    match out {
        Some(path) => std::fs::write(path, bytes)
            .with_context(|| format!("writing {}", path.display()))?,
        None => print!("{}", String::from_utf8(bytes).expect("canonical JSON is UTF-8")),
    }
    Ok(())
}

fn construct(case: Case, out: Option<&Path>) -> Result<u8> {
    let doc = match case {
        Case::Base => {
            let g = base_triangulation();
            Document::SLabeled(SLabeledGraph::all_id(&g.to_simple(), 4)?)
        }
        Case::Lemma1 => {
            let lem = lemma1_graph()?;
            Document::SLabeled(SLabeledGraph::all_id(&lem.graph.to_simple(), 4)?)
        }
        Case::C123 => Document::Instance(build_c123()?),
        Case::C1234 => Document::Instance(build_c1234()?),
    };
    emit(&doc, out)?;
    Ok(0)
}

fn witness(perm: &str, out: Option<&Path>) -> Result<u8> {
    let p = parse_cycles(perm, 4).with_context(|| format!("parsing permutation {perm:?}"))?;
    match bad_witness(&p)? {
        BadWitness::Instance(inst) => {
            emit(&Document::Instance(*inst), out)?;
            eprintln!("non-colourable instance for {{id, {p}}}");
            Ok(0)
        }
        BadWitness::Citation(c) => {
            println!("{}: {}", c.permutation, c.note);
            Ok(0)
        }
    }
}

fn labeled_of(doc: Document, path: &Path) -> Result<SLabeledGraph> {
    match doc {
        Document::SLabeled(l) => Ok(l),
        Document::Instance(inst) => Ok(inst.labeled),
        _ => bail!("{} does not hold a labeled instance", path.display()),
    }
}

const COUNT_CAP: usize = 1_000_000;

fn solve_cmd(path: &Path, enumerate: Option<usize>, count: bool, symmetry: bool) -> Result<u8> {
    let l = labeled_of(read_document(path)?, path)?;
    if count {
        let e = enumerate_colourings(&l, COUNT_CAP)?;
        if e.truncated {
            bail!("more than {COUNT_CAP} colourings; refusing to print a partial count");
        }
        println!("{}", e.colourings.len());
        return Ok(if e.colourings.is_empty() { 1 } else { 0 });
    }
    if let Some(limit) = enumerate {
        let e = enumerate_colourings(&l, limit)?;
        for c in &e.colourings {
            println!("{}", serde_json::to_string(&c.0)?);
        }
        if e.truncated {
            eprintln!("truncated: more than {limit} colourings exist");
        }
        return Ok(if e.colourings.is_empty() { 1 } else { 0 });
    }
    let t = Instant::now();
    let result = solve_with(
        &l,
        &SolveOptions {
            symmetry_breaking: symmetry,
            seed: None,
        },
    );
    let stats = serde_json::json!({
        "nodes": result.stats.nodes,
        "propagations": result.stats.propagations,
        "wall_ms": t.elapsed().as_secs_f64() * 1000.0,
    });
    eprintln!("{stats}");
    match result.status {
        Status::Sat => {
            println!("SAT");
            let w = result.witness.expect("SAT carries a witness");
            println!("{}", serde_json::to_string(&w.0)?);
            Ok(0)
        }
        Status::Unsat => {
            println!("UNSAT");
            Ok(1)
        }
    }
}

fn certify_cmd(path: &Path, out: &Path) -> Result<u8> {
    let doc = read_document(path)?;
    let Document::Instance(inst) = doc else {
        bail!(
            "{} carries no construction provenance; only constructed instances can be certified",
            path.display()
        );
    };
    let cert = make_certificate(&inst)?;
    emit(&Document::Certificate(cert), Some(out))?;
    eprintln!("certificate written to {}", out.display());
    Ok(0)
}

fn check_cert(cert_path: &Path, instance_path: &Path) -> Result<u8> {
    let Document::Certificate(cert) = read_document(cert_path)? else {
        bail!("{} is not a certificate", cert_path.display());
    };
    let l = labeled_of(read_document(instance_path)?, instance_path)?;
    match verify_certificate(&cert, &l) {
        Ok(()) => {
            println!("certificate OK: the instance admits no proper colouring");
            Ok(0)
        }
        Err(e) => {
            println!("certificate INVALID: {e}");
            Ok(1)
        }
    }
}

fn adapt(
    from: AdaptKind,
    k: usize,
    mode: ModeArg,
    out: Option<&Path>,
    path: &Path,
) -> Result<u8> {
    let Document::EdgeList(input) = read_document(path)? else {
        bail!("{} is not an edge list", path.display());
    };
    let labeled = match from {
        AdaptKind::Signed => adapt_signed(&input, k, mode)?,
        AdaptKind::Zk => {
            let arcs: Vec<(usize, usize, usize)> = input
                .edges
                .iter()
                .map(|e| {
                    let w = e
                        .weight
                        .ok_or_else(|| anyhow!("edge {}-{} has no weight", e.tail, e.head))?;
                    Ok((e.tail, e.head, w))
                })
                .collect::<Result<_>>()?;
            from_group_zk(input.vertices, &arcs, k)?
        }
        AdaptKind::Gain => {
            let group = input
                .group
                .as_ref()
                .ok_or_else(|| anyhow!("gain input needs a group table"))?;
            let arcs: Vec<(usize, usize, usize)> = input
                .edges
                .iter()
                .map(|e| {
                    let g = e
                        .gain
                        .ok_or_else(|| anyhow!("edge {}-{} has no gain", e.tail, e.head))?;
                    Ok((e.tail, e.head, g))
                })
                .collect::<Result<_>>()?;
            from_gain(input.vertices, &arcs, group, k)?
        }
    };
    emit(&Document::SLabeled(labeled), out)?;
    Ok(0)
}

fn adapt_signed(input: &EdgeListInput, k: usize, mode: ModeArg) -> Result<SLabeledGraph> {
    let mut pairs: Vec<((usize, usize), Sign)> = input
        .edges
        .iter()
        .map(|e| {
            let sign = match e.sign {
                Some(1) => Sign::Positive,
                Some(-1) => Sign::Negative,
                _ => bail!("edge {}-{} has no sign", e.tail, e.head),
            };
            Ok(((e.tail.min(e.head), e.tail.max(e.head)), sign))
        })
        .collect::<Result<_>>()?;
    pairs.sort_by_key(|&(key, _)| key);
    let g = SimpleGraph::new(input.vertices, pairs.iter().map(|&(key, _)| key))?;
    let signs: Vec<Sign> = pairs.iter().map(|&(_, s)| s).collect();
    let mode = match mode {
        ModeArg::Nk => SignedMode::Nk,
        ModeArg::Zk => SignedMode::Zk,
    };
    Ok(from_signed(&g, &signs, k, mode)?)
}

fn export_dot(path: &Path) -> Result<u8> {
    let dot = match read_document(path)? {
        Document::SLabeled(l) => slgraph::formats::to_dot(&l),
        Document::Instance(inst) => slgraph::formats::to_dot(&inst.labeled),
        Document::Plane(g) => slgraph::formats::plane_to_dot(&g),
        _ => bail!("{} holds nothing drawable", path.display()),
    };
    print!("{dot}");
    Ok(0)
}

// ---------------------------------------------------------------------------
// Invariant suites
// ---------------------------------------------------------------------------

fn random_instance(rng: &mut StdRng) -> Result<SLabeledGraph> {
    let n = rng.random_range(2..=5);
    let k = rng.random_range(2..=4usize);
    let sk = symmetric_group(k)?;
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(0.6) {
                let label = sk.members()[rng.random_range(0..sk.len())].clone();
                let (tail, head) = if rng.random_bool(0.5) { (u, v) } else { (v, u) };
                arcs.push(Arc { tail, head, label });
            }
        }
    }
    Ok(SLabeledGraph::new(n, k, arcs)?)
}

fn props(suite: Suite, cases: usize, seed: u64) -> Result<u8> {
    let mut failures = 0;
    let run_conj = matches!(suite, Suite::Conjugation | Suite::All);
    let run_rev = matches!(suite, Suite::Reversal | Suite::All);
    let run_mono = matches!(suite, Suite::Monotonicity | Suite::All);
    if run_conj {
        failures += report("conjugation", cases, conjugation_suite(cases, seed)?);
    }
    if run_rev {
        failures += report("reversal", cases, reversal_suite(cases, seed)?);
    }
    if run_mono {
        failures += report("monotonicity", cases, monotonicity_suite(cases, seed)?);
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

fn report(name: &str, cases: usize, failed: usize) -> usize {
    if failed == 0 {
        println!("prop {name}: ok ({cases} cases)");
        0
    } else {
        println!("prop {name}: FAILED on {failed} of {cases} cases");
        1
    }
}

/// Conjugating the label set and renaming colours biject the solution set.
fn conjugation_suite(cases: usize, seed: u64) -> Result<usize> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut failed = 0;
    for _ in 0..cases {
        let l = random_instance(&mut rng)?;
        let sk = symmetric_group(l.k())?;
        let pi = sk.members()[rng.random_range(0..sk.len())].clone();
        let relabeled = relabel_colours(&l, &pi)?;
        let mut mapped: Vec<Colouring> = brute_force_colourings(&l)?
            .iter()
            .map(|f| f.map_colours(&pi))
            .collect();
        mapped.sort();
        if mapped != brute_force_colourings(&relabeled)? {
            failed += 1;
            continue;
        }
        let back = relabel_colours(&relabeled, &pi.inverse())?;
        if back != l {
            failed += 1;
        }
    }
    Ok(failed)
}

/// Reversing an arc (and inverting its label) never changes the solution set.
fn reversal_suite(cases: usize, seed: u64) -> Result<usize> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x9e3779b97f4a7c15);
    let mut failed = 0;
    for _ in 0..cases {
        let l = random_instance(&mut rng)?;
        if l.arcs().is_empty() {
            continue;
        }
        let pick = rng.random_range(0..l.arcs().len());
        let (u, v) = {
            let a = &l.arcs()[pick];
            (a.tail, a.head)
        };
        let reversed = reverse_arc(&l, u, v)?;
        if brute_force_colourings(&l)? != brute_force_colourings(&reversed)? {
            failed += 1;
        }
    }
    Ok(failed)
}

/// A labeling into S is a labeling into every superset of S.
fn monotonicity_suite(cases: usize, seed: u64) -> Result<usize> {
    let mut rng = StdRng::seed_from_u64(seed ^ 0x6a09e667f3bcc908);
    let mut failed = 0;
    for _ in 0..cases {
        let l = random_instance(&mut rng)?;
        let sk = symmetric_group(l.k())?;
        let used = PermSet::new(l.k(), l.arcs().iter().map(|a| a.label.clone()))?;
        let with_extra = {
            let mut members: Vec<Permutation> = used.members().to_vec();
            members.push(sk.members()[rng.random_range(0..sk.len())].clone());
            PermSet::new(l.k(), members)?
        };
        let ok = (l.arcs().is_empty() || labels_within(&l, &used))
            && used.is_subset_of(&with_extra)
            && labels_within(&l, &with_extra)
            && labels_within(&l, &sk);
        if !ok {
            failed += 1;
        }
    }
    Ok(failed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_on_default_seed() {
        assert_eq!(conjugation_suite(50, 1).unwrap(), 0);
        assert_eq!(reversal_suite(50, 1).unwrap(), 0);
        assert_eq!(monotonicity_suite(50, 1).unwrap(), 0);
    }
}
