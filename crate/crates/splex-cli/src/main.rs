//! `splex` — kernelize, solve, verify, and generate instances of s-plex
//! cluster vertex deletion.
//!
//! Exit codes are uniform across subcommands: 0 for a positive outcome
//! (reduced / YES / valid), 2 for a negative one (no_instance / NO /
//! invalid), and 1 for any error, including malformed input files and bad
//! command lines.

mod format;
mod report;

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use splex_core::fisg::enumerate_minimal_fisgs;
use splex_core::gen::{generate, GenSpec};
use splex_core::kernel::{kernelize, KernelStatus};
use splex_core::solver::{solve, solve_branching, verify_solution};
use splex_core::Instance;

#[derive(Parser)]
#[command(
    name = "splex",
    version,
    about = "kernelization and exact solving for s-plex cluster vertex deletion"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// reduce an instance to a problem kernel and write a JSON report
    Kernelize {
        /// graph file to read
        #[arg(long)]
        input: PathBuf,
        /// plex parameter (s >= 2)
        #[arg(long)]
        s: u32,
        /// deletion budget
        #[arg(long)]
        k: u32,
        /// where to write the JSON kernel report
        #[arg(long)]
        output: PathBuf,
    },
    /// decide the instance exactly and print a minimum deletion set
    Solve {
        /// graph file to read
        #[arg(long)]
        input: PathBuf,
        /// plex parameter
        #[arg(long)]
        s: u32,
        /// deletion budget
        #[arg(long)]
        k: u32,
        /// branch on the input directly instead of kernelizing first
        #[arg(long)]
        no_kernel: bool,
    },
    /// check a proposed deletion set against an instance
    Verify {
        /// graph file to read
        #[arg(long)]
        input: PathBuf,
        /// plex parameter
        #[arg(long)]
        s: u32,
        /// deletion budget
        #[arg(long)]
        k: u32,
        /// file holding the proposed vertex ids
        #[arg(long)]
        solution: PathBuf,
    },
    /// generate a planted yes-instance and its solution sidecar
    Gen {
        /// RNG seed; identical seeds reproduce identical files
        #[arg(long)]
        seed: u64,
        /// plex parameter
        #[arg(long)]
        s: u32,
        /// comma-separated cluster sizes, e.g. 5,4,4
        #[arg(long, value_delimiter = ',', required = true)]
        clusters: Vec<u32>,
        /// intra-cluster edges to remove per cluster
        #[arg(long, default_value_t = 0)]
        missing: u32,
        /// noise vertices wired randomly into the clusters
        #[arg(long, default_value_t = 0)]
        noise: u32,
        /// probability of each noise-to-cluster edge
        #[arg(long, default_value_t = 0.5)]
        prob: f64,
        /// graph file to write; the planted set goes to <output>.solution
        #[arg(long)]
        output: PathBuf,
    },
    /// list every minimal forbidden induced subgraph up to a size cap
    EnumerateFisgs {
        /// graph file to read
        #[arg(long)]
        input: PathBuf,
        /// plex parameter
        #[arg(long)]
        s: u32,
        /// largest witness size to report
        #[arg(long)]
        max_size: u32,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // --help and --version land here as non-errors and keep exit 0;
            // genuine usage mistakes exit 1 like every other error.
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            // a closed stdout (e.g. piping into `head`) is not an error;
            // leave quietly like any well-behaved filter.
            if e.downcast_ref::<io::Error>()
                .is_some_and(|ioe| ioe.kind() == io::ErrorKind::BrokenPipe)
            {
                process::exit(0);
            }
            eprintln!("error: {e:#}");
            1
        }
    };
    process::exit(code);
}

fn run(cli: Cli) -> Result<i32> {
    match cli.cmd {
        Cmd::Kernelize { input, s, k, output } => cmd_kernelize(&input, s, k, &output),
        Cmd::Solve { input, s, k, no_kernel } => cmd_solve(&input, s, k, no_kernel),
        Cmd::Verify { input, s, k, solution } => cmd_verify(&input, s, k, &solution),
        Cmd::Gen { seed, s, clusters, missing, noise, prob, output } => {
            cmd_gen(seed, s, clusters, missing, noise, prob, &output)
        }
        Cmd::EnumerateFisgs { input, s, max_size } => cmd_enumerate_fisgs(&input, s, max_size),
    }
}

fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_instance(input: &Path, k: u32, s: u32) -> Result<Instance> {
    let g = format::parse_graph(&read_text(input)?)
        .with_context(|| format!("malformed graph file {}", input.display()))?;
    Ok(Instance::new(g, k, s))
}

fn cmd_kernelize(input: &Path, s: u32, k: u32, output: &Path) -> Result<i32> {
    let inst = load_instance(input, k, s)?;
    let result = kernelize(&inst)?;
    let report = report::build_report(&inst, &result);
    let mut text = serde_json::to_string_pretty(&report)?;
    text.push('\n');
    fs::write(output, text).with_context(|| format!("cannot write {}", output.display()))?;
    let mut out = io::stdout().lock();
    match result.status {
        KernelStatus::Reduced => {
            writeln!(
                out,
                "reduced: {} -> {} vertices, k {} -> {}, {} forced",
                inst.graph.vertex_count(),
                result.reduced.graph.vertex_count(),
                inst.k,
                result.reduced.k,
                result.forced.len()
            )?;
            Ok(0)
        }
        KernelStatus::NoInstance => {
            writeln!(out, "no_instance: no deletion set of size <= {k} exists")?;
            Ok(2)
        }
    }
}

fn cmd_solve(input: &Path, s: u32, k: u32, no_kernel: bool) -> Result<i32> {
    let inst = load_instance(input, k, s)?;
    let sol = if no_kernel {
        if s < 1 {
            bail!("plex parameter must be at least 1");
        }
        solve_branching(&inst)
    } else {
        solve(&inst)?
    };
    let mut out = io::stdout().lock();
    match sol {
        Some(sol) => {
            writeln!(out, "YES")?;
            if !sol.vertices.is_empty() {
                writeln!(out, "{}", format::id_list(&sol.vertices))?;
            }
            Ok(0)
        }
        None => {
            writeln!(out, "NO")?;
            Ok(2)
        }
    }
}

fn cmd_verify(input: &Path, s: u32, k: u32, solution: &Path) -> Result<i32> {
    if s < 1 {
        bail!("plex parameter must be at least 1");
    }
    let inst = load_instance(input, k, s)?;
    let sol = format::parse_solution(&read_text(solution)?)
        .with_context(|| format!("malformed solution file {}", solution.display()))?;
    let mut out = io::stdout().lock();
    if sol.len() > inst.k as usize {
        writeln!(out, "invalid: solution has {} vertices, budget is {}", sol.len(), inst.k)?;
        return Ok(2);
    }
    if let Some(&v) = sol.iter().find(|&&v| !inst.graph.contains(v)) {
        writeln!(out, "invalid: vertex {v} is not in the graph")?;
        return Ok(2);
    }
    // components come back ordered by smallest member, so the first failure
    // reported is the first violated component.
    for comp in inst.graph.components_without(&sol) {
        if !inst.graph.induced(&comp).is_splex(s)? {
            writeln!(out, "invalid: component {} is not a {s}-plex", format::id_list(&comp))?;
            return Ok(2);
        }
    }
    debug_assert!(verify_solution(&inst, &sol));
    writeln!(out, "valid")?;
    Ok(0)
}

fn cmd_gen(
    seed: u64,
    s: u32,
    clusters: Vec<u32>,
    missing: u32,
    noise: u32,
    prob: f64,
    output: &Path,
) -> Result<i32> {
    if s < 1 {
        bail!("plex parameter must be at least 1");
    }
    if clusters.iter().any(|&c| c == 0) {
        bail!("cluster sizes must be positive");
    }
    if !(0.0..=1.0).contains(&prob) {
        bail!("--prob must lie in [0, 1]");
    }
    let spec = GenSpec {
        seed,
        s,
        cluster_sizes: clusters,
        intra_missing: missing,
        noise_vertices: noise,
        noise_edge_prob: prob,
    };
    let (inst, planted) = generate(&spec)?;
    fs::write(output, format::serialize_graph(&inst.graph))
        .with_context(|| format!("cannot write {}", output.display()))?;
    let sidecar = sidecar_path(output);
    fs::write(&sidecar, format::serialize_solution(&planted))
        .with_context(|| format!("cannot write {}", sidecar.display()))?;
    writeln!(
        io::stdout().lock(),
        "wrote {} ({} vertices, {} edges); planted solution of size {} in {}",
        output.display(),
        inst.graph.vertex_count(),
        inst.graph.edge_count(),
        planted.len(),
        sidecar.display()
    )?;
    Ok(0)
}

fn sidecar_path(output: &Path) -> PathBuf {
    let mut os = output.as_os_str().to_owned();
    os.push(".solution");
    PathBuf::from(os)
}

fn cmd_enumerate_fisgs(input: &Path, s: u32, max_size: u32) -> Result<i32> {
    if s < 1 {
        bail!("plex parameter must be at least 1");
    }
    let g = format::parse_graph(&read_text(input)?)
        .with_context(|| format!("malformed graph file {}", input.display()))?;
    // witness lists can run to many thousands of lines; buffer the writes.
    let mut out = BufWriter::new(io::stdout().lock());
    for witness in enumerate_minimal_fisgs(&g, s, max_size)? {
        writeln!(out, "{}", format::id_list(&witness.vertices))?;
    }
    out.flush()?;
    Ok(0)
}
