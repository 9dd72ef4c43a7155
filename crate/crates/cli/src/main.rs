use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use isoenum_core::filter::{filter_models, FilterMode};
use isoenum_core::fol::{parse_theory, Signature, Theory};
use isoenum_core::graph::{build_graph, dump_graph};
use isoenum_core::interp::{read_interpretations, write_interpretation};
use isoenum_core::kernel::{decode, encode, Cube, Encoding, Layout, HEADER_LEN};
use isoenum_core::search::{search, CanonMode, SearchOptions, Strategy};
use isoenum_core::store::StoreMode;

#[derive(Parser)]
#[command(name = "isoenum", version, about = "Isomorph-free finite model enumeration")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate the models of a theory up to isomorphism.
    Enumerate(EnumerateArgs),
    /// Drop isomorphic copies from a file of models.
    Filter(FilterArgs),
    /// Print the colored graph of one model or cube.
    Graph(GraphArgs),
}

#[derive(clap::Args)]
struct EnumerateArgs {
    /// Theory file.
    #[arg(short = 'f', long = "file")]
    file: PathBuf,
    /// Domain size.
    #[arg(short = 'n', long = "order")]
    order: usize,
    #[arg(long)]
    max_models: Option<u64>,
    #[arg(long, value_enum, default_value_t = StrategyArg::RowMajor)]
    strategy: StrategyArg,
    /// Try every value at each cell instead of capping at the least new number.
    #[arg(long)]
    no_lnh: bool,
    #[arg(long)]
    no_propagation: bool,
    #[arg(long, value_enum, default_value_t = CanonArg::Graph)]
    canon: CanonArg,
    #[arg(long, value_enum, default_value_t = OutputArg::Interp)]
    output: OutputArg,
    /// Store 128-bit digests of keys instead of whole keys.
    #[arg(long)]
    fingerprint: bool,
    /// Abort when the stored keys exceed this many bytes.
    #[arg(long)]
    store_cap: Option<u64>,
    /// Abort after this many decisions.
    #[arg(long)]
    node_cap: Option<u64>,
}

#[derive(clap::Args)]
struct FilterArgs {
    /// Theory file; needed for compact input and for numerals.
    #[arg(short = 'f', long = "file")]
    file: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ModeArg::Graph)]
    mode: ModeArg,
    /// Output format; defaults to the input format.
    #[arg(long, value_enum)]
    output: Option<FormatArg>,
    /// Models to read; standard input if absent.
    input: Option<PathBuf>,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Theory file giving the signature.
    #[arg(short = 'f', long = "file", required_unless_present = "signature")]
    file: Option<PathBuf>,
    /// Signature as `name/arity, ...`, relations as `rel name/arity`.
    #[arg(short = 's', long, conflicts_with = "file")]
    signature: Option<String>,
    /// Compact hex encoding; read from standard input if absent.
    hex: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    RowMajor,
    Concentric,
}

#[derive(Clone, Copy, ValueEnum)]
enum CanonArg {
    Graph,
    Perm,
    Off,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputArg {
    Interp,
    Compact,
    Count,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Graph,
    Brute,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Interp,
    Compact,
}

/// Exit status for runs stopped by a resource cap.
const EXIT_ABORTED: u8 = 2;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(u8::from(usage));
        }
    };
    let result = match cli.command {
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Filter(args) => cmd_filter(args).map(|()| 0),
        Command::Graph(args) => cmd_graph(args).map(|()| 0),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn read_theory(path: &Path) -> Result<Theory> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_theory(&text).with_context(|| format!("parsing {}", path.display()))
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<u8> {
    if args.order < 2 {
        bail!("the domain size must be at least 2");
    }
    let theory = read_theory(&args.file)?;
    let options = SearchOptions {
        strategy: match args.strategy {
            StrategyArg::RowMajor => Strategy::RowMajor,
            StrategyArg::Concentric => Strategy::Concentric,
        },
        lnh: !args.no_lnh,
        propagation: !args.no_propagation,
        canon: match args.canon {
            CanonArg::Graph => CanonMode::Graph,
            CanonArg::Perm => CanonMode::Perm,
            CanonArg::Off => CanonMode::Off,
        },
        max_models: args.max_models,
        store_mode: if args.fingerprint {
            StoreMode::Fingerprint
        } else {
            StoreMode::Full
        },
        store_cap: args.store_cap,
        node_cap: args.node_cap,
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut write_error: Option<io::Error> = None;
    let mut sink = |index: u64, c: &Cube| {
        if write_error.is_some() {
            return;
        }
        let r = match args.output {
            OutputArg::Interp => out.write_all(write_interpretation(c, index + 1).as_bytes()),
            OutputArg::Compact => writeln!(out, "{}", encode(c).to_hex()),
            OutputArg::Count => Ok(()),
        };
        if let Err(e) = r {
            write_error = Some(e);
        }
    };
    let stats = search(&theory, args.order, &options, &mut sink)?;
    if let Some(e) = write_error {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return Err(e.into());
        }
    }
    if args.output == OutputArg::Count {
        writeln!(out, "{}", stats.models)?;
    }
    out.flush().or_else(|e| if e.kind() == io::ErrorKind::BrokenPipe { Ok(()) } else { Err(e) })?;
    eprintln!(
        "order={} models={} nodes={} pruned={} keys={} seconds={:.3}{}",
        args.order,
        stats.models,
        stats.nodes,
        stats.pruned,
        stats.keys,
        stats.elapsed.as_secs_f64(),
        match stats.outcome {
            isoenum_core::search::Outcome::Complete => "",
            isoenum_core::search::Outcome::ModelLimit => " stopped=max-models",
            isoenum_core::search::Outcome::StoreCap => " aborted=store-cap",
            isoenum_core::search::Outcome::NodeCap => " aborted=node-cap",
        }
    );
    Ok(if stats.aborted() { EXIT_ABORTED } else { 0 })
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).context("reading standard input")?;
            Ok(s)
        }
    }
}

fn looks_like_interpretations(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('%'))
        .is_some_and(|l| l.starts_with("interpretation"))
}

/// Models from compact hex lines, decoded over the theory's signature.
fn compact_models(text: &str, signature: &Signature) -> Result<Vec<isoenum_core::Result<Cube>>> {
    let mut layout: Option<Arc<Layout>> = None;
    let mut models = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let record = |e: isoenum_core::Error| anyhow!("line {}: {e}", i + 1);
        let encoding = Encoding::from_hex(line).map_err(record)?;
        if encoding.len() < HEADER_LEN {
            bail!("line {}: record shorter than its header", i + 1);
        }
        if layout.is_none() {
            let n = encoding.as_bytes()[0] as usize;
            layout = Some(Layout::new(signature.clone(), n).map_err(record)?);
        }
        let l = layout.as_ref().expect("set above");
        models.push(Ok(decode(l, &encoding).map_err(record)?));
    }
    Ok(models)
}

fn interp_models(text: &str, signature: Option<&Signature>) -> Result<Vec<isoenum_core::Result<Cube>>> {
    let mut layout: Option<Arc<Layout>> = None;
    let mut models = Vec::new();
    for record in read_interpretations(text) {
        let record = record?;
        if layout.is_none() {
            let sig = match signature {
                Some(s) => s.clone(),
                None => record.signature()?,
            };
            layout = Some(Layout::new(sig, record.order)?);
        }
        models.push(record.to_cube(layout.as_ref().expect("set above")));
    }
    Ok(models)
}

fn cmd_filter(args: FilterArgs) -> Result<()> {
    let theory = args.file.as_deref().map(read_theory).transpose()?;
    let signature = theory.as_ref().map(|t| &t.signature);
    let text = read_input(args.input.as_deref())?;
    let blank = text.lines().map(str::trim).all(|l| l.is_empty() || l.starts_with('%'));
    let (format, models) = if blank {
        (FormatArg::Interp, Vec::new())
    } else if looks_like_interpretations(&text) {
        (FormatArg::Interp, interp_models(&text, signature)?)
    } else {
        let sig = signature.ok_or_else(|| anyhow!("compact input needs the theory (-f)"))?;
        (FormatArg::Compact, compact_models(&text, sig)?)
    };
    let output = args.output.unwrap_or(format);
    let mode = match args.mode {
        ModeArg::Graph => FilterMode::Graph,
        ModeArg::Brute => FilterMode::BruteForce,
    };

    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut write_error: Option<io::Error> = None;
    let mut number = 0u64;
    let stats = filter_models(models, mode, |_, c| {
        if write_error.is_some() {
            return;
        }
        number += 1;
        let r = match output {
            FormatArg::Interp => out.write_all(write_interpretation(c, number).as_bytes()),
            FormatArg::Compact => writeln!(out, "{}", encode(c).to_hex()),
        };
        if let Err(e) = r {
            write_error = Some(e);
        }
    })?;
    if let Some(e) = write_error {
        if e.kind() != io::ErrorKind::BrokenPipe {
            return Err(e.into());
        }
    }
    out.flush().or_else(|e| if e.kind() == io::ErrorKind::BrokenPipe { Ok(()) } else { Err(e) })?;
    eprintln!("read={} kept={} dropped={}", stats.read, stats.kept, stats.dropped);
    Ok(())
}

fn cmd_graph(args: GraphArgs) -> Result<()> {
    let signature = match (&args.file, &args.signature) {
        (Some(path), _) => read_theory(path)?.signature,
        (None, Some(spec)) => Signature::from_spec(spec)?,
        (None, None) => bail!("a theory file or a signature is required"),
    };
    let hex = match args.hex {
        Some(h) => h,
        None => read_input(None)?
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty())
            .ok_or_else(|| anyhow!("no model on standard input"))?
            .to_string(),
    };
    let encoding = Encoding::from_hex(&hex)?;
    let n = *encoding
        .as_bytes()
        .first()
        .ok_or_else(|| anyhow!("empty encoding"))? as usize;
    let layout = Layout::new(signature, n)?;
    let cube = decode(&layout, &encoding)?;
    print!("{}", dump_graph(&build_graph(&cube)));
    Ok(())
}
