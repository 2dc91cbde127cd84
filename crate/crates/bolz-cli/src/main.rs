use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bolz::codes::{CostModel, IntegerCode};
use bolz::container::{self, Config, ParserKind};
use bolz::edge_gen::EdgeGenerator;
use bolz::gap::{render_csv, run_gap_experiment};
use bolz::graph::ParseGraph;
use bolz::index::TextIndex;
use bolz::parse::{greedy_parse_indexed, optimal_parse_indexed};

use bolz_cli::textgen::mixed_text;

#[derive(Parser)]
#[command(name = "bolz", version, about = "Bit-optimal LZ77 compression toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CodeArg {
    Fixed32,
    Gamma,
    Delta,
    Fib,
}

impl From<CodeArg> for IntegerCode {
    fn from(c: CodeArg) -> IntegerCode {
        match c {
            CodeArg::Fixed32 => IntegerCode::FixedWidth(32),
            CodeArg::Gamma => IntegerCode::EliasGamma,
            CodeArg::Delta => IntegerCode::EliasDelta,
            CodeArg::Fib => IntegerCode::Fibonacci,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ParserArg {
    Optimal,
    Greedy,
}

#[derive(Args, Clone, Copy)]
struct CodeOpts {
    /// Integer code for copy distances
    #[arg(long, value_enum, default_value = "gamma")]
    f_code: CodeArg,
    /// Integer code for copy lengths
    #[arg(long, value_enum, default_value = "gamma")]
    g_code: CodeArg,
    /// Raw bits per literal symbol
    #[arg(long, default_value_t = 8)]
    literal_bits: u8,
    /// Bound copy distances to the most recent N symbols
    #[arg(long)]
    window: Option<usize>,
}

impl CodeOpts {
    fn config(&self, parser: ParserKind) -> Config {
        Config {
            f: self.f_code.into(),
            g: self.g_code.into(),
            literal_bits: self.literal_bits,
            max_distance: self.window,
            parser,
        }
    }

    fn model(&self) -> CostModel {
        CostModel::new(self.f_code.into(), self.g_code.into(), self.literal_bits)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compress a file
    Compress {
        input: PathBuf,
        /// Output path (defaults to INPUT.bolz)
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[command(flatten)]
        codes: CodeOpts,
        /// Parsing strategy
        #[arg(long, value_enum, default_value = "optimal")]
        parser: ParserArg,
    },
    /// Decompress a file
    Decompress {
        input: PathBuf,
        /// Output path (defaults to INPUT without .bolz, else INPUT.out)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Report parse statistics for a file
    Stats {
        input: PathBuf,
        #[command(flatten)]
        codes: CodeOpts,
        /// Write Graphviz renderings of the full and pruned parse graphs
        /// (small inputs only)
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the greedy-versus-optimal gap experiment (CSV output)
    Gapfamily {
        /// Smallest family parameter
        #[arg(long, default_value_t = 2)]
        lmin: u32,
        /// Largest family parameter
        #[arg(long, default_value_t = 16)]
        lmax: u32,
        #[command(flatten)]
        codes: CodeOpts,
        /// Write the CSV here instead of stdout
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Time compression across doubling input sizes (CSV output)
    Bench {
        /// Smallest size as a power of two
        #[arg(long, default_value_t = 16)]
        min_exp: u32,
        /// Largest size as a power of two
        #[arg(long, default_value_t = 20)]
        max_exp: u32,
        /// Timed repetitions per size (the median is reported)
        #[arg(long, default_value_t = 5)]
        runs: usize,
        #[command(flatten)]
        codes: CodeOpts,
    },
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli.command) {
        eprintln!("error: {e}");
        std::process::exit(2);
    }
}

fn run(cmd: Command) -> Result<(), Box<dyn std::error::Error>> {
    match cmd {
        Command::Compress { input, output, codes, parser } => {
            let text = std::fs::read(&input)?;
            let parser = match parser {
                ParserArg::Optimal => ParserKind::Optimal,
                ParserArg::Greedy => ParserKind::Greedy,
            };
            let data = container::compress(&text, &codes.config(parser))?;
            let out = output.unwrap_or_else(|| with_suffix(&input, ".bolz"));
            std::fs::write(&out, &data)?;
            eprintln!(
                "{} -> {}: {} -> {} bytes",
                input.display(),
                out.display(),
                text.len(),
                data.len()
            );
        }
        Command::Decompress { input, output } => {
            let data = std::fs::read(&input)?;
            let text = container::decompress(&data)?;
            let out = output.unwrap_or_else(|| strip_suffix(&input, ".bolz"));
            std::fs::write(&out, &text)?;
            eprintln!(
                "{} -> {}: {} -> {} bytes",
                input.display(),
                out.display(),
                data.len(),
                text.len()
            );
        }
        Command::Stats { input, codes, dot } => {
            let text = std::fs::read(&input)?;
            stats(&text, &codes, dot.as_deref())?;
        }
        Command::Gapfamily { lmin, lmax, codes, csv } => {
            if lmin > lmax {
                return Err(format!("empty range: lmin {lmin} > lmax {lmax}").into());
            }
            let rows = run_gap_experiment(lmin..=lmax, &codes.model())?;
            let rendered = render_csv(&rows);
            match csv {
                Some(path) => std::fs::write(path, rendered)?,
                None => print!("{rendered}"),
            }
        }
        Command::Bench { min_exp, max_exp, runs, codes } => {
            bench(min_exp, max_exp, runs.max(1), &codes)?;
        }
    }
    Ok(())
}

fn with_suffix(p: &Path, suffix: &str) -> PathBuf {
    let mut s = p.as_os_str().to_owned();
    s.push(suffix);
    PathBuf::from(s)
}

fn strip_suffix(p: &Path, suffix: &str) -> PathBuf {
    match p.to_str().and_then(|s| s.strip_suffix(suffix)) {
        Some(stripped) if !stripped.is_empty() => PathBuf::from(stripped),
        _ => with_suffix(p, ".out"),
    }
}

/// Largest input the full-graph renderer accepts.
const DOT_LIMIT: usize = 512;

fn stats(text: &[u8], codes: &CodeOpts, dot: Option<&Path>) -> Result<(), Box<dyn std::error::Error>> {
    let model = codes.model();
    let n = text.len();
    let idx = TextIndex::build(text.to_vec());

    println!("n: {n}");
    if n == 0 {
        return Ok(());
    }
    let mut gen = EdgeGenerator::open(&idx, &model, codes.window)?;
    println!("distance classes: {}", gen.pass_count());
    println!("length classes: {}", gen.length_class_count());

    let mut histogram: BTreeMap<usize, usize> = BTreeMap::new();
    let mut total_edges = 0usize;
    let mut star = Vec::new();
    for i in 0..n {
        gen.forward_star(i, &mut star)?;
        let copies = star.iter().filter(|e| !e.is_literal()).count();
        *histogram.entry(copies).or_default() += 1;
        total_edges += copies;
    }
    println!("copy edges: {total_edges}");
    println!("copy edges per vertex (count: vertices):");
    for (edges, vertices) in &histogram {
        println!("  {edges}: {vertices}");
    }

    let greedy = greedy_parse_indexed(&idx, &model, codes.window)?;
    let optimal = optimal_parse_indexed(&idx, &model, codes.window)?;
    println!("greedy bits: {} ({} phrases)", greedy.total_bits, greedy.phrases.len());
    println!("optimal bits: {} ({} phrases)", optimal.total_bits, optimal.phrases.len());
    println!(
        "greedy/optimal ratio: {:.6}",
        greedy.total_bits as f64 / optimal.total_bits as f64
    );

    if let Some(path) = dot {
        if n > DOT_LIMIT {
            return Err(format!("graph rendering is limited to {DOT_LIMIT} bytes, input has {n}").into());
        }
        let g = ParseGraph::build(text, codes.window);
        let mut f = std::fs::File::create(path)?;
        f.write_all(g.to_dot(&model, false)?.as_bytes())?;
        f.write_all(g.to_dot(&model, true)?.as_bytes())?;
        println!("graphs written to {}", path.display());
    }
    Ok(())
}

fn bench(min_exp: u32, max_exp: u32, runs: usize, codes: &CodeOpts) -> Result<(), Box<dyn std::error::Error>> {
    if min_exp > max_exp || max_exp > 28 {
        return Err("size exponents must satisfy min <= max <= 28".into());
    }
    let config = codes.config(ParserKind::Optimal);
    let text = mixed_text(1usize << max_exp, 0xb01d_face);
    println!("n,median_ms,ratio_vs_prev,out_bytes");
    let mut prev: Option<f64> = None;
    for exp in min_exp..=max_exp {
        let n = 1usize << exp;
        let slice = &text[..n];
        let mut times = Vec::with_capacity(runs);
        let mut out_len = 0;
        for _ in 0..runs {
            let t0 = Instant::now();
            let data = container::compress(slice, &config)?;
            times.push(t0.elapsed().as_secs_f64() * 1e3);
            out_len = data.len();
        }
        times.sort_by(f64::total_cmp);
        let median = times[times.len() / 2];
        let ratio = prev.map_or(String::new(), |p| format!("{:.3}", median / p));
        println!("{n},{median:.3},{ratio},{out_len}");
        prev = Some(median);
    }
    Ok(())
}
