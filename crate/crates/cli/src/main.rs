//! `gridlink` command-line tool.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use gridlink::collision::collision_profile;
use gridlink::generators::{
    assemble_path, covering_circuit, covering_cycle_even, distance_optimal_trail, epsilon_path,
    explicit_chain, triangular_spiral, SpiralKind, SpiralParams,
};
use gridlink::io::{render_svg, run_sweep, summarize, ChainDocument, SvgOptions, SweepKind};
use gridlink::search::{search_min_trail, CandidateModel};
use gridlink::{Chain, ChainKind, Error, RadicalSum, Rational};

#[derive(Parser)]
#[command(name = "gridlink", version, about = "Minimum-link covering chains for the n×n point grid")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a chain and certify it.
    Generate(GenerateArgs),
    /// Classify a chain document.
    Verify(VerifyArgs),
    /// Generate and certify every kind over a range of grid sizes.
    Sweep(SweepArgs),
    /// Tabulate grid nodes on the bridge line for a range of grid sizes.
    Collisions(CollisionArgs),
    /// Exhaustive restricted-model search for a covering trail.
    Search(SearchArgs),
    /// Draw a chain document or a generated chain as SVG.
    Render(RenderArgs),
}

#[derive(Args)]
struct Format {
    /// JSON output.
    #[arg(long, group = "format")]
    json: bool,
    /// CSV output (the default).
    #[arg(long, group = "format")]
    csv: bool,
    /// Markdown output.
    #[arg(long, group = "format")]
    md: bool,
}

#[derive(Args)]
struct GenerateArgs {
    /// path, circuit, cycle, distance-trail, epsilon-path, spiral-bottom,
    /// spiral-top or catalog:<id>.
    kind: String,
    /// Grid size (not used by catalog entries or epsilon-path).
    n: Option<usize>,
    /// ε for epsilon-path, as a fraction.
    #[arg(long, default_value = "1/10")]
    eps: String,
    /// Print the JSON document (the default unless --svg is given).
    #[arg(long)]
    json: bool,
    /// Also render SVG (to stdout, or next to the JSON with --out).
    #[arg(long)]
    svg: bool,
    /// Write `<name>.json` (and `<name>.svg`) into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Chain document, or `-` for stdin.
    file: PathBuf,
    /// Grid size, overriding the document.
    #[arg(long)]
    n: Option<usize>,
    /// Kind the chain must have (defaults to the declared kind).
    #[arg(long)]
    expect: Option<ChainKind>,
    /// Exact total length the chain must have, e.g. `20+6√2` or `20+6*sqrt(2)`.
    #[arg(long)]
    length: Option<String>,
    /// Also require the minimum number of edges.
    #[arg(long)]
    minimal: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SweepArgs {
    n_min: usize,
    n_max: usize,
    /// Comma-separated: path, circuit, cycle, distance-trail, collisions.
    #[arg(long, value_delimiter = ',', default_value = "path,circuit,cycle,distance-trail")]
    kinds: Vec<SweepKind>,
    #[command(flatten)]
    format: Format,
    /// Write `sweep.<ext>` into this directory instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CollisionArgs {
    n_min: usize,
    n_max: usize,
    #[command(flatten)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    n: usize,
    max_edges: usize,
    /// Lattice padding around the grid for candidate lines.
    #[arg(long, default_value_t = 2)]
    padding: i64,
    /// Shuffle the candidate line order with this seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Give up after this many seconds.
    #[arg(long)]
    budget: Option<f64>,
    /// Try every first line instead of one per symmetry class.
    #[arg(long)]
    no_symmetry: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// A chain document, or a generator kind as accepted by `generate`.
    source: String,
    n: Option<usize>,
    #[arg(long, default_value_t = 32.0)]
    scale: f64,
    #[arg(long, default_value_t = 1.0)]
    margin: f64,
    #[arg(long, default_value = "1/10")]
    eps: String,
    /// Output file (stdout if omitted).
    #[arg(long)]
    out: Option<PathBuf>,
}

/// Exit status: 1 = verification failure, 2 = impossible request, 3 = I/O or
/// parse error.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn verify(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Failure { code: 3, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Impossible(_)
            | Error::Domain(_)
            | Error::UnimplementedPattern(_)
            | Error::UnknownCatalogId(_)
            | Error::SearchRefused(_) => 2,
            Error::Parse(_) | Error::MalformedChain(_) => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::io(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

fn need_n(n: Option<usize>, kind: &str) -> Result<usize, Failure> {
    n.ok_or_else(|| Failure { code: 2, message: format!("`{kind}` needs a grid size") })
}

fn parse_eps(s: &str) -> Result<Rational, Failure> {
    s.parse::<Rational>().map_err(|e| Failure::io(format!("bad ε `{s}`: {e}")))
}

/// Builds the requested chain and a file stem for it.
fn build(kind: &str, n: Option<usize>, eps: &str) -> Result<(Chain, String), Failure> {
    if let Some(id) = kind.strip_prefix("catalog:") {
        return Ok((explicit_chain(id)?, id.to_string()));
    }
    let chain = match kind {
        "epsilon-path" => {
            let e = parse_eps(eps)?;
            let stem = format!("epsilon-path-{}", e.to_string().replace('/', "_"));
            return Ok((epsilon_path(&e)?, stem));
        }
        "path" => assemble_path(need_n(n, kind)?)?,
        "circuit" => covering_circuit(need_n(n, kind)?)?,
        "cycle" => covering_cycle_even(need_n(n, kind)?)?,
        "distance-trail" => distance_optimal_trail(need_n(n, kind)?)?,
        "spiral-bottom" => triangular_spiral(SpiralParams::new(need_n(n, kind)?, SpiralKind::Bottom)?)?,
        "spiral-top" => triangular_spiral(SpiralParams::new(need_n(n, kind)?, SpiralKind::Top)?)?,
        other => {
            return Err(Failure {
                code: 2,
                message: format!("unknown kind `{other}`"),
            })
        }
    };
    let stem = format!("{kind}-{}", chain.n());
    Ok((chain, stem))
}

fn write_or_print(out: Option<&Path>, name: &str, text: &str) -> CliResult {
    match out {
        Some(dir) => {
            fs::create_dir_all(dir)?;
            fs::write(dir.join(name), text)?;
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn generate(a: GenerateArgs) -> CliResult {
    let (chain, stem) = build(&a.kind, a.n, &a.eps)?;
    let summary = summarize(&chain)?;
    let mut doc = ChainDocument::from_chain(&chain).with_meta("generator", a.kind.as_str());
    if a.kind == "epsilon-path" {
        doc = doc.with_meta("eps", a.eps.as_str());
    }
    let svg = a.svg.then(|| render_svg(&chain, &SvgOptions::default()));
    match &a.out {
        Some(dir) => {
            write_or_print(Some(dir), &format!("{stem}.json"), &doc.to_json())?;
            if let Some(svg) = &svg {
                write_or_print(Some(dir), &format!("{stem}.svg"), svg)?;
            }
        }
        None => {
            if a.json || svg.is_none() {
                print!("{}", doc.to_json());
            }
            if let Some(svg) = &svg {
                print!("{svg}");
            }
        }
    }
    // Spiral fragments are not covering chains; there is nothing to certify.
    if chain.kind() != ChainKind::Unknown && !summary.certified() {
        return Err(Failure::verify(format!("generated chain does not certify:\n{summary}")));
    }
    Ok(())
}

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(Failure::from)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::io(format!("{}: {e}", path.display())))
    }
}

fn verify(a: VerifyArgs) -> CliResult {
    let mut doc = ChainDocument::from_json(&read_input(&a.file)?)?;
    if let Some(n) = a.n {
        doc.n = n;
    }
    if let Some(k) = a.expect {
        doc.kind = k;
    }
    let chain = doc.to_chain()?;
    let summary = summarize(&chain)?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary serializes"));
    } else {
        print!("{summary}");
    }
    let mut problems = Vec::new();
    if !summary.classification.satisfies(doc.kind) {
        problems.push(format!("not a covering {}", doc.kind));
    }
    if a.minimal && summary.min_link_length != Some(summary.link_length) {
        problems.push("not minimum-link".to_string());
    }
    if let Some(want) = &a.length {
        let want: RadicalSum = want.parse()?;
        let got = chain.total_length();
        match got {
            Ok(l) if l == want => {}
            Ok(l) => problems.push(format!("length {l} differs from {want}")),
            Err(e) => problems.push(format!("length not exact: {e}")),
        }
    }
    if problems.is_empty() {
        println!("result: pass");
        Ok(())
    } else {
        println!("result: fail");
        Err(Failure::verify(problems.join("; ")))
    }
}

fn table_output(format: &Format, json: String, csv: String, md: String) -> (String, &'static str) {
    if format.json {
        (json, "json")
    } else if format.md {
        (md, "md")
    } else {
        (csv, "csv")
    }
}

fn sweep(a: SweepArgs) -> CliResult {
    let report = run_sweep(a.n_min, a.n_max, &a.kinds)?;
    let (text, ext) = table_output(&a.format, report.to_json(), report.to_csv(), report.to_markdown());
    write_or_print(a.out.as_deref(), &format!("sweep.{ext}"), &text)?;
    if report.all_passed() {
        Ok(())
    } else {
        let failed = report.rows.iter().filter(|r| !r.passed()).count();
        Err(Failure::verify(format!("{failed} row(s) failed")))
    }
}

fn collisions(a: CollisionArgs) -> CliResult {
    let report = run_sweep(a.n_min.max(1), a.n_max, &[SweepKind::Collisions])?;
    let (text, ext) = table_output(&a.format, report.to_json(), report.to_csv(), report.to_markdown());
    write_or_print(a.out.as_deref(), &format!("collisions.{ext}"), &text)?;
    // Report the first mismatch in detail.
    for n in a.n_min.max(4)..=a.n_max {
        collision_profile(n)?.check()?;
    }
    Ok(())
}

fn search(a: SearchArgs) -> CliResult {
    let mut model = CandidateModel::new(a.n, a.max_edges);
    model.padding = a.padding;
    model.seed = a.seed;
    model.use_symmetry = !a.no_symmetry;
    model.time_budget = a.budget.map(Duration::from_secs_f64);
    let res = search_min_trail(&model)?;
    let doc = res.chain.as_ref().map(ChainDocument::from_chain);
    if a.json {
        let value = serde_json::json!({
            "model": res.model,
            "n": res.n,
            "padding": res.padding,
            "max_edges": res.max_edges,
            "complete": res.complete,
            "explored": res.explored,
            "chain": doc,
        });
        println!("{}", serde_json::to_string_pretty(&value).expect("serializes"));
    } else {
        println!("model: {} (padding {})", res.model, res.padding);
        println!("explored: {}", res.explored);
        match &res.chain {
            Some(c) => {
                let v: Vec<String> = c.vertices().iter().map(|p| p.to_string()).collect();
                println!("found {} edges: {}", c.link_length(), v.join("-"));
            }
            None if res.complete => println!("none: no covering trail with at most {} edges in the model", res.max_edges),
            None => println!("none found before the time budget ran out (search incomplete)"),
        }
    }
    if res.chain.is_none() && !res.complete {
        return Err(Failure::verify("search incomplete"));
    }
    Ok(())
}

fn render(a: RenderArgs) -> CliResult {
    let chain = if Path::new(&a.source).is_file() {
        ChainDocument::from_json(&read_input(Path::new(&a.source))?)?.to_chain()?
    } else {
        build(&a.source, a.n, &a.eps)?.0
    };
    let svg = render_svg(&chain, &SvgOptions { scale: a.scale, margin: a.margin });
    match &a.out {
        Some(path) => fs::write(path, svg)?,
        None => print!("{svg}"),
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = std::env::var("GRIDLINK_THREADS").ok().and_then(|v| v.parse().ok()) {
        // Fails only if a pool already exists, in which case the default is kept.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    }
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Verify(a) => verify(a),
        Command::Sweep(a) => sweep(a),
        Command::Collisions(a) => collisions(a),
        Command::Search(a) => search(a),
        Command::Render(a) => render(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("gridlink: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
