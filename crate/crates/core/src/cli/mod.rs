//! The `gridramsey` command line: `construct`, `verify`, `witness` and `solve`.
//!
//! Exit status is 0 on success, 1 when a checked property fails (or a random
//! construction comes up short), 2 on usage and input errors and 3 when a
//! solver runs out of budget. Results go to stdout as `key: value` lines, or
//! as one JSON object with `--json`; errors and progress go to stderr.

pub mod format;
pub mod report;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::color::ColorId;
use crate::coloring::{GraphColoring, GridColoring, Rectangle};
use crate::constructions::{
    asymmetric_grid, asymmetric_params, binary_coloring, f3_43_default, f3_56_coloring, grid_to_partite3,
    mubayi_coloring, partite3_to_grid, product_partition, random_grid, MubayiParams,
};
use crate::error::Error;
use crate::rng::{stream, uniform_grid, uniform_hyper};
use crate::solve::{
    exact_G, exact_G_resume, exact_f, exact_f_resume, exact_g, exact_g_resume, Certificate, Checkpoint, ProblemSpec,
    SearchResult, SolveError, SolveOptions, Verdict, DEFAULT_BUDGET,
};
use crate::subsets::binom;
use crate::verify::{
    check_chi_slow_grow_tracked, find_alternating_rectangle, non_bipartite_row_pair, shelah_columns, shelah_witness,
    stepdown_bound, stepdown_witness, verify_chromatic_pq_tracked, verify_pq_tracked, SampleMode, SlowGrowConfig,
    SlowGrowViolation,
};

use format::ColoringFile;
use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Largest number of edges a randomly generated input may have.
const MAX_RANDOM_EDGES: u64 = 1 << 26;

#[derive(Parser, Debug)]
#[command(name = "gridramsey", version, about = "Grid Ramsey colorings: construct, verify, find witnesses, solve small cases")]
struct Cli {
    /// Print results as a single JSON object.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for parallel scans (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a coloring or partition and write it as a coloring file.
    Construct(ConstructArgs),
    /// Check a property of a coloring file.
    Verify(VerifyArgs),
    /// Extract a monochromatic structure that a counting argument guarantees.
    Witness(WitnessArgs),
    /// Compute small exact values by exhaustive search.
    Solve(SolveArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    Binary,
    Mubayi,
    ProductPartition,
    GridRandom,
    AsymGrid,
    #[value(name = "f3-43")]
    F343,
    #[value(name = "f3-56")]
    F356,
    Partite3,
}

#[derive(Args, Debug)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Number of vertices (base N for product-partition).
    #[arg(long)]
    n: Option<usize>,
    /// Number of coordinates for product-partition.
    #[arg(long)]
    t: Option<usize>,
    /// Number of colors.
    #[arg(long)]
    r: Option<usize>,
    /// Number of rows wanted from grid-random.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Edge partition file for grid-random (default: binary classes of K_n).
    #[arg(long)]
    partition: Option<PathBuf>,
    /// Input file for partite3 (a grid or a hyper file).
    #[arg(long = "in")]
    input: Option<PathBuf>,
    /// Output file; without it the coloring is printed to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Property {
    AlternatingFree,
    Pq,
    ChromaticPq,
    ChiSlowGrow,
    BipartiteRows,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    property: Property,
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Number of sampled color sets (chromatic-pq: sample instead of
    /// enumerating; chi-slow-grow: default 1000).
    #[arg(long)]
    samples: Option<u64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Shelah,
    Stepdown,
}

#[derive(Args, Debug)]
struct WitnessArgs {
    #[arg(long, value_enum)]
    method: Method,
    /// Number of colors.
    #[arg(long)]
    r: usize,
    /// Uniformity (stepdown).
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// Seed of the random input used when `--in` is absent.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long = "in")]
    input: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Problem {
    /// Fewest colors of an alternating-free m x n grid.
    #[value(name = "g")]
    SmallG,
    /// Smallest n with no alternating-free r-coloring of the n x n grid.
    #[value(name = "G")]
    BigG,
    /// Fewest colors of a (p,q)-coloring of the complete k-uniform hypergraph.
    #[value(name = "f")]
    F,
}

#[derive(Args, Debug)]
struct SolveArgs {
    #[arg(value_enum)]
    problem: Problem,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Largest color count tried by g and f.
    #[arg(long, default_value_t = 16)]
    r_max: usize,
    /// Largest grid side tried by G.
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Search nodes allowed for this run.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Where to write a checkpoint if the budget runs out.
    #[arg(long)]
    checkpoint: Option<PathBuf>,
    /// Continue from a checkpoint file.
    #[arg(long)]
    resume: Option<PathBuf>,
    /// Disable color symmetry breaking.
    #[arg(long)]
    no_symmetry: bool,
    /// Write the certificate coloring here.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failed command: exit status and message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::usage(e.to_string())
    }
}

/// What a command produced on success.
struct Outcome {
    code: i32,
    stdout: String,
    /// Printed on stderr with an `error:` prefix (non-zero outcomes).
    note: Option<String>,
}

impl Outcome {
    fn report(r: &Report, json: bool, code: i32) -> Self {
        Outcome { code, stdout: r.render(json), note: None }
    }
}

type CmdResult = std::result::Result<Outcome, Failure>;

/// Runs the CLI with process stdout/stderr and returns the exit status.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

/// Runs the CLI writing to the given streams (progress lines still go to the
/// process stderr).
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    let result = match cli.threads {
        Some(0) => Err(Failure::usage("--threads must be at least 1")),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(&cli)),
            Err(e) => Err(Failure::usage(format!("cannot start thread pool: {e}"))),
        },
        None => dispatch(&cli),
    };
    match result {
        Ok(o) => {
            let _ = out.write_all(o.stdout.as_bytes());
            if let Some(note) = o.note {
                let _ = writeln!(err, "error: {note}");
            }
            o.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Construct(a) => construct(a, cli.json),
        Command::Verify(a) => verify(a, cli.json),
        Command::Witness(a) => witness(a, cli.json),
        Command::Solve(a) => solve(a, cli.json),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str, what: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::usage(format!("{what} needs --{flag}")))
}

fn read_file(path: &Path) -> Result<ColoringFile, Failure> {
    ColoringFile::read(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Prints a progress line on stderr every five seconds while `f` runs.
fn with_progress<T: Send>(label: &str, counter: Option<&AtomicU64>, f: impl FnOnce() -> T + Send) -> T {
    let done = AtomicBool::new(false);
    std::thread::scope(|s| {
        s.spawn(|| {
            let start = Instant::now();
            let mut next = Duration::from_secs(5);
            while !done.load(Ordering::Relaxed) {
                std::thread::sleep(Duration::from_millis(100));
                if start.elapsed() >= next {
                    match counter {
                        Some(c) => eprintln!("{label}: {} checked, {}s", c.load(Ordering::Relaxed), next.as_secs()),
                        None => eprintln!("{label}: running, {}s", next.as_secs()),
                    }
                    next += Duration::from_secs(5);
                }
            }
        });
        let out = f();
        done.store(true, Ordering::Relaxed);
        out
    })
}

fn emit(file: ColoringFile, out: Option<&Path>, mut r: Report, json: bool) -> CmdResult {
    match out {
        Some(path) => {
            file.write(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            r.put("file", file.kind()).put("out", path.display().to_string());
            Ok(Outcome::report(&r, json, EXIT_OK))
        }
        None => Ok(Outcome { code: EXIT_OK, stdout: file.to_text(), note: None }),
    }
}

fn graph_summary(r: &mut Report, c: &GraphColoring) {
    r.put("n", c.n()).put("k", c.k()).put("colors", c.colors_used());
}

fn construct(a: &ConstructArgs, json: bool) -> CmdResult {
    let mut r = Report::new();
    r.put("family", family_name(a.family));
    let file = match a.family {
        Family::Binary => {
            let c = binary_coloring(need(a.n, "n", "binary")?)?;
            graph_summary(&mut r, &c);
            ColoringFile::Graph(c)
        }
        Family::Mubayi => {
            let n = need(a.n, "n", "mubayi")?;
            let c = mubayi_coloring(n)?;
            graph_summary(&mut r, &c);
            let params = MubayiParams::for_n(n);
            r.put("t", params.t).put("base", params.m).put("palette_bound", params.palette_bound());
            ColoringFile::Graph(c)
        }
        Family::ProductPartition => {
            let p = product_partition(need(a.n, "n", "product-partition")?, need(a.t, "t", "product-partition")?)?;
            r.put("n", p.n()).put("classes", p.t());
            ColoringFile::Partition(p)
        }
        Family::GridRandom => {
            let colors = need(a.r, "r", "grid-random")?;
            let m = need(a.m, "m", "grid-random")?;
            let partition = match &a.partition {
                Some(path) => match read_file(path)? {
                    ColoringFile::Partition(p) => p,
                    other => return Err(Failure::usage(format!("--partition expects a partition file, got {}", other.kind()))),
                },
                None => binary_coloring(need(a.n, "n", "grid-random without --partition")?)?.to_partition()?,
            };
            r.put("r", colors).put("m", m).put("seed", a.seed).put("classes", partition.t());
            match random_grid(&partition, colors, m, a.seed)? {
                Some(g) => {
                    r.put("rows", g.m()).put("columns", g.n()).put("colors", g.palette_size());
                    ColoringFile::Grid(g)
                }
                None => {
                    r.put("rows", Value::Null);
                    return Ok(Outcome {
                        code: EXIT_VIOLATED,
                        stdout: r.render(json),
                        note: Some(format!("fewer than {m} rows survived; try another --seed")),
                    });
                }
            }
        }
        Family::AsymGrid => {
            let colors = need(a.r, "r", "asym-grid")?;
            let params = asymmetric_params(colors)?;
            let g = asymmetric_grid(colors)?;
            r.put("r", colors).put("prime", params.p).put("rows", g.m()).put("columns", g.n());
            r.put("colors", g.palette_size());
            ColoringFile::Grid(g)
        }
        Family::F343 => {
            let c = f3_43_default(need(a.n, "n", "f3-43")?)?;
            graph_summary(&mut r, &c);
            ColoringFile::Hyper(c)
        }
        Family::F356 => {
            let c = f3_56_coloring(need(a.n, "n", "f3-56")?)?;
            graph_summary(&mut r, &c);
            ColoringFile::Hyper(c)
        }
        Family::Partite3 => {
            let path = a.input.as_deref().ok_or_else(|| Failure::usage("partite3 needs --in"))?;
            match read_file(path)? {
                ColoringFile::Grid(g) => {
                    let h = grid_to_partite3(&g)?;
                    r.put("direction", "grid-to-hyper");
                    graph_summary(&mut r, &h);
                    ColoringFile::Hyper(h)
                }
                ColoringFile::Hyper(h) | ColoringFile::Graph(h) => {
                    let g = partite3_to_grid(&h)?;
                    r.put("direction", "hyper-to-grid").put("rows", g.m()).put("columns", g.n());
                    ColoringFile::Grid(g)
                }
                ColoringFile::Partition(_) => return Err(Failure::usage("partite3 expects a grid or hyper file")),
            }
        }
    };
    emit(file, a.out.as_deref(), r, json)
}

fn family_name(f: Family) -> String {
    f.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn color_values(table: &crate::color::ColorTable, ids: &[ColorId]) -> Value {
    ids.iter().map(|&id| Value::String(table.value(id).to_string())).collect()
}

fn one_based(v: &[usize]) -> Value {
    v.iter().map(|x| x + 1).collect()
}

fn rectangle_value(rect: &Rectangle) -> Value {
    rect.one_based().to_vec().into()
}

fn expect_grid(f: ColoringFile) -> Result<GridColoring, Failure> {
    match f {
        ColoringFile::Grid(g) => Ok(g),
        other => Err(Failure::usage(format!("expected a grid file, got {}", other.kind()))),
    }
}

fn expect_coloring(f: ColoringFile) -> Result<GraphColoring, Failure> {
    match f {
        ColoringFile::Graph(c) | ColoringFile::Hyper(c) => Ok(c),
        other => Err(Failure::usage(format!("expected a graph or hyper file, got {}", other.kind()))),
    }
}

fn verify(a: &VerifyArgs, json: bool) -> CmdResult {
    let input = read_file(&a.input)?;
    let mut r = Report::new();
    r.put("property", a.property.to_possible_value().expect("named").get_name());
    let counter = AtomicU64::new(0);
    let holds = match a.property {
        Property::AlternatingFree => {
            let g = expect_grid(input)?;
            r.put("rows", g.m()).put("columns", g.n());
            let found = with_progress("alternating-free", None, || find_alternating_rectangle(&g));
            r.put("holds", found.is_none());
            if let Some(rect) = found {
                r.put("rectangle", rectangle_value(&rect));
                let value = g.table().value(g.row(rect.i, rect.j, rect.j2)).to_string();
                r.put("row_color", value);
                let value = g.table().value(g.col(rect.i, rect.i2, rect.j)).to_string();
                r.put("column_color", value);
            }
            found.is_none()
        }
        Property::BipartiteRows => {
            let g = expect_grid(input)?;
            r.put("rows", g.m()).put("columns", g.n());
            let found = with_progress("bipartite-rows", None, || non_bipartite_row_pair(&g));
            r.put("holds", found.is_none());
            if let Some((i, i2, cycle)) = &found {
                r.put("row_pair", vec![i + 1, i2 + 1]).put("odd_cycle", one_based(cycle));
            }
            found.is_none()
        }
        Property::Pq => {
            let c = expect_coloring(input)?;
            let (p, q) = (need(a.p, "p", "pq")?, need(a.q, "q", "pq")?);
            r.put("n", c.n()).put("k", c.k()).put("p", p).put("q", q);
            let found = with_progress("pq", Some(&counter), || verify_pq_tracked(&c, p, q, &counter))?;
            r.put("holds", found.is_none());
            if let Some(v) = &found {
                r.put("vertices", one_based(&v.vertices));
                r.put("colors", color_values(c.table(), &v.colors));
                r.put("color_count", v.color_count());
            }
            found.is_none()
        }
        Property::ChromaticPq => {
            let c = expect_coloring(input)?;
            let (p, q) = (need(a.p, "p", "chromatic-pq")?, need(a.q, "q", "chromatic-pq")?);
            let mode = match a.samples {
                Some(count) => SampleMode::Sample { count, seed: a.seed },
                None => SampleMode::Exhaustive,
            };
            r.put("n", c.n()).put("p", p).put("q", q);
            r.put("mode", if a.samples.is_some() { "sample" } else { "exhaustive" });
            let found = with_progress("chromatic-pq", Some(&counter), || {
                verify_chromatic_pq_tracked(&c, p, q, mode, &counter)
            })?;
            r.put("checked", counter.load(Ordering::Relaxed));
            r.put("holds", found.is_none());
            if let Some(w) = &found {
                r.put("colors", color_values(c.table(), &w.colors));
                match w.result.chi() {
                    Some(chi) => r.put("chromatic_number", chi),
                    None => r.put("chromatic_number", Value::Null),
                };
            }
            found.is_none()
        }
        Property::ChiSlowGrow => {
            let c = expect_coloring(input)?;
            let cfg = SlowGrowConfig {
                samples: a.samples.unwrap_or(1000),
                seed: a.seed,
                ..SlowGrowConfig::default()
            };
            r.put("n", c.n()).put("samples", cfg.samples).put("seed", cfg.seed);
            let rep = with_progress("chi-slow-grow", Some(&counter), || check_chi_slow_grow_tracked(&c, &cfg, &counter))?;
            r.put("exhaustive_sets", rep.exhaustive_sets).put("sampled_sets", rep.sampled_sets);
            r.put("independent_sets", rep.independent_sets);
            r.put("holds", rep.violation.is_none());
            match &rep.violation {
                None => {}
                Some(SlowGrowViolation::Bound { colors, bound }) => {
                    r.put("violation", "bound").put("colors", color_values(c.table(), colors)).put("bound", *bound);
                }
                Some(SlowGrowViolation::NotBipartite { colors, independent, odd_cycle }) => {
                    r.put("violation", "not-bipartite").put("colors", color_values(c.table(), colors));
                    r.put("independent", color_values(c.table(), independent));
                    r.put("odd_cycle", one_based(odd_cycle));
                }
                Some(SlowGrowViolation::IndependentSetCount { colors, count }) => {
                    r.put("violation", "independent-set-count");
                    r.put("colors", color_values(c.table(), colors)).put("independent_count", *count);
                }
            }
            rep.violation.is_none()
        }
    };
    Ok(Outcome::report(&r, json, if holds { EXIT_OK } else { EXIT_VIOLATED }))
}

fn witness(a: &WitnessArgs, json: bool) -> CmdResult {
    let mut r = Report::new();
    r.put("method", a.method.to_possible_value().expect("named").get_name()).put("r", a.r);
    match a.method {
        Method::Shelah => {
            let grid = match &a.input {
                Some(path) => expect_grid(read_file(path)?)?,
                None => {
                    let cols = shelah_columns(a.r);
                    let rows = a.r as u64 + 1;
                    let edges = rows.saturating_mul(binom(cols.min(u32::MAX as u64) as usize, 2));
                    if a.r == 0 || edges > MAX_RANDOM_EDGES {
                        return Err(Failure::usage(format!(
                            "a random {rows}x{cols} grid is too large; pass --in"
                        )));
                    }
                    r.put("seed", a.seed);
                    uniform_grid(rows as usize, cols as usize, a.r, &mut stream(a.seed, 0))
                }
            };
            r.put("rows", grid.m()).put("columns", grid.n());
            let rect = shelah_witness(&grid, a.r)?;
            r.put("rectangle", rectangle_value(&rect));
            r.put("row_color", grid.table().value(grid.row(rect.i, rect.j, rect.j2)).to_string());
            r.put("column_color", grid.table().value(grid.col(rect.i, rect.i2, rect.j)).to_string());
            r.put("verified", grid.is_alternating(&rect));
        }
        Method::Stepdown => {
            let (p, q) = (need(a.p, "p", "stepdown")?, need(a.q, "q", "stepdown")?);
            let c = match &a.input {
                Some(path) => expect_coloring(read_file(path)?)?,
                None => {
                    let k = need(a.k, "k", "stepdown without --in")?;
                    if k == 0 || p <= k || q < 2 {
                        return Err(Failure::usage("need 1 <= k < p and q >= 2"));
                    }
                    let n = stepdown_bound(k, a.r, p, q);
                    let edges = if n > 1 << 20 { u64::MAX } else { binom(n as usize, k) };
                    if a.r == 0 || edges > MAX_RANDOM_EDGES {
                        return Err(Failure::usage(format!(
                            "a random coloring on {n} vertices is too large; pass --in"
                        )));
                    }
                    r.put("seed", a.seed);
                    uniform_hyper(n as usize, k, a.r, &mut stream(a.seed, 0))?
                }
            };
            if a.k.is_some_and(|k| k != c.k()) {
                return Err(Failure::usage(format!("--k {} does not match the {}-uniform input", a.k.unwrap_or(0), c.k())));
            }
            r.put("k", c.k()).put("p", p).put("q", q).put("n", c.n());
            let w = stepdown_witness(&c, a.r, p, q)?;
            r.put("vertices", one_based(&w.violation.vertices));
            r.put("colors", color_values(c.table(), &w.violation.colors));
            r.put("color_count", w.violation.color_count());
            r.put("degenerate", w.degenerate);
        }
    }
    Ok(Outcome::report(&r, json, EXIT_OK))
}

fn solve(a: &SolveArgs, json: bool) -> CmdResult {
    let opts = SolveOptions { budget: a.budget, symmetry: !a.no_symmetry };
    let checkpoint = match &a.resume {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            Some(Checkpoint::parse(&text).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?)
        }
        None => None,
    };
    let mut r = Report::new();
    r.put("problem", a.problem.to_possible_value().expect("named").get_name());
    let result = match a.problem {
        Problem::SmallG => match &checkpoint {
            Some(cp) => {
                let ProblemSpec::Grid { m, n } = cp.problem else {
                    return Err(Failure::usage("checkpoint does not belong to a g search"));
                };
                r.put("m", m).put("n", n).put("resumed", true);
                exact_g_resume(cp, a.r_max, opts)
            }
            None => {
                let (m, n) = (need(a.m, "m", "solve g")?, need(a.n, "n", "solve g")?);
                r.put("m", m).put("n", n);
                exact_g(m, n, a.r_max, opts)
            }
        },
        Problem::BigG => match &checkpoint {
            Some(cp) => {
                r.put("r", cp.r).put("resumed", true);
                exact_G_resume(cp, a.n_max, opts)
            }
            None => {
                let colors = need(a.r, "r", "solve G")?;
                r.put("r", colors);
                exact_G(colors, a.n_max, opts)
            }
        },
        Problem::F => match &checkpoint {
            Some(cp) => {
                let ProblemSpec::Hyper { n, p, q, k } = cp.problem else {
                    return Err(Failure::usage("checkpoint does not belong to an f search"));
                };
                r.put("n", n).put("p", p).put("q", q).put("k", k).put("resumed", true);
                exact_f_resume(cp, a.r_max, opts)
            }
            None => {
                let n = need(a.n, "n", "solve f")?;
                let (p, q) = (need(a.p, "p", "solve f")?, need(a.q, "q", "solve f")?);
                r.put("n", n).put("p", p).put("q", q).put("k", a.k);
                exact_f(n, p, q, a.k, a.r_max, opts)
            }
        },
    };
    solve_outcome(a, r, result, json)
}

fn solve_outcome(a: &SolveArgs, mut r: Report, result: Result<SearchResult, SolveError>, json: bool) -> CmdResult {
    match result {
        Ok(res) => {
            match res.verdict {
                Verdict::Exact(v) => r.put("status", "exact").put("value", v),
                Verdict::AboveLimit(limit) => r.put("status", "above-limit").put("lower", limit + 1),
            };
            r.put("refuted", res.refuted.clone()).put("nodes", res.stats.nodes);
            if let (Some(path), Some(cert)) = (&a.out, res.certificate) {
                let file = match cert {
                    Certificate::Grid(g) => ColoringFile::Grid(g),
                    Certificate::Coloring(c) => ColoringFile::from_coloring(c),
                };
                file.write(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                r.put("certificate", path.display().to_string());
            }
            Ok(Outcome::report(&r, json, EXIT_OK))
        }
        Err(SolveError::Undecided { lower, upper, stats }) => {
            r.put("status", "above-limit").put("lower", lower).put("upper", upper).put("nodes", stats.nodes);
            Ok(Outcome::report(&r, json, EXIT_OK))
        }
        Err(SolveError::BudgetExhausted { lower, upper, checkpoint, stats }) => {
            r.put("status", "budget-exhausted").put("lower", lower);
            r.put("upper", upper.map_or(Value::Null, Value::from)).put("nodes", stats.nodes);
            if let Some(path) = &a.checkpoint {
                std::fs::write(path, checkpoint.to_text())
                    .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
                r.put("checkpoint", path.display().to_string());
            }
            Ok(Outcome {
                code: EXIT_BUDGET,
                stdout: r.render(json),
                note: Some("node budget exhausted".into()),
            })
        }
        Err(SolveError::InvalidParameters(m)) => Err(Failure::usage(m)),
        Err(SolveError::Core(e)) => Err(e.into()),
    }
}
