//! Command-line entry points: single-seed maps, whole-corpus batch output,
//! impact reports, graph analysis, factor analysis, and rank statistics.
//!
//! Reports go to standard output, warnings to standard error, files only
//! into the output directory. Exit status 0 means all requested outputs
//! were produced; 2 flags domain errors (unknown seed, bad input data);
//! 3 flags I/O failures.

use std::collections::BTreeSet;
use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::environment::{self, Direction, Environment};
use crate::graph::{self, SimilarityGraph};
use crate::impact::{self, LocalImpact};
use crate::ingest::{self, CitationGraph, JournalId};
use crate::layout::{self, RenderOptions};
use crate::pajek::{self, MapDocument, Shape, Vertex};
use crate::similarity::{self, SimilarityMatrix};
use crate::stats;

/// Resolved configuration shared by the commands.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub edge_files: Vec<PathBuf>,
    pub metadata_files: Vec<PathBuf>,
    pub seed_journal: Option<String>,
    pub seed_label: Option<String>,
    pub direction: Direction,
    pub threshold_pct: f64,
    pub cosine_min: f64,
    pub exclusions: Vec<String>,
    pub size_overrides: Vec<String>,
    pub output_dir: Option<PathBuf>,
    pub emit_svg: bool,
    pub random_seed: u64,
    pub node_scale: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            edge_files: Vec::new(),
            metadata_files: Vec::new(),
            seed_journal: None,
            seed_label: None,
            direction: Direction::Cited,
            threshold_pct: 1.0,
            cosine_min: 0.2,
            exclusions: Vec::new(),
            size_overrides: Vec::new(),
            output_dir: None,
            emit_svg: false,
            random_seed: 0,
            node_scale: 2.0,
        }
    }
}

#[derive(Debug)]
pub enum CliError {
    /// Bad data or arguments; exit status 2.
    Domain(String),
    /// Filesystem failure; exit status 3.
    Io { path: PathBuf, message: String },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 2,
            CliError::Io { .. } => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Domain(message) => f.write_str(message),
            CliError::Io { path, message } => write!(f, "{}: {message}", path.display()),
        }
    }
}

fn domain(error: impl std::fmt::Display) -> CliError {
    CliError::Domain(error.to_string())
}

fn io_error(path: &Path, error: std::io::Error) -> CliError {
    CliError::Io {
        path: path.to_path_buf(),
        message: error.to_string(),
    }
}

fn warn(message: impl std::fmt::Display) {
    eprintln!("warning: {message}");
}

// ---------------------------------------------------------------------------
// argument parsing
// ---------------------------------------------------------------------------

#[derive(Parser)]
#[command(
    name = "citescape",
    version,
    about = "Map journal citation environments: local impact factors, cosine similarity maps in Pajek format, and graph/factor analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the citation environment map of one seed journal
    Map(MapArgs),
    /// Write maps for every journal, both directions, plus a manifest
    Batch(BatchArgs),
    /// Print the local impact report of a seed's environment
    Impact(SeedArgs),
    /// Print components, coreness, and articulation points of the map graph
    Analyze(SeedArgs),
    /// Print eigenvalues and varimax-rotated loadings of the environment
    Factors(SeedArgs),
    /// Rank statistics over journal metadata
    #[command(subcommand)]
    Stats(StatsCommand),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum DirectionArg {
    #[default]
    Cited,
    Citing,
}

impl From<DirectionArg> for Direction {
    fn from(value: DirectionArg) -> Self {
        match value {
            DirectionArg::Cited => Direction::Cited,
            DirectionArg::Citing => Direction::Citing,
        }
    }
}

#[derive(Args)]
struct InputArgs {
    /// Edge list file `citing,cited,count`; repeat to merge indices
    #[arg(long = "edges", value_name = "FILE", required = true)]
    edges: Vec<PathBuf>,
    /// Metadata file `journal,total_cited,total_citing,impact_factor,source_index`
    #[arg(long = "meta", value_name = "FILE")]
    meta: Vec<PathBuf>,
}

#[derive(Args)]
struct SeedArgs {
    #[command(flatten)]
    input: InputArgs,
    /// Seed journal by canonical name, e.g. "Environ Plann B"
    #[arg(long)]
    seed: Option<String>,
    /// Seed journal by condensed Pajek label, e.g. EnvironPlannB
    #[arg(long)]
    label: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    direction: DirectionArg,
    /// Selection threshold as a percentage of the seed's global total
    #[arg(long, default_value_t = 1.0)]
    threshold_pct: f64,
    /// Cosine values below this are suppressed to zero
    #[arg(long, default_value_t = 0.2)]
    cosine_min: f64,
    /// Journal to drop from the environment; repeatable
    #[arg(long = "exclude", value_name = "JOURNAL")]
    exclude: Vec<String>,
}

#[derive(Args)]
struct OutputArgs {
    /// Output directory (maps land in <out>/<direction>/<Label>.net)
    #[arg(long, env = "CITESCAPE_OUT", value_name = "DIR")]
    out: PathBuf,
    /// Also render each map as an SVG image
    #[arg(long)]
    svg: bool,
    /// Random seed for the deterministic layout
    #[arg(long, default_value_t = 0)]
    layout_seed: u64,
    /// Display units per impact percent in SVG node radii
    #[arg(long, default_value_t = 2.0)]
    node_scale: f64,
    /// Fix a journal's node size: "Journal=X,Y" or "Journal" for 1,1
    #[arg(long = "size-override", value_name = "JOURNAL[=X,Y]")]
    size_override: Vec<String>,
}

#[derive(Args)]
struct MapArgs {
    #[command(flatten)]
    seed: SeedArgs,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct BatchArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, default_value_t = 1.0)]
    threshold_pct: f64,
    #[arg(long, default_value_t = 0.2)]
    cosine_min: f64,
    #[arg(long = "exclude", value_name = "JOURNAL")]
    exclude: Vec<String>,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Subcommand)]
enum StatsCommand {
    /// Spearman rank correlation between two metadata columns
    Spearman(SpearmanArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MetaColumn {
    ImpactFactor,
    TotalCited,
    TotalCiting,
}

#[derive(Args)]
struct SpearmanArgs {
    /// Metadata file; repeatable
    #[arg(long = "meta", value_name = "FILE", required = true)]
    meta: Vec<PathBuf>,
    #[arg(long, value_enum, default_value_t = MetaColumn::ImpactFactor)]
    x_col: MetaColumn,
    #[arg(long, value_enum, default_value_t = MetaColumn::TotalCited)]
    y_col: MetaColumn,
}

impl SeedArgs {
    fn into_config(self) -> RunConfig {
        RunConfig {
            edge_files: self.input.edges,
            metadata_files: self.input.meta,
            seed_journal: self.seed,
            seed_label: self.label,
            direction: self.direction.into(),
            threshold_pct: self.threshold_pct,
            cosine_min: self.cosine_min,
            exclusions: self.exclude,
            ..RunConfig::default()
        }
    }
}

impl OutputArgs {
    fn apply(self, config: &mut RunConfig) {
        config.output_dir = Some(self.out);
        config.emit_svg = self.svg;
        config.random_seed = self.layout_seed;
        config.node_scale = self.node_scale;
        config.size_overrides = self.size_override;
    }
}

/// Parse the process arguments, dispatch, and return the exit status.
pub fn run() -> i32 {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Map(args) => {
            let mut config = args.seed.into_config();
            args.output.apply(&mut config);
            cmd_map(&config)
        }
        Command::Batch(args) => {
            let mut config = RunConfig {
                edge_files: args.input.edges,
                metadata_files: args.input.meta,
                threshold_pct: args.threshold_pct,
                cosine_min: args.cosine_min,
                exclusions: args.exclude,
                ..RunConfig::default()
            };
            args.output.apply(&mut config);
            cmd_batch(&config)
        }
        Command::Impact(args) => cmd_impact(&args.into_config()),
        Command::Analyze(args) => cmd_analyze(&args.into_config()),
        Command::Factors(args) => cmd_factors(&args.into_config()),
        Command::Stats(StatsCommand::Spearman(args)) => cmd_stats_spearman(&args),
    };
    match result {
        Ok(()) => 0,
        Err(error) => {
            eprintln!("error: {error}");
            error.exit_code()
        }
    }
}

// ---------------------------------------------------------------------------
// shared pipeline steps
// ---------------------------------------------------------------------------

fn validate_config(config: &RunConfig) -> Result<(), CliError> {
    if !(config.threshold_pct > 0.0 && config.threshold_pct <= 100.0) {
        return Err(CliError::Domain(format!(
            "--threshold-pct must lie in (0, 100], got {}",
            config.threshold_pct
        )));
    }
    if !(0.0..1.0).contains(&config.cosine_min) {
        return Err(CliError::Domain(format!(
            "--cosine-min must lie in [0, 1), got {}",
            config.cosine_min
        )));
    }
    Ok(())
}

/// Parse and merge the configured edge and metadata files.
pub fn load_graph(config: &RunConfig) -> Result<CitationGraph, CliError> {
    let mut graph: Option<CitationGraph> = None;
    for path in &config.edge_files {
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        let parsed = ingest::parse_edge_list(&text).map_err(domain)?;
        graph = Some(match graph {
            None => parsed,
            Some(existing) => {
                let (merged, warnings) = ingest::merge_graphs(&existing, &parsed);
                for warning in warnings {
                    warn(warning);
                }
                merged
            }
        });
    }
    let mut graph = graph.unwrap_or_default();
    for path in &config.metadata_files {
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        let records = ingest::parse_metadata(&text).map_err(domain)?;
        for warning in graph.attach_metadata(records) {
            warn(warning);
        }
    }
    graph.validate_totals().map_err(domain)?;
    Ok(graph)
}

fn resolve_seed(graph: &CitationGraph, config: &RunConfig) -> Result<JournalId, CliError> {
    if let Some(name) = &config.seed_journal {
        let journal = JournalId::new(name).map_err(domain)?;
        if !graph.contains(&journal) {
            return Err(CliError::Domain(format!("unknown journal {name:?}")));
        }
        return Ok(journal);
    }
    if let Some(label) = &config.seed_label {
        for journal in graph.journals() {
            if pajek::make_label(journal.as_str()).ok().as_deref() == Some(label.as_str()) {
                return Ok(journal);
            }
        }
        return Err(CliError::Domain(format!("no journal has label {label:?}")));
    }
    Err(CliError::Domain(
        "a seed journal is required (--seed or --label)".into(),
    ))
}

fn exclusion_set(config: &RunConfig) -> Result<BTreeSet<JournalId>, CliError> {
    config
        .exclusions
        .iter()
        .map(|name| JournalId::new(name).map_err(domain))
        .collect()
}

/// Select, build, and trim the environment of one seed.
pub fn build_environment(
    graph: &CitationGraph,
    seed: &JournalId,
    direction: Direction,
    config: &RunConfig,
) -> Result<Environment, CliError> {
    let (env, warnings) =
        environment::environment_of(graph, seed, direction, config.threshold_pct)
            .map_err(domain)?;
    for warning in warnings {
        warn(warning);
    }
    let mut excluded = exclusion_set(config)?;
    excluded.remove(seed);
    let env = environment::apply_exclusions(&env, &excluded).map_err(domain)?;
    Ok(env)
}

fn parse_size_overrides(config: &RunConfig) -> Result<Vec<(JournalId, f64, f64)>, CliError> {
    let mut overrides = Vec::new();
    for raw in &config.size_overrides {
        let (name, x, y) = match raw.rsplit_once('=') {
            None => (raw.as_str(), 1.0, 1.0),
            Some((name, values)) => {
                let (x, y) = values.split_once(',').ok_or_else(|| {
                    CliError::Domain(format!(
                        "--size-override {raw:?} must look like \"Journal=X,Y\""
                    ))
                })?;
                let parse = |v: &str| {
                    v.trim().parse::<f64>().map_err(|_| {
                        CliError::Domain(format!("--size-override {raw:?} has a non-numeric size"))
                    })
                };
                (name, parse(x)?, parse(y)?)
            }
        };
        overrides.push((JournalId::new(name).map_err(domain)?, x, y));
    }
    Ok(overrides)
}

/// Impact report for the environment; a zero grandsum yields an empty
/// report (and zero-sized nodes) instead of failing the map.
fn impact_or_empty(env: &Environment) -> Vec<LocalImpact> {
    if env.grandsum() == 0 {
        warn(format!(
            "environment of {} has no internal citations; node sizes set to zero",
            env.seed()
        ));
        return env
            .journals()
            .iter()
            .map(|journal| LocalImpact {
                journal: journal.clone(),
                raw_total: 0,
                raw_self: 0,
                pct_with_self: 0.0,
                pct_without_self: 0.0,
            })
            .collect();
    }
    impact::impact_report(env, env.direction()).expect("nonzero grandsum")
}

/// Build the map document: vertices from the impact report (respecting size
/// overrides, diamonds for SCI journals) over the suppressed similarity
/// matrix.
pub fn build_document(
    graph: &CitationGraph,
    env: &Environment,
    config: &RunConfig,
) -> Result<(MapDocument, SimilarityMatrix, Vec<LocalImpact>), CliError> {
    let matrix = similarity::similarity_matrix(env, env.direction(), config.cosine_min);
    let report = impact_or_empty(env);
    let overrides = parse_size_overrides(config)?;
    let vertices: Vec<Vertex> = report
        .iter()
        .enumerate()
        .map(|(k, entry)| {
            let over = overrides.iter().find(|(j, _, _)| *j == entry.journal);
            let (x_fact, y_fact) = match over {
                Some((_, x, y)) => (*x, *y),
                None => (entry.pct_without_self, entry.pct_with_self),
            };
            let shape = match graph.meta(&entry.journal).source_index {
                ingest::SourceIndex::Sci => Shape::Diamond,
                _ => Shape::Ellipse,
            };
            Vertex {
                index: k + 1,
                label: env.labels()[k].clone(),
                x_fact,
                y_fact,
                shape,
            }
        })
        .collect();
    let doc = MapDocument::new(vertices, matrix.values().to_vec()).map_err(domain)?;
    Ok((doc, matrix, report))
}

fn print_impact_report(report: &[LocalImpact]) -> Result<(), CliError> {
    let stdout = std::io::stdout();
    let mut writer = csv::Writer::from_writer(stdout.lock());
    let fail = |e: csv::Error| CliError::Domain(e.to_string());
    writer
        .write_record(["journal", "raw_total", "raw_self", "pct_with_self", "pct_without_self"])
        .map_err(fail)?;
    for entry in report {
        writer
            .write_record([
                entry.journal.as_str(),
                &entry.raw_total.to_string(),
                &entry.raw_self.to_string(),
                &pajek::format_six(entry.pct_with_self),
                &pajek::format_six(entry.pct_without_self),
            ])
            .map_err(fail)?;
    }
    writer.flush().map_err(|e| CliError::Domain(e.to_string()))
}

/// Write <out>/<direction>/<Label>.net (and .svg when requested); returns
/// the path relative to the output directory.
fn write_outputs(
    doc: &MapDocument,
    matrix: &SimilarityMatrix,
    seed_label: &str,
    direction: Direction,
    config: &RunConfig,
) -> Result<PathBuf, CliError> {
    let out_dir = config
        .output_dir
        .as_ref()
        .ok_or_else(|| CliError::Domain("an output directory is required (--out)".into()))?;
    let dir = out_dir.join(direction.as_str());
    fs::create_dir_all(&dir).map_err(|e| io_error(&dir, e))?;
    let net_path = dir.join(format!("{seed_label}.net"));
    fs::write(&net_path, pajek::write_map(doc)).map_err(|e| io_error(&net_path, e))?;
    if config.emit_svg {
        let sim_graph = SimilarityGraph::from_similarity(matrix);
        let positions = layout::force_layout(&sim_graph, matrix.values(), config.random_seed, 200);
        let options = RenderOptions {
            node_scale: config.node_scale,
            ..RenderOptions::default()
        };
        let svg = layout::render_svg(doc, &positions, &options).map_err(domain)?;
        let svg_path = dir.join(format!("{seed_label}.svg"));
        fs::write(&svg_path, svg).map_err(|e| io_error(&svg_path, e))?;
    }
    Ok(PathBuf::from(direction.as_str()).join(format!("{seed_label}.net")))
}

// ---------------------------------------------------------------------------
// commands
// ---------------------------------------------------------------------------

/// Produce the map file(s) for one seed and print its impact report.
pub fn cmd_map(config: &RunConfig) -> Result<(), CliError> {
    validate_config(config)?;
    let graph = load_graph(config)?;
    let seed = resolve_seed(&graph, config)?;
    let env = build_environment(&graph, &seed, config.direction, config)?;
    let (doc, matrix, report) = build_document(&graph, &env, config)?;
    let label = pajek::make_label(seed.as_str()).map_err(domain)?;
    write_outputs(&doc, &matrix, &label, config.direction, config)?;
    print_impact_report(&report)
}

/// Produce maps for every journal in both directions and a manifest.
///
/// Per-journal failures are logged and skipped; the command fails only when
/// every map failed.
pub fn cmd_batch(config: &RunConfig) -> Result<(), CliError> {
    validate_config(config)?;
    let graph = load_graph(config)?;
    let out_dir = config
        .output_dir
        .as_ref()
        .ok_or_else(|| CliError::Domain("an output directory is required (--out)".into()))?;

    let mut seeds: Vec<(String, JournalId)> = Vec::new();
    for journal in graph.journals() {
        match pajek::make_label(journal.as_str()) {
            Ok(label) => seeds.push((label, journal)),
            Err(error) => warn(format!("skipping {journal}: {error}")),
        }
    }
    seeds.sort();

    let mut manifest: Vec<(String, String, Direction, PathBuf, usize)> = Vec::new();
    let mut attempted = 0usize;
    for (label, seed) in &seeds {
        for direction in [Direction::Cited, Direction::Citing] {
            attempted += 1;
            let produced = build_environment(&graph, seed, direction, config)
                .and_then(|env| {
                    let (doc, matrix, _) = build_document(&graph, &env, config)?;
                    let path = write_outputs(&doc, &matrix, label, direction, config)?;
                    Ok((path, env.len()))
                });
            match produced {
                Ok((path, vertex_count)) => manifest.push((
                    seed.to_string(),
                    label.clone(),
                    direction,
                    path,
                    vertex_count,
                )),
                Err(error) => warn(format!("skipping {seed} ({direction}): {error}")),
            }
        }
    }

    if attempted > 0 && manifest.is_empty() {
        return Err(CliError::Domain("all maps failed".into()));
    }

    fs::create_dir_all(out_dir).map_err(|e| io_error(out_dir, e))?;
    let manifest_path = out_dir.join("manifest.csv");
    let mut writer = csv::Writer::from_writer(Vec::new());
    let fail = |e: csv::Error| CliError::Domain(e.to_string());
    writer
        .write_record(["journal", "label", "direction", "path", "vertex_count"])
        .map_err(fail)?;
    for (journal, label, direction, path, vertex_count) in &manifest {
        writer
            .write_record([
                journal.as_str(),
                label.as_str(),
                direction.as_str(),
                &path.to_string_lossy(),
                &vertex_count.to_string(),
            ])
            .map_err(fail)?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| CliError::Domain(e.to_string()))?;
    fs::write(&manifest_path, bytes).map_err(|e| io_error(&manifest_path, e))?;
    Ok(())
}

/// Print the impact report without writing files.
pub fn cmd_impact(config: &RunConfig) -> Result<(), CliError> {
    validate_config(config)?;
    let graph = load_graph(config)?;
    let seed = resolve_seed(&graph, config)?;
    let env = build_environment(&graph, &seed, config.direction, config)?;
    let report = impact::impact_report(&env, env.direction()).map_err(domain)?;
    print_impact_report(&report)
}

/// Print connected components, coreness groups, and articulation points of
/// the thresholded similarity graph.
pub fn cmd_analyze(config: &RunConfig) -> Result<(), CliError> {
    validate_config(config)?;
    let graph = load_graph(config)?;
    let seed = resolve_seed(&graph, config)?;
    let env = build_environment(&graph, &seed, config.direction, config)?;
    let matrix = similarity::similarity_matrix(&env, env.direction(), config.cosine_min);
    let sim_graph = SimilarityGraph::from_similarity(&matrix);

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let fail = |e: std::io::Error| CliError::Domain(e.to_string());
    for (id, component) in graph::connected_components(&sim_graph).iter().enumerate() {
        for &member in component {
            writeln!(out, "component,{},{}", id + 1, sim_graph.nodes()[member]).map_err(fail)?;
        }
    }
    let cores = graph::k_core(&sim_graph).coreness;
    let mut levels: Vec<usize> = cores.clone();
    levels.sort_unstable();
    levels.dedup();
    for &level in levels.iter().rev() {
        for (node, _) in cores.iter().enumerate().filter(|(_, &c)| c == level) {
            writeln!(out, "coreness,{level},{}", sim_graph.nodes()[node]).map_err(fail)?;
        }
    }
    for &node in &graph::articulation_points(&sim_graph) {
        writeln!(out, "articulation,{}", sim_graph.nodes()[node]).map_err(fail)?;
    }
    Ok(())
}

/// Print eigenvalues, the retained component count, and rotated loadings
/// with the |0.10| display cutoff.
pub fn cmd_factors(config: &RunConfig) -> Result<(), CliError> {
    validate_config(config)?;
    let graph = load_graph(config)?;
    let seed = resolve_seed(&graph, config)?;
    let env = build_environment(&graph, &seed, config.direction, config)?;
    let result =
        stats::factor_analysis(&env, env.direction(), stats::Retention::Kaiser).map_err(domain)?;

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let fail = |e: std::io::Error| CliError::Domain(e.to_string());
    for (i, value) in result.eigenvalues.iter().enumerate() {
        writeln!(out, "eigenvalue,{},{}", i + 1, pajek::format_six(*value)).map_err(fail)?;
    }
    writeln!(out, "retained,{}", result.component_count()).map_err(fail)?;
    writeln!(out, "iterations,{}", result.iterations_used).map_err(fail)?;
    writeln!(out, "converged,{}", result.converged).map_err(fail)?;
    for (v, journal) in result.variables.iter().enumerate() {
        for c in 0..result.component_count() {
            let value = result.loadings[v][c];
            let cell = if value.abs() < 0.10 {
                String::new()
            } else {
                format!("{value:.3}")
            };
            writeln!(out, "loading,{journal},{},{cell}", c + 1).map_err(fail)?;
        }
    }
    Ok(())
}

fn column_values(meta: &ingest::JournalMeta, column: MetaColumn) -> Option<f64> {
    match column {
        MetaColumn::ImpactFactor => meta.impact_factor,
        MetaColumn::TotalCited => Some(meta.total_cited as f64),
        MetaColumn::TotalCiting => Some(meta.total_citing as f64),
    }
}

/// Spearman's rho over two metadata columns, printed to three decimals.
fn cmd_stats_spearman(args: &SpearmanArgs) -> Result<(), CliError> {
    let mut graph = CitationGraph::new();
    for path in &args.meta {
        let text = fs::read_to_string(path).map_err(|e| io_error(path, e))?;
        let records = ingest::parse_metadata(&text).map_err(domain)?;
        for warning in graph.attach_metadata(records) {
            warn(warning);
        }
    }
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    for journal in graph.journals() {
        let meta = graph.meta(&journal);
        if let (Some(x), Some(y)) = (
            column_values(&meta, args.x_col),
            column_values(&meta, args.y_col),
        ) {
            xs.push(x);
            ys.push(y);
        }
    }
    let rho = stats::spearman_rho(&xs, &ys).map_err(domain)?;
    println!("{rho:.3}");
    Ok(())
}
