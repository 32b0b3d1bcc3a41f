//! Command-line front end. [`run`] takes the argument vector and output
//! streams so it can be driven from tests; output is buffered and written
//! only on success.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::check::{self_check, References};
use crate::error::Error;
use crate::export::{export_topology, ExportFormat};
use crate::metrics::{metrics_report, DiameterConvention, METRICS_CSV_HEADER};
use crate::reliability::{antipode, estimate_connectivity, reliability_table};
use crate::routing::route;
use crate::spec::{validate_spec, Family, NetworkSpec, NodeAddress};
use crate::tables::{
    render_comparison_csv, render_comparison_json, render_comparison_text, scaling_sequence_capped,
    table1_rows, table2_rows, table3_grid, ScalingMode, RELIABILITY_CUBE_SIZES,
};
use crate::topology::{build_graph_capped, DEFAULT_NODE_CAP};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "tehnet",
    version,
    about = "Torus embedded hypercube network toolkit"
)]
struct Cli {
    /// Output format: text, csv or json (export: dot, csv or json).
    #[arg(long, global = true)]
    format: Option<String>,

    /// Largest network any command will build.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_CAP)]
    max_nodes: usize,

    /// Diameter convention: exact or paper (square-torus approximation).
    #[arg(long, global = true)]
    convention: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct SpecArgs {
    #[arg(long, default_value = "teh")]
    family: String,
    /// Torus rows.
    #[arg(long)]
    l: Option<usize>,
    /// Torus columns.
    #[arg(long)]
    m: Option<usize>,
    /// Hypercube node count N.
    #[arg(long)]
    cube: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Degree, links, diameter and cost of one network.
    Metrics(SpecArgs),
    /// Shortest path between two addresses.
    Route {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        from: NodeAddress,
        #[arg(long)]
        to: NodeAddress,
    },
    /// Comparison tables: 1 links, 2 topological cost, 3 reliability.
    Table {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        id: u8,
    },
    /// Reliability percentages for failure counts 1..=f-max.
    Reliability {
        #[arg(long, default_value_t = 9)]
        f_max: u32,
        /// Network as l,m,N; repeatable. Defaults to the 4x4 grid with N = 8..64.
        #[arg(long = "spec")]
        specs: Vec<String>,
    },
    /// Monte-Carlo connectivity estimate under source-incident link failures.
    Simulate {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        f: usize,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write the explicit graph as DOT, edge-list CSV or JSON.
    Export(SpecArgs),
    /// Doubling sequence growing the torus or the hypercube.
    Scale {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long)]
        mode: String,
        #[arg(long)]
        steps: usize,
    },
    /// Run the oracle and reference-table checks.
    SelfCheck {
        /// Directory holding table1.csv, table2.csv and table3.csv.
        #[arg(long)]
        golden_dir: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Text,
    Csv,
    Json,
}

fn output_format(raw: Option<&str>) -> CliResult<Format> {
    match raw.unwrap_or("text") {
        "text" => Ok(Format::Text),
        "csv" => Ok(Format::Csv),
        "json" => Ok(Format::Json),
        other => Err(CliError::Usage(format!(
            "unknown --format `{other}`, expected text, csv or json"
        ))),
    }
}

fn convention(raw: Option<&str>, default: DiameterConvention) -> CliResult<DiameterConvention> {
    match raw {
        None => Ok(default),
        Some(s) => s.parse().map_err(|_| {
            CliError::Usage(format!(
                "unknown --convention `{s}`, expected exact or paper"
            ))
        }),
    }
}

impl SpecArgs {
    fn resolve(&self) -> CliResult<NetworkSpec> {
        let family: Family = self
            .family
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown --family `{}`", self.family)))?;
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| CliError::Usage(format!("--{flag} is required for family {family}")))
        };
        let forbid = |v: Option<usize>, flag: &str| match v {
            Some(_) => Err(CliError::Usage(format!(
                "--{flag} does not apply to family {family}"
            ))),
            None => Ok(()),
        };
        let spec = match family {
            Family::Hypercube => {
                forbid(self.l, "l")?;
                forbid(self.m, "m")?;
                validate_spec(family, 1, 1, need(self.cube, "cube")?)
            }
            Family::Torus => {
                forbid(self.cube, "cube")?;
                validate_spec(family, need(self.l, "l")?, need(self.m, "m")?, 1)
            }
            Family::Teh => validate_spec(
                family,
                need(self.l, "l")?,
                need(self.m, "m")?,
                need(self.cube, "cube")?,
            ),
        };
        Ok(spec?)
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serializable");
    out.push('\n');
    out
}

/// Parses `argv` (including the program name), runs the command and
/// returns the process exit code.
pub fn run<I, S>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{}", e.render());
                return EXIT_OK;
            }
            let rendered = e.render().to_string();
            let first = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("usage error");
            let _ = writeln!(stderr, "{first}");
            return EXIT_USAGE;
        }
    };
    match dispatch(&cli) {
        Ok((text, code)) => {
            let _ = stdout.write_all(text.as_bytes());
            code
        }
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(CliError::Domain(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            if e.is_resource_limit() {
                EXIT_RESOURCE
            } else {
                EXIT_DOMAIN
            }
        }
    }
}

fn check_cap(spec: &NetworkSpec, cap: usize) -> CliResult<()> {
    if spec.node_count() > cap {
        return Err(Error::ResourceLimit {
            requested: spec.node_count(),
            cap,
        }
        .into());
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> CliResult<(String, i32)> {
    let raw_format = cli.format.as_deref();
    let cap = cli.max_nodes;
    let out = match &cli.command {
        Command::Metrics(args) => {
            let spec = args.resolve()?;
            let format = output_format(raw_format)?;
            let report = metrics_report(
                &spec,
                convention(cli.convention.as_deref(), DiameterConvention::Exact)?,
            );
            match format {
                Format::Csv => format!("{METRICS_CSV_HEADER}\n{}\n", report.csv_row()),
                Format::Json => to_json(&report),
                Format::Text => {
                    let mut s = String::new();
                    writeln!(s, "network     {spec}").unwrap();
                    writeln!(s, "family      {}", report.family).unwrap();
                    writeln!(s, "nodes       {}", report.nodes).unwrap();
                    writeln!(s, "degree      {}", report.degree).unwrap();
                    writeln!(s, "links       {}", report.links).unwrap();
                    writeln!(s, "diameter    {}", report.diameter).unwrap();
                    writeln!(s, "cost        {}", report.cost).unwrap();
                    writeln!(s, "convention  {}", report.convention).unwrap();
                    if !report.closed_form_exact {
                        writeln!(
                            s,
                            "note        short rings collapse links: simple graph has degree {}, {} links",
                            report.simple_degree, report.simple_links
                        )
                        .unwrap();
                    }
                    s
                }
            }
        }
        Command::Route { spec, from, to } => {
            let spec = spec.resolve()?;
            let format = output_format(raw_format)?;
            let path = route(&spec, *from, *to)?;
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Doc<'a> {
                        from: String,
                        to: String,
                        length: usize,
                        #[serde(flatten)]
                        path: &'a crate::routing::Path,
                    }
                    to_json(&Doc {
                        from: from.to_string(),
                        to: to.to_string(),
                        length: path.len(),
                        path: &path,
                    })
                }
                Format::Csv => {
                    let mut s = String::from("step,hop,move\n");
                    for (idx, hop) in path.hops().iter().enumerate() {
                        let mv = if idx == 0 {
                            String::new()
                        } else {
                            path.moves()[idx - 1].to_string()
                        };
                        writeln!(s, "{idx},\"{hop}\",{mv}").unwrap();
                    }
                    s
                }
                Format::Text => {
                    let mut s = String::new();
                    writeln!(s, "route {from} -> {to} in {spec}: {} hops", path.len()).unwrap();
                    for (idx, hop) in path.hops().iter().enumerate() {
                        let bits = spec.label_bits(hop.k);
                        let mv = if idx == 0 {
                            String::new()
                        } else {
                            format!("  {}", path.moves()[idx - 1])
                        };
                        writeln!(s, "{idx:>3}  {hop}  k={} ({bits}){mv}", hop.k).unwrap();
                    }
                    s
                }
            }
        }
        Command::Table { id } => {
            let format = output_format(raw_format)?;
            match id {
                3 => {
                    let grid = table3_grid();
                    match format {
                        Format::Text => grid.render_text(),
                        Format::Csv => grid.render_csv(),
                        Format::Json => grid.render_json(),
                    }
                }
                _ => {
                    let rows = if *id == 1 {
                        table1_rows()
                    } else {
                        table2_rows(convention(
                            cli.convention.as_deref(),
                            DiameterConvention::PaperSquareApprox,
                        )?)
                    };
                    match format {
                        Format::Text => render_comparison_text(&rows),
                        Format::Csv => render_comparison_csv(&rows),
                        Format::Json => render_comparison_json(&rows),
                    }
                }
            }
        }
        Command::Reliability { f_max, specs } => {
            let format = output_format(raw_format)?;
            let specs: Vec<NetworkSpec> = if specs.is_empty() {
                RELIABILITY_CUBE_SIZES
                    .iter()
                    .map(|&n| NetworkSpec::teh(4, 4, n))
                    .collect::<Result<_, _>>()?
            } else {
                specs
                    .iter()
                    .map(|s| {
                        let addr: NodeAddress = s.parse().map_err(|_| {
                            CliError::Usage(format!("--spec expects l,m,N, got `{s}`"))
                        })?;
                        Ok(NetworkSpec::teh(addr.i, addr.j, addr.k)?)
                    })
                    .collect::<CliResult<_>>()?
            };
            let table = reliability_table(&specs, *f_max)?;
            match format {
                Format::Text => table.render_text(),
                Format::Csv => table.render_csv(),
                Format::Json => table.render_json(),
            }
        }
        Command::Simulate {
            spec,
            f,
            trials,
            seed,
        } => {
            let spec = spec.resolve()?;
            let format = output_format(raw_format)?;
            if *trials == 0 {
                return Err(CliError::Usage("--trials must be at least 1".into()));
            }
            let topology = build_graph_capped(&spec, cap)?;
            let estimate = estimate_connectivity(&topology, *f, *trials, *seed)?;
            let target = spec.decode(antipode(&spec))?;
            #[derive(Serialize)]
            struct Doc {
                network: String,
                source: String,
                target: String,
                failures: usize,
                trials: u64,
                seed: u64,
                estimate: f64,
            }
            let doc = Doc {
                network: spec.to_string(),
                source: spec.decode(0)?.to_string(),
                target: target.to_string(),
                failures: *f,
                trials: *trials,
                seed: *seed,
                estimate,
            };
            match format {
                Format::Json => to_json(&doc),
                Format::Csv => format!(
                    "network,source,target,failures,trials,seed,estimate\n\"{}\",\"{}\",\"{}\",{},{},{},{:.6}\n",
                    doc.network, doc.source, doc.target, doc.failures, doc.trials, doc.seed, doc.estimate
                ),
                Format::Text => format!(
                    "{}: {} -> {} reachable in {:.6} of {} trials with {} failed source links (seed {})\n",
                    doc.network, doc.source, doc.target, doc.estimate, doc.trials, doc.failures, doc.seed
                ),
            }
        }
        Command::Export(args) => {
            let spec = args.resolve()?;
            let format: ExportFormat = raw_format.unwrap_or("dot").parse()?;
            let topology = build_graph_capped(&spec, cap)?;
            String::from_utf8(export_topology(&topology, format)?).expect("exports are UTF-8")
        }
        Command::Scale { spec, mode, steps } => {
            let base = spec.resolve()?;
            let format = output_format(raw_format)?;
            let mode: ScalingMode = mode.parse().map_err(|_| {
                CliError::Usage(format!(
                    "unknown --mode `{mode}`, expected torus or hypercube"
                ))
            })?;
            if *steps == 0 {
                return Err(CliError::Usage("--steps must be at least 1".into()));
            }
            check_cap(&base, cap)?;
            let seq = scaling_sequence_capped(mode, &base, *steps, cap)?;
            let base_degree = crate::metrics::degree_closed(&base);
            match format {
                Format::Json => {
                    #[derive(Serialize)]
                    struct Doc<'a> {
                        base: NetworkSpec,
                        base_degree: u64,
                        steps: &'a [crate::tables::ScalingStep],
                    }
                    to_json(&Doc {
                        base,
                        base_degree,
                        steps: &seq,
                    })
                }
                Format::Csv | Format::Text => {
                    let rows = std::iter::once((0, base, base_degree, false)).chain(
                        seq.iter()
                            .enumerate()
                            .map(|(i, s)| (i + 1, s.spec, s.degree, s.existing_nodes_reconfigured)),
                    );
                    let mut s = String::new();
                    if format == Format::Csv {
                        s.push_str("step,l,m,N,nodes,degree,existing_nodes_reconfigured\n");
                        for (i, spec, degree, re) in rows {
                            writeln!(
                                s,
                                "{i},{},{},{},{},{degree},{re}",
                                spec.l(),
                                spec.m(),
                                spec.cube_nodes(),
                                spec.node_count()
                            )
                            .unwrap();
                        }
                    } else {
                        writeln!(s, "scaling by {mode} expansion").unwrap();
                        for (i, spec, degree, re) in rows {
                            let note = if re {
                                "  existing nodes gain a link"
                            } else {
                                ""
                            };
                            writeln!(
                                s,
                                "{i:>3}  {:<16} nodes {:>8}  degree {degree}{note}",
                                spec.to_string(),
                                spec.node_count()
                            )
                            .unwrap();
                        }
                    }
                    s
                }
            }
        }
        Command::SelfCheck { golden_dir } => {
            let refs = match golden_dir {
                Some(dir) => References::from_dir(dir).map_err(|e| {
                    CliError::Usage(format!("cannot read references in {}: {e}", dir.display()))
                })?,
                None => References::default(),
            };
            let report = self_check(cap, &refs);
            let mut s = String::new();
            for g in &report.groups {
                writeln!(s, "{g}").unwrap();
            }
            let code = if report.passed() {
                EXIT_OK
            } else {
                EXIT_CHECK_FAILED
            };
            return Ok((s, code));
        }
    };
    Ok((out, EXIT_OK))
}
