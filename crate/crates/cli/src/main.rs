//! `lgr`: restrictions of opposite Schubert classes on `LGr_n`, model
//! enumeration, chart inspection and the verification suites.

use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lgr_schubert::chart::{chart_matrix_pattern, ChartIndexSet};
use lgr_schubert::indexcomb::enumerate_isotropic;
use lgr_schubert::models::{enumerate_models, ModelKind, Models};
use lgr_schubert::oracles::{run_suite, Suite, SuiteReport};
use lgr_schubert::render;
use lgr_schubert::restriction::{restrict, restriction_table};
use lgr_schubert::{IsotropicIndex, Laurent, Partition, RestrictionResult, StrictPartition, Theory};
use serde_json::{json, Value};

const TABLE_MAX_RANK: usize = 8;
const VERIFY_MAX_RANK: usize = 4;
const SHOWN_FAILURES: usize = 10;

#[derive(Parser)]
#[command(name = "lgr", version, about = "Schubert class restrictions on the Lagrangian Grassmannian")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Restriction of one class to one fixed point.
    Restrict {
        #[arg(long)]
        n: usize,
        /// Class index in signed-list syntax, e.g. `1,3,-2`.
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
        /// Fixed point in signed-list syntax.
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        #[arg(long, value_enum, default_value_t = ValueFormat::Pretty)]
        format: ValueFormat,
    },
    /// All restrictions for one rank; rows are classes, columns fixed points.
    Table {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_theory)]
        theory: Theory,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        out: TableFormat,
    },
    /// Tableaux, subsets and path families of shape `λ` inside `μ`.
    Models {
        #[command(flatten)]
        shapes: Shapes,
        #[arg(long, value_parser = parse_model)]
        model: Option<ModelKind>,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Ascii)]
        format: DiagramFormat,
    },
    /// One diagram.
    Render {
        #[command(subcommand)]
        target: RenderTarget,
    },
    /// Chart coordinates, matrix pattern and weights at a fixed point.
    Chart {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        beta: String,
        #[arg(long, value_enum, default_value_t = ChartFormat::Ascii)]
        format: ChartFormat,
    },
    /// Runs verification suites over all pairs of one rank.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Perturbs the values under test; every suite should then fail.
        #[arg(long)]
        corrupt: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Subcommand)]
enum RenderTarget {
    Tableau(Item),
    Subset(Item),
    Family(Item),
    /// The folding map on a symmetric partition.
    Rho {
        #[arg(long)]
        eta: String,
        #[arg(long, value_enum, default_value_t = DiagramFormat::Svg)]
        format: DiagramFormat,
    },
}

#[derive(Args)]
struct Shapes {
    #[arg(long)]
    lambda: String,
    #[arg(long)]
    mu: String,
}

#[derive(Args)]
struct Item {
    #[command(flatten)]
    shapes: Shapes,
    #[arg(long, default_value_t = 0)]
    index: usize,
    #[arg(long, value_enum, default_value_t = DiagramFormat::Svg)]
    format: DiagramFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum ValueFormat {
    Pretty,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DiagramFormat {
    Ascii,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum ChartFormat {
    Ascii,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Text,
    Json,
}

fn parse_theory(s: &str) -> Result<Theory, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_model(s: &str) -> Result<ModelKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

fn parse_index(n: usize, s: &str) -> Result<IsotropicIndex> {
    if n == 0 {
        bail!("rank must be at least 1");
    }
    IsotropicIndex::parse_signed(n, s).with_context(|| format!("bad index {s:?}"))
}

fn parse_shapes(s: &Shapes) -> Result<(StrictPartition, StrictPartition)> {
    let lambda = s.lambda.parse().with_context(|| format!("bad λ {:?}", s.lambda))?;
    let mu = s.mu.parse().with_context(|| format!("bad μ {:?}", s.mu))?;
    Ok((lambda, mu))
}

fn signed_label(k: usize, n: usize) -> String {
    if k <= n {
        k.to_string()
    } else {
        format!("-{}", 2 * n + 1 - k)
    }
}

fn value_json(p: &Laurent) -> Result<Value> {
    Ok(serde_json::to_value(p)?)
}

fn result_json(r: &RestrictionResult) -> Result<Value> {
    Ok(json!({
        "alpha": r.alpha.to_string(),
        "beta": r.beta.to_string(),
        "theory": r.theory.to_string(),
        "value": value_json(&r.value)?,
        "pretty": r.value.pretty(),
        "term_count": r.term_count,
    }))
}

fn cmd_restrict(n: usize, alpha: &str, beta: &str, theory: Theory, format: ValueFormat) -> Result<String> {
    let a = parse_index(n, alpha)?;
    let b = parse_index(n, beta)?;
    let r = restrict(&a, &b, theory)?;
    Ok(match format {
        ValueFormat::Pretty => format!(
            "[X_{{{a}}}]|_{{{b}}} ({theory}) = {}\nterm_count = {}\n",
            r.value.pretty(),
            r.term_count
        ),
        ValueFormat::Json => format!("{}\n", serde_json::to_string_pretty(&result_json(&r)?)?),
    })
}

fn cmd_table(n: usize, theory: Theory, out: TableFormat) -> Result<String> {
    if n == 0 || n > TABLE_MAX_RANK {
        bail!("table rank must lie in 1..={TABLE_MAX_RANK}, got {n}");
    }
    let indices = enumerate_isotropic(n)?;
    let table = restriction_table(n, theory)?;
    match out {
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header = vec!["alpha\\beta".to_string()];
            header.extend(indices.iter().map(ToString::to_string));
            w.write_record(&header)?;
            for (a, row) in indices.iter().zip(&table) {
                let mut record = vec![a.to_string()];
                record.extend(row.iter().map(|r| r.value.pretty()));
                w.write_record(&record)?;
            }
            Ok(String::from_utf8(w.into_inner()?)?)
        }
        TableFormat::Json => {
            let rows = table
                .iter()
                .map(|row| row.iter().map(result_json).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let v = json!({
                "n": n,
                "theory": theory.to_string(),
                "indices": indices.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "rows": rows,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&v)?))
        }
    }
}

fn model_kinds(model: Option<ModelKind>) -> Vec<ModelKind> {
    match model {
        Some(k) => vec![k],
        None => vec![ModelKind::Tableaux, ModelKind::Subsets, ModelKind::Families],
    }
}

fn kind_name(kind: ModelKind) -> &'static str {
    match kind {
        ModelKind::Tableaux => "tableaux",
        ModelKind::Subsets => "subsets",
        ModelKind::Families => "families",
    }
}

fn render_item(m: &Models, kind: ModelKind, i: usize, format: DiagramFormat) -> Result<String> {
    Ok(match (kind, format) {
        (ModelKind::Tableaux, DiagramFormat::Ascii) => render::tableau_ascii(&m.tableaux[i]),
        (ModelKind::Tableaux, DiagramFormat::Svg) => render::tableau_svg(&m.tableaux[i]),
        (ModelKind::Tableaux, DiagramFormat::Json) => serde_json::to_string(&m.tableaux[i])?,
        (ModelKind::Subsets, DiagramFormat::Ascii) => render::subset_ascii(&m.subsets[i]),
        (ModelKind::Subsets, DiagramFormat::Svg) => render::subset_svg(&m.subsets[i]),
        (ModelKind::Subsets, DiagramFormat::Json) => serde_json::to_string(&m.subsets[i])?,
        (ModelKind::Families, DiagramFormat::Ascii) => render::family_ascii(&m.families[i]),
        (ModelKind::Families, DiagramFormat::Svg) => render::family_svg(&m.families[i]),
        (ModelKind::Families, DiagramFormat::Json) => serde_json::to_string(&m.families[i])?,
    })
}

fn cmd_models(shapes: &Shapes, model: Option<ModelKind>, format: DiagramFormat) -> Result<String> {
    let (lambda, mu) = parse_shapes(shapes)?;
    let m = enumerate_models(&lambda, &mu)?;
    let count = m.tableaux.len();
    let kinds = model_kinds(model);
    if format == DiagramFormat::Json {
        let mut v = json!({
            "lambda": lambda,
            "mu": mu,
            "count": count,
        });
        for kind in kinds {
            let items = (0..count)
                .map(|i| Ok(serde_json::from_str(&render_item(&m, kind, i, format)?)?))
                .collect::<Result<Vec<Value>>>()?;
            v[kind_name(kind)] = Value::Array(items);
        }
        return Ok(format!("{}\n", serde_json::to_string_pretty(&v)?));
    }
    let mut out = String::new();
    for kind in kinds {
        match format {
            DiagramFormat::Svg => out.push_str(&format!("<!-- {}: {count} -->\n", kind_name(kind))),
            _ => out.push_str(&format!("{}: {count}\n", kind_name(kind))),
        }
        for i in 0..count {
            match format {
                DiagramFormat::Svg => out.push_str(&format!("<!-- {} {i} -->\n", kind_name(kind))),
                _ => out.push_str(&format!("[{i}]\n")),
            }
            let body = render_item(&m, kind, i, format)?;
            out.push_str(&body);
            if !body.ends_with('\n') {
                out.push('\n');
            }
        }
    }
    Ok(out)
}

fn cmd_render(target: &RenderTarget) -> Result<String> {
    let (item, kind) = match target {
        RenderTarget::Rho { eta, format } => {
            let eta: Partition = eta.parse().with_context(|| format!("bad η {eta:?}"))?;
            if !eta.is_symmetric() {
                bail!("η = {eta} is not symmetric");
            }
            return Ok(match format {
                DiagramFormat::Ascii => render::rho_ascii(&eta),
                DiagramFormat::Svg => render::rho_svg(&eta),
                DiagramFormat::Json => format!(
                    "{}\n",
                    serde_json::to_string_pretty(&json!({ "eta": eta, "rho": eta.rho() }))?
                ),
            });
        }
        RenderTarget::Tableau(item) => (item, ModelKind::Tableaux),
        RenderTarget::Subset(item) => (item, ModelKind::Subsets),
        RenderTarget::Family(item) => (item, ModelKind::Families),
    };
    let (lambda, mu) = parse_shapes(&item.shapes)?;
    let m = enumerate_models(&lambda, &mu)?;
    let count = m.tableaux.len();
    if item.index >= count {
        bail!("index {} out of range: {lambda} in {mu} has {count} items", item.index);
    }
    let mut body = render_item(&m, kind, item.index, item.format)?;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    Ok(body)
}

fn cmd_chart(n: usize, beta: &str, format: ChartFormat) -> Result<String> {
    let b = parse_index(n, beta)?;
    let chart = ChartIndexSet::new(&b);
    let pattern = chart_matrix_pattern(&b);
    let weights = chart
        .pairs()
        .iter()
        .map(|&p| {
            let k: Laurent = chart.weight_k(p)?;
            let h: Laurent = chart.weight_h(p)?;
            Ok((p, k, h))
        })
        .collect::<Result<Vec<_>>>()?;
    match format {
        ChartFormat::Ascii => {
            let mut out = format!("beta = {b}\nR_beta ({} coordinates):\n", chart.len());
            for ((a, c), k, h) in &weights {
                out.push_str(&format!(
                    "  y({},{})  K: {}  H: {}\n",
                    signed_label(*a, n),
                    signed_label(*c, n),
                    k.pretty(),
                    h.pretty()
                ));
            }
            out.push_str("matrix:\n");
            out.push_str(&pattern.to_string());
            Ok(out)
        }
        ChartFormat::Json => {
            let coords = weights
                .iter()
                .map(|((a, c), k, h)| {
                    Ok(json!({
                        "a": a,
                        "b": c,
                        "label": format!("y({},{})", signed_label(*a, n), signed_label(*c, n)),
                        "weight_k": value_json(k)?,
                        "weight_k_pretty": k.pretty(),
                        "weight_h": value_json(h)?,
                        "weight_h_pretty": h.pretty(),
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            let v = json!({
                "n": n,
                "beta": b.to_string(),
                "coordinates": coords,
                "pattern": pattern,
            });
            Ok(format!("{}\n", serde_json::to_string_pretty(&v)?))
        }
    }
}

fn suite_name(s: Suite) -> String {
    serde_json::to_value(s)
        .ok()
        .and_then(|v| v.as_str().map(str::to_string))
        .unwrap_or_default()
}

fn cmd_verify(n: usize, suite: &str, corrupt: bool, format: ReportFormat) -> Result<(String, bool)> {
    if n == 0 || n > VERIFY_MAX_RANK {
        bail!("verify rank must lie in 1..={VERIFY_MAX_RANK}, got {n}");
    }
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse()?]
    };
    let reports = suites
        .iter()
        .map(|&s| run_suite(s, n, corrupt))
        .collect::<lgr_schubert::Result<Vec<SuiteReport>>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let out = match format {
        ReportFormat::Json => {
            let v = json!({ "n": n, "corrupt": corrupt, "passed": passed, "suites": reports });
            format!("{}\n", serde_json::to_string_pretty(&v)?)
        }
        ReportFormat::Text => {
            let mut out = String::new();
            for r in &reports {
                out.push_str(&format!(
                    "{:<10} n={} checked={} skipped={} failures={} {}\n",
                    suite_name(r.suite),
                    r.n,
                    r.checked,
                    r.skipped,
                    r.failures.len(),
                    if r.passed() { "PASS" } else { "FAIL" }
                ));
                for f in r.failures.iter().take(SHOWN_FAILURES) {
                    out.push_str(&format!("  {f}\n"));
                }
                if r.failures.len() > SHOWN_FAILURES {
                    out.push_str(&format!("  ... {} more\n", r.failures.len() - SHOWN_FAILURES));
                }
            }
            out.push_str(if passed { "overall: PASS\n" } else { "overall: FAIL\n" });
            out
        }
    };
    Ok((out, passed))
}

fn run(cli: &Cli) -> Result<(String, bool)> {
    let ok = |s: String| Ok((s, true));
    match &cli.command {
        Command::Restrict { n, alpha, beta, theory, format } => {
            ok(cmd_restrict(*n, alpha, beta, *theory, *format)?)
        }
        Command::Table { n, theory, out } => ok(cmd_table(*n, *theory, *out)?),
        Command::Models { shapes, model, format } => ok(cmd_models(shapes, *model, *format)?),
        Command::Render { target } => ok(cmd_render(target)?),
        Command::Chart { n, beta, format } => ok(cmd_chart(*n, beta, *format)?),
        Command::Verify { n, suite, corrupt, format } => cmd_verify(*n, suite, *corrupt, *format),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, passed)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
