//! Command-line front end: `build`, `check`, `count`, `enumerate`,
//! `search` and `table1`.
//!
//! Exit status: 0 when a result was computed (negative verdicts included),
//! 1 for usage errors, 2 when the search space exceeds its limit and 3 when
//! `--golden` finds a mismatch or a missing golden file.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::census::{self, SearchHitRecord, SearchMode};
use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::gf::{named_element, registry_name, Elem, Field};
use crate::matrix::SemiInvolutory;
use crate::mds::{self, CheckReport, HypothesisMode, HypothesisStatus, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;
pub const EXIT_GOLDEN_MISMATCH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "consta", version, about = "Consta-g-circulant matrices over finite fields")]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Threads used by enumerations; output does not depend on it.
    #[arg(long, default_value_t = 1, global = true)]
    pub workers: usize,
    /// Compare the JSON result with the matching file in this directory.
    #[arg(long, global = true)]
    pub golden: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(clap::Args, Debug, Clone)]
pub struct SpecArgs {
    /// Full spec `q=..;m=..;g=..;lambda=..;h=..;theta=..`; overrides the
    /// individual flags.
    #[arg(long)]
    pub spec: Option<String>,
    /// Field: registry name (F16), order (25) or `p^n:c0,..,cn`.
    #[arg(long, alias = "q")]
    pub field: Option<String>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long, default_value_t = 1)]
    pub g: usize,
    #[arg(long, default_value = "1")]
    pub lambda: String,
    /// Coefficients h_0..h_{m-1}, comma separated.
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long, default_value_t = 0)]
    pub theta: u32,
}

#[derive(clap::Args, Debug, Clone)]
pub struct RingArgs {
    #[arg(long, alias = "q")]
    pub field: String,
    #[arg(long)]
    pub m: usize,
    #[arg(long, default_value = "1")]
    pub lambda: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    Mds,
    Involutory,
    InvolutoryMds,
    WeightMds,
    SemiInvolutory,
    ScalarSemiInvolutory,
    Order3,
    Order4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Alg {
    Weight3,
    Weight4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum HypothesisArg {
    Exact,
    Relaxed,
}

impl From<HypothesisArg> for HypothesisMode {
    fn from(h: HypothesisArg) -> Self {
        match h {
            HypothesisArg::Exact => HypothesisMode::Exact,
            HypothesisArg::Relaxed => HypothesisMode::Relaxed,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build the matrix of a spec.
    Build {
        #[command(flatten)]
        spec: SpecArgs,
    },
    /// Evaluate a predicate on a spec.
    Check {
        #[arg(long, value_enum)]
        kind: CheckKind,
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = HypothesisArg::Relaxed)]
        hypothesis: HypothesisArg,
        /// Accept specs with g not congruent to 1 modulo ord(lambda).
        #[arg(long)]
        force: bool,
        #[arg(long)]
        c1: Option<String>,
        #[arg(long)]
        c2: Option<String>,
    },
    /// Counting formulas for F_q[x]/(x^m - lambda).
    Count {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Build and count every invertible matrix.
    Enumerate {
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Weight-constrained search for invertible polynomials.
    Search {
        #[arg(long, value_enum)]
        alg: Alg,
        #[arg(long, alias = "field")]
        q: String,
        #[arg(long, value_enum, default_value_t = ModeArg::Exhaustive)]
        mode: ModeArg,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
    },
    /// Recompute the census table.
    Table1 {
        /// Row numbers, comma separated (default: all).
        #[arg(long, value_delimiter = ',')]
        rows: Vec<usize>,
        /// Also build and count every matrix of each row.
        #[arg(long)]
        exhaustive: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    run_cli(&cli, out, err)
}

pub fn run_cli(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let output = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return match e {
                Error::SearchSpaceTooLarge { .. } => EXIT_INFEASIBLE,
                _ => EXIT_USAGE,
            };
        }
    };
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&output.json).expect("serializable") + "\n",
        Format::Csv => output.csv,
        Format::Pretty => output.pretty,
    };
    let _ = out.write_all(text.as_bytes());
    if let Some(dir) = &cli.golden {
        return compare_golden(dir, &output.golden_name, &output.json, err);
    }
    EXIT_OK
}

fn compare_golden(dir: &Path, name: &str, value: &Value, err: &mut dyn Write) -> i32 {
    let path = dir.join(name);
    let Ok(text) = std::fs::read_to_string(&path) else {
        let _ = writeln!(err, "golden file {} is missing", path.display());
        return EXIT_GOLDEN_MISMATCH;
    };
    match serde_json::from_str::<Value>(&text) {
        Ok(g) if &g == value => EXIT_OK,
        _ => {
            let _ = writeln!(err, "output differs from golden file {}", path.display());
            EXIT_GOLDEN_MISMATCH
        }
    }
}

/// Rendered result of one command.
pub struct Output {
    pub json: Value,
    pub csv: String,
    pub pretty: String,
    pub golden_name: String,
}

fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect()
}

fn meta(command: &str, field: Option<&Field>, extra: Value) -> Value {
    let mut m = json!({
        "tool": "consta",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
    });
    if let Some(f) = field {
        m["field"] = json!(f.spec_string());
        m["field_name"] = json!(registry_name(f));
    }
    if let Value::Object(extra) = extra {
        for (k, v) in extra {
            m[k] = v;
        }
    }
    m
}

fn envelope(meta: Value, result: Value) -> Value {
    json!({"meta": meta, "result": result})
}

pub fn parse_spec(args: &SpecArgs) -> Result<CirculantSpec> {
    if let Some(s) = &args.spec {
        return s.parse();
    }
    let field: Field = args.field.as_deref().ok_or_else(|| Error::Parse("missing --field".into()))?.parse()?;
    let m = args.m.ok_or_else(|| Error::Parse("missing --m".into()))?;
    let lambda = field.parse_element(&args.lambda)?;
    let h = args.h.as_deref().ok_or_else(|| Error::Parse("missing --h".into()))?;
    let h = crate::poly::parse_coeff_list(&field, h)?;
    CirculantSpec::new(&field, m, args.g, lambda, h, args.theta)
}

fn parse_ring(args: &RingArgs) -> Result<(Field, Elem)> {
    let field: Field = args.field.parse()?;
    let lambda = field.parse_element(&args.lambda)?;
    if lambda.is_zero() {
        return Err(Error::ZeroLambda);
    }
    Ok((field, lambda))
}

pub fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Build { spec } => build(spec),
        Command::Check { kind, spec, hypothesis, force, c1, c2 } => {
            check(*kind, spec, (*hypothesis).into(), *force, c1.as_deref(), c2.as_deref(), cli.workers)
        }
        Command::Count { ring } => count(ring),
        Command::Enumerate { ring } => enumerate(ring, cli.workers),
        Command::Search { alg, q, mode, seed, trials } => search(*alg, q, *mode, *seed, *trials),
        Command::Table1 { rows, exhaustive } => table1(rows, *exhaustive, cli.workers),
    }
}

fn build(args: &SpecArgs) -> Result<Output> {
    let spec = parse_spec(args)?;
    let a = spec.build()?;
    let json = envelope(
        meta("build", Some(spec.field()), json!({"spec": spec.to_text()})),
        json!({"spec": spec.to_json(), "matrix": a.to_json()}),
    );
    let csv = a.codes().iter().map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",") + "\n").collect();
    let pretty = format!(
        "{} ({}, well defined: {})\n{}\n",
        spec.to_text(),
        spec.classify(),
        spec.well_defined(),
        a.render()
    );
    Ok(Output { json, csv, pretty, golden_name: format!("build-{}.json", sanitize(&spec.to_text())) })
}

fn kind_name(kind: CheckKind) -> &'static str {
    match kind {
        CheckKind::Mds => "mds",
        CheckKind::Involutory => "involutory",
        CheckKind::InvolutoryMds => "involutory-mds",
        CheckKind::WeightMds => "weight-mds",
        CheckKind::SemiInvolutory => "semi-involutory",
        CheckKind::ScalarSemiInvolutory => "scalar-semi-involutory",
        CheckKind::Order3 => "order3",
        CheckKind::Order4 => "order4",
    }
}

fn needs_well_defined(kind: CheckKind) -> bool {
    !matches!(kind, CheckKind::Mds | CheckKind::SemiInvolutory)
}

fn check(
    kind: CheckKind,
    args: &SpecArgs,
    mode: HypothesisMode,
    force: bool,
    c1: Option<&str>,
    c2: Option<&str>,
    workers: usize,
) -> Result<Output> {
    let spec = parse_spec(args)?;
    if needs_well_defined(kind) && !spec.well_defined() && !force {
        return Err(Error::InvalidSpec(format!(
            "g = {} is not congruent to 1 modulo ord(lambda) = {}; pass --force to check the matrix anyway",
            spec.g(),
            spec.lambda_order()
        )));
    }
    let a = spec.build()?;
    let mut extra = json!({});
    let mut report = CheckReport::new(mode);
    if needs_well_defined(kind) && !spec.well_defined() {
        // forced: only matrix-level predicates are meaningful
        report.condition("well_defined", false, None);
        report.matrix_check.insert("is_mds".into(), a.is_mds()?.is_mds);
        report.matrix_check.insert("is_involutory".into(), a.is_involutory()?);
    } else {
        match kind {
            CheckKind::Mds => {
                let r = a.is_mds()?;
                report.condition("minor_scan", r.is_mds, r.witness.map(Witness::Minor));
            }
            CheckKind::Involutory => {
                let prod = mds::involutory_product(&spec)?;
                let ok = prod == spec.skew_ring().one();
                report.hypothesis = Some(HypothesisStatus::of(&spec));
                report.condition("involutory", ok, Some(Witness::Product { coeffs: prod.codes() }));
                report.matrix_check.insert("is_involutory".into(), a.is_involutory()?);
            }
            CheckKind::InvolutoryMds => report = mds::involutory_mds_check(&spec, mode, workers)?,
            CheckKind::WeightMds => {
                report = mds::weight_mds_oracle(&spec, workers)?;
                report.hypothesis_mode = mode;
                report.matrix_check.insert("is_mds".into(), a.is_mds()?.is_mds);
            }
            CheckKind::SemiInvolutory => match a.semi_involutory().or_else(|e| match e {
                Error::Singular => Ok(SemiInvolutory::NotFound { reason: "matrix is singular".into() }),
                e => Err(e),
            })? {
                SemiInvolutory::Found { d1, d2 } => {
                    report.condition("semi_involutory", true, None);
                    extra = json!({
                        "d1": d1.iter().map(|e| e.code()).collect::<Vec<_>>(),
                        "d2": d2.iter().map(|e| e.code()).collect::<Vec<_>>(),
                    });
                }
                SemiInvolutory::NotFound { reason } => {
                    report.condition("semi_involutory", false, Some(Witness::Reason { reason }));
                }
            },
            CheckKind::ScalarSemiInvolutory => {
                let f = spec.field();
                let ok = match (c1, c2) {
                    (Some(c1), Some(c2)) => {
                        mds::scalar_semi_involutory_condition(&spec, f.parse_element(c1)?, f.parse_element(c2)?)?
                    }
                    (None, None) => {
                        let c = mds::scalar_semi_involutory_product(&spec)?;
                        extra = json!({"c1c2": c.map(|e| e.code())});
                        c.is_some()
                    }
                    _ => return Err(Error::Parse("pass both --c1 and --c2 or neither".into())),
                };
                let prod = mds::involutory_product(&spec)?;
                report.condition("scalar_semi_involutory", ok, Some(Witness::Product { coeffs: prod.codes() }));
                report.matrix_check.insert("scalar_semi_involutory".into(), a.scalar_semi_involutory()?.is_some());
            }
            CheckKind::Order3 | CheckKind::Order4 => {
                if spec.theta_exp() != 0 {
                    return Err(Error::InvalidSpec("order characterizations are commutative".into()));
                }
                let h = spec.h_element();
                let g = spec.g() as u64;
                let ok = if kind == CheckKind::Order3 {
                    mds::order3_characterization(&h, g)?
                } else {
                    mds::order4_characterization(&h, g)?
                };
                let inv = h.inverse()?;
                report.condition(
                    "characterization",
                    ok,
                    Some(Witness::Weights { weight_h: h.weight(), weight_inverse: inv.weight() }),
                );
                report.matrix_check.insert("is_mds".into(), a.is_mds()?.is_mds);
            }
        }
    }
    let mut result = serde_json::to_value(&report).expect("serializable");
    result["kind"] = json!(kind_name(kind));
    result["spec"] = spec.to_json();
    if let Value::Object(extra) = extra {
        for (k, v) in extra {
            result[k] = v;
        }
    }
    let json = envelope(
        meta(
            "check",
            Some(spec.field()),
            json!({"spec": spec.to_text(), "kind": kind_name(kind), "hypothesis_mode": mode.to_string(), "force": force}),
        ),
        result,
    );
    let conds: Vec<String> = report.conditions.iter().map(|(k, v)| format!("{k}={v}")).collect();
    let csv = format!(
        "kind,verdict,conditions\n{},{},{}\n",
        kind_name(kind),
        report.verdict,
        conds.join(";")
    );
    let mut pretty = format!("{} {}: {}\n", kind_name(kind), spec.to_text(), report.verdict);
    for (k, v) in &report.conditions {
        pretty.push_str(&format!("  {k}: {v}\n"));
    }
    for (k, v) in &report.matrix_check {
        pretty.push_str(&format!("  matrix {k}: {v}\n"));
    }
    if let Some(w) = &report.witness {
        pretty.push_str(&format!("  witness: {}\n", serde_json::to_string(w).expect("serializable")));
    }
    Ok(Output {
        json,
        csv,
        pretty,
        golden_name: format!("check-{}-{}.json", kind_name(kind), sanitize(&spec.to_text())),
    })
}

fn count(args: &RingArgs) -> Result<Output> {
    let (field, lambda) = parse_ring(args)?;
    let m = args.m;
    let fc = census::invertible_count_formula(&field, m, lambda)?;
    let fac = crate::poly::QuotientRing::new(&field, m, lambda)?.modulus().factor()?;
    let ub = census::upper_bound(&field, m, lambda)?;
    let r = field.mult_order(lambda)?;
    let result = json!({
        "m": m,
        "q": field.order(),
        "lambda": lambda.code(),
        "r": r,
        "factorization": fac.render(&field),
        "squarefree": fac.is_squarefree(),
        "n": fc.n,
        "upper_bound": ub.to_string(),
        "units": {"factor_product": fc.units.factor_product.to_string(), "exact": fc.units.exact.to_string()},
        "factor_product_total": fc.factor_product_total.to_string(),
        "local_ring_total": fc.local_ring_total.to_string(),
    });
    let json = envelope(meta("count", Some(&field), json!({"m": m, "lambda": lambda.code()})), result);
    let csv = format!(
        "m,q,lambda,r,n,upper_bound,factor_product_total,local_ring_total\n{m},{},{},{r},{},{ub},{},{}\n",
        field.order(),
        lambda.code(),
        fc.n,
        fc.factor_product_total,
        fc.local_ring_total
    );
    let pretty = format!(
        "x^{m} - {} = {}\nr = {r}, N = {}, upper bound {ub}\nN x factor product = {} x {} = {}\nN x units = {} x {} = {}\n",
        field.render(lambda),
        fac.render(&field),
        fc.n,
        fc.n,
        fc.units.factor_product,
        fc.factor_product_total,
        fc.n,
        fc.units.exact,
        fc.local_ring_total
    );
    Ok(Output {
        json,
        csv,
        pretty,
        golden_name: format!("count-m{m}-q{}-lambda{}.json", field.order(), lambda.code()),
    })
}

fn enumerate(args: &RingArgs, workers: usize) -> Result<Output> {
    let (field, lambda) = parse_ring(args)?;
    let m = args.m;
    let e = census::enumerate_invertible_exhaustive(&field, m, lambda, workers)?;
    let n = census::count_n(&field, m, lambda)?;
    let mut result = serde_json::to_value(&e).expect("serializable");
    result["n"] = json!(n);
    result["n_times_units"] = json!(e.exhaustive_unit_count.map(|u| u * n));
    let json = envelope(meta("enumerate", Some(&field), json!({"m": m, "lambda": lambda.code()})), result);
    let csv = format!(
        "m,q,lambda,pair_count,distinct_matrix_count,exhaustive_unit_count\n{m},{},{},{},{},{}\n",
        e.q,
        e.lambda,
        e.pair_count,
        e.distinct_matrix_count,
        e.exhaustive_unit_count.map_or(String::new(), |u| u.to_string())
    );
    let pretty = format!(
        "m={m} q={} lambda={}: {} invertible (g,h) pairs, {} distinct matrices, shifts {:?}, units {}\n",
        e.q,
        field.render(lambda),
        e.pair_count,
        e.distinct_matrix_count,
        e.shifts_with_invertible,
        e.exhaustive_unit_count.map_or("n/a".to_string(), |u| u.to_string())
    );
    Ok(Output {
        json,
        csv,
        pretty,
        golden_name: format!("enumerate-m{m}-q{}-lambda{}.json", field.order(), lambda.code()),
    })
}

fn search(alg: Alg, q: &str, mode: ModeArg, seed: u64, trials: u64) -> Result<Output> {
    let field: Field = q.parse()?;
    let mode = match mode {
        ModeArg::Exhaustive => SearchMode::Exhaustive,
        ModeArg::Random => SearchMode::Random { seed, trials },
    };
    let (name, hits) = match alg {
        Alg::Weight3 => ("weight3", census::algorithm1_weight3(&field, mode)?),
        Alg::Weight4 => ("weight4", census::algorithm2_weight4(&field, mode)?),
    };
    let mut m = json!({"alg": name});
    if let Value::Object(extra) = mode.to_json() {
        for (k, v) in extra {
            m[k] = v;
        }
    }
    let result = json!({
        "alg": name,
        "q": field.order(),
        "count": hits.len(),
        "hits": hits.iter().map(|h| h.to_json()).collect::<Vec<_>>(),
    });
    let json = envelope(meta("search", Some(&field), m), result);
    let records: Vec<SearchHitRecord> = hits.iter().map(SearchHitRecord::from).collect();
    let csv = census::to_csv(&records)?;
    let mut pretty = format!("{name} over GF({}): {} hits\n", field.order(), hits.len());
    for h in &hits {
        pretty.push_str(&format!("  h = {}   h^-1 = {}\n", h.h, h.h_inv));
    }
    let mode_part = match mode {
        SearchMode::Exhaustive => "exhaustive".to_string(),
        SearchMode::Random { seed, trials } => format!("random-seed{seed}-trials{trials}"),
    };
    Ok(Output { json, csv, pretty, golden_name: format!("search-{name}-q{}-{mode_part}.json", field.order()) })
}

fn table1(rows: &[usize], exhaustive: bool, workers: usize) -> Result<Output> {
    if let Some(r) = rows.iter().find(|r| !(1..=8).contains(*r)) {
        return Err(Error::Parse(format!("table row {r} does not exist (1..=8)")));
    }
    let out = census::table1(rows, exhaustive, workers)?;
    let omega = named_element("F16", "omega").map(|(_, w)| w.code());
    let m = json!({
        "rows": rows,
        "exhaustive": exhaustive,
        "named_elements": {"F16.omega": omega, "note": "omega is the smallest-code root of x^2+x+1 under the F16 modulus x^4+x+1"},
    });
    let result: Vec<Value> = out
        .iter()
        .map(|r| {
            let mut v = serde_json::to_value(r).expect("serializable");
            // keep large integers exact for every JSON reader
            for key in ["upper_bound", "factor_product_units", "local_ring_units", "factor_product_count", "local_ring_count", "printed_total"] {
                v[key] = json!(v[key].to_string());
            }
            v
        })
        .collect();
    let json = envelope(meta("table1", None, m), json!({"rows": result}));
    let csv = census::to_csv(&out)?;
    let mut pretty = String::from("row  m   q  lambda  r  N  factorization                 formula                     printed   agrees  local-ring\n");
    for r in &out {
        pretty.push_str(&format!(
            "{:>3} {:>2} {:>3} {:>7} {:>2} {:>2}  {:<29} {:<27} {:>8}  {:<6}  {}\n",
            r.row, r.m, r.q, r.lambda, r.r, r.n, r.factorization, r.formula, r.printed_total, r.formula_agrees, r.local_ring_count
        ));
    }
    let mut name = String::from("table1");
    if !rows.is_empty() {
        name.push_str(&format!("-rows{}", rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("_")));
    }
    if exhaustive {
        name.push_str("-exhaustive");
    }
    Ok(Output { json, csv, pretty, golden_name: name + ".json" })
}
