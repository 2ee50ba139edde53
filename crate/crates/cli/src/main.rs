//! Batch verification front end: check the determinantal identities, print
//! complexes and entry tables, and dump oracle decompositions.
//!
//! Exit codes: 0 = identity holds, 1 = mismatch found, 2 = usage error.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use charident::charring::{CharRing, CharSeries};
use charident::engine::{
    self, Case, CaseId, Variant,
};
use charident::oracle;
use charident::partition::Partition;
use charident::poly::Context;
use charident::symfunc::{schur_by_tableaux, schur_decompose, schur_polynomial};
use charident::weyl::Weight;

#[derive(Parser)]
#[command(name = "charident", version, about = "Exact verification of determinantal character identities")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify an identity and report the first mismatching coefficient.
    Verify(VerifyArgs),
    /// Print the terms of the BGG-type complex, one homological degree per line.
    Complex(ComplexArgs),
    /// Print the symbolic determinant entry matrix.
    Table(CommonArgs),
    /// List oracle multiplicities (Schur expansion of the V[λ] character).
    Decompose(CommonArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CaseArg {
    /// s_λ = det(h_{λ_i-i+j}) against tableau enumeration
    JacobiTrudi,
    /// two-alphabet determinant (generic matrices)
    Gessel,
    Skew,
    SymEven,
    SymOdd,
    SpinorOdd,
    SpinorEven,
    /// det([L_{λ_i-μ_j-i+j}]) against Σ_ν c^λ_{μν} V[ν]
    SkewLr,
}

impl CaseArg {
    fn name(&self) -> &'static str {
        match self {
            CaseArg::JacobiTrudi => "jacobi-trudi",
            CaseArg::Gessel => "gessel",
            CaseArg::Skew => "skew",
            CaseArg::SymEven => "sym-even",
            CaseArg::SymOdd => "sym-odd",
            CaseArg::SpinorOdd => "spinor-odd",
            CaseArg::SpinorEven => "spinor-even",
            CaseArg::SkewLr => "skew-lr",
        }
    }

    fn engine_case(&self) -> Option<Case> {
        match self {
            CaseArg::Gessel | CaseArg::SkewLr => Some(Case::Generic),
            CaseArg::Skew => Some(Case::Skew),
            CaseArg::SymEven => Some(Case::SymEven),
            CaseArg::SymOdd => Some(Case::SymOdd),
            CaseArg::SpinorOdd => Some(Case::SpinorOdd),
            CaseArg::SpinorEven => Some(Case::SpinorEven),
            CaseArg::JacobiTrudi => None,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum FormatArg {
    #[default]
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
enum VariantArg {
    #[default]
    ClosedForm,
    PlusSign,
    FourTerm,
}

impl VariantArg {
    fn variant(&self) -> Variant {
        match self {
            VariantArg::ClosedForm => Variant::ClosedForm,
            VariantArg::PlusSign => Variant::PlusSign,
            VariantArg::FourTerm => Variant::FourTerm,
        }
    }
}

#[derive(Args)]
struct CommonArgs {
    #[arg(long, value_enum)]
    case: CaseArg,
    /// Rank parameter (matrix size / Weyl group rank).
    #[arg(long, default_value_t = 1)]
    k: usize,
    /// Comma-separated weight; half-integers written like 3/2 or -1/2.
    #[arg(long)]
    lambda: Option<String>,
    /// Second partition for skew-lr.
    #[arg(long)]
    mu: Option<String>,
    /// Degree cap for the truncated series.
    #[arg(long, default_value_t = 4)]
    degree: i64,
    /// Variables in the x alphabet (default: the degree cap).
    #[arg(long)]
    vars_x: Option<usize>,
    /// Variables in the y alphabet (two-alphabet cases; default: the cap).
    #[arg(long)]
    vars_y: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    format: FormatArg,
    /// Write output here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Plain-text memo cache, loaded before and saved after the run.
    #[arg(long)]
    cache: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Also check against the highest-weight-vector oracle.
    #[arg(long)]
    oracle: bool,
    /// Which written form of the determinant to evaluate.
    #[arg(long, value_enum, default_value_t)]
    variant: VariantArg,
}

#[derive(Args)]
struct ComplexArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Print the Z/2-refined complex of the odd symmetric case: + or -.
    #[arg(long)]
    parity: Option<String>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct Mismatch {
    monomial: String,
    lhs: String,
    rhs: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct VerifyReport {
    case: String,
    k: usize,
    lambda: Vec<String>,
    degree: i64,
    equal: bool,
    first_mismatch: Option<Mismatch>,
    timings: BTreeMap<String, f64>,
    faithful: bool,
}

struct UsageError(String);

type CliResult<T> = Result<T, UsageError>;

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn parse_half(s: &str) -> CliResult<i64> {
    let s = s.trim();
    if let Some((num, den)) = s.split_once('/') {
        if den.trim() != "2" {
            return Err(UsageError(format!("unsupported denominator in '{}'", s)));
        }
        Ok(num.trim().parse::<i64>()?)
    } else {
        Ok(2 * s.parse::<i64>()?)
    }
}

fn parse_weight(s: &str, k: usize) -> CliResult<Weight> {
    let mut doubled = Vec::new();
    if !s.trim().is_empty() {
        for part in s.split(',') {
            doubled.push(parse_half(part)?);
        }
    }
    if doubled.len() > k {
        return Err(UsageError(format!(
            "weight {} has more than k = {} entries",
            s, k
        )));
    }
    while doubled.len() < k {
        doubled.push(0);
    }
    Ok(Weight::from_doubled(doubled))
}

fn parse_partition(s: &str) -> CliResult<Partition> {
    let mut parts = Vec::new();
    if !s.trim().is_empty() {
        for p in s.split(',') {
            parts.push(p.trim().parse::<u32>()?);
        }
    }
    Ok(Partition::new(parts))
}

fn half_string(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{}/2", doubled)
    }
}

fn weight_strings(w: &Weight) -> Vec<String> {
    w.doubled.iter().map(|&d| half_string(d)).collect()
}

impl CommonArgs {
    fn build_ring(&self, case: CaseId) -> (CharRing, bool) {
        let cap = self.degree;
        let default_vars = cap.max(1) as usize;
        let vx = self.vars_x.unwrap_or(default_vars);
        let ring = match case.mode() {
            charident::charring::Mode::Single => CharRing::single(vx, cap),
            charident::charring::Mode::Double => {
                let vy = self.vars_y.unwrap_or(default_vars);
                CharRing::double(vx, vy, cap, cap)
            }
        };
        let faithful = ring.is_faithful();
        if !faithful {
            eprintln!(
                "warning: alphabet smaller than the degree cap; the check is not faithful"
            );
        }
        (ring, faithful)
    }

    fn lambda_weight(&self, case: CaseId) -> CliResult<Weight> {
        match &self.lambda {
            Some(s) => parse_weight(s, case.k),
            None => Ok(case.base_lambda()),
        }
    }

    fn emit(&self, text: &str) -> CliResult<()> {
        match &self.output {
            Some(path) => std::fs::write(path, text)?,
            None => print!("{}", text),
        }
        Ok(())
    }
}

fn compare(
    lhs: &CharSeries,
    rhs: &CharSeries,
    report: &mut VerifyReport,
) {
    if !report.equal {
        return;
    }
    if let Some((monomial, a, b)) = lhs.first_mismatch(rhs) {
        report.equal = false;
        report.first_mismatch = Some(Mismatch {
            monomial,
            lhs: a.to_string(),
            rhs: b.to_string(),
        });
    }
}

fn elapsed_ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

fn run_verify(args: &VerifyArgs) -> CliResult<i32> {
    let c = &args.common;
    if let Some(path) = &c.cache {
        oracle::load_cache(path)?;
    }
    let mut report = VerifyReport {
        case: c.case.name().to_string(),
        k: c.k,
        lambda: Vec::new(),
        degree: c.degree,
        equal: true,
        first_mismatch: None,
        timings: BTreeMap::new(),
        faithful: true,
    };

    match c.case {
        CaseArg::JacobiTrudi => {
            // s_λ by the determinant (the library's construction) against
            // independent tableau enumeration
            let lam = parse_partition(c.lambda.as_deref().unwrap_or(""))?;
            report.lambda = lam.parts().iter().map(|p| p.to_string()).collect();
            let n = c.vars_x.unwrap_or(lam.size().max(1) as usize);
            let ctx = Context::new(vec![charident::poly::Alphabet::new("x", n)]);
            let t = Instant::now();
            let det = schur_polynomial(&lam, &ctx, 0);
            let tab = schur_by_tableaux(&lam, &ctx, 0);
            report.timings.insert("engine_ms".into(), elapsed_ms(t));
            if det != tab {
                report.equal = false;
                let diff = det.sub(&tab);
                if let Some((m, _)) = diff.leading() {
                    report.first_mismatch = Some(Mismatch {
                        monomial: charident::poly::monomial_string(&ctx, m),
                        lhs: det.coefficient(m).to_string(),
                        rhs: tab.coefficient(m).to_string(),
                    });
                }
            }
        }
        CaseArg::Gessel if c.k == 0 => {
            // empty determinant: det(∅) = 1 on both sides
            report.lambda = Vec::new();
        }
        CaseArg::SkewLr => {
            let case = CaseId::new(Case::Generic, c.k.max(1));
            let (ring, faithful) = c.build_ring(case);
            report.faithful = faithful;
            let lam = parse_partition(c.lambda.as_deref().unwrap_or(""))?;
            let mu = parse_partition(c.mu.as_deref().unwrap_or(""))?;
            report.lambda = lam.parts().iter().map(|p| p.to_string()).collect();
            let t = Instant::now();
            let (det, sum) = oracle::skew_lr_check(&ring, c.k, &lam, &mu)?;
            report.timings.insert("oracle_ms".into(), elapsed_ms(t));
            compare(&det, &sum, &mut report);
        }
        _ => {
            let case = CaseId::new(c.case.engine_case().unwrap(), c.k);
            let (ring, faithful) = c.build_ring(case);
            report.faithful = faithful;
            let lam = c.lambda_weight(case)?;
            report.lambda = weight_strings(&lam);

            let t = Instant::now();
            let det = engine::det_formula(&ring, case, &lam, args.variant.variant())?;
            let raw = engine::euler_raw(&ring, case, &lam)?;
            report.timings.insert("engine_ms".into(), elapsed_ms(t));
            compare(&det, &raw, &mut report);

            if lam == case.base_lambda() && faithful {
                let t = Instant::now();
                let lhs = oracle::lhs_partition_sum(&ring, case)?;
                report.timings.insert("partition_sum_ms".into(), elapsed_ms(t));
                compare(&lhs, &det, &mut report);
            }
            if args.oracle {
                let t = Instant::now();
                let hwv = oracle::hwv_char(&ring, case, &lam)?;
                report.timings.insert("oracle_ms".into(), elapsed_ms(t));
                compare(&hwv, &det, &mut report);
            }
        }
    }

    if let Some(path) = &c.cache {
        oracle::save_cache(path)?;
    }
    let text = match c.format {
        FormatArg::Json => serde_json::to_string_pretty(&report)? + "\n",
        _ => {
            let mut s = format!(
                "case {} k={} lambda=({}) cap={}: {}\n",
                report.case,
                report.k,
                report.lambda.join(","),
                report.degree,
                if report.equal { "EQUAL" } else { "MISMATCH" }
            );
            if let Some(m) = &report.first_mismatch {
                s.push_str(&format!(
                    "first mismatch at {}: lhs {} vs rhs {}\n",
                    m.monomial, m.lhs, m.rhs
                ));
            }
            s
        }
    };
    c.emit(&text)?;
    Ok(if report.equal { 0 } else { 1 })
}

fn run_complex(args: &ComplexArgs) -> CliResult<i32> {
    let c = &args.common;
    let case = CaseId::new(
        c.case
            .engine_case()
            .ok_or_else(|| UsageError("complex requires a determinantal case".into()))?,
        c.k,
    );
    let lam = c.lambda_weight(case)?;
    let text = match &args.parity {
        Some(p) => {
            if case.case != Case::SymOdd {
                return Err(UsageError("--parity applies only to sym-odd".into()));
            }
            let sign = match p.as_str() {
                "+" | "0" => 0,
                "-" | "1" => 1,
                other => return Err(UsageError(format!("bad parity '{}'", other))),
            };
            engine::format_parity_complex(c.k, &lam, sign)?
        }
        None => engine::format_complex(case, &lam)?,
    };
    c.emit(&(text + "\n"))?;
    Ok(0)
}

fn entry_label(terms: &[(i8, i64)]) -> String {
    let mut s = String::new();
    for (pos, (sign, idx)) in terms.iter().enumerate() {
        if *sign < 0 {
            s.push('−');
        } else if pos > 0 {
            s.push('+');
        }
        s.push_str(&format!("L[{}]", idx));
    }
    s
}

fn run_table(c: &CommonArgs) -> CliResult<i32> {
    let case = CaseId::new(
        c.case
            .engine_case()
            .ok_or_else(|| UsageError("table requires a determinantal case".into()))?,
        c.k,
    );
    let lam = c.lambda_weight(case)?;
    let mut matrix = engine::entry_matrix(case, &lam, Variant::ClosedForm)?;
    if case.case == Case::Skew && lam == Weight::zero(c.k) {
        // at λ=0 the recorded theorem reverses rows and columns, turning the
        // entries into L_{j-i} - L_{i+j} (using L_n = L_{-n})
        matrix.reverse();
        for row in &mut matrix {
            row.reverse();
            for entry in row.iter_mut() {
                for (_, idx) in entry.iter_mut() {
                    *idx = idx.abs();
                }
            }
        }
    }
    let prefix = match case.case {
        Case::SymEven => "(1/2)·det",
        Case::SymOdd | Case::SpinorOdd => "[Sym(E)]·det",
        _ => "det",
    };
    let text = match c.format {
        FormatArg::Json => {
            serde_json::to_string_pretty(&serde_json::json!({
                "case": c.case.name(),
                "k": c.k,
                "lambda": weight_strings(&lam),
                "prefix": prefix,
                "entries": matrix,
            }))? + "\n"
        }
        FormatArg::Latex => {
            let mut s = String::from("\\begin{bmatrix}\n");
            for (i, row) in matrix.iter().enumerate() {
                let cells: Vec<String> = row
                    .iter()
                    .map(|e| entry_label(e).replace('−', "-").replace("L[", "L_{").replace(']', "}"))
                    .collect();
                s.push_str(&cells.join(" & "));
                if i + 1 < matrix.len() {
                    s.push_str(" \\\\");
                }
                s.push('\n');
            }
            s.push_str("\\end{bmatrix}\n");
            format!("{}:\n{}", prefix, s)
        }
        FormatArg::Text => {
            let labels: Vec<Vec<String>> = matrix
                .iter()
                .map(|row| row.iter().map(|e| entry_label(e)).collect())
                .collect();
            let width = labels
                .iter()
                .flat_map(|r| r.iter().map(|s| s.chars().count()))
                .max()
                .unwrap_or(0);
            let mut s = format!("{} of:\n", prefix);
            for row in &labels {
                let cells: Vec<String> = row
                    .iter()
                    .map(|l| format!("{:>w$}", l, w = width))
                    .collect();
                s.push_str(&format!("[ {} ]\n", cells.join("  ")));
            }
            s
        }
    };
    c.emit(&text)?;
    Ok(0)
}

fn run_decompose(c: &CommonArgs) -> CliResult<i32> {
    let case = CaseId::new(
        c.case
            .engine_case()
            .ok_or_else(|| UsageError("decompose requires a determinantal case".into()))?,
        c.k,
    );
    if let Some(path) = &c.cache {
        oracle::load_cache(path)?;
    }
    let (ring, _) = c.build_ring(case);
    let lam = c.lambda_weight(case)?;
    let hwv = oracle::hwv_char(&ring, case, &lam)?;
    let alphabets: Vec<usize> = match case.mode() {
        charident::charring::Mode::Single => vec![0],
        charident::charring::Mode::Double => vec![0, 1],
    };
    let expansion = schur_decompose(hwv.poly(), &alphabets)?;
    let text = match c.format {
        FormatArg::Json => {
            let entries: Vec<serde_json::Value> = expansion
                .iter()
                .map(|(key, coeff)| {
                    serde_json::json!({
                        "partitions": key.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                        "multiplicity": coeff.to_string(),
                    })
                })
                .collect();
            serde_json::to_string_pretty(&serde_json::json!({
                "case": c.case.name(),
                "k": c.k,
                "lambda": weight_strings(&lam),
                "cap": c.degree,
                "terms": entries,
            }))? + "\n"
        }
        _ => {
            let mut s = format!(
                "V[({})] for {} k={}, cap {}:\n",
                weight_strings(&lam).join(","),
                c.case.name(),
                c.k,
                c.degree
            );
            for (key, coeff) in expansion.iter() {
                let labels: Vec<String> = key.iter().map(|p| p.to_string()).collect();
                s.push_str(&format!("  {}  x{}\n", labels.join(" ⊗ "), coeff));
            }
            s
        }
    };
    if let Some(path) = &c.cache {
        oracle::save_cache(path)?;
    }
    c.emit(&text)?;
    Ok(0)
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.cmd {
        Cmd::Verify(args) => run_verify(args),
        Cmd::Complex(args) => run_complex(args),
        Cmd::Table(args) => run_table(args),
        Cmd::Decompose(args) => run_decompose(args),
    };
    match outcome {
        Ok(code) => std::process::exit(code),
        Err(UsageError(msg)) => {
            eprintln!("error: {}", msg);
            std::process::exit(2);
        }
    }
}
