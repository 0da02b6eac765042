//! Command-line front end. `run_with` is the whole program minus process
//! plumbing, so it can be driven from tests.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coefficients::CoefficientTable;
use crate::landau::landau_exact;
use crate::numerics::rational::{format_sci_upper, to_text};
use crate::numerics::{format_decimal, PrecisionPolicy, Rational};
use crate::series_oracle::beta_from_series;
use crate::verify::{self, Status, VerificationReport};

pub const PREC_ENV: &str = "LANDAUKIT_PREC";

#[derive(Parser, Debug)]
#[command(name = "landaukit", version, about = "Exact coefficients and rigorous checks for Landau constants")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Starting precision in bits (default 128, or $LANDAUKIT_PREC).
    #[arg(long, global = true)]
    pub prec: Option<u32>,
    /// Precision cap in bits.
    #[arg(long = "prec-max", global = true, default_value_t = 8192)]
    pub prec_max: u32,
    #[arg(long, global = true, value_enum, default_value_t = Format::RationalText)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Render values as decimals with this many places.
    #[arg(long, global = true)]
    pub decimal: Option<usize>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    RationalText,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// β_2, β_4, ..., β_{2 count} as exact rationals.
    Coeffs {
        #[arg(long, default_value_t = 7, value_parser = clap::value_parser!(u32).range(1..))]
        count: u32,
    },
    /// The Landau constant G_n.
    Landau { n: u32 },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        check: CheckName,
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        #[arg(long = "l-max")]
        l_max: Option<u32>,
        #[arg(long = "k-max")]
        k_max: Option<u32>,
        #[arg(long = "m-max")]
        m_max: Option<u32>,
        #[arg(long = "k-min", default_value_t = 10)]
        k_min: u32,
        #[arg(long = "s-span", default_value_t = 100)]
        s_span: u32,
    },
    /// ε_l(N) / (β_{2l}/N^{2l}) per n, as plot data.
    Plotdata {
        #[arg(long, default_value_t = 2)]
        l: u32,
        #[arg(long = "n-max", default_value_t = 30)]
        n_max: u32,
    },
    /// β_{2k} by recurrence, determinant and series; exit 1 on disagreement.
    Oracles {
        #[arg(long = "k-max", default_value_t = 25, value_parser = clap::value_parser!(u32).range(1..))]
        k_max: u32,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Thm1,
    Thm2,
    Thm3,
    Lemma22,
    Lemma23,
    RhoSandwich,
    Classical,
    Granath,
}

#[derive(Serialize)]
struct JsonRational {
    numerator: String,
    denominator: String,
}

impl From<&Rational> for JsonRational {
    fn from(q: &Rational) -> Self {
        JsonRational { numerator: q.numer().to_string(), denominator: q.denom().to_string() }
    }
}

/// Entry point for the binary: real arguments, environment and stdio.
pub fn main_entry() -> i32 {
    let env_prec = std::env::var(PREC_ENV).ok();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), env_prec.as_deref(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` and runs the command. Returns the process exit code.
pub fn run_with<I, T>(args: I, env_prec: Option<&str>, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{}", e.render());
            return e.exit_code();
        }
    };
    let policy = match policy_from(&cli.common, env_prec) {
        Ok(p) => p,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let (code, text) = match execute(&cli, &policy, err) {
        Ok(v) => v,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            return 2;
        }
    };
    let written = match &cli.common.out {
        Some(path) => std::fs::write(path, text.as_bytes()).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        let _ = writeln!(err, "error: {msg}");
        return 1;
    }
    code
}

fn policy_from(common: &Common, env_prec: Option<&str>) -> Result<PrecisionPolicy, String> {
    let start = match (common.prec, env_prec) {
        (Some(p), _) => p,
        (None, Some(s)) => s.trim().parse().map_err(|_| format!("{PREC_ENV}={s:?} is not a bit count"))?,
        (None, None) => PrecisionPolicy::default().start_bits,
    };
    PrecisionPolicy::new(start, common.prec_max, 2).map_err(|e| e.to_string())
}

fn execute(cli: &Cli, policy: &PrecisionPolicy, err: &mut dyn Write) -> Result<(i32, String), String> {
    let c = &cli.common;
    match &cli.command {
        Command::Coeffs { count } => Ok((0, render_coeffs(*count, c))),
        Command::Landau { n } => Ok((0, render_landau(*n, c))),
        Command::Verify { check, n_max, l_max, k_max, m_max, k_min, s_span } => {
            let report = run_check(*check, *n_max, *l_max, *k_max, *m_max, *k_min, *s_span, policy)
                .map_err(|e| e.to_string())?;
            let code = if *check == CheckName::Granath || report.all_pass() { 0 } else { 1 };
            Ok((code, render_report(&report, c)))
        }
        Command::Plotdata { l, n_max } => {
            let rows = verify::figure1_data(*l, *n_max, policy).map_err(|e| e.to_string())?;
            if let Some(r) = rows.iter().find(|r| r.status != Status::Pass) {
                let _ = writeln!(err, "warning: n = {} is not verified inside (0, 1)", r.n);
            }
            Ok((0, render_plot(&rows, c)))
        }
        Command::Oracles { k_max } => {
            let (agree, text) = render_oracles(*k_max, c);
            if let Some(k) = agree {
                let _ = writeln!(err, "oracles disagree first at k = {k}");
                return Ok((1, text));
            }
            Ok((0, text))
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn run_check(
    check: CheckName,
    n_max: Option<u32>,
    l_max: Option<u32>,
    k_max: Option<u32>,
    m_max: Option<u32>,
    k_min: u32,
    s_span: u32,
    policy: &PrecisionPolicy,
) -> crate::Result<VerificationReport> {
    let n_max_or = |d| n_max.unwrap_or(d);
    match check {
        CheckName::Thm1 => verify::check_thm1(n_max_or(verify::DEFAULT_N_MAX), l_max.unwrap_or(verify::DEFAULT_L_MAX), policy),
        CheckName::Thm2 => verify::check_thm2(n_max_or(verify::DEFAULT_N_MAX), l_max.unwrap_or(verify::DEFAULT_L_MAX), policy),
        CheckName::Thm3 => verify::check_thm3(
            n_max_or(verify::DEFAULT_N_MAX),
            m_max.unwrap_or(10),
            k_max.unwrap_or(10),
            policy,
        ),
        CheckName::Lemma22 => verify::check_lemma22(k_max.unwrap_or(verify::DEFAULT_K_MAX), policy),
        CheckName::Lemma23 => verify::check_lemma23(l_max.unwrap_or(verify::DEFAULT_L_MAX), s_span),
        CheckName::RhoSandwich => verify::check_rho_sandwich(k_min, k_max.unwrap_or(verify::DEFAULT_K_MAX), policy),
        CheckName::Classical => verify::check_classical(n_max_or(verify::DEFAULT_N_MAX), policy),
        CheckName::Granath => verify::check_granath(m_max.unwrap_or(verify::DEFAULT_M_MAX), n_max_or(500), policy),
    }
}

fn json(v: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn decimal(q: &Rational, digits: usize) -> String {
    format_decimal(q, digits, true)
}

fn render_coeffs(count: u32, c: &Common) -> String {
    let betas = CoefficientTable::global().betas(count);
    let mut s = String::new();
    match c.format {
        Format::RationalText => {
            for b in &betas {
                match c.decimal {
                    Some(d) => writeln!(s, "{}", decimal(b, d)),
                    None => writeln!(s, "{}", to_text(b)),
                }
                .expect("string write");
            }
        }
        Format::Csv => {
            s.push_str(if c.decimal.is_some() { "index,numerator,denominator,decimal\n" } else { "index,numerator,denominator\n" });
            for (i, b) in betas.iter().enumerate() {
                write!(s, "{},{},{}", 2 * (i + 1), b.numer(), b.denom()).expect("string write");
                if let Some(d) = c.decimal {
                    write!(s, ",{}", decimal(b, d)).expect("string write");
                }
                s.push('\n');
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                index: u32,
                #[serde(flatten)]
                value: JsonRational,
                #[serde(skip_serializing_if = "Option::is_none")]
                decimal: Option<String>,
            }
            let rows: Vec<Row> = betas
                .iter()
                .enumerate()
                .map(|(i, b)| Row { index: 2 * (i as u32 + 1), value: b.into(), decimal: c.decimal.map(|d| decimal(b, d)) })
                .collect();
            s = json(&rows);
        }
    }
    s
}

fn render_landau(n: u32, c: &Common) -> String {
    let g = landau_exact(n as usize);
    match c.format {
        Format::RationalText => match c.decimal {
            Some(d) => format!("{}\n", decimal(&g, d)),
            None => format!("{}\n", to_text(&g)),
        },
        Format::Csv => {
            let mut s = String::from(if c.decimal.is_some() { "n,numerator,denominator,decimal\n" } else { "n,numerator,denominator\n" });
            write!(s, "{n},{},{}", g.numer(), g.denom()).expect("string write");
            if let Some(d) = c.decimal {
                write!(s, ",{}", decimal(&g, d)).expect("string write");
            }
            s.push('\n');
            s
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Out {
                n: u32,
                #[serde(flatten)]
                value: JsonRational,
                #[serde(skip_serializing_if = "Option::is_none")]
                decimal: Option<String>,
            }
            json(&Out { n, value: (&g).into(), decimal: c.decimal.map(|d| decimal(&g, d)) })
        }
    }
}

/// Text reports list every point for small sweeps and only the non-Pass
/// points beyond this size.
const TEXT_LIST_LIMIT: usize = 200;

fn render_report(r: &VerificationReport, c: &Common) -> String {
    let mut s = String::new();
    match c.format {
        Format::Json => return json(r),
        Format::Csv => {
            for name in &r.point_names {
                write!(s, "{name},").expect("string write");
            }
            s.push_str("status,precision_used,witness\n");
            for res in &r.results {
                for v in &res.point {
                    write!(s, "{v},").expect("string write");
                }
                writeln!(s, "{:?},{},{}", res.status, res.precision_used, csv_field(&res.witness)).expect("string write");
            }
        }
        Format::RationalText => {
            if let Some(b) = &r.banner {
                writeln!(s, "== {b} ==").expect("string write");
            }
            let ranges: Vec<String> = r.ranges.iter().map(|(k, v)| format!("{k}={v}")).collect();
            writeln!(
                s,
                "{} [{}]: total={} pass={} fail={} unknown={} max_precision={}",
                r.check_name,
                ranges.join(" "),
                r.summary.total,
                r.summary.pass,
                r.summary.fail,
                r.summary.unknown,
                r.max_precision()
            )
            .expect("string write");
            if r.check_name == "lemma22" {
                s.push_str("k ratio exact status\n");
                for row in verify::lemma22_table(r.results.len() as u32 - 1) {
                    let st = r.result_at(&[i64::from(row.k)]).map(|x| x.status).unwrap_or(Status::Unknown);
                    writeln!(s, "{} {} {} {:?}", row.k, row.two_decimals, to_text(&row.ratio), st).expect("string write");
                }
                return s;
            }
            let all = r.results.len() <= TEXT_LIST_LIMIT;
            for res in r.results.iter().filter(|x| all || x.status != Status::Pass) {
                let point: Vec<String> = r
                    .point_names
                    .iter()
                    .zip(&res.point)
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                writeln!(s, "{} {:?} @{} {}", point.join(" "), res.status, res.precision_used, res.witness)
                    .expect("string write");
            }
        }
    }
    s
}

fn render_plot(rows: &[verify::Figure1Row], c: &Common) -> String {
    let digits = c.decimal.unwrap_or(20);
    if c.format == Format::Json {
        #[derive(Serialize)]
        struct Row {
            n: u32,
            #[serde(rename = "N")]
            big_n: JsonRational,
            ratio_mid: String,
            ratio_rad: String,
            status: Status,
            precision_used: u32,
        }
        let out: Vec<Row> = rows
            .iter()
            .map(|r| Row {
                n: r.n,
                big_n: (&r.big_n).into(),
                ratio_mid: format_decimal(&r.ratio.mid_rational(), digits, false),
                ratio_rad: format_sci_upper(&r.ratio.rad_rational(), 2),
                status: r.status,
                precision_used: r.precision_used,
            })
            .collect();
        return json(&out);
    }
    let mut s = String::from("n,N,ratio_mid,ratio_rad\n");
    for r in rows {
        writeln!(
            s,
            "{},{},{},{}",
            r.n,
            format_decimal(&r.big_n, 2, false),
            format_decimal(&r.ratio.mid_rational(), digits, false),
            format_sci_upper(&r.ratio.rad_rational(), 2)
        )
        .expect("string write");
    }
    s
}

/// Returns the first disagreeing `k`, if any, and the rendered matrix.
fn render_oracles(k_max: u32, c: &Common) -> (Option<u32>, String) {
    let table = CoefficientTable::global();
    let rec = table.betas(k_max);
    let series = beta_from_series(k_max);
    let rows: Vec<(u32, Rational, Rational, Rational)> = (1..=k_max)
        .map(|k| {
            let det = table.beta_det(2 * k).expect("k >= 1");
            let i = (k - 1) as usize;
            (k, rec[i].clone(), det, series[i].clone())
        })
        .collect();
    let first_bad = rows.iter().find(|(_, a, b, c)| a != b || a != c).map(|r| r.0);
    let mut s = String::new();
    match c.format {
        Format::Json => {
            #[derive(Serialize)]
            struct Row {
                k: u32,
                recurrence: JsonRational,
                determinant: JsonRational,
                series: JsonRational,
                agree: bool,
            }
            let out: Vec<Row> = rows
                .iter()
                .map(|(k, a, b, c)| Row { k: *k, recurrence: a.into(), determinant: b.into(), series: c.into(), agree: a == b && a == c })
                .collect();
            s = json(&out);
        }
        Format::Csv => {
            s.push_str("k,recurrence,determinant,series,agree\n");
            for (k, a, b, cc) in &rows {
                writeln!(s, "{k},{},{},{},{}", to_text(a), to_text(b), to_text(cc), a == b && a == cc).expect("string write");
            }
        }
        Format::RationalText => {
            s.push_str("k rec=det rec=series beta_2k\n");
            for (k, a, b, cc) in &rows {
                let shown = match c.decimal {
                    Some(d) => decimal(a, d),
                    None => to_text(a),
                };
                writeln!(s, "{k} {} {} {shown}", a == b, a == cc).expect("string write");
            }
            match first_bad {
                None => writeln!(s, "all three agree for 1 <= k <= {k_max}"),
                Some(k) => writeln!(s, "first mismatch at k = {k}"),
            }
            .expect("string write");
        }
    }
    (first_bad, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str], env: Option<&str>) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["landaukit"];
        full.extend_from_slice(args);
        let code = run_with(full, env, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn coeffs_and_landau() {
        assert_eq!(run(&["coeffs", "--count", "1"], None), (0, "11/192\n".into(), String::new()));
        assert_eq!(run(&["landau", "0"], None).1, "1\n");
        assert_eq!(run(&["landau", "2"], None).1, "89/64\n");
        assert_eq!(run(&["landau", "2", "--decimal", "10"], None).1, "1.390625\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(&["verify", "bogus"], None).0, 2);
        assert_eq!(run(&["coeffs", "--count", "0"], None).0, 2);
        assert_eq!(run(&["verify", "rho-sandwich", "--k-min", "5"], None).0, 2);
        assert_eq!(run(&["landau", "1"], Some("lots")).0, 2);
    }

    #[test]
    fn precision_sources() {
        let common = |prec| Common { prec, prec_max: 8192, format: Format::Csv, out: None, decimal: None };
        assert_eq!(policy_from(&common(None), None).unwrap().start_bits, 128);
        assert_eq!(policy_from(&common(None), Some("256")).unwrap().start_bits, 256);
        assert_eq!(policy_from(&common(Some(64)), Some("256")).unwrap().start_bits, 64);
        assert!(policy_from(&common(Some(9000)), None).is_err());
    }
}
