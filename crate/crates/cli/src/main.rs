mod report;

use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nullcorr::chern::chern_of_e;
use nullcorr::dioph::{components_certificate, DEFAULT_MAX_M};
use nullcorr::moduli::{moduli_report, stability_flags};
use nullcorr::monadcoh::{cohomology_table, default_window};
use nullcorr::selftest::{self, Grid};
use nullcorr::{Error, MonadSpec};
use serde_json::{json, Value};

/// Exact invariants of special generalized null correlation bundles.
#[derive(Parser)]
#[command(name = "nullcorr", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct SpecArgs {
    /// E lives on P^{2n+1}
    #[arg(long)]
    n: usize,
    /// degree of the outer terms of the monad
    #[arg(long)]
    c: u64,
    /// a_1,...,a_{n+1}, non-increasing
    #[arg(long, value_delimiter = ',', required = true)]
    a: Vec<u64>,
}

impl SpecArgs {
    fn spec(&self) -> Result<MonadSpec, Failure> {
        MonadSpec::new(self.n, self.c, self.a.clone()).map_err(Failure::input)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Chern classes, stability flags and (on P^5 with c > 5a1) moduli data
    Invariants {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, value_enum, default_value_t = InvariantsFormat::Json)]
        format: InvariantsFormat,
    },
    /// Cohomology table h^i(E(t)) over a twist range
    Table {
        #[command(flatten)]
        spec: SpecArgs,
        /// MIN..MAX, inclusive; defaults to a window covering both dual ends
        #[arg(long, allow_hyphen_values = true, value_parser = parse_twists)]
        twists: Option<RangeInclusive<i64>>,
        #[arg(long, value_enum, default_value_t = TableFormat::Json)]
        format: TableFormat,
    },
    /// Certificate of at least N moduli components sharing (c2, c4) on P^5
    Components {
        #[arg(long)]
        count: usize,
        #[arg(long, value_delimiter = ',', num_args = 2, allow_hyphen_values = true, default_values_t = [1i64, 1])]
        ab: Vec<i64>,
        /// ceiling for the search over M = x^2 + 3y^2
        #[arg(long, env = "NULLCORR_MAX_M", default_value_t = DEFAULT_MAX_M)]
        max_m: u64,
    },
    /// Cross-checks every module against the independent oracles
    Selftest {
        #[arg(long, default_value = "small", value_parser = parse_grid)]
        grid: Grid,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum InvariantsFormat {
    Json,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

fn parse_twists(s: &str) -> Result<RangeInclusive<i64>, String> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| format!("expected MIN..MAX, got '{s}'"))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|e| format!("bad MIN '{lo}': {e}"))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|e| format!("bad MAX '{hi}': {e}"))?;
    if lo > hi {
        return Err(format!("empty twist range {lo}..{hi}"));
    }
    Ok(lo..=hi)
}

fn parse_grid(s: &str) -> Result<Grid, String> {
    s.parse()
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn input(e: Error) -> Self {
        Self {
            code: 2,
            message: e.to_string(),
        }
    }
}

fn grid_name(grid: Grid) -> &'static str {
    match grid {
        Grid::Small => "small",
        Grid::Full => "full",
    }
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialize");
    s.push('\n');
    s
}

fn invariants(args: &SpecArgs, format: InvariantsFormat) -> Result<String, Failure> {
    let spec = args.spec()?;
    let chern = chern_of_e(&spec);
    let flags = stability_flags(&spec);
    let moduli = match moduli_report(&spec) {
        Ok(r) => Some(r),
        Err(Error::OutsideHypothesis(_)) => None,
        Err(e) => {
            return Err(Failure {
                code: 1,
                message: e.to_string(),
            })
        }
    };

    if let InvariantsFormat::Pretty = format {
        let mut out = format!(
            "P^{} bundle, c = {}, a = {:?}\n",
            spec.ambient_dim(),
            spec.c(),
            spec.a()
        );
        out.push_str(&format!("chern: {chern}\n"));
        out.push_str(&format!(
            "e_stable: {}\ne_simple: {}\nfg_stable: {}\n",
            flags.e_stable, flags.e_simple, flags.fg_stable
        ));
        for line in &flags.criteria_used {
            out.push_str(&format!("  {line}\n"));
        }
        match &moduli {
            Some(r) => out.push_str(&format!(
                "h1(End E) = {}\nh2(End E) = {}\ndim N = {}\n",
                r.h1_end, r.h2_end, r.dim_n
            )),
            None => out.push_str("moduli data: needs n = 2 and c > 5a1\n"),
        }
        return Ok(out);
    }

    let result = json!({
        "chern": report::chern(&chern, spec.n()),
        "stability": report::stability(&flags),
        "moduli": moduli.as_ref().map(report::moduli),
    });
    Ok(json_text(&report::envelope(
        "invariants",
        report::spec_input(&spec),
        result,
    )))
}

fn table(
    args: &SpecArgs,
    twists: Option<RangeInclusive<i64>>,
    format: TableFormat,
) -> Result<String, Failure> {
    let spec = args.spec()?;
    let (lo, hi) = twists.map_or_else(|| default_window(&spec), |r| (*r.start(), *r.end()));
    let table = cohomology_table(&spec, lo, hi).map_err(Failure::input)?;
    Ok(match format {
        TableFormat::Csv => report::table_csv(&table),
        TableFormat::Json => {
            let mut input = report::spec_input(&spec);
            input["twists"] = json!([lo, hi]);
            json_text(&report::envelope("table", input, report::table(&table)))
        }
    })
}

fn components(count: usize, ab: &[i64], max_m: u64) -> Result<String, Failure> {
    let (a, b) = (ab[0], ab[1]);
    let cert = components_certificate(count, a, b, max_m).map_err(|e| match e {
        Error::SearchExhausted { .. } => Failure {
            code: 3,
            message: e.to_string(),
        },
        Error::InvariantViolation(_) => Failure {
            code: 1,
            message: e.to_string(),
        },
        _ => Failure::input(e),
    })?;
    let input = json!({ "count": count, "ab": [a, b], "max_m": report::int(max_m) });
    Ok(json_text(&report::envelope(
        "components",
        input,
        report::certificate(&cert),
    )))
}

fn selftest(grid: Grid) -> Result<String, Failure> {
    let checks = selftest::run(grid);
    let passed = checks.iter().all(|c| c.passed);
    let result = json!({ "passed": passed, "checks": report::checks(&checks) });
    let text = json_text(&report::envelope(
        "selftest",
        json!({ "grid": grid_name(grid) }),
        result,
    ));
    if passed {
        Ok(text)
    } else {
        print!("{text}");
        let failed: Vec<&str> = checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect();
        Err(Failure {
            code: 1,
            message: format!("failed checks: {}", failed.join("; ")),
        })
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("{first}");
            return ExitCode::from(2);
        }
    };
    let outcome = match &cli.command {
        Command::Invariants { spec, format } => invariants(spec, *format),
        Command::Table {
            spec,
            twists,
            format,
        } => table(spec, twists.clone(), *format),
        Command::Components { count, ab, max_m } => components(*count, ab, *max_m),
        Command::Selftest { grid } => selftest(*grid),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
