//! Command-line front end for exact root extraction: floor e-th roots,
//! perfect power detection and scanning, exact square-root digits, bounded
//! fractional e-th roots, and the timing harness.

use std::io::Read;
use std::str::FromStr;

use exroot::bench::{self, BenchCase, BenchMethod};
use exroot::blocks::pow10;
use exroot::{
    eth_root, eth_root_with_trace, isqrt_trace, refine_root, scan_all_perfect_powers,
    scan_perfect_power, sqrt_digits, BigUint, OracleMethod,
};
use exroot_cli::render::{render_trace, trace_json, TraceFormat};
use serde_json::{json, Value};

const USAGE: &str = "\
exroot — exact integer e-th roots, perfect power detection, and decimal
root expansion over arbitrary-precision integers.

USAGE:
    exroot <COMMAND> [ARGS]

COMMANDS:
    root <N> --exp <E> [--method digit|bisect|newton] [--trace] [--json]
        Floor E-th root of N with exact remainder and perfect-power flag.
    sqrt <N> [--digits <K>] [--trace] [--json]
        Square root of N expanded to K exact decimal digits (truncation,
        never rounding). --trace shows the digit-by-digit steps of the
        scaled radicand N * 10^(2K).
    frac-root <N> --exp <E> [--digits <K>] [--json]
        E-th root of N to K decimal digits by interval refinement; the
        result is below the true root by less than 10^-K.
    check-power <N> --exp <E> [--json]
        Report the root and exit 0 if N is a perfect E-th power, else
        report the floor root with its remainder and exit 1.
    scan-power <N> [--all] [--json]
        Find (root, exponent) with N = root^exponent, scanning exponents
        from log2(N) down to 2; prints the largest-exponent witness, or
        every witness with --all. Exit 1 if none exists.
    bench [--exp <list>] [--sizes <list>] [--digits <K>] [--methods <list>]
          [--seed <S>] [--reps <R>] [--fit] [--json]
        Time digit-by-digit against bisection and Newton on deterministic
        random inputs; emits CSV, or a JSON report with --json. --fit adds
        log-log growth slopes per method.

    The radicand <N> is a decimal literal, @<file>, or '-' for stdin.

EXIT CODES:
    0  success
    1  not a perfect power (check-power, scan-power)
    2  invalid input";

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let code = match run(&args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    };
    std::process::exit(code);
}

fn run(args: &[String]) -> Result<i32, String> {
    let Some(command) = args.first() else {
        eprintln!("{USAGE}");
        return Ok(2);
    };
    let rest = &args[1..];
    match command.as_str() {
        "--help" | "-h" | "help" => {
            println!("{USAGE}");
            Ok(0)
        }
        "root" => cmd_root(&Args::parse(rest, &["--exp", "--method"], &["--json", "--trace"])?),
        "sqrt" => cmd_sqrt(&Args::parse(rest, &["--digits"], &["--json", "--trace"])?),
        "frac-root" => cmd_frac_root(&Args::parse(rest, &["--exp", "--digits"], &["--json"])?),
        "check-power" => cmd_check_power(&Args::parse(rest, &["--exp"], &["--json"])?),
        "scan-power" => cmd_scan_power(&Args::parse(rest, &[], &["--json", "--all"])?),
        "bench" => cmd_bench(&Args::parse(
            rest,
            &["--exp", "--sizes", "--digits", "--methods", "--seed", "--reps"],
            &["--json", "--fit"],
        )?),
        other => Err(format!("unknown subcommand: {other} (see exroot --help)")),
    }
}

struct Args {
    positionals: Vec<String>,
    values: Vec<(&'static str, String)>,
    switches: Vec<&'static str>,
}

impl Args {
    /// Parse raw tokens against the flags this subcommand accepts; anything
    /// else is rejected before dispatch.
    fn parse(
        raw: &[String],
        value_flags: &'static [&'static str],
        switch_flags: &'static [&'static str],
    ) -> Result<Args, String> {
        let mut args = Args { positionals: Vec::new(), values: Vec::new(), switches: Vec::new() };
        let mut tokens = raw.iter();
        while let Some(token) = tokens.next() {
            if token.starts_with("--") {
                let (name, inline) = match token.split_once('=') {
                    Some((n, v)) => (n.to_string(), Some(v.to_string())),
                    None => (token.clone(), None),
                };
                if let Some(&flag) = value_flags.iter().find(|&&f| f == name) {
                    let value = match inline {
                        Some(v) => v,
                        None => tokens
                            .next()
                            .cloned()
                            .ok_or_else(|| format!("{flag} needs a value"))?,
                    };
                    args.values.push((flag, value));
                } else if let Some(&flag) = switch_flags.iter().find(|&&f| f == name) {
                    if inline.is_some() {
                        return Err(format!("{flag} takes no value"));
                    }
                    args.switches.push(flag);
                } else {
                    return Err(format!("unknown flag {name} for this subcommand"));
                }
            } else {
                args.positionals.push(token.clone());
            }
        }
        Ok(args)
    }

    fn value(&self, flag: &str) -> Option<&str> {
        self.values.iter().rev().find(|(f, _)| *f == flag).map(|(_, v)| v.as_str())
    }

    fn switch(&self, flag: &str) -> bool {
        self.switches.contains(&flag)
    }

    fn radicand(&self) -> Result<BigUint, String> {
        match self.positionals.as_slice() {
            [one] => read_radicand(one),
            [] => Err("missing radicand argument".into()),
            more => Err(format!("expected one radicand, got {}", more.len())),
        }
    }

    fn required_exponent(&self) -> Result<u32, String> {
        let raw = self.value("--exp").ok_or("--exp <E> is required")?;
        raw.parse::<u32>().map_err(|_| format!("--exp must be a small integer, got {raw}"))
    }

    fn digit_count(&self) -> Result<usize, String> {
        match self.value("--digits") {
            None => Ok(0),
            Some(raw) => raw
                .parse::<usize>()
                .map_err(|_| format!("--digits must be a non-negative integer, got {raw}")),
        }
    }
}

/// A radicand argument: a decimal literal, `@path`, or `-` for stdin.
/// Million-digit inputs exceed argv limits, hence the file/stdin forms.
fn read_radicand(source: &str) -> Result<BigUint, String> {
    let text = if source == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else if let Some(path) = source.strip_prefix('@') {
        std::fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))?
    } else {
        source.to_string()
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err("radicand is empty".into());
    }
    if !trimmed.bytes().all(|b| b.is_ascii_digit()) {
        let shown: String = trimmed.chars().take(40).collect();
        return Err(format!("radicand must be a non-negative decimal integer, got {shown:?}"));
    }
    BigUint::from_str(trimmed).map_err(|e| format!("radicand parse failed: {e}"))
}

fn ordinal(e: u32) -> String {
    let suffix = if (11..=13).contains(&(e % 100)) {
        "th"
    } else {
        match e % 10 {
            1 => "st",
            2 => "nd",
            3 => "rd",
            _ => "th",
        }
    };
    format!("{e}{suffix}")
}

fn print_json(value: &Value) -> Result<(), String> {
    let rendered =
        serde_json::to_string_pretty(value).map_err(|e| format!("serialization failed: {e}"))?;
    println!("{rendered}");
    Ok(())
}

fn cmd_root(args: &Args) -> Result<i32, String> {
    let n = args.radicand()?;
    let e = args.required_exponent()?;
    let want_trace = args.switch("--trace");
    let method = args.value("--method").unwrap_or("digit");

    let primary = matches!(method, "digit" | "digit-by-digit" | "digit_by_digit");
    if want_trace && !primary {
        return Err("--trace is only available with the digit-by-digit method".into());
    }

    let (root, remainder, iterations, trace, method_name) = if primary {
        let result = if want_trace { eth_root_with_trace(&n, e) } else { eth_root(&n, e) }
            .map_err(|err| err.to_string())?;
        (result.root, result.remainder, Some(result.iterations), result.trace, "digit_by_digit")
    } else {
        let oracle = OracleMethod::from_str(method)?;
        let root = oracle.floor_root(&n, e).map_err(|err| err.to_string())?;
        let remainder = &n - num_traits::Pow::pow(&root, e);
        (root, remainder, None, None, oracle.name())
    };
    let perfect = remainder == BigUint::from(0u32);

    if args.switch("--json") {
        let mut obj = json!({
            "radicand": n.to_string(),
            "exponent": e,
            "root": root.to_string(),
            "remainder": remainder.to_string(),
            "perfect": perfect,
            "method": method_name,
        });
        if let Some(iterations) = iterations {
            obj["iterations"] = json!(iterations);
        }
        if let Some(rows) = &trace {
            obj["trace"] = trace_json(rows);
        }
        print_json(&obj)?;
    } else {
        if let Some(rows) = &trace {
            print!("{}", render_trace(rows, TraceFormat::Table)?);
        }
        if perfect {
            println!("{root} (perfect {} power, remainder 0)", ordinal(e));
        } else {
            println!("{root} (not a perfect {} power, remainder {remainder})", ordinal(e));
        }
    }
    Ok(0)
}

fn cmd_sqrt(args: &Args) -> Result<i32, String> {
    let n = args.radicand()?;
    let k = args.digit_count()?;
    let expansion = sqrt_digits(&n, k);

    let trace = if args.switch("--trace") {
        // The scaled radicand's digit-by-digit run reproduces the expansion:
        // its rows past the integer part are exactly the fractional steps.
        let scaled = &n * pow10(2 * k as u32);
        Some(isqrt_trace(&scaled).1)
    } else {
        None
    };

    if args.switch("--json") {
        let digits: String =
            expansion.fraction_digits().iter().map(|d| char::from(b'0' + d)).collect();
        let mut obj = json!({
            "radicand": n.to_string(),
            "digits": k,
            "value": expansion.to_decimal_string(),
            "integer_part": expansion.integer_part().to_string(),
            "fraction_digits": digits,
            "scaled_root": expansion.scaled_root().to_string(),
            "scaled_remainder": expansion.scaled_remainder().to_string(),
        });
        if let Some(rows) = &trace {
            obj["trace"] = trace_json(rows);
        }
        print_json(&obj)?;
    } else {
        if let Some(rows) = &trace {
            print!("{}", render_trace(rows, TraceFormat::Table)?);
        }
        println!("{}", expansion.to_decimal_string());
    }
    Ok(0)
}

fn cmd_frac_root(args: &Args) -> Result<i32, String> {
    let n = args.radicand()?;
    let e = args.required_exponent()?;
    let k = args.digit_count()?;
    let (rendered, state) = refine_root(&n, e, k).map_err(|err| err.to_string())?;

    if args.switch("--json") {
        print_json(&json!({
            "radicand": n.to_string(),
            "exponent": e,
            "digits": k,
            "value": rendered,
            "lower_scaled": state.lower_scaled().to_string(),
        }))?;
    } else {
        println!("{rendered}");
    }
    Ok(0)
}

fn cmd_check_power(args: &Args) -> Result<i32, String> {
    let n = args.radicand()?;
    let e = args.required_exponent()?;
    let result = eth_root(&n, e).map_err(|err| err.to_string())?;

    if args.switch("--json") {
        print_json(&json!({
            "radicand": n.to_string(),
            "exponent": e,
            "perfect": result.perfect,
            "root": result.root.to_string(),
            "remainder": result.remainder.to_string(),
        }))?;
    } else if result.perfect {
        println!("yes: root {}", result.root);
    } else {
        println!("no: floor root {}, remainder {}", result.root, result.remainder);
    }
    Ok(if result.perfect { 0 } else { 1 })
}

fn cmd_scan_power(args: &Args) -> Result<i32, String> {
    let n = args.radicand()?;

    if args.switch("--all") {
        let witnesses = scan_all_perfect_powers(&n);
        if args.switch("--json") {
            let list: Vec<Value> = witnesses
                .iter()
                .map(|(root, e)| json!({ "root": root.to_string(), "exponent": e }))
                .collect();
            print_json(&json!({ "radicand": n.to_string(), "witnesses": list }))?;
        } else if witnesses.is_empty() {
            println!("none");
        } else {
            for (root, e) in &witnesses {
                println!("{root}^{e}");
            }
        }
        return Ok(if witnesses.is_empty() { 1 } else { 0 });
    }

    match scan_perfect_power(&n) {
        Some((root, e)) => {
            if args.switch("--json") {
                print_json(&json!({
                    "radicand": n.to_string(),
                    "perfect_power": true,
                    "root": root.to_string(),
                    "exponent": e,
                }))?;
            } else {
                println!("{root}^{e}");
            }
            Ok(0)
        }
        None => {
            if args.switch("--json") {
                print_json(&json!({ "radicand": n.to_string(), "perfect_power": false }))?;
            } else {
                println!("none");
            }
            Ok(1)
        }
    }
}

fn parse_list<T: FromStr>(raw: &str, what: &str) -> Result<Vec<T>, String> {
    raw.split(',')
        .map(|item| item.trim().parse::<T>().map_err(|_| format!("bad {what} entry: {item}")))
        .collect()
}

fn cmd_bench(args: &Args) -> Result<i32, String> {
    let exponents: Vec<u32> = parse_list(args.value("--exp").unwrap_or("2,3"), "--exp")?;
    let sizes: Vec<usize> = parse_list(args.value("--sizes").unwrap_or("100,200,400"), "--sizes")?;
    let k = args.digit_count()?;
    let seed: u64 = args
        .value("--seed")
        .unwrap_or("42")
        .parse()
        .map_err(|_| "--seed must be an unsigned integer".to_string())?;
    let reps: usize = args
        .value("--reps")
        .unwrap_or("5")
        .parse()
        .map_err(|_| "--reps must be a positive integer".to_string())?;
    let methods: Vec<BenchMethod> = match args.value("--methods").unwrap_or("all") {
        "all" => BenchMethod::ALL.to_vec(),
        list => parse_list(list, "--methods")?,
    };

    let mut cases = Vec::new();
    for &exponent in &exponents {
        for &digit_count in &sizes {
            for &method in &methods {
                cases.push(BenchCase { method, exponent, digit_count, fractional_digits: k });
            }
        }
    }
    let records = bench::run_bench(&cases, seed, reps).map_err(|err| err.to_string())?;
    let fits = if args.switch("--fit") {
        Some(bench::fit_growth(&records).map_err(|err| err.to_string())?)
    } else {
        None
    };

    if args.switch("--json") {
        let record_values: Vec<Value> = records
            .iter()
            .map(|r| {
                json!({
                    "method": r.method.name(),
                    "exponent": r.exponent,
                    "digit_count": r.digit_count,
                    "fractional_digits": r.fractional_digits,
                    "median_ns": u64::try_from(r.median_ns).unwrap_or(u64::MAX),
                    "repetitions": r.repetitions,
                    "checksum": format!("{:016x}", r.checksum),
                    "iterations": r.iterations,
                })
            })
            .collect();
        let mut obj = json!({ "seed": seed, "reps": reps, "records": record_values });
        if let Some(fits) = &fits {
            let fit_values: Vec<Value> = fits
                .iter()
                .map(|f| {
                    json!({
                        "method": f.method.name(),
                        "exponent": f.exponent,
                        "fractional_digits": f.fractional_digits,
                        "points": f.points,
                        "slope": f.slope,
                        "log_rmse": f.log_rmse,
                        "high_residual": f.high_residual,
                    })
                })
                .collect();
            obj["growth"] = Value::Array(fit_values);
        }
        print_json(&obj)?;
    } else {
        print!("{}", bench::to_csv(&records));
        if let Some(fits) = &fits {
            for f in fits {
                println!(
                    "# growth {} e={} k={}: slope {:.3} (log_rmse {:.3}, points {}{})",
                    f.method.name(),
                    f.exponent,
                    f.fractional_digits,
                    f.slope,
                    f.log_rmse,
                    f.points,
                    if f.high_residual { ", high residual" } else { "" },
                );
            }
        }
    }
    Ok(0)
}
