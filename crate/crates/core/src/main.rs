//! Command-line surface: determinants, factored forms, achievability
//! classification, witness construction, census sweeps, a self-test suite,
//! and Cayley table dumps. All output is exact decimal.
//!
//! Exit codes: 0 success/achievable, 1 not achievable, 2 parse error,
//! 3 internal formula/oracle mismatch, 4 achievability unknown.

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::json;

use sdet::census::{run_census, CensusConfig, CensusMode};
use sdet::determinants::{
    m_general_factored, regular_determinant, sd_general_factored, CayleyTable, GroupFamily,
    GroupSpec,
};
use sdet::group_ring::GroupRingElement;
use sdet::number_theory::{classify, factorize};
use sdet::witness::witness;

const EXIT_OK: u8 = 0;
const EXIT_NOT_ACHIEVABLE: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;
const EXIT_UNKNOWN: u8 = 4;

#[derive(Parser)]
#[command(
    name = "sdet",
    about = "Exact integer group determinants for SD16 and relatives"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GroupArg {
    Sd16,
    Sd32,
    M16,
    M32,
    D8,
}

impl GroupArg {
    fn spec(self) -> GroupSpec {
        match self {
            GroupArg::Sd16 => GroupSpec::sd16(),
            GroupArg::Sd32 => GroupSpec::sd32(),
            GroupArg::M16 => GroupSpec::m16(),
            GroupArg::M32 => GroupSpec::m32(),
            GroupArg::D8 => GroupSpec::d8(),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Determinant of a group-ring element (oracle path).
    Det(DetArgs),
    /// Factor an integer (trial division + Pollard rho).
    Factor {
        #[arg(allow_hyphen_values = true)]
        n: String,
        /// Pollard rho rounds per surviving cofactor.
        #[arg(long, default_value_t = 64)]
        effort: u32,
        #[arg(long)]
        json: bool,
    },
    /// Decide achievability of an integer as an SD16 determinant.
    Classify {
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(long)]
        json: bool,
    },
    /// Construct a witness element for an achievable target.
    Witness {
        #[arg(allow_hyphen_values = true)]
        n: String,
        /// Re-run the oracle on the constructed element and print the check.
        #[arg(long)]
        verify: bool,
        #[arg(long)]
        json: bool,
    },
    /// Sweep a coefficient box and report achieved values.
    Census(CensusArgs),
    /// Run the full invariant suite at reduced scale.
    Selftest {
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print the Cayley table of a supported group.
    Table {
        #[arg(long, value_enum, default_value_t = GroupArg::Sd16)]
        group: GroupArg,
    },
}

#[derive(Args)]
struct DetArgs {
    #[arg(long, value_enum, default_value_t = GroupArg::Sd16)]
    group: GroupArg,
    /// Element as "a0,...,a_{h-1};b0,...,b_{h-1}".
    #[arg(allow_hyphen_values = true)]
    element: String,
    /// Also print the factored form and assert it matches the oracle.
    #[arg(long)]
    factored: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long, default_value_t = 0)]
    lo: i64,
    #[arg(long, default_value_t = 1)]
    hi: i64,
    /// Enumeration mode: cap on nonzero coefficients.
    #[arg(long, conflicts_with_all = ["random", "seed"])]
    max_nonzero: Option<usize>,
    /// Random mode: number of samples.
    #[arg(long)]
    random: Option<u64>,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Record only |D| <= bound.
    #[arg(long)]
    value_bound: Option<String>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Enumerate only orbit representatives under validated symmetries.
    #[arg(long)]
    symmetry: bool,
    #[arg(long)]
    json: bool,
}

fn parse_bigint(s: &str) -> Result<BigInt, u8> {
    let t = s.trim();
    let t = t.strip_prefix('+').unwrap_or(t);
    BigInt::from_str(t).map_err(|_| {
        eprintln!("error: cannot parse integer {s:?}");
        EXIT_PARSE
    })
}

fn parse_element(group: GroupArg, text: &str) -> Result<GroupRingElement, u8> {
    let n = match group {
        GroupArg::Sd16 | GroupArg::M16 => 4,
        GroupArg::Sd32 | GroupArg::M32 => 5,
        GroupArg::D8 => {
            eprintln!("error: pass a d8 element as the fold of an n=4 element; direct d8 input is length 4+4");
            return Err(EXIT_PARSE);
        }
    };
    GroupRingElement::parse(n, text).map_err(|e| {
        eprintln!("error: {e}");
        EXIT_PARSE
    })
}

fn cmd_det(args: &DetArgs) -> u8 {
    if args.group == GroupArg::D8 {
        return cmd_det_d8(args);
    }
    let element = match parse_element(args.group, &args.element) {
        Ok(e) => e,
        Err(code) => return code,
    };
    let spec = args.group.spec();
    let oracle = match regular_determinant(&element, spec) {
        Ok(d) => d,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_PARSE;
        }
    };
    if !args.factored {
        if args.json {
            println!(
                "{}",
                json!({"group": spec.name(), "element": element.to_string(),
                       "determinant": oracle.to_string()})
            );
        } else {
            println!("{oracle}");
        }
        return EXIT_OK;
    }
    // factored path, asserted against the oracle before printing
    match spec.family() {
        GroupFamily::Semidihedral => {
            let fac = match sd_general_factored(&element) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INTERNAL;
                }
            };
            if fac.product != oracle {
                eprintln!(
                    "internal error: factored {} != oracle {oracle}",
                    fac.product
                );
                return EXIT_INTERNAL;
            }
            let a_strings: Vec<String> = fac.a.iter().map(|a| a.to_string()).collect();
            if args.json {
                println!(
                    "{}",
                    json!({"group": spec.name(), "element": element.to_string(),
                           "determinant": oracle.to_string(),
                           "M": fac.m.to_string(), "A": a_strings})
                );
            } else {
                println!("D={oracle}");
                println!("M={}", fac.m);
                for (j, a) in fac.a.iter().enumerate() {
                    println!("A{}={a}", j + 2);
                }
            }
        }
        GroupFamily::ModularMaximal => {
            let fac = match m_general_factored(&element) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: {e}");
                    return EXIT_INTERNAL;
                }
            };
            if fac.product != oracle {
                eprintln!(
                    "internal error: factored {} != oracle {oracle}",
                    fac.product
                );
                return EXIT_INTERNAL;
            }
            if args.json {
                println!(
                    "{}",
                    json!({"group": spec.name(), "element": element.to_string(),
                           "determinant": oracle.to_string(),
                           "M1": fac.m1.to_string(), "A": fac.a.to_string()})
                );
            } else {
                println!("D={oracle}");
                println!("M1={}", fac.m1);
                println!("A={}", fac.a);
            }
        }
        GroupFamily::Dihedral8 => unreachable!(),
    }
    EXIT_OK
}

fn cmd_det_d8(args: &DetArgs) -> u8 {
    // length-4 vectors, same "f;g" syntax
    let parts: Vec<&str> = args.element.split(';').collect();
    if parts.len() != 2 {
        eprintln!("error: expected \"g0,g1,g2,g3;d0,d1,d2,d3\"");
        return EXIT_PARSE;
    }
    let parse4 = |s: &str| -> Result<Vec<BigInt>, u8> {
        let v: Result<Vec<BigInt>, u8> = s.split(',').map(|t| parse_bigint(t)).collect();
        let v = v?;
        if v.len() != 4 {
            eprintln!("error: expected 4 coefficients per part");
            return Err(EXIT_PARSE);
        }
        Ok(v)
    };
    let gamma = match parse4(parts[0]) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let delta = match parse4(parts[1]) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let d = sdet::group_ring::DihedralElement { gamma, delta };
    match sdet::determinants::d8_determinant(&d) {
        Ok(det) => {
            if args.json {
                println!("{}", json!({"group": "d8", "determinant": det.to_string()}));
            } else {
                println!("{det}");
            }
            EXIT_OK
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_PARSE
        }
    }
}

fn cmd_classify(n: &str, json_out: bool) -> u8 {
    let n = match parse_bigint(n) {
        Ok(v) => v,
        Err(c) => return c,
    };
    let verdict = classify(&n);
    if json_out {
        println!(
            "{}",
            json!({"n": verdict.n.to_string(),
                   "achievable": verdict.achievable,
                   "reason": verdict.reason.to_string()})
        );
    } else {
        println!("{verdict}");
    }
    match verdict.achievable {
        Some(true) => EXIT_OK,
        Some(false) => EXIT_NOT_ACHIEVABLE,
        None => EXIT_UNKNOWN,
    }
}

fn cmd_witness(n: &str, verify: bool, json_out: bool) -> u8 {
    let n = match parse_bigint(n) {
        Ok(v) => v,
        Err(c) => return c,
    };
    match witness(&n) {
        Ok(w) => {
            let check = if verify {
                match regular_determinant(&w.element, GroupSpec::sd16()) {
                    Ok(d) if d == w.target => Some(true),
                    _ => Some(false),
                }
            } else {
                None
            };
            if check == Some(false) {
                eprintln!("internal error: witness failed re-verification");
                return EXIT_INTERNAL;
            }
            if json_out {
                println!(
                    "{}",
                    json!({"n": w.target.to_string(),
                           "element": w.element.to_string(),
                           "family": w.family.to_string(),
                           "verified": check.unwrap_or(w.verified)})
                );
            } else {
                println!("{}", w.element);
                println!("family: {}", w.family);
                if verify {
                    println!("verified: oracle determinant = {}", w.target);
                }
            }
            EXIT_OK
        }
        Err(sdet::Error::NotAchievable(v)) => {
            if json_out {
                println!(
                    "{}",
                    json!({"n": v.n.to_string(), "achievable": v.achievable,
                           "reason": v.reason.to_string()})
                );
            } else {
                println!("{v}");
            }
            if v.achievable.is_none() {
                EXIT_UNKNOWN
            } else {
                EXIT_NOT_ACHIEVABLE
            }
        }
        Err(e @ sdet::Error::VerificationFailed { .. }) => {
            eprintln!("internal error: {e}");
            EXIT_INTERNAL
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_PARSE
        }
    }
}

fn cmd_factor(n: &str, effort: u32, json_out: bool) -> u8 {
    let n = match parse_bigint(n) {
        Ok(v) => v,
        Err(c) => return c,
    };
    if n == BigInt::from(0) {
        eprintln!("error: cannot factor 0");
        return EXIT_PARSE;
    }
    let f = factorize(&n, effort);
    if json_out {
        let factors: Vec<_> = f
            .factors
            .iter()
            .map(|(p, e)| json!({"prime": p.to_string(), "exponent": e}))
            .collect();
        let unf: Vec<String> = f.unfactored.iter().map(|c| c.to_string()).collect();
        println!(
            "{}",
            json!({"n": f.n.to_string(), "sign": f.sign, "factors": factors,
                   "unfactored": unf, "complete": f.complete})
        );
    } else {
        println!("{f}");
        if !f.complete {
            println!("(incomplete: composite cofactor survived the effort bound)");
        }
    }
    EXIT_OK
}

fn cmd_census(args: &CensusArgs) -> u8 {
    let mode = match (args.max_nonzero, args.random) {
        (Some(_), Some(_)) | (None, None) => {
            eprintln!("error: pass exactly one of --max-nonzero (enumeration) or --random N");
            return EXIT_PARSE;
        }
        (Some(max_nonzero), None) => CensusMode::Enumerate { max_nonzero },
        (None, Some(samples)) => CensusMode::Random {
            samples,
            seed: args.seed,
        },
    };
    let value_bound = match &args.value_bound {
        Some(s) => match parse_bigint(s) {
            Ok(v) => Some(v),
            Err(c) => return c,
        },
        None => None,
    };
    let config = CensusConfig {
        lo: args.lo,
        hi: args.hi,
        mode,
        value_bound,
        workers: args.jobs,
        use_symmetry: args.symmetry,
    };
    match run_census(&config) {
        Ok(report) => {
            if args.json {
                let achieved: Vec<_> = report
                    .achieved
                    .values()
                    .map(|av| {
                        json!({"value": av.value.to_string(),
                               "element": av.example.to_string(),
                               "count": av.count})
                    })
                    .collect();
                let violations: Vec<_> = report
                    .violations
                    .iter()
                    .map(|v| json!({"value": v.value.to_string(), "description": v.description}))
                    .collect();
                println!(
                    "{}",
                    json!({"achieved": achieved, "violations": violations,
                           "scanned": report.scanned,
                           "elapsed_ms": report.elapsed.as_millis() as u64})
                );
            } else {
                print!("{}", report.to_text());
                eprintln!(
                    "# scanned {} elements in {:?}; {} violations",
                    report.scanned,
                    report.elapsed,
                    report.violations.len()
                );
                for v in &report.violations {
                    eprintln!("# VIOLATION {}: {}", v.value, v.description);
                }
            }
            if report.violations.is_empty() {
                EXIT_OK
            } else {
                EXIT_INTERNAL
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INTERNAL
        }
    }
}

fn cmd_table(group: GroupArg) -> u8 {
    let spec = group.spec();
    let table = match CayleyTable::build(spec) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_INTERNAL;
        }
    };
    let half = table.half();
    let label = |g: usize| -> String {
        if g < half {
            format!("X^{g}")
        } else {
            format!("Y.X^{}", g - half)
        }
    };
    println!("# {} (order {})", spec.name(), table.order());
    for g in 0..table.order() {
        let row: Vec<String> = (0..table.order())
            .map(|h| table.product(g, h).to_string())
            .collect();
        println!("{:>7}: {}", label(g), row.join(" "));
    }
    EXIT_OK
}

mod selftest;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match &cli.command {
        Command::Det(args) => cmd_det(args),
        Command::Factor { n, effort, json } => cmd_factor(n, *effort, *json),
        Command::Classify { n, json } => cmd_classify(n, *json),
        Command::Witness { n, verify, json } => cmd_witness(n, *verify, *json),
        Command::Census(args) => cmd_census(args),
        Command::Selftest { seed } => selftest::run(*seed),
        Command::Table { group } => cmd_table(*group),
    };
    ExitCode::from(code)
}
