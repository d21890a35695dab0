//! Command-line front end: build/verify/export the algebra, query recoupling
//! coefficients, and evaluate diagram expressions.
//!
//! Exit codes: 0 on success, 1 when a verification check fails, 2 on usage
//! errors.

pub mod dsl;
pub mod export;

use crate::cyclotomic::CycNum;
use crate::recoupling::Recoupler;
use crate::repcat;
use crate::wha::duality::{pairing_suite, SelfDuality};
use crate::wha::verify::{copivotal_check, spherical_check, verify_wba, verify_wha_axioms, CheckResult};
use crate::wha::WhaData;
use clap::{Parser, Subcommand};
use serde::Serialize;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "coend",
    about = "Exact self-dual weak Hopf algebras from quantum sl2 recoupling data"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the algebra at level r and write its tensors as JSON.
    Build {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run verification suites; exits nonzero iff any check fails.
    Verify {
        #[arg(long)]
        r: usize,
        /// wba | wha | copivotal | spherical | pairing | repcat | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Verify a previously exported file against a fresh build first.
        #[arg(long)]
        from: Option<PathBuf>,
    },
    /// Evaluate the closed theta network on three colors.
    Theta {
        #[arg(long)]
        r: usize,
        a: usize,
        b: usize,
        c: usize,
    },
    /// Evaluate the quantum 6j symbol {a b i; c d j}.
    Sixj {
        #[arg(long)]
        r: usize,
        a: usize,
        b: usize,
        i: usize,
        c: usize,
        d: usize,
        j: usize,
    },
    /// Parse and evaluate a closed diagram expression.
    Eval {
        #[arg(long)]
        r: usize,
        expr: String,
    },
    /// Alias of build: write the JSON export of the algebra.
    Export {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<CheckResult>,
}

#[derive(Serialize)]
pub struct VerifyReport {
    pub r: usize,
    pub dim: usize,
    pub pair_counts: Vec<usize>,
    pub millis: u128,
    pub suites: Vec<SuiteReport>,
}

fn significant(x: f64) -> String {
    if x.abs() < 1e-12 {
        return "0".to_string();
    }
    let mag = x.abs().log10().floor() as i32;
    let decimals = (5 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

fn render_numeric(v: &CycNum) -> String {
    let (re, im) = v.to_complex();
    format!("{} + {}i", significant(re), significant(im))
}

fn admissibility_note(r: usize, a: usize, b: usize, c: usize) -> Option<&'static str> {
    if !(a + b + c).is_multiple_of(2) {
        Some("parity")
    } else if a + b < c || b + c < a || c + a < b {
        Some("quantum triangle inequality")
    } else if a + b + c + 4 > 2 * r {
        Some("non-negligibility")
    } else {
        None
    }
}

fn check_colors(r: usize, colors: &[usize]) -> Result<(), String> {
    if r < 2 {
        return Err(format!("level r must be at least 2, got {}", r));
    }
    for &c in colors {
        if c + 2 > r {
            return Err(format!("color {} out of range 0..={}", c, r - 2));
        }
    }
    Ok(())
}

/// Build the requested suites; the order of the report is fixed regardless
/// of scheduling.
pub fn run_suites(r: usize, which: &str) -> Result<VerifyReport, String> {
    let t0 = std::time::Instant::now();
    let h = WhaData::build(r).map_err(|e| e.to_string())?;
    let mut suites = Vec::new();
    let want = |name: &str| which == "all" || which == name;
    if !["all", "wba", "wha", "copivotal", "spherical", "pairing", "repcat"]
        .contains(&which)
    {
        return Err(format!("unknown suite {:?}", which));
    }
    if want("wba") {
        suites.push(SuiteReport {
            suite: "wba".into(),
            checks: verify_wba(&h),
        });
    }
    if want("wha") {
        suites.push(SuiteReport {
            suite: "wha".into(),
            checks: verify_wha_axioms(&h),
        });
    }
    if want("copivotal") {
        suites.push(SuiteReport {
            suite: "copivotal".into(),
            checks: copivotal_check(&h),
        });
    }
    if want("spherical") {
        let cms = repcat::all_comodules(&h);
        suites.push(SuiteReport {
            suite: "spherical".into(),
            checks: spherical_check(&h, &cms),
        });
    }
    if want("pairing") {
        let sd = SelfDuality::build(&h).map_err(|e| e.to_string())?;
        suites.push(SuiteReport {
            suite: "pairing".into(),
            checks: pairing_suite(&h, &sd),
        });
    }
    if want("repcat") {
        suites.push(SuiteReport {
            suite: "repcat".into(),
            checks: repcat::repcat_suite(&h, 0x5eed),
        });
    }
    Ok(VerifyReport {
        r,
        dim: h.dim(),
        pair_counts: h.pair_counts(),
        millis: t0.elapsed().as_millis(),
        suites,
    })
}

fn cmd_verify(r: usize, suite: &str, json: bool, from: Option<PathBuf>) -> i32 {
    if let Some(path) = from {
        let bytes = match std::fs::read(&path) {
            Ok(b) => b,
            Err(e) => {
                eprintln!("error: cannot read {}: {}", path.display(), e);
                return 2;
            }
        };
        let file = match export::from_bytes(&bytes) {
            Ok(f) => f,
            Err(e) => {
                eprintln!("error: {}", e);
                return 2;
            }
        };
        if file.r != r {
            eprintln!("error: file is at level {}, requested {}", file.r, r);
            return 2;
        }
        match export::import_and_check(&file) {
            Ok(_) => println!("import: tensors match a fresh build at r = {}", r),
            Err(e) => {
                eprintln!("import failed: {}", e);
                return 1;
            }
        }
    }
    match run_suites(r, suite) {
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
        Ok(report) => {
            let mut failed = 0usize;
            if json {
                println!("{}", serde_json::to_string_pretty(&report).unwrap());
                failed = report
                    .suites
                    .iter()
                    .flat_map(|s| &s.checks)
                    .filter(|c| !c.passed)
                    .count();
            } else {
                println!(
                    "level r = {}: dim H = {}, pairs per color {:?}",
                    report.r, report.dim, report.pair_counts
                );
                for s in &report.suites {
                    println!("suite {}:", s.suite);
                    for c in &s.checks {
                        if c.passed {
                            println!("  PASS {} ({} ms)", c.name, c.millis);
                        } else {
                            failed += 1;
                            println!(
                                "  FAIL {} ({} ms): {}",
                                c.name,
                                c.millis,
                                c.witness.as_deref().unwrap_or("no witness")
                            );
                        }
                    }
                }
                println!(
                    "{} in {} ms",
                    if failed == 0 {
                        "all checks passed".to_string()
                    } else {
                        format!("{} check(s) FAILED", failed)
                    },
                    report.millis
                );
            }
            if failed == 0 {
                0
            } else {
                1
            }
        }
    }
}

fn cmd_export(r: usize, out: &PathBuf) -> i32 {
    if r < 2 {
        eprintln!("error: level r must be at least 2");
        return 2;
    }
    let h = match WhaData::build(r) {
        Ok(h) => h,
        Err(e) => {
            eprintln!("error: {}", e);
            return 2;
        }
    };
    let sd = match SelfDuality::build(&h) {
        Ok(sd) => sd,
        Err(e) => {
            eprintln!("error: {}", e);
            return 2;
        }
    };
    let file = export::export(&h, &sd);
    match export::to_bytes(&file).and_then(|b| Ok(std::fs::write(out, b)?)) {
        Ok(()) => {
            println!(
                "wrote level-{} algebra (dim {}) to {}",
                r,
                h.dim(),
                out.display()
            );
            0
        }
        Err(e) => {
            eprintln!("error: {}", e);
            2
        }
    }
}

pub fn run() -> i32 {
    let cli = Cli::parse();
    match cli.cmd {
        Command::Build { r, out } | Command::Export { r, out } => cmd_export(r, &out),
        Command::Verify { r, suite, json, from } => cmd_verify(r, &suite, json, from),
        Command::Theta { r, a, b, c } => {
            if let Err(e) = check_colors(r, &[a, b, c]) {
                eprintln!("error: {}", e);
                return 2;
            }
            let rec = Recoupler::new(r).expect("r >= 2");
            let v = rec.theta(a, b, c);
            match admissibility_note(r, a, b, c) {
                Some(reason) => println!("0 (non-admissible: {})", reason),
                None => println!("{}  ~ {}", v, render_numeric(&v)),
            }
            0
        }
        Command::Sixj { r, a, b, i, c, d, j } => {
            if let Err(e) = check_colors(r, &[a, b, i, c, d, j]) {
                eprintln!("error: {}", e);
                return 2;
            }
            let rec = Recoupler::new(r).expect("r >= 2");
            let v = rec.sixj(a, b, i, c, d, j);
            println!("{}  ~ {}", v, render_numeric(&v));
            0
        }
        Command::Eval { r, expr } => {
            if r < 2 {
                eprintln!("error: level r must be at least 2");
                return 2;
            }
            let parsed = match dsl::parse(&expr) {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return 2;
                }
            };
            let net = match dsl::to_network(&parsed) {
                Ok(n) => n,
                Err(e) => {
                    eprintln!("error: {}", e);
                    return 2;
                }
            };
            let rec = Recoupler::new(r).expect("r >= 2");
            match rec.skein().evaluate_network(&net) {
                Ok(v) => {
                    println!("exact: [{}]", v.to_coeff_strings().join(", "));
                    println!("value: {}  ~ {}", v, render_numeric(&v));
                    0
                }
                Err(e) => {
                    eprintln!("error: {}", e);
                    2
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_all_pass_at_r2() {
        let report = run_suites(2, "all").unwrap();
        for s in &report.suites {
            for c in &s.checks {
                assert!(c.passed, "{}/{}: {:?}", s.suite, c.name, c.witness);
            }
        }
        assert_eq!(report.dim, 1);
    }

    #[test]
    fn unknown_suite_is_an_error() {
        assert!(run_suites(2, "nope").is_err());
    }

    #[test]
    fn significant_digit_rendering() {
        assert_eq!(significant(0.0), "0");
        assert_eq!(significant(-std::f64::consts::SQRT_2), "-1.41421");
        assert_eq!(significant(123456.7), "123457");
    }
}
