use std::collections::BTreeSet;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use tautring::beta::beta;
use tautring::rational::{self, Rational};
use tautring::secant::{
    castelnuovo_count, cayley_quadrisecants, induced_pencil_degree, secant_plane_count,
    vanishing_report,
};
use tautring::taut::{generate_relation, reduce_mod_vanishing, GradedLabel};

use tautring_cli::render::{relation_json, relation_text};
use tautring_cli::tables::{compute_row, golden_rows, match_row, row_passes, MatchKind};
use tautring_cli::verify::{recursion_limit_from_env, run_suite, Suite};

#[derive(Parser)]
#[command(
    name = "tautring",
    version,
    about = "Relations between the graded components of a curve class in the tautological ring of its Jacobian"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the relation a base point free g^r_d yields in graded index s
    Relation {
        /// Genus of the curve
        #[arg(long)]
        g: u32,
        /// Dimension of the linear system
        #[arg(long)]
        r: u32,
        /// Degree of the linear system
        #[arg(long)]
        d: u32,
        /// Graded index of the relation
        #[arg(long)]
        s: u32,
        /// Reduce modulo the vanishing the induced pencil provides
        #[arg(long)]
        reduce: bool,
        /// Emit canonical JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Evaluate a beta coefficient directly
    Beta {
        /// Degree of the linear system
        #[arg(long)]
        d: u32,
        /// Comma-separated exponents, e.g. 2,2
        #[arg(long)]
        a: String,
    },
    /// Secant-plane counts and the vanishing they imply
    Secants {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        json: bool,
    },
    /// Recompute the published relation tables and compare
    Tables {
        /// Largest genus to include (at most 12)
        #[arg(long, default_value_t = 9)]
        genus_max: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    All,
    Beta,
    Tables,
    Recursion,
    Chow,
    Identities,
    Pipeline,
}

impl From<SuiteArg> for Suite {
    fn from(value: SuiteArg) -> Self {
        match value {
            SuiteArg::All => Suite::All,
            SuiteArg::Beta => Suite::Beta,
            SuiteArg::Tables => Suite::Tables,
            SuiteArg::Recursion => Suite::Recursion,
            SuiteArg::Chow => Suite::Chow,
            SuiteArg::Identities => Suite::Identities,
            SuiteArg::Pipeline => Suite::Pipeline,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Relation {
            g,
            r,
            d,
            s,
            reduce,
            json,
        } => cmd_relation(g, r, d, s, reduce, json),
        Command::Beta { d, a } => cmd_beta(d, &a),
        Command::Secants { r, d, g, json } => cmd_secants(r, d, g, json),
        Command::Tables { genus_max, json } => cmd_tables(genus_max, json),
        Command::Verify { suite } => cmd_verify(suite.into()),
    }
}

/// Exit code 2 for anything that amounts to bad flags.
fn usage_error(message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn rational_text(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn cmd_relation(g: u32, r: u32, d: u32, s: u32, reduce: bool, json: bool) -> ExitCode {
    let relation = match generate_relation(g, r, d as u64, s as u64) {
        Ok(p) => p,
        Err(e) => return usage_error(e),
    };
    let relation = if reduce {
        let vanished = match vanishing_report(r, d, g) {
            Ok(v) => v,
            Err(e) => return usage_error(e),
        };
        reduce_mod_vanishing(&relation, &vanished)
    } else {
        relation
    };
    let label = GradedLabel {
        codim: g as i64 - r as i64,
        index: s as i64,
    };
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&relation_json(&relation, label)).expect("valid JSON")
        );
    } else {
        println!("{}", relation_text(&relation));
    }
    ExitCode::SUCCESS
}

fn cmd_beta(d: u32, exponent_list: &str) -> ExitCode {
    let mut exponents = Vec::new();
    for part in exponent_list.split(',') {
        match part.trim().parse::<u64>() {
            Ok(v) => exponents.push(v),
            Err(_) => return usage_error(format!("invalid exponent {part:?}")),
        }
    }
    match beta(d as u64, &exponents) {
        Ok(value) => {
            println!("{value}");
            ExitCode::SUCCESS
        }
        Err(e) => usage_error(e),
    }
}

fn vanishing_text(set: &BTreeSet<u32>) -> String {
    if set.is_empty() {
        "none".to_string()
    } else {
        let items: Vec<String> = set.iter().map(u32::to_string).collect();
        format!("{{{}}}", items.join(", "))
    }
}

fn cmd_secants(r: u32, d: u32, g: u32, json: bool) -> ExitCode {
    let a = match secant_plane_count(r as i64, d as i64, g as i64) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    let b = match castelnuovo_count(r as i64, d as i64, g as i64) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    let cayley = (r == 3).then(|| cayley_quadrisecants(d as i64, g as i64));
    let pencil = match induced_pencil_degree(r as i64, d as i64, g as i64) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    let vanishing = match vanishing_report(r, d, g) {
        Ok(v) => v,
        Err(e) => return usage_error(e),
    };
    if json {
        let mut value = json!({
            "r": r,
            "d": d,
            "g": g,
            "secant_plane_count": rational::coeff_string(&a),
            "castelnuovo_count": rational::coeff_string(&b),
            "pencil_degree": pencil,
            "vanishing": vanishing.iter().collect::<Vec<_>>(),
        });
        if let Some(c) = &cayley {
            value["cayley_quadrisecants"] = json!(rational::coeff_string(c));
        }
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("valid JSON")
        );
    } else {
        println!("g^{r}_{d} on a genus {g} curve");
        println!("secant-plane count A = {}", rational_text(&a));
        println!("Castelnuovo count  B = {}", rational_text(&b));
        if let Some(c) = &cayley {
            println!("Cayley quadrisecants = {}", rational_text(c));
        }
        println!("induced pencil degree = {pencil}");
        println!(
            "vanishing: C(i) = 0 for i in {}",
            vanishing_text(&vanishing)
        );
    }
    ExitCode::SUCCESS
}

fn cmd_tables(genus_max: u32, json: bool) -> ExitCode {
    if genus_max > 12 {
        return usage_error("genus-max must be at most 12");
    }
    let rows: Vec<_> = golden_rows()
        .into_iter()
        .filter(|row| row.genus <= genus_max)
        .collect();
    let mut all_pass = true;
    let mut json_rows = Vec::new();
    for golden in &rows {
        let row = match compute_row(golden.genus, golden.r, golden.d) {
            Ok(row) => row,
            Err(e) => return usage_error(e),
        };
        let pass = row_passes(&row, golden);
        all_pass &= pass;
        let matched = match match_row(&row, golden) {
            MatchKind::Raw => "raw",
            MatchKind::Reduced => "reduced",
            MatchKind::Both => "both",
            MatchKind::Neither => "none",
        };
        if json {
            let label = GradedLabel {
                codim: golden.genus as i64 - golden.r as i64,
                index: golden.d as i64 - 2 * golden.r as i64 + 1,
            };
            json_rows.push(json!({
                "table": golden.table,
                "genus": golden.genus,
                "r": golden.r,
                "d": golden.d,
                "pencil_degree": row.pencil_degree,
                "raw": relation_json(&row.raw_relation, label),
                "reduced": relation_json(&row.reduced_relation, label),
                "matched": matched,
                "pass": pass,
            }));
        } else {
            let shown = if golden.expect_raw {
                &row.raw_relation
            } else {
                &row.reduced_relation
            };
            println!(
                "table {}  g={}  g^{}_{}  ->  g^1_{}  {:<44}  {}",
                golden.table,
                golden.genus,
                golden.r,
                golden.d,
                row.pencil_degree,
                relation_text(shown),
                if pass {
                    format!("ok ({matched} form)")
                } else {
                    "MISMATCH".to_string()
                }
            );
        }
    }
    if json {
        println!(
            "{}",
            serde_json::to_string_pretty(&json_rows).expect("valid JSON")
        );
    }
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_verify(suite: Suite) -> ExitCode {
    let limit = recursion_limit_from_env();
    let outcomes = run_suite(suite, limit);
    let mut all_pass = true;
    for outcome in &outcomes {
        println!("{}", outcome.status_line());
        all_pass &= outcome.passed;
    }
    let passed = outcomes.iter().filter(|o| o.passed).count();
    println!("{passed}/{} checks passed", outcomes.len());
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
