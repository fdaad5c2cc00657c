use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use farep::facalc::{self, FBModuleData, ModuleLabel, ProjectiveLabel, SimpleLabel};
use farep::oracle::{nat_hom, ClaimReport, Route, TruncatedFunctor};
use farep::partitions::Partition;
use farep::symrep::{BimodDecomposition, IrrDecomposition};
use farep::verify;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "farep", version, about = "Exact representation theory of finite sets and all maps")]
struct Cli {
    /// Truncation degree: largest set size or partition size materialized.
    #[arg(long, global = true, env = "FAREP_TRUNC", default_value_t = 6)]
    trunc: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Seed for randomized property suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Presented,
    Generic,
}

#[derive(Subcommand)]
enum Command {
    /// Projective summands of the Schur functor S_λ(P^FA).
    DecomposePfin { partition: String },
    /// S_t-module obtained by evaluating a simple on a t-element set (labels: `C 2,1`, `L 1`, `k0`).
    SimpleEval {
        #[arg(num_args = 1..=2, required = true)]
        label: Vec<String>,
        #[arg(long)]
        t: usize,
    },
    /// Summands and composition factors of kFI(n, −).
    StructureKfi { n: usize },
    /// Natural transformations between two built functors, solved at the truncation.
    Hom {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Presented)]
        route: RouteArg,
    },
    /// Composition-factor multiplicities from FB-module data in a JSON file.
    Multiplicities {
        #[arg(long)]
        input: PathBuf,
    },
    /// Checks one Grothendieck-group identity up to the truncation.
    Groth {
        #[arg(long)]
        identity: String,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
}

enum Outcome {
    Ok(String),
    Counterexample(String, Vec<String>),
}

type Row = (String, String, String);

fn tsv(rows: &[Row]) -> String {
    let mut out = String::from("degree\tpartition\tcoefficient\n");
    for (d, p, c) in rows {
        out.push_str(&format!("{d}\t{p}\t{c}\n"));
    }
    out
}

fn render(format: Format, value: &Value, rows: &[Row]) -> String {
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(value).expect("JSON values serialize")),
        Format::Tsv => tsv(rows),
    }
}

fn paren(p: &Partition) -> String {
    format!("({p})")
}

fn irr_rows(x: &IrrDecomposition) -> Vec<Row> {
    x.mults().iter().map(|(p, m)| (x.degree().to_string(), paren(p), m.to_string())).collect()
}

fn bimod_json(d: &BimodDecomposition) -> Value {
    d.mults
        .iter()
        .map(|((l, r), c)| json!({"left": l, "right": r, "coeff": c}))
        .collect::<Vec<_>>()
        .into()
}

/// Generating degree of a projective summand.
fn projective_degree(p: &ProjectiveLabel) -> usize {
    match p {
        ProjectiveLabel::SchurPbar(nu) => nu.size(),
        ProjectiveLabel::LambdaPfin(m) => *m,
    }
}

fn reports(format: Format, reports: Vec<ClaimReport>) -> Outcome {
    let failed: Vec<String> = reports.iter().filter(|r| !r.pass).map(|r| r.claim.clone()).collect();
    let out = match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&reports).expect("reports serialize")),
        Format::Tsv => {
            let mut out = String::from("claim\tparameters\tpass\n");
            for r in &reports {
                out.push_str(&format!("{}\t{}\t{}\n", r.claim, r.parameters, r.pass));
            }
            out
        }
    };
    if failed.is_empty() {
        Outcome::Ok(out)
    } else {
        Outcome::Counterexample(out, failed)
    }
}

fn run(cli: Cli) -> Result<Outcome, String> {
    let err = |e: farep::Error| e.to_string();
    let format = cli.format;
    let out = match cli.command {
        Command::DecomposePfin { partition } => {
            let lambda: Partition = partition.parse().map_err(err)?;
            let summands = facalc::decompose_schur_pfin(&lambda).map_err(err)?;
            let mut counts: BTreeMap<ProjectiveLabel, u64> = BTreeMap::new();
            for s in &summands {
                *counts.entry(s.clone()).or_insert(0) += 1;
            }
            let rows: Vec<Row> = counts
                .iter()
                .map(|(s, c)| (projective_degree(s).to_string(), s.to_string(), c.to_string()))
                .collect();
            let dims: Vec<u128> = (0..=cli.trunc).map(|m| facalc::schur_dimension(&lambda, m)).collect();
            let value = json!({
                "partition": lambda,
                "summands": counts.iter().map(|(s, c)| json!({"summand": s, "multiplicity": c})).collect::<Vec<_>>(),
                "dimensions": dims,
            });
            render(format, &value, &rows)
        }
        Command::SimpleEval { label, t } => {
            let label: SimpleLabel = label.join(" ").parse().map_err(err)?;
            let x = facalc::simple_eval(&label, t).map_err(err)?;
            let value = json!({"label": label, "t": t, "module": x, "dimension": x.dimension().map_err(err)?});
            render(format, &value, &irr_rows(&x))
        }
        Command::StructureKfi { n } => {
            let summands = facalc::structure_kfi(n).map_err(err)?;
            let rows: Vec<Row> = summands
                .iter()
                .map(|(l, m)| {
                    let degree = match l {
                        ModuleLabel::Simple(s) => s.min_degree(),
                        ModuleLabel::Projective(p) => projective_degree(p),
                    };
                    (degree.to_string(), l.to_string(), m.to_string())
                })
                .collect();
            let value = json!({
                "n": n,
                "summands": summands.iter().map(|(l, m)| json!({"summand": l, "multiplicity": m})).collect::<Vec<_>>(),
            });
            render(format, &value, &rows)
        }
        Command::Hom { from, to, route } => {
            let route = match route {
                RouteArg::Presented => Route::Presented,
                RouteArg::Generic => Route::Generic,
            };
            let solve = |n: usize| -> Result<_, String> {
                let s = TruncatedFunctor::parse(&from, n).map_err(err)?;
                let t = TruncatedFunctor::parse(&to, n).map_err(err)?;
                nat_hom(&s, &t, route).map_err(err)
            };
            let hom = solve(cli.trunc)?;
            let next = solve(cli.trunc + 1)?.dimension;
            let character = hom.decomposition().map_err(err)?;
            let rows: Vec<Row> = character
                .iter()
                .flat_map(|d| {
                    d.mults
                        .iter()
                        .map(|((l, r), c)| (format!("{}|{}", d.s, d.t), format!("{}|{}", paren(l), paren(r)), c.to_string()))
                })
                .collect();
            let value = json!({
                "from": from,
                "to": to,
                "trunc": cli.trunc,
                "route": hom.route.to_string(),
                "dimension": hom.dimension,
                "dimension_next": next,
                "stable": hom.dimension == next,
                "character": character.as_ref().map(bimod_json),
            });
            if hom.dimension != next {
                return Ok(Outcome::Counterexample(render(format, &value, &rows), vec!["stabilization".into()]));
            }
            render(format, &value, &rows)
        }
        Command::Multiplicities { input } => {
            let text = std::fs::read_to_string(&input).map_err(|e| format!("{}: {e}", input.display()))?;
            let data: FBModuleData = serde_json::from_str(&text).map_err(|e| format!("{}: {e}", input.display()))?;
            let mults = facalc::multiplicities(&data).map_err(err)?;
            let rows: Vec<Row> = mults
                .iter()
                .map(|(l, m)| (l.min_degree().to_string(), l.to_string(), m.to_string()))
                .collect();
            let dims: Vec<i64> = (0..data.trunc)
                .map(|t| facalc::composition_dimension(&mults, t))
                .collect::<farep::Result<_>>()
                .map_err(err)?;
            let value = json!({
                "multiplicities": mults.iter().map(|(l, m)| (l.to_string(), json!(m))).collect::<serde_json::Map<_, _>>(),
                "composition_dimensions": dims,
            });
            render(format, &value, &rows)
        }
        Command::Groth { identity } => {
            if cli.trunc < 1 {
                return Err("groth needs --trunc of at least 1".into());
            }
            return verify::groth_identity(&identity, cli.trunc, cli.trunc).map(|r| reports(format, r)).map_err(err);
        }
        Command::Verify { suite, max_size } => {
            return verify::run_suite(&suite, max_size, cli.seed).map(|r| reports(format, r)).map_err(err);
        }
    };
    Ok(Outcome::Ok(out))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(Outcome::Ok(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Counterexample(out, failed)) => {
            print!("{out}");
            for claim in failed {
                eprintln!("counterexample: {claim}");
            }
            ExitCode::from(2)
        }
        Err(message) => {
            eprintln!("{}", json!({"error": message}));
            ExitCode::from(1)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_claims_become_counterexamples() {
        let good = ClaimReport::new("ok", json!({}), json!(1), json!(1), true);
        let bad = ClaimReport::new("broken", json!({"n": 2}), json!(1), json!(0), false);
        assert!(matches!(reports(Format::Tsv, vec![good.clone()]), Outcome::Ok(_)));
        match reports(Format::Json, vec![good, bad]) {
            Outcome::Counterexample(out, failed) => {
                assert_eq!(failed, vec!["broken".to_string()]);
                assert!(out.contains("\"pass\": false"));
            }
            Outcome::Ok(_) => panic!("a failing claim must not pass"),
        }
    }
}
