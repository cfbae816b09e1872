//! Command-line front end: compute, verify, census, export.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ogroth::harness::{self, Format, Input, Target};
use ogroth::prelude::*;

#[derive(Parser)]
#[command(name = "ogroth", version, about = "Orthogonal and symplectic Grothendieck polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum TargetArg {
    Groth,
    Invgroth,
    Ortho,
    Symp,
    Gco,
    Ivex,
    Igrass,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum CensusKind {
    ValuesTable,
    EqualityCensus,
    LncCounts,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum ExportKind {
    BinvPlusDot,
    BinvPlusJson,
    PolyJson,
    ShiftableJson,
}

#[derive(clap::Args)]
struct Common {
    /// Involution in cycle notation "(1,4)(2,5)" or one-line "4321".
    #[arg(long)]
    z: Option<String>,
    /// Permutation in one-line notation.
    #[arg(long)]
    w: Option<String>,
    /// Strict partition, comma separated.
    #[arg(long, value_delimiter = ',')]
    mu: Option<Vec<usize>>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// Write output to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute one object.
    Compute {
        #[arg(value_enum)]
        target: TargetArg,
        #[command(flatten)]
        common: Common,
    },
    /// Run a sweep by identifier, or `all`, or `list` to show identifiers.
    Verify {
        theorem: String,
        #[arg(long)]
        n_max: Option<usize>,
        /// Worker threads; 0 uses all cores.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print a census table.
    Census {
        #[arg(value_enum)]
        kind: CensusKind,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: FormatArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export figure data.
    Export {
        #[arg(value_enum)]
        kind: ExportKind,
        #[command(flatten)]
        common: Common,
    },
}

enum Failure {
    Lib(Error),
    Io(std::io::Error),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Lib(e)
    }
}

fn format_of(f: FormatArg) -> Format {
    match f {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
        FormatArg::Dot => Format::Dot,
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> std::result::Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(Failure::Io),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn input_of(c: &Common) -> Input {
    Input { z: c.z.clone(), w: c.w.clone(), mu: c.mu.clone(), n: c.n }
}

fn run(cli: Cli) -> std::result::Result<(), Failure> {
    match cli.command {
        Command::Compute { target, common } => {
            let target = match target {
                TargetArg::Groth => Target::Groth,
                TargetArg::Invgroth => Target::Invgroth,
                TargetArg::Ortho => Target::Ortho,
                TargetArg::Symp => Target::Symp,
                TargetArg::Gco => Target::Gco,
                TargetArg::Ivex => Target::Ivex,
                TargetArg::Igrass => Target::Igrass,
            };
            let text = harness::compute(target, &input_of(&common), format_of(common.format))?;
            emit(&text, common.out.as_ref())
        }
        Command::Verify { theorem, n_max, jobs, format, out } => {
            if theorem == "list" {
                let mut s = String::new();
                for (id, desc, n) in harness::THEOREMS {
                    s.push_str(&format!("{id:<22} n_max={n:<2} {desc}\n"));
                }
                return emit(&s, out.as_ref());
            }
            let ids: Vec<&str> = if theorem == "all" {
                harness::THEOREMS.iter().map(|t| t.0).collect()
            } else {
                vec![theorem.as_str()]
            };
            let mut reports = Vec::new();
            for id in ids {
                let n = match n_max.or_else(|| harness::default_n_max(id)) {
                    Some(n) => n,
                    None => return Err(Error::Parse(format!("unknown sweep id {id:?}; try `verify list`")).into()),
                };
                let r = harness::verify(id, n, jobs)?;
                if matches!(format, FormatArg::Text) && out.is_none() {
                    print!("{r}");
                }
                reports.push(r);
            }
            let ok = reports.iter().all(|r| r.passed());
            match (format, out.as_ref()) {
                (FormatArg::Json, o) => {
                    let text = serde_json::to_string_pretty(&reports).expect("serializable") + "\n";
                    emit(&text, o)?;
                }
                (_, Some(o)) => emit(&reports.iter().map(|r| r.to_string()).collect::<String>(), Some(o))?,
                _ => {}
            }
            if ok {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
        Command::Census { kind, n, jobs, format, out } => {
            let json_out = matches!(format, FormatArg::Json);
            let text = match kind {
                CensusKind::ValuesTable => {
                    let mut s = String::new();
                    let mut rows = Vec::new();
                    for m in 1..=n {
                        let vals = harness::values_table(m)?;
                        let list: Vec<String> = vals.iter().map(|v| v.to_string()).collect();
                        s.push_str(&format!("{m}: {}\n", list.join(", ")));
                        rows.push(json!({ "n": m, "values": vals }));
                    }
                    if json_out {
                        serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
                    } else {
                        s
                    }
                }
                CensusKind::EqualityCensus => {
                    eprintln!("equality census over vexillary involutions of S_{n}");
                    let row = harness::equality_census(n, jobs)?;
                    if json_out {
                        serde_json::to_string_pretty(&row).expect("serializable") + "\n"
                    } else {
                        format!(
                            "n={}: dominant {}/{}, vexillary {}/{}\n",
                            row.n, row.dominant_eq, row.dominant, row.vexillary_eq, row.vexillary
                        )
                    }
                }
                CensusKind::LncCounts => {
                    let rows = harness::lnc_counts(n)?;
                    if json_out {
                        serde_json::to_string_pretty(&rows).expect("serializable") + "\n"
                    } else {
                        let mut s = String::from("n  vexillary  lnc  z(1)=1 vexillary  z(1)=1 lnc\n");
                        for r in rows {
                            s.push_str(&format!(
                                "{:<2} {:>9} {:>4} {:>18} {:>11}\n",
                                r.n, r.vexillary, r.lnc, r.fixed_vexillary, r.fixed_lnc
                            ));
                        }
                        s
                    }
                }
            };
            emit(&text, out.as_ref())
        }
        Command::Export { kind, common } => {
            let input = input_of(&common);
            let z = || Involution::parse(input.z.as_deref().ok_or_else(|| Error::Parse("missing --z".into()))?);
            let text = match kind {
                ExportKind::BinvPlusDot => harness::binv_plus_dot(&z()?)?,
                ExportKind::BinvPlusJson => harness::binv_plus_json(&z()?)?,
                ExportKind::ShiftableJson => harness::shiftable_json(&z()?)?,
                ExportKind::PolyJson => {
                    let w = input.w.as_deref().ok_or_else(|| Error::Parse("missing --w".into()))?;
                    harness::poly_json(&Permutation::parse(w)?)?
                }
            };
            emit(&text, common.out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Parse(_) | Error::InvalidParameter(_) => 2,
                e if e.is_internal() => 3,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}
