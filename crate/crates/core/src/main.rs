use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use eaqecc::code::{CodeKind, CodeSpec};
use eaqecc::construction::{self, CodeCatalog, Theorem43Fixture, Theorem43Input};
use eaqecc::params::{self, parse_inline_params, EaqeccParams, QeccParams};
use eaqecc::perf::{self, Block};
use eaqecc::Error;

#[derive(Parser)]
#[command(name = "eaqecc", version, about = "Entanglement-assisted quantum codes with noisy ebits")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Codeword cap for distance enumerations
    #[arg(long, global = true, default_value_t = eaqecc::DEFAULT_ENUM_CAP)]
    max_enum: u64,
    /// Bisection tolerance for the threshold solver
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    /// Seed for the splitting search
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    /// Catalog file (defaults to the bundled catalog)
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Trace dual of an additive code (Hermitian dual for linear codes)
    Dual { codefile: PathBuf },
    /// Decompose a code into trace radical and ACD part
    Decompose { codefile: PathBuf },
    /// Exact minimum distance by enumeration
    Distance {
        codefile: PathBuf,
        /// Exclude the codewords of this subcode
        #[arg(long)]
        exclude: Option<PathBuf>,
    },
    /// Derive [[n,k,d]] (or [[n,k,d;c]] with --ea) from a stabilizer file
    Params {
        codefile: PathBuf,
        /// Treat as an EA-stabilizer (no self-orthogonality requirement)
        #[arg(long)]
        ea: bool,
        /// Skip the distance enumeration
        #[arg(long)]
        no_distance: bool,
    },
    /// Matching flags between inline `n,k,d,c` EA params and `n,k,d` protector params
    Match {
        ea_params: String,
        qecc_params: String,
    },
    /// Guaranteed protector length for c ebits
    Bound { c: usize },
    /// Build a combination code from generator files C, C', E
    BuildT43 {
        c: PathBuf,
        cprime: PathBuf,
        e: PathBuf,
        /// Verify distances by enumeration
        #[arg(long)]
        verify: bool,
    },
    /// Seeded search for a splitting of D reaching a target distance
    SearchT43 {
        d: PathBuf,
        split_l: usize,
        e: PathBuf,
        target_d: usize,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
    },
    /// Reproduction suites
    Suite {
        #[command(subcommand)]
        which: SuiteCommand,
    },
    /// Single performance comparison at one p_a
    Compare(CompareArgs),
    /// Emit a comparison table (1, 2, 3 or --custom)
    Table(TableArgs),
}

#[derive(Subcommand)]
enum SuiteCommand {
    /// The known combination-code list with optional distance verification
    Cor44 {
        #[arg(long)]
        verify: bool,
    },
}

#[derive(Args)]
struct CompareArgs {
    /// EA block as n,d
    #[arg(long)]
    ea: String,
    /// Protector block as m,d_b
    #[arg(long)]
    b: String,
    /// Reference block as N,d_ref
    #[arg(long = "ref")]
    reference: String,
    /// Transmit-channel depolarizing rate
    #[arg(long)]
    pa: f64,
}

#[derive(Args)]
struct TableArgs {
    /// Table number (1, 2 or 3)
    number: Option<u8>,
    /// Custom configuration instead of a numbered table
    #[arg(long, requires_all = ["ea", "b", "reference"])]
    custom: bool,
    #[arg(long)]
    ea: Option<String>,
    #[arg(long)]
    b: Option<String>,
    #[arg(long = "ref")]
    reference: Option<String>,
    /// First p_a grid point
    #[arg(long, default_value_t = 0.0100)]
    pa_start: f64,
    /// Grid step
    #[arg(long, default_value_t = perf::TABLE_PA_STEP)]
    pa_step: f64,
    /// Number of grid rows
    #[arg(long, default_value_t = 16)]
    rows: usize,
}

fn parse_block(s: &str) -> Result<Block, Error> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(Error::Parse(format!("expected n,d but got '{s}'")));
    }
    let n = parts[0]
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer in '{s}'")))?;
    let d = parts[1]
        .parse()
        .map_err(|_| Error::Parse(format!("invalid integer in '{s}'")))?;
    Ok(Block::new(n, d))
}

fn load_catalog(path: &Option<PathBuf>) -> Result<CodeCatalog, Error> {
    match path {
        Some(p) => CodeCatalog::load(p),
        None => Ok(CodeCatalog::bundled()),
    }
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn run(cli: &Cli) -> Result<(), Error> {
    let cap = cli.max_enum;
    match &cli.command {
        Command::Dual { codefile } => {
            let spec = CodeSpec::load(codefile)?;
            match spec.kind {
                CodeKind::Additive => {
                    let dual = spec.to_additive()?.trace_dual();
                    let out = CodeSpec::from_additive(&format!("{}_trace_dual", spec.name), &dual);
                    print_json(&serde_json::to_value(&out)?);
                }
                CodeKind::Linear => {
                    let dual = spec.to_linear()?.hermitian_dual();
                    let out = CodeSpec {
                        name: format!("{}_hermitian_dual", spec.name),
                        length: dual.len(),
                        kind: CodeKind::Linear,
                        generators: dual.basis().iter().map(|v| v.to_string()).collect(),
                        claimed: None,
                    };
                    print_json(&serde_json::to_value(&out)?);
                }
            }
        }
        Command::Decompose { codefile } => {
            let code = CodeSpec::load(codefile)?.to_additive()?;
            let (radical, acd) = code.decompose();
            print_json(&json!({
                "l": radical.size_log2(),
                "c": acd.size_log2() / 2,
                "radical": CodeSpec::from_additive("radical", &radical),
                "acd": CodeSpec::from_additive("acd_part", &acd),
            }));
        }
        Command::Distance { codefile, exclude } => {
            let code = CodeSpec::load(codefile)?.to_additive()?;
            let excl = exclude
                .as_ref()
                .map(|p| CodeSpec::load(p)?.to_additive())
                .transpose()?;
            let report = code.min_weight(excl.as_ref(), cap)?;
            print_json(&json!({
                "min_weight": report.min_weight,
                "witness": report.witness.to_string(),
                "enumerated": report.enumerated,
            }));
        }
        Command::Params {
            codefile,
            ea,
            no_distance,
        } => {
            let code = CodeSpec::load(codefile)?.to_additive()?;
            if *ea {
                let p = params::eaqecc_params(&code, !no_distance, cap)?;
                print_json(&json!({ "params": p, "display": p.to_string() }));
            } else {
                let p = params::qecc_params(&code, !no_distance, cap)?;
                print_json(&json!({ "params": p, "display": p.to_string() }));
            }
        }
        Command::Match {
            ea_params,
            qecc_params,
        } => {
            let (n, k, d, c) = parse_inline_params(ea_params)?;
            let c = c.ok_or_else(|| Error::Parse("EA params need a fourth component c".into()))?;
            let ea = EaqeccParams {
                n,
                k,
                d_ea: d,
                c,
                l: n - c - k,
                degenerate: false,
            };
            let (bn, bk, bd, bc) = parse_inline_params(qecc_params)?;
            if bc.is_some() {
                return Err(Error::Parse("protector params take only n,k,d".into()));
            }
            let b = QeccParams {
                n: bn,
                k: bk,
                d: bd,
                degenerate: false,
            };
            let flags = params::match_check(&ea, &b);
            print_json(&serde_json::to_value(flags)?);
        }
        Command::Bound { c } => {
            let b = params::protector_bound(*c)?;
            print_json(&json!({"s": b.s, "m": b.m}));
        }
        Command::BuildT43 {
            c,
            cprime,
            e,
            verify,
        } => {
            let load_rows = |p: &PathBuf| -> Result<Vec<String>, Error> {
                Ok(CodeSpec::load(p)?.generators)
            };
            let input = Theorem43Input {
                g: load_rows(c)?,
                g_prime: load_rows(cprime)?,
                e: load_rows(e)?,
            };
            let build = construction::theorem43_build(&input, *verify, cap)?;
            print_json(&json!({
                "params": build.params,
                "display": build.params.to_string(),
                "d1": build.d1,
                "d2": build.d2,
                "bound_ok": build.bound_ok,
                "code": CodeSpec::from_additive("combination", &build.m_code),
            }));
        }
        Command::SearchT43 {
            d,
            split_l,
            e,
            target_d,
            budget,
        } => {
            let d_code = CodeSpec::load(d)?.to_additive()?;
            let e_code = CodeSpec::load(e)?.to_additive()?;
            let found = construction::search_theorem43(
                &d_code, *split_l, &e_code, *target_d, *budget, cli.seed, cap,
            )?;
            match found {
                None => print_json(&json!({"found": false, "budget": budget, "seed": cli.seed})),
                Some(input) => {
                    let build = construction::theorem43_build(&input, true, cap)?;
                    let fixture = Theorem43Fixture {
                        name: format!(
                            "t43_{}_{}_{}_{}",
                            build.params.n,
                            build.params.k,
                            build.params.d_ea.expect("distance computed"),
                            build.params.c
                        ),
                        seed: cli.seed,
                        budget: *budget,
                        input,
                        target: construction::FixtureTarget {
                            n: build.params.n,
                            k: build.params.k,
                            d: build.params.d_ea.expect("distance computed"),
                            c: build.params.c,
                        },
                    };
                    let mut v = serde_json::to_value(&fixture)?;
                    v["found"] = json!(true);
                    print_json(&v);
                }
            }
        }
        Command::Suite {
            which: SuiteCommand::Cor44 { verify },
        } => {
            let cat = load_catalog(&cli.catalog)?;
            let rows = construction::corollary44_suite(&cat, *verify, cap)?;
            print_json(&serde_json::to_value(&rows)?);
        }
        Command::Compare(args) => {
            let ea = parse_block(&args.ea)?;
            let b = parse_block(&args.b)?;
            let reference = parse_block(&args.reference)?;
            let rows = perf::comparison_table(ea, b, reference, &[args.pa], cli.tol)?;
            match cli.format {
                Format::Csv => print!("{}", perf::rows_to_csv(&rows)),
                Format::Json => print_json(&serde_json::to_value(&rows[0])?),
            }
        }
        Command::Table(args) => {
            let cfg = if args.custom {
                perf::TableConfig {
                    ea: parse_block(args.ea.as_deref().expect("required by clap"))?,
                    b: parse_block(args.b.as_deref().expect("required by clap"))?,
                    reference: parse_block(args.reference.as_deref().expect("required by clap"))?,
                    grid: (0..args.rows)
                        .map(|j| args.pa_start + args.pa_step * j as f64)
                        .collect(),
                }
            } else {
                match args.number {
                    Some(1) => perf::table1_config(),
                    Some(2) => perf::table2_config(),
                    Some(3) => perf::table3_config(),
                    _ => {
                        return Err(Error::InvalidArgument(
                            "table number must be 1, 2 or 3 (or use --custom)".into(),
                        ))
                    }
                }
            };
            let rows = perf::run_table(&cfg, cli.tol)?;
            match cli.format {
                Format::Csv => print!("{}", perf::rows_to_csv(&rows)),
                Format::Json => print_json(&serde_json::to_value(&rows)?),
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ Error::EnumerationCap { .. }) => {
            eprintln!("refused: {e}");
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
