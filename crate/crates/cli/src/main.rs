use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use su2cert::acceptance;
use su2cert::certifier::{certify, enumerate_certified, Certificate, Verdict};
use su2cert::cover_arith::{cyclic_reps, fox_branched_order, nondegeneracy_report};
use su2cert::knot_invariants::{
    binary_dihedral_count, determinant, enumerate_lspace_alexander, torus_alexander,
    TorusKnotParams,
};
use su2cert::lens_simple::simple_knot_invariants;
use su2cert::su2::{
    abelianization_smith, lens_presentation, search_irreducible, surgery_presentation,
    torus_knot_group, GroupPresentation, RepSearchResult, DEFAULT_EPS, DEFAULT_RESTARTS,
    DEFAULT_TOL, NEGATIVE_RESULT_DISCLAIMER,
};
use su2cert::{Error, LaurentPoly, Slope};

mod config;

use config::{Config, OutputMode};

#[derive(Parser, Debug)]
#[command(
    name = "su2cert",
    version,
    about = "Knot and lens-space invariants, SU(2) surgery certificates, and a numerical representation search"
)]
struct Cli {
    /// Emit JSON instead of human-readable text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Certify a surgery slope p/q (exit 0 certified, 2 open, 3 fails in general).
    Certify { slope: String },
    /// Certify every reduced p/q in [from, to) with p <= max-p.
    Enumerate {
        #[arg(long)]
        max_p: u64,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Invariants of the simple knot S(p, 2q, 10q) in L(p, 2q).
    SimpleKnot { slope: String },
    /// Alexander polynomials of standard knots.
    Alexander {
        #[command(subcommand)]
        family: AlexanderFamily,
    },
    /// All instanton L-space Alexander polynomials of a given genus.
    LspaceAlex { genus: u64 },
    /// Knot determinant |Δ(-1)|.
    Det {
        #[arg(allow_hyphen_values = true)]
        poly: String,
    },
    /// Order of H_1 of the n-fold cyclic branched cover (0 means infinite).
    Fox {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        n: u64,
    },
    /// Check that no Φ_d with d >= 2, d | 2p^e divides Δ.
    Nondegenerate {
        #[arg(allow_hyphen_values = true)]
        poly: String,
        #[arg(long)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        e: u32,
    },
    /// Angles of the representations with ρ(μ)^h = i.
    CyclicReps { h: u64 },
    /// Print a group presentation in the text format read by su2-search.
    Presentation {
        #[command(subcommand)]
        kind: PresentationKind,
    },
    /// Search for an irreducible SU(2) representation of a presented group.
    Su2Search(SearchArgs),
    /// Run the acceptance checks and print a pass/fail table.
    Selftest,
}

#[derive(Subcommand, Debug)]
enum AlexanderFamily {
    /// Torus knot T(a, b).
    Torus { a: u64, b: u64 },
}

#[derive(Subcommand, Debug)]
enum PresentationKind {
    /// p/q-surgery on the torus knot T(a, b), or its complement with --unfilled.
    Torus {
        a: u64,
        b: u64,
        #[arg(long, default_value = "0/1", allow_hyphen_values = true)]
        slope: String,
        #[arg(long)]
        unfilled: bool,
    },
    /// ⟨x | x^p⟩.
    Lens { p: u64 },
}

#[derive(Args, Debug)]
struct SearchArgs {
    #[arg(long)]
    file: PathBuf,
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_TOL)]
    tol: f64,
    #[arg(long, default_value_t = DEFAULT_EPS)]
    eps: f64,
}

/// A failure worth reporting to the user; always exit code 1.
struct Failure(String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(format!("error: {e}"))
    }
}

type Outcome = Result<ExitCode, Failure>;

/// Parse errors get the offending input echoed with a caret.
fn parse_input<T: std::str::FromStr<Err = Error>>(what: &str, input: &str) -> Result<T, Failure> {
    input.parse().map_err(|e| match e {
        Error::Parse { pos, .. } => Failure(format!(
            "error: invalid {what}: {e}\n  {input}\n  {}^",
            " ".repeat(input[..pos.min(input.len())].chars().count())
        )),
        other => Failure(format!("error: invalid {what}: {other}")),
    })
}

fn print_json(v: &impl serde::Serialize) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let output = if cli.json {
        OutputMode::Json
    } else {
        OutputMode::Human
    };
    match dispatch(cli.command, output) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
    }
}

fn dispatch(command: Command, output: OutputMode) -> Outcome {
    let json = output == OutputMode::Json;
    match command {
        Command::Certify { slope } => {
            let cert = certify(parse_input("slope", &slope)?);
            if json {
                print_json(&cert);
            } else {
                print_certificate(&cert);
            }
            Ok(ExitCode::from(cert.verdict.exit_code() as u8))
        }
        Command::Enumerate { max_p, from, to } => {
            let lo: Slope = parse_input("slope", &from)?;
            let hi: Slope = parse_input("slope", &to)?;
            let e = enumerate_certified(max_p, lo, hi)?;
            if json {
                print_json(&e);
            } else {
                for c in &e.certificates {
                    let rules: Vec<String> = c.rules().map(|r| r.to_string()).collect();
                    let line = format!(
                        "{:>9}  {:<16} {}",
                        c.slope.to_string(),
                        c.verdict.to_string(),
                        rules.join(" ")
                    );
                    println!("{}", line.trim_end());
                }
                let counts: Vec<String> =
                    e.counts.iter().map(|(v, n)| format!("{v}: {n}")).collect();
                println!("total {}; {}", e.certificates.len(), counts.join(", "));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::SimpleKnot { slope } => {
            let inv = simple_knot_invariants(parse_input("slope", &slope)?)?;
            if json {
                print_json(&inv);
            } else {
                println!(
                    "knot: S({}, {}, {}) in L({}, {})",
                    inv.p,
                    2 * inv.q,
                    10 * inv.q,
                    inv.p,
                    inv.lens.b()
                );
                println!("d: {}", inv.d);
                println!("genus: {}", inv.genus);
                println!("alexander: {}", inv.alexander);
                println!("branched double cover |H_1|: {}", inv.cover_order);
                println!("graded euler characteristic: {}", inv.euler.to_laurent());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Alexander {
            family: AlexanderFamily::Torus { a, b },
        } => {
            let delta = torus_alexander(&TorusKnotParams::new(a, b)?);
            if json {
                print_json(&json!({ "knot": format!("T({a},{b})"), "alexander": delta }));
            } else {
                println!("{delta}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::LspaceAlex { genus } => {
            let mut rows = Vec::new();
            for delta in enumerate_lspace_alexander(genus)? {
                let det = determinant(&delta)?;
                let count = binary_dihedral_count(&det)?;
                rows.push((delta, det, count));
            }
            if json {
                let v: Vec<Value> = rows
                    .iter()
                    .map(|(d, det, c)| {
                        json!({ "alexander": d, "determinant": det.to_string(), "binary_dihedral_count": c.to_string() })
                    })
                    .collect();
                print_json(&v);
            } else {
                for (d, det, c) in rows {
                    println!("{d}    det {det}, binary dihedral {c}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Det { poly } => {
            let delta: LaurentPoly = parse_input("polynomial", &poly)?;
            let det = determinant(&delta)?;
            if json {
                print_json(&json!({ "alexander": delta, "determinant": det.to_string() }));
            } else {
                println!("{det}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Fox { poly, n } => {
            let delta: LaurentPoly = parse_input("polynomial", &poly)?;
            let order = fox_branched_order(&delta, n)?;
            if json {
                print_json(
                    &json!({ "alexander": delta, "n": n, "order": order.to_string(), "infinite": order == 0u32.into() }),
                );
            } else if order == 0u32.into() {
                println!("0 (H_1 is infinite)");
            } else {
                println!("{order}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Nondegenerate { poly, p, e } => {
            let delta: LaurentPoly = parse_input("polynomial", &poly)?;
            let report = nondegeneracy_report(&delta, p, e)?;
            if json {
                print_json(&report);
            } else {
                println!("nondegenerate: {}", report.nondegenerate);
                println!("n = {}", report.n);
                let ds: Vec<String> = report
                    .dividing_cyclotomics
                    .iter()
                    .map(u64::to_string)
                    .collect();
                println!("dividing cyclotomics: [{}]", ds.join(", "));
                println!("branched cover order: {}", report.fox_order);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::CyclicReps { h } => {
            let set = cyclic_reps(h)?;
            if json {
                let angles: Vec<Value> = set
                    .angles
                    .iter()
                    .map(|a| json!({ "num": a.num, "den": a.den, "exact": a.to_string(), "radians": a.radians() }))
                    .collect();
                print_json(&json!({ "order": set.order, "count": set.len(), "angles": angles }));
            } else {
                for (m, a) in set.angles.iter().enumerate() {
                    println!("{m:>4}  {:<12} {:.15}", a.to_string(), a.radians());
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Presentation { kind } => {
            let pres = match kind {
                PresentationKind::Torus {
                    a,
                    b,
                    unfilled: true,
                    ..
                } => torus_knot_group(a, b)?,
                PresentationKind::Torus { a, b, slope, .. } => {
                    surgery_presentation(a, b, parse_input("slope", &slope)?)?
                }
                PresentationKind::Lens { p } => lens_presentation(p)?,
            };
            let ab = abelianization_smith(&pres);
            if json {
                print_json(&json!({
                    "generator_count": pres.generator_count,
                    "relators": pres.relators,
                    "abelianization": ab,
                }));
            } else {
                println!("# abelianization {ab:?}");
                print!("{pres}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Su2Search(args) => {
            let config = Config::new(args.tol, args.eps, args.restarts, args.seed, output)
                .map_err(Failure)?;
            let text = std::fs::read_to_string(&args.file)
                .map_err(|e| Failure(format!("error: cannot read {}: {e}", args.file.display())))?;
            let pres: GroupPresentation = text
                .parse()
                .map_err(|e| Failure(format!("error: {}: {e}", args.file.display())))?;
            let r =
                search_irreducible(&pres, config.restarts, config.seed, config.tol, config.eps)?;
            print_search(&r, &config);
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest => {
            let results = acceptance::selftest();
            if json {
                print_json(&results);
            } else {
                for c in &results {
                    println!("{}", c.line());
                }
            }
            let failed = results.iter().filter(|c| !c.passed).count();
            if !json {
                println!("{} passed, {failed} failed", results.len() - failed);
            }
            Ok(if failed == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
    }
}

fn print_certificate(c: &Certificate) {
    println!("slope: {}", c.slope);
    println!("verdict: {}", c.verdict);
    for r in &c.chain {
        println!("  {}: {}", r.rule, r.citation);
        for (k, v) in &r.witnesses {
            println!("      {k} = {v}");
        }
    }
    if c.verdict != Verdict::Certified && !c.witnesses.is_empty() {
        println!("witnesses:");
        for (k, v) in &c.witnesses {
            println!("  {k} = {v}");
        }
    }
}

fn print_search(r: &RepSearchResult, config: &Config) {
    if config.output == OutputMode::Json {
        let mut v = serde_json::to_value(r).expect("serializable");
        v["image_class_is_heuristic"] = json!(true);
        if !r.found {
            v["disclaimer"] = json!(NEGATIVE_RESULT_DISCLAIMER);
        }
        print_json(&v);
        return;
    }
    println!("found: {}", r.found);
    println!("defect: {:e}", r.defect);
    println!("irreducibility margin: {:.6}", r.irreducibility_margin);
    println!("restarts used: {} (seed {})", r.restarts_used, r.seed);
    if let Some(class) = r.image_class {
        println!(
            "image class (heuristic): {}",
            serde_json::to_value(class)
                .expect("enum")
                .as_str()
                .expect("string")
        );
    }
    if let Some(a) = &r.assignment {
        for (k, q) in a.images.iter().enumerate() {
            println!(
                "  x{} = {:+.12} {:+.12}i {:+.12}j {:+.12}k",
                k + 1,
                q.w,
                q.x,
                q.y,
                q.z
            );
        }
    }
    if !r.found {
        println!("note: {NEGATIVE_RESULT_DISCLAIMER}");
    }
}
