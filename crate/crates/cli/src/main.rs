use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use centra::centralizer::{centralizer_dim_formulas, zg_basis, zw_basis, zw_basis_recursive, zw_determinant};
use centra::forms::{gj_form, weyr_form, weyr_permutation};
use centra::io::{peek_field, read_matrix, write_basis_json, write_basis_text, write_matrix_json, write_matrix_text};
use centra::oracle::{commutant_basis, commutant_dim, DEFAULT_MAX_N};
use centra::verify::verify_spec;
use centra::{AlgebraError, CanonicalSpec, Field, FieldSelector, Kind, Mat, Poly};

#[derive(Parser)]
#[command(name = "centra", version, about = "Generalized Jordan and Weyr forms and their centralizers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the generalized Jordan form.
    Jordan(SpecArgs),
    /// Print the generalized Weyr form.
    Weyr(SpecArgs),
    /// Print the Weyr block ordering of the Jordan partial chains.
    Permutation(SpecArgs),
    /// Stream a centralizer basis preceded by its layout header.
    Centralizer {
        #[command(flatten)]
        spec: SpecArgs,
        /// Which canonical form to centralize.
        #[arg(long, value_enum, default_value_t = Form::Jordan)]
        form: Form,
        /// For the Weyr form, use the level recursion instead of conjugation.
        #[arg(long)]
        recursive: bool,
    },
    /// Print both closed-form centralizer dimensions.
    Dim {
        #[command(flatten)]
        spec: SpecArgs,
        /// Also compute the dimension by brute force.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Determinant of a Weyr centralizer element, by levels and directly.
    Det {
        #[command(flatten)]
        spec: SpecArgs,
        /// Matrix file (text or JSON).
        #[arg(long)]
        input: PathBuf,
    },
    /// Run the invariant suite for one spec.
    Verify {
        #[command(flatten)]
        spec: SpecArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random centralizer elements to test.
        #[arg(long, default_value_t = 20)]
        samples: u64,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Commutant basis of an arbitrary matrix.
    Oracle {
        /// Matrix file (text or JSON); its header names the field.
        #[arg(long)]
        input: PathBuf,
        /// Print only the dimension.
        #[arg(long)]
        dim_only: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(Args)]
struct SpecArgs {
    /// gf:<p>, q, or gft:<p> for GF(p)(t).
    #[arg(long, default_value = "gf:2")]
    field: String,
    /// Monic irreducible polynomial in x, e.g. "x^2+1".
    #[arg(long)]
    poly: String,
    /// Segre characteristic, nonincreasing, comma separated.
    #[arg(long, value_delimiter = ',', required = true)]
    alpha: Vec<usize>,
    #[arg(long, default_value = "e")]
    kind: String,
    /// Accept the polynomial as irreducible over Q or GF(p)(t).
    #[arg(long)]
    assume_irreducible: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct CapArgs {
    /// Largest matrix size handed to the oracle (default 40, or CENTRA_MAX_N).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Form {
    Jordan,
    Weyr,
}

enum Failure {
    Usage(String),
    Verification(String),
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<String, Failure>;

fn max_n(cap: &CapArgs) -> Result<usize, Failure> {
    if let Some(n) = cap.max_n {
        return Ok(n);
    }
    match std::env::var("CENTRA_MAX_N") {
        Ok(v) => v.trim().parse().map_err(|_| Failure::Usage(format!("bad CENTRA_MAX_N `{v}`"))),
        Err(_) => Ok(DEFAULT_MAX_N),
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

macro_rules! with_field {
    ($sel:expr, $f:ident => $body:expr) => {
        match $sel {
            FieldSelector::Prime($f) => $body,
            FieldSelector::Rationals => {
                let $f = centra::Rationals;
                $body
            }
            FieldSelector::RationalFunctions($f) => $body,
        }
    };
}

fn build_spec<F: Field>(field: F, args: &SpecArgs) -> Result<CanonicalSpec<F>, Failure> {
    let kind: Kind = args.kind.parse()?;
    let p = Poly::parse(field, &args.poly)?;
    Ok(CanonicalSpec::new(p, &args.alpha, kind, args.assume_irreducible)?)
}

fn emit_matrix<F: Field>(m: &Mat<F>, json: bool) -> String {
    if json {
        write_matrix_json(m) + "\n"
    } else {
        write_matrix_text(m)
    }
}

fn run(command: &Command) -> Outcome {
    match command {
        Command::Oracle { input, dim_only, json, cap } => {
            let text = read_file(input)?;
            let cap = max_n(cap)?;
            with_field!(peek_field(&text)?, f => oracle(&f, &text, *dim_only, *json, cap))
        }
        Command::Jordan(spec)
        | Command::Weyr(spec)
        | Command::Permutation(spec)
        | Command::Centralizer { spec, .. }
        | Command::Dim { spec, .. }
        | Command::Det { spec, .. }
        | Command::Verify { spec, .. } => {
            let sel: FieldSelector = spec.field.parse()?;
            with_field!(sel, f => run_spec(f, command, spec))
        }
    }
}

fn run_spec<F: Field>(field: F, command: &Command, args: &SpecArgs) -> Outcome {
    let spec = build_spec(field, args)?;
    let json = args.json;
    match command {
        Command::Jordan(_) => Ok(emit_matrix(&gj_form(&spec), json)),
        Command::Weyr(_) => Ok(emit_matrix(&weyr_form(&spec), json)),
        Command::Permutation(_) => {
            let order: Vec<usize> = weyr_permutation(&spec).order().iter().map(|k| k + 1).collect();
            let mut groups = Vec::new();
            let mut rest = order.as_slice();
            for &t in spec.segre().tau() {
                let (head, tail) = rest.split_at(t);
                groups.push(head.to_vec());
                rest = tail;
            }
            if json {
                return Ok(json!({ "order": order, "groups": groups }).to_string() + "\n");
            }
            let parts: Vec<String> =
                groups.iter().map(|g| g.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect();
            Ok(parts.join(" | ") + "\n")
        }
        Command::Centralizer { form, recursive, .. } => {
            let basis = match (form, recursive) {
                (Form::Jordan, false) => zg_basis(&spec)?,
                (Form::Weyr, false) => zw_basis(&spec)?,
                (Form::Weyr, true) => zw_basis_recursive(&spec)?,
                (Form::Jordan, true) => return Err(Failure::Usage("--recursive needs --form weyr".into())),
            };
            Ok(if json { write_basis_json(&basis) + "\n" } else { write_basis_text(&basis) })
        }
        Command::Dim { oracle, cap, .. } => {
            let (a, b) = centralizer_dim_formulas(spec.alpha(), spec.s())?;
            let measured = if *oracle { Some(commutant_dim(&gj_form(&spec), max_n(cap)?)?) } else { None };
            let out = if json {
                let mut doc = json!({ "segre": a, "weyr": b });
                if let Some(d) = measured {
                    doc["oracle"] = json!(d);
                }
                doc.to_string() + "\n"
            } else {
                let mut out = format!("{a}\n{b}\n");
                if let Some(d) = measured {
                    out.push_str(&format!("{d}\n"));
                }
                out
            };
            if a != b || measured.is_some_and(|d| d != a) {
                return Err(Failure::Verification(format!("{out}dimension mismatch")));
            }
            Ok(out)
        }
        Command::Det { input, .. } => {
            let k = read_matrix(spec.field(), &read_file(input)?)?;
            let product = zw_determinant(&k, &spec)?;
            let direct = k.determinant()?;
            let f = spec.field();
            let out = if json {
                json!({ "product": f.format_elem(&product), "direct": f.format_elem(&direct) }).to_string() + "\n"
            } else {
                format!("product {}\ndirect {}\n", f.format_elem(&product), f.format_elem(&direct))
            };
            if product != direct {
                return Err(Failure::Verification(format!("{out}determinant mismatch")));
            }
            Ok(out)
        }
        Command::Verify { seed, samples, cap, .. } => {
            let checks = verify_spec(&spec, *seed, *samples, max_n(cap)?)?;
            let first_failure = checks.iter().find(|c| c.passed == Some(false));
            let out = if json {
                let items: Vec<_> = checks
                    .iter()
                    .map(|c| json!({ "name": c.name, "status": c.status(), "detail": c.detail }))
                    .collect();
                json!({ "seed": seed, "passed": first_failure.is_none(), "checks": items }).to_string() + "\n"
            } else {
                let mut out = format!("seed {seed}\n");
                for c in &checks {
                    out.push_str(&format!("{} {} {}\n", c.status(), c.name, c.detail));
                }
                out
            };
            match first_failure {
                Some(c) => Err(Failure::Verification(format!("{out}first failure: {} ({})", c.name, c.detail))),
                None => Ok(out),
            }
        }
        Command::Oracle { .. } => unreachable!("dispatched separately"),
    }
}

fn oracle<F: Field>(field: &F, text: &str, dim_only: bool, json: bool, cap: usize) -> Outcome {
    let a = read_matrix(field, text)?;
    if dim_only {
        let d = commutant_dim(&a, cap)?;
        return Ok(if json { json!({ "dim": d }).to_string() + "\n" } else { format!("{d}\n") });
    }
    let basis = commutant_basis(&a, cap)?;
    if json {
        let mats: Vec<serde_json::Value> =
            basis.iter().map(|m| serde_json::from_str(&write_matrix_json(m)).expect("valid JSON")).collect();
        return Ok(json!({ "dim": basis.len(), "basis": mats }).to_string() + "\n");
    }
    let mut out = format!("dim={}\n", basis.len());
    for m in &basis {
        out.push_str(&write_matrix_text(m));
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(report)) => {
            println!("{report}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
