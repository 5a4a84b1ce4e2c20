use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use upfam::carriers::NamedCarrier;
use upfam::harness::{theorem_spec, verify, verify_all, HarnessConfig, TheoremReport};
use upfam::order::join_table;
use upfam::{
    build_extension, enumerate_space, hasse_diagram, named_lambda4_elements, Caps, CayleyTable, Error,
    ExtensionSemigroup, LatticeExtension, ProductKernel, SpaceKind, UpFamily,
};

#[derive(Parser)]
#[command(name = "upfam", version, about = "Semigroups of upfamilies on finite semigroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a space of upfamilies.
    Enumerate {
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        space: String,
        #[arg(long)]
        count_only: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test an algebraic property of an extension semigroup.
    Check {
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        space: String,
        /// band, commutative, linear, semilattice, lattice or clifford:n,m
        #[arg(long)]
        property: String,
    },
    /// Multiply two upfamilies (file paths or inline JSON lists of minimal sets).
    Product {
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Run theorem checks.
    Verify {
        /// Theorem id or `all`.
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        max_order: Option<usize>,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Hasse diagram of an extension that is a semilattice.
    Hasse {
        #[arg(long)]
        carrier: String,
        #[arg(long)]
        space: String,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List named carriers and named elements of λ(4).
    Catalog,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    /// Computation succeeded with a negative answer.
    Negative(String),
    Config(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Config(e.to_string())
    }
}

type Outcome = Result<bool, Failure>;

fn config<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Config(e.to_string())
}

fn load_carrier(arg: &str) -> Result<CayleyTable, Failure> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path).map_err(config)?;
        return serde_json::from_str(&text).map_err(|e| config(format!("{arg}: {e}")));
    }
    let carrier: NamedCarrier = arg.parse()?;
    Ok(carrier.table()?)
}

fn load_family(order: usize, arg: &str) -> Result<UpFamily, Failure> {
    let path = Path::new(arg);
    let text = if path.is_file() {
        fs::read_to_string(path).map_err(config)?
    } else {
        arg.to_string()
    };
    Ok(UpFamily::from_json(order, text.trim())?)
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => fs::write(p, text).map_err(config),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fam(e: &ExtensionSemigroup, i: usize) -> Value {
    json!(e.family(i).index_lists())
}

fn cmd_enumerate(caps: &Caps, carrier: &str, space: &str, count_only: bool, out: &Option<PathBuf>) -> Outcome {
    let t = load_carrier(carrier)?;
    let kind: SpaceKind = space.parse()?;
    let fams = enumerate_space(kind, t.order(), caps)?;
    let text = if count_only {
        format!("{}\n", fams.len())
    } else {
        fams.iter().map(|f| f.to_json() + "\n").collect()
    };
    emit(out, &text)?;
    Ok(true)
}

fn parse_clifford(p: &str) -> Option<(usize, usize)> {
    let (n, m) = p.strip_prefix("clifford:")?.split_once(',')?;
    Some((n.trim().parse().ok()?, m.trim().parse().ok()?))
}

fn cmd_check(caps: &Caps, carrier: &str, space: &str, property: &str) -> Outcome {
    let known = ["band", "commutative", "linear", "semilattice", "lattice"];
    let clifford = parse_clifford(property);
    if !known.contains(&property) && clifford.is_none() {
        return Err(Failure::Config(format!("unknown property `{property}`")));
    }
    let t = load_carrier(carrier)?;
    let kind: SpaceKind = space.parse()?;
    let (holds, witness) = if property == "lattice" {
        let join = join_table(&t)?;
        let l = LatticeExtension::new(&t, &join, kind, caps)?;
        let a = l.analyze();
        let w = a.witness.map(|(law, x, y)| {
            json!({"law": law, "pair": [fam(&l.meet, x), fam(&l.meet, y)]})
        });
        (a.is_lattice, w)
    } else {
        let e = build_extension(&t, kind, caps)?;
        let pair = |(i, j): (usize, usize)| json!([fam(&e, i), fam(&e, j)]);
        let w = match property {
            "band" => e.band_witness().map(|i| json!([fam(&e, i)])),
            "commutative" => e.commutativity_witness().map(pair),
            "linear" => e.linearity_witness().map(pair),
            "semilattice" => e
                .band_witness()
                .map(|i| json!([fam(&e, i)]))
                .or_else(|| e.commutativity_witness().map(pair)),
            _ => {
                let (n, m) = clifford.expect("validated above");
                e.nm_clifford_witness(n, m).map(|i| json!([fam(&e, i)]))
            }
        };
        (w.is_none(), w)
    };
    let report = json!({
        "carrier": carrier,
        "space": kind,
        "property": property,
        "holds": holds,
        "witness": witness,
    });
    println!("{report}");
    Ok(holds)
}

fn cmd_product(carrier: &str, a: &str, b: &str) -> Outcome {
    let t = load_carrier(carrier)?;
    let a = load_family(t.order(), a)?;
    let b = load_family(t.order(), b)?;
    let p = upfam::product(&a, &b, &t)?;
    debug_assert_eq!(Ok(&p), ProductKernel::new(&t).product(&a, &b).as_ref());
    println!("{}", p.to_json());
    Ok(true)
}

fn summary(r: &TheoremReport) {
    eprintln!(
        "{:<18} {:<14} instances={:<5} {} ms",
        r.id,
        if r.verified() { "verified" } else { "COUNTEREXAMPLE" },
        r.instances_checked,
        r.wall_ms
    );
}

fn cmd_verify(caps: Caps, theorem: &str, max_order: Option<usize>, report: &Option<PathBuf>) -> Outcome {
    let cfg = HarnessConfig { caps, max_order };
    let (ok, value) = if theorem == "all" {
        let agg = verify_all(&cfg)?;
        agg.reports.iter().for_each(summary);
        for o in &agg.out_of_scope {
            eprintln!("{:<18} out of scope: {}", o.id, o.reason);
        }
        (agg.success, serde_json::to_value(&agg).map_err(config)?)
    } else {
        let spec = theorem_spec(theorem)?;
        let r = verify(&spec, &cfg)?;
        summary(&r);
        (r.verified(), serde_json::to_value(&r).map_err(config)?)
    };
    let text = serde_json::to_string_pretty(&value).map_err(config)? + "\n";
    emit(report, &text)?;
    Ok(ok)
}

fn cmd_hasse(caps: &Caps, carrier: &str, space: &str, format: Format, out: &Option<PathBuf>) -> Outcome {
    let t = load_carrier(carrier)?;
    let kind: SpaceKind = space.parse()?;
    let e = build_extension(&t, kind, caps)?;
    let d = match hasse_diagram(&e) {
        Ok(d) => d,
        Err(Error::NotSemilattice) => {
            return Err(Failure::Negative(format!(
                "{kind}({carrier}) is not a semilattice, so it has no Hasse diagram"
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let text = match format {
        Format::Dot => d.to_dot(),
        Format::Json => serde_json::to_string_pretty(&d.to_json()).map_err(config)? + "\n",
    };
    emit(out, &text)?;
    Ok(true)
}

fn cmd_catalog() -> Outcome {
    println!("carriers:");
    for (name, what) in NamedCarrier::catalog() {
        println!("  {name:<16} {what}");
    }
    println!("lambda(4) over chain:4:");
    for (name, f) in named_lambda4_elements() {
        println!("  {:<16} {}", name.to_string(), f.to_json());
    }
    Ok(true)
}

fn run(cli: Cli) -> Outcome {
    let caps = Caps::from_env()?;
    match cli.command {
        Command::Enumerate {
            carrier,
            space,
            count_only,
            out,
        } => cmd_enumerate(&caps, &carrier, &space, count_only, &out),
        Command::Check {
            carrier,
            space,
            property,
        } => cmd_check(&caps, &carrier, &space, &property),
        Command::Product { carrier, a, b } => cmd_product(&carrier, &a, &b),
        Command::Verify {
            theorem,
            max_order,
            report,
        } => cmd_verify(caps, &theorem, max_order, &report),
        Command::Hasse {
            carrier,
            space,
            format,
            out,
        } => cmd_hasse(&caps, &carrier, &space, format, &out),
        Command::Catalog => cmd_catalog(),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Negative(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
