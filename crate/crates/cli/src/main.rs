//! `nccum`: command-line front end for the nccumulants library.
//!
//! Exit codes: 0 success or verified, 1 verification failure (a
//! counterexample is printed as JSON), 2 usage or input error.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nccumulants::cumulants::{
    boolean_cumulants, cc_cumulants, cfree_cumulants, cfree_explicit, cfree_from_boolean_explicit,
    chi_minus_phi_type_b_opp, free_cumulants, free_from_boolean_explicit, infinitesimal_cumulants,
    infinitesimal_moments, infinitesimal_moments_type_b, moments_from_boolean, moments_from_cc,
    moments_from_cfree, moments_from_free,
};
use nccumulants::delta_star::{
    psi_delta, psi_k, verify_lemma_67_exhaustive, verify_single_variable_psi, verify_theorem_14,
    verify_theorem_17,
};
use nccumulants::functionals::{format_word, random_family, random_tracial, DeltaTensor, Kind, MultilinearFamily};
use nccumulants::nc::{enumerate_nc, kreweras, moebius_to_one, NcPartition};
use nccumulants::products::{
    boxplus, boxplus_b, boxplus_c, cfree_product, free_product, infinitesimal_product, verify_product_restrictions,
    verify_theorem_12, verify_theorem_13,
};
use nccumulants::rational::format_rational;
use nccumulants::selftest::{self, sub_seed, DEFAULT_SEED};
use nccumulants::typeb::{enumerate_signed, Flavor};
use nccumulants::verification::Verification;

#[derive(Parser)]
#[command(name = "nccum", version, about = "Noncrossing partitions, cumulants and infinitesimal distributions")]
struct Cli {
    /// Machine-readable JSON output instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Noncrossing partitions of [n].
    #[command(subcommand)]
    Nc(NcCommand),
    /// Type B and B-opp signed noncrossing partitions.
    #[command(subcommand)]
    Typeb(TypebCommand),
    /// Moment/cumulant transforms on functional files.
    Transform(TransformArgs),
    /// The map from a distribution nu to an infinitesimal part.
    Psi(PsiArgs),
    /// Free, c-free or infinitesimal products (letters are concatenated).
    Product(CombineArgs),
    /// Additive convolutions (cumulants add).
    Convolve(CombineArgs),
    /// Check one identity on seeded random inputs.
    Verify(VerifyArgs),
    /// Run the whole acceptance suite.
    Selftest(SelftestArgs),
}

#[derive(Subcommand)]
enum NcCommand {
    /// List NC(n) in canonical order.
    Enumerate {
        #[arg(long)]
        n: usize,
    },
    /// Kreweras complement.
    Kreweras {
        /// Partition in brace notation, e.g. "{1,4}{2,3}".
        #[arg(long)]
        partition: String,
    },
    /// Moebius function mu(pi, 1_n).
    Moebius {
        #[arg(long)]
        partition: String,
    },
}

#[derive(Subcommand)]
enum TypebCommand {
    Enumerate {
        #[arg(long)]
        n: usize,
        /// `b` or `b-opp`.
        #[arg(long, default_value = "b")]
        flavor: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Brand {
    Free,
    Boolean,
    Cfree,
    Cc,
    Infinitesimal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    ToCumulants,
    ToMoments,
}

#[derive(Args)]
struct TransformArgs {
    #[arg(long, value_enum)]
    brand: Brand,
    #[arg(long, value_enum)]
    direction: Direction,
    /// One file for free/Boolean; two (phi first) for the other brands.
    #[arg(long, num_args = 1..=2, required = true)]
    input: Vec<PathBuf>,
}

#[derive(Args)]
struct PsiArgs {
    /// Distribution nu, degree N + 1; the result has degree N.
    #[arg(long)]
    input: PathBuf,
    /// Expected number of letters (checked against the file).
    #[arg(long)]
    k: Option<usize>,
    /// Tensor file; without it the diagonal tensor is used.
    #[arg(long)]
    delta: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum CombineKind {
    Free,
    Cfree,
    Infinitesimal,
}

#[derive(Args)]
struct CombineArgs {
    #[arg(long, value_enum)]
    kind: CombineKind,
    /// free: mu1 mu2; cfree: mu1 nu1 mu2 nu2; infinitesimal: mu1 mu1' mu2 mu2'.
    #[arg(long, num_args = 2..=4, required = true)]
    input: Vec<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    /// Convolutions commute with the map to the infinitesimal part.
    #[value(name = "12")]
    T12,
    /// Products commute with the map to the infinitesimal part.
    #[value(name = "13")]
    T13,
    /// Infinitesimal cumulants of (mu, Psi(nu)) as cyclic c-free sums.
    #[value(name = "14")]
    T14,
    /// Infinitesimal cumulants of (phi, Delta*(beta_chi)) equal Delta* of c-free cumulants.
    #[value(name = "17")]
    T17,
    /// Kreweras anti-isomorphism on the << 1_n ideal, with cut/attach.
    Lemma210,
    /// Twisted Boolean functional identity over every rho << 1_(n+1).
    Lemma67,
    /// Explicit c-free formula and the Boolean-side expressions.
    Prop41,
    /// Alternative c-free cumulants equal c-free minus free cumulants.
    Prop54,
    /// phi' as a sum over type B partitions.
    Eq5a,
    /// chi - phi as a sum over B-opp partitions.
    Eq55a,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    theorem: Identity,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[arg(long, default_value_t = 2)]
    k: usize,
    /// Letters of the second factor (product identity only).
    #[arg(long, default_value_t = 1)]
    l: usize,
    /// Output degree; random inputs are drawn at N + 1 where needed. For
    /// lemma210 and lemma67 this is n.
    #[arg(long = "N", default_value_t = 4)]
    degree: usize,
}

#[derive(Args)]
struct SelftestArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
}

/// An input or usage problem: exit code 2.
struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

type CliResult = Result<ExitCode, Usage>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> CliResult {
    let json = cli.json;
    match cli.command {
        Command::Nc(c) => nc(c, json),
        Command::Typeb(TypebCommand::Enumerate { n, flavor }) => {
            let flavor: Flavor = flavor.parse()?;
            let all = enumerate_signed(n, flavor)?;
            if json {
                let v: Vec<Value> = all.iter().map(|p| json!(p.blocks())).collect();
                println!("{}", Value::Array(v));
            } else {
                for p in &all {
                    println!("{p}");
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform(a) => transform(a, json),
        Command::Psi(a) => {
            let nu = read_family(&a.input)?;
            if let Some(k) = a.k {
                if k != nu.k() {
                    return Err(Usage(format!("--k {k} but the input has k = {}", nu.k())));
                }
            }
            let out = match a.delta {
                Some(path) => psi_delta(&DeltaTensor::from_json(&read(&path)?)?, &nu)?,
                None => psi_k(&nu)?,
            };
            print_families(&[("mu'", &out)], json);
            Ok(ExitCode::SUCCESS)
        }
        Command::Product(a) => combine(a, json, true),
        Command::Convolve(a) => combine(a, json, false),
        Command::Verify(a) => verify(a, json),
        Command::Selftest(a) => {
            let reports = selftest::run_all(a.seed);
            if json {
                println!("{}", json!({ "seed": a.seed, "criteria": reports }));
            } else {
                println!("seed {}", a.seed);
                for r in &reports {
                    println!("{}", r.line());
                }
            }
            Ok(exit_for(reports.iter().all(|r| r.ok)))
        }
    }
}

fn exit_for(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn nc(c: NcCommand, json: bool) -> CliResult {
    match c {
        NcCommand::Enumerate { n } => {
            let all = enumerate_nc(n)?;
            if json {
                let v: Vec<Value> = all.iter().map(|p| json!(p.blocks())).collect();
                println!("{}", Value::Array(v));
            } else {
                for p in &all {
                    println!("{p}");
                }
            }
        }
        NcCommand::Kreweras { partition } => {
            let pi: NcPartition = partition.parse()?;
            let k = kreweras(&pi);
            if json {
                println!("{}", json!({ "n": pi.n(), "partition": pi.blocks(), "kreweras": k.blocks() }));
            } else {
                println!("{k}");
            }
        }
        NcCommand::Moebius { partition } => {
            let pi: NcPartition = partition.parse()?;
            let m = format_rational(&moebius_to_one(&pi));
            if json {
                println!("{}", json!({ "n": pi.n(), "partition": pi.blocks(), "moebius": m }));
            } else {
                println!("{m}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn read(path: &PathBuf) -> Result<String, Usage> {
    fs::read_to_string(path).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_family(path: &PathBuf) -> Result<MultilinearFamily, Usage> {
    MultilinearFamily::from_json(&read(path)?).map_err(|e| Usage(format!("{}: {e}", path.display())))
}

fn read_all(paths: &[PathBuf], expected: usize, what: &str) -> Result<Vec<MultilinearFamily>, Usage> {
    if paths.len() != expected {
        return Err(Usage(format!("{what} needs {expected} input file(s), got {}", paths.len())));
    }
    paths.iter().map(read_family).collect()
}

/// One family prints as its JSON document; several as an object keyed by
/// label. Tables list every word with its value.
fn print_families(items: &[(&str, &MultilinearFamily)], json: bool) {
    if json {
        if let [(_, f)] = items {
            println!("{}", f.to_json());
        } else {
            let map: serde_json::Map<String, Value> =
                items.iter().map(|(name, f)| (name.to_string(), f.to_json_value())).collect();
            println!("{}", serde_json::to_string_pretty(&Value::Object(map)).expect("serializable"));
        }
        return;
    }
    for (i, (name, f)) in items.iter().enumerate() {
        if i > 0 {
            println!();
        }
        println!("# {name}: kind {}, k = {}, N = {}", f.kind(), f.k(), f.degree());
        let rows: Vec<(String, String)> =
            f.entries().map(|(w, v)| (format_word(&w), format_rational(v))).collect();
        let width = rows.iter().map(|(w, _)| w.len()).max().unwrap_or(0);
        for (w, v) in rows {
            println!("{w:<width$}  {v}");
        }
    }
}

fn transform(a: TransformArgs, json: bool) -> CliResult {
    let to_cumulants = matches!(a.direction, Direction::ToCumulants);
    let out = match a.brand {
        Brand::Free | Brand::Boolean => {
            let f = read_all(&a.input, 1, "this brand")?.remove(0);
            match (a.brand, to_cumulants) {
                (Brand::Free, true) => free_cumulants(&f)?,
                (Brand::Free, false) => moments_from_free(&f)?,
                (_, true) => boolean_cumulants(&f)?,
                (_, false) => moments_from_boolean(&f)?,
            }
        }
        _ => {
            let fs = read_all(&a.input, 2, "this brand")?;
            let (phi, second) = (&fs[0], &fs[1]);
            match (a.brand, to_cumulants) {
                (Brand::Cfree, true) => cfree_cumulants(phi, second)?,
                (Brand::Cfree, false) => moments_from_cfree(phi, second)?,
                (Brand::Cc, true) => cc_cumulants(phi, second)?,
                (Brand::Cc, false) => moments_from_cc(phi, second)?,
                (_, true) => infinitesimal_cumulants(phi, second)?,
                (_, false) => infinitesimal_moments(&free_cumulants(phi)?, second)?,
            }
        }
    };
    print_families(&[("result", &out)], json);
    Ok(ExitCode::SUCCESS)
}

fn combine(a: CombineArgs, json: bool, product: bool) -> CliResult {
    let what = if product { "product" } else { "convolution" };
    match a.kind {
        CombineKind::Free => {
            let fs = read_all(&a.input, 2, what)?;
            let mu = if product { free_product(&fs[0], &fs[1])? } else { boxplus(&fs[0], &fs[1])? };
            print_families(&[("mu", &mu)], json);
        }
        CombineKind::Cfree | CombineKind::Infinitesimal => {
            let fs = read_all(&a.input, 4, what)?;
            let (x, y, z, w) = (&fs[0], &fs[1], &fs[2], &fs[3]);
            let ((mu, second), label) = match (a.kind, product) {
                (CombineKind::Cfree, true) => (cfree_product(x, y, z, w)?, "nu"),
                (CombineKind::Cfree, false) => (boxplus_c(x, y, z, w)?, "nu"),
                (_, true) => (infinitesimal_product(x, y, z, w)?, "mu'"),
                (_, false) => (boxplus_b(x, y, z, w)?, "mu'"),
            };
            print_families(&[("mu", &mu), (label, &second)], json);
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(a: VerifyArgs, json: bool) -> CliResult {
    let (k, n, seed) = (a.k, a.degree, a.seed);
    let s = |i: u64| sub_seed(seed, 100, i);
    let name = identity_name(a.theorem);
    let result = match a.theorem {
        Identity::T12 => verify_theorem_12(
            &random_tracial(k, n + 1, s(0)),
            &random_family(k, n + 1, s(1)),
            &random_tracial(k, n + 1, s(2)),
            &random_family(k, n + 1, s(3)),
        )?,
        Identity::T13 => {
            let (mu1, nu1) = (random_tracial(k, n + 1, s(0)), random_family(k, n + 1, s(1)));
            let (mu2, nu2) = (random_tracial(a.l, n + 1, s(2)), random_family(a.l, n + 1, s(3)));
            let d1 = random_family(k, n + 1, s(4)).with_kind(Kind::Infinitesimal);
            let d2 = random_family(a.l, n + 1, s(5)).with_kind(Kind::Infinitesimal);
            let v = verify_theorem_13(&mu1, &nu1, &mu2, &nu2)?;
            let r = verify_product_restrictions(&mu1, &nu1, &d1, &mu2, &nu2, &d2)?;
            v.and(|| r)
        }
        Identity::T14 => {
            let nu = random_family(k, n + 1, s(1));
            let v = verify_theorem_14(&random_tracial(k, n + 1, s(0)), &nu)?;
            if k == 1 {
                let single = verify_single_variable_psi(&nu)?;
                v.and(|| single)
            } else {
                v
            }
        }
        Identity::T17 => verify_theorem_17(
            &DeltaTensor::random(k, s(2)),
            &random_tracial(k, n + 1, s(0)),
            &random_family(k, n + 1, s(1)),
        )?,
        Identity::Lemma210 => {
            let r = selftest::kreweras_ideal_report(n);
            let out = json!({
                "identity": name, "n": n, "ok": r.ok, "checked": r.checks,
                "counterexample": if r.ok { Value::Null } else { json!({ "detail": r.detail }) },
            });
            return Ok(report(&out, r.ok, json));
        }
        Identity::Lemma67 => verify_lemma_67_exhaustive(
            &DeltaTensor::random(k, s(2)),
            &random_family(k, n + 1, s(1)),
            &random_tracial(k, n + 1, s(0)),
            n,
        )?,
        Identity::Prop41 | Identity::Prop54 | Identity::Eq5a | Identity::Eq55a => {
            let phi = random_family(k, n, s(0));
            let chi = random_family(k, n, s(1));
            let kappa = free_cumulants(&phi)?;
            match a.theorem {
                Identity::Prop41 => {
                    let kc = cfree_cumulants(&phi, &chi)?;
                    let explicit = Verification::compare(&cfree_explicit(&phi, &chi)?, &kc, "explicit c-free formula");
                    let via_boolean = Verification::compare(
                        &cfree_from_boolean_explicit(&phi, &chi)?,
                        &kc,
                        "c-free cumulants via Boolean cumulants",
                    );
                    let free = Verification::compare(
                        &free_from_boolean_explicit(&phi)?,
                        &kappa,
                        "free cumulants via Boolean cumulants",
                    );
                    explicit.and(|| via_boolean).and(|| free)
                }
                Identity::Prop54 => Verification::compare(
                    &cc_cumulants(&phi, &chi)?,
                    &cfree_cumulants(&phi, &chi)?.sub(&kappa)?,
                    "cc cumulants vs c-free minus free",
                ),
                Identity::Eq5a => {
                    let dphi = chi.clone().with_kind(Kind::Infinitesimal);
                    let kp = infinitesimal_cumulants(&phi, &dphi)?;
                    Verification::compare(&infinitesimal_moments_type_b(&kappa, &kp)?, &dphi, "type B sum vs phi'")
                }
                _ => Verification::compare(
                    &chi_minus_phi_type_b_opp(&kappa, &cc_cumulants(&phi, &chi)?)?,
                    &chi.sub(&phi)?,
                    "B-opp sum vs chi - phi",
                ),
            }
        }
    };
    let out = json!({
        "identity": name, "seed": seed, "k": k, "N": n,
        "ok": result.ok, "checked": result.checked, "counterexample": result.counterexample,
    });
    Ok(report(&out, result.ok, json))
}

fn identity_name(id: Identity) -> &'static str {
    match id {
        Identity::T12 => "12",
        Identity::T13 => "13",
        Identity::T14 => "14",
        Identity::T17 => "17",
        Identity::Lemma210 => "lemma210",
        Identity::Lemma67 => "lemma67",
        Identity::Prop41 => "prop41",
        Identity::Prop54 => "prop54",
        Identity::Eq5a => "eq5a",
        Identity::Eq55a => "eq55a",
    }
}

fn report(out: &Value, ok: bool, json: bool) -> ExitCode {
    if json {
        println!("{out}");
    } else if ok {
        println!("ok: {} verified ({} checks)", out["identity"].as_str().unwrap_or(""), out["checked"]);
    } else {
        println!("FAILED: {}", out["identity"].as_str().unwrap_or(""));
        println!("{}", serde_json::to_string_pretty(&out["counterexample"]).expect("serializable"));
    }
    exit_for(ok)
}
