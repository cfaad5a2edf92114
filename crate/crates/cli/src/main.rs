//! Command-line driver for the symmetric-group and polynomial-identity tools.
//!
//! Exit codes: 0 success; 1 runtime error; 2 bad usage; 3 negative outcome
//! (new identities found, candidate not a member, identity fails);
//! 4 rank did not stabilize.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use symident::algebras::{cayley_dickson, matrix_algebra, octonions, zero_algebra, StructureAlgebra};
use symident::groupalg::{psi_matrix, MatrixUnits};
use symident::polyid::fill::iteration_rng;
use symident::polyid::{
    compute_allmat_resumable, compute_oldmat, lift_all, membership_test, new_identities, standard_polynomial,
    AllmatCheckpoint, FillConfig, IdentityModuleReport, MultilinearPoly, NamedIdentity, PartitionReport, TypeBasis,
};
use symident::repmat::Representation;
use symident::tableau::{partitions, standard_tableaux, Partition};
use symident::{Error, Field, Fp, Matrix, Permutation, Rational};

const NEGATIVE: u8 = 3;
const UNSTABLE: u8 = 4;

/// Runs `$f::<F>(args..)` for the field selected by `--prime`.
macro_rules! dispatch {
    ($p:expr, $f:ident $(, $arg:expr)*) => {
        match $p {
            0 => $f::<Rational>($($arg),*),
            101 => $f::<Fp<101>>($($arg),*),
            1009 => $f::<Fp<1009>>($($arg),*),
            5003 => $f::<Fp<5003>>($($arg),*),
            10007 => $f::<Fp<10007>>($($arg),*),
            32003 => $f::<Fp<32003>>($($arg),*),
            p => Err(anyhow!("unsupported prime {p}; choose 0, 101, 1009, 5003, 10007 or 32003")),
        }
    };
}

#[derive(Parser)]
#[command(name = "symident", version, about = "Symmetric group representations and polynomial identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard tableaux of a partition.
    Tableaux { partition: Partition },
    /// Print or write the matrix units of F S_n and the psi matrix (n <= 5).
    Units {
        n: usize,
        /// Write one file per unit plus psi.csv and psi_inv.csv here instead of printing.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the Clifton matrices and the representation matrix R(p).
    Rep { partition: Partition, permutation: Permutation },
    /// Compare the identities of an algebra with consequences of known ones.
    Identities(IdentitiesArgs),
    /// Decide whether an identity follows from known ones of the same degree.
    Membership(MembershipArgs),
    /// Check an identity on random arguments.
    Verify(VerifyArgs),
    /// Write the named identities as fixture files.
    Fixtures {
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Args, Clone)]
struct FieldArgs {
    /// Prime modulus (101, 1009, 5003, 10007 or 32003); 0 for exact rationals.
    #[arg(long, default_value_t = 101)]
    prime: u32,
    /// Random seed; one is generated and printed when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    /// Associative words for matrix algebras, all association types otherwise.
    Auto,
    Free,
    Assoc,
}

#[derive(Args, Clone)]
struct IdentitiesArgs {
    /// octonions, mK (k x k matrices), cd:a,b,c, zeroN, or a JSON spec file.
    algebra: String,
    degree: usize,
    /// Comma-separated known identities: alt, alt-left, alt-right, altdeg4,
    /// r1, r2, hp5, hp6, sz, new6, sK, or fixture paths.
    #[arg(long, default_value = "")]
    generators: String,
    #[arg(long, value_enum, default_value_t = BasisArg::Auto)]
    basis: BasisArg,
    #[command(flatten)]
    field: FieldArgs,
    /// Consecutive unchanged ranks that end a fill.
    #[arg(long, default_value_t = 10)]
    stable_iters: usize,
    /// Comma-separated partitions to run (default: all).
    #[arg(long)]
    partitions: Option<String>,
    /// Directory for the report, matrices, new identities and checkpoints.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Continue from checkpoints in --out.
    #[arg(long, requires = "out")]
    resume: bool,
}

#[derive(Args, Clone)]
struct MembershipArgs {
    degree: usize,
    /// Known identities (same syntax as identities --generators), lifted to the degree.
    #[arg(long, default_value = "")]
    known: String,
    /// Candidate identity: a name or fixture path.
    #[arg(long)]
    candidate: String,
    #[command(flatten)]
    field: FieldArgs,
}

#[derive(Args, Clone)]
struct VerifyArgs {
    /// Identity name or fixture path.
    identity: String,
    algebra: String,
    #[arg(long, default_value_t = 100)]
    trials: usize,
    #[command(flatten)]
    field: FieldArgs,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            let unstable = e.chain().any(|c| matches!(c.downcast_ref::<Error>(), Some(Error::RankUnstable { .. })));
            ExitCode::from(if unstable { UNSTABLE } else { 1 })
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Tableaux { partition } => {
            let ts = standard_tableaux(&partition);
            println!("partition {partition}: d = {}", ts.len());
            for t in ts {
                println!("{t}");
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Units { n, out } => units(n, out.as_deref()),
        Command::Rep { partition, permutation } => {
            let rep = Representation::<Rational>::new(&partition);
            let id = Permutation::identity(partition.n());
            println!("A_iota\n{}", rep.clifton(&id)?.to_csv()?);
            println!("A_p\n{}", rep.clifton(&permutation)?.to_csv()?);
            println!("R(p)\n{}", rep.matrix(&permutation)?.to_csv()?);
            Ok(ExitCode::SUCCESS)
        }
        Command::Identities(a) => {
            let seed = setup(&a.field)?;
            dispatch!(a.field.prime, identities, &a, seed)
        }
        Command::Membership(a) => {
            setup(&a.field)?;
            dispatch!(a.field.prime, membership, &a)
        }
        Command::Verify(a) => {
            let seed = setup(&a.field)?;
            dispatch!(a.field.prime, verify, &a, seed)
        }
        Command::Fixtures { out } => {
            fs::create_dir_all(&out)?;
            for id in NamedIdentity::ALL {
                let path = out.join(format!("{}.txt", id.name()));
                fs::write(&path, id.poly::<Rational>().to_fixture())?;
                println!("{}", path.display());
            }
            let path = out.join("s4.txt");
            fs::write(&path, standard_polynomial::<Rational>(4)?.to_fixture())?;
            println!("{}", path.display());
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn setup(f: &FieldArgs) -> Result<u64> {
    if let Some(j) = f.jobs {
        rayon::ThreadPoolBuilder::new().num_threads(j).build_global().context("thread pool")?;
    }
    let seed = f.seed.unwrap_or_else(rand::random);
    if f.seed.is_none() {
        println!("# seed {seed}");
    }
    Ok(seed)
}

fn ratio_csv(m: &Matrix<Rational>) -> String {
    m.rows_iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",") + "\n").collect()
}

fn units(n: usize, out: Option<&Path>) -> Result<ExitCode> {
    let psi = psi_matrix::<Rational>(n)?;
    let psi_inv = psi.inverse()?;
    if let Some(dir) = out {
        fs::create_dir_all(dir)?;
    }
    for shape in partitions(n) {
        let mu = MatrixUnits::<Rational>::new(&shape)?;
        for i in 1..=mu.dim() {
            for j in 1..=mu.dim() {
                let u = mu.unit(i, j)?;
                match out {
                    Some(dir) => fs::write(dir.join(format!("U_{shape}_{i}_{j}.txt")), u.to_text())?,
                    None => print!("U[{shape}]({i},{j})\n{}", u.to_text()),
                }
            }
        }
    }
    match out {
        Some(dir) => {
            fs::write(dir.join("psi.csv"), ratio_csv(&psi))?;
            fs::write(dir.join("psi_inv.csv"), ratio_csv(&psi_inv))?;
            println!("wrote matrix units and psi for n = {n} to {}", dir.display());
        }
        None => print!("psi\n{}psi_inv\n{}", ratio_csv(&psi), ratio_csv(&psi_inv)),
    }
    Ok(ExitCode::SUCCESS)
}

fn load_algebra<S: Field>(spec: &str) -> Result<StructureAlgebra<S>> {
    let lower = spec.to_ascii_lowercase();
    if lower == "octonions" || lower == "o" {
        return Ok(octonions());
    }
    if let Some(params) = lower.strip_prefix("cd:") {
        let v: Vec<i64> = params.split(',').map(|x| x.trim().parse()).collect::<std::result::Result<_, _>>()?;
        let [a, b, c] = v[..] else { bail!("cd:a,b,c needs three integers") };
        return Ok(cayley_dickson(S::from_int(a), S::from_int(b), S::from_int(c))?);
    }
    if let Some(k) = lower.strip_prefix('m').and_then(|k| k.parse::<usize>().ok()) {
        return Ok(matrix_algebra(k)?);
    }
    if let Some(k) = lower.strip_prefix("zero").and_then(|k| k.parse::<usize>().ok()) {
        return Ok(zero_algebra(k)?);
    }
    let text = fs::read_to_string(spec).with_context(|| format!("unknown algebra {spec:?}"))?;
    Ok(StructureAlgebra::from_json(&text)?)
}

fn resolve_basis(b: BasisArg, algebra: &str) -> TypeBasis {
    match b {
        BasisArg::Free => TypeBasis::Free,
        BasisArg::Assoc => TypeBasis::Associative,
        BasisArg::Auto => {
            let l = algebra.to_ascii_lowercase();
            let matrix = l.strip_prefix('m').is_some_and(|k| k.parse::<usize>().is_ok());
            if matrix {
                TypeBasis::Associative
            } else {
                TypeBasis::Free
            }
        }
    }
}

/// Parses one identity name (or fixture path) into polynomials.
fn load_identity<S: Field>(name: &str) -> Result<Vec<MultilinearPoly<S>>> {
    let key = name.trim();
    if key.eq_ignore_ascii_case("alt") {
        return Ok(symident::polyid::alternative_laws());
    }
    if let Ok(id) = key.parse::<NamedIdentity>() {
        return Ok(vec![id.poly()]);
    }
    if let Some(k) = key.strip_prefix(['s', 'S']).and_then(|k| k.parse::<usize>().ok()) {
        return Ok(vec![standard_polynomial(k)?]);
    }
    let text = fs::read_to_string(key).with_context(|| format!("unknown identity {key:?}"))?;
    Ok(vec![MultilinearPoly::from_fixture(&text)?])
}

fn load_identities<S: Field>(list: &str) -> Result<Vec<MultilinearPoly<S>>> {
    let mut out = Vec::new();
    for item in list.split(',').filter(|s| !s.trim().is_empty()) {
        out.extend(load_identity(item)?);
    }
    Ok(out)
}

fn write_matrix<S: Field>(path: &Path, m: &Matrix<S>) -> Result<()> {
    let text: String =
        m.rows_iter().map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",") + "\n").collect();
    fs::write(path, text)?;
    Ok(())
}

fn identities<S: Field>(a: &IdentitiesArgs, seed: u64) -> Result<ExitCode> {
    let alg = load_algebra::<S>(&a.algebra)?;
    let basis = resolve_basis(a.basis, &a.algebra);
    let n = a.degree;
    let gens: Vec<MultilinearPoly<S>> = load_identities(&a.generators)?;
    if let Some(g) = gens.iter().find(|g| g.basis() != basis) {
        bail!("generator of degree {} uses a different monomial basis than --basis", g.degree());
    }
    let lifted = lift_all(&gens, n)?;
    let shapes: Vec<Partition> = match &a.partitions {
        Some(list) => list.split(',').map(|s| s.trim().parse()).collect::<symident::Result<_>>()?,
        None => partitions(n),
    };
    if let Some(bad) = shapes.iter().find(|s| s.n() != n) {
        bail!("partition {bad} is not a partition of {n}");
    }
    let cfg = FillConfig { seed, stable_iters: a.stable_iters, max_iters: 10_000 };
    if let Some(dir) = &a.out {
        fs::create_dir_all(dir)?;
    }
    let reports = shapes
        .par_iter()
        .map(|shape| -> Result<PartitionReport<S>> {
            let cp_path = a.out.as_ref().map(|d| d.join(format!("checkpoint_{shape}.json")));
            let resume = match (&cp_path, a.resume) {
                (Some(p), true) if p.exists() => Some(AllmatCheckpoint::from_json(&fs::read_to_string(p)?)?),
                _ => None,
            };
            let mut save = |cp: &AllmatCheckpoint| -> symident::Result<()> {
                if let Some(p) = &cp_path {
                    let tmp = p.with_extension("json.tmp");
                    fs::write(&tmp, cp.to_json())?;
                    fs::rename(&tmp, p)?;
                }
                Ok(())
            };
            let all = compute_allmat_resumable(&alg, shape, basis, &cfg, resume, &mut save)
                .with_context(|| format!("partition {shape}"))?;
            let oldmat = compute_oldmat(&lifted, shape, basis)?;
            let r = PartitionReport {
                shape: shape.clone(),
                d: shape.dimension() as usize,
                types: basis.num_types(n),
                allmat: all.matrix,
                oldmat,
                rank_history: all.rank_history,
            };
            eprintln!("{shape}: r_all {} r_old {}", r.r_all(), r.r_old());
            Ok(r)
        })
        .collect::<Result<Vec<_>>>()?;
    let report = IdentityModuleReport { degree: n, algebra: alg.name().to_string(), partitions: reports };
    let csv = report.to_csv();
    print!("{csv}");
    let new_total: usize = report.partitions.iter().map(|p| p.new_count()).sum();
    let wrong: Vec<String> =
        report.partitions.iter().filter(|p| !p.old_within_all()).map(|p| p.shape.to_string()).collect();
    println!(
        "# {} degree {n}, seed {seed}, {} partitions, {} identities in total, {new_total} new irreducible",
        report.algebra,
        report.partitions.len(),
        report.total_identities()
    );
    if !wrong.is_empty() {
        println!("# warning: known identities not satisfied for {}", wrong.join(" "));
    }
    if let Some(dir) = &a.out {
        fs::write(dir.join("report.csv"), &csv)?;
        for p in &report.partitions {
            write_matrix(&dir.join(format!("allmat_{}.csv", p.shape)), &p.allmat)?;
            write_matrix(&dir.join(format!("oldmat_{}.csv", p.shape)), &p.oldmat)?;
            for (i, f) in new_identities(p, basis)?.iter().enumerate() {
                fs::write(dir.join(format!("new_{}_{}.txt", p.shape, i + 1)), f.to_fixture())?;
            }
        }
    }
    Ok(if report.has_new_identities() { ExitCode::from(NEGATIVE) } else { ExitCode::SUCCESS })
}

fn membership<S: Field>(a: &MembershipArgs) -> Result<ExitCode> {
    let cands = load_identity::<S>(&a.candidate)?;
    let [cand] = &cands[..] else { bail!("candidate must be a single identity") };
    let cand = &cand.lift_to(a.degree)?[..];
    let [cand] = cand else { bail!("candidate has degree {} but --degree is {}", cands[0].degree(), a.degree) };
    let known = lift_all(&load_identities::<S>(&a.known)?, a.degree)?;
    let m = membership_test(&known, cand)?;
    println!("lambda,rank_known,rank_with_candidate");
    for (lam, r0, r1) in &m.ranks {
        println!("{lam},{r0},{r1}");
    }
    if m.is_member() {
        println!("member");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("not a member");
        Ok(ExitCode::from(NEGATIVE))
    }
}

fn verify<S: Field>(a: &VerifyArgs, seed: u64) -> Result<ExitCode> {
    let alg = load_algebra::<S>(&a.algebra)?;
    let fs_ = load_identity::<S>(&a.identity)?;
    for (idx, f) in fs_.iter().enumerate() {
        for t in 0..a.trials {
            let mut rng = iteration_rng(seed, &format!("verify{idx}"), t);
            let args: Vec<_> = (0..f.degree()).map(|_| alg.random_element(&mut rng)).collect();
            let v = f.evaluate(&alg, &args)?;
            if !v.is_zero() {
                println!("fail: trial {} of {}", t + 1, a.trials);
                for (i, x) in args.iter().enumerate() {
                    println!("x{} = {}", i + 1, join(&x.coords));
                }
                println!("value = {}", join(&v.coords));
                return Ok(ExitCode::from(NEGATIVE));
            }
        }
    }
    println!("pass: {} trials, seed {seed}", a.trials);
    Ok(ExitCode::SUCCESS)
}

fn join<S: Field>(v: &[S]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}
