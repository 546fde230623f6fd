//! Batch command-line front end: construction, verification,
//! decomposition, automorphism and isomorphism queries, the census,
//! duality round trips, the correspondence audit, and the tensor
//! decompositions.
//!
//! Exit codes: 0 on success, 1 on verification failure or bad input
//! data, 2 on usage errors.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ucsalg::algebra::{AcAlgebra, Decomposition, IsoSearch};
use ucsalg::constructions::{
    agl_dim4_algebra, agl_generators, cg_tensor_decompose, cg_wedge_sym_decompose, cyclic_family,
    deleted_perm_module, dim4_census, esq_structures, gl2_generators, sl2, sym_power_algebra,
};
use ucsalg::duality::{algebra_of_group, correspondence_audit, group_of_algebra, AuditScope};
use ucsalg::field::Field;
use ucsalg::group::PairScope;
use ucsalg::json::{AlgebraWire, AuditWire, CensusWire, GroupWire};
use ucsalg::par;

#[derive(Parser)]
#[command(name = "ucsalg", version, about = "UCS p-groups and anti-commutative algebras")]
struct Cli {
    /// Worker threads for the exhaustive scans.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build one of the named algebra families and print its JSON.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Convert between an algebra and its group.
    Dualize(DualizeArgs),
    /// Run the identity/invariant suite on an algebra file.
    Verify { file: String },
    /// Decompose an algebra into minimal ideals.
    Decompose { file: String },
    /// Automorphism group order (and order profile when small).
    Aut { file: String },
    /// Test two algebra files for isomorphism.
    Iso { file1: String, file2: String },
    /// Classify the 4-dimensional algebras over F_q.
    Census {
        #[arg(long)]
        q: u64,
    },
    /// Algebra -> group -> algebra; checks the tables are identical.
    Roundtrip { file: String },
    /// Subalgebra/powerful-subgroup correspondence audit.
    Audit { file: String },
    /// Tensor (and square) decompositions of the degree-m and degree-n
    /// polynomial modules of GL(2,p).
    Cg {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Subcommand)]
enum Family {
    /// The 3-dimensional simple Lie algebra over F_q.
    Sl2 {
        #[arg(long)]
        q: u64,
    },
    /// The 4-dimensional algebra with automorphism group AGL(1,5).
    Th52b {
        #[arg(long)]
        q: u64,
    },
    /// The r-dimensional cyclic-shift family (b, n | b^2+b-1, n | q-1).
    Sec6 {
        #[arg(long)]
        b: u64,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        q: u64,
    },
    /// The (m+1)-dimensional symmetric-power algebra of SL(2,p).
    Gamma {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        p: u64,
    },
    /// The (t-1)-dimensional algebra with AGammaL(1,t) symmetry over F_q.
    Agl {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Args)]
struct DualizeArgs {
    /// Read an algebra file and emit its group.
    #[arg(long, conflicts_with = "to_algebra")]
    to_group: bool,
    /// Read a group file and emit its algebra.
    #[arg(long)]
    to_algebra: bool,
    /// Output format for --to-group: json or pcp text.
    #[arg(long, value_enum, default_value_t = GroupFormat::Json)]
    format: GroupFormat,
    file: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupFormat {
    Json,
    Pcp,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    par::set_jobs(cli.jobs);
    match run(cli.command) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn read_input(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf).map_err(|e| e.to_string())?;
        Ok(buf)
    } else {
        fs::read_to_string(path).map_err(|e| format!("{path}: {e}"))
    }
}

fn read_algebra(path: &str) -> Result<AcAlgebra, String> {
    let text = read_input(path)?;
    let wire: AlgebraWire = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    wire.build()
}

fn field_of_order(q: u64) -> Result<Field, String> {
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut k = 0;
            let mut n = q;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            if n != 1 {
                return Err(format!("{q} is not a prime power"));
            }
            return Field::new(p, k, None).map_err(|e| e.to_string());
        }
        p += 1;
    }
    Field::prime(q).map_err(|e| e.to_string())
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Construct { family } => {
            let algebra = construct(family)?;
            print_json(&AlgebraWire::of(&algebra));
            Ok(ExitCode::SUCCESS)
        }
        Command::Dualize(args) => dualize(args),
        Command::Verify { file } => verify(&file),
        Command::Decompose { file } => decompose(&file),
        Command::Aut { file } => aut(&file),
        Command::Iso { file1, file2 } => iso(&file1, &file2),
        Command::Census { q } => {
            let report = dim4_census(q).map_err(|e| e.to_string())?;
            print_json(&CensusWire::of(&report));
            Ok(ExitCode::SUCCESS)
        }
        Command::Roundtrip { file } => {
            let l = read_algebra(&file)?;
            let ok = ucsalg::duality::round_trip_algebra(&l).map_err(|e| e.to_string())?;
            println!("tables identical: {ok}");
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Audit { file } => audit(&file),
        Command::Cg { m, n, p } => cg(m, n, p),
    }
}

fn construct(family: Family) -> Result<AcAlgebra, String> {
    match family {
        Family::Sl2 { q } => Ok(sl2(&field_of_order(q)?)),
        Family::Th52b { q } => Ok(agl_dim4_algebra(&field_of_order(q)?)),
        Family::Sec6 { b, n, q } => {
            Ok(cyclic_family(b, n, q).map_err(|e| e.to_string())?.algebra)
        }
        Family::Gamma { m, p } => {
            let field = Field::prime(p).map_err(|e| e.to_string())?;
            Ok(sym_power_algebra(m, &field).map_err(|e| e.to_string())?.algebra)
        }
        Family::Agl { t, q } => {
            let field = field_of_order(q)?;
            let perms = agl_generators(t, true).map_err(|e| e.to_string())?;
            let module = deleted_perm_module(&perms, &field).map_err(|e| e.to_string())?;
            let structures = esq_structures(&module).map_err(|e| e.to_string())?;
            structures
                .into_iter()
                .next()
                .map(|s| s.algebra)
                .ok_or_else(|| "no exterior-self-quotient structure exists".to_string())
        }
    }
}

fn dualize(args: DualizeArgs) -> Result<ExitCode, String> {
    if args.to_algebra {
        let text = read_input(&args.file)?;
        let wire: GroupWire = serde_json::from_str(&text).map_err(|e| e.to_string())?;
        let group = wire.build()?;
        let algebra = algebra_of_group(&group).map_err(|e| e.to_string())?;
        print_json(&AlgebraWire::of(&algebra));
        return Ok(ExitCode::SUCCESS);
    }
    if !args.to_group {
        return Err("pass --to-group or --to-algebra".to_string());
    }
    let l = read_algebra(&args.file)?;
    let group = group_of_algebra(&l).map_err(|e| e.to_string())?;
    match args.format {
        GroupFormat::Json => print_json(&GroupWire::of(&group)),
        GroupFormat::Pcp => print!("{}", group.presentation_text()),
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct VerifyReport {
    dim: usize,
    field_order: u64,
    abelian: bool,
    jacobi: bool,
    malcev: bool,
    center_dim: usize,
    product_span_dim: usize,
    simple: Option<bool>,
    bilinearity_sample: bool,
    anticommutativity_sample: bool,
    violations: Vec<String>,
}

fn verify(file: &str) -> Result<ExitCode, String> {
    let l = read_algebra(file)?;
    let flags = l.identity_checks();
    let mut violations = Vec::new();

    // Structural invariants on deterministic samples.
    let f = l.field().clone();
    let q = f.order();
    let mut seed = 0x5A17u64;
    let mut next_vec = || -> Vec<u64> {
        (0..l.dim())
            .map(|_| {
                seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (seed >> 33) % q
            })
            .collect()
    };
    let mut bilinearity = true;
    let mut anticommutativity = true;
    for _ in 0..200 {
        let (x, y, z) = (next_vec(), next_vec(), next_vec());
        let lam = x[0];
        let mixed: Vec<u64> =
            x.iter().zip(&y).map(|(&a, &b)| f.add_rep(a, f.mul_rep(lam, b))).collect();
        let lhs = l.product(&mixed, &z);
        let xz = l.product(&x, &z);
        let yz = l.product(&y, &z);
        for k in 0..l.dim() {
            if lhs[k] != f.add_rep(xz[k], f.mul_rep(lam, yz[k])) {
                bilinearity = false;
            }
        }
        let xy = l.product(&x, &y);
        let yx = l.product(&y, &x);
        if xy.iter().zip(&yx).any(|(&a, &b)| f.add_rep(a, b) != 0) {
            anticommutativity = false;
        }
        if l.product(&x, &x).iter().any(|&c| c != 0) {
            anticommutativity = false;
        }
    }
    if !bilinearity {
        violations.push("bilinearity".to_string());
    }
    if !anticommutativity {
        violations.push("anticommutativity".to_string());
    }

    let simple = l.is_simple().ok();
    let report = VerifyReport {
        dim: l.dim(),
        field_order: q,
        abelian: flags.abelian,
        jacobi: flags.jacobi,
        malcev: flags.malcev,
        center_dim: l.center().dim(),
        product_span_dim: l.product_span().dim(),
        simple,
        bilinearity_sample: bilinearity,
        anticommutativity_sample: anticommutativity,
        violations: violations.clone(),
    };
    print_json(&report);
    Ok(if violations.is_empty() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct DecomposeReport {
    abelian: bool,
    minimal_ideal_count: usize,
    ideal_dims: Vec<usize>,
    pairwise_isomorphic: bool,
}

fn decompose(file: &str) -> Result<ExitCode, String> {
    let l = read_algebra(file)?;
    let decomposition = l.semisimple_decompose().map_err(|e| e.to_string())?;
    let ideals = decomposition.ideals();
    let restricted: Vec<AcAlgebra> = ideals
        .iter()
        .map(|s| l.restrict_to(s))
        .collect::<Result<_, _>>()
        .map_err(|e| e.to_string())?;
    let search = IsoSearch::new();
    let mut pairwise = true;
    for other in restricted.iter().skip(1) {
        if search.find(&restricted[0], other).map_err(|e| e.to_string())?.is_none() {
            pairwise = false;
        }
    }
    print_json(&DecomposeReport {
        abelian: matches!(decomposition, Decomposition::Abelian(_)),
        minimal_ideal_count: ideals.len(),
        ideal_dims: ideals.iter().map(|s| s.dim()).collect(),
        pairwise_isomorphic: pairwise,
    });
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct AutReport {
    order: u64,
    /// element order -> count, when the group is small enough to list.
    order_profile: Option<Vec<(u64, usize)>>,
}

fn aut(file: &str) -> Result<ExitCode, String> {
    let l = read_algebra(file)?;
    let search = IsoSearch::new();
    let order = search.count(&l, &l).map_err(|e| e.to_string())?;
    let order_profile = if order <= 10_000 {
        let autos = search.collect(&l, &l).map_err(|e| e.to_string())?;
        let mut profile = std::collections::BTreeMap::new();
        for m in &autos {
            let ord = m.order_dividing(order).expect("element orders divide the group order");
            *profile.entry(ord).or_insert(0usize) += 1;
        }
        Some(profile.into_iter().collect())
    } else {
        None
    };
    print_json(&AutReport { order, order_profile });
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct IsoReport {
    isomorphic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<Vec<Vec<u64>>>>,
}

fn iso(file1: &str, file2: &str) -> Result<ExitCode, String> {
    let l1 = read_algebra(file1)?;
    let l2 = read_algebra(file2)?;
    let found = IsoSearch::new().find(&l1, &l2).map_err(|e| e.to_string())?;
    print_json(&IsoReport {
        isomorphic: found.is_some(),
        matrix: found.map(|m| ucsalg::json::matrix_wire(&m)),
    });
    Ok(ExitCode::SUCCESS)
}

fn audit(file: &str) -> Result<ExitCode, String> {
    let l = read_algebra(file)?;
    if !l.field().is_prime_field() {
        return Err("the audit needs an algebra over a prime field".to_string());
    }
    let g = group_of_algebra(&l).map_err(|e| e.to_string())?;
    let points = (l.field().order() as u128).pow(l.dim() as u32);
    let (scope, pair_scope) = if points <= 10_000 && g.order() <= 1_000_000 {
        (AuditScope::Full, PairScope::Auto)
    } else {
        let include = l
            .semisimple_decompose()
            .map(|d| d.ideals().to_vec())
            .unwrap_or_default();
        (AuditScope::Sampled { per_dim: 8, include }, PairScope::Auto)
    };
    let report = correspondence_audit(&l, &g, &scope, pair_scope).map_err(|e| e.to_string())?;
    print_json(&AuditWire::of(&report));
    Ok(if report.all_agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

#[derive(Serialize)]
struct CgReport {
    m: usize,
    n: usize,
    p: u64,
    tensor_multiplicities: Vec<(usize, usize)>,
    tensor_checks_pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    wedge_multiplicities: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    sym_multiplicities: Option<Vec<(usize, usize)>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    square_checks_pass: Option<bool>,
}

fn cg(m: usize, n: usize, p: u64) -> Result<ExitCode, String> {
    let field = Field::prime(p).map_err(|e| e.to_string())?;
    let gens = gl2_generators(&field);
    let (m, n) = (m.min(n), m.max(n));
    let tensor = cg_tensor_decompose(m, n, &field, &gens).map_err(|e| e.to_string())?;
    let mut pass = tensor.checks.all(m, n);
    let (mut wedge_multiplicities, mut sym_multiplicities, mut square_checks_pass) =
        (None, None, None);
    if m == n {
        let squares = cg_wedge_sym_decompose(m, &field, &gens).map_err(|e| e.to_string())?;
        square_checks_pass = Some(squares.checks.all());
        pass &= squares.checks.all();
        wedge_multiplicities = Some(squares.wedge_multiplicities);
        sym_multiplicities = Some(squares.sym_multiplicities);
    }
    print_json(&CgReport {
        m,
        n,
        p,
        tensor_multiplicities: tensor.multiplicities,
        tensor_checks_pass: tensor.checks.all(m, n),
        wedge_multiplicities,
        sym_multiplicities,
        square_checks_pass,
    });
    Ok(if pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
}
