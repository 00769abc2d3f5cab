//! Command-line frontend: construct codes, compute weight distributions by
//! brute force and by closed form, verify the identities behind them, and
//! print Gauss/Jacobi data and instantiated weight tables.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 verification
//! mismatch.

use charcode::charsum::{
    self, approx_eq, gauss_quadratic_exact, gauss_sum, jacobi_cubic, quartic_decompose, tol,
    unit_root, CharSpec, CubicAB,
};
use charcode::code::{validate_spec, Code, WeightDistribution};
use charcode::field::{BaseField, FiniteField};
use charcode::num;
use charcode::report::RunReport;
use charcode::theory;
use charcode::verify;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "charcode",
    version,
    about = "Cyclic codes from character sums: exact weight distributions two ways"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weight distribution of the code with parameters (p, e, k, e1, e2)
    Weights(WeightsArgs),
    /// Run the verification suites (identities, reference codes, sweeps)
    Verify(VerifyArgs),
    /// Gauss sums over GF(p^e), numeric plus the exact quadratic form
    Gauss(GaussArgs),
    /// Cubic Jacobi decomposition (A, B) and quartic (m, n) for a field size
    Jacobi(JacobiArgs),
    /// Instantiate a weight-distribution table as CSV
    Table(TableArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Brute,
    Theory,
    Both,
}

#[derive(Args)]
struct WeightsArgs {
    #[arg(short)]
    p: u64,
    #[arg(short, default_value_t = 1)]
    e: u32,
    #[arg(short)]
    k: u32,
    #[arg(long)]
    e1: u64,
    #[arg(long)]
    e2: u64,
    #[arg(long, value_enum, default_value_t = Method::Both)]
    method: Method,
    /// Also print the weight enumerator string on its own line
    #[arg(long)]
    enumerator: bool,
    /// Probe the dual minimum distance (n <= 5000)
    #[arg(long)]
    dual: bool,
    /// Worker threads for the enumeration (default: cores, or CHARCODE_THREADS)
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Sweep theory vs brute force, e.g. --sweep q=3,k=3,e-max=6
    #[arg(long)]
    sweep: Option<String>,
    /// Add dual-distance probes for the d=1 reference codes
    #[arg(long)]
    dual: bool,
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct GaussArgs {
    #[arg(short)]
    p: u64,
    #[arg(short, default_value_t = 1)]
    e: u32,
    /// Character order(s); defaults to every divisor of q-1
    #[arg(long)]
    order: Vec<u64>,
}

#[derive(Args)]
struct JacobiArgs {
    #[arg(short)]
    q: u64,
}

#[derive(Args)]
struct TableArgs {
    /// Table number, 1 through 20
    id: u32,
    #[arg(short)]
    p: u64,
    #[arg(short, default_value_t = 1)]
    e: u32,
    #[arg(short)]
    k: Option<u32>,
}

struct Failure {
    code: u8,
    msg: String,
}

fn fail(code: u8, msg: impl Into<String>) -> Failure {
    Failure {
        code,
        msg: msg.into(),
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(e: E) -> Self {
        fail(1, e.to_string())
    }
}

fn resolve_threads(flag: Option<usize>) -> usize {
    flag.or_else(|| {
        std::env::var("CHARCODE_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    })
    .unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
    .max(1)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            // help/version are successful exits; anything else is usage
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.cmd {
        Cmd::Weights(a) => cmd_weights(a),
        Cmd::Verify(a) => cmd_verify(a),
        Cmd::Gauss(a) => cmd_gauss(a),
        Cmd::Jacobi(a) => cmd_jacobi(a),
        Cmd::Table(a) => cmd_table(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn cmd_weights(args: WeightsArgs) -> Result<u8, Failure> {
    let start = Instant::now();
    let spec = validate_spec(args.p, args.e, args.k, args.e1, args.e2)?;
    let code = Code::new(spec.clone())?;
    let threads = resolve_threads(args.threads);

    let (dist, verdict): (WeightDistribution, Option<String>) = match args.method {
        Method::Brute => (code.weight_distribution_brute(threads)?, None),
        Method::Theory => (theory::predict(&code)?.weight_distribution(), None),
        Method::Both => {
            let predicted = theory::predict(&code)?.weight_distribution();
            let brute = code.weight_distribution_brute(threads)?;
            let verdict = if predicted == brute {
                "match"
            } else {
                "mismatch"
            };
            (brute, Some(verdict.to_string()))
        }
    };

    let dual_distance = if args.dual {
        Some(code.dual_distance_probe()?)
    } else {
        None
    };

    let min_distance = dist.min_distance()?;
    let report = RunReport {
        method: match args.method {
            Method::Brute => "brute",
            Method::Theory => "theory",
            Method::Both => "both",
        }
        .to_string(),
        distribution: RunReport::distribution_from(&dist),
        min_distance,
        lower_bound: code.min_distance_lower_bound(),
        griesmer_optimal: charcode::code::is_griesmer_optimal(&spec, min_distance),
        dual_distance,
        verdict: verdict.clone(),
        ms: start.elapsed().as_millis() as u64,
        spec,
    };
    println!("{}", serde_json::to_string(&report).unwrap());
    if args.enumerator {
        println!("{}", dist.enumerator());
    }
    Ok(if verdict.as_deref() == Some("mismatch") {
        2
    } else {
        0
    })
}

fn parse_sweep(s: &str) -> Result<(u64, u32, u32, u64), Failure> {
    let mut q = None;
    let mut k = None;
    let mut emax = None;
    for part in s.split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| fail(1, format!("bad sweep component '{part}'")))?;
        let v: u64 = value
            .parse()
            .map_err(|_| fail(1, format!("bad sweep value '{value}'")))?;
        match key.trim() {
            "q" => q = Some(v),
            "k" => k = Some(v as u32),
            "e-max" | "emax" => emax = Some(v),
            other => return Err(fail(1, format!("unknown sweep key '{other}'"))),
        }
    }
    let q = q.ok_or_else(|| fail(1, "sweep needs q=<prime power>"))?;
    let (p, e) =
        num::prime_power(q).ok_or_else(|| fail(1, format!("q = {q} is not a prime power")))?;
    Ok((
        p,
        e,
        k.ok_or_else(|| fail(1, "sweep needs k=<degree>"))?,
        emax.unwrap_or(6),
    ))
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, Failure> {
    let threads = resolve_threads(args.threads);
    let mut results = verify::property_suite();
    results.extend(verify::reference_suite(threads));
    if let Some(sweep) = &args.sweep {
        let (p, e, k, emax) = parse_sweep(sweep)?;
        results.extend(verify::sweep_suite(p, e, k, emax, threads));
    }
    if args.dual {
        results.extend(verify::dual_suite());
    }
    let mut failures = 0;
    for r in &results {
        let status = if r.pass { "ok  " } else { "FAIL" };
        println!("{status} - {}: {}", r.name, r.detail);
        if !r.pass {
            failures += 1;
        }
    }
    println!("{} checks, {} failed", results.len(), failures);
    Ok(if failures > 0 { 2 } else { 0 })
}

fn cmd_gauss(args: GaussArgs) -> Result<u8, Failure> {
    let field = BaseField::new(args.p, args.e)?;
    let q = field.order();
    let orders = if args.order.is_empty() {
        (1..=q - 1).filter(|o| (q - 1) % o == 0).collect()
    } else {
        args.order.clone()
    };
    for order in orders {
        let chi = CharSpec::of_order(&field, order)?;
        let g = gauss_sum(&field, chi);
        println!(
            "G(order={order}) = {:.6}{:+.6}i  |G|^2 = {:.6}",
            g.re,
            g.im,
            g.norm_sqr()
        );
        if order == 2 && args.p != 2 {
            let exact = gauss_quadratic_exact(args.p, args.e)?;
            let ok = approx_eq(g, exact.value(), tol((q as f64).sqrt()));
            println!(
                "quadratic exact: {exact}  (numeric check: {})",
                if ok { "ok" } else { "MISMATCH" }
            );
            if !ok {
                return Ok(2);
            }
        }
    }
    Ok(0)
}

fn cmd_jacobi(args: JacobiArgs) -> Result<u8, Failure> {
    let (p, e) = num::prime_power(args.q)
        .ok_or_else(|| fail(1, format!("q = {} is not a prime power", args.q)))?;
    let field = BaseField::new(p, e)?;
    let q = field.order();
    let cubic = q % 3 == 1;
    let quartic = q % 4 == 1;
    if !cubic && !quartic {
        return Err(fail(1, format!("q = {q}: neither 3 nor 4 divides q - 1")));
    }
    println!("q = {q} = {p}^{e}");
    if cubic {
        let j = jacobi_cubic(&field)?;
        let CubicAB { big_a, big_b } = CubicAB::from_jacobi(q, j);
        println!("J(phi,phi) = {}{:+}*omega", j.a, j.b);
        println!("A = {big_a}, B = {big_b}  (4q = {} = A^2 + 27B^2)", 4 * q);
        let g3 = gauss_sum(&field, CharSpec::of_order(&field, 3)?).powu(3);
        let jc =
            Complex64::new(j.a as f64, 0.0) + Complex64::new(j.b as f64, 0.0) * unit_root(1, 3);
        if !approx_eq(g3, jc * q as f64, tol((q as f64).powf(1.5))) {
            return Err(fail(2, "G^3 = qJ check failed"));
        }
    }
    if quartic {
        let pi = quartic_decompose(q)?;
        println!("pi = {}{:+}*i  (q = m^2 + n^2, m odd, n even)", pi.m, pi.n);
        let g4 = gauss_sum(&field, CharSpec::of_order(&field, 4)?).powu(4);
        let cx = |z: charsum::GaussianInt| Complex64::new(z.m as f64, z.n as f64);
        let t = tol((q as f64).powi(2));
        if !(approx_eq(g4, cx(pi.pow(2)) * q as f64, t)
            || approx_eq(g4, cx(pi.conj().pow(2)) * q as f64, t))
        {
            return Err(fail(2, "G^4 = q*pi^2 check failed"));
        }
    }
    Ok(0)
}

fn cmd_table(args: TableArgs) -> Result<u8, Failure> {
    let inst = theory::table_rows(args.id, args.p, args.e, args.k)?;
    println!("weight,frequency,row,merged");
    for row in &inst.rows {
        let merged = inst.rows.iter().filter(|r| r.weight == row.weight).count() > 1;
        println!("{},{},{},{}", row.weight, row.frequency, row.tag, merged);
    }
    Ok(0)
}
