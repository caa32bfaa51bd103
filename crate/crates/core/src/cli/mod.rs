//! The `padiclab` command line.
//!
//! [`dispatch`] parses an argument vector and returns the exit code and both
//! output streams, so the binary is a thin wrapper and every command can be
//! exercised in-process. Exit codes: 0 success, 1 domain error, 2 usage or
//! parse error, 3 resource limit.

mod args;

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::Parser;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde_json::{json, Value};

use crate::arith::{fmt_rational, parse_integer, parse_rational, ExactRational, Prime};
use crate::codes::{decode, encode, CodeReport, HenselCode};
use crate::hensel::{hensel_lift, roots_mod_p, sqrt_padic, LiftTrace, TraceReport};
use crate::padic::{
    check_seminorm_axioms, gauss_norm, norm, nu, to_expansion_string, PadicNumber, RationalPlace,
    RationalPolynomial,
};
use crate::places::{local_norms, local_norms_ff, LocalNorm, LocalNormRow, RationalFunction};
use crate::poly::IntPolynomial;
use crate::quantum::{
    check_lattice_axioms, decompose, fmt_gaussian, is_distributive, is_in_normalizer, is_modular, pauli_basis_check,
    pauli_group_order, subspace_lattice, FiniteLattice, GaussianMatrix, GaussianRational, LawCheck, PauliElement,
};
use crate::resurgence::{
    abs_real, borel_sum, euler_series_partial, fmt_real, general_solution, ode_residual, optimal_truncation_index,
    parse_decimal, real_from_rational, real_int, to_f64, EulerSeries, Method, Real, SummationResult,
};
use crate::{Error, Result};

use args::{BinaryCode, BorelArgs, Cli, CodeOp, Command, LatticeArgs, LatticeOp, PauliOp, SeminormArgs};

/// Significant digits printed for high-precision reals.
pub const REAL_DIGITS: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::ResourceLimit(_) => 3,
        _ => 1,
    }
}

/// A command's result in both renderings.
struct Output {
    text: String,
    json: Value,
}

/// Runs the command line `argv` (including the program name).
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                CommandResult { exit_code: 2, stdout: String::new(), stderr: rendered }
            } else {
                CommandResult { exit_code: 0, stdout: rendered, stderr: String::new() }
            };
        }
    };
    match run(cli.command) {
        Ok(out) if cli.json => CommandResult { exit_code: 0, stdout: format!("{}\n", out.json), stderr: String::new() },
        Ok(out) => CommandResult { exit_code: 0, stdout: out.text, stderr: String::new() },
        Err(e) if cli.json => {
            let body = json!({ "error_code": e.code(), "message": e.to_string() });
            CommandResult { exit_code: exit_code(&e), stdout: format!("{body}\n"), stderr: String::new() }
        }
        Err(e) => CommandResult {
            exit_code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.code()),
        },
    }
}

fn run(cmd: Command) -> Result<Output> {
    match cmd {
        Command::Expand { value, prime, precision } => expand(&value, prime.p, precision.r),
        Command::Valuation { value, prime } => valuation(&value, prime.p),
        Command::Norm { value, p } => norm_cmd(&value, &p),
        Command::Hensel { poly, prime, k, x0 } => hensel(&poly, prime.p, k, x0.as_deref()),
        Command::Sqrt { value, prime, precision } => sqrt(&value, prime.p, precision.r),
        Command::ProductFormula { value, function_field, p } => product_formula(&value, function_field, p),
        Command::Code { op } => code(op),
        Command::Pauli { op } => pauli(op),
        Command::Lattice { op: LatticeOp::Check(args) } => lattice(args),
        Command::Borel(args) => borel(args),
        Command::SeminormCheck(args) => seminorm(args),
    }
}

fn prime(p: u64) -> Result<Prime> {
    Prime::new(p)
}

fn rat(q: &ExactRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

fn gaussian(z: &GaussianRational) -> Value {
    json!({ "re": rat(&z.re), "im": rat(&z.im) })
}

fn expand(value: &str, p: u64, r: usize) -> Result<Output> {
    let a = parse_rational(value)?;
    let x = PadicNumber::from_rational(&a, prime(p)?, r)?;
    let s = to_expansion_string(&x)?;
    Ok(Output {
        text: format!("{s}\n"),
        json: json!({
            "value": rat(&a),
            "p": p,
            "r": r,
            "expansion": s,
            "valuation": x.valuation(),
            "unit_digits": x.unit_digits(),
        }),
    })
}

fn valuation(value: &str, p: u64) -> Result<Output> {
    let a = parse_rational(value)?;
    let v = nu(&a, prime(p)?);
    Ok(Output { text: format!("{v}\n"), json: json!({ "value": rat(&a), "p": p, "valuation": v }) })
}

fn norm_cmd(value: &str, place: &str) -> Result<Output> {
    let a = parse_rational(value)?;
    let place = match place {
        "inf" => RationalPlace::Infinity,
        other => RationalPlace::Prime(other.parse()?),
    };
    let n = norm(&a, place);
    let label = match place {
        RationalPlace::Prime(p) => p.to_string(),
        RationalPlace::Infinity => "inf".into(),
    };
    Ok(Output { text: format!("{}\n", fmt_rational(&n)), json: json!({ "value": rat(&a), "place": label, "norm": rat(&n) }) })
}

fn trace_text(t: &LiftTrace) -> String {
    let join = |v: Vec<String>| v.join(", ");
    let mut s = String::new();
    let _ = writeln!(s, "f = {}, p = {}, x0 = {}", t.poly, t.p, t.residues[0]);
    let _ = writeln!(s, "digits: {}", join(t.digits.iter().map(u64::to_string).collect()));
    let _ = writeln!(s, "residues: {}", join(t.residues.iter().map(BigInt::to_string).collect()));
    let _ = writeln!(s, "moduli: {}", join(t.moduli().iter().map(BigInt::to_string).collect()));
    let _ = writeln!(s, "sum: {}", t.render_sum());
    s
}

fn hensel(poly: &str, p: u64, k: usize, x0: Option<&str>) -> Result<Output> {
    let f: IntPolynomial = poly.parse()?;
    let p = prime(p)?;
    match x0 {
        Some(x0) => {
            let t = hensel_lift(&f, &parse_integer(x0)?, p, k)?;
            Ok(Output { text: trace_text(&t), json: serde_json::to_value(TraceReport::from(&t)).expect("serializable") })
        }
        None => {
            let roots = roots_mod_p(&f, p)?;
            let traces = roots.iter().map(|&x| hensel_lift(&f, &BigInt::from(x), p, k)).collect::<Result<Vec<_>>>()?;
            let text = if traces.is_empty() {
                format!("f = {f} has no roots modulo {p}\n")
            } else {
                traces.iter().map(trace_text).collect::<Vec<_>>().join("\n")
            };
            let lifts: Vec<TraceReport> = traces.iter().map(TraceReport::from).collect();
            Ok(Output { text, json: json!({ "p": p.get(), "poly": f.to_string(), "roots": roots, "lifts": lifts }) })
        }
    }
}

fn sqrt(value: &str, p: u64, r: usize) -> Result<Output> {
    let a = parse_integer(value)?;
    let roots = sqrt_padic(&a, prime(p)?, r)?;
    let rendered = roots.iter().map(to_expansion_string).collect::<Result<Vec<_>>>()?;
    let text = if rendered.is_empty() {
        format!("{a} is not a square in Z_{p}\n")
    } else {
        rendered.iter().map(|s| format!("{s}\n")).collect()
    };
    let json_roots: Vec<Value> = roots
        .iter()
        .zip(&rendered)
        .map(|(x, s)| json!({ "expansion": s, "digits": x.unit_digits() }))
        .collect();
    Ok(Output { text, json: json!({ "value": a.to_string(), "p": p, "r": r, "roots": json_roots }) })
}

fn product_formula(value: &str, function_field: bool, p: Option<u64>) -> Result<Output> {
    let (rows, input): (Vec<LocalNorm>, String) = if function_field {
        let p = prime(p.expect("enforced by clap"))?;
        let f = RationalFunction::parse(value, p)?;
        (local_norms_ff(&f)?, f.to_string())
    } else {
        let a = parse_rational(value)?;
        (local_norms(&a)?, fmt_rational(&a))
    };
    let product = rows.iter().fold(ExactRational::from_integer(1.into()), |acc, r| acc * &r.norm);
    let mut text = String::from("place\tvaluation\tnorm\n");
    for r in &rows {
        let v = r.valuation.map_or("-".to_string(), |v| v.to_string());
        let _ = writeln!(text, "{}\t{}\t{}", r.place, v, fmt_rational(&r.norm));
    }
    let _ = writeln!(text, "product = {}/{}", product.numer(), product.denom());
    let places: Vec<LocalNormRow> = rows.iter().map(LocalNormRow::from).collect();
    Ok(Output {
        text,
        json: json!({
            "input": input,
            "field": if function_field { format!("F_{}(x)", p.unwrap_or_default()) } else { "Q".to_string() },
            "places": places,
            "product": rat(&product),
        }),
    })
}

fn code_output(c: &HenselCode) -> Output {
    let decoded = decode(c).ok();
    let report = CodeReport::from(c);
    let digits: Vec<String> = report.digits.iter().map(u64::to_string).collect();
    let text = match &decoded {
        Some(q) => format!("{} (digits {}) = {}\n", report.value, digits.join(" "), fmt_rational(q)),
        None => format!("{} (digits {})\n", report.value, digits.join(" ")),
    };
    let mut json = serde_json::to_value(&report).expect("serializable");
    json["rational"] = decoded.as_ref().map_or(Value::Null, rat);
    Output { text, json }
}

fn code_operand(s: &str, residue: bool, p: Prime, r: u32) -> Result<HenselCode> {
    if residue {
        let v = parse_integer(s)?;
        let v = v.to_biguint().ok_or_else(|| Error::Parse(format!("residue `{s}` must be non-negative")))?;
        HenselCode::from_residue(v, p, r)
    } else {
        encode(&parse_rational(s)?, p, r)
    }
}

fn digit_count(r: usize) -> Result<u32> {
    u32::try_from(r).map_err(|_| Error::ResourceLimit(format!("r = {r} is too large")))
}

fn code(op: CodeOp) -> Result<Output> {
    match op {
        CodeOp::Encode { value, params } => {
            let c = encode(&parse_rational(&value)?, prime(params.prime.p)?, digit_count(params.precision.r)?)?;
            Ok(code_output(&c))
        }
        CodeOp::Decode { value, params } => {
            let c = code_operand(&value, true, prime(params.prime.p)?, digit_count(params.precision.r)?)?;
            let q = decode(&c)?;
            let mut out = code_output(&c);
            out.text = format!("{}\n", fmt_rational(&q));
            Ok(out)
        }
        CodeOp::Add(b) => binary_code(b, HenselCode::add),
        CodeOp::Sub(b) => binary_code(b, HenselCode::sub),
        CodeOp::Mul(b) => binary_code(b, HenselCode::mul),
        CodeOp::Div(b) => binary_code(b, HenselCode::div),
    }
}

fn binary_code(b: BinaryCode, f: fn(&HenselCode, &HenselCode) -> Result<HenselCode>) -> Result<Output> {
    let p = prime(b.params.prime.p)?;
    let r = digit_count(b.params.precision.r)?;
    let x = code_operand(&b.a, b.residue, p, r)?;
    let y = code_operand(&b.b, b.residue, p, r)?;
    Ok(code_output(&f(&x, &y)?))
}

fn pauli_json(g: &PauliElement) -> Value {
    let bits = |v: &[bool]| v.iter().map(|&b| b as u8).collect::<Vec<_>>();
    json!({ "string": g.to_string(), "phase": g.phase(), "xbits": bits(g.xbits()), "zbits": bits(g.zbits()) })
}

fn pauli(op: PauliOp) -> Result<Output> {
    match op {
        PauliOp::Mul { a, b } => {
            let (x, y): (PauliElement, PauliElement) = (a.parse()?, b.parse()?);
            let z = x.mul(&y)?;
            Ok(Output {
                text: format!("{z}\n"),
                json: json!({ "a": pauli_json(&x), "b": pauli_json(&y), "product": pauli_json(&z) }),
            })
        }
        PauliOp::Order { n } => {
            let order = pauli_group_order(n)?;
            Ok(Output { text: format!("{order}\n"), json: json!({ "n": n, "order": order }) })
        }
        PauliOp::BasisCheck { decompose: m } => {
            let report = pauli_basis_check();
            let mut text = format!(
                "rank: {}\nindependent: {}\nspanning: {}\n",
                report.rank, report.independent, report.spanning
            );
            let mut json = json!({ "rank": report.rank, "independent": report.independent, "spanning": report.spanning });
            if let Some(m) = m {
                let c = decompose(&m.parse::<GaussianMatrix>()?)?;
                let names = ["sigma0", "sigma_x", "sigma_y", "sigma_z"];
                for (name, ck) in names.iter().zip(&c) {
                    let _ = writeln!(text, "{name}: {}", fmt_gaussian(ck));
                }
                json["decomposition"] = names.iter().zip(&c).map(|(n, ck)| (n.to_string(), gaussian(ck))).collect();
            }
            Ok(Output { text, json })
        }
        PauliOp::NormalizerCheck { matrix } => {
            let u: GaussianMatrix = matrix.parse()?;
            let n = match u.dim() {
                2 => 1,
                4 => 2,
                d => return Err(Error::Mismatch(format!("expected a 2x2 or 4x4 matrix, got {d}x{d}"))),
            };
            let report = is_in_normalizer(&u, n)?;
            let mut text = format!("member: {}\n", report.member);
            for c in &report.conjugations {
                let image = c.image.as_ref().map_or("not a Pauli element".to_string(), ToString::to_string);
                let _ = writeln!(text, "{} -> {image}", c.generator);
            }
            if let Some(w) = report.witness() {
                let _ = writeln!(text, "witness: {w}");
            }
            let conj: Vec<Value> = report
                .conjugations
                .iter()
                .map(|c| json!({ "generator": c.generator.to_string(), "image": c.image.as_ref().map(ToString::to_string) }))
                .collect();
            Ok(Output {
                text,
                json: json!({
                    "matrix": u.to_string(),
                    "n": n,
                    "member": report.member,
                    "conjugations": conj,
                    "witness": report.witness().map(ToString::to_string),
                }),
            })
        }
    }
}

fn law_text(name: &str, c: &LawCheck) -> String {
    match &c.witness {
        None => format!("{name}: yes\n"),
        Some(w) => format!("{name}: no (a = {}, b = {}, c = {}: {} != {})\n", w.a, w.b, w.c, w.lhs, w.rhs),
    }
}

fn lattice(args: LatticeArgs) -> Result<Output> {
    let (name, l) = match (args.subspace, args.named) {
        (Some(qd), _) => {
            let d = usize::try_from(qd[1]).map_err(|_| Error::ResourceLimit("dimension too large".into()))?;
            let s = subspace_lattice(prime(qd[0])?, d)?;
            (format!("subspace({}, {})", qd[0], qd[1]), s.lattice().clone())
        }
        (None, Some(named)) => named_lattice(&named)?,
        (None, None) => unreachable!("clap requires one source"),
    };
    let axioms = check_lattice_axioms(&l);
    let modular = is_modular(&l);
    let distributive = is_distributive(&l);
    let mut text = format!("lattice: {name}\nelements: {}\n", l.len());
    text += &law_text("lattice axioms", &axioms);
    text += &law_text("modular", &modular);
    text += &law_text("distributive", &distributive);
    Ok(Output {
        text,
        json: json!({
            "lattice": name,
            "size": l.len(),
            "elements": l.labels(),
            "axioms": axioms,
            "modular": modular,
            "distributive": distributive,
        }),
    })
}

fn named_lattice(named: &[String]) -> Result<(String, FiniteLattice)> {
    let k = || -> Result<u32> {
        named
            .get(1)
            .ok_or_else(|| Error::Parse(format!("lattice `{}` needs a size", named[0])))?
            .parse()
            .map_err(|_| Error::Parse(format!("invalid lattice size `{}`", named[1])))
    };
    let l = match named[0].as_str() {
        "n5" => FiniteLattice::pentagon(),
        "m3" => FiniteLattice::diamond(),
        "boolean" => FiniteLattice::boolean(k()?)?,
        "chain" => FiniteLattice::chain(k()? as usize)?,
        other => return Err(Error::Parse(format!("unknown lattice `{other}` (expected n5, m3, boolean K, chain K)"))),
    };
    if matches!(named[0].as_str(), "n5" | "m3") && named.len() > 1 {
        return Err(Error::Parse(format!("lattice `{}` takes no size", named[0])));
    }
    Ok((named.join(" "), l))
}

fn method_text(m: &Method) -> String {
    match m {
        Method::PartialSum { order } => format!("partial sum S_{order}"),
        Method::Borel { levels, nodes } => format!("borel ({nodes} nodes, {levels} halvings)"),
        Method::General { a } => format!("borel + {a}·e^(1/t)"),
    }
}

fn borel(args: BorelArgs) -> Result<Output> {
    let t_exact = parse_decimal(&args.t)?;
    if !t_exact.is_positive() {
        return Err(Error::Domain(format!("t must be positive, got {}", args.t)));
    }
    let t = real_from_rational(&t_exact);
    let tol = args.tolerance;
    if args.table {
        return borel_table(&t_exact, &t, args.order, tol);
    }
    let a = args.a.as_deref().map(parse_decimal).transpose()?;
    if args.order.is_some() && a.is_some() {
        return Err(Error::Parse("--order and --a cannot be combined".into()));
    }
    let h = residual_step(&t);
    let (result, residual): (SummationResult, Real) = match (args.order, &a) {
        (Some(n), _) => {
            let series = EulerSeries::new(n)?;
            let res = ode_residual(|s| Ok(series.eval_real(s)), &t, &h)?;
            (euler_series_partial(&t_exact, n)?, res)
        }
        (None, Some(a)) => {
            let a = real_from_rational(a);
            let res = ode_residual(|s| general_solution(s, &a, tol).map(|r| r.value), &t, &h)?;
            (general_solution(&t, &a, tol)?, res)
        }
        (None, None) => {
            let res = ode_residual(|s| borel_sum(s, tol).map(|r| r.value), &t, &h)?;
            (borel_sum(&t, tol)?, res)
        }
    };
    let value = fmt_real(&result.value, REAL_DIGITS);
    let err = to_f64(&result.error_estimate);
    let res = to_f64(&residual);
    Ok(Output {
        text: format!(
            "t = {}\nmethod = {}\nvalue = {value}\nerror_estimate = {err:.3e}\nresidual = {res:.3e}\n",
            fmt_rational(&t_exact),
            method_text(&result.method)
        ),
        json: json!({
            "t": rat(&t_exact),
            "method": result.method,
            "value": value,
            "error_estimate": err,
            "residual": res,
        }),
    })
}

/// Finite-difference step for the residual: `min(10⁻⁴, t/4)`.
fn residual_step(t: &Real) -> Real {
    let cap = real_int(1) / real_int(10_000);
    let quarter = t.clone() / real_int(4);
    if quarter < cap {
        quarter
    } else {
        cap
    }
}

fn borel_table(t_exact: &ExactRational, t: &Real, order: Option<usize>, tol: f64) -> Result<Output> {
    let y = borel_sum(t, tol)?;
    let m_star = optimal_truncation_index(t_exact)?;
    let order = order.unwrap_or((2 * m_star + 2).min(60));
    let series = EulerSeries::new(order)?;
    let mut text = format!("# t = {}, y_B = {}\nN\tS_N\t|S_N - y_B|\n", fmt_rational(t_exact), fmt_real(&y.value, REAL_DIGITS));
    let mut rows = Vec::new();
    let mut partial = BigRational::zero();
    let mut t_pow = t_exact.clone();
    for (n, c) in series.coefficients().iter().enumerate() {
        partial += BigRational::from_integer(c.clone()) * &t_pow;
        t_pow *= t_exact;
        let s = real_from_rational(&partial);
        let gap = abs_real(&s - &y.value);
        let (s, gap) = (fmt_real(&s, REAL_DIGITS), to_f64(&gap));
        let _ = writeln!(text, "{n}\t{s}\t{gap:.6e}");
        rows.push(json!({ "n": n, "partial_sum": s, "gap": gap }));
    }
    Ok(Output {
        text,
        json: json!({
            "t": rat(t_exact),
            "borel": fmt_real(&y.value, REAL_DIGITS),
            "optimal_order": m_star,
            "rows": rows,
        }),
    })
}

fn parse_sample(s: &str) -> Result<RationalPolynomial> {
    let (num, den) = match s.rsplit_once('/') {
        Some((n, d)) => (n, parse_integer(d)?),
        None => (s, BigInt::from(1)),
    };
    if den.is_zero() {
        return Err(Error::ZeroArgument(format!("denominator in `{s}`")));
    }
    let f: IntPolynomial = num.parse()?;
    Ok(RationalPolynomial::new(f.coeffs().iter().map(|c| BigRational::new(c.clone(), den.clone())).collect()))
}

fn random_samples(p: Prime, count: usize, seed: u64) -> Vec<RationalPolynomial> {
    let mut rng = StdRng::seed_from_u64(seed);
    let dens = [1, p.get() as i64, (p.get() * p.get()) as i64, 2, 3, 7];
    (0..count)
        .map(|_| {
            let deg = rng.gen_range(0..=3);
            let coeffs = (0..=deg)
                .map(|_| {
                    let num = rng.gen_range(-30i64..=30) * dens[rng.gen_range(0..3)];
                    BigRational::new(num.into(), dens[rng.gen_range(0..dens.len())].into())
                })
                .collect();
            RationalPolynomial::new(coeffs)
        })
        .collect()
}

fn sup_norm(f: &RationalPolynomial) -> ExactRational {
    f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(BigRational::zero)
}

fn seminorm(args: SeminormArgs) -> Result<Output> {
    let p = prime(args.prime.p)?;
    let samples = if args.polys.is_empty() {
        if args.samples > 200 {
            return Err(Error::ResourceLimit(format!("{} samples exceeds 200", args.samples)));
        }
        random_samples(p, args.samples, args.seed)
    } else {
        args.polys.iter().map(|s| parse_sample(s)).collect::<Result<Vec<_>>>()?
    };
    let report = match args.norm.as_str() {
        "gauss" => check_seminorm_axioms(|f| gauss_norm(f, p), &samples),
        "sup" => check_seminorm_axioms(sup_norm, &samples),
        other => return Err(Error::Parse(format!("unknown norm `{other}` (expected gauss or sup)"))),
    };
    let mut text = format!("norm: {} (p = {p}), {} samples\n", args.norm, samples.len());
    let mut checks = Vec::new();
    for c in &report.checks {
        let name = serde_json::to_value(c.axiom).expect("serializable");
        let name = name.as_str().expect("string");
        let witness: Option<Vec<String>> = c.witness.as_ref().map(|w| w.iter().map(ToString::to_string).collect());
        match &witness {
            None => {
                let _ = writeln!(text, "{name}: pass");
            }
            Some(w) => {
                let _ = writeln!(text, "{name}: FAIL ({})", w.join("; "));
            }
        }
        checks.push(json!({ "axiom": c.axiom, "passed": c.passed, "witness": witness }));
    }
    Ok(Output {
        text,
        json: json!({
            "norm": args.norm,
            "p": p.get(),
            "samples": samples.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "all_passed": report.all_passed(),
            "checks": checks,
        }),
    })
}
