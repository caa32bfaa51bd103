//! One line per acceptance criterion: `[PASS|FAIL] n name (elapsed / limit) detail`.
//!
//! Set `PADICLAB_REGENERATE_GOLDEN=1` to rewrite `tests/golden/demo.txt`.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use padiclab::cli::dispatch;
use padiclab::codes::{decode, encode, farey_bound};
use padiclab::hensel::{hensel_lift, roots_mod_p};
use padiclab::padic::{norm, to_expansion_string, PadicNumber, RationalPlace};
use padiclab::places::{product_formula_check, product_formula_check_ff, FqPolynomial, RationalFunction};
use padiclab::poly::IntPolynomial;
use padiclab::quantum::{
    is_distributive, is_in_normalizer, is_modular, pauli_basis_check, pauli_group_order, subspace_lattice,
    FiniteLattice, GaussianMatrix, PauliElement,
};
use padiclab::resurgence::{
    abs_real, borel_sum, euler_series_partial, ode_residual, optimal_truncation_index, parse_decimal,
    real_from_rational, symbolic_series_residual, to_f64, DEFAULT_TOLERANCE,
};
use padiclab::{ExactRational, Prime};

type Outcome = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn prime(p: u64) -> Prime {
    Prime::new(p).unwrap()
}

fn criterion_1() -> Outcome {
    let mut worst = Duration::ZERO;
    for (p, expected) in [(2, "0,0011011"), (3, "0,0022"), (5, "1,331")] {
        let start = Instant::now();
        let x = PadicNumber::from_integer(&BigInt::from(216), prime(p), 8).map_err(|e| e.to_string())?;
        let s = to_expansion_string(&x).map_err(|e| e.to_string())?;
        worst = worst.max(start.elapsed());
        ensure(s == expected, || format!("p={p}: got {s}, expected {expected}"))?;
    }
    ensure(worst < Duration::from_millis(1), || format!("slowest expansion took {worst:?}"))?;
    Ok(format!("slowest expansion {worst:?}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let f: IntPolynomial = "x^2-2".parse().map_err(|e: padiclab::Error| e.to_string())?;
    let p = prime(7);
    let roots = roots_mod_p(&f, p).map_err(|e| e.to_string())?;
    let trace = hensel_lift(&f, &BigInt::from(3), p, 2).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(roots == [3, 4], || format!("roots {roots:?}"))?;
    ensure(trace.digits == [3, 1, 2], || format!("digits {:?}", trace.digits))?;
    let residues: Vec<BigInt> = [3, 10, 108].into_iter().map(BigInt::from).collect();
    ensure(trace.residues == residues, || format!("residues {:?}", trace.residues))?;
    // independent check: x^2 - 2 evaluated directly, modulus 7^(i+1)
    for (i, x) in trace.residues.iter().enumerate() {
        let m = BigInt::from(7).pow(i as u32 + 1);
        ensure(((x * x - BigInt::from(2)) % &m).is_zero(), || format!("f({x}) not divisible by {m}"))?;
    }
    ensure(elapsed < Duration::from_millis(1), || format!("took {elapsed:?}"))?;
    Ok(format!("roots {{3,4}}, residues 3,10,108 in {elapsed:?}"))
}

fn random_rational(rng: &mut StdRng, bound: i64) -> ExactRational {
    loop {
        let n: i64 = rng.gen_range(-bound..=bound);
        let d: i64 = rng.gen_range(1..=bound);
        if n != 0 {
            return BigRational::new(n.into(), d.into());
        }
    }
}

fn criterion_3() -> Outcome {
    let mut rng = StdRng::seed_from_u64(3);
    for _ in 0..10_000 {
        let a = random_rational(&mut rng, 1_000_000_000_000);
        let product = product_formula_check(&a).map_err(|e| e.to_string())?;
        ensure(product.is_one(), || format!("product for {a} is {product}"))?;
    }
    Ok("10000 rationals, all products exactly 1".into())
}

fn random_fq(rng: &mut StdRng, p: Prime) -> FqPolynomial {
    loop {
        let degree = rng.gen_range(0..=8);
        let coeffs: Vec<u64> = (0..=degree).map(|_| rng.gen_range(0..p.get())).collect();
        let f = FqPolynomial::new(p, coeffs);
        if !f.is_zero() {
            return f;
        }
    }
}

fn criterion_4() -> Outcome {
    let mut rng = StdRng::seed_from_u64(4);
    for i in 0..1000 {
        let p = prime([2, 3, 5][i % 3]);
        let f = RationalFunction::new(random_fq(&mut rng, p), random_fq(&mut rng, p)).map_err(|e| e.to_string())?;
        let product = product_formula_check_ff(&f).map_err(|e| e.to_string())?;
        ensure(product.is_one(), || format!("product for {f} over F_{p} is {product}"))?;
    }
    Ok("1000 rational functions over F_2, F_3, F_5".into())
}

fn criterion_5() -> Outcome {
    let mut rng = StdRng::seed_from_u64(5);
    let mut forced = 0;
    for i in 0..10_000 {
        let place = RationalPlace::Prime(prime([2, 3, 5, 7, 11][i % 5]));
        // include zero and shared factors so equal norms and cancellations occur
        let mut a = random_rational(&mut rng, 100_000);
        let mut b = random_rational(&mut rng, 100_000);
        match i % 7 {
            0 => a = BigRational::zero(),
            1 => b = -a.clone() * BigRational::from_integer(rng.gen_range(1..50).into()),
            _ => {}
        }
        let (na, nb, nab) = (norm(&a, place), norm(&b, place), norm(&(&a + &b), place));
        let max = na.clone().max(nb.clone());
        ensure(nab <= max, || format!("|{a} + {b}| = {nab} > {max} at {place}"))?;
        if na != nb {
            forced += 1;
            ensure(nab == max, || format!("|{a} + {b}| = {nab} != {max} at {place}"))?;
        }
    }
    Ok(format!("10000 pairs, {forced} with forced equality"))
}

fn criterion_6() -> Outcome {
    let (p, r) = (prime(5), 4);
    let bound: i64 = farey_bound(p, r).try_into().unwrap();
    ensure(bound == 17, || format!("Farey bound {bound}"))?;
    let mut in_box = Vec::new();
    for c in 1..=bound {
        if c % 5 == 0 {
            continue;
        }
        for b in -bound..=bound {
            if b.gcd(&c) == 1 || (b == 0 && c == 1) {
                in_box.push(BigRational::new(b.into(), c.into()));
            }
        }
    }
    for q in &in_box {
        let code = encode(q, p, r).map_err(|e| e.to_string())?;
        let back = decode(&code).map_err(|e| format!("{q}: {e}"))?;
        ensure(&back == q, || format!("{q} decoded as {back}"))?;
    }

    let inside = |q: &ExactRational| {
        q.numer().abs() <= BigInt::from(bound) && *q.denom() <= BigInt::from(bound) && !(q.denom() % 5u32).is_zero()
    };
    let mut rng = StdRng::seed_from_u64(6);
    let mut decoded = 0;
    for i in 0..1000 {
        let a = &in_box[rng.gen_range(0..in_box.len())];
        let b = &in_box[rng.gen_range(0..in_box.len())];
        let (ca, cb) = (encode(a, p, r).unwrap(), encode(b, p, r).unwrap());
        let (got, exact) = match i % 4 {
            0 => (ca.add(&cb), a + b),
            1 => (ca.sub(&cb), a - b),
            2 => (ca.mul(&cb), a * b),
            _ if !b.is_zero() && !(b.numer() % 5u32).is_zero() => (ca.div(&cb), a / b),
            _ => (ca.mul(&cb), a * b),
        };
        let got = got.map_err(|e| e.to_string())?;
        ensure(got == encode(&exact, p, r).unwrap(), || format!("code of {a} op {b} differs from code of {exact}"))?;
        if inside(&exact) {
            decoded += 1;
            ensure(decode(&got).ok().as_ref() == Some(&exact), || format!("{a} op {b} did not decode to {exact}"))?;
        }
    }
    Ok(format!("{} fractions round-trip; 1000 operations, {decoded} results inside the box decoded", in_box.len()))
}

fn criterion_7() -> Outcome {
    for (q, d, size) in [(2, 2, 5), (3, 2, 6)] {
        let s = subspace_lattice(prime(q), d).map_err(|e| e.to_string())?;
        ensure(s.len() == size, || format!("({q},{d}) has {} elements", s.len()))?;
        let modular = is_modular(s.lattice());
        ensure(modular.holds, || format!("({q},{d}) not modular: {:?}", modular.witness))?;
        let dist = is_distributive(s.lattice());
        let w = dist.witness.ok_or_else(|| format!("({q},{d}) reported distributive"))?;
        let lines: Vec<usize> = [&w.a, &w.b, &w.c].iter().filter_map(|l| s.lattice().index_of(l)).collect();
        ensure(
            lines.len() == 3
                && lines.iter().all(|&i| s.subspaces()[i].dim() == 1)
                && lines[0] != lines[1] && lines[1] != lines[2] && lines[0] != lines[2],
            || format!("({q},{d}) witness {w:?} is not three distinct lines"),
        )?;
    }
    let n5 = is_modular(&FiniteLattice::pentagon());
    let w = n5.witness.ok_or("N5 reported modular")?;
    Ok(format!("both subspace lattices modular, N5 witness (a={}, b={}, c={})", w.a, w.b, w.c))
}

fn criterion_8() -> Outcome {
    let orders = (pauli_group_order(1).map_err(|e| e.to_string())?, pauli_group_order(2).map_err(|e| e.to_string())?);
    ensure(orders == (16, 64), || format!("orders {orders:?}"))?;

    let one_qubit: Vec<PauliElement> = (0..16u8)
        .map(|k| PauliElement::new(k / 4, vec![k & 1 == 1], vec![k & 2 == 2]).unwrap())
        .collect();
    for a in &one_qubit {
        for b in &one_qubit {
            let direct = a.to_matrix().mul(&b.to_matrix()).unwrap();
            ensure(a.mul(b).unwrap().to_matrix() == direct, || format!("{a}·{b}"))?;
        }
    }
    let mut rng = StdRng::seed_from_u64(8);
    let mut random = || {
        let x = vec![rng.gen(), rng.gen()];
        let z = vec![rng.gen(), rng.gen()];
        PauliElement::new(rng.gen_range(0..4), x, z).unwrap()
    };
    for _ in 0..1000 {
        let (a, b) = (random(), random());
        ensure(a.mul(&b).unwrap().to_matrix() == a.to_matrix().mul(&b.to_matrix()).unwrap(), || format!("{a}·{b}"))?;
    }

    let basis = pauli_basis_check();
    ensure(basis.rank == 4 && basis.independent && basis.spanning, || format!("{basis:?}"))?;

    let member = |m: &str| -> Result<bool, String> {
        let u: GaussianMatrix = m.parse().map_err(|e: padiclab::Error| e.to_string())?;
        is_in_normalizer(&u, 1).map(|r| r.member).map_err(|e| e.to_string())
    };
    ensure(member("1,1;1,-1")?, || "Hadamard rejected".into())?;
    ensure(member("1,0;0,i")?, || "phase gate rejected".into())?;
    ensure(!member("1,0;0,3/5+4/5i")?, || "diag(1, (3+4i)/5) accepted".into())?;
    Ok("orders 16/64, 256 + 1000 products match matrices, basis ok, H and S pass, diag(1,(3+4i)/5) fails".into())
}

/// `e^x E₁(x)` by the continued fraction
/// `1/(x+1− 1²/(x+3− 2²/(x+5− …)))`, evaluated with modified Lentz.
fn scaled_e1(x: f64) -> f64 {
    let tiny = 1e-300;
    let mut b = x + 1.0;
    let mut c = 1.0 / tiny;
    let mut d = 1.0 / b;
    let mut h = d;
    for i in 1..10_000 {
        let an = -((i * i) as f64);
        b += 2.0;
        d = 1.0 / (an * d + b);
        c = b + an / c;
        let delta = c * d;
        h *= delta;
        if (delta - 1.0).abs() < 1e-16 {
            break;
        }
    }
    h
}

fn criterion_9() -> Outcome {
    let mut worst_rel: f64 = 0.0;
    let mut worst_res: f64 = 0.0;
    let h = real_from_rational(&BigRational::new(1.into(), 10_000.into()));
    for s in ["0.1", "0.2", "0.5", "1.0"] {
        let t = real_from_rational(&parse_decimal(s).unwrap());
        let y = to_f64(&borel_sum(&t, DEFAULT_TOLERANCE).map_err(|e| e.to_string())?.value);
        let oracle = scaled_e1(1.0 / to_f64(&t));
        let rel = ((y - oracle) / oracle).abs();
        worst_rel = worst_rel.max(rel);
        ensure(rel <= 1e-8, || format!("t={s}: borel {y} vs oracle {oracle}, rel {rel:e}"))?;
        let residual = to_f64(
            &ode_residual(|u| borel_sum(u, DEFAULT_TOLERANCE).map(|r| r.value), &t, &h).map_err(|e| e.to_string())?,
        );
        worst_res = worst_res.max(residual);
        ensure(residual <= 1e-6, || format!("t={s}: residual {residual:e}"))?;
    }

    // (t − S_N) − t²S_N' from exact coefficients, compared with the closed form
    for n in 0..=12usize {
        let got = symbolic_series_residual(n).map_err(|e| e.to_string())?;
        let fact: BigInt = (1..=n as u64 + 1).map(BigInt::from).product();
        let sign = if n % 2 == 0 { -1 } else { 1 };
        let mut coeffs = vec![BigInt::zero(); n + 3];
        coeffs[n + 2] = fact * sign;
        ensure(got == IntPolynomial::new(coeffs), || format!("N={n}: residual {got}"))?;
    }

    let mut worst_c: f64 = 0.0;
    for s in ["0.05", "0.1", "0.2", "0.3"] {
        let tq = parse_decimal(s).unwrap();
        let t = real_from_rational(&tq);
        let m = optimal_truncation_index(&tq).map_err(|e| e.to_string())?;
        let partial = euler_series_partial(&tq, m).map_err(|e| e.to_string())?.value;
        let y = borel_sum(&t, DEFAULT_TOLERANCE).map_err(|e| e.to_string())?.value;
        let gap = to_f64(&abs_real(partial - y));
        let c = gap / (-1.0 / to_f64(&t)).exp();
        worst_c = worst_c.max(c);
        ensure(c <= 10.0, || format!("t={s}: gap {gap:e} is {c} e^(-1/t)"))?;
    }
    Ok(format!(
        "oracle rel err <= {worst_rel:.1e}, residual <= {worst_res:.1e}, N<=12 symbolic exact, gap <= {worst_c:.2} e^(-1/t)"
    ))
}

const DEMO: &[&[&str]] = &[
    &["expand", "216", "--p", "2"],
    &["expand", "216", "--p", "5", "--r", "4"],
    &["--json", "expand", "-7/50", "--p", "5"],
    &["valuation", "63/550", "--p", "5"],
    &["norm", "-250/3", "--p", "inf"],
    &["hensel", "--poly", "x^2-2", "--p", "7", "--k", "2", "--x0", "3"],
    &["--json", "hensel", "--poly", "x^3 - 2x + 5", "--p", "11", "--k", "4"],
    &["sqrt", "2", "--p", "7", "--r", "6"],
    &["product-formula", "63/550"],
    &["--json", "product-formula", "x^3+2x+1 / x^2+1", "--function-field", "--p", "3"],
    &["code", "encode", "1/3", "--p", "5", "--r", "4"],
    &["code", "decode", "417", "--p", "5", "--r", "4"],
    &["--json", "code", "div", "2/3", "-1/4", "--p", "5", "--r", "4"],
    &["pauli", "mul", "XZ", "ZX"],
    &["pauli", "order", "--n", "2"],
    &["pauli", "basis-check", "--decompose", "1,2;3,4"],
    &["--json", "pauli", "normalizer-check", "--matrix", "1,0,0,0;0,1,0,0;0,0,0,1;0,0,1,0"],
    &["pauli", "normalizer-check", "--matrix", "1,0;0,3/5+4/5i"],
    &["lattice", "check", "--subspace", "2", "2"],
    &["--json", "lattice", "check", "--named", "n5"],
    &["borel", "--t", "0.1"],
    &["--json", "borel", "--t", "0.5", "--a", "1"],
    &["borel", "--t", "0.3", "--table"],
    &["seminorm-check", "--p", "3", "--samples", "6", "--seed", "2"],
    &["--json", "seminorm-check", "--p", "3", "--norm", "sup", "--poly", "x+1", "--poly", "x-1 / 3"],
    &["expand", "1/5", "--p", "5"],
    &["--json", "pauli", "order", "--n", "4"],
    &["frobnicate"],
];

fn run_demo() -> String {
    let mut out = String::new();
    for args in DEMO {
        let r = dispatch(std::iter::once("padiclab").chain(args.iter().copied()));
        let _ = writeln!(out, "$ padiclab {}", args.join(" "));
        out.push_str(&r.stdout);
        if !r.stderr.is_empty() {
            let _ = writeln!(out, "[stderr]");
            out.push_str(&r.stderr);
        }
        let _ = writeln!(out, "[exit {}]\n", r.exit_code);
    }
    out
}

fn criterion_10() -> Outcome {
    let golden = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden/demo.txt");
    let first = run_demo();
    let second = run_demo();
    ensure(first == second, || "two runs of the demo differ".into())?;
    if std::env::var_os("PADICLAB_REGENERATE_GOLDEN").is_some() {
        std::fs::create_dir_all(golden.parent().unwrap()).map_err(|e| e.to_string())?;
        std::fs::write(&golden, &first).map_err(|e| e.to_string())?;
    }
    let expected = std::fs::read_to_string(&golden).map_err(|e| format!("{}: {e}", golden.display()))?;
    if first != expected {
        let line = first.lines().zip(expected.lines()).position(|(a, b)| a != b).unwrap_or(0) + 1;
        return Err(format!("output differs from golden file at line {line}"));
    }
    Ok(format!("{} commands, {} bytes, identical across runs and to the golden file", DEMO.len(), first.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("expand 216 reproduces the three expansions", Duration::from_millis(1), criterion_1),
        ("x^2-2 lifts from 3 mod 7 to 108 mod 343", Duration::from_millis(1), criterion_2),
        ("product formula over Q", Duration::from_secs(10), criterion_3),
        ("product formula over F_p(x)", Duration::from_secs(30), criterion_4),
        ("ultrametric inequality", Duration::from_secs(10), criterion_5),
        ("Hensel code round trip and homomorphism", Duration::from_secs(10), criterion_6),
        ("subspace lattices modular, not distributive; N5 not modular", Duration::from_secs(1), criterion_7),
        ("Pauli group, symplectic products and normalizer", Duration::from_secs(5), criterion_8),
        ("Borel sum, residuals and superasymptotics", Duration::from_secs(10), criterion_9),
        ("CLI demo is deterministic and matches the golden file", Duration::from_secs(5), criterion_10),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, e),
        };
        failures += usize::from(!ok);
        println!(
            "[{}] {:>2} {name} ({:.3?} / {limit:?}) {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed
        );
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
