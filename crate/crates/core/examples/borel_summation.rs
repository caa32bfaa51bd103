//! The divergent Euler series: optimal truncation against its Borel sum.

use padiclab::arith::parse_rational;
use padiclab::resurgence::{
    abs_real, borel_sum, parse_decimal, euler_series_partial, fmt_real, ode_residual, optimal_truncation_index, real_from_rational,
    symbolic_series_residual, to_f64, DEFAULT_TOLERANCE,
};

fn main() -> padiclab::Result<()> {
    println!("(t - S_4) - t^2 S_4' = {}", symbolic_series_residual(4)?);
    for s in ["0.05", "0.1", "0.2", "0.5"] {
        let t = parse_decimal(s)?;
        let tr = real_from_rational(&t);
        let y = borel_sum(&tr, DEFAULT_TOLERANCE)?;
        let m = optimal_truncation_index(&t)?;
        let partial = euler_series_partial(&t, m)?;
        let gap = to_f64(&abs_real(&partial.value - &y.value));
        let h = real_from_rational(&parse_rational("1/10000")?);
        let residual = ode_residual(|u| Ok(borel_sum(u, DEFAULT_TOLERANCE)?.value), &tr, &h)?;
        println!(
            "t={s:<5} y_B={}  m*={m:<3} |S_m* - y_B|={gap:.3e}  e^(-1/t)={:.3e}  residual={:.1e}",
            fmt_real(&y.value, 20),
            (-1.0 / to_f64(&tr)).exp(),
            to_f64(&residual)
        );
    }
    Ok(())
}
