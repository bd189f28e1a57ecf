//! Acceptance gate: every criterion runs at its stated tolerance and time
//! limit, printing one pass/fail line each. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use vogan::exact::{ExactMatrix, HalfInt};
use vogan::infinitesimal::build_vogan_variety;
use vogan::lfactor::{adjoint_exponents, is_regular_at_1, pole_order_at_1};
use vogan::lie::GroupType;
use vogan::orbits::is_open;
use vogan::params::{discrete_from_partition, parameter_to_point, StructuredParameter, Summand};
use vogan::verify::{run_suite, Bounds};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn so7_replay() -> Check {
    let p = discrete_from_partition(GroupType::so_odd(7), &[2, 4]).map_err(|e| e.to_string())?;
    let pt = parameter_to_point(&p).map_err(|e| e.to_string())?;
    ensure(pt.lambda.twice_values() == [3, 1, 1, -1, -1, -3], format!("λ = {:?}", pt.lambda.twice_values()))?;
    let support: BTreeSet<(usize, usize)> = pt.n.support().into_iter().map(|(i, j)| (i + 1, j + 1)).collect();
    let expected: BTreeSet<(usize, usize)> = [(1, 2), (2, 5), (3, 4), (5, 6)].into_iter().collect();
    ensure(support == expected, format!("support {support:?}"))?;
    let vv = build_vogan_variety(&pt.lambda);
    ensure(is_open(&vv, &pt.n).map_err(|e| e.to_string())?, "not open")?;
    let ae = adjoint_exponents(&vv, &pt.n).map_err(|e| e.to_string())?;
    let pole = pole_order_at_1(&ae).map_err(|e| e.to_string())?;
    ensure(pole == 0, format!("pole order {pole}"))
}

fn sp14_replay() -> Check {
    let p = discrete_from_partition(GroupType::sp(14), &[7, 5, 3]).map_err(|e| e.to_string())?;
    let pt = parameter_to_point(&p).map_err(|e| e.to_string())?;
    let diagonal = [6, 4, 4, 2, 2, 2, 0, 0, 0, -2, -2, -2, -4, -4, -6];
    ensure(pt.lambda.twice_values() == diagonal, format!("λ = {:?}", pt.lambda.twice_values()))?;
    let vv = build_vogan_variety(&pt.lambda);
    ensure(vv.contains_v(&pt.n), "x_φ not in V")?;
    let dec = vv.decomposition();
    // degree +1 blocks E_e → E_{e+1} for e = 2, 1, 0: (rows × cols)
    let mut shapes = Vec::new();
    for e in [2, 1, 0] {
        let src = dec.block(HalfInt::from_int(e)).ok_or("missing block")?;
        let dst = dec.block(HalfInt::from_int(e + 1)).ok_or("missing block")?;
        let rows: Vec<usize> = dst.collect();
        let cols: Vec<usize> = src.collect();
        let block = pt.n.submatrix(&rows, &cols);
        ensure(!block.is_zero(), format!("x_φ vanishes on E_{e} → E_{}", e + 1))?;
        shapes.push((rows.len(), cols.len()));
    }
    ensure(shapes == [(1, 2), (2, 3), (3, 3)], format!("block shapes {shapes:?}"))?;
    ensure(is_open(&vv, &pt.n).map_err(|e| e.to_string())?, "not open")
}

fn suite(name: &str, bounds: &Bounds) -> Check {
    let s = run_suite(name, bounds, 0, 0).map_err(|e| e.to_string())?;
    let checked: usize = s.properties.values().map(|c| c.pass + c.fail).sum();
    ensure(checked > 0, "suite checked nothing")?;
    ensure(
        s.passed(),
        format!("{} failures, first: {}", s.failures.len(), s.failures.first().cloned().unwrap_or_default()),
    )
}

fn steinberg() -> Check {
    let st = StructuredParameter::new(GroupType::gl(2), vec![Summand::new(HalfInt::ZERO, 2)]).map_err(|e| e.to_string())?;
    let pt = parameter_to_point(&st).map_err(|e| e.to_string())?;
    let vv = build_vogan_variety(&pt.lambda);
    let ae = adjoint_exponents(&vv, &pt.n).map_err(|e| e.to_string())?;
    ensure(ae.as_pairs() == [(0, 1), (2, 1)], format!("exponents {:?}", ae.as_pairs()))?;
    ensure(
        ae.to_string() == "(1 − q^{−s})^{−1}(1 − q^{−1−s})^{−1}",
        format!("L = {ae}"),
    )?;
    ensure(is_regular_at_1(&ae).map_err(|e| e.to_string())?, "Steinberg not regular at 1")?;
    let zero = adjoint_exponents(&vv, &ExactMatrix::zeros(2, 2)).map_err(|e| e.to_string())?;
    let pole = pole_order_at_1(&zero).map_err(|e| e.to_string())?;
    ensure(pole == 1, format!("N = 0 pole order {pole}"))
}

fn main() -> ExitCode {
    let criteria: Vec<(&str, Duration, Box<dyn Fn() -> Check>)> = vec![
        ("1 SO_7 replay: λ, x_φ support, open, pole order 0", Duration::from_secs(1), Box::new(so7_replay)),
        ("2 Sp_14 replay: diagonal, degree +1 block shapes, open", Duration::from_secs(1), Box::new(sp14_replay)),
        (
            "3 conormal fiber dimension = dim V − dim C on GL N̂ ≤ 6, spread ≤ 5",
            Duration::from_secs(300),
            Box::new(move || suite("fiber-dimension", &Bounds::default())),
        ),
        (
            "4 open (dimension) = open (conormal) = regular at s = 1, GL and classical N̂ ≤ 15",
            Duration::from_secs(300),
            Box::new(move || suite("open-equals-regular", &Bounds::default())),
        ),
        (
            "5 conormal duality: involution, open ↔ closed, equals MW, stable over 8 seeds",
            Duration::from_secs(300),
            Box::new(move || suite("duality-involution", &Bounds::default())),
        ),
        (
            "6 tempered ⟺ open ∧ Arthur type; tempered ψ strongly regular with y_ψ = 0",
            Duration::from_secs(120),
            Box::new(move || suite("tempered-iff-open-and-arthur", &Bounds::default())),
        ),
        (
            "7 discrete parameters are open, classical N̂ ≤ 15",
            Duration::from_secs(60),
            Box::new(move || suite("discrete-implies-open", &Bounds::default())),
        ),
        ("8 Steinberg adjoint L-factor and the N = 0 pole", Duration::from_secs(1), Box::new(steinberg)),
        (
            "9 unions of open tempered parameters stay open, combined N̂ ≤ 8",
            Duration::from_secs(60),
            Box::new(move || suite("tempered-union-open", &Bounds::default())),
        ),
    ];
    let mut failed = 0;
    for (name, limit, run) in &criteria {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let verdict = match (&result, elapsed <= *limit) {
            (Ok(()), true) => "PASS".to_string(),
            (Ok(()), false) => format!("FAIL (took {elapsed:.2?}, limit {limit:?})"),
            (Err(msg), _) => format!("FAIL ({msg})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {name}: {verdict} [{elapsed:.2?}]");
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
