//! One PASS/FAIL line per acceptance criterion. Exits nonzero if any fails.

mod common;

use std::process::{Command, ExitCode, Stdio};
use std::time::Instant;

use proptest::strategy::{Strategy, ValueTree};
use proptest::test_runner::TestRunner;
use qloop::exactalg::{LaurentV, RatV, Rational};
use qloop::harness::{
    divided_root_samples, enumerate_e_monomials, verify_dual_bases, verify_duality, verify_key_specialization,
    verify_oracle, with_threads, DecompStrategy, FactorOrder, GramRow, WindowConfig,
};
use qloop::pairing::{pair, FPBWDMonomial};
use qloop::polyring::DegreeVector;
use qloop::shuffle::{
    build_e_pbwd, check_relations, divided_power, e_root, e_tilde, gen_e, star, wheel_check, Decomposition, Root,
    RootSystemData,
};
use qloop::special::is_good;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn window(n: usize, s: DecompStrategy) -> WindowConfig {
    WindowConfig::new(n, 3, -2, 2, s).unwrap()
}

fn relations() -> Outcome {
    let mut checked = 0;
    for n in 2..=4 {
        let rep = check_relations(&RootSystemData::sl(n), -1..=1).map_err(err)?;
        ensure(rep.passed(), format!("n={n}: {:?}", rep.counterexample))?;
        checked += rep.checked;
    }
    Ok(format!("{checked} identities for n = 2, 3, 4"))
}

fn shuffle_kernel() -> Outcome {
    let mut runner = TestRunner::deterministic();
    let strat = common::triple();
    for t in 0..100 {
        let (a, b, c) = strat.new_tree(&mut runner).map_err(err)?.current();
        let left = star(&star(&a, &b).map_err(err)?, &c).map_err(err)?;
        let right = star(&a, &star(&b, &c).map_err(err)?).map_err(err)?;
        ensure(left == right, format!("triple {t} is not associative"))?;
    }
    let mut wheels = 0;
    for n in 2..=3 {
        let cfg = window(n, DecompStrategy::Zero);
        for d in cfg.degrees() {
            let units = d.total() as i64;
            for t in -2 * units..=2 * units {
                for m in enumerate_e_monomials(&cfg, &d, t) {
                    let x = build_e_pbwd(n, &m).map_err(err)?;
                    ensure(wheel_check(&x), format!("wheel condition fails for {m}"))?;
                    wheels += 1;
                }
            }
        }
    }
    let sq = divided_power(&gen_e(2, 1, 0).map_err(err)?, 2).map_err(err)?;
    let half = RatV::from_rational(Rational::new(1.into(), 2.into())).shift(-1);
    let expected = qloop::shuffle::ShuffleElement::constant(2, DegreeVector(vec![2]), half);
    ensure(sq == expected, format!("divided square is {}", sq.numerator()))?;
    Ok(format!(
        "100 associative triples, {wheels} wheel checks, e_0^(2) = v^-1/2"
    ))
}

fn good_elements() -> Outcome {
    let cfg = WindowConfig::new(3, 3, -2, 2, DecompStrategy::Zero).map_err(err)?;
    let samples = divided_root_samples(&cfg, 2).map_err(err)?;
    for s in &samples {
        ensure(
            is_good(&s.element).map_err(err)?.good,
            format!("{} is not good", s.label),
        )?;
    }
    let rep = is_good(&common::non_good()).map_err(err)?;
    let cert = rep.certificate.ok_or("fixture has no certificate")?;
    let plan = cert.plan.ok_or("fixture failed integrality instead of divisibility")?;
    let want = [("1-2".to_string(), 1usize)].into_iter().collect();
    ensure(!rep.good && plan.to_map() == want, format!("certificate plan {plan}"))?;
    Ok(format!(
        "{} divided root powers good; fixture certificate {plan}",
        samples.len()
    ))
}

fn base_cases() -> Outcome {
    let a1 = Root::simple(1);
    for n in 2..=3 {
        for r in -3..=3 {
            let f = |s: i64| FPBWDMonomial::new(vec![Decomposition::new(a1, vec![s]).unwrap()]).unwrap();
            let p = pair(&gen_e(n, 1, r).map_err(err)?, &f(-r)).map_err(err)?;
            ensure(p.is_one(), format!("n={n} r={r}: generator pairing {p}"))?;
            let et = e_tilde(n, &Decomposition::new(a1, vec![r]).unwrap()).map_err(err)?;
            let p = pair(&et, &f(-r)).map_err(err)?;
            ensure(p == RatV::v_minus_v_inv(), format!("n={n} r={r}: rescaled pairing {p}"))?;
            let off = pair(&gen_e(n, 1, r).map_err(err)?, &f(1 - r)).map_err(err)?;
            ensure(off.is_zero(), format!("mode mismatch gives {off}"))?;
        }
    }
    let x = e_root(3, Root::new(1, 2).unwrap(), 0).map_err(err)?;
    let m = FPBWDMonomial::new(vec![Decomposition::new(Root::simple(1), vec![0]).unwrap()]).unwrap();
    ensure(pair(&x, &m).map_err(err)?.is_zero(), "degree mismatch is not zero")?;
    Ok("|r| <= 3, n = 2, 3".into())
}

fn oracle() -> Outcome {
    let mut compared = 0;
    let mut nonzero = 0;
    for n in 2..=3 {
        let rep = verify_oracle(&window(n, DecompStrategy::Zero), 2).map_err(err)?;
        ensure(rep.passed(), rep.mismatch.clone().unwrap_or_default())?;
        compared += rep.compared;
        nonzero += rep.nonzero;
    }
    Ok(format!("{compared} pairs equal ({nonzero} nonzero)"))
}

fn key_spec() -> Outcome {
    let mut cases = 0;
    for n in 3..=4 {
        let rep = verify_key_specialization(n, &[-1, 0, 2], &[-3, -4], 2).map_err(err)?;
        ensure(rep.passed(), rep.mismatch.clone().unwrap_or_default())?;
        cases += rep.cases;
    }
    Ok(format!("{cases} numerators, n = 3 and 4"))
}

fn duality_configs() -> Vec<WindowConfig> {
    let mut out = Vec::new();
    for n in 2..=3 {
        for s in [DecompStrategy::Zero, DecompStrategy::Slope] {
            out.push(window(n, s));
        }
    }
    out
}

fn duality_window() -> Outcome {
    let mut checked = 0;
    for cfg in duality_configs() {
        let rep = verify_duality(&cfg, &[]).map_err(err)?;
        ensure(
            rep.passed(),
            format!("n={} {}: {:?}", cfg.n, cfg.strategy, rep.summary.first_violation),
        )?;
        ensure(rep.summary.non_good_rows == 0, "an enumerated E-monomial is not good")?;
        checked += rep.summary.checked;
    }
    Ok(format!(
        "{checked} Gram entries Laurent over n = 2, 3 and both strategies"
    ))
}

fn negative_control() -> Outcome {
    let cfg = window(3, DecompStrategy::Zero);
    let row = GramRow {
        label: "non_good".into(),
        element: common::non_good(),
    };
    let rep = verify_duality(&cfg, &[row]).map_err(err)?;
    let vmv = LaurentV::v_minus_v_inv();
    let bad = rep
        .blocks
        .iter()
        .flat_map(|b| b.entries.iter().flatten())
        .filter(|e| e.den().div_exact(&vmv).is_some())
        .count();
    ensure(!rep.passed() && bad > 0, "fixture row produced no non-polynomial entry")?;
    let status = Command::new(env!("CARGO_BIN_EXE_qloop"))
        .args([
            "verify",
            "duality",
            "--n",
            "3",
            "--max-degree",
            "3",
            "--modes",
            "-2..2",
            "--extra-row",
        ])
        .arg(common::fixture_path())
        .args([
            "--out",
            std::env::temp_dir().join("qloop_negative.json").to_str().unwrap(),
        ])
        .stderr(Stdio::null())
        .status()
        .map_err(err)?;
    ensure(status.code() == Some(1), format!("CLI exit status {status}"))?;
    Ok(format!("{bad} entries with (v - v^-1) in the denominator; CLI exit 1"))
}

fn dual_bases() -> Outcome {
    let cfg = WindowConfig::new(2, 2, -2, 2, DecompStrategy::Slope).map_err(err)?;
    let rep = verify_dual_bases(&cfg, 2, FactorOrder::EDecreasing).map_err(err)?;
    let bad: Vec<_> = rep.blocks.iter().filter(|b| !b.permutation_monomial).collect();
    ensure(
        bad.is_empty(),
        format!(
            "block {:?}@{} not permutation-monomial",
            bad.first().map(|b| &b.degree),
            bad.first().map_or(0, |b| b.total_mode)
        ),
    )?;
    for b in rep.blocks.iter().filter(|b| b.degree == [1]) {
        ensure(
            b.entries.len() == 1 && b.entries[0][0].is_one(),
            "degree-1 entry is not 1",
        )?;
    }
    let exps: std::collections::BTreeSet<(i8, i64)> =
        rep.normalizations.iter().map(|n| (n.sign, n.v_exponent)).collect();
    Ok(format!(
        "{} blocks; observed (sign, v-exponent) {exps:?}",
        rep.blocks.len()
    ))
}

fn determinism() -> Outcome {
    for cfg in duality_configs() {
        let a = with_threads(Some(1), || verify_duality(&cfg, &[]))
            .map_err(err)?
            .map_err(err)?;
        let b = with_threads(Some(4), || verify_duality(&cfg, &[]))
            .map_err(err)?
            .map_err(err)?;
        ensure(
            a.to_json() == b.to_json(),
            format!("n={} {} reports differ", cfg.n, cfg.strategy),
        )?;
    }
    Ok("1 and 4 worker threads give identical reports".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("relations", relations),
        ("shuffle kernel", shuffle_kernel),
        ("good elements", good_elements),
        ("pairing base cases", base_cases),
        ("oracle equivalence", oracle),
        ("key specialization", key_spec),
        ("duality window", duality_window),
        ("negative control", negative_control),
        ("dual-basis structure", dual_bases),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let out = f();
        let secs = start.elapsed().as_secs_f64();
        match out {
            Ok(detail) => println!("criterion {:>2} {name}: PASS ({detail}; {secs:.1}s)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({why}; {secs:.1}s)", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
