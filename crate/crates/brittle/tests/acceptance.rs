//! The nine acceptance criteria, each run once with exact integer targets.
//! Prints one line per criterion and exits nonzero if any fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use brittle::verify::{
    check_fan_lower_bounds, check_k2n_family, check_observation_basic, check_oracle_equivalence, check_prop_example,
    check_topminor_monotonicity, check_trap_classification, default_corpus, fan_instances, subdivided_k4, Check,
    VerifyConfig, DEFAULT_SEED,
};
use brittle_core::constructions::named::*;
use brittle_core::parameters::{self, replay, Limits, Parameter};
use brittle_core::{Graph, GraphClass};

type Outcome = Result<(), Vec<String>>;
type Criterion = (&'static str, Duration, fn() -> Outcome);

fn value(p: Parameter, c: &GraphClass, g: &Graph) -> Result<usize, String> {
    let r = parameters::solve(p, c, g, &Limits::default()).map_err(|e| e.to_string())?;
    replay(c, g, &r).map_err(|e| format!("{} replay: {e:?}", p.symbol()))?;
    Ok(r.value)
}

fn expect(errors: &mut Vec<String>, what: &str, got: Result<usize, String>, ok: impl Fn(usize) -> bool) {
    match got {
        Ok(v) if ok(v) => {}
        Ok(v) => errors.push(format!("{what}: got {v}")),
        Err(e) => errors.push(format!("{what}: {e}")),
    }
}

fn from_checks(checks: Vec<Check>) -> Outcome {
    let failures: Vec<String> = checks
        .into_iter()
        .filter(|c| !c.passed)
        .flat_map(|c| c.failures.into_iter().map(move |f| format!("{}: {f}", c.name)))
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures)
    }
}

fn done(errors: Vec<String>) -> Outcome {
    if errors.is_empty() {
        Ok(())
    } else {
        Err(errors)
    }
}

fn fig3_contraction() -> Outcome {
    let f = GraphClass::forests();
    let g = theta_fig3();
    let gc = g.contract_edge(theta_fig3_edge()).unwrap();
    let mut errors = Vec::new();
    expect(&mut errors, "kappa(fig3)", value(Parameter::VertexBrittleness, &f, &g), |v| v == 2);
    expect(&mut errors, "kappa(fig3/e)", value(Parameter::VertexBrittleness, &f, &gc), |v| v == 3);
    expect(&mut errors, "nu(fig3)", value(Parameter::Capacity, &f, &g), |v| v == 1);
    expect(&mut errors, "nu(fig3/e)", value(Parameter::Capacity, &f, &gc), |v| v == 2);
    done(errors)
}

fn k2n() -> Outcome {
    from_checks(check_k2n_family(8, &Limits::default()))
}

fn prop_example() -> Outcome {
    let cfg = VerifyConfig::default();
    from_checks(check_prop_example(4, &cfg.limits, cfg.eta_budget))
}

fn subdivided_k4_eta() -> Outcome {
    let c = GraphClass::complete_free(4);
    let mut errors = Vec::new();
    expect(&mut errors, "eta(K4)", value(Parameter::EdgeBrittleness, &c, &complete(4)), |v| v == 3);
    expect(&mut errors, "eta(subdivided K4)", value(Parameter::EdgeBrittleness, &c, &subdivided_k4()), |v| v == 2);
    done(errors)
}

fn fig4_contraction() -> Outcome {
    let o = GraphClass::outerplanar();
    let g = fig4();
    let before = value(Parameter::EditDistance, &o, &g);
    let after = value(Parameter::EditDistance, &o, &g.contract_edge(fig4_edge()).unwrap());
    match (before, after) {
        (Ok(a), Ok(b)) if a < b => Ok(()),
        (a, b) => Err(vec![format!("e(fig4) = {a:?}, e(fig4/vw) = {b:?}")]),
    }
}

fn traps() -> Outcome {
    from_checks(check_trap_classification())
}

fn oracle_equivalence() -> Outcome {
    let classes = [GraphClass::forests(), GraphClass::diamond_free(), GraphClass::outerplanar()];
    from_checks(check_oracle_equivalence(&classes, &Limits::default()))
}

fn inequalities() -> Outcome {
    let classes = [GraphClass::forests(), GraphClass::diamond_free(), GraphClass::outerplanar()];
    let corpus = default_corpus(200, DEFAULT_SEED);
    let limits = Limits::default();
    let mut checks = check_observation_basic(&classes, &corpus, &limits);
    checks.extend(check_topminor_monotonicity(&classes, &corpus, &limits));
    from_checks(checks)
}

fn fans() -> Outcome {
    let mut checks = Vec::new();
    for (c, base, s) in fan_instances() {
        match check_fan_lower_bounds(&c, &base, s, 3, &Limits::default()) {
            Ok(more) => checks.extend(more),
            Err(e) => return Err(vec![e.to_string()]),
        }
    }
    from_checks(checks)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("fig3: kappa 2 -> 3 and nu 1 -> 2 under contraction", Duration::from_secs(1), fig3_contraction),
        ("K2,n for n = 3..8: kappa = 2, nu >= n/2", Duration::from_secs(10), k2n),
        ("G_l for l = 1..4: e = 1, eta >= l + 1", Duration::from_secs(180), prop_example),
        ("eta in K4-free: K4 is 3, subdivided K4 is 2", Duration::from_secs(1), subdivided_k4_eta),
        ("fig4: e grows under contraction", Duration::from_secs(10), fig4_contraction),
        ("trap classification for K3, D, K2,3", Duration::from_secs(300), traps),
        (
            "solvers equal brute force on connected graphs up to 6 vertices",
            Duration::from_secs(300),
            oracle_equivalence,
        ),
        ("basic inequalities and reduction monotonicity on the default corpus", Duration::from_secs(120), inequalities),
        ("fan lower bounds for l = 1..3", Duration::from_secs(120), fans),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let status = if outcome.is_ok() { "PASS" } else { "FAIL" };
        let slow = if took > *limit { format!(", over the {}s target", limit.as_secs()) } else { String::new() };
        println!("criterion {}: {status} {name} ({:.2}s{slow})", i + 1, took.as_secs_f64());
        if let Err(errors) = outcome {
            failed += 1;
            for e in errors {
                println!("    {e}");
            }
        }
    }
    println!("acceptance: {} of 9 criteria passed", 9 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
