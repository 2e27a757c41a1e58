use dforms::identities::{registry, run_identity, select, Expectation, Fault, SuiteConfig};

#[test]
fn every_identity_holds_on_default_suite() {
    let cfg = SuiteConfig::default();
    let mut failures = vec![];
    for id in registry() {
        let out = run_identity(&id, &cfg);
        println!(
            "{:<40} random {:>6} exhaustive {:>7} {}",
            id.name,
            out.random_cases,
            out.exhaustive_cases,
            if out.holds() { "holds" } else { "refuted" }
        );
        match (id.expectation, &out.counterexample) {
            (Expectation::Holds, Some(ce)) => failures.push(format!("{}:\n{ce}", id.name)),
            (Expectation::KnownDefect, None) => failures.push(format!("{}: printed statement not refuted", id.name)),
            _ => {}
        }
    }
    assert!(failures.is_empty(), "{}", failures.join("\n\n"));
}

#[test]
fn every_fault_is_caught() {
    for fault in [Fault::NegateAdjointBianchi, Fault::FlipBianchiSign, Fault::SkipAltNormalization] {
        let cfg = SuiteConfig {
            cases: 40,
            fault: Some(fault),
            ..SuiteConfig::default()
        };
        let caught: Vec<_> = registry()
            .iter()
            .filter(|id| id.expectation == Expectation::Holds)
            .map(|id| run_identity(id, &cfg))
            .filter(|o| !o.holds())
            .map(|o| o.name)
            .collect();
        assert!(!caught.is_empty(), "{fault:?} went unnoticed");
    }
}

#[test]
fn scope_selection() {
    let ids = select(Some("mu-star")).unwrap();
    assert!(ids.iter().all(|i| i.scope == "mu-star") && ids.len() >= 4);
    let cfg = SuiteConfig {
        dims: vec![6],
        ..SuiteConfig::default()
    };
    for id in &ids {
        let out = run_identity(id, &cfg);
        assert!(out.holds(), "{}", id.name);
    }
}
