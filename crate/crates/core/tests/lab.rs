use epg::epg::is_nilpotent;
use epg::lab::*;
use epg::Error;

#[test]
fn corpus_specs_are_canonical_and_unique() {
    let mut seen = std::collections::HashSet::new();
    for e in corpus() {
        let printed = epg::expr::parse(&e.spec).unwrap().to_string();
        assert_eq!(printed, e.spec);
        assert!(seen.insert(e.spec.clone()), "duplicate {}", e.spec);
    }
}

#[test]
fn corpus_has_enough_nilpotent_groups() {
    let n = entries_up_to(Tier::Fast)
        .filter(|e| {
            let a = Analysis::build(&e.spec, Tier::Fast, usize::MAX).unwrap();
            is_nilpotent(&a.group)
        })
        .count();
    assert!(n >= 30, "{n}");
}

#[test]
fn expectations_hold_on_the_fast_tier() {
    for e in entries_up_to(Tier::Fast) {
        let r = classify_group(&e.spec, &Options { tier: Tier::Fast, ..Options::default() }).unwrap();
        assert!(r.consistent, "{}", e.spec);
        if let Some(o) = e.count("order") {
            assert_eq!(o as usize, r.order, "{}", e.spec);
        }
        for p in Property::ALL {
            if let (Some(want), Some(got)) = (e.property(p), r.value(p)) {
                assert_eq!(want, got, "{} {p}", e.spec);
            }
        }
    }
}

#[test]
fn tiers_refuse_large_groups() {
    assert!(matches!(Analysis::build("J1", Tier::Fast, usize::MAX), Err(Error::CapExceeded { .. })));
    assert!(matches!(run_suite("nope", Tier::Fast), Err(Error::UnknownSuite(_))));
}

#[test]
fn reports_round_trip_through_json() {
    let r = run_suite("eppo", Tier::Fast).unwrap();
    assert!(r.passed());
    let dir = tempfile::tempdir().unwrap();
    let path = write_report(&r, dir.path()).unwrap();
    let back: SuiteReport = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(back, r);
}

#[test]
fn extended_suite_skips_below_its_tier() {
    let r = run_suite("extended-big-groups", Tier::Standard).unwrap();
    assert!(r.passed());
    assert!(r.entries.iter().all(|e| e.checks[0].name.starts_with("skipped")));
}
