use upfam::harness::{
    evaluate, theorem_spec, verify, verify_all, verify_all_with_hook, verify_with_hook, HarnessConfig, Instance,
    Verdict,
};
use upfam::{build_extension, enumerate_semigroups, named, Caps, SemigroupClass, SpaceKind};

fn small() -> HarnessConfig {
    HarnessConfig {
        caps: Caps::default(),
        max_order: Some(3),
    }
}

#[test]
fn reports_are_deterministic() {
    let a = verify_all(&small()).unwrap().without_timing();
    let b = verify_all(&small()).unwrap().without_timing();
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert!(a.success);
}

#[test]
fn instance_counts_match_enumeration() {
    let report = verify(&theorem_spec("1.1").unwrap(), &small()).unwrap();
    let mut total = 0;
    for c in &report.instance_counts {
        assert_eq!(c.count, enumerate_semigroups(c.order, c.class, &Caps::default()).unwrap().len());
        total += c.count;
    }
    assert_eq!(total, report.instances_checked);
    assert_eq!(total, 1 + 5 + 24 + 1 + 3 + 10);
}

#[test]
fn injected_left_zero_breaks_commutative_theorem() {
    let spec = theorem_spec("4.3").unwrap();
    let hook = |id: &str, list: &mut Vec<Instance>| {
        if id == "4.3" {
            list.insert(0, Instance::new(SemigroupClass::Commutative, named("leftzero:2").unwrap()));
        }
    };
    let report = verify_with_hook(&spec, &small(), &hook).unwrap();
    assert_eq!(report.result, Verdict::Counterexample);
    let w = report.witness.clone().unwrap();
    assert_eq!(w.instance.base, named("leftzero:2").unwrap());
    // witness soundness: recomputing from scratch gives the same vector
    assert_eq!(evaluate(&spec, &w.instance, &Caps::default()).unwrap(), w.truth);
    assert_eq!(w.truth, vec![true, false]);

    let agg = verify_all_with_hook(&small(), &hook).unwrap();
    assert!(!agg.success);
    assert_eq!(agg.failed, 1);
}

#[test]
fn bush_theorem_on_small_semilattices() {
    let cfg = HarnessConfig {
        caps: Caps::default(),
        max_order: Some(5),
    };
    let report = verify(&theorem_spec("2.6").unwrap(), &cfg).unwrap();
    assert!(report.verified());
    assert_eq!(report.instances_checked, 1 + 1 + 2 + 5 + 15);
    let vee = build_extension(&named("vee").unwrap(), SpaceKind::Lambda, &Caps::default()).unwrap();
    assert_eq!(vee.commutativity_witness(), None);
    // the fork 0 < 1 < 2, 3 is a tree but not a bush
    let fork = upfam::CayleyTable::from_rows(
        4,
        &[vec![0, 0, 0, 0], vec![0, 1, 1, 1], vec![0, 1, 2, 1], vec![0, 1, 1, 3]],
    )
    .unwrap();
    let spec = theorem_spec("2.6").unwrap();
    let truth = evaluate(&spec, &Instance::new(SemigroupClass::Semilattice, fork), &Caps::default()).unwrap();
    assert_eq!(truth, vec![false, false]);
}

#[test]
fn lambda_linearity_stops_at_three() {
    let caps = Caps::default();
    let l3 = build_extension(&named("chain:3").unwrap(), SpaceKind::Lambda, &caps).unwrap();
    let l4 = build_extension(&named("chain:4").unwrap(), SpaceKind::Lambda, &caps).unwrap();
    assert_eq!(l3.linearity_witness(), None);
    assert!(l4.linearity_witness().is_some());
    assert!(verify(&theorem_spec("4.3").unwrap(), &HarnessConfig::default()).unwrap().verified());
}

#[test]
fn lowered_caps_are_refused_without_max_order() {
    let cfg = HarnessConfig {
        caps: Caps::uniform(3),
        max_order: None,
    };
    assert!(verify_all(&cfg).is_err());
    let cfg = HarnessConfig {
        caps: Caps::uniform(3),
        max_order: Some(3),
    };
    assert!(verify_all(&cfg).unwrap().success);
}
