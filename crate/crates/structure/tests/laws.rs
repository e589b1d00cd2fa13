mod common;

use common::{desk_window, presentations};
use proptest::prelude::*;
use skewgentle_complex::{apply_differential, Cochain, Variant};
use skewgentle_core::random::random_triple;
use skewgentle_structure::*;

#[test]
fn every_check_passes_on_every_presentation() {
    let mut ran = std::collections::BTreeMap::new();
    for (name, t) in presentations() {
        let w = desk_window(&t);
        let report = verify_structure(&w, VerifyOptions::default());
        let names: Vec<_> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(names, CHECKS, "{name}");
        for c in &report.checks {
            assert!(c.ok(), "{name} {}: {}", c.name, c.failures[0]);
        }
        assert!(report.passed());
        for law in ["commutativity", "associativity", "antisymmetry", "jacobi", "leibniz"] {
            *ran.entry(law).or_insert(0) += report.check(law).unwrap().passed;
        }
    }
    for (law, passed) in ran {
        assert!(passed > 0, "{law} never ran");
    }
}

#[test]
fn products_respect_cohomology_classes() {
    // x ⌣ y and [x, y] are cocycles for cocycles x, y, and coboundaries
    // when x is a coboundary.
    for (name, t) in presentations() {
        let w = CohomologyWindow::new(&t, Bounds::new(4, -4, 4, 10));
        let mut cocycles: Vec<(Cochain, bool)> = Vec::new();
        for (n, j) in w.bounds().blocks() {
            let Ok(block) = w.block(n, j) else { continue };
            cocycles.extend(block.representatives.iter().map(|r| (r.clone(), false)));
            for p in block.previous.pairs.iter().take(6) {
                let z = apply_differential(&t, Variant::D, &Cochain::from_pair(t.field(), p.clone()));
                if !z.is_zero() {
                    cocycles.push((z, true));
                }
            }
        }
        for (x, exact) in &cocycles {
            for (y, _) in &cocycles {
                for (op, z) in [("bracket", bracket(&t, x, y)), ("cup", cup(&t, x, y))] {
                    if z.is_zero() {
                        continue;
                    }
                    let what = format!("{name}: {op} of {} and {}", x.display(&t), y.display(&t));
                    assert!(apply_differential(&t, Variant::D, &z).is_zero(), "{what}: not a cocycle");
                    if *exact {
                        let (n, j) = (z.degree(), z.internal_degree(t.quiver()).unwrap());
                        match w.is_zero_class(n, j, &z) {
                            Ok(zero) => assert!(zero, "{what}: not a coboundary"),
                            Err(e) => assert!(e.is_window_limit(), "{what}: {e}"),
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn failures_are_structured() {
    // A deliberately wrong expectation produces a structured mismatch that
    // names the operands.
    let t = skewgentle_core::presets::three_cycle((1, 0, 0), 0);
    let w = desk_window(&t);
    let gens = algebra_generators(&t, 12);
    let c3 = &gens[1].representative;
    let z = bracket(&t, c3, &gens[2].representative);
    assert!(!w.same_class(3, -1, &z, &gens[2].representative).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn laws_hold_on_random_triples(seed in 0u64..10_000, ch in prop::sample::select(vec![0u64, 2, 3])) {
        let t = random_triple(seed, 6, ch);
        let w = CohomologyWindow::new(&t, Bounds::new(4, -4, 4, 10));
        let opts = VerifyOptions { triple_budget: 400, basis_triple_budget: 400 };
        let report = verify_structure(&w, opts);
        for c in &report.checks {
            prop_assert!(c.ok(), "{}: {}", c.name, c.failures[0]);
        }
    }
}
