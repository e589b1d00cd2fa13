mod common;

use common::{arrow, assert_same_class, desk_window, path, presentations};
use skewgentle_complex::Cochain;
use skewgentle_core::{presets, Path, SkewGentleTriple};
use skewgentle_structure::cocycles;
use skewgentle_structure::exceptional::loop_pair;
use skewgentle_structure::*;

/// The classes `(aᵖ, a^q)` spanning `HH*` of one loop, listed case by case
/// (the unit is `(0, 0)`), with `p ≤ n_max` and `q ≤ q_max`.
fn one_loop_classes(case: OneLoopCase, n_max: usize, q_max: usize) -> Vec<(usize, usize)> {
    let mut out = vec![(0, 0)];
    match case {
        OneLoopCase::Special => out.push((0, 1)),
        OneLoopCase::SquareZeroOddOrCharTwo => {
            out.push((0, 1));
            for k in 1..=n_max {
                out.extend([(k, 0), (k, 1)]);
            }
        }
        OneLoopCase::SquareZeroEven => {
            out.push((0, 1));
            for k in 1..=n_max {
                out.push((k, k % 2));
            }
        }
        OneLoopCase::FreeOdd => {
            out.push((1, 0));
            for q in 1..=q_max {
                out.push(if q % 2 == 0 { (0, q) } else { (1, q) });
            }
        }
        OneLoopCase::FreeEvenOrCharTwo => {
            out.push((1, 0));
            for q in 1..=q_max {
                out.extend([(0, q), (1, q)]);
            }
        }
    }
    out
}

fn one_loops() -> Vec<(OneLoopCase, SkewGentleTriple)> {
    vec![
        (OneLoopCase::Special, presets::special_loop(0)),
        (OneLoopCase::Special, presets::special_loop(2)),
        (OneLoopCase::SquareZeroOddOrCharTwo, presets::one_loop(false, true, 1, 0)),
        (OneLoopCase::SquareZeroOddOrCharTwo, presets::one_loop(false, true, 0, 2)),
        (OneLoopCase::SquareZeroOddOrCharTwo, presets::one_loop(false, true, -3, 3)),
        (OneLoopCase::SquareZeroEven, presets::one_loop(false, true, 2, 3)),
        (OneLoopCase::SquareZeroEven, presets::one_loop(false, true, -2, 0)),
        (OneLoopCase::FreeOdd, presets::one_loop(false, false, 1, 0)),
        (OneLoopCase::FreeOdd, presets::one_loop(false, false, -1, 5)),
        (OneLoopCase::FreeEvenOrCharTwo, presets::one_loop(false, false, 2, 0)),
        (OneLoopCase::FreeEvenOrCharTwo, presets::one_loop(false, false, 1, 2)),
    ]
}

#[test]
fn one_loop_shapes_are_recognised() {
    for (case, t) in one_loops() {
        assert_eq!(quiver_shape(&t), QuiverShape::OneLoop { arrow: 0, case });
    }
}

#[test]
fn one_loop_dimensions_match_the_listed_classes() {
    for (case, t) in one_loops() {
        let d = t.quiver().degree(0);
        let w = desk_window(&t);
        let bounds = w.bounds();
        // Every class with |j| ≤ 8 has q ≤ 8 + n_max when d ≠ 0.
        let classes = one_loop_classes(case, bounds.n_max, 8 + bounds.n_max);
        for (n, j) in bounds.blocks() {
            let expected = classes
                .iter()
                .filter(|&&(p, q)| p == n && (q as i64 - p as i64) * d == j)
                .count();
            let block = w.block(n, j).expect("certified");
            assert_eq!(block.dimension, expected, "{case:?} |a|={d}: HH^({n},{j})");
        }
    }
}

#[test]
fn special_loop_and_char_two_square_zero_totals() {
    let t = presets::special_loop(0);
    let w = desk_window(&t);
    let total = |w: &CohomologyWindow, k: usize| -> usize {
        (-8..=8).map(|j| w.block(k, j).unwrap().dimension).sum()
    };
    assert_eq!(total(&w, 0), 2);
    for k in 1..=5 {
        assert_eq!(total(&w, k), 0);
    }
    let t = presets::one_loop(false, true, 0, 2);
    let w = desk_window(&t);
    for k in 0..=5 {
        assert_eq!(total(&w, k), 2, "HH^{k}");
    }
}

/// The listed one-loop products `x ⌣ y`, with `m, n` ranging over `1..=3`.
fn listed_products(case: OneLoopCase) -> Vec<((usize, usize), (usize, usize), Option<(i64, usize, usize)>)> {
    let mut out = Vec::new();
    let r = 1..=3usize;
    match case {
        OneLoopCase::Special => out.push(((0, 1), (0, 1), Some((0, 0, 1)))),
        OneLoopCase::SquareZeroOddOrCharTwo => {
            out.push(((0, 1), (0, 1), None));
            for n in r.clone() {
                out.push(((0, 1), (n, 0), Some((0, n, 1))));
                out.push(((0, 1), (n, 1), None));
                for m in r.clone() {
                    let e = (m * n) as i64;
                    out.push(((m, 0), (n, 0), Some((e, m + n, 0))));
                    out.push(((m, 0), (n, 1), Some((e, m + n, 1))));
                    out.push(((m, 1), (n, 1), None));
                }
            }
        }
        OneLoopCase::SquareZeroEven => {
            out.push(((0, 1), (0, 1), None));
            for n in r.clone() {
                out.push(((0, 1), (2 * n, 0), None));
                out.push(((0, 1), (n, 1), None));
                for m in r.clone() {
                    out.push(((2 * m, 0), (2 * n, 0), Some((0, 2 * (m + n), 0))));
                    out.push(((2 * m, 0), (2 * n - 1, 1), Some((0, 2 * (m + n) - 1, 1))));
                    out.push(((2 * m - 1, 1), (2 * n - 1, 1), None));
                }
            }
        }
        OneLoopCase::FreeOdd => {
            out.push(((1, 0), (1, 0), None));
            for n in r.clone() {
                out.push(((1, 0), (1, 2 * n - 1), None));
                for m in r.clone() {
                    out.push(((0, 2 * m), (1, 0), None));
                    out.push(((0, 2 * m), (0, 2 * n), Some((0, 0, 2 * (m + n)))));
                    out.push(((0, 2 * m), (1, 2 * n - 1), Some((0, 1, 2 * (m + n) - 1))));
                    out.push(((1, 2 * m - 1), (1, 2 * n - 1), None));
                }
            }
        }
        OneLoopCase::FreeEvenOrCharTwo => {
            for n in 0..=3 {
                for m in 0..=3 {
                    out.push(((0, m), (0, n), Some((0, 0, m + n))));
                    out.push(((0, m), (1, n), Some((0, 1, m + n))));
                    out.push(((1, m), (1, n), None));
                }
            }
        }
    }
    out
}

#[test]
fn one_loop_listed_products_hold_in_cohomology() {
    for (case, t) in one_loops() {
        let w = desk_window(&t);
        let f = t.field();
        let mut checked = 0;
        for (x, y, result) in listed_products(case) {
            let (u, v) = (loop_pair(&t, 0, x.0, x.1), loop_pair(&t, 0, y.0, y.1));
            let product = cup(&t, &u, &v);
            let expected = match result {
                Some((e, p, q)) => loop_pair(&t, 0, p, q).scale(&f.sign(e)),
                None => Cochain::zero(f, x.0 + y.0),
            };
            let n = x.0 + y.0;
            let j = (x.1 as i64 - x.0 as i64 + y.1 as i64 - y.0 as i64) * t.quiver().degree(0);
            if !w.bounds().contains(n, j) {
                continue;
            }
            assert!(
                w.same_class(n, j, &product, &expected).unwrap(),
                "{case:?}: {x:?} ⌣ {y:?} = {} , expected {}",
                product.display(&t),
                expected.display(&t)
            );
            checked += 1;
        }
        assert!(checked > 0, "{case:?}");
    }
}

#[test]
fn cocomplete_sum_times_derivation() {
    // <<α>>_s ⌣ (c,c) ≡ (a, aα), a the first arrow of α.
    for (deg, ch) in [((1, 1, 0), 0), ((1, 0, 0), 2), ((-1, 2, 1), 3)] {
        let t = presets::three_cycle(deg, ch);
        let w = desk_window(&t);
        let alpha = path(&t, &["c", "eps3", "b", "eps2", "a"]);
        let a = Path::arrow(t.quiver(), arrow(&t, "a"));
        let s = cocycles::cocomplete_sum(&t, &alpha);
        let cc = cocycles::derivation(&t, arrow(&t, "c"));
        let expected = cocycles::pair(&t, a.clone(), alpha.then(t.quiver(), &a).unwrap());
        assert_same_class(&w, &cup(&t, &s, &cc), &expected, &format!("{deg:?} char {ch}"));
    }
}

#[test]
fn maximal_pairs_annihilate_in_cohomology() {
    // On the three-cycle example (cba, e₁) ⌣ x ≡ 0 for every other
    // generator x of positive degree.
    let t = presets::three_cycle((1, 0, 0), 0);
    let w = desk_window(&t);
    let gens = algebra_generators(&t, 12);
    let c4 = gens.iter().find(|g| g.class == ClassTag::C4).unwrap();
    for g in &gens {
        let z = cup(&t, &c4.representative, &g.representative);
        let (n, j) = (c4.n + g.n, c4.j + g.j);
        assert!(w.is_zero_class(n, j, &z).unwrap(), "c4 ⌣ {}", g.describe(&t));
    }
}

#[test]
fn expected_table_matches_computed_cups_on_all_presentations() {
    let mut passed = 0;
    for (name, t) in presentations() {
        let w = desk_window(&t);
        let report = verify_structure(&w, VerifyOptions::default());
        let tally = report.check("cup-table").unwrap();
        assert!(tally.ok(), "{name}: {:?}", tally.failures.first());
        passed += tally.passed;
    }
    assert!(passed > 1000, "{passed}");
}

#[test]
fn structure_constant_table_is_graded_commutative() {
    for (name, t) in presentations() {
        let w = desk_window(&t);
        let inv = Inventory::new(&t);
        let gens = algebra_generators(&t, 12);
        let table = StructureConstantTable::new(&w, &inv, gens.clone());
        let f = t.field();
        for ((a, b), entry) in &table.cup {
            let Some(mirror) = table.cup.get(&(*b, *a)) else { continue };
            let sign = f.sign(gens[*a].total * gens[*b].total);
            match (entry, mirror) {
                (Entry::Zero, Entry::Zero) | (Entry::Skipped(_), _) | (_, Entry::Skipped(_)) => {}
                (Entry::Class { terms: x, .. }, Entry::Class { terms: y, .. }) => {
                    let flipped: Vec<_> = y.iter().map(|(s, c)| (s.clone(), c * &sign)).collect();
                    assert_eq!(*x, flipped, "{name}: ({a},{b})");
                }
                other => panic!("{name}: ({a},{b}) {other:?}"),
            }
        }
    }
}
