mod common;

use proptest::prelude::*;
use skewgentle_core::random::random_triple;
use skewgentle_core::{presets, Path, SkewGentleTriple};
use skewgentle_geometry::{
    correspondence_check, surface_invariants, winding_number, Angle, CurveClass, RibbonGraph,
    VertexKind,
};

fn labels(g: &RibbonGraph) -> Vec<String> {
    let mut v: Vec<_> = g.vertices.iter().map(|v| v.label.clone()).collect();
    v.sort();
    v
}

fn written(t: &SkewGentleTriple, ids: &[&str]) -> Path {
    Path::from_written_ids(t.quiver(), ids).expect("path")
}

#[test]
fn example_ribbon_graph() {
    let t = presets::three_cycle((1, 0, 0), 0);
    let g = RibbonGraph::build(&t).unwrap();
    assert_eq!(labels(&g), ["c.b.a", "e_1", "eps2", "eps3"]);
    assert_eq!(g.edge_count, 3);
    let marked: Vec<_> = g.marked_angles().iter().map(|&h| g.vertices[g.half_edges[h].vertex].label.clone()).collect();
    assert_eq!(marked, ["e_1"]);
    let cycle = g.vertices.iter().find(|v| v.is_infinite()).unwrap();
    let q = t.quiver();
    let gradings: Vec<i64> = cycle
        .half_edges
        .iter()
        .map(|&h| match g.half_edges[h].angle {
            Angle::Arrow(a) => q.degree(a),
            other => panic!("unexpected angle {other:?}"),
        })
        .collect();
    assert_eq!(gradings, [1, 0, 0]);
    for v in g.vertices.iter().filter(|v| v.is_special()) {
        assert_eq!(v.half_edges.len(), 1);
        assert!(matches!(g.half_edges[v.half_edges[0]].angle, Angle::Special(_)));
    }
}

#[test]
fn example_surface() {
    let t = presets::three_cycle((1, 0, 0), 0);
    let g = RibbonGraph::build(&t).unwrap();
    let s = surface_invariants(&t, &g).unwrap();
    assert_eq!(s.summary(), (1, 1, 1, 0, 2, 0));
    assert_eq!(s.pi1_rank, 1);
    assert_eq!(s.euler_characteristic, 1);
    let r = correspondence_check(&t, 12).unwrap();
    assert!(r.passed(), "{r}");
    assert_eq!(r.counts(), (1, 1, 0, 1));
    assert_eq!(r.derivation_generators, 1);
}

#[test]
fn example_correspondence_in_every_grading() {
    for deg in [(1, 0, 0), (0, 1, 0), (2, -1, 3), (-1, 2, 1)] {
        for ch in [0, 2, 3] {
            let t = presets::three_cycle(deg, ch);
            let r = correspondence_check(&t, 12).unwrap();
            assert!(r.passed(), "{deg:?} char {ch}: {r}");
            assert_eq!(r.counts(), (1, 1, 0, 1));
        }
    }
}

#[test]
fn example_winding_numbers() {
    let t = presets::three_cycle((1, 0, 0), 0);
    let q = t.quiver();
    let boundary = CurveClass::Boundary {
        gamma: written(&t, &["c", "b", "a"]),
        alpha: Path::trivial(q.vertex_index("1").unwrap()),
    };
    assert_eq!(winding_number(&t, &boundary), 1);
    let r = correspondence_check(&t, 12).unwrap();
    let p = r.pairings.iter().find(|p| matches!(p.curve, CurveClass::Boundary { .. })).unwrap();
    assert_eq!(p.curve, boundary);
    assert_eq!(p.generator, "c4: (c.b.a, e_1)");
    assert_eq!((p.winding, p.total), (1, 2));

    let cycle = written(&t, &["c", "eps3", "b", "eps2", "a"]);
    let w = winding_number(&t, &CurveClass::GPuncture { cycle: cycle.clone() });
    assert_eq!(w, cycle.degree(q));
    assert_eq!(w, 1);

    let c = q.arrow_index("c").unwrap();
    assert_eq!(winding_number(&t, &CurveClass::ArrowPair { arrow: c }), 1);
}

#[test]
fn linear_a2_is_a_disc() {
    let t = presets::linear_a2(0, 0);
    let g = RibbonGraph::build(&t).unwrap();
    assert_eq!(labels(&g), ["a", "e_1", "e_2"]);
    let s = surface_invariants(&t, &g).unwrap();
    assert_eq!((s.genus, s.boundary_components), (0, 1));
    assert_eq!((s.g_punctures, s.g_star_punctures, s.orbifold_points), (0, 0, 0));
    assert_eq!(s.pi1_rank, 0);
    assert!(correspondence_check(&t, 12).unwrap().passed());
}

#[test]
fn special_loop_is_an_orbifold_disc() {
    let t = presets::special_loop(0);
    let g = RibbonGraph::build(&t).unwrap();
    assert_eq!(labels(&g), ["a", "e_v"]);
    assert!(matches!(g.vertices[0].kind, VertexKind::Finite { .. }));
    let s = surface_invariants(&t, &g).unwrap();
    assert_eq!(s.summary(), (1, 1, 0, 0, 1, 0));
    assert_eq!(s.pi1_rank, 0);
    let r = correspondence_check(&t, 12).unwrap();
    assert!(r.passed(), "{r}");
    let gens: Vec<_> = r.pairings.iter().map(|p| p.generator.as_str()).collect();
    assert_eq!(gens, ["c1: (e_v, a)"]);
}

#[test]
fn kronecker_annulus() {
    for (da, db) in [(0, 0), (1, 0), (2, -3)] {
        let t = presets::kronecker(da, db, 0);
        let g = RibbonGraph::build(&t).unwrap();
        let s = surface_invariants(&t, &g).unwrap();
        assert_eq!(s.summary(), (2, 2, 0, 0, 0, 0));
        assert_eq!(s.pi1_rank, 1);
        let r = correspondence_check(&t, 12).unwrap();
        assert!(r.passed(), "{r}");
        let mut gens: Vec<_> = r.pairings.iter().map(|p| p.generator.clone()).collect();
        gens.sort();
        assert_eq!(gens, ["c4: (a, b)", "c4: (b, a)"]);
        for p in &r.pairings {
            assert_eq!(p.total, p.winding + 1);
        }
    }
}

#[test]
fn one_loop_surfaces() {
    let cases = [
        (presets::one_loop(false, true, 1, 0), (2, 1, 0, 1, 0, 0)),
        (presets::one_loop(false, true, 2, 3), (2, 1, 0, 1, 0, 0)),
        (presets::one_loop(false, false, 1, 0), (1, 1, 1, 0, 0, 0)),
        (presets::one_loop(false, false, 2, 2), (1, 1, 1, 0, 0, 0)),
    ];
    for (t, summary) in cases {
        let g = RibbonGraph::build(&t).unwrap();
        let s = surface_invariants(&t, &g).unwrap();
        assert_eq!(s.summary(), summary);
        assert_eq!(s.pi1_rank, 1);
    }
}

#[test]
fn every_presentation_corresponds() {
    for (name, t) in common::presentations() {
        let r = correspondence_check(&t, 12).unwrap();
        assert!(r.passed(), "{name}: {r}");
        for p in &r.pairings {
            assert!(p.degrees_match(), "{name}: {p:?}");
        }
    }
}

#[test]
fn mismatch_is_reported() {
    let t = presets::three_cycle((1, 0, 0), 0);
    let mut r = correspondence_check(&t, 12).unwrap();
    assert!(r.ensure().is_ok());
    r.surface.pi1_rank += 1;
    r.discrepancies.push(skewgentle_geometry::Discrepancy {
        feature: "fundamental group".into(),
        detail: "forced".into(),
    });
    assert!(r.ensure().is_err());
    assert!(r.to_string().starts_with("correspondence: FAIL"));
}

fn structural_invariants(t: &SkewGentleTriple) -> Result<(), TestCaseError> {
    let g = RibbonGraph::build(t).unwrap();
    let s = surface_invariants(t, &g).unwrap();
    for (h, he) in g.half_edges.iter().enumerate() {
        let p = g.iota(h);
        prop_assert!(p != h && g.iota(p) == h && g.half_edges[p].edge == he.edge);
    }
    let mut seen = vec![0usize; g.half_edges.len()];
    for f in &s.faces {
        for &h in &f.angles {
            seen[h] += 1;
        }
    }
    prop_assert!(seen.iter().all(|&c| c == 1), "faces partition the angles");
    prop_assert_eq!(s.faces.iter().map(|f| f.angles.len()).sum::<usize>(), g.half_edges.len());
    prop_assert_eq!(
        s.euler_characteristic,
        2 - 2 * s.genus as i64 - s.boundary_components as i64
    );
    prop_assert_eq!(s.orbifold_points, t.special_loops().len());
    // Topological reading of π₁ of the surface without orbifold points:
    // a genus-g surface with b boundary components and the G-punctures
    // removed is a free group of rank 2g + b + P − 1.
    prop_assert_eq!(
        2 * s.genus + s.boundary_components + s.g_punctures - 1,
        s.pi1_rank
    );
    for v in &g.vertices {
        let marks = v.half_edges.iter().filter(|&&h| g.half_edges[h].angle == Angle::Marked).count();
        if v.is_special() {
            prop_assert_eq!(v.half_edges.len(), 1);
            prop_assert!(matches!(g.half_edges[v.half_edges[0]].angle, Angle::Special(_)));
        } else if v.is_infinite() {
            prop_assert_eq!(marks, 0);
        } else {
            prop_assert_eq!(marks, 1);
        }
    }
    prop_assert_eq!(s.marked_points, g.marked_angles().len());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn random_triples_satisfy_surface_invariants(seed in 0u64..100_000, ch in prop::sample::select(vec![0u64, 2, 3])) {
        let t = random_triple(seed, 6, ch);
        structural_invariants(&t)?;
    }

    #[test]
    fn random_triples_correspond(seed in 0u64..100_000, ch in prop::sample::select(vec![0u64, 2, 3])) {
        let t = random_triple(seed, 6, ch);
        let r = correspondence_check(&t, 12).unwrap();
        prop_assert!(r.passed(), "seed {} char {}: {}", seed, ch, r);
        for p in &r.pairings {
            let expected = match p.curve {
                CurveClass::Boundary { .. } => p.winding + 1,
                _ => skewgentle_geometry::puncture_multiplier(&t, p.winding) * p.winding,
            };
            prop_assert_eq!(p.total, expected);
        }
    }
}
