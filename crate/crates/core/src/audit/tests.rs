use proptest::prelude::*;

use super::*;
use crate::base::{FinMap, FinObj};
use crate::internal::{are_isomorphic, nat_trans, InternalFunctor, InternalNatTrans, WorkBudget};
use crate::limits2d::free_arrow;
use crate::test_support::{all_functors, small_corpus, walking_arrow, z2};
use crate::transfer::disc;

fn candidate(z: usize, s: &[usize]) -> NnoCandidate {
    NnoCandidate { n: s.len(), z, s: s.to_vec() }
}

fn datum(f: usize, g: &[usize]) -> RecursionDatum {
    RecursionDatum { x: g.len(), f, g: g.to_vec() }
}

fn outcome(c: &NnoCandidate, d: &RecursionDatum) -> RecursorOutcome {
    recursor_search(c, d).unwrap().outcome
}

fn budget() -> WorkBudget {
    WorkBudget::new(10_000_000)
}

#[test]
fn recursor_examples() {
    let one = candidate(0, &[0]);
    assert_eq!(outcome(&one, &datum(0, &[1, 0])), RecursorOutcome::NoRecursor);
    // A one-point target always has exactly the constant map.
    for c in all_candidates(3) {
        assert_eq!(outcome(&c, &datum(0, &[0])), RecursorOutcome::UniqueRecursor);
    }
    // 1 is unreachable from z = 0, so u(1) is free.
    let unreachable = candidate(0, &[0, 1]);
    let v = recursor_search(&unreachable, &datum(0, &[0, 1])).unwrap();
    assert_eq!(v.outcome, RecursorOutcome::MultipleRecursors);
    assert_eq!(v.recursors.len(), 2);
    assert!(v.recursors.iter().all(|u| unreachable.is_recursor(&v.datum, u)));
    assert_eq!(v.counterexample, Some(v.datum.clone()));
}

#[test]
fn off_orbit_cycles_can_have_no_recursor() {
    // z = 0 lies on a 2-cycle, 2 is a fixed point off it; a swap forces u(2) to be fixed.
    let c = candidate(0, &[1, 0, 2]);
    let d = datum(0, &[1, 0]);
    assert_eq!(outcome(&c, &d), RecursorOutcome::NoRecursor);
    assert_eq!(count_recursors(&c, &d), 0);
}

#[test]
fn recursor_search_matches_enumeration_up_to_three() {
    for c in all_candidates(3) {
        for x in 1..=3 {
            let obj = FinObj::new(x);
            for g in crate::base::all_maps(&obj, &obj) {
                for f in 0..x {
                    let d = datum(f, g.table());
                    let v = recursor_search(&c, &d).unwrap();
                    let count = count_recursors(&c, &d);
                    let expected = match count {
                        0 => RecursorOutcome::NoRecursor,
                        1 => RecursorOutcome::UniqueRecursor,
                        _ => RecursorOutcome::MultipleRecursors,
                    };
                    assert_eq!(v.outcome, expected, "{c:?} {d:?}");
                    assert!(v.recursors.iter().all(|u| c.is_recursor(&d, u)));
                    assert_eq!(v.recursors.len(), count.min(2));
                }
            }
        }
    }
}

#[test]
fn malformed_tables_are_rejected() {
    let bad = NnoCandidate { n: 2, z: 0, s: vec![0, 5] };
    assert!(recursor_search(&bad, &datum(0, &[0])).is_err());
    let ok = candidate(0, &[0]);
    assert!(recursor_search(&ok, &RecursionDatum { x: 1, f: 3, g: vec![0] }).is_err());
    let z = FinMap::new(FinObj::new(2), FinObj::new(2), vec![0, 0]).unwrap();
    assert!(NnoCandidate::new(&z, &FinMap::identity(&FinObj::new(2))).is_err());
}

#[test]
fn every_candidate_up_to_four_is_defeated() {
    let mut total = 0;
    for c in all_candidates(4) {
        let r = refute(c);
        assert!(r.verified, "{:?}", r.candidate);
        assert_ne!(r.verdict.outcome, RecursorOutcome::UniqueRecursor, "{:?}", r.candidate);
        assert!(r.verdict.counterexample.is_some());
        total += 1;
    }
    assert_eq!(total, 1 + 2 * 4 + 3 * 27 + 4 * 256);
}

#[test]
fn refutations_cover_each_orbit_shape_once() {
    let rs = refute_finite_nno(4);
    let mut shapes: Vec<_> = rs.iter().map(|r| (r.candidate.n, r.tail, r.cycle)).collect();
    let len = shapes.len();
    shapes.dedup();
    assert_eq!(shapes.len(), len);
    // Every (tail, cycle) with tail + cycle ≤ n appears for each n.
    let expected: usize = (1..=4usize).map(|n| n * (n + 1) / 2).sum();
    assert_eq!(len, expected);
    assert!(rs.iter().all(|r| r.verified));
    assert_eq!(refute_finite_nno(4), rs);
}

#[test]
fn two_dimensional_check_reduces_to_arrows() {
    let mut compared = 0;
    for x in small_corpus().into_iter().filter(|x| x.arrows() <= 4) {
        for g in all_functors(&x, &x) {
            for c in all_candidates(2) {
                for alpha in x.c1().elements() {
                    let two = two_dimensional_nno_check(&c, &x, &g, alpha, &mut budget()).unwrap();
                    let one = recursor_search(&c, &reduced_datum(&g, alpha)).unwrap();
                    assert_eq!(two.outcome, one.outcome);
                    if let [cell] = two.cells.as_slice() {
                        assert_eq!(cell.alpha().table(), one.recursors[0].as_slice());
                    }
                    compared += 1;
                }
            }
        }
    }
    assert!(compared > 50);
}

#[test]
fn two_dimensional_check_rejects_mismatched_shapes() {
    let x = walking_arrow();
    let g = InternalFunctor::identity(&z2());
    assert!(two_dimensional_nno_check(&candidate(0, &[0]), &x, &g, 0, &mut budget()).is_err());
    let g = InternalFunctor::identity(&x);
    assert!(two_dimensional_nno_check(&candidate(0, &[0]), &x, &g, 9, &mut budget()).is_err());
}

#[test]
fn probe_domain_is_the_walking_arrow() {
    let p = copower_of_point();
    assert!(are_isomorphic(&p, &free_arrow().into_cat()));
    for a in small_corpus() {
        for u in a.c1().elements() {
            let h = arrow_probe(&a, u).unwrap();
            assert!(h.is_valid());
            assert!(h.f1().table().contains(&u));
        }
    }
}

#[test]
fn the_point_does_not_separate_arrows() {
    let a = z2();
    let (id, trivial) = (
        InternalFunctor::identity(&a),
        InternalFunctor::from_tables(&a, &a, vec![0], vec![0, 0]).unwrap(),
    );
    let pair = [(id, trivial)];
    let point = [disc(&FinObj::new(1)).into_cat()];
    let weak = generator_check(&point, &pair, &[], &mut budget()).unwrap();
    assert!(!weak.holds());
    assert_eq!(weak.failures, vec!["functor pair 0".to_string()]);
    let strong = generator_check(&[copower_of_point()], &pair, &[], &mut budget()).unwrap();
    assert!(strong.holds());
    assert_eq!(strong.distinguished, 1);
}

#[test]
fn copower_of_point_separates_small_homs() {
    let mut pairs = Vec::new();
    let mut cell_pairs: Vec<(InternalNatTrans, InternalNatTrans)> = Vec::new();
    for a in small_corpus() {
        for b in small_corpus() {
            let fs = all_functors(&a, &b);
            for (k, f) in fs.iter().enumerate() {
                for g in &fs[k + 1..] {
                    pairs.push((f.clone(), g.clone()));
                }
                for g in &fs {
                    let cells = nat_trans(f, g, &mut budget()).unwrap();
                    for (j, x) in cells.iter().enumerate() {
                        for y in &cells[j + 1..] {
                            cell_pairs.push((x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
    }
    assert!(pairs.len() > 100 && !cell_pairs.is_empty());
    let report = two_well_pointed_check(&pairs, &cell_pairs, 5, &mut budget()).unwrap();
    assert!(report.holds(), "{:?}", report.generator.failures);
    assert_eq!(report.components_of_probe, 1);
    assert_eq!(report.generator.pairs, pairs.len());
    assert_eq!(report.generator.cell_pairs, cell_pairs.len());
}

#[test]
fn equal_pairs_are_not_separated() {
    let f = InternalFunctor::identity(&walking_arrow());
    assert!(distinguish(&[copower_of_point()], &f, &f, &mut budget()).unwrap().is_none());
    let cell = InternalNatTrans::identity(&f);
    assert!(distinguish_cells(&[copower_of_point()], &cell, &cell, &mut budget()).unwrap().is_none());
}

#[test]
fn diagonal_equalisers() {
    assert!((0..=5).all(|n| diagonal_is_equaliser(&FinObj::new(n)).unwrap()));
}

fn small_config() -> AuditConfig {
    AuditConfig {
        seed: 3,
        max_objects: 3,
        max_arrows: 6,
        functor_samples: 40,
        pair_samples: 12,
        pairs_per_hom: 8,
        nno_max_size: 3,
        equaliser_max_size: 3,
        ..AuditConfig::default()
    }
}

#[test]
fn audit_is_deterministic() {
    let config = small_config();
    let first = run_audit(&config);
    let second = run_audit(&config);
    assert_eq!(first, second);
    assert_eq!(first.to_structured(), second.to_structured());
    assert_eq!(first.to_text(), second.to_text());
}

#[test]
fn small_audit_matches_expectations() {
    let report = run_audit(&small_config());
    assert_eq!(report.entries.len(), Axiom::ALL.len());
    for (e, axiom) in report.entries.iter().zip(Axiom::ALL) {
        assert_eq!(e.axiom, axiom);
        assert_eq!(e.verdict, axiom.expected(), "{axiom:?}: {}", e.summary);
    }
    assert!(report.matches_expectations());
}

#[test]
fn empty_corpus_skips_everything() {
    let report = run_audit(&AuditConfig { max_objects: 0, ..small_config() });
    assert!(report.entries.iter().all(|e| e.verdict == Verdict::Skipped));
    assert!(report.matches_expectations());
}

#[test]
fn disabled_suites_are_skipped() {
    let report = run_audit(&AuditConfig { suites: vec![Axiom::Nno, Axiom::Boolean], ..small_config() });
    for e in &report.entries {
        let enabled = matches!(e.axiom, Axiom::Nno | Axiom::Boolean);
        assert_eq!(e.verdict != Verdict::Skipped, enabled, "{:?}", e.axiom);
    }
    assert_eq!(report.entry(Axiom::Nno).unwrap().verdict, Verdict::Refuted);
}

#[test]
fn structured_report_uses_stable_names() {
    let report = run_audit(&AuditConfig { suites: vec![Axiom::TwoValued], ..small_config() });
    let text = report.to_structured();
    assert!(text.contains("\"twoValued\""));
    assert!(text.contains("\"verified-at-scale\""));
    assert!(text.contains("\"skipped\""));
    let parsed: AuditConfig = serde_json::from_value(serde_json::to_value(&report.config).unwrap()).unwrap();
    assert_eq!(parsed, report.config);
}

fn arb_candidate() -> impl Strategy<Value = NnoCandidate> {
    (1usize..=5).prop_flat_map(|n| (0..n, prop::collection::vec(0..n, n)).prop_map(move |(z, s)| NnoCandidate { n, z, s }))
}

fn arb_datum() -> impl Strategy<Value = RecursionDatum> {
    (1usize..=4).prop_flat_map(|x| (0..x, prop::collection::vec(0..x, x)).prop_map(move |(f, g)| RecursionDatum { x, f, g }))
}

proptest! {
    #[test]
    fn search_agrees_with_enumeration(c in arb_candidate(), d in arb_datum()) {
        let v = recursor_search(&c, &d).unwrap();
        let count = count_recursors(&c, &d);
        prop_assert_eq!(v.recursors.len(), count.min(2));
        prop_assert!(v.recursors.iter().all(|u| c.is_recursor(&d, u)));
        prop_assert_eq!(v.counterexample.is_some(), count != 1);
    }

    #[test]
    fn defeating_datum_defeats(c in arb_candidate()) {
        let r = refute(c);
        prop_assert!(r.verified);
        prop_assert_ne!(r.verdict.outcome, RecursorOutcome::UniqueRecursor);
    }
}
