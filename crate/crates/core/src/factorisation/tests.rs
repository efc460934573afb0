use super::*;
use crate::base::{all_maps, FinMap, FinObj};
use crate::error::Error;
use crate::internal::{
    chain, compose_functors, functors, is_levelwise_pullback, nat_trans, whisker_left, whisker_right, Cat,
    InternalFunctor, InternalNatTrans, WorkBudget,
};
use crate::limits2d::{coproduct_cat, pullback_cat, terminal_cat, to_terminal};
use crate::test_support::{all_functors, full_subcategory_inclusions, small_corpus, walking_arrow, z2};
use crate::transfer::{disc, indisc};

fn systems() -> [&'static dyn BaseOfs; 2] {
    [&EpiMono, &IsoAll]
}

fn check_factorisation(f: &InternalFunctor, ofs: &dyn BaseOfs) {
    let fac = factor_internal(f, ofs).unwrap();
    assert!(fac.middle.is_valid());
    assert!(fac.left.is_valid() && fac.right.is_valid());
    assert_eq!(compose_functors(&fac.right, &fac.left).unwrap(), *f);
    assert!(ofs.in_left(fac.left.f0()));
    assert!(ofs.in_right(fac.right.f0()));
    assert!(fac.right.is_fully_faithful());
}

#[test]
fn base_systems_factor_and_lift() {
    let f = FinMap::new(FinObj::new(4), FinObj::new(5), vec![3, 1, 3, 0]).unwrap();
    for ofs in systems() {
        let (l, r) = ofs.factor(&f);
        assert_eq!(r.after(&l).unwrap(), f);
        assert!(ofs.in_left(&l) && ofs.in_right(&r));
    }
    // Exhaustive uniqueness of base diagonals on small squares.
    let (two, three) = (FinObj::new(2), FinObj::new(3));
    for ofs in systems() {
        for s in all_maps(&three, &two).filter(|s| ofs.in_left(s)) {
            for f in all_maps(&two, &three).filter(|f| ofs.in_right(f)) {
                for p in all_maps(&three, &two) {
                    for q in all_maps(&two, &three) {
                        if f.after(&p).unwrap() != q.after(&s).unwrap() {
                            assert!(matches!(ofs.lift(&s, &f, &p, &q), Err(Error::NonCommuting(_))));
                            continue;
                        }
                        let u = ofs.lift(&s, &f, &p, &q).unwrap();
                        let fillers: Vec<FinMap> = all_maps(&two, &two)
                            .filter(|u| u.after(&s).unwrap() == p && f.after(u).unwrap() == q)
                            .collect();
                        assert_eq!(fillers, vec![u]);
                    }
                }
            }
        }
    }
}

#[test]
fn factorises_every_small_functor() {
    let corpus = small_corpus();
    for a in &corpus {
        for b in &corpus {
            for f in all_functors(a, b) {
                for ofs in systems() {
                    check_factorisation(&f, ofs);
                }
            }
        }
    }
}

#[test]
fn iso_all_middle_has_domain_objects() {
    let a = walking_arrow();
    let b = indisc(&FinObj::new(2)).into_cat();
    for f in all_functors(&a, &b) {
        let fac = factor_internal(&f, &IsoAll).unwrap();
        assert_eq!(fac.middle.objects(), a.objects());
        assert!(fac.left.is_iso_on_objects());
        // Arrows are exactly the arrows of B between images.
        assert_eq!(fac.middle.arrows(), 4);
    }
}

#[test]
fn full_mono_factors_through_itself() {
    let y = chain(3).into_cat();
    for m in full_subcategory_inclusions(&y) {
        let fac = factor_internal(&m, &EpiMono).unwrap();
        assert!(fac.left.is_isomorphism());
        assert_eq!(fac.right.f0(), m.f0());
    }
}

#[test]
fn collapse_to_terminal_has_terminal_middle() {
    let f = to_terminal(&walking_arrow());
    let fac = factor_internal(&f, &EpiMono).unwrap();
    assert_eq!(*fac.middle, terminal_cat());
    assert!(fac.left.is_epi_on_objects());
}

#[test]
fn factorisation_is_unique_up_to_unique_iso() {
    let a = walking_arrow();
    let b = chain(3).into_cat();
    // Relabel the domain by the swap of arrows that is not a functor, so use a coproduct twist instead.
    let sum = coproduct_cat(&a, &a);
    let twist = sum.copair(&sum.inj1, &sum.inj0).unwrap();
    for f in all_functors(&sum.cat, &b) {
        let g = compose_functors(&f, &twist).unwrap();
        for ofs in systems() {
            let (x, y) = (factor_internal(&f, ofs).unwrap(), factor_internal(&g, ofs).unwrap());
            let l_twisted = compose_functors(&x.left, &twist).unwrap();
            let k = lift_square(&y.left, &x.right, &l_twisted, &y.right, ofs).unwrap();
            let back = compose_functors(&y.left, &twist.inverse().unwrap()).unwrap();
            let k_inv = lift_square(&x.left, &y.right, &back, &x.right, ofs).unwrap();
            assert_eq!(compose_functors(&k, &k_inv).unwrap(), InternalFunctor::identity(&x.middle));
            assert_eq!(compose_functors(&k_inv, &k).unwrap(), InternalFunctor::identity(&y.middle));
        }
    }
}

/// Pairs `(s, f)` with `s` in the lifted left class and `f` a full subcategory inclusion in the right class.
fn squares(ofs: &dyn BaseOfs) -> Vec<(InternalFunctor, InternalFunctor)> {
    let corpus = small_corpus();
    let mut out = Vec::new();
    for a in &corpus {
        for b in &corpus {
            for s in all_functors(a, b).into_iter().filter(|s| ofs.in_left(s.f0())) {
                for y in &corpus {
                    for f in full_subcategory_inclusions(y).into_iter().filter(|f| ofs.in_right(f.f0())) {
                        out.push((s.clone(), f));
                    }
                }
            }
        }
    }
    out
}

#[test]
fn lift_square_is_the_unique_filler() {
    let mut checked = 0;
    for ofs in systems() {
        for (s, f) in squares(ofs) {
            let (b, x) = (s.cod(), f.dom());
            let candidates = all_functors(b, x);
            for u in candidates.iter().take(3) {
                let p = compose_functors(u, &s).unwrap();
                let q = compose_functors(&f, u).unwrap();
                let lifted = lift_square(&s, &f, &p, &q, ofs).unwrap();
                let fillers: Vec<&InternalFunctor> = candidates
                    .iter()
                    .filter(|v| compose_functors(v, &s).unwrap() == p && compose_functors(&f, v).unwrap() == q)
                    .collect();
                assert_eq!(fillers, vec![&lifted]);
                assert_eq!(lifted, *u);
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn lift_square_trivial_cases_and_errors() {
    let a = walking_arrow();
    let b = chain(3).into_cat();
    let id_a = InternalFunctor::identity(&a);
    let id_b = InternalFunctor::identity(&b);
    for p in all_functors(&a, &b) {
        // s = identity gives u = p; f = identity gives u = q.
        let q = p.clone();
        assert_eq!(lift_square(&id_a, &id_b, &p, &compose_functors(&id_b, &q).unwrap(), &EpiMono).unwrap(), p);
        assert_eq!(lift_square(&id_a, &id_b, &p, &q, &IsoAll).unwrap(), q);
    }
    // A non-full functor on the right.
    let f = all_functors(&disc(&FinObj::new(2)).into_cat(), &a).into_iter().find(|f| f.f0().is_iso()).unwrap();
    let s = InternalFunctor::identity(&disc(&FinObj::new(2)).into_cat());
    let err = lift_square(&s, &f, &s, &f, &EpiMono).unwrap_err();
    assert!(matches!(err, Error::NotInClass(_)));
    // A square that does not commute.
    let c3 = chain(3).into_cat();
    let fs = all_functors(&a, &c3);
    let err = lift_square(&id_a, &InternalFunctor::identity(&c3), &fs[0], &fs[1], &IsoAll).unwrap_err();
    assert!(matches!(err, Error::NonCommuting(_)));
}

#[test]
fn lift_two_cell_is_the_unique_filler() {
    let mut checked = 0;
    for ofs in systems() {
        for (s, f) in squares(ofs).into_iter().step_by(3) {
            let (b, x) = (s.cod(), f.dom());
            let us = all_functors(b, x);
            for u0 in us.iter().take(3) {
                for u1 in us.iter().take(3) {
                    for gamma in nat_trans(u0, u1, &mut WorkBudget::new(1_000_000)).unwrap() {
                        let alpha_bar = whisker_right(&gamma, &s).unwrap();
                        let beta_bar = whisker_left(&f, &gamma).unwrap();
                        let lifted = lift_two_cell(&s, &f, &alpha_bar, &beta_bar, ofs).unwrap();
                        assert_eq!(lifted, gamma);
                        let fillers: Vec<FinMap> = all_maps(b.c0(), x.c1())
                            .filter_map(|g| InternalNatTrans::new_validated(u0.clone(), u1.clone(), g).ok())
                            .filter(|g| {
                                whisker_right(g, &s).unwrap() == alpha_bar && whisker_left(&f, g).unwrap() == beta_bar
                            })
                            .map(|g| g.alpha().clone())
                            .collect();
                        assert_eq!(fillers, vec![lifted.alpha().clone()]);
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn lift_two_cell_identity_gives_identity() {
    let y = indisc(&FinObj::new(2)).into_cat();
    let f = InternalFunctor::identity(&y);
    let a = walking_arrow();
    let s = InternalFunctor::identity(&a);
    for p in all_functors(&a, &y) {
        let one = InternalNatTrans::identity(&p);
        let gamma = lift_two_cell(&s, &f, &one, &one, &EpiMono).unwrap();
        assert!(gamma.is_identity());
    }
}

/// Direct left orthogonality of `f` against `m`: every commuting square has exactly one filler.
fn orthogonal(f: &InternalFunctor, m: &InternalFunctor) -> bool {
    let (a, b, x, y) = (f.dom(), f.cod(), m.dom(), m.cod());
    let fillers = all_functors(b, x);
    for p in all_functors(a, x) {
        let mp = compose_functors(m, &p).unwrap();
        for q in all_functors(b, y) {
            if compose_functors(&q, f).unwrap() != mp {
                continue;
            }
            let n = fillers
                .iter()
                .filter(|u| compose_functors(u, f).unwrap() == p && compose_functors(m, u).unwrap() == q)
                .count();
            if n != 1 {
                return false;
            }
        }
    }
    true
}

#[test]
fn acute_agrees_with_orthogonality() {
    let corpus = small_corpus();
    let monos: Vec<InternalFunctor> = corpus.iter().flat_map(full_subcategory_inclusions).collect();
    let small: Vec<Cat> = corpus.iter().filter(|c| c.arrows() <= 4).cloned().collect();
    for a in &small {
        for b in &small {
            for f in all_functors(a, b) {
                let direct = monos.iter().all(|m| orthogonal(&f, m));
                assert_eq!(is_acute(&f), direct, "{f:?}");
            }
        }
    }
    // Codiagonal is acute; an endpoint inclusion is not.
    let two = walking_arrow();
    let sum = coproduct_cat(&two, &two);
    let id = InternalFunctor::identity(&two);
    assert!(is_acute(&sum.copair(&id, &id).unwrap()));
    let point = functors(&disc(&FinObj::new(1)).into_cat(), &two, &mut WorkBudget::new(100)).unwrap();
    assert!(!is_acute(&point[0]));
}

#[test]
fn left_class_is_pullback_stable() {
    let corpus = small_corpus();
    for a in &corpus {
        for b in &corpus {
            for s in all_functors(a, b).into_iter().filter(|s| s.is_epi_on_objects()) {
                for z in [walking_arrow(), z2()] {
                    for g in all_functors(&z, b) {
                        let pb = pullback_cat(&s, &g).unwrap();
                        assert!(pb.proj1.is_epi_on_objects());
                        assert!(is_levelwise_pullback(&pb.proj0, &pb.proj1, &s, &g).unwrap());
                    }
                }
            }
        }
    }
}

mod properties {
    use proptest::prelude::*;

    use super::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn sampled_functors_factor(a in 0usize..7, b in 0usize..7, pick in any::<usize>()) {
            let cs = small_corpus();
            let fs = all_functors(&cs[a], &cs[b]);
            prop_assume!(!fs.is_empty());
            let f = &fs[pick % fs.len()];
            for ofs in systems() {
                check_factorisation(f, ofs);
            }
            // The (iso, all) left part is bijective on objects.
            prop_assert!(factor_internal(f, &IsoAll).unwrap().left.f0().is_iso());
        }
    }
}
