use super::*;
use crate::base::{all_maps, FinMap, FinObj, FALSE, TRUE};
use crate::error::Error;
use crate::factorisation::full_preimage;
use crate::internal::{are_isomorphic, chain, is_levelwise_pullback, nat_trans, Cat, InternalFunctor, WorkBudget};
use crate::limits2d::{coproduct_cat, free_arrow, terminal_cat, to_terminal};
use crate::test_support::{all_functors, full_subcategory_inclusions, small_corpus, walking_arrow};
use crate::transfer::{adjunction_disc_objects, disc, indisc, indisc_map, pi0, AdjunctionWitness};

fn point() -> Cat {
    terminal_cat().into_cat()
}

#[test]
fn classifier_is_the_free_isomorphism() {
    let c = full_subobject_classifier();
    assert_eq!((c.omega.objects(), c.omega.arrows()), (2, 4));
    assert!(are_isomorphic(&c.omega, &indisc(&FinObj::new(2)).into_cat()));
    assert!(c.omega.c1().elements().all(|u| !c.omega.hom(c.omega.target(u), c.omega.source(u)).is_empty()));
    assert!(c.top.is_full_mono());
    assert_eq!(c.top.f0().apply(0), TRUE);
}

#[test]
fn classifying_squares_are_unique_pullbacks() {
    let c = full_subobject_classifier();
    let mut classified = 0;
    for b in small_corpus() {
        let candidates = all_functors(&b, &c.omega);
        for f in full_subcategory_inclusions(&b) {
            let chi = classify_full_mono(&f).unwrap();
            assert!(chi.is_valid());
            let bang = to_terminal(f.dom());
            assert!(is_levelwise_pullback(&f, &bang, &chi, &c.top).unwrap());
            let pullbacks: Vec<&InternalFunctor> = candidates
                .iter()
                .filter(|g| is_levelwise_pullback(&f, &bang, g, &c.top).unwrap())
                .collect();
            assert_eq!(pullbacks, vec![&chi]);
            classified += 1;
        }
    }
    assert!(classified > 10);
}

#[test]
fn classify_examples() {
    let b = chain(3).into_cat();
    let chi = classify_full_mono(&InternalFunctor::identity(&b)).unwrap();
    assert!(chi.f0().table().iter().all(|&v| v == TRUE));
    let i2 = indisc(&FinObj::new(2)).into_cat();
    let end = InternalFunctor::from_tables(&point(), &i2, vec![1], vec![3]).unwrap();
    let chi = classify_full_mono(&end).unwrap();
    assert_eq!(chi.f0().table(), &[FALSE, TRUE]);
    // Not full: the two endpoints of the walking arrow seen as a discrete subcategory.
    let two = walking_arrow();
    let ends = InternalFunctor::from_tables(&disc(&FinObj::new(2)).into_cat(), &two, vec![0, 1], vec![0, 2]).unwrap();
    assert_eq!(classify_full_mono(&ends).unwrap_err(), Error::NotFullMono);
}

#[test]
fn strict_bi_sieves_are_unions_of_components() {
    for b in small_corpus() {
        let q = crate::transfer::pi0_coequalizer(&b).q;
        for f in full_subcategory_inclusions(&b) {
            let members = f.f0().table();
            let closed = b.c0().elements().all(|x| {
                let inside = members.contains(&x);
                b.c0().elements().filter(|&y| q.apply(y) == q.apply(x)).all(|y| members.contains(&y) == inside)
            });
            assert_eq!(is_strict_bi_sieve(&f), closed);
            if closed {
                let cert = classify_strict_bi_sieve(&f).unwrap();
                assert!(cert.pi0_mono && cert.pullback_verified);
                assert!(cert.chi.is_valid());
            } else {
                assert_eq!(classify_strict_bi_sieve(&f).unwrap_err(), Error::NotBiSieve);
            }
        }
    }
}

#[test]
fn bi_sieve_examples() {
    let two = walking_arrow();
    let cert = classify_strict_bi_sieve(&InternalFunctor::identity(&two)).unwrap();
    assert!(cert.chi.f0().table().iter().all(|&v| v == TRUE));
    let sum = coproduct_cat(&two, &disc(&FinObj::new(1)).into_cat());
    let cert = classify_strict_bi_sieve(&sum.inj0).unwrap();
    assert_eq!(cert.chi.f0().table(), &[TRUE, TRUE, FALSE]);
    assert_eq!(pi0(&sum.cat).size(), 2);
    let end = InternalFunctor::from_tables(&point(), &two, vec![0], vec![0]).unwrap();
    assert!(end.is_full_mono());
    assert!(!is_strict_bi_sieve(&end));
}

#[test]
fn parallel_functors_into_indiscrete_have_one_cell() {
    let target = indisc(&FinObj::new(3)).into_cat();
    for a in small_corpus() {
        let fs = all_functors(&a, &target);
        for f in &fs {
            for g in &fs {
                assert_eq!(nat_trans(f, g, &mut WorkBudget::new(1_000_000)).unwrap().len(), 1);
            }
        }
    }
}

#[test]
fn finite_sets_are_boolean_and_two_valued() {
    assert!(is_boolean());
    let (two_valued, report) = is_two_valued();
    assert!(two_valued);
    assert_eq!(report.functors, 2);
    assert_eq!((report.hom_objects, report.hom_arrows), (2, 4));
    assert!(report.all_invertible && report.is_free_isomorphism);
}

#[test]
fn sections_of_generated_ff_epis() {
    let mut certified = 0;
    for b in small_corpus() {
        for n in b.objects()..=b.objects() + 2 {
            for e0 in all_maps(&FinObj::new(n), b.c0()).filter(FinMap::is_epi) {
                let e = full_preimage(&b, &e0).unwrap();
                let cert = section_of_ff_epi(&e).unwrap();
                cert.verify(&e).unwrap();
                assert!(cert.unit.inverse().is_some());
                assert_eq!(cert.section.f0(), &crate::base::choose_section(&e0).unwrap());
                certified += 1;
            }
        }
    }
    assert!(certified >= 100);
}

#[test]
fn section_examples() {
    let b = chain(3).into_cat();
    let cert = section_of_ff_epi(&InternalFunctor::identity(&b)).unwrap();
    assert_eq!(cert.section, InternalFunctor::identity(&b));
    assert!(cert.unit.is_identity());

    let e0 = FinMap::new(FinObj::new(3), FinObj::new(2), vec![0, 1, 1]).unwrap();
    let e = indisc_map(&e0);
    let cert = section_of_ff_epi(&e).unwrap();
    let s0 = FinMap::new(FinObj::new(2), FinObj::new(3), vec![0, 1]).unwrap();
    assert_eq!(cert.section, indisc_map(&s0));

    // The counit disc(A0) -> A is fully faithful only for discrete A.
    let adj = adjunction_disc_objects();
    for a in small_corpus() {
        let eps = adj.counit(&a).unwrap();
        let discrete = a.arrows() == a.objects();
        match section_of_ff_epi(&eps) {
            Ok(_) => assert!(discrete),
            Err(err) => {
                assert!(!discrete);
                assert!(matches!(err, Error::NotFfEpi(_)));
            }
        }
    }
}

#[test]
fn choice_audit_filters_and_certifies() {
    assert_eq!(categorified_choice_audit(&[]), ChoiceFragment::default());
    let b = walking_arrow();
    let e0 = FinMap::new(FinObj::new(3), FinObj::new(2), vec![0, 1, 1]).unwrap();
    let good = full_preimage(&b, &e0).unwrap();
    let not_ff = to_terminal(&free_arrow().into_cat());
    let not_epi = InternalFunctor::from_tables(&point(), &b, vec![0], vec![0]).unwrap();
    let frag = categorified_choice_audit(&[good, not_ff, not_epi]);
    assert_eq!(frag.certificates, 1);
    assert_eq!(frag.skipped.iter().map(|s| s.0).collect::<Vec<_>>(), vec![1, 2]);
    assert!(frag.counterexamples.is_empty());
}
