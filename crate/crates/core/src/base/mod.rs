//! Finite sets with chosen finite limits, coproducts, exponentials,
//! the two-element subobject classifier and image factorisation.
//!
//! Elements of a set of size `n` are `0..n`. Every chosen limit enumerates
//! its solution tuples lexicographically, so derived structure maps agree
//! on the nose whenever they agree mathematically.

mod classifier;
mod colimits;
mod exponential;
mod limits;
mod map;

pub use classifier::{
    characteristic_map, choose_section, factor_epi_mono, omega, subobject_classifier, top, FALSE, TRUE,
};
pub use colimits::{coequalizer, coproduct, coproduct_map, Coequalizer, Coproduct, UnionFind};
pub use exponential::{exponential, Exponential, MAX_EXPONENTIAL_SIZE};
pub use limits::{equalizer, pairing, product, product_map, pullback, pullback_map, terminal, ChosenLimit};
pub use map::{compose, FinMap, FinObj};

/// All maps `dom -> cod` in lexicographic table order.
pub fn all_maps(dom: &FinObj, cod: &FinObj) -> impl Iterator<Item = FinMap> {
    let (n, b) = (dom.size(), cod.size());
    let total = if n == 0 { 1 } else if b == 0 { 0 } else { b.pow(n as u32) };
    let (dom, cod) = (dom.clone(), cod.clone());
    (0..total).map(move |mut k| {
        let mut t = vec![0; n];
        for a in (0..n).rev() {
            t[a] = k % b;
            k /= b;
        }
        FinMap::new_unchecked(dom.clone(), cod.clone(), t)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use proptest::prelude::*;

    fn map(dom: usize, cod: usize, t: &[usize]) -> FinMap {
        FinMap::new(FinObj::new(dom), FinObj::new(cod), t.to_vec()).unwrap()
    }

    fn arb_map(max_dom: usize, max_cod: usize) -> impl Strategy<Value = FinMap> {
        (0..=max_dom, 1..=max_cod).prop_flat_map(|(d, c)| {
            proptest::collection::vec(0..c, d).prop_map(move |t| map(d, c, &t))
        })
    }

    fn arb_parallel(max_dom: usize, max_cod: usize) -> impl Strategy<Value = (FinMap, FinMap)> {
        (0..=max_dom, 1..=max_cod).prop_flat_map(|(d, c)| {
            (proptest::collection::vec(0..c, d), proptest::collection::vec(0..c, d))
                .prop_map(move |(s, t)| (map(d, c, &s), map(d, c, &t)))
        })
    }

    #[test]
    fn compose_examples() {
        let g = map(2, 3, &[2, 1]);
        assert_eq!(compose(&g, &FinMap::identity(&FinObj::new(2))).unwrap(), g);
        let swap = map(2, 2, &[1, 0]);
        assert_eq!(compose(&swap, &swap).unwrap(), FinMap::identity(&FinObj::new(2)));
        let f = map(3, 2, &[0, 0, 1]);
        let g = map(2, 3, &[2, 0]);
        assert_eq!(compose(&g, &f).unwrap().table(), &[2, 2, 0]);
        assert!(matches!(compose(&f, &f), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn labels_do_not_affect_equality() {
        let a = FinObj::labelled(vec!["x".into(), "y".into()]);
        assert_eq!(a, FinObj::new(2));
        assert_eq!(a.label(1), "y");
    }

    #[test]
    fn table_range_is_checked() {
        assert!(matches!(
            FinMap::new(FinObj::new(2), FinObj::new(2), vec![0, 2]),
            Err(Error::OutOfRange { index: 1, value: 2, cod: 2 })
        ));
        assert!(matches!(FinMap::new(FinObj::new(2), FinObj::new(2), vec![0]), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn limit_examples() {
        let f = FinMap::to_terminal(&FinObj::new(2));
        let g = FinMap::to_terminal(&FinObj::new(3));
        assert_eq!(pullback(&f, &g).unwrap().size(), 6);

        let id2 = FinMap::identity(&FinObj::new(2));
        let eq = equalizer(&id2, &id2).unwrap();
        assert_eq!(eq.size(), 2);
        assert!(eq.projection(0).is_identity());

        let f = map(3, 2, &[0, 1, 0]);
        let g = map(2, 2, &[1, 1]);
        let pb = pullback(&f, &g).unwrap();
        assert_eq!(pb.size(), 2);
        assert_eq!(pb.tuple(0), &[1, 0]);
        assert_eq!(pb.tuple(1), &[1, 1]);
        assert!(matches!(pullback(&f, &map(2, 3, &[0, 0])), Err(Error::DomainMismatch(_))));
    }

    #[test]
    fn colimit_examples() {
        assert_eq!(coproduct(&FinObj::new(2), &FinObj::new(3)).object.size(), 5);
        let id3 = FinMap::identity(&FinObj::new(3));
        assert!(coequalizer(&id3, &id3).unwrap().q.is_identity());
        let d0 = map(3, 3, &[0, 1, 0]);
        let d1 = map(3, 3, &[1, 1, 2]);
        assert_eq!(coequalizer(&d0, &d1).unwrap().object.size(), 1);
    }

    #[test]
    fn coequalizer_numbers_classes_by_least_member() {
        let f = map(2, 5, &[4, 1]);
        let g = map(2, 5, &[2, 3]);
        let q = coequalizer(&f, &g).unwrap().q;
        assert_eq!(q.table(), &[0, 1, 2, 1, 2]);
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(exponential(&FinObj::new(2), &FinObj::new(2)).unwrap().object.size(), 4);
        assert_eq!(exponential(&FinObj::new(0), &FinObj::new(5)).unwrap().object.size(), 1);
        let e = exponential(&FinObj::new(2), &FinObj::new(2)).unwrap();
        let k = e.index_of(&[1, 0]).unwrap();
        assert_eq!(e.eval.apply(k * 2), 1);
        assert!(matches!(
            exponential(&FinObj::new(30), &FinObj::new(3)),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn classifier_examples() {
        assert_eq!(omega().size(), 2);
        let b = FinObj::new(3);
        assert_eq!(characteristic_map(&FinMap::identity(&b)).unwrap().table(), &[1, 1, 1]);
        assert_eq!(characteristic_map(&map(1, 2, &[0])).unwrap().table(), &[1, 0]);
        assert!(matches!(characteristic_map(&map(2, 2, &[1, 1])), Err(Error::NotMono { .. })));
    }

    #[test]
    fn image_and_section_examples() {
        let (l, r) = factor_epi_mono(&map(3, 3, &[0, 0, 2]));
        assert_eq!(l.table(), &[0, 0, 1]);
        assert_eq!(r.table(), &[0, 2]);
        let (l, _) = factor_epi_mono(&map(2, 3, &[2, 0]));
        assert!(l.is_iso());
        assert_eq!(choose_section(&map(3, 2, &[0, 1, 0])).unwrap().table(), &[0, 1]);
        assert!(matches!(choose_section(&map(2, 3, &[0, 1])), Err(Error::NotEpi { missing: 2 })));
    }

    #[test]
    fn all_maps_counts() {
        assert_eq!(all_maps(&FinObj::new(3), &FinObj::new(2)).count(), 8);
        assert_eq!(all_maps(&FinObj::new(0), &FinObj::new(0)).count(), 1);
        assert_eq!(all_maps(&FinObj::new(1), &FinObj::new(0)).count(), 0);
    }

    /// Brute-force pullback: every pair, filtered.
    fn pullback_oracle(f: &FinMap, g: &FinMap) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..f.dom().size() {
            for y in 0..g.dom().size() {
                if f.table()[x] == g.table()[y] {
                    out.push((x, y));
                }
            }
        }
        out
    }

    #[test]
    fn mediating_maps_are_unique() {
        // Every cone from a small domain into a small pullback: exactly one map into the apex commutes.
        let f = map(3, 2, &[0, 1, 1]);
        let g = map(3, 2, &[1, 0, 1]);
        let pb = pullback(&f, &g).unwrap();
        let z = FinObj::new(2);
        for a in all_maps(&z, f.dom()) {
            for b in all_maps(&z, g.dom()) {
                let commutes = compose(&f, &a).unwrap() == compose(&g, &b).unwrap();
                let candidates: Vec<_> = all_maps(&z, pb.apex())
                    .filter(|u| {
                        compose(pb.projection(0), u).unwrap() == a && compose(pb.projection(1), u).unwrap() == b
                    })
                    .collect();
                if commutes {
                    assert_eq!(candidates.len(), 1);
                    assert_eq!(pb.mediate(&[a.clone(), b.clone()]).unwrap(), candidates[0]);
                } else {
                    assert!(candidates.is_empty());
                    assert!(pb.mediate(&[a.clone(), b.clone()]).is_err());
                }
            }
        }
    }

    #[test]
    fn epi_mono_lifts_are_unique() {
        // Squares r∘p = q∘e with e epi, r mono have exactly one diagonal.
        let e = map(3, 2, &[0, 1, 1]);
        let r = map(2, 3, &[2, 0]);
        for p in all_maps(e.dom(), r.dom()) {
            for q in all_maps(e.cod(), r.cod()) {
                if compose(&r, &p).unwrap() != compose(&q, &e).unwrap() {
                    continue;
                }
                let fillers = all_maps(e.cod(), r.dom())
                    .filter(|u| compose(u, &e).unwrap() == p && compose(&r, u).unwrap() == q)
                    .count();
                assert_eq!(fillers, 1);
            }
        }
    }

    #[test]
    fn characteristic_map_is_the_unique_classifier() {
        let i = map(2, 4, &[3, 1]);
        let winners: Vec<_> = all_maps(i.cod(), &omega())
            .filter(|chi| {
                let pb = pullback(chi, &top()).unwrap();
                // Pullback of ⊤ along χ must be the image of i, with i mediating.
                let legs = [i.clone(), FinMap::to_terminal(i.dom())];
                pb.size() == i.dom().size() && pb.mediate(&legs).map(|u| u.is_iso()).unwrap_or(false)
            })
            .collect();
        assert_eq!(winners, vec![characteristic_map(&i).unwrap()]);
    }

    proptest! {
        #[test]
        fn pullback_matches_brute_force(f in arb_map(5, 4), g in arb_map(5, 4)) {
            prop_assume!(f.cod() == g.cod());
            let pb = pullback(&f, &g).unwrap();
            let got: Vec<_> = pb.tuples().map(|t| (t[0], t[1])).collect();
            prop_assert_eq!(got, pullback_oracle(&f, &g));
            prop_assert_eq!(compose(&f, pb.projection(0)).unwrap(), compose(&g, pb.projection(1)).unwrap());
            for k in 0..pb.size() {
                prop_assert_eq!(pb.index_of(pb.tuple(k)), Some(k));
            }
        }

        #[test]
        fn coequalizer_is_the_finest_quotient((f, g) in arb_parallel(5, 6)) {
            let c = coequalizer(&f, &g).unwrap();
            prop_assert_eq!(compose(&c.q, &f).unwrap(), compose(&c.q, &g).unwrap());
            prop_assert!(c.q.is_epi());
            // Oracle: naive closure of the relation.
            let n = f.cod().size();
            let mut rel = vec![vec![false; n]; n];
            for x in 0..n { rel[x][x] = true; }
            for x in 0..f.dom().size() {
                rel[f.apply(x)][g.apply(x)] = true;
                rel[g.apply(x)][f.apply(x)] = true;
            }
            for k in 0..n { for a in 0..n { for b in 0..n {
                if rel[a][k] && rel[k][b] { rel[a][b] = true; }
            }}}
            for a in 0..n { for b in 0..n {
                prop_assert_eq!(rel[a][b], c.q.apply(a) == c.q.apply(b));
            }}
        }

        #[test]
        fn coproducts_are_extensive(a in 0usize..4, b in 0usize..4, z in proptest::collection::vec(0usize..8, 0..6)) {
            prop_assume!(a + b > 0);
            let cp = coproduct(&FinObj::new(a), &FinObj::new(b));
            let h = FinMap::new(FinObj::new(z.len()), cp.object.clone(), z.iter().map(|v| v % (a + b)).collect()).unwrap();
            let p0 = pullback(&h, &cp.inj0).unwrap();
            let p1 = pullback(&h, &cp.inj1).unwrap();
            prop_assert_eq!(p0.size() + p1.size(), z.len());
            let back = coproduct(p0.apex(), p1.apex()).copair(p0.projection(0), p1.projection(0)).unwrap();
            prop_assert!(back.is_iso());
        }

        #[test]
        fn currying_is_bijective(a in 0usize..4, b in 1usize..4, z in 0usize..4, seed in any::<u64>()) {
            let exp = exponential(&FinObj::new(a), &FinObj::new(b)).unwrap();
            let za = product(&FinObj::new(z), &FinObj::new(a));
            let mut s = seed;
            let h = FinMap::from_fn(za.apex().clone(), FinObj::new(b), |_| {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                (s >> 33) as usize % b
            }).unwrap();
            let g = exp.curry(&FinObj::new(z), &h).unwrap();
            prop_assert_eq!(exp.uncurry(&g).unwrap(), h.clone());
            prop_assert_eq!(exp.curry(&FinObj::new(z), &exp.uncurry(&g).unwrap()).unwrap(), g.clone());
            // eval ∘ (g × id) = h
            let ga = exp.product().mediate(&[compose(&g, za.projection(0)).unwrap(), za.projection(1).clone()]).unwrap();
            prop_assert_eq!(compose(&exp.eval, &ga).unwrap(), h);
        }

        #[test]
        fn image_factorisation_is_epi_then_mono(f in arb_map(6, 5)) {
            let (l, r) = factor_epi_mono(&f);
            prop_assert!(l.is_epi());
            prop_assert!(r.is_mono());
            prop_assert_eq!(compose(&r, &l).unwrap(), f.clone());
            prop_assert!(r.table().windows(2).all(|w| w[0] < w[1]));
        }

        #[test]
        fn chosen_sections_split(f in arb_map(6, 4)) {
            match choose_section(&f) {
                Ok(s) => {
                    prop_assert!(compose(&f, &s).unwrap().is_identity());
                    for y in 0..f.cod().size() {
                        prop_assert_eq!(s.apply(y), f.preimage(y)[0]);
                    }
                }
                Err(_) => prop_assert!(!f.is_epi()),
            }
        }
    }
}
