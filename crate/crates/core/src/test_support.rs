use crate::base::FinObj;
use crate::internal::{chain, functors, Cat, InternalCategory, InternalFunctor, WorkBudget};
use crate::limits2d::free_arrow;
use crate::transfer::{disc, indisc};

/// One object, arrows the group Z/2.
pub fn z2() -> Cat {
    InternalCategory::from_composition(1, 2, vec![0, 0], vec![0, 0], vec![0], |u, v| u ^ v).unwrap().into_cat()
}

pub fn walking_arrow() -> Cat {
    free_arrow().into_cat()
}

/// Small categories covering empty, discrete, codiscrete, posets and a group.
pub fn small_corpus() -> Vec<Cat> {
    vec![
        disc(&FinObj::new(0)).into_cat(),
        disc(&FinObj::new(1)).into_cat(),
        disc(&FinObj::new(2)).into_cat(),
        indisc(&FinObj::new(2)).into_cat(),
        walking_arrow(),
        chain(3).into_cat(),
        z2(),
    ]
}

pub fn all_functors(a: &Cat, b: &Cat) -> Vec<InternalFunctor> {
    functors(a, b, &mut WorkBudget::new(10_000_000)).unwrap()
}

/// Every full-subcategory inclusion into `y`, one per subset of objects.
pub fn full_subcategory_inclusions(y: &Cat) -> Vec<InternalFunctor> {
    let n = y.objects();
    (0..1usize << n)
        .map(|mask| {
            let members: Vec<usize> = (0..n).filter(|&x| mask >> x & 1 == 1).collect();
            let incl = crate::base::FinMap::new(FinObj::new(members.len()), y.c0().clone(), members).unwrap();
            crate::factorisation::full_preimage(y, &incl).unwrap()
        })
        .collect()
}
