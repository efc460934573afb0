use std::collections::HashMap;

use crate::error::Result;
use crate::internal::{functors, nat_trans, vcomp, Cat, InternalCategory, InternalFunctor, InternalNatTrans, WorkBudget};

/// The category of functors `A -> B` and 2-cells, found by direct enumeration.
///
/// Arrows are grouped by `(source, target)` functor indices in lexicographic
/// order, then by component assigner.
#[derive(Clone, Debug)]
pub struct HomCategory {
    pub objects: Vec<InternalFunctor>,
    pub arrows: Vec<InternalNatTrans>,
    source: Vec<usize>,
    target: Vec<usize>,
    identity: Vec<usize>,
    index: HashMap<(usize, usize, Vec<usize>), usize>,
}

pub fn hom_category(a: &Cat, b: &Cat, budget: &mut WorkBudget) -> Result<HomCategory> {
    let objects = functors(a, b, budget)?;
    let (mut arrows, mut source, mut target) = (Vec::new(), Vec::new(), Vec::new());
    for (s, f) in objects.iter().enumerate() {
        for (t, g) in objects.iter().enumerate() {
            for alpha in nat_trans(f, g, budget)? {
                arrows.push(alpha);
                source.push(s);
                target.push(t);
            }
        }
    }
    let index: HashMap<(usize, usize, Vec<usize>), usize> = arrows
        .iter()
        .enumerate()
        .map(|(k, alpha)| ((source[k], target[k], alpha.alpha().table().to_vec()), k))
        .collect();
    let identity = objects
        .iter()
        .enumerate()
        .map(|(s, f)| index[&(s, s, InternalNatTrans::identity(f).alpha().table().to_vec())])
        .collect();
    Ok(HomCategory { objects, arrows, source, target, identity, index })
}

impl HomCategory {
    /// Index of `β · α` for arrows with `target(α) = source(β)`.
    pub fn compose(&self, beta: usize, alpha: usize) -> Option<usize> {
        if self.target[alpha] != self.source[beta] {
            return None;
        }
        let c = vcomp(&self.arrows[beta], &self.arrows[alpha]).ok()?;
        self.index.get(&(self.source[alpha], self.target[beta], c.alpha().table().to_vec())).copied()
    }

    pub fn index_of_functor(&self, f: &InternalFunctor) -> Option<usize> {
        self.objects.iter().position(|g| g == f)
    }

    pub fn index_of_cell(&self, alpha: &InternalNatTrans) -> Option<usize> {
        let s = self.index_of_functor(alpha.src())?;
        let t = self.index_of_functor(alpha.tgt())?;
        self.index.get(&(s, t, alpha.alpha().table().to_vec())).copied()
    }

    pub fn as_internal(&self) -> InternalCategory {
        InternalCategory::from_composition(
            self.objects.len(),
            self.arrows.len(),
            self.target.clone(),
            self.source.clone(),
            self.identity.clone(),
            |u, v| self.compose(u, v).expect("2-cells compose vertically"),
        )
        .expect("hom tables are well shaped")
    }
}
