use serde::Serialize;

use crate::base::{equalizer, pairing, product, FinMap, FinObj};
use crate::error::Result;
use crate::internal::{
    compose_functors, functors, whisker_right, Cat, InternalFunctor, InternalNatTrans, WorkBudget,
};
use crate::limits2d::{copower_by_two, power_by_two, terminal_cat};
use crate::transfer::pi0;

/// `2 ⊗ 1`, the copower of the terminal category by the walking arrow.
pub fn copower_of_point() -> Cat {
    copower_by_two(&terminal_cat().into_cat()).expect("the point has a copower").carrier
}

/// The functor `2 ⊗ 1 -> A` picking the arrow `u`: the 2-cell between the
/// functors `1 -> A` at its endpoints, sent through the copower bijection.
pub fn arrow_probe(a: &Cat, u: usize) -> Result<InternalFunctor> {
    let point = terminal_cat().into_cat();
    let copower = copower_by_two(&point)?;
    let at = |x: usize| InternalFunctor::from_tables(&point, a, vec![x], vec![a.identity(x)]);
    let cell = InternalNatTrans::new_validated(
        at(a.source(u))?,
        at(a.target(u))?,
        FinMap::new(point.c0().clone(), a.c1().clone(), vec![u])?,
    )?;
    copower.cell_to_functor(&cell)
}

/// A functor out of a family member that tells two 1-cells or 2-cells apart.
#[derive(Clone, Debug)]
pub struct Probe {
    pub member: usize,
    pub functor: InternalFunctor,
}

/// A `h: G -> A` with `f h ≠ g h`, for `G` in `family`.
///
/// For `2 ⊗ 1` the probe is the arrow where `f1` and `g1` first differ; other members
/// are searched over all their functors into `A`. `None` when `f = g` or nothing separates them.
pub fn distinguish(
    family: &[Cat],
    f: &InternalFunctor,
    g: &InternalFunctor,
    budget: &mut WorkBudget,
) -> Result<Option<Probe>> {
    if f == g {
        return Ok(None);
    }
    let a = f.dom();
    let probe_domain = copower_of_point();
    for (member, gen) in family.iter().enumerate() {
        let candidates = if **gen == *probe_domain {
            match a.c1().elements().find(|&u| f.f1().apply(u) != g.f1().apply(u)) {
                Some(u) => vec![arrow_probe(a, u)?],
                None => Vec::new(),
            }
        } else {
            functors(gen, a, budget)?
        };
        for h in candidates {
            if compose_functors(f, &h)? != compose_functors(g, &h)? {
                return Ok(Some(Probe { member, functor: h }));
            }
        }
    }
    Ok(None)
}

/// A `h: G -> A` with `α h ≠ β h`: the cells become functors `A -> B^2`, which are
/// separated as 1-cells, and the separating probe is checked on the cells themselves.
pub fn distinguish_cells(
    family: &[Cat],
    alpha: &InternalNatTrans,
    beta: &InternalNatTrans,
    budget: &mut WorkBudget,
) -> Result<Option<Probe>> {
    if alpha == beta {
        return Ok(None);
    }
    let power = power_by_two(alpha.src().cod())?;
    let (fa, fb) = (power.cell_to_functor(alpha)?, power.cell_to_functor(beta)?);
    match distinguish(family, &fa, &fb, budget)? {
        Some(p) if whisker_right(alpha, &p.functor)? != whisker_right(beta, &p.functor)? => Ok(Some(p)),
        _ => Ok(None),
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GeneratorReport {
    pub pairs: usize,
    pub distinguished: usize,
    pub cell_pairs: usize,
    pub cells_distinguished: usize,
    /// Indices of distinct pairs left unseparated, 1-cells then 2-cells.
    pub failures: Vec<String>,
}

impl GeneratorReport {
    pub fn holds(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn absorb(&mut self, other: GeneratorReport) {
        self.pairs += other.pairs;
        self.distinguished += other.distinguished;
        self.cell_pairs += other.cell_pairs;
        self.cells_distinguished += other.cells_distinguished;
        self.failures.extend(other.failures);
    }
}

/// Joint faithfulness of `family` on the given distinct pairs of 1-cells and 2-cells.
pub fn generator_check(
    family: &[Cat],
    pairs: &[(InternalFunctor, InternalFunctor)],
    cell_pairs: &[(InternalNatTrans, InternalNatTrans)],
    budget: &mut WorkBudget,
) -> Result<GeneratorReport> {
    let mut report = GeneratorReport::default();
    for (k, (f, g)) in pairs.iter().enumerate() {
        if f == g {
            continue;
        }
        report.pairs += 1;
        match distinguish(family, f, g, budget)? {
            Some(_) => report.distinguished += 1,
            None => report.failures.push(format!("functor pair {k}")),
        }
    }
    for (k, (a, b)) in cell_pairs.iter().enumerate() {
        if a == b {
            continue;
        }
        report.cell_pairs += 1;
        match distinguish_cells(family, a, b, budget)? {
            Some(_) => report.cells_distinguished += 1,
            None => report.failures.push(format!("cell pair {k}")),
        }
    }
    Ok(report)
}

/// Whether `A --Δ--> A × A ==(π1 × Δ, Δ × π2)==> A × A × A` is an equaliser in finite sets.
pub fn diagonal_is_equaliser(a: &FinObj) -> Result<bool> {
    let aa = product(a, a);
    let (p1, p2) = (aa.projection(0), aa.projection(1));
    let id = FinMap::identity(a);
    let diagonal = pairing(&id, &id)?;
    // (x, y) ↦ ((x, x), y) and ((x, y), y) in (A × A) × A.
    let left = pairing(&pairing(p1, p1)?, p2)?;
    let right = pairing(&pairing(p1, p2)?, p2)?;
    let eq = equalizer(&left, &right)?;
    if left.after(&diagonal)? != right.after(&diagonal)? {
        return Ok(false);
    }
    Ok(eq.mediate(&[diagonal])?.is_iso())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WellPointedReport {
    pub generator: GeneratorReport,
    pub components_of_probe: usize,
    pub equaliser_sizes: Vec<usize>,
    pub equaliser_holds: bool,
}

impl WellPointedReport {
    pub fn holds(&self) -> bool {
        self.generator.holds() && self.components_of_probe == 1 && self.equaliser_holds
    }
}

/// Generator check with `{2 ⊗ 1}`, `Π0(2 ⊗ 1) = 1`, and the diagonal equaliser for base sizes `0..=max_base`.
pub fn two_well_pointed_check(
    pairs: &[(InternalFunctor, InternalFunctor)],
    cell_pairs: &[(InternalNatTrans, InternalNatTrans)],
    max_base: usize,
    budget: &mut WorkBudget,
) -> Result<WellPointedReport> {
    let probe = copower_of_point();
    let generator = generator_check(std::slice::from_ref(&probe), pairs, cell_pairs, budget)?;
    let equaliser_sizes: Vec<usize> = (0..=max_base).collect();
    let equaliser_holds = equaliser_sizes
        .iter()
        .map(|&n| diagonal_is_equaliser(&FinObj::new(n)))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .all(|b| b);
    Ok(WellPointedReport { generator, components_of_probe: pi0(&probe).size(), equaliser_sizes, equaliser_holds })
}
