//! Internal categories, functors and 2-cells over finite sets, with validators
//! and the 2-category operations.
//!
//! Orientation is fixed throughout: `d1` is the source, `d0` the target,
//! a composable pair `(u, v)` has `d1(u) = d0(v)`, and a 2-cell `α: f ⇒ g`
//! has `d1 ∘ α = f0` and `d0 ∘ α = g0`.

mod category;
mod enumerate;
mod functor;
mod iso;
mod nat;
mod validate;

pub use category::{Cat, InternalCategory};
pub use enumerate::{functors, nat_trans, WorkBudget, DEFAULT_WORK_LIMIT};
pub use functor::{compose_functors, ff_pullback, is_levelwise_pullback, InternalFunctor};
pub use iso::{are_isomorphic, find_isomorphism, find_isomorphism_bounded, DEFAULT_ISO_BUDGET};
pub use nat::{hcomp, hcomp_alt, vcomp, whisker_left, whisker_right, InternalNatTrans};
pub use validate::{ValidationReport, Violation};

/// The preorder `0 ≤ 1 ≤ .. ≤ n-1`; arrows are pairs `(i, j)` with `i ≤ j`, lexicographic.
pub fn chain(n: usize) -> InternalCategory {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect();
    let index = |i: usize, j: usize| pairs.iter().position(|&p| p == (i, j)).expect("i ≤ j");
    InternalCategory::from_composition(
        n,
        pairs.len(),
        pairs.iter().map(|p| p.1).collect(),
        pairs.iter().map(|p| p.0).collect(),
        (0..n).map(|i| index(i, i)).collect(),
        |u, v| index(pairs[v].0, pairs[u].1),
    )
    .expect("chain tables are well shaped")
}
