use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::base::{all_maps, FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{whisker_left, whisker_right, Cat, InternalFunctor, InternalNatTrans, WorkBudget};
use crate::transfer::{disc, disc_map};

/// A candidate `1 --z--> N --s--> N`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NnoCandidate {
    pub n: usize,
    pub z: usize,
    pub s: Vec<usize>,
}

/// Test data `1 --f--> X --g--> X`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursionDatum {
    pub x: usize,
    pub f: usize,
    pub g: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "camelCase")]
pub enum RecursorOutcome {
    UniqueRecursor,
    NoRecursor,
    MultipleRecursors,
}

/// The outcome of one test datum against a candidate.
///
/// `recursors` holds the unique `u`, or two distinct ones, or nothing; each
/// listed map satisfies `u ∘ z = f` and `u ∘ s = g ∘ u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NnoVerdict {
    pub candidate: NnoCandidate,
    pub datum: RecursionDatum,
    pub outcome: RecursorOutcome,
    pub recursors: Vec<Vec<usize>>,
    /// The datum itself when the outcome is not `uniqueRecursor`.
    pub counterexample: Option<RecursionDatum>,
}

impl NnoCandidate {
    pub fn new(z: &FinMap, s: &FinMap) -> Result<Self> {
        let n = s.dom().size();
        if z.dom().size() != 1 || z.cod().size() != n || s.cod().size() != n {
            return Err(Error::ShapeMismatch("a candidate needs z: 1 -> N and s: N -> N".into()));
        }
        Ok(NnoCandidate { n, z: z.apply(0), s: s.table().to_vec() })
    }

    /// The orbit `z, s z, s² z, ...` up to its first repeat, and the index it re-enters at.
    pub fn orbit(&self) -> (Vec<usize>, usize) {
        let mut seen = HashMap::new();
        let mut orbit = Vec::new();
        let mut e = self.z;
        while let std::collections::hash_map::Entry::Vacant(v) = seen.entry(e) {
            v.insert(orbit.len());
            orbit.push(e);
            e = self.s[e];
        }
        let entry = seen[&e];
        (orbit, entry)
    }

    /// `(tail length, cycle length)` of the orbit of `z`.
    pub fn orbit_shape(&self) -> (usize, usize) {
        let (orbit, entry) = self.orbit();
        (entry, orbit.len() - entry)
    }

    pub fn is_recursor(&self, datum: &RecursionDatum, u: &[usize]) -> bool {
        u.len() == self.n && u[self.z] == datum.f && (0..self.n).all(|e| u[self.s[e]] == datum.g[u[e]])
    }
}

impl RecursionDatum {
    pub fn new(f: &FinMap, g: &FinMap) -> Result<Self> {
        let x = g.dom().size();
        if f.dom().size() != 1 || f.cod().size() != x || g.cod().size() != x {
            return Err(Error::ShapeMismatch("test data needs f: 1 -> X and g: X -> X".into()));
        }
        Ok(RecursionDatum { x, f: f.apply(0), g: g.table().to_vec() })
    }
}

/// Classifies `(X, f, g)` against the candidate exactly.
///
/// Along the orbit of `z`, `u(s^k z) = g^k f` is forced; a clash where the orbit
/// re-enters its cycle means no recursor. Elements off that orbit are only tied
/// to each other through `s`, so they are searched with forward propagation,
/// trying values in `g⁻¹(u(s e))` once `u(s e)` is known, and stopping at two solutions.
pub fn recursor_search(candidate: &NnoCandidate, datum: &RecursionDatum) -> Result<NnoVerdict> {
    let (n, x) = (candidate.n, datum.x);
    if candidate.z >= n || candidate.s.len() != n || candidate.s.iter().any(|&e| e >= n) {
        return Err(Error::ShapeMismatch("candidate tables out of range".into()));
    }
    if datum.f >= x || datum.g.len() != x || datum.g.iter().any(|&v| v >= x) {
        return Err(Error::ShapeMismatch("test data tables out of range".into()));
    }
    let mut search = RecursorSearch { candidate, datum, u: vec![None; n], trail: Vec::new(), found: Vec::new() };
    if search.assign(candidate.z, datum.f) {
        search.run();
    }
    let recursors = search.found;
    let outcome = match recursors.len() {
        0 => RecursorOutcome::NoRecursor,
        1 => RecursorOutcome::UniqueRecursor,
        _ => RecursorOutcome::MultipleRecursors,
    };
    Ok(NnoVerdict {
        candidate: candidate.clone(),
        datum: datum.clone(),
        outcome,
        recursors,
        counterexample: (outcome != RecursorOutcome::UniqueRecursor).then(|| datum.clone()),
    })
}

struct RecursorSearch<'a> {
    candidate: &'a NnoCandidate,
    datum: &'a RecursionDatum,
    u: Vec<Option<usize>>,
    /// Elements assigned so far, in order, for undoing.
    trail: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl RecursorSearch<'_> {
    /// Sets `u(e) = v` and propagates along `s`; false on a clash.
    fn assign(&mut self, mut e: usize, mut v: usize) -> bool {
        loop {
            match self.u[e] {
                Some(w) => return w == v,
                None => {
                    self.u[e] = Some(v);
                    self.trail.push(e);
                    e = self.candidate.s[e];
                    v = self.datum.g[v];
                }
            }
        }
    }

    fn undo(&mut self, len: usize) {
        for e in self.trail.drain(len..) {
            self.u[e] = None;
        }
    }

    fn run(&mut self) {
        if self.found.len() >= 2 {
            return;
        }
        let s = &self.candidate.s;
        let open = |e: usize| self.u[e].is_none();
        let next = (0..self.candidate.n)
            .find(|&e| open(e) && !open(s[e]))
            .or_else(|| (0..self.candidate.n).find(|&e| open(e)));
        let Some(e) = next else {
            self.found.push(self.u.iter().map(|v| v.expect("every element is assigned")).collect());
            return;
        };
        let values: Vec<usize> = match self.u[s[e]] {
            Some(target) => (0..self.datum.x).filter(|&v| self.datum.g[v] == target).collect(),
            None => (0..self.datum.x).collect(),
        };
        for v in values {
            let mark = self.trail.len();
            if self.assign(e, v) {
                self.run();
            }
            self.undo(mark);
        }
    }
}

/// The number of recursors among all `|X|^|N|` maps, by direct enumeration.
pub fn count_recursors(candidate: &NnoCandidate, datum: &RecursionDatum) -> usize {
    all_maps(&FinObj::new(candidate.n), &FinObj::new(datum.x))
        .filter(|u| candidate.is_recursor(datum, u.table()))
        .count()
}

/// A refuted candidate with the test data that defeats it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub candidate: NnoCandidate,
    pub tail: usize,
    pub cycle: usize,
    pub verdict: NnoVerdict,
    /// The exhaustive recursor count agrees with the verdict.
    pub verified: bool,
}

/// Every candidate with `1 ≤ |N| ≤ max_size`, by size, then `z`, then the table of `s` in lexicographic order.
pub fn all_candidates(max_size: usize) -> impl Iterator<Item = NnoCandidate> {
    (1..=max_size).flat_map(|n| {
        let obj = FinObj::new(n);
        (0..n).flat_map(move |z| all_maps(&obj, &obj).map(move |s| NnoCandidate { n, z, s: s.into_table() }))
    })
}

/// Test data defeating `candidate`.
///
/// With an element off the orbit of `z`, `g = [0, 1, 0]` on three points admits
/// the constant `0` and a second recursor: a leaf off the orbit may take `2`, and
/// a component without leaves is a cycle that may sit at `1`. Otherwise a swap
/// (odd cycles) or a saturating shift separates `s^{tail+cycle} z` from `s^tail z`.
pub fn defeating_datum(candidate: &NnoCandidate) -> RecursionDatum {
    let (orbit, entry) = candidate.orbit();
    if orbit.len() < candidate.n {
        return RecursionDatum { x: 3, f: 0, g: vec![0, 1, 0] };
    }
    let cycle = orbit.len() - entry;
    if cycle % 2 == 1 {
        return RecursionDatum { x: 2, f: 0, g: vec![1, 0] };
    }
    let top = orbit.len();
    RecursionDatum { x: top + 1, f: 0, g: (0..=top).map(|i| (i + 1).min(top)).collect() }
}

/// Refutes one candidate of each `(|N|, tail, cycle)` up to `max_size`, the first in
/// [`all_candidates`] order, with the verdict re-verified by enumerating all maps.
pub fn refute_finite_nno(max_size: usize) -> Vec<Refutation> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for candidate in all_candidates(max_size) {
        let (tail, cycle) = candidate.orbit_shape();
        if !seen.insert((candidate.n, tail, cycle)) {
            continue;
        }
        out.push(refute(candidate));
    }
    out
}

/// Runs [`defeating_datum`] against `candidate` and cross-checks the outcome.
pub fn refute(candidate: NnoCandidate) -> Refutation {
    let (tail, cycle) = candidate.orbit_shape();
    let datum = defeating_datum(&candidate);
    let verdict = recursor_search(&candidate, &datum).expect("defeating data are well shaped");
    let count = count_recursors(&candidate, &datum);
    let witnesses_hold = verdict.recursors.iter().all(|u| candidate.is_recursor(&datum, u));
    let verified = witnesses_hold
        && match verdict.outcome {
            RecursorOutcome::UniqueRecursor => count == 1,
            RecursorOutcome::NoRecursor => count == 0,
            RecursorOutcome::MultipleRecursors => count > 1,
        };
    Refutation { candidate, tail, cycle, verdict, verified }
}

/// The two-dimensional condition for `disc(N)`: the 2-cells `φ: u ⇒ u'` between
/// functors `disc(N) -> X` with `φ · disc(z) = ᾱ` and `g · φ = φ · disc(s)`.
#[derive(Clone, Debug)]
pub struct TwoCellVerdict {
    pub outcome: RecursorOutcome,
    pub cells: Vec<InternalNatTrans>,
}

/// Finds every such `φ` by enumerating all assigners `N -> X1`, independently of the orbit analysis.
pub fn two_dimensional_nno_check(
    candidate: &NnoCandidate,
    x: &Cat,
    g: &InternalFunctor,
    alpha: usize,
    budget: &mut WorkBudget,
) -> Result<TwoCellVerdict> {
    if **g.dom() != **x || **g.cod() != **x {
        return Err(Error::ShapeMismatch("g must be an endofunctor of X".into()));
    }
    if alpha >= x.arrows() {
        return Err(Error::ShapeMismatch("the 2-cell out of 1 is an arrow of X".into()));
    }
    let n = FinObj::new(candidate.n);
    let dn = disc(&n).into_cat();
    let point = FinObj::new(1);
    let z = disc_map(&FinMap::new(point, n.clone(), vec![candidate.z])?);
    let s = disc_map(&FinMap::new(n.clone(), n.clone(), candidate.s.clone())?);
    let mut cells = Vec::new();
    for phi in all_maps(&n, x.c1()) {
        budget.tick()?;
        let u0 = x.d1().after(&phi)?;
        let u1 = x.i().after(&u0)?;
        let v0 = x.d0().after(&phi)?;
        let v1 = x.i().after(&v0)?;
        let u = InternalFunctor::new(dn.clone(), x.clone(), u0, u1)?;
        let v = InternalFunctor::new(dn.clone(), x.clone(), v0, v1)?;
        let cell = InternalNatTrans::new(u, v, phi)?;
        if !cell.is_valid() {
            continue;
        }
        let at_zero = whisker_right(&cell, &z)?;
        let left = whisker_left(g, &cell)?;
        let right = whisker_right(&cell, &s)?;
        if at_zero.alpha().apply(0) == alpha && left == right {
            cells.push(cell);
        }
    }
    let outcome = match cells.len() {
        0 => RecursorOutcome::NoRecursor,
        1 => RecursorOutcome::UniqueRecursor,
        _ => RecursorOutcome::MultipleRecursors,
    };
    Ok(TwoCellVerdict { outcome, cells })
}

/// The reduction of the two-dimensional check: test data `(X1, α, g1)`.
pub fn reduced_datum(g: &InternalFunctor, alpha: usize) -> RecursionDatum {
    RecursionDatum { x: g.dom().arrows(), f: alpha, g: g.f1().table().to_vec() }
}
