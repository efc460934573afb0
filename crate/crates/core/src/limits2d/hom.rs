use std::collections::HashMap;

use crate::base::{pullback, FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{
    compose_functors, Cat, InternalCategory, InternalFunctor, InternalNatTrans, WorkBudget, DEFAULT_WORK_LIMIT,
};
use crate::transfer::{monotone_maps, nerve, Monotone, TruncatedSimplicial, TOP_LEVEL};

use super::standard::{product_cat, product_functor};

/// The exponential `[X, Y]` computed as an end over the truncated nerves.
///
/// Level `k` of the end is the set of families `θ_{n,φ}: X_n -> Y_n`, one for each
/// monotone `φ: [n] -> [k]`, natural in `[n]`. Such a family is fixed by its
/// components at `n = 0, 1`, so an element is stored as the flattened key
/// `θ_{0,φ}(x)` for all `φ, x`, followed by `θ_{1,ψ}(a)` for all `ψ, a`.
/// Level 0 gives the objects (functors), level 1 the arrows (2-cells), and
/// level 2 the composable pairs, whose middle face is the composite.
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub carrier: Cat,
    pub evaluation: InternalFunctor,
    x: Cat,
    y: Cat,
    objects: Vec<Vec<u32>>,
    arrows: Vec<Vec<u32>>,
    object_index: HashMap<Vec<u32>, usize>,
    arrow_index: HashMap<Vec<u32>, usize>,
    work: u128,
}

pub fn internal_hom(x: &Cat, y: &Cat) -> Result<InternalHom> {
    internal_hom_bounded(x, y, DEFAULT_WORK_LIMIT)
}

/// As [`internal_hom`], failing with `SizeBound` once the search visits more than `limit` nodes.
///
/// Level 0 is searched outright. Level 1 is searched once per pair of level-0
/// elements, with the endpoint faces fixed; level 2 once per composable pair of
/// level-1 elements, with its two outer faces fixed, and must have exactly one
/// solution, whose middle face is the composite.
pub fn internal_hom_bounded(x: &Cat, y: &Cat, limit: u128) -> Result<InternalHom> {
    let ctx = EndContext::new(x, y);
    let mut budget = WorkBudget::new(limit);

    let mut objects = Vec::new();
    let plan0 = ctx.plan(0, &vec![false; ctx.shape(0).len]);
    ctx.solve(&plan0, &ctx.unseeded(0), &mut budget, &mut |key| objects.push(key.to_vec()))?;
    let object_index: HashMap<Vec<u32>, usize> = objects.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();

    let vertex = |j: usize| Monotone::new(vec![j], 1).expect("vertex of [1]");
    let (v0, v1) = (vertex(0), vertex(1));
    let plan1 = ctx.plan(1, &ctx.seeded_mask(1, &[&v0, &v1]));
    let mut arrows = Vec::new();
    for src in &objects {
        for tgt in &objects {
            if let Some(fixed) = ctx.seeded(1, &[(&v0, src), (&v1, tgt)]) {
                ctx.solve(&plan1, &fixed, &mut budget, &mut |key| arrows.push(key.to_vec()))?;
            }
        }
    }
    arrows.sort_unstable();
    let arrow_index: HashMap<Vec<u32>, usize> = arrows.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();

    let restrict_to = |key: &[u32], k: usize, beta: &Monotone, index: &HashMap<Vec<u32>, usize>| -> usize {
        index[&ctx.restrict(key, k, beta)]
    };
    let d0: Vec<usize> = arrows.iter().map(|key| restrict_to(key, 1, &v1, &object_index)).collect();
    let d1: Vec<usize> = arrows.iter().map(|key| restrict_to(key, 1, &v0, &object_index)).collect();
    let collapse = Monotone::new(vec![0, 0], 0).expect("[1] -> [0]");
    let i: Vec<usize> = objects.iter().map(|key| restrict_to(key, 0, &collapse, &arrow_index)).collect();

    let (n0, n1) = (objects.len(), arrows.len());
    let (obj, arr) = (FinObj::new(n0), FinObj::new(n1));
    let c2 = pullback(&FinMap::new(arr.clone(), obj.clone(), d1.clone())?, &FinMap::new(arr, obj, d0.clone())?)?;
    let (later, earlier, whole) = (
        Monotone::new(vec![1, 2], 2).expect("face of [2]"),
        Monotone::new(vec![0, 1], 2).expect("face of [2]"),
        Monotone::new(vec![0, 2], 2).expect("face of [2]"),
    );
    let plan2 = ctx.plan(2, &ctx.seeded_mask(2, &[&later, &earlier]));
    let mut m = Vec::with_capacity(c2.size());
    for t in c2.tuples() {
        let (u, v) = (&arrows[t[0]], &arrows[t[1]]);
        let mut fillers = Vec::new();
        if let Some(fixed) = ctx.seeded(2, &[(&later, u), (&earlier, v)]) {
            ctx.solve(&plan2, &fixed, &mut budget, &mut |key| fillers.push(restrict_to(key, 2, &whole, &arrow_index)))?;
        }
        match fillers.as_slice() {
            [w] => m.push(*w),
            _ => {
                return Err(Error::ShapeMismatch(format!(
                    "composable pair ({}, {}) of 2-cells has {} fillers in the end",
                    t[0],
                    t[1],
                    fillers.len()
                )))
            }
        }
    }
    let carrier = InternalCategory::from_tables(n0, n1, d0, d1, i, m)?.into_cat();

    let (nx0, nx1) = (x.objects(), x.arrows());
    let prod = product_cat(&carrier, x);
    let e0 = (0..n0 * nx0).map(|k| objects[k / nx0][k % nx0] as usize).collect();
    let across = 2 * nx0 + nx1;
    let e1 = (0..n1 * nx1).map(|k| arrows[k / nx1][across + k % nx1] as usize).collect();
    let evaluation = InternalFunctor::from_tables(&prod.cat, y, e0, e1)?;

    Ok(InternalHom {
        carrier,
        evaluation,
        x: x.clone(),
        y: y.clone(),
        objects,
        arrows,
        object_index,
        arrow_index,
        work: budget.used(),
    })
}

impl InternalHom {
    pub fn domain(&self) -> &Cat {
        &self.x
    }

    pub fn codomain(&self) -> &Cat {
        &self.y
    }

    /// Search nodes visited while building the end.
    pub fn work(&self) -> u128 {
        self.work
    }

    /// Rechecks every stored level-0 and level-1 element against the full
    /// naturality condition, over all faces and degeneracies up to level 3.
    pub fn verify_wedges(&self) -> bool {
        let ctx = EndContext::new(&self.x, &self.y);
        self.objects.iter().all(|key| ctx.is_wedge(ctx.shape(0), key))
            && self.arrows.iter().all(|key| ctx.is_wedge(ctx.shape(1), key))
    }

    pub fn object_as_functor(&self, k: usize) -> InternalFunctor {
        let (nx0, key) = (self.x.objects(), &self.objects[k]);
        let f0 = key[..nx0].iter().map(|&v| v as usize).collect();
        let f1 = key[nx0..].iter().map(|&v| v as usize).collect();
        InternalFunctor::from_tables(&self.x, &self.y, f0, f1).expect("end elements are functors")
    }

    pub fn arrow_as_cell(&self, k: usize) -> InternalNatTrans {
        let src = self.object_as_functor(self.carrier.source(k));
        let tgt = self.object_as_functor(self.carrier.target(k));
        let (nx0, nx1) = (self.x.objects(), self.x.arrows());
        let key = &self.arrows[k];
        let alpha = (0..nx0).map(|x| key[2 * nx0 + nx1 + self.x.identity(x)] as usize).collect();
        let alpha = FinMap::new(self.x.c0().clone(), self.y.c1().clone(), alpha).expect("components are arrows");
        InternalNatTrans::new(src, tgt, alpha).expect("end elements are 2-cells")
    }

    pub fn index_of_functor(&self, f: &InternalFunctor) -> Option<usize> {
        let key: Vec<u32> = f.f0().table().iter().chain(f.f1().table()).map(|&v| v as u32).collect();
        self.object_index.get(&key).copied()
    }

    /// The arrow of the carrier for `α: f ⇒ g`; its across component at `a: x -> x'` is `g(a) ∘ α_x`.
    pub fn index_of_cell(&self, alpha: &InternalNatTrans) -> Option<usize> {
        let (f, g) = (alpha.src(), alpha.tgt());
        let (x, y) = (&self.x, &self.y);
        let mut key: Vec<u32> = f.f0().table().iter().chain(g.f0().table()).map(|&v| v as u32).collect();
        key.extend(f.f1().table().iter().map(|&v| v as u32));
        for a in x.c1().elements() {
            key.push(y.compose(g.f1().apply(a), alpha.component(x.source(a)))? as u32);
        }
        key.extend(g.f1().table().iter().map(|&v| v as u32));
        self.arrow_index.get(&key).copied()
    }

    /// The transpose `A -> [X, Y]` of `F: A × X -> Y`.
    pub fn curry(&self, a: &Cat, f: &InternalFunctor) -> Result<InternalFunctor> {
        let x = &self.x;
        if **f.cod() != *self.y || **f.dom() != *product_cat(a, x).cat {
            return Err(Error::NotInHomSet("expected a functor A × X -> Y".into()));
        }
        let (nx0, nx1) = (x.objects(), x.arrows());
        let obj = |p: usize, t: usize| f.f0().apply(p * nx0 + t) as u32;
        let arr = |g: usize, u: usize| f.f1().apply(g * nx1 + u) as u32;
        let missing = || Error::NotInHomSet("transpose is not natural in X".into());
        let mut f0 = Vec::with_capacity(a.objects());
        for p in a.c0().elements() {
            let mut key: Vec<u32> = (0..nx0).map(|t| obj(p, t)).collect();
            key.extend((0..nx1).map(|u| arr(a.identity(p), u)));
            f0.push(*self.object_index.get(&key).ok_or_else(missing)?);
        }
        let mut f1 = Vec::with_capacity(a.arrows());
        for g in a.c1().elements() {
            let (s, t) = (a.source(g), a.target(g));
            let mut key: Vec<u32> = (0..nx0).map(|v| obj(s, v)).chain((0..nx0).map(|v| obj(t, v))).collect();
            for h in [a.identity(s), g, a.identity(t)] {
                key.extend((0..nx1).map(|u| arr(h, u)));
            }
            f1.push(*self.arrow_index.get(&key).ok_or_else(missing)?);
        }
        InternalFunctor::from_tables(a, &self.carrier, f0, f1)
    }

    /// `eval ∘ (G × 1_X)` for `G: A -> [X, Y]`.
    pub fn uncurry(&self, g: &InternalFunctor) -> Result<InternalFunctor> {
        if **g.cod() != *self.carrier {
            return Err(Error::NotInHomSet("functor does not land in the internal hom".into()));
        }
        compose_functors(&self.evaluation, &product_functor(g, &InternalFunctor::identity(&self.x))?)
    }
}

/// Everything about `X` and `Y` the end search needs, precomputed once.
struct EndContext {
    x: Cat,
    y: Cat,
    nx: TruncatedSimplicial,
    y_hom: Vec<Vec<u32>>,
    y_identity: Vec<u32>,
    /// `y_compose[u * |Y1| + v] = u ∘ v`, or `u32::MAX` when not composable.
    y_compose: Vec<u32>,
    /// Generating maps `β: [n'] -> [n]` with their actions on `X` and `Y`.
    generators: Vec<(Monotone, FinMap, FinMap)>,
    x_edges: Vec<Vec<Vec<usize>>>,
    ny: TruncatedSimplicial,
    shapes: Vec<Shape>,
}

/// Indexing of one level of the end.
struct Shape {
    k: usize,
    phis: Vec<Vec<Monotone>>,
    len0: usize,
    len: usize,
}

impl Shape {
    fn phi_index(&self, n: usize, phi: &Monotone) -> usize {
        self.phis[n].binary_search(phi).expect("monotone maps are listed exhaustively")
    }

    fn edge_index(&self, a: usize, b: usize) -> usize {
        self.phi_index(1, &Monotone::new(vec![a, b], self.k).expect("a ≤ b"))
    }
}

impl EndContext {
    fn new(x: &Cat, y: &Cat) -> Self {
        let (nx, ny) = (nerve(x), nerve(y));
        let mut generators = Vec::new();
        for n in 1..=TOP_LEVEL {
            for j in 0..=n {
                let b = Monotone::face(n, j);
                generators.push((b.clone(), nx.action(&b), ny.action(&b)));
            }
        }
        for n in 0..TOP_LEVEL {
            for j in 0..=n {
                let b = Monotone::degeneracy(n, j);
                generators.push((b.clone(), nx.action(&b), ny.action(&b)));
            }
        }
        let x_edges = (0..=TOP_LEVEL).map(|n| (0..nx.level_size(n)).map(|s| nx.edges(n, s)).collect()).collect();
        let shapes = (0..=2)
            .map(|k| {
                let phis: Vec<Vec<Monotone>> = (0..=TOP_LEVEL).map(|n| monotone_maps(n, k)).collect();
                let len0 = phis[0].len() * x.objects();
                let len = len0 + phis[1].len() * x.arrows();
                Shape { k, phis, len0, len }
            })
            .collect();
        let ny1 = y.arrows();
        let mut y_compose = vec![u32::MAX; ny1 * ny1];
        for (w, t) in y.c2().tuples().enumerate() {
            y_compose[t[0] * ny1 + t[1]] = y.m().apply(w) as u32;
        }
        let y_hom = y.hom_table().into_iter().map(|h| h.into_iter().map(|a| a as u32).collect()).collect();
        let y_identity = y.i().table().iter().map(|&a| a as u32).collect();
        EndContext { x: x.clone(), y: y.clone(), y_hom, y_identity, y_compose, generators, x_edges, nx, ny, shapes }
    }

    fn shape(&self, k: usize) -> &Shape {
        &self.shapes[k]
    }

    /// The key at level `k'` obtained by precomposing every index with `β: [k'] -> [k]`.
    fn restrict(&self, key: &[u32], k: usize, beta: &Monotone) -> Vec<u32> {
        let (from, to) = (self.shape(k), self.shape(beta.dom_level()));
        let (nx0, nx1) = (self.x.objects(), self.x.arrows());
        let mut out = Vec::with_capacity(to.len);
        for phi in &to.phis[0] {
            let j = from.phi_index(0, &beta.after(phi).expect("composable"));
            out.extend_from_slice(&key[j * nx0..(j + 1) * nx0]);
        }
        for psi in &to.phis[1] {
            let j = from.phi_index(1, &beta.after(psi).expect("composable"));
            out.extend_from_slice(&key[from.len0 + j * nx1..from.len0 + (j + 1) * nx1]);
        }
        out
    }

    /// Slot kinds and checks for level `k` when the variables in `fixed` are given
    /// up front; shared by every search at that level with the same seed faces.
    fn plan(&self, k: usize, fixed: &[bool]) -> Plan {
        let shape = self.shape(k);
        let x = &self.x;
        let (nx0, nx1) = (x.objects(), x.arrows());
        let var0 = |j: usize, t: usize| j * nx0 + t;
        let var1 = |p: usize, a: usize| shape.len0 + p * nx1 + a;

        // Level-1 variables: the endpoints they must connect, or a forced identity.
        let mut slots = vec![Slot::Object; shape.len];
        // Checks run once the highest free variable they mention is assigned;
        // checks on fixed variables only run before the search starts.
        let mut checks: Vec<Vec<Check>> = vec![Vec::new(); shape.len];
        let mut initial = Vec::new();
        let mut place = |vars: &[usize], check: Check| match vars.iter().filter(|&&v| !fixed[v]).max() {
            Some(&v) => checks[v].push(check),
            None => initial.push(check),
        };
        for (p, psi) in shape.phis[1].iter().enumerate() {
            let (j, jj) = (psi.apply(0), psi.apply(1));
            for a in x.c1().elements() {
                let (s, t) = (var0(j, x.source(a)), var0(jj, x.target(a)));
                place(&[s, t], Check::Connected(s, t));
                slots[var1(p, a)] = if j == jj && x.is_identity_arrow(a) {
                    Slot::Identity(s)
                } else {
                    Slot::Between(s, t)
                };
            }
        }
        for phi in &shape.phis[2] {
            let (f0, f1, f2) = (phi.apply(0), phi.apply(1), phi.apply(2));
            let (later, earlier, whole) = (shape.edge_index(f1, f2), shape.edge_index(f0, f1), shape.edge_index(f0, f2));
            for (w, t) in x.c2().tuples().enumerate() {
                let a = var1(later, t[0]);
                let b = var1(earlier, t[1]);
                let c = var1(whole, x.m().apply(w));
                place(&[a, b, c], Check::Composite(a, b, c));
            }
        }
        Plan { slots, checks, initial }
    }

    fn unseeded(&self, k: usize) -> Vec<Option<u32>> {
        vec![None; self.shape(k).len]
    }

    /// Which level-`k` variables [`EndContext::seeded`] fixes for seeds along `betas`.
    fn seeded_mask(&self, k: usize, betas: &[&Monotone]) -> Vec<bool> {
        let blanks: Vec<Vec<u32>> = betas.iter().map(|b| vec![0; self.shape(b.dom_level()).len]).collect();
        let seeds: Vec<(&Monotone, &[u32])> = betas.iter().zip(&blanks).map(|(b, key)| (*b, key.as_slice())).collect();
        self.seeded(k, &seeds).expect("blank seeds agree").iter().map(Option::is_some).collect()
    }

    /// Fixes every variable of level `k` indexed by a map that factors through one
    /// of the injective `β: [m] -> [k]`, copying from the level-`m` key given with it.
    /// `None` when two seeds disagree.
    fn seeded(&self, k: usize, seeds: &[(&Monotone, &[u32])]) -> Option<Vec<Option<u32>>> {
        let shape = self.shape(k);
        let (nx0, nx1) = (self.x.objects(), self.x.arrows());
        let mut fixed = vec![None; shape.len];
        for &(beta, key) in seeds {
            let from = self.shape(beta.dom_level());
            let back = |v: usize| beta.values().iter().position(|&b| b == v);
            for n in 0..=1 {
                let (width, base, from_base) = if n == 0 { (nx0, 0, 0) } else { (nx1, shape.len0, from.len0) };
                for (j, phi) in shape.phis[n].iter().enumerate() {
                    let Some(pre) = phi.values().iter().map(|&v| back(v)).collect::<Option<Vec<usize>>>() else {
                        continue;
                    };
                    let jj = from.phi_index(n, &Monotone::new(pre, beta.dom_level()).expect("preimage is monotone"));
                    for t in 0..width {
                        let value = key[from_base + jj * width + t];
                        let slot = &mut fixed[base + j * width + t];
                        match *slot {
                            Some(old) if old != value => return None,
                            _ => *slot = Some(value),
                        }
                    }
                }
            }
        }
        Some(fixed)
    }

    /// Enumerates the solutions of `plan` extending `fixed`, in lexicographic order of keys.
    fn solve(
        &self,
        plan: &Plan,
        fixed: &[Option<u32>],
        budget: &mut WorkBudget,
        emit: &mut dyn FnMut(&[u32]),
    ) -> Result<()> {
        let vals = fixed.iter().map(|v| v.unwrap_or(0)).collect();
        let mut search = Search { ctx: self, plan, fixed, vals, budget, emit };
        if plan.initial.iter().all(|c| search.holds(c)) {
            search.run(0)?;
        }
        Ok(())
    }

    /// The full naturality condition over every generating face and degeneracy.
    fn is_wedge(&self, shape: &Shape, key: &[u32]) -> bool {
        let (nx0, nx1) = (self.x.objects(), self.x.arrows());
        let theta = |n: usize, phi: usize, s: usize| -> Option<usize> {
            let values = shape.phis[n][phi].values();
            match n {
                0 => Some(key[phi * nx0 + s] as usize),
                _ => {
                    let e = &self.x_edges[n][s];
                    let image: Vec<usize> = (1..=n)
                        .map(|i| key[shape.len0 + shape.edge_index(values[i - 1], values[i]) * nx1 + e[i - 1]] as usize)
                        .collect();
                    self.ny.encode(0, &image)
                }
            }
        };
        for (beta, on_x, on_y) in &self.generators {
            let (n, n2) = (beta.cod_level(), beta.dom_level());
            for (p, phi) in shape.phis[n].iter().enumerate() {
                let q = shape.phi_index(n2, &phi.after(beta).expect("composable"));
                for s in 0..self.nx.level_size(n) {
                    let lhs = theta(n, p, s).map(|v| on_y.apply(v));
                    let rhs = theta(n2, q, on_x.apply(s));
                    if lhs.is_none() || lhs != rhs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Clone, Copy)]
enum Slot {
    Object,
    Identity(usize),
    Between(usize, usize),
}

#[derive(Clone, Copy)]
enum Check {
    /// Some arrow runs from the value at the first slot to the value at the second.
    Connected(usize, usize),
    /// `vals[a] ∘ vals[b] = vals[c]`.
    Composite(usize, usize, usize),
}

/// The per-level search skeleton.
struct Plan {
    slots: Vec<Slot>,
    checks: Vec<Vec<Check>>,
    initial: Vec<Check>,
}

struct Search<'a> {
    ctx: &'a EndContext,
    plan: &'a Plan,
    fixed: &'a [Option<u32>],
    vals: Vec<u32>,
    budget: &'a mut WorkBudget,
    emit: &'a mut dyn FnMut(&[u32]),
}

impl Search<'_> {
    fn run(&mut self, pos: usize) -> Result<()> {
        if pos == self.vals.len() {
            (self.emit)(&self.vals);
            return Ok(());
        }
        if self.fixed[pos].is_some() {
            return self.run(pos + 1);
        }
        let ctx = self.ctx;
        let ny0 = ctx.y.objects();
        match self.plan.slots[pos] {
            Slot::Object => {
                for v in 0..ny0 {
                    self.try_value(pos, v as u32)?;
                }
            }
            Slot::Identity(s) => {
                let v = ctx.y_identity[self.vals[s] as usize];
                self.try_value(pos, v)?;
            }
            Slot::Between(s, t) => {
                let h = self.vals[s] as usize * ny0 + self.vals[t] as usize;
                for k in 0..ctx.y_hom[h].len() {
                    self.try_value(pos, ctx.y_hom[h][k])?;
                }
            }
        }
        Ok(())
    }

    fn try_value(&mut self, pos: usize, v: u32) -> Result<()> {
        self.budget.tick()?;
        self.vals[pos] = v;
        if self.consistent(pos) {
            self.run(pos + 1)?;
        }
        Ok(())
    }

    fn consistent(&self, pos: usize) -> bool {
        self.plan.checks[pos].iter().all(|c| self.holds(c))
    }

    fn holds(&self, check: &Check) -> bool {
        let ctx = self.ctx;
        let (ny0, ny1) = (ctx.y.objects(), ctx.y.arrows());
        let val = |k: usize| self.vals[k] as usize;
        match *check {
            Check::Connected(s, t) => !ctx.y_hom[val(s) * ny0 + val(t)].is_empty(),
            Check::Composite(a, b, c) => ctx.y_compose[val(a) * ny1 + val(b)] == self.vals[c],
        }
    }
}
