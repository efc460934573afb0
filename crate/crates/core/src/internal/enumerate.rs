use crate::error::{Error, Result};

use super::category::{Cat, InternalCategory};
use super::functor::InternalFunctor;
use super::nat::InternalNatTrans;

/// Default cap on search nodes for exhaustive enumerations.
pub const DEFAULT_WORK_LIMIT: u128 = 1_000_000;

/// Counts search nodes and fails once a limit is passed.
#[derive(Clone, Debug)]
pub struct WorkBudget {
    used: u128,
    limit: u128,
}

impl WorkBudget {
    pub fn new(limit: u128) -> Self {
        WorkBudget { used: 0, limit }
    }

    pub fn used(&self) -> u128 {
        self.used
    }

    pub fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            Err(Error::SizeBound { estimate: self.used, limit: self.limit })
        } else {
            Ok(())
        }
    }
}

/// Every functor `a -> b`, lexicographic in `(f0, f1)`.
pub fn functors(a: &Cat, b: &Cat, budget: &mut WorkBudget) -> Result<Vec<InternalFunctor>> {
    let tables = functor_tables(a, b, budget)?;
    Ok(tables.into_iter().map(|(f0, f1)| InternalFunctor::new_unchecked(a.clone(), b.clone(), f0, f1)).collect())
}

fn functor_tables(a: &InternalCategory, b: &InternalCategory, budget: &mut WorkBudget) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let (na, nb) = (a.objects(), b.objects());
    let bhom = b.hom_table();
    // Arrows of `a` between objects up to index x, grouped by the larger endpoint.
    let mut closing = vec![Vec::new(); na];
    for u in a.c1().elements() {
        closing[a.source(u).max(a.target(u))].push(u);
    }
    // For each arrow, the composable pairs whose last-assigned member is that arrow.
    let mut pair_checks = vec![Vec::new(); a.arrows()];
    for (k, t) in a.c2().tuples().enumerate() {
        let w = a.m().apply(k);
        pair_checks[t[0].max(t[1]).max(w)].push((t[0], t[1], w));
    }

    let mut out = Vec::new();
    let mut f0 = vec![0; na];
    let mut f1 = vec![usize::MAX; a.arrows()];

    fn objects(
        x: usize,
        ctx: &mut Ctx,
        f0: &mut Vec<usize>,
        f1: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<()> {
        if x == ctx.na {
            return arrows(0, ctx, f0, f1, out);
        }
        for y in 0..ctx.nb {
            ctx.budget.tick()?;
            f0[x] = y;
            let ok = ctx.closing[x].iter().all(|&u| {
                !ctx.bhom[f0[ctx.a.source(u)] * ctx.nb + f0[ctx.a.target(u)]].is_empty()
            });
            if ok {
                objects(x + 1, ctx, f0, f1, out)?;
            }
        }
        Ok(())
    }

    fn arrows(
        u: usize,
        ctx: &mut Ctx,
        f0: &mut Vec<usize>,
        f1: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) -> Result<()> {
        if u == ctx.a.arrows() {
            out.push((f0.clone(), f1.clone()));
            return Ok(());
        }
        let (s, t) = (ctx.a.source(u), ctx.a.target(u));
        let forced = if ctx.a.is_identity_arrow(u) { Some(ctx.b.identity(f0[s])) } else { None };
        let candidates: Vec<usize> = match forced {
            Some(v) => vec![v],
            None => ctx.bhom[f0[s] * ctx.nb + f0[t]].clone(),
        };
        for v in candidates {
            ctx.budget.tick()?;
            f1[u] = v;
            let ok = ctx.pair_checks[u].iter().all(|&(p, q, w)| ctx.b.compose(f1[p], f1[q]) == Some(f1[w]));
            if ok {
                arrows(u + 1, ctx, f0, f1, out)?;
            }
        }
        f1[u] = usize::MAX;
        Ok(())
    }

    struct Ctx<'a> {
        a: &'a InternalCategory,
        b: &'a InternalCategory,
        na: usize,
        nb: usize,
        bhom: Vec<Vec<usize>>,
        closing: Vec<Vec<usize>>,
        pair_checks: Vec<Vec<(usize, usize, usize)>>,
        budget: &'a mut WorkBudget,
    }

    let mut ctx = Ctx { a, b, na, nb, bhom, closing, pair_checks, budget };
    objects(0, &mut ctx, &mut f0, &mut f1, &mut out)?;
    Ok(out)
}

/// Every 2-cell `f ⇒ g`, lexicographic in the assigner.
pub fn nat_trans(f: &InternalFunctor, g: &InternalFunctor, budget: &mut WorkBudget) -> Result<Vec<InternalNatTrans>> {
    if !f.is_parallel_to(g) {
        return Err(Error::ShapeMismatch("2-cells need a parallel pair".into()));
    }
    let (a, b) = (&**f.dom(), &**f.cod());
    let n = a.objects();
    let nb = b.objects();
    let bhom = b.hom_table();
    let candidates: Vec<Vec<usize>> =
        (0..n).map(|x| bhom[f.f0().apply(x) * nb + g.f0().apply(x)].clone()).collect();
    let mut closing = vec![Vec::new(); n];
    for u in a.c1().elements() {
        closing[a.source(u).max(a.target(u))].push(u);
    }
    let mut out = Vec::new();
    let mut alpha = vec![0; n];
    #[allow(clippy::too_many_arguments)]
    fn go(
        x: usize,
        a: &InternalCategory,
        b: &InternalCategory,
        f: &InternalFunctor,
        g: &InternalFunctor,
        candidates: &[Vec<usize>],
        closing: &[Vec<usize>],
        alpha: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        budget: &mut WorkBudget,
    ) -> Result<()> {
        if x == alpha.len() {
            out.push(alpha.clone());
            return Ok(());
        }
        for &c in &candidates[x] {
            budget.tick()?;
            alpha[x] = c;
            let ok = closing[x].iter().all(|&u| {
                let (s, t) = (a.source(u), a.target(u));
                let lhs = b.compose(g.f1().apply(u), alpha[s]);
                lhs.is_some() && lhs == b.compose(alpha[t], f.f1().apply(u))
            });
            if ok {
                go(x + 1, a, b, f, g, candidates, closing, alpha, out, budget)?;
            }
        }
        Ok(())
    }
    let mut tables = Vec::new();
    go(0, a, b, f, g, &candidates, &closing, &mut alpha, &mut tables, budget)?;
    out.extend(tables.into_iter().map(|t| InternalNatTrans::new_unchecked(f.clone(), g.clone(), t)));
    Ok(out)
}
