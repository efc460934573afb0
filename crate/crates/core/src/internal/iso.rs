use crate::error::Result;

use super::category::{Cat, InternalCategory};
use super::enumerate::WorkBudget;
use super::functor::InternalFunctor;

/// Default node cap for isomorphism search.
pub const DEFAULT_ISO_BUDGET: u128 = 20_000_000;

/// Searches for an invertible functor `a -> b`.
pub fn find_isomorphism(a: &Cat, b: &Cat) -> Option<InternalFunctor> {
    find_isomorphism_bounded(a, b, &mut WorkBudget::new(DEFAULT_ISO_BUDGET)).ok().flatten()
}

pub fn are_isomorphic(a: &Cat, b: &Cat) -> bool {
    find_isomorphism(a, b).is_some()
}

type Signature = (usize, Vec<usize>, Vec<usize>, Vec<usize>);

fn signatures(c: &InternalCategory, hom: &[Vec<usize>]) -> Vec<Signature> {
    let n = c.objects();
    (0..n)
        .map(|x| {
            let mut out: Vec<_> = (0..n).map(|y| hom[x * n + y].len()).collect();
            let mut inc: Vec<_> = (0..n).map(|y| hom[y * n + x].len()).collect();
            out.sort_unstable();
            inc.sort_unstable();
            // Orders of endomorphisms under composition distinguish monoids cheaply.
            let mut orders: Vec<_> = hom[x * n + x].iter().map(|&e| endo_order(c, e)).collect();
            orders.sort_unstable();
            (hom[x * n + x].len(), out, inc, orders)
        })
        .collect()
}

/// Length of the sequence `e, e², ...` before it repeats.
fn endo_order(c: &InternalCategory, e: usize) -> usize {
    let mut seen = vec![e];
    let mut cur = e;
    loop {
        cur = c.compose(e, cur).expect("endomorphisms compose");
        if seen.contains(&cur) {
            return seen.len();
        }
        seen.push(cur);
    }
}

pub fn find_isomorphism_bounded(a: &Cat, b: &Cat, budget: &mut WorkBudget) -> Result<Option<InternalFunctor>> {
    if a.objects() != b.objects() || a.arrows() != b.arrows() || a.c2().size() != b.c2().size() {
        return Ok(None);
    }
    let n = a.objects();
    let (ha, hb) = (a.hom_table(), b.hom_table());
    let (sa, sb) = (signatures(a, &ha), signatures(b, &hb));
    let mut ka = sa.clone();
    let mut kb = sb.clone();
    ka.sort();
    kb.sort();
    if ka != kb {
        return Ok(None);
    }

    // For each arrow u of a: (other, composite) for pairs (u, v) and (v, u).
    let mut as_first = vec![Vec::new(); a.arrows()];
    let mut as_second = vec![Vec::new(); a.arrows()];
    for (k, t) in a.c2().tuples().enumerate() {
        let w = a.m().apply(k);
        as_first[t[0]].push((t[1], w));
        as_second[t[1]].push((t[0], w));
    }

    struct Search<'s> {
        a: &'s InternalCategory,
        b: &'s InternalCategory,
        n: usize,
        ha: &'s [Vec<usize>],
        hb: &'s [Vec<usize>],
        sa: &'s [Signature],
        sb: &'s [Signature],
        as_first: &'s [Vec<(usize, usize)>],
        as_second: &'s [Vec<(usize, usize)>],
        f0: Vec<usize>,
        used0: Vec<bool>,
        f1: Vec<usize>,
        used1: Vec<bool>,
        order: Vec<usize>,
        budget: &'s mut WorkBudget,
    }

    impl Search<'_> {
        fn objects(&mut self, x: usize) -> Result<bool> {
            if x == self.n {
                return self.start_arrows();
            }
            for y in 0..self.n {
                if self.used0[y] || self.sa[x] != self.sb[y] {
                    continue;
                }
                self.budget.tick()?;
                let ok = (0..x).all(|x2| {
                    let y2 = self.f0[x2];
                    self.ha[x * self.n + x2].len() == self.hb[y * self.n + y2].len()
                        && self.ha[x2 * self.n + x].len() == self.hb[y2 * self.n + y].len()
                });
                if !ok {
                    continue;
                }
                self.f0[x] = y;
                self.used0[y] = true;
                if self.objects(x + 1)? {
                    return Ok(true);
                }
                self.used0[y] = false;
            }
            Ok(false)
        }

        fn start_arrows(&mut self) -> Result<bool> {
            let mut trail = Vec::new();
            for x in 0..self.n {
                let (u, v) = (self.a.identity(x), self.b.identity(self.f0[x]));
                if !self.assign(u, v, &mut trail) {
                    self.undo(&mut trail, 0);
                    return Ok(false);
                }
            }
            let found = self.arrows(0)?;
            if !found {
                self.undo(&mut trail, 0);
            }
            Ok(found)
        }

        /// Assigns `u ↦ v` and everything composition then forces.
        fn assign(&mut self, u: usize, v: usize, trail: &mut Vec<usize>) -> bool {
            let mut queue = vec![(u, v)];
            while let Some((u, v)) = queue.pop() {
                if self.f1[u] != usize::MAX {
                    if self.f1[u] != v {
                        return false;
                    }
                    continue;
                }
                if self.used1[v]
                    || self.b.source(v) != self.f0[self.a.source(u)]
                    || self.b.target(v) != self.f0[self.a.target(u)]
                {
                    return false;
                }
                self.f1[u] = v;
                self.used1[v] = true;
                trail.push(u);
                for &(o, w) in &self.as_first[u] {
                    if self.f1[o] != usize::MAX {
                        match self.b.compose(v, self.f1[o]) {
                            Some(c) => queue.push((w, c)),
                            None => return false,
                        }
                    }
                }
                for &(o, w) in &self.as_second[u] {
                    if self.f1[o] != usize::MAX {
                        match self.b.compose(self.f1[o], v) {
                            Some(c) => queue.push((w, c)),
                            None => return false,
                        }
                    }
                }
            }
            true
        }

        fn undo(&mut self, trail: &mut Vec<usize>, keep: usize) {
            while trail.len() > keep {
                let u = trail.pop().expect("trail longer than keep");
                self.used1[self.f1[u]] = false;
                self.f1[u] = usize::MAX;
            }
        }

        fn arrows(&mut self, pos: usize) -> Result<bool> {
            let mut pos = pos;
            while pos < self.order.len() && self.f1[self.order[pos]] != usize::MAX {
                pos += 1;
            }
            if pos == self.order.len() {
                return Ok(true);
            }
            let u = self.order[pos];
            let (s, t) = (self.f0[self.a.source(u)], self.f0[self.a.target(u)]);
            let candidates = self.hb[s * self.n + t].clone();
            for v in candidates {
                if self.used1[v] {
                    continue;
                }
                self.budget.tick()?;
                let mut trail = Vec::new();
                if self.assign(u, v, &mut trail) && self.arrows(pos + 1)? {
                    return Ok(true);
                }
                self.undo(&mut trail, 0);
            }
            Ok(false)
        }
    }

    let mut order: Vec<usize> = a.c1().elements().filter(|&u| !a.is_identity_arrow(u)).collect();
    order.sort_by_key(|&u| (ha[a.source(u) * n + a.target(u)].len(), u));
    let mut search = Search {
        a,
        b,
        n,
        ha: &ha,
        hb: &hb,
        sa: &sa,
        sb: &sb,
        as_first: &as_first,
        as_second: &as_second,
        f0: vec![usize::MAX; n],
        used0: vec![false; n],
        f1: vec![usize::MAX; a.arrows()],
        used1: vec![false; b.arrows()],
        order,
        budget,
    };
    if !search.objects(0)? {
        return Ok(None);
    }
    let f = InternalFunctor::from_tables(a, b, search.f0, search.f1)?;
    debug_assert!(f.is_valid() && f.is_isomorphism());
    if !f.is_valid() || !f.is_isomorphism() {
        return Ok(None);
    }
    Ok(Some(f))
}
