//! A deliberately separate category representation with its own validator and
//! enumerators, used to cross-check the internal constructions.

use crate::error::{Error, Result};
use crate::internal::{InternalCategory, ValidationReport, Violation};

/// An ordinary finite category given by explicit tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveCategory {
    pub objects: usize,
    /// `(source, target)` per arrow.
    pub arrows: Vec<(usize, usize)>,
    /// `compose[g * n + f] = g ∘ f` when `target(f) = source(g)`.
    pub compose: Vec<Option<usize>>,
    pub identities: Vec<usize>,
}

impl NaiveCategory {
    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn comp(&self, g: usize, f: usize) -> Option<usize> {
        self.compose[g * self.arrows.len() + f]
    }

    /// Checks the category axioms directly on the tables.
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::default();
        let n = self.arrows.len();
        for (x, &e) in self.identities.iter().enumerate() {
            if e >= n || self.arrows[e] != (x, x) {
                r.push(Violation::new("identity-endpoints", x, format!("identity arrow {e}")));
            }
        }
        for g in 0..n {
            for f in 0..n {
                let composable = self.arrows[f].1 == self.arrows[g].0;
                match (composable, self.comp(g, f)) {
                    (true, Some(h)) if h < n && self.arrows[h] == (self.arrows[f].0, self.arrows[g].1) => {}
                    (false, None) => {}
                    _ => r.push(Violation::new("composition-table", g * n + f, "wrong entry".into())),
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        for f in 0..n {
            let (s, t) = self.arrows[f];
            if self.comp(self.identities[t], f) != Some(f) || self.comp(f, self.identities[s]) != Some(f) {
                r.push(Violation::new("unit-law", f, String::new()));
            }
        }
        for h in 0..n {
            for g in 0..n {
                for f in 0..n {
                    if let (Some(hg), Some(gf)) = (self.comp(h, g), self.comp(g, f)) {
                        if self.comp(hg, f) != self.comp(h, gf) {
                            r.push(Violation::new("associativity", (h * n + g) * n + f, String::new()));
                        }
                    }
                }
            }
        }
        r
    }
}

pub fn oracle_from_internal(c: &InternalCategory) -> NaiveCategory {
    let n = c.arrows();
    let arrows: Vec<(usize, usize)> = (0..n).map(|u| (c.d1().apply(u), c.d0().apply(u))).collect();
    let mut compose = vec![None; n * n];
    for (k, t) in c.c2().tuples().enumerate() {
        compose[t[0] * n + t[1]] = Some(c.m().apply(k));
    }
    NaiveCategory { objects: c.objects(), arrows, compose, identities: c.i().table().to_vec() }
}

/// Rebuilds the internal presentation; arrows and objects keep their indices.
pub fn naive_to_internal(c: &NaiveCategory) -> Result<InternalCategory> {
    InternalCategory::from_composition(
        c.objects,
        c.arrows.len(),
        c.arrows.iter().map(|a| a.1).collect(),
        c.arrows.iter().map(|a| a.0).collect(),
        c.identities.clone(),
        |u, v| c.comp(u, v).expect("composable pairs have composites"),
    )
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NaiveFunctor {
    pub on_objects: Vec<usize>,
    pub on_arrows: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NaiveNatTrans {
    pub source: usize,
    pub target: usize,
    pub components: Vec<usize>,
}

struct Counter {
    used: u128,
    limit: u128,
}

impl Counter {
    fn step(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::SizeBound { estimate: self.used, limit: self.limit });
        }
        Ok(())
    }
}

/// All functors `a -> b`: every object assignment, then arrows one at a time,
/// checking identities and each composite as soon as its factors are assigned.
pub fn oracle_functors(a: &NaiveCategory, b: &NaiveCategory, limit: u128) -> Result<Vec<NaiveFunctor>> {
    let mut counter = Counter { used: 0, limit };
    let mut out = Vec::new();
    let mut objs = vec![0; a.objects];
    if a.objects > 0 && b.objects == 0 {
        return Ok(out);
    }
    loop {
        counter.step()?;
        let mut arrs = vec![usize::MAX; a.arrows.len()];
        assign_arrows(a, b, &objs, &mut arrs, 0, &mut out, &mut counter)?;
        // Next object assignment in lexicographic order.
        let mut k = a.objects;
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            objs[k] += 1;
            if objs[k] < b.objects {
                break;
            }
            objs[k] = 0;
        }
    }
}

fn assign_arrows(
    a: &NaiveCategory,
    b: &NaiveCategory,
    objs: &[usize],
    arrs: &mut Vec<usize>,
    f: usize,
    out: &mut Vec<NaiveFunctor>,
    counter: &mut Counter,
) -> Result<()> {
    if f == a.arrows.len() {
        out.push(NaiveFunctor { on_objects: objs.to_vec(), on_arrows: arrs.clone() });
        return Ok(());
    }
    let (s, t) = a.arrows[f];
    let want = (objs[s], objs[t]);
    for g in 0..b.arrows.len() {
        if b.arrows[g] != want {
            continue;
        }
        counter.step()?;
        arrs[f] = g;
        if arrows_consistent(a, b, objs, arrs, f) {
            assign_arrows(a, b, objs, arrs, f + 1, out, counter)?;
        }
    }
    arrs[f] = usize::MAX;
    Ok(())
}

/// Checks every law that involves arrow `f` and only arrows up to `f`.
fn arrows_consistent(a: &NaiveCategory, b: &NaiveCategory, objs: &[usize], arrs: &[usize], f: usize) -> bool {
    let (s, _) = a.arrows[f];
    if a.identities[s] == f && arrs[f] != b.identities[objs[s]] {
        return false;
    }
    for g in 0..=f {
        for (x, y) in [(f, g), (g, f)] {
            if let Some(h) = a.comp(x, y) {
                if h <= f && b.comp(arrs[x], arrs[y]) != Some(arrs[h]) {
                    return false;
                }
            }
        }
    }
    // Composites whose result was assigned earlier than a factor are caught when that factor lands.
    for g in 0..f {
        for h in 0..f {
            if a.comp(g, h) == Some(f) && b.comp(arrs[g], arrs[h]) != Some(arrs[f]) {
                return false;
            }
        }
    }
    true
}

/// All natural transformations between two functors `a -> b`.
pub fn oracle_nat_trans(
    a: &NaiveCategory,
    b: &NaiveCategory,
    src: &NaiveFunctor,
    tgt: &NaiveFunctor,
    limit: u128,
) -> Result<Vec<Vec<usize>>> {
    let mut counter = Counter { used: 0, limit };
    let candidates: Vec<Vec<usize>> = (0..a.objects)
        .map(|x| (0..b.arrows.len()).filter(|&g| b.arrows[g] == (src.on_objects[x], tgt.on_objects[x])).collect())
        .collect();
    let mut out = Vec::new();
    let mut comp = vec![0; a.objects];
    fn go(
        x: usize,
        a: &NaiveCategory,
        b: &NaiveCategory,
        src: &NaiveFunctor,
        tgt: &NaiveFunctor,
        candidates: &[Vec<usize>],
        comp: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        counter: &mut Counter,
    ) -> Result<()> {
        if x == a.objects {
            let natural = (0..a.arrows.len()).all(|f| {
                let (s, t) = a.arrows[f];
                b.comp(tgt.on_arrows[f], comp[s]) == b.comp(comp[t], src.on_arrows[f])
            });
            if natural {
                out.push(comp.clone());
            }
            return Ok(());
        }
        for &g in &candidates[x] {
            counter.step()?;
            comp[x] = g;
            go(x + 1, a, b, src, tgt, candidates, comp, out, counter)?;
        }
        Ok(())
    }
    go(0, a, b, src, tgt, &candidates, &mut comp, &mut out, &mut counter)?;
    Ok(out)
}

/// The functor category `[a, b]` with vertical composition, built from the naive enumerations.
pub fn oracle_functor_category(a: &NaiveCategory, b: &NaiveCategory, limit: u128) -> Result<NaiveCategory> {
    let fs = oracle_functors(a, b, limit)?;
    let mut cells = Vec::new();
    for (i, f) in fs.iter().enumerate() {
        for (j, g) in fs.iter().enumerate() {
            for components in oracle_nat_trans(a, b, f, g, limit)? {
                cells.push(NaiveNatTrans { source: i, target: j, components });
            }
        }
    }
    let index: std::collections::HashMap<&NaiveNatTrans, usize> = cells.iter().enumerate().map(|(k, c)| (c, k)).collect();
    let n = cells.len();
    let mut compose = vec![None; n * n];
    for (p, second) in cells.iter().enumerate() {
        for (q, first) in cells.iter().enumerate() {
            if first.target != second.source {
                continue;
            }
            let components = (0..a.objects)
                .map(|x| b.comp(second.components[x], first.components[x]).expect("components compose"))
                .collect();
            let c = NaiveNatTrans { source: first.source, target: second.target, components };
            compose[p * n + q] = Some(index[&c]);
        }
    }
    let identities = fs
        .iter()
        .enumerate()
        .map(|(i, f)| {
            let components = f.on_objects.iter().map(|&y| b.identities[y]).collect();
            index[&NaiveNatTrans { source: i, target: i, components }]
        })
        .collect();
    Ok(NaiveCategory {
        objects: fs.len(),
        arrows: cells.iter().map(|c| (c.source, c.target)).collect(),
        compose,
        identities,
    })
}
