use std::collections::HashMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::base::FinObj;
use crate::internal::{functors, Cat, InternalCategory, InternalFunctor, WorkBudget};
use crate::limits2d::{coproduct_cat, product_cat};
use crate::transfer::{disc, indisc};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Constructor {
    FreeOnDag,
    MonoidDelooping,
    Preorder,
    Product,
    Coproduct,
    Disc,
    Indisc,
    Opposite,
}

impl Constructor {
    pub const ALL: [Constructor; 8] = [
        Constructor::FreeOnDag,
        Constructor::MonoidDelooping,
        Constructor::Preorder,
        Constructor::Product,
        Constructor::Coproduct,
        Constructor::Disc,
        Constructor::Indisc,
        Constructor::Opposite,
    ];
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CorpusSpec {
    pub seed: u64,
    pub max_objects: usize,
    pub max_arrows: usize,
    pub constructors: Vec<Constructor>,
}

impl Default for CorpusSpec {
    fn default() -> Self {
        CorpusSpec { seed: 0, max_objects: 4, max_arrows: 10, constructors: Constructor::ALL.to_vec() }
    }
}

impl CorpusSpec {
    pub fn with_seed(seed: u64) -> Self {
        CorpusSpec { seed, ..CorpusSpec::default() }
    }

    fn enabled(&self, c: Constructor) -> bool {
        self.constructors.contains(&c)
    }

    fn fits(&self, c: &InternalCategory) -> bool {
        c.objects() <= self.max_objects && c.arrows() <= self.max_arrows
    }
}

/// Free category on a DAG: arrows are paths, identities first, then by length.
pub fn free_on_dag(vertices: usize, edges: &[(usize, usize)]) -> InternalCategory {
    // Paths as (start, end, edge list).
    let mut paths: Vec<(usize, usize, Vec<usize>)> = (0..vertices).map(|v| (v, v, Vec::new())).collect();
    let mut frontier: Vec<usize> = (0..vertices).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in frontier {
            for (e, &(s, t)) in edges.iter().enumerate() {
                if s == paths[p].1 {
                    let mut es = paths[p].2.clone();
                    es.push(e);
                    paths.push((paths[p].0, t, es));
                    next.push(paths.len() - 1);
                }
            }
        }
        frontier = next;
    }
    let index: HashMap<(usize, Vec<usize>), usize> =
        paths.iter().enumerate().map(|(k, p)| ((p.0, p.2.clone()), k)).collect();
    InternalCategory::from_composition(
        vertices,
        paths.len(),
        paths.iter().map(|p| p.1).collect(),
        paths.iter().map(|p| p.0).collect(),
        (0..vertices).collect(),
        |u, v| {
            let mut es = paths[v].2.clone();
            es.extend_from_slice(&paths[u].2);
            index[&(paths[v].0, es)]
        },
    )
    .expect("path tables are well shaped")
}

/// Number of paths, including identities, in a DAG with edges `s < t`.
fn path_count(vertices: usize, edges: &[(usize, usize)]) -> usize {
    // Paths ending at each vertex, processed in index order.
    let mut ending = vec![1usize; vertices];
    for t in 0..vertices {
        for &(s, e) in edges {
            if e == t {
                ending[t] += ending[s];
            }
        }
    }
    ending.iter().sum()
}

pub enum MonoidKind {
    Cyclic,
    MaxSemilattice,
    TruncatedAddition,
}

/// One object whose arrows are `{0, .., k-1}` under the given operation; `0` is the unit.
pub fn monoid_delooping(kind: MonoidKind, k: usize) -> InternalCategory {
    InternalCategory::from_composition(1, k, vec![0; k], vec![0; k], vec![0], |u, v| match kind {
        MonoidKind::Cyclic => (u + v) % k,
        MonoidKind::MaxSemilattice => u.max(v),
        MonoidKind::TruncatedAddition => (u + v).min(k - 1),
    })
    .expect("monoid tables are well shaped")
}

/// The preorder generated by `relation`; arrows are related pairs `(source, target)` in lex order.
pub fn preorder(n: usize, relation: &[(usize, usize)]) -> InternalCategory {
    let mut le = vec![vec![false; n]; n];
    for x in 0..n {
        le[x][x] = true;
    }
    for &(a, b) in relation {
        le[a][b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            for b in 0..n {
                if le[a][k] && le[k][b] {
                    le[a][b] = true;
                }
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|&(a, b)| le[a][b]).collect();
    let index: HashMap<(usize, usize), usize> = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    InternalCategory::from_composition(
        n,
        pairs.len(),
        pairs.iter().map(|p| p.1).collect(),
        pairs.iter().map(|p| p.0).collect(),
        (0..n).map(|x| index[&(x, x)]).collect(),
        |u, v| index[&(pairs[v].0, pairs[u].1)],
    )
    .expect("preorder tables are well shaped")
}

/// A deterministic corpus: fixed small families, then seeded random items, then closures.
pub fn generate_corpus(spec: &CorpusSpec) -> Vec<Cat> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out: Vec<InternalCategory> = Vec::new();
    let push = |c: InternalCategory, out: &mut Vec<InternalCategory>| {
        if spec.fits(&c) && c.is_valid() {
            out.push(c);
        }
    };
    let (max_o, max_a) = (spec.max_objects, spec.max_arrows);

    if spec.enabled(Constructor::Disc) {
        for n in 0..=max_o.min(max_a).min(3) {
            push(disc(&FinObj::new(n)), &mut out);
        }
    }
    if spec.enabled(Constructor::Indisc) {
        for n in 2..=max_o {
            push(indisc(&FinObj::new(n)), &mut out);
        }
    }
    if spec.enabled(Constructor::MonoidDelooping) && max_o >= 1 {
        for k in 2..=max_a.min(4) {
            push(monoid_delooping(MonoidKind::Cyclic, k), &mut out);
        }
        for k in 3..=max_a.min(4) {
            push(monoid_delooping(MonoidKind::MaxSemilattice, k), &mut out);
            push(monoid_delooping(MonoidKind::TruncatedAddition, k), &mut out);
        }
    }
    if spec.enabled(Constructor::Preorder) && max_o >= 2 {
        let mut made = 0;
        for _ in 0..40 {
            if made == 4 {
                break;
            }
            let n = rng.gen_range(2..=max_o);
            let relation: Vec<(usize, usize)> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .filter(|&(a, b)| a != b && rng.gen_bool(if a < b { 0.4 } else { 0.1 }))
                .collect();
            let c = preorder(n, &relation);
            if spec.fits(&c) {
                push(c, &mut out);
                made += 1;
            }
        }
    }
    if spec.enabled(Constructor::FreeOnDag) && max_o >= 2 {
        let mut made = 0;
        for _ in 0..60 {
            if made == 5 {
                break;
            }
            let n = rng.gen_range(2..=max_o);
            let mut edges = Vec::new();
            for s in 0..n {
                for t in s + 1..n {
                    for _ in 0..2 {
                        if rng.gen_bool(0.35) {
                            edges.push((s, t));
                        }
                    }
                }
            }
            if path_count(n, &edges) <= max_a {
                push(free_on_dag(n, &edges), &mut out);
                made += 1;
            }
        }
    }

    let base = out.len();
    if base > 0 {
        if spec.enabled(Constructor::Opposite) {
            for _ in 0..2 {
                let c = &out[rng.gen_range(0..base)];
                let op = c.opposite().expect("opposites of valid categories");
                push(op, &mut out);
            }
        }
        let closure = |out: &mut Vec<InternalCategory>, rng: &mut ChaCha8Rng, product: bool| {
            let mut made = 0;
            for _ in 0..60 {
                if made == 2 {
                    break;
                }
                let a = out[rng.gen_range(0..base)].clone().into_cat();
                let b = out[rng.gen_range(0..base)].clone().into_cat();
                let (objs, arrs) = if product {
                    (a.objects() * b.objects(), a.arrows() * b.arrows())
                } else {
                    (a.objects() + b.objects(), a.arrows() + b.arrows())
                };
                if objs == 0 || objs > max_o || arrs > max_a || a.objects() * b.objects() == 0 {
                    continue;
                }
                let c = if product { product_cat(&a, &b).cat } else { coproduct_cat(&a, &b).cat };
                out.push((*c).clone());
                made += 1;
            }
        };
        if spec.enabled(Constructor::Product) {
            closure(&mut out, &mut rng, true);
        }
        if spec.enabled(Constructor::Coproduct) {
            closure(&mut out, &mut rng, false);
        }
    }
    out.into_iter().map(InternalCategory::into_cat).collect()
}

/// `count` functors drawn from random corpus pairs, each uniformly among all functors of its pair.
pub fn generate_functors(corpus: &[Cat], count: usize, seed: u64) -> Vec<InternalFunctor> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut cache: HashMap<(usize, usize), Vec<InternalFunctor>> = HashMap::new();
    let mut out = Vec::with_capacity(count);
    if corpus.is_empty() {
        return out;
    }
    let mut attempts = 0;
    while out.len() < count && attempts < count * 50 {
        attempts += 1;
        let key = (rng.gen_range(0..corpus.len()), rng.gen_range(0..corpus.len()));
        let fs = cache.entry(key).or_insert_with(|| {
            functors(&corpus[key.0], &corpus[key.1], &mut WorkBudget::new(200_000)).unwrap_or_default()
        });
        if let Some(f) = fs.choose(&mut rng) {
            out.push(f.clone());
        }
    }
    out
}
