use crate::base::{FinMap, FinObj};
use crate::error::{Error, Result};
use crate::internal::{Cat, ValidationReport, Violation};

/// Highest simplicial level kept.
pub const TOP_LEVEL: usize = 3;

/// A monotone map `[n] -> [k]`, stored as its value sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monotone {
    values: Vec<usize>,
    k: usize,
}

impl Monotone {
    pub fn new(values: Vec<usize>, k: usize) -> Result<Self> {
        if values.is_empty() || values.windows(2).any(|w| w[0] > w[1]) || values.iter().any(|&v| v > k) {
            return Err(Error::ShapeMismatch(format!("{values:?} is not a monotone map into [{k}]")));
        }
        Ok(Monotone { values, k })
    }

    pub fn identity(n: usize) -> Self {
        Monotone { values: (0..=n).collect(), k: n }
    }

    /// `δ_j: [n-1] -> [n]`, skipping `j`.
    pub fn face(n: usize, j: usize) -> Self {
        Monotone { values: (0..=n).filter(|&v| v != j).collect(), k: n }
    }

    /// `σ_j: [n+1] -> [n]`, hitting `j` twice.
    pub fn degeneracy(n: usize, j: usize) -> Self {
        Monotone { values: (0..=n + 1).map(|v| if v <= j { v } else { v - 1 }).collect(), k: n }
    }

    pub fn dom_level(&self) -> usize {
        self.values.len() - 1
    }

    pub fn cod_level(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Monotone) -> Result<Monotone> {
        if other.k != self.dom_level() {
            return Err(Error::DomainMismatch("monotone maps do not compose".into()));
        }
        Ok(Monotone { values: other.values.iter().map(|&v| self.values[v]).collect(), k: self.k })
    }
}

/// All monotone maps `[n] -> [k]`, lexicographic by value sequence.
pub fn monotone_maps(n: usize, k: usize) -> Vec<Monotone> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Monotone>) {
        if cur.len() == n + 1 {
            out.push(Monotone { values: cur.clone(), k });
            return;
        }
        for v in from..=k {
            cur.push(v);
            go(n, k, v, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// The nerve of an internal category, levels 0 to 3.
///
/// An `n`-simplex is a path `x0 -e1-> x1 -> .. -en-> xn`. Levels 2 and 3 are
/// encoded as elements of `C2` and `C3`, whose tuples list the latest arrow first.
#[derive(Clone, Debug)]
pub struct TruncatedSimplicial {
    cat: Cat,
}

impl TruncatedSimplicial {
    pub fn cat(&self) -> &Cat {
        &self.cat
    }

    pub fn level_size(&self, n: usize) -> usize {
        match n {
            0 => self.cat.objects(),
            1 => self.cat.arrows(),
            2 => self.cat.c2().size(),
            3 => self.cat.c3().size(),
            _ => panic!("levels above {TOP_LEVEL} are not kept"),
        }
    }

    pub fn level(&self, n: usize) -> FinObj {
        FinObj::new(self.level_size(n))
    }

    /// Edges `e1, .., en` of simplex `s` at level `n >= 1`, in path order.
    pub fn edges(&self, n: usize, s: usize) -> Vec<usize> {
        let c = &self.cat;
        match n {
            0 => Vec::new(),
            1 => vec![s],
            2 => {
                let t = c.c2().tuple(s);
                vec![t[1], t[0]]
            }
            3 => {
                let t = c.c3().tuple(s);
                let (p, q) = (c.c2().tuple(t[0]), c.c2().tuple(t[1]));
                vec![q[1], p[1], p[0]]
            }
            _ => panic!("levels above {TOP_LEVEL} are not kept"),
        }
    }

    pub fn vertices(&self, n: usize, s: usize) -> Vec<usize> {
        if n == 0 {
            return vec![s];
        }
        let e = self.edges(n, s);
        let mut v = vec![self.cat.source(e[0])];
        v.extend(e.iter().map(|&a| self.cat.target(a)));
        v
    }

    /// Index of the simplex with the given path-order edges; `vertex` is used at level 0.
    pub fn encode(&self, vertex: usize, edges: &[usize]) -> Option<usize> {
        let c = &self.cat;
        match edges.len() {
            0 => Some(vertex),
            1 => Some(edges[0]),
            2 => c.pair_index(edges[1], edges[0]),
            3 => {
                let p = c.pair_index(edges[2], edges[1])?;
                let q = c.pair_index(edges[1], edges[0])?;
                c.c3().index_of(&[p, q])
            }
            _ => None,
        }
    }

    /// `X(β)` applied to one simplex: vertices `x_{β(i)}`, edges the composites between them.
    pub fn act_on(&self, beta: &Monotone, s: usize) -> usize {
        let n = beta.cod_level();
        let e = self.edges(n, s);
        let v = self.vertices(n, s);
        let c = &self.cat;
        let segment = |from: usize, to: usize| -> usize {
            let mut acc = c.identity(v[from]);
            for &a in &e[from..to] {
                acc = c.compose(a, acc).expect("consecutive path edges compose");
            }
            acc
        };
        let vals = beta.values();
        let out_edges: Vec<usize> = vals.windows(2).map(|w| segment(w[0], w[1])).collect();
        self.encode(v[vals[0]], &out_edges).expect("composites of a path form a path")
    }

    /// `X(β): X_n -> X_{n'}` for `β: [n'] -> [n]`.
    pub fn action(&self, beta: &Monotone) -> FinMap {
        let (n, m) = (beta.cod_level(), beta.dom_level());
        let table = (0..self.level_size(n)).map(|s| self.act_on(beta, s)).collect();
        FinMap::new(self.level(n), self.level(m), table).expect("action lands in the right level")
    }

    /// `d_j: X_n -> X_{n-1}`.
    pub fn face(&self, n: usize, j: usize) -> FinMap {
        self.action(&Monotone::face(n, j))
    }

    /// `s_j: X_n -> X_{n+1}`.
    pub fn degeneracy(&self, n: usize, j: usize) -> FinMap {
        self.action(&Monotone::degeneracy(n, j))
    }

    /// The simplicial identities among faces and degeneracies up to level 3.
    pub fn check_simplicial_identities(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let mut check = |name: &str, lhs: FinMap, rhs: FinMap, tag: usize| {
            if lhs != rhs {
                report.push(Violation::new(name, tag, format!("{:?} ≠ {:?}", lhs.table(), rhs.table())));
            }
        };
        // d_i d_j = d_{j-1} d_i for i < j, from level n.
        for n in 2..=TOP_LEVEL {
            for j in 0..=n {
                for i in 0..j {
                    let lhs = self.face(n - 1, i).after(&self.face(n, j)).unwrap();
                    let rhs = self.face(n - 1, j - 1).after(&self.face(n, i)).unwrap();
                    check("face-face", lhs, rhs, n * 100 + i * 10 + j);
                }
            }
        }
        // s_i s_j = s_{j+1} s_i for i ≤ j, from level n up to n+2 ≤ 3.
        for n in 0..TOP_LEVEL - 1 {
            for j in 0..=n {
                for i in 0..=j {
                    let lhs = self.degeneracy(n + 1, i).after(&self.degeneracy(n, j)).unwrap();
                    let rhs = self.degeneracy(n + 1, j + 1).after(&self.degeneracy(n, i)).unwrap();
                    check("degeneracy-degeneracy", lhs, rhs, n * 100 + i * 10 + j);
                }
            }
        }
        // Mixed identities, from level n to n via n+1.
        for n in 0..TOP_LEVEL {
            for j in 0..=n {
                let s = self.degeneracy(n, j);
                for i in 0..=n + 1 {
                    let lhs = self.face(n + 1, i).after(&s).unwrap();
                    let tag = n * 100 + i * 10 + j;
                    if i == j || i == j + 1 {
                        check("face-degeneracy-identity", lhs, FinMap::identity(&self.level(n)), tag);
                    } else if i < j {
                        let rhs = self.degeneracy(n - 1, j - 1).after(&self.face(n, i)).unwrap();
                        check("face-degeneracy-below", lhs, rhs, tag);
                    } else {
                        let rhs = self.degeneracy(n - 1, j).after(&self.face(n, i - 1)).unwrap();
                        check("face-degeneracy-above", lhs, rhs, tag);
                    }
                }
            }
        }
        report
    }
}

pub fn nerve(c: &Cat) -> TruncatedSimplicial {
    TruncatedSimplicial { cat: c.clone() }
}
