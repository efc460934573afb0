use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A finite set `{0, .., size-1}`. Labels are display-only.
#[derive(Clone, Default)]
pub struct FinObj {
    size: usize,
    labels: Option<Arc<[String]>>,
}

impl FinObj {
    pub fn new(size: usize) -> Self {
        FinObj { size, labels: None }
    }

    pub fn labelled(labels: Vec<String>) -> Self {
        FinObj { size: labels.len(), labels: Some(labels.into()) }
    }

    pub fn empty() -> Self {
        FinObj::new(0)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_empty(&self) -> bool {
        self.size == 0
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, x: usize) -> String {
        match &self.labels {
            Some(l) => l[x].clone(),
            None => x.to_string(),
        }
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }
}

impl PartialEq for FinObj {
    fn eq(&self, other: &Self) -> bool {
        self.size == other.size
    }
}

impl Eq for FinObj {}

impl Hash for FinObj {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.size.hash(state);
    }
}

impl fmt::Debug for FinObj {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinObj({})", self.size)
    }
}

/// A function between finite sets, stored as its table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinMap {
    dom: FinObj,
    cod: FinObj,
    table: Vec<usize>,
}

impl FinMap {
    pub fn new(dom: FinObj, cod: FinObj, table: Vec<usize>) -> Result<Self> {
        if table.len() != dom.size() {
            return Err(Error::ShapeMismatch(format!(
                "table has length {} but the domain has size {}",
                table.len(),
                dom.size()
            )));
        }
        if let Some((index, &value)) = table.iter().enumerate().find(|(_, &v)| v >= cod.size()) {
            return Err(Error::OutOfRange { index, value, cod: cod.size() });
        }
        Ok(FinMap { dom, cod, table })
    }

    /// Caller guarantees the table fits `dom` and `cod`.
    pub(crate) fn new_unchecked(dom: FinObj, cod: FinObj, table: Vec<usize>) -> Self {
        debug_assert_eq!(table.len(), dom.size());
        debug_assert!(table.iter().all(|&v| v < cod.size()));
        FinMap { dom, cod, table }
    }

    pub fn from_fn(dom: FinObj, cod: FinObj, f: impl FnMut(usize) -> usize) -> Result<Self> {
        let table = dom.elements().map(f).collect();
        FinMap::new(dom, cod, table)
    }

    pub fn identity(obj: &FinObj) -> Self {
        FinMap { dom: obj.clone(), cod: obj.clone(), table: obj.elements().collect() }
    }

    pub fn constant(dom: &FinObj, cod: &FinObj, value: usize) -> Result<Self> {
        FinMap::new(dom.clone(), cod.clone(), vec![value; dom.size()])
    }

    /// The unique map out of the empty set.
    pub fn from_empty(cod: &FinObj) -> Self {
        FinMap { dom: FinObj::empty(), cod: cod.clone(), table: Vec::new() }
    }

    /// The unique map to the one-element set.
    pub fn to_terminal(dom: &FinObj) -> Self {
        FinMap { dom: dom.clone(), cod: FinObj::new(1), table: vec![0; dom.size()] }
    }

    /// The map `1 -> cod` picking `x`.
    pub fn point(cod: &FinObj, x: usize) -> Result<Self> {
        FinMap::new(FinObj::new(1), cod.clone(), vec![x])
    }

    pub fn dom(&self) -> &FinObj {
        &self.dom
    }

    pub fn cod(&self) -> &FinObj {
        &self.cod
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn into_table(self) -> Vec<usize> {
        self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &FinMap) -> Result<FinMap> {
        compose(self, f)
    }

    pub fn is_mono(&self) -> bool {
        self.first_collision().is_none()
    }

    pub fn is_epi(&self) -> bool {
        self.first_missing().is_none()
    }

    pub fn is_iso(&self) -> bool {
        self.dom.size() == self.cod.size() && self.is_mono()
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.table.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub(crate) fn first_collision(&self) -> Option<(usize, usize, usize)> {
        let mut seen = vec![usize::MAX; self.cod.size()];
        for (x, &y) in self.table.iter().enumerate() {
            if seen[y] != usize::MAX {
                return Some((seen[y], x, y));
            }
            seen[y] = x;
        }
        None
    }

    pub(crate) fn first_missing(&self) -> Option<usize> {
        let mut hit = vec![false; self.cod.size()];
        for &y in &self.table {
            hit[y] = true;
        }
        hit.iter().position(|h| !h)
    }

    pub fn inverse(&self) -> Result<FinMap> {
        if let Some((first, second, value)) = self.first_collision() {
            return Err(Error::NotMono { first, second, value });
        }
        if let Some(missing) = self.first_missing() {
            return Err(Error::NotEpi { missing });
        }
        let mut inv = vec![0; self.cod.size()];
        for (x, &y) in self.table.iter().enumerate() {
            inv[y] = x;
        }
        Ok(FinMap { dom: self.cod.clone(), cod: self.dom.clone(), table: inv })
    }

    /// Elements of the domain sent to `y`, increasing.
    pub fn preimage(&self, y: usize) -> Vec<usize> {
        self.table.iter().enumerate().filter(|(_, &v)| v == y).map(|(x, _)| x).collect()
    }
}

impl fmt::Debug for FinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinMap({} -> {}: {:?})", self.dom.size(), self.cod.size(), self.table)
    }
}

/// `g ∘ f`.
pub fn compose(g: &FinMap, f: &FinMap) -> Result<FinMap> {
    if f.cod != g.dom {
        return Err(Error::DomainMismatch(format!(
            "cannot compose {} -> {} after {} -> {}",
            g.dom.size(),
            g.cod.size(),
            f.dom.size(),
            f.cod.size()
        )));
    }
    let table = f.table.iter().map(|&y| g.table[y]).collect();
    Ok(FinMap { dom: f.dom.clone(), cod: g.cod.clone(), table })
}
