use crate::error::{Error, Result};

use super::map::{FinMap, FinObj};

pub const FALSE: usize = 0;
pub const TRUE: usize = 1;

/// `Ω = {false, true}` with `true = 1`.
pub fn omega() -> FinObj {
    FinObj::new(2)
}

/// `⊤: 1 -> Ω`.
pub fn top() -> FinMap {
    FinMap::new_unchecked(FinObj::new(1), omega(), vec![TRUE])
}

pub fn subobject_classifier() -> (FinObj, FinMap) {
    (omega(), top())
}

/// `χ_i(b) = true` iff `b` is in the image of the injection `i`.
pub fn characteristic_map(i: &FinMap) -> Result<FinMap> {
    if let Some((first, second, value)) = i.first_collision() {
        return Err(Error::NotMono { first, second, value });
    }
    let mut table = vec![FALSE; i.cod().size()];
    for &y in i.table() {
        table[y] = TRUE;
    }
    Ok(FinMap::new_unchecked(i.cod().clone(), omega(), table))
}

/// Image factorisation `f = r ∘ l`; the image lists codomain elements in increasing order.
pub fn factor_epi_mono(f: &FinMap) -> (FinMap, FinMap) {
    let mut hit = vec![false; f.cod().size()];
    for &y in f.table() {
        hit[y] = true;
    }
    let mut position = vec![usize::MAX; f.cod().size()];
    let mut image = Vec::new();
    for (y, &h) in hit.iter().enumerate() {
        if h {
            position[y] = image.len();
            image.push(y);
        }
    }
    let mid = FinObj::new(image.len());
    let l = FinMap::new_unchecked(f.dom().clone(), mid.clone(), f.table().iter().map(|&y| position[y]).collect());
    let r = FinMap::new_unchecked(mid, f.cod().clone(), image);
    (l, r)
}

/// Section of a surjection picking least preimages.
pub fn choose_section(e: &FinMap) -> Result<FinMap> {
    let mut s = vec![usize::MAX; e.cod().size()];
    for (x, &y) in e.table().iter().enumerate() {
        if s[y] == usize::MAX {
            s[y] = x;
        }
    }
    if let Some(missing) = s.iter().position(|&v| v == usize::MAX) {
        return Err(Error::NotEpi { missing });
    }
    Ok(FinMap::new_unchecked(e.cod().clone(), e.dom().clone(), s))
}
