use crate::base::{choose_section, factor_epi_mono, FinMap};
use crate::error::{Error, Result};

/// An orthogonal factorisation system `(L, R)` on finite sets.
pub trait BaseOfs {
    fn name(&self) -> &'static str;
    fn in_left(&self, f: &FinMap) -> bool;
    fn in_right(&self, f: &FinMap) -> bool;
    /// `f = r ∘ l` with `l ∈ L`, `r ∈ R`.
    fn factor(&self, f: &FinMap) -> (FinMap, FinMap);
    /// The diagonal `u` with `u ∘ s = p` and `f ∘ u = q`, for `s ∈ L`, `f ∈ R`, `f ∘ p = q ∘ s`.
    fn lift(&self, s: &FinMap, f: &FinMap, p: &FinMap, q: &FinMap) -> Result<FinMap>;
}

fn check_square(ofs: &dyn BaseOfs, s: &FinMap, f: &FinMap, p: &FinMap, q: &FinMap) -> Result<()> {
    if !ofs.in_left(s) {
        return Err(Error::NotInClass(format!("left map is not in the left class of {}", ofs.name())));
    }
    if !ofs.in_right(f) {
        return Err(Error::NotInClass(format!("right map is not in the right class of {}", ofs.name())));
    }
    if f.after(p)? != q.after(s)? {
        return Err(Error::NonCommuting("f ∘ p ≠ q ∘ s".into()));
    }
    Ok(())
}

/// Surjections and injections.
#[derive(Clone, Copy, Debug, Default)]
pub struct EpiMono;

impl BaseOfs for EpiMono {
    fn name(&self) -> &'static str {
        "epi-mono"
    }

    fn in_left(&self, f: &FinMap) -> bool {
        f.is_epi()
    }

    fn in_right(&self, f: &FinMap) -> bool {
        f.is_mono()
    }

    fn factor(&self, f: &FinMap) -> (FinMap, FinMap) {
        factor_epi_mono(f)
    }

    /// `u = p ∘ σ` for any section `σ` of `s`; independent of the section since `f` is injective.
    fn lift(&self, s: &FinMap, f: &FinMap, p: &FinMap, q: &FinMap) -> Result<FinMap> {
        check_square(self, s, f, p, q)?;
        p.after(&choose_section(s)?)
    }
}

/// Bijections and all maps.
#[derive(Clone, Copy, Debug, Default)]
pub struct IsoAll;

impl BaseOfs for IsoAll {
    fn name(&self) -> &'static str {
        "iso-all"
    }

    fn in_left(&self, f: &FinMap) -> bool {
        f.is_iso()
    }

    fn in_right(&self, _: &FinMap) -> bool {
        true
    }

    fn factor(&self, f: &FinMap) -> (FinMap, FinMap) {
        (FinMap::identity(f.dom()), f.clone())
    }

    fn lift(&self, s: &FinMap, f: &FinMap, p: &FinMap, q: &FinMap) -> Result<FinMap> {
        check_square(self, s, f, p, q)?;
        p.after(&s.inverse()?)
    }
}
