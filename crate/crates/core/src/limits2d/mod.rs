//! Finite limits and colimits of internal categories, powers and copowers by
//! the walking arrow, and the internal hom.

mod copower;
mod hom;
mod hom_category;
mod power;
mod standard;

pub use copower::{copower_by_two, CopowerByTwo};
pub use hom::{internal_hom, internal_hom_bounded, InternalHom};
pub use hom_category::{hom_category, HomCategory};
pub use power::{power_by_two, PowerByTwo};
pub use standard::{
    coproduct_cat, free_arrow, product_cat, product_functor, pullback_cat, terminal_cat, to_terminal, CoproductCat,
    LimitCat, FREE_ARROW,
};
