//! Functors between finite sets and internal categories: `disc`, `indisc`,
//! objects, arrows and components, with the adjunctions
//! `Π0 ⊣ disc ⊣ (−)0 ⊣ indisc` as executable witnesses, and the nerve.

mod adjunction;
mod cells;
mod nerve;
mod standard;

pub use adjunction::{
    check_naturality, check_round_trip, check_triangles, AdjunctionWitness, Category1, DiscObjects, FinSets,
    InternalCats, ObjectsIndisc, Pi0Disc,
};
pub use cells::{discrete_nat_trans_bijection, DiscreteCells};
pub use nerve::{monotone_maps, nerve, Monotone, TruncatedSimplicial, TOP_LEVEL};
pub use standard::{
    arrows_part, disc, disc_map, indisc, indisc_map, objects_part, pi0, pi0_coequalizer, pi0_map,
};

pub fn adjunction_disc_objects() -> DiscObjects {
    DiscObjects
}

pub fn adjunction_objects_indisc() -> ObjectsIndisc {
    ObjectsIndisc
}

pub fn adjunction_pi0_disc() -> Pi0Disc {
    Pi0Disc
}
