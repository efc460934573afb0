//! The aggregate axiom report: finite limits, cartesian closure, 2-well-pointedness,
//! the (refuted) natural numbers object, the full subobject classifier, categorified
//! choice, extensivity, and the boolean and two-valued diagnostics, each checked
//! over a seeded corpus.

mod generators;
mod nno;
mod report;

pub use generators::{
    arrow_probe, copower_of_point, diagonal_is_equaliser, distinguish, distinguish_cells, generator_check,
    two_well_pointed_check, GeneratorReport, Probe, WellPointedReport,
};
pub use nno::{
    all_candidates, count_recursors, defeating_datum, recursor_search, reduced_datum, refute, refute_finite_nno,
    two_dimensional_nno_check, NnoCandidate, NnoVerdict, RecursionDatum, RecursorOutcome, Refutation, TwoCellVerdict,
};
pub use report::{run_audit, AuditConfig, AuditEntry, AuditReport, Axiom, Verdict};

#[cfg(test)]
mod tests;
