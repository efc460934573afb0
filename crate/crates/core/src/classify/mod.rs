//! Full subobject and strict bi-sieve classifiers, boolean and two-valued
//! diagnostics, and sections of fully faithful functors that are surjective
//! on objects.

mod choice;
mod classifier;

pub use choice::{categorified_choice_audit, section_of_ff_epi, ChoiceFragment, SectionCertificate};
pub use classifier::{
    classify_full_mono, classify_strict_bi_sieve, full_subobject_classifier, is_boolean, is_strict_bi_sieve,
    is_two_valued, BiSieveCertificate, FullSubobjectClassifier, TwoValuedReport,
};

#[cfg(test)]
mod tests;
