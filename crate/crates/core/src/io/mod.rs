//! Structured-text documents, seeded corpus generation, and the naive oracle.

mod corpus;
mod format;
mod naive;

pub use corpus::{
    free_on_dag, generate_corpus, generate_functors, monoid_delooping, preorder, Constructor, CorpusSpec, MonoidKind,
};
pub use format::{
    category_doc, functor_doc, nat_trans_doc, parse_cat, parse_category, parse_functor, parse_nat_trans,
    serialize_category, serialize_functor, serialize_nat_trans, to_structured, CategoryDoc, FunctorDoc, MapDoc,
    NatTransDoc, SetDoc,
};
pub use naive::{
    naive_to_internal, oracle_from_internal, oracle_functor_category, oracle_functors, oracle_nat_trans,
    NaiveCategory, NaiveFunctor, NaiveNatTrans,
};
