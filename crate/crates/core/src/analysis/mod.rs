//! Interval fingerprints, constrained isomorphism search, and interval
//! classification predicates.

pub mod classify;
pub mod fingerprint;
pub mod iso;

pub use classify::{
    atoms_in_quotient_local, check_nondominated_transport, coatom_transpositions, is_corpus_coelementary,
    is_cosimple, is_lower_interval, is_short_edge,
};
pub use fingerprint::{fingerprint, poset_fingerprint, Fingerprint};
pub use iso::{find_isomorphisms, is_order_isomorphism, poset_isomorphisms, Constraint, IsoWitness};
