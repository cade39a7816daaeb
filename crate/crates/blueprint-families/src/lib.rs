//! Ordered M-sets `M^G_{alpha, beta}` for four commutator-blueprint
//! constructions, and the gallery-pattern detectors behind them.
//!
//! * Tits: alternating `(s, t, ..., s)` geodesics in universal type.
//! * Exotic: alternating geodesics of length 4, 5 or 6 in universal type.
//! * Nil: column patterns modelled on unitriangular matrices, universal rank >= 3.
//! * Quad: the (4, 4, 4) system, with interval sets for crossing walls and
//!   selected roots of type-`(n, r)` galleries for disjoint walls.
//!
//! Queries take a gallery from the identity together with 1-based positions
//! into its sequence of crossed roots; results are ordered by crossing order.

mod document;
mod family;
pub mod nil;
pub mod quad;
pub mod universal;

pub use document::{FamilyDocument, GenRef};
pub use family::{default_names, BlueprintFamily, Defect, FamilyError, NilBound, OrderedMSet, Variant};
pub use nil::{nil_pattern, parse_nil, NilLetters, NilPattern};
pub use quad::{detect_type_nr, detect_type_nr_in_pool, TypeNrMatch};
pub use universal::{detect_alternating, detect_exotic, geodesic_between, AlternatingMatch, ExoticMatch};
