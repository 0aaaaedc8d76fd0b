//! Exact-arithmetic toolkit for the geometry of K3 carpets on rational
//! normal scrolls.
//!
//! The crate computes, over the integers and rationals with no floating
//! point anywhere:
//!
//! - cohomology of split bundles on P¹ and of line bundles on Hirzebruch
//!   surfaces ([`p1_bundles`], [`hirzebruch`]);
//! - sharp dimension ranges for the slots of a short exact sequence of
//!   sheaves, by exhausting the ranks of the connecting maps
//!   ([`les_calculus`]);
//! - tangent, ambient-tangent, and normal bundle cohomology of scrolls,
//!   and the count of K3 double structures each scroll carries ([`scroll`]);
//! - Hilbert-scheme tangent data at a K3 carpet — expected dimension,
//!   obstructions, smoothness — and the component membership decided by
//!   rank-2 Picard lattices ([`carpet`], [`picard_lattice`]);
//! - the Chow ring of the join threefold of two rational normal curves,
//!   with Fano-type positivity and a full audit of a published
//!   intersection table ([`join_threefold`]).
//!
//! Every quantity that can be reached along two independent routes is
//! recomputed along both and compared at runtime; a disagreement surfaces
//! as [`Error::Internal`] instead of a silently wrong number.

pub mod carpet;
pub mod error;
pub mod hirzebruch;
pub mod join_threefold;
pub mod les_calculus;
pub mod p1_bundles;
pub mod picard_lattice;
pub mod scroll;

pub use carpet::{
    CarpetInvariants, CarpetSpec, ComponentMembership, PrimeEvidence, RibbonInvariants,
    SmoothnessReport,
};
pub use error::{Error, Result};
pub use hirzebruch::{leray_cohomology, CohTriple, HirzebruchDivisor};
pub use join_threefold::{
    ChowClass, DiscrepancyNote, EntryCheck, FanoReport, JoinThreefold, MatchStatus,
    TableCheckReport,
};
pub use les_calculus::{CohInfo, Interval, SesProblem};
pub use p1_bundles::SplitBundle;
pub use picard_lattice::{
    divisibility, genus_of, hyperelliptic_model, two_component_condition, HyperellipticModel,
    Lattice2, LatticeModel,
};
pub use scroll::{NormalTwistReport, PushforwardRow, PushforwardTable, ScrollSpec};
