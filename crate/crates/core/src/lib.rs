//! Certified boxicity of zero-divisor graphs.
//!
//! For the ring `Z_N` the zero-divisor graph has the nonzero zero divisors
//! as vertices, with `u ~ v` iff `N | uv`. For the Boolean ring `Z_2^k` the
//! vertices are the nonzero, non-all-ones bit vectors, adjacent iff their
//! supports are disjoint.
//!
//! The crate builds explicit interval representations (upper bounds) and
//! Roberts-style lower-bound witnesses, checks both against the graph and
//! combines them into a [`BoxicityReport`]. A brute-force [`oracle`] gives
//! ground truth for small graphs.
//!
//! ```
//! use zdbox_core::{certify_zn, BoxValue};
//!
//! let report = certify_zn(30).unwrap();
//! assert!(report.ok);
//! assert_eq!(report.box_value, BoxValue::Exact(2));
//! ```

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod arith;
pub mod bounds;
pub mod certify;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod rep;
pub mod witness;

pub use arith::{factorize, gcd, prime_valuation, Factorization, PrimePower, Rational};
pub use bounds::{
    boolean_bounds, class_size_table, cograph_dim_upper, cubicity_bounds, theorem_box_value, threshold_dim_bounds,
    Bounds, BoxValue, BoxicityReport, CaseLabel, Check, ClassSizeTable, CubicityBounds, Subject,
};
pub use certify::{
    certify_boolean, certify_zn, recheck_zn, verify_intersection, verify_supergraph, verify_threshold, Failure, Verdict,
};
pub use error::{Error, ResourceError, Result};
pub use graph::{
    build_boolean_graph, build_zn_graph, induced_subgraph, reduce_graph, Adjacency, BitVector, BooleanRing, Label,
    ReducedGraph, VertexId, ZdGraph, ZnRing,
};
pub use oracle::{boxicity_at_most, brute_force_boxicity, is_interval, maximal_cliques, OracleGuard};
pub use rep::{
    build_boolean_rep, build_general_rep, build_improved_rep, build_representation, BoxRepresentation, Construction,
    Interval, IntervalAssignment, ThresholdCertificate,
};
pub use witness::{
    independence_witness_zn, roberts_witness_boolean, roberts_witness_zn, verify_independence, verify_roberts_witness,
    IndependenceWitness, RobertsWitness, WitnessVerdict,
};
