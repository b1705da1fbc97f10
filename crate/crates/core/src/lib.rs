//! Linearization and equification of monomial ideals.

pub mod betti;
pub mod equification;
pub mod error;
pub mod hypergraph;
pub mod ideal;
pub mod lattice;
pub mod linalg;
pub mod linearization;
pub mod monomial;
pub mod oracle;
pub mod quotients;
pub mod ring;
pub mod scalar;
pub mod squarefree;

pub use betti::BettiTable;
pub use equification::{
    deequify, equify, lattice_embedding_check, lin_general, lin_general_z1, rooted_complex,
    syzygy_redundant, syzygy_redundant_eq, SyzygyPair,
};
pub use error::{Error, Result};
pub use hypergraph::{Criterion, Hypergraph};
pub use ideal::{ideal, parse_ideal, power_complete, ExponentBound, MonomialIdeal};
pub use lattice::LcmLattice;
pub use linearization::{
    canonical_order, is_polymatroidal, lin, linearize, radical_star_lin, radical_star_lin_betti,
    retrieve_source, star_lin, sum_compatibility_check, LinMode, Linearized, YIndexing,
};
pub use monomial::{parse_monomial, Exp, Monomial};
pub use oracle::{
    betti_splitting_check, is_linear_resolution, oracle_betti, oracle_table, Coefficients,
    MultigradedBetti, OracleConfig, SplittingReport,
};
pub use quotients::{
    betti_from_quotients, colon_sequence, find_linear_quotient_order, has_linear_quotients,
    has_linear_quotients_pairwise, OrderSearch, OrderedGenerators,
};
pub use ring::{Ring, RingContext, VarRole, Variable};
pub use squarefree::{
    betti_closed_form, cluster_profile, complete_part_rk_histogram, pd_and_depth, veronese_betti,
    ClusterProfile,
};

/// Rational coefficients, the default for homology ranks.
pub type Rational = num_rational::BigRational;
/// Arbitrary precision integers.
pub type Integer = num_bigint::BigInt;
/// The prime field of order `2^61 - 1`.
pub type Fp = scalar::ModP<2305843009213693951>;
