//! Exact combinatorics of self-evacuated involutions.
//!
//! An involution is *self-evacuated* when the standard Young tableau it maps
//! to under the Robinson–Schensted correspondence is fixed by evacuation
//! (the Schützenberger map); equivalently, when `σ(i) + σ(n+1−i) = n+1` for
//! every position `i`. This crate implements the whole toolchain around that
//! class of permutations:
//!
//! * [`involutions`] — involutions in one-line notation, descent/rise
//!   statistics, complementation, and lazy lexicographic enumeration
//!   (including a constructive generator for the self-evacuated ones).
//! * [`tableaux`] — standard and semistandard Young tableaux in the
//!   strict-rows/weak-columns convention, RSK for involutions and biwords,
//!   evacuation by jeu-de-taquin sliding, generalized involutions (biwords,
//!   stored canonically as symmetric matrices), and polarization.
//! * [`formulas`] — exact arbitrary-precision counting formulas for the
//!   Eulerian distribution on self-evacuated involutions (with and without
//!   fixed points), plus coefficient-sequence analysis (symmetry,
//!   unimodality, log-concavity).
//! * [`oracles`] — independent brute-force enumerators and the cross-check
//!   harness that validates every formula against them on small instances.
//!
//! All counting is exact: counts are [`num_bigint::BigInt`] values and no
//! floating point is used anywhere. Positions, values, and alphabet symbols
//! are 1-based throughout, matching the usual combinatorial indexing.
//!
//! ```
//! use selfevac::{
//!     analyze, enumerate_involutions, polynomial_of, Involution, InvolutionFilter,
//!     PolynomialFamily,
//! };
//! use selfevac::tableaux::{evacuate_standard, rsk_involution};
//!
//! let sigma: Involution = "17563428".parse().unwrap();
//! assert!(sigma.is_self_evacuated());
//!
//! let tableau = rsk_involution(&sigma);
//! assert_eq!(evacuate_standard(&tableau), tableau);
//!
//! assert_eq!(
//!     enumerate_involutions(4, InvolutionFilter::SelfEvacuated).count(),
//!     6
//! );
//!
//! let row = polynomial_of(PolynomialFamily::SStar, 8).unwrap();
//! assert!(!analyze(&row).unimodal);
//! ```

pub mod formulas;
pub mod involutions;
pub mod oracles;
pub mod tableaux;

pub use formulas::{
    analyze, c_count, c_from_s, c_star_count, c_star_from_s_star, gen_count, polynomial_of,
    s_by_rises, s_star_by_rises, s_star_total, s_star_total_rec, s_total, s_total_rec,
    FormulaError, IntPolynomial, PolynomialFamily, PropertyReport, RecurrenceCoefficient,
};
pub use involutions::{
    enumerate_involutions, CycleReport, Involution, InvolutionError, InvolutionFilter,
    PositionSet,
};
pub use oracles::{
    brute_c, brute_gen_count, brute_s_row, crosscheck, Caps, CheckStatus, Counterexample,
    CrossCheckReport, IdentityRecord, OracleError, VerifySuite, DEFAULT_SEED,
};
pub use tableaux::{
    biword_of_tableau, enumerate_gen, evacuate_standard, inverse_rsk, rsk_biword, rsk_involution,
    Content, GeneralizedInvolution, SemistandardTableau, Shape, StandardTableau, TableauError,
};
