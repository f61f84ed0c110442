//! Restrictions of opposite Schubert classes to torus-fixed points of the
//! Lagrangian Grassmannian `LGr_n`, in equivariant K-theory and equivariant
//! cohomology.
//!
//! The fixed points and Schubert classes are indexed by [`IsotropicIndex`]
//! (the set `I_n`). A restriction is a sum over semistandard set-valued shifted
//! tableaux ([`tableaux`]) of products of factors read off the affine chart
//! around the fixed point ([`chart`]). Every result is a sparse Laurent
//! polynomial ([`laurent`]) with exact coefficients.
//!
//! [`oracles`] holds the independent cross-checks: an inclusion-exclusion
//! computation over coordinate-subspace arrangements, a subword formula over
//! reduced words of the type C Weyl group, GKM divisibility over the moment
//! graph and the Chern-character comparison between the two theories.
//!
//! ```
//! use lgr_schubert::{restrict_h, IsotropicIndex};
//!
//! let alpha: IsotropicIndex = "1,3,-2".parse().unwrap();
//! let beta: IsotropicIndex = "3,-2,-1".parse().unwrap();
//! let h = restrict_h(&alpha, &beta).unwrap();
//! assert_eq!(h.term_count, 3);
//! ```

pub mod chart;
pub mod error;
pub mod indexcomb;
pub mod laurent;
pub mod models;
pub mod oracles;
pub mod render;
pub mod restriction;
pub mod tableaux;

use num_rational::Ratio;

pub use chart::{ChartIndexSet, SubspaceSpec};
pub use error::{Error, Result};
pub use indexcomb::{IsotropicIndex, Partition, StrictPartition};
pub use laurent::{Coefficient, LaurentPolynomial, Root};
pub use restriction::{restrict_h, restrict_k, PositiveRoot, RestrictionResult, Theory};
pub use tableaux::{SetValuedShiftedTableau, ShiftedDiagram};

/// Integer Laurent polynomials; every restriction value lives here.
pub type Laurent = LaurentPolynomial<i64>;

/// Exact rational coefficients, used for Chern-character expansions.
pub type Rational = Ratio<i128>;

/// Laurent polynomials over [`Rational`].
pub type RationalLaurent = LaurentPolynomial<Rational>;

/// Floating-point coefficients, for numerical evaluation only.
pub type FloatLaurent = LaurentPolynomial<f64>;
