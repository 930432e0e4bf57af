//! Exact computations for quasihomogeneous hypersurface singularities:
//! weight inference, well-forming substitution, differents on the
//! exceptional log Del Pezzo surface, and a table-driven regression corpus.

pub mod analysis;
pub mod dataset;
pub mod different;
pub mod error;
pub mod parser;
pub mod poly;
pub mod weights;
pub mod wellform;

pub use error::{Error, Result};
pub use poly::{Coefficient, Monomial, Polynomial, VarList};
pub use weights::WeightAssignment;
pub use wellform::WellFormProfile;
