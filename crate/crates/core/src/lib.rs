pub mod algebroid;
pub mod cohomology;
pub mod error;
pub mod exterior;
pub mod linsolve;
pub mod nambu;
pub mod poly;
pub mod sweep;

pub use cohomology::{TensorCochain1, VolumeForm, WitnessReport};
pub use error::{Error, Result};
pub use exterior::{Form, MultiIndex, Multivector};
pub use nambu::{Decomposability, NambuStructure};
pub use poly::{Monomial, Polynomial, Rational};
pub use sweep::{CheckReport, Counterexample, Execution, JetBasisConfig, Verdict};
