//! Monomial ideals: minimal generators, strong stability, almost revlex
//! ideals, Hilbert functions and the operations the Lefschetz deciders
//! are built from.

mod hilbert;
mod ideal;
mod stable;

pub use hilbert::{hilbert_function_enumerate, hilbert_function_recursive};
pub use ideal::{minimalize, MonomialIdeal};
pub use stable::{AlmostRevlexWitness, RegularityCertificate, RegularitySource, StabilityWitness};
