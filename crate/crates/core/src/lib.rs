//! Monomial ideals through their lcm-lattices: minimal ideals of finite
//! atomic lattices, multigraded Betti tables via order-complex homology with
//! an independent restriction-based oracle, Scarf complexes, polarization and
//! chain depolarization, Stanley-Reisner translation with Alexander duality,
//! distributive completions, and linear-resolution criteria.

pub mod bits;
pub mod distributive;
pub mod enumerate;
pub mod error;
pub mod homology;
pub mod io;
pub mod lcm;
pub mod monomial;
pub mod poset;
pub mod resolutions;
pub mod simplicial;

pub use error::{Error, Result};
pub use homology::FieldSpec;
pub use monomial::{Monomial, MonomialIdeal};
pub use poset::{FiniteLattice, FinitePoset};
pub use simplicial::SimplicialComplex;
