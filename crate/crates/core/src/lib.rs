//! Computations with homogeneous ideals of projective curves: Groebner
//! bases, saturation, Hilbert functions, general sections, generic initial
//! ideals and Castelnuovo-Mumford regularity.

pub mod bounds;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod field;
pub mod groebner;
pub mod hilbert;
pub mod ideal;
pub mod linalg;
pub mod linear_change;
pub mod monomial;
pub mod monomial_ideal;
pub mod parse;
pub mod poly;
pub mod regularity;
pub mod reproduce;

pub use error::{Error, Result};
pub use field::{Field, PrimeField, Rationals};
pub use groebner::{groebner, GbLimits};
pub use hilbert::{HilbertPolynomial, HilbertProfile};
pub use ideal::{is_regular_sequence, Ideal};
pub use monomial_ideal::MonomialIdeal;
pub use monomial::{Monomial, TermOrder};
pub use poly::{PolyRing, Polynomial, Ring};
