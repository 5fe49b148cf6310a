//! Example curves: implicitized rational curves, basic double links,
//! liaison, complete intersections containing a scheme, and named fixtures.

pub mod fixtures;
pub mod image;
pub mod liaison;
pub mod param;

pub use param::{implicitize, ImplicitMethod, Implicitization, Parametrization};
pub use image::{analyze_image, ImageAnalysis};
pub use liaison::{
    basic_double_link, basic_double_link_general, link, minimal_ci_degrees, CIWitness, DoubleLink, LinkResult,
};
