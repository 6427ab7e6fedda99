//! Exact analysis of plane affine curves over the rationals: points and
//! places at infinity, Egyptian verdicts, and pole semigroups.

pub mod curve;
pub mod egyptian;
pub mod error;
pub mod exactalg;
pub mod parser;
pub mod puiseux;
pub mod semigroup;

pub use curve::AffinePlaneCurve;
pub use egyptian::{classify, integral_closure_report, EgyptianVerdict, PlacesCount};
pub use error::{Error, Result};
pub use parser::{format_poly, parse_poly};
pub use semigroup::{recip_analysis, RecipOptions, RecipReport};
