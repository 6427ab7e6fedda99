//! Branches and places of a plane curve at a point, by rational
//! Newton–Puiseux expansion.

pub mod branches;
pub mod newton;
pub mod place;
pub mod series;

pub use branches::{branch_classes, branch_classes_of, places_over, PuiseuxBranchClass};
pub use newton::{newton_polygon, Edge, NewtonPolygon};
pub use place::{milnor_number, valuation_at, PlaceAtInfinity, PRECISION_CEILING};
pub use series::Series;
