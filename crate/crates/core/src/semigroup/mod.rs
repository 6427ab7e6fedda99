pub mod completion;
pub mod numerical;
pub mod recip;

pub use completion::{default_bound, geometric_genus, pole_semigroup, Completeness, PoleSemigroup};
pub use numerical::{genus_of, is_weierstrass_point, NumericalSemigroup};
pub use recip::{recip_analysis, recip_analysis_at, RecipOptions, RecipReport, VRecip};
