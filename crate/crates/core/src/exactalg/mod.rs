//! Exact rational arithmetic, polynomials, number-field towers and
//! factorization.

pub mod bipoly;
pub mod factor;
pub mod field;
pub mod tower;
pub mod unipoly;

pub use bipoly::{resultant_x, resultant_y, BiPoly};
pub use factor::{factor_rational, factor_uni, Factorization, MAX_FACTOR_DEPTH};
pub use field::{format_rat, rat, rat_frac, Field, Rat};
pub use tower::{Tower, TowerElem};
pub use unipoly::{gcd_uni, resultant, squarefree_decomposition, squarefree_part, UniPoly};
