//! Gröbner bases over F_p and the ideal algebra built on them: sums,
//! products, bracket powers, intersections, colons, membership, and
//! length/dimension of quotients.

mod buchberger;
mod ideal;
mod length;
mod reduce;

pub use buchberger::{buchberger, normal_form};
pub use ideal::Ideal;
pub use length::QuotientLength;
