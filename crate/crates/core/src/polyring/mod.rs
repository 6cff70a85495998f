//! Prime-field coefficients, exponent-vector monomials, term orders and
//! sparse multivariate polynomials.

mod field;
mod monomial;
mod order;
pub(crate) mod poly;

pub use field::{Coeff, PrimeField};
pub use monomial::Monomial;
pub use order::{MonomialOrder, OrderKind};
pub use poly::{Poly, PolyRing};
