//! Exact multivariate polynomials, ideals and Gröbner bases over the
//! rationals and prime fields.

pub mod field;
pub mod groebner;
pub mod ideal;
pub mod monomial;
pub mod parse;
pub mod polynomial;

pub use field::{Field, Rational, Zp};
pub use groebner::{divide, groebner, is_groebner_basis, reduce, s_polynomial, Limits};
pub use ideal::{eliminate, radical_member, saturate, Ideal};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{default_names, parse_polynomial};
pub use polynomial::Polynomial;
