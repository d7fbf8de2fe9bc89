//! Exact arithmetic over ℚ: univariate and bivariate polynomials, resultants,
//! squarefree decomposition, factorisation and quotient fields ℚ[λ]/(m).

mod algebra;
mod bipoly;
mod factor;
mod modp;
mod quotient;
mod unipoly;

pub use algebra::{
    discriminant, factor, is_squarefree, radical, rational_roots, resultant,
    squarefree_decomposition,
};
pub use bipoly::BiPoly;
pub use factor::factor_squarefree;
pub use quotient::{quotient_gcd_degree, QuotientElem, QuotientPoly};
pub use unipoly::UniPoly;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// `n / d` as a [`Rational`]; panics on `d = 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

/// Integer as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
