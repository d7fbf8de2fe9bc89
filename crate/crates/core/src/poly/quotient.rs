//! Arithmetic in ℚ[λ]/(m) and in polynomial rings over it.
//!
//! The modulus is assumed irreducible; a reducible modulus surfaces as a failed
//! inversion ([`Error::ModulusNotIrreducible`]) the first time a zero divisor is
//! met.

use std::sync::Arc;

use num_traits::{One, Zero};

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Residue class of a polynomial modulo a monic modulus.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientElem {
    rep: UniPoly,
    modulus: Arc<UniPoly>,
}

impl QuotientElem {
    pub fn new(rep: &UniPoly, modulus: &Arc<UniPoly>) -> Self {
        debug_assert!(modulus.deg() >= 1 && modulus.leading().is_one());
        Self {
            rep: rep.rem(modulus),
            modulus: Arc::clone(modulus),
        }
    }

    pub fn from_rational(c: Rational, modulus: &Arc<UniPoly>) -> Self {
        Self::new(&UniPoly::constant(c), modulus)
    }

    pub fn representative(&self) -> &UniPoly {
        &self.rep
    }

    pub fn modulus(&self) -> &Arc<UniPoly> {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            rep: &self.rep + &other.rep,
            modulus: Arc::clone(&self.modulus),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            rep: &self.rep - &other.rep,
            modulus: Arc::clone(&self.modulus),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&(&self.rep * &other.rep), &self.modulus)
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self {
            rep: self.rep.scale(k),
            modulus: Arc::clone(&self.modulus),
        }
    }

    /// Inverse via the extended Euclidean algorithm against the modulus.
    pub fn inv(&self) -> Result<Self> {
        let m: &UniPoly = &self.modulus;
        let (mut r0, mut r1) = (m.clone(), self.rep.clone());
        let (mut s0, mut s1) = (UniPoly::zero(), UniPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let s = &s0 - &(&q * &s1);
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        if r0.deg() != 0 || r0.is_zero() {
            return Err(Error::ModulusNotIrreducible);
        }
        let k = r0.leading().recip();
        Ok(Self::new(&s0.scale(&k), &self.modulus))
    }
}

/// Polynomial in `x` with coefficients in ℚ[λ]/(m), ascending, trimmed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPoly {
    coeffs: Vec<QuotientElem>,
    modulus: Arc<UniPoly>,
}

impl QuotientPoly {
    pub fn new(mut coeffs: Vec<QuotientElem>, modulus: &Arc<UniPoly>) -> Self {
        while coeffs.last().is_some_and(QuotientElem::is_zero) {
            coeffs.pop();
        }
        Self {
            coeffs,
            modulus: Arc::clone(modulus),
        }
    }

    /// Reduce a polynomial in `x` whose coefficients are polynomials in `λ`.
    pub fn from_lambda_coeffs(coeffs: &[UniPoly], modulus: &Arc<UniPoly>) -> Self {
        Self::new(
            coeffs.iter().map(|c| QuotientElem::new(c, modulus)).collect(),
            modulus,
        )
    }

    pub fn coeffs(&self) -> &[QuotientElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn zero_elem(&self) -> QuotientElem {
        QuotientElem::from_rational(Rational::zero(), &self.modulus)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.scale(&Rational::from_integer(i.into())))
                .collect(),
            &self.modulus,
        )
    }

    pub fn eval_rational(&self, at: &Rational) -> QuotientElem {
        self.coeffs
            .iter()
            .rev()
            .fold(self.zero_elem(), |acc, c| acc.scale(at).add(c))
    }

    /// `p(x + c)`.
    pub fn shift(&self, c: &Rational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let t = a[j + 1].scale(c);
                a[j] = a[j].add(&t);
            }
        }
        Self::new(a, &self.modulus)
    }

    /// `x^n · p(1/x)` for a formal degree `n ≥ deg p`.
    pub fn reverse(&self, n: usize) -> Self {
        let mut a = vec![self.zero_elem(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            a[n - i] = c.clone();
        }
        Self::new(a, &self.modulus)
    }

    /// Remainder of Euclidean division, inverting the divisor's leading coefficient.
    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        let db = divisor.degree().expect("division by zero polynomial");
        if self.coeffs.len() <= db {
            return Ok(self.clone());
        }
        let inv = divisor.coeffs[db].inv()?;
        let mut r = self.coeffs.clone();
        for k in (0..r.len() - db).rev() {
            let c = r[k + db].mul(&inv);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].sub(&c.mul(d));
            }
        }
        r.truncate(db);
        Ok(Self::new(r, &self.modulus))
    }

    /// Euclidean gcd, returned up to a unit.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a)
    }
}

/// Degree of `gcd(p, q)` over the field ℚ[λ]/(m).
pub fn quotient_gcd_degree(p: &QuotientPoly, q: &QuotientPoly) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.gcd(q)?.degree().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2_field() -> Arc<UniPoly> {
        Arc::new(UniPoly::from_ints(&[-2, 0, 1]))
    }

    fn lambda_poly(coeffs: Vec<UniPoly>, m: &Arc<UniPoly>) -> QuotientPoly {
        QuotientPoly::from_lambda_coeffs(&coeffs, m)
    }

    #[test]
    fn inverse_of_sqrt2() {
        let m = sqrt2_field();
        let l = QuotientElem::new(&UniPoly::x(), &m);
        let inv = l.inv().unwrap();
        assert_eq!(l.mul(&inv).representative(), &UniPoly::one());
    }

    #[test]
    fn gcd_degree_fixtures() {
        let m = sqrt2_field();
        // x^2 - λ^2 is x^2 - 2 in the quotient
        let p = lambda_poly(
            vec![UniPoly::from_ints(&[0, 0, -1]), UniPoly::zero(), UniPoly::one()],
            &m,
        );
        assert_eq!(quotient_gcd_degree(&p, &p.derivative()).unwrap(), 0);

        // (x - λ)^2 = x^2 - 2λx + λ^2
        let p = lambda_poly(
            vec![UniPoly::from_ints(&[0, 0, 1]), UniPoly::from_ints(&[0, -2]), UniPoly::one()],
            &m,
        );
        assert_eq!(quotient_gcd_degree(&p, &p.derivative()).unwrap(), 1);
        assert_eq!(quotient_gcd_degree(&p, &p).unwrap(), 2);
    }

    #[test]
    fn reducible_modulus_detected() {
        // λ^2 - 1 = (λ-1)(λ+1); λ - 1 is a zero divisor
        let m = Arc::new(UniPoly::from_ints(&[-1, 0, 1]));
        let p = lambda_poly(vec![UniPoly::one(), UniPoly::from_ints(&[-1, 1])], &m);
        let q = lambda_poly(vec![UniPoly::zero(), UniPoly::zero(), UniPoly::one()], &m);
        assert_eq!(
            quotient_gcd_degree(&q, &p),
            Err(Error::ModulusNotIrreducible)
        );
    }
}
