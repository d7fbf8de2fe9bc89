use std::collections::BTreeMap;

use num_traits::Zero;

use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Sparse bivariate polynomial: exponent pair `(i, j)` ↦ coefficient of `u^i v^j`.
///
/// Zero coefficients are never stored. When a bidegree bound `(a, b)` is set,
/// every term satisfies `i ≤ a` and `j ≤ b`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
    bound: Option<(u32, u32)>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn with_bound(a: u32, b: u32) -> Self {
        Self {
            terms: BTreeMap::new(),
            bound: Some((a, b)),
        }
    }

    pub fn from_terms<I>(terms: I, bound: Option<(u32, u32)>) -> Result<Self>
    where
        I: IntoIterator<Item = ((u32, u32), Rational)>,
    {
        let mut p = Self {
            terms: BTreeMap::new(),
            bound,
        };
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, (i, j): (u32, u32), c: Rational) -> Result<()> {
        if let Some((a, b)) = self.bound {
            if i > a || j > b {
                return Err(Error::InvalidInput(format!(
                    "term ({i},{j}) exceeds bidegree bound ({a},{b})"
                )));
            }
        }
        let slot = self.terms.entry((i, j)).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
        Ok(())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> Rational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn bound(&self) -> Option<(u32, u32)> {
        self.bound
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn eval(&self, u: &Rational, v: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * num_traits::pow(u.clone(), i as usize) * num_traits::pow(v.clone(), j as usize))
            .fold(Rational::zero(), |a, b| a + b)
    }

    /// Largest exponent of the first variable.
    pub fn degree_u(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Largest exponent of the second variable.
    pub fn degree_v(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Coefficients as polynomials in the second variable, indexed by the
    /// exponent of the first: `p = Σ_i c_i(v) u^i`.
    pub fn coefficients_in_v(&self) -> Vec<UniPoly> {
        let n = match self.degree_u() {
            None => return Vec::new(),
            Some(n) => n as usize,
        };
        let mut rows: Vec<Vec<Rational>> = vec![Vec::new(); n + 1];
        for (&(i, j), c) in &self.terms {
            let row = &mut rows[i as usize];
            if row.len() <= j as usize {
                row.resize(j as usize + 1, Rational::zero());
            }
            row[j as usize] = c.clone();
        }
        rows.into_iter().map(UniPoly::new).collect()
    }

    /// Inverse of [`BiPoly::coefficients_in_v`].
    pub fn from_coefficients_in_v(rows: &[UniPoly]) -> Self {
        let mut p = Self::zero();
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    p.terms.insert((i as u32, j as u32), c.clone());
                }
            }
        }
        p
    }

    /// Specialise the second variable, giving a polynomial in the first.
    pub fn eval_v(&self, v: &Rational) -> UniPoly {
        UniPoly::new(self.coefficients_in_v().iter().map(|c| c.eval(v)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn zero_terms_are_dropped() {
        let mut p = BiPoly::zero();
        p.add_term((1, 2), rat(3, 1)).unwrap();
        p.add_term((1, 2), rat(-3, 1)).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn bound_enforced() {
        let mut p = BiPoly::with_bound(2, 3);
        assert!(p.add_term((2, 3), rat(1, 1)).is_ok());
        assert!(p.add_term((3, 0), rat(1, 1)).is_err());
    }

    #[test]
    fn coefficient_rows_round_trip() {
        let p = BiPoly::from_terms(
            [((0, 0), rat(1, 1)), ((2, 1), rat(-1, 2)), ((2, 0), rat(5, 1))],
            None,
        )
        .unwrap();
        let rows = p.coefficients_in_v();
        assert_eq!(rows.len(), 3);
        assert_eq!(BiPoly::from_coefficients_in_v(&rows), p);
        assert_eq!(p.eval(&rat(2, 1), &rat(3, 1)), p.eval_v(&rat(3, 1)).eval(&rat(2, 1)));
    }
}
