//! Resultants, discriminants, squarefree decomposition, rational roots.

use num_traits::{One, Zero};

use super::factor::factor_squarefree;
use super::{Rational, UniPoly};
use crate::error::{Error, Result};

/// Resultant of `p` and `q`, equal to the determinant of their Sylvester matrix.
///
/// Computed by the Euclidean remainder sequence over ℚ. When exactly one input
/// is zero the resultant is 0.
pub fn resultant(p: &UniPoly, q: &UniPoly) -> Result<Rational> {
    match (p.is_zero(), q.is_zero()) {
        (true, true) => return Err(Error::BothZero),
        (true, false) | (false, true) => return Ok(Rational::zero()),
        _ => {}
    }
    let mut a = p.clone();
    let mut b = q.clone();
    let mut acc = Rational::one();
    loop {
        let m = a.deg();
        let n = b.deg();
        if n == 0 {
            return Ok(acc * pow(&b.leading(), m));
        }
        if m == 0 {
            return Ok(acc * pow(&a.leading(), n));
        }
        let r = a.rem(&b);
        if r.is_zero() {
            return Ok(Rational::zero());
        }
        let k = r.deg();
        // Res(a, b) = (-1)^{mn} lc(b)^{m-k} Res(b, r)
        if (m * n) % 2 == 1 {
            acc = -acc;
        }
        acc *= pow(&b.leading(), m - k);
        a = b;
        b = r;
    }
}

fn pow(base: &Rational, e: usize) -> Rational {
    num_traits::pow::pow(base.clone(), e)
}

/// Discriminant `(−1)^{n(n−1)/2} · Res(p, p′) / lc(p)` with `n = deg p`.
///
/// With this sign the depressed cubic `x³ + ax + b` has discriminant
/// `−(4a³ + 27b²)` and the quadratic `ax² + bx + c` has `b² − 4ac`.
pub fn discriminant(p: &UniPoly) -> Result<Rational> {
    let n = match p.degree() {
        None | Some(0) => return Err(Error::ConstantPolynomial),
        Some(n) => n,
    };
    let r = resultant(p, &p.derivative())?;
    let d = r / p.leading();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -d } else { d })
}

/// Yun's squarefree decomposition.
///
/// Returns monic, squarefree, pairwise coprime factors paired with their
/// multiplicity, in ascending multiplicity; `p = lc(p) · ∏ factorᵐ`.
pub fn squarefree_decomposition(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.monic();
    let mut out = Vec::new();
    if f.deg() == 0 {
        return Ok(out);
    }
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.exact_div(&a0).expect("gcd divides f");
    let mut c = df.exact_div(&a0).expect("gcd divides f'");
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = b.gcd(&d);
        if a.deg() > 0 {
            out.push((a.clone(), i));
        }
        b = b.exact_div(&a).expect("gcd divides b");
        if b.deg() == 0 {
            break;
        }
        c = d.exact_div(&a).expect("gcd divides d");
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Product of the distinct monic irreducible-over-ℂ factors: `p / gcd(p, p′)`, monic.
pub fn radical(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let f = p.monic();
    Ok(f.exact_div(&f.gcd(&f.derivative())).expect("gcd divides f"))
}

pub fn is_squarefree(p: &UniPoly) -> bool {
    !p.is_zero() && p.gcd(&p.derivative()).deg() == 0
}

/// Irreducible factorisation over ℚ: monic irreducible factors with
/// multiplicities, grouped by ascending multiplicity.
pub fn factor(p: &UniPoly) -> Result<Vec<(UniPoly, usize)>> {
    let mut out = Vec::new();
    for (part, m) in squarefree_decomposition(p)? {
        for f in factor_squarefree(&part) {
            out.push((f, m));
        }
    }
    Ok(out)
}

/// Rational roots with exact multiplicities, sorted ascending.
///
/// Roots are read off the linear factors of the irreducible factorisation.
pub fn rational_roots(p: &UniPoly) -> Result<Vec<(Rational, usize)>> {
    let mut roots: Vec<(Rational, usize)> = factor(p)?
        .into_iter()
        .filter(|(f, _)| f.deg() == 1)
        .map(|(f, m)| (-f.coeff(0), m))
        .collect();
    roots.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(roots)
}
