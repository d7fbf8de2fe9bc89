//! Genus-g hyperelliptic models `y² = f(x)`, `deg f = 2g + 2`, and their nodal
//! and split degenerations.
//!
//! A repeated root of multiplicity `k` is an `A_{k−1}` point of the curve: a node
//! for `k = 2`, a cusp, tacnode, … beyond. The classifier separates
//!
//! * `Smooth`: `f` squarefree;
//! * `SplitNodal`: `f = c·s²` with `s` squarefree of degree `g + 1`, two rational
//!   components meeting transversally in `g + 1` points;
//! * `IrreducibleNodal(t)`: only double roots, `1 ≤ t ≤ g` of them;
//! * `NonNodal`: some root of multiplicity at least three.
//!
//! Euler numbers come from the normalisation: `e(C) = e(C̃) − Σ_p (branches(p) − 1)`,
//! which for nodes reduces to `2 − 2g + t` (irreducible) and `3 − g` (split).

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{factor_squarefree, squarefree_decomposition, BiPoly, Rational, UniPoly};
use crate::rng::SplitMix64;

/// `y² = f(x)` with `deg f = 2g + 2` exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HyperellipticModel {
    genus: u32,
    f: UniPoly,
}

impl HyperellipticModel {
    /// Models whose `f` has a degree other than `2g + 2` are rejected: a degree
    /// drop would put a branch point at infinity.
    pub fn new(genus: u32, f: UniPoly) -> Result<Self> {
        if genus == 0 {
            return Err(Error::GenusOutOfRange("genus must be at least 1".into()));
        }
        if f.degree() != Some(2 * genus as usize + 2) {
            return Err(Error::DegreeDrop);
        }
        Ok(Self { genus, f })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn f(&self) -> &UniPoly {
        &self.f
    }

    /// The model `y² = f(αx + β)`.
    pub fn affine_substitute(&self, alpha: &Rational, beta: &Rational) -> Result<Self> {
        if alpha.is_zero() {
            return Err(Error::InvalidInput("affine substitution needs α ≠ 0".into()));
        }
        let inner = UniPoly::new(vec![beta.clone(), alpha.clone()]);
        Self::new(self.genus, self.f.compose(&inner))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum FibreKind {
    Smooth,
    IrreducibleNodal,
    SplitNodal,
    NonNodal,
}

impl FibreKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FibreKind::Smooth => "Smooth",
            FibreKind::IrreducibleNodal => "IrreducibleNodal",
            FibreKind::SplitNodal => "SplitNodal",
            FibreKind::NonNodal => "NonNodal",
        }
    }
}

/// Classification of a fibre `y² = f(x)`.
///
/// `t` is the node count for `IrreducibleNodal` and the number of distinct
/// singular points for `NonNodal`; `intersections` is set only for `SplitNodal`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FibreClass {
    pub kind: FibreKind,
    pub t: u32,
    pub intersections: u32,
    pub geometric_genus: i64,
    #[serde(rename = "euler")]
    pub euler_number: i64,
}

impl FibreClass {
    /// Number of singular points of the fibre over ℂ.
    pub fn singular_point_count(&self) -> u32 {
        match self.kind {
            FibreKind::SplitNodal => self.intersections,
            _ => self.t,
        }
    }

    /// Classify `f` of degree `2g + 2` from its multiplicity profile: pairs
    /// `(number of distinct roots, multiplicity)` over ℂ.
    pub(crate) fn from_profile(genus: u32, profile: &[(usize, usize)]) -> Self {
        let g = genus as i64;
        let max_mult = profile.iter().filter(|(d, _)| *d > 0).map(|(_, m)| *m).max().unwrap_or(1);
        if max_mult <= 1 {
            return Self {
                kind: FibreKind::Smooth,
                t: 0,
                intersections: 0,
                geometric_genus: g,
                euler_number: 2 - 2 * g,
            };
        }
        if max_mult == 2 {
            let t: usize = profile.iter().filter(|(_, m)| *m == 2).map(|(d, _)| d).sum();
            if t == genus as usize + 1 {
                return Self {
                    kind: FibreKind::SplitNodal,
                    t: 0,
                    intersections: genus + 1,
                    geometric_genus: 0,
                    euler_number: 3 - g,
                };
            }
            let t = t as i64;
            return Self {
                kind: FibreKind::IrreducibleNodal,
                t: t as u32,
                intersections: 0,
                geometric_genus: g - t,
                euler_number: 2 - 2 * g + t,
            };
        }
        let mut odd_degree = 0i64;
        let mut even_points = 0i64;
        let mut singular = 0u32;
        for &(d, m) in profile {
            let d = d as i64;
            if m % 2 == 1 {
                odd_degree += d;
            } else {
                even_points += d;
            }
            if m >= 2 {
                singular += d as u32;
            }
        }
        // Normalisation: y'² = (odd-multiplicity part); two rational
        // components when that part is constant.
        let (geometric_genus, normalisation_euler) = if odd_degree == 0 {
            (0, 4)
        } else {
            let gg = (odd_degree - 2) / 2;
            (gg, 2 - 2 * gg)
        };
        Self {
            kind: FibreKind::NonNodal,
            t: singular,
            intersections: 0,
            geometric_genus,
            euler_number: normalisation_euler - even_points,
        }
    }
}

pub fn classify(m: &HyperellipticModel) -> FibreClass {
    let profile: Vec<(usize, usize)> = squarefree_decomposition(&m.f)
        .expect("model polynomial is nonzero")
        .iter()
        .map(|(s, k)| (s.deg(), *k))
        .collect();
    FibreClass::from_profile(m.genus, &profile)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PointLocation {
    Rational(Rational),
    /// All roots of an irreducible polynomial of degree ≥ 2.
    Conjugates(UniPoly),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LocalType {
    Node,
    Worse,
}

/// Singular point `(x₀, 0)` of `y² = f(x)`, or a Galois orbit of them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub location: PointLocation,
    pub local_type: LocalType,
    pub multiplicity: usize,
}

impl SingularPoint {
    /// Number of geometric points represented.
    pub fn count(&self) -> usize {
        match &self.location {
            PointLocation::Rational(_) => 1,
            PointLocation::Conjugates(m) => m.deg(),
        }
    }
}

pub fn singular_points(m: &HyperellipticModel) -> Vec<SingularPoint> {
    let decomposition = squarefree_decomposition(&m.f).expect("model polynomial is nonzero");
    let mut out = Vec::new();
    for (part, mult) in decomposition.into_iter().filter(|(_, k)| *k >= 2) {
        let local_type = if mult == 2 { LocalType::Node } else { LocalType::Worse };
        for q in factor_squarefree(&part) {
            let location = if q.deg() == 1 {
                PointLocation::Rational(-q.coeff(0))
            } else {
                PointLocation::Conjugates(q)
            };
            out.push(SingularPoint {
                location,
                local_type,
                multiplicity: mult,
            });
        }
    }
    out
}

/// Draw `count` pairwise distinct small rationals `n/d`, `|n| ≤ 20`, `1 ≤ d ≤ 4`.
fn distinct_rationals(count: usize, seed: u64) -> Vec<Rational> {
    let mut rng = SplitMix64::new(seed);
    let mut out: Vec<Rational> = Vec::with_capacity(count);
    while out.len() < count {
        let v = rng.next_u64();
        let n = (v % 41) as i64 - 20;
        let d = ((v >> 32) % 4) as i64 + 1;
        let r = Rational::new(n.into(), d.into());
        if !out.contains(&r) {
            out.push(r);
        }
    }
    out
}

/// `f` with `t` double roots and `2g + 2 − 2t` simple roots, all rational and
/// distinct, drawn deterministically from `seed`.
pub fn construct_nodal(genus: u32, t: i64, seed: u64) -> Result<HyperellipticModel> {
    if genus < 2 {
        return Err(Error::GenusOutOfRange("construct_nodal needs g >= 2".into()));
    }
    if t < 0 || t > genus as i64 {
        return Err(Error::NodeCountOutOfRange);
    }
    let t = t as usize;
    let n = 2 * genus as usize + 2;
    let roots = distinct_rationals(n - t, seed);
    let doubled = UniPoly::from_roots(&roots[..t]);
    let simple = UniPoly::from_roots(&roots[t..]);
    HyperellipticModel::new(genus, &(&doubled * &doubled) * &simple)
}

/// `f = s²` with `s` squarefree of degree `g + 1`: two rational components
/// meeting in `g + 1` points.
pub fn construct_split(genus: u32, seed: u64) -> Result<HyperellipticModel> {
    if genus < 2 {
        return Err(Error::GenusOutOfRange("construct_split needs g >= 2".into()));
    }
    let s = UniPoly::from_roots(&distinct_rationals(genus as usize + 1, seed));
    HyperellipticModel::new(genus, &s * &s)
}

/// `y² = h(x₀, x₁)` in the weighted plane ℙ(1, 1, g + 1), `h` of degree `2g + 2`.
///
/// `h` is stored as a [`BiPoly`] with exponent pairs `(deg x₀, deg x₁)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedModel {
    pub genus: u32,
    pub h: BiPoly,
}

/// The chart `x₁ = 1` around `x₀ = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct InfinityPoints {
    pub count: usize,
    pub smooth: bool,
}

impl WeightedModel {
    /// `h(1, x)`.
    pub fn dehomogenize(&self) -> UniPoly {
        let n = 2 * self.genus as usize + 2;
        UniPoly::new(
            (0..=n)
                .map(|j| self.h.coeff((n - j) as u32, j as u32))
                .collect(),
        )
    }

    /// Points with `x₀ = 0`: `y² = h(0, 1)` gives two points when `h(0, 1) ≠ 0`,
    /// each smooth because `∂/∂y = 2y ≠ 0` there.
    pub fn points_at_infinity(&self) -> InfinityPoints {
        let n = 2 * self.genus + 2;
        let top = self.h.coeff(0, n);
        if !top.is_zero() {
            return InfinityPoints { count: 2, smooth: true };
        }
        // y = 0 there; smooth iff the local equation y² = h(x₀, 1) has a
        // nonvanishing x₀-derivative.
        let slope = self.h.coeff(1, n - 1);
        InfinityPoints {
            count: 1,
            smooth: !slope.is_zero(),
        }
    }
}

pub fn homogenize_weighted(m: &HyperellipticModel) -> WeightedModel {
    let n = 2 * m.genus + 2;
    let mut h = BiPoly::with_bound(n, n);
    for (j, c) in m.f.coeffs().iter().enumerate() {
        if !c.is_zero() {
            h.add_term((n - j as u32, j as u32), c.clone())
                .expect("within bound");
        }
    }
    WeightedModel { genus: m.genus, h }
}

/// j-invariant of `y² = x³ + ax + b`: `1728 · 4a³ / (4a³ + 27b²)`.
pub fn j_invariant(a: &Rational, b: &Rational) -> Result<Rational> {
    let four_a3 = Rational::from_integer(4.into()) * a * a * a;
    let delta = &four_a3 + Rational::from_integer(27.into()) * b * b;
    if delta.is_zero() {
        return Err(Error::SingularCubic);
    }
    Ok(Rational::from_integer(1728.into()) * four_a3 / delta)
}
