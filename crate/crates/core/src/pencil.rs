//! Pencils `f_λ = (1 − λ)f₀ + λf₁` of genus-g hyperelliptic models, viewed as
//! fibred surfaces over ℙ¹, and more generally families `f(x, λ)` polynomial
//! in λ.
//!
//! Singular fibres sit over the zeros of `Disc_x(f_λ)`, including the point
//! λ = ∞ when the discriminant drops below its formal degree. Each irreducible
//! factor `m(λ)` is analysed once over ℚ[λ]/(m), which covers all of its
//! conjugate roots together.
//!
//! The total-space Euler number uses
//!
//! ```text
//! e(X) = e(A)·e(D) + Σ_s (e(A_s) − e(A))
//! ```
//!
//! where `A` is a smooth fibre. Every singular fibre has `e(A_s) > e(A)`, hence
//! `e(X) ≥ 4(g₁ − 1)(g₂ − 1)` with equality only when all fibres are smooth.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::curves::{classify, FibreClass, FibreKind, HyperellipticModel};
use crate::error::{Error, Result};
use crate::literal::{format_rational, poly_to_value};
use crate::poly::{factor, QuotientPoly, Rational, UniPoly};
use crate::rng::SplitMix64;

/// `f(x, λ) = Σ rows[i](λ)·xⁱ`, a family of genus-g models of formal x-degree
/// `2g + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    genus: u32,
    rows: Vec<UniPoly>,
}

impl Family {
    /// Rejects families that are constant in λ, that have an identically zero
    /// fibre, or whose formal top coefficient vanishes for every λ.
    pub fn new(genus: u32, mut rows: Vec<UniPoly>) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusOutOfRange("pencils need g >= 2".into()));
        }
        let n = 2 * genus as usize + 2;
        if rows.len() > n + 1 && rows[n + 1..].iter().any(|r| !r.is_zero()) {
            return Err(Error::DegreeDrop);
        }
        rows.resize(n + 1, UniPoly::zero());
        if rows[n].is_zero() {
            return Err(Error::DegreeDrop);
        }
        let content = rows.iter().fold(UniPoly::zero(), |acc, r| acc.gcd(r));
        if content.deg() > 0 {
            return Err(Error::InvalidInput(format!(
                "family has identically zero fibres at the roots of {content}"
            )));
        }
        let fam = Self { genus, rows };
        if fam.lambda_degree() == 0 {
            return Err(Error::ProportionalPencil);
        }
        Ok(fam)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    /// Coefficients of `x⁰, …, x^{2g+2}` as polynomials in λ.
    pub fn rows(&self) -> &[UniPoly] {
        &self.rows
    }

    fn n(&self) -> usize {
        2 * self.genus as usize + 2
    }

    pub fn lambda_degree(&self) -> usize {
        self.rows
            .iter()
            .filter_map(UniPoly::degree)
            .max()
            .unwrap_or(0)
    }

    pub fn fibre_at(&self, lambda: &Rational) -> UniPoly {
        UniPoly::new(self.rows.iter().map(|r| r.eval(lambda)).collect())
    }

    /// The fibre over λ = ∞: the coefficient of `λ^k`, `k` the λ-degree.
    pub fn fibre_at_infinity(&self) -> UniPoly {
        let k = self.lambda_degree();
        UniPoly::new(self.rows.iter().map(|r| r.coeff(k)).collect())
    }

    /// The pulled-back family `f(x, φ(λ))`.
    pub fn base_change(&self, phi: &UniPoly) -> Result<Self> {
        Self::new(self.genus, self.rows.iter().map(|r| r.compose(phi)).collect())
    }
}

/// `f_λ = (1 − λ)f₀ + λf₁` with `deg f₀ = deg f₁ = 2g + 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pencil {
    genus: u32,
    f0: UniPoly,
    f1: UniPoly,
}

impl Pencil {
    pub fn new(genus: u32, f0: UniPoly, f1: UniPoly) -> Result<Self> {
        if genus < 2 {
            return Err(Error::GenusOutOfRange("pencils need g >= 2".into()));
        }
        let n = 2 * genus as usize + 2;
        if f0.degree() != Some(n) || f1.degree() != Some(n) {
            return Err(Error::DegreeDrop);
        }
        if f0.scale(&f1.leading()) == f1.scale(&f0.leading()) {
            return Err(Error::ProportionalPencil);
        }
        Ok(Self { genus, f0, f1 })
    }

    /// A pencil of two models with integer coefficients in `[−9, 9]`.
    pub fn random(genus: u32, seed: u64) -> Result<Self> {
        let n = 2 * genus as usize + 2;
        let mut rng = SplitMix64::new(seed);
        let mut draw = || {
            let mut c: Vec<i64> = (0..=n).map(|_| rng.below(19) as i64 - 9).collect();
            if c[n] == 0 {
                c[n] = 1;
            }
            UniPoly::from_ints(&c)
        };
        let (f0, f1) = (draw(), draw());
        Self::new(genus, f0, f1)
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn f0(&self) -> &UniPoly {
        &self.f0
    }

    pub fn f1(&self) -> &UniPoly {
        &self.f1
    }

    pub fn family(&self) -> Family {
        let n = 2 * self.genus as usize + 2;
        let rows = (0..=n)
            .map(|i| {
                let (a, b) = (self.f0.coeff(i), self.f1.coeff(i));
                let d = &b - &a;
                UniPoly::new(vec![a, d])
            })
            .collect();
        Family::new(self.genus, rows).expect("validated pencil is a valid family")
    }

    pub fn to_value(&self) -> Value {
        json!({
            "g": self.genus,
            "f0": poly_to_value(&self.f0),
            "f1": poly_to_value(&self.f1),
        })
    }
}

/// Fraction-free Gaussian elimination over ℚ[λ].
fn bareiss_det(mut m: Vec<Vec<UniPoly>>) -> UniPoly {
    let n = m.len();
    if n == 0 {
        return UniPoly::one();
    }
    let mut negate = false;
    let mut prev = UniPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return UniPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Principal coefficient of the j-th subresultant of `f = Σ rows[i]xⁱ` and
/// `∂f/∂x`, both at formal degree (`n`, `n − 1`). For `j = 0` this is the
/// resultant.
fn principal_subresultant(rows: &[UniPoly], j: usize) -> UniPoly {
    let n = rows.len() - 1;
    let a = rows;
    let b: Vec<UniPoly> = (0..n)
        .map(|i| a[i + 1].scale(&Rational::from_integer((i + 1).into())))
        .collect();
    let size = 2 * n - 1 - 2 * j;
    let mut m = vec![vec![UniPoly::zero(); size]; size];
    for r in 0..n - 1 - j {
        for t in 0..=n {
            if r + t < size {
                m[r][r + t] = a[n - t].clone();
            }
        }
    }
    for r in 0..n - j {
        for t in 0..n {
            if r + t < size {
                m[n - 1 - j + r][r + t] = b[n - 1 - t].clone();
            }
        }
    }
    bareiss_det(m)
}

/// `Disc_x f(x, λ)` as a polynomial in λ, taken with formal x-degree `2g + 2`.
///
/// At a λ where the top coefficient vanishes this is the discriminant of the
/// binary form, so a fibre with a single branch point at infinity stays
/// smooth.
pub fn family_discriminant(fam: &Family) -> Result<UniPoly> {
    let n = fam.n();
    let res = principal_subresultant(&fam.rows, 0);
    let disc = res
        .exact_div(&fam.rows[n])
        .expect("resultant is divisible by the leading coefficient");
    if disc.is_zero() {
        return Err(Error::EverywhereSingular);
    }
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -disc } else { disc })
}

pub fn pencil_discriminant(p: &Pencil) -> Result<UniPoly> {
    family_discriminant(&p.family())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FibreParameter {
    Rational(Rational),
    /// All roots of an irreducible `m(λ)` of degree at least two.
    Algebraic(UniPoly),
    Infinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularFibreRecord {
    pub parameter: FibreParameter,
    /// Number of fibres the record stands for: `deg m` for algebraic parameters.
    pub conjugates: usize,
    /// Singular points of each fibre.
    pub nodes: u32,
    pub class: FibreClass,
    /// Order of vanishing of the discriminant at the parameter.
    pub disc_multiplicity: usize,
}

impl SingularFibreRecord {
    /// `conjugates · (e(A_s) − e(A))`.
    pub fn euler_contribution(&self, genus: u32) -> i64 {
        let smooth = 2 - 2 * genus as i64;
        self.conjugates as i64 * (self.class.euler_number - smooth)
    }

    pub fn to_value(&self) -> Value {
        let mut v = json!({
            "conjugates": self.conjugates,
            "nodes": self.nodes,
            "class": self.class.kind.as_str(),
            "euler": self.class.euler_number,
            "disc_order": self.disc_multiplicity,
        });
        let obj = v.as_object_mut().expect("object literal");
        match &self.parameter {
            FibreParameter::Rational(r) => {
                obj.insert("param".into(), Value::String(format_rational(r)));
            }
            FibreParameter::Algebraic(m) => {
                obj.insert("minpoly".into(), poly_to_value(m));
            }
            FibreParameter::Infinity => {
                obj.insert("param".into(), Value::String("infinity".into()));
            }
        }
        v
    }
}

/// A rational `c` with `p(c) ≠ 0`, searched over `0, 1, −1, 2, −2, …`.
fn non_root(eval: impl Fn(&Rational) -> bool) -> Rational {
    (0i64..)
        .flat_map(|k| [k, -k - 1])
        .map(|k| Rational::from_integer(k.into()))
        .find(|c| !eval(c))
        .expect("a nonzero polynomial has finitely many roots")
}

/// Classify a rational fibre, moving a branch point off infinity first.
fn classify_rational_fibre(genus: u32, f: &UniPoly) -> FibreClass {
    let n = 2 * genus as usize + 2;
    let f = if f.degree() == Some(n) {
        f.clone()
    } else {
        let c = non_root(|c| f.eval(c).is_zero());
        f.shift(&c).reverse(n)
    };
    let model = HyperellipticModel::new(genus, f).expect("full-degree model");
    classify(&model)
}

/// Multiplicity profile over ℚ[λ]/(m) from
/// `deg gcd(f, f′, …, f⁽ᵏ⁾) = Σ_r max(m_r − k, 0)`.
fn algebraic_profile(f: &QuotientPoly, n: usize) -> Result<Vec<(usize, usize)>> {
    let mut degrees = vec![n];
    let mut g = f.clone();
    let mut d = f.clone();
    while *degrees.last().expect("nonempty") > 0 {
        d = d.derivative();
        g = g.gcd(&d)?;
        degrees.push(g.degree().unwrap_or(0));
    }
    // at_least[k] = #{roots with multiplicity ≥ k}, k ≥ 1
    let at_least: Vec<usize> = degrees.windows(2).map(|w| w[0] - w[1]).collect();
    Ok((0..at_least.len())
        .map(|i| {
            let next = at_least.get(i + 1).copied().unwrap_or(0);
            (at_least[i] - next, i + 1)
        })
        .filter(|(count, _)| *count > 0)
        .collect())
}

/// Rows of `xⁿ·f(c + 1/x, λ)`.
fn move_infinity(rows: &[UniPoly], c: &Rational) -> Vec<UniPoly> {
    let n = rows.len() - 1;
    let mut shifted = rows.to_vec();
    for i in 0..n {
        for j in (i..n).rev() {
            let t = shifted[j + 1].scale(c);
            shifted[j] = &shifted[j] + &t;
        }
    }
    shifted.reverse();
    shifted
}

fn classify_algebraic_fibre(fam: &Family, m: &UniPoly) -> Result<FibreClass> {
    let n = fam.n();
    let modulus = Arc::new(m.clone());
    let mut rows = fam.rows.clone();
    if rows[n].rem(m).is_zero() {
        let f = QuotientPoly::from_lambda_coeffs(&rows, &modulus);
        let c = non_root(|c| f.eval_rational(c).is_zero());
        rows = move_infinity(&rows, &c);
    }
    // deg gcd(f, f′) over ℚ[λ]/(m) is the least j whose principal
    // subresultant coefficient survives reduction mod m.
    let d1 = (1..n)
        .find(|&j| !principal_subresultant(&rows, j).rem(m).is_zero())
        .unwrap_or(n - 1);
    if d1 == 1 {
        return Ok(FibreClass::from_profile(fam.genus, &[(n - 2, 1), (1, 2)]));
    }
    let f = QuotientPoly::from_lambda_coeffs(&rows, &modulus);
    let profile = algebraic_profile(&f, n)?;
    Ok(FibreClass::from_profile(fam.genus, &profile))
}

fn record(parameter: FibreParameter, conjugates: usize, class: FibreClass, mult: usize) -> SingularFibreRecord {
    debug_assert_ne!(class.kind, FibreKind::Smooth, "discriminant root with smooth fibre");
    SingularFibreRecord {
        parameter,
        conjugates,
        nodes: class.singular_point_count(),
        class,
        disc_multiplicity: mult,
    }
}

/// Singular fibres ordered as: rational parameters ascending, algebraic
/// parameters by (degree, minimal polynomial), then λ = ∞.
pub fn family_singular_fibres(fam: &Family) -> Result<Vec<SingularFibreRecord>> {
    let disc = family_discriminant(fam)?;
    let factors = factor(&disc)?;
    let mut records: Vec<SingularFibreRecord> = factors
        .par_iter()
        .map(|(m, mult)| {
            if m.deg() == 1 {
                let root = -m.coeff(0);
                let class = classify_rational_fibre(fam.genus, &fam.fibre_at(&root));
                Ok(record(FibreParameter::Rational(root), 1, class, *mult))
            } else {
                let class = classify_algebraic_fibre(fam, m)?;
                Ok(record(FibreParameter::Algebraic(m.clone()), m.deg(), class, *mult))
            }
        })
        .collect::<Result<_>>()?;
    let formal = fam.lambda_degree() * (2 * fam.n() - 2);
    let deficit = formal - disc.deg();
    if deficit > 0 {
        let class = classify_rational_fibre(fam.genus, &fam.fibre_at_infinity());
        records.push(record(FibreParameter::Infinity, 1, class, deficit));
    }
    records.sort_by(|a, b| order_key(&a.parameter).cmp(&order_key(&b.parameter)));
    Ok(records)
}

fn order_key(p: &FibreParameter) -> (u8, usize, Vec<Rational>) {
    match p {
        FibreParameter::Rational(r) => (0, 1, vec![r.clone()]),
        FibreParameter::Algebraic(m) => (1, m.deg(), m.coeffs().to_vec()),
        FibreParameter::Infinity => (2, 0, Vec::new()),
    }
}

pub fn singular_fibres(p: &Pencil) -> Result<Vec<SingularFibreRecord>> {
    family_singular_fibres(&p.family())
}

/// Euler-number accounting for a fibration with fibre genus `g1` over a base
/// of genus `g2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationSummary {
    pub g1: u32,
    pub g2: u32,
    pub e_fibre: i64,
    pub e_base: i64,
    pub e_total: i64,
    pub singular_fibres: Vec<SingularFibreRecord>,
    /// `4(g1 − 1)(g2 − 1)`.
    pub bound: i64,
    /// Singular fibres exist, so `e_total > bound`.
    pub strict: bool,
    /// False when some fibre has a singularity worse than a node; the Euler
    /// contribution of such fibres assumes a smooth total space there.
    pub exact: bool,
    /// The discriminant vanishes at each singular fibre to order exactly
    /// `e(A_s) − e(A)`. A higher order means the surface `y² = f(x, λ)` is
    /// itself singular there, e.g. at a base point of the pencil.
    pub total_space_smooth: bool,
}

impl FibrationSummary {
    pub fn from_records(g1: u32, g2: u32, singular_fibres: Vec<SingularFibreRecord>) -> Self {
        let e_fibre = 2 - 2 * g1 as i64;
        let e_base = 2 - 2 * g2 as i64;
        let e_total = e_fibre * e_base
            + singular_fibres
                .iter()
                .map(|r| r.euler_contribution(g1))
                .sum::<i64>();
        let bound = 4 * (g1 as i64 - 1) * (g2 as i64 - 1);
        let strict = !singular_fibres.is_empty();
        let exact = singular_fibres
            .iter()
            .all(|r| r.class.kind != FibreKind::NonNodal);
        let total_space_smooth = singular_fibres
            .iter()
            .all(|r| r.disc_multiplicity as i64 == r.class.euler_number - e_fibre);
        Self {
            g1,
            g2,
            e_fibre,
            e_base,
            e_total,
            singular_fibres,
            bound,
            strict,
            exact,
            total_space_smooth,
        }
    }

    /// Total number of singular fibres over ℂ.
    pub fn fibre_count(&self) -> usize {
        self.singular_fibres.iter().map(|r| r.conjugates).sum()
    }

    pub fn to_value(&self) -> Value {
        json!({
            "e_total": self.e_total,
            "bound": self.bound,
            "strict": self.strict,
            "exact": self.exact,
            "smooth_total_space": self.total_space_smooth,
            "fibres": self.singular_fibres.iter().map(SingularFibreRecord::to_value).collect::<Vec<_>>(),
        })
    }
}

pub fn family_total_space_euler(fam: &Family) -> Result<FibrationSummary> {
    Ok(FibrationSummary::from_records(fam.genus, 0, family_singular_fibres(fam)?))
}

pub fn total_space_euler(p: &Pencil) -> Result<FibrationSummary> {
    family_total_space_euler(&p.family())
}

/// `χ = (K² + e)/12` and whether it is an integer.
pub fn noether_consistency(summary: &FibrationSummary, k2: i64) -> (Rational, bool) {
    let chi = Rational::new((k2 + summary.e_total).into(), 12.into());
    let integral = chi.is_integer();
    (chi, integral)
}
