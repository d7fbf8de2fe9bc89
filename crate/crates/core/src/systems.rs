//! Linear-system numerology on ℙ¹×ℙ¹, Hirzebruch surfaces `F_e`, and the
//! degree-one del Pezzo surface, plus Severi-variety dimensions.

use serde::Serialize;

use crate::error::{Error, Result};

/// Bidegree `(a, b)` of a divisor class `O(a, b)` on ℙ¹×ℙ¹.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Bidegree {
    pub a: u64,
    pub b: u64,
}

impl Bidegree {
    pub fn new(a: u64, b: u64) -> Self {
        Self { a, b }
    }
}

/// Class `a·h + b·f` on `F_e`, with `h² = −e`, `h·f = 1`, `f² = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct HirzebruchClass {
    pub e: u64,
    pub a: i64,
    pub b: i64,
}

impl HirzebruchClass {
    pub fn new(e: u64, a: i64, b: i64) -> Self {
        Self { e, a, b }
    }

    /// The negative section `h`.
    pub fn section(e: u64) -> Self {
        Self::new(e, 1, 0)
    }

    /// A fibre `f` of the ruling.
    pub fn fibre(e: u64) -> Self {
        Self::new(e, 0, 1)
    }

    /// `K = −2h − (e + 2)f`.
    pub fn canonical(e: u64) -> Self {
        Self::new(e, -2, -(e as i64 + 2))
    }

    pub fn add(self, other: Self) -> Result<Self> {
        if self.e != other.e {
            return Err(Error::SurfaceMismatch(self.e, other.e));
        }
        Ok(Self::new(self.e, self.a + other.a, self.b + other.b))
    }

    /// Curves not in `|cf|` lie in `|ah + bf|` with `a > 0`, `b ≥ a·e`.
    pub fn is_effective_curve_class(self) -> bool {
        self.a > 0 && self.b >= self.a * self.e as i64
    }
}

/// Nodal curves of bidegree `(a, b)` with exactly `t` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeveriSpec {
    pub bidegree: Bidegree,
    pub t: u64,
}

/// `h⁰(O(a, b)) = (a + 1)(b + 1)`.
pub fn h0_p1xp1(d: Bidegree) -> u64 {
    (d.a + 1) * (d.b + 1)
}

/// Arithmetic genus `1 + ab − a − b` of curves in `|O(a, b)|`, from
/// `ω_C ≅ O_C(a − 2, b − 2)`.
pub fn arithmetic_genus_p1xp1(d: Bidegree) -> Result<i64> {
    if d.a == 0 || d.b == 0 {
        return Err(Error::AdjunctionRange);
    }
    let (a, b) = (d.a as i64, d.b as i64);
    Ok(1 + a * b - a - b)
}

/// `dim V(a, b, t) = ab + a + b − t` when `0 ≤ t ≤ p_a`, `None` (empty) otherwise.
pub fn severi_dimension(s: SeveriSpec) -> Result<Option<u64>> {
    let pa = arithmetic_genus_p1xp1(s.bidegree)?;
    if s.t as i64 > pa {
        return Ok(None);
    }
    let (a, b) = (s.bidegree.a, s.bidegree.b);
    Ok(Some(a * b + a + b - s.t))
}

/// `dim |I_Z(2, g + 1)| = 3g + 5 − 3c` for `Z` the double points of `c`
/// general points.
pub fn prescribed_nodes_dimension(g: u64, c: u64) -> Result<u64> {
    if g < 2 {
        return Err(Error::GenusOutOfRange("prescribed nodes need g >= 2".into()));
    }
    if c > g {
        return Err(Error::InvalidInput(format!("node count c = {c} outside [0, {g}]")));
    }
    Ok(3 * g + 5 - 3 * c)
}

/// Bilinear intersection form: `(a₁h + b₁f)·(a₂h + b₂f) = a₁b₂ + a₂b₁ − e·a₁a₂`.
pub fn hirzebruch_intersection(c1: HirzebruchClass, c2: HirzebruchClass) -> Result<i64> {
    if c1.e != c2.e {
        return Err(Error::SurfaceMismatch(c1.e, c2.e));
    }
    Ok(c1.a * c2.b + c2.a * c1.b - c1.e as i64 * c1.a * c2.a)
}

/// Arithmetic genus by adjunction: `1 + C·(C + K)/2`.
pub fn hirzebruch_genus(c: HirzebruchClass) -> Result<i64> {
    if c.a < 1 {
        return Err(Error::MalformedClass);
    }
    let k = HirzebruchClass::canonical(c.e);
    let twice = hirzebruch_intersection(c, c.add(k)?)?;
    if twice % 2 != 0 {
        return Err(Error::MalformedClass);
    }
    Ok(1 + twice / 2)
}

/// `dim |−rK|` on a degree-one del Pezzo surface: `r(r + 1)/2`.
pub fn delpezzo_anticanonical_dim(r: u64) -> Result<u64> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    Ok(r * (r + 1) / 2)
}

/// The unique `(a, b)`, `a ≤ b`, with `a + b = g + 3` and `1 + ab − a − b = g`:
/// smooth genus-g curves of degree `g + 3` on the quadric.
pub fn hyperelliptic_bidegree(g: u64) -> Result<Bidegree> {
    if g < 2 {
        return Err(Error::GenusOutOfRange("hyperelliptic bidegree needs g >= 2".into()));
    }
    let mut found = None;
    for a in 1..=(g + 3) / 2 {
        let b = g + 3 - a;
        let d = Bidegree::new(a, b);
        if arithmetic_genus_p1xp1(d)? == g as i64 {
            assert!(found.is_none(), "bidegree solution not unique for g = {g}");
            found = Some(d);
        }
    }
    found.ok_or_else(|| Error::InvalidInput(format!("no bidegree for g = {g}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h0_fixtures() {
        assert_eq!(h0_p1xp1(Bidegree::new(2, 3)), 12);
        assert_eq!(h0_p1xp1(Bidegree::new(0, 0)), 1);
        assert_eq!(h0_p1xp1(Bidegree::new(1, 1)), 4);
    }

    #[test]
    fn genus_fixtures() {
        for g in 2..=5 {
            assert_eq!(arithmetic_genus_p1xp1(Bidegree::new(2, g + 1)).unwrap(), g as i64);
        }
        assert_eq!(arithmetic_genus_p1xp1(Bidegree::new(1, 1)).unwrap(), 0);
        assert_eq!(arithmetic_genus_p1xp1(Bidegree::new(3, 3)).unwrap(), 4);
        assert_eq!(arithmetic_genus_p1xp1(Bidegree::new(0, 3)), Err(Error::AdjunctionRange));
    }

    #[test]
    fn severi_fixtures() {
        let s = |a, b, t| severi_dimension(SeveriSpec { bidegree: Bidegree::new(a, b), t }).unwrap();
        assert_eq!(s(2, 3, 0), Some(11));
        assert_eq!(s(2, 3, 2), Some(9));
        assert_eq!(s(2, 3, 3), None);
    }

    #[test]
    fn prescribed_fixtures() {
        assert_eq!(prescribed_nodes_dimension(2, 0).unwrap(), 11);
        assert_eq!(prescribed_nodes_dimension(3, 2).unwrap(), 8);
        assert!(prescribed_nodes_dimension(3, 4).is_err());
    }

    #[test]
    fn hirzebruch_fixtures() {
        let g = 2;
        let e = g + 1;
        let h = HirzebruchClass::section(e);
        let f = HirzebruchClass::fibre(e);
        assert_eq!(hirzebruch_intersection(h, h).unwrap(), -3);
        assert_eq!(hirzebruch_intersection(f, f).unwrap(), 0);
        assert_eq!(hirzebruch_intersection(h, f).unwrap(), 1);
        let d = HirzebruchClass::new(e, 1, e as i64);
        assert_eq!(hirzebruch_intersection(d, h).unwrap(), 0);
        assert_eq!(hirzebruch_genus(d).unwrap(), 0);
        assert_eq!(hirzebruch_genus(HirzebruchClass::new(e, 2, 2 * g as i64 + 2)).unwrap(), 2);
        assert!(hirzebruch_intersection(h, HirzebruchClass::section(1)).is_err());
    }

    #[test]
    fn fibre_multiples_rejected() {
        assert_eq!(hirzebruch_genus(HirzebruchClass::new(1, 0, 3)), Err(Error::MalformedClass));
    }

    #[test]
    fn effectivity_helper() {
        assert!(HirzebruchClass::new(3, 2, 6).is_effective_curve_class());
        assert!(!HirzebruchClass::new(3, 2, 5).is_effective_curve_class());
        assert!(!HirzebruchClass::new(3, 0, 5).is_effective_curve_class());
    }

    #[test]
    fn delpezzo_fixtures() {
        assert_eq!(delpezzo_anticanonical_dim(1).unwrap(), 1);
        assert_eq!(delpezzo_anticanonical_dim(2).unwrap(), 3);
        assert_eq!(delpezzo_anticanonical_dim(3).unwrap(), 6);
    }

    #[test]
    fn bidegree_fixtures() {
        assert_eq!(hyperelliptic_bidegree(2).unwrap(), Bidegree::new(2, 3));
        assert_eq!(hyperelliptic_bidegree(5).unwrap(), Bidegree::new(2, 6));
    }
}
