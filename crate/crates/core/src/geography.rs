//! Validators for the numerical invariants of (fibred) surfaces.
//!
//! Every check produces a [`Check`] carrying both evaluated sides, so a scan
//! over many tuples never stops at the first violation.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::literal::serialize_rational_opt;
use crate::poly::Rational;

/// Numerical invariants of a smooth compact surface `X`, optionally fibred
/// `X → D` with fibre genus `g1` and base genus `g2`.
///
/// Any field may be unknown; operations state which ones they need.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceInvariants {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chi: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_g: Option<i64>,
    #[serde(default, rename = "K2", skip_serializing_if = "Option::is_none")]
    pub k2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub e: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g1: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g2: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

impl SurfaceInvariants {
    /// Projective plane: `χ = 1`, `q = p_g = 0`, `K² = 9`, `e = 3`.
    pub fn plane() -> Self {
        Self {
            chi: Some(1),
            q: Some(0),
            p_g: Some(0),
            k2: Some(9),
            e: Some(3),
            ..Self::default()
        }
    }

    /// `12χ = K² + e`, when all three are known.
    pub fn noether_holds(&self) -> Option<bool> {
        Some(12 * self.chi? == self.k2? + self.e?)
    }

    /// `χ = 1 − q + p_g`, when all three are known.
    pub fn chi_identity_holds(&self) -> Option<bool> {
        Some(self.chi? == 1 - self.q? + self.p_g?)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inapplicable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
    #[serde(serialize_with = "serialize_rational_opt")]
    pub lhs: Option<Rational>,
    #[serde(serialize_with = "serialize_rational_opt")]
    pub rhs: Option<Rational>,
    pub relation: &'static str,
    pub reference: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<&'static str>,
}

impl Check {
    fn inapplicable(name: &'static str, relation: &'static str, reference: &'static str) -> Self {
        Self {
            name,
            status: Status::Inapplicable,
            lhs: None,
            rhs: None,
            relation,
            reference,
            note: None,
        }
    }

    fn compare(
        name: &'static str,
        lhs: Rational,
        relation: &'static str,
        rhs: Rational,
        reference: &'static str,
    ) -> Self {
        let ok = match relation {
            "<=" => lhs <= rhs,
            ">=" => lhs >= rhs,
            "<" => lhs < rhs,
            ">" => lhs > rhs,
            "==" => lhs == rhs,
            _ => unreachable!("unknown relation {relation}"),
        };
        Self {
            name,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs: Some(lhs),
            rhs: Some(rhs),
            relation,
            reference,
            note: None,
        }
    }

    fn with_equality_note(mut self, note: &'static str) -> Self {
        if self.status == Status::Pass && self.lhs == self.rhs {
            self.note = Some(note);
        }
        self
    }
}

fn r(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GeographyReport {
    pub checks: Vec<Check>,
}

impl GeographyReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    /// No check failed (inapplicable checks are ignored).
    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Fill in the missing members of `12χ = K² + e` and `χ = 1 − q + p_g`.
pub fn noether_complete(known: &SurfaceInvariants) -> Result<SurfaceInvariants> {
    let mut inv = known.clone();
    for (name, holds) in [
        ("{χ, K², e}", inv.noether_holds()),
        ("{χ, q, p_g}", inv.chi_identity_holds()),
    ] {
        if holds.is_some() {
            return Err(Error::InvalidInput(format!("over-determined: all of {name} given")));
        }
    }
    loop {
        let mut changed = false;
        match (inv.chi, inv.k2, inv.e) {
            (None, Some(k2), Some(e)) => {
                if (k2 + e) % 12 != 0 {
                    return Err(Error::NonIntegral(format!("χ = {}/12", k2 + e)));
                }
                inv.chi = Some((k2 + e) / 12);
                changed = true;
            }
            (Some(chi), None, Some(e)) => {
                inv.k2 = Some(12 * chi - e);
                changed = true;
            }
            (Some(chi), Some(k2), None) => {
                inv.e = Some(12 * chi - k2);
                changed = true;
            }
            _ => {}
        }
        match (inv.chi, inv.q, inv.p_g) {
            (None, Some(q), Some(p_g)) => {
                inv.chi = Some(1 - q + p_g);
                changed = true;
            }
            (Some(chi), None, Some(p_g)) => {
                inv.q = Some(1 - chi + p_g);
                changed = true;
            }
            (Some(chi), Some(q), None) => {
                inv.p_g = Some(chi - 1 + q);
                changed = true;
            }
            _ => {}
        }
        if !changed {
            break;
        }
    }
    let noether_done = inv.noether_holds().is_some();
    let chi_done = inv.chi_identity_holds().is_some();
    if !noether_done && !chi_done {
        return Err(Error::InvalidInput(
            "under-determined: need two of {χ, K², e} or two of {χ, q, p_g}".into(),
        ));
    }
    if inv.noether_holds() == Some(false) || inv.chi_identity_holds() == Some(false) {
        return Err(Error::InvalidInput("completion is inconsistent".into()));
    }
    Ok(inv)
}

/// Invariants after blowing up `n` points: `K² − n`, `e + n`, everything else kept.
pub fn blow_up(inv: &SurfaceInvariants, n: u64) -> Result<SurfaceInvariants> {
    let (Some(_), Some(k2), Some(e)) = (inv.chi, inv.k2, inv.e) else {
        return Err(Error::InvalidInput("blow-up needs χ, K² and e".into()));
    };
    let n = n as i64;
    Ok(SurfaceInvariants {
        k2: Some(k2 - n),
        e: Some(e + n),
        ..inv.clone()
    })
}

const FIBRATION_REF: &str = "fibration bounds (Barth–Hulek–Peters–Van de Ven)";

/// Bounds on `χ`, `q` and `e` of a fibration with fibre genus `g1` over a base
/// of genus `g2`.
pub fn fibration_chi_bounds(inv: &SurfaceInvariants) -> GeographyReport {
    let mut checks = Vec::new();
    let (g1, g2) = (inv.g1, inv.g2);
    checks.push(match (g1, g2, inv.chi) {
        (Some(g1), Some(g2), Some(chi)) => Check::compare(
            "chi_fibration_lower",
            r(chi),
            ">=",
            r(2 * (g1 - 1) * (g2 - 1)),
            FIBRATION_REF,
        ),
        _ => Check::inapplicable("chi_fibration_lower", ">=", FIBRATION_REF),
    });
    if g1 == Some(2) {
        checks.push(match (g2, inv.chi) {
            (Some(g2), Some(chi)) => Check::compare(
                "chi_genus2_lower",
                r(chi),
                ">=",
                r(g2 - 1),
                "genus-2 fibrations (Xiao)",
            ),
            _ => Check::inapplicable("chi_genus2_lower", ">=", "genus-2 fibrations (Xiao)"),
        });
    }
    checks.push(match (g2, inv.q) {
        (Some(g2), Some(q)) => Check::compare("q_lower", r(q), ">=", r(g2), "pullback of Pic(D)"),
        _ => Check::inapplicable("q_lower", ">=", "pullback of Pic(D)"),
    });
    checks.push(match (g1, g2, inv.q) {
        (Some(g1), Some(g2), Some(q)) => {
            Check::compare("q_upper", r(q), "<=", r(g1 + g2), FIBRATION_REF)
        }
        _ => Check::inapplicable("q_upper", "<=", FIBRATION_REF),
    });
    checks.push(match (g1, g2, inv.e) {
        (Some(g1), Some(g2), Some(e)) => Check::compare(
            "euler_fibration_lower",
            r(e),
            ">=",
            r(4 * (g1 - 1) * (g2 - 1)),
            FIBRATION_REF,
        ),
        _ => Check::inapplicable("euler_fibration_lower", ">=", FIBRATION_REF),
    });
    GeographyReport { checks }
}

/// Xiao's geometric dichotomy for genus-2 fibrations, supplied by the caller:
/// case (i) is `ε > 0` with the branch divisor containing the negative section.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum XiaoCase {
    CaseI,
    CaseII,
}

const XIAO_EPS_REF: &str = "Xiao, genus-2 fibrations: instability bounds";
const XIAO_K2_REF: &str = "Xiao, genus-2 fibrations: K² bounds";
const XIAO_COR_REF: &str = "Xiao, genus-2 fibrations, K² ≤ 8χ";

/// Xiao's constraints on `(χ, q, p_g, K², g2, ε)` of a genus-2 fibration.
pub fn xiao_validate(inv: &SurfaceInvariants, case: XiaoCase) -> GeographyReport {
    let names: [(&str, &str, &str); 3] = [
        ("xiao_eps", "", XIAO_EPS_REF),
        ("xiao_k2", "", XIAO_K2_REF),
        ("xiao_k2_le_8chi", "<=", XIAO_COR_REF),
    ];
    let complete = (|| Some((inv.chi?, inv.q?, inv.p_g?, inv.k2?, inv.g2?, inv.epsilon?)))();
    let genus_ok = inv.g1.is_none_or(|g| g == 2);
    let Some((chi, q, p_g, k2, g2, eps)) = complete.filter(|_| genus_ok) else {
        return GeographyReport {
            checks: names
                .iter()
                .map(|&(n, rel, rf)| Check::inapplicable(n, rel, rf))
                .collect(),
        };
    };

    let mut checks = vec![
        Check::compare("eps_le_pg_plus_1", r(eps), "<=", r(p_g + 1), XIAO_EPS_REF),
        Check::compare(
            "eps_parity",
            r(eps.rem_euclid(2)),
            "==",
            r((chi + g2 - 1).rem_euclid(2)),
            XIAO_EPS_REF,
        ),
        Check::compare("eps_lower", r(eps), ">=", r(-g2), XIAO_EPS_REF),
        Check::compare("eps_upper", r(eps), "<=", r(chi - g2 + 1), XIAO_EPS_REF),
    ];
    checks.push(if q > g2 {
        Check::compare("q_gt_g2_forces_eps", r(eps), "==", r(chi - g2 + 1), XIAO_EPS_REF)
    } else {
        Check::inapplicable("q_gt_g2_forces_eps", "==", XIAO_EPS_REF)
    });
    let special_eps = p_g + 1 - 2 * g2;
    checks.push(if q == g2 + 1 {
        Check::compare("q_g2_plus_1_implies_eps", r(eps), "==", r(special_eps), XIAO_EPS_REF)
    } else {
        Check::inapplicable("q_g2_plus_1_implies_eps", "==", XIAO_EPS_REF)
    });
    checks.push(if eps == special_eps {
        Check::compare("eps_implies_q_g2_plus_1", r(q), "==", r(g2 + 1), XIAO_EPS_REF)
    } else {
        Check::inapplicable("eps_implies_q_g2_plus_1", "==", XIAO_EPS_REF)
    });

    match case {
        XiaoCase::CaseI if eps <= 0 => {
            for n in ["k2_lower_case_i", "k2_upper_case_i", "eps_half_case_i"] {
                checks.push(Check::inapplicable(n, "<=", XIAO_K2_REF));
            }
        }
        XiaoCase::CaseI => {
            checks.push(Check::compare(
                "k2_lower_case_i",
                r(k2),
                ">=",
                r(2 * chi + 6 * (g2 - 1)),
                XIAO_K2_REF,
            ));
            checks.push(Check::compare(
                "k2_upper_case_i",
                r(k2),
                "<=",
                r(3 * chi + 5 * (g2 - 1) - 2 * eps),
                XIAO_K2_REF,
            ));
            checks.push(Check::compare(
                "eps_half_case_i",
                r(eps),
                "<=",
                Rational::new((chi - g2 + 1).into(), 2.into()),
                XIAO_K2_REF,
            ));
        }
        XiaoCase::CaseII => {
            let (lo, hi) = case_ii_interval(chi, q, p_g, g2, eps);
            checks.push(Check::compare("k2_lower_case_ii", r(k2), ">=", r(lo), XIAO_K2_REF));
            checks.push(Check::compare("k2_upper_case_ii", r(k2), "<=", r(hi), XIAO_K2_REF));
        }
    }
    checks.push(Check::compare("xiao_k2_le_8chi", r(k2), "<=", r(8 * chi), XIAO_COR_REF));
    GeographyReport { checks }
}

/// `max{2χ + 6(g2 − 1), χ + 7(g2 − 1) + 3ε} ≤ K² ≤ min{6p_g − 5q + 3g2 + 2, 7χ + g2 − 1}`.
fn case_ii_interval(chi: i64, q: i64, p_g: i64, g2: i64, eps: i64) -> (i64, i64) {
    let lo = (2 * chi + 6 * (g2 - 1)).max(chi + 7 * (g2 - 1) + 3 * eps);
    let hi = (6 * p_g - 5 * q + 3 * g2 + 2).min(7 * chi + g2 - 1);
    (lo, hi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ScanFlag {
    /// ε = 0: existence is only guaranteed without the case-(ii) K² range.
    #[serde(rename = "eps0-weak")]
    EpsZeroWeak,
    /// `q = g2` is incompatible with ε; the row uses `q = g2 + 1`.
    #[serde(rename = "q=g2+1")]
    IrregularityRaised,
}

impl ScanFlag {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanFlag::EpsZeroWeak => "eps0-weak",
            ScanFlag::IrregularityRaised => "q=g2+1",
        }
    }
}

/// One admissible `(χ, ε)` cell with its K² interval.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub chi: i64,
    pub eps: i64,
    pub q: i64,
    pub p_g: i64,
    #[serde(rename = "K2_min")]
    pub k2_min: i64,
    #[serde(rename = "K2_max")]
    pub k2_max: i64,
    pub flags: Vec<ScanFlag>,
}

impl ScanRow {
    pub fn invariants(&self, g2: i64, k2: i64) -> SurfaceInvariants {
        SurfaceInvariants {
            chi: Some(self.chi),
            q: Some(self.q),
            p_g: Some(self.p_g),
            k2: Some(k2),
            e: Some(12 * self.chi - k2),
            g1: Some(2),
            g2: Some(g2),
            epsilon: Some(self.eps),
            d: None,
        }
    }
}

/// Rows for one value of χ, ascending in ε.
pub fn xiao_scan_chi(g2: i64, chi: i64) -> Vec<ScanRow> {
    let mut rows = Vec::new();
    let top = chi - g2 + 1;
    for eps in 0..=top {
        if (eps - (chi + g2 - 1)).rem_euclid(2) != 0 {
            continue;
        }
        let mut flags = Vec::new();
        if eps == 0 {
            flags.push(ScanFlag::EpsZeroWeak);
        }
        let mut q = g2;
        let mut p_g = chi - 1 + q;
        if eps > p_g + 1 {
            q = g2 + 1;
            p_g = chi - 1 + q;
            flags.push(ScanFlag::IrregularityRaised);
        }
        if p_g < 0 {
            continue;
        }
        let (lo, hi) = case_ii_interval(chi, q, p_g, g2, eps);
        let hi = hi.min(8 * chi);
        if lo > hi {
            continue;
        }
        rows.push(ScanRow {
            chi,
            eps,
            q,
            p_g,
            k2_min: lo,
            k2_max: hi,
            flags,
        });
    }
    rows
}

/// All admissible `(χ, ε, K²-interval)` cells for `g2 − 1 ≤ χ ≤ chi_max`,
/// ordered by χ then ε.
pub fn xiao_admissible_scan(g2: i64, chi_max: i64) -> Vec<ScanRow> {
    ((g2 - 1)..=chi_max)
        .into_par_iter()
        .map(|chi| xiao_scan_chi(g2, chi))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

const BMY_REF: &str = "Bogomolov–Miyaoka–Yau";
const NOETHER_INEQ_REF: &str = "Noether inequality";

pub fn general_type_checks(inv: &SurfaceInvariants, minimal: bool) -> GeographyReport {
    let mut checks = Vec::new();
    checks.push(match (inv.k2, inv.e) {
        (Some(k2), Some(e)) => {
            Check::compare("c1sq_le_3c2", r(k2), "<=", r(3 * e), BMY_REF).with_equality_note("BMY line")
        }
        _ => Check::inapplicable("c1sq_le_3c2", "<=", BMY_REF),
    });
    if minimal {
        checks.push(match inv.k2 {
            Some(k2) => Check::compare("c1sq_positive", r(k2), ">", r(0), "minimal general type"),
            None => Check::inapplicable("c1sq_positive", ">", "minimal general type"),
        });
        checks.push(match (inv.p_g, inv.k2) {
            (Some(p_g), Some(k2)) => Check::compare(
                "noether_inequality",
                r(p_g),
                "<=",
                Rational::new(k2.into(), 2.into()) + r(2),
                NOETHER_INEQ_REF,
            )
            .with_equality_note("Noether line"),
            _ => Check::inapplicable("noether_inequality", "<=", NOETHER_INEQ_REF),
        });
    }
    GeographyReport { checks }
}

/// `(c₂, χ) = (12d, d)` for a relatively minimal elliptic fibration (`K² = 0`).
pub fn elliptic_c2(d: i64) -> Result<(i64, i64)> {
    if d < 0 {
        return Err(Error::InvalidInput("elliptic degree d must be nonnegative".into()));
    }
    Ok((12 * d, d))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SlopeVerdict {
    ProductLike,
    Admissible,
    Inadmissible,
}

/// Slope `ν = K²/c₂`: 2 for products, in (2, 3) for Kodaira fibrations.
pub fn kodaira_slope(k2: i64, c2: i64) -> Result<(Rational, SlopeVerdict)> {
    if c2 <= 0 {
        return Err(Error::InvalidInput("slope needs c2 > 0".into()));
    }
    let nu = Rational::new(k2.into(), c2.into());
    let verdict = if nu == r(2) {
        SlopeVerdict::ProductLike
    } else if nu > r(2) && nu < r(3) {
        SlopeVerdict::Admissible
    } else {
        SlopeVerdict::Inadmissible
    };
    Ok((nu, verdict))
}

/// `#Aut ≤ 84(g − 1)` for a curve of genus `g ≥ 2`.
pub fn hurwitz_bound(g: i64) -> Result<i64> {
    if g < 2 {
        return Err(Error::GenusOutOfRange(
            "Hurwitz bound needs g >= 2 (automorphism group is infinite below)".into(),
        ));
    }
    Ok(84 * (g - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn inv() -> SurfaceInvariants {
        SurfaceInvariants::default()
    }

    #[test]
    fn noether_fixtures() {
        let done = noether_complete(&SurfaceInvariants { k2: Some(9), e: Some(3), ..inv() }).unwrap();
        assert_eq!(done.chi, Some(1));
        let done = noether_complete(&SurfaceInvariants { chi: Some(1), k2: Some(7), ..inv() }).unwrap();
        assert_eq!(done.e, Some(5));
        assert!(matches!(
            noether_complete(&SurfaceInvariants { k2: Some(8), e: Some(3), ..inv() }),
            Err(Error::NonIntegral(_))
        ));
    }

    #[test]
    fn noether_chains_both_identities() {
        let done = noether_complete(&SurfaceInvariants {
            q: Some(0),
            p_g: Some(0),
            k2: Some(9),
            ..inv()
        })
        .unwrap();
        assert_eq!((done.chi, done.e), (Some(1), Some(3)));
    }

    #[test]
    fn noether_rejects_bad_determination() {
        assert!(noether_complete(&SurfaceInvariants { k2: Some(1), ..inv() }).is_err());
        // χ from (q, p_g) disagrees with χ from (K², e)
        assert!(noether_complete(&SurfaceInvariants {
            q: Some(0),
            p_g: Some(1),
            k2: Some(8),
            e: Some(4),
            ..inv()
        })
        .is_err());
        assert!(noether_complete(&SurfaceInvariants {
            chi: Some(1),
            k2: Some(9),
            e: Some(4),
            ..inv()
        })
        .is_err());
    }

    #[test]
    fn blow_up_fixtures() {
        let p = SurfaceInvariants::plane();
        let one = blow_up(&p, 1).unwrap();
        assert_eq!((one.k2, one.e, one.chi), (Some(8), Some(4), Some(1)));
        assert_eq!(blow_up(&p, 0).unwrap(), p);
        let eight = blow_up(&p, 8).unwrap();
        assert_eq!((eight.k2, eight.e), (Some(1), Some(11)));
        assert_eq!(eight.noether_holds(), Some(true));
    }

    #[test]
    fn fibration_fixtures() {
        let rep = fibration_chi_bounds(&SurfaceInvariants {
            g1: Some(2),
            g2: Some(2),
            chi: Some(1),
            ..inv()
        });
        assert_eq!(rep.get("chi_fibration_lower").unwrap().status, Status::Fail);

        let rep = fibration_chi_bounds(&SurfaceInvariants {
            g1: Some(2),
            g2: Some(0),
            chi: Some(1),
            q: Some(0),
            ..inv()
        });
        assert!(rep.passed());

        let rep = fibration_chi_bounds(&SurfaceInvariants {
            g1: Some(3),
            g2: Some(1),
            q: Some(5),
            ..inv()
        });
        let c = rep.get("q_upper").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.rhs, Some(r(4)));
    }

    fn xiao_base() -> SurfaceInvariants {
        SurfaceInvariants {
            g2: Some(0),
            q: Some(0),
            chi: Some(1),
            p_g: Some(0),
            epsilon: Some(0),
            k2: Some(2),
            ..inv()
        }
    }

    #[test]
    fn xiao_fixture_passes() {
        let rep = xiao_validate(&xiao_base(), XiaoCase::CaseII);
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.get("k2_lower_case_ii").unwrap().rhs, Some(r(-4)));
        assert_eq!(rep.get("k2_upper_case_ii").unwrap().rhs, Some(r(2)));
    }

    #[test]
    fn xiao_corollary_fails() {
        let rep = xiao_validate(&SurfaceInvariants { k2: Some(9), ..xiao_base() }, XiaoCase::CaseII);
        assert_eq!(rep.get("xiao_k2_le_8chi").unwrap().status, Status::Fail);
    }

    #[test]
    fn xiao_eps_range_fails() {
        let rep = xiao_validate(&SurfaceInvariants { epsilon: Some(3), ..xiao_base() }, XiaoCase::CaseII);
        let c = rep.get("eps_upper").unwrap();
        assert_eq!(c.status, Status::Fail);
        assert_eq!(c.rhs, Some(r(2)));
    }

    #[test]
    fn xiao_case_i_needs_positive_eps() {
        let rep = xiao_validate(&xiao_base(), XiaoCase::CaseI);
        assert_eq!(rep.get("k2_lower_case_i").unwrap().status, Status::Inapplicable);
        let rep = xiao_validate(
            &SurfaceInvariants { epsilon: Some(2), chi: Some(3), p_g: Some(2), k2: Some(2), ..xiao_base() },
            XiaoCase::CaseI,
        );
        // ε ≤ (χ − g2 + 1)/2 = 2
        assert_eq!(rep.get("eps_half_case_i").unwrap().status, Status::Pass);
    }

    #[test]
    fn xiao_requires_genus_two() {
        let rep = xiao_validate(&SurfaceInvariants { g1: Some(3), ..xiao_base() }, XiaoCase::CaseII);
        assert!(rep.checks.iter().all(|c| c.status == Status::Inapplicable));
    }

    #[test]
    fn scan_fixtures() {
        let rows = xiao_scan_chi(0, 1);
        let eps: Vec<i64> = rows.iter().map(|r| r.eps).collect();
        assert_eq!(eps, vec![0, 2]);
        assert_eq!((rows[0].k2_min, rows[0].k2_max), (-4, 2));
        assert_eq!(rows[0].flags, vec![ScanFlag::EpsZeroWeak]);
        assert_eq!(rows[1].flags, vec![ScanFlag::IrregularityRaised]);

        let rows = xiao_scan_chi(1, 0);
        assert_eq!(rows.iter().map(|r| r.eps).collect::<Vec<_>>(), vec![0]);
    }

    #[test]
    fn general_type_fixtures() {
        let rep = general_type_checks(&SurfaceInvariants { k2: Some(9), e: Some(3), ..inv() }, false);
        let c = rep.get("c1sq_le_3c2").unwrap();
        assert_eq!((c.status, c.note), (Status::Pass, Some("BMY line")));

        let rep = general_type_checks(
            &SurfaceInvariants { k2: Some(2), p_g: Some(3), e: Some(46), ..inv() },
            true,
        );
        let c = rep.get("noether_inequality").unwrap();
        assert_eq!((c.status, c.note), (Status::Pass, Some("Noether line")));

        let rep = general_type_checks(&SurfaceInvariants { k2: Some(-1), e: Some(13), p_g: Some(0), ..inv() }, true);
        assert_eq!(rep.get("c1sq_positive").unwrap().status, Status::Fail);
    }

    #[test]
    fn elliptic_fixtures() {
        assert_eq!(elliptic_c2(0).unwrap(), (0, 0));
        assert_eq!(elliptic_c2(1).unwrap(), (12, 1));
        assert_eq!(elliptic_c2(2).unwrap(), (24, 2));
        assert!(elliptic_c2(-1).is_err());
    }

    #[test]
    fn slope_fixtures() {
        assert_eq!(kodaira_slope(8, 4).unwrap().1, SlopeVerdict::ProductLike);
        let (nu, v) = kodaira_slope(8, 3).unwrap();
        assert_eq!((nu, v), (Rational::new(8.into(), 3.into()), SlopeVerdict::Admissible));
        assert_eq!(kodaira_slope(9, 3).unwrap().1, SlopeVerdict::Inadmissible);
        assert_eq!(kodaira_slope(3, 2).unwrap().1, SlopeVerdict::Inadmissible);
        assert!(kodaira_slope(1, 0).is_err());
    }

    #[test]
    fn hurwitz_fixtures() {
        assert_eq!(hurwitz_bound(2).unwrap(), 84);
        assert_eq!(hurwitz_bound(3).unwrap(), 168);
        assert!(hurwitz_bound(1).is_err());
    }
}
