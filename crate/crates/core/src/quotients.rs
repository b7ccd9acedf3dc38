//! Invariants of quotients by `Z/3` and by an involution.
//!
//! For an action of `Z/3` with isolated fixed points, `alpha` counts the fixed
//! points where the two tangent characters agree (image: a `1/3(1,1)` point)
//! and `beta` those where they differ (image: an `A_2` point). The minimal
//! resolution `Y` of the quotient then satisfies
//!
//! ```text
//! K²_X = 3·K²_Y + alpha
//! χ(X) = 3·χ(Y) - alpha/3 - 2·beta/3
//! ```
//!
//! and both right-hand sides must be integral, which is what
//! [`solve_fixed_point_profile`] exploits.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::{Quantity, Rational};
use crate::surface::{make_surface, SingularLocus, SurfaceInvariants};

/// `(alpha, beta)`: isolated `Z/3` fixed points with equal / distinct characters.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FixedPointProfile {
    pub alpha: u64,
    pub beta: u64,
}

impl FixedPointProfile {
    pub const fn new(alpha: u64, beta: u64) -> Self {
        FixedPointProfile { alpha, beta }
    }

    pub const fn total(&self) -> u64 {
        self.alpha + self.beta
    }

    /// Tally a collection of tangent character pairs.
    pub fn from_characters<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = CharacterPair>,
    {
        let mut p = FixedPointProfile::default();
        for c in pairs {
            match classify_fixed_point(c)? {
                FixedPointType::OneThird => p.alpha += 1,
                FixedPointType::A2 => p.beta += 1,
            }
        }
        Ok(p)
    }
}

impl fmt::Display for FixedPointProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.alpha, self.beta)
    }
}

/// Exponents `(c1, c2)` of `ω` on the two tangent eigendirections.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CharacterPair {
    pub c1: u8,
    pub c2: u8,
}

impl CharacterPair {
    /// Residues are reduced mod 3.
    pub fn new(c1: u8, c2: u8) -> Self {
        CharacterPair { c1: c1 % 3, c2: c2 % 3 }
    }
}

/// Image of an isolated fixed point in the quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedPointType {
    /// Distinct characters: a canonical `A_2` point.
    A2,
    /// Equal characters: a `1/3(1,1)` point, resolved by one `(-3)`-curve.
    OneThird,
}

pub fn classify_fixed_point(c: CharacterPair) -> Result<FixedPointType> {
    let (c1, c2) = (c.c1 % 3, c.c2 % 3);
    if c1 == 0 || c2 == 0 {
        return Err(Error::NonIsolatedFixedLocus);
    }
    Ok(if c1 == c2 {
        FixedPointType::OneThird
    } else {
        FixedPointType::A2
    })
}

/// A resolved quotient together with the singularities of the singular quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub surface: SurfaceInvariants,
    pub locus: SingularLocus,
}

/// Minimal resolution `Y` of `X/Z3`.
///
/// `q_y` is supplied by the caller; the irregularity of a quotient is not a
/// numerical consequence of the other invariants.
pub fn cyclic3_quotient(
    x: &SurfaceInvariants,
    profile: FixedPointProfile,
    q_y: i64,
) -> Result<Quotient> {
    let alpha = Quantity::from(profile.alpha);
    let beta = Quantity::from(profile.beta);
    let inconsistent = |formula, value: &Quantity| Error::InconsistentProfile {
        alpha: profile.alpha,
        beta: profile.beta,
        formula,
        value: value.to_string(),
    };

    let (k2, ok) = x.k2.try_sub(&alpha)?.divide_exact(3);
    if !ok {
        return Err(inconsistent("(K2_X - alpha)/3", &k2));
    }
    // χ_Y = (3χ_X + α + 2β) / 9
    let numerator = x.chi.scale(3).try_add(&alpha)?.try_add(&beta.scale(2))?;
    let (chi, ok) = numerator.divide_exact(9);
    if !ok {
        return Err(inconsistent("(3 chi_X + alpha + 2 beta)/9", &chi));
    }
    let q = Quantity::from(q_y);
    let pg = chi.try_sub(&Quantity::from(1i64))?.try_add(&q)?;
    let surface = make_surface(q, pg, k2, format!("{}/Z3", x.label))?;
    debug_assert_eq!(surface.chi, chi);

    Ok(Quotient {
        surface,
        locus: SingularLocus {
            a1: Quantity::zero(),
            a2: beta,
            one_third: alpha,
        },
    })
}

/// Minimal resolution `S` of `X/σ` for an involution `σ` with `fixed`
/// isolated fixed points, each giving an `A_1` point on the quotient.
///
/// `K²_S = K²_X / 2` and `χ(S) = (χ(X) + fixed/4) / 2`.
pub fn involution_quotient(
    x: &SurfaceInvariants,
    fixed: &Quantity,
    q_s: i64,
) -> Result<Quotient> {
    let inconsistent = |formula, value: &Quantity| Error::InconsistentFixedCount {
        fixed: fixed.to_string(),
        formula,
        value: value.to_string(),
    };

    let (k2, ok) = x.k2.divide_exact(2);
    if !ok {
        return Err(inconsistent("K2_X/2", &k2));
    }
    let (quarter, ok) = fixed.divide_exact(4);
    if !ok {
        return Err(inconsistent("fixed/4", &quarter));
    }
    let (chi, ok) = x.chi.try_add(&quarter)?.divide_exact(2);
    if !ok {
        return Err(inconsistent("(chi_X + fixed/4)/2", &chi));
    }
    let q = Quantity::from(q_s);
    let pg = chi.try_sub(&Quantity::from(1i64))?.try_add(&q)?;
    let surface = make_surface(q, pg, k2, format!("{}/i", x.label))?;

    Ok(Quotient {
        surface,
        locus: SingularLocus {
            a1: fixed.clone(),
            ..SingularLocus::empty()
        },
    })
}

/// Extra constraints for [`solve_fixed_point_profile`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ProfileConstraints {
    pub beta_min: u64,
    /// Require `(K²_X - alpha)/3 ≥ 0`.
    pub require_k2_nonneg: bool,
}

/// Every profile with `alpha + beta = total` for which both quotient formulas
/// are integral and the constraints hold, in increasing `alpha`.
pub fn solve_fixed_point_profile(
    k2_x: i64,
    chi_x: i64,
    total: u64,
    constraints: ProfileConstraints,
) -> Vec<FixedPointProfile> {
    let k2_x = Rational::from(k2_x);
    let chi_x = Rational::from(chi_x);
    let three = Rational::from(3);
    let nine = Rational::from(9);

    (0..=total)
        .map(|alpha| FixedPointProfile::new(alpha, total - alpha))
        .filter(|p| p.beta >= constraints.beta_min)
        .filter(|p| {
            let k2_y = (&k2_x - Rational::from(p.alpha)) / &three;
            let chi_y = (&chi_x * &three + Rational::from(p.alpha) + Rational::from(2 * p.beta)) / &nine;
            k2_y.is_integer()
                && chi_y.is_integer()
                && (!constraints.require_k2_nonneg || !k2_y.is_negative())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{LinForm, Param};

    fn k(a: i64, b: i64) -> Quantity {
        LinForm::new(a, b, Param::k()).into()
    }

    fn n(a: i64, b: i64) -> Quantity {
        LinForm::new(a, b, Param::n()).into()
    }

    /// Surface with prescribed `K²` and `χ` (q = 0).
    fn with_k2_chi(k2: Quantity, chi: Quantity) -> SurfaceInvariants {
        let pg = chi.try_sub(&Quantity::from(1i64)).unwrap();
        make_surface(0i64, pg, k2, "X").unwrap()
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_fixed_point(CharacterPair::new(1, 2)).unwrap(), FixedPointType::A2);
        assert_eq!(classify_fixed_point(CharacterPair::new(1, 1)).unwrap(), FixedPointType::OneThird);
        assert_eq!(classify_fixed_point(CharacterPair::new(2, 2)).unwrap(), FixedPointType::OneThird);
        assert_eq!(
            classify_fixed_point(CharacterPair::new(0, 2)),
            Err(Error::NonIsolatedFixedLocus)
        );
    }

    #[test]
    fn profile_from_characters() {
        let pairs = [(1, 1), (1, 2), (2, 1), (2, 2), (1, 2)].map(|(a, b)| CharacterPair::new(a, b));
        assert_eq!(FixedPointProfile::from_characters(pairs).unwrap(), FixedPointProfile::new(2, 3));
    }

    #[test]
    fn quotient_of_v() {
        // V: q = p_g = 2, K² = 4, χ = 1
        let v = make_surface(2i64, 2i64, 4i64, "V").unwrap();
        let z = cyclic3_quotient(&v, FixedPointProfile::new(4, 10), 0).unwrap().surface;
        assert_eq!(z.k2, Quantity::from(0i64));
        assert_eq!(z.chi, Quantity::from(3i64));
        assert_eq!(z.pg, Quantity::from(2i64));
        assert_eq!(z.q, Quantity::from(0i64));
    }

    #[test]
    fn quotient_example_one_symbolic() {
        let x = with_k2_chi(k(72, -32), k(12, -4));
        let y = cyclic3_quotient(&x, FixedPointProfile::new(4, 4), 0).unwrap();
        assert_eq!(y.surface.k2, k(24, -12));
        assert_eq!(y.surface.chi, k(4, 0));
        assert_eq!(y.surface.pg, k(4, -1));
        assert_eq!(y.locus.one_third, Quantity::from(4i64));
        assert_eq!(y.locus.a2, Quantity::from(4i64));
    }

    #[test]
    fn quotient_example_two_symbolic() {
        let x = with_k2_chi(k(96, -32), k(15, -4));
        let y = cyclic3_quotient(&x, FixedPointProfile::new(4, 4), 0).unwrap().surface;
        assert_eq!(y.k2, k(32, -12));
        assert_eq!(y.chi, k(5, 0));
    }

    #[test]
    fn free_action_divides_by_three() {
        let x = with_k2_chi(Quantity::from(9i64), Quantity::from(3i64));
        let y = cyclic3_quotient(&x, FixedPointProfile::default(), 0).unwrap().surface;
        assert_eq!(y.k2, Quantity::from(3i64));
        assert_eq!(y.chi, Quantity::from(1i64));
    }

    #[test]
    fn divisibility_failures_name_the_formula() {
        let x = with_k2_chi(k(72, -32), k(12, -4));
        match cyclic3_quotient(&x, FixedPointProfile::new(5, 3), 0) {
            Err(Error::InconsistentProfile { formula, .. }) => assert_eq!(formula, "(K2_X - alpha)/3"),
            other => panic!("unexpected {other:?}"),
        }
        // α = 1 keeps K² integral but breaks χ: 36k - 12 + 1 + 14 = 36k + 3
        match cyclic3_quotient(&x, FixedPointProfile::new(1, 7), 0) {
            Err(Error::InconsistentProfile { formula, .. }) => {
                assert_eq!(formula, "(3 chi_X + alpha + 2 beta)/9")
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn involution_pair_rows() {
        let x = make_surface(2i64, n(4, -3), n(24, -32), "X").unwrap();
        let s = involution_quotient(&x, &n(16, 0), 0).unwrap();
        assert_eq!(s.surface.k2, n(12, -16));
        assert_eq!(s.surface.chi, n(4, -2));
        assert_eq!(s.surface.pg, n(4, -3));
        assert_eq!(s.locus.a1, n(16, 0));

        let x = make_surface(3i64, n(7, -4), n(48, -48), "X").unwrap();
        let s = involution_quotient(&x, &n(28, 0), 0).unwrap().surface;
        assert_eq!(s.k2, n(24, -24));
        assert_eq!(s.chi, n(7, -3));
        assert_eq!(s.pg, n(7, -4));
    }

    #[test]
    fn etale_involution() {
        let x = with_k2_chi(Quantity::from(16i64), Quantity::from(4i64));
        let s = involution_quotient(&x, &Quantity::zero(), 0).unwrap().surface;
        assert_eq!(s.k2, Quantity::from(8i64));
        assert_eq!(s.chi, Quantity::from(2i64));
    }

    #[test]
    fn involution_rejects_bad_counts() {
        let x = make_surface(2i64, n(4, -3), n(24, -32), "X").unwrap();
        assert!(matches!(
            involution_quotient(&x, &n(15, 0), 0),
            Err(Error::InconsistentFixedCount { .. })
        ));
        let odd = with_k2_chi(Quantity::from(3i64), Quantity::from(1i64));
        assert!(involution_quotient(&odd, &Quantity::zero(), 0).is_err());
    }

    #[test]
    fn solver_examples() {
        let beta_bound = ProfileConstraints { beta_min: 10, require_k2_nonneg: false };
        assert_eq!(solve_fixed_point_profile(4, 1, 14, beta_bound), vec![FixedPointProfile::new(4, 10)]);

        let nonneg = ProfileConstraints { beta_min: 0, require_k2_nonneg: true };
        assert_eq!(solve_fixed_point_profile(4, 1, 14, nonneg), vec![FixedPointProfile::new(4, 10)]);

        // without either bound, α = 13 also survives the divisibility test
        assert_eq!(
            solve_fixed_point_profile(4, 1, 14, ProfileConstraints::default()),
            vec![FixedPointProfile::new(4, 10), FixedPointProfile::new(13, 1)]
        );

        assert_eq!(
            solve_fixed_point_profile(0, 0, 0, ProfileConstraints::default()),
            vec![FixedPointProfile::new(0, 0)]
        );
        assert!(solve_fixed_point_profile(1, 1, 0, ProfileConstraints::default()).is_empty());
    }
}
