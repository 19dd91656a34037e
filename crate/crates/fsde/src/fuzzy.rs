//! Triangular fuzzy numbers, alpha-cuts, and two-corner interval arithmetic.
//!
//! A triangular fuzzy number `(left, peak, right)` has the piecewise linear
//! membership function
//!
//! ```text
//!            0                          x <= left
//!   mu(x) =  (x - left) / (peak - left)   left <= x <= peak
//!            (right - x) / (right - peak) peak <= x <= right
//!            0                          x >= right
//! ```
//!
//! Its alpha-cut at level `alpha` in [0, 1] is the closed interval
//!
//! ```text
//!   [left + (peak - left) * alpha,  right - (right - peak) * alpha]
//! ```
//!
//! which nests as alpha grows and collapses to the peak at alpha = 1.
//!
//! Cut intervals combine through a limit construction: every point of an
//! interval `[lo, hi]` is written as `hi - (hi - lo) / t` with `t` in
//! `[1, inf)`, and a binary operation is evaluated on the two limiting
//! parameter values only. Addition and multiplication therefore pair
//! like endpoints (`lo op lo`, `hi op hi`), subtraction and division pair
//! opposite endpoints (`lo op hi`, `hi op lo`), and the result is the min
//! and max of that corner pair. For sign-mixed multiplication this bound
//! pair is deliberately narrower than the classical four-corner product
//! hull: `[-1, 2] * [3, 4]` yields `[-3, 8]`, not `[-4, 8]`.

use serde::Serialize;

use crate::error::{Error, Result};

/// Triangular fuzzy number `(left, peak, right)` with `left <= peak <= right`.
///
/// A crisp number is the degenerate case `left == peak == right`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TriangularFuzzyNumber {
    left: f64,
    peak: f64,
    right: f64,
}

impl TriangularFuzzyNumber {
    /// Builds a triangular fuzzy number, rejecting unordered or non-finite
    /// parameters.
    pub fn new(left: f64, peak: f64, right: f64) -> Result<Self> {
        let finite = left.is_finite() && peak.is_finite() && right.is_finite();
        if !finite || !(left <= peak && peak <= right) {
            return Err(Error::TfnOrdering { left, peak, right });
        }
        Ok(Self { left, peak, right })
    }

    /// Degenerate fuzzy number representing the crisp value `v`.
    pub fn crisp(v: f64) -> Result<Self> {
        Self::new(v, v, v)
    }

    pub fn left(&self) -> f64 {
        self.left
    }

    pub fn peak(&self) -> f64 {
        self.peak
    }

    pub fn right(&self) -> f64 {
        self.right
    }

    /// True when the support has zero width.
    pub fn is_crisp(&self) -> bool {
        self.left == self.right
    }

    /// Closed interval of all values with membership at least `alpha`.
    ///
    /// At alpha = 0 this is the full support `[left, right]`; at alpha = 1 it
    /// is the peak. Both boundary cuts are returned exactly rather than
    /// through the interpolation formula, which can land an ulp off.
    pub fn alpha_cut(&self, alpha: f64) -> Result<AlphaInterval> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        let (lo, hi) = if alpha == 1.0 {
            (self.peak, self.peak)
        } else {
            (
                self.left + (self.peak - self.left) * alpha,
                self.right - (self.right - self.peak) * alpha,
            )
        };
        // Rounding can cross the two ends by an ulp when alpha is close to 1.
        let (lo, hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
        Ok(AlphaInterval { lo, hi, alpha })
    }

    /// Membership grade of `x`, piecewise linear on the support and 1 at the
    /// peak (also for degenerate sides, where the linear branch is vertical).
    pub fn membership(&self, x: f64) -> f64 {
        if x == self.peak {
            return 1.0;
        }
        if x <= self.left || x >= self.right {
            return 0.0;
        }
        if x < self.peak {
            (x - self.left) / (self.peak - self.left)
        } else {
            (self.right - x) / (self.right - self.peak)
        }
    }
}

/// One alpha-cut interval `[lo, hi]` tagged with the level it was cut at.
///
/// The level tag travels through arithmetic so that cuts from different
/// levels cannot be combined by accident.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AlphaInterval {
    lo: f64,
    hi: f64,
    alpha: f64,
}

impl AlphaInterval {
    /// Builds an interval at level `alpha`, rejecting `lo > hi`, non-finite
    /// bounds and levels outside [0, 1].
    pub fn new(lo: f64, hi: f64, alpha: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
            return Err(Error::IntervalBounds { lo, hi });
        }
        Ok(Self { lo, hi, alpha })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Point reached by the limit parameterisation `hi - (hi - lo) / t`.
    ///
    /// `t = 1` gives `lo`, `t -> inf` gives `hi` (`t = f64::INFINITY` is
    /// accepted and returns `hi` exactly). Values of `t` below 1 are
    /// rejected.
    pub fn limit_point(&self, t: f64) -> Result<f64> {
        if !(t >= 1.0) {
            return Err(Error::LimitParameterOutOfRange(t));
        }
        Ok(self.hi - (self.hi - self.lo) / t)
    }

    fn same_alpha(&self, other: &Self) -> Result<f64> {
        if self.alpha == other.alpha {
            Ok(self.alpha)
        } else {
            Err(Error::AlphaMismatch(self.alpha, other.alpha))
        }
    }

    fn from_corners(a: f64, b: f64, alpha: f64) -> Self {
        Self {
            lo: a.min(b),
            hi: a.max(b),
            alpha,
        }
    }

    /// Sum of two cuts at the same level: corners `lo + lo` and `hi + hi`.
    pub fn add(&self, other: &Self) -> Result<Self> {
        let alpha = self.same_alpha(other)?;
        Ok(Self::from_corners(
            self.lo + other.lo,
            self.hi + other.hi,
            alpha,
        ))
    }

    /// Difference of two cuts: corners `lo - hi` and `hi - lo`.
    pub fn sub(&self, other: &Self) -> Result<Self> {
        let alpha = self.same_alpha(other)?;
        Ok(Self::from_corners(
            self.lo - other.hi,
            self.hi - other.lo,
            alpha,
        ))
    }

    /// Product of two cuts from the like-endpoint corner pair only:
    /// `lo * lo` and `hi * hi`. Narrower than the classical four-corner
    /// hull when signs are mixed.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        let alpha = self.same_alpha(other)?;
        Ok(Self::from_corners(
            self.lo * other.lo,
            self.hi * other.hi,
            alpha,
        ))
    }

    /// Quotient of two cuts: corners `lo / hi` and `hi / lo`. The divisor
    /// must not contain zero.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let alpha = self.same_alpha(other)?;
        if other.lo <= 0.0 && 0.0 <= other.hi {
            return Err(Error::DivisorContainsZero {
                lo: other.lo,
                hi: other.hi,
            });
        }
        Ok(Self::from_corners(
            self.lo / other.hi,
            self.hi / other.lo,
            alpha,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tfn(l: f64, m: f64, r: f64) -> TriangularFuzzyNumber {
        TriangularFuzzyNumber::new(l, m, r).unwrap()
    }

    fn cut(lo: f64, hi: f64) -> AlphaInterval {
        AlphaInterval::new(lo, hi, 0.5).unwrap()
    }

    #[test]
    fn rejects_unordered_parameters() {
        assert!(TriangularFuzzyNumber::new(12.0, 10.0, 8.0).is_err());
        assert!(TriangularFuzzyNumber::new(0.0, 2.0, 1.0).is_err());
        assert!(TriangularFuzzyNumber::new(f64::NAN, 0.0, 1.0).is_err());
        assert!(TriangularFuzzyNumber::new(0.0, 1.0, f64::INFINITY).is_err());
    }

    #[test]
    fn crisp_number_is_degenerate() {
        let c = TriangularFuzzyNumber::crisp(0.75).unwrap();
        assert!(c.is_crisp());
        let cut = c.alpha_cut(0.3).unwrap();
        assert_eq!(cut.lo(), 0.75);
        assert_eq!(cut.hi(), 0.75);
    }

    #[test]
    fn alpha_cut_matches_hand_values() {
        let f = tfn(8.0, 10.0, 12.0);
        let c0 = f.alpha_cut(0.0).unwrap();
        assert_eq!((c0.lo(), c0.hi()), (8.0, 12.0));
        let c1 = f.alpha_cut(1.0).unwrap();
        assert_eq!((c1.lo(), c1.hi()), (10.0, 10.0));
        let ch = f.alpha_cut(0.5).unwrap();
        assert_eq!((ch.lo(), ch.hi()), (9.0, 11.0));
    }

    #[test]
    fn alpha_cut_rejects_levels_outside_unit_interval() {
        let f = tfn(0.0, 1.0, 2.0);
        assert!(f.alpha_cut(-0.1).is_err());
        assert!(f.alpha_cut(1.1).is_err());
        assert!(f.alpha_cut(f64::NAN).is_err());
    }

    #[test]
    fn membership_has_four_branches() {
        let f = tfn(0.65, 0.75, 0.85);
        assert_eq!(f.membership(0.60), 0.0);
        assert_eq!(f.membership(0.65), 0.0);
        assert!((f.membership(0.70) - 0.5).abs() < 1e-12);
        assert_eq!(f.membership(0.75), 1.0);
        assert!((f.membership(0.80) - 0.5).abs() < 1e-12);
        assert_eq!(f.membership(0.85), 0.0);
        assert_eq!(f.membership(0.90), 0.0);
    }

    #[test]
    fn membership_of_degenerate_number_is_an_indicator() {
        let c = TriangularFuzzyNumber::crisp(2.0).unwrap();
        assert_eq!(c.membership(2.0), 1.0);
        assert_eq!(c.membership(2.0 + 1e-12), 0.0);
        assert_eq!(c.membership(2.0 - 1e-12), 0.0);
        // one-sided degenerate supports
        let half = tfn(1.0, 1.0, 3.0);
        assert_eq!(half.membership(1.0), 1.0);
        assert_eq!(half.membership(0.999), 0.0);
        assert!((half.membership(2.0) - 0.5).abs() < 1e-12);
    }

    #[test]
    fn add_pairs_like_endpoints() {
        let z = cut(1.0, 2.0).add(&cut(3.0, 5.0)).unwrap();
        assert_eq!((z.lo(), z.hi()), (4.0, 7.0));
    }

    #[test]
    fn sub_pairs_opposite_endpoints() {
        let z = cut(1.0, 2.0).sub(&cut(3.0, 5.0)).unwrap();
        assert_eq!((z.lo(), z.hi()), (-4.0, -1.0));
    }

    #[test]
    fn mul_uses_like_endpoint_corners_only() {
        let z = cut(1.0, 2.0).mul(&cut(3.0, 4.0)).unwrap();
        assert_eq!((z.lo(), z.hi()), (3.0, 8.0));
        // sign-mixed case: narrower than the classical hull [-4, 8]
        let z = cut(-1.0, 2.0).mul(&cut(3.0, 4.0)).unwrap();
        assert_eq!((z.lo(), z.hi()), (-3.0, 8.0));
    }

    #[test]
    fn div_pairs_opposite_endpoints() {
        let z = cut(1.0, 2.0).div(&cut(4.0, 8.0)).unwrap();
        assert_eq!((z.lo(), z.hi()), (0.125, 0.5));
    }

    #[test]
    fn div_rejects_divisor_straddling_zero() {
        assert!(cut(1.0, 2.0).div(&cut(-1.0, 1.0)).is_err());
        assert!(cut(1.0, 2.0).div(&cut(0.0, 1.0)).is_err());
        assert!(cut(1.0, 2.0).div(&cut(-1.0, 0.0)).is_err());
    }

    #[test]
    fn mismatched_levels_are_rejected() {
        let a = AlphaInterval::new(0.0, 1.0, 0.2).unwrap();
        let b = AlphaInterval::new(0.0, 1.0, 0.3).unwrap();
        assert!(matches!(a.add(&b), Err(Error::AlphaMismatch(_, _))));
        assert!(a.sub(&b).is_err());
        assert!(a.mul(&b).is_err());
        assert!(a.div(&b).is_err());
    }

    #[test]
    fn limit_point_sweeps_from_lo_to_hi() {
        let c = AlphaInterval::new(0.65, 0.85, 0.0).unwrap();
        assert_eq!(c.limit_point(1.0).unwrap(), 0.65);
        assert_eq!(c.limit_point(f64::INFINITY).unwrap(), 0.85);
        let c = AlphaInterval::new(9.0, 11.0, 0.5).unwrap();
        assert_eq!(c.limit_point(2.0).unwrap(), 10.0);
        assert!(c.limit_point(0.5).is_err());
        assert!(c.limit_point(f64::NAN).is_err());
    }

    #[test]
    fn interval_constructor_rejects_bad_bounds() {
        assert!(AlphaInterval::new(2.0, 1.0, 0.5).is_err());
        assert!(AlphaInterval::new(0.0, 1.0, 1.5).is_err());
        assert!(AlphaInterval::new(f64::NAN, 1.0, 0.5).is_err());
    }
}
