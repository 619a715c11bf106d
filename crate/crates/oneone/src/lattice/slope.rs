//! The slope circle P¹(ℚ) and its counterclockwise intervals.
//!
//! The circle is ordered by increasing real slope, wrapping through ∞ = 1/0
//! back to −∞. All containment tests are exact.

use super::Rational;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::fmt;

/// A point of P¹(ℚ): the slope rise/run with `run ≥ 0`, in lowest terms, and
/// ∞ represented uniquely as 1/0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjectiveSlope {
    rise: BigInt,
    run: BigInt,
}

impl ProjectiveSlope {
    pub fn new(rise: i64, run: i64) -> Self {
        Self::from_bigints(BigInt::from(rise), BigInt::from(run))
    }

    pub fn from_bigints(mut rise: BigInt, mut run: BigInt) -> Self {
        assert!(!(rise.is_zero() && run.is_zero()), "0/0 is not a slope");
        if run.is_negative() {
            rise = -rise;
            run = -run;
        }
        if run.is_zero() {
            return ProjectiveSlope {
                rise: BigInt::one(),
                run: BigInt::zero(),
            };
        }
        let g = rise.gcd(&run);
        ProjectiveSlope {
            rise: rise / &g,
            run: run / g,
        }
    }

    pub fn infinity() -> Self {
        ProjectiveSlope {
            rise: BigInt::one(),
            run: BigInt::zero(),
        }
    }

    pub fn zero() -> Self {
        ProjectiveSlope {
            rise: BigInt::zero(),
            run: BigInt::one(),
        }
    }

    pub fn from_rational(r: &Rational) -> Self {
        Self::from_bigints(r.numer().clone(), r.denom().clone())
    }

    pub fn is_infinity(&self) -> bool {
        self.run.is_zero()
    }

    pub fn rise(&self) -> &BigInt {
        &self.rise
    }

    pub fn run(&self) -> &BigInt {
        &self.run
    }

    /// Finite value as a rational; None for ∞.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_infinity() {
            None
        } else {
            Some(Rational::new(self.rise.clone(), self.run.clone()))
        }
    }

    /// Linear order on the circle cut at ∞: finite slopes by value, ∞ last.
    fn cut_cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinity(), other.is_infinity()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                // rise1/run1 vs rise2/run2 with positive runs
                (&self.rise * &other.run).cmp(&(&other.rise * &self.run))
            }
        }
    }

    /// Parse "p/q" or "inf".
    pub fn parse(s: &str) -> Option<Self> {
        if s == "inf" || s == "1/0" {
            return Some(Self::infinity());
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.parse::<i64>().ok()?, d.parse::<i64>().ok()?),
            None => (s.parse::<i64>().ok()?, 1),
        };
        if den == 0 {
            return num.abs().eq(&1).then(Self::infinity);
        }
        Some(Self::new(num, den))
    }
}

impl fmt::Display for ProjectiveSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.rise, self.run)
    }
}

/// A counterclockwise closed interval on the slope circle, or the complement
/// of a single point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicInterval {
    /// All slopes from `start` counterclockwise to `end`, endpoints included.
    Arc {
        start: ProjectiveSlope,
        end: ProjectiveSlope,
    },
    /// Everything except the given point.
    FullCircleMinus(ProjectiveSlope),
}

impl CyclicInterval {
    pub fn arc(start: ProjectiveSlope, end: ProjectiveSlope) -> Self {
        assert!(start != end, "proper interval needs distinct endpoints");
        CyclicInterval::Arc { start, end }
    }

    pub fn reverse(&self) -> Self {
        match self {
            CyclicInterval::Arc { start, end } => CyclicInterval::Arc {
                start: end.clone(),
                end: start.clone(),
            },
            CyclicInterval::FullCircleMinus(p) => CyclicInterval::FullCircleMinus(p.clone()),
        }
    }

    pub fn contains(&self, s: &ProjectiveSlope) -> bool {
        interval_contains(self, s)
    }
}

impl fmt::Display for CyclicInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CyclicInterval::Arc { start, end } => write!(f, "[{start}, {end}]"),
            CyclicInterval::FullCircleMinus(p) => write!(f, "P1 \\ {{{p}}}"),
        }
    }
}

/// True iff `s` lies on the counterclockwise arc from `start` to `end`,
/// endpoints inclusive. Counterclockwise is the direction of increasing real
/// slope, wrapping through ∞ back to −∞.
pub fn interval_contains(interval: &CyclicInterval, s: &ProjectiveSlope) -> bool {
    match interval {
        CyclicInterval::FullCircleMinus(p) => s != p,
        CyclicInterval::Arc { start, end } => {
            if s == start || s == end {
                return true;
            }
            match start.cut_cmp(end) {
                Ordering::Less => {
                    start.cut_cmp(s) == Ordering::Less && s.cut_cmp(end) == Ordering::Less
                }
                Ordering::Greater => {
                    start.cut_cmp(s) == Ordering::Less || s.cut_cmp(end) == Ordering::Less
                }
                Ordering::Equal => unreachable!("proper interval"),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sl(n: i64, d: i64) -> ProjectiveSlope {
        ProjectiveSlope::new(n, d)
    }

    #[test]
    fn positive_slopes_between_zero_and_infinity() {
        let i = CyclicInterval::arc(sl(0, 1), ProjectiveSlope::infinity());
        assert!(i.contains(&sl(5, 2)));
        assert!(!i.contains(&sl(-5, 2)));
    }

    #[test]
    fn negative_slopes_between_infinity_and_zero() {
        let i = CyclicInterval::arc(ProjectiveSlope::infinity(), sl(0, 1));
        assert!(i.contains(&sl(-7, 2)));
        assert!(!i.contains(&sl(7, 2)));
    }

    #[test]
    fn filling_slope_inside_simple_interval() {
        let i = CyclicInterval::arc(sl(5, 2), sl(3, 1));
        assert!(i.contains(&sl(8, 3)));
        assert!(i.contains(&sl(5, 2)));
        assert!(i.contains(&sl(3, 1)));
        assert!(!i.contains(&sl(2, 1)));
        assert!(!i.contains(&ProjectiveSlope::infinity()));
    }

    #[test]
    fn wrap_through_infinity() {
        // [2, 0] counterclockwise passes through ∞ and the negatives.
        let i = CyclicInterval::arc(sl(2, 1), sl(0, 1));
        assert!(i.contains(&sl(3, 1)));
        assert!(i.contains(&ProjectiveSlope::infinity()));
        assert!(i.contains(&sl(-1, 1)));
        assert!(!i.contains(&sl(1, 1)));
    }

    #[test]
    fn full_circle_minus() {
        let i = CyclicInterval::FullCircleMinus(sl(0, 1));
        assert!(i.contains(&ProjectiveSlope::infinity()));
        assert!(i.contains(&sl(7, 3)));
        assert!(!i.contains(&sl(0, 1)));
    }

    #[test]
    fn reverse_complements_non_endpoints() {
        let i = CyclicInterval::arc(sl(5, 2), sl(3, 1));
        let r = i.reverse();
        for (n, d) in [(8i64, 3i64), (2, 1), (-7, 2), (1, 0), (100, 1), (0, 1)] {
            let s = sl(n, d);
            if s == sl(5, 2) || s == sl(3, 1) {
                continue;
            }
            assert!(i.contains(&s) ^ r.contains(&s), "failed XOR at {s}");
        }
    }

    #[test]
    fn unique_infinity_representation() {
        assert_eq!(ProjectiveSlope::new(-3, 0), ProjectiveSlope::infinity());
        assert_eq!(ProjectiveSlope::new(2, -4), sl(-1, 2));
    }

    #[test]
    fn parse_round_trip() {
        for s in ["5/2", "-7/3", "1/0", "0/1"] {
            let p = ProjectiveSlope::parse(s).unwrap();
            assert_eq!(p.to_string(), s.replace("inf", "1/0"));
        }
        assert_eq!(ProjectiveSlope::parse("inf").unwrap(), ProjectiveSlope::infinity());
        assert_eq!(ProjectiveSlope::parse("3").unwrap(), sl(3, 1));
    }
}
