use num::Zero;

use crate::error::GeomError;
use crate::rational::{from_int, Rational};

/// Closed interval [lo, hi] with rational endpoints. Degenerate intervals
/// (lo = hi) are allowed and follow the same closed-interval rules.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self, GeomError> {
        if lo > hi {
            return Err(GeomError::ReversedInterval {
                lo: lo.to_string(),
                hi: hi.to_string(),
            });
        }
        Ok(Interval { lo, hi })
    }

    pub fn point(x: Rational) -> Self {
        Interval { lo: x.clone(), hi: x }
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn is_point(&self) -> bool {
        self.lo == self.hi
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / from_int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.lo <= *x && *x <= self.hi
    }

    /// Disjointness of the closed intervals; a shared endpoint counts as
    /// intersecting.
    pub fn disjoint(&self, other: &Interval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    pub fn intersect(&self, other: &Interval) -> Option<Interval> {
        let lo = self.lo.clone().max(other.lo.clone());
        let hi = self.hi.clone().min(other.hi.clone());
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// The unique shared point when the closed intervals meet in exactly one.
    pub fn touch_point(&self, other: &Interval) -> Option<Rational> {
        self.intersect(other)
            .filter(Interval::is_point)
            .map(|i| i.lo)
    }

    /// Distance between the closed intervals; zero when they meet.
    pub fn gap(&self, other: &Interval) -> Rational {
        if self.hi < other.lo {
            &other.lo - &self.hi
        } else if other.hi < self.lo {
            &self.lo - &other.hi
        } else {
            Rational::zero()
        }
    }

    /// Cells of this interval after cutting at every point of `cuts` lying
    /// strictly inside it. `cuts` must be sorted ascending.
    pub fn split_at(&self, cuts: &[Rational]) -> Vec<Interval> {
        if self.is_point() {
            return vec![self.clone()];
        }
        let mut bounds = vec![self.lo.clone()];
        for c in cuts {
            if *c > self.lo && *c < self.hi {
                bounds.push(c.clone());
            }
        }
        bounds.push(self.hi.clone());
        bounds
            .windows(2)
            .map(|w| Interval {
                lo: w[0].clone(),
                hi: w[1].clone(),
            })
            .collect()
    }

    /// The two halves split at the midpoint; a point interval is returned
    /// unchanged.
    pub fn halves(&self) -> Vec<Interval> {
        if self.is_point() {
            return vec![self.clone()];
        }
        let m = self.midpoint();
        vec![
            Interval { lo: self.lo.clone(), hi: m.clone() },
            Interval { lo: m, hi: self.hi.clone() },
        ]
    }
}
