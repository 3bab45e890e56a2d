//! Measurable subsets of an interval, represented as finite unions of
//! disjoint open intervals.
//!
//! The paper-level objects |E| and |G| (Lebesgue measures of the time
//! and space observation sets) reduce to exact interval arithmetic
//! here, so every measure used downstream is computable without
//! quadrature error.

use crate::error::{Error, Result};

/// Finite union of disjoint intervals (a_i, b_i) inside an ambient
/// interval, kept sorted with `a_i < b_i <= a_{i+1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct FiniteUnionSet {
    intervals: Vec<(f64, f64)>,
    ambient: (f64, f64),
}

impl FiniteUnionSet {
    pub fn new(intervals: Vec<(f64, f64)>, ambient: (f64, f64)) -> Result<Self> {
        let (lo, hi) = ambient;
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::invalid(format!("ambient interval ({lo}, {hi})")));
        }
        for &(a, b) in &intervals {
            if !(a < b) {
                return Err(Error::invalid(format!("interval ({a}, {b}) is empty")));
            }
            if a < lo || b > hi {
                return Err(Error::invalid(format!(
                    "interval ({a}, {b}) outside ambient ({lo}, {hi})"
                )));
            }
        }
        for w in intervals.windows(2) {
            if w[0].1 > w[1].0 {
                return Err(Error::invalid(format!(
                    "intervals ({}, {}) and ({}, {}) overlap or are unsorted",
                    w[0].0, w[0].1, w[1].0, w[1].1
                )));
            }
        }
        Ok(FiniteUnionSet { intervals, ambient })
    }

    /// The whole ambient interval as a one-piece set.
    pub fn full(lo: f64, hi: f64) -> Result<Self> {
        FiniteUnionSet::new(vec![(lo, hi)], (lo, hi))
    }

    pub fn intervals(&self) -> &[(f64, f64)] {
        &self.intervals
    }

    pub fn ambient(&self) -> (f64, f64) {
        self.ambient
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Lebesgue measure: Σ (b_i − a_i).
    pub fn measure(&self) -> f64 {
        self.intervals.iter().map(|&(a, b)| b - a).sum()
    }

    /// Infimum of the set; `None` when empty.
    pub fn inf(&self) -> Option<f64> {
        self.intervals.first().map(|&(a, _)| a)
    }

    /// Supremum of the set; `None` when empty.
    pub fn sup(&self) -> Option<f64> {
        self.intervals.last().map(|&(_, b)| b)
    }

    /// Longest interval component, ties broken by the leftmost.
    pub fn longest_component(&self) -> Option<(f64, f64)> {
        let mut best: Option<(f64, f64)> = None;
        for &(a, b) in &self.intervals {
            match best {
                Some((ba, bb)) if b - a <= bb - ba => {}
                _ => best = Some((a, b)),
            }
        }
        best
    }

    /// Membership up to the open/closed distinction at endpoints
    /// (irrelevant for any measure-based use).
    pub fn contains(&self, x: f64) -> bool {
        self.intervals.iter().any(|&(a, b)| a <= x && x <= b)
    }

    /// S ∩ (a, b) as a new set with the same ambient interval. The
    /// result may be empty.
    pub fn intersect_interval(&self, a: f64, b: f64) -> Result<Self> {
        if !(a < b) {
            return Err(Error::invalid(format!("intersection window ({a}, {b})")));
        }
        let clipped = self
            .intervals
            .iter()
            .filter_map(|&(x, y)| {
                let lo = x.max(a);
                let hi = y.min(b);
                (lo < hi).then_some((lo, hi))
            })
            .collect();
        FiniteUnionSet::new(clipped, self.ambient)
    }

    /// S \ (a, b), the part of the set outside the window.
    pub fn subtract_interval(&self, a: f64, b: f64) -> Result<Self> {
        if !(a < b) {
            return Err(Error::invalid(format!("subtraction window ({a}, {b})")));
        }
        let mut out = Vec::new();
        for &(x, y) in &self.intervals {
            if y <= a || x >= b {
                out.push((x, y));
                continue;
            }
            if x < a {
                out.push((x, a.min(y)));
            }
            if y > b {
                out.push((b.max(x), y));
            }
        }
        FiniteUnionSet::new(out, self.ambient)
    }

    /// Measure of S ∩ (a, b) without materializing the set.
    pub fn measure_within(&self, a: f64, b: f64) -> f64 {
        self.intervals
            .iter()
            .map(|&(x, y)| (y.min(b) - x.max(a)).max(0.0))
            .sum()
    }
}

/// Measure of a set; the |·| of the write-ups.
pub fn set_measure(s: &FiniteUnionSet) -> f64 {
    s.measure()
}

/// S ∩ (a, b) as a standalone operation.
pub fn set_intersect_interval(s: &FiniteUnionSet, a: f64, b: f64) -> Result<FiniteUnionSet> {
    s.intersect_interval(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(intervals: &[(f64, f64)]) -> FiniteUnionSet {
        FiniteUnionSet::new(intervals.to_vec(), (0.0, 1.0)).unwrap()
    }

    #[test]
    fn measure_of_unit_interval() {
        assert_eq!(set(&[(0.0, 1.0)]).measure(), 1.0);
    }

    #[test]
    fn measure_sums_components() {
        assert_eq!(set(&[(0.0, 0.25), (0.5, 0.75)]).measure(), 0.5);
        assert!((set(&[(0.2, 0.4)]).measure() - 0.2).abs() < 1e-15);
    }

    #[test]
    fn intersect_basic() {
        let s = set(&[(0.0, 1.0)]).intersect_interval(0.3, 0.6).unwrap();
        assert_eq!(s.intervals(), &[(0.3, 0.6)]);

        let s = set(&[(0.0, 0.2), (0.8, 1.0)])
            .intersect_interval(0.3, 0.6)
            .unwrap();
        assert!(s.is_empty());
        assert_eq!(s.measure(), 0.0);

        let s = set(&[(0.0, 0.5)]).intersect_interval(0.25, 1.0).unwrap();
        assert_eq!(s.intervals(), &[(0.25, 0.5)]);
    }

    #[test]
    fn rejects_overlapping_or_unsorted() {
        assert!(FiniteUnionSet::new(vec![(0.0, 0.5), (0.4, 0.8)], (0.0, 1.0)).is_err());
        assert!(FiniteUnionSet::new(vec![(0.5, 0.8), (0.0, 0.2)], (0.0, 1.0)).is_err());
        assert!(FiniteUnionSet::new(vec![(0.3, 0.3)], (0.0, 1.0)).is_err());
        assert!(FiniteUnionSet::new(vec![(-0.1, 0.3)], (0.0, 1.0)).is_err());
    }

    #[test]
    fn longest_component_tie_breaks_left() {
        let s = set(&[(0.0, 0.3), (0.6, 0.9)]);
        assert_eq!(s.longest_component(), Some((0.0, 0.3)));
        let s = set(&[(0.0, 0.2), (0.5, 0.9)]);
        assert_eq!(s.longest_component(), Some((0.5, 0.9)));
    }

    #[test]
    fn split_measure_is_exact() {
        // measure(S ∩ (a,b)) + measure(S \ (a,b)) = measure(S) on
        // rational endpoints.
        let cases = [
            (vec![(0.0, 1.0)], 0.25, 0.75),
            (vec![(0.0, 0.125), (0.25, 0.5), (0.75, 1.0)], 0.1875, 0.8125),
            (vec![(0.1, 0.9)], 0.5, 0.95),
        ];
        for (ivs, a, b) in cases {
            let s = FiniteUnionSet::new(ivs, (0.0, 1.0)).unwrap();
            let inside = s.intersect_interval(a, b).unwrap().measure();
            let outside = s.subtract_interval(a, b).unwrap().measure();
            assert!(
                (inside + outside - s.measure()).abs() <= 1e-12,
                "split not exact: {inside} + {outside} vs {}",
                s.measure()
            );
        }
    }
}
