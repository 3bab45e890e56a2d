//! Uniform time grids on [0, T].

use crate::error::{Error, Result};

/// Uniform grid t_0 = 0 < t_1 < … < t_n = T.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    t_end: f64,
    n_steps: usize,
}

impl TimeGrid {
    pub fn new(t_end: f64, n_steps: usize) -> Result<Self> {
        if !(t_end > 0.0) || !t_end.is_finite() {
            return Err(Error::invalid(format!("horizon T = {t_end}")));
        }
        if n_steps == 0 {
            return Err(Error::invalid("n_steps must be >= 1"));
        }
        Ok(TimeGrid { t_end, n_steps })
    }

    pub fn t_end(&self) -> f64 {
        self.t_end
    }

    pub fn n_steps(&self) -> usize {
        self.n_steps
    }

    /// Number of nodes, n_steps + 1.
    pub fn n_nodes(&self) -> usize {
        self.n_steps + 1
    }

    pub fn dt(&self) -> f64 {
        self.t_end / self.n_steps as f64
    }

    pub fn node(&self, k: usize) -> f64 {
        debug_assert!(k <= self.n_steps);
        if k == self.n_steps {
            self.t_end
        } else {
            k as f64 * self.dt()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_nodes()).map(|k| self.node(k)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nodes_span_exactly() {
        let g = TimeGrid::new(1.0, 7).unwrap();
        let nodes = g.nodes();
        assert_eq!(nodes.len(), 8);
        assert_eq!(nodes[0], 0.0);
        assert_eq!(nodes[7], 1.0);
        for w in nodes.windows(2) {
            assert!(w[1] > w[0]);
        }
    }

    #[test]
    fn rejects_degenerate() {
        assert!(TimeGrid::new(0.0, 4).is_err());
        assert!(TimeGrid::new(1.0, 0).is_err());
    }
}
