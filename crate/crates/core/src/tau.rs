//! The J pairing on weighted planar point sets and the tau invariant of
//! diagonal knots.
//!
//! Points and weights are stored doubled so that every quantity is an
//! integer: a marking in cell `(i, j)` sits at `(2i - 1, 2j - 1)` and a
//! weight of one half is stored as `1`.

use num_rational::Rational64;
use thiserror::Error;

use crate::grid::{GridDiagram, GridError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TauError {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("NotDiagonal: the O-markings are not on the antidiagonal")]
    NotDiagonal,
    #[error("NotAKnot: the diagram has {0} components")]
    NotAKnot(usize),
    #[error("NonIntegerResult: tau evaluated to {0}")]
    NonIntegerResult(Rational64),
}

/// A point `(x2 / 2, y2 / 2)` of the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfPoint {
    pub x2: i64,
    pub y2: i64,
}

impl HalfPoint {
    pub fn new(x2: i64, y2: i64) -> Self {
        HalfPoint { x2, y2 }
    }

    /// The integer lattice point `(x, y)`.
    pub fn lattice(x: i64, y: i64) -> Self {
        HalfPoint {
            x2: 2 * x,
            y2: 2 * y,
        }
    }

    /// Center of grid cell `(column, row)`.
    pub fn cell_center(column: usize, row: usize) -> Self {
        HalfPoint {
            x2: 2 * column as i64 - 1,
            y2: 2 * row as i64 - 1,
        }
    }

    /// True when `other` lies strictly to the upper right or strictly to the
    /// lower left of `self`.
    pub fn is_ne_or_sw(&self, other: &HalfPoint) -> bool {
        (other.x2 > self.x2 && other.y2 > self.y2) || (other.x2 < self.x2 && other.y2 < self.y2)
    }
}

/// A formal sum of distinct points with nonzero rational weights.
///
/// Weights are stored doubled (`2` means weight one).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WeightedPointConfig {
    terms: Vec<(HalfPoint, i64)>,
}

impl WeightedPointConfig {
    pub fn new() -> Self {
        Self::default()
    }

    /// Every point with the same doubled weight.
    pub fn uniform(points: impl IntoIterator<Item = HalfPoint>, weight2: i64) -> Self {
        let mut c = Self::new();
        for p in points {
            c.add_term(p, weight2);
        }
        c
    }

    /// Adds `weight2 / 2` copies of `point`, merging with an existing term.
    pub fn add_term(&mut self, point: HalfPoint, weight2: i64) {
        if let Some(pos) = self.terms.iter().position(|(p, _)| *p == point) {
            self.terms[pos].1 += weight2;
            if self.terms[pos].1 == 0 {
                self.terms.remove(pos);
            }
        } else if weight2 != 0 {
            self.terms.push((point, weight2));
        }
    }

    /// The formal sum `self + factor * other`, with `factor` an integer.
    pub fn plus_scaled(&self, other: &WeightedPointConfig, factor: i64) -> Self {
        let mut out = self.clone();
        for &(p, w) in &other.terms {
            out.add_term(p, factor * w);
        }
        out
    }

    pub fn terms(&self) -> &[(HalfPoint, i64)] {
        &self.terms
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Concatenation: the sum of two configs.
    pub fn concat(&self, other: &WeightedPointConfig) -> Self {
        self.plus_scaled(other, 1)
    }
}

/// The symmetric bilinear pairing: for single points, half the indicator
/// that one lies strictly north-east or strictly south-west of the other,
/// extended bilinearly to weighted sums.
pub fn pair_count_j(a: &WeightedPointConfig, b: &WeightedPointConfig) -> Rational64 {
    let mut total: i64 = 0;
    for (pa, wa) in a.terms() {
        for (pb, wb) in b.terms() {
            if pa.is_ne_or_sw(pb) {
                total += wa * wb;
            }
        }
    }
    // doubled weights contribute a factor 4, the pairing itself a factor 2
    Rational64::new(total, 8)
}

/// The generator used by the tau formula: the bottom-left corner `(0, 0)`
/// together with the lattice points midway between consecutive O's of
/// the antidiagonal, each with weight one.
pub fn tau_generator(n: usize) -> Result<WeightedPointConfig, GridError> {
    if n < 2 {
        return Err(GridError::InvalidSize(n));
    }
    let n = n as i64;
    let points = std::iter::once(HalfPoint::lattice(0, 0))
        .chain((1..n).map(|i| HalfPoint::lattice(i, n - i)));
    Ok(WeightedPointConfig::uniform(points, 2))
}

fn marking_centers(g: &GridDiagram) -> (Vec<HalfPoint>, Vec<HalfPoint>) {
    let xs = (1..=g.n())
        .map(|c| HalfPoint::cell_center(c, g.x_row(c)))
        .collect();
    let os = (1..=g.n())
        .map(|c| HalfPoint::cell_center(c, g.o_row(c)))
        .collect();
    (xs, os)
}

/// The value `J(x - (X + O)/2, X - O)` before the `(n - 1)/2` correction.
pub fn tau_pairing(g: &GridDiagram) -> Result<Rational64, TauError> {
    let generator = tau_generator(g.n())?;
    let (xs, os) = marking_centers(g);
    let half_sum = WeightedPointConfig::uniform(xs.iter().chain(&os).copied(), 1);
    let left = generator.plus_scaled(&half_sum, -1);
    let right =
        WeightedPointConfig::uniform(xs, 2).plus_scaled(&WeightedPointConfig::uniform(os, 2), -1);
    Ok(pair_count_j(&left, &right))
}

/// Tau of the knot presented by a diagonal grid diagram.
pub fn tau_diagonal(g: &GridDiagram) -> Result<i64, TauError> {
    if !g.is_diagonal() {
        return Err(TauError::NotDiagonal);
    }
    let components = g.component_count();
    if components != 1 {
        return Err(TauError::NotAKnot(components));
    }
    let value = tau_pairing(g)? - Rational64::new(g.n() as i64 - 1, 2);
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(TauError::NonIntegerResult(value))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{diagonal_from_x, torus_grid, validate};
    use proptest::prelude::*;

    fn single(x2: i64, y2: i64, w2: i64) -> WeightedPointConfig {
        WeightedPointConfig::uniform([HalfPoint::new(x2, y2)], w2)
    }

    #[test]
    fn pairing_examples() {
        assert_eq!(
            pair_count_j(&single(0, 0, 2), &single(1, 1, 2)),
            Rational64::new(1, 2)
        );
        assert_eq!(
            pair_count_j(&single(2, 2, 2), &single(1, 3, 2)),
            Rational64::from_integer(0)
        );
        assert_eq!(
            pair_count_j(&single(0, 0, 4), &single(1, 1, 2)),
            Rational64::from_integer(1)
        );
        // ties on a coordinate never count
        assert_eq!(
            pair_count_j(&single(0, 0, 2), &single(0, 4, 2)),
            Rational64::from_integer(0)
        );
    }

    #[test]
    fn generator_points() {
        let pts = |n| -> Vec<(i64, i64)> {
            tau_generator(n)
                .unwrap()
                .terms()
                .iter()
                .map(|(p, w)| {
                    assert_eq!(*w, 2);
                    (p.x2 / 2, p.y2 / 2)
                })
                .collect()
        };
        assert_eq!(pts(2), vec![(0, 0), (1, 1)]);
        assert_eq!(pts(3), vec![(0, 0), (1, 2), (2, 1)]);
        assert_eq!(pts(5), vec![(0, 0), (1, 4), (2, 3), (3, 2), (4, 1)]);
        assert!(tau_generator(1).is_err());
    }

    #[test]
    fn config_merges_and_drops_zero_weights() {
        let mut c = single(1, 1, 2);
        c.add_term(HalfPoint::new(1, 1), -2);
        assert!(c.is_empty());
    }

    #[test]
    fn tau_examples() {
        let unknot = diagonal_from_x(2, &[1, 2]).unwrap();
        assert_eq!(tau_pairing(&unknot).unwrap(), Rational64::new(1, 2));
        assert_eq!(tau_diagonal(&unknot).unwrap(), 0);
        let m211 = diagonal_from_x(11, &[5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7]).unwrap();
        assert_eq!(tau_diagonal(&m211).unwrap(), 9);
        assert_eq!(tau_diagonal(&torus_grid(2, 3).unwrap()).unwrap(), 1);
    }

    #[test]
    fn tau_errors() {
        let g = validate(3, &[2, 1, 3], &[1, 3, 2]).unwrap();
        assert_eq!(tau_diagonal(&g), Err(TauError::NotDiagonal));
        let link = diagonal_from_x(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(tau_diagonal(&link), Err(TauError::NotAKnot(2)));
    }

    fn config() -> impl Strategy<Value = WeightedPointConfig> {
        prop::collection::vec(((-6i64..6, -6i64..6), -3i64..=3), 0..8).prop_map(|terms| {
            let mut c = WeightedPointConfig::new();
            for ((x, y), w) in terms {
                c.add_term(HalfPoint::new(x, y), w);
            }
            c
        })
    }

    proptest! {
        #[test]
        fn pairing_is_symmetric(a in config(), b in config()) {
            prop_assert_eq!(pair_count_j(&a, &b), pair_count_j(&b, &a));
        }

        #[test]
        fn pairing_is_bilinear(a in config(), b in config(), c in config()) {
            let ab = a.concat(&b);
            prop_assert_eq!(pair_count_j(&ab, &c), pair_count_j(&a, &c) + pair_count_j(&b, &c));
            prop_assert_eq!(pair_count_j(&c, &ab), pair_count_j(&c, &a) + pair_count_j(&c, &b));
        }
    }
}
