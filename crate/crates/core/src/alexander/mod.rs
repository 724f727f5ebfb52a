//! Alexander polynomials of grid diagrams via the minesweeper matrix.
//!
//! The winding numbers of the knot projection around the lattice points
//! `(a, b)`, `0 <= a, b < n`, give an `n x n` matrix of monomials
//! `t^(-w)`. Its determinant equals `±t^k (1 - t)^(n - 1) Δ(t)`.

mod laurent;

use num_bigint::BigInt;
use num_traits::{One, Signed};
use thiserror::Error;

use crate::grid::{GridDiagram, GridError};

pub use laurent::LaurentPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlexanderError {
    #[error("NotAKnot: the diagram has {0} components")]
    NotAKnot(usize),
    #[error("ZeroDeterminant: the minesweeper determinant vanished")]
    ZeroDeterminant,
    #[error("NonDivisible: the determinant is not divisible by (1 - t)^{0}")]
    NonDivisible(usize),
    #[error("BadNormalization: quotient {0} has |Δ(1)| != 1")]
    BadNormalization(LaurentPolynomial),
}

impl From<GridError> for AlexanderError {
    fn from(e: GridError) -> Self {
        match e {
            GridError::NotAKnot { components } => AlexanderError::NotAKnot(components),
            other => unreachable!("grid error {other} cannot arise here"),
        }
    }
}

/// Winding numbers of the projected knot around the lattice points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindingGrid {
    n: usize,
    /// `w[a][b]` for lattice point `(a, b)`.
    w: Vec<Vec<i64>>,
}

impl WindingGrid {
    /// Builds a grid from raw values, `w[a][b]`.
    pub fn from_values(w: Vec<Vec<i64>>) -> Self {
        let n = w.len();
        assert!(
            w.iter().all(|col| col.len() == n),
            "winding grid must be square"
        );
        WindingGrid { n, w }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, a: usize, b: usize) -> i64 {
        self.w[a][b]
    }

    pub fn max_abs(&self) -> i64 {
        self.w.iter().flatten().map(|v| v.abs()).max().unwrap_or(0)
    }
}

/// Winding number at `(a, b)`: vertical strands (X to O) whose column
/// center lies left of `a` and whose span covers height `b`, counted `+1`
/// when running downward and `-1` when running upward.
pub fn winding_numbers(g: &GridDiagram) -> Result<WindingGrid, AlexanderError> {
    g.require_knot()?;
    let n = g.n();
    let mut w = vec![vec![0i64; n]; n];
    for a in 1..n {
        w[a] = w[a - 1].clone();
        // column a has center a - 1/2 < a
        let (x, o) = (g.x_row(a), g.o_row(a));
        let dir = if o < x { 1 } else { -1 };
        for v in &mut w[a][x.min(o)..x.max(o)] {
            *v += dir;
        }
    }
    Ok(WindingGrid { n, w })
}

/// Determinant of a square matrix over the Laurent polynomials by
/// fraction-free (Bareiss) elimination.
pub(crate) fn bareiss_det(mut m: Vec<Vec<LaurentPolynomial>>) -> LaurentPolynomial {
    let n = m.len();
    if n == 0 {
        return LaurentPolynomial::one();
    }
    let mut negate = false;
    let mut prev = LaurentPolynomial::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return LaurentPolynomial::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss quotients are exact");
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

/// Determinant of the minesweeper matrix `M[b][a] = t^(-w[a][b])`.
///
/// Each row is first multiplied by the power of `t` that clears its
/// negative exponents; the factor is removed again from the result.
pub fn minesweeper_det(wg: &WindingGrid) -> LaurentPolynomial {
    let n = wg.n();
    let mut total_shift = 0;
    let rows: Vec<Vec<LaurentPolynomial>> = (0..n)
        .map(|b| {
            let shift = (0..n).map(|a| wg.get(a, b)).max().unwrap_or(0);
            total_shift += shift;
            (0..n)
                .map(|a| LaurentPolynomial::t_pow(shift - wg.get(a, b)))
                .collect()
        })
        .collect();
    bareiss_det(rows).shift(-total_shift)
}

/// `(1 - t)^k`.
pub fn one_minus_t_pow(k: usize) -> LaurentPolynomial {
    LaurentPolynomial::from_coeffs(0, &[1, -1]).pow(k as u32)
}

/// The Alexander polynomial in canonical form: lowest exponent 0 and
/// value `+1` at `t = 1`.
pub fn alexander_polynomial(g: &GridDiagram) -> Result<LaurentPolynomial, AlexanderError> {
    let det = minesweeper_det(&winding_numbers(g)?);
    if det.is_zero() {
        return Err(AlexanderError::ZeroDeterminant);
    }
    let quotient = det
        .div_exact(&one_minus_t_pow(g.n() - 1))
        .ok_or(AlexanderError::NonDivisible(g.n() - 1))?;
    let canonical = quotient.canonicalize();
    if !canonical.eval_at_one().is_one() {
        return Err(AlexanderError::BadNormalization(canonical));
    }
    Ok(canonical)
}

/// Product of canonical polynomials, canonicalized again. The Alexander
/// polynomial of a connected sum is the product of those of its summands.
pub fn poly_product(ps: &[LaurentPolynomial]) -> LaurentPolynomial {
    ps.iter()
        .fold(LaurentPolynomial::one(), |acc, p| &acc * p)
        .canonicalize()
}

/// `|Δ(-1)|`, the determinant of the knot.
pub fn knot_determinant(delta: &LaurentPolynomial) -> BigInt {
    delta.eval_at_minus_one().abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::{diagonal_from_x, torus_grid, validate};

    fn p(c: &[i64]) -> LaurentPolynomial {
        LaurentPolynomial::from_coeffs(0, c)
    }

    fn unknot() -> GridDiagram {
        validate(2, &[1, 2], &[2, 1]).unwrap()
    }

    /// Leibniz expansion over all permutations, for small matrices.
    fn leibniz_det(m: &[Vec<LaurentPolynomial>]) -> LaurentPolynomial {
        fn expand(
            m: &[Vec<LaurentPolynomial>],
            perm: &mut Vec<usize>,
            total: &mut LaurentPolynomial,
        ) {
            let n = m.len();
            if perm.len() == n {
                let inversions = (0..n)
                    .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                    .filter(|&(i, j)| perm[i] > perm[j])
                    .count();
                let term = (0..n).fold(LaurentPolynomial::one(), |acc, r| &acc * &m[r][perm[r]]);
                *total = if inversions % 2 == 0 {
                    &*total + &term
                } else {
                    &*total - &term
                };
                return;
            }
            for c in 0..n {
                if !perm.contains(&c) {
                    perm.push(c);
                    expand(m, perm, total);
                    perm.pop();
                }
            }
        }
        let mut total = LaurentPolynomial::zero();
        expand(m, &mut Vec::new(), &mut total);
        total
    }

    fn raw_matrix(wg: &WindingGrid) -> Vec<Vec<LaurentPolynomial>> {
        (0..wg.n())
            .map(|b| {
                (0..wg.n())
                    .map(|a| LaurentPolynomial::t_pow(-wg.get(a, b)))
                    .collect()
            })
            .collect()
    }

    #[test]
    fn unknot_winding_numbers() {
        let wg = winding_numbers(&unknot()).unwrap();
        assert_eq!(wg.get(1, 1), -1);
        assert_eq!(wg.get(0, 0), 0);
        assert_eq!(wg.get(0, 1), 0);
        assert_eq!(wg.get(1, 0), 0);
    }

    #[test]
    fn trefoil_winding_numbers() {
        let wg = winding_numbers(&torus_grid(2, 3).unwrap()).unwrap();
        assert_eq!(wg.max_abs(), 2);
        for k in 0..5 {
            assert_eq!(wg.get(0, k), 0);
            assert_eq!(wg.get(k, 0), 0);
        }
    }

    #[test]
    fn unknot_determinant() {
        let det = minesweeper_det(&winding_numbers(&unknot()).unwrap());
        assert_eq!(det, p(&[-1, 1]));
        assert_eq!(
            alexander_polynomial(&unknot()).unwrap(),
            LaurentPolynomial::one()
        );
    }

    #[test]
    fn zero_winding_grid_is_singular() {
        let wg = WindingGrid::from_values(vec![vec![0; 3]; 3]);
        assert!(minesweeper_det(&wg).is_zero());
    }

    #[test]
    fn trefoil_polynomial() {
        let t = torus_grid(2, 3).unwrap();
        let det = minesweeper_det(&winding_numbers(&t).unwrap());
        assert!(det.div_exact(&one_minus_t_pow(4)).is_some());
        assert_eq!(alexander_polynomial(&t).unwrap(), p(&[1, -1, 1]));
    }

    #[test]
    fn m211_polynomial() {
        let g = diagonal_from_x(11, &[5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7]).unwrap();
        let expected = p(&[
            1, -1, 0, 0, 1, -1, 1, -1, 0, 1, 0, -1, 1, -1, 1, 0, 0, -1, 1,
        ]);
        assert_eq!(alexander_polynomial(&g).unwrap(), expected);
    }

    #[test]
    fn not_a_knot() {
        let link = diagonal_from_x(4, &[1, 2, 3, 4]).unwrap();
        assert_eq!(winding_numbers(&link), Err(AlexanderError::NotAKnot(2)));
        assert_eq!(
            alexander_polynomial(&link),
            Err(AlexanderError::NotAKnot(2))
        );
    }

    #[test]
    fn products() {
        let tref = p(&[1, -1, 1]);
        assert_eq!(
            poly_product(&[tref.clone(), tref.clone()]),
            p(&[1, -2, 3, -2, 1])
        );
        assert_eq!(
            poly_product(&[tref.clone(), LaurentPolynomial::one()]),
            tref
        );
        let t34 = alexander_polynomial(&torus_grid(3, 4).unwrap()).unwrap();
        let prod = poly_product(&[tref, t34]);
        assert_eq!(prod.max_exp(), Some(8));
        assert!(prod.is_canonical());
    }

    #[test]
    fn bareiss_matches_leibniz_small_grids() {
        // all diagonal knot diagrams up to n = 5, plus a few non-diagonal ones
        let mut diagrams = Vec::new();
        for n in 2..=5usize {
            crate::enumerator::enumerate_diagonal(n, |x| {
                diagrams.push(diagonal_from_x(n, x).unwrap())
            })
            .unwrap();
        }
        diagrams.push(validate(3, &[2, 1, 3], &[1, 3, 2]).unwrap());
        diagrams.push(validate(4, &[2, 4, 1, 3], &[4, 1, 3, 2]).unwrap());
        for g in diagrams {
            let Ok(wg) = winding_numbers(&g) else {
                continue;
            };
            let fast = minesweeper_det(&wg);
            let slow = leibniz_det(&raw_matrix(&wg));
            assert_eq!(fast, slow, "{g:?}");
        }
    }
}
