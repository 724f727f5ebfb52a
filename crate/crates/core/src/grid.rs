//! Grid diagrams and the elementary grid moves.
//!
//! Columns are numbered `1..=n` left to right and rows `1..=n` bottom to top.
//! `sigma_x[i - 1]` is the row of the X-marking in column `i`, likewise for
//! `sigma_o`. Vertical strands run from X to O, horizontal strands from O to
//! X, and vertical strands always pass over horizontal ones.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("InvalidSize: grid size {0} is below the minimum of 2")]
    InvalidSize(usize),
    #[error("LengthMismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("NotAPermutation: {which} permutation is not a permutation of 1..={n}")]
    NotAPermutation { which: Marking, n: usize },
    #[error("MarkingCollision: column {column} holds both markings at row {row}")]
    MarkingCollision { column: usize, row: usize },
    #[error("InvalidParams: torus parameters must be at least 1, got ({p}, {q})")]
    InvalidParams { p: usize, q: usize },
    #[error("NotCoprime: gcd({p}, {q}) > 1 describes a link, not a knot")]
    NotCoprime { p: usize, q: usize },
    #[error("IllegalMove: {0}")]
    IllegalMove(String),
    #[error("IndexOutOfRange: index {index} outside 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("NotAKnot: the diagram has {components} components")]
    NotAKnot { components: usize },
}

/// The two kinds of grid marking.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Marking {
    X,
    O,
}

impl Marking {
    pub fn other(self) -> Marking {
        match self {
            Marking::X => Marking::O,
            Marking::O => Marking::X,
        }
    }
}

impl fmt::Display for Marking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Marking::X => write!(f, "X"),
            Marking::O => write!(f, "O"),
        }
    }
}

/// A grid diagram of size `n`.
///
/// Ordering compares `n` first, then `sigma_x`, then `sigma_o`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GridDiagram {
    n: usize,
    sigma_x: Vec<usize>,
    sigma_o: Vec<usize>,
}

/// A point where a vertical strand passes over a horizontal one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub column: usize,
    pub row: usize,
    /// `+1` for a right-handed crossing, `-1` otherwise.
    pub sign: i8,
}

/// Lower-left cell `(column, row)` of a 2x2 block of cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Block {
    pub column: usize,
    pub row: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strand {
    Over,
    Under,
}

/// One encounter of a crossing while walking along the knot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussEntry {
    /// Crossings are numbered from 1 in order of first encounter.
    pub id: usize,
    pub strand: Strand,
    pub sign: i8,
}

fn is_permutation(n: usize, values: &[usize]) -> bool {
    let mut seen = vec![false; n + 1];
    for &v in values {
        if v == 0 || v > n || seen[v] {
            return false;
        }
        seen[v] = true;
    }
    true
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        inv[v - 1] = i + 1;
    }
    inv
}

fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// Checks the grid invariants and builds the diagram.
pub fn validate(n: usize, sigma_x: &[usize], sigma_o: &[usize]) -> Result<GridDiagram, GridError> {
    if n < 2 {
        return Err(GridError::InvalidSize(n));
    }
    for len in [sigma_x.len(), sigma_o.len()] {
        if len != n {
            return Err(GridError::LengthMismatch {
                expected: n,
                found: len,
            });
        }
    }
    if !is_permutation(n, sigma_x) {
        return Err(GridError::NotAPermutation {
            which: Marking::X,
            n,
        });
    }
    if !is_permutation(n, sigma_o) {
        return Err(GridError::NotAPermutation {
            which: Marking::O,
            n,
        });
    }
    if let Some(i) = (0..n).find(|&i| sigma_x[i] == sigma_o[i]) {
        return Err(GridError::MarkingCollision {
            column: i + 1,
            row: sigma_x[i],
        });
    }
    Ok(GridDiagram {
        n,
        sigma_x: sigma_x.to_vec(),
        sigma_o: sigma_o.to_vec(),
    })
}

/// The O-permutation of a diagonal diagram: O's on the top-left to
/// bottom-right diagonal.
pub fn antidiagonal(n: usize) -> Vec<usize> {
    (1..=n).map(|i| n + 1 - i).collect()
}

/// Builds the diagonal grid diagram with the given X-permutation.
pub fn diagonal_from_x(n: usize, sigma_x: &[usize]) -> Result<GridDiagram, GridError> {
    validate(n, sigma_x, &antidiagonal(n))
}

/// The standard diagonal presentation of the positive torus knot `T(p, q)`
/// on a grid of size `p + q`: `p` X's on the diagonal above the O's and `q`
/// below.
pub fn torus_grid(p: usize, q: usize) -> Result<GridDiagram, GridError> {
    if p < 1 || q < 1 {
        return Err(GridError::InvalidParams { p, q });
    }
    if gcd(p, q) != 1 {
        return Err(GridError::NotCoprime { p, q });
    }
    let n = p + q;
    let sigma_x: Vec<usize> = (1..=n).map(|i| (n - i + q) % n + 1).collect();
    diagonal_from_x(n, &sigma_x)
}

impl GridDiagram {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn sigma_x(&self) -> &[usize] {
        &self.sigma_x
    }

    pub fn sigma_o(&self) -> &[usize] {
        &self.sigma_o
    }

    /// Row of the X in `column` (1-based).
    pub fn x_row(&self, column: usize) -> usize {
        self.sigma_x[column - 1]
    }

    /// Row of the O in `column` (1-based).
    pub fn o_row(&self, column: usize) -> usize {
        self.sigma_o[column - 1]
    }

    pub fn marking_at(&self, column: usize, row: usize) -> Option<Marking> {
        if self.x_row(column) == row {
            Some(Marking::X)
        } else if self.o_row(column) == row {
            Some(Marking::O)
        } else {
            None
        }
    }

    /// True when every O lies on the top-left to bottom-right diagonal.
    pub fn is_diagonal(&self) -> bool {
        self.sigma_o
            .iter()
            .enumerate()
            .all(|(i, &r)| r == self.n - i)
    }

    /// The permutation followed by the knot from column to column:
    /// column `i` connects through its O row to column `sigma_o^-1(sigma_x(i))`.
    fn column_successor(&self) -> Vec<usize> {
        let o_inv = inverse(&self.sigma_o);
        self.sigma_x.iter().map(|&r| o_inv[r - 1]).collect()
    }

    /// Number of link components of the diagram.
    pub fn component_count(&self) -> usize {
        let next = self.column_successor();
        let mut seen = vec![false; self.n];
        let mut cycles = 0;
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut c = start;
            while !seen[c] {
                seen[c] = true;
                c = next[c] - 1;
            }
        }
        cycles
    }

    pub fn is_single_component(&self) -> bool {
        self.component_count() == 1
    }

    pub(crate) fn require_knot(&self) -> Result<(), GridError> {
        match self.component_count() {
            1 => Ok(()),
            components => Err(GridError::NotAKnot { components }),
        }
    }

    /// The diagram reflected in the main diagonal: columns become rows.
    pub fn transpose(&self) -> GridDiagram {
        GridDiagram {
            n: self.n,
            sigma_x: inverse(&self.sigma_x),
            sigma_o: inverse(&self.sigma_o),
        }
    }

    /// The diagram reflected top to bottom.
    pub fn reflect_rows(&self) -> GridDiagram {
        let flip = |r: &usize| self.n + 1 - r;
        GridDiagram {
            n: self.n,
            sigma_x: self.sigma_x.iter().map(flip).collect(),
            sigma_o: self.sigma_o.iter().map(flip).collect(),
        }
    }

    /// All crossings, ordered by column then row.
    pub fn crossings(&self) -> Vec<Crossing> {
        let n = self.n;
        let x_inv = inverse(&self.sigma_x);
        let o_inv = inverse(&self.sigma_o);
        let mut out = Vec::new();
        for col in 1..=n {
            let (x, o) = (self.x_row(col), self.o_row(col));
            // vertical strand X -> O
            let vy: i8 = if o > x { 1 } else { -1 };
            for row in x.min(o) + 1..x.max(o) {
                let (oc, xc) = (o_inv[row - 1], x_inv[row - 1]);
                if oc.min(xc) < col && col < oc.max(xc) {
                    // horizontal strand O -> X
                    let hx: i8 = if xc > oc { 1 } else { -1 };
                    out.push(Crossing {
                        column: col,
                        row,
                        sign: -vy * hx,
                    });
                }
            }
        }
        out
    }

    pub fn crossing_count(&self) -> usize {
        let x_inv = inverse(&self.sigma_x);
        let o_inv = inverse(&self.sigma_o);
        let mut count = 0;
        for row in 1..=self.n {
            let (a, b) = (o_inv[row - 1], x_inv[row - 1]);
            for col in a.min(b) + 1..a.max(b) {
                let (x, o) = (self.x_row(col), self.o_row(col));
                if x.min(o) < row && row < x.max(o) {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn writhe(&self) -> i64 {
        self.crossings().iter().map(|c| c.sign as i64).sum()
    }

    /// Translates the diagram on the torus: column `i` moves to column
    /// `i + dx` and row `r` to row `r + dy`, both modulo `n`.
    pub fn cyclic_translate(&self, dx: i64, dy: i64) -> GridDiagram {
        let n = self.n;
        let dx = dx.rem_euclid(n as i64) as usize;
        let dy = dy.rem_euclid(n as i64) as usize;
        let shift_row = |r: usize| (r - 1 + dy) % n + 1;
        let mut sigma_x = vec![0; n];
        let mut sigma_o = vec![0; n];
        for i in 0..n {
            let j = (i + dx) % n;
            sigma_x[j] = shift_row(self.sigma_x[i]);
            sigma_o[j] = shift_row(self.sigma_o[i]);
        }
        GridDiagram {
            n,
            sigma_x,
            sigma_o,
        }
    }

    /// Whether columns `i` and `i + 1` may be exchanged: their vertical
    /// spans must be nested or disjoint, with four distinct endpoint rows.
    pub fn can_commute_columns(&self, i: usize) -> Result<(), GridError> {
        if i < 1 || i >= self.n {
            return Err(GridError::IndexOutOfRange {
                index: i,
                max: self.n - 1,
            });
        }
        let span = |c: usize| {
            let (x, o) = (self.x_row(c), self.o_row(c));
            (x.min(o), x.max(o))
        };
        let (a1, b1) = span(i);
        let (a2, b2) = span(i + 1);
        if a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2 {
            return Err(GridError::IllegalMove(format!(
                "columns {} and {} share an endpoint row",
                i,
                i + 1
            )));
        }
        let disjoint = b1 < a2 || b2 < a1;
        let nested = (a1 < a2 && b2 < b1) || (a2 < a1 && b1 < b2);
        if disjoint || nested {
            Ok(())
        } else {
            Err(GridError::IllegalMove(format!(
                "columns {} and {} have interleaved spans",
                i,
                i + 1
            )))
        }
    }

    pub fn commute_columns(&self, i: usize) -> Result<GridDiagram, GridError> {
        self.can_commute_columns(i)?;
        let mut g = self.clone();
        g.sigma_x.swap(i - 1, i);
        g.sigma_o.swap(i - 1, i);
        Ok(g)
    }

    /// Exchanges rows `j` and `j + 1`; the transpose of a column commutation.
    pub fn commute_rows(&self, j: usize) -> Result<GridDiagram, GridError> {
        self.transpose().commute_columns(j).map(|g| g.transpose())
    }

    /// Splits the X in column `c` into a kink, growing the grid by one.
    ///
    /// With `r` the row of that X, the new diagram has an O at `(c, r)`, X's
    /// at `(c, r + 1)` and `(c + 1, r)`, and the cell `(c + 1, r + 1)` empty.
    /// [`GridDiagram::stabilization_block`] names the created block.
    pub fn stabilize(&self, c: usize) -> Result<GridDiagram, GridError> {
        let n = self.n;
        if c < 1 || c > n {
            return Err(GridError::IndexOutOfRange { index: c, max: n });
        }
        let r = self.x_row(c);
        let lift = |row: usize| if row > r { row + 1 } else { row };
        let mut sigma_x = vec![0; n + 1];
        let mut sigma_o = vec![0; n + 1];
        for col in 1..=n {
            if col == c {
                continue;
            }
            let dest = if col > c { col + 1 } else { col };
            sigma_x[dest - 1] = lift(self.x_row(col));
            sigma_o[dest - 1] = if self.o_row(col) == r {
                r + 1
            } else {
                lift(self.o_row(col))
            };
        }
        sigma_o[c - 1] = r;
        sigma_x[c - 1] = r + 1;
        sigma_x[c] = r;
        sigma_o[c] = lift(self.o_row(c));
        Ok(GridDiagram {
            n: n + 1,
            sigma_x,
            sigma_o,
        })
    }

    /// The block created by [`GridDiagram::stabilize`] at column `c`, in the
    /// coordinates of the stabilized diagram.
    pub fn stabilization_block(&self, c: usize) -> Block {
        Block {
            column: c,
            row: self.x_row(c),
        }
    }

    /// Whether the block at `(i, j)` holds exactly three markings.
    pub fn is_destabilization_block(&self, block: Block) -> bool {
        let Block { column: i, row: j } = block;
        if i < 1 || j < 1 || i >= self.n || j >= self.n {
            return false;
        }
        let cells = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)];
        cells
            .iter()
            .filter(|&&(c, r)| self.marking_at(c, r).is_some())
            .count()
            == 3
    }

    /// Removes the kink in `block`, shrinking the grid by one.
    ///
    /// The marking diagonally opposite the empty cell loses its row and
    /// column; the empty cell receives a marking of the other letter.
    pub fn destabilize_at(&self, block: Block) -> Result<GridDiagram, GridError> {
        let n = self.n;
        if n < 3 {
            return Err(GridError::IllegalMove(
                "grid of size 2 cannot shrink".into(),
            ));
        }
        if !self.is_destabilization_block(block) {
            return Err(GridError::IllegalMove(format!(
                "block ({}, {}) does not hold exactly three markings",
                block.column, block.row
            )));
        }
        let Block { column: i, row: j } = block;
        let cells = [(i, j), (i + 1, j), (i, j + 1), (i + 1, j + 1)];
        let (ec, er) = *cells
            .iter()
            .find(|&&(c, r)| self.marking_at(c, r).is_none())
            .expect("three of four cells are marked");
        // corner is diagonally opposite the empty cell
        let (cc, cr) = (2 * i + 1 - ec, 2 * j + 1 - er);
        let corner = self.marking_at(cc, cr).expect("corner is marked");
        let drop_row = |row: usize| if row > cr { row - 1 } else { row };
        let mut sigma_x = Vec::with_capacity(n - 1);
        let mut sigma_o = Vec::with_capacity(n - 1);
        for col in 1..=n {
            if col == cc {
                continue;
            }
            let (mut x, mut o) = (self.x_row(col), self.o_row(col));
            if col == ec {
                // this column's marking in the deleted row moves to the empty cell
                match corner.other() {
                    Marking::X => x = er,
                    Marking::O => o = er,
                }
            }
            sigma_x.push(drop_row(x));
            sigma_o.push(drop_row(o));
        }
        Ok(GridDiagram {
            n: n - 1,
            sigma_x,
            sigma_o,
        })
    }

    /// First destabilization block in raster order (rows bottom to top,
    /// columns left to right within a row).
    pub fn find_destabilization(&self) -> Option<Block> {
        if self.n < 3 {
            return None;
        }
        (1..self.n)
            .flat_map(|row| (1..self.n).map(move |column| Block { column, row }))
            .find(|&b| self.is_destabilization_block(b))
    }

    pub fn destabilize(&self) -> Option<(GridDiagram, Block)> {
        let block = self.find_destabilization()?;
        let g = self.destabilize_at(block).expect("block was checked");
        Some((g, block))
    }

    /// Whether some cyclic translate of the diagram admits a destabilization,
    /// i.e. some 2x2 block on the torus holds three markings.
    pub fn has_cyclic_destabilization(&self) -> bool {
        let n = self.n;
        if n < 3 {
            return false;
        }
        let next = |k: usize| k % n + 1;
        (1..=n).any(|c| {
            (1..=n).any(|r| {
                [(c, r), (next(c), r), (c, next(r)), (next(c), next(r))]
                    .iter()
                    .filter(|&&(c, r)| self.marking_at(c, r).is_some())
                    .count()
                    == 3
            })
        })
    }

    /// Lexicographically least diagram among all `n^2` cyclic translates,
    /// together with the translation reaching it.
    pub fn canonical_translate(&self) -> (GridDiagram, (i64, i64)) {
        let n = self.n as i64;
        let mut best = (self.clone(), (0, 0));
        for dx in 0..n {
            for dy in 0..n {
                if dx == 0 && dy == 0 {
                    continue;
                }
                let t = self.cyclic_translate(dx, dy);
                if t < best.0 {
                    best = (t, (dx, dy));
                }
            }
        }
        best
    }

    /// Gauss code of the knot, starting at the X of column 1 and travelling
    /// vertically first. Each crossing appears once over and once under.
    pub fn gauss_code(&self) -> Result<Vec<GaussEntry>, GridError> {
        self.require_knot()?;
        let n = self.n;
        let x_inv = inverse(&self.sigma_x);
        let o_inv = inverse(&self.sigma_o);
        let signs: std::collections::HashMap<(usize, usize), i8> = self
            .crossings()
            .into_iter()
            .map(|c| ((c.column, c.row), c.sign))
            .collect();
        let mut ids = std::collections::HashMap::new();
        let mut out = Vec::with_capacity(2 * signs.len());
        let mut visit = |key: (usize, usize), strand: Strand, out: &mut Vec<GaussEntry>| {
            if let Some(&sign) = signs.get(&key) {
                let next_id = ids.len() + 1;
                let id = *ids.entry(key).or_insert(next_id);
                out.push(GaussEntry { id, strand, sign });
            }
        };
        let mut col = 1;
        for _ in 0..n {
            let (x, o) = (self.x_row(col), self.o_row(col));
            let rows: Vec<usize> = if o > x {
                (x + 1..o).collect()
            } else {
                (o + 1..x).rev().collect()
            };
            for row in rows {
                visit((col, row), Strand::Over, &mut out);
            }
            let (from, to) = (col, x_inv[o - 1]);
            debug_assert_eq!(o_inv[o - 1], from);
            let cols: Vec<usize> = if to > from {
                (from + 1..to).collect()
            } else {
                (to + 1..from).rev().collect()
            };
            for c in cols {
                visit((c, o), Strand::Under, &mut out);
            }
            col = to;
        }
        debug_assert_eq!(col, 1);
        Ok(out)
    }
}

/// Renders a permutation as comma-separated decimals, e.g. `5,4,3,2,1`.
pub fn format_permutation(perm: &[usize]) -> String {
    let parts: Vec<String> = perm.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid permutation text {text:?}: {reason}")]
pub struct PermParseError {
    pub text: String,
    pub reason: String,
}

/// Parses the comma-separated form produced by [`format_permutation`].
///
/// Only canonical decimal spellings are accepted (no signs, spaces or
/// leading zeros), so that parsing and formatting are exact inverses.
pub fn parse_permutation(text: &str) -> Result<Vec<usize>, PermParseError> {
    let err = |reason: &str| PermParseError {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if text.is_empty() {
        return Err(err("empty"));
    }
    text.split(',')
        .map(|part| {
            let canonical = !part.is_empty()
                && part.bytes().all(|b| b.is_ascii_digit())
                && (part == "0" || !part.starts_with('0'));
            if !canonical {
                return Err(err(&format!("bad entry {part:?}")));
            }
            part.parse::<usize>().map_err(|e| err(&e.to_string()))
        })
        .collect()
}

impl fmt::Display for GridDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in (1..=self.n).rev() {
            for col in 1..=self.n {
                let ch = match self.marking_at(col, row) {
                    Some(Marking::X) => 'X',
                    Some(Marking::O) => 'O',
                    None => '.',
                };
                write!(f, "{ch}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const M211_X: [usize; 11] = [5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7];

    fn unknot() -> GridDiagram {
        validate(2, &[1, 2], &[2, 1]).unwrap()
    }

    #[test]
    fn validate_accepts_m211() {
        let g = validate(11, &M211_X, &[11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(g.n(), 11);
        assert!(g.is_diagonal());
    }

    #[test]
    fn validate_errors() {
        assert!(matches!(
            validate(2, &[2, 1], &[2, 1]),
            Err(GridError::MarkingCollision { column: 1, row: 2 })
        ));
        assert!(matches!(
            validate(3, &[1, 1, 2], &[3, 2, 1]),
            Err(GridError::NotAPermutation {
                which: Marking::X,
                ..
            })
        ));
        assert!(matches!(
            validate(1, &[1], &[1]),
            Err(GridError::InvalidSize(1))
        ));
        assert!(matches!(
            validate(3, &[1, 2], &[3, 2, 1]),
            Err(GridError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn diagonal_from_x_examples() {
        assert_eq!(diagonal_from_x(2, &[1, 2]).unwrap().sigma_o(), &[2, 1]);
        assert!(diagonal_from_x(11, &M211_X).unwrap().is_single_component());
        assert!(matches!(
            diagonal_from_x(3, &[3, 1, 2]),
            Err(GridError::MarkingCollision { column: 1, row: 3 })
        ));
    }

    #[test]
    fn single_component_examples() {
        assert!(unknot().is_single_component());
        let two = validate(4, &[1, 2, 3, 4], &[4, 3, 2, 1]).unwrap();
        assert!(!two.is_single_component());
        assert_eq!(two.component_count(), 2);
        assert!(validate(3, &[1, 3, 2], &[3, 2, 1])
            .unwrap()
            .is_single_component());
    }

    #[test]
    fn torus_grid_examples() {
        let t = torus_grid(2, 3).unwrap();
        assert_eq!(t.sigma_x(), &[3, 2, 1, 5, 4]);
        assert!(t.is_single_component());
        let above = (1..=5).filter(|&c| t.x_row(c) > t.o_row(c)).count();
        assert_eq!(above, 2);
        assert_eq!(torus_grid(1, 1).unwrap().sigma_x(), &[1, 2]);
        assert!(matches!(
            torus_grid(2, 4),
            Err(GridError::NotCoprime { .. })
        ));
        assert!(matches!(
            torus_grid(0, 3),
            Err(GridError::InvalidParams { .. })
        ));
    }

    #[test]
    fn trefoil_crossings() {
        let t = torus_grid(2, 3).unwrap();
        let cs = t.crossings();
        let spots: Vec<_> = cs.iter().map(|c| (c.column, c.row)).collect();
        assert_eq!(spots, vec![(2, 3), (3, 2), (4, 4)]);
        assert!(cs.iter().all(|c| c.sign == 1));
        assert_eq!(t.crossing_count(), 3);
        assert_eq!(t.writhe(), 3);
    }

    #[test]
    fn unknot_has_no_crossings() {
        assert!(unknot().crossings().is_empty());
        assert_eq!(unknot().crossing_count(), 0);
        assert_eq!(unknot().writhe(), 0);
    }

    #[test]
    fn m211_crossings() {
        let g = diagonal_from_x(11, &M211_X).unwrap();
        let cs = g.crossings();
        assert_eq!(cs.len(), 22);
        assert_eq!(g.crossing_count(), 22);
        assert!(cs.iter().all(|c| c.sign == 1));
    }

    #[test]
    fn cyclic_translate_examples() {
        let u = unknot().cyclic_translate(1, 0);
        assert_eq!((u.sigma_x(), u.sigma_o()), (&[2, 1][..], &[1, 2][..]));
        let t = torus_grid(2, 3).unwrap();
        assert_eq!(t.cyclic_translate(5, 5), t);
        assert_eq!(t.cyclic_translate(-3, 7), t.cyclic_translate(2, 2));
        let moved = t.cyclic_translate(2, 0);
        assert_eq!(moved.sigma_x(), &[5, 4, 3, 2, 1]);
        assert_eq!(moved.sigma_o(), &[2, 1, 5, 4, 3]);
    }

    #[test]
    fn commute_columns_examples() {
        let g = validate(4, &[1, 2, 4, 3], &[4, 3, 2, 1]).unwrap();
        let h = g.commute_columns(1).unwrap();
        assert_eq!(
            (h.sigma_x(), h.sigma_o()),
            (&[2, 1, 4, 3][..], &[3, 4, 2, 1][..])
        );
        assert_eq!(h.commute_columns(1).unwrap(), g);

        let t = torus_grid(2, 3).unwrap();
        assert!(matches!(
            t.commute_columns(1),
            Err(GridError::IllegalMove(_))
        ));
        let s = validate(3, &[1, 3, 2], &[3, 2, 1]).unwrap();
        assert!(matches!(
            s.commute_columns(1),
            Err(GridError::IllegalMove(_))
        ));
        assert!(matches!(
            s.commute_columns(3),
            Err(GridError::IndexOutOfRange { .. })
        ));
        assert!(matches!(
            s.commute_columns(0),
            Err(GridError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn commute_rows_is_transposed_column_move() {
        let g = validate(4, &[1, 2, 4, 3], &[4, 3, 2, 1]).unwrap();
        let t = g.transpose();
        if let Ok(h) = t.commute_columns(2) {
            assert_eq!(g.commute_rows(2).unwrap(), h.transpose());
        } else {
            assert!(g.commute_rows(2).is_err());
        }
    }

    #[test]
    fn stabilize_unknot() {
        let s = unknot().stabilize(1).unwrap();
        assert_eq!((s.sigma_x(), s.sigma_o()), (&[2, 1, 3][..], &[1, 3, 2][..]));
        assert!(matches!(
            unknot().stabilize(3),
            Err(GridError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn destabilize_stabilized_unknot() {
        let s = validate(3, &[2, 1, 3], &[1, 3, 2]).unwrap();
        let (g, block) = s.destabilize().unwrap();
        assert_eq!(g, unknot());
        assert_eq!(block, Block { column: 1, row: 1 });
    }

    #[test]
    fn trefoil_has_no_destabilization() {
        let t = torus_grid(2, 3).unwrap();
        assert!(t.destabilize().is_none());
        assert!(!t.has_cyclic_destabilization());
    }

    #[test]
    fn stabilize_round_trip_m211() {
        let g = diagonal_from_x(11, &M211_X).unwrap();
        for c in 1..=11 {
            let s = g.stabilize(c).unwrap();
            assert_eq!(s.n(), 12);
            assert!(validate(12, s.sigma_x(), s.sigma_o()).is_ok());
            assert_eq!(s.destabilize_at(g.stabilization_block(c)).unwrap(), g);
        }
    }

    #[test]
    fn stabilize_round_trip_trefoil() {
        let t = torus_grid(2, 3).unwrap();
        let s = t.stabilize(3).unwrap();
        assert_eq!(s.n(), 6);
        assert_eq!(s.destabilize_at(t.stabilization_block(3)).unwrap(), t);
    }

    #[test]
    fn gauss_codes() {
        assert!(unknot().gauss_code().unwrap().is_empty());
        let code = torus_grid(2, 3).unwrap().gauss_code().unwrap();
        assert_eq!(code.len(), 6);
        for id in 1..=3 {
            let hits: Vec<_> = code.iter().filter(|e| e.id == id).collect();
            assert_eq!(hits.len(), 2);
            assert_ne!(hits[0].strand, hits[1].strand);
        }
        assert!(code.iter().all(|e| e.sign == 1));
        let m = diagonal_from_x(11, &M211_X).unwrap().gauss_code().unwrap();
        assert_eq!(m.len(), 44);
        assert_eq!(m.iter().map(|e| e.id).max(), Some(22));
        let two = validate(4, &[1, 2, 3, 4], &[4, 3, 2, 1]).unwrap();
        assert!(matches!(
            two.gauss_code(),
            Err(GridError::NotAKnot { components: 2 })
        ));
    }

    #[test]
    fn permutation_text() {
        assert_eq!(
            parse_permutation("5,4,3,2,11,1,10,9,8,6,7").unwrap(),
            M211_X.to_vec()
        );
        assert_eq!(format_permutation(&M211_X), "5,4,3,2,11,1,10,9,8,6,7");
        assert!(parse_permutation("1, 2").is_err());
        assert!(parse_permutation("01,2").is_err());
        assert!(parse_permutation("1,,2").is_err());
        assert!(parse_permutation("").is_err());
    }
}
