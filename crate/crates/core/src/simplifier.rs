//! Heuristic simplification of grid diagrams with knot-preserving moves.
//!
//! Two searches are offered: [`simplify_grid`] shrinks the grid through
//! destabilizations found after cyclic translations and short commutation
//! sequences, and [`reduce_crossings`] runs a bounded breadth-first search
//! over commutations and translations for a diagram with fewer crossings.
//! Both return a move log that [`replay`] turns back into the result.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::grid::{Block, GridDiagram, GridError};

/// A single grid move. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Move {
    /// Exchange columns `i` and `i + 1`.
    CommuteColumns(usize),
    /// Exchange rows `j` and `j + 1`.
    CommuteRows(usize),
    Translate(i64, i64),
    /// Destabilize at the block with lower-left cell `(i, j)`.
    Destabilize(usize, usize),
    Stabilize(usize),
}

impl Move {
    pub fn apply(&self, g: &GridDiagram) -> Result<GridDiagram, GridError> {
        match *self {
            Move::CommuteColumns(i) => g.commute_columns(i),
            Move::CommuteRows(j) => g.commute_rows(j),
            Move::Translate(dx, dy) => Ok(g.cyclic_translate(dx, dy)),
            Move::Destabilize(i, j) => g.destabilize_at(Block { column: i, row: j }),
            Move::Stabilize(c) => g.stabilize(c),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::CommuteColumns(i) => write!(f, "C {i}"),
            Move::CommuteRows(j) => write!(f, "R {j}"),
            Move::Translate(dx, dy) => write!(f, "T {dx} {dy}"),
            Move::Destabilize(i, j) => write!(f, "D {i} {j}"),
            Move::Stabilize(c) => write!(f, "S {c}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("bad move {0:?}")]
pub struct MoveParseError(pub String);

impl FromStr for Move {
    type Err = MoveParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || MoveParseError(s.to_string());
        let parts: Vec<&str> = s.split(' ').collect();
        let idx = |k: usize| {
            parts
                .get(k)
                .and_then(|p| p.parse::<usize>().ok())
                .ok_or_else(bad)
        };
        let off = |k: usize| {
            parts
                .get(k)
                .and_then(|p| p.parse::<i64>().ok())
                .ok_or_else(bad)
        };
        let (mv, arity) = match parts.first().copied() {
            Some("C") => (Move::CommuteColumns(idx(1)?), 2),
            Some("R") => (Move::CommuteRows(idx(1)?), 2),
            Some("T") => (Move::Translate(off(1)?, off(2)?), 3),
            Some("D") => (Move::Destabilize(idx(1)?, idx(2)?), 3),
            Some("S") => (Move::Stabilize(idx(1)?), 2),
            _ => return Err(bad()),
        };
        if parts.len() != arity {
            return Err(bad());
        }
        Ok(mv)
    }
}

/// One move per line, LF-terminated.
pub fn format_move_log(moves: &[Move]) -> String {
    moves.iter().map(|m| format!("{m}\n")).collect()
}

pub fn parse_move_log(text: &str) -> Result<Vec<Move>, MoveParseError> {
    text.lines()
        .filter(|l| !l.is_empty())
        .map(str::parse)
        .collect()
}

/// Applies `moves` in order.
pub fn replay(g: &GridDiagram, moves: &[Move]) -> Result<GridDiagram, GridError> {
    moves.iter().try_fold(g.clone(), |acc, m| m.apply(&acc))
}

/// Commutation moves legal on `g`: columns first, then rows.
fn commutations(g: &GridDiagram) -> Vec<(GridDiagram, Move)> {
    let n = g.n();
    let cols = (1..n).filter_map(|i| {
        g.commute_columns(i)
            .ok()
            .map(|h| (h, Move::CommuteColumns(i)))
    });
    let rows = (1..n).filter_map(|j| g.commute_rows(j).ok().map(|h| (h, Move::CommuteRows(j))));
    cols.chain(rows).collect()
}

/// The first translate, in `(dx, dy)` order, admitting a destabilization.
fn destabilize_after_translation(g: &GridDiagram) -> Option<(GridDiagram, Vec<Move>)> {
    if !g.has_cyclic_destabilization() {
        return None;
    }
    let n = g.n() as i64;
    for dx in 0..n {
        for dy in 0..n {
            let t = g.cyclic_translate(dx, dy);
            if let Some((h, block)) = t.destabilize() {
                let mut moves = Vec::new();
                if (dx, dy) != (0, 0) {
                    moves.push(Move::Translate(dx, dy));
                }
                moves.push(Move::Destabilize(block.column, block.row));
                return Some((h, moves));
            }
        }
    }
    None
}

struct Node {
    diagram: GridDiagram,
    parent: Option<usize>,
    mv: Option<Move>,
}

fn path_to(arena: &[Node], mut idx: usize) -> Vec<Move> {
    let mut moves = Vec::new();
    while let (Some(parent), Some(mv)) = (arena[idx].parent, arena[idx].mv) {
        moves.push(mv);
        idx = parent;
    }
    moves.reverse();
    moves
}

/// Breadth-first search over commutation sequences of length at most
/// `depth` for a diagram with a destabilization at some translation.
/// States are identified up to cyclic translation.
fn commutations_to_destabilization(
    g: &GridDiagram,
    depth: usize,
) -> Option<(GridDiagram, Vec<Move>)> {
    let mut arena = vec![Node {
        diagram: g.clone(),
        parent: None,
        mv: None,
    }];
    let mut seen = HashSet::new();
    seen.insert(g.canonical_translate().0);
    let mut frontier = vec![0usize];
    for _ in 0..depth {
        let mut next = Vec::new();
        for &idx in &frontier {
            for (child, mv) in commutations(&arena[idx].diagram) {
                if !seen.insert(child.canonical_translate().0) {
                    continue;
                }
                let found = child.has_cyclic_destabilization();
                arena.push(Node {
                    diagram: child,
                    parent: Some(idx),
                    mv: Some(mv),
                });
                let id = arena.len() - 1;
                if found {
                    return Some((arena[id].diagram.clone(), path_to(&arena, id)));
                }
                next.push(id);
            }
        }
        next.sort_by(|&a, &b| arena[a].diagram.cmp(&arena[b].diagram));
        frontier = next;
    }
    None
}

/// Shrinks the grid as far as the bounded search allows.
///
/// Each iteration destabilizes at the first cyclic translate that admits
/// it, or otherwise searches commutation sequences up to
/// `max_commutation_depth` for one that does. Stops when neither succeeds
/// or after `max_iterations` iterations.
pub fn simplify_grid(
    g: &GridDiagram,
    max_commutation_depth: usize,
    max_iterations: usize,
) -> (GridDiagram, Vec<Move>) {
    let mut current = g.clone();
    let mut log = Vec::new();
    for _ in 0..max_iterations {
        if current.n() <= 2 {
            break;
        }
        if let Some((h, moves)) = destabilize_after_translation(&current) {
            current = h;
            log.extend(moves);
            continue;
        }
        match commutations_to_destabilization(&current, max_commutation_depth) {
            Some((h, moves)) => {
                log.extend(moves);
                let (shrunk, more) = destabilize_after_translation(&h)
                    .expect("search target admits a destabilization");
                current = shrunk;
                log.extend(more);
            }
            None => break,
        }
    }
    (current, log)
}

pub const DEFAULT_DEPTH: usize = 4;
pub const DEFAULT_ITERATIONS: usize = 1000;

/// Outcome of [`reduce_crossings`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub diagram: GridDiagram,
    pub crossings: usize,
    pub moves: Vec<Move>,
}

/// All moves explored by the crossing search from `g`. Translations are
/// skipped right after a translation and a commutation is not undone
/// immediately, since both only revisit shallower states.
fn neighbours(g: &GridDiagram, last: Option<Move>) -> Vec<(GridDiagram, Move)> {
    let mut out: Vec<(GridDiagram, Move)> = commutations(g)
        .into_iter()
        .filter(|(_, mv)| Some(*mv) != last)
        .collect();
    if !matches!(last, Some(Move::Translate(..))) {
        let n = g.n() as i64;
        for dx in 0..n {
            for dy in 0..n {
                if (dx, dy) != (0, 0) {
                    out.push((g.cyclic_translate(dx, dy), Move::Translate(dx, dy)));
                }
            }
        }
    }
    out
}

type Candidate = (usize, GridDiagram, Vec<Move>);

fn better(a: &Candidate, b: &Candidate) -> bool {
    (a.0, &a.1) < (b.0, &b.1)
}

/// Searches sequences of at most `depth` commutations and cyclic
/// translations for the diagram with the fewest crossings. Ties go to the
/// lexicographically smallest `(sigma_x, sigma_o)`; the result is never
/// worse than the input.
pub fn reduce_crossings(g: &GridDiagram, depth: usize) -> Reduction {
    let mut arena = vec![Node {
        diagram: g.clone(),
        parent: None,
        mv: None,
    }];
    let mut seen: HashSet<GridDiagram> = HashSet::new();
    seen.insert(g.clone());
    let mut best: Candidate = (g.crossing_count(), g.clone(), Vec::new());
    let mut frontier = vec![0usize];

    for level in 1..=depth {
        let expansions: Vec<Vec<(GridDiagram, Move)>> = frontier
            .par_iter()
            .map(|&idx| neighbours(&arena[idx].diagram, arena[idx].mv))
            .collect();

        if level == depth {
            // the last level is only scored, never expanded
            let scored: Vec<Option<(usize, usize, Move)>> = expansions
                .par_iter()
                .map(|children| {
                    children
                        .iter()
                        .enumerate()
                        .map(|(pos, (c, mv))| (c.crossing_count(), c, pos, *mv))
                        .min_by(|a, b| (a.0, a.1).cmp(&(b.0, b.1)))
                        .map(|(count, _, pos, mv)| (count, pos, mv))
                })
                .collect();
            for (k, entry) in scored.into_iter().enumerate() {
                if let Some((count, pos, mv)) = entry {
                    let parent = frontier[k];
                    let diagram = expansions[k][pos].0.clone();
                    let mut moves = path_to(&arena, parent);
                    moves.push(mv);
                    let cand = (count, diagram, moves);
                    if better(&cand, &best) {
                        best = cand;
                    }
                }
            }
            break;
        }

        let mut next = Vec::new();
        for (k, children) in expansions.into_iter().enumerate() {
            let parent = frontier[k];
            for (child, mv) in children {
                if seen.contains(&child) {
                    continue;
                }
                seen.insert(child.clone());
                arena.push(Node {
                    diagram: child,
                    parent: Some(parent),
                    mv: Some(mv),
                });
                next.push(arena.len() - 1);
            }
        }
        let counts: Vec<usize> = next
            .par_iter()
            .map(|&i| arena[i].diagram.crossing_count())
            .collect();
        for (&i, &count) in next.iter().zip(&counts) {
            if (count, &arena[i].diagram) < (best.0, &best.1) {
                best = (count, arena[i].diagram.clone(), path_to(&arena, i));
            }
        }
        next.sort_by(|&a, &b| arena[a].diagram.cmp(&arena[b].diagram));
        frontier = next;
    }

    Reduction {
        diagram: best.1,
        crossings: best.0,
        moves: best.2,
    }
}
