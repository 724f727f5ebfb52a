//! Exhaustive generation of diagonal knot grid diagrams and their
//! annotation with invariants.
//!
//! A diagonal diagram is determined by its X-permutation. It presents a
//! knot exactly when the column successor `i -> n + 1 - sigma_x[i]` is a
//! single `n`-cycle, so the search extends the permutation column by
//! column and prunes any partial assignment that closes a cycle early.

mod tsv;

use rayon::prelude::*;
use thiserror::Error;

use crate::alexander::{alexander_polynomial, AlexanderError, LaurentPolynomial};
use crate::grid::{diagonal_from_x, GridError};
use crate::tau::{tau_diagonal, TauError};

pub use tsv::{format_record, format_tsv, parse_record, parse_tsv, ParseError, ParseReason};

/// One diagonal knot diagram together with optional invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationRecord {
    pub n: usize,
    pub sigma_x: Vec<usize>,
    pub tau: Option<i64>,
    /// Canonical Alexander polynomial.
    pub alexander: Option<LaurentPolynomial>,
}

impl EnumerationRecord {
    pub fn new(sigma_x: Vec<usize>) -> Self {
        EnumerationRecord {
            n: sigma_x.len(),
            sigma_x,
            tau: None,
            alexander: None,
        }
    }
}

/// Partial-permutation state of the column-by-column search.
struct Search {
    n: usize,
    sigma_x: Vec<usize>,
    used: Vec<bool>,
    // path fragments of the successor map, indexed by column (0-based)
    start_of: Vec<usize>,
    end_of: Vec<usize>,
}

struct Undo {
    start: usize,
    end: usize,
    old_end_of_start: usize,
    old_start_of_end: usize,
}

impl Search {
    fn new(n: usize) -> Self {
        Search {
            n,
            sigma_x: Vec::with_capacity(n),
            used: vec![false; n + 1],
            start_of: (0..n).collect(),
            end_of: (0..n).collect(),
        }
    }

    /// Places the X of the next column in `row`, or returns `None` if that
    /// violates a pruning rule.
    fn push(&mut self, row: usize) -> Option<Undo> {
        let n = self.n;
        let col = self.sigma_x.len();
        if self.used[row] || row == n - col {
            return None;
        }
        // successor of column `col` (0-based) is column n - row
        let succ = n - row;
        let closes_cycle = self.end_of[succ] == col;
        if closes_cycle && col + 1 < n {
            return None;
        }
        let start = self.start_of[col];
        let end = self.end_of[succ];
        let undo = Undo {
            start,
            end,
            old_end_of_start: self.end_of[start],
            old_start_of_end: self.start_of[end],
        };
        self.end_of[start] = end;
        self.start_of[end] = start;
        self.used[row] = true;
        self.sigma_x.push(row);
        Some(undo)
    }

    fn pop(&mut self, undo: Undo) {
        let row = self.sigma_x.pop().expect("nonempty");
        self.used[row] = false;
        self.start_of[undo.end] = undo.old_start_of_end;
        self.end_of[undo.start] = undo.old_end_of_start;
    }

    fn run<F: FnMut(&[usize])>(&mut self, sink: &mut F) -> u64 {
        if self.sigma_x.len() == self.n {
            sink(&self.sigma_x);
            return 1;
        }
        let mut count = 0;
        for row in 1..=self.n {
            if let Some(undo) = self.push(row) {
                count += self.run(sink);
                self.pop(undo);
            }
        }
        count
    }
}

fn check_size(n: usize) -> Result<(), GridError> {
    if n < 2 {
        Err(GridError::InvalidSize(n))
    } else {
        Ok(())
    }
}

/// Streams every X-permutation of a diagonal knot diagram of size `n`, in
/// lexicographic order, and returns how many were emitted.
pub fn enumerate_diagonal<F: FnMut(&[usize])>(n: usize, mut sink: F) -> Result<u64, GridError> {
    check_size(n)?;
    Ok(Search::new(n).run(&mut sink))
}

/// Search prefixes fixing the first two columns (or one when `n == 2`),
/// in lexicographic order. Each prefix is an independent subtree.
pub fn partition_prefixes(n: usize) -> Result<Vec<Vec<usize>>, GridError> {
    check_size(n)?;
    let depth = n.min(2);
    let mut out = Vec::new();
    let mut s = Search::new(n);
    fn go(s: &mut Search, depth: usize, out: &mut Vec<Vec<usize>>) {
        if s.sigma_x.len() == depth {
            out.push(s.sigma_x.clone());
            return;
        }
        for row in 1..=s.n {
            if let Some(undo) = s.push(row) {
                go(s, depth, out);
                s.pop(undo);
            }
        }
    }
    go(&mut s, depth, &mut out);
    Ok(out)
}

/// Enumerates the subtree below `prefix`.
pub fn enumerate_with_prefix<F: FnMut(&[usize])>(
    n: usize,
    prefix: &[usize],
    mut sink: F,
) -> Result<u64, GridError> {
    check_size(n)?;
    let mut s = Search::new(n);
    for &row in prefix {
        if row == 0 || row > n || s.push(row).is_none() {
            return Ok(0);
        }
    }
    Ok(s.run(&mut sink))
}

fn pool(jobs: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool")
}

/// Runs the partitions on `jobs` threads, mapping every permutation with
/// `map`. Results are returned per partition, in partition order, so the
/// concatenation matches the serial stream.
pub fn enumerate_partitioned<T, F>(n: usize, jobs: usize, map: F) -> Result<Vec<Vec<T>>, GridError>
where
    T: Send,
    F: Fn(&[usize]) -> T + Sync,
{
    let prefixes = partition_prefixes(n)?;
    Ok(pool(jobs).install(|| {
        prefixes
            .par_iter()
            .map(|prefix| {
                let mut out = Vec::new();
                enumerate_with_prefix(n, prefix, |x| out.push(map(x))).expect("size checked");
                out
            })
            .collect()
    }))
}

/// Rearranges `perm` into the next permutation in lexicographic order;
/// returns `false` after the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    let Some(i) = (1..perm.len()).rev().find(|&i| perm[i - 1] < perm[i]) else {
        return false;
    };
    let j = (i..perm.len())
        .rev()
        .find(|&j| perm[j] > perm[i - 1])
        .expect("exists");
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Counts diagonal knot diagrams by filtering all `n!` permutations.
pub fn count_diagonal(n: usize) -> Result<u64, GridError> {
    check_size(n)?;
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut count = 0;
    loop {
        if let Ok(g) = diagonal_from_x(n, &perm) {
            if g.is_single_component() {
                count += 1;
            }
        }
        if !next_permutation(&mut perm) {
            return Ok(count);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnnotationFailure {
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Tau(#[from] TauError),
    #[error(transparent)]
    Alexander(#[from] AlexanderError),
}

/// A record whose invariants could not be computed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("record {index} ({sigma}): {source}", sigma = crate::grid::format_permutation(.sigma_x))]
pub struct AnnotateError {
    pub index: usize,
    pub sigma_x: Vec<usize>,
    pub source: AnnotationFailure,
}

fn annotate_one(
    mut record: EnumerationRecord,
    with_tau: bool,
    with_alexander: bool,
) -> Result<EnumerationRecord, AnnotationFailure> {
    let g = diagonal_from_x(record.n, &record.sigma_x)?;
    if with_tau {
        record.tau = Some(tau_diagonal(&g)?);
    }
    if with_alexander {
        record.alexander = Some(alexander_polynomial(&g)?);
    }
    Ok(record)
}

/// Adds the requested invariants to every record. A failure is reported
/// for its record only; the other records are still annotated, and the
/// input order is preserved.
pub fn annotate_records(
    records: Vec<EnumerationRecord>,
    with_tau: bool,
    with_alexander: bool,
    jobs: usize,
) -> Vec<Result<EnumerationRecord, AnnotateError>> {
    pool(jobs).install(|| {
        records
            .into_par_iter()
            .enumerate()
            .map(|(index, record)| {
                let sigma_x = record.sigma_x.clone();
                annotate_one(record, with_tau, with_alexander).map_err(|source| AnnotateError {
                    index,
                    sigma_x,
                    source,
                })
            })
            .collect()
    })
}
