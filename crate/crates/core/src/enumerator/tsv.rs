//! Tab-separated record files: `n`, `sigma_x`, then optionally tau and the
//! Alexander coefficient vector. No header, LF line endings. A record with
//! a polynomial but no tau leaves the third field empty.

use thiserror::Error;

use super::EnumerationRecord;
use crate::alexander::LaurentPolynomial;
use crate::grid::{diagonal_from_x, format_permutation, parse_permutation, GridError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseReason {
    #[error("expected 2 to 4 fields, found {0}")]
    FieldCount(usize),
    #[error("carriage return in line")]
    CarriageReturn,
    #[error("bad integer {0:?}")]
    BadInteger(String),
    #[error("{0}")]
    BadPermutation(String),
    #[error("size {n} does not match permutation length {len}")]
    SizeMismatch { n: usize, len: usize },
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error("bad polynomial: {0}")]
    BadPolynomial(String),
}

/// A malformed line; `line` and `column` are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {reason}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub reason: ParseReason,
}

fn parse_int(text: &str) -> Result<i64, ParseReason> {
    let digits = text.strip_prefix('-').unwrap_or(text);
    let canonical = !digits.is_empty()
        && digits.bytes().all(|b| b.is_ascii_digit())
        && (digits == "0" || !digits.starts_with('0'))
        && text != "-0";
    if !canonical {
        return Err(ParseReason::BadInteger(text.to_string()));
    }
    text.parse()
        .map_err(|_| ParseReason::BadInteger(text.to_string()))
}

/// Parses one line (without its terminator).
pub fn parse_record(line: &str, line_no: usize) -> Result<EnumerationRecord, ParseError> {
    let err = |column: usize, reason: ParseReason| ParseError {
        line: line_no,
        column,
        reason,
    };
    if line.contains('\r') {
        return Err(err(1, ParseReason::CarriageReturn));
    }
    let fields: Vec<&str> = line.split('\t').collect();
    if !(2..=4).contains(&fields.len()) {
        return Err(err(1, ParseReason::FieldCount(fields.len())));
    }
    let n = parse_int(fields[0])
        .ok()
        .filter(|&n| n >= 0)
        .ok_or_else(|| err(1, ParseReason::BadInteger(fields[0].to_string())))?
        as usize;
    let sigma_x = parse_permutation(fields[1])
        .map_err(|e| err(2, ParseReason::BadPermutation(e.to_string())))?;
    if sigma_x.len() != n {
        return Err(err(
            2,
            ParseReason::SizeMismatch {
                n,
                len: sigma_x.len(),
            },
        ));
    }
    let g = diagonal_from_x(n, &sigma_x).map_err(|e| err(2, e.into()))?;
    g.require_knot().map_err(|e| err(2, e.into()))?;

    let tau = match fields.get(2) {
        // an empty tau field is only meaningful when a polynomial follows
        Some(&"") if fields.len() == 4 => None,
        Some(text) => Some(parse_int(text).map_err(|r| err(3, r))?),
        None => None,
    };
    let alexander = match fields.get(3) {
        Some(text) => {
            let p = LaurentPolynomial::parse_coeff_string(text)
                .map_err(|r| err(4, ParseReason::BadPolynomial(r)))?;
            if !p.is_canonical() {
                return Err(err(
                    4,
                    ParseReason::BadPolynomial("not in canonical form".into()),
                ));
            }
            Some(p)
        }
        None => None,
    };
    Ok(EnumerationRecord {
        n,
        sigma_x,
        tau,
        alexander,
    })
}

/// Parses a whole file. Empty input yields no records.
pub fn parse_tsv(text: &str) -> Result<Vec<EnumerationRecord>, ParseError> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split('\n')
        .enumerate()
        .map(|(i, line)| parse_record(line, i + 1))
        .collect()
}

/// One line, including its LF terminator.
pub fn format_record(record: &EnumerationRecord) -> String {
    let mut line = format!("{}\t{}", record.n, format_permutation(&record.sigma_x));
    match (&record.tau, &record.alexander) {
        (Some(tau), None) => line.push_str(&format!("\t{tau}")),
        (tau, Some(p)) => {
            let tau = tau.map(|t| t.to_string()).unwrap_or_default();
            let coeffs = p
                .to_coeff_string()
                .expect("canonical polynomials have no negative exponents");
            line.push_str(&format!("\t{tau}\t{coeffs}"));
        }
        (None, None) => {}
    }
    line.push('\n');
    line
}

pub fn format_tsv(records: &[EnumerationRecord]) -> String {
    records.iter().map(format_record).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn m211_line() {
        let r = parse_record("11\t5,4,3,2,11,1,10,9,8,6,7\t9", 1).unwrap();
        assert_eq!(r.n, 11);
        assert_eq!(r.sigma_x, vec![5, 4, 3, 2, 11, 1, 10, 9, 8, 6, 7]);
        assert_eq!(r.tau, Some(9));
        assert_eq!(r.alexander, None);
    }

    #[test]
    fn empty_file() {
        assert_eq!(parse_tsv("").unwrap(), vec![]);
        assert_eq!(parse_tsv("\n").unwrap(), vec![]);
    }

    #[test]
    fn errors_carry_positions() {
        let e = parse_tsv("3\t1,1,2\n").unwrap_err();
        assert_eq!((e.line, e.column), (1, 2));
        assert!(matches!(
            e.reason,
            ParseReason::Grid(GridError::NotAPermutation { .. })
        ));

        let e = parse_tsv("2\t1,2\n3\t1,3,2\tx\n").unwrap_err();
        assert_eq!((e.line, e.column), (2, 3));
        let e = parse_tsv("2\t1,2,3\n").unwrap_err();
        assert!(matches!(
            e.reason,
            ParseReason::SizeMismatch { n: 2, len: 3 }
        ));
        let e = parse_tsv("4\t1,2,3,4\n").unwrap_err();
        assert!(matches!(
            e.reason,
            ParseReason::Grid(GridError::NotAKnot { components: 2 })
        ));
        let e = parse_tsv("2\t1,2\t0\t1,-1\n").unwrap_err();
        assert_eq!(e.column, 4);
        assert!(parse_tsv("2\t1,2\r\n").is_err());
        assert!(parse_tsv("2\n").is_err());
        assert!(parse_tsv("2\t1,2\t\n").is_err());
        assert!(parse_tsv("02\t1,2\n").is_err());
    }

    #[test]
    fn formatting() {
        let mut r = EnumerationRecord::new(vec![3, 2, 1, 5, 4]);
        assert_eq!(format_record(&r), "5\t3,2,1,5,4\n");
        r.tau = Some(1);
        assert_eq!(format_record(&r), "5\t3,2,1,5,4\t1\n");
        r.alexander = Some(LaurentPolynomial::from_coeffs(0, &[1, -1, 1]));
        assert_eq!(format_record(&r), "5\t3,2,1,5,4\t1\t1,-1,1\n");
        r.tau = None;
        assert_eq!(format_record(&r), "5\t3,2,1,5,4\t\t1,-1,1\n");
        assert_eq!(parse_record("5\t3,2,1,5,4\t\t1,-1,1", 1).unwrap(), r);
    }

    proptest! {
        #[test]
        fn enumerated_files_round_trip(n in 2usize..=6, tau in proptest::option::of(-5i64..20), with_poly in any::<bool>()) {
            let mut records = Vec::new();
            crate::enumerator::enumerate_diagonal(n, |x| {
                let mut r = EnumerationRecord::new(x.to_vec());
                r.tau = tau;
                if with_poly {
                    r.alexander = Some(LaurentPolynomial::from_coeffs(0, &[1, -1, 1]));
                }
                records.push(r);
            }).unwrap();
            let text = format_tsv(&records);
            let parsed = parse_tsv(&text).unwrap();
            prop_assert_eq!(&parsed, &records);
            prop_assert_eq!(format_tsv(&parsed), text);
        }
    }
}
