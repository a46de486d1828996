//! Exact matrix rank over the rationals and over prime fields.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Coefficient field for homology and Tor computations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Field {
    #[default]
    Rationals,
    Prime(u64),
}

impl Field {
    pub fn prime(p: u64) -> Result<Field> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    fn from_str(s: &str) -> Result<Field> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::Rationals);
        }
        let p: u64 = s.parse().map_err(|_| Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected `q` or a prime, found `{s}`"),
        })?;
        Field::prime(p)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => f.write_str("Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Matrix::zeros(rows.len(), cols);
        for (r, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            m.data[r * cols..(r + 1) * cols].copy_from_slice(row);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] += v;
    }

    pub fn rank(&self, field: Field) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match field {
            Field::Rationals => rank_rational(self),
            Field::Prime(p) => rank_mod_p(self, p),
        }
    }
}

fn rank_mod_p(m: &Matrix, p: u64) -> usize {
    let p = p as i128;
    let mut a: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| (m.get(r, c) as i128).rem_euclid(p)).collect())
        .collect();
    let mut rank = 0;
    for col in 0..m.cols {
        let Some(pivot) = (rank..m.rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let inv = mod_inverse(a[rank][col], p);
        for c in col..m.cols {
            a[rank][c] = a[rank][c] * inv % p;
        }
        for r in 0..m.rows {
            if r != rank && a[r][col] != 0 {
                let factor = a[r][col];
                for c in col..m.cols {
                    a[r][c] = (a[r][c] - factor * a[rank][c]).rem_euclid(p);
                }
            }
        }
        rank += 1;
        if rank == m.rows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: i128, p: i128) -> i128 {
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p, a);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    t.rem_euclid(p)
}

/// Rank over the rationals by Bareiss elimination, on `i128` while the
/// entries fit and on big integers otherwise.
fn rank_rational(m: &Matrix) -> usize {
    let a: Vec<Vec<i128>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c) as i128).collect())
        .collect();
    match bareiss_small(a) {
        Some(rank) => rank,
        None => {
            let a = (0..m.rows)
                .map(|r| (0..m.cols).map(|c| BigInt::from(m.get(r, c))).collect())
                .collect();
            bareiss_big(a)
        }
    }
}

fn bareiss_small(mut a: Vec<Vec<i128>>) -> Option<usize> {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r][col] != 0) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col];
        for r in rank + 1..rows {
            let f = a[r][col];
            for c in col + 1..cols {
                let v = p
                    .checked_mul(a[r][c])?
                    .checked_sub(f.checked_mul(a[rank][c])?)?;
                a[r][c] = v / prev;
            }
            a[r][col] = 0;
        }
        prev = p;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    Some(rank)
}

fn bareiss_big(mut a: Vec<Vec<BigInt>>) -> usize {
    let rows = a.len();
    let cols = a[0].len();
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, pivot);
        let p = a[rank][col].clone();
        for r in rank + 1..rows {
            let f = a[r][col].clone();
            for c in col + 1..cols {
                let v = &p * &a[r][c] - &f * &a[rank][c];
                a[r][c] = v / &prev;
            }
            a[r][col] = BigInt::zero();
        }
        prev = p;
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn field_parsing() {
        assert_eq!("q".parse::<Field>().unwrap(), Field::Rationals);
        assert_eq!("2".parse::<Field>().unwrap(), Field::Prime(2));
        assert!(matches!("4".parse::<Field>(), Err(Error::NotPrime(4))));
        assert!(matches!("1".parse::<Field>(), Err(Error::NotPrime(1))));
        assert!("x".parse::<Field>().is_err());
    }

    #[test]
    fn small_ranks() {
        let m = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, -1]]);
        assert_eq!(m.rank(Field::Rationals), 2);
        let m = Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(m.rank(Field::Rationals), 3);
        assert_eq!(m.rank(Field::Prime(2)), 2);
        assert_eq!(Matrix::zeros(0, 4).rank(Field::Rationals), 0);
        assert_eq!(Matrix::zeros(3, 3).rank(Field::Prime(3)), 0);
    }

    #[test]
    fn big_integer_fallback() {
        // Entries large enough that Bareiss products overflow i128.
        let big = 1i64 << 62;
        let m = Matrix::from_rows(&[
            vec![big, big - 1, 3, 7],
            vec![big - 5, big, 11, 13],
            vec![17, 19, big, big - 3],
            vec![2 * 17, 2 * 19, 2 * 3, 2 * 7],
        ]);
        let a: Vec<Vec<i128>> = (0..4).map(|r| (0..4).map(|c| m.get(r, c) as i128).collect()).collect();
        assert!(bareiss_small(a).is_none());
        assert_eq!(m.rank(Field::Rationals), rank_by_fractions(&m));
    }

    // Rank by exact rational row reduction, independent of the code above.
    fn rank_by_fractions(m: &Matrix) -> usize {
        use num_bigint::BigInt;
        use num_rational::BigRational;
        let mut a: Vec<Vec<BigRational>> = (0..m.rows())
            .map(|r| {
                (0..m.cols())
                    .map(|c| BigRational::from_integer(BigInt::from(m.get(r, c))))
                    .collect()
            })
            .collect();
        let mut rank = 0;
        for col in 0..m.cols() {
            let Some(p) = (rank..m.rows()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in 0..m.rows() {
                if r != rank && !a[r][col].is_zero() {
                    let f = &a[r][col] / &a[rank][col];
                    for c in 0..m.cols() {
                        let v = &f * &a[rank][c];
                        a[r][c] -= v;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    proptest! {
        #[test]
        fn bareiss_matches_fraction_elimination(
            rows in 1usize..7,
            cols in 1usize..7,
            entries in proptest::collection::vec(-3i64..4, 49),
        ) {
            let data: Vec<Vec<i64>> = (0..rows).map(|r| entries[r * 7..r * 7 + cols].to_vec()).collect();
            let m = Matrix::from_rows(&data);
            prop_assert_eq!(m.rank(Field::Rationals), rank_by_fractions(&m));
        }

        #[test]
        fn mod_p_rank_never_exceeds_rational_rank(
            entries in proptest::collection::vec(-2i64..3, 25),
            p in prop::sample::select(vec![2u64, 3, 5, 7]),
        ) {
            let data: Vec<Vec<i64>> = (0..5).map(|r| entries[r * 5..r * 5 + 5].to_vec()).collect();
            let m = Matrix::from_rows(&data);
            prop_assert!(m.rank(Field::Prime(p)) <= m.rank(Field::Rationals));
        }
    }
}
