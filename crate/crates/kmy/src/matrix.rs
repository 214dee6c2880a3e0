//! Exact determinants and ranks of matrices over Q[delta, delta^-1].
//!
//! Fraction-free (Bareiss) elimination: every division along the way is
//! exact in the Laurent ring, so no rational-function arithmetic is needed.

use crate::error::Result;
use crate::ring::LaurentPoly;

/// Exact determinant of a square Laurent-polynomial matrix.
pub fn laurent_det(m: &[Vec<LaurentPoly>]) -> Result<LaurentPoly> {
    let size = m.len();
    for row in m {
        assert_eq!(row.len(), size, "determinant of a non-square matrix");
    }
    if size == 0 {
        return Ok(LaurentPoly::one());
    }
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut sign = false;
    let mut prev = LaurentPoly::one();
    for k in 0..size - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..size).find(|&r| !a[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero());
            };
            a.swap(k, r);
            sign = !sign;
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .exact_div(&prev)
                    .expect("Bareiss division is exact over an integral domain");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[size - 1][size - 1].clone();
    Ok(if sign { det.neg() } else { det })
}

/// Rank over the fraction field Q(delta), via fraction-free elimination with
/// full row pivoting.
pub fn laurent_rank(m: &[Vec<LaurentPoly>]) -> usize {
    if m.is_empty() || m[0].is_empty() {
        return 0;
    }
    let rows = m.len();
    let cols = m[0].len();
    let mut a: Vec<Vec<LaurentPoly>> = m.to_vec();
    let mut prev = LaurentPoly::one();
    let mut rank = 0;
    let mut row = 0;
    for col in 0..cols {
        let Some(p) = (row..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        for i in row + 1..rows {
            for j in col + 1..cols {
                let num = a[row][col].mul(&a[i][j]).sub(&a[i][col].mul(&a[row][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][col] = LaurentPoly::zero();
        }
        prev = a[row][col].clone();
        rank += 1;
        row += 1;
        if row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
pub(crate) fn cofactor_det(m: &[Vec<LaurentPoly>]) -> LaurentPoly {
    let size = m.len();
    if size == 0 {
        return LaurentPoly::one();
    }
    if size == 1 {
        return m[0][0].clone();
    }
    let mut acc = LaurentPoly::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<LaurentPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry.mul(&cofactor_det(&minor));
        acc = if j % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat_int, Rational};
    use num::Zero;
    use proptest::prelude::*;

    #[test]
    fn det_1x1_is_delta() {
        let m = vec![vec![LaurentPoly::delta_pow(1)]];
        assert_eq!(laurent_det(&m).unwrap(), LaurentPoly::delta_pow(1));
    }

    #[test]
    fn det_with_zero_pivot_needs_row_swap() {
        let z = LaurentPoly::zero;
        let one = LaurentPoly::one;
        let m = vec![vec![z(), one()], vec![one(), z()]];
        assert_eq!(laurent_det(&m).unwrap(), LaurentPoly::one().neg());
        let m = vec![vec![z(), z()], vec![z(), one()]];
        assert!(laurent_det(&m).unwrap().is_zero());
    }

    #[test]
    fn rank_examples() {
        let d = LaurentPoly::delta_pow(1);
        let m = vec![vec![d.clone(), d.clone()], vec![d.clone(), d.clone()]];
        assert_eq!(laurent_rank(&m), 1);
        let m = vec![vec![d.clone(), LaurentPoly::one()], vec![LaurentPoly::one(), d]];
        assert_eq!(laurent_rank(&m), 2);
        assert_eq!(laurent_rank(&[vec![LaurentPoly::zero()]]), 0);
    }

    fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
        proptest::collection::vec((-2i64..=2, -3i64..=3), 0..3).prop_map(|terms| {
            let mut p = LaurentPoly::zero();
            for (e, c) in terms {
                p = p.add(&LaurentPoly::monomial(e, rat_int(c)));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn det_matches_cofactor_expansion(size in 1usize..=4, seedrows in proptest::collection::vec(proptest::collection::vec(small_laurent(), 4), 4)) {
            let m: Vec<Vec<LaurentPoly>> = (0..size)
                .map(|i| (0..size).map(|j| seedrows[i][j].clone()).collect())
                .collect();
            let bareiss = laurent_det(&m).unwrap();
            let cofactor = cofactor_det(&m);
            prop_assert_eq!(bareiss, cofactor);
        }

        #[test]
        fn det_of_scalar_matrix(c in -5i64..=5, size in 1usize..=4) {
            let mut m = vec![vec![LaurentPoly::zero(); size]; size];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = LaurentPoly::constant(rat_int(c));
            }
            let expected = num::pow::pow(Rational::from_integer(c.into()), size);
            let det = laurent_det(&m).unwrap();
            if expected.is_zero() {
                prop_assert!(det.is_zero());
            } else {
                prop_assert_eq!(det, LaurentPoly::constant(expected));
            }
        }
    }
}
