//! Partitions, tableaux and Specht modules for symmetric groups.
//!
//! Vectors live in tabloid coordinates; the distinguished basis is the set
//! of standard polytabloids. Conversion back to polytabloid coordinates is
//! an exact linear solve against the polytabloid matrix (the dimensions in
//! play here are tiny). The bilinear form is the tabloid-delta form, which
//! takes integer values on polytabloids and is invariant under the
//! symmetric-group action.

use std::collections::HashMap;

use num::Zero;

use crate::error::{KmyError, Result};
use crate::ring::Rational;

/// A partition: weakly decreasing positive parts. The empty partition is
/// allowed and labels the trivial module of the trivial group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(KmyError::BadCellIndex("partition with a zero part".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(KmyError::BadCellIndex(format!("parts {parts:?} not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All partitions of m.
    pub fn all(m: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for next in (1..=remaining.min(max)).rev() {
                cur.push(next);
                rec(remaining - next, next, cur, out);
                cur.pop();
            }
        }
        rec(m, m.max(1), &mut cur, &mut out);
        out
    }

    /// Partitions obtained by adding one box, in row order.
    pub fn with_added_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..=self.parts.len() {
            let here = self.parts.get(row).copied().unwrap_or(0);
            let above = if row == 0 { usize::MAX } else { self.parts[row - 1] };
            if here < above {
                let mut parts = self.parts.clone();
                if row == parts.len() {
                    parts.push(1);
                } else {
                    parts[row] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by removing one box, in row order.
    pub fn with_removed_box(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for row in 0..self.parts.len() {
            let below = self.parts.get(row + 1).copied().unwrap_or(0);
            if self.parts[row] > below {
                let mut parts = self.parts.clone();
                parts[row] -= 1;
                if parts[row] == 0 {
                    parts.remove(row);
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Dimension of the Specht module by the hook length formula.
    pub fn hook_dim(&self) -> usize {
        let m = self.size();
        if m == 0 {
            return 1;
        }
        let conj: Vec<usize> =
            (0..self.parts[0]).map(|c| self.parts.iter().filter(|&&p| p > c).count()).collect();
        let mut numer: u128 = 1;
        for k in 1..=m {
            numer *= k as u128;
        }
        let mut denom: u128 = 1;
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 0..len {
                let hook = (len - c) + (conj[c] - r) - 1;
                denom *= hook as u128;
            }
        }
        (numer / denom) as usize
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "[]");
        }
        write!(f, "[{}]", self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Rows of a tabloid or tableau; entries are 1-based. Tabloid rows are kept
/// sorted; tableau rows carry their filling order.
pub type Rows = Vec<Vec<usize>>;

fn canonical_tabloid(mut rows: Rows) -> Rows {
    for row in rows.iter_mut() {
        row.sort_unstable();
    }
    rows
}

fn apply_perm_to_rows(sigma: &[usize], rows: &Rows) -> Rows {
    canonical_tabloid(
        rows.iter().map(|row| row.iter().map(|&e| sigma[e - 1] + 1).collect()).collect(),
    )
}

/// The Specht module S^lambda with its tabloid basis and standard
/// polytabloid basis.
#[derive(Debug, Clone)]
pub struct SpechtModule {
    lambda: Partition,
    tabloids: Vec<Rows>,
    tabloid_index: HashMap<Rows, usize>,
    standard: Vec<Rows>,
    /// Column j = polytabloid of standard tableau j, in tabloid coordinates.
    poly_matrix: Vec<Vec<Rational>>,
    /// Gram matrix of the polytabloid basis under the tabloid-delta form.
    gram: Vec<Vec<Rational>>,
}

impl SpechtModule {
    pub fn new(lambda: Partition) -> Self {
        let m = lambda.size();
        let tabloids = enumerate_tabloids(lambda.parts(), m);
        let tabloid_index: HashMap<Rows, usize> =
            tabloids.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
        let standard = enumerate_standard_tableaux(lambda.parts());
        let mut poly_matrix = vec![vec![Rational::zero(); standard.len()]; tabloids.len()];
        for (j, tableau) in standard.iter().enumerate() {
            for (rows, sign) in polytabloid_terms(tableau) {
                let i = tabloid_index[&rows];
                poly_matrix[i][j] += Rational::from_integer(sign.into());
            }
        }
        let dim = standard.len();
        let mut gram = vec![vec![Rational::zero(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                let mut acc = Rational::zero();
                for row in &poly_matrix {
                    acc += &row[a] * &row[b];
                }
                gram[a][b] = acc;
            }
        }
        SpechtModule { lambda, tabloids, tabloid_index, standard, poly_matrix, gram }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn dim(&self) -> usize {
        self.standard.len()
    }

    pub fn tabloid_count(&self) -> usize {
        self.tabloids.len()
    }

    pub fn standard_tableaux(&self) -> &[Rows] {
        &self.standard
    }

    /// Gram matrix of the polytabloid basis; integral, symmetric.
    pub fn gram(&self) -> &Vec<Vec<Rational>> {
        &self.gram
    }

    /// Tabloid coordinates of the polytabloid basis vector `j`.
    pub fn polytabloid(&self, j: usize) -> SpechtVector {
        SpechtVector { coords: self.poly_matrix.iter().map(|row| row[j].clone()).collect() }
    }

    /// Acts with sigma (0-based image array) on a vector in tabloid
    /// coordinates.
    pub fn act(&self, sigma: &[usize], v: &SpechtVector) -> Result<SpechtVector> {
        if sigma.len() != self.lambda.size() {
            return Err(KmyError::DegreeMismatch {
                expected: self.lambda.size(),
                got: sigma.len(),
            });
        }
        let mut coords = vec![Rational::zero(); self.tabloids.len()];
        for (i, c) in v.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = apply_perm_to_rows(sigma, &self.tabloids[i]);
            coords[self.tabloid_index[&image]] += c;
        }
        Ok(SpechtVector { coords })
    }

    /// Acts with sigma on polytabloid coordinates, landing back in
    /// polytabloid coordinates.
    pub fn act_on_basis_coords(
        &self,
        sigma: &[usize],
        coords: &[Rational],
    ) -> Result<Vec<Rational>> {
        let mut v = SpechtVector { coords: vec![Rational::zero(); self.tabloids.len()] };
        for (j, c) in coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, row) in self.poly_matrix.iter().enumerate() {
                if !row[j].is_zero() {
                    v.coords[i] += c * &row[j];
                }
            }
        }
        let moved = self.act(sigma, &v)?;
        self.to_polytabloid_coords(&moved)
    }

    /// Tabloid-delta inner product.
    pub fn inner(&self, v: &SpechtVector, w: &SpechtVector) -> Rational {
        v.coords.iter().zip(&w.coords).map(|(a, b)| a * b).fold(Rational::zero(), |s, x| s + x)
    }

    /// Inner product directly on polytabloid coordinates, through the
    /// precomputed Gram matrix.
    pub fn inner_basis_coords(&self, a: &[Rational], b: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += ai * &self.gram[i][j] * bj;
                }
            }
        }
        acc
    }

    /// Solves the (overdetermined) system `poly_matrix * c = v` exactly.
    pub fn to_polytabloid_coords(&self, v: &SpechtVector) -> Result<Vec<Rational>> {
        let rows = self.tabloids.len();
        let cols = self.standard.len();
        let mut aug: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                let mut row = self.poly_matrix[i].clone();
                row.push(v.coords[i].clone());
                row
            })
            .collect();
        let mut pivot_row = 0;
        let mut pivots = Vec::new();
        for col in 0..cols {
            let Some(p) = (pivot_row..rows).find(|&r| !aug[r][col].is_zero()) else {
                continue;
            };
            aug.swap(pivot_row, p);
            let lead = aug[pivot_row][col].clone();
            for x in aug[pivot_row].iter_mut() {
                *x = &*x / &lead;
            }
            for r in 0..rows {
                if r != pivot_row && !aug[r][col].is_zero() {
                    let f = aug[r][col].clone();
                    for c2 in 0..=cols {
                        let v2 = &aug[r][c2] - &f * &aug[pivot_row][c2];
                        aug[r][c2] = v2;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        for row in aug.iter().skip(pivot_row) {
            if !row[cols].is_zero() {
                return Err(KmyError::NotInSpan);
            }
        }
        if pivots.len() < cols {
            // The polytabloid matrix always has full column rank.
            return Err(KmyError::NotInSpan);
        }
        let mut out = vec![Rational::zero(); cols];
        for (r, &col) in pivots.iter().enumerate() {
            out[col] = aug[r][cols].clone();
        }
        Ok(out)
    }
}

/// Element of S^lambda in tabloid coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtVector {
    pub coords: Vec<Rational>,
}

/// All tabloids of the given shape: distributions of 1..m into rows of the
/// prescribed lengths.
fn enumerate_tabloids(parts: &[usize], m: usize) -> Vec<Rows> {
    if parts.is_empty() {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    let mut rows: Rows = parts.iter().map(|&len| Vec::with_capacity(len)).collect();
    fn rec(parts: &[usize], m: usize, next: usize, rows: &mut Rows, out: &mut Vec<Rows>) {
        if next > m {
            out.push(rows.clone());
            return;
        }
        for r in 0..parts.len() {
            if rows[r].len() < parts[r] {
                rows[r].push(next);
                rec(parts, m, next + 1, rows, out);
                rows[r].pop();
                // entries are placed in increasing order, so rows stay
                // sorted and no tabloid shows up twice
            }
        }
    }
    rec(parts, m, 1, &mut rows, &mut out);
    out.sort();
    out
}

/// Standard Young tableaux: entries increase along rows and down columns.
fn enumerate_standard_tableaux(parts: &[usize]) -> Vec<Rows> {
    if parts.is_empty() {
        return vec![Vec::new()];
    }
    let m: usize = parts.iter().sum();
    let mut rows: Rows = parts.iter().map(|&len| Vec::with_capacity(len)).collect();
    let mut out = Vec::new();
    fn rec(parts: &[usize], m: usize, next: usize, rows: &mut Rows, out: &mut Vec<Rows>) {
        if next > m {
            out.push(rows.clone());
            return;
        }
        for r in 0..parts.len() {
            let c = rows[r].len();
            if c < parts[r] && (r == 0 || rows[r - 1].len() > c) {
                rows[r].push(next);
                rec(parts, m, next + 1, rows, out);
                rows[r].pop();
            }
        }
    }
    rec(parts, m, 1, &mut rows, &mut out);
    out.sort();
    out
}

/// Terms of the polytabloid of a tableau: for every choice of a permutation
/// of each column, the signed row-sorted tabloid.
fn polytabloid_terms(tableau: &Rows) -> Vec<(Rows, i64)> {
    let ncols = tableau.first().map_or(0, |r| r.len());
    // cells[c] = list of (row, col) positions of column c, top to bottom
    let mut out: Vec<(Rows, i64)> = vec![(tableau.clone(), 1)];
    for c in 0..ncols {
        let positions: Vec<usize> =
            (0..tableau.len()).filter(|&r| tableau[r].len() > c).collect();
        let entries: Vec<usize> = positions.iter().map(|&r| tableau[r][c]).collect();
        let perms = permutations_with_sign(positions.len());
        let mut next = Vec::with_capacity(out.len() * perms.len());
        for (rows, sign) in &out {
            for (perm, psign) in &perms {
                let mut new_rows = rows.clone();
                for (i, &r) in positions.iter().enumerate() {
                    new_rows[r][c] = entries[perm[i]];
                }
                next.push((new_rows, sign * psign));
            }
        }
        out = next;
    }
    out.into_iter().map(|(rows, sign)| (canonical_tabloid(rows), sign)).collect()
}

/// All permutations of 0..k with signs, deterministic order.
pub fn permutations_with_sign(k: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    fn rec(cur: &mut Vec<usize>, fixed: usize, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if fixed == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in fixed..cur.len() {
            cur.swap(fixed, i);
            let s = if i == fixed { sign } else { -sign };
            rec(cur, fixed + 1, s, out);
            cur.swap(fixed, i);
        }
    }
    rec(&mut cur, 0, 1, &mut out);
    out.sort();
    out
}

/// All permutations of 0..k, deterministic order.
pub fn permutations(k: usize) -> Vec<Vec<usize>> {
    permutations_with_sign(k).into_iter().map(|(p, _)| p).collect()
}
