//! Dense exact matrices over cyclotomic fields.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::cyclotomic::{CycNum, CyclotomicField};

/// Row-major dense matrix with `CycNum` entries.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixRepr", into = "MatrixRepr")]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<CycNum>,
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<CycNum>>,
}

impl TryFrom<MatrixRepr> for ExactMatrix {
    type Error = String;
    fn try_from(r: MatrixRepr) -> Result<Self, String> {
        if r.entries.len() != r.rows || r.entries.iter().any(|row| row.len() != r.cols) {
            return Err(format!("matrix grid is not {}x{}", r.rows, r.cols));
        }
        Ok(ExactMatrix {
            rows: r.rows,
            cols: r.cols,
            data: r.entries.into_iter().flatten().collect(),
        })
    }
}

impl From<ExactMatrix> for MatrixRepr {
    fn from(m: ExactMatrix) -> Self {
        let entries = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
        MatrixRepr {
            rows: m.rows,
            cols: m.cols,
            entries,
        }
    }
}

/// Result of reducing a matrix to reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub rref: ExactMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the right nullspace, one vector per free column.
    ///
    /// The vector attached to free column `f` has a 1 at `f` and zeros at the
    /// other free columns, so coordinates of any kernel vector in this basis
    /// are simply its entries at the free columns.
    pub fn nullspace(&self) -> Vec<Vec<CycNum>> {
        let cols = self.rref.cols;
        let zero = self.rref.zero_like();
        let mut is_pivot = vec![false; cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![zero.clone(); cols];
                v[f] = zero.field().one();
                for (r, &p) in self.pivots.iter().enumerate() {
                    v[p] = -self.rref.get(r, f);
                }
                v
            })
            .collect()
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.rref.cols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.rref.cols).filter(|&f| !is_pivot[f]).collect()
    }
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize, field: &Arc<CyclotomicField>) -> Self {
        ExactMatrix {
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(n: usize, field: &Arc<CyclotomicField>) -> Self {
        let mut m = Self::zeros(n, n, field);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<CycNum>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> CycNum,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &CycNum {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: CycNum) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[CycNum] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<CycNum> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = &CycNum> {
        self.data.iter()
    }

    /// A zero in the field of the entries (conductor 1 for an empty matrix).
    fn zero_like(&self) -> CycNum {
        self.data
            .iter()
            .max_by_key(|x| x.conductor())
            .map(|x| x.field().zero())
            .unwrap_or_else(CycNum::zero)
    }

    pub fn transpose(&self) -> ExactMatrix {
        ExactMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(CycNum::is_zero)
    }

    pub fn trace(&self) -> CycNum {
        assert_eq!(self.rows, self.cols);
        (0..self.rows).fold(self.zero_like(), |acc, i| acc + self.get(i, i))
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let zero = self.zero_like();
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            let row = self.row(i);
            for j in 0..other.cols {
                let mut acc = zero.clone();
                for (k, a) in row.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        acc = acc + a * b;
                    }
                }
                out.push(acc);
            }
        }
        ExactMatrix {
            rows: self.rows,
            cols: other.cols,
            data: out,
        }
    }

    pub fn mul_vec(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(self.cols, v.len());
        let zero = self.zero_like();
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(zero.clone(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, s: &CycNum) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * s).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(&CycNum) -> CycNum) -> ExactMatrix {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &ExactMatrix) -> ExactMatrix {
        let (r2, c2) = (other.rows, other.cols);
        ExactMatrix::from_fn(self.rows * r2, self.cols * c2, |i, j| {
            let a = self.get(i / r2, j / c2);
            if a.is_zero() {
                return a.clone();
            }
            a * other.get(i % r2, j % c2)
        })
    }

    /// Stacks `self` on top of `other`.
    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    /// Reduced row echelon form by Gaussian elimination, pivoting on the
    /// first nonzero entry of each column.
    pub fn echelon(&self) -> Echelon {
        let mut rows: Vec<Vec<CycNum>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv().expect("nonzero pivot");
            let pivot_row: Vec<CycNum> = rows[rank]
                .iter()
                .map(|x| if x.is_zero() { x.clone() } else { x * &inv })
                .collect();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == rank || row[col].is_zero() {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
            rows[rank] = pivot_row;
            pivots.push(col);
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        Echelon {
            rref: ExactMatrix::from_rows_sized(rows, self.rows, self.cols),
            pivots,
        }
    }

    fn from_rows_sized(rows: Vec<Vec<CycNum>>, r: usize, c: usize) -> Self {
        ExactMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Rank by forward elimination only.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<CycNum>> = (0..self.rows).map(|i| self.row(i).to_vec()).collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..self.rows).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv().expect("nonzero pivot");
            let (top, bottom) = rows.split_at_mut(rank + 1);
            let pivot_row = &top[rank];
            for row in bottom.iter_mut() {
                if row[col].is_zero() {
                    continue;
                }
                let factor = &row[col] * &inv;
                for (x, p) in row.iter_mut().zip(pivot_row).skip(col) {
                    if !p.is_zero() {
                        *x = &*x - &(&factor * p);
                    }
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }
}

/// `(rank, nullspace basis)` of `m`; every returned `v` satisfies `m·v = 0`.
pub fn rank_nullspace(m: &ExactMatrix) -> (usize, Vec<Vec<CycNum>>) {
    let e = m.echelon();
    (e.rank(), e.nullspace())
}

/// Canonical reduced echelon basis of the span of `vectors` (zero rows dropped).
pub fn span_rref(vectors: &[Vec<CycNum>]) -> Vec<Vec<CycNum>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let e = ExactMatrix::from_rows(vectors.to_vec()).echelon();
    (0..e.rank()).map(|i| e.rref.row(i).to_vec()).collect()
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;
    use num_bigint::BigInt;
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn q(n: i64, d: i64) -> CycNum {
        CycNum::from_rational(&rat(n, d))
    }

    /// Bareiss fraction-free elimination over Z, independent of the field code.
    fn bareiss_rank(mut a: Vec<Vec<BigInt>>) -> usize {
        let rows = a.len();
        let cols = a[0].len();
        let mut prev = BigInt::from(1);
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(rank, p);
            for r in rank + 1..rows {
                for c in col + 1..cols {
                    let v = &a[rank][col] * &a[r][c] - &a[r][col] * &a[rank][c];
                    a[r][c] = v / &prev;
                }
                a[r][col] = BigInt::zero();
            }
            prev = a[rank][col].clone();
            rank += 1;
        }
        rank
    }

    #[test]
    fn identity_has_full_rank() {
        let f = CyclotomicField::new(1);
        let (r, ns) = rank_nullspace(&ExactMatrix::identity(3, &f));
        assert_eq!(r, 3);
        assert!(ns.is_empty());
    }

    #[test]
    fn nullspace_vectors_are_annihilated() {
        let z = CycNum::zeta(8, 1);
        let m = ExactMatrix::from_rows(vec![
            vec![q(1, 1), z.clone(), &z * &z],
            vec![z.clone(), &z * &z, &z * &(&z * &z)],
        ]);
        let (r, ns) = rank_nullspace(&m);
        assert_eq!(r, 1);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(m.mul_vec(v).iter().all(CycNum::is_zero));
        }
    }

    #[test]
    fn random_rational_ranks_match_fraction_free_oracle() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for trial in 0..40 {
            let n = 6;
            // build low-rank matrices half of the time
            let k = if trial % 2 == 0 { n } else { rng.gen_range(1..n) };
            let left: Vec<Vec<i64>> = (0..n).map(|_| (0..k).map(|_| rng.gen_range(-4..5)).collect()).collect();
            let right: Vec<Vec<i64>> = (0..k).map(|_| (0..n).map(|_| rng.gen_range(-4..5)).collect()).collect();
            let dens: Vec<i64> = (0..n).map(|_| rng.gen_range(1..6)).collect();
            let mut ints = vec![vec![BigInt::zero(); n]; n];
            let mut rats = vec![vec![CycNum::zero(); n]; n];
            for i in 0..n {
                for j in 0..n {
                    let v: i64 = (0..k).map(|t| left[i][t] * right[t][j]).sum();
                    ints[i][j] = BigInt::from(v);
                    // row scaling by 1/den does not change rank
                    rats[i][j] = q(v, dens[i]);
                }
            }
            let m = ExactMatrix::from_rows(rats);
            let expected = bareiss_rank(ints);
            assert_eq!(m.rank(), expected);
            let (r, ns) = rank_nullspace(&m);
            assert_eq!(r, expected);
            assert_eq!(r + ns.len(), n);
        }
    }

    #[test]
    fn kron_and_trace() {
        let a = ExactMatrix::from_rows(vec![vec![q(1, 1), q(2, 1)], vec![q(3, 1), q(4, 1)]]);
        let b = ExactMatrix::from_rows(vec![vec![q(0, 1), q(1, 1)], vec![q(1, 1), q(0, 1)]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 4);
        assert_eq!(k.get(1, 2), &q(2, 1));
        assert_eq!(k.trace(), q(0, 1));
        assert_eq!(a.mul(&b).get(0, 0), &q(2, 1));
    }

    #[test]
    fn span_rref_is_canonical() {
        let a = vec![vec![q(2, 1), q(4, 1)], vec![q(1, 1), q(3, 1)]];
        let b = vec![vec![q(1, 1), q(0, 1)], vec![q(0, 1), q(-5, 1)]];
        assert_eq!(span_rref(&a), span_rref(&b));
    }

    #[test]
    fn json_grid_round_trip() {
        let a = ExactMatrix::from_rows(vec![vec![q(1, 2), CycNum::zeta(8, 3)]]);
        let s = serde_json::to_string(&a).unwrap();
        let b: ExactMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<ExactMatrix>(r#"{"rows":2,"cols":1,"entries":[]}"#).is_err());
    }
}
