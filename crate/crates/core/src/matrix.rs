//! Dense matrices over arbitrary-precision integers.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Panics if the rows have unequal lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().cloned().map(Into::into));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    /// `u vᵀ`.
    pub fn outer(u: &[BigInt], v: &[BigInt]) -> Self {
        let mut m = Self::zeros(u.len(), v.len());
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                m.data[i * v.len() + j] = a * b;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: BigInt) {
        self.data[i * self.cols + j] = x;
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.data
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn scaled(&self, k: &BigInt) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * k).collect() }
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j) * &v[j]).sum())
            .collect()
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    /// Entries reduced into `0..modulus`.
    pub fn reduce_mod(&self, modulus: &BigInt) -> Self {
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x.mod_floor(modulus)).collect() }
    }

    /// Whether the matrix is the identity over `Z/modulus`.
    pub fn is_identity_mod(&self, modulus: &BigInt) -> bool {
        self.is_square() && self.reduce_mod(modulus) == Self::identity(self.rows).reduce_mod(modulus)
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut prev = BigInt::one();
        let mut rank = 0;
        for c in 0..cols {
            if rank == rows {
                break;
            }
            let Some(p) = (rank..rows).find(|&r| !a[r * cols + c].is_zero()) else {
                continue;
            };
            if p != rank {
                for j in 0..cols {
                    a.swap(p * cols + j, rank * cols + j);
                }
            }
            let pivot = a[rank * cols + c].clone();
            for r in rank + 1..rows {
                let factor = a[r * cols + c].clone();
                for j in c..cols {
                    let v = (&pivot * &a[r * cols + j] - &factor * &a[rank * cols + j]) / &prev;
                    a[r * cols + j] = v;
                }
            }
            prev = pivot;
            rank += 1;
        }
        rank
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> BigInt {
        self.data.iter().map(Signed::abs).max().unwrap_or_default()
    }
}

impl Add for &IntMatrix {
    type Output = IntMatrix;

    fn add(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect() }
    }
}

impl Sub for &IntMatrix {
    type Output = IntMatrix;

    fn sub(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "dimension mismatch");
        IntMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect() }
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            if i + 1 < self.rows {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}
