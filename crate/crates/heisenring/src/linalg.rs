//! Dense matrices over [`Scalar`] with exact Gauss–Jordan elimination, plus a
//! small integer matrix type backing the representation tables.
//!
//! Pivot selection is first-nonzero in exact mode and magnitude-thresholded
//! (1e-9) in float mode, so ranks and nullspaces are deterministic.

use crate::scalar::Scalar;

/// Row-major dense matrix of scalars.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Scalar::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Mat { rows, cols, data }
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Scalar {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix dimension mismatch");
        let mut out = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *out.at_mut(i, j) = out.at(i, j) + &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + other.at(i, j))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - other.at(i, j))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).conj())
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Vertical concatenation.
    pub fn vcat(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.cols);
        Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        })
    }

    pub fn columns(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.rows, idx.len(), |i, j| self.at(i, idx[j]).clone())
    }

    /// In-place reduction to reduced row echelon form; returns pivot columns.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = self.pick_pivot(r, c) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.at(r, c).inv().expect("pivot is nonzero");
            for j in c..self.cols {
                *self.at_mut(r, j) = self.at(r, j) * &inv;
            }
            for i in 0..self.rows {
                if i == r || self.at(i, c).is_zero() {
                    continue;
                }
                let factor = self.at(i, c).clone();
                for j in c..self.cols {
                    let upd = self.at(i, j) - &(&factor * self.at(r, j));
                    *self.at_mut(i, j) = upd;
                }
            }
            pivots.push(c);
            r += 1;
        }
        // Clean residual float noise below the current profile.
        pivots
    }

    fn pick_pivot(&self, from_row: usize, col: usize) -> Option<usize> {
        let exact = self.at(from_row, col).is_exact();
        if exact {
            (from_row..self.rows).find(|&i| !self.at(i, col).is_zero())
        } else {
            // Float mode: largest magnitude above the tolerance.
            let mut best: Option<(usize, f64)> = None;
            for i in from_row..self.rows {
                let (re, im) = self.at(i, col).to_f64_pair();
                let mag = (re * re + im * im).sqrt();
                if mag > crate::scalar::FLOAT_TOL && best.is_none_or(|(_, m)| mag > m) {
                    best = Some((i, mag));
                }
            }
            best.map(|(i, _)| i)
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace, one column vector per basis element,
    /// in the canonical reduced-echelon parameterization (free variable 1).
    pub fn nullspace(&self) -> Vec<Vec<Scalar>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let piv_of_col: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut vec = vec![Scalar::zero(); self.cols];
            vec[free] = Scalar::one();
            for (row, &c) in pivots.iter().enumerate() {
                vec[c] = -r.at(row, free);
            }
            basis.push(vec);
        }
        basis
    }

    /// Column-space basis: the pivot columns of `self`.
    pub fn column_space_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        self.columns(&pivots)
    }

    /// Inverse of a square invertible matrix.
    pub fn inverse(&self) -> Option<Mat> {
        assert_eq!(self.rows, self.cols);
        let aug = self.hcat(&Mat::identity(self.rows));
        let (r, pivots) = aug.rref();
        if pivots.len() != self.rows || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        Some(Mat::from_fn(self.rows, self.cols, |i, j| {
            r.at(i, self.cols + j).clone()
        }))
    }

    /// Solves `self * X = rhs` when `self` has full column rank.
    pub fn solve_full_col_rank(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hcat(rhs);
        let (r, pivots) = aug.rref();
        let lead: Vec<usize> = pivots.iter().copied().filter(|&c| c < self.cols).collect();
        if lead.len() != self.cols {
            return None;
        }
        // Consistency: no pivot may fall in the augmented block.
        if pivots.len() != self.cols {
            return None;
        }
        Some(Mat::from_fn(self.cols, rhs.cols, |i, j| {
            r.at(i, self.cols + j).clone()
        }))
    }

    /// Orthogonal-style projector onto the column space: `B (B*B)^{-1} B*`
    /// for a column basis `B`. Acts as the identity on the column space.
    pub fn column_space_projector(&self) -> Mat {
        let basis = self.column_space_basis();
        if basis.cols == 0 {
            return Mat::zero(self.rows, self.rows);
        }
        let gram = basis.adjoint().mul(&basis);
        let gram_inv = gram
            .inverse()
            .expect("Gram matrix of a basis is invertible");
        basis.mul(&gram_inv).mul(&basis.adjoint())
    }

    pub fn trace(&self) -> Scalar {
        assert_eq!(self.rows, self.cols);
        let mut t = Scalar::zero();
        for i in 0..self.rows {
            t = &t + self.at(i, i);
        }
        t
    }

    pub fn to_float(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j).to_float())
    }
}

/// Small dense integer matrix; entries of Young's natural representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IMat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<i64>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IMat {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IMat::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if b == 0 {
                        continue;
                    }
                    let cur = out.at(i, j);
                    out.set(
                        i,
                        j,
                        cur.checked_add(a.checked_mul(b).expect("integer overflow in rep matrix"))
                            .expect("integer overflow in rep matrix"),
                    );
                }
            }
        }
        out
    }

    pub fn to_mat(&self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| Scalar::from_int(self.at(i, j)))
    }

    /// trace(self · m) for a scalar matrix `m` of matching square shape.
    pub fn trace_product(&self, m: &Mat) -> Scalar {
        assert_eq!(self.cols, m.rows);
        assert_eq!(self.rows, m.cols);
        let mut acc = Scalar::zero();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let k = self.at(i, j);
                if k == 0 {
                    continue;
                }
                acc = &acc + &m.at(j, i).mul_i64(k);
            }
        }
        acc
    }
}
