//! Smith normal form over the integers.
//!
//! Elimination first runs on `i64` with checked arithmetic; if any step would
//! overflow, the whole computation is redone on `BigInt`.

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T = i64> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone + Zero> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }
}

impl<T: Clone> Matrix<T> {
    /// Panics if the rows have different lengths.
    pub fn from_rows(rows: Vec<Vec<T>>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        Self {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        if self.cols == 0 {
            return vec![Vec::new(); self.rows];
        }
        self.data.chunks(self.cols).map(<[T]>::to_vec).collect()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl Matrix<i64> {
    pub fn to_big(&self) -> Matrix<BigInt> {
        self.map(|&x| BigInt::from(x))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    /// `self · other`, or `None` on overflow.
    pub fn checked_mul(&self, other: &Self) -> Option<Self> {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = *self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j).checked_add(a.checked_mul(*other.get(k, j))?)?;
                    out.set(i, j, v);
                }
            }
        }
        Some(out)
    }

    pub fn block(top_left: &Self, top_right: &Self, bottom_left: &Self, bottom_right: &Self) -> Self {
        assert_eq!(top_left.rows, top_right.rows);
        assert_eq!(bottom_left.rows, bottom_right.rows);
        assert_eq!(top_left.cols, bottom_left.cols);
        assert_eq!(top_right.cols, bottom_right.cols);
        let (rows, cols) = (top_left.rows + bottom_left.rows, top_left.cols + top_right.cols);
        let mut out = Self::zeros(rows, cols);
        for (m, r0, c0) in [
            (top_left, 0, 0),
            (top_right, 0, top_left.cols),
            (bottom_left, top_left.rows, 0),
            (bottom_right, top_left.rows, top_left.cols),
        ] {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r0 + r, c0 + c, *m.get(r, c));
                }
            }
        }
        out
    }
}

impl Matrix<BigInt> {
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &Matrix<BigInt>) -> BigInt {
    assert_eq!(m.rows, m.cols, "determinant of a non-square matrix");
    let n = m.rows;
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a.get(k, k).is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return BigInt::zero();
            };
            for c in 0..n {
                a.data.swap(k * n + c, p * n + c);
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                a.set(i, j, v);
            }
        }
        prev = a.get(k, k).clone();
    }
    if n == 0 { BigInt::one() } else { sign * a.get(n - 1, n - 1) }
}

/// Arithmetic the elimination needs; `None` signals overflow.
trait Entry: Clone + PartialEq + Debug + Zero + One {
    fn smaller(&self, other: &Self) -> bool;
    fn negative(&self) -> bool;
    fn sub_mul(&self, q: &Self, y: &Self) -> Option<Self>;
    fn rem(&self, y: &Self) -> Option<Self>;
    fn quot(&self, y: &Self) -> Option<Self>;
    fn negated(&self) -> Option<Self>;
    fn big(&self) -> BigInt;
}

impl Entry for i64 {
    fn smaller(&self, other: &Self) -> bool {
        self.unsigned_abs() < other.unsigned_abs()
    }
    fn negative(&self) -> bool {
        *self < 0
    }
    fn sub_mul(&self, q: &Self, y: &Self) -> Option<Self> {
        self.checked_sub(q.checked_mul(*y)?)
    }
    fn rem(&self, y: &Self) -> Option<Self> {
        self.checked_rem(*y)
    }
    fn quot(&self, y: &Self) -> Option<Self> {
        self.checked_div(*y)
    }
    fn negated(&self) -> Option<Self> {
        self.checked_neg()
    }
    fn big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Entry for BigInt {
    fn smaller(&self, other: &Self) -> bool {
        self.abs() < other.abs()
    }
    fn negative(&self) -> bool {
        self.is_negative()
    }
    fn sub_mul(&self, q: &Self, y: &Self) -> Option<Self> {
        Some(self - q * y)
    }
    fn rem(&self, y: &Self) -> Option<Self> {
        Some(self % y)
    }
    fn quot(&self, y: &Self) -> Option<Self> {
        Some(self / y)
    }
    fn negated(&self) -> Option<Self> {
        Some(-self)
    }
    fn big(&self) -> BigInt {
        self.clone()
    }
}

/// `M = left · D · right` with `D` diagonal, nonnegative, each entry dividing
/// the next, and `left`, `right` unimodular.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    /// `min(rows, cols)` entries, zeros last.
    pub diagonal: Vec<BigInt>,
    pub left: Matrix<BigInt>,
    pub right: Matrix<BigInt>,
    /// Whether the `i64` pass overflowed and `BigInt` was used.
    pub escalated: bool,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Diagonal entries greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| **d > BigInt::one()).cloned().collect()
    }

    pub fn diagonal_matrix(&self) -> Matrix<BigInt> {
        let mut d = Matrix::zeros(self.left.cols, self.right.rows);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }

    /// Recomputes `left · D · right`.
    pub fn recompose(&self) -> Matrix<BigInt> {
        self.left.mul(&self.diagonal_matrix()).mul(&self.right)
    }
}

struct Elimination<T> {
    a: Matrix<T>,
    left: Matrix<T>,
    right: Matrix<T>,
}

impl<T: Entry> Elimination<T> {
    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let c = self.a.cols;
        for k in 0..c {
            self.a.data.swap(i * c + k, j * c + k);
        }
        // left · E⁻¹ swaps columns i, j
        let n = self.left.cols;
        for r in 0..self.left.rows {
            self.left.data.swap(r * n + i, r * n + j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        let c = self.a.cols;
        for r in 0..self.a.rows {
            self.a.data.swap(r * c + i, r * c + j);
        }
        let n = self.right.cols;
        for k in 0..n {
            self.right.data.swap(i * n + k, j * n + k);
        }
    }

    /// row_i -= q · row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &T) -> Option<()> {
        for k in 0..self.a.cols {
            let v = self.a.get(i, k).sub_mul(q, self.a.get(j, k))?;
            self.a.set(i, k, v);
        }
        // left · E⁻¹: column j += q · column i
        for r in 0..self.left.rows {
            let v = self.left.get(r, j).sub_mul(&q.negated()?, self.left.get(r, i))?;
            self.left.set(r, j, v);
        }
        Some(())
    }

    /// col_i -= q · col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &T) -> Option<()> {
        for r in 0..self.a.rows {
            let v = self.a.get(r, i).sub_mul(q, self.a.get(r, j))?;
            self.a.set(r, i, v);
        }
        // F⁻¹ · right: row j += q · row i
        for k in 0..self.right.cols {
            let v = self.right.get(j, k).sub_mul(&q.negated()?, self.right.get(i, k))?;
            self.right.set(j, k, v);
        }
        Some(())
    }

    fn negate_row(&mut self, i: usize) -> Option<()> {
        for k in 0..self.a.cols {
            let v = self.a.get(i, k).negated()?;
            self.a.set(i, k, v);
        }
        for r in 0..self.left.rows {
            let v = self.left.get(r, i).negated()?;
            self.left.set(r, i, v);
        }
        Some(())
    }

    fn smallest_in(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for r in t..self.a.rows {
            for c in t..self.a.cols {
                let x = self.a.get(r, c);
                if !x.is_zero() && best.is_none_or(|(br, bc)| x.smaller(self.a.get(br, bc))) {
                    best = Some((r, c));
                }
            }
        }
        best
    }

    fn run(mut self) -> Option<Self> {
        let diag = self.a.rows.min(self.a.cols);
        for t in 0..diag {
            let Some((r, c)) = self.smallest_in(t) else { break };
            self.swap_rows(t, r);
            self.swap_cols(t, c);
            loop {
                let pivot = self.a.get(t, t).clone();
                let mut dirty = false;
                for i in t + 1..self.a.rows {
                    if !self.a.get(i, t).is_zero() {
                        let q = self.a.get(i, t).quot(&pivot)?;
                        self.row_sub(i, t, &q)?;
                        dirty |= !self.a.get(i, t).is_zero();
                    }
                }
                for j in t + 1..self.a.cols {
                    if !self.a.get(t, j).is_zero() {
                        let q = self.a.get(t, j).quot(&pivot)?;
                        self.col_sub(j, t, &q)?;
                        dirty |= !self.a.get(t, j).is_zero();
                    }
                }
                if dirty {
                    // a remainder is now smaller than the pivot
                    let (r, c) = self.smallest_in(t).expect("nonzero remainder");
                    self.swap_rows(t, r);
                    self.swap_cols(t, c);
                    continue;
                }
                // enforce divisibility of the remaining block
                let bad = (t + 1..self.a.rows)
                    .flat_map(|i| (t + 1..self.a.cols).map(move |j| (i, j)))
                    .find(|&(i, j)| {
                        self.a.get(i, j).rem(&pivot).is_some_and(|r| !r.is_zero())
                    });
                match bad {
                    Some((i, _)) => {
                        // row_t += row_i brings the offending entry into row t
                        self.row_sub(t, i, &T::one().negated()?)?;
                    }
                    None => break,
                }
            }
            if self.a.get(t, t).negative() {
                self.negate_row(t)?;
            }
        }
        Some(self)
    }
}

fn eliminate<T: Entry>(m: Matrix<T>) -> Option<(Vec<BigInt>, Matrix<BigInt>, Matrix<BigInt>)> {
    let (rows, cols) = (m.rows, m.cols);
    let done = Elimination {
        a: m,
        left: Matrix::identity(rows),
        right: Matrix::identity(cols),
    }
    .run()?;
    let diagonal = (0..rows.min(cols)).map(|i| done.a.get(i, i).big()).collect();
    Some((diagonal, done.left.map(Entry::big), done.right.map(Entry::big)))
}

pub fn smith_normal_form(m: &Matrix<i64>) -> SnfResult {
    match eliminate(m.clone()) {
        Some((diagonal, left, right)) => SnfResult {
            diagonal,
            left,
            right,
            escalated: false,
        },
        None => smith_normal_form_big(&m.to_big(), true),
    }
}

pub fn smith_normal_form_big(m: &Matrix<BigInt>, escalated: bool) -> SnfResult {
    let (diagonal, left, right) = eliminate(m.clone()).expect("BigInt arithmetic cannot overflow");
    SnfResult {
        diagonal,
        left,
        right,
        escalated,
    }
}
