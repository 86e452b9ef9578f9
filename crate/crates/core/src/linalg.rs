//! Exact rational matrices for the small linear algebra behind graded
//! representations: products, reduced row echelon form, kernels, and
//! quotients. Sizes stay tiny, so clarity wins over cleverness.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rat = BigRational;

pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// A dense rows × cols rational matrix acting on column vectors, so a linear
/// map from a c-dimensional space to an r-dimensional one is r × c and maps
/// compose by left multiplication.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Mat{}x{}[", self.rows, self.cols)?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rat::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, f(i, j));
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

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rat) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rat] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.at(i, j).is_one()
                    } else {
                        self.at(i, j).is_zero()
                    }
                })
            })
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "dimension mismatch in product");
        let mut out = Mat::zeros(self.rows, other.cols);
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
                    let cur = out.at(i, j) + a * b;
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x += y;
        }
        out
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (x, y) in out.data.iter_mut().zip(&other.data) {
            *x -= y;
        }
        out
    }

    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&i| !m.at(i, col).is_zero()) else {
                continue;
            };
            m.data.swap_chunks(row, p, m.cols);
            let inv = m.at(row, col).recip();
            for j in col..m.cols {
                let v = m.at(row, j) * &inv;
                m.set(row, j, v);
            }
            for i in 0..m.rows {
                if i == row || m.at(i, col).is_zero() {
                    continue;
                }
                let factor = m.at(i, col).clone();
                for j in col..m.cols {
                    let v = m.at(i, j) - &factor * m.at(row, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right nullspace {x : Mx = 0}, as rows, together with the
    /// free columns. Each basis vector has a 1 at "its" free column and 0 at
    /// the others, so the coordinates of any kernel member are its entries
    /// at the free columns.
    pub fn nullspace(&self) -> SubspaceBasis {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            basis.set(k, fc, Rat::one());
            for (i, &pc) in pivots.iter().enumerate() {
                basis.set(k, pc, -r.at(i, fc).clone());
            }
        }
        SubspaceBasis { basis, coord_cols: free }
    }
}

trait SwapChunks {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize);
}

impl SwapChunks for Vec<Rat> {
    fn swap_chunks(&mut self, a: usize, b: usize, width: usize) {
        if a == b {
            return;
        }
        let (lo, hi) = (a.min(b), a.max(b));
        let (left, right) = self.split_at_mut(hi * width);
        left[lo * width..(lo + 1) * width].swap_with_slice(&mut right[..width]);
    }
}

/// A subspace given by basis rows whose coordinates can be read off the
/// listed columns: for v in the span, v = Σ v[coord_cols[i]] · basis_i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubspaceBasis {
    pub basis: Mat,
    pub coord_cols: Vec<usize>,
}

impl SubspaceBasis {
    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn coords(&self, v: &[Rat]) -> Vec<Rat> {
        self.coord_cols.iter().map(|&c| v[c].clone()).collect()
    }
}

/// A row space kept in reduced echelon form, supporting incremental closure
/// and quotient construction.
#[derive(Debug, Clone)]
pub struct RowSpace {
    n: usize,
    /// Rows in echelon form with strictly increasing pivots; all normalized.
    rows: Vec<Vec<Rat>>,
    pivots: Vec<usize>,
}

impl RowSpace {
    pub fn new(n: usize) -> Self {
        RowSpace { n, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Residual of v after reduction by the current basis.
    pub fn reduce(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.n);
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for j in p..self.n {
                let val = &out[j] - &factor * &row[j];
                out[j] = val;
            }
        }
        out
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Inserts v, returning true if the space grew.
    pub fn insert(&mut self, v: &[Rat]) -> bool {
        let mut red = self.reduce(v);
        let Some(p) = red.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = red[p].recip();
        for x in red.iter_mut() {
            *x *= &inv;
        }
        // Back-substitute into existing rows, then keep pivots increasing.
        for (row, &rp) in self.rows.iter_mut().zip(&self.pivots) {
            debug_assert!(rp != p);
            if row[p].is_zero() {
                continue;
            }
            let factor = row[p].clone();
            for j in 0..self.n {
                let val = &row[j] - &factor * &red[j];
                row[j] = val;
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, red);
        true
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Projection ℚⁿ → ℚⁿ⁻ʳ onto the quotient by this space: reduce, then
    /// read off the non-pivot coordinates.
    pub fn quotient_proj(&self) -> Mat {
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        let mut proj = Mat::zeros(free.len(), self.n);
        for j in 0..self.n {
            let mut unit = vec![Rat::zero(); self.n];
            unit[j] = Rat::one();
            let red = self.reduce(&unit);
            for (i, &fc) in free.iter().enumerate() {
                proj.set(i, j, red[fc].clone());
            }
        }
        proj
    }

    /// Section ℚⁿ⁻ʳ → ℚⁿ of the projection, choosing the non-pivot unit
    /// vectors as representatives.
    pub fn quotient_lift(&self) -> Mat {
        let free: Vec<usize> = (0..self.n).filter(|c| !self.pivots.contains(c)).collect();
        let mut lift = Mat::zeros(self.n, free.len());
        for (k, &fc) in free.iter().enumerate() {
            lift.set(fc, k, Rat::one());
        }
        lift
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect())
    }

    #[test]
    fn product_and_identity() {
        let a = m(&[&[1, 2], &[3, 4]]);
        let i = Mat::identity(2);
        assert_eq!(a.mul(&i), a);
        assert_eq!(i.mul(&a), a);
        let b = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), m(&[&[2, 1], &[4, 3]]));
    }

    #[test]
    fn rref_and_rank() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let (r, pivots) = a.rref();
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(a.rank(), 2);
        // Echelon rows: x + z·(−1)… check exact reduced form.
        assert_eq!(r.row(0), &[rat(1, 1), rat(0, 1), rat(-1, 1)]);
        assert_eq!(r.row(1), &[rat(0, 1), rat(1, 1), rat(2, 1)]);
        assert!(r.row(2).iter().all(|x| x.is_zero()));
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 1, 1]]);
        let ns = a.nullspace();
        assert_eq!(ns.dim(), 1);
        for i in 0..ns.dim() {
            let v: Vec<Rat> = ns.basis.row(i).to_vec();
            assert!(a.apply(&v).iter().all(|x| x.is_zero()));
            // Coordinates recover the row itself.
            let coords = ns.coords(&v);
            assert_eq!(coords.len(), 1);
            assert!(coords[0].is_one());
        }
    }

    #[test]
    fn rowspace_insert_and_quotient() {
        let mut s = RowSpace::new(3);
        assert!(s.insert(&[rat(1, 1), rat(1, 1), rat(0, 1)]));
        assert!(s.insert(&[rat(0, 1), rat(1, 1), rat(1, 1)]));
        assert!(!s.insert(&[rat(1, 1), rat(2, 1), rat(1, 1)]));
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&[rat(2, 1), rat(3, 1), rat(1, 1)]));

        let proj = s.quotient_proj();
        let lift = s.quotient_lift();
        assert_eq!(proj.rows(), 1);
        // proj ∘ lift = identity on the quotient.
        assert!(proj.mul(&lift).is_identity());
        // Members project to zero.
        for i in 0..2 {
            let v: Vec<Rat> = s.rows[i].clone();
            assert!(proj.apply(&v).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn fractions_stay_exact() {
        let a = Mat::from_rows(vec![vec![rat(1, 3), rat(1, 6)], vec![rat(1, 2), rat(1, 4)]]);
        assert_eq!(a.rank(), 1);
        let ns = a.nullspace();
        assert_eq!(ns.dim(), 1);
        let v = ns.basis.row(0).to_vec();
        assert!(a.apply(&v).iter().all(|x| x.is_zero()));
    }
}
