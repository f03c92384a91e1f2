use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::{AlgebraError, Gf3, Ring};

/// Dense square matrix, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    n: usize,
    entries: Vec<T>,
}

/// Square matrix over GF(3).
pub type Mat = Matrix<Gf3>;
/// Square matrix over ℤ.
pub type IntMat = Matrix<BigInt>;

impl<T: Ring> Matrix<T> {
    pub fn new(n: usize, entries: Vec<T>) -> Result<Self, AlgebraError> {
        if entries.len() != n * n {
            return Err(AlgebraError::NotSquare { order: n, len: entries.len() });
        }
        Ok(Matrix { n, entries })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        Matrix { n, entries }
    }

    pub fn zeros(n: usize) -> Self {
        Matrix { n, entries: vec![T::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix { n: self.n, entries: self.entries.iter().map(f).collect() }
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| a.clone() * c.clone())
    }

    pub fn neg(&self) -> Self {
        self.map(|a| -a.clone())
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.n != rhs.n {
            return Err(AlgebraError::OrderMismatch(self.n, rhs.n));
        }
        let n = self.n;
        Ok(Self::from_fn(n, |i, j| (0..n).fold(T::zero(), |acc, k| acc + self[(i, k)].clone() * rhs[(k, j)].clone())))
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let (a, n) = (self.n, self.n + other.n);
        Self::from_fn(n, |i, j| match (i < a, j < a) {
            (true, true) => self[(i, j)].clone(),
            (false, false) => other[(i - a, j - a)].clone(),
            _ => T::zero(),
        })
    }

    /// Simultaneous row/column relabeling: `out[i][j] = self[perm[i]][perm[j]]`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n, "permutation length must match order");
        Self::from_fn(self.n, |i, j| self[(perm[i], perm[j])].clone())
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.entries[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.entries[i * self.n + j]
    }
}

impl Mat {
    /// Determinant by Gaussian elimination with pivot search.
    pub fn determinant(&self) -> Gf3 {
        let n = self.n;
        let mut a = self.entries.clone();
        let mut det = Gf3::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a[r * n + col] != Gf3::ZERO) else {
                return Gf3::ZERO;
            };
            if pivot != col {
                for j in 0..n {
                    a.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = a[col * n + col];
            det *= p;
            let p_inv = p.inv().expect("pivot is nonzero");
            for r in col + 1..n {
                let factor = a[r * n + col] * p_inv;
                if factor == Gf3::ZERO {
                    continue;
                }
                for j in col..n {
                    let sub = factor * a[col * n + j];
                    a[r * n + j] -= sub;
                }
            }
        }
        det
    }
}

impl IntMat {
    pub fn from_i64s(n: usize, values: &[i64]) -> Result<Self, AlgebraError> {
        Self::new(n, values.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn reduce_mod3(&self) -> Mat {
        self.map(|c| {
            let r: BigInt = c % 3;
            Gf3::from_i64(r.to_i64().expect("residue fits"))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(n: usize, v: &[i64]) -> Mat {
        Mat::new(n, v.iter().map(|&x| Gf3::from_i64(x)).collect()).unwrap()
    }

    #[test]
    fn rejects_wrong_length() {
        assert!(matches!(Mat::new(2, vec![Gf3::ONE; 3]), Err(AlgebraError::NotSquare { .. })));
    }

    #[test]
    fn determinant_small() {
        assert_eq!(Mat::identity(4).determinant(), Gf3::ONE);
        assert_eq!(mat(2, &[1, 2, 2, 1]).determinant(), Gf3::ZERO);
        // needs a row swap: det [[0,1],[1,0]] = -1
        assert_eq!(mat(2, &[0, 1, 1, 0]).determinant(), Gf3::MINUS_ONE);
        assert_eq!(Mat::zeros(0).determinant(), Gf3::ONE);
        // I - J of order 3: eigenvalues -2, 1, 1 -> det = -2 = 1 mod 3
        assert_eq!(mat(3, &[0, -1, -1, -1, 0, -1, -1, -1, 0]).determinant(), Gf3::from_i64(-2));
    }

    #[test]
    fn block_and_permute() {
        let a = mat(1, &[2]);
        let b = mat(2, &[0, 1, 1, 0]);
        let d = a.block_diag(&b);
        assert_eq!(d, mat(3, &[2, 0, 0, 0, 0, 1, 0, 1, 0]));
        let p = d.permuted(&[2, 0, 1]);
        assert_eq!(p[(0, 2)], Gf3::ONE);
        assert_eq!(p[(1, 1)], Gf3::TWO);
        assert_eq!(p.trace(), d.trace());
    }

    #[test]
    fn int_reduction() {
        let m = IntMat::from_i64s(2, &[-1, 4, 3, -5]).unwrap();
        assert_eq!(m.reduce_mod3(), mat(2, &[2, 1, 0, 1]));
    }
}
