//! Division-free characteristic polynomials (Berkowitz).
//!
//! Characteristic 3 rules out the Faddeev–LeVerrier recurrence (it divides
//! by `k ≤ n`) and GF(3) has too few points for interpolation, so the
//! characteristic polynomial is assembled from a product of Toeplitz
//! matrices built out of ring operations only.
//!
//! For `M = [[a, R], [C, B]]` with `B` of order `m`, the descending
//! coefficient vector of `det(xI - M)` is `T · p_B`, where `p_B` is the
//! descending coefficient vector for `B` and `T` is the `(m+2)×(m+1)` lower
//! triangular Toeplitz matrix with first column
//! `[1, -a, -R·C, -R·B·C, …, -R·B^(m-1)·C]`. Peeling `M` from the
//! bottom-right corner upward gives an `O(n^4)` algorithm.

use super::{IntMat, IntPoly, Mat, Matrix, Poly, Polynomial, Ring};

/// `det(xI - m)` over any commutative ring.
pub fn berkowitz<T: Ring>(m: &Matrix<T>) -> Polynomial<T> {
    let n = m.order();
    // Descending coefficients of the trailing principal block's charpoly.
    let mut desc = vec![T::one()];
    let mut row = Vec::with_capacity(n);
    let mut v = Vec::with_capacity(n);
    let mut next_v = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let size = n - k - 1;
        row.clear();
        row.extend_from_slice(&m.row(k)[k + 1..]);
        v.clear();
        v.extend((k + 1..n).map(|i| m[(i, k)].clone()));

        let mut col = Vec::with_capacity(size + 2);
        col.push(T::one());
        col.push(-m[(k, k)].clone());
        for step in 0..size {
            col.push(-T::dot(&row, &v));
            if step + 1 < size {
                next_v.clear();
                next_v.extend((k + 1..n).map(|i| T::dot(&m.row(i)[k + 1..], &v)));
                std::mem::swap(&mut v, &mut next_v);
            }
        }

        let mut out = vec![T::zero(); desc.len() + 1];
        for (i, slot) in out.iter_mut().enumerate() {
            let lo = i.saturating_sub(col.len() - 1);
            let hi = i.min(desc.len() - 1);
            for j in lo..=hi {
                *slot = slot.clone() + col[i - j].clone() * desc[j].clone();
            }
        }
        desc = out;
    }
    desc.reverse();
    Polynomial::from_coeffs(desc)
}

/// Characteristic polynomial over GF(3).
pub fn charpoly_gf3(m: &Mat) -> Poly {
    berkowitz(m)
}

/// Characteristic polynomial over ℤ.
pub fn charpoly_int(m: &IntMat) -> IntPoly {
    berkowitz(m)
}
