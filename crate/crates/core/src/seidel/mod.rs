//! Seidel matrices `S(X) = J - I - 2A(X)` and their characteristic
//! polynomials over GF(3), with executable checks for the identities they
//! satisfy.
//!
//! Every check computes both sides from matrices; none of the identities is
//! used as a shortcut inside the library.

mod identities;
mod pair_table;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::algebra::{charpoly_gf3, ExponentTriple, Gf3, IntMat, Mat, Poly};
use crate::graph::{emit_graph6, Graph};

pub use identities::{check_regular_identity, check_thm1, check_union_identities, thm1_reflect_literal};
pub use pair_table::{check_prop_d, prop_d_base_table, prop_d_expected};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeidelError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("a polynomial of degree {degree:?} has no x^(n-2) coefficient for n = {n}")]
    NoCoefficient { n: usize, degree: Option<usize> },
    #[error("(a, b) = ({a}, {b}) is outside the table domain")]
    OutsideTable { a: u64, b: u64 },
}

/// Seidel matrix over GF(3): `0` on the diagonal, `2 = -1` on edges, `1`
/// on non-edges. Equal to `J - I + A` since `-2 = 1`.
pub fn seidel_gf3(g: &Graph) -> Mat {
    Mat::from_fn(g.order(), |i, j| {
        if i == j {
            Gf3::ZERO
        } else if g.has_edge(i, j) {
            Gf3::MINUS_ONE
        } else {
            Gf3::ONE
        }
    })
}

/// Seidel matrix over ℤ: `0` diagonal, `-1` on edges, `+1` on non-edges.
pub fn seidel_int(g: &Graph) -> IntMat {
    IntMat::from_fn(g.order(), |i, j| {
        BigInt::from(if i == j {
            0
        } else if g.has_edge(i, j) {
            -1
        } else {
            1
        })
    })
}

/// `φ(S(G))` over GF(3).
pub fn seidel_charpoly(g: &Graph) -> Poly {
    charpoly_gf3(&seidel_gf3(g))
}

/// `φ(A(G))` over GF(3).
pub fn adjacency_charpoly(g: &Graph) -> Poly {
    charpoly_gf3(&g.adjacency_gf3())
}

/// `-n(n-1)/2 mod 3`: the forced coefficient of `x^(n-2)` in any Seidel
/// characteristic polynomial of order `n`. Zero for `n ≡ 0, 1` and `-1` for
/// `n ≡ 2 (mod 3)`.
pub fn expected_cn(n: u64) -> Gf3 {
    let pairs = (n % 3) * ((n + 2) % 3); // n(n-1) mod 3
                                         // n(n-1)/2 ≡ 2·n(n-1) (mod 3), since 2 is the inverse of 2.
    -(Gf3::new(2 * pairs))
}

/// Coefficient of `x^(n-2)` of a degree-`n` polynomial.
pub fn coeff_xn2(p: &Poly, n: usize) -> Result<Gf3, SeidelError> {
    if n < 2 || p.degree() != Some(n) {
        return Err(SeidelError::NoCoefficient { n, degree: p.degree() });
    }
    Ok(p.coeff(n - 2))
}

/// The congruence classes a split Seidel characteristic polynomial
/// `x^r (x-1)^s (x+1)^t` can fall in: `(r, s, t) mod 3` is one of
/// `(0,0,0)`, `(0,1,1)`, `(1,0,0)`.
pub fn necessity_class(t: ExponentTriple) -> bool {
    matches!(t.residues(), (0, 0, 0) | (0, 1, 1) | (1, 0, 0))
}

/// Uniform verifier output; `lhs` and `rhs` are polynomial text forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeidelReport {
    pub identity: String,
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
    pub pass: bool,
}

impl SeidelReport {
    pub fn compare<P: PartialEq + std::fmt::Display>(identity: &str, inputs: Vec<String>, lhs: &P, rhs: &P) -> Self {
        SeidelReport {
            identity: identity.to_string(),
            inputs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            pass: lhs == rhs,
        }
    }
}

/// Names a graph in report inputs: `g6:` followed by its graph6 encoding.
pub fn describe(g: &Graph) -> String {
    format!("g6:{}", emit_graph6(g))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::pair_count;

    fn poly(text: &str) -> Poly {
        text.parse().unwrap()
    }

    #[test]
    fn matrices() {
        let k3 = Graph::complete(3);
        let s = seidel_gf3(&k3);
        assert_eq!(s[(0, 1)], Gf3::MINUS_ONE);
        assert_eq!(s[(1, 1)], Gf3::ZERO);
        assert_eq!(seidel_gf3(&Graph::empty(3))[(0, 2)], Gf3::ONE);
        assert_eq!(seidel_int(&k3).reduce_mod3(), s);
        let g = Graph::from_edges(4, &[(0, 1), (1, 3)]).unwrap();
        assert_eq!(seidel_gf3(&g.complement()), seidel_gf3(&g).neg());
        assert_eq!(seidel_int(&g.complement()), seidel_int(&g).neg());
        // J - I + A
        let j_i_a = Mat::from_fn(4, |i, j| {
            let jm = if i == j { Gf3::ZERO } else { Gf3::ONE };
            jm + g.adjacency_gf3()[(i, j)]
        });
        assert_eq!(seidel_gf3(&g), j_i_a);
    }

    #[test]
    fn golden_charpolys() {
        assert_eq!(seidel_charpoly(&Graph::complete(3)), poly("(x-1)^3"));
        let three_k2 = Graph::complete(2).repeat(3);
        assert_eq!(seidel_charpoly(&three_k2), poly("x^3*(x-1)^3"));
        assert_eq!(seidel_charpoly(&three_k2).coeffs(), Poly::from_residues(&[0, 0, 0, 2, 0, 0, 1]).coeffs());
        assert_eq!(seidel_charpoly(&three_k2.complement()), poly("x^3*(x+1)^3"));
        assert_eq!(seidel_charpoly(&Graph::empty(3)), poly("(x+1)^3"));
        assert_eq!(seidel_charpoly(&Graph::empty(4)), poly("x*(x+1)^3"));
        let two_k2_k1 = Graph::complete(2).repeat(2).disjoint_union(&Graph::complete(1));
        assert_eq!(seidel_charpoly(&two_k2_k1), poly("x*(x-1)^2*[2,2,1]"));
        assert_eq!(seidel_charpoly(&Graph::empty(0)), Poly::one());
    }

    #[test]
    fn cn_values() {
        assert_eq!(expected_cn(6), Gf3::ZERO);
        assert_eq!(expected_cn(5), Gf3::TWO);
        assert_eq!(expected_cn(2), Gf3::MINUS_ONE);
        for n in 0..40u64 {
            let direct = Gf3::from_i64(-((n * n.saturating_sub(1) / 2) as i64));
            assert_eq!(expected_cn(n), direct, "n = {n}");
        }
        let p = seidel_charpoly(&Graph::complete(2).repeat(3));
        assert_eq!(coeff_xn2(&p, 6), Ok(Gf3::ZERO));
        let q = seidel_charpoly(&Graph::complete(2).repeat(2).disjoint_union(&Graph::complete(1)));
        assert_eq!(coeff_xn2(&q, 5), Ok(Gf3::TWO));
        assert!(coeff_xn2(&Poly::x(), 1).is_err());
        assert!(coeff_xn2(&q, 4).is_err());
    }

    #[test]
    fn necessity_examples() {
        assert!(necessity_class(ExponentTriple::new(3, 3, 0)));
        assert!(necessity_class(ExponentTriple::new(1, 0, 3)));
        assert!(!necessity_class(ExponentTriple::new(2, 0, 0)));
        assert!(necessity_class(ExponentTriple::new(0, 1, 1)));
        assert!(!necessity_class(ExponentTriple::new(1, 1, 1)));
    }

    #[test]
    fn trace_and_cn_laws_exhaustive() {
        for n in 0..=5usize {
            for mask in 0..1u64 << pair_count(n) {
                let g = Graph::from_mask(n, mask).unwrap();
                let p = seidel_charpoly(&g);
                assert!(p.is_monic());
                assert_eq!(p.degree(), Some(n));
                if n >= 1 {
                    assert_eq!(p.coeff(n - 1), Gf3::ZERO);
                }
                if n >= 2 {
                    assert_eq!(coeff_xn2(&p, n).unwrap(), expected_cn(n as u64));
                }
                let split = p.split_linear().unwrap();
                if split.is_fully_split() {
                    assert!(necessity_class(split.exponents), "{}", describe(&g));
                }
            }
        }
    }
}
