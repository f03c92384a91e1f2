//! Closed forms for `φ(S(aK2 ⊔ bK1))`, one per residue cell of
//! `(a mod 3, b mod 3)`.

use super::{seidel_charpoly, SeidelError, SeidelReport};
use crate::algebra::{ExponentTriple, Poly};
use crate::graph::Graph;

const X2_PLUS_1: [i64; 3] = [1, 0, 1];
const X2_PLUS_X_MINUS_1: [i64; 3] = [-1, 1, 1];
const X2_MINUS_X_MINUS_1: [i64; 3] = [-1, -1, 1];

/// Exponent offsets `(dr, ds, dt)` applied to `(a, a, b)`, plus the
/// quadratic remainder, for each residue cell.
fn cell(a: u64, b: u64) -> ((i64, i64, i64), Option<[i64; 3]>) {
    match (a % 3, b % 3) {
        (0, 0) => ((0, 0, 0), None),
        (0, 1) => ((1, 0, -1), None),
        (0, 2) => ((0, 1, -1), None),
        (1, 0) => ((-1, 0, 1), None),
        (1, 1) => ((-1, 2, -1), None),
        (1, 2) => ((-1, 0, -1), Some(X2_PLUS_1)),
        (2, 0) => ((-1, 1, 0), None),
        (2, 1) => ((-1, 0, -1), Some(X2_MINUS_X_MINUS_1)),
        (2, 2) => ((-1, 0, -1), Some(X2_PLUS_X_MINUS_1)),
        _ => unreachable!(),
    }
}

/// Closed form of `φ(S(aK2 ⊔ bK1))` read off the residue table.
pub fn prop_d_expected(a: u64, b: u64) -> Result<Poly, SeidelError> {
    let ((dr, ds, dt), quad) = cell(a, b);
    let exp = |base: u64, d: i64| u64::try_from(base as i64 + d).map_err(|_| SeidelError::OutsideTable { a, b });
    let triple = ExponentTriple::new(exp(a, dr)?, exp(a, ds)?, exp(b, dt)?);
    let split = Poly::split(triple);
    Ok(match quad {
        Some(q) => &split * &Poly::from_residues(&q),
        None => split,
    })
}

/// The nine base values `φ(S(aK2 ⊔ bK1))` for `a, b ∈ {0, 1, 2}`, as
/// `(a, b, text form)`.
pub fn prop_d_base_table() -> [(u64, u64, &'static str); 9] {
    [
        (0, 0, "1"),
        (0, 1, "x"),
        (0, 2, "(x-1)*(x+1)"),
        (1, 0, "(x-1)*(x+1)"),
        (1, 1, "(x-1)^3"),
        (1, 2, "(x-1)*(x+1)*[1,0,1]"),
        (2, 0, "x*(x-1)^3"),
        (2, 1, "x*(x-1)^2*[2,2,1]"),
        (2, 2, "x*(x-1)^2*(x+1)*[2,1,1]"),
    ]
}

/// Compares `φ(S(aK2 ⊔ bK1))`, computed from the matrix, against
/// [`prop_d_expected`] for every `a ≤ a_max`, `b ≤ b_max`.
pub fn check_prop_d(a_max: u64, b_max: u64) -> Vec<SeidelReport> {
    let mut out = Vec::new();
    for a in 0..=a_max {
        for b in 0..=b_max {
            let g = Graph::complete(2).repeat(a as usize).disjoint_union(&Graph::empty(b as usize));
            let lhs = seidel_charpoly(&g);
            let input = vec![format!("{a}*K2 + {b}*K1")];
            out.push(match prop_d_expected(a, b) {
                Ok(rhs) => SeidelReport::compare("pair_table", input, &lhs, &rhs),
                Err(e) => SeidelReport {
                    identity: "pair_table".into(),
                    inputs: input,
                    lhs: lhs.to_string(),
                    rhs: e.to_string(),
                    pass: false,
                },
            });
        }
    }
    out
}
