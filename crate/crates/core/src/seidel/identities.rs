use num_bigint::BigInt;

use super::{adjacency_charpoly, describe, seidel_charpoly, seidel_int, SeidelError, SeidelReport};
use crate::algebra::{charpoly_int, ExponentTriple, Gf3, IntPoly, Poly};
use crate::graph::Graph;

/// Both halves of the `3X` relation between Seidel and adjacency
/// polynomials:
///
/// * `φ(S(3X), x) = φ(A(X), x+1)^3`
/// * `φ(S(~3X), x) = det((x-1)I + A(X))^3 = (-1)^|X| φ(A(X), 1-x)^3`
///
/// The sign in the second form only matters when `|X|` is odd; see
/// [`thm1_reflect_literal`] for the unsigned variant.
pub fn check_thm1(x: &Graph) -> Vec<SeidelReport> {
    let three_x = x.repeat(3);
    let phi_a = adjacency_charpoly(x);
    let inputs = vec![describe(x)];

    let lhs1 = seidel_charpoly(&three_x);
    let rhs1 = phi_a.compose(&Poly::x_plus(Gf3::ONE)).pow(3);

    let lhs2 = seidel_charpoly(&three_x.complement());
    let mut rhs2 = phi_a.compose(&one_minus_x()).pow(3);
    if x.order() % 2 == 1 {
        rhs2 = -&rhs2;
    }
    vec![
        SeidelReport::compare("triple.shift", inputs.clone(), &lhs1, &rhs1),
        SeidelReport::compare("triple.reflect", inputs, &lhs2, &rhs2),
    ]
}

/// `φ(S(~3X), x)` against `φ(A(X), 1-x)^3` with no sign correction. The
/// right side has leading coefficient `(-1)^|X|`, so this passes exactly
/// when `|X|` is even.
pub fn thm1_reflect_literal(x: &Graph) -> SeidelReport {
    let lhs = seidel_charpoly(&x.repeat(3).complement());
    let rhs = adjacency_charpoly(x).compose(&one_minus_x()).pow(3);
    SeidelReport::compare("triple.reflect.unsigned", vec![describe(x)], &lhs, &rhs)
}

fn one_minus_x() -> Poly {
    Poly::from_residues(&[1, -1])
}

/// Product rules for disjoint unions with a `3X`-type block in front:
///
/// * `φ(S(3X ⊔ Y)) = φ(S(3X)) φ(S(Y))`
/// * `φ(S(~3X ⊔ Y)) = φ(S(~3X)) φ(S(Y))`
/// * `φ(S(K3 ⊔ Y)) = (x-1)^3 φ(S(Y))`
/// * `φ(S(~K3 ⊔ Y)) = (x+1)^3 φ(S(Y))`
/// * `φ(S(3K2 ⊔ Y)) = x^3 (x-1)^3 φ(S(Y))`
/// * `φ(S(~3K2 ⊔ Y)) = x^3 (x+1)^3 φ(S(Y))`
pub fn check_union_identities(x: &Graph, y: &Graph) -> Vec<SeidelReport> {
    let phi_y = seidel_charpoly(y);
    let three_x = x.repeat(3);
    let co_three_x = three_x.complement();
    let xy = vec![describe(x), describe(y)];

    let mut out = vec![
        SeidelReport::compare(
            "union.3x",
            xy.clone(),
            &seidel_charpoly(&three_x.disjoint_union(y)),
            &(&seidel_charpoly(&three_x) * &phi_y),
        ),
        SeidelReport::compare(
            "union.co3x",
            xy,
            &seidel_charpoly(&co_three_x.disjoint_union(y)),
            &(&seidel_charpoly(&co_three_x) * &phi_y),
        ),
    ];

    let three_k2 = Graph::complete(2).repeat(3);
    let blocks = [
        ("union.k3", Graph::complete(3), ExponentTriple::new(0, 3, 0)),
        ("union.co_k3", Graph::empty(3), ExponentTriple::new(0, 0, 3)),
        ("union.3k2", three_k2.clone(), ExponentTriple::new(3, 3, 0)),
        ("union.co3k2", three_k2.complement(), ExponentTriple::new(3, 0, 3)),
    ];
    for (name, block, factor) in blocks {
        out.push(SeidelReport::compare(
            name,
            vec![describe(&block), describe(y)],
            &seidel_charpoly(&block.disjoint_union(y)),
            &(&Poly::split(factor) * &phi_y),
        ));
    }
    out
}

/// For a `k`-regular graph on `n` vertices, with denominators cleared:
///
/// `(x+1+2k)·det(xI - S) = (x+1+2k-n)·det((x+1)I + 2A)` in ℤ[x].
///
/// `det((x+1)I + 2A)` is the integer characteristic polynomial of `-2A`
/// evaluated at `x+1`; it absorbs the `(-1)^n 2^n` and the halving.
pub fn check_regular_identity(g: &Graph) -> Result<SeidelReport, SeidelError> {
    let k = g.regular_degree().ok_or(SeidelError::NotRegular)?;
    let n = g.order();
    let shift = |c: i64| IntPoly::x_plus(BigInt::from(c));

    let det_s = charpoly_int(&seidel_int(g));
    let minus_two_a = g.adjacency_int().scale(&BigInt::from(-2));
    let det_shifted = charpoly_int(&minus_two_a).compose(&shift(1));

    let lhs = &shift(1 + 2 * k as i64) * &det_s;
    let rhs = &shift(1 + 2 * k as i64 - n as i64) * &det_shifted;
    Ok(SeidelReport::compare("regular", vec![describe(g)], &lhs, &rhs))
}
