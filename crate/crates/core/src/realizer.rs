//! Constructive realizability of split polynomials `x^r (x-1)^s (x+1)^t`
//! as Seidel characteristic polynomials over GF(3).
//!
//! Witnesses are built from the family
//!
//! ```text
//! 𝔛 = aK2 ⊔ bK1 ⊔ cK3 ⊔ d·~K3 ⊔ e(3K2) ⊔ f(~3K2)
//! ```
//!
//! optionally preceded by `4K1`, `3L(Kn)` or `~3L(Kn)`. Each witness is
//! checked by a direct matrix computation before it is returned.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::algebra::{ExponentTriple, Gf3, Poly};
use crate::graph::{pair_count, GraphExpr, MAX_EVAL_VERTICES};
use crate::seidel::{necessity_class, prop_d_expected, seidel_charpoly};

/// Largest `n` tried for `3L(Kn)` blocks unless the caller says otherwise.
pub const DEFAULT_N_MAX: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct BasicParams {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
    pub e: u64,
    pub f: u64,
}

/// Extra block placed in front of `𝔛`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Extension {
    #[default]
    None,
    /// `4K1`; used with `a = b = c = e = 0`.
    FourK1,
    /// `3L(Kn)`, `n ≥ 3`.
    LineTriple { n: usize },
    /// `~(3L(Kn))`, `n ≥ 3`.
    LineTripleComplement { n: usize },
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct WitnessExpr {
    pub basic: BasicParams,
    pub extension: Extension,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WitnessError {
    #[error("a = {a}, b = {b} is not an allowed pair (a, b ≤ 2; a = 1 ⇒ b ≤ 1; a = 2 ⇒ b = 0)")]
    BadPair { a: u64, b: u64 },
    #[error("the 4K1 block only combines with ~K3 and ~3K2 blocks")]
    BadFourK1,
    #[error("3L(K{0}) needs n ≥ 3")]
    LineTooSmall(usize),
}

impl WitnessExpr {
    pub fn basic(basic: BasicParams) -> Self {
        WitnessExpr { basic, extension: Extension::None }
    }

    pub fn validate(&self) -> Result<(), WitnessError> {
        let BasicParams { a, b, c, e, .. } = self.basic;
        let pair_ok = a <= 2 && b <= 2 && (a != 1 || b <= 1) && (a != 2 || b == 0);
        if !pair_ok {
            return Err(WitnessError::BadPair { a, b });
        }
        match self.extension {
            Extension::FourK1 if a != 0 || b != 0 || c != 0 || e != 0 => Err(WitnessError::BadFourK1),
            Extension::LineTriple { n } | Extension::LineTripleComplement { n } if n < 3 => {
                Err(WitnessError::LineTooSmall(n))
            }
            _ => Ok(()),
        }
    }

    pub fn to_expr(&self) -> GraphExpr {
        use GraphExpr as G;
        let k = |n: usize| G::Complete(n);
        let mut terms = Vec::new();
        match self.extension {
            Extension::None => {}
            Extension::FourK1 => terms.push(G::times(4, k(1))),
            Extension::LineTriple { n } => terms.push(G::times(3, G::line_of(k(n)))),
            Extension::LineTripleComplement { n } => terms.push(G::complement_of(G::times(3, G::line_of(k(n))))),
        }
        let p = self.basic;
        let blocks = [
            (p.a, k(2)),
            (p.b, k(1)),
            (p.c, k(3)),
            (p.d, G::complement_of(k(3))),
            (p.e, G::times(3, k(2))),
            (p.f, G::complement_of(G::times(3, k(2)))),
        ];
        for (mult, block) in blocks {
            if mult > 0 {
                terms.push(G::times(mult as usize, block));
            }
        }
        G::union_of(terms)
    }

    pub fn vertex_count(&self) -> usize {
        let p = self.basic;
        let front = match self.extension {
            Extension::None => 0,
            Extension::FourK1 => 4,
            Extension::LineTriple { n } | Extension::LineTripleComplement { n } => 3 * pair_count(n),
        };
        front + (2 * p.a + p.b + 3 * p.c + 3 * p.d + 6 * p.e + 6 * p.f) as usize
    }
}

impl std::fmt::Display for WitnessExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_expr())
    }
}

impl Serialize for WitnessExpr {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("WitnessExpr", 4)?;
        s.serialize_field("expression", &self.to_string())?;
        s.serialize_field("params", &self.basic)?;
        s.serialize_field("extension", &self.extension)?;
        s.serialize_field("vertices", &self.vertex_count())?;
        s.end()
    }
}

/// `φ(S(3L(Kn)))` from the line-graph spectrum of `Kn`:
/// `x^(3n(n-3)/2) (x-2n+2)^3 (x-n+2)^(3(n-1))`.
fn line_triple_poly(n: usize) -> Poly {
    let n64 = n as i64;
    let zero_exp = (3 * n * (n - 3) / 2) as u32;
    let first = Poly::linear_factor(Gf3::from_i64(2 * n64 - 2)).pow(3);
    let second = Poly::linear_factor(Gf3::from_i64(n64 - 2)).pow(3 * (n as u32 - 1));
    &(&Poly::monomial(Gf3::ONE, zero_exp as usize) * &first) * &second
}

/// Monic `φ(-M)` from `φ(M)`: roots negated.
fn negate_roots(p: &Poly) -> Poly {
    let q = p.reflect();
    match q.leading() {
        Some(&c) if c != Gf3::ONE => q.scale(&c.inv().expect("nonzero leading coefficient")),
        _ => q,
    }
}

/// The closed form for `φ(S(w))`, with no matrix computation.
pub fn predicted_charpoly(w: &WitnessExpr) -> Result<Poly, WitnessError> {
    w.validate()?;
    let p = w.basic;
    let base = prop_d_expected(p.a, p.b).expect("validated pairs lie in the table");
    let blocks = Poly::split(ExponentTriple::new(3 * (p.e + p.f), 3 * (p.c + p.e), 3 * (p.d + p.f)));
    let front = match w.extension {
        Extension::None => Poly::one(),
        Extension::FourK1 => Poly::split(ExponentTriple::new(1, 0, 3)),
        Extension::LineTriple { n } => line_triple_poly(n),
        Extension::LineTripleComplement { n } => negate_roots(&line_triple_poly(n)),
    };
    Ok(&(&front * &base) * &blocks)
}

/// Evaluates `w`, computes its Seidel polynomial from the matrix, and
/// checks it, together with [`predicted_charpoly`], against
/// `x^r (x-1)^s (x+1)^t`.
pub fn verify_witness(w: &WitnessExpr, target: ExponentTriple) -> bool {
    let Ok(predicted) = predicted_charpoly(w) else {
        return false;
    };
    let Ok(graph) = w.to_expr().eval() else {
        return false;
    };
    let want = Poly::split(target);
    seidel_charpoly(&graph) == want && predicted == want
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum RealizeStatus {
    Witness {
        witness: WitnessExpr,
    },
    Unrealizable {
        reason: String,
    },
    /// Outside every construction tried; no claim either way.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizeOutcome {
    pub target: ExponentTriple,
    #[serde(flatten)]
    pub status: RealizeStatus,
    /// True only for witnesses, after recomputation.
    pub verified: bool,
}

impl RealizeOutcome {
    fn unknown(target: ExponentTriple) -> Self {
        RealizeOutcome { target, status: RealizeStatus::Unknown, verified: false }
    }

    pub fn witness(&self) -> Option<&WitnessExpr> {
        match &self.status {
            RealizeStatus::Witness { witness } => Some(witness),
            _ => None,
        }
    }
}

/// Splits `(3i, 3j, 3k)` with `i ≤ j + k` into `e(3K2) ⊔ f(~3K2) ⊔ cK3 ⊔
/// d·~K3`, taking `e` as large as possible first.
fn balanced_blocks(r: u64, s: u64, t: u64) -> Option<BasicParams> {
    debug_assert!(r.is_multiple_of(3) && s.is_multiple_of(3) && t.is_multiple_of(3));
    let (r3, s3, t3) = (r / 3, s / 3, t / 3);
    let e = r3.min(s3);
    let f = r3 - e;
    let c = s3 - e;
    let d = t3.checked_sub(f)?;
    Some(BasicParams { c, d, e, f, ..Default::default() })
}

/// Sufficient-condition construction. Fails the congruence test →
/// `Unrealizable`; `r ≤ s + t` → a verified witness; otherwise defers to
/// [`solve_extended`] with [`DEFAULT_N_MAX`].
pub fn solve_basic(target: ExponentTriple) -> RealizeOutcome {
    solve_basic_with(target, DEFAULT_N_MAX)
}

pub fn solve_basic_with(target: ExponentTriple, n_max: usize) -> RealizeOutcome {
    let ExponentTriple { r, s, t } = target;
    if !necessity_class(target) {
        let (rr, sr, tr) = target.residues();
        return RealizeOutcome {
            target,
            status: RealizeStatus::Unrealizable {
                reason: format!(
                    "(r,s,t) ≡ ({rr},{sr},{tr}) mod 3 is not one of (0,0,0), (0,1,1), (1,0,0); \
                     the x^(n-2) coefficient would contradict -n(n-1)/2"
                ),
            },
            verified: false,
        };
    }
    if r > s + t {
        return solve_extended(target, n_max);
    }
    let witness = match target.residues() {
        (0, 0, 0) => balanced_blocks(r, s, t).map(WitnessExpr::basic),
        (0, 1, 1) => balanced_blocks(r, s - 1, t - 1).map(|p| WitnessExpr::basic(BasicParams { a: 1, ..p })),
        (1, 0, 0) if s >= 3 => balanced_blocks(r - 1, s - 3, t).map(|p| WitnessExpr::basic(BasicParams { a: 2, ..p })),
        (1, 0, 0) => {
            // s = 0 and r ≤ t, so t ≥ r + 2 = 3f + 3.
            let f = (r - 1) / 3;
            (t / 3).checked_sub(f + 1).map(|d| WitnessExpr {
                basic: BasicParams { d, f, ..Default::default() },
                extension: Extension::FourK1,
            })
        }
        _ => unreachable!("necessity_class admits only three residue classes"),
    };
    match witness {
        Some(w) if verify_witness(&w, target) => {
            RealizeOutcome { target, status: RealizeStatus::Witness { witness: w }, verified: true }
        }
        _ => RealizeOutcome::unknown(target),
    }
}

/// Exponents of `φ(S(3L(Kn)))` (or of its complement, with `s` and `t`
/// swapped) for `n ≥ 3`.
pub fn line_triple_exponents(n: usize, complement: bool) -> ExponentTriple {
    let n = n as u64;
    let (r, s, t) = match n % 3 {
        0 => (3 * n * (n - 3) / 2, 3 * n, 0),
        1 => (3 * (n - 1) * (n - 2) / 2, 0, 3 * (n - 1)),
        _ => (3 * (n + 1) * (n - 2) / 2, 0, 3),
    };
    if complement {
        ExponentTriple::new(r, t, s)
    } else {
        ExponentTriple::new(r, s, t)
    }
}

/// Searches `3L(Kn) ⊔ 𝔛` and `~3L(Kn) ⊔ 𝔛` for `3 ≤ n ≤ n_max`, with
/// `𝔛 = aK2 ⊔ cK3 ⊔ d·~K3`, `a ≤ 2`. Candidates are tried smallest vertex
/// count first (ties by `n`, then variant, then parameters); the first one
/// whose matrix polynomial matches is returned. Never reports
/// `Unrealizable`.
pub fn solve_extended(target: ExponentTriple, n_max: usize) -> RealizeOutcome {
    let ExponentTriple { r, s, t } = target;
    // φ(S(aK2)) exponents for a = 0, 1, 2.
    let base = [(0, 0, 0), (0, 1, 1), (1, 3, 0)];
    let mut candidates = Vec::new();
    for n in 3..=n_max {
        for complement in [false, true] {
            let block = line_triple_exponents(n, complement);
            for (a, &(br, bs, bt)) in base.iter().enumerate() {
                if block.r + br != r {
                    continue;
                }
                let (Some(s_rest), Some(t_rest)) = (s.checked_sub(block.s + bs), t.checked_sub(block.t + bt)) else {
                    continue;
                };
                if s_rest % 3 != 0 || t_rest % 3 != 0 {
                    continue;
                }
                let extension =
                    if complement { Extension::LineTripleComplement { n } } else { Extension::LineTriple { n } };
                let w = WitnessExpr {
                    basic: BasicParams { a: a as u64, c: s_rest / 3, d: t_rest / 3, ..Default::default() },
                    extension,
                };
                if w.vertex_count() <= MAX_EVAL_VERTICES {
                    candidates.push(w);
                }
            }
        }
    }
    candidates.sort_by_key(|w| (w.vertex_count(), *w));
    candidates
        .into_iter()
        .find(|w| verify_witness(w, target))
        .map(|w| RealizeOutcome { target, status: RealizeStatus::Witness { witness: w }, verified: true })
        .unwrap_or_else(|| RealizeOutcome::unknown(target))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(a: u64, b: u64, c: u64, d: u64, e: u64, f: u64) -> BasicParams {
        BasicParams { a, b, c, d, e, f }
    }

    fn triple(r: u64, s: u64, t: u64) -> ExponentTriple {
        ExponentTriple::new(r, s, t)
    }

    #[test]
    fn predicted_examples() {
        let w = WitnessExpr::basic(params(0, 0, 0, 0, 1, 0));
        assert_eq!(predicted_charpoly(&w).unwrap(), Poly::split(triple(3, 3, 0)));
        let w = WitnessExpr::basic(params(2, 0, 0, 0, 0, 0));
        assert_eq!(predicted_charpoly(&w).unwrap(), Poly::split(triple(1, 3, 0)));
        let w = WitnessExpr { basic: BasicParams::default(), extension: Extension::LineTriple { n: 6 } };
        assert_eq!(predicted_charpoly(&w).unwrap(), Poly::split(triple(27, 18, 0)));
    }

    #[test]
    fn line_exponent_table_matches_formula() {
        for n in 3..=13 {
            for complement in [false, true] {
                let ext = if complement { Extension::LineTripleComplement { n } } else { Extension::LineTriple { n } };
                let w = WitnessExpr { basic: BasicParams::default(), extension: ext };
                let split = predicted_charpoly(&w).unwrap().split_linear().unwrap();
                assert!(split.is_fully_split());
                assert_eq!(split.exponents, line_triple_exponents(n, complement), "n = {n}");
                assert_eq!(split.exponents.total() as usize, w.vertex_count());
            }
        }
    }

    #[test]
    fn line_triples_match_matrices() {
        for n in 3..=7 {
            for complement in [false, true] {
                let ext = if complement { Extension::LineTripleComplement { n } } else { Extension::LineTriple { n } };
                let w = WitnessExpr { basic: params(1, 0, 1, 1, 0, 0), extension: ext };
                let target = predicted_charpoly(&w).unwrap().split_linear().unwrap().exponents;
                assert!(verify_witness(&w, target), "{w}");
            }
        }
    }

    #[test]
    fn validation() {
        assert!(WitnessExpr::basic(params(1, 2, 0, 0, 0, 0)).validate().is_err());
        assert!(WitnessExpr::basic(params(2, 1, 0, 0, 0, 0)).validate().is_err());
        assert!(WitnessExpr::basic(params(3, 0, 0, 0, 0, 0)).validate().is_err());
        assert!(WitnessExpr { basic: params(1, 0, 0, 0, 0, 0), extension: Extension::FourK1 }.validate().is_err());
        assert!(WitnessExpr { basic: BasicParams::default(), extension: Extension::LineTriple { n: 2 } }
            .validate()
            .is_err());
        assert!(WitnessExpr::basic(params(0, 2, 5, 5, 5, 5)).validate().is_ok());
    }

    #[test]
    fn expression_strings() {
        let w = WitnessExpr::basic(params(2, 0, 0, 1, 3, 0));
        assert_eq!(w.to_string(), "2*K2 + ~K3 + 3*(3*K2)");
        let w = WitnessExpr { basic: params(0, 0, 1, 0, 0, 0), extension: Extension::LineTriple { n: 6 } };
        assert_eq!(w.to_string(), "3*L(K6) + K3");
        let w = WitnessExpr { basic: BasicParams::default(), extension: Extension::LineTripleComplement { n: 6 } };
        assert_eq!(w.to_string(), "~(3*L(K6))");
        let w = WitnessExpr { basic: params(0, 0, 0, 0, 0, 2), extension: Extension::FourK1 };
        assert_eq!(w.to_string(), "4*K1 + 2*~(3*K2)");
        assert_eq!(WitnessExpr::default().to_string(), "E0");
    }

    #[test]
    fn solve_basic_examples() {
        let out = solve_basic(triple(0, 3, 0));
        assert_eq!(out.witness().unwrap().basic, params(0, 0, 1, 0, 0, 0));
        assert!(out.verified);

        let out = solve_basic(triple(1, 0, 3));
        let w = out.witness().unwrap();
        assert_eq!(w.extension, Extension::FourK1);
        assert_eq!(w.to_string(), "4*K1");

        assert!(matches!(solve_basic(triple(2, 0, 0)).status, RealizeStatus::Unrealizable { .. }));

        let out = solve_basic(triple(3, 3, 3));
        assert_eq!(out.witness().unwrap().basic, params(0, 0, 0, 1, 1, 0));

        assert_eq!(solve_basic(triple(0, 0, 0)).witness().unwrap().to_string(), "E0");
    }

    #[test]
    fn solve_extended_examples() {
        let out = solve_extended(triple(27, 18, 0), DEFAULT_N_MAX);
        assert_eq!(out.witness().unwrap().to_string(), "3*L(K6)");
        let out = solve_extended(triple(27, 0, 18), DEFAULT_N_MAX);
        assert_eq!(out.witness().unwrap().to_string(), "~(3*L(K6))");
        assert_eq!(solve_basic(triple(4, 0, 0)).status, RealizeStatus::Unknown);
        // r > s + t goes through the extended search
        assert!(solve_basic(triple(27, 18, 0)).verified);
    }

    #[test]
    fn verify_witness_rejects_mismatch() {
        let k3 = WitnessExpr::basic(params(0, 0, 1, 0, 0, 0));
        assert!(!verify_witness(&k3, triple(0, 0, 3)));
        assert!(verify_witness(&k3, triple(0, 3, 0)));
    }

    #[test]
    fn sufficient_region_is_complete() {
        for total in 0..=30u64 {
            for r in 0..=total {
                for s in 0..=total - r {
                    let t = total - r - s;
                    let target = triple(r, s, t);
                    let out = solve_basic(target);
                    if !necessity_class(target) {
                        assert!(matches!(out.status, RealizeStatus::Unrealizable { .. }));
                        continue;
                    }
                    if r > s + t {
                        continue;
                    }
                    let w = out.witness().unwrap_or_else(|| panic!("no witness for {target}"));
                    assert_eq!(w.extension == Extension::FourK1, r % 3 == 1 && s == 0);
                    assert!(w.vertex_count() as u64 <= 2 * r + 3 * s + 3 * t + 4);
                    assert_eq!(w.vertex_count() as u64, total);
                }
            }
        }
    }

    #[test]
    fn outcome_json() {
        let json = serde_json::to_value(solve_basic(triple(1, 0, 3))).unwrap();
        assert_eq!(json["status"], "witness");
        assert_eq!(json["witness"]["expression"], "4*K1");
        assert_eq!(json["verified"], true);
        assert_eq!(json["target"]["t"], 3);
    }
}
