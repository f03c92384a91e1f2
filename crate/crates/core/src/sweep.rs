//! Seeded verification sweeps: each one runs an identity checker over all
//! graphs of a few small orders, then over `random` sampled inputs.

use serde::Serialize;

use crate::algebra::Gf3;
use crate::graph::{pair_count, Graph};
use crate::sample::{self, SweepRng};
use crate::seidel::{
    check_prop_d, check_regular_identity, check_thm1, check_union_identities, coeff_xn2, describe, expected_cn,
    necessity_class, seidel_charpoly, SeidelReport,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Identity {
    TripleCopies,
    Unions,
    PairTable,
    Cn,
    Regular,
}

impl Identity {
    pub const ALL: [Identity; 5] =
        [Identity::TripleCopies, Identity::Unions, Identity::PairTable, Identity::Cn, Identity::Regular];

    pub fn name(self) -> &'static str {
        match self {
            Identity::TripleCopies => "thm1",
            Identity::Unions => "unions",
            Identity::PairTable => "prop-d",
            Identity::Cn => "cn",
            Identity::Regular => "regular",
        }
    }

    /// Default bound on sampled graph orders.
    pub fn default_max_vertices(self) -> usize {
        match self {
            Identity::TripleCopies => 7,
            Identity::Unions => 5,
            Identity::PairTable => 8,
            Identity::Cn => 8,
            Identity::Regular => 10,
        }
    }
}

impl std::str::FromStr for Identity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Identity::ALL.into_iter().find(|i| i.name() == s).ok_or_else(|| format!("unknown identity `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SweepConfig {
    /// Number of sampled inputs on top of the exhaustive part.
    pub random: usize,
    /// Largest sampled order. For `prop-d` this is the bound on `a` and `b`.
    pub max_vertices: usize,
    pub seed: u64,
}

impl SweepConfig {
    pub fn defaults(which: Identity) -> Self {
        SweepConfig { random: 100, max_vertices: which.default_max_vertices(), seed: 0 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepOutcome {
    pub identity: &'static str,
    pub cases: usize,
    pub failures: Vec<SeidelReport>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn collect(identity: Identity, reports: impl IntoIterator<Item = SeidelReport>) -> Self {
        let mut cases = 0;
        let mut failures = Vec::new();
        for report in reports {
            cases += 1;
            if !report.pass {
                failures.push(report);
            }
        }
        SweepOutcome { identity: identity.name(), cases, failures }
    }
}

fn all_graphs(max_n: usize) -> impl Iterator<Item = Graph> {
    (0..=max_n).flat_map(|n| (0..1u64 << pair_count(n)).map(move |m| Graph::from_mask(n, m).expect("small order")))
}

fn random_graphs(rng: &mut SweepRng, count: usize, max_n: usize) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = sample::order_between(rng, 1, max_n.max(1));
            sample::graph(rng, n)
        })
        .collect()
}

pub fn run(which: Identity, cfg: &SweepConfig) -> SweepOutcome {
    let mut rng = sample::rng(cfg.seed);
    match which {
        Identity::TripleCopies => {
            let inputs = all_graphs(3).chain(random_graphs(&mut rng, cfg.random, cfg.max_vertices));
            SweepOutcome::collect(which, inputs.flat_map(|x| check_thm1(&x)))
        }
        Identity::Unions => {
            let small: Vec<Graph> = all_graphs(2).collect();
            let mut pairs: Vec<(Graph, Graph)> =
                small.iter().flat_map(|x| small.iter().map(move |y| (x.clone(), y.clone()))).collect();
            for _ in 0..cfg.random {
                let xs = random_graphs(&mut rng, 2, cfg.max_vertices);
                pairs.push((xs[0].clone(), xs[1].clone()));
            }
            SweepOutcome::collect(which, pairs.iter().flat_map(|(x, y)| check_union_identities(x, y)))
        }
        Identity::PairTable => {
            let bound = cfg.max_vertices as u64;
            SweepOutcome::collect(which, check_prop_d(bound, bound))
        }
        Identity::Cn => {
            let inputs = all_graphs(5).chain(random_graphs(&mut rng, cfg.random, cfg.max_vertices));
            SweepOutcome::collect(which, inputs.flat_map(|g| coefficient_laws(&g)))
        }
        Identity::Regular => {
            let complete = (1..=8).map(Graph::complete);
            let circulants: Vec<Graph> = (0..cfg.random)
                .map(|_| {
                    let n = sample::order_between(&mut rng, 1, cfg.max_vertices.max(1));
                    sample::circulant(&mut rng, n)
                })
                .collect();
            let reports = complete
                .chain(circulants)
                .map(|g| check_regular_identity(&g).expect("complete graphs and circulants are regular"));
            SweepOutcome::collect(which, reports)
        }
    }
}

/// The coefficient facts every Seidel polynomial of order `n` obeys: zero
/// `x^(n-1)` coefficient, `x^(n-2)` coefficient `-n(n-1)/2`, and, when
/// fully split, an exponent triple in an allowed congruence class.
pub fn coefficient_laws(g: &Graph) -> Vec<SeidelReport> {
    let n = g.order();
    let p = seidel_charpoly(g);
    let input = || vec![describe(g)];
    let mut out = Vec::new();
    if n >= 1 {
        out.push(SeidelReport::compare("trace", input(), &p.coeff(n - 1), &Gf3::ZERO));
    }
    if n >= 2 {
        let got = coeff_xn2(&p, n).expect("Seidel polynomials have degree n");
        out.push(SeidelReport::compare("cn", input(), &got, &expected_cn(n as u64)));
    }
    let split = p.split_linear().expect("monic");
    if split.is_fully_split() {
        out.push(SeidelReport {
            identity: "necessity".into(),
            inputs: input(),
            lhs: split.exponents.to_string(),
            rhs: "(0,0,0) | (0,1,1) | (1,0,0) mod 3".into(),
            pass: necessity_class(split.exponents),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_sweep_passes_with_defaults() {
        for which in Identity::ALL {
            let cfg = SweepConfig { random: 20, ..SweepConfig::defaults(which) };
            let out = run(which, &cfg);
            assert!(out.passed(), "{:?}", out.failures);
            assert!(out.cases > 0);
        }
    }

    #[test]
    fn pair_table_counts_cells() {
        let out = run(Identity::PairTable, &SweepConfig::defaults(Identity::PairTable));
        assert_eq!(out.cases, 81);
    }

    #[test]
    fn names_parse() {
        for which in Identity::ALL {
            assert_eq!(which.name().parse::<Identity>(), Ok(which));
        }
        assert!("thm2".parse::<Identity>().is_err());
    }

    #[test]
    fn seeded_runs_repeat() {
        let cfg = SweepConfig { random: 15, max_vertices: 6, seed: 9 };
        assert_eq!(run(Identity::Cn, &cfg), run(Identity::Cn, &cfg));
    }
}
