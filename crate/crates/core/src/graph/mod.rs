//! Labeled simple graphs and the constructions used throughout: complete
//! and empty graphs, complements, disjoint unions, repetition, line graphs
//! and Seidel switching. Also graph6 I/O and a small expression language.

mod expr;
mod graph6;

use num_bigint::BigInt;

use crate::algebra::{Gf3, IntMat, Mat};

pub use expr::{parse_expr, EvalError, ExprParseError, GraphExpr, MAX_EVAL_VERTICES};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge mask needs {bits} bits, more than 64")]
    MaskTooWide { bits: usize },
    #[error("not a permutation of 0..{0}")]
    BadPermutation(usize),
}

#[derive(Debug, thiserror::Error)]
pub enum InputError {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error("{expr} (not graph6 either: {graph6})")]
    Unreadable { expr: ExprParseError, graph6: Graph6Error },
}

/// Reads a graph given as an expression or as graph6. A `g6:` prefix
/// forces graph6; otherwise the expression grammar is tried first.
pub fn read_graph(input: &str) -> Result<Graph, InputError> {
    if let Some(code) = input.strip_prefix("g6:") {
        return Ok(parse_graph6(code)?);
    }
    match parse_expr(input) {
        Ok(expr) => Ok(expr.eval()?),
        Err(expr) => parse_graph6(input).map_err(|graph6| InputError::Unreadable { expr, graph6 }),
    }
}

/// Number of unordered vertex pairs, `C(n, 2)`.
pub const fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Simple undirected graph on vertices `0..n`.
///
/// Edges are a bitset over the `C(n,2)` pairs in row-major upper-triangle
/// order: `(0,1), (0,2), …, (0,n-1), (1,2), …`. Bits past `C(n,2)` are kept
/// clear so derived equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    bits: Vec<u64>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, bits: vec![0; pair_count(n).div_ceil(64)] }
    }

    /// `K_n`.
    pub fn complete(n: usize) -> Self {
        Self::empty(n).complement()
    }

    /// Graph whose pair `k` (bitset order) is an edge iff bit `k` of `mask` is set.
    pub fn from_mask(n: usize, mask: u64) -> Result<Self, GraphError> {
        let bits = pair_count(n);
        if bits > 64 {
            return Err(GraphError::MaskTooWide { bits });
        }
        let mut g = Self::empty(n);
        if bits > 0 {
            let keep = if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 };
            g.bits[0] = mask & keep;
        }
        Ok(g)
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u));
            }
            g.set_pair(u, v, true);
        }
        Ok(g)
    }

    /// Circulant graph: `i ~ j` iff `(j - i) mod n` or `(i - j) mod n` is in
    /// `distances`. Distances are taken mod `n`; zero is ignored.
    pub fn circulant(n: usize, distances: &[usize]) -> Self {
        let mut g = Self::empty(n);
        for i in 0..n {
            for j in i + 1..n {
                let d = j - i;
                if distances.iter().any(|&c| c % n != 0 && (c % n == d || c % n == n - d)) {
                    g.set_pair(i, j, true);
                }
            }
        }
        g
    }

    /// Inverse of [`Graph::from_mask`]; `None` when `C(n,2) > 64`.
    pub fn mask(&self) -> Option<u64> {
        match pair_count(self.n) {
            0 => Some(0),
            b if b <= 64 => Some(self.bits[0]),
            _ => None,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, order: self.n })
        }
    }

    fn pair_index(&self, i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        i * (2 * self.n - i - 1) / 2 + (j - i - 1)
    }

    fn set_pair(&mut self, i: usize, j: usize, on: bool) {
        let k = self.pair_index(i, j);
        if on {
            self.bits[k / 64] |= 1 << (k % 64);
        } else {
            self.bits[k / 64] &= !(1 << (k % 64));
        }
    }

    fn toggle_pair(&mut self, i: usize, j: usize) {
        let k = self.pair_index(i, j);
        self.bits[k / 64] ^= 1 << (k % 64);
    }

    /// False for `i == j` and for out-of-range vertices.
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        if i == j || i >= self.n || j >= self.n {
            return false;
        }
        let k = self.pair_index(i, j);
        self.bits[k / 64] >> (k % 64) & 1 == 1
    }

    /// Edges `(i, j)` with `i < j`, in bitset order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| self.has_edge(i, j))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for (i, j) in self.edges() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }

    /// `Some(k)` when every vertex has degree `k`. The null graph is 0-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        match deg.first() {
            None => Some(0),
            Some(&k) => deg.iter().all(|&d| d == k).then_some(k),
        }
    }

    pub fn complement(&self) -> Self {
        let mut g = self.clone();
        let total = pair_count(self.n);
        for (w, word) in g.bits.iter_mut().enumerate() {
            let live = (total - 64 * w).min(64);
            let keep = if live == 64 { u64::MAX } else { (1u64 << live) - 1 };
            *word = !*word & keep;
        }
        g
    }

    /// `self ⊔ other`; `other`'s vertices are shifted past `self`'s.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n;
        let mut g = Self::empty(self.n + other.n);
        for (i, j) in self.edges() {
            g.set_pair(i, j, true);
        }
        for (i, j) in other.edges() {
            g.set_pair(i + shift, j + shift, true);
        }
        g
    }

    /// `k` disjoint copies; `0·G` is the null graph.
    pub fn repeat(&self, k: usize) -> Self {
        let mut g = Self::empty(self.n * k);
        for c in 0..k {
            let shift = c * self.n;
            for (i, j) in self.edges() {
                g.set_pair(i + shift, j + shift, true);
            }
        }
        g
    }

    /// `L(G)`: one vertex per edge of `G` in bitset order, adjacent when the
    /// two edges share an endpoint.
    pub fn line_graph(&self) -> Self {
        let edges: Vec<(usize, usize)> = self.edges().collect();
        let mut g = Self::empty(edges.len());
        for (a, &(u1, v1)) in edges.iter().enumerate() {
            for (b, &(u2, v2)) in edges.iter().enumerate().skip(a + 1) {
                if u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2 {
                    g.set_pair(a, b, true);
                }
            }
        }
        g
    }

    /// Seidel switching: toggles adjacency on every pair with exactly one
    /// endpoint in `subset`. Repeated vertices in `subset` count once.
    pub fn switch(&self, subset: &[usize]) -> Result<Self, GraphError> {
        let mut inside = vec![false; self.n];
        for &v in subset {
            self.check_vertex(v)?;
            inside[v] = true;
        }
        let mut g = self.clone();
        for i in 0..self.n {
            for j in i + 1..self.n {
                if inside[i] != inside[j] {
                    g.toggle_pair(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Relabels so that new vertex `i` is old vertex `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation(self.n));
        }
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(GraphError::BadPermutation(self.n));
            }
        }
        let mut g = Self::empty(self.n);
        for i in 0..self.n {
            for j in i + 1..self.n {
                if self.has_edge(perm[i], perm[j]) {
                    g.set_pair(i, j, true);
                }
            }
        }
        Ok(g)
    }

    /// Connected components as sorted vertex lists, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut label = vec![usize::MAX; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut comp = vec![start];
            label[start] = id;
            let mut head = 0;
            while head < comp.len() {
                let v = comp[head];
                head += 1;
                for (w, lw) in label.iter_mut().enumerate() {
                    if *lw == usize::MAX && self.has_edge(v, w) {
                        *lw = id;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `vertices`, relabeled `0..len` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Self {
        let mut g = Self::empty(vertices.len());
        for (a, &u) in vertices.iter().enumerate() {
            for (b, &v) in vertices.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, v) {
                    g.set_pair(a, b, true);
                }
            }
        }
        g
    }

    pub fn adjacency_gf3(&self) -> Mat {
        Mat::from_fn(self.n, |i, j| if self.has_edge(i, j) { Gf3::ONE } else { Gf3::ZERO })
    }

    pub fn adjacency_int(&self) -> IntMat {
        IntMat::from_fn(self.n, |i, j| BigInt::from(u8::from(self.has_edge(i, j))))
    }
}
