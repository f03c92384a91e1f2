//! Graph expressions.
//!
//! ```text
//! expr := term { "+" term }
//! term := [ nat "*" ] atom
//! atom := "K" nat | "E" nat | "~" atom | "L" "(" expr ")" | "(" expr ")"
//! ```
//!
//! `+` is disjoint union, `k*` is `k`-fold disjoint union, `~` complement,
//! `L(·)` the line graph. `~` binds tightest, then `*`, then `+`. Whitespace
//! is ignored.

use std::fmt;
use std::str::FromStr;

use super::{pair_count, Graph};

/// Evaluation refuses to build graphs with more vertices than this.
pub const MAX_EVAL_VERTICES: usize = 20_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GraphExpr {
    /// `K n`
    Complete(usize),
    /// `E n`, the edgeless graph.
    Empty(usize),
    Complement(Box<GraphExpr>),
    /// `k * atom`
    Repeat(usize, Box<GraphExpr>),
    /// Two or more terms joined by `+`.
    Union(Vec<GraphExpr>),
    Line(Box<GraphExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("syntax error at position {pos}: {message}")]
pub struct ExprParseError {
    /// Byte offset into the input.
    pub pos: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("expression would build a graph on {0} vertices (limit {MAX_EVAL_VERTICES})")]
    TooLarge(usize),
}

pub fn parse_expr(text: &str) -> Result<GraphExpr, ExprParseError> {
    let mut p = Parser { src: text.as_bytes(), pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if p.pos < p.src.len() {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: impl Into<String>) -> ExprParseError {
        ExprParseError { pos: self.pos, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, byte: u8) -> Result<(), ExprParseError> {
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", byte as char)))
        }
    }

    fn nat(&mut self) -> Result<usize, ExprParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a number"));
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse().map_err(|_| ExprParseError { pos: start, message: "number too large".into() })
    }

    fn expr(&mut self) -> Result<GraphExpr, ExprParseError> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some(b'+') {
            self.pos += 1;
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { GraphExpr::Union(terms) })
    }

    fn term(&mut self) -> Result<GraphExpr, ExprParseError> {
        if self.peek().is_some_and(|b| b.is_ascii_digit()) {
            let k = self.nat()?;
            self.expect(b'*')?;
            Ok(GraphExpr::Repeat(k, Box::new(self.atom()?)))
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<GraphExpr, ExprParseError> {
        match self.peek() {
            Some(b'K') => {
                self.pos += 1;
                Ok(GraphExpr::Complete(self.nat()?))
            }
            Some(b'E') => {
                self.pos += 1;
                Ok(GraphExpr::Empty(self.nat()?))
            }
            Some(b'~') => {
                self.pos += 1;
                Ok(GraphExpr::Complement(Box::new(self.atom()?)))
            }
            Some(b'L') => {
                self.pos += 1;
                self.expect(b'(')?;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(GraphExpr::Line(Box::new(inner)))
            }
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.expect(b')')?;
                Ok(inner)
            }
            Some(other) => Err(self.error(format!("unexpected `{}`", other as char))),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

impl FromStr for GraphExpr {
    type Err = ExprParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_expr(s)
    }
}

impl GraphExpr {
    /// `k * e`, dropping the multiplier when `k == 1`.
    pub fn times(k: usize, e: GraphExpr) -> GraphExpr {
        if k == 1 {
            e
        } else {
            GraphExpr::Repeat(k, Box::new(e))
        }
    }

    pub fn complement_of(e: GraphExpr) -> GraphExpr {
        GraphExpr::Complement(Box::new(e))
    }

    pub fn line_of(e: GraphExpr) -> GraphExpr {
        GraphExpr::Line(Box::new(e))
    }

    /// Union of the given terms; `E0` when empty, the term itself when single.
    pub fn union_of(mut terms: Vec<GraphExpr>) -> GraphExpr {
        match terms.len() {
            0 => GraphExpr::Empty(0),
            1 => terms.pop().unwrap(),
            _ => GraphExpr::Union(terms),
        }
    }

    pub fn eval(&self) -> Result<Graph, EvalError> {
        let check = |n: usize| if n > MAX_EVAL_VERTICES { Err(EvalError::TooLarge(n)) } else { Ok(()) };
        Ok(match self {
            GraphExpr::Complete(n) => {
                check(*n)?;
                Graph::complete(*n)
            }
            GraphExpr::Empty(n) => {
                check(*n)?;
                Graph::empty(*n)
            }
            GraphExpr::Complement(e) => e.eval()?.complement(),
            GraphExpr::Repeat(k, e) => {
                let g = e.eval()?;
                check(g.order().saturating_mul(*k))?;
                g.repeat(*k)
            }
            GraphExpr::Union(terms) => {
                let graphs = terms.iter().map(GraphExpr::eval).collect::<Result<Vec<_>, _>>()?;
                check(graphs.iter().map(Graph::order).sum())?;
                graphs.iter().fold(Graph::empty(0), |acc, g| acc.disjoint_union(g))
            }
            GraphExpr::Line(e) => {
                let g = e.eval()?;
                check(g.edge_count())?;
                g.line_graph()
            }
        })
    }

    /// An expression whose value is isomorphic to `g`, when one exists
    /// without `L(·)`. Those are exactly the cographs: graphs that can be
    /// split recursively into disjoint unions and complements. Returns
    /// `None` otherwise (e.g. for the path on four vertices).
    pub fn from_graph(g: &Graph) -> Option<GraphExpr> {
        let n = g.order();
        if g.edge_count() == 0 {
            return Some(if n == 1 { GraphExpr::Complete(1) } else { GraphExpr::Empty(n) });
        }
        if g.edge_count() == pair_count(n) {
            return Some(GraphExpr::Complete(n));
        }
        let comps = g.components();
        if comps.len() > 1 {
            let mut grouped: Vec<(GraphExpr, usize)> = Vec::new();
            for comp in comps {
                let e = GraphExpr::from_graph(&g.induced(&comp))?;
                match grouped.iter_mut().find(|(seen, _)| *seen == e) {
                    Some((_, k)) => *k += 1,
                    None => grouped.push((e, 1)),
                }
            }
            return Some(GraphExpr::union_of(grouped.into_iter().map(|(e, k)| GraphExpr::times(k, e)).collect()));
        }
        let co = g.complement();
        if co.components().len() > 1 {
            return GraphExpr::from_graph(&co).map(GraphExpr::complement_of);
        }
        None
    }

    fn fmt_term(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Repeat(k, e) => {
                write!(f, "{k}*")?;
                e.fmt_atom(f)
            }
            other => other.fmt_atom(f),
        }
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Complete(n) => write!(f, "K{n}"),
            GraphExpr::Empty(n) => write!(f, "E{n}"),
            GraphExpr::Complement(e) => {
                f.write_str("~")?;
                e.fmt_atom(f)
            }
            GraphExpr::Line(e) => write!(f, "L({e})"),
            GraphExpr::Repeat(..) | GraphExpr::Union(_) => write!(f, "({self})"),
        }
    }
}

/// Prints in the input grammar with minimal parentheses; parsing the output
/// gives back the same tree.
impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Union(terms) => {
                for (i, t) in terms.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" + ")?;
                    }
                    t.fmt_term(f)?;
                }
                Ok(())
            }
            other => other.fmt_term(f),
        }
    }
}
