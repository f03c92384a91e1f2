//! Browser bindings. Every export takes plain values and returns a JSON
//! string with an `ok` field, so the page never has to catch exceptions.

use seidelgf3::algebra::ExponentTriple;
use seidelgf3::graph::{emit_graph6, read_graph, Graph, GraphExpr};
use seidelgf3::realizer::{solve_basic, solve_extended, DEFAULT_N_MAX};
use seidelgf3::seidel::{adjacency_charpoly, necessity_class, seidel_charpoly};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest order the page will draw as a matrix.
pub const MAX_MATRIX_ORDER: usize = 40;

/// Largest order accepted for polynomial computations in the page.
pub const MAX_PAGE_ORDER: usize = 400;

fn error(message: impl std::fmt::Display) -> String {
    json!({ "ok": false, "error": message.to_string() }).to_string()
}

fn load(input: &str) -> Result<Graph, String> {
    let g = read_graph(input.trim()).map_err(|e| e.to_string())?;
    if g.order() > MAX_PAGE_ORDER {
        return Err(format!("{} vertices; the page stops at {MAX_PAGE_ORDER}", g.order()));
    }
    Ok(g)
}

fn expression_of(g: &Graph) -> Value {
    GraphExpr::from_graph(g).map_or(Value::Null, |e| Value::String(e.to_string()))
}

/// Seidel (or adjacency) polynomial of a graph given as an expression or
/// graph6 string.
#[wasm_bindgen]
pub fn charpoly(input: &str, adjacency: bool) -> String {
    let g = match load(input) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    let p = if adjacency { adjacency_charpoly(&g) } else { seidel_charpoly(&g) };
    let split = p.split_linear().expect("characteristic polynomials are nonzero");
    json!({
        "ok": true,
        "order": g.order(),
        "edges": g.edge_count(),
        "graph6": emit_graph6(&g),
        "poly": p.to_string(),
        "factored": p.factored_display(),
        "coeffs": p.to_bracket(),
        "exponents": split.exponents,
        "split": split.is_fully_split(),
        "allowed_class": split.is_fully_split().then(|| necessity_class(split.exponents)),
    })
    .to_string()
}

/// A witness graph for `x^r (x-1)^s (x+1)^t`, or the reason there is none.
#[wasm_bindgen]
pub fn realize(r: u32, s: u32, t: u32, extended: bool) -> String {
    let target = ExponentTriple::new(r.into(), s.into(), t.into());
    let mut out = solve_basic(target);
    if extended && necessity_class(target) {
        let ext = solve_extended(target, DEFAULT_N_MAX);
        if ext.witness().is_some() {
            out = ext;
        }
    }
    let mut value = serde_json::to_value(&out).expect("outcomes serialize");
    value["ok"] = Value::Bool(true);
    value.to_string()
}

/// Signed Seidel matrix (entries -1, 0, 1) for drawing, with the graph's
/// graph6 code and, for cographs, an expression.
#[wasm_bindgen]
pub fn seidel_matrix(input: &str) -> String {
    let g = match load(input) {
        Ok(g) => g,
        Err(e) => return error(e),
    };
    if g.order() > MAX_MATRIX_ORDER {
        return error(format!("{} vertices; matrices are drawn up to {MAX_MATRIX_ORDER}", g.order()));
    }
    let rows: Vec<Vec<i64>> = (0..g.order())
        .map(|i| {
            (0..g.order())
                .map(|j| {
                    if g.has_edge(i, j) {
                        -1
                    } else if i == j {
                        0
                    } else {
                        1
                    }
                })
                .collect()
        })
        .collect();
    json!({
        "ok": true,
        "order": g.order(),
        "graph6": emit_graph6(&g),
        "expression": expression_of(&g),
        "rows": rows,
        "degrees": g.degrees(),
    })
    .to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(text: &str) -> Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn charpoly_reports() {
        let v = parse(&charpoly("3*K2", false));
        assert_eq!(v["ok"], true);
        assert_eq!(v["poly"], "x^3*(x-1)^3");
        assert_eq!(v["allowed_class"], true);
        let v = parse(&charpoly("2*K2 + K1", false));
        assert_eq!(v["split"], false);
        assert_eq!(v["factored"], "x*(x-1)^2*(x^2-x-1)");
        assert_eq!(v["allowed_class"], Value::Null);
        assert_eq!(parse(&charpoly("K2", true))["poly"], "(x-1)*(x+1)");
    }

    #[test]
    fn errors_are_values() {
        let v = parse(&charpoly("K3 +", false));
        assert_eq!(v["ok"], false);
        assert!(v["error"].as_str().unwrap().contains("position 4"));
        assert_eq!(parse(&charpoly("3*L(K30)", false))["ok"], false);
        assert_eq!(parse(&seidel_matrix("E41"))["ok"], false);
    }

    #[test]
    fn realize_reports() {
        let v = parse(&realize(1, 0, 3, false));
        assert_eq!(v["status"], "witness");
        assert_eq!(v["witness"]["expression"], "4*K1");
        assert_eq!(parse(&realize(2, 0, 0, false))["status"], "unrealizable");
        assert_eq!(parse(&realize(4, 0, 0, true))["status"], "unknown");
        assert_eq!(parse(&realize(27, 27, 0, true))["witness"]["expression"], "3*L(K6) + 3*K3");
    }

    #[test]
    fn matrix_view() {
        let v = parse(&seidel_matrix("K2 + K1"));
        assert_eq!(v["rows"], json!([[0, -1, 1], [-1, 0, 1], [1, 1, 0]]));
        assert_eq!(v["expression"], "K2 + K1");
        let p4 = parse(&seidel_matrix("g6:Ch"));
        assert_eq!(p4["expression"], Value::Null);
    }
}
