//! Text expressions over the generators of a graph algebra.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '·')? unary)*
//! unary  := '-' unary | atom
//! atom   := rational | 'S(' path ')' | 'S*(' path ')' | 'P(' vertex ')' | '(' expr ')'
//! ```
//!
//! A path is a whitespace-separated list of edge names; `S*(e f)` is
//! `(S_e S_f)* = S_f* S_e*`. Juxtaposition multiplies, so the printed normal
//! form of an element parses back to the same element.

use crate::algebra::{AlgebraElement, Coeff, LeavittAlgebra};
use crate::graph::{DirectedMultigraph, EdgeId, VertexId};
use num::{BigInt, One};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExprError {
    #[error("syntax error at offset {0}: {1}")]
    Syntax(usize, String),
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("`{0}` is not a path")]
    NotAPath(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Scalar(Coeff),
    S(Vec<String>),
    SStar(Vec<String>),
    P(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

/// A unital *-algebra in which expressions can be evaluated.
pub trait Interpretation {
    type Value: Clone;

    fn scalar(&self, c: &Coeff) -> Self::Value;
    fn s(&self, e: EdgeId) -> Self::Value;
    fn s_star(&self, e: EdgeId) -> Self::Value;
    fn p(&self, v: VertexId) -> Self::Value;
    fn add(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;
    fn mul(&self, a: &Self::Value, b: &Self::Value) -> Self::Value;

    fn neg(&self, a: &Self::Value) -> Self::Value {
        self.mul(&self.scalar(&-Coeff::one()), a)
    }

    fn sub(&self, a: &Self::Value, b: &Self::Value) -> Self::Value {
        self.add(a, &self.neg(b))
    }
}

impl Interpretation for LeavittAlgebra {
    type Value = AlgebraElement;

    fn scalar(&self, c: &Coeff) -> AlgebraElement {
        LeavittAlgebra::scalar(self, c.clone())
    }
    fn s(&self, e: EdgeId) -> AlgebraElement {
        LeavittAlgebra::s(self, e)
    }
    fn s_star(&self, e: EdgeId) -> AlgebraElement {
        LeavittAlgebra::s_star(self, e)
    }
    fn p(&self, v: VertexId) -> AlgebraElement {
        LeavittAlgebra::p(self, v)
    }
    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a + b
    }
    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a * b
    }
    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        -a
    }
    fn sub(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a - b
    }
}

fn resolve_path(g: &DirectedMultigraph, names: &[String]) -> Result<Vec<EdgeId>, ExprError> {
    let edges = names
        .iter()
        .map(|n| g.edge(n).ok_or_else(|| ExprError::UnknownEdge(n.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    if edges.windows(2).any(|w| g.range(w[0]) != g.source(w[1])) {
        return Err(ExprError::NotAPath(names.join(" ")));
    }
    Ok(edges)
}

impl Expr {
    pub fn evaluate<I: Interpretation>(
        &self,
        g: &DirectedMultigraph,
        interp: &I,
    ) -> Result<I::Value, ExprError> {
        Ok(match self {
            Expr::Scalar(c) => interp.scalar(c),
            Expr::S(names) => {
                let edges = resolve_path(g, names)?;
                let mut it = edges.iter().map(|&e| interp.s(e));
                let first = it.next().expect("paths in S(..) are nonempty");
                it.fold(first, |acc, x| interp.mul(&acc, &x))
            }
            Expr::SStar(names) => {
                let edges = resolve_path(g, names)?;
                let mut it = edges.iter().rev().map(|&e| interp.s_star(e));
                let first = it.next().expect("paths in S*(..) are nonempty");
                it.fold(first, |acc, x| interp.mul(&acc, &x))
            }
            Expr::P(name) => interp
                .p(g.vertex(name)
                    .ok_or_else(|| ExprError::UnknownVertex(name.clone()))?),
            Expr::Neg(a) => interp.neg(&a.evaluate(g, interp)?),
            Expr::Add(a, b) => interp.add(&a.evaluate(g, interp)?, &b.evaluate(g, interp)?),
            Expr::Sub(a, b) => interp.sub(&a.evaluate(g, interp)?, &b.evaluate(g, interp)?),
            Expr::Mul(a, b) => interp.mul(&a.evaluate(g, interp)?, &b.evaluate(g, interp)?),
        })
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Scalar(c) => write!(f, "{c}"),
            Expr::S(p) => write!(f, "S({})", p.join(" ")),
            Expr::SStar(p) => write!(f, "S*({})", p.join(" ")),
            Expr::P(v) => write!(f, "P({v})"),
            Expr::Neg(a) => write!(f, "-({a})"),
            Expr::Add(a, b) => write!(f, "({a} + {b})"),
            Expr::Sub(a, b) => write!(f, "({a} - {b})"),
            Expr::Mul(a, b) => write!(f, "({a} * {b})"),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn error<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax(self.pos, msg.into()))
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn starts_atom(&mut self) -> bool {
        matches!(self.peek(), Some(c) if c.is_ascii_digit() || matches!(c, 'S' | 'P' | '('))
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            let rhs = if self.eat("*") || self.eat("·") {
                self.unary()?
            } else if self.starts_atom() {
                self.atom()?
            } else {
                return Ok(lhs);
            };
            lhs = Expr::Mul(Box::new(lhs), Box::new(rhs));
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.eat("-") {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.atom()
        }
    }

    fn integer(&mut self) -> Result<BigInt, ExprError> {
        self.skip_ws();
        let len = self.rest().chars().take_while(char::is_ascii_digit).count();
        if len == 0 {
            return self.error("expected digits");
        }
        let digits = &self.rest()[..len];
        self.pos += len;
        Ok(digits.parse().expect("ascii digits"))
    }

    fn names(&mut self) -> Result<Vec<String>, ExprError> {
        let close = match self.rest().find(')') {
            Some(i) => i,
            None => return self.error("missing `)`"),
        };
        let names: Vec<String> = self.rest()[..close]
            .split_whitespace()
            .map(str::to_string)
            .collect();
        if names.is_empty() {
            return self.error("empty generator argument");
        }
        self.pos += close + 1;
        Ok(names)
    }

    fn atom(&mut self) -> Result<Expr, ExprError> {
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let num = self.integer()?;
                if self.eat("/") {
                    let den = self.integer()?;
                    if den == BigInt::from(0) {
                        return self.error("zero denominator");
                    }
                    Ok(Expr::Scalar(Coeff::new(num, den)))
                } else {
                    Ok(Expr::Scalar(Coeff::from_integer(num)))
                }
            }
            Some('(') => {
                self.eat("(");
                let inner = self.expr()?;
                if !self.eat(")") {
                    return self.error("expected `)`");
                }
                Ok(inner)
            }
            _ => {
                if self.rest().starts_with("S*(") {
                    self.pos += 3;
                    Ok(Expr::SStar(self.names()?))
                } else if self.rest().starts_with("S(") {
                    self.pos += 2;
                    Ok(Expr::S(self.names()?))
                } else if self.rest().starts_with("P(") {
                    self.pos += 2;
                    let mut names = self.names()?;
                    if names.len() != 1 {
                        return self.error("P(..) takes one vertex");
                    }
                    Ok(Expr::P(names.remove(0)))
                } else if self.rest().is_empty() {
                    self.error("unexpected end of input")
                } else {
                    self.error("expected a term")
                }
            }
        }
    }
}

pub fn parse_expr(text: &str) -> Result<Expr, ExprError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.expr()?;
    p.skip_ws();
    if !p.rest().is_empty() {
        return p.error("trailing input");
    }
    Ok(e)
}

/// Parses and evaluates `text` in the Leavitt path algebra of `alg`.
pub fn eval_expr(alg: &LeavittAlgebra, text: &str) -> Result<AlgebraElement, ExprError> {
    parse_expr(text)?.evaluate(alg.graph(), alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, GraphFamily};

    fn p2() -> LeavittAlgebra {
        LeavittAlgebra::new(make_family(GraphFamily::P2, 1).unwrap())
    }

    #[test]
    fn eval_examples() {
        let a = p2();
        assert_eq!(
            eval_expr(&a, "S*(e12)*S(e12)").unwrap().to_string(),
            "P(v2)"
        );
        assert_eq!(eval_expr(&a, "S*(e12) S(e23)").unwrap().to_string(), "0");
        assert_eq!(
            eval_expr(&a, "S(e12 e23)").unwrap().to_string(),
            "S(e12 e23)"
        );
        assert_eq!(
            eval_expr(&a, "S*(e12 e23) * S(e12 e23)")
                .unwrap()
                .to_string(),
            "P(v3)"
        );
        assert_eq!(eval_expr(&a, "1").unwrap(), a.unit());
        assert_eq!(
            eval_expr(&a, "-(1/2) * P(v1) + 3/6 · P(v1)")
                .unwrap()
                .to_string(),
            "0"
        );
    }

    #[test]
    fn printed_normal_forms_parse_back() {
        let a = LeavittAlgebra::new(make_family(GraphFamily::Son, 3).unwrap());
        for text in ["S(e1)S*(e1)", "2 · S(e2) - 1/3 · S*(e3) + P(v)", "-P(v1)"] {
            let x = eval_expr(&a, text).unwrap();
            let y = eval_expr(&a, &x.to_string()).unwrap();
            assert_eq!(x, y);
        }
    }

    #[test]
    fn errors() {
        let a = p2();
        assert!(matches!(eval_expr(&a, "S(e12"), Err(ExprError::Syntax(..))));
        assert!(matches!(
            eval_expr(&a, "S(e12) +"),
            Err(ExprError::Syntax(..))
        ));
        assert!(matches!(eval_expr(&a, "1/0"), Err(ExprError::Syntax(..))));
        assert!(matches!(eval_expr(&a, "S()"), Err(ExprError::Syntax(..))));
        assert_eq!(
            eval_expr(&a, "S(x)"),
            Err(ExprError::UnknownEdge("x".into()))
        );
        assert_eq!(
            eval_expr(&a, "P(x)"),
            Err(ExprError::UnknownVertex("x".into()))
        );
        assert_eq!(
            eval_expr(&a, "S(e23 e12)"),
            Err(ExprError::NotAPath("e23 e12".into()))
        );
    }
}
