//! The multilinear identity DSL.
//!
//! Every axiom handled by this crate is a signed, ε-weighted linear
//! combination of composition patterns of the shapes
//! `p(q(u,v), w)`, `p(q(u,v), a(w))`, `p(w, q(u,v))`, `p(a(w), q(u,v))` and
//! `p(u, v)`, over the variables x, y, z. An identity asserts that the
//! combination vanishes on every tuple of homogeneous elements; by
//! multilinearity it is enough to check all basis tuples, which is exactly
//! what the evaluator does.
//!
//! Grammar (ASCII):
//!
//! ```text
//! identity  := ["-"] term (("+"|"-") term)*
//! term      := [rational "*"] (epsfac "*")* app
//! epsfac    := "eps(" vsum "," vsum ")"
//! vsum      := var ("+" var)*
//! app       := pname "(" node "," node ")"
//! node      := var | "a(" var ")" | pname "(" var "," var ")"
//! var       := "x" | "y" | "z"
//! rational  := "1" | "-1" | "1/2" | ...
//! ```
//!
//! `a` is the twisting map and is reserved; `eps` is reserved. At most two
//! product applications may appear in a term, and `a(...)` may only appear as
//! the lone leaf beside a nested product application.

use std::collections::BTreeSet;
use std::fmt;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::{HomAlgebra, Vector};
use crate::grading::Sign;
use crate::scalar::{int, render_scalar, Scalar};

/// Schema variable. Order x < y < z is the canonical rendering order.
#[derive(Debug, Copy, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    X,
    Y,
    Z,
}

impl Var {
    fn from_name(s: &str) -> Option<Var> {
        match s {
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            _ => None,
        }
    }

    fn index(self) -> usize {
        match self {
            Var::X => 0,
            Var::Y => 1,
            Var::Z => 2,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::X => write!(f, "x"),
            Var::Y => write!(f, "y"),
            Var::Z => write!(f, "z"),
        }
    }
}

/// One ε prefactor ε(deg S, deg T) with S, T nonempty sets of variables whose
/// degrees are summed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpsFactor {
    pub left: Vec<Var>,
    pub right: Vec<Var>,
}

/// A composition pattern. The twist `a` carries exponent 0 or 1 and only
/// appears as the leaf beside a nested application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Pattern {
    /// p(u, v)
    Plain {
        product: String,
        left: Var,
        right: Var,
    },
    /// outer(inner(u, v), w) or outer(inner(u, v), a(w))
    NestLeft {
        outer: String,
        inner: String,
        inner_left: Var,
        inner_right: Var,
        leaf: Var,
        twisted: bool,
    },
    /// outer(w, inner(u, v)) or outer(a(w), inner(u, v))
    NestRight {
        outer: String,
        leaf: Var,
        twisted: bool,
        inner: String,
        inner_left: Var,
        inner_right: Var,
    },
}

impl Pattern {
    fn vars(&self) -> Vec<Var> {
        match self {
            Pattern::Plain { left, right, .. } => vec![*left, *right],
            Pattern::NestLeft {
                inner_left,
                inner_right,
                leaf,
                ..
            }
            | Pattern::NestRight {
                leaf,
                inner_left,
                inner_right,
                ..
            } => vec![*inner_left, *inner_right, *leaf],
        }
    }

    fn products(&self) -> Vec<&str> {
        match self {
            Pattern::Plain { product, .. } => vec![product],
            Pattern::NestLeft { outer, inner, .. } | Pattern::NestRight { outer, inner, .. } => {
                vec![outer, inner]
            }
        }
    }
}

/// One signed ε-weighted pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: Scalar,
    pub eps_factors: Vec<EpsFactor>,
    pub pattern: Pattern,
}

/// A parsed multilinear identity, asserting that the sum of its terms
/// vanishes on all homogeneous tuples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentitySchema {
    pub name: String,
    arity: u8,
    terms: Vec<Term>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("parse error at byte {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

fn err<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        position,
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Ident(String),
    Int(String),
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Comma,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '+' => {
                out.push((i, Tok::Plus));
                i += 1;
            }
            '-' => {
                out.push((i, Tok::Minus));
                i += 1;
            }
            '*' => {
                out.push((i, Tok::Star));
                i += 1;
            }
            '/' => {
                out.push((i, Tok::Slash));
                i += 1;
            }
            '(' => {
                out.push((i, Tok::LParen));
                i += 1;
            }
            ')' => {
                out.push((i, Tok::RParen));
                i += 1;
            }
            ',' => {
                out.push((i, Tok::Comma));
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((start, Tok::Int(text[start..i].to_owned())));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((start, Tok::Ident(text[start..i].to_owned())));
            }
            other => return err(i, format!("unexpected character `{other}`")),
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
}

#[derive(Debug)]
enum Node {
    Leaf(Var),
    Alpha(Var),
    App(String, Var, Var),
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn peek2(&self) -> Option<&Tok> {
        self.toks.get(self.pos + 1).map(|(_, t)| t)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map(|(p, _)| *p).unwrap_or(self.end)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), ParseError> {
        let at = self.here();
        match self.bump() {
            Some(t) if t == want => Ok(()),
            _ => err(at, format!("expected {what}")),
        }
    }

    fn parse_identity(&mut self) -> Result<Vec<Term>, ParseError> {
        let mut terms = Vec::new();
        let mut sign = int(1);
        if matches!(self.peek(), Some(Tok::Minus)) {
            self.bump();
            sign = int(-1);
        } else if matches!(self.peek(), Some(Tok::Plus)) {
            self.bump();
        }
        terms.push(self.parse_term(sign)?);
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    let t = self.parse_term(int(1))?;
                    terms.push(t);
                }
                Some(Tok::Minus) => {
                    self.bump();
                    let t = self.parse_term(int(-1))?;
                    terms.push(t);
                }
                None => break,
                _ => return err(self.here(), "expected `+`, `-` or end of identity"),
            }
        }
        Ok(terms)
    }

    fn parse_term(&mut self, sign: Scalar) -> Result<Term, ParseError> {
        let mut coeff = sign;
        // optional rational prefix, possibly itself signed; a `-` is only
        // consumed here when digits follow, so it cannot eat a connective
        let mut rat_sign = int(1);
        if matches!(self.peek(), Some(Tok::Minus)) && matches!(self.peek2(), Some(Tok::Int(_))) {
            self.bump();
            rat_sign = int(-1);
        }
        if matches!(self.peek(), Some(Tok::Int(_))) {
            let at = self.here();
            let numer = match self.bump() {
                Some(Tok::Int(s)) => s,
                _ => unreachable!(),
            };
            let denom = if matches!(self.peek(), Some(Tok::Slash)) {
                self.bump();
                let dat = self.here();
                match self.bump() {
                    Some(Tok::Int(s)) => Some((dat, s)),
                    _ => return err(dat, "expected denominator after `/`"),
                }
            } else {
                None
            };
            let text = match &denom {
                Some((_, d)) => format!("{numer}/{d}"),
                None => numer.clone(),
            };
            let r = crate::scalar::parse_scalar(&text).map_err(|e| ParseError {
                position: at,
                message: e.to_string(),
            })?;
            coeff *= rat_sign * r;
            self.expect(Tok::Star, "`*` after coefficient")?;
        }
        // eps factors
        let mut eps_factors = Vec::new();
        while matches!(self.peek(), Some(Tok::Ident(id)) if id == "eps") {
            self.bump();
            self.expect(Tok::LParen, "`(` after `eps`")?;
            let left = self.parse_vsum()?;
            self.expect(Tok::Comma, "`,` between eps arguments")?;
            let right = self.parse_vsum()?;
            self.expect(Tok::RParen, "`)` closing eps")?;
            self.expect(Tok::Star, "`*` after eps factor")?;
            eps_factors.push(EpsFactor { left, right });
        }
        let pattern = self.parse_app()?;
        Ok(Term {
            coeff,
            eps_factors,
            pattern,
        })
    }

    fn parse_vsum(&mut self) -> Result<Vec<Var>, ParseError> {
        let mut vars = BTreeSet::new();
        loop {
            let at = self.here();
            match self.bump() {
                Some(Tok::Ident(id)) => match Var::from_name(&id) {
                    Some(v) => {
                        if !vars.insert(v) {
                            return err(at, format!("variable `{v}` repeated in eps argument"));
                        }
                    }
                    None => return err(at, format!("unknown variable `{id}`")),
                },
                _ => return err(at, "expected variable"),
            }
            if matches!(self.peek(), Some(Tok::Plus)) {
                self.bump();
            } else {
                break;
            }
        }
        Ok(vars.into_iter().collect())
    }

    fn parse_app(&mut self) -> Result<Pattern, ParseError> {
        let at = self.here();
        let name = match self.bump() {
            Some(Tok::Ident(id)) => id,
            _ => return err(at, "expected product application"),
        };
        if name == "a" {
            return err(at, "the twist `a` cannot be the outermost application");
        }
        if name == "eps" {
            return err(at, "eps factor must be followed by `*` and an application");
        }
        if Var::from_name(&name).is_some() {
            return err(at, format!("variable `{name}` used as a product"));
        }
        self.expect(Tok::LParen, "`(` after product name")?;
        let left = self.parse_node()?;
        self.expect(Tok::Comma, "`,` between product arguments")?;
        let right = self.parse_node()?;
        self.expect(Tok::RParen, "`)` closing application")?;
        let pattern = match (left, right) {
            (Node::Leaf(u), Node::Leaf(v)) => Pattern::Plain {
                product: name,
                left: u,
                right: v,
            },
            (Node::App(inner, u, v), Node::Leaf(w)) => Pattern::NestLeft {
                outer: name,
                inner,
                inner_left: u,
                inner_right: v,
                leaf: w,
                twisted: false,
            },
            (Node::App(inner, u, v), Node::Alpha(w)) => Pattern::NestLeft {
                outer: name,
                inner,
                inner_left: u,
                inner_right: v,
                leaf: w,
                twisted: true,
            },
            (Node::Leaf(w), Node::App(inner, u, v)) => Pattern::NestRight {
                outer: name,
                leaf: w,
                twisted: false,
                inner,
                inner_left: u,
                inner_right: v,
            },
            (Node::Alpha(w), Node::App(inner, u, v)) => Pattern::NestRight {
                outer: name,
                leaf: w,
                twisted: true,
                inner,
                inner_left: u,
                inner_right: v,
            },
            (Node::App(..), Node::App(..)) => {
                return err(at, "pattern deeper than two product applications")
            }
            (Node::Alpha(_), _) | (_, Node::Alpha(_)) => {
                return err(
                    at,
                    "`a(...)` is only allowed beside a nested product application",
                )
            }
        };
        let vars = pattern.vars();
        let distinct: BTreeSet<Var> = vars.iter().copied().collect();
        if distinct.len() != vars.len() {
            return err(at, "variables within a pattern must be distinct");
        }
        Ok(pattern)
    }

    fn parse_node(&mut self) -> Result<Node, ParseError> {
        let at = self.here();
        let name = match self.bump() {
            Some(Tok::Ident(id)) => id,
            _ => return err(at, "expected variable, `a(var)` or nested application"),
        };
        if name == "a" {
            self.expect(Tok::LParen, "`(` after `a`")?;
            let vat = self.here();
            let inner = match self.bump() {
                Some(Tok::Ident(id)) => id,
                _ => return err(vat, "expected variable inside `a(...)`"),
            };
            if inner == "a" {
                return err(vat, "the twist `a` cannot be nested under `a`");
            }
            let v = match Var::from_name(&inner) {
                Some(v) => v,
                None => return err(vat, format!("unknown variable `{inner}` inside `a(...)`")),
            };
            // a binary argument list here means `a` was used as a product
            if matches!(self.peek(), Some(Tok::Comma)) {
                return err(
                    self.here(),
                    "the twist `a` takes a single variable, not two",
                );
            }
            self.expect(Tok::RParen, "`)` closing `a(...)`")?;
            return Ok(Node::Alpha(v));
        }
        match Var::from_name(&name) {
            Some(v) => {
                if matches!(self.peek(), Some(Tok::LParen)) {
                    return err(at, format!("variable `{name}` used as a product"));
                }
                Ok(Node::Leaf(v))
            }
            None => {
                // nested product application: arguments must be plain variables
                self.expect(Tok::LParen, "`(` after nested product name")?;
                let u = self.parse_inner_var()?;
                self.expect(Tok::Comma, "`,` between nested arguments")?;
                let v = self.parse_inner_var()?;
                self.expect(Tok::RParen, "`)` closing nested application")?;
                Ok(Node::App(name, u, v))
            }
        }
    }

    fn parse_inner_var(&mut self) -> Result<Var, ParseError> {
        let at = self.here();
        match self.bump() {
            Some(Tok::Ident(id)) => {
                if id == "a" && matches!(self.peek(), Some(Tok::LParen)) {
                    return err(
                        at,
                        "the twist `a` cannot appear inside a nested application",
                    );
                }
                if matches!(self.peek(), Some(Tok::LParen)) {
                    return err(at, "pattern deeper than two product applications");
                }
                Var::from_name(&id)
                    .ok_or(())
                    .or_else(|_| err(at, format!("unknown variable `{id}`")))
            }
            _ => err(at, "expected variable"),
        }
    }
}

/// Parses the identity text into a schema named `name`.
pub fn parse_identity(name: impl Into<String>, text: &str) -> Result<IdentitySchema, ParseError> {
    let toks = lex(text)?;
    if toks.is_empty() {
        return err(0, "empty identity");
    }
    let mut p = Parser {
        toks,
        pos: 0,
        end: text.len(),
    };
    let terms = p.parse_identity()?;
    let mut vars: BTreeSet<Var> = BTreeSet::new();
    for t in &terms {
        vars.extend(t.pattern.vars());
        for e in &t.eps_factors {
            vars.extend(e.left.iter().copied());
            vars.extend(e.right.iter().copied());
        }
    }
    let arity = if vars.contains(&Var::Z) { 3 } else { 2 };
    Ok(IdentitySchema {
        name: name.into(),
        arity,
        terms,
    })
}

impl IdentitySchema {
    pub fn arity(&self) -> u8 {
        self.arity
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// Product names referenced by the schema, deduplicated.
    pub fn product_names(&self) -> BTreeSet<&str> {
        self.terms
            .iter()
            .flat_map(|t| t.pattern.products())
            .collect()
    }

    /// Renames products through a slot binding; names without a binding are
    /// kept as they are.
    pub fn bind(&self, binding: &std::collections::BTreeMap<String, String>) -> IdentitySchema {
        let map = |s: &str| -> String { binding.get(s).cloned().unwrap_or_else(|| s.to_owned()) };
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.clone(),
                eps_factors: t.eps_factors.clone(),
                pattern: match &t.pattern {
                    Pattern::Plain {
                        product,
                        left,
                        right,
                    } => Pattern::Plain {
                        product: map(product),
                        left: *left,
                        right: *right,
                    },
                    Pattern::NestLeft {
                        outer,
                        inner,
                        inner_left,
                        inner_right,
                        leaf,
                        twisted,
                    } => Pattern::NestLeft {
                        outer: map(outer),
                        inner: map(inner),
                        inner_left: *inner_left,
                        inner_right: *inner_right,
                        leaf: *leaf,
                        twisted: *twisted,
                    },
                    Pattern::NestRight {
                        outer,
                        leaf,
                        twisted,
                        inner,
                        inner_left,
                        inner_right,
                    } => Pattern::NestRight {
                        outer: map(outer),
                        leaf: *leaf,
                        twisted: *twisted,
                        inner: map(inner),
                        inner_left: *inner_left,
                        inner_right: *inner_right,
                    },
                },
            })
            .collect();
        IdentitySchema {
            name: self.name.clone(),
            arity: self.arity,
            terms,
        }
    }

    /// Canonical rendering; `parse_identity(render(s))` is structurally equal
    /// to `s`.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mag = t.coeff.abs();
            if !mag.is_one() {
                out.push_str(&render_scalar(&mag));
                out.push('*');
            }
            for e in &t.eps_factors {
                out.push_str("eps(");
                push_vsum(&mut out, &e.left);
                out.push(',');
                push_vsum(&mut out, &e.right);
                out.push_str(")*");
            }
            match &t.pattern {
                Pattern::Plain {
                    product,
                    left,
                    right,
                } => out.push_str(&format!("{product}({left},{right})")),
                Pattern::NestLeft {
                    outer,
                    inner,
                    inner_left,
                    inner_right,
                    leaf,
                    twisted,
                } => {
                    if *twisted {
                        out.push_str(&format!(
                            "{outer}({inner}({inner_left},{inner_right}),a({leaf}))"
                        ));
                    } else {
                        out.push_str(&format!(
                            "{outer}({inner}({inner_left},{inner_right}),{leaf})"
                        ));
                    }
                }
                Pattern::NestRight {
                    outer,
                    leaf,
                    twisted,
                    inner,
                    inner_left,
                    inner_right,
                } => {
                    if *twisted {
                        out.push_str(&format!(
                            "{outer}(a({leaf}),{inner}({inner_left},{inner_right}))"
                        ));
                    } else {
                        out.push_str(&format!(
                            "{outer}({leaf},{inner}({inner_left},{inner_right}))"
                        ));
                    }
                }
            }
        }
        out
    }
}

fn push_vsum(out: &mut String, vars: &[Var]) {
    for (i, v) in vars.iter().enumerate() {
        if i > 0 {
            out.push('+');
        }
        out.push_str(&v.to_string());
    }
}

/// A failing tuple together with its nonzero residual.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub identity: String,
    pub tuple: Vec<usize>,
    pub residual: Vector,
}

/// Verdict of checking one identity (or one built-in condition) over all
/// basis tuples.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckReport {
    pub passed: bool,
    pub witness: Option<Witness>,
    pub tuples_checked: u64,
}

impl CheckReport {
    pub fn pass(tuples_checked: u64) -> Self {
        CheckReport {
            passed: true,
            witness: None,
            tuples_checked,
        }
    }

    pub fn fail(witness: Witness, tuples_checked: u64) -> Self {
        CheckReport {
            passed: false,
            witness: Some(witness),
            tuples_checked,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EvalError {
    #[error("schema references unknown product `{0}`")]
    UnknownProduct(String),
}

/// Evaluates the schema over every tuple of basis vectors, in lexicographic
/// order of basis indices; stops at the first nonzero residual.
pub fn evaluate_identity(
    alg: &HomAlgebra,
    schema: &IdentitySchema,
) -> Result<CheckReport, EvalError> {
    for name in schema.product_names() {
        if alg.product(name).is_none() {
            return Err(EvalError::UnknownProduct(name.to_owned()));
        }
    }
    let dim = alg.dim();
    let arity = schema.arity() as usize;
    let mut tuple = vec![0usize; arity];
    let mut checked: u64 = 0;
    loop {
        checked += 1;
        let residual = evaluate_on_tuple(alg, schema, &tuple);
        if !residual.is_zero() {
            return Ok(CheckReport::fail(
                Witness {
                    identity: schema.name.clone(),
                    tuple: tuple.clone(),
                    residual,
                },
                checked,
            ));
        }
        // advance odometer, last variable fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Ok(CheckReport::pass(checked));
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < dim {
                break;
            }
            tuple[pos] = 0;
        }
    }
}

/// Residual of the schema on one basis tuple (x, y, z ↦ tuple indices).
pub fn evaluate_on_tuple(alg: &HomAlgebra, schema: &IdentitySchema, tuple: &[usize]) -> Vector {
    let assign = |v: Var| tuple[v.index()];
    let mut residual = Vector::zero();
    for term in &schema.terms {
        let mut coeff = term.coeff.clone();
        for e in &term.eps_factors {
            let mut left = alg.space().group().zero();
            for v in &e.left {
                left = alg
                    .space()
                    .group()
                    .add(&left, alg.space().degree(assign(*v)));
            }
            let mut right = alg.space().group().zero();
            for v in &e.right {
                right = alg
                    .space()
                    .group()
                    .add(&right, alg.space().degree(assign(*v)));
            }
            if alg.eps_deg(&left, &right) == Sign::Minus {
                coeff = -coeff;
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let value = match &term.pattern {
            Pattern::Plain {
                product,
                left,
                right,
            } => {
                let idx = alg.product_index(product).expect("checked");
                alg.products()[idx].of_basis(assign(*left), assign(*right))
            }
            Pattern::NestLeft {
                outer,
                inner,
                inner_left,
                inner_right,
                leaf,
                twisted,
            } => {
                let inner_idx = alg.product_index(inner).expect("checked");
                let outer_idx = alg.product_index(outer).expect("checked");
                let mid =
                    alg.products()[inner_idx].of_basis(assign(*inner_left), assign(*inner_right));
                let leaf_vec = leaf_vector(alg, assign(*leaf), *twisted);
                alg.product_eval(outer_idx, &mid, &leaf_vec)
            }
            Pattern::NestRight {
                outer,
                leaf,
                twisted,
                inner,
                inner_left,
                inner_right,
            } => {
                let inner_idx = alg.product_index(inner).expect("checked");
                let outer_idx = alg.product_index(outer).expect("checked");
                let mid =
                    alg.products()[inner_idx].of_basis(assign(*inner_left), assign(*inner_right));
                let leaf_vec = leaf_vector(alg, assign(*leaf), *twisted);
                alg.product_eval(outer_idx, &leaf_vec, &mid)
            }
        };
        residual.add_scaled(&coeff, &value);
    }
    residual
}

fn leaf_vector(alg: &HomAlgebra, i: usize, twisted: bool) -> Vector {
    if twisted {
        alg.alpha().image(i).clone()
    } else {
        Vector::basis(i)
    }
}
