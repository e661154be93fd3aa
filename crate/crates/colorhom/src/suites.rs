//! The built-in axiom-suite registry.
//!
//! Each structure treated by the crate ships as a named suite: an ordered
//! list of slot roles (the products the axioms quantify over) and a list of
//! identities in the DSL. Suites live as plain text files under `suites/`,
//! embedded at compile time and parsed once at startup, so the registry is
//! data, not code, and user files in the same format can be checked through
//! the ad-hoc identity entry point.

use std::collections::BTreeMap;
use std::sync::LazyLock;

use thiserror::Error;

use crate::algebra::HomAlgebra;
use crate::dsl::{self, CheckReport, IdentitySchema, ParseError, Witness};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SuiteError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("binding references unknown slot `{0}`")]
    UnknownSlot(String),
    #[error("binding maps slot `{slot}` to unknown product `{product}`")]
    UnknownProduct { slot: String, product: String },
    #[error(
        "incomplete binding: slot `{slot}` is unbound and the algebra has {products} products for {slots} unbound slots"
    )]
    IncompleteBinding {
        slot: String,
        slots: usize,
        products: usize,
    },
    #[error("suite file `{file}`: {message}")]
    BadSuiteFile { file: String, message: String },
    #[error(transparent)]
    Eval(#[from] dsl::EvalError),
}

/// A named axiom suite over slot roles.
#[derive(Debug, Clone, PartialEq)]
pub struct Suite {
    pub name: String,
    pub slots: Vec<String>,
    pub schemas: Vec<IdentitySchema>,
}

impl Suite {
    /// Parses the on-disk format: optional `#` comment lines, one
    /// `slots: role role ...` line, then `name: identity` lines.
    pub fn parse(name: impl Into<String>, text: &str) -> Result<Suite, SuiteError> {
        let name = name.into();
        let bad = |message: String| SuiteError::BadSuiteFile {
            file: name.clone(),
            message,
        };
        let mut slots: Option<Vec<String>> = None;
        let mut schemas = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, rest) = line
                .split_once(':')
                .ok_or_else(|| bad(format!("line {}: expected `key: value`", lineno + 1)))?;
            let key = key.trim();
            if key == "slots" {
                if slots.is_some() {
                    return Err(bad(format!("line {}: duplicate slots line", lineno + 1)));
                }
                slots = Some(rest.split_whitespace().map(str::to_owned).collect());
            } else {
                let schema = dsl::parse_identity(key, rest.trim()).map_err(|e: ParseError| {
                    bad(format!("line {}: schema `{key}`: {e}", lineno + 1))
                })?;
                schemas.push(schema);
            }
        }
        let slots = slots.ok_or_else(|| bad("missing slots line".into()))?;
        if schemas.is_empty() {
            return Err(bad("suite has no schemas".into()));
        }
        for s in &schemas {
            for p in s.product_names() {
                if !slots.iter().any(|slot| slot == p) {
                    return Err(bad(format!(
                        "schema `{}` references `{p}` which is not a declared slot",
                        s.name
                    )));
                }
            }
        }
        Ok(Suite {
            name,
            slots,
            schemas,
        })
    }
}

/// The shipped suite sources, one file per structure.
pub const SUITE_SOURCES: &[(&str, &str)] = &[
    (
        "hom-associative-color",
        include_str!("../suites/hom-associative-color.suite"),
    ),
    (
        "eps-commutative",
        include_str!("../suites/eps-commutative.suite"),
    ),
    (
        "hom-left-symmetric-color",
        include_str!("../suites/hom-left-symmetric-color.suite"),
    ),
    (
        "hom-left-symmetric-color-dialgebra",
        include_str!("../suites/hom-left-symmetric-color-dialgebra.suite"),
    ),
    (
        "hom-associative-color-dialgebra",
        include_str!("../suites/hom-associative-color-dialgebra.suite"),
    ),
    (
        "hom-poisson-color-dialgebra",
        include_str!("../suites/hom-poisson-color-dialgebra.suite"),
    ),
    (
        "hom-tridendriform-color",
        include_str!("../suites/hom-tridendriform-color.suite"),
    ),
    (
        "hom-dendriform-color",
        include_str!("../suites/hom-dendriform-color.suite"),
    ),
    (
        "hom-lie-color",
        include_str!("../suites/hom-lie-color.suite"),
    ),
    (
        "hom-poisson-color",
        include_str!("../suites/hom-poisson-color.suite"),
    ),
    (
        "hom-post-lie-color",
        include_str!("../suites/hom-post-lie-color.suite"),
    ),
    (
        "hom-leibniz-color",
        include_str!("../suites/hom-leibniz-color.suite"),
    ),
    (
        "hom-leibniz-poisson-color",
        include_str!("../suites/hom-leibniz-poisson-color.suite"),
    ),
];

static REGISTRY: LazyLock<Vec<Suite>> = LazyLock::new(|| {
    SUITE_SOURCES
        .iter()
        .map(|(name, text)| Suite::parse(*name, text).expect("shipped suite file must parse"))
        .collect()
});

/// The full registry in stable order.
pub fn registry() -> &'static [Suite] {
    &REGISTRY
}

pub fn find_suite(name: &str) -> Result<&'static Suite, SuiteError> {
    registry()
        .iter()
        .find(|s| s.name == name)
        .ok_or_else(|| SuiteError::UnknownSuite(name.to_owned()))
}

/// (name, slots, schema count) for every registered suite.
pub fn list_suites() -> Vec<(String, Vec<String>, usize)> {
    registry()
        .iter()
        .map(|s| (s.name.clone(), s.slots.clone(), s.schemas.len()))
        .collect()
}

/// Resolves a slot→product binding. Explicit entries win; otherwise a product
/// with the slot's own name is taken; otherwise, when the unbound slots and
/// unused products are equally many, they are matched in order.
pub fn resolve_binding(
    alg: &HomAlgebra,
    slots: &[String],
    explicit: &BTreeMap<String, String>,
) -> Result<BTreeMap<String, String>, SuiteError> {
    for slot in explicit.keys() {
        if !slots.iter().any(|s| s == slot) {
            return Err(SuiteError::UnknownSlot(slot.clone()));
        }
    }
    let mut bound: BTreeMap<String, String> = BTreeMap::new();
    let mut used: Vec<&str> = Vec::new();
    for slot in slots {
        if let Some(product) = explicit.get(slot) {
            if alg.product(product).is_none() {
                return Err(SuiteError::UnknownProduct {
                    slot: slot.clone(),
                    product: product.clone(),
                });
            }
            bound.insert(slot.clone(), product.clone());
            used.push(product);
        }
    }
    // name matches
    for slot in slots {
        if bound.contains_key(slot) {
            continue;
        }
        if alg.product(slot).is_some() && !used.contains(&slot.as_str()) {
            bound.insert(slot.clone(), slot.clone());
            used.push(slot);
        }
    }
    // positional fallback
    let unbound: Vec<&String> = slots.iter().filter(|s| !bound.contains_key(*s)).collect();
    if !unbound.is_empty() {
        let free: Vec<&str> = alg
            .products()
            .iter()
            .map(|p| p.name.as_str())
            .filter(|n| !used.contains(n))
            .collect();
        if free.len() != unbound.len() {
            return Err(SuiteError::IncompleteBinding {
                slot: unbound[0].clone(),
                slots: unbound.len(),
                products: free.len(),
            });
        }
        for (slot, product) in unbound.into_iter().zip(free) {
            bound.insert(slot.clone(), product.to_owned());
        }
    }
    Ok(bound)
}

/// Verdict of a whole suite: per-schema reports in suite order.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: String,
    pub binding: BTreeMap<String, String>,
    pub passed: bool,
    pub schemas: Vec<(String, CheckReport)>,
}

impl SuiteReport {
    /// The first failing schema's witness, if any.
    pub fn first_witness(&self) -> Option<&Witness> {
        self.schemas.iter().find_map(|(_, r)| r.witness.as_ref())
    }
}

/// Evaluates every schema of the named suite under the resolved binding.
pub fn check_suite(
    alg: &HomAlgebra,
    suite_name: &str,
    explicit: &BTreeMap<String, String>,
) -> Result<SuiteReport, SuiteError> {
    let suite = find_suite(suite_name)?;
    check_suite_instance(alg, suite, explicit)
}

/// Same as `check_suite` for a suite value not in the registry (user files).
pub fn check_suite_instance(
    alg: &HomAlgebra,
    suite: &Suite,
    explicit: &BTreeMap<String, String>,
) -> Result<SuiteReport, SuiteError> {
    let binding = resolve_binding(alg, &suite.slots, explicit)?;
    let mut schemas = Vec::with_capacity(suite.schemas.len());
    let mut passed = true;
    for schema in &suite.schemas {
        let bound = schema.bind(&binding);
        let report = dsl::evaluate_identity(alg, &bound)?;
        passed &= report.passed;
        schemas.push((schema.name.clone(), report));
    }
    Ok(SuiteReport {
        suite: suite.name.clone(),
        binding,
        passed,
        schemas,
    })
}

/// α∘μᵢ = μᵢ∘(α⊗α) for every product and basis pair.
pub fn check_multiplicative(alg: &HomAlgebra) -> CheckReport {
    let dim = alg.dim();
    let mut checked = 0;
    for (pi, p) in alg.products().iter().enumerate() {
        for i in 0..dim {
            for j in 0..dim {
                checked += 1;
                let lhs = alg.alpha().apply(&p.of_basis(i, j));
                let rhs = alg.product_eval(pi, alg.alpha().image(i), alg.alpha().image(j));
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() {
                    return CheckReport::fail(
                        Witness {
                            identity: format!("multiplicative[{}]", p.name),
                            tuple: vec![i, j],
                            residual,
                        },
                        checked,
                    );
                }
            }
        }
    }
    CheckReport::pass(checked)
}
