//! Construction theorems: each one takes validated inputs, verifies the
//! stated hypotheses, builds a new algebra, and re-checks the conclusion
//! suite on the output.
//!
//! Post-verification is deliberate: the engine independently confirms each
//! conclusion instead of trusting it. `verify = false` skips both hypothesis
//! and conclusion checks so counterexample hunting can build from inputs that
//! do not satisfy the hypotheses; the output algebra itself is still
//! structurally validated (evenness, bicharacter).

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{AlgebraError, HomAlgebra, LinearMap, Product, Vector};
use crate::dsl::Witness;
use crate::grading::Degree;
use crate::operators::{check_morphism, check_operator, OperatorError, OperatorKind};
use crate::scalar::{int, render_scalar, Scalar};
use crate::suites::{check_multiplicative, check_suite, resolve_binding, SuiteError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ConstructionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Suite(#[from] SuiteError),
    #[error(transparent)]
    Operator(#[from] OperatorError),
    #[error("inputs live over different grading groups")]
    GroupMismatch,
    #[error("inputs carry different bicharacters")]
    BicharacterMismatch,
    #[error("{construction} needs exactly one product, found {found}")]
    SingleProductRequired {
        construction: &'static str,
        found: usize,
    },
    #[error("hypothesis failed: {requirement}")]
    Precondition {
        requirement: String,
        witness: Option<Witness>,
    },
    #[error("constructed algebra fails its expected suite `{suite}` at schema `{schema}`")]
    PostCheck {
        suite: String,
        schema: String,
        witness: Witness,
    },
    #[error("unknown basis name `{0}` in ideal")]
    UnknownBasis(String),
    #[error("parameter {param} too large (max {max})")]
    ParameterTooLarge { param: &'static str, max: u32 },
}

/// Replayable record of how an algebra was produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub construction: String,
    pub params: BTreeMap<String, String>,
}

impl Provenance {
    fn new(construction: &str) -> Self {
        Provenance {
            construction: construction.to_owned(),
            params: BTreeMap::new(),
        }
    }

    fn with(mut self, key: &str, value: impl Into<String>) -> Self {
        self.params.insert(key.to_owned(), value.into());
        self
    }
}

/// A constructed algebra together with its provenance and the suite its
/// conclusion is expected to satisfy (`None` when the conclusion is not a
/// plain registry suite, or when the construction preserves whatever suite
/// the input was certified against and no claim was provided).
#[derive(Debug, Clone, PartialEq)]
pub struct ConstructionResult {
    pub algebra: HomAlgebra,
    pub provenance: Provenance,
    pub expected_suite: Option<String>,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum SplitMode {
    Tridendriform,
    Dendriform,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum BracketKind {
    Commutator,
    Dialgebra,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum DerivedType {
    One,
    Two,
}

#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum CentroidVariant {
    LeftComposite,
    Split,
}

fn require_suite(
    alg: &HomAlgebra,
    suite: &str,
    explicit: &BTreeMap<String, String>,
    requirement: &str,
) -> Result<BTreeMap<String, String>, ConstructionError> {
    let report = check_suite(alg, suite, explicit)?;
    if !report.passed {
        let (schema, bad) = report
            .schemas
            .iter()
            .find(|(_, r)| !r.passed)
            .expect("failed suite has a failing schema");
        return Err(ConstructionError::Precondition {
            requirement: format!("{requirement} (suite `{suite}`, schema `{schema}`)"),
            witness: bad.witness.clone(),
        });
    }
    Ok(report.binding)
}

fn require_operator(
    alg: &HomAlgebra,
    kind: &OperatorKind,
    m: &LinearMap,
    requirement: &str,
) -> Result<(), ConstructionError> {
    let report = check_operator(alg, kind, m, None)?;
    if !report.passed {
        return Err(ConstructionError::Precondition {
            requirement: requirement.to_owned(),
            witness: report.witness,
        });
    }
    Ok(())
}

fn post_check(
    alg: &HomAlgebra,
    suite: &str,
    explicit: &BTreeMap<String, String>,
) -> Result<(), ConstructionError> {
    let report = check_suite(alg, suite, explicit)?;
    if !report.passed {
        let (schema, bad) = report
            .schemas
            .iter()
            .find(|(_, r)| !r.passed)
            .expect("failed suite has a failing schema");
        return Err(ConstructionError::PostCheck {
            suite: suite.to_owned(),
            schema: schema.clone(),
            witness: bad.witness.clone().expect("failing schema has a witness"),
        });
    }
    Ok(())
}

fn single_product(
    alg: &HomAlgebra,
    construction: &'static str,
) -> Result<usize, ConstructionError> {
    if alg.products().len() != 1 {
        return Err(ConstructionError::SingleProductRequired {
            construction,
            found: alg.products().len(),
        });
    }
    Ok(0)
}

/// Builds a product from a closure over basis pairs.
fn product_of(name: &str, dim: usize, mut f: impl FnMut(usize, usize) -> Vector) -> Product {
    let mut p = Product::new(name);
    for i in 0..dim {
        for j in 0..dim {
            p.insert(i, j, f(i, j));
        }
    }
    p
}

/// Composes every table entry with a linear map (m ∘ table).
fn compose_table(p: &Product, m: &LinearMap) -> Product {
    let mut out = Product::new(p.name.clone());
    for (&(i, j), v) in p.entries() {
        out.insert(i, j, m.apply(v));
    }
    out
}

/// Tensor product of two single-product algebras over the same group and
/// bicharacter: (a₁⊗a₂)·(b₁⊗b₂) = ε(a₂,b₁)(a₁b₁)⊗(a₂b₂), twist α₁⊗α₂.
pub fn tensor_product(
    a1: &HomAlgebra,
    a2: &HomAlgebra,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    if a1.group() != a2.group() {
        return Err(ConstructionError::GroupMismatch);
    }
    if a1.bicharacter() != a2.bicharacter() {
        return Err(ConstructionError::BicharacterMismatch);
    }
    let p1 = single_product(a1, "tensor_product")?;
    let p2 = single_product(a2, "tensor_product")?;

    let mut expected = None;
    if verify {
        let assoc1 = check_suite(a1, "hom-associative-color", &BTreeMap::new())?.passed;
        let assoc2 = check_suite(a2, "hom-associative-color", &BTreeMap::new())?.passed;
        if assoc1 && assoc2 {
            expected = Some("hom-associative-color".to_owned());
        } else {
            let ls1 = check_suite(a1, "hom-left-symmetric-color", &BTreeMap::new())?.passed;
            let comm2 = check_suite(a2, "eps-commutative", &BTreeMap::new())?.passed;
            if ls1 && assoc2 && comm2 {
                expected = Some("hom-left-symmetric-color".to_owned());
            } else {
                return Err(ConstructionError::Precondition {
                    requirement: "tensor factors fit neither theorem: need both hom-associative, \
                                  or left factor hom-left-symmetric and right factor commutative hom-associative"
                        .into(),
                    witness: None,
                });
            }
        }
    }

    let d1 = a1.dim();
    let d2 = a2.dim();
    let group = a1.group().clone();
    let idx = |i: usize, j: usize| i * d2 + j;
    let mut basis: Vec<(String, Degree)> = Vec::with_capacity(d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            basis.push((
                format!("{}|{}", a1.space().name(i), a2.space().name(j)),
                group.add(a1.space().degree(i), a2.space().degree(j)),
            ));
        }
    }
    let space = crate::algebra::GradedSpace::new(group, basis)?;

    let tensor = |u: &Vector, v: &Vector, sign: &Scalar| -> Vector {
        let mut out = Vector::zero();
        for (k1, c1) in u.iter() {
            for (k2, c2) in v.iter() {
                out.add_scaled_basis(idx(k1, k2), sign * c1 * c2);
            }
        }
        out
    };

    let mut star = Product::new("star");
    for i1 in 0..d1 {
        for i2 in 0..d2 {
            for j1 in 0..d1 {
                for j2 in 0..d2 {
                    let sign = a1
                        .eps_deg(a2.space().degree(i2), a1.space().degree(j1))
                        .scalar();
                    let left = a1.products()[p1].of_basis(i1, j1);
                    let right = a2.products()[p2].of_basis(i2, j2);
                    star.insert(idx(i1, i2), idx(j1, j2), tensor(&left, &right, &sign));
                }
            }
        }
    }

    let mut alpha_images = Vec::with_capacity(d1 * d2);
    for i in 0..d1 {
        for j in 0..d2 {
            alpha_images.push(tensor(a1.alpha().image(i), a2.alpha().image(j), &int(1)));
        }
    }

    let algebra = HomAlgebra::new(
        space,
        vec![star],
        LinearMap::from_images(alpha_images),
        a1.bicharacter().clone(),
        BTreeMap::new(),
    )?;

    if verify {
        if let Some(s) = &expected {
            post_check(&algebra, s, &BTreeMap::new())?;
        }
    }

    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("tensor_product")
            .with("left_product", a1.products()[p1].name.clone())
            .with("right_product", a2.products()[p2].name.clone()),
        expected_suite: expected,
    })
}

/// Deformed product μᴺ(x,y) = μ(N(x),y) + μ(x,N(y)) − N(μ(x,y)) of a
/// Nijenhuis operator, optionally composed with α.
pub fn nijenhuis_deform(
    alg: &HomAlgebra,
    n: &LinearMap,
    compose_alpha: bool,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let pi = single_product(alg, "nijenhuis_deform")?;
    if verify {
        require_operator(
            alg,
            &OperatorKind::Nijenhuis,
            n,
            "map is a Nijenhuis operator",
        )?;
    }
    let name = alg.products()[pi].name.clone();
    let mut deformed = product_of(&name, alg.dim(), |i, j| {
        let x = Vector::basis(i);
        let y = Vector::basis(j);
        alg.product_eval(pi, n.image(i), &y)
            .add(&alg.product_eval(pi, &x, n.image(j)))
            .sub(&n.apply(&alg.products()[pi].of_basis(i, j)))
    });
    if compose_alpha {
        deformed = compose_table(&deformed, alg.alpha());
    }
    let algebra = HomAlgebra::new(
        alg.space().clone(),
        vec![deformed],
        alg.alpha().clone(),
        alg.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(&algebra, "hom-associative-color", &BTreeMap::new())?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("nijenhuis_deform")
            .with("compose_alpha", compose_alpha.to_string()),
        expected_suite: Some("hom-associative-color".into()),
    })
}

/// Dialgebra of an averaging operator β: x⊣y = x·β(y), x⊢y = β(x)·y, with β
/// serving as the twist of the result.
pub fn averaging_dialgebra(
    alg: &HomAlgebra,
    beta: &LinearMap,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let pi = single_product(alg, "averaging_dialgebra")?;
    beta.check_even(alg.space())
        .map_err(OperatorError::OddMap)
        .map_err(ConstructionError::from)?;
    if verify {
        require_suite(
            alg,
            "hom-associative-color",
            &BTreeMap::new(),
            "input product is hom-associative",
        )?;
        require_operator(
            alg,
            &OperatorKind::Averaging,
            beta,
            "map is an averaging operator",
        )?;
        // the theorem twists by the averaging map itself
        let with_beta = alg.with_products(alg.products().to_vec(), beta.clone())?;
        require_suite(
            &with_beta,
            "hom-associative-color",
            &BTreeMap::new(),
            "product is hom-associative with the averaging map as twist",
        )?;
    }
    let ladj = product_of("ladj", alg.dim(), |i, j| {
        alg.product_eval(pi, &Vector::basis(i), beta.image(j))
    });
    let radj = product_of("radj", alg.dim(), |i, j| {
        alg.product_eval(pi, beta.image(i), &Vector::basis(j))
    });
    let algebra = HomAlgebra::new(
        alg.space().clone(),
        vec![ladj, radj],
        beta.clone(),
        alg.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(
            &algebra,
            "hom-associative-color-dialgebra",
            &BTreeMap::new(),
        )?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("averaging_dialgebra"),
        expected_suite: Some("hom-associative-color-dialgebra".into()),
    })
}

/// Rota-Baxter splitting of a hom-associative product. Tridendriform mode:
/// x⊣y = x·R(y), x⊢y = ε(x,y)R(x)·y, x·y = λε(x,y)xy. Dendriform mode:
/// x⊣y = x·R(y) + λxy, x⊢y = ε(x,y)R(x)·y.
pub fn rb_split(
    alg: &HomAlgebra,
    r: &LinearMap,
    weight: &Scalar,
    mode: SplitMode,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let pi = single_product(alg, "rb_split")?;
    if verify {
        require_suite(
            alg,
            "hom-associative-color",
            &BTreeMap::new(),
            "input product is hom-associative",
        )?;
        require_operator(
            alg,
            &OperatorKind::RotaBaxter {
                weight: weight.clone(),
            },
            r,
            "map is a Rota-Baxter operator of the given weight",
        )?;
    }
    let ladj_plain = |i: usize, j: usize| alg.product_eval(pi, &Vector::basis(i), r.image(j));
    let radj = product_of("radj", alg.dim(), |i, j| {
        alg.product_eval(pi, r.image(i), &Vector::basis(j))
            .scale(&alg.eps(i, j).scalar())
    });
    let (products, expected) = match mode {
        SplitMode::Tridendriform => {
            let ladj = product_of("ladj", alg.dim(), ladj_plain);
            let dot = product_of("dot", alg.dim(), |i, j| {
                alg.products()[pi]
                    .of_basis(i, j)
                    .scale(&(weight * alg.eps(i, j).scalar()))
            });
            (vec![ladj, radj, dot], "hom-tridendriform-color")
        }
        SplitMode::Dendriform => {
            let ladj = product_of("ladj", alg.dim(), |i, j| {
                ladj_plain(i, j).add(&alg.products()[pi].of_basis(i, j).scale(weight))
            });
            (vec![ladj, radj], "hom-dendriform-color")
        }
    };
    let algebra = HomAlgebra::new(
        alg.space().clone(),
        products,
        alg.alpha().clone(),
        alg.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(&algebra, expected, &BTreeMap::new())?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("rb_split")
            .with("weight", render_scalar(weight))
            .with(
                "mode",
                match mode {
                    SplitMode::Tridendriform => "tridendriform",
                    SplitMode::Dendriform => "dendriform",
                },
            ),
        expected_suite: Some(expected.into()),
    })
}

/// Associative sum x∗y = x⊢y + ε(x,y)x⊣y + x·y of a tridendriform algebra.
pub fn sum_product(
    tri: &HomAlgebra,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let binding = bound_or_resolved(tri, "hom-tridendriform-color", verify)?;
    let la = tri.product_index(&binding["ladj"])?;
    let ra = tri.product_index(&binding["radj"])?;
    let dot = tri.product_index(&binding["dot"])?;
    let star = product_of("star", tri.dim(), |i, j| {
        tri.products()[ra]
            .of_basis(i, j)
            .add(
                &tri.products()[la]
                    .of_basis(i, j)
                    .scale(&tri.eps(i, j).scalar()),
            )
            .add(&tri.products()[dot].of_basis(i, j))
    });
    let algebra = HomAlgebra::new(
        tri.space().clone(),
        vec![star],
        tri.alpha().clone(),
        tri.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(&algebra, "hom-associative-color", &BTreeMap::new())?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("sum_product"),
        expected_suite: Some("hom-associative-color".into()),
    })
}

/// Appends an ε-commutator bracket: from one hom-associative product
/// ({x,y} = xy − ε(x,y)yx), or from a dialgebra ({x,y} = x⊣y − ε(x,y)y⊢x).
pub fn bracket_from(
    alg: &HomAlgebra,
    kind: BracketKind,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    match kind {
        BracketKind::Commutator => {
            let pi = single_product(alg, "bracket_from(commutator)")?;
            if verify {
                require_suite(
                    alg,
                    "hom-associative-color",
                    &BTreeMap::new(),
                    "input product is hom-associative",
                )?;
            }
            let bracket = product_of("bracket", alg.dim(), |i, j| {
                alg.products()[pi].of_basis(i, j).sub(
                    &alg.products()[pi]
                        .of_basis(j, i)
                        .scale(&alg.eps(i, j).scalar()),
                )
            });
            let mu_name = alg.products()[pi].name.clone();
            let mut products = alg.products().to_vec();
            products.push(bracket);
            let algebra = HomAlgebra::new(
                alg.space().clone(),
                products,
                alg.alpha().clone(),
                alg.bicharacter().clone(),
                BTreeMap::new(),
            )?;
            let binding: BTreeMap<String, String> = [
                ("mu".to_owned(), mu_name),
                ("bracket".to_owned(), "bracket".to_owned()),
            ]
            .into();
            if verify {
                post_check(&algebra, "hom-poisson-color", &binding)?;
            }
            Ok(ConstructionResult {
                algebra,
                provenance: Provenance::new("bracket_from").with("kind", "commutator"),
                expected_suite: Some("hom-poisson-color".into()),
            })
        }
        BracketKind::Dialgebra => {
            let binding = bound_or_resolved(alg, "hom-associative-color-dialgebra", verify)?;
            let la = alg.product_index(&binding["ladj"])?;
            let ra = alg.product_index(&binding["radj"])?;
            let bracket = product_of("bracket", alg.dim(), |i, j| {
                alg.products()[la].of_basis(i, j).sub(
                    &alg.products()[ra]
                        .of_basis(j, i)
                        .scale(&alg.eps(i, j).scalar()),
                )
            });
            let mut products = alg.products().to_vec();
            products.push(bracket);
            let algebra = HomAlgebra::new(
                alg.space().clone(),
                products,
                alg.alpha().clone(),
                alg.bicharacter().clone(),
                BTreeMap::new(),
            )?;
            let post_binding: BTreeMap<String, String> = [
                ("ladj".to_owned(), binding["ladj"].clone()),
                ("radj".to_owned(), binding["radj"].clone()),
                ("bracket".to_owned(), "bracket".to_owned()),
            ]
            .into();
            if verify {
                post_check(&algebra, "hom-poisson-color-dialgebra", &post_binding)?;
            }
            Ok(ConstructionResult {
                algebra,
                provenance: Provenance::new("bracket_from").with("kind", "dialgebra"),
                expected_suite: Some("hom-poisson-color-dialgebra".into()),
            })
        }
    }
}

/// Post-Lie structure of a tridendriform algebra: x∘y = x⊢y − y⊣x and
/// [x,y] = x·y − ε(x,y)y·x.
pub fn tridendriform_to_postlie(
    tri: &HomAlgebra,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let binding = bound_or_resolved(tri, "hom-tridendriform-color", verify)?;
    let la = tri.product_index(&binding["ladj"])?;
    let ra = tri.product_index(&binding["radj"])?;
    let dot = tri.product_index(&binding["dot"])?;
    let bracket = product_of("bracket", tri.dim(), |i, j| {
        tri.products()[dot].of_basis(i, j).sub(
            &tri.products()[dot]
                .of_basis(j, i)
                .scale(&tri.eps(i, j).scalar()),
        )
    });
    let circ = product_of("dot", tri.dim(), |i, j| {
        tri.products()[ra]
            .of_basis(i, j)
            .sub(&tri.products()[la].of_basis(j, i))
    });
    let algebra = HomAlgebra::new(
        tri.space().clone(),
        vec![bracket, circ],
        tri.alpha().clone(),
        tri.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(&algebra, "hom-post-lie-color", &BTreeMap::new())?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("tridendriform_to_postlie"),
        expected_suite: Some("hom-post-lie-color".into()),
    })
}

/// Lie-admissible product x∗y = x·y + ½[x,y] of a post-Lie algebra. The
/// conclusion is checked on the ∗-commutator, which must be a Hom-Lie color
/// bracket.
pub fn postlie_star(
    pl: &HomAlgebra,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let binding = bound_or_resolved(pl, "hom-post-lie-color", verify)?;
    let br = pl.product_index(&binding["bracket"])?;
    let dot = pl.product_index(&binding["dot"])?;
    let half = int(1) / int(2);
    let star = product_of("star", pl.dim(), |i, j| {
        pl.products()[dot]
            .of_basis(i, j)
            .add(&pl.products()[br].of_basis(i, j).scale(&half))
    });
    let algebra = HomAlgebra::new(
        pl.space().clone(),
        vec![star],
        pl.alpha().clone(),
        pl.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        // Lie admissibility: the eps-commutator of the new product is a
        // Hom-Lie color bracket.
        let commutator = star_commutator(&algebra, 0);
        let lie = HomAlgebra::new(
            algebra.space().clone(),
            vec![commutator],
            algebra.alpha().clone(),
            algebra.bicharacter().clone(),
            BTreeMap::new(),
        )?;
        post_check(&lie, "hom-lie-color", &BTreeMap::new())?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("postlie_star"),
        expected_suite: None,
    })
}

/// ε-commutator of the product at `index`, named `bracket`.
pub fn star_commutator(alg: &HomAlgebra, index: usize) -> Product {
    product_of("bracket", alg.dim(), |i, j| {
        alg.products()[index].of_basis(i, j).sub(
            &alg.products()[index]
                .of_basis(j, i)
                .scale(&alg.eps(i, j).scalar()),
        )
    })
}

/// Opposite tridendriform algebra: x⊣ᵒᵖy = y⊢x, x⊢ᵒᵖy = y⊣x, x·ᵒᵖy = y·x,
/// taken verbatim with no ε sign.
pub fn opposite(tri: &HomAlgebra, verify: bool) -> Result<ConstructionResult, ConstructionError> {
    let binding = bound_or_resolved(tri, "hom-tridendriform-color", verify)?;
    let la = tri.product_index(&binding["ladj"])?;
    let ra = tri.product_index(&binding["radj"])?;
    let dot = tri.product_index(&binding["dot"])?;
    let mut products = tri.products().to_vec();
    products[la] = tri.products()[ra].transpose(tri.products()[la].name.clone());
    products[ra] = tri.products()[la].transpose(tri.products()[ra].name.clone());
    products[dot] = tri.products()[dot].transpose(tri.products()[dot].name.clone());
    let algebra = HomAlgebra::new(
        tri.space().clone(),
        products,
        tri.alpha().clone(),
        tri.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(&algebra, "hom-tridendriform-color", &binding)?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("opposite"),
        expected_suite: Some("hom-tridendriform-color".into()),
    })
}

/// Dendriform structure of a tridendriform algebra: keeps ⊣ and replaces ⊢
/// by x⊢′y = x⊢y + x·y.
pub fn dendriform_from_tri(
    tri: &HomAlgebra,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let binding = bound_or_resolved(tri, "hom-tridendriform-color", verify)?;
    let la = tri.product_index(&binding["ladj"])?;
    let ra = tri.product_index(&binding["radj"])?;
    let dot = tri.product_index(&binding["dot"])?;
    let ladj = {
        let mut p = tri.products()[la].clone();
        p.name = "ladj".into();
        p
    };
    let radj = product_of("radj", tri.dim(), |i, j| {
        tri.products()[ra]
            .of_basis(i, j)
            .add(&tri.products()[dot].of_basis(i, j))
    });
    let algebra = HomAlgebra::new(
        tri.space().clone(),
        vec![ladj, radj],
        tri.alpha().clone(),
        tri.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(&algebra, "hom-dendriform-color", &BTreeMap::new())?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("dendriform_from_tri"),
        expected_suite: Some("hom-dendriform-color".into()),
    })
}

/// Yau twisting along an endomorphism β: every product composed with βⁿ and
/// the twist replaced by βⁿ∘α. Attached maps (in particular a Rota-Baxter
/// map) are carried over unchanged.
pub fn yau_twist(
    alg: &HomAlgebra,
    beta: &LinearMap,
    n: u32,
    claimed_suite: Option<&str>,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    if verify {
        let report = check_morphism(alg, alg, beta)?;
        if !report.passed {
            return Err(ConstructionError::Precondition {
                requirement: "twisting map is an endomorphism".into(),
                witness: report.witness,
            });
        }
    }
    let bn = beta.pow(n);
    let products = alg
        .products()
        .iter()
        .map(|p| compose_table(p, &bn))
        .collect();
    let algebra = HomAlgebra::new(
        alg.space().clone(),
        products,
        bn.compose(alg.alpha()),
        alg.bicharacter().clone(),
        alg.maps().clone(),
    )?;
    if verify {
        if let Some(suite) = claimed_suite {
            post_check(&algebra, suite, &BTreeMap::new())?;
        }
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("yau_twist").with("power", n.to_string()),
        expected_suite: claimed_suite.map(str::to_owned),
    })
}

/// kth derived algebra: type 1 uses (αᵏ∘μᵢ, α^{k+1}), type 2 uses
/// (α^{2ᵏ−1}∘μᵢ, α^{2ᵏ}). Requires multiplicativity, making it a Yau twist
/// along α.
pub fn derived_algebra(
    alg: &HomAlgebra,
    dtype: DerivedType,
    k: u32,
    claimed_suite: Option<&str>,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    if verify {
        let report = check_multiplicative(alg);
        if !report.passed {
            return Err(ConstructionError::Precondition {
                requirement: "algebra is multiplicative".into(),
                witness: report.witness,
            });
        }
    }
    let n = match dtype {
        DerivedType::One => k,
        DerivedType::Two => {
            if k > 20 {
                return Err(ConstructionError::ParameterTooLarge {
                    param: "k",
                    max: 20,
                });
            }
            2u32.pow(k) - 1
        }
    };
    let mut out = yau_twist(alg, alg.alpha(), n, claimed_suite, verify)?;
    out.provenance = Provenance::new("derived_algebra")
        .with(
            "type",
            match dtype {
                DerivedType::One => "1",
                DerivedType::Two => "2",
            },
        )
        .with("k", k.to_string());
    Ok(out)
}

/// Twisting by a commuting pair of centroid elements. LeftComposite:
/// μ′(x,y) = μ((β₂β₁)(x), y); Split: μ′(x,y) = μ(β₁(x), β₂(y)); both with
/// twist β₂β₁α. When a Rota-Baxter map `R` is attached, both βᵢ must commute
/// with it and it is carried over.
pub fn centroid_twist(
    alg: &HomAlgebra,
    b1: &LinearMap,
    b2: &LinearMap,
    variant: CentroidVariant,
    claimed_suite: Option<&str>,
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    if verify {
        require_operator(
            alg,
            &OperatorKind::Centroid,
            b1,
            "first map is in the centroid",
        )?;
        require_operator(
            alg,
            &OperatorKind::Centroid,
            b2,
            "second map is in the centroid",
        )?;
        if !b1.commutes_with(b2) {
            return Err(ConstructionError::Precondition {
                requirement: "centroid elements commute with each other".into(),
                witness: None,
            });
        }
        if let Some(r) = alg.map("R") {
            if !b1.commutes_with(r) || !b2.commutes_with(r) {
                return Err(ConstructionError::Precondition {
                    requirement: "centroid elements commute with the attached Rota-Baxter map"
                        .into(),
                    witness: None,
                });
            }
        }
    } else {
        b1.check_even(alg.space())
            .map_err(OperatorError::OddMap)
            .map_err(ConstructionError::from)?;
        b2.check_even(alg.space())
            .map_err(OperatorError::OddMap)
            .map_err(ConstructionError::from)?;
    }
    let b21 = b2.compose(b1);
    let products: Vec<Product> = alg
        .products()
        .iter()
        .enumerate()
        .map(|(pi, p)| {
            product_of(&p.name.clone(), alg.dim(), |i, j| match variant {
                CentroidVariant::LeftComposite => {
                    alg.product_eval(pi, b21.image(i), &Vector::basis(j))
                }
                CentroidVariant::Split => alg.product_eval(pi, b1.image(i), b2.image(j)),
            })
        })
        .collect();
    let algebra = HomAlgebra::new(
        alg.space().clone(),
        products,
        b21.compose(alg.alpha()),
        alg.bicharacter().clone(),
        alg.maps().clone(),
    )?;
    if verify {
        if let Some(suite) = claimed_suite {
            post_check(&algebra, suite, &BTreeMap::new())?;
        }
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("centroid_twist").with(
            "variant",
            match variant {
                CentroidVariant::LeftComposite => "1",
                CentroidVariant::Split => "2",
            },
        ),
        expected_suite: claimed_suite.map(str::to_owned),
    })
}

/// Doubled dialgebra I ⊕ S of a left-symmetric algebra along a coordinate
/// ideal: (i₁+a₁)⊣(i₂+a₂) = i₁a₂ + a₁a₂ and (i₁+a₁)⊢(i₂+a₂) = a₁i₂ + a₁a₂,
/// twist α_I ⊕ α_S.
pub fn ideal_dialgebra(
    s: &HomAlgebra,
    ideal_basis: &[String],
    verify: bool,
) -> Result<ConstructionResult, ConstructionError> {
    let pi = single_product(s, "ideal_dialgebra")?;
    let ideal: Vec<usize> = ideal_basis
        .iter()
        .map(|n| {
            s.space()
                .index_of(n)
                .ok_or_else(|| ConstructionError::UnknownBasis(n.clone()))
        })
        .collect::<Result<_, _>>()?;
    let dim = s.dim();
    let in_ideal = |v: &Vector| v.iter().all(|(k, _)| ideal.contains(&k));

    if verify {
        require_suite(
            s,
            "hom-left-symmetric-color",
            &BTreeMap::new(),
            "input is hom-left-symmetric",
        )?;
        for &i in &ideal {
            if !in_ideal(s.alpha().image(i)) {
                return Err(ConstructionError::Precondition {
                    requirement: format!("alpha(I) ⊆ I fails at `{}`", s.space().name(i)),
                    witness: None,
                });
            }
            for a in 0..dim {
                if !in_ideal(&s.products()[pi].of_basis(i, a)) {
                    return Err(ConstructionError::Precondition {
                        requirement: format!(
                            "I·S ⊆ I fails at ({}, {})",
                            s.space().name(i),
                            s.space().name(a)
                        ),
                        witness: None,
                    });
                }
                if !in_ideal(&s.products()[pi].of_basis(a, i)) {
                    return Err(ConstructionError::Precondition {
                        requirement: format!(
                            "S·I ⊆ I fails at ({}, {})",
                            s.space().name(a),
                            s.space().name(i)
                        ),
                        witness: None,
                    });
                }
            }
        }
        // the proposition's two displayed hypothesis identities
        let ev = |l: &Vector, r: &Vector| s.product_eval(pi, l, r);
        let bas = Vector::basis;
        for &i in &ideal {
            for a in 0..dim {
                for b in 0..dim {
                    let lhs = ev(s.alpha().image(i), &ev(&bas(a), &bas(b)))
                        .sub(&ev(&ev(&bas(i), &bas(a)), s.alpha().image(b)));
                    let rhs = ev(s.alpha().image(a), &ev(&bas(i), &bas(b)))
                        .sub(&ev(&ev(&bas(a), &bas(i)), s.alpha().image(b)))
                        .scale(&s.eps(i, a).scalar());
                    let residual = lhs.sub(&rhs);
                    if !residual.is_zero() {
                        return Err(ConstructionError::Precondition {
                            requirement: "first ideal hypothesis identity".into(),
                            witness: Some(Witness {
                                identity: "ideal-hypothesis-1".into(),
                                tuple: vec![i, a, b],
                                residual,
                            }),
                        });
                    }
                }
            }
        }
        for &j in &ideal {
            for c in 0..dim {
                for d in 0..dim {
                    let lhs = ev(s.alpha().image(c), &ev(&bas(d), &bas(j)))
                        .sub(&ev(&ev(&bas(c), &bas(d)), s.alpha().image(j)));
                    let rhs = ev(s.alpha().image(d), &ev(&bas(c), &bas(j)))
                        .sub(&ev(&ev(&bas(d), &bas(c)), s.alpha().image(j)))
                        .scale(&s.eps(c, d).scalar());
                    let residual = lhs.sub(&rhs);
                    if !residual.is_zero() {
                        return Err(ConstructionError::Precondition {
                            requirement: "second ideal hypothesis identity".into(),
                            witness: Some(Witness {
                                identity: "ideal-hypothesis-2".into(),
                                tuple: vec![c, d, j],
                                residual,
                            }),
                        });
                    }
                }
            }
        }
    }

    let m = ideal.len();
    let ideal_pos: BTreeMap<usize, usize> =
        ideal.iter().enumerate().map(|(t, &b)| (b, t)).collect();
    let mut basis: Vec<(String, Degree)> = Vec::with_capacity(m + dim);
    for &b in &ideal {
        basis.push((
            format!("I_{}", s.space().name(b)),
            s.space().degree(b).clone(),
        ));
    }
    for b in 0..dim {
        basis.push((s.space().name(b).to_owned(), s.space().degree(b).clone()));
    }
    let space = crate::algebra::GradedSpace::new(s.group().clone(), basis)?;

    // re-express in the I-copy coordinates; under --no-verify the input may
    // not be closed, in which case the part outside the ideal is projected
    // away (the suite check then exposes the defect)
    let to_ideal = |v: &Vector| -> Vector {
        Vector::from_entries(
            v.iter()
                .filter_map(|(k, c)| ideal_pos.get(&k).map(|&t| (t, c.clone()))),
        )
    };
    let to_s =
        |v: &Vector| -> Vector { Vector::from_entries(v.iter().map(|(k, c)| (m + k, c.clone()))) };

    let mut ladj = Product::new("ladj");
    let mut radj = Product::new("radj");
    for (t, &b) in ideal.iter().enumerate() {
        for a in 0..dim {
            ladj.insert(t, m + a, to_ideal(&s.products()[pi].of_basis(b, a)));
            radj.insert(m + a, t, to_ideal(&s.products()[pi].of_basis(a, b)));
        }
    }
    for a in 0..dim {
        for b in 0..dim {
            let v = to_s(&s.products()[pi].of_basis(a, b));
            ladj.insert(m + a, m + b, v.clone());
            radj.insert(m + a, m + b, v);
        }
    }
    let mut alpha_images = Vec::with_capacity(m + dim);
    for &b in &ideal {
        alpha_images.push(to_ideal(s.alpha().image(b)));
    }
    for b in 0..dim {
        alpha_images.push(to_s(s.alpha().image(b)));
    }

    let algebra = HomAlgebra::new(
        space,
        vec![ladj, radj],
        LinearMap::from_images(alpha_images),
        s.bicharacter().clone(),
        BTreeMap::new(),
    )?;
    if verify {
        post_check(
            &algebra,
            "hom-left-symmetric-color-dialgebra",
            &BTreeMap::new(),
        )?;
    }
    Ok(ConstructionResult {
        algebra,
        provenance: Provenance::new("ideal_dialgebra").with("ideal", ideal_basis.join(",")),
        expected_suite: Some("hom-left-symmetric-color-dialgebra".into()),
    })
}

/// Resolves suite slots against the algebra's products; verifies the suite
/// first when asked to.
fn bound_or_resolved(
    alg: &HomAlgebra,
    suite: &str,
    verify: bool,
) -> Result<BTreeMap<String, String>, ConstructionError> {
    if verify {
        require_suite(
            alg,
            suite,
            &BTreeMap::new(),
            &format!("input satisfies `{suite}`"),
        )
    } else {
        let s = crate::suites::find_suite(suite)?;
        Ok(resolve_binding(alg, &s.slots, &BTreeMap::new())?)
    }
}
