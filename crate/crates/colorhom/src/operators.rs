//! Distinguished operator checks: Rota-Baxter of a given weight, Nijenhuis,
//! averaging, centroid membership, and morphisms between algebras.
//!
//! All checks run over every basis pair of every selected product and report
//! the lexicographically first failing site. Maps that are not even are
//! rejected before any identity is evaluated.

use std::fmt;

use thiserror::Error;

use crate::algebra::{AlgebraError, HomAlgebra, LinearMap, Vector};
use crate::dsl::{CheckReport, Witness};
use crate::scalar::{render_scalar, Scalar};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OperatorError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("operator map is odd or mis-sized: {0}")]
    OddMap(AlgebraError),
    #[error("source and target gradings differ")]
    GroupMismatch,
    #[error("source and target bicharacters differ")]
    BicharacterMismatch,
    #[error("source has {src} products, target has {dst}")]
    ProductCountMismatch { src: usize, dst: usize },
}

/// Which operator identity to check. The weight only exists for Rota-Baxter.
#[derive(Debug, Clone, PartialEq)]
pub enum OperatorKind {
    RotaBaxter { weight: Scalar },
    Nijenhuis,
    Averaging,
    Centroid,
}

impl OperatorKind {
    pub fn label(&self) -> String {
        match self {
            OperatorKind::RotaBaxter { weight } => {
                format!("rota-baxter({})", render_scalar(weight))
            }
            OperatorKind::Nijenhuis => "nijenhuis".into(),
            OperatorKind::Averaging => "averaging".into(),
            OperatorKind::Centroid => "centroid".into(),
        }
    }

    /// Whether the defining identity includes commutation with the twist.
    fn requires_alpha_commutation(&self) -> bool {
        !matches!(self, OperatorKind::Centroid)
    }
}

impl fmt::Display for OperatorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Checks the operator identity for `m` on the selected products (all by
/// default), plus commutation with α where the definition states it.
pub fn check_operator(
    alg: &HomAlgebra,
    kind: &OperatorKind,
    m: &LinearMap,
    products: Option<&[String]>,
) -> Result<CheckReport, OperatorError> {
    m.check_even(alg.space()).map_err(OperatorError::OddMap)?;
    let indices: Vec<usize> = match products {
        Some(names) => names
            .iter()
            .map(|n| alg.product_index(n))
            .collect::<Result<_, _>>()?,
        None => (0..alg.products().len()).collect(),
    };
    let dim = alg.dim();
    let mut checked = 0;

    if kind.requires_alpha_commutation() {
        for i in 0..dim {
            checked += 1;
            let residual = m
                .apply(alg.alpha().image(i))
                .sub(&alg.alpha().apply(m.image(i)));
            if !residual.is_zero() {
                return Ok(CheckReport::fail(
                    Witness {
                        identity: format!("{}[alpha-commutation]", kind.label()),
                        tuple: vec![i],
                        residual,
                    },
                    checked,
                ));
            }
        }
    }

    for &pi in &indices {
        let pname = &alg.products()[pi].name;
        for i in 0..dim {
            for j in 0..dim {
                checked += 1;
                let x = Vector::basis(i);
                let y = Vector::basis(j);
                let mx = m.image(i);
                let my = m.image(j);
                let residuals: Vec<Vector> = match kind {
                    OperatorKind::RotaBaxter { weight } => {
                        let lhs = alg.product_eval(pi, mx, my);
                        let inside = alg
                            .product_eval(pi, mx, &y)
                            .add(&alg.product_eval(pi, &x, my))
                            .add(&alg.product_eval(pi, &x, &y).scale(weight));
                        vec![lhs.sub(&m.apply(&inside))]
                    }
                    OperatorKind::Nijenhuis => {
                        let lhs = alg.product_eval(pi, mx, my);
                        let raw = alg.product_eval(pi, &x, &y);
                        let inside = alg
                            .product_eval(pi, mx, &y)
                            .add(&alg.product_eval(pi, &x, my))
                            .sub(&m.apply(&raw));
                        vec![lhs.sub(&m.apply(&inside))]
                    }
                    OperatorKind::Averaging => {
                        let left = m.apply(&alg.product_eval(pi, mx, &y));
                        let mid = alg.product_eval(pi, mx, my);
                        let right = m.apply(&alg.product_eval(pi, &x, my));
                        vec![left.sub(&mid), mid.sub(&right)]
                    }
                    OperatorKind::Centroid => {
                        let img = m.apply(&alg.products()[pi].of_basis(i, j));
                        let left = alg.product_eval(pi, mx, &y);
                        let right = alg.product_eval(pi, &x, my);
                        vec![img.sub(&left), left.sub(&right)]
                    }
                };
                for residual in residuals {
                    if !residual.is_zero() {
                        return Ok(CheckReport::fail(
                            Witness {
                                identity: format!("{}[{pname}]", kind.label()),
                                tuple: vec![i, j],
                                residual,
                            },
                            checked,
                        ));
                    }
                }
            }
        }
    }
    Ok(CheckReport::pass(checked))
}

/// f(μᵢ(x,y)) = μᵢ′(f(x), f(y)) for every product, and f∘α = α′∘f.
pub fn check_morphism(
    src: &HomAlgebra,
    dst: &HomAlgebra,
    f: &LinearMap,
) -> Result<CheckReport, OperatorError> {
    if src.group() != dst.group() {
        return Err(OperatorError::GroupMismatch);
    }
    if src.bicharacter() != dst.bicharacter() {
        return Err(OperatorError::BicharacterMismatch);
    }
    if src.products().len() != dst.products().len() {
        return Err(OperatorError::ProductCountMismatch {
            src: src.products().len(),
            dst: dst.products().len(),
        });
    }
    f.check_even_between(src.space(), dst.space())
        .map_err(OperatorError::OddMap)?;
    let dim = src.dim();
    let mut checked = 0;
    for i in 0..dim {
        checked += 1;
        let residual = f
            .apply(src.alpha().image(i))
            .sub(&dst.alpha().apply(f.image(i)));
        if !residual.is_zero() {
            return Ok(CheckReport::fail(
                Witness {
                    identity: "morphism[twist]".into(),
                    tuple: vec![i],
                    residual,
                },
                checked,
            ));
        }
    }
    for (pi, p) in src.products().iter().enumerate() {
        for i in 0..dim {
            for j in 0..dim {
                checked += 1;
                let lhs = f.apply(&p.of_basis(i, j));
                let rhs = dst.product_eval(pi, f.image(i), f.image(j));
                let residual = lhs.sub(&rhs);
                if !residual.is_zero() {
                    return Ok(CheckReport::fail(
                        Witness {
                            identity: format!("morphism[{}]", p.name),
                            tuple: vec![i, j],
                            residual,
                        },
                        checked,
                    ));
                }
            }
        }
    }
    Ok(CheckReport::pass(checked))
}
