//! The on-disk algebra document: a JSON schema with all coefficients
//! serialized as rational strings, so nothing can drift through floating
//! point.
//!
//! Loading validates everything the in-memory types enforce (unique names,
//! evenness, the bicharacter axioms) and additionally completes products
//! flagged `skew_complete` from their upper-triangular table by
//! x∘y = −ε(x,y) y∘x. Rendering is canonical: stable field order, sorted
//! maps, reduced fractions; a loaded fixture re-renders bit-identically.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, GradedSpace, HomAlgebra, LinearMap, Product, Vector};
use crate::constructions::Provenance;
use crate::grading::{Bicharacter, GradingError, GradingGroup, Sign};
use crate::scalar::{parse_scalar, render_scalar, ScalarParseError};

#[derive(Debug, Error)]
pub enum LoadError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("product `{product}`, entry ({left},{right}): {error}")]
    Coefficient {
        product: String,
        left: String,
        right: String,
        error: ScalarParseError,
    },
    #[error("map `{map}`: {error}")]
    MapCoefficient {
        map: String,
        error: ScalarParseError,
    },
    #[error("unknown basis name `{name}` in product `{product}`")]
    UnknownBasis { product: String, name: String },
    #[error("map `{map}` is {rows}x{cols}, expected {dim}x{dim}")]
    MapShape {
        map: String,
        rows: usize,
        cols: usize,
        dim: usize,
    },
    #[error(
        "product `{product}` is skew_complete but entry ({left},{right}) is below the diagonal"
    )]
    NotUpperTriangular {
        product: String,
        left: String,
        right: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupDoc {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BicharacterDoc {
    pub exponent_matrix: Vec<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisDoc {
    pub name: String,
    pub degree: Vec<i64>,
}

/// One sparse structure-constant entry: left·right = Σ value[name]·name.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductDoc {
    pub name: String,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub skew_complete: bool,
    pub entries: Vec<EntryDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProvenanceDoc {
    pub construction: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, String>,
}

/// Annotation naming a suite the document is expected to satisfy, with an
/// optional explicit slot binding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteAnnotation {
    pub suite: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub bind: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlgebraDocument {
    pub group: GroupDoc,
    pub bicharacter: BicharacterDoc,
    pub basis: Vec<BasisDoc>,
    pub products: Vec<ProductDoc>,
    /// Row-major matrix of the twisting map: column j is the image of the
    /// jth basis vector.
    pub alpha: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<ProvenanceDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub expected_suites: Vec<SuiteAnnotation>,
}

impl AlgebraDocument {
    pub fn from_json(text: &str) -> Result<Self, LoadError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }
}

fn matrix_to_map(name: &str, rows: &[Vec<String>], dim: usize) -> Result<LinearMap, LoadError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(LoadError::MapShape {
            map: name.to_owned(),
            rows: rows.len(),
            cols: rows.first().map(|r| r.len()).unwrap_or(0),
            dim,
        });
    }
    let mut images = vec![Vector::zero(); dim];
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let c = parse_scalar(cell).map_err(|error| LoadError::MapCoefficient {
                map: name.to_owned(),
                error,
            })?;
            images[j].add_scaled_basis(i, c);
        }
    }
    Ok(LinearMap::from_images(images))
}

fn map_to_matrix(m: &LinearMap) -> Vec<Vec<String>> {
    let dim = m.dim();
    let mut rows = vec![vec!["0".to_owned(); dim]; dim];
    for (j, image) in m.images().iter().enumerate() {
        for (i, c) in image.iter() {
            rows[i][j] = render_scalar(c);
        }
    }
    rows
}

/// Parses, validates and completes a document into a `HomAlgebra`.
pub fn load_algebra(doc: &AlgebraDocument) -> Result<HomAlgebra, LoadError> {
    let group = GradingGroup::new(doc.group.free_rank, doc.group.torsion.clone())?;
    let eps = Bicharacter::new(doc.bicharacter.exponent_matrix.clone())?;
    let mut basis = Vec::with_capacity(doc.basis.len());
    for b in &doc.basis {
        basis.push((b.name.clone(), group.degree(&b.degree)?));
    }
    let space = GradedSpace::new(group, basis)?;
    let dim = space.dim();

    let mut products = Vec::with_capacity(doc.products.len());
    for pd in &doc.products {
        let mut product = Product::new(pd.name.clone());
        for e in &pd.entries {
            let li = space
                .index_of(&e.left)
                .ok_or_else(|| LoadError::UnknownBasis {
                    product: pd.name.clone(),
                    name: e.left.clone(),
                })?;
            let ri = space
                .index_of(&e.right)
                .ok_or_else(|| LoadError::UnknownBasis {
                    product: pd.name.clone(),
                    name: e.right.clone(),
                })?;
            if pd.skew_complete && li > ri {
                return Err(LoadError::NotUpperTriangular {
                    product: pd.name.clone(),
                    left: e.left.clone(),
                    right: e.right.clone(),
                });
            }
            let mut value = Vector::zero();
            for (name, coeff) in &e.value {
                let k = space
                    .index_of(name)
                    .ok_or_else(|| LoadError::UnknownBasis {
                        product: pd.name.clone(),
                        name: name.clone(),
                    })?;
                let c = parse_scalar(coeff).map_err(|error| LoadError::Coefficient {
                    product: pd.name.clone(),
                    left: e.left.clone(),
                    right: e.right.clone(),
                    error,
                })?;
                value.add_scaled_basis(k, c);
            }
            product.insert(li, ri, value);
        }
        if pd.skew_complete {
            // complete the strict lower triangle by x∘y = −eps(x,y) y∘x
            let upper: Vec<((usize, usize), Vector)> = product
                .entries()
                .filter(|(&(i, j), _)| i < j)
                .map(|(&k, v)| (k, v.clone()))
                .collect();
            for ((i, j), v) in upper {
                let sign = eps.eval(space.degree(j), space.degree(i))?;
                let flipped = v.scale(&match sign {
                    Sign::Plus => crate::scalar::int(-1),
                    Sign::Minus => crate::scalar::int(1),
                });
                product.insert(j, i, flipped);
            }
        }
        products.push(product);
    }

    let alpha = matrix_to_map("alpha", &doc.alpha, dim)?;
    let mut maps = BTreeMap::new();
    for (name, rows) in &doc.maps {
        maps.insert(name.clone(), matrix_to_map(name, rows, dim)?);
    }

    Ok(HomAlgebra::new(space, products, alpha, eps.clone(), maps)?)
}

pub fn load_algebra_str(text: &str) -> Result<HomAlgebra, LoadError> {
    load_algebra(&AlgebraDocument::from_json(text)?)
}

/// Renders an algebra back into canonical document form. Completed skew
/// products render as full tables.
pub fn render_algebra(alg: &HomAlgebra, provenance: Option<&Provenance>) -> AlgebraDocument {
    let space = alg.space();
    let value_map = |v: &Vector| -> BTreeMap<String, String> {
        v.iter()
            .map(|(k, c)| (space.name(k).to_owned(), render_scalar(c)))
            .collect()
    };
    AlgebraDocument {
        group: GroupDoc {
            free_rank: space.group().free_rank(),
            torsion: space.group().torsion().to_vec(),
        },
        bicharacter: BicharacterDoc {
            exponent_matrix: alg.bicharacter().exponent_matrix().to_vec(),
        },
        basis: space
            .basis()
            .iter()
            .map(|b| BasisDoc {
                name: b.name.clone(),
                degree: b.degree.coords().to_vec(),
            })
            .collect(),
        products: alg
            .products()
            .iter()
            .map(|p| ProductDoc {
                name: p.name.clone(),
                skew_complete: false,
                entries: p
                    .entries()
                    .map(|(&(i, j), v)| EntryDoc {
                        left: space.name(i).to_owned(),
                        right: space.name(j).to_owned(),
                        value: value_map(v),
                    })
                    .collect(),
            })
            .collect(),
        alpha: map_to_matrix(alg.alpha()),
        maps: alg
            .maps()
            .iter()
            .map(|(n, m)| (n.clone(), map_to_matrix(m)))
            .collect(),
        provenance: provenance.map(|p| ProvenanceDoc {
            construction: p.construction.clone(),
            params: p.params.clone(),
        }),
        expected_suites: Vec::new(),
    }
}
