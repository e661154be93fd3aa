//! Graded spaces over the rationals, sparse vectors, even bilinear products
//! given by structure constants, even linear maps, and the bundled Hom-algebra.
//!
//! A `HomAlgebra` is a graded space together with an ordered family of even
//! bilinear products, an even twisting map α and a validated bicharacter; this
//! is the (n+3)-tuple every structure in the crate is built from. Evenness of
//! every product entry and of α is enforced at construction, so downstream
//! code may rely on homogeneity without re-checking.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::grading::{Bicharacter, Degree, GradingError, GradingGroup, Sign};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error(transparent)]
    Grading(#[from] GradingError),
    #[error("empty basis: dimension 0 is rejected")]
    EmptyBasis,
    #[error("duplicate basis name `{0}`")]
    DuplicateBasisName(String),
    #[error("unknown basis name `{0}`")]
    UnknownBasisName(String),
    #[error("unknown product `{0}`")]
    UnknownProduct(String),
    #[error("duplicate product name `{0}`")]
    DuplicateProductName(String),
    #[error(
        "product `{product}` is not even: entry ({left},{right}) hits `{target}` of degree {target_degree}, expected {expected_degree}"
    )]
    UnevenProduct {
        product: String,
        left: String,
        right: String,
        target: String,
        target_degree: Degree,
        expected_degree: Degree,
    },
    #[error("map is not even: image of `{basis}` hits `{target}` of a different degree")]
    UnevenMap { basis: String, target: String },
    #[error("linear map has {got} images, space has dimension {expected}")]
    MapDimension { expected: usize, got: usize },
    #[error("vector coefficient index {index} out of range for dimension {dim}")]
    CoefficientIndex { index: usize, dim: usize },
    #[error("invalid bicharacter: {0}")]
    InvalidBicharacter(String),
}

/// A named basis vector with its degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub degree: Degree,
}

/// Finite-dimensional G-graded vector space with a named, ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSpace {
    group: GradingGroup,
    basis: Vec<BasisElement>,
    index: HashMap<String, usize>,
}

impl GradedSpace {
    pub fn new(group: GradingGroup, basis: Vec<(String, Degree)>) -> Result<Self, AlgebraError> {
        if basis.is_empty() {
            return Err(AlgebraError::EmptyBasis);
        }
        let mut index = HashMap::new();
        let mut elems = Vec::with_capacity(basis.len());
        for (pos, (name, degree)) in basis.into_iter().enumerate() {
            if degree.coords().len() != group.rank() {
                return Err(GradingError::DegreeLength {
                    expected: group.rank(),
                    got: degree.coords().len(),
                }
                .into());
            }
            if index.insert(name.clone(), pos).is_some() {
                return Err(AlgebraError::DuplicateBasisName(name));
            }
            elems.push(BasisElement { name, degree });
        }
        Ok(GradedSpace {
            group,
            basis: elems,
            index,
        })
    }

    pub fn group(&self) -> &GradingGroup {
        &self.group
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn degree(&self, i: usize) -> &Degree {
        &self.basis[i].degree
    }

    pub fn name(&self, i: usize) -> &str {
        &self.basis[i].name
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }
}

/// Sparse vector over the basis of a graded space. No zero coefficient is
/// ever stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Vector {
    coeffs: BTreeMap<usize, Scalar>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector::default()
    }

    pub fn basis(i: usize) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(i, crate::scalar::int(1));
        Vector { coeffs }
    }

    pub fn from_entries<I: IntoIterator<Item = (usize, Scalar)>>(entries: I) -> Self {
        let mut v = Vector::zero();
        for (i, c) in entries {
            v.add_scaled_basis(i, c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn get(&self, i: usize) -> Option<&Scalar> {
        self.coeffs.get(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Scalar)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn add_scaled_basis(&mut self, i: usize, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(i).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn add_scaled(&mut self, c: &Scalar, v: &Vector) {
        if c.is_zero() {
            return;
        }
        for (i, x) in v.iter() {
            self.add_scaled_basis(i, c * x);
        }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&crate::scalar::int(1), other);
        out
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let mut out = self.clone();
        out.add_scaled(&crate::scalar::int(-1), other);
        out
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        let mut out = Vector::zero();
        out.add_scaled(c, self);
        out
    }

    /// The common degree of the support, when the vector is homogeneous.
    pub fn homogeneous_degree<'a>(&self, space: &'a GradedSpace) -> Option<&'a Degree> {
        let mut it = self.coeffs.keys();
        let first = space.degree(*it.next()?);
        for &i in it {
            if space.degree(i) != first {
                return None;
            }
        }
        Some(first)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (n, (i, c)) in self.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}*#{}", crate::scalar::render_scalar(c), i)?;
        }
        Ok(())
    }
}

/// An even bilinear product stored as a sparse structure-constant table.
/// Absent entries are the zero vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub name: String,
    table: BTreeMap<(usize, usize), Vector>,
}

impl Product {
    pub fn new(name: impl Into<String>) -> Self {
        Product {
            name: name.into(),
            table: BTreeMap::new(),
        }
    }

    pub fn insert(&mut self, left: usize, right: usize, value: Vector) {
        if value.is_zero() {
            self.table.remove(&(left, right));
        } else {
            self.table.insert((left, right), value);
        }
    }

    pub fn get(&self, left: usize, right: usize) -> Option<&Vector> {
        self.table.get(&(left, right))
    }

    pub fn of_basis(&self, left: usize, right: usize) -> Vector {
        self.get(left, right).cloned().unwrap_or_else(Vector::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Vector)> {
        self.table.iter()
    }

    pub fn entry_count(&self) -> usize {
        self.table.len()
    }

    /// Opposite table: (i,j) entry taken from (j,i), no sign inserted.
    pub fn transpose(&self, name: impl Into<String>) -> Product {
        let mut out = Product::new(name);
        for (&(i, j), v) in self.entries() {
            out.insert(j, i, v.clone());
        }
        out
    }
}

/// A linear map given by the images of the basis vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearMap {
    images: Vec<Vector>,
}

impl LinearMap {
    pub fn from_images(images: Vec<Vector>) -> Self {
        LinearMap { images }
    }

    pub fn identity(dim: usize) -> Self {
        LinearMap {
            images: (0..dim).map(Vector::basis).collect(),
        }
    }

    pub fn zero(dim: usize) -> Self {
        LinearMap {
            images: vec![Vector::zero(); dim],
        }
    }

    pub fn scalar(dim: usize, c: &Scalar) -> Self {
        LinearMap {
            images: (0..dim).map(|i| Vector::basis(i).scale(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> &Vector {
        &self.images[i]
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        let mut out = Vector::zero();
        for (i, c) in v.iter() {
            out.add_scaled(c, &self.images[i]);
        }
        out
    }

    /// self ∘ other.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap {
            images: other.images.iter().map(|v| self.apply(v)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> LinearMap {
        let mut out = LinearMap::identity(self.dim());
        for _ in 0..n {
            out = self.compose(&out);
        }
        out
    }

    pub fn commutes_with(&self, other: &LinearMap) -> bool {
        self.compose(other) == other.compose(self)
    }

    pub fn is_identity(&self) -> bool {
        *self == LinearMap::identity(self.dim())
    }

    /// Image of basis vector of degree g must stay in degree g.
    pub fn check_even(&self, space: &GradedSpace) -> Result<(), AlgebraError> {
        if self.dim() != space.dim() {
            return Err(AlgebraError::MapDimension {
                expected: space.dim(),
                got: self.dim(),
            });
        }
        for (i, img) in self.images.iter().enumerate() {
            for (k, _) in img.iter() {
                if k >= space.dim() {
                    return Err(AlgebraError::CoefficientIndex {
                        index: k,
                        dim: space.dim(),
                    });
                }
                if space.degree(k) != space.degree(i) {
                    return Err(AlgebraError::UnevenMap {
                        basis: space.name(i).to_owned(),
                        target: space.name(k).to_owned(),
                    });
                }
            }
        }
        Ok(())
    }

    /// Evenness across two spaces: image of a degree-g vector of `src` is
    /// supported in degree g of `dst`.
    pub fn check_even_between(
        &self,
        src: &GradedSpace,
        dst: &GradedSpace,
    ) -> Result<(), AlgebraError> {
        if self.dim() != src.dim() {
            return Err(AlgebraError::MapDimension {
                expected: src.dim(),
                got: self.dim(),
            });
        }
        for (i, img) in self.images.iter().enumerate() {
            for (k, _) in img.iter() {
                if k >= dst.dim() {
                    return Err(AlgebraError::CoefficientIndex {
                        index: k,
                        dim: dst.dim(),
                    });
                }
                if dst.degree(k) != src.degree(i) {
                    return Err(AlgebraError::UnevenMap {
                        basis: src.name(i).to_owned(),
                        target: dst.name(k).to_owned(),
                    });
                }
            }
        }
        Ok(())
    }
}

/// A color Hom-algebra bundle: graded space, ordered even products, even
/// twisting map α and a validated bicharacter, plus any auxiliary named maps
/// (for example an attached Rota-Baxter operator under the key `R`).
#[derive(Debug, Clone, PartialEq)]
pub struct HomAlgebra {
    space: GradedSpace,
    products: Vec<Product>,
    alpha: LinearMap,
    eps: Bicharacter,
    maps: BTreeMap<String, LinearMap>,
}

impl HomAlgebra {
    pub fn new(
        space: GradedSpace,
        products: Vec<Product>,
        alpha: LinearMap,
        eps: Bicharacter,
        maps: BTreeMap<String, LinearMap>,
    ) -> Result<Self, AlgebraError> {
        let report = eps
            .validate(space.group())
            .map_err(|e| AlgebraError::InvalidBicharacter(e.to_string()))?;
        if let Some(issue) = report.issue {
            return Err(AlgebraError::InvalidBicharacter(issue.to_string()));
        }
        alpha.check_even(&space)?;
        let mut seen = HashMap::new();
        for (pos, p) in products.iter().enumerate() {
            if seen.insert(p.name.clone(), pos).is_some() {
                return Err(AlgebraError::DuplicateProductName(p.name.clone()));
            }
            check_product_even(&space, p)?;
        }
        for m in maps.values() {
            m.check_even(&space)?;
        }
        Ok(HomAlgebra {
            space,
            products,
            alpha,
            eps,
            maps,
        })
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn group(&self) -> &GradingGroup {
        self.space.group()
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn products(&self) -> &[Product] {
        &self.products
    }

    pub fn product(&self, name: &str) -> Option<(usize, &Product)> {
        self.products
            .iter()
            .enumerate()
            .find(|(_, p)| p.name == name)
    }

    pub fn product_index(&self, name: &str) -> Result<usize, AlgebraError> {
        self.product(name)
            .map(|(i, _)| i)
            .ok_or_else(|| AlgebraError::UnknownProduct(name.to_owned()))
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn bicharacter(&self) -> &Bicharacter {
        &self.eps
    }

    pub fn maps(&self) -> &BTreeMap<String, LinearMap> {
        &self.maps
    }

    pub fn map(&self, name: &str) -> Option<&LinearMap> {
        self.maps.get(name)
    }

    /// ε on basis indices; degrees come from the validated space.
    pub fn eps(&self, i: usize, j: usize) -> Sign {
        self.eps
            .eval(self.space.degree(i), self.space.degree(j))
            .expect("degrees from the validated space")
    }

    /// ε on arbitrary degrees of the same group.
    pub fn eps_deg(&self, a: &Degree, b: &Degree) -> Sign {
        self.eps
            .eval(a, b)
            .expect("degrees from the validated group")
    }

    /// Bilinear extension of the structure-constant table.
    pub fn product_eval(&self, index: usize, v: &Vector, w: &Vector) -> Vector {
        let table = &self.products[index];
        let mut out = Vector::zero();
        for (i, ci) in v.iter() {
            for (j, cj) in w.iter() {
                if let Some(val) = table.get(i, j) {
                    out.add_scaled(&(ci * cj), val);
                }
            }
        }
        out
    }

    pub fn product_eval_named(
        &self,
        name: &str,
        v: &Vector,
        w: &Vector,
    ) -> Result<Vector, AlgebraError> {
        Ok(self.product_eval(self.product_index(name)?, v, w))
    }

    /// Same bundle with the products and twist replaced; revalidates.
    pub fn with_products(
        &self,
        products: Vec<Product>,
        alpha: LinearMap,
    ) -> Result<HomAlgebra, AlgebraError> {
        HomAlgebra::new(
            self.space.clone(),
            products,
            alpha,
            self.eps.clone(),
            self.maps.clone(),
        )
    }
}

fn check_product_even(space: &GradedSpace, p: &Product) -> Result<(), AlgebraError> {
    for (&(i, j), v) in p.entries() {
        if i >= space.dim() || j >= space.dim() {
            return Err(AlgebraError::CoefficientIndex {
                index: i.max(j),
                dim: space.dim(),
            });
        }
        let expected = space.group().add(space.degree(i), space.degree(j));
        for (k, _) in v.iter() {
            if k >= space.dim() {
                return Err(AlgebraError::CoefficientIndex {
                    index: k,
                    dim: space.dim(),
                });
            }
            if *space.degree(k) != expected {
                return Err(AlgebraError::UnevenProduct {
                    product: p.name.clone(),
                    left: space.name(i).to_owned(),
                    right: space.name(j).to_owned(),
                    target: space.name(k).to_owned(),
                    target_degree: space.degree(k).clone(),
                    expected_degree: expected,
                });
            }
        }
    }
    Ok(())
}
