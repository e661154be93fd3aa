//! Brute-force enumeration of even linear maps satisfying an operator
//! identity on a small algebra.
//!
//! Only degree-preserving candidates are enumerated: the grading partitions
//! the basis into blocks, and a candidate has one free entry per (source,
//! target) pair within a block. The full grid |entries|^(Σ blockᵢ²) is sized
//! up front and the search aborts when it exceeds the configured limit.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use thiserror::Error;

use crate::algebra::{HomAlgebra, LinearMap, Vector};
use crate::grading::Degree;
use crate::operators::{check_operator, OperatorError, OperatorKind};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SearchError {
    #[error("entry set is empty")]
    EmptyEntrySet,
    #[error("limit must be positive")]
    ZeroLimit,
    #[error("search space holds {candidates} candidates, over the limit {limit}")]
    SpaceTooLarge { candidates: BigUint, limit: u64 },
    #[error(transparent)]
    Operator(#[from] OperatorError),
}

/// What to search for: which operator identity, over which entry grid, with
/// an abort threshold on the candidate count.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpec {
    pub kind: OperatorKind,
    pub entries: Vec<Scalar>,
    pub limit: u64,
    /// Restrict the identity to these products; all products by default.
    pub products: Option<Vec<String>>,
}

/// Returns every even map on the grid passing `check_operator`, in
/// lexicographic order of the entry vector (positions ordered by source then
/// target index, entries in the order given).
pub fn search_operators(
    alg: &HomAlgebra,
    spec: &SearchSpec,
) -> Result<Vec<LinearMap>, SearchError> {
    if spec.entries.is_empty() {
        return Err(SearchError::EmptyEntrySet);
    }
    if spec.limit == 0 {
        return Err(SearchError::ZeroLimit);
    }
    let dim = alg.dim();
    let mut blocks: BTreeMap<&Degree, Vec<usize>> = BTreeMap::new();
    for i in 0..dim {
        blocks.entry(alg.space().degree(i)).or_default().push(i);
    }
    // free positions: (source, target) within each block, source-major
    let mut positions: Vec<(usize, usize)> = Vec::new();
    for members in blocks.values() {
        for &src in members {
            for &tgt in members {
                positions.push((src, tgt));
            }
        }
    }
    positions.sort();

    let candidates = BigUint::from(spec.entries.len()).pow(positions.len() as u32);
    if candidates > BigUint::from(spec.limit) {
        return Err(SearchError::SpaceTooLarge {
            candidates,
            limit: spec.limit,
        });
    }

    let products = spec.products.as_deref();
    let mut found = Vec::new();
    let mut choice = vec![0usize; positions.len()];
    loop {
        let mut images = vec![Vector::zero(); dim];
        for (pos, &entry_idx) in positions.iter().zip(&choice) {
            images[pos.0].add_scaled_basis(pos.1, spec.entries[entry_idx].clone());
        }
        let map = LinearMap::from_images(images);
        let report = check_operator(alg, &spec.kind, &map, products)?;
        if report.passed {
            found.push(map);
        }
        // odometer over entry indices, last position fastest
        let mut p = positions.len();
        loop {
            if p == 0 {
                return Ok(found);
            }
            p -= 1;
            choice[p] += 1;
            if choice[p] < spec.entries.len() {
                break;
            }
            choice[p] = 0;
        }
    }
}
