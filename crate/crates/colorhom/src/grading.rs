//! The grading group G, degree arithmetic, and skew-symmetric bicharacters.
//!
//! G is a finitely generated abelian group Z^r × Z_{m_1} × … × Z_{m_t}. A
//! bicharacter ε : G × G → {±1} is stored through an integer exponent matrix
//! M, with ε(a, b) = (−1)^{aᵀMb}. In this representation biadditivity in each
//! slot is automatic; skew-symmetry ε(a,b)ε(b,a) = 1 amounts to M + Mᵀ being
//! even entrywise, and well-definedness on a torsion coordinate of order m to
//! m·M[i][j] being even along that row and column.

use serde::{Deserialize, Serialize};
use std::fmt;
use std::ops::Mul;
use thiserror::Error;

use crate::scalar::{int, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GradingError {
    #[error("torsion order {0} is smaller than 2")]
    TorsionTooSmall(i64),
    #[error("degree has {got} coordinates, group has rank {expected}")]
    DegreeLength { expected: usize, got: usize },
    #[error("exponent matrix is {rows}x{cols}, expected square of size {expected}")]
    MatrixShape {
        rows: usize,
        cols: usize,
        expected: usize,
    },
    #[error("group is infinite (free rank {0}); exhaustive enumeration impossible")]
    InfiniteGroup(usize),
}

/// Z^free_rank × Z_{m_1} × … × Z_{m_t}, torsion orders all ≥ 2.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradingGroup {
    free_rank: usize,
    torsion: Vec<u64>,
}

impl GradingGroup {
    pub fn new(free_rank: usize, torsion: Vec<u64>) -> Result<Self, GradingError> {
        if let Some(&m) = torsion.iter().find(|&&m| m < 2) {
            return Err(GradingError::TorsionTooSmall(m as i64));
        }
        Ok(GradingGroup { free_rank, torsion })
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    /// Total number of coordinates.
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn zero(&self) -> Degree {
        Degree(vec![0; self.rank()])
    }

    /// Builds a degree from raw coordinates, reducing torsion coordinates.
    pub fn degree(&self, coords: &[i64]) -> Result<Degree, GradingError> {
        if coords.len() != self.rank() {
            return Err(GradingError::DegreeLength {
                expected: self.rank(),
                got: coords.len(),
            });
        }
        let mut c = coords.to_vec();
        for (t, &m) in self.torsion.iter().enumerate() {
            let i = self.free_rank + t;
            c[i] = c[i].rem_euclid(m as i64);
        }
        Ok(Degree(c))
    }

    pub fn add(&self, a: &Degree, b: &Degree) -> Degree {
        debug_assert_eq!(a.0.len(), self.rank());
        debug_assert_eq!(b.0.len(), self.rank());
        let coords: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.degree(&coords).expect("same rank")
    }

    /// All group elements, for finite G only.
    pub fn elements(&self) -> Result<Vec<Degree>, GradingError> {
        if !self.is_finite() {
            return Err(GradingError::InfiniteGroup(self.free_rank));
        }
        let mut out = vec![self.zero()];
        for (t, &m) in self.torsion.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * m as usize);
            for d in &out {
                for v in 0..m as i64 {
                    let mut c = d.0.clone();
                    c[t] = v;
                    next.push(Degree(c));
                }
            }
            out = next;
        }
        Ok(out)
    }
}

/// An element of the grading group; labels each basis vector. Torsion
/// coordinates are kept reduced into [0, m).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Degree(Vec<i64>);

impl Degree {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A value of a sign bicharacter.
#[derive(Debug, Copy, Clone, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_parity(n: i64) -> Sign {
        if n.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn scalar(self) -> Scalar {
        match self {
            Sign::Plus => int(1),
            Sign::Minus => int(-1),
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// Skew-symmetric bicharacter ε(a,b) = (−1)^{aᵀMb} with values in {+1, −1}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bicharacter {
    exponent_matrix: Vec<Vec<i64>>,
}

/// The first axiom violation found by `Bicharacter::validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BicharacterIssue {
    /// ε(a,b)·ε(b,a) ≠ 1.
    SkewSymmetry { a: Degree, b: Degree },
    /// Value changes when the given torsion coordinate shifts by its order.
    TorsionPeriodicity { coordinate: usize },
    /// ε(a, b+c) ≠ ε(a,b)·ε(a,c).
    RightAdditivity { a: Degree, b: Degree, c: Degree },
    /// ε(a+b, c) ≠ ε(a,c)·ε(b,c).
    LeftAdditivity { a: Degree, b: Degree, c: Degree },
}

impl fmt::Display for BicharacterIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BicharacterIssue::SkewSymmetry { a, b } => {
                write!(f, "eps({a},{b})*eps({b},{a}) != 1")
            }
            BicharacterIssue::TorsionPeriodicity { coordinate } => {
                write!(
                    f,
                    "value not invariant under torsion shift in coordinate {coordinate}"
                )
            }
            BicharacterIssue::RightAdditivity { a, b, c } => {
                write!(f, "eps({a},{b}+{c}) != eps({a},{b})*eps({a},{c})")
            }
            BicharacterIssue::LeftAdditivity { a, b, c } => {
                write!(f, "eps({a}+{b},{c}) != eps({a},{c})*eps({b},{c})")
            }
        }
    }
}

/// Outcome of validating a bicharacter against a group: pass, or the first
/// violation found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub issue: Option<BicharacterIssue>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.issue.is_none()
    }
}

impl Bicharacter {
    pub fn new(exponent_matrix: Vec<Vec<i64>>) -> Result<Self, GradingError> {
        let n = exponent_matrix.len();
        if let Some(row) = exponent_matrix.iter().find(|r| r.len() != n) {
            return Err(GradingError::MatrixShape {
                rows: n,
                cols: row.len(),
                expected: n,
            });
        }
        Ok(Bicharacter { exponent_matrix })
    }

    /// The trivial bicharacter ε ≡ 1 on a group of the given rank.
    pub fn trivial(rank: usize) -> Self {
        Bicharacter {
            exponent_matrix: vec![vec![0; rank]; rank],
        }
    }

    pub fn size(&self) -> usize {
        self.exponent_matrix.len()
    }

    pub fn exponent_matrix(&self) -> &[Vec<i64>] {
        &self.exponent_matrix
    }

    /// ε(a, b) = (−1)^{aᵀMb}. Errors when the degrees do not match the matrix.
    pub fn eval(&self, a: &Degree, b: &Degree) -> Result<Sign, GradingError> {
        let n = self.size();
        if a.coords().len() != n {
            return Err(GradingError::DegreeLength {
                expected: n,
                got: a.coords().len(),
            });
        }
        if b.coords().len() != n {
            return Err(GradingError::DegreeLength {
                expected: n,
                got: b.coords().len(),
            });
        }
        let mut exponent: i64 = 0;
        for (i, ai) in a.coords().iter().enumerate() {
            for (j, bj) in b.coords().iter().enumerate() {
                // parity only; avoid overflow by reducing factors mod 2
                exponent += (ai & 1) * (self.exponent_matrix[i][j] & 1) * (bj & 1);
            }
        }
        Ok(Sign::from_parity(exponent))
    }

    /// Verifies the bicharacter axioms against a group. Skew-symmetry is
    /// checked through M + Mᵀ ≡ 0 (mod 2); torsion well-definedness through
    /// m·M parity along the torsion rows and columns; for finite groups all
    /// three axioms are additionally checked exhaustively.
    pub fn validate(&self, group: &GradingGroup) -> Result<ValidationReport, GradingError> {
        let n = group.rank();
        if self.size() != n {
            return Err(GradingError::MatrixShape {
                rows: self.size(),
                cols: self.size(),
                expected: n,
            });
        }
        let m = &self.exponent_matrix;
        for i in 0..n {
            for j in 0..n {
                if (m[i][j] + m[j][i]).rem_euclid(2) != 0 {
                    // report the pair of unit-coordinate degrees of the
                    // offending entry
                    let mut a = vec![0i64; n];
                    let mut b = vec![0i64; n];
                    a[i] = 1;
                    b[j] = 1;
                    return Ok(ValidationReport {
                        issue: Some(BicharacterIssue::SkewSymmetry {
                            a: group.degree(&a)?,
                            b: group.degree(&b)?,
                        }),
                    });
                }
            }
        }
        for (t, &ord) in group.torsion().iter().enumerate() {
            let p = group.free_rank() + t;
            let shift_even = (0..n).all(|j| (ord as i64 * m[p][j]).rem_euclid(2) == 0)
                && (0..n).all(|i| (ord as i64 * m[i][p]).rem_euclid(2) == 0);
            if !shift_even {
                return Ok(ValidationReport {
                    issue: Some(BicharacterIssue::TorsionPeriodicity { coordinate: p }),
                });
            }
        }
        if group.is_finite() {
            let elems = group.elements()?;
            for a in &elems {
                for b in &elems {
                    let skew = self.eval(a, b)? * self.eval(b, a)?;
                    if skew != Sign::Plus {
                        return Ok(ValidationReport {
                            issue: Some(BicharacterIssue::SkewSymmetry {
                                a: a.clone(),
                                b: b.clone(),
                            }),
                        });
                    }
                    for c in &elems {
                        if self.eval(a, &group.add(b, c))? != self.eval(a, b)? * self.eval(a, c)? {
                            return Ok(ValidationReport {
                                issue: Some(BicharacterIssue::RightAdditivity {
                                    a: a.clone(),
                                    b: b.clone(),
                                    c: c.clone(),
                                }),
                            });
                        }
                        if self.eval(&group.add(a, b), c)? != self.eval(a, c)? * self.eval(b, c)? {
                            return Ok(ValidationReport {
                                issue: Some(BicharacterIssue::LeftAdditivity {
                                    a: a.clone(),
                                    b: b.clone(),
                                    c: c.clone(),
                                }),
                            });
                        }
                    }
                }
            }
        }
        Ok(ValidationReport { issue: None })
    }
}
