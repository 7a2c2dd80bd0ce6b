use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::arrangement::Arrangement;
use super::multipoly::MultiPoly;
use crate::error::OracleError;
use crate::linalg::{self, SparseRow};

/// Size guard for the exact freeness computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    pub max_dimension: usize,
    pub max_hyperplanes: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_dimension: 5, max_hyperplanes: 25 }
    }
}

impl OracleLimits {
    pub fn admits(&self, a: &Arrangement) -> bool {
        a.dimension() <= self.max_dimension && a.len() <= self.max_hyperplanes
    }

    pub(crate) fn check(&self, a: &Arrangement) -> Result<(), OracleError> {
        if self.admits(a) {
            Ok(())
        } else {
            Err(OracleError::OutOfRange {
                dimension: a.dimension(),
                hyperplanes: a.len(),
                max_dimension: self.max_dimension,
                max_hyperplanes: self.max_hyperplanes,
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessStatus {
    Free,
    NonFree,
}

/// A homogeneous derivation `θ = Σ_j f_j ∂_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Derivation {
    pub degree: usize,
    pub coefficients: Vec<MultiPoly>,
}

/// One row of the graded obstruction table.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedPiece {
    pub degree: usize,
    /// `dim D(A)_d`.
    pub dimension: usize,
    /// `dim (S₁ · D(A)_{d−1})`.
    pub from_lower: usize,
    pub new_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FreenessCertificate {
    /// `det [θ_i(x_j)] = scalar · Q` with `scalar ≠ 0`.
    Saito {
        basis: Vec<Derivation>,
        #[serde(with = "crate::poly::coefficient")]
        scalar: BigInt,
    },
    Obstruction {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessResult {
    pub status: FreenessStatus,
    /// Degrees of the basis, ascending; empty when not free.
    pub exponents: Vec<usize>,
    pub table: Vec<GradedPiece>,
    pub certificate: FreenessCertificate,
}

impl FreenessResult {
    pub fn is_free(&self) -> bool {
        self.status == FreenessStatus::Free
    }
}

pub fn freeness_decide(a: &Arrangement) -> Result<FreenessResult, OracleError> {
    freeness_decide_with(a, &OracleLimits::default())
}

/// Decides whether `D(A)` is a free module.
///
/// For `d = 0, 1, …` the graded piece `D(A)_d` is computed as the kernel of
/// the linear conditions `θ(α_H)|_H = 0`, and the minimal generators of
/// degree `d` are the part of `D(A)_d` not reached by `x_k · D(A)_{d−1}`.
/// A free module has exactly `ℓ` minimal generators whose degrees sum to
/// `|A|`; the search stops as soon as that is confirmed by Saito's
/// determinant or ruled out by the counts.
pub fn freeness_decide_with(a: &Arrangement, limits: &OracleLimits) -> Result<FreenessResult, OracleError> {
    limits.check(a)?;
    let l = a.dimension();
    let n = a.len();
    let mut table = Vec::new();
    if l == 0 {
        return Ok(FreenessResult {
            status: FreenessStatus::Free,
            exponents: vec![],
            table,
            certificate: FreenessCertificate::Saito { basis: vec![], scalar: BigInt::one() },
        });
    }
    let mut generators: Vec<Derivation> = Vec::new();
    let mut previous: Vec<Derivation> = Vec::new();
    for d in 0.. {
        let space = GradedSpace::new(a, d);
        let basis = space.derivations(&space.kernel());
        let lower: Vec<SparseRow<BigInt>> = previous
            .iter()
            .flat_map(|theta| (0..l).map(move |k| (theta, k)))
            .map(|(theta, k)| space.to_row(&times_variable(theta, k)).expect("S₁·D(A)_{d−1} lies in D(A)_d"))
            .collect();
        let candidates: Vec<SparseRow<BigInt>> =
            basis.iter().map(|t| space.to_row(t).expect("kernel vectors use the column set")).collect();
        let from_lower = linalg::rank(space.columns.len(), &lower);
        let picked = linalg::extend_basis(space.columns.len(), &lower, &candidates);
        table.push(GradedPiece { degree: d, dimension: basis.len(), from_lower, new_generators: picked.len() });
        generators.extend(picked.iter().map(|&i| basis[i].clone()));
        previous = basis;

        let m = generators.len();
        let degree_sum: usize = generators.iter().map(|g| g.degree).sum();
        let non_free = |reason: String, table: Vec<GradedPiece>| FreenessResult {
            status: FreenessStatus::NonFree,
            exponents: vec![],
            table,
            certificate: FreenessCertificate::Obstruction { reason },
        };
        if m > l {
            return Ok(non_free(format!("{m} minimal generators in degrees ≤ {d}, more than the rank {l}"), table));
        }
        if m == l {
            if degree_sum != n {
                return Ok(non_free(format!("generator degrees sum to {degree_sum}, not |A| = {n}"), table));
            }
            let matrix: Vec<Vec<MultiPoly>> = generators.iter().map(|g| g.coefficients.clone()).collect();
            let det = MultiPoly::determinant(&matrix, l);
            let q = a.defining_polynomial();
            return Ok(match det.scalar_multiple_of(&q).filter(|c| !c.is_zero()) {
                Some(scalar) => FreenessResult {
                    status: FreenessStatus::Free,
                    exponents: generators.iter().map(|g| g.degree).collect(),
                    table,
                    certificate: FreenessCertificate::Saito { basis: generators, scalar },
                },
                None => non_free(format!("{l} minimal generators whose determinant is not a multiple of Q"), table),
            });
        }
        if degree_sum + (l - m) * (d + 1) > n {
            return Ok(non_free(
                format!(
                    "{m} minimal generators in degrees ≤ {d}; the remaining {} would push the degree sum past |A| = {n}",
                    l - m
                ),
                table,
            ));
        }
    }
    unreachable!("the degree bound ends the search")
}

fn times_variable(theta: &Derivation, k: usize) -> Derivation {
    let x = MultiPoly::linear(&(0..theta.coefficients.len()).map(|i| i64::from(i == k)).collect::<Vec<_>>());
    Derivation { degree: theta.degree + 1, coefficients: theta.coefficients.iter().map(|f| f.mul(&x)).collect() }
}

/// Exponent vectors of total degree `d` in `l` variables, lexicographic.
fn monomials(l: usize, d: usize) -> Vec<Vec<u32>> {
    fn go(l: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == l {
            prefix.push(d);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=d).rev() {
            prefix.push(e);
            go(l, d - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if l > 0 {
        go(l, d as u32, &mut Vec::new(), &mut out);
    }
    out
}

/// Unknowns for degree-`d` derivations: one column per allowed
/// `(coordinate j, monomial)` pair. When `x_j = 0` is a hyperplane, `f_j` must
/// be divisible by `x_j`, so monomials without `x_j` are left out.
struct GradedSpace<'a> {
    a: &'a Arrangement,
    degree: usize,
    columns: Vec<(usize, Vec<u32>)>,
    column_of: HashMap<(usize, Vec<u32>), usize>,
}

impl<'a> GradedSpace<'a> {
    fn new(a: &'a Arrangement, degree: usize) -> Self {
        let l = a.dimension();
        let coordinate =
            |j: usize| a.hyperplanes.iter().any(|h| h.normal.iter().enumerate().all(|(i, &x)| x == i64::from(i == j)));
        let monos = monomials(l, degree);
        let mut columns = Vec::new();
        for j in 0..l {
            let divisible = coordinate(j);
            for m in &monos {
                if !divisible || m[j] > 0 {
                    columns.push((j, m.clone()));
                }
            }
        }
        let column_of = columns.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();
        GradedSpace { a, degree, columns, column_of }
    }

    /// Linear conditions, one row per hyperplane and monomial of the
    /// restricted polynomial `θ(α)` on a parametrization of `H`.
    fn conditions(&self) -> Vec<SparseRow<BigInt>> {
        let l = self.a.dimension();
        let mut rows = Vec::new();
        for h in &self.a.hyperplanes {
            let alpha = &h.normal;
            let support: Vec<usize> = (0..l).filter(|&j| alpha[j] != 0).collect();
            if support.len() == 1 {
                continue; // coordinate hyperplane, enforced by the column set
            }
            let p = support[0];
            let ap = BigInt::from(alpha[p]);
            // x_j = α_p y_j (j ≠ p), x_p = −Σ_{j≠p} α_j y_j.
            let minus_l: Vec<i64> = (0..l).map(|j| if j == p { 0 } else { -alpha[j] }).collect();
            let minus_l = MultiPoly::linear(&minus_l);
            let mut powers = vec![MultiPoly::constant(l, 1)];
            for _ in 0..self.degree {
                let next = powers.last().unwrap().mul(&minus_l);
                powers.push(next);
            }
            let mut ap_powers = vec![BigInt::one()];
            for _ in 0..self.degree {
                let next = ap_powers.last().unwrap() * &ap;
                ap_powers.push(next);
            }
            let mut by_monomial: BTreeMap<Vec<u32>, BTreeMap<usize, BigInt>> = BTreeMap::new();
            for (col, (j, m)) in self.columns.iter().enumerate() {
                if alpha[*j] == 0 {
                    continue;
                }
                let rest: u32 = m.iter().enumerate().filter(|&(i, _)| i != p).map(|(_, &e)| e).sum();
                let scale = &ap_powers[rest as usize] * alpha[*j];
                let mut base = m.clone();
                base[p] = 0;
                for (e, c) in &powers[m[p] as usize].terms {
                    let key: Vec<u32> = base.iter().zip(e).map(|(a, b)| a + b).collect();
                    let entry = by_monomial.entry(key).or_default().entry(col).or_insert_with(BigInt::zero);
                    *entry += c * &scale;
                }
            }
            for (_, row) in by_monomial {
                let sparse: SparseRow<BigInt> = row.into_iter().filter(|(_, v)| !v.is_zero()).collect();
                if !sparse.is_empty() {
                    rows.push(sparse);
                }
            }
        }
        rows
    }

    fn kernel(&self) -> Vec<Vec<BigInt>> {
        linalg::kernel(self.columns.len(), &self.conditions())
    }

    fn derivations(&self, vectors: &[Vec<BigInt>]) -> Vec<Derivation> {
        let l = self.a.dimension();
        vectors
            .iter()
            .map(|v| {
                let mut coefficients = vec![MultiPoly::zero(l); l];
                for (col, c) in v.iter().enumerate() {
                    if !c.is_zero() {
                        let (j, m) = &self.columns[col];
                        coefficients[*j].terms.insert(m.clone(), c.clone());
                    }
                }
                Derivation { degree: self.degree, coefficients }
            })
            .collect()
    }

    /// `None` if `theta` uses a monomial outside the column set.
    fn to_row(&self, theta: &Derivation) -> Option<SparseRow<BigInt>> {
        let mut row: Vec<(usize, BigInt)> = Vec::new();
        for (j, f) in theta.coefficients.iter().enumerate() {
            for (m, c) in &f.terms {
                row.push((*self.column_of.get(&(j, m.clone()))?, c.clone()));
            }
        }
        row.sort_by_key(|(c, _)| *c);
        Some(row)
    }
}

/// Checks `θ(α_H) ∈ α_H·S` for every hyperplane by exact division.
pub fn is_logarithmic(a: &Arrangement, theta: &Derivation) -> bool {
    let space = GradedSpace::new(a, theta.degree);
    if theta.coefficients.len() != a.dimension() {
        return false;
    }
    let Some(row) = space.to_row(theta) else {
        return false;
    };
    space.conditions().iter().all(|cond| {
        let mut sum = BigInt::zero();
        let mut i = 0;
        for (col, v) in cond {
            while i < row.len() && row[i].0 < *col {
                i += 1;
            }
            if i < row.len() && row[i].0 == *col {
                sum += v * &row[i].1;
            }
        }
        sum.is_zero()
    })
}
