use std::collections::HashMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::arrangement::Arrangement;
use crate::error::OracleError;
use crate::poly::IntPoly;

/// Most hyperplanes a lattice can be built for (one bit per hyperplane).
pub const MAX_LATTICE_HYPERPLANES: usize = 128;

/// An intersection `X`, identified by the hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flat {
    pub rank: usize,
    pub hyperplanes: Vec<usize>,
    pub mobius: i64,
    #[serde(skip)]
    pub(crate) mask: u128,
}

/// All intersections of an arrangement ordered by reverse inclusion, with
/// Möbius values from the bottom (the ambient space).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionLattice {
    pub dimension: usize,
    pub hyperplane_count: usize,
    /// Sorted by rank; `flats[0]` is the ambient space.
    pub flats: Vec<Flat>,
    #[serde(skip)]
    index: HashMap<u128, usize>,
}

pub(crate) fn mask_of(indices: impl IntoIterator<Item = usize>) -> u128 {
    indices.into_iter().fold(0u128, |m, i| m | 1 << i)
}

pub(crate) fn indices_of(mask: u128) -> Vec<usize> {
    (0..128).filter(|i| mask >> i & 1 == 1).collect()
}

fn dot(a: &[i64], x: &[i128]) -> i128 {
    a.iter().zip(x).map(|(&p, &q)| (p as i128).checked_mul(q).expect("lattice arithmetic overflow")).sum()
}

/// Basis of `X ∩ H` from a basis of `X`, or `None` if `X ⊆ H`.
fn intersect(basis: &[Vec<i128>], normal: &[i64]) -> Option<Vec<Vec<i128>>> {
    let values: Vec<i128> = basis.iter().map(|x| dot(normal, x)).collect();
    let p = (0..basis.len()).filter(|&i| values[i] != 0).min_by_key(|&i| values[i].abs())?;
    let ap = values[p];
    Some(
        (0..basis.len())
            .filter(|&i| i != p)
            .map(|i| {
                let v: Vec<i128> = basis[i]
                    .iter()
                    .zip(&basis[p])
                    .map(|(&x, &y)| {
                        ap.checked_mul(x)
                            .and_then(|a| values[i].checked_mul(y).and_then(|b| a.checked_sub(b)))
                            .expect("lattice arithmetic overflow")
                    })
                    .collect();
                let g = v.iter().fold(0i128, |acc, &x| num_integer::Integer::gcd(&acc, &x));
                if g > 1 {
                    v.into_iter().map(|x| x / g).collect()
                } else {
                    v
                }
            })
            .collect(),
    )
}

fn containing(a: &Arrangement, basis: &[Vec<i128>]) -> u128 {
    mask_of((0..a.len()).filter(|&i| basis.iter().all(|x| dot(&a.hyperplanes[i].normal, x) == 0)))
}

pub fn intersection_lattice(a: &Arrangement) -> Result<IntersectionLattice, OracleError> {
    if a.len() > MAX_LATTICE_HYPERPLANES {
        return Err(OracleError::OutOfRange {
            dimension: a.dimension(),
            hyperplanes: a.len(),
            max_dimension: a.dimension(),
            max_hyperplanes: MAX_LATTICE_HYPERPLANES,
        });
    }
    let l = a.dimension();
    let ambient: Vec<Vec<i128>> = (0..l).map(|i| (0..l).map(|j| i128::from(i == j)).collect()).collect();
    let mut flats = vec![Flat { rank: 0, hyperplanes: vec![], mobius: 1, mask: 0 }];
    let mut index: HashMap<u128, usize> = HashMap::from([(0, 0)]);
    let mut level: Vec<(u128, Vec<Vec<i128>>)> = vec![(0, ambient)];
    let mut rank = 0;
    while !level.is_empty() {
        rank += 1;
        let mut next: Vec<(u128, Vec<Vec<i128>>)> = Vec::new();
        for (mask, basis) in &level {
            for h in 0..a.len() {
                if mask >> h & 1 == 1 {
                    continue;
                }
                let Some(meet) = intersect(basis, &a.hyperplanes[h].normal) else { continue };
                let m = containing(a, &meet);
                if let std::collections::hash_map::Entry::Vacant(e) = index.entry(m) {
                    e.insert(flats.len());
                    flats.push(Flat { rank, hyperplanes: indices_of(m), mobius: 0, mask: m });
                    next.push((m, meet));
                }
            }
        }
        level = next;
    }
    for x in 1..flats.len() {
        let mx = flats[x].mask;
        let below: i64 =
            flats[..x].iter().filter(|y| y.rank < flats[x].rank && y.mask & !mx == 0).map(|y| y.mobius).sum();
        flats[x].mobius = -below;
    }
    Ok(IntersectionLattice { dimension: l, hyperplane_count: a.len(), flats, index })
}

impl IntersectionLattice {
    pub fn rank(&self) -> usize {
        self.flats.last().map_or(0, |f| f.rank)
    }

    /// `χ(A, t) = Σ μ(X) t^{dim X}`.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![BigInt::from(0); self.dimension + 1];
        for f in &self.flats {
            coeffs[self.dimension - f.rank] += f.mobius;
        }
        IntPoly::new(coeffs)
    }

    pub(crate) fn flat_index(&self, mask: u128) -> Option<usize> {
        self.index.get(&mask).copied()
    }

    /// The smallest flat whose hyperplane set contains `mask`.
    pub(crate) fn closure(&self, mask: u128) -> &Flat {
        self.flats
            .iter()
            .filter(|f| mask & !f.mask == 0)
            .min_by_key(|f| f.rank)
            .expect("the top flat contains every hyperplane")
    }

    pub fn is_flat(&self, indices: &[usize]) -> bool {
        self.flat_index(mask_of(indices.iter().copied())).is_some()
    }

    /// Rank of the hyperplanes at `indices`.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        self.closure(mask_of(indices.iter().copied())).rank
    }

    /// Checks `Σ_{Y ≤ X} μ(Y) = 0` for every flat above the bottom.
    pub fn check_mobius(&self) -> bool {
        self.flats.iter().enumerate().all(|(i, x)| {
            let sum: i64 = self.flats.iter().filter(|y| y.mask & !x.mask == 0).map(|y| y.mobius).sum();
            if i == 0 {
                sum == 1
            } else {
                sum == 0
            }
        })
    }
}

pub fn characteristic_polynomial(a: &Arrangement) -> Result<IntPoly, OracleError> {
    Ok(intersection_lattice(a)?.characteristic_polynomial())
}

/// `A_X`: the hyperplanes containing the flat, in the same ambient space.
pub fn localization(a: &Arrangement, flat: &Flat) -> Arrangement {
    a.subarrangement(&flat.hyperplanes)
}

/// Rank of a set of integer vectors.
#[cfg(test)]
pub(crate) fn vector_rank(vectors: &[Vec<i64>]) -> usize {
    let Some(l) = vectors.first().map(Vec::len) else { return 0 };
    let ambient: Vec<Vec<i128>> = (0..l).map(|i| (0..l).map(|j| i128::from(i == j)).collect()).collect();
    let mut basis = ambient;
    let mut rank = 0;
    for v in vectors {
        let v = super::arrangement::primitive(v.clone());
        if let Some(b) = intersect(&basis, &v) {
            basis = b;
            rank += 1;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::arrangement::{realize, Hyperplane};
    use crate::SignedGraph;

    #[test]
    fn small_lattices() {
        let empty = intersection_lattice(&Arrangement::empty(3)).unwrap();
        assert_eq!(empty.flats.len(), 1);
        assert_eq!(empty.flats[0].mobius, 1);
        assert_eq!(empty.characteristic_polynomial(), IntPoly::monomial(3));

        let one = Arrangement::new(vec![1, 2], vec![Hyperplane { normal: vec![1, 1], sources: vec![] }]);
        let lat = intersection_lattice(&one).unwrap();
        assert_eq!(lat.flats.iter().map(|f| f.mobius).collect::<Vec<_>>(), vec![1, -1]);

        let b2 = intersection_lattice(&realize(&gen::complete_signed(1..=2))).unwrap();
        assert_eq!(b2.characteristic_polynomial(), IntPoly::from_roots([1, 3]));
        assert_eq!(b2.rank(), 2);

        let k3 = realize(&gen::complete_positive(3));
        assert_eq!(characteristic_polynomial(&k3).unwrap(), IntPoly::from_roots([0, 1, 2]));
    }

    #[test]
    fn mobius_recursion_and_rank() {
        let mut r = gen::rng(5);
        for _ in 0..50 {
            let g = gen::random_graph(&mut r, 4, gen::GraphClass::General, gen::LoopPolicy::Random);
            let lat = intersection_lattice(&realize(&g)).unwrap();
            assert!(lat.check_mobius());
            assert_eq!(lat.rank(), g.rank());
            for w in lat.flats.windows(2) {
                assert!(w[0].rank <= w[1].rank);
            }
        }
    }

    #[test]
    fn b3_flat_count() {
        let lat = intersection_lattice(&realize(&gen::complete_signed(1..=3))).unwrap();
        // Dowling lattice of rank 3 over a group of order 2.
        assert_eq!(lat.flats.len(), 24);
        assert_eq!(lat.characteristic_polynomial(), IntPoly::from_roots([1, 3, 5]));
        let _ = SignedGraph::empty();
    }
}
