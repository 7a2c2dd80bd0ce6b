use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::arrangement::Arrangement;
use super::lattice::{indices_of, intersection_lattice, IntersectionLattice};
use crate::error::OracleError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupersolvableResult {
    pub supersolvable: bool,
    /// `A₁ ⊆ A₂ ⊆ … ⊆ A_r = A` as hyperplane index lists, when supersolvable.
    pub filtration: Option<Vec<Vec<usize>>>,
}

/// Searches for a filtration `A = A_r ⊇ … ⊇ A₁` with `rank(A_i) = i` in which
/// any two hyperplanes of `A_i ∖ A_{i−1}` meet inside some member of `A_{i−1}`.
///
/// Each `A_i` is taken to be a localization, so the search runs top-down
/// over flats of the lattice with memoization on the current flat.
pub fn is_supersolvable_lattice(a: &Arrangement) -> Result<SupersolvableResult, OracleError> {
    let lattice = intersection_lattice(a)?;
    Ok(supersolvable_in(&lattice))
}

pub(crate) fn supersolvable_in(lattice: &IntersectionLattice) -> SupersolvableResult {
    let n = lattice.hyperplane_count;
    // join[i][j]: mask of the rank-2 flat containing hyperplanes i and j.
    let mut join = vec![vec![0u128; n]; n];
    for f in lattice.flats.iter().filter(|f| f.rank == 2) {
        for &i in &f.hyperplanes {
            for &j in &f.hyperplanes {
                join[i][j] = f.mask;
            }
        }
    }
    let top = lattice.flats.last().expect("lattice has a bottom flat");
    let mut memo: HashMap<u128, Option<Vec<u128>>> = HashMap::new();
    match search(lattice, &join, top.mask, top.rank, &mut memo) {
        Some(chain) => {
            SupersolvableResult { supersolvable: true, filtration: Some(chain.into_iter().map(indices_of).collect()) }
        }
        None => SupersolvableResult { supersolvable: false, filtration: None },
    }
}

/// Chain `[A₁, …, A_rank]` ending at `mask`, if one exists.
fn search(
    lattice: &IntersectionLattice,
    join: &[Vec<u128>],
    mask: u128,
    rank: usize,
    memo: &mut HashMap<u128, Option<Vec<u128>>>,
) -> Option<Vec<u128>> {
    if rank == 0 {
        return Some(vec![]);
    }
    if rank == 1 {
        return Some(vec![mask]);
    }
    if let Some(r) = memo.get(&mask) {
        return r.clone();
    }
    let mut result = None;
    for y in lattice.flats.iter().filter(|f| f.rank == rank - 1 && f.mask & !mask == 0) {
        let outside = indices_of(mask & !y.mask);
        let covered =
            outside.iter().enumerate().all(|(k, &i)| outside[k + 1..].iter().all(|&j| join[i][j] & y.mask != 0));
        if !covered {
            continue;
        }
        if let Some(mut chain) = search(lattice, join, y.mask, rank - 1, memo) {
            chain.push(mask);
            result = Some(chain);
            break;
        }
    }
    memo.insert(mask, result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gen;
    use crate::oracle::arrangement::realize;
    use crate::SignedGraph;

    #[test]
    fn examples() {
        let independent = realize(&SignedGraph::new(1..=3, [(1, 2)], [(2, 3)], [3]).unwrap());
        let r = is_supersolvable_lattice(&independent).unwrap();
        assert!(r.supersolvable);
        assert_eq!(r.filtration.unwrap().len(), 3);

        assert!(is_supersolvable_lattice(&realize(&gen::d3())).unwrap().supersolvable);
        for l in 1..=4 {
            assert!(is_supersolvable_lattice(&realize(&gen::complete_signed(1..=l))).unwrap().supersolvable);
        }

        let square = SignedGraph::new(1..=4, [(1, 4), (2, 3)], [(1, 2), (3, 4)], []).unwrap();
        assert!(!is_supersolvable_lattice(&realize(&square)).unwrap().supersolvable);
        assert!(is_supersolvable_lattice(&Arrangement::empty(2)).unwrap().supersolvable);
    }

    #[test]
    fn filtration_satisfies_definition() {
        let a = realize(&gen::complete_signed(1..=3));
        let lat = intersection_lattice(&a).unwrap();
        let chain = is_supersolvable_lattice(&a).unwrap().filtration.unwrap();
        for (i, level) in chain.iter().enumerate() {
            assert_eq!(lat.rank_of(level), i + 1);
            if i == 0 {
                continue;
            }
            let lower = &chain[i - 1];
            let new: Vec<usize> = level.iter().copied().filter(|h| !lower.contains(h)).collect();
            for &p in &new {
                for &q in &new {
                    if p < q {
                        let meet = lat.closure(super::super::lattice::mask_of([p, q]));
                        assert!(lower.iter().any(|h| meet.hyperplanes.contains(h)));
                    }
                }
            }
        }
    }
}
