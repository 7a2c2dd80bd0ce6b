use std::collections::BTreeSet;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::OracleError;
use crate::graph::{Edge, SignedGraph, Vertex};

/// A central hyperplane `{x : normal · x = 0}` with the graph elements it came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Hyperplane {
    pub normal: Vec<i64>,
    pub sources: Vec<Edge>,
}

/// Central arrangement in `Q^ℓ`, coordinates labelled by vertices.
///
/// Normals are primitive, with first non-zero entry positive, and pairwise
/// distinct (hence pairwise non-proportional).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrangement {
    pub coordinates: Vec<Vertex>,
    pub hyperplanes: Vec<Hyperplane>,
}

/// Divides by the content and makes the first non-zero entry positive.
pub(crate) fn primitive(mut v: Vec<i64>) -> Vec<i64> {
    let g = v.iter().fold(0i64, |acc, &x| acc.gcd(&x));
    if g == 0 {
        return v;
    }
    let g = if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) { -g } else { g };
    for x in v.iter_mut() {
        *x /= g;
    }
    v
}

impl Arrangement {
    /// Builds an arrangement, normalizing normals and merging duplicates.
    /// Zero normals are dropped.
    pub fn new(coordinates: Vec<Vertex>, hyperplanes: Vec<Hyperplane>) -> Self {
        let mut out: Vec<Hyperplane> = Vec::with_capacity(hyperplanes.len());
        for h in hyperplanes {
            assert_eq!(h.normal.len(), coordinates.len(), "normal length must match the dimension");
            let normal = primitive(h.normal);
            if normal.iter().all(|&x| x == 0) {
                continue;
            }
            match out.iter_mut().find(|o| o.normal == normal) {
                Some(o) => o.sources.extend(h.sources),
                None => out.push(Hyperplane { normal, sources: h.sources }),
            }
        }
        Arrangement { coordinates, hyperplanes: out }
    }

    pub fn empty(dimension: usize) -> Self {
        Arrangement { coordinates: (0..dimension as Vertex).collect(), hyperplanes: vec![] }
    }

    pub fn dimension(&self) -> usize {
        self.coordinates.len()
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn normals(&self) -> Vec<Vec<i64>> {
        self.hyperplanes.iter().map(|h| h.normal.clone()).collect()
    }

    /// The sub-arrangement on the given hyperplane indices, same ambient space.
    pub fn subarrangement(&self, indices: &[usize]) -> Arrangement {
        Arrangement {
            coordinates: self.coordinates.clone(),
            hyperplanes: indices.iter().map(|&i| self.hyperplanes[i].clone()).collect(),
        }
    }

    /// Equal coordinates and equal sets of normals.
    pub fn same_hyperplanes(&self, other: &Arrangement) -> bool {
        let a: BTreeSet<&Vec<i64>> = self.hyperplanes.iter().map(|h| &h.normal).collect();
        let b: BTreeSet<&Vec<i64>> = other.hyperplanes.iter().map(|h| &h.normal).collect();
        self.coordinates == other.coordinates && a == b
    }

    /// `A^H` for the hyperplane at index `h`, eliminating its first coordinate
    /// with a non-zero coefficient.
    pub fn restriction(&self, h: usize) -> Result<Arrangement, OracleError> {
        let normal = &self.hyperplanes.get(h).ok_or(OracleError::NoSuchHyperplane(h))?.normal;
        let pivot = normal.iter().position(|&x| x != 0).expect("normals are non-zero");
        self.restriction_eliminating(h, pivot)
    }

    /// `A^H`, expressed in the coordinates other than `pivot`.
    ///
    /// On `H` the pivot coordinate is a combination of the others; each
    /// remaining hyperplane `β` becomes `α_p β − β_p α` with the pivot entry
    /// dropped. Images of hyperplanes containing `H`'s complement vanish and
    /// are discarded; coinciding images are merged.
    pub fn restriction_eliminating(&self, h: usize, pivot: usize) -> Result<Arrangement, OracleError> {
        let alpha = &self.hyperplanes.get(h).ok_or(OracleError::NoSuchHyperplane(h))?.normal;
        let ap = *alpha.get(pivot).ok_or(OracleError::BadPivot(pivot))?;
        if ap == 0 {
            return Err(OracleError::BadPivot(pivot));
        }
        let mut coordinates = self.coordinates.clone();
        coordinates.remove(pivot);
        let images = self
            .hyperplanes
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != h)
            .map(|(_, b)| {
                let bp = b.normal[pivot];
                let normal =
                    (0..self.dimension()).filter(|&j| j != pivot).map(|j| ap * b.normal[j] - bp * alpha[j]).collect();
                Hyperplane { normal, sources: b.sources.clone() }
            })
            .collect();
        Ok(Arrangement::new(coordinates, images))
    }

    /// Defining polynomial coefficients are the normals; `Q = ∏ αᵢ·x`.
    pub(crate) fn defining_polynomial(&self) -> super::multipoly::MultiPoly {
        let l = self.dimension();
        self.hyperplanes.iter().fold(super::multipoly::MultiPoly::constant(l, 1), |acc, h| {
            acc.mul(&super::multipoly::MultiPoly::linear(&h.normal))
        })
    }
}

/// `A(G)`: `x_i − x_j` per positive edge, `x_i + x_j` per negative edge,
/// `x_i` per loop, with coordinates in vertex order.
pub fn realize(g: &SignedGraph) -> Arrangement {
    let coordinates: Vec<Vertex> = g.vertices().collect();
    let index = |v: Vertex| coordinates.binary_search(&v).expect("edge endpoints are vertices");
    let l = coordinates.len();
    let hyperplanes = g
        .edges()
        .into_iter()
        .map(|e| {
            let mut normal = vec![0i64; l];
            match e {
                Edge::Positive(u, v) => {
                    normal[index(u)] = 1;
                    normal[index(v)] = -1;
                }
                Edge::Negative(u, v) => {
                    normal[index(u)] = 1;
                    normal[index(v)] = 1;
                }
                Edge::Loop(v) => normal[index(v)] = 1,
            }
            Hyperplane { normal, sources: vec![e] }
        })
        .collect();
    Arrangement::new(coordinates, hyperplanes)
}
