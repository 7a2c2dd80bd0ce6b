use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::IntPoly;
use crate::error::GraphError;
use crate::graph::{Dense, SignedGraph, Vertex};

/// Number of proper colorings `γ: V → {0, ±1, …, ±k}`.
///
/// Colorings are enumerated up to the signed permutations of `{±1, …, ±k}`,
/// which preserve properness: a vertex either takes `0`, reuses a colour
/// class already in play (with either sign), or opens the next class with
/// sign `+`. A pattern with `m` classes stands for `2^m · k(k−1)⋯(k−m+1)`
/// colorings. Components are counted independently and multiplied.
pub fn count_proper_colorings(g: &SignedGraph, k: u32) -> BigInt {
    let mut total = BigInt::one();
    for comp in g.balanced_components() {
        let w: BTreeSet<Vertex> = comp.vertices.iter().copied().collect();
        let sub = g.induced_subgraph(&w).expect("component vertices belong to the graph");
        let patterns = pattern_counts(&sub.dense(), k as usize);
        let mut count = BigInt::zero();
        let mut weight = BigInt::one();
        for (m, &c) in patterns.iter().enumerate() {
            if m > 0 {
                weight *= 2 * (k as usize - (m - 1));
            }
            count += &weight * c;
        }
        total *= count;
        if total.is_zero() {
            break;
        }
    }
    total
}

/// `counts[m]` = number of colouring patterns with exactly `m` classes.
fn pattern_counts(d: &Dense, max_classes: usize) -> Vec<u64> {
    let n = d.len();
    let order = bfs_order(d);
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    // Earlier neighbours of each vertex in the search order, by sign.
    let earlier = |mask: u64, i: usize| -> Vec<usize> {
        (0..n).filter(|&u| mask >> u & 1 == 1 && position[u] < i).map(|u| position[u]).collect()
    };
    let pos_back: Vec<Vec<usize>> = order.iter().enumerate().map(|(i, &v)| earlier(d.pos[v], i)).collect();
    let neg_back: Vec<Vec<usize>> = order.iter().enumerate().map(|(i, &v)| earlier(d.neg[v], i)).collect();
    let looped: Vec<bool> = order.iter().map(|&v| d.loops >> v & 1 == 1).collect();

    let mut counts = vec![0u64; n.min(max_classes) + 1];
    let mut colour = vec![0i32; n];
    struct Ctx<'a> {
        pos_back: &'a [Vec<usize>],
        neg_back: &'a [Vec<usize>],
        looped: &'a [bool],
        max_classes: usize,
    }
    fn go(ctx: &Ctx, i: usize, used: usize, colour: &mut [i32], counts: &mut [u64]) {
        if i == colour.len() {
            counts[used] += 1;
            return;
        }
        let ok = |c: i32, colour: &[i32]| {
            !(c == 0 && ctx.looped[i])
                && ctx.pos_back[i].iter().all(|&u| colour[u] != c)
                && ctx.neg_back[i].iter().all(|&u| colour[u] != -c)
        };
        let fresh = used < ctx.max_classes;
        let candidates = (-(used as i32)..=used as i32).chain(fresh.then_some(used as i32 + 1));
        for c in candidates {
            if ok(c, colour) {
                colour[i] = c;
                let next = if c > used as i32 { used + 1 } else { used };
                go(ctx, i + 1, next, colour, counts);
            }
        }
    }
    let ctx = Ctx { pos_back: &pos_back, neg_back: &neg_back, looped: &looped, max_classes };
    go(&ctx, 0, 0, &mut colour, &mut counts);
    counts
}

fn bfs_order(d: &Dense) -> Vec<usize> {
    let n = d.len();
    let mut seen = 0u64;
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen >> root & 1 == 1 {
            continue;
        }
        seen |= 1 << root;
        let start = order.len();
        order.push(root);
        let mut head = start;
        while head < order.len() {
            let u = order[head];
            head += 1;
            let mut next = (d.pos[u] | d.neg[u]) & !seen;
            while next != 0 {
                let x = next.trailing_zeros() as usize;
                next &= next - 1;
                seen |= 1 << x;
                order.push(x);
            }
        }
    }
    order
}

/// `χ(G, t)`: the degree-`|V|` polynomial with `χ(G, 2k+1)` equal to the number
/// of proper `k`-colourings, recovered by exact interpolation at
/// `t = 3, 5, …, 2|V| + 3`.
///
/// Panics if interpolation produces a non-integral coefficient, which would
/// mean the counts are not polynomial.
pub fn chromatic_polynomial(g: &SignedGraph) -> IntPoly {
    let n = g.vertex_count();
    let points: Vec<(BigInt, BigInt)> =
        (1..=n as u32 + 1).map(|k| (BigInt::from(2 * k + 1), count_proper_colorings(g, k))).collect();
    interpolate(&points)
}

/// Newton interpolation over the rationals, expanded to integer coefficients.
fn interpolate(points: &[(BigInt, BigInt)]) -> IntPoly {
    let m = points.len();
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from_integer(y.clone())).collect();
    for level in 1..m {
        for i in (level..m).rev() {
            table[i] = (&table[i] - &table[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Horner on the Newton form: p = c₀ + (t − x₀)(c₁ + (t − x₁)(c₂ + …)).
    let mut coeffs: Vec<BigRational> = vec![table[m - 1].clone()];
    for i in (0..m - 1).rev() {
        let mut next = vec![BigRational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &xs[i];
        }
        next[0] += &table[i];
        coeffs = next;
    }
    let ints = coeffs
        .into_iter()
        .map(|c| {
            assert!(c.is_integer(), "interpolated chromatic coefficient {c} is not an integer");
            c.to_integer()
        })
        .collect();
    IntPoly::new(ints)
}

/// Checks `χ(G)·χ(B_n) = χ(G₁)·χ(G₂)` for `G = G₁ ∪ G₂` glued along `shared`,
/// which must induce the complete signed graph with all loops in both parts.
pub fn gluing_check(g1: &SignedGraph, g2: &SignedGraph, shared: &BTreeSet<Vertex>) -> Result<bool, GraphError> {
    let overlap: BTreeSet<Vertex> = g1.vertex_set().intersection(g2.vertex_set()).copied().collect();
    if overlap != *shared {
        return Err(GraphError::Precondition("graphs must overlap exactly on the shared set".into()));
    }
    let bn = crate::gen::complete_signed(shared.iter().copied());
    if g1.induced_subgraph(shared)? != bn || g2.induced_subgraph(shared)? != bn {
        return Err(GraphError::Precondition("shared set must induce the complete signed graph with loops".into()));
    }
    let g = g1.union(g2)?;
    let lhs = &chromatic_polynomial(&g) * &chromatic_polynomial(&bn);
    let rhs = &chromatic_polynomial(g1) * &chromatic_polynomial(g2);
    Ok(lhs == rhs)
}
