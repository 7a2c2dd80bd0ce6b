use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

/// Sparse multivariate polynomial with integer coefficients; keys are
/// exponent vectors of fixed length.
///
/// Serializes terms as a list of `[exponents, coefficient]` pairs.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct MultiPoly {
    pub vars: usize,
    #[serde(with = "term_list")]
    pub terms: BTreeMap<Vec<u32>, BigInt>,
}

mod term_list {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::poly::coefficient::{Coefficient, RawCoefficient};

    pub fn serialize<S: Serializer>(terms: &BTreeMap<Vec<u32>, BigInt>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(terms.iter().map(|(e, c)| (e, Coefficient(c))))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BTreeMap<Vec<u32>, BigInt>, D::Error> {
        Vec::<(Vec<u32>, RawCoefficient)>::deserialize(d)?.into_iter().map(|(e, c)| Ok((e, c.into_bigint()?))).collect()
    }
}

impl MultiPoly {
    pub fn zero(vars: usize) -> Self {
        MultiPoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: i64) -> Self {
        let mut p = MultiPoly::zero(vars);
        if c != 0 {
            p.terms.insert(vec![0; vars], BigInt::from(c));
        }
        p
    }

    /// `Σ aᵢ xᵢ`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let vars = coeffs.len();
        let mut p = MultiPoly::zero(vars);
        for (i, &a) in coeffs.iter().enumerate() {
            if a != 0 {
                let mut e = vec![0; vars];
                e[i] = 1;
                p.terms.insert(e, BigInt::from(a));
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: BigInt) {
        let entry = self.terms.entry(exps).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut terms: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        MultiPoly { vars: self.vars, terms }
    }

    pub fn scale(&self, c: &BigInt) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.vars);
        }
        MultiPoly { vars: self.vars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    /// `c` with `self = c · other`, if such an integer exists.
    pub fn scalar_multiple_of(&self, other: &MultiPoly) -> Option<BigInt> {
        if other.is_zero() {
            return self.is_zero().then(BigInt::zero);
        }
        let (e, c0) = other.terms.iter().next()?;
        let s = self.terms.get(e)?;
        if !(s % c0).is_zero() {
            return None;
        }
        let c = s / c0;
        (other.scale(&c) == *self).then_some(c)
    }

    /// Determinant by Leibniz expansion.
    pub fn determinant(m: &[Vec<MultiPoly>], vars: usize) -> MultiPoly {
        let n = m.len();
        if n == 0 {
            return MultiPoly::constant(vars, 1);
        }
        let mut perm: Vec<usize> = (0..n).collect();
        let mut total = MultiPoly::zero(vars);
        permute(&mut perm, 0, &mut |p| {
            let sign = permutation_sign(p);
            let mut term = MultiPoly::constant(vars, sign);
            for (row, &col) in p.iter().enumerate() {
                if term.is_zero() {
                    return;
                }
                term = term.mul(&m[row][col]);
            }
            total = total.add(&term);
        });
        total
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&vec![0; self.vars]).is_some_and(One::is_one)
    }
}

fn permute(p: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == p.len() {
        f(p);
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, f);
        p.swap(k, i);
    }
}

fn permutation_sign(p: &[usize]) -> i64 {
    let mut inversions = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}
