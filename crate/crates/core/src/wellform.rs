//! gcd bookkeeping for weighted blow-ups, the well-forming substitution
//! `x_i -> x_i^(1/q_i)`, and the linear-cone simplification of `E`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, VarList};
use crate::weights::{gcd_all, WeightAssignment};

/// `q_i = gcd(p_1, ..., p̂_i, ..., p_n)` for every `i`, and their product.
pub fn gcd_profile(p: &[u64]) -> (Vec<u64>, u64) {
    let q: Vec<u64> = (0..p.len())
        .map(|i| gcd_all(p.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v)))
        .collect();
    let product = q.iter().product();
    (q, product)
}

/// Unordered index pair `{i, j}` (stored with `i < j`) whose `q_ij` does not
/// divide `d̃`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FailingPair {
    pub i: usize,
    pub j: usize,
    pub q: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WellFormProfile {
    pub n: usize,
    /// Accumulated root orders of the substitution, one per variable.
    pub q: Vec<u64>,
    pub q_product: u64,
    pub p_tilde: Vec<u64>,
    pub d_tilde: u64,
    /// `q_ij` on the transformed weights; the diagonal is unused and set to 0.
    pub q_pair: Vec<Vec<u64>>,
    pub failing_pairs: Vec<FailingPair>,
    /// Number of substitution passes applied (0 when every `q_i` was 1).
    pub iterations: usize,
}

impl WellFormProfile {
    /// Profile of a bare weight vector and degree, without a polynomial.
    /// Requires `q_i | d` for each pass.
    pub fn from_weights(w: &WeightAssignment) -> Result<Self> {
        let mut p = w.p.clone();
        let mut d = w.d;
        let mut q_total = vec![1u64; p.len()];
        let mut iterations = 0;
        loop {
            let (q, product) = gcd_profile(&p);
            if product == 1 {
                break;
            }
            if d % product != 0 {
                return Err(Error::InvalidWeights(format!(
                    "product of q_i = {product} does not divide the degree {d}"
                )));
            }
            p = shrink_weights(&p, &q, product);
            d /= product;
            for (acc, qi) in q_total.iter_mut().zip(&q) {
                *acc *= qi;
            }
            iterations += 1;
        }
        Ok(Self::assemble(q_total, p, d, iterations))
    }

    fn assemble(q: Vec<u64>, p_tilde: Vec<u64>, d_tilde: u64, iterations: usize) -> Self {
        let n = p_tilde.len();
        let mut q_pair = vec![vec![0u64; n]; n];
        let mut failing_pairs = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                // With two variables the pair locus is empty; treat it as harmless.
                let qij = if n > 2 {
                    gcd_all(
                        p_tilde
                            .iter()
                            .enumerate()
                            .filter(|&(k, _)| k != i && k != j)
                            .map(|(_, &v)| v),
                    )
                } else {
                    1
                };
                q_pair[i][j] = qij;
                q_pair[j][i] = qij;
                if d_tilde % qij != 0 {
                    failing_pairs.push(FailingPair { i, j, q: qij });
                }
            }
        }
        let q_product = q.iter().product();
        Self {
            n,
            q,
            q_product,
            p_tilde,
            d_tilde,
            q_pair,
            failing_pairs,
            iterations,
        }
    }

    /// `I_i = { j != i : q_ij does not divide d̃ }`.
    pub fn incident(&self, i: usize) -> BTreeSet<usize> {
        self.failing_pairs
            .iter()
            .filter_map(|fp| {
                if fp.i == i {
                    Some(fp.j)
                } else if fp.j == i {
                    Some(fp.i)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn is_failing(&self, i: usize, j: usize) -> bool {
        let (i, j) = (i.min(j), i.max(j));
        self.failing_pairs.iter().any(|fp| fp.i == i && fp.j == j)
    }

    /// Every failing pair has `min(q_i, q_j) = 1`; holds for normal inputs.
    pub fn remark_violation(&self) -> Option<FailingPair> {
        self.failing_pairs
            .iter()
            .copied()
            .find(|fp| self.q[fp.i] > 1 && self.q[fp.j] > 1)
    }
}

fn shrink_weights(p: &[u64], q: &[u64], product: u64) -> Vec<u64> {
    p.iter()
        .zip(q)
        .map(|(&pi, &qi)| {
            let scaled = pi * qi;
            debug_assert_eq!(scaled % product, 0);
            scaled / product
        })
        .collect()
}

/// Applies `x_i -> x_i^(1/q_i)` until every `q_i` of the current weights is 1.
///
/// Each `q_i > 1` must divide the exponent of `x_i` in every monomial;
/// otherwise the hypersurface is not normal and the offending monomial is
/// reported.
pub fn well_form(poly: &Polynomial, w: &WeightAssignment) -> Result<(Polynomial, WellFormProfile)> {
    if w.p.len() != poly.nvars() {
        return Err(Error::InvalidWeights(format!(
            "{} weights for {} variables",
            w.p.len(),
            poly.nvars()
        )));
    }
    crate::weights::quasi_degree(poly, &w.p)?;
    let vars = poly.vars().clone();
    let mut g = poly.clone();
    let mut p = w.p.clone();
    let mut d = w.d;
    let mut q_total = vec![1u64; p.len()];
    let mut iterations = 0;
    loop {
        let (q, product) = gcd_profile(&p);
        if product == 1 {
            break;
        }
        check_exponents(&g, &q, &vars)?;
        debug_assert_eq!(d % product, 0);
        g = g.map_support(|m| {
            Monomial::new(m.exponents().iter().zip(&q).map(|(&e, &qi)| e / qi as u32).collect())
        })?;
        p = shrink_weights(&p, &q, product);
        d /= product;
        for (acc, qi) in q_total.iter_mut().zip(&q) {
            *acc *= qi;
        }
        iterations += 1;
    }
    Ok((g, WellFormProfile::assemble(q_total, p, d, iterations)))
}

fn check_exponents(g: &Polynomial, q: &[u64], vars: &VarList) -> Result<()> {
    for m in g.support() {
        for (i, (&e, &qi)) in m.exponents().iter().zip(q).enumerate() {
            if qi > 1 && u64::from(e) % qi != 0 {
                return Err(Error::NonNormalInput {
                    variable: vars.name(i).to_string(),
                    q: qi,
                    witness: m.display(vars, ""),
                });
            }
        }
    }
    Ok(())
}

pub fn is_well_formed(prof: &WellFormProfile) -> bool {
    prof.failing_pairs.is_empty()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeReduction {
    /// Index of the eliminated variable.
    pub k: usize,
    /// `p̃_m / s_m` for `m != k`, in variable order.
    pub weights: Vec<u64>,
    /// Other indices that would also qualify; empty unless ambiguous.
    pub also_linear: Vec<usize>,
}

/// If `E` is a linear cone (`d̃ = p̃_k` with `x_k` a term of `g̃`), the
/// simplified ambient weights `p̃_m / s_m`, where `s_m` is the product of
/// `q_ij` over failing pairs avoiding `m`.
pub fn linear_cone_reduce(
    g_tilde: &Polynomial,
    prof: &WellFormProfile,
) -> Result<Option<ConeReduction>> {
    let candidates: Vec<usize> = (0..prof.n)
        .filter(|&k| prof.p_tilde[k] == prof.d_tilde && g_tilde.has_linear_term(k))
        .collect();
    let Some((&k, rest)) = candidates.split_first() else {
        return Ok(None);
    };
    let mut weights = Vec::with_capacity(prof.n - 1);
    for m in (0..prof.n).filter(|&m| m != k) {
        let s: u64 = prof
            .failing_pairs
            .iter()
            .filter(|fp| fp.i != m && fp.j != m)
            .map(|fp| fp.q)
            .product();
        let w = prof.p_tilde[m];
        if w % s != 0 {
            return Err(Error::InexactConeDivision {
                variable: g_tilde.vars().name(m).to_string(),
                weight: w,
                divisor: s,
            });
        }
        weights.push(w / s);
    }
    Ok(Some(ConeReduction {
        k,
        weights,
        also_linear: rest.to_vec(),
    }))
}
