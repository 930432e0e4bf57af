//! Quasihomogeneous weights: inference, degree, discrepancy.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::parser::render_compact;
use crate::poly::{Monomial, Polynomial};

/// Primitive positive weight vector `p` together with the weighted degree `d`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightAssignment {
    pub p: Vec<u64>,
    pub d: u64,
}

impl WeightAssignment {
    /// Checks positivity and primitivity; does not look at any polynomial.
    pub fn new(p: Vec<u64>, d: u64) -> Result<Self> {
        if p.is_empty() || p.contains(&0) {
            return Err(Error::InvalidWeights(format!("{p:?} is not strictly positive")));
        }
        if d == 0 {
            return Err(Error::InvalidWeights("degree must be positive".into()));
        }
        let g = gcd_all(p.iter().copied());
        if g != 1 {
            return Err(Error::InvalidWeights(format!("{p:?} has common factor {g}")));
        }
        Ok(Self { p, d })
    }

    /// Weights for `poly` given explicitly; the degree is computed.
    pub fn for_polynomial(poly: &Polynomial, p: Vec<u64>) -> Result<Self> {
        if p.len() != poly.nvars() {
            return Err(Error::InvalidWeights(format!(
                "{} weights for {} variables",
                p.len(),
                poly.nvars()
            )));
        }
        let d = quasi_degree(poly, &p)?;
        Self::new(p, d)
    }

    pub fn n(&self) -> usize {
        self.p.len()
    }
}

impl fmt::Display for WeightAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.p.iter().map(u64::to_string).collect();
        write!(f, "p=({}), d={}", p.join(","), self.d)
    }
}

pub fn gcd_all(values: impl IntoIterator<Item = u64>) -> u64 {
    values.into_iter().fold(0, |acc, v| acc.gcd(&v))
}

/// Common weighted degree of every monomial, or the first disagreement.
pub fn quasi_degree(poly: &Polynomial, p: &[u64]) -> Result<u64> {
    if p.len() != poly.nvars() || p.contains(&0) {
        return Err(Error::InvalidWeights(format!(
            "need {} positive weights, got {p:?}",
            poly.nvars()
        )));
    }
    let mut support = poly.support();
    let first = support.next().expect("normalized polynomial is nonempty");
    let d = first.weighted_degree(p);
    for m in support {
        let dm = m.weighted_degree(p);
        if dm != d {
            let vars = poly.vars();
            return Err(Error::NotQuasihomogeneous {
                first: first.display(vars, ""),
                first_degree: d,
                second: m.display(vars, ""),
                second_degree: dm,
            });
        }
    }
    Ok(d)
}

/// Solves `sum_i p_i m_i = d` over the support for the unique primitive
/// positive `(p, d)`.
///
/// The solution set is the rational kernel of the matrix with rows
/// `(m_1, ..., m_n, -1)`. A one-dimensional kernel spanned by a strictly
/// positive vector gives the answer; a larger kernel is reported with its
/// basis instead of picking a representative.
pub fn infer_weights(poly: &Polynomial) -> Result<WeightAssignment> {
    let n = poly.nvars();
    let rows: Vec<Vec<BigRational>> = poly
        .support()
        .map(|m| {
            m.exponents()
                .iter()
                .map(|&e| BigRational::from_integer(e.into()))
                .chain(std::iter::once(-BigRational::one()))
                .collect()
        })
        .collect();
    let basis = kernel(rows, n + 1);
    match basis.len() {
        0 => Err(Error::NoPositiveSolution(format!(
            "only the zero vector solves the degree equations of {}",
            render_compact(poly)
        ))),
        1 => {
            let v = primitive_integer(&basis[0]);
            let v = if v.iter().any(|x| x.is_negative()) {
                v.into_iter().map(|x| -x).collect()
            } else {
                v
            };
            if !v.iter().all(|x| x.is_positive()) {
                return Err(Error::NoPositiveSolution(format!(
                    "solution ray ({}) is not strictly positive",
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                )));
            }
            let as_u64 = |x: &BigInt| {
                x.to_u64()
                    .ok_or_else(|| Error::InvalidWeights(format!("weight {x} overflows u64")))
            };
            let p = v[..n].iter().map(as_u64).collect::<Result<Vec<_>>>()?;
            let d = as_u64(&v[n])?;
            WeightAssignment::new(p, d)
        }
        _ => Err(Error::NonUniqueWeights {
            basis: basis
                .iter()
                .map(|v| v.iter().map(|x| x.to_string()).collect())
                .collect(),
        }),
    }
}

/// Kernel basis of a rational matrix by reduced row echelon form.
fn kernel(mut rows: Vec<Vec<BigRational>>, cols: usize) -> Vec<Vec<BigRational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pr);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c].clone();
                for k in 0..cols {
                    let delta = &factor * &rows[r][k];
                    rows[i][k] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][f].clone();
            }
            v
        })
        .collect()
}

fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DiscrepancyTag {
    /// `a >= 0`
    CanonicalCompatible,
    /// `a = -1`, i.e. `sum p_i = d`
    StrictlyLcCandidate,
    Neither,
}

impl DiscrepancyTag {
    pub fn as_str(self) -> &'static str {
        match self {
            DiscrepancyTag::CanonicalCompatible => "canonical-compatible",
            DiscrepancyTag::StrictlyLcCandidate => "strictly-lc-candidate",
            DiscrepancyTag::Neither => "neither",
        }
    }
}

/// `a = sum p_i - d - 1`, the discrepancy of the exceptional divisor of the
/// weighted blow-up.
pub fn discrepancy(w: &WeightAssignment) -> (i64, DiscrepancyTag) {
    let sum: i128 = w.p.iter().map(|&x| i128::from(x)).sum();
    let a = (sum - i128::from(w.d) - 1) as i64;
    let tag = match a {
        a if a >= 0 => DiscrepancyTag::CanonicalCompatible,
        -1 => DiscrepancyTag::StrictlyLcCandidate,
        _ => DiscrepancyTag::Neither,
    };
    (a, tag)
}

/// `true` iff every monomial in `support` has weighted degree `d`.
pub fn is_quasihomogeneous<'a>(
    support: impl IntoIterator<Item = &'a Monomial>,
    p: &[u64],
    d: u64,
) -> bool {
    support.into_iter().all(|m| m.weighted_degree(p) == d)
}
