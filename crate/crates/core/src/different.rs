//! Boundary divisors on the exceptional surface `E`.
//!
//! Strata are formal: `C_i'` is the coordinate curve `{x_i = 0}` with the
//! divisorial pair curves removed, `C_ij = {x_i = x_j = 0}` is only present
//! for failing pairs. Nothing here decomposes a stratum into irreducible
//! components.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::VarList;
use crate::wellform::WellFormProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StratumId {
    CoordPrime(usize),
    /// Always stored with the smaller index first.
    CoordPair(usize, usize),
}

const CURVE_LETTERS: [&str; 4] = ["Γ", "Δ", "Υ", "Ω"];
const CURVE_ASCII: [&str; 4] = ["G", "D", "U", "O"];

impl StratumId {
    pub fn pair(i: usize, j: usize) -> Self {
        StratumId::CoordPair(i.min(j), i.max(j))
    }

    /// Machine name: `C1p` for `C_1'`, `C13` for `C_13` (1-based).
    pub fn canonical_name(&self) -> String {
        match *self {
            StratumId::CoordPrime(i) => format!("C{}p", i + 1),
            StratumId::CoordPair(i, j) => format!("C{}{}", i + 1, j + 1),
        }
    }

    /// Notation used in the tables for `t, z, x, y`: `Γ`, `Δ₃`, ...
    /// Falls back to `C_1'` / `C_13` for other variable lists.
    pub fn display_name(&self, vars: &VarList) -> String {
        if vars.is_tzxy() {
            match *self {
                StratumId::CoordPrime(i) => CURVE_LETTERS[i].to_string(),
                StratumId::CoordPair(i, j) => format!("{}{}", CURVE_LETTERS[i], j + 1),
            }
        } else {
            match *self {
                StratumId::CoordPrime(i) => format!("C{}'", i + 1),
                StratumId::CoordPair(i, j) => format!("C{}{}", i + 1, j + 1),
            }
        }
    }

    /// Resolves `G`, `Γ`, `D3`, `Δ₃`, `C2p`, `C2'`, `C13`, ... for `n` variables.
    pub fn from_name(name: &str, n: usize) -> Option<Self> {
        let name = name.trim();
        let normalized: String = name
            .chars()
            .map(|c| match c {
                '₁' => '1',
                '₂' => '2',
                '₃' => '3',
                '₄' => '4',
                '′' => '\'',
                _ => c,
            })
            .collect();
        let id = if let Some(rest) = normalized.strip_prefix('C') {
            let digits: Vec<usize> = rest
                .trim_end_matches(['p', '\''])
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()?;
            let primed = rest.ends_with('p') || rest.ends_with('\'');
            match (primed, digits.as_slice()) {
                (true, [i]) if *i >= 1 => StratumId::CoordPrime(i - 1),
                (false, [i, j]) if *i >= 1 && *j >= 1 && i < j => {
                    StratumId::CoordPair(i - 1, j - 1)
                }
                _ => return None,
            }
        } else {
            if n != 4 {
                return None;
            }
            let mut chars = normalized.chars();
            let head = chars.next()?.to_string();
            let tail: String = chars.collect();
            let i = CURVE_LETTERS
                .iter()
                .position(|&l| l == head)
                .or_else(|| CURVE_ASCII.iter().position(|&l| l == head))?;
            if tail.is_empty() {
                StratumId::CoordPrime(i)
            } else {
                let j: usize = tail.parse().ok()?;
                if j <= i + 1 || j > 4 {
                    return None;
                }
                StratumId::CoordPair(i, j - 1)
            }
        };
        let in_range = match id {
            StratumId::CoordPrime(i) => i < n,
            StratumId::CoordPair(_, j) => j < n,
        };
        in_range.then_some(id)
    }
}

/// Finite formal sum of strata with exact rational coefficients.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct BoundaryDivisor {
    coeffs: BTreeMap<StratumId, BigRational>,
}

impl BoundaryDivisor {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `c` to the coefficient of `s`; zero results are dropped.
    pub fn add(&mut self, s: StratumId, c: BigRational) {
        let entry = self.coeffs.entry(s).or_insert_with(BigRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&s);
        }
    }

    pub fn get(&self, s: &StratumId) -> BigRational {
        self.coeffs.get(s).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&StratumId, &BigRational)> {
        self.coeffs.iter()
    }

    /// `1/2 Δ + 4/5 Ω + 3/4 Γ2`, or `0`.
    pub fn display(&self, vars: &VarList) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|(s, c)| format!("{} {}", format_rational(c), s.display_name(vars)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

impl FromIterator<(StratumId, BigRational)> for BoundaryDivisor {
    fn from_iter<I: IntoIterator<Item = (StratumId, BigRational)>>(iter: I) -> Self {
        let mut d = BoundaryDivisor::new();
        for (s, c) in iter {
            d.add(s, c);
        }
        d
    }
}

/// `num/den` in lowest terms, always with an explicit denominator.
pub fn format_rational(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Boundary `sum c_i {x_i = 0}` on the ambient weighted projective space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StdBoundary {
    c: Vec<BigRational>,
}

impl StdBoundary {
    pub fn new(c: Vec<BigRational>) -> Result<Self> {
        for (i, ci) in c.iter().enumerate() {
            if ci.is_negative() || *ci > BigRational::one() {
                return Err(Error::InvalidBoundary(format!(
                    "coefficient {} at index {i} is outside [0, 1]",
                    format_rational(ci)
                )));
            }
        }
        Ok(Self { c })
    }

    pub fn zero(n: usize) -> Self {
        Self {
            c: vec![BigRational::zero(); n],
        }
    }

    /// Reads `z=3/5,y=4/5`; unnamed variables get 0.
    pub fn parse(spec: &str, vars: &VarList) -> Result<Self> {
        let mut c = vec![BigRational::zero(); vars.len()];
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::InvalidBoundary(format!("`{item}` is not var=value")))?;
            let i = vars
                .index_of(name.trim())
                .ok_or_else(|| Error::InvalidBoundary(format!("unknown variable `{name}`")))?;
            c[i] = parse_rational(value)
                .ok_or_else(|| Error::InvalidBoundary(format!("`{value}` is not a rational")))?;
        }
        Self::new(c)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    fn check_against(&self, prof: &WellFormProfile) -> Result<()> {
        if self.c.len() != prof.n {
            return Err(Error::InvalidBoundary(format!(
                "{} coefficients for {} variables",
                self.c.len(),
                prof.n
            )));
        }
        for fp in &prof.failing_pairs {
            if &self.c[fp.i] + &self.c[fp.j] > BigRational::one() {
                return Err(Error::InvalidBoundary(format!(
                    "c_{} + c_{} exceeds 1 on a failing pair",
                    fp.i + 1,
                    fp.j + 1
                )));
            }
        }
        Ok(())
    }
}

fn ratio(n: u64, d: u64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn one_minus_inv(q: u64) -> BigRational {
    BigRational::one() - ratio(1, q)
}

/// `Diff_E(B)` for the standard boundary `B`: coefficient
/// `1 - (1 - c_i)/q_i` on `C_i'` and `1 - (1 - c_i - c_j)/(q_ij q_i q_j)` on
/// each divisorial `C_ij`.
pub fn diff_on_e(prof: &WellFormProfile, b: &StdBoundary) -> Result<BoundaryDivisor> {
    if let Some(fp) = prof.remark_violation() {
        return Err(Error::RemarkViolation {
            i: (fp.i + 1).to_string(),
            j: (fp.j + 1).to_string(),
            qi: prof.q[fp.i],
            qj: prof.q[fp.j],
        });
    }
    b.check_against(prof)?;
    let one = BigRational::one();
    let mut out = BoundaryDivisor::new();
    for i in 0..prof.n {
        let c = &one - (&one - &b.c[i]) / BigRational::from_integer(prof.q[i].into());
        out.add(StratumId::CoordPrime(i), c);
    }
    for fp in &prof.failing_pairs {
        let m = fp.q * prof.q[fp.i] * prof.q[fp.j];
        let c = &one - (&one - &b.c[fp.i] - &b.c[fp.j]) / BigRational::from_integer(m.into());
        out.add(StratumId::pair(fp.i, fp.j), c);
    }
    Ok(out)
}

/// `Diff_{E/P(p)}(B)`: coefficient `c_i` on `C_i'` and
/// `1 - (1 - c_i - c_j)/q_ij` on each divisorial `C_ij`.
pub fn diff_over_wps(prof: &WellFormProfile, b: &StdBoundary) -> Result<BoundaryDivisor> {
    b.check_against(prof)?;
    let one = BigRational::one();
    let mut out = BoundaryDivisor::new();
    for i in 0..prof.n {
        out.add(StratumId::CoordPrime(i), b.c[i].clone());
    }
    for fp in &prof.failing_pairs {
        let c = &one - (&one - &b.c[fp.i] - &b.c[fp.j]) / BigRational::from_integer(fp.q.into());
        out.add(StratumId::pair(fp.i, fp.j), c);
    }
    Ok(out)
}

/// `D̂ = sum (1 - 1/q_i) {x_i = 0}`.
pub fn build_dhat(prof: &WellFormProfile) -> StdBoundary {
    StdBoundary {
        c: prof.q.iter().map(|&q| one_minus_inv(q)).collect(),
    }
}

/// `D = sum (1 - 1/q_i) C_i`, with `C_i` spread over its strata: `C_i'`
/// keeps `1 - 1/q_i` and each divisorial `C_ij` collects both summands.
pub fn build_d(prof: &WellFormProfile) -> BoundaryDivisor {
    let mut out = BoundaryDivisor::new();
    for i in 0..prof.n {
        out.add(StratumId::CoordPrime(i), one_minus_inv(prof.q[i]));
    }
    for fp in &prof.failing_pairs {
        out.add(
            StratumId::pair(fp.i, fp.j),
            one_minus_inv(prof.q[fp.i]) + one_minus_inv(prof.q[fp.j]),
        );
    }
    out
}

/// `K_E + Diff_E(0) = (K_P + E + D̂)|_E`, compared coefficient by coefficient.
pub fn check_adjunction(prof: &WellFormProfile) -> Result<bool> {
    let lhs = diff_on_e(prof, &StdBoundary::zero(prof.n))?;
    let rhs = diff_over_wps(prof, &build_dhat(prof))?;
    Ok(lhs == rhs)
}

/// Printed with every hint: the criterion is only sufficient.
pub const EXCEPTIONAL_HINT_CAVEAT: &str = "sufficient condition only; assumes (X,H) is not lc for any hyperplane section H, which is not verified";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExceptionalHint {
    pub var: usize,
    pub coefficient: BigRational,
    pub threshold: BigRational,
}

/// Threshold on a `D` coefficient for the exceptionality criterion:
/// `6/7` for threefolds, `2/3` for surfaces.
pub fn hint_threshold(dim: usize) -> Option<BigRational> {
    match dim {
        2 => Some(ratio(2, 3)),
        3 => Some(ratio(6, 7)),
        _ => None,
    }
}

/// First `k` whose `D` coefficient `1 - 1/q_k` reaches the threshold.
pub fn exceptional_hint(prof: &WellFormProfile, dim: usize) -> Option<ExceptionalHint> {
    let threshold = hint_threshold(dim)?;
    (0..prof.n).find_map(|k| {
        let coefficient = one_minus_inv(prof.q[k]);
        (coefficient >= threshold).then(|| ExceptionalHint {
            var: k,
            coefficient,
            threshold: threshold.clone(),
        })
    })
}

impl fmt::Display for StratumId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_name())
    }
}
