//! Sparse multivariate polynomials with exact rational or generic-parameter
//! coefficients.
//!
//! Everything downstream of the parser only looks at the support of a
//! polynomial, so parameters are carried as opaque nonzero tags and never
//! take part in arithmetic.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Ordered, duplicate-free list of variable names. Position `i` in the list
/// is the index used for `q_i`, `C_i` and friends.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarList {
    names: Vec<String>,
}

impl VarList {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() < 2 {
            return Err(Error::InvalidVarList(format!(
                "need at least two variables, got {}",
                names.len()
            )));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_variable_name(name) {
                return Err(Error::InvalidVarList(format!("`{name}` is not a variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidVarList(format!("`{name}` listed twice")));
            }
        }
        Ok(Self { names })
    }

    /// The coordinates `t, z, x, y` used throughout the classification tables.
    pub fn tzxy() -> Self {
        Self {
            names: ["t", "z", "x", "y"].iter().map(|s| s.to_string()).collect(),
        }
    }

    /// `x1, ..., xn`.
    pub fn indexed(n: usize) -> Result<Self> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    /// Parses `t,z,x,y`, `x1..x4` or an explicit comma list.
    pub fn parse_spec(spec: &str) -> Result<Self> {
        let spec = spec.trim();
        if let Some((lo, hi)) = spec.split_once("..") {
            let lo = lo.trim();
            let hi = hi.trim();
            if lo == "x1" {
                if let Some(n) = hi.strip_prefix('x').and_then(|s| s.parse::<usize>().ok()) {
                    return Self::indexed(n);
                }
            }
            return Err(Error::InvalidVarList(format!("cannot read range `{spec}`")));
        }
        Self::new(spec.split(',').map(str::trim))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn is_tzxy(&self) -> bool {
        self.names == ["t", "z", "x", "y"]
    }
}

impl fmt::Display for VarList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.names.join(","))
    }
}

/// Variable identifiers accepted by the grammar: `t`, `z`, `x`, `y`, `x<digits>`.
pub fn is_variable_name(name: &str) -> bool {
    match name {
        "t" | "z" | "x" | "y" => true,
        _ => name
            .strip_prefix('x')
            .is_some_and(|d| !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit())),
    }
}

pub const PARAMETER_LETTERS: [char; 5] = ['a', 'b', 'c', 'd', 'e'];

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Coefficient {
    Rational(BigRational),
    /// Algebraically independent generic coefficient. `nonzero` records a
    /// genericity constraint such as `b != 0`.
    Param { name: char, nonzero: bool },
}

impl Coefficient {
    pub fn one() -> Self {
        Coefficient::Rational(BigRational::one())
    }

    pub fn integer(n: i64) -> Self {
        Coefficient::Rational(BigRational::from_integer(n.into()))
    }

    pub fn param(name: char) -> Self {
        Coefficient::Param { name, nonzero: false }
    }

    pub fn is_param(&self) -> bool {
        matches!(self, Coefficient::Param { .. })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn weighted_degree(&self, weights: &[u64]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| u64::from(e) * w)
            .sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn pow(&self, k: u32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    /// Renders with variable names, `1` for the constant monomial.
    pub fn display(&self, vars: &VarList, sep: &str) -> String {
        let parts: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| {
                if e == 1 {
                    vars.name(i).to_string()
                } else {
                    format!("{}^{}", vars.name(i), e)
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(sep)
        }
    }
}

impl Ord for Monomial {
    /// Graded order: lower total degree first, ties broken lexicographically
    /// with larger leading exponents first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A normalized polynomial: no duplicate monomials, no zero coefficients, at
/// least one term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VarList,
    terms: BTreeMap<Monomial, Coefficient>,
}

/// Merge like terms, drop zeros and sort. Parameter coefficients may not
/// share a monomial with any other term.
pub fn normalize(
    vars: &VarList,
    terms: impl IntoIterator<Item = (Monomial, Coefficient)>,
) -> Result<Polynomial> {
    let mut merged: BTreeMap<Monomial, Coefficient> = BTreeMap::new();
    for (m, c) in terms {
        if m.len() != vars.len() {
            return Err(Error::ArityMismatch {
                expected: vars.len(),
                got: m.len(),
            });
        }
        match merged.get_mut(&m) {
            None => {
                merged.insert(m, c);
            }
            Some(existing) => match (existing, c) {
                (Coefficient::Rational(a), Coefficient::Rational(b)) => *a += b,
                _ => {
                    return Err(Error::ParameterCollision {
                        monomial: m.display(vars, ""),
                    })
                }
            },
        }
    }
    merged.retain(|_, c| !matches!(c, Coefficient::Rational(r) if r.is_zero()));
    if merged.is_empty() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(Polynomial {
        vars: vars.clone(),
        terms: merged,
    })
}

impl Polynomial {
    pub fn vars(&self) -> &VarList {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Coefficient> {
        self.terms.get(m)
    }

    /// Re-runs normalization on the term list. Always returns an equal value.
    pub fn normalize(&self) -> Result<Polynomial> {
        normalize(&self.vars, self.terms.clone())
    }

    /// Minimal exponent of `x_i` over the support.
    pub fn variable_divides(&self, i: usize) -> u32 {
        self.terms
            .keys()
            .map(|m| m.exponents()[i])
            .min()
            .unwrap_or(0)
    }

    /// Whether every monomial is divisible by `x_i` or by `x_j`, i.e. the
    /// polynomial can be written `x_i g_1 + x_j g_2`.
    pub fn split_check(&self, i: usize, j: usize) -> bool {
        debug_assert_ne!(i, j);
        self.terms
            .keys()
            .all(|m| m.exponents()[i] > 0 || m.exponents()[j] > 0)
    }

    /// Whether `x_i` occurs as a term on its own.
    pub fn has_linear_term(&self, i: usize) -> bool {
        self.terms.contains_key(&Monomial::var(self.nvars(), i))
    }

    /// Same coefficients, exponent vectors mapped through `f`.
    pub fn map_support(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> Result<Polynomial> {
        normalize(
            &self.vars,
            self.terms.iter().map(|(m, c)| (f(m), c.clone())),
        )
    }

    /// Product of two polynomials over the same variables. A parameter may
    /// only be multiplied by the rational `1`.
    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        let mut out = Vec::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let c = match (ca, cb) {
                    (Coefficient::Rational(a), Coefficient::Rational(b)) => {
                        Coefficient::Rational(a * b)
                    }
                    (p @ Coefficient::Param { .. }, Coefficient::Rational(r))
                    | (Coefficient::Rational(r), p @ Coefficient::Param { .. })
                        if r.is_one() =>
                    {
                        p.clone()
                    }
                    _ => {
                        return Err(Error::ParameterCollision {
                            monomial: ma.mul(mb).display(&self.vars, ""),
                        })
                    }
                };
                out.push((ma.mul(mb), c));
            }
        }
        normalize(&self.vars, out)
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        normalize(
            &self.vars,
            self.terms
                .iter()
                .chain(other.terms.iter())
                .map(|(m, c)| (m.clone(), c.clone())),
        )
    }

    /// Sets the genericity flag on every occurrence of parameter `name`.
    pub fn mark_nonzero(&mut self, name: char) {
        for c in self.terms.values_mut() {
            if let Coefficient::Param { name: n, nonzero } = c {
                if *n == name {
                    *nonzero = true;
                }
            }
        }
    }

    pub(crate) fn sign_is_negative(c: &Coefficient) -> bool {
        matches!(c, Coefficient::Rational(r) if r.is_negative())
    }
}
