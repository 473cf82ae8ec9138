//! Truncated power series (jets) in one and two variables over ℚ.
//!
//! A jet stores every coefficient up to an explicit truncation order `K`.
//! Invariants:
//! - a `Jet1` of truncation `K` holds exactly `K + 1` coefficients;
//! - a `Jet2` of truncation `K` holds every bidegree `(i, j)` with `i + j <= K`;
//! - binary operations require equal truncation and never report degrees
//!   above it. Operations that lose information (derivatives, division)
//!   lower the truncation instead of padding with zeros.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::linalg;
use crate::Rational;

/// Largest total degree supported by [`Jet2`].
pub const MAX_JET2_TRUNCATION: usize = 24;

/// Order of a jet: a finite degree, or "nothing nonzero up to the truncation".
///
/// `AboveTruncation` compares greater than every finite order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtOrder {
    Finite(usize),
    AboveTruncation,
}

impl ExtOrder {
    pub fn finite(self) -> Option<usize> {
        match self {
            ExtOrder::Finite(d) => Some(d),
            ExtOrder::AboveTruncation => None,
        }
    }
}

impl fmt::Display for ExtOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtOrder::Finite(d) => write!(f, "{d}"),
            ExtOrder::AboveTruncation => write!(f, "above truncation"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum JetError {
    #[error("truncation mismatch: {left} vs {right}")]
    TruncationMismatch { left: usize, right: usize },
    #[error("divisor vanishes up to truncation {0}")]
    ZeroDivisor(usize),
    #[error("not divisible within truncation")]
    NotDivisible,
    #[error("inner series of a composition must have order >= 1")]
    ConstantInner,
    #[error("degree {degree} exceeds truncation {truncation}")]
    DegreeAboveTruncation { degree: usize, truncation: usize },
}

fn check_same(left: usize, right: usize) -> Result<(), JetError> {
    if left == right {
        Ok(())
    } else {
        Err(JetError::TruncationMismatch { left, right })
    }
}

/// One-variable jet `c_0 + c_1 t + ... + c_K t^K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Jet1 {
    coeffs: Vec<Rational>,
}

impl Jet1 {
    pub fn zero(k: usize) -> Self {
        Jet1 { coeffs: vec![Rational::zero(); k + 1] }
    }

    pub fn constant(c: Rational, k: usize) -> Self {
        let mut j = Self::zero(k);
        j.coeffs[0] = c;
        j
    }

    pub fn one(k: usize) -> Self {
        Self::constant(Rational::one(), k)
    }

    /// `c * t^deg`; `deg` above `k` is rejected.
    pub fn monomial(c: Rational, deg: usize, k: usize) -> Result<Self, JetError> {
        Self::from_terms(&[(deg, c)], k)
    }

    /// The jet with the given coefficient list; truncation is `len - 1`.
    ///
    /// # Panics
    /// Panics on an empty list.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least the constant term");
        Jet1 { coeffs }
    }

    /// Sum of `c * t^d` over the given terms. Repeated degrees accumulate.
    pub fn from_terms(terms: &[(usize, Rational)], k: usize) -> Result<Self, JetError> {
        let mut j = Self::zero(k);
        for (d, c) in terms {
            if *d > k {
                return Err(JetError::DegreeAboveTruncation { degree: *d, truncation: k });
            }
            j.coeffs[*d] += c;
        }
        Ok(j)
    }

    /// Convenience constructor from integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `t^d`.
    ///
    /// # Panics
    /// Panics if `d` exceeds the truncation.
    pub fn coeff(&self, d: usize) -> &Rational {
        &self.coeffs[d]
    }

    pub fn order(&self) -> ExtOrder {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(d) => ExtOrder::Finite(d),
            None => ExtOrder::AboveTruncation,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Forget every coefficient above `k`.
    ///
    /// # Panics
    /// Panics if `k` exceeds the current truncation.
    pub fn truncate(&self, k: usize) -> Self {
        assert!(k <= self.truncation(), "cannot raise truncation {} to {k}", self.truncation());
        Jet1 { coeffs: self.coeffs[..=k].to_vec() }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, JetError> {
        check_same(self.truncation(), other.truncation())?;
        Ok(Jet1 { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, JetError> {
        check_same(self.truncation(), other.truncation())?;
        Ok(Jet1 { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, JetError> {
        check_same(self.truncation(), other.truncation())?;
        let k = self.truncation();
        let mut out = vec![Rational::zero(); k + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=k - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Ok(Jet1 { coeffs: out })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Jet1 { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.truncation());
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Formal derivative; the result has truncation `K - 1`.
    ///
    /// # Panics
    /// Panics on a jet of truncation 0, whose derivative carries no information.
    pub fn derive(&self) -> Self {
        let k = self.truncation();
        assert!(k >= 1, "derivative of a 0-jet is undefined");
        Jet1 {
            coeffs: (1..=k).map(|d| &self.coeffs[d] * Rational::from_integer(d.into())).collect(),
        }
    }

    /// `d`-th derivative divided by `d!`, i.e. the coefficients shifted down by
    /// binomial factors. Truncation `K - d`.
    pub fn derive_scaled(&self, d: usize) -> Self {
        let k = self.truncation();
        assert!(d <= k, "derivative order {d} above truncation {k}");
        Jet1 {
            coeffs: (d..=k).map(|i| &self.coeffs[i] * binomial(i, d)).collect(),
        }
    }

    /// Jet of `∫_0^t s^l j(s) ds`; truncation `K + l + 1`.
    pub fn integrate_weighted(&self, l: usize) -> Self {
        let k = self.truncation();
        let mut out = vec![Rational::zero(); k + l + 2];
        for (i, c) in self.coeffs.iter().enumerate() {
            let d = i + l + 1;
            out[d] = c / Rational::from_integer(d.into());
        }
        Jet1 { coeffs: out }
    }

    /// Multiply by `t^d`; truncation rises to `K + d`.
    pub fn shift_up(&self, d: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); d];
        coeffs.extend(self.coeffs.iter().cloned());
        Jet1 { coeffs }
    }

    /// Divide by `t^d`; truncation drops to `K - d`.
    pub fn shift_down(&self, d: usize) -> Result<Self, JetError> {
        let k = self.truncation();
        if d > k {
            return Err(JetError::DegreeAboveTruncation { degree: d, truncation: k });
        }
        if self.coeffs[..d].iter().any(|c| !c.is_zero()) {
            return Err(JetError::NotDivisible);
        }
        Ok(Jet1 { coeffs: self.coeffs[d..].to_vec() })
    }

    /// Quotient `q` with `self = q * b` up to truncation `K - ord(b)`.
    pub fn divide(&self, b: &Self) -> Result<Self, JetError> {
        check_same(self.truncation(), b.truncation())?;
        let d = b.order().finite().ok_or(JetError::ZeroDivisor(b.truncation()))?;
        let a = self.shift_down(d)?;
        let b = b.shift_down(d)?;
        let k = a.truncation();
        let lead = b.coeffs[0].clone();
        let mut q: Vec<Rational> = Vec::with_capacity(k + 1);
        for n in 0..=k {
            let mut r = a.coeffs[n].clone();
            for (i, qi) in q.iter().enumerate() {
                r -= qi * &b.coeffs[n - i];
            }
            q.push(r / &lead);
        }
        Ok(Jet1 { coeffs: q })
    }

    /// Jet of `self ∘ phi` at truncation `min(K, K_phi)`; requires `ord(phi) >= 1`.
    pub fn compose(&self, phi: &Self) -> Result<Self, JetError> {
        if !phi.coeffs[0].is_zero() {
            return Err(JetError::ConstantInner);
        }
        let k = self.truncation().min(phi.truncation());
        let phi = phi.truncate(k);
        let mut acc = Self::zero(k);
        for c in self.coeffs[..=k].iter().rev() {
            acc = &acc * &phi;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Evaluate the stored polynomial at a rational point.
    pub fn eval(&self, t: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }
}

impl Add for &Jet1 {
    type Output = Jet1;
    /// # Panics
    /// Panics on truncation mismatch; use [`Jet1::checked_add`] to recover.
    fn add(self, rhs: &Jet1) -> Jet1 {
        self.checked_add(rhs).expect("jet addition")
    }
}

impl Sub for &Jet1 {
    type Output = Jet1;
    fn sub(self, rhs: &Jet1) -> Jet1 {
        self.checked_sub(rhs).expect("jet subtraction")
    }
}

impl Mul for &Jet1 {
    type Output = Jet1;
    fn mul(self, rhs: &Jet1) -> Jet1 {
        self.checked_mul(rhs).expect("jet multiplication")
    }
}

impl Neg for &Jet1 {
    type Output = Jet1;
    fn neg(self) -> Jet1 {
        Jet1 { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Jet1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(String, &Rational)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(d, c)| (monomial_name(&[("t", d)]), c))
            .collect();
        write_sum(f, &terms)?;
        write!(f, " + O(t^{})", self.truncation() + 1)
    }
}

/// Variable selector for [`Jet2`]: `X` is the first variable, `Y` the second.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Var {
    X,
    Y,
}

impl Var {
    pub fn other(self) -> Var {
        match self {
            Var::X => Var::Y,
            Var::Y => Var::X,
        }
    }
}

fn tri(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Position of bidegree `(i, j)` in the triangular table, grouped by total degree.
fn idx(i: usize, j: usize) -> usize {
    tri(i + j) + j
}

/// Two-variable jet `Σ c_ij x^i y^j` over `i + j <= K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Jet2 {
    k: usize,
    coeffs: Vec<Rational>,
}

impl Jet2 {
    /// # Panics
    /// Panics if `k` exceeds [`MAX_JET2_TRUNCATION`].
    pub fn zero(k: usize) -> Self {
        assert!(k <= MAX_JET2_TRUNCATION, "Jet2 truncation {k} exceeds {MAX_JET2_TRUNCATION}");
        Jet2 { k, coeffs: vec![Rational::zero(); tri(k + 1)] }
    }

    pub fn constant(c: Rational, k: usize) -> Self {
        let mut j = Self::zero(k);
        j.coeffs[0] = c;
        j
    }

    pub fn one(k: usize) -> Self {
        Self::constant(Rational::one(), k)
    }

    /// The coordinate function `x` or `y`.
    pub fn var(v: Var, k: usize) -> Self {
        let (i, j) = match v {
            Var::X => (1, 0),
            Var::Y => (0, 1),
        };
        Self::monomial(Rational::one(), i, j, k).expect("k >= 1 for a coordinate")
    }

    pub fn monomial(c: Rational, i: usize, j: usize, k: usize) -> Result<Self, JetError> {
        Self::from_terms(&[((i, j), c)], k)
    }

    /// Sum of `c x^i y^j` over the given terms. Repeated bidegrees accumulate.
    pub fn from_terms(terms: &[((usize, usize), Rational)], k: usize) -> Result<Self, JetError> {
        let mut out = Self::zero(k);
        for ((i, j), c) in terms {
            if i + j > k {
                return Err(JetError::DegreeAboveTruncation { degree: i + j, truncation: k });
            }
            out.coeffs[idx(*i, *j)] += c;
        }
        Ok(out)
    }

    /// Integer-coefficient constructor for tests and tables.
    pub fn from_int_terms(terms: &[((usize, usize), i64)], k: usize) -> Self {
        let t: Vec<_> = terms.iter().map(|&(e, c)| (e, Rational::from_integer(c.into()))).collect();
        Self::from_terms(&t, k).expect("term within truncation")
    }

    /// Embed a one-variable jet as a function of `v` alone.
    pub fn from_jet1(j: &Jet1, v: Var) -> Self {
        let k = j.truncation();
        let mut out = Self::zero(k);
        for (d, c) in j.coeffs().iter().enumerate() {
            let pos = match v {
                Var::X => idx(d, 0),
                Var::Y => idx(0, d),
            };
            out.coeffs[pos] = c.clone();
        }
        out
    }

    pub fn truncation(&self) -> usize {
        self.k
    }

    /// Coefficient of `x^i y^j`.
    ///
    /// # Panics
    /// Panics if `i + j` exceeds the truncation.
    pub fn coeff(&self, i: usize, j: usize) -> &Rational {
        assert!(i + j <= self.k, "bidegree ({i},{j}) above truncation {}", self.k);
        &self.coeffs[idx(i, j)]
    }

    /// Nonzero terms as `((i, j), c)`, ordered by total degree then by `j`.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &Rational)> + '_ {
        (0..=self.k)
            .flat_map(|n| (0..=n).map(move |j| (n - j, j)))
            .map(move |(i, j)| ((i, j), &self.coeffs[idx(i, j)]))
            .filter(|(_, c)| !c.is_zero())
    }

    /// Lowest total degree with a nonzero coefficient.
    pub fn order(&self) -> ExtOrder {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(p) => {
                let mut n = 0;
                while tri(n + 1) <= p {
                    n += 1;
                }
                ExtOrder::Finite(n)
            }
            None => ExtOrder::AboveTruncation,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Highest total degree with a nonzero coefficient, if any.
    pub fn degree(&self) -> Option<usize> {
        self.terms().map(|((i, j), _)| i + j).max()
    }

    /// # Panics
    /// Panics if `k` exceeds the current truncation.
    pub fn truncate(&self, k: usize) -> Self {
        assert!(k <= self.k, "cannot raise truncation {} to {k}", self.k);
        Jet2 { k, coeffs: self.coeffs[..tri(k + 1)].to_vec() }
    }

    /// Re-express a jet at a higher truncation. Only sound when the caller
    /// knows the series is a polynomial of degree at most the current truncation.
    pub fn polynomial_at(&self, k: usize) -> Self {
        if k <= self.k {
            return self.truncate(k);
        }
        let mut out = Self::zero(k);
        out.coeffs[..self.coeffs.len()].clone_from_slice(&self.coeffs);
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, JetError> {
        check_same(self.k, other.k)?;
        Ok(Jet2 { k: self.k, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, JetError> {
        check_same(self.k, other.k)?;
        Ok(Jet2 { k: self.k, coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, JetError> {
        check_same(self.k, other.k)?;
        let k = self.k;
        let mut out = Self::zero(k);
        let rhs: Vec<_> = other.terms().map(|((i, j), c)| (i, j, c.clone())).collect();
        for ((i, j), a) in self.terms() {
            for (p, q, b) in &rhs {
                if i + j + p + q <= k {
                    out.coeffs[idx(i + p, j + q)] += a * b;
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Jet2 { k: self.k, coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.k);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative in `v`; truncation `K - 1`.
    ///
    /// # Panics
    /// Panics on a jet of truncation 0.
    pub fn derive(&self, v: Var) -> Self {
        assert!(self.k >= 1, "derivative of a 0-jet is undefined");
        let mut out = Self::zero(self.k - 1);
        for ((i, j), c) in self.terms() {
            match v {
                Var::X if i > 0 => out.coeffs[idx(i - 1, j)] = c * Rational::from_integer(i.into()),
                Var::Y if j > 0 => out.coeffs[idx(i, j - 1)] = c * Rational::from_integer(j.into()),
                _ => {}
            }
        }
        out
    }

    /// Multiply by the coordinate `v`; truncation rises to `K + 1`.
    pub fn mul_var(&self, v: Var) -> Self {
        let mut out = Self::zero(self.k + 1);
        for ((i, j), c) in self.terms() {
            let pos = match v {
                Var::X => idx(i + 1, j),
                Var::Y => idx(i, j + 1),
            };
            out.coeffs[pos] = c.clone();
        }
        out
    }

    /// Jet of `∫_0^v s^l j ds` taken in variable `v`; truncation `K + l + 1`.
    pub fn integrate_weighted(&self, v: Var, l: usize) -> Self {
        let mut out = Self::zero(self.k + l + 1);
        for ((i, j), c) in self.terms() {
            let (p, q, d) = match v {
                Var::X => (i + l + 1, j, i + l + 1),
                Var::Y => (i, j + l + 1, j + l + 1),
            };
            out.coeffs[idx(p, q)] = c / Rational::from_integer(d.into());
        }
        out
    }

    /// Homogeneous part of total degree `n` as coefficients indexed by `j`
    /// (power of the second variable).
    pub fn homogeneous(&self, n: usize) -> Vec<Rational> {
        assert!(n <= self.k);
        self.coeffs[tri(n)..tri(n + 1)].to_vec()
    }

    /// Quotient `q` with `self = q * b` up to truncation `K - ord(b)`.
    ///
    /// The quotient is unique when it exists, since multiplication by a
    /// nonzero jet is injective on the lowest homogeneous part. It is solved
    /// degree by degree; an inconsistent degree means no quotient exists.
    pub fn divide(&self, b: &Self) -> Result<Self, JetError> {
        check_same(self.k, b.k)?;
        let d = b.order().finite().ok_or(JetError::ZeroDivisor(b.k))?;
        let k = self.k;
        for n in 0..d {
            if self.homogeneous(n).iter().any(|c| !c.is_zero()) {
                return Err(JetError::NotDivisible);
            }
        }
        let mut q = Self::zero(k - d);
        // residual r = a - q·b, refined degree by degree
        let mut r = self.clone();
        let lead = b.homogeneous(d);
        for m in 0..=(k - d) {
            // unknown homogeneous q_m of degree m: (q_m · b_d) must equal r_{m+d}
            let target = r.homogeneous(m + d);
            let rows = m + d + 1;
            let cols = m + 1;
            let mut mat = vec![vec![Rational::zero(); cols]; rows];
            for jq in 0..cols {
                for (jb, bc) in lead.iter().enumerate() {
                    mat[jq + jb][jq] += bc;
                }
            }
            let sol = linalg::solve(&mat, &target).map_err(|_| JetError::NotDivisible)?;
            let mut qm = Self::zero(k);
            for (j, c) in sol.iter().enumerate() {
                if !c.is_zero() {
                    q.coeffs[idx(m - j, j)] = c.clone();
                    qm.coeffs[idx(m - j, j)] = c.clone();
                }
            }
            r = &r - &(&qm * b);
        }
        Ok(q)
    }

    /// Evaluate the stored polynomial exactly.
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for ((i, j), c) in self.terms() {
            acc += c * num_traits::pow(x.clone(), i) * num_traits::pow(y.clone(), j);
        }
        acc
    }

    /// Evaluate the stored polynomial in floating point (mesh sampling only).
    pub fn eval_f64(&self, x: f64, y: f64) -> f64 {
        self.terms()
            .map(|((i, j), c)| c.to_f64().unwrap_or(f64::NAN) * x.powi(i as i32) * y.powi(j as i32))
            .sum()
    }

    /// Render with the given variable names.
    pub fn display_with(&self, x: &str, y: &str) -> String {
        let terms: Vec<(String, &Rational)> =
            self.terms().map(|((i, j), c)| (monomial_name(&[(x, i), (y, j)]), c)).collect();
        let mut s = String::new();
        let _ = write_sum(&mut s, &terms);
        s
    }
}

impl Add for &Jet2 {
    type Output = Jet2;
    /// # Panics
    /// Panics on truncation mismatch; use [`Jet2::checked_add`] to recover.
    fn add(self, rhs: &Jet2) -> Jet2 {
        self.checked_add(rhs).expect("jet addition")
    }
}

impl Sub for &Jet2 {
    type Output = Jet2;
    fn sub(self, rhs: &Jet2) -> Jet2 {
        self.checked_sub(rhs).expect("jet subtraction")
    }
}

impl Mul for &Jet2 {
    type Output = Jet2;
    fn mul(self, rhs: &Jet2) -> Jet2 {
        self.checked_mul(rhs).expect("jet multiplication")
    }
}

impl Neg for &Jet2 {
    type Output = Jet2;
    fn neg(self) -> Jet2 {
        Jet2 { k: self.k, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl fmt::Display for Jet2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with("x", "y"))
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> Rational {
    let mut acc = num_bigint::BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    Rational::from_integer(acc)
}

pub(crate) fn monomial_name(factors: &[(&str, usize)]) -> String {
    let parts: Vec<String> = factors
        .iter()
        .filter(|(_, e)| *e > 0)
        .map(|(v, e)| if *e == 1 { v.to_string() } else { format!("{v}^{e}") })
        .collect();
    parts.join("*")
}

/// Writes `c1*m1 + c2*m2 - ...`, or `0` for an empty sum.
pub(crate) fn write_sum<W: fmt::Write>(w: &mut W, terms: &[(String, &Rational)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(w, "0");
    }
    for (n, (mono, c)) in terms.iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        match (n, neg) {
            (0, true) => write!(w, "-")?,
            (0, false) => {}
            (_, true) => write!(w, " - ")?,
            (_, false) => write!(w, " + ")?,
        }
        if mono.is_empty() {
            write!(w, "{abs}")?;
        } else if abs.is_one() {
            write!(w, "{mono}")?;
        } else {
            write!(w, "{abs}*{mono}")?;
        }
    }
    Ok(())
}
