//! Legendre surfaces in the five-dimensional projective chart, their
//! tangent varieties and the D4 test on transversal slices.
//!
//! A surface germ is given in the chart `x1 = u`, `x2 = v` by `x3`, `x4`,
//! and `x5` is forced by the contact condition
//! `dx5 = (x3 - u x3_u - v x4_u) du + (x4 - u x3_v - v x4_v) dv`,
//! which is integrable exactly when `x3_v = x4_u`. The convention matches
//! `x5 = -(1/6 a u^3 + 1/2 b u^2 v + 1/2 c u v^2 + 1/6 e v^3) + …`.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::jets::{Jet2, JetError, Var};
use crate::tangency::{jacobi_membership, Membership};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("x3 and x4 must have the same truncation ({0} vs {1})")]
    TruncationMismatch(usize, usize),
    #[error("truncation {0} is too low; at least {1} is needed")]
    TruncationTooLow(usize, usize),
    #[error("x3 and x4 must have zero constant and linear parts")]
    NotCentered,
    #[error("x3_v != x4_u at u^{}v^{}: {lhs} vs {rhs}", exps.0, exps.1)]
    NotClosed { exps: (usize, usize), lhs: Rational, rhs: Rational },
    #[error("Legendre condition fails at u1^{}u2^{}", exps.0, exps.1)]
    NotLegendre { exps: (usize, usize) },
    #[error(transparent)]
    Jet(#[from] JetError),
}

/// `Σ_d (1/d)·[w]_d`: recovers `f` with `f(0) = 0` from `w = u f_u + v f_v`.
fn radial_primitive(w: &Jet2) -> Jet2 {
    let k = w.truncation();
    let terms: Vec<((usize, usize), Rational)> = w
        .terms()
        .filter(|((i, j), _)| i + j > 0)
        .map(|((i, j), c)| ((i, j), c / Rational::from_integer((i + j).into())))
        .collect();
    Jet2::from_terms(&terms, k).expect("same degrees")
}

/// `u·a + v·b` at the truncation of `a` and `b` plus one.
fn euler_pair(a: &Jet2, b: &Jet2) -> Jet2 {
    &a.mul_var(Var::X) + &b.mul_var(Var::Y)
}

/// `f - u f_u - v f_v`, kept at the truncation of `f`.
fn slice_of(f: &Jet2) -> Jet2 {
    f - &euler_pair(&f.derive(Var::X), &f.derive(Var::Y))
}

fn first_difference(a: &Jet2, b: &Jet2) -> Option<((usize, usize), Rational, Rational)> {
    let k = a.truncation().min(b.truncation());
    for n in 0..=k {
        for j in 0..=n {
            let (l, r) = (a.coeff(n - j, j), b.coeff(n - j, j));
            if l != r {
                return Some(((n - j, j), l.clone(), r.clone()));
            }
        }
    }
    None
}

/// Legendre surface germ in the chart `(u, v, x3, x4, x5)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreSurfaceGerm {
    /// `(a, b, c, e)` read off the quadratic parts of `x3` and `x4`.
    pub quad: [Rational; 4],
    pub x3: Jet2,
    pub x4: Jet2,
    pub x5: Jet2,
}

impl LegendreSurfaceGerm {
    /// Germ with the given quadratic data plus higher terms `phi`, `psi`.
    pub fn from_quad(quad: [Rational; 4], phi: &Jet2, psi: &Jet2) -> Result<Self, SurfaceError> {
        let k = phi.truncation();
        if psi.truncation() != k {
            return Err(SurfaceError::TruncationMismatch(k, psi.truncation()));
        }
        if k < 2 {
            return Err(SurfaceError::TruncationTooLow(k, 2));
        }
        let [a, b, c, e] = quad.clone();
        let half = Rational::new(1.into(), 2.into());
        let x3 = Jet2::from_terms(&[((2, 0), &a * &half), ((1, 1), b.clone()), ((0, 2), &c * &half)], k)?;
        let x4 = Jet2::from_terms(&[((2, 0), &b * &half), ((1, 1), c), ((0, 2), &e * &half)], k)?;
        complete_to_legendre(&(&x3 + phi), &(&x4 + psi))
    }

    pub fn truncation(&self) -> usize {
        self.x3.truncation()
    }

    /// `rank [[a, b, c], [b, c, e]]`.
    pub fn quad_rank(&self) -> usize {
        let [a, b, c, e] = &self.quad;
        let minors = [a * c - b * b, a * e - b * c, b * e - c * c];
        if minors.iter().any(|m| !m.is_zero()) {
            2
        } else if self.quad.iter().any(|x| !x.is_zero()) {
            1
        } else {
            0
        }
    }

    /// `(dx5 - P du - Q dv)` as its `du`, `dv` coefficients; zero for a
    /// contact-integral germ. Truncation `K - 1`.
    pub fn contact_residual(&self) -> [Jet2; 2] {
        let (p, q) = contact_coefficients(&self.x3, &self.x4);
        let k = self.truncation() - 1;
        [
            &self.x5.derive(Var::X).truncate(k) - &p.truncate(k),
            &self.x5.derive(Var::Y).truncate(k) - &q.truncate(k),
        ]
    }
}

/// Coefficients `(P, Q)` with `dx5 = P du + Q dv`; truncation `K`.
fn contact_coefficients(x3: &Jet2, x4: &Jet2) -> (Jet2, Jet2) {
    let p = x3 - &euler_pair(&x3.derive(Var::X), &x4.derive(Var::X));
    let q = x4 - &euler_pair(&x3.derive(Var::Y), &x4.derive(Var::Y));
    (p, q)
}

/// Check `x3_v = x4_u` and integrate the contact condition for `x5`.
pub fn complete_to_legendre(x3: &Jet2, x4: &Jet2) -> Result<LegendreSurfaceGerm, SurfaceError> {
    let k = x3.truncation();
    if x4.truncation() != k {
        return Err(SurfaceError::TruncationMismatch(k, x4.truncation()));
    }
    if k < 2 {
        return Err(SurfaceError::TruncationTooLow(k, 2));
    }
    let low = |f: &Jet2| f.terms().any(|((i, j), _)| i + j < 2);
    if low(x3) || low(x4) {
        return Err(SurfaceError::NotCentered);
    }
    if let Some((exps, lhs, rhs)) = first_difference(&x3.derive(Var::Y), &x4.derive(Var::X)) {
        return Err(SurfaceError::NotClosed { exps, lhs, rhs });
    }
    let (p, q) = contact_coefficients(x3, x4);
    let x5 = radial_primitive(&euler_pair(&p, &q)).truncate(k);
    let two = Rational::from_integer(2.into());
    let quad = [x3.coeff(2, 0) * &two, x3.coeff(1, 1).clone(), x3.coeff(0, 2) * &two, x4.coeff(0, 2) * &two];
    Ok(LegendreSurfaceGerm { quad, x3: x3.clone(), x4: x4.clone(), x5 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PointKind {
    Hyperbolic,
    Elliptic,
    Parabolic,
    NotOrdinary,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Hyperbolic => "hyperbolic",
            PointKind::Elliptic => "elliptic",
            PointKind::Parabolic => "parabolic",
            PointKind::NotOrdinary => "not ordinary",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrdinaryPointClass {
    pub kind: PointKind,
    /// `4(ac - b^2)(be - c^2) - (ae - bc)^2`.
    pub h: Rational,
}

pub fn ordinary_h(quad: &[Rational; 4]) -> Rational {
    let [a, b, c, e] = quad;
    let four = Rational::from_integer(4.into());
    let m = a * e - b * c;
    four * (a * c - b * b) * (b * e - c * c) - &m * &m
}

pub fn ordinary_point_class(s: &LegendreSurfaceGerm) -> OrdinaryPointClass {
    let h = ordinary_h(&s.quad);
    let kind = if s.quad_rank() < 2 {
        PointKind::NotOrdinary
    } else if h.is_negative() {
        PointKind::Hyperbolic
    } else if h.is_positive() {
        PointKind::Elliptic
    } else {
        PointKind::Parabolic
    };
    OrdinaryPointClass { kind, h }
}

/// Slice `s = -u`, `t = -v` of the tangent map: `g_i = X - u X_u - v X_v`
/// for `X = x3, x4, x5`. Truncation `K`.
pub fn transversal_slice(s: &LegendreSurfaceGerm) -> [Jet2; 3] {
    [slice_of(&s.x3), slice_of(&s.x4), slice_of(&s.x5)]
}

/// `dg3 + u dg1 + v dg2` as `du`, `dv` coefficients at truncation `K - 1`.
pub fn slice_identity_residual(g: &[Jet2; 3]) -> [Jet2; 2] {
    let k = g[2].truncation() - 1;
    [Var::X, Var::Y].map(|w| {
        let r = &g[2].derive(w) + &euler_pair(&g[0].derive(w), &g[1].derive(w)).truncate(k);
        r.truncate(k)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Inconclusive {
    /// `g(0) != 0` or `dg(0) != 0`.
    NotRankZero,
    /// No component's differential lies in the span of the other two.
    NotFront,
    /// The Hessian determinant of λ vanishes; no criterion applies.
    DegenerateHessian,
    TruncationTooLow(usize),
}

impl fmt::Display for Inconclusive {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Inconclusive::NotRankZero => f.write_str("rank of dg at 0 is not zero"),
            Inconclusive::NotFront => f.write_str("no Legendre lift found"),
            Inconclusive::DegenerateHessian => f.write_str("Hessian determinant of lambda vanishes"),
            Inconclusive::TruncationTooLow(k) => write!(f, "truncation {k} is below 3"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SajiVerdict {
    D4Plus,
    D4Minus,
    Inconclusive(Inconclusive),
}

impl fmt::Display for SajiVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SajiVerdict::D4Plus => f.write_str("D4+"),
            SajiVerdict::D4Minus => f.write_str("D4-"),
            SajiVerdict::Inconclusive(r) => write!(f, "inconclusive ({r})"),
        }
    }
}

/// Intermediate data of the D4 test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SajiReport {
    pub verdict: SajiVerdict,
    /// Unnormalized normal `ν̃` at the origin, with one entry equal to 1.
    pub normal_at_origin: Option<[Rational; 3]>,
    /// Quadratic part `(q20, q11, q02)` of `λ̃`.
    pub lambda_quadratic: Option<[Rational; 3]>,
    /// `4 q20 q02 - q11^2`.
    pub hessian: Option<Rational>,
    /// Order to which the lift `dg_k = Σ p_i dg_i` was verified.
    pub front_order: usize,
}

/// Order used when searching for the Legendre lift of a slice.
pub const FRONT_CHECK_ORDER: usize = 6;

/// Find `ν̃` with `ν̃ · dg = 0`, trying each component as the dependent one.
fn unnormalized_normal(g: &[Jet2; 3], order: usize) -> Option<[Jet2; 3]> {
    for k in [2, 0, 1] {
        let others: Vec<usize> = (0..3).filter(|&i| i != k).collect();
        let basis = [g[others[0]].clone(), g[others[1]].clone()];
        if let Membership::Certified(cert) = jacobi_membership(&basis, &g[k], order) {
            let ko = cert.verified_order;
            let mut nu = [Jet2::zero(ko), Jet2::zero(ko), Jet2::zero(ko)];
            nu[k] = Jet2::one(ko);
            nu[others[0]] = -&cert.multipliers[0];
            nu[others[1]] = -&cert.multipliers[1];
            return Some(nu);
        }
    }
    None
}

/// D4± test on a map germ `g: (R^2, 0) -> (R^3, 0)` given as three jets.
pub fn saji_analysis(g: &[Jet2; 3]) -> SajiReport {
    let mut report =
        SajiReport { verdict: SajiVerdict::D4Plus, normal_at_origin: None, lambda_quadratic: None, hessian: None, front_order: 0 };
    let k = g.iter().map(Jet2::truncation).min().unwrap_or(0);
    let fail = |mut r: SajiReport, why| {
        r.verdict = SajiVerdict::Inconclusive(why);
        r
    };
    if k < 3 {
        return fail(report, Inconclusive::TruncationTooLow(k));
    }
    if g.iter().any(|f| f.terms().any(|((i, j), _)| i + j < 2)) {
        return fail(report, Inconclusive::NotRankZero);
    }
    let g: [Jet2; 3] = g.clone().map(|f| f.truncate(k));
    let Some(nu) = unnormalized_normal(&g, FRONT_CHECK_ORDER) else {
        return fail(report, Inconclusive::NotFront);
    };
    report.front_order = nu[0].truncation();
    let n0 = nu.clone().map(|n| n.coeff(0, 0).clone());
    report.normal_at_origin = Some(n0.clone());
    // the quadratic part of λ̃ only involves ν̃(0), since every 2x2 minor of
    // (g_u, g_v) has order at least 2
    let gu: Vec<Jet2> = g.iter().map(|f| f.derive(Var::X).truncate(2)).collect();
    let gv: Vec<Jet2> = g.iter().map(|f| f.derive(Var::Y).truncate(2)).collect();
    let minor = |i: usize, j: usize| &(&gu[i] * &gv[j]) - &(&gu[j] * &gv[i]);
    let lambda = &(&minor(1, 2).scale(&n0[0]) - &minor(0, 2).scale(&n0[1])) + &minor(0, 1).scale(&n0[2]);
    let q = [lambda.coeff(2, 0).clone(), lambda.coeff(1, 1).clone(), lambda.coeff(0, 2).clone()];
    let h = Rational::from_integer(4.into()) * &q[0] * &q[2] - &q[1] * &q[1];
    report.lambda_quadratic = Some(q);
    report.hessian = Some(h.clone());
    if h.is_negative() {
        report.verdict = SajiVerdict::D4Plus;
    } else if h.is_positive() {
        report.verdict = SajiVerdict::D4Minus;
    } else {
        return fail(report, Inconclusive::DegenerateHessian);
    }
    report
}

pub fn saji_verdict(g: &[Jet2; 3]) -> SajiVerdict {
    saji_analysis(g).verdict
}

/// Legendre immersion germ `(λ, μ, ν)` in the Darboux chart
/// `dμ = Σ (ν_i dλ_i - λ_i dν_i)`, with `λ, ν` in two variables `(u1, u2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LegendreImmersion {
    pub lambda: [Jet2; 2],
    pub mu: Jet2,
    pub nu: [Jet2; 2],
}

/// `Σ (ν_i ∂_k λ_i - λ_i ∂_k ν_i)` for `k = 1, 2`; truncation `K - 1`.
fn darboux_form(lambda: &[Jet2; 2], nu: &[Jet2; 2]) -> [Jet2; 2] {
    let k = lambda[0].truncation() - 1;
    [Var::X, Var::Y].map(|w| {
        let mut acc = Jet2::zero(k);
        for i in 0..2 {
            let a = &nu[i].truncate(k) * &lambda[i].derive(w);
            let b = &lambda[i].truncate(k) * &nu[i].derive(w);
            acc = &(&acc + &a) - &b;
        }
        acc
    })
}

impl LegendreImmersion {
    /// Solve for `μ` with `μ(0) = 0`; fails unless `Σ dν_i ∧ dλ_i = 0`.
    pub fn from_lambda_nu(lambda: [Jet2; 2], nu: [Jet2; 2]) -> Result<Self, SurfaceError> {
        let k = lambda[0].truncation();
        for f in lambda.iter().chain(&nu) {
            if f.truncation() != k {
                return Err(SurfaceError::TruncationMismatch(k, f.truncation()));
            }
        }
        if k < 2 {
            return Err(SurfaceError::TruncationTooLow(k, 2));
        }
        let w = darboux_form(&lambda, &nu);
        if let Some((exps, _, _)) = first_difference(&w[0].derive(Var::Y), &w[1].derive(Var::X)) {
            return Err(SurfaceError::NotLegendre { exps });
        }
        let mu = radial_primitive(&euler_pair(&w[0], &w[1]));
        Ok(LegendreImmersion { lambda, mu, nu })
    }

    pub fn truncation(&self) -> usize {
        self.mu.truncation()
    }

    /// `dμ - Σ (ν_i dλ_i - λ_i dν_i)`; truncation `K - 1`.
    pub fn legendre_residual(&self) -> [Jet2; 2] {
        let w = darboux_form(&self.lambda, &self.nu);
        [0, 1].map(|i| {
            let v = if i == 0 { Var::X } else { Var::Y };
            &self.mu.derive(v) - &w[i]
        })
    }
}

/// Function on `(u1, u2, s1, s2)` of the form `base + s1·slope[0] + s2·slope[1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineInS {
    pub base: Jet2,
    pub slope: [Jet2; 2],
}

impl AffineInS {
    fn truncation(&self) -> usize {
        self.slope.iter().map(Jet2::truncation).fold(self.base.truncation(), usize::min)
    }

    fn truncate(&self, k: usize) -> Self {
        let k = k.min(self.truncation());
        AffineInS { base: self.base.truncate(k), slope: [self.slope[0].truncate(k), self.slope[1].truncate(k)] }
    }

    fn derive_u(&self, w: Var) -> Self {
        AffineInS { base: self.base.derive(w), slope: [self.slope[0].derive(w), self.slope[1].derive(w)] }
    }

    fn times(&self, f: &Jet2) -> Self {
        let k = self.truncation().min(f.truncation());
        let f = f.truncate(k);
        let s = self.truncate(k);
        AffineInS { base: &s.base * &f, slope: [&s.slope[0] * &f, &s.slope[1] * &f] }
    }

    fn sub(&self, o: &Self) -> Self {
        let k = self.truncation().min(o.truncation());
        let (a, b) = (self.truncate(k), o.truncate(k));
        AffineInS { base: &a.base - &b.base, slope: [&a.slope[0] - &b.slope[0], &a.slope[1] - &b.slope[1]] }
    }

    fn neg(&self) -> Self {
        AffineInS { base: -&self.base, slope: [-&self.slope[0], -&self.slope[1]] }
    }

    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.slope.iter().all(Jet2::is_zero)
    }

    /// Differential as coefficients of `du1, du2, ds1, ds2`.
    fn differential(&self) -> [AffineInS; 4] {
        let ds = |j: usize| {
            let z = Jet2::zero(self.slope[j].truncation());
            AffineInS { base: self.slope[j].clone(), slope: [z.clone(), z] }
        };
        [self.derive_u(Var::X), self.derive_u(Var::Y), ds(0), ds(1)]
    }
}

/// Tangent map `(Λ, M, N) = (λ, μ, ν) + Σ s_j ∂_j (λ, μ, ν)` with a check of
/// `dM = Σ (ν_i dΛ_i - λ_i dN_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SurfaceTangentMap {
    /// `Λ1, Λ2, M, N1, N2`.
    pub components: Vec<AffineInS>,
    /// Residual coefficients of `du1, du2, ds1, ds2`.
    pub residual: [AffineInS; 4],
    /// Total order in `(u1, u2)` to which the residual is known.
    pub verified_order: usize,
}

impl SurfaceTangentMap {
    pub fn is_frontal(&self) -> bool {
        self.residual.iter().all(AffineInS::is_zero)
    }
}

pub fn surface_tangent_map(f: &LegendreImmersion) -> Result<SurfaceTangentMap, SurfaceError> {
    let k = f.truncation();
    if k < 3 {
        return Err(SurfaceError::TruncationTooLow(k, 3));
    }
    for r in f.legendre_residual() {
        if let Some(((i, j), _)) = r.terms().next() {
            return Err(SurfaceError::NotLegendre { exps: (i, j) });
        }
    }
    let lift = |x: &Jet2| AffineInS { base: x.clone(), slope: [x.derive(Var::X), x.derive(Var::Y)] };
    let parts = [&f.lambda[0], &f.lambda[1], &f.mu, &f.nu[0], &f.nu[1]];
    let components: Vec<AffineInS> = parts.iter().map(|x| lift(x)).collect();
    let d: Vec<[AffineInS; 4]> = components.iter().map(AffineInS::differential).collect();
    let residual = [0, 1, 2, 3].map(|c| {
        let mut r = d[2][c].clone();
        for i in 0..2 {
            r = r.sub(&d[i][c].times(&f.nu[i]));
            r = r.sub(&d[3 + i][c].times(&f.lambda[i]).neg());
        }
        r
    });
    let verified_order = residual.iter().map(AffineInS::truncation).min().unwrap_or(0);
    Ok(SurfaceTangentMap { components, residual, verified_order })
}

/// Real symmetric 3x3 matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymMatrix3 {
    pub a11: Rational,
    pub a12: Rational,
    pub a13: Rational,
    pub a22: Rational,
    pub a23: Rational,
    pub a33: Rational,
}

impl SymMatrix3 {
    pub fn new(entries: [Rational; 6]) -> Self {
        let [a11, a12, a13, a22, a23, a33] = entries;
        SymMatrix3 { a11, a12, a13, a22, a23, a33 }
    }

    pub fn diag(d: [Rational; 3]) -> Self {
        let [a, b, c] = d;
        let z = Rational::zero;
        SymMatrix3 { a11: a, a12: z(), a13: z(), a22: b, a23: z(), a33: c }
    }

    /// `v w^T + w v^T`.
    pub fn sym_outer(v: &[Rational; 3], w: &[Rational; 3]) -> Self {
        let e = |i: usize, j: usize| &v[i] * &w[j] + &v[j] * &w[i];
        SymMatrix3 { a11: e(0, 0), a12: e(0, 1), a13: e(0, 2), a22: e(1, 1), a23: e(1, 2), a33: e(2, 2) }
    }

    pub fn outer(v: &[Rational; 3]) -> Self {
        Self::sym_outer(v, v).scale(&Rational::new(1.into(), 2.into()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        SymMatrix3::new(self.entries().map(|x| x * c))
    }

    pub fn entries(&self) -> [Rational; 6] {
        [self.a11.clone(), self.a12.clone(), self.a13.clone(), self.a22.clone(), self.a23.clone(), self.a33.clone()]
    }

    pub fn rows(&self) -> [[Rational; 3]; 3] {
        [
            [self.a11.clone(), self.a12.clone(), self.a13.clone()],
            [self.a12.clone(), self.a22.clone(), self.a23.clone()],
            [self.a13.clone(), self.a23.clone(), self.a33.clone()],
        ]
    }

    pub fn is_zero(&self) -> bool {
        self.entries().iter().all(Zero::is_zero)
    }

    pub fn det(&self) -> Rational {
        let m = self.rows();
        &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
    }

    /// Sum of principal 2x2 minors: the second characteristic coefficient.
    pub fn principal_minor_sum(&self) -> Rational {
        &self.a11 * &self.a22 - &self.a12 * &self.a12 + &self.a11 * &self.a33 - &self.a13 * &self.a13 + &self.a22 * &self.a33
            - &self.a23 * &self.a23
    }
}

impl std::ops::Add for &SymMatrix3 {
    type Output = SymMatrix3;
    fn add(self, o: &SymMatrix3) -> SymMatrix3 {
        let (a, b) = (self.entries(), o.entries());
        SymMatrix3::new([0, 1, 2, 3, 4, 5].map(|i| &a[i] + &b[i]))
    }
}

/// Position of `P(A)` relative to the Veronese surface `S = P{rank A = 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VeroneseStratum {
    OnS,
    /// Rank 2 with one positive and one negative eigenvalue.
    InTanS,
    /// Rank 2 and semidefinite.
    InSecOnly,
    Outside,
}

impl fmt::Display for VeroneseStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VeroneseStratum::OnS => "on S",
            VeroneseStratum::InTanS => "in Tan(S)",
            VeroneseStratum::InSecOnly => "in Sec(S) \\ Tan(S)",
            VeroneseStratum::Outside => "outside Sec(S)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("the zero matrix does not define a projective point")]
pub struct ZeroMatrix;

/// Rank and, for rank 2, the sign of the product of the nonzero eigenvalues.
pub fn veronese_membership(a: &SymMatrix3) -> Result<VeroneseStratum, ZeroMatrix> {
    if a.is_zero() {
        return Err(ZeroMatrix);
    }
    if !a.det().is_zero() {
        return Ok(VeroneseStratum::Outside);
    }
    // with det = 0 the characteristic polynomial is x(x^2 - c1 x + c2),
    // so c2 is the product of the two remaining eigenvalues
    let c2 = a.principal_minor_sum();
    Ok(if c2.is_zero() {
        VeroneseStratum::OnS
    } else if c2.is_negative() {
        VeroneseStratum::InTanS
    } else {
        VeroneseStratum::InSecOnly
    })
}
