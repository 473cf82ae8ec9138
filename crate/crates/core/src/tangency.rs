//! Tangent maps of curve germs and their frontality data.
//!
//! `Tan(γ)(s, t) = γ(t) + s·γ′(t)/t^{a_1 − 1}` is built as a list of
//! two-variable jets in `(s, t)` (`Var::X = s`, `Var::Y = t`). Its Grassmann
//! lift is given by Wronskian quotients, and membership of `df_i` in the
//! Jacobi module of `(f_1, f_2)` is certified coefficient-wise.

use std::fmt;

use num_traits::{One, Zero};

use crate::curves::{curve_type, CurveGerm, TypeSequence};
use crate::jets::{Jet1, Jet2, JetError, Var, MAX_JET2_TRUNCATION};
use crate::linalg;
use crate::poly::{MPoly, Poly};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum TangencyError {
    #[error("not of finite type up to truncation {0}")]
    NotFiniteType(usize),
    #[error("derivative of component {component} is not divisible by t^{power}")]
    Divisibility { component: usize, power: usize },
    #[error("W_12 vanishes up to truncation {0}")]
    W12Vanishes(usize),
    #[error("not frontal up to truncation {truncation}: component {component} has no Wronskian quotient")]
    NotFrontalUpTo { truncation: usize, component: usize },
    #[error("lift identity fails for component {0}")]
    LiftCheckFailed(usize),
    #[error("type {0} matches none of the generating-family patterns")]
    PatternMismatch(TypeSequence),
    #[error("generating-family system is singular")]
    SingularSystem,
    #[error("generating-family solution for x{0} is not a polynomial")]
    NonPolynomial(usize),
    #[error(transparent)]
    Jet(#[from] JetError),
}

/// Lift coefficients for component `index` (1-based): `df_i = p·df_1 + q·df_2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftPair {
    pub index: usize,
    pub p: Jet1,
    pub q: Jet1,
}

/// Tangent map germ together with its source curve and Grassmann lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentMapGerm {
    pub components: Vec<Jet2>,
    pub source: CurveGerm,
    pub source_type: TypeSequence,
    /// `Ok` holds `(P_i, Q_i)` for `i = 3..=N+1`.
    pub lift_coefficients: Result<Vec<LiftPair>, TangencyError>,
}

/// Build `Tan(γ)` with frame divisor `t^{a_1 − 1}`.
pub fn tangent_map(g: &CurveGerm) -> Result<TangentMapGerm, TangencyError> {
    let a = curve_type(g).finite().ok_or(TangencyError::NotFiniteType(g.truncation()))?;
    let a1 = a.a(1);
    let kf = (g.truncation() + 1 - a1).min(MAX_JET2_TRUNCATION);
    let mut components = Vec::with_capacity(g.ambient_dim());
    for (i, x) in g.components().iter().enumerate() {
        let v = x
            .derive()
            .shift_down(a1 - 1)
            .map_err(|_| TangencyError::Divisibility { component: i + 1, power: a1 - 1 })?;
        let base = Jet2::from_jet1(&x.truncate(kf), Var::Y);
        let slope = Jet2::from_jet1(&v.truncate(kf - 1), Var::Y).mul_var(Var::X);
        components.push(&base + &slope);
    }
    let lift_coefficients = wronskian_lift(g);
    Ok(TangentMapGerm { components, source: g.clone(), source_type: a, lift_coefficients })
}

/// `W_ij = x_i′x_j″ − x_i″x_j′` for all pairs, at truncation `K − 2`.
pub fn wronskian(g: &CurveGerm, i: usize, j: usize) -> Jet1 {
    let k = g.truncation() - 2;
    let xi = &g.components()[i - 1];
    let xj = &g.components()[j - 1];
    let (d1i, d2i) = (xi.derive().truncate(k), xi.derive().derive());
    let (d1j, d2j) = (xj.derive().truncate(k), xj.derive().derive());
    &(&d1i * &d2j) - &(&d2i * &d1j)
}

fn wronskian_lift(g: &CurveGerm) -> Result<Vec<LiftPair>, TangencyError> {
    let n = g.ambient_dim();
    if n <= 2 {
        return Ok(Vec::new());
    }
    let w12 = wronskian(g, 1, 2);
    if w12.is_zero() {
        return Err(TangencyError::W12Vanishes(g.truncation()));
    }
    (3..=n)
        .map(|i| {
            let fail = |_| TangencyError::NotFrontalUpTo { truncation: g.truncation(), component: i };
            let p = wronskian(g, i, 2).divide(&w12).map_err(fail)?;
            let q = wronskian(g, 1, i).divide(&w12).map_err(fail)?;
            Ok(LiftPair { index: i, p, q })
        })
        .collect()
}

/// Lift coefficients `P_i = W_{i2}/W_{12}`, `Q_i = W_{1i}/W_{12}`.
pub fn grassmann_lift(t: &TangentMapGerm) -> Result<Vec<LiftPair>, TangencyError> {
    t.lift_coefficients.clone()
}

/// Certificate that `dh = Σ p_j dg_j` up to `verified_order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpeningCertificate {
    pub multipliers: Vec<Jet2>,
    pub verified_order: usize,
}

impl OpeningCertificate {
    /// Re-verify by substitution.
    pub fn verify(&self, g: &[Jet2], h: &Jet2) -> bool {
        one_form_residual(g, h, &self.multipliers, self.verified_order)
            .is_some_and(|r| r.iter().all(Jet2::is_zero))
    }
}

/// `(∂_x, ∂_y)` components of `dh − Σ p_j dg_j`, truncated at `order`.
/// `None` if some input is not known to that order.
fn one_form_residual(g: &[Jet2], h: &Jet2, p: &[Jet2], order: usize) -> Option<[Jet2; 2]> {
    if g.len() != p.len() {
        return None;
    }
    let known = g.iter().chain(std::iter::once(h)).all(|x| x.truncation() > order)
        && p.iter().all(|x| x.truncation() >= order);
    if !known {
        return None;
    }
    let res = |v: Var| {
        let mut acc = h.derive(v).truncate(order);
        for (gj, pj) in g.iter().zip(p) {
            acc = &acc - &(&pj.truncate(order) * &gj.derive(v).truncate(order));
        }
        acc
    };
    Some([res(Var::X), res(Var::Y)])
}

/// Which coefficient equation of `dh = Σ p_j dg_j` is meant: the coefficient
/// of `x^i y^j` in the `d<var>` component.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoefficientEquation {
    pub var: Var,
    pub exps: (usize, usize),
}

impl fmt::Display for CoefficientEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v = match self.var {
            Var::X => "dx",
            Var::Y => "dy",
        };
        write!(f, "{v} coefficient of x^{} y^{}", self.exps.0, self.exps.1)
    }
}

/// Proof that `dh ∉ J_g`: a rational combination of coefficient equations
/// whose left sides cancel and whose right side does not.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Refutation {
    /// First equation (ordered by total degree) that made the system inconsistent.
    pub first_inconsistent: CoefficientEquation,
    pub combination: Vec<(CoefficientEquation, Rational)>,
    pub order: usize,
}

impl Refutation {
    /// Re-check the combination against the data.
    pub fn verify(&self, g: &[Jet2], h: &Jet2) -> bool {
        let (eqs, unknowns) = membership_layout(g.len(), self.order);
        let sys = membership_system(g, h, &eqs, &unknowns);
        let mut lhs = vec![Rational::zero(); unknowns.len()];
        let mut rhs = Rational::zero();
        for (label, y) in &self.combination {
            let Some(r) = eqs.iter().position(|e| e == label) else { return false };
            for (acc, a) in lhs.iter_mut().zip(&sys.0[r]) {
                *acc += y * a;
            }
            rhs += y * &sys.1[r];
        }
        lhs.iter().all(Zero::is_zero) && !rhs.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Membership {
    Certified(OpeningCertificate),
    Refuted(Refutation),
}

fn monomials_up_to(k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=k).flat_map(|n| (0..=n).map(move |j| (n - j, j)))
}

type Layout = (Vec<CoefficientEquation>, Vec<(usize, (usize, usize))>);

fn membership_layout(m: usize, order: usize) -> Layout {
    let mut eqs = Vec::new();
    for n in 0..=order {
        for var in [Var::X, Var::Y] {
            for j in 0..=n {
                eqs.push(CoefficientEquation { var, exps: (n - j, j) });
            }
        }
    }
    let unknowns = (0..m).flat_map(|g| monomials_up_to(order).map(move |e| (g, e))).collect();
    (eqs, unknowns)
}

fn membership_system(
    g: &[Jet2],
    h: &Jet2,
    eqs: &[CoefficientEquation],
    unknowns: &[(usize, (usize, usize))],
) -> (Vec<Vec<Rational>>, Vec<Rational>) {
    let dg: Vec<[Jet2; 2]> = g.iter().map(|x| [x.derive(Var::X), x.derive(Var::Y)]).collect();
    let dh = [h.derive(Var::X), h.derive(Var::Y)];
    let slot = |v: Var| if v == Var::X { 0 } else { 1 };
    let mut a = Vec::with_capacity(eqs.len());
    let mut b = Vec::with_capacity(eqs.len());
    for e in eqs {
        let (i, j) = e.exps;
        let row = unknowns
            .iter()
            .map(|&(gi, (c, d))| {
                if c <= i && d <= j {
                    dg[gi][slot(e.var)].coeff(i - c, j - d).clone()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        a.push(row);
        b.push(dh[slot(e.var)].coeff(i, j).clone());
    }
    (a, b)
}

/// Solve `dh = Σ p_j dg_j` coefficient-wise up to total degree `order`.
///
/// The order is capped so that every coefficient involved is known
/// (`order < truncation` of `h` and of each `g_j`). Multiplier coefficients
/// left free by the system are set to zero.
pub fn jacobi_membership(g: &[Jet2], h: &Jet2, order: usize) -> Membership {
    let cap = g.iter().chain(std::iter::once(h)).map(|x| x.truncation()).min().unwrap_or(0);
    let order = order.min(cap.saturating_sub(1));
    let (eqs, unknowns) = membership_layout(g.len(), order);
    let (a, b) = membership_system(g, h, &eqs, &unknowns);
    match linalg::solve(&a, &b) {
        Ok(x) => {
            let mut multipliers = vec![Jet2::zero(order); g.len()];
            let mut terms: Vec<Vec<((usize, usize), Rational)>> = vec![Vec::new(); g.len()];
            for (&(gi, e), c) in unknowns.iter().zip(x) {
                if !c.is_zero() {
                    terms[gi].push((e, c));
                }
            }
            for (m, t) in multipliers.iter_mut().zip(terms) {
                *m = Jet2::from_terms(&t, order).expect("within order");
            }
            Membership::Certified(OpeningCertificate { multipliers, verified_order: order })
        }
        Err(w) => {
            let combination = w
                .multipliers
                .iter()
                .enumerate()
                .filter(|(_, y)| !y.is_zero())
                .map(|(r, y)| (eqs[r], y.clone()))
                .collect();
            Membership::Refuted(Refutation { first_inconsistent: eqs[w.equation], combination, order })
        }
    }
}

/// Certificates `df_i ∈ J_{(f_1, f_2)}` for `i >= 3`, with the Wronskian
/// quotients as multipliers. Each certificate is re-verified before return.
pub fn opening_check(t: &TangentMapGerm) -> Result<Vec<OpeningCertificate>, TangencyError> {
    let lift = grassmann_lift(t)?;
    let f = &t.components;
    let mut out = Vec::with_capacity(lift.len());
    for pair in lift {
        let p = Jet2::from_jet1(&pair.p, Var::Y);
        let q = Jet2::from_jet1(&pair.q, Var::Y);
        let order = (f[0].truncation() - 1).min(p.truncation()).min(q.truncation());
        let cert = OpeningCertificate { multipliers: vec![p.truncate(order), q.truncate(order)], verified_order: order };
        if !cert.verify(&f[..2], &f[pair.index - 1]) {
            return Err(TangencyError::LiftCheckFailed(pair.index));
        }
        out.push(cert);
    }
    Ok(out)
}

/// Morin map `f = (F, G, λ, μ)` with its versal-opening generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MorinOpening {
    pub k: usize,
    pub m: usize,
    /// Variable order: `t`, `lam1..lam{k-1}`, then `mu{i}_{j}` row by row.
    pub vars: Vec<String>,
    pub f: MPoly,
    pub g: Vec<MPoly>,
    /// `(label, polynomial)`, starting with the constant `1`.
    pub generators: Vec<(String, MPoly)>,
}

impl MorinOpening {
    /// Components of the Morin map: `F, G_1..G_m, λ_1.., μ_11..`.
    pub fn map_components(&self) -> Vec<MPoly> {
        let mut out = vec![self.f.clone()];
        out.extend(self.g.iter().cloned());
        out.extend((1..self.vars.len()).map(|i| MPoly::var(&self.vars, i)));
        out
    }
}

/// `F = t^{k+1} + Σ_{j<k} λ_j t^j`, `G_i = Σ_{j<=k} μ_ij t^j`, and the
/// generators `1, F_(1..k), G_i(1..k−1)` with `H_(ℓ) = ∫_0^t s^ℓ H ds`.
pub fn morin_versal_opening(k: usize, m: usize) -> MorinOpening {
    assert!(k >= 1, "Morin openings need k >= 1");
    let mut vars = vec!["t".to_string()];
    vars.extend((1..k).map(|j| format!("lam{j}")));
    for i in 1..=m {
        vars.extend((1..=k).map(|j| format!("mu{i}_{j}")));
    }
    let nv = vars.len();
    let t_pow = |d: usize, extra: Option<usize>| {
        let mut e = vec![0u32; nv];
        e[0] = d as u32;
        if let Some(v) = extra {
            e[v] = 1;
        }
        MPoly::term(&vars, e, Rational::one())
    };
    let mut f = t_pow(k + 1, None);
    for j in 1..k {
        f = &f + &t_pow(j, Some(j));
    }
    let g: Vec<MPoly> = (1..=m)
        .map(|i| {
            (1..=k).fold(MPoly::zero(&vars), |acc, j| &acc + &t_pow(j, Some(k - 1 + (i - 1) * k + j)))
        })
        .collect();
    let mut generators = vec![("1".to_string(), MPoly::term(&vars, vec![0; nv], Rational::one()))];
    for l in 1..=k {
        generators.push((format!("F({l})"), f.integrate_weighted(0, l as u32)));
    }
    for (i, gi) in g.iter().enumerate() {
        for l in 1..k {
            generators.push((format!("G{}({l})", i + 1), gi.integrate_weighted(0, l as u32)));
        }
    }
    MorinOpening { k, m, vars, f, g, generators }
}

/// Which of the generating-family patterns a type matches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyPattern {
    /// `(1, 2, …, N, N + r)`
    I { n: usize, r: usize },
    /// `(1, …, i, i + 2, …, N + 2)`, `0 <= i <= N − 1`
    II { n: usize, i: usize },
    /// `(3, 4, …, N + 3)`
    III { n: usize },
}

impl FamilyPattern {
    pub fn detect(a: &TypeSequence) -> Option<Self> {
        let e = a.entries();
        let n = e.len().checked_sub(1).filter(|&n| n >= 1)?;
        if e[..n].iter().enumerate().all(|(j, &x)| x == j + 1) {
            return Some(FamilyPattern::I { n, r: e[n] - n });
        }
        if e.iter().enumerate().all(|(j, &x)| x == j + 3) {
            return Some(FamilyPattern::III { n });
        }
        (0..n)
            .find(|&i| e.iter().enumerate().all(|(j, &x)| x == if j < i { j + 1 } else { j + 2 }))
            .map(|i| FamilyPattern::II { n, i })
    }
}

impl fmt::Display for FamilyPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilyPattern::I { n, r } => write!(f, "I (N={n}, r={r})"),
            FamilyPattern::II { n, i } => write!(f, "II (N={n}, i={i})"),
            FamilyPattern::III { n } => write!(f, "III (N={n})"),
        }
    }
}

/// Solved unknown `x_index = constant(t) + x_1 · linear(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySolution {
    pub index: usize,
    pub constant: Poly,
    pub linear: Poly,
}

impl FamilySolution {
    /// As a polynomial in `(t, x1)`.
    pub fn to_mpoly(&self) -> MPoly {
        let vars = family_vars();
        let mut p = MPoly::zero(&vars);
        for (d, c) in self.constant.coeffs().iter().enumerate() {
            p = &p + &MPoly::term(&vars, vec![d as u32, 0], c.clone());
        }
        for (d, c) in self.linear.coeffs().iter().enumerate() {
            p = &p + &MPoly::term(&vars, vec![d as u32, 1], c.clone());
        }
        p
    }
}

impl fmt::Display for FamilySolution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{} = {}", self.index, self.to_mpoly())
    }
}

fn family_vars() -> Vec<String> {
    vec!["t".to_string(), "x1".to_string()]
}

/// Tangent variety from the generating family
/// `F(t, x) = t^{a_{N+1}} + Σ_{i<=N} x_i t^{a_{N+1} − a_i} + x_{N+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratingFamily {
    pub curve_type: TypeSequence,
    pub pattern: FamilyPattern,
    /// Solutions for `x_2..x_{N+1}`.
    pub solutions: Vec<FamilySolution>,
}

impl GeneratingFamily {
    /// Parametrization `(x_1, x_2(t, x_1), …)` in variables `(t, x1)`.
    pub fn parametrization(&self) -> Vec<MPoly> {
        let vars = family_vars();
        let mut out = vec![MPoly::var(&vars, 1)];
        out.extend(self.solutions.iter().map(FamilySolution::to_mpoly));
        out
    }

    /// `∂_t^k F` evaluated on the solution, as a polynomial in `(t, x1)`.
    pub fn residual(&self, k: usize) -> MPoly {
        let vars = family_vars();
        let a = self.curve_type.entries();
        let top = *a.last().expect("nonempty");
        let params = self.parametrization();
        let mut acc = MPoly::term(&vars, vec![top as u32, 0], Rational::one());
        for (x, &ai) in params.iter().zip(a) {
            acc = &acc + &(x * &MPoly::term(&vars, vec![(top - ai) as u32, 0], Rational::one()));
        }
        for _ in 0..k {
            acc = acc.derive(0);
        }
        acc
    }
}

/// Solve `F = F_t = … = ∂_t^{N−1} F = 0` for `x_2..x_{N+1}` by Cramer's rule
/// over ℚ[t] (determinants by fraction-free elimination), then cancel the
/// common power of `t`.
pub fn generating_family_tangent(a: &TypeSequence) -> Result<GeneratingFamily, TangencyError> {
    let pattern = FamilyPattern::detect(a).ok_or_else(|| TangencyError::PatternMismatch(a.clone()))?;
    let e = a.entries();
    let n = e.len() - 1;
    let top = e[n];
    let exps: Vec<usize> = e.iter().map(|&ai| top - ai).collect();
    let dk = |d: usize, k: usize| -> Poly {
        // ∂_t^k t^d
        if k > d {
            return Poly::zero();
        }
        let c: usize = (d - k + 1..=d).product();
        Poly::monomial(Rational::from_integer(c.into()), d - k)
    };
    let matrix: Vec<Vec<Poly>> = (0..n).map(|k| (1..=n).map(|j| dk(exps[j], k)).collect()).collect();
    let rhs_const: Vec<Poly> = (0..n).map(|k| -&dk(top, k)).collect();
    let rhs_lin: Vec<Poly> = (0..n).map(|k| -&dk(exps[0], k)).collect();
    let det = poly_det(&matrix);
    if det.is_zero() {
        return Err(TangencyError::SingularSystem);
    }
    let replaced = |col: usize, rhs: &[Poly]| -> Poly {
        let m: Vec<Vec<Poly>> = matrix
            .iter()
            .zip(rhs)
            .map(|(row, r)| row.iter().enumerate().map(|(c, x)| if c == col { r.clone() } else { x.clone() }).collect())
            .collect();
        poly_det(&m)
    };
    let mut solutions = Vec::with_capacity(n);
    for col in 0..n {
        let index = col + 2;
        let constant = replaced(col, &rhs_const).exact_div(&det).ok_or(TangencyError::NonPolynomial(index))?;
        let linear = replaced(col, &rhs_lin).exact_div(&det).ok_or(TangencyError::NonPolynomial(index))?;
        solutions.push(FamilySolution { index, constant, linear });
    }
    Ok(GeneratingFamily { curve_type: a.clone(), pattern, solutions })
}

/// Determinant over ℚ[t] by Bareiss elimination (all divisions exact).
fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::constant(Rational::one());
    }
    let mut a = m.to_vec();
    let mut negate = false;
    let mut prev = Poly::constant(Rational::one());
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -&d
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn monomial_curve(a: &[usize], k: usize) -> CurveGerm {
        CurveGerm::new(a.iter().map(|&d| Jet1::monomial(rat(1, 1), d, k).unwrap()).collect()).unwrap()
    }

    fn st(terms: &[((usize, usize), i64)], k: usize) -> Jet2 {
        Jet2::from_int_terms(terms, k)
    }

    #[test]
    fn cuspidal_edge_tangent_map() {
        let t = tangent_map(&monomial_curve(&[1, 2, 3], 8)).unwrap();
        let k = t.components[0].truncation();
        assert_eq!(t.components[0], st(&[((0, 1), 1), ((1, 0), 1)], k));
        assert_eq!(t.components[1], st(&[((0, 2), 1), ((1, 1), 2)], k));
        assert_eq!(t.components[2], st(&[((0, 3), 1), ((1, 2), 3)], k));
    }

    #[test]
    fn swallowtail_tangent_map() {
        let t = tangent_map(&monomial_curve(&[2, 3, 4], 9)).unwrap();
        let k = t.components[0].truncation();
        assert_eq!(t.components[0], st(&[((0, 2), 1), ((1, 0), 2)], k));
        assert_eq!(t.components[1], st(&[((0, 3), 1), ((1, 1), 3)], k));
        assert_eq!(t.components[2], st(&[((0, 4), 1), ((1, 2), 4)], k));
    }

    #[test]
    fn plane_curve_has_no_lift_coefficients() {
        let t = tangent_map(&monomial_curve(&[1, 2], 6)).unwrap();
        assert_eq!(t.components[1], st(&[((0, 2), 1), ((1, 1), 2)], 6));
        assert_eq!(grassmann_lift(&t).unwrap(), vec![]);
        assert_eq!(opening_check(&t).unwrap(), vec![]);
    }

    #[test]
    fn wronskian_quotients_of_cuspidal_edge() {
        let t = tangent_map(&monomial_curve(&[1, 2, 3], 8)).unwrap();
        let lift = grassmann_lift(&t).unwrap();
        let p = &lift[0].p;
        let q = &lift[0].q;
        // P_3 = -3t², Q_3 = 3t
        assert_eq!(p, &Jet1::monomial(rat(-3, 1), 2, p.truncation()).unwrap());
        assert_eq!(q, &Jet1::monomial(rat(3, 1), 1, q.truncation()).unwrap());
        let t = tangent_map(&monomial_curve(&[1, 3, 4], 10)).unwrap();
        let lift = grassmann_lift(&t).unwrap();
        assert_eq!(lift[0].p.order(), crate::ExtOrder::Finite(3));
        assert_eq!(lift[0].q.order(), crate::ExtOrder::Finite(1));
    }

    #[test]
    fn misaligned_chart_is_not_frontal() {
        // type (2,3,4) but the first two coordinates are not the osculating ones
        let g = CurveGerm::new(vec![
            Jet1::monomial(rat(1, 1), 2, 10).unwrap(),
            Jet1::monomial(rat(1, 1), 4, 10).unwrap(),
            Jet1::monomial(rat(1, 1), 3, 10).unwrap(),
        ])
        .unwrap();
        let t = tangent_map(&g).unwrap();
        assert_eq!(
            grassmann_lift(&t),
            Err(TangencyError::NotFrontalUpTo { truncation: 10, component: 3 })
        );
    }

    #[test]
    fn openings_of_normal_forms() {
        let t = tangent_map(&monomial_curve(&[1, 2, 3], 10)).unwrap();
        let certs = opening_check(&t).unwrap();
        assert_eq!(certs.len(), 1);
        let t = tangent_map(&monomial_curve(&[2, 3, 4, 5], 12)).unwrap();
        let certs = opening_check(&t).unwrap();
        assert_eq!(certs.len(), 2);
        for (c, f) in certs.iter().zip(&t.components[2..]) {
            assert!(c.verify(&t.components[..2], f));
        }
    }

    #[test]
    fn membership_examples() {
        // x = u, y = t
        let k = 8;
        let g = vec![st(&[((1, 0), 1)], k), st(&[((0, 2), 1), ((1, 1), 1)], k)];
        let h = Jet2::from_terms(&[((0, 3), rat(2, 3)), ((1, 2), rat(1, 2))], k).unwrap();
        match jacobi_membership(&g, &h, 6) {
            Membership::Certified(c) => {
                assert_eq!(c.multipliers[0], Jet2::from_terms(&[((0, 2), rat(-1, 2))], 6).unwrap());
                assert_eq!(c.multipliers[1], st(&[((0, 1), 1)], 6));
                assert!(c.verify(&g, &h));
            }
            Membership::Refuted(r) => panic!("unexpected refutation {r:?}"),
        }
        let h = st(&[((0, 1), 1)], k);
        match jacobi_membership(&g, &h, 6) {
            Membership::Refuted(r) => {
                assert_eq!(r.first_inconsistent, CoefficientEquation { var: Var::Y, exps: (0, 0) });
                assert!(r.verify(&g, &h));
            }
            Membership::Certified(_) => panic!("t is not in the ramification module"),
        }
        match jacobi_membership(&g, &g[0], 6) {
            Membership::Certified(c) => {
                assert_eq!(c.multipliers[0], Jet2::one(6));
                assert!(c.multipliers[1].is_zero());
            }
            Membership::Refuted(_) => panic!("g1 is trivially a member"),
        }
    }

    #[test]
    fn morin_examples() {
        let o = morin_versal_opening(2, 0);
        assert_eq!(o.f.to_string(), "t^3 + t*lam1");
        let gens: Vec<String> = o.generators.iter().map(|(l, p)| format!("{l}={p}")).collect();
        assert_eq!(gens, vec!["1=1", "F(1)=1/5*t^5 + 1/3*t^3*lam1", "F(2)=1/6*t^6 + 1/4*t^4*lam1"]);
        let o = morin_versal_opening(1, 0);
        assert_eq!(o.generators.len(), 2);
        assert_eq!(o.generators[1].1.to_string(), "1/4*t^4");
        let o = morin_versal_opening(2, 1);
        assert_eq!(o.g[0].to_string(), "t^2*mu1_2 + t*mu1_1");
        assert_eq!(o.generators[3].1.to_string(), "1/4*t^4*mu1_2 + 1/3*t^3*mu1_1");
        for k in 1..=4 {
            for m in 0..=2 {
                assert_eq!(morin_versal_opening(k, m).generators.len(), 1 + k + (k - 1) * m);
            }
        }
    }

    #[test]
    fn morin_generator_membership() {
        // k = 2, m = 0: f = (t³ + λt, λ) with x = t, y = λ. The integral of
        // s^l F(s) is not in the ramification module, while the integral of
        // s^l F_t(s) is.
        let k = 10;
        let f1 = st(&[((3, 0), 1), ((1, 1), 1)], k);
        let f2 = st(&[((0, 1), 1)], k);
        let g = [f1.clone(), f2.clone()];
        for l in 1..=2 {
            let literal = f1.truncate(k - l - 1).integrate_weighted(Var::X, l);
            match jacobi_membership(&g, &literal, 8) {
                Membership::Refuted(r) => assert!(r.verify(&g, &literal)),
                Membership::Certified(_) => panic!("F({l}) unexpectedly certified"),
            }
            let ft = f1.derive(Var::X);
            let h = ft.truncate(k - l - 1).integrate_weighted(Var::X, l);
            match jacobi_membership(&g, &h, 8) {
                Membership::Certified(c) => assert!(c.verify(&g, &h)),
                Membership::Refuted(r) => panic!("derivative form refuted: {r:?}"),
            }
        }
    }

    #[test]
    fn family_1245() {
        let a = TypeSequence::new(vec![1, 2, 4, 5]).unwrap();
        let fam = generating_family_tangent(&a).unwrap();
        let shown: Vec<String> = fam.solutions.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["x2 = -10/3*t^2 - 2*t*x1", "x3 = 5*t^4 + 2*t^3*x1", "x4 = -8/3*t^5 - t^4*x1"]);
        for k in 0..3 {
            assert!(fam.residual(k).is_zero(), "derivative {k} of F does not vanish");
        }
    }

    #[test]
    fn family_123_and_patterns() {
        let a = TypeSequence::new(vec![1, 2, 3]).unwrap();
        let fam = generating_family_tangent(&a).unwrap();
        let shown: Vec<String> = fam.solutions.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["x2 = -3*t^2 - 2*t*x1", "x3 = 2*t^3 + t^2*x1"]);
        let bad = TypeSequence::new(vec![1, 3, 5, 7]).unwrap();
        assert_eq!(generating_family_tangent(&bad), Err(TangencyError::PatternMismatch(bad.clone())));
        let p = |v: Vec<usize>| FamilyPattern::detect(&TypeSequence::new(v).unwrap());
        assert_eq!(p(vec![2, 3, 4, 5]), Some(FamilyPattern::II { n: 3, i: 0 }));
        assert_eq!(p(vec![3, 4, 5]), Some(FamilyPattern::III { n: 2 }));
        assert_eq!(p(vec![1, 2, 3, 7]), Some(FamilyPattern::I { n: 3, r: 4 }));
    }
}
