//! Curve germs in an affine chart of ℝP^{N+1}: type, normalization and the
//! osculating flag lift.
//!
//! A curve germ is a list of `N + 1` one-variable jets, all vanishing at
//! `t = 0` and sharing one truncation order. Its type `(a_1, …, a_{N+1})`
//! records the derivative counts at which the rank of
//! `(γ′(0), …, γ^{(k)}(0))` increases.

use std::fmt;

use num_traits::Zero;

use crate::jets::{Jet1, JetError};
use crate::linalg::{self, IncrementalRank};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("a curve germ needs at least one component")]
    Empty,
    #[error("component {index} has truncation {found}, expected {expected}")]
    MixedTruncation { index: usize, found: usize, expected: usize },
    #[error("component {0} does not vanish at t = 0")]
    NotCentered(usize),
    #[error("not of finite type up to truncation {0}")]
    NotFiniteType(usize),
    #[error("homogeneous lift vanishes at t = 0")]
    LiftVanishes,
    #[error("type entries must be positive and strictly increasing: {0:?}")]
    BadType(Vec<usize>),
    #[error(transparent)]
    Jet(#[from] JetError),
}

/// Strictly increasing sequence of positive integers `(a_1, …, a_m)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeSequence(Vec<usize>);

impl TypeSequence {
    pub fn new(entries: Vec<usize>) -> Result<Self, CurveError> {
        let ok = entries.first().is_some_and(|&a| a >= 1) && entries.windows(2).all(|w| w[0] < w[1]);
        if ok {
            Ok(TypeSequence(entries))
        } else {
            Err(CurveError::BadType(entries))
        }
    }

    /// The ordinary type `(1, 2, …, m)`.
    pub fn ordinary(m: usize) -> Self {
        TypeSequence((1..=m).collect())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `a_i` with the 1-based index used in the formulas.
    pub fn a(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn last(&self) -> usize {
        *self.0.last().expect("nonempty type")
    }
}

impl fmt::Display for TypeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Result of a type computation at a fixed truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TypeVerdict {
    Finite(TypeSequence),
    /// The rank filtration did not reach full rank at any `k <= K`.
    NotFiniteTypeUpTo(usize),
}

impl TypeVerdict {
    pub fn finite(self) -> Option<TypeSequence> {
        match self {
            TypeVerdict::Finite(a) => Some(a),
            TypeVerdict::NotFiniteTypeUpTo(_) => None,
        }
    }
}

/// Curve germ `t ↦ (x_1(t), …, x_{N+1}(t))` centered at the chart origin.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveGerm {
    components: Vec<Jet1>,
}

impl CurveGerm {
    pub fn new(components: Vec<Jet1>) -> Result<Self, CurveError> {
        let first = components.first().ok_or(CurveError::Empty)?;
        let k = first.truncation();
        for (index, c) in components.iter().enumerate() {
            if c.truncation() != k {
                return Err(CurveError::MixedTruncation { index, found: c.truncation(), expected: k });
            }
            if !c.coeff(0).is_zero() {
                return Err(CurveError::NotCentered(index));
            }
        }
        Ok(CurveGerm { components })
    }

    /// Like [`CurveGerm::new`] but first subtracts the value at `t = 0`.
    pub fn centered(components: Vec<Jet1>) -> Result<Self, CurveError> {
        let shifted = components
            .into_iter()
            .map(|c| {
                let mut v = c.coeffs().to_vec();
                v[0] = Rational::zero();
                Jet1::from_coeffs(v)
            })
            .collect();
        Self::new(shifted)
    }

    pub fn components(&self) -> &[Jet1] {
        &self.components
    }

    /// `N + 1`, the number of chart coordinates.
    pub fn ambient_dim(&self) -> usize {
        self.components.len()
    }

    pub fn truncation(&self) -> usize {
        self.components[0].truncation()
    }

    /// Coefficient vector of `t^k` across components (`γ^{(k)}(0) / k!`).
    pub fn coefficient_column(&self, k: usize) -> Vec<Rational> {
        self.components.iter().map(|c| c.coeff(k).clone()).collect()
    }

    /// `γ ∘ φ` for a reparametrization with `ord(φ) >= 1`.
    pub fn reparametrize(&self, phi: &Jet1) -> Result<Self, CurveError> {
        let comps = self.components.iter().map(|c| c.compose(phi)).collect::<Result<Vec<_>, _>>()?;
        Self::new(comps)
    }

    /// Image under the linear map `m` acting on the coordinate vector.
    pub fn linear_image(&self, m: &[Vec<Rational>]) -> Self {
        let k = self.truncation();
        let comps = m
            .iter()
            .map(|row| {
                row.iter().zip(&self.components).fold(Jet1::zero(k), |acc, (a, c)| &acc + &c.scale(a))
            })
            .collect();
        CurveGerm { components: comps }
    }

    /// Homogeneous lift `(1, x_1, …, x_{N+1})`.
    pub fn homogeneous_lift(&self) -> Vec<Jet1> {
        let mut v = vec![Jet1::one(self.truncation())];
        v.extend(self.components.iter().cloned());
        v
    }
}

/// Type of a curve germ: `a_i = min{k : rank W_k(0) = i}`.
pub fn curve_type(g: &CurveGerm) -> TypeVerdict {
    let m = g.ambient_dim();
    let k_max = g.truncation();
    let mut rank = IncrementalRank::new();
    let mut a = Vec::with_capacity(m);
    for k in 1..=k_max {
        if rank.push(&g.coefficient_column(k)) {
            a.push(k);
            if a.len() == m {
                return TypeVerdict::Finite(TypeSequence(a));
            }
        }
    }
    TypeVerdict::NotFiniteTypeUpTo(k_max)
}

/// Type of a curve given by a homogeneous lift with `γ̃(0) ≠ 0`:
/// `a_i = min{r : rank(γ̃, γ̃′, …, γ̃^{(r)})(0) = i + 1}`.
pub fn projective_type(lift: &[Jet1]) -> Result<TypeVerdict, CurveError> {
    let first = lift.first().ok_or(CurveError::Empty)?;
    let k_max = first.truncation();
    if let Some(index) = lift.iter().position(|c| c.truncation() != k_max) {
        return Err(CurveError::MixedTruncation { index, found: lift[index].truncation(), expected: k_max });
    }
    let col = |k: usize| -> Vec<Rational> { lift.iter().map(|c| c.coeff(k).clone()).collect() };
    let mut rank = IncrementalRank::new();
    if !rank.push(&col(0)) {
        return Err(CurveError::LiftVanishes);
    }
    let m = lift.len() - 1;
    let mut a = Vec::with_capacity(m);
    if m == 0 {
        return Ok(TypeVerdict::Finite(TypeSequence(a)));
    }
    for k in 1..=k_max {
        if rank.push(&col(k)) {
            a.push(k);
            if a.len() == m {
                return Ok(TypeVerdict::Finite(TypeSequence(a)));
            }
        }
    }
    Ok(TypeVerdict::NotFiniteTypeUpTo(k_max))
}

/// Affine chart of a homogeneous lift: divide by the first coordinate and
/// recenter at the origin. Requires a unit first coordinate.
pub fn dehomogenize(lift: &[Jet1]) -> Result<CurveGerm, CurveError> {
    let w = lift.first().ok_or(CurveError::Empty)?;
    if w.coeff(0).is_zero() {
        return Err(CurveError::LiftVanishes);
    }
    let comps = lift[1..].iter().map(|c| c.divide(w)).collect::<Result<Vec<_>, _>>()?;
    CurveGerm::centered(comps)
}

/// Linear change of coordinates bringing `γ` to the monic form
/// `x_i = t^{a_i} + (higher terms without any t^{a_j}, j ≠ i)`.
///
/// Returns the normalized germ and the matrix `M` with `normalized = M · γ`.
pub fn normalize(g: &CurveGerm) -> Result<(CurveGerm, Vec<Vec<Rational>>), CurveError> {
    let a = curve_type(g).finite().ok_or(CurveError::NotFiniteType(g.truncation()))?;
    let m = g.ambient_dim();
    // C has the coefficient columns at degrees a_1..a_m; they form a basis.
    let cols: Vec<Vec<Rational>> = a.entries().iter().map(|&k| g.coefficient_column(k)).collect();
    let c: Vec<Vec<Rational>> = (0..m).map(|r| cols.iter().map(|col| col[r].clone()).collect()).collect();
    let inv = linalg::inverse(&c).expect("type columns are independent");
    Ok((g.linear_image(&inv), inv))
}

/// Matrix `A(t)` with columns `γ̃, γ̃^{(a_1)}/a_1!, …, γ̃^{(a_{N+1})}/a_{N+1}!`.
///
/// Entries share truncation `K − a_{N+1}`. When `γ` is normalized the frame is
/// unit lower triangular at `t = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlagFrame {
    /// `columns[c][r]` is the entry in row `r` of column `c`.
    pub columns: Vec<Vec<Jet1>>,
    pub curve_type: TypeSequence,
}

impl FlagFrame {
    pub fn truncation(&self) -> usize {
        self.columns[0][0].truncation()
    }

    /// Row-major value of the frame at `t = 0`.
    pub fn value_at_origin(&self) -> Vec<Vec<Rational>> {
        let n = self.columns.len();
        (0..n).map(|r| (0..n).map(|c| self.columns[c][r].coeff(0).clone()).collect()).collect()
    }

    /// Basis of `V_i(0)`: the first `i` columns at `t = 0`.
    pub fn subspace_at_origin(&self, i: usize) -> Vec<Vec<Rational>> {
        self.columns[..i].iter().map(|col| col.iter().map(|e| e.coeff(0).clone()).collect()).collect()
    }

    pub fn is_unit_lower_triangular_at_origin(&self) -> bool {
        let v = self.value_at_origin();
        v.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(c, x)| match r.cmp(&c) {
                std::cmp::Ordering::Less => x.is_zero(),
                std::cmp::Ordering::Equal => *x == Rational::from_integer(1.into()),
                std::cmp::Ordering::Greater => true,
            })
        })
    }
}

pub fn flag_lift(g: &CurveGerm) -> Result<FlagFrame, CurveError> {
    let a = curve_type(g).finite().ok_or(CurveError::NotFiniteType(g.truncation()))?;
    let lift = g.homogeneous_lift();
    let k = g.truncation() - a.last();
    let mut columns = vec![lift.iter().map(|c| c.truncate(k)).collect::<Vec<_>>()];
    for &ai in a.entries() {
        columns.push(lift.iter().map(|c| c.derive_scaled(ai).truncate(k)).collect());
    }
    Ok(FlagFrame { columns, curve_type: a })
}

/// Space curve `(λ, μ, ν)` with `μ′ = νλ′ − λν′`, `μ(0) = 0`.
///
/// `λ` and `ν` must vanish at 0 and share a truncation `K >= 1`; `μ` then has
/// truncation `K` as well.
pub fn contact_integral_curve(lambda: &Jet1, nu: &Jet1) -> Result<CurveGerm, CurveError> {
    let k = lambda.truncation();
    if nu.truncation() != k {
        return Err(JetError::TruncationMismatch { left: k, right: nu.truncation() }.into());
    }
    let dl = lambda.derive();
    let dn = nu.derive();
    let integrand = &(&nu.truncate(k - 1) * &dl) - &(&lambda.truncate(k - 1) * &dn);
    let mu = integrand.integrate_weighted(0);
    CurveGerm::new(vec![lambda.clone(), mu, nu.clone()])
}

/// `det(γ′, γ″, γ‴)` of a three-component germ; truncation `K − 3`.
pub fn torsion_determinant(g: &CurveGerm) -> Jet1 {
    assert_eq!(g.ambient_dim(), 3, "torsion determinant needs a space curve");
    let k = g.truncation() - 3;
    let d: Vec<[Jet1; 3]> = g
        .components()
        .iter()
        .map(|x| {
            let d1 = x.derive();
            let d2 = d1.derive();
            let d3 = d2.derive();
            [d1.truncate(k), d2.truncate(k), d3]
        })
        .collect();
    let minor = |i: usize, j: usize, p: usize, q: usize| &(&d[i][p] * &d[j][q]) - &(&d[i][q] * &d[j][p]);
    let t0 = &d[0][0] * &minor(1, 2, 1, 2);
    let t1 = &d[1][0] * &minor(0, 2, 1, 2);
    let t2 = &d[2][0] * &minor(0, 1, 1, 2);
    &(&t0 - &t1) + &t2
}

/// `(λ′ν″ − λ″ν′)²`; truncation `K − 2`.
pub fn contact_torsion_square(lambda: &Jet1, nu: &Jet1) -> Jet1 {
    let dl = lambda.derive();
    let dn = nu.derive();
    let k = dl.truncation() - 1;
    let w = &(&dl.truncate(k) * &dn.derive()) - &(&dl.derive() * &dn.truncate(k));
    &w * &w
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;

    fn curve(rows: &[&[i64]]) -> CurveGerm {
        CurveGerm::new(rows.iter().map(|r| Jet1::from_ints(r)).collect()).unwrap()
    }

    fn ty(v: &[usize]) -> TypeVerdict {
        TypeVerdict::Finite(TypeSequence::new(v.to_vec()).unwrap())
    }

    #[test]
    fn type_examples() {
        let g = curve(&[&[0, 1, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 1, 0]]);
        assert_eq!(curve_type(&g), ty(&[1, 2, 3]));
        let g = curve(&[
            &[0, 1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 1, 0, 0, 0],
            &[0, 0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1, 0],
        ]);
        assert_eq!(curve_type(&g), ty(&[1, 3, 4, 6]));
        // umbilical bracelet chart (3t, 3t², t³)
        let g = curve(&[&[0, 3, 0, 0, 0], &[0, 0, 3, 0, 0], &[0, 0, 0, 1, 0]]);
        assert_eq!(curve_type(&g), ty(&[1, 2, 3]));
        let z = CurveGerm::new(vec![Jet1::zero(6); 3]).unwrap();
        assert_eq!(curve_type(&z), TypeVerdict::NotFiniteTypeUpTo(6));
    }

    #[test]
    fn rejects_uncentered_and_mixed() {
        assert_eq!(CurveGerm::new(vec![Jet1::from_ints(&[1, 1])]), Err(CurveError::NotCentered(0)));
        let r = CurveGerm::new(vec![Jet1::zero(2), Jet1::zero(3)]);
        assert!(matches!(r, Err(CurveError::MixedTruncation { .. })));
        assert!(TypeSequence::new(vec![1, 1]).is_err());
        assert!(TypeSequence::new(vec![0, 1]).is_err());
    }

    #[test]
    fn normalize_examples() {
        let g = curve(&[&[0, 2, 1, 0], &[0, 0, 1, 0]]);
        let (n, m) = normalize(&g).unwrap();
        assert_eq!(n.components()[0].coeff(1), &rat(1, 1));
        assert_eq!(n.components()[1].coeff(2), &rat(1, 1));
        assert_eq!(n.components()[1].coeff(1), &rat(0, 1));
        assert_eq!(g.linear_image(&m), n);

        let g = curve(&[&[0, 1, 0, 0], &[0, 1, 1, 0]]);
        assert_eq!(normalize(&g).unwrap().0, curve(&[&[0, 1, 0, 0], &[0, 0, 1, 0]]));

        let g = curve(&[&[0, 1, 0, 0], &[0, 0, 0, 1]]);
        assert_eq!(normalize(&g).unwrap().0, g);
    }

    #[test]
    fn flag_examples() {
        let g = curve(&[&[0, 1, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 0, 0]]);
        let f = flag_lift(&g).unwrap();
        assert!(f.is_unit_lower_triangular_at_origin());
        assert_eq!(f.subspace_at_origin(2), vec![
            vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)],
        ]);
        // γ = (t, t³, t⁴): the second column is γ̃′ with constant part e_1 only
        let g = curve(&[&[0, 1, 0, 0, 0, 0, 0], &[0, 0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 1, 0, 0]]);
        let f = flag_lift(&g).unwrap();
        let col1: Vec<Rational> = f.columns[1].iter().map(|e| e.coeff(0).clone()).collect();
        assert_eq!(col1, vec![rat(0, 1), rat(1, 1), rat(0, 1), rat(0, 1)]);
        assert_eq!(f.columns[1][2].order(), crate::ExtOrder::Finite(2));
    }

    #[test]
    fn projective_examples() {
        let lift = vec![
            Jet1::from_ints(&[1, 0, 0, 0, 0, 0]),
            Jet1::from_ints(&[0, 1, 0, 0, 0, 0]),
            Jet1::from_ints(&[0, 0, 1, 0, 0, 0]),
            Jet1::from_ints(&[0, 0, 0, 1, 0, 0]),
        ];
        assert_eq!(projective_type(&lift).unwrap(), ty(&[1, 2, 3]));
        let mut lift2 = lift.clone();
        lift2[3] = Jet1::from_ints(&[0, 0, 0, 0, 1, 0]);
        assert_eq!(projective_type(&lift2).unwrap(), ty(&[1, 2, 4]));
        let zero = vec![Jet1::zero(3); 2];
        assert_eq!(projective_type(&zero), Err(CurveError::LiftVanishes));
    }

    #[test]
    fn torsion_identity_on_a_sample() {
        let l = Jet1::from_ints(&[0, 1, 2, 0, -1, 0, 0, 0]);
        let n = Jet1::from_ints(&[0, 0, 1, 3, 0, 1, 0, 0]);
        let g = contact_integral_curve(&l, &n).unwrap();
        let det = torsion_determinant(&g);
        let sq = contact_torsion_square(&l, &n).truncate(det.truncation());
        assert_eq!(det, sq);
    }
}
