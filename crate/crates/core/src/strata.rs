//! Codimensions of type strata and enumeration of generic types.
//!
//! Five curve classes are covered: plain curves, curves framed by the
//! tangent line, by tangent line and principal normal plane, by the full
//! osculating flag, and contact curves with isotropic osculating flags.
//!
//! Enumeration searches all strictly increasing sequences with
//! `a_i <= i + 2`. In each class codim ≤ 1 forces this bound:
//! - plain: every summand `a_i − i` is ≥ 0 and the sum is ≤ 1;
//! - flag depth `k`: the codimension equals
//!   `Σ_{i<=k}(a_i − a_{i−1} − 1) + Σ_{j>k}(a_j − a_k − (j − k))`, a sum of
//!   nonnegative terms, so `a_k <= k + 1` and `a_j <= a_k + (j − k) + 1`;
//! - contact: `a_{n+1} <= n + 2`, and `a_{n+j} − (n + j)` equals
//!   `(a_{n+1} − n − 1) + (a_n − n) − (a_{n+1−j} − (n + 1 − j)) <= 2`.

use std::fmt;

use crate::curves::TypeSequence;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StrataError {
    #[error("type {found} has length {}, expected {expected}", found.len())]
    LengthMismatch { found: TypeSequence, expected: usize },
    #[error("flag depth {k} out of range 1..={n}")]
    DepthOutOfRange { k: usize, n: usize },
    #[error("class parameter must be at least 1")]
    BadParameter,
    #[error("type {0} is not Lagrangian-admissible: {1}")]
    Inadmissible(TypeSequence, String),
}

/// Curve class with its ambient parameter.
///
/// `n` is `N` for curves in ℝP^{N+1} and the contact parameter `n` for
/// ℝP^{2n+1}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveClass {
    Plain { n: usize },
    TangentFramed { n: usize },
    TpnFramed { n: usize },
    OsculatingFramed { n: usize },
    /// Framed by the first `depth + 1` members of the osculating flag.
    Flag { n: usize, depth: usize },
    ContactOsculating { n: usize },
}

impl CurveClass {
    /// Number of chart coordinates, i.e. the type length.
    pub fn type_len(&self) -> usize {
        match *self {
            CurveClass::ContactOsculating { n } => 2 * n + 1,
            CurveClass::Plain { n }
            | CurveClass::TangentFramed { n }
            | CurveClass::TpnFramed { n }
            | CurveClass::OsculatingFramed { n }
            | CurveClass::Flag { n, .. } => n + 1,
        }
    }

    /// Flag depth used by the general flag formula, if the class has one.
    pub fn flag_depth(&self) -> Option<usize> {
        match *self {
            CurveClass::TangentFramed { .. } => Some(1),
            CurveClass::TpnFramed { .. } => Some(2),
            CurveClass::OsculatingFramed { n } => Some(n),
            CurveClass::Flag { depth, .. } => Some(depth),
            CurveClass::Plain { .. } | CurveClass::ContactOsculating { .. } => None,
        }
    }

    fn param(&self) -> usize {
        match *self {
            CurveClass::Plain { n }
            | CurveClass::TangentFramed { n }
            | CurveClass::TpnFramed { n }
            | CurveClass::OsculatingFramed { n }
            | CurveClass::Flag { n, .. }
            | CurveClass::ContactOsculating { n } => n,
        }
    }

    pub fn validate(&self) -> Result<(), StrataError> {
        if self.param() == 0 {
            return Err(StrataError::BadParameter);
        }
        if let Some(k) = self.flag_depth() {
            let n = self.param();
            if k == 0 || k > n {
                return Err(StrataError::DepthOutOfRange { k, n });
            }
        }
        Ok(())
    }

    /// Codimension of the type stratum of `a` in this class.
    pub fn codim(&self, a: &TypeSequence) -> Result<usize, StrataError> {
        self.validate()?;
        match *self {
            CurveClass::Plain { n } => codim_plain(a, n),
            CurveClass::ContactOsculating { n } => codim_lagrangian(a, n),
            _ => codim_flag(a, self.flag_depth().expect("flag class"), self.param()),
        }
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CurveClass::Plain { n } => write!(f, "plain (N={n})"),
            CurveClass::TangentFramed { n } => write!(f, "tangent-framed (N={n})"),
            CurveClass::TpnFramed { n } => write!(f, "tangent-principal-normal-framed (N={n})"),
            CurveClass::OsculatingFramed { n } => write!(f, "osculating-framed (N={n})"),
            CurveClass::Flag { n, depth } => write!(f, "flag depth {depth} (N={n})"),
            CurveClass::ContactOsculating { n } => write!(f, "contact osculating (n={n})"),
        }
    }
}

fn check_len(a: &TypeSequence, expected: usize) -> Result<(), StrataError> {
    if a.len() == expected {
        Ok(())
    } else {
        Err(StrataError::LengthMismatch { found: a.clone(), expected })
    }
}

/// `Σ_{i=1}^{N+1} (a_i − i)`.
pub fn codim_plain(a: &TypeSequence, n: usize) -> Result<usize, StrataError> {
    check_len(a, n + 1)?;
    Ok(a.entries().iter().enumerate().map(|(i, &ai)| ai - (i + 1)).sum())
}

/// `Σ_{i=k}^{N+1} (a_i − i) − (N − k + 1)(a_k − k)`.
pub fn codim_flag(a: &TypeSequence, k: usize, n: usize) -> Result<usize, StrataError> {
    check_len(a, n + 1)?;
    if k == 0 || k > n {
        return Err(StrataError::DepthOutOfRange { k, n });
    }
    let tail: usize = (k..=n + 1).map(|i| a.a(i) - i).sum();
    Ok(tail - (n - k + 1) * (a.a(k) - k))
}

/// Orders `u_1..u_n`, `v` of a Lagrangian flag curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LagrangianOrders {
    pub u: Vec<usize>,
    pub v: usize,
}

/// Check `a_{n+j} = a_{n+1} + a_n − a_{n+1−j}` for `j = 2..=n+1` (with
/// `a_0 = 0`) and return the orders `u_i = a_i − a_{i−1}`, `v = a_{n+1} − a_n`.
pub fn lagrangian_admissible(a: &TypeSequence, n: usize) -> Result<LagrangianOrders, StrataError> {
    if n == 0 {
        return Err(StrataError::BadParameter);
    }
    check_len(a, 2 * n + 1)?;
    let at = |i: usize| if i == 0 { 0 } else { a.a(i) };
    for j in 2..=n + 1 {
        let expected = at(n + 1) + at(n) - at(n + 1 - j);
        if at(n + j) != expected {
            return Err(StrataError::Inadmissible(
                a.clone(),
                format!("a_{} = {} but a_{} + a_{} - a_{} = {expected}", n + j, at(n + j), n + 1, n, n + 1 - j),
            ));
        }
    }
    let orders = LagrangianOrders { u: (1..=n).map(|i| at(i) - at(i - 1)).collect(), v: at(n + 1) - at(n) };
    debug_assert_eq!(&orders_to_type(&orders), a);
    Ok(orders)
}

/// `a_{n+1} − (n + 1)` for an admissible type.
pub fn codim_lagrangian(a: &TypeSequence, n: usize) -> Result<usize, StrataError> {
    lagrangian_admissible(a, n)?;
    Ok(a.a(n + 1) - (n + 1))
}

/// Rebuild the type: `a_i = u_1 + … + u_i`, `a_{n+1} = Σu + v`,
/// `a_{n+1+j} = a_{n+1} + u_{n−j+1} + … + u_n`.
///
/// # Panics
/// Panics if some order is zero.
pub fn orders_to_type(o: &LagrangianOrders) -> TypeSequence {
    assert!(o.v >= 1 && o.u.iter().all(|&x| x >= 1), "orders must be positive");
    let n = o.u.len();
    let mut a = Vec::with_capacity(2 * n + 1);
    let mut acc = 0;
    for &x in &o.u {
        acc += x;
        a.push(acc);
    }
    let mid = acc + o.v;
    a.push(mid);
    for j in 1..=n {
        a.push(mid + o.u[n - j..].iter().sum::<usize>());
    }
    TypeSequence::new(a).expect("positive orders give a strictly increasing type")
}

/// All types of codimension ≤ 1 in the class, sorted lexicographically.
pub fn enumerate_generic(class: &CurveClass) -> Result<Vec<TypeSequence>, StrataError> {
    class.validate()?;
    let len = class.type_len();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    search(len, &mut cur, &mut |a| {
        let t = TypeSequence::new(a.to_vec()).expect("search yields increasing sequences");
        if class.codim(&t).is_ok_and(|c| c <= 1) {
            out.push(t);
        }
    });
    Ok(out)
}

/// Visit strictly increasing sequences of the given length with `i <= a_i <= i + 2`
/// in lexicographic order.
fn search(len: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
    let i = cur.len() + 1;
    if i > len {
        visit(cur);
        return;
    }
    let lo = cur.last().map_or(1, |&x| x + 1).max(i);
    for ai in lo..=i + 2 {
        cur.push(ai);
        search(len, cur, visit);
        cur.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(v: &[usize]) -> TypeSequence {
        TypeSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn plain_codim_examples() {
        assert_eq!(codim_plain(&ty(&[1, 2, 3, 4]), 3), Ok(0));
        assert_eq!(codim_plain(&ty(&[1, 2, 3, 5]), 3), Ok(1));
        assert_eq!(codim_plain(&ty(&[1, 3, 4, 6]), 3), Ok(4));
        assert!(matches!(codim_plain(&ty(&[1, 2]), 3), Err(StrataError::LengthMismatch { .. })));
    }

    #[test]
    fn flag_codim_examples() {
        assert_eq!(codim_flag(&ty(&[2, 3, 4, 5]), 1, 3), Ok(1));
        for k in 1..=3 {
            assert_eq!(codim_flag(&ty(&[1, 2, 3, 4]), k, 3), Ok(0));
        }
        assert_eq!(codim_flag(&ty(&[1, 3, 4, 6]), 3, 3), Ok(2));
        assert_eq!(codim_flag(&ty(&[1, 2, 3, 4]), 4, 3), Err(StrataError::DepthOutOfRange { k: 4, n: 3 }));
    }

    #[test]
    fn lagrangian_examples() {
        assert_eq!(lagrangian_admissible(&ty(&[1, 3, 4, 6, 7]), 2), Ok(LagrangianOrders { u: vec![1, 2], v: 1 }));
        assert_eq!(lagrangian_admissible(&ty(&[1, 2, 3, 4, 5]), 2), Ok(LagrangianOrders { u: vec![1, 1], v: 1 }));
        assert!(matches!(lagrangian_admissible(&ty(&[1, 2, 3, 4, 6]), 2), Err(StrataError::Inadmissible(..))));
        assert_eq!(codim_lagrangian(&ty(&[1, 3, 4, 6, 7]), 2), Ok(1));
        assert_eq!(codim_lagrangian(&ty(&[1, 2, 3, 4, 5]), 2), Ok(0));
        assert_eq!(codim_lagrangian(&ty(&[1, 2, 4, 5, 6]), 2), Ok(1));
    }

    #[test]
    fn orders_examples() {
        assert_eq!(orders_to_type(&LagrangianOrders { u: vec![1, 1], v: 1 }), ty(&[1, 2, 3, 4, 5]));
        assert_eq!(orders_to_type(&LagrangianOrders { u: vec![2, 1], v: 1 }), ty(&[2, 3, 4, 5, 7]));
        assert_eq!(orders_to_type(&LagrangianOrders { u: vec![1, 1, 2], v: 1 }), ty(&[1, 2, 4, 5, 7, 8, 9]));
    }

    #[test]
    fn enumeration_examples() {
        let e = |c: CurveClass| enumerate_generic(&c).unwrap();
        assert_eq!(e(CurveClass::Plain { n: 3 }), vec![ty(&[1, 2, 3, 4]), ty(&[1, 2, 3, 5])]);
        assert_eq!(e(CurveClass::OsculatingFramed { n: 3 }), vec![
            ty(&[1, 2, 3, 4]),
            ty(&[1, 2, 3, 5]),
            ty(&[1, 2, 4, 5]),
            ty(&[1, 3, 4, 5]),
            ty(&[2, 3, 4, 5])
        ]);
        assert_eq!(e(CurveClass::ContactOsculating { n: 2 }), vec![
            ty(&[1, 2, 3, 4, 5]),
            ty(&[1, 2, 4, 5, 6]),
            ty(&[1, 3, 4, 6, 7]),
            ty(&[2, 3, 4, 5, 7])
        ]);
        assert_eq!(e(CurveClass::ContactOsculating { n: 1 }), vec![ty(&[1, 2, 3]), ty(&[1, 3, 4]), ty(&[2, 3, 5])]);
    }
}
