//! Germ documents: one germ per TOML file, coefficients as exact rational
//! strings. The grammar is described in `docs/germ-format.md`.

use std::str::FromStr;

use serde::Deserialize;
use tanvar_core::{
    complete_to_legendre, CurveClass, CurveGerm, Jet1, Jet2, LegendreSurfaceGerm, Rational, SymMatrix3,
};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Curve,
    Surface,
    Matrix,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Exponent {
    Single(usize),
    Pair([usize; 2]),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Term {
    pub exp: Exponent,
    pub coeff: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Component {
    pub name: Option<String>,
    #[serde(default)]
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GermDocument {
    pub kind: Kind,
    pub variables: Option<Vec<String>>,
    pub truncation: Option<usize>,
    #[serde(default)]
    pub components: Vec<Component>,
    /// Matrix rows, for `kind = "matrix"`.
    pub rows: Option<Vec<Vec<String>>>,
    pub class: Option<String>,
    /// Dimension of the underlying vector space (chart coordinates + 1).
    pub ambient: Option<usize>,
}

pub fn parse_rational(s: &str) -> Result<Rational, CliError> {
    let t = s.trim();
    Rational::from_str(t).map_err(|_| CliError::invalid(format!("not a rational number: {s:?}")))
}

impl GermDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::invalid(format!("malformed germ document: {}", e.message())))
    }

    fn truncation_for(&self, what: &str) -> Result<usize, CliError> {
        self.truncation.ok_or_else(|| CliError::invalid(format!("{what} documents need a truncation")))
    }

    fn check_variables(&self, default: &[&str]) -> Result<Vec<String>, CliError> {
        let vars = self.variables.clone().unwrap_or_else(|| default.iter().map(|s| s.to_string()).collect());
        if vars.len() != default.len() {
            return Err(CliError::invalid(format!("expected {} variable(s), found {}", default.len(), vars.len())));
        }
        Ok(vars)
    }

    fn expect_kind(&self, kind: Kind) -> Result<(), CliError> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(CliError::invalid(format!("expected a {kind:?} document, found {:?}", self.kind).to_lowercase()))
        }
    }

    pub fn to_curve(&self) -> Result<CurveGerm, CliError> {
        self.expect_kind(Kind::Curve)?;
        self.check_variables(&["t"])?;
        let k = self.truncation_for("curve")?;
        if self.components.is_empty() {
            return Err(CliError::invalid("a curve needs at least one component"));
        }
        if let Some(amb) = self.ambient {
            if amb != self.components.len() + 1 {
                return Err(CliError::invalid(format!(
                    "ambient {amb} does not match {} components",
                    self.components.len()
                )));
            }
        }
        let mut comps = Vec::with_capacity(self.components.len());
        for (n, c) in self.components.iter().enumerate() {
            let mut terms = Vec::with_capacity(c.terms.len());
            for t in &c.terms {
                let d = match t.exp {
                    Exponent::Single(d) => d,
                    Exponent::Pair(_) => {
                        return Err(CliError::invalid(format!("component {}: curve exponents are integers", n + 1)))
                    }
                };
                if d > k {
                    return Err(CliError::invalid(format!("component {}: exponent {d} above truncation {k}", n + 1)));
                }
                terms.push((d, parse_rational(&t.coeff)?));
            }
            let mut coeffs = vec![Rational::default(); k + 1];
            for (d, c) in terms {
                coeffs[d] += c;
            }
            comps.push(Jet1::from_coeffs(coeffs));
        }
        CurveGerm::new(comps).map_err(|e| CliError::invalid(e.to_string()))
    }

    pub fn to_surface(&self) -> Result<LegendreSurfaceGerm, CliError> {
        self.expect_kind(Kind::Surface)?;
        self.check_variables(&["u", "v"])?;
        let k = self.truncation_for("surface")?;
        if self.components.len() != 2 {
            return Err(CliError::invalid("a surface document lists exactly two components, x3 and x4"));
        }
        if k > tanvar_core::jets::MAX_JET2_TRUNCATION {
            return Err(CliError::invalid(format!("surface truncation above {}", tanvar_core::jets::MAX_JET2_TRUNCATION)));
        }
        let mut jets = Vec::with_capacity(2);
        for (n, c) in self.components.iter().enumerate() {
            let mut terms = Vec::with_capacity(c.terms.len());
            for t in &c.terms {
                let [i, j] = match t.exp {
                    Exponent::Pair(p) => p,
                    Exponent::Single(_) => {
                        return Err(CliError::invalid(format!("component {}: surface exponents are pairs", n + 1)))
                    }
                };
                if i + j > k {
                    return Err(CliError::invalid(format!(
                        "component {}: degree {} above truncation {k}",
                        n + 1,
                        i + j
                    )));
                }
                terms.push(((i, j), parse_rational(&t.coeff)?));
            }
            let mut acc = Jet2::zero(k);
            for (e, c) in terms {
                acc = &acc + &Jet2::from_terms(&[(e, c)], k).map_err(|e| CliError::invalid(e.to_string()))?;
            }
            jets.push(acc);
        }
        complete_to_legendre(&jets[0], &jets[1]).map_err(|e| CliError::invalid(e.to_string()))
    }

    pub fn to_matrix(&self) -> Result<SymMatrix3, CliError> {
        self.expect_kind(Kind::Matrix)?;
        let rows = self.rows.as_ref().ok_or_else(|| CliError::invalid("matrix documents need rows"))?;
        if rows.len() != 3 || rows.iter().any(|r| r.len() != 3) {
            return Err(CliError::invalid("matrix must be 3x3"));
        }
        let mut m = vec![vec![Rational::default(); 3]; 3];
        for (i, r) in rows.iter().enumerate() {
            for (j, s) in r.iter().enumerate() {
                m[i][j] = parse_rational(s)?;
            }
        }
        for i in 0..3 {
            for j in 0..i {
                if m[i][j] != m[j][i] {
                    return Err(CliError::invalid(format!("matrix is not symmetric at ({}, {})", i + 1, j + 1)));
                }
            }
        }
        Ok(SymMatrix3::new([
            m[0][0].clone(),
            m[0][1].clone(),
            m[0][2].clone(),
            m[1][1].clone(),
            m[1][2].clone(),
            m[2][2].clone(),
        ]))
    }

    /// Class named in the document, sized to the curve's type length.
    pub fn curve_class(&self, type_len: usize) -> Result<CurveClass, CliError> {
        let name = self.class.as_deref().unwrap_or("plain");
        crate::class_from_len(name, type_len, None)
    }
}
