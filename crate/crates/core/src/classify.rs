//! Singularity lookup for tangent varieties by curve type, and explicit
//! normal forms.
//!
//! Only types covered by a classification theorem get a name; everything
//! else is `Unclassified`. Normal forms are exact polynomials stored as
//! [`Jet2`] at truncation [`NORMAL_FORM_TRUNCATION`].

use std::fmt;

use crate::curves::{CurveGerm, TypeSequence};
use crate::jets::{Jet1, Jet2};
use crate::strata::{enumerate_generic, CurveClass, StrataError};
use crate::tangency::tangent_map;
use crate::{rat, Rational};

/// Truncation used for normal-form polynomials; above every degree in the table.
pub const NORMAL_FORM_TRUNCATION: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SingularityClass {
    CuspidalEdge,
    FoldedUmbrella,
    OpenFoldedUmbrella,
    Swallowtail,
    OpenSwallowtail,
    MondSurface,
    OpenMondSurface,
    UnfurledMondSurface,
    GenericFoldedPleat,
    Unclassified,
}

impl SingularityClass {
    pub const ALL: [SingularityClass; 10] = [
        SingularityClass::CuspidalEdge,
        SingularityClass::FoldedUmbrella,
        SingularityClass::OpenFoldedUmbrella,
        SingularityClass::Swallowtail,
        SingularityClass::OpenSwallowtail,
        SingularityClass::MondSurface,
        SingularityClass::OpenMondSurface,
        SingularityClass::UnfurledMondSurface,
        SingularityClass::GenericFoldedPleat,
        SingularityClass::Unclassified,
    ];

    /// Kebab-case name used on the command line.
    pub fn slug(&self) -> &'static str {
        match self {
            SingularityClass::CuspidalEdge => "cuspidal-edge",
            SingularityClass::FoldedUmbrella => "folded-umbrella",
            SingularityClass::OpenFoldedUmbrella => "open-folded-umbrella",
            SingularityClass::Swallowtail => "swallowtail",
            SingularityClass::OpenSwallowtail => "open-swallowtail",
            SingularityClass::MondSurface => "mond-surface",
            SingularityClass::OpenMondSurface => "open-mond-surface",
            SingularityClass::UnfurledMondSurface => "unfurled-mond-surface",
            SingularityClass::GenericFoldedPleat => "generic-folded-pleat",
            SingularityClass::Unclassified => "unclassified",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.slug() == s)
    }

    /// Whether the type alone fails to pin down the diffeomorphism class.
    pub fn caveat(&self) -> Option<&'static str> {
        match self {
            SingularityClass::GenericFoldedPleat => {
                Some("two diffeomorphism classes of generic folded pleats exist; the type does not decide which")
            }
            _ => None,
        }
    }
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            SingularityClass::CuspidalEdge => "cuspidal edge",
            SingularityClass::FoldedUmbrella => "folded umbrella",
            SingularityClass::OpenFoldedUmbrella => "open folded umbrella",
            SingularityClass::Swallowtail => "swallowtail",
            SingularityClass::OpenSwallowtail => "open swallowtail",
            SingularityClass::MondSurface => "Mond surface",
            SingularityClass::OpenMondSurface => "open Mond surface",
            SingularityClass::UnfurledMondSurface => "unfurled Mond surface",
            SingularityClass::GenericFoldedPleat => "generic folded pleat",
            SingularityClass::Unclassified => "unclassified",
        };
        f.write_str(name)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub singularity: SingularityClass,
    /// The type has codimension ≤ 1 in the class.
    pub generic: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error(transparent)]
    Strata(#[from] StrataError),
    #[error("no normal form for an unclassified germ")]
    Unclassified,
    #[error("{class} lives in ambient dimension {expected}, not {found}")]
    AmbientMismatch { class: SingularityClass, expected: String, found: usize },
}

/// Look up the tangent-variety singularity of a curve of type `a` in `class`.
pub fn classify(a: &TypeSequence, class: &CurveClass) -> Result<Classification, ClassifyError> {
    class.validate()?;
    let len = class.type_len();
    if a.len() != len {
        return Err(StrataError::LengthMismatch { found: a.clone(), expected: len }.into());
    }
    let e = a.entries();
    let singularity = if len == 3 {
        match e {
            [1, 2, 3] => SingularityClass::CuspidalEdge,
            [1, 2, 4] => SingularityClass::FoldedUmbrella,
            [2, 3, 4] => SingularityClass::Swallowtail,
            [1, 3, 4] => SingularityClass::MondSurface,
            [2, 3, 5] if matches!(class, CurveClass::ContactOsculating { .. }) => {
                SingularityClass::GenericFoldedPleat
            }
            _ => SingularityClass::Unclassified,
        }
    } else if len >= 4 {
        match &e[..4] {
            [1, 2, 3, _] => SingularityClass::CuspidalEdge,
            [1, 3, 4, 5] => SingularityClass::OpenMondSurface,
            [2, 3, 4, 5] => SingularityClass::OpenSwallowtail,
            [1, 2, 4, 5] => SingularityClass::OpenFoldedUmbrella,
            [1, 3, 4, 6] => SingularityClass::UnfurledMondSurface,
            _ => SingularityClass::Unclassified,
        }
    } else {
        SingularityClass::Unclassified
    };
    let generic = enumerate_generic(class)?.contains(a);
    Ok(Classification { singularity, generic })
}

/// Explicit parametrizations of a singularity, zero-padded to `ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub class: SingularityClass,
    pub ambient_dim: usize,
    /// Chart `(s, t)` with `Var::X = s`, `Var::Y = t`.
    pub st_chart: Vec<Jet2>,
    /// Chart `(u, x)` with `Var::X = u`, `Var::Y = x`, where one is known.
    pub ux_chart: Option<Vec<Jet2>>,
    /// False when the parametrization is only a representative, not a
    /// certified normal form.
    pub certified: bool,
}

type Table = &'static [&'static [((usize, usize), (i64, i64))]];

// (s, t) charts: ((s-degree, t-degree), coefficient)
const ST_CUSP: Table = &[&[((0, 1), (1, 1)), ((1, 0), (1, 1))], &[((0, 2), (1, 1)), ((1, 1), (2, 1))], &[
    ((0, 3), (1, 1)),
    ((1, 2), (3, 1)),
]];
const UX_CUSP: Table = &[&[((1, 0), (1, 1))], &[((0, 2), (1, 1))], &[((0, 3), (1, 1))]];

const ST_FOLDED: Table = &[&[((0, 1), (1, 1)), ((1, 0), (1, 1))], &[((0, 2), (1, 1)), ((1, 1), (2, 1))], &[
    ((0, 4), (1, 1)),
    ((1, 3), (4, 1)),
]];
const UX_FOLDED: Table = &[&[((1, 0), (1, 1))], &[((0, 2), (1, 1)), ((1, 1), (1, 1))], &[
    ((0, 4), (1, 2)),
    ((1, 3), (1, 3)),
]];

const ST_SWALLOW: Table = &[&[((0, 2), (1, 1)), ((1, 0), (2, 1))], &[((0, 3), (1, 1)), ((1, 1), (3, 1))], &[
    ((0, 4), (1, 1)),
    ((1, 2), (4, 1)),
]];
const UX_SWALLOW: Table = &[&[((1, 0), (1, 1))], &[((0, 3), (1, 1)), ((1, 1), (1, 1))], &[
    ((0, 4), (3, 4)),
    ((1, 2), (1, 2)),
]];

const ST_OPEN_SWALLOW: Table = &[
    &[((0, 2), (1, 1)), ((1, 0), (2, 1))],
    &[((0, 3), (1, 1)), ((1, 1), (3, 1))],
    &[((0, 4), (1, 1)), ((1, 2), (4, 1))],
    &[((0, 5), (1, 1)), ((1, 3), (5, 1))],
];
const UX_OPEN_SWALLOW: Table = &[
    &[((1, 0), (1, 1))],
    &[((0, 3), (1, 1)), ((1, 1), (1, 1))],
    &[((0, 4), (3, 4)), ((1, 2), (1, 2))],
    &[((0, 5), (3, 5)), ((1, 3), (1, 3))],
];

const ST_MOND: Table = &[&[((0, 1), (1, 1)), ((1, 0), (1, 1))], &[((0, 3), (1, 1)), ((1, 2), (3, 1))], &[
    ((0, 4), (1, 1)),
    ((1, 3), (4, 1)),
]];
const UX_MOND: Table = &[&[((1, 0), (1, 1))], &[((0, 3), (1, 1)), ((1, 2), (1, 1))], &[
    ((0, 4), (3, 4)),
    ((1, 3), (2, 3)),
]];

const ST_OPEN_MOND: Table = &[
    &[((0, 1), (1, 1)), ((1, 0), (1, 1))],
    &[((0, 3), (1, 1)), ((1, 2), (3, 1))],
    &[((0, 4), (1, 1)), ((1, 3), (4, 1))],
    &[((0, 5), (1, 1)), ((1, 4), (5, 1))],
];
const UX_OPEN_MOND: Table = &[
    &[((1, 0), (1, 1))],
    &[((0, 3), (1, 1)), ((1, 2), (1, 1))],
    &[((0, 4), (3, 4)), ((1, 3), (2, 3))],
    &[((0, 5), (3, 5)), ((1, 4), (1, 2))],
];

const ST_OPEN_FOLDED: Table = &[
    &[((0, 1), (1, 1)), ((1, 0), (1, 1))],
    &[((0, 2), (1, 1)), ((1, 1), (2, 1))],
    &[((0, 4), (1, 1)), ((1, 3), (4, 1))],
    &[((0, 5), (1, 1)), ((1, 4), (5, 1))],
];
const UX_OPEN_FOLDED: Table = &[
    &[((1, 0), (1, 1))],
    &[((0, 2), (1, 1)), ((1, 1), (1, 1))],
    &[((0, 4), (1, 2)), ((1, 3), (1, 3))],
    &[((0, 5), (2, 5)), ((1, 4), (1, 4))],
];

const ST_UNFURLED: Table = &[
    &[((0, 1), (1, 1)), ((1, 0), (1, 1))],
    &[((0, 3), (1, 1)), ((1, 2), (3, 1))],
    &[((0, 4), (1, 1)), ((1, 3), (4, 1))],
    &[((0, 6), (1, 1)), ((1, 5), (6, 1))],
];
const UX_UNFURLED: Table = &[
    &[((1, 0), (1, 1))],
    &[((0, 3), (1, 1)), ((1, 2), (1, 1))],
    &[((0, 4), (3, 4)), ((1, 3), (2, 3))],
    &[((0, 6), (1, 2)), ((1, 5), (2, 5))],
];

fn build(table: Table, ambient: usize) -> Vec<Jet2> {
    let k = NORMAL_FORM_TRUNCATION;
    let mut out: Vec<Jet2> = table
        .iter()
        .map(|terms| {
            let t: Vec<((usize, usize), Rational)> = terms.iter().map(|&(e, (p, q))| (e, rat(p, q))).collect();
            Jet2::from_terms(&t, k).expect("table degrees are below the truncation")
        })
        .collect();
    out.resize(ambient, Jet2::zero(k));
    out
}

/// Normal form of `c` in an ambient chart with `ambient = N + 1` coordinates.
pub fn normal_form(c: SingularityClass, ambient: usize) -> Result<NormalForm, ClassifyError> {
    use SingularityClass as S;
    let exactly3 = |found: usize| found == 3;
    let at_least4 = |found: usize| found >= 4;
    let (fits, expected, st, ux): (bool, &str, Table, Option<Table>) = match c {
        S::Unclassified => return Err(ClassifyError::Unclassified),
        S::CuspidalEdge => (ambient >= 3, ">= 3", ST_CUSP, Some(UX_CUSP)),
        S::FoldedUmbrella => (exactly3(ambient), "3", ST_FOLDED, Some(UX_FOLDED)),
        S::Swallowtail => (exactly3(ambient), "3", ST_SWALLOW, Some(UX_SWALLOW)),
        S::MondSurface => (exactly3(ambient), "3", ST_MOND, Some(UX_MOND)),
        S::OpenSwallowtail => (at_least4(ambient), ">= 4", ST_OPEN_SWALLOW, Some(UX_OPEN_SWALLOW)),
        S::OpenMondSurface => (at_least4(ambient), ">= 4", ST_OPEN_MOND, Some(UX_OPEN_MOND)),
        S::OpenFoldedUmbrella => (at_least4(ambient), ">= 4", ST_OPEN_FOLDED, Some(UX_OPEN_FOLDED)),
        S::UnfurledMondSurface => (at_least4(ambient), ">= 4", ST_UNFURLED, Some(UX_UNFURLED)),
        S::GenericFoldedPleat => {
            if !exactly3(ambient) {
                return Err(ClassifyError::AmbientMismatch { class: c, expected: "3".into(), found: ambient });
            }
            let a = TypeSequence::new(vec![2, 3, 5]).expect("valid type");
            let curve = normal_form_curve_at(&a, NORMAL_FORM_TRUNCATION + 1);
            let t = tangent_map(&curve).expect("monomial curves have tangent maps");
            let st_chart = t.components.iter().map(|f| f.truncate(NORMAL_FORM_TRUNCATION)).collect();
            return Ok(NormalForm { class: c, ambient_dim: 3, st_chart, ux_chart: None, certified: false });
        }
    };
    if !fits {
        return Err(ClassifyError::AmbientMismatch { class: c, expected: expected.into(), found: ambient });
    }
    Ok(NormalForm {
        class: c,
        ambient_dim: ambient,
        st_chart: build(st, ambient),
        ux_chart: ux.map(|t| build(t, ambient)),
        certified: true,
    })
}

/// Monomial curve `t ↦ (t^{a_1}, …, t^{a_m})` at truncation `2·a_m + 2`.
pub fn normal_form_curve(a: &TypeSequence) -> CurveGerm {
    normal_form_curve_at(a, 2 * a.last() + 2)
}

/// Monomial curve at a chosen truncation (at least `a_m`).
pub fn normal_form_curve_at(a: &TypeSequence, k: usize) -> CurveGerm {
    assert!(k >= a.last(), "truncation below the last type entry");
    let comps = a.entries().iter().map(|&d| Jet1::monomial(rat(1, 1), d, k).expect("d <= k")).collect();
    CurveGerm::new(comps).expect("monomials vanish at 0")
}

/// Compare two jets as polynomials: equal on the common truncation, and
/// neither has terms above it.
pub fn same_polynomial(a: &Jet2, b: &Jet2) -> bool {
    let k = a.truncation().min(b.truncation());
    let fits = |j: &Jet2| j.degree().is_none_or(|d| d <= k);
    // a jet truncated below its true degree cannot be certified equal
    fits(a) && fits(b) && a.truncate(k) == b.truncate(k)
}

/// Whether the stored variable order of a chart is `(s, t)` or `(u, x)`.
pub fn chart_names(ux: bool) -> (&'static str, &'static str) {
    if ux {
        ("u", "x")
    } else {
        ("s", "t")
    }
}
