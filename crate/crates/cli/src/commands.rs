//! One function per subcommand, each producing a [`Report`].

use std::io::Read as _;

use rayon::prelude::*;
use serde_json::{json, Value};
use tanvar_core::classify::chart_names;
use tanvar_core::surfaces::saji_analysis;
use tanvar_core::tangency::TangencyError;
use tanvar_core::{
    classify, curve_type, enumerate_generic, generating_family_tangent, morin_versal_opening, normal_form,
    opening_check, ordinary_point_class, slice_identity_residual, tangent_map, transversal_slice,
    veronese_membership, CurveClass, CurveGerm, ExtOrder, Jet2, SajiVerdict, SingularityClass, SymMatrix3,
    TangentMapGerm, TypeSequence, TypeVerdict,
};

use crate::doc::{parse_rational, GermDocument, Kind};
use crate::mesh::{sample, Sampling};
use crate::{parse_type, CliError, ClassArgs, Command, MeshArgs, Report, Status};

pub fn dispatch(cmd: &Command) -> Result<Report, CliError> {
    match cmd {
        Command::Type { file } => cmd_type(&read_doc(file)?),
        Command::Classify { ty, curve, class } => cmd_classify(ty.as_deref(), curve.as_deref(), class),
        Command::Enumerate { class } => cmd_enumerate(class),
        Command::Codim { ty, class } => cmd_codim(ty, class),
        Command::Tangent { file, mesh } => cmd_tangent(&read_doc(file)?, mesh),
        Command::Surface { file } => cmd_surface(&read_doc(file)?),
        Command::Veronese { file, diag } => cmd_veronese(file.as_deref(), diag.as_deref()),
        Command::Opening { file } => cmd_opening(&read_doc(file)?),
        Command::Morin { k, m } => cmd_morin(*k, *m),
        Command::Family { ty } => cmd_family(ty),
        Command::NormalForm { name, dim, chart, mesh } => cmd_normal_form(name, *dim, chart, mesh),
        Command::Batch { files } => cmd_batch(files),
    }
}

pub fn read_doc(path: &str) -> Result<GermDocument, CliError> {
    let text = if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::invalid(format!("reading stdin: {e}")))?;
        s
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::invalid(format!("reading {path}: {e}")))?
    };
    GermDocument::parse(&text)
}

fn type_json(a: &TypeSequence) -> Value {
    json!(a.entries())
}

fn order_json(o: ExtOrder) -> Value {
    match o {
        ExtOrder::Finite(d) => json!(d),
        ExtOrder::AboveTruncation => Value::Null,
    }
}

fn order_text(o: ExtOrder) -> String {
    match o {
        ExtOrder::Finite(d) => d.to_string(),
        ExtOrder::AboveTruncation => "above truncation".into(),
    }
}

pub fn cmd_type(doc: &GermDocument) -> Result<Report, CliError> {
    let g = doc.to_curve()?;
    let mut r = Report::new("type");
    r.set("truncation", g.truncation());
    match curve_type(&g) {
        TypeVerdict::Finite(a) => {
            r.line(format!("type {a}")).set("type", type_json(&a));
        }
        TypeVerdict::NotFiniteTypeUpTo(k) => {
            r.line(format!("not finite type up to {k}")).set("type", Value::Null).set("not_finite_up_to", k);
            r.inconclusive();
        }
    }
    Ok(r)
}

fn classification_lines(r: &mut Report, a: &TypeSequence, class: &CurveClass) -> Result<(), CliError> {
    let c = classify(a, class).map_err(|e| CliError::invalid(e.to_string()))?;
    let generic = if c.generic { "generic" } else { "non-generic" };
    r.line(format!("{}, {generic}", c.singularity));
    r.set("singularity", c.singularity.slug()).set("generic", c.generic).set("class", class.to_string());
    match class.codim(a) {
        Ok(d) => {
            r.line(format!("codimension {d} in {class}"));
            r.set("codimension", d);
        }
        Err(e) => {
            r.line(format!("codimension undefined: {e}"));
            r.set("codimension", Value::Null);
        }
    }
    if let Some(note) = c.singularity.caveat() {
        r.line(format!("caveat: {note}"));
        r.set("caveat", note);
    }
    if c.singularity == SingularityClass::Unclassified {
        r.inconclusive();
    }
    Ok(())
}

pub fn cmd_classify(ty: Option<&str>, curve: Option<&str>, class: &ClassArgs) -> Result<Report, CliError> {
    let mut r = Report::new("classify");
    let a = match (ty, curve) {
        (Some(t), _) => parse_type(t)?,
        (None, Some(path)) => {
            let g = read_doc(path)?.to_curve()?;
            match curve_type(&g) {
                TypeVerdict::Finite(a) => a,
                TypeVerdict::NotFiniteTypeUpTo(k) => {
                    r.line(format!("not finite type up to {k}")).set("not_finite_up_to", k);
                    r.inconclusive();
                    return Ok(r);
                }
            }
        }
        (None, None) => return Err(CliError::invalid("give --type or --curve")),
    };
    let cls = class.resolve(Some(a.len()))?;
    r.line(format!("type {a}")).set("type", type_json(&a));
    classification_lines(&mut r, &a, &cls)?;
    Ok(r)
}

pub fn cmd_enumerate(class: &ClassArgs) -> Result<Report, CliError> {
    let cls = class.resolve(None)?;
    let list = enumerate_generic(&cls).map_err(|e| CliError::invalid(e.to_string()))?;
    let mut r = Report::new("enumerate");
    r.line(format!("{} generic types in {cls}", list.len()));
    let mut items = Vec::new();
    for a in &list {
        let d = cls.codim(a).map_err(|e| CliError::invalid(e.to_string()))?;
        r.line(format!("{a} codim {d}"));
        items.push(json!({ "type": a.entries(), "codimension": d }));
    }
    r.set("class", cls.to_string()).set("types", items);
    Ok(r)
}

pub fn cmd_codim(ty: &str, class: &ClassArgs) -> Result<Report, CliError> {
    let a = parse_type(ty)?;
    let cls = class.resolve(Some(a.len()))?;
    let d = cls.codim(&a).map_err(|e| CliError::invalid(e.to_string()))?;
    let mut r = Report::new("codim");
    r.line(d.to_string()).set("type", type_json(&a)).set("class", cls.to_string()).set("codimension", d);
    Ok(r)
}

fn sampling_from(m: &MeshArgs) -> Result<(Sampling, [usize; 3]), CliError> {
    let (lo, hi) = m.range.split_once(',').ok_or_else(|| CliError::invalid("--range expects lo,hi"))?;
    let parse = |s: &str| s.trim().parse::<f64>().map_err(|_| CliError::invalid(format!("bad range bound {s:?}")));
    let coords: Vec<usize> = m
        .coords
        .split(',')
        .map(|s| s.trim().parse().map_err(|_| CliError::invalid(format!("bad coordinate {s:?}"))))
        .collect::<Result<_, _>>()?;
    let coords: [usize; 3] = coords.try_into().map_err(|_| CliError::invalid("--coords expects three indices"))?;
    Ok((Sampling { lo: parse(lo)?, hi: parse(hi)?, grid: m.grid }, coords))
}

fn write_mesh(r: &mut Report, map: &[Jet2], m: &MeshArgs, what: &str) -> Result<(), CliError> {
    let Some(path) = &m.mesh else { return Ok(()) };
    let (sampling, coords) = sampling_from(m)?;
    let provenance = format!(
        "{what}; coordinates {},{},{}; parameters in [{}, {}]^2; grid {}x{}",
        coords[0], coords[1], coords[2], sampling.lo, sampling.hi, sampling.grid, sampling.grid
    );
    let mesh = sample(map, coords, sampling, provenance)?;
    std::fs::write(path, mesh.to_obj()).map_err(|e| CliError::invalid(format!("writing {}: {e}", path.display())))?;
    r.line(format!("mesh: {} vertices, {} faces -> {}", mesh.vertices.len(), mesh.faces.len(), path.display()));
    r.set("mesh", json!({ "path": path.display().to_string(), "vertices": mesh.vertices.len(), "faces": mesh.faces.len() }));
    Ok(())
}

/// Frontality verdict of a tangent map; `Ok(order)` when certified.
fn frontality(t: &TangentMapGerm) -> Result<usize, TangencyError> {
    let certs = opening_check(t)?;
    Ok(certs.iter().map(|c| c.verified_order).min().unwrap_or(t.components[0].truncation().saturating_sub(1)))
}

fn tangent_report(g: &CurveGerm, doc: &GermDocument, r: &mut Report) -> Result<Option<TangentMapGerm>, CliError> {
    let t = match tangent_map(g) {
        Ok(t) => t,
        Err(TangencyError::NotFiniteType(k)) => {
            r.line(format!("not finite type up to {k}")).set("not_finite_up_to", k);
            r.inconclusive();
            return Ok(None);
        }
        Err(TangencyError::Divisibility { component, power }) => {
            r.line(format!(
                "not frontal up to {}: derivative of component {component} is not divisible by t^{power}",
                g.truncation()
            ));
            r.set("frontal", false).set("failing_component", component);
            r.inconclusive();
            return Ok(None);
        }
        Err(e) => return Err(CliError::invalid(e.to_string())),
    };
    let a = t.source_type.clone();
    r.line(format!("type {a}")).set("type", type_json(&a));
    let kf = t.components[0].truncation();
    for (i, f) in t.components.iter().enumerate() {
        r.line(format!("f{} = {}", i + 1, f.display_with("s", "t")));
    }
    r.set("tangent_map", t.components.iter().map(|f| f.display_with("s", "t")).collect::<Vec<_>>());
    r.set("tangent_truncation", kf);
    let cls = doc.curve_class(a.len())?;
    let c = classify(&a, &cls).map_err(|e| CliError::invalid(e.to_string()))?;
    r.set("singularity", c.singularity.slug()).set("generic", c.generic);
    match frontality(&t) {
        Ok(order) => {
            r.line(format!("frontal up to {order}; {} (type {a})", c.singularity));
            r.set("frontal", true).set("verified_order", order);
            let lift = t.lift_coefficients.as_ref().expect("certified lift");
            let mut orders = Vec::new();
            for pair in lift {
                r.line(format!(
                    "order P{i} = {}, order Q{i} = {}",
                    order_text(pair.p.order()),
                    order_text(pair.q.order()),
                    i = pair.index
                ));
                orders.push(json!({ "index": pair.index, "p": order_json(pair.p.order()), "q": order_json(pair.q.order()) }));
            }
            r.set("lift_orders", orders);
            if c.singularity == SingularityClass::Unclassified {
                r.inconclusive();
            }
        }
        Err(TangencyError::NotFrontalUpTo { truncation, component }) => {
            r.line(format!("not frontal up to {truncation}: component {component} has no Wronskian quotient"));
            r.set("frontal", false).set("failing_component", component);
            r.inconclusive();
        }
        Err(e) => {
            r.line(format!("not frontal: {e}"));
            r.set("frontal", false);
            r.inconclusive();
        }
    }
    if let Some(note) = c.singularity.caveat() {
        r.line(format!("caveat: {note}"));
    }
    Ok(Some(t))
}

pub fn cmd_tangent(doc: &GermDocument, mesh: &MeshArgs) -> Result<Report, CliError> {
    let g = doc.to_curve()?;
    let mut r = Report::new("tangent");
    if let Some(t) = tangent_report(&g, doc, &mut r)? {
        let what = format!("tangent map of a curve of type {}", t.source_type);
        write_mesh(&mut r, &t.components, mesh, &what)?;
    }
    Ok(r)
}

fn rationals(v: &[tanvar_core::Rational]) -> Value {
    json!(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn cmd_surface(doc: &GermDocument) -> Result<Report, CliError> {
    let s = doc.to_surface()?;
    let cls = ordinary_point_class(&s);
    let g = transversal_slice(&s);
    let identity_holds = slice_identity_residual(&g).iter().all(Jet2::is_zero);
    let saji = saji_analysis(&g);
    let mut r = Report::new("surface");
    r.line(format!("{}, H={}, {}", cls.kind, cls.h, saji.verdict));
    r.line(format!("(a, b, c, e) = ({}, {}, {}, {})", s.quad[0], s.quad[1], s.quad[2], s.quad[3]));
    r.line(format!("x5 = {}", s.x5.display_with("u", "v")));
    for (i, gi) in g.iter().enumerate() {
        r.line(format!("g{} = {}", i + 1, gi.display_with("u", "v")));
    }
    let k = s.truncation().saturating_sub(1);
    r.line(format!("slice identity dg3 + u dg1 + v dg2 = 0: {} up to order {k}", if identity_holds { "holds" } else { "fails" }));
    if let Some(h) = &saji.hessian {
        r.line(format!("Hessian determinant of lambda: {h}"));
    }
    r.set("point", cls.kind.to_string())
        .set("H", cls.h.to_string())
        .set("quad", rationals(&s.quad))
        .set("slice", g.iter().map(|x| x.display_with("u", "v")).collect::<Vec<_>>())
        .set("slice_identity", identity_holds)
        .set("verdict", saji.verdict.to_string())
        .set("lambda_hessian", saji.hessian.as_ref().map(ToString::to_string));
    if matches!(saji.verdict, SajiVerdict::Inconclusive(_)) || !identity_holds {
        r.inconclusive();
    }
    Ok(r)
}

pub fn cmd_veronese(file: Option<&str>, diag: Option<&str>) -> Result<Report, CliError> {
    let m = match (file, diag) {
        (_, Some(d)) => {
            let v = d.split(',').map(parse_rational).collect::<Result<Vec<_>, _>>()?;
            let v: [tanvar_core::Rational; 3] = v.try_into().map_err(|_| CliError::invalid("--diag expects a,b,c"))?;
            SymMatrix3::diag(v)
        }
        (Some(f), None) => read_doc(f)?.to_matrix()?,
        (None, None) => return Err(CliError::invalid("give a matrix document or --diag")),
    };
    let stratum = veronese_membership(&m).map_err(|e| CliError::invalid(e.to_string()))?;
    let mut r = Report::new("veronese");
    r.line(stratum.to_string());
    r.line(format!("det = {}, sum of principal 2x2 minors = {}", m.det(), m.principal_minor_sum()));
    r.set("stratum", format!("{stratum:?}"))
        .set("det", m.det().to_string())
        .set("minor_sum", m.principal_minor_sum().to_string());
    Ok(r)
}

pub fn cmd_opening(doc: &GermDocument) -> Result<Report, CliError> {
    let g = doc.to_curve()?;
    let t = tangent_map(&g).map_err(|e| CliError::invalid(e.to_string()))?;
    let mut r = Report::new("opening");
    r.line(format!("type {}", t.source_type)).set("type", type_json(&t.source_type));
    match opening_check(&t) {
        Ok(certs) => {
            let mut items = Vec::new();
            for (i, c) in certs.iter().enumerate() {
                let idx = i + 3;
                let p = c.multipliers[0].display_with("s", "t");
                let q = c.multipliers[1].display_with("s", "t");
                r.line(format!("df{idx} = ({p}) df1 + ({q}) df2 up to order {}", c.verified_order));
                items.push(json!({ "index": idx, "p": p, "q": q, "verified_order": c.verified_order }));
            }
            if certs.is_empty() {
                r.line("no components beyond f1, f2");
            }
            r.set("certificates", items);
        }
        Err(e) => {
            r.line(format!("no certificate: {e}"));
            r.inconclusive();
        }
    }
    Ok(r)
}

pub fn cmd_morin(k: usize, m: usize) -> Result<Report, CliError> {
    if k == 0 {
        return Err(CliError::invalid("--k must be at least 1"));
    }
    let o = morin_versal_opening(k, m);
    let mut r = Report::new("morin");
    r.line(format!("F = {}", o.f));
    for (i, g) in o.g.iter().enumerate() {
        r.line(format!("G{} = {}", i + 1, g));
    }
    r.line(format!("{} generators", o.generators.len()));
    for (label, p) in &o.generators {
        r.line(format!("{label} = {p}"));
    }
    r.set("k", k).set("m", m).set("F", o.f.to_string());
    r.set("G", o.g.iter().map(ToString::to_string).collect::<Vec<_>>());
    r.set(
        "generators",
        o.generators.iter().map(|(l, p)| json!({ "label": l, "polynomial": p.to_string() })).collect::<Vec<_>>(),
    );
    Ok(r)
}

pub fn cmd_family(ty: &str) -> Result<Report, CliError> {
    let a = parse_type(ty)?;
    let fam = generating_family_tangent(&a).map_err(|e| CliError::invalid(e.to_string()))?;
    let mut r = Report::new("family");
    r.line(format!("type {a}, pattern {}", fam.pattern));
    for s in &fam.solutions {
        r.line(s.to_string());
    }
    r.set("type", type_json(&a))
        .set("pattern", fam.pattern.to_string())
        .set("solutions", fam.solutions.iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(r)
}

pub fn cmd_normal_form(name: &str, dim: Option<usize>, chart: &str, mesh: &MeshArgs) -> Result<Report, CliError> {
    let class = SingularityClass::from_slug(name).ok_or_else(|| {
        let names: Vec<&str> = SingularityClass::ALL.iter().map(|c| c.slug()).collect();
        CliError::invalid(format!("unknown singularity {name:?}; expected one of {}", names.join(", ")))
    })?;
    let default_dim = match class {
        SingularityClass::CuspidalEdge
        | SingularityClass::FoldedUmbrella
        | SingularityClass::Swallowtail
        | SingularityClass::MondSurface
        | SingularityClass::GenericFoldedPleat => 3,
        _ => 4,
    };
    let nf = normal_form(class, dim.unwrap_or(default_dim)).map_err(|e| CliError::invalid(e.to_string()))?;
    let ux = match chart {
        "st" => false,
        "ux" => true,
        other => return Err(CliError::invalid(format!("unknown chart {other:?}; use st or ux"))),
    };
    let comps = if ux {
        nf.ux_chart.clone().ok_or_else(|| CliError::invalid(format!("no (u, x) chart is known for {class}")))?
    } else {
        nf.st_chart.clone()
    };
    let (x, y) = chart_names(ux);
    let mut r = Report::new("normal-form");
    r.line(format!("{class} in {} coordinates, chart ({x}, {y})", nf.ambient_dim));
    for (i, c) in comps.iter().enumerate() {
        r.line(format!("x{} = {}", i + 1, c.display_with(x, y)));
    }
    if !nf.certified {
        r.line("representative only: tangent map of the monomial curve (2,3,5)");
    }
    if let Some(note) = class.caveat() {
        r.line(format!("caveat: {note}"));
    }
    r.set("singularity", class.slug())
        .set("chart", chart)
        .set("ambient_dim", nf.ambient_dim)
        .set("certified", nf.certified)
        .set("components", comps.iter().map(|c| c.display_with(x, y)).collect::<Vec<_>>());
    write_mesh(&mut r, &comps, mesh, &format!("{class} normal form, chart ({x}, {y})"))?;
    Ok(r)
}

fn analyse_document(doc: &GermDocument) -> Result<Report, CliError> {
    match doc.kind {
        Kind::Curve => {
            let g = doc.to_curve()?;
            let mut r = Report::new("curve");
            tangent_report(&g, doc, &mut r)?;
            Ok(r)
        }
        Kind::Surface => cmd_surface(doc),
        Kind::Matrix => {
            let m = doc.to_matrix()?;
            let stratum = veronese_membership(&m).map_err(|e| CliError::invalid(e.to_string()))?;
            let mut r = Report::new("veronese");
            r.line(stratum.to_string()).set("stratum", format!("{stratum:?}"));
            Ok(r)
        }
    }
}

pub fn cmd_batch(files: &[String]) -> Result<Report, CliError> {
    if files.iter().any(|f| f == "-") {
        return Err(CliError::invalid("batch reads files only, not stdin"));
    }
    let results: Vec<(String, Result<Report, CliError>)> =
        files.par_iter().map(|f| (f.clone(), read_doc(f).and_then(|d| analyse_document(&d)))).collect();
    let mut r = Report::new("batch");
    let mut items = Vec::new();
    let mut worst = Status::Success;
    for (path, res) in results {
        r.line(format!("== {path}"));
        match res {
            Ok(sub) => {
                r.lines.extend(sub.lines.iter().cloned());
                if sub.status == Status::Inconclusive && worst == Status::Success {
                    worst = Status::Inconclusive;
                }
                items.push(json!({ "path": path, "report": sub.structured() }));
            }
            Err(e) => {
                r.line(format!("error: {e}"));
                worst = Status::Invalid;
                items.push(json!({ "path": path, "error": e.message }));
            }
        }
    }
    r.set("documents", items);
    r.status = worst;
    Ok(r)
}
