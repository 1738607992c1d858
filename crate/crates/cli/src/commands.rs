use omlkit::central::{center, central_cover, has_relative_center_property, is_irreducible};
use omlkit::classes::{class_as_set, ClassName};
use omlkit::decomposition::type_decomposition;
use omlkit::equivalence::projectivity_classes;
use omlkit::lattice::io::{load_input, load_oml, LatticeFile};
use omlkit::lattice::validate_oml;
use omlkit::td::td_closure;
use omlkit::{Error, Oml, ProjectionSet};
use serde_json::{json, Value};

use crate::{dot, table, Output};

fn to_json(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .expect("json values serialize")
}

pub fn validate(input: &str, pretty: bool) -> Result<Output, Error> {
    let (name, raw) = load_input(input)?;
    let report = validate_oml(&raw)?;
    let failures: Vec<Value> = report
        .failures
        .iter()
        .map(|f| {
            json!({
                "axiom": f.axiom.name(),
                "witness": f.witness,
                "witness_labels": f.witness.iter().map(|&i| &raw.labels[i]).collect::<Vec<_>>(),
            })
        })
        .collect();
    let v = json!({
        "name": name,
        "size": raw.len(),
        "ok": report.ok,
        "failure": report.first_failure().map(|f| f.axiom.name()),
        "failures": failures,
    });
    let text = if pretty {
        let mut lines = vec![("lattice", name.clone()), ("size", raw.len().to_string())];
        lines.push(("status", if report.ok { "valid OML".into() } else { "INVALID".into() }));
        let mut text = table::key_values(&lines);
        if !report.ok {
            let rows: Vec<Vec<String>> = report
                .failures
                .iter()
                .map(|f| {
                    let labels: Vec<&str> = f.witness.iter().map(|&i| raw.labels[i].as_str()).collect();
                    vec![f.axiom.name().to_string(), labels.join(", ")]
                })
                .collect();
            text.push_str("\n\n");
            text.push_str(&table::render(&["axiom", "witness"], &rows));
        }
        text
    } else {
        to_json(&v, false)
    };
    Ok(Output { text, code: if report.ok { 0 } else { 2 } })
}

fn labels(l: &Oml, s: &ProjectionSet) -> Vec<String> {
    s.labels(l).into_iter().map(|x| x.to_string()).collect()
}

pub fn analyze(input: &str, pretty: bool) -> Result<Output, Error> {
    let l = load_oml(input)?;
    let cls: Vec<(ClassName, ProjectionSet)> = ClassName::ALL.iter().map(|&n| (n, class_as_set(&l, n))).collect();
    let classes: serde_json::Map<String, Value> =
        cls.iter().map(|(n, s)| (n.to_string(), json!(labels(&l, s)))).collect();
    let gamma: Vec<Value> = l
        .elements()
        .map(|p| json!({"element": l.label(p), "cover": l.label(central_cover(&l, p))}))
        .collect();
    let part = projectivity_classes(&l);
    let proj: Vec<Vec<&str>> =
        part.classes.iter().map(|c| c.iter().map(|&p| l.label(p)).collect()).collect();
    let v = json!({
        "name": l.name(),
        "size": l.len(),
        "elements": l.labels(),
        "center": labels(&l, center(&l)),
        "irreducible": is_irreducible(&l),
        "modular": l.is_modular_lattice(),
        "boolean": l.is_boolean_lattice(),
        "relative_center_property": has_relative_center_property(&l),
        "central_cover": gamma,
        "projectivity_classes": proj,
        "classes": classes,
    });
    if !pretty {
        return Ok(Output::ok(to_json(&v, false)));
    }
    let mut text = table::key_values(&[
        ("lattice", l.name().to_string()),
        ("size", l.len().to_string()),
        ("center", labels(&l, center(&l)).join(" ")),
        ("irreducible", is_irreducible(&l).to_string()),
        ("modular", l.is_modular_lattice().to_string()),
        ("boolean", l.is_boolean_lattice().to_string()),
        ("projectivity classes", part.classes.len().to_string()),
    ]);
    let mark = |b: bool| if b { "x" } else { "" }.to_string();
    let rows: Vec<Vec<String>> = l
        .elements()
        .map(|p| {
            let mut row = vec![l.label(p).to_string(), l.label(central_cover(&l, p)).to_string()];
            row.push(part.class(p).to_string());
            row.extend(cls.iter().map(|(_, s)| mark(s.contains(p))));
            row
        })
        .collect();
    text.push_str("\n\n");
    text.push_str(&table::render(&["element", "cover", "class", "B", "M", "M0", "T"], &rows));
    Ok(Output::ok(text))
}

/// `zero`, `center`, a class name or a JSON array of labels.
fn resolve_set(l: &Oml, spec: &str) -> Result<ProjectionSet, Error> {
    let spec = spec.trim();
    match spec {
        "zero" => return Ok(ProjectionSet::from_elems(l.len(), [l.bottom()])),
        "center" => return Ok(center(l).clone()),
        _ => {}
    }
    if spec.starts_with('[') {
        let names: Vec<String> =
            serde_json::from_str(spec).map_err(|e| Error::Input(format!("bad label list `{spec}`: {e}")))?;
        let elems = names
            .iter()
            .map(|n| l.find(n).ok_or_else(|| Error::Input(format!("no element labelled `{n}` in {}", l.name()))))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(ProjectionSet::from_elems(l.len(), elems));
    }
    Ok(class_as_set(l, spec.parse()?))
}

pub fn decompose(
    input: &str,
    q: Option<&str>,
    k: Option<&str>,
    preset: Option<&str>,
    no_close: bool,
    pretty: bool,
) -> Result<Output, Error> {
    let l = load_oml(input)?;
    let (q_spec, k_spec) = match preset {
        Some("jw") => {
            if q.is_some() || k.is_some() {
                return Err(Error::Input("--preset cannot be combined with --Q/--K".into()));
            }
            ("B", "M")
        }
        Some(other) => return Err(Error::Input(format!("unknown preset `{other}` (known: jw)"))),
        None => (q.unwrap_or("B"), k.unwrap_or("M")),
    };
    let mut warnings = Vec::new();
    let mut resolve = |name: &str, spec: &str| -> Result<ProjectionSet, Error> {
        let raw = resolve_set(&l, spec)?;
        if no_close {
            return Ok(raw);
        }
        let closed = td_closure(&l, &raw);
        if closed != raw {
            warnings.push(format!("{name} replaced by its TD closure ({} → {} elements)", raw.len(), closed.len()));
        }
        Ok(closed)
    };
    let qs = resolve("Q", q_spec)?;
    let ks = resolve("K", k_spec)?;
    for w in &warnings {
        eprintln!("warning: {w}");
    }
    let report = type_decomposition(&l, &qs, &ks)?;
    let report_json = serde_json::to_value(&report).expect("report serializes");
    if pretty {
        let mut text = table::key_values(&[
            ("lattice", l.name().to_string()),
            ("Q", labels(&l, &qs).join(" ")),
            ("K", labels(&l, &ks).join(" ")),
        ]);
        let obj = report_json.as_object().expect("object");
        let rows: Vec<Vec<String>> = obj
            .iter()
            .filter(|(k, _)| *k != "covers")
            .chain(obj["covers"].as_object().expect("object").iter())
            .map(|(k, v)| vec![k.clone(), v["label"].as_str().unwrap_or("").to_string(), v["index"].to_string()])
            .collect();
        text.push_str("\n\n");
        text.push_str(&table::render(&["part", "element", "index"], &rows));
        return Ok(Output::ok(text));
    }
    let v = json!({
        "name": l.name(),
        "Q": labels(&l, &qs),
        "K": labels(&l, &ks),
        "closed": !no_close,
        "warnings": warnings,
        "report": report_json,
    });
    Ok(Output::ok(to_json(&v, false)))
}

pub fn export_dot(input: &str) -> Result<Output, Error> {
    Ok(Output::ok(dot::render(&load_oml(input)?)))
}

pub fn export_json(input: &str) -> Result<Output, Error> {
    Ok(Output::ok(LatticeFile::from_oml(&load_oml(input)?).to_json()))
}
