//! One builder per subcommand: runs the library pipeline, cross-checks the
//! redundant routes it exposes, and assembles the JSON/text/TSV renderings.

use carpetcalc_core::{
    hyperelliptic_model, two_component_condition, CarpetSpec, ChowClass, Error,
    HirzebruchDivisor, HyperellipticModel, JoinThreefold, Lattice2, LatticeModel, MatchStatus,
    PrimeEvidence, Result,
};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::Zero;
use serde_json::{json, Value};

use crate::output::{
    bundle, bundle_text, document, int, interval, rational, sourced, triple, Report,
};
use crate::render::{kv, table, Style};

/// Divisor cohomology on a Hirzebruch surface, with the two independent
/// recomputations (lattice count, Riemann–Roch) that back the main numbers.
pub fn cohomology(n: i64, x: i64, y: i64, style: &Style) -> Result<Report> {
    let d = HirzebruchDivisor::new(n, x, y)?;
    let coh = d.cohomology();
    let rr = d.riemann_roch_chi();
    let count = d.h0_lattice_count();
    if rr != coh.chi() {
        return Err(Error::internal(format!(
            "Riemann–Roch gives {rr} but the pushforward route gives {}",
            coh.chi()
        )));
    }
    if count != coh.h0 {
        return Err(Error::internal(format!(
            "lattice-point count {count} disagrees with h0 = {}",
            coh.h0
        )));
    }
    let dual = d.serre_dual();
    let push = d.pushforward();
    let r1 = d.r1_pushforward();

    let results = json!({
        "surface": {"index": n},
        "divisor": {"x": x, "y": y},
        "cohomology": sourced("derived", triple(&coh)?),
        "chi": sourced("derived", int(&coh.chi())?),
        "riemann_roch_chi": int(&rr)?,
        "h0_lattice_count": int(&count)?,
        "serre_dual": {"x": int(dual.x())?, "y": int(dual.y())?},
        "pushforward": bundle(&push)?,
        "r1_pushforward": bundle(&r1)?,
    });

    let mut text = style.title(&format!("Line bundle cohomology on F_{n}"));
    text.push('\n');
    text.push_str(&kv(&[
        ("divisor class", format!("({x}, {y})")),
        ("h0", coh.h0.to_string()),
        ("h1", coh.h1.to_string()),
        ("h2", coh.h2.to_string()),
        ("chi", coh.chi().to_string()),
        ("riemann_roch_chi", rr.to_string()),
        ("h0_lattice_count", count.to_string()),
        ("serre_dual", format!("({}, {})", dual.x(), dual.y())),
        ("pushforward", bundle_text(&push)),
        ("r1_pushforward", bundle_text(&r1)),
    ]));

    Ok(Report {
        json: document("cohomology", json!({"n": n, "x": x, "y": y}), results),
        text,
        tsv: None,
    })
}

fn lattice_json(l: &Lattice2) -> Result<Value> {
    let g = l.gram();
    Ok(json!({
        "labels": l.labels(),
        "gram": [[int(&g[0][0])?, int(&g[0][1])?], [int(&g[1][0])?, int(&g[1][1])?]],
        "det": int(&l.det())?,
    }))
}

fn model_json(m: &HyperellipticModel) -> Result<Value> {
    Ok(json!({
        "family": m.model.label(),
        "n": m.n,
        "lattice": lattice_json(&m.lattice)?,
        "class": [int(&m.class[0])?, int(&m.class[1])?],
        "self_intersection": int(&m.self_int)?,
        "genus": int(&m.genus)?,
        "divisibility": int(&m.divisibility)?,
        "primitive": m.primitive,
    }))
}

fn class_text(coords: &[BigInt; 2], labels: [&str; 2]) -> String {
    format!("{}*{} + {}*{}", coords[0], labels[0], coords[1], labels[1])
}

/// Full carpet report: numeric invariants, Hilbert-scheme tangent data, and
/// component membership.
pub fn carpet(a: i64, b: i64, style: &Style) -> Result<Report> {
    let spec = CarpetSpec::new(a, b)?;
    let scroll = spec.scroll();
    let inv = spec.invariants();
    let ribbon = spec.hyperplane_section();
    let count = scroll.carpet_count()?;
    let smooth = spec.smoothness()?;
    let membership = spec.component_membership()?;

    let (prime_kind, prime_model) = match &membership.prime {
        PrimeEvidence::Hyperelliptic(m) => ("hyperelliptic", Some(m)),
        PrimeEvidence::BalancedDegeneration => ("balanced_degeneration", None),
    };
    let results = json!({
        "scroll": {
            "a": a,
            "b": b,
            "index": scroll.hirzebruch_index(),
            "degree": scroll.degree(),
            "ambient_dim": scroll.ambient_dim(),
        },
        "carpet": {
            "genus": int(&inv.genus)?,
            "ambient_dim": int(&inv.ambient_dim)?,
            "degree": int(&inv.degree)?,
            "chi_structure_sheaf": int(&inv.chi_structure_sheaf)?,
            "h1_structure_sheaf": int(&inv.h1_structure_sheaf)?,
            "trivial_canonical": inv.trivial_canonical,
        },
        "hyperplane_ribbon": {
            "support_degree": int(&ribbon.support_degree)?,
            "ambient_dim": int(&ribbon.ambient_dim)?,
            "degree": int(&ribbon.degree)?,
            "arithmetic_genus": int(&ribbon.arithmetic_genus)?,
        },
        "carpet_count": sourced("paper", int(&count)?),
        "smoothness": {
            "chi_normal": sourced("paper", int(&smooth.chi_normal)?),
            "expected_dim": int(&smooth.expected_dim)?,
            "h0": interval(&smooth.h0)?,
            "h1": sourced("derived", interval(&smooth.h1)?),
            "h2": int(&smooth.h2)?,
            "h1_omega_dual": int(&smooth.h1_omega_dual)?,
            "h1_omega_minus2": int(&smooth.h1_omega_minus2)?,
            "smooth_point": sourced("paper", smooth.smooth_point.into()),
        },
        "component_membership": {
            "genus": int(&membership.genus)?,
            "prime": {
                "kind": prime_kind,
                "model": match prime_model {
                    Some(m) => model_json(m)?,
                    None => Value::Null,
                },
            },
            "second": match &membership.second {
                Some(m) => model_json(m)?,
                None => Value::Null,
            },
        },
    });

    let mut text = style.title(&format!("K3 carpet on the scroll S({a}, {b})"));
    text.push_str("\n\n");
    text.push_str(&style.heading("Scroll"));
    text.push('\n');
    text.push_str(&kv(&[
        ("a", a.to_string()),
        ("b", b.to_string()),
        ("index", scroll.hirzebruch_index().to_string()),
        ("degree", scroll.degree().to_string()),
        ("ambient dimension", scroll.ambient_dim().to_string()),
        ("carpets on scroll", count.to_string()),
    ]));
    text.push('\n');
    text.push_str(&style.heading("Carpet invariants"));
    text.push('\n');
    text.push_str(&kv(&[
        ("genus", inv.genus.to_string()),
        ("ambient dimension", inv.ambient_dim.to_string()),
        ("degree", inv.degree.to_string()),
        ("chi(O)", inv.chi_structure_sheaf.to_string()),
        ("h1(O)", inv.h1_structure_sheaf.to_string()),
        ("trivial canonical", style.yes_no(inv.trivial_canonical)),
    ]));
    text.push('\n');
    text.push_str(&style.heading("Hyperplane-section ribbon"));
    text.push('\n');
    text.push_str(&kv(&[
        ("support degree", ribbon.support_degree.to_string()),
        ("ambient dimension", ribbon.ambient_dim.to_string()),
        ("degree", ribbon.degree.to_string()),
        ("arithmetic genus", ribbon.arithmetic_genus.to_string()),
    ]));
    text.push('\n');
    text.push_str(&style.heading("Hilbert-scheme tangent data"));
    text.push('\n');
    text.push_str(&kv(&[
        ("chi(normal)", smooth.chi_normal.to_string()),
        ("expected dimension", smooth.expected_dim.to_string()),
        ("h0(normal)", smooth.h0.to_string()),
        ("h1(normal)", smooth.h1.to_string()),
        ("h2(normal)", smooth.h2.to_string()),
        ("h1(omega dual)", smooth.h1_omega_dual.to_string()),
        ("h1(omega^-2)", smooth.h1_omega_minus2.to_string()),
        ("smooth point", style.yes_no(smooth.smooth_point)),
    ]));
    text.push('\n');
    text.push_str(&style.heading("Component membership"));
    text.push('\n');
    let second = match &membership.second {
        Some(m) => format!(
            "hyperelliptic K3 surfaces ({}, n = {}), divisibility {}",
            m.model, m.n, m.divisibility
        ),
        None => "none".to_string(),
    };
    text.push_str(&kv(&[
        ("genus", membership.genus.to_string()),
        ("prime component", membership.prime.to_string()),
        ("second component", second),
    ]));

    Ok(Report {
        json: document("carpet", json!({"a": a, "b": b}), results),
        text,
        tsv: None,
    })
}

/// Smoothness sweep over every scroll with 1 ≤ b ≤ a ≤ a_max.
pub fn sweep(a_max: i64, style: &Style) -> Result<Report> {
    struct Row {
        a: i64,
        b: i64,
        genus: i64,
        index: i64,
        chi: BigInt,
        h1: carpetcalc_core::Interval,
        smooth: bool,
    }
    let mut rows = Vec::new();
    for a in 1..=a_max {
        for b in 1..=a {
            let spec = CarpetSpec::new(a, b)?;
            let report = spec.smoothness()?;
            rows.push(Row {
                a,
                b,
                genus: spec.genus(),
                index: spec.scroll().hirzebruch_index(),
                chi: report.chi_normal,
                h1: report.h1,
                smooth: report.smooth_point,
            });
        }
    }

    let json_rows = rows
        .iter()
        .map(|r| {
            Ok(json!({
                "a": r.a,
                "b": r.b,
                "genus": r.genus,
                "index": r.index,
                "chi_normal": int(&r.chi)?,
                "h1": interval(&r.h1)?,
                "smooth": r.smooth,
            }))
        })
        .collect::<Result<Vec<Value>>>()?;
    let results = json!({"row_count": rows.len(), "rows": json_rows});

    let mut tsv = String::from("a\tb\tgenus\tindex\tchi_normal\th1_lo\th1_hi\th1_exact\tsmooth\n");
    for r in &rows {
        tsv.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\n",
            r.a,
            r.b,
            r.genus,
            r.index,
            r.chi,
            r.h1.lo(),
            r.h1.hi(),
            r.h1.is_exact(),
            r.smooth
        ));
    }

    let text_rows: Vec<Vec<String>> = rows
        .iter()
        .map(|r| {
            vec![
                r.a.to_string(),
                r.b.to_string(),
                r.genus.to_string(),
                r.index.to_string(),
                r.chi.to_string(),
                r.h1.to_string(),
                if r.smooth { "yes" } else { "no" }.to_string(),
            ]
        })
        .collect();
    let mut text = style.title(&format!(
        "Carpet smoothness sweep, 1 <= b <= a <= {a_max} ({} scrolls)",
        rows.len()
    ));
    text.push('\n');
    text.push_str(&table(
        style,
        &["a", "b", "genus", "index", "chi_normal", "h1(normal)", "smooth"],
        &text_rows,
    ));

    Ok(Report {
        json: document("sweep", json!({"a_max": a_max}), results),
        text,
        tsv: Some(tsv),
    })
}

/// A divisor class on the join threefold, checked to be integral and of
/// pure degree one before serialization.
fn divisor_class_json(class: &ChowClass) -> Result<Value> {
    for (coord, name) in [
        (&class.c, "constant"),
        (&class.alpha_h, "alpha*H"),
        (&class.beta_h, "beta*H"),
        (&class.alpha_beta, "alpha*beta"),
        (&class.point, "point"),
    ] {
        if !coord.is_zero() {
            return Err(Error::internal(format!(
                "expected a divisor class, found a {name} component in {class}"
            )));
        }
    }
    let as_int = |q: &BigRational| -> Result<Value> {
        if !q.is_integer() {
            return Err(Error::internal(format!(
                "expected integral divisor coefficients in {class}"
            )));
        }
        int(&q.to_integer())
    };
    Ok(json!({
        "h": as_int(&class.h)?,
        "alpha": as_int(&class.alpha)?,
        "beta": as_int(&class.beta)?,
    }))
}

/// Intersection-ring report for the join threefold resolution, including the
/// entry-by-entry comparison against the published multiplication table.
pub fn join(n0: i64, nprime: i64, style: &Style) -> Result<Report> {
    let x = JoinThreefold::new(n0, nprime)?;
    let degree = x.image_degree()?;
    let fano = x.fano_report()?;
    let identity = x.anticanonical_carpet_identity();
    let check = x.reference_table_check()?;
    let k = x.canonical_class();
    let e1 = x.section_first();
    let e2 = x.section_second();

    let entries = check
        .entries
        .iter()
        .map(|e| json!({"label": e.label, "status": e.status.label()}))
        .collect::<Vec<Value>>();
    let discrepancies = check
        .discrepancies
        .iter()
        .map(|d| json!({"id": d.id, "detail": d.detail}))
        .collect::<Vec<Value>>();
    let results = json!({
        "bundle": {"n0": n0, "nprime": nprime},
        "image": {
            "degree": sourced("paper", int(&degree)?),
            "anticanonical_multiple": sourced("paper", rational(&fano.lambda)),
            "fano": sourced("paper", fano.image_fano.into()),
        },
        "canonical_class": divisor_class_json(&k)?,
        "sections": {
            "first": divisor_class_json(&e1)?,
            "second": divisor_class_json(&e2)?,
        },
        "anticanonical_degrees": {
            "kappa1": rational(&fano.minus_k_kappa1),
            "kappa2": rational(&fano.minus_k_kappa2),
            "fiber": rational(&fano.minus_k_fiber),
            "cubed": rational(&fano.minus_k_cubed),
        },
        "fano": sourced("derived", fano.fano.into()),
        "weak_fano": sourced("derived", fano.weak_fano.into()),
        "anticanonical_carpet_identity": sourced("derived", identity.into()),
        "table_check": {
            "all_consistent": check.all_consistent,
            "entries": entries,
            "discrepancies": discrepancies,
        },
    });

    let mut text = style.title(&format!(
        "Join threefold resolution, bundle degrees ({n0}, {nprime})"
    ));
    text.push_str("\n\n");
    text.push_str(&style.heading("Singular image"));
    text.push('\n');
    text.push_str(&kv(&[
        ("degree", degree.to_string()),
        ("anticanonical multiple", fano.lambda.to_string()),
        ("fano image", style.yes_no(fano.image_fano)),
    ]));
    text.push('\n');
    text.push_str(&style.heading("Resolution"));
    text.push('\n');
    text.push_str(&kv(&[
        ("canonical class", k.to_string()),
        ("section (first ruling)", e1.to_string()),
        ("section (second ruling)", e2.to_string()),
        ("-K . kappa1", fano.minus_k_kappa1.to_string()),
        ("-K . kappa2", fano.minus_k_kappa2.to_string()),
        ("-K . fiber", fano.minus_k_fiber.to_string()),
        ("(-K)^3", fano.minus_k_cubed.to_string()),
        ("fano", style.yes_no(fano.fano)),
        ("weak fano", style.yes_no(fano.weak_fano)),
        ("carpet identity", style.yes_no(identity)),
    ]));
    text.push('\n');
    text.push_str(&style.heading("Reference table comparison"));
    text.push('\n');
    let entry_rows: Vec<(&str, String)> = check
        .entries
        .iter()
        .map(|e| {
            (
                e.label.as_str(),
                style.verdict(e.status.label(), e.status == MatchStatus::Match),
            )
        })
        .collect();
    text.push_str(&kv(&entry_rows));
    text.push('\n');
    text.push_str(&style.heading("Documented discrepancies"));
    text.push('\n');
    for d in &check.discrepancies {
        text.push_str(&format!("  {}\n      {}\n", d.id, d.detail));
    }

    Ok(Report {
        json: document("join", json!({"n0": n0, "nprime": nprime}), results),
        text,
        tsv: None,
    })
}

/// Lattice-family member report: Gram data, polarization invariants, and the
/// two-component genus condition.
pub fn lattice(model: LatticeModel, n: i64, style: &Style) -> Result<Report> {
    let m = hyperelliptic_model(model, n)?;
    let two_component = two_component_condition(&m.genus)?;
    // The index-4 family is the one the published component count pins down;
    // the low-index families are read off the Gram matrix here.
    let source = match model {
        LatticeModel::F4 => "paper",
        LatticeModel::F0 | LatticeModel::F1 => "derived",
    };

    let results = json!({
        "family": model.label(),
        "n": n,
        "lattice": lattice_json(&m.lattice)?,
        "class": [int(&m.class[0])?, int(&m.class[1])?],
        "self_intersection": int(&m.self_int)?,
        "genus": sourced(source, int(&m.genus)?),
        "divisibility": sourced(source, int(&m.divisibility)?),
        "primitive": sourced(source, m.primitive.into()),
        "two_component_genus": two_component,
    });

    let labels = m.lattice.labels();
    let g = m.lattice.gram();
    let mut text = style.title(&format!(
        "Hyperelliptic K3 lattice model {}, n = {n}",
        model.label()
    ));
    text.push('\n');
    text.push_str(&kv(&[
        (
            "gram matrix",
            format!(
                "[{} {}; {} {}]  (basis {}, {})",
                g[0][0], g[0][1], g[1][0], g[1][1], labels[0], labels[1]
            ),
        ),
        ("det", m.lattice.det().to_string()),
        ("polarization class", class_text(&m.class, labels)),
        ("self-intersection", m.self_int.to_string()),
        ("genus", m.genus.to_string()),
        ("divisibility", m.divisibility.to_string()),
        ("primitive", style.yes_no(m.primitive)),
        ("two-component genus", style.yes_no(two_component)),
    ]));

    Ok(Report {
        json: document(
            "lattice",
            json!({"model": model.label(), "n": n}),
            results,
        ),
        text,
        tsv: None,
    })
}

