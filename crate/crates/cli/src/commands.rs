//! One function per subcommand; each prints its report to stdout.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use oscoh::resonance::{self, BettiBoundsReport, EdgeWeight, VanishingCertificate};
use oscoh::{
    catalog, format, modn_cohomology_ranks, os_cohomology_dims, osalg, render_poincare, Arrangement,
    CohomologyReport, WeightVector,
};
use num_traits::Signed;
use serde_json::{json, Value};

use crate::{load_weights, modulus_u64, parse_integers, OutputFormat, Outcome};

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn list<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")
}

/// Write to stdout; a closed pipe (e.g. `| head`) is not an error.
fn out(text: &str) {
    let mut stdout = std::io::stdout().lock();
    if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
        if e.kind() != std::io::ErrorKind::BrokenPipe {
            eprintln!("error: writing output: {e}");
        }
    }
}

fn emit(fmt: OutputFormat, text: String, json: Value) {
    match fmt {
        OutputFormat::Text => out(&text),
        OutputFormat::Json => out(&(serde_json::to_string_pretty(&json).expect("serializable") + "\n")),
    }
}

fn weights_json(w: &WeightVector) -> Value {
    json!(w.lam().iter().map(ToString::to_string).collect::<Vec<_>>())
}

pub fn lattice(arr: &Arrangement, name: &str, fmt: OutputFormat) -> Result<Outcome> {
    let lat = arr.intersection_lattice();
    let mut t = String::new();
    writeln!(t, "arrangement: {name}")?;
    writeln!(t, "hyperplanes: {}  rank: {}  central: {}", arr.n(), arr.rank(), yes(arr.is_central()))?;
    for (i, label) in arr.labels().iter().enumerate() {
        writeln!(t, "  H{}: {label}", i + 1)?;
    }
    writeln!(t, "betti: {}", list(&arr.betti_numbers()))?;
    writeln!(t, "flats: {}", lat.flats().len())?;
    writeln!(t, "{:>5}  {:>7}  {:>5}  flat", "codim", "moebius", "dense")?;
    let mut flats = Vec::new();
    for f in lat.flats() {
        let dense = f.codim >= 1 && arr.is_dense(f.hyperplanes);
        writeln!(
            t,
            "{:>5}  {:>7}  {:>5}  {}",
            f.codim,
            f.moebius,
            if f.codim == 0 { "-" } else { yes(dense) },
            f.hyperplanes
        )?;
        flats.push(json!({
            "codim": f.codim,
            "hyperplanes": f.hyperplanes.iter().map(|i| i + 1).collect::<Vec<_>>(),
            "moebius": f.moebius,
            "dense": dense,
        }));
    }
    let j = json!({
        "arrangement": name,
        "n": arr.n(),
        "rank": arr.rank(),
        "central": arr.is_central(),
        "labels": arr.labels(),
        "betti": arr.betti_numbers(),
        "flats": flats,
    });
    emit(fmt, t, j);
    Ok(Outcome::Done)
}

fn cohomology_text(t: &mut String, r: &CohomologyReport) -> Result<()> {
    writeln!(t, "ring: {}", r.ring)?;
    writeln!(t, "poincare: {}", r.poincare())?;
    writeln!(t, "dims: {}", list(&r.dims))?;
    writeln!(t, "boundary ranks: {}", list(&r.boundary_ranks))?;
    if let Some(factors) = &r.invariant_factors {
        for (q, f) in factors.iter().enumerate() {
            writeln!(t, "invariant factors mod N of mu^{q}: [{}]", list(f))?;
        }
    }
    notes_text(t, &r.notes)
}

fn notes_text(t: &mut String, notes: &[String]) -> Result<()> {
    if !notes.is_empty() {
        writeln!(t, "notes:")?;
        for n in notes {
            writeln!(t, "  - {n}")?;
        }
    }
    Ok(())
}

fn cohomology_json(r: &CohomologyReport) -> Value {
    let mut v = serde_json::to_value(r).expect("serializable");
    v["ring"] = json!(r.ring.to_string());
    v["poincare"] = json!(r.poincare());
    v
}

pub fn oscohom(arr: &Arrangement, weights: &str, fmt: OutputFormat) -> Result<Outcome> {
    let w = load_weights(arr, weights)?;
    let r = os_cohomology_dims(arr, &w)?;
    let mut t = format!("weights: {w}\n");
    cohomology_text(&mut t, &r)?;
    let mut j = cohomology_json(&r);
    j["weights"] = weights_json(&w);
    emit(fmt, t, j);
    Ok(Outcome::Done)
}

pub fn modn(arr: &Arrangement, k: &str, modulus: u64, fmt: OutputFormat) -> Result<Outcome> {
    let k = parse_integers(k)?;
    if k.len() != arr.n() {
        bail!("expected {} integer weights, got {}", arr.n(), k.len());
    }
    let r = modn_cohomology_ranks(arr, &k, modulus)?;
    let mut t = format!("k: {}\nN: {modulus}\n", list(&k));
    cohomology_text(&mut t, &r)?;
    let mut j = cohomology_json(&r);
    j["k"] = json!(k.iter().map(ToString::to_string).collect::<Vec<_>>());
    j["N"] = json!(modulus);
    emit(fmt, t, j);
    Ok(Outcome::Done)
}

pub fn bounds_text(r: &BettiBoundsReport) -> String {
    let mut t = String::new();
    let _ = writeln!(t, "box: {}", r.box_radius);
    let _ = writeln!(t, "N: {}", r.modulus);
    let _ = writeln!(t, "{:>6}  {:>5}  {:>5}  exact", "degree", "lower", "upper");
    for d in &r.degrees {
        let _ = writeln!(t, "{:>6}  {:>5}  {:>5}  {}", d.degree, d.lower, d.upper, yes(d.exact));
    }
    let certified: Vec<String> =
        r.degrees.iter().filter(|d| d.exact).map(|d| format!("dim H^{} = {}", d.degree, d.lower)).collect();
    if !certified.is_empty() {
        let _ = writeln!(t, "certified: {}", certified.join(", "));
    }
    let _ = writeln!(t, "lower poincare (best found in box {}): {}", r.box_radius, render_poincare(&r.lower()));
    let _ = writeln!(t, "upper poincare: {}", render_poincare(&r.upper()));
    let _ = writeln!(t, "convention notes:");
    for n in &r.convention_notes {
        let _ = writeln!(t, "  - {n}");
    }
    t
}

pub fn bounds(arr: &Arrangement, weights: &str, radius: u32, fmt: OutputFormat) -> Result<Outcome> {
    let w = load_weights(arr, weights)?;
    let r = resonance::betti_bounds(arr, &w, radius)?;
    let t = format!("weights: {w}\n{}", bounds_text(&r));
    emit(fmt, t, serde_json::to_value(&r).expect("serializable"));
    Ok(Outcome::Done)
}

fn edge_text(t: &mut String, e: &EdgeWeight, inf: usize, name: &str) -> Result<()> {
    let members: Vec<String> =
        e.flat.iter().map(|i| if i == inf { "inf".to_string() } else { (i + 1).to_string() }).collect();
    writeln!(t, "  {{{}}} codim {}: {name} = {}", members.join(","), e.codim, e.value)?;
    Ok(())
}

fn certificate_text(t: &mut String, arr: &Arrangement, c: &VanishingCertificate) -> Result<()> {
    writeln!(t, "certificate (p = {}): {}", c.prime, if c.holds { "holds" } else { "fails" })?;
    if c.holds {
        writeln!(t, "claimed ranks mod {}: {}", c.prime, list(c.claimed_dims.as_deref().unwrap_or(&[])))?;
        writeln!(t, "computed ranks mod {}: {}", c.prime, list(c.computed_dims.as_deref().unwrap_or(&[])))?;
    } else {
        writeln!(t, "dense edges with k_X = 0 mod {}:", c.prime)?;
        for e in &c.witnesses {
            edge_text(t, e, arr.infinity(), "k_X")?;
        }
    }
    Ok(())
}

pub fn nonres(arr: &Arrangement, weights: &str, p: Option<u64>, fmt: OutputFormat) -> Result<Outcome> {
    let w = load_weights(arr, weights)?;
    let edges = resonance::edge_weights(arr, &w)?;
    let in_w = resonance::in_w(arr, &w)?;
    let in_v = resonance::in_v(arr, &w)?;
    let l = arr.rank();
    let e = arr.euler_characteristic().unsigned_abs();
    let mut t = format!("weights: {w}\nin W: {}  in V: {}\n", yes(in_w), yes(in_v));
    writeln!(t, "dense edges of the projective closure: {}", edges.len())?;
    let n = modulus_u64(&w).ok();
    let prime = p.or_else(|| n.filter(|&n| oscoh::exactla::is_prime(n)));
    let mut j = json!({
        "weights": weights_json(&w),
        "in_W": in_w,
        "in_V": in_v,
        "euler_characteristic": arr.euler_characteristic(),
        "edge_weights": edges,
        "convention_notes": [resonance::INFINITY_CONVENTION],
    });
    let holds = match prime {
        Some(p) => {
            let k: Vec<_> = w.k().to_vec();
            let cert = resonance::yuzvinsky_vanishing(arr, &k, p)
                .with_context(|| format!("certificate prime {p}"))?;
            certificate_text(&mut t, arr, &cert)?;
            if cert.holds && !cert.verified() {
                writeln!(t, "computed ranks disagree with the certificate")?;
            }
            j["certificate"] = serde_json::to_value(&cert).expect("serializable");
            j["certificate"]["verified"] = json!(cert.verified());
            cert.verified()
        }
        None => {
            let dims = os_cohomology_dims(arr, &w)?.dims;
            let mut claimed = vec![0usize; l + 1];
            claimed[l] = e as usize;
            writeln!(t, "certificate (over Q, lambda in W): {}", if in_w { "holds" } else { "fails" })?;
            writeln!(t, "Orlik-Solomon dims at lambda: {}", list(&dims))?;
            if !in_w {
                writeln!(t, "dense edges with lambda_X a nonnegative integer:")?;
                for e in edges.iter().filter(|e| e.value.is_integer() && !e.value.is_negative()) {
                    edge_text(&mut t, e, arr.infinity(), "lambda_X")?;
                }
            }
            j["certificate"] = json!({ "holds": in_w, "rational_dims": dims, "claimed_dims": claimed });
            in_w && dims == claimed
        }
    };
    if holds {
        writeln!(t, "certified: H^q(M;L) = 0 for q != {l}, dim H^{l}(M;L) = |e(M)| = {e}")?;
    }
    writeln!(t, "convention notes:\n  - {}", resonance::INFINITY_CONVENTION)?;
    emit(fmt, t, j);
    Ok(if holds { Outcome::Done } else { Outcome::CertificateFails })
}

pub fn resonance(arr: &Arrangement, weights: &str, q: usize, m: usize, fmt: OutputFormat) -> Result<Outcome> {
    let w = load_weights(arr, weights)?;
    let member = resonance::resonance_membership(arr, &w, q, m)?;
    let r = os_cohomology_dims(arr, &w)?;
    let prev = if q > 0 { r.boundary_ranks[q - 1] } else { 0 };
    let b = arr.betti_numbers()[q];
    let mut t = format!("weights: {w}\n");
    writeln!(t, "rank mu^{}: {prev}  rank mu^{q}: {}  b_{q}: {b}", q.wrapping_sub(1) as isize, r.boundary_ranks[q])?;
    writeln!(t, "in R^{q}_{m}: {}", yes(member))?;
    let j = json!({
        "weights": weights_json(&w),
        "q": q,
        "m": m,
        "member": member,
        "rank_previous": prev,
        "rank": r.boundary_ranks[q],
        "betti": b,
    });
    emit(fmt, t, j);
    Ok(Outcome::Done)
}

pub fn aomoto(arr: &Arrangement, degree: Option<usize>, fmt: OutputFormat) -> Result<Outcome> {
    let cx = osalg::complex(arr);
    if let Some(q) = degree {
        if q > cx.rank() {
            bail!("degree {q} out of range 0..={}", cx.rank());
        }
    }
    let mats: Vec<_> = cx.matrices.iter().filter(|m| degree.is_none_or(|q| q == m.degree)).collect();
    let t: String = mats.iter().map(|m| m.dump()).collect();
    let j = json!(mats
        .iter()
        .map(|m| {
            let (r, c) = m.shape();
            json!({
                "degree": m.degree,
                "rows": m.rows.iter().map(|s| s.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "cols": m.cols.iter().map(|s| s.iter().map(|i| i + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
                "entries": (0..r)
                    .map(|i| (0..c).map(|j| m.form(i, j).to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect::<Vec<_>>());
    emit(fmt, t, j);
    Ok(Outcome::Done)
}

pub fn export(arr: &Arrangement, output: Option<&Path>) -> Result<Outcome> {
    let text = format::write_arrangement(arr);
    match output {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => out(&text),
    }
    Ok(Outcome::Done)
}

pub fn list_catalog(fmt: OutputFormat) -> Result<Outcome> {
    let mut t = String::new();
    let mut rows = Vec::new();
    for &name in catalog::NAMES {
        let shown = if name == "boolean(n)" { "boolean(3)" } else { name };
        let a = catalog::lookup(shown)?;
        writeln!(t, "{name:<16} n={:<3} rank={} betti: {}", a.n(), a.rank(), list(&a.betti_numbers()))?;
        rows.push(json!({ "name": name, "n": a.n(), "rank": a.rank(), "betti": a.betti_numbers() }));
    }
    if fmt == OutputFormat::Text {
        t.push_str("boolean(n) takes any n >= 1; the row above shows n = 3\n");
    }
    emit(fmt, t, json!(rows));
    Ok(Outcome::Done)
}
