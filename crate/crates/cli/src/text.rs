//! Human-readable rendering of a report.

use std::fmt::Write;

use crate::report::{AnalysisReport, FieldSection, ScanReport};

pub fn render(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let c = &r.complex;
    let _ = writeln!(
        out,
        "complex: {} vertices, {} facets, dimension {}, {} minimal non-faces",
        c.vertices, c.facets, c.dimension, c.minimal_nonfaces
    );
    for s in &r.sections {
        section(&mut out, s);
    }
    if let Some(scan) = &r.scan {
        scan_text(&mut out, scan);
    }
    out
}

fn set(labels: &[String]) -> String {
    format!("{{{}}}", labels.join(","))
}

fn list(xs: &[u64]) -> String {
    set(&xs.iter().map(u64::to_string).collect::<Vec<_>>())
}

fn section(out: &mut String, s: &FieldSection) {
    let _ = writeln!(out, "field: {}", s.field);
    if let Some(b) = &s.betti {
        if b.entries.is_empty() {
            let _ = writeln!(out, "I_Δ = 0");
        } else {
            let _ = writeln!(out, "f_RH = {}", b.polynomial);
            for e in &b.entries {
                let _ = writeln!(out, "  beta[{},{}] = {}", e.i, e.j, e.dim);
            }
        }
        if let Some(m) = &b.multigraded {
            let _ = writeln!(out, "multidegrees:");
            for e in m {
                let _ = writeln!(out, "  i={} {} : {}", e.i, set(&e.support), e.dim);
            }
        }
    }
    if let Some(reg) = s.regularity {
        let _ = writeln!(out, "regularity: {reg}");
    }
    if let Some(series) = &s.series {
        let _ = writeln!(out, "Serre bound up to total degree {}:", series.truncation);
        for t in &series.terms {
            let _ = writeln!(out, "  t^{} x^{} : {}", t.t, t.x, t.coefficient);
        }
    }
    if let Some(v) = &s.verdict {
        let _ = writeln!(
            out,
            "product {} ({} scope, {} triples examined)",
            if v.product_trivial { "trivial" } else { "NONTRIVIAL" },
            v.scope,
            v.examined
        );
        let basis = if v.basis_of_claim == "dim2_lemma" { "the two-dimensional lemma" } else { "the φ criterion alone" };
        let held = if v.hypothesis_dim2 { "hold" } else { "fail" };
        let _ = writeln!(out, "lemma hypotheses {held}; claim rests on {basis}");
        for p in &v.failing_pairs {
            let _ = writeln!(
                out,
                "  failing: degree {} I = {} J = {} (source rank {}, surviving rank {})",
                p.degree,
                set(&p.left),
                set(&p.right),
                p.source_homology_dim,
                p.image_rank
            );
            if !p.witness.is_empty() {
                let terms: Vec<String> = p.witness.iter().map(|w| format!("{}·{}", w.coefficient, set(&w.face))).collect();
                let _ = writeln!(out, "    witness: {}", terms.join(" + "));
            }
        }
    }
}

fn scan_text(out: &mut String, s: &ScanReport) {
    let _ = writeln!(out, "rational verdict: {}", if s.rational_verdict { "trivial" } else { "nontrivial" });
    let _ = writeln!(out, "exceptional primes: {}", list(&s.exceptional_primes));
    let _ = writeln!(out, "candidate primes: {}", list(&s.candidate_primes));
    let _ = writeln!(out, "tested primes: {}", list(&s.tested_primes));
}
