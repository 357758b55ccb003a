use std::fmt::Write;

use serde::Serialize;

use crate::commands::{AnalyzeOutput, EntanglementOutput, SgsopOutput, VerifyOutput};

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("outputs are plain data");
    s.push('\n');
    s
}

pub fn analyze_text(out: &AnalyzeOutput) -> String {
    let r = &out.report;
    let mut s = String::new();
    let kind = serde_json::to_value(r.kind).expect("unit enum");
    writeln!(s, "kind: {}", kind.as_str().unwrap_or("?")).unwrap();
    writeln!(
        s,
        "n = {}, k = {}, c = {}, l = {}, i = {}, m = {}, p = {}",
        r.n, r.k, r.c, r.l, r.i, r.m, r.p
    )
    .unwrap();
    writeln!(
        s,
        "entanglement-assisted: {}",
        if r.entanglement_assisted { "yes" } else { "no" }
    )
    .unwrap();
    writeln!(s, "logical pairs: {}", r.logical_pairs.len()).unwrap();
    for (t, (a, b)) in r.logical_pairs.iter().enumerate() {
        writeln!(s, "  {}: {a} | {b}", t + 1).unwrap();
    }
    writeln!(s, "isotropic generators: {}", r.isotropic_gens.len()).unwrap();
    for g in &r.isotropic_gens {
        writeln!(s, "  {g}").unwrap();
    }
    if !r.entanglement_pairs.is_empty() {
        writeln!(s, "entanglement pairs: {}", r.entanglement_pairs.len()).unwrap();
        for (t, (a, b)) in r.entanglement_pairs.iter().enumerate() {
            writeln!(s, "  {}: {a} | {b}", t + 1).unwrap();
        }
    }
    writeln!(s, "formula checks:").unwrap();
    for f in &r.formula_checks {
        let mark = if f.agree { "ok  " } else { "FAIL" };
        writeln!(s, "  [{mark}] {}: {} vs {}", f.name, f.lhs, f.rhs).unwrap();
    }
    s
}

pub fn sgsop_text(out: &SgsopOutput) -> String {
    let d = &out.decomposition;
    let mut s = String::new();
    for (t, (a, b)) in d.pairs.iter().enumerate() {
        writeln!(s, "pair {}: {a} | {b}", t + 1).unwrap();
    }
    for (t, g) in d.isotropic.iter().enumerate() {
        writeln!(s, "isotropic {}: {g}", t + 1).unwrap();
    }
    writeln!(
        s,
        "{} pairs, {} isotropic",
        d.pairs.len(),
        d.isotropic.len()
    )
    .unwrap();
    writeln!(s, "log: {} steps", d.log.len()).unwrap();
    for step in &d.log {
        use symplectic_qec::SgsopStep::*;
        match *step {
            SetAside { index } => writeln!(s, "  set-aside {index}"),
            PairFound { first, partner } => writeln!(s, "  pair-found {first} with {partner}"),
            RowUpdate {
                index,
                pair,
                exponents: (e1, e2),
            } => writeln!(
                s,
                "  row-update {index} *= g{pair}^{} g{}^{}",
                u8::from(e1),
                pair + 1,
                u8::from(e2)
            ),
        }
        .unwrap();
    }
    if let Some(replay) = &out.replay {
        writeln!(s, "reverse replay:").unwrap();
        for g in replay {
            writeln!(s, "  {g}").unwrap();
        }
        let exact = out.round_trip == Some(true);
        writeln!(
            s,
            "round-trip: {}",
            if exact { "exact" } else { "MISMATCH" }
        )
        .unwrap();
    }
    s
}

pub fn entanglement_text(out: &EntanglementOutput) -> String {
    let mut s = String::new();
    let ks: Vec<String> = out.k.iter().map(ToString::to_string).collect();
    writeln!(
        s,
        "kind: {}, n = {}, k = {}",
        out.kind,
        out.n,
        ks.join(", ")
    )
    .unwrap();
    for m in &out.methods {
        let derived = if m.h_derived {
            ", H derived from G"
        } else {
            ""
        };
        writeln!(
            s,
            "method {}: c = {}   [{}]   median {:.1} us over {} runs{derived}",
            m.method, m.c, m.formula, m.median_us, m.repeats
        )
        .unwrap();
    }
    writeln!(s, "sgsop on check matrix: c = {}", out.sgsop_c).unwrap();
    writeln!(s, "agreement: {}", if out.agree { "yes" } else { "NO" }).unwrap();
    s
}

pub fn verify_text(out: &VerifyOutput) -> String {
    let mut s = String::new();
    if let Some(seed) = out.seed {
        writeln!(s, "seed: {seed}, trials: {}", out.trials).unwrap();
    }
    for c in &out.checks {
        let mark = if c.failed == 0 { "ok  " } else { "FAIL" };
        writeln!(
            s,
            "[{mark}] {} ({}/{})",
            c.name,
            c.passed,
            c.passed + c.failed
        )
        .unwrap();
    }
    for f in &out.failures {
        let trial = f.trial.map(|t| format!("trial {t}: ")).unwrap_or_default();
        writeln!(
            s,
            "failed: {trial}{}: expected {}, got {}",
            f.name, f.expected, f.actual
        )
        .unwrap();
    }
    writeln!(
        s,
        "{}",
        if out.all_pass {
            "all checks passed"
        } else {
            "verification FAILED"
        }
    )
    .unwrap();
    s
}
