//! Human-readable rendering of factored forms and reports.

use schur_core::schur::{SchurFactored, VanishingReport};

/// Renders the cancellation-free form as a product, e.g.
/// `-q^-1*(q-1)^-2 * (q^2 - 1) * (q - 1) * (Q0/Q1 - 1) * (q*Q1/Q0 - 1)`.
pub fn factored_human(sf: &SchurFactored) -> String {
    let mut atoms: Vec<String> = Vec::new();
    if sf.q_exp != 0 {
        atoms.push(format!("q^{}", sf.q_exp));
    }
    if sf.qm1_exp != 0 {
        atoms.push(format!("(q-1)^{}", sf.qm1_exp));
    }
    for f in &sf.factors {
        if f.s == f.t {
            atoms.push(match f.h {
                1 => "(q - 1)".to_string(),
                h => format!("(q^{h} - 1)"),
            });
        } else {
            let q_part = match f.h {
                0 => String::new(),
                1 => "q*".to_string(),
                h => format!("q^{h}*"),
            };
            atoms.push(format!("({}Q{}/Q{} - 1)", q_part, f.s, f.t));
        }
    }
    let body = if atoms.is_empty() {
        "1".to_string()
    } else {
        atoms.join(" * ")
    };
    if sf.sign < 0 {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders a specialization report, e.g.
/// `value = 0 (reducible; vanishing factors: (h=2,s=0,t=0))`.
pub fn report_human(report: &VanishingReport) -> String {
    if report.irreducible {
        format!("value = {} (irreducible)", report.value)
    } else {
        let factors: Vec<String> = report
            .vanishing_factors
            .iter()
            .map(|f| format!("(h={},s={},t={})", f.h, f.s, f.t))
            .collect();
        format!(
            "value = 0 (reducible; vanishing factors: {})",
            factors.join(", ")
        )
    }
}
