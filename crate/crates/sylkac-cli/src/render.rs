//! Output rendering: every command serializes to JSON (compact, via the
//! library serializers so output round-trips byte-identically), CSV with a
//! fixed header row, or a human-oriented text form.

use sylkac::{
    BenchOutcome, BenchRecord, CharpolyReport, Eigenpair, MatrixFamily, Polynomial, Spectrum,
    SpectrumSource, SpectrumValues, VerifySummary,
};

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string(value).expect("library types serialize cleanly");
    out.push('\n');
    out
}

pub fn spectrum_json(spectrum: &Spectrum) -> String {
    json_line(spectrum)
}

pub fn spectrum_csv(spectrum: &Spectrum) -> String {
    let mut out = String::from("value\n");
    match &spectrum.values {
        SpectrumValues::Exact(values) => {
            for v in values {
                out.push_str(&format!("{v}\n"));
            }
        }
        SpectrumValues::Float(values) => {
            for v in values {
                out.push_str(&format!("{v}\n"));
            }
        }
    }
    out
}

pub fn spectrum_text(spectrum: &Spectrum, family: MatrixFamily) -> String {
    let source = match spectrum.source {
        SpectrumSource::ClosedForm => "closed form",
        SpectrumSource::Bisection => "bisection",
    };
    let mut out = format!(
        "eigenvalues of {} at n = {} ({source}):\n",
        family.name(),
        spectrum.n
    );
    match &spectrum.values {
        SpectrumValues::Exact(values) => {
            for v in values {
                out.push_str(&format!("  {v}\n"));
            }
        }
        SpectrumValues::Float(values) => {
            for v in values {
                out.push_str(&format!("  {v}\n"));
            }
        }
    }
    out
}

pub fn report_json(report: &CharpolyReport) -> String {
    json_line(report)
}

const ROUTES: [&str; 4] = [
    "via_taussky_todd",
    "via_proskuryakov",
    "via_product",
    "via_continuant",
];

fn route_polys(report: &CharpolyReport) -> [&Polynomial; 4] {
    [
        &report.via_taussky_todd,
        &report.via_proskuryakov,
        &report.via_product,
        &report.via_continuant,
    ]
}

pub fn report_csv(report: &CharpolyReport) -> String {
    let polys = route_polys(report);
    let degree = polys.iter().map(|p| p.degree()).max().unwrap_or(0);
    let mut out = format!("power,{}\n", ROUTES.join(","));
    for power in 0..=degree {
        out.push_str(&power.to_string());
        for p in polys {
            out.push_str(&format!(",{}", p.coeff(power)));
        }
        out.push('\n');
    }
    out
}

pub fn report_text(report: &CharpolyReport) -> String {
    let mut out = format!("characteristic polynomial at n = {}:\n", report.n);
    for (name, poly) in ROUTES.iter().zip(route_polys(report)) {
        out.push_str(&format!("  {name}: {poly}\n"));
    }
    out.push_str(&format!("  all_equal: {}\n", report.all_equal));
    out
}

pub fn eigenpairs_json(pairs: &[Eigenpair]) -> String {
    json_line(&pairs)
}

fn joined(values: &[sylkac::Rational], separator: &str) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(separator)
}

pub fn eigenpairs_csv(pairs: &[Eigenpair]) -> String {
    let mut out = String::from("value,residual_is_zero,vector\n");
    for pair in pairs {
        out.push_str(&format!(
            "{},{},{}\n",
            pair.value,
            pair.residual_is_zero,
            joined(&pair.vector, " ")
        ));
    }
    out
}

pub fn eigenpairs_text(pairs: &[Eigenpair]) -> String {
    let mut out = String::new();
    for pair in pairs {
        out.push_str(&format!(
            "lambda = {}: vector = ({}), residual_is_zero = {}\n",
            pair.value,
            joined(&pair.vector, ", "),
            pair.residual_is_zero
        ));
    }
    out
}

pub fn summary_json(summary: &VerifySummary) -> String {
    json_line(summary)
}

pub fn summary_csv(summary: &VerifySummary) -> String {
    let mut out = String::from("check,passed,failed,skipped,failing_ns\n");
    for check in &summary.checks {
        let failing: Vec<String> = check.failing_ns.iter().map(u32::to_string).collect();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            check.name,
            check.passed,
            check.failed,
            check.skipped,
            failing.join(" ")
        ));
    }
    out
}

pub fn summary_text(summary: &VerifySummary) -> String {
    let mut out = format!("verification over n = {}..{}:\n", summary.start, summary.end);
    for check in &summary.checks {
        out.push_str(&format!(
            "  {}: {} passed, {} failed, {} skipped",
            check.name, check.passed, check.failed, check.skipped
        ));
        if !check.failing_ns.is_empty() {
            let failing: Vec<String> = check.failing_ns.iter().map(u32::to_string).collect();
            out.push_str(&format!(" (failing n: {})", failing.join(" ")));
        }
        out.push('\n');
    }
    out.push_str(if summary.all_passed {
        "result: all checks passed\n"
    } else {
        "result: FAILED\n"
    });
    out
}

pub fn bench_json(records: &[BenchRecord]) -> String {
    json_line(&records)
}

pub fn bench_csv(records: &[BenchRecord]) -> String {
    let mut out = String::from("n,method,wall_time_ns,checksum\n");
    for record in records {
        match &record.outcome {
            BenchOutcome::Timed {
                wall_time_ns,
                checksum,
            } => out.push_str(&format!(
                "{},{},{},{}\n",
                record.n,
                record.method.name(),
                wall_time_ns,
                checksum
            )),
            BenchOutcome::Skipped { .. } => out.push_str(&format!(
                "{},{},skipped,skipped\n",
                record.n,
                record.method.name()
            )),
        }
    }
    out
}

pub fn bench_text(records: &[BenchRecord]) -> String {
    let mut out = String::new();
    for record in records {
        match &record.outcome {
            BenchOutcome::Timed {
                wall_time_ns,
                checksum,
            } => out.push_str(&format!(
                "n = {}, {}: {} ns, checksum {}\n",
                record.n,
                record.method.name(),
                wall_time_ns,
                checksum
            )),
            BenchOutcome::Skipped { reason } => out.push_str(&format!(
                "n = {}, {}: skipped ({reason})\n",
                record.n,
                record.method.name()
            )),
        }
    }
    out
}
