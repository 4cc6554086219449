//! JSON and CSV rendering with fixed key order and 15 significant digits.

use num_complex::Complex64;
use serde::Serialize;

use cayspec::numfmt::round_sig;
use cayspec::spectra::{HypothesisReport, Spectrum, CLUSTER_RADIUS};
use cayspec::verify::VerificationReport;
use cayspec::FiniteGroup;

pub fn num(x: f64) -> f64 {
    round_sig(x)
}

pub fn complex(z: Complex64) -> [f64; 2] {
    [num(z.re), num(z.im)]
}

#[derive(Serialize)]
pub struct ClassTermOut {
    pub class: usize,
    pub representative: String,
    pub size: usize,
    pub lambda_h: [f64; 2],
    pub sigma_k: [f64; 2],
}

#[derive(Serialize)]
pub struct LineOut {
    pub u: usize,
    pub v: usize,
    pub label: String,
    pub eigenvalue: [f64; 2],
    pub multiplicity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvectors: Option<Vec<Vec<[f64; 2]>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub eigenvector_labels: Option<Vec<[usize; 4]>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub class_terms: Vec<ClassTermOut>,
}

#[derive(Serialize)]
pub struct VerificationOut {
    pub passed: bool,
    pub tolerance: f64,
    pub residual_tolerance: f64,
    pub max_residual: f64,
    pub gram_deviation: Option<f64>,
    pub complete: bool,
    pub vector_count: usize,
    pub trace_deviation: Option<f64>,
    pub trace_square_deviation: Option<f64>,
    pub spectral_trace_deviation: Option<f64>,
    pub line_residuals: Vec<f64>,
}

impl VerificationOut {
    pub fn new(report: &VerificationReport, tol: f64) -> Self {
        VerificationOut {
            passed: report.passed,
            tolerance: tol,
            residual_tolerance: num(report.residual_tolerance),
            max_residual: num(report.max_residual),
            gram_deviation: report.gram_deviation.map(num),
            complete: report.complete,
            vector_count: report.vector_count,
            trace_deviation: report.trace.map(|t| num(t.trace)),
            trace_square_deviation: report.trace.map(|t| num(t.trace_square)),
            spectral_trace_deviation: report.spectral_trace_deviation.map(num),
            line_residuals: report.line_residuals.iter().copied().map(num).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct SpectrumOut {
    pub n: usize,
    pub method: String,
    pub verified_by_theorem: bool,
    pub lines: Vec<LineOut>,
    pub multiset: Vec<(f64, f64, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationOut>,
}

impl SpectrumOut {
    pub fn new(
        g: Option<&FiniteGroup>,
        s: &Spectrum,
        eigenvectors: bool,
        verification: Option<VerificationOut>,
    ) -> Self {
        let lines = s
            .lines
            .iter()
            .map(|l| LineOut {
                u: l.u,
                v: l.v,
                label: l.label.clone(),
                eigenvalue: complex(l.eigenvalue),
                multiplicity: l.multiplicity,
                eigenvectors: eigenvectors.then(|| {
                    l.eigenvectors
                        .iter()
                        .map(|v| v.entries.iter().copied().map(complex).collect())
                        .collect()
                }),
                eigenvector_labels: eigenvectors
                    .then(|| l.eigenvectors.iter().map(|v| v.coefficient).collect()),
                class_terms: l
                    .class_terms
                    .iter()
                    .map(|t| ClassTermOut {
                        class: t.class_index,
                        representative: match g.and_then(|g| g.split().map(|sp| (g, sp))) {
                            Some((g, sp)) => g.label(sp.h[t.representative]),
                            None => t.representative.to_string(),
                        },
                        size: t.size,
                        lambda_h: complex(t.lambda_h),
                        sigma_k: complex(t.sigma_k),
                    })
                    .collect(),
            })
            .collect();
        let multiset = s
            .multiset(CLUSTER_RADIUS)
            .into_iter()
            .map(|(z, c)| (num(z.re), num(z.im), c))
            .collect();
        SpectrumOut {
            n: s.n,
            method: s.method.name().to_string(),
            verified_by_theorem: s.verified_by_theorem,
            lines,
            multiset,
            verification,
        }
    }
}

pub fn csv(s: &Spectrum) -> String {
    let mut out = String::from("u,v,re,im,multiplicity\n");
    for l in &s.lines {
        let [re, im] = complex(l.eigenvalue);
        out.push_str(&format!("{},{},{re},{im},{}\n", l.u, l.v, l.multiplicity));
    }
    out
}

#[derive(Serialize)]
pub struct WitnessAOut {
    pub h: String,
    pub g: String,
    pub k: String,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
}

#[derive(Serialize)]
pub struct WitnessBOut {
    pub h_prime: String,
    pub h: String,
    pub k: String,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
}

#[derive(Serialize)]
pub struct HypothesisOut {
    pub passed: bool,
    pub condition_a: bool,
    pub condition_b: bool,
    pub witness_a: Option<WitnessAOut>,
    pub witness_b: Option<WitnessBOut>,
}

impl HypothesisOut {
    pub fn new(g: &FiniteGroup, r: &HypothesisReport) -> Self {
        HypothesisOut {
            passed: r.passed(),
            condition_a: r.condition_a,
            condition_b: r.condition_b,
            witness_a: r.witness_a.as_ref().map(|w| WitnessAOut {
                h: g.label(w.h),
                g: g.label(w.g),
                k: g.label(w.k),
                lhs: complex(w.lhs),
                rhs: complex(w.rhs),
            }),
            witness_b: r.witness_b.as_ref().map(|w| WitnessBOut {
                h_prime: g.label(w.h_prime),
                h: g.label(w.h),
                k: g.label(w.k),
                lhs: complex(w.lhs),
                rhs: complex(w.rhs),
            }),
        }
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output types serialize");
    s.push('\n');
    s
}
