//! Certification of claimed spectra against the adjacency matrix built
//! directly from the group law and the color function.
//!
//! A spectrum passes when every eigenpair has a small residual, the stacked
//! eigenvectors are orthonormal and complete, and the trace identities hold.
//! No eigensolver is involved.

use std::fmt;

use num_complex::Complex64;

use crate::cayley::{adjacency_in_vertex_order, AdjacencyMatrix, ColorFunction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::repr::{
    build_p_matrix, check_shape, fourier_transform, max_abs_diff, CMatrix, FourierBlock, IrrepSet,
};
use crate::spectra::{cluster_ids, reconstruct_adjacency, reconstruct_regular, Spectrum};

/// Default relative tolerance for residuals and comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;
pub const GRAM_TOL: f64 = 1e-9;
/// Largest order accepted by [`verify_thm21_reconstruction`].
pub const RECONSTRUCTION_CAP: usize = 500;

/// Left translation `x -> g x` as a permutation of positions in a fixed
/// element ordering.
#[derive(Clone, Debug)]
pub struct RegularRepMatrix {
    pub ordering: Vec<usize>,
    /// `perms[g][i]` is the position of `g * ordering[i]`.
    perms: Vec<Vec<usize>>,
}

impl RegularRepMatrix {
    pub fn new(g: &FiniteGroup, ordering: &[usize]) -> Result<Self> {
        let n = g.order();
        if ordering.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: ordering.len(),
            });
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &x) in ordering.iter().enumerate() {
            pos[x] = i;
        }
        if pos.contains(&usize::MAX) {
            return Err(Error::InvalidParameters(
                "ordering is not a permutation of the group".into(),
            ));
        }
        let perms = (0..n)
            .map(|h| ordering.iter().map(|&x| pos[g.mul(h, x)]).collect())
            .collect();
        Ok(RegularRepMatrix {
            ordering: ordering.to_vec(),
            perms,
        })
    }

    pub fn permutation(&self, g: usize) -> &[usize] {
        &self.perms[g]
    }

    /// Dense permutation matrix with `M[perm[i]][i] = 1`.
    pub fn matrix(&self, g: usize) -> CMatrix {
        let n = self.ordering.len();
        let mut out = CMatrix::zeros(n, n);
        for (i, &j) in self.perms[g].iter().enumerate() {
            out[(j, i)] = Complex64::new(1.0, 0.0);
        }
        out
    }

    /// `sum_g alpha(g) M(g)`.
    pub fn color_sum(&self, alpha: &ColorFunction) -> CMatrix {
        let n = self.ordering.len();
        let mut out = CMatrix::zeros(n, n);
        for g in alpha.support() {
            let a = alpha.value(g);
            for (i, &j) in self.perms[g].iter().enumerate() {
                out[(j, i)] += a;
            }
        }
        out
    }

    /// First pair `(x, y)` from `lefts x rights` with
    /// `M(x y) != M(x) M(y)`, compared as permutations.
    pub fn homomorphism_witness(
        &self,
        g: &FiniteGroup,
        lefts: &[usize],
        rights: &[usize],
    ) -> Option<(usize, usize)> {
        for &x in lefts {
            for &y in rights {
                let xy = &self.perms[g.mul(x, y)];
                let composed = self.perms[y].iter().map(|&i| self.perms[x][i]);
                if !composed.eq(xy.iter().copied()) {
                    return Some((x, y));
                }
            }
        }
        None
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TraceDeviations {
    /// `|tr A - n alpha(e)|`
    pub trace: f64,
    /// `|tr A^2 - n sum_g alpha(g) alpha(g^-1)|`
    pub trace_square: f64,
}

pub fn trace_identities(
    g: &FiniteGroup,
    adj: &AdjacencyMatrix,
    alpha: &ColorFunction,
) -> TraceDeviations {
    let n = adj.n();
    let a = &adj.matrix;
    let trace: Complex64 = (0..n).map(|i| a[(i, i)]).sum();
    let mut trace_sq = Complex64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            trace_sq += a[(i, j)] * a[(j, i)];
        }
    }
    let pair_sum: Complex64 = (0..g.order())
        .map(|x| alpha.value(x) * alpha.value(g.inv(x)))
        .sum();
    let nf = n as f64;
    TraceDeviations {
        trace: (trace - alpha.value(g.identity()) * nf).norm(),
        trace_square: (trace_sq - pair_sum * nf).norm(),
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub n: usize,
    pub max_residual: f64,
    /// `tol * max(1, ||A||_inf)`
    pub residual_tolerance: f64,
    /// Max residual per spectral line, in line order.
    pub line_residuals: Vec<f64>,
    pub vector_count: usize,
    pub complete: bool,
    /// `max |U* U - I|`; `None` until the basis has been checked.
    pub gram_deviation: Option<f64>,
    pub trace: Option<TraceDeviations>,
    /// `|sum lambda * mult - n alpha(e)|`
    pub spectral_trace_deviation: Option<f64>,
    pub passed: bool,
}

impl VerificationReport {
    fn recompute_passed(&mut self, tol: f64) {
        let trace_tol = tol * self.n as f64;
        let scale = self.residual_tolerance / tol;
        let trace_sq_tol = trace_tol * scale * scale;
        self.passed = self.max_residual <= self.residual_tolerance
            && self.complete
            && self.gram_deviation.is_none_or(|d| d <= GRAM_TOL)
            && self
                .trace
                .is_none_or(|t| t.trace <= trace_tol && t.trace_square <= trace_sq_tol)
            && self.spectral_trace_deviation.is_none_or(|d| d <= trace_tol);
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "residual {:.3e} (tolerance {:.3e})",
            self.max_residual, self.residual_tolerance
        )?;
        writeln!(f, "eigenvectors {} of {}", self.vector_count, self.n)?;
        if let Some(d) = self.gram_deviation {
            writeln!(f, "gram deviation {d:.3e}")?;
        }
        if let Some(t) = self.trace {
            writeln!(
                f,
                "trace deviations {:.3e}, {:.3e}",
                t.trace, t.trace_square
            )?;
        }
        if let Some(d) = self.spectral_trace_deviation {
            writeln!(f, "spectral trace deviation {d:.3e}")?;
        }
        write!(f, "{}", if self.passed { "pass" } else { "fail" })
    }
}

/// `||A x - lambda x||_inf` for every stored eigenpair.
pub fn verify_eigenpairs(
    adj: &AdjacencyMatrix,
    spec: &Spectrum,
    tol: f64,
) -> Result<VerificationReport> {
    let n = adj.n();
    if spec.n != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: spec.n,
        });
    }
    let mut line_residuals = Vec::with_capacity(spec.lines.len());
    let mut vector_count = 0;
    for line in &spec.lines {
        let mut worst: f64 = 0.0;
        for vec in &line.eigenvectors {
            if vec.entries.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: vec.entries.len(),
                });
            }
            let ax = adj.apply(&vec.entries);
            let r = ax
                .iter()
                .zip(&vec.entries)
                .map(|(y, x)| (y - line.eigenvalue * x).norm())
                .fold(0.0, f64::max);
            worst = worst.max(r);
            vector_count += 1;
        }
        line_residuals.push(worst);
    }
    let max_residual = line_residuals.iter().copied().fold(0.0, f64::max);
    let mut report = VerificationReport {
        n,
        max_residual,
        residual_tolerance: tol * adj.inf_norm().max(1.0),
        line_residuals,
        vector_count,
        complete: vector_count == n,
        gram_deviation: None,
        trace: None,
        spectral_trace_deviation: None,
        passed: false,
    };
    report.recompute_passed(tol);
    Ok(report)
}

/// Gram deviation `max |U* U - I|` of the stacked eigenvectors and whether
/// there are exactly `n` of them.
pub fn verify_basis(spec: &Spectrum) -> (f64, bool) {
    let vectors: Vec<&[Complex64]> = spec
        .lines
        .iter()
        .flat_map(|l| l.eigenvectors.iter().map(|v| v.entries.as_slice()))
        .collect();
    let count = vectors.len();
    if count == 0 {
        return (0.0, spec.n == 0);
    }
    let rows = vectors[0].len();
    let u = CMatrix::from_fn(rows, count, |i, j| {
        vectors[j].get(i).copied().unwrap_or_default()
    });
    let gram = u.adjoint() * &u;
    let dev = max_abs_diff(&gram, &CMatrix::identity(count, count));
    (dev, count == spec.n)
}

/// Residuals, basis, and trace identities against the adjacency matrix of
/// `alpha` in the group's vertex ordering.
pub fn verify_spectrum(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    spec: &Spectrum,
    tol: f64,
) -> Result<VerificationReport> {
    let adj = adjacency_in_vertex_order(g, alpha);
    let mut report = verify_eigenpairs(&adj, spec, tol)?;
    let (gram, complete) = verify_basis(spec);
    report.gram_deviation = Some(gram);
    report.complete = complete;
    report.trace = Some(trace_identities(g, &adj, alpha));
    report.spectral_trace_deviation =
        Some((spec.trace() - alpha.value(g.identity()) * g.order() as f64).norm());
    report.recompute_passed(tol);
    Ok(report)
}

/// Residual and basis checks against an explicit matrix, for spectra whose
/// group is not at hand.
pub fn verify_against_matrix(
    matrix: &CMatrix,
    spec: &Spectrum,
    tol: f64,
) -> Result<VerificationReport> {
    let adj = AdjacencyMatrix {
        matrix: matrix.clone(),
        ordering: (0..matrix.nrows()).collect(),
    };
    let mut report = verify_eigenpairs(&adj, spec, tol)?;
    let (gram, complete) = verify_basis(spec);
    report.gram_deviation = Some(gram);
    report.complete = complete;
    let trace: Complex64 = (0..matrix.nrows()).map(|i| matrix[(i, i)]).sum();
    report.spectral_trace_deviation = Some((spec.trace() - trace).norm());
    report.recompute_passed(tol);
    Ok(report)
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumComparison {
    pub equal: bool,
    /// First differing pair `(a_i, b_i)` after sorting both sides by cluster.
    pub mismatch: Option<(Complex64, Complex64)>,
}

/// Compares two spectra as multisets, clustering the union with radius
/// `tol`.
pub fn compare_spectra(a: &Spectrum, b: &Spectrum, tol: f64) -> Result<SpectrumComparison> {
    if a.n != b.n {
        return Err(Error::DimensionMismatch {
            expected: a.n,
            found: b.n,
        });
    }
    Ok(compare_values(&a.eigenvalues(), &b.eigenvalues(), tol))
}

pub fn compare_values(a: &[Complex64], b: &[Complex64], tol: f64) -> SpectrumComparison {
    let all: Vec<Complex64> = a.iter().chain(b).copied().collect();
    let (ids, _) = cluster_ids(&all, tol);
    let sorted = |values: &[Complex64], ids: &[usize]| {
        let mut v: Vec<(usize, Complex64)> =
            ids.iter().copied().zip(values.iter().copied()).collect();
        v.sort_by(|x, y| x.0.cmp(&y.0).then(crate::spectra::cmp_complex(&x.1, &y.1)));
        v
    };
    let sa = sorted(a, &ids[..a.len()]);
    let sb = sorted(b, &ids[a.len()..]);
    let mismatch = sa
        .iter()
        .zip(&sb)
        .find(|(x, y)| x.0 != y.0)
        .map(|(x, y)| (x.1, y.1));
    SpectrumComparison {
        equal: mismatch.is_none() && sa.len() == sb.len(),
        mismatch,
    }
}

/// Largest entrywise deviation between the directly built
/// `sum_g alpha(g) M(g)` (and its transpose, the adjacency matrix) and their
/// reconstructions from the Fourier blocks.
pub fn verify_thm21_reconstruction(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    irreps: &IrrepSet,
) -> Result<f64> {
    let n = g.order();
    if n > RECONSTRUCTION_CAP {
        return Err(Error::CapacityExceeded {
            requested: n,
            cap: RECONSTRUCTION_CAP,
        });
    }
    check_shape(n, irreps)?;
    let ordering = g.vertex_ordering();
    let regular = RegularRepMatrix::new(g, &ordering)?;
    let direct = regular.color_sum(alpha);
    let adjacency = direct.transpose();
    let p = build_p_matrix(g, irreps, &ordering)?;
    let blocks: Vec<FourierBlock> = irreps
        .irreps
        .iter()
        .enumerate()
        .map(|(k, r)| FourierBlock {
            irrep: k,
            matrix: fourier_transform(alpha, r),
        })
        .collect();
    let dev_reg = max_abs_diff(&reconstruct_regular(&p.matrix, &blocks), &direct);
    let dev_adj = max_abs_diff(&reconstruct_adjacency(&p.matrix, &blocks), &adjacency);
    Ok(dev_reg.max(dev_adj))
}
