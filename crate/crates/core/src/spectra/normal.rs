use num_complex::Complex64;

use super::{Eigenvector, Method, SpectralLine, Spectrum};
use crate::cayley::ColorFunction;
use crate::error::Result;
use crate::group::FiniteGroup;
use crate::repr::{check_shape, coefficient_vector, IrrepSet};

/// Spectrum of `Gamma(G; alpha)` for a class function `alpha`:
/// `lambda_k = (1/chi_k(1)) sum_g alpha(g) chi_k(g)` with multiplicity
/// `chi_k(1)^2`, eigenvectors the scaled matrix coefficients of `rho_k`.
pub fn spectrum_normal(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    irreps: &IrrepSet,
    eigenvectors: bool,
) -> Result<Spectrum> {
    alpha.require_class_function(g)?;
    check_shape(g.order(), irreps)?;
    let n = g.order();
    let ordering = g.vertex_ordering();
    let support = alpha.support();
    let lines = irreps
        .irreps
        .iter()
        .enumerate()
        .map(|(k, irrep)| {
            let d = irrep.degree;
            let sum: Complex64 = support
                .iter()
                .map(|&x| alpha.value(x) * irrep.character(x))
                .sum();
            let vectors = if eigenvectors {
                let mut out = Vec::with_capacity(d * d);
                for j in 0..d {
                    for i in 0..d {
                        out.push(Eigenvector {
                            coefficient: [i, j, 0, 0],
                            entries: coefficient_vector(irrep, i, j, &ordering, n),
                        });
                    }
                }
                out
            } else {
                Vec::new()
            };
            SpectralLine {
                u: k,
                v: 0,
                label: irrep.label.clone(),
                eigenvalue: sum / d as f64,
                multiplicity: d * d,
                eigenvectors: vectors,
                class_terms: Vec::new(),
            }
        })
        .collect();
    Ok(Spectrum {
        n,
        method: Method::Normal,
        lines,
        verified_by_theorem: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::repr::{irreps_cyclic, irreps_dihedral};

    fn sorted_real(s: &Spectrum) -> Vec<f64> {
        let mut v: Vec<f64> = s.eigenvalues().iter().map(|z| z.re).collect();
        v.sort_by(f64::total_cmp);
        v
    }

    #[test]
    fn complete_graph() {
        let n = 9;
        let g = FiniteGroup::cyclic(n).unwrap();
        let alpha = ColorFunction::from_set(&g, &(1..n).collect::<Vec<_>>());
        let s = spectrum_normal(&g, &alpha, &irreps_cyclic(n), false).unwrap();
        let vals = sorted_real(&s);
        assert!((vals[n - 1] - (n as f64 - 1.0)).abs() < 1e-12);
        assert!(vals[..n - 1].iter().all(|x| (x + 1.0).abs() < 1e-12));
    }

    #[test]
    fn four_cycle() {
        let g = FiniteGroup::cyclic(4).unwrap();
        let alpha = ColorFunction::from_set(&g, &[1, 3]);
        let s = spectrum_normal(&g, &alpha, &irreps_cyclic(4), false).unwrap();
        let expected = [2.0, 0.0, -2.0, 0.0];
        for (line, e) in s.lines.iter().zip(expected) {
            assert!((line.eigenvalue - Complex64::new(e, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn whole_group_indicator() {
        let g = FiniteGroup::dihedral(5).unwrap();
        let alpha = ColorFunction::from_set(&g, &(0..10).collect::<Vec<_>>());
        let s = spectrum_normal(&g, &alpha, &irreps_dihedral(5).unwrap(), true).unwrap();
        assert!((s.lines[0].eigenvalue.re - 10.0).abs() < 1e-12);
        assert!(s.lines[1..].iter().all(|l| l.eigenvalue.norm() < 1e-12));
        assert_eq!(s.total_multiplicity(), 10);
        assert_eq!(s.lines[2].eigenvectors.len(), 4);
    }

    #[test]
    fn rejects_non_class_function() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let alpha = ColorFunction::from_set(&g, &[1]);
        let err = spectrum_normal(&g, &alpha, &irreps_dihedral(3).unwrap(), false).unwrap_err();
        assert!(matches!(err, Error::NotClassFunction { .. }));
    }
}
