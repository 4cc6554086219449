use num_complex::Complex64;

use super::hypotheses::check_thm31_hypotheses;
use super::{ClassTerm, Eigenvector, Method, SpectralLine, Spectrum};
use crate::cayley::ColorFunction;
use crate::error::{Error, Result};
use crate::group::{gcd, pow_mod, FiniteGroup};
use crate::repr::{check_shape, IrrepSet};
use crate::roots::root_of_unity;

/// Agreement required between class representatives in the cross-check.
const REPRESENTATIVE_TOL: f64 = 1e-10;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Thm31Options {
    /// Run even when the invariance conditions fail. The result is then
    /// flagged with `verified_by_theorem = false`.
    pub override_hypotheses: bool,
    /// Re-evaluate every class sum with every member of the class and fail
    /// with [`Error::RepresentativeDependence`] on disagreement.
    pub cross_check_representatives: bool,
    pub eigenvectors: bool,
}

/// Spectrum of `Gamma(K x| H; alpha)` from irreps of `H` and `K`, indexed
/// by the local orders of the split.
///
/// Line `(u, v)` carries `lambda = sum_C lambda_uC * sigma_vC` with
/// `lambda_uC = |C| chi_u(h_C) / d_u` and
/// `sigma_vC = (1/d_v) sum_k alpha(h_C k) chi_v(k)`, multiplicity
/// `d_u^2 d_v^2`, and eigenvectors
/// `sqrt(d_u d_v / n) * rho_u(h_a)[i,j] * rho_v(k_b)[i',j']` at vertex
/// `h_a k_b`.
pub fn spectrum_thm31(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    irreps_h: &IrrepSet,
    irreps_k: &IrrepSet,
    opts: Thm31Options,
) -> Result<Spectrum> {
    let split = g.split().ok_or(Error::NoSplitStructure)?;
    let (m, l) = (split.m(), split.l());
    check_shape(l, irreps_h)?;
    check_shape(m, irreps_k)?;
    if alpha.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            found: alpha.len(),
        });
    }
    let report = check_thm31_hypotheses(g, alpha)?;
    if !report.passed() && !opts.override_hypotheses {
        return Err(Error::HypothesesViolated(Box::new(report)));
    }
    let classes = g.complement_classes()?;

    // row[a][b] = alpha(h_a k_b)
    let row: Vec<Vec<Complex64>> = split
        .h
        .iter()
        .map(|&h| split.k.iter().map(|&k| alpha.value(g.mul(h, k))).collect())
        .collect();
    let chi_k: Vec<Vec<Complex64>> = irreps_k.irreps.iter().map(|r| r.characters()).collect();
    let sigma = |a: usize, v: usize| -> Complex64 {
        let s: Complex64 = row[a].iter().zip(&chi_k[v]).map(|(x, c)| x * c).sum();
        s / irreps_k.irreps[v].degree as f64
    };

    // sigma_table[c][v]
    let sigma_table: Vec<Vec<Complex64>> = classes
        .iter()
        .map(|class| {
            (0..irreps_k.len())
                .map(|v| sigma(class.representative, v))
                .collect()
        })
        .collect();

    if opts.cross_check_representatives {
        for (c, class) in classes.iter().enumerate() {
            for &member in &class.members[1..] {
                for (v, &reference) in sigma_table[c].iter().enumerate() {
                    let deviation = (sigma(member, v) - reference).norm();
                    if deviation > REPRESENTATIVE_TOL * reference.norm().max(1.0) {
                        return Err(Error::RepresentativeDependence {
                            class: c,
                            deviation,
                        });
                    }
                }
            }
        }
    }

    let n = g.order();
    let mut lines = Vec::with_capacity(irreps_h.len() * irreps_k.len());
    for (u, rho_u) in irreps_h.irreps.iter().enumerate() {
        let du = rho_u.degree;
        let lambda_h: Vec<Complex64> = classes
            .iter()
            .map(|class| rho_u.character(class.representative) * (class.size() as f64 / du as f64))
            .collect();
        for (v, rho_v) in irreps_k.irreps.iter().enumerate() {
            let dv = rho_v.degree;
            let class_terms: Vec<ClassTerm> = classes
                .iter()
                .enumerate()
                .map(|(c, class)| ClassTerm {
                    class_index: c,
                    representative: class.representative,
                    size: class.size(),
                    lambda_h: lambda_h[c],
                    sigma_k: sigma_table[c][v],
                })
                .collect();
            let eigenvalue = class_terms.iter().map(|t| t.lambda_h * t.sigma_k).sum();
            let mut eigenvectors = Vec::new();
            if opts.eigenvectors {
                let scale = ((du * dv) as f64 / n as f64).sqrt();
                for j in 0..du {
                    for i in 0..du {
                        for jp in 0..dv {
                            for ip in 0..dv {
                                let mut entries = Vec::with_capacity(n);
                                for a in 0..l {
                                    let hu = rho_u.matrix(a)[(i, j)] * scale;
                                    for b in 0..m {
                                        entries.push(hu * rho_v.matrix(b)[(ip, jp)]);
                                    }
                                }
                                eigenvectors.push(Eigenvector {
                                    coefficient: [i, j, ip, jp],
                                    entries,
                                });
                            }
                        }
                    }
                }
            }
            lines.push(SpectralLine {
                u,
                v,
                label: format!("{} x {}", rho_u.label, rho_v.label),
                eigenvalue,
                multiplicity: du * du * dv * dv,
                eigenvectors,
                class_terms,
            });
        }
    }
    Ok(Spectrum {
        n,
        method: Method::Thm31,
        lines,
        verified_by_theorem: report.passed(),
    })
}

/// Checks the metacyclic parameters and that every layer is reduced modulo
/// `m` and closed under `s -> r*s mod m`.
pub fn validate_layers(m: usize, l: usize, r: usize, layers: &[Vec<usize>]) -> Result<()> {
    if m == 0 || l == 0 {
        return Err(Error::InvalidAction(format!(
            "orders must be positive, got m={m}, l={l}"
        )));
    }
    if gcd(r % m, m) != 1 && m > 1 {
        return Err(Error::InvalidAction(format!(
            "r={r} is not a unit modulo {m}"
        )));
    }
    if pow_mod(r, l, m) != 1 % m {
        return Err(Error::InvalidAction(format!(
            "r^l = {r}^{l} is not 1 modulo {m}"
        )));
    }
    if layers.len() != l {
        return Err(Error::DimensionMismatch {
            expected: l,
            found: layers.len(),
        });
    }
    for (t, layer) in layers.iter().enumerate() {
        let mut member = vec![false; m];
        for &s in layer {
            if s >= m {
                return Err(Error::InvalidParameters(format!(
                    "layer {t} exponent {s} is not reduced modulo {m}"
                )));
            }
            member[s] = true;
        }
        for &s in layer {
            let image = s * r % m;
            if !member[image] {
                return Err(Error::LayerNotInvariant {
                    layer: t,
                    exponent: s,
                    image,
                });
            }
        }
    }
    Ok(())
}

/// Spectrum of the Cayley graph of `C_m x| C_l` (`h k h^-1 = k^r`) with
/// connection set `S_0 u h S_1 u .. u h^(l-1) S_(l-1)`, layer `t` listing
/// exponents of `k`:
/// `lambda(u, v) = sum_t w_l^(u t) sum_(s in S_t) w_m^(v s)`, eigenvector
/// `w_l^(u a) w_m^(v b) / sqrt(l m)` at vertex `h^a k^b`.
pub fn spectrum_cor33(
    m: usize,
    l: usize,
    r: usize,
    layers: &[Vec<usize>],
    eigenvectors: bool,
) -> Result<Spectrum> {
    validate_layers(m, l, r, layers)?;
    let n = m * l;
    let scale = 1.0 / (n as f64).sqrt();
    let mut lines = Vec::with_capacity(n);
    for u in 0..l {
        for v in 0..m {
            let eigenvalue: Complex64 = layers
                .iter()
                .enumerate()
                .map(|(t, layer)| {
                    let inner: Complex64 = layer
                        .iter()
                        .map(|&s| root_of_unity((v * s) as i64, m))
                        .sum();
                    root_of_unity((u * t) as i64, l) * inner
                })
                .sum();
            let eigenvectors = if eigenvectors {
                let mut entries = Vec::with_capacity(n);
                for a in 0..l {
                    let hu = root_of_unity((u * a) as i64, l) * scale;
                    for b in 0..m {
                        entries.push(hu * root_of_unity((v * b) as i64, m));
                    }
                }
                vec![Eigenvector {
                    coefficient: [0, 0, 0, 0],
                    entries,
                }]
            } else {
                Vec::new()
            };
            lines.push(SpectralLine {
                u,
                v,
                label: format!("chi{u} x chi{v}"),
                eigenvalue,
                multiplicity: 1,
                eigenvectors,
                class_terms: Vec::new(),
            });
        }
    }
    Ok(Spectrum {
        n,
        method: Method::Cor33,
        lines,
        verified_by_theorem: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{adjacency_in_vertex_order, color_from_layers, family_remark34};
    use crate::group::Complement;
    use crate::repr::{irreps_cyclic, split_irreps};

    fn multiset(s: &Spectrum) -> Vec<(f64, usize)> {
        s.multiset(1e-9)
            .into_iter()
            .map(|(z, c)| (z.re, c))
            .collect()
    }

    fn assert_multiset(s: &Spectrum, expected: &[(f64, usize)]) {
        let got = multiset(s);
        assert_eq!(got.len(), expected.len(), "{got:?}");
        for ((x, c), (y, d)) in got.iter().zip(expected) {
            assert!((x - y).abs() < 1e-10, "{got:?}");
            assert_eq!(c, d, "{got:?}");
        }
        assert!(s.eigenvalues().iter().all(|z| z.im.abs() < 1e-10));
    }

    fn max_residual(g: &FiniteGroup, alpha: &ColorFunction, s: &Spectrum) -> f64 {
        let adj = adjacency_in_vertex_order(g, alpha);
        let mut worst: f64 = 0.0;
        for line in &s.lines {
            for vec in &line.eigenvectors {
                let ax = adj.apply(&vec.entries);
                for (y, x) in ax.iter().zip(&vec.entries) {
                    worst = worst.max((y - line.eigenvalue * x).norm());
                }
            }
        }
        worst
    }

    #[test]
    fn prism() {
        let s = spectrum_cor33(3, 2, 2, &[vec![1, 2], vec![0]], true).unwrap();
        assert_multiset(&s, &[(-2.0, 2), (0.0, 2), (1.0, 1), (3.0, 1)]);
        let g = FiniteGroup::metacyclic(3, 2, 2).unwrap();
        let alpha = color_from_layers(&g, &[vec![1, 2], vec![0]]).unwrap();
        assert!(max_residual(&g, &alpha, &s) < 1e-12);
    }

    #[test]
    fn hexagon() {
        let s = spectrum_cor33(6, 1, 1, &[vec![1, 5]], false).unwrap();
        let expected = [2.0, 1.0, -1.0, -2.0, -1.0, 1.0];
        for (line, e) in s.lines.iter().zip(expected) {
            assert!((line.eigenvalue.re - e).abs() < 1e-12);
        }
    }

    #[test]
    fn family_7_3_2() {
        let fam = family_remark34(7, 3, 2).unwrap();
        let s = spectrum_cor33(7, 3, 2, &fam.layers, true).unwrap();
        assert_multiset(&s, &[(-2.0, 12), (1.0, 6), (5.0, 2), (8.0, 1)]);
        assert!(s.trace().norm() < 1e-10);
        let sq: f64 = s.eigenvalues().iter().map(|z| z.norm_sqr()).sum();
        assert!((sq - 168.0).abs() < 1e-9);
        let alpha = fam.connection.color(&fam.group);
        assert!(max_residual(&fam.group, &alpha, &s) < 1e-11);
    }

    #[test]
    fn layer_violation() {
        let err = spectrum_cor33(7, 3, 2, &[vec![1, 6], vec![], vec![]], false).unwrap_err();
        assert!(matches!(
            err,
            Error::LayerNotInvariant {
                layer: 0,
                exponent: 1,
                image: 2
            }
        ));
        assert!(matches!(
            validate_layers(7, 3, 3, &[vec![], vec![], vec![]]),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn cor33_matches_thm31_per_label() {
        let fam = family_remark34(7, 3, 2).unwrap();
        let alpha = fam.connection.color(&fam.group);
        let a = spectrum_cor33(7, 3, 2, &fam.layers, false).unwrap();
        let b = spectrum_thm31(
            &fam.group,
            &alpha,
            &irreps_cyclic(3),
            &irreps_cyclic(7),
            Thm31Options::default(),
        )
        .unwrap();
        for (x, y) in a.lines.iter().zip(&b.lines) {
            assert_eq!((x.u, x.v), (y.u, y.v));
            assert!((x.eigenvalue - y.eigenvalue).norm() < 1e-10);
        }
    }

    fn order42() -> (FiniteGroup, ColorFunction) {
        // D3 acting on C7: rotations trivially, reflections by inversion
        let g = FiniteGroup::semidirect(7, Complement::Dihedral(3), &[1, 6]).unwrap();
        let split = g.split().unwrap();
        let mut set: Vec<usize> = split.k[1..].to_vec();
        set.extend(&split.h[3..]);
        let alpha = ColorFunction::from_set(&g, &set);
        (g, alpha)
    }

    #[test]
    fn order_42_group() {
        let (g, alpha) = order42();
        let (ih, ik) = split_irreps(&g).unwrap();
        let opts = Thm31Options {
            cross_check_representatives: true,
            eigenvectors: true,
            ..Default::default()
        };
        let s = spectrum_thm31(&g, &alpha, &ih, &ik, opts).unwrap();
        assert_eq!(s.total_multiplicity(), 42);
        assert_multiset(
            &s,
            &[
                (-4.0, 6),
                (-1.0, 24),
                (2.0, 6),
                (3.0, 1),
                (6.0, 4),
                (9.0, 1),
            ],
        );
        // class order: {e}, rotations, reflections
        let trivial = s.find(0, 0).unwrap();
        let sig: Vec<f64> = trivial.class_terms.iter().map(|t| t.sigma_k.re).collect();
        assert_eq!(sig.len(), 3);
        assert!(
            (sig[0] - 6.0).abs() < 1e-12 && sig[1].abs() < 1e-12 && (sig[2] - 1.0).abs() < 1e-12
        );
        let lam: Vec<f64> = s
            .find(2, 0)
            .unwrap()
            .class_terms
            .iter()
            .map(|t| t.lambda_h.re)
            .collect();
        assert!(
            (lam[0] - 1.0).abs() < 1e-12 && (lam[1] + 1.0).abs() < 1e-12 && lam[2].abs() < 1e-12
        );
        assert!(max_residual(&g, &alpha, &s) < 1e-11);
    }

    #[test]
    fn zero_function_gives_zero_spectrum() {
        let g = FiniteGroup::metacyclic(5, 4, 2).unwrap();
        let (ih, ik) = split_irreps(&g).unwrap();
        let s = spectrum_thm31(
            &g,
            &ColorFunction::zero(20),
            &ih,
            &ik,
            Thm31Options::default(),
        )
        .unwrap();
        assert!(s
            .lines
            .iter()
            .all(|l| l.eigenvalue == Complex64::new(0.0, 0.0)));
        assert_eq!(s.total_multiplicity(), 20);
    }

    #[test]
    fn violated_hypotheses_are_reported_unless_overridden() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        let alpha = ColorFunction::from_set(&g, &[1, 6]);
        let (ih, ik) = split_irreps(&g).unwrap();
        let err = spectrum_thm31(&g, &alpha, &ih, &ik, Thm31Options::default()).unwrap_err();
        assert!(matches!(err, Error::HypothesesViolated(_)));
        let s = spectrum_thm31(
            &g,
            &alpha,
            &ih,
            &ik,
            Thm31Options {
                override_hypotheses: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(!s.verified_by_theorem);
    }
}
