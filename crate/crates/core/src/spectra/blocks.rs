use num_complex::Complex64;

use super::{Eigenvector, Method, SpectralLine, Spectrum};
use crate::cayley::{adjacency_in_vertex_order, ColorFunction};
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::repr::{
    build_p_matrix, check_shape, coefficient_vector, fourier_transform, max_abs_diff, CMatrix,
    FourierBlock, IrrepSet,
};

/// Largest order for which the reconstruction residual is computed.
pub const RECONSTRUCTION_LIMIT: usize = 500;

#[derive(Clone, Debug)]
pub struct BlockDiagonalization {
    /// `alpha(rho_k) = sum_g alpha(g) rho_k(g)` for every irrep.
    pub blocks: Vec<FourierBlock>,
    /// Closed-form eigenvalues of `alpha(rho_k)` for degree at most 2.
    pub block_eigenvalues: Vec<Option<Vec<Complex64>>>,
    /// Max entrywise deviation of `P diag(I (x) alpha(rho_k)^T) P*` from the
    /// adjacency matrix; `None` above [`RECONSTRUCTION_LIMIT`].
    pub reconstruction_residual: Option<f64>,
}

/// Fourier blocks of `alpha` and the residual of reassembling the adjacency
/// matrix from them.
pub fn block_diagonalize_thm21(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    irreps: &IrrepSet,
) -> Result<BlockDiagonalization> {
    check_shape(g.order(), irreps)?;
    let blocks: Vec<FourierBlock> = irreps
        .irreps
        .iter()
        .enumerate()
        .map(|(k, irrep)| FourierBlock {
            irrep: k,
            matrix: fourier_transform(alpha, irrep),
        })
        .collect();
    let block_eigenvalues = blocks
        .iter()
        .map(|b| closed_form_eigenvalues(&b.matrix))
        .collect();
    let reconstruction_residual = if g.order() <= RECONSTRUCTION_LIMIT {
        let ordering = g.vertex_ordering();
        let p = build_p_matrix(g, irreps, &ordering)?;
        let adj = adjacency_in_vertex_order(g, alpha);
        Some(max_abs_diff(
            &reconstruct_adjacency(&p.matrix, &blocks),
            &adj.matrix,
        ))
    } else {
        None
    };
    Ok(BlockDiagonalization {
        blocks,
        block_eigenvalues,
        reconstruction_residual,
    })
}

/// Block diagonal `diag(I_d (x) B_k)` with `B_k` the block or its transpose.
fn block_diagonal(blocks: &[FourierBlock], transpose: bool) -> CMatrix {
    let n: usize = blocks.iter().map(|b| b.matrix.nrows().pow(2)).sum();
    let mut out = CMatrix::zeros(n, n);
    let mut offset = 0;
    for b in blocks {
        let d = b.matrix.nrows();
        let block = if transpose {
            b.matrix.transpose()
        } else {
            b.matrix.clone()
        };
        for _ in 0..d {
            out.view_mut((offset, offset), (d, d)).copy_from(&block);
            offset += d;
        }
    }
    out
}

/// `P diag(I_d (x) alpha(rho_k)^T) P*`, which equals the adjacency matrix
/// `A[x][y] = alpha(v_y v_x^-1)` in the row ordering of `P`.
pub fn reconstruct_adjacency(p: &CMatrix, blocks: &[FourierBlock]) -> CMatrix {
    p * block_diagonal(blocks, true) * p.adjoint()
}

/// `conj(P) diag(I_d (x) alpha(rho_k)) conj(P)^-1`, the image of `alpha`
/// under the left regular representation `e_x -> e_(g x)`. Unitarity of `P`
/// gives `conj(P)^-1 = P^T`.
pub fn reconstruct_regular(p: &CMatrix, blocks: &[FourierBlock]) -> CMatrix {
    p.conjugate() * block_diagonal(blocks, false) * p.transpose()
}

fn unit2(x: Complex64, y: Complex64) -> [Complex64; 2] {
    let norm = (x.norm_sqr() + y.norm_sqr()).sqrt();
    [x / norm, y / norm]
}

/// Eigenpairs of a 2x2 matrix by the quadratic formula, with unit
/// eigenvectors. A matrix with vanishing off-diagonal part returns the
/// standard basis. For a defective matrix both pairs share one vector.
pub fn eig2(mat: &CMatrix) -> [(Complex64, [Complex64; 2]); 2] {
    let (a, b, c, d) = (mat[(0, 0)], mat[(0, 1)], mat[(1, 0)], mat[(1, 1)]);
    let scale = mat.iter().map(|z| z.norm()).fold(1.0, f64::max);
    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    if b.norm() <= 1e-14 * scale && c.norm() <= 1e-14 * scale {
        return [(a, [one, zero]), (d, [zero, one])];
    }
    let half_trace = (a + d) / 2.0;
    let disc = ((a - d) / 2.0).powi(2) + b * c;
    let root = disc.sqrt();
    let values = [half_trace + root, half_trace - root];
    values.map(|mu| {
        // rows of (M - mu I) annihilate the vector; use the better conditioned one
        let v1 = [b, mu - a];
        let v2 = [mu - d, c];
        let pick = if v1[0].norm_sqr() + v1[1].norm_sqr() >= v2[0].norm_sqr() + v2[1].norm_sqr() {
            v1
        } else {
            v2
        };
        (mu, unit2(pick[0], pick[1]))
    })
}

/// Eigenvalues in closed form for blocks of size 1 or 2.
pub fn closed_form_eigenvalues(block: &CMatrix) -> Option<Vec<Complex64>> {
    match block.nrows() {
        1 => Some(vec![block[(0, 0)]]),
        2 => Some(eig2(block).iter().map(|(mu, _)| *mu).collect()),
        _ => None,
    }
}

/// Spectrum from the eigenpairs of the Fourier blocks when every irrep has
/// degree at most 2. An eigenpair `(mu, y)` of `alpha(rho_k)^T` yields the
/// eigenvectors `sum_p y_p x^(p, j)`, one for each column `j`.
pub fn spectrum_blocks(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    irreps: &IrrepSet,
    eigenvectors: bool,
) -> Result<Spectrum> {
    check_shape(g.order(), irreps)?;
    if let Some(d) = irreps.degrees().into_iter().find(|&d| d > 2) {
        return Err(Error::BlockTooLarge(d));
    }
    let n = g.order();
    let ordering = g.vertex_ordering();
    let mut lines = Vec::new();
    for (u, irrep) in irreps.irreps.iter().enumerate() {
        let d = irrep.degree;
        let block = fourier_transform(alpha, irrep).transpose();
        let pairs: Vec<(Complex64, Vec<Complex64>)> = if d == 1 {
            vec![(block[(0, 0)], vec![Complex64::new(1.0, 0.0)])]
        } else {
            eig2(&block)
                .iter()
                .map(|(mu, y)| (*mu, y.to_vec()))
                .collect()
        };
        for (slot, (mu, y)) in pairs.into_iter().enumerate() {
            let mut vectors = Vec::new();
            if eigenvectors {
                let columns: Vec<Vec<Vec<Complex64>>> = (0..d)
                    .map(|j| {
                        (0..d)
                            .map(|p| coefficient_vector(irrep, p, j, &ordering, n))
                            .collect()
                    })
                    .collect();
                for (j, coeffs) in columns.iter().enumerate() {
                    let mut entries = vec![Complex64::new(0.0, 0.0); n];
                    for (p, x) in coeffs.iter().enumerate() {
                        for (e, z) in entries.iter_mut().zip(x) {
                            *e += y[p] * z;
                        }
                    }
                    vectors.push(Eigenvector {
                        coefficient: [slot, j, 0, 0],
                        entries,
                    });
                }
            }
            lines.push(SpectralLine {
                u,
                v: slot,
                label: irrep.label.clone(),
                eigenvalue: mu,
                multiplicity: d,
                eigenvectors: vectors,
                class_terms: Vec::new(),
            });
        }
    }
    Ok(Spectrum {
        n,
        method: Method::Blocks,
        lines,
        verified_by_theorem: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::color_from_layers;
    use crate::repr::split_irreps;
    use crate::repr::{builtin_irreps, irreps_dihedral};
    use crate::spectra::{spectrum_normal, spectrum_thm31, Thm31Options};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn eig2_closed_form() {
        let m = CMatrix::from_row_slice(
            2,
            2,
            &[c(-1.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(-1.0, 0.0)],
        );
        let pairs = eig2(&m);
        let mut vals: Vec<f64> = pairs.iter().map(|(z, _)| z.re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 2.0).abs() < 1e-15 && vals[1].abs() < 1e-15);
        for (mu, y) in pairs {
            let r0 = m[(0, 0)] * y[0] + m[(0, 1)] * y[1] - mu * y[0];
            let r1 = m[(1, 0)] * y[0] + m[(1, 1)] * y[1] - mu * y[1];
            assert!(r0.norm() < 1e-14 && r1.norm() < 1e-14);
        }
        let scalar = CMatrix::identity(2, 2) * c(3.0, 0.0);
        let pairs = eig2(&scalar);
        assert_eq!(pairs[0].1, [c(1.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(pairs[1].1, [c(0.0, 0.0), c(1.0, 0.0)]);
    }

    #[test]
    fn class_function_blocks_are_scalar() {
        let g = FiniteGroup::dihedral(5).unwrap();
        let irreps = irreps_dihedral(5).unwrap();
        let rotations: Vec<usize> = (1..5).collect();
        let alpha = ColorFunction::from_set(&g, &rotations);
        let bd = block_diagonalize_thm21(&g, &alpha, &irreps).unwrap();
        let normal = spectrum_normal(&g, &alpha, &irreps, false).unwrap();
        for (block, line) in bd.blocks.iter().zip(&normal.lines) {
            let d = block.matrix.nrows();
            let expected = CMatrix::identity(d, d) * line.eigenvalue;
            assert!(max_abs_diff(&block.matrix, &expected) < 1e-12);
        }
        assert!(bd.reconstruction_residual.unwrap() < 1e-12);
    }

    #[test]
    fn identity_indicator() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        let irreps = builtin_irreps(&g).unwrap();
        let alpha = ColorFunction::from_set(&g, &[0]);
        let bd = block_diagonalize_thm21(&g, &alpha, &irreps).unwrap();
        for b in &bd.blocks {
            let d = b.matrix.nrows();
            assert_eq!(b.matrix, CMatrix::identity(d, d));
        }
        assert!(bd.reconstruction_residual.unwrap() < 1e-12);
        assert!(bd.block_eigenvalues[4].is_none());
    }

    #[test]
    fn regular_reconstruction_matches_left_action() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let irreps = irreps_dihedral(4).unwrap();
        let alpha =
            ColorFunction::from_values((0..8).map(|x| c(x as f64 - 2.0, (x % 3) as f64)).collect());
        let ordering = g.vertex_ordering();
        let pos: Vec<usize> = {
            let mut pos = vec![0; 8];
            for (i, &x) in ordering.iter().enumerate() {
                pos[x] = i;
            }
            pos
        };
        let mut direct = CMatrix::zeros(8, 8);
        for h in 0..8 {
            for x in 0..8 {
                direct[(pos[g.mul(h, x)], pos[x])] += alpha.value(h);
            }
        }
        let bd = block_diagonalize_thm21(&g, &alpha, &irreps).unwrap();
        let p = build_p_matrix(&g, &irreps, &ordering).unwrap();
        assert!(max_abs_diff(&reconstruct_regular(&p.matrix, &bd.blocks), &direct) < 1e-12);
    }

    #[test]
    fn prism_blocks_reproduce_split_formula() {
        let g = FiniteGroup::metacyclic(3, 2, 2).unwrap();
        let alpha = color_from_layers(&g, &[vec![1, 2], vec![0]]).unwrap();
        // metacyclic(3,2,2) is D3, whose built-in set has one 2-dim irrep
        let irreps = builtin_irreps(&g).unwrap();
        let bd = block_diagonalize_thm21(&g, &alpha, &irreps).unwrap();
        let two_dim = bd
            .block_eigenvalues
            .iter()
            .zip(&bd.blocks)
            .find(|(_, b)| b.matrix.nrows() == 2)
            .unwrap()
            .0
            .clone()
            .unwrap();
        let mut vals: Vec<f64> = two_dim.iter().map(|z| z.re).collect();
        vals.sort_by(f64::total_cmp);
        assert!((vals[0] + 2.0).abs() < 1e-12 && vals[1].abs() < 1e-12);
        let (ih, ik) = split_irreps(&g).unwrap();
        let thm = spectrum_thm31(&g, &alpha, &ih, &ik, Thm31Options::default()).unwrap();
        let blocks = spectrum_blocks(&g, &alpha, &irreps, true).unwrap();
        assert_eq!(thm.multiset(1e-9).len(), blocks.multiset(1e-9).len());
        for (a, b) in thm.multiset(1e-9).iter().zip(blocks.multiset(1e-9)) {
            assert!((a.0 - b.0).norm() < 1e-10 && a.1 == b.1);
        }
    }

    #[test]
    fn blocks_reject_large_degrees() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        let irreps = builtin_irreps(&g).unwrap();
        let err = spectrum_blocks(&g, &ColorFunction::zero(21), &irreps, false).unwrap_err();
        assert!(matches!(err, Error::BlockTooLarge(3)));
    }
}
