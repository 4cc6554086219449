//! Irreducible unitary representations, Fourier transforms on the group and
//! the change-of-basis matrix built from scaled matrix coefficients.
//!
//! Built-in irrep sets are ordered by ascending degree, then by their
//! defining parameter, so labels are reproducible across runs.

use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::cayley::ColorFunction;
use crate::error::{Error, Result};
use crate::group::{construct_group, Complement, FiniteGroup, GroupKind, GroupSpec};
use crate::roots::root_of_unity;

pub type CMatrix = DMatrix<Complex64>;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Tolerances used by [`validate_irrep_set`].
pub const HOMOMORPHISM_TOL: f64 = 1e-10;
pub const UNITARITY_TOL: f64 = 1e-10;
pub const CHARACTER_TOL: f64 = 1e-9;

#[derive(Clone, Debug)]
pub struct UnitaryIrrep {
    pub label: String,
    pub degree: usize,
    /// One `degree x degree` matrix per group element, by canonical index.
    pub matrices: Vec<CMatrix>,
}

impl UnitaryIrrep {
    pub fn new(label: impl Into<String>, degree: usize, matrices: Vec<CMatrix>) -> Self {
        UnitaryIrrep {
            label: label.into(),
            degree,
            matrices,
        }
    }

    fn scalar(label: impl Into<String>, values: Vec<Complex64>) -> Self {
        let matrices = values
            .into_iter()
            .map(|z| CMatrix::from_element(1, 1, z))
            .collect();
        UnitaryIrrep::new(label, 1, matrices)
    }

    pub fn matrix(&self, g: usize) -> &CMatrix {
        &self.matrices[g]
    }

    pub fn character(&self, g: usize) -> Complex64 {
        self.matrices[g].trace()
    }

    pub fn characters(&self) -> Vec<Complex64> {
        self.matrices.iter().map(|m| m.trace()).collect()
    }
}

#[derive(Clone, Debug)]
pub struct IrrepSet {
    pub order: usize,
    pub irreps: Vec<UnitaryIrrep>,
}

impl IrrepSet {
    pub fn new(order: usize, irreps: Vec<UnitaryIrrep>) -> Self {
        IrrepSet { order, irreps }
    }

    pub fn len(&self) -> usize {
        self.irreps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreps.is_empty()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.irreps.iter().map(|r| r.degree).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.irreps.iter().map(|r| r.degree).max().unwrap_or(0)
    }
}

/// The `n` characters of `C_n`: `chi_v(k^s) = exp(2 pi i v s / n)`.
pub fn irreps_cyclic(n: usize) -> IrrepSet {
    let irreps = (0..n)
        .map(|v| {
            let values = (0..n).map(|s| root_of_unity((v * s) as i64, n)).collect();
            UnitaryIrrep::scalar(format!("chi{v}"), values)
        })
        .collect();
    IrrepSet::new(n, irreps)
}

/// Characters of `C_{o_1} x .. x C_{o_q}`, indexed by exponent vectors in
/// the same mixed radix as the group elements.
pub fn irreps_abelian(orders: &[usize]) -> Result<IrrepSet> {
    let group = construct_group(&GroupSpec::Abelian {
        orders: orders.to_vec(),
    })?;
    let n = group.order();
    let decode = |x: usize| -> Vec<usize> {
        let mut rest = x;
        let mut out = vec![0; orders.len()];
        for i in (0..orders.len()).rev() {
            out[i] = rest % orders[i];
            rest /= orders[i];
        }
        out
    };
    let irreps = (0..n)
        .map(|v| {
            let vs = decode(v);
            let values = (0..n)
                .map(|x| {
                    decode(x)
                        .iter()
                        .zip(&vs)
                        .zip(orders)
                        .fold(ONE, |acc, ((&e, &w), &o)| {
                            acc * root_of_unity((e * w) as i64, o)
                        })
                })
                .collect();
            let label = format!(
                "chi({})",
                vs.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            UnitaryIrrep::scalar(label, values)
        })
        .collect();
    Ok(IrrepSet::new(n, irreps))
}

/// Irreps of `D_n` (order `2n`, element `s^f rho^j` at index `f*n + j`).
///
/// Two-dimensional irrep `p` sends `rho` to `diag(w^p, w^-p)` with
/// `w = exp(2 pi i / n)` and `s` to the exchange matrix.
pub fn irreps_dihedral(n: usize) -> Result<IrrepSet> {
    if n < 3 {
        return Err(Error::InvalidParameters(format!(
            "dihedral irreps need n >= 3, got {n}"
        )));
    }
    let order = 2 * n;
    let mut one_dim: Vec<(&str, f64, f64)> = vec![("trivial", 1.0, 1.0), ("sign", 1.0, -1.0)];
    if n.is_multiple_of(2) {
        one_dim.push(("rho-alternating", -1.0, 1.0));
        one_dim.push(("rho-alternating-sign", -1.0, -1.0));
    }
    let mut irreps: Vec<UnitaryIrrep> = one_dim
        .into_iter()
        .map(|(label, eps_rho, eps_s)| {
            let values = (0..order)
                .map(|x| {
                    let (f, j) = (x / n, x % n);
                    let v = eps_s.powi(f as i32) * eps_rho.powi(j as i32);
                    Complex64::new(v, 0.0)
                })
                .collect();
            UnitaryIrrep::scalar(label, values)
        })
        .collect();
    for p in 1..=(n - 1) / 2 {
        let matrices = (0..order)
            .map(|x| {
                let (f, j) = (x / n, x % n);
                let a = root_of_unity((p * j) as i64, n);
                let b = root_of_unity(-((p * j) as i64), n);
                if f == 0 {
                    CMatrix::from_row_slice(2, 2, &[a, ZERO, ZERO, b])
                } else {
                    CMatrix::from_row_slice(2, 2, &[ZERO, b, a, ZERO])
                }
            })
            .collect();
        irreps.push(UnitaryIrrep::new(format!("plane{p}"), 2, matrices));
    }
    Ok(IrrepSet::new(order, irreps))
}

/// Irreps of the split metacyclic group `C_m x| C_l` with `h k h^-1 = k^r`,
/// induced from the stabilizers of the characters of `C_m`.
///
/// For a character `v` whose orbit under `v -> v*r` has size `t`, and a
/// character `psi_w` of `<h^t>` (of order `l/t`), the induced irrep is
/// monomial: with `a + j = q*t + j'`,
/// `rho(h^a k^b)[j', j] = psi_w^q * exp(2 pi i v b s^j / m)`, `s = r^-1`.
pub fn irreps_metacyclic(m: usize, l: usize, r: usize) -> Result<IrrepSet> {
    let group = FiniteGroup::metacyclic(m, l, r)?;
    let n = group.order();
    let s = modular_inverse(r % m, m);
    let mut seen = vec![false; m];
    // (degree, v, w)
    let mut params = Vec::new();
    for v in 0..m {
        if seen[v] {
            continue;
        }
        let mut t = 0;
        let mut x = v;
        loop {
            seen[x] = true;
            t += 1;
            x = x * r % m;
            if x == v {
                break;
            }
        }
        for w in 0..l / t {
            params.push((t, v, w));
        }
    }
    params.sort();
    let mut s_pows = vec![1 % m.max(1); l.max(1)];
    for j in 1..s_pows.len() {
        s_pows[j] = s_pows[j - 1] * s % m;
    }
    let irreps = params
        .into_iter()
        .map(|(t, v, w)| {
            let stab = l / t;
            let matrices = (0..n)
                .map(|x| {
                    let (a, b) = (x / m, x % m);
                    let mut mat = CMatrix::zeros(t, t);
                    for j in 0..t {
                        let q = (a + j) / t;
                        let jp = (a + j) % t;
                        let k_exp = v * (b * s_pows[j] % m) % m;
                        mat[(jp, j)] =
                            root_of_unity((w * q) as i64, stab) * root_of_unity(k_exp as i64, m);
                    }
                    mat
                })
                .collect();
            UnitaryIrrep::new(format!("ind(v={v},w={w})"), t, matrices)
        })
        .collect();
    Ok(IrrepSet::new(n, irreps))
}

fn modular_inverse(r: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    (1..m).find(|&x| r * x % m == 1).expect("unit modulo m")
}

/// Irreps of a complement `H`, indexed by `H`-local indices.
pub fn complement_irreps(c: &Complement) -> Result<IrrepSet> {
    match c {
        Complement::Cyclic(l) => Ok(irreps_cyclic(*l)),
        Complement::Abelian(orders) => irreps_abelian(orders),
        Complement::Dihedral(n) => irreps_dihedral(*n),
    }
}

/// The complement as a stand-alone group with the same local indexing.
pub fn complement_group(c: &Complement) -> Result<FiniteGroup> {
    match c {
        Complement::Cyclic(l) => FiniteGroup::cyclic(*l),
        Complement::Abelian(orders) => FiniteGroup::abelian(orders),
        Complement::Dihedral(n) => FiniteGroup::dihedral(*n),
    }
}

/// Built-in irreps of the whole group, where available.
pub fn builtin_irreps(g: &FiniteGroup) -> Option<IrrepSet> {
    match g.kind() {
        GroupKind::Cyclic { n } => Some(irreps_cyclic(*n)),
        GroupKind::Abelian { orders } => irreps_abelian(orders).ok(),
        GroupKind::Dihedral { n } => irreps_dihedral(*n).ok(),
        GroupKind::Metacyclic { m, l, r } => irreps_metacyclic(*m, *l, *r).ok(),
        GroupKind::Semidirect { .. } | GroupKind::Permutation { .. } => None,
    }
}

/// Built-in irreps of the complement `H` and of `K = C_m`, in that order.
pub fn split_irreps(g: &FiniteGroup) -> Option<(IrrepSet, IrrepSet)> {
    let complement = g.complement()?;
    let m = g.split()?.m();
    Some((complement_irreps(complement).ok()?, irreps_cyclic(m)))
}

#[derive(Clone, Debug, PartialEq)]
pub enum ValidationFailure {
    Shape(String),
    Homomorphism {
        irrep: usize,
        left: usize,
        right: usize,
        deviation: f64,
    },
    Unitarity {
        irrep: usize,
        element: usize,
        deviation: f64,
    },
    Irreducibility {
        irrep: usize,
        norm: f64,
    },
    Completeness {
        sum_of_squares: usize,
        order: usize,
    },
    Orthogonality {
        first: usize,
        second: usize,
        deviation: f64,
    },
}

impl fmt::Display for ValidationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationFailure::Shape(msg) => write!(f, "shape: {msg}"),
            ValidationFailure::Homomorphism {
                irrep,
                left,
                right,
                deviation,
            } => write!(
                f,
                "irrep {irrep}: rho({left}*{right}) != rho({left})rho({right}), deviation {deviation:e}"
            ),
            ValidationFailure::Unitarity {
                irrep,
                element,
                deviation,
            } => write!(f, "irrep {irrep}: rho({element}) not unitary, deviation {deviation:e}"),
            ValidationFailure::Irreducibility { irrep, norm } => {
                write!(f, "irrep {irrep}: <chi, chi> = {norm}, expected 1")
            }
            ValidationFailure::Completeness {
                sum_of_squares,
                order,
            } => write!(f, "sum of squared degrees {sum_of_squares} != group order {order}"),
            ValidationFailure::Orthogonality {
                first,
                second,
                deviation,
            } => write!(
                f,
                "irreps {first} and {second}: characters not orthonormal, deviation {deviation:e}"
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct ValidationReport {
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return write!(f, "pass");
        }
        let parts: Vec<String> = self.failures.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

fn shape_failures(n: usize, set: &IrrepSet) -> Vec<ValidationFailure> {
    let mut out = Vec::new();
    if set.order != n {
        out.push(ValidationFailure::Shape(format!(
            "set declares order {} for a group of order {n}",
            set.order
        )));
    }
    for (u, irrep) in set.irreps.iter().enumerate() {
        if irrep.degree == 0 {
            out.push(ValidationFailure::Shape(format!("irrep {u} has degree 0")));
        }
        if irrep.matrices.len() != n {
            out.push(ValidationFailure::Shape(format!(
                "irrep {u} has {} matrices, expected {n}",
                irrep.matrices.len()
            )));
        } else if let Some(g) = irrep
            .matrices
            .iter()
            .position(|mat| mat.nrows() != irrep.degree || mat.ncols() != irrep.degree)
        {
            out.push(ValidationFailure::Shape(format!(
                "irrep {u}: matrix of element {g} is not {0}x{0}",
                irrep.degree
            )));
        }
    }
    let sum: usize = set.irreps.iter().map(|r| r.degree * r.degree).sum();
    if sum != n {
        out.push(ValidationFailure::Completeness {
            sum_of_squares: sum,
            order: n,
        });
    }
    out
}

/// Shape and completeness check without the algebraic invariants.
pub(crate) fn check_shape(n: usize, set: &IrrepSet) -> Result<()> {
    let failures = shape_failures(n, set);
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Error::IrrepValidationFailed(ValidationReport { failures }))
    }
}

/// Checks every invariant of a candidate irrep set against the group:
/// homomorphism, unitarity, irreducibility, completeness and character
/// orthogonality. Each failure carries a witness.
pub fn validate_irrep_set(g: &FiniteGroup, set: &IrrepSet) -> ValidationReport {
    let n = g.order();
    let mut failures = shape_failures(n, set);
    if failures
        .iter()
        .any(|f| matches!(f, ValidationFailure::Shape(_)))
    {
        return ValidationReport { failures };
    }
    // Small groups get the full pair check; larger ones are checked against
    // generators, which implies the homomorphism property.
    let right: Vec<usize> = if n <= 256 {
        (0..n).collect()
    } else {
        g.generators().to_vec()
    };
    let characters: Vec<Vec<Complex64>> = set.irreps.iter().map(|r| r.characters()).collect();
    for (u, irrep) in set.irreps.iter().enumerate() {
        let d = irrep.degree;
        'hom: for x in 0..n {
            for &y in &right {
                let lhs = &irrep.matrices[g.mul(x, y)];
                let rhs = &irrep.matrices[x] * &irrep.matrices[y];
                let dev = max_abs_diff(lhs, &rhs);
                if dev > HOMOMORPHISM_TOL {
                    failures.push(ValidationFailure::Homomorphism {
                        irrep: u,
                        left: x,
                        right: y,
                        deviation: dev,
                    });
                    break 'hom;
                }
            }
        }
        let eye = CMatrix::identity(d, d);
        for (x, mat) in irrep.matrices.iter().enumerate() {
            let dev = max_abs_diff(&(mat * mat.adjoint()), &eye);
            if dev > UNITARITY_TOL {
                failures.push(ValidationFailure::Unitarity {
                    irrep: u,
                    element: x,
                    deviation: dev,
                });
                break;
            }
        }
        let norm = characters[u].iter().map(|c| c.norm_sqr()).sum::<f64>() / n as f64;
        if (norm - 1.0).abs() > CHARACTER_TOL {
            failures.push(ValidationFailure::Irreducibility { irrep: u, norm });
        }
    }
    for a in 0..set.len() {
        for b in (a + 1)..set.len() {
            let inner: Complex64 = characters[a]
                .iter()
                .zip(&characters[b])
                .map(|(x, y)| x * y.conj())
                .sum::<Complex64>()
                / n as f64;
            if inner.norm() > CHARACTER_TOL {
                failures.push(ValidationFailure::Orthogonality {
                    first: a,
                    second: b,
                    deviation: inner.norm(),
                });
            }
        }
    }
    ValidationReport { failures }
}

pub(crate) fn max_abs_diff(a: &CMatrix, b: &CMatrix) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

/// `f(rho) = sum_g f(g) rho(g)` for one irrep.
#[derive(Clone, Debug)]
pub struct FourierBlock {
    pub irrep: usize,
    pub matrix: CMatrix,
}

pub fn fourier_transform(f: &ColorFunction, irrep: &UnitaryIrrep) -> CMatrix {
    let d = irrep.degree;
    let mut acc = CMatrix::zeros(d, d);
    for (g, &value) in f.values().iter().enumerate() {
        if value != ZERO {
            acc += irrep.matrices[g].map(|z| z * value);
        }
    }
    acc
}

/// Position of a column of the change-of-basis matrix: irrep index and the
/// matrix coefficient `(i, j)` it samples.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoefficientLabel {
    pub irrep: usize,
    pub i: usize,
    pub j: usize,
}

/// Unitary matrix whose columns are the scaled coefficient vectors
/// `sqrt(d/n) * (rho(g_1)[i,j], .., rho(g_n)[i,j])`, irreps outermost and
/// `(i, j)` column-major within an irrep.
#[derive(Clone, Debug)]
pub struct PMatrix {
    pub matrix: CMatrix,
    /// Group index of each row.
    pub ordering: Vec<usize>,
    pub columns: Vec<CoefficientLabel>,
}

/// Scaled coefficient vector of `irrep` at `(i, j)` over `ordering`.
pub fn coefficient_vector(
    irrep: &UnitaryIrrep,
    i: usize,
    j: usize,
    ordering: &[usize],
    n: usize,
) -> Vec<Complex64> {
    let scale = (irrep.degree as f64 / n as f64).sqrt();
    ordering
        .iter()
        .map(|&g| irrep.matrices[g][(i, j)] * scale)
        .collect()
}

pub fn build_p_matrix(g: &FiniteGroup, set: &IrrepSet, ordering: &[usize]) -> Result<PMatrix> {
    let n = g.order();
    check_shape(n, set)?;
    if ordering.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ordering.len(),
        });
    }
    let mut matrix = CMatrix::zeros(n, n);
    let mut columns = Vec::with_capacity(n);
    for (u, irrep) in set.irreps.iter().enumerate() {
        for j in 0..irrep.degree {
            for i in 0..irrep.degree {
                let col = coefficient_vector(irrep, i, j, ordering, n);
                let c = columns.len();
                for (row, z) in col.into_iter().enumerate() {
                    matrix[(row, c)] = z;
                }
                columns.push(CoefficientLabel { irrep: u, i, j });
            }
        }
    }
    Ok(PMatrix {
        matrix,
        ordering: ordering.to_vec(),
        columns,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cyclic_characters() {
        let one = irreps_cyclic(1);
        assert_eq!(one.len(), 1);
        assert_eq!(one.irreps[0].character(0), ONE);
        let four = irreps_cyclic(4);
        assert_eq!(four.irreps[1].character(2), c(-1.0, 0.0));
        let seven = irreps_cyclic(7);
        assert_eq!(seven.irreps[3].character(5), root_of_unity(1, 7));
    }

    #[test]
    fn abelian_klein_and_crt() {
        let klein = irreps_abelian(&[2, 2]).unwrap();
        assert_eq!(klein.len(), 4);
        for r in &klein.irreps {
            for x in 0..4 {
                let z = r.character(x);
                assert!(z == c(1.0, 0.0) || z == c(-1.0, 0.0));
            }
        }
        // C2 x C3 ~ C6 via x = (e1, e2) <-> 3*e1 + 2*e2 (mod 6)
        let prod = irreps_abelian(&[2, 3]).unwrap();
        let cyc = irreps_cyclic(6);
        let to_cyclic = |x: usize| (3 * (x / 3) + 2 * (x % 3)) % 6;
        let mut matched = 0;
        for p in &prod.irreps {
            let table: Vec<Complex64> = (0..6).map(|x| p.character(x)).collect();
            if cyc
                .irreps
                .iter()
                .any(|q| (0..6).all(|x| (q.character(to_cyclic(x)) - table[x]).norm() < 1e-12))
            {
                matched += 1;
            }
        }
        assert_eq!(matched, 6);
        assert_eq!(irreps_abelian(&[1]).unwrap().len(), 1);
    }

    #[test]
    fn dihedral_degrees() {
        assert_eq!(irreps_dihedral(3).unwrap().degrees(), vec![1, 1, 2]);
        assert_eq!(irreps_dihedral(4).unwrap().degrees(), vec![1, 1, 1, 1, 2]);
        let d3 = irreps_dihedral(3).unwrap();
        assert!((d3.irreps[2].character(1) - c(-1.0, 0.0)).norm() < 1e-15);
        assert!(irreps_dihedral(2).is_err());
    }

    #[test]
    fn builtin_sets_validate() {
        for n in 1..=12 {
            let g = FiniteGroup::cyclic(n).unwrap();
            assert!(validate_irrep_set(&g, &irreps_cyclic(n)).passed());
        }
        for n in 3..=9 {
            let g = FiniteGroup::dihedral(n).unwrap();
            let report = validate_irrep_set(&g, &irreps_dihedral(n).unwrap());
            assert!(report.passed(), "D{n}: {report}");
        }
        for orders in [vec![2, 2], vec![2, 3, 2], vec![4, 6]] {
            let g = FiniteGroup::abelian(&orders).unwrap();
            assert!(validate_irrep_set(&g, &irreps_abelian(&orders).unwrap()).passed());
        }
        for &(m, l, r) in &[
            (7, 3, 2),
            (3, 2, 2),
            (5, 4, 2),
            (9, 6, 2),
            (8, 2, 3),
            (13, 4, 5),
            (12, 2, 5),
            (5, 2, 1),
        ] {
            let g = FiniteGroup::metacyclic(m, l, r).unwrap();
            let set = irreps_metacyclic(m, l, r).unwrap();
            let report = validate_irrep_set(&g, &set);
            assert!(report.passed(), "({m},{l},{r}): {report}");
        }
    }

    #[test]
    fn metacyclic_degrees() {
        // order 21: three linear characters and two of degree 3
        assert_eq!(
            irreps_metacyclic(7, 3, 2).unwrap().degrees(),
            vec![1, 1, 1, 3, 3]
        );
    }

    #[test]
    fn reducible_and_non_unitary_are_caught() {
        let g = FiniteGroup::dihedral(3).unwrap();
        let mut set = irreps_dihedral(3).unwrap();
        // direct sum trivial + sign in place of the plane irrep
        let sum: Vec<CMatrix> = (0..6)
            .map(|x| {
                let sign = set.irreps[1].character(x);
                CMatrix::from_row_slice(2, 2, &[ONE, ZERO, ZERO, sign])
            })
            .collect();
        set.irreps[2] = UnitaryIrrep::new("sum", 2, sum);
        let report = validate_irrep_set(&g, &set);
        assert!(report.failures.iter().any(|f| matches!(
            f,
            ValidationFailure::Irreducibility { irrep: 2, norm } if (norm - 2.0).abs() < 1e-12
        )));

        let mut set = irreps_dihedral(3).unwrap();
        set.irreps[2].matrices[4] *= c(2.0, 0.0);
        let report = validate_irrep_set(&g, &set);
        assert!(report.failures.iter().any(|f| matches!(
            f,
            ValidationFailure::Unitarity {
                irrep: 2,
                element: 4,
                ..
            }
        )));
    }

    #[test]
    fn fourier_examples() {
        let g = FiniteGroup::dihedral(4).unwrap();
        let set = irreps_dihedral(4).unwrap();
        let delta = ColorFunction::from_set(&g, &[0]);
        let ones = ColorFunction::from_set(&g, &(0..8).collect::<Vec<_>>());
        let s = ColorFunction::from_set(&g, &[1, 3, 5]);
        for (u, irrep) in set.irreps.iter().enumerate() {
            let d = irrep.degree;
            assert!(
                max_abs_diff(&fourier_transform(&delta, irrep), &CMatrix::identity(d, d)) == 0.0
            );
            let all = fourier_transform(&ones, irrep);
            if u == 0 {
                assert_eq!(all[(0, 0)], c(8.0, 0.0));
            } else {
                assert!(all.iter().all(|z| z.norm() < 1e-12));
            }
        }
        assert_eq!(fourier_transform(&s, &set.irreps[0])[(0, 0)], c(3.0, 0.0));
    }

    #[test]
    fn p_matrix_small_cases() {
        let g = FiniteGroup::cyclic(2).unwrap();
        let p = build_p_matrix(&g, &irreps_cyclic(2), &[0, 1]).unwrap();
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected =
            CMatrix::from_row_slice(2, 2, &[c(h, 0.0), c(h, 0.0), c(h, 0.0), c(-h, 0.0)]);
        assert!(max_abs_diff(&p.matrix, &expected) < 1e-15);

        let g = FiniteGroup::cyclic(3).unwrap();
        let p = build_p_matrix(&g, &irreps_cyclic(3), &[0, 1, 2]).unwrap();
        for v in 0..3 {
            for s in 0..3 {
                let z = root_of_unity((v * s) as i64, 3) / 3f64.sqrt();
                assert!((p.matrix[(s, v)] - z).norm() < 1e-15);
            }
        }
    }

    #[test]
    fn p_matrix_is_unitary() {
        let groups = [
            FiniteGroup::dihedral(5).unwrap(),
            FiniteGroup::metacyclic(7, 3, 2).unwrap(),
            FiniteGroup::abelian(&[2, 4]).unwrap(),
        ];
        for g in &groups {
            let set = builtin_irreps(g).unwrap();
            let p = build_p_matrix(g, &set, &g.vertex_ordering()).unwrap();
            let n = g.order();
            let gram = p.matrix.adjoint() * &p.matrix;
            assert!(max_abs_diff(&gram, &CMatrix::identity(n, n)) < 1e-12);
        }
    }

    #[test]
    fn p_matrix_rejects_incomplete_set() {
        let g = FiniteGroup::cyclic(3).unwrap();
        let mut set = irreps_cyclic(3);
        set.irreps.pop();
        assert!(matches!(
            build_p_matrix(&g, &set, &[0, 1, 2]),
            Err(Error::IrrepValidationFailed(_))
        ));
    }
}
