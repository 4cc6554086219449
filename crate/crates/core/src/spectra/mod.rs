//! Closed-form spectra and eigenbases of Cayley color graphs.
//!
//! Three routes are provided:
//! * [`spectrum_normal`] for class functions, from the irreducible characters
//!   of the whole group;
//! * [`spectrum_thm31`] for split extensions `K x| H` whose color function is
//!   invariant in the sense checked by [`check_thm31_hypotheses`];
//! * [`spectrum_cor33`] for split metacyclic groups with conjugation-stable
//!   layers, as explicit exponential sums.
//!
//! [`block_diagonalize_thm21`] exposes the underlying block structure for
//! arbitrary color functions.
//!
//! Eigenvectors are indexed by the group's vertex ordering (the transversal
//! ordering `h_a k_b` at vertex `a*m + b` for split groups).

mod blocks;
mod hypotheses;
mod normal;
mod split;

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;

pub use blocks::{
    block_diagonalize_thm21, closed_form_eigenvalues, eig2, reconstruct_adjacency,
    reconstruct_regular, spectrum_blocks, BlockDiagonalization,
};
pub use hypotheses::{check_thm31_hypotheses, HypothesisReport, WitnessA, WitnessB};
pub use normal::spectrum_normal;
pub use split::{spectrum_cor33, spectrum_thm31, validate_layers, Thm31Options};

/// Default cluster radius for merging numerically equal eigenvalues.
pub const CLUSTER_RADIUS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Normal,
    Thm31,
    Cor33,
    Blocks,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Normal => "normal-formula",
            Method::Thm31 => "thm31",
            Method::Cor33 => "cor33",
            Method::Blocks => "blocks",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A unit eigenvector with the matrix-coefficient labels `(i, j, i', j')`
/// it was built from. Unused positions are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct Eigenvector {
    pub coefficient: [usize; 4],
    pub entries: Vec<Complex64>,
}

/// Per-class intermediate values of the split-extension formula:
/// `lambda_h = |C| chi_u(h_C) / d_u` and
/// `sigma_k = (1/d_v) sum_k alpha(h_C k) chi_v(k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClassTerm {
    pub class_index: usize,
    /// `H`-local index of `h_C`.
    pub representative: usize,
    pub size: usize,
    pub lambda_h: Complex64,
    pub sigma_k: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectralLine {
    /// `H`-irrep index, or the irrep index for the normal and block routes.
    pub u: usize,
    /// `K`-irrep index; zero for the normal route, eigenvalue slot for blocks.
    pub v: usize,
    pub label: String,
    pub eigenvalue: Complex64,
    pub multiplicity: usize,
    /// Empty when eigenvectors were not requested.
    pub eigenvectors: Vec<Eigenvector>,
    pub class_terms: Vec<ClassTerm>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub n: usize,
    pub method: Method,
    pub lines: Vec<SpectralLine>,
    /// False when the split-extension formula ran with its hypotheses
    /// overridden; acceptance then rests on residual checks alone.
    pub verified_by_theorem: bool,
}

impl Spectrum {
    pub fn total_multiplicity(&self) -> usize {
        self.lines.iter().map(|l| l.multiplicity).sum()
    }

    pub fn has_eigenvectors(&self) -> bool {
        self.lines.iter().any(|l| !l.eigenvectors.is_empty())
    }

    /// Every eigenvalue repeated by multiplicity, in line order.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        self.lines
            .iter()
            .flat_map(|l| std::iter::repeat_n(l.eigenvalue, l.multiplicity))
            .collect()
    }

    /// `sum of lambda * multiplicity`
    pub fn trace(&self) -> Complex64 {
        self.lines
            .iter()
            .map(|l| l.eigenvalue * l.multiplicity as f64)
            .sum()
    }

    pub fn multiset(&self, radius: f64) -> Vec<(Complex64, usize)> {
        cluster_values(&self.eigenvalues(), radius)
    }

    pub fn find(&self, u: usize, v: usize) -> Option<&SpectralLine> {
        self.lines.iter().find(|l| l.u == u && l.v == v)
    }
}

pub(crate) fn cmp_complex(a: &Complex64, b: &Complex64) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Cluster assignment of `values`: points closer than `radius` are linked
/// and clusters are the connected components. Returns the cluster id of
/// every value plus the cluster representatives (member means), with ids
/// ordered by representative `(Re, Im)`.
pub(crate) fn cluster_ids(values: &[Complex64], radius: f64) -> (Vec<usize>, Vec<Complex64>) {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| values[a].re.total_cmp(&values[b].re));
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (pos, &a) in order.iter().enumerate() {
        for &b in &order[pos + 1..] {
            if values[b].re - values[a].re > radius {
                break;
            }
            if (values[b] - values[a]).norm() <= radius {
                let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                if ra != rb {
                    parent[ra] = rb;
                }
            }
        }
    }
    let mut root_members: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for x in 0..n {
        let r = find(&mut parent, x);
        root_members.entry(r).or_default().push(x);
    }
    let mut clusters: Vec<(Complex64, Vec<usize>)> = root_members
        .into_values()
        .map(|members| {
            let mean = members.iter().map(|&i| values[i]).sum::<Complex64>() / members.len() as f64;
            (mean, members)
        })
        .collect();
    clusters.sort_by(|a, b| cmp_complex(&a.0, &b.0));
    let mut ids = vec![0; n];
    let mut reps = Vec::with_capacity(clusters.len());
    for (id, (rep, members)) in clusters.into_iter().enumerate() {
        for i in members {
            ids[i] = id;
        }
        reps.push(rep);
    }
    (ids, reps)
}

/// Merged multiset `(value, count)` sorted by `(Re, Im)`.
pub fn cluster_values(values: &[Complex64], radius: f64) -> Vec<(Complex64, usize)> {
    let (ids, reps) = cluster_ids(values, radius);
    let mut counts = vec![0; reps.len()];
    for id in ids {
        counts[id] += 1;
    }
    reps.into_iter().zip(counts).collect()
}
