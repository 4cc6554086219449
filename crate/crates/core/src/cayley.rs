//! Cayley color graphs: color functions, connection sets, adjacency
//! matrices in the transversal ordering and their block decomposition.
//!
//! Direction convention: the entry in row `g`, column `g'` is
//! `alpha(g' g^-1)`, so edges point from row to column.

use std::fmt::Write as _;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::numfmt::format_sig;
use crate::repr::CMatrix;

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// A complex-valued function on the group, stored by canonical index.
#[derive(Clone, Debug, PartialEq)]
pub struct ColorFunction {
    values: Vec<Complex64>,
}

impl ColorFunction {
    pub fn zero(n: usize) -> Self {
        ColorFunction {
            values: vec![ZERO; n],
        }
    }

    pub fn from_values(values: Vec<Complex64>) -> Self {
        ColorFunction { values }
    }

    /// Indicator function of `set` (canonical indices).
    pub fn from_set(g: &FiniteGroup, set: &[usize]) -> Self {
        let mut f = ColorFunction::zero(g.order());
        for &x in set {
            f.values[x] = ONE;
        }
        f
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn value(&self, g: usize) -> Complex64 {
        self.values[g]
    }

    pub fn set(&mut self, g: usize, value: Complex64) {
        self.values[g] = value;
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.values.len())
            .filter(|&g| self.values[g] != ZERO)
            .collect()
    }

    pub fn is_real(&self) -> bool {
        self.values.iter().all(|z| z.im == 0.0)
    }

    pub fn vanishes_at_identity(&self) -> bool {
        self.values[0] == ZERO
    }

    /// `alpha(g) = conj(alpha(g^-1))` for every `g`.
    pub fn is_symmetric(&self, g: &FiniteGroup) -> bool {
        (0..g.order()).all(|x| self.values[x] == self.values[g.inv(x)].conj())
    }

    /// Exact check of conjugation invariance. On failure returns the first
    /// `(element, conjugator)` pair with `alpha(c x c^-1) != alpha(x)`.
    pub fn class_function_witness(&self, g: &FiniteGroup) -> Option<(usize, usize)> {
        for x in 0..g.order() {
            for &c in g.generators() {
                if self.values[g.conj(c, x)] != self.values[x] {
                    return Some((x, c));
                }
            }
        }
        None
    }

    pub fn is_class_function(&self, g: &FiniteGroup) -> bool {
        self.class_function_witness(g).is_none()
    }

    pub fn require_class_function(&self, g: &FiniteGroup) -> Result<()> {
        match self.class_function_witness(g) {
            None => Ok(()),
            Some((element, conjugator)) => Err(Error::NotClassFunction {
                element,
                conjugator,
                conjugate: g.conj(conjugator, element),
            }),
        }
    }
}

pub fn color_from_set(g: &FiniteGroup, set: &[usize]) -> ColorFunction {
    ColorFunction::from_set(g, set)
}

/// Indicator of `S_0 u h S_1 u .. u h^(l-1) S_(l-1)` for a split group,
/// with layer `t` listing exponents `s` of `k^s`.
pub fn color_from_layers(g: &FiniteGroup, layers: &[Vec<usize>]) -> Result<ColorFunction> {
    let split = g.split().ok_or(Error::NoSplitStructure)?;
    if layers.len() != split.l() {
        return Err(Error::DimensionMismatch {
            expected: split.l(),
            found: layers.len(),
        });
    }
    let mut f = ColorFunction::zero(g.order());
    for (t, layer) in layers.iter().enumerate() {
        for &s in layer {
            if s >= split.m() {
                return Err(Error::InvalidParameters(format!(
                    "layer {t} exponent {s} is not reduced modulo {}",
                    split.m()
                )));
            }
            f.values[g.mul(split.h[t], split.k[s])] = ONE;
        }
    }
    Ok(f)
}

/// Witness that a connection set is not closed under conjugation:
/// `conjugator * element * conjugator^-1 = conjugate` lies outside `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConjugationWitness {
    pub conjugator: usize,
    pub element: usize,
    pub conjugate: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionSet {
    /// Sorted canonical indices.
    pub elements: Vec<usize>,
    pub inverse_closed: bool,
    /// An element whose inverse is missing.
    pub inverse_witness: Option<usize>,
    pub contains_identity: bool,
    pub generates: bool,
    pub closure_size: usize,
    pub conjugation_closed: bool,
    /// Every conjugator that moves the first offending element out of `S`.
    pub conjugation_witnesses: Vec<ConjugationWitness>,
}

impl ConnectionSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn color(&self, g: &FiniteGroup) -> ColorFunction {
        ColorFunction::from_set(g, &self.elements)
    }
}

pub fn classify_connection_set(g: &FiniteGroup, set: &[usize]) -> ConnectionSet {
    let mut elements = set.to_vec();
    elements.sort_unstable();
    elements.dedup();
    let mut member = vec![false; g.order()];
    for &x in &elements {
        member[x] = true;
    }
    let inverse_witness = elements.iter().copied().find(|&x| !member[g.inv(x)]);
    let generation = g.is_generating_set(&elements);
    let mut conjugation_witnesses = Vec::new();
    for &x in &elements {
        for c in 0..g.order() {
            let y = g.conj(c, x);
            if !member[y] {
                conjugation_witnesses.push(ConjugationWitness {
                    conjugator: c,
                    element: x,
                    conjugate: y,
                });
            }
        }
        if !conjugation_witnesses.is_empty() {
            break;
        }
    }
    ConnectionSet {
        inverse_closed: inverse_witness.is_none(),
        inverse_witness,
        contains_identity: member[0],
        generates: generation.generates,
        closure_size: generation.closure_size,
        conjugation_closed: conjugation_witnesses.is_empty(),
        conjugation_witnesses,
        elements,
    }
}

/// Dense adjacency matrix together with the vertex ordering it uses.
#[derive(Clone, Debug)]
pub struct AdjacencyMatrix {
    pub matrix: CMatrix,
    /// Group index at each vertex.
    pub ordering: Vec<usize>,
}

impl AdjacencyMatrix {
    pub fn n(&self) -> usize {
        self.matrix.nrows()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        self.matrix
            .row_iter()
            .map(|row| row.iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self) -> bool {
        let n = self.n();
        (0..n).all(|i| (0..n).all(|j| self.matrix[(i, j)] == self.matrix[(j, i)].conj()))
    }

    pub fn apply(&self, x: &[Complex64]) -> Vec<Complex64> {
        let n = self.n();
        (0..n)
            .map(|i| (0..n).map(|j| self.matrix[(i, j)] * x[j]).sum())
            .collect()
    }
}

/// Builds `adj(Gamma(G; alpha))` with entry `(i, j) = alpha(v_j v_i^-1)`.
pub fn adjacency_matrix(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    ordering: &[usize],
) -> AdjacencyMatrix {
    let n = ordering.len();
    let mut matrix = CMatrix::zeros(n, n);
    for (i, &vi) in ordering.iter().enumerate() {
        let vi_inv = g.inv(vi);
        for (j, &vj) in ordering.iter().enumerate() {
            matrix[(i, j)] = alpha.value(g.mul(vj, vi_inv));
        }
    }
    AdjacencyMatrix {
        matrix,
        ordering: ordering.to_vec(),
    }
}

/// Adjacency matrix in the group's default vertex ordering.
pub fn adjacency_in_vertex_order(g: &FiniteGroup, alpha: &ColorFunction) -> AdjacencyMatrix {
    adjacency_matrix(g, alpha, &g.vertex_ordering())
}

/// `l x l` grid of `m x m` blocks; block `(i, j)` is the adjacency matrix of
/// `Gamma(K; beta_ij)` with `beta_ij(k) = alpha(h_j k h_i^-1)`.
#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub m: usize,
    pub l: usize,
    /// `beta[i * l + j][b]` is `beta_ij(k_b)`.
    beta: Vec<Vec<Complex64>>,
    /// Row-major grid of blocks.
    blocks: Vec<CMatrix>,
}

impl BlockDecomposition {
    pub fn beta(&self, i: usize, j: usize) -> &[Complex64] {
        &self.beta[i * self.l + j]
    }

    /// `beta_1t`, the functions of the first block row.
    pub fn beta_first_row(&self, t: usize) -> &[Complex64] {
        self.beta(0, t)
    }

    pub fn block(&self, i: usize, j: usize) -> &CMatrix {
        &self.blocks[i * self.l + j]
    }

    pub fn reassemble(&self) -> CMatrix {
        let n = self.m * self.l;
        let mut out = CMatrix::zeros(n, n);
        for i in 0..self.l {
            for j in 0..self.l {
                out.view_mut((i * self.m, j * self.m), (self.m, self.m))
                    .copy_from(self.block(i, j));
            }
        }
        out
    }
}

pub fn beta_blocks(g: &FiniteGroup, alpha: &ColorFunction) -> Result<BlockDecomposition> {
    let split = g.split().ok_or(Error::NoSplitStructure)?;
    let (m, l) = (split.m(), split.l());
    // k_b' k_b^-1 as a K-local index
    let k_quot: Vec<Vec<usize>> = (0..m)
        .map(|b| {
            let kb_inv = g.inv(split.k[b]);
            (0..m)
                .map(|bp| {
                    split
                        .k_position(g.mul(split.k[bp], kb_inv))
                        .expect("K is a subgroup")
                })
                .collect()
        })
        .collect();
    let mut beta = Vec::with_capacity(l * l);
    let mut blocks = Vec::with_capacity(l * l);
    for i in 0..l {
        let hi_inv = g.inv(split.h[i]);
        for j in 0..l {
            let values: Vec<Complex64> = split
                .k
                .iter()
                .map(|&k| alpha.value(g.mul(g.mul(split.h[j], k), hi_inv)))
                .collect();
            let mut block = CMatrix::zeros(m, m);
            for b in 0..m {
                for bp in 0..m {
                    block[(b, bp)] = values[k_quot[b][bp]];
                }
            }
            beta.push(values);
            blocks.push(block);
        }
    }
    Ok(BlockDecomposition { m, l, beta, blocks })
}

/// The non-normal family `S = (C_m \ {e}) u {h} u {h^-1}` on the split
/// metacyclic group `C_m x| C_l` with `h k h^-1 = k^r`, `1 < r < m`.
#[derive(Clone, Debug)]
pub struct NonNormalFamily {
    pub group: FiniteGroup,
    pub connection: ConnectionSet,
    /// Layer `t` lists the exponents `s` with `h^t k^s` in `S`.
    pub layers: Vec<Vec<usize>>,
}

pub fn family_remark34(m: usize, l: usize, r: usize) -> Result<NonNormalFamily> {
    if !(1 < r && r < m) {
        return Err(Error::InvalidParameters(format!(
            "family requires 1 < r < m, got r = {r}, m = {m}"
        )));
    }
    let group = FiniteGroup::metacyclic(m, l, r)?;
    let mut layers = vec![Vec::new(); l];
    layers[0] = (1..m).collect();
    layers[1].push(0);
    if layers[l - 1].is_empty() {
        layers[l - 1].push(0);
    }
    let mut set: Vec<usize> = (1..m).collect();
    set.push(m);
    set.push((l - 1) * m);
    let connection = classify_connection_set(&group, &set);
    Ok(NonNormalFamily {
        group,
        connection,
        layers,
    })
}

/// Edge list with one `i j re im` line per nonzero entry, preceded by a
/// header documenting the vertex ordering.
pub fn export_edge_list(adj: &AdjacencyMatrix, m: Option<usize>) -> String {
    let mut out = String::new();
    match m {
        Some(_) => out.push_str("# vertex v = h^(v div m) k^(v mod m)\n"),
        None => out.push_str("# vertex v = element v in canonical order\n"),
    }
    let n = adj.n();
    match m {
        Some(m) => writeln!(out, "# n {n} m {m}").unwrap(),
        None => writeln!(out, "# n {n}").unwrap(),
    }
    for i in 0..n {
        for j in 0..n {
            let z = adj.matrix[(i, j)];
            if z != ZERO {
                writeln!(out, "{i} {j} {} {}", format_sig(z.re), format_sig(z.im)).unwrap();
            }
        }
    }
    out
}

/// Parses an edge list written by [`export_edge_list`]. The dimension comes
/// from the `# n` header line when present, else from `n`.
pub fn parse_edge_list(text: &str, n: Option<usize>) -> Result<CMatrix> {
    let mut dim = n;
    let mut entries = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('#') {
            let mut words = rest.split_whitespace();
            if words.next() == Some("n") {
                if let Some(Ok(v)) = words.next().map(str::parse::<usize>) {
                    dim.get_or_insert(v);
                }
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::InvalidParameters(format!("edge list line {}: `{line}`", lineno + 1));
        if fields.len() != 4 {
            return Err(bad());
        }
        let i: usize = fields[0].parse().map_err(|_| bad())?;
        let j: usize = fields[1].parse().map_err(|_| bad())?;
        let re: f64 = fields[2].parse().map_err(|_| bad())?;
        let im: f64 = fields[3].parse().map_err(|_| bad())?;
        entries.push((i, j, Complex64::new(re, im)));
    }
    let dim = dim.unwrap_or_else(|| {
        entries
            .iter()
            .map(|&(i, j, _)| i.max(j) + 1)
            .max()
            .unwrap_or(0)
    });
    let mut matrix = CMatrix::zeros(dim, dim);
    for (i, j, z) in entries {
        if i >= dim || j >= dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: i.max(j) + 1,
            });
        }
        matrix[(i, j)] = z;
    }
    Ok(matrix)
}
