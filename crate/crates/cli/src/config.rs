//! Job configuration files.

use std::path::{Path, PathBuf};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use cayspec::cayley::{color_from_layers, ColorFunction};
use cayspec::group::{Complement, GroupElement, GroupKind, GroupSpec, PermutationSplit};
use cayspec::repr::{CMatrix, IrrepSet, UnitaryIrrep};
use cayspec::{construct_group, FiniteGroup};

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    pub group: GroupConfig,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub connection: Option<ConnectionConfig>,
    #[serde(default)]
    pub options: Options,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub irreps: Option<IrrepsConfig>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupConfig {
    Cyclic {
        n: usize,
    },
    Abelian {
        orders: Vec<usize>,
    },
    Dihedral {
        n: usize,
    },
    Metacyclic {
        m: usize,
        l: usize,
        r: usize,
    },
    Semidirect {
        m: usize,
        complement: ComplementConfig,
        action: Vec<usize>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        split: Option<SplitConfig>,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum ComplementConfig {
    Cyclic { order: usize },
    Abelian { orders: Vec<usize> },
    Dihedral { n: usize },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct SplitConfig {
    pub k_generators: Vec<Vec<usize>>,
    pub h_generators: Vec<Vec<usize>>,
}

/// An element is written `[a, b]` for `h_a k^b` in split groups and as the
/// image list of a permutation in permutation groups.
pub type ElementConfig = Vec<usize>;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum ConnectionConfig {
    Layers { layers: Vec<Vec<usize>> },
    Set { elements: Vec<ElementConfig> },
    Color { entries: Vec<ColorEntry> },
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct ColorEntry {
    pub element: ElementConfig,
    pub value: [f64; 2],
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum MethodChoice {
    #[default]
    Auto,
    Normal,
    Thm31,
    Cor33,
    Blocks,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Deserialize, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields, default)]
pub struct Options {
    pub eigenvectors: bool,
    pub verify: bool,
    pub tolerance: f64,
    pub format: Format,
    pub method: MethodChoice,
    pub override_hypotheses: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub export_graph: Option<PathBuf>,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            eigenvectors: false,
            verify: false,
            tolerance: cayspec::verify::DEFAULT_TOL,
            format: Format::Json,
            method: MethodChoice::Auto,
            override_hypotheses: false,
            export_graph: None,
        }
    }
}

/// User-supplied irreps: `group` indexed by canonical element order, `h` and
/// `k` by the local orders of the complement and the normal subgroup.
#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct IrrepsConfig {
    #[serde(default)]
    pub group: Option<Vec<IrrepConfig>>,
    #[serde(default)]
    pub h: Option<Vec<IrrepConfig>>,
    #[serde(default)]
    pub k: Option<Vec<IrrepConfig>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct IrrepConfig {
    pub label: String,
    pub degree: usize,
    /// One row-major matrix per element, entries `[re, im]`.
    pub matrices: Vec<Vec<Vec<[f64; 2]>>>,
}

pub fn load(path: &Path) -> Result<JobConfig, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|e| match e {
        CliError::Config(msg) => CliError::Config(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse(text: &str) -> Result<JobConfig, CliError> {
    let config: JobConfig =
        serde_json::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
    if !(config.options.tolerance > 0.0 && config.options.tolerance.is_finite()) {
        return Err(CliError::Config(format!(
            "options.tolerance: must be a positive number, got {}",
            config.options.tolerance
        )));
    }
    Ok(config)
}

impl GroupConfig {
    pub fn spec(&self) -> GroupSpec {
        match self {
            GroupConfig::Cyclic { n } => GroupSpec::Cyclic { n: *n },
            GroupConfig::Abelian { orders } => GroupSpec::Abelian {
                orders: orders.clone(),
            },
            GroupConfig::Dihedral { n } => GroupSpec::Dihedral { n: *n },
            GroupConfig::Metacyclic { m, l, r } => GroupSpec::Metacyclic {
                m: *m,
                l: *l,
                r: *r,
            },
            GroupConfig::Semidirect {
                m,
                complement,
                action,
            } => GroupSpec::Semidirect {
                m: *m,
                complement: match complement {
                    ComplementConfig::Cyclic { order } => Complement::Cyclic(*order),
                    ComplementConfig::Abelian { orders } => Complement::Abelian(orders.clone()),
                    ComplementConfig::Dihedral { n } => Complement::Dihedral(*n),
                },
                action: action.clone(),
            },
            GroupConfig::Permutation {
                degree,
                generators,
                split,
            } => GroupSpec::Permutation {
                degree: *degree,
                generators: generators.clone(),
                split: split.as_ref().map(|s| PermutationSplit {
                    k_generators: s.k_generators.clone(),
                    h_generators: s.h_generators.clone(),
                }),
            },
        }
    }

    pub fn build(&self) -> Result<FiniteGroup, CliError> {
        construct_group(&self.spec()).map_err(|e| CliError::Config(format!("group: {e}")))
    }
}

/// Canonical index of a configured element.
pub fn element_index(g: &FiniteGroup, element: &[usize], field: &str) -> Result<usize, CliError> {
    if let GroupKind::Permutation { .. } = g.kind() {
        return g
            .index_of(&GroupElement::Permutation(element.to_vec()))
            .map_err(|e| CliError::Config(format!("{field}: {e}")));
    }
    let split = g
        .split()
        .ok_or_else(|| CliError::Config(format!("{field}: group has no split structure")))?;
    match element {
        [a, b] if *a < split.l() && *b < split.m() => Ok(g.mul(split.h[*a], split.k[*b])),
        [a, b] => Err(CliError::Config(format!(
            "{field}: [{a}, {b}] out of range, expected a < {} and b < {}",
            split.l(),
            split.m()
        ))),
        _ => Err(CliError::Config(format!(
            "{field}: expected a pair [a, b] for h_a k^b, got {element:?}"
        ))),
    }
}

/// The color function of the configured connection.
pub fn color_function(
    g: &FiniteGroup,
    connection: &ConnectionConfig,
) -> Result<ColorFunction, CliError> {
    match connection {
        ConnectionConfig::Layers { layers } => {
            if !matches!(g.kind(), GroupKind::Metacyclic { .. }) {
                return Err(CliError::Config(
                    "connection.layers: layers mode requires a metacyclic group".into(),
                ));
            }
            color_from_layers(g, layers)
                .map_err(|e| CliError::Config(format!("connection.layers: {e}")))
        }
        ConnectionConfig::Set { elements } => {
            let mut set = Vec::with_capacity(elements.len());
            for (i, e) in elements.iter().enumerate() {
                set.push(element_index(g, e, &format!("connection.elements[{i}]"))?);
            }
            Ok(ColorFunction::from_set(g, &set))
        }
        ConnectionConfig::Color { entries } => {
            let mut alpha = ColorFunction::zero(g.order());
            for (i, entry) in entries.iter().enumerate() {
                let x = element_index(
                    g,
                    &entry.element,
                    &format!("connection.entries[{i}].element"),
                )?;
                alpha.set(x, Complex64::new(entry.value[0], entry.value[1]));
            }
            Ok(alpha)
        }
    }
}

pub fn irrep_set(order: usize, irreps: &[IrrepConfig], field: &str) -> Result<IrrepSet, CliError> {
    let mut out = Vec::with_capacity(irreps.len());
    for (u, irrep) in irreps.iter().enumerate() {
        let d = irrep.degree;
        let mut matrices = Vec::with_capacity(irrep.matrices.len());
        for (x, rows) in irrep.matrices.iter().enumerate() {
            if rows.len() != d || rows.iter().any(|r| r.len() != d) {
                return Err(CliError::Config(format!(
                    "{field}[{u}].matrices[{x}]: expected a {d}x{d} matrix"
                )));
            }
            matrices.push(CMatrix::from_fn(d, d, |i, j| {
                Complex64::new(rows[i][j][0], rows[i][j][1])
            }));
        }
        out.push(UnitaryIrrep::new(irrep.label.clone(), d, matrices));
    }
    Ok(IrrepSet::new(order, out))
}
