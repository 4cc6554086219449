use std::path::{Path, PathBuf};

use serde::Serialize;

use cayspec::cayley::{
    adjacency_in_vertex_order, classify_connection_set, export_edge_list, family_remark34,
    parse_edge_list, ColorFunction,
};
use cayspec::group::GroupKind;
use cayspec::repr::{builtin_irreps, split_irreps, validate_irrep_set, IrrepSet};
use cayspec::spectra::{
    check_thm31_hypotheses, spectrum_blocks, spectrum_cor33, spectrum_normal, spectrum_thm31,
    Method, Spectrum, Thm31Options,
};
use cayspec::verify::{verify_against_matrix, verify_spectrum};
use cayspec::{Error, FiniteGroup};

use crate::config::{
    self, ConnectionConfig, Format, GroupConfig, JobConfig, MethodChoice, Options,
};
use crate::error::{CliError, EXIT_HYPOTHESES, EXIT_VERIFICATION};
use crate::output::{self, HypothesisOut, SpectrumOut, VerificationOut};

/// Flags shared by the spectrum-producing commands; each overrides the
/// matching config option when given.
#[derive(Clone, Debug, Default, clap::Args)]
pub struct RunFlags {
    /// Job configuration file (JSON).
    #[arg(long)]
    pub config: PathBuf,
    /// Spectral route; `auto` picks one from the group and connection.
    #[arg(long, value_enum)]
    pub method: Option<MethodChoice>,
    /// Certify the spectrum against the adjacency matrix.
    #[arg(long)]
    pub verify: bool,
    /// Include eigenvectors in the output.
    #[arg(long)]
    pub eigenvectors: bool,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Relative tolerance for verification.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Write the result here instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Run the split-extension formula even when its hypotheses fail.
    #[arg(long)]
    pub override_hypotheses: bool,
    /// Re-evaluate class sums with every class member.
    #[arg(long)]
    pub cross_check: bool,
}

/// `(m, l, r, layers)` of a metacyclic connection.
type MetacyclicLayers = (usize, usize, usize, Vec<Vec<usize>>);

struct Job {
    config: JobConfig,
    options: Options,
    group: FiniteGroup,
    alpha: Option<ColorFunction>,
    cross_check: bool,
}

impl Job {
    fn load(flags: &RunFlags) -> Result<Job, CliError> {
        let config = config::load(&flags.config)?;
        let mut options = config.options.clone();
        if let Some(m) = flags.method {
            options.method = m;
        }
        options.verify |= flags.verify;
        options.eigenvectors |= flags.eigenvectors;
        options.override_hypotheses |= flags.override_hypotheses;
        if let Some(f) = flags.format {
            options.format = f;
        }
        if let Some(t) = flags.tol {
            if !(t > 0.0 && t.is_finite()) {
                return Err(CliError::Config(format!("--tol must be positive, got {t}")));
            }
            options.tolerance = t;
        }
        let group = config.group.build()?;
        let alpha = match &config.connection {
            Some(c) => Some(config::color_function(&group, c)?),
            None => None,
        };
        Ok(Job {
            config,
            options,
            group,
            alpha,
            cross_check: flags.cross_check,
        })
    }

    fn alpha(&self) -> Result<&ColorFunction, CliError> {
        self.alpha
            .as_ref()
            .ok_or_else(|| CliError::Config("connection: required for this command".into()))
    }

    fn group_irreps(&self) -> Result<Option<IrrepSet>, CliError> {
        if let Some(list) = self.config.irreps.as_ref().and_then(|i| i.group.as_ref()) {
            let set = config::irrep_set(self.group.order(), list, "irreps.group")?;
            let report = validate_irrep_set(&self.group, &set);
            if !report.passed() {
                return Err(CliError::Config(format!("irreps.group: {report}")));
            }
            return Ok(Some(set));
        }
        Ok(builtin_irreps(&self.group))
    }

    fn split_irreps(&self) -> Result<Option<(IrrepSet, IrrepSet)>, CliError> {
        let given = self.config.irreps.as_ref();
        let user_h = given.and_then(|i| i.h.as_ref());
        let user_k = given.and_then(|i| i.k.as_ref());
        let Some(split) = self.group.split() else {
            return Ok(None);
        };
        let builtin = split_irreps(&self.group);
        let h = match (user_h, &builtin) {
            (Some(list), _) => config::irrep_set(split.l(), list, "irreps.h")?,
            (None, Some((h, _))) => h.clone(),
            (None, None) => return Ok(None),
        };
        let k = match (user_k, &builtin) {
            (Some(list), _) => config::irrep_set(split.m(), list, "irreps.k")?,
            (None, Some((_, k))) => k.clone(),
            (None, None) => return Ok(None),
        };
        Ok(Some((h, k)))
    }

    /// Layers of a 0/1 color function on a metacyclic group.
    fn layers(&self) -> Result<MetacyclicLayers, CliError> {
        let GroupKind::Metacyclic { m, l, r } = *self.group.kind() else {
            return Err(CliError::Config("cor33 requires a metacyclic group".into()));
        };
        if let Some(ConnectionConfig::Layers { layers }) = &self.config.connection {
            return Ok((m, l, r, layers.clone()));
        }
        let alpha = self.alpha()?;
        let one = num_complex::Complex64::new(1.0, 0.0);
        let zero = num_complex::Complex64::new(0.0, 0.0);
        if alpha.values().iter().any(|&z| z != one && z != zero) {
            return Err(CliError::Config(
                "cor33 requires a 0/1 connection set".into(),
            ));
        }
        let mut layers = vec![Vec::new(); l];
        for x in alpha.support() {
            layers[x / m].push(x % m);
        }
        Ok((m, l, r, layers))
    }

    fn thm31_options(&self, eigenvectors: bool) -> Thm31Options {
        Thm31Options {
            override_hypotheses: self.options.override_hypotheses,
            cross_check_representatives: self.cross_check,
            eigenvectors,
        }
    }

    fn choose(&self) -> Result<Method, CliError> {
        let chosen = match self.options.method {
            MethodChoice::Normal => Method::Normal,
            MethodChoice::Thm31 => Method::Thm31,
            MethodChoice::Cor33 => Method::Cor33,
            MethodChoice::Blocks => Method::Blocks,
            MethodChoice::Auto => return self.auto_method(),
        };
        Ok(chosen)
    }

    /// Layers on a metacyclic group go to the exponential sums; a split
    /// group with a nontrivial complement goes to the split-extension
    /// formula when its hypotheses hold; class functions go to the
    /// character formula; the block route covers degrees up to 2.
    fn auto_method(&self) -> Result<Method, CliError> {
        if matches!(
            self.config.connection,
            Some(ConnectionConfig::Layers { .. })
        ) {
            return Ok(Method::Cor33);
        }
        let alpha = self.alpha()?;
        let hypotheses = match self.group.split() {
            Some(_) => Some(check_thm31_hypotheses(&self.group, alpha)?),
            None => None,
        };
        let thm31_ok =
            hypotheses.as_ref().is_some_and(|r| r.passed()) && self.split_irreps()?.is_some();
        let nontrivial_h = self.group.split().is_some_and(|s| s.l() > 1);
        if thm31_ok && nontrivial_h {
            return Ok(Method::Thm31);
        }
        let irreps = self.group_irreps()?;
        if irreps.is_some() && alpha.is_class_function(&self.group) {
            return Ok(Method::Normal);
        }
        if thm31_ok {
            return Ok(Method::Thm31);
        }
        if irreps.as_ref().is_some_and(|s| s.max_degree() <= 2) {
            return Ok(Method::Blocks);
        }
        match hypotheses {
            Some(report) if !report.passed() => {
                Err(Error::HypothesesViolated(Box::new(report)).into())
            }
            _ => Err(CliError::NoMethod(
                "connection is not a class function and no split-extension irreps are available"
                    .into(),
            )),
        }
    }

    fn spectrum(&self, method: Method, eigenvectors: bool) -> Result<Spectrum, CliError> {
        let g = &self.group;
        let no_irreps = || CliError::Core(Error::NoIrreps(format!("{} group", g.kind().name())));
        let s = match method {
            Method::Cor33 => {
                let (m, l, r, layers) = self.layers()?;
                spectrum_cor33(m, l, r, &layers, eigenvectors)?
            }
            Method::Normal => {
                let irreps = self.group_irreps()?.ok_or_else(no_irreps)?;
                spectrum_normal(g, self.alpha()?, &irreps, eigenvectors)?
            }
            Method::Thm31 => {
                if g.split().is_none() {
                    return Err(Error::NoSplitStructure.into());
                }
                if !self.options.override_hypotheses {
                    let report = check_thm31_hypotheses(g, self.alpha()?)?;
                    if !report.passed() {
                        return Err(Error::HypothesesViolated(Box::new(report)).into());
                    }
                }
                let (ih, ik) = self.split_irreps()?.ok_or_else(no_irreps)?;
                spectrum_thm31(g, self.alpha()?, &ih, &ik, self.thm31_options(eigenvectors))?
            }
            Method::Blocks => {
                let irreps = self.group_irreps()?.ok_or_else(no_irreps)?;
                spectrum_blocks(g, self.alpha()?, &irreps, eigenvectors)?
            }
        };
        Ok(s)
    }
}

fn emit(text: &str, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Computes, optionally verifies and writes a spectrum. Returns the exit code.
pub fn spectrum(
    flags: &RunFlags,
    force_verify: bool,
    edges: Option<&Path>,
) -> Result<u8, CliError> {
    let mut job = Job::load(flags)?;
    job.options.verify |= force_verify;
    let method = job.choose()?;
    let need_vectors = job.options.eigenvectors || job.options.verify;
    let s = job.spectrum(method, need_vectors)?;
    if !s.verified_by_theorem {
        eprintln!("note: hypotheses overridden; result is unverified-by-theorem");
    }
    let tol = job.options.tolerance;
    let report = if job.options.verify {
        Some(match edges {
            Some(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
                let matrix = parse_edge_list(&text, None)?;
                verify_against_matrix(&matrix, &s, tol)?
            }
            None => verify_spectrum(&job.group, job.alpha()?, &s, tol)?,
        })
    } else {
        None
    };
    if let Some(path) = &job.options.export_graph {
        write_edges(&job.group, job.alpha()?, Some(path))?;
    }
    let text = match job.options.format {
        Format::Json => output::to_json(&SpectrumOut::new(
            Some(&job.group),
            &s,
            job.options.eigenvectors,
            report.as_ref().map(|r| VerificationOut::new(r, tol)),
        )),
        Format::Csv => output::csv(&s),
    };
    emit(&text, flags.output.as_deref())?;
    match report {
        Some(r) if !r.passed => {
            eprintln!("verification failed:\n{r}");
            Ok(EXIT_VERIFICATION)
        }
        _ => Ok(0),
    }
}

pub fn check_hypotheses(config: &Path, output: Option<&Path>) -> Result<u8, CliError> {
    let job = Job::load(&RunFlags {
        config: config.to_path_buf(),
        ..Default::default()
    })?;
    let report = check_thm31_hypotheses(&job.group, job.alpha()?)?;
    emit(
        &output::to_json(&HypothesisOut::new(&job.group, &report)),
        output,
    )?;
    if report.passed() {
        Ok(0)
    } else {
        eprintln!("{report}");
        Ok(EXIT_HYPOTHESES)
    }
}

#[derive(Serialize)]
struct ClassOut {
    representative: String,
    size: usize,
}

#[derive(Serialize)]
struct SplitOut {
    m: usize,
    l: usize,
}

#[derive(Serialize)]
struct GroupOut {
    #[serde(rename = "type")]
    kind: String,
    order: usize,
    generators: Vec<String>,
    split: Option<SplitOut>,
    classes: Vec<ClassOut>,
    irrep_degrees: Option<Vec<usize>>,
}

#[derive(Serialize)]
struct ConjugationWitnessOut {
    conjugator: String,
    element: String,
    conjugate: String,
}

#[derive(Serialize)]
struct ConnectionOut {
    support_size: usize,
    class_function: bool,
    symmetric: bool,
    contains_identity: bool,
    inverse_closed: bool,
    generates: bool,
    closure_size: usize,
    conjugation_closed: bool,
    conjugation_witnesses: Vec<ConjugationWitnessOut>,
}

#[derive(Serialize)]
struct DescribeOut {
    group: GroupOut,
    connection: Option<ConnectionOut>,
}

pub fn describe(config: &Path, output: Option<&Path>) -> Result<u8, CliError> {
    let job = Job::load(&RunFlags {
        config: config.to_path_buf(),
        ..Default::default()
    })?;
    let g = &job.group;
    let group = GroupOut {
        kind: g.kind().name().to_string(),
        order: g.order(),
        generators: g.generators().iter().map(|&x| g.label(x)).collect(),
        split: g.split().map(|s| SplitOut { m: s.m(), l: s.l() }),
        classes: g
            .conjugacy_classes()
            .iter()
            .map(|c| ClassOut {
                representative: g.label(c.representative),
                size: c.size(),
            })
            .collect(),
        irrep_degrees: job.group_irreps()?.map(|s| s.degrees()),
    };
    let connection = job.alpha.as_ref().map(|alpha| {
        let set = classify_connection_set(g, &alpha.support());
        ConnectionOut {
            support_size: set.len(),
            class_function: alpha.is_class_function(g),
            symmetric: alpha.is_symmetric(g),
            contains_identity: set.contains_identity,
            inverse_closed: set.inverse_closed,
            generates: set.generates,
            closure_size: set.closure_size,
            conjugation_closed: set.conjugation_closed,
            conjugation_witnesses: set
                .conjugation_witnesses
                .iter()
                .map(|w| ConjugationWitnessOut {
                    conjugator: g.label(w.conjugator),
                    element: g.label(w.element),
                    conjugate: g.label(w.conjugate),
                })
                .collect(),
        }
    });
    emit(&output::to_json(&DescribeOut { group, connection }), output)?;
    Ok(0)
}

pub fn family(m: usize, l: usize, r: usize, output: Option<&Path>) -> Result<u8, CliError> {
    let fam = family_remark34(m, l, r).map_err(|e| CliError::Config(format!("family: {e}")))?;
    let config = JobConfig {
        group: GroupConfig::Metacyclic { m, l, r },
        connection: Some(ConnectionConfig::Layers { layers: fam.layers }),
        options: Options::default(),
        irreps: None,
    };
    emit(&output::to_json(&config), output)?;
    Ok(0)
}

fn write_edges(
    g: &FiniteGroup,
    alpha: &ColorFunction,
    output: Option<&Path>,
) -> Result<(), CliError> {
    let adj = adjacency_in_vertex_order(g, alpha);
    let text = export_edge_list(&adj, g.split().map(|s| s.m()));
    emit(&text, output)
}

pub fn export_graph(config: &Path, output: Option<&Path>) -> Result<u8, CliError> {
    let job = Job::load(&RunFlags {
        config: config.to_path_buf(),
        ..Default::default()
    })?;
    write_edges(&job.group, job.alpha()?, output)?;
    Ok(0)
}
