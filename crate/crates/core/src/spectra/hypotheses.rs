use num_complex::Complex64;

use crate::cayley::ColorFunction;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;

/// Failure of `alpha(h g k g^-1) = alpha(h k)`. All fields except the values
/// are group indices.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessA {
    pub h: usize,
    pub g: usize,
    pub k: usize,
    /// `alpha(h g k g^-1)`
    pub lhs: Complex64,
    /// `alpha(h k)`
    pub rhs: Complex64,
}

/// Failure of `alpha(h' h h'^-1 k) = alpha(h k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessB {
    pub h_prime: usize,
    pub h: usize,
    pub k: usize,
    /// `alpha(h' h h'^-1 k)`
    pub lhs: Complex64,
    /// `alpha(h k)`
    pub rhs: Complex64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HypothesisReport {
    pub condition_a: bool,
    pub condition_b: bool,
    pub witness_a: Option<WitnessA>,
    pub witness_b: Option<WitnessB>,
}

impl HypothesisReport {
    pub fn passed(&self) -> bool {
        self.condition_a && self.condition_b
    }
}

impl std::fmt::Display for HypothesisReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.passed() {
            return write!(f, "conditions A and B hold");
        }
        let mut parts = Vec::new();
        if let Some(w) = &self.witness_a {
            parts.push(format!(
                "condition A fails at (h={}, g={}, k={}): {} != {}",
                w.h, w.g, w.k, w.lhs, w.rhs
            ));
        }
        if let Some(w) = &self.witness_b {
            parts.push(format!(
                "condition B fails at (h'={}, h={}, k={}): {} != {}",
                w.h_prime, w.h, w.k, w.lhs, w.rhs
            ));
        }
        write!(f, "{}", parts.join("; "))
    }
}

/// Exhaustive check of the two invariance conditions on a split group
/// `K x| H`:
///
/// * A: `alpha(h g k g^-1) = alpha(h k)` for all `h in H, g in G, k in K`,
///   evaluated as constancy of `alpha(h .)` on the `G`-conjugation orbits
///   of `K`;
/// * B: `alpha(h' h h'^-1 k) = alpha(h k)` for all `h', h in H, k in K`,
///   evaluated as constancy of `alpha(. k)` on the conjugacy classes of `H`.
///
/// Values are compared exactly. The first failure of each condition is
/// recorded with a witness that reproduces it by direct evaluation.
pub fn check_thm31_hypotheses(g: &FiniteGroup, alpha: &ColorFunction) -> Result<HypothesisReport> {
    let split = g.split().ok_or(Error::NoSplitStructure)?;
    let orbits = g.conjugation_orbits_on_k()?;

    let mut witness_a = None;
    'a: for &h in &split.h {
        for orbit in &orbits {
            let k0 = orbit[0];
            let base = alpha.value(g.mul(h, k0));
            for &k1 in &orbit[1..] {
                let value = alpha.value(g.mul(h, k1));
                if value != base {
                    let conjugator = (0..g.order())
                        .find(|&c| g.conj(c, k0) == k1)
                        .expect("orbit members are conjugate");
                    witness_a = Some(WitnessA {
                        h,
                        g: conjugator,
                        k: k0,
                        lhs: value,
                        rhs: base,
                    });
                    break 'a;
                }
            }
        }
    }

    let mut witness_b = None;
    let classes = g.complement_classes()?;
    'b: for class in &classes {
        let h0 = split.h[class.representative];
        for &member in &class.members[1..] {
            let h1 = split.h[member];
            for &k in &split.k {
                let base = alpha.value(g.mul(h0, k));
                let value = alpha.value(g.mul(h1, k));
                if value != base {
                    let h_prime = split
                        .h
                        .iter()
                        .copied()
                        .find(|&c| g.conj(c, h0) == h1)
                        .expect("class members are conjugate in H");
                    witness_b = Some(WitnessB {
                        h_prime,
                        h: h0,
                        k,
                        lhs: value,
                        rhs: base,
                    });
                    break 'b;
                }
            }
        }
    }

    Ok(HypothesisReport {
        condition_a: witness_a.is_none(),
        condition_b: witness_b.is_none(),
        witness_a,
        witness_b,
    })
}
