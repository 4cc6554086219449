//! Permutation groups given by generators, enumerated by closure.

use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};

/// Composition `(p * q)(x) = p(q(x))`: `q` acts first.
pub fn compose(p: &[usize], q: &[usize]) -> Vec<usize> {
    q.iter().map(|&x| p[x]).collect()
}

pub fn invert(p: &[usize]) -> Vec<usize> {
    let mut out = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        out[x] = i;
    }
    out
}

pub fn is_permutation(p: &[usize], degree: usize) -> bool {
    if p.len() != degree {
        return false;
    }
    let mut seen = vec![false; degree];
    for &x in p {
        if x >= degree || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

#[derive(Clone, Debug)]
pub(crate) struct PermutationGroup {
    /// All elements, sorted lexicographically by image sequence (identity first).
    pub elements: Vec<Vec<usize>>,
    lookup: HashMap<Vec<usize>, usize>,
    pub generators: Vec<usize>,
}

impl PermutationGroup {
    pub fn generate(degree: usize, generators: &[Vec<usize>], cap: usize) -> Result<Self> {
        for (i, g) in generators.iter().enumerate() {
            if !is_permutation(g, degree) {
                return Err(Error::InvalidParameters(format!(
                    "generator {i} is not a permutation of 0..{degree}"
                )));
            }
        }
        let identity: Vec<usize> = (0..degree).collect();
        let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for g in generators {
                let y = compose(&x, g);
                if !seen.contains_key(&y) {
                    if seen.len() >= cap {
                        return Err(Error::CapacityExceeded {
                            requested: seen.len() + 1,
                            cap,
                        });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Vec<usize>> = seen.into_keys().collect();
        elements.sort();
        let lookup: HashMap<Vec<usize>, usize> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let generators = generators.iter().map(|g| lookup[g]).collect();
        Ok(PermutationGroup {
            elements,
            lookup,
            generators,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_of(&self, p: &[usize]) -> Option<usize> {
        self.lookup.get(p).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.lookup[&compose(&self.elements[a], &self.elements[b])]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.lookup[&invert(&self.elements[a])]
    }
}
