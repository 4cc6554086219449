//! Finite groups as structured objects.
//!
//! Every group except a bare permutation group is stored as a split extension
//! `G = K x| H` with `K = C_m` cyclic and `H` a [`Complement`]. The element
//! `h_a k^b` has canonical index `a*m + b`, where `a` is the local index of
//! `h_a` in `H`. That index doubles as the vertex ordering
//! `e, k, .., k^(m-1); h_1, h_1 k, ..` used by the block decomposition, so
//! graph vertices, eigenvector entries and element indices all line up.
//!
//! Permutation groups are enumerated by closure and sorted lexicographically;
//! they may carry an explicit split given by generators of `K` and `H`.

mod complement;
mod permutation;

use std::collections::VecDeque;
use std::fmt;

pub use complement::{gcd, pow_mod, Complement};
pub use permutation::{compose, invert, is_permutation};

use crate::error::{Error, Result};
use complement::{decode_mixed, encode_mixed};
use permutation::PermutationGroup;

/// Default upper bound on the group order.
pub const DEFAULT_CAPACITY: usize = 10_000;

/// An element in canonical normal form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupElement {
    /// `k^b` in `C_n`.
    Cyclic(usize),
    /// Exponent vector in a product of cyclic groups.
    Abelian(Vec<usize>),
    /// `s^f rho^j`.
    Dihedral { reflection: bool, rotation: usize },
    /// `h_a k^b` in a metacyclic or semidirect group.
    Pair { h: usize, k: usize },
    /// Image sequence on `0..degree`.
    Permutation(Vec<usize>),
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Cyclic(b) => write!(f, "k^{b}"),
            GroupElement::Abelian(e) => write!(f, "{e:?}"),
            GroupElement::Dihedral {
                reflection,
                rotation,
            } => {
                if *reflection {
                    write!(f, "s rho^{rotation}")
                } else {
                    write!(f, "rho^{rotation}")
                }
            }
            GroupElement::Pair { h, k } => write!(f, "h^{h} k^{k}"),
            GroupElement::Permutation(p) => write!(f, "{p:?}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupKind {
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
        complement: Complement,
        action: Vec<usize>,
    },
    Permutation {
        degree: usize,
    },
}

impl GroupKind {
    pub fn name(&self) -> &'static str {
        match self {
            GroupKind::Cyclic { .. } => "cyclic",
            GroupKind::Abelian { .. } => "abelian",
            GroupKind::Dihedral { .. } => "dihedral",
            GroupKind::Metacyclic { .. } => "metacyclic",
            GroupKind::Semidirect { .. } => "semidirect",
            GroupKind::Permutation { .. } => "permutation",
        }
    }
}

/// Structured description accepted by [`construct_group`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
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
    /// `C_m x| H` with `h k h^-1 = k^(action[i])` for the i-th generator of `H`.
    Semidirect {
        m: usize,
        complement: Complement,
        action: Vec<usize>,
    },
    Permutation {
        degree: usize,
        generators: Vec<Vec<usize>>,
        split: Option<PermutationSplit>,
    },
}

/// Generators of a normal subgroup `K` and a complement `H` inside a
/// permutation group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationSplit {
    pub k_generators: Vec<Vec<usize>>,
    pub h_generators: Vec<Vec<usize>>,
}

/// Builds a validated group with the default capacity.
pub fn construct_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    construct_group_with_capacity(spec, DEFAULT_CAPACITY)
}

pub fn construct_group_with_capacity(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Cyclic { n } => {
            if *n == 0 {
                return Err(Error::InvalidParameters("cyclic group needs n >= 1".into()));
            }
            FiniteGroup::from_split(
                GroupKind::Cyclic { n: *n },
                *n,
                Complement::Cyclic(1),
                &[1],
                cap,
            )
        }
        GroupSpec::Abelian { orders } => {
            if orders.is_empty() || orders.contains(&0) {
                return Err(Error::InvalidParameters(
                    "abelian group needs a non-empty list of positive orders".into(),
                ));
            }
            checked_product(orders, cap)?;
            let (head, last) = orders.split_at(orders.len() - 1);
            let complement = if head.is_empty() {
                Complement::Cyclic(1)
            } else {
                Complement::Abelian(head.to_vec())
            };
            let trivial = vec![1; complement.generators().len()];
            FiniteGroup::from_split(
                GroupKind::Abelian {
                    orders: orders.clone(),
                },
                last[0],
                complement,
                &trivial,
                cap,
            )
        }
        GroupSpec::Dihedral { n } => {
            if *n < 3 {
                return Err(Error::InvalidParameters(format!(
                    "dihedral group needs n >= 3, got {n}"
                )));
            }
            FiniteGroup::from_split(
                GroupKind::Dihedral { n: *n },
                *n,
                Complement::Cyclic(2),
                &[n - 1],
                cap,
            )
        }
        GroupSpec::Metacyclic { m, l, r } => {
            if *m == 0 || *l == 0 {
                return Err(Error::InvalidParameters(
                    "metacyclic group needs m, l >= 1".into(),
                ));
            }
            if gcd(*r % m, *m) != 1 {
                return Err(Error::InvalidAction(format!("gcd({r}, {m}) != 1")));
            }
            if pow_mod(*r, *l, *m) != 1 % m {
                return Err(Error::InvalidAction(format!(
                    "{r}^{l} = {} != 1 (mod {m})",
                    pow_mod(*r, *l, *m)
                )));
            }
            FiniteGroup::from_split(
                GroupKind::Metacyclic {
                    m: *m,
                    l: *l,
                    r: r % m,
                },
                *m,
                Complement::Cyclic(*l),
                &[*r],
                cap,
            )
        }
        GroupSpec::Semidirect {
            m,
            complement,
            action,
        } => {
            if *m == 0 {
                return Err(Error::InvalidParameters(
                    "semidirect group needs m >= 1".into(),
                ));
            }
            complement.validate()?;
            let reduced: Vec<usize> = action.iter().map(|x| x % m).collect();
            FiniteGroup::from_split(
                GroupKind::Semidirect {
                    m: *m,
                    complement: complement.clone(),
                    action: reduced.clone(),
                },
                *m,
                complement.clone(),
                &reduced,
                cap,
            )
        }
        GroupSpec::Permutation {
            degree,
            generators,
            split,
        } => {
            let perms = PermutationGroup::generate(*degree, generators, cap)?;
            let mut group = FiniteGroup {
                kind: GroupKind::Permutation { degree: *degree },
                order: perms.order(),
                generators: perms.generators.clone(),
                body: Body::Permutation(perms),
                split: None,
            };
            if let Some(split) = split {
                group.split = Some(group.permutation_split(split)?);
            }
            Ok(group)
        }
    }
}

fn checked_product(orders: &[usize], cap: usize) -> Result<usize> {
    let mut n: usize = 1;
    for &o in orders {
        n = n.saturating_mul(o);
        if n > cap {
            return Err(Error::CapacityExceeded { requested: n, cap });
        }
    }
    Ok(n)
}

#[derive(Clone, Debug)]
struct SplitBody {
    complement: Complement,
    m: usize,
    /// `twist[a]` is the exponent with `h_a k h_a^-1 = k^twist[a]`.
    twist: Vec<usize>,
    twist_inv: Vec<usize>,
}

#[derive(Clone, Debug)]
enum Body {
    Split(SplitBody),
    Permutation(PermutationGroup),
}

/// The distinguished normal subgroup `K` and complement `H` of a split group,
/// as lists of group indices in local order.
#[derive(Clone, Debug)]
pub struct Split {
    pub k: Vec<usize>,
    pub h: Vec<usize>,
    pub k_generators: Vec<usize>,
    pub h_generators: Vec<usize>,
    k_pos: Vec<usize>,
    h_pos: Vec<usize>,
}

impl Split {
    fn new(
        n: usize,
        k: Vec<usize>,
        h: Vec<usize>,
        k_generators: Vec<usize>,
        h_generators: Vec<usize>,
    ) -> Self {
        let mut k_pos = vec![usize::MAX; n];
        let mut h_pos = vec![usize::MAX; n];
        for (i, &g) in k.iter().enumerate() {
            k_pos[g] = i;
        }
        for (i, &g) in h.iter().enumerate() {
            h_pos[g] = i;
        }
        Split {
            k,
            h,
            k_generators,
            h_generators,
            k_pos,
            h_pos,
        }
    }

    /// `|K|`
    pub fn m(&self) -> usize {
        self.k.len()
    }

    /// `|H|`
    pub fn l(&self) -> usize {
        self.h.len()
    }

    /// Local index of a group element inside `K`, if it lies there.
    pub fn k_position(&self, g: usize) -> Option<usize> {
        self.k_pos.get(g).copied().filter(|&p| p != usize::MAX)
    }

    pub fn h_position(&self, g: usize) -> Option<usize> {
        self.h_pos.get(g).copied().filter(|&p| p != usize::MAX)
    }
}

/// One conjugacy class. The representative is the member with the smallest
/// canonical index; members are sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Vertex ordering `h_i k_j` (vertex `i*m + j`) of a split group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transversal {
    pub m: usize,
    pub l: usize,
    /// Group index of the element at each vertex.
    pub vertices: Vec<usize>,
    /// Coset representatives `h_0 = e, h_1, ..` as group indices.
    pub representatives: Vec<usize>,
}

impl Transversal {
    pub fn vertex_of(&self, i: usize, j: usize) -> usize {
        i * self.m + j
    }

    /// True when vertex order coincides with canonical element order.
    pub fn is_canonical(&self) -> bool {
        self.vertices.iter().enumerate().all(|(v, &g)| v == g)
    }
}

/// Result of a closure computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Generation {
    pub generates: bool,
    pub closure_size: usize,
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    kind: GroupKind,
    order: usize,
    generators: Vec<usize>,
    body: Body,
    split: Option<Split>,
}

impl FiniteGroup {
    pub fn cyclic(n: usize) -> Result<Self> {
        construct_group(&GroupSpec::Cyclic { n })
    }

    pub fn abelian(orders: &[usize]) -> Result<Self> {
        construct_group(&GroupSpec::Abelian {
            orders: orders.to_vec(),
        })
    }

    pub fn dihedral(n: usize) -> Result<Self> {
        construct_group(&GroupSpec::Dihedral { n })
    }

    pub fn metacyclic(m: usize, l: usize, r: usize) -> Result<Self> {
        construct_group(&GroupSpec::Metacyclic { m, l, r })
    }

    pub fn semidirect(m: usize, complement: Complement, action: &[usize]) -> Result<Self> {
        construct_group(&GroupSpec::Semidirect {
            m,
            complement,
            action: action.to_vec(),
        })
    }

    pub fn permutation(
        degree: usize,
        generators: &[Vec<usize>],
        split: Option<PermutationSplit>,
    ) -> Result<Self> {
        construct_group(&GroupSpec::Permutation {
            degree,
            generators: generators.to_vec(),
            split,
        })
    }

    fn from_split(
        kind: GroupKind,
        m: usize,
        complement: Complement,
        action: &[usize],
        cap: usize,
    ) -> Result<Self> {
        let l = complement.order();
        let n = checked_product(&[m, l], cap)?;
        let twist = complement.action_table(m, action)?;
        let twist_inv: Vec<usize> = (0..l).map(|a| twist[complement.inv(a)]).collect();
        let h_generators: Vec<usize> = complement
            .generators()
            .into_iter()
            .filter(|&a| a != 0)
            .map(|a| a * m)
            .collect();
        let k_generators = if m > 1 { vec![1] } else { vec![] };
        let mut generators = h_generators.clone();
        generators.extend(&k_generators);
        let split = Split::new(
            n,
            (0..m).collect(),
            (0..l).map(|a| a * m).collect(),
            k_generators,
            h_generators,
        );
        Ok(FiniteGroup {
            kind,
            order: n,
            generators,
            body: Body::Split(SplitBody {
                complement,
                m,
                twist,
                twist_inv,
            }),
            split: Some(split),
        })
    }

    fn permutation_split(&self, split: &PermutationSplit) -> Result<Split> {
        let Body::Permutation(perms) = &self.body else {
            unreachable!("permutation_split on a structured group")
        };
        let lookup = |gens: &[Vec<usize>]| -> Result<Vec<usize>> {
            gens.iter()
                .map(|p| {
                    perms
                        .index_of(p)
                        .ok_or_else(|| Error::ElementNotInGroup(format!("{p:?}")))
                })
                .collect()
        };
        let k_generators = lookup(&split.k_generators)?;
        let h_generators = lookup(&split.h_generators)?;
        let mut k = self.closure(&k_generators);
        let mut h = self.closure(&h_generators);
        k.sort_unstable();
        h.sort_unstable();
        if k.len() * h.len() != self.order {
            return Err(Error::InvalidParameters(format!(
                "|K| * |H| = {} * {} != |G| = {}",
                k.len(),
                h.len(),
                self.order
            )));
        }
        let mut in_k = vec![false; self.order];
        for &x in &k {
            in_k[x] = true;
        }
        if h.iter().any(|&x| x != 0 && in_k[x]) {
            return Err(Error::InvalidParameters(
                "H and K intersect nontrivially".into(),
            ));
        }
        for &g in &self.generators {
            for &x in &k {
                if !in_k[self.conj(g, x)] {
                    return Err(Error::InvalidParameters(format!(
                        "K is not normal: conjugating {} by {} leaves K",
                        self.element(x),
                        self.element(g)
                    )));
                }
            }
        }
        Ok(Split::new(self.order, k, h, k_generators, h_generators))
    }

    pub fn kind(&self) -> &GroupKind {
        &self.kind
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Canonical index of the identity.
    pub fn identity(&self) -> usize {
        0
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn split(&self) -> Option<&Split> {
        self.split.as_ref()
    }

    /// The complement `H` of a structured (non-permutation) group.
    pub fn complement(&self) -> Option<&Complement> {
        match &self.body {
            Body::Split(s) => Some(&s.complement),
            Body::Permutation(_) => None,
        }
    }

    /// Product of canonical indices.
    pub fn mul(&self, x: usize, y: usize) -> usize {
        match &self.body {
            Body::Split(s) => {
                let (a1, b1) = (x / s.m, x % s.m);
                let (a2, b2) = (y / s.m, y % s.m);
                let a = s.complement.mul(a1, a2);
                let b = (b1 * s.twist_inv[a2] + b2) % s.m;
                a * s.m + b
            }
            Body::Permutation(p) => p.mul(x, y),
        }
    }

    pub fn inv(&self, x: usize) -> usize {
        match &self.body {
            Body::Split(s) => {
                let (a, b) = (x / s.m, x % s.m);
                let b = (s.m - b * s.twist[a] % s.m) % s.m;
                s.complement.inv(a) * s.m + b
            }
            Body::Permutation(p) => p.inv(x),
        }
    }

    /// `g x g^-1`
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    pub fn element(&self, x: usize) -> GroupElement {
        assert!(
            x < self.order,
            "index {x} out of range for group of order {}",
            self.order
        );
        match (&self.kind, &self.body) {
            (_, Body::Permutation(p)) => GroupElement::Permutation(p.elements[x].clone()),
            (GroupKind::Cyclic { .. }, _) => GroupElement::Cyclic(x),
            (GroupKind::Abelian { orders }, _) => GroupElement::Abelian(decode_mixed(x, orders)),
            (GroupKind::Dihedral { n }, _) => GroupElement::Dihedral {
                reflection: x >= *n,
                rotation: x % n,
            },
            (_, Body::Split(s)) => GroupElement::Pair {
                h: x / s.m,
                k: x % s.m,
            },
        }
    }

    /// Canonical index of an element; rejects encodings that are not reduced
    /// or belong to a different group kind.
    pub fn index_of(&self, g: &GroupElement) -> Result<usize> {
        let bad = || Error::ElementNotInGroup(g.to_string());
        match (&self.kind, &self.body, g) {
            (_, Body::Permutation(p), GroupElement::Permutation(img)) => {
                p.index_of(img).ok_or_else(bad)
            }
            (GroupKind::Cyclic { n }, _, GroupElement::Cyclic(b)) if b < n => Ok(*b),
            (GroupKind::Abelian { orders }, _, GroupElement::Abelian(e))
                if e.len() == orders.len() && e.iter().zip(orders).all(|(x, o)| x < o) =>
            {
                Ok(encode_mixed(e, orders))
            }
            (
                GroupKind::Dihedral { n },
                _,
                GroupElement::Dihedral {
                    reflection,
                    rotation,
                },
            ) if rotation < n => Ok(usize::from(*reflection) * n + rotation),
            (
                GroupKind::Metacyclic { .. } | GroupKind::Semidirect { .. },
                Body::Split(s),
                GroupElement::Pair { h, k },
            ) if *h < s.complement.order() && *k < s.m => Ok(h * s.m + k),
            _ => Err(bad()),
        }
    }

    pub fn multiply(&self, g: &GroupElement, h: &GroupElement) -> Result<GroupElement> {
        Ok(self.element(self.mul(self.index_of(g)?, self.index_of(h)?)))
    }

    pub fn inverse(&self, g: &GroupElement) -> Result<GroupElement> {
        Ok(self.element(self.inv(self.index_of(g)?)))
    }

    /// Human-readable label of an element.
    pub fn label(&self, x: usize) -> String {
        self.element(x).to_string()
    }

    /// Partition of a conjugation-closed `domain` into orbits under the group
    /// generated by `conjugators`. Orbits are sorted internally and ordered by
    /// their smallest member.
    fn orbits(&self, domain: &[usize], conjugators: &[usize]) -> Vec<Vec<usize>> {
        let mut sorted = domain.to_vec();
        sorted.sort_unstable();
        let mut assigned = vec![false; self.order];
        let mut out = Vec::new();
        for &start in &sorted {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in conjugators {
                    let y = self.conj(g, x);
                    if !assigned[y] {
                        assigned[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            out.push(orbit);
        }
        out
    }

    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let all: Vec<usize> = (0..self.order).collect();
        self.orbits(&all, &self.generators)
            .into_iter()
            .map(|members| ConjugacyClass {
                representative: members[0],
                members,
            })
            .collect()
    }

    /// Conjugacy classes of the complement `H` as a group in its own right,
    /// expressed in `H`-local indices.
    pub fn complement_classes(&self) -> Result<Vec<ConjugacyClass>> {
        let split = self.split.as_ref().ok_or(Error::NoSplitStructure)?;
        let orbits = self.orbits(&split.h, &split.h_generators);
        Ok(orbits
            .into_iter()
            .map(|o| {
                let mut members: Vec<usize> = o
                    .iter()
                    .map(|&g| split.h_position(g).expect("H closed"))
                    .collect();
                members.sort_unstable();
                ConjugacyClass {
                    representative: members[0],
                    members,
                }
            })
            .collect())
    }

    /// Orbits of the conjugation action of `G` on its normal subgroup `K`,
    /// as group indices.
    pub fn conjugation_orbits_on_k(&self) -> Result<Vec<Vec<usize>>> {
        let split = self.split.as_ref().ok_or(Error::NoSplitStructure)?;
        Ok(self.orbits(&split.k, &self.generators))
    }

    pub fn left_transversal_ordering(&self) -> Result<Transversal> {
        let split = self.split.as_ref().ok_or(Error::NoSplitStructure)?;
        let mut vertices = Vec::with_capacity(self.order);
        for &h in &split.h {
            for &k in &split.k {
                vertices.push(self.mul(h, k));
            }
        }
        Ok(Transversal {
            m: split.m(),
            l: split.l(),
            vertices,
            representatives: split.h.clone(),
        })
    }

    /// Vertex ordering used for adjacency matrices: the transversal ordering
    /// when a split exists, else canonical order.
    pub fn vertex_ordering(&self) -> Vec<usize> {
        match self.left_transversal_ordering() {
            Ok(t) => t.vertices,
            Err(_) => (0..self.order).collect(),
        }
    }

    /// Subgroup generated by `set`, as a list of indices in discovery order.
    pub fn closure(&self, set: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order];
        seen[0] = true;
        let mut out = vec![0];
        let mut queue = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &s in set {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out
    }

    pub fn is_generating_set(&self, set: &[usize]) -> Generation {
        let closure_size = self.closure(set).len();
        Generation {
            generates: closure_size == self.order,
            closure_size,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(h: usize, k: usize) -> GroupElement {
        GroupElement::Pair { h, k }
    }

    fn s4() -> FiniteGroup {
        FiniteGroup::permutation(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], None).unwrap()
    }

    #[test]
    fn metacyclic_constructor() {
        assert_eq!(FiniteGroup::metacyclic(7, 3, 2).unwrap().order(), 21);
        assert!(matches!(
            FiniteGroup::metacyclic(5, 3, 2),
            Err(Error::InvalidAction(_))
        ));
        assert!(matches!(
            FiniteGroup::metacyclic(6, 2, 2),
            Err(Error::InvalidAction(_))
        ));
    }

    #[test]
    fn metacyclic_three_two_is_dihedral() {
        let g = FiniteGroup::metacyclic(3, 2, 2).unwrap();
        let d = FiniteGroup::dihedral(3).unwrap();
        // identical multiplication under the shared index encoding
        for x in 0..6 {
            for y in 0..6 {
                assert_eq!(g.mul(x, y), d.mul(x, y));
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        assert_eq!(g.multiply(&pair(1, 1), &pair(1, 0)).unwrap(), pair(2, 4));
        assert_eq!(g.multiply(&pair(0, 0), &pair(2, 5)).unwrap(), pair(2, 5));
        let c = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(
            c.multiply(&GroupElement::Cyclic(2), &GroupElement::Cyclic(5))
                .unwrap(),
            GroupElement::Cyclic(1)
        );
    }

    #[test]
    fn inverse_examples() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        assert_eq!(g.inverse(&pair(1, 1)).unwrap(), pair(2, 5));
        assert_eq!(g.multiply(&pair(1, 1), &pair(2, 5)).unwrap(), pair(0, 0));
        assert_eq!(g.inverse(&pair(0, 0)).unwrap(), pair(0, 0));
        let d = FiniteGroup::dihedral(5).unwrap();
        for j in 0..5 {
            let s = GroupElement::Dihedral {
                reflection: true,
                rotation: j,
            };
            assert_eq!(d.inverse(&s).unwrap(), s);
        }
    }

    #[test]
    fn metacyclic_relation_and_closed_form_inverse() {
        for &(m, l, r) in &[(7, 3, 2), (13, 4, 5), (9, 3, 4), (3, 2, 2), (8, 2, 3)] {
            let g = FiniteGroup::metacyclic(m, l, r).unwrap();
            let (h, k) = (m, 1);
            assert_eq!(g.conj(h, k), r % m);
            for a in 0..l {
                for b in 0..m {
                    let x = a * m + b;
                    let expected = ((l - a) % l) * m + (m - b * pow_mod(r, a, m) % m) % m;
                    assert_eq!(g.inv(x), expected);
                }
            }
        }
    }

    #[test]
    fn reject_out_of_range_encoding() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        assert!(g.index_of(&pair(3, 0)).is_err());
        assert!(g.index_of(&GroupElement::Cyclic(1)).is_err());
    }

    #[test]
    fn class_sizes() {
        let c = FiniteGroup::cyclic(9).unwrap();
        assert!(c.conjugacy_classes().iter().all(|cl| cl.size() == 1));
        let d3 = FiniteGroup::dihedral(3).unwrap();
        let mut sizes: Vec<_> = d3.conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 2, 3]);
        let mut sizes: Vec<_> = s4().conjugacy_classes().iter().map(|c| c.size()).collect();
        sizes.sort();
        assert_eq!(sizes, vec![1, 3, 6, 6, 8]);
    }

    #[test]
    fn orbits_on_k() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        assert_eq!(
            g.conjugation_orbits_on_k().unwrap(),
            vec![vec![0], vec![1, 2, 4], vec![3, 5, 6]]
        );
        let g = FiniteGroup::metacyclic(3, 2, 2).unwrap();
        assert_eq!(
            g.conjugation_orbits_on_k().unwrap(),
            vec![vec![0], vec![1, 2]]
        );
        let g = FiniteGroup::metacyclic(5, 4, 1).unwrap();
        assert!(g
            .conjugation_orbits_on_k()
            .unwrap()
            .iter()
            .all(|o| o.len() == 1));
    }

    #[test]
    fn transversal() {
        let g = FiniteGroup::metacyclic(3, 2, 2).unwrap();
        let t = g.left_transversal_ordering().unwrap();
        let labels: Vec<_> = t.vertices.iter().map(|&v| g.element(v)).collect();
        assert_eq!(
            labels,
            vec![
                pair(0, 0),
                pair(0, 1),
                pair(0, 2),
                pair(1, 0),
                pair(1, 1),
                pair(1, 2)
            ]
        );
        assert!(t.is_canonical());
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        let t = g.left_transversal_ordering().unwrap();
        assert_eq!(t.vertex_of(2, 3), 17);
        assert_eq!(g.index_of(&pair(2, 3)).unwrap(), 17);
        let c = FiniteGroup::cyclic(5).unwrap();
        let t = c.left_transversal_ordering().unwrap();
        assert_eq!((t.l, t.vertices), (1, vec![0, 1, 2, 3, 4]));
    }

    #[test]
    fn generating_sets() {
        let g = FiniteGroup::metacyclic(7, 3, 2).unwrap();
        let s = [1, 6, 7, 14];
        assert_eq!(
            g.is_generating_set(&s),
            Generation {
                generates: true,
                closure_size: 21
            }
        );
        assert_eq!(g.is_generating_set(&[0]).closure_size, 1);
        let c = FiniteGroup::cyclic(6).unwrap();
        assert_eq!(
            c.is_generating_set(&[2]),
            Generation {
                generates: false,
                closure_size: 3
            }
        );
    }

    #[test]
    fn semidirect_dihedral_complement() {
        let g = FiniteGroup::semidirect(7, Complement::Dihedral(3), &[1, 6]).unwrap();
        assert_eq!(g.order(), 42);
        let split = g.split().unwrap();
        // reflection inverts k, rotation centralizes it
        let s = split.h[3];
        let rho = split.h[1];
        assert_eq!(g.conj(s, 1), 6);
        assert_eq!(g.conj(rho, 1), 1);
        let classes = g.complement_classes().unwrap();
        let sizes: Vec<_> = classes.iter().map(|c| c.size()).collect();
        assert_eq!(sizes, vec![1, 2, 3]);
        assert!(FiniteGroup::semidirect(7, Complement::Dihedral(3), &[2, 6]).is_err());
    }

    #[test]
    fn permutation_split() {
        let split = PermutationSplit {
            k_generators: vec![vec![1, 2, 0, 3], vec![0, 2, 3, 1]],
            h_generators: vec![vec![1, 0, 2, 3]],
        };
        let g = FiniteGroup::permutation(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], Some(split))
            .unwrap();
        let split = g.split().unwrap();
        assert_eq!((split.m(), split.l()), (12, 2));
        let bad = PermutationSplit {
            k_generators: vec![vec![1, 0, 2, 3]],
            h_generators: vec![vec![0, 1, 3, 2]],
        };
        assert!(
            FiniteGroup::permutation(4, &[vec![1, 0, 2, 3], vec![1, 2, 3, 0]], Some(bad)).is_err()
        );
    }

    #[test]
    fn abelian_layout_and_capacity() {
        let g = FiniteGroup::abelian(&[2, 3]).unwrap();
        assert_eq!(g.element(5), GroupElement::Abelian(vec![1, 2]));
        assert_eq!(g.split().unwrap().m(), 3);
        let err = construct_group_with_capacity(&GroupSpec::Cyclic { n: 101 }, 100);
        assert!(matches!(err, Err(Error::CapacityExceeded { .. })));
        let err = construct_group(&GroupSpec::Abelian {
            orders: vec![100, 100, 100],
        });
        assert!(matches!(err, Err(Error::CapacityExceeded { .. })));
    }
}
