//! Complements H of the cyclic normal subgroup in `C_m x| H`.

use crate::error::{Error, Result};

/// Supported complement groups. Elements are addressed by a local index in
/// `0..order()`:
/// * cyclic `C_l`: `h^a` has index `a`;
/// * abelian product: mixed radix over the exponents, first factor slowest;
/// * dihedral `D_n`: `s^f rho^j` has index `f*n + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complement {
    Cyclic(usize),
    Abelian(Vec<usize>),
    Dihedral(usize),
}

impl Complement {
    pub fn validate(&self) -> Result<()> {
        match self {
            Complement::Cyclic(l) if *l == 0 => Err(Error::InvalidParameters(
                "cyclic complement must have order >= 1".into(),
            )),
            Complement::Abelian(orders) if orders.is_empty() || orders.contains(&0) => {
                Err(Error::InvalidParameters(
                    "abelian complement needs a non-empty list of positive orders".into(),
                ))
            }
            Complement::Dihedral(n) if *n < 3 => Err(Error::InvalidParameters(format!(
                "dihedral complement needs n >= 3, got {n}"
            ))),
            _ => Ok(()),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            Complement::Cyclic(l) => *l,
            Complement::Abelian(orders) => orders.iter().product(),
            Complement::Dihedral(n) => 2 * n,
        }
    }

    /// Local indices of the defining generators, in the order the action
    /// images are given. Generators of order 1 are still listed.
    pub fn generators(&self) -> Vec<usize> {
        match self {
            Complement::Cyclic(l) => vec![if *l > 1 { 1 } else { 0 }],
            Complement::Abelian(orders) => {
                let strides = strides(orders);
                orders
                    .iter()
                    .zip(&strides)
                    .map(|(&o, &s)| if o > 1 { s } else { 0 })
                    .collect()
            }
            // rho, s
            Complement::Dihedral(n) => vec![1, *n],
        }
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        match self {
            Complement::Cyclic(l) => (a + b) % l,
            Complement::Abelian(orders) => {
                let x = decode_mixed(a, orders);
                let y = decode_mixed(b, orders);
                let sum: Vec<usize> = x
                    .iter()
                    .zip(&y)
                    .zip(orders)
                    .map(|((p, q), o)| (p + q) % o)
                    .collect();
                encode_mixed(&sum, orders)
            }
            Complement::Dihedral(n) => {
                let (f1, j1) = (a / n, a % n);
                let (f2, j2) = (b / n, b % n);
                let j1 = if f2 == 1 { (n - j1) % n } else { j1 };
                ((f1 ^ f2) * n) + (j1 + j2) % n
            }
        }
    }

    pub fn inv(&self, a: usize) -> usize {
        match self {
            Complement::Cyclic(l) => (l - a % l) % l,
            Complement::Abelian(orders) => {
                let x = decode_mixed(a, orders);
                let neg: Vec<usize> = x.iter().zip(orders).map(|(p, o)| (o - p) % o).collect();
                encode_mixed(&neg, orders)
            }
            Complement::Dihedral(n) => {
                if a >= *n {
                    a
                } else {
                    (n - a) % n
                }
            }
        }
    }

    /// Checks that `images` (one unit mod `m` per generator) respects the
    /// defining relations of the complement, and returns the image of every
    /// element in local index order.
    pub(crate) fn action_table(&self, m: usize, images: &[usize]) -> Result<Vec<usize>> {
        let gens = self.generators();
        if images.len() != gens.len() {
            return Err(Error::InvalidAction(format!(
                "expected {} generator images, got {}",
                gens.len(),
                images.len()
            )));
        }
        let images: Vec<usize> = images.iter().map(|&x| x % m).collect();
        for (i, &x) in images.iter().enumerate() {
            if gcd(x, m) != 1 {
                return Err(Error::InvalidAction(format!(
                    "image {x} of generator {i} is not a unit modulo {m}"
                )));
            }
        }
        let check = |base: usize, exp: usize, what: &str| -> Result<()> {
            if pow_mod(base, exp, m) != 1 % m {
                Err(Error::InvalidAction(format!(
                    "relation {what} fails: {base}^{exp} != 1 (mod {m})"
                )))
            } else {
                Ok(())
            }
        };
        match self {
            Complement::Cyclic(l) => check(images[0], *l, "h^l = e")?,
            Complement::Abelian(orders) => {
                for (i, (&x, &o)) in images.iter().zip(orders).enumerate() {
                    check(x, o, &format!("g{i}^{o} = e"))?;
                }
            }
            Complement::Dihedral(n) => {
                check(images[0], *n, "rho^n = e")?;
                check(images[1], 2, "s^2 = e")?;
                // s rho s^-1 = rho^-1 in an abelian target forces rho^2 -> 1
                check(images[0], 2, "s rho s^-1 = rho^-1")?;
            }
        }
        let table = (0..self.order())
            .map(|a| match self {
                Complement::Cyclic(_) => pow_mod(images[0], a, m),
                Complement::Abelian(orders) => decode_mixed(a, orders)
                    .iter()
                    .zip(&images)
                    .fold(1 % m, |acc, (&e, &x)| acc * pow_mod(x, e, m) % m),
                Complement::Dihedral(n) => {
                    let (f, j) = (a / n, a % n);
                    pow_mod(images[1], f, m) * pow_mod(images[0], j, m) % m
                }
            })
            .collect();
        Ok(table)
    }

    pub fn describe(&self) -> String {
        match self {
            Complement::Cyclic(l) => format!("C{l}"),
            Complement::Abelian(orders) => orders
                .iter()
                .map(|o| format!("C{o}"))
                .collect::<Vec<_>>()
                .join(" x "),
            Complement::Dihedral(n) => format!("D{n}"),
        }
    }
}

pub(crate) fn strides(orders: &[usize]) -> Vec<usize> {
    let mut s = vec![1; orders.len()];
    for i in (0..orders.len().saturating_sub(1)).rev() {
        s[i] = s[i + 1] * orders[i + 1];
    }
    s
}

pub(crate) fn decode_mixed(mut index: usize, orders: &[usize]) -> Vec<usize> {
    let mut out = vec![0; orders.len()];
    for i in (0..orders.len()).rev() {
        out[i] = index % orders[i];
        index /= orders[i];
    }
    out
}

pub(crate) fn encode_mixed(exps: &[usize], orders: &[usize]) -> usize {
    exps.iter().zip(orders).fold(0, |acc, (&e, &o)| acc * o + e)
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn pow_mod(base: usize, mut exp: usize, m: usize) -> usize {
    if m == 1 {
        return 0;
    }
    let mut result = 1usize;
    let mut b = base % m;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    result
}
