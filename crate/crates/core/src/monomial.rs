//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A multi-index in ℕ^n.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Box<[u32]>);

impl Exponent {
    pub fn new(entries: Vec<u32>) -> Self {
        Exponent(entries.into_boxed_slice())
    }

    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n].into_boxed_slice())
    }

    /// The unit vector `e_i` scaled by `power`.
    pub fn unit(n: usize, i: usize, power: u32) -> Self {
        let mut v = vec![0; n];
        v[i] = power;
        Exponent::new(v)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other ≤ self`.
    pub fn checked_div(&self, other: &Exponent) -> Option<Exponent> {
        if !other.divides(self) {
            return None;
        }
        Some(Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn min(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(other.0.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Exponent) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// All exponents in `n` variables of total degree exactly `deg`,
    /// in lexicographically decreasing order.
    pub fn all_of_degree(n: usize, deg: u32) -> Vec<Exponent> {
        fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Exponent>) {
            if i + 1 == n {
                cur[i] = left;
                out.push(Exponent::new(cur.clone()));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(n, i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        let mut out = Vec::new();
        if n == 0 {
            if deg == 0 {
                out.push(Exponent::zero(0));
            }
            return out;
        }
        rec(n, 0, deg, &mut vec![0; n], &mut out);
        out
    }

    /// All exponents of total degree `< bound`.
    pub fn all_below(n: usize, bound: u32) -> Vec<Exponent> {
        (0..bound).flat_map(|d| Exponent::all_of_degree(n, d)).collect()
    }
}

impl fmt::Debug for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.0[..])
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent::new(v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Grevlex,
    Lex,
    /// Eliminates the first `first` variables: compares that block by
    /// grevlex and breaks ties by grevlex on the remaining variables.
    BlockElimination { first: usize },
}

/// A multiplicative total order on exponents, optionally applied after a
/// permutation of the variables (`permutation[k]` is the variable that
/// plays the role of position `k`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    permutation: Option<Arc<[usize]>>,
}

/// Lexicographically comparable image of an exponent under an order.
/// Keys are additive: `key(a + b) = key(a) + key(b)`.
pub type OrderKey = Vec<i64>;

impl MonomialOrder {
    pub fn grevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::Grevlex,
            permutation: None,
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            permutation: None,
        }
    }

    pub fn block_elimination(first: usize) -> Self {
        MonomialOrder {
            kind: OrderKind::BlockElimination { first },
            permutation: None,
        }
    }

    pub fn with_permutation(mut self, permutation: Vec<usize>) -> Self {
        let mut check = permutation.clone();
        check.sort_unstable();
        assert!(
            check.iter().enumerate().all(|(i, &v)| i == v),
            "not a permutation: {permutation:?}"
        );
        self.permutation = Some(permutation.into());
        self
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
            OrderKind::BlockElimination { .. } => "block-elimination",
        }
    }

    fn permuted(&self, e: &Exponent) -> Vec<i64> {
        match &self.permutation {
            None => e.entries().iter().map(|&v| v as i64).collect(),
            Some(p) => p.iter().map(|&i| e.entries()[i] as i64).collect(),
        }
    }

    pub fn key(&self, e: &Exponent) -> OrderKey {
        let v = self.permuted(e);
        match self.kind {
            OrderKind::Lex => v,
            OrderKind::Grevlex => grevlex_key(&v),
            OrderKind::BlockElimination { first } => {
                let first = first.min(v.len());
                let mut k = grevlex_key(&v[..first]);
                k.extend(grevlex_key(&v[first..]));
                k
            }
        }
    }

    pub fn cmp(&self, a: &Exponent, b: &Exponent) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        self.key(a).cmp(&self.key(b))
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Exponent, b: &Exponent) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        if let Some(p) = &self.permutation {
            if p.len() != a.len() {
                return Err(Error::LengthMismatch(p.len(), a.len()));
            }
        }
        Ok(self.cmp(a, b))
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::grevlex()
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            OrderKind::BlockElimination { first } => write!(f, "block-elimination({first})"),
            _ => write!(f, "{}", self.name()),
        }
    }
}

fn grevlex_key(v: &[i64]) -> Vec<i64> {
    let mut k = Vec::with_capacity(v.len() + 1);
    k.push(v.iter().sum());
    k.extend(v.iter().rev().map(|&e| -e));
    k
}
