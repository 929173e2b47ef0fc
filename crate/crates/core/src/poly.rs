//! Sparse multivariate polynomials over an exact field.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialOrder};
use crate::scalar::{Field, Scalar};

/// A polynomial as a finite map from exponents to nonzero coefficients.
///
/// The same type represents elements of `P` and of its dual `D`; the
/// variable names used for printing come from the ring context.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Exponent, Scalar>,
}

impl Polynomial {
    pub fn zero(nvars: usize, field: Field) -> Self {
        Polynomial {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Polynomial::monomial(Exponent::zero(nvars), c)
    }

    pub fn one(nvars: usize, field: Field) -> Self {
        Polynomial::constant(nvars, field.one())
    }

    pub fn monomial(e: Exponent, c: Scalar) -> Self {
        let nvars = e.len();
        let field = c.field();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Polynomial { nvars, field, terms }
    }

    pub fn var(nvars: usize, field: Field, i: usize) -> Self {
        Polynomial::monomial(Exponent::unit(nvars, i, 1), field.one())
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms(
        nvars: usize,
        field: Field,
        terms: impl IntoIterator<Item = (Exponent, Scalar)>,
    ) -> Self {
        let mut p = Polynomial::zero(nvars, field);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e, &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, Scalar)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Scalar {
        self.terms.get(e).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// Lowest total degree of a term (the m-adic order); `None` for zero.
    pub fn ord(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).min()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degree() == self.ord()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Leading exponent and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Exponent, &Scalar)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted in descending `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Exponent, &Scalar)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    pub(crate) fn add_term(&mut self, e: Exponent, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), c);
        }
        Ok(r)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut r = self.clone();
        for (e, c) in &other.terms {
            r.add_term(e.clone(), &-c);
        }
        Ok(r)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check(other)?;
        let mut r = Polynomial::zero(self.nvars, self.field);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                r.add_term(a.mul(b), &(ca * cb));
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        assert_eq!(c.field(), self.field, "scalar field mismatch");
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.field);
        }
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, e: &Exponent) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, v)| (m.mul(e), v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut r = Polynomial::one(self.nvars, self.field);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Drops every term of total degree `≥ bound`.
    pub fn truncate(&self, bound: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() < bound)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of degree `deg`.
    pub fn homogeneous_part(&self, deg: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            field: self.field,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.degree() == deg)
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Scales so that the leading coefficient under `order` is one.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv()),
        }
    }

    /// Embeds into a ring with `extra` new variables placed before the
    /// existing ones.
    pub fn prepend_vars(&self, extra: usize) -> Polynomial {
        Polynomial {
            nvars: self.nvars + extra,
            field: self.field,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0; extra];
                    v.extend_from_slice(e.entries());
                    (Exponent::new(v), c.clone())
                })
                .collect(),
        }
    }

    /// Inverse of [`prepend_vars`](Self::prepend_vars); `None` if a dropped
    /// variable occurs.
    pub fn drop_leading_vars(&self, count: usize) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            if e.entries()[..count].iter().any(|&v| v != 0) {
                return None;
            }
            terms.insert(Exponent::new(e.entries()[count..].to_vec()), c.clone());
        }
        Some(Polynomial {
            nvars: self.nvars - count,
            field: self.field,
            terms,
        })
    }

    /// Re-interprets coefficients in another field (rationals map to `F_p`
    /// when their denominators are invertible).
    pub fn change_field(&self, field: Field) -> Result<Polynomial> {
        let mut r = Polynomial::zero(self.nvars, field);
        for (e, c) in &self.terms {
            let c2 = match (c, field) {
                (Scalar::Q(q), _) => field.from_ratio(&q.numer(), &q.denom())?,
                (Scalar::Fp(v, p), Field::Prime(p2)) if *p == p2 => Scalar::Fp(*v, *p),
                _ => return Err(Error::ContextMismatch),
            };
            r.add_term(e.clone(), &c2);
        }
        Ok(r)
    }

    /// Canonical text rendering: descending `order`, `*` for products, `^`
    /// for powers, explicit rational coefficients.
    pub fn render(&self, names: &[String], order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.sorted_terms(order).into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(e, names);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&mono);
            }
        }
        out
    }
}

fn render_monomial(e: &Exponent, names: &[String]) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.entries().iter().enumerate() {
        match k {
            0 => {}
            1 => parts.push(names[i].clone()),
            _ => parts.push(format!("{}^{}", names[i], k)),
        }
    }
    parts.join("*")
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial context mismatch")
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("polynomial context mismatch")
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("polynomial context mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-self.field.one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: Field = Field::Rational;

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn x(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, Q, i)
    }

    #[test]
    fn cancellation() {
        let (px, py) = (x(2, 0), x(2, 1));
        let s = &(&px + &py) - &px;
        assert_eq!(s, py);
    }

    #[test]
    fn difference_of_squares() {
        let one = Polynomial::one(1, Q);
        let px = x(1, 0);
        let p = &(&px + &one) * &(&px - &one);
        assert_eq!(p, &(&px * &px) - &one);
    }

    #[test]
    fn example_generator_times_y() {
        // variables x, y, w
        let (px, py, pw) = (x(3, 0), x(3, 1), x(3, 2));
        let g = &pw - &(&px * &py);
        let p = &g * &py;
        let o = MonomialOrder::grevlex();
        assert_eq!(p.render(&names(&["x", "y", "w"]), &o), "-x*y^2 + y*w");
    }

    #[test]
    fn truncation_examples() {
        let one = Polynomial::one(1, Q);
        let px = x(1, 0);
        let p = &(&one + &px) + &px.pow(3);
        assert_eq!(p.truncate(2), &one + &px);
        assert!(p.truncate(0).is_zero());
        let (ppx, py, pw) = (x(3, 0), x(3, 1), x(3, 2));
        let q = &(&pw * &py) - &(&ppx * &py.pow(2));
        assert_eq!(q.truncate(3), &pw * &py);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        assert_eq!(x(2, 0).try_add(&x(3, 0)), Err(Error::ContextMismatch));
        let fp = Polynomial::var(2, Field::Prime(5), 0);
        assert_eq!(x(2, 0).try_mul(&fp), Err(Error::ContextMismatch));
    }

    #[test]
    fn rendering_uses_explicit_rationals() {
        let n = names(&["x", "y"]);
        let c = Q.from_ratio(&(-3).into(), &2.into()).unwrap();
        let p = Polynomial::monomial(Exponent::new(vec![2, 1]), c);
        let q = &p + &Polynomial::one(2, Q);
        assert_eq!(q.render(&n, &MonomialOrder::grevlex()), "-3/2*x^2*y + 1");
        assert_eq!(Polynomial::zero(2, Q).render(&n, &MonomialOrder::grevlex()), "0");
    }

    #[test]
    fn degree_and_order() {
        let (px, py) = (x(2, 0), x(2, 1));
        let p = &px.pow(2) + &py.pow(5);
        assert_eq!(p.degree(), Some(5));
        assert_eq!(p.ord(), Some(2));
        assert_eq!(Polynomial::zero(2, Q).degree(), None);
    }
}
