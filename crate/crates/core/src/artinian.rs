//! Artinian quotients `P/(I + m^N)` as finite-dimensional linear algebra.
//!
//! Subspaces of `P_{<N}` are kept in reduced echelon form with columns in
//! the local order: ascending total degree, ties broken by descending
//! grevlex. The pivot of a row is then its lowest-degree term, so pivot
//! counts per degree give the associated graded ring.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{self, Echelon, SparseVec};
use crate::monomial::{Exponent, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::{Mode, RingContext};
use crate::scalar::Field;

/// Above this many monomials a truncation level is considered out of reach.
pub const MAX_MONOMIALS: usize = 60_000;

/// Default ceiling for Artinian bound searches.
pub const DEFAULT_CEILING: u32 = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ColumnOrder {
    /// Ascending degree, then descending grevlex.
    Local,
    /// Descending grevlex (highest degree first).
    Dual,
}

/// Bijection between the monomials of degree `< bound` and column indices.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    nvars: usize,
    bound: u32,
    list: Vec<Exponent>,
    map: HashMap<Exponent, usize>,
}

pub fn monomial_count(nvars: usize, bound: u32) -> usize {
    // C(bound - 1 + nvars, nvars)
    let mut c: u128 = 1;
    for i in 0..nvars as u128 {
        c = c * (bound as u128 + i) / (i + 1);
    }
    usize::try_from(c).unwrap_or(usize::MAX)
}

impl MonomialIndex {
    pub fn new(nvars: usize, bound: u32, order: ColumnOrder) -> Self {
        let grevlex = MonomialOrder::grevlex();
        let mut list = Vec::new();
        for d in 0..bound {
            let mut layer = Exponent::all_of_degree(nvars, d);
            layer.sort_by(|a, b| grevlex.cmp(b, a));
            list.push(layer);
        }
        if order == ColumnOrder::Dual {
            list.reverse();
        }
        let list: Vec<Exponent> = list.into_iter().flatten().collect();
        let map = list.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        MonomialIndex {
            nvars,
            bound,
            list,
            map,
        }
    }

    pub fn len(&self) -> usize {
        self.list.len()
    }

    pub fn is_empty(&self) -> bool {
        self.list.is_empty()
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn exponent(&self, i: usize) -> &Exponent {
        &self.list[i]
    }

    pub fn index(&self, e: &Exponent) -> Option<usize> {
        self.map.get(e).copied()
    }

    /// Coordinates of `p`; terms of degree `≥ bound` are dropped.
    pub fn to_vec(&self, p: &Polynomial) -> SparseVec {
        debug_assert_eq!(p.nvars(), self.nvars);
        linalg::normalize(
            p.terms()
                .filter_map(|(e, c)| self.index(e).map(|i| (i, c.clone())))
                .collect(),
        )
    }

    pub fn to_poly(&self, v: &SparseVec, field: Field) -> Polynomial {
        Polynomial::from_terms(
            self.nvars,
            field,
            v.iter().map(|(i, c)| (self.list[*i].clone(), c.clone())),
        )
    }
}

/// Dimensions of the graded pieces of the associated graded ring of an
/// Artinian quotient, indexed by degree up to the socle degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertData {
    pub values: Vec<usize>,
}

impl HilbertData {
    /// Total K-dimension of the quotient.
    pub fn length(&self) -> usize {
        self.values.iter().sum()
    }

    /// Largest degree with a nonzero piece.
    pub fn socle_degree(&self) -> Option<usize> {
        self.values.iter().rposition(|&v| v != 0)
    }
}

impl fmt::Display for HilbertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let v: Vec<String> = self.values.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", v.join(","))
    }
}

/// The subspace `(I + m^N)/m^N` of `P/m^N`.
#[derive(Clone, Debug)]
pub struct TruncatedIdeal {
    ctx: Arc<RingContext>,
    index: Arc<MonomialIndex>,
    space: Echelon,
}

impl PartialEq for TruncatedIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.level() == other.level() && self.space == other.space
    }
}

impl TruncatedIdeal {
    fn empty(ctx: Arc<RingContext>, level: u32) -> Result<Self> {
        let n = ctx.nvars();
        if monomial_count(n, level) > MAX_MONOMIALS {
            return Err(Error::UnboundedQuotient { ceiling: level });
        }
        let field = ctx.field();
        Ok(TruncatedIdeal {
            ctx,
            index: Arc::new(MonomialIndex::new(n, level, ColumnOrder::Local)),
            space: Echelon::new(field),
        })
    }

    /// The ideal generated by `gens` modulo `m^level`.
    pub fn from_generators(ctx: Arc<RingContext>, gens: &[Polynomial], level: u32) -> Result<Self> {
        let mut t = TruncatedIdeal::empty(ctx, level)?;
        for g in gens {
            t.ctx.check(g)?;
        }
        let mut gens: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
        gens.sort_by_key(|g| (g.ord(), g.len()));
        let n = t.ctx.nvars();
        for deg in 0..level {
            for g in &gens {
                let o = g.ord().expect("nonzero");
                if o + deg >= level {
                    continue;
                }
                for b in Exponent::all_of_degree(n, deg) {
                    let v = t.index.to_vec(&g.mul_monomial(&b));
                    t.space.insert(v);
                }
            }
        }
        Ok(t)
    }

    pub fn from_ideal(ideal: &Ideal, level: u32) -> Result<Self> {
        let mut gens = ideal.generators().to_vec();
        if let Some(t) = ideal.truncation() {
            if t < level {
                gens.extend(
                    Exponent::all_of_degree(ideal.context().nvars(), t)
                        .into_iter()
                        .map(|e| ideal.context().monomial(e)),
                );
            }
        }
        TruncatedIdeal::from_generators(ideal.context().clone(), &gens, level)
    }

    /// The subspace spanned by `vectors` (assumed to be an ideal mod `m^level`).
    pub fn from_span(ctx: Arc<RingContext>, level: u32, vectors: &[Polynomial]) -> Result<Self> {
        let mut t = TruncatedIdeal::empty(ctx, level)?;
        for v in vectors {
            let x = t.index.to_vec(v);
            t.space.insert(x);
        }
        Ok(t)
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn level(&self) -> u32 {
        self.index.bound()
    }

    pub fn index(&self) -> &MonomialIndex {
        &self.index
    }

    pub fn echelon(&self) -> &Echelon {
        &self.space
    }

    pub fn ambient_dim(&self) -> usize {
        self.index.len()
    }

    /// `dim_K P/(I + m^N)`.
    pub fn quotient_dim(&self) -> usize {
        self.index.len() - self.space.rank()
    }

    /// Values of the associated graded quotient in degrees `< level`.
    pub fn graded_dims(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.level())
            .map(|d| monomial_count(self.ctx.nvars(), d + 1) - monomial_count(self.ctx.nvars(), d))
            .collect();
        for p in self.space.pivot_columns() {
            v[self.index.exponent(p).degree() as usize] -= 1;
        }
        v
    }

    pub fn hilbert(&self) -> HilbertData {
        let mut values = self.graded_dims();
        while values.last() == Some(&0) {
            values.pop();
        }
        HilbertData { values }
    }

    /// Basis of the quotient: monomials outside the pivot set.
    pub fn standard_monomials(&self) -> Vec<Exponent> {
        (0..self.index.len())
            .filter(|&c| !self.space.is_pivot(c))
            .map(|c| self.index.exponent(c).clone())
            .collect()
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.space.contains(&self.index.to_vec(p))
    }

    /// Canonical representative of `p` modulo `I + m^N`.
    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let v = self.space.reduce(&self.index.to_vec(p));
        self.index.to_poly(&v, self.ctx.field())
    }

    /// Rows of the echelon form as polynomials.
    pub fn basis(&self) -> Vec<Polynomial> {
        self.space
            .sorted_rows()
            .into_iter()
            .map(|r| self.index.to_poly(r, self.ctx.field()))
            .collect()
    }

    /// Image in `P/m^level` for a smaller level.
    pub fn restrict(&self, level: u32) -> TruncatedIdeal {
        assert!(level <= self.level());
        let index = Arc::new(MonomialIndex::new(self.ctx.nvars(), level, ColumnOrder::Local));
        let cut = index.len();
        let rows = self
            .space
            .sorted_rows()
            .into_iter()
            .filter(|r| r[0].0 < cut)
            .map(|r| r.iter().filter(|e| e.0 < cut).cloned().collect());
        TruncatedIdeal {
            ctx: self.ctx.clone(),
            index,
            space: Echelon::from_rows(self.ctx.field(), rows),
        }
    }

    fn same_shape(&self, other: &TruncatedIdeal) -> Result<()> {
        if self.ctx != other.ctx || self.level() != other.level() {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    pub fn sum(&self, other: &TruncatedIdeal) -> Result<TruncatedIdeal> {
        self.same_shape(other)?;
        Ok(TruncatedIdeal {
            space: self.space.sum(&other.space),
            ..self.clone()
        })
    }

    pub fn intersect(&self, other: &TruncatedIdeal) -> Result<TruncatedIdeal> {
        self.same_shape(other)?;
        Ok(TruncatedIdeal {
            space: self.space.intersect(&other.space, self.index.len()),
            ..self.clone()
        })
    }

    pub fn is_subspace_of(&self, other: &TruncatedIdeal) -> Result<bool> {
        self.same_shape(other)?;
        Ok(self.space.is_subspace_of(&other.space))
    }

    /// `m · I` modulo `m^N`.
    pub fn times_maximal(&self) -> TruncatedIdeal {
        let n = self.ctx.nvars();
        let mut space = Echelon::new(self.ctx.field());
        for r in self.space.sorted_rows() {
            let p = self.index.to_poly(r, self.ctx.field());
            for i in 0..n {
                space.insert(self.index.to_vec(&p.mul_monomial(&Exponent::unit(n, i, 1))));
            }
        }
        TruncatedIdeal {
            space,
            ..self.clone()
        }
    }

    /// Canonical representatives of a basis of `self / sub`.
    pub fn complement_reps(&self, sub: &TruncatedIdeal) -> Result<Vec<Polynomial>> {
        self.same_shape(sub)?;
        let mut reps = Echelon::new(self.ctx.field());
        for r in self.space.sorted_rows() {
            reps.insert(sub.space.reduce(r));
        }
        let mut out = Vec::new();
        for r in reps.sorted_rows() {
            let fully = sub.space.reduce(r);
            out.push(self.index.to_poly(&fully, self.ctx.field()));
        }
        Ok(out)
    }

    /// Generators of the ideal modulo `m^N`: representatives of `I / m I`.
    pub fn minimal_generators(&self) -> Vec<Polynomial> {
        self.complement_reps(&self.times_maximal()).expect("same shape")
    }

    /// Basis of the socle `(I : m)/I`, as canonical representatives. Only
    /// meaningful when `m^N ⊆ I`, i.e. the level is at least the Artinian
    /// bound of the ideal.
    pub fn socle(&self) -> Vec<Polynomial> {
        let n = self.ctx.nvars();
        let field = self.ctx.field();
        let cols = self.index.len();
        let std = self.standard_monomials();
        let images: Vec<SparseVec> = std
            .iter()
            .map(|s| {
                let mut v = Vec::new();
                for i in 0..n {
                    let x = self.space.reduce(&self.index.to_vec(&self.ctx.monomial(s.mul(&Exponent::unit(n, i, 1)))));
                    v.extend(x.into_iter().map(|(c, a)| (c + i * cols, a)));
                }
                v
            })
            .collect();
        let sol = linalg::solve(field, &images, &Vec::new(), n * cols).expect("zero is solvable");
        let mut basis = Echelon::new(field);
        for k in sol.kernel {
            let v: SparseVec = linalg::normalize(
                k.into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| (self.index.index(&std[j]).expect("indexed"), c))
                    .collect(),
            );
            basis.insert(v);
        }
        basis
            .sorted_rows()
            .into_iter()
            .map(|r| self.index.to_poly(r, field))
            .collect()
    }
}

impl Ideal {
    /// The truncation of this ideal at `level`.
    pub fn truncated(&self, level: u32) -> Result<TruncatedIdeal> {
        TruncatedIdeal::from_ideal(self, level)
    }

    /// Smallest `N` with `m^N ⊆ I`; in local mode this is certified by
    /// `m^N ⊆ I + m^{N+1}` (Nakayama).
    pub fn artinian_bound(&self) -> Result<u32> {
        self.artinian_bound_with(DEFAULT_CEILING, None)
    }

    /// As [`artinian_bound`](Self::artinian_bound) with an explicit ceiling
    /// and an optional guess for the first truncation level to try.
    pub fn artinian_bound_with(&self, ceiling: u32, hint: Option<u32>) -> Result<u32> {
        Ok(self.artinian_truncation(ceiling, hint)?.0)
    }

    /// The Artinian bound `N` together with the ideal truncated at a level
    /// `> N`.
    pub fn artinian_truncation(&self, ceiling: u32, hint: Option<u32>) -> Result<(u32, TruncatedIdeal)> {
        if self.context().mode() == Mode::Graded || self.is_homogeneous() {
            if !self.is_zero_dimensional() {
                return Err(Error::UnboundedQuotient { ceiling });
            }
        }
        if let Some(t) = self.truncation() {
            if self.generators().is_empty() {
                let level = t + 1;
                return Ok((t, self.truncated(level)?));
            }
        }
        let maxdeg = self.generators().iter().filter_map(Polynomial::degree).max().unwrap_or(0);
        let mut level = hint.unwrap_or(maxdeg + 2).max(2);
        if let Some(t) = self.truncation() {
            level = level.min(t + 1);
        }
        loop {
            let capped = level.min(ceiling + 1);
            let t = self.truncated(capped).map_err(|_| Error::UnboundedQuotient { ceiling })?;
            if let Some(n) = t.graded_dims().iter().position(|&v| v == 0) {
                let n = n as u32;
                if self.context().mode() == Mode::Graded && !self.contains_power_of_maximal(n)? {
                    return Err(Error::UnboundedQuotient { ceiling });
                }
                return Ok((n, t));
            }
            if capped > ceiling {
                return Err(Error::UnboundedQuotient { ceiling });
            }
            level = capped + 4;
        }
    }

    fn contains_power_of_maximal(&self, n: u32) -> Result<bool> {
        for e in Exponent::all_of_degree(self.context().nvars(), n) {
            if !self.contains(&self.context().monomial(e))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hilbert–Samuel profile of the Artinian quotient.
    pub fn hilbert_data(&self) -> Result<HilbertData> {
        let (_, t) = self.artinian_truncation(DEFAULT_CEILING, None)?;
        Ok(t.hilbert())
    }

    /// Socle of the Artinian quotient as canonical representatives.
    pub fn socle_basis(&self) -> Result<Vec<Polynomial>> {
        let (n, t) = self.artinian_truncation(DEFAULT_CEILING, None)?;
        Ok(t.restrict(n.max(1)).socle())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(vars: &[&str], mode: Mode, gens: &[&str]) -> Ideal {
        let ctx = RingContext::new(Field::Rational, vars, mode, &[]).unwrap();
        Ideal::parse(Arc::new(ctx), gens).unwrap()
    }

    #[test]
    fn local_index_is_prefix_closed() {
        let a = MonomialIndex::new(3, 3, ColumnOrder::Local);
        let b = MonomialIndex::new(3, 5, ColumnOrder::Local);
        for i in 0..a.len() {
            assert_eq!(a.exponent(i), b.exponent(i));
        }
        let d = MonomialIndex::new(2, 3, ColumnOrder::Dual);
        assert_eq!(d.exponent(0), &Exponent::new(vec![2, 0]));
        assert_eq!(d.exponent(d.len() - 1), &Exponent::zero(2));
        assert_eq!(monomial_count(4, 10), 715);
    }

    #[test]
    fn bounds_and_profiles() {
        for mode in [Mode::Graded, Mode::Local] {
            let i = ideal(&["x", "y"], mode, &["x", "y"]);
            assert_eq!(i.artinian_bound().unwrap(), 1);
            assert_eq!(i.hilbert_data().unwrap().values, vec![1]);
            let j = ideal(&["x", "y"], mode, &["x^2", "x*y", "y^2"]);
            assert_eq!(j.artinian_bound().unwrap(), 2);
            assert_eq!(j.hilbert_data().unwrap().values, vec![1, 2]);
        }
    }

    #[test]
    fn local_units_do_not_matter() {
        // x(1+x) and x generate the same ideal of K[[x]]
        let i = ideal(&["x", "y"], Mode::Local, &["x + x^2", "y^3"]);
        assert_eq!(i.hilbert_data().unwrap().values, vec![1, 1, 1]);
        let g = ideal(&["x", "y"], Mode::Graded, &["x + x^2", "y^3"]);
        assert!(matches!(g.artinian_bound(), Err(Error::UnboundedQuotient { .. })));
    }

    #[test]
    fn non_artinian_is_rejected() {
        let i = ideal(&["x", "y"], Mode::Graded, &["x^2"]);
        assert!(matches!(i.hilbert_data(), Err(Error::UnboundedQuotient { .. })));
    }

    #[test]
    fn socles() {
        let i = ideal(&["x", "y"], Mode::Graded, &["x^2", "y"]);
        let s = i.socle_basis().unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(i.context().render(&s[0]), "x");
        let j = ideal(&["x", "y"], Mode::Graded, &["x^2", "y^2"]);
        let s = j.socle_basis().unwrap();
        assert_eq!(j.context().render(&s[0]), "x*y");
    }

    #[test]
    fn minimal_generators_drop_redundancy() {
        let i = ideal(&["x", "y"], Mode::Local, &["x^2", "x*y", "x^2 + x^3", "y^3"]);
        let t = i.truncated(5).unwrap();
        assert_eq!(t.minimal_generators().len(), 3);
    }

    #[test]
    fn restriction_matches_direct_truncation() {
        let i = ideal(&["x", "y", "z"], Mode::Local, &["x*y - z^2", "x^3", "y^2 + z^3"]);
        let big = i.truncated(7).unwrap();
        for l in 1..7 {
            assert_eq!(big.restrict(l), i.truncated(l).unwrap());
        }
    }
}
