//! The contraction action of `P` on the dual `D` and Macaulay duality.
//!
//! Dual elements are polynomials in the dual variables `X`, stored with
//! the same exponent layout as elements of `P`. Monomials act by
//! `x^n ∘ X^m = X^{m-n}` if `n ≤ m` and `0` otherwise.

use std::fmt;
use std::sync::Arc;

use crate::artinian::{ColumnOrder, MonomialIndex, TruncatedIdeal, DEFAULT_CEILING};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{Echelon, SparseVec};
use crate::monomial::{Exponent, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// `p ∘ f`.
pub fn contract(p: &Polynomial, f: &Polynomial) -> Result<Polynomial> {
    if p.nvars() != f.nvars() || p.field() != f.field() {
        return Err(Error::ContextMismatch);
    }
    let mut out = Polynomial::zero(f.nvars(), f.field());
    for (a, c) in p.terms() {
        for (b, d) in f.terms() {
            if let Some(e) = b.checked_div(a) {
                out.add_term(e, &(c * d));
            }
        }
    }
    Ok(out)
}

/// `x^a ∘ f`.
pub fn contract_monomial(a: &Exponent, f: &Polynomial) -> Polynomial {
    Polynomial::from_terms(
        f.nvars(),
        f.field(),
        f.terms().filter_map(|(b, d)| b.checked_div(a).map(|e| (e, d.clone()))),
    )
}

/// A finite-dimensional K-subspace of `D` in reduced echelon form with
/// respect to descending grevlex; usually closed under contraction.
///
/// The echelon basis is unique, so equality of subspaces is equality of
/// bases.
#[derive(Clone, PartialEq, Eq)]
pub struct DualModule {
    ctx: Arc<RingContext>,
    basis: Vec<Polynomial>,
}

impl fmt::Debug for DualModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b: Vec<String> = self.basis.iter().map(|p| self.ctx.render_dual(p)).collect();
        f.debug_struct("DualModule").field("basis", &b).finish()
    }
}

fn dual_index(ctx: &RingContext, polys: &[&Polynomial]) -> MonomialIndex {
    let bound = polys.iter().filter_map(|p| p.degree()).max().map_or(0, |d| d + 1);
    MonomialIndex::new(ctx.nvars(), bound, ColumnOrder::Dual)
}

impl DualModule {
    pub fn zero(ctx: Arc<RingContext>) -> Self {
        DualModule {
            ctx,
            basis: Vec::new(),
        }
    }

    /// The K-span of `elems` (no closure is taken).
    pub fn span(ctx: Arc<RingContext>, elems: &[Polynomial]) -> Result<Self> {
        for e in elems {
            ctx.check(e)?;
        }
        let refs: Vec<&Polynomial> = elems.iter().collect();
        let index = dual_index(&ctx, &refs);
        let ech = Echelon::from_rows(ctx.field(), elems.iter().map(|e| index.to_vec(e)));
        Ok(DualModule::from_echelon(ctx, &index, &ech))
    }

    fn from_echelon(ctx: Arc<RingContext>, index: &MonomialIndex, ech: &Echelon) -> Self {
        let basis = ech
            .sorted_rows()
            .into_iter()
            .map(|r| index.to_poly(r, ctx.field()))
            .collect();
        DualModule { ctx, basis }
    }

    /// The P-submodule generated by `gens`.
    pub fn closure(ctx: Arc<RingContext>, gens: &[Polynomial]) -> Result<Self> {
        for g in gens {
            ctx.check(g)?;
        }
        let refs: Vec<&Polynomial> = gens.iter().collect();
        let index = dual_index(&ctx, &refs);
        let n = ctx.nvars();
        let mut ech = Echelon::new(ctx.field());
        // contractions of anything already in the span are already spanned
        let mut queue: Vec<Polynomial> = gens.to_vec();
        while let Some(f) = queue.pop() {
            if f.is_zero() || !ech.insert(index.to_vec(&f)) {
                continue;
            }
            queue.extend((0..n).map(|i| contract_monomial(&Exponent::unit(n, i, 1), &f)));
        }
        Ok(DualModule::from_echelon(ctx, &index, &ech))
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    /// Echelon basis, sorted by descending leading monomial.
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Maximal total degree of an element; `None` for the zero module.
    pub fn max_degree(&self) -> Option<u32> {
        self.basis.first().and_then(Polynomial::degree)
    }

    fn index_with(&self, others: &[&DualModule], extra: &[&Polynomial]) -> MonomialIndex {
        let mut polys: Vec<&Polynomial> = self.basis.iter().collect();
        for o in others {
            polys.extend(o.basis.iter());
        }
        polys.extend(extra.iter().copied());
        dual_index(&self.ctx, &polys)
    }

    fn echelon(&self, index: &MonomialIndex) -> Echelon {
        Echelon::from_rows(self.ctx.field(), self.basis.iter().map(|b| index.to_vec(b)))
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        let index = self.index_with(&[], &[f]);
        if f.degree().map_or(false, |d| d >= index.bound()) {
            return false;
        }
        self.echelon(&index).contains(&index.to_vec(f))
    }

    /// Canonical representative of `f` modulo this subspace.
    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        let index = self.index_with(&[], &[f]);
        index.to_poly(&self.echelon(&index).reduce(&index.to_vec(f)), self.ctx.field())
    }

    pub fn is_submodule_of(&self, other: &DualModule) -> bool {
        if self.max_degree() > other.max_degree() {
            return false;
        }
        let index = self.index_with(&[other], &[]);
        let ech = other.echelon(&index);
        self.basis.iter().all(|b| ech.contains(&index.to_vec(b)))
    }

    /// Whether `x_i ∘ W ⊆ W` for every variable.
    pub fn is_closed(&self) -> bool {
        let n = self.ctx.nvars();
        let index = self.index_with(&[], &[]);
        let ech = self.echelon(&index);
        self.basis.iter().all(|b| {
            (0..n).all(|i| ech.contains(&index.to_vec(&contract_monomial(&Exponent::unit(n, i, 1), b))))
        })
    }

    pub fn sum(&self, other: &DualModule) -> Result<DualModule> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        DualModule::span(self.ctx.clone(), &all)
    }

    pub fn intersect(&self, other: &DualModule) -> Result<DualModule> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let index = self.index_with(&[other], &[]);
        let ech = self.echelon(&index).intersect(&other.echelon(&index), index.len());
        Ok(DualModule::from_echelon(self.ctx.clone(), &index, &ech))
    }

    /// The image `p ∘ W`.
    pub fn contract_by(&self, p: &Polynomial) -> Result<DualModule> {
        let imgs = self
            .basis
            .iter()
            .map(|b| contract(p, b))
            .collect::<Result<Vec<_>>>()?;
        DualModule::span(self.ctx.clone(), &imgs)
    }

    /// `m ∘ W`, the span of all `x_i ∘ F`.
    pub fn maximal_contraction(&self) -> DualModule {
        let n = self.ctx.nvars();
        let imgs: Vec<Polynomial> = self
            .basis
            .iter()
            .flat_map(|b| (0..n).map(move |i| contract_monomial(&Exponent::unit(n, i, 1), b)))
            .collect();
        DualModule::span(self.ctx.clone(), &imgs).expect("same context")
    }

    /// Canonical representatives of a basis of `self / sub`.
    pub fn complement_reps(&self, sub: &DualModule) -> Vec<Polynomial> {
        let index = self.index_with(&[sub], &[]);
        let sub_ech = sub.echelon(&index);
        let mut reps = Echelon::new(self.ctx.field());
        for b in &self.basis {
            reps.insert(sub_ech.reduce(&index.to_vec(b)));
        }
        reps.sorted_rows()
            .into_iter()
            .map(|r| index.to_poly(&sub_ech.reduce(r), self.ctx.field()))
            .collect()
    }

    /// Renders the basis in the dual variables.
    pub fn render(&self) -> Vec<String> {
        self.basis.iter().map(|b| self.ctx.render_dual(b)).collect()
    }
}

/// `I^⊥` for an ideal with Artinian quotient.
pub fn perp_ideal(ideal: &Ideal) -> Result<DualModule> {
    let (_, t) = ideal.artinian_truncation(DEFAULT_CEILING, None)?;
    Ok(perp_truncated(&t))
}

/// `I^⊥` inside `D_{≤ degbound}`; requires `degbound + 1 ≥` the Artinian
/// bound of `I`, which is verified.
pub fn perp_ideal_at(ideal: &Ideal, degbound: u32) -> Result<DualModule> {
    let t = ideal.truncated(degbound + 2)?;
    if t.graded_dims()[degbound as usize + 1] != 0 {
        return Err(Error::UnboundedQuotient { ceiling: degbound + 1 });
    }
    Ok(perp_truncated(&t.restrict(degbound + 1)))
}

/// Orthogonal complement of `(I + m^N)/m^N` in `D_{<N}`.
pub fn perp_truncated(t: &TruncatedIdeal) -> DualModule {
    let field = t.context().field();
    let comp: Vec<Polynomial> = t
        .echelon()
        .complement(t.ambient_dim())
        .iter()
        .map(|v| t.index().to_poly(v, field))
        .collect();
    DualModule::span(t.context().clone(), &comp).expect("same context")
}

/// `Ann_P(W)` modulo `m^level`, as a truncated ideal; `level` must exceed
/// the maximal degree of `W`.
pub fn annihilator_at(w: &DualModule, level: u32) -> Result<TruncatedIdeal> {
    if w.max_degree().map_or(false, |d| d >= level) {
        return Err(Error::DegenerateInput(format!(
            "truncation level {level} does not exceed the module degree"
        )));
    }
    let ctx = w.context().clone();
    let index = MonomialIndex::new(ctx.nvars(), level, ColumnOrder::Local);
    let ech = Echelon::from_rows(ctx.field(), w.basis().iter().map(|b| index.to_vec(b)));
    let comp: Vec<SparseVec> = ech.complement(index.len());
    let polys: Vec<Polynomial> = comp.iter().map(|v| index.to_poly(v, ctx.field())).collect();
    TruncatedIdeal::from_span(ctx, level, &polys)
}

/// `W^⊥ = Ann_P(W)`: minimal generators together with the certificate
/// `m^N ⊆ W^⊥` recorded as the truncation degree. The zero module gives
/// the unit ideal.
pub fn perp_module(w: &DualModule) -> Result<Ideal> {
    let ctx = w.context().clone();
    let Some(deg) = w.max_degree() else {
        return Ideal::new(ctx.clone(), vec![ctx.one()]);
    };
    let level = deg + 1;
    let t = annihilator_at(w, level)?;
    Ok(Ideal::new(ctx, t.minimal_generators())?.with_truncation(level))
}

/// Representatives of `W / (m ∘ W)`; they minimally generate `W`.
pub fn minimal_cogenerators(w: &DualModule) -> Vec<Polynomial> {
    w.complement_reps(&w.maximal_contraction())
}

/// Ordered grevlex rendering helper used by reports.
pub fn leading_monomial(p: &Polynomial) -> Option<Exponent> {
    p.leading_term(&MonomialOrder::grevlex()).map(|(e, _)| e.clone())
}
