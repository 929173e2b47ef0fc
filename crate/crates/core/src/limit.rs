//! Towers of inverse systems of Artinian reductions, limit inverse systems,
//! and reconstruction of the ideal from a limit inverse system.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::artinian::{ColumnOrder, MonomialIndex, TruncatedIdeal, DEFAULT_CEILING};
use crate::duality::{annihilator_at, contract, minimal_cogenerators, perp_truncated, DualModule};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::linalg::{self, Echelon};
use crate::monomial::Exponent;
use crate::poly::Polynomial;
use crate::ring::{Mode, RingContext};

/// A multi-index `m ∈ ℕ^d`.
pub type MultiIndex = Vec<u32>;

/// All `m ∈ {1, ..., bound}^d` in lexicographic order.
pub fn box_indices(d: usize, bound: u32) -> Vec<MultiIndex> {
    let mut out = vec![Vec::new()];
    for _ in 0..d {
        out = out
            .into_iter()
            .flat_map(|m| {
                (1..=bound).map(move |k| {
                    let mut m = m.clone();
                    m.push(k);
                    m
                })
            })
            .collect();
    }
    out
}

fn fmt_index(m: &[u32]) -> String {
    let v: Vec<String> = m.iter().map(|x| x.to_string()).collect();
    format!("({})", v.join(","))
}

/// `I_m = I + ⟨z_1^{m_1}, ..., z_d^{m_d}⟩` without any check.
pub fn reduction(ideal: &Ideal, m: &[u32]) -> Result<Ideal> {
    let ctx = ideal.context();
    if m.len() != ctx.d() {
        return Err(Error::LengthMismatch(m.len(), ctx.d()));
    }
    let extra = ctx.zvars().iter().zip(m).map(|(&i, &k)| ctx.monomial(Exponent::unit(ctx.nvars(), i, k)));
    ideal.add_generators(extra)
}

/// `I_m`, checked to have an Artinian quotient.
pub fn artinian_reduction(ideal: &Ideal, m: &[u32]) -> Result<Ideal> {
    if m.iter().any(|&k| k == 0) {
        return Err(Error::DegenerateInput(format!("reduction index {} must be positive", fmt_index(m))));
    }
    let im = reduction(ideal, m)?;
    match im.artinian_bound() {
        Ok(_) => Ok(im),
        Err(Error::UnboundedQuotient { ceiling }) => Err(Error::Pipeline(format!(
            "I + z^{} is not Artinian below degree {ceiling}; z does not map to a system of parameters",
            fmt_index(m)
        ))),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug)]
pub struct TowerOptions {
    /// Skip the polynomial colon test for regularity of `z`.
    pub trust_regular: bool,
    /// Degree ceiling for Artinian bound searches.
    pub ceiling: u32,
    /// Worker threads for independent stages.
    pub jobs: usize,
}

impl Default for TowerOptions {
    fn default() -> Self {
        TowerOptions {
            trust_regular: false,
            ceiling: DEFAULT_CEILING,
            jobs: 1,
        }
    }
}

/// The modules `W_m = I_m^⊥` for `m ≤ (B, ..., B)`.
#[derive(Clone, Debug)]
pub struct DualTower {
    ctx: Arc<RingContext>,
    bound: u32,
    modules: BTreeMap<MultiIndex, DualModule>,
    artinian_bounds: BTreeMap<MultiIndex, u32>,
}

impl DualTower {
    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn get(&self, m: &[u32]) -> Option<&DualModule> {
        self.modules.get(m)
    }

    pub fn modules(&self) -> &BTreeMap<MultiIndex, DualModule> {
        &self.modules
    }

    /// Smallest `N` with `m^N ⊆ I_m`.
    pub fn artinian_bound(&self, m: &[u32]) -> Option<u32> {
        self.artinian_bounds.get(m).copied()
    }

    /// Checks `z^{m-n} ∘ W_m = W_n` for all `n ≤ m` differing in one
    /// coordinate by one; returns the first failing pair.
    pub fn surjectivity_failure(&self) -> Option<(MultiIndex, MultiIndex)> {
        for (m, w) in &self.modules {
            for i in 0..m.len() {
                if m[i] < 2 {
                    continue;
                }
                let mut n = m.clone();
                n[i] -= 1;
                let z = self.ctx.var(self.ctx.zvars()[i]);
                let img = w.contract_by(&z).expect("same context");
                if Some(&img) != self.modules.get(&n) {
                    return Some((m.clone(), n));
                }
            }
        }
        None
    }
}

fn check_regular_sequence(ideal: &Ideal) -> Result<()> {
    let ctx = ideal.context();
    let mut current = ideal.clone();
    for (k, &i) in ctx.zvars().iter().enumerate() {
        let z = ctx.var(i);
        let name = &ctx.var_names()[i];
        match current.is_regular(&z) {
            Ok(true) => {}
            Ok(false) => {
                return Err(Error::Pipeline(format!(
                    "{name} is a zerodivisor modulo the ideal and the previous z-variables"
                )))
            }
            Err(Error::DegenerateInput(_)) => {
                return Err(Error::Pipeline(format!(
                    "{name} lies in the ideal plus the first {k} z-variables; the quotient has the wrong dimension"
                )))
            }
            Err(e) => return Err(e),
        }
        current = current.add_generators([z])?;
    }
    Ok(())
}

fn tower_stage(ideal: &Ideal, m: &[u32], hint: Option<u32>, ceiling: u32) -> Result<(u32, DualModule)> {
    let im = reduction(ideal, m)?;
    let (n, t) = im.artinian_truncation(ceiling, hint).map_err(|e| match e {
        Error::UnboundedQuotient { ceiling } => Error::Pipeline(format!(
            "I + z^{} is not Artinian below degree {ceiling}",
            fmt_index(m)
        )),
        e => e,
    })?;
    Ok((n, perp_truncated(&t.restrict(n.max(1)))))
}

/// `W_m = I_m^⊥` for all `m ≤ (B, ..., B)`, after verifying that the
/// input belongs to the class handled by the correspondence.
pub fn dual_tower(ideal: &Ideal, bound: u32, opts: &TowerOptions) -> Result<DualTower> {
    let ctx = ideal.context().clone();
    let d = ctx.d();
    if bound == 0 && d > 0 {
        return Err(Error::DegenerateInput("tower bound must be positive".into()));
    }
    if ctx.mode() == Mode::Graded && !ideal.is_homogeneous() {
        return Err(Error::Pipeline(
            "graded mode needs homogeneous generators; use the local ring for other inputs".into(),
        ));
    }
    if d > 0 && !opts.trust_regular {
        check_regular_sequence(ideal)?;
    }
    let ones = vec![1; d];
    let (n1, w1) = tower_stage(ideal, &ones, None, opts.ceiling)?;
    if w1.is_zero() {
        return Err(Error::Pipeline("the ideal is the unit ideal".into()));
    }
    let indices: Vec<MultiIndex> = box_indices(d, bound).into_iter().filter(|m| *m != ones).collect();
    let run = |m: &MultiIndex| -> Result<(u32, DualModule)> {
        let excess: u32 = m.iter().map(|k| k - 1).sum();
        tower_stage(ideal, m, Some(n1 + excess + 1), opts.ceiling)
    };
    let results: Vec<Result<(u32, DualModule)>> = if opts.jobs > 1 && indices.len() > 1 {
        let chunk = indices.len().div_ceil(opts.jobs);
        std::thread::scope(|s| {
            let handles: Vec<_> = indices
                .chunks(chunk)
                .map(|c| s.spawn(move || c.iter().map(run).collect::<Vec<_>>()))
                .collect();
            handles
                .into_iter()
                .flat_map(|h| h.join().expect("tower worker panicked"))
                .collect()
        })
    } else {
        indices.iter().map(run).collect()
    };
    let mut modules = BTreeMap::new();
    let mut artinian_bounds = BTreeMap::new();
    modules.insert(ones.clone(), w1);
    artinian_bounds.insert(ones.clone(), n1);
    for (m, r) in indices.into_iter().zip(results) {
        let (n, w) = r?;
        modules.insert(m.clone(), w);
        artinian_bounds.insert(m, n);
    }
    let base = modules[&ones].dim();
    for (m, w) in &modules {
        let factor: usize = m.iter().map(|&k| k as usize).product();
        if w.dim() != factor * base {
            return Err(Error::Pipeline(format!(
                "length of R_{} is {} but {} × length(R_1) = {}; the quotient is not Cohen–Macaulay with z regular",
                fmt_index(m),
                w.dim(),
                factor,
                factor * base
            )));
        }
    }
    Ok(DualTower {
        ctx,
        bound,
        modules,
        artinian_bounds,
    })
}

/// A compatible family `H_m`, `m ∈ {1..B}^d`, of lists of dual elements.
#[derive(Clone, PartialEq, Eq)]
pub struct LimitInverseSystem {
    ctx: Arc<RingContext>,
    r: usize,
    s: u32,
    bound: u32,
    family: BTreeMap<MultiIndex, Vec<Polynomial>>,
}

impl fmt::Debug for LimitInverseSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (k, v) in &self.family {
            let v: Vec<String> = v.iter().map(|p| self.ctx.render_dual(p)).collect();
            m.entry(&fmt_index(k), &v);
        }
        m.finish()
    }
}

impl LimitInverseSystem {
    /// Assembles a system from explicit data; no validation beyond shape
    /// (see [`verify_lis`]).
    pub fn new(
        ctx: Arc<RingContext>,
        r: usize,
        s: u32,
        bound: u32,
        family: BTreeMap<MultiIndex, Vec<Polynomial>>,
    ) -> Result<Self> {
        for (m, h) in &family {
            if m.len() != ctx.d() {
                return Err(Error::LengthMismatch(m.len(), ctx.d()));
            }
            for p in h {
                ctx.check(p)?;
            }
        }
        Ok(LimitInverseSystem {
            ctx,
            r,
            s,
            bound,
            family,
        })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn d(&self) -> usize {
        self.ctx.d()
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn bound(&self) -> u32 {
        self.bound
    }

    pub fn family(&self) -> &BTreeMap<MultiIndex, Vec<Polynomial>> {
        &self.family
    }

    pub fn get(&self, m: &[u32]) -> Option<&[Polynomial]> {
        self.family.get(m).map(Vec::as_slice)
    }

    pub fn family_mut(&mut self) -> &mut BTreeMap<MultiIndex, Vec<Polynomial>> {
        &mut self.family
    }

    /// `W_m = ⟨H_m⟩_P`.
    pub fn module(&self, m: &[u32]) -> Result<DualModule> {
        let h = self
            .family
            .get(m)
            .ok_or_else(|| Error::DegenerateInput(format!("no H at {}", fmt_index(m))))?;
        DualModule::closure(self.ctx.clone(), h)
    }

    /// Whether `W_m = W'_m` for every index of both systems.
    pub fn equivalent(&self, other: &LimitInverseSystem) -> Result<bool> {
        if self.ctx != other.ctx || self.family.keys().ne(other.family.keys()) {
            return Ok(false);
        }
        for m in self.family.keys() {
            if self.module(m)? != other.module(m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Builds a limit inverse system from a tower by lifting minimal
/// cogenerators of `W_1` along the diagonal.
pub fn section_lift(tower: &DualTower) -> Result<LimitInverseSystem> {
    let ctx = tower.ctx.clone();
    let d = ctx.d();
    let bound = tower.bound;
    let ones = vec![1; d];
    let w1 = tower
        .get(&ones)
        .ok_or_else(|| Error::DegenerateInput("tower lacks W_1".into()))?;
    let h1 = minimal_cogenerators(w1);
    let r = h1.len();
    let s = w1.max_degree().unwrap_or(0);
    let mut family = BTreeMap::new();
    if d == 0 {
        family.insert(Vec::new(), h1);
        return LimitInverseSystem::new(ctx, r, s, bound, family);
    }
    let mut zprod = vec![0; ctx.nvars()];
    for &i in ctx.zvars() {
        zprod[i] = 1;
    }
    let zprod = ctx.monomial(Exponent::new(zprod));
    let mut diagonal: Vec<Vec<Polynomial>> = vec![h1];
    for k in 2..=bound {
        let next = tower
            .get(&vec![k; d])
            .ok_or_else(|| Error::DegenerateInput(format!("tower lacks W_{k}")))?;
        let prev = diagonal.last().expect("nonempty");
        diagonal.push(lift(&ctx, next, prev, &zprod, k)?);
    }
    for m in box_indices(d, bound) {
        let k = *m.iter().max().expect("d > 0");
        let diag = &diagonal[k as usize - 1];
        let shift: Vec<u32> = m.iter().map(|&x| k - x).collect();
        let zs = ctx.monomial(ctx.z_power(&shift));
        let h = diag
            .iter()
            .map(|f| contract(&zs, f))
            .collect::<Result<Vec<_>>>()?;
        family.insert(m, h);
    }
    LimitInverseSystem::new(ctx, r, s, bound, family)
}

/// Solves `(z_1 ⋯ z_d) ∘ F = h` in `W` for each `h`, returning the
/// solution reduced modulo the kernel.
fn lift(ctx: &Arc<RingContext>, w: &DualModule, targets: &[Polynomial], zprod: &Polynomial, k: u32) -> Result<Vec<Polynomial>> {
    let field = ctx.field();
    let basis = w.basis();
    let bound = w.max_degree().map_or(1, |x| x + 1);
    let index = MonomialIndex::new(ctx.nvars(), bound, ColumnOrder::Dual);
    let images: Vec<linalg::SparseVec> = basis
        .iter()
        .map(|b| contract(zprod, b).map(|c| index.to_vec(&c)))
        .collect::<Result<_>>()?;
    let combine = |coeffs: &[crate::scalar::Scalar]| {
        let mut f = ctx.zero();
        for (c, b) in coeffs.iter().zip(basis) {
            if !c.is_zero() {
                f = &f + &b.scale(c);
            }
        }
        f
    };
    let mut out = Vec::with_capacity(targets.len());
    let mut kernel: Option<DualModule> = None;
    for h in targets {
        if h.degree().map_or(false, |d| d >= bound) {
            return Err(Error::Inconsistency(format!("cannot lift {} to stage {k}", ctx.render_dual(h))));
        }
        let sol = linalg::solve(field, &images, &index.to_vec(h), index.len()).ok_or_else(|| {
            Error::Inconsistency(format!(
                "no preimage of {} in W at stage {k}; the tower is not surjective",
                ctx.render_dual(h)
            ))
        })?;
        let ker = kernel.get_or_insert_with(|| {
            let polys: Vec<Polynomial> = sol.kernel.iter().map(|c| combine(c)).collect();
            DualModule::span(ctx.clone(), &polys).expect("same context")
        });
        out.push(ker.reduce(&combine(&sol.particular)));
    }
    Ok(out)
}

/// The coordinate subspace `V^{j,k}_m` of `D` spanned by the monomials
/// `X^a` with `|a| ≤ |m| + k` and `Z_j`-exponent `< m_j − 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VSpace {
    pub j: usize,
    pub k: i64,
    pub m: MultiIndex,
}

impl VSpace {
    pub fn degree_cap(&self) -> i64 {
        self.m.iter().map(|&x| x as i64).sum::<i64>() + self.k
    }

    pub fn contains_monomial(&self, ctx: &RingContext, a: &Exponent) -> bool {
        (a.degree() as i64) <= self.degree_cap()
            && (a.entries()[ctx.zvars()[self.j]] as i64) < self.m[self.j] as i64 - 1
    }

    /// The ideal `⟨x⟩^{|m|+k+1} + ⟨z_j^{m_j−1}⟩` annihilating the space.
    pub fn perp_ideal(&self, ctx: Arc<RingContext>) -> Result<Ideal> {
        let n = ctx.nvars();
        let cap = self.degree_cap();
        let mut gens: Vec<Polynomial> = if cap < 0 {
            vec![ctx.one()]
        } else {
            Exponent::all_of_degree(n, cap as u32 + 1).into_iter().map(|e| ctx.monomial(e)).collect()
        };
        let zj = self.m[self.j].saturating_sub(1);
        gens.push(ctx.monomial(Exponent::unit(n, ctx.zvars()[self.j], zj)));
        Ideal::new(ctx, gens)
    }

    /// `W ∩ V` for a subspace `W` of `D`.
    pub fn intersect(&self, w: &DualModule) -> DualModule {
        let ctx = w.context();
        let bound = w.max_degree().map_or(0, |x| x + 1);
        let dual = MonomialIndex::new(ctx.nvars(), bound, ColumnOrder::Dual);
        // columns outside V first, so rows pivoting inside V lie in V
        let mut order: Vec<usize> = (0..dual.len()).collect();
        order.sort_by_key(|&c| (self.contains_monomial(ctx, dual.exponent(c)), c));
        let mut col = vec![0; dual.len()];
        for (pos, &c) in order.iter().enumerate() {
            col[c] = pos;
        }
        let first_inside = order
            .iter()
            .position(|&c| self.contains_monomial(ctx, dual.exponent(c)))
            .unwrap_or(order.len());
        let ech = Echelon::from_rows(
            ctx.field(),
            w.basis().iter().map(|b| {
                linalg::normalize(dual.to_vec(b).into_iter().map(|(c, x)| (col[c], x)).collect())
            }),
        );
        let inside: Vec<Polynomial> = ech
            .sorted_rows()
            .into_iter()
            .filter(|r| r[0].0 >= first_inside)
            .map(|r| {
                Polynomial::from_terms(
                    ctx.nvars(),
                    ctx.field(),
                    r.iter().map(|(p, x)| (dual.exponent(order[*p]).clone(), x.clone())),
                )
            })
            .collect();
        DualModule::span(ctx.clone(), &inside).expect("same context")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `dim_K H_m = r`.
    Dimension,
    /// `H_1 ≠ 0` and `z_i^{m_i} ∘ H_m = 0`.
    Support,
    /// `W_m ∩ V^{j,s−d}_m ⊆ W_{m−e_j}`.
    Socle,
    /// `max deg H_m = |m| + s − d`.
    Degree,
    /// `z_i ∘ H_m = H_{m−e_i}` entrywise.
    Compatibility,
    /// `max deg H_1 = s` and `max deg H_m ≤ |m| + s − d`.
    DegreeBound,
}

impl Condition {
    pub fn label(&self) -> &'static str {
        match self {
            Condition::Dimension => "a:dimension",
            Condition::Support => "b:support",
            Condition::Socle => "c:socle",
            Condition::Degree => "d:degree",
            Condition::Compatibility => "compatibility",
            Condition::DegreeBound => "degree-bound",
        }
    }
}

/// How degrees in condition (d) are measured.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DegreeConvention {
    /// Total degree in all dual variables.
    Total,
    /// Degree in the Z-variables only.
    ZBlock,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub condition: Condition,
    pub m: MultiIndex,
    pub j: Option<usize>,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default)]
pub struct LisReport {
    pub checks: Vec<CheckResult>,
}

impl LisReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<&CheckResult> {
        self.checks.iter().filter(|c| !c.passed).collect()
    }

    pub fn condition_passed(&self, c: Condition) -> bool {
        self.checks.iter().filter(|x| x.condition == c).all(|x| x.passed)
    }

    /// First failing index for a condition.
    pub fn witness(&self, c: Condition) -> Option<&MultiIndex> {
        self.checks.iter().find(|x| x.condition == c && !x.passed).map(|x| &x.m)
    }

    fn push(&mut self, condition: Condition, m: &[u32], j: Option<usize>, passed: bool, witness: impl FnOnce() -> String) {
        self.checks.push(CheckResult {
            condition,
            m: m.to_vec(),
            j,
            passed,
            witness: (!passed).then(witness),
        });
    }
}

fn z_degree(ctx: &RingContext, p: &Polynomial) -> Option<u32> {
    p.terms()
        .map(|(e, _)| ctx.zvars().iter().map(|&i| e.entries()[i]).sum())
        .max()
}

fn max_degree_with(ctx: &RingContext, h: &[Polynomial], conv: DegreeConvention) -> Option<u32> {
    h.iter()
        .filter_map(|p| match conv {
            DegreeConvention::Total => p.degree(),
            DegreeConvention::ZBlock => z_degree(ctx, p),
        })
        .max()
}

/// Checks the defining conditions of a limit inverse system on every
/// stored index.
pub fn verify_lis(h: &LimitInverseSystem) -> LisReport {
    verify_lis_with(h, DegreeConvention::Total)
}

pub fn verify_lis_with(h: &LimitInverseSystem, conv: DegreeConvention) -> LisReport {
    let ctx = &h.ctx;
    let d = ctx.d();
    let r = h.r;
    let s = h.s as i64;
    let mut report = LisReport::default();
    let ones = vec![1; d];
    let empty = Vec::new();

    let h1 = h.family.get(&ones).unwrap_or(&empty);
    let h1_nonzero = h1.iter().any(|p| !p.is_zero());
    report.push(Condition::Support, &ones, None, h1_nonzero, || "H_1 = 0".into());
    let top = max_degree_with(ctx, h1, conv).map(i64::from);
    report.push(Condition::DegreeBound, &ones, None, top == Some(s), || {
        format!("max deg H_1 = {top:?}, expected {s}")
    });

    let mut modules: BTreeMap<MultiIndex, DualModule> = BTreeMap::new();
    for (m, hm) in &h.family {
        let w = DualModule::closure(ctx.clone(), hm).expect("same context");
        modules.insert(m.clone(), w);
    }

    for (m, hm) in &h.family {
        let dim = DualModule::span(ctx.clone(), hm).expect("same context").dim();
        report.push(Condition::Dimension, m, None, dim == r && hm.len() == r, || {
            format!("H_{} spans {dim} dimensions with {} elements, expected {r}", fmt_index(m), hm.len())
        });

        for (i, &zi) in ctx.zvars().iter().enumerate() {
            let zp = ctx.monomial(Exponent::unit(ctx.nvars(), zi, m[i]));
            let bad = hm.iter().find(|f| !contract(&zp, f).expect("same context").is_zero());
            report.push(Condition::Support, m, Some(i), bad.is_none(), || {
                format!("{}^{} does not kill {}", ctx.var_names()[zi], m[i], ctx.render_dual(bad.expect("failure")))
            });
        }

        let size: i64 = m.iter().map(|&x| x as i64).sum();
        let expected = size + s - d as i64;
        let deg = max_degree_with(ctx, hm, conv).map(i64::from);
        report.push(Condition::Degree, m, None, deg == Some(expected), || {
            format!("max deg H_{} = {deg:?}, expected {expected}", fmt_index(m))
        });
        report.push(
            Condition::DegreeBound,
            m,
            None,
            deg.map_or(true, |x| x <= expected),
            || format!("max deg H_{} = {deg:?} exceeds {expected}", fmt_index(m)),
        );

        for j in 0..d {
            let v = VSpace {
                j,
                k: s - d as i64,
                m: m.clone(),
            };
            let inter = v.intersect(&modules[m]);
            let ok = if m[j] == 1 {
                inter.is_zero()
            } else {
                let mut n = m.clone();
                n[j] -= 1;
                match modules.get(&n) {
                    Some(lower) => inter.is_submodule_of(lower),
                    None => true,
                }
            };
            report.push(Condition::Socle, m, Some(j), ok, || {
                format!("W_{} ∩ V^{{{},{}}} is not contained in the lower stage", fmt_index(m), j + 1, s - d as i64)
            });

            if m[j] >= 2 {
                let mut n = m.clone();
                n[j] -= 1;
                if let Some(hn) = h.family.get(&n) {
                    let z = ctx.var(ctx.zvars()[j]);
                    let img: Vec<Polynomial> = hm.iter().map(|f| contract(&z, f).expect("same context")).collect();
                    let ok = img == *hn;
                    report.push(Condition::Compatibility, m, Some(j), ok, || {
                        format!("z_{} ∘ H_{} differs from H_{}", j + 1, fmt_index(m), fmt_index(&n))
                    });
                }
            }
        }
    }
    report
}

/// Output of [`reconstruct`].
#[derive(Clone, Debug)]
pub struct Reconstruction {
    pub ideal: Ideal,
    /// Earliest diagonal stage whose generators already determine all
    /// deeper stages up to the bound.
    pub stage: u32,
    pub stable: bool,
    /// Truncation level at which the last stage was compared.
    pub level: u32,
}

/// Recovers the ideal from a limit inverse system via `I_k = W_k^⊥` on the
/// diagonal, extracting generators of `I` from the deepest stage.
pub fn reconstruct(h: &LimitInverseSystem) -> Result<Reconstruction> {
    let ctx = h.ctx.clone();
    let d = ctx.d();
    if d == 0 {
        let w = h.module(&[])?;
        let level = w.max_degree().map_or(1, |x| x + 1);
        let t = annihilator_at(&w, level + 1)?;
        let gens = t.minimal_generators();
        return Ok(Reconstruction {
            ideal: Ideal::new(ctx, gens)?,
            stage: 0,
            stable: true,
            level: level + 1,
        });
    }
    let mut stages: Vec<(TruncatedIdeal, Vec<Polynomial>)> = Vec::new();
    for k in 1..=h.bound {
        let w = h.module(&vec![k; d])?;
        if w.is_zero() {
            return Err(Error::Inconsistency(format!("W_{k} is zero")));
        }
        let level = w.max_degree().expect("nonzero") + 2;
        let j = annihilator_at(&w, level)?;
        if let Some((prev, _)) = stages.last() {
            if !j.restrict(prev.level()).is_subspace_of(prev)? {
                return Err(Error::Inconsistency(format!(
                    "W_{k}^⊥ is not contained in W_{}^⊥",
                    k - 1
                )));
            }
        }
        let zk: Vec<Polynomial> = ctx
            .zvars()
            .iter()
            .map(|&i| ctx.monomial(Exponent::unit(ctx.nvars(), i, k)))
            .collect();
        let z_ideal = TruncatedIdeal::from_generators(ctx.clone(), &zk, level)?;
        let sub = j.times_maximal().sum(&z_ideal)?;
        let reps = j.complement_reps(&sub)?;
        stages.push((j, reps));
    }
    let last = stages.len();
    let determines = |a: usize, b: usize| -> Result<bool> {
        let (target, _) = &stages[b];
        let mut gens = stages[a].1.clone();
        let k = b as u32 + 1;
        gens.extend(ctx.zvars().iter().map(|&i| ctx.monomial(Exponent::unit(ctx.nvars(), i, k))));
        let t = TruncatedIdeal::from_generators(ctx.clone(), &gens, target.level())?;
        Ok(&t == target)
    };
    let mut stage = last as u32;
    let mut stable = false;
    for a in (0..last.saturating_sub(1)).rev() {
        let mut all = true;
        for b in a + 1..last {
            if !determines(a, b)? {
                all = false;
                break;
            }
        }
        if !all {
            break;
        }
        stage = a as u32 + 1;
        stable = true;
    }
    let (j, reps) = stages.pop().expect("bound ≥ 1");
    Ok(Reconstruction {
        ideal: Ideal::new(ctx, reps)?,
        stage,
        stable,
        level: j.level(),
    })
}

/// `(d, r, s)`: the number of z-variables, the type of `R`, and the socle
/// degree of `R_1`.
pub fn invariants_of(ideal: &Ideal) -> Result<(usize, usize, u32)> {
    let d = ideal.context().d();
    let i1 = artinian_reduction(ideal, &vec![1; d])?;
    let r = i1.socle_basis()?.len();
    let s = i1.hilbert_data()?.socle_degree().unwrap_or(0) as u32;
    Ok((d, r, s))
}
