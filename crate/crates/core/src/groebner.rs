//! Buchberger's algorithm and ideal arithmetic built on it.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialOrder, OrderKey};
use crate::poly::Polynomial;
use crate::ring::RingContext;
use crate::scalar::{Field, Scalar};

/// Working representation: terms keyed by their order key, so the leading
/// term is the last entry.
type Work = BTreeMap<OrderKey, (Exponent, Scalar)>;

#[derive(Clone, Debug)]
struct GPoly {
    /// Terms in descending order; the first one is the (monic) lead.
    terms: Vec<(OrderKey, Exponent, Scalar)>,
}

impl GPoly {
    fn lead(&self) -> &Exponent {
        &self.terms[0].1
    }

    fn from_work(w: Work) -> Option<GPoly> {
        let terms: Vec<_> = w.into_iter().rev().map(|(k, (e, c))| (k, e, c)).collect();
        if terms.is_empty() {
            return None;
        }
        let inv = terms[0].2.inv();
        Some(GPoly {
            terms: terms.into_iter().map(|(k, e, c)| (k, e, &c * &inv)).collect(),
        })
    }

    fn to_poly(&self, nvars: usize, field: Field) -> Polynomial {
        Polynomial::from_terms(
            nvars,
            field,
            self.terms.iter().map(|(_, e, c)| (e.clone(), c.clone())),
        )
    }
}

fn add_keys(a: &OrderKey, b: &OrderKey) -> OrderKey {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn to_work(p: &Polynomial, order: &MonomialOrder) -> Work {
    p.terms()
        .map(|(e, c)| (order.key(e), (e.clone(), c.clone())))
        .collect()
}

fn work_to_poly(w: &Work, nvars: usize, field: Field) -> Polynomial {
    Polynomial::from_terms(nvars, field, w.values().cloned())
}

/// `w -= c * x^shift * g`, skipping the lead term of `g` when `skip_lead`.
fn sub_multiple(w: &mut Work, c: &Scalar, shift: &Exponent, shift_key: &OrderKey, g: &GPoly, skip_lead: bool) {
    let start = usize::from(skip_lead);
    for (k, e, gc) in &g.terms[start..] {
        let key = add_keys(k, shift_key);
        let t = c * gc;
        match w.entry(key) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert((e.mul(shift), -&t));
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                o.get_mut().1 -= &t;
                if o.get().1.is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Full reduction of `f` by `basis` (all monic).
fn reduce(mut f: Work, basis: &[GPoly], order: &MonomialOrder) -> Work {
    let mut rem = Work::new();
    while let Some((k, (e, c))) = f.pop_last() {
        match basis.iter().find(|g| g.lead().divides(&e)) {
            Some(g) => {
                let shift = e.checked_div(g.lead()).expect("divides");
                let sk = order.key(&shift);
                sub_multiple(&mut f, &c, &shift, &sk, g, true);
            }
            None => {
                rem.insert(k, (e, c));
            }
        }
    }
    rem
}

fn s_poly(f: &GPoly, g: &GPoly, order: &MonomialOrder) -> Work {
    let l = f.lead().lcm(g.lead());
    let sf = l.checked_div(f.lead()).expect("lcm");
    let sg = l.checked_div(g.lead()).expect("lcm");
    let (kf, kg) = (order.key(&sf), order.key(&sg));
    let mut w = Work::new();
    let minus_one = -f.terms[0].2.clone();
    sub_multiple(&mut w, &minus_one, &sf, &kf, f, true);
    sub_multiple(&mut w, &f.terms[0].2, &sg, &kg, g, true);
    w
}

/// Reduced Gröbner basis (monic, sorted by ascending leading monomial).
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder) -> Vec<Polynomial> {
    let Some(first) = gens.first() else {
        return Vec::new();
    };
    let (nvars, field) = (first.nvars(), first.field());
    let mut all: Vec<GPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    // pairs keyed by (key of lcm, i, j) so that selection is deterministic
    let mut pairs: BTreeSet<(OrderKey, usize, usize)> = BTreeSet::new();

    let mut inputs: Vec<Work> = gens.iter().map(|g| to_work(g, order)).collect();
    inputs.sort_by(|a, b| a.keys().last().cmp(&b.keys().last()));
    let mut queue: std::collections::VecDeque<Work> = inputs.into();

    let insert = |h: GPoly, all: &mut Vec<GPoly>, active: &mut Vec<usize>, pairs: &mut BTreeSet<(OrderKey, usize, usize)>| {
        let hi = all.len();
        let hl = h.lead().clone();
        all.push(h);
        // Gebauer–Möller update
        let mut c: Vec<(usize, Exponent)> = active.iter().map(|&g| (g, hl.lcm(all[g].lead()))).collect();
        let mut d: Vec<(usize, Exponent)> = Vec::new();
        while let Some((g, l)) = (!c.is_empty()).then(|| c.remove(0)) {
            let coprime = hl.is_coprime(all[g].lead());
            if coprime || !c.iter().chain(d.iter()).any(|(_, l2)| l2.divides(&l)) {
                d.push((g, l));
            }
        }
        let fresh: Vec<(OrderKey, usize, usize)> = d
            .into_iter()
            .filter(|(g, _)| !hl.is_coprime(all[*g].lead()))
            .map(|(g, l)| (order.key(&l), g, hi))
            .collect();
        pairs.retain(|(_, a, b)| {
            let l = all[*a].lead().lcm(all[*b].lead());
            !(hl.divides(&l)
                && hl.lcm(all[*a].lead()) != l
                && hl.lcm(all[*b].lead()) != l)
        });
        pairs.extend(fresh);
        active.retain(|&g| !hl.divides(all[g].lead()));
        active.push(hi);
    };

    loop {
        let next = if let Some(w) = queue.pop_front() {
            w
        } else if let Some((_, i, j)) = pairs.pop_first() {
            s_poly(&all[i], &all[j], order)
        } else {
            break;
        };
        let basis: Vec<GPoly> = active.iter().map(|&i| all[i].clone()).collect();
        let r = reduce(next, &basis, order);
        if let Some(h) = GPoly::from_work(r) {
            insert(h, &mut all, &mut active, &mut pairs);
        }
    }

    // inter-reduce
    let mut basis: Vec<GPoly> = active.iter().map(|&i| all[i].clone()).collect();
    basis.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    let mut out: Vec<GPoly> = Vec::with_capacity(basis.len());
    for i in 0..basis.len() {
        let others: Vec<GPoly> = basis
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let w: Work = basis[i].terms.iter().map(|(k, e, c)| (k.clone(), (e.clone(), c.clone()))).collect();
        let r = reduce(w, &others, order);
        out.push(GPoly::from_work(r).expect("minimal basis element survives"));
    }
    out.iter().map(|g| g.to_poly(nvars, field)).collect()
}

/// Remainder of `p` modulo a Gröbner basis.
pub fn normal_form_by(p: &Polynomial, gb: &[Polynomial], order: &MonomialOrder) -> Polynomial {
    let basis: Vec<GPoly> = gb
        .iter()
        .filter_map(|g| GPoly::from_work(to_work(g, order)))
        .collect();
    work_to_poly(&reduce(to_work(p, order), &basis, order), p.nvars(), p.field())
}

/// Exact quotient `h / f`, or `None` if `f` does not divide `h`.
pub fn divide_exact(h: &Polynomial, f: &Polynomial) -> Option<Polynomial> {
    let order = MonomialOrder::grevlex();
    let g = GPoly::from_work(to_work(f, &order))?;
    let lc = f.leading_term(&order).expect("nonzero").1.clone();
    let mut w = to_work(h, &order);
    let mut q = Polynomial::zero(h.nvars(), h.field());
    while let Some((_, (e, c))) = w.pop_last() {
        let shift = e.checked_div(g.lead())?;
        let sk = order.key(&shift);
        sub_multiple(&mut w, &c, &shift, &sk, &g, true);
        q.add_term(shift, &c);
    }
    Some(q.scale(&lc.inv()))
}

/// An ideal of `P` given by generators, with per-order Gröbner basis cache.
///
/// With a truncation degree `N`, the ideal stands for `⟨generators⟩ + m^N`.
pub struct Ideal {
    ctx: Arc<RingContext>,
    gens: Vec<Polynomial>,
    truncation: Option<u32>,
    cache: Mutex<HashMap<MonomialOrder, Arc<[Polynomial]>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            truncation: self.truncation,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(|g| self.ctx.render(g)).collect();
        f.debug_struct("Ideal")
            .field("generators", &gens)
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl Ideal {
    pub fn new(ctx: Arc<RingContext>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ctx.check(g)?;
        }
        Ok(Ideal {
            ctx,
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            truncation: None,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn parse(ctx: Arc<RingContext>, gens: &[&str]) -> Result<Ideal> {
        let polys = gens.iter().map(|g| ctx.parse(g)).collect::<Result<Vec<_>>>()?;
        Ideal::new(ctx, polys)
    }

    pub fn zero(ctx: Arc<RingContext>) -> Ideal {
        Ideal::new(ctx, Vec::new()).expect("no generators")
    }

    /// The maximal ideal `⟨x_1, ..., x_n⟩`.
    pub fn maximal(ctx: Arc<RingContext>) -> Ideal {
        let gens = (0..ctx.nvars()).map(|i| ctx.var(i)).collect();
        Ideal::new(ctx, gens).expect("variables")
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn truncation(&self) -> Option<u32> {
        self.truncation
    }

    /// The same generators plus `m^n`.
    pub fn with_truncation(&self, n: u32) -> Ideal {
        Ideal {
            ctx: self.ctx.clone(),
            gens: self.gens.clone(),
            truncation: Some(self.truncation.map_or(n, |t| t.min(n))),
            cache: Mutex::new(HashMap::new()),
        }
    }

    /// Generators including the monomials of `m^N` when truncated.
    pub fn effective_generators(&self) -> Vec<Polynomial> {
        let mut g = self.gens.clone();
        if let Some(n) = self.truncation {
            g.extend(
                Exponent::all_of_degree(self.ctx.nvars(), n)
                    .into_iter()
                    .map(|e| self.ctx.monomial(e)),
            );
        }
        g
    }

    pub fn add_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        for p in extra {
            self.ctx.check(&p)?;
            if !p.is_zero() {
                gens.push(p);
            }
        }
        Ok(Ideal {
            ctx: self.ctx.clone(),
            gens,
            truncation: self.truncation,
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut r = self.add_generators(other.gens.iter().cloned())?;
        r.truncation = match (self.truncation, other.truncation) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        Ok(r)
    }

    /// The reduced Gröbner basis for `order`, computed once and cached.
    pub fn groebner_basis(&self, order: &MonomialOrder) -> Arc<[Polynomial]> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(order) {
            return gb.clone();
        }
        let gb: Arc<[Polynomial]> = buchberger(&self.effective_generators(), order).into();
        self.cache
            .lock()
            .expect("cache lock")
            .entry(order.clone())
            .or_insert(gb)
            .clone()
    }

    pub fn normal_form(&self, p: &Polynomial, order: &MonomialOrder) -> Result<Polynomial> {
        self.ctx.check(p)?;
        Ok(normal_form_by(p, &self.groebner_basis(order), order))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p, &MonomialOrder::grevlex())?.is_zero())
    }

    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        for g in other.effective_generators() {
            if !self.contains(&g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals (identical reduced grevlex bases).
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let o = MonomialOrder::grevlex();
        Ok(self.groebner_basis(&o)[..] == other.groebner_basis(&o)[..])
    }

    pub fn is_unit(&self) -> bool {
        self.groebner_basis(&MonomialOrder::grevlex())
            .iter()
            .any(|g| g.degree() == Some(0))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(Polynomial::is_homogeneous)
    }

    /// Whether `K[x]/I` is finite-dimensional (every variable has a pure
    /// power among the leading monomials).
    pub fn is_zero_dimensional(&self) -> bool {
        let o = MonomialOrder::grevlex();
        let gb = self.groebner_basis(&o);
        let n = self.ctx.nvars();
        (0..n).all(|i| {
            gb.iter().any(|g| {
                let (e, _) = g.leading_term(&o).expect("nonzero");
                e.entries()
                    .iter()
                    .enumerate()
                    .all(|(j, &v)| j == i || v == 0)
            })
        })
    }

    /// Standard monomials of the grevlex basis, if finitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Exponent>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let o = MonomialOrder::grevlex();
        let gb = self.groebner_basis(&o);
        let leads: Vec<Exponent> = gb
            .iter()
            .map(|g| g.leading_term(&o).expect("nonzero").0.clone())
            .collect();
        let mut out = Vec::new();
        let mut deg = 0;
        loop {
            let layer: Vec<Exponent> = Exponent::all_of_degree(self.ctx.nvars(), deg)
                .into_iter()
                .filter(|e| !leads.iter().any(|l| l.divides(e)))
                .collect();
            if layer.is_empty() {
                return Some(out);
            }
            out.extend(layer);
            deg += 1;
        }
    }

    /// `I ∩ J` by eliminating `t` from `t·I + (1−t)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let field = self.ctx.field();
        let n = self.ctx.nvars();
        let t = Polynomial::var(n + 1, field, 0);
        let one_minus_t = &Polynomial::one(n + 1, field) - &t;
        let mut gens: Vec<Polynomial> = self
            .effective_generators()
            .iter()
            .map(|g| &t * &g.prepend_vars(1))
            .collect();
        gens.extend(
            other
                .effective_generators()
                .iter()
                .map(|g| &one_minus_t * &g.prepend_vars(1)),
        );
        let order = MonomialOrder::block_elimination(1);
        let gb = buchberger(&gens, &order);
        let result: Vec<Polynomial> = gb.iter().filter_map(|g| g.drop_leading_vars(1)).collect();
        let mut r = Ideal::new(self.ctx.clone(), result)?;
        if let (Some(a), Some(b)) = (self.truncation, other.truncation) {
            r.truncation = Some(a.max(b));
        }
        Ok(r)
    }

    /// `(I : f) = {p : p f ∈ I}`.
    pub fn colon(&self, f: &Polynomial) -> Result<Ideal> {
        self.ctx.check(f)?;
        if f.is_zero() {
            return Err(Error::InvalidDivisor("colon by the zero polynomial".into()));
        }
        let principal = Ideal::new(self.ctx.clone(), vec![f.clone()])?;
        let inter = self.intersect(&principal)?;
        let gens = inter
            .generators()
            .iter()
            .map(|h| {
                divide_exact(h, f).ok_or_else(|| {
                    Error::Inconsistency("intersection with ⟨f⟩ not divisible by f".into())
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(self.ctx.clone(), gens)
    }

    /// `(I : J)` as the intersection of the colons by the generators of `J`.
    pub fn colon_ideal(&self, other: &Ideal) -> Result<Ideal> {
        let gens = other.effective_generators();
        if gens.is_empty() {
            return Err(Error::InvalidDivisor("colon by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for g in &gens {
            let c = self.colon(g)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersect(&c)?,
            });
        }
        Ok(acc.expect("nonempty"))
    }

    /// Whether `f` is a nonzerodivisor on `P/I`, tested via `(I : f) = I`
    /// on polynomial representatives.
    pub fn is_regular(&self, f: &Polynomial) -> Result<bool> {
        if self.contains(f)? {
            return Err(Error::DegenerateInput(format!(
                "{} lies in the ideal",
                self.ctx.render(f)
            )));
        }
        let c = self.colon(f)?;
        self.contains_ideal(&c)
    }

    /// Searches for `d` random linear forms forming a regular sequence on
    /// `P/I`. Deterministic for a fixed seed.
    pub fn find_linear_regular_sequence(&self, d: usize, trials: usize, seed: u64) -> Result<Vec<Polynomial>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = self.ctx.nvars();
        let field = self.ctx.field();
        let mut chosen = Vec::new();
        let mut current = self.clone();
        let mut used = 0;
        while chosen.len() < d {
            let mut found = None;
            while used < trials {
                used += 1;
                let coeffs: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
                if coeffs.iter().all(|&c| c == 0) {
                    continue;
                }
                let mut l = Polynomial::zero(n, field);
                for (i, &c) in coeffs.iter().enumerate() {
                    l = &l + &self.ctx.var(i).scale(&field.from_int(c));
                }
                match current.is_regular(&l) {
                    Ok(true) => {
                        found = Some(l);
                        break;
                    }
                    Ok(false) | Err(Error::DegenerateInput(_)) => {}
                    Err(e) => return Err(e),
                }
            }
            let l = found.ok_or(Error::SearchExhausted { trials })?;
            current = current.add_generators([l.clone()])?;
            chosen.push(l);
        }
        Ok(chosen)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(vars: &[&str]) -> Arc<RingContext> {
        Arc::new(RingContext::graded(vars, &[]))
    }

    fn ideal(r: &Arc<RingContext>, gens: &[&str]) -> Ideal {
        Ideal::parse(r.clone(), gens).unwrap()
    }

    fn render_all(r: &RingContext, ps: &[Polynomial]) -> Vec<String> {
        ps.iter().map(|p| r.render(p)).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x^2", "x*y", "y^2"]);
        let gb = i.groebner_basis(&MonomialOrder::grevlex());
        assert_eq!(render_all(&r, &gb), vec!["y^2", "x*y", "x^2"]);
    }

    #[test]
    fn normal_form_lex() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x - y"]);
        let nf = i.normal_form(&r.parse("x + y").unwrap(), &MonomialOrder::lex()).unwrap();
        assert_eq!(r.render(&nf), "2*y");
        let j = ideal(&r, &["x"]);
        assert!(j.contains(&r.parse("x^2").unwrap()).unwrap());
    }

    #[test]
    fn twisted_cubic_eliminant() {
        let r = ring(&["z", "y", "x"]);
        let i = ideal(&r, &["y - x^2", "z - x^3"]);
        let lex = MonomialOrder::lex();
        let gb = i.groebner_basis(&lex);
        let rendered: Vec<String> = gb.iter().map(|g| g.render(r.var_names(), &lex)).collect();
        assert!(rendered.contains(&"y - x^2".to_string()), "{rendered:?}");
        assert!(rendered.contains(&"z - x^3".to_string()) || rendered.contains(&"z - x*y".to_string()), "{rendered:?}");
        assert!(i.contains(&r.parse("y^3 - z^2").unwrap()).unwrap());
    }

    #[test]
    fn idempotent_and_order_independent() {
        let r = ring(&["x", "y", "z"]);
        let a = ideal(&r, &["x*y - z", "y^2 - x", "z^2 - y*x"]);
        let b = ideal(&r, &["z^2 - y*x", "x*y - z", "y^2 - x"]);
        let o = MonomialOrder::grevlex();
        assert_eq!(a.groebner_basis(&o)[..], b.groebner_basis(&o)[..]);
        let gb = a.groebner_basis(&o).to_vec();
        assert_eq!(buchberger(&gb, &o), gb);
        let x = ideal(&r, &["x", "x"]);
        assert_eq!(render_all(&r, &x.groebner_basis(&o)), vec!["x"]);
    }

    #[test]
    fn intersections() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x"]).intersect(&ideal(&r, &["y"])).unwrap();
        assert!(i.same_ideal(&ideal(&r, &["x*y"])).unwrap());
        let j = ideal(&r, &["x^2"]).intersect(&ideal(&r, &["x^3"])).unwrap();
        assert!(j.same_ideal(&ideal(&r, &["x^3"])).unwrap());
        let k = ideal(&r, &["x^2", "y"]).intersect(&ideal(&r, &["x", "y^2"])).unwrap();
        assert!(k.same_ideal(&ideal(&r, &["x^2", "x*y", "y^2"])).unwrap());
    }

    #[test]
    fn colons() {
        let r = ring(&["x", "y"]);
        let x = r.parse("x").unwrap();
        let c = ideal(&r, &["x^2"]).colon(&x).unwrap();
        assert!(c.same_ideal(&ideal(&r, &["x"])).unwrap());
        let c = ideal(&r, &["x*y"]).colon_ideal(&ideal(&r, &["x"])).unwrap();
        assert!(c.same_ideal(&ideal(&r, &["y"])).unwrap());
        assert!(matches!(
            ideal(&r, &["x"]).colon(&r.zero()),
            Err(Error::InvalidDivisor(_))
        ));
    }

    #[test]
    fn regularity() {
        let r = ring(&["x", "y"]);
        let x = r.parse("x").unwrap();
        assert!(ideal(&r, &["y"]).is_regular(&x).unwrap());
        assert!(!ideal(&r, &["x*y"]).is_regular(&x).unwrap());
        assert!(matches!(
            ideal(&r, &["x"]).is_regular(&x),
            Err(Error::DegenerateInput(_))
        ));
    }

    #[test]
    fn regular_sequence_search() {
        let r = ring(&["x", "y"]);
        let i = ideal(&r, &["x*y"]);
        let seq = i.find_linear_regular_sequence(1, 50, 0).unwrap();
        assert_eq!(seq.len(), 1);
        let l = &seq[0];
        assert!(!l.coeff(&Exponent::new(vec![1, 0])).is_zero());
        assert!(!l.coeff(&Exponent::new(vec![0, 1])).is_zero());
        assert_eq!(i.find_linear_regular_sequence(1, 50, 0).unwrap(), seq);
        let a = ideal(&r, &["x^2", "y^2"]);
        assert!(a.find_linear_regular_sequence(0, 10, 0).unwrap().is_empty());
        assert_eq!(
            a.find_linear_regular_sequence(1, 10, 0),
            Err(Error::SearchExhausted { trials: 10 })
        );
    }

    #[test]
    fn exact_division() {
        let r = ring(&["x", "y"]);
        let h = r.parse("x^3 - x*y^2").unwrap();
        let f = r.parse("x + y").unwrap();
        assert_eq!(r.render(&divide_exact(&h, &f).unwrap()), "x^2 - x*y");
        assert!(divide_exact(&r.parse("x^2 + 1").unwrap(), &f).is_none());
    }
}
