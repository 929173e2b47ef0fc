//! Orders and symbols for ideal-adic filtrations, Rees-map dimension
//! checks, monoid ideals and the socle product identity.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::artinian::{TruncatedIdeal, DEFAULT_CEILING};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::monomial::Exponent;
use crate::poly::Polynomial;
use crate::ring::RingContext;

/// A monoid ideal `⟨m_1, ..., m_u⟩ ⊂ ℕ^t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonoidIdeal {
    t: usize,
    generators: Vec<Exponent>,
}

impl MonoidIdeal {
    pub fn new(t: usize, generators: Vec<Exponent>) -> Result<Self> {
        for g in &generators {
            if g.len() != t {
                return Err(Error::LengthMismatch(g.len(), t));
            }
            if g.is_zero() {
                return Err(Error::DegenerateInput("monoid ideal generators must be nonzero".into()));
            }
        }
        if generators.is_empty() {
            return Err(Error::DegenerateInput("monoid ideal needs a generator".into()));
        }
        Ok(MonoidIdeal { t, generators })
    }

    /// `⟨m_1 e_1, ..., m_t e_t⟩`.
    pub fn diagonal(m: &[u32]) -> Result<Self> {
        let t = m.len();
        MonoidIdeal::new(t, m.iter().enumerate().map(|(i, &k)| Exponent::unit(t, i, k)).collect())
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn generators(&self) -> &[Exponent] {
        &self.generators
    }

    pub fn contains(&self, n: &Exponent) -> bool {
        self.generators.iter().any(|g| g.divides(n))
    }

    /// Componentwise maximum of the generators.
    pub fn corner(&self) -> Vec<u32> {
        (0..self.t)
            .map(|i| self.generators.iter().map(|g| g.entries()[i]).max().unwrap_or(0))
            .collect()
    }

    /// `n ∉ M` with `n + e_i ∈ M` for every `i`, scanning `[0, c − 1]`.
    pub fn socle(&self) -> Vec<Exponent> {
        let c = self.corner();
        if c.iter().any(|&x| x == 0) {
            // some direction is never bounded, so nothing is killed by all units
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut n = vec![0u32; self.t];
        loop {
            let e = Exponent::new(n.clone());
            if !self.contains(&e)
                && (0..self.t).all(|i| self.contains(&e.mul(&Exponent::unit(self.t, i, 1))))
            {
                out.push(e);
            }
            let mut i = 0;
            loop {
                if i == self.t {
                    return out;
                }
                n[i] += 1;
                if n[i] < c[i] {
                    break;
                }
                n[i] = 0;
                i += 1;
            }
        }
    }
}

/// The order of an element for a filtration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Order {
    Finite(u32),
    /// In every power up to the cap.
    AtLeast(u32),
    /// Zero in the quotient.
    Infinite,
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::AtLeast(k) => write!(f, ">={k}"),
            Order::Infinite => write!(f, "inf"),
        }
    }
}

/// The `⟨g⟩`-adic filtration on `P/I`.
#[derive(Debug)]
pub struct FiltrationContext {
    base: Ideal,
    g: Vec<Polynomial>,
    powers: Mutex<Vec<Ideal>>,
}

/// All products of `l` elements of `g` (with repetition).
pub fn power_generators(ctx: &RingContext, g: &[Polynomial], l: u32) -> Vec<Polynomial> {
    Exponent::all_of_degree(g.len(), l)
        .into_iter()
        .map(|a| {
            a.entries()
                .iter()
                .zip(g)
                .fold(ctx.one(), |acc, (&k, p)| &acc * &p.pow(k))
        })
        .collect()
}

impl FiltrationContext {
    pub fn new(base: Ideal, g: Vec<Polynomial>) -> Result<Self> {
        for p in &g {
            base.context().check(p)?;
        }
        Ok(FiltrationContext {
            base,
            g,
            powers: Mutex::new(Vec::new()),
        })
    }

    pub fn base(&self) -> &Ideal {
        &self.base
    }

    pub fn filtration_generators(&self) -> &[Polynomial] {
        &self.g
    }

    /// `I + ⟨g⟩^k`.
    pub fn power(&self, k: u32) -> Result<Ideal> {
        let mut cache = self.powers.lock().expect("poisoned");
        while cache.len() <= k as usize {
            let l = cache.len() as u32;
            let next = self.base.add_generators(power_generators(self.base.context(), &self.g, l))?;
            cache.push(next);
        }
        Ok(cache[k as usize].clone())
    }

    /// `max{k : p ∈ I + ⟨g⟩^k}`, searched below `cap`.
    pub fn ord(&self, p: &Polynomial, cap: u32) -> Result<Order> {
        if p.is_zero() || self.base.contains(p)? {
            return Ok(Order::Infinite);
        }
        for k in 1..=cap {
            if !self.power(k)?.contains(p)? {
                return Ok(Order::Finite(k - 1));
            }
        }
        Ok(Order::AtLeast(cap))
    }

    /// The symbol of `p`: its order and its normal form modulo the next
    /// power, a representative of `σ(p) ∈ gr^k`.
    pub fn symbol(&self, p: &Polynomial, cap: u32) -> Result<(Order, Polynomial)> {
        let ord = self.ord(p, cap)?;
        let rep = match ord {
            Order::Finite(k) => self
                .power(k + 1)?
                .normal_form(p, &crate::monomial::MonomialOrder::grevlex())?,
            _ => self.base.context().zero(),
        };
        Ok((ord, rep))
    }
}

/// Whether `g` maps to a regular sequence on `P/I`, tested by colons.
pub fn is_regular_sequence(ideal: &Ideal, g: &[Polynomial]) -> Result<bool> {
    let mut current = ideal.clone();
    for p in g {
        match current.is_regular(p) {
            Ok(true) => {}
            Ok(false) | Err(Error::DegenerateInput(_)) => return Ok(false),
            Err(e) => return Err(e),
        }
        current = current.add_generators([p.clone()])?;
    }
    Ok(!current.is_unit())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReesReport {
    pub l: u32,
    pub degcap: u32,
    pub regular: bool,
    /// `dim (I + g^l)_t / (I + g^{l+1})_t` for `t < degcap`.
    pub gr_dims: Vec<usize>,
    /// `dim ((P/(I + g))[Y]_l)_t` for `t < degcap`.
    pub symmetric_dims: Vec<usize>,
    pub passed: bool,
}

fn graded_dims(ideal: &Ideal, cap: u32) -> Result<Vec<usize>> {
    Ok(ideal.truncated(cap)?.graded_dims())
}

/// Compares the degree-`l` piece of `gr_g(P/I)` with `(P/(I+g))[Y]_l`
/// degree by degree below `degcap`, for homogeneous data.
pub fn rees_dimension_check(ideal: &Ideal, g: &[Polynomial], l: u32, degcap: u32) -> Result<ReesReport> {
    let ctx = ideal.context();
    if !ideal.is_homogeneous() || g.iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::Unsupported("dimension check needs homogeneous ideal and sequence".into()));
    }
    if g.iter().any(|p| p.degree().map_or(true, |d| d == 0)) {
        return Err(Error::DegenerateInput("sequence elements must have positive degree".into()));
    }
    for p in g {
        ctx.check(p)?;
    }
    if !is_regular_sequence(ideal, g)? {
        return Ok(ReesReport {
            l,
            degcap,
            regular: false,
            gr_dims: Vec::new(),
            symmetric_dims: Vec::new(),
            passed: false,
        });
    }
    let filt = FiltrationContext::new(ideal.clone(), g.to_vec())?;
    let low = graded_dims(&filt.power(l)?, degcap)?;
    let high = graded_dims(&filt.power(l + 1)?, degcap)?;
    let gr_dims: Vec<usize> = high.iter().zip(&low).map(|(h, l)| h - l).collect();
    let base = graded_dims(&filt.power(1)?, degcap)?;
    let weights: Vec<u32> = g.iter().map(|p| p.degree().expect("nonzero")).collect();
    let mut symmetric_dims = vec![0; degcap as usize];
    for a in Exponent::all_of_degree(g.len(), l) {
        let shift: u32 = a.entries().iter().zip(&weights).map(|(k, w)| k * w).sum();
        for t in shift..degcap {
            symmetric_dims[t as usize] += base[(t - shift) as usize];
        }
    }
    let passed = gr_dims == symmetric_dims;
    Ok(ReesReport {
        l,
        degcap,
        regular: true,
        gr_dims,
        symmetric_dims,
        passed,
    })
}

#[derive(Clone, Debug)]
pub struct SocleProductReport {
    /// `dim soc(R/⟨h^M⟩)`.
    pub socle_dim: usize,
    pub monoid_socle: Vec<Exponent>,
    /// `dim soc(R/⟨h⟩)`.
    pub base_dim: usize,
    /// `x̄ · h^n` for socle representatives `x` of `R/⟨h⟩` and `n ∈ soc M`.
    pub predicted: Vec<Polynomial>,
    pub predicted_in_socle: bool,
    pub predicted_independent: bool,
    pub passed: bool,
}

fn h_power(ctx: &RingContext, h: &[Polynomial], n: &Exponent) -> Polynomial {
    n.entries().iter().zip(h).fold(ctx.one(), |acc, (&k, p)| &acc * &p.pow(k))
}

/// Checks `dim soc(R/⟨h^M⟩) = |soc M| · dim soc(R/⟨h⟩)` and that the
/// products `x̄ h^n` form a socle basis.
pub fn socle_product_check(ideal: &Ideal, h: &[Polynomial], monoid: &MonoidIdeal) -> Result<SocleProductReport> {
    let ctx: Arc<RingContext> = ideal.context().clone();
    if h.len() != monoid.t() {
        return Err(Error::LengthMismatch(h.len(), monoid.t()));
    }
    let base = ideal.add_generators(h.iter().cloned())?;
    let base_socle = base.socle_basis()?;
    let j = ideal.add_generators(monoid.generators().iter().map(|n| h_power(&ctx, h, n)))?;
    let (n, t) = j.artinian_truncation(DEFAULT_CEILING, None)?;
    let t = t.restrict(n + 1);
    let socle_dim = t.socle().len();
    let monoid_socle = monoid.socle();
    let predicted: Vec<Polynomial> = base_socle
        .iter()
        .flat_map(|x| monoid_socle.iter().map(move |e| (x, e)))
        .map(|(x, e)| x * &h_power(&ctx, h, e))
        .collect();
    let predicted_in_socle = predicted.iter().all(|p| {
        !t.contains(p) && (0..ctx.nvars()).all(|i| t.contains(&(&ctx.var(i) * p)))
    });
    let mut vectors = t.basis();
    vectors.extend(predicted.iter().cloned());
    let spanned = TruncatedIdeal::from_span(ctx.clone(), t.level(), &vectors)?;
    let predicted_independent = spanned.quotient_dim() + predicted.len() == t.quotient_dim();
    let passed = socle_dim == monoid_socle.len() * base_socle.len()
        && predicted_in_socle
        && predicted_independent
        && predicted.len() == socle_dim;
    Ok(SocleProductReport {
        socle_dim,
        monoid_socle,
        base_dim: base_socle.len(),
        predicted,
        predicted_in_socle,
        predicted_independent,
        passed,
    })
}

/// Brute-force socle over an explicit box, for cross-checks.
pub fn monoid_socle_in_box(m: &MonoidIdeal, side: u32) -> BTreeSet<Exponent> {
    Exponent::all_below(m.t(), side * m.t() as u32 + 1)
        .into_iter()
        .filter(|e| e.entries().iter().all(|&x| x < side))
        .filter(|e| !m.contains(e) && (0..m.t()).all(|i| m.contains(&e.mul(&Exponent::unit(m.t(), i, 1)))))
        .collect()
}
