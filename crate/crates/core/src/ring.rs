//! Ring contexts: coefficient field, variable names, and the y/z partition.

use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::{Exponent, MonomialOrder};
use crate::parse;
use crate::poly::Polynomial;
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// The polynomial ring `K[x]`.
    Graded,
    /// The power series ring `K[[x]]`, handled through truncations.
    Local,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Graded => write!(f, "graded"),
            Mode::Local => write!(f, "local"),
        }
    }
}

/// Field, variables and the designated z-block `z_1, ..., z_d`.
///
/// Variable names are lowercase identifiers; the dual variable of `x` is
/// printed as `X`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    field: Field,
    vars: Vec<String>,
    dual_vars: Vec<String>,
    mode: Mode,
    zvars: Vec<usize>,
}

fn valid_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(field: Field, vars: &[S], mode: Mode, zvars: &[S]) -> Result<Self> {
        let vars: Vec<String> = vars.iter().map(|s| s.as_ref().to_string()).collect();
        if vars.is_empty() {
            return Err(Error::DegenerateInput("ring needs at least one variable".into()));
        }
        for (i, v) in vars.iter().enumerate() {
            if !valid_name(v) {
                return Err(Error::DegenerateInput(format!(
                    "invalid variable name `{v}` (use lowercase letters, digits, `_`)"
                )));
            }
            if vars[..i].contains(v) {
                return Err(Error::DegenerateInput(format!("duplicate variable `{v}`")));
            }
        }
        let mut zidx = Vec::new();
        for z in zvars {
            let z = z.as_ref();
            let i = vars
                .iter()
                .position(|v| v == z)
                .ok_or_else(|| Error::DegenerateInput(format!("unknown z-variable `{z}`")))?;
            if zidx.contains(&i) {
                return Err(Error::DegenerateInput(format!("duplicate z-variable `{z}`")));
            }
            zidx.push(i);
        }
        let dual_vars = vars.iter().map(|v| v.to_uppercase()).collect();
        Ok(RingContext {
            field,
            vars,
            dual_vars,
            mode,
            zvars: zidx,
        })
    }

    /// Convenience constructor for tests and examples.
    pub fn graded(vars: &[&str], zvars: &[&str]) -> Self {
        RingContext::new(Field::Rational, vars, Mode::Graded, zvars).expect("valid ring")
    }

    pub fn local(vars: &[&str], zvars: &[&str]) -> Self {
        RingContext::new(Field::Rational, vars, Mode::Local, zvars).expect("valid ring")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn dual_names(&self) -> &[String] {
        &self.dual_vars
    }

    /// Number of z-variables.
    pub fn d(&self) -> usize {
        self.zvars.len()
    }

    /// Indices of `z_1, ..., z_d`.
    pub fn zvars(&self) -> &[usize] {
        &self.zvars
    }

    pub fn yvars(&self) -> Vec<usize> {
        (0..self.nvars()).filter(|i| !self.zvars.contains(i)).collect()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn with_zvars(&self, zvars: Vec<usize>) -> Self {
        assert!(zvars.iter().all(|&i| i < self.nvars()));
        RingContext {
            zvars,
            ..self.clone()
        }
    }

    pub fn with_field(&self, field: Field) -> Self {
        RingContext {
            field,
            ..self.clone()
        }
    }

    pub fn with_mode(&self, mode: Mode) -> Self {
        RingContext {
            mode,
            ..self.clone()
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.nvars(), self.field)
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.nvars(), self.field)
    }

    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial::var(self.nvars(), self.field, i)
    }

    pub fn monomial(&self, e: Exponent) -> Polynomial {
        Polynomial::monomial(e, self.field.one())
    }

    /// `z_1^{m_1} ... z_d^{m_d}` as an exponent.
    pub fn z_power(&self, m: &[u32]) -> Exponent {
        assert_eq!(m.len(), self.d());
        let mut e = vec![0; self.nvars()];
        for (k, &i) in self.zvars.iter().enumerate() {
            e[i] = m[k];
        }
        Exponent::new(e)
    }

    /// Parses a polynomial in the ring variables.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(text, &self.vars, self.field)
    }

    /// Parses a polynomial in the dual variables.
    pub fn parse_dual(&self, text: &str) -> Result<Polynomial> {
        parse::parse_polynomial(text, &self.dual_vars, self.field)
    }

    pub fn render(&self, p: &Polynomial) -> String {
        p.render(&self.vars, &MonomialOrder::grevlex())
    }

    pub fn render_dual(&self, p: &Polynomial) -> String {
        p.render(&self.dual_vars, &MonomialOrder::grevlex())
    }

    pub(crate) fn check(&self, p: &Polynomial) -> Result<()> {
        if p.nvars() != self.nvars() || p.field() != self.field {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.vars.join(","), self.mode)?;
        if !self.zvars.is_empty() {
            let z: Vec<&str> = self.zvars.iter().map(|&i| self.vars[i].as_str()).collect();
            write!(f, " z = {}", z.join(","))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_and_dual_names() {
        let r = RingContext::local(&["x", "y", "z", "w"], &["x"]);
        assert_eq!(r.d(), 1);
        assert_eq!(r.yvars(), vec![1, 2, 3]);
        assert_eq!(r.dual_names()[3], "W");
        assert_eq!(r.z_power(&[3]), Exponent::new(vec![3, 0, 0, 0]));
    }

    #[test]
    fn rejects_bad_names() {
        assert!(RingContext::new(Field::Rational, &["X"], Mode::Graded, &[]).is_err());
        assert!(RingContext::new(Field::Rational, &["x", "x"], Mode::Graded, &[]).is_err());
        assert!(RingContext::new(Field::Rational, &["x"], Mode::Graded, &["q"]).is_err());
    }
}
