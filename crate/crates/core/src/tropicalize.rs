//! Valuation maps from symbolic polynomials to tropical objects.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::polynomial::TropPolynomial;
use crate::semiring::{t_add, t_mul, t_scale, Rational, TropValue};
use crate::symbolic::SymbolicPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tropicalized {
    Value(TropValue),
    Poly(TropPolynomial),
}

impl Tropicalized {
    pub fn value(&self) -> Option<TropValue> {
        match self {
            Tropicalized::Value(v) => Some(*v),
            Tropicalized::Poly(_) => None,
        }
    }

    pub fn poly(&self) -> Option<&TropPolynomial> {
        match self {
            Tropicalized::Value(_) => None,
            Tropicalized::Poly(p) => Some(p),
        }
    }
}

/// Replaces every scalar by `0`, `+` by `⊕`, `·` by `⊙`, and each valued
/// variable by its valuation. Variables listed in `free` become the
/// variables of the resulting tropical polynomial, in that order.
///
/// Terms that meet a variable of valuation `-inf` drop out. Cancellation in
/// the classical polynomial is not undone: only the monomials that survive
/// are tropicalized.
pub fn tropicalize(p: &SymbolicPoly, val: &BTreeMap<String, TropValue>, free: &[&str]) -> Result<Tropicalized> {
    for v in p.occurring_vars() {
        if !val.contains_key(v) && !free.contains(&v) {
            return Err(Error::UnmappedVariable(v.to_string()));
        }
    }
    let free_idx: Vec<Option<usize>> = free.iter().map(|f| p.vars().iter().position(|v| v == f)).collect();
    let mut terms = Vec::with_capacity(p.len());
    for (e, _) in p.terms() {
        let mut acc = TropValue::ONE;
        for (k, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if let Some(a) = val.get(&p.vars()[k]) {
                acc = t_mul(acc, t_scale(Rational::from_integer(x as i64), *a));
            }
        }
        let exp: Vec<i64> = free_idx.iter().map(|k| k.map_or(0, |k| e[k] as i64)).collect();
        terms.push((exp, acc));
    }
    if free.is_empty() {
        return Ok(Tropicalized::Value(terms.into_iter().map(|(_, a)| a).fold(TropValue::NegInf, t_add)));
    }
    TropPolynomial::new(free.len(), terms).map(Tropicalized::Poly)
}

/// Symbolic mode: every occurring variable stays free.
pub fn tropicalize_symbolic(p: &SymbolicPoly, free: &[&str]) -> Result<TropPolynomial> {
    match tropicalize(p, &BTreeMap::new(), free)? {
        Tropicalized::Poly(t) => Ok(t),
        Tropicalized::Value(_) => Err(Error::Precondition("symbolic mode needs free variables".into())),
    }
}
