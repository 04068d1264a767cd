//! Tropical (max-plus) Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::semiring::{t_add, t_mul, Rational, TropValue};

pub type Exponent = Vec<i64>;

/// `F(x) = ⊕ a_ω ⊙ x^ω` with finitely many finite coefficients.
///
/// Terms with coefficient `-inf` are not stored; repeated exponents collapse
/// under `⊕`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TropPolynomial {
    nvars: usize,
    terms: BTreeMap<Exponent, TropValue>,
}

impl TropPolynomial {
    pub fn new<I>(nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Exponent, TropValue)>,
    {
        let mut map: BTreeMap<Exponent, TropValue> = BTreeMap::new();
        for (exp, coef) in terms {
            if exp.len() != nvars {
                return Err(Error::ArityMismatch { expected: nvars, found: exp.len() });
            }
            if !coef.is_finite() {
                continue;
            }
            let slot = map.entry(exp).or_insert(TropValue::NegInf);
            *slot = t_add(*slot, coef);
        }
        if map.is_empty() {
            return Err(Error::EmptySupport);
        }
        Ok(TropPolynomial { nvars, terms: map })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &TropValue)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &[i64]) -> TropValue {
        self.terms.get(exp).copied().unwrap_or(TropValue::NegInf)
    }

    pub fn support(&self) -> Vec<Exponent> {
        self.terms.keys().cloned().collect()
    }

    /// Total degree of the highest monomial.
    pub fn degree(&self) -> i64 {
        self.terms.keys().map(|e| e.iter().sum::<i64>()).max().unwrap_or(0)
    }

    /// `max_ω (a_ω + ω·x)`.
    pub fn eval(&self, x: &[Rational]) -> Result<TropValue> {
        if x.len() != self.nvars {
            return Err(Error::ArityMismatch { expected: self.nvars, found: x.len() });
        }
        Ok(self.terms.iter().map(|(exp, &a)| t_mul(a, TropValue::Finite(dot(exp, x)))).fold(TropValue::NegInf, t_add))
    }

    /// Terms attaining `max_ω (ω·x - sign·a_ω)`, the piecewise-affine
    /// function whose corner locus is the curve for lifting sign `sign`.
    pub fn argmax_lifted(&self, x: &[Rational], sign: Sign) -> Vec<&Exponent> {
        let mut best: Option<Rational> = None;
        let mut winners = Vec::new();
        for (exp, a) in &self.terms {
            let a = a.finite().expect("only finite terms are stored");
            let v = dot(exp, x) - sign.apply(a);
            match best {
                Some(b) if v < b => {}
                Some(b) if v == b => winners.push(exp),
                _ => {
                    best = Some(v);
                    winners.clear();
                    winners.push(exp);
                }
            }
        }
        winners
    }

    /// Adds `c` to every coefficient.
    pub fn shift(&self, c: Rational) -> TropPolynomial {
        TropPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, &v)| (e.clone(), t_mul(v, TropValue::Finite(c)))).collect(),
        }
    }
}

pub(crate) fn dot(exp: &[i64], x: &[Rational]) -> Rational {
    exp.iter().zip(x).map(|(&e, &xi)| xi * e).sum()
}

/// Lifting convention. `Examples` lifts each exponent to height `a_ω` and
/// reads the lower hull; `Kapranov` uses height `-a_ω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Sign {
    #[default]
    Examples,
    Kapranov,
}

impl Sign {
    pub fn factor(self) -> i64 {
        match self {
            Sign::Examples => 1,
            Sign::Kapranov => -1,
        }
    }

    pub fn apply(self, a: Rational) -> Rational {
        a * self.factor()
    }
}

impl fmt::Display for TropPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (exp, coef) in &self.terms {
            if !first {
                f.write_str(" ⊕ ")?;
            }
            first = false;
            write!(f, "{coef}")?;
            for (k, &e) in exp.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "⊙x{}", k + 1)?,
                    _ => write!(f, "⊙x{}^{}", k + 1, e)?,
                }
            }
        }
        Ok(())
    }
}
