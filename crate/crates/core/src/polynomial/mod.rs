//! Exact sparse Laurent polynomials in q and Q_0..Q_{d-1} (or in the
//! auxiliary pair (q, y)), with arbitrary-precision integer coefficients.
//!
//! The representation is canonical: no zero coefficients are stored, and
//! two polynomials are equal iff their term maps are equal. Exponents may
//! be negative. No division is ever performed; quotients live in
//! [`RationalFn`] and are compared by cross-multiplication.

mod json;
mod rational;

pub use json::{RationalJson, TermJson};
pub use rational::{parse_rational, ParamSpec, RationalFn};

use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::collections::BinaryHeap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Errors from rational-function construction, specialization, and parsing.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("specialization hits a pole of the unreduced representation")]
    Pole,
    #[error("parameter {0} must be a nonzero rational")]
    ZeroParameter(String),
    #[error("cannot parse {0:?} as an exact rational (use p/q or integer notation)")]
    BadRational(String),
}

/// The variable set a polynomial lives over: q plus either the parameters
/// Q_0..Q_{d-1} or the single auxiliary indeterminate y.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum VarContext {
    Params { d: usize },
    Aux,
}

impl VarContext {
    /// Number of variables besides q.
    pub fn arity(self) -> usize {
        match self {
            VarContext::Params { d } => d,
            VarContext::Aux => 1,
        }
    }

    fn var_name(self, idx: usize) -> String {
        match self {
            VarContext::Params { .. } => format!("Q{idx}"),
            VarContext::Aux => "y".to_string(),
        }
    }
}

/// Exponent vector of a single term: the power of q plus one power per
/// remaining variable. Ordering is (e_q, then e_Q lexicographic).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Monomial {
    pub e_q: i64,
    pub e_params: Vec<i64>,
}

impl Monomial {
    pub fn new(e_q: i64, e_params: Vec<i64>) -> Self {
        Monomial { e_q, e_params }
    }

    /// The exponent vector of the constant term.
    pub fn unit(arity: usize) -> Self {
        Monomial::new(0, vec![0; arity])
    }

    fn combine(&self, other: &Monomial) -> Monomial {
        Monomial {
            e_q: self.e_q + other.e_q,
            e_params: self
                .e_params
                .iter()
                .zip(&other.e_params)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

/// A sparse Laurent polynomial over a fixed [`VarContext`].
///
/// Arithmetic panics if the operands' contexts differ; mixing contexts is
/// a programming error, not a data error.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPoly {
    ctx: VarContext,
    terms: BTreeMap<Monomial, BigInt>,
}

impl LaurentPoly {
    pub fn zero(ctx: VarContext) -> Self {
        LaurentPoly { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::constant(ctx, 1)
    }

    pub fn constant(ctx: VarContext, c: impl Into<BigInt>) -> Self {
        Self::monomial(ctx, c, Monomial::unit(ctx.arity()))
    }

    /// The single-term polynomial c * q^e_q * prod v_s^e_s. A zero
    /// coefficient yields the zero polynomial. Panics if the key arity
    /// does not match the context.
    pub fn monomial(ctx: VarContext, c: impl Into<BigInt>, key: Monomial) -> Self {
        assert_eq!(
            key.e_params.len(),
            ctx.arity(),
            "monomial arity mismatch with context"
        );
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(key, c);
        }
        LaurentPoly { ctx, terms }
    }

    /// The polynomial q^e.
    pub fn q_pow(ctx: VarContext, e: i64) -> Self {
        Self::monomial(ctx, 1, Monomial::new(e, vec![0; ctx.arity()]))
    }

    /// The polynomial v_s (one of Q_0..Q_{d-1}, or y in the aux context).
    pub fn param(ctx: VarContext, s: usize) -> Self {
        Self::param_pow(ctx, s, 1)
    }

    /// The polynomial v_s^e.
    pub fn param_pow(ctx: VarContext, s: usize, e: i64) -> Self {
        assert!(s < ctx.arity(), "parameter index out of range");
        let mut e_params = vec![0; ctx.arity()];
        e_params[s] = e;
        Self::monomial(ctx, 1, Monomial::new(0, e_params))
    }

    /// The q-integer [m]_q = q^{m-1} + ... + q + 1 (and [0]_q = 0).
    pub fn q_integer(ctx: VarContext, m: u64) -> Self {
        let mut terms = BTreeMap::new();
        for e in 0..m as i64 {
            terms.insert(Monomial::new(e, vec![0; ctx.arity()]), BigInt::one());
        }
        LaurentPoly { ctx, terms }
    }

    pub fn ctx(&self) -> VarContext {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit(self.ctx.arity()))
                .is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in canonical (e_q, e_Q lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    fn check_ctx(&self, other: &LaurentPoly) {
        assert_eq!(self.ctx, other.ctx, "polynomial context (arity) mismatch");
    }

    fn add_term(terms: &mut BTreeMap<Monomial, BigInt>, key: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match terms.entry(key) {
            Entry::Vacant(v) => {
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Product of an arbitrary collection of factors, smallest pairs first.
    ///
    /// All Schur-element assemblies are products of many near-linear
    /// factors; multiplying small intermediates together first keeps the
    /// running term counts close to the final size.
    pub fn product(ctx: VarContext, factors: impl IntoIterator<Item = LaurentPoly>) -> LaurentPoly {
        let mut heap: BinaryHeap<(Reverse<usize>, usize)> = BinaryHeap::new();
        let mut store: Vec<Option<LaurentPoly>> = Vec::new();
        for f in factors {
            heap.push((Reverse(f.num_terms()), store.len()));
            store.push(Some(f));
        }
        while heap.len() > 1 {
            let (_, i) = heap.pop().expect("len > 1");
            let (_, j) = heap.pop().expect("len > 1");
            let a = store[i].take().expect("heap indices are live");
            let b = store[j].take().expect("heap indices are live");
            let p = &a * &b;
            heap.push((Reverse(p.num_terms()), store.len()));
            store.push(Some(p));
        }
        match heap.pop() {
            Some((_, i)) => store[i].take().expect("live"),
            None => LaurentPoly::one(ctx),
        }
    }

    /// Exact substitution of the parameters; total because the spec
    /// guarantees nonzero bases for the negative exponents.
    pub fn evaluate(&self, spec: &ParamSpec) -> BigRational {
        assert_eq!(
            spec.arity(),
            self.ctx.arity(),
            "specialization arity mismatch"
        );
        let mut acc = BigRational::zero();
        for (key, c) in &self.terms {
            let mut term = BigRational::from(c.clone()) * rational_pow(spec.q(), key.e_q);
            for (s, &e) in key.e_params.iter().enumerate() {
                if e != 0 {
                    term *= rational_pow(&spec.params()[s], e);
                }
            }
            acc += term;
        }
        acc
    }

    /// The polynomial with parameters s and t exchanged in every term.
    pub fn swap_params(&self, s: usize, t: usize) -> LaurentPoly {
        assert!(s < self.ctx.arity() && t < self.ctx.arity());
        let terms = self
            .terms
            .iter()
            .map(|(key, c)| {
                let mut e_params = key.e_params.clone();
                e_params.swap(s, t);
                (Monomial::new(key.e_q, e_params), c.clone())
            })
            .collect();
        LaurentPoly { ctx: self.ctx, terms }
    }
}

/// base^e for a nonzero rational base and a (possibly negative) exponent.
pub(crate) fn rational_pow(base: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let mag = e.unsigned_abs() as u32;
    let p = num_traits::pow::pow(base.clone(), mag as usize);
    if e < 0 {
        p.recip()
    } else {
        p
    }
}

impl std::ops::Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_ctx(rhs);
        let mut terms = self.terms.clone();
        for (key, c) in &rhs.terms {
            LaurentPoly::add_term(&mut terms, key.clone(), c.clone());
        }
        LaurentPoly { ctx: self.ctx, terms }
    }
}

impl std::ops::Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl std::ops::Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        let terms = self.terms.iter().map(|(k, c)| (k.clone(), -c)).collect();
        LaurentPoly { ctx: self.ctx, terms }
    }
}

impl std::ops::Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.check_ctx(rhs);
        let (small, big) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut terms = BTreeMap::new();
        for (ka, ca) in &small.terms {
            for (kb, cb) in &big.terms {
                LaurentPoly::add_term(&mut terms, ka.combine(kb), ca * cb);
            }
        }
        LaurentPoly { ctx: self.ctx, terms }
    }
}

impl fmt::Display for LaurentPoly {
    /// Human form, e.g. `q + 1` or `1 - Q0*Q1^-1`. Terms with any negative
    /// exponent sort last; within a group, higher exponents print first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Monomial> = self.terms.keys().collect();
        keys.sort_by_key(|k| {
            let has_neg = k.e_q < 0 || k.e_params.iter().any(|&e| e < 0);
            (has_neg, Reverse((k.e_q, k.e_params.clone())))
        });
        for (idx, key) in keys.iter().enumerate() {
            let c = &self.terms[*key];
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut atoms: Vec<String> = Vec::new();
            if key.e_q != 0 {
                atoms.push(pow_atom("q", key.e_q));
            }
            for (s, &e) in key.e_params.iter().enumerate() {
                if e != 0 {
                    atoms.push(pow_atom(&self.ctx.var_name(s), e));
                }
            }
            let mag = c.magnitude();
            if atoms.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", atoms.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

fn pow_atom(name: &str, e: i64) -> String {
    if e == 1 {
        name.to_string()
    } else {
        format!("{name}^{e}")
    }
}
