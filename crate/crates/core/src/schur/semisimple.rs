//! The semisimplicity criterion polynomial and specialization reports.

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::combinatorics::{enumerate_multipartitions, MultiPartition};
use crate::polynomial::{rational_pow, LaurentPoly, Monomial, ParamSpec, RationalJson, VarContext};

use super::factored::{schur_factored, HookFactor};

/// P(q; Q_0..Q_{d-1}) = prod_{i=1..r} [i]_q
/// * prod_{s<t} prod_{-r<k<r} (q^k Q_s - Q_t).
///
/// The algebra is split semisimple exactly when this does not vanish.
/// For r = 0 the product is empty and P = 1.
pub fn semisimplicity_poly(d: usize, r: usize) -> LaurentPoly {
    assert!(d >= 1, "need d >= 1");
    let ctx = VarContext::Params { d };
    let mut factors = Vec::new();
    for i in 1..=r {
        factors.push(LaurentPoly::q_integer(ctx, i as u64));
    }
    for s in 0..d {
        for t in s + 1..d {
            for k in -(r as i64) + 1..r as i64 {
                let mut es = vec![0; d];
                es[s] = 1;
                let mut et = vec![0; d];
                et[t] = 1;
                factors.push(
                    &LaurentPoly::monomial(ctx, 1, Monomial::new(k, es))
                        - &LaurentPoly::monomial(ctx, 1, Monomial::new(0, et)),
                );
            }
        }
    }
    LaurentPoly::product(ctx, factors)
}

/// The exact value of a Schur element at a specialization, together with
/// the factors of the cancellation-free form that vanish there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VanishingReport {
    #[serde(serialize_with = "serialize_rational")]
    pub value: BigRational,
    pub vanishing_factors: Vec<HookFactor>,
    pub irreducible: bool,
}

fn serialize_rational<S: serde::Serializer>(
    v: &BigRational,
    serializer: S,
) -> Result<S::Ok, S::Error> {
    RationalJson::from(v).serialize(serializer)
}

/// Evaluates the cancellation-free form of the Schur element of `lambda`
/// factor by factor.
///
/// Diagonal factors are evaluated as q-integers [h]_q, which absorbs the
/// (q-1)^{-r} prefactor and keeps q = 1 well-defined ([h]_1 = h). The
/// value is zero exactly when some factor vanishes, and the module is
/// flagged irreducible exactly when the value is nonzero.
pub fn vanishing_report(lambda: &MultiPartition, spec: &ParamSpec) -> VanishingReport {
    assert_eq!(spec.arity(), lambda.d(), "specialization arity mismatch");
    let sf = schur_factored(lambda);
    let q = spec.q();
    let one = BigRational::one();

    let mut value = rational_pow(q, sf.q_exp);
    if sf.sign < 0 {
        value = -value;
    }
    let mut vanishing = Vec::new();
    for f in &sf.factors {
        let fv = if f.s == f.t {
            q_integer_value(q, f.h as u64)
        } else {
            rational_pow(q, f.h) * &spec.params()[f.s] / &spec.params()[f.t] - &one
        };
        if fv.is_zero() {
            vanishing.push(*f);
        } else {
            value *= fv;
        }
    }
    if !vanishing.is_empty() {
        value = BigRational::zero();
    }
    let irreducible = !value.is_zero();
    VanishingReport { value, vanishing_factors: vanishing, irreducible }
}

/// [h]_q at an exact rational q; h at q = 1, else (q^h - 1)/(q - 1).
fn q_integer_value(q: &BigRational, h: u64) -> BigRational {
    if q.is_one() {
        BigRational::from_integer(h.into())
    } else {
        (rational_pow(q, h as i64) - BigRational::one()) / (q - &BigRational::one())
    }
}

/// Outcome of the semisimplicity test at one specialization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleVerdict {
    pub semisimple: bool,
    /// First multipartition (in enumeration order) whose Schur element
    /// vanishes, when not semisimple.
    pub witness: Option<MultiPartition>,
}

/// Tests whether every Schur element over P(d, r) is nonzero at `spec`.
/// Agrees with nonvanishing of [`semisimplicity_poly`] at the same point.
pub fn semisimple_at(d: usize, r: usize, spec: &ParamSpec) -> SemisimpleVerdict {
    for lambda in enumerate_multipartitions(d, r) {
        if !vanishing_report(&lambda, spec).irreducible {
            return SemisimpleVerdict { semisimple: false, witness: Some(lambda) };
        }
    }
    SemisimpleVerdict { semisimple: true, witness: None }
}
