//! Rational functions (unreduced quotients of Laurent polynomials) and
//! exact parameter specializations.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::Zero;

use super::{LaurentPoly, PolyError, VarContext};

/// A quotient num/den of Laurent polynomials. Never reduced to lowest
/// terms; equality is decided by cross-multiplication.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, PolyError> {
        assert_eq!(num.ctx(), den.ctx(), "rational function context mismatch");
        if den.is_zero() {
            return Err(PolyError::ZeroDenominator);
        }
        Ok(RationalFn { num, den })
    }

    /// Embeds a polynomial as the quotient p/1.
    pub fn from_poly(num: LaurentPoly) -> Self {
        let den = LaurentPoly::one(num.ctx());
        RationalFn { num, den }
    }

    pub fn one(ctx: VarContext) -> Self {
        Self::from_poly(LaurentPoly::one(ctx))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn ctx(&self) -> VarContext {
        self.num.ctx()
    }

    /// Multiplies numerators and denominators; no cancellation.
    pub fn mul(&self, rhs: &RationalFn) -> RationalFn {
        RationalFn {
            num: &self.num * &rhs.num,
            den: &self.den * &rhs.den,
        }
    }

    /// Exact equality as rational functions: a.num*b.den = b.num*a.den.
    pub fn equals(&self, rhs: &RationalFn) -> bool {
        &self.num * &rhs.den == &rhs.num * &self.den
    }

    /// Evaluates num/den at the specialization. Fails if the denominator
    /// of this (unreduced) representation vanishes there.
    pub fn evaluate(&self, spec: &ParamSpec) -> Result<BigRational, PolyError> {
        let den = self.den.evaluate(spec);
        if den.is_zero() {
            return Err(PolyError::Pole);
        }
        Ok(self.num.evaluate(spec) / den)
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// An exact specialization q -> q_val, Q_s -> Q_vals[s], all nonzero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParamSpec {
    q: BigRational,
    params: Vec<BigRational>,
}

impl ParamSpec {
    pub fn new(q: BigRational, params: Vec<BigRational>) -> Result<Self, PolyError> {
        if q.is_zero() {
            return Err(PolyError::ZeroParameter("q".to_string()));
        }
        for (s, v) in params.iter().enumerate() {
            if v.is_zero() {
                return Err(PolyError::ZeroParameter(format!("Q{s}")));
            }
        }
        Ok(ParamSpec { q, params })
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }

    pub fn params(&self) -> &[BigRational] {
        &self.params
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }
}

/// Parses an exact rational in `p/q` or integer notation. Floats are
/// rejected by construction.
pub fn parse_rational(text: &str) -> Result<BigRational, PolyError> {
    BigRational::from_str(text.trim()).map_err(|_| PolyError::BadRational(text.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    const D2: VarContext = VarContext::Params { d: 2 };

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn q(ctx: VarContext) -> LaurentPoly {
        LaurentPoly::q_pow(ctx, 1)
    }

    fn one(ctx: VarContext) -> LaurentPoly {
        LaurentPoly::one(ctx)
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFn::new(one(D2), LaurentPoly::zero(D2)),
            Err(PolyError::ZeroDenominator)
        );
    }

    #[test]
    fn rf_equal_examples() {
        // (q^2 - 1)/(q - 1) = (q + 1)/1
        let a = RationalFn::new(&LaurentPoly::q_pow(D2, 2) - &one(D2), &q(D2) - &one(D2)).unwrap();
        let b = RationalFn::from_poly(&q(D2) + &one(D2));
        assert!(a.equals(&b));
        assert!(b.equals(&a));

        // q/1 = 1/q^-1
        let a = RationalFn::from_poly(q(D2));
        let b = RationalFn::new(one(D2), LaurentPoly::q_pow(D2, -1)).unwrap();
        assert!(a.equals(&b));

        let a = RationalFn::from_poly(q(D2));
        let b = RationalFn::from_poly(&q(D2) + &one(D2));
        assert!(!a.equals(&b));
    }

    #[test]
    fn rf_mul_stays_unreduced() {
        let q0 = LaurentPoly::param(D2, 0);
        let q1 = LaurentPoly::param(D2, 1);
        let a = RationalFn::new(&q0 - &q1, q1.clone()).unwrap();
        let b = RationalFn::from_poly(q1.clone());
        let prod = a.mul(&b);
        assert_eq!(prod.num(), &(&(&q0 - &q1) * &q1));
        assert_eq!(prod.den(), &q1);
    }

    #[test]
    fn evaluate_examples() {
        let spec = ParamSpec::new(rat(2, 1), vec![rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!((&q(D2) + &one(D2)).evaluate(&spec), rat(3, 1));

        // q^-1 (q + 1) at q = -1 -> 0
        let spec = ParamSpec::new(rat(-1, 1), vec![rat(1, 1), rat(1, 1)]).unwrap();
        let p = &LaurentPoly::q_pow(D2, -1) * &(&q(D2) + &one(D2));
        assert_eq!(p.evaluate(&spec), rat(0, 1));

        let spec = ParamSpec::new(rat(1, 1), vec![rat(1, 1), rat(1, 1)]).unwrap();
        let p = &LaurentPoly::param(D2, 0) - &LaurentPoly::param(D2, 1);
        assert_eq!(p.evaluate(&spec), rat(0, 1));
    }

    #[test]
    fn rf_evaluate_examples() {
        let f = RationalFn::new(&LaurentPoly::q_pow(D2, 2) - &one(D2), &q(D2) - &one(D2)).unwrap();
        let at3 = ParamSpec::new(rat(3, 1), vec![rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(f.evaluate(&at3), Ok(rat(4, 1)));

        let at1 = ParamSpec::new(rat(1, 1), vec![rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(f.evaluate(&at1), Err(PolyError::Pole));

        let g = RationalFn::new(
            &LaurentPoly::param(D2, 0) - &LaurentPoly::param(D2, 1),
            LaurentPoly::param(D2, 1),
        )
        .unwrap();
        let spec = ParamSpec::new(rat(1, 1), vec![rat(3, 1), rat(1, 1)]).unwrap();
        assert_eq!(g.evaluate(&spec), Ok(rat(2, 1)));
    }

    #[test]
    fn param_spec_rejects_zero() {
        assert!(ParamSpec::new(rat(0, 1), vec![]).is_err());
        assert!(ParamSpec::new(rat(1, 1), vec![rat(0, 1)]).is_err());
    }

    #[test]
    fn parse_rational_forms() {
        assert_eq!(parse_rational("3/4"), Ok(rat(3, 4)));
        assert_eq!(parse_rational("-2"), Ok(rat(-2, 1)));
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("x").is_err());
    }
}
