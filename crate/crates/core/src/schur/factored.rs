//! The cancellation-free form of a Schur element: an explicit sign, a
//! power of q, a power of (q-1), and one generalized-hook factor per
//! (node, component) pair.

use serde::Serialize;

use crate::combinatorics::{MultiPartition, Partition};
use crate::polynomial::{LaurentPoly, Monomial, VarContext};

/// One factor (q^h * Q_s * Q_t^-1 - 1), recorded as the triple (h, s, t).
/// Factors with s = t carry classical hook lengths h >= 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct HookFactor {
    pub h: i64,
    pub s: usize,
    pub t: usize,
}

/// A Schur element in cancellation-free form:
/// sign * q^q_exp * (q-1)^qm1_exp * prod over factors.
///
/// The factor multiset has exactly r*d entries, stored sorted by (s, t, h).
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SchurFactored {
    pub sign: i8,
    pub q_exp: i64,
    pub qm1_exp: i64,
    pub factors: Vec<HookFactor>,
    #[serde(skip)]
    d: usize,
}

/// Computes the cancellation-free form of the Schur element of `lambda`.
///
/// For every component index s, every node (i,j) of lambda^(s), and every
/// component index t, one factor records the generalized hook length of
/// (i,j) with respect to lambda^(t). The prefactors are sign
/// (-1)^{r(d-1)}, q^{-n(bar lambda)}, and (q-1)^{-r}.
pub fn schur_factored(lambda: &MultiPartition) -> SchurFactored {
    let d = lambda.d();
    let r = lambda.size();
    let conjugates: Vec<Partition> = lambda.components().iter().map(Partition::conjugate).collect();

    let mut factors = Vec::with_capacity(r * d);
    for (s, comp) in lambda.components().iter().enumerate() {
        for node in comp.nodes() {
            let lambda_i = comp.part(node.row) as i64;
            for (t, conj_t) in conjugates.iter().enumerate() {
                let h = lambda_i - node.row as i64 + conj_t.part(node.col) as i64
                    - node.col as i64
                    + 1;
                factors.push(HookFactor { h, s, t });
            }
        }
    }
    factors.sort_unstable_by_key(|f| (f.s, f.t, f.h));

    SchurFactored {
        sign: if (r * (d.saturating_sub(1))) % 2 == 1 { -1 } else { 1 },
        q_exp: -(lambda.bar_partition().n_value() as i64),
        qm1_exp: -(r as i64),
        factors,
        d,
    }
}

impl SchurFactored {
    /// Number of components of the underlying multipartition.
    pub fn d(&self) -> usize {
        self.d
    }

    /// Expands the factored form into a genuine Laurent polynomial.
    ///
    /// Each diagonal factor (q^h - 1) absorbs one power of (q-1)^-1 and
    /// becomes the q-integer [h]_q; there are exactly -qm1_exp of them, so
    /// no division is ever performed.
    pub fn expand(&self) -> LaurentPoly {
        let ctx = VarContext::Params { d: self.d };
        let factors = self.factors.iter().map(|f| factor_poly(ctx, f));
        let prod = LaurentPoly::product(ctx, factors);
        let prefactor = LaurentPoly::monomial(
            ctx,
            i64::from(self.sign),
            Monomial::new(self.q_exp, vec![0; self.d]),
        );
        &prefactor * &prod
    }
}

/// The polynomial carried by one factor after the regrouping: [h]_q on the
/// diagonal, (q^h * Q_s * Q_t^-1 - 1) off it.
fn factor_poly(ctx: VarContext, f: &HookFactor) -> LaurentPoly {
    if f.s == f.t {
        debug_assert!(f.h >= 1, "diagonal factors carry classical hooks");
        LaurentPoly::q_integer(ctx, f.h as u64)
    } else {
        let mut e_params = vec![0; ctx.arity()];
        e_params[f.s] += 1;
        e_params[f.t] -= 1;
        &LaurentPoly::monomial(ctx, 1, Monomial::new(f.h, e_params)) - &LaurentPoly::one(ctx)
    }
}
