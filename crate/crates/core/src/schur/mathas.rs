//! The hook/content product formula for Schur elements, with its
//! cross-component correction factors X_st.

use crate::combinatorics::MultiPartition;
use crate::polynomial::{LaurentPoly, Monomial, RationalFn, VarContext};

use super::SchurError;

/// alpha(lambda') = (1/2) sum_s sum_i (lambda^(s)'_i - 1) lambda^(s)'_i,
/// which equals sum_s n(lambda^(s)).
pub fn alpha_conj(lambda: &MultiPartition) -> u64 {
    let twice: u64 = lambda
        .components()
        .iter()
        .flat_map(|c| c.conjugate().parts().to_vec())
        .map(|p| (p as u64 - 1) * p as u64)
        .sum();
    twice / 2
}

/// The linear factor (q^a Q_u - q^b Q_v).
fn cross_factor(ctx: VarContext, a: i64, u: usize, b: i64, v: usize) -> LaurentPoly {
    let d = ctx.arity();
    let mut eu = vec![0; d];
    eu[u] = 1;
    let mut ev = vec![0; d];
    ev[v] = 1;
    &LaurentPoly::monomial(ctx, 1, Monomial::new(a, eu))
        - &LaurentPoly::monomial(ctx, 1, Monomial::new(b, ev))
}

/// The correction factor X_st for one ordered pair s < t:
///
///   prod over nodes (i,j) of lambda^(t) of (q^{j-i} Q_t - Q_s)
///   * prod over nodes (i,j) of lambda^(s) of
///       (q^{j-i} Q_s - q^{lambda^(t)_1} Q_t)
///       * prod_{k=1..lambda^(t)_1}
///           (q^{j-i} Q_s - q^{k-1-lambda^(t)'_k} Q_t)
///         / (q^{j-i} Q_s - q^{k-lambda^(t)'_k} Q_t).
///
/// Empty products are 1; in particular X_st = 1 when both components are
/// empty.
pub fn x_st_mathas(lambda: &MultiPartition, s: usize, t: usize) -> Result<RationalFn, SchurError> {
    if s >= t || t >= lambda.d() {
        return Err(SchurError::InvalidPair { s, t });
    }
    let ctx = VarContext::Params { d: lambda.d() };
    let comp_s = lambda.component(s);
    let comp_t = lambda.component(t);
    let width_t = comp_t.part(1) as i64;
    let conj_t = comp_t.conjugate();

    let mut num = Vec::new();
    let mut den = Vec::new();
    for node in comp_t.nodes() {
        num.push(cross_factor(ctx, node.content(), t, 0, s));
    }
    for node in comp_s.nodes() {
        let c = node.content();
        num.push(cross_factor(ctx, c, s, width_t, t));
        for k in 1..=width_t {
            let conj_k = conj_t.part(k as usize) as i64;
            num.push(cross_factor(ctx, c, s, k - 1 - conj_k, t));
            den.push(cross_factor(ctx, c, s, k - conj_k, t));
        }
    }
    let num = LaurentPoly::product(ctx, num);
    let den = LaurentPoly::product(ctx, den);
    Ok(RationalFn::new(num, den).expect("nonzero linear factors"))
}

/// Assembles the full Schur element as
///
///   (-1)^{r(d-1)} (Q_0...Q_{d-1})^{-r} q^{-alpha(lambda')}
///   * prod_s prod over nodes of lambda^(s) of Q_s [h]_q
///   * prod_{s<t} X_st.
pub fn schur_mathas(lambda: &MultiPartition) -> RationalFn {
    let d = lambda.d();
    let r = lambda.size();
    let ctx = VarContext::Params { d };

    let sign = if (r * (d - 1)) % 2 == 1 { -1 } else { 1 };
    let mut num = vec![LaurentPoly::monomial(
        ctx,
        sign,
        Monomial::new(-(alpha_conj(lambda) as i64), vec![-(r as i64); d]),
    )];
    let mut den = Vec::new();

    for (s, comp) in lambda.components().iter().enumerate() {
        for node in comp.nodes() {
            let h = comp
                .classical_hook(node)
                .expect("nodes() yields valid nodes");
            num.push(&LaurentPoly::q_integer(ctx, h as u64) * &LaurentPoly::param(ctx, s));
        }
    }
    for s in 0..d {
        for t in s + 1..d {
            let x = x_st_mathas(lambda, s, t).expect("s < t < d");
            num.push(x.num().clone());
            den.push(x.den().clone());
        }
    }
    RationalFn::new(
        LaurentPoly::product(ctx, num),
        LaurentPoly::product(ctx, den),
    )
    .expect("denominator is a product of nonzero factors")
}
