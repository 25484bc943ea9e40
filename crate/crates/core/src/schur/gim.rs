//! The beta-number (symbol) formula for Schur elements.

use crate::combinatorics::MultiPartition;
use crate::polynomial::{LaurentPoly, Monomial, RationalFn, VarContext};

use super::SchurError;

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

/// Computes the Schur element from the L-symbol of `lambda`:
///
///   (-1)^{a_L} q^{b_L} (q-1)^{-r} (Q_0...Q_{d-1})^{-r} nu / delta
///
/// with a_L = r(d-1) + C(d,2) C(L,2) and b_L = dL(L-1)(2dL-d-3)/12,
///
///   nu = prod_{s<t} (Q_s - Q_t)^L
///        * prod_{s,t} prod_{b in B^(s)} prod_{k=1..b} (q^k Q_s - Q_t),
///   delta = prod_{s<t} prod_{(b_s,b_t)} (q^{b_s} Q_s - q^{b_t} Q_t)
///           * prod_s prod_{i<j} (q^{beta_i^(s)} Q_s - q^{beta_j^(s)} Q_s).
///
/// The value is independent of the choice of L >= max(length, 1).
pub fn schur_gim(lambda: &MultiPartition, l: usize) -> Result<RationalFn, SchurError> {
    let d = lambda.d();
    let r = lambda.size();
    let ctx = VarContext::Params { d };
    let symbol = lambda.symbol(l)?;
    let betas: Vec<&[u64]> = symbol.rows().iter().map(|b| b.betas()).collect();

    let li = l as i64;
    let di = d as i64;
    let a_l = (r as i64) * (di - 1) + (di * (di - 1) / 2) * (li * (li - 1) / 2);
    let b_l_times_12 = di * li * (li - 1) * (2 * di * li - di - 3);
    debug_assert_eq!(b_l_times_12 % 12, 0);
    let b_l = b_l_times_12 / 12;

    let mut nu = vec![LaurentPoly::monomial(
        ctx,
        if a_l % 2 == 0 { 1 } else { -1 },
        Monomial::new(b_l, vec![-(r as i64); d]),
    )];
    for s in 0..d {
        for t in s + 1..d {
            for _ in 0..l {
                nu.push(cross_factor(ctx, 0, s, 0, t));
            }
        }
    }
    for s in 0..d {
        for t in 0..d {
            for &b in betas[s] {
                for k in 1..=b as i64 {
                    nu.push(cross_factor(ctx, k, s, 0, t));
                }
            }
        }
    }

    let qm1 = &LaurentPoly::q_pow(ctx, 1) - &LaurentPoly::one(ctx);
    let mut delta = vec![qm1; r];
    for s in 0..d {
        for t in s + 1..d {
            for &bs in betas[s] {
                for &bt in betas[t] {
                    delta.push(cross_factor(ctx, bs as i64, s, bt as i64, t));
                }
            }
        }
    }
    for (s, row) in betas.iter().enumerate() {
        for i in 0..row.len() {
            for j in i + 1..row.len() {
                delta.push(cross_factor(ctx, row[i] as i64, s, row[j] as i64, s));
            }
        }
    }

    let num = LaurentPoly::product(ctx, nu);
    let den = LaurentPoly::product(ctx, delta);
    Ok(RationalFn::new(num, den).expect("delta factors are nonzero"))
}

/// [`schur_gim`] at the smallest valid symbol size, L = max(length, 1).
pub fn schur_gim_default(lambda: &MultiPartition) -> RationalFn {
    schur_gim(lambda, lambda.length().max(1)).expect("L >= length by construction")
}
