//! Executable versions of the supporting identities: the closed form of
//! X_st, the conjugate-content lemma, and the n(bar lambda) lemma.

use crate::combinatorics::{MultiPartition, Partition};
use crate::polynomial::{LaurentPoly, Monomial, RationalFn, VarContext};

use super::mathas::alpha_conj;
use super::SchurError;

/// The closed form of X_st:
///
///   q^{-sum_i lambda^(s)'_i lambda^(t)'_i} Q_s^{|lambda^(t)|} Q_t^{|lambda^(s)|}
///   * prod over nodes of lambda^(s) of (q^{h w.r.t. lambda^(t)} Q_s Q_t^-1 - 1)
///   * prod over nodes of lambda^(t) of (q^{h w.r.t. lambda^(s)} Q_t Q_s^-1 - 1).
///
/// This is a Laurent polynomial; it is returned as a RationalFn with unit
/// denominator so it can be compared directly against [`x_st_mathas`].
///
/// [`x_st_mathas`]: super::x_st_mathas
pub fn x_st_closed(lambda: &MultiPartition, s: usize, t: usize) -> Result<RationalFn, SchurError> {
    if s >= t || t >= lambda.d() {
        return Err(SchurError::InvalidPair { s, t });
    }
    let d = lambda.d();
    let ctx = VarContext::Params { d };
    let comp_s = lambda.component(s);
    let comp_t = lambda.component(t);
    let conj_s = comp_s.conjugate();
    let conj_t = comp_t.conjugate();

    let conj_dot: i64 = (1..=conj_s.len().max(conj_t.len()))
        .map(|i| conj_s.part(i) as i64 * conj_t.part(i) as i64)
        .sum();
    let mut e_params = vec![0; d];
    e_params[s] = comp_t.size() as i64;
    e_params[t] = comp_s.size() as i64;
    let mut factors = vec![LaurentPoly::monomial(
        ctx,
        1,
        Monomial::new(-conj_dot, e_params),
    )];

    let mut push_side = |own: &Partition, other_conj: &Partition, u: usize, v: usize| {
        for node in own.nodes() {
            let h = own.part(node.row) as i64 - node.row as i64 + other_conj.part(node.col) as i64
                - node.col as i64
                + 1;
            let mut e = vec![0; d];
            e[u] = 1;
            e[v] = -1;
            factors
                .push(&LaurentPoly::monomial(ctx, 1, Monomial::new(h, e)) - &LaurentPoly::one(ctx));
        }
    };
    push_side(comp_s, &conj_t, s, t);
    push_side(comp_t, &conj_s, t, s);

    Ok(RationalFn::from_poly(LaurentPoly::product(ctx, factors)))
}

/// Checks the integer identity
/// alpha(lambda') + sum_{s<t} sum_i lambda^(s)'_i lambda^(t)'_i = n(bar lambda).
pub fn lemma_nbar_check(lambda: &MultiPartition) -> bool {
    let conjugates: Vec<Partition> = lambda.components().iter().map(Partition::conjugate).collect();
    let mut cross = 0u64;
    for s in 0..lambda.d() {
        for t in s + 1..lambda.d() {
            let len = conjugates[s].len().max(conjugates[t].len());
            cross += (1..=len)
                .map(|i| conjugates[s].part(i) as u64 * conjugates[t].part(i) as u64)
                .sum::<u64>();
        }
    }
    alpha_conj(lambda) + cross == lambda.bar_partition().n_value()
}

/// The auxiliary factor (q^a y - 1) over the (q, y) context.
fn aux_factor(a: i64) -> LaurentPoly {
    let ctx = VarContext::Aux;
    &LaurentPoly::monomial(ctx, 1, Monomial::new(a, vec![1])) - &LaurentPoly::one(ctx)
}

/// Builds both sides of the conjugate-content identity for the partition
/// and column index k (1 <= k <= lambda_1) and compares them exactly:
///
///   1/(q^{lambda_1} y - 1)
///     * prod_{i=1..lambda'_k} (q^{lambda_i-i+1} y - 1)/(q^{lambda_i-i} y - 1)
///   =
///   1/(q^{-lambda'_k+k-1} y - 1)
///     * prod_{j=k..lambda_1} (q^{-lambda'_j+j-1} y - 1)/(q^{-lambda'_j+j} y - 1).
pub fn lemma_conj_cont_check(lambda: &Partition, k: usize) -> Result<bool, SchurError> {
    let width = lambda.part(1);
    if lambda.is_empty() || k < 1 || k > width {
        return Err(SchurError::KOutOfRange { k, max: width });
    }
    let ctx = VarContext::Aux;
    let conj = lambda.conjugate();

    let mut lhs_num = Vec::new();
    let mut lhs_den = vec![aux_factor(width as i64)];
    for i in 1..=conj.part(k) {
        let e = lambda.part(i) as i64 - i as i64;
        lhs_num.push(aux_factor(e + 1));
        lhs_den.push(aux_factor(e));
    }

    let mut rhs_num = Vec::new();
    let mut rhs_den = vec![aux_factor(-(conj.part(k) as i64) + k as i64 - 1)];
    for j in k..=width {
        let e = -(conj.part(j) as i64) + j as i64;
        rhs_num.push(aux_factor(e - 1));
        rhs_den.push(aux_factor(e));
    }

    let lhs = RationalFn::new(
        LaurentPoly::product(ctx, lhs_num),
        LaurentPoly::product(ctx, lhs_den),
    )
    .expect("factors are nonzero");
    let rhs = RationalFn::new(
        LaurentPoly::product(ctx, rhs_num),
        LaurentPoly::product(ctx, rhs_den),
    )
    .expect("factors are nonzero");
    Ok(lhs.equals(&rhs))
}
