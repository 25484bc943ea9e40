//! Whole-sweep verification drivers: cross-formula agreement over
//! P(d, r) and the identity suites. These back both the CLI and the
//! acceptance tests.

use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;

use crate::combinatorics::{
    enumerate_multipartitions, enumerate_partitions, MultiPartition, Partition,
};
use crate::polynomial::RationalFn;
use crate::schur::{
    lemma_conj_cont_check, lemma_nbar_check, schur_factored, schur_gim_default, schur_mathas,
    x_st_closed, x_st_mathas,
};
use crate::sweep::{for_each_ordered, ExecMode};

/// One of the three Schur-element formulas.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Formula {
    /// Cancellation-free product form.
    Cf,
    /// Hook/content product form.
    Mathas,
    /// Beta-number symbol form.
    Gim,
}

impl Formula {
    pub const ALL: [Formula; 3] = [Formula::Cf, Formula::Mathas, Formula::Gim];

    pub fn name(self) -> &'static str {
        match self {
            Formula::Cf => "cf",
            Formula::Mathas => "mathas",
            Formula::Gim => "gim",
        }
    }

    fn compute(self, lambda: &MultiPartition) -> RationalFn {
        match self {
            Formula::Cf => RationalFn::from_poly(schur_factored(lambda).expand()),
            Formula::Mathas => schur_mathas(lambda),
            Formula::Gim => schur_gim_default(lambda),
        }
    }
}

impl FromStr for Formula {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "cf" => Ok(Formula::Cf),
            "mathas" => Ok(Formula::Mathas),
            "gim" => Ok(Formula::Gim),
            other => Err(format!("unknown formula {other:?} (expected cf, mathas, gim)")),
        }
    }
}

/// First disagreement found by a cross-formula sweep.
#[derive(Clone, Debug, Serialize)]
pub struct CrossMismatch {
    pub lambda: MultiPartition,
    pub left: Formula,
    pub right: Formula,
}

/// Result of a cross-formula sweep over P(d, 0..=r_max).
#[derive(Clone, Debug, Serialize)]
pub struct VerifySummary {
    pub d: usize,
    pub r_max: usize,
    pub formulas: Vec<Formula>,
    /// (r, number of multipartitions checked at that r).
    pub per_r: Vec<(usize, usize)>,
    pub mismatch: Option<CrossMismatch>,
}

impl VerifySummary {
    pub fn all_agree(&self) -> bool {
        self.mismatch.is_none()
    }

    pub fn total_checked(&self) -> usize {
        self.per_r.iter().map(|&(_, n)| n).sum()
    }
}

/// Computes every requested formula for every multipartition in
/// P(d, 0..=r_max) and compares them pairwise, exactly. Stops at the
/// first mismatch.
pub fn verify_cross_formulas(
    d: usize,
    r_max: usize,
    formulas: &[Formula],
    mode: ExecMode,
) -> VerifySummary {
    assert!(d >= 1, "need d >= 1");
    let mut summary = VerifySummary {
        d,
        r_max,
        formulas: formulas.to_vec(),
        per_r: Vec::new(),
        mismatch: None,
    };
    for r in 0..=r_max {
        let mut count = 0usize;
        for_each_ordered(
            mode,
            enumerate_multipartitions(d, r),
            |lambda| first_disagreement(lambda, formulas),
            |lambda, bad_pair| {
                count += 1;
                match bad_pair {
                    None => ControlFlow::Continue(()),
                    Some((left, right)) => {
                        summary.mismatch = Some(CrossMismatch { lambda, left, right });
                        ControlFlow::Break(())
                    }
                }
            },
        );
        summary.per_r.push((r, count));
        if summary.mismatch.is_some() {
            break;
        }
    }
    summary
}

fn first_disagreement(
    lambda: &MultiPartition,
    formulas: &[Formula],
) -> Option<(Formula, Formula)> {
    let values: Vec<RationalFn> = formulas.iter().map(|f| f.compute(lambda)).collect();
    for i in 0..values.len() {
        for j in i + 1..values.len() {
            if !values[i].equals(&values[j]) {
                return Some((formulas[i], formulas[j]));
            }
        }
    }
    None
}

/// Result of an identity sweep: how many instances were checked and the
/// first failing instance, if any.
#[derive(Clone, Debug, Serialize)]
pub struct SweepOutcome<W> {
    pub checked: usize,
    pub failure: Option<W>,
}

impl<W> SweepOutcome<W> {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn run_sweep<T, W>(
    mode: ExecMode,
    items: impl Iterator<Item = T>,
    check: impl Fn(&T) -> bool + Sync,
    witness: impl Fn(T) -> W,
) -> SweepOutcome<W>
where
    T: Send + Sync,
{
    let mut outcome = SweepOutcome { checked: 0, failure: None };
    for_each_ordered(mode, items, |item| check(item), |item, ok| {
        outcome.checked += 1;
        if ok {
            ControlFlow::Continue(())
        } else {
            outcome.failure = Some(witness(item));
            ControlFlow::Break(())
        }
    });
    outcome
}

/// Conjugate-content identity over all partitions with 1 <= |lambda| <=
/// max_size and all columns 1 <= k <= lambda_1.
pub fn sweep_lemma21(max_size: usize, mode: ExecMode) -> SweepOutcome<(Partition, usize)> {
    let items = (1..=max_size).flat_map(|m| {
        enumerate_partitions(m)
            .flat_map(|lambda| (1..=lambda.part(1)).map(move |k| (lambda.clone(), k)))
    });
    run_sweep(
        mode,
        items,
        |(lambda, k)| lemma_conj_cont_check(lambda, *k).expect("k in range by construction"),
        |(lambda, k)| (lambda, k),
    )
}

/// n(bar lambda) identity over all multipartitions with d <= d_max and
/// r <= r_max.
pub fn sweep_lemma52(d_max: usize, r_max: usize, mode: ExecMode) -> SweepOutcome<MultiPartition> {
    let items = (1..=d_max)
        .flat_map(move |d| (0..=r_max).flat_map(move |r| enumerate_multipartitions(d, r)));
    run_sweep(mode, items, lemma_nbar_check, |lambda| lambda)
}

/// Equality of the product and closed forms of X_st over all
/// multipartitions with 2 <= d <= d_max, r <= r_max, and all pairs s < t.
pub fn sweep_eq3(
    d_max: usize,
    r_max: usize,
    mode: ExecMode,
) -> SweepOutcome<(MultiPartition, usize, usize)> {
    let items = (2..=d_max).flat_map(move |d| {
        (0..=r_max).flat_map(move |r| {
            enumerate_multipartitions(d, r).flat_map(move |lambda| {
                (0..d)
                    .flat_map(move |s| (s + 1..d).map(move |t| (s, t)))
                    .map(move |(s, t)| (lambda.clone(), s, t))
                    .collect::<Vec<_>>()
            })
        })
    });
    run_sweep(
        mode,
        items,
        |(lambda, s, t)| {
            let a = x_st_mathas(lambda, *s, *t).expect("s < t");
            let b = x_st_closed(lambda, *s, *t).expect("s < t");
            a.equals(&b)
        },
        |w| w,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_small_all_agree() {
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            let summary = verify_cross_formulas(2, 3, &Formula::ALL, mode);
            assert!(summary.all_agree());
            assert_eq!(summary.per_r, vec![(0, 1), (1, 2), (2, 5), (3, 10)]);
            assert_eq!(summary.total_checked(), 18);
        }
    }

    #[test]
    fn verify_d1_matches_partition_counts() {
        let summary = verify_cross_formulas(1, 6, &Formula::ALL, ExecMode::Parallel);
        assert!(summary.all_agree());
        assert_eq!(
            summary.per_r,
            vec![(0, 1), (1, 1), (2, 2), (3, 3), (4, 5), (5, 7), (6, 11)]
        );
    }

    #[test]
    fn lemma_sweeps_pass_small() {
        let out = sweep_lemma21(5, ExecMode::Parallel);
        assert!(out.passed());
        assert!(out.checked > 0);

        let out = sweep_lemma52(2, 5, ExecMode::Parallel);
        assert!(out.passed());

        let out = sweep_eq3(2, 4, ExecMode::Parallel);
        assert!(out.passed());
        // pairs only exist for d = 2 here: one per multipartition
        let expected: usize = (0..=4).map(|r| enumerate_multipartitions(2, r).count()).sum();
        assert_eq!(out.checked, expected);
    }

    #[test]
    fn formula_from_str() {
        assert_eq!("cf".parse::<Formula>(), Ok(Formula::Cf));
        assert_eq!("gim".parse::<Formula>(), Ok(Formula::Gim));
        assert!("hook".parse::<Formula>().is_err());
    }
}
