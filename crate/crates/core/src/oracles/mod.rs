//! Independent checks of the restriction formulas.

pub mod gkm;
pub mod union;
pub mod weyl;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::indexcomb::{enumerate_isotropic, IsotropicIndex};
use crate::restriction::{positivity_certificate, restrict_h, restrict_k, Theory};
use crate::Laurent;

pub use gkm::{gkm_check, gkm_check_row, gkm_edges, GkmEdge, GkmReport};
pub use union::{kclass_union_oracle, union_components, MAX_COMPONENTS};
pub use weyl::{billey_restrict_h, calibrate, BilleyConvention, BilleyOracle, SignedPermutation};

/// Lowest-order Chern component of the K-theory restriction, with integer
/// coefficients.
pub fn chern_lowest(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<Laurent> {
    let k = restrict_k(alpha, beta)?.value;
    let low = k.chern_lowest_form(alpha.length() as u32 + 1)?;
    Ok(low.to_integer().expect("integral lowest form"))
}

/// `lowest_degree_form(restrict_k(α, β)) = restrict_h(α, β)`.
pub fn chern_consistency(alpha: &IsotropicIndex, beta: &IsotropicIndex) -> Result<bool> {
    Ok(chern_lowest(alpha, beta)? == restrict_h(alpha, beta)?.value)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Oracle,
    Billey,
    Gkm,
    Chern,
    Positivity,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Oracle,
        Suite::Billey,
        Suite::Gkm,
        Suite::Chern,
        Suite::Positivity,
    ];
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "oracle" => Ok(Suite::Oracle),
            "billey" => Ok(Suite::Billey),
            "gkm" => Ok(Suite::Gkm),
            "chern" => Ok(Suite::Chern),
            "positivity" => Ok(Suite::Positivity),
            _ => Err(crate::Error::Parse(format!("unknown suite {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub n: usize,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn all_pairs(n: usize) -> Result<Vec<(IsotropicIndex, IsotropicIndex)>> {
    let all = enumerate_isotropic(n)?;
    Ok(all
        .iter()
        .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
        .collect())
}

/// Outcome of one pair: `Ok(None)` pass, `Ok(Some(msg))` failure,
/// `Err` skip.
type PairOutcome = std::result::Result<Option<String>, ()>;

fn pair_suite(
    suite: Suite,
    n: usize,
    check: impl Fn(&IsotropicIndex, &IsotropicIndex) -> PairOutcome + Sync,
) -> Result<SuiteReport> {
    let outcomes: Vec<PairOutcome> = all_pairs(n)?
        .par_iter()
        .map(|(a, b)| check(a, b))
        .collect();
    let skipped = outcomes.iter().filter(|o| o.is_err()).count();
    let failures: Vec<String> = outcomes.into_iter().filter_map(|o| o.ok().flatten()).collect();
    Ok(SuiteReport {
        suite,
        n,
        checked: (1 << (2 * n)) - skipped,
        skipped,
        failures,
    })
}

/// Runs one suite over all pairs of `I_n`. With `corrupt`, the GKM suite
/// perturbs one table entry by `+1` first, and the other suites compare
/// against a perturbed value of the formula under test.
pub fn run_suite(suite: Suite, n: usize, corrupt: bool) -> Result<SuiteReport> {
    let bump = |v: Laurent, a: &IsotropicIndex, b: &IsotropicIndex| {
        if corrupt && a == b {
            &v + &Laurent::one(n)
        } else {
            v
        }
    };
    match suite {
        Suite::Oracle => pair_suite(suite, n, |a, b| {
            let k = bump(restrict_k(a, b).map_err(|_| ())?.value, a, b);
            match kclass_union_oracle(a, b) {
                Ok(o) if o == k => Ok(None),
                Ok(o) => Ok(Some(format!("{a} at {b}: formula {} vs oracle {}", k.pretty(), o.pretty()))),
                Err(_) => Err(()),
            }
        }),
        Suite::Billey => {
            let oracle = BilleyOracle::new(n);
            pair_suite(suite, n, |a, b| {
                let h = bump(restrict_h(a, b).map_err(|_| ())?.value, a, b);
                let o = oracle.restrict_h(a, b, weyl::CALIBRATED).map_err(|_| ())?;
                Ok((o != h).then(|| format!("{a} at {b}: formula {} vs subword {}", h.pretty(), o.pretty())))
            })
        }
        Suite::Chern => pair_suite(suite, n, |a, b| {
            let h = bump(restrict_h(a, b).map_err(|_| ())?.value, a, b);
            let low = chern_lowest(a, b).map_err(|_| ())?;
            Ok((low != h).then(|| format!("{a} at {b}: lowest form {} vs {}", low.pretty(), h.pretty())))
        }),
        Suite::Positivity => pair_suite(suite, n, |a, b| {
            let mut errs = Vec::new();
            for theory in [Theory::K, Theory::H] {
                if let Err(e) = positivity_certificate(a, b, theory) {
                    errs.push(format!("{a} at {b} ({theory}): {e}"));
                }
            }
            if corrupt && a == b {
                errs.push(format!("{a} at {b}: corrupted"));
            }
            Ok((!errs.is_empty()).then(|| errs.join("; ")))
        }),
        Suite::Gkm => {
            let edges = gkm_edges(n)?;
            let alphas = enumerate_isotropic(n)?;
            let mut failures = Vec::new();
            let mut checked = 0;
            for theory in [Theory::H, Theory::K] {
                let reports: Vec<Result<GkmReport>> = alphas
                    .par_iter()
                    .enumerate()
                    .map(|(i, a)| {
                        let mut row = gkm::restriction_row(a, theory)?;
                        if corrupt && i == alphas.len() - 1 {
                            let v = &row[a] + &Laurent::one(n);
                            row.insert(a.clone(), v);
                        }
                        gkm_check_row(a, &row, &edges, theory)
                    })
                    .collect();
                for r in reports {
                    let r = r?;
                    checked += r.edges_checked;
                    failures.extend(r.failures.iter().map(|f| {
                        format!(
                            "{} ({theory}): edge {} - {} root {} difference {}",
                            f.alpha,
                            f.edge.from,
                            f.edge.to,
                            f.edge.root,
                            f.difference.pretty()
                        )
                    }));
                }
            }
            Ok(SuiteReport {
                suite,
                n,
                checked,
                skipped: 0,
                failures,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iso(n: usize, v: &[usize]) -> IsotropicIndex {
        IsotropicIndex::new(n, v.to_vec()).unwrap()
    }

    #[test]
    fn union_oracle_small() {
        let id = IsotropicIndex::identity(3).unwrap();
        for b in enumerate_isotropic(3).unwrap() {
            assert!(kclass_union_oracle(&id, &b).unwrap().is_one());
        }
        let (a, b) = (iso(3, &[1, 3, 5]), iso(3, &[3, 5, 6]));
        assert_eq!(union_components(&a, &b).unwrap().len(), 3);
        assert_eq!(kclass_union_oracle(&a, &b).unwrap(), restrict_k(&a, &b).unwrap().value);
    }

    #[test]
    fn rank_two_suites() {
        for suite in Suite::ALL {
            let r = run_suite(suite, 2, false).unwrap();
            assert!(r.passed(), "{suite:?}: {:?}", r.failures);
            let bad = run_suite(suite, 2, true).unwrap();
            assert!(!bad.passed(), "{suite:?} negative control");
        }
    }

    #[test]
    fn chern_example() {
        let (a, b) = (iso(3, &[1, 3, 5]), iso(3, &[3, 5, 6]));
        assert!(chern_consistency(&a, &b).unwrap());
        let id = IsotropicIndex::identity(3).unwrap();
        assert!(chern_consistency(&id, &b).unwrap());
    }

    #[test]
    fn calibration() {
        // Length 2 hides the root sign; the rank-one pair fixes it.
        let (a, b) = (iso(3, &[1, 3, 5]), iso(3, &[3, 5, 6]));
        let target = restrict_h(&a, &b).unwrap().value;
        let found = calibrate(&a, &b, &target).unwrap();
        assert!(found.contains(&weyl::CALIBRATED));
        assert!(found.iter().all(|c| !c.twist));
        let top = iso(1, &[2]);
        let target = restrict_h(&top, &top).unwrap().value;
        assert_eq!(calibrate(&top, &top, &target).unwrap(), vec![weyl::CALIBRATED]);
    }
}
