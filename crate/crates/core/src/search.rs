//! Random search for a relation that satisfies both bound clauses of
//! completeness but is not compatible with `≈`.
//!
//! Whether such a relation exists is open. The harness assumes neither
//! answer: a candidate is only reported after an independent re-check.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fuzz::{LRelation, Universe};
use crate::lattice::{Degree, ResiduatedLattice};
use crate::model::rows_json;
use crate::order::{LOrderedSet, PowerLattice};
use crate::tolerance::{self, CompletenessOracle};

/// Budget for building the model pool; factors of `L²` need the most.
pub const POOL_BUDGET: u64 = 200_000;
/// Every `PLANT_EVERY`-th trial tests a known complete tolerance.
pub const PLANT_EVERY: u64 = 10;
const POOL_SIZES: std::ops::RangeInclusive<usize> = 3..=4;
const MAX_POOL: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    /// Reflexive symmetric relations.
    Tolerance,
    /// Arbitrary relations.
    General,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    pub trials: u64,
    pub seed: u64,
    pub family: Family,
}

/// A completely lattice L-ordered set with its oracle and complete tolerances.
pub struct PoolModel {
    pub name: String,
    pub ordered: LOrderedSet,
    oracle: CompletenessOracle,
    complete: Vec<LRelation>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Candidate {
    pub trial: u64,
    pub model: String,
    pub carrier: Vec<String>,
    pub relation: Value,
    /// Elements and degrees of the compatibility violation.
    pub compat_witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub trials: u64,
    pub seed: u64,
    pub family: Family,
    pub models: Vec<String>,
    /// Trials whose relation passed both bound clauses.
    pub clause_passes: u64,
    /// Those of them that were also compatible.
    pub complete: u64,
    pub planted: u64,
    pub planted_recognized: u64,
    /// Clause results that did not survive the independent re-check.
    pub unconfirmed: u64,
    pub candidates: Vec<Candidate>,
    pub verdict: String,
}

fn sized(p: &LOrderedSet) -> bool {
    POOL_SIZES.contains(&p.len())
}

fn push_model(pool: &mut Vec<PoolModel>, name: String, p: LOrderedSet, budget: u64) -> Result<()> {
    if pool.len() >= MAX_POOL || !sized(&p) {
        return Ok(());
    }
    if pool.iter().any(|m| m.ordered.order().matrix() == p.order().matrix() && m.ordered.approx() == p.approx()) {
        return Ok(());
    }
    let oracle = match CompletenessOracle::new(&p, budget) {
        Ok(o) => o,
        Err(Error::BudgetExceeded { .. }) | Err(Error::NotCompletelyLattice(_)) => return Ok(()),
        Err(e) => return Err(e),
    };
    let complete = match tolerance::enumerate_complete_tolerances(&p, budget) {
        Ok(c) => c,
        Err(Error::BudgetExceeded { .. }) => return Ok(()),
        Err(e) => return Err(e),
    };
    pool.push(PoolModel {
        name,
        ordered: p,
        oracle,
        complete,
    });
    Ok(())
}

/// Factors of `base` by all of its complete tolerances that have 3 or 4
/// blocks, in enumeration order.
fn push_factors(pool: &mut Vec<PoolModel>, prefix: &str, base: &LOrderedSet, budget: u64) -> Result<()> {
    let pairs = match crate::galois::extensive_pairs(base, budget) {
        Ok(p) => p,
        Err(Error::BudgetExceeded { .. }) => return Ok(()),
        Err(e) => return Err(e),
    };
    for (k, pair) in pairs.iter().enumerate() {
        let fix = crate::galois::fixpoints(base, base, pair)?;
        if !POOL_SIZES.contains(&fix.points.len()) {
            continue;
        }
        let r = tolerance::tolerance_from_pair(base, pair)?;
        let f = tolerance::factor(base, &r, budget)?;
        push_model(pool, format!("{prefix}/t{k}"), f.ordered, budget)?;
    }
    Ok(())
}

/// Models with 3 or 4 elements over `l`: `extra` if given, `U_L`, and
/// factors of `U_L` and `L²`.
pub fn model_pool(l: &ResiduatedLattice, extra: Option<&LOrderedSet>) -> Result<Vec<PoolModel>> {
    let mut pool = Vec::new();
    if let Some(p) = extra {
        push_model(&mut pool, "input".into(), p.clone(), POOL_BUDGET)?;
    }
    let ul = LOrderedSet::of_degrees(l);
    push_model(&mut pool, "U_L".into(), ul.clone(), POOL_BUDGET)?;
    push_factors(&mut pool, "U_L", &ul, POOL_BUDGET)?;
    let x = Universe::new(["x", "y"])?;
    if let Ok(sq) = PowerLattice::new(l, &x, POOL_BUDGET) {
        push_factors(&mut pool, "L^2", &sq.ordered, POOL_BUDGET)?;
    }
    if pool.is_empty() {
        return Err(Error::Precondition(format!(
            "no completely lattice model with 3 or 4 elements over a {}-element lattice",
            l.len()
        )));
    }
    Ok(pool)
}

fn random_relation(rng: &mut ChaCha8Rng, p: &LOrderedSet, family: Family) -> LRelation {
    let l = p.lattice();
    let degrees: Vec<Degree> = l.degrees().collect();
    let n = p.len();
    let mut m = vec![l.top(); n * n];
    for x in 0..n {
        for y in 0..n {
            match family {
                Family::General => m[x * n + y] = degrees[rng.gen_range(0..degrees.len())],
                Family::Tolerance if x < y => {
                    let d = degrees[rng.gen_range(0..degrees.len())];
                    m[x * n + y] = d;
                    m[y * n + x] = d;
                }
                Family::Tolerance => {}
            }
        }
    }
    LRelation::new(l, p.carrier(), p.carrier(), m).expect("square matrix of owned degrees")
}

pub fn search_compat_counterexample(pool: &[PoolModel], cfg: &SearchConfig) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut v = Verdict {
        trials: cfg.trials,
        seed: cfg.seed,
        family: cfg.family,
        models: pool.iter().map(|m| m.name.clone()).collect(),
        clause_passes: 0,
        complete: 0,
        planted: 0,
        planted_recognized: 0,
        unconfirmed: 0,
        candidates: Vec::new(),
        verdict: String::new(),
    };
    for trial in 0..cfg.trials {
        let model = &pool[rng.gen_range(0..pool.len())];
        let p = &model.ordered;
        let planted = trial % PLANT_EVERY == PLANT_EVERY - 1;
        let r = if planted {
            v.planted += 1;
            model.complete.choose(&mut rng).expect("the total relation is always complete").clone()
        } else {
            random_relation(&mut rng, p, cfg.family)
        };
        let clauses = model.oracle.clauses_only(&r).expect("relation on the model carrier");
        if !clauses.clauses_hold() {
            if planted {
                v.unconfirmed += 1;
            }
            continue;
        }
        v.clause_passes += 1;
        let full = model.oracle.check(&r).expect("relation on the model carrier");
        if full.compatible {
            v.complete += 1;
            if planted {
                v.planted_recognized += 1;
            }
            continue;
        }
        // Re-check from scratch with a fresh oracle and the L-set level
        // compatibility test.
        let fresh = tolerance::is_complete_relation_bruteforce(p, &r, crate::order::DEFAULT_BUDGET.max(model.oracle.table().len() as u64));
        let compat = r.compatibility_witness(p.approx()).ok().flatten();
        match (fresh, compat) {
            (Ok(b), Some(w)) if b.clauses_hold() && !b.compatible => {
                let l = p.lattice();
                let els: Vec<&str> = w.elements.iter().map(|&x| p.name(x)).collect();
                v.candidates.push(Candidate {
                    trial,
                    model: model.name.clone(),
                    carrier: p.carrier().names().to_vec(),
                    relation: rows_json(&r),
                    compat_witness: format!("elements {}: {} ≰ {}", els.join(", "), l.name(w.lhs), l.name(w.rhs)),
                });
            }
            _ => v.unconfirmed += 1,
        }
    }
    v.verdict = if v.candidates.is_empty() {
        format!("no counterexample in {} trials", cfg.trials)
    } else {
        format!("{} candidate(s) in {} trials", v.candidates.len(), cfg.trials)
    };
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::ChainKind;

    fn pool() -> Vec<PoolModel> {
        model_pool(&ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3).unwrap(), None).unwrap()
    }

    #[test]
    fn pool_has_small_complete_models() {
        let pool = pool();
        assert_eq!(pool[0].name, "U_L");
        assert!(pool.len() > 1);
        for m in &pool {
            assert!(sized(&m.ordered));
            assert!(m.ordered.verify_axioms().passed());
            assert!(m.ordered.is_completely_lattice(1000).unwrap());
        }
    }

    #[test]
    fn zero_trials() {
        let v = search_compat_counterexample(&pool(), &SearchConfig { trials: 0, seed: 1, family: Family::Tolerance });
        assert_eq!(v.verdict, "no counterexample in 0 trials");
    }

    #[test]
    fn planted_tolerances_are_recognized_and_runs_repeat() {
        let pool = pool();
        let cfg = SearchConfig { trials: 200, seed: 11, family: Family::Tolerance };
        let a = search_compat_counterexample(&pool, &cfg);
        assert_eq!(a.planted, 20);
        assert_eq!(a.planted_recognized, 20);
        assert_eq!(a.unconfirmed, 0);
        let b = search_compat_counterexample(&pool, &cfg);
        assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    }

    #[test]
    fn general_family_reports_only_verified_candidates() {
        let pool = pool();
        let v = search_compat_counterexample(&pool, &SearchConfig { trials: 300, seed: 3, family: Family::General });
        assert_eq!(v.unconfirmed, 0);
        for c in &v.candidates {
            let m = pool.iter().find(|m| m.name == c.model).unwrap();
            let rows: Vec<Vec<String>> = serde_json::from_value(c.relation.clone()).unwrap();
            let l = m.ordered.lattice();
            let mat = rows.iter().flatten().map(|d| l.degree_by_name(d).unwrap()).collect();
            let r = LRelation::new(l, m.ordered.carrier(), m.ordered.carrier(), mat).unwrap();
            let b = tolerance::is_complete_relation_bruteforce(&m.ordered, &r, 1000).unwrap();
            assert!(b.clauses_hold() && !b.compatible);
        }
    }
}
