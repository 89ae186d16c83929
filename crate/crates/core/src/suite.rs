//! Named property suites run against a loaded model.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::laws::{self, Sweep};
use crate::model::ModelBundle;
use crate::report::Report;

pub const SUITES: &[&str] = &[
    "lattice",
    "order-axioms",
    "cone-calculus",
    "power-relations",
    "galois",
    "completeness",
    "representation",
    "factorization",
    "closure-system",
];

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: bool,
    pub budget: u64,
    pub seed: u64,
    #[serde(flatten)]
    pub report: Report,
}

impl SuiteReport {
    /// One line per check; failures carry the check id and witness.
    pub fn text(&self) -> String {
        let mut out = String::new();
        for c in &self.report.checks {
            if c.passed {
                out.push_str(&format!("PASS {} ({} cases)\n", c.id, c.cases));
            } else {
                out.push_str(&format!(
                    "FAIL {}: {} -- witness: {}\n",
                    c.id,
                    c.statement,
                    c.witness.as_deref().unwrap_or("none")
                ));
            }
        }
        let verdict = if self.passed { "passed" } else { "failed" };
        out.push_str(&format!("suite {} {verdict}\n", self.suite));
        out
    }
}

pub fn run_suite(bundle: &ModelBundle, suite: &str, sweep: &Sweep) -> Result<SuiteReport> {
    let named: Vec<(String, crate::fuzz::LRelation)> =
        bundle.relations.iter().map(|(n, r)| (n.clone(), r.clone())).collect();
    let report = match suite {
        "lattice" => bundle.lattice.verify_axioms(),
        "order-axioms" => laws::order::order_axioms(bundle.ordered()?),
        "cone-calculus" => {
            let p = bundle.ordered()?;
            let mut r = laws::order::cone_identities(p, sweep);
            r.extend(laws::order::infima(p, sweep));
            r.extend(laws::order::isotone_maps(p, sweep));
            if let Some(pl) = &bundle.power {
                r.extend(laws::order::power_inf(pl, sweep));
            }
            r
        }
        "power-relations" => laws::power::power_relations(bundle.ordered()?, &named, sweep),
        "galois" => {
            let p = bundle.ordered()?;
            let mut r = laws::galois::galois_laws(p, sweep);
            let maps = (p.len() as u128).checked_pow(2 * p.len() as u32).unwrap_or(u128::MAX);
            if maps <= sweep.budget as u128 {
                r.push(laws::galois::extensive_enumeration(p, sweep.budget));
            }
            r
        }
        "completeness" => laws::tolerance::completeness(bundle.ordered()?, &named, sweep)?,
        "representation" => laws::tolerance::representation(bundle.ordered()?, sweep)?,
        "factorization" => laws::tolerance::factorization(bundle.ordered()?, &[], sweep)?,
        "closure-system" => laws::tolerance::closure_system(bundle.ordered()?, sweep)?,
        other => {
            return Err(Error::UnknownName(format!(
                "suite `{other}`; known suites: {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        suite: suite.to_string(),
        passed: report.passed(),
        budget: sweep.budget,
        seed: sweep.seed,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{parse_model, Validation};

    fn u_l() -> ModelBundle {
        parse_model(
            r#"{ "lattice": { "kind": "chain", "family": "lukasiewicz", "size": 3 },
                 "ordered_set": { "kind": "degrees" } }"#,
            Validation::Strict,
        )
        .unwrap()
    }

    #[test]
    fn every_suite_passes_on_u_l() {
        let m = u_l();
        for s in SUITES {
            let rep = run_suite(&m, s, &Sweep::default()).unwrap();
            assert!(rep.passed, "{}", rep.text());
        }
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_suite(&u_l(), "nope", &Sweep::default()), Err(Error::UnknownName(_))));
    }

    #[test]
    fn broken_order_names_the_anchor() {
        let m = parse_model(
            r#"{ "lattice": { "kind": "chain", "family": "godel", "size": 2 },
                 "ordered_set": { "kind": "explicit", "carrier": ["a","b"],
                   "order": [["1","1"],["0","0"]], "approx": [["1","0"],["0","1"]] } }"#,
            Validation::Lenient,
        )
        .unwrap();
        let rep = run_suite(&m, "order-axioms", &Sweep::default()).unwrap();
        assert!(!rep.passed);
        assert!(rep.text().contains("FAIL order-reflexive"), "{}", rep.text());
    }
}
