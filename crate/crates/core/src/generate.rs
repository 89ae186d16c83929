//! Seeded generation of model documents. Orders come from factors by
//! complete tolerances, so they are valid by construction.

use indexmap::IndexMap;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::fuzz::{LRelation, Universe};
use crate::galois::{self, GaloisPair};
use crate::lattice::{ChainKind, Degree, ResiduatedLattice};
use crate::model::ModelBundle;
use crate::order::{LOrderedSet, PowerLattice};
use crate::tolerance;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Chain,
    ExtensivePair,
    CompleteTolerance,
    FactorOrder,
    Relation,
}

impl std::str::FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" => Ok(Kind::Chain),
            "extensive-pair" => Ok(Kind::ExtensivePair),
            "complete-tolerance" => Ok(Kind::CompleteTolerance),
            "factor-order" => Ok(Kind::FactorOrder),
            "relation" => Ok(Kind::Relation),
            other => Err(Error::UnknownName(format!(
                "kind `{other}`; expected chain, extensive-pair, complete-tolerance, factor-order or relation"
            ))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct GenerateParams {
    pub kind: Kind,
    pub family: ChainKind,
    pub size: usize,
    /// Carrier is `L^power`; 1 means `U_L`.
    pub power: usize,
    /// Degrees a random relation draws from, by name; all when `None`.
    pub degrees: Option<Vec<String>>,
    /// Random relations are reflexive and symmetric.
    pub tolerance: bool,
    pub seed: u64,
    pub budget: u64,
}

impl GenerateParams {
    pub fn new(kind: Kind, family: ChainKind, size: usize, seed: u64) -> Self {
        GenerateParams {
            kind,
            family,
            size,
            power: 1,
            degrees: None,
            tolerance: false,
            seed,
            budget: crate::search::POOL_BUDGET,
        }
    }
}

fn carrier(l: &ResiduatedLattice, params: &GenerateParams) -> Result<(LOrderedSet, Option<PowerLattice>)> {
    match params.power {
        0 => Err(Error::InvalidSize("power must be at least 1".into())),
        1 => Ok((LOrderedSet::of_degrees(l), None)),
        k => {
            let pl = PowerLattice::new(l, &Universe::indexed("x", k), params.budget)?;
            Ok((pl.ordered.clone(), Some(pl)))
        }
    }
}

fn random_pair(rng: &mut ChaCha8Rng, p: &LOrderedSet, budget: u64) -> Result<GaloisPair> {
    let pairs = galois::extensive_pairs(p, budget)?;
    Ok(pairs.choose(rng).expect("the identity pair always exists").clone())
}

pub fn generate(params: &GenerateParams) -> Result<ModelBundle> {
    let l = ResiduatedLattice::chain(params.family, params.size)?;
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let mut bundle = ModelBundle {
        lattice: l.clone(),
        ordered: None,
        power: None,
        sets: IndexMap::new(),
        relations: IndexMap::new(),
        pairs: IndexMap::new(),
    };
    if params.kind == Kind::Chain {
        bundle.ordered = Some(LOrderedSet::of_degrees(&l));
        return Ok(bundle);
    }
    let (p, power) = carrier(&l, params)?;
    match params.kind {
        Kind::Chain => unreachable!(),
        Kind::ExtensivePair => {
            let pair = random_pair(&mut rng, &p, params.budget)?;
            bundle.pairs.insert("pair".into(), pair);
        }
        Kind::CompleteTolerance => {
            let pair = random_pair(&mut rng, &p, params.budget)?;
            bundle.relations.insert("tol".into(), tolerance::tolerance_from_pair(&p, &pair)?);
            bundle.pairs.insert("endpoints".into(), pair);
        }
        Kind::FactorOrder => {
            let pair = random_pair(&mut rng, &p, params.budget)?;
            let r = tolerance::tolerance_from_pair(&p, &pair)?;
            let f = tolerance::factor(&p, &r, params.budget)?;
            bundle.ordered = Some(f.ordered);
            return Ok(bundle);
        }
        Kind::Relation => {
            let pool: Vec<Degree> = match &params.degrees {
                None => l.degrees().collect(),
                Some(names) => names.iter().map(|d| l.degree_by_name(d)).collect::<Result<_>>()?,
            };
            if pool.is_empty() {
                return Err(Error::Precondition("no degrees to draw from".into()));
            }
            let n = p.len();
            let mut m = vec![l.top(); n * n];
            for x in 0..n {
                for y in 0..n {
                    if params.tolerance && x >= y {
                        continue;
                    }
                    let d = pool[rng.gen_range(0..pool.len())];
                    m[x * n + y] = d;
                    if params.tolerance {
                        m[y * n + x] = d;
                    }
                }
            }
            bundle.relations.insert("rel".into(), LRelation::new(&l, p.carrier(), p.carrier(), m)?);
        }
    }
    bundle.ordered = Some(p);
    bundle.power = power;
    Ok(bundle)
}
