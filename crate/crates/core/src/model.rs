//! Single-document JSON models: a lattice, an optional ordered set and named
//! L-sets, relations and map pairs on its carrier.
//!
//! ```json
//! {
//!   "lattice": { "kind": "chain", "family": "lukasiewicz", "size": 3 },
//!   "ordered_set": { "kind": "degrees" },
//!   "sets": { "V": { "0": "1/2", "1": "1" } },
//!   "relations": { "tol": [["1", "1", "0"], ["1", "1", "1"], ["0", "1", "1"]], "eq": "approx" },
//!   "pairs": { "id": { "f": ["0", "1/2", "1"], "g": ["0", "1/2", "1"] } }
//! }
//! ```
//!
//! Missing set entries are the bottom degree. A relation is a matrix of
//! degree names in carrier order, or one of `"order"`, `"approx"`,
//! `"identity"`, `"total"`.

use std::path::Path;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fuzz::{LRelation, LSet, Universe};
use crate::galois::GaloisPair;
use crate::lattice::{ChainKind, Degree, LatticeTables, ResiduatedLattice};
use crate::order::{LOrderedSet, PowerLattice, DEFAULT_BUDGET};

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct Document {
    lattice: LatticeDoc,
    #[serde(default)]
    ordered_set: Option<OrderDoc>,
    #[serde(default)]
    sets: IndexMap<String, IndexMap<String, String>>,
    #[serde(default)]
    relations: IndexMap<String, RelationDoc>,
    #[serde(default)]
    pairs: IndexMap<String, PairDoc>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum LatticeDoc {
    Chain {
        family: String,
        size: usize,
    },
    Tables {
        elements: Vec<String>,
        meet: Vec<Vec<String>>,
        join: Vec<Vec<String>>,
        tensor: Vec<Vec<String>>,
        residuum: Vec<Vec<String>>,
    },
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum OrderDoc {
    /// `U_L`: the degrees ordered by the residuum.
    Degrees,
    /// Explicit matrices; `approx` defaults to `(u⪯v) ∧ (v⪯u)`.
    Explicit {
        carrier: Vec<String>,
        order: Vec<Vec<String>>,
        #[serde(default)]
        approx: Option<Vec<Vec<String>>>,
    },
    /// All L-sets on `universe` ordered by subsethood.
    PowerOf { universe: Vec<String> },
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum RelationDoc {
    Builtin(String),
    Rows(Vec<Vec<String>>),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct PairDoc {
    f: Vec<String>,
    g: Vec<String>,
}

/// How much of the ordered set is checked on load.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    /// Lattice and order axioms.
    Strict,
    /// Lattice axioms and shapes only, so a broken order can still be
    /// examined by the order-axioms suite.
    Lenient,
}

/// A loaded model with every name resolved.
#[derive(Clone, Debug)]
pub struct ModelBundle {
    pub lattice: ResiduatedLattice,
    pub ordered: Option<LOrderedSet>,
    /// Present when the ordered set is a power lattice.
    pub power: Option<PowerLattice>,
    pub sets: IndexMap<String, LSet>,
    pub relations: IndexMap<String, LRelation>,
    pub pairs: IndexMap<String, GaloisPair>,
}

pub fn load_model(path: impl AsRef<Path>, validation: Validation) -> Result<ModelBundle> {
    let text = std::fs::read_to_string(path)?;
    parse_model(&text, validation)
}

pub fn parse_model(text: &str, validation: Validation) -> Result<ModelBundle> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    build(doc, validation)
}

fn chain_kind(family: &str) -> Result<ChainKind> {
    match family.to_ascii_lowercase().as_str() {
        "lukasiewicz" | "łukasiewicz" | "luk" => Ok(ChainKind::Lukasiewicz),
        "godel" | "gödel" | "god" => Ok(ChainKind::Godel),
        "goguen" | "product" => Ok(ChainKind::Goguen),
        other => Err(Error::Format(format!("unknown chain family `{other}`"))),
    }
}

fn family_name(kind: ChainKind) -> &'static str {
    match kind {
        ChainKind::Lukasiewicz => "lukasiewicz",
        ChainKind::Godel => "godel",
        ChainKind::Goguen => "goguen",
    }
}

fn build_lattice(doc: &LatticeDoc) -> Result<ResiduatedLattice> {
    match doc {
        LatticeDoc::Chain { family, size } => ResiduatedLattice::chain(chain_kind(family)?, *size),
        LatticeDoc::Tables {
            elements,
            meet,
            join,
            tensor,
            residuum,
        } => {
            let index = |name: &str| {
                elements
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| Error::UnknownName(format!("lattice element `{name}`")))
            };
            let table = |t: &[Vec<String>], which: &str| -> Result<Vec<Vec<usize>>> {
                if t.len() != elements.len() || t.iter().any(|row| row.len() != elements.len()) {
                    return Err(Error::Format(format!("{which} table must be {0}×{0}", elements.len())));
                }
                t.iter().map(|row| row.iter().map(|x| index(x)).collect()).collect()
            };
            let meet = table(meet, "meet")?;
            let n = elements.len();
            let bot = (0..n)
                .find(|&x| (0..n).all(|y| meet[x][y] == x))
                .ok_or_else(|| Error::Format("the meet table has no least element".into()))?;
            let top = (0..n)
                .find(|&x| (0..n).all(|y| meet[x][y] == y))
                .ok_or_else(|| Error::Format("the meet table has no greatest element".into()))?;
            ResiduatedLattice::from_tables(&LatticeTables {
                elements: elements.clone(),
                meet,
                join: table(join, "join")?,
                tensor: table(tensor, "tensor")?,
                residuum: table(residuum, "residuum")?,
                bot,
                top,
            })
        }
    }
}

fn degree_rows(l: &ResiduatedLattice, rows: &[Vec<String>], n: usize, what: &str) -> Result<Vec<Degree>> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Format(format!("{what} must be a {n}×{n} matrix")));
    }
    rows.iter().flatten().map(|d| l.degree_by_name(d)).collect()
}

fn build(doc: Document, validation: Validation) -> Result<ModelBundle> {
    let l = build_lattice(&doc.lattice)?;
    let mut power = None;
    let ordered = match &doc.ordered_set {
        None => None,
        Some(OrderDoc::Degrees) => Some(LOrderedSet::of_degrees(&l)),
        Some(OrderDoc::PowerOf { universe }) => {
            let pl = PowerLattice::new(&l, &Universe::new(universe.iter().cloned())?, DEFAULT_BUDGET)?;
            let p = pl.ordered.clone();
            power = Some(pl);
            Some(p)
        }
        Some(OrderDoc::Explicit { carrier, order, approx }) => {
            let u = Universe::new(carrier.iter().cloned())?;
            let order = LRelation::new(&l, &u, &u, degree_rows(&l, order, u.len(), "order")?)?;
            let p = match approx {
                Some(a) => LOrderedSet::new(LRelation::new(&l, &u, &u, degree_rows(&l, a, u.len(), "approx")?)?, order)?,
                None => LOrderedSet::from_order(order)?,
            };
            Some(p)
        }
    };
    if let (Some(p), Validation::Strict) = (&ordered, validation) {
        let rep = p.verify_axioms();
        if !rep.passed() {
            return Err(Error::Axioms(rep));
        }
    }
    let need_carrier = |what: &str| {
        ordered
            .as_ref()
            .ok_or_else(|| Error::Format(format!("{what} needs an ordered_set")))
    };
    let mut sets = IndexMap::new();
    for (name, entries) in &doc.sets {
        let p = need_carrier("sets")?;
        let mut m = vec![l.bot(); p.len()];
        for (x, d) in entries {
            let i = p
                .carrier()
                .index_of(x)
                .ok_or_else(|| Error::UnknownName(format!("element `{x}` in set `{name}`")))?;
            m[i] = l.degree_by_name(d)?;
        }
        sets.insert(name.clone(), p.lset(m)?);
    }
    let mut relations = IndexMap::new();
    for (name, r) in &doc.relations {
        let p = need_carrier("relations")?;
        let c = p.carrier();
        let rel = match r {
            RelationDoc::Builtin(b) => match b.as_str() {
                "order" => p.order().clone(),
                "approx" => p.approx().clone(),
                "identity" => LRelation::identity(&l, c),
                "total" => LRelation::total(&l, c),
                other => return Err(Error::UnknownName(format!("builtin relation `{other}`"))),
            },
            RelationDoc::Rows(rows) => LRelation::new(&l, c, c, degree_rows(&l, rows, c.len(), name)?)?,
        };
        relations.insert(name.clone(), rel);
    }
    let mut pairs = IndexMap::new();
    for (name, pd) in &doc.pairs {
        let p = need_carrier("pairs")?;
        let resolve = |m: &[String], which: &str| -> Result<Vec<usize>> {
            if m.len() != p.len() {
                return Err(Error::Format(format!("{which} of pair `{name}` needs {} entries", p.len())));
            }
            m.iter().map(|x| p.carrier().lookup(x)).collect()
        };
        pairs.insert(name.clone(), GaloisPair::new(resolve(&pd.f, "f")?, resolve(&pd.g, "g")?));
    }
    Ok(ModelBundle {
        lattice: l,
        ordered,
        power,
        sets,
        relations,
        pairs,
    })
}

impl ModelBundle {
    pub fn ordered(&self) -> Result<&LOrderedSet> {
        self.ordered
            .as_ref()
            .ok_or_else(|| Error::Format("the model has no ordered_set".into()))
    }

    pub fn set(&self, name: &str) -> Result<&LSet> {
        self.sets.get(name).ok_or_else(|| Error::UnknownName(format!("set `{name}`")))
    }

    pub fn relation(&self, name: &str) -> Result<&LRelation> {
        self.relations
            .get(name)
            .ok_or_else(|| Error::UnknownName(format!("relation `{name}`")))
    }

    pub fn pair(&self, name: &str) -> Result<&GaloisPair> {
        self.pairs.get(name).ok_or_else(|| Error::UnknownName(format!("pair `{name}`")))
    }

    /// The document this bundle would be loaded from.
    pub fn to_json(&self) -> Value {
        let mut doc = serde_json::Map::new();
        doc.insert("lattice".into(), lattice_json(&self.lattice));
        if let Some(p) = &self.ordered {
            let o = match &self.power {
                Some(pl) => json!({ "kind": "power_of", "universe": pl.universe.names() }),
                None if is_degrees(p) => json!({ "kind": "degrees" }),
                None => json!({
                    "kind": "explicit",
                    "carrier": p.carrier().names(),
                    "order": rows_json(p.order()),
                    "approx": rows_json(p.approx()),
                }),
            };
            doc.insert("ordered_set".into(), o);
        }
        if !self.sets.is_empty() {
            let sets: serde_json::Map<String, Value> = self
                .sets
                .iter()
                .map(|(name, s)| {
                    let entries: serde_json::Map<String, Value> = (0..s.universe().len())
                        .filter(|&x| s.get(x) != self.lattice.bot())
                        .map(|x| (s.universe().name(x).to_string(), json!(self.lattice.name(s.get(x)))))
                        .collect();
                    (name.clone(), Value::Object(entries))
                })
                .collect();
            doc.insert("sets".into(), Value::Object(sets));
        }
        if !self.relations.is_empty() {
            let rels: serde_json::Map<String, Value> =
                self.relations.iter().map(|(n, r)| (n.clone(), rows_json(r))).collect();
            doc.insert("relations".into(), Value::Object(rels));
        }
        if !self.pairs.is_empty() {
            let p = self.ordered.as_ref().expect("pairs need a carrier");
            let names = |m: &[usize]| -> Vec<String> { m.iter().map(|&x| p.name(x).to_string()).collect() };
            let pairs: serde_json::Map<String, Value> = self
                .pairs
                .iter()
                .map(|(n, pr)| (n.clone(), json!({ "f": names(&pr.f), "g": names(&pr.g) })))
                .collect();
            doc.insert("pairs".into(), Value::Object(pairs));
        }
        Value::Object(doc)
    }
}

fn is_degrees(p: &LOrderedSet) -> bool {
    let u = LOrderedSet::of_degrees(p.lattice());
    u.carrier().names() == p.carrier().names() && u.order() == p.order() && u.approx() == p.approx()
}

pub fn lattice_json(l: &ResiduatedLattice) -> Value {
    if let Some((kind, n)) = l.chain_kind() {
        return json!({ "kind": "chain", "family": family_name(kind), "size": n });
    }
    let t = l.tables();
    let names = |m: &[Vec<usize>]| -> Vec<Vec<&str>> {
        m.iter().map(|row| row.iter().map(|&x| t.elements[x].as_str()).collect()).collect()
    };
    json!({
        "kind": "tables",
        "elements": t.elements,
        "meet": names(&t.meet),
        "join": names(&t.join),
        "tensor": names(&t.tensor),
        "residuum": names(&t.residuum),
    })
}

pub fn rows_json(r: &LRelation) -> Value {
    let l = r.lattice();
    let rows: Vec<Vec<&str>> = (0..r.source().len())
        .map(|x| (0..r.target().len()).map(|y| l.name(r.get(x, y))).collect())
        .collect();
    json!(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LUK3: &str = r#"{
        "lattice": { "kind": "chain", "family": "lukasiewicz", "size": 3 },
        "ordered_set": { "kind": "degrees" },
        "sets": { "V": { "1/2": "1", "1": "1/2" } },
        "relations": { "chain": [["1","1","0"],["1","1","1"],["0","1","1"]], "total": "total" },
        "pairs": { "id": { "f": ["0","1/2","1"], "g": ["0","1/2","1"] } }
    }"#;

    #[test]
    fn loads_and_round_trips() {
        let m = parse_model(LUK3, Validation::Strict).unwrap();
        assert_eq!(m.ordered().unwrap().len(), 3);
        let v = m.set("V").unwrap();
        assert_eq!(m.lattice.name(v.get(0)), "0");
        assert_eq!(m.lattice.name(v.get(2)), "1/2");
        assert_eq!(m.relation("total").unwrap(), &LRelation::total(&m.lattice, m.ordered().unwrap().carrier()));
        assert_eq!(m.pair("id").unwrap(), &GaloisPair::identity(3));
        let again = parse_model(&m.to_json().to_string(), Validation::Strict).unwrap();
        assert_eq!(again.to_json(), m.to_json());
    }

    #[test]
    fn empty_document_is_a_parse_error() {
        match parse_model("", Validation::Strict) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (1, 0)),
            other => panic!("{other:?}"),
        }
        match parse_model("{\n  \"lattice\": 3\n}", Validation::Strict) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn corrupted_residuum_is_rejected() {
        let doc = r#"{ "lattice": { "kind": "tables", "elements": ["0","1"],
            "meet": [["0","0"],["0","1"]], "join": [["0","1"],["1","1"]],
            "tensor": [["0","0"],["0","1"]], "residuum": [["1","1"],["1","1"]] } }"#;
        match parse_model(doc, Validation::Strict) {
            Err(Error::Axioms(rep)) => assert!(rep.first_failure().unwrap().id.contains("adjoint"), "{}", rep.summary()),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn broken_order_only_loads_leniently() {
        let doc = r#"{ "lattice": { "kind": "chain", "family": "godel", "size": 2 },
            "ordered_set": { "kind": "explicit", "carrier": ["a","b"],
              "order": [["1","1"],["1","1"]], "approx": [["1","0"],["0","1"]] } }"#;
        assert!(matches!(parse_model(doc, Validation::Strict), Err(Error::Axioms(_))));
        assert!(parse_model(doc, Validation::Lenient).is_ok());
    }

    #[test]
    fn unknown_names() {
        let doc = LUK3.replace("\"1/2\": \"1\"", "\"7\": \"1\"");
        assert!(matches!(parse_model(&doc, Validation::Strict), Err(Error::UnknownName(_))));
        let doc = LUK3.replace("\"1/2\": \"1\"", "\"1/2\": \"3/4\"");
        assert!(parse_model(&doc, Validation::Strict).is_err());
    }

    #[test]
    fn power_of_builds_the_power_lattice() {
        let doc = r#"{ "lattice": { "kind": "chain", "family": "godel", "size": 3 },
            "ordered_set": { "kind": "power_of", "universe": ["x","y"] } }"#;
        let m = parse_model(doc, Validation::Strict).unwrap();
        assert_eq!(m.ordered().unwrap().len(), 9);
        assert!(m.power.is_some());
    }
}
