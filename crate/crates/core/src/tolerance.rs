//! Complete L-relations and complete L-tolerances: testers, blocks, classes,
//! factorization and the correspondence with extensive Galois connections.

use std::collections::HashSet;

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::fuzz::{self, CompatWitness, LRelation, LSet, Universe};
use crate::galois::{self, Extensivity, FixpointSet, GaloisDefect, GaloisPair};
use crate::lattice::Degree;
use crate::order::{is_isomorphism, InfSupTable, Interval, LOrderedSet};
use crate::power::{self, PowerTable, Shortcut};

fn require_relation(p: &LOrderedSet, r: &LRelation) -> Result<()> {
    if r.lattice() != p.lattice() {
        return Err(Error::Ownership);
    }
    if !r.is_square() || r.source() != p.carrier() {
        return Err(Error::UniverseMismatch("relation is not on the ordered set's carrier".into()));
    }
    Ok(())
}

fn require_tolerance(p: &LOrderedSet, r: &LRelation) -> Result<()> {
    require_relation(p, r)?;
    let props = fuzz::relation_properties(p.lattice(), r.matrix(), p.len());
    if let Some(x) = props.reflexive_witness {
        return Err(Error::Precondition(format!("not reflexive at `{}`", p.name(x))));
    }
    if let Some((x, y)) = props.symmetric_witness {
        return Err(Error::Precondition(format!("not symmetric at (`{}`, `{}`)", p.name(x), p.name(y))));
    }
    Ok(())
}

/// Outcome of the definitional completeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BruteReport {
    pub compatible: bool,
    pub compat_witness: Option<CompatWitness>,
    /// `R⁺(V₁,V₂) ≤ R(inf V₁, inf V₂)` for all `V₁, V₂`.
    pub inf_clause: bool,
    /// `R⁺(V₁,V₂) ≤ R(sup V₁, sup V₂)` for all `V₁, V₂`.
    pub sup_clause: bool,
    /// First violating `(V₁, V₂)` of each clause, as indices into the oracle's L-set table.
    pub inf_witness: Option<(usize, usize)>,
    pub sup_witness: Option<(usize, usize)>,
    /// Element pairs `(a, b)` at which some clause is violated, sorted.
    /// Empty when the sweep stopped at the first violation.
    pub defects: Vec<(usize, usize)>,
}

impl BruteReport {
    pub fn complete(&self) -> bool {
        self.compatible && self.inf_clause && self.sup_clause
    }

    /// Both bound clauses hold, whatever compatibility says.
    pub fn clauses_hold(&self) -> bool {
        self.inf_clause && self.sup_clause
    }

    /// First violating `(V₁, V₂)` over both clauses in canonical order.
    pub fn witness(&self) -> Option<(usize, usize)> {
        match (self.inf_witness, self.sup_witness) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }
}

/// Every L-set of a completely lattice carrier with its infimum and
/// supremum, reusable across many relations.
pub struct CompletenessOracle {
    ordered: LOrderedSet,
    table: InfSupTable,
}

impl CompletenessOracle {
    pub fn new(p: &LOrderedSet, budget: u64) -> Result<Self> {
        Ok(CompletenessOracle {
            ordered: p.clone(),
            table: InfSupTable::build(p, budget)?,
        })
    }

    pub fn ordered(&self) -> &LOrderedSet {
        &self.ordered
    }

    pub fn table(&self) -> &InfSupTable {
        &self.table
    }

    pub fn lset(&self, i: usize) -> LSet {
        self.ordered.lset(self.table.sets[i].clone()).expect("table sets live on the carrier")
    }

    /// Full sweep: compatibility, both clauses and all defect pairs.
    pub fn check(&self, r: &LRelation) -> Result<BruteReport> {
        require_relation(&self.ordered, r)?;
        Ok(self.check_raw(r.matrix(), true))
    }

    /// The bound clauses without compatibility, stopping at the first violation.
    pub fn clauses_only(&self, r: &LRelation) -> Result<BruteReport> {
        require_relation(&self.ordered, r)?;
        let mut rep = self.clauses_raw(r.matrix(), false);
        rep.compatible = true;
        Ok(rep)
    }

    pub(crate) fn check_raw(&self, r: &[Degree], all_defects: bool) -> BruteReport {
        let p = &self.ordered;
        let compat_witness = fuzz::rel_compat_witness(p.lattice(), r, p.approx().matrix(), p.len());
        let mut rep = self.clauses_raw(r, all_defects);
        rep.compatible = compat_witness.is_none();
        rep.compat_witness = compat_witness;
        rep
    }

    pub(crate) fn clauses_raw(&self, r: &[Degree], all_defects: bool) -> BruteReport {
        let p = &self.ordered;
        let l = p.lattice();
        let n = p.len();
        let t = &self.table;
        let pt = PowerTable::new(l, r, &t.sets);
        let mut inf_witness = None;
        let mut sup_witness = None;
        let mut defects = HashSet::new();
        'sweep: for i in 0..t.len() {
            for j in 0..t.len() {
                let ri = r[t.inf[i] * n + t.inf[j]];
                let rs = r[t.sup[i] * n + t.sup[j]];
                if ri == l.top() && rs == l.top() {
                    continue;
                }
                let d = pt.get(i, j);
                if !l.leq(d, ri) {
                    inf_witness.get_or_insert((i, j));
                    defects.insert((t.inf[i], t.inf[j]));
                }
                if !l.leq(d, rs) {
                    sup_witness.get_or_insert((i, j));
                    defects.insert((t.sup[i], t.sup[j]));
                }
                if !all_defects && (inf_witness.is_some() || sup_witness.is_some()) {
                    break 'sweep;
                }
            }
        }
        let mut defects: Vec<_> = if all_defects { defects.into_iter().collect() } else { Vec::new() };
        defects.sort_unstable();
        BruteReport {
            compatible: true,
            compat_witness: None,
            inf_clause: inf_witness.is_none(),
            sup_clause: sup_witness.is_none(),
            inf_witness,
            sup_witness,
            defects,
        }
    }
}

/// Definitional completeness test of an arbitrary relation on `P`.
pub fn is_complete_relation_bruteforce(p: &LOrderedSet, r: &LRelation, budget: u64) -> Result<BruteReport> {
    CompletenessOracle::new(p, budget)?.check(r)
}

/// The class `[u]∼ = v ↦ u∼v`.
pub fn class_of(r: &LRelation, u: usize) -> LSet {
    LSet::from_parts(r.lattice(), r.target(), (0..r.target().len()).map(|v| r.get(u, v)).collect())
}

/// `(u∼, u^∼) = (inf [u]∼, sup [u]∼)`.
pub fn tol_endpoints(p: &LOrderedSet, r: &LRelation, u: usize) -> Result<(usize, usize)> {
    require_relation(p, r)?;
    endpoint_raw(p, r, u)
}

fn endpoint_raw(p: &LOrderedSet, r: &LRelation, u: usize) -> Result<(usize, usize)> {
    let class: Vec<Degree> = (0..p.len()).map(|v| r.get(u, v)).collect();
    match (p.infimum_raw(&class)?, p.supremum_raw(&class)?) {
        (Some(a), Some(b)) => Ok((a, b)),
        _ => Err(Error::NotCompletelyLattice(format!("the class of `{}` has no infimum or supremum", p.name(u)))),
    }
}

/// Both endpoint maps `u ↦ u∼` and `u ↦ u^∼`.
pub fn endpoint_maps(p: &LOrderedSet, r: &LRelation) -> Result<GaloisPair> {
    require_relation(p, r)?;
    let mut f = Vec::with_capacity(p.len());
    let mut g = Vec::with_capacity(p.len());
    for u in 0..p.len() {
        let (a, b) = endpoint_raw(p, r, u)?;
        f.push(a);
        g.push(b);
    }
    Ok(GaloisPair::new(f, g))
}

/// The endpoint pair of a complete tolerance, verified to be an extensive
/// isotone Galois connection.
pub fn pair_from_tolerance(p: &LOrderedSet, r: &LRelation) -> Result<GaloisPair> {
    require_tolerance(p, r)?;
    let pair = endpoint_maps(p, r)?;
    if let Some(d) = galois::galois_defect(p, p, &pair)? {
        return Err(Error::NotComplete(format!(
            "endpoint maps violate the Galois condition at ({}, {})",
            p.name(d.u),
            p.name(d.v)
        )));
    }
    if !galois::is_extensive(p, &pair)? {
        return Err(Error::NotComplete("endpoint maps are not extensive".into()));
    }
    Ok(pair)
}

pub(crate) fn tolerance_from_maps_raw(p: &LOrderedSet, f: &[usize], g: &[usize]) -> Vec<Degree> {
    let l = p.lattice();
    let n = p.len();
    let mut m = Vec::with_capacity(n * n);
    for u in 0..n {
        for v in 0..n {
            m.push(l.meet(p.le(f[u], v), p.le(v, g[u])));
        }
    }
    m
}

/// `u ∼⟨f,g⟩ v = (f(u)⪯v) ∧ (v⪯g(u))` for an extensive isotone Galois pair.
pub fn tolerance_from_pair(p: &LOrderedSet, pair: &GaloisPair) -> Result<LRelation> {
    if let Some(d) = galois::galois_defect(p, p, pair)? {
        return Err(Error::Precondition(format!(
            "not an isotone Galois connection: f({0})⪯{1} ≠ {0}⪯g({1})",
            p.name(d.u),
            p.name(d.v)
        )));
    }
    if !galois::is_extensive(p, pair)? {
        return Err(Error::Precondition("the Galois connection is not extensive".into()));
    }
    let r = LRelation::from_parts(p.lattice(), p.carrier(), p.carrier(), tolerance_from_maps_raw(p, &pair.f, &pair.g));
    let back = endpoint_maps(p, &r)?;
    if &back != pair {
        return Err(Error::CorruptedPair("endpoints of the reconstructed tolerance differ from the pair".into()));
    }
    Ok(r)
}

/// Result of the endpoint-based completeness test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FastReport {
    pub endpoints: GaloisPair,
    pub galois_defect: Option<GaloisDefect>,
    pub extensivity: Extensivity,
    /// First `(u, v)` where `u∼v` differs from `(u∼⪯v) ∧ (v⪯u^∼)`,
    /// with the given and reconstructed degrees.
    pub reconstruction_defect: Option<(usize, usize, Degree, Degree)>,
}

impl FastReport {
    pub fn complete(&self) -> bool {
        self.galois_defect.is_none() && self.extensivity.extensive() && self.reconstruction_defect.is_none()
    }
}

/// A tolerance is complete iff its endpoint maps form an extensive isotone
/// Galois connection that reconstructs it.
pub fn is_complete_tolerance_fast(p: &LOrderedSet, r: &LRelation) -> Result<FastReport> {
    require_tolerance(p, r)?;
    let endpoints = endpoint_maps(p, r)?;
    Ok(fast_from_endpoints(p, r.matrix(), endpoints))
}

pub(crate) fn fast_from_endpoints(p: &LOrderedSet, r: &[Degree], endpoints: GaloisPair) -> FastReport {
    let n = p.len();
    let galois_defect = galois::galois_defect(p, p, &endpoints).expect("endpoint maps are total");
    let extensivity = galois::extensivity(p, &endpoints).expect("endpoint maps are total");
    let rebuilt = tolerance_from_maps_raw(p, &endpoints.f, &endpoints.g);
    let reconstruction_defect = (0..n * n)
        .find(|&k| rebuilt[k] != r[k])
        .map(|k| (k / n, k % n, r[k], rebuilt[k]));
    FastReport {
        endpoints,
        galois_defect,
        extensivity,
        reconstruction_defect,
    }
}

/// `B(x₁) ⊗ B(x₂) ≤ x₁∼x₂` for all `x₁, x₂`.
pub fn is_block(r: &LRelation, b: &LSet) -> bool {
    block_raw(r, b.membership())
}

fn block_raw(r: &LRelation, b: &[Degree]) -> bool {
    let l = r.lattice();
    let n = b.len();
    (0..n).all(|x| (0..n).all(|y| l.leq(l.tensor(b[x], b[y]), r.get(x, y))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockMode {
    /// Intervals `⟦v,u⟧` over fixpoints of the endpoint pair.
    Fast,
    /// Maximal blocks among all enumerated L-sets.
    Brute,
}

/// Maximal blocks, in fixpoint order (fast) or enumeration order (brute).
pub fn maximal_blocks(p: &LOrderedSet, r: &LRelation, mode: BlockMode, budget: u64) -> Result<Vec<LSet>> {
    require_tolerance(p, r)?;
    match mode {
        BlockMode::Fast => Ok(block_intervals(p, r)?.into_iter().map(|i| i.set).collect()),
        BlockMode::Brute => {
            let l = p.lattice();
            let blocks: Vec<Vec<Degree>> = fuzz::all_memberships(l, p.len(), budget)?
                .into_iter()
                .filter(|b| block_raw(r, b))
                .collect();
            let maximal = blocks
                .iter()
                .filter(|b| !blocks.iter().any(|c| c != *b && fuzz::is_subset(l, b, c)))
                .map(|b| LSet::from_parts(l, p.carrier(), b.clone()))
                .collect();
            Ok(maximal)
        }
    }
}

fn complete_pair(p: &LOrderedSet, r: &LRelation) -> Result<GaloisPair> {
    let rep = is_complete_tolerance_fast(p, r)?;
    if let Some((u, v, given, rebuilt)) = rep.reconstruction_defect {
        return Err(Error::NotComplete(format!(
            "defect at ({}, {}): {}∼{} = {} but the endpoints give {}",
            p.name(u),
            p.name(v),
            p.name(u),
            p.name(v),
            p.lattice().name(given),
            p.lattice().name(rebuilt)
        )));
    }
    if !rep.complete() {
        return Err(Error::NotComplete("endpoint maps are not an extensive Galois connection".into()));
    }
    Ok(rep.endpoints)
}

/// `⟦v, u⟧` for each fixpoint `⟨u, v⟩` of the endpoint pair.
pub fn block_intervals(p: &LOrderedSet, r: &LRelation) -> Result<Vec<Interval>> {
    let pair = complete_pair(p, r)?;
    let fix = galois::fixpoints(p, p, &pair)?;
    fix.points.iter().map(|&(u, v)| p.interval(v, u)).collect()
}

/// The class `[u]∼` as the interval `⟦u∼, u^∼⟧`, checked pointwise.
pub fn class_structure(p: &LOrderedSet, r: &LRelation, u: usize) -> Result<Interval> {
    require_tolerance(p, r)?;
    let (a, b) = endpoint_raw(p, r, u)?;
    let interval = p.interval(a, b).map_err(|_| {
        Error::NotComplete(format!("endpoints of the class of `{}` are not ordered", p.name(u)))
    })?;
    if let Some(v) = (0..p.len()).find(|&v| interval.set.get(v) != r.get(u, v)) {
        return Err(Error::NotComplete(format!(
            "class of `{}` differs from ⟦{}, {}⟧ at `{}`",
            p.name(u),
            p.name(a),
            p.name(b),
            p.name(v)
        )));
    }
    Ok(interval)
}

/// The factor `U/∼` with the data relating it to the fixpoints.
#[derive(Clone, Debug)]
pub struct Factor {
    pub pair: GaloisPair,
    pub blocks: Vec<Interval>,
    /// Carrier: one element `[v,u]` per block, ordered by `≈⁺` and `⪯⁺`.
    pub ordered: LOrderedSet,
    pub fixpoints: FixpointSet,
    /// Block `k` corresponds to fixpoint `to_fixpoint[k]`.
    pub to_fixpoint: Vec<usize>,
    /// `None` when the completeness sweep exceeded the budget.
    pub completely_lattice: Option<bool>,
}

/// Factorize `P` by a complete tolerance.
pub fn factor(p: &LOrderedSet, r: &LRelation, budget: u64) -> Result<Factor> {
    require_tolerance(p, r)?;
    let pair = complete_pair(p, r)?;
    let fix = galois::fixpoints(p, p, &pair)?;
    let blocks: Vec<Interval> = fix.points.iter().map(|&(u, v)| p.interval(v, u)).collect::<Result<_>>()?;
    let names: Vec<String> = blocks.iter().map(|b| format!("[{},{}]", p.name(b.lower), p.name(b.upper))).collect();
    let carrier = Universe::new(names)?;
    let l = p.lattice();
    let k = blocks.len();
    let mut le = Vec::with_capacity(k * k);
    let mut eq = Vec::with_capacity(k * k);
    for a in &blocks {
        for b in &blocks {
            let o = power::interval_power_shortcut(p, a, b, Shortcut::Order);
            let e = power::interval_power_shortcut(p, a, b, Shortcut::Approx);
            let (so, se) = (
                power::power_raw(l, p.order().matrix(), a.set.membership(), b.set.membership()),
                power::power_raw(l, p.approx().matrix(), a.set.membership(), b.set.membership()),
            );
            if o != so || e != se {
                return Err(Error::CorruptedOrder(format!(
                    "interval shortcut disagrees with the power relation between [{},{}] and [{},{}]",
                    p.name(a.lower),
                    p.name(a.upper),
                    p.name(b.lower),
                    p.name(b.upper)
                )));
            }
            le.push(o);
            eq.push(e);
        }
    }
    let ordered = LOrderedSet::new(
        LRelation::from_parts(l, &carrier, &carrier, eq),
        LRelation::from_parts(l, &carrier, &carrier, le),
    )?;
    let to_fixpoint: Vec<usize> = (0..k).collect();
    if !is_isomorphism(&to_fixpoint, &ordered, &fix.ordered) {
        return Err(Error::CorruptedOrder("factor is not isomorphic to the fixpoint set".into()));
    }
    let completely_lattice = match ordered.is_completely_lattice(budget) {
        Ok(b) => Some(b),
        Err(Error::BudgetExceeded { .. }) => None,
        Err(e) => return Err(e),
    };
    if completely_lattice == Some(false) {
        return Err(Error::NotCompletelyLattice("the factor".into()));
    }
    Ok(Factor {
        pair,
        blocks,
        ordered,
        fixpoints: fix,
        to_fixpoint,
        completely_lattice,
    })
}

/// `S(∼₁, ∼₂)` as L-sets on `U × U`.
pub fn ctol_order(a: &LRelation, b: &LRelation) -> Result<Degree> {
    a.subsethood(b)
}

/// All complete tolerances on `P`, in enumeration order of their
/// upper-triangle degrees. The result is checked to be a closure system.
pub fn enumerate_complete_tolerances(p: &LOrderedSet, budget: u64) -> Result<Vec<LRelation>> {
    let n = p.len();
    let l = p.lattice();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    let mut found = Vec::new();
    for m in fuzz::all_memberships(l, pairs.len(), budget)? {
        let r = tolerance_from_upper(p, &pairs, &m);
        let endpoints = endpoint_maps(p, &r)?;
        if fast_from_endpoints(p, r.matrix(), endpoints).complete() {
            found.push(r);
        }
    }
    check_closure_system(p, &found)?;
    Ok(found)
}

/// Every reflexive symmetric relation, in the same order as
/// [`enumerate_complete_tolerances`].
pub fn all_tolerances(p: &LOrderedSet, budget: u64) -> Result<Vec<LRelation>> {
    let n = p.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|x| (x + 1..n).map(move |y| (x, y))).collect();
    Ok(fuzz::all_memberships(p.lattice(), pairs.len(), budget)?
        .into_iter()
        .map(|m| tolerance_from_upper(p, &pairs, &m))
        .collect())
}

fn tolerance_from_upper(p: &LOrderedSet, pairs: &[(usize, usize)], m: &[Degree]) -> LRelation {
    let l = p.lattice();
    let n = p.len();
    let mut mat = vec![l.top(); n * n];
    for (&(x, y), &d) in pairs.iter().zip(m) {
        mat[x * n + y] = d;
        mat[y * n + x] = d;
    }
    LRelation::from_parts(l, p.carrier(), p.carrier(), mat)
}

fn check_closure_system(p: &LOrderedSet, family: &[LRelation]) -> Result<()> {
    let l = p.lattice();
    let members: HashSet<&[Degree]> = family.iter().map(|r| r.matrix()).collect();
    let total = LRelation::total(l, p.carrier());
    if !members.contains(total.matrix()) {
        return Err(Error::CorruptedOrder("the total relation is not a complete tolerance".into()));
    }
    for a in family {
        for b in family {
            let meet = a.intersection(b)?;
            if !members.contains(meet.matrix()) {
                return Err(Error::CorruptedOrder("complete tolerances are not closed under intersection".into()));
            }
        }
        for d in l.degrees() {
            let s = a.shift(d)?;
            if !members.contains(s.matrix()) {
                return Err(Error::CorruptedOrder(format!(
                    "complete tolerances are not closed under {}→(·)",
                    l.name(d)
                )));
            }
        }
    }
    Ok(())
}

/// A tolerance with everything derived from it.
#[derive(Clone, Debug)]
pub struct ToleranceAnalysis {
    pub ordered: LOrderedSet,
    pub relation: LRelation,
    pub fast: FastReport,
    /// Present only when the tolerance is complete.
    pub factor: Option<Factor>,
}

impl ToleranceAnalysis {
    pub fn new(p: &LOrderedSet, r: &LRelation, budget: u64) -> Result<Self> {
        let fast = is_complete_tolerance_fast(p, r)?;
        let factor = if fast.complete() { Some(factor(p, r, budget)?) } else { None };
        Ok(ToleranceAnalysis {
            ordered: p.clone(),
            relation: r.clone(),
            fast,
            factor,
        })
    }

    pub fn complete(&self) -> bool {
        self.fast.complete()
    }

    pub fn to_json(&self) -> Value {
        let p = &self.ordered;
        let l = p.lattice();
        let mut endpoints = Map::new();
        for u in 0..p.len() {
            endpoints.insert(
                p.name(u).to_string(),
                json!([p.name(self.fast.endpoints.f[u]), p.name(self.fast.endpoints.g[u])]),
            );
        }
        let mut out = Map::new();
        out.insert("complete".into(), json!(self.complete()));
        out.insert("endpoints".into(), Value::Object(endpoints));
        if let Some((u, v, given, rebuilt)) = self.fast.reconstruction_defect {
            out.insert(
                "defect".into(),
                json!({"pair": [p.name(u), p.name(v)], "given": l.name(given), "reconstructed": l.name(rebuilt)}),
            );
        }
        if let Some(fx) = &self.factor {
            let fixpoints: Vec<Value> =
                fx.fixpoints.points.iter().map(|&(u, v)| json!([p.name(u), p.name(v)])).collect();
            let blocks: Vec<Value> = fx
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "lower": p.name(b.lower),
                        "upper": p.name(b.upper),
                        "membership": membership_json(&b.set),
                    })
                })
                .collect();
            out.insert("fixpoints".into(), Value::Array(fixpoints));
            out.insert("blocks".into(), Value::Array(blocks));
            out.insert("factor".into(), ordered_json(&fx.ordered));
        }
        Value::Object(out)
    }
}

impl CompletenessOracle {
    /// Report with witnesses spelled out by name.
    pub fn report_json(&self, rep: &BruteReport) -> Value {
        let p = &self.ordered;
        let l = p.lattice();
        let t = &self.table;
        let clause = |w: Option<(usize, usize)>, at: &[usize]| match w {
            None => Value::Null,
            Some((i, j)) => json!({
                "v1": self.lset(i).display(),
                "v2": self.lset(j).display(),
                "at": [p.name(at[i]), p.name(at[j])],
            }),
        };
        let compat = rep.compat_witness.as_ref().map(|w| {
            json!({
                "elements": w.elements.iter().map(|&x| p.name(x)).collect::<Vec<_>>(),
                "lhs": l.name(w.lhs),
                "rhs": l.name(w.rhs),
            })
        });
        json!({
            "complete": rep.complete(),
            "compatible": rep.compatible,
            "compat_witness": compat,
            "inf_clause": rep.inf_clause,
            "sup_clause": rep.sup_clause,
            "inf_witness": clause(rep.inf_witness, &t.inf),
            "sup_witness": clause(rep.sup_witness, &t.sup),
            "defects": rep.defects.iter().map(|&(a, b)| json!([p.name(a), p.name(b)])).collect::<Vec<_>>(),
        })
    }
}

pub fn membership_json(s: &LSet) -> Value {
    let l = s.lattice();
    let mut m = Map::new();
    for x in 0..s.universe().len() {
        m.insert(s.universe().name(x).to_string(), json!(l.name(s.get(x))));
    }
    Value::Object(m)
}

pub fn matrix_json(r: &LRelation) -> Value {
    let l = r.lattice();
    let rows: Vec<Value> = (0..r.source().len())
        .map(|x| Value::Array((0..r.target().len()).map(|y| json!(l.name(r.get(x, y)))).collect()))
        .collect();
    Value::Array(rows)
}

pub fn ordered_json(p: &LOrderedSet) -> Value {
    json!({
        "carrier": p.carrier().names(),
        "approx": matrix_json(p.approx()),
        "order": matrix_json(p.order()),
    })
}
