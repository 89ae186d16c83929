//! L-ordered sets: cones, intervals, convexity, infima and suprema.

use crate::error::{Error, Result};
use crate::fuzz::{self, LRelation, LSet, Universe};
use crate::lattice::{Degree, ResiduatedLattice};
use crate::report::{Check, Report};

/// Default number of L-sets an exhaustive sweep may enumerate.
pub const DEFAULT_BUDGET: u64 = 20_000;

/// An L-ordered set `⟨⟨U, ≈⟩, ⪯⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LOrderedSet {
    lattice: ResiduatedLattice,
    carrier: Universe,
    approx: LRelation,
    order: LRelation,
}

/// An L-interval `⟦v, u⟧ = U{v} ∩ L{u}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub lower: usize,
    pub upper: usize,
    pub set: LSet,
}

impl LOrderedSet {
    /// Bundle an L-equality and an L-order. Only shapes are checked here;
    /// see [`LOrderedSet::verify_axioms`] and [`LOrderedSet::checked`].
    pub fn new(approx: LRelation, order: LRelation) -> Result<Self> {
        if !approx.is_square() || !order.is_square() {
            return Err(Error::UniverseMismatch("order relations must be square".into()));
        }
        if approx.source() != order.source() || approx.lattice() != order.lattice() {
            return Err(Error::UniverseMismatch("≈ and ⪯ live on different carriers".into()));
        }
        Ok(LOrderedSet {
            lattice: approx.lattice().clone(),
            carrier: approx.source().clone(),
            approx,
            order,
        })
    }

    /// Like [`LOrderedSet::new`], but rejects structures violating the axioms.
    pub fn checked(approx: LRelation, order: LRelation) -> Result<Self> {
        let p = Self::new(approx, order)?;
        let report = p.verify_axioms();
        if report.passed() {
            Ok(p)
        } else {
            Err(Error::Axioms(report))
        }
    }

    /// Build from an order alone, with `≈` given by `(u⪯v) ∧ (v⪯u)`.
    pub fn from_order(order: LRelation) -> Result<Self> {
        let l = order.lattice().clone();
        let approx = LRelation::from_fn(&l, order.source(), |u, v| l.meet(order.get(u, v), order.get(v, u)));
        Self::new(approx, order)
    }

    /// The lattice itself ordered by its residuum, `u ⪯ v = u → v`.
    pub fn of_degrees(lattice: &ResiduatedLattice) -> Self {
        let u = Universe::new(lattice.element_names().iter().cloned()).expect("lattice names are unique");
        let d: Vec<Degree> = lattice.degrees().collect();
        let order = LRelation::from_fn(lattice, &u, |a, b| lattice.residuum(d[a], d[b]));
        let approx = LRelation::from_fn(lattice, &u, |a, b| lattice.biresiduum(d[a], d[b]));
        Self::new(approx, order).expect("square relations on one carrier")
    }

    pub fn lattice(&self) -> &ResiduatedLattice {
        &self.lattice
    }

    pub fn carrier(&self) -> &Universe {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn approx(&self) -> &LRelation {
        &self.approx
    }

    pub fn order(&self) -> &LRelation {
        &self.order
    }

    /// `u ⪯ v`.
    #[inline]
    pub fn le(&self, u: usize, v: usize) -> Degree {
        self.order.get(u, v)
    }

    /// `u ≈ v`.
    #[inline]
    pub fn eq_degree(&self, u: usize, v: usize) -> Degree {
        self.approx.get(u, v)
    }

    /// `u ≤ v` in the 1-cut of `⪯`.
    #[inline]
    pub fn le_crisp(&self, u: usize, v: usize) -> bool {
        self.order.get(u, v) == self.lattice.top()
    }

    pub fn name(&self, u: usize) -> &str {
        self.carrier.name(u)
    }

    /// Exhaustive check of the L-order axioms with witnesses.
    pub fn verify_axioms(&self) -> Report {
        let l = &self.lattice;
        let n = self.len();
        let name = |u: usize| self.carrier.name(u);
        let mut report = Report::new();

        let eq = fuzz::relation_properties(l, self.approx.matrix(), n);
        let mut c = Check::new("approx-equality", "≈ is reflexive, symmetric, transitive and separating");
        c.cases = (n * n * n) as u64;
        if let Some(x) = eq.reflexive_witness {
            c.fail(format!("{} ≈ {} ≠ 1", name(x), name(x)));
        } else if let Some((x, y)) = eq.symmetric_witness {
            c.fail(format!("{} ≈ {} ≠ {} ≈ {}", name(x), name(y), name(y), name(x)));
        } else if let Some((x, y, z)) = eq.transitive_witness {
            c.fail(format!("({}, {}, {})", name(x), name(y), name(z)));
        } else if let Some((x, y)) = eq.separation_witness {
            c.fail(format!("{} ≈ {} = 1 for distinct elements", name(x), name(y)));
        }
        report.push(c);

        let mut c = Check::new("order-compatible", "⪯ is compatible with ≈");
        c.cases = (n * n * n * n) as u64;
        if let Some(w) = fuzz::rel_compat_witness(l, self.order.matrix(), self.approx.matrix(), n) {
            let e = &w.elements;
            c.fail(format!(
                "(x, x′, y, y′) = ({}, {}, {}, {}): {} ≰ {}",
                name(e[0]),
                name(e[1]),
                name(e[2]),
                name(e[3]),
                l.name(w.lhs),
                l.name(w.rhs)
            ));
        }
        report.push(c);

        let mut c = Check::new("order-reflexive", "u ⪯ u = 1");
        for u in 0..n {
            c.record(self.le(u, u) == l.top(), || name(u).to_string());
        }
        report.push(c);

        let mut c = Check::new("order-transitive", "(u⪯v) ⊗ (v⪯w) ≤ u⪯w");
        for u in 0..n {
            for v in 0..n {
                for w in 0..n {
                    let ok = l.leq(l.tensor(self.le(u, v), self.le(v, w)), self.le(u, w));
                    c.record(ok, || format!("({}, {}, {})", name(u), name(v), name(w)));
                }
            }
        }
        report.push(c);

        let mut c = Check::new("order-antisymmetric", "(u⪯v) ∧ (v⪯u) ≤ u≈v");
        for u in 0..n {
            for v in 0..n {
                let lhs = l.meet(self.le(u, v), self.le(v, u));
                c.record(l.leq(lhs, self.eq_degree(u, v)), || {
                    format!(
                        "({}, {}): {} ≰ {}",
                        name(u),
                        name(v),
                        l.name(lhs),
                        l.name(self.eq_degree(u, v))
                    )
                });
            }
        }
        report.push(c);
        report
    }

    fn require(&self, v: &LSet) -> Result<()> {
        if v.lattice() != &self.lattice {
            return Err(Error::Ownership);
        }
        if v.universe() != &self.carrier {
            return Err(Error::UniverseMismatch("L-set is not on the ordered set's carrier".into()));
        }
        Ok(())
    }

    fn wrap(&self, m: Vec<Degree>) -> LSet {
        LSet::from_parts(&self.lattice, &self.carrier, m)
    }

    pub fn lset(&self, m: Vec<Degree>) -> Result<LSet> {
        LSet::new(&self.lattice, &self.carrier, m)
    }

    /// `↓V(u) = ⋁_v (u⪯v) ⊗ V(v)`.
    pub fn lower_set(&self, v: &LSet) -> Result<LSet> {
        self.require(v)?;
        Ok(self.wrap(self.lower_set_raw(v.membership())))
    }

    /// `↑V(u) = ⋁_v (v⪯u) ⊗ V(v)`.
    pub fn upper_set(&self, v: &LSet) -> Result<LSet> {
        self.require(v)?;
        Ok(self.wrap(self.upper_set_raw(v.membership())))
    }

    /// `LV(v) = ⋀_u V(u) → (v⪯u)`.
    pub fn lower_cone(&self, v: &LSet) -> Result<LSet> {
        self.require(v)?;
        Ok(self.wrap(self.lower_cone_raw(v.membership())))
    }

    /// `UV(v) = ⋀_u V(u) → (u⪯v)`.
    pub fn upper_cone(&self, v: &LSet) -> Result<LSet> {
        self.require(v)?;
        Ok(self.wrap(self.upper_cone_raw(v.membership())))
    }

    pub(crate) fn lower_set_raw(&self, v: &[Degree]) -> Vec<Degree> {
        fuzz::rel_compose_set(&self.lattice, self.order.matrix(), v)
    }

    pub(crate) fn upper_set_raw(&self, v: &[Degree]) -> Vec<Degree> {
        fuzz::set_compose_rel(&self.lattice, v, self.order.matrix(), self.len())
    }

    pub(crate) fn lower_cone_raw(&self, v: &[Degree]) -> Vec<Degree> {
        let l = &self.lattice;
        (0..self.len())
            .map(|w| {
                let mut acc = l.top();
                for (u, &vu) in v.iter().enumerate() {
                    acc = l.meet(acc, l.residuum(vu, self.le(w, u)));
                }
                acc
            })
            .collect()
    }

    pub(crate) fn upper_cone_raw(&self, v: &[Degree]) -> Vec<Degree> {
        let l = &self.lattice;
        (0..self.len())
            .map(|w| {
                let mut acc = l.top();
                for (u, &vu) in v.iter().enumerate() {
                    acc = l.meet(acc, l.residuum(vu, self.le(u, w)));
                }
                acc
            })
            .collect()
    }

    /// The L-interval `⟦v, u⟧`; requires `v ≤ u` in the 1-cut.
    pub fn interval(&self, v: usize, u: usize) -> Result<Interval> {
        if v >= self.len() || u >= self.len() {
            return Err(Error::UniverseMismatch("interval endpoint outside the carrier".into()));
        }
        if !self.le_crisp(v, u) {
            return Err(Error::InvalidInterval {
                lower: self.name(v).to_string(),
                upper: self.name(u).to_string(),
            });
        }
        Ok(Interval {
            lower: v,
            upper: u,
            set: self.wrap(self.interval_raw(v, u)),
        })
    }

    pub(crate) fn interval_raw(&self, v: usize, u: usize) -> Vec<Degree> {
        let l = &self.lattice;
        (0..self.len()).map(|w| l.meet(self.le(v, w), self.le(w, u))).collect()
    }

    /// `V = ↓V ∩ ↑V`.
    pub fn is_convex(&self, v: &LSet) -> Result<bool> {
        self.require(v)?;
        Ok(self.convexity_defect(v.membership()).is_none())
    }

    /// First element where `V` and `↓V ∩ ↑V` differ.
    pub(crate) fn convexity_defect(&self, v: &[Degree]) -> Option<usize> {
        let l = &self.lattice;
        let down = self.lower_set_raw(v);
        let up = self.upper_set_raw(v);
        (0..self.len()).find(|&w| l.meet(down[w], up[w]) != v[w])
    }

    /// The infimum by its defining property `LV(u) ∧ U(LV)(u) = 1`.
    pub fn infimum(&self, v: &LSet) -> Result<Option<usize>> {
        self.require(v)?;
        self.infimum_raw(v.membership())
    }

    /// The supremum by its defining property `UV(u) ∧ L(UV)(u) = 1`.
    pub fn supremum(&self, v: &LSet) -> Result<Option<usize>> {
        self.require(v)?;
        self.supremum_raw(v.membership())
    }

    pub(crate) fn infimum_raw(&self, v: &[Degree]) -> Result<Option<usize>> {
        let cone = self.lower_cone_raw(v);
        // U(LV)(w) = ⋀_x LV(x) → (x⪯w)
        self.unique_bound(&cone, |x, w| self.le(x, w), "infimum")
    }

    pub(crate) fn supremum_raw(&self, v: &[Degree]) -> Result<Option<usize>> {
        let cone = self.upper_cone_raw(v);
        // L(UV)(w) = ⋀_x UV(x) → (w⪯x)
        self.unique_bound(&cone, |x, w| self.le(w, x), "supremum")
    }

    fn unique_bound(&self, cone: &[Degree], rel: impl Fn(usize, usize) -> Degree, what: &str) -> Result<Option<usize>> {
        let l = &self.lattice;
        let top = l.top();
        let mut found = None;
        for w in 0..self.len() {
            if cone[w] != top {
                continue;
            }
            let all = cone.iter().enumerate().all(|(x, &c)| l.residuum(c, rel(x, w)) == top);
            if all {
                if let Some(prev) = found {
                    return Err(Error::CorruptedOrder(format!(
                        "two elements `{}` and `{}` qualify as {what}",
                        self.name(prev),
                        self.name(w)
                    )));
                }
                found = Some(w);
            }
        }
        Ok(found)
    }

    /// `max V`: the supremum when it belongs to `V` in degree 1.
    pub fn maximum(&self, v: &LSet) -> Result<Option<usize>> {
        Ok(self.supremum(v)?.filter(|&s| v.get(s) == self.lattice.top()))
    }

    /// `min V`: the infimum when it belongs to `V` in degree 1.
    pub fn minimum(&self, v: &LSet) -> Result<Option<usize>> {
        Ok(self.infimum(v)?.filter(|&s| v.get(s) == self.lattice.top()))
    }

    /// Enumerate all L-sets on the carrier and look for one lacking an
    /// infimum or a supremum. `Ok(None)` means completely lattice.
    pub fn completeness_failure(&self, budget: u64) -> Result<Option<LSet>> {
        for m in fuzz::all_memberships(&self.lattice, self.len(), budget)? {
            if self.infimum_raw(&m)?.is_none() || self.supremum_raw(&m)?.is_none() {
                return Ok(Some(self.wrap(m)));
            }
        }
        Ok(None)
    }

    pub fn is_completely_lattice(&self, budget: u64) -> Result<bool> {
        Ok(self.completeness_failure(budget)?.is_none())
    }

    /// Zadeh image `f(V)` of an L-set of elements along a carrier map.
    pub fn image(&self, f: &[usize], v: &LSet, target: &LOrderedSet) -> Result<LSet> {
        self.require(v)?;
        v.zadeh_image(f, target.carrier())
    }

    /// Greatest and least elements of the 1-cut (`sup U`, `inf U`).
    pub fn bounds(&self) -> Result<(usize, usize)> {
        let empty = vec![self.lattice.bot(); self.len()];
        let top = self.infimum_raw(&empty)?;
        let bot = self.supremum_raw(&empty)?;
        match (bot, top) {
            (Some(b), Some(t)) => Ok((b, t)),
            _ => Err(Error::NotCompletelyLattice("the empty L-set has no infimum or supremum".into())),
        }
    }
}

/// `(u₁⪯u₂) ≤ (f(u₁)⪯f(u₂))` for all `u₁, u₂`.
pub fn is_isotone(f: &[usize], p: &LOrderedSet, q: &LOrderedSet) -> bool {
    let l = p.lattice();
    f.len() == p.len()
        && f.iter().all(|&y| y < q.len())
        && (0..p.len()).all(|a| (0..p.len()).all(|b| l.leq(p.le(a, b), q.le(f[a], f[b]))))
}

/// Bijective and `(u₁⪯u₂) = (f(u₁)⪯f(u₂))`.
pub fn is_isomorphism(f: &[usize], p: &LOrderedSet, q: &LOrderedSet) -> bool {
    if f.len() != p.len() || p.len() != q.len() || p.lattice() != q.lattice() {
        return false;
    }
    let mut hit = vec![false; q.len()];
    for &y in f {
        if y >= q.len() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    (0..p.len()).all(|a| (0..p.len()).all(|b| p.le(a, b) == q.le(f[a], f[b])))
}

/// All L-sets on a carrier together with their infima and suprema.
pub struct InfSupTable {
    pub sets: Vec<Vec<Degree>>,
    pub inf: Vec<usize>,
    pub sup: Vec<usize>,
}

impl InfSupTable {
    /// Fails with [`Error::NotCompletelyLattice`] naming the first L-set
    /// without an infimum or supremum.
    pub fn build(p: &LOrderedSet, budget: u64) -> Result<Self> {
        let sets = fuzz::all_memberships(p.lattice(), p.len(), budget)?;
        let mut inf = Vec::with_capacity(sets.len());
        let mut sup = Vec::with_capacity(sets.len());
        for m in &sets {
            match (p.infimum_raw(m)?, p.supremum_raw(m)?) {
                (Some(i), Some(s)) => {
                    inf.push(i);
                    sup.push(s);
                }
                _ => {
                    return Err(Error::NotCompletelyLattice(format!(
                        "{} has no infimum or supremum",
                        p.wrap(m.clone()).display()
                    )))
                }
            }
        }
        Ok(InfSupTable { sets, inf, sup })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// The power lattice `⟨⟨L^X, ≈^X⟩, S⟩`.
#[derive(Clone, Debug)]
pub struct PowerLattice {
    pub universe: Universe,
    pub ordered: LOrderedSet,
    /// Carrier element `i` is the L-set `sets[i]` on `universe`.
    pub sets: Vec<Vec<Degree>>,
}

impl PowerLattice {
    /// Carrier elements are all L-sets on `x`; when `x` is a singleton they
    /// are named by their only degree, otherwise `(d₁,…,dₙ)`.
    pub fn new(lattice: &ResiduatedLattice, x: &Universe, budget: u64) -> Result<Self> {
        let sets = fuzz::all_memberships(lattice, x.len(), budget)?;
        let names: Vec<String> = sets
            .iter()
            .map(|m| {
                let parts: Vec<&str> = m.iter().map(|&d| lattice.name(d)).collect();
                if parts.len() == 1 {
                    parts[0].to_string()
                } else {
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        let carrier = Universe::new(names)?;
        let order = LRelation::from_fn(lattice, &carrier, |a, b| fuzz::subsethood(lattice, &sets[a], &sets[b]));
        let approx = LRelation::from_fn(lattice, &carrier, |a, b| fuzz::similarity(lattice, &sets[a], &sets[b]));
        Ok(PowerLattice {
            universe: x.clone(),
            ordered: LOrderedSet::new(approx, order)?,
            sets,
        })
    }

    fn index_of(&self, m: &[Degree]) -> usize {
        fuzz::membership_rank(self.ordered.lattice(), m)
    }

    /// `(inf V)(x) = ⋀_W V(W) → W(x)`.
    pub fn closed_form_inf(&self, v: &LSet) -> Result<usize> {
        self.ordered.require(v)?;
        let l = self.ordered.lattice();
        let m: Vec<Degree> = (0..self.universe.len())
            .map(|x| l.big_meet(self.sets.iter().enumerate().map(|(w, set)| l.residuum(v.get(w), set[x]))))
            .collect();
        Ok(self.index_of(&m))
    }

    /// `(sup V)(x) = ⋁_W V(W) ⊗ W(x)`.
    pub fn closed_form_sup(&self, v: &LSet) -> Result<usize> {
        self.ordered.require(v)?;
        let l = self.ordered.lattice();
        let m: Vec<Degree> = (0..self.universe.len())
            .map(|x| l.big_join(self.sets.iter().enumerate().map(|(w, set)| l.tensor(v.get(w), set[x]))))
            .collect();
        Ok(self.index_of(&m))
    }
}
