//! Power L-relations `R→`, `R←` and `R⁺` on L-sets.

use crate::error::{Error, Result};
use crate::fuzz::{self, LRelation, LSet, Universe};
use crate::lattice::{Degree, ResiduatedLattice};
use crate::order::{Interval, LOrderedSet};

fn require(r: &LRelation, a: &LSet, b: &LSet) -> Result<()> {
    if !r.is_square() {
        return Err(Error::UniverseMismatch("power relations need a relation on one universe".into()));
    }
    for s in [a, b] {
        if s.lattice() != r.lattice() {
            return Err(Error::Ownership);
        }
        if s.universe() != r.source() {
            return Err(Error::UniverseMismatch("L-set and relation live on different universes".into()));
        }
    }
    Ok(())
}

/// `R→(A, B) = S(A, R∘B)`.
pub fn forward(r: &LRelation, a: &LSet, b: &LSet) -> Result<Degree> {
    require(r, a, b)?;
    Ok(forward_raw(r.lattice(), r.matrix(), a.membership(), b.membership()))
}

/// `R←(A, B) = S(B, A∘R)`.
pub fn backward(r: &LRelation, a: &LSet, b: &LSet) -> Result<Degree> {
    require(r, a, b)?;
    Ok(backward_raw(r.lattice(), r.matrix(), a.membership(), b.membership()))
}

/// `R⁺(A, B) = R→(A, B) ∧ R←(A, B)`.
pub fn power(r: &LRelation, a: &LSet, b: &LSet) -> Result<Degree> {
    require(r, a, b)?;
    Ok(power_raw(r.lattice(), r.matrix(), a.membership(), b.membership()))
}

pub(crate) fn forward_raw(l: &ResiduatedLattice, r: &[Degree], a: &[Degree], b: &[Degree]) -> Degree {
    fuzz::subsethood(l, a, &fuzz::rel_compose_set(l, r, b))
}

pub(crate) fn backward_raw(l: &ResiduatedLattice, r: &[Degree], a: &[Degree], b: &[Degree]) -> Degree {
    fuzz::subsethood(l, b, &fuzz::set_compose_rel(l, a, r, a.len()))
}

pub(crate) fn power_raw(l: &ResiduatedLattice, r: &[Degree], a: &[Degree], b: &[Degree]) -> Degree {
    l.meet(forward_raw(l, r, a, b), backward_raw(l, r, a, b))
}

/// `R⁺` over a fixed family of L-sets, with `R∘B` and `A∘R` computed once
/// per member.
pub(crate) struct PowerTable<'a> {
    lattice: &'a ResiduatedLattice,
    sets: &'a [Vec<Degree>],
    right: Vec<Vec<Degree>>,
    left: Vec<Vec<Degree>>,
}

impl<'a> PowerTable<'a> {
    pub(crate) fn new(l: &'a ResiduatedLattice, r: &[Degree], sets: &'a [Vec<Degree>]) -> Self {
        let n = sets.first().map_or(0, |s| s.len());
        PowerTable {
            lattice: l,
            sets,
            right: sets.iter().map(|b| fuzz::rel_compose_set(l, r, b)).collect(),
            left: sets.iter().map(|a| fuzz::set_compose_rel(l, a, r, n)).collect(),
        }
    }

    pub(crate) fn forward(&self, a: usize, b: usize) -> Degree {
        fuzz::subsethood(self.lattice, &self.sets[a], &self.right[b])
    }

    pub(crate) fn backward(&self, a: usize, b: usize) -> Degree {
        fuzz::subsethood(self.lattice, &self.sets[b], &self.left[a])
    }

    pub(crate) fn get(&self, a: usize, b: usize) -> Degree {
        let f = self.forward(a, b);
        if f == self.lattice.bot() {
            return f;
        }
        self.lattice.meet(f, self.backward(a, b))
    }
}

/// The L-ordered set `⟨⟨M, ≈⁺⟩, ⪯⁺⟩` on a family of convex L-sets. Members
/// are named by their membership display.
pub fn power_order_on_convex(p: &LOrderedSet, members: &[LSet]) -> Result<LOrderedSet> {
    for (k, v) in members.iter().enumerate() {
        if v.lattice() != p.lattice() {
            return Err(Error::Ownership);
        }
        if v.universe() != p.carrier() {
            return Err(Error::UniverseMismatch(format!("member {k} is not on the carrier")));
        }
        if let Some(x) = p.convexity_defect(v.membership()) {
            return Err(Error::Precondition(format!(
                "member {k} {} is not convex: ↓V ∩ ↑V differs at `{}`",
                v.display(),
                p.name(x)
            )));
        }
    }
    let l = p.lattice();
    let names: Vec<String> = members.iter().map(|v| v.display()).collect();
    let carrier = Universe::new(names)?;
    let sets: Vec<Vec<Degree>> = members.iter().map(|v| v.membership().to_vec()).collect();
    let order = PowerTable::new(l, p.order().matrix(), &sets);
    let approx = PowerTable::new(l, p.approx().matrix(), &sets);
    let le = LRelation::from_fn(l, &carrier, |a, b| order.get(a, b));
    let eq = LRelation::from_fn(l, &carrier, |a, b| approx.get(a, b));
    LOrderedSet::checked(eq, le)
}

/// Which power relation an interval shortcut evaluates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shortcut {
    /// `⟦v₁,u₁⟧ ⪯⁺ ⟦v₂,u₂⟧ = (u₁⪯u₂) ∧ (v₁⪯v₂)`
    Order,
    /// `⟦v₁,u₁⟧ ≈⁺ ⟦v₂,u₂⟧ = (u₁≈u₂) ∧ (v₁≈v₂)`
    Approx,
}

/// Power degree between two intervals computed from their endpoints only.
pub fn interval_power_shortcut(p: &LOrderedSet, a: &Interval, b: &Interval, which: Shortcut) -> Degree {
    endpoint_degree(p, (a.lower, a.upper), (b.lower, b.upper), which)
}

pub(crate) fn endpoint_degree(p: &LOrderedSet, a: (usize, usize), b: (usize, usize), which: Shortcut) -> Degree {
    let l = p.lattice();
    match which {
        Shortcut::Order => l.meet(p.le(a.1, b.1), p.le(a.0, b.0)),
        Shortcut::Approx => l.meet(p.eq_degree(a.1, b.1), p.eq_degree(a.0, b.0)),
    }
}
