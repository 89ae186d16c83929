//! Isotone L-Galois connections, their fixpoints and the induced closure
//! and interior operators.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzz::{LRelation, Universe};
use crate::lattice::Degree;
use crate::order::LOrderedSet;
use crate::report::{Check, Report};

/// A pair of maps `f: U → V`, `g: V → U` given by element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaloisPair {
    pub f: Vec<usize>,
    pub g: Vec<usize>,
}

/// A pair `(u, v)` where `f(u)⪯v` and `u⪯g(v)` differ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GaloisDefect {
    pub u: usize,
    pub v: usize,
    /// `f(u) ⪯ v`
    pub lhs: Degree,
    /// `u ⪯ g(v)`
    pub rhs: Degree,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Extensivity {
    /// `f(u) ≤ u` for all `u`.
    pub deflating_f: bool,
    /// `g(u) ≥ u` for all `u`.
    pub inflating_g: bool,
}

impl Extensivity {
    pub fn extensive(self) -> bool {
        self.deflating_f && self.inflating_g
    }

    /// Exactly one condition holds. For a Galois pair either one implies the
    /// other, so this flags a pair that is not Galois.
    pub fn one_sided(self) -> bool {
        self.deflating_f != self.inflating_g
    }
}

fn check_map(m: &[usize], from: usize, to: usize, which: &str) -> Result<()> {
    if m.len() != from {
        return Err(Error::Precondition(format!("{which} has {} entries, expected {from}", m.len())));
    }
    if let Some(x) = m.iter().position(|&y| y >= to) {
        return Err(Error::Precondition(format!("{which} maps element {x} outside the target")));
    }
    Ok(())
}

impl GaloisPair {
    pub fn new(f: Vec<usize>, g: Vec<usize>) -> Self {
        GaloisPair { f, g }
    }

    pub fn identity(n: usize) -> Self {
        GaloisPair::new((0..n).collect(), (0..n).collect())
    }

    /// Both maps are total between the two carriers.
    pub fn check_shape(&self, p: &LOrderedSet, q: &LOrderedSet) -> Result<()> {
        check_map(&self.f, p.len(), q.len(), "f")?;
        check_map(&self.g, q.len(), p.len(), "g")
    }

    /// `C = g ∘ f`.
    pub fn closure(&self) -> Vec<usize> {
        self.f.iter().map(|&v| self.g[v]).collect()
    }

    /// `I = f ∘ g`.
    pub fn interior(&self) -> Vec<usize> {
        self.g.iter().map(|&u| self.f[u]).collect()
    }
}

/// The worst violation of `f(u)⪯v = u⪯g(v)`: the pair whose two sides are
/// least equivalent (lowest `lhs ↔ rhs`), first in `(u, v)` order on ties.
pub fn galois_defect(p: &LOrderedSet, q: &LOrderedSet, pair: &GaloisPair) -> Result<Option<GaloisDefect>> {
    pair.check_shape(p, q)?;
    if p.lattice() != q.lattice() {
        return Err(Error::Ownership);
    }
    let l = p.lattice();
    let mut worst: Option<(usize, GaloisDefect)> = None;
    for u in 0..p.len() {
        for v in 0..q.len() {
            let lhs = q.le(pair.f[u], v);
            let rhs = p.le(u, pair.g[v]);
            if lhs == rhs {
                continue;
            }
            let h = l.height(l.biresiduum(lhs, rhs));
            if worst.as_ref().is_none_or(|(best, _)| h < *best) {
                worst = Some((h, GaloisDefect { u, v, lhs, rhs }));
            }
        }
    }
    Ok(worst.map(|(_, d)| d))
}

pub fn is_isotone_galois(p: &LOrderedSet, q: &LOrderedSet, pair: &GaloisPair) -> Result<bool> {
    Ok(galois_defect(p, q, pair)?.is_none())
}

/// Faster yes/no form of [`is_isotone_galois`] for a pair on one carrier.
pub(crate) fn is_galois_on(p: &LOrderedSet, f: &[usize], g: &[usize]) -> bool {
    (0..p.len()).all(|u| (0..p.len()).all(|v| p.le(f[u], v) == p.le(u, g[v])))
}

pub fn extensivity(p: &LOrderedSet, pair: &GaloisPair) -> Result<Extensivity> {
    pair.check_shape(p, p)?;
    Ok(Extensivity {
        deflating_f: (0..p.len()).all(|u| p.le_crisp(pair.f[u], u)),
        inflating_g: (0..p.len()).all(|u| p.le_crisp(u, pair.g[u])),
    })
}

pub fn is_extensive(p: &LOrderedSet, pair: &GaloisPair) -> Result<bool> {
    Ok(extensivity(p, pair)?.extensive())
}

/// `Fix⟨f,g⟩` with the L-order inherited from the first component.
#[derive(Clone, Debug)]
pub struct FixpointSet {
    pub points: Vec<(usize, usize)>,
    pub ordered: LOrderedSet,
}

/// Enumerate the fixpoints `⟨u, f(u)⟩` with `g(f(u)) = u` and check that the
/// order read off either component agrees.
pub fn fixpoints(p: &LOrderedSet, q: &LOrderedSet, pair: &GaloisPair) -> Result<FixpointSet> {
    pair.check_shape(p, q)?;
    let points: Vec<(usize, usize)> = (0..p.len())
        .filter(|&u| pair.g[pair.f[u]] == u)
        .map(|u| (u, pair.f[u]))
        .collect();
    for &(u1, v1) in &points {
        for &(u2, v2) in &points {
            if p.le(u1, u2) != q.le(v1, v2) || p.eq_degree(u1, u2) != q.eq_degree(v1, v2) {
                return Err(Error::CorruptedPair(format!(
                    "fixpoints ⟨{},{}⟩ and ⟨{},{}⟩ are ordered differently on the two sides",
                    p.name(u1),
                    q.name(v1),
                    p.name(u2),
                    q.name(v2)
                )));
            }
        }
    }
    let names: Vec<String> = points.iter().map(|&(u, v)| format!("⟨{},{}⟩", p.name(u), q.name(v))).collect();
    let carrier = Universe::new(names)?;
    let l = p.lattice();
    let le = LRelation::from_fn(l, &carrier, |a, b| p.le(points[a].0, points[b].0));
    let eq = LRelation::from_fn(l, &carrier, |a, b| p.eq_degree(points[a].0, points[b].0));
    Ok(FixpointSet {
        points,
        ordered: LOrderedSet::new(eq, le)?,
    })
}

/// The elements fixed by a self-map, with the inherited L-order.
pub fn fixed_elements(p: &LOrderedSet, m: &[usize]) -> Result<(Vec<usize>, LOrderedSet)> {
    check_map(m, p.len(), p.len(), "map")?;
    let fixed: Vec<usize> = (0..p.len()).filter(|&u| m[u] == u).collect();
    let carrier = Universe::new(fixed.iter().map(|&u| p.name(u).to_string()))?;
    let l = p.lattice();
    let le = LRelation::from_fn(l, &carrier, |a, b| p.le(fixed[a], fixed[b]));
    let eq = LRelation::from_fn(l, &carrier, |a, b| p.eq_degree(fixed[a], fixed[b]));
    Ok((fixed, LOrderedSet::new(eq, le)?))
}

fn operator_report(p: &LOrderedSet, c: &[usize], closure: bool) -> Report {
    let (kind, bound) = if closure {
        ("closure", "C(u) ≥ u")
    } else {
        ("interior", "I(u) ≤ u")
    };
    let l = p.lattice();
    let n = p.len();
    let mut report = Report::new();
    if c.len() != n || c.iter().any(|&v| v >= n) {
        let mut chk = Check::new(format!("{kind}-total"), "the map is total on the carrier");
        chk.fail(format!("{} entries for {n} elements", c.len()));
        report.push(chk);
        return report;
    }
    let mut chk = Check::new(format!("{kind}-bound"), bound);
    for u in 0..n {
        let ok = if closure { p.le_crisp(u, c[u]) } else { p.le_crisp(c[u], u) };
        chk.record(ok, || p.name(u).to_string());
    }
    report.push(chk);
    let mut chk = Check::new(format!("{kind}-idempotent"), "applying the map twice changes nothing");
    for u in 0..n {
        chk.record(c[c[u]] == c[u], || p.name(u).to_string());
    }
    report.push(chk);
    let mut chk = Check::new(format!("{kind}-isotone"), "u₁⪯u₂ ≤ m(u₁)⪯m(u₂)");
    for a in 0..n {
        for b in 0..n {
            chk.record(l.leq(p.le(a, b), p.le(c[a], c[b])), || format!("({}, {})", p.name(a), p.name(b)));
        }
    }
    report.push(chk);
    report
}

pub fn verify_closure(p: &LOrderedSet, c: &[usize]) -> Report {
    operator_report(p, c, true)
}

pub fn verify_interior(p: &LOrderedSet, i: &[usize]) -> Report {
    operator_report(p, i, false)
}

/// `⟨f₁,g₁⟩ ⪯ ⟨f₂,g₂⟩ = ⋀_u (f₂(u)⪯f₁(u)) ∧ ⋀_v (g₁(v)⪯g₂(v))`.
pub fn igal_order(p: &LOrderedSet, q: &LOrderedSet, a: &GaloisPair, b: &GaloisPair) -> Degree {
    let l = p.lattice();
    let fs = l.big_meet((0..p.len()).map(|u| q.le(b.f[u], a.f[u])));
    let gs = l.big_meet((0..q.len()).map(|v| p.le(a.g[v], b.g[v])));
    l.meet(fs, gs)
}

/// `⟨f₁,g₁⟩ ≈ ⟨f₂,g₂⟩ = ⋀_u (f₂(u)≈f₁(u)) ∧ ⋀_v (g₁(v)≈g₂(v))`.
pub fn igal_approx(p: &LOrderedSet, q: &LOrderedSet, a: &GaloisPair, b: &GaloisPair) -> Degree {
    let l = p.lattice();
    let fs = l.big_meet((0..p.len()).map(|u| q.eq_degree(b.f[u], a.f[u])));
    let gs = l.big_meet((0..q.len()).map(|v| p.eq_degree(a.g[v], b.g[v])));
    l.meet(fs, gs)
}

/// The L-ordered set of a family of Galois pairs under the IGal relations.
pub fn igal_ordered_set(p: &LOrderedSet, q: &LOrderedSet, pairs: &[GaloisPair]) -> Result<LOrderedSet> {
    let names: Vec<String> = (0..pairs.len()).map(|i| format!("c{i}")).collect();
    let carrier = Universe::new(names)?;
    let l = p.lattice();
    let le = LRelation::from_fn(l, &carrier, |a, b| igal_order(p, q, &pairs[a], &pairs[b]));
    let eq = LRelation::from_fn(l, &carrier, |a, b| igal_approx(p, q, &pairs[a], &pairs[b]));
    LOrderedSet::new(eq, le)
}

/// Every self-map of an `n`-element carrier, first element most significant.
pub(crate) fn all_self_maps(n: usize, budget: u64) -> Result<Vec<Vec<usize>>> {
    let needed = (n as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::with_capacity(needed as usize);
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.clone());
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < n {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// All extensive isotone Galois connections on a completely lattice `P`.
///
/// Each candidate `g ≥ id` determines its lower adjoint
/// `f(u) = inf {(u⪯g(v))/v}`, so only `g` is enumerated.
pub fn extensive_pairs(p: &LOrderedSet, budget: u64) -> Result<Vec<GaloisPair>> {
    let n = p.len();
    let choices: Vec<Vec<usize>> = (0..n).map(|u| (0..n).filter(|&w| p.le_crisp(u, w)).collect()).collect();
    let needed = choices.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::new();
    let mut pos = vec![0usize; n];
    'outer: loop {
        let g: Vec<usize> = (0..n).map(|u| choices[u][pos[u]]).collect();
        let mut f = Vec::with_capacity(n);
        let mut ok = true;
        for u in 0..n {
            let m: Vec<Degree> = (0..n).map(|v| p.le(u, g[v])).collect();
            let w = p.infimum_raw(&m)?;
            match w {
                Some(w) => f.push(w),
                None => {
                    ok = false;
                    break;
                }
            }
        }
        if ok && is_galois_on(p, &f, &g) && (0..n).all(|u| p.le_crisp(f[u], u)) {
            out.push(GaloisPair::new(f, g));
        }
        let mut k = n;
        loop {
            if k == 0 {
                break 'outer;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < choices[k].len() {
                break;
            }
            pos[k] = 0;
        }
    }
    out.sort();
    Ok(out)
}

/// Reference enumeration: filter all `|U|^|U| × |U|^|U|` map pairs.
pub fn extensive_pairs_exhaustive(p: &LOrderedSet, budget: u64) -> Result<Vec<GaloisPair>> {
    let maps = all_self_maps(p.len(), budget)?;
    let needed = (maps.len() as u128) * (maps.len() as u128);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut out = Vec::new();
    for f in maps.iter().filter(|f| (0..p.len()).all(|u| p.le_crisp(f[u], u))) {
        for g in &maps {
            if (0..p.len()).all(|u| p.le_crisp(u, g[u])) && is_galois_on(p, f, g) {
                out.push(GaloisPair::new(f.clone(), g.clone()));
            }
        }
    }
    out.sort();
    Ok(out)
}
