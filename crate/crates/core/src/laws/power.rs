//! Laws of the power relations `R⁺`.

use crate::fuzz::{self, LRelation, LSet};
use crate::laws::{check_all, Ctx, Sweep};
use crate::lattice::Degree;
use crate::order::LOrderedSet;
use crate::power::{self, PowerTable, Shortcut};
use crate::report::{Check, Report};

/// Members handed to [`power::power_order_on_convex`] at most.
const MAX_ORDER_MEMBERS: usize = 150;

/// Every law of the power relations on `p`, over `⪯`, `≈` and `extra`.
pub fn power_relations(p: &LOrderedSet, extra: &[(String, LRelation)], sweep: &Sweep) -> Report {
    let c = Ctx::new(p);
    let l = c.l;
    let mut sets = c.sets(sweep, "power-sets");
    sets.sort_by_key(|v| v.iter().map(|d| d.index()).collect::<Vec<_>>());
    sets.dedup();
    let k = sets.len();
    let mut rels: Vec<(String, &LRelation)> = vec![("⪯".into(), p.order()), ("≈".into(), p.approx())];
    rels.extend(extra.iter().map(|(n, r)| (n.clone(), r)));
    let mut r = Report::new();

    // ext_basic: reflexivity, symmetry and transitivity carry over to R⁺.
    let triples: Vec<(usize, usize, usize)> = sweep
        .indices((k as u128).pow(3), "power-triples")
        .into_iter()
        .map(|i| {
            let k = k as u128;
            ((i / (k * k)) as usize, (i / k % k) as usize, (i % k) as usize)
        })
        .collect();
    let mut basic = Check::new("ext_basic", "R reflexive, symmetric or transitive implies the same for R⁺");
    // Every relation on the carrier when they fit the budget.
    let mut family: Vec<(String, Vec<Degree>)> = rels.iter().map(|(n, r)| (n.clone(), r.matrix().to_vec())).collect();
    if fuzz::lset_count(l, c.n * c.n) <= sweep.budget as u128 {
        if let Ok(all) = fuzz::all_memberships(l, c.n * c.n, sweep.budget) {
            family.extend(all.into_iter().map(|m| (c.show_rel(&m), m)));
        }
    }
    for (name, m) in &family {
        let props = fuzz::relation_properties(l, m, c.n);
        if !(props.reflexive || props.symmetric || props.transitive) {
            continue;
        }
        let t = PowerTable::new(l, m, &sets);
        if props.reflexive {
            for a in 0..k {
                basic.cases += 1;
                if basic.passed && t.get(a, a) != l.top() {
                    basic.fail(format!("{name}⁺ not reflexive at {}", c.show(&sets[a])));
                }
            }
        }
        for &(a, b, d) in &triples {
            if props.symmetric {
                basic.cases += 1;
                if basic.passed && t.get(a, b) != t.get(b, a) {
                    basic.fail(format!("{name}⁺ not symmetric at {}, {}", c.show(&sets[a]), c.show(&sets[b])));
                }
            }
            if props.transitive {
                basic.cases += 1;
                if basic.passed && !l.leq(l.tensor(t.get(a, b), t.get(b, d)), t.get(a, d)) {
                    basic.fail(format!(
                        "{name}⁺ not transitive at {}, {}, {}",
                        c.show(&sets[a]),
                        c.show(&sets[b]),
                        c.show(&sets[d])
                    ));
                }
            }
        }
    }
    r.push(basic);

    // ext_composition: R⁺∘Q⁺ ⊆ (R∘Q)⁺. A sampled inner join only shrinks the
    // left side, so a failure is still genuine.
    let pairs: Vec<(usize, usize)> = sweep
        .indices((k * k) as u128, "power-comp")
        .into_iter()
        .map(|i| ((i / k as u128) as usize, (i % k as u128) as usize))
        .collect();
    let mut comp = Check::new("ext_composition", "R⁺∘Q⁺ ⊆ (R∘Q)⁺");
    for (rn, rr) in &rels {
        for (qn, qr) in &rels {
            let rq = rr.compose(qr).expect("same universe");
            let tr = PowerTable::new(l, rr.matrix(), &sets);
            let tq = PowerTable::new(l, qr.matrix(), &sets);
            let trq = PowerTable::new(l, rq.matrix(), &sets);
            for &(a, d) in &pairs {
                comp.cases += 1;
                if !comp.passed {
                    continue;
                }
                let lhs = l.big_join((0..k).map(|b| l.tensor(tr.get(a, b), tq.get(b, d))));
                if !l.leq(lhs, trq.get(a, d)) {
                    comp.fail(format!("R = {rn}, Q = {qn}, A = {}, C = {}", c.show(&sets[a]), c.show(&sets[d])));
                }
            }
        }
    }
    r.push(comp);

    // Compatible sets are the ones the equivalence results speak about.
    let approx = p.approx().matrix();
    let compat: Vec<usize> = (0..k).filter(|&i| fuzz::set_compat_witness(l, &sets[i], approx).is_none()).collect();
    let ta = PowerTable::new(l, approx, &sets);
    let cpairs: Vec<(usize, usize)> = sweep
        .indices((compat.len() * compat.len()) as u128, "power-compat")
        .into_iter()
        .map(|i| (compat[(i / compat.len() as u128) as usize], compat[(i % compat.len() as u128) as usize]))
        .collect();
    r.push(check_all("equiv_compat", "≈⁺(A,B) = A ≈ B for A, B compatible with ≈", &cpairs, |&(a, b)| {
        let (x, y) = (ta.get(a, b), fuzz::similarity(l, &sets[a], &sets[b]));
        (x != y).then(|| {
            format!("A = {}, B = {}: ≈⁺ = {}, similarity = {}", c.show(&sets[a]), c.show(&sets[b]), l.name(x), l.name(y))
        })
    }));
    let eq_props = fuzz::relation_properties(l, approx, c.n);
    r.push(check_all("ext_equality", "≈⁺ is an L-equality on sets compatible with ≈", &cpairs, |&(a, b)| {
        if !eq_props.equality {
            return None;
        }
        (ta.get(a, b) == l.top() && a != b).then(|| format!("A = {}, B = {}", c.show(&sets[a]), c.show(&sets[b])))
    }));

    // ext_compatibility: R compatible with ≈ gives R⁺ compatible with ≈⁺.
    let quads: Vec<[usize; 4]> = {
        let kk = k as u128;
        sweep
            .indices(kk.pow(4), "power-quads")
            .into_iter()
            .map(|mut i| {
                let mut q = [0; 4];
                for s in q.iter_mut().rev() {
                    *s = (i % kk) as usize;
                    i /= kk;
                }
                q
            })
            .collect()
    };
    let mut cc = Check::new("ext_compatibility", "R compatible with ≈ implies R⁺ compatible with ≈⁺");
    for (name, rel) in &rels {
        if fuzz::rel_compat_witness(l, rel.matrix(), approx, c.n).is_some() {
            continue;
        }
        let t = PowerTable::new(l, rel.matrix(), &sets);
        for &[a, a2, b, b2] in &quads {
            cc.cases += 1;
            if !cc.passed {
                continue;
            }
            let lhs = l.tensor(l.tensor(t.get(a, b), ta.get(a, a2)), ta.get(b, b2));
            if !l.leq(lhs, t.get(a2, b2)) {
                cc.fail(format!(
                    "R = {name}, A = {}, A' = {}, B = {}, B' = {}",
                    c.show(&sets[a]),
                    c.show(&sets[a2]),
                    c.show(&sets[b]),
                    c.show(&sets[b2])
                ));
            }
        }
    }
    r.push(cc);

    // ext_ordered_set on convex members.
    let convex: Vec<LSet> = sets
        .iter()
        .filter(|v| p.convexity_defect(v).is_none())
        .take(MAX_ORDER_MEMBERS)
        .map(|v| LSet::from_parts(l, p.carrier(), v.clone()))
        .collect();
    let mut os = Check::new("ext_ordered_set", "⟨⟨M,≈⁺⟩,⪯⁺⟩ is an L-ordered set on convex L-sets");
    os.cases = convex.len() as u64;
    if let Err(e) = power::power_order_on_convex(p, &convex) {
        os.fail(e.to_string());
    }
    r.push(os);

    // ext_preceq on sets with a minimum and a maximum.
    let top = l.top();
    let extrema = |v: &[Degree]| -> Option<(usize, usize)> {
        let lo = c.inf(v).filter(|&m| v[m] == top)?;
        let hi = c.sup(v).filter(|&m| v[m] == top)?;
        Some((lo, hi))
    };
    let bounded: Vec<(usize, (usize, usize))> = (0..k).filter_map(|i| extrema(&sets[i]).map(|e| (i, e))).collect();
    let to = PowerTable::new(l, p.order().matrix(), &sets);
    let bpairs: Vec<(usize, usize)> = sweep
        .indices((bounded.len() * bounded.len()) as u128, "power-bounded")
        .into_iter()
        .map(|i| ((i / bounded.len() as u128) as usize, (i % bounded.len() as u128) as usize))
        .collect();
    r.push(check_all(
        "ext_preceq",
        "V₁ ⪯⁺ V₂ = (min V₁ ⪯ min V₂) ∧ (max V₁ ⪯ max V₂)",
        &bpairs,
        |&(i, j)| {
            let ((a, ea), (b, eb)) = (bounded[i], bounded[j]);
            let short = power::endpoint_degree(p, ea, eb, Shortcut::Order);
            (to.get(a, b) != short).then(|| format!("V₁ = {}, V₂ = {}", c.show(&sets[a]), c.show(&sets[b])))
        },
    ));

    // ext_approx on intervals, compared with the power relation directly.
    let bounds: Vec<(usize, usize)> = (0..c.n).flat_map(|v| (0..c.n).map(move |u| (v, u))).filter(|&(v, u)| c.le(v, u)).collect();
    let ivals: Vec<Vec<Degree>> = bounds.iter().map(|&(v, u)| p.interval_raw(v, u)).collect();
    let ti_eq = PowerTable::new(l, approx, &ivals);
    let ti_le = PowerTable::new(l, p.order().matrix(), &ivals);
    let ipairs: Vec<(usize, usize)> = (0..ivals.len()).flat_map(|a| (0..ivals.len()).map(move |b| (a, b))).collect();
    r.push(check_all("ext_approx", "⟦v₁,u₁⟧ ≈⁺ ⟦v₂,u₂⟧ = (u₁≈u₂) ∧ (v₁≈v₂)", &ipairs, |&(a, b)| {
        let short = power::endpoint_degree(p, bounds[a], bounds[b], Shortcut::Approx);
        (ti_eq.get(a, b) != short).then(|| format!("{} and {}", c.show(&ivals[a]), c.show(&ivals[b])))
    }));
    r.push(check_all("interval_shortcut", "⟦v₁,u₁⟧ ⪯⁺ ⟦v₂,u₂⟧ = (u₁⪯u₂) ∧ (v₁⪯v₂)", &ipairs, |&(a, b)| {
        let short = power::endpoint_degree(p, bounds[a], bounds[b], Shortcut::Order);
        (ti_le.get(a, b) != short).then(|| format!("{} and {}", c.show(&ivals[a]), c.show(&ivals[b])))
    }));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{ChainKind, ResiduatedLattice};

    #[test]
    fn passes_on_u_l_with_a_tolerance() {
        let l = ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3).unwrap();
        let p = LOrderedSet::of_degrees(&l);
        let tol = LRelation::from_fn(&l, p.carrier(), |u, v| if u.abs_diff(v) <= 1 { l.top() } else { l.bot() });
        let rep = power_relations(&p, &[("∼".into(), tol)], &Sweep::default());
        assert!(rep.passed(), "{}", rep.summary());
        assert!(rep.checks.iter().all(|c| c.cases > 0), "{:?}", rep.checks);
    }

    #[test]
    fn sampled_on_four_elements() {
        let p = LOrderedSet::of_degrees(&ResiduatedLattice::chain(ChainKind::Lukasiewicz, 4).unwrap());
        let s = Sweep {
            budget: 300,
            seed: 5,
            samples: 300,
        };
        let rep = power_relations(&p, &[], &s);
        assert!(rep.passed(), "{}", rep.summary());
    }
}
