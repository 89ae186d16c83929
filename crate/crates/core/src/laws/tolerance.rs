//! Laws of complete relations and complete tolerances.

use std::collections::HashSet;

use crate::error::Result;
use crate::fuzz::{self, LRelation, LSet};
use crate::galois::{self, GaloisPair};
use crate::laws::{check_all, Ctx, Sweep};
use crate::lattice::Degree;
use crate::order::LOrderedSet;
use crate::power;
use crate::report::{Check, Report};
use crate::tolerance::{self, BlockMode, CompletenessOracle};

fn show_rel(p: &LOrderedSet, r: &[Degree]) -> String {
    Ctx::new(p).show_rel(r)
}

fn inverse_raw(n: usize, r: &[Degree]) -> Vec<Degree> {
    (0..n * n).map(|k| r[(k % n) * n + k / n]).collect()
}

/// Completeness of `⪯`, `≈` and their inverses, the supporting lemma and the
/// agreement of the fast and brute-force testers on every tolerance.
pub fn completeness(p: &LOrderedSet, extra: &[(String, LRelation)], sweep: &Sweep) -> Result<Report> {
    let oracle = CompletenessOracle::new(p, sweep.budget)?;
    let c = Ctx::new(p);
    let l = c.l;
    let t = oracle.table();
    let mut r = Report::new();

    let k = t.len();
    let pairs: Vec<(usize, usize)> = sweep
        .indices((k * k) as u128, "compl-lemma")
        .into_iter()
        .map(|i| ((i / k as u128) as usize, (i % k as u128) as usize))
        .collect();
    let order = p.order().matrix();
    r.push(check_all(
        "preceq_approx_compl_lemma",
        "V₁⪯→V₂ ≤ sup V₁⪯sup V₂ and V₁⪯←V₂ ≤ inf V₁⪯inf V₂",
        &pairs,
        |&(i, j)| {
            let fw = power::forward_raw(l, order, &t.sets[i], &t.sets[j]);
            let bw = power::backward_raw(l, order, &t.sets[i], &t.sets[j]);
            let ok = l.leq(fw, p.le(t.sup[i], t.sup[j])) && l.leq(bw, p.le(t.inf[i], t.inf[j]));
            (!ok).then(|| format!("V₁ = {}, V₂ = {}", c.show(&t.sets[i]), c.show(&t.sets[j])))
        },
    ));

    let mut named: Vec<(String, Vec<Degree>)> = vec![("⪯".into(), order.to_vec()), ("≈".into(), p.approx().matrix().to_vec())];
    let mut thm = Check::new("preceq_approx_compl", "⪯ and ≈ are complete");
    for (name, m) in &named {
        thm.cases += 1;
        let rep = oracle.check_raw(m, false);
        if thm.passed && !rep.complete() {
            thm.fail(format!("{name} is not complete"));
        }
    }
    r.push(thm);

    named.extend(extra.iter().map(|(n, x)| (n.clone(), x.matrix().to_vec())));
    let mut inv = Check::new("inv_compl", "R complete implies R⁻¹ complete");
    for (name, m) in &named {
        if !oracle.check_raw(m, false).complete() {
            continue;
        }
        inv.cases += 1;
        if inv.passed && !oracle.check_raw(&inverse_raw(c.n, m), false).complete() {
            inv.fail(format!("{name}⁻¹ is not complete"));
        }
    }
    r.push(inv);

    let tols = tolerance::all_tolerances(p, sweep.budget.max(1))?;
    r.push(check_all("fast_brute_agree", "the endpoint test and the definition agree on every tolerance", &tols, |x| {
        let fast = tolerance::is_complete_tolerance_fast(p, x).map(|f| f.complete());
        let brute = oracle.check_raw(x.matrix(), false).complete();
        match fast {
            Ok(f) if f == brute => None,
            Ok(f) => Some(format!("{}: fast {f}, brute {brute}", show_rel(p, x.matrix()))),
            // endpoints always exist on a completely lattice carrier
            Err(e) => Some(format!("{}: {e}", show_rel(p, x.matrix()))),
        }
    }));
    Ok(r)
}

/// Complete relations and complete tolerances form closure systems closed
/// under `a→(·)`, checked against the definition.
pub fn closure_system(p: &LOrderedSet, sweep: &Sweep) -> Result<Report> {
    let oracle = CompletenessOracle::new(p, sweep.budget)?;
    let l = p.lattice();
    let n = p.len();
    let approx = p.approx().matrix();
    let complete_raw = |m: &[Degree]| {
        fuzz::rel_compat_witness(l, m, approx, n).is_none() && oracle.clauses_raw(m, false).clauses_hold()
    };
    let mut r = Report::new();

    // Complete relations: all of them when they fit the budget.
    let all = fuzz::lset_count(l, n * n);
    let mut cs = Check::new(
        "compl_closure_system",
        "intersections of complete relations and a→R for complete R are complete",
    );
    let family: Vec<Vec<Degree>> = if all <= sweep.budget as u128 {
        fuzz::all_memberships(l, n * n, sweep.budget)?.into_iter().filter(|m| complete_raw(m)).collect()
    } else {
        let mut f: Vec<Vec<Degree>> = tolerance::enumerate_complete_tolerances(p, sweep.budget)?
            .into_iter()
            .map(|x| x.matrix().to_vec())
            .collect();
        f.push(p.order().matrix().to_vec());
        f.push(inverse_raw(n, p.order().matrix()));
        f.push(approx.to_vec());
        f
    };
    let known: HashSet<&[Degree]> = family.iter().map(|m| m.as_slice()).collect();
    let is_complete = |m: &[Degree]| known.contains(m) || complete_raw(m);
    let total = vec![l.top(); n * n];
    cs.record(is_complete(&total), || "the total relation is not complete".into());
    for a in &family {
        for b in &family {
            cs.cases += 1;
            if cs.passed {
                let meet = fuzz::zip_with(a, b, |x, y| l.meet(x, y));
                if !is_complete(&meet) {
                    cs.fail(format!("{} ∩ {}", show_rel(p, a), show_rel(p, b)));
                }
            }
        }
        for d in l.degrees() {
            cs.cases += 1;
            if cs.passed {
                let s: Vec<Degree> = a.iter().map(|&x| l.residuum(d, x)).collect();
                if !is_complete(&s) {
                    cs.fail(format!("{}→{}", l.name(d), show_rel(p, a)));
                }
            }
        }
    }
    r.push(cs);

    // Complete tolerances, found by the definition among all tolerances.
    let tols = tolerance::all_tolerances(p, sweep.budget.max(1))?;
    let brute: Vec<Vec<Degree>> = tols.iter().map(|x| x.matrix().to_vec()).filter(|m| complete_raw(m)).collect();
    let bset: HashSet<&[Degree]> = brute.iter().map(|m| m.as_slice()).collect();
    let mut ct = Check::new("ctol_clos", "complete tolerances form a closure system closed under a→(·)");
    ct.record(bset.contains(total.as_slice()), || "the total relation is missing".into());
    for a in &brute {
        for b in &brute {
            ct.cases += 1;
            if ct.passed {
                let meet = fuzz::zip_with(a, b, |x, y| l.meet(x, y));
                if !bset.contains(meet.as_slice()) {
                    ct.fail(format!("{} ∩ {}", show_rel(p, a), show_rel(p, b)));
                }
            }
        }
        for d in l.degrees() {
            ct.cases += 1;
            let s: Vec<Degree> = a.iter().map(|&x| l.residuum(d, x)).collect();
            if ct.passed && !bset.contains(s.as_slice()) {
                ct.fail(format!("{}→{}", l.name(d), show_rel(p, a)));
            }
        }
    }
    r.push(ct);

    let mut en = Check::new("ctol_enumeration", "the endpoint enumeration finds exactly the complete tolerances");
    let fast: Vec<Vec<Degree>> = tolerance::enumerate_complete_tolerances(p, sweep.budget.max(1))?
        .into_iter()
        .map(|x| x.matrix().to_vec())
        .collect();
    en.cases = tols.len() as u64;
    if fast != brute {
        en.fail(format!("{} by endpoints vs {} by definition", fast.len(), brute.len()));
    }
    r.push(en);
    Ok(r)
}

/// Endpoint lemmas and the correspondence between complete tolerances and
/// extensive isotone Galois connections.
pub fn representation(p: &LOrderedSet, sweep: &Sweep) -> Result<Report> {
    let oracle = CompletenessOracle::new(p, sweep.budget)?;
    let c = Ctx::new(p);
    let l = c.l;
    let n = c.n;
    let ctols = tolerance::enumerate_complete_tolerances(p, sweep.budget.max(1))?;
    let pairs: Vec<GaloisPair> = ctols.iter().map(|x| tolerance::endpoint_maps(p, x)).collect::<Result<_>>()?;
    let items: Vec<usize> = (0..ctols.len()).collect();
    let show = |i: usize| show_rel(p, ctols[i].matrix());
    let mut r = Report::new();

    r.push(check_all("downsim", "u∼u∼ = u∼u^∼ = 1", &items, |&i| {
        let (x, e) = (&ctols[i], &pairs[i]);
        (0..n)
            .find(|&u| x.get(u, e.f[u]) != l.top() || x.get(u, e.g[u]) != l.top())
            .map(|u| format!("{} at {}", show(i), c.name(u)))
    }));
    r.push(check_all("double_sim", "(u∼)^∼ ≥ u and (u^∼)∼ ≤ u", &items, |&i| {
        let e = &pairs[i];
        (0..n)
            .find(|&u| !c.le(u, e.g[e.f[u]]) || !c.le(e.f[e.g[u]], u))
            .map(|u| format!("{} at {}", show(i), c.name(u)))
    }));
    r.push(check_all("two_downsim", "u⪯v ≤ u∼⪯v∼ and u⪯v ≤ u^∼⪯v^∼", &items, |&i| {
        let e = &pairs[i];
        for u in 0..n {
            for v in 0..n {
                let d = p.le(u, v);
                if !l.leq(d, p.le(e.f[u], e.f[v])) || !l.leq(d, p.le(e.g[u], e.g[v])) {
                    return Some(format!("{} at ({}, {})", show(i), c.name(u), c.name(v)));
                }
            }
        }
        None
    }));
    r.push(check_all("from_tol_to_gal", "the endpoint maps form an extensive isotone Galois connection", &items, |&i| {
        tolerance::pair_from_tolerance(p, &ctols[i]).err().map(|e| format!("{}: {e}", show(i)))
    }));
    r.push(check_all("tol_gal_tol", "the tolerance of the endpoint pair is the original one", &items, |&i| {
        match tolerance::tolerance_from_pair(p, &pairs[i]) {
            Ok(back) if back == ctols[i] => None,
            Ok(back) => Some(format!("{} became {}", show(i), show_rel(p, back.matrix()))),
            Err(e) => Some(format!("{}: {e}", show(i))),
        }
    }));
    let ext = galois::extensive_pairs(p, sweep.budget.max(1))?;
    r.push(check_all(
        "from_gal_to_tol",
        "an extensive isotone Galois connection gives a complete tolerance with endpoints f, g",
        &ext,
        |pr| {
            let fmt = || format!("f = {}; g = {}", c.show_map(&pr.f), c.show_map(&pr.g));
            let x = match tolerance::tolerance_from_pair(p, pr) {
                Ok(x) => x,
                Err(e) => return Some(format!("{}: {e}", fmt())),
            };
            let props = x.properties().expect("square");
            if !props.tolerance || !oracle.check_raw(x.matrix(), false).complete() {
                return Some(format!("{} gives {}", fmt(), show_rel(p, x.matrix())));
            }
            (tolerance::endpoint_maps(p, &x).ok().as_ref() != Some(pr)).then(fmt)
        },
    ));
    let mut rep = Check::new("repre", "complete tolerances correspond one to one to extensive isotone Galois connections");
    let mut sorted = pairs.clone();
    sorted.sort();
    rep.cases = ctols.len() as u64;
    let distinct = sorted.windows(2).all(|w| w[0] != w[1]);
    if !distinct || sorted != ext {
        rep.fail(format!("{} complete tolerances, {} extensive pairs", ctols.len(), ext.len()));
    }
    r.push(rep);
    let ipairs: Vec<(usize, usize)> = items.iter().flat_map(|&a| items.iter().map(move |&b| (a, b))).collect();
    r.push(check_all("tol_to_gal_iso", "S(∼₁,∼₂) equals the IGal order of the endpoint pairs", &ipairs, |&(a, b)| {
        let s = tolerance::ctol_order(&ctols[a], &ctols[b]).expect("same carrier");
        let o = galois::igal_order(p, p, &pairs[a], &pairs[b]);
        (s != o).then(|| format!("{} vs {}: {} and {}", show(a), show(b), l.name(s), l.name(o)))
    }));
    Ok(r)
}

/// Blocks, classes and the factor by every complete tolerance (or by the
/// given ones, when any).
pub fn factorization(p: &LOrderedSet, given: &[(String, LRelation)], sweep: &Sweep) -> Result<Report> {
    let c = Ctx::new(p);
    let l = c.l;
    let n = c.n;
    let budget = sweep.budget.max(1);
    let tols: Vec<(String, LRelation)> = if given.is_empty() {
        tolerance::enumerate_complete_tolerances(p, budget)?
            .into_iter()
            .map(|x| (show_rel(p, x.matrix()), x))
            .collect()
    } else {
        given.to_vec()
    };
    let sets = c.sets(sweep, "factor-sets");
    let mut r = Report::new();

    r.push(check_all("int_blocks", "⟦v,u⟧ is a block for every fixpoint ⟨u,v⟩", &tols, |(name, x)| {
        match tolerance::block_intervals(p, x) {
            Ok(iv) => iv.iter().find(|i| !tolerance::is_block(x, &i.set)).map(|i| format!("{name}: {}", i.set.display())),
            Err(e) => Some(format!("{name}: {e}")),
        }
    }));
    let cases: Vec<(usize, usize)> = (0..tols.len()).flat_map(|a| (0..sets.len()).map(move |b| (a, b))).collect();
    r.push(check_all("block_inf", "B ∪ {inf B} and B ∪ {sup B} are blocks when B is", &cases, |&(k, s)| {
        let (name, x) = &tols[k];
        let b = LSet::from_parts(l, p.carrier(), sets[s].clone());
        if !tolerance::is_block(x, &b) {
            return None;
        }
        for e in [c.inf(&sets[s]), c.sup(&sets[s])].into_iter().flatten() {
            let mut m = sets[s].clone();
            m[e] = l.top();
            if !tolerance::is_block(x, &LSet::from_parts(l, p.carrier(), m)) {
                return Some(format!("{name}: B = {}, adding {}", b.display(), c.name(e)));
            }
        }
        None
    }));
    r.push(check_all("max_blocks", "the maximal blocks are the intervals of the fixpoints", &tols, |(name, x)| {
        let fast = tolerance::maximal_blocks(p, x, BlockMode::Fast, budget);
        let brute = tolerance::maximal_blocks(p, x, BlockMode::Brute, budget);
        match (fast, brute) {
            (Ok(mut a), Ok(mut b)) => {
                let key = |s: &LSet| s.membership().iter().map(|d| d.index()).collect::<Vec<_>>();
                a.sort_by_key(key);
                b.sort_by_key(key);
                (a != b).then(|| format!("{name}: {} intervals vs {} maximal blocks", a.len(), b.len()))
            }
            (Err(e), _) | (_, Err(e)) => Some(format!("{name}: {e}")),
        }
    }));
    r.push(check_all("classes", "[u]∼ = ⟦u∼, u^∼⟧", &tols, |(name, x)| {
        (0..n).find_map(|u| tolerance::class_structure(p, x, u).err().map(|e| format!("{name}: {e}")))
    }));
    r.push(check_all(
        "fact",
        "U/∼ with ≈⁺ and ⪯⁺ is a completely lattice L-ordered set isomorphic to the fixpoints",
        &tols,
        |(name, x)| match tolerance::factor(p, x, budget) {
            Ok(f) => {
                if let Some(fl) = f.ordered.verify_axioms().first_failure() {
                    return Some(format!("{name}: {} fails", fl.id));
                }
                (f.completely_lattice == Some(false)).then(|| format!("{name}: not completely lattice"))
            }
            Err(e) => Some(format!("{name}: {e}")),
        },
    ));
    Ok(r)
}
