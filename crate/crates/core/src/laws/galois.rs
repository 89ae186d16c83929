//! Laws of isotone Galois connections on one L-ordered set.

use rand::Rng;

use crate::galois::{self, GaloisPair};
use crate::laws::{check_all, product_indices, Ctx, Sweep};
use crate::lattice::Degree;
use crate::order::{self, LOrderedSet};
use crate::report::{Check, Report};

/// Pairs handed to [`galois::igal_ordered_set`] at most.
const MAX_IGAL_PAIRS: usize = 200;

/// Isotone Galois connections `⟨f,g⟩` on `P`. Every upper map `g` with a
/// lower adjoint is tried when `|U|^|U|` fits the budget; otherwise sampled
/// ones are.
pub fn galois_pairs(p: &LOrderedSet, sweep: &Sweep) -> Vec<GaloisPair> {
    let n = p.len();
    let total = (n as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let idx: Vec<u128> = if sweep.exhaustive(total) {
        (0..total).collect()
    } else {
        let mut rng = sweep.rng("galois-maps");
        (0..sweep.samples.saturating_mul(10)).map(|_| rng.gen_range(0..total)).collect()
    };
    let mut out: Vec<GaloisPair> = idx
        .into_iter()
        .filter_map(|mut i| {
            let mut g = vec![0; n];
            for slot in g.iter_mut().rev() {
                *slot = (i % n as u128) as usize;
                i /= n as u128;
            }
            let f: Option<Vec<usize>> = (0..n)
                .map(|u| {
                    let m: Vec<Degree> = (0..n).map(|v| p.le(u, g[v])).collect();
                    p.infimum_raw(&m).ok().flatten()
                })
                .collect();
            let f = f?;
            galois::is_galois_on(p, &f, &g).then(|| GaloisPair::new(f, g))
        })
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Every law of isotone Galois connections, over [`galois_pairs`].
pub fn galois_laws(p: &LOrderedSet, sweep: &Sweep) -> Report {
    let c = Ctx::new(p);
    let l = c.l;
    let pairs = galois_pairs(p, sweep);
    let mut r = Report::new();
    let show = |pr: &GaloisPair| format!("f = {}; g = {}", c.show_map(&pr.f), c.show_map(&pr.g));

    r.push(check_all("bas_gal_a", "u ≤ gf(u) and fg(v) ≤ v", &pairs, |pr| {
        (0..c.n)
            .find(|&u| !c.le(u, pr.g[pr.f[u]]) || !c.le(pr.f[pr.g[u]], u))
            .map(|u| format!("{} at {}", show(pr), c.name(u)))
    }));
    r.push(check_all("bas_gal_b", "f and g are isotone", &pairs, |pr| {
        (!order::is_isotone(&pr.f, p, p) || !order::is_isotone(&pr.g, p, p)).then(|| show(pr))
    }));
    r.push(check_all("bas_gal_c", "fgf = f and gfg = g", &pairs, |pr| {
        (0..c.n)
            .find(|&u| pr.f[pr.g[pr.f[u]]] != pr.f[u] || pr.g[pr.f[pr.g[u]]] != pr.g[u])
            .map(|u| format!("{} at {}", show(pr), c.name(u)))
    }));
    let sets = c.sets(sweep, "galois-sets");
    let cases = product_indices(pairs.len(), sets.len(), sweep, "galois-cases");
    r.push(check_all("bas_gal_d", "g(inf V) = inf g(V) and f(sup V) = sup f(V)", &cases, |&(k, s)| {
        let (pr, v) = (&pairs[k], &sets[s]);
        let mut ok = true;
        if let (Some(i), Some(j)) = (c.inf(v), c.inf(&c.image(&pr.g, v))) {
            ok &= pr.g[i] == j;
        }
        if let (Some(i), Some(j)) = (c.sup(v), c.sup(&c.image(&pr.f, v))) {
            ok &= pr.f[i] == j;
        }
        (!ok).then(|| format!("{}, V = {}", show(pr), c.show(v)))
    }));
    r.push(check_all("extensive_either", "f ≤ id if and only if g ≥ id", &pairs, |pr| {
        let e = galois::extensivity(p, pr).expect("self maps");
        e.one_sided().then(|| show(pr))
    }));
    r.push(check_all("closure_interior", "C = g∘f is a closure and I = f∘g an interior operator", &pairs, |pr| {
        let rep = {
            let mut rep = galois::verify_closure(p, &pr.closure());
            rep.extend(galois::verify_interior(p, &pr.interior()));
            rep
        };
        rep.first_failure().map(|f| format!("{}: {} fails at {}", show(pr), f.id, f.witness.as_deref().unwrap_or("?")))
    }));
    r.push(check_all(
        "fix_closed",
        "Fix C is closed under infima and Fix I under suprema of L-sets supported in them",
        &cases,
        |&(k, s)| {
            let (pr, v) = (&pairs[k], &sets[s]);
            let (cl, it) = (pr.closure(), pr.interior());
            let restrict = |keep: &dyn Fn(usize) -> bool| -> Vec<Degree> {
                (0..c.n).map(|u| if keep(u) { v[u] } else { l.bot() }).collect()
            };
            let vc = restrict(&|u| cl[u] == u);
            let vi = restrict(&|u| it[u] == u);
            if let Some(i) = c.inf(&vc) {
                if cl[i] != i {
                    return Some(format!("{}, inf of {} is outside Fix C", show(pr), c.show(&vc)));
                }
            }
            if let Some(s) = c.sup(&vi) {
                if it[s] != s {
                    return Some(format!("{}, sup of {} is outside Fix I", show(pr), c.show(&vi)));
                }
            }
            None
        },
    ));
    r.push(check_all("fix_iso", "⟨u,v⟩ ↦ u and ⟨u,v⟩ ↦ v are isomorphisms onto Fix C and Fix I", &pairs, |pr| {
        let fx = match galois::fixpoints(p, p, pr) {
            Ok(fx) => fx,
            Err(e) => return Some(format!("{}: {e}", show(pr))),
        };
        let (fc, pc) = galois::fixed_elements(p, &pr.closure()).expect("self map");
        let (fi, pi) = galois::fixed_elements(p, &pr.interior()).expect("self map");
        let pos = |list: &[usize], x: usize| list.iter().position(|&y| y == x).unwrap_or(usize::MAX);
        let to_c: Vec<usize> = fx.points.iter().map(|&(u, _)| pos(&fc, u)).collect();
        let to_i: Vec<usize> = fx.points.iter().map(|&(_, v)| pos(&fi, v)).collect();
        (!order::is_isomorphism(&to_c, &fx.ordered, &pc) || !order::is_isomorphism(&to_i, &fx.ordered, &pi))
            .then(|| show(pr))
    }));
    let mut ig = Check::new("igal_ordered", "isotone Galois connections with the IGal relations form an L-ordered set");
    let sample: Vec<GaloisPair> = pairs.iter().take(MAX_IGAL_PAIRS).cloned().collect();
    ig.cases = sample.len() as u64;
    match galois::igal_ordered_set(p, p, &sample) {
        Ok(q) => {
            if let Some(f) = q.verify_axioms().first_failure() {
                ig.fail(format!("{}: {}", f.id, f.witness.as_deref().unwrap_or("?")));
            }
        }
        Err(e) => ig.fail(e.to_string()),
    }
    r.push(ig);
    r
}

/// The extensive pairs obtained from `g ≥ id` agree with filtering all map
/// pairs; the latter needs `|U|^(2|U|)` within the budget.
pub fn extensive_enumeration(p: &LOrderedSet, budget: u64) -> Check {
    let mut c = Check::new("extensive_enumeration", "deriving f from g ≥ id finds every extensive pair");
    match (galois::extensive_pairs(p, budget), galois::extensive_pairs_exhaustive(p, budget)) {
        (Ok(a), Ok(b)) => {
            c.cases = b.len() as u64;
            if a != b {
                c.fail(format!("{} derived vs {} filtered", a.len(), b.len()));
            }
        }
        (Err(e), _) | (_, Err(e)) => c.fail(e.to_string()),
    }
    c
}
