//! Order axioms, the cone calculus, infima and suprema, isotone maps.

use crate::fuzz;
use crate::laws::{check_all, product_indices, Ctx, Sweep};
use crate::order::{LOrderedSet, PowerLattice};
use crate::report::{Check, Report};

/// The L-order axioms with witnesses.
pub fn order_axioms(p: &LOrderedSet) -> Report {
    p.verify_axioms()
}

/// Identities of lower and upper sets and cones that hold for every `V`,
/// followed by the pairwise ones.
pub fn cone_identities(p: &LOrderedSet, sweep: &Sweep) -> Report {
    let c = Ctx::new(p);
    let sets = c.sets(sweep, "cone-sets");
    let pairs = c.set_pairs(sweep, "cone-pairs");
    let mut r = Report::new();

    r.push(check_all("lower_set_cosure", "↓V = ↓↓V and ↑V = ↑↑V", &sets, |v| {
        let (d, u) = (c.down(v), c.up(v));
        (d != c.down(&d) || u != c.up(&u)).then(|| c.show(v))
    }));
    r.push(check_all("lower_sets_cones_rel", "LV = ↓LV = L↑V and UV = ↑UV = U↓V", &sets, |v| {
        let (lv, uv) = (c.lc(v), c.uc(v));
        let ok = lv == c.down(&lv) && lv == c.lc(&c.up(v)) && uv == c.up(&uv) && uv == c.uc(&c.down(v));
        (!ok).then(|| c.show(v))
    }));
    r.push(check_all("cones_gal_mon", "S(V₁,V₂) ≤ S(LV₂,LV₁) and S(V₁,V₂) ≤ S(UV₂,UV₁)", &pairs, |(a, b)| {
        let s = c.s(a, b);
        let ok = c.l.leq(s, c.s(&c.lc(b), &c.lc(a))) && c.l.leq(s, c.s(&c.uc(b), &c.uc(a)));
        (!ok).then(|| format!("V₁ = {}, V₂ = {}", c.show(a), c.show(b)))
    }));
    r.push(check_all("cones_gal_clos", "LULV = LV and ULUV = UV", &sets, |v| {
        let (lv, uv) = (c.lc(v), c.uc(v));
        (c.lc(&c.uc(&lv)) != lv || c.uc(&c.lc(&uv)) != uv).then(|| c.show(v))
    }));
    r.push(check_all("cones_twice", "V ⊆ ULV and V ⊆ LUV", &sets, |v| {
        let ok = c.subset(v, &c.uc(&c.lc(v))) && c.subset(v, &c.lc(&c.uc(v)));
        (!ok).then(|| c.show(v))
    }));
    r.push(check_all("cone_union", "L(V₁∪V₂) = LV₁∩LV₂ and U(V₁∪V₂) = UV₁∩UV₂", &pairs, |(a, b)| {
        let j = c.join(a, b);
        let ok = c.lc(&j) == c.meet(&c.lc(a), &c.lc(b)) && c.uc(&j) == c.meet(&c.uc(a), &c.uc(b));
        (!ok).then(|| format!("V₁ = {}, V₂ = {}", c.show(a), c.show(b)))
    }));
    let elems: Vec<usize> = (0..c.n).collect();
    let elem_pairs: Vec<(usize, usize)> = (0..c.n).flat_map(|u| (0..c.n).map(move |v| (u, v))).collect();
    r.push(check_all("single_cone_1", "L{v}(u) = u⪯v and U{v}(u) = v⪯u", &elem_pairs, |&(u, v)| {
        let s = c.single(v);
        let ok = c.lc(&s)[u] == p.le(u, v) && c.uc(&s)[u] == p.le(v, u);
        (!ok).then(|| format!("u = {}, v = {}", c.name(u), c.name(v)))
    }));
    r.push(check_all("single_cone_2", "LU{v} = L{v} and UL{v} = U{v}", &elems, |&v| {
        let s = c.single(v);
        (c.lc(&c.uc(&s)) != c.lc(&s) || c.uc(&c.lc(&s)) != c.uc(&s)).then(|| c.name(v).to_string())
    }));
    r.push(check_all("preceq_by_cones", "u⪯v = S(L{u},L{v}) = S(U{v},U{u})", &elem_pairs, |&(u, v)| {
        let (su, sv) = (c.single(u), c.single(v));
        let d = p.le(u, v);
        let ok = d == c.s(&c.lc(&su), &c.lc(&sv)) && d == c.s(&c.uc(&sv), &c.uc(&su));
        (!ok).then(|| format!("u = {}, v = {}", c.name(u), c.name(v)))
    }));
    r.push(check_all("convex_sets", "↓V, ↑V, LV, UV are convex and convex sets are compatible with ≈", &sets, |v| {
        for w in [c.down(v), c.up(v), c.lc(v), c.uc(v)] {
            if p.convexity_defect(&w).is_some() {
                return Some(format!("derived from {} is {}", c.show(v), c.show(&w)));
            }
        }
        if p.convexity_defect(v).is_none() && fuzz::set_compat_witness(c.l, v, p.approx().matrix()).is_some() {
            return Some(format!("{} is convex but not compatible", c.show(v)));
        }
        None
    }));
    r
}

/// Statements about existing infima and suprema.
pub fn infima(p: &LOrderedSet, sweep: &Sweep) -> Report {
    let c = Ctx::new(p);
    let sets = c.sets(sweep, "inf-sets");
    let pairs = c.set_pairs(sweep, "inf-pairs");
    let mut r = Report::new();

    r.push(check_all("inf_single_1", "LV = L{inf V} and UV = U{sup V}", &sets, |v| {
        let mut ok = true;
        if let Some(i) = c.inf(v) {
            ok &= c.lc(v) == c.lc(&c.single(i));
        }
        if let Some(s) = c.sup(v) {
            ok &= c.uc(v) == c.uc(&c.single(s));
        }
        (!ok).then(|| c.show(v))
    }));
    r.push(check_all("inf_single_2", "V ⊆ U{inf V} and V ⊆ L{sup V}", &sets, |v| {
        let mut ok = true;
        if let Some(i) = c.inf(v) {
            ok &= c.subset(v, &c.uc(&c.single(i)));
        }
        if let Some(s) = c.sup(v) {
            ok &= c.subset(v, &c.lc(&c.single(s)));
        }
        (!ok).then(|| c.show(v))
    }));
    r.push(check_all("inf_max_cone", "inf V = max LV and sup V = min UV", &sets, |v| {
        let max_of = |w: &[_]| c.sup(w).filter(|&m| w[m] == c.l.top());
        let min_of = |w: &[_]| c.inf(w).filter(|&m| w[m] == c.l.top());
        let ok = c.inf(v) == max_of(&c.lc(v)) && c.sup(v) == min_of(&c.uc(v));
        (!ok).then(|| c.show(v))
    }));
    r.push(check_all("inf_cones_rel", "S(LV₁,LV₂) = inf V₁⪯inf V₂ and S(UV₁,UV₂) = sup V₂⪯sup V₁", &pairs, |(a, b)| {
        let mut ok = true;
        if let (Some(i), Some(j)) = (c.inf(a), c.inf(b)) {
            ok &= c.s(&c.lc(a), &c.lc(b)) == p.le(i, j);
        }
        if let (Some(i), Some(j)) = (c.sup(a), c.sup(b)) {
            ok &= c.s(&c.uc(a), &c.uc(b)) == p.le(j, i);
        }
        (!ok).then(|| format!("V₁ = {}, V₂ = {}", c.show(a), c.show(b)))
    }));
    r.push(check_all("inf_sets_rel", "S(V₁,V₂) ≤ inf V₂⪯inf V₁ and S(V₁,V₂) ≤ sup V₁⪯sup V₂", &pairs, |(a, b)| {
        let s = c.s(a, b);
        let mut ok = true;
        if let (Some(i), Some(j)) = (c.inf(a), c.inf(b)) {
            ok &= c.l.leq(s, p.le(j, i));
        }
        if let (Some(i), Some(j)) = (c.sup(a), c.sup(b)) {
            ok &= c.l.leq(s, p.le(i, j));
        }
        (!ok).then(|| format!("V₁ = {}, V₂ = {}", c.show(a), c.show(b)))
    }));
    let elem_pairs: Vec<(usize, usize)> = (0..c.n).flat_map(|u| (0..c.n).map(move |v| (u, v))).collect();
    r.push(check_all("inf_two_elem", "inf{(v⪯u)/u, 1/v} = v and sup{(u⪯v)/u, 1/v} = v", &elem_pairs, |&(u, v)| {
        let mut a = vec![c.l.bot(); c.n];
        a[u] = p.le(v, u);
        a[v] = c.l.top();
        let mut b = vec![c.l.bot(); c.n];
        b[u] = p.le(u, v);
        b[v] = c.l.top();
        (c.inf(&a) != Some(v) || c.sup(&b) != Some(v)).then(|| format!("u = {}, v = {}", c.name(u), c.name(v)))
    }));
    r.push(check_all("interval_extrema", "v = min ⟦v,u⟧ and u = max ⟦v,u⟧", &elem_pairs, |&(v, u)| {
        if !c.le(v, u) {
            return None;
        }
        let i = p.interval_raw(v, u);
        let min = c.inf(&i).filter(|&m| i[m] == c.l.top());
        let max = c.sup(&i).filter(|&m| i[m] == c.l.top());
        (min != Some(v) || max != Some(u)).then(|| format!("⟦{}, {}⟧", c.name(v), c.name(u)))
    }));
    r
}

/// Lemmas about isotone and about deflating/inflating self-maps.
pub fn isotone_maps(p: &LOrderedSet, sweep: &Sweep) -> Report {
    let c = Ctx::new(p);
    let sets = c.sets(sweep, "iso-sets");
    let iso = c.isotone_maps(sweep, "iso-maps");
    let down = c.bounded_maps(sweep, true, "iso-down");
    let upm = c.bounded_maps(sweep, false, "iso-up");
    let iso_cases = product_indices(iso.len(), sets.len(), sweep, "iso-cases");
    let pair_maps = product_indices(down.len(), upm.len(), sweep, "iso-fg");
    let ext_cases = product_indices(pair_maps.len(), sets.len(), sweep, "iso-ext");
    let mut r = Report::new();

    r.push(check_all("isotone_cone_image", "f(LV) ⊆ Lf(V) and f(UV) ⊆ Uf(V) for isotone f", &iso_cases, |&(k, s)| {
        let (f, v) = (&iso[k], &sets[s]);
        let fv = c.image(f, v);
        let ok = c.subset(&c.image(f, &c.lc(v)), &c.lc(&fv)) && c.subset(&c.image(f, &c.uc(v)), &c.uc(&fv));
        (!ok).then(|| format!("f = {}, V = {}", c.show_map(f), c.show(v)))
    }));
    r.push(check_all(
        "isotone_image_bound",
        "LV(v) = 1 implies Lf(V)(f(v)) = 1, and dually",
        &iso_cases,
        |&(k, s)| {
            let (f, v) = (&iso[k], &sets[s]);
            let fv = c.image(f, v);
            let (lv, uv, lf, uf) = (c.lc(v), c.uc(v), c.lc(&fv), c.uc(&fv));
            let top = c.l.top();
            (0..c.n)
                .find(|&w| (lv[w] == top && lf[f[w]] != top) || (uv[w] == top && uf[f[w]] != top))
                .map(|w| format!("f = {}, V = {}, v = {}", c.show_map(f), c.show(v), c.name(w)))
        },
    ));
    r.push(check_all("isotone_sup_inf", "f(inf V) ≤ inf f(V) and f(sup V) ≥ sup f(V)", &iso_cases, |&(k, s)| {
        let (f, v) = (&iso[k], &sets[s]);
        let fv = c.image(f, v);
        let mut ok = true;
        if let (Some(i), Some(j)) = (c.inf(v), c.inf(&fv)) {
            ok &= c.le(f[i], j);
        }
        if let (Some(i), Some(j)) = (c.sup(v), c.sup(&fv)) {
            ok &= c.le(j, f[i]);
        }
        (!ok).then(|| format!("f = {}, V = {}", c.show_map(f), c.show(v)))
    }));
    r.push(check_all(
        "iso_cones_subset",
        "Lf(V) ⊆ LV, Uf(V) ⊇ UV, Lg(V) ⊇ LV, Ug(V) ⊆ UV for f ≤ id ≤ g",
        &ext_cases,
        |&(k, s)| {
            let (fi, gi) = pair_maps[k];
            let (f, g, v) = (&down[fi], &upm[gi], &sets[s]);
            let (fv, gv) = (c.image(f, v), c.image(g, v));
            let (lv, uv) = (c.lc(v), c.uc(v));
            let ok = c.subset(&c.lc(&fv), &lv)
                && c.subset(&uv, &c.uc(&fv))
                && c.subset(&lv, &c.lc(&gv))
                && c.subset(&c.uc(&gv), &uv);
            (!ok).then(|| format!("f = {}, g = {}, V = {}", c.show_map(f), c.show_map(g), c.show(v)))
        },
    ));
    r.push(check_all(
        "extensive_sup_inf",
        "inf f(V) ≤ inf V, sup f(V) ≤ sup V, inf g(V) ≥ inf V, sup g(V) ≥ sup V",
        &ext_cases,
        |&(k, s)| {
            let (fi, gi) = pair_maps[k];
            let (f, g, v) = (&down[fi], &upm[gi], &sets[s]);
            let (fv, gv) = (c.image(f, v), c.image(g, v));
            let le = |a: Option<usize>, b: Option<usize>| match (a, b) {
                (Some(a), Some(b)) => c.le(a, b),
                _ => true,
            };
            let ok = le(c.inf(&fv), c.inf(v)) && le(c.sup(&fv), c.sup(v)) && le(c.inf(v), c.inf(&gv)) && le(c.sup(v), c.sup(&gv));
            (!ok).then(|| format!("f = {}, g = {}, V = {}", c.show_map(f), c.show_map(g), c.show(v)))
        },
    ));
    r
}

/// Definitional infima and suprema of a power lattice agree with the closed
/// forms, and every L-set has both.
pub fn power_inf(pl: &PowerLattice, sweep: &Sweep) -> Report {
    let p = &pl.ordered;
    let c = Ctx::new(p);
    let sets = c.sets(sweep, "power-inf");
    let mut r = Report::new();
    let lset = |v: &[_]| p.lset(v.to_vec()).expect("sweep sets live on the carrier");
    r.push(check_all("power_inf", "(inf V)(x) = ⋀ V(W)→W(x) and (sup V)(x) = ⋁ V(W)⊗W(x)", &sets, |v| {
        let v_set = lset(v);
        let ci = pl.closed_form_inf(&v_set).expect("same carrier");
        let cs = pl.closed_form_sup(&v_set).expect("same carrier");
        match (c.inf(v), c.sup(v)) {
            (Some(i), Some(s)) if i == ci && s == cs => None,
            (i, s) => Some(format!(
                "V = {}: definitional ({}, {}) vs closed form ({}, {})",
                c.show(v),
                i.map_or("none", |x| c.name(x)),
                s.map_or("none", |x| c.name(x)),
                c.name(ci),
                c.name(cs)
            )),
        }
    }));
    r
}

/// Completely lattice check as a report entry.
pub fn completely_lattice(p: &LOrderedSet, budget: u64) -> Check {
    let mut c = Check::new("completely_lattice", "every L-set has an infimum and a supremum");
    match p.completeness_failure(budget) {
        Ok(None) => c.cases = fuzz::lset_count(p.lattice(), p.len()) as u64,
        Ok(Some(v)) => c.fail(v.display()),
        Err(e) => c.fail(e.to_string()),
    }
    c
}
