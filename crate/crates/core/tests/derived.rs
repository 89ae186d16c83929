//! Hand-evaluated values on small fixtures. Each expected value is worked
//! out in the comment above its assertion, not computed with the library.

use fuzzord::galois::{self, GaloisPair};
use fuzzord::lattice::LatticeTables;
use fuzzord::order::{self, DEFAULT_BUDGET};
use fuzzord::power::{self, Shortcut};
use fuzzord::tolerance::{self, BlockMode};
use fuzzord::{ChainKind, Degree, LOrderedSet, LRelation, LSet, PowerLattice, ResiduatedLattice, Universe};

fn luk3() -> ResiduatedLattice {
    ResiduatedLattice::chain(ChainKind::Lukasiewicz, 3).unwrap()
}

fn u_l() -> LOrderedSet {
    LOrderedSet::of_degrees(&luk3())
}

fn d(l: &ResiduatedLattice, name: &str) -> Degree {
    l.degree_by_name(name).unwrap()
}

fn set(p: &LOrderedSet, names: &[&str]) -> LSet {
    let l = p.lattice();
    LSet::new(l, p.carrier(), names.iter().map(|n| d(l, n)).collect()).unwrap()
}

fn rel(p: &LOrderedSet, rows: [[&str; 3]; 3]) -> LRelation {
    let l = p.lattice();
    let rows = rows.iter().map(|r| r.iter().map(|n| d(l, n)).collect()).collect();
    LRelation::from_rows(l, p.carrier(), p.carrier(), rows).unwrap()
}

fn names(p: &LOrderedSet, s: &LSet) -> Vec<String> {
    s.membership().iter().map(|&x| p.lattice().name(x).to_string()).collect()
}

const CRISP_CHAIN: [[&str; 3]; 3] = [["1", "1", "0"], ["1", "1", "1"], ["0", "1", "1"]];

#[test]
fn non_associative_tensor_is_caught() {
    // ½⊗1 and 1⊗½ lowered to 0 break the unit law at a = ½.
    let mut t: LatticeTables = luk3().tables();
    t.tensor[1][2] = 0;
    t.tensor[2][1] = 0;
    let rep = fuzzord::lattice::verify_axioms(&t).unwrap();
    let unit = rep.get("tensor-unit").unwrap();
    assert!(!unit.passed);
    assert_eq!(unit.witness.as_deref(), Some("1/2"));
}

#[test]
fn biresiduum_half_one() {
    // (½→1) ∧ (1→½) = 1 ∧ ½
    let l = luk3();
    assert_eq!(l.name(l.biresiduum(d(&l, "1/2"), d(&l, "1"))), "1/2");
}

#[test]
fn subsethood_similarity_composition() {
    let l = luk3();
    let x = Universe::new(["x", "y"]).unwrap();
    let a = LSet::new(&l, &x, vec![d(&l, "1"), d(&l, "1/2")]).unwrap();
    let b = LSet::new(&l, &x, vec![d(&l, "1/2"), d(&l, "1")]).unwrap();
    // (1→½) ∧ (½→1) = ½ in both directions
    assert_eq!(l.name(a.subsethood(&b).unwrap()), "1/2");
    assert_eq!(l.name(a.similarity(&b).unwrap()), "1/2");
    let one = Universe::new(["x"]).unwrap();
    let top = LSet::new(&l, &one, vec![l.top()]).unwrap();
    let bot = LSet::new(&l, &one, vec![l.bot()]).unwrap();
    // (1→0) ∧ (0→1) = 0
    assert_eq!(top.similarity(&bot).unwrap(), l.bot());
    // ½ ⊗ ½ = max(0, ½+½-1) = 0
    let half = LSet::new(&l, &one, vec![d(&l, "1/2")]).unwrap();
    assert_eq!(half.compose_set(&half).unwrap(), l.bot());
}

#[test]
fn inverse_cut_shift_image() {
    let l = luk3();
    let x = Universe::new(["x", "y"]).unwrap();
    let r = LRelation::from_rows(&l, &x, &x, vec![vec![l.top(), d(&l, "1/2")], vec![l.top(), l.top()]]).unwrap();
    let inv = r.inverse();
    assert_eq!(l.name(inv.get(0, 1)), "1");
    assert_eq!(l.name(inv.get(1, 0)), "1/2");

    let a = LSet::new(&l, &x, vec![l.top(), d(&l, "1/2")]).unwrap();
    assert_eq!(a.a_cut(l.top()).unwrap(), vec![0]);

    // ½ → 0 = ½
    let one = Universe::new(["x"]).unwrap();
    let z = LSet::new(&l, &one, vec![l.bot()]).unwrap();
    assert_eq!(l.name(z.scalar_shift(d(&l, "1/2")).unwrap().get(0)), "1/2");

    // Constant map onto y*: the single fibre collects ⋁{1, ½} = 1.
    let star = Universe::new(["y*"]).unwrap();
    let img = a.zadeh_image(&[0, 0], &star).unwrap();
    assert_eq!(img.membership(), &[l.top()]);
}

#[test]
fn relation_properties() {
    let p = u_l();
    let l = p.lattice();
    // ≈ on U_L is separating: u≈v = 1 only for u = v.
    assert!(p.approx().properties().unwrap().equality);
    // Off-diagonal ½ on LUK3: ½⊗½ = 0, so transitivity holds trivially.
    // R(x, y) = ½ ≠ 1 off the diagonal, so it also separates points.
    let x = Universe::new(["x", "y"]).unwrap();
    let h = d(l, "1/2");
    let r = LRelation::from_rows(l, &x, &x, vec![vec![l.top(), h], vec![h, l.top()]]).unwrap();
    let pr = r.properties().unwrap();
    assert!(pr.tolerance && pr.transitive && pr.equivalence && pr.equality);
}

#[test]
fn crisp_tolerance_not_compatible() {
    // x=0, x′=0, y=½, y′=1: R(0,½) ⊗ (0≈0) ⊗ (½≈1) = 1 ⊗ 1 ⊗ ½ = ½ ≰ R(0,1) = 0.
    let p = u_l();
    let r = rel(&p, CRISP_CHAIN);
    let w = r.compatibility_witness(p.approx()).unwrap().unwrap();
    let l = p.lattice();
    assert_eq!(l.name(w.rhs), "0");
    assert_eq!(l.name(w.lhs), "1/2");
}

#[test]
fn order_axiom_examples() {
    assert!(u_l().verify_axioms().passed());
    // ⪯ ≡ 1 with crisp identity ≈: (a⪯b) ⊗ (b⪯a) = 1 ≰ a≈b = 0.
    let l = ResiduatedLattice::boolean();
    let x = Universe::new(["a", "b"]).unwrap();
    let p = LOrderedSet::new(LRelation::identity(&l, &x), LRelation::total(&l, &x)).unwrap();
    let rep = p.verify_axioms();
    assert!(!rep.get("order-antisymmetric").unwrap().passed);
}

#[test]
fn sets_and_cones() {
    let p = u_l();
    let l = p.lattice();
    // ↓{1/1}(u) = ⋁_v {1/1}(v) ⊗ (u⪯v) = u→1 = 1
    assert_eq!(names(&p, &p.lower_set(&set(&p, &["0", "0", "1"])).unwrap()), ["1", "1", "1"]);
    assert_eq!(p.upper_set(&LSet::empty(l, p.carrier())).unwrap(), LSet::empty(l, p.carrier()));
    // L∅ is the all-one set.
    assert_eq!(names(&p, &p.lower_cone(&LSet::empty(l, p.carrier())).unwrap()), ["1", "1", "1"]);
    // V = {1/½, ½/1}: LV(0) = (1→(0→½)) ∧ (½→(0→1)) = 1
    let v = set(&p, &["0", "1", "1/2"]);
    assert_eq!(p.lower_cone(&v).unwrap().get(0), l.top());
    // inf V = ⋀ V(w)→w = (1→½) ∧ (½→1) = ½; sup V = ⋁ V(w)⊗w = (1⊗½) ∨ (½⊗1) = ½
    assert_eq!(p.infimum(&v).unwrap(), Some(1));
    assert_eq!(p.supremum(&v).unwrap(), Some(1));
}

#[test]
fn convexity() {
    let p = u_l();
    // ↓V ∩ ↑V for V = {1/0, 0/½, 1/1} is everywhere 1, so ½ enters with 1 > 0.
    assert!(!p.is_convex(&set(&p, &["1", "0", "1"])).unwrap());
    for v in 0..3 {
        for u in 0..3 {
            if let Ok(i) = p.interval(v, u) {
                assert!(p.is_convex(&i.set).unwrap());
            }
        }
    }
}

#[test]
fn completely_lattice_examples() {
    assert!(u_l().is_completely_lattice(DEFAULT_BUDGET).unwrap());
    // Crisp antichain {a, b}: neither ∅ (no top) nor {a, b} (no upper bound)
    // has the required bounds.
    let l = ResiduatedLattice::boolean();
    let x = Universe::new(["a", "b"]).unwrap();
    let anti = LOrderedSet::from_order(LRelation::identity(&l, &x)).unwrap();
    let w = anti.completeness_failure(DEFAULT_BUDGET).unwrap().unwrap();
    assert!(anti.infimum(&w).unwrap().is_none() || anti.supremum(&w).unwrap().is_none());
    assert_eq!(anti.supremum(&LSet::full(&l, &x)).unwrap(), None);
    let single = LOrderedSet::from_order(LRelation::identity(&l, &Universe::new(["s"]).unwrap())).unwrap();
    assert!(single.is_completely_lattice(DEFAULT_BUDGET).unwrap());
}

#[test]
fn power_lattice_shapes() {
    let l = luk3();
    let one = PowerLattice::new(&l, &Universe::new(["x"]).unwrap(), DEFAULT_BUDGET).unwrap();
    assert_eq!(one.ordered.order().matrix(), u_l().order().matrix());
    // |X| = 2 over B2: the 4-element Boolean algebra ordered by inclusion.
    let b = ResiduatedLattice::boolean();
    let sq = PowerLattice::new(&b, &Universe::new(["x", "y"]).unwrap(), DEFAULT_BUDGET).unwrap();
    let p = &sq.ordered;
    assert_eq!(p.len(), 4);
    let crisp: Vec<(usize, usize)> = (0..4).flat_map(|a| (0..4).map(move |c| (a, c))).filter(|&(a, c)| p.le_crisp(a, c)).collect();
    // ⊆ on {00, 01, 10, 11}: 4 reflexive + 00 below 3 others + 01, 10 below 11
    assert_eq!(crisp.len(), 9);
}

#[test]
fn isotone_map_on_u_l() {
    let p = u_l();
    // 0↦0, ½↦0, 1↦½
    assert!(order::is_isotone(&[0, 0, 1], &p, &p));
    assert!(order::is_isotone(&[2, 2, 2], &p, &p));
    assert!(!order::is_isotone(&[2, 0, 2], &p, &p));
}

#[test]
fn power_relation_examples() {
    let p = u_l();
    let l = p.lattice();
    // Reflexive R with A = B: A ⊆ R∘A, so R→(A, A) = 1.
    let a = set(&p, &["1/2", "1", "0"]);
    assert_eq!(power::forward(p.order(), &a, &a).unwrap(), l.top());
    assert_eq!(power::forward(p.order(), &LSet::empty(l, p.carrier()), &a).unwrap(), l.top());
    // ⟦0,½⟧ = {1/0, 1/½, ½/1}, ⟦½,1⟧ = {½/0, 1/½, 1/1} since ½⪯0 = ½.
    let i1 = p.interval(0, 1).unwrap();
    let i2 = p.interval(1, 2).unwrap();
    assert_eq!(names(&p, &i1.set), ["1", "1", "1/2"]);
    assert_eq!(names(&p, &i2.set), ["1/2", "1", "1"]);
    // (0⪯½) ∧ (½⪯1) = 1; (½⪯0) ∧ (1⪯½) = ½; (0≈½) ∧ (½≈1) = ½
    assert_eq!(l.name(power::power(p.order(), &i1.set, &i2.set).unwrap()), "1");
    assert_eq!(l.name(power::power(p.order(), &i2.set, &i1.set).unwrap()), "1/2");
    assert_eq!(l.name(power::power(p.approx(), &i1.set, &i2.set).unwrap()), "1/2");
    assert_eq!(l.name(power::interval_power_shortcut(&p, &i1, &i2, Shortcut::Order)), "1");
    assert_eq!(l.name(power::interval_power_shortcut(&p, &i2, &i1, Shortcut::Order)), "1/2");
    assert_eq!(l.name(power::interval_power_shortcut(&p, &i1, &i2, Shortcut::Approx)), "1/2");
}

#[test]
fn power_order_on_interval_family() {
    let p = u_l();
    let mut all = Vec::new();
    for v in 0..3 {
        for u in 0..3 {
            if let Ok(i) = p.interval(v, u) {
                all.push(i.set);
            }
        }
    }
    let q = power::power_order_on_convex(&p, &all).unwrap();
    assert!(q.verify_axioms().passed());
    assert!(power::power_order_on_convex(&p, &[set(&p, &["1", "0", "1"])]).is_err());
}

#[test]
fn galois_examples() {
    let p = u_l();
    let l = p.lattice();
    let id = GaloisPair::identity(3);
    let bt = GaloisPair::new(vec![0, 0, 0], vec![2, 2, 2]);
    let tb = GaloisPair::new(vec![2, 2, 2], vec![0, 0, 0]);
    assert!(galois::is_isotone_galois(&p, &p, &id).unwrap());
    // 0→v = 1 = u→1
    assert!(galois::is_isotone_galois(&p, &p, &bt).unwrap());
    // u = v = 1: 1⪯1 = 1 but 1⪯0 = 0
    let w = galois::galois_defect(&p, &p, &tb).unwrap().unwrap();
    assert_eq!(l.biresiduum(w.lhs, w.rhs), l.bot());
    assert_ne!(p.le(tb.f[2], 2), p.le(2, tb.g[2]));

    let ext = GaloisPair::new(vec![0, 0, 1], vec![1, 2, 2]);
    assert!(galois::is_isotone_galois(&p, &p, &ext).unwrap());
    assert!(galois::is_extensive(&p, &ext).unwrap());
    // g(f(u)) = u exactly for u = 1 under (f≡0, g≡1)
    assert_eq!(galois::fixpoints(&p, &p, &bt).unwrap().points, vec![(2, 0)]);
    // g(f(0)) = ½, g(f(½)) = ½, g(f(1)) = 1
    assert_eq!(galois::fixpoints(&p, &p, &ext).unwrap().points, vec![(1, 0), (2, 1)]);
    assert_eq!(galois::fixpoints(&p, &p, &id).unwrap().points.len(), 3);

    assert!(galois::verify_closure(&p, &bt.closure()).passed());
    assert!(galois::verify_interior(&p, &bt.interior()).passed());
    assert!(!galois::verify_closure(&p, &[2, 0, 2]).get("closure-isotone").unwrap().passed);
    // identity ⪯ (f≡0, g≡1) holds to degree 1
    assert_eq!(galois::igal_order(&p, &p, &id, &bt), l.top());
}

#[test]
fn tolerance_endpoints_and_pairs() {
    let p = u_l();
    let l = p.lattice();
    // class of ½ under ≈ is {½/0, 1/½, ½/1}, with inf = sup = ½
    assert_eq!(names(&p, &tolerance::class_of(p.approx(), 1)), ["1/2", "1", "1/2"]);
    assert_eq!(tolerance::tol_endpoints(&p, p.approx(), 1).unwrap(), (1, 1));
    let total = LRelation::total(l, p.carrier());
    for u in 0..3 {
        assert_eq!(tolerance::tol_endpoints(&p, &total, u).unwrap(), (0, 2));
    }
    assert_eq!(tolerance::pair_from_tolerance(&p, p.approx()).unwrap(), GaloisPair::identity(3));
    assert_eq!(tolerance::pair_from_tolerance(&p, &total).unwrap(), GaloisPair::new(vec![0; 3], vec![2; 3]));
    assert_eq!(&tolerance::tolerance_from_pair(&p, &GaloisPair::identity(3)).unwrap(), p.approx());
    assert_eq!(tolerance::tolerance_from_pair(&p, &GaloisPair::new(vec![0; 3], vec![2; 3])).unwrap(), total);
    // (0⪯1) ∧ (1⪯½) = 1 ∧ ½
    let ext = GaloisPair::new(vec![0, 0, 1], vec![1, 2, 2]);
    let r = tolerance::tolerance_from_pair(&p, &ext).unwrap();
    assert_eq!(l.name(r.get(0, 2)), "1/2");
    assert!(tolerance::is_complete_tolerance_fast(&p, &r).unwrap().complete());
}

#[test]
fn crisp_chain_defect() {
    // 0^∼ = ½ and 0∼⪯ = 0, so (0⪯1) ∧ (1⪯½) = ½ ≠ 0 = 0∼1
    let p = u_l();
    let r = rel(&p, CRISP_CHAIN);
    let fast = tolerance::is_complete_tolerance_fast(&p, &r).unwrap();
    let (u, v, given, rebuilt) = fast.reconstruction_defect.unwrap();
    assert_eq!((p.name(u), p.name(v)), ("0", "1"));
    assert_eq!((p.lattice().name(given), p.lattice().name(rebuilt)), ("0", "1/2"));
    assert!(!tolerance::is_complete_relation_bruteforce(&p, &r, DEFAULT_BUDGET).unwrap().complete());
}

#[test]
fn blocks_and_factors() {
    let p = u_l();
    let l = p.lattice();
    let total = LRelation::total(l, p.carrier());
    let b = tolerance::maximal_blocks(&p, &total, BlockMode::Brute, DEFAULT_BUDGET).unwrap();
    assert_eq!(b, vec![LSet::full(l, p.carrier())]);
    let mut b = tolerance::maximal_blocks(&p, p.approx(), BlockMode::Fast, DEFAULT_BUDGET).unwrap();
    b.sort_by_key(|s| s.membership().iter().map(|x| x.index()).collect::<Vec<_>>());
    let mut classes: Vec<LSet> = (0..3).map(|u| tolerance::class_of(p.approx(), u)).collect();
    classes.sort_by_key(|s| s.membership().iter().map(|x| x.index()).collect::<Vec<_>>());
    assert_eq!(b, classes);

    assert_eq!(tolerance::factor(&p, &total, DEFAULT_BUDGET).unwrap().ordered.len(), 1);
    let f = tolerance::factor(&p, p.approx(), DEFAULT_BUDGET).unwrap();
    assert!(order::is_isomorphism(&[0, 1, 2], &f.ordered, &p));
    // Fixpoints ⟨½,0⟩, ⟨1,½⟩: blocks ⟦0,½⟧ and ⟦½,1⟧ with ⟦½,1⟧ ⪯⁺ ⟦0,½⟧ = (½⪯0) ∧ (1⪯½) = ½
    let ext = GaloisPair::new(vec![0, 0, 1], vec![1, 2, 2]);
    let r = tolerance::tolerance_from_pair(&p, &ext).unwrap();
    let f = tolerance::factor(&p, &r, DEFAULT_BUDGET).unwrap();
    assert_eq!(f.ordered.carrier().names(), ["[0,1/2]", "[1/2,1]"]);
    assert_eq!(l.name(f.ordered.le(1, 0)), "1/2");
    assert_eq!(f.ordered.le(0, 1), l.top());
}

#[test]
fn tolerance_order_and_enumeration() {
    let p = u_l();
    let l = p.lattice();
    let total = LRelation::total(l, p.carrier());
    assert_eq!(tolerance::ctol_order(p.approx(), &total).unwrap(), l.top());
    // ⋀ 1 → (u≈v) reaches 0≈1 = 0
    assert_eq!(tolerance::ctol_order(&total, p.approx()).unwrap(), l.bot());
    let all = tolerance::enumerate_complete_tolerances(&p, DEFAULT_BUDGET).unwrap();
    assert!(all.contains(p.approx()) && all.contains(&total));

    // B2 2-chain: endpoint enumeration equals the definitional filter.
    let b = LOrderedSet::of_degrees(&ResiduatedLattice::boolean());
    let fast = tolerance::enumerate_complete_tolerances(&b, DEFAULT_BUDGET).unwrap();
    let brute: Vec<LRelation> = tolerance::all_tolerances(&b, DEFAULT_BUDGET)
        .unwrap()
        .into_iter()
        .filter(|r| tolerance::is_complete_relation_bruteforce(&b, r, DEFAULT_BUDGET).unwrap().complete())
        .collect();
    assert_eq!(fast, brute);
}
