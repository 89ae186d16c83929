use proptest::prelude::*;

use fuzzord::galois;
use fuzzord::generate::{generate, GenerateParams, Kind};
use fuzzord::model::{parse_model, Validation};
use fuzzord::order::DEFAULT_BUDGET;
use fuzzord::power;
use fuzzord::tolerance::{self, BlockMode, CompletenessOracle};
use fuzzord::{ChainKind, Degree, LOrderedSet, LRelation, LSet, ResiduatedLattice};

// Product chains only close on two elements, so they are left out.
const KINDS: [ChainKind; 2] = [ChainKind::Lukasiewicz, ChainKind::Godel];

fn lattice() -> impl Strategy<Value = ResiduatedLattice> {
    (0..2usize, 2..=6usize).prop_map(|(k, n)| ResiduatedLattice::chain(KINDS[k], n).unwrap())
}

/// A chain-carried ordered set `U_L` over a random chain of 2 to 4 elements.
fn small_ordered() -> impl Strategy<Value = LOrderedSet> {
    (0..2usize, 2..=4usize).prop_map(|(k, n)| LOrderedSet::of_degrees(&ResiduatedLattice::chain(KINDS[k], n).unwrap()))
}

fn degrees(l: &ResiduatedLattice, idx: &[usize]) -> Vec<Degree> {
    idx.iter().map(|&i| l.degree(i % l.len()).unwrap()).collect()
}

fn lset(p: &LOrderedSet, idx: &[usize]) -> LSet {
    LSet::new(p.lattice(), p.carrier(), degrees(p.lattice(), &idx[..p.len()])).unwrap()
}

fn relation(p: &LOrderedSet, idx: &[usize]) -> LRelation {
    let n = p.len();
    LRelation::new(p.lattice(), p.carrier(), p.carrier(), degrees(p.lattice(), &idx[..n * n])).unwrap()
}

fn tolerance_of(p: &LOrderedSet, idx: &[usize]) -> LRelation {
    let l = p.lattice();
    let n = p.len();
    let mut k = 0;
    let mut m = vec![l.top(); n * n];
    for x in 0..n {
        for y in x + 1..n {
            let d = l.degree(idx[k] % l.len()).unwrap();
            m[x * n + y] = d;
            m[y * n + x] = d;
            k += 1;
        }
    }
    LRelation::new(l, p.carrier(), p.carrier(), m).unwrap()
}

fn idx(len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..64usize, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn adjointness_and_residuum(l in lattice(), a in 0..64usize, b in 0..64usize, c in 0..64usize) {
        let [a, b, c]: [Degree; 3] = degrees(&l, &[a, b, c]).try_into().unwrap();
        prop_assert_eq!(l.leq(l.tensor(a, b), c), l.leq(a, l.residuum(b, c)));
        prop_assert_eq!(l.tensor(a, b), l.tensor(b, a));
        prop_assert_eq!(l.tensor(l.tensor(a, b), c), l.tensor(a, l.tensor(b, c)));
        prop_assert!(l.is_top(l.residuum(a, a)));
        prop_assert_eq!(l.biresiduum(a, b), l.biresiduum(b, a));
        // a ⊗ (a → b) ≤ b
        prop_assert!(l.leq(l.tensor(a, l.residuum(a, b)), b));
    }

    #[test]
    fn subsethood_is_graded_inclusion(p in small_ordered(), x in idx(4), y in idx(4)) {
        let (a, b) = (lset(&p, &x), lset(&p, &y));
        let l = p.lattice();
        let pointwise = a.membership().iter().zip(b.membership()).all(|(&u, &v)| l.leq(u, v));
        prop_assert_eq!(a.is_subset(&b).unwrap(), pointwise);
        prop_assert_eq!(a.similarity(&b).unwrap(), b.similarity(&a).unwrap());
        prop_assert_eq!(a.similarity(&b).unwrap(), l.meet(a.subsethood(&b).unwrap(), b.subsethood(&a).unwrap()));
    }

    #[test]
    fn composition_is_associative(p in small_ordered(), r in idx(16), s in idx(16), t in idx(16)) {
        let (r, s, t) = (relation(&p, &r), relation(&p, &s), relation(&p, &t));
        let left = r.compose(&s).unwrap().compose(&t).unwrap();
        let right = r.compose(&s.compose(&t).unwrap()).unwrap();
        prop_assert_eq!(left, right);
        prop_assert_eq!(r.inverse().inverse(), r);
    }

    #[test]
    fn infimum_is_the_top_of_the_lower_cone(p in small_ordered(), x in idx(4)) {
        let v = lset(&p, &x);
        let l = p.lattice();
        let i = p.infimum(&v).unwrap().expect("chains are completely lattice");
        let s = p.supremum(&v).unwrap().expect("chains are completely lattice");
        let lc = p.lower_cone(&v).unwrap();
        let uc = p.upper_cone(&v).unwrap();
        prop_assert!(l.is_top(lc.get(i)));
        prop_assert!(l.is_top(uc.get(s)));
        for u in 0..p.len() {
            // L{inf V} = LV and U{sup V} = UV
            prop_assert_eq!(p.le(u, i), lc.get(u));
            prop_assert_eq!(p.le(s, u), uc.get(u));
        }
        // V ⊆ ULV
        prop_assert!(v.is_subset(&p.upper_cone(&lc).unwrap()).unwrap());
    }

    #[test]
    fn power_relation_splits(p in small_ordered(), r in idx(16), x in idx(4), y in idx(4)) {
        let r = relation(&p, &r);
        let (a, b) = (lset(&p, &x), lset(&p, &y));
        let l = p.lattice();
        let fw = power::forward(&r, &a, &b).unwrap();
        let bw = power::backward(&r, &a, &b).unwrap();
        prop_assert_eq!(power::power(&r, &a, &b).unwrap(), l.meet(fw, bw));
        // R←(A, B) = (R⁻¹)→(B, A)
        prop_assert_eq!(bw, power::forward(&r.inverse(), &b, &a).unwrap());
        prop_assert!(l.is_top(power::forward(p.order(), &a, &a).unwrap()));
    }

    #[test]
    fn fast_and_brute_completeness_agree(p in small_ordered(), t in idx(6)) {
        let r = tolerance_of(&p, &t);
        let oracle = CompletenessOracle::new(&p, DEFAULT_BUDGET).unwrap();
        let fast = tolerance::is_complete_tolerance_fast(&p, &r).unwrap();
        let brute = oracle.check(&r).unwrap();
        prop_assert_eq!(fast.complete(), brute.complete());
        if fast.complete() {
            let pair = tolerance::pair_from_tolerance(&p, &r).unwrap();
            prop_assert!(galois::is_isotone_galois(&p, &p, &pair).unwrap());
            prop_assert!(galois::is_extensive(&p, &pair).unwrap());
            prop_assert_eq!(tolerance::tolerance_from_pair(&p, &pair).unwrap(), r.clone());
            let mut a = tolerance::maximal_blocks(&p, &r, BlockMode::Fast, DEFAULT_BUDGET).unwrap();
            let mut b = tolerance::maximal_blocks(&p, &r, BlockMode::Brute, DEFAULT_BUDGET).unwrap();
            let key = |s: &LSet| s.membership().iter().map(|d| d.index()).collect::<Vec<_>>();
            a.sort_by_key(key);
            b.sort_by_key(key);
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn extensive_pairs_give_complete_tolerances(p in small_ordered(), pick in 0..1000usize) {
        let pairs = galois::extensive_pairs(&p, DEFAULT_BUDGET).unwrap();
        let pair = &pairs[pick % pairs.len()];
        let r = tolerance::tolerance_from_pair(&p, pair).unwrap();
        prop_assert!(tolerance::is_complete_relation_bruteforce(&p, &r, DEFAULT_BUDGET).unwrap().complete());
        prop_assert_eq!(&tolerance::pair_from_tolerance(&p, &r).unwrap(), pair);
        let f = tolerance::factor(&p, &r, DEFAULT_BUDGET).unwrap();
        prop_assert!(f.ordered.verify_axioms().passed());
        prop_assert_eq!(f.completely_lattice, Some(true));
    }

    #[test]
    fn complete_relations_are_closed_under_shift(p in small_ordered(), pick in 0..1000usize, a in 0..64usize) {
        let all = tolerance::enumerate_complete_tolerances(&p, DEFAULT_BUDGET).unwrap();
        let r = &all[pick % all.len()];
        let d = p.lattice().degree(a % p.lattice().len()).unwrap();
        let oracle = CompletenessOracle::new(&p, DEFAULT_BUDGET).unwrap();
        prop_assert!(oracle.check(&r.shift(d).unwrap()).unwrap().complete());
        prop_assert!(oracle.check(&r.intersection(&all[(pick / 7) % all.len()]).unwrap()).unwrap().complete());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn generated_models_reload_identically(kind in 0..4usize, k in 0..2usize, size in 2..=4usize, seed in any::<u64>()) {
        let kinds = [Kind::ExtensivePair, Kind::CompleteTolerance, Kind::FactorOrder, Kind::Relation];
        let params = GenerateParams::new(kinds[kind], KINDS[k], size, seed);
        let a = generate(&params).unwrap().to_json();
        prop_assert_eq!(&a, &generate(&params).unwrap().to_json());
        let back = parse_model(&a.to_string(), Validation::Strict).unwrap();
        prop_assert_eq!(back.to_json(), a);
    }
}
