//! Checkable statements of the theory. Every procedure returns [`Check`]s
//! whose ids are the labels of the corresponding lemmas and theorems.
//!
//! A sweep is exhaustive when its domain fits the budget; otherwise it draws
//! a fixed number of seeded random instances.

pub mod galois;
pub mod order;
pub mod power;
pub mod tolerance;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fuzz::{self, LSet};
use crate::lattice::{Degree, ResiduatedLattice};
use crate::order::LOrderedSet;
use crate::report::Check;

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SAMPLES: usize = 1000;

/// How large domains are covered.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Sweep {
    pub budget: u64,
    pub seed: u64,
    pub samples: usize,
}

impl Default for Sweep {
    fn default() -> Self {
        Sweep {
            budget: crate::order::DEFAULT_BUDGET,
            seed: DEFAULT_SEED,
            samples: DEFAULT_SAMPLES,
        }
    }
}

impl Sweep {
    pub fn new(budget: u64, seed: u64) -> Self {
        Sweep {
            budget,
            seed,
            ..Sweep::default()
        }
    }

    /// Independent generator for one named sweep, so adding a check does not
    /// shift the instances drawn by the others.
    pub fn rng(&self, salt: &str) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in salt.bytes() {
            h = (h ^ b as u64).wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }

    /// Indices into a domain of `total` items: all of them, or samples.
    pub fn indices(&self, total: u128, salt: &str) -> Vec<u128> {
        if total == 0 {
            return Vec::new();
        }
        if total <= self.budget as u128 {
            return (0..total).collect();
        }
        let mut rng = self.rng(salt);
        (0..self.samples).map(|_| rng.gen_range(0..total)).collect()
    }

    pub fn exhaustive(&self, total: u128) -> bool {
        total <= self.budget as u128
    }
}

/// Membership vector with the given rank in enumeration order.
pub fn decode_membership(l: &ResiduatedLattice, n: usize, mut idx: u128) -> Vec<Degree> {
    let k = l.len() as u128;
    let mut m = vec![l.bot(); n];
    for slot in m.iter_mut().rev() {
        *slot = l.degree((idx % k) as usize).expect("digit below |L|");
        idx /= k;
    }
    m
}

/// Raw cone and set operations on one ordered set, as used by the laws.
pub(crate) struct Ctx<'a> {
    pub p: &'a LOrderedSet,
    pub l: &'a ResiduatedLattice,
    pub n: usize,
}

impl<'a> Ctx<'a> {
    pub fn new(p: &'a LOrderedSet) -> Self {
        Ctx {
            p,
            l: p.lattice(),
            n: p.len(),
        }
    }

    pub fn count(&self) -> u128 {
        fuzz::lset_count(self.l, self.n)
    }

    pub fn decode(&self, idx: u128) -> Vec<Degree> {
        decode_membership(self.l, self.n, idx)
    }

    /// L-sets of the sweep, exhaustive or sampled.
    pub fn sets(&self, sweep: &Sweep, salt: &str) -> Vec<Vec<Degree>> {
        sweep.indices(self.count(), salt).into_iter().map(|i| self.decode(i)).collect()
    }

    /// Pairs of L-sets of the sweep.
    pub fn set_pairs(&self, sweep: &Sweep, salt: &str) -> Vec<(Vec<Degree>, Vec<Degree>)> {
        let c = self.count();
        sweep
            .indices(c.saturating_mul(c), salt)
            .into_iter()
            .map(|i| (self.decode(i / c), self.decode(i % c)))
            .collect()
    }

    pub fn show(&self, v: &[Degree]) -> String {
        LSet::from_parts(self.l, self.p.carrier(), v.to_vec()).display()
    }

    /// A relation matrix row by row.
    pub fn show_rel(&self, r: &[Degree]) -> String {
        let rows: Vec<String> = r
            .chunks(self.n.max(1))
            .map(|row| row.iter().map(|&d| self.l.name(d)).collect::<Vec<_>>().join(" "))
            .collect();
        format!("[{}]", rows.join("; "))
    }

    pub fn name(&self, u: usize) -> &str {
        self.p.name(u)
    }

    pub fn down(&self, v: &[Degree]) -> Vec<Degree> {
        self.p.lower_set_raw(v)
    }

    pub fn up(&self, v: &[Degree]) -> Vec<Degree> {
        self.p.upper_set_raw(v)
    }

    pub fn lc(&self, v: &[Degree]) -> Vec<Degree> {
        self.p.lower_cone_raw(v)
    }

    pub fn uc(&self, v: &[Degree]) -> Vec<Degree> {
        self.p.upper_cone_raw(v)
    }

    pub fn s(&self, a: &[Degree], b: &[Degree]) -> Degree {
        fuzz::subsethood(self.l, a, b)
    }

    pub fn subset(&self, a: &[Degree], b: &[Degree]) -> bool {
        fuzz::is_subset(self.l, a, b)
    }

    pub fn meet(&self, a: &[Degree], b: &[Degree]) -> Vec<Degree> {
        fuzz::zip_with(a, b, |x, y| self.l.meet(x, y))
    }

    pub fn join(&self, a: &[Degree], b: &[Degree]) -> Vec<Degree> {
        fuzz::zip_with(a, b, |x, y| self.l.join(x, y))
    }

    pub fn single(&self, u: usize) -> Vec<Degree> {
        let mut m = vec![self.l.bot(); self.n];
        m[u] = self.l.top();
        m
    }

    /// Infimum, treating a corrupted order as "absent".
    pub fn inf(&self, v: &[Degree]) -> Option<usize> {
        self.p.infimum_raw(v).ok().flatten()
    }

    pub fn sup(&self, v: &[Degree]) -> Option<usize> {
        self.p.supremum_raw(v).ok().flatten()
    }

    pub fn image(&self, f: &[usize], v: &[Degree]) -> Vec<Degree> {
        fuzz::zadeh_image(self.l, v, f, self.n)
    }

    pub fn le(&self, u: usize, v: usize) -> bool {
        self.p.le_crisp(u, v)
    }

    pub fn show_map(&self, f: &[usize]) -> String {
        let parts: Vec<String> = f.iter().enumerate().map(|(u, &v)| format!("{}↦{}", self.name(u), self.name(v))).collect();
        parts.join(", ")
    }

    /// Self-maps with `f(u) ≤ u` (`below`) or `f(u) ≥ u`, exhaustive or sampled.
    pub fn bounded_maps(&self, sweep: &Sweep, below: bool, salt: &str) -> Vec<Vec<usize>> {
        let choices: Vec<Vec<usize>> = (0..self.n)
            .map(|u| (0..self.n).filter(|&w| if below { self.le(w, u) } else { self.le(u, w) }).collect())
            .collect();
        let total = choices.iter().fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128));
        sweep
            .indices(total, salt)
            .into_iter()
            .map(|mut idx| {
                let mut f = vec![0; self.n];
                for u in (0..self.n).rev() {
                    let k = choices[u].len() as u128;
                    f[u] = choices[u][(idx % k) as usize];
                    idx /= k;
                }
                f
            })
            .collect()
    }

    /// Isotone self-maps: all of them when `|U|^|U|` fits the budget,
    /// otherwise the isotone ones among sampled maps.
    pub fn isotone_maps(&self, sweep: &Sweep, salt: &str) -> Vec<Vec<usize>> {
        let total = (self.n as u128).checked_pow(self.n as u32).unwrap_or(u128::MAX);
        let idx: Vec<u128> = if sweep.exhaustive(total) {
            (0..total).collect()
        } else {
            let mut rng = sweep.rng(salt);
            (0..sweep.samples.saturating_mul(10)).map(|_| rng.gen_range(0..total)).collect()
        };
        idx.into_iter()
            .map(|mut i| {
                let mut f = vec![0; self.n];
                for u in (0..self.n).rev() {
                    f[u] = (i % self.n as u128) as usize;
                    i /= self.n as u128;
                }
                f
            })
            .filter(|f| crate::order::is_isotone(f, self.p, self.p))
            .collect()
    }
}

/// Index pairs into two domains: the full product, or samples.
pub(crate) fn product_indices(na: usize, nb: usize, sweep: &Sweep, salt: &str) -> Vec<(usize, usize)> {
    if nb == 0 {
        return Vec::new();
    }
    sweep
        .indices((na as u128) * (nb as u128), salt)
        .into_iter()
        .map(|i| ((i / nb as u128) as usize, (i % nb as u128) as usize))
        .collect()
}

/// One check over a list of instances; the closure returns a witness on failure.
pub(crate) fn check_all<T>(
    id: &str,
    statement: &str,
    items: impl IntoIterator<Item = T>,
    mut test: impl FnMut(T) -> Option<String>,
) -> Check {
    let mut c = Check::new(id, statement);
    for item in items {
        c.cases += 1;
        if c.passed {
            if let Some(w) = test(item) {
                c.fail(w);
            }
        }
    }
    c
}
