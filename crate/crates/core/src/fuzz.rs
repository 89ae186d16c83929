//! L-sets and binary L-relations over finite universes.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::lattice::{Degree, ResiduatedLattice};

/// An ordered, finite list of element identifiers.
#[derive(Clone)]
pub struct Universe(Arc<Vec<String>>);

impl Universe {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.as_str()) {
                return Err(Error::Format(format!("duplicate universe element `{n}`")));
            }
        }
        Ok(Universe(Arc::new(names)))
    }

    /// A universe `x0, x1, …` of the given size.
    pub fn indexed(prefix: &str, n: usize) -> Self {
        Universe(Arc::new((0..n).map(|i| format!("{prefix}{i}")).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn name(&self, i: usize) -> &str {
        &self.0[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.index_of(name)
            .ok_or_else(|| Error::UnknownName(format!("`{name}` is not an element of the universe")))
    }
}

impl PartialEq for Universe {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Universe {}

impl fmt::Debug for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.0.iter()).finish()
    }
}

fn check_owned(lattice: &ResiduatedLattice, degrees: &[Degree]) -> Result<()> {
    if degrees.iter().all(|&d| lattice.owns(d)) {
        Ok(())
    } else {
        Err(Error::Ownership)
    }
}

/// An L-set `A ∈ L^X`.
#[derive(Clone, PartialEq, Eq)]
pub struct LSet {
    lattice: ResiduatedLattice,
    universe: Universe,
    membership: Vec<Degree>,
}

impl fmt::Debug for LSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display())
    }
}

impl LSet {
    pub fn new(lattice: &ResiduatedLattice, universe: &Universe, membership: Vec<Degree>) -> Result<Self> {
        if membership.len() != universe.len() {
            return Err(Error::UniverseMismatch(format!(
                "membership has {} entries for a universe of {}",
                membership.len(),
                universe.len()
            )));
        }
        check_owned(lattice, &membership)?;
        Ok(LSet {
            lattice: lattice.clone(),
            universe: universe.clone(),
            membership,
        })
    }

    pub(crate) fn from_parts(lattice: &ResiduatedLattice, universe: &Universe, membership: Vec<Degree>) -> Self {
        debug_assert_eq!(membership.len(), universe.len());
        LSet {
            lattice: lattice.clone(),
            universe: universe.clone(),
            membership,
        }
    }

    pub fn constant(lattice: &ResiduatedLattice, universe: &Universe, d: Degree) -> Result<Self> {
        lattice.check(d)?;
        Ok(Self::from_parts(lattice, universe, vec![d; universe.len()]))
    }

    /// The empty L-set `∅`.
    pub fn empty(lattice: &ResiduatedLattice, universe: &Universe) -> Self {
        Self::from_parts(lattice, universe, vec![lattice.bot(); universe.len()])
    }

    /// The L-set with all memberships equal to 1.
    pub fn full(lattice: &ResiduatedLattice, universe: &Universe) -> Self {
        Self::from_parts(lattice, universe, vec![lattice.top(); universe.len()])
    }

    /// The crisp singleton `{x}`.
    pub fn singleton(lattice: &ResiduatedLattice, universe: &Universe, x: usize) -> Self {
        let mut m = vec![lattice.bot(); universe.len()];
        m[x] = lattice.top();
        Self::from_parts(lattice, universe, m)
    }

    /// Build from `(element, degree)` pairs; unlisted elements get degree 0.
    pub fn from_pairs(lattice: &ResiduatedLattice, universe: &Universe, pairs: &[(usize, Degree)]) -> Result<Self> {
        let mut m = vec![lattice.bot(); universe.len()];
        for &(x, d) in pairs {
            if x >= universe.len() {
                return Err(Error::UniverseMismatch(format!("element {x} outside the universe")));
            }
            m[x] = lattice.check(d)?;
        }
        Ok(Self::from_parts(lattice, universe, m))
    }

    pub fn lattice(&self) -> &ResiduatedLattice {
        &self.lattice
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn membership(&self) -> &[Degree] {
        &self.membership
    }

    pub fn into_membership(self) -> Vec<Degree> {
        self.membership
    }

    pub fn get(&self, x: usize) -> Degree {
        self.membership[x]
    }

    pub fn is_crisp(&self) -> bool {
        self.membership
            .iter()
            .all(|&d| d == self.lattice.bot() || d == self.lattice.top())
    }

    fn same_space(&self, other: &LSet) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(Error::Ownership);
        }
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch("L-sets live in different universes".into()));
        }
        Ok(())
    }

    /// Graded subsethood `S(A, B) = ⋀ₓ A(x) → B(x)`.
    pub fn subsethood(&self, other: &LSet) -> Result<Degree> {
        self.same_space(other)?;
        Ok(subsethood(&self.lattice, &self.membership, &other.membership))
    }

    /// `A ⊆ B`, i.e. `A(x) ≤ B(x)` everywhere.
    pub fn is_subset(&self, other: &LSet) -> Result<bool> {
        self.same_space(other)?;
        Ok(is_subset(&self.lattice, &self.membership, &other.membership))
    }

    /// Similarity `S(A, B) ∧ S(B, A)`.
    pub fn similarity(&self, other: &LSet) -> Result<Degree> {
        self.same_space(other)?;
        Ok(similarity(&self.lattice, &self.membership, &other.membership))
    }

    pub fn intersection(&self, other: &LSet) -> Result<LSet> {
        self.same_space(other)?;
        let l = &self.lattice;
        let m = zip_with(&self.membership, &other.membership, |a, b| l.meet(a, b));
        Ok(Self::from_parts(l, &self.universe, m))
    }

    pub fn union(&self, other: &LSet) -> Result<LSet> {
        self.same_space(other)?;
        let l = &self.lattice;
        let m = zip_with(&self.membership, &other.membership, |a, b| l.join(a, b));
        Ok(Self::from_parts(l, &self.universe, m))
    }

    /// `A ∘ B = ⋁ₓ A(x) ⊗ B(x)`.
    pub fn compose_set(&self, other: &LSet) -> Result<Degree> {
        self.same_space(other)?;
        let l = &self.lattice;
        Ok(l.big_join(self.membership.iter().zip(&other.membership).map(|(&a, &b)| l.tensor(a, b))))
    }

    /// `(A ∘ R)(y) = ⋁ₓ A(x) ⊗ R(x, y)`.
    pub fn compose_relation(&self, r: &LRelation) -> Result<LSet> {
        if self.lattice != r.lattice {
            return Err(Error::Ownership);
        }
        if self.universe != r.source {
            return Err(Error::UniverseMismatch("set universe differs from relation source".into()));
        }
        let m = set_compose_rel(&self.lattice, &self.membership, &r.matrix, r.target.len());
        Ok(Self::from_parts(&self.lattice, &r.target, m))
    }

    /// The crisp a-cut `{x : a ≤ A(x)}` as sorted element indices.
    pub fn a_cut(&self, a: Degree) -> Result<Vec<usize>> {
        self.lattice.check(a)?;
        Ok((0..self.membership.len())
            .filter(|&x| self.lattice.leq(a, self.membership[x]))
            .collect())
    }

    /// `(a ⊗ A)(x) = a ⊗ A(x)`.
    pub fn scalar_tensor(&self, a: Degree) -> Result<LSet> {
        let l = &self.lattice;
        l.check(a)?;
        let m = self.membership.iter().map(|&x| l.tensor(a, x)).collect();
        Ok(Self::from_parts(l, &self.universe, m))
    }

    /// `(a → A)(x) = a → A(x)`.
    pub fn scalar_shift(&self, a: Degree) -> Result<LSet> {
        let l = &self.lattice;
        l.check(a)?;
        let m = self.membership.iter().map(|&x| l.residuum(a, x)).collect();
        Ok(Self::from_parts(l, &self.universe, m))
    }

    /// Zadeh image `f⁺(A)(y) = ⋁_{f(x)=y} A(x)` along `f: X → Y`.
    pub fn zadeh_image(&self, f: &[usize], target: &Universe) -> Result<LSet> {
        if f.len() != self.universe.len() {
            return Err(Error::Precondition(format!(
                "map is not total: {} values for {} elements",
                f.len(),
                self.universe.len()
            )));
        }
        if let Some(&y) = f.iter().find(|&&y| y >= target.len()) {
            return Err(Error::Precondition(format!("map value {y} outside the target universe")));
        }
        Ok(Self::from_parts(
            &self.lattice,
            target,
            zadeh_image(&self.lattice, &self.membership, f, target.len()),
        ))
    }

    /// First `(x, x′)` violating `A(x) ⊗ (x ∼ x′) ≤ A(x′)`, if any.
    pub fn compatibility_witness(&self, sim: &LRelation) -> Result<Option<CompatWitness>> {
        sim.require_square()?;
        if sim.source != self.universe || sim.lattice != self.lattice {
            return Err(Error::UniverseMismatch("relation is not on the set's universe".into()));
        }
        Ok(set_compat_witness(&self.lattice, &self.membership, &sim.matrix))
    }

    pub fn display(&self) -> String {
        let body: Vec<String> = self
            .membership
            .iter()
            .zip(self.universe.names())
            .map(|(&d, x)| format!("{}/{}", self.lattice.name(d), x))
            .collect();
        format!("{{{}}}", body.join(", "))
    }
}

/// A violation of a compatibility condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatWitness {
    /// `(x, x′)` for L-sets, `(x, x′, y, y′)` for relations.
    pub elements: Vec<usize>,
    /// Left-hand side of the violated inequality.
    pub lhs: Degree,
    /// Right-hand side of the violated inequality.
    pub rhs: Degree,
}

/// A binary L-relation `R ∈ L^{X×Y}`, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct LRelation {
    lattice: ResiduatedLattice,
    source: Universe,
    target: Universe,
    matrix: Vec<Degree>,
}

impl fmt::Debug for LRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<&str>> = (0..self.source.len())
            .map(|x| (0..self.target.len()).map(|y| self.lattice.name(self.get(x, y))).collect())
            .collect();
        f.debug_struct("LRelation").field("matrix", &rows).finish()
    }
}

impl LRelation {
    pub fn new(lattice: &ResiduatedLattice, source: &Universe, target: &Universe, matrix: Vec<Degree>) -> Result<Self> {
        if matrix.len() != source.len() * target.len() {
            return Err(Error::Format(format!(
                "relation matrix has {} entries, expected {}×{}",
                matrix.len(),
                source.len(),
                target.len()
            )));
        }
        check_owned(lattice, &matrix)?;
        Ok(LRelation {
            lattice: lattice.clone(),
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub(crate) fn from_parts(lattice: &ResiduatedLattice, source: &Universe, target: &Universe, matrix: Vec<Degree>) -> Self {
        debug_assert_eq!(matrix.len(), source.len() * target.len());
        LRelation {
            lattice: lattice.clone(),
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    /// Build a relation on `X × X` from a degree function.
    pub fn from_fn(lattice: &ResiduatedLattice, universe: &Universe, mut f: impl FnMut(usize, usize) -> Degree) -> Self {
        let n = universe.len();
        let matrix = (0..n * n).map(|k| f(k / n, k % n)).collect();
        Self::from_parts(lattice, universe, universe, matrix)
    }

    pub fn from_rows(lattice: &ResiduatedLattice, source: &Universe, target: &Universe, rows: Vec<Vec<Degree>>) -> Result<Self> {
        if rows.len() != source.len() || rows.iter().any(|r| r.len() != target.len()) {
            return Err(Error::Format("relation matrix is not total".into()));
        }
        Self::new(lattice, source, target, rows.into_iter().flatten().collect())
    }

    /// The crisp identity (diagonal) relation on `X`.
    pub fn identity(lattice: &ResiduatedLattice, universe: &Universe) -> Self {
        Self::from_fn(lattice, universe, |x, y| if x == y { lattice.top() } else { lattice.bot() })
    }

    /// The relation with every pair related in degree 1.
    pub fn total(lattice: &ResiduatedLattice, universe: &Universe) -> Self {
        Self::from_fn(lattice, universe, |_, _| lattice.top())
    }

    pub fn lattice(&self) -> &ResiduatedLattice {
        &self.lattice
    }

    pub fn source(&self) -> &Universe {
        &self.source
    }

    pub fn target(&self) -> &Universe {
        &self.target
    }

    pub fn matrix(&self) -> &[Degree] {
        &self.matrix
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Degree {
        self.matrix[x * self.target.len() + y]
    }

    pub fn is_square(&self) -> bool {
        self.source == self.target
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch("relation is not on a single universe".into()))
        }
    }

    fn same_shape(&self, other: &LRelation) -> Result<()> {
        if self.lattice != other.lattice {
            return Err(Error::Ownership);
        }
        if self.source != other.source || self.target != other.target {
            return Err(Error::UniverseMismatch("relations have different universes".into()));
        }
        Ok(())
    }

    /// The relation viewed as an L-set on `X × Y`, pairs named `(x,y)`.
    pub fn as_lset(&self) -> LSet {
        let names = self
            .source
            .names()
            .iter()
            .flat_map(|x| self.target.names().iter().map(move |y| format!("({x},{y})")));
        let u = Universe(Arc::new(names.collect()));
        LSet::from_parts(&self.lattice, &u, self.matrix.clone())
    }

    /// `(R ∘ T)(x, z) = ⋁_y R(x, y) ⊗ T(y, z)`.
    pub fn compose(&self, other: &LRelation) -> Result<LRelation> {
        if self.lattice != other.lattice {
            return Err(Error::Ownership);
        }
        if self.target != other.source {
            return Err(Error::UniverseMismatch("inner universes of the composition differ".into()));
        }
        let l = &self.lattice;
        let (nx, ny, nz) = (self.source.len(), self.target.len(), other.target.len());
        let mut m = Vec::with_capacity(nx * nz);
        for x in 0..nx {
            for z in 0..nz {
                m.push(l.big_join((0..ny).map(|y| l.tensor(self.get(x, y), other.get(y, z)))));
            }
        }
        Ok(Self::from_parts(l, &self.source, &other.target, m))
    }

    /// `(R ∘ B)(x) = ⋁_y R(x, y) ⊗ B(y)`.
    pub fn compose_set(&self, b: &LSet) -> Result<LSet> {
        if self.lattice != b.lattice {
            return Err(Error::Ownership);
        }
        if self.target != b.universe {
            return Err(Error::UniverseMismatch("set universe differs from relation target".into()));
        }
        let m = rel_compose_set(&self.lattice, &self.matrix, &b.membership);
        Ok(LSet::from_parts(&self.lattice, &self.source, m))
    }

    /// The inverse relation `R⁻¹(y, x) = R(x, y)`.
    pub fn inverse(&self) -> LRelation {
        let (nx, ny) = (self.source.len(), self.target.len());
        let m = (0..ny * nx).map(|k| self.get(k % nx, k / nx)).collect();
        Self::from_parts(&self.lattice, &self.target, &self.source, m)
    }

    pub fn intersection(&self, other: &LRelation) -> Result<LRelation> {
        self.same_shape(other)?;
        let l = &self.lattice;
        let m = zip_with(&self.matrix, &other.matrix, |a, b| l.meet(a, b));
        Ok(Self::from_parts(l, &self.source, &self.target, m))
    }

    /// The shift `(a → R)(x, y) = a → R(x, y)`.
    pub fn shift(&self, a: Degree) -> Result<LRelation> {
        let l = &self.lattice;
        l.check(a)?;
        let m = self.matrix.iter().map(|&r| l.residuum(a, r)).collect();
        Ok(Self::from_parts(l, &self.source, &self.target, m))
    }

    /// Subsethood of relations as L-sets on `X × Y`.
    pub fn subsethood(&self, other: &LRelation) -> Result<Degree> {
        self.same_shape(other)?;
        Ok(subsethood(&self.lattice, &self.matrix, &other.matrix))
    }

    /// Crisp `a`-cut as a boolean matrix.
    pub fn a_cut(&self, a: Degree) -> Result<Vec<bool>> {
        self.lattice.check(a)?;
        Ok(self.matrix.iter().map(|&r| self.lattice.leq(a, r)).collect())
    }

    /// Crisp properties with the first counterexample of each failure.
    pub fn properties(&self) -> Result<PropertyReport> {
        self.require_square()?;
        Ok(relation_properties(&self.lattice, &self.matrix, self.source.len()))
    }

    /// First `(x, x′, y, y′)` violating `R(x,y) ⊗ (x∼x′) ⊗ (y∼y′) ≤ R(x′,y′)`.
    pub fn compatibility_witness(&self, sim: &LRelation) -> Result<Option<CompatWitness>> {
        self.require_square()?;
        sim.require_square()?;
        if sim.source != self.source || sim.lattice != self.lattice {
            return Err(Error::UniverseMismatch("relation and equivalence live on different universes".into()));
        }
        Ok(rel_compat_witness(&self.lattice, &self.matrix, &sim.matrix, self.source.len()))
    }
}

/// Crisp properties of a square relation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub reflexive: bool,
    pub symmetric: bool,
    pub transitive: bool,
    pub tolerance: bool,
    pub equivalence: bool,
    pub equality: bool,
    /// `x` with `R(x, x) ≠ 1`.
    pub reflexive_witness: Option<usize>,
    /// `(x, y)` with `R(x, y) ≠ R(y, x)`.
    pub symmetric_witness: Option<(usize, usize)>,
    /// `(x, y, z)` with `R(x, y) ⊗ R(y, z) ≰ R(x, z)`.
    pub transitive_witness: Option<(usize, usize, usize)>,
    /// `(x, y)` with `x ≠ y` and `R(x, y) = 1`.
    pub separation_witness: Option<(usize, usize)>,
}

// ---------------------------------------------------------------------------
// Slice kernels. Callers guarantee matching lengths and lattice ownership.

pub(crate) fn zip_with(a: &[Degree], b: &[Degree], f: impl Fn(Degree, Degree) -> Degree) -> Vec<Degree> {
    a.iter().zip(b).map(|(&x, &y)| f(x, y)).collect()
}

pub(crate) fn subsethood(l: &ResiduatedLattice, a: &[Degree], b: &[Degree]) -> Degree {
    let mut acc = l.top();
    for (&x, &y) in a.iter().zip(b) {
        acc = l.meet(acc, l.residuum(x, y));
    }
    acc
}

pub(crate) fn is_subset(l: &ResiduatedLattice, a: &[Degree], b: &[Degree]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| l.leq(x, y))
}

pub(crate) fn similarity(l: &ResiduatedLattice, a: &[Degree], b: &[Degree]) -> Degree {
    let mut acc = l.top();
    for (&x, &y) in a.iter().zip(b) {
        acc = l.meet(acc, l.biresiduum(x, y));
    }
    acc
}

/// `(R ∘ B)(x)` for a relation with `|B|` columns.
pub(crate) fn rel_compose_set(l: &ResiduatedLattice, r: &[Degree], b: &[Degree]) -> Vec<Degree> {
    let ny = b.len();
    if ny == 0 {
        return Vec::new();
    }
    r.chunks(ny)
        .map(|row| {
            let mut acc = l.bot();
            for (&rxy, &by) in row.iter().zip(b) {
                acc = l.join(acc, l.tensor(rxy, by));
            }
            acc
        })
        .collect()
}

/// `(A ∘ R)(y)` for a relation with `ny` columns.
pub(crate) fn set_compose_rel(l: &ResiduatedLattice, a: &[Degree], r: &[Degree], ny: usize) -> Vec<Degree> {
    (0..ny)
        .map(|y| {
            let mut acc = l.bot();
            for (x, &ax) in a.iter().enumerate() {
                acc = l.join(acc, l.tensor(ax, r[x * ny + y]));
            }
            acc
        })
        .collect()
}

pub(crate) fn zadeh_image(l: &ResiduatedLattice, a: &[Degree], f: &[usize], ny: usize) -> Vec<Degree> {
    let mut out = vec![l.bot(); ny];
    for (x, &y) in f.iter().enumerate() {
        out[y] = l.join(out[y], a[x]);
    }
    out
}

pub(crate) fn set_compat_witness(l: &ResiduatedLattice, a: &[Degree], sim: &[Degree]) -> Option<CompatWitness> {
    let n = a.len();
    for x in 0..n {
        for x2 in 0..n {
            let lhs = l.tensor(a[x], sim[x * n + x2]);
            if !l.leq(lhs, a[x2]) {
                return Some(CompatWitness {
                    elements: vec![x, x2],
                    lhs,
                    rhs: a[x2],
                });
            }
        }
    }
    None
}

pub(crate) fn rel_compat_witness(l: &ResiduatedLattice, r: &[Degree], sim: &[Degree], n: usize) -> Option<CompatWitness> {
    for x in 0..n {
        for x2 in 0..n {
            let sx = sim[x * n + x2];
            for y in 0..n {
                let left = l.tensor(r[x * n + y], sx);
                if left == l.bot() {
                    continue;
                }
                for y2 in 0..n {
                    let lhs = l.tensor(left, sim[y * n + y2]);
                    let rhs = r[x2 * n + y2];
                    if !l.leq(lhs, rhs) {
                        return Some(CompatWitness {
                            elements: vec![x, x2, y, y2],
                            lhs,
                            rhs,
                        });
                    }
                }
            }
        }
    }
    None
}

pub(crate) fn relation_properties(l: &ResiduatedLattice, r: &[Degree], n: usize) -> PropertyReport {
    let at = |x: usize, y: usize| r[x * n + y];
    let reflexive_witness = (0..n).find(|&x| at(x, x) != l.top());
    let pairs = || (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)));
    let symmetric_witness = pairs().find(|&(x, y)| at(x, y) != at(y, x));
    let transitive_witness = pairs()
        .flat_map(|(x, y)| (0..n).map(move |z| (x, y, z)))
        .find(|&(x, y, z)| !l.leq(l.tensor(at(x, y), at(y, z)), at(x, z)));
    let separation_witness = pairs().find(|&(x, y)| x != y && at(x, y) == l.top());
    let reflexive = reflexive_witness.is_none();
    let symmetric = symmetric_witness.is_none();
    let transitive = transitive_witness.is_none();
    let tolerance = reflexive && symmetric;
    let equivalence = tolerance && transitive;
    PropertyReport {
        reflexive,
        symmetric,
        transitive,
        tolerance,
        equivalence,
        equality: equivalence && separation_witness.is_none(),
        reflexive_witness,
        symmetric_witness,
        transitive_witness,
        separation_witness,
    }
}

/// Number of L-sets `|L|^n`, saturating at `u128::MAX`.
pub fn lset_count(lattice: &ResiduatedLattice, n: usize) -> u128 {
    let base = lattice.len() as u128;
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Every membership vector of length `n`, in mixed-radix order with the
/// first element most significant.
pub fn all_memberships(lattice: &ResiduatedLattice, n: usize, budget: u64) -> Result<Vec<Vec<Degree>>> {
    let needed = lset_count(lattice, n);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let k = lattice.len();
    let degrees: Vec<Degree> = lattice.degrees().collect();
    let mut out = Vec::with_capacity(needed as usize);
    let mut digits = vec![0usize; n];
    loop {
        out.push(digits.iter().map(|&i| degrees[i]).collect());
        let mut pos = n;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < k {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Position of a membership vector in the [`all_memberships`] order.
pub fn membership_rank(lattice: &ResiduatedLattice, m: &[Degree]) -> usize {
    let k = lattice.len();
    m.iter().fold(0usize, |acc, d| acc * k + d.index())
}
