//! Complete residuated lattices on finite carriers.
//!
//! A lattice is stored as four dense operation tables over element indices.
//! Degrees are indices tagged with the identity of their lattice, so every
//! operation is an exact table lookup.

use std::collections::hash_map::DefaultHasher;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// Largest carrier accepted by the builders.
pub const MAX_ELEMENTS: usize = u16::MAX as usize;

/// A truth degree: an element of one particular [`ResiduatedLattice`].
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Degree {
    lattice: u32,
    index: u16,
}

impl Degree {
    /// Position of the degree in its lattice's element list.
    pub fn index(self) -> usize {
        self.index as usize
    }
}

/// The t-norm families with built-in chain constructors.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum ChainKind {
    Lukasiewicz,
    Godel,
    /// Only the two-element instance is finitely representable.
    Goguen,
}

impl ChainKind {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lukasiewicz" | "łukasiewicz" | "luk" => Ok(ChainKind::Lukasiewicz),
            "godel" | "gödel" | "goedel" => Ok(ChainKind::Godel),
            "goguen" | "product" => Ok(ChainKind::Goguen),
            other => Err(Error::Format(format!("unknown chain kind `{other}`"))),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ChainKind::Lukasiewicz => "lukasiewicz",
            ChainKind::Godel => "godel",
            ChainKind::Goguen => "goguen",
        }
    }
}

/// Binary operations of a residuated lattice.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Meet,
    Join,
    Tensor,
    Residuum,
    Biresiduum,
}

/// Raw operation tables, indexed by element position. Used as input to
/// [`ResiduatedLattice::from_tables`] and by [`verify_axioms`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeTables {
    pub elements: Vec<String>,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub tensor: Vec<Vec<usize>>,
    pub residuum: Vec<Vec<usize>>,
    pub bot: usize,
    pub top: usize,
}

struct Tables {
    id: u32,
    names: Vec<String>,
    n: usize,
    meet: Vec<u16>,
    join: Vec<u16>,
    tensor: Vec<u16>,
    residuum: Vec<u16>,
    leq: Vec<bool>,
    bot: u16,
    top: u16,
    chain: Option<(ChainKind, usize)>,
}

/// A complete residuated lattice `⟨L, ∧, ∨, ⊗, →, 0, 1⟩` on a finite carrier.
///
/// Cloning is cheap; clones share their tables. Two lattices built from
/// identical tables compare equal and accept each other's degrees.
#[derive(Clone)]
pub struct ResiduatedLattice(Arc<Tables>);

impl PartialEq for ResiduatedLattice {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.id == other.0.id
                && self.0.names == other.0.names
                && self.0.tensor == other.0.tensor
                && self.0.residuum == other.0.residuum
                && self.0.meet == other.0.meet)
    }
}

impl Eq for ResiduatedLattice {}

impl fmt::Debug for ResiduatedLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ResiduatedLattice")
            .field("elements", &self.0.names)
            .finish_non_exhaustive()
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Name of the chain degree `i/m` as a reduced rational.
fn rational_name(i: usize, m: usize) -> String {
    if i == 0 {
        "0".to_string()
    } else if i == m {
        "1".to_string()
    } else {
        let g = gcd(i, m);
        format!("{}/{}", i / g, m / g)
    }
}

impl ResiduatedLattice {
    /// The chain `0 < 1/(n-1) < … < 1` with Łukasiewicz or Gödel connectives.
    pub fn chain(kind: ChainKind, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize(format!("a chain needs at least 2 elements, got {n}")));
        }
        if n > MAX_ELEMENTS {
            return Err(Error::InvalidSize(format!("chain of {n} elements is too large")));
        }
        if kind == ChainKind::Goguen && n > 2 {
            return Err(Error::InvalidSize(format!(
                "the product t-norm is not closed on a {n}-element grid (b/a leaves the grid); \
                 supply explicit closed tables instead"
            )));
        }
        let m = n - 1;
        let mut meet = vec![0u16; n * n];
        let mut join = vec![0u16; n * n];
        let mut tensor = vec![0u16; n * n];
        let mut residuum = vec![0u16; n * n];
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                meet[k] = i.min(j) as u16;
                join[k] = i.max(j) as u16;
                let (t, r) = match kind {
                    ChainKind::Lukasiewicz => ((i + j).saturating_sub(m), (m - i + j).min(m)),
                    // On {0, 1} the product and Gödel connectives coincide.
                    ChainKind::Godel | ChainKind::Goguen => {
                        (i.min(j), if i <= j { m } else { j })
                    }
                };
                tensor[k] = t as u16;
                residuum[k] = r as u16;
            }
        }
        let names = (0..n).map(|i| rational_name(i, m)).collect();
        Ok(Self::assemble(names, meet, join, tensor, residuum, 0, m as u16, Some((kind, n))))
    }

    /// The two-element Boolean algebra with classical connectives.
    pub fn boolean() -> Self {
        Self::chain(ChainKind::Lukasiewicz, 2).expect("two-element chain is valid")
    }

    /// Build a lattice from explicit tables. The tables are accepted only if
    /// every residuated-lattice axiom holds.
    pub fn from_tables(tables: &LatticeTables) -> Result<Self> {
        let report = verify_axioms(tables)?;
        if !report.passed() {
            return Err(Error::Axioms(report));
        }
        let flat = |t: &Vec<Vec<usize>>| -> Vec<u16> {
            t.iter().flat_map(|row| row.iter().map(|&x| x as u16)).collect()
        };
        Ok(Self::assemble(
            tables.elements.clone(),
            flat(&tables.meet),
            flat(&tables.join),
            flat(&tables.tensor),
            flat(&tables.residuum),
            tables.bot as u16,
            tables.top as u16,
            None,
        ))
    }

    #[allow(clippy::too_many_arguments)]
    fn assemble(
        names: Vec<String>,
        meet: Vec<u16>,
        join: Vec<u16>,
        tensor: Vec<u16>,
        residuum: Vec<u16>,
        bot: u16,
        top: u16,
        chain: Option<(ChainKind, usize)>,
    ) -> Self {
        let n = names.len();
        let mut hasher = DefaultHasher::new();
        names.hash(&mut hasher);
        meet.hash(&mut hasher);
        join.hash(&mut hasher);
        tensor.hash(&mut hasher);
        residuum.hash(&mut hasher);
        (bot, top).hash(&mut hasher);
        let id = hasher.finish() as u32;
        let leq = (0..n * n).map(|k| meet[k] as usize == k / n).collect();
        ResiduatedLattice(Arc::new(Tables {
            id,
            names,
            n,
            meet,
            join,
            tensor,
            residuum,
            leq,
            bot,
            top,
            chain,
        }))
    }

    /// Number of truth degrees.
    pub fn len(&self) -> usize {
        self.0.n
    }

    pub fn is_empty(&self) -> bool {
        self.0.n == 0
    }

    /// `Some((kind, n))` when built by [`ResiduatedLattice::chain`].
    pub fn chain_kind(&self) -> Option<(ChainKind, usize)> {
        self.0.chain
    }

    pub fn element_names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, d: Degree) -> &str {
        self.assert_owned(d);
        &self.0.names[d.index()]
    }

    /// The degree at position `index`, if any.
    pub fn degree(&self, index: usize) -> Option<Degree> {
        (index < self.0.n).then(|| Degree {
            lattice: self.0.id,
            index: index as u16,
        })
    }

    fn at(&self, index: u16) -> Degree {
        Degree {
            lattice: self.0.id,
            index,
        }
    }

    pub fn degree_by_name(&self, name: &str) -> Result<Degree> {
        self.0
            .names
            .iter()
            .position(|n| n == name)
            .map(|i| self.at(i as u16))
            .ok_or_else(|| Error::UnknownName(format!("degree `{name}` is not an element of the lattice")))
    }

    /// All degrees in element-list order.
    pub fn degrees(&self) -> impl ExactSizeIterator<Item = Degree> + '_ {
        (0..self.0.n).map(|i| self.at(i as u16))
    }

    pub fn bot(&self) -> Degree {
        self.at(self.0.bot)
    }

    pub fn top(&self) -> Degree {
        self.at(self.0.top)
    }

    pub fn owns(&self, d: Degree) -> bool {
        d.lattice == self.0.id && d.index() < self.0.n
    }

    /// Ok if `d` belongs to this lattice.
    pub fn check(&self, d: Degree) -> Result<Degree> {
        if self.owns(d) {
            Ok(d)
        } else {
            Err(Error::Ownership)
        }
    }

    #[inline]
    fn assert_owned(&self, d: Degree) {
        assert!(self.owns(d), "degree {d:?} does not belong to this lattice");
    }

    #[inline]
    fn lookup(&self, table: &[u16], a: Degree, b: Degree) -> Degree {
        self.assert_owned(a);
        self.assert_owned(b);
        self.at(table[a.index() * self.0.n + b.index()])
    }

    #[inline]
    pub fn meet(&self, a: Degree, b: Degree) -> Degree {
        self.lookup(&self.0.meet, a, b)
    }

    #[inline]
    pub fn join(&self, a: Degree, b: Degree) -> Degree {
        self.lookup(&self.0.join, a, b)
    }

    #[inline]
    pub fn tensor(&self, a: Degree, b: Degree) -> Degree {
        self.lookup(&self.0.tensor, a, b)
    }

    /// The residuum `a → b`.
    #[inline]
    pub fn residuum(&self, a: Degree, b: Degree) -> Degree {
        self.lookup(&self.0.residuum, a, b)
    }

    /// `(a → b) ∧ (b → a)`.
    #[inline]
    pub fn biresiduum(&self, a: Degree, b: Degree) -> Degree {
        self.meet(self.residuum(a, b), self.residuum(b, a))
    }

    /// The lattice order: `a ≤ b` iff `a ∧ b = a`.
    #[inline]
    pub fn leq(&self, a: Degree, b: Degree) -> bool {
        self.assert_owned(a);
        self.assert_owned(b);
        self.0.leq[a.index() * self.0.n + b.index()]
    }

    pub fn is_top(&self, a: Degree) -> bool {
        a == self.top()
    }

    /// Infimum of a family; the empty infimum is the top element.
    pub fn big_meet<I: IntoIterator<Item = Degree>>(&self, degrees: I) -> Degree {
        degrees.into_iter().fold(self.top(), |acc, d| self.meet(acc, d))
    }

    /// Supremum of a family; the empty supremum is the bottom element.
    pub fn big_join<I: IntoIterator<Item = Degree>>(&self, degrees: I) -> Degree {
        degrees.into_iter().fold(self.bot(), |acc, d| self.join(acc, d))
    }

    /// Ownership-checked form of the binary operations.
    pub fn try_apply(&self, op: Op, a: Degree, b: Degree) -> Result<Degree> {
        self.check(a)?;
        self.check(b)?;
        Ok(match op {
            Op::Meet => self.meet(a, b),
            Op::Join => self.join(a, b),
            Op::Tensor => self.tensor(a, b),
            Op::Residuum => self.residuum(a, b),
            Op::Biresiduum => self.biresiduum(a, b),
        })
    }

    pub fn try_leq(&self, a: Degree, b: Degree) -> Result<bool> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.leq(a, b))
    }

    pub fn try_big_meet<I: IntoIterator<Item = Degree>>(&self, degrees: I) -> Result<Degree> {
        let mut acc = self.top();
        for d in degrees {
            acc = self.meet(acc, self.check(d)?);
        }
        Ok(acc)
    }

    pub fn try_big_join<I: IntoIterator<Item = Degree>>(&self, degrees: I) -> Result<Degree> {
        let mut acc = self.bot();
        for d in degrees {
            acc = self.join(acc, self.check(d)?);
        }
        Ok(acc)
    }

    /// Number of degrees `≤ d`. Used to rank discrepancies on any lattice.
    pub fn height(&self, d: Degree) -> usize {
        self.degrees().filter(|&x| self.leq(x, d)).count()
    }

    /// Export the tables in index form.
    pub fn tables(&self) -> LatticeTables {
        let n = self.0.n;
        let rows = |t: &[u16]| -> Vec<Vec<usize>> {
            (0..n)
                .map(|i| (0..n).map(|j| t[i * n + j] as usize).collect())
                .collect()
        };
        LatticeTables {
            elements: self.0.names.clone(),
            meet: rows(&self.0.meet),
            join: rows(&self.0.join),
            tensor: rows(&self.0.tensor),
            residuum: rows(&self.0.residuum),
            bot: self.0.bot as usize,
            top: self.0.top as usize,
        }
    }

    /// Re-run the full axiom scan on this lattice's tables.
    pub fn verify_axioms(&self) -> Report {
        verify_axioms(&self.tables()).expect("stored tables are well formed")
    }
}

fn check_square(name: &str, t: &[Vec<usize>], n: usize) -> Result<()> {
    if t.len() != n || t.iter().any(|row| row.len() != n) {
        return Err(Error::Format(format!("{name} table is not {n}×{n}")));
    }
    if t.iter().flatten().any(|&x| x >= n) {
        return Err(Error::Format(format!("{name} table references an element outside the carrier")));
    }
    Ok(())
}

/// Exhaustively check the lattice, monoid and adjointness axioms.
///
/// Returns a format error if a table is not total over the carrier; axiom
/// violations are reported as failed checks carrying the first witness in
/// lexicographic index order.
pub fn verify_axioms(t: &LatticeTables) -> Result<Report> {
    let n = t.elements.len();
    if n == 0 {
        return Err(Error::Format("carrier is empty".into()));
    }
    if n > MAX_ELEMENTS {
        return Err(Error::Format(format!("carrier of {n} elements is too large")));
    }
    for (name, table) in [
        ("meet", &t.meet),
        ("join", &t.join),
        ("tensor", &t.tensor),
        ("impl", &t.residuum),
    ] {
        check_square(name, table, n)?;
    }
    if t.bot >= n || t.top >= n {
        return Err(Error::Format("bot/top outside the carrier".into()));
    }
    let mut seen = std::collections::HashSet::new();
    for e in &t.elements {
        if !seen.insert(e) {
            return Err(Error::Format(format!("duplicate element name `{e}`")));
        }
    }

    let name = |i: usize| t.elements[i].as_str();
    let (m, j, x, r) = (&t.meet, &t.join, &t.tensor, &t.residuum);
    let leq = |a: usize, b: usize| m[a][b] == a;
    let w2 = |a, b| format!("({}, {})", name(a), name(b));
    let w3 = |a, b, c| format!("({}, {}, {})", name(a), name(b), name(c));

    let mut report = Report::new();
    let all = || (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)));
    let triples = || all().flat_map(move |(a, b)| (0..n).map(move |c| (a, b, c)));

    for (id, op, label) in [("meet-lattice", m, "∧"), ("join-lattice", j, "∨")] {
        let mut c = Check::new(
            format!("{id}-commutative"),
            format!("a {label} b = b {label} a"),
        );
        for (a, b) in all() {
            c.record(op[a][b] == op[b][a], || w2(a, b));
        }
        report.push(c);
        let mut c = Check::new(
            format!("{id}-associative"),
            format!("(a {label} b) {label} c = a {label} (b {label} c)"),
        );
        for (a, b, cc) in triples() {
            c.record(op[op[a][b]][cc] == op[a][op[b][cc]], || w3(a, b, cc));
        }
        report.push(c);
        let mut c = Check::new(format!("{id}-idempotent"), format!("a {label} a = a"));
        for a in 0..n {
            c.record(op[a][a] == a, || name(a).to_string());
        }
        report.push(c);
    }

    let mut c = Check::new("absorption", "a ∧ (a ∨ b) = a and a ∨ (a ∧ b) = a");
    for (a, b) in all() {
        c.record(m[a][j[a][b]] == a && j[a][m[a][b]] == a, || w2(a, b));
    }
    report.push(c);

    let mut c = Check::new("bounds", "bot ≤ a ≤ top");
    for a in 0..n {
        c.record(leq(t.bot, a) && leq(a, t.top), || name(a).to_string());
    }
    report.push(c);

    let mut c = Check::new("tensor-commutative", "a ⊗ b = b ⊗ a");
    for (a, b) in all() {
        c.record(x[a][b] == x[b][a], || w2(a, b));
    }
    report.push(c);

    let mut c = Check::new("tensor-associative", "(a ⊗ b) ⊗ c = a ⊗ (b ⊗ c)");
    for (a, b, cc) in triples() {
        c.record(x[x[a][b]][cc] == x[a][x[b][cc]], || w3(a, b, cc));
    }
    report.push(c);

    let mut c = Check::new("tensor-unit", "a ⊗ 1 = a");
    for a in 0..n {
        c.record(x[a][t.top] == a && x[t.top][a] == a, || name(a).to_string());
    }
    report.push(c);

    let mut c = Check::new("adjointness", "a ⊗ b ≤ c iff a ≤ b → c");
    for (a, b, cc) in triples() {
        c.record(leq(x[a][b], cc) == leq(a, r[b][cc]), || w3(a, b, cc));
    }
    report.push(c);

    Ok(report)
}
