//! Finite-type Cartan matrices, Dynkin diagrams, root systems and Weyl-group
//! actions, all in exact arithmetic.
//!
//! Roots are integer coordinate vectors over the simple roots.  The bilinear
//! form is the symmetrized Cartan matrix normalized so long roots have
//! squared length 2 in each simple component; with the convention
//! `a[i][j] = ⟨α_i, α_j⟩ = 2(α_i,α_j)/(α_j,α_j)` the coroot pairing of a
//! vector with a simple root is a plain integer row-times-matrix product.
//! Node numbering is Bourbaki throughout (0-based in code, 1-based on the
//! CLI).

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{int, ratio, Scalar};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

/// The nine classical/exceptional families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A simple finite type, e.g. `E8` or `B3`.
///
/// Rank conventions avoid duplicate types: `A_n (n≥1)`, `B_n (n≥2)`,
/// `C_n (n≥3)`, `D_n (n≥4)`, `E6–E8`, `F4`, `G2`.  `B1`, `C2` and `D2/D3`
/// inputs are accepted by the recognizer but canonicalized away.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleType {
    pub family: Family,
    pub rank: usize,
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B => rank >= 2,
            Family::C => rank >= 3,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(Self { family, rank })
        } else {
            Err(Error::Domain(format!("invalid simple type {family}{rank}")))
        }
    }

    /// Bourbaki Cartan matrix, `a[i][j] = ⟨α_i, α_j⟩`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut a = vec![vec![0i64; n]; n];
        for (i, row) in a.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |a: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            a[i][j] = -1;
            a[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    chain(&mut a, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n - 1 {
                    chain(&mut a, i, i + 1);
                }
                a[n - 2][n - 1] = -2; // α_n short
            }
            Family::C => {
                for i in 0..n - 1 {
                    chain(&mut a, i, i + 1);
                }
                a[n - 1][n - 2] = -2; // α_n long
            }
            Family::D => {
                for i in 0..n - 2 {
                    chain(&mut a, i, i + 1);
                }
                chain(&mut a, n - 3, n - 1);
            }
            Family::E => {
                // Chain 1-3-4-5-..., branch node 2 attached to 4.
                chain(&mut a, 0, 2);
                for i in 2..n - 1 {
                    chain(&mut a, i, i + 1);
                }
                chain(&mut a, 1, 3);
            }
            Family::F => {
                chain(&mut a, 0, 1);
                chain(&mut a, 1, 2);
                chain(&mut a, 2, 3);
                a[1][2] = -2; // α_3, α_4 short
            }
            Family::G => {
                chain(&mut a, 0, 1);
                a[1][0] = -3; // α_1 short
            }
        }
        a
    }

    /// Symmetrizer entries `d_i = (α_i,α_i)/2`, long roots normalized to 1.
    pub fn symmetrizer<R: Scalar>(&self) -> Vec<R> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![R::one(); n],
            Family::B => {
                let mut d = vec![R::one(); n];
                d[n - 1] = ratio(1, 2);
                d
            }
            Family::C => {
                let mut d = vec![ratio(1, 2); n];
                d[n - 1] = R::one();
                d
            }
            Family::F => vec![R::one(), R::one(), ratio(1, 2), ratio(1, 2)],
            Family::G => vec![ratio(1, 3), R::one()],
        }
    }

    /// Coefficients of the highest root over the simple roots (the marks).
    pub fn marks(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A => vec![1; n],
            Family::B => {
                let mut m = vec![2; n];
                m[0] = 1;
                m
            }
            Family::C => {
                let mut m = vec![2; n];
                m[n - 1] = 1;
                m
            }
            Family::D => {
                let mut m = vec![2; n];
                m[0] = 1;
                m[n - 2] = 1;
                m[n - 1] = 1;
                m
            }
            Family::E => match n {
                6 => vec![1, 2, 2, 3, 2, 1],
                7 => vec![2, 2, 3, 4, 3, 2, 1],
                8 => vec![2, 3, 4, 6, 5, 4, 3, 2],
                _ => unreachable!(),
            },
            Family::F => vec![2, 3, 4, 2],
            Family::G => vec![3, 2],
        }
    }

    /// Number of roots, from the classical count.
    pub fn num_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::E => match n {
                6 => 72,
                7 => 126,
                8 => 240,
                _ => unreachable!(),
            },
            Family::F => 48,
            Family::G => 12,
        }
    }

    /// Dimension of the simple Lie algebra.
    pub fn dim(&self) -> usize {
        self.rank + self.num_roots()
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }
}

/// A (possibly reducible) Dynkin diagram: an ordered list of simple types.
///
/// The empty product is the rank-zero diagram of the trivial algebra; it
/// displays as `"1"`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DynkinDiagram {
    pub components: Vec<SimpleType>,
}

impl fmt::Display for DynkinDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl DynkinDiagram {
    pub fn simple(family: Family, rank: usize) -> Result<Self> {
        Ok(Self { components: vec![SimpleType::new(family, rank)?] })
    }

    pub fn empty() -> Self {
        Self { components: Vec::new() }
    }

    /// Parse `"E8"`, `"A1xA4"`, `"1"` (trivial), case-insensitive.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Ok(Self::empty());
        }
        let mut components = Vec::new();
        for part in s.split(['x', 'X']) {
            let part = part.trim();
            let mut chars = part.chars();
            let fam = match chars.next().map(|c| c.to_ascii_uppercase()) {
                Some('A') => Family::A,
                Some('B') => Family::B,
                Some('C') => Family::C,
                Some('D') => Family::D,
                Some('E') => Family::E,
                Some('F') => Family::F,
                Some('G') => Family::G,
                _ => return Err(Error::Domain(format!("cannot parse diagram component '{part}'"))),
            };
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::Domain(format!("cannot parse rank in '{part}'")))?;
            components.push(SimpleType::new(fam, rank)?);
        }
        Ok(Self { components })
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.rank).sum()
    }

    pub fn num_roots(&self) -> usize {
        self.components.iter().map(|c| c.num_roots()).sum()
    }

    pub fn dim(&self) -> usize {
        self.rank() + self.num_roots()
    }

    pub fn is_simply_laced(&self) -> bool {
        self.components.iter().all(|c| c.is_simply_laced())
    }

    /// Node range of component `c` in the concatenated numbering.
    pub fn component_range(&self, c: usize) -> std::ops::Range<usize> {
        let start: usize = self.components[..c].iter().map(|t| t.rank).sum();
        start..start + self.components[c].rank
    }

    /// Component index owning node `i`.
    pub fn component_of(&self, i: usize) -> Result<usize> {
        let mut off = 0;
        for (c, t) in self.components.iter().enumerate() {
            if i < off + t.rank {
                return Ok(c);
            }
            off += t.rank;
        }
        Err(Error::Index(format!("node {i} of {self}")))
    }

    /// Block-diagonal Cartan matrix in the concatenated numbering.
    pub fn cartan_matrix(&self) -> CartanMatrix {
        let n = self.rank();
        let mut a = vec![vec![0i64; n]; n];
        let mut off = 0;
        for t in &self.components {
            let block = t.cartan_matrix();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    a[off + i][off + j] = block[i][j];
                }
            }
            off += t.rank;
        }
        CartanMatrix { entries: a }
    }

    pub fn symmetrizer<R: Scalar>(&self) -> Vec<R> {
        self.components.iter().flat_map(|t| t.symmetrizer::<R>()).collect()
    }

    /// Components sorted alphabetically by family then ascending rank.
    pub fn sorted(&self) -> Self {
        let mut components = self.components.clone();
        components.sort();
        Self { components }
    }
}

/// Square integer matrix with the Cartan-matrix well-formedness invariants:
/// diagonal 2, off-diagonal entries in `{0,-1,-2,-3}` with a symmetric zero
/// pattern, symmetrizable by a positive diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    pub entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let m = Self { entries };
        m.check_well_formed()?;
        Ok(m)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn check_well_formed(&self) -> Result<()> {
        let n = self.size();
        for row in &self.entries {
            if row.len() != n {
                return Err(Error::Shape("Cartan matrix is not square".into()));
            }
        }
        for i in 0..n {
            if self.entries[i][i] != 2 {
                return Err(Error::Domain(format!("diagonal entry ({i},{i}) is not 2")));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                let e = self.entries[i][j];
                if !(-3..=0).contains(&e) {
                    return Err(Error::Domain(format!("off-diagonal entry ({i},{j}) = {e}")));
                }
                if (e == 0) != (self.entries[j][i] == 0) {
                    return Err(Error::Domain(format!("asymmetric zero pattern at ({i},{j})")));
                }
            }
        }
        self.symmetrizer_diag::<crate::Rat>()?;
        Ok(())
    }

    /// Positive diagonal `d` with `a[i][j]·d[j] = a[j][i]·d[i]`, found by
    /// propagation along edges; cycles must be consistent.
    pub fn symmetrizer_diag<R: Scalar>(&self) -> Result<Vec<R>> {
        let n = self.size();
        let mut d: Vec<Option<R>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(R::one());
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                let di = d[i].clone().unwrap();
                for j in 0..n {
                    if i == j || self.entries[i][j] == 0 {
                        continue;
                    }
                    // a[i][j] d[j] = a[j][i] d[i]
                    let expected = di.clone() * int::<R>(self.entries[j][i]) / int::<R>(self.entries[i][j]);
                    match &d[j] {
                        None => {
                            d[j] = Some(expected);
                            queue.push_back(j);
                        }
                        Some(existing) => {
                            if *existing != expected {
                                return Err(Error::Domain("matrix is not symmetrizable".into()));
                            }
                        }
                    }
                }
            }
        }
        Ok(d.into_iter().map(|x| x.unwrap()).collect())
    }

    /// Adjacency components of the underlying graph.
    pub fn graph_components(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for j in 0..n {
                    if !seen[j] && self.entries[i][j] != 0 {
                        seen[j] = true;
                        comp.push(j);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Principal submatrix on `nodes`.
    pub fn submatrix(&self, nodes: &[usize]) -> CartanMatrix {
        CartanMatrix {
            entries: nodes
                .iter()
                .map(|&i| nodes.iter().map(|&j| self.entries[i][j]).collect())
                .collect(),
        }
    }
}

/// True iff every principal minor of `m` is positive; for a well-formed
/// Cartan matrix this is exactly finite type.
pub fn principal_minors_positive(m: &CartanMatrix) -> bool {
    let n = m.size();
    // n ≤ 9 in every use here, so the 2^n - 1 subsets are cheap and leave no
    // permutation caveats.
    for mask in 1u32..(1 << n) {
        let nodes: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if linalg::det_int(&m.submatrix(&nodes).entries) <= 0 {
            return false;
        }
    }
    true
}

/// A root as an integer coordinate vector over the simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl Root {
    pub fn new(coords: Vec<i64>) -> Self {
        Self { coords }
    }

    pub fn height(&self) -> i64 {
        self.coords.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.coords.iter().all(|&c| c >= 0) && self.coords.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root::new(self.coords.iter().map(|&c| -c).collect())
    }
}

/// A vector in the fundamental-weight basis of a diagram; rational
/// coordinates in general, integral when it labels a finite-dimensional
/// irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector<R: Scalar> {
    pub coeffs: Vec<R>,
}

impl<R: Scalar> WeightVector<R> {
    pub fn new(coeffs: Vec<R>) -> Self {
        Self { coeffs }
    }

    pub fn from_ints(v: &[i64]) -> Self {
        Self { coeffs: v.iter().map(|&x| int(x)).collect() }
    }

    pub fn zero(rank: usize) -> Self {
        Self { coeffs: vec![R::zero(); rank] }
    }

    pub fn fundamental(rank: usize, node: usize) -> Self {
        let mut coeffs = vec![R::zero(); rank];
        coeffs[node] = R::one();
        Self { coeffs }
    }

    pub fn is_integral(&self) -> bool {
        self.as_ints().is_some()
    }

    pub fn as_ints(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| {
                for k in -512i64..=512 {
                    if *c == int::<R>(k) {
                        return Some(k);
                    }
                }
                None
            })
            .collect()
    }

    pub fn is_dominant(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

/// Either side of the operations that accept roots or weight vectors.
#[derive(Debug, Clone)]
pub enum Vector<R: Scalar> {
    Root(Root),
    Weight(WeightVector<R>),
}

/// A complete finite root system with its exact bilinear form.
#[derive(Debug, Clone)]
pub struct RootSystem<R: Scalar> {
    pub diagram: DynkinDiagram,
    pub cartan: CartanMatrix,
    /// All roots: positives sorted by (height, coords), then their negatives
    /// in the same order.
    pub roots: Vec<Root>,
    /// Positive-root count; `roots[i+num_positive] = -roots[i]` for `i < num_positive`.
    pub num_positive: usize,
    /// `d_i = (α_i, α_i)/2`, long roots normalized to 1 per component.
    pub symmetrizer: Vec<R>,
    /// Highest root of each simple component.
    pub highest_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
}

/// Enumerate all roots of a finite-type diagram by closing the simple roots
/// under the simple reflections.
pub fn build_root_system<R: Scalar>(diagram: &DynkinDiagram) -> Result<RootSystem<R>> {
    let cartan = diagram.cartan_matrix();
    if !principal_minors_positive(&cartan) {
        return Err(Error::NotFiniteType(diagram.to_string()));
    }
    let n = diagram.rank();
    let mut set: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut v = vec![0i64; n];
        v[i] = 1;
        set.insert(v.clone());
        queue.push_back(v);
        let mut w = vec![0i64; n];
        w[i] = -1;
        set.insert(w.clone());
        queue.push_back(w);
    }
    while let Some(v) = queue.pop_front() {
        for j in 0..n {
            let pairing: i64 = (0..n).map(|i| v[i] * cartan.entries[i][j]).sum();
            let mut w = v.clone();
            w[j] -= pairing;
            if set.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }

    let mut positive: Vec<Root> = set
        .iter()
        .map(|v| Root::new(v.clone()))
        .filter(|r| r.is_positive())
        .collect();
    positive.sort_by_key(|r| (r.height(), r.coords.clone()));
    if positive.len() * 2 != set.len() {
        return Err(Error::NotFiniteType(format!(
            "closure produced {} roots with {} positive",
            set.len(),
            positive.len()
        )));
    }
    let num_positive = positive.len();
    let mut roots = positive.clone();
    roots.extend(positive.iter().map(Root::negated));

    let mut index = HashMap::new();
    for (i, r) in roots.iter().enumerate() {
        index.insert(r.coords.clone(), i);
    }

    let mut highest_roots = Vec::new();
    for (c, _t) in diagram.components.iter().enumerate() {
        let range = diagram.component_range(c);
        let in_comp = |r: &Root| {
            r.coords.iter().enumerate().all(|(i, &x)| x == 0 || range.contains(&i))
        };
        let top = positive
            .iter()
            .filter(|r| in_comp(r))
            .max_by_key(|r| (r.height(), r.coords.clone()))
            .expect("component has roots")
            .clone();
        // Highest root dominates every root of its component coordinatewise.
        for r in positive.iter().filter(|r| in_comp(r)) {
            debug_assert!(top.coords.iter().zip(&r.coords).all(|(a, b)| a >= b));
        }
        highest_roots.push(top);
    }

    Ok(RootSystem {
        diagram: diagram.clone(),
        cartan,
        roots,
        num_positive,
        symmetrizer: diagram.symmetrizer(),
        highest_roots,
        index,
    })
}

impl<R: Scalar> RootSystem<R> {
    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        self.index.contains_key(coords)
    }

    pub fn root_index(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    /// Index of `-roots[i]`.
    pub fn neg_index(&self, i: usize) -> usize {
        if i < self.num_positive {
            i + self.num_positive
        } else {
            i - self.num_positive
        }
    }

    /// Highest root of the simple component containing `node` (or of the
    /// single component when the diagram is simple).
    pub fn highest_root(&self, component: usize) -> Result<&Root> {
        self.highest_roots
            .get(component)
            .ok_or_else(|| Error::Index(format!("component {component}")))
    }

    /// Coroot pairing `⟨v, α_j⟩ = 2(v, α_j)/(α_j, α_j)`: an integer for roots.
    pub fn pairing(&self, v: &Root, j: usize) -> i64 {
        (0..self.rank()).map(|i| v.coords[i] * self.cartan.entries[i][j]).sum()
    }

    /// Bilinear form on simple-root coordinate vectors.
    pub fn form_on_coords(&self, a: &[R], b: &[R]) -> R {
        let n = self.rank();
        let mut acc = R::zero();
        for i in 0..n {
            if a[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if self.cartan.entries[i][j] == 0 || b[j].is_zero() {
                    continue;
                }
                // (α_i, α_j) = a[i][j] · d_j
                let s = int::<R>(self.cartan.entries[i][j]) * self.symmetrizer[j].clone();
                acc = acc + a[i].clone() * b[j].clone() * s;
            }
        }
        acc
    }

    fn to_root_coords(&self, v: &Vector<R>) -> Result<Vec<R>> {
        match v {
            Vector::Root(r) => {
                if r.coords.len() != self.rank() {
                    return Err(Error::Shape(format!(
                        "root has {} coordinates, diagram rank is {}",
                        r.coords.len(),
                        self.rank()
                    )));
                }
                Ok(r.coords.iter().map(|&c| int(c)).collect())
            }
            Vector::Weight(w) => self.weight_to_root_coords(w),
        }
    }

    /// Symmetric bilinear form `(a, b)` for roots and/or weight vectors.
    pub fn inner_product(&self, a: &Vector<R>, b: &Vector<R>) -> Result<R> {
        let ca = self.to_root_coords(a)?;
        let cb = self.to_root_coords(b)?;
        Ok(self.form_on_coords(&ca, &cb))
    }

    /// `(α, β)` for two roots.
    pub fn ip_roots(&self, a: &Root, b: &Root) -> R {
        let ca: Vec<R> = a.coords.iter().map(|&c| int(c)).collect();
        let cb: Vec<R> = b.coords.iter().map(|&c| int(c)).collect();
        self.form_on_coords(&ca, &cb)
    }

    /// Squared length `(α, α)`.
    pub fn norm_sq(&self, a: &Root) -> R {
        self.ip_roots(a, a)
    }

    /// Rational simple-root coordinates of a fundamental-weight-basis vector:
    /// solve `Aᵀ c = w`.
    pub fn weight_to_root_coords(&self, w: &WeightVector<R>) -> Result<Vec<R>> {
        let n = self.rank();
        if w.coeffs.len() != n {
            return Err(Error::Shape(format!(
                "weight has {} coordinates, diagram rank is {}",
                w.coeffs.len(),
                n
            )));
        }
        let at: Vec<Vec<R>> = (0..n)
            .map(|i| (0..n).map(|j| int(self.cartan.entries[j][i])).collect())
            .collect();
        linalg::solve(&at, &w.coeffs)
    }

    /// Fundamental-weight coordinates of a rational simple-root vector:
    /// `w = cᵀ A`.
    pub fn root_coords_to_weight(&self, c: &[R]) -> Result<WeightVector<R>> {
        let n = self.rank();
        if c.len() != n {
            return Err(Error::Shape("coordinate length mismatch".into()));
        }
        let coeffs = (0..n)
            .map(|j| {
                (0..n).fold(R::zero(), |acc, i| {
                    acc + c[i].clone() * int::<R>(self.cartan.entries[i][j])
                })
            })
            .collect();
        Ok(WeightVector::new(coeffs))
    }

    /// Simple reflection `s_j` on a root.
    pub fn reflect_root(&self, r: &Root, j: usize) -> Root {
        let p = self.pairing(r, j);
        let mut coords = r.coords.clone();
        coords[j] -= p;
        Root::new(coords)
    }

    /// Simple reflection `s_j` on fundamental-weight coordinates:
    /// `s_j(λ)_i = λ_i − λ_j · a[j][i]`.
    pub fn reflect_weight(&self, w: &WeightVector<R>, j: usize) -> WeightVector<R> {
        let lj = w.coeffs[j].clone();
        let coeffs = w
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c.clone() - lj.clone() * int::<R>(self.cartan.entries[j][i]))
            .collect();
        WeightVector::new(coeffs)
    }

    /// Orbit of `v` under the subgroup of the Weyl group generated by the
    /// simple reflections indexed by `generators`.  Output is sorted.
    pub fn weyl_orbit(&self, v: &Vector<R>, generators: &[usize]) -> Result<Vec<Vector<R>>> {
        for &g in generators {
            if g >= self.rank() {
                return Err(Error::Index(format!("generator node {g}")));
            }
        }
        match v {
            Vector::Root(r) => {
                let orbit = self.weyl_orbit_roots(r, generators);
                Ok(orbit.into_iter().map(Vector::Root).collect())
            }
            Vector::Weight(w) => {
                let mut set: HashSet<WeightVector<R>> = HashSet::new();
                set.insert(w.clone());
                let mut queue = VecDeque::from([w.clone()]);
                while let Some(x) = queue.pop_front() {
                    for &j in generators {
                        let y = self.reflect_weight(&x, j);
                        if set.insert(y.clone()) {
                            queue.push_back(y);
                        }
                    }
                }
                let mut orbit: Vec<WeightVector<R>> = set.into_iter().collect();
                orbit.sort();
                Ok(orbit.into_iter().map(Vector::Weight).collect())
            }
        }
    }

    /// Root-typed Weyl orbit, sorted.
    pub fn weyl_orbit_roots(&self, r: &Root, generators: &[usize]) -> Vec<Root> {
        let mut set: HashSet<Root> = HashSet::new();
        set.insert(r.clone());
        let mut queue = VecDeque::from([r.clone()]);
        while let Some(x) = queue.pop_front() {
            for &j in generators {
                let y = self.reflect_root(&x, j);
                if set.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        let mut orbit: Vec<Root> = set.into_iter().collect();
        orbit.sort();
        orbit
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rat64;

    fn rs(name: &str) -> RootSystem<Rat64> {
        build_root_system(&DynkinDiagram::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn a1_has_two_roots() {
        let r = rs("A1");
        assert_eq!(r.roots.len(), 2);
        assert_eq!(r.num_positive, 1);
    }

    #[test]
    fn classical_root_counts_and_dims() {
        // Independent oracle: the classical dimension table.
        for (name, dim) in [
            ("A1", 3),
            ("A7", 63),
            ("B2", 10),
            ("B8", 136),
            ("C3", 21),
            ("D4", 28),
            ("D8", 120),
            ("E6", 78),
            ("E7", 133),
            ("E8", 248),
            ("F4", 52),
            ("G2", 14),
        ] {
            let r = rs(name);
            assert_eq!(r.roots.len() + r.rank(), dim, "{name}");
        }
    }

    #[test]
    fn e8_brute_force_closure_count() {
        assert_eq!(rs("E8").roots.len(), 240);
    }

    #[test]
    fn g2_highest_root() {
        let r = rs("G2");
        assert_eq!(r.roots.len(), 12);
        assert_eq!(r.highest_root(0).unwrap().coords, vec![3, 2]);
    }

    #[test]
    fn highest_root_marks_match_table() {
        for name in ["A5", "B4", "C5", "D6", "E6", "E7", "E8", "F4", "G2"] {
            let r = rs(name);
            assert_eq!(
                r.highest_root(0).unwrap().coords,
                r.diagram.components[0].marks(),
                "{name}"
            );
        }
    }

    #[test]
    fn positive_roots_have_nonnegative_coords() {
        let r = rs("F4");
        for i in 0..r.num_positive {
            assert!(r.roots[i].is_positive());
            assert_eq!(r.roots[r.neg_index(i)], r.roots[i].negated());
        }
    }

    #[test]
    fn a2_inner_products() {
        let r = rs("A2");
        let a1 = Root::new(vec![1, 0]);
        let a2 = Root::new(vec![0, 1]);
        assert_eq!(r.ip_roots(&a1, &a2), crate::scalar::int(-1));
        assert_eq!(r.norm_sq(&a1), crate::scalar::int(2));
        let theta = Root::new(vec![1, 1]);
        assert_eq!(r.norm_sq(&theta), crate::scalar::int(2));
    }

    #[test]
    fn g2_pairings_reproduce_cartan_entries() {
        let r = rs("G2");
        let a1 = Root::new(vec![1, 0]);
        let a2 = Root::new(vec![0, 1]);
        assert_eq!(r.pairing(&a1, 1), -1);
        assert_eq!(r.pairing(&a2, 0), -3);
    }

    #[test]
    fn weyl_invariance_of_form() {
        for name in ["A3", "B3", "G2"] {
            let r = rs(name);
            for j in 0..r.rank() {
                for a in &r.roots {
                    for b in &r.roots {
                        let sa = r.reflect_root(a, j);
                        let sb = r.reflect_root(b, j);
                        assert_eq!(r.ip_roots(&sa, &sb), r.ip_roots(a, b), "{name} s_{j}");
                    }
                }
            }
        }
    }

    #[test]
    fn a2_weyl_orbit_example() {
        let r = rs("A2");
        let orbit = r.weyl_orbit_roots(&Root::new(vec![1, 0]), &[1]);
        assert_eq!(orbit, vec![Root::new(vec![1, 0]), Root::new(vec![1, 1])]);
    }

    #[test]
    fn empty_generator_orbit_is_singleton() {
        let r = rs("A3");
        let orbit = r.weyl_orbit_roots(&Root::new(vec![0, 1, 0]), &[]);
        assert_eq!(orbit.len(), 1);
    }

    #[test]
    fn a3_orbit_of_alpha1_under_s2_s3() {
        let r = rs("A3");
        let orbit = r.weyl_orbit_roots(&Root::new(vec![1, 0, 0]), &[1, 2]);
        assert_eq!(
            orbit,
            vec![
                Root::new(vec![1, 0, 0]),
                Root::new(vec![1, 1, 0]),
                Root::new(vec![1, 1, 1])
            ]
        );
    }

    #[test]
    fn weight_vector_orbits_and_mixed_products() {
        let r = rs("A2");
        // Orbit of ω₁ under the full Weyl group: the three weights of C³.
        let w = WeightVector::<Rat64>::fundamental(2, 0);
        let orbit = r.weyl_orbit(&Vector::Weight(w.clone()), &[0, 1]).unwrap();
        assert_eq!(orbit.len(), 3);
        // (ω₁, α₁) = d₁ = 1 via the mixed inner product.
        let a1 = Root::new(vec![1, 0]);
        let ip = r
            .inner_product(&Vector::Weight(w), &Vector::Root(a1.clone()))
            .unwrap();
        assert_eq!(ip, crate::scalar::int(1));
        // Dimension mismatch is a shape error.
        let bad = WeightVector::<Rat64>::fundamental(3, 0);
        assert!(r.inner_product(&Vector::Weight(bad), &Vector::Root(a1)).is_err());
    }

    #[test]
    fn fundamental_weight_coords_a1_a2() {
        let r1 = rs("A1");
        let w = WeightVector::<Rat64>::fundamental(1, 0);
        assert_eq!(r1.weight_to_root_coords(&w).unwrap(), vec![crate::scalar::ratio(1, 2)]);

        let r2 = rs("A2");
        let w1 = WeightVector::<Rat64>::fundamental(2, 0);
        assert_eq!(
            r2.weight_to_root_coords(&w1).unwrap(),
            vec![crate::scalar::ratio(2, 3), crate::scalar::ratio(1, 3)]
        );
        // Round trip.
        let back = r2.root_coords_to_weight(&r2.weight_to_root_coords(&w1).unwrap()).unwrap();
        assert_eq!(back, w1);
    }

    #[test]
    fn product_diagram_roots() {
        let r = rs("A1xA4");
        assert_eq!(r.roots.len(), 2 + 20);
        assert_eq!(r.highest_roots.len(), 2);
        assert_eq!(r.highest_root(1).unwrap().coords, vec![0, 1, 1, 1, 1]);
    }

    #[test]
    fn non_finite_type_rejected() {
        // A 3-cycle of single bonds has determinant 0.
        let m = CartanMatrix::new(vec![vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]).unwrap();
        assert!(!principal_minors_positive(&m));
    }

    #[test]
    fn trivial_minor_cases() {
        let one = CartanMatrix::new(vec![vec![2]]).unwrap();
        assert!(principal_minors_positive(&one));
        let e8 = DynkinDiagram::parse("E8").unwrap().cartan_matrix();
        assert!(principal_minors_positive(&e8));
    }
}
