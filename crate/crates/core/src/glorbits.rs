//! Orbit structure of `(GL₂ × SL_{2m+1}, C² ⊗ Λ²C^{2m+1})`: the map to
//! degree-`m` binary forms through Pfaffian pencils, its covariance, the
//! block construction from point configurations on `P¹`, the `U₁/U₂`
//! dichotomy, and exact tangent-space orbit dimensions.
//!
//! A pair of antisymmetric matrices `(M₁, M₂)` stands for
//! `(1,0)⊗ω₁ + (0,1)⊗ω₂`; on even size `2m` the pencil Pfaffian
//! `m!·Pf(λM₁ + μM₂)` equals the coefficient of the top form in
//! `(λω₁ + μω₂)^m`, which is also computed independently by brute-force
//! exterior-algebra expansion as a cross-check.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rng::SplitMix64;
use crate::scalar::{int, to_frac_string, BigConvert, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::HashMap;

/// A pencil of two antisymmetric `n×n` matrices, `n = 2m` or `2m+1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFormPair<R: Scalar> {
    pub m: usize,
    pub n: usize,
    pub m1: Vec<Vec<R>>,
    pub m2: Vec<Vec<R>>,
}

impl<R: Scalar> TwoFormPair<R> {
    pub fn new(m: usize, n: usize, m1: Vec<Vec<R>>, m2: Vec<Vec<R>>) -> Result<Self> {
        if m == 0 || (n != 2 * m && n != 2 * m + 1) {
            return Err(Error::Shape(format!("pair of degree {m} cannot have size {n}")));
        }
        for (name, mat) in [("ω₁", &m1), ("ω₂", &m2)] {
            if mat.len() != n || mat.iter().any(|row| row.len() != n) {
                return Err(Error::Shape(format!("{name} is not {n}×{n}")));
            }
            for i in 0..n {
                for j in 0..n {
                    if mat[i][j].clone() + mat[j][i].clone() != R::zero() {
                        return Err(Error::Shape(format!("{name} is not antisymmetric")));
                    }
                }
            }
        }
        Ok(Self { m, n, m1, m2 })
    }

    /// Zero pair of the even size `2m`.
    pub fn zero_even(m: usize) -> Self {
        let n = 2 * m;
        Self { m, n, m1: vec![vec![R::zero(); n]; n], m2: vec![vec![R::zero(); n]; n] }
    }

    /// Embed an even pair into the odd space one dimension up.
    pub fn pad_to_odd(&self) -> Result<TwoFormPair<R>> {
        if self.n != 2 * self.m {
            return Err(Error::Shape("pair is already odd-sized".into()));
        }
        let n = self.n + 1;
        let pad = |mat: &Vec<Vec<R>>| {
            let mut out = vec![vec![R::zero(); n]; n];
            for i in 0..self.n {
                for j in 0..self.n {
                    out[i][j] = mat[i][j].clone();
                }
            }
            out
        };
        TwoFormPair::new(self.m, n, pad(&self.m1), pad(&self.m2))
    }

    pub fn to_json(&self) -> Value {
        let ser = |mat: &Vec<Vec<R>>| {
            Value::from(
                mat.iter()
                    .map(|row| {
                        Value::from(row.iter().map(|x| Value::from(to_frac_string(x))).collect::<Vec<_>>())
                    })
                    .collect::<Vec<_>>(),
            )
        };
        json!({ "m": self.m, "n": self.n, "omega1": ser(&self.m1), "omega2": ser(&self.m2) })
    }
}

/// A homogeneous binary form `Σ c_k λ^{d-k} μ^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm<R: Scalar> {
    pub coeffs: Vec<R>,
}

impl<R: Scalar> BinaryForm<R> {
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn to_json(&self) -> Value {
        Value::from(self.coeffs.iter().map(|c| Value::from(to_frac_string(c))).collect::<Vec<_>>())
    }
}

fn poly_mul<R: Scalar>(a: &[R], b: &[R]) -> Vec<R> {
    let mut out = vec![R::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

fn poly_add_assign<R: Scalar>(a: &mut [R], b: &[R], scale: &R) {
    for (x, y) in a.iter_mut().zip(b) {
        *x = x.clone() + y.clone() * scale.clone();
    }
}

/// `m!·Pf(λM₁ + μM₂)` as a degree-`m` binary form.
///
/// The Pfaffian is expanded recursively along the first remaining row with
/// memoization over index subsets; entries are linear forms in `(λ, μ)`.
pub fn phi<R: Scalar>(pair: &TwoFormPair<R>) -> Result<BinaryForm<R>> {
    if pair.n != 2 * pair.m {
        return Err(Error::Shape(format!(
            "phi needs an even pair, got n = {} for m = {}",
            pair.n, pair.m
        )));
    }
    let n = pair.n;
    let full: u32 = (1 << n) - 1;
    let mut memo: HashMap<u32, Vec<R>> = HashMap::new();
    let f = pf_pencil(pair, full, &mut memo);
    let mut factorial = R::one();
    for k in 2..=pair.m as i64 {
        factorial = factorial * int::<R>(k);
    }
    Ok(BinaryForm { coeffs: f.iter().map(|c| c.clone() * factorial.clone()).collect() })
}

fn pf_pencil<R: Scalar>(
    pair: &TwoFormPair<R>,
    subset: u32,
    memo: &mut HashMap<u32, Vec<R>>,
) -> Vec<R> {
    let k = subset.count_ones() as usize;
    if k == 0 {
        return vec![R::one()];
    }
    if let Some(v) = memo.get(&subset) {
        return v.clone();
    }
    let members: Vec<usize> = (0..pair.n).filter(|&i| subset & (1 << i) != 0).collect();
    let first = members[0];
    let mut acc = vec![R::zero(); k / 2 + 1];
    for (t, &j) in members.iter().enumerate().skip(1) {
        let entry = [pair.m1[first][j].clone(), pair.m2[first][j].clone()];
        if entry[0].is_zero() && entry[1].is_zero() {
            continue;
        }
        let rest = subset & !(1 << first) & !(1 << j);
        let sub = pf_pencil(pair, rest, memo);
        let term = poly_mul(&entry, &sub);
        let sign = if t % 2 == 1 { R::one() } else { -R::one() };
        poly_add_assign(&mut acc, &term, &sign);
    }
    memo.insert(subset, acc.clone());
    acc
}

/// Independent oracle for [`phi`]: expand `(λω₁ + μω₂)^m` in the exterior
/// algebra and read off the coefficient of `e¹∧⋯∧e^{2m}`.
pub fn wedge_power_form<R: Scalar>(pair: &TwoFormPair<R>) -> Result<BinaryForm<R>> {
    if pair.n != 2 * pair.m {
        return Err(Error::Shape("wedge oracle needs an even pair".into()));
    }
    let n = pair.n;
    // A (λ,μ)-polynomial with exterior-form coefficients: degree index ->
    // (bitmask -> scalar).
    type Form<R> = HashMap<u32, R>;
    let two_form = |mat: &Vec<Vec<R>>| -> Form<R> {
        let mut f = HashMap::new();
        for i in 0..n {
            for j in i + 1..n {
                if !mat[i][j].is_zero() {
                    f.insert((1u32 << i) | (1 << j), mat[i][j].clone());
                }
            }
        }
        f
    };
    let wedge = |a: &Form<R>, b: &Form<R>| -> Form<R> {
        let mut out: Form<R> = HashMap::new();
        for (&sa, ca) in a {
            for (&sb, cb) in b {
                if sa & sb != 0 {
                    continue;
                }
                // Sign: inversions between the two sorted index sets.
                let mut inversions = 0u32;
                for t in 0..n {
                    if sb & (1 << t) != 0 {
                        inversions += (sa >> (t + 1)).count_ones();
                    }
                }
                let sign = if inversions % 2 == 0 { R::one() } else { -R::one() };
                let entry = out.entry(sa | sb).or_insert_with(R::zero);
                *entry = entry.clone() + ca.clone() * cb.clone() * sign;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    };

    // Polynomial of forms: index k holds the coefficient of λ^{deg-k} μ^k.
    let mut poly: Vec<Form<R>> = vec![two_form(&pair.m1), two_form(&pair.m2)];
    for _ in 1..pair.m {
        let mut next: Vec<Form<R>> = vec![HashMap::new(); poly.len() + 1];
        for (k, f) in poly.iter().enumerate() {
            for (off, g) in [two_form(&pair.m1), two_form(&pair.m2)].iter().enumerate() {
                let prod = wedge(f, g);
                for (s, c) in prod {
                    let entry = next[k + off].entry(s).or_insert_with(R::zero);
                    *entry = entry.clone() + c;
                }
            }
        }
        poly = next;
    }
    let top: u32 = (1 << n) - 1;
    Ok(BinaryForm {
        coeffs: poly
            .iter()
            .map(|f| f.get(&top).cloned().unwrap_or_else(R::zero))
            .collect(),
    })
}

/// Apply `(A, g) ∈ GL₂ × SL_n` to the pair: `ω₁' = a·gω₁gᵀ + b·gω₂gᵀ`,
/// `ω₂' = c·gω₁gᵀ + d·gω₂gᵀ` for `A = [[a,b],[c,d]]`.
pub fn act<R: Scalar>(
    pair: &TwoFormPair<R>,
    a: &[Vec<R>],
    g: &[Vec<R>],
) -> Result<TwoFormPair<R>> {
    let n = pair.n;
    if a.len() != 2 || a.iter().any(|r| r.len() != 2) {
        return Err(Error::Shape("A must be 2×2".into()));
    }
    if g.len() != n || g.iter().any(|r| r.len() != n) {
        return Err(Error::Shape(format!("g must be {n}×{n}")));
    }
    let conj = |mat: &Vec<Vec<R>>| -> Vec<Vec<R>> {
        // g · M · gᵀ
        let mut gm = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            for k in 0..n {
                if g[i][k].is_zero() {
                    continue;
                }
                for j in 0..n {
                    gm[i][j] = gm[i][j].clone() + g[i][k].clone() * mat[k][j].clone();
                }
            }
        }
        let mut out = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if gm[i][k].is_zero() || g[j][k].is_zero() {
                        continue;
                    }
                    out[i][j] = out[i][j].clone() + gm[i][k].clone() * g[j][k].clone();
                }
            }
        }
        out
    };
    let g1 = conj(&pair.m1);
    let g2 = conj(&pair.m2);
    let comb = |p: &R, q: &R| -> Vec<Vec<R>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| p.clone() * g1[i][j].clone() + q.clone() * g2[i][j].clone())
                    .collect()
            })
            .collect()
    };
    TwoFormPair::new(pair.m, n, comb(&a[0][0], &a[0][1]), comb(&a[1][0], &a[1][1]))
}

/// Substitute `(λ, μ) ← (λ, μ)·A` into a binary form.
pub fn substitute<R: Scalar>(f: &BinaryForm<R>, a: &[Vec<R>]) -> BinaryForm<R> {
    let d = f.degree();
    // λ ← a·λ + c·μ, μ ← b·λ + d·μ.
    let lam = [a[0][0].clone(), a[1][0].clone()];
    let mu = [a[0][1].clone(), a[1][1].clone()];
    let mut out = vec![R::zero(); d + 1];
    for (k, c) in f.coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mut term = vec![R::one()];
        for _ in 0..d - k {
            term = poly_mul(&term, &lam);
        }
        for _ in 0..k {
            term = poly_mul(&term, &mu);
        }
        poly_add_assign(&mut out, &term, c);
    }
    BinaryForm { coeffs: out }
}

/// Verify `f_{A·(gω₁, gω₂)}(λ, μ) = f_{(ω₁,ω₂)}((λ,μ)A)` exactly.
pub fn covariance_check<R: Scalar>(
    pair: &TwoFormPair<R>,
    a: &[Vec<R>],
    g: &[Vec<R>],
) -> Result<bool> {
    if pair.n != 2 * pair.m {
        return Err(Error::Shape("covariance needs an even pair".into()));
    }
    let det_g = linalg::det(&g.to_vec());
    if det_g != R::one() {
        return Err(Error::Domain(format!("g must be unimodular, det = {det_g}")));
    }
    let lhs = phi(&act(pair, a, g)?)?;
    let rhs = substitute(&phi(pair)?, a);
    Ok(lhs == rhs)
}

/// A configuration of points on `P¹` with rational representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig<R: Scalar> {
    pub points: Vec<(R, R)>,
}

impl<R: Scalar> PointConfig<R> {
    pub fn new(points: Vec<(R, R)>) -> Result<Self> {
        if points.iter().any(|(l, m)| l.is_zero() && m.is_zero()) {
            return Err(Error::Domain("projective point (0:0) is not allowed".into()));
        }
        Ok(Self { points })
    }

    /// Canonical form: `(t, 1)` for finite points, `(1, 0)` for infinity,
    /// sorted as a multiset.
    pub fn canonical(&self) -> PointConfig<R> {
        let mut pts: Vec<(R, R)> = self
            .points
            .iter()
            .map(|(l, m)| {
                if m.is_zero() {
                    (R::one(), R::zero())
                } else {
                    (l.clone() / m.clone(), R::one())
                }
            })
            .collect();
        pts.sort_by(|a, b| (b.1.clone(), a.0.clone()).cmp(&(a.1.clone(), b.0.clone())));
        PointConfig { points: pts }
    }

    pub fn to_json(&self) -> Value {
        Value::from(
            self.points
                .iter()
                .map(|(l, m)| Value::from(vec![to_frac_string(l), to_frac_string(m)]))
                .collect::<Vec<_>>(),
        )
    }
}

/// Cross-ratio of four points, `(d₁₃·d₂₄)/(d₁₄·d₂₃)` with
/// `d_ij = λ_iμ_j − λ_jμ_i`.
pub fn cross_ratio<R: Scalar>(pts: &[(R, R)]) -> Result<R> {
    if pts.len() != 4 {
        return Err(Error::Shape("cross-ratio takes four points".into()));
    }
    let d = |i: usize, j: usize| {
        pts[i].0.clone() * pts[j].1.clone() - pts[j].0.clone() * pts[i].1.clone()
    };
    let den = d(0, 3) * d(1, 2);
    if den.is_zero() {
        return Err(Error::Domain("cross-ratio is degenerate".into()));
    }
    Ok(d(0, 2) * d(1, 3) / den)
}

/// The block-diagonal pair with `ω₁ = Σ μ_i e^{2i-1}∧e^{2i}` and
/// `ω₂ = -Σ λ_i e^{2i-1}∧e^{2i}`, so that `phi = m!·Π(μ_iλ - λ_iμ)`.
pub fn construct_from_points<R: Scalar>(pts: &PointConfig<R>) -> Result<TwoFormPair<R>> {
    let m = pts.points.len();
    if m == 0 {
        return Err(Error::Domain("at least one point is required".into()));
    }
    if pts.points.iter().any(|(l, mu)| l.is_zero() && mu.is_zero()) {
        return Err(Error::Domain("projective point (0:0) is not allowed".into()));
    }
    let n = 2 * m;
    let mut m1 = vec![vec![R::zero(); n]; n];
    let mut m2 = vec![vec![R::zero(); n]; n];
    for (i, (lam, mu)) in pts.points.iter().enumerate() {
        m1[2 * i][2 * i + 1] = mu.clone();
        m1[2 * i + 1][2 * i] = -mu.clone();
        m2[2 * i][2 * i + 1] = -lam.clone();
        m2[2 * i + 1][2 * i] = lam.clone();
    }
    TwoFormPair::new(m, n, m1, m2)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairClass {
    U1,
    U2,
}

impl std::fmt::Display for PairClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PairClass::U1 => write!(f, "U1"),
            PairClass::U2 => write!(f, "U2"),
        }
    }
}

/// `U1` iff both forms fit inside a common `2m`-dimensional subspace, i.e.
/// the stacked column space of `[M₁ | M₂]` has rank at most `2m`.
pub fn classify_u1_u2<R: Scalar>(pair: &TwoFormPair<R>) -> Result<PairClass> {
    if pair.n != 2 * pair.m + 1 {
        return Err(Error::Shape(format!(
            "classification needs an odd pair, got n = {}",
            pair.n
        )));
    }
    let rows: Vec<Vec<R>> = (0..pair.n)
        .map(|i| {
            let mut row = pair.m1[i].clone();
            row.extend(pair.m2[i].iter().cloned());
            row
        })
        .collect();
    if linalg::rank(&rows) <= 2 * pair.m {
        Ok(PairClass::U1)
    } else {
        Ok(PairClass::U2)
    }
}

/// Rank of the tangent map of `gl₂ ⊕ sl_{2m+1}` at the pair; the pair is
/// generic exactly when this reaches `2m(2m+1) = dim C²⊗Λ²C^{2m+1}`.
pub fn orbit_dim_gl2sl<R: Scalar + BigConvert>(pair: &TwoFormPair<R>) -> Result<usize> {
    let n = pair.n;
    if n != 2 * pair.m + 1 {
        return Err(Error::Shape(format!("orbit dimension needs an odd pair, got n = {n}")));
    }
    // Target coordinates: strict upper triangles of both matrices.
    let coords: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let pack = |d1: &Vec<Vec<R>>, d2: &Vec<Vec<R>>| -> Vec<R> {
        coords
            .iter()
            .map(|&(i, j)| d1[i][j].clone())
            .chain(coords.iter().map(|&(i, j)| d2[i][j].clone()))
            .collect()
    };
    let zm = |z: &Vec<Vec<R>>, mat: &Vec<Vec<R>>| -> Vec<Vec<R>> {
        // Z·M + M·Zᵀ
        let mut out = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = R::zero();
                for k in 0..n {
                    acc = acc
                        + z[i][k].clone() * mat[k][j].clone()
                        + mat[i][k].clone() * z[j][k].clone();
                }
                out[i][j] = acc;
            }
        }
        out
    };

    let zero = vec![vec![R::zero(); n]; n];
    let mut columns: Vec<Vec<R>> = Vec::new();
    // gl₂ directions: (ω₁,0), (ω₂,0), (0,ω₁), (0,ω₂).
    columns.push(pack(&pair.m1, &zero));
    columns.push(pack(&pair.m2, &zero));
    columns.push(pack(&zero, &pair.m1));
    columns.push(pack(&zero, &pair.m2));
    // sl_n directions: off-diagonal units and diagonal differences.
    for p in 0..n {
        for q in 0..n {
            if p == q {
                continue;
            }
            let mut z = vec![vec![R::zero(); n]; n];
            z[p][q] = R::one();
            columns.push(pack(&zm(&z, &pair.m1), &zm(&z, &pair.m2)));
        }
    }
    for i in 0..n - 1 {
        let mut z = vec![vec![R::zero(); n]; n];
        z[i][i] = R::one();
        z[i + 1][i + 1] = -R::one();
        columns.push(pack(&zm(&z, &pair.m1), &zm(&z, &pair.m2)));
    }

    // Rank of the column family = rank of the transposed row matrix.
    let rows: Vec<Vec<R>> = (0..columns.len()).map(|c| columns[c].clone()).collect();
    Ok(linalg::rank_rational_rows(&rows, |x: &R| x.to_frac()))
}

/// Recover the point configuration of a rationally-split nonzero form: the
/// multiset of projective roots of `phi(pair)`.
pub fn point_config_invariant<R: Scalar + BigConvert>(
    pair: &TwoFormPair<R>,
) -> Result<PointConfig<R>> {
    let f = phi(pair)?;
    if f.is_zero() {
        return Err(Error::Degenerate);
    }
    let m = f.degree();
    let mut points: Vec<(R, R)> = Vec::new();

    // Multiplicity of (1:0): leading λ-coefficients that vanish.
    let k0 = f.coeffs.iter().position(|c| !c.is_zero()).unwrap();
    for _ in 0..k0 {
        points.push((R::one(), R::zero()));
    }
    // Dehomogenize to p(t) = f(t, 1) of degree m - k0 and extract rational
    // roots with multiplicity.
    let mut poly: Vec<R> = (k0..=m).map(|k| f.coeffs[k].clone()).collect(); // descending powers
    while poly.len() > 1 {
        // Trailing zero coefficients are roots at t = 0.
        if poly.last().unwrap().is_zero() {
            points.push((R::zero(), R::one()));
            poly.pop();
            continue;
        }
        let Some(root) = find_rational_root(&poly)? else {
            return Err(Error::NotSplit);
        };
        poly = deflate(&poly, &root);
        points.push((root, R::one()));
    }
    Ok(PointConfig { points }.canonical())
}

/// Search `p(t) = 0` for a rational root via the rational root theorem on
/// the denominator-cleared coefficients.  Divisor enumeration is by trial
/// division with a fixed budget; forms whose cleared coefficients exceed it
/// are reported `NotSplit`.
fn find_rational_root<R: Scalar + BigConvert>(poly: &[R]) -> Result<Option<R>> {
    let fracs: Vec<(BigInt, BigInt)> = poly.iter().map(|c| c.to_frac()).collect();
    let mut lcm = BigInt::one();
    for (_, d) in &fracs {
        lcm = lcm.lcm(d);
    }
    let ints: Vec<BigInt> = fracs.iter().map(|(n, d)| n * (&lcm / d)).collect();
    let lead = ints.first().unwrap().abs();
    let trail = ints.last().unwrap().abs();
    debug_assert!(!trail.is_zero());

    let eval = |t: &R| -> R {
        poly.iter().fold(R::zero(), |acc, c| acc * t.clone() + c.clone())
    };
    for p in divisors(&trail)? {
        for q in divisors(&lead)? {
            for sign in [1i64, -1] {
                let cand: R = int::<R>(sign * p) / int::<R>(q);
                if eval(&cand).is_zero() {
                    return Ok(Some(cand));
                }
            }
        }
    }
    Ok(None)
}

const DIVISOR_BUDGET: i64 = 1_000_000;

fn divisors(x: &BigInt) -> Result<Vec<i64>> {
    use num_traits::ToPrimitive;
    let Some(v) = x.abs().to_i64() else {
        return Err(Error::NotSplit);
    };
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if d > DIVISOR_BUDGET {
            return Err(Error::NotSplit);
        }
        if v % d == 0 {
            out.push(d);
            out.push(v / d);
        }
        d += 1;
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Divide `p(t)` by `(t - root)` exactly; the root must be exact.
fn deflate<R: Scalar>(poly: &[R], root: &R) -> Vec<R> {
    let mut out = Vec::with_capacity(poly.len() - 1);
    let mut carry = R::zero();
    for c in &poly[..poly.len() - 1] {
        carry = carry * root.clone() + c.clone();
        out.push(carry.clone());
    }
    out
}

/// Seeded random antisymmetric pair with entries in `[-bound, bound]`.
pub fn random_pair<R: Scalar>(
    m: usize,
    n: usize,
    bound: i64,
    rng: &mut SplitMix64,
) -> Result<TwoFormPair<R>> {
    let mut mk = || {
        let mut mat = vec![vec![R::zero(); n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let v = int::<R>(rng.range_i64(-bound, bound));
                mat[i][j] = v.clone();
                mat[j][i] = -v;
            }
        }
        mat
    };
    let m1 = mk();
    let m2 = mk();
    TwoFormPair::new(m, n, m1, m2)
}

/// Seeded random `SL_n` matrix: a product of elementary shears.
pub fn random_sl<R: Scalar>(n: usize, steps: usize, rng: &mut SplitMix64) -> Vec<Vec<R>> {
    let mut g: Vec<Vec<R>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { R::one() } else { R::zero() }).collect()).collect();
    for _ in 0..steps {
        let i = rng.below(n as u64) as usize;
        let mut j = rng.below(n as u64) as usize;
        if i == j {
            j = (j + 1) % n;
        }
        let t: R = int(rng.range_i64(-3, 3));
        // g ← E_{ij}(t) · g
        for col in 0..n {
            let add = t.clone() * g[j][col].clone();
            g[i][col] = g[i][col].clone() + add;
        }
    }
    g
}

/// Seeded random invertible 2×2 matrix.
pub fn random_gl2<R: Scalar>(rng: &mut SplitMix64) -> Vec<Vec<R>> {
    loop {
        let a: Vec<Vec<R>> = (0..2)
            .map(|_| (0..2).map(|_| int::<R>(rng.range_i64(-4, 4))).collect())
            .collect();
        let det = a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone();
        if !det.is_zero() {
            return a;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;
    use crate::Rat64;

    type Pair = TwoFormPair<Rat64>;

    fn block_pair(m: usize, blocks1: &[(usize, usize, i64)], blocks2: &[(usize, usize, i64)]) -> Pair {
        let n = 2 * m;
        let mut m1 = vec![vec![Rat64::from_integer(0); n]; n];
        let mut m2 = m1.clone();
        for &(i, j, v) in blocks1 {
            m1[i][j] = int(v);
            m1[j][i] = int(-v);
        }
        for &(i, j, v) in blocks2 {
            m2[i][j] = int(v);
            m2[j][i] = int(-v);
        }
        TwoFormPair::new(m, n, m1, m2).unwrap()
    }

    #[test]
    fn phi_single_wedge() {
        // m = 1, ω₁ = e¹∧e², ω₂ = 0: f = λ.
        let p = block_pair(1, &[(0, 1, 1)], &[]);
        assert_eq!(phi(&p).unwrap().coeffs, vec![int::<Rat64>(1), int(0)]);
    }

    #[test]
    fn phi_matches_derived_examples() {
        // ω₁ = e¹∧e² + e³∧e⁴, ω₂ = e¹∧e² − e³∧e⁴: f = 2(λ² − μ²).
        let p = block_pair(2, &[(0, 1, 1), (2, 3, 1)], &[(0, 1, 1), (2, 3, -1)]);
        assert_eq!(phi(&p).unwrap().coeffs, vec![int::<Rat64>(2), int(0), int(-2)]);
        // ω₂ = 0, ω₁ standard symplectic: f = 2λ².
        let p = block_pair(2, &[(0, 1, 1), (2, 3, 1)], &[]);
        assert_eq!(phi(&p).unwrap().coeffs, vec![int::<Rat64>(2), int(0), int(0)]);
    }

    #[test]
    fn phi_agrees_with_wedge_oracle() {
        let mut rng = SplitMix64::new(7);
        for m in 1..=3 {
            for _ in 0..30 {
                let p: Pair = random_pair(m, 2 * m, 5, &mut rng).unwrap();
                assert_eq!(phi(&p).unwrap(), wedge_power_form(&p).unwrap(), "m = {m}");
            }
        }
    }

    #[test]
    fn covariance_identity_seeded() {
        let mut rng = SplitMix64::new(11);
        for m in 1..=3 {
            for _ in 0..10 {
                let p: Pair = random_pair(m, 2 * m, 4, &mut rng).unwrap();
                let a = random_gl2::<Rat64>(&mut rng);
                let g = random_sl::<Rat64>(2 * m, 12, &mut rng);
                assert!(covariance_check(&p, &a, &g).unwrap(), "m = {m}");
            }
        }
    }

    #[test]
    fn covariance_rejects_non_unimodular() {
        let p = block_pair(1, &[(0, 1, 1)], &[]);
        let a = vec![vec![int::<Rat64>(1), int(0)], vec![int(0), int(1)]];
        let g = vec![vec![int::<Rat64>(2), int(0)], vec![int(0), int(1)]];
        assert!(matches!(covariance_check(&p, &a, &g), Err(Error::Domain(_))));
    }

    #[test]
    fn construct_from_points_examples() {
        // pts {(1:0),(0:1)}: phi = 2!·(−λμ) = −2λμ.
        let pts = PointConfig::new(vec![
            (int::<Rat64>(1), int(0)),
            (int(0), int(1)),
        ])
        .unwrap();
        let pair = construct_from_points(&pts).unwrap();
        assert_eq!(phi(&pair).unwrap().coeffs, vec![int::<Rat64>(0), int(-2), int(0)]);
        // Single point (0:1): phi = λ.
        let pts = PointConfig::new(vec![(int::<Rat64>(0), int(1))]).unwrap();
        let pair = construct_from_points(&pts).unwrap();
        assert_eq!(phi(&pair).unwrap().coeffs, vec![int::<Rat64>(1), int(0)]);
        // m copies of (0:1): phi = m!·λ^m.
        let pts = PointConfig::new(vec![(int::<Rat64>(0), int(1)); 3]).unwrap();
        let pair = construct_from_points(&pts).unwrap();
        assert_eq!(
            phi(&pair).unwrap().coeffs,
            vec![int::<Rat64>(6), int(0), int(0), int(0)]
        );
    }

    #[test]
    fn point_config_round_trip() {
        let pts = PointConfig::new(vec![
            (ratio::<Rat64>(1, 2), int(1)),
            (int(3), int(1)),
            (int(1), int(0)),
            (int(-2), int(3)),
        ])
        .unwrap();
        let pair = construct_from_points(&pts).unwrap();
        let rec = point_config_invariant(&pair).unwrap();
        assert_eq!(rec, pts.canonical());
    }

    #[test]
    fn double_root_and_degenerate() {
        // phi = λ²·const: double root (0:1)... f = c·λ² has roots (0:1)²
        let pts = PointConfig::new(vec![(int::<Rat64>(0), int(1)); 2]).unwrap();
        let pair = construct_from_points(&pts).unwrap();
        let rec = point_config_invariant(&pair).unwrap();
        assert_eq!(rec.points, vec![(int::<Rat64>(0), int(1)), (int(0), int(1))]);
        // Zero pair: Degenerate.
        let zero: Pair = TwoFormPair::zero_even(2);
        assert!(matches!(point_config_invariant(&zero), Err(Error::Degenerate)));
    }

    #[test]
    fn irrational_roots_not_split() {
        // ω₁ = e¹∧e² + e³∧e⁴, ω₂ = e¹∧e³ − e²∧e⁴: f = 2(λ² + μ²),
        // irreducible over the rationals.
        let p = block_pair(2, &[(0, 1, 1), (2, 3, 1)], &[(0, 2, 1), (1, 3, -1)]);
        assert_eq!(
            phi(&p).unwrap().coeffs,
            vec![int::<Rat64>(2), int(0), int(2)]
        );
        assert!(matches!(point_config_invariant(&p), Err(Error::NotSplit)));
    }

    #[test]
    fn u1_u2_classification() {
        // M2 = 0, M1 on the first 2m coordinates: U1.
        let mut m1 = vec![vec![int::<Rat64>(0); 3]; 3];
        m1[0][1] = int(1);
        m1[1][0] = int(-1);
        let m2 = vec![vec![int::<Rat64>(0); 3]; 3];
        let p = TwoFormPair::new(1, 3, m1, m2).unwrap();
        assert_eq!(classify_u1_u2(&p).unwrap(), PairClass::U1);

        // ω₁ = e¹∧e², ω₂ = e¹∧e³: combined span is 3-dimensional: U2.
        let mut m1 = vec![vec![int::<Rat64>(0); 3]; 3];
        m1[0][1] = int(1);
        m1[1][0] = int(-1);
        let mut m2 = vec![vec![int::<Rat64>(0); 3]; 3];
        m2[0][2] = int(1);
        m2[2][0] = int(-1);
        let p = TwoFormPair::new(1, 3, m1, m2).unwrap();
        assert_eq!(classify_u1_u2(&p).unwrap(), PairClass::U2);
    }

    #[test]
    fn classification_is_action_invariant() {
        let mut rng = SplitMix64::new(23);
        for _ in 0..10 {
            let p: TwoFormPair<Rat64> = random_pair(2, 5, 3, &mut rng).unwrap();
            let class = classify_u1_u2(&p).unwrap();
            for _ in 0..5 {
                let a = random_gl2::<Rat64>(&mut rng);
                let g = random_sl::<Rat64>(5, 10, &mut rng);
                let q = act(&p, &a, &g).unwrap();
                assert_eq!(classify_u1_u2(&q).unwrap(), class);
            }
        }
    }

    #[test]
    fn orbit_dims() {
        // Zero pair: 0.
        let zero: TwoFormPair<Rat64> =
            TwoFormPair::new(1, 3, vec![vec![int(0); 3]; 3], vec![vec![int(0); 3]; 3]).unwrap();
        assert_eq!(orbit_dim_gl2sl(&zero).unwrap(), 0);
        // m = 1: a seeded random pair reaches 6 = dim C²⊗Λ²C³.
        let mut rng = SplitMix64::new(31);
        let p: TwoFormPair<Rat64> = random_pair(1, 3, 5, &mut rng).unwrap();
        assert_eq!(orbit_dim_gl2sl(&p).unwrap(), 6);
    }

    #[test]
    fn full_rank_witness_m4_is_u2_and_open() {
        // ω₁: symplectic on coordinates 1..8; ω₂: blocks shifted by one,
        // covering coordinate 9.
        let n = 9;
        let mut m1 = vec![vec![int::<Rat64>(0); n]; n];
        let mut m2 = vec![vec![int::<Rat64>(0); n]; n];
        for i in 0..4 {
            m1[2 * i][2 * i + 1] = int(1);
            m1[2 * i + 1][2 * i] = int(-1);
            m2[2 * i + 1][2 * i + 2] = int(1);
            m2[2 * i + 2][2 * i + 1] = int(-1);
        }
        let p = TwoFormPair::new(4, n, m1, m2).unwrap();
        assert_eq!(classify_u1_u2(&p).unwrap(), PairClass::U2);
        assert_eq!(orbit_dim_gl2sl(&p).unwrap(), 72);
    }

    #[test]
    fn cross_ratio_separates_configs() {
        let mk = |x: i64| {
            PointConfig::new(vec![
                (int::<Rat64>(0), int(1)),
                (int(1), int(0)),
                (int(1), int(1)),
                (int(x), int(1)),
            ])
            .unwrap()
        };
        let c1 = cross_ratio(&mk(2).points).unwrap();
        let c2 = cross_ratio(&mk(3).points).unwrap();
        assert_ne!(c1, c2);

        let p1 = construct_from_points(&mk(2)).unwrap().pad_to_odd().unwrap();
        let p2 = construct_from_points(&mk(3)).unwrap().pad_to_odd().unwrap();
        let d1 = orbit_dim_gl2sl(&p1).unwrap();
        let d2 = orbit_dim_gl2sl(&p2).unwrap();
        assert_eq!(d1, d2);
        assert!(d1 < 72);
        let i1 = point_config_invariant(&construct_from_points(&mk(2)).unwrap()).unwrap();
        let i2 = point_config_invariant(&construct_from_points(&mk(3)).unwrap()).unwrap();
        assert_ne!(i1, i2);
    }

    #[test]
    fn antisymmetry_enforced() {
        let bad = TwoFormPair::new(
            1,
            2,
            vec![vec![int::<Rat64>(0), int(1)], vec![int(1), int(0)]],
            vec![vec![int(0); 2]; 2],
        );
        assert!(matches!(bad, Err(Error::Shape(_))));
    }
}
