//! Levi data of a marked diagram and the graded pieces as representations:
//! restricted weights, highest weights, weight multiplicity freeness,
//! dimensions via the Weyl formula, and connecting multiplicities.
//!
//! Simple ideals of `g₀^ss` are ordered alphabetically by family, then by
//! ascending rank, then by descending connecting multiplicity; remaining
//! ties break on the smallest ambient node.  Within each ideal the Bourbaki
//! labeling is normalized so the restricted weight of `-α₀` is
//! lexicographically largest over the diagram automorphisms, which pins a
//! unique presentation for every graded piece.
//!
//! For reference, the irreducible weight multiplicity free representations
//! of the simple types are: `A_ℓ`: all fundamentals `Λ^m` and the symmetric
//! powers `S^m`, `S^m`-dual; `B_ℓ`: standard and spin; `C_ℓ`: standard, plus
//! the last fundamental for `ℓ = 2, 3`; `D_ℓ`: standard and both half-spins;
//! `E6`: the two 27-dimensional representations; `E7`: the 56-dimensional
//! one; `G2`: the 7-dimensional one; none for `E8`, `F4`.  Each graded piece
//! computed here is verified multiplicity free directly; this list is not
//! consulted by any algorithm.

use crate::error::{Error, Result};
use crate::gradation::Gradation;
use crate::recognize::{automorphisms, identify_cartan_type};
use crate::rootsys::{build_root_system, CartanMatrix, DynkinDiagram, Root, RootSystem, SimpleType};
use crate::scalar::Scalar;
use serde_json::{json, Value};
use std::cmp::Reverse;

/// One simple ideal of `g₀^ss`.
#[derive(Debug, Clone)]
pub struct LeviComponent {
    pub kind: SimpleType,
    /// Ambient node sitting at each Bourbaki position of this component.
    pub nodes: Vec<usize>,
    /// Connecting multiplicity `a = max_{α in component} -⟨α, α₀⟩`.
    pub nu: i64,
}

/// The Levi factor `g₀ = gl₁ ⊕ g₀^ss` of a marked diagram.  The
/// one-dimensional center is implicit; components describe `g₀^ss`.
#[derive(Debug, Clone)]
pub struct LeviData {
    pub ambient: DynkinDiagram,
    pub ambient_cartan: CartanMatrix,
    /// The marked node α₀ (0-based, ambient numbering).
    pub node: usize,
    pub components: Vec<LeviComponent>,
    /// Diagram of `g₀^ss` in component order.
    pub diagram0: DynkinDiagram,
}

/// Connecting multiplicities, one per simple ideal in Levi order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectingMultiplicities(pub Vec<i64>);

/// Delete the marked node and organize what remains.
pub fn levi(diagram: &DynkinDiagram, node: usize) -> Result<LeviData> {
    if node >= diagram.rank() {
        return Err(Error::Index(format!("node {node} of {diagram}")));
    }
    let cartan = diagram.cartan_matrix();
    let keep: Vec<usize> = (0..diagram.rank()).filter(|&i| i != node).collect();
    let sub = cartan.submatrix(&keep);

    let mut components = Vec::new();
    for comp in sub.graph_components() {
        let amb_nodes: Vec<usize> = comp.iter().map(|&i| keep[i]).collect();
        let id = identify_cartan_type(&cartan.submatrix(&amb_nodes))?;
        let kind = id.diagram.components[0];
        let inv = id.inverse();
        let mut labeling: Vec<usize> = inv.iter().map(|&i| amb_nodes[i]).collect();

        // Normalize by the g₋₁ highest-weight restriction: pick the diagram
        // automorphism making (-⟨α₀, α_j⟩)_j lexicographically largest.
        let weight_at = |lab: &[usize]| -> Vec<i64> {
            lab.iter().map(|&n| -cartan.entries[node][n]).collect()
        };
        let mut best: Option<(Vec<i64>, Vec<usize>)> = None;
        for sigma in automorphisms(kind) {
            let cand: Vec<usize> = sigma.iter().map(|&p| labeling[p]).collect();
            let w = weight_at(&cand);
            let key = (w, cand.clone());
            let better = match &best {
                None => true,
                Some(b) => key > *b,
            };
            if better {
                best = Some(key);
            }
        }
        labeling = best.unwrap().1;

        let nu = labeling
            .iter()
            .map(|&n| -cartan.entries[n][node])
            .max()
            .unwrap();
        components.push(LeviComponent { kind, nodes: labeling, nu });
    }

    components.sort_by_key(|c| {
        (c.kind.family, c.kind.rank, Reverse(c.nu), *c.nodes.iter().min().unwrap())
    });
    let diagram0 = DynkinDiagram { components: components.iter().map(|c| c.kind).collect() };
    Ok(LeviData {
        ambient: diagram.clone(),
        ambient_cartan: cartan,
        node,
        components,
        diagram0,
    })
}

impl LeviData {
    pub fn rank0(&self) -> usize {
        self.diagram0.rank()
    }

    /// Restrict an ambient root to `t`: fundamental-weight coordinates of
    /// `g₀^ss`, concatenated in component order.  Integral by construction
    /// (`⟨α, α_j⟩` is a Cartan pairing).
    pub fn restrict(&self, alpha: &Root) -> Vec<i64> {
        self.components
            .iter()
            .flat_map(|c| {
                c.nodes.iter().map(|&j| {
                    (0..self.ambient.rank())
                        .map(|i| alpha.coords[i] * self.ambient_cartan.entries[i][j])
                        .sum::<i64>()
                })
            })
            .collect()
    }

    /// Same restriction, split per component.
    pub fn restrict_per_component(&self, alpha: &Root) -> Vec<Vec<i64>> {
        let flat = self.restrict(alpha);
        split_weight(self, &flat)
    }

    /// The highest weight of `g₋₁`: the restriction of `-α₀`.
    pub fn minus_alpha0_weight(&self) -> Vec<i64> {
        let mut coords = vec![0i64; self.ambient.rank()];
        coords[self.node] = -1;
        self.restrict(&Root::new(coords))
    }

    pub fn nu(&self) -> ConnectingMultiplicities {
        ConnectingMultiplicities(self.components.iter().map(|c| c.nu).collect())
    }
}

/// Connecting multiplicities of the marked diagram.
pub fn connecting_multiplicities(
    diagram: &DynkinDiagram,
    node: usize,
) -> Result<ConnectingMultiplicities> {
    Ok(levi(diagram, node)?.nu())
}

impl ConnectingMultiplicities {
    /// Structural sanity from the Cartan matrix constraints: entries lie in
    /// {0,1,2,3} and the values 2, 3 appear at most once combined.
    pub fn well_formed(&self) -> bool {
        self.0.iter().all(|&a| (0..=3).contains(&a))
            && self.0.iter().filter(|&&a| a >= 2).count() <= 1
    }
}

/// One graded piece, presented as a `g₀^ss`-representation.
#[derive(Debug, Clone)]
pub struct PieceRep {
    pub level: i64,
    /// All restricted weights, sorted; pairwise distinct (multiplicity free).
    pub weights: Vec<Vec<i64>>,
    pub highest_weight: Vec<i64>,
    pub dim: usize,
}

/// Analyse level `i ≠ 0` of a gradation as a representation of `g₀^ss`.
pub fn piece_rep<R: Scalar>(
    rs: &RootSystem<R>,
    gr: &Gradation<R>,
    ld: &LeviData,
    i: i64,
) -> Result<PieceRep> {
    if i == 0 {
        return Err(Error::Domain("level 0 is the Levi factor, not a piece".into()));
    }
    let idxs = gr.level(i);
    if idxs.is_empty() {
        return Err(Error::EmptyLevel(i));
    }
    let mut weights: Vec<Vec<i64>> = idxs.iter().map(|&k| ld.restrict(&rs.roots[k])).collect();

    // Highest weight: the unique root of the level dominating all others,
    // i.e. β - α has nonnegative coordinates for every α in the level.
    let mut maximal = Vec::new();
    for &b in idxs {
        let rb = &rs.roots[b];
        if idxs.iter().all(|&a| {
            rb.coords
                .iter()
                .zip(&rs.roots[a].coords)
                .all(|(x, y)| x - y >= 0)
        }) {
            maximal.push(b);
        }
    }
    if maximal.len() != 1 {
        return Err(Error::Domain(format!(
            "level {i} has {} maximal roots; the piece is not irreducible",
            maximal.len()
        )));
    }
    let highest_weight = ld.restrict(&rs.roots[maximal[0]]);

    weights.sort();
    let distinct = weights.windows(2).all(|w| w[0] != w[1]);
    if !distinct {
        return Err(Error::Domain(format!("level {i} is not weight multiplicity free")));
    }
    Ok(PieceRep { level: i, weights, highest_weight, dim: idxs.len() })
}

/// Weyl dimension formula for the irreducible representation of a
/// (semisimple, possibly trivial) diagram with dominant integral highest
/// weight `w` (fundamental-weight coordinates, concatenated per component).
pub fn weyl_dim(diagram: &DynkinDiagram, w: &[i64]) -> Result<u128> {
    if w.len() != diagram.rank() {
        return Err(Error::Shape(format!(
            "weight length {} vs rank {}",
            w.len(),
            diagram.rank()
        )));
    }
    if w.iter().any(|&x| x < 0) {
        return Err(Error::Domain("weight is not dominant".into()));
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (c, t) in diagram.components.iter().enumerate() {
        let range = diagram.component_range(c);
        let lam = &w[range];
        let rs = build_root_system::<crate::Rat64>(&DynkinDiagram { components: vec![*t] })?;
        // 6·d_i is integral for every family; the scaling cancels in each ratio.
        let d6: Vec<i64> = match t.family {
            crate::rootsys::Family::B => {
                let mut v = vec![6i64; t.rank];
                v[t.rank - 1] = 3;
                v
            }
            crate::rootsys::Family::C => {
                let mut v = vec![3i64; t.rank];
                v[t.rank - 1] = 6;
                v
            }
            crate::rootsys::Family::F => vec![6, 6, 3, 3],
            crate::rootsys::Family::G => vec![2, 6],
            _ => vec![6i64; t.rank],
        };
        for p in 0..rs.num_positive {
            let alpha = &rs.roots[p];
            let mut s: i64 = 0; // (λ+ρ, α) scaled by 6
            let mut r: i64 = 0; // (ρ, α) scaled by 6
            for k in 0..t.rank {
                s += (lam[k] + 1) * alpha.coords[k] * d6[k];
                r += alpha.coords[k] * d6[k];
            }
            num = num
                .checked_mul(s as u128)
                .ok_or_else(|| Error::Domain("weyl_dim overflow".into()))?;
            den = den
                .checked_mul(r as u128)
                .ok_or_else(|| Error::Domain("weyl_dim overflow".into()))?;
            let g = gcd_u128(num, den);
            num /= g;
            den /= g;
        }
    }
    if den != 1 {
        return Err(Error::Domain("weyl_dim did not produce an integer".into()));
    }
    Ok(num)
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Full analysis of one marked diagram: Levi, ν, and every graded piece.
#[derive(Debug, Clone)]
pub struct LeviReport {
    pub levi: LeviData,
    pub order: i64,
    pub dims: std::collections::BTreeMap<i64, usize>,
    pub pieces: Vec<PieceRep>,
}

pub fn analyze<R: Scalar>(diagram: &DynkinDiagram, node: usize) -> Result<LeviReport> {
    let rs = build_root_system::<R>(diagram)?;
    let gr = crate::gradation::grade(&rs, node)?;
    let ld = levi(diagram, node)?;
    let mut pieces = Vec::new();
    for (&i, idxs) in &gr.levels {
        if i != 0 && !idxs.is_empty() {
            pieces.push(piece_rep(&rs, &gr, &ld, i)?);
        }
    }
    Ok(LeviReport { levi: ld, order: gr.order, dims: gr.dims(&rs), pieces })
}

impl LeviReport {
    pub fn to_json(&self) -> Value {
        let g_minus_1 = self.pieces.iter().find(|p| p.level == -1);
        let dims: serde_json::Map<String, Value> = self
            .dims
            .iter()
            .map(|(i, d)| (i.to_string(), Value::from(*d)))
            .collect();
        json!({
            "levi": self.levi.diagram0.to_string(),
            "rep": {
                "component_weights": g_minus_1
                    .map(|p| split_weight(&self.levi, &p.highest_weight))
                    .unwrap_or_default(),
            },
            "nu": self.levi.nu().0,
            "order": self.order,
            "dims": Value::Object(dims),
        })
    }
}

/// Split a concatenated weight vector along the Levi components.
pub fn split_weight(ld: &LeviData, w: &[i64]) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut off = 0;
    for c in &ld.components {
        out.push(w[off..off + c.kind.rank].to_vec());
        off += c.kind.rank;
    }
    out
}

/// The six graded decompositions of twisted affine type, checked purely by
/// dimension arithmetic: `dim g = dim g₀ + Σ dim(rep pieces)` with every
/// representation dimension produced by `weyl_dim`.
pub fn twisted_affine_dim_check() -> Vec<TwistedCase> {
    // (name, ambient dim, center dim, semisimple factor, [(weight, multiplicity)])
    let cases: Vec<(&str, usize, usize, &str, Vec<(Vec<i64>, usize)>)> = vec![
        (
            "so10 = gl1 x G2 + 2(C7 + C7*) + C + C*",
            45,
            1,
            "G2",
            vec![(vec![1, 0], 4), (vec![0, 0], 2)],
        ),
        (
            "E6 = gl2 x G2 + 2(C2⊗C7 + (C2⊗C7)*) + C2 + C2*",
            78,
            1,
            "A1xG2",
            vec![(vec![1, 1, 0], 4), (vec![1, 0, 0], 2)],
        ),
        (
            "so12 = gl2 x so7 + C7 + C2⊗S + (C2⊗S)* + C + C*",
            66,
            1,
            "A1xB3",
            vec![(vec![0, 1, 0, 0], 1), (vec![1, 0, 0, 1], 2), (vec![0, 0, 0, 0], 2)],
        ),
        (
            "E7 = gl3 x so7 + C7 + 2(C3⊗S + (C3⊗S)*)",
            133,
            1,
            "A2xB3",
            vec![(vec![0, 0, 1, 0, 0], 1), (vec![1, 0, 0, 0, 1], 4)],
        ),
        (
            "E6 = gl1 x so9 + C9 + C⊗S + (C⊗S)*",
            78,
            1,
            "B4",
            vec![(vec![1, 0, 0, 0], 1), (vec![0, 0, 0, 1], 2)],
        ),
        (
            "E7 = gl1 x so11 + C11 + C⊗S + (C⊗S)* + C + C*",
            133,
            1,
            "B5",
            vec![(vec![1, 0, 0, 0, 0], 1), (vec![0, 0, 0, 0, 1], 2), (vec![0, 0, 0, 0, 0], 2)],
        ),
    ];
    cases
        .into_iter()
        .map(|(name, ambient_dim, center, levi, reps)| {
            let d0 = DynkinDiagram::parse(levi).unwrap();
            let mut total = center + d0.dim();
            let mut ok = true;
            for (w, mult) in &reps {
                match weyl_dim(&d0, w) {
                    Ok(d) => total += (d as usize) * mult,
                    Err(_) => ok = false,
                }
            }
            TwistedCase {
                name: name.to_string(),
                expected: ambient_dim,
                computed: total,
                pass: ok && total == ambient_dim,
            }
        })
        .collect()
}

#[derive(Debug, Clone)]
pub struct TwistedCase {
    pub name: String,
    pub expected: usize,
    pub computed: usize,
    pub pass: bool,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gradation::grade;
    use crate::Rat64;

    fn setup(name: &str, node: usize) -> (RootSystem<Rat64>, Gradation<Rat64>, LeviData) {
        let d = DynkinDiagram::parse(name).unwrap();
        let rs = build_root_system(&d).unwrap();
        let gr = grade(&rs, node).unwrap();
        let ld = levi(&d, node).unwrap();
        (rs, gr, ld)
    }

    #[test]
    fn e6_node2_levi_is_a5() {
        let (_, _, ld) = setup("E6", 1);
        assert_eq!(ld.diagram0.to_string(), "A5");
    }

    #[test]
    fn a2_node1_levi_is_a1() {
        let (_, _, ld) = setup("A2", 0);
        assert_eq!(ld.diagram0.to_string(), "A1");
        assert_eq!(ld.minus_alpha0_weight(), vec![1]);
    }

    #[test]
    fn e8_node4_levi() {
        let (_, _, ld) = setup("E8", 3);
        assert_eq!(ld.diagram0.to_string(), "A1xA2xA4");
        assert_eq!(ld.nu().0, vec![1, 1, 1]);
    }

    #[test]
    fn minus_alpha0_weights_match_table() {
        // (E6, node 2): ω₃ of A5.
        let (_, _, ld) = setup("E6", 1);
        assert_eq!(ld.minus_alpha0_weight(), vec![0, 0, 1, 0, 0]);
        // (G2, node 2): 3ω₁ of A1.
        let (_, _, ld) = setup("G2", 1);
        assert_eq!(ld.minus_alpha0_weight(), vec![3]);
        // (F4, node 3): ω₁ on the A1 and a fundamental weight on the A2.
        let (_, _, ld) = setup("F4", 2);
        assert_eq!(ld.diagram0.to_string(), "A1xA2");
        assert_eq!(split_weight(&ld, &ld.minus_alpha0_weight()), vec![vec![1], vec![1, 0]]);
        // (F4, node 2): the S²C³ row, weight 2ω on the A2 attach node.
        let (_, _, ld) = setup("F4", 1);
        assert_eq!(ld.diagram0.to_string(), "A1xA2");
        assert_eq!(ld.nu().0, vec![1, 1]);
        assert_eq!(split_weight(&ld, &ld.minus_alpha0_weight()), vec![vec![1], vec![2, 0]]);
    }

    #[test]
    fn piece_reps_e8_node2() {
        let (rs, gr, ld) = setup("E8", 1);
        let p1 = piece_rep(&rs, &gr, &ld, -1).unwrap();
        assert_eq!(p1.dim, 56);
        assert_eq!(p1.highest_weight, vec![0, 0, 1, 0, 0, 0, 0]); // ω₃ of A7
        assert_eq!(weyl_dim(&ld.diagram0, &p1.highest_weight).unwrap(), 56);
        let p2 = piece_rep(&rs, &gr, &ld, -2).unwrap();
        assert_eq!(p2.dim, 28);
        assert_eq!(weyl_dim(&ld.diagram0, &p2.highest_weight).unwrap(), 28);
        let p3 = piece_rep(&rs, &gr, &ld, -3).unwrap();
        assert_eq!(p3.dim, 8);
        assert_eq!(weyl_dim(&ld.diagram0, &p3.highest_weight).unwrap(), 8);
    }

    #[test]
    fn dn_node_n_piece() {
        for n in 4..=8 {
            let (rs, gr, ld) = setup(&format!("D{n}"), n - 1);
            let p = piece_rep(&rs, &gr, &ld, -1).unwrap();
            assert_eq!(p.dim, n * (n - 1) / 2);
            let mut expect = vec![0i64; n - 1];
            expect[1] = 1; // ω₂ of A_{n-1}
            assert_eq!(p.highest_weight, expect);
        }
    }

    #[test]
    fn bn_node_n_order_two_bookkeeping() {
        for n in 2..=8 {
            let (rs, gr, ld) = setup(&format!("B{n}"), n - 1);
            assert_eq!(gr.order, 2);
            let d1 = gr.level(-1).len();
            let d2 = gr.level(-2).len();
            assert_eq!(gr.dim_level(&rs, 0) + 2 * (d1 + d2), rs.diagram.dim());
            let p = piece_rep(&rs, &gr, &ld, -1).unwrap();
            assert_eq!(p.dim, d1);
            assert_eq!(weyl_dim(&ld.diagram0, &p.highest_weight).unwrap() as usize, d1);
        }
    }

    #[test]
    fn empty_level_is_an_error() {
        let (rs, gr, ld) = setup("A3", 0);
        assert!(matches!(piece_rep(&rs, &gr, &ld, -2), Err(Error::EmptyLevel(-2))));
    }

    #[test]
    fn weyl_dim_basics() {
        let a1 = DynkinDiagram::parse("A1").unwrap();
        assert_eq!(weyl_dim(&a1, &[1]).unwrap(), 2);
        let a7 = DynkinDiagram::parse("A7").unwrap();
        assert_eq!(weyl_dim(&a7, &[0, 0, 1, 0, 0, 0, 0]).unwrap(), 56);
        let b3 = DynkinDiagram::parse("B3").unwrap();
        assert_eq!(weyl_dim(&b3, &[0, 0, 1]).unwrap(), 8);
        let g2 = DynkinDiagram::parse("G2").unwrap();
        assert_eq!(weyl_dim(&g2, &[1, 0]).unwrap(), 7);
        let e6 = DynkinDiagram::parse("E6").unwrap();
        assert_eq!(weyl_dim(&e6, &[1, 0, 0, 0, 0, 0]).unwrap(), 27);
        let trivial = DynkinDiagram::empty();
        assert_eq!(weyl_dim(&trivial, &[]).unwrap(), 1);
        assert!(matches!(weyl_dim(&a1, &[-1]), Err(Error::Domain(_))));
    }

    #[test]
    fn connecting_multiplicities_examples() {
        let f4 = DynkinDiagram::parse("F4").unwrap();
        assert_eq!(connecting_multiplicities(&f4, 2).unwrap().0, vec![1, 2]);
        let g2 = DynkinDiagram::parse("G2").unwrap();
        assert_eq!(connecting_multiplicities(&g2, 0).unwrap().0, vec![3]);
        let e6 = DynkinDiagram::parse("E6").unwrap();
        assert_eq!(connecting_multiplicities(&e6, 3).unwrap().0, vec![1, 1, 1]);
    }

    #[test]
    fn nu_well_formedness_across_types() {
        for name in ["A5", "B4", "C5", "D6", "E7", "F4", "G2"] {
            let d = DynkinDiagram::parse(name).unwrap();
            for node in 0..d.rank() {
                let nu = connecting_multiplicities(&d, node).unwrap();
                assert!(nu.well_formed(), "{name} node {node}");
                // Connected ambient iff no zero entries.
                assert!(!nu.0.contains(&0), "{name} node {node}");
            }
        }
    }

    #[test]
    fn weights_congruent_mod_root_lattice() {
        // Differences of restricted weights must be integer combinations of
        // the diagram0 simple roots (rows of its Cartan matrix).
        let (rs, gr, ld) = setup("F4", 0);
        let p = piece_rep(&rs, &gr, &ld, -1).unwrap();
        let a0 = ld.diagram0.cartan_matrix();
        let a0t: Vec<Vec<Rat64>> = (0..ld.rank0())
            .map(|i| (0..ld.rank0()).map(|j| crate::scalar::int(a0.entries[j][i])).collect())
            .collect();
        for w in &p.weights {
            let diff: Vec<Rat64> = w
                .iter()
                .zip(&p.highest_weight)
                .map(|(a, b)| crate::scalar::int(a - b))
                .collect();
            let x = crate::linalg::solve(&a0t, &diff).unwrap();
            for c in x {
                assert!(c.is_integer());
            }
        }
    }

    #[test]
    fn twisted_affine_cases_all_pass() {
        let cases = twisted_affine_dim_check();
        assert_eq!(cases.len(), 6);
        for c in &cases {
            assert!(c.pass, "{}: {} != {}", c.name, c.computed, c.expected);
        }
    }
}
