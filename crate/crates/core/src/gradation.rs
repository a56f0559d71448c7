//! The Z-gradation of a semisimple Lie algebra induced by marking one node
//! `α₀` of its Dynkin diagram: the level of a root is its `α₀`-coefficient,
//! so `Δ_i = (Z⟨α₁,…,α_ℓ⟩ + i·α₀) ∩ Δ` and `g₀` picks up the Cartan
//! subalgebra.  Also the derived subsystem structure: level-zero subalgebras
//! of divisor gradations, Z_m pieces, and Borel–de Siebenthal subalgebras
//! from the extended diagram.

use crate::error::{Error, Result};
use crate::linalg;
use crate::recognize::identify_cartan_type;
use crate::rootsys::{CartanMatrix, DynkinDiagram, Root, RootSystem};
use crate::scalar::{int, Scalar};
use serde_json::{json, Value};
use std::collections::BTreeMap;

/// A diagram with one marked node (0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NodeChoice {
    pub diagram: DynkinDiagram,
    pub node: usize,
}

impl NodeChoice {
    pub fn new(diagram: DynkinDiagram, node: usize) -> Result<Self> {
        if node >= diagram.rank() {
            return Err(Error::Index(format!(
                "node {} of {} (rank {})",
                node,
                diagram,
                diagram.rank()
            )));
        }
        Ok(Self { diagram, node })
    }
}

/// The level decomposition of a root system under a marked node.
#[derive(Debug, Clone)]
pub struct Gradation<R: Scalar> {
    pub node: usize,
    /// Level -> indices into `rs.roots`, each list sorted.
    pub levels: BTreeMap<i64, Vec<usize>>,
    /// Largest nonzero level.
    pub order: i64,
    /// The grading element `c` in simple-coroot coordinates:
    /// `α₀(c) = 1`, `α_j(c) = 0` for `j ≠ 0`.
    pub c_coords: Vec<R>,
}

/// Grade the root system by the marked node.
pub fn grade<R: Scalar>(rs: &RootSystem<R>, node: usize) -> Result<Gradation<R>> {
    if node >= rs.rank() {
        return Err(Error::Index(format!("node {node} (rank {})", rs.rank())));
    }
    let mut levels: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    levels.insert(0, Vec::new());
    for (i, r) in rs.roots.iter().enumerate() {
        levels.entry(r.coords[node]).or_default().push(i);
    }
    let order = *levels.keys().max().unwrap();

    // c solves A·c = e_node over the rationals.
    let a = linalg::from_int_matrix::<R>(&rs.cartan.entries);
    let rhs: Vec<R> = (0..rs.rank())
        .map(|i| if i == node { R::one() } else { R::zero() })
        .collect();
    let c_coords = linalg::solve(&a, &rhs)?;

    let gr = Gradation { node, levels, order, c_coords };
    debug_assert!(gr.check_partition(rs));
    Ok(gr)
}

impl<R: Scalar> Gradation<R> {
    /// Roots at a level (empty slice for untouched levels).
    pub fn level(&self, i: i64) -> &[usize] {
        self.levels.get(&i).map(Vec::as_slice).unwrap_or(&[])
    }

    /// `dim g_i`: root count, plus the Cartan rank at level zero.
    pub fn dim_level(&self, rs: &RootSystem<R>, i: i64) -> usize {
        self.level(i).len() + if i == 0 { rs.rank() } else { 0 }
    }

    pub fn dims(&self, rs: &RootSystem<R>) -> BTreeMap<i64, usize> {
        self.levels.keys().map(|&i| (i, self.dim_level(rs, i))).collect()
    }

    fn check_partition(&self, rs: &RootSystem<R>) -> bool {
        let total: usize = self.levels.values().map(Vec::len).sum();
        if total != rs.roots.len() {
            return false;
        }
        self.levels.iter().all(|(&i, idxs)| {
            idxs.iter().all(|&k| rs.roots[k].coords[self.node] == i)
                && self.level(-i).len() == idxs.len()
        })
    }

    pub fn to_json(&self, rs: &RootSystem<R>) -> Value {
        let mut levels = serde_json::Map::new();
        for (&i, idxs) in &self.levels {
            let roots: Vec<Value> = idxs
                .iter()
                .map(|&k| Value::from(rs.roots[k].coords.clone()))
                .collect();
            levels.insert(i.to_string(), Value::from(roots));
        }
        let dims: serde_json::Map<String, Value> = self
            .dims(rs)
            .into_iter()
            .map(|(i, d)| (i.to_string(), Value::from(d)))
            .collect();
        json!({
            "node": self.node + 1,
            "order": self.order,
            "dims": Value::Object(dims),
            "levels": Value::Object(levels),
        })
    }
}

/// Order of the gradation at `node`: the `α₀`-coefficient of the highest
/// root of the component containing the node.
pub fn order_of<R: Scalar>(rs: &RootSystem<R>, node: usize) -> Result<i64> {
    let comp = rs.diagram.component_of(node)?;
    Ok(rs.highest_root(comp)?.coords[node])
}

/// Roots of `g(m)₀ = ⊕_{i ≡ 0 mod m} g_i` for a divisor `m` of the order.
pub fn level_zero_subsystem<R: Scalar>(
    _rs: &RootSystem<R>,
    gr: &Gradation<R>,
    m: i64,
) -> Result<Vec<usize>> {
    if m <= 0 || gr.order % m != 0 {
        return Err(Error::Divisibility { divisor: m, order: gr.order });
    }
    let mut out: Vec<usize> = gr
        .levels
        .iter()
        .filter(|(&i, _)| i % m == 0)
        .flat_map(|(_, idxs)| idxs.iter().copied())
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// The Z_m pieces: residue class j -> all roots with level ≡ j (mod m).
pub fn zm_pieces<R: Scalar>(
    rs: &RootSystem<R>,
    gr: &Gradation<R>,
    m: i64,
) -> Result<BTreeMap<i64, Vec<usize>>> {
    if m < 2 {
        return Err(Error::Domain(format!("Z_m gradation needs m ≥ 2, got {m}")));
    }
    let mut pieces: BTreeMap<i64, Vec<usize>> = (0..m).map(|j| (j, Vec::new())).collect();
    for (&i, idxs) in &gr.levels {
        pieces
            .get_mut(&(i.rem_euclid(m)))
            .unwrap()
            .extend(idxs.iter().copied());
    }
    for p in pieces.values_mut() {
        p.sort_unstable();
    }
    let total: usize = pieces.values().map(Vec::len).sum();
    debug_assert_eq!(total, rs.roots.len());
    Ok(pieces)
}

/// True iff the subset is closed (`(Φ+Φ) ∩ Δ ⊆ Φ`) and symmetric (`Φ = -Φ`).
pub fn closed_symmetric<R: Scalar>(rs: &RootSystem<R>, subset: &[usize]) -> bool {
    let in_subset: std::collections::HashSet<usize> = subset.iter().copied().collect();
    for &i in subset {
        if !in_subset.contains(&rs.neg_index(i)) {
            return false;
        }
        for &j in subset {
            let sum: Vec<i64> = rs.roots[i]
                .coords
                .iter()
                .zip(&rs.roots[j].coords)
                .map(|(a, b)| a + b)
                .collect();
            if let Some(k) = rs.root_index(&sum) {
                if !in_subset.contains(&k) {
                    return false;
                }
            }
        }
    }
    true
}

/// Borel–de Siebenthal: the maximal regular subalgebra obtained by deleting
/// one node from the extended diagram `Π̃ = Π ∪ {-α̃}`.
///
/// `node` indexes `Π̃`: values `0..rank` name the simple roots, `rank` names
/// the adjoined lowest root.  Deleting a prime-marked node yields the
/// semisimple type generated by `Π̃ \ {α_i}`; deleting a mark-1 node yields
/// the reductive type from `Π \ {α_i}`.
pub fn borel_de_siebenthal<R: Scalar>(rs: &RootSystem<R>, node: usize) -> Result<DynkinDiagram> {
    if rs.diagram.components.len() != 1 {
        return Err(Error::Unsupported("extended diagram of a non-simple algebra".into()));
    }
    let rank = rs.rank();
    if node > rank {
        return Err(Error::Index(format!("node {node} of the extended diagram")));
    }
    if node == rank {
        // The adjoined node has mark 1; deleting it restores the diagram.
        return Ok(rs.diagram.clone());
    }
    let mark = rs.highest_root(0)?.coords[node];
    if mark == 1 {
        let keep: Vec<usize> = (0..rank).filter(|&i| i != node).collect();
        let sub = rs.cartan.submatrix(&keep);
        return Ok(identify_cartan_type(&sub)?.diagram);
    }
    if ![2, 3, 5].contains(&mark) {
        return Err(Error::Unsupported(format!(
            "deleted node has mark {mark}, neither 1 nor prime"
        )));
    }
    // Simple system Π̃ \ {α_node}: remaining simple roots plus -α̃.
    let mut simple: Vec<Root> = (0..rank)
        .filter(|&i| i != node)
        .map(|i| {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            Root::new(v)
        })
        .collect();
    simple.push(rs.highest_root(0)?.negated());
    let n = simple.len();
    let entries: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        2
                    } else {
                        // ⟨β_i, β_j⟩ = 2(β_i, β_j)/(β_j, β_j)
                        let num = int::<R>(2) * rs.ip_roots(&simple[i], &simple[j]);
                        let den = rs.norm_sq(&simple[j]);
                        let q = num / den;
                        // Pairings of roots are integers.
                        (-8..=8)
                            .find(|&k| q == int::<R>(k))
                            .expect("root pairing is a small integer")
                    }
                })
                .collect()
        })
        .collect();
    let sub = CartanMatrix::new(entries)?;
    Ok(identify_cartan_type(&sub)?.diagram)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::build_root_system;
    use crate::Rat64;

    fn rs(name: &str) -> RootSystem<Rat64> {
        build_root_system(&DynkinDiagram::parse(name).unwrap()).unwrap()
    }

    #[test]
    fn e8_node2_dims_and_order() {
        let r = rs("E8");
        let g = grade(&r, 1).unwrap();
        assert_eq!(g.order, 3);
        assert_eq!(g.dim_level(&r, 0), 64);
        assert_eq!(g.dim_level(&r, -1), 56);
        assert_eq!(g.dim_level(&r, -2), 28);
        assert_eq!(g.dim_level(&r, -3), 8);
    }

    #[test]
    fn a_n_first_node() {
        for n in 1..=8 {
            let r = rs(&format!("A{n}"));
            let g = grade(&r, 0).unwrap();
            assert_eq!(g.order, 1);
            assert_eq!(g.level(-1).len(), n);
        }
    }

    #[test]
    fn d5_last_node() {
        let r = rs("D5");
        let g = grade(&r, 4).unwrap();
        assert_eq!(g.order, 1);
        assert_eq!(g.level(-1).len(), 10);
        assert_eq!(g.dim_level(&r, 0), 25);
    }

    #[test]
    fn orders_match_marks() {
        for (name, node, order) in [("G2", 0, 3), ("F4", 0, 2), ("A5", 2, 1), ("E8", 3, 6)] {
            let r = rs(name);
            assert_eq!(order_of(&r, node).unwrap(), order, "{name}");
            assert_eq!(grade(&r, node).unwrap().order, order, "{name}");
        }
    }

    #[test]
    fn level_sum_dim_identity() {
        let r = rs("F4");
        for node in 0..4 {
            let g = grade(&r, node).unwrap();
            let total: usize = g.levels.values().map(Vec::len).sum();
            assert_eq!(total + r.rank(), r.diagram.dim());
            for (&i, idxs) in &g.levels {
                let negs: Vec<usize> = idxs.iter().map(|&k| r.neg_index(k)).collect();
                let mut sorted = negs.clone();
                sorted.sort_unstable();
                assert_eq!(sorted, g.level(-i));
            }
        }
    }

    #[test]
    fn grading_element_defining_property() {
        let r = rs("A2");
        let g = grade(&r, 0).unwrap();
        // α_i(c) = Σ_j a[i][j] c_j = δ_{i0}
        for i in 0..2 {
            let v: Rat64 = (0..2).fold(num_traits::Zero::zero(), |acc: Rat64, j| {
                acc + crate::scalar::int::<Rat64>(r.cartan.entries[i][j]) * g.c_coords[j]
            });
            assert_eq!(v, crate::scalar::int(if i == 0 { 1 } else { 0 }));
        }
    }

    #[test]
    fn product_diagram_marks_only_its_component() {
        let r = rs("A1xA4");
        let g = grade(&r, 2).unwrap(); // a node of the A4 component
        // The A1 roots land in level 0.
        assert!(g.level(0).iter().any(|&k| r.roots[k].coords[0] != 0));
        assert_eq!(g.order, 1);
    }

    #[test]
    fn bad_node_is_an_index_error() {
        let r = rs("A2");
        assert!(matches!(grade(&r, 5), Err(Error::Index(_))));
    }

    #[test]
    fn e8_node2_m3_subsystem_is_a8() {
        let r = rs("E8");
        let g = grade(&r, 1).unwrap();
        let sub = level_zero_subsystem(&r, &g, 3).unwrap();
        assert_eq!(sub.len(), 72);
        assert!(closed_symmetric(&r, &sub));
    }

    #[test]
    fn subsystem_m_equals_n_is_pi0_span() {
        // Δ(0) = Δ_{-n} ∪ Δ₀ ∪ Δ_n, and it equals Z⟨Π₀⟩ ∩ Δ for
        // Π₀ = (Π ∪ {-α̃}) \ {α₀}: membership in the span is decided by an
        // exact solve with integrality check.
        for (name, node) in [("F4", 0), ("E8", 1), ("G2", 0)] {
            let r = rs(name);
            let g = grade(&r, node).unwrap();
            let n = g.order;
            let sub = level_zero_subsystem(&r, &g, n).unwrap();
            let expect: usize = g.level(-n).len() + g.level(0).len() + g.level(n).len();
            assert_eq!(sub.len(), expect, "{name}");
            assert!(closed_symmetric(&r, &sub), "{name}");

            // Independent span-side computation: β ∈ Z⟨Π₀⟩ iff the linear
            // system over the basis Π₀ solves integrally.
            let rank = r.rank();
            let mut basis: Vec<Vec<i64>> = (0..rank)
                .filter(|&i| i != node)
                .map(|i| {
                    let mut v = vec![0i64; rank];
                    v[i] = 1;
                    v
                })
                .collect();
            basis.push(r.highest_root(0).unwrap().negated().coords);
            let cols: Vec<Vec<Rat64>> = (0..rank)
                .map(|row| basis.iter().map(|b| crate::scalar::int(b[row])).collect())
                .collect();
            let in_span = |beta: &Root| -> bool {
                let rhs: Vec<Rat64> = beta.coords.iter().map(|&x| crate::scalar::int(x)).collect();
                match crate::linalg::solve(&cols, &rhs) {
                    Ok(x) => x.iter().all(|c| c.is_integer()),
                    Err(_) => false,
                }
            };
            let span_side: Vec<usize> = (0..r.roots.len())
                .filter(|&k| in_span(&r.roots[k]))
                .collect();
            assert_eq!(span_side, sub, "{name}: Π₀ span differs");
        }
    }

    #[test]
    fn divisor_violation_rejected() {
        let r = rs("E8");
        let g = grade(&r, 1).unwrap(); // order 3
        assert!(matches!(
            level_zero_subsystem(&r, &g, 2),
            Err(Error::Divisibility { .. })
        ));
    }

    #[test]
    fn zm_pieces_partition() {
        let r = rs("E7");
        let g = grade(&r, 1).unwrap(); // order 2
        let pieces = zm_pieces(&r, &g, 2).unwrap();
        assert_eq!(pieces.len(), 2);
        let total: usize = pieces.values().map(Vec::len).sum();
        assert_eq!(total, r.roots.len());
        // Piece 0 equals the level-zero subsystem of the same modulus.
        assert_eq!(pieces[&0], level_zero_subsystem(&r, &g, 2).unwrap());
    }

    #[test]
    fn zm_larger_than_order() {
        let r = rs("A3");
        let g = grade(&r, 1).unwrap(); // order 1
        let pieces = zm_pieces(&r, &g, 5).unwrap();
        for (&j, idxs) in &pieces {
            let expect = if j == 0 {
                g.level(0).to_vec()
            } else if j == 1 {
                g.level(1).to_vec()
            } else if j == 4 {
                g.level(-1).to_vec()
            } else {
                Vec::new()
            };
            assert_eq!(*idxs, expect, "piece {j}");
        }
    }

    #[test]
    fn closed_symmetric_examples() {
        let r = rs("A2");
        let all: Vec<usize> = (0..r.roots.len()).collect();
        assert!(closed_symmetric(&r, &all));
        let alpha1 = r.root_index(&[1, 0]).unwrap();
        assert!(!closed_symmetric(&r, &[alpha1]));
        let g = grade(&r, 0).unwrap();
        assert!(closed_symmetric(&r, g.level(0)));
    }

    #[test]
    fn borel_de_siebenthal_cases() {
        let e8 = rs("E8");
        assert_eq!(borel_de_siebenthal(&e8, 0).unwrap().to_string(), "D8");
        let g2 = rs("G2");
        assert_eq!(borel_de_siebenthal(&g2, 0).unwrap().to_string(), "A2");
        // Deleting a mark-1 node of A_n splits the chain.
        let a5 = rs("A5");
        assert_eq!(borel_de_siebenthal(&a5, 2).unwrap().sorted().to_string(), "A2xA2");
        // E8 node 4 has mark 6: neither 1 nor prime.
        assert!(matches!(borel_de_siebenthal(&e8, 3), Err(Error::Unsupported(_))));
        // Deleting the adjoined lowest root restores the diagram.
        assert_eq!(borel_de_siebenthal(&e8, 8).unwrap().to_string(), "E8");
    }
}
