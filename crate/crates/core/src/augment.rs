//! The inverse correspondence: from `(g₀^ss, highest weight ω, connecting
//! multiplicities ν)` assemble the candidate augmented Cartan matrix with
//! `α₀` as node 0, validate it, and identify the ambient algebra.  Since a
//! finite-type Cartan matrix presents its algebra uniquely up to
//! isomorphism, type identification replaces a symbolic Serre construction;
//! the Chevalley realization verifies the embedding separately.

use crate::error::{Error, Result};
use crate::recognize::{identify_cartan_type, Identification};
use crate::rootsys::{principal_minors_positive, CartanMatrix, DynkinDiagram};
use serde_json::{json, Value};

/// The `(Γ₀, ω, ν)` triple: a Levi diagram, a dominant integral highest
/// weight given per component, and one connecting multiplicity per
/// component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationInput {
    pub diagram0: DynkinDiagram,
    /// Fundamental-weight coordinates of ω, one vector per component.
    pub omega: Vec<Vec<i64>>,
    pub nu: Vec<i64>,
}

/// Candidate Cartan matrix of the ambient algebra; node 0 is `α₀`, nodes
/// `1..` are the diagram0 nodes in order.
#[derive(Debug, Clone)]
pub struct AugmentedMatrix {
    pub matrix: CartanMatrix,
}

#[derive(Debug, Clone)]
pub struct ValidationCheck {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn valid(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn to_json(&self) -> Value {
        Value::from(
            self.checks
                .iter()
                .map(|c| json!({ "check": c.name, "pass": c.pass, "detail": c.detail }))
                .collect::<Vec<_>>(),
        )
    }
}

/// Assemble the augmented matrix: row 0 carries `-⟨ω, α_j⟩`, column 0
/// carries `-a_i` at the attachment node of each component.
pub fn build_augmented_matrix(input: &AugmentationInput) -> Result<AugmentedMatrix> {
    let ncomp = input.diagram0.components.len();
    if input.nu.len() != ncomp || input.omega.len() != ncomp {
        return Err(Error::Shape(format!(
            "{} components but ω has {} parts and ν has {} entries",
            ncomp,
            input.omega.len(),
            input.nu.len()
        )));
    }
    let n = input.diagram0.rank();
    let base = input.diagram0.cartan_matrix();
    let mut a = vec![vec![0i64; n + 1]; n + 1];
    a[0][0] = 2;
    for i in 0..n {
        for j in 0..n {
            a[i + 1][j + 1] = base.entries[i][j];
        }
    }
    for (c, t) in input.diagram0.components.iter().enumerate() {
        if input.omega[c].len() != t.rank {
            return Err(Error::Shape(format!(
                "component {c} has rank {} but ω part has length {}",
                t.rank,
                input.omega[c].len()
            )));
        }
        if input.omega[c].iter().any(|&x| x < 0) {
            return Err(Error::Domain(format!("ω is not dominant on component {c}")));
        }
        let nonzero: Vec<usize> = (0..t.rank).filter(|&p| input.omega[c][p] != 0).collect();
        match nonzero.len() {
            0 => {
                if input.nu[c] != 0 {
                    return Err(Error::NuPattern(format!(
                        "component {c}: ω vanishes but ν = {}",
                        input.nu[c]
                    )));
                }
            }
            1 => {
                if input.nu[c] == 0 {
                    return Err(Error::NuPattern(format!(
                        "component {c}: ω is nonzero but ν = 0"
                    )));
                }
                let p = nonzero[0];
                let global = input.diagram0.component_range(c).start + p;
                a[0][global + 1] = -input.omega[c][p];
                a[global + 1][0] = -input.nu[c];
            }
            _ => return Err(Error::Cycle(c)),
        }
    }
    let matrix = CartanMatrix::new(a)?;
    Ok(AugmentedMatrix { matrix })
}

/// Check the three structural conditions on a candidate matrix: the zero
/// pattern (with at most one attachment per component), symmetrizability by
/// a positive diagonal, and positivity of every principal minor.
pub fn validate(am: &AugmentedMatrix) -> ValidationReport {
    let m = &am.matrix;
    let n = m.size();
    let mut checks = Vec::new();

    let mut zp_pass = true;
    let mut zp_detail = String::from("row 0 and column 0 zero patterns agree");
    for j in 1..n {
        if (m.entries[0][j] == 0) != (m.entries[j][0] == 0) {
            zp_pass = false;
            zp_detail = format!("row/column mismatch at node {j}");
        }
    }
    if zp_pass && n > 1 {
        let rest: Vec<usize> = (1..n).collect();
        for comp in m.submatrix(&rest).graph_components() {
            let attached = comp.iter().filter(|&&i| m.entries[0][rest[i]] != 0).count();
            if attached > 1 {
                zp_pass = false;
                zp_detail = format!("{attached} attachment nodes in one component");
            }
        }
    }
    checks.push(ValidationCheck { name: "zero_pattern", pass: zp_pass, detail: zp_detail });

    let sym = m.symmetrizer_diag::<crate::Rat>();
    checks.push(match sym {
        Ok(d) => {
            let positive = d.iter().all(|x| x > &num_traits::Zero::zero());
            ValidationCheck {
                name: "symmetrizable",
                pass: positive,
                detail: if positive {
                    "positive diagonal symmetrizer exists".into()
                } else {
                    "symmetrizer is not positive".into()
                },
            }
        }
        Err(e) => ValidationCheck { name: "symmetrizable", pass: false, detail: e.to_string() },
    });

    let minors = principal_minors_positive(m);
    checks.push(ValidationCheck {
        name: "principal_minors",
        pass: minors,
        detail: if minors {
            "all principal minors positive".into()
        } else {
            "a principal minor is non-positive".into()
        },
    });

    ValidationReport { checks }
}

/// Validate and identify the ambient algebra of an augmentation input.
/// Returns the canonical diagram and the canonical index of `α₀`.
pub fn identify_ambient(input: &AugmentationInput) -> Result<(DynkinDiagram, usize)> {
    let (d, node, _) = identify_ambient_full(input)?;
    Ok((d, node))
}

/// Same as [`identify_ambient`] but also exposes the node permutation.
pub fn identify_ambient_full(
    input: &AugmentationInput,
) -> Result<(DynkinDiagram, usize, Identification)> {
    let am = build_augmented_matrix(input)?;
    let report = validate(&am);
    if !report.valid() {
        let failed: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        return Err(Error::ValidationFailed(failed.join(", ")));
    }
    let id = identify_cartan_type(&am.matrix)?;
    let node = id.permutation[0];
    Ok((id.diagram.clone(), node, id))
}

/// One enumerated augmentation of a diagram.
#[derive(Debug, Clone)]
pub struct Augmentation {
    pub input: AugmentationInput,
    pub ambient: DynkinDiagram,
    /// Canonical node index of α₀ in the ambient diagram.
    pub node: usize,
}

impl Augmentation {
    pub fn to_json(&self) -> Value {
        json!({
            "omega": self.input.omega,
            "nu": self.input.nu,
            "ambient": self.ambient.to_string(),
            "node": self.node + 1,
        })
    }
}

/// Every valid augmentation of `diagram0`: per component either no
/// attachment or one attachment node with bond multiplicities 1–3 searched
/// in both orientations.  The unattached-everywhere candidate (ambient
/// `diagram0 × A1`) is included.  Output is sorted and duplicate-free.
pub fn enumerate_augmentations(diagram0: &DynkinDiagram) -> Vec<Augmentation> {
    let ncomp = diagram0.components.len();
    // Per-component options: None or (local node, ω value x, ν value y).
    let mut options: Vec<Vec<Option<(usize, i64, i64)>>> = Vec::new();
    for t in &diagram0.components {
        let mut opts: Vec<Option<(usize, i64, i64)>> = vec![None];
        for p in 0..t.rank {
            for x in 1..=3 {
                for y in 1..=3 {
                    opts.push(Some((p, x, y)));
                }
            }
        }
        options.push(opts);
    }

    let mut out = Vec::new();
    let mut pick = vec![0usize; ncomp];
    loop {
        let mut omega = Vec::with_capacity(ncomp);
        let mut nu = Vec::with_capacity(ncomp);
        for (c, t) in diagram0.components.iter().enumerate() {
            match options[c][pick[c]] {
                None => {
                    omega.push(vec![0; t.rank]);
                    nu.push(0);
                }
                Some((p, x, y)) => {
                    let mut w = vec![0; t.rank];
                    w[p] = x;
                    omega.push(w);
                    nu.push(y);
                }
            }
        }
        let input = AugmentationInput { diagram0: diagram0.clone(), omega, nu };
        if let Ok((ambient, node)) = identify_ambient(&input) {
            out.push(Augmentation { input, ambient, node });
        }

        // Advance the mixed-radix counter.
        let mut c = 0;
        loop {
            if c == ncomp {
                out.sort_by_key(|a| {
                    (
                        a.ambient.to_string(),
                        a.node,
                        a.input.omega.clone(),
                        a.input.nu.clone(),
                    )
                });
                out.dedup_by_key(|a| (a.input.omega.clone(), a.input.nu.clone()));
                return out;
            }
            pick[c] += 1;
            if pick[c] < options[c].len() {
                break;
            }
            pick[c] = 0;
            c += 1;
        }
        if ncomp == 0 {
            // Rank-zero diagram: only the empty input, already processed.
            out.sort_by_key(|a| a.node);
            return out;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::Family;

    fn input(d0: &str, omega: Vec<Vec<i64>>, nu: Vec<i64>) -> AugmentationInput {
        AugmentationInput { diagram0: DynkinDiagram::parse(d0).unwrap(), omega, nu }
    }

    #[test]
    fn a_chain_extension() {
        // (A_{n-1}, ω₁, ν=(1)) -> A_n.
        let (d, node) = identify_ambient(&input("A3", vec![vec![1, 0, 0]], vec![1])).unwrap();
        assert_eq!(d.to_string(), "A4");
        // α₀ attaches next to position 1, landing at an end of the chain.
        assert!(node == 0 || node == 3);
    }

    #[test]
    fn e6_from_a1_a4() {
        let inp = input("A1xA4", vec![vec![1], vec![0, 1, 0, 0]], vec![1, 1]);
        let (d, node) = identify_ambient(&inp).unwrap();
        assert_eq!(d.to_string(), "E6");
        assert_eq!(node, 2); // Bourbaki node 3
    }

    #[test]
    fn g2_from_a1() {
        let (d, node) = identify_ambient(&input("A1", vec![vec![1]], vec![3])).unwrap();
        assert_eq!(d.to_string(), "G2");
        assert_eq!(node, 0);
        // S³C² lands at the other node.
        let (d, node) = identify_ambient(&input("A1", vec![vec![3]], vec![1])).unwrap();
        assert_eq!(d.to_string(), "G2");
        assert_eq!(node, 1);
    }

    #[test]
    fn e8_f4_ambients() {
        let (d, node) =
            identify_ambient(&input("A7", vec![vec![0, 0, 1, 0, 0, 0, 0]], vec![1])).unwrap();
        assert_eq!(d.to_string(), "E8");
        assert_eq!(node, 1);
        let (d, node) = identify_ambient(&input("B3", vec![vec![0, 0, 1]], vec![1])).unwrap();
        assert_eq!(d.to_string(), "F4");
        assert_eq!(node, 3);
    }

    #[test]
    fn two_attach_nodes_is_a_cycle_error() {
        let r = build_augmented_matrix(&input("A4", vec![vec![0, 1, 1, 0]], vec![1]));
        assert!(matches!(r, Err(Error::Cycle(0))));
    }

    #[test]
    fn nu_pattern_mismatch() {
        let r = build_augmented_matrix(&input("A4", vec![vec![0, 0, 0, 0]], vec![1]));
        assert!(matches!(r, Err(Error::NuPattern(_))));
        let r = build_augmented_matrix(&input("A4", vec![vec![1, 0, 0, 0]], vec![0]));
        assert!(matches!(r, Err(Error::NuPattern(_))));
    }

    #[test]
    fn nu_length_mismatch_is_shape_error() {
        let r = build_augmented_matrix(&input("A4", vec![vec![1, 0, 0, 0]], vec![1, 1]));
        assert!(matches!(r, Err(Error::Shape(_))));
    }

    #[test]
    fn minor_failure_detected() {
        // (A4, ω₂, ν=(2)): a double bond into a branch is not finite type.
        let am = build_augmented_matrix(&input("A4", vec![vec![0, 1, 0, 0]], vec![2])).unwrap();
        let report = validate(&am);
        assert!(!report.valid());
        assert!(report
            .checks
            .iter()
            .any(|c| c.name == "principal_minors" && !c.pass));
        assert!(matches!(
            identify_ambient(&input("A4", vec![vec![0, 1, 0, 0]], vec![2])),
            Err(Error::ValidationFailed(_))
        ));
    }

    #[test]
    fn valid_e6_matrix_passes_all_checks() {
        let am =
            build_augmented_matrix(&input("A1xA4", vec![vec![1], vec![0, 1, 0, 0]], vec![1, 1]))
                .unwrap();
        let report = validate(&am);
        assert!(report.valid(), "{:?}", report.checks);
    }

    #[test]
    fn enumerate_a1() {
        let augs = enumerate_augmentations(&DynkinDiagram::parse("A1").unwrap());
        let ambients: Vec<String> = augs.iter().map(|a| a.ambient.to_string()).collect();
        // A2, two B2 orientations, two G2 orientations, and the split A1xA1.
        assert_eq!(augs.len(), 6);
        assert_eq!(ambients.iter().filter(|s| *s == "A2").count(), 1);
        assert_eq!(ambients.iter().filter(|s| *s == "B2").count(), 2);
        assert_eq!(ambients.iter().filter(|s| *s == "G2").count(), 2);
        assert_eq!(ambients.iter().filter(|s| *s == "A1xA1").count(), 1);
    }

    #[test]
    fn enumerate_a4_contains_expected() {
        let augs = enumerate_augmentations(&DynkinDiagram::parse("A4").unwrap());
        let find = |omega: Vec<i64>, nu: i64| {
            augs.iter()
                .find(|a| a.input.omega[0] == omega && a.input.nu[0] == nu)
                .map(|a| a.ambient.to_string())
        };
        assert_eq!(find(vec![1, 0, 0, 0], 1), Some("A5".into()));
        assert_eq!(find(vec![0, 1, 0, 0], 1), Some("D5".into()));
        assert_eq!(find(vec![1, 0, 0, 0], 2), Some("B5".into()));
        assert_eq!(find(vec![0, 1, 0, 0], 2), None);
        // Everything enumerated passes the minors check by construction.
        for a in &augs {
            let am = build_augmented_matrix(&a.input).unwrap();
            assert!(principal_minors_positive(&am.matrix));
        }
    }

    #[test]
    fn enumerate_a5_contains_e6() {
        let augs = enumerate_augmentations(&DynkinDiagram::parse("A5").unwrap());
        assert!(augs
            .iter()
            .any(|a| a.ambient.to_string() == "E6" && a.input.omega[0] == vec![0, 0, 1, 0, 0]));
    }

    #[test]
    fn round_trip_all_simple_types() {
        use crate::levirep::levi;
        use crate::recognize::node_orbit_under_automorphisms;
        let mut types: Vec<DynkinDiagram> = Vec::new();
        for n in 1..=8 {
            types.push(DynkinDiagram::simple(Family::A, n).unwrap());
        }
        for n in 2..=8 {
            types.push(DynkinDiagram::simple(Family::B, n).unwrap());
        }
        for n in 3..=8 {
            types.push(DynkinDiagram::simple(Family::C, n).unwrap());
        }
        for n in 4..=8 {
            types.push(DynkinDiagram::simple(Family::D, n).unwrap());
        }
        for n in 6..=8 {
            types.push(DynkinDiagram::simple(Family::E, n).unwrap());
        }
        types.push(DynkinDiagram::simple(Family::F, 4).unwrap());
        types.push(DynkinDiagram::simple(Family::G, 2).unwrap());

        for d in &types {
            let t = d.components[0];
            for node in 0..d.rank() {
                let ld = levi(d, node).unwrap();
                let mut coords = vec![0i64; d.rank()];
                coords[node] = -1;
                let omega = ld.restrict_per_component(&crate::rootsys::Root::new(coords));
                let inp = AugmentationInput {
                    diagram0: ld.diagram0.clone(),
                    omega,
                    nu: ld.nu().0,
                };
                let (ambient, rec_node) = identify_ambient(&inp)
                    .unwrap_or_else(|e| panic!("{d} node {node}: {e}"));
                assert_eq!(ambient.to_string(), d.to_string(), "{d} node {node}");
                let orbit = node_orbit_under_automorphisms(t, node);
                assert!(
                    orbit.contains(&rec_node),
                    "{d} node {node}: recovered {rec_node}, orbit {orbit:?}"
                );
            }
        }
    }

    #[test]
    fn empty_levi_round_trip() {
        // A1 node 1 deletes everything; the augmentation of the empty
        // diagram is A1 itself.
        let inp = AugmentationInput { diagram0: DynkinDiagram::empty(), omega: vec![], nu: vec![] };
        let (d, node) = identify_ambient(&inp).unwrap();
        assert_eq!(d.to_string(), "A1");
        assert_eq!(node, 0);
    }
}
