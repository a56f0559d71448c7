//! The full invariant suite: every structural property the library promises,
//! runnable as one deterministic pass.  Output is byte-stable for a fixed
//! seed and rank bound; all sampling goes through the seeded generator.

use crate::augment::{enumerate_augmentations, identify_ambient, AugmentationInput};
use crate::chevalley::{
    ad_power_vanishes, bracket, build_chevalley, generic_pair, grading_element, jacobi_holds,
    killing_form, orbit_weight_sums, orbit_dimension, AlgebraElement, ChevalleyBasis,
};
use crate::error::Error;
use crate::glorbits::{
    act, classify_u1_u2, construct_from_points, covariance_check, cross_ratio, orbit_dim_gl2sl,
    phi, point_config_invariant, random_gl2, random_pair, random_sl, wedge_power_form,
    PairClass, PointConfig, TwoFormPair,
};
use crate::gradation::{closed_symmetric, grade, level_zero_subsystem, order_of, zm_pieces};
use crate::levirep::{analyze, levi, twisted_affine_dim_check, weyl_dim};
use crate::recognize::{identify_cartan_type, node_orbit_under_automorphisms};
use crate::rng::SplitMix64;
use crate::rootsys::{build_root_system, DynkinDiagram, Root, RootSystem};
use crate::scalar::int;
use crate::tables;
use crate::{Rat, Rat64};
use serde_json::{json, Value};
use std::collections::HashMap;

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub seed: u64,
    pub max_rank: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { seed: 0, max_rank: 8 }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl CheckResult {
    fn ok(name: &str, detail: String) -> Self {
        Self { name: name.into(), pass: true, detail }
    }

    fn fail(name: &str, detail: String) -> Self {
        Self { name: name.into(), pass: false, detail }
    }
}

pub fn all_pass(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.pass)
}

pub fn report_json(results: &[CheckResult]) -> Value {
    json!({
        "checks": results
            .iter()
            .map(|r| json!({"name": r.name, "pass": r.pass, "detail": r.detail}))
            .collect::<Vec<_>>(),
        "pass": all_pass(results),
    })
}

/// The simply-laced marked diagrams whose generic-pair construction must
/// succeed (1-based nodes).  These are exactly the cases whose level-1
/// representation admits an sl₂-completion of the grading element, frozen
/// after exact computation; everything else reports `RegularityFailed`.
pub fn expected_generic_pair_cases() -> Vec<(&'static str, usize)> {
    vec![
        ("A1", 1),
        ("A3", 2),
        ("A5", 3),
        ("A7", 4),
        ("D4", 1),
        ("D4", 2),
        ("D4", 3),
        ("D4", 4),
        ("D5", 1),
        ("D5", 2),
        ("D5", 3),
        ("D6", 1),
        ("D6", 2),
        ("D6", 3),
        ("D6", 4),
        ("D6", 5),
        ("D6", 6),
        ("D7", 1),
        ("D7", 2),
        ("D7", 3),
        ("D7", 4),
        ("D8", 1),
        ("D8", 2),
        ("D8", 3),
        ("D8", 4),
        ("D8", 5),
        ("D8", 7),
        ("D8", 8),
        ("E6", 2),
        ("E6", 4),
        ("E7", 1),
        ("E7", 2),
        ("E7", 3),
        ("E7", 4),
        ("E7", 5),
        ("E7", 6),
        ("E7", 7),
        ("E8", 1),
        ("E8", 2),
        ("E8", 5),
        ("E8", 6),
        ("E8", 7),
        ("E8", 8),
    ]
}

struct Session {
    opts: VerifyOptions,
    bases: HashMap<String, ChevalleyBasis>,
    systems: HashMap<String, RootSystem<Rat>>,
}

impl Session {
    fn basis(&mut self, d: &DynkinDiagram) -> &ChevalleyBasis {
        self.bases
            .entry(d.to_string())
            .or_insert_with(|| build_chevalley(d).expect("finite type"))
    }

    fn system(&mut self, d: &DynkinDiagram) -> &RootSystem<Rat> {
        self.systems
            .entry(d.to_string())
            .or_insert_with(|| build_root_system(d).expect("finite type"))
    }

    fn rng(&self, tag: u64) -> SplitMix64 {
        SplitMix64::new(self.opts.seed ^ tag.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }
}

/// Names of all checks, in execution order.
pub const CHECK_NAMES: &[&str] = &[
    "root_counts",
    "weyl_invariance",
    "recognition",
    "gradations",
    "subsystems",
    "graded_pieces",
    "classification",
    "marks",
    "levi_pieces",
    "augment_round_trip",
    "embedding",
    "enumerate",
    "jacobi",
    "bracket_grading",
    "killing",
    "grading_element",
    "generic_pairs",
    "orbit_sums",
    "genericity_sampling",
    "nilpotency",
    "glorbits_pfaffian",
    "glorbits_covariance",
    "glorbits_points",
    "glorbits_classes",
    "glorbits_orbit_dims",
    "glorbits_cross_ratio",
    "twisted_affine_dims",
];

/// Run every check.  Results come back in a fixed order.
pub fn run(opts: &VerifyOptions) -> Vec<CheckResult> {
    run_named(opts, CHECK_NAMES)
}

/// Run a subset of checks by name, in the canonical order.
pub fn run_named(opts: &VerifyOptions, names: &[&str]) -> Vec<CheckResult> {
    let mut s = Session { opts: opts.clone(), bases: HashMap::new(), systems: HashMap::new() };
    CHECK_NAMES
        .iter()
        .filter(|n| names.contains(n))
        .map(|&name| match name {
            "root_counts" => check_root_counts(&mut s),
            "weyl_invariance" => check_weyl_invariance(&mut s),
            "recognition" => check_recognition(&mut s),
            "gradations" => check_gradations(&mut s),
            "subsystems" => check_subsystems(&mut s),
            "graded_pieces" => check_graded_pieces_table(),
            "classification" => check_classification_table(&s.opts),
            "marks" => check_marks_table(&s.opts),
            "levi_pieces" => check_levi_pieces(&mut s),
            "augment_round_trip" => check_augment_round_trip(&s.opts),
            "embedding" => check_embedding(),
            "enumerate" => check_enumerate(),
            "jacobi" => check_jacobi(&mut s),
            "bracket_grading" => check_bracket_grading(&mut s),
            "killing" => check_killing(&mut s),
            "grading_element" => check_grading_element(&mut s),
            "generic_pairs" => check_generic_pairs(&mut s),
            "orbit_sums" => check_orbit_sums(&mut s),
            "genericity_sampling" => check_genericity_sampling(&mut s),
            "nilpotency" => check_nilpotency(&mut s),
            "glorbits_pfaffian" => check_glorbits_pfaffian(&mut s),
            "glorbits_covariance" => check_glorbits_covariance(&mut s),
            "glorbits_points" => check_glorbits_points(&mut s),
            "glorbits_classes" => check_glorbits_classes(&mut s),
            "glorbits_orbit_dims" => check_glorbits_orbit_dims(&mut s),
            "glorbits_cross_ratio" => check_glorbits_cross_ratio(),
            "twisted_affine_dims" => check_twisted_affine_dims(),
            other => CheckResult::fail(other, "unknown check".into()),
        })
        .collect()
}

fn types(max_rank: usize) -> Vec<DynkinDiagram> {
    tables::simple_types(max_rank)
}

fn check_root_counts(s: &mut Session) -> CheckResult {
    const NAME: &str = "root_counts";
    let mut n = 0;
    for d in types(s.opts.max_rank) {
        let rs = s.system(&d);
        let t = d.components[0];
        if rs.roots.len() != t.num_roots() || rs.roots.len() + d.rank() != t.dim() {
            return CheckResult::fail(NAME, format!("{d}: {} roots", rs.roots.len()));
        }
        for i in 0..rs.num_positive {
            if !rs.roots[i].is_positive() || rs.roots[rs.neg_index(i)] != rs.roots[i].negated() {
                return CheckResult::fail(NAME, format!("{d}: root {i} sign structure"));
            }
        }
        n += 1;
    }
    CheckResult::ok(NAME, format!("{n} types match the classical dimension table"))
}

fn check_weyl_invariance(s: &mut Session) -> CheckResult {
    const NAME: &str = "weyl_invariance";
    let mut rng = s.rng(2);
    for d in types(s.opts.max_rank) {
        let rs = s.system(&d).clone();
        let nr = rs.roots.len();
        let exhaustive = d.rank() <= 4;
        let pairs: Vec<(usize, usize)> = if exhaustive {
            (0..nr).flat_map(|i| (0..nr).map(move |j| (i, j))).collect()
        } else {
            (0..2000)
                .map(|_| (rng.below(nr as u64) as usize, rng.below(nr as u64) as usize))
                .collect()
        };
        for (i, j) in pairs {
            for g in 0..d.rank() {
                let a = rs.reflect_root(&rs.roots[i], g);
                let b = rs.reflect_root(&rs.roots[j], g);
                if rs.ip_roots(&a, &b) != rs.ip_roots(&rs.roots[i], &rs.roots[j]) {
                    return CheckResult::fail(NAME, format!("{d} s_{g} ({i},{j})"));
                }
            }
        }
    }
    CheckResult::ok(NAME, "(sα, sβ) = (α, β) for all simple reflections".into())
}

fn check_recognition(s: &mut Session) -> CheckResult {
    const NAME: &str = "recognition";
    let mut rng = s.rng(3);
    for d in types(s.opts.max_rank) {
        let m = d.cartan_matrix();
        match identify_cartan_type(&m) {
            Ok(id) if id.diagram == d => {}
            other => {
                return CheckResult::fail(
                    NAME,
                    format!("{d}: {:?}", other.map(|i| i.diagram.to_string())),
                )
            }
        }
        // A seeded scrambling must identify to the same type.
        let n = d.rank();
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.below((i + 1) as u64) as usize);
        }
        let scrambled = crate::rootsys::CartanMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| m.entries[perm[i]][perm[j]]).collect())
                .collect(),
        };
        match identify_cartan_type(&scrambled) {
            Ok(id) if id.diagram == d => {}
            other => {
                return CheckResult::fail(
                    NAME,
                    format!("{d} scrambled: {:?}", other.map(|i| i.diagram.to_string())),
                )
            }
        }
    }
    CheckResult::ok(NAME, "canonical and scrambled matrices identify correctly".into())
}

fn check_gradations(s: &mut Session) -> CheckResult {
    const NAME: &str = "gradations";
    let mut order_six = Vec::new();
    let mut count = 0;
    for d in types(s.opts.max_rank) {
        let rs = s.system(&d).clone();
        for node in 0..d.rank() {
            let gr = match grade(&rs, node) {
                Ok(g) => g,
                Err(e) => return CheckResult::fail(NAME, format!("{d} node {node}: {e}")),
            };
            let total: usize = gr.levels.values().map(Vec::len).sum();
            if total + d.rank() != d.dim() {
                return CheckResult::fail(NAME, format!("{d} node {node}: dim mismatch"));
            }
            if gr.order != order_of(&rs, node).unwrap() {
                return CheckResult::fail(NAME, format!("{d} node {node}: order"));
            }
            if !(1..=6).contains(&gr.order) {
                return CheckResult::fail(NAME, format!("{d} node {node}: order {}", gr.order));
            }
            if gr.order == 6 {
                order_six.push((d.to_string(), node + 1));
            }
            for (&i, idxs) in &gr.levels {
                let mut negs: Vec<usize> = idxs.iter().map(|&k| rs.neg_index(k)).collect();
                negs.sort_unstable();
                if negs != gr.level(-i) {
                    return CheckResult::fail(NAME, format!("{d} node {node}: level {i}"));
                }
            }
            count += 1;
        }
    }
    if order_six != vec![("E8".to_string(), 4)] {
        return CheckResult::fail(NAME, format!("order 6 at {order_six:?}"));
    }
    CheckResult::ok(NAME, format!("{count} gradations partition correctly; order 6 only at E8 node 4"))
}

fn check_subsystems(s: &mut Session) -> CheckResult {
    const NAME: &str = "subsystems";
    for d in types(s.opts.max_rank) {
        let rs = s.system(&d).clone();
        for node in 0..d.rank() {
            let gr = grade(&rs, node).unwrap();
            let mut m = 1;
            while m <= gr.order {
                if gr.order % m == 0 {
                    let sub = level_zero_subsystem(&rs, &gr, m).unwrap();
                    if !closed_symmetric(&rs, &sub) {
                        return CheckResult::fail(NAME, format!("{d} node {node} m={m}"));
                    }
                }
                m += 1;
            }
            if gr.order >= 2 {
                let pieces = zm_pieces(&rs, &gr, gr.order).unwrap();
                let total: usize = pieces.values().map(Vec::len).sum();
                if total != rs.roots.len() {
                    return CheckResult::fail(NAME, format!("{d} node {node}: Z_m partition"));
                }
            }
        }
    }
    // The spot checks from the termination analysis.
    let e8 = DynkinDiagram::parse("E8").unwrap();
    let rs = s.system(&e8).clone();
    let gr = grade(&rs, 1).unwrap();
    let sub = level_zero_subsystem(&rs, &gr, 3).unwrap();
    if sub.len() != 72 {
        return CheckResult::fail(NAME, format!("E8 node 2 m=3 has {} roots", sub.len()));
    }
    match crate::gradation::borel_de_siebenthal(&rs, 0) {
        Ok(sub) if sub.to_string() == "D8" => {}
        other => return CheckResult::fail(NAME, format!("E8 BdS: {other:?}")),
    }
    CheckResult::ok(NAME, "divisor subsystems closed and symmetric".into())
}

fn check_graded_pieces_table() -> CheckResult {
    const NAME: &str = "graded_pieces";
    let rows = match tables::graded_pieces_table() {
        Ok(r) => r,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    let expect: Vec<(&str, usize, i64, Vec<usize>)> = vec![
        ("A1xA7", 64, 1, vec![1]),
        ("A8", 64, 1, vec![8]),
        ("D8", 64, 1, vec![28]),
        ("E6", 36, 2, vec![20, 1]),
        ("E7", 49, 2, vec![35, 7]),
        ("E8", 64, 3, vec![56, 28, 8]),
    ];
    for (g, g0, order, dims) in expect {
        let Some(row) = rows.iter().find(|r| r.g == g) else {
            return CheckResult::fail(NAME, format!("missing row {g}"));
        };
        let piece_dims: Vec<usize> = row.pieces.iter().map(|p| p.1).collect();
        if row.g0_dim != g0 || row.order != order || piece_dims != dims {
            return CheckResult::fail(
                NAME,
                format!("{g}: g0 {} order {} dims {piece_dims:?}", row.g0_dim, row.order),
            );
        }
    }
    CheckResult::ok(NAME, "graded pieces match, E8 = 64/56/28/8 at order 3".into())
}

fn check_classification_table(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "classification";
    let computed = match tables::classification_table(opts.max_rank.min(8)) {
        Ok(c) => c,
        Err(e) => return CheckResult::fail(NAME, e.to_string()),
    };
    let covered: std::collections::HashSet<String> =
        types(opts.max_rank.min(8)).iter().map(|d| d.to_string()).collect();
    let expected: Vec<tables::ClassificationRow> = tables::classification_expected()
        .into_iter()
        .filter(|r| covered.contains(&r.g))
        .collect();
    if computed.len() != expected.len() {
        return CheckResult::fail(
            NAME,
            format!("{} computed rows vs {} expected", computed.len(), expected.len()),
        );
    }
    for (c, e) in computed.iter().zip(&expected) {
        if c != e {
            return CheckResult::fail(NAME, format!("{} node {} differs", e.g, e.node));
        }
    }
    CheckResult::ok(NAME, format!("{} classification rows match", expected.len()))
}

fn check_marks_table(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "marks";
    let rows: HashMap<String, Vec<i64>> =
        match tables::marks_table(opts.max_rank.min(8)) {
            Ok(r) => r.into_iter().collect(),
            Err(e) => return CheckResult::fail(NAME, e.to_string()),
        };
    let expect: Vec<(&str, Vec<i64>)> = vec![
        ("A8", vec![1; 8]),
        ("B8", vec![1, 2, 2, 2, 2, 2, 2, 2]),
        ("C8", vec![2, 2, 2, 2, 2, 2, 2, 1]),
        ("D8", vec![1, 2, 2, 2, 2, 2, 1, 1]),
        ("E6", vec![1, 2, 2, 3, 2, 1]),
        ("E7", vec![2, 2, 3, 4, 3, 2, 1]),
        ("E8", vec![2, 3, 4, 6, 5, 4, 3, 2]),
        ("F4", vec![2, 3, 4, 2]),
        ("G2", vec![3, 2]),
    ];
    for (g, marks) in expect {
        match rows.get(g) {
            Some(found) if *found == marks => {}
            Some(found) => return CheckResult::fail(NAME, format!("{g}: {found:?}")),
            // Classical rows above the rank bound are simply absent.
            None if !g.starts_with(['E', 'F', 'G']) => {}
            None => return CheckResult::fail(NAME, format!("{g} missing")),
        }
    }
    let mut sixes = 0;
    for marks in rows.values() {
        sixes += marks.iter().filter(|&&m| m == 6).count();
    }
    if sixes != 1 {
        return CheckResult::fail(NAME, format!("mark 6 appears {sixes} times"));
    }
    CheckResult::ok(NAME, "highest-root marks match; mark 6 only at E8 node 4".into())
}

fn check_levi_pieces(s: &mut Session) -> CheckResult {
    const NAME: &str = "levi_pieces";
    let mut pieces = 0;
    for d in types(s.opts.max_rank) {
        for node in 0..d.rank() {
            let report = match analyze::<Rat64>(&d, node) {
                Ok(r) => r,
                Err(e) => return CheckResult::fail(NAME, format!("{d} node {node}: {e}")),
            };
            let nu = report.levi.nu();
            if !nu.well_formed() || nu.0.contains(&0) {
                return CheckResult::fail(NAME, format!("{d} node {node}: ν = {:?}", nu.0));
            }
            for p in &report.pieces {
                match weyl_dim(&report.levi.diagram0, &p.highest_weight) {
                    Ok(dim) if dim as usize == p.dim => {}
                    other => {
                        return CheckResult::fail(
                            NAME,
                            format!("{d} node {node} level {}: weyl_dim {other:?} vs {}", p.level, p.dim),
                        )
                    }
                }
                if p.level == -1 && p.highest_weight != report.levi.minus_alpha0_weight() {
                    return CheckResult::fail(NAME, format!("{d} node {node}: -α₀ weight"));
                }
                pieces += 1;
            }
        }
    }
    CheckResult::ok(
        NAME,
        format!("{pieces} graded pieces are multiplicity free with matching Weyl dimensions"),
    )
}

fn check_augment_round_trip(opts: &VerifyOptions) -> CheckResult {
    const NAME: &str = "augment_round_trip";
    let mut count = 0;
    for d in types(opts.max_rank) {
        let t = d.components[0];
        for node in 0..d.rank() {
            let ld = levi(&d, node).unwrap();
            let mut coords = vec![0i64; d.rank()];
            coords[node] = -1;
            let omega = ld.restrict_per_component(&Root::new(coords));
            let input =
                AugmentationInput { diagram0: ld.diagram0.clone(), omega, nu: ld.nu().0 };
            match identify_ambient(&input) {
                Ok((amb, rec)) if amb == d => {
                    if !node_orbit_under_automorphisms(t, node).contains(&rec) {
                        return CheckResult::fail(
                            NAME,
                            format!("{d} node {node}: recovered node {rec}"),
                        );
                    }
                }
                other => {
                    return CheckResult::fail(NAME, format!("{d} node {node}: {other:?}"))
                }
            }
            count += 1;
        }
    }
    CheckResult::ok(NAME, format!("{count}/{count} marked diagrams recovered"))
}

fn check_embedding() -> CheckResult {
    const NAME: &str = "embedding";
    // Weight restriction and the κ moment-map identity in the identified
    // ambient algebra, on a spread of diagram shapes.
    let mut cases: Vec<(DynkinDiagram, usize)> = Vec::new();
    for name in ["A2", "A3", "B3", "C3", "D4", "F4", "G2", "E6"] {
        let d = DynkinDiagram::parse(name).unwrap();
        for node in 0..d.rank() {
            cases.push((d.clone(), node));
        }
    }
    cases.push((DynkinDiagram::parse("E8").unwrap(), 1));
    for (d, node) in cases {
        let ld = levi(&d, node).unwrap();
        let mut coords = vec![0i64; d.rank()];
        coords[node] = -1;
        let input = AugmentationInput {
            diagram0: ld.diagram0.clone(),
            omega: ld.restrict_per_component(&Root::new(coords)),
            nu: ld.nu().0,
        };
        match crate::chevalley::verify_embedding(&input) {
            Ok(report) if report.pass() => {}
            other => {
                return CheckResult::fail(
                    NAME,
                    format!("{d} node {node}: {other:?}"),
                )
            }
        }
    }
    CheckResult::ok(NAME, "α₀ weight and κ moment-map identity hold in the ambient".into())
}

fn check_enumerate() -> CheckResult {
    const NAME: &str = "enumerate";
    let a1 = enumerate_augmentations(&DynkinDiagram::parse("A1").unwrap());
    let ambients: Vec<String> = a1.iter().map(|a| a.ambient.to_string()).collect();
    if a1.len() != 6
        || ambients.iter().filter(|s| *s == "B2").count() != 2
        || ambients.iter().filter(|s| *s == "G2").count() != 2
    {
        return CheckResult::fail(NAME, format!("A1 augmentations: {ambients:?}"));
    }
    let a4 = enumerate_augmentations(&DynkinDiagram::parse("A4").unwrap());
    let has = |omega: Vec<i64>, nu: i64, amb: &str| {
        a4.iter()
            .any(|a| a.input.omega[0] == omega && a.input.nu[0] == nu && a.ambient.to_string() == amb)
    };
    if !has(vec![1, 0, 0, 0], 1, "A5")
        || !has(vec![0, 1, 0, 0], 1, "D5")
        || !has(vec![1, 0, 0, 0], 2, "B5")
    {
        return CheckResult::fail(NAME, "A4 augmentation set incomplete".into());
    }
    let a5 = enumerate_augmentations(&DynkinDiagram::parse("A5").unwrap());
    if !a5
        .iter()
        .any(|a| a.ambient.to_string() == "E6" && a.input.omega[0] == vec![0, 0, 1, 0, 0])
    {
        return CheckResult::fail(NAME, "A5 misses the E6 augmentation".into());
    }
    CheckResult::ok(NAME, "A1/A4/A5 augmentation sets as classified".into())
}

fn check_jacobi(s: &mut Session) -> CheckResult {
    const NAME: &str = "jacobi";
    let mut rng = s.rng(11);
    let mut exhaustive = 0usize;
    let mut sampled = 0usize;
    for d in types(s.opts.max_rank) {
        let sc = s.basis(&d);
        let dim = sc.dim();
        if d.rank() <= 4 {
            for a in 0..dim {
                for b in a..dim {
                    for c in b..dim {
                        if !jacobi_holds(sc, a, b, c) {
                            return CheckResult::fail(NAME, format!("{d} ({a},{b},{c})"));
                        }
                    }
                }
            }
            exhaustive += 1;
        } else {
            let samples = if d.rank() >= 7 { 100_000 } else { 30_000 };
            for _ in 0..samples {
                let a = rng.below(dim as u64) as usize;
                let b = rng.below(dim as u64) as usize;
                let c = rng.below(dim as u64) as usize;
                if !jacobi_holds(sc, a, b, c) {
                    return CheckResult::fail(NAME, format!("{d} ({a},{b},{c})"));
                }
                sampled += 1;
            }
        }
    }
    CheckResult::ok(
        NAME,
        format!("exhaustive on {exhaustive} small types, {sampled} sampled triples elsewhere"),
    )
}

fn check_bracket_grading(s: &mut Session) -> CheckResult {
    const NAME: &str = "bracket_grading";
    for d in types(s.opts.max_rank) {
        let sc = s.basis(&d);
        // Structure constants respect root addition, so levels add for any
        // marking: check [x_α, x_β] lands at level(α)+level(β) directly.
        for node in 0..d.rank() {
            for i in 0..sc.rs.roots.len() {
                for j in 0..sc.rs.roots.len() {
                    if sc.n_constant(i, j) != 0 {
                        let la = sc.rs.roots[i].coords[node];
                        let lb = sc.rs.roots[j].coords[node];
                        let sum: Vec<i64> = sc.rs.roots[i]
                            .coords
                            .iter()
                            .zip(&sc.rs.roots[j].coords)
                            .map(|(a, b)| a + b)
                            .collect();
                        if sum[node] != la + lb {
                            return CheckResult::fail(NAME, format!("{d} node {node}"));
                        }
                    }
                }
            }
        }
    }
    CheckResult::ok(NAME, "[g_i, g_j] ⊆ g_{i+j} for every gradation".into())
}

fn check_killing(s: &mut Session) -> CheckResult {
    const NAME: &str = "killing";
    // Anchor: κ(h, h) = 8 in sl₂.
    let a1 = DynkinDiagram::parse("A1").unwrap();
    {
        let sc = s.basis(&a1);
        let h = AlgebraElement::<Rat64>::single(0, int(1));
        if killing_form(sc, &h, &h) != int::<Rat64>(8) {
            return CheckResult::fail(NAME, "κ(h,h) ≠ 8 in sl₂".into());
        }
    }
    for d in types(s.opts.max_rank) {
        let sc = s.basis(&d);
        let table = sc.killing_table().clone();
        let rank = d.rank();
        let dim = sc.dim();
        // Root-space orthogonality of the honest trace form.
        for i in 0..sc.rs.roots.len() {
            for j in 0..sc.rs.roots.len() {
                let nonzero = table[rank + i][rank + j] != 0;
                if nonzero != (sc.rs.neg_index(i) == j) {
                    return CheckResult::fail(NAME, format!("{d}: root pair ({i},{j})"));
                }
            }
            for h in 0..rank {
                if table[h][rank + i] != 0 {
                    return CheckResult::fail(NAME, format!("{d}: κ(h, x) ≠ 0"));
                }
            }
        }
        // Per gradation: κ(g_i, g_j) = 0 unless i + j = 0, and the pairing
        // on level i × level -i is nondegenerate.
        let rs = s.system(&d).clone();
        for node in 0..rs.rank() {
            let gr = grade(&rs, node).unwrap();
            let level_of = |b: usize| -> i64 {
                if b < rank {
                    0
                } else {
                    rs.roots[b - rank].coords[node]
                }
            };
            for a in 0..dim {
                for b in 0..dim {
                    if table[a][b] != 0 && level_of(a) + level_of(b) != 0 {
                        return CheckResult::fail(
                            NAME,
                            format!("{d} node {node}: κ across levels {} {}", level_of(a), level_of(b)),
                        );
                    }
                }
            }
            for (&lvl, idxs) in &gr.levels {
                if lvl <= 0 {
                    continue;
                }
                let neg: Vec<usize> = gr.level(-lvl).to_vec();
                let block: Vec<Vec<num_bigint::BigInt>> = idxs
                    .iter()
                    .map(|&i| {
                        neg.iter()
                            .map(|&j| num_bigint::BigInt::from(table[rank + i][rank + j]))
                            .collect()
                    })
                    .collect();
                if crate::linalg::rank_int(&block) != idxs.len() {
                    return CheckResult::fail(
                        NAME,
                        format!("{d} node {node}: κ degenerate on level {lvl}"),
                    );
                }
            }
        }
    }
    CheckResult::ok(NAME, "κ orthogonality and level-pairing nondegeneracy hold".into())
}

fn check_grading_element(s: &mut Session) -> CheckResult {
    const NAME: &str = "grading_element";
    for d in types(s.opts.max_rank) {
        let rs: RootSystem<Rat> = build_root_system(&d).unwrap();
        let sc = s.basis(&d);
        for node in 0..d.rank() {
            let gr = grade(&rs, node).unwrap();
            let c = grading_element(sc, &gr);
            for k in 0..sc.rs.roots.len() {
                let x = sc.root_vector::<Rat>(k);
                let br = bracket(sc, &c, &x).unwrap();
                if br != x.scaled(&int(sc.rs.roots[k].coords[node])) {
                    return CheckResult::fail(NAME, format!("{d} node {node} root {k}"));
                }
            }
        }
    }
    CheckResult::ok(NAME, "[c, x_α] = level(α)·x_α for every gradation".into())
}

fn check_generic_pairs(s: &mut Session) -> CheckResult {
    const NAME: &str = "generic_pairs";
    let mut ok_cases = Vec::new();
    for d in types(s.opts.max_rank) {
        if !d.is_simply_laced() {
            continue;
        }
        let rs: RootSystem<Rat> = build_root_system(&d).unwrap();
        for node in 0..d.rank() {
            let gr = grade(&rs, node).unwrap();
            let sc = s.basis(&d);
            match generic_pair(sc, &gr) {
                Ok(gp) => {
                    let br = bracket(sc, &gp.x, &gp.y).unwrap();
                    if br != grading_element(sc, &gr) {
                        return CheckResult::fail(NAME, format!("{d} node {node}: [X,Y] ≠ c"));
                    }
                    match orbit_dimension(sc, &gr, &gp.x) {
                        Ok(od) if od == gr.level(1).len() => {}
                        other => {
                            return CheckResult::fail(
                                NAME,
                                format!("{d} node {node}: orbit dim {other:?}"),
                            )
                        }
                    }
                    ok_cases.push((d.to_string(), node + 1));
                }
                Err(Error::RegularityFailed) => {}
                Err(e) => return CheckResult::fail(NAME, format!("{d} node {node}: {e}")),
            }
        }
    }
    let covered: std::collections::HashSet<String> =
        types(s.opts.max_rank).iter().map(|d| d.to_string()).collect();
    let expected: Vec<(String, usize)> = expected_generic_pair_cases()
        .into_iter()
        .filter(|(g, _)| covered.contains(*g))
        .map(|(g, n)| (g.to_string(), n))
        .collect();
    if ok_cases != expected {
        return CheckResult::fail(
            NAME,
            format!("solvable set changed: got {ok_cases:?}"),
        );
    }
    CheckResult::ok(
        NAME,
        format!("{} generic pairs bracket to c with full orbit dimension", ok_cases.len()),
    )
}

fn check_orbit_sums(s: &mut Session) -> CheckResult {
    const NAME: &str = "orbit_sums";
    let mut count = 0;
    for d in types(s.opts.max_rank) {
        if !d.is_simply_laced() {
            continue;
        }
        let rs: RootSystem<Rat> = build_root_system(&d).unwrap();
        for node in 0..d.rank() {
            let gr = grade(&rs, node).unwrap();
            let sc = s.basis(&d);
            let rep = orbit_weight_sums(sc, &gr).unwrap();
            if !rep.sums_pass || !rep.restriction_pass {
                return CheckResult::fail(NAME, format!("{d} node {node}"));
            }
            count += 1;
        }
    }
    CheckResult::ok(NAME, format!("extremal-weight sums verified on {count} markings"))
}

fn check_genericity_sampling(s: &mut Session) -> CheckResult {
    const NAME: &str = "genericity_sampling";
    let mut rng = s.rng(17);
    let mut cases = 0;
    for d in types(s.opts.max_rank) {
        let rs: RootSystem<Rat> = build_root_system(&d).unwrap();
        for node in 0..d.rank() {
            let gr = grade(&rs, node).unwrap();
            let levels: Vec<i64> = gr
                .levels
                .keys()
                .copied()
                .filter(|&l| l != 0 && !gr.level(l).is_empty())
                .collect();
            for lvl in levels {
                let sc = s.basis(&d);
                let target = gr.level(lvl).len();
                let mut found = false;
                for _ in 0..16 {
                    let mut v = AlgebraElement::<Rat>::zero();
                    for &k in gr.level(lvl) {
                        v.add_term(sc.root_basis_index(k), int(rng.range_i64(-9, 9)));
                    }
                    if v.is_zero() {
                        continue;
                    }
                    if orbit_dimension(sc, &gr, &v).unwrap() == target {
                        found = true;
                        break;
                    }
                }
                if !found {
                    return CheckResult::fail(
                        NAME,
                        format!("{d} node {node} level {lvl}: no generic sample in 16 tries"),
                    );
                }
                cases += 1;
            }
        }
    }
    CheckResult::ok(NAME, format!("open orbit reached by sampling in {cases} graded pieces"))
}

fn check_nilpotency(s: &mut Session) -> CheckResult {
    const NAME: &str = "nilpotency";
    let mut rng = s.rng(19);
    for d in types(s.opts.max_rank) {
        let rs: RootSystem<Rat64> = build_root_system(&d).unwrap();
        for node in 0..d.rank() {
            let gr = grade(&rs, node).unwrap();
            // One sampled level per marking keeps this affordable.
            let levels: Vec<i64> =
                gr.levels.keys().copied().filter(|&l| l != 0 && !gr.level(l).is_empty()).collect();
            let lvl = levels[rng.below(levels.len() as u64) as usize];
            let sc = s.basis(&d);
            let mut v = AlgebraElement::<Rat64>::zero();
            for &k in gr.level(lvl) {
                v.add_term(sc.root_basis_index(k), int(rng.range_i64(-4, 4)));
            }
            let bound = (2 * gr.order / lvl.abs()).unsigned_abs() as usize + 1;
            if !ad_power_vanishes(sc, &v, bound).unwrap() {
                return CheckResult::fail(NAME, format!("{d} node {node} level {lvl}"));
            }
        }
    }
    CheckResult::ok(NAME, "(ad v)^{2n/|k|+1} = 0 for sampled level vectors".into())
}

fn check_glorbits_pfaffian(s: &mut Session) -> CheckResult {
    const NAME: &str = "glorbits_pfaffian";
    let mut rng = s.rng(23);
    for m in 1..=3usize {
        for i in 0..100 {
            let p: TwoFormPair<Rat64> = random_pair(m, 2 * m, 6, &mut rng).unwrap();
            if phi(&p).unwrap() != wedge_power_form(&p).unwrap() {
                return CheckResult::fail(NAME, format!("m={m} instance {i}"));
            }
        }
    }
    CheckResult::ok(NAME, "Pfaffian pencil equals the wedge-power oracle (300 instances)".into())
}

fn check_glorbits_covariance(s: &mut Session) -> CheckResult {
    const NAME: &str = "glorbits_covariance";
    let mut rng = s.rng(29);
    for m in 1..=4usize {
        for i in 0..100 {
            let p: TwoFormPair<Rat64> = random_pair(m, 2 * m, 4, &mut rng).unwrap();
            let a = random_gl2::<Rat64>(&mut rng);
            let g = random_sl::<Rat64>(2 * m, 14, &mut rng);
            match covariance_check(&p, &a, &g) {
                Ok(true) => {}
                other => return CheckResult::fail(NAME, format!("m={m} instance {i}: {other:?}")),
            }
        }
    }
    CheckResult::ok(NAME, "covariance identity holds (400 instances)".into())
}

fn check_glorbits_points(s: &mut Session) -> CheckResult {
    const NAME: &str = "glorbits_points";
    let mut rng = s.rng(31);
    for m in 1..=4usize {
        for i in 0..25 {
            let pts = PointConfig::new(
                (0..m)
                    .map(|_| {
                        if rng.below(6) == 0 {
                            (int::<Rat64>(1), int(0))
                        } else {
                            (
                                int::<Rat64>(rng.range_i64(-6, 6)),
                                int(rng.small_nonzero(4)),
                            )
                        }
                    })
                    .collect(),
            )
            .unwrap();
            let pair = construct_from_points(&pts).unwrap();
            match point_config_invariant(&pair) {
                Ok(rec) if rec == pts.canonical() => {}
                other => {
                    return CheckResult::fail(
                        NAME,
                        format!("m={m} instance {i}: {other:?} vs {:?}", pts.canonical()),
                    )
                }
            }
        }
    }
    let zero: TwoFormPair<Rat64> = TwoFormPair::zero_even(2);
    if !matches!(point_config_invariant(&zero), Err(Error::Degenerate)) {
        return CheckResult::fail(NAME, "zero pair not reported degenerate".into());
    }
    CheckResult::ok(NAME, "point-configuration round trip exact (100 instances)".into())
}

fn check_glorbits_classes(s: &mut Session) -> CheckResult {
    const NAME: &str = "glorbits_classes";
    let mut rng = s.rng(37);
    for m in 1..=2usize {
        let n = 2 * m + 1;
        // A U1 witness and a random pair.
        let mut m1 = vec![vec![int::<Rat64>(0); n]; n];
        m1[0][1] = int(1);
        m1[1][0] = int(-1);
        let u1 = TwoFormPair::new(m, n, m1, vec![vec![int::<Rat64>(0); n]; n]).unwrap();
        let rnd: TwoFormPair<Rat64> = random_pair(m, n, 4, &mut rng).unwrap();
        for pair in [u1, rnd] {
            let class = classify_u1_u2(&pair).unwrap();
            for i in 0..50 {
                let a = random_gl2::<Rat64>(&mut rng);
                let g = random_sl::<Rat64>(n, 12, &mut rng);
                let moved = act(&pair, &a, &g).unwrap();
                if classify_u1_u2(&moved).unwrap() != class {
                    return CheckResult::fail(NAME, format!("m={m} translate {i}"));
                }
            }
        }
    }
    CheckResult::ok(NAME, "U1/U2 constant on 200 seeded group translates".into())
}

fn check_glorbits_orbit_dims(s: &mut Session) -> CheckResult {
    const NAME: &str = "glorbits_orbit_dims";
    let mut rng = s.rng(41);
    let p: TwoFormPair<Rat64> = random_pair(1, 3, 5, &mut rng).unwrap();
    match orbit_dim_gl2sl(&p) {
        Ok(6) => {}
        other => return CheckResult::fail(NAME, format!("m=1: {other:?}")),
    }
    let n = 9;
    let mut m1 = vec![vec![int::<Rat64>(0); n]; n];
    let mut m2 = vec![vec![int::<Rat64>(0); n]; n];
    for i in 0..4 {
        m1[2 * i][2 * i + 1] = int(1);
        m1[2 * i + 1][2 * i] = int(-1);
        m2[2 * i + 1][2 * i + 2] = int(1);
        m2[2 * i + 2][2 * i + 1] = int(-1);
    }
    let witness = TwoFormPair::new(4, n, m1, m2).unwrap();
    if classify_u1_u2(&witness).unwrap() != PairClass::U2 {
        return CheckResult::fail(NAME, "m=4 witness not in U2".into());
    }
    match orbit_dim_gl2sl(&witness) {
        Ok(72) => {}
        other => return CheckResult::fail(NAME, format!("m=4 witness: {other:?}")),
    }
    CheckResult::ok(NAME, "m=1 reaches 6; the m=4 U2 witness reaches 72".into())
}

fn check_glorbits_cross_ratio() -> CheckResult {
    const NAME: &str = "glorbits_cross_ratio";
    let mk = |x: i64| {
        PointConfig::new(vec![
            (int::<Rat64>(0), int(1)),
            (int(1), int(0)),
            (int(1), int(1)),
            (int(x), int(1)),
        ])
        .unwrap()
    };
    let c2 = cross_ratio(&mk(2).points).unwrap();
    let c3 = cross_ratio(&mk(3).points).unwrap();
    if c2 == c3 {
        return CheckResult::fail(NAME, "cross-ratios coincide".into());
    }
    let p2 = construct_from_points(&mk(2)).unwrap().pad_to_odd().unwrap();
    let p3 = construct_from_points(&mk(3)).unwrap().pad_to_odd().unwrap();
    let d2 = orbit_dim_gl2sl(&p2).unwrap();
    let d3 = orbit_dim_gl2sl(&p3).unwrap();
    if d2 != d3 || d2 >= 72 {
        return CheckResult::fail(NAME, format!("orbit dims {d2} vs {d3}"));
    }
    let i2 = point_config_invariant(&construct_from_points(&mk(2)).unwrap()).unwrap();
    let i3 = point_config_invariant(&construct_from_points(&mk(3)).unwrap()).unwrap();
    if i2 == i3 {
        return CheckResult::fail(NAME, "invariants coincide".into());
    }
    CheckResult::ok(
        NAME,
        format!("equal orbit dimension {d2} with distinct moduli invariants"),
    )
}

fn check_twisted_affine_dims() -> CheckResult {
    const NAME: &str = "twisted_affine_dims";
    let cases = twisted_affine_dim_check();
    for c in &cases {
        if !c.pass {
            return CheckResult::fail(NAME, format!("{}: {} ≠ {}", c.name, c.computed, c.expected));
        }
    }
    CheckResult::ok(NAME, format!("{} decompositions verified arithmetically", cases.len()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_suite_passes() {
        let opts = VerifyOptions { seed: 0, max_rank: 3 };
        let results = run(&opts);
        for r in &results {
            assert!(r.pass, "{}: {}", r.name, r.detail);
        }
    }

    #[test]
    fn reports_are_deterministic() {
        let opts = VerifyOptions { seed: 0, max_rank: 2 };
        let a = serde_json::to_string(&report_json(&run(&opts))).unwrap();
        let b = serde_json::to_string(&report_json(&run(&opts))).unwrap();
        assert_eq!(a, b);
    }
}
