//! Acceptance suite: one test per criterion, each printing a pass line.
//! Expected values are frozen literals; where a criterion rests on an
//! independent oracle (wedge-power expansion, classical dimension counts)
//! the oracle is exercised inside the corresponding check.

use dynkin_forge_core::gradation::grade;
use dynkin_forge_core::levirep::twisted_affine_dim_check;
use dynkin_forge_core::rootsys::{build_root_system, DynkinDiagram};
use dynkin_forge_core::verify::{run, run_named, CheckResult, VerifyOptions};
use dynkin_forge_core::{tables, Rat64};
use std::time::Instant;

fn opts() -> VerifyOptions {
    VerifyOptions { seed: 0, max_rank: 8 }
}

fn assert_all_pass(criterion: &str, results: &[CheckResult]) {
    for r in results {
        assert!(r.pass, "{criterion}: check {} failed: {}", r.name, r.detail);
    }
}

#[test]
fn criterion_01_graded_pieces_regression() {
    let start = Instant::now();
    // The five simple rows: sl_{n+1}, so_{2n}, e6, e7, e8.
    for n in 1..=8usize {
        let d = DynkinDiagram::parse(&format!("A{n}")).unwrap();
        let rs = build_root_system::<Rat64>(&d).unwrap();
        let gr = grade(&rs, 0).unwrap();
        assert_eq!(gr.order, 1, "A{n}");
        assert_eq!(gr.level(-1).len(), n, "A{n}");
        assert_eq!(gr.dim_level(&rs, 0), n * n, "A{n}: g0 = gl_n");
    }
    for n in 4..=8usize {
        let d = DynkinDiagram::parse(&format!("D{n}")).unwrap();
        let rs = build_root_system::<Rat64>(&d).unwrap();
        let gr = grade(&rs, n - 1).unwrap();
        assert_eq!(gr.order, 1, "D{n}");
        assert_eq!(gr.level(-1).len(), n * (n - 1) / 2, "D{n}: Λ²C^n");
        assert_eq!(gr.dim_level(&rs, 0), n * n, "D{n}: g0 = gl_n");
    }
    let e_rows: [(&str, usize, i64, &[usize]); 3] = [
        ("E6", 36, 2, &[20, 1]),
        ("E7", 49, 2, &[35, 7]),
        ("E8", 64, 3, &[56, 28, 8]),
    ];
    for (name, g0, order, dims) in e_rows {
        let d = DynkinDiagram::parse(name).unwrap();
        let rs = build_root_system::<Rat64>(&d).unwrap();
        let gr = grade(&rs, 1).unwrap();
        assert_eq!(gr.order, order, "{name}");
        assert_eq!(gr.dim_level(&rs, 0), g0, "{name}");
        for (i, &dim) in dims.iter().enumerate() {
            assert_eq!(gr.level(-(i as i64) - 1).len(), dim, "{name} level -{}", i + 1);
        }
    }
    // Labels, through the table generator.
    let rows = tables::graded_pieces_table().unwrap();
    let e8 = rows.iter().find(|r| r.g == "E8").unwrap();
    assert_eq!(
        e8.pieces,
        vec![
            ("Λ^3C^8".to_string(), 56),
            ("Λ^6C^8".to_string(), 28),
            ("C^8".to_string(), 8)
        ]
    );
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 took {elapsed:?}");
    println!("[PASS] criterion 1: graded-piece labels and dimensions exact ({elapsed:?})");
}

#[test]
fn criterion_02_classification_regression() {
    let start = Instant::now();
    let computed = tables::classification_table(8).unwrap();
    let expected = tables::classification_expected();
    assert_eq!(computed.len(), expected.len());
    for (c, e) in computed.iter().zip(&expected) {
        assert_eq!(c, e, "row {} node {}", e.g, e.node);
    }
    let f4 = computed.iter().find(|r| r.g == "F4" && r.node == 3).unwrap();
    assert_eq!(f4.nu, vec![1, 2]);
    assert_eq!(f4.levi, "A1xA2");
    let g2 = computed.iter().find(|r| r.g == "G2" && r.node == 1).unwrap();
    assert_eq!(g2.nu, vec![3]);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "criterion 2 took {elapsed:?}");
    println!(
        "[PASS] criterion 2: classification regression, {} rows exact ({elapsed:?})",
        expected.len()
    );
}

#[test]
fn criterion_03_marks_regression() {
    let rows: std::collections::HashMap<String, Vec<i64>> =
        tables::marks_table(8).unwrap().into_iter().collect();
    // Family patterns, frozen from the printed diagrams.
    for n in 1..=8usize {
        assert_eq!(rows[&format!("A{n}")], vec![1; n]);
    }
    for n in 2..=8usize {
        let mut b = vec![2i64; n];
        b[0] = 1;
        assert_eq!(rows[&format!("B{n}")], b);
    }
    for n in 3..=8usize {
        let mut c = vec![2i64; n];
        c[n - 1] = 1;
        assert_eq!(rows[&format!("C{n}")], c);
    }
    for n in 4..=8usize {
        let mut d = vec![2i64; n];
        d[0] = 1;
        d[n - 2] = 1;
        d[n - 1] = 1;
        assert_eq!(rows[&format!("D{n}")], d);
    }
    assert_eq!(rows["E6"], vec![1, 2, 2, 3, 2, 1]);
    assert_eq!(rows["E7"], vec![2, 2, 3, 4, 3, 2, 1]);
    assert_eq!(rows["E8"], vec![2, 3, 4, 6, 5, 4, 3, 2]);
    assert_eq!(rows["F4"], vec![2, 3, 4, 2]);
    assert_eq!(rows["G2"], vec![3, 2]);
    let mut sixes = Vec::new();
    for (g, marks) in &rows {
        for (i, &m) in marks.iter().enumerate() {
            assert!((1..=6).contains(&m), "{g}");
            if m == 6 {
                sixes.push((g.clone(), i + 1));
            }
        }
    }
    assert_eq!(sixes, vec![("E8".to_string(), 4)]);
    println!("[PASS] criterion 3: highest-root marks exact; max mark 6 only at E8 node 4");
}

#[test]
fn criterion_04_augmentation_round_trip() {
    let results = run_named(&opts(), &["augment_round_trip", "embedding"]);
    assert_all_pass("criterion 4", &results);
    println!("[PASS] criterion 4: {}", results[0].detail);
}

#[test]
fn criterion_05_chevalley_soundness() {
    let start = Instant::now();
    let results = run_named(&opts(), &["jacobi", "bracket_grading", "killing"]);
    assert_all_pass("criterion 5", &results);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 120.0, "criterion 5 took {elapsed:?}");
    println!("[PASS] criterion 5: Jacobi, bracket grading, Killing orthogonality ({elapsed:?})");
}

#[test]
fn criterion_06_generic_pairs() {
    let results = run_named(&opts(), &["generic_pairs", "orbit_sums"]);
    assert_all_pass("criterion 6", &results);
    println!("[PASS] criterion 6: {}", results[0].detail);
}

#[test]
fn criterion_07_open_orbit_sampling() {
    let results = run_named(&opts(), &["genericity_sampling", "nilpotency"]);
    assert_all_pass("criterion 7", &results);
    println!("[PASS] criterion 7: {}", results[0].detail);
}

#[test]
fn criterion_08_pencil_suite() {
    let start = Instant::now();
    let results = run_named(
        &opts(),
        &[
            "glorbits_pfaffian",
            "glorbits_covariance",
            "glorbits_points",
            "glorbits_classes",
            "glorbits_orbit_dims",
            "glorbits_cross_ratio",
        ],
    );
    assert_all_pass("criterion 8", &results);
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 8 took {elapsed:?}");
    println!("[PASS] criterion 8: pencil suite, oracle/covariance/moduli exact ({elapsed:?})");
}

#[test]
fn criterion_09_twisted_affine_dimensions() {
    // The six displayed decompositions, with the arithmetic frozen.
    let expected: [(usize, usize, Vec<usize>); 6] = [
        (45, 15, vec![7, 7, 7, 7, 1, 1]),
        (78, 18, vec![14, 14, 14, 14, 2, 2]),
        (66, 25, vec![7, 16, 16, 1, 1]),
        (133, 30, vec![7, 24, 24, 24, 24]),
        (78, 37, vec![9, 16, 16]),
        (133, 56, vec![11, 32, 32, 1, 1]),
    ];
    let cases = twisted_affine_dim_check();
    assert_eq!(cases.len(), 6);
    for (case, (total, g0, reps)) in cases.iter().zip(&expected) {
        assert!(case.pass, "{}", case.name);
        assert_eq!(case.expected, *total, "{}", case.name);
        assert_eq!(case.computed, g0 + reps.iter().sum::<usize>(), "{}", case.name);
    }
    println!("[PASS] criterion 9: all six twisted-affine decompositions verify arithmetically");
}

#[test]
fn criterion_10_determinism() {
    let a = serde_json::to_string(&dynkin_forge_core::verify::report_json(&run(&opts()))).unwrap();
    let b = serde_json::to_string(&dynkin_forge_core::verify::report_json(&run(&opts()))).unwrap();
    assert_eq!(a, b, "verify reports differ between runs");
    assert!(a.contains("\"pass\":true"));
    println!("[PASS] criterion 10: two verify runs at seed 0 are byte-identical");
}
