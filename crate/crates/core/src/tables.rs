//! Regeneration of the classification tables: graded pieces of the
//! distinguished gradations, the full marked-diagram classification with
//! connecting multiplicities, highest-root marks, and the twisted-affine
//! dimension report.  Also the presentation-layer naming of representations
//! (`Λ^kC^n`, `S`, `C^27`, …); classification logic never depends on these
//! strings, and center charges of the `GL₁` factor stay implicit, so a
//! determinant twist like `C^n⊗Λ^nC^n` prints as its `sl_n`-level name.

use crate::error::Result;
use crate::levirep::{analyze, twisted_affine_dim_check, LeviData, LeviReport};
use crate::rootsys::{build_root_system, DynkinDiagram, Family, SimpleType};
use crate::Rat64;
use serde_json::{json, Value};

/// Name of the irreducible representation of one simple component.
pub fn rep_name(kind: SimpleType, w: &[i64]) -> String {
    let r = kind.rank;
    if w.iter().all(|&x| x == 0) {
        return "C".into();
    }
    let single = |pos: usize, val: i64| -> Option<String> {
        match kind.family {
            Family::A => {
                let n = r + 1;
                if pos == 0 && val == 1 {
                    Some(format!("C^{n}"))
                } else if pos == 0 {
                    Some(format!("S^{val}C^{n}"))
                } else if pos == r - 1 && val > 1 {
                    Some(format!("S^{val}C^{n}*"))
                } else if val == 1 {
                    Some(format!("Λ^{}C^{n}", pos + 1))
                } else {
                    None
                }
            }
            Family::B => {
                let n = 2 * r + 1;
                if pos == 0 && val == 1 {
                    Some(format!("C^{n}"))
                } else if pos == r - 1 && val == 1 {
                    Some("S".into())
                } else if val == 1 && pos < r - 1 {
                    Some(format!("Λ^{}C^{n}", pos + 1))
                } else {
                    None
                }
            }
            Family::C => {
                let n = 2 * r;
                if pos == 0 && val == 1 {
                    Some(format!("C^{n}"))
                } else if pos == r - 1 && val == 1 && (r == 2 || r == 3) {
                    Some(format!("Λ^{r}_0C^{n}"))
                } else {
                    None
                }
            }
            Family::D => {
                let n = 2 * r;
                if pos == 0 && val == 1 {
                    Some(format!("C^{n}"))
                } else if pos == r - 2 && val == 1 {
                    Some("S+".into())
                } else if pos == r - 1 && val == 1 {
                    Some("S-".into())
                } else if val == 1 && pos < r - 2 {
                    Some(format!("Λ^{}C^{n}", pos + 1))
                } else {
                    None
                }
            }
            Family::E => match (r, pos, val) {
                (6, 0, 1) => Some("C^27".into()),
                (6, 5, 1) => Some("C^27*".into()),
                (7, 6, 1) => Some("C^56".into()),
                _ => None,
            },
            Family::F => None,
            Family::G => {
                if pos == 0 && val == 1 {
                    Some("C^7".into())
                } else {
                    None
                }
            }
        }
    };
    let nonzero: Vec<(usize, i64)> =
        w.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, v)).collect();
    if let [(pos, val)] = nonzero.as_slice() {
        if let Some(name) = single(*pos, *val) {
            return name;
        }
    }
    let parts: Vec<String> = w.iter().map(|v| v.to_string()).collect();
    format!("V[{}]", parts.join(","))
}

/// Tensor-product name of a graded piece over all Levi components.
pub fn piece_label(ld: &LeviData, weight: &[i64]) -> String {
    if ld.components.is_empty() {
        return "C".into();
    }
    let mut parts = Vec::new();
    let mut off = 0;
    for c in &ld.components {
        parts.push(rep_name(c.kind, &weight[off..off + c.kind.rank]));
        off += c.kind.rank;
    }
    parts.join("⊗")
}

/// Group name of the Levi, with the one-dimensional center absorbed into a
/// leading `A`-type factor when there is one, as in `(GL_k × SL_m, …)`.
pub fn group_label(ld: &LeviData, g_minus_1_weight: &[i64]) -> String {
    if ld.components.is_empty() {
        return "GL_1".into();
    }
    let uses_spin = |c: &crate::levirep::LeviComponent, w: &[i64]| -> bool {
        match c.kind.family {
            Family::B => w.get(c.kind.rank - 1).copied().unwrap_or(0) != 0,
            Family::D => {
                w.get(c.kind.rank - 2).copied().unwrap_or(0) != 0
                    || w.get(c.kind.rank - 1).copied().unwrap_or(0) != 0
            }
            _ => false,
        }
    };
    let mut parts = Vec::new();
    let mut off = 0;
    for (i, c) in ld.components.iter().enumerate() {
        let w = &g_minus_1_weight[off..off + c.kind.rank];
        off += c.kind.rank;
        let r = c.kind.rank;
        let name = match c.kind.family {
            Family::A => {
                if i == 0 {
                    format!("GL_{}", r + 1)
                } else {
                    format!("SL_{}", r + 1)
                }
            }
            Family::B => {
                if uses_spin(c, w) {
                    format!("Spin_{}", 2 * r + 1)
                } else {
                    format!("SO_{}", 2 * r + 1)
                }
            }
            Family::C => format!("Sp_{r}"),
            Family::D => {
                if uses_spin(c, w) {
                    format!("Spin_{}", 2 * r)
                } else {
                    format!("SO_{}", 2 * r)
                }
            }
            Family::E => format!("E{r}"),
            Family::F => "F4".into(),
            Family::G => "G2".into(),
        };
        parts.push(name);
    }
    if !matches!(ld.components[0].kind.family, Family::A) {
        parts.insert(0, "GL_1".into());
    }
    parts.join(" × ")
}

/// One row of the graded-pieces table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPiecesRow {
    pub g: String,
    pub node: usize,
    pub g0_dim: usize,
    pub order: i64,
    /// Label and dimension of `g_{-1}, g_{-2}, …`.
    pub pieces: Vec<(String, usize)>,
}

/// The graded pieces of the distinguished gradations behind
/// `(GL_n, Λ^kC^n)`, with the generic rows instantiated at `n = 8`.
pub fn graded_pieces_table() -> Result<Vec<GradedPiecesRow>> {
    let cases = [("A1xA7", 0), ("A8", 0), ("D8", 7), ("E6", 1), ("E7", 1), ("E8", 1)];
    let mut rows = Vec::new();
    for (name, node) in cases {
        let d = DynkinDiagram::parse(name)?;
        let report = analyze::<Rat64>(&d, node)?;
        let mut pieces = Vec::new();
        for i in 1..=report.order {
            let p = report.pieces.iter().find(|p| p.level == -i).unwrap();
            pieces.push((piece_label(&report.levi, &p.highest_weight), p.dim));
        }
        rows.push(GradedPiecesRow {
            g: name.to_string(),
            node: node + 1,
            g0_dim: report.dims[&0],
            order: report.order,
            pieces,
        });
    }
    Ok(rows)
}

/// One row of the classification table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRow {
    pub g: String,
    /// Marked node, 1-based Bourbaki.
    pub node: usize,
    pub levi: String,
    /// Highest weight of `g₋₁` per Levi component.
    pub weights: Vec<Vec<i64>>,
    pub nu: Vec<i64>,
}

/// All simple types through the rank bound, `E6–E8`, `F4`, `G2`.
pub fn simple_types(max_rank: usize) -> Vec<DynkinDiagram> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(DynkinDiagram::simple(Family::A, n).unwrap());
    }
    for n in 2..=max_rank {
        out.push(DynkinDiagram::simple(Family::B, n).unwrap());
    }
    for n in 3..=max_rank {
        out.push(DynkinDiagram::simple(Family::C, n).unwrap());
    }
    for n in 4..=max_rank {
        out.push(DynkinDiagram::simple(Family::D, n).unwrap());
    }
    for n in 6..=8 {
        out.push(DynkinDiagram::simple(Family::E, n).unwrap());
    }
    out.push(DynkinDiagram::simple(Family::F, 4).unwrap());
    out.push(DynkinDiagram::simple(Family::G, 2).unwrap());
    out
}

/// The classification rows computed from the gradations.
pub fn classification_table(max_rank: usize) -> Result<Vec<ClassificationRow>> {
    let mut rows = Vec::new();
    for d in simple_types(max_rank) {
        for node in 0..d.rank() {
            rows.push(classification_row(&d, node)?);
        }
    }
    Ok(rows)
}

fn classification_row(d: &DynkinDiagram, node: usize) -> Result<ClassificationRow> {
    let report = analyze::<Rat64>(d, node)?;
    let p = report.pieces.iter().find(|p| p.level == -1).unwrap();
    Ok(ClassificationRow {
        g: d.to_string(),
        node: node + 1,
        levi: report.levi.diagram0.to_string(),
        weights: crate::levirep::split_weight(&report.levi, &p.highest_weight),
        nu: report.levi.nu().0,
    })
}

/// The expected classification rows, encoded directly from the printed
/// table with the components put in the Levi ordering (alphabetical, rank
/// ascending, ν descending, ambient node as the final tiebreak).
pub fn classification_expected() -> Vec<ClassificationRow> {
    let mut rows: Vec<ClassificationRow> = Vec::new();
    let mut push = |g: String, node: usize, levi: &str, weights: Vec<Vec<i64>>, nu: Vec<i64>| {
        rows.push(ClassificationRow { g, node, levi: levi.into(), weights, nu });
    };
    let e1 = |r: usize| {
        let mut v = vec![0i64; r];
        v[0] = 1;
        v
    };
    let epos = |r: usize, pos: usize| {
        let mut v = vec![0i64; r];
        v[pos] = 1;
        v
    };

    // A_n: node 1 -> (GL_n, C^n), interior k -> (GL_k × SL_{n+1-k},
    // C^k⊗C^{n+1-k}), ν all ones.
    for n in 1..=8usize {
        let g = format!("A{n}");
        for k in 1..=n {
            let (left, right) = (k - 1, n - k);
            let mut comps: Vec<usize> = Vec::new();
            if left > 0 {
                comps.push(left);
            }
            if right > 0 {
                comps.push(right);
            }
            comps.sort_unstable();
            // Equal ranks: the left block holds the smaller ambient nodes.
            let levi = if comps.is_empty() {
                "1".to_string()
            } else {
                comps.iter().map(|r| format!("A{r}")).collect::<Vec<_>>().join("x")
            };
            let weights: Vec<Vec<i64>> = comps.iter().map(|&r| e1(r)).collect();
            let nu = vec![1i64; comps.len()];
            push(g.clone(), k, &levi, weights, nu);
        }
    }

    // B_n.
    for n in 2..=8usize {
        let g = format!("B{n}");
        if n == 2 {
            push(g.clone(), 1, "A1", vec![vec![2]], vec![1]);
        } else {
            push(g.clone(), 1, &format!("B{}", n - 1), vec![e1(n - 1)], vec![1]);
        }
        for k in 2..=n.saturating_sub(2) {
            push(
                g.clone(),
                k,
                &format!("A{}xB{}", k - 1, n - k),
                vec![e1(k - 1), e1(n - k)],
                vec![1, 1],
            );
        }
        if n >= 3 {
            // k = n-1: A1 (short, weight 2ω) and A_{n-2}.
            if n == 3 {
                push(g.clone(), 2, "A1xA1", vec![vec![1], vec![2]], vec![1, 1]);
            } else {
                push(
                    g.clone(),
                    n - 1,
                    &format!("A1xA{}", n - 2),
                    vec![vec![2], e1(n - 2)],
                    vec![1, 1],
                );
            }
        }
        push(g.clone(), n, &format!("A{}", n - 1), vec![e1(n - 1)], vec![2]);
    }

    // C_n.
    for n in 3..=8usize {
        let g = format!("C{n}");
        if n == 4 {
            // Levi C3; for n = 4 the tail {2,3,4} is an honest C3.
        }
        if n == 3 {
            push(g.clone(), 1, "B2", vec![epos(2, 1)], vec![1]);
        } else {
            push(g.clone(), 1, &format!("C{}", n - 1), vec![e1(n - 1)], vec![1]);
        }
        for k in 2..=n.saturating_sub(2) {
            if n - k == 2 {
                push(
                    g.clone(),
                    k,
                    &format!("A{}xB2", k - 1),
                    vec![e1(k - 1), epos(2, 1)],
                    vec![1, 1],
                );
            } else {
                push(
                    g.clone(),
                    k,
                    &format!("A{}xC{}", k - 1, n - k),
                    vec![e1(k - 1), e1(n - k)],
                    vec![1, 1],
                );
            }
        }
        // k = n-1: the long A1 carries ν = 2 and sorts first.
        if n == 3 {
            push(g.clone(), 2, "A1xA1", vec![vec![1], vec![1]], vec![2, 1]);
        } else {
            push(
                g.clone(),
                n - 1,
                &format!("A1xA{}", n - 2),
                vec![vec![1], e1(n - 2)],
                vec![2, 1],
            );
        }
        push(g.clone(), n, &format!("A{}", n - 1), vec![{
            let mut v = vec![0i64; n - 1];
            v[0] = 2;
            v
        }], vec![1]);
    }

    // D_n.
    for n in 4..=8usize {
        let g = format!("D{n}");
        if n == 4 {
            push(g.clone(), 1, "A3", vec![epos(3, 1)], vec![1]);
        } else {
            push(g.clone(), 1, &format!("D{}", n - 1), vec![e1(n - 1)], vec![1]);
        }
        for k in 2..=n.saturating_sub(3) {
            if n - k == 3 {
                // The tail D3 is an A3; components sort by rank.
                let (levi, weights) = if k - 1 <= 3 {
                    (format!("A{}xA3", k - 1), vec![e1(k - 1), epos(3, 1)])
                } else {
                    (format!("A3xA{}", k - 1), vec![epos(3, 1), e1(k - 1)])
                };
                push(g.clone(), k, &levi, weights, vec![1, 1]);
            } else {
                push(
                    g.clone(),
                    k,
                    &format!("A{}xD{}", k - 1, n - k),
                    vec![e1(k - 1), e1(n - k)],
                    vec![1, 1],
                );
            }
        }
        // k = n-2: three components.
        if n == 4 {
            push(g.clone(), 2, "A1xA1xA1", vec![vec![1], vec![1], vec![1]], vec![1, 1, 1]);
        } else {
            push(
                g.clone(),
                n - 2,
                &format!("A1xA1xA{}", n - 3),
                vec![vec![1], vec![1], e1(n - 3)],
                vec![1, 1, 1],
            );
        }
        for k in [n - 1, n] {
            push(g.clone(), k, &format!("A{}", n - 1), vec![epos(n - 1, 1)], vec![1]);
        }
    }

    // Exceptional types.
    push("E6".into(), 1, "D5", vec![epos(5, 3)], vec![1]);
    push("E6".into(), 2, "A5", vec![epos(5, 2)], vec![1]);
    push("E6".into(), 3, "A1xA4", vec![vec![1], epos(4, 1)], vec![1, 1]);
    push("E6".into(), 4, "A1xA2xA2", vec![vec![1], e1(2), e1(2)], vec![1, 1, 1]);
    push("E6".into(), 5, "A1xA4", vec![vec![1], epos(4, 1)], vec![1, 1]);
    push("E6".into(), 6, "D5", vec![epos(5, 3)], vec![1]);

    push("E7".into(), 1, "D6", vec![epos(6, 4)], vec![1]);
    push("E7".into(), 2, "A6", vec![epos(6, 2)], vec![1]);
    push("E7".into(), 3, "A1xA5", vec![vec![1], epos(5, 1)], vec![1, 1]);
    push("E7".into(), 4, "A1xA2xA3", vec![vec![1], e1(2), e1(3)], vec![1, 1, 1]);
    push("E7".into(), 5, "A2xA4", vec![e1(2), epos(4, 1)], vec![1, 1]);
    push("E7".into(), 6, "A1xD5", vec![vec![1], epos(5, 3)], vec![1, 1]);
    push("E7".into(), 7, "E6", vec![e1(6)], vec![1]);

    push("E8".into(), 1, "D7", vec![epos(7, 5)], vec![1]);
    push("E8".into(), 2, "A7", vec![epos(7, 2)], vec![1]);
    push("E8".into(), 3, "A1xA6", vec![vec![1], epos(6, 1)], vec![1, 1]);
    push("E8".into(), 4, "A1xA2xA4", vec![vec![1], e1(2), e1(4)], vec![1, 1, 1]);
    push("E8".into(), 5, "A3xA4", vec![e1(3), epos(4, 1)], vec![1, 1]);
    push("E8".into(), 6, "A2xD5", vec![e1(2), epos(5, 3)], vec![1, 1]);
    push("E8".into(), 7, "A1xE6", vec![vec![1], e1(6)], vec![1, 1]);
    push("E8".into(), 8, "E7", vec![epos(7, 6)], vec![1]);

    push("F4".into(), 1, "C3", vec![epos(3, 2)], vec![1]);
    push("F4".into(), 2, "A1xA2", vec![vec![1], vec![2, 0]], vec![1, 1]);
    push("F4".into(), 3, "A1xA2", vec![vec![1], vec![1, 0]], vec![1, 2]);
    push("F4".into(), 4, "B3", vec![epos(3, 2)], vec![1]);

    push("G2".into(), 1, "A1", vec![vec![1]], vec![3]);
    push("G2".into(), 2, "A1", vec![vec![3]], vec![1]);

    rows
}

/// Highest-root marks of every simple type through the rank bound.
pub fn marks_table(max_rank: usize) -> Result<Vec<(String, Vec<i64>)>> {
    let mut out = Vec::new();
    for d in simple_types(max_rank) {
        let rs = build_root_system::<Rat64>(&d)?;
        out.push((d.to_string(), rs.highest_root(0)?.coords.clone()));
    }
    Ok(out)
}

/// Everything `tables` emits, as one JSON document.
pub fn tables_json(max_rank: usize) -> Result<Value> {
    let t1: Vec<Value> = graded_pieces_table()?
        .into_iter()
        .map(|r| {
            json!({
                "g": r.g,
                "node": r.node,
                "g0_dim": r.g0_dim,
                "order": r.order,
                "pieces": r.pieces.iter().map(|(l, d)| json!({"label": l, "dim": d})).collect::<Vec<_>>(),
            })
        })
        .collect();
    let t2: Vec<Value> = classification_table(max_rank)?
        .into_iter()
        .map(|r| {
            json!({
                "g": r.g,
                "node": r.node,
                "levi": r.levi,
                "weights": r.weights,
                "nu": r.nu,
            })
        })
        .collect();
    let t4: Vec<Value> = marks_table(max_rank)?
        .into_iter()
        .map(|(g, marks)| json!({"g": g, "marks": marks}))
        .collect();
    let t3: Vec<Value> = twisted_affine_dim_check()
        .into_iter()
        .map(|c| {
            json!({
                "case": c.name,
                "expected": c.expected,
                "computed": c.computed,
                "pass": c.pass,
            })
        })
        .collect();
    Ok(json!({
        "graded_pieces": t1,
        "classification": t2,
        "twisted_affine": t3,
        "marks": t4,
    }))
}

/// Aligned text rendering of the same tables.
pub fn tables_text(max_rank: usize) -> Result<String> {
    use std::fmt::Write;
    let mut s = String::new();
    writeln!(s, "Graded pieces (g = ⊕ g_i, g_-i ≅ g_i)").unwrap();
    writeln!(s, "{:<8} {:<5} {:<6} {:<6} pieces", "g", "node", "dim g0", "order").unwrap();
    for r in graded_pieces_table()? {
        let pieces: Vec<String> =
            r.pieces.iter().map(|(l, d)| format!("{l} ({d})")).collect();
        writeln!(s, "{:<8} {:<5} {:<6} {:<6} {}", r.g, r.node, r.g0_dim, r.order, pieces.join(" | "))
            .unwrap();
    }
    writeln!(s).unwrap();
    writeln!(s, "Irreducible PVS of parabolic type").unwrap();
    writeln!(s, "{:<4} {:<5} {:<12} {:<28} {:<10} rep", "g", "node", "levi", "(G0, V)", "nu").unwrap();
    for d in simple_types(max_rank) {
        for node in 0..d.rank() {
            let report = analyze::<Rat64>(&d, node)?;
            let p = report.pieces.iter().find(|p| p.level == -1).unwrap();
            let group = group_label(&report.levi, &p.highest_weight);
            let rep = piece_label(&report.levi, &p.highest_weight);
            let nu: Vec<String> = report.levi.nu().0.iter().map(|x| x.to_string()).collect();
            writeln!(
                s,
                "{:<4} {:<5} {:<12} {:<28} {:<10} {}",
                d.to_string(),
                node + 1,
                report.levi.diagram0.to_string(),
                format!("({group})"),
                format!("({})", nu.join(",")),
                rep
            )
            .unwrap();
        }
    }
    writeln!(s).unwrap();
    writeln!(s, "Twisted affine type (dimension check)").unwrap();
    for c in twisted_affine_dim_check() {
        writeln!(
            s,
            "{:<60} {} = {}  [{}]",
            c.name,
            c.expected,
            c.computed,
            if c.pass { "ok" } else { "FAIL" }
        )
        .unwrap();
    }
    writeln!(s).unwrap();
    writeln!(s, "Highest-root marks").unwrap();
    for (g, marks) in marks_table(max_rank)? {
        let m: Vec<String> = marks.iter().map(|x| x.to_string()).collect();
        writeln!(s, "{:<4} ({})", g, m.join(",")).unwrap();
    }
    Ok(s)
}

/// Full analysis of one marked diagram as the CLI reports it.
pub fn levi_report_with_labels(report: &LeviReport) -> Value {
    let mut v = report.to_json();
    if let Some(p) = report.pieces.iter().find(|p| p.level == -1) {
        let obj = v.as_object_mut().unwrap();
        obj.insert(
            "group".into(),
            Value::from(group_label(&report.levi, &p.highest_weight)),
        );
        obj.insert(
            "rep_label".into(),
            Value::from(piece_label(&report.levi, &p.highest_weight)),
        );
    }
    v
}
