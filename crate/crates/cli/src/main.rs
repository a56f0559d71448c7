//! Command-line front end: gradations, Levi data, connecting
//! multiplicities, augmentation and enumeration, generic pairs, orbit
//! dimensions, the two-form pencil toolkit, table regeneration, and the
//! full verification suite.
//!
//! Exit codes: 0 success, 1 domain error (JSON error object on stdout),
//! 2 usage error, 3 verification failure.

use dynkin_forge_core::augment::{
    build_augmented_matrix, enumerate_augmentations, identify_ambient_full, validate,
    AugmentationInput,
};
use dynkin_forge_core::chevalley::{
    build_chevalley, generic_pair, grading_element, orbit_dimension, AlgebraElement,
};
use dynkin_forge_core::glorbits::{
    classify_u1_u2, construct_from_points, orbit_dim_gl2sl, phi, point_config_invariant,
    PointConfig, TwoFormPair,
};
use dynkin_forge_core::gradation::grade;
use dynkin_forge_core::levirep::analyze;
use dynkin_forge_core::recognize::identify_cartan_type;
use dynkin_forge_core::rootsys::{build_root_system, CartanMatrix, DynkinDiagram};
use dynkin_forge_core::scalar::{from_frac_string, int};
use dynkin_forge_core::verify::{all_pass, report_json, run as run_verify, VerifyOptions};
use dynkin_forge_core::{tables, Error, Rat};
use serde_json::{json, Value};
use std::process::ExitCode;

struct Options {
    seed: u64,
    pretty: bool,
    max_rank: usize,
    json_path: Option<String>,
    args: Vec<String>,
}

fn usage() -> &'static str {
    "usage: dynkin-forge <command> [args] [--seed N] [--pretty] [--max-rank N] [--json PATH]\n\
     commands:\n\
       grade <type> <node>                 level decomposition of the marked diagram\n\
       levi <type> <node>                  Levi data and graded pieces\n\
       nu <type> <node>                    connecting multiplicities\n\
       augment --levi <d0> --omega <w> --nu <v>   identify the ambient algebra\n\
       enumerate <type>                    all augmentations of a diagram\n\
       generic <type> <node>               generic pair with [X,Y] = c\n\
       orbit-dim <type> <node> <level>     seeded generic orbit dimension\n\
       glorbits <phi|classify|orbit-dim|points|from-points> ...\n\
       tables                              regenerate the classification tables\n\
       verify                              run the full invariant suite\n\
     <type> is a diagram name (E8, A1xA4) or a Cartan matrix as a JSON array;\n\
     nodes are 1-based Bourbaki indices.  DYNKIN_FORGE_SEED presets the seed."
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let opts = match parse_options(argv) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("{msg}");
            eprintln!("{}", usage());
            return ExitCode::from(2);
        }
    };
    if opts.args.is_empty() {
        eprintln!("{}", usage());
        return ExitCode::from(2);
    }
    match dispatch(&opts) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            eprintln!("{msg}");
            eprintln!("{}", usage());
            ExitCode::from(2)
        }
        Err(CliError::Domain(e)) => {
            println!("{}", json!({ "error": e.to_string() }));
            ExitCode::from(1)
        }
    }
}

enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

fn usage_err<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn parse_options(argv: Vec<String>) -> Result<Options, String> {
    let mut seed = std::env::var("DYNKIN_FORGE_SEED")
        .ok()
        .and_then(|s| s.parse::<u64>().ok())
        .unwrap_or(0);
    let mut pretty = false;
    let mut max_rank = 8usize;
    let mut json_path = None;
    let mut args = Vec::new();
    let mut it = argv.into_iter();
    while let Some(a) = it.next() {
        match a.as_str() {
            "--seed" => {
                seed = it
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or("--seed needs an unsigned integer")?;
            }
            "--pretty" => pretty = true,
            "--max-rank" => {
                max_rank = it
                    .next()
                    .and_then(|v| v.parse().ok())
                    .filter(|&n| (1..=8).contains(&n))
                    .ok_or("--max-rank needs an integer in 1..=8")?;
            }
            "--json" => {
                json_path = Some(it.next().ok_or("--json needs a path")?);
            }
            _ => args.push(a),
        }
    }
    Ok(Options { seed, pretty, max_rank, json_path, args })
}

fn emit(opts: &Options, v: &Value) -> Result<(), CliError> {
    let text = if opts.pretty {
        serde_json::to_string_pretty(v).unwrap()
    } else {
        serde_json::to_string(v).unwrap()
    };
    println!("{text}");
    if let Some(path) = &opts.json_path {
        std::fs::write(path, format!("{text}\n"))
            .map_err(|e| CliError::Domain(Error::Domain(format!("cannot write {path}: {e}"))))?;
    }
    Ok(())
}

/// Accept a diagram name or an explicit Cartan matrix as a JSON array.
fn parse_diagram(arg: &str) -> Result<DynkinDiagram, CliError> {
    if arg.trim_start().starts_with('[') {
        let rows: Vec<Vec<i64>> = serde_json::from_str(arg)
            .map_err(|e| CliError::Usage(format!("bad Cartan matrix JSON: {e}")))?;
        let m = CartanMatrix::new(rows)?;
        let id = identify_cartan_type(&m)?;
        Ok(id.diagram)
    } else {
        DynkinDiagram::parse(arg).map_err(|_| CliError::Usage(format!("unknown diagram '{arg}'")))
    }
}

fn parse_node(diagram: &DynkinDiagram, arg: &str) -> Result<usize, CliError> {
    let n: usize = arg
        .parse()
        .map_err(|_| CliError::Usage(format!("node '{arg}' is not a positive integer")))?;
    if n == 0 || n > diagram.rank() {
        return usage_err(format!(
            "node {n} out of range for {diagram} (rank {})",
            diagram.rank()
        ));
    }
    Ok(n - 1)
}

fn dispatch(opts: &Options) -> Result<ExitCode, CliError> {
    match opts.args[0].as_str() {
        "grade" => cmd_grade(opts),
        "levi" => cmd_levi(opts),
        "nu" => cmd_nu(opts),
        "augment" => cmd_augment(opts),
        "enumerate" => cmd_enumerate(opts),
        "generic" => cmd_generic(opts),
        "orbit-dim" => cmd_orbit_dim(opts),
        "glorbits" => cmd_glorbits(opts),
        "tables" => cmd_tables(opts),
        "verify" => cmd_verify(opts),
        other => usage_err(format!("unknown command '{other}'")),
    }
}

fn two_positional<'a>(opts: &'a Options, what: &str) -> Result<(&'a str, &'a str), CliError> {
    if opts.args.len() != 3 {
        return usage_err(format!("{what} takes <type> <node>"));
    }
    Ok((&opts.args[1], &opts.args[2]))
}

fn cmd_grade(opts: &Options) -> Result<ExitCode, CliError> {
    let (t, n) = two_positional(opts, "grade")?;
    let d = parse_diagram(t)?;
    let node = parse_node(&d, n)?;
    let rs = build_root_system::<Rat>(&d)?;
    let gr = grade(&rs, node)?;
    emit(opts, &gr.to_json(&rs))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_levi(opts: &Options) -> Result<ExitCode, CliError> {
    let (t, n) = two_positional(opts, "levi")?;
    let d = parse_diagram(t)?;
    let node = parse_node(&d, n)?;
    let report = analyze::<Rat>(&d, node)?;
    emit(opts, &tables::levi_report_with_labels(&report))?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_nu(opts: &Options) -> Result<ExitCode, CliError> {
    let (t, n) = two_positional(opts, "nu")?;
    let d = parse_diagram(t)?;
    let node = parse_node(&d, n)?;
    let ld = dynkin_forge_core::levirep::levi(&d, node)?;
    emit(opts, &json!({ "levi": ld.diagram0.to_string(), "nu": ld.nu().0 }))?;
    Ok(ExitCode::SUCCESS)
}

fn parse_weight_list(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|comp| {
            comp.split(',')
                .map(|x| {
                    x.trim()
                        .parse::<i64>()
                        .map_err(|_| CliError::Usage(format!("bad weight entry '{x}'")))
                })
                .collect()
        })
        .collect()
}

fn cmd_augment(opts: &Options) -> Result<ExitCode, CliError> {
    let mut levi_arg = None;
    let mut omega_arg = None;
    let mut nu_arg = None;
    let mut i = 1;
    while i < opts.args.len() {
        match opts.args[i].as_str() {
            "--levi" => {
                levi_arg = opts.args.get(i + 1).cloned();
                i += 2;
            }
            "--omega" => {
                omega_arg = opts.args.get(i + 1).cloned();
                i += 2;
            }
            "--nu" => {
                nu_arg = opts.args.get(i + 1).cloned();
                i += 2;
            }
            other => return usage_err(format!("augment: unexpected argument '{other}'")),
        }
    }
    let (Some(levi_arg), Some(omega_arg), Some(nu_arg)) = (levi_arg, omega_arg, nu_arg) else {
        return usage_err("augment needs --levi, --omega and --nu");
    };
    let diagram0 = DynkinDiagram::parse(&levi_arg)
        .map_err(|_| CliError::Usage(format!("unknown diagram '{levi_arg}'")))?;
    let omega = parse_weight_list(&omega_arg)?;
    let nu: Vec<i64> = if nu_arg.trim().is_empty() {
        Vec::new()
    } else {
        nu_arg
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<i64>()
                    .map_err(|_| CliError::Usage(format!("bad ν entry '{x}'")))
            })
            .collect::<Result<_, _>>()?
    };
    let input = AugmentationInput { diagram0, omega, nu };
    let am = build_augmented_matrix(&input)?;
    let report = validate(&am);
    let payload = if report.valid() {
        let (ambient, node, _) = identify_ambient_full(&input)?;
        json!({
            "ambient": ambient.to_string(),
            "node": node + 1,
            "valid": true,
            "report": report.to_json(),
        })
    } else {
        json!({ "valid": false, "report": report.to_json() })
    };
    emit(opts, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(opts: &Options) -> Result<ExitCode, CliError> {
    if opts.args.len() != 2 {
        return usage_err("enumerate takes <type>");
    }
    let d = parse_diagram(&opts.args[1])?;
    let augs = enumerate_augmentations(&d);
    let payload = json!({
        "diagram": d.to_string(),
        "count": augs.len(),
        "augmentations": augs.iter().map(|a| a.to_json()).collect::<Vec<_>>(),
    });
    emit(opts, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_generic(opts: &Options) -> Result<ExitCode, CliError> {
    let (t, n) = two_positional(opts, "generic")?;
    let d = parse_diagram(t)?;
    let node = parse_node(&d, n)?;
    let sc = build_chevalley(&d)?;
    let rs = build_root_system::<Rat>(&d)?;
    let gr = grade(&rs, node)?;
    let gp = generic_pair(&sc, &gr)?;
    let od = orbit_dimension(&sc, &gr, &gp.x)?;
    let payload = json!({
        "diagram": d.to_string(),
        "node": node + 1,
        "orbit_size": gp.orbit.len(),
        "signs": gp.signs,
        "x": sc.element_to_json(&gp.x),
        "y": sc.element_to_json(&gp.y),
        "c": sc.element_to_json(&grading_element(&sc, &gr)),
        "bracket_is_c": true,
        "orbit_dimension": od,
        "dim_g1": gr.level(1).len(),
    });
    emit(opts, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_orbit_dim(opts: &Options) -> Result<ExitCode, CliError> {
    if opts.args.len() != 4 {
        return usage_err("orbit-dim takes <type> <node> <level>");
    }
    let d = parse_diagram(&opts.args[1])?;
    let node = parse_node(&d, &opts.args[2])?;
    let level: i64 = opts.args[3]
        .parse()
        .map_err(|_| CliError::Usage(format!("bad level '{}'", opts.args[3])))?;
    let sc = build_chevalley(&d)?;
    let rs = build_root_system::<Rat>(&d)?;
    let gr = grade(&rs, node)?;
    if level == 0 || gr.level(level).is_empty() {
        return Err(CliError::Domain(Error::EmptyLevel(level)));
    }
    let mut rng = dynkin_forge_core::rng::SplitMix64::new(opts.seed);
    let target = gr.level(level).len();
    let mut best = 0;
    let mut tries = 0;
    for _ in 0..16 {
        tries += 1;
        let mut v = AlgebraElement::<Rat>::zero();
        for &k in gr.level(level) {
            v.add_term(sc.root_basis_index(k), int(rng.range_i64(-9, 9)));
        }
        if v.is_zero() {
            continue;
        }
        best = best.max(orbit_dimension(&sc, &gr, &v)?);
        if best == target {
            break;
        }
    }
    let payload = json!({
        "diagram": d.to_string(),
        "node": node + 1,
        "level": level,
        "dim_level": target,
        "orbit_dimension": best,
        "generic": best == target,
        "samples": tries,
        "seed": opts.seed,
    });
    emit(opts, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn parse_pair_file(path: &str, m_flag: Option<usize>) -> Result<TwoFormPair<Rat>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {path}: {e}")))?;
    let v: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("bad JSON in {path}: {e}")))?;
    let m = v
        .get("m")
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .or(m_flag)
        .ok_or_else(|| CliError::Usage("pair file needs an \"m\" field (or pass --m)".into()))?;
    let get_matrix = |key: &str| -> Result<Vec<Vec<Rat>>, CliError> {
        let rows = v
            .get(key)
            .and_then(Value::as_array)
            .ok_or_else(|| CliError::Usage(format!("pair file needs \"{key}\"")))?;
        rows.iter()
            .map(|row| {
                row.as_array()
                    .ok_or_else(|| CliError::Usage("matrix rows must be arrays".into()))?
                    .iter()
                    .map(parse_rational)
                    .collect()
            })
            .collect()
    };
    let m1 = get_matrix("omega1")?;
    let n = m1.len();
    let m2 = get_matrix("omega2")?;
    Ok(TwoFormPair::new(m, n, m1, m2)?)
}

fn parse_rational(v: &Value) -> Result<Rat, CliError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(int::<Rat>)
            .ok_or_else(|| CliError::Usage(format!("non-integer number {n}"))),
        Value::String(s) => from_frac_string::<Rat>(s)
            .ok_or_else(|| CliError::Usage(format!("bad rational '{s}'"))),
        other => usage_err(format!("expected a rational, got {other}")),
    }
}

fn parse_points(arg: &str) -> Result<PointConfig<Rat>, CliError> {
    let points: Vec<(Rat, Rat)> = arg
        .split(',')
        .map(|p| {
            let (l, m) = p
                .split_once(':')
                .ok_or_else(|| CliError::Usage(format!("point '{p}' is not λ:μ")))?;
            let l = from_frac_string::<Rat>(l)
                .ok_or_else(|| CliError::Usage(format!("bad coordinate '{l}'")))?;
            let m = from_frac_string::<Rat>(m)
                .ok_or_else(|| CliError::Usage(format!("bad coordinate '{m}'")))?;
            Ok((l, m))
        })
        .collect::<Result<_, CliError>>()?;
    Ok(PointConfig::new(points)?)
}

fn cmd_glorbits(opts: &Options) -> Result<ExitCode, CliError> {
    if opts.args.len() < 2 {
        return usage_err(
            "glorbits takes a subcommand: phi | classify | orbit-dim | points | from-points",
        );
    }
    let mut m_flag = None;
    let mut pair_path = None;
    let mut points_arg = None;
    let mut i = 2;
    while i < opts.args.len() {
        match opts.args[i].as_str() {
            "--m" => {
                m_flag = opts.args.get(i + 1).and_then(|v| v.parse::<usize>().ok());
                i += 2;
            }
            "--pair" => {
                pair_path = opts.args.get(i + 1).cloned();
                i += 2;
            }
            "--points" => {
                points_arg = opts.args.get(i + 1).cloned();
                i += 2;
            }
            other => return usage_err(format!("glorbits: unexpected argument '{other}'")),
        }
    }
    let need_pair = |label: &str| -> Result<TwoFormPair<Rat>, CliError> {
        let Some(path) = &pair_path else {
            return usage_err(format!("glorbits {label} needs --pair <file>"));
        };
        parse_pair_file(path, m_flag)
    };
    let payload = match opts.args[1].as_str() {
        "phi" => {
            let pair = need_pair("phi")?;
            json!({ "m": pair.m, "phi": phi(&pair)?.to_json() })
        }
        "classify" => {
            let pair = need_pair("classify")?;
            json!({ "m": pair.m, "class": classify_u1_u2(&pair)?.to_string() })
        }
        "orbit-dim" => {
            let pair = need_pair("orbit-dim")?;
            let od = orbit_dim_gl2sl(&pair)?;
            json!({
                "m": pair.m,
                "orbit_dimension": od,
                "full": 2 * pair.m * (2 * pair.m + 1),
                "generic": od == 2 * pair.m * (2 * pair.m + 1),
            })
        }
        "points" => {
            let pair = need_pair("points")?;
            let cfg = point_config_invariant(&pair)?;
            json!({ "m": pair.m, "points": cfg.to_json() })
        }
        "from-points" => {
            let Some(arg) = &points_arg else {
                return usage_err("glorbits from-points needs --points \"λ:μ,λ:μ,…\"");
            };
            let cfg = parse_points(arg)?;
            let pair = construct_from_points(&cfg)?;
            json!({
                "m": pair.m,
                "pair": pair.to_json(),
                "phi": phi(&pair)?.to_json(),
            })
        }
        other => return usage_err(format!("glorbits: unknown subcommand '{other}'")),
    };
    emit(opts, &payload)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_tables(opts: &Options) -> Result<ExitCode, CliError> {
    if opts.pretty {
        let text = tables::tables_text(opts.max_rank)?;
        print!("{text}");
        if let Some(path) = &opts.json_path {
            std::fs::write(
                path,
                serde_json::to_string(&tables::tables_json(opts.max_rank)?).unwrap(),
            )
            .map_err(|e| CliError::Domain(Error::Domain(format!("cannot write {path}: {e}"))))?;
        }
    } else {
        emit(opts, &tables::tables_json(opts.max_rank)?)?;
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(opts: &Options) -> Result<ExitCode, CliError> {
    let results = run_verify(&VerifyOptions { seed: opts.seed, max_rank: opts.max_rank });
    if opts.pretty {
        for r in &results {
            println!("[{}] {:<24} {}", if r.pass { "pass" } else { "FAIL" }, r.name, r.detail);
        }
        if let Some(path) = &opts.json_path {
            std::fs::write(path, serde_json::to_string(&report_json(&results)).unwrap())
                .map_err(|e| CliError::Domain(Error::Domain(format!("cannot write {path}: {e}"))))?;
        }
    } else {
        emit(opts, &report_json(&results))?;
    }
    Ok(if all_pass(&results) { ExitCode::SUCCESS } else { ExitCode::from(3) })
}
