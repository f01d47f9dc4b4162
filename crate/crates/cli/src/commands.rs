use std::path::Path;
use std::sync::Arc;

use pinquad::cochain::{parse_cochain, write_cochain, Cochain, CohomologySolver, Ring, SignRule, Z2, Z4};
use pinquad::ggroup::{g_pin, g_pin_bruteforce, g_spin_profile, GGroupStructure};
use pinquad::identities::{run_suites, IdentityConfig, Suite};
use pinquad::quad::{brown_gauss, verify_axioms, Mode, QuadSpace, QuadraticFunction};
use pinquad::scx::OrderedComplex;
use serde_json::{json, Value};

use crate::args::{Command, EngineArg, ModeArg, Pick, QuadAction};
use crate::source::{read_file, sha256_hex, Loaded};
use crate::{CliError, Emitter};

pub(crate) fn dispatch(cmd: Command, em: &mut Emitter) -> Result<(), CliError> {
    match cmd {
        Command::Info { source } => info(&Loaded::load(&source)?, em),
        Command::Cohomology {
            source,
            degree,
            write_basis,
        } => cohomology(&Loaded::load(&source)?, degree, write_basis.as_deref(), em),
        Command::Quad { source, mode, action } => quad(&Loaded::load(&source)?, mode, action, em),
        Command::Ggroup {
            source,
            n,
            engine,
            mode,
            budget,
        } => ggroup(&Loaded::load(&source)?, n, engine, mode, budget, em),
        Command::Identities {
            seed,
            trials,
            max_dim,
            suites,
            mutated_sign,
        } => identities(seed, trials, max_dim, &suites, mutated_sign, em),
    }
}

/// The fields every record starts from.
fn base(command: &str, src: &Loaded) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("source".into(), json!(src.source));
    m.insert("sha256".into(), json!(src.sha256));
    m
}

fn with(mut m: serde_json::Map<String, Value>, extra: Value) -> Value {
    if let Value::Object(extra) = extra {
        m.extend(extra);
    }
    Value::Object(m)
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>, sep: &str) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn info(src: &Loaded, em: &mut Emitter) -> Result<(), CliError> {
    let cx = &src.complex;
    let f = cx.f_vector();
    let components = cx.components().len();
    let (status, orientable, diagnosis) = match &src.manifold {
        Some(Ok(m)) => (
            if m.is_closed() { "closed" } else { "with boundary" },
            Some(m.is_oriented()),
            None,
        ),
        Some(Err(e)) => ("not a manifold", None, Some(e.to_string())),
        None => ("undeclared", None, None),
    };
    let mut text = format!(
        "{}\n  f-vector ({})\n  dimension {}\n  euler characteristic {}\n  components {}\n  manifold: {status}",
        src.source,
        join(&f, ","),
        cx.dim().map_or("empty".into(), |d| d.to_string()),
        cx.euler_characteristic(),
        components,
    );
    if let Some(d) = &diagnosis {
        text.push_str(&format!(" ({d})"));
    }
    if let Some(o) = orientable {
        text.push_str(if o { ", orientable" } else { ", nonorientable" });
    }
    let record = with(
        base("info", src),
        json!({
            "f_vector": f,
            "dim": cx.dim(),
            "euler": cx.euler_characteristic(),
            "components": components,
            "manifold": status,
            "orientable": orientable,
            "diagnosis": diagnosis,
        }),
    );
    em.emit(record, text);
    Ok(())
}

fn cohomology(src: &Loaded, degree: Option<usize>, dir: Option<&Path>, em: &mut Emitter) -> Result<(), CliError> {
    let top = src.complex.dim().unwrap_or(0);
    let degrees: Vec<usize> = match degree {
        Some(k) => vec![k],
        None => (0..=top).collect(),
    };
    if let Some(dir) = dir {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Io {
            path: dir.display().to_string(),
            message: e.to_string(),
        })?;
    }
    for k in degrees {
        let solver = CohomologySolver::new(&src.pair, k);
        let mut files = Vec::new();
        if let Some(dir) = dir {
            for (j, c) in solver.basis().iter().enumerate() {
                let name = format!("h{k}_{j}.cochain");
                let path = dir.join(&name);
                std::fs::write(&path, write_cochain(c)).map_err(|e| CliError::Io {
                    path: path.display().to_string(),
                    message: e.to_string(),
                })?;
                files.push(name);
            }
        }
        let mut text = format!("{}: dim H^{k} = {}", src.source, solver.dim());
        if !files.is_empty() {
            text.push_str(&format!(" (basis: {})", files.join(", ")));
        }
        let record = with(
            base("cohomology", src),
            json!({
                "degree": k,
                "dim": solver.dim(),
                "relative": !src.pair.sub_is_empty(),
                "basis_files": files,
            }),
        );
        em.emit(record, text);
    }
    Ok(())
}

fn mode_of(m: ModeArg) -> Mode {
    match m {
        ModeArg::Pin => Mode::Pin,
        ModeArg::Spin => Mode::Spin,
    }
}

fn values(q: &QuadraticFunction) -> Vec<u8> {
    q.basis_values().iter().map(|v| v.value()).collect()
}

fn pick(space: &Arc<QuadSpace>, mode: Mode, p: &Pick) -> Result<QuadraticFunction, CliError> {
    if let Some(v) = &p.values {
        return Ok(space.make(mode, v.iter().map(|&x| Z4::new(x)).collect())?);
    }
    let all = space.enumerate(mode)?;
    let index = p.index.unwrap_or(0);
    let count = all.len();
    all.into_iter()
        .nth(index)
        .ok_or_else(|| CliError::Usage(format!("--index {index} is out of range ({count} functions)")))
}

fn load_z2(cx: &Arc<OrderedComplex>, path: &Path) -> Result<(Cochain<Z2>, String), CliError> {
    let text = read_file(path)?;
    let c = parse_cochain(cx, &text)
        .and_then(|c| c.into_z2())
        .map_err(|e| CliError::Input {
            input: path.display().to_string(),
            message: e.to_string(),
        })?;
    Ok((c, sha256_hex(text.as_bytes())))
}

fn function_record(src: &Loaded, action: &str, q: &QuadraticFunction, extra: Value) -> Value {
    let mut m = base("quad", src);
    m.insert("action".into(), json!(action));
    m.insert("mode".into(), json!(q.mode().name()));
    m.insert("n".into(), json!(q.space().n()));
    m.insert("values".into(), json!(values(q)));
    with(m, extra)
}

fn quad(src: &Loaded, mode: ModeArg, action: QuadAction, em: &mut Emitter) -> Result<(), CliError> {
    let m = src.manifold()?;
    let mode = mode_of(mode);
    let space = QuadSpace::new(m)?;
    let h = space.dim();
    let label = |q: &QuadraticFunction| format!("[{}]", join(values(q), ","));
    match action {
        QuadAction::Enumerate => {
            let all = space.enumerate(mode)?;
            em.emit(
                with(
                    base("quad", src),
                    json!({"action": "summary", "mode": mode.name(), "basis_dim": h, "count": all.len()}),
                ),
                format!(
                    "{}: {} {} quadratic functions, values on a basis of H^{} (dim {h})",
                    src.source,
                    all.len(),
                    mode.name(),
                    space.n() - 1
                ),
            );
            for (i, q) in all.iter().enumerate() {
                em.emit(
                    function_record(src, "enumerate", q, json!({"index": i})),
                    format!("  Q{i} = {}", label(q)),
                );
            }
        }
        QuadAction::Eval { pick: p, cochain } => {
            let q = pick(&space, mode, &p)?;
            let (c, hash) = load_z2(m.complex(), &cochain)?;
            let v = q.eval(&c)?;
            em.emit(
                function_record(
                    src,
                    "eval",
                    &q,
                    json!({
                        "cochain": cochain.display().to_string(),
                        "cochain_sha256": hash,
                        "value": v.value.value(),
                        "fraction": v.to_qmodz().to_string(),
                    }),
                ),
                format!("Q{} (p) = {v}  ({} in ℝ/ℤ)", label(&q), v.to_qmodz()),
            );
        }
        QuadAction::Act { pick: p, cochain } => {
            let q = pick(&space, mode, &p)?;
            let (a, hash) = load_z2(m.complex(), &cochain)?;
            let qa = q.act(&a)?;
            em.emit(
                function_record(
                    src,
                    "act",
                    &qa,
                    json!({
                        "cochain": cochain.display().to_string(),
                        "cochain_sha256": hash,
                        "from": values(&q),
                    }),
                ),
                format!("Q{} acted on by a = Q{}", label(&q), label(&qa)),
            );
        }
        QuadAction::Negate { pick: p } => {
            let q = pick(&space, mode, &p)?;
            let neg = q.negate();
            em.emit(
                function_record(src, "negate", &neg, json!({"from": values(&q)})),
                format!("-Q{} = Q{}", label(&q), label(&neg)),
            );
        }
        QuadAction::Boundary { pick: p } => {
            let q = pick(&space, mode, &p)?;
            let b = q.boundary()?;
            em.emit(
                function_record(src, "boundary", &b, json!({"from": values(&q)})),
                format!(
                    "Q{} restricts to Q{} on the boundary (basis of H^{}, dim {})",
                    label(&q),
                    label(&b),
                    b.space().n() - 1,
                    b.space().dim()
                ),
            );
        }
        QuadAction::Brown => {
            let all = space.enumerate(mode)?;
            let mut betas = Vec::with_capacity(all.len());
            for (i, q) in all.iter().enumerate() {
                let b = brown_gauss(q)?;
                betas.push(b.beta);
                em.emit(
                    function_record(
                        src,
                        "brown",
                        q,
                        json!({"index": i, "beta": b.beta, "arf": b.arf(), "gauss_sum": b.sum.to_string()}),
                    ),
                    format!("  Q{i} = {}: β = {} (Gauss sum {})", label(q), b.beta, b.sum),
                );
            }
            betas.sort_unstable();
            em.emit(
                with(base("quad", src), json!({"action": "brown-summary", "mode": mode.name(), "betas": betas})),
                format!("{}: β multiset {{{}}}", src.source, join(&betas, ",")),
            );
        }
        QuadAction::Verify { trials, seed } => {
            let all = space.enumerate(mode)?;
            let mut bad = 0;
            for (i, q) in all.iter().enumerate() {
                let r = verify_axioms(q, trials, seed);
                let first = r.violations.first().map(|v| format!("{v:?}"));
                if !r.passed() {
                    bad += 1;
                    em.fail();
                }
                let status = if r.passed() { "pass" } else { "FAIL" };
                em.emit(
                    function_record(
                        src,
                        "verify",
                        q,
                        json!({
                            "index": i,
                            "trials": r.trials,
                            "seed": seed,
                            "violations": r.violations.len(),
                            "first_violation": first,
                        }),
                    ),
                    format!("  Q{i} = {}: {} trials, {} violations  {status}", label(q), r.trials, r.violations.len()),
                );
            }
            em.emit(
                with(
                    base("quad", src),
                    json!({"action": "verify-summary", "functions": all.len(), "failed": bad, "seed": seed, "trials": trials}),
                ),
                format!("{}: {} of {} functions pass", src.source, all.len() - bad, all.len()),
            );
        }
    }
    Ok(())
}

fn support<R: Ring>(c: &Cochain<R>) -> Vec<Vec<u32>> {
    c.support().map(|(s, _)| s.iter().map(|&v| v as u32).collect()).collect()
}

fn structure_json(s: &GGroupStructure) -> Value {
    json!({
        "n": s.n,
        "profile": s.profile.to_string(),
        "z4": s.profile.z4,
        "z2": s.profile.z2,
        "order_log2": s.profile.order_log2(),
        "qh": s.dims.qh,
        "sh": s.dims.sh,
        "phi_rank": s.dims.phi_rank,
        "generators": s.generators.iter().map(|g| json!({
            "order": g.order,
            "w": support(&g.pair.w),
            "p": support(&g.pair.p),
        })).collect::<Vec<_>>(),
    })
}

fn ggroup(
    src: &Loaded,
    n: Option<usize>,
    engine: EngineArg,
    mode: ModeArg,
    budget: u64,
    em: &mut Emitter,
) -> Result<(), CliError> {
    let n = match n {
        Some(n) => n,
        None => match &src.manifold {
            Some(Ok(m)) => m.n(),
            _ => src.complex.dim().unwrap_or(0),
        },
    };
    let pair = &src.pair;
    match (mode, engine) {
        (ModeArg::Spin, EngineArg::Bruteforce) => {
            Err(CliError::Usage("the brute-force engine covers the pin group only".into()))
        }
        (ModeArg::Spin, EngineArg::Formula) => {
            let s = g_spin_profile(pair, n)?;
            em.emit(
                with(
                    base("ggroup", src),
                    json!({
                        "mode": "spin",
                        "n": n,
                        "engine": "formula",
                        "profile": s.to_string(),
                        "resolved": s.resolved.is_some(),
                        "circle_rank": s.circle_rank,
                        "torsion_rank": s.torsion_rank,
                        "sh_bounds": [s.sh_bounds.0, s.sh_bounds.1],
                    }),
                ),
                format!("{}: G_{n}^spin = {s}", src.source),
            );
            Ok(())
        }
        (ModeArg::Pin, EngineArg::Formula) => {
            let s = g_pin(pair, n)?;
            let mut text = format!(
                "{}: G_{n}^pin = {}  (QH {}, SH {}, rank φ {})",
                src.source, s.profile, s.dims.qh, s.dims.sh, s.dims.phi_rank
            );
            for g in &s.generators {
                text.push_str(&format!(
                    "\n  generator of order {}: w on {:?}, p on {:?}",
                    g.order,
                    support(&g.pair.w),
                    support(&g.pair.p)
                ));
            }
            let mut rec = base("ggroup", src);
            rec.insert("mode".into(), json!("pin"));
            rec.insert("engine".into(), json!("formula"));
            em.emit(with(rec, structure_json(&s)), text);
            Ok(())
        }
        (ModeArg::Pin, EngineArg::Bruteforce) => {
            let r = g_pin_bruteforce(pair, n, u128::from(budget))?;
            let s = &r.structure;
            let mut rec = base("ggroup", src);
            rec.insert("mode".into(), json!("pin"));
            rec.insert("engine".into(), json!("bruteforce"));
            rec.insert("pairs".into(), json!(r.pairs));
            rec.insert("relation_generators".into(), json!(r.relations));
            rec.insert("abelian".into(), json!(r.abelian));
            if !r.abelian {
                em.fail();
            }
            em.emit(
                with(rec, structure_json(s)),
                format!(
                    "{}: G_{n}^pin = {}  ({} pairs enumerated, QH {}, SH {}, rank φ {})",
                    src.source, s.profile, r.pairs, s.dims.qh, s.dims.sh, s.dims.phi_rank
                ),
            );
            Ok(())
        }
    }
}

fn identities(
    seed: u64,
    trials: usize,
    max_dim: usize,
    names: &[String],
    mutated: bool,
    em: &mut Emitter,
) -> Result<(), CliError> {
    let suites = if names.is_empty() {
        Suite::ALL.to_vec()
    } else {
        names
            .iter()
            .map(|s| {
                Suite::from_name(s).ok_or_else(|| {
                    CliError::Usage(format!(
                        "unknown suite {s:?}; known: {}",
                        join(Suite::ALL.iter().map(|s| s.name()), ", ")
                    ))
                })
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    let rule = if mutated { SignRule::Mutated } else { SignRule::Standard };
    let config = format!(
        "seed={seed};trials={trials};max_dim={max_dim};suites={};rule={}",
        join(suites.iter().map(|s| s.name()), ","),
        if mutated { "mutated" } else { "standard" }
    );
    let hash = sha256_hex(config.as_bytes());
    let cfg = IdentityConfig {
        seed,
        trials,
        max_dim,
        rule,
    };
    let reports = if trials == 0 { Vec::new() } else { run_suites(&suites, &cfg) };
    let mut failures = 0;
    for r in &reports {
        failures += r.failures;
        if !r.passed() {
            em.fail();
        }
        let (at, first) = match &r.first_failure {
            Some((i, s)) => (Some(*i), Some(s.clone())),
            None => (None, None),
        };
        let mut text = format!(
            "  {:<22} {:>6} trials {:>6} failures  {}",
            r.suite.name(),
            r.trials,
            r.failures,
            if r.passed() { "pass" } else { "FAIL" }
        );
        if let (Some(i), Some(s)) = (at, &first) {
            text.push_str(&format!("\n    first failure at trial {i}: {s}"));
        }
        em.emit(
            json!({
                "command": "identities",
                "config": config,
                "sha256": hash,
                "suite": r.suite.name(),
                "trials": r.trials,
                "failures": r.failures,
                "first_failure_trial": at,
                "first_failure": first,
            }),
            text,
        );
    }
    em.emit(
        json!({
            "command": "identities",
            "config": config,
            "sha256": hash,
            "summary": true,
            "suites": reports.len(),
            "failures": failures,
        }),
        format!("identities ({config}): {} suites, {failures} failures", reports.len()),
    );
    Ok(())
}
