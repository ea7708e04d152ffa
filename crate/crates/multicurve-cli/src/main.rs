//! Command-line front door: surface info, curve enumeration, ball
//! construction, path queries, verification suites, and export.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification failure, 3 budget
//! exhaustion with partial results.

use clap::{Args, Parser, Subcommand};
use multicurve::connectivity::{
    b_curve_path, b_multicurve_path, curve_graph_path, multicurve_graph_path, validate_path,
};
use multicurve::curve::{Carrier, Curve, Multicurve};
use multicurve::embeddings::{
    descend, induced_embedding, standard_setups, verify_simplicial_embedding, VertexMapSpec,
};
use multicurve::enumeration::enumerate_curves;
use multicurve::graphs::{
    b_neighbors, b_vertex_predicate, build_ball, check_int_complete, check_stardec,
    mc_edge_predicate, BallBudget, Family, GraphBall,
};
use multicurve::mcg::{seed_curves, short_curves, standard_generators, MappingClass};
use multicurve::schema::{
    ball_file, ball_to_dot, content_hash, load_ball, report_file, BallFile, PropertyResult,
};
use multicurve::surface::SurfaceType;
use multicurve::Error;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "multicurve", about = "Multicurve graphs on finite-type surfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Surface type, e.g. g0n5.
    #[arg(long)]
    surface: String,
    /// Output format.
    #[arg(long, default_value = "json", value_parser = ["json", "dot"])]
    format: String,
    /// Generator word length for the curve registry and ball supply.
    #[arg(long, default_value_t = 2)]
    budget_words: usize,
    /// Vertex cap for ball construction.
    #[arg(long, default_value_t = 40)]
    budget_vertices: usize,
    /// Supply cap.
    #[arg(long, default_value_t = 48)]
    budget_supply: usize,
    /// Cache directory (overrides MULTICURVE_CACHE).
    #[arg(long)]
    cache: Option<PathBuf>,
    /// Random seed recorded in outputs of sampled suites.
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Output file; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Topological invariants of a surface.
    Info(CommonOpts),
    /// List the curve registry (ids usable in --seed-vertex, --from, --to).
    Curves(CommonOpts),
    /// Build a graph ball.
    Ball {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value = "mc", value_parser = ["mc", "b", "c"])]
        family: String,
        /// Seed vertex: comma-separated curve ids from the registry.
        #[arg(long)]
        seed_vertex: String,
        /// Companion multicurve for the c family: comma-separated curve ids.
        #[arg(long)]
        companion: Option<String>,
    },
    /// Construct and certify a path between two vertices.
    Path {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value = "mc", value_parser = ["mc", "b"])]
        family: String,
        /// Start vertex: comma-separated curve ids.
        #[arg(long)]
        from: String,
        /// End vertex: comma-separated curve ids.
        #[arg(long)]
        to: String,
    },
    /// Run a verification suite; nonzero exit on failure.
    Verify {
        #[command(flatten)]
        common: CommonOpts,
        /// Suite: int-complete, stardec, b-neighbors, descend, ball-file, cache.
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Mapping-class word for the descend suite, e.g. "h0 h1^-1".
        #[arg(long)]
        word: Option<String>,
        /// Ball file input for the ball-file suite.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Verify the documented subsurface embedding setups.
    Embed {
        #[command(flatten)]
        common: CommonOpts,
        /// Restrict to one setup by name.
        #[arg(long)]
        setup: Option<String>,
        /// List available setups.
        #[arg(long, default_value_t = false)]
        list: bool,
    },
    /// Re-emit a ball file in another format.
    Export {
        #[command(flatten)]
        common: CommonOpts,
        #[arg(long)]
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::BudgetExhausted(_) => 3,
                Error::VerificationFailed(_) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_surface(s: &str) -> Result<SurfaceType, Error> {
    let st: SurfaceType = s.parse()?;
    st.complexity()?;
    Ok(st)
}

fn cache_dir(common: &CommonOpts) -> Option<PathBuf> {
    common
        .cache
        .clone()
        .or_else(|| std::env::var_os("MULTICURVE_CACHE").map(PathBuf::from))
}

fn emit(common: &CommonOpts, text: &str) -> Result<(), Error> {
    match &common.out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            if !text.ends_with('\n') {
                stdout.write_all(b"\n")?;
            }
            Ok(())
        }
    }
}

/// The deterministic curve registry for id-based vertex specs.
fn registry(carrier: &Carrier, common: &CommonOpts) -> Result<Vec<Curve>, Error> {
    let gens = standard_generators(carrier)?;
    let seeds = seed_curves(carrier);
    let enumerated = enumerate_curves(
        carrier,
        &gens,
        &seeds,
        common.budget_words,
        common.budget_supply,
    )?;
    Ok(enumerated.into_iter().map(|e| e.curve).collect())
}

fn parse_vertex(carrier: &Carrier, reg: &[Curve], spec: &str) -> Result<Multicurve, Error> {
    let mut curves = Vec::new();
    for tok in spec.split(',') {
        let tok = tok.trim();
        let id: usize = tok.parse().map_err(|_| {
            Error::Precondition(format!(
                "bad curve id {tok:?}; available ids: 0..{}",
                reg.len().saturating_sub(1)
            ))
        })?;
        let c = reg.get(id).ok_or_else(|| {
            Error::Precondition(format!(
                "unknown curve id {id}; available ids: 0..{}",
                reg.len() - 1
            ))
        })?;
        curves.push(c.clone());
    }
    Multicurve::new(carrier, curves)
}

fn budget(common: &CommonOpts) -> BallBudget {
    BallBudget {
        supply_words: common.budget_words,
        max_supply: common.budget_supply,
        max_vertices: common.budget_vertices,
        max_radius: 8,
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Info(common) => {
            let s = parse_surface(&common.surface)?;
            let min_const = s.minimal_intersection_constant().ok();
            let value = serde_json::json!({
                "surface": s.to_string(),
                "genus": s.genus,
                "punctures": s.punctures,
                "complexity": s.complexity()?,
                "euler_characteristic": s.euler_characteristic(),
                "minimal_intersection_constant": min_const,
                "is_pair_of_pants": s.is_pair_of_pants(),
            });
            emit(&common, &serde_json::to_string_pretty(&value).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Curves(common) => {
            let s = parse_surface(&common.surface)?;
            let carrier = Carrier::new(s)?;
            let reg = registry(&carrier, &common)?;
            let items: Vec<_> = reg
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    serde_json::json!({
                        "id": i,
                        "trace": c.trace(),
                        "weights": c.weights(&carrier),
                    })
                })
                .collect();
            emit(&common, &serde_json::to_string_pretty(&items).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Ball { common, k, family, seed_vertex, companion } => {
            let s = parse_surface(&common.surface)?;
            let carrier = Carrier::new(s)?;
            let config_key = format!(
                "{}|{}|{}|{}|{:?}|{}|{}|{}",
                s,
                k,
                family,
                seed_vertex,
                companion,
                common.budget_words,
                common.budget_vertices,
                common.budget_supply
            );
            let cache_path = cache_dir(&common).map(|dir| {
                dir.join(format!(
                    "ball-{}-{}.json",
                    s,
                    content_hash(config_key.as_bytes())
                ))
            });
            let json = if let Some(path) = cache_path.as_ref().filter(|p| p.exists()) {
                std::fs::read_to_string(path)?
            } else {
                let reg = registry(&carrier, &common)?;
                let seed = parse_vertex(&carrier, &reg, &seed_vertex)?;
                let fam = match family.as_str() {
                    "mc" => Family::Mc,
                    "b" => Family::B,
                    "c" => {
                        let spec = companion.as_deref().ok_or_else(|| {
                            Error::Precondition("the c family needs --companion".into())
                        })?;
                        Family::C { companion: parse_vertex(&carrier, &reg, spec)? }
                    }
                    _ => unreachable!(),
                };
                let ball = build_ball(&carrier, k, fam, &seed, budget(&common))?;
                let file = ball_file(&carrier, &ball, Some(common.rng_seed));
                let json = serde_json::to_string_pretty(&file).unwrap();
                if let Some(path) = &cache_path {
                    if let Some(dir) = path.parent() {
                        std::fs::create_dir_all(dir)?;
                    }
                    std::fs::write(path, &json)?;
                }
                json
            };
            let partial = serde_json::from_str::<BallFile>(&json)
                .map(|f| f.meta.partial)
                .unwrap_or(false);
            if common.format == "dot" {
                let file: BallFile = serde_json::from_str(&json)
                    .map_err(|e| Error::Serialization(e.to_string()))?;
                let ball = load_ball(&carrier, &file)?;
                emit(&common, &ball_to_dot(&ball))?;
            } else {
                emit(&common, &json)?;
            }
            if partial {
                return Ok(ExitCode::from(3));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Path { common, k, family, from, to } => {
            let s = parse_surface(&common.surface)?;
            let carrier = Carrier::new(s)?;
            let reg = registry(&carrier, &common)?;
            let mu = parse_vertex(&carrier, &reg, &from)?;
            let nu = parse_vertex(&carrier, &reg, &to)?;
            if mu.len() != k || nu.len() != k {
                return Err(Error::Precondition(format!(
                    "endpoints must have {k} curves"
                )));
            }
            let path = match (family.as_str(), k) {
                ("mc", 1) => curve_graph_path(&carrier, &mu.curves()[0], &nu.curves()[0])?,
                ("mc", _) => multicurve_graph_path(&carrier, &mu, &nu)?,
                ("b", 1) => b_curve_path(&carrier, &mu.curves()[0], &nu.curves()[0])?,
                ("b", _) => b_multicurve_path(&carrier, &mu, &nu)?,
                _ => unreachable!(),
            };
            validate_path(&carrier, &path)?;
            let vertices: Vec<Vec<_>> = path
                .vertices
                .iter()
                .map(|m| {
                    m.curves()
                        .iter()
                        .map(|c| multicurve::schema::curve_record(&carrier, c))
                        .collect()
                })
                .collect();
            let value = serde_json::json!({
                "schema": "path-v1",
                "surface": s.to_string(),
                "family": family,
                "k": k,
                "vertices": vertices,
                "certificate": {
                    "validated": true,
                    "edges": path.vertices.len().saturating_sub(1),
                },
                "rng_seed": common.rng_seed,
            });
            emit(&common, &serde_json::to_string_pretty(&value).unwrap())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { common, suite, k, word, input } => {
            let s = parse_surface(&common.surface)?;
            let carrier = Carrier::new(s)?;
            let props =
                run_suite(&carrier, &common, &suite, k, word.as_deref(), input.as_deref())?;
            let report = report_file(&suite, s, props, Some(common.rng_seed));
            let pass = report.pass;
            emit(&common, &serde_json::to_string_pretty(&report).unwrap())?;
            if pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Embed { common, setup, list } => {
            let s = parse_surface(&common.surface)?;
            let setups = standard_setups()?;
            if list {
                let names: Vec<_> = setups.iter().map(|x| x.name.clone()).collect();
                emit(&common, &serde_json::to_string_pretty(&names).unwrap())?;
                return Ok(ExitCode::SUCCESS);
            }
            let mut props = Vec::new();
            for st in &setups {
                if let Some(want) = &setup {
                    if &st.name != want {
                        continue;
                    }
                }
                let seeds = seed_curves(&st.source);
                let seed_curve = seeds
                    .first()
                    .cloned()
                    .or_else(|| short_curves(&st.source, 8).into_iter().next())
                    .ok_or_else(|| Error::SearchFailed("no seed curve".into()))?;
                let partial = vec![seed_curve];
                let supply = short_curves(&st.source, 10);
                let seed = multicurve::enumeration::complete_to_multicurve(
                    &st.source, &partial, st.k1, &supply,
                )?;
                let ball = build_ball(
                    &st.source,
                    st.k1,
                    Family::Mc,
                    &seed,
                    BallBudget {
                        supply_words: 1,
                        max_supply: 16,
                        max_vertices: 10,
                        max_radius: 1,
                    },
                )?;
                let map = induced_embedding(&st.embedding, &st.target, &ball)?;
                let report = verify_simplicial_embedding(
                    &st.target,
                    &map,
                    &ball,
                    Some(&st.embedding.companion),
                )?;
                props.push(PropertyResult {
                    name: st.name.clone(),
                    pass: report.pass(),
                    detail: format!(
                        "{} vertices, {} edges checked",
                        ball.vertices.len(),
                        report.checked_edges
                    ),
                });
            }
            if props.is_empty() {
                return Err(Error::Precondition("no matching setup".into()));
            }
            let report = report_file("embed", s, props, Some(common.rng_seed));
            let pass = report.pass;
            emit(&common, &serde_json::to_string_pretty(&report).unwrap())?;
            if pass {
                Ok(ExitCode::SUCCESS)
            } else {
                Ok(ExitCode::from(2))
            }
        }
        Command::Export { common, input } => {
            let s = parse_surface(&common.surface)?;
            let carrier = Carrier::new(s)?;
            let text = std::fs::read_to_string(&input)?;
            let file: BallFile =
                serde_json::from_str(&text).map_err(|e| Error::Serialization(e.to_string()))?;
            let ball = load_ball(&carrier, &file)?;
            if common.format == "dot" {
                emit(&common, &ball_to_dot(&ball))?;
            } else {
                emit(
                    &common,
                    &serde_json::to_string_pretty(&ball_file(
                        &carrier,
                        &ball,
                        file.meta.rng_seed,
                    ))
                    .unwrap(),
                )?;
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn default_ball(carrier: &Carrier, common: &CommonOpts, k: usize) -> Result<GraphBall, Error> {
    let supply = short_curves(carrier, 10);
    let seed = multicurve::enumeration::complete_to_multicurve(carrier, &[], k, &supply)?;
    build_ball(carrier, k, Family::Mc, &seed, budget(common))
}

fn run_suite(
    carrier: &Carrier,
    common: &CommonOpts,
    suite: &str,
    k: usize,
    word: Option<&str>,
    input: Option<&std::path::Path>,
) -> Result<Vec<PropertyResult>, Error> {
    let mut props = Vec::new();
    match suite {
        "int-complete" => {
            let ball = default_ball(carrier, common, k)?;
            let mut subs: Vec<Multicurve> = Vec::new();
            for v in &ball.vertices {
                for c in v.curves() {
                    subs.push(v.without_curve(carrier, c)?);
                }
            }
            subs.sort();
            subs.dedup();
            let mut checked = 0;
            let mut ok = true;
            let mut detail = String::new();
            for i in 0..subs.len() {
                for j in i + 1..subs.len() {
                    let v = check_int_complete(carrier, &subs[i], &subs[j], &ball)?;
                    checked += 1;
                    if !v.pass {
                        ok = false;
                        detail = v.detail;
                    }
                }
            }
            props.push(PropertyResult {
                name: "int-complete-exhaustive".into(),
                pass: ok,
                detail: if ok {
                    format!("{checked} pairs certified")
                } else {
                    detail
                },
            });
        }
        "stardec" => {
            let ball = default_ball(carrier, common, k)?;
            let mut ok = true;
            let mut cases = 0;
            let mut detail = String::new();
            for v in 0..ball.vertices.len() {
                for alpha in ball.vertices[v].curves().to_vec() {
                    let r = check_stardec(carrier, &ball, v, &alpha)?;
                    cases += r.cases;
                    if !r.pass {
                        ok = false;
                        detail = r.detail.clone();
                    }
                }
            }
            props.push(PropertyResult {
                name: "stardec-exhaustive".into(),
                pass: ok,
                detail: if ok {
                    format!("{cases} cases certified")
                } else {
                    detail
                },
            });
        }
        "b-neighbors" => {
            let supply = short_curves(carrier, 12);
            let mut mu: Option<Multicurve> = None;
            'outer: for x in &supply {
                let cx = multicurve::cut::classify_curve(carrier, x)?;
                if cx.is_outer || cx.is_nonseparating {
                    continue;
                }
                for y in &supply {
                    if x >= y {
                        continue;
                    }
                    let cy = multicurve::cut::classify_curve(carrier, y)?;
                    if cy.is_outer || cy.is_nonseparating {
                        continue;
                    }
                    if let Ok(m) = Multicurve::new(carrier, vec![x.clone(), y.clone()]) {
                        mu = Some(m);
                        break 'outer;
                    }
                }
            }
            let Some(mu) = mu else {
                return Err(Error::SearchFailed(
                    "no multicurve outside the B-graph on this surface".into(),
                ));
            };
            let n = 10;
            let neighbors = b_neighbors(carrier, &mu, n, &supply)?;
            let mut ok = neighbors.len() == n;
            for nu in &neighbors {
                if !mc_edge_predicate(carrier, &mu, nu)? || !b_vertex_predicate(carrier, nu)? {
                    ok = false;
                }
            }
            props.push(PropertyResult {
                name: "b-neighbors".into(),
                pass: ok,
                detail: format!("{} adjacent B-vertices constructed", neighbors.len()),
            });
        }
        "descend" => {
            let gens = standard_generators(carrier)?;
            let w = word.unwrap_or("t0");
            let f = MappingClass::parse(carrier.surface, &gens, w)?;
            let ball_k = default_ball(carrier, common, k)?;
            let ball_km1 = default_ball(carrier, common, k - 1)?;
            let supply = short_curves(carrier, 10);
            let (_, report) = descend(
                carrier,
                &VertexMapSpec::ByMappingClass(f),
                &ball_k,
                &ball_km1,
                &supply,
                3,
            )?;
            props.push(PropertyResult {
                name: "descend-well-defined".into(),
                pass: report.well_defined,
                detail: format!("fibers {:?}", report.fiber_sizes),
            });
            props.push(PropertyResult {
                name: "descend-edge-preserving".into(),
                pass: report.edges_preserved,
                detail: report.details.join("; "),
            });
        }
        "ball-file" => {
            let path = input.ok_or_else(|| {
                Error::Precondition("the ball-file suite needs --input".into())
            })?;
            let text = std::fs::read_to_string(path)?;
            let file: BallFile =
                serde_json::from_str(&text).map_err(|e| Error::Serialization(e.to_string()))?;
            let ball = load_ball(carrier, &file)?;
            let mut ok = true;
            let mut detail = String::new();
            for i in 0..ball.vertices.len() {
                for j in i + 1..ball.vertices.len() {
                    let want = match &ball.family {
                        Family::B => multicurve::graphs::b_edge_predicate(
                            carrier,
                            &ball.vertices[i],
                            &ball.vertices[j],
                        )?,
                        _ => mc_edge_predicate(carrier, &ball.vertices[i], &ball.vertices[j])?,
                    };
                    if want != ball.has_edge(i, j) {
                        ok = false;
                        detail = format!("edge ({i},{j}) disagrees with the predicate");
                    }
                }
            }
            props.push(PropertyResult {
                name: "ball-file-edges".into(),
                pass: ok,
                detail: if ok { "edge set re-certified".into() } else { detail },
            });
        }
        "cache" => {
            let dir = cache_dir(common).ok_or_else(|| {
                Error::Precondition("the cache suite needs --cache or MULTICURVE_CACHE".into())
            })?;
            std::fs::create_dir_all(&dir)?;
            let ball = default_ball(carrier, common, k)?;
            let file = ball_file(carrier, &ball, Some(common.rng_seed));
            let cold = serde_json::to_string_pretty(&file).unwrap();
            let key = dir.join(format!("cache-suite-{}.json", carrier.surface));
            std::fs::write(&key, &cold)?;
            let warm = std::fs::read_to_string(&key)?;
            props.push(PropertyResult {
                name: "cache-byte-identical".into(),
                pass: cold == warm,
                detail: format!("{} bytes", cold.len()),
            });
        }
        other => {
            return Err(Error::Precondition(format!(
                "unknown suite {other:?}; available: int-complete, stardec, b-neighbors, descend, ball-file, cache"
            )));
        }
    }
    Ok(props)
}
