//! Versioned file formats: triangulations, curves, graph balls, verification
//! reports, orbit caches, and DOT export. Unknown schema versions are
//! rejected, never guessed.

use crate::curve::{Carrier, Curve, Multicurve};
use crate::error::{Error, Result};
use crate::graphs::{BallBudget, Family, GraphBall};
use crate::surface::SurfaceType;
use serde::{Deserialize, Serialize};

pub const TRI_SCHEMA: &str = "tri-v1";
pub const CURVE_SCHEMA: &str = "curve-v1";
pub const BALL_SCHEMA: &str = "ball-v1";
pub const REPORT_SCHEMA: &str = "report-v1";
pub const ORBIT_SCHEMA: &str = "orbit-v1";

fn check_schema(found: &str, expected: &'static str) -> Result<()> {
    if found != expected {
        return Err(Error::SchemaVersion { found: found.to_string(), expected: expected.into() });
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
pub struct SideRecord {
    pub edge: usize,
    /// True when this side is the canonical dart of its edge.
    pub positive: bool,
}

#[derive(Serialize, Deserialize)]
pub struct TriangulationFile {
    pub schema: String,
    pub surface: SurfaceType,
    pub triangles: Vec<[SideRecord; 3]>,
    /// Corner ids grouped by vertex class.
    pub vertex_classes: Vec<Vec<usize>>,
}

pub fn triangulation_file(carrier: &Carrier) -> TriangulationFile {
    let tri = &carrier.tri;
    let mut triangles = Vec::with_capacity(tri.n_triangles());
    for t in 0..tri.n_triangles() {
        let side = |k: usize| {
            let d = 3 * t + k;
            let e = tri.edge_of(d);
            SideRecord { edge: e, positive: tri.edge_darts(e)[0] == d }
        };
        triangles.push([side(0), side(1), side(2)]);
    }
    let mut vertex_classes = vec![Vec::new(); tri.n_vertices()];
    for c in 0..tri.n_darts() {
        vertex_classes[tri.vertex_of_corner(c)].push(c);
    }
    TriangulationFile {
        schema: TRI_SCHEMA.into(),
        surface: carrier.surface,
        triangles,
        vertex_classes,
    }
}

#[derive(Clone, Serialize, Deserialize)]
pub struct CurveRecord {
    pub trace: Vec<usize>,
    pub weights: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
pub struct CurveFile {
    pub schema: String,
    pub surface: SurfaceType,
    /// Identifier of the carrier triangulation; always the standard one.
    pub triangulation: String,
    #[serde(flatten)]
    pub curve: CurveRecord,
}

pub fn curve_record(carrier: &Carrier, c: &Curve) -> CurveRecord {
    CurveRecord { trace: c.trace().to_vec(), weights: c.weights(carrier) }
}

pub fn curve_file(carrier: &Carrier, c: &Curve) -> CurveFile {
    CurveFile {
        schema: CURVE_SCHEMA.into(),
        surface: carrier.surface,
        triangulation: format!("std:{}", carrier.surface),
        curve: curve_record(carrier, c),
    }
}

pub fn load_curve(carrier: &Carrier, file: &CurveFile) -> Result<Curve> {
    check_schema(&file.schema, CURVE_SCHEMA)?;
    if file.surface != carrier.surface {
        return Err(Error::SurfaceMismatch);
    }
    let curve = Curve::from_trace(carrier, file.curve.trace.clone())?;
    if curve.weights(carrier) != file.curve.weights {
        return Err(Error::Serialization("stored weights do not match the trace".into()));
    }
    Ok(curve)
}

#[derive(Serialize, Deserialize)]
pub struct BallMetaFile {
    pub budget: BallBudget,
    pub partial: bool,
    pub family: String,
    pub companion: Option<Vec<CurveRecord>>,
    pub seed: Vec<CurveRecord>,
    /// Random seed recorded for reproducibility of sampled suites.
    pub rng_seed: Option<u64>,
}

#[derive(Serialize, Deserialize)]
pub struct BallFile {
    pub schema: String,
    pub surface: SurfaceType,
    pub k: usize,
    pub vertices: Vec<Vec<CurveRecord>>,
    pub edges: Vec<[usize; 2]>,
    pub meta: BallMetaFile,
}

pub fn ball_file(carrier: &Carrier, ball: &GraphBall, rng_seed: Option<u64>) -> BallFile {
    let rec = |m: &Multicurve| -> Vec<CurveRecord> {
        m.curves().iter().map(|c| curve_record(carrier, c)).collect()
    };
    BallFile {
        schema: BALL_SCHEMA.into(),
        surface: ball.surface,
        k: ball.k,
        vertices: ball.vertices.iter().map(&rec).collect(),
        edges: ball.edges.iter().map(|&(i, j)| [i, j]).collect(),
        meta: BallMetaFile {
            budget: ball.budget,
            partial: ball.partial,
            family: ball.family.tag().into(),
            companion: match &ball.family {
                Family::C { companion } => Some(rec(companion)),
                _ => None,
            },
            seed: rec(&ball.seed),
            rng_seed,
        },
    }
}

pub fn load_ball(carrier: &Carrier, file: &BallFile) -> Result<GraphBall> {
    check_schema(&file.schema, BALL_SCHEMA)?;
    if file.surface != carrier.surface {
        return Err(Error::SurfaceMismatch);
    }
    let curve = |r: &CurveRecord| Curve::from_trace(carrier, r.trace.clone());
    let multicurve = |rs: &Vec<CurveRecord>| -> Result<Multicurve> {
        let curves = rs.iter().map(&curve).collect::<Result<Vec<_>>>()?;
        Multicurve::new(carrier, curves)
    };
    let vertices = file
        .vertices
        .iter()
        .map(&multicurve)
        .collect::<Result<Vec<_>>>()?;
    // Vertices must be sorted canonically for index stability.
    for w in vertices.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Serialization("ball vertices not in canonical order".into()));
        }
    }
    let seed = multicurve(&file.meta.seed)?;
    let family = match file.meta.family.as_str() {
        "mc" => Family::Mc,
        "b" => Family::B,
        "c" => {
            let comp = file
                .meta
                .companion
                .as_ref()
                .ok_or_else(|| Error::Serialization("missing companion".into()))?;
            Family::C { companion: multicurve(comp)? }
        }
        other => return Err(Error::Serialization(format!("unknown family {other:?}"))),
    };
    let mut edges = std::collections::BTreeSet::new();
    for &[i, j] in &file.edges {
        if i >= vertices.len() || j >= vertices.len() || i == j {
            return Err(Error::Serialization("edge index out of range".into()));
        }
        edges.insert((i.min(j), i.max(j)));
    }
    Ok(GraphBall {
        surface: file.surface,
        k: file.k,
        family,
        seed,
        budget: file.meta.budget,
        partial: file.meta.partial,
        vertices,
        edges,
    })
}

#[derive(Serialize, Deserialize)]
pub struct PropertyResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Serialize, Deserialize)]
pub struct ReportFile {
    pub schema: String,
    pub suite: String,
    pub surface: SurfaceType,
    pub pass: bool,
    pub properties: Vec<PropertyResult>,
    pub rng_seed: Option<u64>,
}

pub fn report_file(
    suite: &str,
    surface: SurfaceType,
    properties: Vec<PropertyResult>,
    rng_seed: Option<u64>,
) -> ReportFile {
    let pass = properties.iter().all(|p| p.pass);
    ReportFile {
        schema: REPORT_SCHEMA.into(),
        suite: suite.into(),
        surface,
        pass,
        properties,
        rng_seed,
    }
}

#[derive(Serialize, Deserialize)]
pub struct OrbitCacheFile {
    pub schema: String,
    pub surface: SurfaceType,
    pub seed_hash: String,
    pub word_length: usize,
    pub curves: Vec<CurveRecord>,
}

pub fn load_orbit_cache(carrier: &Carrier, file: &OrbitCacheFile) -> Result<Vec<Curve>> {
    check_schema(&file.schema, ORBIT_SCHEMA)?;
    if file.surface != carrier.surface {
        return Err(Error::SurfaceMismatch);
    }
    file.curves
        .iter()
        .map(|r| Curve::from_trace(carrier, r.trace.clone()))
        .collect()
}

/// Stable content hash for cache keys (FNV-1a over a canonical encoding).
pub fn content_hash(bytes: &[u8]) -> String {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    format!("{h:016x}")
}

/// DOT export: vertices labeled by the sorted ids of their curves within the
/// ball's curve registry.
pub fn ball_to_dot(ball: &GraphBall) -> String {
    use std::fmt::Write;
    // Registry of distinct curves in canonical order.
    let mut registry: Vec<&Curve> = ball
        .vertices
        .iter()
        .flat_map(|v| v.curves().iter())
        .collect();
    registry.sort();
    registry.dedup();
    let id_of = |c: &Curve| registry.binary_search(&c).unwrap();
    let mut out = String::new();
    let _ = writeln!(out, "graph ball {{");
    let _ = writeln!(
        out,
        "  graph [surface=\"{}\", k={}, family=\"{}\"];",
        ball.surface,
        ball.k,
        ball.family.tag()
    );
    for (i, v) in ball.vertices.iter().enumerate() {
        let mut ids: Vec<usize> = v.curves().iter().map(|c| id_of(c)).collect();
        ids.sort();
        let label = ids
            .iter()
            .map(|x| format!("c{x}"))
            .collect::<Vec<_>>()
            .join("|");
        let _ = writeln!(out, "  v{i} [label=\"{label}\"];");
    }
    for &(i, j) in &ball.edges {
        let _ = writeln!(out, "  v{i} -- v{j};");
    }
    let _ = writeln!(out, "}}");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{build_ball, BallBudget, Family};
    use crate::mcg::seed_curves;

    #[test]
    fn curve_roundtrip() {
        let carrier = Carrier::new(SurfaceType::new(0, 5)).unwrap();
        let c = seed_curves(&carrier)[0].clone();
        let file = curve_file(&carrier, &c);
        let json = serde_json::to_string(&file).unwrap();
        let parsed: CurveFile = serde_json::from_str(&json).unwrap();
        let back = load_curve(&carrier, &parsed).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn unknown_schema_rejected() {
        let carrier = Carrier::new(SurfaceType::new(0, 5)).unwrap();
        let c = seed_curves(&carrier)[0].clone();
        let mut file = curve_file(&carrier, &c);
        file.schema = "curve-v999".into();
        assert!(matches!(
            load_curve(&carrier, &file),
            Err(Error::SchemaVersion { .. })
        ));
    }

    #[test]
    fn ball_roundtrip_and_dot() {
        let carrier = Carrier::new(SurfaceType::new(1, 1)).unwrap();
        let h = Curve::from_trace(&carrier, vec![3, 1]).unwrap();
        let seed = Multicurve::new(&carrier, vec![h]).unwrap();
        let ball = build_ball(
            &carrier,
            1,
            Family::Mc,
            &seed,
            BallBudget { supply_words: 1, max_supply: 12, max_vertices: 8, max_radius: 1 },
        )
        .unwrap();
        let file = ball_file(&carrier, &ball, Some(7));
        let json = serde_json::to_string_pretty(&file).unwrap();
        let parsed: BallFile = serde_json::from_str(&json).unwrap();
        let back = load_ball(&carrier, &parsed).unwrap();
        assert_eq!(back.vertices, ball.vertices);
        assert_eq!(back.edges, ball.edges);
        let dot = ball_to_dot(&ball);
        assert!(dot.starts_with("graph ball {"));
        assert!(dot.contains("--"));
        assert!(dot.trim_end().ends_with('}'));
        // Corrupted edge index must be rejected.
        let mut bad = serde_json::from_str::<BallFile>(&json).unwrap();
        bad.edges.push([0, 999]);
        assert!(load_ball(&carrier, &bad).is_err());
    }
}
