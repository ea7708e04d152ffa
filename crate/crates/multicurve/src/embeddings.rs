//! Induced simplicial embeddings and the rigidity descent.
//!
//! A subsurface embedding with companion multicurve sends a k-multicurve to
//! its image union the companion; the result should be injective, carry edges
//! to edges, and land among vertices containing the companion. The descent
//! takes an automorphism-like vertex map on k-multicurves and produces its
//! action on (k-1)-multicurves through the edge-to-common-part map, checking
//! that all edges over a fiber agree.

use crate::curve::{intersection_number, is_isotopic, Carrier, Curve, Multicurve};
use crate::enumeration::enumerate_curves;
use crate::error::{Error, Result};
use crate::graphs::{mc_edge_predicate, pair_minimal_in_complement, GraphBall};
use crate::mcg::{apply, apply_multicurve, dehn_twist, standard_generators, Generator, MappingClass};

/// How a source generator acts on the target: a twist about an explicit
/// target curve, or a word in the target's standard generators.
#[derive(Clone, Debug)]
pub enum GenImage {
    Twist(Curve),
    Word(MappingClass),
}

impl GenImage {
    fn apply_power(
        &self,
        target: &Carrier,
        tgt_gens: &[Generator],
        power: i32,
        curve: &Curve,
    ) -> Result<Curve> {
        match self {
            GenImage::Twist(c) => {
                let sign: i8 = if power >= 0 { 1 } else { -1 };
                let mut cur = curve.clone();
                for _ in 0..power.unsigned_abs() {
                    cur = dehn_twist(target, &cur, c, sign)?;
                }
                Ok(cur)
            }
            GenImage::Word(w) => {
                let piece = if power >= 0 { w.clone() } else { w.inverse() };
                let mut cur = curve.clone();
                for _ in 0..power.unsigned_abs() {
                    cur = apply(target, tgt_gens, &piece, &cur)?;
                }
                Ok(cur)
            }
        }
    }
}
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A realized subsurface embedding: a finite injective curve map into the
/// complement of a companion multicurve on the target.
pub struct SubsurfaceEmbedding {
    pub source: crate::surface::SurfaceType,
    pub target: crate::surface::SurfaceType,
    /// Companion curves on the target; empty for self-maps.
    pub companion: Vec<Curve>,
    map: BTreeMap<Curve, Curve>,
    /// Self-maps evaluate lazily through a mapping class instead of the table.
    self_word: Option<(Vec<Generator>, MappingClass)>,
}

impl SubsurfaceEmbedding {
    /// Theorem-A dimension bookkeeping: the complexity difference must equal
    /// the companion size.
    pub fn dimension_check(&self) -> Result<()> {
        let xs = self.source.complexity()?;
        let xt = self.target.complexity()?;
        if xs + self.companion.len() != xt {
            return Err(Error::Precondition(format!(
                "complexity difference {} does not match companion size {}",
                xt - xs.min(xt),
                self.companion.len()
            )));
        }
        Ok(())
    }

    /// A self-embedding induced by a mapping class (empty companion).
    pub fn from_mapping_class(carrier: &Carrier, word: MappingClass) -> Result<Self> {
        let gens = standard_generators(carrier)?;
        Ok(SubsurfaceEmbedding {
            source: carrier.surface,
            target: carrier.surface,
            companion: Vec::new(),
            map: BTreeMap::new(),
            self_word: Some((gens, word)),
        })
    }

    /// A proper subsurface embedding realized by matching generators and
    /// seeds: source curve `word(seed)` maps to `matched_word(matched_seed)`
    /// on the target. The finite map is built over the generator-word orbit of
    /// the seeds and validated: images are pairwise consistent with source
    /// intersection numbers, injective, and disjoint from the companion.
    pub fn matched(
        source: &Carrier,
        target: &Carrier,
        companion: Vec<Curve>,
        gen_images: Vec<GenImage>,
        seed_pairs: Vec<(Curve, Curve)>,
        word_length: usize,
        max_curves: usize,
    ) -> Result<Self> {
        let src_gens = standard_generators(source)?;
        if gen_images.len() != src_gens.len() {
            return Err(Error::Precondition(format!(
                "need one target action per source generator ({})",
                src_gens.len()
            )));
        }
        let tgt_gens = standard_generators(target)?;
        let seeds: Vec<Curve> = seed_pairs.iter().map(|(s, _)| s.clone()).collect();
        let enumerated =
            enumerate_curves(source, &src_gens, &seeds, word_length, max_curves)?;
        let mut map: BTreeMap<Curve, Curve> = BTreeMap::new();
        for ec in &enumerated {
            // Apply the translated provenance word to the matched seed.
            let mut image = seed_pairs[ec.seed_index].1.clone();
            for &(g, p) in &ec.word.word {
                image = gen_images[g].apply_power(target, &tgt_gens, p, &image)?;
            }
            if let Some(prev) = map.get(&ec.curve) {
                if prev != &image {
                    return Err(Error::VerificationFailed(
                        "curve map is not well defined over provenance words".into(),
                    ));
                }
            }
            map.insert(ec.curve.clone(), image);
        }
        let emb = SubsurfaceEmbedding {
            source: source.surface,
            target: target.surface,
            companion,
            map,
            self_word: None,
        };
        emb.validate(source, target)?;
        Ok(emb)
    }

    fn validate(&self, source: &Carrier, target: &Carrier) -> Result<()> {
        // Injectivity.
        let mut seen = BTreeMap::new();
        for (k, v) in &self.map {
            if let Some(prev) = seen.insert(v.clone(), k.clone()) {
                return Err(Error::VerificationFailed(format!(
                    "curve map collapses two curves (also {:?})",
                    prev.trace()
                )));
            }
        }
        // Companion disjointness and intersection preservation.
        let entries: Vec<(&Curve, &Curve)> = self.map.iter().collect();
        for (s, t) in &entries {
            for comp in &self.companion {
                if intersection_number(target, t, comp)? != 0
                    || is_isotopic(target, t, comp)?
                {
                    return Err(Error::VerificationFailed(
                        "image curve meets the companion".into(),
                    ));
                }
            }
            let _ = s;
        }
        for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                let si = intersection_number(source, entries[i].0, entries[j].0)?;
                let ti = intersection_number(target, entries[i].1, entries[j].1)?;
                if si != ti {
                    return Err(Error::VerificationFailed(format!(
                        "intersection numbers not preserved: {si} vs {ti}"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Image of a single source curve.
    pub fn map_curve(&self, target: &Carrier, c: &Curve) -> Result<Curve> {
        if let Some((gens, word)) = &self.self_word {
            return apply(target, gens, word, c);
        }
        self.map
            .get(c)
            .cloned()
            .ok_or_else(|| Error::Precondition("curve outside the realized map".into()))
    }

    /// Image of a multicurve: componentwise image union the companion.
    pub fn map_multicurve(&self, target: &Carrier, mu: &Multicurve) -> Result<Multicurve> {
        let mut curves: Vec<Curve> = Vec::with_capacity(mu.len() + self.companion.len());
        for c in mu.curves() {
            curves.push(self.map_curve(target, c)?);
        }
        curves.extend(self.companion.iter().cloned());
        Multicurve::new(target, curves)
    }
}

/// A named, fully realized embedding configuration for the verification
/// harness and the CLI.
pub struct EmbeddingSetup {
    pub name: String,
    pub source: Carrier,
    pub target: Carrier,
    pub k1: usize,
    pub embedding: SubsurfaceEmbedding,
}

/// The outer curve cutting off a pair of pants containing exactly the given
/// two punctures, from the short-curve supply.
fn outer_around(carrier: &Carrier, set: [usize; 2]) -> Result<Curve> {
    for c in crate::mcg::short_curves(carrier, 12) {
        let sys = crate::cut::cut_system(carrier, std::slice::from_ref(&c))?;
        for comp in &sys.components {
            if comp.surface_on_base()?.is_pair_of_pants() && comp.curve_sides.len() == 1 {
                let mut p = comp.original_punctures.clone();
                p.sort();
                if p == set.to_vec() {
                    return Ok(c);
                }
            }
        }
    }
    Err(Error::SearchFailed(format!("no outer curve around {set:?}")))
}

/// A curve one of whose complementary components contains exactly the given
/// original punctures (plus the curve side).
fn curve_enclosing(carrier: &Carrier, set: &[usize]) -> Result<Curve> {
    let mut want = set.to_vec();
    want.sort();
    for c in crate::mcg::short_curves(carrier, 12) {
        let sys = crate::cut::cut_system(carrier, std::slice::from_ref(&c))?;
        for comp in &sys.components {
            if comp.curve_sides.len() != 1 {
                continue;
            }
            let mut p = comp.original_punctures.clone();
            p.sort();
            if p == want && comp.surface_on_base()?.genus == 0 {
                return Ok(c);
            }
        }
    }
    Err(Error::SearchFailed(format!("no curve enclosing {set:?}")))
}

/// Sphere-into-sphere setup: the source punctures map to the first target
/// punctures plus the block enclosed by the companion; the last source
/// generator becomes the block transposition, calibrated among candidate
/// words by the embedding validation.
fn sphere_setup(src_n: usize, tgt_n: usize) -> Result<EmbeddingSetup> {
    let source = Carrier::new(crate::surface::SurfaceType::new(0, src_n))?;
    let target = Carrier::new(crate::surface::SurfaceType::new(0, tgt_n))?;
    let d = tgt_n - src_n;
    // Companion: nested curves around the trailing block {src_n-1, .., tgt_n-1}.
    let mut companion = Vec::new();
    for width in 2..=(d + 1) {
        let set: Vec<usize> = (tgt_n - width..tgt_n).collect();
        companion.push(if width == 2 {
            outer_around(&target, [set[0], set[1]])?
        } else {
            curve_enclosing(&target, &set)?
        });
    }
    // Seeds: source links map to the corresponding target links; the last
    // source link wraps the block.
    let mut seed_pairs = Vec::new();
    for p in 0..src_n - 2 {
        seed_pairs.push((
            outer_around(&source, [p, p + 1])?,
            outer_around(&target, [p, p + 1])?,
        ));
    }
    let last_set: Vec<usize> = (src_n - 2..tgt_n).collect();
    seed_pairs.push((
        outer_around(&source, [src_n - 2, src_n - 1])?,
        curve_enclosing(&target, &last_set)?,
    ));
    // Generator images: matching half-twists, with the last one the block
    // transposition word.
    let tgt_gens = standard_generators(&target)?;
    let src_gens = standard_generators(&source)?;
    let block_word: String = (src_n - 2..tgt_n - 1)
        .map(|i| format!("h{i}"))
        .collect::<Vec<_>>()
        .join(" ");
    let candidates = [
        block_word.clone(),
        block_word.split_whitespace().rev().collect::<Vec<_>>().join(" "),
    ];
    let mut last_err = None;
    for block in &candidates {
        let mut gen_images = Vec::new();
        for g in 0..src_gens.len() - 1 {
            gen_images.push(GenImage::Word(MappingClass::parse(
                target.surface,
                &tgt_gens,
                &format!("h{g}"),
            )?));
        }
        gen_images.push(GenImage::Word(MappingClass::parse(
            target.surface,
            &tgt_gens,
            block,
        )?));
        match SubsurfaceEmbedding::matched(
            &source,
            &target,
            companion.clone(),
            gen_images,
            seed_pairs.clone(),
            2,
            18,
        ) {
            Ok(embedding) => {
                return Ok(EmbeddingSetup {
                    name: format!("g0n{src_n}-into-g0n{tgt_n}"),
                    source,
                    target,
                    k1: 1,
                    embedding,
                })
            }
            Err(e) => last_err = Some(e),
        }
    }
    Err(last_err.unwrap())
}

/// Torus-into-torus setup: the once-punctured torus inside a larger genus-one
/// surface, its twist generators matched to twists about a chain found in the
/// complement of the companion.
fn torus_setup(tgt_n: usize) -> Result<EmbeddingSetup> {
    let source = Carrier::new(crate::surface::SurfaceType::new(1, 1))?;
    let target = Carrier::new(crate::surface::SurfaceType::new(1, tgt_n))?;
    let d = tgt_n - 1;
    let mut companion = Vec::new();
    for width in 2..=(d + 1) {
        let set: Vec<usize> = (tgt_n - width..tgt_n).collect();
        companion.push(if width == 2 {
            outer_around(&target, [set[0], set[1]])?
        } else {
            curve_enclosing(&target, &set)?
        });
    }
    // A once-crossing pair of nonseparating curves disjoint from the companion.
    let supply = crate::mcg::short_curves(&target, 10);
    let disjoint_ok = |c: &Curve| -> Result<bool> {
        for comp in &companion {
            if intersection_number(&target, c, comp)? != 0 || is_isotopic(&target, c, comp)? {
                return Ok(false);
            }
        }
        Ok(crate::cut::classify_curve(&target, c)?.is_nonseparating)
    };
    let mut pair: Option<(Curve, Curve)> = None;
    'outer: for i in 0..supply.len() {
        if !disjoint_ok(&supply[i])? {
            continue;
        }
        for j in 0..supply.len() {
            if i == j || !disjoint_ok(&supply[j])? {
                continue;
            }
            if intersection_number(&target, &supply[i], &supply[j])? == 1 {
                pair = Some((supply[i].clone(), supply[j].clone()));
                break 'outer;
            }
        }
    }
    let (c0, c1) = pair.ok_or_else(|| {
        Error::SearchFailed("no once-crossing pair in the companion complement".into())
    })?;
    let src_gens = standard_generators(&source)?;
    let src_chain: Vec<Curve> = src_gens
        .iter()
        .map(|g| match &g.kind {
            crate::mcg::GeneratorKind::Twist(c) => c.clone(),
            _ => unreachable!("torus generators are twists"),
        })
        .collect();
    let embedding = SubsurfaceEmbedding::matched(
        &source,
        &target,
        companion,
        vec![GenImage::Twist(c0.clone()), GenImage::Twist(c1.clone())],
        vec![(src_chain[0].clone(), c0), (src_chain[1].clone(), c1)],
        2,
        14,
    )?;
    Ok(EmbeddingSetup {
        name: format!("g1n1-into-g1n{tgt_n}"),
        source,
        target,
        k1: 1,
        embedding,
    })
}

fn self_setup(surface: crate::surface::SurfaceType, word: &str, k1: usize) -> Result<EmbeddingSetup> {
    let carrier = Carrier::new(surface)?;
    let gens = standard_generators(&carrier)?;
    let w = MappingClass::parse(surface, &gens, word)?;
    let embedding = SubsurfaceEmbedding::from_mapping_class(&carrier, w)?;
    Ok(EmbeddingSetup {
        name: format!("{surface}-self-{}", if word.is_empty() { "id" } else { word }),
        source: carrier.clone(),
        target: carrier,
        k1,
        embedding,
    })
}

/// The documented embedding configurations exercised by the verification
/// harness: six proper subsurface inclusions and four self-maps.
pub fn standard_setups() -> Result<Vec<EmbeddingSetup>> {
    Ok(vec![
        sphere_setup(4, 5)?,
        sphere_setup(4, 6)?,
        sphere_setup(5, 6)?,
        sphere_setup(5, 7)?,
        sphere_setup(6, 7)?,
        torus_setup(2)?,
        self_setup(crate::surface::SurfaceType::new(0, 5), "", 1)?,
        self_setup(crate::surface::SurfaceType::new(0, 6), "h0 h2^-1", 1)?,
        self_setup(crate::surface::SurfaceType::new(1, 2), "t0 t1", 1)?,
        self_setup(crate::surface::SurfaceType::new(0, 7), "h1 h3", 2)?,
    ])
}

/// A finite vertex map between multicurve sets.
#[derive(Clone, Debug, Default)]
pub struct VertexMap {
    pub pairs: Vec<(Multicurve, Multicurve)>,
}

impl VertexMap {
    pub fn image_of(&self, v: &Multicurve) -> Option<&Multicurve> {
        self.pairs.iter().find(|(s, _)| s == v).map(|(_, t)| t)
    }
}

/// The induced vertex map on a ball: every source vertex maps to its curve
/// images union the companion.
pub fn induced_embedding(
    emb: &SubsurfaceEmbedding,
    target: &Carrier,
    src_ball: &GraphBall,
) -> Result<VertexMap> {
    let mut pairs = Vec::with_capacity(src_ball.vertices.len());
    for v in &src_ball.vertices {
        pairs.push((v.clone(), emb.map_multicurve(target, v)?));
    }
    Ok(VertexMap { pairs })
}

/// Verification report of a simplicial-embedding candidate.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EmbeddingReport {
    pub injective: bool,
    pub edges_preserved: bool,
    pub image_in_companion_level: Option<bool>,
    pub checked_edges: usize,
    pub counterexamples: Vec<String>,
}

impl EmbeddingReport {
    pub fn pass(&self) -> bool {
        self.injective
            && self.edges_preserved
            && self.image_in_companion_level.unwrap_or(true)
    }
}

/// Checks injectivity on the source ball, edge preservation into the target
/// multicurve graph, and optionally containment of the image in the vertices
/// containing the companion.
pub fn verify_simplicial_embedding(
    target: &Carrier,
    map: &VertexMap,
    src_ball: &GraphBall,
    companion: Option<&[Curve]>,
) -> Result<EmbeddingReport> {
    let mut counterexamples = Vec::new();
    let mut injective = true;
    for i in 0..map.pairs.len() {
        for j in i + 1..map.pairs.len() {
            if map.pairs[i].1 == map.pairs[j].1 && map.pairs[i].0 != map.pairs[j].0 {
                injective = false;
                counterexamples.push(format!("vertices {i} and {j} collapse"));
            }
        }
    }
    let mut edges_preserved = true;
    let mut checked_edges = 0;
    for &(i, j) in &src_ball.edges {
        let vi = &src_ball.vertices[i];
        let vj = &src_ball.vertices[j];
        let (Some(wi), Some(wj)) = (map.image_of(vi), map.image_of(vj)) else {
            return Err(Error::Precondition("map not total on the ball".into()));
        };
        checked_edges += 1;
        if !mc_edge_predicate(target, wi, wj)? {
            edges_preserved = false;
            counterexamples.push(format!("edge ({i},{j}) not preserved"));
        }
    }
    let image_in_companion_level = match companion {
        None => None,
        Some(comp) => {
            let mut ok = true;
            for (idx, (_, w)) in map.pairs.iter().enumerate() {
                if !comp.iter().all(|c| w.contains(c)) {
                    ok = false;
                    counterexamples.push(format!("image of vertex {idx} misses the companion"));
                }
            }
            Some(ok)
        }
    };
    Ok(EmbeddingReport {
        injective,
        edges_preserved,
        image_in_companion_level,
        checked_edges,
        counterexamples,
    })
}

/// The edge-to-common-part map: an edge of the k-multicurve graph determines
/// the (k-1)-multicurve shared by its endpoints.
pub fn theta(carrier: &Carrier, mu: &Multicurve, nu: &Multicurve) -> Result<Multicurve> {
    if !mc_edge_predicate(carrier, mu, nu)? {
        return Err(Error::Precondition("not an edge".into()));
    }
    Multicurve::new(carrier, mu.intersection(nu))
}

/// A surjectivity witness: an edge whose common part is the given multicurve,
/// built by extending it with two adjacent curves of its complement.
pub fn theta_witness_edges(
    carrier: &Carrier,
    nu: &Multicurve,
    supply: &[Curve],
    want: usize,
) -> Result<Vec<(Multicurve, Multicurve)>> {
    let mut out = Vec::new();
    let fixed: Vec<Curve> = nu.curves().to_vec();
    let usable: Vec<&Curve> = supply
        .iter()
        .filter(|c| {
            fixed.iter().all(|f| {
                matches!(intersection_number(carrier, f, c), Ok(0))
                    && matches!(is_isotopic(carrier, f, c), Ok(false))
            })
        })
        .collect();
    'outer: for i in 0..usable.len() {
        for j in i + 1..usable.len() {
            if out.len() >= want {
                break 'outer;
            }
            if !pair_minimal_in_complement(carrier, &fixed, usable[i], usable[j])? {
                continue;
            }
            let Ok(mu1) = nu.with_curve(carrier, usable[i].clone()) else {
                continue;
            };
            let Ok(mu2) = nu.with_curve(carrier, usable[j].clone()) else {
                continue;
            };
            if mc_edge_predicate(carrier, &mu1, &mu2)? {
                out.push((mu1, mu2));
            }
        }
    }
    if out.is_empty() {
        return Err(Error::SearchFailed(
            "no witness edge over the multicurve".into(),
        ));
    }
    Ok(out)
}

/// How a vertex map on k-multicurves is specified.
pub enum VertexMapSpec {
    /// Induced by a mapping class; total on all multicurves.
    ByMappingClass(MappingClass),
    /// A finite table; descent uses only ball data.
    Table(BTreeMap<Multicurve, Multicurve>),
}

impl VertexMapSpec {
    pub fn eval(&self, carrier: &Carrier, v: &Multicurve) -> Result<Multicurve> {
        match self {
            VertexMapSpec::ByMappingClass(word) => {
                let gens = standard_generators(carrier)?;
                apply_multicurve(carrier, &gens, word, v)
            }
            VertexMapSpec::Table(map) => map
                .get(v)
                .cloned()
                .ok_or_else(|| Error::Precondition("vertex outside the table".into())),
        }
    }
}

/// Report of the descent of a vertex map from k to k-1.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct DescendReport {
    /// Per fiber: number of edges evaluated; all must agree.
    pub fiber_sizes: Vec<usize>,
    pub well_defined: bool,
    pub edges_preserved: bool,
    pub details: Vec<String>,
}

impl DescendReport {
    pub fn pass(&self) -> bool {
        self.well_defined && self.edges_preserved
    }
}

/// Descends a vertex map on k-multicurves to (k-1)-multicurves: the image of a
/// fiber is the common part of the images of any edge over it; all available
/// edges must give the same answer. Returns the descended map on the lower
/// ball and the verification report.
pub fn descend(
    carrier: &Carrier,
    spec: &VertexMapSpec,
    ball_k: &GraphBall,
    ball_km1: &GraphBall,
    supply: &[Curve],
    min_fiber_edges: usize,
) -> Result<(VertexMap, DescendReport)> {
    let mut details = Vec::new();
    let mut well_defined = true;
    let mut fiber_sizes = Vec::new();
    let mut descended: Vec<(Multicurve, Multicurve)> = Vec::new();
    for nu in &ball_km1.vertices {
        // Collect edges over nu: ball edges whose common part is nu, topped up
        // with witness edges built from the supply.
        let mut edges: Vec<(Multicurve, Multicurve)> = Vec::new();
        for &(i, j) in &ball_k.edges {
            let common = ball_k.vertices[i].intersection(&ball_k.vertices[j]);
            if common.len() == nu.len()
                && nu.curves().iter().all(|c| common.contains(c))
            {
                edges.push((ball_k.vertices[i].clone(), ball_k.vertices[j].clone()));
            }
        }
        if edges.len() < min_fiber_edges {
            match theta_witness_edges(carrier, nu, supply, min_fiber_edges) {
                Ok(extra) => {
                    for e in extra {
                        if !edges.contains(&e) {
                            edges.push(e);
                        }
                    }
                }
                Err(e) => {
                    if edges.is_empty() {
                        return Err(e);
                    }
                }
            }
        }
        fiber_sizes.push(edges.len());
        let mut value: Option<Multicurve> = None;
        for (x, y) in &edges {
            let ax = spec.eval(carrier, x)?;
            let ay = spec.eval(carrier, y)?;
            if !mc_edge_predicate(carrier, &ax, &ay)? {
                well_defined = false;
                details.push(format!("image of an edge over a fiber is not an edge"));
                continue;
            }
            let t = theta(carrier, &ax, &ay)?;
            match &value {
                None => value = Some(t),
                Some(v) => {
                    if v != &t {
                        well_defined = false;
                        details.push(format!(
                            "fiber disagreement over a (k-1)-multicurve: {:?} vs {:?}",
                            v.curves().len(),
                            t.curves().len()
                        ));
                    }
                }
            }
        }
        let Some(v) = value else {
            return Err(Error::SearchFailed("empty fiber".into()));
        };
        descended.push((nu.clone(), v));
    }
    // Edge preservation of the descended map on the lower ball.
    let map = VertexMap { pairs: descended };
    let mut edges_preserved = true;
    for &(i, j) in &ball_km1.edges {
        let wi = map.image_of(&ball_km1.vertices[i]).unwrap();
        let wj = map.image_of(&ball_km1.vertices[j]).unwrap();
        if !mc_edge_predicate(carrier, wi, wj)? {
            edges_preserved = false;
            details.push(format!("descended edge ({i},{j}) not preserved"));
        }
    }
    let report = DescendReport { fiber_sizes, well_defined, edges_preserved, details };
    Ok((map, report))
}

/// Evaluates the descended map at an arbitrary (k-1)-multicurve through a
/// witness edge; sound once well-definedness holds.
pub fn phi_eval(
    carrier: &Carrier,
    spec: &VertexMapSpec,
    nu: &Multicurve,
    supply: &[Curve],
) -> Result<Multicurve> {
    let edges = theta_witness_edges(carrier, nu, supply, 1)?;
    let (x, y) = &edges[0];
    let ax = spec.eval(carrier, x)?;
    let ay = spec.eval(carrier, y)?;
    theta(carrier, &ax, &ay)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::edge_link;
    use crate::graphs::{build_ball, BallBudget, Family};
    use crate::surface::SurfaceType;

    fn carrier(g: usize, n: usize) -> Carrier {
        Carrier::new(SurfaceType::new(g, n)).unwrap()
    }

    fn chain_links(c: &Carrier) -> Vec<Curve> {
        let n = c.tri.n_vertices();
        (0..n - 1)
            .map(|p| {
                let e = (0..c.tri.n_edges())
                    .find(|&e| {
                        let [d, _] = c.tri.edge_darts(e);
                        let (x, y) = (c.tri.start_vertex(d), c.tri.end_vertex(d));
                        (x == p && y == p + 1) || (x == p + 1 && y == p)
                    })
                    .unwrap();
                edge_link(c, e).unwrap()
            })
            .collect()
    }

    #[test]
    fn identity_embedding_verifies() {
        let c = carrier(0, 5);
        let links = chain_links(&c);
        let seed = Multicurve::new(&c, vec![links[0].clone()]).unwrap();
        let budget = BallBudget { supply_words: 1, max_supply: 24, max_vertices: 12, max_radius: 2 };
        let ball = build_ball(&c, 1, Family::Mc, &seed, budget).unwrap();
        let emb = SubsurfaceEmbedding::from_mapping_class(
            &c,
            MappingClass::identity(c.surface),
        )
        .unwrap();
        let map = induced_embedding(&emb, &c, &ball).unwrap();
        let report = verify_simplicial_embedding(&c, &map, &ball, None).unwrap();
        assert!(report.pass());
        for (s, t) in &map.pairs {
            assert_eq!(s, t);
        }
    }

    #[test]
    fn twist_induced_embedding_verifies() {
        let c = carrier(0, 5);
        let links = chain_links(&c);
        let seed = Multicurve::new(&c, vec![links[0].clone(), links[2].clone()]).unwrap();
        let budget = BallBudget { supply_words: 1, max_supply: 24, max_vertices: 14, max_radius: 1 };
        let ball = build_ball(&c, 2, Family::Mc, &seed, budget).unwrap();
        let gens = standard_generators(&c).unwrap();
        let word = MappingClass::parse(c.surface, &gens, "h0 h2^-1").unwrap();
        let emb = SubsurfaceEmbedding::from_mapping_class(&c, word).unwrap();
        let map = induced_embedding(&emb, &c, &ball).unwrap();
        let report = verify_simplicial_embedding(&c, &map, &ball, None).unwrap();
        assert!(report.pass(), "{:?}", report.counterexamples);
    }

    #[test]
    fn collapsing_map_fails_verification() {
        let c = carrier(0, 5);
        let links = chain_links(&c);
        let seed = Multicurve::new(&c, vec![links[0].clone()]).unwrap();
        let budget = BallBudget { supply_words: 1, max_supply: 16, max_vertices: 6, max_radius: 1 };
        let ball = build_ball(&c, 1, Family::Mc, &seed, budget).unwrap();
        assert!(ball.vertices.len() >= 2);
        // Map everything to the seed.
        let pairs: Vec<_> = ball
            .vertices
            .iter()
            .map(|v| (v.clone(), seed.clone()))
            .collect();
        let map = VertexMap { pairs };
        let report = verify_simplicial_embedding(&c, &map, &ball, None).unwrap();
        assert!(!report.pass());
        assert!(!report.injective || !report.edges_preserved);
    }

    #[test]
    fn theta_and_witnesses() {
        let c = carrier(0, 6);
        let links = chain_links(&c);
        let a = links[0].clone();
        let b = links[2].clone();
        let d = links[4].clone();
        let mu = Multicurve::new(&c, vec![a.clone(), b.clone()]).unwrap();
        let nu = Multicurve::new(&c, vec![a.clone(), d.clone()]).unwrap();
        if mc_edge_predicate(&c, &mu, &nu).unwrap() {
            let t = theta(&c, &mu, &nu).unwrap();
            assert_eq!(t.curves(), &[a.clone()]);
        }
        let base = Multicurve::new(&c, vec![a.clone()]).unwrap();
        let supply = crate::mcg::short_curves(&c, 10);
        let edges = theta_witness_edges(&c, &base, &supply, 3).unwrap();
        assert!(edges.len() >= 3);
        for (x, y) in &edges {
            assert!(mc_edge_predicate(&c, x, y).unwrap());
            let t = theta(&c, x, y).unwrap();
            assert_eq!(&t, &base);
        }
    }

    #[test]
    fn descend_of_twist_matches_direct_action() {
        let c = carrier(0, 5);
        let links = chain_links(&c);
        let seed2 = Multicurve::new(&c, vec![links[0].clone(), links[2].clone()]).unwrap();
        let seed1 = Multicurve::new(&c, vec![links[0].clone()]).unwrap();
        let b2 = build_ball(
            &c,
            2,
            Family::Mc,
            &seed2,
            BallBudget { supply_words: 1, max_supply: 24, max_vertices: 16, max_radius: 1 },
        )
        .unwrap();
        let b1 = build_ball(
            &c,
            1,
            Family::Mc,
            &seed1,
            BallBudget { supply_words: 1, max_supply: 24, max_vertices: 8, max_radius: 1 },
        )
        .unwrap();
        let gens = standard_generators(&c).unwrap();
        let word = MappingClass::parse(c.surface, &gens, "h1").unwrap();
        let spec = VertexMapSpec::ByMappingClass(word.clone());
        let supply = crate::mcg::short_curves(&c, 10);
        let (map, report) = descend(&c, &spec, &b2, &b1, &supply, 2).unwrap();
        assert!(report.pass(), "{:?}", report.details);
        // phi(F(f)) = G(f) vertexwise.
        for (nu, image) in &map.pairs {
            let direct = apply_multicurve(&c, &gens, &word, nu).unwrap();
            assert_eq!(image, &direct);
        }
    }
}
