//! Constructive connectivity: paths in the multicurve graphs and their
//! B-subgraphs built by the surgery arguments of the connectedness proofs.
//!
//! Curve-graph paths come from crossing resolution: an arc of one curve
//! between two crossings consecutive along the other, closed up with either
//! complementary arc, gives a curve disjoint from the first with strictly
//! fewer crossings with the second. Multicurve paths lift curve paths through
//! bridging multicurves, recursing in the complement of a shared curve.
//! B-paths run through nice pairs: unicorn paths of arcs with interleaved
//! bridge doubles on spheres, chains of once-crossing nonseparating curves
//! with interleaved outer curves on genus one, and repaired nonseparating
//! paths on higher genus.

use crate::curve::{
    arc_intersection_number, intersection_number, is_isotopic, outer_curve_of_arc, Arc, Carrier,
    Curve, Multicurve,
};
use crate::cut::{arc_for_outer_curve, classify_curve, cut_system, is_nice_pair};
use crate::enumeration::complete_to_multicurve;
use crate::error::{Error, Result};
use crate::graphs::{b_edge_predicate, b_vertex_predicate, mc_edge_predicate, pair_minimal_in_complement};
use crate::mcg::{dehn_twist, dehn_twist_arc, short_curves};
use crate::overlay::{InitialOrder, Overlay, Placed};
use crate::surface::SurfaceType;
use crate::triangulation::VertexId;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum PathFamily {
    Mc,
    B,
}

/// A path in a multicurve graph; consecutive vertices satisfy the family's
/// edge predicate and never repeat.
#[derive(Clone, Debug)]
pub struct GraphPath {
    pub surface: SurfaceType,
    pub family: PathFamily,
    pub k: usize,
    pub vertices: Vec<Multicurve>,
}

/// Revalidates a path from scratch against its family predicate.
pub fn validate_path(carrier: &Carrier, path: &GraphPath) -> Result<()> {
    for w in path.vertices.windows(2) {
        if w[0] == w[1] {
            return Err(Error::VerificationFailed("consecutive repeat".into()));
        }
        let ok = match path.family {
            PathFamily::Mc => mc_edge_predicate(carrier, &w[0], &w[1])?,
            PathFamily::B => b_edge_predicate(carrier, &w[0], &w[1])?,
        };
        if !ok {
            return Err(Error::VerificationFailed(format!(
                "edge predicate fails between consecutive vertices"
            )));
        }
    }
    for v in &path.vertices {
        if v.len() != path.k {
            return Err(Error::VerificationFailed("vertex of wrong size".into()));
        }
    }
    Ok(())
}

/// All essential curves obtained by resolving a pair of crossings of `a` and
/// `b` consecutive along one of them, plus the essential boundary components
/// of a neighborhood of the union, in deterministic order.
fn surgery_candidates(carrier: &Carrier, a: &Curve, b: &Curve) -> Result<Vec<Curve>> {
    let mut ov = Overlay::new(
        &carrier.tri,
        vec![a.placed(), b.placed()],
        InitialOrder::Taut,
    )?;
    ov.reduce_bigons()?;
    let n = ov.crossing_count();
    let mut out: Vec<Curve> = Vec::new();
    let mut push = |w: Vec<usize>| {
        if let Ok(c) = Curve::from_trace(carrier, w) {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    };
    if n >= 2 {
        for obj in [1usize, 0] {
            let other = 1 - obj;
            let seq = ov.sequence_along(obj).to_vec();
            for idx in 0..n {
                let p = seq[idx];
                let q = seq[(idx + 1) % n];
                if p == q {
                    continue;
                }
                // Arc of `obj` from p to q (no crossings in between), closed up
                // with either arc of `other`.
                let b_arc = ov.path_darts(obj, p, q);
                let a_arc1 = ov.path_darts(other, p, q);
                let a_arc2 = ov.path_darts(other, q, p);
                // side one: other-arc p->q followed by reversed obj-arc
                let mut w1 = a_arc1.clone();
                w1.extend(b_arc.iter().rev().map(|&d| carrier.tri.glue(d)));
                push(w1);
                // side two: other-arc q->p followed by obj-arc p->q
                let mut w2 = a_arc2.clone();
                w2.extend(b_arc.iter().cloned());
                push(w2);
            }
        }
    }
    if n >= 1 {
        for w in ov.neighborhood_boundary() {
            if !w.is_empty() {
                push(w);
            }
        }
    }
    Ok(out)
}

/// A path in the curve graph of the complement of `fixed` (the ambient curve
/// graph when `fixed` is empty): consecutive curves intersect minimally there.
/// Built by crossing resolution; on complexity-one components, where adjacency
/// asks for one or two crossings rather than disjointness, the step scans
/// twist orbits of a supply curve meeting the current one minimally.
/// Terminates because the intersection with the target strictly decreases.
pub fn curve_graph_path_rel(
    carrier: &Carrier,
    fixed: &[Curve],
    a: &Curve,
    b: &Curve,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    if is_isotopic(carrier, a, b)? {
        return Ok(vec![a.clone()]);
    }
    let mut path = vec![a.clone()];
    let mut cur = a.clone();
    let mut guard = intersection_number(carrier, a, b)? + 2;
    loop {
        if pair_minimal_in_complement(carrier, fixed, &cur, b)? {
            path.push(b.clone());
            return Ok(path);
        }
        let i_cur = intersection_number(carrier, &cur, b)?;
        let admissible = |cand: &Curve| -> Result<bool> {
            if intersection_number(carrier, cand, b)? >= i_cur.max(1) {
                return Ok(false);
            }
            for f in fixed {
                if intersection_number(carrier, f, cand)? != 0
                    || is_isotopic(carrier, f, cand)?
                {
                    return Ok(false);
                }
            }
            if is_isotopic(carrier, cand, &cur)? {
                return Ok(false);
            }
            pair_minimal_in_complement(carrier, fixed, &cur, cand)
        };
        let mut next: Option<Curve> = None;
        // Stage 0: crossing resolutions and neighborhood boundaries.
        for cand in surgery_candidates(carrier, &cur, b)? {
            if admissible(&cand)? {
                next = Some(cand);
                break;
            }
        }
        // Stage 1: twist scans for low-complexity components, where adjacency
        // asks for one or two crossings and resolutions cannot reach it.
        if next.is_none() {
            let mut anchors = 0;
            'anchor: for c0 in supply.iter().chain(std::iter::once(b)) {
                if anchors >= 3 {
                    break;
                }
                if !pair_minimal_in_complement(carrier, fixed, &cur, c0).unwrap_or(false) {
                    continue;
                }
                if intersection_number(carrier, &cur, c0)? == 0 {
                    continue;
                }
                anchors += 1;
                if admissible(c0)? {
                    next = Some(c0.clone());
                    break;
                }
                let reach = (2 + intersection_number(carrier, c0, b)? / i_cur.max(1)).min(12);
                for sign in [1i8, -1] {
                    let mut m = c0.clone();
                    for _ in 0..reach {
                        m = dehn_twist(carrier, &m, &cur, sign)?;
                        if admissible(&m)? {
                            next = Some(m);
                            break 'anchor;
                        }
                    }
                }
            }
        }
        // Stage 2: the ambient supply.
        if next.is_none() {
            for cand in supply {
                if admissible(cand)? {
                    next = Some(cand.clone());
                    break;
                }
            }
        }
        // Stage 3: constructed complement doubles of the current curve.
        if next.is_none() {
            for cand in complement_doubles(carrier, &[cur.clone()], 1)? {
                if admissible(&cand)? {
                    next = Some(cand);
                    break;
                }
            }
        }
        let Some(gamma) = next else {
            return Err(Error::SearchFailed(
                "no intersection-reducing surgery candidate".into(),
            ));
        };
        if is_isotopic(carrier, &gamma, b)? {
            path.push(b.clone());
            return Ok(path);
        }
        path.push(gamma.clone());
        cur = gamma;
        if guard == 0 {
            return Err(Error::SearchFailed("surgery did not terminate".into()));
        }
        guard -= 1;
    }
}

/// Path in the curve graph MC^1.
pub fn curve_graph_path(carrier: &Carrier, a: &Curve, b: &Curve) -> Result<GraphPath> {
    let ma = Multicurve::new(carrier, vec![a.clone()])?;
    let mb = Multicurve::new(carrier, vec![b.clone()])?;
    let supply = path_supply(carrier, &[&ma, &mb])?;
    let curves = curve_graph_path_rel(carrier, &[], a, b, &supply)?;
    let vertices = curves
        .into_iter()
        .map(|c| Multicurve::new(carrier, vec![c]))
        .collect::<Result<Vec<_>>>()?;
    let path = GraphPath { surface: carrier.surface, family: PathFamily::Mc, k: 1, vertices };
    validate_path(carrier, &path)?;
    Ok(path)
}

fn dedup_consecutive(vertices: &mut Vec<Multicurve>) {
    vertices.dedup();
}

/// Supply for path constructions: short curves, the endpoint curves, and one
/// round of twists of the endpoint curves along seeds.
fn path_supply(carrier: &Carrier, extra: &[&Multicurve]) -> Result<Vec<Curve>> {
    let mut supply = short_curves(carrier, 10);
    let seeds: Vec<Curve> = supply.iter().take(12).cloned().collect();
    for m in extra {
        for c in m.curves() {
            supply.push(c.clone());
            for s in &seeds {
                for sign in [1i8, -1] {
                    if let Ok(t) = dehn_twist(carrier, c, s, sign) {
                        supply.push(t);
                    }
                }
            }
        }
    }
    supply.sort_by(|a, b| (a.trace().len(), a.trace()).cmp(&(b.trace().len(), b.trace())));
    supply.dedup();
    Ok(supply)
}

/// Curves disjoint from a given disjoint collection, built constructively:
/// arcs between original punctures inside components of the cut complement,
/// doubled, then enriched by twisting the pool along itself. Every result is
/// disjoint from the collection by construction.
pub fn complement_doubles(
    carrier: &Carrier,
    fixed: &[Curve],
    enrich_rounds: usize,
) -> Result<Vec<Curve>> {
    let sys = cut_system(carrier, fixed)?;
    let mut pool: Vec<Curve> = Vec::new();
    for (idx, comp) in sys.components.iter().enumerate() {
        let mut punct = comp.original_punctures.clone();
        if let Some(m) = carrier.marked {
            punct.retain(|&v| v != m);
        }
        for i in 0..punct.len() {
            for j in i + 1..punct.len() {
                let Ok(word) = sys.arc_between(carrier, idx, punct[i], punct[j]) else {
                    continue;
                };
                let Ok(arc) = Arc::from_word(carrier, word) else { continue };
                if let Ok(double) = outer_curve_of_arc(carrier, &arc) {
                    let disjoint = fixed.iter().all(|f| {
                        matches!(intersection_number(carrier, f, &double), Ok(0))
                    });
                    if disjoint {
                        pool.push(double);
                    }
                }
            }
        }
    }
    pool.sort();
    pool.dedup();
    let mut frontier = pool.clone();
    for _ in 0..enrich_rounds {
        let mut next = Vec::new();
        for a in &frontier {
            for t in pool.clone() {
                for sign in [1i8, -1] {
                    if let Ok(img) = dehn_twist(carrier, a, &t, sign) {
                        if !pool.contains(&img) {
                            next.push(img.clone());
                            pool.push(img);
                        }
                    }
                }
            }
            if pool.len() > 60 {
                break;
            }
        }
        if next.is_empty() || pool.len() > 60 {
            break;
        }
        frontier = next;
    }
    pool.sort_by(|a, b| (a.trace().len(), a.trace()).cmp(&(b.trace().len(), b.trace())));
    Ok(pool)
}

/// Path in the k-multicurve graph, by the inductive lift of curve-graph paths.
pub fn multicurve_graph_path(
    carrier: &Carrier,
    mu: &Multicurve,
    nu: &Multicurve,
) -> Result<GraphPath> {
    if mu.len() != nu.len() {
        return Err(Error::Precondition("multicurves of different size".into()));
    }
    let supply = path_supply(carrier, &[mu, nu])?;
    let mut vertices = mc_path_rel(carrier, &[], mu, nu, &supply)?;
    dedup_consecutive(&mut vertices);
    let path = GraphPath {
        surface: carrier.surface,
        family: PathFamily::Mc,
        k: mu.len(),
        vertices,
    };
    validate_path(carrier, &path)?;
    Ok(path)
}

/// Recursive step: a path between two k-multicurves containing `fixed`, all of
/// whose vertices contain `fixed`.
fn mc_path_rel(
    carrier: &Carrier,
    fixed: &[Curve],
    mu: &Multicurve,
    nu: &Multicurve,
    supply: &[Curve],
) -> Result<Vec<Multicurve>> {
    if mu == nu {
        return Ok(vec![mu.clone()]);
    }
    let k = mu.len();
    let free_mu: Vec<Curve> = mu
        .curves()
        .iter()
        .filter(|c| !fixed.contains(c))
        .cloned()
        .collect();
    let free_nu: Vec<Curve> = nu
        .curves()
        .iter()
        .filter(|c| !fixed.contains(c))
        .cloned()
        .collect();
    if free_mu.len() == 1 {
        let curves = curve_graph_path_rel(carrier, fixed, &free_mu[0], &free_nu[0], supply)?;
        let mut out = Vec::with_capacity(curves.len());
        for c in curves {
            let mut cs = fixed.to_vec();
            cs.push(c);
            out.push(Multicurve::new(carrier, cs)?);
        }
        return Ok(out);
    }
    // Share a free curve when possible: recurse directly in its complement.
    for c in &free_mu {
        if free_nu.contains(c) {
            let mut fixed2 = fixed.to_vec();
            fixed2.push(c.clone());
            return mc_path_rel(carrier, &fixed2, mu, nu, supply);
        }
    }
    let alpha = free_mu[0].clone();
    let beta = free_nu[0].clone();
    let cpath = curve_graph_path_rel(carrier, fixed, &alpha, &beta, supply)?;
    let mut out: Vec<Multicurve> = Vec::new();
    let mut prev = mu.clone();
    for w in cpath.windows(2) {
        let (g_prev, g_next) = (&w[0], &w[1]);
        // Bridging vertex containing fixed, g_prev and g_next.
        let mut partial = fixed.to_vec();
        partial.push(g_prev.clone());
        partial.push(g_next.clone());
        let mut local_supply: Vec<Curve> = supply.to_vec();
        local_supply.extend(prev.curves().iter().cloned());
        let eta = complete_to_multicurve(carrier, &partial, k, &local_supply)?;
        let mut fixed2 = fixed.to_vec();
        fixed2.push(g_prev.clone());
        let seg = mc_path_rel(carrier, &fixed2, &prev, &eta, supply)?;
        out.extend(seg);
        prev = eta;
    }
    // Last segment: share the final curve of the path (beta, or alpha when the
    // curve path is a single vertex).
    let last_curve = cpath.last().unwrap().clone();
    let mut fixed2 = fixed.to_vec();
    fixed2.push(last_curve);
    let seg = mc_path_rel(carrier, &fixed2, &prev, nu, supply)?;
    out.extend(seg);
    dedup_consecutive(&mut out);
    Ok(out)
}

/// Unicorn path between two arcs in minimal position with designated distinct
/// endpoints: every returned arc runs from the designated endpoint of `a` to
/// the designated endpoint of `b`, consecutive arcs are disjoint, the path
/// starts with `a` and ends with `b`.
pub fn unicorn_path(
    carrier: &Carrier,
    a: &Arc,
    a_end: VertexId,
    b: &Arc,
    b_end: VertexId,
) -> Result<Vec<Arc>> {
    let i_ab = arc_intersection_number(carrier, a, b)?;
    if i_ab == 0 {
        return Err(Error::Precondition(
            "arcs are disjoint; a unicorn path is not needed".into(),
        ));
    }
    // Orient `a` from its designated endpoint and `b` into its designated
    // endpoint, so every unicorn piece runs designated-to-designated.
    let aw = a.oriented_from(carrier, a_end)?;
    let (pb, qb) = b.endpoints(carrier);
    if pb == qb {
        return Err(Error::Precondition(
            "the second arc must have distinct endpoints".into(),
        ));
    }
    let b_other = if pb == b_end { qb } else { pb };
    let bw = b.oriented_from(carrier, b_other)?;
    let mut ov = Overlay::new(
        &carrier.tri,
        vec![
            Placed::arc(aw.start_corner, aw.darts.clone(), aw.end_corner),
            Placed::arc(bw.start_corner, bw.darts.clone(), bw.end_corner),
        ],
        InitialOrder::Taut,
    )?;
    ov.reduce_bigons()?;
    let n = ov.crossing_count();
    if n != i_ab {
        return Err(Error::VerificationFailed(
            "oriented overlay crossing count mismatch".into(),
        ));
    }
    // Position of each crossing along a (from the designated end) and along b.
    let seq_a = ov.sequence_along(0).to_vec();
    let seq_b = ov.sequence_along(1).to_vec();
    let pos_a = |x: usize| seq_a.iter().position(|&y| y == x).unwrap();
    let pos_b = |x: usize| seq_b.iter().position(|&y| y == x).unwrap();
    // Unicorn arc at crossing x: a[designated end -> x] followed by
    // b[x -> designated end of b]. Embedded iff no other crossing lies on both
    // chosen pieces.
    let mut unicorns: Vec<(usize, Arc)> = Vec::new();
    for x in 0..n {
        let embedded = (0..n).all(|y| {
            y == x || !(pos_a(y) < pos_a(x) && pos_b(y) > pos_b(x))
        });
        if !embedded {
            continue;
        }
        // Build the dart word: a-darts from the start to the strand of x, then
        // b-darts from the strand of x to its end.
        let sa = ov.crossing_strand(x, 0);
        let sb = ov.crossing_strand(x, 1);
        let mut darts: Vec<usize> = aw.darts[..sa].to_vec();
        darts.extend(bw.darts[sb..].iter().copied());
        let word = crate::trace::ArcWord {
            start_corner: aw.start_corner,
            darts,
            end_corner: bw.end_corner,
        };
        let arc = Arc::from_word(carrier, word)?;
        unicorns.push((pos_a(x), arc));
    }
    // Order from b-like to a-like: unicorns using less of `a` come first after
    // a... order by decreasing use of a: position along a descending gives
    // neighbors of a first.
    unicorns.sort_by_key(|(p, _)| std::cmp::Reverse(*p));
    let mut path = vec![a.clone()];
    for (_, u) in unicorns {
        if path.last() != Some(&u) {
            path.push(u);
        }
    }
    if path.last() != Some(b) {
        path.push(b.clone());
    }
    // Certificate: consecutive disjointness and endpoint discipline.
    for w in path.windows(2) {
        if arc_intersection_number(carrier, &w[0], &w[1])? != 0 {
            return Err(Error::VerificationFailed(
                "consecutive unicorn arcs intersect".into(),
            ));
        }
    }
    if a_end != b_end {
        for u in &path {
            let (p, q) = u.endpoints(carrier);
            if p == q {
                return Err(Error::VerificationFailed(
                    "unicorn arc with equal endpoints".into(),
                ));
            }
        }
    }
    Ok(path)
}

/// Arcs worth searching: triangulation edges with distinct endpoints and their
/// images under short twist words.
pub fn arc_supply(carrier: &Carrier, rounds: usize) -> Vec<Arc> {
    let tri = &carrier.tri;
    let mut out: Vec<Arc> = Vec::new();
    for e in 0..tri.n_edges() {
        if let Ok(a) = Arc::from_edge(carrier, e) {
            out.push(a);
        }
    }
    let twisters: Vec<Curve> = short_curves(carrier, 8).into_iter().take(10).collect();
    let mut frontier = out.clone();
    for _ in 0..rounds {
        let mut next = Vec::new();
        for a in &frontier {
            for t in &twisters {
                for sign in [1i8, -1] {
                    if let Ok(img) = dehn_twist_arc(carrier, a, t, sign) {
                        if !out.contains(&img) && !next.contains(&img) {
                            next.push(img);
                        }
                    }
                }
            }
        }
        out.extend(next.clone());
        frontier = next;
    }
    out.sort();
    out.dedup();
    out
}

/// An arc disjoint from two given disjoint arcs that share at least one
/// endpoint, with endpoints disjoint from both; found by exhaustive search
/// over the arc supply. Requires complexity at least three (enough cusps).
pub fn bridge_arc(carrier: &Carrier, a: &Arc, b: &Arc) -> Result<Arc> {
    find_bridge(carrier, a, b, |_| Ok(true))
}

/// Bridge search with an extra acceptance filter (used to respect relative
/// contexts).
fn find_bridge<F>(carrier: &Carrier, a: &Arc, b: &Arc, mut accept: F) -> Result<Arc>
where
    F: FnMut(&Arc) -> Result<bool>,
{
    if carrier.surface.genus == 0 && carrier.surface.punctures < 5 {
        return Err(Error::Precondition(
            "bridge arcs need at least five punctures on a sphere".into(),
        ));
    }
    if arc_intersection_number(carrier, a, b)? != 0 {
        return Err(Error::Precondition("arcs must be disjoint".into()));
    }
    let (pa, qa) = a.endpoints(carrier);
    let (pb, qb) = b.endpoints(carrier);
    let banned = [pa, qa, pb, qb];
    for rounds in 0..3 {
        for cand in arc_supply(carrier, rounds) {
            let (p, q) = cand.endpoints(carrier);
            if p == q || banned.contains(&p) || banned.contains(&q) {
                continue;
            }
            if arc_intersection_number(carrier, &cand, a)? == 0
                && arc_intersection_number(carrier, &cand, b)? == 0
                && accept(&cand)?
            {
                return Ok(cand);
            }
        }
    }
    Err(Error::SearchFailed("no bridge arc found".into()))
}

/// Relative topology bookkeeping for B-paths: the cut along `fixed` has
/// exactly one positive-complexity component; curves and pairs are classified
/// inside it by comparing cut decompositions.
struct RelContext {
    fixed: Vec<Curve>,
    /// Component count and pants count of the cut along `fixed`.
    comps: usize,
    pants: usize,
    /// Type of the positive component.
    positive: SurfaceType,
}

impl RelContext {
    fn new(carrier: &Carrier, fixed: &[Curve]) -> Result<RelContext> {
        if fixed.is_empty() {
            return Ok(RelContext {
                fixed: Vec::new(),
                comps: 1,
                pants: 0,
                positive: carrier.surface,
            });
        }
        let sys = cut_system(carrier, fixed)?;
        let dec = sys.decomposition()?;
        let positives: Vec<SurfaceType> = dec.positive_part();
        if positives.len() != 1 {
            return Err(Error::Precondition(format!(
                "cut along the fixed part has {} positive components",
                positives.len()
            )));
        }
        Ok(RelContext {
            fixed: fixed.to_vec(),
            comps: dec.components.len(),
            pants: dec.pants_count(),
            positive: positives[0],
        })
    }

    fn disjoint_from_fixed(&self, carrier: &Carrier, c: &Curve) -> Result<bool> {
        for f in &self.fixed {
            if is_isotopic(carrier, f, c)? || intersection_number(carrier, f, c)? != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// (nonseparating, outer) of `c` in the complement of the fixed part.
    fn classify(&self, carrier: &Carrier, c: &Curve) -> Result<(bool, bool)> {
        if self.fixed.is_empty() {
            let cls = classify_curve(carrier, c)?;
            return Ok((cls.is_nonseparating, cls.is_outer));
        }
        let mut cut = self.fixed.clone();
        cut.push(c.clone());
        let sys = cut_system(carrier, &cut)?;
        let dec = sys.decomposition()?;
        let nonsep = dec.components.len() == self.comps;
        let outer = dec.pants_count() > self.pants;
        Ok((nonsep, outer))
    }

    fn is_b_vertex_curve(&self, carrier: &Carrier, c: &Curve) -> Result<bool> {
        let (n, o) = self.classify(carrier, c)?;
        Ok(n || o)
    }

    /// Nice pair in the complement: exactly one positive component remains
    /// after also cutting x and y. Curves meeting the fixed part never qualify.
    fn nice(&self, carrier: &Carrier, x: &Curve, y: &Curve) -> Result<bool> {
        if !self.disjoint_from_fixed(carrier, x)? || !self.disjoint_from_fixed(carrier, y)? {
            return Ok(false);
        }
        if is_isotopic(carrier, x, y)? || intersection_number(carrier, x, y)? != 0 {
            return Ok(false);
        }
        let (bx, ox) = self.classify(carrier, x)?;
        let (by, oy) = self.classify(carrier, y)?;
        if !(bx || ox) || !(by || oy) {
            return Ok(false);
        }
        let mut cut = self.fixed.clone();
        cut.push(x.clone());
        cut.push(y.clone());
        let sys = cut_system(carrier, &cut)?;
        let dec = sys.decomposition()?;
        Ok(dec.positive_part().len() == 1)
    }

    /// The lift condition: when the fixed part is nonempty, the pair must also
    /// be nice on the ambient surface so that reinserting the fixed curves
    /// keeps B-edges valid.
    fn nice_lifted(&self, carrier: &Carrier, x: &Curve, y: &Curve) -> Result<bool> {
        if !self.nice(carrier, x, y)? {
            return Ok(false);
        }
        if self.fixed.is_empty() {
            return Ok(true);
        }
        Ok(matches!(is_nice_pair(carrier, x, y), Ok(true)))
    }
}

/// Path in the graph of nonseparating-or-outer curves with nice-pair edges, in
/// the complement of `fixed` (ambient B-graph when empty), with every
/// consecutive pair also nice on the ambient surface.
fn b_curve_path_rel(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    if is_isotopic(carrier, a, b)? {
        return Ok(vec![a.clone()]);
    }
    if ctx.nice_lifted(carrier, a, b)? {
        return Ok(vec![a.clone(), b.clone()]);
    }
    let genus = ctx.positive.genus;
    if genus == 0 {
        b_path_sphere(carrier, ctx, a, b, supply)
    } else {
        b_path_genus(carrier, ctx, a, b, supply)
    }
}

/// Genus-zero case: outer curves correspond to arcs; crossing arcs are joined
/// by unicorn paths, disjoint arcs sharing endpoints by bridge arcs, and the
/// doubles are interleaved with bridge doubles.
fn b_path_sphere(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    let arc_a = arc_for_outer_curve(carrier, a)?;
    let arc_b = arc_for_outer_curve(carrier, b)?;
    let arcs: Vec<Arc> = if arc_intersection_number(carrier, &arc_a, &arc_b)? == 0 {
        // Disjoint arcs; if their doubles are not already nice the arcs share
        // endpoints, and a bridge arc gives the middle curve.
        vec![arc_a.clone(), arc_b.clone()]
    } else {
        // Designated distinct endpoints.
        let (p1, q1) = arc_a.endpoints(carrier);
        let (p2, q2) = arc_b.endpoints(carrier);
        let (ea, eb) = if p1 != q2 { (p1, q2) } else { (p1, p2) };
        if ea == eb {
            // Arcs with a single shared endpoint layout; pick the other ends.
            return b_path_sphere_via(carrier, ctx, a, b, &arc_a, q1, &arc_b, p2, supply);
        }
        return b_path_sphere_via(carrier, ctx, a, b, &arc_a, ea, &arc_b, eb, supply);
    };
    assemble_sphere_path(carrier, ctx, a, b, &arcs, supply)
}

fn b_path_sphere_via(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    arc_a: &Arc,
    ea: VertexId,
    arc_b: &Arc,
    eb: VertexId,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    let unicorns = unicorn_path(carrier, arc_a, ea, arc_b, eb)?;
    assemble_sphere_path(carrier, ctx, a, b, &unicorns, supply)
}

/// Turns an arc path (consecutive arcs disjoint) into a B-path of their
/// doubles, inserting a bridge double between consecutive doubles that are not
/// already nice.
fn assemble_sphere_path(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    arcs: &[Arc],
    _supply: &[Curve],
) -> Result<Vec<Curve>> {
    let mut doubles: Vec<Curve> = Vec::with_capacity(arcs.len());
    for arc in arcs {
        doubles.push(outer_curve_of_arc(carrier, arc)?);
    }
    // Endpoints may double to the original curves themselves.
    if !is_isotopic(carrier, &doubles[0], a)? {
        return Err(Error::VerificationFailed(
            "first arc double does not match the start curve".into(),
        ));
    }
    if !is_isotopic(carrier, doubles.last().unwrap(), b)? {
        return Err(Error::VerificationFailed(
            "last arc double does not match the end curve".into(),
        ));
    }
    let mut path: Vec<Curve> = vec![doubles[0].clone()];
    for idx in 1..doubles.len() {
        let prev_arc = &arcs[idx - 1];
        let next_arc = &arcs[idx];
        let prev = path.last().unwrap().clone();
        let next = doubles[idx].clone();
        if is_isotopic(carrier, &prev, &next)? {
            continue;
        }
        if ctx.nice_lifted(carrier, &prev, &next)? {
            path.push(next);
            continue;
        }
        // Insert the double of a bridge arc disjoint from both whose double
        // forms nice pairs on each side (lifted to the ambient surface).
        let prev_c = prev.clone();
        let next_c = next.clone();
        let bridge = find_bridge(carrier, prev_arc, next_arc, |cand| {
            let mid = match outer_curve_of_arc(carrier, cand) {
                Ok(m) => m,
                Err(_) => return Ok(false),
            };
            Ok(ctx.nice_lifted(carrier, &prev_c, &mid)?
                && ctx.nice_lifted(carrier, &mid, &next_c)?)
        })?;
        let mid = outer_curve_of_arc(carrier, &bridge)?;
        path.push(mid);
        path.push(next);
    }
    Ok(path)
}

/// Positive-genus cases: reduce to nonseparating endpoints, build a chain of
/// nonseparating curves (meeting once on genus one, disjoint on higher genus),
/// and interleave repair curves so every consecutive pair is nice.
fn b_path_genus(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    // Reduce to nonseparating endpoints: an outer endpoint gets a disjoint
    // nonseparating partner (automatically a nice pair).
    let mut prefix: Vec<Curve> = Vec::new();
    let mut suffix: Vec<Curve> = Vec::new();
    let a_ns = if ctx.classify(carrier, a)?.0 {
        a.clone()
    } else {
        let partner = find_curve(carrier, ctx, supply, |c| {
            Ok(ctx.classify(carrier, c)?.0
                && intersection_number(carrier, c, a)? == 0
                && !is_isotopic(carrier, c, a)?
                && ctx.nice_lifted(carrier, a, c)?)
        })?;
        prefix.push(a.clone());
        partner
    };
    let b_ns = if ctx.classify(carrier, b)?.0 {
        b.clone()
    } else {
        let partner = find_curve(carrier, ctx, supply, |c| {
            Ok(ctx.classify(carrier, c)?.0
                && intersection_number(carrier, c, b)? == 0
                && !is_isotopic(carrier, c, b)?
                && ctx.nice_lifted(carrier, b, c)?)
        })?;
        suffix.push(b.clone());
        partner
    };
    let genus_one = ctx.positive.genus == 1;
    let chain = if genus_one {
        once_crossing_chain(carrier, ctx, &a_ns, &b_ns, supply)?
    } else {
        nonsep_disjoint_chain(carrier, ctx, &a_ns, &b_ns, supply)?
    };
    // Interleave: for each consecutive pair that is not nice (or by the genus
    // one construction always), insert a repair curve disjoint from both.
    let mut path: Vec<Curve> = prefix;
    path.push(chain[0].clone());
    for w in chain.windows(2) {
        let (x, y) = (&w[0], &w[1]);
        if ctx.nice_lifted(carrier, x, y)? {
            path.push(y.clone());
            continue;
        }
        let accept = |c: &Curve| -> Result<bool> {
            Ok(intersection_number(carrier, c, x)? == 0
                && intersection_number(carrier, c, y)? == 0
                && !is_isotopic(carrier, c, x)?
                && !is_isotopic(carrier, c, y)?
                && ctx.nice_lifted(carrier, x, c)?
                && ctx.nice_lifted(carrier, c, y)?)
        };
        let repair = match find_curve(carrier, ctx, supply, accept) {
            Ok(r) => r,
            Err(_) => {
                // Constructive fallback: doubles in the complement of one of
                // the pair (both when disjoint), filtered by the other.
                let mut staged: Vec<Curve> = Vec::new();
                if intersection_number(carrier, x, y)? == 0 {
                    staged.extend(complement_doubles(carrier, &[x.clone(), y.clone()], 1)?);
                }
                staged.extend(complement_doubles(carrier, &[x.clone()], 2)?);
                staged.extend(complement_doubles(carrier, &[y.clone()], 2)?);
                find_curve(carrier, ctx, &staged, accept)?
            }
        };
        path.push(repair);
        path.push(y.clone());
    }
    path.extend(suffix);
    Ok(path)
}

fn find_curve<F>(
    carrier: &Carrier,
    ctx: &RelContext,
    supply: &[Curve],
    mut pred: F,
) -> Result<Curve>
where
    F: FnMut(&Curve) -> Result<bool>,
{
    for c in supply {
        if !ctx.disjoint_from_fixed(carrier, c)? {
            continue;
        }
        if pred(c)? {
            return Ok(c.clone());
        }
    }
    Err(Error::SearchFailed("no curve in the supply fits".into()))
}

/// Chain of nonseparating curves from `a` to `b` with consecutive geometric
/// intersection one, by surgery reduction and middle insertion.
fn once_crossing_chain(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    if is_isotopic(carrier, a, b)? {
        return Ok(vec![a.clone()]);
    }
    let i_ab = intersection_number(carrier, a, b)?;
    if i_ab == 1 {
        return Ok(vec![a.clone(), b.clone()]);
    }
    if i_ab == 0 {
        // Insert a middle curve meeting both once; when the supply has none,
        // construct one through the complement regions of the pair, crossing
        // each at one gate.
        let accept_mid = |c: &Curve| -> Result<bool> {
            Ok(ctx.classify(carrier, c)?.0
                && intersection_number(carrier, c, a)? == 1
                && intersection_number(carrier, c, b)? == 1)
        };
        let mid = match find_curve(carrier, ctx, supply, accept_mid) {
            Ok(m) => m,
            Err(_) => {
                let sys = cut_system(carrier, &[a.clone(), b.clone()])?;
                let mut found = None;
                for w in sys.closed_traces_crossing(carrier, &[0, 1], 8) {
                    let Ok(c) = Curve::from_trace(carrier, w) else { continue };
                    if ctx.disjoint_from_fixed(carrier, &c)? && accept_mid(&c)? {
                        found = Some(c);
                        break;
                    }
                }
                found.ok_or_else(|| {
                    Error::SearchFailed("no middle curve crossing both once".into())
                })?
            }
        };
        return Ok(vec![a.clone(), mid, b.clone()]);
    }
    // Reduce: find a nonseparating-or-outer curve meeting b fewer times and a
    // at most once, among surgery candidates, the supply, and constructed
    // complement doubles.
    let mut candidates = surgery_candidates(carrier, a, b)?;
    candidates.extend(supply.iter().cloned());
    candidates.extend(complement_doubles(carrier, &[a.clone()], 1)?);
    for cand in candidates {
        if !ctx.disjoint_from_fixed(carrier, &cand)? {
            continue;
        }
        let (ns, outer) = ctx.classify(carrier, &cand)?;
        if !(ns || outer) {
            continue;
        }
        let ia = intersection_number(carrier, &cand, a)?;
        let ib = intersection_number(carrier, &cand, b)?;
        if ia <= 1 && ib < i_ab && !is_isotopic(carrier, &cand, a)? {
            let mut head = once_crossing_chain(carrier, ctx, a, &cand, supply)?;
            let tail = once_crossing_chain(carrier, ctx, &cand, b, supply)?;
            head.pop();
            head.extend(tail);
            return Ok(head);
        }
    }
    Err(Error::SearchFailed(
        "no once-crossing chain step found".into(),
    ))
}

/// Chain of nonseparating curves from `a` to `b` with consecutive curves
/// disjoint, by the curve-graph surgery with nonseparating repairs.
fn nonsep_disjoint_chain(
    carrier: &Carrier,
    ctx: &RelContext,
    a: &Curve,
    b: &Curve,
    supply: &[Curve],
) -> Result<Vec<Curve>> {
    let raw = curve_graph_path_rel(carrier, &ctx.fixed, a, b, supply)?;
    // Replace separating intermediates by nonseparating curves disjoint from
    // their neighbors.
    let mut out: Vec<Curve> = Vec::with_capacity(raw.len());
    for (i, c) in raw.iter().enumerate() {
        if i == 0 || i + 1 == raw.len() || ctx.classify(carrier, c)?.0 {
            out.push(c.clone());
            continue;
        }
        let (prev, next) = (&raw[i - 1], &raw[i + 1]);
        let replacement = find_curve(carrier, ctx, supply, |x| {
            Ok(ctx.classify(carrier, x)?.0
                && intersection_number(carrier, x, prev)? == 0
                && intersection_number(carrier, x, next)? == 0
                && !is_isotopic(carrier, x, prev)?
                && !is_isotopic(carrier, x, next)?)
        })?;
        out.push(replacement);
    }
    out.dedup();
    Ok(out)
}

/// Path in the B-graph of curves (nonseparating or outer vertices, nice-pair
/// edges). Requires complexity at least three.
pub fn b_curve_path(carrier: &Carrier, a: &Curve, b: &Curve) -> Result<GraphPath> {
    if carrier.surface.complexity()? < 3 {
        return Err(Error::Precondition(
            "the B-graph is connected only for complexity at least three".into(),
        ));
    }
    for c in [a, b] {
        let cls = classify_curve(carrier, c)?;
        if !(cls.is_nonseparating || cls.is_outer) {
            return Err(Error::Precondition(
                "endpoints must be nonseparating or outer".into(),
            ));
        }
    }
    let ma = Multicurve::new(carrier, vec![a.clone()])?;
    let mb = Multicurve::new(carrier, vec![b.clone()])?;
    let supply = path_supply(carrier, &[&ma, &mb])?;
    let ctx = RelContext::new(carrier, &[])?;
    let mut curves = b_curve_path_rel(carrier, &ctx, a, b, &supply)?;
    curves.dedup();
    let vertices = curves
        .into_iter()
        .map(|c| Multicurve::new(carrier, vec![c]))
        .collect::<Result<Vec<_>>>()?;
    let path = GraphPath { surface: carrier.surface, family: PathFamily::B, k: 1, vertices };
    validate_path(carrier, &path)?;
    Ok(path)
}

/// Path in the B-graph of k-multicurves, by the inductive lift over B-paths of
/// curves; requires complexity at least k+2.
pub fn b_multicurve_path(
    carrier: &Carrier,
    mu: &Multicurve,
    nu: &Multicurve,
) -> Result<GraphPath> {
    let k = mu.len();
    if nu.len() != k {
        return Err(Error::Precondition("multicurves of different size".into()));
    }
    if carrier.surface.complexity()? < k + 2 {
        return Err(Error::Precondition(
            "the B-graph of k-multicurves needs complexity at least k+2".into(),
        ));
    }
    if !b_vertex_predicate(carrier, mu)? || !b_vertex_predicate(carrier, nu)? {
        return Err(Error::Precondition("endpoints must be B-vertices".into()));
    }
    let supply = path_supply(carrier, &[mu, nu])?;
    let mut vertices = b_path_rel(carrier, &[], mu, nu, &supply)?;
    dedup_consecutive(&mut vertices);
    let path = GraphPath {
        surface: carrier.surface,
        family: PathFamily::B,
        k,
        vertices,
    };
    validate_path(carrier, &path)?;
    Ok(path)
}

fn b_path_rel(
    carrier: &Carrier,
    fixed: &[Curve],
    mu: &Multicurve,
    nu: &Multicurve,
    supply: &[Curve],
) -> Result<Vec<Multicurve>> {
    if mu == nu {
        return Ok(vec![mu.clone()]);
    }
    let ctx = RelContext::new(carrier, fixed)?;
    let k = mu.len();
    let free_mu: Vec<Curve> = mu
        .curves()
        .iter()
        .filter(|c| !fixed.contains(c))
        .cloned()
        .collect();
    let free_nu: Vec<Curve> = nu
        .curves()
        .iter()
        .filter(|c| !fixed.contains(c))
        .cloned()
        .collect();
    if free_mu.len() == 1 {
        let curves = b_curve_path_rel(carrier, &ctx, &free_mu[0], &free_nu[0], supply)?;
        let mut out = Vec::with_capacity(curves.len());
        for c in curves {
            let mut cs = fixed.to_vec();
            cs.push(c);
            out.push(Multicurve::new(carrier, cs)?);
        }
        return Ok(out);
    }
    for c in &free_mu {
        if free_nu.contains(c) && ctx.is_b_vertex_curve(carrier, c)? {
            let mut fixed2 = fixed.to_vec();
            fixed2.push(c.clone());
            // The remainder must still contain a relative B-curve.
            let deeper = RelContext::new(carrier, &fixed2)?;
            let ok_mu = has_rel_b_curve(carrier, &deeper, mu, &fixed2)?;
            let ok_nu = has_rel_b_curve(carrier, &deeper, nu, &fixed2)?;
            if ok_mu && ok_nu {
                return b_path_rel(carrier, &fixed2, mu, nu, supply);
            }
        }
    }
    // Choose alpha in mu and beta in nu: relative B-curves whose removal still
    // leaves a relative B-curve one level deeper.
    let alpha = choose_b_anchor(carrier, &ctx, &free_mu, fixed)?;
    let beta = choose_b_anchor(carrier, &ctx, &free_nu, fixed)?;
    let cpath = b_curve_path_rel(carrier, &ctx, &alpha, &beta, supply)?;
    let mut out: Vec<Multicurve> = Vec::new();
    let mut prev = mu.clone();
    for w in cpath.windows(2) {
        let (g_prev, g_next) = (&w[0], &w[1]);
        let mut partial = fixed.to_vec();
        partial.push(g_prev.clone());
        partial.push(g_next.clone());
        let mut local_supply: Vec<Curve> = supply.to_vec();
        local_supply.extend(prev.curves().iter().cloned());
        let eta = complete_to_multicurve(carrier, &partial, k, &local_supply)?;
        let mut fixed2 = fixed.to_vec();
        fixed2.push(g_prev.clone());
        let seg = b_path_rel(carrier, &fixed2, &prev, &eta, supply)?;
        out.extend(seg);
        prev = eta;
    }
    let last_curve = cpath.last().unwrap().clone();
    let mut fixed2 = fixed.to_vec();
    fixed2.push(last_curve);
    let seg = b_path_rel(carrier, &fixed2, &prev, nu, supply)?;
    out.extend(seg);
    dedup_consecutive(&mut out);
    Ok(out)
}

fn has_rel_b_curve(
    carrier: &Carrier,
    ctx: &RelContext,
    m: &Multicurve,
    fixed: &[Curve],
) -> Result<bool> {
    for c in m.curves() {
        if fixed.contains(c) {
            continue;
        }
        if ctx.is_b_vertex_curve(carrier, c)? {
            return Ok(true);
        }
    }
    Ok(false)
}

fn choose_b_anchor(
    carrier: &Carrier,
    ctx: &RelContext,
    free: &[Curve],
    fixed: &[Curve],
) -> Result<Curve> {
    for alpha in free {
        if !ctx.is_b_vertex_curve(carrier, alpha)? {
            continue;
        }
        if free.len() == 1 {
            return Ok(alpha.clone());
        }
        let mut fixed2 = fixed.to_vec();
        fixed2.push(alpha.clone());
        let Ok(deeper) = RelContext::new(carrier, &fixed2) else {
            continue;
        };
        for other in free {
            if other == alpha {
                continue;
            }
            if deeper.is_b_vertex_curve(carrier, other)? {
                return Ok(alpha.clone());
            }
        }
    }
    Err(Error::SearchFailed(
        "no anchor curve leaves a relative B-curve behind".into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::edge_link;
    use crate::mcg::standard_generators;

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
    fn farey_path_on_torus() {
        let c = carrier(1, 1);
        let h = Curve::from_trace(&c, vec![3, 1]).unwrap();
        let v = Curve::from_trace(&c, vec![2, 4]).unwrap();
        // Adjacent already.
        let p = curve_graph_path(&c, &h, &v).unwrap();
        assert_eq!(p.vertices.len(), 2);
        // A deep twist: T_v^3(h) against h.
        let mut far = h.clone();
        for _ in 0..3 {
            far = dehn_twist(&c, &far, &v, 1).unwrap();
        }
        let p = curve_graph_path(&c, &h, &far).unwrap();
        assert!(p.vertices.len() >= 2);
        validate_path(&c, &p).unwrap();
    }

    #[test]
    fn curve_path_on_five_punctures() {
        let c = carrier(0, 5);
        let links = chain_links(&c);
        let gens = standard_generators(&c).unwrap();
        let f = crate::mcg::MappingClass::parse(c.surface, &gens, "h1 h2 h0^-1 h3").unwrap();
        let target = crate::mcg::apply(&c, &gens, &f, &links[0]).unwrap();
        let p = curve_graph_path(&c, &links[0], &target).unwrap();
        validate_path(&c, &p).unwrap();
        // Length bounded by intersection plus one vertex.
        let i0 = intersection_number(&c, &links[0], &target).unwrap();
        assert!(p.vertices.len() <= i0 + 2);
    }

    #[test]
    fn multicurve_path_on_five_punctures() {
        let c = carrier(0, 5);
        let links = chain_links(&c);
        let mu = Multicurve::new(&c, vec![links[0].clone(), links[2].clone()]).unwrap();
        let gens = standard_generators(&c).unwrap();
        let f = crate::mcg::MappingClass::parse(c.surface, &gens, "h1 h2").unwrap();
        let nu = crate::mcg::apply_multicurve(&c, &gens, &f, &mu).unwrap();
        let p = multicurve_graph_path(&c, &mu, &nu).unwrap();
        validate_path(&c, &p).unwrap();
        assert_eq!(p.vertices.first().unwrap(), &mu);
        assert_eq!(p.vertices.last().unwrap(), &nu);
    }

    #[test]
    fn unicorn_path_between_crossing_arcs() {
        let c = carrier(0, 5);
        // Two crossing arcs: the chain edge (1,2) and its image under a twist
        // about the curve around {2,3}.
        let e12 = (0..c.tri.n_edges())
            .find(|&e| {
                let [d, _] = c.tri.edge_darts(e);
                let (x, y) = (c.tri.start_vertex(d), c.tri.end_vertex(d));
                (x, y) == (1, 2) || (x, y) == (2, 1)
            })
            .unwrap();
        let base = Arc::from_edge(&c, e12).unwrap();
        let mut twisted = base.clone();
        for t in crate::mcg::short_curves(&c, 8) {
            let img = dehn_twist_arc(
                &c,
                &dehn_twist_arc(&c, &base, &t, 1).unwrap(),
                &t,
                1,
            )
            .unwrap();
            if arc_intersection_number(&c, &base, &img).unwrap() > 0 {
                twisted = img;
                break;
            }
        }
        let i0 = arc_intersection_number(&c, &base, &twisted).unwrap();
        assert!(i0 > 0, "arcs should cross after the twist");
        let (p, q) = base.endpoints(&c);
        let (r, s) = twisted.endpoints(&c);
        assert_eq!(
            [p.min(q), p.max(q)],
            [r.min(s), r.max(s)],
            "twists fix endpoints"
        );
        // Designated distinct endpoints.
        let path = unicorn_path(&c, &base, p, &twisted, if s == p { r } else { s }).unwrap();
        assert!(path.len() >= 2);
        for u in &path {
            let (x, y) = u.endpoints(&c);
            assert_ne!(x, y);
        }
    }

    #[test]
    fn bridge_arc_on_five_punctures() {
        let c = carrier(0, 5);
        // Two disjoint arcs sharing an endpoint: chain edges (0,1) and (1,2).
        let edges: Vec<usize> = (0..4)
            .map(|p| {
                (0..c.tri.n_edges())
                    .find(|&e| {
                        let [d, _] = c.tri.edge_darts(e);
                        let (x, y) = (c.tri.start_vertex(d), c.tri.end_vertex(d));
                        (x == p && y == p + 1) || (x == p + 1 && y == p)
                    })
                    .unwrap()
            })
            .collect();
        let a = Arc::from_edge(&c, edges[0]).unwrap();
        let b = Arc::from_edge(&c, edges[1]).unwrap();
        assert_eq!(arc_intersection_number(&c, &a, &b).unwrap(), 0);
        let bridge = bridge_arc(&c, &a, &b).unwrap();
        let (p, q) = bridge.endpoints(&c);
        assert!(p != q);
        let (pa, qa) = a.endpoints(&c);
        let (pb, qb) = b.endpoints(&c);
        for v in [p, q] {
            assert!(![pa, qa, pb, qb].contains(&v));
        }
        assert_eq!(arc_intersection_number(&c, &bridge, &a).unwrap(), 0);
        assert_eq!(arc_intersection_number(&c, &bridge, &b).unwrap(), 0);
    }

    #[test]
    fn b_path_on_six_punctures() {
        let c = carrier(0, 6);
        let links = chain_links(&c);
        // Two crossing outer curves.
        let a = links[0].clone();
        let b = links[1].clone();
        assert!(intersection_number(&c, &a, &b).unwrap() > 0);
        let p = b_curve_path(&c, &a, &b).unwrap();
        validate_path(&c, &p).unwrap();
        assert!(p.vertices.len() >= 3);
        // Disjoint nice endpoints give a single edge.
        let p2 = b_curve_path(&c, &links[0], &links[4]).unwrap();
        assert_eq!(p2.vertices.len(), 2);
    }

    #[test]
    fn b_path_on_genus_two() {
        let c = carrier(2, 0);
        let gens = standard_generators(&c).unwrap();
        let chain: Vec<Curve> = gens
            .iter()
            .map(|g| match &g.kind {
                crate::mcg::GeneratorKind::Twist(t) => t.clone(),
                _ => panic!(),
            })
            .collect();
        // Two nonseparating curves far apart in the chain.
        let p = b_curve_path(&c, &chain[0], &chain[4]).unwrap();
        validate_path(&c, &p).unwrap();
    }

    #[test]
    fn b_multicurve_path_on_seven_punctures() {
        let c = carrier(0, 7);
        let links = chain_links(&c);
        let mu = Multicurve::new(&c, vec![links[0].clone(), links[2].clone()]).unwrap();
        let nu = Multicurve::new(&c, vec![links[3].clone(), links[5].clone()]).unwrap();
        let p = b_multicurve_path(&c, &mu, &nu).unwrap();
        validate_path(&c, &p).unwrap();
        assert_eq!(p.vertices.first().unwrap(), &mu);
        assert_eq!(p.vertices.last().unwrap(), &nu);
    }
}
