//! Curves, arcs and multicurves: the basic objects, their canonical forms, and
//! geometric intersection numbers.
//!
//! Every curve lives on the fixed standard triangulation of its surface; a
//! closed surface is carried by a once-marked proxy of the same genus, with the
//! marked puncture recorded so cut results can forget it.

use crate::error::{Error, Result};
use crate::overlay::{InitialOrder, ObjKind, Overlay, Placed};
use crate::surface::SurfaceType;
use crate::trace::{
    canonical_closed, closed_walk_valid, edge_weights, reduce_closed, ArcWord,
};
use crate::triangulation::{
    next_dart, standard_triangulation, CornerId, DartId, EdgeId, IdealTriangulation, VertexId,
};
use serde::{Deserialize, Serialize};

/// A surface together with its fixed triangulated carrier.
#[derive(Clone, Debug)]
pub struct Carrier {
    pub surface: SurfaceType,
    pub tri: IdealTriangulation,
    /// For closed surfaces: the auxiliary marked puncture of the proxy.
    pub marked: Option<VertexId>,
}

impl Carrier {
    pub fn new(surface: SurfaceType) -> Result<Carrier> {
        surface.complexity()?;
        if surface.punctures == 0 {
            let tri = standard_triangulation(SurfaceType::new(surface.genus, 1))?;
            Ok(Carrier { surface, tri, marked: Some(0) })
        } else {
            let tri = standard_triangulation(surface)?;
            Ok(Carrier { surface, tri, marked: None })
        }
    }

    /// Number of punctures of the carrier triangulation (the proxy count for
    /// closed surfaces).
    pub fn carrier_punctures(&self) -> usize {
        self.tri.n_vertices()
    }

    fn is_vertex_link(&self, canonical: &[DartId]) -> bool {
        for p in 0..self.tri.n_vertices() {
            let link = self.tri.vertex_link_trace(p);
            if canonical_closed(&self.tri, &link) == canonical {
                return true;
            }
        }
        false
    }
}

/// An essential simple closed curve, stored as the canonical reduced trace on
/// the carrier triangulation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Curve {
    pub surface: SurfaceType,
    trace: Vec<DartId>,
}

impl Curve {
    /// Builds a curve from any walk-valid trace; reduces, canonicalizes and
    /// validates that it is an essential simple closed curve.
    pub fn from_trace(carrier: &Carrier, darts: Vec<DartId>) -> Result<Curve> {
        if !closed_walk_valid(&carrier.tri, &darts) {
            return Err(Error::BadTrace("not a closed walk".into()));
        }
        let reduced = reduce_closed(&carrier.tri, &darts);
        if reduced.is_empty() {
            return Err(Error::InessentialCurve("nullhomotopic trace".into()));
        }
        if !is_primitive(&reduced) {
            return Err(Error::BadTrace(
                "trace is a proper power and cannot be a simple curve".into(),
            ));
        }
        let canon = canonical_closed(&carrier.tri, &reduced);
        if carrier.is_vertex_link(&canon) {
            return Err(Error::InessentialCurve(
                "trace is parallel to a puncture".into(),
            ));
        }
        // Embedded realizability check.
        Overlay::new(&carrier.tri, vec![Placed::closed(canon.clone())], InitialOrder::Taut)
            .map_err(|_| Error::BadTrace("trace has essential self-crossings".into()))?;
        Ok(Curve { surface: carrier.surface, trace: canon })
    }

    pub fn trace(&self) -> &[DartId] {
        &self.trace
    }

    pub fn weights(&self, carrier: &Carrier) -> Vec<usize> {
        edge_weights(&carrier.tri, &self.trace)
    }

    pub fn placed(&self) -> Placed {
        Placed::closed(self.trace.clone())
    }
}

fn is_primitive(word: &[DartId]) -> bool {
    let n = word.len();
    for p in 1..n {
        if n % p == 0 && (0..n).all(|i| word[i] == word[(i + p) % n]) {
            return false;
        }
    }
    true
}

/// Geometric intersection number of two curves on the same carrier, computed
/// by taut placement and certified by empty-bigon absence. Results are
/// memoized per surface and canonical trace pair.
pub fn intersection_number(carrier: &Carrier, a: &Curve, b: &Curve) -> Result<usize> {
    if a.surface != b.surface || a.surface != carrier.surface {
        return Err(Error::SurfaceMismatch);
    }
    if a.trace == b.trace {
        return Ok(0);
    }
    use std::sync::{Mutex, OnceLock};
    type Key = (SurfaceType, Vec<DartId>, Vec<DartId>);
    static CACHE: OnceLock<Mutex<std::collections::HashMap<Key, usize>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Default::default()));
    let key = if a.trace <= b.trace {
        (carrier.surface, a.trace.clone(), b.trace.clone())
    } else {
        (carrier.surface, b.trace.clone(), a.trace.clone())
    };
    if let Some(&n) = cache.lock().unwrap().get(&key) {
        return Ok(n);
    }
    let mut ov = Overlay::new(
        &carrier.tri,
        vec![a.placed(), b.placed()],
        InitialOrder::Taut,
    )?;
    ov.reduce_bigons()?;
    let n = ov.crossing_count();
    cache.lock().unwrap().insert(key, n);
    Ok(n)
}

/// Isotopy test. On punctured surfaces canonical traces decide. On a closed
/// surface the marked point must be forgotten: equal proxies are isotopic, and
/// disjoint proxy curves are isotopic exactly when they cobound an annulus
/// containing only the marked point; crossing proxy pairs are reported
/// non-isotopic (desk-scale closed-surface limitation).
pub fn is_isotopic(carrier: &Carrier, a: &Curve, b: &Curve) -> Result<bool> {
    if a.surface != b.surface || a.surface != carrier.surface {
        return Err(Error::SurfaceMismatch);
    }
    if a.trace == b.trace {
        return Ok(true);
    }
    if carrier.marked.is_none() {
        return Ok(false);
    }
    if intersection_number(carrier, a, b)? != 0 {
        return Ok(false);
    }
    // Disjoint on the proxy: isotopic on the closed surface iff they cobound
    // an annulus containing only the marked point, i.e. the cut has a
    // three-punctured-sphere component made of exactly the marked puncture and
    // one side of each curve.
    let cut = crate::cut::cut_system(carrier, &[a.clone(), b.clone()])?;
    Ok(cut.components.iter().any(|comp| {
        comp.proxy_surface == SurfaceType::new(0, 3)
            && comp.original_punctures == vec![carrier.marked.unwrap()]
            && comp.curve_sides.len() == 2
            && comp.curve_sides[0].0 != comp.curve_sides[1].0
    }))
}

/// Free class of a triangulation edge whose endpoints coincide, pushed off the
/// vertex: the returned curve crosses the fan at the vertex between the two
/// ends of the edge.
pub fn edge_pushoff(carrier: &Carrier, e: EdgeId) -> Result<Curve> {
    let tri = &carrier.tri;
    let [d, _] = tri.edge_darts(e);
    let g = tri.glue(d);
    if tri.start_vertex(d) != tri.end_vertex(d) {
        return Err(Error::Precondition(format!(
            "edge {e} is not a loop; use edge_link"
        )));
    }
    // The loop's two ends cut the vertex fan into two arcs; the parallel copy
    // on one side crosses exactly the fan darts of that arc. Both sides give
    // the same unoriented class when essential; take whichever validates.
    let side_a = tri.fan_between(tri.rotate_corner(d), g);
    let side_b = tri.fan_between(tri.rotate_corner(g), d);
    for word in [side_a, side_b] {
        if word.is_empty() {
            continue;
        }
        if let Ok(curve) = Curve::from_trace(carrier, word) {
            return Ok(curve);
        }
    }
    Err(Error::InessentialCurve(format!(
        "both push-offs of loop edge {e} are inessential"
    )))
}

/// Boundary of a regular neighborhood of edge `e` together with its two
/// distinct endpoint punctures: the curve encircling both.
pub fn edge_link(carrier: &Carrier, e: EdgeId) -> Result<Curve> {
    let tri = &carrier.tri;
    let [d, _] = tri.edge_darts(e);
    let g = tri.glue(d);
    if tri.start_vertex(d) == tri.end_vertex(d) {
        return Err(Error::Precondition(format!(
            "edge {e} is a loop; use edge_pushoff"
        )));
    }
    let mut word = tri.fan_between(next_dart(d), g);
    word.extend(tri.fan_between(next_dart(g), d));
    Curve::from_trace(carrier, word)
}

/// An essential embedded arc between punctures, in reduced canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arc {
    pub surface: SurfaceType,
    word: ArcWord,
}

impl Arc {
    pub fn from_word(carrier: &Carrier, word: ArcWord) -> Result<Arc> {
        if !word.walk_valid(&carrier.tri) {
            return Err(Error::BadArc("not a valid arc walk".into()));
        }
        let reduced = word.reduced(&carrier.tri)?;
        let canon = reduced.canonical(&carrier.tri);
        let arc = Arc { surface: carrier.surface, word: canon };
        // Embeddedness.
        Overlay::new(&carrier.tri, vec![arc.placed()], InitialOrder::Taut)
            .map_err(|_| Error::BadArc("arc word has essential self-crossings".into()))?;
        Ok(arc)
    }

    /// The arc running along triangulation edge `e`, which must have distinct
    /// endpoint punctures.
    pub fn from_edge(carrier: &Carrier, e: EdgeId) -> Result<Arc> {
        let tri = &carrier.tri;
        let [d, _] = tri.edge_darts(e);
        if tri.start_vertex(d) == tri.end_vertex(d) {
            return Err(Error::BadArc(format!("edge {e} has equal endpoints")));
        }
        Arc::from_word(
            carrier,
            ArcWord { start_corner: d, darts: vec![], end_corner: next_dart(d) },
        )
    }

    pub fn word(&self) -> &ArcWord {
        &self.word
    }

    pub fn endpoints(&self, carrier: &Carrier) -> (VertexId, VertexId) {
        self.word.endpoints(&carrier.tri)
    }

    pub fn placed(&self) -> Placed {
        Placed::arc(self.word.start_corner, self.word.darts.clone(), self.word.end_corner)
    }

    /// The arc with designated direction: start at `from` endpoint.
    pub fn oriented_from(&self, carrier: &Carrier, from: VertexId) -> Result<ArcWord> {
        let (p, q) = self.endpoints(carrier);
        if p == from {
            Ok(self.word.clone())
        } else if q == from {
            Ok(self.word.reversed(&carrier.tri))
        } else {
            Err(Error::Precondition(format!("arc has no endpoint {from}")))
        }
    }
}

/// Geometric intersection number of two arcs (endpoint crossings do not count;
/// arcs sharing punctures can always be made disjoint near the cusp).
pub fn arc_intersection_number(carrier: &Carrier, a: &Arc, b: &Arc) -> Result<usize> {
    if a.word == b.word {
        return Ok(0);
    }
    let mut ov = Overlay::new(
        &carrier.tri,
        vec![a.placed(), b.placed()],
        InitialOrder::Taut,
    )?;
    ov.reduce_bigons()?;
    verify_no_cusp_wedge(carrier, &ov)?;
    Ok(ov.crossing_count())
}

/// Certifies that no crossing of the overlay can be removed by sliding an arc
/// end around a shared cusp. Taut arc words are unique, so this never fires
/// for reduced arcs; it is kept as a guard for the minimality certificate.
fn verify_no_cusp_wedge(carrier: &Carrier, ov: &Overlay) -> Result<()> {
    let tri = &carrier.tri;
    let ends = |o: usize| -> Option<(CornerId, CornerId)> {
        match ov.objs[o].kind {
            ObjKind::Arc { start_corner, end_corner } => Some((start_corner, end_corner)),
            ObjKind::Closed => None,
        }
    };
    let (Some((a0, a1)), Some((b0, b1))) = (ends(0), ends(1)) else {
        return Ok(());
    };
    let n = ov.crossing_count();
    if n == 0 {
        return Ok(());
    }
    let seq0 = ov.sequence_along(0);
    let seq1 = ov.sequence_along(1);
    // Candidate: outermost crossing toward each arc end.
    for (a_end, a_corner, a_cross) in [(false, a0, seq0[0]), (true, a1, seq0[n - 1])] {
        for (b_end, b_corner, b_cross) in [(false, b0, seq1[0]), (true, b1, seq1[n - 1])] {
            if a_cross != b_cross {
                continue;
            }
            if tri.vertex_of_corner(a_corner) != tri.vertex_of_corner(b_corner) {
                continue;
            }
            // Tail words from the shared crossing to each end.
            let c = a_cross;
            let wa = arc_tail_darts(ov, 0, c, a_end);
            let wb = arc_tail_darts(ov, 1, c, b_end);
            // Wedge loop: a-tail, fan at the cusp, reversed b-tail.
            for dir_words in [
                tri.fan_between(a_corner, b_corner),
                reverse_fan(tri, &tri.fan_between(b_corner, a_corner)),
            ] {
                let mut word = wa.clone();
                word.extend(dir_words);
                word.extend(wb.iter().rev().map(|&d| tri.glue(d)));
                if linear_reduce(tri, &word).is_empty() {
                    return Err(Error::BadArc(
                        "arc pair admits a cusp slide; words are not taut".into(),
                    ));
                }
            }
        }
    }
    Ok(())
}

fn reverse_fan(tri: &IdealTriangulation, fan: &[DartId]) -> Vec<DartId> {
    fan.iter().rev().map(|&d| tri.glue(d)).collect()
}

fn linear_reduce(tri: &IdealTriangulation, word: &[DartId]) -> Vec<DartId> {
    let mut stack: Vec<DartId> = Vec::new();
    for &d in word {
        if stack.last().is_some_and(|&top| tri.glue(top) == d) {
            stack.pop();
        } else {
            stack.push(d);
        }
    }
    stack
}

/// Darts of arc object `o` from crossing `c` to its start (`to_end` false) or
/// end (`to_end` true), oriented toward the endpoint.
fn arc_tail_darts(ov: &Overlay, o: usize, c: usize, to_end: bool) -> Vec<DartId> {
    let s = ov.crossing_strand(c, o);
    let darts = &ov.objs[o].darts;
    if to_end {
        darts[s..].to_vec()
    } else {
        darts[..s].iter().rev().map(|&d| ov.tri.glue(d)).collect()
    }
}

/// The boundary of a regular neighborhood of an arc with distinct endpoints:
/// the outer curve around its two punctures.
pub fn outer_curve_of_arc(carrier: &Carrier, arc: &Arc) -> Result<Curve> {
    let tri = &carrier.tri;
    let (p, q) = arc.endpoints(carrier);
    if p == q {
        return Err(Error::Precondition(
            "arc endpoints coincide; the neighborhood boundary need not be an outer curve".into(),
        ));
    }
    let w = &arc.word().darts;
    let mut word: Vec<DartId> = w.clone();
    word.extend(tri.corner_orbit_darts(arc.word().end_corner));
    word.extend(w.iter().rev().map(|&d| tri.glue(d)));
    word.extend(tri.corner_orbit_darts(arc.word().start_corner));
    Curve::from_trace(carrier, word)
}

/// A set of pairwise disjoint, pairwise non-isotopic curves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Multicurve {
    pub surface: SurfaceType,
    curves: Vec<Curve>,
}

impl Multicurve {
    pub fn new(carrier: &Carrier, mut curves: Vec<Curve>) -> Result<Multicurve> {
        if curves.is_empty() {
            return Err(Error::BadMulticurve("empty multicurve".into()));
        }
        let xi = carrier.surface.complexity()?;
        if curves.len() > xi {
            return Err(Error::BadMulticurve(format!(
                "{} curves exceed the complexity {} of {}",
                curves.len(),
                xi,
                carrier.surface
            )));
        }
        curves.sort();
        for i in 0..curves.len() {
            if curves[i].surface != carrier.surface {
                return Err(Error::SurfaceMismatch);
            }
            for j in i + 1..curves.len() {
                if is_isotopic(carrier, &curves[i], &curves[j])? {
                    return Err(Error::BadMulticurve("curves are isotopic".into()));
                }
                if intersection_number(carrier, &curves[i], &curves[j])? != 0 {
                    return Err(Error::BadMulticurve("curves intersect".into()));
                }
            }
        }
        Ok(Multicurve { surface: carrier.surface, curves })
    }

    pub fn curves(&self) -> &[Curve] {
        &self.curves
    }

    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn contains(&self, c: &Curve) -> bool {
        self.curves.binary_search(c).is_ok()
    }

    /// Curves of `self` not in `other`.
    pub fn difference(&self, other: &Multicurve) -> Vec<Curve> {
        self.curves
            .iter()
            .filter(|c| !other.contains(c))
            .cloned()
            .collect()
    }

    /// Common curves.
    pub fn intersection(&self, other: &Multicurve) -> Vec<Curve> {
        self.curves
            .iter()
            .filter(|c| other.contains(c))
            .cloned()
            .collect()
    }

    /// Replaces `old` by `new`, revalidating.
    pub fn replace(&self, carrier: &Carrier, old: &Curve, new: Curve) -> Result<Multicurve> {
        let mut curves: Vec<Curve> = self
            .curves
            .iter()
            .filter(|c| *c != old)
            .cloned()
            .collect();
        if curves.len() != self.curves.len() - 1 {
            return Err(Error::Precondition("curve to replace is not present".into()));
        }
        curves.push(new);
        Multicurve::new(carrier, curves)
    }

    pub fn with_curve(&self, carrier: &Carrier, new: Curve) -> Result<Multicurve> {
        let mut curves = self.curves.clone();
        curves.push(new);
        Multicurve::new(carrier, curves)
    }

    pub fn without_curve(&self, carrier: &Carrier, c: &Curve) -> Result<Multicurve> {
        let curves: Vec<Curve> = self.curves.iter().filter(|x| *x != c).cloned().collect();
        if curves.len() != self.curves.len() - 1 {
            return Err(Error::Precondition("curve not present".into()));
        }
        Multicurve::new(carrier, curves)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn carrier(g: usize, n: usize) -> Carrier {
        Carrier::new(SurfaceType::new(g, n)).unwrap()
    }

    #[test]
    fn torus_pushoffs_are_the_three_slopes() {
        let c = carrier(1, 1);
        let slopes = [
            Curve::from_trace(&c, vec![3, 1]).unwrap(),
            Curve::from_trace(&c, vec![2, 4]).unwrap(),
            Curve::from_trace(&c, vec![4, 1]).unwrap(),
        ];
        for e in 0..3 {
            let p = edge_pushoff(&c, e).unwrap();
            assert!(slopes.contains(&p), "push-off of edge {e}");
        }
        // All three distinct.
        let mut traces: Vec<_> = (0..3).map(|e| edge_pushoff(&c, e).unwrap()).collect();
        traces.dedup();
        assert_eq!(traces.len(), 3);
    }

    #[test]
    fn torus_slope_intersections_via_api() {
        let c = carrier(1, 1);
        let h = Curve::from_trace(&c, vec![3, 1]).unwrap();
        let v = Curve::from_trace(&c, vec![2, 4]).unwrap();
        let d = Curve::from_trace(&c, vec![4, 1]).unwrap();
        assert_eq!(intersection_number(&c, &h, &v).unwrap(), 1);
        assert_eq!(intersection_number(&c, &h, &d).unwrap(), 1);
        assert_eq!(intersection_number(&c, &v, &d).unwrap(), 1);
        assert_eq!(intersection_number(&c, &h, &h).unwrap(), 0);
        assert!(!is_isotopic(&c, &h, &v).unwrap());
        assert!(is_isotopic(&c, &h, &h).unwrap());
    }

    #[test]
    fn vertex_link_rejected_as_curve() {
        let c = carrier(1, 1);
        let link = c.tri.vertex_link_trace(0);
        assert!(matches!(
            Curve::from_trace(&c, link),
            Err(Error::InessentialCurve(_))
        ));
    }

    #[test]
    fn four_punctured_sphere_dual_links() {
        let c = carrier(0, 4);
        // Chain edges join punctures (0,1), (1,2), (2,3).
        let chain: Vec<EdgeId> = chain_edges(&c);
        assert!(chain.len() >= 3);
        let c01 = edge_link(&c, chain[0]).unwrap();
        let c12 = edge_link(&c, chain[1]).unwrap();
        let c23 = edge_link(&c, chain[2]).unwrap();
        assert_eq!(intersection_number(&c, &c01, &c12).unwrap(), 2);
        assert_eq!(intersection_number(&c, &c12, &c23).unwrap(), 2);
        // Complementary pairs of punctures give the same curve here.
        assert_eq!(c01, c23);
        assert_eq!(intersection_number(&c, &c01, &c23).unwrap(), 0);
    }

    #[test]
    fn five_punctured_sphere_links_disjoint_when_nested_apart() {
        let c = carrier(0, 5);
        let chain = chain_edges(&c);
        let c01 = edge_link(&c, chain[0]).unwrap();
        let c12 = edge_link(&c, chain[1]).unwrap();
        let c34 = edge_link(&c, chain[3]).unwrap();
        assert_eq!(intersection_number(&c, &c01, &c34).unwrap(), 0);
        assert_eq!(intersection_number(&c, &c01, &c12).unwrap(), 2);
        let m = Multicurve::new(&c, vec![c01.clone(), c34.clone()]).unwrap();
        assert_eq!(m.len(), 2);
        assert!(Multicurve::new(&c, vec![c01.clone(), c12]).is_err());
        assert!(Multicurve::new(&c, vec![c01.clone(), c01]).is_err());
    }

    #[test]
    fn arc_double_matches_edge_link() {
        let c = carrier(0, 5);
        let chain = chain_edges(&c);
        let arc = Arc::from_edge(&c, chain[0]).unwrap();
        let via_arc = outer_curve_of_arc(&c, &arc).unwrap();
        let via_edge = edge_link(&c, chain[0]).unwrap();
        assert_eq!(via_arc, via_edge);
    }

    #[test]
    fn disjoint_arcs_have_zero_intersection() {
        let c = carrier(0, 5);
        let chain = chain_edges(&c);
        let a01 = Arc::from_edge(&c, chain[0]).unwrap();
        let a23 = Arc::from_edge(&c, chain[2]).unwrap();
        let a12 = Arc::from_edge(&c, chain[1]).unwrap();
        assert_eq!(arc_intersection_number(&c, &a01, &a23).unwrap(), 0);
        assert_eq!(arc_intersection_number(&c, &a01, &a12).unwrap(), 0);
    }

    /// Edges joining consecutive punctures, ordered by the smaller endpoint.
    pub(crate) fn chain_edges(c: &Carrier) -> Vec<EdgeId> {
        let n = c.tri.n_vertices();
        (0..n.saturating_sub(1))
            .map(|p| {
                (0..c.tri.n_edges())
                    .find(|&e| {
                        let [d, _] = c.tri.edge_darts(e);
                        let (a, b) = (c.tri.start_vertex(d), c.tri.end_vertex(d));
                        (a == p && b == p + 1) || (a == p + 1 && b == p)
                    })
                    .expect("consecutive punctures share an edge")
            })
            .collect()
    }
}
