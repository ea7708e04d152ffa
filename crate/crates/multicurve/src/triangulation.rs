//! Ideal triangulations as glued oriented triangles.
//!
//! A triangulation with `T` triangles has `3T` sides ("darts"), indexed so that
//! triangle `t` owns darts `3t`, `3t+1`, `3t+2` in counterclockwise order. Dart
//! `3t+k` runs from corner `k` to corner `k+1` of the triangle; gluing is a
//! fixed-point-free involution pairing darts, always orientation-reversing, so
//! every gluing table describes an oriented surface. Vertex classes (punctures)
//! are the orbits of the corner rotation.

use crate::error::{Error, Result};
use crate::surface::SurfaceType;
use serde::{Deserialize, Serialize};

pub type DartId = usize;
pub type EdgeId = usize;
pub type VertexId = usize;
pub type CornerId = usize; // corner k of triangle t is the dart id 3t+k

#[inline]
pub fn tri_of(d: DartId) -> usize {
    d / 3
}

#[inline]
pub fn next_dart(d: DartId) -> DartId {
    3 * (d / 3) + (d % 3 + 1) % 3
}

#[inline]
pub fn prev_dart(d: DartId) -> DartId {
    3 * (d / 3) + (d % 3 + 2) % 3
}

/// An ideal triangulation of a connected oriented punctured surface.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealTriangulation {
    surface: SurfaceType,
    glue: Vec<DartId>,
    edge_of: Vec<EdgeId>,
    edge_darts: Vec<[DartId; 2]>,
    /// Vertex class of the corner at the start of each dart.
    vertex_of: Vec<VertexId>,
    n_vertices: usize,
}

impl IdealTriangulation {
    /// Builds a triangulation from a gluing involution and validates it.
    pub fn from_gluing(glue: Vec<DartId>) -> Result<Self> {
        let n_darts = glue.len();
        if n_darts == 0 || n_darts % 3 != 0 {
            return Err(Error::BadTriangulation(format!(
                "dart count {n_darts} is not a positive multiple of 3"
            )));
        }
        for (d, &g) in glue.iter().enumerate() {
            if g >= n_darts || g == d || glue[g] != d {
                return Err(Error::BadTriangulation(format!(
                    "gluing is not a fixed-point-free involution at dart {d}"
                )));
            }
        }
        // Edges: orbits of the involution.
        let mut edge_of = vec![usize::MAX; n_darts];
        let mut edge_darts = Vec::new();
        for d in 0..n_darts {
            if edge_of[d] == usize::MAX {
                let e = edge_darts.len();
                edge_of[d] = e;
                edge_of[glue[d]] = e;
                edge_darts.push([d.min(glue[d]), d.max(glue[d])]);
            }
        }
        // Vertex classes: orbits of the corner rotation c -> next(glue[c]).
        let mut vertex_of = vec![usize::MAX; n_darts];
        let mut n_vertices = 0;
        for c in 0..n_darts {
            if vertex_of[c] == usize::MAX {
                let v = n_vertices;
                n_vertices += 1;
                let mut cur = c;
                loop {
                    vertex_of[cur] = v;
                    cur = next_dart(glue[cur]);
                    if cur == c {
                        break;
                    }
                }
            }
        }
        // Connectivity over triangles.
        let n_tris = n_darts / 3;
        let mut seen = vec![false; n_tris];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(t) = stack.pop() {
            for k in 0..3 {
                let u = tri_of(glue[3 * t + k]);
                if !seen[u] {
                    seen[u] = true;
                    stack.push(u);
                }
            }
        }
        if seen.iter().any(|&s| !s) {
            return Err(Error::BadTriangulation("glued complex is disconnected".into()));
        }
        // Derive the surface type: closed-surface chi is V - E + F, and punctures
        // are exactly the vertices, so 2 - 2g = n - E + T with E = 3T/2.
        let n_edges = edge_darts.len();
        let chi_closed = n_vertices as i64 - n_edges as i64 + n_tris as i64;
        if chi_closed % 2 != 0 || chi_closed > 2 {
            return Err(Error::BadTriangulation(format!(
                "inconsistent Euler characteristic {chi_closed}"
            )));
        }
        let genus = ((2 - chi_closed) / 2) as usize;
        let surface = SurfaceType::validated(genus, n_vertices)?;
        let tri = IdealTriangulation {
            surface,
            glue,
            edge_of,
            edge_darts,
            vertex_of,
            n_vertices,
        };
        debug_assert_eq!(tri.n_triangles(), 4 * genus + 2 * n_vertices - 4);
        debug_assert_eq!(tri.n_edges(), 6 * genus + 3 * n_vertices - 6);
        Ok(tri)
    }

    pub fn surface(&self) -> SurfaceType {
        self.surface
    }

    pub fn n_triangles(&self) -> usize {
        self.glue.len() / 3
    }

    pub fn n_darts(&self) -> usize {
        self.glue.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    #[inline]
    pub fn glue(&self, d: DartId) -> DartId {
        self.glue[d]
    }

    #[inline]
    pub fn edge_of(&self, d: DartId) -> EdgeId {
        self.edge_of[d]
    }

    #[inline]
    pub fn edge_darts(&self, e: EdgeId) -> [DartId; 2] {
        self.edge_darts[e]
    }

    /// Vertex class at the start corner of dart `d`.
    #[inline]
    pub fn start_vertex(&self, d: DartId) -> VertexId {
        self.vertex_of[d]
    }

    /// Vertex class at the end corner of dart `d`.
    #[inline]
    pub fn end_vertex(&self, d: DartId) -> VertexId {
        self.vertex_of[next_dart(d)]
    }

    /// Vertex class of a corner.
    #[inline]
    pub fn vertex_of_corner(&self, c: CornerId) -> VertexId {
        self.vertex_of[c]
    }

    /// The corner reached from `c` by rotating around its vertex across the
    /// side `c` itself.
    #[inline]
    pub fn rotate_corner(&self, c: CornerId) -> CornerId {
        next_dart(self.glue[c])
    }

    /// Inverse of [`rotate_corner`].
    #[inline]
    pub fn rotate_corner_back(&self, c: CornerId) -> CornerId {
        self.glue[prev_dart(c)]
    }

    /// All corners around a vertex, in rotation order, starting from the
    /// smallest corner id in the class.
    pub fn corners_at_vertex(&self, v: VertexId) -> Vec<CornerId> {
        let start = (0..self.n_darts())
            .find(|&c| self.vertex_of[c] == v)
            .expect("vertex id out of range");
        let mut out = Vec::new();
        let mut cur = start;
        loop {
            out.push(cur);
            cur = self.rotate_corner(cur);
            if cur == start {
                break;
            }
        }
        out
    }

    /// Degree of a vertex: the number of corners in its class.
    pub fn vertex_degree(&self, v: VertexId) -> usize {
        self.corners_at_vertex(v).len()
    }

    /// Darts crossed when rotating around a vertex from corner `from` up to
    /// (exclusive) corner `to`; both corners must lie at the same vertex.
    pub fn fan_between(&self, from: CornerId, to: CornerId) -> Vec<DartId> {
        debug_assert_eq!(self.vertex_of_corner(from), self.vertex_of_corner(to));
        let mut out = Vec::new();
        let mut c = from;
        while c != to {
            out.push(c);
            c = self.rotate_corner(c);
            debug_assert!(out.len() <= self.n_darts());
        }
        out
    }

    /// Darts crossed by a full rotation around the vertex of `corner`.
    pub fn corner_orbit_darts(&self, corner: CornerId) -> Vec<DartId> {
        let mut out = vec![corner];
        let mut c = self.rotate_corner(corner);
        while c != corner {
            out.push(c);
            c = self.rotate_corner(c);
        }
        out
    }

    /// Normal coordinates of the small circle around puncture `p`: each edge is
    /// weighted by the number of its endpoints lying at `p` (a loop counts twice).
    pub fn vertex_link(&self, p: VertexId) -> Result<NormalCoordinates> {
        if p >= self.n_vertices {
            return Err(Error::Precondition(format!(
                "puncture {p} out of range (surface has {})",
                self.n_vertices
            )));
        }
        let mut weights = vec![0usize; self.n_edges()];
        for d in 0..self.n_darts() {
            if self.vertex_of[d] == p {
                // The link strand cutting off this corner crosses the two
                // adjacent sides; count each side-crossing once via the side
                // that starts at the corner.
                weights[self.edge_of[d]] += 1;
                weights[self.edge_of[prev_dart(d)]] += 1;
            }
        }
        // Each crossing was seen from both of its adjacent corners.
        for w in weights.iter_mut() {
            debug_assert!(*w % 2 == 0);
            *w /= 2;
        }
        NormalCoordinates::new(self, weights)
    }

    /// The dart word of the vertex link around `p` (the trace of the small
    /// circle, one corner-cutting strand per corner in rotation order).
    pub fn vertex_link_trace(&self, p: VertexId) -> Vec<DartId> {
        self.corners_at_vertex(p)
    }

    /// Flips edge `e`, returning the new triangulation. The two triangles
    /// adjacent to `e` must be distinct.
    pub fn flip(&self, e: EdgeId) -> Result<IdealTriangulation> {
        if e >= self.n_edges() {
            return Err(Error::Precondition(format!("edge {e} out of range")));
        }
        let [d0, d1] = self.edge_darts[e];
        let (ta, tb) = (tri_of(d0), tri_of(d1));
        if ta == tb {
            return Err(Error::UnflippableEdge(e));
        }
        // Quad around e: in ta the other sides are x1 = next(d0), x2 = next^2(d0);
        // in tb they are y1 = next(d1), y2 = next^2(d1). New triangles reuse the
        // slots: ta' = (x2, y1, f), tb' = (y2, x1, f') with f glued to f'.
        let x1 = next_dart(d0);
        let x2 = next_dart(x1);
        let y1 = next_dart(d1);
        let y2 = next_dart(y1);
        let mut new_glue = self.glue.clone();
        // old dart -> new dart position
        let moved = [
            (x2, 3 * ta),
            (y1, 3 * ta + 1),
            (y2, 3 * tb),
            (x1, 3 * tb + 1),
        ];
        let relocate = |d: DartId| -> DartId {
            for &(old, new) in &moved {
                if d == old {
                    return new;
                }
            }
            d
        };
        for &(old, new) in &moved {
            let partner = self.glue[old];
            new_glue[new] = relocate(partner);
            new_glue[relocate(partner)] = new;
        }
        new_glue[3 * ta + 2] = 3 * tb + 2;
        new_glue[3 * tb + 2] = 3 * ta + 2;
        IdealTriangulation::from_gluing(new_glue)
    }

    /// True when the two triangles adjacent to `e` are distinct.
    pub fn is_flippable(&self, e: EdgeId) -> bool {
        let [d0, d1] = self.edge_darts[e];
        tri_of(d0) != tri_of(d1)
    }

    /// A canonical encoding invariant under orientation-preserving relabeling,
    /// used to test triangulation isomorphism.
    pub fn canonical_encoding(&self) -> Vec<usize> {
        let mut best: Option<Vec<usize>> = None;
        for start in 0..self.n_darts() {
            let enc = self.encode_from(start);
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        }
        best.unwrap()
    }

    fn encode_from(&self, start: DartId) -> Vec<usize> {
        // Relabel triangles by BFS from tri(start); within each triangle, sides
        // are rotated so the entry dart becomes side 0. Encode the glue table in
        // the new labels.
        let n_tris = self.n_triangles();
        let mut label = vec![usize::MAX; n_tris]; // triangle -> new index
        let mut rot = vec![0usize; n_tris]; // side offset: new side k = old side (k+rot)%3
        let mut order = Vec::with_capacity(n_tris);
        label[tri_of(start)] = 0;
        rot[tri_of(start)] = start % 3;
        order.push(tri_of(start));
        let mut head = 0;
        while head < order.len() {
            let t = order[head];
            head += 1;
            for k in 0..3 {
                let old_d = 3 * t + (k + rot[t]) % 3;
                let g = self.glue[old_d];
                let u = tri_of(g);
                if label[u] == usize::MAX {
                    label[u] = order.len();
                    rot[u] = g % 3;
                    order.push(u);
                }
            }
        }
        let mut enc = Vec::with_capacity(self.n_darts());
        for &t in &order {
            for k in 0..3 {
                let old_d = 3 * t + (k + rot[t]) % 3;
                let g = self.glue[old_d];
                let u = tri_of(g);
                let new_side = (g % 3 + 3 - rot[u]) % 3;
                enc.push(3 * label[u] + new_side);
            }
        }
        enc
    }

    pub fn is_isomorphic_to(&self, other: &IdealTriangulation) -> bool {
        self.n_darts() == other.n_darts()
            && self.canonical_encoding() == other.canonical_encoding()
    }
}

/// Fixed deterministic triangulation for each surface type with at least one
/// puncture. Closed surfaces are rejected here; their curve machinery runs on a
/// once-marked proxy handled one level up.
///
/// Construction: for genus zero, two triangles glued into a three-punctured
/// sphere, then repeated coning of the highest-index triangle, one new puncture
/// each; for positive genus, the fan triangulation of the standard `4g`-gon with
/// one vertex, then the same coning. Consecutive punctures are always joined by
/// an edge.
pub fn standard_triangulation(s: SurfaceType) -> Result<IdealTriangulation> {
    s.complexity()?;
    if s.punctures == 0 {
        return Err(Error::ClosedSurfaceTriangulation { genus: s.genus });
    }
    let mut tri = if s.genus == 0 {
        // Pillow: triangles (A,B,C) and (A,C,B); side k of 0 glued to side 2-k of 1.
        IdealTriangulation::from_gluing(vec![5, 4, 3, 2, 1, 0])?
    } else {
        fan_polygon(s.genus)?
    };
    let base_punctures = if s.genus == 0 { 3 } else { 1 };
    for _ in base_punctures..s.punctures {
        tri = cone_triangle(&tri, tri.n_triangles() - 1)?;
    }
    debug_assert_eq!(tri.surface(), s);
    Ok(tri)
}

/// Fan triangulation of the `4g`-gon with the `a b a^-1 b^-1 ...` side pairing;
/// all polygon vertices are identified to the single puncture.
fn fan_polygon(g: usize) -> Result<IdealTriangulation> {
    assert!(g >= 1);
    let m = 4 * g; // polygon sides
    let n_tris = m - 2;
    let mut glue = vec![usize::MAX; 3 * n_tris];
    // Triangle i = (0, i+1, i+2): side 0 = diagonal from 0 to i+1, side 1 =
    // polygon side i+1, side 2 = diagonal from i+2 back to 0.
    // Diagonals: T_i side 2 glued to T_{i+1} side 0.
    for i in 0..n_tris - 1 {
        let a = 3 * i + 2;
        let b = 3 * (i + 1);
        glue[a] = b;
        glue[b] = a;
    }
    // Polygon side p lives at: p=0 -> T_0 side 0; p in 1..=m-2 -> T_{p-1} side 1;
    // p=m-1 -> T_{m-3} side 2.
    let side_dart = |p: usize| -> DartId {
        if p == 0 {
            0
        } else if p <= m - 2 {
            3 * (p - 1) + 1
        } else {
            3 * (m - 3) + 2
        }
    };
    for j in 0..g {
        for off in 0..2 {
            let p = 4 * j + off;
            let q = 4 * j + off + 2;
            let (dp, dq) = (side_dart(p), side_dart(q));
            glue[dp] = dq;
            glue[dq] = dp;
        }
    }
    let tri = IdealTriangulation::from_gluing(glue)?;
    if tri.n_vertices() != 1 || tri.surface().genus != g {
        return Err(Error::BadTriangulation(format!(
            "fan construction produced {} instead of g{}n1",
            tri.surface(),
            g
        )));
    }
    Ok(tri)
}

/// Subdivides triangle `t` by a new interior puncture, replacing it with three
/// triangles. The new puncture is adjacent to all three old corners of `t`.
fn cone_triangle(tri: &IdealTriangulation, t: usize) -> Result<IdealTriangulation> {
    let n_old = tri.n_darts();
    // Old triangle t's darts keep their slots as the "outer" sides of the three
    // new triangles; but to keep dart indexing contiguous we rebuild: triangle t
    // is replaced in place by the first new triangle and two fresh triangles are
    // appended.
    //
    // New triangles (for old t = (X,Y,Z) with sides s0: X->Y, s1: Y->Z, s2: Z->X):
    //   u0 = (X, Y, P): sides (old s0, Y->P, P->X)
    //   u1 = (Y, Z, P): sides (old s1, Z->P, P->Y)
    //   u2 = (Z, X, P): sides (old s2, X->P, P->Z)
    let n_new = n_old + 6;
    let mut glue = vec![usize::MAX; n_new];
    let u = [t, n_old / 3, n_old / 3 + 1];
    // Map an old dart to its new location.
    let relocate = |d: DartId| -> DartId {
        if tri_of(d) == t {
            3 * u[d % 3]
        } else {
            d
        }
    };
    for d in 0..n_old {
        if tri_of(d) == t {
            continue;
        }
        glue[d] = relocate(tri.glue(d));
    }
    for k in 0..3 {
        let outer = 3 * u[k];
        let partner = relocate(tri.glue(3 * t + k));
        glue[outer] = partner;
        glue[partner] = outer;
        // Inner spokes: u_k side 1 (to P) glued to u_{k+1} side 2 (from P).
        let a = 3 * u[k] + 1;
        let b = 3 * u[(k + 1) % 3] + 2;
        glue[a] = b;
        glue[b] = a;
    }
    IdealTriangulation::from_gluing(glue)
}

/// Integer weights on the edges of a triangulation, subject to the matching
/// conditions: in every triangle the three side weights have even sum and
/// satisfy the triangle inequality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormalCoordinates {
    pub weights: Vec<usize>,
}

impl NormalCoordinates {
    pub fn new(tri: &IdealTriangulation, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != tri.n_edges() {
            return Err(Error::BadTrace(format!(
                "expected {} edge weights, got {}",
                tri.n_edges(),
                weights.len()
            )));
        }
        for t in 0..tri.n_triangles() {
            let w = [
                weights[tri.edge_of(3 * t)],
                weights[tri.edge_of(3 * t + 1)],
                weights[tri.edge_of(3 * t + 2)],
            ];
            let sum = w[0] + w[1] + w[2];
            if sum % 2 != 0 {
                return Err(Error::BadTrace(format!(
                    "matching parity fails in triangle {t}: weights {w:?}"
                )));
            }
            for k in 0..3 {
                if w[k] > w[(k + 1) % 3] + w[(k + 2) % 3] {
                    return Err(Error::BadTrace(format!(
                        "matching inequality fails in triangle {t}: weights {w:?}"
                    )));
                }
            }
        }
        Ok(NormalCoordinates { weights })
    }

    pub fn total(&self) -> usize {
        self.weights.iter().sum()
    }
}
