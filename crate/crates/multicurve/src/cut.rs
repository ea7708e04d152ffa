//! Cutting a surface along a multicurve: the region complex of the complement,
//! component types, relocation of disjoint curves, curve classification and
//! nice pairs.
//!
//! Cutting a curve gives rise to two punctures, one per side. Components are
//! computed by subdividing every triangle along the placed multicurve's chords
//! and gluing the resulting disk regions across edge segments; the Euler
//! characteristic of a component is its region count minus its gluing count.

use crate::curve::{intersection_number, Carrier, Curve, Multicurve};
use crate::error::{Error, Result};
use crate::overlay::{Germ, InitialOrder, Overlay, Placed};
use crate::surface::{SurfaceDecomposition, SurfaceType};
use crate::triangulation::{tri_of, DartId, VertexId};

/// Doubled circular coordinate inside a triangle: slot 0..6 (corners even,
/// side interiors odd), position doubled so segments get even values and
/// marks odd ones.
type DPos = (usize, usize);

#[derive(Clone, Debug)]
struct TriSub {
    /// Chord endpoint positions, sorted counterclockwise.
    marks: Vec<DPos>,
    /// Chords as pairs of mark indices, tagged with (object, strand).
    chords: Vec<(usize, usize, usize, usize)>,
    /// Local region of each interval (interval `i` starts at mark `i`).
    interval_region: Vec<usize>,
    n_regions: usize,
}

impl TriSub {
    fn interval_of(&self, p: DPos) -> usize {
        // The interval containing a non-mark position: the interval started by
        // the greatest mark <= p, cyclically.
        let m = self.marks.len();
        debug_assert!(m > 0);
        let mut best: Option<usize> = None;
        for (i, &mk) in self.marks.iter().enumerate() {
            if mk <= p {
                best = Some(i);
            }
        }
        best.unwrap_or(m - 1)
    }

    fn region_of(&self, p: DPos) -> usize {
        if self.marks.is_empty() {
            0
        } else {
            self.interval_region[self.interval_of(p)]
        }
    }
}

#[derive(Clone, Debug)]
pub struct CutComponent {
    /// Type on the carrier triangulation (the proxy for closed surfaces).
    pub proxy_surface: SurfaceType,
    /// Vertex classes of the carrier lying in this component.
    pub original_punctures: Vec<VertexId>,
    /// Sides of cut curves adjacent to this component: (curve index, side).
    pub curve_sides: Vec<(usize, u8)>,
    pub contains_marked: bool,
}

impl CutComponent {
    /// The component type on the underlying surface: for closed carriers the
    /// marked puncture is forgotten. Errors when the filled component is not
    /// hyperbolic (which signals proxy-isotopic input curves).
    pub fn surface_on_base(&self) -> Result<SurfaceType> {
        if self.contains_marked {
            SurfaceType::validated(
                self.proxy_surface.genus,
                self.proxy_surface.punctures - 1,
            )
        } else {
            Ok(self.proxy_surface)
        }
    }
}

pub struct CutSystem {
    pub components: Vec<CutComponent>,
    subs: Vec<TriSub>,
    /// Global region -> component index.
    region_comp: Vec<usize>,
    region_offset: Vec<usize>,
    /// Per edge: the cut germs in canonical-dart order.
    edge_cut_counts: Vec<usize>,
}

impl CutSystem {
    pub fn component_of_vertex(&self, carrier: &Carrier, v: VertexId) -> usize {
        let c = (0..carrier.tri.n_darts())
            .find(|&c| carrier.tri.vertex_of_corner(c) == v)
            .expect("vertex exists");
        let t = tri_of(c);
        let r = self.subs[t].region_of((2 * (c % 3), 0));
        self.region_comp[self.region_offset[t] + r]
    }

    pub fn decomposition(&self) -> Result<SurfaceDecomposition> {
        let mut types = Vec::with_capacity(self.components.len());
        for c in &self.components {
            types.push(c.surface_on_base()?);
        }
        Ok(SurfaceDecomposition::new(types))
    }
}

/// Builds the cut system for a set of pairwise disjoint curves and locates each
/// passenger curve (which must be disjoint from every cut curve) in a
/// component. Returns the system and the component index per passenger.
pub fn cut_system_with_passengers(
    carrier: &Carrier,
    cut: &[Curve],
    passengers: &[Curve],
) -> Result<(CutSystem, Vec<usize>)> {
    let tri = &carrier.tri;
    let n_cut = cut.len();
    let mut objs: Vec<Placed> = cut.iter().map(|c| c.placed()).collect();
    objs.extend(passengers.iter().map(|c| c.placed()));
    let ov = Overlay::new(tri, objs, InitialOrder::Taut)?;
    // Disjointness of cut curves from everything placed.
    for i in 0..n_cut {
        for j in 0..ov.objs.len() {
            if i != j && ov.count_crossings(i, j) != 0 {
                return Err(Error::NotDisjoint);
            }
        }
    }
    // Cut ranks per edge: number of cut germs before each position.
    let mut edge_cut_counts = vec![0usize; tri.n_edges()];
    for (e, order) in ov.edge_order.iter().enumerate() {
        edge_cut_counts[e] = order.iter().filter(|g| g.obj < n_cut).count();
    }
    let cut_rank_before = |g: Germ| -> usize {
        let (e, pos, _) = ov.germ_position(g);
        ov.edge_order[e][..pos]
            .iter()
            .filter(|x| x.obj < n_cut)
            .count()
    };
    // Doubled position of a cut germ seen from a side dart.
    let mark_pos = |g: Germ, side: DartId| -> DPos {
        let p = ov.germ_circle_pos(g, side);
        // p.rank counts all objects; recompute against cut-only ranks.
        let (e, pos, _len) = ov.germ_position(g);
        let m = edge_cut_counts[e];
        let before = ov.edge_order[e][..pos]
            .iter()
            .filter(|x| x.obj < n_cut)
            .count();
        let along = if side == tri.edge_darts(e)[0] {
            before
        } else {
            m - 1 - before
        };
        (p.slot, 2 * along + 1)
    };
    // Build per-triangle subdivisions from cut chords.
    let mut subs: Vec<TriSub> = Vec::with_capacity(tri.n_triangles());
    let mut chords_by_tri: Vec<Vec<(DPos, DPos, usize, usize)>> =
        vec![Vec::new(); tri.n_triangles()];
    for o in 0..n_cut {
        let m = ov.objs[o].darts.len();
        for s in 0..m {
            let prev = (s + m - 1) % m;
            let entry_side = tri.glue(ov.objs[o].darts[prev]);
            let exit_side = ov.objs[o].darts[s];
            let t = tri_of(exit_side);
            let entry = mark_pos(Germ { obj: o, k: prev }, entry_side);
            let exit = mark_pos(Germ { obj: o, k: s }, exit_side);
            chords_by_tri[t].push((entry, exit, o, s));
        }
    }
    for t in 0..tri.n_triangles() {
        let mut marks: Vec<DPos> = Vec::new();
        for &(a, b, _, _) in &chords_by_tri[t] {
            marks.push(a);
            marks.push(b);
        }
        marks.sort();
        marks.dedup();
        let idx = |p: DPos| marks.binary_search(&p).expect("mark present");
        let chords: Vec<(usize, usize, usize, usize)> = chords_by_tri[t]
            .iter()
            .map(|&(a, b, o, s)| (idx(a), idx(b), o, s))
            .collect();
        // Region assignment by a parenthesis sweep: the chords are pairwise
        // non-crossing, so scanning the circle from a base point before the
        // first mark, each chord opens at its earlier endpoint and closes at
        // the later one, and the interval after each mark takes the region on
        // top of the stack.
        let n_int = marks.len().max(1);
        let mut region = vec![usize::MAX; n_int];
        let mut n_regions;
        if marks.is_empty() {
            region = vec![0];
            n_regions = 1;
        } else {
            let mut partner = vec![usize::MAX; marks.len()];
            for &(p, q, _, _) in &chords {
                partner[p] = q;
                partner[q] = p;
            }
            let mut stack: Vec<usize> = vec![0];
            n_regions = 1;
            for (i, &j) in partner.iter().enumerate() {
                if j > i {
                    let r = n_regions;
                    n_regions += 1;
                    stack.push(r);
                } else {
                    if stack.len() < 2 {
                        return Err(Error::BadMulticurve(
                            "chords cross in a triangle subdivision".into(),
                        ));
                    }
                    stack.pop();
                }
                region[i] = *stack.last().unwrap();
            }
            if stack.len() != 1 || n_regions != chords.len() + 1 {
                return Err(Error::BadMulticurve(
                    "region count mismatch in triangle subdivision".into(),
                ));
            }
        }
        subs.push(TriSub { marks, chords, interval_region: region, n_regions });
    }
    // Global regions and union-find across edge segments.
    let mut region_offset = vec![0usize; tri.n_triangles()];
    let mut total = 0;
    for t in 0..tri.n_triangles() {
        region_offset[t] = total;
        total += subs[t].n_regions;
    }
    let mut uf = UnionFind::new(total);
    let mut gluings = 0usize;
    for e in 0..tri.n_edges() {
        let [d0, d1] = tri.edge_darts(e);
        let (t0, t1) = (tri_of(d0), tri_of(d1));
        let m = edge_cut_counts[e];
        for r in 0..=m {
            // Segment r in canonical direction: along-d0 coordinate 2r, along-d1
            // coordinate 2(m - r).
            let p0 = (2 * (d0 % 3) + 1, 2 * r);
            let p1 = (2 * (d1 % 3) + 1, 2 * (m - r));
            let r0 = region_offset[t0] + subs[t0].region_of(p0);
            let r1 = region_offset[t1] + subs[t1].region_of(p1);
            uf.union(r0, r1);
            gluings += 1;
        }
    }
    let _ = gluings;
    // Components.
    let mut comp_of_root: std::collections::BTreeMap<usize, usize> = Default::default();
    let mut region_comp = vec![0usize; total];
    for r in 0..total {
        let root = uf.find(r);
        let next = comp_of_root.len();
        let id = *comp_of_root.entry(root).or_insert(next);
        region_comp[r] = id;
    }
    let n_comp = comp_of_root.len();
    // Euler characteristic: regions minus gluings per component.
    let mut chi = vec![0i64; n_comp];
    for r in 0..total {
        chi[region_comp[r]] += 1;
    }
    for e in 0..tri.n_edges() {
        let [d0, _] = tri.edge_darts(e);
        let t0 = tri_of(d0);
        let m = edge_cut_counts[e];
        for r in 0..=m {
            let p0 = (2 * (d0 % 3) + 1, 2 * r);
            let g0 = region_offset[t0] + subs[t0].region_of(p0);
            chi[region_comp[g0]] -= 1;
        }
    }
    // Original punctures per component.
    let mut punct_of_comp: Vec<Vec<VertexId>> = vec![Vec::new(); n_comp];
    for v in 0..tri.n_vertices() {
        let mut comps: Vec<usize> = (0..tri.n_darts())
            .filter(|&c| tri.vertex_of_corner(c) == v)
            .map(|c| {
                let t = tri_of(c);
                region_comp[region_offset[t] + subs[t].region_of((2 * (c % 3), 0))]
            })
            .collect();
        comps.dedup();
        if comps.len() != 1 {
            return Err(Error::BadMulticurve(
                "puncture corners split across components".into(),
            ));
        }
        punct_of_comp[comps[0]].push(v);
    }
    // Curve sides: left/right regions along each cut curve.
    let mut curve_sides: Vec<Vec<(usize, u8)>> = vec![Vec::new(); n_comp];
    for o in 0..n_cut {
        let mut left_comps: Vec<usize> = Vec::new();
        let mut right_comps: Vec<usize> = Vec::new();
        for t in 0..tri.n_triangles() {
            for &(pi, qi, oo, _s) in &subs[t].chords {
                if oo != o {
                    continue;
                }
                let m = subs[t].marks.len();
                let before = |i: usize| (i + m - 1) % m;
                // Left of the directed chord entry->exit: the interval ending at
                // the entry mark and the interval starting at the exit mark.
                let l1 = subs[t].interval_region[before(pi)];
                let l2 = subs[t].interval_region[qi];
                let r1 = subs[t].interval_region[pi];
                let r2 = subs[t].interval_region[before(qi)];
                left_comps.push(region_comp[region_offset[t] + l1]);
                left_comps.push(region_comp[region_offset[t] + l2]);
                right_comps.push(region_comp[region_offset[t] + r1]);
                right_comps.push(region_comp[region_offset[t] + r2]);
            }
        }
        left_comps.sort();
        left_comps.dedup();
        right_comps.sort();
        right_comps.dedup();
        if left_comps.len() != 1 || right_comps.len() != 1 {
            return Err(Error::BadMulticurve(
                "curve side touches multiple components".into(),
            ));
        }
        curve_sides[left_comps[0]].push((o, 0));
        curve_sides[right_comps[0]].push((o, 1));
    }
    // Assemble component types.
    let marked_comp = carrier
        .marked
        .map(|v| {
            let c = (0..tri.n_darts())
                .find(|&c| tri.vertex_of_corner(c) == v)
                .unwrap();
            let t = tri_of(c);
            region_comp[region_offset[t] + subs[t].region_of((2 * (c % 3), 0))]
        });
    let mut components = Vec::with_capacity(n_comp);
    for i in 0..n_comp {
        let n = punct_of_comp[i].len() + curve_sides[i].len();
        let chi_i = chi[i];
        let g2 = 2 - n as i64 - chi_i;
        if g2 < 0 || g2 % 2 != 0 {
            return Err(Error::BadMulticurve(format!(
                "component with chi {chi_i} and {n} punctures is not orientable-consistent"
            )));
        }
        let proxy_surface = SurfaceType::new((g2 / 2) as usize, n);
        if proxy_surface.euler_characteristic() >= 0 {
            return Err(Error::BadMulticurve(format!(
                "cut produced a non-hyperbolic component {proxy_surface}"
            )));
        }
        components.push(CutComponent {
            proxy_surface,
            original_punctures: punct_of_comp[i].clone(),
            curve_sides: curve_sides[i].clone(),
            contains_marked: marked_comp == Some(i),
        });
    }
    let system = CutSystem {
        components,
        subs,
        region_comp,
        region_offset,
        edge_cut_counts,
    };
    // Locate passengers by their first strand's exit point.
    let mut locations = Vec::with_capacity(passengers.len());
    for (pi, _) in passengers.iter().enumerate() {
        let o = n_cut + pi;
        let d0 = ov.objs[o].darts[0];
        let t = tri_of(d0);
        let r = cut_rank_before(Germ { obj: o, k: 0 });
        let e = tri.edge_of(d0);
        let m = system.edge_cut_counts[e];
        let along = if d0 == tri.edge_darts(e)[0] { r } else { m - r };
        let p = (2 * (d0 % 3) + 1, 2 * along);
        let reg = system.region_offset[t] + system.subs[t].region_of(p);
        locations.push(system.region_comp[reg]);
    }
    Ok((system, locations))
}

impl CutSystem {
    /// Breadth-first dart path between two local regions of the complement,
    /// crossing no cut curve.
    fn region_path(
        &self,
        carrier: &Carrier,
        from: usize,
        to: usize,
    ) -> Option<Vec<crate::triangulation::DartId>> {
        let tri = &carrier.tri;
        let n_regions = self.region_comp.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n_regions];
        let mut visited = vec![false; n_regions];
        let mut queue = std::collections::VecDeque::new();
        visited[from] = true;
        queue.push_back(from);
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_regions];
        for e in 0..tri.n_edges() {
            let [d0, d1] = tri.edge_darts(e);
            let (t0, t1) = (tri_of(d0), tri_of(d1));
            let m = self.edge_cut_counts[e];
            for r in 0..=m {
                let g0 = self.region_offset[t0] + self.subs[t0].region_of((2 * (d0 % 3) + 1, 2 * r));
                let g1 = self.region_offset[t1] + self.subs[t1].region_of((2 * (d1 % 3) + 1, 2 * (m - r)));
                adj[g0].push((g1, d0));
                adj[g1].push((g0, d1));
            }
        }
        while let Some(r) = queue.pop_front() {
            if r == to {
                let mut darts = Vec::new();
                let mut cur = r;
                while let Some((p, d)) = prev[cur] {
                    darts.push(d);
                    cur = p;
                }
                darts.reverse();
                return Some(darts);
            }
            for &(nxt, dart) in &adj[r] {
                if !visited[nxt] {
                    visited[nxt] = true;
                    prev[nxt] = Some((r, dart));
                    queue.push_back(nxt);
                }
            }
        }
        None
    }

    /// Gate data of a cut curve: a strand of it together with the local
    /// regions on its two sides, all within one triangle.
    fn gates_of(&self, obj: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (t, sub) in self.subs.iter().enumerate() {
            let m = sub.marks.len();
            for &(pi, qi, oo, _s) in &sub.chords {
                if oo != obj {
                    continue;
                }
                let before = |i: usize| (i + m - 1) % m;
                let left = self.region_offset[t] + sub.interval_region[before(pi)];
                let right = self.region_offset[t] + sub.interval_region[pi];
                out.push((left, right));
            }
        }
        out
    }

    /// Closed traces crossing each listed cut curve exactly once, in order,
    /// traveling through complement regions between the crossings. Several
    /// gate choices are tried; outputs are raw walks for curve validation.
    pub fn closed_traces_crossing(
        &self,
        carrier: &Carrier,
        route: &[usize],
        max_outputs: usize,
    ) -> Vec<Vec<crate::triangulation::DartId>> {
        let mut out = Vec::new();
        let gate_lists: Vec<Vec<(usize, usize)>> =
            route.iter().map(|&o| self.gates_of(o)).collect();
        if gate_lists.iter().any(|g| g.is_empty()) {
            return out;
        }
        let per = 2usize;
        let mut choices: Vec<usize> = vec![0; route.len()];
        loop {
            // Assemble the cyclic legs for this gate choice.
            let gates: Vec<(usize, usize)> = (0..route.len())
                .map(|i| gate_lists[i][choices[i]])
                .collect();
            let mut word: Vec<crate::triangulation::DartId> = Vec::new();
            let mut ok = true;
            for i in 0..gates.len() {
                let from = gates[i].1;
                let to = gates[(i + 1) % gates.len()].0;
                match self.region_path(carrier, from, to) {
                    Some(darts) => word.extend(darts),
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok && !word.is_empty() && out.len() < max_outputs {
                out.push(word);
            }
            // Advance the product of gate choices, bounded per curve.
            let mut carry = true;
            for i in 0..choices.len() {
                if carry {
                    choices[i] += 1;
                    if choices[i] >= gate_lists[i].len().min(per) {
                        choices[i] = 0;
                    } else {
                        carry = false;
                    }
                }
            }
            if carry || out.len() >= max_outputs {
                break;
            }
        }
        out
    }

    /// An embedded arc between punctures `p` and `q` running inside component
    /// `comp`, found by breadth-first search through the region complex.
    pub fn arc_between(
        &self,
        carrier: &Carrier,
        comp: usize,
        p: VertexId,
        q: VertexId,
    ) -> Result<crate::trace::ArcWord> {
        let tri = &carrier.tri;
        let global = |t: usize, pos: DPos| -> usize {
            self.region_offset[t] + self.subs[t].region_of(pos)
        };
        let corner_region = |c: usize| -> usize { global(tri_of(c), (2 * (c % 3), 0)) };
        // Start corners at p inside the component.
        let starts: Vec<usize> = (0..tri.n_darts())
            .filter(|&c| tri.vertex_of_corner(c) == p && self.region_comp[corner_region(c)] == comp)
            .collect();
        if starts.is_empty() {
            return Err(Error::SearchFailed(format!(
                "puncture {p} has no corner in component {comp}"
            )));
        }
        // BFS over global regions, recording the crossing dart per step.
        let n_regions = self.region_comp.len();
        let mut prev: Vec<Option<(usize, usize)>> = vec![None; n_regions]; // (region, dart crossed)
        let mut visited = vec![false; n_regions];
        let mut queue = std::collections::VecDeque::new();
        for &c in &starts {
            let r = corner_region(c);
            if !visited[r] {
                visited[r] = true;
                queue.push_back(r);
            }
        }
        // Precompute region adjacency with crossing darts.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n_regions]; // (neighbor, dart)
        for e in 0..tri.n_edges() {
            let [d0, d1] = tri.edge_darts(e);
            let (t0, t1) = (tri_of(d0), tri_of(d1));
            let m = self.edge_cut_counts[e];
            for r in 0..=m {
                let g0 = global(t0, (2 * (d0 % 3) + 1, 2 * r));
                let g1 = global(t1, (2 * (d1 % 3) + 1, 2 * (m - r)));
                adj[g0].push((g1, d0));
                adj[g1].push((g0, d1));
            }
        }
        let mut goal: Option<(usize, usize)> = None; // (region, end corner)
        'bfs: while let Some(r) = queue.pop_front() {
            // Does this region contain a corner at q?
            for c in 0..tri.n_darts() {
                if tri.vertex_of_corner(c) == q && corner_region(c) == r {
                    goal = Some((r, c));
                    break 'bfs;
                }
            }
            for &(to, dart) in &adj[r] {
                if !visited[to] && self.region_comp[to] == comp {
                    visited[to] = true;
                    prev[to] = Some((r, dart));
                    queue.push_back(to);
                }
            }
        }
        let Some((mut r, end_corner)) = goal else {
            return Err(Error::SearchFailed(format!(
                "no arc from {p} to {q} inside component {comp}"
            )));
        };
        let mut darts_rev = Vec::new();
        while let Some((from, dart)) = prev[r] {
            darts_rev.push(dart);
            r = from;
        }
        // r is now a start region; pick its p-corner.
        let start_corner = (0..tri.n_darts())
            .find(|&c| tri.vertex_of_corner(c) == p && corner_region(c) == r)
            .expect("start region has a p-corner");
        darts_rev.reverse();
        Ok(crate::trace::ArcWord {
            start_corner,
            darts: darts_rev,
            end_corner,
        })
    }
}

/// The arc associated to an outer curve cutting off a pair of pants with two
/// original punctures: an embedded arc joining those punctures inside the
/// pants. Its neighborhood boundary is the outer curve again.
pub fn arc_for_outer_curve(carrier: &Carrier, outer: &Curve) -> Result<crate::curve::Arc> {
    let sys = cut_system(carrier, std::slice::from_ref(outer))?;
    for (i, comp) in sys.components.iter().enumerate() {
        if !comp.surface_on_base()?.is_pair_of_pants() {
            continue;
        }
        let mut punct = comp.original_punctures.clone();
        if let Some(m) = carrier.marked {
            punct.retain(|&v| v != m);
        }
        if punct.len() == 2 {
            let word = sys.arc_between(carrier, i, punct[0], punct[1])?;
            let arc = crate::curve::Arc::from_word(carrier, word)?;
            // The double must recover the outer curve.
            let double = crate::curve::outer_curve_of_arc(carrier, &arc)?;
            if crate::curve::is_isotopic(carrier, &double, outer)? {
                return Ok(arc);
            } else {
                return Err(Error::VerificationFailed(
                    "arc double does not match the outer curve".into(),
                ));
            }
        }
    }
    Err(Error::Precondition(
        "curve does not cut off a pair of pants with two punctures".into(),
    ))
}

pub fn cut_system(carrier: &Carrier, cut: &[Curve]) -> Result<CutSystem> {
    cut_system_with_passengers(carrier, cut, &[]).map(|(s, _)| s)
}

/// Cuts along a multicurve; also relocates each query curve to its component.
/// Errors with [`Error::NotDisjoint`] when a query meets the multicurve.
pub fn cut_along(
    carrier: &Carrier,
    mu: &Multicurve,
    queries: &[Curve],
) -> Result<(SurfaceDecomposition, CutSystem, Vec<usize>)> {
    for q in queries {
        for c in mu.curves() {
            if intersection_number(carrier, q, c)? != 0 {
                return Err(Error::NotDisjoint);
            }
        }
    }
    let (sys, locs) = cut_system_with_passengers(carrier, mu.curves(), queries)?;
    let dec = sys.decomposition()?;
    Ok((dec, sys, locs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CurveClass {
    Nonseparating,
    Outer,
    OtherSeparating,
}

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CurveClassification {
    pub class: CurveClass,
    pub is_nonseparating: bool,
    pub is_outer: bool,
}

/// Classifies an essential curve by its complement: nonseparating when the
/// complement is connected, outer when some complement component is a pair of
/// pants. The two predicates can hold simultaneously; the enum prefers
/// Nonseparating. Memoized per surface and canonical trace.
pub fn classify_curve(carrier: &Carrier, a: &Curve) -> Result<CurveClassification> {
    use std::sync::{Mutex, OnceLock};
    type Key = (SurfaceType, Vec<crate::triangulation::DartId>);
    static CACHE: OnceLock<Mutex<std::collections::HashMap<Key, CurveClassification>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Default::default()));
    let key = (carrier.surface, a.trace().to_vec());
    if let Some(c) = cache.lock().unwrap().get(&key) {
        return Ok(c.clone());
    }
    let out = classify_curve_uncached(carrier, a)?;
    cache.lock().unwrap().insert(key, out.clone());
    Ok(out)
}

fn classify_curve_uncached(carrier: &Carrier, a: &Curve) -> Result<CurveClassification> {
    let sys = cut_system(carrier, std::slice::from_ref(a))?;
    let is_nonseparating = sys.components.len() == 1;
    let mut is_outer = false;
    for c in &sys.components {
        if c.surface_on_base()?.is_pair_of_pants() {
            is_outer = true;
        }
    }
    let class = if is_nonseparating {
        CurveClass::Nonseparating
    } else if is_outer {
        CurveClass::Outer
    } else {
        CurveClass::OtherSeparating
    };
    Ok(CurveClassification { class, is_nonseparating, is_outer })
}

/// Nice-pair test: two disjoint, non-isotopic curves, each nonseparating or
/// outer, whose joint complement has exactly one positive-complexity
/// component. Precondition violations are reported as distinct errors.
pub fn is_nice_pair(carrier: &Carrier, a: &Curve, b: &Curve) -> Result<bool> {
    let ca = classify_curve(carrier, a)?;
    let cb = classify_curve(carrier, b)?;
    if !(ca.is_nonseparating || ca.is_outer) || !(cb.is_nonseparating || cb.is_outer) {
        return Err(Error::NicePairPrecondition(
            "curves must be nonseparating or outer".into(),
        ));
    }
    if crate::curve::is_isotopic(carrier, a, b)? {
        return Err(Error::NicePairPrecondition("curves are isotopic".into()));
    }
    if intersection_number(carrier, a, b)? != 0 {
        return Err(Error::NicePairPrecondition("curves are not disjoint".into()));
    }
    let sys = cut_system(carrier, &[a.clone(), b.clone()])?;
    let mut positives = Vec::new();
    for c in &sys.components {
        let s = c.surface_on_base()?;
        if !s.is_pair_of_pants() {
            positives.push(s);
        }
    }
    if positives.len() == 1 {
        // Consequence of the definition: the unique positive component has
        // complexity two less than the surface.
        let xi = carrier.surface.complexity()?;
        let got = positives[0].complexity()?;
        if got + 2 != xi {
            return Err(Error::VerificationFailed(format!(
                "nice pair complexity bookkeeping: expected {}, got {got}",
                xi - 2
            )));
        }
        Ok(true)
    } else {
        Ok(false)
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{edge_link, edge_pushoff};

    fn carrier(g: usize, n: usize) -> Carrier {
        Carrier::new(SurfaceType::new(g, n)).unwrap()
    }

    fn chain_edges(c: &Carrier) -> Vec<usize> {
        let n = c.tri.n_vertices();
        (0..n.saturating_sub(1))
            .map(|p| {
                (0..c.tri.n_edges())
                    .find(|&e| {
                        let [d, _] = c.tri.edge_darts(e);
                        let (a, b) = (c.tri.start_vertex(d), c.tri.end_vertex(d));
                        (a == p && b == p + 1) || (a == p + 1 && b == p)
                    })
                    .unwrap()
            })
            .collect()
    }

    #[test]
    fn cutting_torus_curve_gives_pants() {
        let c = carrier(1, 1);
        let h = Curve::from_trace(&c, vec![3, 1]).unwrap();
        let m = Multicurve::new(&c, vec![h]).unwrap();
        let (dec, sys, _) = cut_along(&c, &m, &[]).unwrap();
        assert_eq!(dec.components, vec![SurfaceType::new(0, 3)]);
        assert_eq!(sys.components.len(), 1);
        let cls = classify_curve(&c, &m.curves()[0]).unwrap();
        assert_eq!(cls.class, CurveClass::Nonseparating);
        assert!(cls.is_nonseparating && cls.is_outer);
    }

    #[test]
    fn cutting_outer_curve_on_six_punctures() {
        let c = carrier(0, 6);
        let chain = chain_edges(&c);
        let around01 = edge_link(&c, chain[0]).unwrap();
        let m = Multicurve::new(&c, vec![around01.clone()]).unwrap();
        let (dec, _, _) = cut_along(&c, &m, &[]).unwrap();
        assert_eq!(
            dec.components,
            vec![SurfaceType::new(0, 3), SurfaceType::new(0, 5)]
        );
        let cls = classify_curve(&c, &around01).unwrap();
        assert_eq!(cls.class, CurveClass::Outer);
        assert!(!cls.is_nonseparating);
        // chi and puncture conservation
        assert_eq!(dec.euler_characteristic(), c.surface.euler_characteristic());
        assert_eq!(dec.total_punctures(), c.surface.punctures + 2);
    }

    #[test]
    fn every_essential_curve_on_five_punctures_is_outer() {
        let c = carrier(0, 5);
        let chain = chain_edges(&c);
        for &e in &chain {
            let curve = edge_link(&c, e).unwrap();
            let cls = classify_curve(&c, &curve).unwrap();
            assert_eq!(cls.class, CurveClass::Outer);
        }
    }

    #[test]
    fn genus_two_pushoff_is_nonseparating() {
        let c = carrier(2, 1);
        // Loop edges exist since the fan has one puncture.
        let mut found = 0;
        for e in 0..c.tri.n_edges() {
            let [d, _] = c.tri.edge_darts(e);
            if c.tri.start_vertex(d) == c.tri.end_vertex(d) {
                if let Ok(p) = edge_pushoff(&c, e) {
                    let cls = classify_curve(&c, &p).unwrap();
                    if cls.is_nonseparating {
                        found += 1;
                        let m = Multicurve::new(&c, vec![p]).unwrap();
                        let (dec, _, _) = cut_along(&c, &m, &[]).unwrap();
                        assert_eq!(dec.components.len(), 1);
                        assert_eq!(
                            dec.euler_characteristic(),
                            c.surface.euler_characteristic()
                        );
                    }
                }
            }
        }
        assert!(found > 0);
    }

    #[test]
    fn closed_genus_two_cut_forgets_marked_point() {
        let c = carrier(2, 0);
        let mut nonsep = None;
        for e in 0..c.tri.n_edges() {
            if let Ok(p) = edge_pushoff(&c, e) {
                if classify_curve(&c, &p).unwrap().is_nonseparating {
                    nonsep = Some(p);
                    break;
                }
            }
        }
        let p = nonsep.expect("nonseparating curve on g2");
        let m = Multicurve::new(&c, vec![p]).unwrap();
        let (dec, _, _) = cut_along(&c, &m, &[]).unwrap();
        assert_eq!(dec.components, vec![SurfaceType::new(1, 2)]);
    }

    #[test]
    fn nice_pair_on_six_punctures() {
        let c = carrier(0, 6);
        let chain = chain_edges(&c);
        let a = edge_link(&c, chain[0]).unwrap(); // around {0,1}
        let b = edge_link(&c, chain[4]).unwrap(); // around {4,5}
        assert!(is_nice_pair(&c, &a, &b).unwrap());
        let mid = edge_link(&c, chain[2]).unwrap(); // around {2,3}
        // a and mid: complement components pants + pants + four-punctured
        // sphere: still exactly one positive component.
        assert!(is_nice_pair(&c, &a, &mid).unwrap());
    }

    #[test]
    fn nice_pair_rejects_intersecting_input() {
        let c = carrier(0, 6);
        let chain = chain_edges(&c);
        let a = edge_link(&c, chain[0]).unwrap();
        let b = edge_link(&c, chain[1]).unwrap();
        assert!(matches!(
            is_nice_pair(&c, &a, &b),
            Err(Error::NicePairPrecondition(_))
        ));
    }

    #[test]
    fn relocation_places_disjoint_curves() {
        let c = carrier(0, 6);
        let chain = chain_edges(&c);
        let a = edge_link(&c, chain[0]).unwrap(); // around {0,1}
        let b = edge_link(&c, chain[4]).unwrap(); // around {4,5}
        let m = Multicurve::new(&c, vec![a.clone()]).unwrap();
        let (dec, sys, locs) = cut_along(&c, &m, &[b.clone()]).unwrap();
        assert_eq!(dec.components.len(), 2);
        // b lives in the big component.
        let comp = &sys.components[locs[0]];
        assert_eq!(comp.surface_on_base().unwrap(), SurfaceType::new(0, 5));
    }
}
