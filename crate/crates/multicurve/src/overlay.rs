//! Positioning engine for taut traces: given reduced curves and arcs on one
//! triangulation, realize them simultaneously, count crossings, and certify
//! minimal position via the bigon criterion.
//!
//! Each object is placed with every strand a corner arc. The order of crossing
//! points along an edge is computed by itinerary comparison: follow two germs
//! forward (or backward) until their dart itineraries diverge; the divergence
//! triangle forces the order. This is the taut order, so each object is
//! embedded and the pair is usually already in minimal position; an explicit
//! empty-bigon search then certifies minimality, and removal repairs any
//! non-minimal start (used by the brute-force oracle path).

use crate::error::{Error, Result};
use crate::trace::reduce_closed;
use crate::triangulation::{next_dart, tri_of, CornerId, DartId, EdgeId, IdealTriangulation};
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjKind {
    Closed,
    Arc { start_corner: CornerId, end_corner: CornerId },
}

/// A reduced trace to be placed.
#[derive(Clone, Debug)]
pub struct Placed {
    pub kind: ObjKind,
    pub darts: Vec<DartId>,
}

impl Placed {
    pub fn closed(darts: Vec<DartId>) -> Self {
        Placed { kind: ObjKind::Closed, darts }
    }

    pub fn arc(start_corner: CornerId, darts: Vec<DartId>, end_corner: CornerId) -> Self {
        Placed { kind: ObjKind::Arc { start_corner, end_corner }, darts }
    }

    fn n_strands(&self) -> usize {
        match self.kind {
            ObjKind::Closed => self.darts.len(),
            ObjKind::Arc { .. } => self.darts.len() + 1,
        }
    }
}

/// A crossing point of an object over an edge: the `k`-th dart of object `obj`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Germ {
    pub obj: usize,
    pub k: usize,
}

/// Position on the boundary circle of a triangle: corners at even slots, side
/// interiors at odd slots, ranks counted along the side dart direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CirclePos {
    pub slot: usize,
    pub rank: usize,
}

#[derive(Clone, Debug)]
struct Strand {
    idx: usize,
    tri: usize,
    entry: CirclePos,
    exit: CirclePos,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Crossing {
    /// Strand indices within each object's strand list.
    pub strand: [usize; 2],
    /// Order keys along each strand (relative; smaller is closer to entry).
    key: [usize; 2],
}

pub struct Overlay<'t> {
    pub tri: &'t IdealTriangulation,
    pub objs: Vec<Placed>,
    /// Germs per edge, ordered along the canonical dart of the edge.
    pub edge_order: Vec<Vec<Germ>>,
    strands: Vec<Vec<Strand>>,
    /// Crossings between objects 0 and 1 (self-crossings are checked separately
    /// and must be zero).
    crossings: Vec<Crossing>,
    /// Crossing indices in order along each of the two objects.
    seq: [Vec<usize>; 2],
}

/// How to interleave distinct objects along edges at construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InitialOrder {
    /// Itinerary comparison across objects: the taut order.
    Taut,
    /// Each object internally taut, objects interleaved by fractional rank;
    /// generally not minimal, for the oracle reduction path.
    BlockFraction,
}

impl<'t> Overlay<'t> {
    /// Places any number of objects; the crossing-sequence and bigon machinery
    /// requires exactly two. Every dart word must be reduced and walk-valid.
    pub fn new(
        tri: &'t IdealTriangulation,
        objs: Vec<Placed>,
        order: InitialOrder,
    ) -> Result<Overlay<'t>> {
        assert!(!objs.is_empty());
        let mut ov = Overlay {
            tri,
            objs,
            edge_order: vec![Vec::new(); tri.n_edges()],
            strands: Vec::new(),
            crossings: Vec::new(),
            seq: [Vec::new(), Vec::new()],
        };
        ov.build_edge_orders(order);
        ov.rebuild()?;
        Ok(ov)
    }

    fn build_edge_orders(&mut self, order: InitialOrder) {
        let mut per_edge: Vec<Vec<Germ>> = vec![Vec::new(); self.tri.n_edges()];
        for (o, p) in self.objs.iter().enumerate() {
            for (k, &d) in p.darts.iter().enumerate() {
                per_edge[self.tri.edge_of(d)].push(Germ { obj: o, k });
            }
        }
        for (e, germs) in per_edge.iter_mut().enumerate() {
            match order {
                InitialOrder::Taut => {
                    germs.sort_by(|&a, &b| self.compare_germs(e, a, b));
                }
                InitialOrder::BlockFraction => {
                    let mut blocks: Vec<Vec<Germ>> = vec![Vec::new(); self.objs.len()];
                    for &g in germs.iter() {
                        blocks[g.obj].push(g);
                    }
                    for block in blocks.iter_mut() {
                        block.sort_by(|&a, &b| self.compare_germs(e, a, b));
                    }
                    let mut merged: Vec<(f64, Germ)> = Vec::new();
                    for block in blocks {
                        let w = block.len() as f64;
                        for (i, g) in block.into_iter().enumerate() {
                            merged.push(((i as f64 + 0.5) / w, g));
                        }
                    }
                    merged.sort_by(|a, b| {
                        a.0.partial_cmp(&b.0)
                            .unwrap()
                            .then(a.1.obj.cmp(&b.1.obj))
                            .then(a.1.k.cmp(&b.1.k))
                    });
                    *germs = merged.into_iter().map(|(_, g)| g).collect();
                }
            }
        }
        self.edge_order = per_edge;
    }

    /// Orders two crossing germs of edge `e` along the canonical dart of `e`
    /// by itinerary divergence.
    fn compare_germs(&self, e: EdgeId, a: Germ, b: Germ) -> Ordering {
        if a == b {
            return Ordering::Equal;
        }
        let dstar = self.tri.edge_darts(e)[0];
        let cap = self.objs[a.obj].darts.len() + self.objs[b.obj].darts.len() + 4;
        // Forward walk: both germs cross via dstar into tri(glue(dstar)).
        let mut ia = ItinerWalk::new(self.tri, &self.objs[a.obj], a.k, dstar, true);
        let mut ib = ItinerWalk::new(self.tri, &self.objs[b.obj], b.k, dstar, true);
        let mut side = self.tri.glue(dstar);
        for _ in 0..cap {
            let ta = ia.next_token();
            let tb = ib.next_token();
            let ra = token_rank(self.tri, side, ta);
            let rb = token_rank(self.tri, side, tb);
            match ra.cmp(&rb) {
                // Forward decisions reverse: larger token rank is closer to the
                // start of dstar.
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match ta {
                    Token::End(_) => break, // both end at the same corner
                    Token::Dart(d) => side = self.tri.glue(d),
                },
            }
        }
        // Backward walk from the crossing, entering tri(dstar) via dstar.
        let mut ia = ItinerWalk::new(self.tri, &self.objs[a.obj], a.k, dstar, false);
        let mut ib = ItinerWalk::new(self.tri, &self.objs[b.obj], b.k, dstar, false);
        let mut side = dstar;
        for _ in 0..cap {
            let ta = ia.next_token();
            let tb = ib.next_token();
            let ra = token_rank(self.tri, side, ta);
            let rb = token_rank(self.tri, side, tb);
            match ra.cmp(&rb) {
                Ordering::Less => return Ordering::Less,
                Ordering::Greater => return Ordering::Greater,
                Ordering::Equal => match ta {
                    Token::End(_) => return Ordering::Equal,
                    Token::Dart(d) => side = self.tri.glue(d),
                },
            }
        }
        Ordering::Equal
    }

    fn rank_along(&self, germ_pos: usize, len: usize, side_dart: DartId) -> usize {
        let e = self.tri.edge_of(side_dart);
        if side_dart == self.tri.edge_darts(e)[0] {
            germ_pos
        } else {
            len - 1 - germ_pos
        }
    }

    pub fn germ_position(&self, g: Germ) -> (EdgeId, usize, usize) {
        let d = self.objs[g.obj].darts[g.k];
        let e = self.tri.edge_of(d);
        let pos = self.edge_order[e]
            .iter()
            .position(|&x| x == g)
            .expect("germ present");
        (e, pos, self.edge_order[e].len())
    }

    pub fn germ_circle_pos(&self, g: Germ, side_dart: DartId) -> CirclePos {
        let (_, pos, len) = self.germ_position(g);
        CirclePos {
            slot: 2 * (side_dart % 3) + 1,
            rank: self.rank_along(pos, len, side_dart),
        }
    }

    /// Recomputes strands, crossings and crossing sequences from the current
    /// edge orders.
    fn rebuild(&mut self) -> Result<()> {
        self.strands = Vec::with_capacity(self.objs.len());
        for o in 0..self.objs.len() {
            self.strands.push(self.build_strands(o)?);
        }
        // Self-crossing check certifies each object is realized embedded.
        for o in 0..self.objs.len() {
            let n = self.count_crossings(o, o);
            if n != 0 {
                return Err(Error::BadTrace(format!(
                    "trace is not realizable as an embedded object ({n} self-crossings)"
                )));
            }
        }
        if self.objs.len() == 2 {
            self.collect_crossings()?;
        } else {
            self.crossings.clear();
            self.seq = [Vec::new(), Vec::new()];
        }
        Ok(())
    }

    fn build_strands(&self, o: usize) -> Result<Vec<Strand>> {
        let p = &self.objs[o];
        let m = p.darts.len();
        let mut out = Vec::with_capacity(p.n_strands());
        let corner_pos = |c: CornerId| CirclePos { slot: 2 * (c % 3), rank: 0 };
        let germ_end = |g: Germ, side: DartId| self.germ_circle_pos(g, side);
        match p.kind {
            ObjKind::Closed => {
                if m == 0 {
                    return Err(Error::BadTrace("empty closed trace".into()));
                }
                for s in 0..m {
                    let prev = (s + m - 1) % m;
                    let entry_side = self.tri.glue(p.darts[prev]);
                    let exit_side = p.darts[s];
                    let t = tri_of(exit_side);
                    if tri_of(entry_side) != t {
                        return Err(Error::BadTrace("trace is not a walk".into()));
                    }
                    out.push(Strand {
                        idx: s,
                        tri: t,
                        entry: germ_end(Germ { obj: o, k: prev }, entry_side),
                        exit: germ_end(Germ { obj: o, k: s }, exit_side),
                    });
                }
            }
            ObjKind::Arc { start_corner, end_corner } => {
                if m == 0 {
                    let t = tri_of(start_corner);
                    if tri_of(end_corner) != t || start_corner == end_corner {
                        return Err(Error::BadArc("degenerate corner strand".into()));
                    }
                    out.push(Strand {
                        idx: 0,
                        tri: t,
                        entry: corner_pos(start_corner),
                        exit: corner_pos(end_corner),
                    });
                } else {
                    for s in 0..=m {
                        let (entry, t_entry) = if s == 0 {
                            (corner_pos(start_corner), tri_of(start_corner))
                        } else {
                            let side = self.tri.glue(p.darts[s - 1]);
                            (germ_end(Germ { obj: o, k: s - 1 }, side), tri_of(side))
                        };
                        let (exit, t_exit) = if s == m {
                            (corner_pos(end_corner), tri_of(end_corner))
                        } else {
                            (germ_end(Germ { obj: o, k: s }, p.darts[s]), tri_of(p.darts[s]))
                        };
                        if t_entry != t_exit {
                            return Err(Error::BadArc("arc word is not a walk".into()));
                        }
                        out.push(Strand { idx: s, tri: t_entry, entry, exit });
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn count_crossings(&self, o1: usize, o2: usize) -> usize {
        let mut n = 0;
        for (i, s1) in self.strands[o1].iter().enumerate() {
            for (j, s2) in self.strands[o2].iter().enumerate() {
                if o1 == o2 && j <= i {
                    continue;
                }
                if s1.tri == s2.tri && strands_cross(s1, s2) {
                    n += 1;
                }
            }
        }
        n
    }

    fn collect_crossings(&mut self) -> Result<()> {
        let mut crossings = Vec::new();
        for s1 in &self.strands[0] {
            for s2 in &self.strands[1] {
                if s1.tri == s2.tri && strands_cross(s1, s2) {
                    let key0 = along_strand_key(s1, s2);
                    let key1 = along_strand_key(s2, s1);
                    crossings.push(Crossing { strand: [s1.idx, s2.idx], key: [key0, key1] });
                }
            }
        }
        // Order along each object: by (strand index, key).
        let mut seq0: Vec<usize> = (0..crossings.len()).collect();
        seq0.sort_by_key(|&i| (crossings[i].strand[0], crossings[i].key[0]));
        let mut seq1: Vec<usize> = (0..crossings.len()).collect();
        seq1.sort_by_key(|&i| (crossings[i].strand[1], crossings[i].key[1]));
        self.crossings = crossings;
        self.seq = [seq0, seq1];
        Ok(())
    }

    /// Chords of object `o`: (triangle, entry position, exit position, strand index).
    pub fn strand_chords(&self, o: usize) -> Vec<(usize, CirclePos, CirclePos, usize)> {
        self.strands[o]
            .iter()
            .map(|s| (s.tri, s.entry, s.exit, s.idx))
            .collect()
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    /// Crossing indices ordered along object `o` (cyclic for closed objects).
    pub fn sequence_along(&self, o: usize) -> &[usize] {
        &self.seq[o]
    }

    /// The darts crossed by object `o` walking forward from crossing `from` to
    /// crossing `to` with no other crossing in between assumed.
    pub fn path_darts(&self, o: usize, from: usize, to: usize) -> Vec<DartId> {
        let p = &self.objs[o];
        let m = p.darts.len();
        let s_from = self.crossings[from].strand[o];
        let s_to = self.crossings[to].strand[o];
        match p.kind {
            ObjKind::Closed => {
                let mut out = Vec::new();
                let mut s = s_from;
                if s_from == s_to {
                    let kf = self.crossings[from].key[o];
                    let kt = self.crossings[to].key[o];
                    if kf < kt {
                        return out; // same strand, later crossing
                    }
                    // wraps all the way around
                }
                loop {
                    out.push(p.darts[s]);
                    s = (s + 1) % m;
                    if s == s_to {
                        break;
                    }
                }
                out
            }
            ObjKind::Arc { .. } => {
                assert!(s_from <= s_to);
                (s_from..s_to).map(|s| p.darts[s]).collect()
            }
        }
    }

    /// Index of crossing `c` within the sequence along object `o`.
    fn seq_pos(&self, o: usize, c: usize) -> usize {
        self.seq[o].iter().position(|&x| x == c).unwrap()
    }

    /// Finds an empty bigon between the two objects: a pair of crossings
    /// adjacent along both with nullhomotopic joint loop. Returns (p, q,
    /// b_forward) where the a-arc runs forward p to q.
    fn find_empty_bigon(&self) -> Option<(usize, usize, bool)> {
        let n = self.crossings.len();
        if n < 2 {
            return None;
        }
        let a_closed = matches!(self.objs[0].kind, ObjKind::Closed);
        let b_closed = matches!(self.objs[1].kind, ObjKind::Closed);
        let last_a = if a_closed { n } else { n - 1 };
        for i in 0..last_a {
            let p = self.seq[0][i];
            let q = self.seq[0][(i + 1) % n];
            if p == q {
                continue;
            }
            let jp = self.seq_pos(1, p);
            let jq = self.seq_pos(1, q);
            let b_next = if b_closed {
                (jp + 1) % n == jq
            } else {
                jp + 1 == jq
            };
            let b_prev = if b_closed {
                (jq + 1) % n == jp
            } else {
                jq + 1 == jp
            };
            for (cond, fwd) in [(b_next, true), (b_prev, false)] {
                if !cond {
                    continue;
                }
                let wa = self.path_darts(0, p, q);
                let wb = if fwd {
                    self.path_darts(1, p, q)
                } else {
                    let back = self.path_darts(1, q, p);
                    reverse_darts(self.tri, &back)
                };
                // Loop: a-arc p->q then b-arc q->p.
                let mut word = wa.clone();
                word.extend(reverse_darts(self.tri, &wb));
                if free_reduce(self.tri, &word).is_empty() {
                    return Some((p, q, fwd));
                }
            }
        }
        None
    }

    /// Removes the empty bigon (p, q): the two corridor dart paths coincide and
    /// the paired germs are adjacent along every corridor edge; swapping them
    /// eliminates exactly the two crossings.
    fn remove_bigon(&mut self, p: usize, q: usize, b_forward: bool) -> Result<()> {
        let wa = self.path_darts(0, p, q);
        let wb_pq = if b_forward {
            self.path_darts(1, p, q)
        } else {
            reverse_darts(self.tri, &self.path_darts(1, q, p))
        };
        if wa != wb_pq {
            return Err(Error::BadTrace(
                "bigon corridor mismatch; objects are not taut".into(),
            ));
        }
        let m0 = self.objs[0].darts.len();
        let m1 = self.objs[1].darts.len();
        let sa = self.crossings[p].strand[0];
        let sb = self.crossings[p].strand[1];
        for (r, &d) in wa.iter().enumerate() {
            let ka = (sa + r) % m0.max(1);
            let kb = if b_forward {
                (sb + r) % m1.max(1)
            } else {
                // walking backward along b from p: germ indices sb-1, sb-2, ...
                (sb + m1 - 1 - r) % m1.max(1)
            };
            let e = self.tri.edge_of(d);
            let ga = Germ { obj: 0, k: ka };
            let gb = Germ { obj: 1, k: kb };
            let ia = self.edge_order[e].iter().position(|&x| x == ga).unwrap();
            let ib = self.edge_order[e].iter().position(|&x| x == gb).unwrap();
            if ia.abs_diff(ib) != 1 {
                return Err(Error::BadTrace(
                    "bigon corridor germs are not adjacent".into(),
                ));
            }
            self.edge_order[e].swap(ia, ib);
        }
        let before = self.crossings.len();
        self.rebuild()?;
        if self.crossings.len() + 2 != before {
            return Err(Error::BadTrace(
                "bigon removal did not reduce crossings by two".into(),
            ));
        }
        Ok(())
    }

    /// Removes empty bigons to a fixpoint; afterwards the two objects are in
    /// minimal position (no bigon exists). Returns the number removed.
    pub fn reduce_bigons(&mut self) -> Result<usize> {
        let mut removed = 0;
        while let Some((p, q, fwd)) = self.find_empty_bigon() {
            self.remove_bigon(p, q, fwd)?;
            removed += 1;
        }
        Ok(removed)
    }

    /// Crossing sense at crossing `c`: +1 when object 1 crosses object 0 from
    /// its left to its right (with respect to the triangle orientation), -1
    /// otherwise.
    pub fn crossing_sense(&self, c: usize) -> i8 {
        let cr = &self.crossings[c];
        let s0 = &self.strands[0][cr.strand[0]];
        let s1 = &self.strands[1][cr.strand[1]];
        // Walk the circle from s0.entry: meeting s1.entry before s1.exit means
        // the cyclic order is (a_in, b_in, a_out, b_out).
        let order = [s0.entry, s1.entry, s0.exit, s1.exit];
        if cyclic_orientation(order) {
            1
        } else {
            -1
        }
    }

    /// Strand index of object `o` at crossing `c`.
    pub fn crossing_strand(&self, c: usize, o: usize) -> usize {
        self.crossings[c].strand[o]
    }

    /// Boundary components of a regular neighborhood of the union of the two
    /// objects (both closed), as reduced closed dart words.
    pub fn neighborhood_boundary(&self) -> Vec<Vec<DartId>> {
        assert!(self.objs.iter().all(|p| matches!(p.kind, ObjKind::Closed)));
        let n = self.crossings.len();
        if n == 0 {
            // Disjoint union: boundary = two parallel copies of each curve;
            // callers handle the disjoint case separately.
            return Vec::new();
        }
        // Directed segment: (object, seq position, direction). Segment (o, i, +)
        // runs from crossing seq[o][i] to seq[o][i+1]. At each crossing the four
        // ends in rotational order are built from the sense.
        // We trace faces: follow a directed segment to its head crossing, then
        // turn to the next end clockwise; every directed segment lies on exactly
        // one face.
        #[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
        struct DSeg {
            o: usize,
            i: usize, // index into seq[o]; segment from seq[o][i] to seq[o][i+1]
            fwd: bool,
        }
        let seq = &self.seq;
        let n_of = |o: usize| seq[o].len();
        // End labels at a crossing c: 0 = obj0 incoming, 1 = obj1 incoming,
        // 2 = obj0 outgoing, 3 = obj1 outgoing, arranged so that rotational
        // (counterclockwise) order is 0,1,2,3 if sense(c) = +1 else 0,3,2,1.
        let ccw_ends = |c: usize| -> [(usize, bool, bool); 4] {
            // (object, incoming?, ...) in ccw order starting at obj0 incoming.
            if self.crossing_sense(c) == 1 {
                [(0, true, false), (1, true, false), (0, false, false), (1, false, false)]
            } else {
                [(0, true, false), (1, false, false), (0, false, false), (1, true, false)]
            }
        };
        // Map (crossing, object, incoming) -> directed segment arriving/leaving.
        let seg_to = |o: usize, c: usize, incoming: bool| -> DSeg {
            let pos = self.seq_pos(o, c);
            let m = n_of(o);
            if incoming {
                DSeg { o, i: (pos + m - 1) % m, fwd: true }
            } else {
                DSeg { o, i: pos, fwd: true }
            }
        };
        // A directed segment in reverse direction is modeled by fwd=false with
        // the same index; its head is the segment's tail crossing.
        let head_crossing = |s: DSeg| -> usize {
            if s.fwd {
                seq[s.o][(s.i + 1) % n_of(s.o)]
            } else {
                seq[s.o][s.i]
            }
        };
        let mut visited: std::collections::HashSet<DSeg> = Default::default();
        let mut out = Vec::new();
        let all_segs: Vec<DSeg> = (0..2)
            .flat_map(|o| {
                (0..n_of(o)).flat_map(move |i| {
                    [DSeg { o, i, fwd: true }, DSeg { o, i, fwd: false }]
                })
            })
            .collect();
        for start in all_segs {
            if visited.contains(&start) {
                continue;
            }
            let mut word: Vec<DartId> = Vec::new();
            let mut cur = start;
            loop {
                visited.insert(cur);
                // Append the darts of cur.
                let c_from = if cur.fwd { seq[cur.o][cur.i] } else { seq[cur.o][(cur.i + 1) % n_of(cur.o)] };
                let c_to = head_crossing(cur);
                let darts = if cur.fwd {
                    self.path_darts(cur.o, c_from, c_to)
                } else {
                    reverse_darts(self.tri, &self.path_darts(cur.o, c_to, c_from))
                };
                word.extend(darts);
                // Turn at the head crossing: find our incoming end, take the
                // next end counterclockwise, leave along it.
                let c = c_to;
                let ends = ccw_ends(c);
                // incoming end label: object cur.o arriving (fwd) or "outgoing
                // traversed backwards" (o, outgoing) when !cur.fwd.
                let arriving = (cur.o, cur.fwd);
                let pos = ends
                    .iter()
                    .position(|&(o, inc, _)| (o, inc) == arriving)
                    .unwrap();
                let (no, ninc, _) = ends[(pos + 1) % 4];
                // Leaving along (no, ninc): if ninc is an incoming end, we run
                // that segment backwards; else forwards.
                let nxt_seg = seg_to(no, c, ninc);
                cur = DSeg { o: nxt_seg.o, i: nxt_seg.i, fwd: !ninc };
                if cur == start {
                    break;
                }
            }
            let red = reduce_closed(self.tri, &word);
            out.push(red);
        }
        out
    }
}

#[derive(Clone, Copy)]
enum Token {
    Dart(DartId),
    End(CornerId),
}

/// Iterator over the dart itinerary of a germ in one direction, normalized so
/// the germ crosses its edge via the canonical dart.
struct ItinerWalk<'a> {
    tri: &'a IdealTriangulation,
    obj: &'a Placed,
    /// Position of the next token.
    pos: usize,
    /// True: emit darts[pos] then advance; false: emit glue(darts[pos]) then retreat.
    forward: bool,
    done: bool,
}

impl<'a> ItinerWalk<'a> {
    fn new(
        tri: &'a IdealTriangulation,
        obj: &'a Placed,
        k: usize,
        dstar: DartId,
        forward_query: bool,
    ) -> ItinerWalk<'a> {
        // Natural direction iff the crossing dart equals dstar; otherwise the
        // germ's forward is the query's backward.
        let natural = obj.darts[k] == dstar;
        let forward = natural == forward_query;
        let m = obj.darts.len();
        let (pos, done) = if forward {
            match obj.kind {
                ObjKind::Closed => ((k + 1) % m, false),
                ObjKind::Arc { .. } => (k + 1, false),
            }
        } else {
            match obj.kind {
                ObjKind::Closed => ((k + m - 1) % m, false),
                ObjKind::Arc { .. } => (k, false), // emits glue(darts[k-1]) style below
            }
        };
        ItinerWalk { tri, obj, pos, forward, done }
    }

    fn next_token(&mut self) -> Token {
        let m = self.obj.darts.len();
        if self.forward {
            match self.obj.kind {
                ObjKind::Closed => {
                    let d = self.obj.darts[self.pos];
                    self.pos = (self.pos + 1) % m;
                    Token::Dart(d)
                }
                ObjKind::Arc { end_corner, .. } => {
                    if self.done || self.pos >= m {
                        self.done = true;
                        Token::End(end_corner)
                    } else {
                        let d = self.obj.darts[self.pos];
                        self.pos += 1;
                        Token::Dart(d)
                    }
                }
            }
        } else {
            match self.obj.kind {
                ObjKind::Closed => {
                    let d = self.tri.glue(self.obj.darts[self.pos]);
                    self.pos = (self.pos + m - 1) % m;
                    Token::Dart(d)
                }
                ObjKind::Arc { start_corner, .. } => {
                    if self.done || self.pos == 0 {
                        self.done = true;
                        Token::End(start_corner)
                    } else {
                        self.pos -= 1;
                        Token::Dart(self.tri.glue(self.obj.darts[self.pos]))
                    }
                }
            }
        }
    }
}

/// Rank of an exit token within a triangle entered through side `s`: the side
/// two steps on is nearest the start of `s`, a corner end is in the middle, the
/// next side is nearest the end.
fn token_rank(_tri: &IdealTriangulation, s: DartId, t: Token) -> usize {
    match t {
        Token::Dart(d) => {
            debug_assert_eq!(tri_of(d), tri_of(s));
            if d == next_dart(next_dart(s)) {
                0
            } else if d == next_dart(s) {
                2
            } else {
                // Backtrack through the entry side cannot occur in reduced words.
                unreachable!("token dart is the entry side");
            }
        }
        Token::End(c) => {
            debug_assert_eq!(tri_of(c), tri_of(s));
            debug_assert_eq!(c, next_dart(next_dart(s)), "arc end adjacent to entry is a spike");
            1
        }
    }
}

fn reverse_darts(tri: &IdealTriangulation, darts: &[DartId]) -> Vec<DartId> {
    darts.iter().rev().map(|&d| tri.glue(d)).collect()
}

/// Linear free reduction of a dart walk word.
fn free_reduce(tri: &IdealTriangulation, word: &[DartId]) -> Vec<DartId> {
    let mut stack: Vec<DartId> = Vec::with_capacity(word.len());
    for &d in word {
        if stack.last().is_some_and(|&top| tri.glue(top) == d) {
            stack.pop();
        } else {
            stack.push(d);
        }
    }
    stack
}

fn strands_cross(s1: &Strand, s2: &Strand) -> bool {
    let (a, b) = (s1.entry, s1.exit);
    let (c, d) = (s2.entry, s2.exit);
    // Shared corner endpoints never force a crossing.
    if a == c || a == d || b == c || b == d {
        return false;
    }
    in_open_arc(a, b, c) != in_open_arc(a, b, d)
}

/// True when x lies in the open counterclockwise arc from a to b.
fn in_open_arc(a: CirclePos, b: CirclePos, x: CirclePos) -> bool {
    if a < b {
        a < x && x < b
    } else {
        x > a || x < b
    }
}

/// Order key of crossing (s_other over s_self) along s_self from its entry: the
/// circular offset of s_other's endpoint inside the arc entry -> exit.
fn along_strand_key(s_self: &Strand, s_other: &Strand) -> usize {
    let (p, q) = (s_self.entry, s_self.exit);
    let r = if in_open_arc(p, q, s_other.entry) {
        s_other.entry
    } else {
        s_other.exit
    };
    debug_assert!(in_open_arc(p, q, r));
    // Encode the circular offset from p: compare positions cyclically.
    // slot in 0..6, rank bounded; build a comparable integer.
    let enc = |c: CirclePos| c.slot * 1_000_000 + c.rank;
    let (ep, er) = (enc(p), enc(r));
    if er >= ep {
        er - ep
    } else {
        er + 6_000_000 - ep
    }
}

/// Orientation of four pairwise distinct circle positions: true when they occur
/// in counterclockwise cyclic order a, b, c, d.
fn cyclic_orientation(v: [CirclePos; 4]) -> bool {
    // b, c, d relative to a: their ccw offsets from a must be increasing.
    let enc = |c: CirclePos| (c.slot, c.rank);
    let a = enc(v[0]);
    let key = |x: CirclePos| {
        let e = enc(x);
        if e >= a {
            (0, e)
        } else {
            (1, e)
        }
    };
    let kb = key(v[1]);
    let kc = key(v[2]);
    let kd = key(v[3]);
    kb < kc && kc < kd
}

/// Exhaustive minimal-crossing search over all interleavings of the two
/// objects' germs along every edge, keeping each object's internal taut order.
/// Independent of the bigon machinery; exponential, only for tiny oracle cases.
pub fn brute_force_min_crossings(
    tri: &IdealTriangulation,
    a: &Placed,
    b: &Placed,
    budget: usize,
) -> Result<usize> {
    let base = Overlay::new(tri, vec![a.clone(), b.clone()], InitialOrder::BlockFraction)?;
    // Per-edge: counts of a-germs and b-germs; enumerate shuffles as bitmasks.
    let mut shuffle_sets: Vec<Vec<Vec<bool>>> = Vec::new(); // per edge: list of (is_b at position) patterns
    let mut total: f64 = 1.0;
    for e in 0..tri.n_edges() {
        let na = base.edge_order[e].iter().filter(|g| g.obj == 0).count();
        let nb = base.edge_order[e].len() - na;
        let patterns = enumerate_shuffles(na, nb);
        total *= patterns.len() as f64;
        if total > budget as f64 {
            return Err(Error::BudgetExhausted(format!(
                "interleaving count exceeds {budget}"
            )));
        }
        shuffle_sets.push(patterns);
    }
    // Iterate the product of patterns.
    let mut idx = vec![0usize; tri.n_edges()];
    let mut best = usize::MAX;
    loop {
        let mut ov = Overlay::new(tri, vec![a.clone(), b.clone()], InitialOrder::BlockFraction)?;
        for e in 0..tri.n_edges() {
            let pattern = &shuffle_sets[e][idx[e]];
            let mut a_germs: Vec<Germ> =
                ov.edge_order[e].iter().copied().filter(|g| g.obj == 0).collect();
            let mut b_germs: Vec<Germ> =
                ov.edge_order[e].iter().copied().filter(|g| g.obj == 1).collect();
            let mut merged = Vec::with_capacity(pattern.len());
            let (mut ia, mut ib) = (0, 0);
            for &is_b in pattern {
                if is_b {
                    merged.push(b_germs[ib]);
                    ib += 1;
                } else {
                    merged.push(a_germs[ia]);
                    ia += 1;
                }
            }
            let _ = (&mut a_germs, &mut b_germs);
            ov.edge_order[e] = merged;
        }
        if ov.rebuild().is_ok() {
            best = best.min(ov.crossing_count());
        }
        // advance product counter
        let mut carry = true;
        for e in 0..tri.n_edges() {
            if carry {
                idx[e] += 1;
                if idx[e] == shuffle_sets[e].len() {
                    idx[e] = 0;
                } else {
                    carry = false;
                }
            }
        }
        if carry {
            break;
        }
    }
    Ok(best)
}

fn enumerate_shuffles(na: usize, nb: usize) -> Vec<Vec<bool>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(na + nb);
    fn rec(na: usize, nb: usize, cur: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        if na == 0 && nb == 0 {
            out.push(cur.clone());
            return;
        }
        if na > 0 {
            cur.push(false);
            rec(na - 1, nb, cur, out);
            cur.pop();
        }
        if nb > 0 {
            cur.push(true);
            rec(na, nb - 1, cur, out);
            cur.pop();
        }
    }
    rec(na, nb, &mut cur, &mut out);
    out
}
