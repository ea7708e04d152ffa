//! Acceptance suite: one test per criterion, each printing a pass line with
//! its measured time and failing loudly otherwise. Tolerances are exact
//! integer equalities throughout; time budgets are asserted.

use multicurve::connectivity::{
    b_curve_path, b_multicurve_path, multicurve_graph_path, validate_path,
};
use multicurve::curve::{
    intersection_number, is_isotopic, Carrier, Curve, Multicurve,
};
use multicurve::cut::{classify_curve, cut_along, is_nice_pair};
use multicurve::embeddings::{
    descend, induced_embedding, phi_eval, standard_setups, verify_simplicial_embedding,
    VertexMapSpec,
};
use multicurve::enumeration::complete_to_multicurve;
use multicurve::graphs::{
    b_edge_predicate, b_neighbors, b_vertex_predicate, build_ball, check_int_complete,
    check_stardec, mc_edge_predicate, BallBudget, Family, GraphBall,
};
use multicurve::mcg::{
    apply_multicurve, dehn_twist, short_curves, standard_generators, MappingClass,
};
use multicurve::overlay::{brute_force_min_crossings, InitialOrder, Overlay};
use multicurve::surface::SurfaceType;
use std::time::Instant;

fn carrier(g: usize, n: usize) -> Carrier {
    Carrier::new(SurfaceType::new(g, n)).unwrap()
}

/// Deterministic pseudo-random generator for sampled checks.
struct Lcg(u64);

impl Lcg {
    fn new(seed: u64) -> Self {
        Lcg(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493))
    }
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0 >> 11
    }
    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }
}

fn finish(name: &str, t0: Instant, budget_s: u64, detail: &str) {
    let dt = t0.elapsed();
    println!(
        "criterion {name}: PASS ({detail}, {:.1}s, budget {budget_s}s)",
        dt.as_secs_f64()
    );
    assert!(
        dt.as_secs() < budget_s,
        "{name} exceeded its {budget_s}s budget: {dt:?}"
    );
}

/// The criteria run sequentially inside one test so each wall-clock budget is
/// measured without contention from sibling tests; one line prints per
/// criterion.
#[test]
fn acceptance_criteria() {
    criterion_1_topology_arithmetic();
    criterion_2_intersection_oracle();
    criterion_3_nice_pairs();
    criterion_4_graph_ball_soundness();
    criterion_5_remark_suite();
    criterion_6_connectivity_constructive();
    criterion_7_embedding_direction();
    criterion_8_rigidity_machinery();
}

fn criterion_1_topology_arithmetic() {
    let t0 = Instant::now();
    // Formulas on all valid types with genus <= 3, punctures <= 8.
    let mut types = 0;
    for g in 0..=3usize {
        for n in 0..=8usize {
            let s = SurfaceType::new(g, n);
            if s.euler_characteristic() >= 0 {
                assert!(s.complexity().is_err());
                continue;
            }
            types += 1;
            assert_eq!(s.complexity().unwrap() as i64, 3 * g as i64 - 3 + n as i64);
            assert_eq!(s.euler_characteristic(), 2 - 2 * g as i64 - n as i64);
            if s.complexity().unwrap() >= 1 {
                let want = match (g, n) {
                    (1, 1) => 1,
                    (0, 4) => 2,
                    _ => 0,
                };
                assert_eq!(s.minimal_intersection_constant().unwrap(), want);
            }
        }
    }
    // 200 randomized multicurves: cutting conserves chi exactly and adds two
    // punctures per curve.
    let mut rng = Lcg::new(1);
    let surfaces = [
        (0usize, 5usize),
        (0, 6),
        (0, 7),
        (1, 2),
        (1, 3),
        (2, 1),
        (2, 0),
        (3, 0),
        (0, 8),
        (1, 4),
    ];
    let mut done = 0;
    let mut supplies: std::collections::HashMap<(usize, usize), (Carrier, Vec<Curve>)> =
        Default::default();
    while done < 200 {
        let (g, n) = surfaces[rng.below(surfaces.len())];
        let (c, supply) = supplies.entry((g, n)).or_insert_with(|| {
            let c = carrier(g, n);
            let supply = short_curves(&c, if g >= 2 { 8 } else { 10 });
            (c, supply)
        });
        let xi = c.surface.complexity().unwrap();
        let k = 1 + rng.below(xi.min(3));
        // Random greedy disjoint selection.
        let mut curves: Vec<Curve> = Vec::new();
        let start = rng.below(supply.len());
        for off in 0..supply.len() {
            if curves.len() == k {
                break;
            }
            let cand = &supply[(start + off) % supply.len()];
            let ok = curves.iter().all(|x| {
                intersection_number(c, x, cand).unwrap() == 0
                    && !is_isotopic(c, x, cand).unwrap()
            });
            if ok {
                curves.push(cand.clone());
            }
        }
        let Ok(mu) = Multicurve::new(c, curves) else { continue };
        let (dec, _, _) = cut_along(c, &mu, &[]).unwrap();
        assert_eq!(
            dec.euler_characteristic(),
            c.surface.euler_characteristic(),
            "chi conservation on {} with k={}",
            c.surface,
            mu.len()
        );
        assert_eq!(
            dec.total_punctures(),
            c.surface.punctures + 2 * mu.len(),
            "puncture bookkeeping on {}",
            c.surface
        );
        done += 1;
    }
    finish("1 topology-arithmetic", t0, 10, &format!("{types} types, 200 cuts"));
}

/// Slope bookkeeping on the once-punctured torus: labels live on the oracle
/// side, propagated through twists by the determinant action, and every pair
/// is compared against |ps - qr|.
struct SlopeWorld {
    carrier: Carrier,
    slopes: Vec<((i64, i64), Curve)>,
}

fn normalize(p: i64, q: i64) -> (i64, i64) {
    if q < 0 || (q == 0 && p < 0) {
        (-p, -q)
    } else {
        (p, q)
    }
}

impl SlopeWorld {
    fn build(bound: i64) -> SlopeWorld {
        let c = carrier(1, 1);
        let h = Curve::from_trace(&c, vec![3, 1]).unwrap(); // slope 0/1
        let v = Curve::from_trace(&c, vec![2, 4]).unwrap(); // slope 1/0
        let diag = Curve::from_trace(&c, vec![4, 1]).unwrap(); // slope 1/1
        // Calibrate the sign of the twist action on labels: T_v(h) is either
        // slope (1,1) or (-1,1); the flat model says weights (1,1,0) mean 1/1.
        let tv_h = dehn_twist(&c, &h, &v, 1).unwrap();
        let eps: i64 = if tv_h == diag { -1 } else { 1 };
        // Check: with s=(0,1), t=(1,0): D = p_s q_t - q_s p_t = -1, and the
        // label moves to s + eps*D*t.
        let mut slopes: Vec<((i64, i64), Curve)> = vec![((0, 1), h), ((1, 0), v)];
        let mut seen: std::collections::BTreeSet<(i64, i64)> =
            slopes.iter().map(|(s, _)| *s).collect();
        let mut frontier = slopes.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for ((sp, sq), s_curve) in &frontier {
                for ((tp, tq), t_curve) in slopes.clone() {
                    let d = sp * tq - sq * tp;
                    if d == 0 {
                        continue;
                    }
                    for sign in [1i64, -1] {
                        let lp = sp + sign * eps * d * tp;
                        let lq = sq + sign * eps * d * tq;
                        let lab = normalize(lp, lq);
                        if lab.0.abs() > bound || lab.1.abs() > bound {
                            continue;
                        }
                        if seen.contains(&lab) {
                            continue;
                        }
                        let img =
                            dehn_twist(&c, s_curve, &t_curve, sign as i8).unwrap();
                        seen.insert(lab);
                        next.push((lab, img));
                    }
                }
            }
            slopes.extend(next.clone());
            frontier = next;
        }
        SlopeWorld { carrier: c, slopes }
    }
}

fn criterion_2_intersection_oracle() {
    let t0 = Instant::now();
    // Once-punctured torus: all coprime slope pairs with entries up to 10.
    let world = SlopeWorld::build(10);
    let mut pairs = 0usize;
    for i in 0..world.slopes.len() {
        for j in i + 1..world.slopes.len() {
            let ((p1, q1), a) = &world.slopes[i];
            let ((p2, q2), b) = &world.slopes[j];
            let want = (p1 * q2 - q1 * p2).unsigned_abs() as usize;
            let got = intersection_number(&world.carrier, a, b).unwrap();
            assert_eq!(got, want, "slopes {p1}/{q1} vs {p2}/{q2}");
            pairs += 1;
        }
    }
    assert!(pairs >= 2500, "expected thousands of slope pairs, got {pairs}");
    // Spheres: every simple curve with a short trace plus twisted variants up
    // to trace length 20, engine versus the independent reductions.
    let mut cross_checked = 0usize;
    for (g, n) in [(0usize, 4usize), (0, 5)] {
        let c = carrier(g, n);
        let base = short_curves(&c, 10);
        let mut curves: Vec<Curve> = base.clone();
        for a in &base {
            for t in &base {
                for sign in [1i8, -1] {
                    if let Ok(img) = dehn_twist(&c, a, t, sign) {
                        if img.trace().len() <= 20 {
                            curves.push(img);
                        }
                    }
                }
            }
        }
        curves.sort();
        curves.dedup();
        curves.truncate(16);
        assert!(curves.len() >= 8, "trace sampling starved on {}", c.surface);
        for i in 0..curves.len() {
            for j in i + 1..curves.len() {
                let engine = intersection_number(&c, &curves[i], &curves[j]).unwrap();
                // Independent route one: exhaustive interleavings when small.
                match brute_force_min_crossings(
                    &c.tri,
                    &curves[i].placed(),
                    &curves[j].placed(),
                    200_000,
                ) {
                    Ok(brute) => {
                        assert_eq!(engine, brute, "brute force disagrees on {}", c.surface);
                        cross_checked += 1;
                    }
                    Err(_) => {
                        // Independent route two: naive block order plus
                        // exhaustive empty-bigon reduction.
                        let mut ov = Overlay::new(
                            &c.tri,
                            vec![curves[i].placed(), curves[j].placed()],
                            InitialOrder::BlockFraction,
                        )
                        .unwrap();
                        ov.reduce_bigons().unwrap();
                        assert_eq!(engine, ov.crossing_count());
                        cross_checked += 1;
                    }
                }
            }
        }
    }
    finish(
        "2 intersection-oracle",
        t0,
        60,
        &format!("{pairs} slope pairs, {cross_checked} sphere pairs"),
    );
}

fn criterion_3_nice_pairs() {
    let t0 = Instant::now();
    let mut true_verdicts = 0usize;
    let mut sampled = 0usize;
    for (g, n) in [(0usize, 6usize), (0, 7), (2, 0), (1, 3)] {
        let c = carrier(g, n);
        let xi = c.surface.complexity().unwrap();
        let supply = short_curves(&c, if g >= 2 { 8 } else { 10 });
        for i in 0..supply.len() {
            for j in i + 1..supply.len() {
                let (a, b) = (&supply[i], &supply[j]);
                match is_nice_pair(&c, a, b) {
                    Ok(true) => {
                        // is_nice_pair verifies internally that the positive
                        // component has complexity xi - 2; recompute here.
                        let m = Multicurve::new(&c, vec![a.clone(), b.clone()]).unwrap();
                        let (dec, _, _) = cut_along(&c, &m, &[]).unwrap();
                        let pos = dec.positive_part();
                        assert_eq!(pos.len(), 1, "{}", c.surface);
                        assert_eq!(pos[0].complexity().unwrap(), xi - 2, "{}", c.surface);
                        true_verdicts += 1;
                        sampled += 1;
                    }
                    Ok(false) => sampled += 1,
                    Err(_) => {}
                }
            }
        }
    }
    assert!(true_verdicts > 20, "too few nice pairs sampled: {true_verdicts}");
    finish(
        "3 nice-pairs",
        t0,
        30,
        &format!("{true_verdicts} nice of {sampled} sampled"),
    );
}

fn standard_k_seed(c: &Carrier, k: usize) -> Multicurve {
    let supply = short_curves(c, 10);
    complete_to_multicurve(c, &[], k, &supply).unwrap()
}

fn recount_edges(c: &Carrier, ball: &GraphBall) -> std::collections::BTreeSet<(usize, usize)> {
    let mut out = std::collections::BTreeSet::new();
    for i in 0..ball.vertices.len() {
        for j in i + 1..ball.vertices.len() {
            let ok = match &ball.family {
                Family::B => b_edge_predicate(c, &ball.vertices[i], &ball.vertices[j]).unwrap(),
                _ => mc_edge_predicate(c, &ball.vertices[i], &ball.vertices[j]).unwrap(),
            };
            if ok {
                out.insert((i, j));
            }
        }
    }
    out
}

fn criterion_4_graph_ball_soundness() {
    let t0 = Instant::now();
    let cases: [(usize, usize, usize, usize); 6] = [
        (1, 1, 1, 24),
        (0, 5, 1, 20),
        (0, 5, 2, 24),
        (0, 6, 1, 20),
        (0, 6, 2, 20),
        (0, 6, 3, 16),
    ];
    let mut total_vertices = 0;
    for (g, n, k, cap) in cases {
        let c = carrier(g, n);
        let seed = standard_k_seed(&c, k);
        let ball = build_ball(
            &c,
            k,
            Family::Mc,
            &seed,
            BallBudget { supply_words: 1, max_supply: 28, max_vertices: cap, max_radius: 2 },
        )
        .unwrap();
        assert!(ball.vertices.len() > 1, "g{g}n{n} k{k}");
        let recount = recount_edges(&c, &ball);
        assert_eq!(ball.edges, recount, "edge recount differs on g{g}n{n} k{k}");
        // Degrees within the ball never exceed the recount degrees (same set).
        total_vertices += ball.vertices.len();
    }
    finish(
        "4 graph-ball-soundness",
        t0,
        120,
        &format!("6 balls, {total_vertices} vertices"),
    );
}

fn criterion_5_remark_suite() {
    let t0 = Instant::now();
    // Exhaustive int-complete and stardec on shipped (0,6) and (0,7) k=2 balls.
    for n in [6usize, 7usize] {
        let c = carrier(0, n);
        let seed = standard_k_seed(&c, 2);
        let ball = build_ball(
            &c,
            2,
            Family::Mc,
            &seed,
            BallBudget { supply_words: 1, max_supply: 24, max_vertices: 18, max_radius: 2 },
        )
        .unwrap();
        let mut subs: Vec<Multicurve> = Vec::new();
        for v in &ball.vertices {
            for curve in v.curves() {
                subs.push(v.without_curve(&c, curve).unwrap());
            }
        }
        subs.sort();
        subs.dedup();
        for i in 0..subs.len() {
            for j in i + 1..subs.len() {
                let verdict = check_int_complete(&c, &subs[i], &subs[j], &ball).unwrap();
                assert!(verdict.pass, "(0,{n}): {}", verdict.detail);
            }
        }
        for v in 0..ball.vertices.len() {
            for alpha in ball.vertices[v].curves().to_vec() {
                let r = check_stardec(&c, &ball, v, &alpha).unwrap();
                assert!(r.pass, "(0,{n}) stardec: {}", r.detail);
            }
        }
    }
    // b_neighbors: 20 sampled non-B vertices on (0,7), 100 pairwise
    // non-isotopic adjacent B-vertices each.
    let c = carrier(0, 7);
    let supply = short_curves(&c, 12);
    let mut non_b: Vec<Multicurve> = Vec::new();
    let others: Vec<Curve> = supply
        .iter()
        .filter(|x| {
            let cls = classify_curve(&c, x).unwrap();
            !cls.is_outer && !cls.is_nonseparating
        })
        .cloned()
        .collect();
    'outer: for i in 0..others.len() {
        for j in i + 1..others.len() {
            if non_b.len() >= 20 {
                break 'outer;
            }
            if let Ok(m) = Multicurve::new(&c, vec![others[i].clone(), others[j].clone()]) {
                if !b_vertex_predicate(&c, &m).unwrap() && !non_b.contains(&m) {
                    non_b.push(m);
                }
            }
        }
    }
    assert!(non_b.len() >= 20, "found only {} non-B vertices", non_b.len());
    for mu in non_b.iter().take(20) {
        let neighbors = b_neighbors(&c, mu, 100, &supply).unwrap();
        assert_eq!(neighbors.len(), 100);
        let distinct: std::collections::BTreeSet<_> = neighbors.iter().collect();
        assert_eq!(distinct.len(), 100, "neighbors repeat");
        for nu in neighbors.iter().take(5) {
            assert!(mc_edge_predicate(&c, mu, nu).unwrap());
            assert!(b_vertex_predicate(&c, nu).unwrap());
        }
    }
    finish("5 remark-suite", t0, 120, "2 balls exhaustive, 20x100 neighbors");
}

fn random_word(
    c: &Carrier,
    gens: &[multicurve::mcg::Generator],
    rng: &mut Lcg,
    len: usize,
) -> MappingClass {
    let mut w = MappingClass::identity(c.surface);
    for _ in 0..len {
        let g = rng.below(gens.len());
        let p = if rng.below(2) == 0 { 1 } else { -1 };
        w = w.compose(&MappingClass::letter(c.surface, g, p));
    }
    w
}

fn criterion_6_connectivity_constructive() {
    let t0 = Instant::now();
    // Multicurve graph paths on (0,5) and (0,6), 100 random pairs total per
    // family, endpoints moved by random generator words.
    let mut mc_paths = 0usize;
    {
        let mut rng = Lcg::new(7);
        for (g, n, k) in [(0usize, 5usize, 2usize), (0, 6, 2)] {
            let c = carrier(g, n);
            let gens = standard_generators(&c).unwrap();
            let base = standard_k_seed(&c, k);
            for _ in 0..50 {
                let fl = 1 + rng.below(2);
                let gl = 1 + rng.below(2);
                let f = random_word(&c, &gens, &mut rng, fl);
                let gmove = random_word(&c, &gens, &mut rng, gl);
                let mu = apply_multicurve(&c, &gens, &f, &base).unwrap();
                let nu = apply_multicurve(&c, &gens, &gmove, &base).unwrap();
                let p = multicurve_graph_path(&c, &mu, &nu).unwrap();
                validate_path(&c, &p).unwrap();
                mc_paths += 1;
            }
        }
    }
    // B-paths of curves: genus 0, 1 and 2 branches.
    let mut b_paths = 0usize;
    {
        let mut rng = Lcg::new(11);
        for (g, n) in [(0usize, 6usize), (1, 3), (2, 0)] {
            let c = carrier(g, n);
            let gens = standard_generators(&c).unwrap();
            let supply = short_curves(&c, if g >= 2 { 8 } else { 10 });
            let b_curves: Vec<Curve> = supply
                .iter()
                .filter(|x| {
                    let cls = classify_curve(&c, x).unwrap();
                    cls.is_nonseparating || cls.is_outer
                })
                .cloned()
                .collect();
            let mut done = 0;
            let mut tries = 0;
            while done < 34 && tries < 200 {
                tries += 1;
                let a0 = &b_curves[rng.below(b_curves.len())];
                let b0 = &b_curves[rng.below(b_curves.len())];
                let f = random_word(&c, &gens, &mut rng, 1);
                let a = multicurve::mcg::apply(&c, &gens, &f, a0).unwrap();
                if is_isotopic(&c, &a, b0).unwrap() {
                    continue;
                }
                let p = b_curve_path(&c, &a, b0).unwrap();
                validate_path(&c, &p).unwrap();
                done += 1;
                b_paths += 1;
            }
            assert!(done >= 30, "too few B-paths on {}", c.surface);
        }
    }
    // B-paths of 2-multicurves on (0,7).
    let mut bk_paths = 0usize;
    {
        let mut rng = Lcg::new(13);
        let c = carrier(0, 7);
        let gens = standard_generators(&c).unwrap();
        let supply = short_curves(&c, 10);
        let b_seeds: Vec<Multicurve> = {
            let mut out = Vec::new();
            for i in 0..supply.len() {
                for j in i + 1..supply.len() {
                    if out.len() >= 12 {
                        break;
                    }
                    if let Ok(m) =
                        Multicurve::new(&c, vec![supply[i].clone(), supply[j].clone()])
                    {
                        if b_vertex_predicate(&c, &m).unwrap() {
                            out.push(m);
                        }
                    }
                }
            }
            out
        };
        let mut done = 0;
        let mut tries = 0;
        while done < 100 && tries < 400 {
            tries += 1;
            let mu0 = &b_seeds[rng.below(b_seeds.len())];
            let nu0 = &b_seeds[rng.below(b_seeds.len())];
            let f = random_word(&c, &gens, &mut rng, 1);
            let Ok(mu) = apply_multicurve(&c, &gens, &f, mu0) else { continue };
            if !b_vertex_predicate(&c, &mu).unwrap() {
                continue;
            }
            let Ok(p) = b_multicurve_path(&c, &mu, nu0) else { continue };
            validate_path(&c, &p).unwrap();
            done += 1;
            bk_paths += 1;
        }
        assert!(done >= 100, "only {done} B^2 paths succeeded");
    }
    finish(
        "6 connectivity-constructive",
        t0,
        300,
        &format!("{mc_paths} mc, {b_paths} b, {bk_paths} b2 paths"),
    );
}

fn criterion_7_embedding_direction() {
    let t0 = Instant::now();
    let setups = standard_setups().unwrap();
    assert_eq!(setups.len(), 10);
    for st in &setups {
        st.embedding.dimension_check().unwrap();
        let seed = standard_k_seed(&st.source, st.k1);
        let ball = build_ball(
            &st.source,
            st.k1,
            Family::Mc,
            &seed,
            BallBudget { supply_words: 1, max_supply: 14, max_vertices: 8, max_radius: 1 },
        )
        .unwrap();
        assert!(ball.vertices.len() >= 2, "{}", st.name);
        let map = induced_embedding(&st.embedding, &st.target, &ball).unwrap();
        let report = verify_simplicial_embedding(
            &st.target,
            &map,
            &ball,
            Some(&st.embedding.companion),
        )
        .unwrap();
        assert!(
            report.pass(),
            "{}: {:?}",
            st.name,
            report.counterexamples
        );
    }
    finish("7 embedding-direction", t0, 60, "10 setups verified");
}

fn criterion_8_rigidity_machinery() {
    let t0 = Instant::now();
    let mut words_checked = 0usize;
    let mut hom_samples = 0usize;
    for (g, n) in [(0usize, 6usize), (1, 2)] {
        let c = carrier(g, n);
        let gens = standard_generators(&c).unwrap();
        let supply = short_curves(&c, 10);
        let seed2 = standard_k_seed(&c, 2);
        let seed1 = standard_k_seed(&c, 1);
        let ball2 = build_ball(
            &c,
            2,
            Family::Mc,
            &seed2,
            BallBudget { supply_words: 1, max_supply: 20, max_vertices: 14, max_radius: 1 },
        )
        .unwrap();
        let ball1 = build_ball(
            &c,
            1,
            Family::Mc,
            &seed1,
            BallBudget { supply_words: 1, max_supply: 20, max_vertices: 8, max_radius: 1 },
        )
        .unwrap();
        let mut rng = Lcg::new(17 + n as u64);
        let mut words: Vec<MappingClass> = Vec::new();
        while words.len() < 13 {
            let len = 1 + rng.below(2);
            let w = random_word(&c, &gens, &mut rng, len);
            words.push(w);
        }
        for w in &words {
            let spec = VertexMapSpec::ByMappingClass(w.clone());
            let (map, report) = descend(&c, &spec, &ball2, &ball1, &supply, 3).unwrap();
            assert!(report.well_defined, "{} word: {:?}", c.surface, report.details);
            assert!(report.edges_preserved, "{}: {:?}", c.surface, report.details);
            assert!(report.fiber_sizes.iter().all(|&s| s >= 3));
            // Surjectivity identity phi(F(f)) = G(f) vertexwise.
            for (nu, image) in &map.pairs {
                let direct = apply_multicurve(&c, &gens, w, nu).unwrap();
                assert_eq!(image, &direct, "phi(F(f)) != G(f) on {}", c.surface);
            }
            words_checked += 1;
        }
        // Homomorphism on sampled pairs: phi(A compose B) = phi(A) of phi(B).
        for _ in 0..25 {
            let a = &words[rng.below(words.len())];
            let b = &words[rng.below(words.len())];
            let ab = b.compose(a); // apply b first, then a
            let nu = &ball1.vertices[rng.below(ball1.vertices.len())];
            let lhs = phi_eval(&c, &VertexMapSpec::ByMappingClass(ab.clone()), nu, &supply)
                .unwrap();
            let mid = phi_eval(&c, &VertexMapSpec::ByMappingClass(b.clone()), nu, &supply)
                .unwrap();
            let rhs = phi_eval(&c, &VertexMapSpec::ByMappingClass(a.clone()), &mid, &supply)
                .unwrap();
            assert_eq!(lhs, rhs, "homomorphism identity on {}", c.surface);
            hom_samples += 1;
        }
    }
    assert_eq!(words_checked, 26);
    assert_eq!(hom_samples, 50);
    finish(
        "8 rigidity-machinery",
        t0,
        300,
        &format!("{words_checked} words, {hom_samples} homomorphism samples"),
    );
}
