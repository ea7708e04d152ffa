use multicurve::connectivity::*;
use multicurve::curve::*;
use multicurve::cut::classify_curve;
use multicurve::mcg::*;
use multicurve::surface::SurfaceType;

struct Lcg(u64);
impl Lcg {
    fn new(seed: u64) -> Self { Lcg(seed.wrapping_mul(2862933555777941757).wrapping_add(3037000493)) }
    fn next(&mut self) -> u64 { self.0 = self.0.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407); self.0 >> 11 }
    fn below(&mut self, n: usize) -> usize { (self.next() % n as u64) as usize }
}
fn random_word(c: &Carrier, gens: &[Generator], rng: &mut Lcg, len: usize) -> MappingClass {
    let mut w = MappingClass::identity(c.surface);
    for _ in 0..len {
        let g = rng.below(gens.len());
        let p = if rng.below(2) == 0 { 1 } else { -1 };
        w = w.compose(&MappingClass::letter(c.surface, g, p));
    }
    w
}
fn main() {
    let mut rng = Lcg::new(11);
    for (g, n) in [(0usize, 6usize), (1, 3), (2, 0)] {
        let c = Carrier::new(SurfaceType::new(g, n)).unwrap();
        let gens = standard_generators(&c).unwrap();
        let supply = short_curves(&c, if g >= 2 { 8 } else { 10 });
        let b_curves: Vec<Curve> = supply.iter().filter(|x| {
            let cls = classify_curve(&c, x).unwrap();
            cls.is_nonseparating || cls.is_outer
        }).cloned().collect();
        let mut done = 0;
        let mut tries = 0;
        let mut fails = 0;
        while done < 34 && tries < 200 {
            tries += 1;
            let a0 = &b_curves[rng.below(b_curves.len())];
            let b0 = &b_curves[rng.below(b_curves.len())];
            let f = random_word(&c, &gens, &mut rng, 1);
            let a = apply(&c, &gens, &f, a0).unwrap();
            if is_isotopic(&c, &a, b0).unwrap() { continue; }
            match b_curve_path(&c, &a, b0) {
                Ok(p) => { validate_path(&c, &p).unwrap(); done += 1; }
                Err(e) => {
                    fails += 1;
                    if fails <= 2 {
                        println!("{}: FAIL {e}", c.surface);
                        println!("  a={:?} ({:?})", a.trace(), classify_curve(&c, &a).unwrap().class);
                        println!("  b={:?} ({:?})", b0.trace(), classify_curve(&c, b0).unwrap().class);
                        println!("  i={}", intersection_number(&c, &a, b0).unwrap());
                    }
                }
            }
        }
        println!("{}: {done} ok, {fails} fails of {tries}", c.surface);
    }
}
