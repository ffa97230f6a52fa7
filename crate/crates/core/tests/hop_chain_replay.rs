//! Replays the recorded chain of coordinate changes between the three
//! elliptic fibrations S6 -> S7 -> S8 over F_29 and checks every
//! intermediate model: each map sends its source curve onto the next
//! model, the elliptic parameters restrict to the new base coordinate,
//! and all recorded sections lie on their surfaces.

use k3aut::ellfib::{is_on_curve, Section, WeierstrassK3};
use k3aut::exact::fp::Fp;
use k3aut::exact::poly::Poly;
use k3aut::hopping::{map_from_json, parse_mpoly, parse_mrat, prem_y, CoordinateMap, MPoly};

fn fixture() -> serde_json::Value {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/hop_chain_f29.json");
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn t_poly(k: &Fp, s: &str) -> Poly<Fp> {
    let m = parse_mpoly(k, s).unwrap();
    assert_eq!(m.degree(0), 0, "not a polynomial in t alone");
    assert_eq!(m.degree(1), 0, "not a polynomial in t alone");
    let mut coeffs = vec![0u64; m.degree(2) as usize + 1];
    for (e, c) in &m.terms {
        coeffs[e[2] as usize] = *c;
    }
    Poly::new(k.clone(), coeffs)
}

/// y^2 - x^3 - a(t) x - b(t) from the fixture's "a"/"b" strings.
fn weier_eq(k: &Fp, v: &serde_json::Value) -> MPoly<Fp> {
    let a = parse_mpoly(k, v["a"].as_str().unwrap()).unwrap();
    let b = parse_mpoly(k, v["b"].as_str().unwrap()).unwrap();
    let x = MPoly::var(k.clone(), 0);
    let y = MPoly::var(k.clone(), 1);
    y.mul(&y).sub(&x.pow(3)).sub(&a.mul(&x)).sub(&b)
}

fn weier_surface(k: &Fp, v: &serde_json::Value) -> WeierstrassK3<Fp> {
    WeierstrassK3::new(
        k.clone(),
        t_poly(k, v["a"].as_str().unwrap()),
        t_poly(k, v["b"].as_str().unwrap()),
    )
    .unwrap()
}

fn get_map(k: &Fp, v: &serde_json::Value) -> CoordinateMap<Fp> {
    map_from_json(k, v).unwrap()
}

/// The recorded "0 = ..." equation as an MPoly.
fn eq_of(k: &Fp, v: &serde_json::Value) -> MPoly<Fp> {
    parse_mpoly(k, v.as_str().unwrap()).unwrap()
}

/// y^2 = rhs models ("quartic" entries) as y^2 - rhs.
fn ysq_eq(k: &Fp, v: &serde_json::Value) -> MPoly<Fp> {
    let rhs = parse_mpoly(k, v.as_str().unwrap()).unwrap();
    let y = MPoly::var(k.clone(), 1);
    y.mul(&y).sub(&rhs)
}

fn check_step(label: &str, map: &CoordinateMap<Fp>, source: &MPoly<Fp>, target: &MPoly<Fp>) {
    assert!(
        map.maps_onto(source, target),
        "step {label}: pullback of target does not vanish on source"
    );
}

/// The parameter u restricted through `map` must equal the new base
/// coordinate t modulo the source equation.
fn check_parameter(label: &str, k: &Fp, u: &str, map: &CoordinateMap<Fp>, source: &MPoly<Fp>) {
    let u = parse_mrat(k, u).unwrap();
    let num = u.num.subst([&map.x, &map.y, &map.t]);
    let den = u.den.subst([&map.x, &map.y, &map.t]);
    let t = MPoly::var(k.clone(), 2);
    // u o map - t = (num.num*den.den - t*den.num*num.den) / (...)
    let lhs = num.num.mul(&den.den).sub(&t.mul(&den.num).mul(&num.den));
    assert!(
        prem_y(&lhs, source).is_zero(),
        "step {label}: parameter does not restrict to the new base coordinate"
    );
}

fn sections(k: &Fp, v: &serde_json::Value) -> Vec<Section<Fp>> {
    v.as_array()
        .unwrap()
        .iter()
        .map(|s| {
            Section::from_polys(
                t_poly(k, s["x"].as_str().unwrap()),
                t_poly(k, s["y"].as_str().unwrap()),
            )
        })
        .collect()
}

#[test]
fn recorded_sections_lie_on_their_surfaces() {
    let f = fixture();
    let k = Fp::new(f["p"].as_u64().unwrap());
    let s6 = weier_surface(&k, &f["s6"]);
    for (i, p) in sections(&k, &f["sections_s6"]).iter().enumerate() {
        assert!(is_on_curve(&s6, p), "section {i} not on first surface");
    }
    let s7 = weier_surface(&k, &f["s7"]);
    for (i, p) in sections(&k, &f["sections_s7"]).iter().enumerate() {
        assert!(is_on_curve(&s7, p), "section {i} not on second surface");
    }
}

#[test]
fn first_hop_chain_is_consistent() {
    let f = fixture();
    let k = Fp::new(f["p"].as_u64().unwrap());
    let h = &f["hop1"];
    let e6 = weier_eq(&k, &f["s6"]);
    let e7 = weier_eq(&k, &f["s7"]);
    let genus_one = eq_of(&k, &h["genus_one"]);
    let quartic = ysq_eq(&k, &h["quartic"]);
    let cubic = eq_of(&k, &h["cubic"]);
    let cubic_moved = eq_of(&k, &h["cubic_moved"]);

    let m_solve = get_map(&k, &h["map_solve"]);
    check_step("solve", &m_solve, &genus_one, &e6);
    check_parameter("solve", &k, h["parameter"].as_str().unwrap(), &m_solve, &genus_one);

    check_step("square", &get_map(&k, &h["map_square"]), &quartic, &genus_one);

    // recorded rational point lies on the quartic model
    let zp = CoordinateMap {
        x: parse_mrat(&k, h["zero_point"]["x"].as_str().unwrap()).unwrap(),
        y: parse_mrat(&k, h["zero_point"]["y"].as_str().unwrap()).unwrap(),
        t: k3aut::hopping::MRat::var(k.clone(), 2),
    };
    assert!(zp.pull_back(&quartic).is_zero(), "zero point not on quartic");

    check_step("weierstrass", &get_map(&k, &h["map_weier"]), &cubic, &quartic);
    check_step("base", &get_map(&k, &h["map_base"]), &cubic_moved, &cubic);
    check_step("minimal", &get_map(&k, &h["map_minimal"]), &e7, &cubic_moved);
}

#[test]
fn second_hop_chain_is_consistent() {
    let f = fixture();
    let k = Fp::new(f["p"].as_u64().unwrap());
    let h = &f["hop2"];
    let e7 = weier_eq(&k, &f["s7"]);
    let e8 = weier_eq(&k, &f["s8"]);
    let genus_one = eq_of(&k, &h["genus_one"]);
    let quartic = ysq_eq(&k, &h["quartic"]);
    let quartic_flipped = ysq_eq(&k, &h["quartic_flipped"]);
    let cubic = eq_of(&k, &h["cubic"]);
    let cubic_short = eq_of(&k, &h["cubic_short"]);

    let m_solve = get_map(&k, &h["map_solve"]);
    check_step("solve", &m_solve, &genus_one, &e7);
    check_parameter("solve", &k, h["parameter"].as_str().unwrap(), &m_solve, &genus_one);

    check_step("square", &get_map(&k, &h["map_square"]), &quartic, &genus_one);
    check_step("chart", &get_map(&k, &h["map_chart"]), &quartic_flipped, &quartic);

    let zp = CoordinateMap {
        x: parse_mrat(&k, h["zero_point"]["x"].as_str().unwrap()).unwrap(),
        y: parse_mrat(&k, h["zero_point"]["y"].as_str().unwrap()).unwrap(),
        t: k3aut::hopping::MRat::var(k.clone(), 2),
    };
    assert!(zp.pull_back(&quartic_flipped).is_zero(), "zero point not on quartic");

    check_step("weierstrass", &get_map(&k, &h["map_weier"]), &cubic, &quartic_flipped);
    check_step("short", &get_map(&k, &h["map_short"]), &cubic_short, &cubic);
    check_step("minimal", &get_map(&k, &h["map_minimal"]), &e8, &cubic_short);
}

#[test]
fn matching_chain_returns_to_start() {
    let f = fixture();
    let k = Fp::new(f["p"].as_u64().unwrap());
    let m = &f["matching"];
    let e8 = weier_eq(&k, &f["s8"]);
    let e6 = weier_eq(&k, &f["s6"]);
    let cubic_moved = eq_of(&k, &m["cubic_moved"]);
    check_step("base", &get_map(&k, &m["map_base"]), &cubic_moved, &e8);
    check_step("iso", &get_map(&k, &m["map_iso"]), &e6, &cubic_moved);
}
