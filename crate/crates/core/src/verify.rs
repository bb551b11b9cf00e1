//! The verification ledger: every check grouped by section.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::field::{sign_real_with, CycNum, RealCyc, Sign, SignConfig, DEGREE};
use crate::geom::{bergman_cosh2, ford_side, lift, named_point, on_geodesic_between, HoroPoint};
use crate::group::{
    classify, complex_reflection, element_order, eval_str, fixed_point_elliptic, pu_equal, verify_presentation, Gen,
    GroupElt, IsometryType, PresentationId,
};
use crate::handles::{build_decomposition, cw_euler_oracle, euler_characteristic, pi1_presentation, validate, HandleKind};
use crate::isotropy::{
    abelianization, center, common_fixed_point, gamma_z0_images, group_order, hom_check, iso_check,
    isotropy_group, matrix_group_vs_presentation, named_presentation, presented_table, quotient, singular_orders,
    todd_coxeter, trefoil_images, FiniteGroupTable, IsotropyError, ISOTROPY_POINTS,
};
use crate::linalg::HVector;
use crate::polytope::{
    build_dstar, check_lattice, face_orbits, finite_vertices_negative, side_pairings, validate_geometry,
    validate_pairing, verify_ridge_cycle,
};
use crate::report::{CheckResult, Config, Report, Status};
use crate::word::Letters;

pub const SECTIONS: [&str; 8] =
    ["relations", "fixed-points", "isotropy", "cycles", "orbits", "geometry", "handles", "properties"];

/// Run the named section ("all" runs every section in canonical order).
pub fn run(section: &str, cfg: &Config) -> Option<Report> {
    let names: Vec<&str> = if section == "all" {
        SECTIONS.to_vec()
    } else if SECTIONS.contains(&section) {
        vec![section]
    } else {
        return None;
    };
    let checks = names.iter().flat_map(|s| run_section(s, cfg)).collect();
    Some(Report::new(*cfg, checks))
}

pub fn run_section(section: &str, cfg: &Config) -> Vec<CheckResult> {
    match section {
        "relations" => relations(),
        "fixed-points" => fixed_points(),
        "isotropy" => isotropy(cfg),
        "cycles" => cycles(),
        "orbits" => orbits(),
        "geometry" => geometry(),
        "handles" => handles(cfg),
        "properties" => properties(cfg),
        _ => Vec::new(),
    }
}

fn e(w: &str) -> GroupElt {
    eval_str(w).expect("built-in word")
}

fn pt(n: &str) -> HVector {
    named_point(n).expect("built-in point")
}

fn fixes(w: &str, p: &str) -> bool {
    e(w).fixes_projectively(&pt(p)).unwrap_or(false)
}

fn maps(w: &str, a: &str, b: &str) -> bool {
    e(w).apply(&pt(a)).proportional(&pt(b))
}

/// The eight listed properties of the generating reflections.
pub fn reflection_properties() -> Vec<(String, bool)> {
    let r2 = e("R2");
    let r3r1r3 = e("R3*R1*R3^-1");
    vec![
        (
            "R1 fixes z0, z3, qinf and maps z1 to z2".into(),
            fixes("R1", "z0") && fixes("R1", "z3") && fixes("R1", "qinf") && maps("R1", "z1", "z2"),
        ),
        ("R2 fixes z1".into(), fixes("R2", "z1")),
        ("R3 fixes z2 and qinf".into(), fixes("R3", "z2") && fixes("R3", "qinf")),
        ("R2 R3 R2^-1 fixes z0".into(), fixes("R2*R3*R2^-1", "z0")),
        ("R3 R1 R3^-1 fixes z1 and qinf".into(), fixes("R3*R1*R3^-1", "z1") && fixes("R3*R1*R3^-1", "qinf")),
        ("R1 R2 R1^-1 fixes z2".into(), fixes("R1*R2*R1^-1", "z2")),
        ("R2 and R3 R1 R3^-1 commute".into(), pu_equal(&r2.mul(&r3r1r3), &r3r1r3.mul(&r2))),
        (
            "R swaps z0 and z3 and fixes z1, z2".into(),
            maps("R", "z0", "z3") && maps("R", "z3", "z0") && fixes("R", "z1") && fixes("R", "z2"),
        ),
    ]
}

fn relations() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for g in Gen::ALL {
        out.push(CheckResult::check(
            format!("relations.unitary.{}", g.name()),
            g.matrix().is_h_unitary(),
            format!("{} preserves the Hermitian form", g.name()),
        ));
    }
    for id in PresentationId::ALL {
        for (k, c) in verify_presentation(id).into_iter().enumerate() {
            let residual = c.residual.as_ref().map(|r| r.to_string());
            out.push(
                CheckResult::check(
                    format!("relations.{}.{}", id.name(), k + 1),
                    c.holds,
                    format!("{} is scalar", c.relator),
                )
                .with_witness(json!({ "relator": c.relator, "scalar": residual })),
            );
        }
    }
    out.push(CheckResult::check(
        "relations.JR1J.form-a",
        pu_equal(&e("J*R1*J^-1"), &e("R*P*Q*P^-2*R")),
        "J R1 J^-1 = R P Q P^-2 R up to scalar",
    ));
    out.push(CheckResult::check(
        "relations.JR1J.form-b",
        !pu_equal(&e("J*R1*J^-1"), &e("R*P*Q^-1*P^-2*R")),
        "J R1 J^-1 differs from R P Q^-1 P^-2 R",
    ));
    out.push(CheckResult::check(
        "relations.R-square.R3R1R2",
        pu_equal(&e("R"), &e("(R3*R1*R2)^2")),
        "R = (R3 R1 R2)^2 up to scalar",
    ));
    out.push(CheckResult::check(
        "relations.R-square.JR1J",
        pu_equal(&e("R"), &e("(J*R1^-1*J)^2")),
        "R = (J R1^-1 J)^2 up to scalar",
    ));
    for (k, (text, ok)) in reflection_properties().into_iter().enumerate() {
        out.push(CheckResult::check(format!("relations.reflection.{}", k + 1), ok, text));
    }
    for (g, n) in [("R1", "n1"), ("R2", "n2"), ("R3", "n3")] {
        let ok = complex_reflection(&pt(n), 6).is_ok_and(|r| pu_equal(&r, &e(g)));
        out.push(CheckResult::check(
            format!("relations.polar.{g}"),
            ok,
            format!("the order-6 reflection with polar {n} equals {g}"),
        ));
    }
    out
}

fn fixed_points() -> Vec<CheckResult> {
    let mut out = Vec::new();
    for (w, p) in [("J", "w3"), ("R1*R2*R3", "w4")] {
        let got = fixed_point_elliptic(&e(w));
        let ok = got.as_ref().is_ok_and(|v| v.proportional(&pt(p)));
        out.push(
            CheckResult::check(format!("fixed-points.{p}"), ok, format!("fixed point of {w} is {p}"))
                .with_witness(json!({ "computed": got.map(|v| v.to_string()).unwrap_or_else(|e| e.to_string()) })),
        );
        let kind = classify(&e(w));
        out.push(CheckResult::check(
            format!("fixed-points.{p}.type"),
            kind == Ok(IsometryType::RegularElliptic),
            match &kind {
                Ok(k) => format!("{w} is {k}"),
                Err(err) => format!("{w}: {err}"),
            },
        ));
    }
    for w in ["P*Q^-1", "R"] {
        out.push(CheckResult::check(format!("fixed-points.w12.{w}"), fixes(w, "w12"), format!("{w} fixes w12")));
    }
    for (mid, a, b) in [("w4", "z0", "z2"), ("w12", "z0", "z3")] {
        let ok = on_geodesic_between(&pt(a), &pt(mid), &pt(b)).unwrap_or(false);
        out.push(CheckResult::check(
            format!("fixed-points.between.{mid}"),
            ok,
            format!("{mid} lies on the geodesic [{a},{b}]"),
        ));
    }
    out
}

fn table_for(name: &str, cfg: &Config) -> Result<FiniteGroupTable, IsotropyError> {
    isotropy_group(name, cfg.max_closure)
}

fn isotropy(cfg: &Config) -> Vec<CheckResult> {
    let mut out = Vec::new();
    let mut tables = BTreeMap::new();
    for p in ISOTROPY_POINTS {
        match table_for(p.name, cfg) {
            Ok(t) => {
                out.push(
                    CheckResult::check(
                        format!("isotropy.order.{}", p.name),
                        t.order() == p.expected_order,
                        format!("<{}> has order {} (expected {})", p.generators.join(", "), t.order(), p.expected_order),
                    )
                    .with_witness(json!({ "order": t.order() })),
                );
                let fixed = common_fixed_point(&t, &pt(p.name)).unwrap_or(false);
                out.push(CheckResult::check(
                    format!("isotropy.fixes.{}", p.name),
                    fixed,
                    format!("every element fixes {}", p.name),
                ));
                tables.insert(p.name, t);
            }
            Err(err) => out.push(CheckResult::check(format!("isotropy.order.{}", p.name), false, err.to_string())),
        }
    }
    if let Some(t) = tables.get("w4") {
        let ok = (0..t.order()).all(|a| 4 % t.element_order(a) == 0);
        out.push(CheckResult::check("isotropy.w4.exponent", ok, "every element of the w4 group has order dividing 4"));
    }
    if let Some(t) = tables.get("w12") {
        let z2z6 = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(6));
        out.push(CheckResult::check("isotropy.w12.abelian", t.is_abelian(), "P Q^-1 and R commute"));
        out.push(CheckResult::check("isotropy.w12.structure", iso_check(t, &z2z6), "the w12 group is Z2 x Z6"));
        if let Some(r) = t.find_rep(&e("R")) {
            let q = quotient(t, &[r]);
            out.push(CheckResult::check(
                "isotropy.w12.quotient",
                q.order() == 6 && iso_check(&q, &FiniteGroupTable::cyclic(6)),
                format!("quotient by <R> has order {} and is cyclic", q.order()),
            ));
        }
    }
    if let Some(t) = tables.get("z0") {
        let z = center(t);
        let c2 = t.find_rep(&e("(R2*J^2)^2"));
        let generated = c2.is_some_and(|c| t.generated(&[c]) == t.center_indices());
        out.push(
            CheckResult::check(
                "isotropy.z0.center",
                z.order() == 6 && generated,
                format!("center has order {} and is generated by (R2 J^2)^2", z.order()),
            )
            .with_witness(json!({ "center_order": z.order() })),
        );
        if let Some(c) = c2 {
            let q = quotient(t, &[c]);
            out.push(CheckResult::check(
                "isotropy.z0.quotient",
                q.order() == 12 && !q.is_abelian() && iso_check(&q, &FiniteGroupTable::dihedral(6)),
                format!("quotient by the center has order {}, dihedral", q.order()),
            ));
        }
        let gz0 = named_presentation("gamma-z0").expect("built-in");
        let hom = hom_check(&gz0, &gamma_z0_images());
        out.push(CheckResult::check(
            "isotropy.z0.hom",
            hom.as_ref().is_ok_and(|h| h.all_hold),
            "a -> R1, b -> R2 R3 R2^-1, c -> R2 J^2 satisfies every relator",
        ));
        let iso = matrix_group_vs_presentation(t, &gz0, &gamma_z0_images(), cfg.max_cosets);
        out.push(CheckResult::check(
            "isotropy.z0.presentation",
            iso == Ok(true),
            format!("the stabilizer of z0 is presented by {gz0}"),
        ));
        let gc = named_presentation("G-central").expect("built-in");
        let iso = presented_table(&gc, cfg.max_cosets).map(|a| (a.order(), iso_check(&a, t)));
        out.push(CheckResult::check(
            "isotropy.G.central",
            iso == Ok((72, true)),
            match &iso {
                Ok((n, same)) => format!("G with h central has order {n}; isomorphic to the z0 group: {same}"),
                Err(err) => format!("G with h central: {err}"),
            },
        ));
    }
    let gz0 = named_presentation("gamma-z0").expect("built-in");
    let n = group_order(&gz0, cfg.max_cosets);
    out.push(CheckResult::check(
        "isotropy.tc.gamma-z0",
        n == Ok(72),
        format!("coset enumeration gives {}", show(&n)),
    ));
    let g = named_presentation("G").expect("built-in");
    let g3 = g.with_relations(&["c2", "c3"]).expect("built-in");
    let n = group_order(&g3, cfg.max_cosets);
    out.push(CheckResult::check(
        "isotropy.tc.G-c2-c3",
        n == Ok(3),
        format!("G with c2 = c3 = 1 has order {}", show(&n)),
    ));
    if let Ok(3) = n {
        let t3 = presented_table(&g3, cfg.max_cosets).expect("enumerated above");
        out.push(CheckResult::check(
            "isotropy.tc.G-c2-c3.cyclic",
            iso_check(&t3, &FiniteGroupTable::cyclic(3)),
            "that group is Z3",
        ));
    }
    let n = group_order(&g, cfg.max_cosets);
    out.push(CheckResult::info(
        "isotropy.tc.G-as-written",
        format!(
            "G without a centrality relation for h: {}; with h central it has order 72 (isotropy.G.central)",
            show(&n)
        ),
    ));
    let ab = abelianization(&named_presentation("z2xz6").expect("built-in"));
    out.push(CheckResult::check(
        "isotropy.abelianization.z2xz6",
        ab.free_rank == 0 && ab.torsion == [2.into(), 6.into()],
        format!("abelianization {ab}"),
    ));
    let trefoil = named_presentation("trefoil").expect("built-in");
    let ab = abelianization(&trefoil);
    out.push(CheckResult::check(
        "isotropy.abelianization.trefoil",
        ab.free_rank == 0 && ab.torsion == [6.into()],
        format!("abelianization {ab}"),
    ));
    let hom = hom_check(&trefoil, &trefoil_images());
    out.push(CheckResult::check(
        "isotropy.trefoil.hom",
        hom.as_ref().is_ok_and(|h| h.all_hold),
        "x -> P Q^-1, y -> Q^-1 P satisfies x^6 and x y x = y x y",
    ));
    let idx = todd_coxeter(&trefoil, &[Letters::single("x", 1)], cfg.max_cosets.min(20_000)).map(|t| t.index());
    out.push(CheckResult::info(
        "isotropy.trefoil.index",
        format!("index of <x> in the trefoil orbifold group: {}", show(&idx)),
    ));
    for p in ISOTROPY_POINTS {
        if let Some(t) = tables.get(p.name) {
            out.push(
                CheckResult::info(
                    format!("isotropy.singular-loci.{}", p.name),
                    format!("reflection mirror orbits through {} have orders {:?}", p.name, singular_orders(t, &pt(p.name))),
                )
                .with_witness(json!(singular_orders(t, &pt(p.name)))),
            );
        }
    }
    out
}

fn show<T: std::fmt::Debug>(r: &Result<T, IsotropyError>) -> String {
    match r {
        Ok(v) => format!("{v:?}"),
        Err(e) => e.to_string(),
    }
}

fn cycles() -> Vec<CheckResult> {
    let l = build_dstar();
    let mut out = Vec::new();
    for sp in side_pairings(&l) {
        let res = validate_pairing(&l, &sp);
        out.push(CheckResult::check(
            format!("cycles.pairing.{}", sp.word),
            res.is_ok(),
            match res {
                Ok(()) => format!("{} maps {} onto {}", sp.word, l.faces[3][sp.source].name, l.faces[3][sp.target].name),
                Err(e) => e,
            },
        ));
    }
    for id in 1..=5 {
        match verify_ridge_cycle(&l, id) {
            Ok(r) => {
                let ok = r.closes && r.stabilizes_setwise && r.projective_order.is_some();
                let detail = match &r.mismatch {
                    Some(m) => m.clone(),
                    None => format!(
                        "closes; transformation {} has order {}; fixes the ridge pointwise: {}",
                        r.transformation,
                        r.projective_order.map_or("unbounded".to_string(), |n| n.to_string()),
                        r.fixes_pointwise
                    ),
                };
                let witness = serde_json::to_value(&r).expect("serializable");
                out.push(CheckResult::check(format!("cycles.{id}"), ok, detail).with_witness(witness));
            }
            Err(err) => out.push(CheckResult::check(format!("cycles.{id}"), false, err.to_string())),
        }
    }
    out
}

fn orbits() -> Vec<CheckResult> {
    let l = build_dstar();
    let o = face_orbits(&l);
    let counts: Vec<usize> = o.iter().map(Vec::len).collect();
    let named: Vec<Vec<Vec<&str>>> = o
        .iter()
        .enumerate()
        .map(|(d, classes)| classes.iter().map(|c| c.iter().map(|&i| l.faces[d][i].name.as_str()).collect()).collect())
        .collect();
    let a = l.find_face_by_names(1, &["z0", "w12"]);
    let b = l.find_face_by_names(1, &["z1", "w12"]);
    let apart = match (a, b) {
        (Some(a), Some(b)) => !o[1].iter().any(|c| c.contains(&a) && c.contains(&b)),
        _ => false,
    };
    vec![
        CheckResult::check("orbits.counts", counts == [5, 5, 5, 3, 1], format!("classes per dimension {counts:?}"))
            .with_witness(json!(named)),
        CheckResult::check("orbits.edges-distinct", apart, "[z0,w12] and [z1,w12] lie in different classes"),
    ]
}

fn geometry() -> Vec<CheckResult> {
    let l = build_dstar();
    let mut out = Vec::new();
    let problems = check_lattice(&l);
    out.push(CheckResult::check(
        "geometry.lattice",
        problems.is_empty() && l.counts() == [13, 24, 17, 6, 1],
        if problems.is_empty() { format!("face counts {:?}", l.counts()) } else { problems.join("; ") },
    ));
    out.push(CheckResult::check(
        "geometry.vertices",
        finite_vertices_negative(&l),
        "finite vertices are negative, qinf is null",
    ));
    for c in validate_geometry(&l) {
        out.push(CheckResult::check(format!("geometry.{}", c.id), c.pass, c.detail));
    }
    for z in ["z0", "z1", "z2", "z3"] {
        let sides: Vec<String> = ["R", "P*R", "(R*P)^-1"]
            .iter()
            .map(|w| match ford_side(&pt(z), &e(w)) {
                Ok(s) => format!("{s} I({w})"),
                Err(err) => format!("I({w}): {err}"),
            })
            .collect();
        out.push(CheckResult::info(format!("geometry.isometric-sphere.other.{z}"), sides.join(", ")));
    }
    out
}

fn handles(cfg: &Config) -> Vec<CheckResult> {
    let c = build_decomposition();
    let mut out = Vec::new();
    out.push(CheckResult::check("handles.count", c.attachments.len() == 10, format!("{} attachments", c.attachments.len())));
    for v in validate(&c) {
        out.push(CheckResult::new(format!("handles.{}", v.id), v.status, v.detail));
    }
    let chi = euler_characteristic(&c);
    let oracle = cw_euler_oracle(&build_dstar());
    out.push(CheckResult::check(
        "handles.euler",
        chi == oracle,
        format!("Euler characteristic {chi}; cell count over finite face classes {oracle}"),
    ));
    match pi1_presentation(&c, &BTreeMap::new()) {
        Ok(p) => {
            let ab = abelianization(&p.presentation);
            out.push(
                CheckResult::check(
                    "handles.pi1",
                    ab.free_rank == p.legend.len(),
                    format!("with empty attaching words the underlying space has abelianized pi1 {ab}"),
                )
                .with_witness(json!({ "presentation": p.presentation.to_string(), "legend": p.legend })),
            );
        }
        Err(err) => out.push(CheckResult::check("handles.pi1", false, err.to_string())),
    }
    for (handle, point) in [("h(w3)", "w3"), ("h(w4)", "w4"), ("h(w12)", "w12"), ("h(z0)", "z0")] {
        let shipped = match c.find(handle).map(|a| &a.handle.kind) {
            Some(HandleKind::Orbifold0 { singular_loci, .. }) => singular_loci.clone(),
            _ => Vec::new(),
        };
        let derived = table_for(point, cfg).map(|t| singular_orders(&t, &pt(point)));
        let derived: Vec<u32> = derived.map(|v| v.into_iter().map(|x| x as u32).collect()).unwrap_or_default();
        out.push(CheckResult::check(
            format!("handles.loci.{point}"),
            shipped == derived,
            format!("{handle} carries loci {shipped:?}; the isotropy group gives {derived:?}"),
        ));
    }
    out
}

/// Random element of Q(ζ₃₆) with small rational coefficients.
pub fn random_cyc(rng: &mut impl Rng) -> CycNum {
    let coeffs: Vec<num_rational::BigRational> = (0..DEGREE)
        .map(|_| {
            if rng.gen_bool(0.5) {
                num_rational::BigRational::from_integer(0.into())
            } else {
                num_rational::BigRational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=4).into())
            }
        })
        .collect();
    CycNum::from_rational_coeffs(&coeffs)
}

/// Random point of the ball, lifted from horospherical coordinates.
pub fn random_negative(rng: &mut impl Rng) -> HVector {
    let z = CycNum::from_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))
        + &(&CycNum::from_frac(rng.gen_range(-5..=5), rng.gen_range(1..=3)) * &crate::field::omega());
    let t = RealCyc::new(CycNum::from_frac(rng.gen_range(-8..=8), rng.gen_range(1..=3))).expect("rational");
    let u = RealCyc::new(CycNum::from_frac(rng.gen_range(1..=9), rng.gen_range(1..=4))).expect("rational");
    lift(&HoroPoint::new(z, t, u).expect("positive height"))
}

pub fn field_axioms(seed: u64, cases: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..cases {
        let (a, b, c) = (random_cyc(&mut rng), random_cyc(&mut rng), random_cyc(&mut rng));
        let mut ok = &(&a + &b) + &c == &a + &(&b + &c)
            && &a * &b == &b * &a
            && &(&a * &b) * &c == &a * &(&b * &c)
            && &a * &(&b + &c) == &(&a * &b) + &(&a * &c)
            && &(&a + &b) - &b == a
            && (&a * &b).conj() == &a.conj() * &b.conj();
        if !a.is_zero() {
            ok &= a.inv().is_ok_and(|i| (&a * &i).is_one());
        }
        failures += usize::from(!ok);
    }
    failures
}

pub fn sign_agreement(seed: u64, cases: usize, start_bits: u32) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = SignConfig { start_bits, ..SignConfig::default() };
    let mut failures = 0;
    for _ in 0..cases {
        let a = random_cyc(&mut rng);
        let x = &a + &a.conj();
        let f = x.to_f64_pair().0;
        let ok = match sign_real_with(&x, cfg) {
            Ok(Sign::Zero) => x.is_zero(),
            Ok(Sign::Positive) => f > -1e-9,
            Ok(Sign::Negative) => f < 1e-9,
            Err(_) => false,
        };
        failures += usize::from(!ok);
    }
    failures
}

pub fn bergman_invariance(seed: u64, cases: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = 0;
    for _ in 0..cases {
        let (u, v) = (random_negative(&mut rng), random_negative(&mut rng));
        let base = bergman_cosh2(&u, &v);
        for g in Gen::ALL {
            let m = g.matrix();
            let moved = bergman_cosh2(&m.apply(&u), &m.apply(&v));
            if base.is_err() || moved != base {
                failures += 1;
                break;
            }
        }
    }
    failures
}

fn properties(cfg: &Config) -> Vec<CheckResult> {
    let f = field_axioms(cfg.seed, 1000);
    let s = sign_agreement(cfg.seed.wrapping_add(1), 1000, cfg.precision_bits);
    let b = bergman_invariance(cfg.seed.wrapping_add(2), 100);
    vec![
        CheckResult::check("properties.field-axioms", f == 0, format!("1000 seeded cases, {f} failures")),
        CheckResult::check("properties.sign-vs-float", s == 0, format!("1000 seeded cases, {s} disagreements")),
        CheckResult::check(
            "properties.bergman-invariance",
            b == 0,
            format!("100 seeded pairs under every generator, {b} failures"),
        ),
    ]
}

/// Order of a word's projective class, for the CLI.
pub fn word_order(w: &str, cap: u64) -> Result<u64, crate::group::GroupError> {
    element_order(&eval_str(w)?, cap)
}

/// Statuses for quick inspection.
pub fn failures(r: &Report) -> Vec<&CheckResult> {
    r.checks.iter().filter(|c| c.status == Status::Fail).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_section() {
        assert!(run("nope", &Config::default()).is_none());
    }

    #[test]
    fn relations_section_passes() {
        let checks = run_section("relations", &Config::default());
        assert!(checks.iter().all(|c| c.status == Status::Pass), "{:?}", checks.iter().find(|c| c.status != Status::Pass));
        assert_eq!(reflection_properties().len(), 8);
    }

    #[test]
    fn properties_small() {
        assert_eq!(field_axioms(1, 50), 0);
        assert_eq!(sign_agreement(2, 50, 64), 0);
        assert_eq!(bergman_invariance(3, 5), 0);
    }
}
