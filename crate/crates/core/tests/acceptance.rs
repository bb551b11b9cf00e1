//! Acceptance suite: one PASS/FAIL line per criterion, in order.
//!
//! Each criterion combines direct library calls with the matching checks of
//! the verification report. A criterion that genuinely fails is printed as
//! FAIL and the test then pins down exactly what failed, so a regression in
//! either direction is caught.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use picard::group::{eval_str, pu_equal, verify_presentation, PresentationId};
use picard::handles::{build_decomposition, is_valid, validate};
use picard::isotropy::{
    abelianization, center, group_order, hom_check, iso_check, isotropy_group, named_presentation, trefoil_images,
    FiniteGroupTable,
};
use picard::polytope::{build_dstar, face_orbits, side_pairings, validate_pairing, verify_ridge_cycle};
use picard::report::{CheckResult, Config, Status};
use picard::verify::{self, reflection_properties};

struct Outcome {
    id: usize,
    pass: bool,
    note: String,
    elapsed: Duration,
}

fn checks_with_prefix<'a>(all: &'a [CheckResult], prefixes: &[&str]) -> Vec<&'a CheckResult> {
    all.iter().filter(|c| prefixes.iter().any(|p| c.id.starts_with(p))).collect()
}

/// All non-info checks under the prefixes pass, and there is at least one.
fn section_ok(all: &[CheckResult], prefixes: &[&str]) -> (bool, Vec<String>) {
    let hits = checks_with_prefix(all, prefixes);
    let bad: Vec<String> = hits.iter().filter(|c| c.status == Status::Fail).map(|c| c.id.clone()).collect();
    (!hits.is_empty() && bad.is_empty(), bad)
}

fn e(w: &str) -> picard::group::GroupElt {
    eval_str(w).expect("valid word")
}

fn run_criterion(id: usize, report: &[CheckResult], cfg: &Config) -> (bool, String) {
    match id {
        1 => {
            let mut bad = Vec::new();
            let mut n = 0;
            for p in PresentationId::ALL {
                for c in verify_presentation(p) {
                    n += 1;
                    if !c.holds {
                        bad.push(c.relator);
                    }
                }
            }
            (bad.is_empty() && n > 0, format!("{n} relators scalar, failing {bad:?}"))
        }
        2 => {
            let lhs = e("J*R1*J^-1");
            let ok = pu_equal(&lhs, &e("R*P*Q*P^-2*R")) && !pu_equal(&lhs, &e("R*P*Q^-1*P^-2*R"));
            (ok, "J R1 J^-1 ~ R P Q P^-2 R, and not ~ R P Q^-1 P^-2 R".into())
        }
        3 => (pu_equal(&e("R"), &e("(R3*R1*R2)^2")), "R vs (R3 R1 R2)^2".into()),
        4 => {
            let props = reflection_properties();
            let failing: Vec<_> = props.iter().filter(|p| !p.1).map(|p| p.0.clone()).collect();
            (props.len() == 8 && failing.is_empty(), format!("{} properties, failing {failing:?}", props.len()))
        }
        5 => {
            let (ok, bad) = section_ok(report, &["fixed-points."]);
            (ok, format!("fixed points and betweenness, failing {bad:?}"))
        }
        6 => {
            let mut orders = Vec::new();
            for p in ["w3", "w4", "w12", "z0"] {
                orders.push(isotropy_group(p, cfg.max_closure).map(|t| t.order()).unwrap_or(0));
            }
            let t12 = isotropy_group("w12", cfg.max_closure).expect("finite");
            let z2z6 = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(6));
            let (fix_ok, _) = section_ok(report, &["isotropy.fixes."]);
            let ok = orders == [3, 4, 12, 72] && t12.is_abelian() && iso_check(&t12, &z2z6) && fix_ok;
            (ok, format!("orders {orders:?}, w12 group Z2xZ6 and every element fixes its point"))
        }
        7 => {
            let t = isotropy_group("z0", cfg.max_closure).expect("finite");
            let z = center(&t);
            let (ok, bad) = section_ok(report, &["isotropy.z0.center", "isotropy.z0.quotient"]);
            (ok && z.order() == 6 && t.order() / z.order() == 12, format!("center order {}, failing {bad:?}", z.order()))
        }
        8 => {
            let n72 = group_order(&named_presentation("gamma-z0").unwrap(), cfg.max_cosets);
            let g3 = named_presentation("G").unwrap().with_relations(&["c2", "c3"]).unwrap();
            let n3 = group_order(&g3, cfg.max_cosets);
            (n72 == Ok(72) && n3 == Ok(3), format!("cosets {n72:?} and {n3:?}"))
        }
        9 => {
            let a = abelianization(&named_presentation("z2xz6").unwrap()).to_string();
            let b = abelianization(&named_presentation("trefoil").unwrap()).to_string();
            (a == "Z2 + Z6" && b == "Z6", format!("{a}; {b}"))
        }
        10 => {
            let h = hom_check(&named_presentation("trefoil").unwrap(), &trefoil_images()).expect("images given");
            (h.all_hold, format!("{:?}", h.relators))
        }
        11 => {
            let (ok, bad) = section_ok(
                report,
                &[
                    "geometry.isometric-sphere.RP.",
                    "geometry.complex-line.",
                    "geometry.triple-real.",
                    "geometry.R1-maps-triangle",
                ],
            );
            (ok, format!("failing {bad:?}"))
        }
        12 => {
            let l = build_dstar();
            let pairs = side_pairings(&l);
            let pairs_ok = pairs.len() == 3 && pairs.iter().all(|sp| validate_pairing(&l, sp).is_ok());
            let mut cyc = Vec::new();
            for k in 1..=5 {
                let r = verify_ridge_cycle(&l, k).expect("words evaluate");
                cyc.push(r.closes && r.stabilizes_setwise && r.projective_order.is_some());
            }
            (pairs_ok && cyc.iter().all(|&b| b), format!("pairings ok {pairs_ok}, cycles {cyc:?}"))
        }
        13 => {
            let l = build_dstar();
            let orbits = face_orbits(&l);
            let counts: Vec<usize> = orbits.iter().map(|d| d.len()).collect();
            let class_of = |names: &[&str]| {
                let f = l.find_face_by_names(1, names).expect("edge present");
                orbits[1].iter().position(|c| c.contains(&f))
            };
            let a = class_of(&["z0", "w12"]);
            let b = class_of(&["z1", "w12"]);
            (counts == [5, 5, 5, 3, 1] && a.is_some() && a != b, format!("classes {counts:?}"))
        }
        14 => {
            let c = build_decomposition();
            let checks = validate(&c);
            let infos = checks.iter().filter(|x| x.status == Status::Info).count();
            let fails = checks.iter().filter(|x| x.status == Status::Fail).count();
            (is_valid(&c) && fails == 0 && infos >= 1, format!("{fails} violations, {infos} info notes"))
        }
        15 => {
            let (ok, bad) = section_ok(report, &["properties."]);
            (ok, format!("failing {bad:?}"))
        }
        _ => unreachable!(),
    }
}

// Runs without the libtest harness so the per-criterion lines are never
// swallowed by output capture. Any unexpected outcome panics (nonzero exit).
fn main() {
    let cfg = Config::default();
    let t = Instant::now();
    let report: Vec<CheckResult> = verify::SECTIONS.iter().flat_map(|s| verify::run_section(s, &cfg)).collect();
    let full = t.elapsed();
    println!("acceptance: full report built in {:.2}s", full.as_secs_f64());

    let mut outcomes = Vec::new();
    for id in 1..=15 {
        let t = Instant::now();
        let (pass, note) = run_criterion(id, &report, &cfg);
        outcomes.push(Outcome { id, pass, note, elapsed: t.elapsed() });
    }
    for o in &outcomes {
        println!(
            "criterion {:>2}: {} ({:.2}s) {}",
            o.id,
            if o.pass { "PASS" } else { "FAIL" },
            o.elapsed.as_secs_f64(),
            o.note
        );
    }

    let failed: BTreeSet<usize> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    // Criterion 11 fails on exact arithmetic: z3 is outside I(RP). Pin that down
    // precisely instead of asserting a pass that does not hold.
    assert_eq!(failed, BTreeSet::from([11]), "unexpected criterion outcomes");
    let geometry_failures: Vec<&str> = report
        .iter()
        .filter(|c| c.id.starts_with("geometry.") && c.status == Status::Fail)
        .map(|c| c.id.as_str())
        .collect();
    assert_eq!(geometry_failures, ["geometry.isometric-sphere.RP.z3"]);
    let l = build_dstar();
    let z3 = &l.vertices[l.vertex_index("z3").unwrap()].lift;
    let ford = picard::polytope::ford_membership(z3, &["R*P", "(R*P)^-1"]).unwrap();
    let sides: Vec<String> =
        ford.entries.iter().map(|x| format!("{} I({})", x.side.map_or("no".into(), |s| s.to_string()), x.word)).collect();
    println!("z3 lies {}", sides.join(", "));
    assert_eq!(ford.entries[0].side, Some(picard::geom::FordSide::Exterior));

    assert!(full < Duration::from_secs(600), "full report took {full:?}");
    for o in &outcomes {
        assert!(o.elapsed < Duration::from_secs(60), "criterion {} took {:?}", o.id, o.elapsed);
    }
    println!("acceptance: 14 of 15 criteria pass; criterion 11 fails on z3 as recorded");
}
