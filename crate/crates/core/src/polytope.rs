//! The subdivided fundamental polytope: named vertices with exact lifts,
//! its face lattice, side-pairings, ridge cycles and face classes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::field::Sign;
use crate::geom::{
    common_complex_line, ford_side, herm, named_point, on_geodesic_between, triple_product_is_real, FordSide,
    GeomError,
};
use crate::group::{eval_str, parse_word, GroupElt, GroupError, Word};
use crate::linalg::HVector;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedVertex {
    pub name: String,
    pub lift: HVector,
    pub finite: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Face {
    pub dim: usize,
    pub name: String,
    pub principal: Vec<usize>,
    pub decorations: Vec<usize>,
}

impl Face {
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.principal.iter().chain(&self.decorations).copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FaceLattice {
    pub vertices: Vec<NamedVertex>,
    /// faces[k] lists the k-dimensional faces.
    pub faces: Vec<Vec<Face>>,
}

/// Vertex names and the words carrying a base point onto them.
const VERTICES: [(&str, &str, &str); 13] = [
    ("qinf", "Id", "qinf"),
    ("z0", "Id", "z0"),
    ("z1", "Id", "z1"),
    ("z2", "Id", "z2"),
    ("z3", "Id", "z3"),
    ("w3", "Id", "w3"),
    ("P(w3)", "P", "w3"),
    ("w4", "Id", "w4"),
    ("J(w4)", "J", "w4"),
    ("PJ(w4)", "P*J", "w4"),
    ("P2J(w4)", "P^2*J", "w4"),
    ("P(w4)", "P", "w4"),
    ("w12", "Id", "w12"),
];

/// (principal vertices, decorations)
type FaceSpec = (&'static [&'static str], &'static [&'static str]);

const EDGES: [FaceSpec; 24] = [
    (&["z0", "qinf"], &[]),
    (&["z1", "qinf"], &[]),
    (&["z2", "qinf"], &[]),
    (&["z3", "qinf"], &[]),
    (&["z0", "w4"], &[]),
    (&["w4", "z2"], &[]),
    (&["z0", "J(w4)"], &[]),
    (&["J(w4)", "z1"], &[]),
    (&["z1", "PJ(w4)"], &[]),
    (&["PJ(w4)", "z2"], &[]),
    (&["z2", "P2J(w4)"], &[]),
    (&["P2J(w4)", "z3"], &[]),
    (&["z1", "P(w4)"], &[]),
    (&["P(w4)", "z3"], &[]),
    (&["z0", "w12"], &[]),
    (&["w12", "z3"], &[]),
    (&["z2", "w12"], &[]),
    (&["z1", "w12"], &[]),
    (&["w3", "w4"], &[]),
    (&["w3", "J(w4)"], &[]),
    (&["w3", "PJ(w4)"], &[]),
    (&["P(w3)", "P(w4)"], &[]),
    (&["P(w3)", "PJ(w4)"], &[]),
    (&["P(w3)", "P2J(w4)"], &[]),
];

const RIDGES: [FaceSpec; 17] = [
    (&["qinf", "z0", "z1"], &["J(w4)"]),
    (&["qinf", "z0", "z2"], &["w4"]),
    (&["qinf", "z0", "z3"], &["w12"]),
    (&["qinf", "z1", "z2"], &["PJ(w4)"]),
    (&["qinf", "z1", "z3"], &["P(w4)"]),
    (&["qinf", "z2", "z3"], &["P2J(w4)"]),
    (&["z2", "w4", "w3", "PJ(w4)"], &[]),
    (&["z0", "J(w4)", "w3", "w4"], &[]),
    (&["z1", "PJ(w4)", "w3", "J(w4)"], &[]),
    (&["z3", "P(w4)", "P(w3)", "P2J(w4)"], &[]),
    (&["z1", "PJ(w4)", "P(w3)", "P(w4)"], &[]),
    (&["z2", "P2J(w4)", "P(w3)", "PJ(w4)"], &[]),
    (&["z0", "z2", "w12"], &["w4"]),
    (&["z3", "z2", "w12"], &["P2J(w4)"]),
    (&["z0", "z1", "w12"], &["J(w4)"]),
    (&["z3", "z1", "w12"], &["P(w4)"]),
    (&["z1", "z2", "w12"], &["PJ(w4)"]),
];

const THREE_FACES: [FaceSpec; 6] = [
    (&["qinf", "z0", "z1", "z2"], &["w3", "w4", "J(w4)", "PJ(w4)"]),
    (&["qinf", "z1", "z2", "z3"], &["P(w3)", "P(w4)", "PJ(w4)", "P2J(w4)"]),
    (&["qinf", "z0", "z2", "z3"], &["w4", "P2J(w4)", "w12"]),
    (&["qinf", "z0", "z1", "z3"], &["J(w4)", "P(w4)", "w12"]),
    (&["w12", "z0", "z1", "z2"], &["w3", "w4", "J(w4)", "PJ(w4)"]),
    (&["w12", "z3", "z1", "z2"], &["P(w3)", "P2J(w4)", "P(w4)", "PJ(w4)"]),
];

fn bracket(names: &[&str], decorations: &[&str]) -> String {
    let mut s = names.join(",");
    if !decorations.is_empty() {
        s.push_str(&format!(",({})", decorations.join(",")));
    }
    format!("[{s}]")
}

impl FaceLattice {
    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v.name == name)
    }

    pub fn vertex_names(&self, set: &BTreeSet<usize>) -> Vec<&str> {
        set.iter().map(|&i| self.vertices[i].name.as_str()).collect()
    }

    /// The face of dimension `dim` whose full vertex set is exactly `set`.
    pub fn find_face(&self, dim: usize, set: &BTreeSet<usize>) -> Option<usize> {
        self.faces.get(dim)?.iter().position(|f| &f.vertex_set() == set)
    }

    pub fn find_face_by_names(&self, dim: usize, names: &[&str]) -> Option<usize> {
        let set = names.iter().map(|n| self.vertex_index(n)).collect::<Option<BTreeSet<_>>>()?;
        self.find_face(dim, &set)
    }

    pub fn counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    /// Pairs ((k-1)-face, k-face) where the first is contained in the second.
    pub fn incidences(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for k in 1..self.faces.len() {
            for (j, big) in self.faces[k].iter().enumerate() {
                let bs = big.vertex_set();
                for (i, small) in self.faces[k - 1].iter().enumerate() {
                    if small.vertex_set().is_subset(&bs) {
                        out.push((k, i, j));
                    }
                }
            }
        }
        out
    }

    /// Index of the vertex projectively equal to `v`.
    pub fn locate(&self, v: &HVector) -> Option<usize> {
        self.vertices.iter().position(|w| w.lift.proportional(v))
    }

    /// Images of the vertices in `set` under `g`, when all are named vertices.
    pub fn image_set(&self, g: &GroupElt, set: &BTreeSet<usize>) -> Result<BTreeSet<usize>, String> {
        set.iter()
            .map(|&i| {
                let v = &self.vertices[i];
                self.locate(&g.apply(&v.lift))
                    .ok_or_else(|| format!("image of {} is not a named vertex", v.name))
            })
            .collect()
    }
}

fn face_from_spec(dim: usize, fs: &FaceSpec, index: &BTreeMap<&str, usize>) -> Face {
    Face {
        dim,
        name: bracket(fs.0, fs.1),
        principal: fs.0.iter().map(|n| index[n]).collect(),
        decorations: fs.1.iter().map(|n| index[n]).collect(),
    }
}

pub fn build_dstar() -> FaceLattice {
    let vertices: Vec<NamedVertex> = VERTICES
        .iter()
        .map(|(name, word, base)| {
            let g = eval_str(word).expect("built-in word");
            let lift = g.apply(&named_point(base).expect("built-in point")).normalized();
            NamedVertex { name: name.to_string(), lift, finite: *name != "qinf" }
        })
        .collect();
    let index: BTreeMap<&str, usize> = VERTICES.iter().enumerate().map(|(i, v)| (v.0, i)).collect();
    let dim0 = VERTICES
        .iter()
        .map(|v| Face { dim: 0, name: format!("[{}]", v.0), principal: vec![index[v.0]], decorations: vec![] })
        .collect();
    let all: Vec<&str> = VERTICES.iter().map(|v| v.0).collect();
    let four = Face {
        dim: 4,
        name: bracket(&["z0", "z1", "z2", "z3", "qinf"], &[]),
        principal: ["z0", "z1", "z2", "z3", "qinf"].iter().map(|n| index[n]).collect(),
        decorations: all
            .iter()
            .filter(|n| !["z0", "z1", "z2", "z3", "qinf"].contains(n))
            .map(|n| index[n])
            .collect(),
    };
    FaceLattice {
        vertices,
        faces: vec![
            dim0,
            EDGES.iter().map(|s| face_from_spec(1, s, &index)).collect(),
            RIDGES.iter().map(|s| face_from_spec(2, s, &index)).collect(),
            THREE_FACES.iter().map(|s| face_from_spec(3, s, &index)).collect(),
            vec![four],
        ],
    }
}

/// Combinatorial sanity of the lattice: the boundary is a closed 3-manifold
/// (each ridge in exactly two 3-faces, Euler characteristic 0) and every
/// k-face has enough (k-1)-faces.
pub fn check_lattice(l: &FaceLattice) -> Vec<String> {
    let mut problems = Vec::new();
    let inc = l.incidences();
    for (j, f) in l.faces[2].iter().enumerate() {
        let n = inc.iter().filter(|&&(k, i, _)| k == 3 && i == j).count();
        if n != 2 {
            problems.push(format!("ridge {} lies in {n} 3-faces", f.name));
        }
    }
    for k in 1..l.faces.len() {
        for (j, f) in l.faces[k].iter().enumerate() {
            let n = inc.iter().filter(|&&(kk, _, jj)| kk == k && jj == j).count();
            if n < k + 1 {
                problems.push(format!("{} has only {n} faces of dimension {}", f.name, k - 1));
            }
        }
    }
    let c = l.counts();
    let chi = c[0] as i64 - c[1] as i64 + c[2] as i64 - c[3] as i64;
    if chi != 0 {
        problems.push(format!("boundary Euler characteristic {chi}"));
    }
    problems
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeometryCheck {
    pub id: String,
    pub pass: bool,
    pub detail: String,
}

fn lift_of<'a>(l: &'a FaceLattice, name: &str) -> &'a HVector {
    &l.vertices[l.vertex_index(name).expect("lattice vertex")].lift
}

/// Geometric checks on the lattice's vertex coordinates.
pub fn validate_geometry(l: &FaceLattice) -> Vec<GeometryCheck> {
    let mut out = Vec::new();
    let mut push = |id: String, res: Result<bool, String>, ok_detail: String| {
        let (pass, detail) = match res {
            Ok(true) => (true, ok_detail),
            Ok(false) => (false, format!("failed: {ok_detail}")),
            Err(e) => (false, e),
        };
        out.push(GeometryCheck { id, pass, detail });
    };
    for (mid, a, b) in [
        ("w4", "z0", "z2"),
        ("w12", "z0", "z3"),
        ("J(w4)", "z0", "z1"),
        ("PJ(w4)", "z1", "z2"),
        ("P2J(w4)", "z2", "z3"),
        ("P(w4)", "z1", "z3"),
    ] {
        let res = on_geodesic_between(lift_of(l, a), lift_of(l, mid), lift_of(l, b)).map_err(|e| e.to_string());
        push(format!("between.{mid}"), res, format!("{mid} on the geodesic [{a},{b}]"));
    }
    let line = common_complex_line(&[lift_of(l, "z0").clone(), lift_of(l, "z3").clone(), lift_of(l, "qinf").clone()]);
    let n1 = named_point("n1").expect("polar");
    push(
        "complex-line.z0-z3-qinf".into(),
        Ok(line.as_ref().is_some_and(|p| p.proportional(&n1))),
        format!("polar {}", line.map_or("none".into(), |p| p.normalized().to_string())),
    );
    for third in ["z1", "z2"] {
        let res = triple_product_is_real(lift_of(l, "z0"), lift_of(l, "z3"), lift_of(l, third))
            .map_err(|e| e.to_string());
        push(format!("triple-real.z0-z3-{third}"), res, format!("<z0,z3><z3,{third}><{third},z0> is real"));
    }
    let r1 = eval_str("R1").expect("generator");
    let src: BTreeSet<usize> = ["z0", "z3", "z1"].iter().map(|n| l.vertex_index(n).expect("vertex")).collect();
    let dst: BTreeSet<usize> = ["z0", "z3", "z2"].iter().map(|n| l.vertex_index(n).expect("vertex")).collect();
    let img = l.image_set(&r1, &src);
    push(
        "R1-maps-triangle".into(),
        img.as_ref().map(|s| s == &dst).map_err(Clone::clone),
        "R1{z0,z3,z1} = {z0,z3,z2}".into(),
    );
    let rp = eval_str("R*P").expect("word");
    for z in ["z0", "z1", "z2", "z3"] {
        let side = ford_side(lift_of(l, z), &rp);
        push(
            format!("isometric-sphere.RP.{z}"),
            side.as_ref().map(|s| *s == FordSide::On).map_err(|e| e.to_string()),
            match &side {
                Ok(s) => format!("{z} lies {s} I(RP)"),
                Err(e) => format!("{z}: {e}"),
            },
        );
    }
    let r = eval_str("R").expect("generator");
    for p in ["z1", "z2", "w12"] {
        let res = r.fixes_projectively(lift_of(l, p)).map_err(|e| e.to_string());
        push(format!("mirror.R.{p}"), res, format!("R fixes {p}"));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SidePairing {
    pub word: String,
    pub source: usize,
    pub target: usize,
}

impl SidePairing {
    pub fn map(&self) -> GroupElt {
        eval_str(&self.word).expect("built-in word")
    }
}

pub fn side_pairings(l: &FaceLattice) -> Vec<SidePairing> {
    [("P", 0, 1), ("P*Q^-1", 2, 3), ("R", 4, 5)]
        .iter()
        .map(|&(w, s, t)| {
            debug_assert!(s < l.faces[3].len() && t < l.faces[3].len());
            SidePairing { word: w.to_string(), source: s, target: t }
        })
        .collect()
}

/// Exact check that a pairing sends principal vertices onto principal
/// vertices and decorations onto decorations.
pub fn validate_pairing(l: &FaceLattice, sp: &SidePairing) -> Result<(), String> {
    let g = sp.map();
    let (s, t) = (&l.faces[3][sp.source], &l.faces[3][sp.target]);
    let part = |a: &[usize], b: &[usize], what: &str| -> Result<(), String> {
        let img = l.image_set(&g, &a.iter().copied().collect())?;
        let want: BTreeSet<usize> = b.iter().copied().collect();
        if img != want {
            return Err(format!(
                "{} {what} image {:?} differs from {:?}",
                sp.word,
                l.vertex_names(&img),
                l.vertex_names(&want)
            ));
        }
        Ok(())
    };
    part(&s.principal, &t.principal, "principal")?;
    part(&s.decorations, &t.decorations, "decoration")
}

/// Ridges as full vertex-name lists, joined by the words of each arrow.
pub struct CycleSpec {
    pub id: usize,
    pub ridges: &'static [&'static [&'static str]],
    pub arrows: &'static [&'static str],
}

pub const RIDGE_CYCLES: [CycleSpec; 5] = [
    CycleSpec {
        id: 1,
        ridges: &[
            &["qinf", "z2", "z0", "w4"],
            &["qinf", "z3", "z1", "P(w4)"],
            &["qinf", "z3", "z2", "P2J(w4)"],
            &["qinf", "z2", "z1", "PJ(w4)"],
            &["qinf", "z1", "z0", "J(w4)"],
            &["qinf", "z2", "z0", "w4"],
        ],
        arrows: &["P", "Q*P^-1", "P^-1", "P^-1", "Q*P^-1"],
    },
    CycleSpec {
        id: 2,
        ridges: &[
            &["z2", "w4", "w3", "PJ(w4)"],
            &["z3", "P(w4)", "P(w3)", "P2J(w4)"],
            &["z0", "J(w4)", "w3", "w4"],
            &["z1", "PJ(w4)", "P(w3)", "P(w4)"],
            &["z1", "PJ(w4)", "w3", "J(w4)"],
            &["z2", "P2J(w4)", "P(w3)", "PJ(w4)"],
            &["z2", "w4", "w3", "PJ(w4)"],
        ],
        arrows: &["P", "R^-1", "P", "R^-1", "P", "R^-1"],
    },
    CycleSpec {
        id: 3,
        ridges: &[
            &["z0", "w12", "z2", "w4"],
            &["z0", "w12", "z1", "J(w4)"],
            &["z3", "w12", "z1", "P(w4)"],
            &["z3", "w12", "z2", "P2J(w4)"],
            &["z0", "w12", "z2", "w4"],
        ],
        arrows: &["P*Q^-1", "R", "Q*P^-1", "R^-1"],
    },
    CycleSpec {
        id: 4,
        ridges: &[&["z1", "z2", "w12", "PJ(w4)"], &["z1", "z2", "w12", "PJ(w4)"]],
        arrows: &["R"],
    },
    CycleSpec {
        id: 5,
        ridges: &[&["qinf", "z0", "z3", "w12"], &["qinf", "z0", "z3", "w12"]],
        arrows: &["P*Q^-1"],
    },
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RidgeCycleReport {
    pub id: usize,
    pub closes: bool,
    pub mismatch: Option<String>,
    /// Composite g_k ⋯ g_1 as a word.
    pub transformation: String,
    pub projective_order: Option<u64>,
    pub stabilizes_setwise: bool,
    pub fixes_pointwise: bool,
}

pub fn verify_ridge_cycle(l: &FaceLattice, id: usize) -> Result<RidgeCycleReport, GroupError> {
    let cycle = RIDGE_CYCLES.iter().find(|c| c.id == id).expect("cycle id 1..=5");
    let sets: Vec<BTreeSet<usize>> = cycle
        .ridges
        .iter()
        .map(|r| r.iter().map(|n| l.vertex_index(n).expect("vertex")).collect())
        .collect();
    let mut mismatch = None;
    for (k, set) in sets.iter().enumerate() {
        if l.find_face(2, set).is_none() {
            mismatch = Some(format!("ridge {:?} is not in the lattice", cycle.ridges[k]));
        }
    }
    let mut total = Word::identity();
    for (k, w) in cycle.arrows.iter().enumerate() {
        let word = parse_word(w)?;
        let g = eval_str(w)?;
        match l.image_set(&g, &sets[k]) {
            Ok(img) if img == sets[k + 1] => {}
            Ok(img) => {
                mismatch.get_or_insert(format!(
                    "arrow {} sends {:?} to {:?}",
                    w,
                    cycle.ridges[k],
                    l.vertex_names(&img)
                ));
            }
            Err(e) => {
                mismatch.get_or_insert(e);
            }
        }
        total = word.concat(&total);
    }
    let t = crate::group::eval(&total);
    let first = &sets[0];
    let stabilizes_setwise = l.image_set(&t, first).is_ok_and(|s| &s == first);
    let mut fixes_pointwise = true;
    for &i in first {
        fixes_pointwise &= t.fixes_projectively(&l.vertices[i].lift)?;
    }
    Ok(RidgeCycleReport {
        id,
        closes: mismatch.is_none() && sets.first() == sets.last(),
        mismatch,
        transformation: total.to_string(),
        projective_order: t.order(1000).ok(),
        stabilizes_setwise,
        fixes_pointwise,
    })
}

/// Equivalence classes of faces under the side-pairing maps and their
/// restrictions, per dimension, as lists of face indices.
pub fn face_orbits(l: &FaceLattice) -> Vec<Vec<Vec<usize>>> {
    let mut parent: Vec<Vec<usize>> = l.faces.iter().map(|fs| (0..fs.len()).collect()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for sp in side_pairings(l) {
        let g = sp.map();
        let src = l.faces[3][sp.source].vertex_set();
        for (dim, faces) in l.faces.iter().enumerate() {
            for (i, f) in faces.iter().enumerate() {
                let set = f.vertex_set();
                if !set.is_subset(&src) {
                    continue;
                }
                let Ok(img) = l.image_set(&g, &set) else { continue };
                if let Some(j) = l.find_face(dim, &img) {
                    let (a, b) = (find(&mut parent[dim], i), find(&mut parent[dim], j));
                    parent[dim][a.max(b)] = a.min(b);
                }
            }
        }
    }
    parent
        .iter_mut()
        .map(|p| {
            let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
            for i in 0..p.len() {
                let r = find(p, i);
                classes.entry(r).or_default().push(i);
            }
            classes.into_values().collect()
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FordEntry {
    pub word: String,
    /// None when the element fixes q∞ and has no isometric sphere.
    pub side: Option<FordSide>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FordReport {
    pub entries: Vec<FordEntry>,
    /// On or outside every isometric sphere considered.
    pub in_exterior_closure: bool,
}

pub fn ford_membership(p: &HVector, words: &[&str]) -> Result<FordReport, GroupError> {
    let mut entries = Vec::new();
    for w in words {
        let g = eval_str(w)?;
        let side = match ford_side(p, &g) {
            Ok(s) => Some(s),
            Err(GeomError::FixesInfinity) => None,
            Err(e) => return Err(e.into()),
        };
        entries.push(FordEntry { word: w.to_string(), side });
    }
    let in_exterior_closure = entries.iter().all(|e| e.side != Some(FordSide::Interior));
    Ok(FordReport { entries, in_exterior_closure })
}

/// Sign of ⟨v,v⟩ for every finite vertex (all must be negative).
pub fn finite_vertices_negative(l: &FaceLattice) -> bool {
    l.vertices.iter().all(|v| {
        let s = crate::field::sign_real(&herm(&v.lift, &v.lift));
        if v.finite {
            s == Ok(Sign::Negative)
        } else {
            s == Ok(Sign::Zero)
        }
    })
}

/// JSON export: vertices, faces by dimension, incidences, pairings, cycles.
pub fn export_json(l: &FaceLattice) -> serde_json::Value {
    let cycles: Vec<serde_json::Value> = RIDGE_CYCLES
        .iter()
        .map(|c| serde_json::json!({"id": c.id, "ridges": c.ridges, "arrows": c.arrows}))
        .collect();
    let incidences: Vec<serde_json::Value> = l
        .incidences()
        .into_iter()
        .map(|(k, i, j)| serde_json::json!({"dim": k, "face": j, "subface": i}))
        .collect();
    let pairings: Vec<serde_json::Value> = side_pairings(l)
        .iter()
        .map(|sp| {
            serde_json::json!({
                "map": sp.word,
                "source": l.faces[3][sp.source].name,
                "target": l.faces[3][sp.target].name,
            })
        })
        .collect();
    serde_json::json!({
        "vertices": l.vertices,
        "faces": l.faces,
        "incidences": incidences,
        "side_pairings": pairings,
        "ridge_cycles": cycles,
    })
}
