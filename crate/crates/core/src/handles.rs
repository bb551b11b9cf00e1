//! Orbifold handle decompositions: data model, structural validation,
//! Euler characteristic and fundamental group of the underlying space.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::isotropy::{IsotropyError, Presentation};
use crate::polytope::{face_orbits, FaceLattice};
pub use crate::report::Status;
use crate::word::{parse_letters, WordError};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum HandleError {
    #[error("no handle named {0:?}")]
    UnknownHandle(String),
    #[error("attaching word for {handle}: {source}")]
    Word { handle: String, source: WordError },
    #[error(transparent)]
    Isotropy(#[from] IsotropyError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum HandleKind {
    /// D^k × D^(4-k).
    Classical { index: u8 },
    /// Cone on a 3-orbifold link; `singular_loci` lists cone orders.
    Orbifold0 { link: String, singular_loci: Vec<u32> },
    /// D¹ × (D¹ × F_n).
    Orbifold1 { n: u32 },
    /// D² × F_n.
    Orbifold2 { n: u32 },
    /// Pair of pants × F_n.
    PantsProduct { n: u32 },
}

impl HandleKind {
    /// Position in the attachment order: 0-handles, then 1-handle-like
    /// pieces (including pants products), then 2-, 3- and 4-handles.
    pub fn rank(&self) -> u8 {
        match self {
            HandleKind::Classical { index } => *index,
            HandleKind::Orbifold0 { .. } => 0,
            HandleKind::Orbifold1 { .. } | HandleKind::PantsProduct { .. } => 1,
            HandleKind::Orbifold2 { .. } => 2,
        }
    }

    /// Cone order carried across the gluing regions (1 = smooth).
    pub fn cone_order(&self) -> u32 {
        match self {
            HandleKind::Orbifold1 { n } | HandleKind::Orbifold2 { n } | HandleKind::PantsProduct { n } => *n,
            _ => 1,
        }
    }

    /// Euler characteristic of the underlying space.
    pub fn euler(&self) -> i64 {
        match self {
            HandleKind::PantsProduct { .. } => -1,
            _ => 1,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            HandleKind::Classical { index } => format!("classical {index}-handle"),
            HandleKind::Orbifold0 { link, singular_loci } => {
                format!("orbifold 0-handle, link {link}, singular loci {singular_loci:?}")
            }
            HandleKind::Orbifold1 { n } => format!("orbifold 1-handle D1 x D1 x F{n}"),
            HandleKind::Orbifold2 { n } => format!("orbifold 2-handle D2 x F{n}"),
            HandleKind::PantsProduct { n } => format!("pair of pants x F{n}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleSpec {
    pub name: String,
    pub kind: HandleKind,
}

/// Shape of a gluing region, fixing its Euler characteristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Region {
    /// A 3-ball (or D¹ × F_n): χ = 1.
    Ball,
    /// S¹ × D² (or S¹ × F_n): χ = 0.
    SolidTorus,
    /// S² × D¹: χ = 2.
    SphereShell,
}

impl Region {
    pub fn euler(self) -> i64 {
        match self {
            Region::Ball => 1,
            Region::SolidTorus => 0,
            Region::SphereShell => 2,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Gluing {
    /// Handle glued to; None means the boundary of everything so far.
    pub target: Option<String>,
    pub region: Region,
    pub cone_order: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attachment {
    pub step: u8,
    pub handle: HandleSpec,
    pub gluings: Vec<Gluing>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleComplex {
    pub attachments: Vec<Attachment>,
}

fn orb0(name: &str, link: &str, loci: &[u32]) -> Attachment {
    Attachment {
        step: 1,
        handle: HandleSpec {
            name: name.into(),
            kind: HandleKind::Orbifold0 { link: link.into(), singular_loci: loci.to_vec() },
        },
        gluings: vec![],
    }
}

fn glue(target: &str, region: Region, cone_order: u32) -> Gluing {
    Gluing { target: Some(target.into()), region, cone_order }
}

/// The decomposition of the modular surface: four orbifold 0-handles, a
/// classical and an orbifold 1-handle, a pants product, two 2-handles and
/// a 3-handle.
pub fn build_decomposition() -> HandleComplex {
    use Region::*;
    let attachments = vec![
        orb0("h(w3)", "L(3,-1)", &[]),
        orb0("h(w4)", "L(4,-1)", &[2]),
        orb0("h(w12)", "S3-Hopf(2,6)", &[2, 6]),
        orb0("h(z0)", "L(3,2)-base", &[2, 6]),
        Attachment {
            step: 2,
            handle: HandleSpec { name: "h([w3,w4])".into(), kind: HandleKind::Classical { index: 1 } },
            gluings: vec![glue("h(w3)", Ball, 1), glue("h(w4)", Ball, 1)],
        },
        Attachment {
            step: 2,
            handle: HandleSpec { name: "h([z0,w12])".into(), kind: HandleKind::Orbifold1 { n: 6 } },
            gluings: vec![glue("h(z0)", Ball, 6), glue("h(w12)", Ball, 6)],
        },
        Attachment {
            step: 3,
            handle: HandleSpec { name: "h([z0,w4,w12])".into(), kind: HandleKind::PantsProduct { n: 2 } },
            gluings: vec![
                glue("h(w4)", SolidTorus, 2),
                glue("h(w12)", SolidTorus, 2),
                glue("h(z0)", SolidTorus, 2),
            ],
        },
        Attachment {
            step: 4,
            handle: HandleSpec { name: "h([z0,w4,w3,J(w4)])".into(), kind: HandleKind::Classical { index: 2 } },
            gluings: vec![Gluing { target: None, region: SolidTorus, cone_order: 1 }],
        },
        Attachment {
            step: 4,
            handle: HandleSpec { name: "h([z0,J(w4),z1,w12])".into(), kind: HandleKind::Classical { index: 2 } },
            gluings: vec![Gluing { target: None, region: SolidTorus, cone_order: 1 }],
        },
        Attachment {
            step: 5,
            handle: HandleSpec { name: "h(3)".into(), kind: HandleKind::Classical { index: 3 } },
            gluings: vec![Gluing { target: None, region: SphereShell, cone_order: 1 }],
        },
    ];
    HandleComplex { attachments }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HandleCheck {
    pub id: String,
    pub status: Status,
    pub detail: String,
}

impl HandleComplex {
    pub fn find(&self, name: &str) -> Option<&Attachment> {
        self.attachments.iter().find(|a| a.handle.name == name)
    }

    pub fn find_mut(&mut self, name: &str) -> Option<&mut Attachment> {
        self.attachments.iter_mut().find(|a| a.handle.name == name)
    }

    /// Disjoint union (names must not collide).
    pub fn disjoint_union(&self, other: &HandleComplex) -> HandleComplex {
        let mut attachments = self.attachments.clone();
        attachments.extend(other.attachments.iter().cloned());
        attachments.sort_by_key(|a| a.handle.kind.rank());
        HandleComplex { attachments }
    }

    /// Step-by-step listing.
    pub fn ledger(&self) -> String {
        let mut out = String::new();
        let mut last = 0;
        for a in &self.attachments {
            if a.step != last {
                let _ = writeln!(out, "Step {}:", a.step);
                last = a.step;
            }
            let _ = write!(out, "  {}: {}", a.handle.name, a.handle.kind.describe());
            let targets: Vec<String> = a
                .gluings
                .iter()
                .map(|g| {
                    let t = g.target.as_deref().unwrap_or("boundary");
                    if g.cone_order > 1 {
                        format!("{t} (order {})", g.cone_order)
                    } else {
                        t.to_string()
                    }
                })
                .collect();
            if !targets.is_empty() {
                let _ = write!(out, "; glued to {}", targets.join(", "));
            }
            out.push('\n');
        }
        out
    }
}

/// Structural checks plus the informational note on the order-6 1-handle.
pub fn validate(c: &HandleComplex) -> Vec<HandleCheck> {
    let mut out = structural(c);
    if out.is_empty() {
        out.push(HandleCheck {
            id: "structure".into(),
            status: Status::Pass,
            detail: format!("{} attachments validate", c.attachments.len()),
        });
    }
    out.push(alternative_target_note(c));
    out
}

/// Ordering, target resolution, gluing counts, cone-order matching and
/// singular-locus availability. Returns violations only.
fn structural(c: &HandleComplex) -> Vec<HandleCheck> {
    let mut out = Vec::new();
    let mut fail = |id: String, detail: String| out.push(HandleCheck { id, status: Status::Fail, detail });
    let mut seen: BTreeMap<&str, &Attachment> = BTreeMap::new();
    let mut rank = 0;
    for a in &c.attachments {
        let name = a.handle.name.as_str();
        let r = a.handle.kind.rank();
        if r < rank {
            fail(format!("order.{name}"), format!("{name} (index {r}) attached after an index-{rank} handle"));
        }
        rank = rank.max(r);
        if seen.contains_key(name) {
            fail(format!("name.{name}"), format!("duplicate handle name {name}"));
        }
        let expected = match &a.handle.kind {
            HandleKind::Classical { index: 0 } | HandleKind::Orbifold0 { .. } => Some(0),
            HandleKind::Classical { index: 1 } | HandleKind::Orbifold1 { .. } => Some(2),
            HandleKind::PantsProduct { .. } => Some(3),
            _ => None,
        };
        if let Some(k) = expected {
            if a.gluings.len() != k {
                fail(format!("gluings.{name}"), format!("{name} has {} gluing regions, expected {k}", a.gluings.len()));
            }
        } else if a.gluings.is_empty() {
            fail(format!("gluings.{name}"), format!("{name} is not glued to anything"));
        }
        if let HandleKind::Orbifold1 { n } | HandleKind::Orbifold2 { n } | HandleKind::PantsProduct { n } = a.handle.kind {
            if n < 2 {
                fail(format!("cone.{name}"), format!("{name} needs cone order at least 2, has {n}"));
            }
        }
        for (k, g) in a.gluings.iter().enumerate() {
            let id = format!("glue.{name}.{k}");
            if g.cone_order != a.handle.kind.cone_order() {
                fail(
                    id.clone(),
                    format!("{name} carries order {} but region {k} has order {}", a.handle.kind.cone_order(), g.cone_order),
                );
            }
            let Some(target) = &g.target else { continue };
            let Some(t) = seen.get(target.as_str()) else {
                fail(id, format!("{name} glued to {target}, which is not attached earlier"));
                continue;
            };
            if g.cone_order > 1 {
                match &t.handle.kind {
                    HandleKind::Orbifold0 { singular_loci, link } if !singular_loci.contains(&g.cone_order) => fail(
                        id,
                        format!("{target} (link {link}, loci {singular_loci:?}) has no order-{} locus for {name}", g.cone_order),
                    ),
                    HandleKind::Orbifold0 { .. } => {}
                    _ => fail(id, format!("{name} glued along an order-{} locus of non-0-handle {target}", g.cone_order)),
                }
            }
        }
        seen.insert(name, a);
    }
    if let Some(last) = c.attachments.last() {
        if c.attachments.iter().any(|a| a.handle.kind.rank() == 3) && last.handle.kind.rank() != 3 {
            fail("order.last".into(), "the 3-handle is not attached last".into());
        }
    }
    out
}

/// The orbifold 1-handle between z0 and w12 follows its own endpoints. An
/// alternative reading glues the order-6 ends to h(w4) and h(w12); report
/// whether that reading would be consistent.
fn alternative_target_note(c: &HandleComplex) -> HandleCheck {
    let mut alt = c.clone();
    let consistent = match alt.find_mut("h([z0,w12])") {
        Some(a) => {
            if let Some(g) = a.gluings.first_mut() {
                g.target = Some("h(w4)".into());
            }
            structural(&alt).is_empty()
        }
        None => false,
    };
    HandleCheck {
        id: "gluing.alternative-target".into(),
        status: Status::Info,
        detail: format!(
            "The order-6 1-handle joins h(z0) to h(w12), the two points its core arc connects. \
             Moving the first end to h(w4) would {} since the link of w4 has no order-6 locus.",
            if consistent { "also validate" } else { "fail validation" }
        ),
    }
}

pub fn is_valid(c: &HandleComplex) -> bool {
    structural(c).is_empty()
}

/// χ of the underlying space by inclusion-exclusion over gluing regions.
pub fn euler_characteristic(c: &HandleComplex) -> i64 {
    c.attachments
        .iter()
        .map(|a| a.handle.kind.euler() - a.gluings.iter().map(|g| g.region.euler()).sum::<i64>())
        .sum()
}

/// Independent count from the polytope: alternating sum of the numbers of
/// face classes that avoid the cusp.
pub fn cw_euler_oracle(l: &FaceLattice) -> i64 {
    let cusp = l.vertex_index("qinf");
    face_orbits(l)
        .iter()
        .enumerate()
        .map(|(dim, classes)| {
            let finite = classes
                .iter()
                .filter(|cls| cls.iter().all(|&i| cusp.is_none_or(|q| !l.faces[dim][i].vertex_set().contains(&q))))
                .count() as i64;
            if dim % 2 == 0 {
                finite
            } else {
                -finite
            }
        })
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pi1Presentation {
    pub presentation: Presentation,
    /// Generator name and the loop it stands for.
    pub legend: Vec<(String, String)>,
}

/// π₁ of the underlying space. Nodes are 0-handles plus one hub per pants
/// product; edges are 1-handles and pants spokes. Generators are the edges
/// outside a breadth-first spanning forest; relators are the supplied
/// attaching words of 2-handles (over those generator names).
pub fn pi1_presentation(
    c: &HandleComplex,
    attaching_words: &BTreeMap<String, String>,
) -> Result<Pi1Presentation, HandleError> {
    let mut nodes: Vec<String> = Vec::new();
    let mut edges: Vec<(String, String, String)> = Vec::new();
    for a in &c.attachments {
        let name = &a.handle.name;
        match &a.handle.kind {
            HandleKind::Classical { index: 0 } | HandleKind::Orbifold0 { .. } => nodes.push(name.clone()),
            HandleKind::Classical { index: 1 } | HandleKind::Orbifold1 { .. } => {
                let ends: Vec<&String> = a.gluings.iter().filter_map(|g| g.target.as_ref()).collect();
                if ends.len() == 2 {
                    edges.push((ends[0].clone(), ends[1].clone(), name.clone()));
                }
            }
            HandleKind::PantsProduct { .. } => {
                nodes.push(name.clone());
                for g in &a.gluings {
                    if let Some(t) = &g.target {
                        edges.push((name.clone(), t.clone(), format!("{name} -> {t}")));
                    }
                }
            }
            _ => {}
        }
    }
    for h in attaching_words.keys() {
        if c.find(h).is_none() {
            return Err(HandleError::UnknownHandle(h.clone()));
        }
    }
    // spanning forest by BFS in attachment order
    let mut visited: BTreeSet<String> = BTreeSet::new();
    let mut tree: BTreeSet<usize> = BTreeSet::new();
    for root in &nodes {
        if visited.contains(root) {
            continue;
        }
        visited.insert(root.clone());
        let mut queue = std::collections::VecDeque::from([root.clone()]);
        while let Some(n) = queue.pop_front() {
            for (k, (a, b, _)) in edges.iter().enumerate() {
                let other = if *a == n {
                    b
                } else if *b == n {
                    a
                } else {
                    continue;
                };
                if !visited.contains(other) {
                    visited.insert(other.clone());
                    tree.insert(k);
                    queue.push_back(other.clone());
                }
            }
        }
    }
    let legend: Vec<(String, String)> = edges
        .iter()
        .enumerate()
        .filter(|(k, _)| !tree.contains(k))
        .enumerate()
        .map(|(i, (_, e))| (format!("x{}", i + 1), e.2.clone()))
        .collect();
    let gens: Vec<&str> = legend.iter().map(|(g, _)| g.as_str()).collect();
    let mut p = Presentation::new(&gens, &[])?;
    for a in &c.attachments {
        if a.handle.kind.rank() != 2 {
            continue;
        }
        let Some(w) = attaching_words.get(&a.handle.name) else { continue };
        let known = |s: &str| gens.contains(&s);
        let letters = parse_letters(w, &known, Some("id"))
            .map_err(|source| HandleError::Word { handle: a.handle.name.clone(), source })?;
        if !letters.is_empty() {
            p.rels.push(letters);
        }
    }
    Ok(Pi1Presentation { presentation: p, legend })
}
