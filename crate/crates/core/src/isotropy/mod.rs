//! Finite isotropy groups: closure into tables, abstract presentations,
//! coset enumeration, abelianization and singular loci of point links.

mod presentation;
mod table;

pub use presentation::{
    abelianization, group_order, hom_check, matrix_group_vs_presentation, presentation_iso_table,
    presented_table, smith_diagonal, todd_coxeter, AbelianInvariants, CosetTable, HomReport, Presentation,
};
pub use table::{abelian_invariants_of_table, center, closure, common_fixed_point, iso_check, quotient, FiniteGroupTable};

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::geom::named_point;
use crate::group::{eval_str, GroupElt, GroupError};
use crate::linalg::{HVector, Mat3};
use crate::word::WordError;

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum IsotropyError {
    #[error("closure exceeded {0} elements")]
    CapExceeded(usize),
    #[error("coset enumeration exceeded {0} cosets")]
    MaxCosetsExceeded(usize),
    #[error("presentation: {0}")]
    PresentationSyntax(String),
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("no isotropy data for point {0:?}")]
    UnknownPoint(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// A point with finite isotropy and the words generating its stabilizer.
#[derive(Clone, Copy, Debug)]
pub struct IsotropyPoint {
    pub name: &'static str,
    pub generators: &'static [&'static str],
    pub expected_order: usize,
}

pub const ISOTROPY_POINTS: [IsotropyPoint; 4] = [
    IsotropyPoint { name: "w3", generators: &["J"], expected_order: 3 },
    IsotropyPoint { name: "w4", generators: &["R1*R2*R3"], expected_order: 4 },
    IsotropyPoint { name: "w12", generators: &["P*Q^-1", "R"], expected_order: 12 },
    IsotropyPoint { name: "z0", generators: &["R1", "R2*J^2", "R2*R3*R2^-1"], expected_order: 72 },
];

pub fn isotropy_point(name: &str) -> Result<&'static IsotropyPoint, IsotropyError> {
    ISOTROPY_POINTS
        .iter()
        .find(|p| p.name == name)
        .ok_or_else(|| IsotropyError::UnknownPoint(name.to_string()))
}

pub fn isotropy_generators(name: &str) -> Result<Vec<GroupElt>, IsotropyError> {
    isotropy_point(name)?
        .generators
        .iter()
        .map(|w| eval_str(w).map_err(IsotropyError::from))
        .collect()
}

pub fn isotropy_group(name: &str, cap: usize) -> Result<FiniteGroupTable, IsotropyError> {
    closure(&isotropy_generators(name)?, cap)
}

/// Abstract presentations used in the isotropy checks.
pub fn named_presentation(name: &str) -> Option<Presentation> {
    let text = match name {
        "gamma-z0" => "gens: a b c; rels: a^6, b^6, c^12, [a,b], c*a*c^-1*b^-1, a^5*b^5*c^-2",
        "z2xz6" => "gens: s t; rels: s^2, t^6, [s,t]",
        "trefoil" => "gens: x y; rels: x^6, x*y*x*(y*x*y)^-1",
        "G" => "gens: c1 c2 c3 h; rels: h^6 = c1*c2*c3, h^6, c1^2*h^-3, c2^2, c3^6",
        "G-central" => {
            "gens: c1 c2 c3 h; rels: h^6 = c1*c2*c3, h^6, c1^2*h^-3, c2^2, c3^6, [h,c1], [h,c2], [h,c3]"
        }
        _ => return None,
    };
    Some(text.parse().expect("built-in presentation parses"))
}

/// Images a ↦ R1, b ↦ R2R3R2⁻¹, c ↦ R2J² of the abstract stabilizer of z0.
pub fn gamma_z0_images() -> BTreeMap<String, GroupElt> {
    [("a", "R1"), ("b", "R2*R3*R2^-1"), ("c", "R2*J^2")]
        .into_iter()
        .map(|(k, w)| (k.to_string(), eval_str(w).expect("built-in word")))
        .collect()
}

/// x ↦ PQ⁻¹, y ↦ Q⁻¹P.
pub fn trefoil_images() -> BTreeMap<String, GroupElt> {
    [("x", "P*Q^-1"), ("y", "Q^-1*P")]
        .into_iter()
        .map(|(k, w)| (k.to_string(), eval_str(w).expect("built-in word")))
        .collect()
}

/// A conjugacy orbit of reflection mirrors through a point, with the order
/// of the cyclic group fixing each mirror pointwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorOrbit {
    pub order: usize,
    /// Normalized polar vectors of the mirrors in the orbit.
    pub polars: Vec<HVector>,
}

/// The mirror of `g` through `p`, when `g` acts on `p`'s eigenspace as a
/// complex reflection (a 2-dimensional eigenspace containing `p`).
fn mirror_through(g: &GroupElt, p: &HVector) -> Option<HVector> {
    let m = g.matrix();
    let gp = m.apply(p);
    let i = (0..3).find(|&i| !p[i].is_zero())?;
    let lambda = gp[i].checked_div(&p[i]).ok()?;
    if p.scale(&lambda) != gp {
        return None;
    }
    let basis = m.sub(&Mat3::scalar(&lambda)).kernel();
    if basis.len() != 2 {
        return None;
    }
    let h = Mat3::hermitian_form();
    Some(h.apply(&basis[0]).cross(&h.apply(&basis[1])).conj().normalized())
}

/// Singular locus of the link of `p` for a finite group fixing it: the
/// complex reflection mirrors through `p`, grouped into orbits under the
/// group, sorted by pointwise-stabilizer order.
pub fn singular_loci(t: &FiniteGroupTable, p: &HVector) -> Vec<MirrorOrbit> {
    let Some(reps) = t.reps() else {
        return Vec::new();
    };
    let mut mirrors: BTreeMap<String, (HVector, usize)> = BTreeMap::new();
    for g in reps.iter().skip(1) {
        if let Some(n) = mirror_through(g, p) {
            mirrors.entry(n.to_string()).or_insert((n, 1)).1 += 1;
        }
    }
    let mut seen: BTreeMap<String, bool> = BTreeMap::new();
    let mut orbits = Vec::new();
    for (key, (n, order)) in &mirrors {
        if seen.contains_key(key) {
            continue;
        }
        let mut polars: Vec<HVector> = Vec::new();
        for g in reps {
            let image = g.apply(n).normalized();
            let k = image.to_string();
            if let std::collections::btree_map::Entry::Vacant(e) = seen.entry(k) {
                e.insert(true);
                polars.push(image);
            }
        }
        orbits.push(MirrorOrbit { order: *order, polars });
    }
    orbits.sort_by_key(|o| o.order);
    orbits
}

pub fn singular_orders(t: &FiniteGroupTable, p: &HVector) -> Vec<usize> {
    singular_loci(t, p).iter().map(|o| o.order).collect()
}

/// Summary of a point's isotropy group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsotropySummary {
    pub point: String,
    pub generators: Vec<String>,
    pub order: usize,
    pub abelian: bool,
    pub center_order: usize,
    pub fixes_point: bool,
    /// Invariant factors of the abelianization of the table.
    pub abelianization: Vec<u64>,
    pub singular_orders: Vec<usize>,
}

pub fn summarize(name: &str, cap: usize) -> Result<IsotropySummary, IsotropyError> {
    let entry = isotropy_point(name)?;
    let t = isotropy_group(name, cap)?;
    let p = named_point(name).ok_or_else(|| IsotropyError::UnknownPoint(name.to_string()))?;
    let commutators: Vec<usize> = (0..t.order())
        .flat_map(|a| (0..t.order()).map(move |b| (a, b)))
        .map(|(a, b)| t.mul(t.mul(a, b), t.mul(t.inverse(a), t.inverse(b))))
        .collect();
    let ab = quotient(&t, &commutators);
    Ok(IsotropySummary {
        point: name.to_string(),
        generators: entry.generators.iter().map(|s| s.to_string()).collect(),
        order: t.order(),
        abelian: t.is_abelian(),
        center_order: center(&t).order(),
        fixes_point: common_fixed_point(&t, &p)?,
        abelianization: abelian_invariants_of_table(&ab).unwrap_or_default(),
        singular_orders: singular_orders(&t, &p),
    })
}

/// Scalar multiple test used by callers comparing a table element to a word.
pub fn same_class(a: &GroupElt, b: &GroupElt) -> bool {
    a.projective_key() == b.projective_key()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::Gen;

    #[test]
    fn isotropy_orders_and_fixed_points() {
        for p in ISOTROPY_POINTS {
            let t = isotropy_group(p.name, 500).unwrap();
            assert_eq!(t.order(), p.expected_order, "{}", p.name);
            assert!(common_fixed_point(&t, &named_point(p.name).unwrap()).unwrap());
        }
        let w12 = isotropy_group("w12", 100).unwrap();
        assert!(!common_fixed_point(&w12, &named_point("z0").unwrap()).unwrap());
    }

    #[test]
    fn w4_elements_have_order_dividing_four() {
        let t = isotropy_group("w4", 100).unwrap();
        assert!((0..t.order()).all(|a| 4 % t.element_order(a) == 0));
    }

    #[test]
    fn z0_center_and_quotient() {
        let t = isotropy_group("z0", 500).unwrap();
        let z = center(&t);
        assert_eq!(z.order(), 6);
        let c = eval_str("R2*J^2").unwrap();
        let c2 = t.find_rep(&c.pow(2)).unwrap();
        assert_eq!(t.generated(&[c2]), t.center_indices());
        let q = quotient(&t, &[c2]);
        assert_eq!(q.order(), 12);
        assert!(!q.is_abelian());
        assert!(iso_check(&q, &FiniteGroupTable::dihedral(6)));
    }

    #[test]
    fn w12_structure() {
        let t = isotropy_group("w12", 100).unwrap();
        let z2z6 = FiniteGroupTable::direct_product(&FiniteGroupTable::cyclic(2), &FiniteGroupTable::cyclic(6));
        assert!(iso_check(&t, &z2z6));
        let r = t.find_rep(&Gen::R.elt()).unwrap();
        let q = quotient(&t, &[r]);
        assert_eq!(q.order(), 6);
        assert!(iso_check(&q, &FiniteGroupTable::cyclic(6)));
    }

    #[test]
    fn abstract_presentations() {
        let gz0 = named_presentation("gamma-z0").unwrap();
        assert_eq!(group_order(&gz0, 1000).unwrap(), 72);
        let g3 = named_presentation("G").unwrap().with_relations(&["c2", "c3"]).unwrap();
        assert_eq!(group_order(&g3, 100).unwrap(), 3);
        assert_eq!(group_order(&named_presentation("G-central").unwrap(), 1000).unwrap(), 72);
    }

    #[test]
    fn homomorphisms() {
        let gz0 = named_presentation("gamma-z0").unwrap();
        assert!(hom_check(&gz0, &gamma_z0_images()).unwrap().all_hold);
        assert!(hom_check(&named_presentation("trefoil").unwrap(), &trefoil_images()).unwrap().all_hold);
        let p: Presentation = "gens: g; rels: g^2".parse().unwrap();
        let imgs = BTreeMap::from([("g".to_string(), Gen::P.elt())]);
        assert!(!hom_check(&p, &imgs).unwrap().all_hold);
        assert!(matches!(hom_check(&p, &BTreeMap::new()), Err(IsotropyError::MissingImage(_))));
    }

    #[test]
    fn matrix_vs_abstract() {
        let t = isotropy_group("z0", 500).unwrap();
        let gz0 = named_presentation("gamma-z0").unwrap();
        assert!(matrix_group_vs_presentation(&t, &gz0, &gamma_z0_images(), 1000).unwrap());
        let w12 = isotropy_group("w12", 100).unwrap();
        let imgs = BTreeMap::from([
            ("s".to_string(), Gen::R.elt()),
            ("t".to_string(), eval_str("P*Q^-1").unwrap()),
        ]);
        assert!(matrix_group_vs_presentation(&w12, &named_presentation("z2xz6").unwrap(), &imgs, 100).unwrap());
        let w3 = isotropy_group("w3", 10).unwrap();
        let z6: Presentation = "gens: g; rels: g^6".parse().unwrap();
        let imgs = BTreeMap::from([("g".to_string(), Gen::J.elt())]);
        assert!(!matrix_group_vs_presentation(&w3, &z6, &imgs, 100).unwrap());
    }

    #[test]
    fn singular_loci_of_links() {
        let orders = |name: &str| {
            let t = isotropy_group(name, 500).unwrap();
            singular_orders(&t, &named_point(name).unwrap())
        };
        assert_eq!(orders("w3"), Vec::<usize>::new());
        assert_eq!(orders("w4"), vec![2]);
        assert_eq!(orders("w12"), vec![2, 6]);
        assert_eq!(orders("z0"), vec![2, 6]);
    }
}
