//! Complex hyperbolic plane in the Siegel model: the Hermitian form
//! ⟨a,b⟩ = b*·H·a with H = antidiag(1,1,1), horospherical coordinates,
//! the Heisenberg group, Bergman and Cygan distances, isometric spheres and
//! exact incidence predicates.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::field::{
    embed, imag_unit, int, omega, omega_bar, rat, sign_real, sqrt3, CycNum, FieldError, Named,
    RealCyc, Sign,
};
use crate::group::GroupElt;
use crate::linalg::{det3, HVector, Mat3};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GeomError {
    #[error("zero vector")]
    ZeroVector,
    #[error("point at infinity has no horospherical coordinates")]
    PointAtInfinity,
    #[error("positive vector is not a point of the closed ball")]
    PositiveVector,
    #[error("vector is not negative")]
    NonNegativeVector,
    #[error("degenerate pair: Hermitian product vanishes")]
    DegeneratePair,
    #[error("element fixes q∞ (g31 = 0)")]
    FixesInfinity,
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PointClass {
    Negative,
    Null,
    Positive,
}

pub fn herm(a: &HVector, b: &HVector) -> CycNum {
    // b* H a = conj(b0) a2 + conj(b1) a1 + conj(b2) a0
    &b[0].conj() * &a[2] + &b[1].conj() * &a[1] + &b[2].conj() * &a[0]
}

pub fn classify_vector(a: &HVector) -> Result<PointClass, GeomError> {
    if a.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    Ok(match sign_real(&herm(a, a))? {
        Sign::Negative => PointClass::Negative,
        Sign::Zero => PointClass::Null,
        Sign::Positive => PointClass::Positive,
    })
}

fn require_negative(a: &HVector) -> Result<(), GeomError> {
    match classify_vector(a)? {
        PointClass::Negative => Ok(()),
        _ => Err(GeomError::NonNegativeVector),
    }
}

/// A point [z, t] of the Heisenberg group.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HeisenbergPoint {
    pub z: CycNum,
    pub t: CycNum,
}

impl HeisenbergPoint {
    pub fn new(z: CycNum, t: RealCyc) -> Self {
        HeisenbergPoint { z, t: t.into_inner() }
    }

    pub fn origin() -> Self {
        HeisenbergPoint { z: CycNum::zero(), t: CycNum::zero() }
    }

    pub fn inverse(&self) -> Self {
        HeisenbergPoint { z: -&self.z, t: -&self.t }
    }
}

/// Horospherical coordinates (z, t, u), u ≥ 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct HoroPoint {
    pub z: CycNum,
    pub t: CycNum,
    pub u: CycNum,
}

impl HoroPoint {
    pub fn new(z: CycNum, t: RealCyc, u: RealCyc) -> Result<Self, GeomError> {
        if u.sign()? == Sign::Negative {
            return Err(GeomError::PositiveVector);
        }
        Ok(HoroPoint { z, t: t.into_inner(), u: u.into_inner() })
    }

    pub fn boundary(p: &HeisenbergPoint) -> Self {
        HoroPoint { z: p.z.clone(), t: p.t.clone(), u: CycNum::zero() }
    }
}

/// Standard lift ((−|z|² − u + it)/2, z, 1).
pub fn lift(p: &HoroPoint) -> HVector {
    let first = &(&(-p.z.norm_sq()) - &p.u + &imag_unit() * &p.t) * &rat(1, 2);
    HVector::new(first, p.z.clone(), CycNum::one())
}

pub fn horo_coords(a: &HVector) -> Result<HoroPoint, GeomError> {
    if classify_vector(a)? == PointClass::Positive {
        return Err(GeomError::PositiveVector);
    }
    let Ok(inv) = a[2].inv() else {
        return Err(GeomError::PointAtInfinity);
    };
    let v = a.scale(&inv);
    let z = v[1].clone();
    let t = &int(2) * &v[0].im();
    let u = &(&int(-2) * &v[0].re()) - &z.norm_sq();
    Ok(HoroPoint { z, t, u })
}

/// [z,t]·[ζ,ν] = [z+ζ, t+ν−2Im(z̄ζ)].
pub fn heis_mul(p: &HeisenbergPoint, q: &HeisenbergPoint) -> HeisenbergPoint {
    let twist = &int(2) * &(&p.z.conj() * &q.z).im();
    HeisenbergPoint { z: &p.z + &q.z, t: &(&p.t + &q.t) - &twist }
}

/// The Heisenberg translation T[z,t], an upper-triangular unipotent matrix.
pub fn heis_translation(p: &HeisenbergPoint) -> GroupElt {
    let corner = &(&(-p.z.norm_sq()) + &(&imag_unit() * &p.t)) * &rat(1, 2);
    let m = Mat3([
        [CycNum::one(), -p.z.conj(), corner],
        [CycNum::zero(), CycNum::one(), p.z.clone()],
        [CycNum::zero(), CycNum::zero(), CycNum::one()],
    ]);
    GroupElt::from_matrix(m).expect("Heisenberg translations are unitary")
}

/// cosh²(d(u,v)/2) = ⟨u,v⟩⟨v,u⟩ / (⟨u,u⟩⟨v,v⟩).
pub fn bergman_cosh2(u: &HVector, v: &HVector) -> Result<RealCyc, GeomError> {
    require_negative(u)?;
    require_negative(v)?;
    let num = herm(u, v).norm_sq();
    let den = &herm(u, u) * &herm(v, v);
    Ok(RealCyc::new(&num * &den.inv()?)?)
}

/// Exact test that p lies on the geodesic segment [u, v].
pub fn on_geodesic_between(u: &HVector, p: &HVector, v: &HVector) -> Result<bool, GeomError> {
    let cosh = |x: &HVector, y: &HVector| -> Result<CycNum, GeomError> {
        Ok(&(&int(2) * bergman_cosh2(x, y)?.value()) - &int(1))
    };
    let c_uv = cosh(u, v)?;
    let c_up = cosh(u, p)?;
    let c_pv = cosh(p, v)?;
    let lhs = &c_uv - &(&c_up * &c_pv);
    let one = int(1);
    let rhs = &(&(&c_up * &c_up) - &one) * &(&(&c_pv * &c_pv) - &one);
    Ok(&lhs * &lhs == rhs && sign_real(&lhs)? != Sign::Negative)
}

/// Polar vector of the complex line spanned by the points, if they span
/// exactly a 2-dimensional subspace.
pub fn common_complex_line(pts: &[HVector]) -> Option<HVector> {
    let first = pts.iter().find(|p| !p.is_zero())?;
    let second = pts.iter().find(|p| !p.is_zero() && !p.proportional(first))?;
    if pts.iter().any(|p| !det3(first, second, p).is_zero()) {
        return None;
    }
    let h = Mat3::hermitian_form();
    Some(h.apply(first).cross(&h.apply(second)).conj())
}

/// Reality of the Hermitian triple product ⟨u,v⟩⟨v,w⟩⟨w,u⟩.
pub fn triple_product_is_real(u: &HVector, v: &HVector, w: &HVector) -> Result<bool, GeomError> {
    let a = herm(u, v);
    let b = herm(v, w);
    let c = herm(w, u);
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(GeomError::DegeneratePair);
    }
    Ok((&(&a * &b) * &c).is_real())
}

/// Fourth power of the extended Cygan distance: A² + B² with
/// A = |z−w|² + |u−v|, B = t − s + 2Im(z·w̄).
pub fn cygan_dist4(p: &HoroPoint, q: &HoroPoint) -> Result<RealCyc, GeomError> {
    let du = &p.u - &q.u;
    let du_abs = match sign_real(&du)? {
        Sign::Negative => -du,
        _ => du,
    };
    let a = &(&p.z - &q.z).norm_sq() + &du_abs;
    let b = &(&p.t - &q.t) + &(&int(2) * &(&p.z * &q.z.conj()).im());
    Ok(RealCyc::new(&(&a * &a) + &(&b * &b))?)
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct IsometricSphere {
    pub center: HeisenbergPoint,
    /// radius⁴ = 4 / |g31|²
    pub radius4: CycNum,
}

pub fn isometric_sphere(g: &GroupElt) -> Result<IsometricSphere, GeomError> {
    let m = g.matrix();
    let g31 = m.entry(2, 0);
    if g31.is_zero() {
        return Err(GeomError::FixesInfinity);
    }
    let c31 = g31.conj().inv()?;
    let z = &m.entry(2, 1).conj() * &c31;
    let t = &int(2) * &(&m.entry(2, 2).conj() * &c31).im();
    let radius4 = &int(4) * &g31.norm_sq().inv()?;
    Ok(IsometricSphere { center: HeisenbergPoint { z, t }, radius4 })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FordSide {
    Interior,
    On,
    Exterior,
}

impl std::fmt::Display for FordSide {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            FordSide::Interior => "inside",
            FordSide::On => "on",
            FordSide::Exterior => "outside",
        })
    }
}

/// Position of p relative to the isometric sphere of g.
pub fn ford_side(p: &HVector, g: &GroupElt) -> Result<FordSide, GeomError> {
    if p.is_zero() {
        return Err(GeomError::ZeroVector);
    }
    if g.matrix().entry(2, 0).is_zero() {
        return Err(GeomError::FixesInfinity);
    }
    let q_inf = HVector::from_ints(1, 0, 0);
    let pre = g.inverse().apply(&q_inf);
    let diff = &herm(p, &q_inf).norm_sq() - &herm(p, &pre).norm_sq();
    Ok(match sign_real(&diff)? {
        Sign::Positive => FordSide::Interior,
        Sign::Zero => FordSide::On,
        Sign::Negative => FordSide::Exterior,
    })
}

pub const NAMED_POINTS: [&str; 11] =
    ["z0", "z1", "z2", "z3", "qinf", "w3", "w4", "w12", "n1", "n2", "n3"];

/// Exact lifts of the named points and polar vectors.
pub fn named_point(name: &str) -> Option<HVector> {
    let w = omega();
    let i = imag_unit();
    let half = rat(1, 2);
    let one = CycNum::one();
    Some(match name {
        "z0" => HVector::new(omega_bar(), CycNum::zero(), one),
        "z1" => HVector::new(int(-1), -&w, one),
        "z2" => HVector::from_ints(-1, 1, 1),
        "z3" => HVector::new(w, CycNum::zero(), one),
        "qinf" => HVector::from_ints(1, 0, 0),
        "w3" => {
            let first = -embed(Named::Zeta18);
            let coef = &(&sqrt3() * &half) - &(&int(2) * &embed(Named::SinPi9));
            HVector::new(first, &half - &(&coef * &i), one)
        }
        "w4" => {
            let first = &(&(-sqrt3()) * &half) - &(&i * &half);
            let second = &half + &(&(&(&int(2) - &sqrt3()) * &i) * &half);
            HVector::new(first, second, one)
        }
        "w12" => HVector::from_ints(-1, 0, 1),
        "n1" => HVector::from_ints(0, 1, 0),
        "n2" => HVector::new(CycNum::zero(), -&w, one),
        "n3" => HVector::from_ints(-1, 1, 0),
        _ => return None,
    })
}

/// JSON object mapping each named point to its three coordinate strings.
pub fn named_points_json() -> serde_json::Value {
    let map: BTreeMap<&str, HVector> =
        NAMED_POINTS.iter().map(|n| (*n, named_point(n).expect("registered"))).collect();
    serde_json::to_value(map).expect("serializable")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{eval_str, Gen};

    fn pt(n: &str) -> HVector {
        named_point(n).unwrap()
    }

    fn real(x: CycNum) -> RealCyc {
        RealCyc::new(x).unwrap()
    }

    #[test]
    fn herm_examples() {
        assert!(herm(&pt("qinf"), &pt("qinf")).is_zero());
        assert_eq!(herm(&pt("z0"), &pt("z0")), int(-1));
        assert_eq!(herm(&pt("n1"), &pt("n1")), int(1));
    }

    #[test]
    fn classify_vector_examples() {
        assert_eq!(classify_vector(&pt("z0")), Ok(PointClass::Negative));
        assert_eq!(classify_vector(&pt("qinf")), Ok(PointClass::Null));
        assert_eq!(classify_vector(&pt("n1")), Ok(PointClass::Positive));
        assert_eq!(classify_vector(&HVector::zero()), Err(GeomError::ZeroVector));
    }

    #[test]
    fn lift_and_horo_coords() {
        let p = HoroPoint::new(omega(), RealCyc::from_int(1), RealCyc::from_int(2)).unwrap();
        assert_eq!(horo_coords(&lift(&p)).unwrap(), p);
        let o = HoroPoint::new(CycNum::zero(), RealCyc::zero(), RealCyc::zero()).unwrap();
        assert_eq!(lift(&o), HVector::from_ints(0, 0, 1));
        let z0 = horo_coords(&pt("z0")).unwrap();
        assert_eq!(z0.z, CycNum::zero());
        assert_eq!(z0.t, -sqrt3());
        assert_eq!(z0.u, int(1));
        assert_eq!(horo_coords(&pt("qinf")), Err(GeomError::PointAtInfinity));
        assert_eq!(horo_coords(&pt("n1")), Err(GeomError::PositiveVector));
    }

    #[test]
    fn heisenberg_examples() {
        let v = |t: i64| HeisenbergPoint::new(CycNum::zero(), RealCyc::from_int(t));
        assert_eq!(heis_mul(&v(1), &v(2)), v(3));
        let a = HeisenbergPoint::new(int(1), RealCyc::zero());
        let b = HeisenbergPoint::new(imag_unit(), RealCyc::zero());
        let ab = heis_mul(&a, &b);
        assert_eq!(ab.z, &int(1) + &imag_unit());
        assert_eq!(ab.t, int(-2));
        let p = HeisenbergPoint::new(omega(), real(sqrt3()));
        assert_eq!(heis_mul(&p, &p.inverse()), HeisenbergPoint::origin());
    }

    #[test]
    fn heis_translation_examples() {
        assert!(heis_translation(&HeisenbergPoint::origin()).is_identity());
        let t = heis_translation(&HeisenbergPoint::new(CycNum::zero(), RealCyc::from_int(3)));
        assert_eq!(*t.matrix().entry(0, 2), &imag_unit() * &rat(3, 2));
        let one = HeisenbergPoint::new(int(1), RealCyc::zero());
        let image = heis_translation(&one).apply(&lift(&HoroPoint::boundary(&HeisenbergPoint::origin())));
        assert!(image.proportional(&lift(&HoroPoint::boundary(&one))));
    }

    #[test]
    fn heis_translation_is_homomorphism() {
        let p = HeisenbergPoint::new(omega(), RealCyc::from_int(2));
        let q = HeisenbergPoint::new(&int(1) - &imag_unit(), real(sqrt3()));
        let lhs = heis_translation(&p).mul(&heis_translation(&q));
        assert_eq!(lhs.matrix(), heis_translation(&heis_mul(&p, &q)).matrix());
    }

    #[test]
    fn bergman_examples() {
        assert_eq!(bergman_cosh2(&pt("z0"), &pt("z0")).unwrap(), RealCyc::from_int(1));
        let c = bergman_cosh2(&pt("z0"), &pt("z3")).unwrap();
        assert_eq!(sign_real(&(c.value() - &int(1))), Ok(Sign::Positive));
        let r = Gen::R.elt();
        let moved = bergman_cosh2(&r.apply(&pt("z0")), &r.apply(&pt("z3"))).unwrap();
        assert_eq!(moved, c);
        assert_eq!(bergman_cosh2(&pt("qinf"), &pt("z0")), Err(GeomError::NonNegativeVector));
    }

    #[test]
    fn betweenness_examples() {
        let (z0, z2, z3) = (pt("z0"), pt("z2"), pt("z3"));
        assert_eq!(on_geodesic_between(&z0, &z0, &z2), Ok(true));
        assert_eq!(on_geodesic_between(&z0, &pt("w12"), &z3), Ok(true));
        assert_eq!(on_geodesic_between(&z0, &pt("w4"), &z2), Ok(true));
        assert_eq!(on_geodesic_between(&z0, &pt("w4"), &z3), Ok(false));
        assert_eq!(on_geodesic_between(&z0, &z2, &pt("w4")), Ok(false));
    }

    #[test]
    fn complex_line_examples() {
        let polar = common_complex_line(&[pt("z0"), pt("z3"), pt("qinf")]).unwrap();
        assert!(polar.proportional(&pt("n1")));
        assert_eq!(common_complex_line(&[pt("z0"), pt("z1"), pt("z2")]), None);
        assert_eq!(common_complex_line(&[pt("z0"), pt("z0")]), None);
    }

    #[test]
    fn triple_product_examples() {
        let (z0, z1, z2, z3) = (pt("z0"), pt("z1"), pt("z2"), pt("z3"));
        assert_eq!(triple_product_is_real(&z0, &z3, &z1), Ok(true));
        assert_eq!(triple_product_is_real(&z0, &z3, &z2), Ok(true));
        assert_eq!(triple_product_is_real(&z0, &z0, &z1), Ok(true));
        assert_eq!(triple_product_is_real(&z0, &z1, &z2), Ok(false));
        assert_eq!(
            triple_product_is_real(&pt("qinf"), &pt("qinf"), &z0),
            Err(GeomError::DegeneratePair)
        );
    }

    #[test]
    fn cygan_examples() {
        let h = |z: CycNum, t: i64, u: i64| {
            HoroPoint::new(z, RealCyc::from_int(t), RealCyc::from_int(u)).unwrap()
        };
        let p = h(omega(), 3, 2);
        assert_eq!(cygan_dist4(&p, &p).unwrap(), RealCyc::zero());
        assert_eq!(cygan_dist4(&h(int(0), 0, 0), &h(int(0), 1, 0)).unwrap(), RealCyc::from_int(1));
        assert_eq!(cygan_dist4(&h(int(0), 0, 4), &h(int(0), 0, 0)).unwrap(), RealCyc::from_int(16));
    }

    #[test]
    fn isometric_sphere_examples() {
        let r = isometric_sphere(&Gen::R.elt()).unwrap();
        assert_eq!(r.center, HeisenbergPoint::origin());
        assert_eq!(r.radius4, int(4));
        assert_eq!(isometric_sphere(&Gen::P.elt()), Err(GeomError::FixesInfinity));
        let rp = isometric_sphere(&eval_str("R*P").unwrap()).unwrap();
        assert_eq!(rp.radius4, int(4));
    }

    #[test]
    fn ford_side_examples() {
        let rp = eval_str("R*P").unwrap();
        for z in ["z0", "z1", "z2"] {
            assert_eq!(ford_side(&pt(z), &rp), Ok(FordSide::On), "{z}");
        }
        // z3 is strictly outside I(RP); all four vertices lie on I(R) = I(PR).
        assert_eq!(ford_side(&pt("z3"), &rp), Ok(FordSide::Exterior));
        for z in ["z0", "z1", "z2", "z3"] {
            assert_eq!(ford_side(&pt(z), &Gen::R.elt()), Ok(FordSide::On), "{z}");
            assert_eq!(ford_side(&pt(z), &eval_str("P*R").unwrap()), Ok(FordSide::On), "{z}");
        }
        assert_eq!(ford_side(&pt("qinf"), &rp), Ok(FordSide::Exterior));
        let center = rp.inverse().apply(&pt("qinf"));
        assert_eq!(ford_side(&center, &rp), Ok(FordSide::Interior));
        assert_eq!(ford_side(&pt("z0"), &Gen::P.elt()), Err(GeomError::FixesInfinity));
    }

    #[test]
    fn sphere_center_is_preimage_of_infinity() {
        let rp = eval_str("R*P").unwrap();
        let s = isometric_sphere(&rp).unwrap();
        let pre = rp.inverse().apply(&pt("qinf"));
        assert!(pre.proportional(&lift(&HoroPoint::boundary(&s.center))));
    }

    #[test]
    fn registry_round_trips_through_json() {
        let json = named_points_json();
        for n in NAMED_POINTS {
            let v: HVector = serde_json::from_value(json[n].clone()).unwrap();
            assert_eq!(v, pt(n));
        }
        assert_eq!(named_point("z9"), None);
    }

    #[test]
    fn named_points_match_float_coordinates() {
        let pi = std::f64::consts::PI;
        let s3 = 3f64.sqrt();
        let w3 = pt("w3").to_f64();
        assert!((w3[0].0 + (pi / 9.0).cos()).abs() < 1e-12);
        assert!((w3[1].1 + (s3 / 2.0 - 2.0 * (pi / 9.0).sin())).abs() < 1e-12);
        let w4 = pt("w4").to_f64();
        assert!((w4[0].0 + s3 / 2.0).abs() < 1e-12 && (w4[0].1 + 0.5).abs() < 1e-12);
        assert!((w4[1].1 - (2.0 - s3) / 2.0).abs() < 1e-12);
    }
}
