//! Exact matrices of PU(2,1; Z[ω]): generators, words, projective equality,
//! isometry classification, complex reflections and fixed points.
//!
//! Matrices act on column vectors from the left and words are evaluated
//! left to right, so the word `R*P` is the matrix product R·P.

use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::field::{sign_real, CycNum, FieldError, Sign, CONDUCTOR};
use crate::geom::{classify_vector, herm, GeomError, PointClass};
use crate::linalg::{HVector, Mat3};
use crate::word::{parse_letters, Letters, WordError};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error(transparent)]
    Word(#[from] WordError),
    #[error("matrix is not unitary for the Hermitian form")]
    NotUnitary,
    #[error("zero vector")]
    ZeroVector,
    #[error("polar vector is not positive")]
    NonPositivePolar,
    #[error("reflection order {0} does not divide 36")]
    OrderNotDividing36(u32),
    #[error("determinant is not a 6th root of unity")]
    DeterminantNotNormalizable,
    #[error("no eigenvalue among the 36th roots of unity")]
    EigenvalueOutsideField,
    #[error("no negative eigenvector")]
    NoNegativeEigenvector,
    #[error("negative fixed points form a complex line, not an isolated point")]
    NonIsolatedFixedSet,
    #[error("element is not elliptic ({0})")]
    NotElliptic(IsometryType),
    #[error("no power up to {0} is scalar")]
    OrderCapExceeded(u64),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Named generators. R1, R2, R3 and J are defined through P, Q, R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Gen {
    P,
    Q,
    R,
    R1,
    R2,
    R3,
    J,
}

impl Gen {
    pub const ALL: [Gen; 7] = [Gen::P, Gen::Q, Gen::R, Gen::R1, Gen::R2, Gen::R3, Gen::J];

    pub fn name(self) -> &'static str {
        match self {
            Gen::P => "P",
            Gen::Q => "Q",
            Gen::R => "R",
            Gen::R1 => "R1",
            Gen::R2 => "R2",
            Gen::R3 => "R3",
            Gen::J => "J",
        }
    }

    pub fn from_name(s: &str) -> Option<Gen> {
        Gen::ALL.into_iter().find(|g| g.name() == s)
    }

    pub fn matrix(self) -> &'static Mat3 {
        static TABLE: OnceLock<Vec<Mat3>> = OnceLock::new();
        let table = TABLE.get_or_init(|| {
            let w = crate::field::omega();
            let (zero, one) = (CycNum::zero(), CycNum::one());
            let p = Mat3([
                [one.clone(), one.clone(), w.clone()],
                [zero.clone(), w.clone(), -&w],
                [zero.clone(), zero.clone(), one.clone()],
            ]);
            let q = Mat3([
                [one.clone(), one.clone(), w.clone()],
                [zero.clone(), -&one, one.clone()],
                [zero.clone(), zero, one],
            ]);
            let r = Mat3::from_ints([[0, 0, 1], [0, -1, 0], [1, 0, 0]]);
            let p_inv = p.h_adjoint();
            let j = r.mul(&p);
            let r1 = q.mul(&p_inv);
            let r2 = j.mul(&r1).mul(&j.h_adjoint());
            let r3 = p_inv.mul(&q);
            vec![p, q, r, r1, r2, r3, j]
        });
        &table[self as usize]
    }

    pub fn elt(self) -> GroupElt {
        GroupElt { mat: self.matrix().clone(), word: Some(Word(Letters::single(self.name(), 1))) }
    }
}

/// A word in the named generators.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word(pub Letters);

impl Word {
    pub fn identity() -> Word {
        Word(Letters::empty())
    }

    pub fn letters(&self) -> impl Iterator<Item = (Gen, i64)> + '_ {
        self.0 .0.iter().map(|(n, e)| (Gen::from_name(n).expect("validated generator"), *e))
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.inverse())
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.concat(&other.0))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn parse_word(text: &str) -> Result<Word, GroupError> {
    let known = |s: &str| Gen::from_name(s).is_some();
    Ok(Word(parse_letters(text, &known, Some("Id"))?))
}

pub fn eval(w: &Word) -> GroupElt {
    let mut m = Mat3::identity();
    for (g, e) in w.letters() {
        let base = if e < 0 { g.matrix().h_adjoint() } else { g.matrix().clone() };
        for _ in 0..e.unsigned_abs() {
            m = m.mul(&base);
        }
    }
    GroupElt { mat: m, word: Some(w.clone()) }
}

pub fn eval_str(text: &str) -> Result<GroupElt, GroupError> {
    Ok(eval(&parse_word(text)?))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum IsometryType {
    Identity,
    RegularElliptic,
    SpecialElliptic,
    Parabolic,
    Loxodromic,
}

impl fmt::Display for IsometryType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            IsometryType::Identity => "identity",
            IsometryType::RegularElliptic => "regular-elliptic",
            IsometryType::SpecialElliptic => "special-elliptic",
            IsometryType::Parabolic => "parabolic",
            IsometryType::Loxodromic => "loxodromic",
        })
    }
}

/// An H-unitary matrix, optionally with the word it came from.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupElt {
    mat: Mat3,
    word: Option<Word>,
}

impl PartialEq for GroupElt {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for GroupElt {}

impl GroupElt {
    pub fn from_matrix(mat: Mat3) -> Result<GroupElt, GroupError> {
        if mat.is_h_unitary() {
            Ok(GroupElt { mat, word: None })
        } else {
            Err(GroupError::NotUnitary)
        }
    }

    pub fn identity() -> GroupElt {
        GroupElt { mat: Mat3::identity(), word: Some(Word::identity()) }
    }

    pub fn matrix(&self) -> &Mat3 {
        &self.mat
    }

    pub fn word(&self) -> Option<&Word> {
        self.word.as_ref()
    }

    pub fn mul(&self, other: &GroupElt) -> GroupElt {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.concat(b)),
            _ => None,
        };
        GroupElt { mat: self.mat.mul(&other.mat), word }
    }

    /// H⁻¹·g*·H.
    pub fn inverse(&self) -> GroupElt {
        GroupElt { mat: self.mat.h_adjoint(), word: self.word.as_ref().map(Word::inverse) }
    }

    pub fn pow(&self, k: i64) -> GroupElt {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = GroupElt::identity();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        acc
    }

    pub fn conjugate_by(&self, h: &GroupElt) -> GroupElt {
        h.mul(self).mul(&h.inverse())
    }

    pub fn scaled(&self, s: &CycNum) -> GroupElt {
        GroupElt { mat: self.mat.scale(s), word: self.word.clone() }
    }

    pub fn apply(&self, v: &HVector) -> HVector {
        self.mat.apply(v)
    }

    pub fn is_identity(&self) -> bool {
        self.mat == Mat3::identity()
    }

    /// Identity in PU(2,1): a scalar matrix.
    pub fn is_projective_identity(&self) -> bool {
        self.mat.as_scalar().is_some()
    }

    pub fn fixes_projectively(&self, v: &HVector) -> Result<bool, GroupError> {
        if v.is_zero() {
            return Err(GroupError::ZeroVector);
        }
        Ok(self.apply(v).cross(v).is_zero())
    }

    /// Canonical projective representative, for hashing PU classes.
    pub fn projective_key(&self) -> Mat3 {
        self.mat.projective_key()
    }

    /// Multiply by a cube root of det⁻¹ so the determinant becomes 1.
    pub fn det_normalized(&self) -> Result<Mat3, GroupError> {
        let d = self.mat.det();
        let k = root_of_unity_exponent(&d).ok_or(GroupError::DeterminantNotNormalizable)?;
        if k % 3 != 0 {
            return Err(GroupError::DeterminantNotNormalizable);
        }
        Ok(self.mat.scale(&CycNum::zeta_pow(-k / 3)))
    }

    pub fn classify(&self) -> Result<IsometryType, GroupError> {
        classify(self)
    }

    pub fn order(&self, cap: u64) -> Result<u64, GroupError> {
        element_order(self, cap)
    }
}

/// k with ζ₃₆^k = x, if x is a 36th root of unity.
pub fn root_of_unity_exponent(x: &CycNum) -> Option<i64> {
    (0..CONDUCTOR).find(|&k| CycNum::zeta_pow(k) == *x)
}

pub fn pu_equal(g: &GroupElt, h: &GroupElt) -> bool {
    let (a, b) = (g.matrix(), h.matrix());
    let Some((i, j)) = (0..9).map(|n| (n / 3, n % 3)).find(|&(i, j)| !b.entry(i, j).is_zero()) else {
        return a.is_zero();
    };
    let Ok(lambda) = a.entry(i, j).checked_div(b.entry(i, j)) else {
        return false;
    };
    !lambda.is_zero() && *a == b.scale(&lambda)
}

pub fn inverse(g: &GroupElt) -> GroupElt {
    g.inverse()
}

/// Order-k complex reflection with polar vector n:
/// z ↦ z + (e^{2πi/k} − 1)·⟨z,n⟩/⟨n,n⟩·n.
pub fn complex_reflection(n: &HVector, k: u32) -> Result<GroupElt, GroupError> {
    if k < 2 || CONDUCTOR % i64::from(k) != 0 {
        return Err(GroupError::OrderNotDividing36(k));
    }
    if classify_vector(n)? != PointClass::Positive {
        return Err(GroupError::NonPositivePolar);
    }
    let mu = CycNum::zeta_pow(CONDUCTOR / i64::from(k));
    let coef = &(&mu - &CycNum::one()) * &herm(n, n).inv()?;
    // n·(n* H): entry (i,j) = n_i · conj(n_{2-j})
    let outer = Mat3::from_fn(|i, j| &(&n[i] * &n[2 - j].conj()) * &coef);
    let m = Mat3::from_fn(|i, j| {
        let base = if i == j { CycNum::one() } else { CycNum::zero() };
        &base + outer.entry(i, j)
    });
    GroupElt::from_matrix(m)
}

/// Isometry type from the trace discriminant of the det-normalized lift.
pub fn classify(g: &GroupElt) -> Result<IsometryType, GroupError> {
    if g.is_projective_identity() {
        return Ok(IsometryType::Identity);
    }
    let m = g.det_normalized()?;
    let tau = m.trace();
    let n2 = tau.norm_sq();
    let tau3 = &(&tau * &tau) * &tau;
    let f = &(&(&(&n2 * &n2) - &(&CycNum::from_int(8) * &tau3.re())) + &(&CycNum::from_int(18) * &n2))
        - &CycNum::from_int(27);
    Ok(match sign_real(&f)? {
        Sign::Negative => IsometryType::RegularElliptic,
        Sign::Positive => IsometryType::Loxodromic,
        Sign::Zero => {
            if diagonalizable(&m) {
                IsometryType::SpecialElliptic
            } else {
                IsometryType::Parabolic
            }
        }
    })
}

type Poly = Vec<CycNum>;

fn trim(mut p: Poly) -> Poly {
    while p.last().is_some_and(CycNum::is_zero) {
        p.pop();
    }
    p
}

fn poly_rem(a: &Poly, b: &Poly) -> Poly {
    let mut r = trim(a.clone());
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("trimmed");
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &(bc * &c);
        }
        r = trim(r);
    }
    r
}

fn poly_quot(a: &Poly, b: &Poly) -> Poly {
    let mut r = trim(a.clone());
    let lead_inv = b.last().expect("nonzero divisor").inv().expect("trimmed");
    let mut q = vec![CycNum::zero(); r.len().saturating_sub(b.len()) + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().expect("nonempty") * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &(bc * &c);
        }
        q[shift] = c;
        r = trim(r);
    }
    trim(q)
}

fn poly_gcd(a: &Poly, b: &Poly) -> Poly {
    let (mut a, mut b) = (trim(a.clone()), trim(b.clone()));
    while !b.is_empty() {
        let r = poly_rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn eval_poly_at_matrix(p: &Poly, m: &Mat3) -> Mat3 {
    let mut acc = Mat3::scalar(&CycNum::zero());
    for c in p.iter().rev() {
        acc = acc.mul(m).sub(&Mat3::scalar(&-c));
    }
    acc
}

/// A matrix is diagonalizable iff the squarefree part of its characteristic
/// polynomial annihilates it.
fn diagonalizable(m: &Mat3) -> bool {
    let [c0, c1, c2] = m.char_poly();
    let p: Poly = vec![c0, c1.clone(), c2.clone(), CycNum::one()];
    let dp: Poly = vec![c1, &CycNum::from_int(2) * &c2, CycNum::from_int(3)];
    let g = poly_gcd(&p, &dp);
    let sq = poly_quot(&p, &g);
    eval_poly_at_matrix(&sq, m).is_zero()
}

/// Eigenspaces of the det-normalized lift for eigenvalues among the 36th
/// roots of unity, as (exponent k, basis).
pub fn root_eigenspaces(g: &GroupElt) -> Result<Vec<(i64, Vec<HVector>)>, GroupError> {
    let m = g.det_normalized()?;
    Ok((0..CONDUCTOR)
        .filter_map(|k| {
            let basis = m.sub(&Mat3::scalar(&CycNum::zeta_pow(k))).kernel();
            (!basis.is_empty()).then_some((k, basis))
        })
        .collect())
}

/// The isolated fixed point in the ball of an elliptic element.
pub fn fixed_point_elliptic(g: &GroupElt) -> Result<HVector, GroupError> {
    let kind = classify(g)?;
    if !matches!(kind, IsometryType::RegularElliptic | IsometryType::SpecialElliptic) {
        return Err(GroupError::NotElliptic(kind));
    }
    let spaces = root_eigenspaces(g)?;
    if spaces.is_empty() {
        return Err(GroupError::EigenvalueOutsideField);
    }
    for (_, basis) in &spaces {
        match basis.len() {
            1 => {
                if classify_vector(&basis[0])? == PointClass::Negative {
                    let v = basis[0].normalized();
                    debug_assert!(g.fixes_projectively(&v)?);
                    return Ok(v);
                }
            }
            2 => {
                let h = Mat3::hermitian_form();
                let polar = h.apply(&basis[0]).cross(&h.apply(&basis[1])).conj();
                if classify_vector(&polar)? == PointClass::Positive {
                    return Err(GroupError::NonIsolatedFixedSet);
                }
            }
            _ => return Err(GroupError::NonIsolatedFixedSet),
        }
    }
    Err(GroupError::NoNegativeEigenvector)
}

/// Smallest n ≥ 1 with gⁿ scalar.
pub fn element_order(g: &GroupElt, cap: u64) -> Result<u64, GroupError> {
    let mut acc = g.matrix().clone();
    for n in 1..=cap {
        if acc.as_scalar().is_some() {
            return Ok(n);
        }
        acc = acc.mul(g.matrix());
    }
    Err(GroupError::OrderCapExceeded(cap))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PresentationId {
    #[serde(rename = "pqr")]
    Pqr,
    #[serde(rename = "reflections")]
    Reflections,
    #[serde(rename = "j-r1")]
    JR1,
    #[serde(rename = "gamma-infty")]
    GammaInfty,
}

impl PresentationId {
    pub const ALL: [PresentationId; 4] =
        [PresentationId::Pqr, PresentationId::Reflections, PresentationId::JR1, PresentationId::GammaInfty];

    pub fn name(self) -> &'static str {
        match self {
            PresentationId::Pqr => "pqr",
            PresentationId::Reflections => "reflections",
            PresentationId::JR1 => "j-r1",
            PresentationId::GammaInfty => "gamma-infty",
        }
    }

    pub fn generators(self) -> &'static [&'static str] {
        match self {
            PresentationId::Pqr => &["P", "Q", "R"],
            PresentationId::Reflections => &["R1", "R2", "R3"],
            PresentationId::JR1 => &["J", "R1"],
            PresentationId::GammaInfty => &["P", "Q"],
        }
    }

    pub fn relators(self) -> &'static [&'static str] {
        match self {
            PresentationId::Pqr => &[
                "R^2",
                "(Q*P^-1)^6",
                "P*Q^-1*R*Q*P^-1*R",
                "P^3*Q^-2",
                "(R*P)^3",
            ],
            PresentationId::Reflections => &[
                "R1^6",
                "R2^6",
                "R3^6",
                "R2*R1*R2*(R1*R2*R1)^-1",
                "R3*R2*R3*(R2*R3*R2)^-1",
                "R1*R3*R1*(R3*R1*R3)^-1",
                "(R1*R2*R3)^4",
                "(R1*R2*R3)^-2*R1*R2*((R2*R3*R1)^-2*R2*R3)^-1",
            ],
            PresentationId::JR1 => &[
                "J^3",
                "R1^6",
                "(J*R1^-1*J)^4",
                "R1*(J*R1^-1*J)^2*R1^-1*(J*R1^-1*J)^-2",
            ],
            PresentationId::GammaInfty => &["(Q*P^-1)^6", "P^3*Q^-2"],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelatorCheck {
    pub relator: String,
    pub holds: bool,
    /// The scalar the relator evaluates to, when it is scalar.
    pub residual: Option<CycNum>,
}

pub fn check_relator(w: &Word) -> RelatorCheck {
    let residual = eval(w).matrix().as_scalar();
    RelatorCheck { relator: w.to_string(), holds: residual.is_some(), residual }
}

pub fn verify_presentation(id: PresentationId) -> Vec<RelatorCheck> {
    id.relators()
        .iter()
        .map(|r| {
            let mut c = check_relator(&parse_word(r).expect("built-in relator parses"));
            c.relator = (*r).to_string();
            c
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::omega;
    use crate::geom::{heis_translation, named_point, HeisenbergPoint};
    use crate::field::RealCyc;

    fn pt(n: &str) -> HVector {
        named_point(n).unwrap()
    }

    fn e(s: &str) -> GroupElt {
        eval_str(s).unwrap()
    }

    #[test]
    fn parse_word_examples() {
        assert_eq!(parse_word("R*P").unwrap().to_string(), "R*P");
        let w = parse_word("(Q*P^-1)^6").unwrap();
        assert_eq!(w.0.length(), 12);
        assert_eq!(w.to_string(), "Q*P^-1*".repeat(6).trim_end_matches('*'));
        assert!(matches!(
            parse_word("R4"),
            Err(GroupError::Word(WordError::UnknownGenerator { .. }))
        ));
        assert!(parse_word("Id").unwrap().0.is_empty());
    }

    #[test]
    fn eval_examples() {
        assert!(e("Id").is_identity());
        assert!(e("R^2").is_identity());
        assert_eq!(e("R1").matrix(), e("Q*P^-1").matrix());
        assert_eq!(e("R3").matrix(), e("P^-1*Q").matrix());
        assert_eq!(e("J").matrix(), e("R*P").matrix());
    }

    #[test]
    fn generators_are_unitary() {
        for g in Gen::ALL {
            assert!(g.matrix().is_h_unitary(), "{}", g.name());
        }
    }

    #[test]
    fn pu_equal_examples() {
        assert!(pu_equal(&e("(R*P)^3"), &GroupElt::identity()));
        assert!(!pu_equal(&e("P"), &e("Q")));
        let g = e("P*R*Q^-1");
        assert!(pu_equal(&g, &g.scaled(&omega())));
    }

    #[test]
    fn inverse_examples() {
        assert!(inverse(&GroupElt::identity()).is_identity());
        assert_eq!(inverse(&Gen::R.elt()), Gen::R.elt());
        assert!(inverse(&Gen::P.elt()).mul(&Gen::P.elt()).is_identity());
    }

    #[test]
    fn apply_examples() {
        assert_eq!(Gen::R1.elt().fixes_projectively(&pt("z0")), Ok(true));
        assert!(Gen::R.elt().apply(&pt("z0")).proportional(&pt("z3")));
        assert!(Gen::J.elt().apply(&pt("z0")).proportional(&pt("z1")));
        assert_eq!(Gen::R.elt().fixes_projectively(&HVector::zero()), Err(GroupError::ZeroVector));
    }

    #[test]
    fn complex_reflection_examples() {
        let r1 = complex_reflection(&pt("n1"), 6).unwrap();
        assert!(pu_equal(&r1, &Gen::R1.elt()));
        let r2 = complex_reflection(&pt("n2"), 6).unwrap();
        assert!(pu_equal(&r2, &Gen::R2.elt()));
        let r3 = complex_reflection(&pt("n3"), 6).unwrap();
        assert!(pu_equal(&r3, &Gen::R3.elt()));
        assert_eq!(r3.fixes_projectively(&pt("z2")), Ok(true));
        let inv = complex_reflection(&HVector::from_ints(1, 1, 1), 2).unwrap();
        assert!(inv.pow(2).is_projective_identity());
        assert!(pu_equal(&complex_reflection(&HVector::from_ints(1, 0, 1), 2).unwrap(), &Gen::R.elt()));
        assert_eq!(complex_reflection(&pt("n1"), 5), Err(GroupError::OrderNotDividing36(5)));
        assert_eq!(complex_reflection(&pt("z0"), 2), Err(GroupError::NonPositivePolar));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify(&Gen::J.elt()), Ok(IsometryType::RegularElliptic));
        let t = heis_translation(&HeisenbergPoint::new(CycNum::zero(), RealCyc::from_int(1)));
        assert_eq!(classify(&t), Ok(IsometryType::Parabolic));
        assert_eq!(classify(&Gen::R.elt()), Ok(IsometryType::SpecialElliptic));
        assert_eq!(classify(&GroupElt::identity()), Ok(IsometryType::Identity));
        assert_eq!(classify(&Gen::P.elt()), Ok(IsometryType::Parabolic));
        assert_eq!(classify(&e("R1*R2*R3")), Ok(IsometryType::RegularElliptic));
    }

    #[test]
    fn loxodromic_detected() {
        // R·T with a long vertical translation moves points far: trace is large.
        let t = heis_translation(&HeisenbergPoint::new(CycNum::zero(), RealCyc::from_int(8)));
        let g = Gen::R.elt().mul(&t);
        assert_eq!(classify(&g), Ok(IsometryType::Loxodromic));
    }

    #[test]
    fn fixed_point_examples() {
        let w3 = fixed_point_elliptic(&Gen::J.elt()).unwrap();
        assert!(w3.proportional(&pt("w3")));
        let w4 = fixed_point_elliptic(&e("R1*R2*R3")).unwrap();
        assert!(w4.proportional(&pt("w4")));
        assert_eq!(e("P*Q^-1").fixes_projectively(&pt("w12")), Ok(true));
        assert_eq!(fixed_point_elliptic(&Gen::R1.elt()), Err(GroupError::NonIsolatedFixedSet));
        assert_eq!(
            fixed_point_elliptic(&Gen::P.elt()),
            Err(GroupError::NotElliptic(IsometryType::Parabolic))
        );
    }

    #[test]
    fn presentations_hold() {
        for id in PresentationId::ALL {
            for c in verify_presentation(id) {
                assert!(c.holds, "{} {}", id.name(), c.relator);
            }
        }
    }

    #[test]
    fn relator_failure_is_reported() {
        let c = check_relator(&parse_word("P^2").unwrap());
        assert!(!c.holds);
        assert_eq!(c.residual, None);
    }

    #[test]
    fn conjugate_and_square_identities() {
        assert!(pu_equal(&Gen::R2.elt(), &e("R*P*Q*P^-2*R")));
        assert!(!pu_equal(&Gen::R2.elt(), &e("R*P*Q^-1*P^-2*R")));
        assert!(pu_equal(&Gen::R.elt(), &e("(R3*R1*R2)^2")));
        assert!(pu_equal(&Gen::R.elt(), &e("(J*R1^-1*J)^2")));
        assert!(pu_equal(&Gen::R3.elt(), &e("J^-1*R1*J")));
    }

    #[test]
    fn orders() {
        assert_eq!(element_order(&e("R1*R2*R3"), 100), Ok(4));
        assert_eq!(element_order(&Gen::J.elt(), 100), Ok(3));
        assert_eq!(element_order(&Gen::R1.elt(), 100), Ok(6));
        assert_eq!(element_order(&e("P*Q^-1"), 100), Ok(6));
        assert_eq!(element_order(&Gen::P.elt(), 50), Err(GroupError::OrderCapExceeded(50)));
    }
}
