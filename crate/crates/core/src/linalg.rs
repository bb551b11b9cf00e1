//! Column vectors and 3×3 matrices over Q(ζ₃₆).

use std::fmt;
use std::ops::{Index, Mul};

use serde::{Deserialize, Serialize};

use crate::field::CycNum;

/// A vector in C³. Matrices act on the left.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub [CycNum; 3]);

impl HVector {
    pub fn new(a: CycNum, b: CycNum, c: CycNum) -> Self {
        HVector([a, b, c])
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        HVector([a.into(), b.into(), c.into()])
    }

    pub fn zero() -> Self {
        HVector::from_ints(0, 0, 0)
    }

    pub fn entries(&self) -> &[CycNum; 3] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(CycNum::is_zero)
    }

    pub fn scale(&self, s: &CycNum) -> HVector {
        HVector([&self.0[0] * s, &self.0[1] * s, &self.0[2] * s])
    }

    pub fn add(&self, other: &HVector) -> HVector {
        HVector([&self.0[0] + &other.0[0], &self.0[1] + &other.0[1], &self.0[2] + &other.0[2]])
    }

    pub fn sub(&self, other: &HVector) -> HVector {
        HVector([&self.0[0] - &other.0[0], &self.0[1] - &other.0[1], &self.0[2] - &other.0[2]])
    }

    pub fn conj(&self) -> HVector {
        HVector([self.0[0].conj(), self.0[1].conj(), self.0[2].conj()])
    }

    /// Bilinear cross product (no conjugation).
    pub fn cross(&self, other: &HVector) -> HVector {
        let [a0, a1, a2] = &self.0;
        let [b0, b1, b2] = &other.0;
        HVector([a1 * b2 - a2 * b1, a2 * b0 - a0 * b2, a0 * b1 - a1 * b0])
    }

    /// Same point of CP²: both nonzero and linearly dependent.
    pub fn proportional(&self, other: &HVector) -> bool {
        !self.is_zero() && !other.is_zero() && self.cross(other).is_zero()
    }

    /// Representative with the last nonzero entry equal to 1.
    pub fn normalized(&self) -> HVector {
        match self.0.iter().rev().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    pub fn to_f64(&self) -> [(f64, f64); 3] {
        [self.0[0].to_f64_pair(), self.0[1].to_f64_pair(), self.0[2].to_f64_pair()]
    }
}

impl Index<usize> for HVector {
    type Output = CycNum;
    fn index(&self, i: usize) -> &CycNum {
        &self.0[i]
    }
}

impl fmt::Debug for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}, {}]", self.0[0], self.0[1], self.0[2])
    }
}

impl fmt::Display for HVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn det3(a: &HVector, b: &HVector, c: &HVector) -> CycNum {
    let cr = b.cross(c);
    &a.0[0] * &cr.0[0] + &a.0[1] * &cr.0[1] + &a.0[2] * &cr.0[2]
}

/// 3×3 matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Mat3(pub [[CycNum; 3]; 3]);

impl Mat3 {
    pub fn from_fn(mut f: impl FnMut(usize, usize) -> CycNum) -> Mat3 {
        Mat3(std::array::from_fn(|i| std::array::from_fn(|j| f(i, j))))
    }

    pub fn identity() -> Mat3 {
        Mat3::scalar(&CycNum::one())
    }

    pub fn scalar(s: &CycNum) -> Mat3 {
        Mat3::from_fn(|i, j| if i == j { s.clone() } else { CycNum::zero() })
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Mat3 {
        Mat3::from_fn(|i, j| rows[i][j].into())
    }

    /// The Hermitian form matrix antidiag(1, 1, 1).
    pub fn hermitian_form() -> Mat3 {
        Mat3::from_ints([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycNum {
        &self.0[i][j]
    }

    pub fn mul(&self, other: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| {
            let mut acc = CycNum::zero();
            for k in 0..3 {
                acc += &(&self.0[i][k] * &other.0[k][j]);
            }
            acc
        })
    }

    pub fn apply(&self, v: &HVector) -> HVector {
        HVector(std::array::from_fn(|i| {
            let mut acc = CycNum::zero();
            for k in 0..3 {
                acc += &(&self.0[i][k] * &v.0[k]);
            }
            acc
        }))
    }

    pub fn scale(&self, s: &CycNum) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] * s)
    }

    pub fn sub(&self, other: &Mat3) -> Mat3 {
        Mat3::from_fn(|i, j| &self.0[i][j] - &other.0[i][j])
    }

    pub fn conj_transpose(&self) -> Mat3 {
        Mat3::from_fn(|i, j| self.0[j][i].conj())
    }

    pub fn trace(&self) -> CycNum {
        &self.0[0][0] + &self.0[1][1] + &self.0[2][2]
    }

    pub fn det(&self) -> CycNum {
        let r = |i: usize| HVector(self.0[i].clone());
        det3(&r(0), &r(1), &r(2))
    }

    pub fn column(&self, j: usize) -> HVector {
        HVector(std::array::from_fn(|i| self.0[i][j].clone()))
    }

    /// H·g*·H, the inverse of an H-unitary matrix.
    pub fn h_adjoint(&self) -> Mat3 {
        let h = Mat3::hermitian_form();
        h.mul(&self.conj_transpose()).mul(&h)
    }

    pub fn is_h_unitary(&self) -> bool {
        let h = Mat3::hermitian_form();
        self.conj_transpose().mul(&h).mul(self) == h
    }

    /// General inverse by adjugate.
    pub fn inverse(&self) -> Option<Mat3> {
        let d = self.det();
        let dinv = d.inv().ok()?;
        let c = |i: usize| self.column(i);
        let rows = [c(1).cross(&c(2)), c(2).cross(&c(0)), c(0).cross(&c(1))];
        Some(Mat3::from_fn(|i, j| &rows[i].0[j] * &dinv))
    }

    /// The scalar s with self = s·I, if any.
    pub fn as_scalar(&self) -> Option<CycNum> {
        for i in 0..3 {
            for j in 0..3 {
                if i != j && !self.0[i][j].is_zero() {
                    return None;
                }
            }
        }
        let s = &self.0[0][0];
        (self.0[1][1] == *s && self.0[2][2] == *s).then(|| s.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(CycNum::is_zero)
    }

    /// Canonical representative of the projective class: divide by the first
    /// nonzero entry in row-major order.
    pub fn projective_key(&self) -> Mat3 {
        match self.0.iter().flatten().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.inv().expect("nonzero")),
            None => self.clone(),
        }
    }

    /// Basis of the right kernel, by exact Gaussian elimination.
    pub fn kernel(&self) -> Vec<HVector> {
        let mut m: Vec<Vec<CycNum>> = self.0.iter().map(|r| r.to_vec()).collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut row = 0;
        for col in 0..3 {
            let Some(p) = (row..3).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, p);
            let inv = m[row][col].inv().expect("pivot nonzero");
            for j in 0..3 {
                m[row][j] = &m[row][j] * &inv;
            }
            for r in 0..3 {
                if r != row && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in 0..3 {
                        let t = &m[row][j] * &f;
                        m[r][j] -= &t;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (0..3)
            .filter(|c| !pivots.contains(c))
            .map(|free| {
                let mut v = [CycNum::zero(), CycNum::zero(), CycNum::zero()];
                v[free] = CycNum::one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = -&m[r][free];
                }
                HVector(v)
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        3 - self.kernel().len()
    }

    /// Coefficients (c0, c1, c2) of the characteristic polynomial
    /// x³ + c2·x² + c1·x + c0.
    pub fn char_poly(&self) -> [CycNum; 3] {
        let m = &self.0;
        let minors = &(&m[0][0] * &m[1][1] - &m[0][1] * &m[1][0])
            + &(&m[0][0] * &m[2][2] - &m[0][2] * &m[2][0])
            + (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]);
        [-self.det(), minors, -self.trace()]
    }

    pub fn to_f64(&self) -> [[(f64, f64); 3]; 3] {
        std::array::from_fn(|i| std::array::from_fn(|j| self.0[i][j].to_f64_pair()))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, rhs: &Mat3) -> Mat3 {
        Mat3::mul(self, rhs)
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[{}, {}, {}]", r[0], r[1], r[2])?;
        }
        Ok(())
    }
}

impl fmt::Display for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::omega;

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let m = Mat3::from_ints([[1, 2, 3], [2, 4, 6], [0, 1, 1]]);
        let k = m.kernel();
        assert_eq!(k.len(), 1);
        assert!(m.apply(&k[0]).is_zero());
        assert_eq!(Mat3::identity().kernel().len(), 0);
        assert_eq!(Mat3::from_ints([[0; 3]; 3]).kernel().len(), 3);
    }

    #[test]
    fn inverse_and_adjoint_agree_for_unitary() {
        let w = omega();
        let p = Mat3([
            [1.into(), 1.into(), w.clone()],
            [0.into(), w.clone(), -&w],
            [0.into(), 0.into(), 1.into()],
        ]);
        assert!(p.is_h_unitary());
        assert_eq!(p.inverse().unwrap(), p.h_adjoint());
        assert_eq!(p.mul(&p.h_adjoint()), Mat3::identity());
    }

    #[test]
    fn char_poly_vanishes_at_eigenvalue() {
        let m = Mat3::from_ints([[2, 0, 0], [0, 3, 0], [1, 0, 5]]);
        let [c0, c1, c2] = m.char_poly();
        for x in [2, 3, 5] {
            let x = CycNum::from_int(x);
            let v = &(&(&x * &x) * &x) + &(&c2 * &(&x * &x)) + &(&c1 * &x) + c0.clone();
            assert!(v.is_zero());
        }
    }

    #[test]
    fn projective_key_identifies_scalar_multiples() {
        let m = Mat3::from_ints([[0, 2, 1], [1, 0, 0], [3, 1, 1]]);
        assert_eq!(m.projective_key(), m.scale(&omega()).projective_key());
        assert_eq!(m.scale(&CycNum::from_int(7)).as_scalar(), None);
        assert_eq!(Mat3::scalar(&omega()).as_scalar(), Some(omega()));
    }
}
