//! Exact arithmetic in Q(ζ₃₆) and certified signs in its real subfield.
//!
//! Every constant the toolkit needs (ω, i, √3, e^{πi/9}, sin(π/9)) and every
//! eigenvalue of the torsion elements it studies lives in this one field, so
//! there is no tower of extensions. The distinguished embedding sends ζ to
//! e^{2πi/36}; signs of real elements are decided by interval refinement
//! after an exact zero test.

mod cyc;
mod interval;
mod text;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use cyc::{CycNum, CONDUCTOR, DEGREE, GALOIS_UNITS};
pub use interval::{to_interval, ComplexInterval};

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not conjugation-fixed: {0}")]
    NotReal(String),
    #[error("sign undecided at the {bits}-bit precision cap")]
    PrecisionCapExceeded { bits: u32 },
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_ordering(self) -> Ordering {
        match self {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Negative => "negative",
            Sign::Zero => "zero",
            Sign::Positive => "positive",
        })
    }
}

/// Precision schedule for [`sign_real_with`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignConfig {
    pub start_bits: u32,
    pub max_bits: u32,
}

impl Default for SignConfig {
    fn default() -> Self {
        SignConfig { start_bits: 64, max_bits: 4096 }
    }
}

/// Exact sign of a conjugation-fixed element.
pub fn sign_real(a: &CycNum) -> Result<Sign, FieldError> {
    sign_real_with(a, SignConfig::default())
}

pub fn sign_real_with(a: &CycNum, cfg: SignConfig) -> Result<Sign, FieldError> {
    if !a.is_real() {
        return Err(FieldError::NotReal(a.to_string()));
    }
    if a.is_zero() {
        return Ok(Sign::Zero);
    }
    if let Some(r) = a.to_rational() {
        return Ok(if r > num_rational::BigRational::from_integer(0.into()) {
            Sign::Positive
        } else {
            Sign::Negative
        });
    }
    let mut bits = cfg.start_bits.max(16);
    loop {
        match to_interval(a, bits).re_sign() {
            Some(Ordering::Greater) => return Ok(Sign::Positive),
            Some(Ordering::Less) => return Ok(Sign::Negative),
            _ => {}
        }
        if bits >= cfg.max_bits {
            return Err(FieldError::PrecisionCapExceeded { bits });
        }
        bits = (bits * 2).min(cfg.max_bits);
    }
}

/// A conjugation-fixed element of Q(ζ₃₆), ordered through the distinguished
/// embedding.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RealCyc(CycNum);

impl RealCyc {
    pub fn new(value: CycNum) -> Result<Self, FieldError> {
        if value.is_real() {
            Ok(RealCyc(value))
        } else {
            Err(FieldError::NotReal(value.to_string()))
        }
    }

    pub fn from_int(n: i64) -> Self {
        RealCyc(CycNum::from_int(n))
    }

    pub fn zero() -> Self {
        RealCyc(CycNum::zero())
    }

    pub fn value(&self) -> &CycNum {
        &self.0
    }

    pub fn into_inner(self) -> CycNum {
        self.0
    }

    pub fn sign(&self) -> Result<Sign, FieldError> {
        sign_real(&self.0)
    }

    pub fn cmp_real(&self, other: &RealCyc) -> Result<Ordering, FieldError> {
        Ok(sign_real(&(&self.0 - &other.0))?.as_ordering())
    }

    pub fn abs(&self) -> Result<RealCyc, FieldError> {
        Ok(match self.sign()? {
            Sign::Negative => RealCyc(-&self.0),
            _ => self.clone(),
        })
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64_pair().0
    }
}

impl fmt::Display for RealCyc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Named constants of the toolkit, as exact field elements.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Named {
    /// ω = e^{2πi/3}
    Omega,
    I,
    Sqrt3,
    /// e^{2πi/18} = e^{πi/9}
    Zeta18,
    /// e^{2πi/9}
    Zeta9,
    /// e^{2πi/36}
    Zeta36,
    SinPi9,
}

impl Named {
    pub const ALL: [Named; 7] = [
        Named::Omega,
        Named::I,
        Named::Sqrt3,
        Named::Zeta18,
        Named::Zeta9,
        Named::Zeta36,
        Named::SinPi9,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Named::Omega => "omega",
            Named::I => "i",
            Named::Sqrt3 => "sqrt3",
            Named::Zeta18 => "zeta18",
            Named::Zeta9 => "zeta9",
            Named::Zeta36 => "zeta36",
            Named::SinPi9 => "sin_pi_9",
        }
    }

    pub fn from_name(s: &str) -> Option<Named> {
        Named::ALL.into_iter().find(|n| n.name() == s)
    }
}

pub fn embed(name: Named) -> CycNum {
    match name {
        Named::Omega => CycNum::zeta_pow(12),
        Named::I => CycNum::zeta_pow(9),
        Named::Sqrt3 => CycNum::zeta_pow(3) + CycNum::zeta_pow(-3),
        Named::Zeta18 => CycNum::zeta_pow(2),
        Named::Zeta9 => CycNum::zeta_pow(4),
        Named::Zeta36 => CycNum::zeta_pow(1),
        Named::SinPi9 => {
            // (ζ² − ζ⁻²)/(2i) = −i(ζ² − ζ⁻²)/2
            let diff = CycNum::zeta_pow(2) - CycNum::zeta_pow(-2);
            diff * CycNum::zeta_pow(27) * CycNum::from_frac(1, 2)
        }
    }
}

/// Shorthands used throughout the crate.
pub fn omega() -> CycNum {
    embed(Named::Omega)
}

pub fn omega_bar() -> CycNum {
    CycNum::zeta_pow(24)
}

pub fn imag_unit() -> CycNum {
    embed(Named::I)
}

pub fn sqrt3() -> CycNum {
    embed(Named::Sqrt3)
}

pub fn rat(n: i64, d: i64) -> CycNum {
    CycNum::from_frac(n, d)
}

pub fn int(n: i64) -> CycNum {
    CycNum::from_int(n)
}
