//! Certified enclosures of Q(ζ₃₆) elements under the embedding ζ ↦ e^{2πi/36}.
//!
//! All arithmetic is on fixed-point integers: a bound `m` at scale `s` stands
//! for m / 2^s. Enclosures of cos and sin of the 36th roots of unity are built
//! from a Machin-formula π and Taylor series with explicit error counts, then
//! cached per scale.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::cyc::{CycNum, CONDUCTOR};

/// Extra bits carried past the requested precision by the root table.
const GUARD_BITS: u32 = 48;
/// Extra bits used while computing π and the Taylor sums.
const SERIES_GUARD: u32 = 24;

/// A rectangle in C with dyadic corners, enclosing an exact value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexInterval {
    pub re_lo: BigInt,
    pub re_hi: BigInt,
    pub im_lo: BigInt,
    pub im_hi: BigInt,
    /// Corners are `m / 2^scale_bits`.
    pub scale_bits: u32,
    /// The precision the enclosure was requested at.
    pub precision_bits: u32,
}

impl ComplexInterval {
    fn at_scale(&self, m: &BigInt) -> BigRational {
        BigRational::new(m.clone(), BigInt::one() << self.scale_bits)
    }

    pub fn re_bounds(&self) -> (BigRational, BigRational) {
        (self.at_scale(&self.re_lo), self.at_scale(&self.re_hi))
    }

    pub fn im_bounds(&self) -> (BigRational, BigRational) {
        (self.at_scale(&self.im_lo), self.at_scale(&self.im_hi))
    }

    pub fn re_width(&self) -> BigRational {
        self.at_scale(&(&self.re_hi - &self.re_lo))
    }

    pub fn im_width(&self) -> BigRational {
        self.at_scale(&(&self.im_hi - &self.im_lo))
    }

    /// Whether the real interval lies strictly on one side of zero.
    pub fn re_sign(&self) -> Option<std::cmp::Ordering> {
        if self.re_lo.is_positive() {
            Some(std::cmp::Ordering::Greater)
        } else if self.re_hi.is_negative() {
            Some(std::cmp::Ordering::Less)
        } else {
            None
        }
    }

    pub fn contains_rational(&self, re: &BigRational, im: &BigRational) -> bool {
        let (rl, rh) = self.re_bounds();
        let (il, ih) = self.im_bounds();
        &rl <= re && re <= &rh && &il <= im && im <= &ih
    }
}

/// cos and sin of 2πk/36 for k = 0..35 at a fixed scale.
struct RootTable {
    scale: u32,
    cos: Vec<(BigInt, BigInt)>,
    sin: Vec<(BigInt, BigInt)>,
}

fn table_cache() -> &'static Mutex<HashMap<u32, Arc<RootTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<RootTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

fn root_table(scale: u32) -> Arc<RootTable> {
    let mut cache = table_cache().lock().unwrap_or_else(|e| e.into_inner());
    cache
        .entry(scale)
        .or_insert_with(|| Arc::new(RootTable::compute(scale)))
        .clone()
}

/// floor(2^scale · arctan(1/n)) up to the returned error, in ulps.
fn arctan_inv(n: u32, scale: u32) -> (BigInt, u64) {
    let n = BigInt::from(n);
    let n2 = &n * &n;
    // power_k = floor(2^scale / n^{2k+1}); repeated floor division is exact
    let mut power = (BigInt::one() << scale) / &n;
    let mut sum = BigInt::zero();
    let mut k: u64 = 0;
    loop {
        let term = &power / BigInt::from(2 * k + 1);
        if term.is_zero() {
            break;
        }
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        power /= &n2;
        k += 1;
    }
    // each term is off by < 2 ulps; the alternating tail is < 2 ulps
    (sum, 2 * (k + 1))
}

/// π at the given scale with an error bound in ulps.
fn pi_fixed(scale: u32) -> (BigInt, u64) {
    let (a5, e5) = arctan_inv(5, scale);
    let (a239, e239) = arctan_inv(239, scale);
    (a5 * 16 - a239 * 4, 16 * e5 + 4 * e239)
}

fn mul_scaled(a: &BigInt, b: &BigInt, scale: u32) -> BigInt {
    (a * b) >> scale
}

/// Taylor sum for cos (odd = false) or sin (odd = true) at a point
/// 0 <= x < 2 given at `scale`. Returns (value, error in ulps).
fn taylor(x: &BigInt, scale: u32, odd: bool) -> (BigInt, u64) {
    let one = BigInt::one() << scale;
    let mut term = if odd { x.clone() } else { one };
    let mut sum = term.clone();
    let mut term_err: u64 = 0;
    let mut total_err: u64 = 0;
    let mut j: u64 = 0;
    let mut negative = false;
    loop {
        let d = if odd { (2 * j + 2) * (2 * j + 3) } else { (2 * j + 1) * (2 * j + 2) };
        term = mul_scaled(&mul_scaled(&term, x, scale), x, scale) / BigInt::from(d);
        // x² < 4: the carried error grows by at most x²/d, plus three floors
        term_err = if d < 12 { 2 * term_err + 3 } else { term_err + 3 };
        negative = !negative;
        if term.is_zero() {
            total_err += term_err + 1;
            break;
        }
        if negative {
            sum -= &term;
        } else {
            sum += &term;
        }
        total_err += term_err;
        j += 1;
    }
    (sum, total_err)
}

fn shift_floor(m: &BigInt, by: u32) -> BigInt {
    m >> by
}

fn shift_ceil(m: &BigInt, by: u32) -> BigInt {
    -((-m) >> by)
}

impl RootTable {
    fn compute(scale: u32) -> Self {
        let work = scale + SERIES_GUARD;
        let one = BigInt::one() << work;
        let half = BigInt::one() << (work - 1);
        let (pi, pi_err) = pi_fixed(work);
        let pi_err = BigInt::from(pi_err);
        let pi_lo = &pi - &pi_err;
        let pi_hi = &pi + &pi_err;

        // first quadrant, angles kπ/18 for k = 0..=9
        let mut quad_cos = Vec::with_capacity(10);
        let mut quad_sin = Vec::with_capacity(10);
        for k in 0..=9u32 {
            let exact_cos = match k {
                0 => Some(one.clone()),
                6 => Some(half.clone()),
                9 => Some(BigInt::zero()),
                _ => None,
            };
            let exact_sin = match k {
                0 => Some(BigInt::zero()),
                3 => Some(half.clone()),
                9 => Some(one.clone()),
                _ => None,
            };
            let theta_lo = (&pi_lo * k).div_floor(&BigInt::from(18));
            let theta_hi = -((-(&pi_hi * k)).div_floor(&BigInt::from(18)));
            let cos = exact_cos.map(|c| (c.clone(), c)).unwrap_or_else(|| {
                // cos is decreasing on [0, π/2]
                let (chi, ehi) = taylor(&theta_lo, work, false);
                let (clo, elo) = taylor(&theta_hi, work, false);
                (clo - BigInt::from(elo), chi + BigInt::from(ehi))
            });
            let sin = exact_sin.map(|s| (s.clone(), s)).unwrap_or_else(|| {
                let (slo, elo) = taylor(&theta_lo, work, true);
                let (shi, ehi) = taylor(&theta_hi, work, true);
                (slo - BigInt::from(elo), shi + BigInt::from(ehi))
            });
            quad_cos.push(cos);
            quad_sin.push(sin);
        }

        let neg = |(lo, hi): &(BigInt, BigInt)| (-hi, -lo);
        let mut cos = Vec::with_capacity(CONDUCTOR as usize);
        let mut sin = Vec::with_capacity(CONDUCTOR as usize);
        for k in 0..CONDUCTOR as usize {
            let (c, s) = match k {
                0..=9 => (quad_cos[k].clone(), quad_sin[k].clone()),
                10..=18 => (neg(&quad_cos[18 - k]), quad_sin[18 - k].clone()),
                19..=27 => (neg(&quad_cos[k - 18]), neg(&quad_sin[k - 18])),
                _ => (quad_cos[36 - k].clone(), neg(&quad_sin[36 - k])),
            };
            let round = |(lo, hi): (BigInt, BigInt)| {
                (shift_floor(&lo, SERIES_GUARD), shift_ceil(&hi, SERIES_GUARD))
            };
            cos.push(round(c));
            sin.push(round(s));
        }
        RootTable { scale, cos, sin }
    }
}

/// Rigorous enclosure of `a` at roughly `bits` bits of absolute precision.
///
/// The returned rectangle contains the exact value and each side has width at
/// most 2^{4−bits}·(1 + Σ|cᵢ|).
pub fn to_interval(a: &CycNum, bits: u32) -> ComplexInterval {
    let bits = bits.max(16);
    let table = root_table(bits + GUARD_BITS);
    let mut re = (BigInt::zero(), BigInt::zero());
    let mut im = (BigInt::zero(), BigInt::zero());
    for (k, n) in a.numerators().iter().enumerate() {
        if n.is_zero() {
            continue;
        }
        let accumulate = |acc: &mut (BigInt, BigInt), (lo, hi): &(BigInt, BigInt)| {
            if n.is_positive() {
                acc.0 += n * lo;
                acc.1 += n * hi;
            } else {
                acc.0 += n * hi;
                acc.1 += n * lo;
            }
        };
        accumulate(&mut re, &table.cos[k]);
        accumulate(&mut im, &table.sin[k]);
    }
    let den = a.denominator();
    let floor_div = |m: &BigInt| m.div_floor(den);
    let ceil_div = |m: &BigInt| -((-m).div_floor(den));
    ComplexInterval {
        re_lo: floor_div(&re.0),
        re_hi: ceil_div(&re.1),
        im_lo: floor_div(&im.0),
        im_hi: ceil_div(&im.1),
        scale_bits: table.scale,
        precision_bits: bits,
    }
}
