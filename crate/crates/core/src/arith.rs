//! Integer and exact rational arithmetic.
//!
//! Interval endpoints are always [`Rational`]s. Floating point never enters a
//! certificate: two perturbed points `j + u/2N` and `j' + v/2N` must compare
//! equal exactly when they are the same point.

use alloc::format;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::Add;
use core::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Greatest common divisor. `gcd(0, 0)` is rejected.
pub fn gcd(u: u64, v: u64) -> Result<u64> {
    if u == 0 && v == 0 {
        return Err(invalid("gcd(0, 0) is undefined"));
    }
    Ok(gcd_raw(u, v))
}

#[inline]
pub(crate) fn gcd_raw(mut u: u64, mut v: u64) -> u64 {
    while v != 0 {
        let r = u % v;
        u = v;
        v = r;
    }
    u
}

fn gcd_i128(mut u: i128, mut v: i128) -> i128 {
    u = u.abs();
    v = v.abs();
    while v != 0 {
        let r = u % v;
        u = v;
        v = r;
    }
    u
}

/// Exponent of the prime `q` in `x`: `q^e | x` but `q^(e+1) ∤ x`.
pub fn prime_valuation(q: u64, x: u64) -> Result<u32> {
    if x == 0 {
        return Err(invalid("valuation of 0 is unbounded"));
    }
    if q < 2 {
        return Err(invalid(format!("{q} is not prime")));
    }
    Ok(valuation_raw(q, x))
}

#[inline]
pub(crate) fn valuation_raw(q: u64, mut x: u64) -> u32 {
    let mut e = 0;
    while x % q == 0 {
        x /= q;
        e += 1;
    }
    e
}

pub(crate) fn pow(p: u64, n: u32) -> u64 {
    p.pow(n)
}

/// Smallest `c` with `2^c >= x`, for `x >= 1`.
pub fn ceil_log2(x: u64) -> u32 {
    debug_assert!(x >= 1);
    if x <= 1 {
        0
    } else {
        64 - (x - 1).leading_zeros()
    }
}

/// Largest `r` with `r * r <= x`.
pub fn isqrt(x: u64) -> u64 {
    if x < 2 {
        return x;
    }
    let mut r = libm::sqrt(x as f64) as u64;
    while r.checked_mul(r).map_or(true, |sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}

/// `p^n` with `p` prime and `n >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimePower {
    pub p: u64,
    pub n: u32,
}

impl PrimePower {
    pub fn value(&self) -> u64 {
        pow(self.p, self.n)
    }
}

/// Prime factorization of `N >= 2`, primes strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<PrimePower>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Number of distinct prime factors.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// The `i`-th prime power, 1-based, smallest prime first.
    pub fn factor(&self, i: usize) -> PrimePower {
        self.factors[i - 1]
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// `N ≡ 2 (mod 4)`.
    pub fn is_twice_odd(&self) -> bool {
        self.n % 4 == 2
    }

    /// `N ≡ 2 (mod 4)` and every odd prime occurs at most squared.
    pub fn has_small_odd_exponents(&self) -> bool {
        self.is_twice_odd() && self.factors[1..].iter().all(|f| f.n <= 2)
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|f| f.n == 1)
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, pp) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if pp.n == 1 {
                write!(f, "{}", pp.p)?;
            } else {
                write!(f, "{}^{}", pp.p, pp.n)?;
            }
        }
        Ok(())
    }
}

/// Trial division up to `√N`.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n < 2 {
        return Err(invalid(format!("cannot factorize {n}: N must be at least 2")));
    }
    let mut rest = n;
    let mut factors = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let e = valuation_raw(p, *rest);
        if e > 0 {
            *rest /= pow(p, e);
            factors.push(PrimePower { p, n: e });
        }
    };
    push(2, &mut rest);
    let mut p = 3u64;
    while p.checked_mul(p).is_some_and(|sq| sq <= rest) {
        push(p, &mut rest);
        p += 2;
    }
    if rest > 1 {
        factors.push(PrimePower { p: rest, n: 1 });
    }
    Ok(Factorization { n, factors })
}

/// Exact rational in lowest terms with a positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Rational {
    num: i64,
    den: i64,
}

impl Rational {
    pub const ZERO: Rational = Rational { num: 0, den: 1 };
    pub const ONE: Rational = Rational { num: 1, den: 1 };

    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(invalid("zero denominator"));
        }
        Self::from_i128(num as i128, den as i128)
    }

    /// `k / m` for natural numbers.
    pub fn of_fraction(k: u64, m: u64) -> Result<Self> {
        if m == 0 {
            return Err(invalid("zero denominator"));
        }
        Self::from_i128(k as i128, m as i128)
    }

    pub const fn integer(v: i64) -> Self {
        Rational { num: v, den: 1 }
    }

    fn from_i128(mut num: i128, mut den: i128) -> Result<Self> {
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = gcd_i128(num, den);
        let g = if g == 0 { 1 } else { g };
        num /= g;
        den /= g;
        Ok(Rational {
            num: i64::try_from(num).map_err(|_| Error::Overflow)?,
            den: i64::try_from(den).map_err(|_| Error::Overflow)?,
        })
    }

    pub fn num(&self) -> i64 {
        self.num
    }

    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn checked_add(self, rhs: Rational) -> Result<Rational> {
        let num = self.num as i128 * rhs.den as i128 + rhs.num as i128 * self.den as i128;
        let den = self.den as i128 * rhs.den as i128;
        Self::from_i128(num, den)
    }

    pub fn is_integer(&self) -> bool {
        self.den == 1
    }
}

impl Add for Rational {
    type Output = Rational;

    /// Panics on overflow, like primitive integer addition in debug builds.
    fn add(self, rhs: Rational) -> Rational {
        self.checked_add(rhs).expect("rational addition overflow")
    }
}

impl Ord for Rational {
    #[inline]
    fn cmp(&self, other: &Self) -> Ordering {
        if self.den == other.den {
            return self.num.cmp(&other.num);
        }
        (self.num as i128 * other.den as i128).cmp(&(other.num as i128 * self.den as i128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

/// Always `num/den`, integers included (`2/1`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Parses the canonical `num/den` form only, so that the printed form of a
/// value is unique.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = s.split_once('/').ok_or_else(|| invalid(format!("fraction `{s}` is not of the form num/den")))?;
        let num: i64 = n.parse().map_err(|_| invalid(format!("bad numerator in `{s}`")))?;
        let den: i64 = d.parse().map_err(|_| invalid(format!("bad denominator in `{s}`")))?;
        let r = Rational::new(num, den)?;
        if r.num != num || r.den != den || n.starts_with('+') || d.starts_with('+') {
            return Err(invalid(format!("fraction `{s}` is not in canonical form")));
        }
        Ok(r)
    }
}
