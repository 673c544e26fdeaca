//! Exact arithmetic in cyclotomic fields Q(ζ_n).
//!
//! Elements are kept in the power basis {1, ζ, ..., ζ^(φ(n)-1)} reduced
//! modulo the n-th cyclotomic polynomial Φ_n, so equality is coordinate
//! equality. Φ_n is computed by the classical recursion: divide x^n - 1
//! by the product of Φ_d over proper divisors d | n.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// Dense integer polynomial, lowest degree first, no trailing zeros.
fn trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Exact division of integer polynomials (panics on nonzero remainder);
/// the divisor must be monic.
fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    assert!(den.last().map_or(false, One::is_one), "divisor must be monic");
    let mut rem = num.to_vec();
    let d = den.len() - 1;
    if rem.len() < den.len() {
        assert!(trim(rem).is_empty(), "inexact polynomial division");
        return Vec::new();
    }
    let mut quot = vec![BigInt::zero(); rem.len() - d];
    for i in (d..rem.len()).rev() {
        let c = rem[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - d] = c.clone();
        for (j, dj) in den.iter().enumerate() {
            rem[i - d + j] -= &c * dj;
        }
    }
    assert!(trim(rem).is_empty(), "inexact polynomial division");
    quot
}

/// Coefficients of Φ_n, monic, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    assert!(n >= 1);
    if n == 1 {
        return vec![-BigInt::one(), BigInt::one()]; // x - 1
    }
    // x^n - 1
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    let mut den = vec![BigInt::one()];
    for d in 1..n {
        if n % d == 0 {
            den = poly_mul(&den, &cyclotomic_polynomial(d));
        }
    }
    poly_div_exact(&num, &den)
}

struct CycTables {
    phi: usize,
    /// ζ^k in the power basis, for k = 0..n.
    powers: Vec<Vec<BigRational>>,
}

fn tables(n: u64) -> Arc<CycTables> {
    static CACHE: OnceLock<Mutex<BTreeMap<u64, Arc<CycTables>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(BTreeMap::new()));
    let mut guard = cache.lock().unwrap();
    if let Some(t) = guard.get(&n) {
        return Arc::clone(t);
    }
    let phi = euler_phi(n) as usize;
    let cyclo = cyclotomic_polynomial(n);
    debug_assert_eq!(cyclo.len(), phi + 1);
    // Build ζ^k iteratively: multiply by ζ and reduce with
    // ζ^phi = -(c_0 + c_1 ζ + ... + c_{phi-1} ζ^{phi-1}).
    let head: Vec<BigRational> =
        cyclo[..phi].iter().map(|c| BigRational::from_integer(-c.clone())).collect();
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![BigRational::zero(); phi];
    if phi > 0 {
        cur[0] = BigRational::one();
    }
    for _ in 0..n {
        powers.push(cur.clone());
        // cur *= ζ
        let top = cur[phi - 1].clone();
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1].clone();
        }
        cur[0] = BigRational::zero();
        if !top.is_zero() {
            for i in 0..phi {
                cur[i] += &top * &head[i];
            }
        }
    }
    let t = Arc::new(CycTables { phi, powers });
    guard.insert(n, Arc::clone(&t));
    t
}

/// An element of Q(ζ_n) in the reduced power basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Cyclotomic {
    n: u64,
    coords: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn zero(n: u64) -> Self {
        Cyclotomic { n, coords: vec![BigRational::zero(); euler_phi(n) as usize] }
    }

    pub fn one(n: u64) -> Self {
        Self::from_rational(n, BigRational::one())
    }

    pub fn from_rational(n: u64, q: BigRational) -> Self {
        let mut e = Self::zero(n);
        if euler_phi(n) > 0 {
            e.coords[0] = q;
        }
        e
    }

    pub fn from_integer(n: u64, k: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(k.into()))
    }

    /// ζ_n
    pub fn zeta(n: u64) -> Self {
        Self::root_power(n, 1)
    }

    /// ζ_n^k, any k (taken mod n).
    pub fn root_power(n: u64, k: i64) -> Self {
        let t = tables(n);
        let k = k.rem_euclid(n as i64) as usize;
        Cyclotomic { n, coords: t.powers[k].clone() }
    }

    pub fn from_coords(n: u64, coords: Vec<BigRational>) -> Self {
        assert_eq!(coords.len(), euler_phi(n) as usize);
        Cyclotomic { n, coords }
    }

    pub fn conductor(&self) -> u64 {
        self.n
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    /// The element as a rational number, if it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords.iter().skip(1).all(Zero::is_zero) {
            Some(self.coords.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let (a, b) = promote_pair(self, other);
        Cyclotomic {
            n: a.n,
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let (a, b) = promote_pair(self, other);
        Cyclotomic {
            n: a.n,
            coords: a.coords.iter().zip(&b.coords).map(|(x, y)| x - y).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        Cyclotomic { n: self.n, coords: self.coords.iter().map(|x| -x.clone()).collect() }
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        Cyclotomic { n: self.n, coords: self.coords.iter().map(|x| x * s).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = promote_pair(self, other);
        let t = tables(a.n);
        let phi = t.phi;
        let mut out = vec![BigRational::zero(); phi];
        for i in 0..phi {
            if a.coords[i].is_zero() {
                continue;
            }
            for j in 0..phi {
                if b.coords[j].is_zero() {
                    continue;
                }
                let c = &a.coords[i] * &b.coords[j];
                // ζ^(i+j) reduced; i+j < 2n so one modular step suffices.
                let k = (i + j) % a.n as usize;
                for (l, base) in t.powers[k].iter().enumerate() {
                    if !base.is_zero() {
                        out[l] += &c * base;
                    }
                }
            }
        }
        Cyclotomic { n: a.n, coords: out }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut acc = Self::one(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; errors on zero. Φ_n is irreducible over Q,
    /// so every nonzero residue is invertible.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::CyclotomicDivisionByZero);
        }
        // Solve (self * x) = 1 as a linear system in the power basis.
        let phi = self.coords.len();
        let t = tables(self.n);
        // columns: self * ζ^j
        let mut cols = Vec::with_capacity(phi);
        for j in 0..phi {
            let zj = Cyclotomic { n: self.n, coords: t.powers[j].clone() };
            cols.push(self.mul(&zj).coords);
        }
        let m = crate::linalg::QMat::from_fn(phi, phi, |r, c| cols[c][r].clone());
        let mut rhs = vec![BigRational::zero(); phi];
        rhs[0] = BigRational::one();
        let x = crate::linalg::rational::solve_vec(&m, &rhs)
            .expect("nonzero element of a field must be invertible");
        Ok(Cyclotomic { n: self.n, coords: x })
    }

    /// The Galois automorphism ζ_n -> ζ_n^k, for gcd(k, n) = 1.
    pub fn galois(&self, k: u64) -> Result<Self> {
        if num_integer::gcd(k, self.n) != 1 {
            return Err(Error::GaloisExponent { k, n: self.n });
        }
        let t = tables(self.n);
        let mut out = vec![BigRational::zero(); t.phi];
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let target = ((i as u64) * k % self.n) as usize;
            for (l, base) in t.powers[target].iter().enumerate() {
                if !base.is_zero() {
                    out[l] += c * base;
                }
            }
        }
        Ok(Cyclotomic { n: self.n, coords: out })
    }

    /// Complex conjugation ζ -> ζ^(-1).
    pub fn conj(&self) -> Self {
        if self.n <= 2 {
            return self.clone();
        }
        self.galois(self.n - 1).expect("n-1 is coprime to n")
    }

    /// Reinterpret in Q(ζ_m) for n | m, via ζ_n = ζ_m^(m/n).
    pub fn to_conductor(&self, m: u64) -> Self {
        assert_eq!(m % self.n, 0, "target conductor must be a multiple");
        if m == self.n {
            return self.clone();
        }
        let step = (m / self.n) as i64;
        let mut out = Cyclotomic::zero(m);
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&Cyclotomic::root_power(m, i as i64 * step).scale(c));
            }
        }
        out
    }

    /// The matrix of multiplication by this element on the power basis
    /// (used to transport the field structure into other algebras).
    pub fn mult_matrix(&self) -> crate::linalg::QMat {
        let phi = self.coords.len();
        let t = tables(self.n);
        crate::linalg::QMat::from_fn(phi, phi, |r, c| {
            let zc = Cyclotomic { n: self.n, coords: t.powers[c].clone() };
            self.mul(&zc).coords[r].clone()
        })
    }
}

fn promote_pair(a: &Cyclotomic, b: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
    if a.n == b.n {
        (a.clone(), b.clone())
    } else {
        let m = num_integer::lcm(a.n, b.n);
        (a.to_conductor(m), b.to_conductor(m))
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = if i == 0 {
                format!("{mag}")
            } else {
                let z = if i == 1 { format!("z{}", self.n) } else { format!("z{}^{}", self.n, i) };
                if mag.is_one() {
                    z
                } else {
                    format!("{mag}*{z}")
                }
            };
            if terms.is_empty() {
                terms.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                terms.push(format!("{} {}", if c.is_negative() { "-" } else { "+" }, body));
            }
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" "))
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::qi;

    #[test]
    fn phi_and_polynomials() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(48), 16);
        let to_i64 = |p: Vec<BigInt>| -> Vec<i64> {
            p.iter().map(|c| i64::try_from(c.clone()).unwrap()).collect()
        };
        assert_eq!(to_i64(cyclotomic_polynomial(1)), vec![-1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(2)), vec![1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(3)), vec![1, 1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(4)), vec![1, 0, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(6)), vec![1, -1, 1]);
        assert_eq!(to_i64(cyclotomic_polynomial(12)), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn spec_value_examples() {
        // ζ_4^2 = -1
        let i = Cyclotomic::zeta(4);
        assert_eq!(i.mul(&i), Cyclotomic::from_integer(4, -1));
        // galois(3, ζ_4) = -ζ_4
        assert_eq!(i.galois(3).unwrap(), i.neg());
        // (1 + ζ_3)(1 + ζ_3^2) = 1
        let z = Cyclotomic::zeta(3);
        let a = Cyclotomic::one(3).add(&z);
        let b = Cyclotomic::one(3).add(&z.mul(&z));
        assert_eq!(a.mul(&b), Cyclotomic::one(3));
    }

    #[test]
    fn field_axioms_on_pseudorandom_elements() {
        let n = 12;
        let phi = euler_phi(n) as usize;
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        let mut sample = Vec::new();
        for _ in 0..6 {
            let coords: Vec<BigRational> = (0..phi).map(|_| qi(next())).collect();
            sample.push(Cyclotomic::from_coords(n, coords));
        }
        for a in &sample {
            for b in &sample {
                assert_eq!(a.mul(b), b.mul(a));
                for c in &sample {
                    assert_eq!(a.mul(b).mul(c), a.mul(&b.mul(c)));
                    assert_eq!(a.mul(&b.add(c)), a.mul(b).add(&a.mul(c)));
                }
                if !a.is_zero() {
                    assert_eq!(a.mul(&a.inv().unwrap()), Cyclotomic::one(n));
                }
            }
        }
        // galois(k) ∘ galois(k') = galois(kk' mod n)
        for a in &sample {
            for k in [1u64, 5, 7, 11] {
                for k2 in [1u64, 5, 7, 11] {
                    let lhs = a.galois(k2).unwrap().galois(k).unwrap();
                    let rhs = a.galois(k * k2 % n).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        assert!(Cyclotomic::zero(n).inv().is_err());
        assert!(sample[0].galois(2).is_err());
    }

    #[test]
    fn conductor_promotion_is_a_ring_map() {
        let z3 = Cyclotomic::zeta(3);
        let z3_in_12 = z3.to_conductor(12);
        assert_eq!(z3_in_12, Cyclotomic::root_power(12, 4));
        assert_eq!(z3.mul(&z3).to_conductor(12), z3_in_12.mul(&z3_in_12));
        assert_eq!(z3.add(&z3).to_conductor(12), z3_in_12.add(&z3_in_12));
        // mixed-conductor arithmetic promotes automatically
        let z4 = Cyclotomic::zeta(4);
        let prod = z3.mul(&z4);
        assert_eq!(prod.conductor(), 12);
        assert_eq!(prod, Cyclotomic::root_power(12, 7));
    }
}
