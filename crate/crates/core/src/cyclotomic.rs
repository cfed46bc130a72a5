//! Exact cyclotomic arithmetic: elements of Q(ζ_n) in the power basis,
//! reduced modulo the n-th cyclotomic polynomial.
//!
//! The reduced representation is unique, so equality of values with the same
//! modulus is coefficient equality; mixed moduli are compared after lifting
//! into the compositum.

use num_rational::Ratio;
use num_traits::{One, Zero};

pub type Q = Ratio<i64>;

/// Coefficients of the n-th cyclotomic polynomial, lowest degree first.
///
/// Computed by exact division: x^n − 1 = Π_{d | n} Φ_d(x).
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // Start from x^n − 1 and divide out Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_polynomial(d);
            poly = exact_div_int(&poly, &phi_d);
        }
    }
    poly
}

/// Exact quotient of integer polynomials (divisor monic); panics on remainder.
fn exact_div_int(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1, "divisor must be monic");
    let qd = rem.len() - 1 - dd;
    let mut quot = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        for (i, &dc) in den.iter().enumerate() {
            rem[k + i] -= c * dc;
        }
    }
    assert!(rem.iter().all(|&c| c == 0), "inexact polynomial division");
    quot
}

/// An element of Q(ζ_n), stored reduced mod Φ_n.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cyclotomic {
    n: u32,
    /// Power-basis coefficients; length = deg Φ_n.
    coeffs: Vec<Q>,
}

/// Remainder of `poly` (any degree) modulo Φ_n, truncated to deg Φ_n coefficients.
fn reduce_mod_phi(mut poly: Vec<Q>, phi: &[i64]) -> Vec<Q> {
    let d = phi.len() - 1;
    if poly.len() < d {
        poly.resize(d, Q::zero());
        return poly;
    }
    for k in (d..poly.len()).rev() {
        let c = poly[k];
        if !c.is_zero() {
            poly[k] = Q::zero();
            for (i, &pc) in phi.iter().enumerate().take(d) {
                poly[k - d + i] -= c * Q::from_integer(pc);
            }
        }
    }
    poly.truncate(d);
    poly
}

impl Cyclotomic {
    pub fn zero(n: u32) -> Self {
        let d = cyclotomic_polynomial(n).len() - 1;
        Cyclotomic {
            n,
            coeffs: vec![Q::zero(); d],
        }
    }

    pub fn from_rational(n: u32, q: Q) -> Self {
        let mut z = Cyclotomic::zero(n);
        if !z.coeffs.is_empty() {
            z.coeffs[0] = q;
        } else {
            // n = 1 edge case: deg Φ_1 = 1, coeffs has length 1.
            unreachable!("Φ_n has positive degree");
        }
        z
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Cyclotomic::from_rational(n, Q::from_integer(v))
    }

    pub fn one(n: u32) -> Self {
        Cyclotomic::from_int(n, 1)
    }

    /// ζ_n^k.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let phi = cyclotomic_polynomial(n);
        let mut poly = vec![Q::zero(); k + 1];
        poly[k] = Q::one();
        Cyclotomic {
            n,
            coeffs: reduce_mod_phi(poly, &phi),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Rational part if the value lies in Q, else None.
    pub fn to_rational(&self) -> Option<Q> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Re-express in Q(ζ_m) for n | m.
    pub fn lift(&self, m: u32) -> Cyclotomic {
        assert!(m % self.n == 0);
        if m == self.n {
            return self.clone();
        }
        let s = (m / self.n) as usize;
        let phi = cyclotomic_polynomial(m);
        let mut poly = vec![Q::zero(); (self.coeffs.len() - 1) * s + 1];
        for (i, &c) in self.coeffs.iter().enumerate() {
            poly[i * s] = c;
        }
        Cyclotomic {
            n: m,
            coeffs: reduce_mod_phi(poly, &phi),
        }
    }

    fn common(&self, o: &Cyclotomic) -> (Cyclotomic, Cyclotomic) {
        let m = lcm(self.n, o.n);
        (self.lift(m), o.lift(m))
    }

    pub fn add(&self, o: &Cyclotomic) -> Cyclotomic {
        let (mut a, b) = self.common(o);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, o: &Cyclotomic) -> Cyclotomic {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, o: &Cyclotomic) -> Cyclotomic {
        let (a, b) = self.common(o);
        let phi = cyclotomic_polynomial(a.n);
        let mut poly = vec![Q::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, &x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, &y) in b.coeffs.iter().enumerate() {
                poly[i + j] += x * y;
            }
        }
        Cyclotomic {
            n: a.n,
            coeffs: reduce_mod_phi(poly, &phi),
        }
    }

    pub fn scale(&self, q: Q) -> Cyclotomic {
        Cyclotomic {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Galois map σ_j: ζ_n ↦ ζ_n^j, for gcd(j, n) = 1.
    pub fn galois(&self, j: u32) -> Cyclotomic {
        assert_eq!(gcd(j as i64, self.n as i64), 1, "σ_j needs gcd(j, n) = 1");
        let phi = cyclotomic_polynomial(self.n);
        let mut poly = vec![Q::zero(); self.n as usize];
        if self.n == 1 {
            return self.clone();
        }
        for (i, &c) in self.coeffs.iter().enumerate() {
            let e = (i as u64 * j as u64 % self.n as u64) as usize;
            poly[e] += c;
        }
        Cyclotomic {
            n: self.n,
            coeffs: reduce_mod_phi(poly, &phi),
        }
    }

    /// Complex conjugation, σ_{n−1}.
    pub fn conj(&self) -> Cyclotomic {
        if self.n <= 2 {
            self.clone()
        } else {
            self.galois(self.n - 1)
        }
    }

    pub fn eq_value(&self, o: &Cyclotomic) -> bool {
        let (a, b) = self.common(o);
        a.coeffs == b.coeffs
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a as i64, b as i64) as u32 * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn roots_of_unity_have_right_order() {
        for n in 1..=12u32 {
            let z = Cyclotomic::root_of_unity(n, 1);
            let mut p = Cyclotomic::one(n);
            for k in 1..=n {
                p = p.mul(&z);
                let is_one = p.eq_value(&Cyclotomic::one(n));
                assert_eq!(is_one, k == n, "ζ_{n}^{k}");
            }
        }
    }

    #[test]
    fn sum_of_all_nth_roots_is_zero() {
        for n in 2..=12u32 {
            let mut s = Cyclotomic::zero(n);
            for k in 0..n {
                s = s.add(&Cyclotomic::root_of_unity(n, k as i64));
            }
            assert!(s.is_zero(), "n = {n}");
        }
    }

    #[test]
    fn galois_and_conjugation() {
        let z = Cyclotomic::root_of_unity(3, 1);
        assert!(z.conj().eq_value(&Cyclotomic::root_of_unity(3, 2)));
        assert!(z.conj().conj().eq_value(&z));
        // σ_j is a ring map.
        let a = z.add(&Cyclotomic::from_int(3, 2));
        let b = z.mul(&z).sub(&Cyclotomic::one(3));
        assert!(a.mul(&b).galois(2).eq_value(&a.galois(2).mul(&b.galois(2))));
        assert!(a.add(&b).galois(2).eq_value(&a.galois(2).add(&b.galois(2))));
    }

    #[test]
    fn mixed_modulus_arithmetic() {
        // ζ_3 = ζ_6², and 1 + ζ_6 · ζ_6 + ζ_3² = 1 + ζ_3 + ζ_3² = 0.
        let z6 = Cyclotomic::root_of_unity(6, 1);
        let z3 = Cyclotomic::root_of_unity(3, 1);
        assert!(z6.mul(&z6).eq_value(&z3));
        let s = Cyclotomic::one(3)
            .add(&z6.mul(&z6))
            .add(&z3.mul(&z3));
        assert!(s.is_zero());
        // ζ_4 · ζ_3 = ζ_12^7.
        let z4 = Cyclotomic::root_of_unity(4, 1);
        assert!(z4.mul(&z3).eq_value(&Cyclotomic::root_of_unity(12, 7)));
    }

    #[test]
    fn rational_detection() {
        let z = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(z.to_rational(), None);
        let s = z.add(&z.conj());
        assert_eq!(s.to_rational(), Some(Q::from_integer(-1)));
        assert_eq!(Cyclotomic::from_int(5, 7).to_rational(), Some(Q::from_integer(7)));
    }
}
