//! Exact arithmetic in the Eisenstein integers Z[w] (w a primitive cube root
//! of unity) and in the 27-torsion of the Fermat elliptic curve E = C/Z[w].
//!
//! Every torsion constant that occurs in the classification lies in E[27],
//! so torsion points are stored as residue pairs mod 27: the pair (x, y)
//! represents (x + y*w)/27. This keeps the whole module closed under the
//! scalar multiplications and coboundary preimages that show up later.

use std::fmt;
use thiserror::Error;

/// An Eisenstein integer a + b*w with w^2 = -1 - w.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
    pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
    /// w, the chosen primitive cube root of unity.
    pub const ZETA: Eisenstein = Eisenstein { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.a + o.a, self.b + o.b)
    }

    pub fn sub(self, o: Eisenstein) -> Eisenstein {
        Eisenstein::new(self.a - o.a, self.b - o.b)
    }

    pub fn neg(self) -> Eisenstein {
        Eisenstein::new(-self.a, -self.b)
    }

    pub fn mul(self, o: Eisenstein) -> Eisenstein {
        // (a1 + b1 w)(a2 + b2 w), reduced with w^2 = -1 - w.
        Eisenstein::new(
            self.a * o.a - self.b * o.b,
            self.a * o.b + self.b * o.a - self.b * o.b,
        )
    }

    /// Complex conjugation: a + b*w -> (a - b) - b*w.
    pub fn conj(self) -> Eisenstein {
        Eisenstein::new(self.a - self.b, -self.b)
    }

    /// Field norm a^2 - ab + b^2.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// The six units of Z[w], i.e. the cyclic group generated by -w.
    pub fn units() -> [Eisenstein; 6] {
        let mut u = [Eisenstein::ONE; 6];
        let g = Eisenstein::ZETA.neg();
        for k in 1..6 {
            u[k] = u[k - 1].mul(g);
        }
        u
    }

    /// True if `self` divides `o` exactly in Z[w].
    pub fn divides(self, o: Eisenstein) -> bool {
        let n = self.norm();
        if n == 0 {
            return o == Eisenstein::ZERO;
        }
        let p = o.mul(self.conj());
        p.a % n == 0 && p.b % n == 0
    }

    /// Exact quotient `o / self`; panics if the division is not exact.
    pub fn exact_div(self, o: Eisenstein) -> Eisenstein {
        let n = self.norm();
        let p = o.mul(self.conj());
        assert!(n != 0 && p.a % n == 0 && p.b % n == 0, "inexact division");
        Eisenstein::new(p.a / n, p.b / n)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => write!(f, "{b}*w"),
            (a, b) if b < 0 => write!(f, "{a}{b}*w"),
            (a, b) => write!(f, "{a}+{b}*w"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TorsionError {
    #[error("norm {0} too large: kernel of the multiplication map is not contained in E[27]")]
    NormTooLarge(i64),
}

/// A point of E[27]: the pair (x, y) stands for (x + y*w)/27 in E = C/Z[w].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct TorsionPoint {
    x: u8,
    y: u8,
}

pub const LEVEL: i64 = 27;

fn md(v: i64) -> u8 {
    v.rem_euclid(LEVEL) as u8
}

impl TorsionPoint {
    pub const ZERO: TorsionPoint = TorsionPoint { x: 0, y: 0 };

    pub fn new(x: i64, y: i64) -> Self {
        TorsionPoint { x: md(x), y: md(y) }
    }

    /// The 3-torsion point (a + b*w)/3.
    pub fn thirds(a: i64, b: i64) -> Self {
        TorsionPoint::new(9 * a, 9 * b)
    }

    /// The 9-torsion point (a + b*w)/9.
    pub fn ninths(a: i64, b: i64) -> Self {
        TorsionPoint::new(3 * a, 3 * b)
    }

    /// t = (1 + 2w)/3, the distinguished generator of the fixed locus of w.
    pub fn t() -> Self {
        TorsionPoint::thirds(1, 2)
    }

    pub fn x(self) -> u8 {
        self.x
    }

    pub fn y(self) -> u8 {
        self.y
    }

    pub fn is_zero(self) -> bool {
        self == TorsionPoint::ZERO
    }

    pub fn add(self, o: TorsionPoint) -> TorsionPoint {
        TorsionPoint::new(self.x as i64 + o.x as i64, self.y as i64 + o.y as i64)
    }

    pub fn sub(self, o: TorsionPoint) -> TorsionPoint {
        TorsionPoint::new(self.x as i64 - o.x as i64, self.y as i64 - o.y as i64)
    }

    pub fn neg(self) -> TorsionPoint {
        TorsionPoint::new(-(self.x as i64), -(self.y as i64))
    }

    /// Multiplication by the Eisenstein integer p + q*w:
    /// (x, y) -> (p*x - q*y, p*y + q*x - q*y) mod 27.
    pub fn scalar_mul(self, lambda: Eisenstein) -> TorsionPoint {
        let (x, y) = (self.x as i64, self.y as i64);
        TorsionPoint::new(
            lambda.a * x - lambda.b * y,
            lambda.a * y + lambda.b * x - lambda.b * y,
        )
    }

    pub fn zeta(self) -> TorsionPoint {
        self.scalar_mul(Eisenstein::ZETA)
    }

    /// Complex conjugation on E: (x, y) -> (x - y, -y).
    pub fn conj(self) -> TorsionPoint {
        TorsionPoint::new(self.x as i64 - self.y as i64, -(self.y as i64))
    }

    pub fn mul_int(self, n: i64) -> TorsionPoint {
        self.scalar_mul(Eisenstein::new(n, 0))
    }

    /// Smallest n >= 1 with n*p = 0; always a divisor of 27.
    pub fn order(self) -> u32 {
        let g = gcd(gcd(self.x as i64, self.y as i64), LEVEL);
        (LEVEL / g) as u32
    }

    pub fn is_fixed_by_zeta(self) -> bool {
        self.zeta() == self
    }

    /// All 729 points of E[27].
    pub fn all() -> impl Iterator<Item = TorsionPoint> {
        (0..LEVEL).flat_map(|x| (0..LEVEL).map(move |y| TorsionPoint::new(x, y)))
    }

    /// The n^2 points of E[n] for n dividing 27.
    pub fn of_level(n: i64) -> impl Iterator<Item = TorsionPoint> {
        assert!(LEVEL % n == 0);
        let s = LEVEL / n;
        (0..n).flat_map(move |a| (0..n).map(move |b| TorsionPoint::new(s * a, s * b)))
    }
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

impl fmt::Display for TorsionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let frac = |n: u8| {
            let g = gcd(n as i64, LEVEL);
            (n as i64 / g, LEVEL / g)
        };
        let mut parts = Vec::new();
        if self.x != 0 {
            let (p, q) = frac(self.x);
            parts.push(format!("{p}/{q}"));
        }
        if self.y != 0 {
            let (p, q) = frac(self.y);
            parts.push(format!("{p}/{q}*w"));
        }
        write!(f, "{}", parts.join("+"))
    }
}

/// The fixed locus of w on E: {0, t, -t}.
pub fn fix_points() -> Vec<TorsionPoint> {
    let mut v: Vec<_> = TorsionPoint::all().filter(|p| p.is_fixed_by_zeta()).collect();
    v.sort();
    v
}

/// A finite subgroup of E[27], listed exhaustively with a generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSubgroup {
    pub elements: Vec<TorsionPoint>,
    pub generators: Vec<TorsionPoint>,
    /// Abelian invariants (d1, d2, ...) with d1 | d2 | ...
    pub invariants: Vec<u32>,
}

impl TorsionSubgroup {
    fn from_elements(mut elements: Vec<TorsionPoint>) -> Self {
        elements.sort();
        elements.dedup();
        let n = elements.len() as u32;
        let exponent = elements.iter().map(|p| p.order()).max().unwrap_or(1);
        let g1 = elements
            .iter()
            .copied()
            .find(|p| p.order() == exponent)
            .unwrap_or(TorsionPoint::ZERO);
        let mut generators = vec![g1];
        let mut invariants = vec![exponent];
        if n > exponent {
            // One more generator suffices inside (Z/27)^2.
            let d = n / exponent;
            let g2 = elements
                .iter()
                .copied()
                .find(|&p| {
                    let cyc: Vec<_> = (0..exponent as i64).map(|k| g1.mul_int(k)).collect();
                    p.order() == d && !cyc.contains(&p)
                })
                .expect("second generator");
            generators.insert(0, g2);
            invariants.insert(0, d);
        }
        if invariants == [1] {
            invariants.clear();
            generators.clear();
        }
        TorsionSubgroup {
            elements,
            generators,
            invariants,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, p: TorsionPoint) -> bool {
        self.elements.binary_search(&p).is_ok()
    }
}

/// The kernel of multiplication by `lambda` on E, as a subgroup of E[27].
///
/// Fails if the kernel is not contained in E[27], i.e. if the norm of
/// `lambda` does not divide 729.
pub fn kernel_of(lambda: Eisenstein) -> Result<TorsionSubgroup, TorsionError> {
    let n = lambda.norm();
    if n == 0 || 729 % n != 0 {
        return Err(TorsionError::NormTooLarge(n));
    }
    let elements: Vec<_> = TorsionPoint::all()
        .filter(|p| p.scalar_mul(lambda).is_zero())
        .collect();
    if elements.len() as i64 != n {
        return Err(TorsionError::NormTooLarge(n));
    }
    Ok(TorsionSubgroup::from_elements(elements))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn zeta_cubes_to_one() {
        let z = Eisenstein::ZETA;
        assert_eq!(z.mul(z).mul(z), Eisenstein::ONE);
        assert_eq!(z.mul(z), Eisenstein::new(-1, -1));
    }

    #[test]
    fn conjugation_is_ring_involution() {
        for a in -3..4 {
            for b in -3..4 {
                for c in -3..4 {
                    for d in -3..4 {
                        let u = Eisenstein::new(a, b);
                        let v = Eisenstein::new(c, d);
                        assert_eq!(u.conj().conj(), u);
                        assert_eq!(u.mul(v).conj(), u.conj().mul(v.conj()));
                        assert_eq!(u.add(v).conj(), u.conj().add(v.conj()));
                    }
                }
            }
        }
    }

    #[test]
    fn units_have_order_six() {
        let u = Eisenstein::units();
        assert_eq!(u.len(), 6);
        let mut sorted = u.to_vec();
        sorted.sort_by_key(|e| (e.a, e.b));
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
        assert!(u.iter().all(|e| e.is_unit()));
    }

    #[test]
    fn scalar_mul_identity_and_t_fixed() {
        let t = TorsionPoint::t();
        assert_eq!(t, TorsionPoint::new(9, 18));
        for p in TorsionPoint::all() {
            assert_eq!(p.scalar_mul(Eisenstein::ONE), p);
        }
        // zeta * t = t
        assert_eq!(t.zeta(), t);
    }

    #[test]
    fn zeta_minus_one_times_zeta_sq_minus_one_is_three() {
        // Symbolic oracle: (w - 1)(w^2 - 1) expands to 3 in Z[w].
        let z = Eisenstein::ZETA;
        let lhs = z.sub(Eisenstein::ONE).mul(z.mul(z).sub(Eisenstein::ONE));
        assert_eq!(lhs, Eisenstein::new(3, 0));
        for p in TorsionPoint::of_level(9) {
            assert_eq!(p.scalar_mul(lhs), p.mul_int(3));
        }
    }

    #[test]
    fn fix_points_are_zero_t_minus_t() {
        let fix = fix_points();
        assert_eq!(fix.len(), 3);
        let t = TorsionPoint::t();
        assert!(fix.contains(&TorsionPoint::ZERO));
        assert!(fix.contains(&t));
        assert!(fix.contains(&t.neg()));
        assert_eq!(t.neg(), TorsionPoint::new(18, 9));
        for p in &fix {
            assert!(p.zeta().sub(*p).is_zero());
        }
    }

    #[test]
    fn kernel_of_three_zeta_minus_one() {
        let z = Eisenstein::ZETA;
        let lam = Eisenstein::new(3, 0).mul(z.sub(Eisenstein::ONE));
        let ker = kernel_of(lam).unwrap();
        assert_eq!(ker.order(), 27);
        assert_eq!(ker.invariants, vec![3, 9]);
        // Spanned by 1/3 and t/3.
        let third = TorsionPoint::thirds(1, 0);
        let t_third = TorsionPoint::ninths(1, 2);
        assert_eq!(t_third, TorsionPoint::new(3, 6));
        assert!(ker.contains(third));
        assert!(ker.contains(t_third));
        let mut span = Vec::new();
        for i in 0..3 {
            for j in 0..9 {
                span.push(third.mul_int(i).add(t_third.mul_int(j)));
            }
        }
        span.sort();
        assert_eq!(span, ker.elements);
    }

    #[test]
    fn kernel_of_unit_and_zeta_minus_one() {
        let ker1 = kernel_of(Eisenstein::ONE).unwrap();
        assert_eq!(ker1.elements, vec![TorsionPoint::ZERO]);
        let ker = kernel_of(Eisenstein::ZETA.sub(Eisenstein::ONE)).unwrap();
        assert_eq!(ker.order(), 3);
        assert_eq!(ker.elements, fix_points());
    }

    #[test]
    fn kernel_norm_too_large() {
        // N(27) = 729 is fine, N(27(w-1)) = 2187 is not.
        assert!(kernel_of(Eisenstein::new(27, 0)).is_ok());
        let lam = Eisenstein::new(27, 0).mul(Eisenstein::ZETA.sub(Eisenstein::ONE));
        assert_eq!(
            kernel_of(lam),
            Err(TorsionError::NormTooLarge(2187))
        );
    }

    #[test]
    fn orders() {
        assert_eq!(TorsionPoint::ZERO.order(), 1);
        assert_eq!(TorsionPoint::t().order(), 3);
        // t/3 has order 9, by repeated addition.
        let t_third = TorsionPoint::new(3, 6);
        let mut acc = TorsionPoint::ZERO;
        let mut n = 0;
        loop {
            acc = acc.add(t_third);
            n += 1;
            if acc.is_zero() {
                break;
            }
        }
        assert_eq!(n, 9);
        assert_eq!(t_third.order(), 9);
    }

    #[test]
    fn one_plus_zeta_plus_zeta_sq_acts_as_zero() {
        for p in TorsionPoint::all() {
            assert_eq!(p.zeta().zeta().zeta(), p);
        }
        // 1 + w + w^2 = 0 acts as the zero map.
        let s = Eisenstein::ONE
            .add(Eisenstein::ZETA)
            .add(Eisenstein::ZETA.mul(Eisenstein::ZETA));
        assert_eq!(s, Eisenstein::ZERO);
        for p in TorsionPoint::all() {
            assert!(p.add(p.zeta()).add(p.zeta().zeta()).is_zero());
        }
    }

    #[test]
    fn bilinearity_over_e9_exhaustive() {
        let lams = [
            Eisenstein::ZETA.sub(Eisenstein::ONE),
            Eisenstein::new(2, 1),
            Eisenstein::new(-1, 3),
        ];
        let points: Vec<_> = TorsionPoint::of_level(9).collect();
        for &lam in &lams {
            for &mu in &lams {
                for &p in &points {
                    assert_eq!(
                        p.scalar_mul(lam.mul(mu)),
                        p.scalar_mul(mu).scalar_mul(lam)
                    );
                    for &q in &points {
                        assert_eq!(
                            p.add(q).scalar_mul(lam),
                            p.scalar_mul(lam).add(q.scalar_mul(lam))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn kernel_size_equals_norm() {
        let z = Eisenstein::ZETA;
        for lam in [
            z.sub(Eisenstein::ONE),
            Eisenstein::new(3, 0),
            Eisenstein::new(3, 0).mul(z.sub(Eisenstein::ONE)),
        ] {
            let ker = kernel_of(lam).unwrap();
            assert_eq!(ker.order() as i64, lam.norm());
        }
    }

    proptest! {
        #[test]
        fn conj_involution_on_points(x in 0i64..27, y in 0i64..27) {
            let p = TorsionPoint::new(x, y);
            prop_assert_eq!(p.conj().conj(), p);
        }

        #[test]
        fn scalar_mul_matches_conjugated(x in 0i64..27, y in 0i64..27, a in -5i64..6, b in -5i64..6) {
            // conj(lambda * p) = conj(lambda) * conj(p)
            let p = TorsionPoint::new(x, y);
            let lam = Eisenstein::new(a, b);
            prop_assert_eq!(p.scalar_mul(lam).conj(), p.conj().scalar_mul(lam.conj()));
        }
    }

    #[test]
    fn display_reduced() {
        assert_eq!(TorsionPoint::t().to_string(), "1/3+2/3*w");
        assert_eq!(TorsionPoint::ZERO.to_string(), "0");
        assert_eq!(TorsionPoint::new(3, 0).to_string(), "1/9");
        assert_eq!(TorsionPoint::new(0, 9).to_string(), "1/3*w");
    }
}
