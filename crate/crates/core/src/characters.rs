//! Exact character theory for the catalog groups: irreducible characters,
//! the four-condition holonomy screening predicate, and Hodge numbers of the
//! two rigid quotient families.
//!
//! Screening enumerates every degree-4 non-negative integer combination of
//! irreducibles. For the largest catalog member (Z12 x Z12) that is ~19
//! million multisets, so the per-candidate tests are reduced to bitset
//! intersections and one 64-bit fingerprint; exact arithmetic re-verifies
//! every candidate the fast path reports as passing.

use crate::cyclotomic::{Cyclotomic, Q};
use crate::groups::{Automorphism, FiniteGroup, GroupFamily};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("no character-table construction for group family of {0}")]
    UnsupportedFamily(String),
    #[error("non-integer eigenvalue multiplicity: not a character")]
    NonIntegerMultiplicity,
}

/// A class function with cyclotomic values, one per conjugacy class of the
/// owning group (which is passed explicitly to every operation).
#[derive(Debug, Clone)]
pub struct Character {
    pub values: Vec<Cyclotomic>,
}

impl Character {
    /// Build from per-element values, checking class-constancy.
    pub fn from_element_values(g: &FiniteGroup, vals: &[Cyclotomic]) -> Character {
        let classes = g.conjugacy_classes();
        let values = classes
            .iter()
            .map(|class| {
                let v = vals[class[0]].clone();
                assert!(
                    class.iter().all(|&e| vals[e].eq_value(&v)),
                    "values not constant on conjugacy classes"
                );
                v
            })
            .collect();
        Character { values }
    }

    pub fn value(&self, g: &FiniteGroup, elem: usize) -> &Cyclotomic {
        &self.values[g.class_of(elem)]
    }

    pub fn degree(&self, g: &FiniteGroup) -> i64 {
        let d = self.value(g, 0).to_rational().expect("degree is rational");
        assert!(d.is_integer());
        d.to_integer()
    }

    pub fn conj(&self) -> Character {
        Character {
            values: self.values.iter().map(|v| v.conj()).collect(),
        }
    }

    pub fn add(&self, o: &Character) -> Character {
        Character {
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    /// Pointwise product (character of the tensor product).
    pub fn mul(&self, o: &Character) -> Character {
        Character {
            values: self
                .values
                .iter()
                .zip(&o.values)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn eq_values(&self, o: &Character) -> bool {
        self.values.len() == o.values.len()
            && self
                .values
                .iter()
                .zip(&o.values)
                .all(|(a, b)| a.eq_value(b))
    }
}

pub fn trivial_character(g: &FiniteGroup) -> Character {
    Character {
        values: vec![Cyclotomic::one(1); g.conjugacy_classes().len()],
    }
}

/// The complete list of irreducible characters of a catalog-family group.
pub fn irreducible_characters(g: &FiniteGroup) -> Result<Vec<Character>, CharacterError> {
    let chars = match &g.family {
        GroupFamily::Abelian(invariants) => abelian_characters(g, invariants),
        GroupFamily::Dihedral(half) => dihedral_characters(g, *half),
        GroupFamily::Heis3 => heis3_characters(g),
        GroupFamily::Custom => {
            return Err(CharacterError::UnsupportedFamily(g.name.clone()))
        }
    };
    debug_assert_eq!(
        chars
            .iter()
            .map(|c| c.degree(g) * c.degree(g))
            .sum::<i64>(),
        g.order() as i64
    );
    Ok(chars)
}

fn abelian_characters(g: &FiniteGroup, invariants: &[u32]) -> Vec<Character> {
    let n = g.exponent();
    let mut out = Vec::with_capacity(g.order());
    for idx in 0..g.order() {
        let k = g.abelian_coords(idx);
        let vals: Vec<Cyclotomic> = (0..g.order())
            .map(|a| {
                let t = g.abelian_coords(a);
                let e: i64 = k
                    .iter()
                    .zip(&t)
                    .zip(invariants)
                    .map(|((&ki, &ti), &d)| ki as i64 * ti as i64 * (n / d) as i64)
                    .sum();
                Cyclotomic::root_of_unity(n, e)
            })
            .collect();
        out.push(Character::from_element_values(g, &vals));
    }
    out
}

fn dihedral_characters(g: &FiniteGroup, half: u32) -> Vec<Character> {
    let n = g.order();
    // Element 2i + j is r^i s^j.
    let parts = |e: usize| ((e / 2) as i64, (e % 2) as i64);
    let mut out = Vec::new();
    let sign = |v: i64| Cyclotomic::from_int(1, if v % 2 == 0 { 1 } else { -1 });
    let linear: Vec<Box<dyn Fn(i64, i64) -> Cyclotomic>> = if half % 2 == 0 {
        vec![
            Box::new(|_, _| Cyclotomic::one(1)),
            Box::new(move |_, j| sign(j)),
            Box::new(move |i, _| sign(i)),
            Box::new(move |i, j| sign(i + j)),
        ]
    } else {
        vec![
            Box::new(|_, _| Cyclotomic::one(1)),
            Box::new(move |_, j| sign(j)),
        ]
    };
    for f in linear {
        let vals: Vec<Cyclotomic> = (0..n)
            .map(|e| {
                let (i, j) = parts(e);
                f(i, j)
            })
            .collect();
        out.push(Character::from_element_values(g, &vals));
    }
    let top = if half % 2 == 0 { half / 2 } else { (half + 1) / 2 };
    for w in 1..top {
        let vals: Vec<Cyclotomic> = (0..n)
            .map(|e| {
                let (i, j) = parts(e);
                if j == 0 {
                    Cyclotomic::root_of_unity(half, i * w as i64)
                        .add(&Cyclotomic::root_of_unity(half, -i * w as i64))
                } else {
                    Cyclotomic::zero(half)
                }
            })
            .collect();
        out.push(Character::from_element_values(g, &vals));
    }
    out
}

fn heis3_characters(g: &FiniteGroup) -> Vec<Character> {
    let mut out = Vec::new();
    // Nine linear characters inflated from the central quotient:
    // g^i h^j k^l -> zeta3^(alpha i + beta j).
    for alpha in 0..3i64 {
        for beta in 0..3i64 {
            let vals: Vec<Cyclotomic> = (0..27)
                .map(|e| {
                    let (i, j, _) = FiniteGroup::heis3_exponents(e);
                    Cyclotomic::root_of_unity(3, alpha * i as i64 + beta * j as i64)
                })
                .collect();
            out.push(Character::from_element_values(g, &vals));
        }
    }
    // The two cubic characters, supported on the center.
    let cubic: Vec<Cyclotomic> = (0..27)
        .map(|e| {
            let (i, j, l) = FiniteGroup::heis3_exponents(e);
            if i == 0 && j == 0 {
                Cyclotomic::root_of_unity(3, l as i64).scale(Q::from_integer(3))
            } else {
                Cyclotomic::zero(3)
            }
        })
        .collect();
    let chi3 = Character::from_element_values(g, &cubic);
    out.push(chi3.conj());
    out.push(chi3);
    out
}

/// The linear character chi1 of Heis(3) cut out by the first coordinate of
/// the standard action: chi1(g) = 1, chi1(h) = zeta3, chi1(k) = 1.
pub fn heis3_chi1(g: &FiniteGroup) -> Character {
    let vals: Vec<Cyclotomic> = (0..27)
        .map(|e| {
            let (_, j, _) = FiniteGroup::heis3_exponents(e);
            Cyclotomic::root_of_unity(3, j as i64)
        })
        .collect();
    Character::from_element_values(g, &vals)
}

/// The cubic character chi3 of Heis(3) (value 3*zeta3 at k).
pub fn heis3_chi3(g: &FiniteGroup) -> Character {
    let chars = heis3_characters(g);
    chars[10].clone()
}

/// The automorphisms phi with chi . phi = chi for every listed character.
pub fn character_stabilizer(
    g: &FiniteGroup,
    autos: &[Automorphism],
    chars: &[Character],
) -> Vec<Automorphism> {
    autos
        .iter()
        .filter(|phi| {
            chars
                .iter()
                .all(|c| (0..g.order()).all(|a| c.value(g, phi.apply(a)).eq_value(c.value(g, a))))
        })
        .cloned()
        .collect()
}

/// Exact inner product (1/|G|) sum over G of chi * conj(psi).
pub fn inner_product(g: &FiniteGroup, chi: &Character, psi: &Character) -> Q {
    let mut s = Cyclotomic::zero(1);
    for (class, (a, b)) in g
        .conjugacy_classes()
        .iter()
        .zip(chi.values.iter().zip(&psi.values))
    {
        s = s.add(&a.mul(&b.conj()).scale(Q::from_integer(class.len() as i64)));
    }
    s.scale(Q::new(1, g.order() as i64))
        .to_rational()
        .expect("inner product of characters is rational")
}

/// The k-th exterior power class function, by the Newton-type recurrence
/// k * L_k(g) = sum_{i=1..k} (-1)^(i-1) L_{k-i}(g) * chi(g^i).
pub fn exterior_power(g: &FiniteGroup, chi: &Character, k: usize) -> Character {
    let n = g.order();
    // lam[j][e] = (wedge^j chi)(e), built element-wise.
    let mut lam: Vec<Vec<Cyclotomic>> = vec![vec![Cyclotomic::one(1); n]];
    for j in 1..=k {
        let mut row = Vec::with_capacity(n);
        for e in 0..n {
            let mut s = Cyclotomic::zero(1);
            for i in 1..=j {
                let term = lam[j - i][e].mul(chi.value(g, g.pow(e, i as i64)));
                s = if i % 2 == 1 { s.add(&term) } else { s.sub(&term) };
            }
            row.push(s.scale(Q::new(1, j as i64)));
        }
        lam.push(row);
    }
    Character::from_element_values(g, &lam[k])
}

/// Multiplicity of each ord(g)-th root of unity as an eigenvalue of a
/// representation affording `chi`, at the element `elem`.
///
/// Entry k is the multiplicity of zeta_m^k, m = ord(elem), recovered by
/// finite Fourier inversion over the cyclic group generated by `elem`.
pub fn eigenvalue_multiplicities(
    g: &FiniteGroup,
    chi: &Character,
    elem: usize,
) -> Result<Vec<u32>, CharacterError> {
    let m = g.element_order(elem) as i64;
    let mut out = Vec::with_capacity(m as usize);
    for k in 0..m {
        let mut s = Cyclotomic::zero(1);
        for i in 0..m {
            s = s.add(&chi.value(g, g.pow(elem, i)).mul(&Cyclotomic::root_of_unity(
                m as u32,
                -k * i,
            )));
        }
        let v = s
            .scale(Q::new(1, m))
            .to_rational()
            .ok_or(CharacterError::NonIntegerMultiplicity)?;
        if !v.is_integer() || v.to_integer() < 0 {
            return Err(CharacterError::NonIntegerMultiplicity);
        }
        out.push(v.to_integer() as u32);
    }
    Ok(out)
}

/// Outcome of the four-condition screening of a single group.
#[derive(Debug, Clone)]
pub struct ScreeningReport {
    pub group: String,
    pub pass: bool,
    /// Irreducible-constituent index multisets of every passing candidate.
    pub passing: Vec<Vec<usize>>,
    /// Degree-4 multisets examined (after the condition-(4) pruning).
    pub candidates: u64,
    /// Leaf failures by first failed condition (indices 0..3 = conditions 1..4;
    /// condition-4 failures are pruned subtrees, counted as pruned branches).
    pub failures: [u64; 4],
}

const BITS_WORDS: usize = 4;
type Bits = [u64; BITS_WORDS];

fn bits_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

struct Screener<'a> {
    g: &'a FiniteGroup,
    degs: Vec<i64>,
    kernel: Vec<Bits>,
    eig1: Vec<Bits>,
    fingerprint: Vec<u64>,
    conj_idx: Vec<usize>,
    ident_only: Bits,
    full: Bits,
    mults: Vec<Vec<Vec<u32>>>,
    report: ScreeningReport,
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Screen a catalog group: does it admit a degree-4 character satisfying the
/// four conditions (faithful; eigenvalue 1 everywhere; integral characteristic
/// polynomials of chi + conj(chi); chi and conj(chi) disjoint)?
pub fn screen(g: &FiniteGroup) -> Result<ScreeningReport, CharacterError> {
    let irr = irreducible_characters(g)?;
    let classes = g.conjugacy_classes();
    let nc = classes.len();
    assert!(nc <= BITS_WORDS * 64);

    let conj_idx: Vec<usize> = irr
        .iter()
        .map(|c| {
            let cc = c.conj();
            irr.iter().position(|d| d.eq_values(&cc)).expect("conjugate character in list")
        })
        .collect();

    // Per class: eigenvalue multiplicity vector of each irreducible.
    let mut mults: Vec<Vec<Vec<u32>>> = Vec::with_capacity(irr.len());
    for chi in &irr {
        let per_class: Result<Vec<Vec<u32>>, _> = classes
            .iter()
            .map(|cl| eigenvalue_multiplicities(g, chi, cl[0]))
            .collect();
        mults.push(per_class?);
    }

    // Fingerprint weights: one random word per (class, galois unit, slot).
    // F(chi) = 0 whenever the eigenvalue multiset of chi + conj(chi) is
    // Galois-stable at every class; additivity makes F linear in chi.
    let mut seed = 0x7265706f5f686c6cu64;
    let mut degs = Vec::new();
    let mut kernel = Vec::new();
    let mut eig1 = Vec::new();
    let mut fingerprint = Vec::new();
    let mut weights: Vec<Vec<(u32, Vec<u64>)>> = Vec::with_capacity(nc);
    for cl in classes {
        let m = g.element_order(cl[0]);
        let mut per_unit = Vec::new();
        for j in 2..m {
            if gcd_u(j, m) == 1 {
                per_unit.push((j, (0..m).map(|_| splitmix(&mut seed)).collect()));
            }
        }
        weights.push(per_unit);
    }
    for (i, chi) in irr.iter().enumerate() {
        let deg = chi.degree(g);
        degs.push(deg);
        let mut kb = [0u64; BITS_WORDS];
        let mut eb = [0u64; BITS_WORDS];
        let mut fp = 0u64;
        for (c, cl) in classes.iter().enumerate() {
            if chi.values[c].eq_value(&Cyclotomic::from_int(1, deg)) {
                bits_set(&mut kb, c);
            }
            let m = g.element_order(cl[0]) as usize;
            let v = &mults[i][c];
            if v[0] > 0 {
                bits_set(&mut eb, c);
            }
            // w[k] = eigenvalue multiplicities of chi + conj(chi).
            let w: Vec<i64> = (0..m)
                .map(|k| v[k] as i64 + v[(m - k) % m] as i64)
                .collect();
            for (j, r) in &weights[c] {
                for k in 0..m {
                    let d = w[k] - w[(k * *j as usize) % m];
                    fp = fp.wrapping_add((d as u64).wrapping_mul(r[k]));
                }
            }
        }
        kernel.push(kb);
        eig1.push(eb);
        fingerprint.push(fp);
    }

    let mut ident_only = [0u64; BITS_WORDS];
    bits_set(&mut ident_only, g.class_of(0));
    let mut full = [0u64; BITS_WORDS];
    for c in 0..nc {
        bits_set(&mut full, c);
    }

    let mut sc = Screener {
        g,
        degs,
        kernel,
        eig1,
        fingerprint,
        conj_idx,
        ident_only,
        full,
        mults,
        report: ScreeningReport {
            group: g.name.clone(),
            pass: false,
            passing: Vec::new(),
            candidates: 0,
            failures: [0; 4],
        },
    };
    let mut chosen = Vec::new();
    sc.recurse(0, 4, full, [0u64; BITS_WORDS], 0, &mut chosen);
    sc.report.pass = !sc.report.passing.is_empty();
    Ok(sc.report)
}

fn gcd_u(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd_u(b, a % b)
    }
}

impl Screener<'_> {
    fn recurse(
        &mut self,
        from: usize,
        remaining: i64,
        ker: Bits,
        eig: Bits,
        fp: u64,
        chosen: &mut Vec<usize>,
    ) {
        if remaining == 0 {
            self.report.candidates += 1;
            if ker != self.ident_only {
                self.report.failures[0] += 1;
            } else if eig != self.full {
                self.report.failures[1] += 1;
            } else if fp != 0 {
                self.report.failures[2] += 1;
            } else if self.verify_exact(chosen) {
                self.report.passing.push(chosen.clone());
            }
            return;
        }
        for i in from..self.degs.len() {
            if self.degs[i] > remaining {
                continue;
            }
            // Condition (4) pruning: chi and conj(chi) must have no common
            // constituent, so i may be neither self-conjugate nor the
            // conjugate of anything already chosen (or of itself).
            if self.conj_idx[i] == i || chosen.iter().any(|&y| self.conj_idx[y] == i) {
                self.report.failures[3] += 1;
                continue;
            }
            chosen.push(i);
            let mut k2 = ker;
            let mut e2 = eig;
            for w in 0..BITS_WORDS {
                k2[w] &= self.kernel[i][w];
                e2[w] |= self.eig1[i][w];
            }
            self.recurse(
                i,
                remaining - self.degs[i],
                k2,
                e2,
                fp.wrapping_add(self.fingerprint[i]),
                chosen,
            );
            chosen.pop();
        }
    }

    /// Exact re-check of all four conditions for a fast-path survivor.
    fn verify_exact(&self, chosen: &[usize]) -> bool {
        let nc = self.g.conjugacy_classes().len();
        for c in 0..nc {
            let m = self.g.element_order(self.g.conjugacy_classes()[c][0]) as usize;
            let mut w = vec![0i64; m];
            let mut has_one = false;
            let mut in_kernel = true;
            for &i in chosen {
                let v = &self.mults[i][c];
                if v[0] > 0 {
                    has_one = true;
                }
                if v[0] as i64 != self.degs[i] {
                    in_kernel = false;
                }
                for k in 0..m {
                    w[k] += v[k] as i64 + v[(m - k) % m] as i64;
                }
            }
            if !has_one || (in_kernel && c != self.g.class_of(0)) {
                return false;
            }
            for j in 2..m as u32 {
                if gcd_u(j, m as u32) == 1 {
                    for k in 0..m {
                        if w[k] != w[(k * j as usize) % m] {
                            return false;
                        }
                    }
                }
            }
        }
        // Condition (4) exactly.
        for &i in chosen {
            if chosen.contains(&self.conj_idx[i]) {
                return false;
            }
        }
        true
    }
}

/// The two holonomy families admitting rigid hyperelliptic fourfolds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HolonomyTag {
    Z3Z3,
    Heis3,
}

/// Hodge numbers h^{p,q}, 0 <= p, q <= 4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HodgeDiamond {
    pub h: [[i64; 5]; 5],
}

impl HodgeDiamond {
    pub fn betti(&self, k: usize) -> i64 {
        (0..=k.min(4))
            .filter(|&p| k - p <= 4)
            .map(|p| self.h[p][k - p])
            .sum()
    }
}

/// Hodge numbers of the rigid hyperelliptic fourfolds, via
/// h^{p,q} = <chi_{p,q}, chi_triv> for the holonomy action on
/// wedge powers of the standard representation and its conjugate.
pub fn hodge_numbers(tag: HolonomyTag) -> HodgeDiamond {
    // Both families live inside the Heisenberg picture: the Z3 x Z3 action
    // is the restriction of the standard Heis(3) action to <h, k>.
    let g = FiniteGroup::heis3();
    let chi1 = heis3_chi1(&g);
    let chi3 = heis3_chi3(&g);
    let chi1c = chi1.conj();
    let chi3c = chi3.conj();
    // wedge powers: index by exponent.
    let w1: Vec<Character> = (0..=1).map(|k| exterior_power(&g, &chi1, k)).collect();
    let w1c: Vec<Character> = (0..=1).map(|k| exterior_power(&g, &chi1c, k)).collect();
    let w3: Vec<Character> = (0..=3).map(|k| exterior_power(&g, &chi3, k)).collect();
    let w3c: Vec<Character> = (0..=3).map(|k| exterior_power(&g, &chi3c, k)).collect();

    let subgroup: Vec<usize> = match tag {
        HolonomyTag::Heis3 => (0..27).collect(),
        HolonomyTag::Z3Z3 => {
            // <h, k> = elements g^0 h^j k^l.
            g.closure(&[FiniteGroup::heis3_index(0, 1, 0), FiniteGroup::heis3_index(0, 0, 1)])
        }
    };

    let mut h = [[0i64; 5]; 5];
    for (p, row) in h.iter_mut().enumerate() {
        for (q, out) in row.iter_mut().enumerate() {
            // chi_{p,q} = sum over s1+s2=p, t1+t2=q of
            //   wedge^{s1}(conj chi1) wedge^{t1}(chi1) wedge^{s2}(conj chi3) wedge^{t2}(chi3)
            let mut avg = Cyclotomic::zero(1);
            for s1 in 0..=1.min(p) {
                let s2 = p - s1;
                if s2 > 3 {
                    continue;
                }
                for t1 in 0..=1.min(q) {
                    let t2 = q - t1;
                    if t2 > 3 {
                        continue;
                    }
                    let term = w1c[s1].mul(&w1[t1]).mul(&w3c[s2]).mul(&w3[t2]);
                    for &e in &subgroup {
                        avg = avg.add(term.value(&g, e));
                    }
                }
            }
            let v = avg
                .scale(Q::new(1, subgroup.len() as i64))
                .to_rational()
                .expect("Hodge number is rational");
            assert!(v.is_integer() && !v.to_integer().is_negative());
            *out = v.to_integer();
        }
    }
    HodgeDiamond { h }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::make_catalog;

    #[test]
    fn heis3_character_table_shape() {
        let g = FiniteGroup::heis3();
        let irr = irreducible_characters(&g).unwrap();
        assert_eq!(irr.len(), 11);
        let degs: Vec<i64> = irr.iter().map(|c| c.degree(&g)).collect();
        assert_eq!(degs.iter().filter(|&&d| d == 1).count(), 9);
        assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 2);
    }

    #[test]
    fn character_stabilizer_orders() {
        let g = FiniteGroup::heis3();
        let autos = crate::groups::automorphisms(&g);
        assert_eq!(autos.len(), 432);
        let chi1 = heis3_chi1(&g);
        let chi3 = heis3_chi3(&g);
        assert_eq!(character_stabilizer(&g, &autos, &[chi1.clone()]).len(), 54);
        assert_eq!(
            character_stabilizer(&g, &autos, &[chi1.clone(), chi3]).len(),
            27
        );
        let chi1r = chi1.add(&chi1.conj());
        assert_eq!(character_stabilizer(&g, &autos, &[chi1r]).len(), 108);
    }

    #[test]
    fn orthogonality_all_catalog_groups() {
        for g in make_catalog() {
            let irr = irreducible_characters(&g).unwrap();
            for (i, a) in irr.iter().enumerate() {
                for (j, b) in irr.iter().enumerate() {
                    let ip = inner_product(&g, a, b);
                    let expected = if i == j { 1 } else { 0 };
                    assert_eq!(ip, Q::from_integer(expected), "{} chars {i},{j}", g.name);
                }
            }
        }
    }

    #[test]
    fn custom_family_unsupported() {
        let z2 = FiniteGroup::custom("C2", 2, vec![0, 1, 1, 0], vec![1]);
        assert!(matches!(
            irreducible_characters(&z2),
            Err(CharacterError::UnsupportedFamily(_))
        ));
    }

    #[test]
    fn heis3_cubic_character_identities() {
        let g = FiniteGroup::heis3();
        let chi3 = heis3_chi3(&g);
        assert_eq!(chi3.degree(&g), 3);
        assert_eq!(inner_product(&g, &chi3, &chi3), Q::from_integer(1));
        assert_eq!(inner_product(&g, &chi3, &chi3.conj()), Q::from_integer(0));
        // wedge^2(chi3) = conj(chi3), wedge^3(chi3) = trivial.
        assert!(exterior_power(&g, &chi3, 2).eq_values(&chi3.conj()));
        assert!(exterior_power(&g, &chi3, 3).eq_values(&trivial_character(&g)));
        assert!(exterior_power(&g, &chi3, 0).eq_values(&trivial_character(&g)));
        assert!(exterior_power(&g, &chi3, 1).eq_values(&chi3));
    }

    #[test]
    fn eigenvalue_multiplicities_examples() {
        let g = FiniteGroup::heis3();
        let chi3 = heis3_chi3(&g);
        let h = FiniteGroup::heis3_index(0, 1, 0);
        // chi3 at h: eigenvalues {1, zeta3, zeta3^2} once each.
        assert_eq!(eigenvalue_multiplicities(&g, &chi3, h).unwrap(), vec![1, 1, 1]);
        let triv = trivial_character(&g);
        assert_eq!(eigenvalue_multiplicities(&g, &triv, h).unwrap(), vec![1, 0, 0]);
        // Multiplicities sum to the degree for every irreducible and element.
        for chi in irreducible_characters(&g).unwrap() {
            for e in 0..27 {
                let m = eigenvalue_multiplicities(&g, &chi, e).unwrap();
                assert_eq!(m.iter().sum::<u32>() as i64, chi.degree(&g));
            }
        }
    }

    #[test]
    fn z3z3_standard_character_eigenvalue_at_generator() {
        // The four linear characters (a,b) -> a, b, 2a+b, a+b at (1,0) give
        // eigenvalue exponents {1, 0, 2, 1}: multiplicity of 1 is exactly 1.
        let g = FiniteGroup::abelian(&[3, 3]);
        let irr = irreducible_characters(&g).unwrap();
        let pick = |a: u32, b: u32| {
            irr.iter()
                .find(|c| {
                    c.value(&g, 3).eq_value(&Cyclotomic::root_of_unity(3, a as i64))
                        && c.value(&g, 1).eq_value(&Cyclotomic::root_of_unity(3, b as i64))
                })
                .unwrap()
                .clone()
        };
        let chi = pick(1, 0).add(&pick(0, 1)).add(&pick(2, 1)).add(&pick(1, 1));
        let m = eigenvalue_multiplicities(&g, &chi, 3).unwrap();
        assert_eq!(m[0], 1);
    }

    #[test]
    fn screening_verdicts() {
        let z33 = FiniteGroup::abelian(&[3, 3]);
        let rep = screen(&z33).unwrap();
        assert!(rep.pass);
        let heis = screen(&FiniteGroup::heis3()).unwrap();
        assert!(heis.pass);
        // 8 non-trivial linear characters x 2 cubic conjugates.
        assert_eq!(heis.passing.len(), 16);
        for w in &heis.passing {
            assert_eq!(w.len(), 2);
        }
        for g in [
            FiniteGroup::dihedral(4),
            FiniteGroup::abelian(&[2, 2]),
            FiniteGroup::abelian(&[3, 9]),
            FiniteGroup::abelian(&[7]),
            FiniteGroup::abelian(&[9]),
            FiniteGroup::abelian(&[12]),
        ] {
            assert!(!screen(&g).unwrap().pass, "{} should fail", g.name);
        }
    }

    #[test]
    fn z3z3_passing_character_matches_standard_action() {
        let g = FiniteGroup::abelian(&[3, 3]);
        let irr = irreducible_characters(&g).unwrap();
        let rep = screen(&g).unwrap();
        // The standard character (a,b) -> zeta^a + zeta^b + zeta^(2a+b) + zeta^(a+b).
        let vals: Vec<Cyclotomic> = (0..9)
            .map(|e| {
                let t = g.abelian_coords(e);
                let (a, b) = (t[0] as i64, t[1] as i64);
                [a, b, 2 * a + b, a + b]
                    .iter()
                    .fold(Cyclotomic::zero(3), |acc, &x| {
                        acc.add(&Cyclotomic::root_of_unity(3, x))
                    })
            })
            .collect();
        let standard = Character::from_element_values(&g, &vals);
        assert!(rep.passing.iter().any(|w| {
            let sum = w.iter().fold(
                Character {
                    values: vec![Cyclotomic::zero(1); 9],
                },
                |acc, &i| acc.add(&irr[i]),
            );
            sum.eq_values(&standard)
        }));
        // Every passing candidate is disjoint from its conjugate.
        for w in &rep.passing {
            let sum = w.iter().fold(
                Character {
                    values: vec![Cyclotomic::zero(1); 9],
                },
                |acc, &i| acc.add(&irr[i]),
            );
            assert_eq!(inner_product(&g, &sum, &sum.conj()), Q::from_integer(0));
        }
    }

    #[test]
    fn hodge_diamonds() {
        let heis = hodge_numbers(HolonomyTag::Heis3);
        assert_eq!(heis.h[0][0], 1);
        assert_eq!(heis.h[1][0], 0);
        assert_eq!(heis.h[2][0], 0);
        assert_eq!(heis.h[3][0], 1);
        assert_eq!(heis.h[4][0], 0);
        assert_eq!(heis.h[1][1], 2);
        assert_eq!(heis.h[2][1], 1);
        assert_eq!(heis.h[3][1], 0);
        assert_eq!(heis.h[2][2], 2);

        let z33 = hodge_numbers(HolonomyTag::Z3Z3);
        assert_eq!(z33.h[0][0], 1);
        assert_eq!(z33.h[1][0], 0);
        assert_eq!(z33.h[2][0], 0);
        assert_eq!(z33.h[3][0], 1);
        assert_eq!(z33.h[4][0], 0);
        assert_eq!(z33.h[1][1], 4);
        assert_eq!(z33.h[2][1], 3);
        assert_eq!(z33.h[2][2], 6);

        // Conjugation symmetry h^{p,q} = h^{q,p} falls out of the computation.
        for d in [&heis, &z33] {
            for p in 0..5 {
                for q in 0..5 {
                    assert_eq!(d.h[p][q], d.h[q][p]);
                }
            }
        }
    }
}
