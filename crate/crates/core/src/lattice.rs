//! Kernels K inside Fix_E(zeta3)^4, the lattices Lambda_K = Z[zeta3]^4 + K,
//! torus points of E^4/K, and semilinear self-maps of E^4.
//!
//! Fix_E(zeta3) = {0, t, -t} is cyclic of order 3, so kernels are coded as
//! subgroups of F_3^4 via 0 -> 0, t -> 1, -t -> 2. A kernel is admissible if
//! it contains no non-zero multiple of a unit vector; there are 129 of them.

use crate::eisenstein::{Eisenstein, TorsionPoint};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LatticeError {
    #[error("map does not send the source lattice into the target lattice")]
    LatticeViolation,
    #[error("block map applied to a point outside E[9]^4")]
    PointLevelTooHigh,
}

/// A vector in Fix_E(zeta3)^4 coded over F_3 (0 -> 0, t -> 1, -t -> 2).
pub type FixVec = [u8; 4];

pub fn fix_to_point(c: u8) -> TorsionPoint {
    TorsionPoint::t().mul_int(c as i64)
}

pub fn point_to_fix(p: TorsionPoint) -> Option<u8> {
    (0..3).find(|&c| fix_to_point(c) == p)
}

pub fn fixvec_to_points(v: FixVec) -> [TorsionPoint; 4] {
    [
        fix_to_point(v[0]),
        fix_to_point(v[1]),
        fix_to_point(v[2]),
        fix_to_point(v[3]),
    ]
}

fn encode(v: FixVec) -> usize {
    v.iter().fold(0, |acc, &c| acc * 3 + c as usize)
}

fn decode(mut i: usize) -> FixVec {
    let mut v = [0u8; 4];
    for k in (0..4).rev() {
        v[k] = (i % 3) as u8;
        i /= 3;
    }
    v
}

fn add_vec(a: FixVec, b: FixVec) -> FixVec {
    [
        (a[0] + b[0]) % 3,
        (a[1] + b[1]) % 3,
        (a[2] + b[2]) % 3,
        (a[3] + b[3]) % 3,
    ]
}

/// An admissible kernel K <= Fix_E(zeta3)^4.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Kernel {
    pub id: usize,
    pub gens: Vec<FixVec>,
    pub elements: Vec<FixVec>,
    mask: u128,
}

impl Kernel {
    pub fn from_gens(id: usize, gens: &[FixVec]) -> Kernel {
        let mask = closure_mask(gens);
        let elements: Vec<FixVec> = (0..81).filter(|&i| mask >> i & 1 == 1).map(decode).collect();
        Kernel {
            id,
            gens: gens.to_vec(),
            elements,
            mask,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, v: FixVec) -> bool {
        self.mask >> encode(v) & 1 == 1
    }

    /// Same subgroup of F_3^4, regardless of chosen generators.
    pub fn same_subgroup(&self, o: &Kernel) -> bool {
        self.mask == o.mask
    }

    /// Elements embedded into E^4 as torsion points.
    pub fn embedded(&self) -> Vec<[TorsionPoint; 4]> {
        self.elements.iter().map(|&v| fixvec_to_points(v)).collect()
    }

    /// The image of the i-th coordinate projection, as torsion points.
    pub fn projection(&self, i: usize) -> Vec<TorsionPoint> {
        let mut out: Vec<TorsionPoint> =
            self.elements.iter().map(|v| fix_to_point(v[i])).collect();
        out.sort();
        out.dedup();
        out
    }

    /// Counts of elements by support size (number of non-zero coordinates).
    pub fn mu_signature(&self) -> [usize; 5] {
        let mut mu = [0usize; 5];
        for v in &self.elements {
            mu[v.iter().filter(|&&c| c != 0).count()] += 1;
        }
        mu
    }
}

fn closure_mask(gens: &[FixVec]) -> u128 {
    let mut mask: u128 = 1; // the zero vector
    let mut stack = vec![[0u8; 4]];
    while let Some(v) = stack.pop() {
        for &g in gens {
            let w = add_vec(v, g);
            let e = encode(w);
            if mask >> e & 1 == 0 {
                mask |= 1 << e;
                stack.push(w);
            }
        }
    }
    mask
}

fn has_unit_multiple(mask: u128) -> bool {
    (0..81).any(|i| {
        if mask >> i & 1 == 0 {
            return false;
        }
        let v = decode(i);
        v.iter().filter(|&&c| c != 0).count() == 1
    })
}

/// Minimal generating set of a subgroup given by its element mask.
fn gens_of_mask(mask: u128) -> Vec<FixVec> {
    let mut gens: Vec<FixVec> = Vec::new();
    let mut cur: u128 = 1;
    for i in 1..81 {
        if mask >> i & 1 == 1 && cur >> i & 1 == 0 {
            gens.push(decode(i));
            cur = closure_mask(&gens);
            if cur == mask {
                break;
            }
        }
    }
    gens
}

/// All subgroups of Fix_E(zeta3)^4 containing no non-zero multiple of a
/// unit vector, in a canonical order (by size, then element list).
pub fn enumerate_kernels() -> Vec<Kernel> {
    let mut masks: Vec<u128> = Vec::new();
    // Every subgroup of F_3^4 has at most 3 generators among admissible
    // subgroups (dimension 4 would contain unit vectors), but enumerate
    // with up to 4 to keep the subspace census honest.
    let mut seen = std::collections::HashSet::new();
    let vecs: Vec<FixVec> = (0..81).map(decode).collect();
    for a in 0..81 {
        for b in a..81 {
            for c in b..81 {
                let m = closure_mask(&[vecs[a], vecs[b], vecs[c]]);
                if seen.insert(m) {
                    masks.push(m);
                }
            }
        }
    }
    // A 4-generator subgroup is all of F_3^4, which is inadmissible anyway.
    masks.retain(|&m| !has_unit_multiple(m));
    let mut kernels: Vec<(u128, Vec<FixVec>)> = masks
        .into_iter()
        .map(|m| {
            let els: Vec<FixVec> = (0..81).filter(|&i| m >> i & 1 == 1).map(decode).collect();
            (m, els)
        })
        .collect();
    kernels.sort_by(|a, b| (a.1.len(), &a.1).cmp(&(b.1.len(), &b.1)));
    kernels
        .into_iter()
        .enumerate()
        .map(|(id, (m, _))| Kernel::from_gens(id, &gens_of_mask(m)))
        .collect()
}

/// The cyclic shift of coordinates 2,3,4 induced by the Heisenberg
/// generator: (v1, v2, v3, v4) -> (v1, v4, v2, v3).
pub fn heis_shift(v: FixVec) -> FixVec {
    [v[0], v[3], v[1], v[2]]
}

/// Kernels stable under the Heisenberg coordinate shift.
pub fn heis_invariant_kernels() -> Vec<Kernel> {
    enumerate_kernels()
        .into_iter()
        .filter(|k| k.elements.iter().all(|&v| k.contains(heis_shift(v))))
        .collect()
}

/// An element of E^4/K, stored as the lexicographically minimal coset
/// representative in E[27]^4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TorusPoint {
    pub coords: [TorsionPoint; 4],
}

impl TorusPoint {
    pub const ZERO: TorusPoint = TorusPoint {
        coords: [TorsionPoint::ZERO; 4],
    };

    pub fn new(coords: [TorsionPoint; 4]) -> TorusPoint {
        TorusPoint { coords }
    }

    pub fn add(&self, o: &TorusPoint) -> TorusPoint {
        let mut c = [TorsionPoint::ZERO; 4];
        for i in 0..4 {
            c[i] = self.coords[i].add(o.coords[i]);
        }
        TorusPoint { coords: c }
    }

    pub fn sub(&self, o: &TorusPoint) -> TorusPoint {
        let mut c = [TorsionPoint::ZERO; 4];
        for i in 0..4 {
            c[i] = self.coords[i].sub(o.coords[i]);
        }
        TorusPoint { coords: c }
    }

    pub fn neg(&self) -> TorusPoint {
        TorusPoint {
            coords: self.coords.map(|p| p.neg()),
        }
    }

    /// Canonical coset representative mod the embedded kernel.
    pub fn reduce(&self, k: &Kernel) -> TorusPoint {
        k.embedded()
            .iter()
            .map(|kappa| {
                let mut c = [TorsionPoint::ZERO; 4];
                for i in 0..4 {
                    c[i] = self.coords[i].add(kappa[i]);
                }
                TorusPoint { coords: c }
            })
            .min()
            .unwrap()
    }

    pub fn is_in_kernel(&self, k: &Kernel) -> bool {
        let mut v = [0u8; 4];
        for i in 0..4 {
            match point_to_fix(self.coords[i]) {
                Some(c) => v[i] = c,
                None => return false,
            }
        }
        k.contains(v)
    }
}

/// A semilinear self-map of E^4 = C^4 / (lattice).
///
/// Monomial maps send z_i' = u_i * sigma^{c_i}(z_{perm[i]}) with units u_i in
/// <-zeta3>. Block maps act as a unit (possibly conjugate-linear) on
/// coordinate 1 and as (1/3) * M (3x3, entries in Z[zeta3], possibly after
/// coordinate-wise conjugation) on coordinates 2..4; `mat` stores 3M.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SemilinearMap {
    Monomial {
        perm: [usize; 4],
        units: [Eisenstein; 4],
        conj: [bool; 4],
    },
    Block {
        unit1: Eisenstein,
        conj1: bool,
        mat: [[Eisenstein; 3]; 3],
        conj: bool,
    },
}

impl SemilinearMap {
    pub fn identity_monomial() -> SemilinearMap {
        SemilinearMap::Monomial {
            perm: [0, 1, 2, 3],
            units: [Eisenstein::ONE; 4],
            conj: [false; 4],
        }
    }

    pub fn identity_block() -> SemilinearMap {
        let mut mat = [[Eisenstein::ZERO; 3]; 3];
        for (i, row) in mat.iter_mut().enumerate() {
            row[i] = Eisenstein::new(3, 0);
        }
        SemilinearMap::Block {
            unit1: Eisenstein::ONE,
            conj1: false,
            mat,
            conj: false,
        }
    }

    /// Sign of the determinant of the map as a real-linear map of R^8.
    ///
    /// Complex-linear pieces contribute +1 (|det|^2 > 0); each conjugated
    /// complex coordinate contributes -1.
    pub fn det_sign(&self) -> i32 {
        match self {
            SemilinearMap::Monomial { conj, .. } => {
                if conj.iter().filter(|&&c| c).count() % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
            SemilinearMap::Block { conj1, conj, .. } => {
                // conjugation on coordinates 2..4 is 3 real reflections.
                let flips = *conj1 as usize + 3 * *conj as usize;
                if flips % 2 == 0 {
                    1
                } else {
                    -1
                }
            }
        }
    }

    pub fn is_complex_linear(&self) -> bool {
        match self {
            SemilinearMap::Monomial { conj, .. } => conj.iter().all(|&c| !c),
            SemilinearMap::Block { conj1, conj, .. } => !conj1 && !conj,
        }
    }

    /// self after other (function composition self . other).
    pub fn compose(&self, other: &SemilinearMap) -> SemilinearMap {
        match (self, other) {
            (
                SemilinearMap::Monomial { perm: p, units: u, conj: c },
                SemilinearMap::Monomial { perm: q, units: v, conj: d },
            ) => {
                // (A.B)(z)_i = u_i sigma^{c_i}( B(z)_{p_i} )
                //            = u_i sigma^{c_i}( v_{p_i} sigma^{d_{p_i}}(z_{q_{p_i}}) )
                let mut perm = [0usize; 4];
                let mut units = [Eisenstein::ZERO; 4];
                let mut conj = [false; 4];
                for i in 0..4 {
                    perm[i] = q[p[i]];
                    let w = v[p[i]];
                    units[i] = u[i].mul(if c[i] { w.conj() } else { w });
                    conj[i] = c[i] ^ d[p[i]];
                }
                SemilinearMap::Monomial { perm, units, conj }
            }
            (
                SemilinearMap::Block { unit1: u, conj1: cu, mat: a, conj: ca },
                SemilinearMap::Block { unit1: v, conj1: cv, mat: b, conj: cb },
            ) => {
                let unit1 = u.mul(if *cu { v.conj() } else { *v });
                // (1/3)A sigma^{ca} ( (1/3)B sigma^{cb}(w) ): stored product
                // is (A sigma^{ca}(B)) / 3, which must stay integral.
                let mut mat = [[Eisenstein::ZERO; 3]; 3];
                for i in 0..3 {
                    for j in 0..3 {
                        let mut s = Eisenstein::ZERO;
                        for l in 0..3 {
                            let bl = if *ca { b[l][j].conj() } else { b[l][j] };
                            s = s.add(a[i][l].mul(bl));
                        }
                        assert!(
                            s.a % 3 == 0 && s.b % 3 == 0,
                            "block composition leaves (1/3)Z[zeta3]"
                        );
                        mat[i][j] = Eisenstein::new(s.a / 3, s.b / 3);
                    }
                }
                SemilinearMap::Block {
                    unit1,
                    conj1: cu ^ cv,
                    mat,
                    conj: ca ^ cb,
                }
            }
            _ => panic!("cannot compose monomial with block maps"),
        }
    }

    /// Image of a point of E[27]^4. Block maps require coordinates 2..4 in
    /// E[9]; the result is then exact in E[27] (well-defined modulo the
    /// target kernel, since the map is only defined on the quotient).
    pub fn apply_point(&self, p: &TorusPoint) -> Result<TorusPoint, LatticeError> {
        match self {
            SemilinearMap::Monomial { perm, units, conj } => {
                let mut c = [TorsionPoint::ZERO; 4];
                for i in 0..4 {
                    let mut z = p.coords[perm[i]];
                    if conj[i] {
                        z = z.conj();
                    }
                    c[i] = z.scalar_mul(units[i]);
                }
                Ok(TorusPoint { coords: c })
            }
            SemilinearMap::Block { unit1, conj1, mat, conj } => {
                let mut c = [TorsionPoint::ZERO; 4];
                let z1 = if *conj1 { p.coords[0].conj() } else { p.coords[0] };
                c[0] = z1.scalar_mul(*unit1);
                // Coordinates 2..4: lift (x, y)/27 in E[9] to (x/3 + y/3 w)/9,
                // multiply by the integral stored matrix, land back in E[27].
                let mut lifted = [Eisenstein::ZERO; 3];
                for l in 0..3 {
                    let z = if *conj { p.coords[l + 1].conj() } else { p.coords[l + 1] };
                    if z.x() % 3 != 0 || z.y() % 3 != 0 {
                        return Err(LatticeError::PointLevelTooHigh);
                    }
                    lifted[l] = Eisenstein::new(z.x() as i64 / 3, z.y() as i64 / 3);
                }
                for i in 0..3 {
                    let mut s = Eisenstein::ZERO;
                    for l in 0..3 {
                        s = s.add(mat[i][l].mul(lifted[l]));
                    }
                    c[i + 1] = TorsionPoint::new(s.a, s.b);
                }
                Ok(TorusPoint { coords: c })
            }
        }
    }

    /// Does the map send Lambda_{K_src} into Lambda_{K_dst}?
    ///
    /// Checks the images of the standard lattice basis (columns) and of the
    /// kernel lifts, each modulo the embedded target kernel.
    pub fn maps_lattice(&self, k_src: &Kernel, k_dst: &Kernel) -> bool {
        match self {
            SemilinearMap::Monomial { .. } => {
                // Columns are unit multiples of basis vectors: always in
                // Z[zeta3]^4. Only the kernel lifts need checking.
            }
            SemilinearMap::Block { mat, .. } => {
                // Column j of the lower block is (0, mat[.][j]/3) in E^4.
                for j in 0..3 {
                    let mut col = TorusPoint::ZERO;
                    for i in 0..3 {
                        col.coords[i + 1] =
                            TorsionPoint::new(9 * mat[i][j].a, 9 * mat[i][j].b);
                    }
                    if !col.is_in_kernel(k_dst) {
                        return false;
                    }
                }
            }
        }
        for kappa in k_src.embedded() {
            let img = match self.apply_point(&TorusPoint { coords: kappa }) {
                Ok(p) => p,
                Err(_) => return false,
            };
            if !img.is_in_kernel(k_dst) {
                return false;
            }
        }
        true
    }

    /// Image of a kernel under a monomial map (units and conjugation act on
    /// Fix_E(zeta3) by signs, so this is a signed coordinate permutation).
    pub fn apply_kernel(&self, k: &Kernel) -> Result<Vec<FixVec>, LatticeError> {
        let mut out = Vec::with_capacity(k.order());
        for kappa in k.embedded() {
            let img = self.apply_point(&TorusPoint { coords: kappa })?;
            let mut v = [0u8; 4];
            for i in 0..4 {
                v[i] = point_to_fix(img.coords[i]).ok_or(LatticeError::LatticeViolation)?;
            }
            out.push(v);
        }
        out.sort_unstable();
        Ok(out)
    }
}

/// Orbit partition of a kernel family under a group of (monomial) maps.
/// Each orbit is sorted; orbits are ordered by their minimal member (the
/// canonical representative).
pub fn kernel_orbits(kernels: &[Kernel], maps: &[SemilinearMap]) -> Vec<Vec<usize>> {
    let masks: Vec<u128> = kernels
        .iter()
        .map(|k| closure_mask(&k.gens))
        .collect();
    let lookup = |els: &[FixVec]| -> usize {
        let mut m: u128 = 0;
        for &v in els {
            m |= 1 << encode(v);
        }
        masks
            .iter()
            .position(|&x| x == m)
            .expect("image kernel not in family")
    };
    let mut orbit_of: Vec<Option<usize>> = vec![None; kernels.len()];
    let mut orbits = Vec::new();
    for start in 0..kernels.len() {
        if orbit_of[start].is_some() {
            continue;
        }
        let oid = orbits.len();
        let mut members = vec![start];
        orbit_of[start] = Some(oid);
        let mut frontier = vec![start];
        while let Some(i) = frontier.pop() {
            for m in maps {
                let img = m.apply_kernel(&kernels[i]).expect("maps must stabilize the family");
                let j = lookup(&img);
                if orbit_of[j].is_none() {
                    orbit_of[j] = Some(oid);
                    members.push(j);
                    frontier.push(j);
                }
            }
        }
        members.sort_unstable();
        orbits.push(members);
    }
    orbits
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) const T: u8 = 1;
    pub(crate) const NT: u8 = 2; // -t

    #[test]
    fn kernel_census() {
        let kernels = enumerate_kernels();
        assert_eq!(kernels.len(), 129);
        let trivial = Kernel::from_gens(0, &[]);
        assert!(kernels.iter().any(|k| k.same_subgroup(&trivial)));
        let diag = Kernel::from_gens(0, &[[T, T, T, T]]);
        assert!(kernels.iter().any(|k| k.same_subgroup(&diag)));
        let unit = Kernel::from_gens(0, &[[T, 0, 0, 0]]);
        assert!(!kernels.iter().any(|k| k.same_subgroup(&unit)));
        for k in &kernels {
            assert!([1, 3, 9, 27].contains(&k.order()));
            for i in 0..4 {
                assert!(k.projection(i).len() <= 3);
            }
        }
    }

    #[test]
    fn heis_invariant_count() {
        let inv = heis_invariant_kernels();
        assert_eq!(inv.len(), 9);
        let lambda2 = Kernel::from_gens(0, &[[0, T, T, T], [0, T, NT, 0]]);
        assert!(inv.iter().any(|k| k.same_subgroup(&lambda2)));
        let not_inv = Kernel::from_gens(0, &[[0, 0, T, T]]);
        assert!(!inv.iter().any(|k| k.same_subgroup(&not_inv)));
    }

    #[test]
    fn mu_signatures() {
        let trivial = Kernel::from_gens(0, &[]);
        assert_eq!(trivial.mu_signature(), [1, 0, 0, 0, 0]);
        let diag = Kernel::from_gens(0, &[[T, T, T, T]]);
        assert_eq!(diag.mu_signature(), [1, 0, 0, 0, 2]);
    }

    #[test]
    fn mu_invariant_under_monomial_maps() {
        // Signed coordinate permutations preserve support sizes.
        let maps = [
            SemilinearMap::Monomial {
                perm: [0, 3, 1, 2],
                units: [Eisenstein::ONE; 4],
                conj: [false; 4],
            },
            SemilinearMap::Monomial {
                perm: [1, 0, 2, 3],
                units: [
                    Eisenstein::ZETA.neg(),
                    Eisenstein::ONE,
                    Eisenstein::ONE,
                    Eisenstein::ZETA,
                ],
                conj: [false, true, false, false],
            },
        ];
        for k in enumerate_kernels() {
            for m in &maps {
                let img = m.apply_kernel(&k).unwrap();
                let kk = Kernel::from_gens(0, &img);
                assert_eq!(kk.mu_signature(), k.mu_signature());
            }
        }
    }

    #[test]
    fn torus_point_reduction() {
        let k = Kernel::from_gens(0, &[[0, T, T, T]]);
        let p = TorusPoint::new([
            TorsionPoint::thirds(1, 0),
            TorsionPoint::t(),
            TorsionPoint::ZERO,
            TorsionPoint::t().neg(),
        ]);
        let r = p.reduce(&k);
        assert_eq!(r, r.reduce(&k));
        for kappa in k.embedded() {
            let shifted = p.add(&TorusPoint { coords: kappa });
            assert_eq!(shifted.reduce(&k), r);
        }
    }

    #[test]
    fn monomial_composition_and_det_sign() {
        let m1 = SemilinearMap::Monomial {
            perm: [0, 1, 3, 2],
            units: [Eisenstein::ONE; 4],
            conj: [true, false, false, false],
        };
        let m2 = SemilinearMap::Monomial {
            perm: [1, 2, 3, 0],
            units: [
                Eisenstein::ZETA,
                Eisenstein::ONE,
                Eisenstein::ZETA.neg(),
                Eisenstein::ONE,
            ],
            conj: [false, true, false, false],
        };
        assert_eq!(m1.det_sign(), -1);
        assert_eq!(m2.det_sign(), -1);
        let c = m1.compose(&m2);
        assert_eq!(c.det_sign(), 1);
        // Composition agrees pointwise on a sample of points.
        for x in (0..27).step_by(5) {
            for y in (0..27).step_by(7) {
                let p = TorusPoint::new([
                    TorsionPoint::new(x, y),
                    TorsionPoint::new(y, x),
                    TorsionPoint::new(x + y, 3),
                    TorsionPoint::new(5, y),
                ]);
                let via_c = c.apply_point(&p).unwrap();
                let via_steps = m1.apply_point(&m2.apply_point(&p).unwrap()).unwrap();
                assert_eq!(via_c, via_steps);
            }
        }
    }

    #[test]
    fn block_identity_and_composition() {
        let id = SemilinearMap::identity_block();
        let p = TorusPoint::new([
            TorsionPoint::new(7, 11),
            TorsionPoint::ninths(2, 1),
            TorsionPoint::thirds(1, 2),
            TorsionPoint::ninths(0, 5),
        ]);
        assert_eq!(id.apply_point(&p).unwrap(), p);
        assert_eq!(id.compose(&id), id);
        // Level check: coordinate 2 outside E[9] is rejected.
        let bad = TorusPoint::new([
            TorsionPoint::ZERO,
            TorsionPoint::new(1, 0),
            TorsionPoint::ZERO,
            TorsionPoint::ZERO,
        ]);
        assert_eq!(id.apply_point(&bad), Err(LatticeError::PointLevelTooHigh));
    }

    #[test]
    fn shift_stabilizes_lambda1() {
        let shift = SemilinearMap::Monomial {
            perm: [0, 3, 1, 2],
            units: [Eisenstein::ONE; 4],
            conj: [false; 4],
        };
        let lambda1 = Kernel::from_gens(0, &[[0, T, T, T]]);
        let img = shift.apply_kernel(&lambda1).unwrap();
        assert!(Kernel::from_gens(0, &img).same_subgroup(&lambda1));
        assert!(shift.maps_lattice(&lambda1, &lambda1));
    }

    #[test]
    fn m2_preserves_standard_lattice() {
        // M2(z) = (z2, conj z3, z4, z1)
        let m2 = SemilinearMap::Monomial {
            perm: [1, 2, 3, 0],
            units: [Eisenstein::ONE; 4],
            conj: [false, true, false, false],
        };
        let trivial = Kernel::from_gens(0, &[]);
        assert!(m2.maps_lattice(&trivial, &trivial));
    }

    #[test]
    fn kernel_orbit_of_trivial_is_singleton() {
        let kernels = enumerate_kernels();
        let maps = vec![
            SemilinearMap::Monomial {
                perm: [0, 3, 1, 2],
                units: [Eisenstein::ONE; 4],
                conj: [false; 4],
            },
            SemilinearMap::Monomial {
                perm: [0, 1, 2, 3],
                units: [
                    Eisenstein::ZETA.neg(),
                    Eisenstein::ONE,
                    Eisenstein::ONE,
                    Eisenstein::ONE,
                ],
                conj: [false; 4],
            },
        ];
        let orbits = kernel_orbits(&kernels, &maps);
        let trivial_id = kernels.iter().position(|k| k.order() == 1).unwrap();
        assert!(orbits.iter().any(|o| o == &vec![trivial_id]));
        let total: usize = orbits.iter().map(|o| o.len()).sum();
        assert_eq!(total, 129);
    }
}
