//! Standard-form actions of Z3^2 and Heis(3) on T = E^4/K: analytic
//! representations, well-definedness residues, freeness tests and exhaustive
//! enumeration of free actions.
//!
//! An action in standard form is determined by its translation parts
//! tau(h) = (0, b2, b3, b4), tau(k) = (c1, 0, 0, 0) and, in the Heisenberg
//! case, tau(g) = (a1, a2, a3, a4). Well-definedness is equivalent to the
//! residues v1..v3 (resp. v1..v6) lying in the kernel K.

use crate::characters::HolonomyTag;
use crate::eisenstein::{Eisenstein, TorsionPoint};
use crate::groups::FiniteGroup;
use crate::lattice::{Kernel, SemilinearMap, TorusPoint};
use rayon::prelude::*;

fn zeta_pow(k: i64) -> Eisenstein {
    match k.rem_euclid(3) {
        0 => Eisenstein::ONE,
        1 => Eisenstein::ZETA,
        _ => Eisenstein::ZETA.mul(Eisenstein::ZETA),
    }
}

fn diag(e: [i64; 4]) -> SemilinearMap {
    SemilinearMap::Monomial {
        perm: [0, 1, 2, 3],
        units: [zeta_pow(e[0]), zeta_pow(e[1]), zeta_pow(e[2]), zeta_pow(e[3])],
        conj: [false; 4],
    }
}

/// Analytic representation of a holonomy group element.
///
/// For z3z3 the element is (a, b) coded as 3a + b; for heis3 it is the
/// index g^i h^j k^l of the multiplication-table group.
pub fn rho(tag: HolonomyTag, elem: usize) -> SemilinearMap {
    match tag {
        HolonomyTag::Z3Z3 => {
            let (a, b) = ((elem / 3) as i64, (elem % 3) as i64);
            diag([a, b, 2 * a + b, a + b])
        }
        HolonomyTag::Heis3 => {
            let (i, j, l) = FiniteGroup::heis3_exponents(elem);
            let g = SemilinearMap::Monomial {
                perm: [0, 3, 1, 2],
                units: [Eisenstein::ONE; 4],
                conj: [false; 4],
            };
            let h = diag([1, 0, 2, 1]);
            let k = diag([0, 1, 1, 1]);
            let mut m = SemilinearMap::identity_monomial();
            for _ in 0..i {
                m = m.compose(&g);
            }
            for _ in 0..j {
                m = m.compose(&h);
            }
            for _ in 0..l {
                m = m.compose(&k);
            }
            m
        }
    }
}

/// Number of group elements for a holonomy tag (9 or 27).
pub fn group_order(tag: HolonomyTag) -> usize {
    match tag {
        HolonomyTag::Z3Z3 => 9,
        HolonomyTag::Heis3 => 27,
    }
}

/// Group multiplication in the element coding used by `rho`.
pub fn group_mul(tag: HolonomyTag, x: usize, y: usize) -> usize {
    match tag {
        HolonomyTag::Z3Z3 => {
            let (a1, b1) = (x / 3, x % 3);
            let (a2, b2) = (y / 3, y % 3);
            (a1 + a2) % 3 * 3 + (b1 + b2) % 3
        }
        HolonomyTag::Heis3 => {
            let (i1, j1, l1) = FiniteGroup::heis3_exponents(x);
            let (i2, j2, l2) = FiniteGroup::heis3_exponents(y);
            FiniteGroup::heis3_index(
                (i1 + i2) as i64,
                (j1 + j2) as i64,
                (l1 + l2 + 2 * j1 * i2) as i64,
            )
        }
    }
}

/// Generators of the holonomy group in the `rho` element coding:
/// z3z3 -> [h, k]; heis3 -> [g, h].
pub fn group_generators(tag: HolonomyTag) -> Vec<usize> {
    match tag {
        HolonomyTag::Z3Z3 => vec![3, 1],
        HolonomyTag::Heis3 => vec![
            FiniteGroup::heis3_index(1, 0, 0),
            FiniteGroup::heis3_index(0, 1, 0),
        ],
    }
}

/// A holonomy action in standard form on E^4/K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardAction {
    pub tag: HolonomyTag,
    pub kernel: Kernel,
    pub c1: TorsionPoint,
    /// b2, b3, b4.
    pub b: [TorsionPoint; 3],
    /// a1..a4; all zero in the z3z3 case.
    pub a: [TorsionPoint; 4],
}

impl StandardAction {
    pub fn z3z3(kernel: &Kernel, c1: TorsionPoint, b: [TorsionPoint; 3]) -> StandardAction {
        StandardAction {
            tag: HolonomyTag::Z3Z3,
            kernel: kernel.clone(),
            c1,
            b,
            a: [TorsionPoint::ZERO; 4],
        }
    }

    pub fn heis3(
        kernel: &Kernel,
        c1: TorsionPoint,
        b: [TorsionPoint; 3],
        a: [TorsionPoint; 4],
    ) -> StandardAction {
        StandardAction {
            tag: HolonomyTag::Heis3,
            kernel: kernel.clone(),
            c1,
            b,
            a,
        }
    }

    pub fn tau_h(&self) -> TorusPoint {
        TorusPoint::new([TorsionPoint::ZERO, self.b[0], self.b[1], self.b[2]])
    }

    pub fn tau_k(&self) -> TorusPoint {
        TorusPoint::new([self.c1, TorsionPoint::ZERO, TorsionPoint::ZERO, TorsionPoint::ZERO])
    }

    pub fn tau_g(&self) -> TorusPoint {
        TorusPoint::new(self.a)
    }

    /// Translation part on a generator (in `group_generators` order).
    pub fn tau_generator(&self, which: usize) -> TorusPoint {
        match (self.tag, which) {
            (HolonomyTag::Z3Z3, 0) => self.tau_h(),
            (HolonomyTag::Z3Z3, 1) => self.tau_k(),
            (HolonomyTag::Heis3, 0) => self.tau_g(),
            (HolonomyTag::Heis3, 1) => self.tau_h(),
            _ => panic!("generator index out of range"),
        }
    }

    /// Full cocycle table tau(u) for every group element, reduced mod K,
    /// extended from the generators by tau(xu) = tau(x) + rho(x) tau(u).
    pub fn cocycle_table(&self) -> Vec<TorusPoint> {
        let n = group_order(self.tag);
        let gens = group_generators(self.tag);
        let taus: Vec<TorusPoint> = (0..gens.len()).map(|w| self.tau_generator(w)).collect();
        let mut table: Vec<Option<TorusPoint>> = vec![None; n];
        table[0] = Some(TorusPoint::ZERO.reduce(&self.kernel));
        let mut frontier = vec![0usize];
        while let Some(x) = frontier.pop() {
            for (gi, &u) in gens.iter().enumerate() {
                let y = group_mul(self.tag, x, u);
                if table[y].is_none() {
                    let rx = rho(self.tag, x);
                    let val = table[x]
                        .unwrap()
                        .add(&rx.apply_point(&taus[gi]).expect("monomial map"))
                        .reduce(&self.kernel);
                    table[y] = Some(val);
                    frontier.push(y);
                }
            }
        }
        table.into_iter().map(|v| v.unwrap()).collect()
    }

    /// The affine map Phi(u) applied to a torus point, reduced mod K.
    pub fn affine_apply(&self, u: usize, tau_u: &TorusPoint, z: &TorusPoint) -> TorusPoint {
        rho(self.tag, u)
            .apply_point(z)
            .expect("monomial map")
            .add(tau_u)
            .reduce(&self.kernel)
    }
}

fn mul_pt(p: TorsionPoint, lam: Eisenstein) -> TorsionPoint {
    p.scalar_mul(lam)
}

/// The well-definedness residues v1..v3 (z3z3) or v1..v6 (heis3), as exact
/// E^4 vectors (not reduced mod K).
pub fn relation_residues(act: &StandardAction) -> Vec<TorusPoint> {
    let z = Eisenstein::ZETA;
    let zm1 = z.sub(Eisenstein::ONE); // zeta3 - 1
    let omz = Eisenstein::ONE.sub(z); // 1 - zeta3
    let omz2 = Eisenstein::ONE.sub(z.mul(z)); // 1 - zeta3^2
    let [b2, b3, b4] = act.b;
    let c1 = act.c1;
    let zero = TorsionPoint::ZERO;
    let mut out = vec![
        TorusPoint::new([
            mul_pt(c1, zm1),
            mul_pt(b2, omz),
            mul_pt(b3, omz),
            mul_pt(b4, omz),
        ]),
        TorusPoint::new([zero, b2.mul_int(3), zero, zero]),
        TorusPoint::new([c1.mul_int(3), zero, zero, zero]),
    ];
    if act.tag == HolonomyTag::Heis3 {
        let [a1, a2, a3, a4] = act.a;
        let s = a2.add(a3).add(a4);
        out.push(TorusPoint::new([
            mul_pt(a1, omz).sub(c1),
            b4.sub(mul_pt(b2, z)).add(mul_pt(a2, omz)),
            b2.sub(mul_pt(b3, z)),
            b3.sub(mul_pt(b4, z)).add(mul_pt(a4, omz2)),
        ]));
        out.push(TorusPoint::new([a1.mul_int(3), s, s, s]));
        out.push(TorusPoint::new([
            zero,
            mul_pt(a2, omz),
            mul_pt(a3, omz),
            mul_pt(a4, omz),
        ]));
    }
    out
}

/// True iff every relation residue lies in K, i.e. the standard-form data
/// defines an action on E^4/K.
pub fn is_well_defined(act: &StandardAction) -> bool {
    relation_residues(act)
        .iter()
        .all(|v| v.is_in_kernel(&act.kernel))
}

/// Exact freeness test per the fixed-point lemmas for standard-form actions.
pub fn is_free(act: &StandardAction) -> bool {
    let k = &act.kernel;
    let [b2, b3, b4] = act.b;
    let in_proj = |i: usize, p: TorsionPoint| k.projection(i).contains(&p);
    match act.tag {
        HolonomyTag::Z3Z3 => {
            !in_proj(0, act.c1) && !in_proj(1, b2) && !in_proj(2, b3) && !in_proj(3, b4)
        }
        HolonomyTag::Heis3 => {
            let z = Eisenstein::ZETA;
            let z2 = z.mul(z);
            let [a1, a2, a3, a4] = act.a;
            let zm1 = z.sub(Eisenstein::ONE);
            // (1) k free, (2) g free, (3) h free, (4) gh free, (5) gh^2 free.
            let c4 = mul_pt(a2.add(a3), z2)
                .add(a4)
                .add(mul_pt(b2.add(b4), z2))
                .add(b3);
            let c5 = mul_pt(a2.add(a3), z)
                .add(a4)
                .sub(mul_pt(b2.add(b3), z))
                .sub(b4);
            !in_proj(0, act.c1)
                && !mul_pt(a1, zm1).is_zero()
                && !in_proj(1, b2)
                && !c4.is_zero()
                && !c5.is_zero()
        }
    }
}

/// The 8 non-zero points of E[3].
fn e3_nonzero() -> Vec<TorsionPoint> {
    TorsionPoint::of_level(3).filter(|p| !p.is_zero()).collect()
}

/// All free z3z3 actions in standard form on E^4/K: parameter tuples
/// (c1, b2, b3, b4) in (E[3] \ {0})^4 passing well-definedness and freeness.
pub fn enumerate_free_z32(kernel: &Kernel) -> Vec<StandardAction> {
    let pts = e3_nonzero();
    let mut out = Vec::new();
    for &c1 in &pts {
        for &b2 in &pts {
            for &b3 in &pts {
                for &b4 in &pts {
                    let act = StandardAction::z3z3(kernel, c1, [b2, b3, b4]);
                    if is_well_defined(&act) && is_free(&act) {
                        out.push(act);
                    }
                }
            }
        }
    }
    out
}

/// Enumeration mode for the Heisenberg case.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HeisMode {
    /// Fix the normalization a1 = b2 = 1/3, c1 = (1 - zeta3)/3 and loop
    /// b3, b4 over zeta3^j / 3 and a2..a4 over E[3].
    Normalized,
    /// Loop all parameters over their full ranges (with residue pruning).
    Exhaustive,
}

/// All free Heis(3) actions in standard form on E^4/K.
pub fn enumerate_free_heis(kernel: &Kernel, mode: HeisMode) -> Vec<StandardAction> {
    match mode {
        HeisMode::Normalized => {
            let third = TorsionPoint::thirds(1, 0);
            let c1 = mul_pt(third, Eisenstein::ONE.sub(Eisenstein::ZETA)); // = t
            let mut out = Vec::new();
            let zeta_thirds: Vec<TorsionPoint> = (0..3)
                .map(|j| mul_pt(third, zeta_pow(j)))
                .collect();
            let e3: Vec<TorsionPoint> = TorsionPoint::of_level(3).collect();
            for &b3 in &zeta_thirds {
                for &b4 in &zeta_thirds {
                    for &a2 in &e3 {
                        for &a3 in &e3 {
                            for &a4 in &e3 {
                                let act = StandardAction::heis3(
                                    kernel,
                                    c1,
                                    [third, b3, b4],
                                    [third, a2, a3, a4],
                                );
                                if is_well_defined(&act) && is_free(&act) {
                                    out.push(act);
                                }
                            }
                        }
                    }
                }
            }
            out
        }
        HeisMode::Exhaustive => enumerate_free_heis_exhaustive(kernel),
    }
}

fn enumerate_free_heis_exhaustive(kernel: &Kernel) -> Vec<StandardAction> {
    let pts = e3_nonzero();
    let e3: Vec<TorsionPoint> = TorsionPoint::of_level(3).collect();
    // a1 ranges over {x in E[9] : 3x in Fix_E(zeta3)}, 27 points.
    let a1_range: Vec<TorsionPoint> = TorsionPoint::of_level(9)
        .filter(|p| p.mul_int(3).is_fixed_by_zeta())
        .collect();
    assert_eq!(a1_range.len(), 27);
    let omz = Eisenstein::ONE.sub(Eisenstein::ZETA);

    // Outer tuples (c1, b2, b3, b4), checked against v1..v3 and the freeness
    // conditions that involve no a_i.
    let mut outer = Vec::new();
    for &c1 in &pts {
        for &b2 in &pts {
            for &b3 in &pts {
                for &b4 in &pts {
                    outer.push((c1, b2, b3, b4));
                }
            }
        }
    }
    let per_outer: Vec<Vec<StandardAction>> = outer
        .par_iter()
        .map(|&(c1, b2, b3, b4)| {
            let mut found = Vec::new();
            let probe = StandardAction::heis3(kernel, c1, [b2, b3, b4], [TorsionPoint::ZERO; 4]);
            let res = relation_residues(&probe);
            // v1, v2, v3 do not involve the a_i.
            if !res[..3].iter().all(|v| v.is_in_kernel(kernel)) {
                return found;
            }
            let in_proj = |i: usize, p: TorsionPoint| kernel.projection(i).contains(&p);
            if in_proj(0, c1) || in_proj(1, b2) {
                return found;
            }
            // Per-coordinate pruning from v6 in K: (1 - zeta3) a_i must lie
            // in the corresponding kernel projection.
            let ok6 = |i: usize, a: TorsionPoint| in_proj(i, mul_pt(a, omz));
            for &a2 in &e3 {
                if !ok6(1, a2) {
                    continue;
                }
                for &a3 in &e3 {
                    if !ok6(2, a3) {
                        continue;
                    }
                    for &a4 in &e3 {
                        if !ok6(3, a4) {
                            continue;
                        }
                        for &a1 in &a1_range {
                            let act = StandardAction::heis3(
                                kernel,
                                c1,
                                [b2, b3, b4],
                                [a1, a2, a3, a4],
                            );
                            if is_well_defined(&act) && is_free(&act) {
                                found.push(act);
                            }
                        }
                    }
                }
            }
            found
        })
        .collect();
    per_outer.into_iter().flatten().collect()
}

/// Number of distinct affine actions on T among the given parameter tuples
/// (tuples may coincide as maps once translation parts are reduced mod K).
pub fn distinct_map_count(actions: &[StandardAction]) -> usize {
    let mut seen = std::collections::HashSet::new();
    for act in actions {
        let key: Vec<TorusPoint> = (0..group_generators(act.tag).len())
            .map(|w| act.tau_generator(w).reduce(&act.kernel))
            .collect();
        seen.insert(key);
    }
    seen.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::enumerate_kernels;

    const T: u8 = 1;
    const NT: u8 = 2;

    fn t() -> TorsionPoint {
        TorsionPoint::t()
    }

    fn third() -> TorsionPoint {
        TorsionPoint::thirds(1, 0)
    }

    #[test]
    fn rho_examples() {
        // z3z3 at (1,0): diag(zeta, 1, zeta^2, zeta).
        let m = rho(HolonomyTag::Z3Z3, 3);
        let SemilinearMap::Monomial { perm, units, conj } = m else {
            panic!()
        };
        assert_eq!(perm, [0, 1, 2, 3]);
        assert_eq!(conj, [false; 4]);
        assert_eq!(units, [zeta_pow(1), zeta_pow(0), zeta_pow(2), zeta_pow(1)]);
        // heis3 g: coordinate 4-cycle on 2,3,4.
        let g = rho(HolonomyTag::Heis3, FiniteGroup::heis3_index(1, 0, 0));
        let SemilinearMap::Monomial { perm, units, conj } = g else {
            panic!()
        };
        assert_eq!(perm, [0, 3, 1, 2]);
        assert_eq!(units, [Eisenstein::ONE; 4]);
        assert_eq!(conj, [false; 4]);
    }

    #[test]
    fn rho_is_a_homomorphism() {
        for tag in [HolonomyTag::Z3Z3, HolonomyTag::Heis3] {
            let n = group_order(tag);
            for x in 0..n {
                for y in 0..n {
                    let lhs = rho(tag, x).compose(&rho(tag, y));
                    let rhs = rho(tag, group_mul(tag, x, y));
                    assert_eq!(lhs, rhs, "tag {tag:?}, {x} * {y}");
                }
            }
        }
    }

    #[test]
    fn residue_examples() {
        let k0 = Kernel::from_gens(0, &[]);
        // c1 = b_j = t: v1 = 0 since t is zeta3-fixed.
        let act = StandardAction::z3z3(&k0, t(), [t(), t(), t()]);
        let res = relation_residues(&act);
        assert_eq!(res[0], TorusPoint::ZERO);
        assert_eq!(res[1], TorusPoint::ZERO);
        assert_eq!(res[2], TorusPoint::ZERO);
        // c1 = 1/3: first coordinate of v1 is (zeta3 - 1)/3, non-zero.
        let act2 = StandardAction::z3z3(&k0, third(), [t(), t(), t()]);
        let res2 = relation_residues(&act2);
        assert!(!res2[0].coords[0].is_zero());
        assert!(!is_well_defined(&act2));
    }

    #[test]
    fn published_representatives_are_well_defined_and_free() {
        // Row 1 of the biholomorphism table: K = {0}, tau(h) = (0,t,t,t),
        // tau(k) = (t,0,0,0).
        let k0 = Kernel::from_gens(0, &[]);
        let act = StandardAction::z3z3(&k0, t(), [t(), t(), t()]);
        assert!(is_well_defined(&act));
        assert!(is_free(&act));
        // Heisenberg representative tau1 on Lambda1 = <(0,t,t,t)>:
        // tau(g) = (1/3,0,0,0), tau(h) = (0,1/3,1/3,1/3), c1 = (1-zeta3)/3 = t.
        let l1 = Kernel::from_gens(0, &[[0, T, T, T]]);
        let z = TorsionPoint::ZERO;
        let act1 = StandardAction::heis3(
            &l1,
            t(),
            [third(), third(), third()],
            [third(), z, z, z],
        );
        assert!(is_well_defined(&act1));
        assert!(is_free(&act1));
    }

    #[test]
    fn freeness_counterexample() {
        let kd = Kernel::from_gens(0, &[[T, T, T, T]]);
        let act = StandardAction::z3z3(&kd, t(), [third(), third(), third()]);
        // c1 = t is the first coordinate of (t,t,t,t) in K.
        assert!(!is_free(&act));
    }

    #[test]
    fn z32_counts_sample() {
        let k0 = Kernel::from_gens(0, &[]);
        assert_eq!(enumerate_free_z32(&k0).len(), 16);
        let k6 = Kernel::from_gens(0, &[[T, T, T, T]]);
        assert_eq!(enumerate_free_z32(&k6).len(), 162);
        let kexc = Kernel::from_gens(0, &[[T, NT, 0, T], [T, T, NT, 0]]);
        assert_eq!(enumerate_free_z32(&kexc).len(), 0);
    }

    #[test]
    fn heis_normalized_counts() {
        let l1 = Kernel::from_gens(0, &[[0, T, T, T]]);
        assert_eq!(enumerate_free_heis(&l1, HeisMode::Normalized).len(), 108);
        let l2 = Kernel::from_gens(0, &[[0, T, T, T], [0, T, NT, 0]]);
        assert_eq!(enumerate_free_heis(&l2, HeisMode::Normalized).len(), 324);
    }

    #[test]
    fn heis_exhaustive_diagonal_kernel_admits_nothing() {
        let kd = Kernel::from_gens(0, &[[T, T, T, T]]);
        assert_eq!(enumerate_free_heis(&kd, HeisMode::Exhaustive).len(), 0);
    }

    #[test]
    fn normalized_actions_satisfy_structure_constraints() {
        let omz = Eisenstein::ONE.sub(Eisenstein::ZETA);
        let l1 = Kernel::from_gens(0, &[[0, T, T, T]]);
        for act in enumerate_free_heis(&l1, HeisMode::Normalized) {
            // (1 - zeta3) a1 = c1, and b3, b4 are unit multiples of b2.
            assert_eq!(mul_pt(act.a[0], omz), act.c1);
            for b in [act.b[1], act.b[2]] {
                assert!((0..3).any(|j| mul_pt(act.b[0], zeta_pow(j)) == b));
            }
        }
    }

    #[test]
    fn heisenberg_commutator_relation_on_points() {
        let l1 = Kernel::from_gens(0, &[[0, T, T, T]]);
        let acts = enumerate_free_heis(&l1, HeisMode::Normalized);
        let act = &acts[0];
        let table = act.cocycle_table();
        let g = FiniteGroup::heis3_index(1, 0, 0);
        let h = FiniteGroup::heis3_index(0, 1, 0);
        let k = FiniteGroup::heis3_index(0, 0, 1);
        let khg1 = group_mul(HolonomyTag::Heis3, k, group_mul(HolonomyTag::Heis3, h, g));
        let gh = group_mul(HolonomyTag::Heis3, g, h);
        assert_eq!(gh, khg1); // gh = khg in the group
        for x in (0..27).step_by(4) {
            for y in (0..27).step_by(5) {
                let z = TorusPoint::new([
                    TorsionPoint::new(x, y),
                    TorsionPoint::new(y, 2 * x),
                    TorsionPoint::new(x + y, x),
                    TorsionPoint::new(2 * y, x + 2 * y),
                ]);
                // Phi(gh) = Phi(k) Phi(h) Phi(g) pointwise.
                let lhs = act.affine_apply(gh, &table[gh], &z);
                let step = act.affine_apply(g, &table[g], &z);
                let step = act.affine_apply(h, &table[h], &step);
                let rhs = act.affine_apply(k, &table[k], &step);
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn free_actions_have_no_fixed_points_spot_check() {
        let kernels = enumerate_kernels();
        let k3 = kernels
            .iter()
            .find(|k| k.same_subgroup(&Kernel::from_gens(0, &[[0, T, T, T]])))
            .unwrap();
        let acts = enumerate_free_z32(k3);
        assert_eq!(acts.len(), 108);
        for act in acts.iter().step_by(17) {
            let table = act.cocycle_table();
            for u in 1..9 {
                for s in 0..40u8 {
                    let z = TorusPoint::new([
                        TorsionPoint::new(s as i64, 2 * s as i64 + 1),
                        TorsionPoint::new(3 * s as i64, 7),
                        TorsionPoint::new(s as i64 + 5, s as i64),
                        TorsionPoint::new(11, s as i64 + 13),
                    ]);
                    let z = z.reduce(&act.kernel);
                    assert_ne!(act.affine_apply(u, &table[u], &z), z);
                }
            }
        }
    }

    #[test]
    fn distinct_map_counts_do_not_exceed_tuple_counts() {
        let l2 = Kernel::from_gens(0, &[[0, T, T, T], [0, T, NT, 0]]);
        let acts = enumerate_free_heis(&l2, HeisMode::Normalized);
        let distinct = distinct_map_count(&acts);
        assert!(distinct <= acts.len());
        assert!(distinct > 0);
    }
}
