//! Finite groups by multiplication table: the two rigid holonomy groups,
//! the screening catalog, and automorphism groups.
//!
//! Everything here is tiny (orders at most 432), so groups are stored as
//! explicit Latin squares and all structure — conjugacy classes, element
//! orders, automorphisms — is recovered by direct search.

use std::fmt;

/// Which construction a group came from; drives character-table synthesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupFamily {
    /// Direct product of cyclic groups with the given orders.
    Abelian(Vec<u32>),
    /// Dihedral group of order 2n.
    Dihedral(u32),
    /// Heisenberg group of order 27 and exponent 3.
    Heis3,
    /// A group given directly by a multiplication table, outside the named
    /// families; character-table synthesis is not available for these.
    Custom,
}

/// A finite group of order at most 432, given by its multiplication table.
///
/// Element 0 is the identity. The table is validated on construction:
/// it must be a Latin square, associative, and generated by `generators`.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    pub name: String,
    pub family: GroupFamily,
    n: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    pub generators: Vec<usize>,
    orders: Vec<u32>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl FiniteGroup {
    fn from_table(
        name: &str,
        family: GroupFamily,
        n: usize,
        mul: Vec<u16>,
        generators: Vec<usize>,
    ) -> Self {
        assert!(n >= 1 && n <= 432, "group order out of supported range");
        assert_eq!(mul.len(), n * n);
        let at = |a: usize, b: usize| mul[a * n + b] as usize;
        // Identity and Latin-square checks.
        for a in 0..n {
            assert_eq!(at(0, a), a, "0 must be the identity");
            assert_eq!(at(a, 0), a, "0 must be the identity");
            let mut row = vec![false; n];
            let mut col = vec![false; n];
            for b in 0..n {
                row[at(a, b)] = true;
                col[at(b, a)] = true;
            }
            assert!(row.iter().all(|&v| v) && col.iter().all(|&v| v), "not a Latin square");
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(at(at(a, b), c), at(a, at(b, c)), "not associative");
                }
            }
        }
        let mut inv = vec![0u16; n];
        for a in 0..n {
            inv[a] = (0..n).find(|&b| at(a, b) == 0).unwrap() as u16;
        }
        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = at(x, a);
                k += 1;
            }
            orders[a] = k;
        }
        // Conjugacy classes by brute-force orbit computation.
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for a in 0..n {
            if class_of[a] != usize::MAX {
                continue;
            }
            let id = classes.len();
            let mut class = Vec::new();
            for g in 0..n {
                let c = at(at(g, a), inv[g] as usize);
                if class_of[c] == usize::MAX {
                    class_of[c] = id;
                    class.push(c);
                }
            }
            class.sort_unstable();
            classes.push(class);
        }
        let g = FiniteGroup {
            name: name.to_string(),
            family,
            n,
            mul,
            inv,
            generators,
            orders,
            class_of,
            classes,
        };
        assert_eq!(g.closure(&g.generators).len(), n, "generators do not generate");
        g
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let o = self.orders[a] as i64;
        let mut e = k.rem_euclid(o);
        let mut x = 0;
        while e > 0 {
            x = self.mul(x, a);
            e -= 1;
        }
        x
    }

    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn exponent(&self) -> u32 {
        (1..=self.n as u32)
            .find(|&e| self.orders.iter().all(|&o| e % o == 0))
            .unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.n
    }

    pub fn conjugacy_classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    /// Subgroup generated by `gens`, as a sorted element list.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        seen[0] = true;
        let mut out = vec![0usize];
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &s in gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    out.push(y);
                    queue.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn center(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&a| (0..self.n).all(|b| self.mul(a, b) == self.mul(b, a)))
            .collect()
    }

    /// The Heisenberg group of order 27: generators g, h with central
    /// commutator k = [g, h] = ghg⁻¹h⁻¹. Element i*9 + j*3 + l is gⁱhʲkˡ.
    pub fn heis3() -> FiniteGroup {
        let n = 27;
        let idx = |i: i64, j: i64, l: i64| {
            (i.rem_euclid(3) * 9 + j.rem_euclid(3) * 3 + l.rem_euclid(3)) as usize
        };
        let mut mul = vec![0u16; n * n];
        for i in 0..3i64 {
            for j in 0..3i64 {
                for l in 0..3i64 {
                    for i2 in 0..3i64 {
                        for j2 in 0..3i64 {
                            for l2 in 0..3i64 {
                                // g^i h^j k^l · g^i2 h^j2 k^l2 = g^(i+i2) h^(j+j2) k^(l+l2+2*j*i2),
                                // from hg = k² gh.
                                let p = idx(i + i2, j + j2, l + l2 + 2 * j * i2);
                                mul[idx(i, j, l) * n + idx(i2, j2, l2)] = p as u16;
                            }
                        }
                    }
                }
            }
        }
        FiniteGroup::from_table("Heis(3)", GroupFamily::Heis3, n, mul, vec![9, 3])
    }

    /// Index of gⁱhʲkˡ in the Heisenberg group.
    pub fn heis3_index(i: i64, j: i64, l: i64) -> usize {
        (i.rem_euclid(3) * 9 + j.rem_euclid(3) * 3 + l.rem_euclid(3)) as usize
    }

    /// Exponents (i, j, l) of element `a` of the Heisenberg group.
    pub fn heis3_exponents(a: usize) -> (u32, u32, u32) {
        ((a / 9) as u32, (a / 3 % 3) as u32, (a % 3) as u32)
    }

    /// Direct product of cyclic groups Z_{d1} × Z_{d2} × ….
    pub fn abelian(invariants: &[u32]) -> FiniteGroup {
        assert!(!invariants.is_empty());
        let n: usize = invariants.iter().map(|&d| d as usize).product();
        // Mixed-radix encoding, most significant factor first.
        let encode = |tuple: &[u32]| -> usize {
            let mut v = 0usize;
            for (t, &d) in tuple.iter().zip(invariants) {
                v = v * d as usize + (*t % d) as usize;
            }
            v
        };
        let decode = |mut v: usize| -> Vec<u32> {
            let mut t = vec![0u32; invariants.len()];
            for (slot, &d) in t.iter_mut().zip(invariants).rev() {
                *slot = (v % d as usize) as u32;
                v /= d as usize;
            }
            t
        };
        let mut mul = vec![0u16; n * n];
        for a in 0..n {
            let ta = decode(a);
            for b in 0..n {
                let tb = decode(b);
                let sum: Vec<u32> = ta
                    .iter()
                    .zip(&tb)
                    .zip(invariants)
                    .map(|((&x, &y), &d)| (x + y) % d)
                    .collect();
                mul[a * n + b] = encode(&sum) as u16;
            }
        }
        let mut generators = Vec::new();
        for k in 0..invariants.len() {
            let mut t = vec![0u32; invariants.len()];
            t[k] = 1;
            generators.push(encode(&t));
        }
        let name = invariants
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join("x");
        FiniteGroup::from_table(&name, GroupFamily::Abelian(invariants.to_vec()), n, mul, generators)
    }

    /// Tuple coordinates of element `a` of an abelian group.
    pub fn abelian_coords(&self, a: usize) -> Vec<u32> {
        let GroupFamily::Abelian(invariants) = &self.family else {
            panic!("not an abelian-family group");
        };
        let mut v = a;
        let mut t = vec![0u32; invariants.len()];
        for (slot, &d) in t.iter_mut().zip(invariants).rev() {
            *slot = (v % d as usize) as u32;
            v /= d as usize;
        }
        t
    }

    /// A group from a raw multiplication table (identity at index 0).
    pub fn custom(name: &str, n: usize, mul: Vec<u16>, generators: Vec<usize>) -> FiniteGroup {
        FiniteGroup::from_table(name, GroupFamily::Custom, n, mul, generators)
    }

    /// Dihedral group of order 2n: element 2i + j is rⁱsʲ with srs = r⁻¹.
    pub fn dihedral(half: u32) -> FiniteGroup {
        let m = half as i64;
        let n = 2 * half as usize;
        let idx = |i: i64, j: i64| (i.rem_euclid(m) * 2 + j.rem_euclid(2)) as usize;
        let mut mul = vec![0u16; n * n];
        for i in 0..m {
            for j in 0..2i64 {
                for i2 in 0..m {
                    for j2 in 0..2i64 {
                        // r^i s^j · r^i2 s^j2 = r^(i + i2·(-1)^j) s^(j+j2)
                        let sign = if j == 0 { 1 } else { -1 };
                        mul[idx(i, j) * n + idx(i2, j2)] = idx(i + sign * i2, j + j2) as u16;
                    }
                }
            }
        }
        FiniteGroup::from_table(
            &format!("D{half}"),
            GroupFamily::Dihedral(half),
            n,
            mul,
            vec![2, 1],
        )
    }
}

impl fmt::Display for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.n)
    }
}

/// The screening catalog: both rigid holonomy candidates plus the small
/// abelian and dihedral groups the non-existence argument eliminates.
pub fn make_catalog() -> Vec<FiniteGroup> {
    let mut groups = vec![FiniteGroup::abelian(&[3, 3]), FiniteGroup::heis3()];
    groups.push(FiniteGroup::dihedral(4));
    for n in 2..=12 {
        groups.push(FiniteGroup::abelian(&[n]));
    }
    for d1 in 2..=12u32 {
        for d2 in d1..=12 {
            if d2 % d1 == 0 && !(d1 == 3 && d2 == 3) {
                groups.push(FiniteGroup::abelian(&[d1, d2]));
            }
        }
    }
    groups
}

/// An automorphism, stored as the induced permutation of element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Automorphism {
    pub perm: Vec<u16>,
}

impl Automorphism {
    pub fn apply(&self, a: usize) -> usize {
        self.perm[a] as usize
    }

    pub fn identity(n: usize) -> Self {
        Automorphism {
            perm: (0..n as u16).collect(),
        }
    }

    /// self ∘ other.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            perm: other.perm.iter().map(|&x| self.perm[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        let mut perm = vec![0u16; self.perm.len()];
        for (i, &x) in self.perm.iter().enumerate() {
            perm[x as usize] = i as u16;
        }
        Automorphism { perm }
    }
}

/// The full automorphism group of `g`, by enumerating images of the fixed
/// generating tuple among elements of matching order and checking the
/// induced map on the whole multiplication table.
pub fn automorphisms(g: &FiniteGroup) -> Vec<Automorphism> {
    let n = g.order();
    let gens = &g.generators;
    let mut out = Vec::new();
    let mut images = vec![0usize; gens.len()];
    search_autos(g, gens, 0, &mut images, &mut out);
    debug_assert!(out.contains(&Automorphism::identity(n)));
    out
}

fn search_autos(
    g: &FiniteGroup,
    gens: &[usize],
    depth: usize,
    images: &mut Vec<usize>,
    out: &mut Vec<Automorphism>,
) {
    if depth == gens.len() {
        if let Some(phi) = build_hom(g, gens, images) {
            out.push(phi);
        }
        return;
    }
    let want = g.element_order(gens[depth]);
    for cand in 0..g.order() {
        if g.element_order(cand) == want {
            images[depth] = cand;
            search_autos(g, gens, depth + 1, images, out);
        }
    }
}

/// Extend generator images to a map on all of G by breadth-first closure,
/// then verify it is a bijective homomorphism.
fn build_hom(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> Option<Automorphism> {
    let n = g.order();
    let mut perm = vec![u16::MAX; n];
    perm[0] = 0;
    let mut queue = vec![0usize];
    while let Some(x) = queue.pop() {
        for (&s, &si) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(perm[x] as usize, si) as u16;
            if perm[y] == u16::MAX {
                perm[y] = fy;
                queue.push(y);
            } else if perm[y] != fy {
                return None;
            }
        }
    }
    // Bijectivity.
    let mut seen = vec![false; n];
    for &p in &perm {
        if p == u16::MAX || seen[p as usize] {
            return None;
        }
        seen[p as usize] = true;
    }
    // φ(x·s) = φ(x)·φ(s) for all x and generators s suffices: every element
    // is a word in the generators, so multiplicativity follows by induction.
    for x in 0..n {
        for (&s, &si) in gens.iter().zip(images) {
            if perm[g.mul(x, s)] as usize != g.mul(perm[x] as usize, si) {
                return None;
            }
        }
    }
    Some(Automorphism { perm })
}
