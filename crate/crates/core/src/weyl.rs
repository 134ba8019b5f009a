//! Weyl group enumeration, weight orbits, stabilizers and coset systems.
//!
//! Group elements are integer matrices acting on the right of weight row
//! vectors. An element is identified by its image of `ρ = (1, …, 1)`, which
//! has trivial stabilizer.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::root::{RootDatum, Weight};

/// Groups up to this order get a full multiplication table.
pub const PRODUCT_TABLE_CAP: usize = 2_048;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    pub index: usize,
    /// Row-major `n×n` matrix.
    pub matrix: Vec<i64>,
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    matrices: Vec<Vec<i64>>,
    rho_images: Vec<Vec<i64>>,
    lookup: BTreeMap<Vec<i64>, u32>,
    /// BFS word of each element: `w = s_{a1} s_{a2} … s_{ak}` (0-based generators).
    words: Vec<Vec<u8>>,
    /// `right[w * n + i] = index(w · s_i)`.
    right: Vec<u32>,
    inverse: Vec<u32>,
    product: Option<Vec<u32>>,
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x == 0 {
                continue;
            }
            for c in 0..n {
                out[r * n + c] += x * b[k * n + c];
            }
        }
    }
    out
}

/// Enumerates W by breadth-first closure over the simple reflections.
/// Elements are ordered by word length, then lexicographically by matrix.
pub fn enumerate_group(datum: &RootDatum, max_order: u64) -> Result<WeylGroup> {
    let order = datum.weyl_order();
    if order > max_order as u128 {
        return Err(Error::ResourceLimit { what: "Weyl group", size: order, limit: max_order as u128 });
    }
    let n = datum.rank();
    let gens: Vec<Vec<i64>> = (0..n).map(|i| datum.reflection_flat(i)).collect();
    let identity: Vec<i64> = (0..n * n).map(|k| i64::from(k / n == k % n)).collect();
    let rho = vec![1i64; n];

    let mut matrices = vec![identity];
    let mut rho_images = vec![rho.clone()];
    let mut words: Vec<Vec<u8>> = vec![Vec::new()];
    let mut lookup = BTreeMap::new();
    lookup.insert(rho, 0u32);

    let mut layer = vec![0usize];
    while !layer.is_empty() {
        let mut next: BTreeMap<Vec<i64>, (Vec<i64>, Vec<u8>)> = BTreeMap::new();
        for &w in &layer {
            for (i, g) in gens.iter().enumerate() {
                let mut key = rho_images[w].clone();
                datum.reflect(&mut key, i)?;
                if lookup.contains_key(&key) {
                    continue;
                }
                let m = mat_mul(&matrices[w], g, n);
                next.entry(m).or_insert_with(|| {
                    let mut word = words[w].clone();
                    word.push(i as u8);
                    (key, word)
                });
            }
        }
        layer.clear();
        for (m, (key, word)) in next {
            let idx = matrices.len();
            lookup.insert(key.clone(), idx as u32);
            matrices.push(m);
            rho_images.push(key);
            words.push(word);
            layer.push(idx);
        }
    }
    debug_assert_eq!(matrices.len() as u128, order);

    let size = matrices.len();
    let mut right = vec![0u32; size * n];
    for w in 0..size {
        for i in 0..n {
            let mut key = rho_images[w].clone();
            datum.reflect(&mut key, i)?;
            right[w * n + i] = lookup[&key];
        }
    }
    let mut group = WeylGroup { rank: n, matrices, rho_images, lookup, words, right, inverse: Vec::new(), product: None };
    group.inverse = (0..size)
        .map(|w| {
            let mut x = 0usize;
            for &g in group.words[w].iter().rev() {
                x = group.right[x * n + g as usize] as usize;
            }
            x as u32
        })
        .collect();
    if size <= PRODUCT_TABLE_CAP {
        group.build_product_table();
    }
    Ok(group)
}

impl WeylGroup {
    pub fn order(&self) -> usize {
        self.matrices.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn matrix(&self, w: usize) -> &[i64] {
        &self.matrices[w]
    }

    pub fn element(&self, w: usize) -> WeylElement {
        WeylElement { index: w, matrix: self.matrices[w].clone() }
    }

    pub fn word(&self, w: usize) -> &[u8] {
        &self.words[w]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.inverse[w] as usize
    }

    pub fn has_product_table(&self) -> bool {
        self.product.is_some()
    }

    pub fn build_product_table(&mut self) {
        let size = self.order();
        let n = self.rank;
        let parents: Vec<(usize, usize)> = (0..size)
            .map(|h| match self.words[h].last() {
                Some(&last) => (self.parent(h), last as usize),
                None => (0, 0),
            })
            .collect();
        let mut table = vec![0u32; size * size];
        for g in 0..size {
            table[g * size] = g as u32;
            // BFS order guarantees the parent of h (h minus its last letter)
            // precedes h.
            for h in 1..size {
                let (parent, last) = parents[h];
                let gp = table[g * size + parent] as usize;
                table[g * size + h] = self.right[gp * n + last];
            }
        }
        self.product = Some(table);
    }

    fn parent(&self, h: usize) -> usize {
        let word = &self.words[h];
        let mut x = 0usize;
        for &g in &word[..word.len() - 1] {
            x = self.right[x * self.rank + g as usize] as usize;
        }
        x
    }

    /// Index of `g·h`.
    pub fn product(&self, g: usize, h: usize) -> usize {
        if let Some(t) = &self.product {
            return t[g * self.order() + h] as usize;
        }
        let mut x = g;
        for &s in &self.words[h] {
            x = self.right[x * self.rank + s as usize] as usize;
        }
        x
    }

    pub fn times_generator(&self, g: usize, i: usize) -> usize {
        self.right[g * self.rank + i] as usize
    }

    /// Element index from a word in the simple reflections (0-based letters).
    pub fn from_word(&self, word: &[u8]) -> usize {
        word.iter().fold(0usize, |x, &s| self.right[x * self.rank + s as usize] as usize)
    }

    /// Index of the element with the given matrix, if it is in the group.
    pub fn index_of_matrix(&self, m: &[i64]) -> Option<usize> {
        let n = self.rank;
        let key: Vec<i64> = (0..n).map(|c| (0..n).map(|r| m[r * n + c]).sum()).collect();
        let idx = *self.lookup.get(&key)? as usize;
        (self.matrices[idx] == m).then_some(idx)
    }

    /// `v · M_w` for an integer row vector.
    pub fn act_int(&self, w: usize, v: &[i64]) -> Vec<i64> {
        let n = self.rank;
        let m = &self.matrices[w];
        (0..n).map(|c| (0..n).map(|r| v[r] * m[r * n + c]).sum()).collect()
    }

    pub fn act(&self, w: usize, lambda: &Weight) -> Weight {
        lambda.act(&self.matrices[w])
    }

    pub fn trace(&self, w: usize) -> i64 {
        (0..self.rank).map(|i| self.matrices[w][i * self.rank + i]).sum()
    }

    /// Determinant by exact integer elimination (Bareiss).
    pub fn determinant(&self, w: usize) -> i64 {
        let n = self.rank;
        let mut m: Vec<i128> = self.matrices[w].iter().map(|&x| x as i128).collect();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n {
            if m[k * n + k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| m[r * n + k] != 0) else { return 0 };
                for c in 0..n {
                    m.swap(k * n + c, p * n + c);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
                }
            }
            prev = m[k * n + k];
        }
        (sign * m[n * n - 1]) as i64
    }

    pub fn rho_image(&self, w: usize) -> &[i64] {
        &self.rho_images[w]
    }

    /// Elements fixing `lambda`.
    pub fn stabilizer(&self, lambda: &Weight) -> Result<Vec<usize>> {
        let (v, _) = lambda.to_scaled()?;
        Ok((0..self.order()).filter(|&w| self.act_int(w, &v) == v).collect())
    }
}

/// Orbit `λ·W` with one witness word per point.
#[derive(Debug, Clone)]
pub struct WeightOrbit {
    seed: Weight,
    den: i64,
    points: Vec<Vec<i64>>,
    witnesses: Vec<Vec<u8>>,
    lookup: BTreeMap<Vec<i64>, usize>,
}

/// Breadth-first orbit of `lambda` under the simple reflections. Does not
/// need the group to be enumerated.
pub fn weight_orbit(lambda: &Weight, datum: &RootDatum) -> Result<WeightOrbit> {
    weight_orbit_capped(lambda, datum, usize::MAX)
}

pub fn weight_orbit_capped(lambda: &Weight, datum: &RootDatum, max_size: usize) -> Result<WeightOrbit> {
    datum.check_weight(lambda)?;
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let (seed, den) = lambda.to_scaled()?;
    let n = datum.rank();
    let mut points = vec![seed.clone()];
    let mut witnesses: Vec<Vec<u8>> = vec![Vec::new()];
    let mut lookup = BTreeMap::new();
    lookup.insert(seed, 0usize);
    let mut head = 0;
    while head < points.len() {
        for i in 0..n {
            if points[head][i] == 0 {
                continue;
            }
            let mut p = points[head].clone();
            datum.reflect(&mut p, i)?;
            if lookup.contains_key(&p) {
                continue;
            }
            if points.len() >= max_size {
                return Err(Error::ResourceLimit {
                    what: "weight orbit",
                    size: datum.weyl_order(),
                    limit: max_size as u128,
                });
            }
            let mut word = witnesses[head].clone();
            word.push(i as u8);
            lookup.insert(p.clone(), points.len());
            points.push(p);
            witnesses.push(word);
        }
        head += 1;
    }
    Ok(WeightOrbit { seed: lambda.clone(), den, points, witnesses, lookup })
}

impl WeightOrbit {
    pub fn seed(&self) -> &Weight {
        &self.seed
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, i: usize) -> Weight {
        Weight::from_scaled(&self.points[i], self.den)
    }

    pub fn points(&self) -> Vec<Weight> {
        (0..self.len()).map(|i| self.point(i)).collect()
    }

    /// Integer numerators of point `i`; the point is `int_point(i) / denominator()`.
    pub fn int_point(&self, i: usize) -> &[i64] {
        &self.points[i]
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn index_of_int(&self, v: &[i64]) -> Option<usize> {
        self.lookup.get(v).copied()
    }

    pub fn index_of(&self, w: &Weight) -> Option<usize> {
        let scaled: Option<Vec<i64>> = w
            .coords()
            .iter()
            .map(|c| {
                let x = c * num_bigint::BigInt::from(self.den);
                if x.is_integer() { num_traits::ToPrimitive::to_i64(x.numer()) } else { None }
            })
            .collect();
        self.index_of_int(&scaled?)
    }

    /// Word `s_{a1} … s_{ak}` with `seed · s_{a1} ⋯ s_{ak} = point(i)`.
    pub fn witness_word(&self, i: usize) -> &[u8] {
        &self.witnesses[i]
    }

    /// Group index of the witness of point `i`.
    pub fn witness(&self, i: usize, group: &WeylGroup) -> usize {
        group.from_word(&self.witnesses[i])
    }

    /// Exact test that the points sum to the zero weight.
    pub fn sums_to_zero(&self) -> bool {
        let n = self.seed.dim();
        (0..n).all(|c| self.points.iter().map(|p| p[c] as i128).sum::<i128>() == 0)
    }

    /// The same orbit with points listed in the order `perm` (new i ← old perm[i]).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.len());
        let points: Vec<Vec<i64>> = perm.iter().map(|&p| self.points[p].clone()).collect();
        let witnesses = perm.iter().map(|&p| self.witnesses[p].clone()).collect();
        let lookup = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        WeightOrbit { seed: self.seed.clone(), den: self.den, points, witnesses, lookup }
    }
}

/// `|Stab(λ)| = |W| / |λ·W|`, using the closed-form group order.
pub fn stabilizer_order(lambda: &Weight, datum: &RootDatum) -> Result<u128> {
    let orbit = weight_orbit(lambda, datum)?;
    Ok(datum.weyl_order() / orbit.len() as u128)
}

/// Left coset representatives `g_i` of `H = Stab(λ)` with `W = ⊔ g_i H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetSystem {
    pub subgroup_order: usize,
    /// `representatives[i]` is the coset matched with orbit point `i`, via
    /// `g H ↔ λ g⁻¹`.
    pub representatives: Vec<usize>,
}

pub fn coset_representatives(lambda: &Weight, datum: &RootDatum, group: &WeylGroup) -> Result<CosetSystem> {
    let orbit = weight_orbit(lambda, datum)?;
    Ok(coset_system_for(&orbit, group))
}

pub(crate) fn coset_system_for(orbit: &WeightOrbit, group: &WeylGroup) -> CosetSystem {
    // λ·wit(p) = p, so wit(p)⁻¹ H ↔ λ·wit(p) = p.
    let representatives = (0..orbit.len()).map(|i| group.inverse(orbit.witness(i, group))).collect();
    CosetSystem { subgroup_order: group.order() / orbit.len(), representatives }
}

impl CosetSystem {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }
}

/// For each group element `w`, the orbit index of `λ·w⁻¹`, i.e. the label of
/// the left coset `w·Stab(λ)`.
pub fn coset_labels(orbit: &WeightOrbit, group: &WeylGroup) -> Vec<usize> {
    let seed = orbit.int_point(0);
    (0..group.order())
        .map(|w| {
            let p = group.act_int(group.inverse(w), seed);
            orbit.index_of_int(&p).expect("image of a point stays in the orbit")
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root::{Family, LieType};

    fn datum(f: Family, r: usize) -> RootDatum {
        RootDatum::new(LieType::new(f, r).unwrap())
    }

    #[test]
    fn orders_match_closed_forms() {
        let cases = [
            (Family::A, 1, 2),
            (Family::A, 2, 6),
            (Family::A, 4, 120),
            (Family::B, 2, 8),
            (Family::B, 3, 48),
            (Family::C, 3, 48),
            (Family::D, 4, 192),
            (Family::G, 2, 12),
            (Family::F, 4, 1152),
        ];
        for (f, r, order) in cases {
            let d = datum(f, r);
            let g = enumerate_group(&d, 10_000).unwrap();
            assert_eq!(g.order(), order, "{f:?}{r}");
            assert_eq!(d.weyl_order(), order as u128);
        }
    }

    #[test]
    fn group_cap_is_enforced() {
        let e6 = datum(Family::E, 6);
        assert!(matches!(enumerate_group(&e6, 10_000), Err(Error::ResourceLimit { .. })));
    }

    #[test]
    fn closure_inverse_and_products() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::G, 2)] {
            let d = datum(f, r);
            let g = enumerate_group(&d, 10_000).unwrap();
            let n = d.rank();
            for a in 0..g.order() {
                assert_eq!(g.product(a, g.inverse(a)), 0);
                let det = g.determinant(a);
                assert!(det == 1 || det == -1);
                assert_eq!(det, if g.word(a).len() % 2 == 0 { 1 } else { -1 });
                for b in 0..g.order() {
                    let m = mat_mul(g.matrix(a), g.matrix(b), n);
                    assert_eq!(g.index_of_matrix(&m), Some(g.product(a, b)));
                }
            }
        }
    }

    #[test]
    fn product_walk_agrees_with_table() {
        let d = datum(Family::B, 3);
        let with = enumerate_group(&d, 10_000).unwrap();
        let mut without = with.clone();
        without.product = None;
        for a in 0..with.order() {
            for b in 0..with.order() {
                assert_eq!(with.product(a, b), without.product(a, b));
            }
        }
    }

    #[test]
    fn deterministic_ordering() {
        let d = datum(Family::A, 2);
        let g = enumerate_group(&d, 10).unwrap();
        assert_eq!(g.matrix(0), &[1, 0, 0, 1]);
        // Layer 1 sorted lexicographically: s_1 = [-1,1;0,1], s_2 = [1,0;1,-1].
        assert_eq!(g.matrix(1), &[-1, 1, 0, 1]);
        assert_eq!(g.matrix(2), &[1, 0, 1, -1]);
        let again = enumerate_group(&d, 10).unwrap();
        for w in 0..6 {
            assert_eq!(g.matrix(w), again.matrix(w));
        }
    }

    #[test]
    fn orbit_examples() {
        let a2 = datum(Family::A, 2);
        let o = weight_orbit(&Weight::from_ints(&[1, 0]), &a2).unwrap();
        assert_eq!(
            o.points(),
            vec![Weight::from_ints(&[1, 0]), Weight::from_ints(&[-1, 1]), Weight::from_ints(&[0, -1])]
        );
        let b2 = datum(Family::B, 2);
        assert_eq!(weight_orbit(&Weight::from_ints(&[0, 1]), &b2).unwrap().len(), 4);
        let a3 = datum(Family::A, 3);
        let w2 = Weight::from_ints(&[0, 1, 0]);
        assert_eq!(weight_orbit(&w2, &a3).unwrap().len(), 6);
        assert_eq!(stabilizer_order(&w2, &a3).unwrap(), 4);
        assert_eq!(weight_orbit(&Weight::zero(2), &a2).unwrap_err(), Error::ZeroWeight);
    }

    #[test]
    fn stabilizer_examples() {
        let b3 = datum(Family::B, 3);
        assert_eq!(stabilizer_order(&Weight::from_ints(&[0, 1, 0]), &b3).unwrap(), 4);
        let d4 = datum(Family::D, 4);
        assert_eq!(stabilizer_order(&Weight::from_ints(&[0, 0, 1, 0]), &d4).unwrap(), 24);
        let a3 = datum(Family::A, 3);
        assert_eq!(stabilizer_order(&Weight::from_ints(&[1, 1, 1]), &a3).unwrap(), 1);
        // brute-force stabilizer agrees
        let g = enumerate_group(&d4, 10_000).unwrap();
        assert_eq!(g.stabilizer(&Weight::from_ints(&[0, 0, 1, 0])).unwrap().len(), 24);
    }

    #[test]
    fn orbits_sum_to_zero_and_witnesses_are_consistent() {
        for (f, r) in [(Family::A, 3), (Family::B, 3), (Family::C, 3), (Family::D, 4), (Family::F, 4), (Family::G, 2)] {
            let d = datum(f, r);
            let g = enumerate_group(&d, 10_000).unwrap();
            for i in 1..=r {
                let lam = Weight::fundamental(i, r).unwrap();
                let o = weight_orbit(&lam, &d).unwrap();
                assert!(o.sums_to_zero());
                assert_eq!(g.order() % o.len(), 0);
                for p in 0..o.len() {
                    assert_eq!(g.act(o.witness(p, &g), &lam), o.point(p));
                }
                for w in [1, g.order() / 2, g.order() - 1] {
                    let moved = g.act(w, &o.point(o.len() - 1));
                    assert!(o.index_of(&moved).is_some());
                }
            }
        }
    }

    #[test]
    fn coset_systems() {
        let a2 = datum(Family::A, 2);
        let g = enumerate_group(&a2, 10).unwrap();
        let w1 = Weight::from_ints(&[1, 0]);
        let cs = coset_representatives(&w1, &a2, &g).unwrap();
        assert_eq!(cs.len(), 3);
        assert_eq!(cs.subgroup_order, 2);
        let a1 = datum(Family::A, 1);
        let g1 = enumerate_group(&a1, 10).unwrap();
        let cs1 = coset_representatives(&Weight::from_ints(&[1]), &a1, &g1).unwrap();
        assert_eq!(cs1.representatives, vec![0, 1]);

        // Every element lies in exactly one coset g_i H.
        for (f, r) in [(Family::B, 3), (Family::D, 4)] {
            let d = datum(f, r);
            let g = enumerate_group(&d, 10_000).unwrap();
            for i in 1..=r {
                let lam = Weight::fundamental(i, r).unwrap();
                let cs = coset_representatives(&lam, &d, &g).unwrap();
                let h = g.stabilizer(&lam).unwrap();
                let mut hit = vec![0u32; g.order()];
                for &rep in &cs.representatives {
                    for &x in &h {
                        hit[g.product(rep, x)] += 1;
                    }
                }
                assert!(hit.iter().all(|&c| c == 1));
                assert_eq!(cs.len() * cs.subgroup_order, g.order());
                let o = weight_orbit(&lam, &d).unwrap();
                let labels = coset_labels(&o, &g);
                for (p, &rep) in cs.representatives.iter().enumerate() {
                    assert_eq!(labels[rep], p);
                }
            }
        }
    }
}
