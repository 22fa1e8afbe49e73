//! Rational polyhedral cones: generator description to facet description,
//! and the faces of the resulting cone.
//!
//! Facets are the extreme rays of the dual cone `{ y : g·y ≥ 0 for all g }`,
//! computed with the double description method: start from the simplicial
//! cone cut out by `n` independent generators and add the remaining
//! generators as constraints one at a time, combining adjacent rays across
//! each new hyperplane.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{
    integer_kernel, primitive, rank_of_rows, rank_of_rows_capped, Int, IntMat, IntVec,
    PrimitiveForm,
};

#[derive(Clone, Debug)]
pub struct Cone {
    ambient_dim: usize,
    generators: IntMat,
    facets: Vec<PrimitiveForm>,
    /// For each facet, the sorted indices of generators on it.
    incidence: Vec<Vec<usize>>,
}

/// A nonempty face, identified by the set of all facets containing it.
#[derive(Clone, Debug)]
pub struct Face {
    facet_set: Vec<usize>,
    generator_set: Vec<usize>,
    dim: usize,
    codim: usize,
}

impl Face {
    pub fn facet_set(&self) -> &[usize] {
        &self.facet_set
    }

    pub fn generator_set(&self) -> &[usize] {
        &self.generator_set
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn codim(&self) -> usize {
        self.codim
    }
}

impl PartialEq for Face {
    fn eq(&self, other: &Self) -> bool {
        self.facet_set == other.facet_set
    }
}

impl Eq for Face {}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.codim, &self.facet_set).cmp(&(other.codim, &other.facet_set))
    }
}

struct Ray {
    dir: IntVec,
    /// Bitset over generator indices already processed that vanish on `dir`.
    zeros: Vec<u64>,
}

fn bit_set(bits: &mut [u64], i: usize) {
    bits[i / 64] |= 1 << (i % 64);
}

fn bits_and(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x & y).collect()
}

fn bits_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x & !y == 0)
}

fn bits_count(a: &[u64]) -> usize {
    a.iter().map(|x| x.count_ones() as usize).sum()
}

/// Facet ordering: fewer nonzero coefficients first, then descending
/// lexicographic, so coordinate forms come out as `e_1, e_2, …`.
fn facet_order(a: &PrimitiveForm, b: &PrimitiveForm) -> std::cmp::Ordering {
    let support = |f: &PrimitiveForm| f.coeffs().iter().filter(|x| !x.is_zero()).count();
    support(a)
        .cmp(&support(b))
        .then_with(|| b.coeffs().cmp(a.coeffs()))
}

/// One double description step: intersects the dual cone described by
/// `rays` with the half-space `{ x : g·x ≥ 0 }`.
fn insert_generator(rays: Vec<Ray>, g: &IntVec, g_idx: usize, n: usize) -> Vec<Ray> {
    let values: Vec<Int> = rays.iter().map(|r| g.dot(&r.dir)).collect();
    let pos: Vec<usize> = (0..rays.len())
        .filter(|&i| values[i].is_positive())
        .collect();
    let neg: Vec<usize> = (0..rays.len())
        .filter(|&i| values[i].is_negative())
        .collect();

    let mut fresh: Vec<Ray> = Vec::new();
    for &p in &pos {
        for &q in &neg {
            let common = bits_and(&rays[p].zeros, &rays[q].zeros);
            if bits_count(&common) + 2 < n {
                continue;
            }
            let adjacent = rays
                .iter()
                .enumerate()
                .all(|(t, r)| t == p || t == q || !bits_subset(&common, &r.zeros));
            if !adjacent {
                continue;
            }
            let combined = rays[q]
                .dir
                .scale(&values[p])
                .sub(&rays[p].dir.scale(&values[q]));
            let dir = primitive(&combined)
                .expect("adjacent rays are not antiparallel in a pointed cone")
                .coeffs()
                .clone();
            let mut zeros = common;
            bit_set(&mut zeros, g_idx);
            fresh.push(Ray { dir, zeros });
        }
    }

    let mut kept: Vec<Ray> = Vec::with_capacity(rays.len() + fresh.len());
    for (mut r, v) in rays.into_iter().zip(values) {
        if v.is_negative() {
            continue;
        }
        if v.is_zero() {
            bit_set(&mut r.zeros, g_idx);
        }
        kept.push(r);
    }
    kept.extend(fresh);
    kept
}

/// Irredundant inward primitive facet forms of `pos(gens)`.
pub fn cone_from_generators(gens: &IntMat) -> Result<Cone> {
    let n = gens.ncols();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(i) = gens.rows().iter().position(IntVec::is_zero) {
        return Err(Error::ZeroGenerator(i));
    }
    let rank = rank_of_rows(gens.rows(), n);
    if rank < n {
        return Err(Error::FullDimRequired { rank, dim: n });
    }

    let m = gens.nrows();
    let words = m.div_ceil(64);

    // greedy choice of n independent generators
    let mut basis: Vec<usize> = Vec::with_capacity(n);
    for i in 0..m {
        let trial: Vec<&IntVec> = basis
            .iter()
            .map(|&j| gens.row(j))
            .chain(std::iter::once(gens.row(i)))
            .collect();
        if rank_of_rows(trial, n) == basis.len() + 1 {
            basis.push(i);
            if basis.len() == n {
                break;
            }
        }
    }

    let mut rays: Vec<Ray> = basis
        .iter()
        .map(|&i| {
            let others: Vec<&IntVec> = basis
                .iter()
                .filter(|&&j| j != i)
                .map(|&j| gens.row(j))
                .collect();
            let ker = integer_kernel(&others, n);
            debug_assert_eq!(ker.rank(), 1);
            let mut dir = ker.hnf_rows()[0].clone();
            if gens.row(i).dot(&dir).is_negative() {
                dir = dir.scale(&Int::from(-1));
            }
            let mut zeros = vec![0u64; words];
            for &j in basis.iter().filter(|&&j| j != i) {
                bit_set(&mut zeros, j);
            }
            Ray { dir, zeros }
        })
        .collect();

    let mut inserted = vec![false; m];
    for &i in &basis {
        inserted[i] = true;
    }

    // Each round inserts, for every ray some generator is strictly negative
    // on, the generator most negative on it. Generators never picked lie in
    // the cone of the inserted ones and do not affect the facets.
    loop {
        let mut picks: Vec<usize> = Vec::new();
        for r in &rays {
            let mut worst: Option<(Int, usize)> = None;
            for (i, g) in gens.rows().iter().enumerate() {
                if inserted[i] {
                    continue;
                }
                let v = g.dot(&r.dir);
                if v.is_negative() && worst.as_ref().is_none_or(|(w, _)| &v < w) {
                    worst = Some((v, i));
                }
            }
            if let Some((_, i)) = worst {
                picks.push(i);
            }
        }
        if picks.is_empty() {
            break;
        }
        picks.sort_unstable();
        picks.dedup();
        for g_idx in picks {
            inserted[g_idx] = true;
            rays = insert_generator(rays, gens.row(g_idx), g_idx, n);
        }
    }

    let mut facets: Vec<PrimitiveForm> = rays
        .into_iter()
        .map(|r| primitive(&r.dir).expect("rays are nonzero"))
        .collect();
    facets.sort_by(facet_order);
    facets.dedup();

    let incidence: Vec<Vec<usize>> = facets
        .iter()
        .map(|f| {
            (0..m)
                .filter(|&i| {
                    let v = f.eval(gens.row(i));
                    assert!(!v.is_negative(), "facet {f} negative on generator {i}");
                    v.is_zero()
                })
                .collect()
        })
        .collect();

    for (f, inc) in facets.iter().zip(&incidence) {
        // the incidence set lies on a hyperplane, so its rank is at most n - 1
        let r = rank_of_rows_capped(inc.iter().map(|&i| gens.row(i)), n, n - 1);
        assert_eq!(r + 1, n, "facet {f} is redundant");
    }

    Ok(Cone {
        ambient_dim: n,
        generators: gens.clone(),
        facets,
        incidence,
    })
}

impl Cone {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn generators(&self) -> &IntMat {
        &self.generators
    }

    pub fn facets(&self) -> &[PrimitiveForm] {
        &self.facets
    }

    pub fn incidence(&self) -> &[Vec<usize>] {
        &self.incidence
    }

    /// Whether a point satisfies every facet inequality.
    pub fn contains_point(&self, v: &IntVec) -> bool {
        self.facets.iter().all(|f| !f.eval(v).is_negative())
    }

    fn face_from_generator_set(&self, generator_set: Vec<usize>) -> Face {
        let facet_set: Vec<usize> = (0..self.facets.len())
            .filter(|&i| is_sorted_subset(&generator_set, &self.incidence[i]))
            .collect();
        // dim F = n − rank of the facet forms through F
        let normals = rank_of_rows(
            facet_set.iter().map(|&i| self.facets[i].coeffs()),
            self.ambient_dim,
        );
        let dim = rank_of_rows_capped(
            generator_set.iter().map(|&i| self.generators.row(i)),
            self.ambient_dim,
            self.ambient_dim - normals,
        );
        Face {
            facet_set,
            generator_set,
            dim,
            codim: self.ambient_dim - dim,
        }
    }

    pub fn whole(&self) -> Face {
        self.face_from_generator_set((0..self.generators.nrows()).collect())
    }

    /// All nonempty faces of codimension at most `max_codim`, sorted by
    /// codimension and then by facet set.
    pub fn faces_up_to_codim(&self, max_codim: usize) -> Vec<Face> {
        let max_codim = max_codim.min(self.ambient_dim);
        let mut found: BTreeMap<(usize, Vec<usize>), Face> = BTreeMap::new();
        let whole = self.whole();
        found.insert((whole.codim, whole.facet_set.clone()), whole);

        for level in 0..max_codim {
            let parents: Vec<Face> = found
                .values()
                .filter(|f| f.codim == level)
                .cloned()
                .collect();
            for parent in &parents {
                for (i, inc) in self.incidence.iter().enumerate() {
                    if parent.facet_set.binary_search(&i).is_ok() {
                        continue;
                    }
                    let gens = sorted_intersection(&parent.generator_set, inc);
                    let face = self.face_from_generator_set(gens);
                    if face.codim <= max_codim {
                        found
                            .entry((face.codim, face.facet_set.clone()))
                            .or_insert(face);
                    }
                }
            }
        }
        found.into_values().collect()
    }

    /// The face cut out by the listed facets. Its facet set is closed, so it
    /// may contain more facets than were asked for.
    pub fn face_intersection_of(&self, facet_indices: &[usize]) -> Face {
        let mut gens: Vec<usize> = (0..self.generators.nrows()).collect();
        for &i in facet_indices {
            gens = sorted_intersection(&gens, &self.incidence[i]);
        }
        self.face_from_generator_set(gens)
    }
}

/// Free-function form of [`Cone::faces_up_to_codim`].
pub fn faces_up_to_codim(c: &Cone, max_codim: usize) -> Vec<Face> {
    c.faces_up_to_codim(max_codim)
}

pub fn face_intersection_of(c: &Cone, facet_indices: &[usize]) -> Face {
    c.face_intersection_of(facet_indices)
}

fn sorted_intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn is_sorted_subset(a: &[usize], b: &[usize]) -> bool {
    let mut j = 0;
    for x in a {
        while j < b.len() && b[j] < *x {
            j += 1;
        }
        if j == b.len() || b[j] != *x {
            return false;
        }
        j += 1;
    }
    true
}
