//! Affine semigroups `S ⊆ Z^n` with `grp(S) = Z^n`.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use crate::cone::{cone_from_generators, Cone, Face};
use crate::error::{Error, Result};
use crate::exactlin::{hnf, Int, IntMat, IntVec, LatticeBasis};

#[derive(Clone, Debug)]
pub struct AffineSemigroup {
    cone: Cone,
    /// Sum of all facet forms; strictly positive on nonzero elements of a
    /// pointed cone, so it bounds the length of any decomposition.
    theta: IntVec,
    pointed: bool,
    gen_theta: Vec<Int>,
    /// Facet values of each generator, indexed `[generator][facet]`.
    gen_facet_values: Vec<Vec<Int>>,
    /// Generator indices by descending θ, ties broken lexicographically.
    search_order: Vec<usize>,
}

/// Validates `grp(gens) = Z^n` and builds the cone.
pub fn new_semigroup(gens: &IntMat) -> Result<AffineSemigroup> {
    let n = gens.ncols();
    if gens.is_empty() {
        return Err(Error::EmptyGenerators);
    }
    if let Some(i) = gens.rows().iter().position(IntVec::is_zero) {
        return Err(Error::ZeroGenerator(i));
    }
    let group = hnf(gens);
    if !group.is_full() {
        return Err(Error::GroupNotFull {
            dim: n,
            rank: group.rank(),
            index: group.index(),
        });
    }
    let cone = cone_from_generators(gens)?;

    let theta = cone
        .facets()
        .iter()
        .fold(IntVec::zeros(n), |acc, f| acc.add(f.coeffs()));
    let gen_theta: Vec<Int> = gens.rows().iter().map(|g| theta.dot(g)).collect();
    let pointed = gen_theta.iter().all(Signed::is_positive);
    let gen_facet_values = gens
        .rows()
        .iter()
        .map(|g| cone.facets().iter().map(|f| f.eval(g)).collect())
        .collect();
    let mut search_order: Vec<usize> = (0..gens.nrows()).collect();
    search_order.sort_by(|&a, &b| {
        gen_theta[b]
            .cmp(&gen_theta[a])
            .then_with(|| gens.row(a).cmp(gens.row(b)))
    });

    Ok(AffineSemigroup {
        cone,
        theta,
        pointed,
        gen_theta,
        gen_facet_values,
        search_order,
    })
}

impl AffineSemigroup {
    pub fn ambient_dim(&self) -> usize {
        self.cone.ambient_dim()
    }

    pub fn generators(&self) -> &IntMat {
        self.cone.generators()
    }

    pub fn cone(&self) -> &Cone {
        &self.cone
    }

    pub fn theta(&self) -> &IntVec {
        &self.theta
    }

    pub fn is_pointed(&self) -> bool {
        self.pointed
    }

    pub fn max_generator_theta(&self) -> Int {
        self.gen_theta.iter().max().cloned().unwrap_or_default()
    }

    pub(crate) fn generator_theta(&self, i: usize) -> &Int {
        &self.gen_theta[i]
    }

    pub(crate) fn require_pointed(&self) -> Result<()> {
        if self.pointed {
            Ok(())
        } else {
            Err(Error::PointedRequired)
        }
    }

    fn check_dim(&self, v: &IntVec) -> Result<()> {
        if v.len() != self.ambient_dim() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim(),
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Exact membership `α ∈ S`.
    ///
    /// Depth-first search over multisets of generators (nondecreasing position
    /// in the search order). A branch is cut as soon as the remainder leaves
    /// the cone or its θ budget drops below the next generator's θ. Failed
    /// `(remainder, position)` pairs are remembered.
    pub fn contains(&self, alpha: &IntVec) -> Result<bool> {
        self.require_pointed()?;
        self.check_dim(alpha)?;
        let facet_values: Vec<Int> = self.cone.facets().iter().map(|f| f.eval(alpha)).collect();
        if facet_values.iter().any(Signed::is_negative) {
            return Ok(false);
        }
        let budget = self.theta.dot(alpha);
        let mut failed = HashSet::new();
        Ok(self.search(alpha, &facet_values, &budget, 0, &mut failed))
    }

    fn search(
        &self,
        rem: &IntVec,
        facet_values: &[Int],
        budget: &Int,
        start: usize,
        failed: &mut HashSet<(IntVec, usize)>,
    ) -> bool {
        if rem.is_zero() {
            return true;
        }
        if budget.is_zero() || failed.contains(&(rem.clone(), start)) {
            return false;
        }
        let gens = self.generators();
        for pos in start..self.search_order.len() {
            let gi = self.search_order[pos];
            if &self.gen_theta[gi] > budget {
                continue;
            }
            let next_values: Vec<Int> = facet_values
                .iter()
                .zip(&self.gen_facet_values[gi])
                .map(|(a, b)| a - b)
                .collect();
            if next_values.iter().any(Signed::is_negative) {
                continue;
            }
            let next = rem.sub(gens.row(gi));
            let next_budget = budget - &self.gen_theta[gi];
            if self.search(&next, &next_values, &next_budget, pos, failed) {
                return true;
            }
        }
        failed.insert((rem.clone(), start));
        false
    }

    /// Generators lying on every facet of `f`. These generate `S ∩ F`, since a
    /// sum of cone elements is on a face only when every summand is.
    pub fn generators_on_face(&self, f: &Face) -> IntMat {
        let gens = self.generators();
        let rows = gens
            .rows()
            .iter()
            .enumerate()
            .filter(|(i, _)| {
                f.facet_set()
                    .iter()
                    .all(|&fi| self.gen_facet_values[*i][fi].is_zero())
            })
            .map(|(_, g)| g.clone())
            .collect();
        IntMat::new(self.ambient_dim(), rows).expect("generator rows have ambient width")
    }

    /// `grp(S ∩ F)` in HNF.
    pub fn face_group(&self, f: &Face) -> LatticeBasis {
        hnf(&self.generators_on_face(f))
    }
}
