//! The face-by-face test for condition R_l.
//!
//! `K[S]` satisfies R_l exactly when every face `F` of codimension
//! `k ≤ l` lies on precisely `k` facets with forms `σ_1, …, σ_k`,
//! `grp(S ∩ F) = Z^n ∩ H_1 ∩ … ∩ H_k`, and there are `γ_1, …, γ_k ∈ S` with
//! `σ_i(γ_j) = δ_ij`.

use std::fmt;

use num_traits::{One, Zero};

use crate::cone::Face;
use crate::error::{Error, Result};
use crate::exactlin::{kernel_basis, lattice_equal, Int, IntVec, LatticeBasis, PrimitiveForm};
use crate::semigroup::AffineSemigroup;

/// Default multiplier for the witness search budget.
pub const DEFAULT_BOUND: u64 = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FailReason {
    /// The face lies on more facets than its codimension.
    FacetCount,
    /// `grp(S ∩ F)` is a proper sublattice of `Z^n ∩ H_1 ∩ … ∩ H_k`.
    GroupEquality,
    /// No element of `S` has the required facet values.
    NoWitness,
}

impl FailReason {
    pub fn as_str(self) -> &'static str {
        match self {
            FailReason::FacetCount => "facet_count",
            FailReason::GroupEquality => "group_equality",
            FailReason::NoWitness => "no_witness",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceStatus {
    Holds,
    Fails(FailReason),
    /// The witness search budget was too small to decide.
    Inconclusive {
        bound: u64,
    },
}

/// Tri-state outcome shared by whole-report verdicts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Holds,
    Fails,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FaceStatus {
    pub fn verdict(&self) -> Verdict {
        match self {
            FaceStatus::Holds => Verdict::Holds,
            FaceStatus::Fails(_) => Verdict::Fails,
            FaceStatus::Inconclusive { .. } => Verdict::Inconclusive,
        }
    }
}

#[derive(Clone, Debug)]
pub struct FaceVerdict {
    pub face: Face,
    /// Codimension of the face, equal to the height of its monomial prime.
    pub k: usize,
    /// Forms of every facet containing the face, in facet-index order.
    pub facet_forms: Vec<PrimitiveForm>,
    pub facet_count_ok: bool,
    pub group_ok: bool,
    pub face_group: LatticeBasis,
    pub kernel: LatticeBasis,
    /// `gamma_witnesses[j]` pairs with `facet_forms[j]`.
    pub gamma_witnesses: Option<Vec<IntVec>>,
    pub status: FaceStatus,
}

#[derive(Clone, Debug)]
pub struct SerreReport {
    pub ell: usize,
    pub bound: u64,
    pub verdicts: Vec<FaceVerdict>,
    pub overall: Verdict,
}

impl SerreReport {
    pub fn holds(&self) -> bool {
        self.overall == Verdict::Holds
    }
}

fn aggregate<'a>(statuses: impl IntoIterator<Item = &'a FaceStatus>) -> Verdict {
    let mut overall = Verdict::Holds;
    for s in statuses {
        match s.verdict() {
            Verdict::Fails => return Verdict::Fails,
            Verdict::Inconclusive => overall = Verdict::Inconclusive,
            Verdict::Holds => {}
        }
    }
    overall
}

/// Finds `γ_1, …, γ_k ∈ S` with `forms[i](γ_j) = δ_ij`.
///
/// Every facet form is nonnegative on every generator, so in any expression
/// of such a `γ_j` as a sum of generators exactly one summand has
/// `σ_j = 1` and all of its other facet values are 0. That summand is itself
/// a witness. The search therefore only has to look at generators, and it is
/// complete as soon as the budget `bound · max θ(g)` admits every generator,
/// i.e. for any `bound ≥ 1`. Among the candidates the one with least θ, then
/// lexicographically least, is reported.
pub fn find_gammas(
    s: &AffineSemigroup,
    forms: &[PrimitiveForm],
    bound: u64,
) -> Result<Option<Vec<IntVec>>> {
    s.require_pointed()?;
    let budget = s.max_generator_theta() * Int::from(bound);
    let gens = s.generators();
    let mut witnesses = Vec::with_capacity(forms.len());
    for j in 0..forms.len() {
        let best = (0..gens.nrows())
            .filter(|&g| s.generator_theta(g) <= &budget)
            .filter(|&g| {
                forms.iter().enumerate().all(|(i, f)| {
                    let val = f.eval(gens.row(g));
                    if i == j {
                        val.is_one()
                    } else {
                        val.is_zero()
                    }
                })
            })
            .min_by(|&a, &b| {
                s.generator_theta(a)
                    .cmp(s.generator_theta(b))
                    .then_with(|| gens.row(a).cmp(gens.row(b)))
            });
        match best {
            Some(g) => witnesses.push(gens.row(g).clone()),
            None => return Ok(None),
        }
    }
    for (j, gamma) in witnesses.iter().enumerate() {
        assert!(s.contains(gamma)?, "witness {gamma} not in S");
        for (i, f) in forms.iter().enumerate() {
            let expected = if i == j { Int::one() } else { Int::zero() };
            assert_eq!(f.eval(gamma), expected, "witness {gamma} against form {f}");
        }
    }
    Ok(Some(witnesses))
}

/// Runs the three checks for one face of positive codimension.
pub fn check_face(s: &AffineSemigroup, f: &Face, bound: u64) -> Result<FaceVerdict> {
    s.require_pointed()?;
    let k = f.codim();
    if k == 0 {
        return Err(Error::BadRange(
            "face must have positive codimension".into(),
        ));
    }
    let facets = s.cone().facets();
    let facet_forms: Vec<PrimitiveForm> =
        f.facet_set().iter().map(|&i| facets[i].clone()).collect();
    debug_assert!(facet_forms.len() >= k);

    let facet_count_ok = facet_forms.len() == k;
    let face_group = s.face_group(f);
    let kernel = kernel_basis(&facet_forms, s.ambient_dim())?;
    let group_ok = lattice_equal(&face_group, &kernel)?;

    let mut gamma_witnesses = None;
    let status = if !facet_count_ok {
        FaceStatus::Fails(FailReason::FacetCount)
    } else if !group_ok {
        FaceStatus::Fails(FailReason::GroupEquality)
    } else {
        gamma_witnesses = find_gammas(s, &facet_forms, bound)?;
        match (&gamma_witnesses, bound) {
            (Some(_), _) => FaceStatus::Holds,
            (None, 0) => FaceStatus::Inconclusive { bound },
            (None, _) => FaceStatus::Fails(FailReason::NoWitness),
        }
    };

    Ok(FaceVerdict {
        face: f.clone(),
        k,
        facet_forms,
        facet_count_ok,
        group_ok,
        face_group,
        kernel,
        gamma_witnesses,
        status,
    })
}

/// Checks every face of codimension `1..=ell`.
pub fn check_r(s: &AffineSemigroup, ell: usize, bound: u64) -> Result<SerreReport> {
    s.require_pointed()?;
    let n = s.ambient_dim();
    if ell == 0 || ell > n {
        return Err(Error::BadRange(format!("l = {ell} must lie in 1..={n}")));
    }
    let verdicts = s
        .cone()
        .faces_up_to_codim(ell)
        .iter()
        .filter(|f| f.codim() >= 1)
        .map(|f| check_face(s, f, bound))
        .collect::<Result<Vec<_>>>()?;
    let overall = aggregate(verdicts.iter().map(|v| &v.status));
    Ok(SerreReport {
        ell,
        bound,
        verdicts,
        overall,
    })
}

impl FaceVerdict {
    pub fn holds(&self) -> bool {
        self.status == FaceStatus::Holds
    }
}
