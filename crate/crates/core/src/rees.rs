//! Rees algebras of the ideals `I(λ)`.
//!
//! For `λ = (λ_1, …, λ_n)` put `L = lcm(λ)`, `ω_i = L / λ_i` and
//! `d = gcd(λ)`. The integral closure `I(λ)` of `(x_1^λ_1, …, x_n^λ_n)` is
//! spanned by the monomials `x^α` with `ω·α ≥ L`, and its Rees algebra is the
//! semigroup ring of `S(I)`, generated by `(e_i, 0)` and `(β, 1)` for the
//! minimal exponents `β` of `I(λ)`. The cone of `S(I)` has the `n + 1`
//! coordinate facets and one more facet `σ(α, t) = ω·α − L t`.
//!
//! On this family condition R_{l+1} (`l < n`) reduces to membership of
//! `L − ω_i` (removed `i`) and `L + 1` in the numerical semigroup generated
//! by the remaining `ω_j`.

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactlin::{primitive, Int, IntMat, IntVec, PrimitiveForm};
use crate::semigroup::{new_semigroup, AffineSemigroup};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSpec {
    lambda: Vec<Int>,
    l: Int,
    omega: Vec<Int>,
    d: Int,
}

impl LambdaSpec {
    pub fn from_u64s(lambda: &[u64]) -> Result<Self> {
        lambda_spec(&lambda.iter().map(|&x| Int::from(x)).collect::<Vec<_>>())
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[Int] {
        &self.lambda
    }

    /// `lcm(λ)`.
    pub fn l(&self) -> &Int {
        &self.l
    }

    pub fn omega(&self) -> &[Int] {
        &self.omega
    }

    /// `gcd(λ)`.
    pub fn d(&self) -> &Int {
        &self.d
    }

    /// The extra facet form `(ω, −L)` of the Rees cone.
    pub fn sigma(&self) -> PrimitiveForm {
        let mut coeffs = self.omega.clone();
        coeffs.push(-self.l.clone());
        primitive(&IntVec::new(coeffs)).expect("omega is positive")
    }
}

pub fn lambda_spec(lambda: &[Int]) -> Result<LambdaSpec> {
    if lambda.len() < 2 {
        return Err(Error::BadLambda(format!(
            "need at least two entries, got {}",
            lambda.len()
        )));
    }
    if let Some(bad) = lambda.iter().find(|x| !x.is_positive()) {
        return Err(Error::BadLambda(format!("entry {bad} is not positive")));
    }
    let l = lambda.iter().fold(Int::one(), |acc, x| acc.lcm(x));
    let d = lambda.iter().fold(Int::zero(), |acc, x| acc.gcd(x));
    let omega = lambda.iter().map(|x| &l / x).collect();
    Ok(LambdaSpec {
        lambda: lambda.to_vec(),
        l,
        omega,
        d,
    })
}

/// Minimal exponents of `I(λ)`: the minimal `α ∈ N^n` with `ω·α ≥ L`.
///
/// The minimal elements lie in the box `∏ [0, λ_i]`. The box is walked over
/// every axis except the one with the largest `λ`; on that axis the least
/// admissible coordinate is solved for directly. A point of the up-set is
/// minimal iff lowering any positive coordinate by one leaves it.
pub fn ideal_min_gens(spec: &LambdaSpec) -> IntMat {
    let n = spec.n();
    let l = &spec.l;
    let omega = &spec.omega;
    let solved = (0..n)
        .max_by(|&a, &b| spec.lambda[a].cmp(&spec.lambda[b]).then(b.cmp(&a)))
        .expect("n >= 2");
    let walked: Vec<usize> = (0..n).filter(|&i| i != solved).collect();

    let mut out = Vec::new();
    let mut point = vec![Int::zero(); n];
    'walk: loop {
        let rest = walked
            .iter()
            .fold(Int::zero(), |acc, &i| acc + &omega[i] * &point[i]);
        point[solved] = if &rest >= l {
            Int::zero()
        } else {
            (l - &rest).div_ceil(&omega[solved])
        };
        let weight = &rest + &omega[solved] * &point[solved];
        let minimal = (0..n).all(|i| point[i].is_zero() || &(&weight - &omega[i]) < l);
        if minimal {
            out.push(IntVec::new(point.clone()));
        }

        for &i in &walked {
            point[i] += 1;
            if point[i] <= spec.lambda[i] {
                continue 'walk;
            }
            point[i] = Int::zero();
        }
        break;
    }
    out.sort();
    IntMat::new(n, out).expect("points have n coordinates")
}

/// `S(I)`: generators `(e_i, 0)` followed by `(β, 1)` for the minimal `β`.
pub fn rees_semigroup(spec: &LambdaSpec) -> Result<AffineSemigroup> {
    let n = spec.n();
    let mut rows: Vec<IntVec> = (0..n).map(|i| IntVec::unit(n + 1, i)).collect();
    for beta in ideal_min_gens(spec).into_rows() {
        let mut e = beta.into_entries();
        e.push(Int::one());
        rows.push(IntVec::new(e));
    }
    new_semigroup(&IntMat::new(n + 1, rows)?)
}

/// Largest table a [`NumericalSgp`] will build.
pub const MAX_TABLE: usize = 1 << 25;

/// Membership in `⟨g_1, …, g_m⟩ ⊆ N` by dynamic programming, with the table
/// grown on demand.
#[derive(Clone, Debug)]
pub struct NumericalSgp {
    gens: Vec<usize>,
    /// `table[t]` is `None` if `t` is not in the semigroup, otherwise the
    /// index of a generator `g` with `t − g` in the semigroup (`usize::MAX`
    /// for `t = 0`).
    table: Vec<Option<usize>>,
}

impl NumericalSgp {
    pub fn new(gens: &[Int]) -> Result<Self> {
        if gens.is_empty() {
            return Err(Error::PreconditionViolated(
                "numerical semigroup needs a generator".into(),
            ));
        }
        let gens = gens
            .iter()
            .map(|g| {
                if !g.is_positive() {
                    return Err(Error::PreconditionViolated(format!(
                        "generator {g} is not positive"
                    )));
                }
                // a generator beyond the table limit can never be used
                Ok(g.to_usize().unwrap_or(usize::MAX))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(NumericalSgp {
            gens,
            table: vec![Some(usize::MAX)],
        })
    }

    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    fn grow_to(&mut self, t: usize) {
        for s in self.table.len()..=t {
            let via = self
                .gens
                .iter()
                .position(|&g| g <= s && self.table[s - g].is_some());
            self.table.push(via);
        }
    }

    fn index_of(t: &Int) -> Result<Option<usize>> {
        if t.is_negative() {
            return Ok(None);
        }
        match t.to_usize() {
            Some(x) if x < MAX_TABLE => Ok(Some(x)),
            _ => Err(Error::LimitTooLarge(t.clone())),
        }
    }

    pub fn contains(&mut self, t: &Int) -> Result<bool> {
        let Some(t) = Self::index_of(t)? else {
            return Ok(false);
        };
        self.grow_to(t);
        Ok(self.table[t].is_some())
    }

    /// Multiplicities `c` with `Σ c_i g_i = t`, if `t` is in the semigroup.
    pub fn representation(&mut self, t: &Int) -> Result<Option<Vec<u64>>> {
        let Some(mut t) = Self::index_of(t)? else {
            return Ok(None);
        };
        self.grow_to(t);
        if self.table[t].is_none() {
            return Ok(None);
        }
        let mut counts = vec![0u64; self.gens.len()];
        while t > 0 {
            let via = self.table[t].expect("members reduce to members");
            counts[via] += 1;
            t -= self.gens[via];
        }
        Ok(Some(counts))
    }
}

pub fn numsgp_contains(t: &Int, gens: &[Int]) -> Result<bool> {
    NumericalSgp::new(gens)?.contains(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// `L − ω_i` for a removed index `i`.
    LMinusOmega(usize),
    LPlusOne,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetCheck {
    pub target: Target,
    pub value: Int,
    pub member: bool,
}

/// One choice of removed indices `i_1 < … < i_l` (0-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetCheck {
    pub removed: Vec<usize>,
    pub kept: Vec<usize>,
    pub checks: Vec<TargetCheck>,
    /// Witnesses `(β, 1) ∈ N^{n+1}` in the order `γ_{i_1}, …, γ_{i_l}, γ_σ`,
    /// present when every check passes.
    pub witnesses: Option<Vec<IntVec>>,
}

impl SubsetCheck {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.member)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorollaryReport {
    pub r: usize,
    pub subsets: Vec<SubsetCheck>,
    pub holds: bool,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Arithmetic test for R_r of the Rees algebra of `I(λ)`, `2 ≤ r ≤ n`.
pub fn corollary_check_r(spec: &LambdaSpec, r: usize) -> Result<CorollaryReport> {
    let n = spec.n();
    if r < 2 || r > n {
        return Err(Error::BadRange(format!("r = {r} must lie in 2..={n}")));
    }
    let ell = r - 1;
    let l_plus_one = &spec.l + 1;
    let mut subsets = Vec::new();
    for removed in combinations(n, ell) {
        let kept: Vec<usize> = (0..n).filter(|i| !removed.contains(i)).collect();
        let kept_omega: Vec<Int> = kept.iter().map(|&j| spec.omega[j].clone()).collect();
        let mut sgp = NumericalSgp::new(&kept_omega)?;

        let mut checks = Vec::with_capacity(ell + 1);
        for &i in &removed {
            let value = &spec.l - &spec.omega[i];
            let member = sgp.contains(&value)?;
            checks.push(TargetCheck {
                target: Target::LMinusOmega(i),
                value,
                member,
            });
        }
        let member = sgp.contains(&l_plus_one)?;
        checks.push(TargetCheck {
            target: Target::LPlusOne,
            value: l_plus_one.clone(),
            member,
        });

        let witnesses = if checks.iter().all(|c| c.member) {
            let mut ws = Vec::with_capacity(ell + 1);
            for c in &checks {
                let counts = sgp
                    .representation(&c.value)?
                    .expect("member has a representation");
                let mut entries = vec![Int::zero(); n + 1];
                for (slot, &j) in kept.iter().enumerate() {
                    entries[j] = Int::from(counts[slot]);
                }
                if let Target::LMinusOmega(i) = c.target {
                    entries[i] = Int::one();
                }
                entries[n] = Int::one();
                ws.push(IntVec::new(entries));
            }
            Some(ws)
        } else {
            None
        };
        subsets.push(SubsetCheck {
            removed,
            kept,
            checks,
            witnesses,
        });
    }
    let holds = subsets.iter().all(SubsetCheck::ok);
    Ok(CorollaryReport { r, subsets, holds })
}

/// R_n holds iff `λ` is a multiple of `(1, …, 1)`.
pub fn check_rn(spec: &LambdaSpec) -> bool {
    spec.lambda.windows(2).all(|w| w[0] == w[1])
}

/// R_{n−1} (for `n ≥ 3`) holds iff the `ω_i` are pairwise coprime.
pub fn check_rn_minus_1(spec: &LambdaSpec) -> Result<bool> {
    let n = spec.n();
    if n < 3 {
        return Err(Error::BadRange(format!("need n >= 3, got {n}")));
    }
    Ok((0..n).all(|i| (i + 1..n).all(|j| spec.omega[i].gcd(&spec.omega[j]).is_one())))
}

pub type Triple = [Int; 3];

/// Solves `x·a + y·b = t` with `0 ≤ x ≤ x_max`, `0 ≤ y ≤ y_max` for coprime
/// `a, b`, choosing the solution that splits `t` most evenly between the two
/// terms (smaller `x` on ties).
fn balanced_representation(
    t: &Int,
    a: &Int,
    b: &Int,
    x_max: &Int,
    y_max: &Int,
) -> Option<(Int, Int)> {
    if t.is_negative() {
        return None;
    }
    let egcd = a.extended_gcd(b);
    debug_assert!(egcd.gcd.is_one());
    // x ≡ t · a⁻¹ (mod b)
    let x0 = (t * &egcd.x).mod_floor(b);
    let lo = Int::zero().max((t - y_max * b).div_ceil(a));
    let hi = x_max.clone().min(t.div_floor(a));
    if lo > hi {
        return None;
    }
    let congruent_at_least = |x: &Int| x + (&x0 - x).mod_floor(b);
    let centre = t.div_floor(&(a * 2));
    let above = congruent_at_least(&centre);
    let candidates = [above.clone(), &above - b, congruent_at_least(&lo), {
        let first = congruent_at_least(&hi);
        if first > hi {
            first - b
        } else {
            first
        }
    }];
    candidates
        .into_iter()
        .filter(|x| x >= &lo && x <= &hi)
        .min_by(|x, y| {
            let dx = (Int::from(2) * a * x - t).abs();
            let dy = (Int::from(2) * a * y - t).abs();
            dx.cmp(&dy).then_with(|| x.cmp(y))
        })
        .map(|x| {
            let y = (t - &x * a) / b;
            (x, y)
        })
}

fn weight(e: &Triple, w: &Triple) -> Int {
    &e[0] * &w[0] + &e[1] * &w[1] + &e[2] * &w[2]
}

/// Splits an exponent triple of weight at least `2L` (`L = abc`) into two
/// nonnegative triples of weight at least `L` each.
///
/// Cases, tried in order:
/// 1. some coordinate reaches `L / weight` on its own and is peeled off;
/// 2. some weight is 1, and that coordinate absorbs the excess;
/// 3. some coordinate has weighted value below `L/2`; the other two pay for
///    `L` minus its weighted value;
/// 4. otherwise `w_1 = ⌈L / 2c⌉` and the first two coordinates pay the rest.
pub fn degree2_decompose(exps: &Triple, weights: &Triple) -> Result<(Triple, Triple)> {
    if weights.iter().any(|w| !w.is_positive()) {
        return Err(Error::PreconditionViolated(
            "weights must be positive".into(),
        ));
    }
    for i in 0..3 {
        for j in i + 1..3 {
            if !weights[i].gcd(&weights[j]).is_one() {
                return Err(Error::PreconditionViolated(format!(
                    "weights {} and {} are not coprime",
                    weights[i], weights[j]
                )));
            }
        }
    }
    if exps.iter().any(Signed::is_negative) {
        return Err(Error::PreconditionViolated(
            "exponents must be nonnegative".into(),
        ));
    }
    let l: Int = weights.iter().product();
    let total = weight(exps, weights);
    if total < &l * 2 {
        return Err(Error::PreconditionViolated(format!(
            "weight {total} is below 2L = {}",
            &l * 2
        )));
    }
    let zero = || [Int::zero(), Int::zero(), Int::zero()];
    let rest = |part: &Triple| -> Triple {
        [
            &exps[0] - &part[0],
            &exps[1] - &part[1],
            &exps[2] - &part[2],
        ]
    };

    let split = 'split: {
        for i in 0..3 {
            let need = &l / &weights[i];
            if exps[i] >= need {
                let mut first = zero();
                first[i] = need;
                let second = rest(&first);
                break 'split (first, second);
            }
        }

        // From here every weighted coordinate is below L, so any two of them
        // sum to more than L.
        if let Some(i) = (0..3).find(|&i| weights[i].is_one()) {
            let j = (i + 1) % 3;
            let k = (i + 2) % 3;
            let excess = &exps[i] + &exps[j] * &weights[j] - &l;
            let mut first = zero();
            first[i] = &exps[i] - &excess;
            first[j] = exps[j].clone();
            let mut second = zero();
            second[i] = excess;
            second[k] = exps[k].clone();
            break 'split (first, second);
        }

        let small = (0..3).find(|&i| &exps[i] * &weights[i] * 2 < l);
        let (fixed, fixed_value) = match small {
            Some(k) => (k, exps[k].clone()),
            None => (2, l.div_ceil(&(&weights[2] * 2))),
        };
        let (i, j) = match fixed {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let target = &l - &fixed_value * &weights[fixed];
        let Some((x, y)) =
            balanced_representation(&target, &weights[i], &weights[j], &exps[i], &exps[j])
        else {
            panic!(
                "no representation of {target} by {} and {}",
                weights[i], weights[j]
            );
        };
        let mut first = zero();
        first[i] = x;
        first[j] = y;
        first[fixed] = fixed_value;
        let second = rest(&first);
        (first, second)
    };

    let (first, second) = &split;
    assert!(
        first.iter().chain(second.iter()).all(|x| !x.is_negative()),
        "negative part in split of {exps:?}"
    );
    assert!(weight(first, weights) >= l && weight(second, weights) >= l);
    Ok(split)
}

/// Lattice points `z` of the cone with `θ(z) ≤ budget` that are not in `S`,
/// sorted by θ and then lexicographically.
///
/// The region `{ z ∈ pos(S) : θ(z) ≤ budget }` is the convex hull of 0 and
/// the points `budget · g / θ(g)`, which gives the coordinate box to scan.
pub fn bounded_normality_scan(s: &AffineSemigroup, budget: &Int) -> Result<Vec<IntVec>> {
    if !s.is_pointed() {
        return Err(Error::PointedRequired);
    }
    let n = s.ambient_dim();
    let gens = s.generators();
    let theta = s.theta();
    let mut lo = vec![Int::zero(); n];
    let mut hi = vec![Int::zero(); n];
    for g in gens.rows() {
        let tg = theta.dot(g);
        for j in 0..n {
            let scaled = budget * &g[j];
            hi[j] = hi[j].clone().max(scaled.div_floor(&tg));
            lo[j] = lo[j].clone().min(scaled.div_ceil(&tg));
        }
    }

    let mut gaps = Vec::new();
    let mut point = lo.clone();
    'scan: loop {
        let z = IntVec::new(point.clone());
        if &theta.dot(&z) <= budget && s.cone().contains_point(&z) && !s.contains(&z)? {
            gaps.push(z);
        }
        for j in 0..n {
            point[j] += 1;
            if point[j] <= hi[j] {
                continue 'scan;
            }
            point[j] = lo[j].clone();
        }
        break;
    }
    gaps.sort_by(|a, b| theta.dot(a).cmp(&theta.dot(b)).then_with(|| a.cmp(b)));
    Ok(gaps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Probe {
    pub in_cone: bool,
    pub in_semigroup: bool,
}

impl Probe {
    pub fn is_gap(&self) -> bool {
        self.in_cone && !self.in_semigroup
    }

    pub fn describe(&self) -> &'static str {
        match (self.in_cone, self.in_semigroup) {
            (true, false) => "in cone, not in semigroup",
            (true, true) => "in semigroup",
            (false, _) => "not in cone",
        }
    }
}

/// Single-point version of [`bounded_normality_scan`].
pub fn probe_point(s: &AffineSemigroup, z: &IntVec) -> Result<Probe> {
    if z.len() != s.ambient_dim() {
        return Err(Error::DimensionMismatch {
            expected: s.ambient_dim(),
            found: z.len(),
        });
    }
    let in_cone = s.cone().contains_point(z);
    let in_semigroup = in_cone && s.contains(z)?;
    Ok(Probe {
        in_cone,
        in_semigroup,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(x: &[i64]) -> Vec<Int> {
        x.iter().map(|&v| Int::from(v)).collect()
    }

    fn v(x: &[i64]) -> IntVec {
        IntVec::from_i64s(x)
    }

    fn spec(x: &[u64]) -> LambdaSpec {
        LambdaSpec::from_u64s(x).unwrap()
    }

    fn triple(x: [i64; 3]) -> Triple {
        x.map(Int::from)
    }

    #[test]
    fn lambda_spec_examples() {
        let s = spec(&[1443, 37, 21, 91]);
        assert_eq!(s.l(), &Int::from(10101));
        assert_eq!(s.omega(), ints(&[7, 273, 481, 111]).as_slice());
        assert_eq!(s.d(), &Int::one());
        for (w, l) in s.omega().iter().zip(s.lambda()) {
            assert_eq!(w * l, *s.l());
        }

        let s = spec(&[2, 2, 2]);
        assert_eq!((s.l().clone(), s.d().clone()), (Int::from(2), Int::from(2)));
        assert_eq!(s.omega(), ints(&[1, 1, 1]).as_slice());

        let s = spec(&[6, 10, 15]);
        assert_eq!(s.l(), &Int::from(30));
        assert_eq!(s.omega(), ints(&[5, 3, 2]).as_slice());
        assert_eq!(s.d(), &Int::one());
    }

    #[test]
    fn lambda_spec_errors() {
        assert!(matches!(
            LambdaSpec::from_u64s(&[3]),
            Err(Error::BadLambda(_))
        ));
        assert!(matches!(
            LambdaSpec::from_u64s(&[3, 0]),
            Err(Error::BadLambda(_))
        ));
        assert!(matches!(
            lambda_spec(&ints(&[3, -2])),
            Err(Error::BadLambda(_))
        ));
    }

    #[test]
    fn min_gens_examples() {
        assert_eq!(
            ideal_min_gens(&spec(&[2, 2])).rows(),
            &[v(&[0, 2]), v(&[1, 1]), v(&[2, 0])]
        );
        assert_eq!(
            ideal_min_gens(&spec(&[1, 1, 1])).rows(),
            &[v(&[0, 0, 1]), v(&[0, 1, 0]), v(&[1, 0, 0])]
        );
        assert_eq!(
            ideal_min_gens(&spec(&[2, 3])).rows(),
            &[v(&[0, 3]), v(&[1, 2]), v(&[2, 0])]
        );
    }

    #[test]
    fn rees_semigroup_small() {
        let s = rees_semigroup(&spec(&[2, 3])).unwrap();
        assert_eq!(s.generators().nrows(), 5);
        let facets: Vec<&IntVec> = s.cone().facets().iter().map(|f| f.coeffs()).collect();
        assert_eq!(
            facets,
            vec![
                &v(&[1, 0, 0]),
                &v(&[0, 1, 0]),
                &v(&[0, 0, 1]),
                &v(&[3, 2, -6])
            ]
        );

        let s = rees_semigroup(&spec(&[1, 1])).unwrap();
        assert_eq!(
            s.generators().rows(),
            &[v(&[1, 0, 0]), v(&[0, 1, 0]), v(&[0, 1, 1]), v(&[1, 0, 1])]
        );
    }

    #[test]
    fn sigma_form() {
        assert_eq!(
            spec(&[1443, 37, 21, 91]).sigma().coeffs(),
            &v(&[7, 273, 481, 111, -10101])
        );
    }

    #[test]
    fn numerical_semigroup_examples() {
        let g = ints(&[3, 5]);
        assert!(!numsgp_contains(&Int::from(7), &g).unwrap());
        for t in 8..60 {
            assert!(numsgp_contains(&Int::from(t), &g).unwrap(), "{t}");
        }
        assert!(numsgp_contains(&Int::zero(), &ints(&[4, 9])).unwrap());
        assert!(!numsgp_contains(&Int::from(-1), &g).unwrap());
        let members: Vec<i64> = (0..12)
            .filter(|&t| numsgp_contains(&Int::from(t), &g).unwrap())
            .collect();
        assert_eq!(members, vec![0, 3, 5, 6, 8, 9, 10, 11]);
    }

    #[test]
    fn numerical_semigroup_representation() {
        let mut s = NumericalSgp::new(&ints(&[7, 273, 111])).unwrap();
        let counts = s.representation(&Int::from(10101 - 481)).unwrap().unwrap();
        assert_eq!(
            counts[0] * 7 + counts[1] * 273 + counts[2] * 111,
            10101 - 481
        );
        assert_eq!(
            NumericalSgp::new(&ints(&[7, 273]))
                .unwrap()
                .representation(&Int::from(9620))
                .unwrap(),
            None
        );
        assert_eq!(s.representation(&Int::from(1)).unwrap(), None);
        assert!(matches!(
            s.contains(&Int::from(MAX_TABLE as u64)),
            Err(Error::LimitTooLarge(_))
        ));
    }

    #[test]
    fn numerical_semigroup_rejects_bad_generators() {
        assert!(NumericalSgp::new(&[]).is_err());
        assert!(NumericalSgp::new(&ints(&[3, 0])).is_err());
    }

    #[test]
    fn corollary_examples() {
        let big = spec(&[1443, 37, 21, 91]);
        let r2 = corollary_check_r(&big, 2).unwrap();
        assert!(r2.holds);
        assert_eq!(r2.subsets.len(), 4);
        let r3 = corollary_check_r(&big, 3).unwrap();
        assert!(!r3.holds);
        // removing ω_3, ω_4 leaves ⟨7, 273⟩ = 7N, and L + 1 ≢ 0 (mod 7)
        let bad = r3.subsets.iter().find(|s| s.removed == vec![2, 3]).unwrap();
        assert!(!bad.checks.last().unwrap().member);

        assert!(corollary_check_r(&spec(&[2, 2, 2]), 3).unwrap().holds);
        assert!(matches!(
            corollary_check_r(&big, 1),
            Err(Error::BadRange(_))
        ));
        assert!(matches!(
            corollary_check_r(&big, 5),
            Err(Error::BadRange(_))
        ));
    }

    #[test]
    fn corollary_witnesses_have_delta_pattern() {
        let big = spec(&[1443, 37, 21, 91]);
        let sigma = big.sigma();
        for sub in corollary_check_r(&big, 2).unwrap().subsets {
            let ws = sub.witnesses.unwrap();
            let i = sub.removed[0];
            assert_eq!(ws[0][i], Int::one());
            assert!(sigma.eval(&ws[0]).is_zero());
            assert!(ws[1][i].is_zero());
            assert_eq!(sigma.eval(&ws[1]), Int::one());
        }
    }

    #[test]
    fn rn_examples() {
        assert!(check_rn(&spec(&[5, 5, 5])));
        assert!(!check_rn(&spec(&[1443, 37, 21, 91])));
        assert!(check_rn(&spec(&[2, 2])));
    }

    #[test]
    fn rn_minus_1_examples() {
        assert!(check_rn_minus_1(&spec(&[6, 10, 15])).unwrap());
        assert!(!check_rn_minus_1(&spec(&[1443, 37, 21, 91])).unwrap());
        assert!(check_rn_minus_1(&spec(&[1, 1, 1])).unwrap());
        assert!(matches!(
            check_rn_minus_1(&spec(&[2, 3])),
            Err(Error::BadRange(_))
        ));
    }

    #[test]
    fn degree2_examples() {
        let ones = triple([1, 1, 1]);
        assert_eq!(
            degree2_decompose(&triple([2, 0, 0]), &ones).unwrap(),
            (triple([1, 0, 0]), triple([1, 0, 0]))
        );
        let w = triple([2, 3, 5]);
        assert_eq!(
            degree2_decompose(&triple([15, 0, 6]), &w).unwrap(),
            (triple([15, 0, 0]), triple([0, 0, 6]))
        );
        assert_eq!(
            degree2_decompose(&triple([14, 5, 4]), &w).unwrap(),
            (triple([3, 3, 3]), triple([11, 2, 1]))
        );
    }

    #[test]
    fn degree2_small_coordinate_case() {
        // w = 2 gives 2·5 = 10 < 15 = L/2
        let w = triple([2, 3, 5]);
        let (a, b) = degree2_decompose(&triple([14, 9, 2]), &w).unwrap();
        assert_eq!(a[2], Int::from(2));
        assert_eq!(weight(&a, &w), Int::from(30));
        assert!(weight(&b, &w) >= Int::from(30));
    }

    #[test]
    fn degree2_unit_weight_case() {
        let w = triple([1, 3, 5]);
        // L = 15; u < 15, v < 5, w < 3 and weight 14 + 12 + 10 = 36 >= 30
        let (a, b) = degree2_decompose(&triple([14, 4, 2]), &w).unwrap();
        assert_eq!(a, triple([3, 4, 0]));
        assert_eq!(b, triple([11, 0, 2]));
    }

    #[test]
    fn degree2_preconditions() {
        let w = triple([2, 3, 5]);
        assert!(degree2_decompose(&triple([1, 1, 1]), &w).is_err());
        assert!(degree2_decompose(&triple([40, 0, 0]), &triple([2, 4, 5])).is_err());
        assert!(degree2_decompose(&triple([40, 0, 0]), &triple([0, 3, 5])).is_err());
        assert!(degree2_decompose(&triple([-1, 30, 30]), &w).is_err());
    }

    #[test]
    fn balanced_representation_bounds() {
        let r = balanced_representation(
            &Int::from(15),
            &Int::from(2),
            &Int::from(3),
            &Int::from(100),
            &Int::from(100),
        );
        assert_eq!(r, Some((Int::from(3), Int::from(3))));
        let r = balanced_representation(
            &Int::from(15),
            &Int::from(2),
            &Int::from(3),
            &Int::from(1),
            &Int::from(100),
        );
        assert_eq!(r, Some((Int::from(0), Int::from(5))));
        let r = balanced_representation(
            &Int::from(1),
            &Int::from(2),
            &Int::from(3),
            &Int::from(100),
            &Int::from(100),
        );
        assert_eq!(r, None);
    }

    #[test]
    fn example_gap_found_by_scan() {
        let s = crate::semigroup::new_semigroup(&IntMat::from_i64_rows(&[
            &[1, 0, 0],
            &[1, 3, 0],
            &[1, 0, 3],
            &[1, 1, 0],
            &[1, 2, 0],
            &[1, 0, 1],
            &[1, 0, 2],
            &[1, 2, 1],
            &[1, 1, 2],
        ]))
        .unwrap();
        let gaps = bounded_normality_scan(&s, &Int::from(3)).unwrap();
        assert_eq!(gaps, vec![v(&[1, 1, 1])]);
        let probe = probe_point(&s, &v(&[1, 1, 1])).unwrap();
        assert!(probe.is_gap());
    }

    #[test]
    fn polynomial_ring_has_no_gaps() {
        let s =
            crate::semigroup::new_semigroup(&IntMat::from_i64_rows(&[&[1, 0], &[0, 1]])).unwrap();
        assert!(bounded_normality_scan(&s, &Int::from(10))
            .unwrap()
            .is_empty());
    }
}
