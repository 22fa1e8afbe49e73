//! Exact integer linear algebra over `Z^n`.
//!
//! Lattices are always carried in row-style Hermite normal form: pivots are
//! positive, pivot columns strictly increase, and every entry above a pivot is
//! reduced into `[0, pivot)`. With that canonical form, lattice equality is
//! structural equality of the basis rows.

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;

/// An exact integer vector of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVec(Vec<Int>);

impl IntVec {
    pub fn new(entries: Vec<Int>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(n: usize) -> Self {
        IntVec(vec![Int::zero(); n])
    }

    /// Standard basis vector `e_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Int::one();
        v
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Int] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<Int> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Int> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &IntVec) -> Int {
        debug_assert_eq!(self.len(), other.len());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Int::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVec) -> IntVec {
        debug_assert_eq!(self.len(), other.len());
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Int) -> IntVec {
        IntVec(self.0.iter().map(|a| a * k).collect())
    }

    /// Nonnegative gcd of all entries (0 for the zero vector).
    pub fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, x| g.gcd(x))
    }

    /// Componentwise `self <= other`.
    pub fn le_componentwise(&self, other: &IntVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|x| !x.is_negative())
    }
}

impl Index<usize> for IntVec {
    type Output = Int;
    fn index(&self, i: usize) -> &Int {
        &self.0[i]
    }
}

impl From<Vec<i64>> for IntVec {
    fn from(v: Vec<i64>) -> Self {
        IntVec::from_i64s(&v)
    }
}

impl From<Vec<Int>> for IntVec {
    fn from(v: Vec<Int>) -> Self {
        IntVec(v)
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// A rectangular integer matrix stored by rows. Zero rows is allowed; the
/// column count is tracked separately so an empty matrix still has a width.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMat {
    ncols: usize,
    rows: Vec<IntVec>,
}

impl IntMat {
    pub fn new(ncols: usize, rows: Vec<IntVec>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::DimensionMismatch {
                expected: ncols,
                found: bad.len(),
            });
        }
        Ok(IntMat { ncols, rows })
    }

    pub fn empty(ncols: usize) -> Self {
        IntMat {
            ncols,
            rows: Vec::new(),
        }
    }

    /// Panics on ragged or empty input; meant for literals.
    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().expect("at least one row").len();
        IntMat::new(ncols, rows.iter().map(|r| IntVec::from_i64s(r)).collect())
            .expect("rectangular rows")
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &IntVec {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<IntVec> {
        self.rows
    }
}

/// An integer-valued linear functional with coprime coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimitiveForm(IntVec);

impl PrimitiveForm {
    pub fn coeffs(&self) -> &IntVec {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn eval(&self, v: &IntVec) -> Int {
        self.0.dot(v)
    }
}

impl fmt::Display for PrimitiveForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Divides `v` by the gcd of its entries, keeping the direction.
pub fn primitive(v: &IntVec) -> Result<PrimitiveForm> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(PrimitiveForm(IntVec(v.iter().map(|x| x / &g).collect())))
}

/// A lattice in `Z^ambient_dim`, given by its canonical HNF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticeBasis {
    ambient_dim: usize,
    rows: Vec<IntVec>,
}

impl LatticeBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        LatticeBasis {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        LatticeBasis {
            ambient_dim,
            rows: (0..ambient_dim)
                .map(|i| IntVec::unit(ambient_dim, i))
                .collect(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn hnf_rows(&self) -> &[IntVec] {
        &self.rows
    }

    pub fn to_mat(&self) -> IntMat {
        IntMat {
            ncols: self.ambient_dim,
            rows: self.rows.clone(),
        }
    }

    /// Index in `Z^n` when the lattice has full rank (the product of the
    /// pivots), `None` otherwise.
    pub fn index(&self) -> Option<Int> {
        if self.rank() != self.ambient_dim {
            return None;
        }
        Some(
            self.rows
                .iter()
                .enumerate()
                .fold(Int::one(), |acc, (i, r)| acc * &r[i]),
        )
    }

    pub fn is_full(&self) -> bool {
        self.index().is_some_and(|i| i.is_one())
    }

    /// Reduces `v` against the basis. The remainder is zero iff `v` lies in
    /// the lattice; a nonzero remainder keeps the first column where
    /// membership fails.
    fn reduce(&self, v: &IntVec) -> IntVec {
        let mut rem = v.clone();
        for row in &self.rows {
            let c = pivot_col(row).expect("HNF rows are nonzero");
            if rem[c].is_zero() {
                continue;
            }
            let (q, r) = rem[c].div_mod_floor(&row[c]);
            if !r.is_zero() {
                return rem;
            }
            rem = rem.sub(&row.scale(&q));
        }
        rem
    }

    fn insert(&mut self, v: &IntVec) {
        let rem = self.reduce(v);
        if rem.is_zero() {
            return;
        }
        let mut rows = std::mem::take(&mut self.rows);
        rows.push(rem);
        self.rows = echelonize(rows, self.ambient_dim);
    }
}

fn pivot_col(v: &IntVec) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Row-style Hermite normal form of a small list of rows.
fn echelonize(mut rows: Vec<IntVec>, ncols: usize) -> Vec<IntVec> {
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        // Euclid on column c among rows r.., always dividing by the smallest.
        loop {
            let best = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&i, &j| rows[i][c].abs().cmp(&rows[j][c].abs()));
            let Some(best) = best else { break };
            rows.swap(r, best);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                rows[i] = rows[i].sub(&rows[r].scale(&q));
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            rows[r] = rows[r].scale(&-Int::one());
        }
        let p = rows[r][c].clone();
        for i in 0..r {
            let q = rows[i][c].div_floor(&p);
            if !q.is_zero() {
                rows[i] = rows[i].sub(&rows[r].scale(&q));
            }
        }
        r += 1;
    }
    rows.truncate(r);
    debug_assert!(rows.iter().all(|row| !row.is_zero()));
    rows
}

/// Canonical HNF basis of the row lattice of `m`.
pub fn hnf(m: &IntMat) -> LatticeBasis {
    hnf_of_rows(m.rows(), m.ncols())
}

pub(crate) fn hnf_of_rows<'a, I>(rows: I, ncols: usize) -> LatticeBasis
where
    I: IntoIterator<Item = &'a IntVec>,
{
    let mut basis = LatticeBasis::zero(ncols);
    for row in rows {
        debug_assert_eq!(row.len(), ncols);
        basis.insert(row);
    }
    basis
}

/// Rank over the rationals of a family of rows.
pub(crate) fn rank_of_rows<'a, I>(rows: I, ncols: usize) -> usize
where
    I: IntoIterator<Item = &'a IntVec>,
{
    rank_of_rows_capped(rows, ncols, ncols)
}

/// Rank, stopping as soon as it reaches `cap`; exact whenever the true rank
/// is known to be at most `cap`.
pub(crate) fn rank_of_rows_capped<'a, I>(rows: I, ncols: usize, cap: usize) -> usize
where
    I: IntoIterator<Item = &'a IntVec>,
{
    let mut echelon: Vec<IntVec> = Vec::new();
    for row in rows {
        if echelon.len() >= cap.min(ncols) {
            break;
        }
        let mut v = row.clone();
        // Fraction-free elimination against an echelon form of primitive rows.
        for e in &echelon {
            let c = pivot_col(e).unwrap();
            if v[c].is_zero() {
                continue;
            }
            v = v.scale(&e[c]).sub(&e.scale(&v[c]));
            let g = v.content();
            if !g.is_zero() {
                v = IntVec(v.iter().map(|x| x / &g).collect());
            }
        }
        if let Some(c) = pivot_col(&v) {
            let at = echelon
                .iter()
                .position(|e| pivot_col(e).unwrap() > c)
                .unwrap_or(echelon.len());
            echelon.insert(at, v);
        }
    }
    echelon.len()
}

/// Basis of `{ z ∈ Z^n : σ(z) = 0 for every form σ }`.
pub fn kernel_basis(forms: &[PrimitiveForm], ambient_dim: usize) -> Result<LatticeBasis> {
    for f in forms {
        if f.len() != ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: ambient_dim,
                found: f.len(),
            });
        }
    }
    let vecs: Vec<&IntVec> = forms.iter().map(|f| f.coeffs()).collect();
    Ok(integer_kernel(&vecs, ambient_dim))
}

/// Saturated integer kernel via echelonizing `[Aᵀ | I]`: rows whose left block
/// vanishes span exactly the kernel because the row operations are unimodular.
pub(crate) fn integer_kernel(forms: &[&IntVec], n: usize) -> LatticeBasis {
    let k = forms.len();
    if k == 0 {
        return LatticeBasis::full(n);
    }
    let rows: Vec<IntVec> = (0..n)
        .map(|j| {
            let mut e: Vec<Int> = forms.iter().map(|f| f[j].clone()).collect();
            e.extend((0..n).map(|i| if i == j { Int::one() } else { Int::zero() }));
            IntVec(e)
        })
        .collect();
    let ech = echelonize(rows, k + n);
    let kernel_rows: Vec<IntVec> = ech
        .into_iter()
        .filter(|r| r.0[..k].iter().all(Zero::is_zero))
        .map(|r| IntVec(r.0[k..].to_vec()))
        .collect();
    hnf_of_rows(&kernel_rows, n)
}

pub fn lattice_equal(a: &LatticeBasis, b: &LatticeBasis) -> Result<bool> {
    if a.ambient_dim != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: a.ambient_dim,
            found: b.ambient_dim,
        });
    }
    Ok(a.rows == b.rows)
}

pub fn lattice_member(v: &IntVec, b: &LatticeBasis) -> Result<bool> {
    if v.len() != b.ambient_dim {
        return Err(Error::DimensionMismatch {
            expected: b.ambient_dim,
            found: v.len(),
        });
    }
    Ok(b.reduce(v).is_zero())
}
