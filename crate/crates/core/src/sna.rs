//! Special normalised affine matrices.
//!
//! `SNA(n)` is the set of traceless `(n+1)×(n+1)` matrices in which every row
//! and every column sums to one. Row and column sums run over all `n+1`
//! entries; the `n = 1` singleton `[[0,1],[1,0]]` and the displayed `n = 2`
//! matrices only satisfy that reading.
//!
//! Differences of members form `sl(n+1)₀`, the traceless matrices with all
//! row and column sums zero. With `[a,b] = ab − ba + b`, `SNA(n)` is a Lie
//! affgebra of dimension `n² − 1`, and the translation `a ↦ a − o` carries
//! the reduced bracket at `o` onto the matrix commutator.

use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::affine::{AffineSpace, VectorView};
use crate::error::{Error, Result};
use crate::field::{Eisenstein, Field, Rational};
use crate::lie::{reduce_bracket, SnaBracket};
use crate::matrix::{solve_linear, Matrix, Solution};

/// The parameter `n`; matrices are `(n+1)×(n+1)`. The scalar field is the
/// type parameter of the matrices it is used with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SnaSpec {
    n: usize,
}

impl SnaSpec {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroDimension);
        }
        Ok(SnaSpec { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.n + 1
    }

    /// `n² − 1`
    pub fn dimension(&self) -> usize {
        self.n * self.n - 1
    }

    fn require_n2(&self, op: &'static str) -> Result<()> {
        if self.n == 2 {
            Ok(())
        } else {
            Err(Error::UnsupportedDimension { op, supported: 2, n: self.n })
        }
    }
}

/// The first constraint a non-member breaks.
#[derive(Clone, Debug, PartialEq)]
pub enum Violation<F> {
    Shape { expected: usize, found: (usize, usize) },
    Trace(F),
    RowSum { row: usize, sum: F },
    ColSum { col: usize, sum: F },
}

impl<F: fmt::Display> fmt::Display for Violation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Shape { expected, found } => {
                write!(f, "shape {}x{} (expected {expected}x{expected})", found.0, found.1)
            }
            Violation::Trace(t) => write!(f, "trace = {t}"),
            Violation::RowSum { row, sum } => write!(f, "row {} sums to {sum}", row + 1),
            Violation::ColSum { col, sum } => write!(f, "column {} sums to {sum}", col + 1),
        }
    }
}

fn line_sum_violation<F: Field>(m: &Matrix<F>, size: usize, target: &F) -> Option<Violation<F>> {
    if m.shape() != (size, size) {
        return Some(Violation::Shape { expected: size, found: m.shape() });
    }
    let t = m.trace().expect("square");
    if !t.is_zero() {
        return Some(Violation::Trace(t));
    }
    if let Some((row, sum)) = m.row_sums().into_iter().enumerate().find(|(_, s)| s != target) {
        return Some(Violation::RowSum { row, sum });
    }
    if let Some((col, sum)) = m.col_sums().into_iter().enumerate().find(|(_, s)| s != target) {
        return Some(Violation::ColSum { col, sum });
    }
    None
}

pub fn violation<F: Field>(m: &Matrix<F>, spec: &SnaSpec) -> Option<Violation<F>> {
    line_sum_violation(m, spec.size(), &F::one())
}

pub fn is_member<F: Field>(m: &Matrix<F>, spec: &SnaSpec) -> bool {
    violation(m, spec).is_none()
}

impl<F: Field> AffineSpace<F> for SnaSpec {
    fn name(&self) -> String {
        format!("SNA({})", self.n)
    }

    fn contains(&self, m: &Matrix<F>) -> bool {
        is_member(m, self)
    }
}

/// `sl(n+1)₀`: traceless, all row and column sums zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Sl0Spec {
    pub n: usize,
}

pub fn sl0_membership<F: Field>(m: &Matrix<F>, n: usize) -> bool {
    line_sum_violation(m, n + 1, &F::zero()).is_none()
}

impl<F: Field> AffineSpace<F> for Sl0Spec {
    fn name(&self) -> String {
        format!("sl({})_0", self.n + 1)
    }

    fn contains(&self, m: &Matrix<F>) -> bool {
        sl0_membership(m, self.n)
    }
}

// ---------------------------------------------------------------------------
// Free entries and completion
// ---------------------------------------------------------------------------

/// Zero-based positions of the free entries, in row-major order: rows
/// `0..n−1` at columns `0..n`, then row `n−1` at columns `1..n`.
pub fn free_positions(n: usize) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = (0..n.saturating_sub(1)).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    out.extend((1..n).map(|j| (n - 1, j)));
    out
}

/// The `n² − 1` freely chosen entries of an `SNA(n)` member.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeEntryPattern<F> {
    values: Vec<F>,
}

impl<F: Field> FreeEntryPattern<F> {
    pub fn new(spec: &SnaSpec, values: Vec<F>) -> Result<Self> {
        let expected = spec.dimension();
        if values.len() != expected {
            return Err(Error::PatternLength { n: spec.n, expected, found: values.len() });
        }
        Ok(FreeEntryPattern { values })
    }

    pub fn values(&self) -> &[F] {
        &self.values
    }

    /// Comma-separated scalars in pattern order.
    pub fn to_text(&self) -> String {
        self.values.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

impl<F: Field + FromStr<Err = crate::FieldError>> FreeEntryPattern<F> {
    pub fn parse(spec: &SnaSpec, text: &str) -> Result<Self> {
        let t = text.trim();
        let values = if t.is_empty() {
            Vec::new()
        } else {
            t.split(',').map(|x| x.trim().parse::<F>()).collect::<Result<Vec<_>, _>>()?
        };
        Self::new(spec, values)
    }
}

fn sum_of<'a, F: Field>(it: impl Iterator<Item = &'a F>) -> F {
    it.fold(F::zero(), |acc, x| acc + x.clone())
}

/// The unique member of `SNA(n)` with the given free entries.
pub fn complete<F: Field>(pattern: &FreeEntryPattern<F>, spec: &SnaSpec) -> Result<Matrix<F>> {
    let n = spec.n;
    let last = n; // zero-based index of row/column n+1
    let one = F::one();
    let mut m = Matrix::<F>::zeros(n + 1, n + 1);
    if n == 1 {
        // m₁₁ + m₁₂ = 1 = m₁₂ + m₂₂ forces m₂₂ = m₁₁, and the trace then gives m₁₁ = 0
        m[(0, 1)] = one.clone();
        m[(1, 0)] = one;
    } else {
        for (pos, v) in free_positions(n).into_iter().zip(pattern.values()) {
            m[pos] = v.clone();
        }
        // last column of rows 1..n−1, from the row sums
        for i in 0..n - 1 {
            m[(i, last)] = one.clone() - sum_of(m.row(i)[..n].iter());
        }
        // last row in columns 2..n, from the column sums
        for j in 1..n {
            let s = (0..n).fold(F::zero(), |acc, i| acc + m[(i, j)].clone());
            m[(last, j)] = one.clone() - s;
        }
        // corner, from the trace
        m[(last, last)] = -(0..n).fold(F::zero(), |acc, i| acc + m[(i, i)].clone());
        // entry (n, n+1), from the last column sum
        let s = (0..=last).filter(|&i| i != n - 1).fold(F::zero(), |acc, i| acc + m[(i, last)].clone());
        m[(n - 1, last)] = one.clone() - s;
        // entry (n, 1), from row n
        m[(n - 1, 0)] = one.clone() - sum_of(m.row(n - 1)[1..].iter());
        // entry (n+1, 1), from row n+1
        m[(last, 0)] = one.clone() - sum_of(m.row(last)[1..].iter());
    }
    match violation(&m, spec) {
        None => Ok(m),
        Some(v) => Err(Error::Internal(format!("completion is not a member: {v}"))),
    }
}

/// Read back the free entries of a member.
pub fn extract<F: Field>(m: &Matrix<F>, spec: &SnaSpec) -> Result<FreeEntryPattern<F>> {
    spec.require("matrix", m)?;
    FreeEntryPattern::new(spec, free_positions(spec.n).into_iter().map(|p| m[p].clone()).collect())
}

/// `A^{ab}_c`, the member of `SNA(2)` with free entries `(a, b, c)`.
pub fn param_matrix<F: Field>(a: F, b: F, c: F) -> Matrix<F> {
    let spec = SnaSpec { n: 2 };
    complete(&FreeEntryPattern { values: vec![a, b, c] }, &spec).expect("n = 2 completion")
}

/// Trace, row-sum and column-sum equations on the `(n+1)²` entries, with
/// right-hand side.
pub fn constraint_system<F: Field>(n: usize) -> (Matrix<F>, Vec<F>) {
    let size = n + 1;
    let unknowns = size * size;
    let mut a = Matrix::<F>::zeros(1 + 2 * size, unknowns);
    let mut rhs = vec![F::zero()];
    for i in 0..size {
        a[(0, i * size + i)] = F::one();
    }
    for i in 0..size {
        for j in 0..size {
            a[(1 + i, i * size + j)] = F::one();
            a[(1 + size + j, i * size + j)] = F::one();
        }
    }
    rhs.extend(std::iter::repeat_n(F::one(), 2 * size));
    (a, rhs)
}

pub fn dimension(spec: &SnaSpec) -> usize {
    spec.dimension()
}

/// `(n+1)²` minus the rank of the constraint system.
pub fn dimension_by_rank(spec: &SnaSpec) -> usize {
    let (a, _) = constraint_system::<Rational>(spec.n);
    a.cols() - a.rank()
}

// ---------------------------------------------------------------------------
// n = 2: generators, barycentric coordinates, bracket table
// ---------------------------------------------------------------------------

/// The four affinely independent generators of `SNA(2)`, in their fixed order.
#[allow(non_camel_case_types)]
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Generator {
    A00_0,
    A01_0,
    A00_1,
    A10_0,
}

impl Generator {
    pub const ALL: [Generator; 4] = [Generator::A00_0, Generator::A01_0, Generator::A00_1, Generator::A10_0];

    pub fn name(self) -> &'static str {
        match self {
            Generator::A00_0 => "A00_0",
            Generator::A01_0 => "A01_0",
            Generator::A00_1 => "A00_1",
            Generator::A10_0 => "A10_0",
        }
    }

    /// `(a, b, c)` in `A^{ab}_c`.
    pub fn params(self) -> (i64, i64, i64) {
        match self {
            Generator::A00_0 => (0, 0, 0),
            Generator::A01_0 => (0, 1, 0),
            Generator::A00_1 => (0, 0, 1),
            Generator::A10_0 => (1, 0, 0),
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn matrix<F: Field>(self) -> Matrix<F> {
        let (a, b, c) = self.params();
        param_matrix(F::from_i64(a), F::from_i64(b), F::from_i64(c))
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Generator {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Generator::ALL.into_iter().find(|g| g.name() == s.trim()).ok_or_else(|| Error::UnknownGenerator(s.to_string()))
    }
}

pub fn generator<F: Field>(name: &str) -> Result<Matrix<F>> {
    Ok(name.parse::<Generator>()?.matrix())
}

/// Coefficients over `(A00_0, A01_0, A00_1, A10_0)` summing to one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarycentricCombo<F> {
    pub coeffs: [F; 4],
}

impl<F: Field> BarycentricCombo<F> {
    pub fn new(coeffs: [F; 4]) -> Result<Self> {
        let s = sum_of(coeffs.iter());
        if !s.is_one() {
            return Err(Error::Internal(format!("barycentric coefficients sum to {s}")));
        }
        Ok(BarycentricCombo { coeffs })
    }

    pub fn from_i64(c: [i64; 4]) -> Result<Self> {
        Self::new(c.map(F::from_i64))
    }

    pub fn unit(g: Generator) -> Self {
        let mut coeffs = [F::zero(), F::zero(), F::zero(), F::zero()];
        coeffs[g.index()] = F::one();
        BarycentricCombo { coeffs }
    }

    pub fn sum(&self) -> F {
        sum_of(self.coeffs.iter())
    }

    /// `Σ cᵢ Gᵢ` in ambient arithmetic.
    pub fn evaluate(&self) -> Matrix<F> {
        Generator::ALL
            .iter()
            .zip(&self.coeffs)
            .fold(Matrix::zeros(3, 3), |acc, (g, c)| &acc + &g.matrix::<F>().scale(c))
    }

    /// `(c₁, c₂, c₃, c₄)`
    pub fn tuple_text(&self) -> String {
        format!("({})", self.coeffs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
    }

    /// `2A10_0 + A01_0 − 3A00_0`-style expression, terms in generator order.
    pub fn expression(&self) -> String {
        let mut out = String::new();
        for (g, c) in Generator::ALL.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let compound = s[1..].contains(['+', '-']);
            let (neg, mag) = match s.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ if compound => (false, format!("({s})")),
                _ => (false, s.clone()),
            };
            let mag = if mag == "1" { String::new() } else { mag };
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            out.push_str(&mag);
            out.push_str(g.name());
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| c.to_string().into()).collect())
    }
}

/// Barycentric coordinates of a member of `SNA(2)` over the four generators.
pub fn barycentric_coords<F: Field>(m: &Matrix<F>) -> Result<BarycentricCombo<F>> {
    let spec = SnaSpec { n: 2 };
    spec.require("matrix", m)?;
    let gens: Vec<Matrix<F>> = Generator::ALL.iter().map(|g| g.matrix()).collect();
    let mut a = Matrix::<F>::zeros(10, 4);
    let mut rhs = Vec::with_capacity(10);
    for e in 0..9 {
        for (k, g) in gens.iter().enumerate() {
            a[(e, k)] = g.entries()[e].clone();
        }
        rhs.push(m.entries()[e].clone());
    }
    for k in 0..4 {
        a[(9, k)] = F::one();
    }
    rhs.push(F::one());
    match solve_linear(&a, &rhs)? {
        Solution::Unique(x) => {
            let coeffs: [F; 4] = x.try_into().map_err(|_| Error::Internal("solution length".into()))?;
            BarycentricCombo::new(coeffs)
        }
        other => Err(Error::Internal(format!("barycentric system not uniquely solvable: {other:?}"))),
    }
}

/// One line of the bracket table.
#[derive(Clone, Debug, PartialEq)]
pub struct TableEntry<F> {
    pub left: Generator,
    pub right: Generator,
    pub combo: BarycentricCombo<F>,
}

impl<F: Field> fmt::Display for TableEntry<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}] = {}", self.left, self.right, self.combo.expression())
    }
}

/// The six unordered generator pairs, in the order the table is usually listed.
pub const TABLE_PAIRS: [(Generator, Generator); 6] = [
    (Generator::A01_0, Generator::A00_1),
    (Generator::A00_0, Generator::A00_1),
    (Generator::A00_0, Generator::A10_0),
    (Generator::A01_0, Generator::A10_0),
    (Generator::A00_0, Generator::A01_0),
    (Generator::A00_1, Generator::A10_0),
];

pub fn bracket_entry<F: Field>(left: Generator, right: Generator) -> Result<TableEntry<F>> {
    let spec = SnaSpec { n: 2 };
    let value = crate::lie::sna_bracket(&spec, &left.matrix(), &right.matrix())?;
    Ok(TableEntry { left, right, combo: barycentric_coords(&value)? })
}

/// Brackets of all ordered pairs of distinct generators.
pub fn bracket_table<F: Field>(spec: &SnaSpec) -> Result<Vec<TableEntry<F>>> {
    spec.require_n2("bracket table")?;
    let mut out = Vec::with_capacity(12);
    for l in Generator::ALL {
        for r in Generator::ALL {
            if l != r {
                out.push(bracket_entry(l, r)?);
            }
        }
    }
    Ok(out)
}

/// The six unordered pairs of [`TABLE_PAIRS`].
pub fn canonical_table<F: Field>() -> Result<Vec<TableEntry<F>>> {
    TABLE_PAIRS.iter().map(|&(l, r)| bracket_entry(l, r)).collect()
}

// ---------------------------------------------------------------------------
// Reduction onto sl(n+1)₀
// ---------------------------------------------------------------------------

/// `a ↦ a − o`, from `V(SNA(n)_o)` onto `sl(n+1)₀`.
pub fn reduction_iso<F: Field>(spec: &SnaSpec, o: &Matrix<F>, a: &Matrix<F>) -> Result<Matrix<F>> {
    spec.require("o", o)?;
    spec.require("a", a)?;
    Ok(a - o)
}

/// `v ↦ v + o`, the inverse of [`reduction_iso`].
pub fn reduction_inverse<F: Field>(spec: &SnaSpec, o: &Matrix<F>, v: &Matrix<F>) -> Result<Matrix<F>> {
    spec.require("o", o)?;
    if !sl0_membership(v, spec.n) {
        return Err(Error::NotMember { role: "v".into(), carrier: format!("sl({})_0", spec.size()) });
    }
    Ok(v + o)
}

// ---------------------------------------------------------------------------
// Chevalley basis
// ---------------------------------------------------------------------------

/// `e, f, h` in `V(SNA(2)_o)` over Q(ω) with `o = A01_0`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChevalleyTriple {
    pub o: Matrix<Eisenstein>,
    pub e: Matrix<Eisenstein>,
    pub f: Matrix<Eisenstein>,
    pub h: Matrix<Eisenstein>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Relation {
    pub name: &'static str,
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
}

impl ChevalleyTriple {
    /// Build the triple without verifying it.
    ///
    /// `e = ⅓(A10_0 + ω A00_1)`, `f = ⅓(A10_0 + ω² A00_1)` and
    /// `h = −(2ω+1)/3 · A00_0`, where `(2ω+1)/3 = (√3/3)·i`. All sums and
    /// multiples are taken in `V(SNA(2)_o)`.
    pub fn construct() -> Result<Self> {
        let spec = SnaSpec { n: 2 };
        let o = Generator::A01_0.matrix::<Eisenstein>();
        let v = VectorView::new(&spec, o.clone())?;
        let third = Eisenstein::from(Rational::new(1, 3)?);
        let a10 = Generator::A10_0.matrix();
        let a001 = Generator::A00_1.matrix();
        let e = v.scale(&third, &v.add(&a10, &v.scale(&Eisenstein::omega(), &a001)?)?)?;
        let f = v.scale(&third, &v.add(&a10, &v.scale(&Eisenstein::omega_squared(), &a001)?)?)?;
        let h_coeff = -(Eisenstein::sqrt_minus_three() * third);
        let h = v.scale(&h_coeff, &Generator::A00_0.matrix())?;
        Ok(ChevalleyTriple { o, e, f, h })
    }

    /// `[h,e]_o = 2e`, `[h,f]_o = −2f`, `[e,f]_o = h`.
    pub fn relations(&self) -> Result<Vec<Relation>> {
        let spec = SnaSpec { n: 2 };
        let v = VectorView::new(&spec, self.o.clone())?;
        let br = |a: &Matrix<Eisenstein>, b: &Matrix<Eisenstein>| reduce_bracket(&spec, &SnaBracket, &self.o, a, b);
        let rel = |name, lhs: Matrix<Eisenstein>, rhs: Matrix<Eisenstein>| Relation {
            name,
            holds: lhs == rhs,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        };
        Ok(vec![
            rel("[h,e]_o = 2e", br(&self.h, &self.e)?, v.scale(&Eisenstein::from(2), &self.e)?),
            rel("[h,f]_o = -2f", br(&self.h, &self.f)?, v.scale(&Eisenstein::from(-2), &self.f)?),
            rel("[e,f]_o = h", br(&self.e, &self.f)?, self.h.clone()),
        ])
    }
}

/// Construct the triple and verify its three relations.
pub fn chevalley_triple() -> Result<ChevalleyTriple> {
    let t = ChevalleyTriple::construct()?;
    if let Some(r) = t.relations()?.into_iter().find(|r| !r.holds) {
        return Err(Error::Internal(format!("Chevalley relation {} fails: {} vs {}", r.name, r.lhs, r.rhs)));
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

pub fn random_pattern<F: Field, R: rand::Rng + ?Sized>(spec: &SnaSpec, rng: &mut R, bound: u32) -> FreeEntryPattern<F> {
    FreeEntryPattern { values: (0..spec.dimension()).map(|_| F::random(rng, bound.max(1))).collect() }
}

/// Deterministic pseudorandom member.
pub fn random_element<F: Field>(spec: &SnaSpec, seed: u64, bound: u32) -> Matrix<F> {
    random_elements(spec, seed, 1, bound).pop().expect("one element")
}

/// `count` members drawn from one seeded stream.
pub fn random_elements<F: Field>(spec: &SnaSpec, seed: u64, count: usize, bound: u32) -> Vec<Matrix<F>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| complete(&random_pattern(spec, &mut rng, bound), spec).expect("completion of a valid pattern"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    type M = Matrix<Rational>;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn spec(n: usize) -> SnaSpec {
        SnaSpec::new(n).unwrap()
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&M::from_i64_rows(&[[0, 1], [1, 0]]), &spec(1)));
        assert_eq!(violation(&M::identity(3), &spec(2)), Some(Violation::Trace(Rational::from(3))));
        assert!(is_member(&param_matrix(q(1, 1), q(1, 1), q(1, 1)), &spec(2)));
        assert!(matches!(violation(&M::identity(2), &spec(2)), Some(Violation::Shape { .. })));
        let bad = M::from_i64_rows(&[[0, 2, -1], [1, 0, 0], [0, -1, 0]]);
        assert_eq!(violation(&bad, &spec(2)), Some(Violation::RowSum { row: 2, sum: Rational::from(-1) }));
        assert_eq!(SnaSpec::new(0), Err(Error::ZeroDimension));
    }

    #[test]
    fn free_positions_count() {
        for n in 1..=6 {
            assert_eq!(free_positions(n).len(), n * n - 1);
        }
        assert_eq!(free_positions(2), vec![(0, 0), (0, 1), (1, 1)]);
    }

    #[test]
    fn completion_of_singleton_and_generators() {
        let p = FreeEntryPattern::<Rational>::new(&spec(1), vec![]).unwrap();
        assert_eq!(complete(&p, &spec(1)).unwrap(), M::from_i64_rows(&[[0, 1], [1, 0]]));
        let zero = FreeEntryPattern::new(&spec(2), vec![Rational::zero(); 3]).unwrap();
        assert_eq!(complete(&zero, &spec(2)).unwrap(), M::from_i64_rows(&[[0, 0, 1], [1, 0, 0], [0, 1, 0]]));
        assert!(matches!(
            FreeEntryPattern::<Rational>::new(&spec(2), vec![Rational::zero()]),
            Err(Error::PatternLength { expected: 3, found: 1, .. })
        ));
    }

    #[test]
    fn extract_complete_round_trip() {
        for n in 1..=4 {
            for m in random_elements::<Rational>(&spec(n), 40 + n as u64, 25, 9) {
                let p = extract(&m, &spec(n)).unwrap();
                assert_eq!(complete(&p, &spec(n)).unwrap(), m);
            }
        }
    }

    #[test]
    fn dimension_matches_rank() {
        for n in 1..=5 {
            assert_eq!(dimension_by_rank(&spec(n)), dimension(&spec(n)));
        }
        assert_eq!(dimension(&spec(3)), 8);
    }

    #[test]
    fn generators_by_name() {
        assert_eq!(generator::<Rational>("A10_0").unwrap(), M::from_i64_rows(&[[1, 0, 0], [-1, 0, 2], [1, 1, -1]]));
        assert!(matches!(generator::<Rational>("A11_1"), Err(Error::UnknownGenerator(_))));
        for g in Generator::ALL {
            assert_eq!(g.name().parse::<Generator>().unwrap(), g);
        }
    }

    #[test]
    fn barycentric_examples() {
        let c = barycentric_coords(&Generator::A00_1.matrix::<Rational>()).unwrap();
        assert_eq!(c, BarycentricCombo::unit(Generator::A00_1));
        let mid = action_mid();
        assert_eq!(barycentric_coords(&mid).unwrap().coeffs, [q(1, 2), q(1, 2), q(0, 1), q(0, 1)]);
        assert!(matches!(barycentric_coords(&M::identity(3)), Err(Error::NotMember { .. })));
    }

    fn action_mid() -> M {
        crate::affine::action(&q(1, 2), &Generator::A00_0.matrix(), &Generator::A01_0.matrix()).unwrap()
    }

    #[test]
    fn barycentric_round_trip_on_random_members() {
        for m in random_elements::<Rational>(&spec(2), 9, 50, 10) {
            let c = barycentric_coords(&m).unwrap();
            assert!(c.sum().is_one());
            assert_eq!(c.evaluate(), m);
        }
    }

    #[test]
    fn expression_formatting() {
        let c = BarycentricCombo::<Rational>::from_i64([-3, 1, 1, 2]).unwrap();
        assert_eq!(c.expression(), "-3A00_0 + A01_0 + A00_1 + 2A10_0");
        assert_eq!(c.tuple_text(), "(-3, 1, 1, 2)");
        let c = BarycentricCombo::<Rational>::from_i64([0, -1, 0, 2]).unwrap();
        assert_eq!(c.expression(), "-A01_0 + 2A10_0");
        assert!(BarycentricCombo::<Rational>::from_i64([1, 1, 0, 0]).is_err());
        let w = Eisenstein::omega();
        let c =
            BarycentricCombo::new([Eisenstein::one() - w.clone(), w, Eisenstein::zero(), Eisenstein::zero()]).unwrap();
        assert_eq!(c.expression(), "(1-w)A00_0 + wA01_0");
    }

    #[test]
    fn table_has_twelve_entries_summing_to_one() {
        let t = bracket_table::<Rational>(&spec(2)).unwrap();
        assert_eq!(t.len(), 12);
        assert!(t.iter().all(|e| e.combo.sum().is_one()));
        assert!(bracket_table::<Rational>(&spec(3)).is_err());
    }

    #[test]
    fn sl0_examples() {
        assert!(sl0_membership(&M::zeros(3, 3), 2));
        assert!(!sl0_membership(&Generator::A00_0.matrix::<Rational>(), 2));
        let s = random_elements::<Rational>(&spec(2), 1, 2, 10);
        assert!(sl0_membership(&(&s[0] - &s[1]), 2));
    }

    #[test]
    fn reduction_iso_examples() {
        let s = random_elements::<Rational>(&spec(3), 2, 2, 10);
        let (o, a) = (&s[0], &s[1]);
        assert!(reduction_iso(&spec(3), o, o).unwrap().is_zero());
        let v = reduction_iso(&spec(3), o, a).unwrap();
        assert_eq!(reduction_inverse(&spec(3), o, &v).unwrap(), *a);
        assert!(reduction_inverse(&spec(3), o, a).is_err());
    }

    #[test]
    fn chevalley_holds() {
        let t = chevalley_triple().unwrap();
        for r in t.relations().unwrap() {
            assert!(r.holds, "{}", r.name);
        }
        let spec = spec(2);
        assert!(is_member(&t.e, &spec) && is_member(&t.f, &spec) && is_member(&t.h, &spec));
        assert_eq!(reduce_bracket(&spec, &SnaBracket, &t.o, &t.h, &t.h).unwrap(), t.o);
    }

    #[test]
    fn random_is_deterministic_member() {
        let a = random_element::<Rational>(&spec(3), 17, 5);
        assert_eq!(a, random_element::<Rational>(&spec(3), 17, 5));
        assert!(is_member(&a, &spec(3)));
        let e = random_element::<Eisenstein>(&spec(2), 17, 5);
        assert!(is_member(&e, &spec(2)));
    }
}
