//! Lie brackets on affine carriers.
//!
//! A bracket on an affine space is bi-affine and, in place of antisymmetry and
//! the Jacobi identity, satisfies
//!
//! ```text
//! ⟨[a,b], [a,a], [b,a]⟩ = [b,b]
//! ⟨[a,[b,c]], [a,a], [b,[c,a]], [b,b], [c,[a,b]]⟩ = [c,c]
//! ```
//!
//! Fixing a basepoint `o` linearises it in both slots to an ordinary Lie
//! bracket on `V(A_o)`:
//! `[a,b]_o = ⟨[a,b], [a,o], [o,o], [o,b], o⟩`.

use crate::affine::AffineSpace;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::report::{index_tuples, AxiomReport, Checker};
use crate::sna::SnaSpec;

/// A binary operation on carrier members.
pub trait Bracket<F: Field> {
    fn name(&self) -> String;

    fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F>;
}

impl<F: Field, B: Bracket<F> + ?Sized> Bracket<F> for &B {
    fn name(&self) -> String {
        (**self).name()
    }
    fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        (**self).apply(a, b)
    }
}

/// `[a,b] = ab − ba + b`
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SnaBracket;

impl<F: Field> Bracket<F> for SnaBracket {
    fn name(&self) -> String {
        "sna".into()
    }

    fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        &(&(a * b) - &(b * a)) + b
    }
}

/// The SNA bracket with membership checks on both inputs.
pub fn sna_bracket<F: Field>(spec: &SnaSpec, a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
    spec.require("a", a)?;
    spec.require("b", b)?;
    Ok(SnaBracket.apply(a, b))
}

/// `[x,y] = ζ ▷_x y`, definable on any affine space.
#[derive(Clone, Debug)]
pub struct ZetaBracket<F, S> {
    pub zeta: F,
    pub space: S,
}

impl<F: Field, S: AffineSpace<F>> Bracket<F> for ZetaBracket<F, S> {
    fn name(&self) -> String {
        format!("zeta({})", self.zeta)
    }

    fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        self.space.act(&self.zeta, a, b)
    }
}

pub fn zeta_bracket<F: Field, S: AffineSpace<F>>(space: &S, zeta: &F, x: &Matrix<F>, y: &Matrix<F>) -> Matrix<F> {
    space.act(zeta, x, y)
}

/// `⟨[a,b], [a,a], [b,a]⟩ = [b,b]`, plus closure of `[a,b]`.
pub fn check_anti_axiom<F: Field, S: AffineSpace<F>, B: Bracket<F>>(
    space: &S,
    bracket: &B,
    samples: &[Matrix<F>],
) -> AxiomReport {
    let mut c = Checker::new(format!("bracket antisymmetry law for {} on {}", bracket.name(), space.name()));
    for t in index_tuples(samples.len(), 2) {
        let [a, b] = [&samples[t[0]], &samples[t[1]]];
        let inputs = [("a", a), ("b", b)];
        let ab = bracket.apply(a, b);
        if !c.holds::<F>("[a,b] ∈ A", &inputs, &[], space.contains(&ab), &ab, "member of carrier") {
            break;
        }
        let left = space.heap(&ab, &bracket.apply(a, a), &bracket.apply(b, a));
        if !c.equal::<F>("⟨[a,b],[a,a],[b,a]⟩ = [b,b]", &inputs, &[], &left, &bracket.apply(b, b)) {
            break;
        }
    }
    c.finish()
}

/// `⟨[a,[b,c]], [a,a], [b,[c,a]], [b,b], [c,[a,b]]⟩ = [c,c]`
pub fn check_jacobi_axiom<F: Field, S: AffineSpace<F>, B: Bracket<F>>(
    space: &S,
    bracket: &B,
    samples: &[Matrix<F>],
) -> AxiomReport {
    let mut c = Checker::new(format!("bracket Jacobi law for {} on {}", bracket.name(), space.name()));
    let br = |x: &Matrix<F>, y: &Matrix<F>| bracket.apply(x, y);
    for t in index_tuples(samples.len(), 3) {
        let [a, b, cc] = [&samples[t[0]], &samples[t[1]], &samples[t[2]]];
        let inputs = [("a", a), ("b", b), ("c", cc)];
        let left = space.heap5([&br(a, &br(b, cc)), &br(a, a), &br(b, &br(cc, a)), &br(b, b), &br(cc, &br(a, b))]);
        if !c.equal::<F>("⟨[a,[b,c]],[a,a],[b,[c,a]],[b,b],[c,[a,b]]⟩ = [c,c]", &inputs, &[], &left, &br(cc, cc)) {
            break;
        }
    }
    c.finish()
}

/// Both partial maps `[a,−]` and `[−,a]` preserve the heap and the action.
pub fn check_bi_affine<F: Field, S: AffineSpace<F>, B: Bracket<F>>(
    space: &S,
    bracket: &B,
    samples: &[Matrix<F>],
    scalars: &[F],
) -> AxiomReport {
    let mut c = Checker::new(format!("bi-affinity of {} on {}", bracket.name(), space.name()));
    if scalars.is_empty() {
        return c.finish();
    }
    let br = |x: &Matrix<F>, y: &Matrix<F>| bracket.apply(x, y);
    for (k, t) in index_tuples(samples.len(), 4).into_iter().enumerate() {
        let [a, x, y, z] = [&samples[t[0]], &samples[t[1]], &samples[t[2]], &samples[t[3]]];
        let l = &scalars[k % scalars.len()];
        let inputs = [("a", a), ("x", x), ("y", y), ("z", z)];
        let lam = [("λ", l)];
        let h = space.heap(x, y, z);
        let p = space.act(l, x, y);
        let ok = c.equal::<F>(
            "[a,⟨x,y,z⟩] = ⟨[a,x],[a,y],[a,z]⟩",
            &inputs,
            &[],
            &br(a, &h),
            &space.heap(&br(a, x), &br(a, y), &br(a, z)),
        ) && c.equal::<F>(
            "[⟨x,y,z⟩,a] = ⟨[x,a],[y,a],[z,a]⟩",
            &inputs,
            &[],
            &br(&h, a),
            &space.heap(&br(x, a), &br(y, a), &br(z, a)),
        ) && c.equal(
            "[a,λ▷_x y] = λ▷_{[a,x]}[a,y]",
            &inputs[..3],
            &lam,
            &br(a, &p),
            &space.act(l, &br(a, x), &br(a, y)),
        ) && c.equal(
            "[λ▷_x y,a] = λ▷_{[x,a]}[y,a]",
            &inputs[..3],
            &lam,
            &br(&p, a),
            &space.act(l, &br(x, a), &br(y, a)),
        );
        if !ok {
            break;
        }
    }
    c.finish()
}

/// `[x,x] = x` on the samples.
pub fn check_idempotent<F: Field, B: Bracket<F>>(bracket: &B, samples: &[Matrix<F>]) -> AxiomReport {
    let mut c = Checker::new(format!("idempotency of {}", bracket.name()));
    for x in samples {
        if !c.equal::<F>("[x,x] = x", &[("x", x)], &[], &bracket.apply(x, x), x) {
            break;
        }
    }
    c.finish()
}

/// `[a,b]_v = [a,b] − b`, available for brackets with `[a,a] = a`.
///
/// Values are ambient differences, i.e. vectors of `V(A_o)` written as
/// `x − o`; the zero matrix is the zero vector.
pub struct VectorValuedBracket<'b, F, B> {
    bracket: &'b B,
    o: Matrix<F>,
}

impl<'b, F: Field, B: Bracket<F>> VectorValuedBracket<'b, F, B> {
    /// Idempotency is verified on `o` and the samples.
    pub fn new(bracket: &'b B, o: Matrix<F>, samples: &[Matrix<F>]) -> Result<Self> {
        let probe: Vec<Matrix<F>> = std::iter::once(o.clone()).chain(samples.iter().cloned()).collect();
        if let Some(ce) = check_idempotent(bracket, &probe).counterexample {
            return Err(Error::NotIdempotent(Box::new(ce)));
        }
        Ok(VectorValuedBracket { bracket, o })
    }

    pub fn basepoint(&self) -> &Matrix<F> {
        &self.o
    }

    pub fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        &self.bracket.apply(a, b) - b
    }

    /// The same vector as a point of the carrier, `[a,b] − b + o`.
    pub fn apply_as_point(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        &self.apply(a, b) + &self.o
    }
}

/// One-shot form of [`VectorValuedBracket`]; idempotency is checked on
/// `o`, `a`, `b` and the extra samples.
pub fn vector_valued_bracket<F: Field, B: Bracket<F>>(
    bracket: &B,
    o: &Matrix<F>,
    a: &Matrix<F>,
    b: &Matrix<F>,
    samples: &[Matrix<F>],
) -> Result<Matrix<F>> {
    let probe: Vec<Matrix<F>> = [a.clone(), b.clone()].into_iter().chain(samples.iter().cloned()).collect();
    Ok(VectorValuedBracket::new(bracket, o.clone(), &probe)?.apply(a, b))
}

/// `[a,b]_o = ⟨[a,b], [a,o], [o,o], [o,b], o⟩`, a point of the carrier read
/// as a vector of `V(A_o)`.
pub fn reduce_bracket<F: Field, S: AffineSpace<F>, B: Bracket<F>>(
    space: &S,
    bracket: &B,
    o: &Matrix<F>,
    a: &Matrix<F>,
    b: &Matrix<F>,
) -> Result<Matrix<F>> {
    space.require("o", o)?;
    space.require("a", a)?;
    space.require("b", b)?;
    Ok(reduced_unchecked(space, bracket, o, a, b))
}

fn reduced_unchecked<F: Field, S: AffineSpace<F>, B: Bracket<F>>(
    space: &S,
    bracket: &B,
    o: &Matrix<F>,
    a: &Matrix<F>,
    b: &Matrix<F>,
) -> Matrix<F> {
    space.heap5([&bracket.apply(a, b), &bracket.apply(a, o), &bracket.apply(o, o), &bracket.apply(o, b), o])
}

/// The reduced bracket at a fixed basepoint, usable wherever a [`Bracket`] is.
pub struct ReducedBracket<'a, F, S, B> {
    pub space: &'a S,
    pub bracket: &'a B,
    pub o: Matrix<F>,
}

impl<F: Field, S: AffineSpace<F>, B: Bracket<F>> Bracket<F> for ReducedBracket<'_, F, S, B> {
    fn name(&self) -> String {
        format!("{} reduced at o", self.bracket.name())
    }

    fn apply(&self, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        reduced_unchecked(self.space, self.bracket, &self.o, a, b)
    }
}

/// Antisymmetry, Jacobi and bilinearity of `[−,−]_o` in `V(A_o)`.
pub fn check_reduced_lie<F: Field, S: AffineSpace<F>, B: Bracket<F>>(
    space: &S,
    bracket: &B,
    o: &Matrix<F>,
    samples: &[Matrix<F>],
    scalars: &[F],
) -> AxiomReport {
    let mut c = Checker::new(format!("Lie algebra at o for {} on {}", bracket.name(), space.name()));
    let br = |x: &Matrix<F>, y: &Matrix<F>| reduced_unchecked(space, bracket, o, x, y);
    let add = |x: &Matrix<F>, y: &Matrix<F>| space.heap(x, o, y);
    let neg = |x: &Matrix<F>| space.heap(o, x, o);
    let scale = |l: &F, x: &Matrix<F>| space.act(l, o, x);
    for (k, t) in index_tuples(samples.len(), 3).into_iter().enumerate() {
        let [a, b, cc] = [&samples[t[0]], &samples[t[1]], &samples[t[2]]];
        let inputs = [("o", o), ("a", a), ("b", b), ("c", cc)];
        let ab = br(a, b);
        let ok = c.holds::<F>("[a,b]_o ∈ A", &inputs[..3], &[], space.contains(&ab), &ab, "member of carrier")
            && c.equal::<F>("[a,b]_o = −[b,a]_o", &inputs[..3], &[], &ab, &neg(&br(b, a)))
            && c.equal::<F>("[a,a]_o = o", &inputs[..2], &[], &br(a, a), o)
            && c.equal::<F>(
                "[a,[b,c]_o]_o + [b,[c,a]_o]_o + [c,[a,b]_o]_o = o",
                &inputs,
                &[],
                &add(&add(&br(a, &br(b, cc)), &br(b, &br(cc, a))), &br(cc, &ab)),
                o,
            )
            && c.equal::<F>(
                "[a+b,c]_o = [a,c]_o + [b,c]_o",
                &inputs,
                &[],
                &br(&add(a, b), cc),
                &add(&br(a, cc), &br(b, cc)),
            )
            && c.equal::<F>("[a,b+c]_o = [a,b]_o + [a,c]_o", &inputs, &[], &br(a, &add(b, cc)), &add(&ab, &br(a, cc)));
        if !ok {
            break;
        }
        if let Some(l) = (!scalars.is_empty()).then(|| &scalars[k % scalars.len()]) {
            let lam = [("λ", l)];
            let ok = c.equal("[λa,b]_o = λ[a,b]_o", &inputs[..3], &lam, &br(&scale(l, a), b), &scale(l, &ab))
                && c.equal("[a,λb]_o = λ[a,b]_o", &inputs[..3], &lam, &br(a, &scale(l, b)), &scale(l, &ab));
            if !ok {
                break;
            }
        }
    }
    c.finish()
}

/// Whether the affine map of the line with `f(a) = λ▷_a b`, `f(b) = μ▷_a b`
/// carries `[a,b]₁` to `[f a, f b]₂` for the brackets `ζ₁▷` and `ζ₂▷`.
///
/// Compares the line coordinates `μζ₂ − λζ₂ + λ` and `μζ₁ − λζ₁ + λ`; on a
/// line, `t▷_a b = s▷_a b` exactly when `t = s`.
pub fn line_iso_obstruction<F: Field>(zeta1: &F, zeta2: &F, lambda: &F, mu: &F) -> bool {
    let side = |z: &F| mu.clone() * z.clone() - lambda.clone() * z.clone() + lambda.clone();
    side(zeta2) == side(zeta1)
}
