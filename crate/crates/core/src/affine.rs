//! Affine spaces given intrinsically by a heap operation and a scalar action.
//!
//! A carrier is a membership predicate on matrices together with the two
//! operations. The default operations are the ambient ones,
//! `⟨a,b,c⟩ = a − b + c` and `λ ▷_a b = λb + (1−λ)a`; a carrier only has to
//! say which matrices belong to it. Closure is never assumed: the checkers
//! below test it alongside the axioms.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, MatrixError};
use crate::report::{index_tuples, AxiomReport, Checker};

/// `a − b + c` in ambient matrix arithmetic.
pub fn heap_op<F: Field>(a: &Matrix<F>, b: &Matrix<F>, c: &Matrix<F>) -> Result<Matrix<F>, MatrixError> {
    a.try_sub(b)?.try_add(c)
}

/// `λ ▷_a b = λb + (1−λ)a`.
pub fn action<F: Field>(lambda: &F, a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>, MatrixError> {
    b.scale(lambda).try_add(&a.scale(&(F::one() - lambda.clone())))
}

/// A set of matrices carrying a heap operation and a scalar action.
///
/// Members of one carrier share a shape; the provided operations panic if
/// handed matrices of different shapes.
pub trait AffineSpace<F: Field> {
    fn name(&self) -> String;

    fn contains(&self, m: &Matrix<F>) -> bool;

    fn heap(&self, a: &Matrix<F>, b: &Matrix<F>, c: &Matrix<F>) -> Matrix<F> {
        heap_op(a, b, c).expect("carrier members share a shape")
    }

    fn act(&self, lambda: &F, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        action(lambda, a, b).expect("carrier members share a shape")
    }

    /// `⟨x₁, x₂, x₃, x₄, x₅⟩`; bracketing is irrelevant by para-associativity.
    fn heap5(&self, xs: [&Matrix<F>; 5]) -> Matrix<F> {
        let inner = self.heap(xs[0], xs[1], xs[2]);
        self.heap(&inner, xs[3], xs[4])
    }

    fn require(&self, role: &str, m: &Matrix<F>) -> Result<()> {
        if self.contains(m) {
            Ok(())
        } else {
            Err(Error::NotMember { role: role.to_string(), carrier: self.name() })
        }
    }
}

impl<F: Field, S: AffineSpace<F> + ?Sized> AffineSpace<F> for &S {
    fn name(&self) -> String {
        (**self).name()
    }
    fn contains(&self, m: &Matrix<F>) -> bool {
        (**self).contains(m)
    }
    fn heap(&self, a: &Matrix<F>, b: &Matrix<F>, c: &Matrix<F>) -> Matrix<F> {
        (**self).heap(a, b, c)
    }
    fn act(&self, lambda: &F, a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
        (**self).act(lambda, a, b)
    }
}

/// All matrices of a fixed shape. This is the abelian-group heap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AllMatrices {
    pub rows: usize,
    pub cols: usize,
}

impl<F: Field> AffineSpace<F> for AllMatrices {
    fn name(&self) -> String {
        format!("M({}x{})", self.rows, self.cols)
    }

    fn contains(&self, m: &Matrix<F>) -> bool {
        m.shape() == (self.rows, self.cols)
    }
}

// ---------------------------------------------------------------------------
// Retracts: the group A_o and the vector space V(A_o)
// ---------------------------------------------------------------------------

/// `a + b = ⟨a, o, b⟩` in the group `A_o`.
pub fn retract_add<F: Field, S: AffineSpace<F>>(
    space: &S,
    o: &Matrix<F>,
    a: &Matrix<F>,
    b: &Matrix<F>,
) -> Result<Matrix<F>> {
    space.require("o", o)?;
    space.require("a", a)?;
    space.require("b", b)?;
    Ok(space.heap(a, o, b))
}

/// `−a = ⟨o, a, o⟩` in the group `A_o`.
pub fn retract_neg<F: Field, S: AffineSpace<F>>(space: &S, o: &Matrix<F>, a: &Matrix<F>) -> Result<Matrix<F>> {
    space.require("o", o)?;
    space.require("a", a)?;
    Ok(space.heap(o, a, o))
}

/// `λ·a = λ ▷_o a` in `V(A_o)`.
pub fn vspace_scale<F: Field, S: AffineSpace<F>>(
    space: &S,
    o: &Matrix<F>,
    lambda: &F,
    a: &Matrix<F>,
) -> Result<Matrix<F>> {
    space.require("o", o)?;
    space.require("a", a)?;
    Ok(space.act(lambda, o, a))
}

/// The vector space `V(A_o)` attached to a basepoint. Its vectors are the
/// points of the carrier; `o` is the zero vector.
#[derive(Clone, Debug)]
pub struct VectorView<'s, F, S> {
    space: &'s S,
    o: Matrix<F>,
}

impl<'s, F: Field, S: AffineSpace<F>> VectorView<'s, F, S> {
    pub fn new(space: &'s S, o: Matrix<F>) -> Result<Self> {
        space.require("basepoint", &o)?;
        Ok(VectorView { space, o })
    }

    pub fn basepoint(&self) -> &Matrix<F> {
        &self.o
    }

    pub fn space(&self) -> &'s S {
        self.space
    }

    pub fn zero(&self) -> Matrix<F> {
        self.o.clone()
    }

    pub fn add(&self, a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
        retract_add(self.space, &self.o, a, b)
    }

    pub fn neg(&self, a: &Matrix<F>) -> Result<Matrix<F>> {
        retract_neg(self.space, &self.o, a)
    }

    pub fn sub(&self, a: &Matrix<F>, b: &Matrix<F>) -> Result<Matrix<F>> {
        self.add(a, &self.neg(b)?)
    }

    pub fn scale(&self, lambda: &F, a: &Matrix<F>) -> Result<Matrix<F>> {
        vspace_scale(self.space, &self.o, lambda, a)
    }

    /// `Σ λᵢ·xᵢ` in `V(A_o)`.
    pub fn combination(&self, terms: &[(F, &Matrix<F>)]) -> Result<Matrix<F>> {
        terms.iter().try_fold(self.zero(), |acc, (l, x)| self.add(&acc, &self.scale(l, x)?))
    }
}

// ---------------------------------------------------------------------------
// Affine maps
// ---------------------------------------------------------------------------

/// The linear part `a ↦ f(a) − f(o)` of an affine map, as ambient matrix
/// differences. The zero difference corresponds to the basepoint `f(o)` of
/// the target.
pub struct Linearisation<F, M> {
    map: M,
    o: Matrix<F>,
    image_of_o: Matrix<F>,
}

impl<F: Field, M: Fn(&Matrix<F>) -> Matrix<F>> Linearisation<F, M> {
    pub fn basepoint(&self) -> &Matrix<F> {
        &self.o
    }

    pub fn image_basepoint(&self) -> &Matrix<F> {
        &self.image_of_o
    }

    pub fn apply(&self, a: &Matrix<F>) -> Matrix<F> {
        &(self.map)(a) - &self.image_of_o
    }
}

/// Linearise `f` at `o` after checking on the samples that `f` is affine.
pub fn linearise<F, A, B, M>(
    domain: &A,
    codomain: &B,
    f: M,
    o: &Matrix<F>,
    samples: &[Matrix<F>],
    scalars: &[F],
) -> Result<Linearisation<F, M>>
where
    F: Field,
    A: AffineSpace<F>,
    B: AffineSpace<F>,
    M: Fn(&Matrix<F>) -> Matrix<F>,
{
    domain.require("basepoint", o)?;
    let report = is_affine_map(domain, codomain, &f, samples, scalars);
    if !report.passed() {
        return Err(Error::NotAffine(Box::new(report)));
    }
    let image_of_o = f(o);
    Ok(Linearisation { map: f, o: o.clone(), image_of_o })
}

// ---------------------------------------------------------------------------
// Axiom suites
// ---------------------------------------------------------------------------

/// `{0, 1, −1, 1/2, 2/3}`.
pub fn default_scalars<F: Field>() -> Vec<F> {
    let half = F::one().checked_div(&F::from_i64(2)).expect("char 0");
    let two_thirds = F::from_i64(2).checked_div(&F::from_i64(3)).expect("char 0");
    vec![F::zero(), F::one(), -F::one(), half, two_thirds]
}

fn with_degenerate_scalars<F: Field>(scalars: &[F]) -> Vec<F> {
    let mut out: Vec<F> = Vec::with_capacity(scalars.len() + 3);
    for s in [F::zero(), F::one(), -F::one()].into_iter().chain(scalars.iter().cloned()) {
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out
}

/// Scalar triples paired with sample tuples so that every triple and every
/// tuple is visited at least once.
fn scalar_schedule(tuples: usize, k: usize) -> impl Iterator<Item = (usize, [usize; 3])> {
    let total = tuples.max(k * k * k);
    (0..total).map(move |i| {
        let j = i % (k * k * k);
        (i % tuples.max(1), [j % k, (j / k) % k, j / (k * k)])
    })
}

/// Para-associativity, bracket redistribution, `⟨a,a,b⟩ = b`, symmetry and closure.
pub fn check_heap_axioms<F: Field, S: AffineSpace<F>>(space: &S, samples: &[Matrix<F>]) -> AxiomReport {
    let mut c = Checker::new(format!("heap axioms on {}", space.name()));
    for t in index_tuples(samples.len(), 5) {
        let [a, b, cc, d, e] = [&samples[t[0]], &samples[t[1]], &samples[t[2]], &samples[t[3]], &samples[t[4]]];
        let inputs = [("a", a), ("b", b), ("c", cc), ("d", d), ("e", e)];
        let abc = space.heap(a, b, cc);
        if !c.holds::<F>("⟨a,b,c⟩ ∈ A", &inputs[..3], &[], space.contains(&abc), &abc, "member of carrier") {
            break;
        }
        let left = space.heap(&abc, d, e);
        let right = space.heap(a, b, &space.heap(cc, d, e));
        if !c.equal::<F>("⟨⟨a,b,c⟩,d,e⟩ = ⟨a,b,⟨c,d,e⟩⟩", &inputs, &[], &left, &right) {
            break;
        }
        let mid = space.heap(a, &space.heap(d, cc, b), e);
        if !c.equal::<F>("⟨a,⟨d,c,b⟩,e⟩ = ⟨⟨a,b,c⟩,d,e⟩", &inputs, &[], &mid, &left) {
            break;
        }
        if !c.equal::<F>("⟨a,a,b⟩ = b", &inputs[..2], &[], &space.heap(a, a, b), b) {
            break;
        }
        if !c.equal::<F>("⟨a,b,c⟩ = ⟨c,b,a⟩", &inputs[..3], &[], &abc, &space.heap(cc, b, a)) {
            break;
        }
    }
    c.finish()
}

/// The action axioms, including `1 ▷ b = b`, `0 ▷ b = a` and base change.
/// The probe set is augmented with 0, 1 and −1.
pub fn check_action_axioms<F: Field, S: AffineSpace<F>>(
    space: &S,
    samples: &[Matrix<F>],
    scalars: &[F],
) -> AxiomReport {
    let scalars = with_degenerate_scalars(scalars);
    let mut c = Checker::new(format!("action axioms on {}", space.name()));
    let tuples = index_tuples(samples.len(), 4);
    let (zero, one) = (F::zero(), F::one());
    for (ti, [i, j, k]) in scalar_schedule(tuples.len(), scalars.len()) {
        let Some(t) = tuples.get(ti) else { break };
        let [a, b, cc, d] = [&samples[t[0]], &samples[t[1]], &samples[t[2]], &samples[t[3]]];
        let (l, m, n) = (&scalars[i], &scalars[j], &scalars[k]);
        let inputs = [("a", a), ("b", b), ("c", cc), ("d", d)];
        let lm = [("λ", l), ("μ", m), ("ν", n)];

        let la_b = space.act(l, a, b);
        if !c.holds::<F>("λ▷_a b ∈ A", &inputs[..2], &lm[..1], space.contains(&la_b), &la_b, "member of carrier") {
            break;
        }
        let combo = l.clone() - m.clone() + n.clone();
        let left = space.act(&combo, a, b);
        let right = space.heap(&la_b, &space.act(m, a, b), &space.act(n, a, b));
        if !c.equal("(λ−μ+ν)▷_a b = ⟨λ▷_a b, μ▷_a b, ν▷_a b⟩", &inputs[..2], &lm, &left, &right) {
            break;
        }
        let left = space.act(l, a, &space.heap(b, cc, d));
        let right = space.heap(&la_b, &space.act(l, a, cc), &space.act(l, a, d));
        if !c.equal("λ▷_a⟨b,c,d⟩ = ⟨λ▷_a b, λ▷_a c, λ▷_a d⟩", &inputs, &lm[..1], &left, &right) {
            break;
        }
        let left = space.act(&(l.clone() * m.clone()), a, b);
        let right = space.act(l, a, &space.act(m, a, b));
        if !c.equal("(λμ)▷_a b = λ▷_a(μ▷_a b)", &inputs[..2], &lm[..2], &left, &right) {
            break;
        }
        if !c.equal::<F>("1▷_a b = b", &inputs[..2], &[], &space.act(&one, a, b), b) {
            break;
        }
        if !c.equal::<F>("0▷_a b = a", &inputs[..2], &[], &space.act(&zero, a, b), a) {
            break;
        }
        let right = space.heap(&space.act(l, cc, b), &space.act(l, cc, a), a);
        if !c.equal("λ▷_a b = ⟨λ▷_c b, λ▷_c a, a⟩", &inputs[..3], &lm[..1], &la_b, &right) {
            break;
        }
    }
    c.finish()
}

/// `f⟨a,b,c⟩ = ⟨fa, fb, fc⟩` and `f(λ▷_a b) = λ▷_{fa} fb`, plus `f(A) ⊆ B`.
pub fn is_affine_map<F, A, B, M>(domain: &A, codomain: &B, f: M, samples: &[Matrix<F>], scalars: &[F]) -> AxiomReport
where
    F: Field,
    A: AffineSpace<F>,
    B: AffineSpace<F>,
    M: Fn(&Matrix<F>) -> Matrix<F>,
{
    let scalars = with_degenerate_scalars(scalars);
    let mut c = Checker::new(format!("affine map {} → {}", domain.name(), codomain.name()));
    let tuples = index_tuples(samples.len(), 3);
    let rounds = if tuples.is_empty() { 0 } else { tuples.len().max(scalars.len()) };
    for idx in 0..rounds {
        let t = &tuples[idx % tuples.len()];
        let [a, b, cc] = [&samples[t[0]], &samples[t[1]], &samples[t[2]]];
        let l = &scalars[idx % scalars.len()];
        let inputs = [("a", a), ("b", b), ("c", cc)];
        let (fa, fb, fc) = (f(a), f(b), f(cc));
        if !c.holds::<F>("f(a) ∈ B", &inputs[..1], &[], codomain.contains(&fa), &fa, "member of codomain") {
            break;
        }
        let left = f(&domain.heap(a, b, cc));
        let right = codomain.heap(&fa, &fb, &fc);
        if !c.equal::<F>("f⟨a,b,c⟩ = ⟨f a, f b, f c⟩", &inputs, &[], &left, &right) {
            break;
        }
        let left = f(&domain.act(l, a, b));
        let right = codomain.act(l, &fa, &fb);
        if !c.equal("f(λ▷_a b) = λ▷_{f a} f b", &inputs[..2], &[("λ", l)], &left, &right) {
            break;
        }
    }
    c.finish()
}

/// Abelian group axioms of the retract `A_o`.
pub fn check_retract_group<F: Field, S: AffineSpace<F>>(
    space: &S,
    o: &Matrix<F>,
    samples: &[Matrix<F>],
) -> AxiomReport {
    let mut c = Checker::new(format!("group retract of {} at o", space.name()));
    let add = |a: &Matrix<F>, b: &Matrix<F>| space.heap(a, o, b);
    let neg = |a: &Matrix<F>| space.heap(o, a, o);
    for t in index_tuples(samples.len(), 3) {
        let [a, b, cc] = [&samples[t[0]], &samples[t[1]], &samples[t[2]]];
        let inputs = [("o", o), ("a", a), ("b", b), ("c", cc)];
        let ok = c.equal::<F>("(a+b)+c = a+(b+c)", &inputs, &[], &add(&add(a, b), cc), &add(a, &add(b, cc)))
            && c.equal::<F>("a+b = b+a", &inputs[..3], &[], &add(a, b), &add(b, a))
            && c.equal::<F>("o+a = a", &inputs[..2], &[], &add(o, a), a)
            && c.equal::<F>("a+(−a) = o", &inputs[..2], &[], &add(a, &neg(a)), o);
        if !ok {
            break;
        }
    }
    c.finish()
}

/// Additivity and homogeneity of a linearisation with respect to `V(A_o)`.
pub fn check_linearity<F, S, M>(
    domain: &S,
    lin: &Linearisation<F, M>,
    samples: &[Matrix<F>],
    scalars: &[F],
) -> AxiomReport
where
    F: Field,
    S: AffineSpace<F>,
    M: Fn(&Matrix<F>) -> Matrix<F>,
{
    let o = lin.basepoint();
    let mut c = Checker::new("linearisation");
    for t in index_tuples(samples.len(), 2) {
        let [a, b] = [&samples[t[0]], &samples[t[1]]];
        let inputs = [("o", o), ("a", a), ("b", b)];
        let sum = domain.heap(a, o, b);
        if !c.equal::<F>("L(a +_o b) = L(a) + L(b)", &inputs, &[], &lin.apply(&sum), &(&lin.apply(a) + &lin.apply(b))) {
            break;
        }
        for l in scalars {
            let scaled = domain.act(l, o, a);
            if !c.equal("L(λ·_o a) = λ L(a)", &inputs[..2], &[("λ", l)], &lin.apply(&scaled), &lin.apply(a).scale(l))
            {
                break;
            }
        }
    }
    c.finish()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type M = Matrix<Rational>;

    fn random_samples(n: usize, count: usize, seed: u64) -> Vec<M> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..count).map(|_| M::new(n, n, (0..n * n).map(|_| Rational::random(&mut rng, 6)).collect()).unwrap()).collect()
    }

    struct BrokenHeap;
    impl AffineSpace<Rational> for BrokenHeap {
        fn name(&self) -> String {
            "broken heap".into()
        }
        fn contains(&self, m: &M) -> bool {
            m.shape() == (3, 3)
        }
        fn heap(&self, a: &M, b: &M, c: &M) -> M {
            &(a - b) + &c.scale(&Rational::from(2))
        }
    }

    struct BrokenAction;
    impl AffineSpace<Rational> for BrokenAction {
        fn name(&self) -> String {
            "broken action".into()
        }
        fn contains(&self, m: &M) -> bool {
            m.shape() == (3, 3)
        }
        fn act(&self, l: &Rational, a: &M, b: &M) -> M {
            &b.scale(l) + &a.scale(&(Rational::from(1) + l.clone()))
        }
    }

    #[test]
    fn ambient_ops() {
        let s = random_samples(3, 3, 1);
        assert_eq!(heap_op(&s[0], &s[0], &s[1]).unwrap(), s[1]);
        assert_eq!(heap_op(&s[0], &s[1], &s[1]).unwrap(), s[0]);
        assert_eq!(action(&Rational::from(1), &s[0], &s[1]).unwrap(), s[1]);
        assert_eq!(action(&Rational::from(0), &s[0], &s[1]).unwrap(), s[0]);
        assert!(heap_op(&s[0], &M::zeros(2, 2), &s[1]).is_err());
    }

    #[test]
    fn full_matrix_space_passes() {
        let space = AllMatrices { rows: 3, cols: 3 };
        let s = random_samples(3, 30, 2);
        assert!(check_heap_axioms(&space, &s).passed());
        assert!(check_action_axioms(&space, &s, &default_scalars()).passed());
        assert!(check_retract_group(&space, &s[0], &s).passed());
    }

    #[test]
    fn broken_heap_is_caught() {
        let r = check_heap_axioms(&BrokenHeap, &random_samples(3, 10, 3));
        let ce = r.counterexample.expect("mutation must be caught");
        assert!(!ce.inputs.is_empty());
        assert_ne!(ce.lhs, ce.rhs);
    }

    #[test]
    fn broken_action_is_caught() {
        let r = check_action_axioms(&BrokenAction, &random_samples(3, 10, 4), &[]);
        assert!(!r.passed());
    }

    #[test]
    fn degenerate_scalar_triple() {
        // λ = μ = 0: both sides of the associativity law are a
        let s = random_samples(3, 2, 5);
        let z = Rational::from(0);
        let space = AllMatrices { rows: 3, cols: 3 };
        let left = space.act(&(z.clone() * z.clone()), &s[0], &s[1]);
        let right = space.act(&z, &s[0], &space.act(&z, &s[0], &s[1]));
        assert_eq!(left, s[0]);
        assert_eq!(right, s[0]);
    }

    #[test]
    fn retract_ops() {
        let space = AllMatrices { rows: 3, cols: 3 };
        let s = random_samples(3, 3, 6);
        let (o, a, b) = (&s[0], &s[1], &s[2]);
        assert_eq!(retract_add(&space, o, o, a).unwrap(), *a);
        let na = retract_neg(&space, o, a).unwrap();
        assert_eq!(retract_add(&space, o, a, &na).unwrap(), *o);
        assert_eq!(retract_add(&space, o, a, b).unwrap(), &(a - o) + b);
        assert_eq!(vspace_scale(&space, o, &Rational::from(1), a).unwrap(), *a);
        assert_eq!(vspace_scale(&space, o, &Rational::from(0), a).unwrap(), *o);
        assert_eq!(vspace_scale(&space, o, &Rational::from(2), a).unwrap(), &a.scale(&Rational::from(2)) - o);
        assert!(matches!(retract_add(&space, o, &M::zeros(2, 2), a), Err(Error::NotMember { .. })));
    }

    #[test]
    fn linearisations() {
        let space = AllMatrices { rows: 3, cols: 3 };
        let s = random_samples(3, 12, 7);
        let (o, d) = (s[0].clone(), s[1].clone());
        let scalars = default_scalars::<Rational>();

        let id = linearise(&space, &space, |a: &M| a.clone(), &o, &s, &scalars).unwrap();
        assert_eq!(id.apply(&s[3]), &s[3] - &o);

        let c = s[2].clone();
        let constant = linearise(&space, &space, move |_: &M| c.clone(), &o, &s, &scalars).unwrap();
        assert!(constant.apply(&s[3]).is_zero());

        let o2 = o.clone();
        let translate = linearise(&space, &space, move |a: &M| heap_op(a, &o2, &d).unwrap(), &o, &s, &scalars).unwrap();
        assert_eq!(translate.apply(&s[4]), &s[4] - &o);
        assert!(check_linearity(&space, &translate, &s, &scalars).passed());

        let square = linearise(&space, &space, |a: &M| a * a, &o, &s, &scalars);
        assert!(matches!(square, Err(Error::NotAffine(_))));
    }

    #[test]
    fn vector_view_combination() {
        let space = AllMatrices { rows: 3, cols: 3 };
        let s = random_samples(3, 3, 8);
        let v = VectorView::new(&space, s[0].clone()).unwrap();
        let two = Rational::from(2);
        let three = Rational::from(3);
        let combo = v.combination(&[(two.clone(), &s[1]), (three.clone(), &s[2])]).unwrap();
        // in ambient terms: o + 2(s1 − o) + 3(s2 − o)
        let expect = &(&s[0] + &(&s[1] - &s[0]).scale(&two)) + &(&s[2] - &s[0]).scale(&three);
        assert_eq!(combo, expect);
        assert_eq!(v.sub(&s[1], &s[1]).unwrap(), s[0]);
    }
}
