//! The affine line through two distinct points, with coordinates.
//!
//! Points are `t ▷_a b` for scalars `t`; the coordinate of a point is that
//! `t`. An affine map of the line is fixed by the images of `a` and `b`.

use crate::affine::{action, AffineSpace};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::Matrix;

#[derive(Clone, Debug, PartialEq)]
pub struct AffineLine<F> {
    a: Matrix<F>,
    b: Matrix<F>,
    direction: Matrix<F>,
    /// index of a nonzero entry of `b − a`
    pivot: usize,
}

impl<F: Field> AffineLine<F> {
    pub fn new(a: Matrix<F>, b: Matrix<F>) -> Result<Self> {
        let direction = b.try_sub(&a)?;
        let pivot = direction
            .entries()
            .iter()
            .position(|x| !x.is_zero())
            .ok_or_else(|| Error::NotMember { role: "b".into(), carrier: "a line (b must differ from a)".into() })?;
        Ok(AffineLine { a, b, direction, pivot })
    }

    pub fn a(&self) -> &Matrix<F> {
        &self.a
    }

    pub fn b(&self) -> &Matrix<F> {
        &self.b
    }

    /// `t ▷_a b`
    pub fn point(&self, t: &F) -> Matrix<F> {
        action(t, &self.a, &self.b).expect("a and b share a shape")
    }

    pub fn coordinate(&self, m: &Matrix<F>) -> Option<F> {
        if m.shape() != self.a.shape() {
            return None;
        }
        let num = m.entries()[self.pivot].clone() - self.a.entries()[self.pivot].clone();
        let t = num.checked_div(&self.direction.entries()[self.pivot]).ok()?;
        (self.point(&t) == *m).then_some(t)
    }
}

impl<F: Field> AffineSpace<F> for AffineLine<F> {
    fn name(&self) -> String {
        "affine line".into()
    }

    fn contains(&self, m: &Matrix<F>) -> bool {
        self.coordinate(m).is_some()
    }
}

/// The affine map with `f(a) = λ ▷_a b` and `f(b) = μ ▷_a b`; in coordinates
/// `t ↦ λ + t(μ − λ)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LineMap<F> {
    pub lambda: F,
    pub mu: F,
}

impl<F: Field> LineMap<F> {
    pub fn on_coordinate(&self, t: &F) -> F {
        self.lambda.clone() + t.clone() * (self.mu.clone() - self.lambda.clone())
    }

    pub fn apply(&self, line: &AffineLine<F>, m: &Matrix<F>) -> Result<Matrix<F>> {
        let t = line.coordinate(m).ok_or_else(|| Error::NotMember { role: "point".into(), carrier: line.name() })?;
        Ok(line.point(&self.on_coordinate(&t)))
    }

    /// Surjective exactly when `λ ≠ μ`.
    pub fn is_onto(&self) -> bool {
        self.lambda != self.mu
    }

    /// `[f a, f b]₂ = f([a,b]₁)` for `[x,y]ᵢ = ζᵢ ▷_x y`, computed on the
    /// points themselves.
    pub fn preserves_on_generators(&self, line: &AffineLine<F>, zeta1: &F, zeta2: &F) -> Result<bool> {
        let fa = self.apply(line, line.a())?;
        let fb = self.apply(line, line.b())?;
        let left = line.act(zeta2, &fa, &fb);
        let right = self.apply(line, &line.act(zeta1, line.a(), line.b()))?;
        Ok(left == right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::sna::Generator;

    fn line() -> AffineLine<Rational> {
        AffineLine::new(Generator::A00_0.matrix(), Generator::A01_0.matrix()).unwrap()
    }

    #[test]
    fn coordinates_round_trip() {
        let l = line();
        for k in -5..5 {
            let t = Rational::new(k, 3).unwrap();
            assert_eq!(l.coordinate(&l.point(&t)), Some(t));
        }
        assert_eq!(l.coordinate(&Generator::A10_0.matrix()), None);
        assert!(AffineLine::new(l.a().clone(), l.a().clone()).is_err());
    }

    #[test]
    fn distinct_coordinates_give_distinct_points() {
        let l = line();
        let (s, t) = (Rational::from(2), Rational::new(5, 2).unwrap());
        assert_ne!(l.point(&s), l.point(&t));
    }

    #[test]
    fn map_fixes_generators() {
        let l = line();
        let f = LineMap { lambda: Rational::from(3), mu: Rational::from(-1) };
        assert_eq!(f.apply(&l, l.a()).unwrap(), l.point(&Rational::from(3)));
        assert_eq!(f.apply(&l, l.b()).unwrap(), l.point(&Rational::from(-1)));
        assert!(f.is_onto());
        assert!(!LineMap { lambda: Rational::from(2), mu: Rational::from(2) }.is_onto());
    }

    #[test]
    fn line_map_is_affine() {
        let l = line();
        let f = LineMap { lambda: Rational::new(1, 2).unwrap(), mu: Rational::from(4) };
        let pts: Vec<_> = (-4..6).map(|k| l.point(&Rational::new(k, 2).unwrap())).collect();
        let r = crate::affine::is_affine_map(
            &l,
            &l,
            |m: &Matrix<Rational>| f.apply(&l, m).unwrap(),
            &pts,
            &crate::affine::default_scalars(),
        );
        assert!(r.passed(), "{r}");
    }
}
