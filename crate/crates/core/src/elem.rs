//! Sparse linear combinations of normal-ordered monomials, and tensor products.

use std::collections::BTreeMap;
use std::fmt::Debug;

use crate::scalars::{Field, Scalar};

/// A normal-ordered monomial of some algebra.
pub trait Monomial: Clone + Ord + Debug + Send + Sync {
    fn unit(f: Field) -> Self;
    /// Normal form of the product `a * b`.
    fn product(f: Field, a: &Self, b: &Self) -> Elem<Self>;
}

/// Finite linear combination with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Elem<M: Monomial> {
    field: Field,
    terms: BTreeMap<M, Scalar>,
}

impl<M: Monomial> Elem<M> {
    pub fn zero(field: Field) -> Self {
        Elem { field, terms: BTreeMap::new() }
    }

    pub fn one(field: Field) -> Self {
        Self::mono(field, M::unit(field), field.one())
    }

    pub fn mono(field: Field, m: M, c: Scalar) -> Self {
        let mut e = Self::zero(field);
        e.add_term(m, c);
        e
    }

    pub fn scalar(field: Field, c: Scalar) -> Self {
        Self::mono(field, M::unit(field), c)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> &BTreeMap<M, Scalar> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&M, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, v) in &other.terms {
            r.add_term(m.clone(), v.clone());
        }
        r
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut r = self.clone();
        for (m, v) in &other.terms {
            r.add_term(m.clone(), -v);
        }
        r
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| -c)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.field);
        }
        self.map_coeffs(|v| v * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        let mut r = Self::zero(self.field);
        for (m, v) in &self.terms {
            r.add_term(m.clone(), f(v));
        }
        r
    }

    /// Apply a linear map given on monomials.
    pub fn map_linear<N: Monomial>(&self, target: Field, f: impl Fn(&M) -> Elem<N>) -> Elem<N> {
        let mut r = Elem::zero(target);
        for (m, v) in &self.terms {
            r.add_scaled(&f(m), v);
        }
        r
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut r = Self::zero(self.field);
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let c = x * y;
                for (m, v) in M::product(self.field, a, b).terms {
                    r.add_term(m, &v * &c);
                }
            }
        }
        r
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut r = Self::one(self.field);
        for _ in 0..n {
            r = r.mul(self);
        }
        r
    }

    /// Keep only terms satisfying the predicate.
    pub fn filter(&self, keep: impl Fn(&M) -> bool) -> Self {
        let mut r = Self::zero(self.field);
        for (m, v) in &self.terms {
            if keep(m) {
                r.terms.insert(m.clone(), v.clone());
            }
        }
        r
    }

    /// The scalar coefficient of the unit monomial.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&M::unit(self.field))
    }
}

impl<A: Monomial, B: Monomial> Monomial for (A, B) {
    fn unit(f: Field) -> Self {
        (A::unit(f), B::unit(f))
    }

    fn product(f: Field, a: &Self, b: &Self) -> Elem<Self> {
        let l = A::product(f, &a.0, &b.0);
        let r = B::product(f, &a.1, &b.1);
        let mut out = Elem::zero(f);
        for (x, u) in l.iter() {
            for (y, v) in r.iter() {
                out.add_term((x.clone(), y.clone()), u * v);
            }
        }
        out
    }
}

/// Elementary tensor a ⊗ b.
pub fn tensor<A: Monomial, B: Monomial>(a: &Elem<A>, b: &Elem<B>) -> Elem<(A, B)> {
    let mut out = Elem::zero(a.field());
    for (x, u) in a.iter() {
        for (y, v) in b.iter() {
            out.add_term((x.clone(), y.clone()), u * v);
        }
    }
    out
}

/// σ(a ⊗ b) = b ⊗ a.
pub fn swap<A: Monomial, B: Monomial>(t: &Elem<(A, B)>) -> Elem<(B, A)> {
    let mut out = Elem::zero(t.field());
    for ((a, b), v) in t.iter() {
        out.add_term((b.clone(), a.clone()), v.clone());
    }
    out
}

/// Multiplication map A ⊗ A → A.
pub fn multiply<M: Monomial>(t: &Elem<(M, M)>) -> Elem<M> {
    let f = t.field();
    let mut out = Elem::zero(f);
    for ((a, b), v) in t.iter() {
        out.add_scaled(&M::product(f, a, b), v);
    }
    out
}

/// Apply f to the left leg and g to the right leg.
pub fn map_legs<A, B, C, D>(
    t: &Elem<(A, B)>,
    f: impl Fn(&A) -> Elem<C>,
    g: impl Fn(&B) -> Elem<D>,
) -> Elem<(C, D)>
where
    A: Monomial,
    B: Monomial,
    C: Monomial,
    D: Monomial,
{
    let mut out = Elem::zero(t.field());
    for ((a, b), v) in t.iter() {
        out.add_scaled(&tensor(&f(a), &g(b)), v);
    }
    out
}

/// Contract the left leg with a scalar-valued functional.
pub fn contract_left<A: Monomial, B: Monomial>(
    t: &Elem<(A, B)>,
    phi: impl Fn(&A) -> Scalar,
) -> Elem<B> {
    let mut out = Elem::zero(t.field());
    for ((a, b), v) in t.iter() {
        let c = phi(a);
        if !c.is_zero() {
            out.add_term(b.clone(), &c * v);
        }
    }
    out
}

/// Contract the right leg with a scalar-valued functional.
pub fn contract_right<A: Monomial, B: Monomial>(
    t: &Elem<(A, B)>,
    phi: impl Fn(&B) -> Scalar,
) -> Elem<A> {
    let mut out = Elem::zero(t.field());
    for ((a, b), v) in t.iter() {
        let c = phi(b);
        if !c.is_zero() {
            out.add_term(a.clone(), &c * v);
        }
    }
    out
}

/// a ⊗ (b ⊗ c) ↦ (a ⊗ b) ⊗ c.
pub fn assoc_left<A: Monomial, B: Monomial, C: Monomial>(t: &Elem<(A, (B, C))>) -> Elem<((A, B), C)> {
    let mut out = Elem::zero(t.field());
    for ((a, (b, c)), v) in t.iter() {
        out.add_term(((a.clone(), b.clone()), c.clone()), v.clone());
    }
    out
}
