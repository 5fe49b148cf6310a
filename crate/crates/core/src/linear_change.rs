//! Seeded random linear changes of coordinates.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial, Ring};

pub const MAX_DRAWS: usize = 16;

/// Fields smaller than this make "general" draws unreliable.
pub const MIN_GENERIC_FIELD: u64 = 1 << 16;

/// Warning text when the field is too small for random genericity.
pub fn genericity_warning<F: Field>(field: &F) -> Option<String> {
    match field.size() {
        Some(q) if q < MIN_GENERIC_FIELD => Some(format!(
            "field {} has fewer than 2^16 elements; random choices may fail to be general",
            field.name()
        )),
        _ => None,
    }
}

pub fn rng_for(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An invertible matrix acting on the variables: `x_i -> sum_j m[i][j] x_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearChange<F: Field> {
    field: F,
    matrix: Vec<Vec<F::Elem>>,
    seed: u64,
}

impl<F: Field> LinearChange<F> {
    /// Uniformly random invertible matrix; singular draws are retried.
    pub fn random(ring: &Ring<F>, seed: u64) -> Result<Self> {
        let field = ring.field().clone();
        let n = ring.nvars();
        let mut rng = rng_for(seed);
        for _ in 0..MAX_DRAWS {
            let m: Vec<Vec<F::Elem>> = (0..n)
                .map(|_| (0..n).map(|_| field.random(&mut rng)).collect())
                .collect();
            if !field.is_zero(&linalg::determinant(&field, m.clone())) {
                return Ok(LinearChange {
                    field,
                    matrix: m,
                    seed,
                });
            }
        }
        Err(Error::SingularDraw(MAX_DRAWS))
    }

    /// Identity except for the last row, a random linear form with nonzero
    /// last coefficient. Setting the new last coordinate to zero cuts with a
    /// random hyperplane.
    pub fn hyperplane(ring: &Ring<F>, seed: u64) -> Result<Self> {
        let field = ring.field().clone();
        let n = ring.nvars();
        let mut rng = rng_for(seed);
        for _ in 0..MAX_DRAWS {
            let last: Vec<F::Elem> = (0..n).map(|_| field.random(&mut rng)).collect();
            if field.is_zero(&last[n - 1]) {
                continue;
            }
            let mut m: Vec<Vec<F::Elem>> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { field.one() } else { field.zero() }).collect())
                .collect();
            m[n - 1] = last;
            return Ok(LinearChange {
                field,
                matrix: m,
                seed,
            });
        }
        Err(Error::SingularDraw(MAX_DRAWS))
    }

    pub fn from_matrix(field: F, matrix: Vec<Vec<F::Elem>>, seed: u64) -> Result<Self> {
        if field.is_zero(&linalg::determinant(&field, matrix.clone())) {
            return Err(Error::SingularDraw(1));
        }
        Ok(LinearChange { field, matrix, seed })
    }

    pub fn matrix(&self) -> &[Vec<F::Elem>] {
        &self.matrix
    }
    pub fn seed(&self) -> u64 {
        self.seed
    }
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn inverse(&self) -> Self {
        LinearChange {
            field: self.field.clone(),
            matrix: linalg::inverse(&self.field, &self.matrix).expect("invertible by construction"),
            seed: self.seed,
        }
    }

    /// The row `i` as a linear form.
    pub fn row_form(&self, ring: &Ring<F>, i: usize) -> Polynomial<F> {
        linear_form(ring, &self.matrix[i])
    }

    /// Images of the variables, as linear forms of `target`.
    fn images(&self, target: &Ring<F>) -> Vec<Polynomial<F>> {
        (0..self.size()).map(|i| linear_form(target, &self.matrix[i])).collect()
    }

    pub fn apply(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        if f.ring().nvars() != self.size() {
            return Err(Error::Arity {
                expected: self.size(),
                got: f.ring().nvars(),
            });
        }
        f.substitute(&self.images(f.ring()))
    }

    /// Substitution that first undoes the change and then sets the last new
    /// coordinate to zero; images live in `target` (one variable fewer).
    pub fn section_images(&self, target: &Ring<F>) -> Vec<Polynomial<F>> {
        let inv = self.inverse();
        let n = self.size();
        assert_eq!(target.nvars() + 1, n);
        (0..n)
            .map(|i| linear_form(target, &inv.matrix[i][..n - 1]))
            .collect()
    }
}

pub fn linear_form<F: Field>(ring: &Ring<F>, coeffs: &[F::Elem]) -> Polynomial<F> {
    let n = ring.nvars();
    let terms = coeffs
        .iter()
        .enumerate()
        .map(|(j, c)| (Monomial::var(n, j, 1).expect("exponent 1"), c.clone()))
        .collect();
    Polynomial::from_terms(ring, terms)
}

/// Public entry point matching the operation name used in the docs.
pub fn random_linear_change<F: Field>(ring: &Ring<F>, seed: u64) -> Result<LinearChange<F>> {
    LinearChange::random(ring, seed)
}

/// `ring` with the last variable dropped.
pub fn hyperplane_ring<F: Field>(ring: &Ring<F>) -> Result<Ring<F>> {
    let n = ring.nvars();
    if n < 2 {
        return Err(Error::InvalidArgument("cannot cut a ring with one variable".into()));
    }
    PolyRing::new(ring.field().clone(), ring.names()[..n - 1].to_vec(), ring.order())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::parse::parse_polynomial;

    #[test]
    fn deterministic_in_seed() {
        let r = PolyRing::standard(PrimeField::default_field(), 4);
        assert_eq!(LinearChange::random(&r, 1).unwrap(), LinearChange::random(&r, 1).unwrap());
        assert_ne!(LinearChange::random(&r, 1).unwrap(), LinearChange::random(&r, 2).unwrap());
    }

    #[test]
    fn round_trip_on_polynomials() {
        let r = PolyRing::standard(Rationals, 3);
        let f = parse_polynomial(&r, "x0^3 - 2*x0*x1*x2 + 5*x2^3 + x1^2*x0").unwrap();
        let ch = LinearChange::random(&r, 11).unwrap();
        let back = ch.apply(&ch.inverse().apply(&f).unwrap()).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn hundred_seeds_give_invertible_matrices() {
        let f = PrimeField::default_field();
        let r = PolyRing::standard(f, 5);
        for seed in 0..100 {
            let ch = LinearChange::random(&r, seed).unwrap();
            // independent check: the inverse really inverts
            let prod = linalg::mat_mul(&f, ch.matrix(), ch.inverse().matrix());
            for (i, row) in prod.iter().enumerate() {
                for (j, x) in row.iter().enumerate() {
                    assert_eq!(*x, (i == j) as u32);
                }
            }
        }
    }

    #[test]
    fn small_fields_warn() {
        assert!(genericity_warning(&PrimeField::new(101).unwrap()).is_some());
        assert!(genericity_warning(&PrimeField::default_field()).is_some());
        assert!(genericity_warning(&PrimeField::new(65537).unwrap()).is_none());
        assert!(genericity_warning(&Rationals).is_none());
    }
}
