//! Seeded random inputs for the property suites.

use rand::Rng;

use crate::algebra::{Field, LaurentPoly, Monomial, PolyMatrix, Scalar, ScalarMatrix};
use crate::free_group::{GroupRingElement, Letter, Word};

pub fn scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Scalar {
    match field {
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        Field::Rational => {
            let num = rng.gen_range(-9..=9);
            let den = rng.gen_range(1..=4);
            field.parse_scalar(&format!("{num}/{den}")).expect("valid fraction")
        }
    }
}

pub fn nonzero_scalar<R: Rng + ?Sized>(rng: &mut R, field: Field) -> Scalar {
    loop {
        let s = scalar(rng, field);
        if !s.is_zero() {
            return s;
        }
    }
}

/// Up to `terms` terms with exponents in `-spread..=spread`.
pub fn laurent<R: Rng + ?Sized>(rng: &mut R, field: Field, nvars: usize, terms: usize, spread: i32) -> LaurentPoly {
    let mut out = LaurentPoly::zero(field, nvars);
    for _ in 0..rng.gen_range(0..=terms) {
        let m = Monomial::new((0..nvars).map(|_| rng.gen_range(-spread..=spread)).collect());
        out = &out + &LaurentPoly::term(m, scalar(rng, field));
    }
    out
}

pub fn nonzero_laurent<R: Rng + ?Sized>(
    rng: &mut R,
    field: Field,
    nvars: usize,
    terms: usize,
    spread: i32,
) -> LaurentPoly {
    loop {
        let p = laurent(rng, field, nvars, terms.max(1), spread);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Square matrix with sparse Laurent entries.
pub fn poly_matrix<R: Rng + ?Sized>(rng: &mut R, field: Field, nvars: usize, size: usize) -> PolyMatrix {
    let rows = (0..size)
        .map(|_| {
            (0..size)
                .map(|_| {
                    if rng.gen_bool(0.3) {
                        LaurentPoly::zero(field, nvars)
                    } else {
                        laurent(rng, field, nvars, 2, 1)
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(rows).expect("rectangular")
}

/// A product of random elementary matrices, hence in SL(n).
pub fn sl_matrix<R: Rng + ?Sized>(rng: &mut R, field: Field, n: usize) -> ScalarMatrix {
    let mut m = ScalarMatrix::identity(field, n);
    if n < 2 {
        return m;
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut e = ScalarMatrix::identity(field, n);
        e.set(i, j, scalar(rng, field));
        m = m.mul(&e).expect("square");
    }
    m
}

pub fn letters<R: Rng + ?Sized>(rng: &mut R, ngens: usize, len: usize) -> Vec<Letter> {
    (0..len)
        .map(|_| Letter::new(rng.gen_range(0..ngens), if rng.gen_bool(0.5) { 1 } else { -1 }))
        .collect()
}

pub fn word<R: Rng + ?Sized>(rng: &mut R, ngens: usize, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    Word::from_letters(letters(rng, ngens, len))
}

pub fn group_ring_element<R: Rng + ?Sized>(rng: &mut R, ngens: usize, terms: usize, max_len: usize) -> GroupRingElement {
    GroupRingElement::from_terms((0..terms).map(|_| (word(rng, ngens, max_len), rng.gen_range(-3..=3))))
}
