//! Upper-triangular representations with a prescribed diagonal.
//!
//! Every generator gets the same diagonal `(λ_1, …, λ_n)`. The entries on
//! the `d`-th superdiagonal of every relator image depend affinely on the
//! `d`-th superdiagonal entries of the generators once the lower diagonals
//! are fixed, so the relator equations are solved one superdiagonal at a
//! time by linear algebra, picking a random point of each solution space.

use rand::Rng;

use crate::algebra::{Field, Scalar, ScalarMatrix};
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::representation::Representation;

const ATTEMPTS: usize = 8;

/// A random upper-triangular representation of `pres` with the given
/// diagonal on every generator. Falls back to the diagonal representation
/// when random choices keep leading to inconsistent systems.
pub fn triangular_representation<R: Rng + ?Sized>(
    pres: &Presentation,
    field: Field,
    diagonal: &[Scalar],
    rng: &mut R,
) -> Result<Representation> {
    let n = diagonal.len();
    if n == 0 {
        return Err(Error::Representation("empty diagonal".into()));
    }
    if diagonal.iter().any(|l| l.field() != field || l.is_zero()) {
        return Err(Error::Representation(format!("diagonal entries must be nonzero elements of {field}")));
    }
    let prod = diagonal.iter().fold(field.one(), |acc, l| &acc * l);
    if !prod.is_one() {
        return Err(Error::Representation(format!("diagonal product is {prod}, expected 1")));
    }
    let mut base = ScalarMatrix::zeros(field, n, n);
    for (i, l) in diagonal.iter().enumerate() {
        base.set(i, i, l.clone());
    }
    let u = pres.num_generators();
    for _ in 0..ATTEMPTS {
        let mut mats = vec![base.clone(); u];
        if (1..n).all(|d| solve_offset(pres, &mut mats, d, rng)) {
            return build(pres, field, n, mats);
        }
    }
    build(pres, field, n, vec![base; u])
}

fn build(pres: &Presentation, field: Field, n: usize, mats: Vec<ScalarMatrix>) -> Result<Representation> {
    let rep = Representation::new(field, n, pres.labels().into_iter().zip(mats).collect())?;
    rep.validate(pres)?;
    Ok(rep)
}

fn relator_entries(pres: &Presentation, mats: &[ScalarMatrix], d: usize) -> Result<Vec<Scalar>> {
    let field = mats[0].field();
    let n = mats[0].rows();
    let inverses: Vec<ScalarMatrix> = mats.iter().map(|m| m.inverse()).collect::<Result<_, _>>()?;
    let mut out = Vec::new();
    for r in pres.relators() {
        let mut m = ScalarMatrix::identity(field, n);
        for l in &r.letters {
            let g = if l.exp > 0 { &mats[l.gen] } else { &inverses[l.gen] };
            m = m.mul(g)?;
        }
        out.extend((0..n - d).map(|i| m.get(i, i + d).clone()));
    }
    Ok(out)
}

/// Solves for the `d`-th superdiagonal; returns false when inconsistent.
fn solve_offset<R: Rng + ?Sized>(pres: &Presentation, mats: &mut [ScalarMatrix], d: usize, rng: &mut R) -> bool {
    let field = mats[0].field();
    let n = mats[0].rows();
    let per = n - d;
    let vars = mats.len() * per;
    let set = |mats: &mut [ScalarMatrix], v: usize, x: Scalar| {
        mats[v / per].set(v % per, v % per + d, x);
    };
    for v in 0..vars {
        set(mats, v, field.zero());
    }
    let Ok(f0) = relator_entries(pres, mats, d) else {
        return false;
    };
    // columns of the linear part, by evaluating at unit vectors
    let mut columns = Vec::with_capacity(vars);
    for v in 0..vars {
        set(mats, v, field.one());
        let Ok(fv) = relator_entries(pres, mats, d) else {
            return false;
        };
        columns.push(fv.iter().zip(&f0).map(|(a, b)| a - b).collect::<Vec<_>>());
        set(mats, v, field.zero());
    }
    let rows: Vec<Vec<Scalar>> = (0..f0.len())
        .map(|eq| {
            let mut row: Vec<Scalar> = columns.iter().map(|c| c[eq].clone()).collect();
            row.push(-&f0[eq]);
            row
        })
        .collect();
    let Some(x) = random_solution(field, rows, vars, rng) else {
        return false;
    };
    for (v, value) in x.into_iter().enumerate() {
        set(mats, v, value);
    }
    true
}

fn random_scalar<R: Rng + ?Sized>(field: Field, rng: &mut R) -> Scalar {
    match field {
        Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
        Field::Rational => field.from_i64(rng.gen_range(-3..=3)),
    }
}

/// A random solution of the augmented system `rows`, or `None`.
fn random_solution<R: Rng + ?Sized>(
    field: Field,
    mut rows: Vec<Vec<Scalar>>,
    vars: usize,
    rng: &mut R,
) -> Option<Vec<Scalar>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inverse().ok()?;
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let factor = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&factor * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[vars].is_zero()) {
        return None;
    }
    let mut x: Vec<Scalar> = (0..vars).map(|_| random_scalar(field, rng)).collect();
    for (i, &c) in pivots.iter().enumerate().rev() {
        let mut v = rows[i][vars].clone();
        for k in c + 1..vars {
            if !pivots.contains(&k) {
                let sub = &rows[i][k] * &x[k];
                v = &v - &sub;
            }
        }
        x[c] = v;
    }
    Some(x)
}

/// The shared diagonal when every generator is upper triangular with the
/// same diagonal.
pub fn common_diagonal(rep: &Representation) -> Option<Vec<Scalar>> {
    let n = rep.degree();
    let mut diag: Option<Vec<Scalar>> = None;
    for label in rep.labels() {
        let m = rep.matrix(label)?;
        if (0..n).any(|i| (0..i).any(|j| !m.get(i, j).is_zero())) {
            return None;
        }
        let d: Vec<Scalar> = (0..n).map(|i| m.get(i, i).clone()).collect();
        match &diag {
            Some(prev) if *prev != d => return None,
            None => diag = Some(d),
            _ => {}
        }
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const TREFOIL: &str = "gen x component 1\ngen y component 1\nrel x y x y^-1 x^-1 y^-1\n";

    #[test]
    fn solves_trefoil() {
        let p = Presentation::parse(TREFOIL).unwrap();
        let f = Field::prime(13).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for lambda in 2..13 {
            let l = f.from_i64(lambda);
            let diag = [l.clone(), l.inverse().unwrap()];
            let rep = triangular_representation(&p, f, &diag, &mut rng).unwrap();
            rep.validate(&p).unwrap();
        }
        let three = [f.from_i64(3), f.from_i64(3), f.from_i64(3).pow(-2).unwrap()];
        let rep = triangular_representation(&p, f, &three, &mut rng).unwrap();
        assert_eq!(common_diagonal(&rep), Some(three.to_vec()));
    }

    #[test]
    fn rejects_non_unimodular_diagonal() {
        let p = Presentation::parse(TREFOIL).unwrap();
        let f = Field::prime(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(triangular_representation(&p, f, &[f.from_i64(2), f.from_i64(2)], &mut rng).is_err());
    }
}
