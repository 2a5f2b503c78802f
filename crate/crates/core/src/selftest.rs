//! Property suites over the corpus and seeded random inputs.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Field, LaurentPoly, Monomial};
use crate::corpus::Entry;
use crate::error::Result;
use crate::free_group::{fox_derivative, GroupRingElement, Word};
use crate::presentation::Presentation;
use crate::random;
use crate::representation::triangular::triangular_representation;
use crate::representation::Representation;
use crate::wada::{alexander_matrix, classical_alexander, denominator};

pub const DEFAULT_SEED: u64 = 20240917;
const KEPT_MESSAGES: usize = 10;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// The first few failure descriptions.
    pub messages: Vec<String>,
    pub elapsed: Duration,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

struct Tally {
    name: &'static str,
    cases: usize,
    failures: usize,
    messages: Vec<String>,
    start: Instant,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Tally {
            name,
            cases: 0,
            failures: 0,
            messages: Vec::new(),
            start: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, message: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.messages.len() < KEPT_MESSAGES {
                self.messages.push(message());
            }
        }
    }

    fn finish(self) -> SuiteResult {
        SuiteResult {
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            messages: self.messages,
            elapsed: self.start.elapsed(),
        }
    }
}

/// `Σ_j ∂r/∂x_j · (x_j − 1) = r − 1` for every relator of every entry.
pub fn fox_identity(entries: &[Entry]) -> Result<SuiteResult> {
    let mut t = Tally::new("fox-fundamental-identity");
    for e in entries {
        let pres = e.diagram()?.wirtinger()?;
        let u = pres.num_generators();
        for (k, r) in pres.relators().iter().enumerate() {
            let mut sum = GroupRingElement::zero();
            for j in 0..u {
                let x_minus_one = &GroupRingElement::from_word(Word::generator(j)) - &GroupRingElement::one();
                sum = &sum + &(&fox_derivative(&r.letters, j, u)? * &x_minus_one);
            }
            let expected = &GroupRingElement::from_word(Word::from_letters(r.letters.iter().copied()))
                - &GroupRingElement::one();
            t.check(sum == expected, || format!("{} relator {}", e.name, k + 1));
        }
    }
    Ok(t.finish())
}

/// `Φ(uv) = Φ(u)Φ(v)` on random word pairs, and `Φ` additive and
/// multiplicative on random group-ring elements.
pub fn phi_multiplicativity(pairs: usize, seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new("phi-multiplicativity");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pres = Presentation::parse("gen a component 1\ngen b component 1\ngen c component 2\nrel a b^-1\nrel c a c^-1 a^-1\n")?;
    for (i, (field, n)) in [(Field::prime(13)?, 2), (Field::Rational, 2), (Field::prime(7)?, 3)]
        .into_iter()
        .enumerate()
    {
        let entries = pres
            .labels()
            .into_iter()
            .map(|l| (l, random::sl_matrix(&mut rng, field, n)))
            .collect();
        let rep = Representation::new(field, n, entries)?;
        let bound = rep.bind(&pres)?;
        let share = pairs / 3 + usize::from(i < pairs % 3);
        for _ in 0..share {
            let u = random::word(&mut rng, 3, 8);
            let v = random::word(&mut rng, 3, 8);
            let lhs = bound.phi_word(u.multiply(&v).letters());
            let rhs = bound.phi_word(u.letters()).mul(&bound.phi_word(v.letters()))?;
            t.check(lhs == rhs, || format!("Φ(uv) ≠ Φ(u)Φ(v) over {field} for u={u:?} v={v:?}"));
        }
        for _ in 0..share / 20 {
            let x = random::group_ring_element(&mut rng, 3, 3, 5);
            let y = random::group_ring_element(&mut rng, 3, 3, 5);
            let sum_ok = bound.phi(&(&x + &y)) == bound.phi(&x).add(&bound.phi(&y))?;
            let prod_ok = bound.phi(&(&x * &y)) == bound.phi(&x).mul(&bound.phi(&y))?;
            t.check(sum_ok && prod_ok, || format!("Φ not a ring map over {field}"));
        }
    }
    Ok(t.finish())
}

/// `num_j · den_k ≐ num_k · den_j` for every removable column, with the
/// trivial 1-dimensional representation and a triangular SL(2; F_7) one.
pub fn column_independence(entries: &[Entry], seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new("column-removal-independence");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f7 = Field::prime(7)?;
    for e in entries {
        let pres = e.diagram()?.wirtinger()?;
        let trivial = Representation::trivial(Field::Rational, 1, &pres);
        let tri = triangular_representation(&pres, f7, &[f7.from_i64(3), f7.from_i64(5)], &mut rng)?;
        for rep in [trivial, tri] {
            let n = rep.degree();
            let m = alexander_matrix(&pres, &rep)?;
            let mut cols = Vec::new();
            for j in 0..pres.num_generators() {
                cols.push((m.minor(j).det()?, denominator(&pres, &rep, j)?));
            }
            let (num0, den0) = &cols[0];
            for (j, (num, den)) in cols.iter().enumerate().skip(1) {
                let ok = (num * den0).equal_up_to_units(&(num0 * den), n)?;
                t.check(ok, || format!("{} (n={n}): columns 1 and {} disagree", e.name, j + 1));
            }
        }
    }
    Ok(t.finish())
}

/// Fraction-free elimination against cofactor expansion.
pub fn bareiss_vs_cofactor(count: usize, seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new("bareiss-vs-cofactor");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let field = if i % 2 == 0 { Field::Rational } else { Field::prime(13)? };
        let size = 1 + i % 6;
        let nvars = rng.gen_range(1..=2);
        let m = random::poly_matrix(&mut rng, field, nvars, size);
        let ok = m.det_bareiss()? == m.det_cofactor()?;
        t.check(ok, || format!("{size}x{size} matrix over {field}:\n{m}"));
    }
    Ok(t.finish())
}

/// `(f·g) / g = f`, and a non-multiple is rejected.
pub fn exact_divide_round_trip(count: usize, seed: u64) -> Result<SuiteResult> {
    let mut t = Tally::new("exact-divide-round-trip");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let field = if i % 2 == 0 { Field::Rational } else { Field::prime(5)? };
        let nvars = 1 + i % 3;
        let f = random::laurent(&mut rng, field, nvars, 4, 2);
        let g = random::nonzero_laurent(&mut rng, field, nvars, 3, 2);
        let q = (&f * &g).exact_divide(&g)?;
        t.check(q.as_ref() == Some(&f), || format!("({f})·({g}) / ({g}) gave {q:?}"));
    }
    // g·q + 1 with g of positive degree is never a multiple of g
    for i in 0..count / 10 {
        let field = if i % 2 == 0 { Field::Rational } else { Field::prime(5)? };
        let g = &LaurentPoly::var(field, 1, 0) - &LaurentPoly::constant(random::nonzero_scalar(&mut rng, field), 1);
        let q = random::laurent(&mut rng, field, 1, 3, 2);
        let h = &(&g * &q) + &LaurentPoly::term(Monomial::one(1), field.one());
        let ok = h.exact_divide(&g)?.is_none();
        t.check(ok, || format!("{h} reported divisible by {g}"));
    }
    Ok(t.finish())
}

/// Classical polynomials against the recorded goldens.
pub fn goldens(entries: &[Entry]) -> Result<SuiteResult> {
    let mut t = Tally::new("classical-goldens");
    for e in entries {
        let d = e.diagram()?;
        let Some(expected) = e.golden(d.num_components())? else {
            continue;
        };
        let got = classical_alexander(&d.wirtinger()?)?;
        t.check(got == expected, || format!("{}: expected {expected}, got {got}", e.name));
    }
    Ok(t.finish())
}

pub fn run_all(entries: &[Entry], seed: u64) -> Result<Vec<SuiteResult>> {
    Ok(vec![
        fox_identity(entries)?,
        phi_multiplicativity(1000, seed)?,
        column_independence(entries, seed)?,
        bareiss_vs_cofactor(200, seed)?,
        exact_divide_round_trip(500, seed)?,
        goldens(entries)?,
    ])
}
