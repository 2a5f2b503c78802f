//! The Torres condition for twisted Alexander polynomials.
//!
//! Deleting component `μ` from a link `L` gives `L'`. A representation `ρ'`
//! of `G(L')` pulls back to `ρ` on `G(L)` (arcs of `L_μ` map to `I`), and
//!
//! ```text
//! det M_j(t', 1) ≐ (T^n + ε_1 T^{n-1} + … + ε_{n-1} T + (-1)^n) · det M'_j(t')
//! ```
//!
//! with `T = t_1^{l_1} ⋯ t_{μ-1}^{l_{μ-1}}`, the `l_i` being linking numbers
//! with `L_μ`. The same arc is removed on both sides, so the denominators
//! agree and only numerators are compared. For `n = 2` the bracket is also
//! written `T² − ε T + 1`, so `ε = −ε_1`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Field, LaurentPoly, Monomial, Scalar};
use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::representation::triangular::common_diagonal;
use crate::representation::Representation;
use crate::wada::{alexander_matrix, classical_alexander, wada_invariant};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    Degenerate,
    NotIdentifiable,
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::Degenerate => "DEGENERATE",
            Verdict::NotIdentifiable => "NOT-IDENTIFIABLE",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// `Q = s · t^shift · (T^n + Σ ε_k T^{n−k} + (−1)^n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bracket {
    pub epsilons: Vec<Scalar>,
    pub sign: Scalar,
    pub shift: Monomial,
}

impl Bracket {
    /// `ε` in the `T² − ε T + 1` form; only meaningful for `n = 2`.
    pub fn epsilon_rho(&self) -> Option<Scalar> {
        (self.epsilons.len() == 1).then(|| -&self.epsilons[0])
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketReading {
    Identified(Bracket),
    /// `T = 1`: the bracket collapses to this constant (canonical form).
    NotIdentifiable { constant: Scalar },
    NotBracketShaped,
}

/// `T^n + Σ_k ε_k T^{n−k} + (−1)^n` in the variables of `l`.
pub fn bracket_polynomial(field: Field, epsilons: &[Scalar], l: &[i64]) -> LaurentPoly {
    let n = epsilons.len() + 1;
    let nv = l.len();
    let t = Monomial::new(l.iter().map(|&x| x as i32).collect());
    let mut out = LaurentPoly::term(t.pow(n as i32), field.one());
    for (k, e) in epsilons.iter().enumerate() {
        out = &out + &LaurentPoly::term(t.pow((n - k - 1) as i32), e.clone());
    }
    let last = if n.is_multiple_of(2) { 1 } else { -1 };
    &out + &LaurentPoly::constant(field.from_i64(last), nv)
}

/// Reads `ε_1 … ε_{n−1}` off a Torres quotient, allowing the unit
/// `±t^{nk}` (sign only for odd `n`).
pub fn extract_epsilons(q: &LaurentPoly, l: &[i64], n: usize) -> Result<BracketReading> {
    if q.nvars() != l.len() {
        return Err(Error::Algebra(crate::AlgebraError::Dimension(format!(
            "quotient in {} variables, {} linking numbers",
            q.nvars(),
            l.len()
        ))));
    }
    if n == 0 {
        return Err(Error::Representation("degree must be positive".into()));
    }
    if l.iter().all(|&x| x == 0) {
        return Ok(match q.len() {
            0 => BracketReading::NotIdentifiable {
                constant: q.field().zero(),
            },
            1 => BracketReading::NotIdentifiable {
                constant: q.canonical_unit_form(n).constant_term(),
            },
            _ => BracketReading::NotBracketShaped,
        });
    }
    if q.is_zero() {
        return Err(Error::Degenerate("the Torres quotient is zero".into()));
    }
    let proj = |m: &Monomial| -> i64 { m.exponents().iter().zip(l).map(|(&e, &x)| e as i64 * x).sum() };
    let base = q.terms().map(|(m, _)| m).min_by_key(|m| proj(m)).unwrap().clone();
    let pivot = l.iter().position(|&x| x != 0).unwrap();
    let mut coeffs = vec![q.field().zero(); n + 1];
    for (m, c) in q.terms() {
        let diff: Vec<i64> = m
            .exponents()
            .iter()
            .zip(base.exponents())
            .map(|(&a, &b)| (a - b) as i64)
            .collect();
        if diff[pivot] % l[pivot] != 0 {
            return Ok(BracketReading::NotBracketShaped);
        }
        let j = diff[pivot] / l[pivot];
        if j < 0 || j > n as i64 || diff.iter().zip(l).any(|(&d, &x)| d != j * x) {
            return Ok(BracketReading::NotBracketShaped);
        }
        coeffs[j as usize] = c.clone();
    }
    if base.exponents().iter().any(|&e| e.rem_euclid(n as i32) != 0) {
        return Ok(BracketReading::NotBracketShaped);
    }
    let sign = coeffs[n].clone();
    let field = q.field();
    let allowed = sign.is_one() || (n % 2 == 1 && (-&sign).is_one());
    let last = if n.is_multiple_of(2) { sign.clone() } else { -&sign };
    if !allowed || coeffs[0] != last {
        return Ok(BracketReading::NotBracketShaped);
    }
    let inv = sign.inverse()?;
    let epsilons = (1..n).map(|k| &coeffs[n - k] * &inv).collect();
    debug_assert!(field == sign.field());
    Ok(BracketReading::Identified(Bracket {
        epsilons,
        sign,
        shift: base,
    }))
}

/// `λ^l + λ^{−l}`.
pub fn predicted_epsilon_reducible(lambda: &Scalar, l: i64) -> Result<Scalar> {
    if lambda.is_zero() {
        return Err(Error::Representation("eigenvalue 0".into()));
    }
    Ok(&lambda.pow(l)? + &lambda.pow(-l)?)
}

/// `ε_k = (−1)^k (Π λ)^l e_k(λ_1^{−l}, …, λ_n^{−l})` for `k = 1 … n−1`.
pub fn predicted_epsilons_triangular(eigenvalues: &[Scalar], l: i64) -> Result<Vec<Scalar>> {
    let Some(first) = eigenvalues.first() else {
        return Err(Error::Representation("no eigenvalues".into()));
    };
    let field = first.field();
    if eigenvalues.iter().any(Scalar::is_zero) {
        return Err(Error::Representation("eigenvalue 0".into()));
    }
    let prod = eigenvalues.iter().fold(field.one(), |acc, x| &acc * x);
    if !prod.is_one() {
        return Err(Error::Representation(format!("eigenvalue product {prod}, expected 1")));
    }
    let n = eigenvalues.len();
    // e[k] = k-th elementary symmetric function of the λ_j^{-l}
    let mut e = vec![field.zero(); n + 1];
    e[0] = field.one();
    for x in eigenvalues {
        let y = x.pow(-l)?;
        for k in (1..=n).rev() {
            let add = &e[k - 1] * &y;
            e[k] = &e[k] + &add;
        }
    }
    Ok((1..n)
        .map(|k| if k % 2 == 0 { e[k].clone() } else { -&e[k] })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorresReport {
    /// Zero-based index of the deleted component.
    pub deleted_component: usize,
    pub components: usize,
    pub linking_numbers: Vec<i64>,
    pub total_linking: i64,
    pub degree: usize,
    pub field: Field,
    pub removed_label: String,
    pub removed_label_reduced: String,
    /// `det M_j` with `t_μ := 1`.
    pub lhs: LaurentPoly,
    /// `det M'_j` on the reduced link.
    pub rhs_base: LaurentPoly,
    pub quotient: Option<LaurentPoly>,
    pub divisibility: Verdict,
    pub bracket: Option<BracketReading>,
    pub bracket_verdict: Verdict,
    pub predicted: Option<Vec<Scalar>>,
    pub prediction_verdict: Verdict,
    pub block_verdict: Verdict,
}

impl TorresReport {
    pub fn epsilons(&self) -> Option<&[Scalar]> {
        match &self.bracket {
            Some(BracketReading::Identified(b)) => Some(&b.epsilons),
            _ => None,
        }
    }

    /// Overall pass: nothing failed.
    pub fn passed(&self) -> bool {
        ![
            self.divisibility,
            self.bracket_verdict,
            self.prediction_verdict,
            self.block_verdict,
        ]
        .contains(&Verdict::Fail)
    }
}

/// Checks the Torres condition for `d` with component `component` deleted
/// and `rep_reduced` a representation of the reduced link's Wirtinger group.
///
/// `remove` names the removed generator of `L` (it must lie on a surviving
/// component); by default the first arc of the first surviving component.
pub fn verify_torres(
    d: &LinkDiagram,
    component: usize,
    rep_reduced: &Representation,
    remove: Option<&str>,
) -> Result<TorresReport> {
    let (reduced, merge) = d.delete_component(component)?;
    let pres = d.wirtinger()?;
    let pres_r = reduced.wirtinger()?;
    rep_reduced.validate(&pres_r)?;
    let rep = rep_reduced.pullback(&pres_r, &merge, &pres)?;
    rep.validate(&pres)
        .map_err(|e| Error::Consistency(format!("pulled-back representation fails: {e}")))?;
    let n = rep.degree();
    let field = rep.field();

    let j = match remove {
        Some(label) => {
            let j = pres
                .generator_index(label)
                .ok_or_else(|| Error::Presentation(format!("no generator {label}")))?;
            if pres.generators()[j].component == component {
                return Err(Error::Presentation(format!(
                    "generator {label} lies on the deleted component"
                )));
            }
            j
        }
        None => pres
            .generators()
            .iter()
            .position(|g| g.component != component)
            .expect("a surviving component has arcs"),
    };
    let k = merge.image(j).expect("surviving arcs have images");

    let one = field.one();
    let m = alexander_matrix(&pres, &rep)?;
    let special = m.matrix.specialize(component, &one)?;
    let nb = n;
    let drop: Vec<usize> = (j * nb..(j + 1) * nb).collect();
    let lhs = special.without_columns(&drop).det()?;
    let m_r = alexander_matrix(&pres_r, rep_reduced)?;
    let rhs_base = m_r.minor(k).det()?;

    let linking_numbers = d.linking_numbers(component)?;
    let total_linking = linking_numbers.iter().sum();
    let mut report = TorresReport {
        deleted_component: component,
        components: d.num_components(),
        linking_numbers: linking_numbers.clone(),
        total_linking,
        degree: n,
        field,
        removed_label: pres.generators()[j].label.clone(),
        removed_label_reduced: pres_r.generators()[k].label.clone(),
        lhs,
        rhs_base,
        quotient: None,
        divisibility: Verdict::Skipped,
        bracket: None,
        bracket_verdict: Verdict::Skipped,
        predicted: None,
        prediction_verdict: Verdict::Skipped,
        block_verdict: Verdict::Skipped,
    };

    if report.rhs_base.is_zero() {
        report.divisibility = if report.lhs.is_zero() {
            Verdict::Degenerate
        } else {
            Verdict::Fail
        };
        return Ok(report);
    }
    report.quotient = report.lhs.exact_divide(&report.rhs_base)?;
    let Some(q) = report.quotient.clone() else {
        report.divisibility = Verdict::Fail;
        return Ok(report);
    };
    report.divisibility = Verdict::Pass;

    let reading = extract_epsilons(&q, &linking_numbers, n)?;
    report.bracket_verdict = match &reading {
        BracketReading::Identified(_) => Verdict::Pass,
        BracketReading::NotIdentifiable { .. } => Verdict::NotIdentifiable,
        BracketReading::NotBracketShaped => Verdict::Fail,
    };

    if let Some(diag) = common_diagonal(rep_reduced) {
        let predicted = predicted_epsilons_triangular(&diag, total_linking)?;
        report.prediction_verdict = match &reading {
            BracketReading::Identified(b) => {
                if b.epsilons == predicted {
                    Verdict::Pass
                } else {
                    Verdict::Fail
                }
            }
            BracketReading::NotIdentifiable { constant } => {
                let expected = bracket_polynomial(field, &predicted, &vec![0; linking_numbers.len()])
                    .canonical_unit_form(n)
                    .constant_term();
                if *constant == expected {
                    Verdict::NotIdentifiable
                } else {
                    Verdict::Fail
                }
            }
            BracketReading::NotBracketShaped => Verdict::Fail,
        };
        report.predicted = Some(predicted);
    }
    report.bracket = Some(reading);

    // Ordering relators and generators of L_μ last makes the specialized
    // matrix block upper triangular with lower-right block ≐ the bracket.
    let mu_rows: Vec<usize> = pres
        .relators()
        .iter()
        .enumerate()
        .filter(|(_, r)| r.crossing.is_some_and(|c| d.crossings()[c].under == component))
        .map(|(i, _)| i)
        .collect();
    let mu_cols: Vec<usize> = (0..pres.num_generators())
        .filter(|&g| pres.generators()[g].component == component)
        .collect();
    if mu_rows.len() == mu_cols.len() {
        let expand = |blocks: &[usize]| -> Vec<usize> { blocks.iter().flat_map(|b| b * n..(b + 1) * n).collect() };
        let other_cols: Vec<usize> = (0..pres.num_generators())
            .filter(|g| !mu_cols.contains(g))
            .collect();
        let lower_left = special.select(&expand(&mu_rows), &expand(&other_cols));
        let c = special.select(&expand(&mu_rows), &expand(&mu_cols));
        report.block_verdict = if lower_left.is_zero() && c.det()?.equal_up_to_units(&q, n)? {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
    }
    Ok(report)
}

/// `Δ_{L,ρ}(1, …, 1)` from the exact quotient, when there is one.
pub fn value_at_ones(d: &LinkDiagram, rep: &Representation) -> Result<Option<Scalar>> {
    let pres = d.wirtinger()?;
    rep.validate(&pres)?;
    let w = wada_invariant(&pres, rep, None)?;
    let ones = vec![rep.field().one(); pres.components()];
    w.quotient.map(|q| q.evaluate(&ones)).transpose().map_err(Error::from)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassicalTorresReport {
    pub deleted_component: usize,
    pub components: usize,
    pub linking_numbers: Vec<i64>,
    /// `Δ_L(t_1, …, t_{μ−1}, 1)`.
    pub lhs: LaurentPoly,
    /// The Torres factor times `Δ_{L'}`.
    pub rhs: LaurentPoly,
    pub verdict: Verdict,
    /// Both sides vanish.
    pub degenerate: bool,
}

/// `Δ_L(t', 1) ≐ (t_1^{l_1} − 1)/(t_1 − 1) · Δ_{L'}` for two components and
/// `(T − 1) · Δ_{L'}` for more.
pub fn verify_classical_torres(d: &LinkDiagram, component: usize) -> Result<ClassicalTorresReport> {
    let (reduced, _) = d.delete_component(component)?;
    let delta = classical_alexander(&d.wirtinger()?)?;
    let delta_r = classical_alexander(&reduced.wirtinger()?)?;
    let field = Field::Rational;
    let lhs = delta.specialize(component, &field.one())?.canonical_unit_form(1);
    let l = d.linking_numbers(component)?;
    let nv = l.len();
    let t = LaurentPoly::term(Monomial::new(l.iter().map(|&x| x as i32).collect()), field.one());
    let t_minus_one = &t - &LaurentPoly::one(field, nv);
    let factor = if d.num_components() == 2 {
        let t1 = &LaurentPoly::var(field, 1, 0) - &LaurentPoly::one(field, 1);
        t_minus_one
            .exact_divide(&t1)?
            .ok_or_else(|| Error::Consistency("t^l − 1 is not divisible by t − 1".into()))?
    } else {
        t_minus_one
    };
    let rhs = (&factor * &delta_r).canonical_unit_form(1);
    let verdict = if lhs == rhs { Verdict::Pass } else { Verdict::Fail };
    Ok(ClassicalTorresReport {
        deleted_component: component,
        components: d.num_components(),
        linking_numbers: l,
        degenerate: lhs.is_zero() && rhs.is_zero(),
        lhs,
        rhs,
        verdict,
    })
}
