//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Expected values come from hand computation or from oracles
//! written here independently of the library code paths they check.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twisted_alexander::algebra::{Field, LaurentPoly, PolyMatrix, Scalar};
use twisted_alexander::corpus;
use twisted_alexander::diagram::LinkDiagram;
use twisted_alexander::free_group::fox_derivative;
use twisted_alexander::presentation::Presentation;
use twisted_alexander::representation::triangular::triangular_representation;
use twisted_alexander::representation::Representation;
use twisted_alexander::selftest;
use twisted_alexander::torres::{
    bracket_polynomial, predicted_epsilons_triangular, value_at_ones, verify_classical_torres,
    verify_torres, BracketReading, Verdict,
};
use twisted_alexander::wada::{classical_alexander, wada_invariant};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn diagram(name: &str) -> LinkDiagram {
    corpus::entry(name)
        .unwrap_or_else(|| panic!("{name} is bundled"))
        .diagram()
        .unwrap()
}

fn q(text: &str, nvars: usize) -> LaurentPoly {
    LaurentPoly::parse(text, Field::Rational, nvars).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Alexander matrix of the trivial 1-dimensional representation built
/// straight from Fox derivatives and abelianization, determinant by
/// cofactor expansion.
fn oracle_minor(pres: &Presentation, removed: usize) -> LaurentPoly {
    let u = pres.num_generators();
    let nv = pres.components();
    let rows: Vec<Vec<LaurentPoly>> = pres
        .relators()
        .iter()
        .map(|r| {
            (0..u)
                .filter(|&j| j != removed)
                .map(|j| {
                    let mut p = LaurentPoly::zero(Field::Rational, nv);
                    for (w, c) in fox_derivative(&r.letters, j, u).unwrap().terms() {
                        let m = pres.abelianize(w.letters());
                        p = &p + &LaurentPoly::term(m, Field::Rational.from_i64(c));
                    }
                    p
                })
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return LaurentPoly::one(Field::Rational, nv);
    }
    PolyMatrix::from_rows(rows).unwrap().det_cofactor().unwrap()
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for (name, expected, nvars) in [("trefoil", "t1^2 - t1 + 1", 1), ("hopf", "1", 2)] {
        let start = Instant::now();
        let pres = diagram(name).wirtinger().map_err(|e| e.to_string())?;
        let got = classical_alexander(&pres).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        ensure(got.equal_up_to_units(&q(expected, nvars), 1).unwrap(), || {
            format!("{name}: got {got}, expected {expected}")
        })?;
        ensure(elapsed < Duration::from_secs(1), || format!("{name} took {elapsed:?}"))?;
        // the oracle minor: Δ_K for a knot, Δ_L·(t−1) for a link
        let oracle = oracle_minor(&pres, 0);
        let oracle = if nvars == 1 {
            oracle
        } else {
            oracle.exact_divide(&q("t1 - 1", 2)).unwrap().expect("divisible")
        };
        ensure(oracle.equal_up_to_units(&got, 1).unwrap(), || format!("{name}: Fox oracle gives {oracle}"))?;
        notes.push(format!("{name} Δ = {got} in {elapsed:.1?}"));
    }
    Ok(notes.join("; "))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    // hand values of (t^l − 1)/(t − 1)·Δ_{L'} or (T − 1)·Δ_{L'}
    let cases = [
        ("hopf", "1", 1),
        ("torus_2_4", "t1 + 1", 1),
        ("torus_2_6", "t1^2 + t1 + 1", 1),
        ("whitehead", "0", 1),
        ("borromean", "0", 2),
    ];
    let mut passed = 0;
    for (name, rhs, nv) in cases {
        let d = diagram(name);
        let r = verify_classical_torres(&d, d.num_components() - 1).map_err(|e| e.to_string())?;
        ensure(r.verdict == Verdict::Pass, || format!("{name}: {} vs {}", r.lhs, r.rhs))?;
        ensure(r.rhs == q(rhs, nv), || format!("{name}: right side {} ≠ hand value {rhs}", r.rhs))?;
        passed += 1;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(5), || format!("took {elapsed:?}"))?;
    Ok(format!("{passed}/5 PASS in {elapsed:.1?}"))
}

fn criterion_3() -> Outcome {
    let mut checked = 0;
    let mut degenerate = Vec::new();
    let mut at_ones = 0;
    for entry in corpus::entries() {
        let d = entry.diagram().map_err(|e| e.to_string())?;
        let mu = d.num_components();
        if mu < 2 {
            continue;
        }
        for c in 0..mu {
            let reduced = d.delete_component(c).unwrap().0.wirtinger().unwrap();
            let rep = Representation::trivial(Field::Rational, 2, &reduced);
            let r = verify_torres(&d, c, &rep, None).map_err(|e| e.to_string())?;
            if r.divisibility == Verdict::Degenerate {
                degenerate.push(format!("{}/{}", entry.name, c + 1));
                continue;
            }
            let q = r.quotient.clone().ok_or_else(|| format!("{} delete {}: not divisible", entry.name, c + 1))?;
            let two = Field::Rational.from_i64(-2);
            let square = bracket_polynomial(Field::Rational, &[two], &r.linking_numbers);
            ensure(q.equal_up_to_units(&square, 2).unwrap(), || {
                format!("{} delete {}: quotient {q} is not (T−1)^2", entry.name, c + 1)
            })?;
            checked += 1;
        }
        if mu > 2 {
            let pres = d.wirtinger().unwrap();
            let v = value_at_ones(&d, &Representation::trivial(Field::Rational, 2, &pres)).map_err(|e| e.to_string())?;
            ensure(v.as_ref().is_some_and(Scalar::is_zero), || format!("{}: Δ(1,…,1) = {v:?}", entry.name))?;
            at_ones += 1;
        }
    }
    Ok(format!(
        "{checked} deletions ≐ (T−1)^2, {at_ones} links with μ>2 vanish at 1; degenerate (0 = 0): {}",
        degenerate.join(", ")
    ))
}

fn criterion_4() -> Outcome {
    // linking numbers counted by hand from the diagrams
    let cases = [
        ("hopf", 1),
        ("torus_2_4", 2),
        ("torus_2_6", 3),
        ("whitehead", 0),
        ("trefoil_meridian", 1),
        ("trefoil_lk2", 2),
        ("trefoil_split_unknot", 0),
    ];
    let mut seen = Vec::new();
    for (name, l) in cases {
        let d = diagram(name);
        ensure(d.num_components() == 2, || format!("{name} is not a 2-component link"))?;
        let pres = d.wirtinger().unwrap();
        let v = value_at_ones(&d, &Representation::trivial(Field::Rational, 2, &pres))
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("{name}: no polynomial quotient"))?;
        ensure(v == Field::Rational.from_i64(l * l), || format!("{name}: Δ(1,1) = {v}, expected {}", l * l))?;
        seen.push(format!("{name}={v}"));
    }
    Ok(seen.join(" "))
}

fn criterion_5() -> Outcome {
    let links = ["hopf", "torus_2_4", "torus_2_6", "trefoil_meridian", "trefoil_lk2", "torus_3_3"];
    let per_link = 20;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut instances, mut degenerate, mut non_diagonal) = (0, 0, 0);
    for p in [5u64, 7, 13] {
        let field = Field::prime(p).unwrap();
        for name in links {
            let d = diagram(name);
            let mu = d.num_components() - 1;
            let reduced = d.delete_component(mu).unwrap().0.wirtinger().unwrap();
            for _ in 0..per_link {
                let lambda = field.from_i64(rng.gen_range(1..p as i64));
                let rep = triangular_representation(&reduced, field, &[lambda.clone(), lambda.inverse().unwrap()], &mut rng)
                    .map_err(|e| e.to_string())?;
                if rep.labels().iter().any(|g| !rep.matrix(g).unwrap().get(0, 1).is_zero()) {
                    non_diagonal += 1;
                }
                let r = verify_torres(&d, mu, &rep, None).map_err(|e| e.to_string())?;
                if r.divisibility == Verdict::Degenerate {
                    degenerate += 1;
                    continue;
                }
                let ctx = || format!("{name} over F_{p}, λ = {lambda}");
                ensure(r.divisibility == Verdict::Pass, || format!("{}: not DIVISIBLE", ctx()))?;
                ensure(r.bracket_verdict == Verdict::Pass, || format!("{}: bracket {}", ctx(), r.bracket_verdict))?;
                let Some(BracketReading::Identified(b)) = &r.bracket else {
                    return Err(format!("{}: no ε", ctx()));
                };
                let l = r.total_linking;
                let expected = &lambda.pow(l).unwrap() + &lambda.pow(-l).unwrap();
                ensure(b.epsilon_rho() == Some(expected.clone()), || {
                    format!("{}: ε = {:?}, λ^l + λ^-l = {expected}", ctx(), b.epsilon_rho())
                })?;
                ensure(b.epsilons[0] == -&expected, || format!("{}: ε_1 ≠ −ε", ctx()))?;
                instances += 1;
            }
        }
    }
    ensure(instances > 0 && instances + degenerate == 3 * links.len() * per_link, || "count mismatch".into())?;
    Ok(format!(
        "{instances}/{instances} non-degenerate instances match λ^l+λ^-l ({} links × 20 × p∈{{5,7,13}}; {non_diagonal} non-diagonal; {degenerate} degenerate)",
        links.len()
    ))
}

/// `ε_k = (−1)^k Σ_{|S| = k} (Π_{j∉S} λ_j)^l` by direct subset enumeration.
fn hat_product_oracle(eigs: &[Scalar], l: i64) -> Vec<Scalar> {
    let n = eigs.len();
    let field = eigs[0].field();
    (1..n)
        .map(|k| {
            let mut sum = field.zero();
            for mask in 0u32..(1 << n) {
                if mask.count_ones() as usize != k {
                    continue;
                }
                let mut prod = field.one();
                for (j, x) in eigs.iter().enumerate() {
                    if mask & (1 << j) == 0 {
                        prod = &prod * x;
                    }
                }
                sum = &sum + &prod.pow(l).unwrap();
            }
            if k % 2 == 1 {
                -&sum
            } else {
                sum
            }
        })
        .collect()
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let cases: &[(u64, [i64; 3])] = &[(7, [2, 2, 2]), (7, [1, 2, 4]), (7, [3, 5, 1]), (13, [3, 9, 1]), (13, [2, 7, 1]), (5, [2, 2, 4])];
    // the worked value: F_7, (2,2,2), l = 1
    let f7 = Field::prime(7).unwrap();
    let worked = hat_product_oracle(&[f7.from_i64(2), f7.from_i64(2), f7.from_i64(2)], 1);
    ensure(worked == vec![f7.from_i64(2), f7.from_i64(6)], || format!("oracle gives {worked:?}"))?;
    let mut instances = 0;
    for name in ["hopf", "torus_2_4", "trefoil_meridian", "trefoil_lk2", "torus_3_3"] {
        let d = diagram(name);
        let mu = d.num_components() - 1;
        let reduced = d.delete_component(mu).unwrap().0.wirtinger().unwrap();
        for &(p, diag) in cases {
            let field = Field::prime(p).unwrap();
            let eigs: Vec<Scalar> = diag.iter().map(|&x| field.from_i64(x)).collect();
            let rep = triangular_representation(&reduced, field, &eigs, &mut rng).map_err(|e| e.to_string())?;
            let r = verify_torres(&d, mu, &rep, None).map_err(|e| e.to_string())?;
            let expected = hat_product_oracle(&eigs, r.total_linking);
            let predicted = predicted_epsilons_triangular(&eigs, r.total_linking).map_err(|e| e.to_string())?;
            ensure(predicted == expected, || format!("closed form {predicted:?} vs oracle {expected:?}"))?;
            let got = r.epsilons().ok_or_else(|| format!("{name} F_{p} {diag:?}: {}", r.bracket_verdict))?;
            ensure(got == expected.as_slice(), || format!("{name} F_{p} {diag:?}: ε = {got:?}, expected {expected:?}"))?;
            instances += 1;
        }
    }
    Ok(format!("{instances} SL(3) instances match the hat-product formula"))
}

fn criterion_7() -> Outcome {
    let results = selftest::run_all(&corpus::entries(), selftest::DEFAULT_SEED).map_err(|e| e.to_string())?;
    let summary: Vec<String> = results.iter().map(|r| format!("{} {}/{}", r.name, r.cases - r.failures, r.cases)).collect();
    if let Some(bad) = results.iter().find(|r| !r.passed()) {
        return Err(format!("{}: {:?}", bad.name, bad.messages));
    }
    ensure(results.iter().any(|r| r.name == "phi-multiplicativity" && r.cases >= 1000), || "too few Φ cases".into())?;
    Ok(summary.join(", "))
}

fn criterion_8() -> Outcome {
    let mut worst = (Duration::ZERO, String::new());
    let fields = [Field::Rational, Field::prime(7).unwrap()];
    for entry in corpus::entries() {
        let d = entry.diagram().map_err(|e| e.to_string())?;
        ensure(d.crossings().len() <= 12, || format!("{} is too large", entry.name))?;
        for field in fields {
            for n in 1..=3 {
                let start = Instant::now();
                let pres = d.wirtinger().unwrap();
                wada_invariant(&pres, &Representation::trivial(field, n, &pres), None).map_err(|e| e.to_string())?;
                if d.num_components() > 1 {
                    let mu = d.num_components() - 1;
                    let reduced = d.delete_component(mu).unwrap().0.wirtinger().unwrap();
                    verify_torres(&d, mu, &Representation::trivial(field, n, &reduced), None).map_err(|e| e.to_string())?;
                }
                let t = start.elapsed();
                if t > worst.0 {
                    worst = (t, format!("{} n={n} over {field}", entry.name));
                }
            }
        }
    }
    ensure(worst.0 < Duration::from_secs(10), || format!("{} took {:?}", worst.1, worst.0))?;
    let start = Instant::now();
    selftest::run_all(&corpus::entries(), selftest::DEFAULT_SEED).map_err(|e| e.to_string())?;
    let full = start.elapsed();
    ensure(full < Duration::from_secs(120), || format!("selftest took {full:?}"))?;
    Ok(format!("slowest computation {:.1?} ({}), full selftest {full:.1?}", worst.0, worst.1))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("classical oracle (trefoil, Hopf)", criterion_1),
        ("classical Torres suite", criterion_2),
        ("trivial SL(2): quotient (T-1)^2, vanishing at 1 for μ>2", criterion_3),
        ("trivial SL(2): Δ(1,1) = l^2", criterion_4),
        ("reducible SL(2; F_p): divisible, bracket, ε = λ^l+λ^-l", criterion_5),
        ("triangular SL(3; F_p): (ε_1, ε_2) predicted", criterion_6),
        ("property suites", criterion_7),
        ("performance envelope", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} [{elapsed:.1?}]  {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} [{elapsed:.1?}]  {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
