//! Fox derivatives of the trefoil relator and the fundamental identity
//! `Σ_j ∂r/∂x_j (x_j − 1) = r − 1`.
//!
//!     cargo run --example fox_calculus

use twisted_alexander::free_group::{fox_derivative, GroupRingElement, Word};
use twisted_alexander::presentation::Presentation;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pres = Presentation::parse("gen x component 1\ngen y component 1\nrel x y x y^-1 x^-1 y^-1\n")?;
    let labels = pres.labels();
    let r = &pres.relators()[0].letters;
    let mut sum = GroupRingElement::zero();
    for (j, label) in labels.iter().enumerate() {
        let d = fox_derivative(r, j, labels.len())?;
        println!("∂r/∂{label} = {}", d.display_with(&labels));
        let x_minus_one = &GroupRingElement::from_word(Word::generator(j)) - &GroupRingElement::one();
        sum = &sum + &(&d * &x_minus_one);
    }
    println!("Σ ∂r/∂x_j (x_j − 1) = {}", sum.display_with(&labels));
    let r_minus_one = &GroupRingElement::from_word(Word::from_letters(r.iter().copied())) - &GroupRingElement::one();
    println!("r − 1               = {}", r_minus_one.display_with(&labels));
    assert_eq!(sum, r_minus_one);

    // abelianized, the x column is the Alexander polynomial
    let dx = fox_derivative(r, 0, 2)?;
    let mut coeffs = std::collections::BTreeMap::new();
    for (w, c) in dx.terms() {
        let e = pres.abelianize(w.letters()).exponents()[0];
        *coeffs.entry(e).or_insert(0) += c;
    }
    println!("α(∂r/∂x) coefficients by power of t: {coeffs:?}");
    Ok(())
}
