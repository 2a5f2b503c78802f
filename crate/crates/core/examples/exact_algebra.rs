//! Laurent polynomials over Q and F_p: parsing, exact division, unit
//! normalization, and determinants of polynomial matrices.
//!
//!     cargo run --example exact_algebra

use twisted_alexander::algebra::{Field, LaurentPoly, PolyMatrix};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let q = Field::Rational;
    let f = LaurentPoly::parse("t1^2 - t1 + 1", q, 1)?;
    let g = LaurentPoly::parse("t1 + 1", q, 1)?;
    let prod = &f * &g;
    println!("({f}) * ({g}) = {prod}");
    println!("exact divide back: {:?}", prod.exact_divide(&g)?.map(|p| p.to_string()));
    println!("t1^3 / (t1 - 1) divisible? {}", LaurentPoly::parse("t1^3", q, 1)?
        .exact_divide(&LaurentPoly::parse("t1 - 1", q, 1)?)?
        .is_some());

    // units ±t^{nk}: the same polynomial in different guises
    let shifted = LaurentPoly::parse("-t1^-3 + t1^-4 - t1^-5", q, 1)?;
    println!("{shifted}  ~  {}  (n = 1)", shifted.canonical_unit_form(1));
    println!("equal to t^2 - t + 1 up to units: {}", shifted.equal_up_to_units(&f, 1)?);

    let f7 = Field::prime(7)?;
    let a = LaurentPoly::parse("3*t1*t2^-1 + 5", f7, 2)?;
    println!("over {f7}: ({a})^2 = {}", a.pow(2));

    let m = PolyMatrix::from_rows(vec![
        vec![LaurentPoly::parse("t1 - 1", q, 2)?, LaurentPoly::parse("t2", q, 2)?],
        vec![LaurentPoly::parse("1", q, 2)?, LaurentPoly::parse("t1^-1*t2 + 1", q, 2)?],
    ])?;
    println!("det by elimination: {}", m.det_bareiss()?);
    println!("det by cofactors:   {}", m.det_cofactor()?);
    Ok(())
}
