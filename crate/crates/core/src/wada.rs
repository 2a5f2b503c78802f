//! The twisted Alexander matrix and Wada's invariant
//! `Δ_{L,ρ} = det M_j / det Φ(x_j − 1)`.

use crate::algebra::{Field, LaurentPoly, PolyMatrix};
use crate::error::{Error, Result};
use crate::presentation::{Presentation, Provenance};
use crate::representation::Representation;

/// Block matrix with `(k, j)` block `Φ(∂r_k/∂x_j)`: `n(u−1)` rows and `nu`
/// columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderMatrix {
    pub matrix: PolyMatrix,
    pub degree: usize,
    pub relators: usize,
    pub generators: usize,
}

impl AlexanderMatrix {
    pub fn block(&self, relator: usize, generator: usize) -> PolyMatrix {
        let n = self.degree;
        self.matrix.block(relator * n, generator * n, n, n)
    }

    /// The square matrix left after deleting column block `generator`.
    pub fn minor(&self, generator: usize) -> PolyMatrix {
        let n = self.degree;
        let drop: Vec<usize> = (generator * n..(generator + 1) * n).collect();
        self.matrix.without_columns(&drop)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WadaInvariant {
    pub numerator: LaurentPoly,
    pub denominator: LaurentPoly,
    /// `numerator / denominator` when the division is exact.
    pub quotient: Option<LaurentPoly>,
    pub removed_generator: usize,
    pub removed_label: String,
    pub degree: usize,
    pub warning: Option<String>,
}

pub fn alexander_matrix(pres: &Presentation, rep: &Representation) -> Result<AlexanderMatrix> {
    let bound = rep.bind(pres)?;
    let n = rep.degree();
    let u = pres.num_generators();
    let rels = pres.relators().len();
    let mut m = PolyMatrix::zeros(rep.field(), pres.components(), rels * n, u * n);
    for (k, r) in pres.relators().iter().enumerate() {
        for j in 0..u {
            if r.letters.iter().any(|l| l.gen == j) {
                m.set_block(k * n, j * n, &bound.phi_fox(&r.letters, j));
            }
        }
    }
    Ok(AlexanderMatrix {
        matrix: m,
        degree: n,
        relators: rels,
        generators: u,
    })
}

/// `det Φ(x_j − 1) = det(t_c ρ(x_j) − I)`.
pub fn denominator(pres: &Presentation, rep: &Representation, generator: usize) -> Result<LaurentPoly> {
    if generator >= pres.num_generators() {
        return Err(Error::IndexOutOfRange {
            index: generator,
            limit: pres.num_generators(),
        });
    }
    Ok(rep.bind(pres)?.phi_generator_minus_one(generator).det()?)
}

/// Wada's invariant with column block `remove` deleted, or the lowest
/// generator with a nonzero denominator when `remove` is `None`.
pub fn wada_invariant(pres: &Presentation, rep: &Representation, remove: Option<usize>) -> Result<WadaInvariant> {
    let m = alexander_matrix(pres, rep)?;
    wada_from_matrix(pres, rep, &m, remove)
}

pub fn wada_from_matrix(
    pres: &Presentation,
    rep: &Representation,
    m: &AlexanderMatrix,
    remove: Option<usize>,
) -> Result<WadaInvariant> {
    let (j, den) = match remove {
        Some(j) => {
            let den = denominator(pres, rep, j)?;
            if den.is_zero() {
                return Err(Error::Degenerate(format!(
                    "denominator for generator {} vanishes",
                    pres.generators()[j].label
                )));
            }
            (j, den)
        }
        None => {
            let mut found = None;
            for j in 0..pres.num_generators() {
                let den = denominator(pres, rep, j)?;
                if !den.is_zero() {
                    found = Some((j, den));
                    break;
                }
            }
            found.ok_or_else(|| Error::Degenerate("every denominator vanishes".into()))?
        }
    };
    let numerator = m.minor(j).det()?;
    let quotient = numerator.exact_divide(&den)?;
    let label = pres.generators()[j].label.clone();
    let warning = (quotient.is_none() && rep.degree() >= 2).then(|| {
        format!(
            "numerator {} is not divisible by denominator {} (removed generator {label})",
            numerator.canonical_unit_form(rep.degree()),
            den
        )
    });
    Ok(WadaInvariant {
        numerator,
        denominator: den,
        quotient,
        removed_generator: j,
        removed_label: label,
        degree: rep.degree(),
        warning,
    })
}

/// The multivariable Alexander polynomial from the trivial 1-dimensional
/// representation, in canonical unit form.
pub fn classical_alexander(pres: &Presentation) -> Result<LaurentPoly> {
    if pres.provenance() != Provenance::Wirtinger {
        return Err(Error::Presentation(
            "the classical polynomial is read off Wirtinger presentations only".into(),
        ));
    }
    let rep = Representation::trivial(Field::Rational, 1, pres);
    let w = wada_invariant(pres, &rep, None)?;
    if pres.components() == 1 {
        return Ok(w.numerator.canonical_unit_form(1));
    }
    match w.numerator.exact_divide(&w.denominator)? {
        Some(q) => Ok(q.canonical_unit_form(1)),
        None => Err(Error::Consistency(format!(
            "Wirtinger minor {} is not divisible by {}",
            w.numerator, w.denominator
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::LinkDiagram;

    const HOPF: &str = "gen a component 1\ngen b component 2\nrel b a b^-1 a^-1\n";
    const TREFOIL: &str = "gen x component 1\ngen y component 1\nrel x y x y^-1 x^-1 y^-1\n";

    fn poly(text: &str, nvars: usize) -> LaurentPoly {
        LaurentPoly::parse(text, Field::Rational, nvars).unwrap()
    }

    #[test]
    fn hopf_matrix() {
        let p = Presentation::parse(HOPF).unwrap();
        let m = alexander_matrix(&p, &Representation::trivial(Field::Rational, 1, &p)).unwrap();
        assert_eq!(m.matrix.get(0, 0), &poly("t2 - 1", 2));
        assert_eq!(m.matrix.get(0, 1), &poly("1 - t1", 2));
    }

    #[test]
    fn hopf_invariant_and_column_choice() {
        let p = Presentation::parse(HOPF).unwrap();
        let rep = Representation::trivial(Field::Rational, 1, &p);
        let b = wada_invariant(&p, &rep, Some(1)).unwrap();
        assert_eq!(b.numerator, poly("t2 - 1", 2));
        assert_eq!(b.denominator, poly("t2 - 1", 2));
        assert_eq!(b.quotient, Some(poly("1", 2)));
        let a = wada_invariant(&p, &rep, Some(0)).unwrap();
        assert_eq!(a.quotient, Some(poly("-1", 2)));
        assert!(a.quotient.unwrap().equal_up_to_units(&poly("1", 2), 1).unwrap());
    }

    #[test]
    fn trefoil_classical_and_sl2() {
        let p = Presentation::parse(TREFOIL).unwrap();
        let w = wada_invariant(&p, &Representation::trivial(Field::Rational, 1, &p), None).unwrap();
        assert!(w.numerator.equal_up_to_units(&poly("t1^2 - t1 + 1", 1), 1).unwrap());
        assert_eq!(w.denominator, poly("t1 - 1", 1));
        assert!(w.quotient.is_none());
        assert!(w.warning.is_none());

        let w2 = wada_invariant(&p, &Representation::trivial(Field::Rational, 2, &p), None).unwrap();
        let sq = &poly("t1^2 - t1 + 1", 1) * &poly("t1^2 - t1 + 1", 1);
        assert!(w2.numerator.equal_up_to_units(&sq, 2).unwrap());
        assert_eq!(w2.denominator, poly("t1^2 - 2*t1 + 1", 1));
        assert!(w2.warning.is_some());
    }

    #[test]
    fn fundamental_identity() {
        let p = Presentation::parse(TREFOIL).unwrap();
        let rep = Representation::parse("Fp 7\ndegree 2\ngen x\n1 1\n0 1\ngen y\n1 0\n-1 1\n").unwrap();
        let m = alexander_matrix(&p, &rep).unwrap();
        let bound = rep.bind(&p).unwrap();
        let mut sum = PolyMatrix::zeros(rep.field(), 1, 2, 2);
        for j in 0..2 {
            sum = sum.add(&m.block(0, j).mul(&bound.phi_generator_minus_one(j)).unwrap()).unwrap();
        }
        assert!(sum.is_zero());
    }

    #[test]
    fn classical_requires_wirtinger() {
        let p = Presentation::parse(HOPF).unwrap();
        assert!(classical_alexander(&p).is_err());
        let d = LinkDiagram::parse_pd("component 1 orientation +\ncomponent 2 orientation +\nX[1,3,2,4] X[3,1,4,2]")
            .unwrap();
        assert_eq!(classical_alexander(&d.wirtinger().unwrap()).unwrap(), poly("1", 2));
        let u = LinkDiagram::parse_pd("component 1 orientation +\nX[1,1,2,2]").unwrap();
        assert_eq!(classical_alexander(&u.wirtinger().unwrap()).unwrap(), poly("1", 1));
    }
}
