//! SL(n; F) representations of link groups and the ring map
//! `Φ = ρ̃ ⊗ α̃ : Z[F_u] → M(n; F[t^±1])`.
//!
//! Representation file format (`#` starts a comment):
//!
//! ```text
//! Fp 7
//! degree 2
//! gen x1_1
//! 3 1
//! 0 5
//! gen x1_2
//! 3 4
//! 0 5
//! ```
//!
//! The header is `Q` or `Fp <p>`, followed by `degree <n>` and then, per
//! generator label, `n` rows of `n` entries (integers or fractions `a/b`).

pub mod triangular;

use std::collections::HashMap;
use std::fmt;

use crate::algebra::{Field, Monomial, PolyMatrix, Scalar, ScalarMatrix};
use crate::diagram::ArcMergeMap;
use crate::error::{Error, Result};
use crate::free_group::{GroupRingElement, Letter};
use crate::presentation::Presentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    field: Field,
    degree: usize,
    labels: Vec<String>,
    matrices: Vec<ScalarMatrix>,
    inverses: Vec<ScalarMatrix>,
}

impl Representation {
    /// Checks shapes, fields and unimodularity of every matrix.
    pub fn new(field: Field, degree: usize, entries: Vec<(String, ScalarMatrix)>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::Representation("degree must be positive".into()));
        }
        let mut labels = Vec::new();
        let mut matrices = Vec::new();
        let mut inverses = Vec::new();
        let mut bad = Vec::new();
        for (label, m) in entries {
            if labels.contains(&label) {
                return Err(Error::Representation(format!("generator {label} assigned twice")));
            }
            if m.rows() != degree || m.cols() != degree || m.field() != field {
                return Err(Error::Representation(format!(
                    "matrix for {label} is not a {degree}x{degree} matrix over {field}"
                )));
            }
            let det = m.det()?;
            if !det.is_one() {
                bad.push(format!("generator {label}: determinant {det}, expected 1"));
                continue;
            }
            inverses.push(m.inverse()?);
            labels.push(label);
            matrices.push(m);
        }
        if !bad.is_empty() {
            return Err(Error::Representation(bad.join("\n")));
        }
        Ok(Representation {
            field,
            degree,
            labels,
            matrices,
            inverses,
        })
    }

    /// Every generator of `pres` maps to the identity.
    pub fn trivial(field: Field, degree: usize, pres: &Presentation) -> Self {
        let entries = pres
            .labels()
            .into_iter()
            .map(|l| (l, ScalarMatrix::identity(field, degree)))
            .collect();
        Representation::new(field, degree, entries).expect("identity matrices are unimodular")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn matrix(&self, label: &str) -> Option<&ScalarMatrix> {
        self.labels.iter().position(|l| l == label).map(|i| &self.matrices[i])
    }

    /// Matrices and inverses in the generator order of `pres`.
    pub fn bind<'a>(&'a self, pres: &Presentation) -> Result<Bound<'a>> {
        let index: HashMap<&str, usize> =
            self.labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let mut order = Vec::with_capacity(pres.num_generators());
        let mut missing = Vec::new();
        for g in pres.generators() {
            match index.get(g.label.as_str()) {
                Some(&i) => order.push(i),
                None => missing.push(g.label.clone()),
            }
        }
        if !missing.is_empty() {
            return Err(Error::Representation(format!(
                "no matrix for generator(s) {}",
                missing.join(", ")
            )));
        }
        if order.len() != self.labels.len() {
            let extra: Vec<&str> = self
                .labels
                .iter()
                .filter(|l| pres.generator_index(l).is_none())
                .map(String::as_str)
                .collect();
            return Err(Error::Representation(format!(
                "matrices for unknown generator(s) {}",
                extra.join(", ")
            )));
        }
        Ok(Bound {
            rep: self,
            pres_components: pres.components(),
            components: pres.generators().iter().map(|g| g.component).collect(),
            order,
        })
    }

    /// Checks that every relator of `pres` maps to the identity, listing
    /// each failing relator.
    pub fn validate(&self, pres: &Presentation) -> Result<()> {
        let bound = self.bind(pres)?;
        let labels = pres.labels();
        let mut bad = Vec::new();
        for (k, r) in pres.relators().iter().enumerate() {
            if !bound.word_matrix(&r.letters).is_identity() {
                let at = r.crossing.map(|c| format!(" (crossing {})", c + 1)).unwrap_or_default();
                bad.push(format!(
                    "relator {}{at} `{}` does not map to the identity",
                    k + 1,
                    crate::free_group::render_letters(&r.letters, &labels)
                ));
            }
        }
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Representation(bad.join("\n")))
        }
    }

    /// `ρ = ρ' ∘ (G(L) → G(L'))` on the generators of `pres` (the Wirtinger
    /// presentation of `L`); arcs of the deleted component map to `I`.
    pub fn pullback(
        &self,
        reduced: &Presentation,
        merge: &ArcMergeMap,
        pres: &Presentation,
    ) -> Result<Representation> {
        if merge.images.len() != pres.num_generators() {
            return Err(Error::Representation(format!(
                "merge map covers {} generators, presentation has {}",
                merge.images.len(),
                pres.num_generators()
            )));
        }
        let bound = self.bind(reduced)?;
        let mut entries = Vec::new();
        for (g, image) in pres.generators().iter().zip(&merge.images) {
            let m = match image {
                Some(k) if *k < reduced.num_generators() => bound.matrix(*k).clone(),
                Some(k) => {
                    return Err(Error::IndexOutOfRange {
                        index: *k,
                        limit: reduced.num_generators(),
                    })
                }
                None => ScalarMatrix::identity(self.field, self.degree),
            };
            entries.push((g.label.clone(), m));
        }
        Representation::new(self.field, self.degree, entries)
    }

    pub fn parse(text: &str) -> Result<Representation> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let (line, header) = lines.next().ok_or_else(|| Error::parse(1, "empty representation file"))?;
        let header = header.strip_prefix("field").map(str::trim).unwrap_or(header);
        let field: Field = header.parse().map_err(|e: crate::AlgebraError| Error::parse(line, e.to_string()))?;
        let (line, deg) = lines.next().ok_or_else(|| Error::parse(line, "missing `degree <n>`"))?;
        let degree: usize = deg
            .strip_prefix("degree")
            .and_then(|d| d.trim().parse().ok())
            .filter(|&d| d >= 1)
            .ok_or_else(|| Error::parse(line, "expected `degree <n>` with n ≥ 1"))?;
        let mut entries = Vec::new();
        while let Some((line, gen)) = lines.next() {
            let label = gen
                .strip_prefix("gen ")
                .map(str::trim)
                .filter(|l| !l.is_empty() && !l.contains(' '))
                .ok_or_else(|| Error::parse(line, "expected `gen <label>`"))?;
            let mut rows = Vec::with_capacity(degree);
            for _ in 0..degree {
                let (line, row) = lines
                    .next()
                    .ok_or_else(|| Error::parse(line, format!("matrix for {label} has fewer than {degree} rows")))?;
                let row: Vec<Scalar> = row
                    .split_whitespace()
                    .map(|e| field.parse_scalar(e))
                    .collect::<Result<_, _>>()
                    .map_err(|e| Error::parse(line, e.to_string()))?;
                if row.len() != degree {
                    return Err(Error::parse(line, format!("expected {degree} entries, found {}", row.len())));
                }
                rows.push(row);
            }
            entries.push((label.to_string(), ScalarMatrix::from_rows(field, rows)?));
        }
        Representation::new(field, degree, entries)
    }
}

impl fmt::Display for Representation {
    /// Writes the file format accepted by [`Representation::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.field)?;
        writeln!(f, "degree {}", self.degree)?;
        for (label, m) in self.labels.iter().zip(&self.matrices) {
            writeln!(f, "gen {label}")?;
            for i in 0..self.degree {
                let row: Vec<String> = (0..self.degree).map(|j| m.get(i, j).to_string()).collect();
                writeln!(f, "{}", row.join(" "))?;
            }
        }
        Ok(())
    }
}

/// A representation attached to a presentation's generator order.
#[derive(Clone, Debug)]
pub struct Bound<'a> {
    rep: &'a Representation,
    pres_components: usize,
    components: Vec<usize>,
    order: Vec<usize>,
}

impl Bound<'_> {
    pub fn field(&self) -> Field {
        self.rep.field
    }

    pub fn degree(&self) -> usize {
        self.rep.degree
    }

    pub fn nvars(&self) -> usize {
        self.pres_components
    }

    pub fn matrix(&self, gen: usize) -> &ScalarMatrix {
        &self.rep.matrices[self.order[gen]]
    }

    pub fn inverse(&self, gen: usize) -> &ScalarMatrix {
        &self.rep.inverses[self.order[gen]]
    }

    pub fn letter_matrix(&self, l: Letter) -> &ScalarMatrix {
        if l.exp > 0 {
            self.matrix(l.gen)
        } else {
            self.inverse(l.gen)
        }
    }

    /// `ρ(w)` for a letter sequence.
    pub fn word_matrix(&self, letters: &[Letter]) -> ScalarMatrix {
        let mut m = ScalarMatrix::identity(self.rep.field, self.rep.degree);
        for &l in letters {
            m = m.mul(self.letter_matrix(l)).expect("square matrices of equal size");
        }
        m
    }

    /// `α(w)` for a letter sequence.
    pub fn abelianize(&self, letters: &[Letter]) -> Monomial {
        let mut e = vec![0i32; self.pres_components];
        for l in letters {
            e[self.components[l.gen]] += l.exp as i32;
        }
        Monomial::new(e)
    }

    /// `Φ(w) = α(w)·ρ(w)`.
    pub fn phi_word(&self, letters: &[Letter]) -> PolyMatrix {
        self.word_matrix(letters).times_monomial(&self.abelianize(letters))
    }

    /// `Φ(Σ c_w w) = Σ c_w α(w) ρ(w)`.
    pub fn phi(&self, e: &GroupRingElement) -> PolyMatrix {
        let n = self.rep.degree;
        let mut out = PolyMatrix::zeros(self.rep.field, self.pres_components, n, n);
        for (w, c) in e.terms() {
            let term = self.phi_word(w.letters());
            let scaled = term.scale(&crate::algebra::LaurentPoly::constant(
                self.rep.field.from_i64(c),
                self.pres_components,
            ));
            out = out.add(&scaled).expect("blocks of equal size");
        }
        out
    }

    /// `Φ(∂w/∂x_gen)` accumulated along the word, without expanding the Fox
    /// derivative into group-ring terms.
    pub fn phi_fox(&self, letters: &[Letter], gen: usize) -> PolyMatrix {
        let (field, n, nv) = (self.rep.field, self.rep.degree, self.pres_components);
        let mut out = PolyMatrix::zeros(field, nv, n, n);
        let mut prefix = ScalarMatrix::identity(field, n);
        let mut mono = Monomial::one(nv);
        for &l in letters {
            if l.gen == gen {
                if l.exp > 0 {
                    out = out.add(&prefix.times_monomial(&mono)).expect("equal size");
                } else {
                    let m = prefix.mul(self.inverse(gen)).expect("equal size");
                    let t = mono.div(&Monomial::var(nv, self.components[gen]));
                    out = out.sub(&m.times_monomial(&t)).expect("equal size");
                }
            }
            prefix = prefix.mul(self.letter_matrix(l)).expect("equal size");
            let step = Monomial::var(nv, self.components[l.gen]).pow(l.exp as i32);
            mono = mono.mul(&step);
        }
        out
    }

    /// `Φ(x_gen − 1) = t_c ρ(x_gen) − I`.
    pub fn phi_generator_minus_one(&self, gen: usize) -> PolyMatrix {
        let n = self.rep.degree;
        let t = Monomial::var(self.pres_components, self.components[gen]);
        self.matrix(gen)
            .times_monomial(&t)
            .sub(&PolyMatrix::identity(self.rep.field, self.pres_components, n))
            .expect("equal size")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::free_group::{fox_derivative, Word};

    const HOPF: &str = "gen a component 1\ngen b component 2\nrel b a b^-1 a^-1\n";
    const TREFOIL: &str = "gen x component 1\ngen y component 1\nrel x y x y^-1 x^-1 y^-1\n";

    #[test]
    fn parses_rep_file() {
        let r = Representation::parse("# hopf\nFp 7\ndegree 2\ngen a\n1 1\n0 1\ngen b\n1 0\n0 1\n").unwrap();
        assert_eq!(r.degree(), 2);
        assert_eq!(r.field(), Field::prime(7).unwrap());
        assert_eq!(Representation::parse(&r.to_string()).unwrap(), r);
        let p = Presentation::parse(HOPF).unwrap();
        r.validate(&p).unwrap();
    }

    #[test]
    fn rejects_non_unimodular() {
        let err = Representation::parse("Q\ndegree 2\ngen a\n2 0\n0 1\n").unwrap_err();
        assert!(err.to_string().contains("determinant 2"), "{err}");
        let err = Representation::parse("Q\ndegree 2\ngen a\n1 0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn reports_failing_relator() {
        let p = Presentation::parse(TREFOIL).unwrap();
        // x ↦ [[0,-1],[1,1]] and y ↦ [[1,1],[0,1]] over F_5 do not braid
        let f = Field::prime(5).unwrap();
        let r = Representation::new(
            f,
            2,
            vec![
                ("x".into(), ScalarMatrix::from_i64(f, &[&[0, -1], &[1, 1]])),
                ("y".into(), ScalarMatrix::from_i64(f, &[&[1, 1], &[0, 1]])),
            ],
        )
        .unwrap();
        let err = r.validate(&p).unwrap_err();
        assert!(err.to_string().contains("relator 1"), "{err}");
        // the standard parabolic pair does braid
        let ok = Representation::new(
            f,
            2,
            vec![
                ("x".into(), ScalarMatrix::from_i64(f, &[&[1, 1], &[0, 1]])),
                ("y".into(), ScalarMatrix::from_i64(f, &[&[1, 0], &[-1, 1]])),
            ],
        )
        .unwrap();
        ok.validate(&p).unwrap();
    }

    #[test]
    fn missing_generator_is_an_error() {
        let p = Presentation::parse(HOPF).unwrap();
        let r = Representation::parse("Q\ndegree 1\ngen a\n1\n").unwrap();
        assert!(r.validate(&p).unwrap_err().to_string().contains("no matrix for generator(s) b"));
    }

    #[test]
    fn phi_of_generators() {
        let p = Presentation::parse(HOPF).unwrap();
        let r = Representation::trivial(Field::Rational, 2, &p);
        let b = r.bind(&p).unwrap();
        let m = b.phi(&GroupRingElement::from_word(Word::generator(1)));
        assert_eq!(m.get(0, 0).to_string(), "t2");
        assert!(m.get(0, 1).is_zero());
        assert_eq!(b.phi_generator_minus_one(0).get(1, 1).to_string(), "t1 - 1");
    }

    #[test]
    fn phi_fox_matches_expansion() {
        let p = Presentation::parse(TREFOIL).unwrap();
        let f = Field::prime(7).unwrap();
        let r = Representation::new(
            f,
            2,
            vec![
                ("x".into(), ScalarMatrix::from_i64(f, &[&[1, 1], &[0, 1]])),
                ("y".into(), ScalarMatrix::from_i64(f, &[&[1, 0], &[-1, 1]])),
            ],
        )
        .unwrap();
        let b = r.bind(&p).unwrap();
        let letters = &p.relators()[0].letters;
        for gen in 0..2 {
            let fox = fox_derivative(letters, gen, 2).unwrap();
            assert_eq!(b.phi_fox(letters, gen), b.phi(&fox));
        }
    }

    #[test]
    fn hopf_pullback() {
        let hopf = Presentation::parse(HOPF).unwrap();
        let unknot = Presentation::parse("gen a component 1\n").unwrap();
        let f = Field::prime(7).unwrap();
        let a = ScalarMatrix::from_i64(f, &[&[2, 1], &[0, 4]]);
        let rp = Representation::new(f, 2, vec![("a".into(), a.clone())]).unwrap();
        let merge = ArcMergeMap {
            deleted_component: 1,
            images: vec![Some(0), None],
        };
        let r = rp.pullback(&unknot, &merge, &hopf).unwrap();
        assert_eq!(r.matrix("a"), Some(&a));
        assert!(r.matrix("b").unwrap().is_identity());
        r.validate(&hopf).unwrap();
    }
}
