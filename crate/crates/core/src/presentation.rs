//! Deficiency-one group presentations with component bookkeeping.
//!
//! Text format, one item per line (`#` starts a comment):
//!
//! ```text
//! gen a component 1
//! gen b component 2
//! rel b a b^-1 a^-1
//! ```
//!
//! Letters are generator labels, optionally followed by `^k` for a nonzero
//! integer `k`. Components are numbered from 1.

use std::collections::HashMap;
use std::fmt;

use crate::algebra::Monomial;
use crate::error::{Error, Result};
use crate::free_group::{render_letters, Letter};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub label: String,
    /// Zero-based component; the generator abelianizes to `t_{component+1}`.
    pub component: usize,
}

/// A relator as written, without free reduction.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relator {
    pub letters: Vec<Letter>,
    /// Crossing index for Wirtinger relators.
    pub crossing: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    /// Built from a diagram; classical extraction and Torres checks apply.
    Wirtinger,
    /// Supplied by the user.
    Generic,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Relator>,
    components: usize,
    provenance: Provenance,
}

impl Presentation {
    /// Validates deficiency one and that every relator abelianizes to 1.
    pub fn new(
        generators: Vec<Generator>,
        relators: Vec<Relator>,
        components: usize,
        provenance: Provenance,
    ) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::Presentation("no generators".into()));
        }
        if relators.len() + 1 != generators.len() {
            return Err(Error::Presentation(format!(
                "{} generators and {} relators; deficiency must be one",
                generators.len(),
                relators.len()
            )));
        }
        if let Some(g) = generators.iter().find(|g| g.component >= components) {
            return Err(Error::Presentation(format!(
                "generator {} on component {} of {components}",
                g.label,
                g.component + 1
            )));
        }
        let mut seen = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            if seen.insert(g.label.as_str(), i).is_some() {
                return Err(Error::Presentation(format!("duplicate label {}", g.label)));
            }
        }
        let pres = Presentation {
            generators,
            relators,
            components,
            provenance,
        };
        for (k, r) in pres.relators.iter().enumerate() {
            if let Some(l) = r.letters.iter().find(|l| l.gen >= pres.generators.len()) {
                return Err(Error::Presentation(format!(
                    "relator {} uses unknown generator {}",
                    k + 1,
                    l.gen
                )));
            }
            if !pres.abelianize(&r.letters).is_one() {
                return Err(Error::Presentation(format!(
                    "relator {} does not abelianize to 1",
                    k + 1
                )));
            }
        }
        Ok(pres)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn relators(&self) -> &[Relator] {
        &self.relators
    }

    pub fn num_generators(&self) -> usize {
        self.generators.len()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn labels(&self) -> Vec<String> {
        self.generators.iter().map(|g| g.label.clone()).collect()
    }

    pub fn generator_index(&self, label: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.label == label)
    }

    /// Image under `α` of a letter sequence.
    pub fn abelianize(&self, letters: &[Letter]) -> Monomial {
        let mut e = vec![0i32; self.components];
        for l in letters {
            e[self.generators[l.gen].component] += l.exp as i32;
        }
        Monomial::new(e)
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut generators: Vec<Generator> = Vec::new();
        let mut pending: Vec<(usize, Vec<(String, i64)>)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            match words.next() {
                Some("gen") => {
                    let parts: Vec<&str> = words.collect();
                    let [label, "component", comp] = parts.as_slice() else {
                        return Err(Error::parse(line_no, "expected `gen <label> component <i>`"));
                    };
                    let comp: usize = comp
                        .parse()
                        .ok()
                        .filter(|&c| c >= 1)
                        .ok_or_else(|| Error::parse(line_no, "component must be a positive integer"))?;
                    if label.contains('^') {
                        return Err(Error::parse(line_no, "labels may not contain `^`"));
                    }
                    generators.push(Generator {
                        label: label.to_string(),
                        component: comp - 1,
                    });
                }
                Some("rel") => {
                    let mut letters = Vec::new();
                    for tok in words {
                        let (label, exp) = match tok.split_once('^') {
                            Some((l, e)) => {
                                let e: i64 = e
                                    .parse()
                                    .ok()
                                    .filter(|&e| e != 0)
                                    .ok_or_else(|| Error::parse(line_no, format!("bad exponent in `{tok}`")))?;
                                (l, e)
                            }
                            None => (tok, 1),
                        };
                        letters.push((label.to_string(), exp));
                    }
                    pending.push((line_no, letters));
                }
                Some(other) => {
                    return Err(Error::parse(line_no, format!("unknown directive `{other}`")));
                }
                None => unreachable!(),
            }
        }
        let index: HashMap<&str, usize> = generators
            .iter()
            .enumerate()
            .map(|(i, g)| (g.label.as_str(), i))
            .collect();
        let mut relators = Vec::new();
        for (line_no, letters) in pending {
            let mut out = Vec::new();
            for (label, exp) in letters {
                let gen = *index
                    .get(label.as_str())
                    .ok_or_else(|| Error::parse(line_no, format!("unknown generator `{label}`")))?;
                let unit = if exp > 0 { 1 } else { -1 };
                for _ in 0..exp.unsigned_abs() {
                    out.push(Letter::new(gen, unit));
                }
            }
            relators.push(Relator {
                letters: out,
                crossing: None,
            });
        }
        let components = generators.iter().map(|g| g.component + 1).max().unwrap_or(0);
        Presentation::new(generators, relators, components, Provenance::Generic)
    }
}

impl fmt::Display for Presentation {
    /// Writes the text format accepted by [`Presentation::parse`].
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for g in &self.generators {
            writeln!(f, "gen {} component {}", g.label, g.component + 1)?;
        }
        let labels = self.labels();
        for r in &self.relators {
            writeln!(f, "rel {}", render_letters(&r.letters, &labels))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HOPF: &str = "# Hopf link\ngen a component 1\ngen b component 2\nrel b a b^-1 a^-1\n";

    #[test]
    fn parses_and_renders() {
        let p = Presentation::parse(HOPF).unwrap();
        assert_eq!(p.num_generators(), 2);
        assert_eq!(p.components(), 2);
        assert_eq!(p.provenance(), Provenance::Generic);
        assert_eq!(p.to_string(), "gen a component 1\ngen b component 2\nrel b a b^-1 a^-1\n");
        assert_eq!(Presentation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn powers_expand() {
        let p = Presentation::parse("gen x component 1\ngen y component 1\nrel x y x y^-1 x^-1 y^-1").unwrap();
        let q = Presentation::parse("gen x component 1\ngen y component 1\nrel x y x y^-1 x^-1 y^-1").unwrap();
        assert_eq!(p, q);
        let r = Presentation::parse("gen x component 1\ngen y component 1\nrel x^2 y^-2").unwrap();
        assert_eq!(r.relators()[0].letters.len(), 4);
    }

    #[test]
    fn rejects_bad_deficiency() {
        let err = Presentation::parse("gen a component 1\ngen b component 1\n").unwrap_err();
        assert!(matches!(err, Error::Presentation(_)));
    }

    #[test]
    fn rejects_non_trivial_abelianization() {
        let err = Presentation::parse("gen a component 1\ngen b component 2\nrel a b").unwrap_err();
        assert!(err.to_string().contains("abelianize"));
    }

    #[test]
    fn reports_line_numbers() {
        let err = Presentation::parse("gen a component 1\n\nrel a^0\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = Presentation::parse("gen a component 1\nrel z\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}
