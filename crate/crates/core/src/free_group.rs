//! Free-group words, the integral group ring, and Fox free derivatives.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: usize,
    /// `+1` or `-1`.
    pub exp: i8,
}

impl Letter {
    pub fn new(gen: usize, exp: i8) -> Self {
        assert!(exp == 1 || exp == -1, "letter exponent must be ±1");
        Letter { gen, exp }
    }

    pub fn inverse(self) -> Self {
        Letter {
            gen: self.gen,
            exp: -self.exp,
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn identity() -> Self {
        Word(Vec::new())
    }

    pub fn generator(gen: usize) -> Self {
        Word(vec![Letter::new(gen, 1)])
    }

    /// Freely reduces an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inverse()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_empty()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn fox_derivative(&self, gen: usize, ngens: usize) -> Result<GroupRingElement> {
        fox_derivative(&self.0, gen, ngens)
    }

    /// Renders the word with generator labels, e.g. `b a b^-1 a^-1`.
    pub fn display_with(&self, labels: &[String]) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        render_letters(&self.0, labels)
    }
}

pub(crate) fn render_letters(letters: &[Letter], labels: &[String]) -> String {
    letters
        .iter()
        .map(|l| {
            if l.exp == 1 {
                labels[l.gen].clone()
            } else {
                format!("{}^-1", labels[l.gen])
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Element of `Z[F_u]`: a finite integer combination of reduced words.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupRingElement {
    terms: BTreeMap<Word, i64>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_word(Word::identity())
    }

    pub fn from_word(w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, 1);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, i64)>) -> Self {
        let mut e = Self::zero();
        for (w, c) in terms {
            e.add_term(w, c);
        }
        e
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(w).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn coefficient(&self, w: &Word) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn display_with(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let sign = if *c < 0 { "-" } else { "+" };
            if i > 0 {
                out.push_str(&format!(" {sign} "));
            } else if *c < 0 {
                out.push('-');
            }
            let mag = c.unsigned_abs();
            let word = w.display_with(labels);
            match (mag, w.is_identity()) {
                (1, _) => out.push_str(&word),
                (_, true) => out.push_str(&mag.to_string()),
                _ => out.push_str(&format!("{mag}*({word})")),
            }
        }
        out
    }
}

impl<'a> Add<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn add(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn sub(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        let mut out = self.clone();
        for (w, c) in rhs.terms() {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a GroupRingElement> for &'a GroupRingElement {
    type Output = GroupRingElement;
    fn mul(self, rhs: &'a GroupRingElement) -> GroupRingElement {
        let mut out = GroupRingElement::zero();
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                out.add_term(a.multiply(b), ca * cb);
            }
        }
        out
    }
}

impl Neg for &GroupRingElement {
    type Output = GroupRingElement;
    fn neg(self) -> GroupRingElement {
        GroupRingElement::from_terms(self.terms().map(|(w, c)| (w.clone(), -c)))
    }
}

/// Fox derivative `∂w/∂x_gen` of a (possibly unreduced) letter sequence.
///
/// Each occurrence of `x_gen` contributes its prefix, each occurrence of
/// `x_gen^{-1}` contributes minus its prefix times `x_gen^{-1}`.
pub fn fox_derivative(letters: &[Letter], gen: usize, ngens: usize) -> Result<GroupRingElement> {
    if gen >= ngens {
        return Err(Error::IndexOutOfRange {
            index: gen,
            limit: ngens,
        });
    }
    if let Some(l) = letters.iter().find(|l| l.gen >= ngens) {
        return Err(Error::IndexOutOfRange {
            index: l.gen,
            limit: ngens,
        });
    }
    let mut out = GroupRingElement::zero();
    let mut prefix = Word::identity();
    for &l in letters {
        if l.gen == gen {
            if l.exp == 1 {
                out.add_term(prefix.clone(), 1);
            } else {
                out.add_term(prefix.multiply(&Word(vec![l])), -1);
            }
        }
        prefix.push(l);
    }
    Ok(out)
}
