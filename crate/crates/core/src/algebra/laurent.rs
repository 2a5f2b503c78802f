//! Multivariate Laurent polynomials `F[t_1^{±1}, …, t_μ^{±1}]`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Signed;

use crate::algebra::field::{Field, Scalar};
use crate::error::AlgebraError;

/// Exponent vector of a Laurent monomial. The derived ordering is
/// lexicographic with `t_1 > t_2 > …`, which is the monomial order used
/// throughout the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<i32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Monomial(e)
    }

    pub fn new(exponents: Vec<i32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.0.len(), other.0.len());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn pow(&self, k: i32) -> Monomial {
        Monomial(self.0.iter().map(|e| e * k).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "t{}", i + 1)?;
            } else {
                write!(f, "t{}^{}", i + 1, e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// A Laurent polynomial with exact coefficients. Zero coefficients are never
/// stored, so the zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl LaurentPoly {
    pub fn zero(field: Field, nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field.one(), nvars)
    }

    pub fn constant(c: Scalar, nvars: usize) -> Self {
        Self::term(Monomial::one(nvars), c)
    }

    /// The variable `t_{index+1}`.
    pub fn var(field: Field, nvars: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index), field.one())
    }

    pub fn term(m: Monomial, c: Scalar) -> Self {
        let mut p = LaurentPoly::zero(c.field(), m.nvars());
        p.add_term(m, c);
        p
    }

    pub fn from_terms(
        field: Field,
        nvars: usize,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = LaurentPoly::zero(field, nvars);
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial has wrong variable count");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// True for zero and for polynomials supported only on the trivial monomial.
    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn constant_term(&self) -> Scalar {
        self.coefficient(&Monomial::one(self.nvars))
    }

    /// Term with the lexicographically greatest monomial.
    pub fn leading_term(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        self.fold_exponents(i32::min)
    }

    pub fn max_exponents(&self) -> Option<Vec<i32>> {
        self.fold_exponents(i32::max)
    }

    fn fold_exponents(&self, pick: fn(i32, i32) -> i32) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.0.clone();
        for m in it {
            for (a, &e) in acc.iter_mut().zip(&m.0) {
                *a = pick(*a, e);
            }
        }
        Some(acc)
    }

    fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c · m · other`
    fn add_scaled_shifted(&mut self, other: &LaurentPoly, c: &Scalar, m: &Monomial) {
        for (om, oc) in &other.terms {
            self.add_term(om.mul(m), c * oc);
        }
    }

    pub fn scale(&self, c: &Scalar) -> LaurentPoly {
        if c.is_zero() {
            return LaurentPoly::zero(self.field, self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, m: &Monomial) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPoly {
        let mut acc = LaurentPoly::one(self.field, self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    fn check_compatible(&self, other: &LaurentPoly) -> Result<(), AlgebraError> {
        if self.nvars != other.nvars {
            return Err(AlgebraError::Dimension(format!(
                "{} variables vs {} variables",
                self.nvars, other.nvars
            )));
        }
        if self.field != other.field {
            return Err(AlgebraError::Dimension(format!(
                "polynomials over {} and {}",
                self.field, other.field
            )));
        }
        Ok(())
    }

    /// Substitutes `t_{k+1} := value` and drops that variable, returning a
    /// polynomial in `nvars - 1` variables.
    pub fn specialize(&self, k: usize, value: &Scalar) -> Result<LaurentPoly, AlgebraError> {
        if k >= self.nvars {
            return Err(AlgebraError::Dimension(format!(
                "variable index {k} with {} variables",
                self.nvars
            )));
        }
        if value.is_zero() {
            return Err(AlgebraError::Domain("cannot specialize a Laurent variable at 0".into()));
        }
        let mut out = LaurentPoly::zero(self.field, self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let ek = e.remove(k);
            out.add_term(Monomial(e), c * &value.pow(ek as i64)?);
        }
        Ok(out)
    }

    /// Evaluates at a point with every coordinate nonzero.
    pub fn evaluate(&self, point: &[Scalar]) -> Result<Scalar, AlgebraError> {
        if point.len() != self.nvars {
            return Err(AlgebraError::Dimension(format!(
                "point of length {} for {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut v = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e != 0 {
                    if x.is_zero() {
                        return Err(AlgebraError::Domain(
                            "cannot evaluate a Laurent variable at 0".into(),
                        ));
                    }
                    v = &v * &x.pow(e as i64)?;
                }
            }
            acc = &acc + &v;
        }
        Ok(acc)
    }

    /// Exact division in the Laurent ring: `Ok(Some(q))` with `self = g·q`,
    /// or `Ok(None)` when `g` does not divide `self`.
    ///
    /// Both operands are shifted to ordinary polynomials with no monomial
    /// factor, then divided by leading terms in lex order. Per-variable degree
    /// bounds of the quotient make every failing step detectable.
    pub fn exact_divide(&self, g: &LaurentPoly) -> Result<Option<LaurentPoly>, AlgebraError> {
        self.check_compatible(g)?;
        if g.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Some(self.clone()));
        }
        let fmin = Monomial(self.min_exponents().unwrap());
        let gmin = Monomial(g.min_exponents().unwrap());
        let f0 = self.shift(&fmin.inverse());
        let g0 = g.shift(&gmin.inverse());
        let fmax = f0.max_exponents().unwrap();
        let gmax = g0.max_exponents().unwrap();
        let mut bound = Vec::with_capacity(self.nvars);
        for (a, b) in fmax.iter().zip(&gmax) {
            if a < b {
                return Ok(None);
            }
            bound.push(a - b);
        }

        let (lead_m, lead_c) = g0.leading_term().unwrap();
        let lead_m = lead_m.clone();
        let lead_inv = lead_c.inverse()?;
        let mut rem = f0;
        let mut quot = LaurentPoly::zero(self.field, self.nvars);
        while let Some((m, c)) = rem.leading_term() {
            let d = m.div(&lead_m);
            if d.0.iter().zip(&bound).any(|(&e, &b)| e < 0 || e > b) {
                return Ok(None);
            }
            let coef = c * &lead_inv;
            rem.add_scaled_shifted(&g0, &-&coef, &d);
            quot.add_term(d, coef);
        }
        Ok(Some(quot.shift(&fmin.div(&gmin))))
    }

    /// Representative of the orbit under `ε·t_1^{n k_1}⋯t_μ^{n k_μ}` (with
    /// `ε = ±1` only for odd `n`): minimal exponents land in `[0, n)` and, for
    /// odd `n`, the lex-greatest coefficient is positive.
    pub fn canonical_unit_form(&self, n: usize) -> LaurentPoly {
        assert!(n >= 1, "matrix degree must be positive");
        let Some(mins) = self.min_exponents() else {
            return self.clone();
        };
        let n = n as i32;
        let shift = Monomial(mins.iter().map(|&e| -n * e.div_euclid(n)).collect());
        let mut out = self.shift(&shift);
        if n % 2 == 1 && !out.leading_term().unwrap().1.is_positive() {
            out = -&out;
        }
        out
    }

    pub fn equal_up_to_units(&self, other: &LaurentPoly, n: usize) -> Result<bool, AlgebraError> {
        self.check_compatible(other)?;
        Ok(self.canonical_unit_form(n) == other.canonical_unit_form(n))
    }

    /// Parses the canonical text form, e.g. `t1^2*t2^-1 - 3/2*t1 + 1`.
    pub fn parse(text: &str, field: Field, nvars: usize) -> Result<LaurentPoly, AlgebraError> {
        let err = |reason: &str| AlgebraError::BadPolynomial {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty input"));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                pieces.push(&compact[start..i]);
                start = i;
            }
        }
        pieces.push(&compact[start..]);

        let mut out = LaurentPoly::zero(field, nvars);
        for piece in pieces {
            let (negative, body) = match piece.as_bytes()[0] {
                b'-' => (true, &piece[1..]),
                b'+' => (false, &piece[1..]),
                _ => (false, piece),
            };
            if body.is_empty() {
                return Err(err("dangling sign"));
            }
            let mut coeff = field.one();
            let mut exps = vec![0; nvars];
            for factor in body.split('*') {
                if let Some(var) = factor.strip_prefix('t') {
                    let (idx, exp) = match var.split_once('^') {
                        Some((i, e)) => (i, e.parse::<i32>().map_err(|_| err("bad exponent"))?),
                        None => (var, 1),
                    };
                    let idx: usize = idx.parse().map_err(|_| err("bad variable index"))?;
                    if idx == 0 || idx > nvars {
                        return Err(err("variable index out of range"));
                    }
                    exps[idx - 1] += exp;
                } else {
                    let c = field.parse_scalar(factor).map_err(|_| err("bad coefficient"))?;
                    coeff = &coeff * &c;
                }
            }
            if negative {
                coeff = -coeff;
            }
            out.add_term(Monomial(exps), coeff);
        }
        Ok(out)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in descending lex order; prime-field coefficients are printed
    /// as their canonical representatives.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let (negative, magnitude) = match c {
                Scalar::Rational(r) if r.is_negative() => (true, -c),
                _ => (false, c.clone()),
            };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{magnitude}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.check_compatible(rhs).expect("incompatible polynomials");
        let (mut big, small) = if self.len() >= rhs.len() {
            (self.clone(), rhs)
        } else {
            (rhs.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(m.clone(), c.clone());
        }
        big
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.check_compatible(rhs).expect("incompatible polynomials");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &'a LaurentPoly) -> LaurentPoly {
        self.check_compatible(rhs).expect("incompatible polynomials");
        let mut out = LaurentPoly::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            out.add_scaled_shifted(rhs, c, m);
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            field: self.field,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
