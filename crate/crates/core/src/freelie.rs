//! The free Lie ring over the integers in Lyndon coordinates.
//!
//! Elements are stored as integer combinations of standard bracketings of
//! Lyndon words. Brackets of basis elements are computed by the standard
//! rewriting on pairs of Lyndon words and memoized per ring.
//!
//! The free associative ring is the reference model: any Lie polynomial can
//! be read back into Lyndon coordinates by triangular elimination, which
//! relies on the leading-term property (the expansion of the standard
//! bracketing of a Lyndon word `w` is `w` plus lexicographically larger
//! words). Tests check the rewriting against it.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::lyndon::{
    enumerate_lyndon_words, is_lyndon, BracketTree, Letter, LyndonWord, WordDisplay,
};
use crate::zmodule::SparseVector;

pub type Word = Vec<Letter>;

/// Homogeneous element of the free associative ring with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AssocPolynomial {
    degree: usize,
    terms: BTreeMap<Word, BigInt>,
}

impl AssocPolynomial {
    pub fn zero(degree: usize) -> Self {
        AssocPolynomial {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(word: Word, coeff: BigInt) -> Self {
        let mut p = AssocPolynomial::zero(word.len());
        p.add_term(word, coeff);
        p
    }

    /// Builds a polynomial from terms; all words must share one length.
    pub fn from_terms(
        degree: usize,
        terms: impl IntoIterator<Item = (Word, BigInt)>,
    ) -> Result<Self> {
        let mut p = AssocPolynomial::zero(degree);
        for (w, c) in terms {
            if w.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.len(),
                });
            }
            p.add_term(w, c);
        }
        Ok(p)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, w: &[Letter]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, w: Word, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// `self += c * other`.
    fn add_scaled(&mut self, other: &AssocPolynomial, c: &BigInt) {
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a * c);
        }
    }

    fn mul(&self, other: &AssocPolynomial) -> AssocPolynomial {
        let mut out = AssocPolynomial::zero(self.degree + other.degree);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut w = Vec::with_capacity(u.len() + v.len());
                w.extend_from_slice(u);
                w.extend_from_slice(v);
                out.add_term(w, a * b);
            }
        }
        out
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &AssocPolynomial) -> AssocPolynomial {
        let mut out = self.mul(other);
        out.add_scaled(&other.mul(self), &-BigInt::one());
        out
    }
}

impl fmt::Display for AssocPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(f, self.terms.iter().map(|(w, c)| (WordDisplay(w), c)))
    }
}

pub(crate) fn write_combination<T: fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (T, impl std::borrow::Borrow<BigInt>)>,
) -> fmt::Result {
    let mut first = true;
    for (w, c) in terms {
        let c = c.borrow();
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        let mag = c.abs();
        if mag.is_one() {
            write!(f, "{w}")?;
        } else {
            write!(f, "{mag}*{w}")?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

pub fn expand_tree(t: &BracketTree) -> AssocPolynomial {
    match t {
        BracketTree::Leaf(a) => AssocPolynomial::monomial(vec![*a], BigInt::one()),
        BracketTree::Node(l, r) => expand_tree(l).commutator(&expand_tree(r)),
    }
}

/// Homogeneous element of the free Lie ring on `k` generators, stored in
/// Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LieElement {
    k: usize,
    degree: usize,
    coords: BTreeMap<LyndonWord, BigInt>,
}

impl LieElement {
    pub fn zero(k: usize, degree: usize) -> Self {
        LieElement {
            k,
            degree,
            coords: BTreeMap::new(),
        }
    }

    /// The degree-one element for generator `index`.
    pub fn generator(k: usize, index: usize) -> Result<Self> {
        if index >= k {
            return Err(Error::InvalidArgument(format!(
                "generator {index} out of range for {k} generators"
            )));
        }
        let mut x = LieElement::zero(k, 1);
        x.coords
            .insert(LyndonWord::letter(index as Letter), BigInt::one());
        Ok(x)
    }

    pub fn from_coords(
        k: usize,
        degree: usize,
        coords: impl IntoIterator<Item = (LyndonWord, BigInt)>,
    ) -> Result<Self> {
        let mut x = LieElement::zero(k, degree);
        for (w, c) in coords {
            if w.degree() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: w.degree(),
                });
            }
            if let Some(&a) = w.letters().iter().find(|&&a| a as usize >= k) {
                return Err(Error::InvalidArgument(format!(
                    "letter {a} out of range for {k} generators"
                )));
            }
            x.add_coord(w, c);
        }
        Ok(x)
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn coords(&self) -> impl Iterator<Item = (&LyndonWord, &BigInt)> {
        self.coords.iter()
    }

    pub fn coefficient(&self, w: &LyndonWord) -> BigInt {
        self.coords.get(w).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_coord(&mut self, w: LyndonWord, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.coords.entry(w.clone()).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.coords.remove(&w);
        }
    }

    fn check_compatible(&self, other: &LieElement) -> Result<()> {
        if self.k != other.k {
            return Err(Error::AlphabetMismatch {
                left: self.k,
                right: other.k,
            });
        }
        if self.degree != other.degree {
            return Err(Error::DegreeMismatch {
                expected: self.degree,
                found: other.degree,
            });
        }
        Ok(())
    }

    /// `self + c * other`.
    pub fn add_scaled(&self, other: &LieElement, c: &BigInt) -> Result<LieElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, a) in &other.coords {
            out.add_coord(w.clone(), a * c);
        }
        Ok(out)
    }

    pub fn add(&self, other: &LieElement) -> Result<LieElement> {
        self.add_scaled(other, &BigInt::one())
    }

    pub fn sub(&self, other: &LieElement) -> Result<LieElement> {
        self.add_scaled(other, &-BigInt::one())
    }

    pub fn scale(&self, c: &BigInt) -> LieElement {
        LieElement::zero(self.k, self.degree)
            .add_scaled(self, c)
            .expect("same shape")
    }

    /// Sum of elements of equal degree over a common alphabet.
    pub fn sum<'a>(k: usize, degree: usize, items: impl IntoIterator<Item = &'a LieElement>) -> Result<LieElement> {
        items
            .into_iter()
            .try_fold(LieElement::zero(k, degree), |acc, x| acc.add(x))
    }

    /// Dense coordinates in the lexicographic Lyndon basis of degree `d`.
    pub fn coordinate_vector(&self, d: usize) -> Result<Vec<BigInt>> {
        if self.degree != d {
            return Err(Error::DegreeMismatch {
                expected: d,
                found: self.degree,
            });
        }
        Ok(enumerate_lyndon_words(self.k, d)?
            .iter()
            .map(|w| self.coefficient(w))
            .collect())
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_combination(
            f,
            self.coords.iter().map(|(w, c)| (format!("[{w}]"), c)),
        )
    }
}

/// Lyndon basis of one degree with a word-to-position index.
#[derive(Debug)]
pub struct DegreeBasis {
    words: Vec<LyndonWord>,
    index: HashMap<LyndonWord, usize>,
}

impl DegreeBasis {
    pub fn words(&self) -> &[LyndonWord] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn position(&self, w: &LyndonWord) -> Option<usize> {
        self.index.get(w).copied()
    }
}

type Coords = BTreeMap<LyndonWord, BigInt>;

fn accumulate(out: &mut Coords, w: &LyndonWord, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let slot = out.entry(w.clone()).or_insert_with(BigInt::zero);
    *slot += c;
    if slot.is_zero() {
        out.remove(w);
    }
}

/// Free Lie ring on `k` generators with memoized bracketing expansions and
/// per-degree bases. Shareable across threads.
#[derive(Debug)]
pub struct FreeLieRing {
    k: usize,
    expansions: RwLock<HashMap<LyndonWord, Arc<AssocPolynomial>>>,
    products: RwLock<HashMap<(LyndonWord, LyndonWord), Arc<Coords>>>,
    bases: RwLock<HashMap<usize, Arc<DegreeBasis>>>,
}

impl FreeLieRing {
    pub fn new(k: usize) -> Result<Self> {
        if k == 0 || k > Letter::MAX as usize + 1 {
            return Err(Error::InvalidArgument(format!("unsupported alphabet size {k}")));
        }
        Ok(FreeLieRing {
            k,
            expansions: RwLock::new(HashMap::new()),
            products: RwLock::new(HashMap::new()),
            bases: RwLock::new(HashMap::new()),
        })
    }

    pub fn alphabet_size(&self) -> usize {
        self.k
    }

    pub fn basis(&self, d: usize) -> Result<Arc<DegreeBasis>> {
        if let Some(b) = self.bases.read().unwrap().get(&d) {
            return Ok(b.clone());
        }
        let words = enumerate_lyndon_words(self.k, d)?;
        let index = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let basis = Arc::new(DegreeBasis { words, index });
        self.bases.write().unwrap().insert(d, basis.clone());
        Ok(basis)
    }

    /// Expansion of the standard bracketing of a Lyndon word.
    pub fn expansion(&self, w: &LyndonWord) -> Arc<AssocPolynomial> {
        if let Some(p) = self.expansions.read().unwrap().get(w) {
            return p.clone();
        }
        let p = match w.standard_factorization() {
            None => AssocPolynomial::monomial(w.letters().to_vec(), BigInt::one()),
            Some((u, v)) => self.expansion(&u).commutator(&self.expansion(&v)),
        };
        let p = Arc::new(p);
        self.expansions.write().unwrap().insert(w.clone(), p.clone());
        p
    }

    pub fn expand(&self, x: &LieElement) -> AssocPolynomial {
        let mut out = AssocPolynomial::zero(x.degree);
        for (w, c) in &x.coords {
            out.add_scaled(&self.expansion(w), c);
        }
        out
    }

    pub fn to_lyndon_coordinates(&self, p: &AssocPolynomial) -> Result<LieElement> {
        let mut rest = p.clone();
        let mut out = LieElement::zero(self.k, p.degree);
        while let Some((w, c)) = rest.terms.iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            if let Some(&a) = w.iter().find(|&&a| a as usize >= self.k) {
                return Err(Error::NotALieElement(format!(
                    "letter {a} out of range for {} generators",
                    self.k
                )));
            }
            if !is_lyndon(&w) {
                return Err(Error::NotALieElement(format!(
                    "leading word {} is not Lyndon",
                    WordDisplay(&w)
                )));
            }
            let lw = LyndonWord::new_unchecked(w);
            rest.add_scaled(&self.expansion(&lw), &-c.clone());
            out.add_coord(lw, c);
        }
        Ok(out)
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        for z in [x, y] {
            if z.k != self.k {
                return Err(Error::AlphabetMismatch {
                    left: self.k,
                    right: z.k,
                });
            }
        }
        let mut coords = Coords::new();
        for (u, a) in &x.coords {
            for (v, b) in &y.coords {
                let ab = a * b;
                for (w, c) in self.bracket_words(u, v).iter() {
                    accumulate(&mut coords, w, &ab * c);
                }
            }
        }
        let mut out = LieElement::zero(self.k, 0);
        out.coords = coords;
        // keep the degree even when the bracket vanishes
        out.degree = x.degree + y.degree;
        Ok(out)
    }

    /// Bracket of two Lyndon basis elements, by the standard
    /// rewriting: `[P_u, P_v] = P_uv` when `(u, v)` is the standard
    /// factorization of `uv`, otherwise Jacobi through `u = (u1, u2)`.
    fn bracket_words(&self, u: &LyndonWord, v: &LyndonWord) -> Arc<Coords> {
        match u.cmp(v) {
            Ordering::Equal => return Arc::new(Coords::new()),
            Ordering::Greater => {
                let r = self.bracket_words(v, u);
                return Arc::new(r.iter().map(|(w, c)| (w.clone(), -c)).collect());
            }
            Ordering::Less => {}
        }
        let key = (u.clone(), v.clone());
        if let Some(r) = self.products.read().unwrap().get(&key) {
            return r.clone();
        }
        let mut out = Coords::new();
        match u.standard_factorization() {
            Some((u1, u2)) if u2 < *v => {
                for (w, c) in self.bracket_words(&u2, v).iter() {
                    for (z, d) in self.bracket_words(&u1, w).iter() {
                        accumulate(&mut out, z, c * d);
                    }
                }
                for (w, c) in self.bracket_words(&u1, v).iter() {
                    for (z, d) in self.bracket_words(w, &u2).iter() {
                        accumulate(&mut out, z, c * d);
                    }
                }
            }
            _ => {
                let mut letters = u.letters().to_vec();
                letters.extend_from_slice(v.letters());
                out.insert(LyndonWord::new_unchecked(letters), BigInt::one());
            }
        }
        let out = Arc::new(out);
        self.products.write().unwrap().insert(key, out.clone());
        out
    }

    pub fn coordinate_vector(&self, x: &LieElement) -> Result<Vec<BigInt>> {
        let basis = self.basis(x.degree)?;
        let mut v = vec![BigInt::zero(); basis.len()];
        for (w, c) in &x.coords {
            v[basis.position(w).expect("basis word")] = c.clone();
        }
        Ok(v)
    }

    pub fn sparse_coordinates(&self, x: &LieElement) -> Result<SparseVector> {
        let basis = self.basis(x.degree)?;
        Ok(SparseVector::from_entries(
            x.coords
                .iter()
                .map(|(w, c)| (basis.position(w).expect("basis word"), c.clone())),
        ))
    }

    pub fn from_sparse(&self, d: usize, v: &SparseVector) -> Result<LieElement> {
        let basis = self.basis(d)?;
        let mut x = LieElement::zero(self.k, d);
        for (i, c) in v.entries() {
            let w = basis.words().get(*i).ok_or(Error::DimensionMismatch {
                expected: basis.len(),
                found: *i + 1,
            })?;
            x.coords.insert(w.clone(), c.clone());
        }
        Ok(x)
    }
}

/// Lyndon coordinates of an associative polynomial known to be a Lie element.
pub fn to_lyndon_coordinates(p: &AssocPolynomial, k: usize) -> Result<LieElement> {
    FreeLieRing::new(k)?.to_lyndon_coordinates(p)
}

pub fn bracket(x: &LieElement, y: &LieElement) -> Result<LieElement> {
    if x.k != y.k {
        return Err(Error::AlphabetMismatch {
            left: x.k,
            right: y.k,
        });
    }
    FreeLieRing::new(x.k)?.bracket(x, y)
}

pub fn coordinate_vector(x: &LieElement, d: usize) -> Result<Vec<BigInt>> {
    x.coordinate_vector(d)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::standard_bracketing;

    fn word(s: &str) -> Word {
        s.bytes().map(|b| (b - b'a') as Letter).collect()
    }

    fn lw(s: &str) -> LyndonWord {
        LyndonWord::new(word(s)).unwrap()
    }

    fn poly(terms: &[(&str, i64)]) -> AssocPolynomial {
        let d = terms[0].0.len();
        AssocPolynomial::from_terms(d, terms.iter().map(|(w, c)| (word(w), BigInt::from(*c))))
            .unwrap()
    }

    fn lie(k: usize, terms: &[(&str, i64)]) -> LieElement {
        let d = terms[0].0.len();
        LieElement::from_coords(k, d, terms.iter().map(|(w, c)| (lw(w), BigInt::from(*c))))
            .unwrap()
    }

    #[test]
    fn expansions() {
        let ab = standard_bracketing(&lw("ab")).unwrap();
        assert_eq!(expand_tree(&ab), poly(&[("ab", 1), ("ba", -1)]));
        let aab = standard_bracketing(&lw("aab")).unwrap();
        assert_eq!(expand_tree(&aab), poly(&[("aab", 1), ("aba", -2), ("baa", 1)]));
        assert_eq!(expand_tree(&BracketTree::Leaf(1)), poly(&[("b", 1)]));
    }

    #[test]
    fn coordinates_from_polynomials() {
        assert_eq!(to_lyndon_coordinates(&poly(&[("ab", 1), ("ba", -1)]), 2).unwrap(), lie(2, &[("ab", 1)]));
        assert_eq!(
            to_lyndon_coordinates(&poly(&[("aab", 1), ("aba", -2), ("baa", 1)]), 2).unwrap(),
            lie(2, &[("aab", 1)])
        );
        assert_eq!(to_lyndon_coordinates(&poly(&[("ba", 1), ("ab", -1)]), 2).unwrap(), lie(2, &[("ab", -1)]));
    }

    #[test]
    fn non_lie_polynomials_are_rejected() {
        // ab alone: elimination leaves -ba with a non-Lyndon leading word
        assert!(matches!(
            to_lyndon_coordinates(&poly(&[("ab", 1)]), 2),
            Err(Error::NotALieElement(_))
        ));
        assert!(matches!(
            to_lyndon_coordinates(&poly(&[("aa", 1)]), 2),
            Err(Error::NotALieElement(_))
        ));
        assert!(matches!(
            to_lyndon_coordinates(&poly(&[("ac", 1), ("ca", -1)]), 2),
            Err(Error::NotALieElement(_))
        ));
    }

    #[test]
    fn rewriting_matches_expansion() {
        for k in 1..=3 {
            let ring = FreeLieRing::new(k).unwrap();
            for d1 in 1..=4 {
                for d2 in 1..=(7 - d1) {
                    for u in enumerate_lyndon_words(k, d1).unwrap() {
                        for v in enumerate_lyndon_words(k, d2).unwrap() {
                            let x = LieElement::from_coords(k, d1, [(u.clone(), BigInt::one())]).unwrap();
                            let y = LieElement::from_coords(k, d2, [(v.clone(), BigInt::one())]).unwrap();
                            let p = ring.expansion(&u).commutator(&ring.expansion(&v));
                            let mut expected = ring.to_lyndon_coordinates(&p).unwrap();
                            expected.degree = d1 + d2;
                            assert_eq!(ring.bracket(&x, &y).unwrap(), expected, "[{u}, {v}]");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn brackets() {
        let a = LieElement::generator(2, 0).unwrap();
        let b = LieElement::generator(2, 1).unwrap();
        assert_eq!(bracket(&a, &b).unwrap(), lie(2, &[("ab", 1)]));
        assert_eq!(bracket(&b, &a).unwrap(), lie(2, &[("ab", -1)]));
        let ab = bracket(&a, &b).unwrap();
        assert_eq!(bracket(&ab, &a).unwrap(), lie(2, &[("aab", -1)]));
        let zero = bracket(&a, &a).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.degree(), 2);
        let c3 = LieElement::generator(3, 0).unwrap();
        assert!(matches!(bracket(&a, &c3), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn dense_coordinates() {
        assert_eq!(lie(2, &[("ab", 1)]).coordinate_vector(2).unwrap(), vec![BigInt::from(1)]);
        assert_eq!(
            LieElement::zero(2, 3).coordinate_vector(3).unwrap(),
            vec![BigInt::from(0), BigInt::from(0)]
        );
        assert_eq!(
            lie(2, &[("aab", 1), ("abb", -1)]).coordinate_vector(3).unwrap(),
            vec![BigInt::from(1), BigInt::from(-1)]
        );
        assert!(matches!(
            lie(2, &[("ab", 1)]).coordinate_vector(3),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn leading_term_and_round_trip() {
        for k in 1..=3 {
            let ring = FreeLieRing::new(k).unwrap();
            for d in 1..=6 {
                for w in enumerate_lyndon_words(k, d).unwrap() {
                    let p = expand_tree(&standard_bracketing(&w).unwrap());
                    let (lead, c) = p.terms().next().unwrap();
                    assert_eq!(lead.as_slice(), w.letters());
                    assert!(c.is_one());
                    assert_eq!(*ring.expansion(&w), p);
                    let x = ring.to_lyndon_coordinates(&p).unwrap();
                    assert_eq!(x, LieElement::from_coords(k, d, [(w.clone(), BigInt::one())]).unwrap());
                }
            }
        }
    }

    #[test]
    fn sparse_round_trip() {
        let ring = FreeLieRing::new(3).unwrap();
        let x = lie(3, &[("aab", 2), ("abc", -5), ("bcc", 1)]);
        let v = ring.sparse_coordinates(&x).unwrap();
        assert_eq!(ring.from_sparse(3, &v).unwrap(), x);
        let dense: Vec<BigInt> = ring.coordinate_vector(&x).unwrap();
        assert_eq!(dense, x.coordinate_vector(3).unwrap());
    }

    #[test]
    fn display() {
        assert_eq!(lie(2, &[("aab", 1), ("abb", -2)]).to_string(), "[aab] - 2*[abb]");
        assert_eq!(poly(&[("ab", 1), ("ba", -1)]).to_string(), "ab - ba");
        assert_eq!(LieElement::zero(2, 2).to_string(), "0");
    }
}
