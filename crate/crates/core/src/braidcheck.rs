//! Braid words and their Artin action on the free group.
//!
//! `sigma_i` acts on `F_n = <x_1, ..., x_n>` by `x_i -> x_i x_{i+1} x_i^-1`,
//! `x_{i+1} -> x_i`, fixing the other generators. The action of a
//! concatenation is the composition of the actions, and the representation
//! is faithful, so two braid words are equal in the braid group of the disc
//! exactly when their actions agree.

use std::fmt;

use crate::error::{Error, Result};
use crate::verify::CheckReport;

/// Word in the Artin generators: `+i` is `sigma_i`, `-i` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("braid words need at least one strand".into()));
        }
        if let Some(&bad) = letters
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize >= n)
        {
            return Err(Error::InvalidArgument(format!(
                "letter {bad} out of range for {n} strands"
            )));
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        BraidWord { n, letters: Vec::new() }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    /// Concatenation of several words on `n` strands.
    pub fn product<'a>(n: usize, words: impl IntoIterator<Item = &'a BraidWord>) -> Result<BraidWord> {
        words
            .into_iter()
            .try_fold(BraidWord::identity(n), |acc, w| acc.concat(w))
    }

    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn power(&self, e: usize) -> BraidWord {
        BraidWord {
            n: self.n,
            letters: self.letters.repeat(e),
        }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    /// Image in the symmetric group, as `perm[k]` = final position of the
    /// strand starting at `k` (0-based).
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.n).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.n];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (pos, l) in self.letters.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "s{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

/// Freely reduced word in `x_1, ..., x_n`; `+i` is `x_i`, `-i` its inverse.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FreeGroupWord(Vec<i32>);

impl FreeGroupWord {
    pub fn new(letters: Vec<i32>) -> Self {
        reduce(FreeGroupWord(letters))
    }

    pub fn generator(i: usize) -> Self {
        FreeGroupWord(vec![i as i32])
    }

    pub fn letters(&self) -> &[i32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord(self.0.iter().rev().map(|l| -l).collect())
    }

    /// Reduced product of the given words.
    pub fn product<'a>(parts: impl IntoIterator<Item = &'a FreeGroupWord>) -> FreeGroupWord {
        let mut out: Vec<i32> = Vec::new();
        for part in parts {
            for &l in &part.0 {
                push_reduced(&mut out, l);
            }
        }
        FreeGroupWord(out)
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (pos, l) in self.0.iter().enumerate() {
            if pos > 0 {
                f.write_str(" ")?;
            }
            if *l > 0 {
                write!(f, "x{l}")?;
            } else {
                write!(f, "x{}^-1", -l)?;
            }
        }
        Ok(())
    }
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

pub fn reduce(w: FreeGroupWord) -> FreeGroupWord {
    let mut out = Vec::with_capacity(w.0.len());
    for l in w.0 {
        push_reduced(&mut out, l);
    }
    FreeGroupWord(out)
}

/// Endomorphism of `F_n` given by the images of `x_1, ..., x_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeGroupEndomorphism {
    images: Vec<FreeGroupWord>,
}

impl FreeGroupEndomorphism {
    pub fn identity(n: usize) -> Self {
        FreeGroupEndomorphism {
            images: (1..=n).map(FreeGroupWord::generator).collect(),
        }
    }

    pub fn from_images(images: Vec<FreeGroupWord>) -> Self {
        FreeGroupEndomorphism {
            images: images.into_iter().map(reduce).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[FreeGroupWord] {
        &self.images
    }

    pub fn apply(&self, w: &FreeGroupWord) -> FreeGroupWord {
        let parts: Vec<FreeGroupWord> = w
            .0
            .iter()
            .map(|&l| {
                let img = &self.images[l.unsigned_abs() as usize - 1];
                if l > 0 {
                    img.clone()
                } else {
                    img.inverse()
                }
            })
            .collect();
        FreeGroupWord::product(&parts)
    }

    /// `self . other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &FreeGroupEndomorphism) -> FreeGroupEndomorphism {
        FreeGroupEndomorphism {
            images: other.images.iter().map(|w| self.apply(w)).collect(),
        }
    }

    /// `self . sigma_i^{+-1}`, updating the images in place.
    fn then_artin_letter(&mut self, letter: i32) {
        let i = letter.unsigned_abs() as usize - 1;
        let (a, b) = (self.images[i].clone(), self.images[i + 1].clone());
        if letter > 0 {
            self.images[i] = FreeGroupWord::product([&a, &b, &a.inverse()]);
            self.images[i + 1] = a;
        } else {
            self.images[i + 1] = FreeGroupWord::product([&b.inverse(), &a, &b]);
            self.images[i] = b;
        }
    }
}

impl fmt::Display for FreeGroupEndomorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, w) in self.images.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "x{} -> {w}", i + 1)?;
        }
        Ok(())
    }
}

pub fn artin_action(b: &BraidWord) -> FreeGroupEndomorphism {
    let mut f = FreeGroupEndomorphism::identity(b.n);
    for &l in &b.letters {
        f.then_artin_letter(l);
    }
    f
}

pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.n != b.n {
        return Err(Error::StrandMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(artin_action(a) == artin_action(b))
}

/// `a_{i,j} = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1`.
pub fn pure_generator_word(i: usize, j: usize, n: usize) -> Result<BraidWord> {
    if !(1 <= i && i < j && j <= n) {
        return Err(Error::InvalidIndices { i, j, n });
    }
    let conj: Vec<i32> = (i + 1..j).rev().map(|t| t as i32).collect();
    let mut letters = conj.clone();
    letters.extend([i as i32, i as i32]);
    letters.extend(conj.iter().rev().map(|t| -t));
    BraidWord::new(n, letters)
}

fn check_strands(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("need at least 2 strands, got {n}")));
    }
    Ok(())
}

/// `s_1 ... s_t`.
fn garside_prefix(t: usize) -> std::ops::RangeInclusive<i32> {
    1..=t as i32
}

/// Garside half twist `Pi_{n-1} Pi_{n-2} ... Pi_1` with `Pi_t = s_1 ... s_t`.
pub fn delta_word(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let letters = (1..n).rev().flat_map(garside_prefix).collect();
    BraidWord::new(n, letters)
}

/// `(a_{1,2} ... a_{1,n})(a_{2,3} ... a_{2,n}) ... (a_{n-1,n})`.
pub fn delta_squared_product(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let mut words = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            words.push(pure_generator_word(i, j, n)?);
        }
    }
    BraidWord::product(n, &words)
}

/// `(a_{1,2})(a_{1,3} a_{2,3}) ... (a_{1,n} ... a_{n-1,n})`.
pub fn delta_squared_product_by_columns(n: usize) -> Result<BraidWord> {
    check_strands(n)?;
    let mut words = Vec::new();
    for j in 2..=n {
        for i in 1..j {
            words.push(pure_generator_word(i, j, n)?);
        }
    }
    BraidWord::product(n, &words)
}

fn a(i: usize, j: usize, n: usize) -> BraidWord {
    pure_generator_word(i, j, n).expect("valid indices")
}

fn prod(n: usize, words: &[BraidWord]) -> BraidWord {
    BraidWord::product(n, words).expect("same strand count")
}

fn record(report: &mut CheckReport, label: String, lhs: &BraidWord, rhs: &BraidWord) {
    let ok = braids_equal(lhs, rhs).expect("same strand count");
    report.push(label, ok);
}

/// Every instance of the four families of pure braid relations on `n`
/// strands, in index order.
pub fn verify_burau_relations(n: usize) -> CheckReport {
    let mut report = CheckReport::new(format!("burau relations, n = {n}"));
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                for l in k + 1..=n {
                    // a_ij a_kl = a_kl a_ij, i<j<k<l
                    record(
                        &mut report,
                        format!("a{i}{j} a{k}{l} = a{k}{l} a{i}{j}"),
                        &prod(n, &[a(i, j, n), a(k, l, n)]),
                        &prod(n, &[a(k, l, n), a(i, j, n)]),
                    );
                    // nested pair i<k<l<j, relabelled: outer (i, l), inner (j, k)
                    record(
                        &mut report,
                        format!("a{i}{l} a{j}{k} = a{j}{k} a{i}{l}"),
                        &prod(n, &[a(i, l, n), a(j, k, n)]),
                        &prod(n, &[a(j, k, n), a(i, l, n)]),
                    );
                    // a_ik a_jk a_jl a_jk^-1 = a_jk a_jl a_jk^-1 a_ik, i<j<k<l
                    let ajk_inv = a(j, k, n).inverse();
                    record(
                        &mut report,
                        format!("a{i}{k} a{j}{k} a{j}{l} a{j}{k}^-1 = a{j}{k} a{j}{l} a{j}{k}^-1 a{i}{k}"),
                        &prod(n, &[a(i, k, n), a(j, k, n), a(j, l, n), ajk_inv.clone()]),
                        &prod(n, &[a(j, k, n), a(j, l, n), ajk_inv, a(i, k, n)]),
                    );
                }
                // a_ij a_ik a_jk = a_ik a_jk a_ij
                record(
                    &mut report,
                    format!("a{i}{j} a{i}{k} a{j}{k} = a{i}{k} a{j}{k} a{i}{j}"),
                    &prod(n, &[a(i, j, n), a(i, k, n), a(j, k, n)]),
                    &prod(n, &[a(i, k, n), a(j, k, n), a(i, j, n)]),
                );
                // a_ik a_jk a_ij = a_jk a_ij a_ik
                record(
                    &mut report,
                    format!("a{i}{k} a{j}{k} a{i}{j} = a{j}{k} a{i}{j} a{i}{k}"),
                    &prod(n, &[a(i, k, n), a(j, k, n), a(i, j, n)]),
                    &prod(n, &[a(j, k, n), a(i, j, n), a(i, k, n)]),
                );
            }
        }
    }
    report
}

/// `(s_1 ... s_{n-1})^n = Delta^2` in the braid group of the disc.
pub fn verify_magnus_equivalence(n: usize) -> Result<bool> {
    check_strands(n)?;
    let cycle = BraidWord::new(n, garside_prefix(n - 1).collect())?;
    braids_equal(&cycle.power(n), &delta_word(n)?.power(2))
}

/// `Delta^2` commutes with every Artin generator.
pub fn centrality_check(n: usize) -> Result<bool> {
    check_strands(n)?;
    let d2 = delta_word(n)?.power(2);
    for i in 1..n {
        let s = BraidWord::new(n, vec![i as i32])?;
        if !braids_equal(&d2.concat(&s)?, &s.concat(&d2)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `s_1 ... s_{n-2} s_{n-1}^2 s_{n-2} ... s_1`.
pub fn sphere_relator(n: usize) -> Result<BraidWord> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!("sphere relator needs n >= 3, got {n}")));
    }
    let up: Vec<i32> = (1..n as i32).collect();
    let mut letters = up.clone();
    letters.extend(up.iter().rev());
    BraidWord::new(n, letters)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SphereSanity {
    pub n: usize,
    pub permutation_is_identity: bool,
    pub exponent_sum: i64,
    pub trivial_in_disc_group: bool,
}

impl SphereSanity {
    pub fn passed(&self) -> bool {
        self.permutation_is_identity
            && self.exponent_sum == 2 * (self.n as i64 - 1)
            && !self.trivial_in_disc_group
    }
}

/// Checks on the homomorphic images of the sphere relator: it is a pure
/// braid with exponent sum `2(n-1)`, so it is not trivial in the disc group.
pub fn sphere_relator_sanity(n: usize) -> Result<SphereSanity> {
    let w = sphere_relator(n)?;
    let perm = w.permutation();
    Ok(SphereSanity {
        n,
        permutation_is_identity: perm.iter().enumerate().all(|(i, &p)| i == p),
        exponent_sum: w.exponent_sum(),
        trivial_in_disc_group: braids_equal(&w, &BraidWord::identity(n))?,
    })
}
