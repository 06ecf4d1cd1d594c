//! Lyndon words over a finite ordered alphabet.
//!
//! Letters are 0-based indices; letter `0` is the smallest. The standard
//! bracketings of the Lyndon words of length `d` form a basis of the degree
//! `d` component of the free Lie ring, whose rank is given by [`witt_rank`].

use std::fmt;

use crate::error::{Error, Result};

pub type Letter = u16;

/// A nonempty word that is strictly smaller than each of its proper rotations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LyndonWord(Vec<Letter>);

impl LyndonWord {
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        if !is_lyndon(&letters) {
            return Err(Error::InvalidArgument(format!(
                "{} is not a Lyndon word",
                WordDisplay(&letters)
            )));
        }
        Ok(LyndonWord(letters))
    }

    pub(crate) fn new_unchecked(letters: Vec<Letter>) -> Self {
        debug_assert!(is_lyndon(&letters));
        LyndonWord(letters)
    }

    pub fn letter(a: Letter) -> Self {
        LyndonWord(vec![a])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Standard factorization `w = uv` where `v` is the longest proper suffix
    /// that is itself Lyndon. Returns `None` for single letters.
    pub fn standard_factorization(&self) -> Option<(LyndonWord, LyndonWord)> {
        if self.0.len() < 2 {
            return None;
        }
        let split = (1..self.0.len())
            .find(|&s| is_lyndon(&self.0[s..]))
            .expect("the last letter is always a Lyndon suffix");
        Some((
            LyndonWord(self.0[..split].to_vec()),
            LyndonWord(self.0[split..].to_vec()),
        ))
    }
}

impl fmt::Display for LyndonWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(&WordDisplay(&self.0).to_string())
    }
}

/// Prints letters as `a, b, c, ...` while the alphabet fits, then `x26.x27...`.
pub struct WordDisplay<'a>(pub &'a [Letter]);

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&a| a < 26) {
            for &a in self.0 {
                write!(f, "{}", (b'a' + a as u8) as char)?;
            }
            Ok(())
        } else {
            for (pos, &a) in self.0.iter().enumerate() {
                if pos > 0 {
                    f.write_str(".")?;
                }
                write!(f, "x{a}")?;
            }
            Ok(())
        }
    }
}

/// Rotation-minimality test in linear time (one pass of Duval's factorization).
pub fn is_lyndon(w: &[Letter]) -> bool {
    if w.is_empty() {
        return false;
    }
    let (mut i, mut j) = (0, 1);
    while j < w.len() {
        match w[i].cmp(&w[j]) {
            std::cmp::Ordering::Less => i = 0,
            std::cmp::Ordering::Equal => i += 1,
            std::cmp::Ordering::Greater => return false,
        }
        j += 1;
    }
    // w is a power of a Lyndon word of length j - i; it is Lyndon iff primitive.
    i == 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BracketTree {
    Leaf(Letter),
    Node(Box<BracketTree>, Box<BracketTree>),
}

impl BracketTree {
    pub fn node(left: BracketTree, right: BracketTree) -> Self {
        BracketTree::Node(Box::new(left), Box::new(right))
    }

    pub fn degree(&self) -> usize {
        match self {
            BracketTree::Leaf(_) => 1,
            BracketTree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    /// Leaves read left to right.
    pub fn leaves(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.degree());
        self.collect_leaves(&mut out);
        out
    }

    fn collect_leaves(&self, out: &mut Vec<Letter>) {
        match self {
            BracketTree::Leaf(a) => out.push(*a),
            BracketTree::Node(l, r) => {
                l.collect_leaves(out);
                r.collect_leaves(out);
            }
        }
    }
}

impl fmt::Display for BracketTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BracketTree::Leaf(a) => WordDisplay(&[*a]).fmt(f),
            BracketTree::Node(l, r) => write!(f, "[{l}, {r}]"),
        }
    }
}

fn check_args(k: usize, d: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument("alphabet size must be at least 1".into()));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    if k > Letter::MAX as usize + 1 {
        return Err(Error::InvalidArgument(format!("alphabet size {k} is too large")));
    }
    Ok(())
}

/// All Lyndon words of length `d` over `k` letters, in lexicographic order.
///
/// Generates Lyndon words of length at most `d` with the Fredricksen–Kessler–
/// Maiorana successor rule and keeps those of full length.
pub fn enumerate_lyndon_words(k: usize, d: usize) -> Result<Vec<LyndonWord>> {
    check_args(k, d)?;
    let top = (k - 1) as Letter;
    let mut out = Vec::new();
    let mut w: Vec<Letter> = vec![0];
    loop {
        if w.len() == d {
            out.push(LyndonWord(w.clone()));
        }
        // extend periodically to length d
        let m = w.len();
        for pos in m..d {
            let c = w[pos % m];
            w.push(c);
        }
        while matches!(w.last(), Some(&c) if c == top) {
            w.pop();
        }
        match w.last_mut() {
            Some(c) => *c += 1,
            None => break,
        }
    }
    Ok(out)
}

fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Rank of the degree `d` component of the free Lie ring on `k` generators:
/// `(1/d) * sum over e | d of mu(e) k^(d/e)`.
pub fn witt_rank(k: usize, d: usize) -> Result<u64> {
    check_args(k, d)?;
    let overflow = || Error::InvalidArgument(format!("witt_rank({k}, {d}) overflows"));
    let mut total: i128 = 0;
    for e in (1..=d).filter(|e| d.is_multiple_of(*e)) {
        let mu = mobius(e);
        if mu == 0 {
            continue;
        }
        let power = (k as i128)
            .checked_pow((d / e) as u32)
            .ok_or_else(overflow)?;
        total += mu as i128 * power;
    }
    debug_assert_eq!(total % d as i128, 0);
    u64::try_from(total / d as i128).map_err(|_| overflow())
}

pub fn standard_bracketing(w: &LyndonWord) -> Result<BracketTree> {
    if !is_lyndon(&w.0) {
        return Err(Error::InvalidArgument(format!("{w} is not a Lyndon word")));
    }
    Ok(bracket_unchecked(w))
}

fn bracket_unchecked(w: &LyndonWord) -> BracketTree {
    match w.standard_factorization() {
        None => BracketTree::Leaf(w.0[0]),
        Some((u, v)) => BracketTree::node(bracket_unchecked(&u), bracket_unchecked(&v)),
    }
}
