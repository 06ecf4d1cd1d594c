//! Homogeneous presentations of graded Lie rings attached to pure braid
//! groups of the disc and the sphere and to pure mapping class groups of the
//! punctured sphere.
//!
//! Generators are indexed by pairs `(i, j)` with `1 <= i < j`, ordered
//! lexicographically; the symmetric and diagonal conventions (`B_{j,i} =
//! B_{i,j}`, `B_{i,i} = 0`) are resolved by that indexing and never appear
//! as relations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::freelie::{bracket, LieElement};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PresentationKind {
    /// Infinitesimal braid relations, for the pure braid group of the disc.
    Kohno,
    /// Pure braid group of the sphere.
    Ihara,
    /// Pure mapping class group of the sphere on all pairs of points.
    Pm0nFull,
    /// Pure mapping class group of the sphere after eliminating the last point.
    Pm0nReduced,
    /// Pure braid group of the sphere after eliminating the last point.
    SphereReduced,
}

impl PresentationKind {
    pub const ALL: [PresentationKind; 5] = [
        PresentationKind::Kohno,
        PresentationKind::Ihara,
        PresentationKind::Pm0nFull,
        PresentationKind::Pm0nReduced,
        PresentationKind::SphereReduced,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PresentationKind::Kohno => "kohno",
            PresentationKind::Ihara => "ihara",
            PresentationKind::Pm0nFull => "pm0n-full",
            PresentationKind::Pm0nReduced => "pm0n-reduced",
            PresentationKind::SphereReduced => "sphere-reduced",
        }
    }

    pub fn min_points(self) -> usize {
        match self {
            PresentationKind::Kohno => 2,
            PresentationKind::Ihara | PresentationKind::Pm0nFull => 3,
            PresentationKind::Pm0nReduced | PresentationKind::SphereReduced => 4,
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            PresentationKind::Kohno => "gr P_n: generators A_ij (i<j<=n), infinitesimal braid relations",
            PresentationKind::Ihara => "gr P_n(S^2): generators B_ij (i<j<=n), disjoint commutators, row sums",
            PresentationKind::Pm0nFull => "gr PM_{0,n}: Ihara relations plus the total sum of all B_ij",
            PresentationKind::Pm0nReduced => "gr PM_{0,n}: generators A_ij (i<j<=n-1), disjoint commutators, sum of all A_ij",
            PresentationKind::SphereReduced => "gr P_n(S^2): generators A_ij (i<j<=n-1), disjoint commutators, twice the sum of all A_ij",
        }
    }

    pub fn build(self, n: usize) -> Result<GradedPresentation> {
        match self {
            PresentationKind::Kohno => build_kohno(n),
            PresentationKind::Ihara => build_ihara(n),
            PresentationKind::Pm0nFull => build_pm0n_full(n),
            PresentationKind::Pm0nReduced => build_pm0n_reduced(n),
            PresentationKind::SphereReduced => build_sphere_reduced(n),
        }
    }
}

impl fmt::Display for PresentationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PresentationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PresentationKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown presentation '{s}'")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorLabel {
    pub symbol: char,
    pub i: usize,
    pub j: usize,
}

impl fmt::Display for GeneratorLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}_{{{},{}}}", self.symbol, self.i, self.j)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPresentation {
    pub kind: PresentationKind,
    pub n: usize,
    pub generators: Vec<GeneratorLabel>,
    pub relations: Vec<LieElement>,
}

impl GradedPresentation {
    pub fn name(&self) -> &'static str {
        self.kind.name()
    }

    pub fn alphabet_size(&self) -> usize {
        self.generators.len()
    }

    pub fn relations_of_degree(&self, d: usize) -> impl Iterator<Item = &LieElement> {
        self.relations.iter().filter(move |r| r.degree() == d)
    }

    /// Position of the generator for the unordered pair `{i, j}`.
    pub fn generator_index(&self, i: usize, j: usize) -> Option<usize> {
        let (i, j) = (i.min(j), i.max(j));
        self.generators.iter().position(|g| g.i == i && g.j == j)
    }

    pub fn generator(&self, i: usize, j: usize) -> Result<LieElement> {
        let idx = self
            .generator_index(i, j)
            .ok_or(Error::InvalidIndices { i, j, n: self.n })?;
        LieElement::generator(self.alphabet_size(), idx)
    }

    /// Sum of all generators.
    pub fn generator_sum(&self) -> LieElement {
        let k = self.alphabet_size();
        let gens: Vec<LieElement> = (0..k)
            .map(|g| LieElement::generator(k, g).expect("in range"))
            .collect();
        LieElement::sum(k, 1, &gens).expect("same shape")
    }
}

impl fmt::Display for GradedPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (n = {})", self.kind, self.n)?;
        let names: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        writeln!(f, "generators: {}", names.join(", "))?;
        for r in &self.relations {
            writeln!(f, "  {}", RelationDisplay(self, r))?;
        }
        Ok(())
    }
}

/// Relation printed with generator names; letters map to labels in order.
pub struct RelationDisplay<'a>(pub &'a GradedPresentation, pub &'a LieElement);

impl fmt::Display for RelationDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let GradedPresentation { generators, .. } = self.0;
        let terms = self.1.coords().map(|(w, c)| {
            let tree = crate::lyndon::standard_bracketing(w).expect("Lyndon");
            (nested_bracket(generators, &tree), c)
        });
        crate::freelie::write_combination(f, terms)?;
        f.write_str(" = 0")
    }
}

fn nested_bracket(gens: &[GeneratorLabel], t: &crate::lyndon::BracketTree) -> String {
    match t {
        crate::lyndon::BracketTree::Leaf(a) => gens[*a as usize].to_string(),
        crate::lyndon::BracketTree::Node(l, r) => {
            format!("[{}, {}]", nested_bracket(gens, l), nested_bracket(gens, r))
        }
    }
}

fn pair_labels(symbol: char, m: usize) -> Vec<GeneratorLabel> {
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            out.push(GeneratorLabel { symbol, i, j });
        }
    }
    out
}

fn check_n(kind: PresentationKind, n: usize) -> Result<()> {
    if n < kind.min_points() {
        return Err(Error::InvalidArgument(format!(
            "{kind} needs n >= {}, got {n}",
            kind.min_points()
        )));
    }
    Ok(())
}

struct Builder {
    kind: PresentationKind,
    n: usize,
    generators: Vec<GeneratorLabel>,
    relations: Vec<LieElement>,
}

impl Builder {
    fn new(kind: PresentationKind, n: usize, symbol: char, points: usize) -> Self {
        Builder {
            kind,
            n,
            generators: pair_labels(symbol, points),
            relations: Vec::new(),
        }
    }

    fn gen(&self, i: usize, j: usize) -> LieElement {
        let (i, j) = (i.min(j), i.max(j));
        let idx = self
            .generators
            .iter()
            .position(|g| g.i == i && g.j == j)
            .expect("label exists");
        LieElement::generator(self.generators.len(), idx).expect("in range")
    }

    fn sum(&self, pairs: impl IntoIterator<Item = (usize, usize)>) -> LieElement {
        let terms: Vec<LieElement> = pairs.into_iter().map(|(i, j)| self.gen(i, j)).collect();
        LieElement::sum(self.generators.len(), 1, &terms).expect("same shape")
    }

    fn disjoint_commutators(&mut self) {
        let gens = self.generators.clone();
        for (p, a) in gens.iter().enumerate() {
            for b in &gens[p + 1..] {
                if a.i != b.i && a.i != b.j && a.j != b.i && a.j != b.j {
                    let rel = bracket(&self.gen(a.i, a.j), &self.gen(b.i, b.j)).expect("same alphabet");
                    self.relations.push(rel);
                }
            }
        }
    }

    fn push_bracket(&mut self, x: &LieElement, y: &LieElement) {
        self.relations.push(bracket(x, y).expect("same alphabet"));
    }

    fn finish(self) -> GradedPresentation {
        GradedPresentation {
            kind: self.kind,
            n: self.n,
            generators: self.generators,
            relations: self.relations,
        }
    }
}

pub fn build_kohno(n: usize) -> Result<GradedPresentation> {
    check_n(PresentationKind::Kohno, n)?;
    let mut b = Builder::new(PresentationKind::Kohno, n, 'A', n);
    b.disjoint_commutators();
    for i in 1..=n {
        for j in i + 1..=n {
            for k in j + 1..=n {
                let (aij, aik, ajk) = (b.gen(i, j), b.gen(i, k), b.gen(j, k));
                b.push_bracket(&aij, &aik.add(&ajk)?);
                b.push_bracket(&aik, &aij.add(&ajk)?);
            }
        }
    }
    Ok(b.finish())
}

fn ihara_relations(b: &mut Builder, n: usize) {
    b.disjoint_commutators();
    for i in 1..=n {
        let row = b.sum((1..=n).filter(|&j| j != i).map(|j| (i, j)));
        b.relations.push(row);
    }
}

pub fn build_ihara(n: usize) -> Result<GradedPresentation> {
    check_n(PresentationKind::Ihara, n)?;
    let mut b = Builder::new(PresentationKind::Ihara, n, 'B', n);
    ihara_relations(&mut b, n);
    Ok(b.finish())
}

pub fn build_pm0n_full(n: usize) -> Result<GradedPresentation> {
    check_n(PresentationKind::Pm0nFull, n)?;
    let mut b = Builder::new(PresentationKind::Pm0nFull, n, 'B', n);
    ihara_relations(&mut b, n);
    let total = b.sum(pair_labels('B', n).into_iter().map(|g| (g.i, g.j)));
    b.relations.push(total);
    Ok(b.finish())
}

fn reduced(kind: PresentationKind, n: usize, multiple: i64) -> Result<GradedPresentation> {
    check_n(kind, n)?;
    let mut b = Builder::new(kind, n, 'A', n - 1);
    b.disjoint_commutators();
    let total = b.sum(pair_labels('A', n - 1).into_iter().map(|g| (g.i, g.j)));
    b.relations.push(total.scale(&BigInt::from(multiple)));
    Ok(b.finish())
}

pub fn build_pm0n_reduced(n: usize) -> Result<GradedPresentation> {
    reduced(PresentationKind::Pm0nReduced, n, 1)
}

pub fn build_sphere_reduced(n: usize) -> Result<GradedPresentation> {
    reduced(PresentationKind::SphereReduced, n, 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binom(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn count(p: &GradedPresentation, d: usize) -> usize {
        p.relations_of_degree(d).count()
    }

    fn dense(x: &LieElement) -> Vec<i64> {
        x.coordinate_vector(x.degree())
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn kohno_counts() {
        let p = build_kohno(2).unwrap();
        assert_eq!((p.generators.len(), p.relations.len()), (1, 0));
        let p = build_kohno(3).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (3, 2, 0));
        let p = build_kohno(4).unwrap();
        assert_eq!(p.generators.len(), 6);
        // 3 disjoint pairs plus 2 per triple
        assert_eq!(count(&p, 2), 3 + 2 * 4);
        assert!(build_kohno(1).is_err());
    }

    #[test]
    fn ihara_counts() {
        let p = build_ihara(3).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (3, 0, 3));
        let p = build_ihara(4).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (6, 3, 4));
        let p = build_ihara(5).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (10, 15, 5));
        assert!(build_ihara(2).is_err());
    }

    #[test]
    fn pm0n_full_counts() {
        let p = build_pm0n_full(4).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (6, 3, 5));
        let p = build_pm0n_full(5).unwrap();
        assert_eq!((p.generators.len(), count(&p, 1)), (10, 6));
        let p = build_pm0n_full(3).unwrap();
        assert_eq!(count(&p, 1), 4);
    }

    #[test]
    fn reduced_counts() {
        let p = build_pm0n_reduced(4).unwrap();
        let names: Vec<String> = p.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(names, ["A_{1,2}", "A_{1,3}", "A_{2,3}"]);
        assert_eq!((count(&p, 2), count(&p, 1)), (0, 1));
        assert_eq!(dense(&p.relations[0]), vec![1, 1, 1]);
        let p = build_pm0n_reduced(5).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (6, 3, 1));
        let p = build_pm0n_reduced(6).unwrap();
        assert_eq!((p.generators.len(), count(&p, 2), count(&p, 1)), (10, 15, 1));
        assert!(build_pm0n_reduced(3).is_err());

        let s = build_sphere_reduced(4).unwrap();
        assert_eq!(dense(&s.relations[0]), vec![2, 2, 2]);
        let s = build_sphere_reduced(5).unwrap();
        assert_eq!(count(&s, 2), 3);
        assert_eq!(dense(s.relations_of_degree(1).next().unwrap()), vec![2; 6]);
        assert!(build_sphere_reduced(3).is_err());
    }

    #[test]
    fn closed_form_counts() {
        for n in 4..=7 {
            assert_eq!(count(&build_ihara(n).unwrap(), 2), 3 * binom(n, 4));
            assert_eq!(count(&build_ihara(n).unwrap(), 1), n);
            assert_eq!(count(&build_kohno(n).unwrap(), 2), 3 * binom(n, 4) + 2 * binom(n, 3));
            assert_eq!(count(&build_pm0n_reduced(n).unwrap(), 2), 3 * binom(n - 1, 4));
        }
    }

    #[test]
    fn labels_are_canonical() {
        for kind in PresentationKind::ALL {
            let p = kind.build(6).unwrap();
            assert!(p.generators.iter().all(|g| 1 <= g.i && g.i < g.j));
            assert!(p.generators.windows(2).all(|w| (w[0].i, w[0].j) < (w[1].i, w[1].j)));
            for r in &p.relations {
                assert!(r.degree() == 1 || r.degree() == 2);
                assert!(!r.is_zero());
                assert_eq!(r.alphabet_size(), p.alphabet_size());
            }
        }
    }

    #[test]
    fn row_sums_are_twice_the_total() {
        for n in 3..=6 {
            let p = build_pm0n_full(n).unwrap();
            let deg1: Vec<&LieElement> = p.relations_of_degree(1).collect();
            let rows = LieElement::sum(p.alphabet_size(), 1, deg1[..n].iter().copied()).unwrap();
            let total = deg1[n];
            assert!(rows.sub(&total.scale(&BigInt::from(2))).unwrap().is_zero());
        }
    }

    #[test]
    fn names_parse() {
        for kind in PresentationKind::ALL {
            assert_eq!(kind.name().parse::<PresentationKind>().unwrap(), kind);
        }
        assert!("braid".parse::<PresentationKind>().is_err());
    }

    #[test]
    fn display_mentions_generators() {
        let p = build_pm0n_reduced(4).unwrap();
        let text = p.to_string();
        assert!(text.contains("A_{1,2}"));
        assert!(text.contains("= 0"));
        let k = build_kohno(3).unwrap();
        assert!(k.to_string().contains("[A_{1,2}, A_{1,3}]"));
        let s = build_sphere_reduced(4).unwrap();
        assert!(s.to_string().contains("2*A_{1,2} + 2*A_{1,3} + 2*A_{2,3} = 0"), "{s}");
    }
}
