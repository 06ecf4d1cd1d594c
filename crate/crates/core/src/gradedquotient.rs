//! Graded components of a Lie ring presented by homogeneous relations.
//!
//! The degree `d` piece of the ideal generated by a set of homogeneous
//! relations is spanned by the relations of degree `d` together with
//! `[g, v]` for every generator `g` and every element `v` of the degree
//! `d - 1` piece. Every generator of the free Lie ring has degree one and
//! `ad [a, b] = ad a . ad b - ad b . ad a`, so iterated adjoint actions of
//! generators reach every element of the ideal. Each slice is stored as a
//! Hermite basis in Lyndon coordinates and the graded piece of the quotient
//! is its cokernel.

use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::freelie::{FreeLieRing, LieElement};
use crate::presentations::GradedPresentation;
use crate::zmodule::{SparseVector, SubgroupBasis};

/// Degree `d` component of the relation ideal, inside the free Lie
/// component of rank `witt_rank(k, d)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealSlice {
    pub degree: usize,
    pub basis: SubgroupBasis,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedComponentReport {
    pub degree: usize,
    pub witt_rank: usize,
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
    pub elapsed: Duration,
}

impl GradedComponentReport {
    /// Rank and torsion only; ignores timing.
    pub fn same_group(&self, other: &GradedComponentReport) -> bool {
        self.free_rank == other.free_rank && self.torsion == other.torsion
    }

    /// The group as text, e.g. `Z^2 + (Z/2)^3 + Z/4`.
    pub fn group_label(&self) -> String {
        let mut parts = vec![format!("Z^{}", self.free_rank)];
        let mut i = 0;
        while i < self.torsion.len() {
            let t = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|u| *u == t).count();
            parts.push(if run == 1 { format!("Z/{t}") } else { format!("(Z/{t})^{run}") });
            i += run;
        }
        parts.join(" + ")
    }
}

/// Incremental engine: slices are computed once and reused for higher degrees.
pub struct GradedQuotient {
    presentation: GradedPresentation,
    ring: Arc<FreeLieRing>,
    slices: Vec<IdealSlice>,
}

impl GradedQuotient {
    pub fn new(presentation: GradedPresentation) -> Result<Self> {
        let ring = Arc::new(FreeLieRing::new(presentation.alphabet_size())?);
        Ok(GradedQuotient {
            presentation,
            ring,
            slices: Vec::new(),
        })
    }

    pub fn presentation(&self) -> &GradedPresentation {
        &self.presentation
    }

    pub fn ring(&self) -> &FreeLieRing {
        &self.ring
    }

    /// Ideal slice of degree `d`, computing lower slices as needed.
    pub fn slice(&mut self, d: usize) -> Result<&IdealSlice> {
        if d == 0 {
            return Err(Error::InvalidArgument("degree must be at least 1".into()));
        }
        while self.slices.len() < d {
            let next = extend_slice(
                &self.presentation,
                &self.ring,
                self.slices.len() + 1,
                self.slices.last(),
            )?;
            self.slices.push(next);
        }
        Ok(&self.slices[d - 1])
    }

    pub fn component(&mut self, d: usize) -> Result<GradedComponentReport> {
        let start = Instant::now();
        let slice = self.slice(d)?;
        let inv = slice.basis.quotient_invariants();
        Ok(GradedComponentReport {
            degree: d,
            witt_rank: slice.basis.ambient(),
            free_rank: inv.free_rank,
            torsion: inv.torsion,
            elapsed: start.elapsed(),
        })
    }

    pub fn table(&mut self, dmax: usize) -> Result<Vec<GradedComponentReport>> {
        if dmax == 0 {
            return Err(Error::InvalidArgument("max degree must be at least 1".into()));
        }
        (1..=dmax).map(|d| self.component(d)).collect()
    }

    /// Whether `[z, g]` vanishes in the quotient for every generator `g`.
    pub fn is_central(&mut self, z: &LieElement) -> Result<bool> {
        let k = self.presentation.alphabet_size();
        if z.alphabet_size() != k {
            return Err(Error::AlphabetMismatch {
                left: k,
                right: z.alphabet_size(),
            });
        }
        if z.is_zero() {
            return Ok(true);
        }
        let d = z.degree() + 1;
        let ring = self.ring.clone();
        let slice = self.slice(d)?;
        for g in 0..k {
            let gen = LieElement::generator(k, g)?;
            let v = ring.sparse_coordinates(&ring.bracket(z, &gen)?)?;
            if !slice.basis.contains(&v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn extend_slice(
    p: &GradedPresentation,
    ring: &FreeLieRing,
    d: usize,
    prev: Option<&IdealSlice>,
) -> Result<IdealSlice> {
    match prev {
        None if d != 1 => {
            return Err(Error::InvalidArgument(format!(
                "degree {d} needs the slice of degree {}",
                d - 1
            )))
        }
        Some(s) if s.degree + 1 != d => {
            return Err(Error::DegreeMismatch {
                expected: d - 1,
                found: s.degree,
            })
        }
        Some(_) if d == 1 => {
            return Err(Error::InvalidArgument("degree 1 takes no previous slice".into()))
        }
        _ => {}
    }
    let ambient = ring.basis(d)?.len();
    let mut basis = SubgroupBasis::new(ambient);
    let relations: Vec<SparseVector> = p
        .relations_of_degree(d)
        .map(|r| ring.sparse_coordinates(r))
        .collect::<Result<_>>()?;
    basis.extend(relations)?;
    if let Some(prev) = prev {
        let k = ring.alphabet_size();
        let rows: Vec<&SparseVector> = prev.basis.rows().collect();
        let jobs: Vec<(usize, usize)> = (0..k)
            .flat_map(|g| (0..rows.len()).map(move |r| (g, r)))
            .collect();
        // Brackets run in parallel; results keep job order.
        let images: Vec<SparseVector> = jobs
            .par_iter()
            .map(|&(g, r)| {
                let v = ring.from_sparse(d - 1, rows[r])?;
                let gen = LieElement::generator(k, g)?;
                ring.sparse_coordinates(&ring.bracket(&gen, &v)?)
            })
            .collect::<Result<_>>()?;
        basis.extend(images)?;
    }
    Ok(IdealSlice { degree: d, basis })
}

/// Degree `d` slice of the ideal generated by the relations of `p`, given
/// the slice of degree `d - 1` (required exactly when `d >= 2`).
pub fn ideal_slice(
    p: &GradedPresentation,
    d: usize,
    prev: Option<&IdealSlice>,
) -> Result<IdealSlice> {
    if d == 0 {
        return Err(Error::InvalidArgument("degree must be at least 1".into()));
    }
    let ring = FreeLieRing::new(p.alphabet_size())?;
    extend_slice(p, &ring, d, prev)
}

pub fn graded_component(p: &GradedPresentation, d: usize) -> Result<GradedComponentReport> {
    GradedQuotient::new(p.clone())?.component(d)
}

pub fn hilbert_table(p: &GradedPresentation, dmax: usize) -> Result<Vec<GradedComponentReport>> {
    GradedQuotient::new(p.clone())?.table(dmax)
}

pub fn central_element_check(p: &GradedPresentation, z: &LieElement) -> Result<bool> {
    GradedQuotient::new(p.clone())?.is_central(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lyndon::witt_rank;
    use crate::presentations::*;
    use crate::zmodule::lattice_member;

    fn ranks(t: &[GradedComponentReport]) -> Vec<usize> {
        t.iter().map(|r| r.free_rank).collect()
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn free_presentation(k: usize) -> GradedPresentation {
        // kohno(2) has one generator; build a relation-free one by hand
        GradedPresentation {
            kind: PresentationKind::Kohno,
            n: 0,
            generators: (0..k)
                .map(|i| GeneratorLabel { symbol: 'X', i, j: i + 1 })
                .collect(),
            relations: Vec::new(),
        }
    }

    #[test]
    fn group_labels() {
        let mut r = GradedComponentReport {
            degree: 2,
            witt_rank: 3,
            free_rank: 1,
            torsion: vec![],
            elapsed: Duration::ZERO,
        };
        assert_eq!(r.group_label(), "Z^1");
        r.torsion = [2, 2, 4].map(BigInt::from).to_vec();
        assert_eq!(r.group_label(), "Z^1 + (Z/2)^2 + Z/4");
    }

    #[test]
    fn reduced_four_point_slices() {
        let p = build_pm0n_reduced(4).unwrap();
        let s1 = ideal_slice(&p, 1, None).unwrap();
        assert_eq!(s1.basis.ambient(), 3);
        assert_eq!(s1.basis.to_matrix().row(0), ints(&[1, 1, 1]).as_slice());
        let s2 = ideal_slice(&p, 2, Some(&s1)).unwrap();
        assert_eq!((s2.basis.ambient(), s2.basis.rank()), (3, 2));
        assert!(matches!(ideal_slice(&p, 3, Some(&s1)), Err(Error::DegreeMismatch { .. })));
        assert!(ideal_slice(&p, 2, None).is_err());
        assert!(ideal_slice(&p, 1, Some(&s1)).is_err());
    }

    #[test]
    fn components() {
        let r = graded_component(&build_pm0n_reduced(4).unwrap(), 1).unwrap();
        assert_eq!((r.free_rank, r.torsion.len()), (2, 0));
        let r = graded_component(&build_sphere_reduced(4).unwrap(), 1).unwrap();
        assert_eq!((r.free_rank, r.torsion.clone()), (2, ints(&[2])));
        let r = graded_component(&build_pm0n_reduced(4).unwrap(), 2).unwrap();
        assert_eq!((r.free_rank, r.witt_rank), (1, 3));
        assert!(r.torsion.is_empty());
    }

    #[test]
    fn tables() {
        let t = hilbert_table(&build_pm0n_reduced(4).unwrap(), 5).unwrap();
        assert_eq!(ranks(&t), vec![2, 1, 2, 3, 6]);
        assert!(t.iter().all(|r| r.torsion.is_empty()));
        let t = hilbert_table(&build_kohno(2).unwrap(), 3).unwrap();
        assert_eq!(ranks(&t), vec![1, 0, 0]);
        let t = hilbert_table(&build_ihara(4).unwrap(), 2).unwrap();
        assert_eq!((t[0].free_rank, t[0].torsion.clone()), (2, ints(&[2])));
        assert!(hilbert_table(&build_kohno(3).unwrap(), 0).is_err());
    }

    #[test]
    fn free_ranks_without_relations() {
        for k in 1..=3 {
            let t = hilbert_table(&free_presentation(k), 6).unwrap();
            for r in &t {
                assert_eq!(r.free_rank as u64, witt_rank(k, r.degree).unwrap());
                assert!(r.torsion.is_empty());
                assert_eq!(r.witt_rank, r.free_rank);
            }
        }
    }

    #[test]
    fn centrality() {
        let p = build_sphere_reduced(4).unwrap();
        // The ideal generated by 2z only contains 2[z, g]: the bracket is
        // 2-torsion in degree 2 but not zero.
        let z = p.generator_sum();
        assert!(!central_element_check(&p, &z).unwrap());
        let mut q = GradedQuotient::new(p.clone()).unwrap();
        let ring = FreeLieRing::new(3).unwrap();
        for g in 0..3 {
            let gen = LieElement::generator(3, g).unwrap();
            let twice = ring.bracket(&z.scale(&BigInt::from(2)), &gen).unwrap();
            let v = ring.sparse_coordinates(&twice).unwrap();
            assert!(q.slice(2).unwrap().basis.contains(&v).unwrap());
        }
        assert!(!central_element_check(&p, &p.generator(1, 2).unwrap()).unwrap());

        // In the Ihara presentation the degree-one 2-torsion class is central.
        let ihara = build_ihara(4).unwrap();
        let pairs = [(1, 2), (1, 3), (2, 3)];
        let gens: Vec<LieElement> = pairs.iter().map(|&(i, j)| ihara.generator(i, j).unwrap()).collect();
        let t = LieElement::sum(6, 1, &gens).unwrap();
        assert!(central_element_check(&ihara, &t).unwrap());
        assert!(!central_element_check(&ihara, &ihara.generator(1, 2).unwrap()).unwrap());
        assert!(central_element_check(&p, &LieElement::zero(3, 1)).unwrap());
        let wrong = LieElement::generator(4, 0).unwrap();
        assert!(central_element_check(&p, &wrong).is_err());
    }

    #[test]
    fn slices_are_closed_under_generators() {
        let p = build_kohno(4).unwrap();
        let mut q = GradedQuotient::new(p).unwrap();
        let s2 = q.slice(2).unwrap().clone();
        let s3 = q.slice(3).unwrap().clone();
        let ring = FreeLieRing::new(6).unwrap();
        for row in s2.basis.rows() {
            let v = ring.from_sparse(2, row).unwrap();
            for g in 0..6 {
                let gen = LieElement::generator(6, g).unwrap();
                let w = ring.coordinate_vector(&ring.bracket(&gen, &v).unwrap()).unwrap();
                assert!(lattice_member(&s3.basis, &w).unwrap());
            }
        }
    }

    #[test]
    fn unlisted_kohno_relation_is_in_the_ideal() {
        for n in 3..=4 {
            let p = build_kohno(n).unwrap();
            let s2 = ideal_slice(&p, 2, Some(&ideal_slice(&p, 1, None).unwrap())).unwrap();
            let ring = FreeLieRing::new(p.alphabet_size()).unwrap();
            for i in 1..=n {
                for j in i + 1..=n {
                    for k in j + 1..=n {
                        let ajk = p.generator(j, k).unwrap();
                        let other = p.generator(i, j).unwrap().add(&p.generator(i, k).unwrap()).unwrap();
                        let rel = ring.bracket(&ajk, &other).unwrap();
                        assert!(s2.basis.contains(&ring.sparse_coordinates(&rel).unwrap()).unwrap());
                    }
                }
            }
        }
    }

    #[test]
    fn incremental_and_fresh_slices_agree() {
        let p = build_ihara(4).unwrap();
        let mut q = GradedQuotient::new(p.clone()).unwrap();
        let fresh1 = ideal_slice(&p, 1, None).unwrap();
        let fresh2 = ideal_slice(&p, 2, Some(&fresh1)).unwrap();
        let fresh3 = ideal_slice(&p, 3, Some(&fresh2)).unwrap();
        assert_eq!(q.slice(3).unwrap(), &fresh3);
    }
}
