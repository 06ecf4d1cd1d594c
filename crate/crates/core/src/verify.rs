//! Named consistency checks, each producing a pass/fail report.
//!
//! The Lie ring checks compare rank tables of different presentations
//! degree by degree; the braid checks decide identities in the braid group
//! of the disc.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::braidcheck::{
    braids_equal, centrality_check, delta_squared_product, delta_squared_product_by_columns,
    delta_word, sphere_relator_sanity, verify_burau_relations, verify_magnus_equivalence,
};
use crate::error::{Error, Result};
use crate::gradedquotient::{GradedComponentReport, GradedQuotient};
use crate::lyndon::witt_rank;
use crate::presentations::{
    build_ihara, build_kohno, build_pm0n_full, build_pm0n_reduced, build_sphere_reduced,
    GradedPresentation,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckEntry {
    pub label: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    name: String,
    entries: Vec<CheckEntry>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>) -> Self {
        CheckReport {
            name: name.into(),
            entries: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn push(&mut self, label: impl Into<String>, passed: bool) {
        self.entries.push(CheckEntry {
            label: label.into(),
            passed,
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.entries.extend(other.entries);
    }

    pub fn entries(&self) -> &[CheckEntry] {
        &self.entries
    }

    /// True when no entry failed (vacuously true when empty).
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| !e.passed)
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.name)?;
        for e in &self.entries {
            writeln!(f, "  {} {}", if e.passed { "PASS" } else { "FAIL" }, e.label)?;
        }
        let failed = self.failures().count();
        write!(
            f,
            "{}: {} checks, {} failed",
            if failed == 0 { "PASS" } else { "FAIL" },
            self.entries.len(),
            failed
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckName {
    Burau,
    Delta2,
    Magnus,
    Central,
    SphereSanity,
    Theorem1,
    Theorem2,
    Corollary,
    ExamplePm04,
}

impl CheckName {
    pub const ALL: [CheckName; 9] = [
        CheckName::Burau,
        CheckName::Delta2,
        CheckName::Magnus,
        CheckName::Central,
        CheckName::SphereSanity,
        CheckName::Theorem1,
        CheckName::Theorem2,
        CheckName::Corollary,
        CheckName::ExamplePm04,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckName::Burau => "burau",
            CheckName::Delta2 => "delta2",
            CheckName::Magnus => "magnus",
            CheckName::Central => "central",
            CheckName::SphereSanity => "sphere-sanity",
            CheckName::Theorem1 => "theorem1",
            CheckName::Theorem2 => "theorem2",
            CheckName::Corollary => "corollary",
            CheckName::ExamplePm04 => "example-pm04",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CheckName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CheckName::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown check '{s}'")))
    }
}

/// Runs one named check with `n` points/strands and degrees `1..=max_degree`.
pub fn run_check(check: CheckName, n: usize, max_degree: usize) -> Result<CheckReport> {
    match check {
        CheckName::Burau => Ok(verify_burau_relations(n)),
        CheckName::Delta2 => delta_squared(n),
        CheckName::Magnus => {
            let mut r = CheckReport::new(format!("magnus, n = {n}"));
            r.push("(s1 ... s_{n-1})^n = Delta^2", verify_magnus_equivalence(n)?);
            Ok(r)
        }
        CheckName::Central => {
            let mut r = CheckReport::new(format!("center, n = {n}"));
            r.push("Delta^2 commutes with every s_i", centrality_check(n)?);
            Ok(r)
        }
        CheckName::SphereSanity => {
            let s = sphere_relator_sanity(n)?;
            let mut r = CheckReport::new(format!("sphere relator images, n = {n}"));
            r.push("permutation is the identity", s.permutation_is_identity);
            r.push(
                format!("exponent sum {} = 2(n-1)", s.exponent_sum),
                s.exponent_sum == 2 * (n as i64 - 1),
            );
            r.push("nontrivial in the disc braid group", !s.trivial_in_disc_group);
            Ok(r)
        }
        CheckName::Theorem1 => theorem1(n, max_degree),
        CheckName::Theorem2 => theorem2(n, max_degree),
        CheckName::Corollary => corollary(n, max_degree),
        CheckName::ExamplePm04 => example_pm04(max_degree),
    }
}

fn delta_squared(n: usize) -> Result<CheckReport> {
    let mut r = CheckReport::new(format!("delta squared, n = {n}"));
    let d2 = delta_word(n)?.power(2);
    r.push("Delta^2 = product of a_ij by rows", braids_equal(&d2, &delta_squared_product(n)?)?);
    r.push(
        "Delta^2 = product of a_ij by columns",
        braids_equal(&d2, &delta_squared_product_by_columns(n)?)?,
    );
    let nn = n as i64;
    r.push(
        format!("exponent sum of Delta^2 = {}", nn * (nn - 1)),
        d2.exponent_sum() == nn * (nn - 1)
            && delta_squared_product(n)?.exponent_sum() == nn * (nn - 1),
    );
    Ok(r)
}

fn table(p: GradedPresentation, dmax: usize) -> Result<Vec<GradedComponentReport>> {
    GradedQuotient::new(p)?.table(dmax)
}

/// Compares two tables after adjusting `left` by the expected difference
/// `(rank offset, extra torsion)` in each degree.
fn compare_tables(
    report: &mut CheckReport,
    label: &str,
    left: &[GradedComponentReport],
    right: &[GradedComponentReport],
    expected: impl Fn(usize) -> (usize, Vec<BigInt>),
) {
    for (l, r) in left.iter().zip(right) {
        let (offset, extra) = expected(l.degree);
        let mut torsion = r.torsion.clone();
        torsion.extend(extra);
        torsion.sort();
        let ok = l.free_rank == r.free_rank + offset && l.torsion == torsion;
        report.push(
            format!("{label}, degree {}: {} vs {}", l.degree, l.group_label(), r.group_label()),
            ok,
        );
    }
}

fn theorem1(n: usize, dmax: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("direct product splittings, n = {n}, d <= {dmax}"));
    // P_n = Z x PM_{0,n+1}
    let kohno = table(build_kohno(n)?, dmax)?;
    let pm = table(build_pm0n_reduced(n + 1)?, dmax)?;
    compare_tables(
        &mut report,
        &format!("kohno({n}) = Z + pm0n-reduced({})", n + 1),
        &kohno,
        &pm,
        |d| (usize::from(d == 1), Vec::new()),
    );
    if n >= 4 {
        // P_n(S^2) = Z/2 x PM_{0,n}
        let ihara = table(build_ihara(n)?, dmax)?;
        let pm = table(build_pm0n_reduced(n)?, dmax)?;
        compare_tables(
            &mut report,
            &format!("ihara({n}) = Z/2 + pm0n-reduced({n})"),
            &ihara,
            &pm,
            |d| (0, if d == 1 { vec![BigInt::from(2)] } else { Vec::new() }),
        );
        let sphere = table(build_sphere_reduced(n)?, dmax)?;
        compare_tables(
            &mut report,
            &format!("ihara({n}) = sphere-reduced({n})"),
            &ihara,
            &sphere,
            |_| (0, Vec::new()),
        );
    }
    Ok(report)
}

fn theorem2(n: usize, dmax: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("full vs reduced presentation, n = {n}, d <= {dmax}"));
    let full = table(build_pm0n_full(n)?, dmax)?;
    let reduced = table(build_pm0n_reduced(n)?, dmax)?;
    compare_tables(
        &mut report,
        &format!("pm0n-full({n}) = pm0n-reduced({n})"),
        &full,
        &reduced,
        |_| (0, Vec::new()),
    );
    Ok(report)
}

fn corollary(n: usize, dmax: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("central element of order 2, n = {n}, d <= {dmax}"));
    let p = build_sphere_reduced(n)?;
    let z = p.generator_sum();
    let gens = p.alphabet_size();
    let mut sphere = GradedQuotient::new(p)?;
    let deg1 = sphere.component(1)?;
    report.push(
        format!("degree 1 is Z^{} + Z/2: found {}", gens - 1, deg1.group_label()),
        deg1.free_rank == gens - 1 && deg1.torsion == vec![BigInt::from(2)],
    );
    report.push("sum of all A_ij is central", sphere.is_central(&z)?);
    let sphere_table = sphere.table(dmax)?;
    let pm = table(build_pm0n_reduced(n)?, dmax)?;
    for (s, r) in sphere_table.iter().zip(&pm).skip(1) {
        report.push(
            format!(
                "rank of sphere-reduced({n}) = rank of pm0n-reduced({n}), degree {}: {} vs {}",
                s.degree, s.free_rank, r.free_rank
            ),
            s.free_rank == r.free_rank,
        );
    }
    Ok(report)
}

fn example_pm04(dmax: usize) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!("pm0n-reduced(4) is free on two generators, d <= {dmax}"));
    for r in table(build_pm0n_reduced(4)?, dmax)? {
        let w = witt_rank(2, r.degree)? as usize;
        report.push(
            format!("degree {}: rank {} = witt(2, {}) = {w}, torsion-free", r.degree, r.free_rank, r.degree),
            r.free_rank == w && r.torsion.is_empty(),
        );
    }
    Ok(report)
}
