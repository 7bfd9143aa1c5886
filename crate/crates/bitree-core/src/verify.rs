//! Exhaustive desk-scale verification of the structural claims: the counting
//! formula, per-passport counts, root independence of the parity invariant,
//! the parity flip under elementary movements, direction coherence, and the
//! Goulden-Jackson automorphism identity.
//!
//! Each suite sweeps every tree in scope and reports the checks performed
//! plus any counterexamples found (as canonical codes or labelled count
//! mismatches).

use std::collections::BTreeMap;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::census::{
    count_passport, count_total, for_each_tree, gj_from_shapes, shapes, CensusError,
};
use crate::code::{encode, EncodingRoot};
use crate::moves::{elementary_move, orbit, Direction};
use crate::parity::{breakdown, invariant};
use crate::tree::Passport;

/// Outcome of one claim sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub claim: String,
    pub scope: String,
    pub checked: u64,
    pub failures: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Which suites to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Claim {
    /// Counting formula plus per-passport counts.
    Counting,
    /// Root independence of the invariant (and evenness of `d + e_half`).
    RootIndependence,
    /// Parity flip under elementary movements plus direction coherence.
    ParityFlip,
    /// The Goulden-Jackson identity per passport.
    GouldenJackson,
    All,
}

fn dimension_pairs(max_vertices: usize) -> impl Iterator<Item = (usize, usize)> {
    (2..=max_vertices)
        .flat_map(|total| (1..total).map(move |n| (n, total - n)))
}

fn even_dimension_pairs(max_vertices: usize) -> impl Iterator<Item = (usize, usize)> {
    dimension_pairs(max_vertices).filter(|(n, m)| (n + m) % 2 == 0)
}

/// Checks `|enumeration| == ((n+m-2)!)^2 / ((n-1)!(m-1)!)` for every pair
/// with `n + m <= max_vertices`.
pub fn verify_counting(
    max_vertices: usize,
    max_trees: u64,
) -> Result<VerificationReport, CensusError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (n, m) in dimension_pairs(max_vertices) {
        let enumerated = for_each_tree(n, m, max_trees, |_, _| ControlFlow::Continue(()))?;
        let formula = count_total(n, m)?;
        checked += 1;
        if formula != enumerated.into() {
            failures.push(format!(
                "n={n},m={m}: enumerated {enumerated}, formula {formula}"
            ));
        }
    }
    Ok(VerificationReport {
        claim: "thm-2-1-counting".into(),
        scope: format!("all (n,m) with n+m <= {max_vertices}"),
        checked,
        failures,
    })
}

/// Checks the per-passport count formula against the filtered enumeration,
/// and that the passport counts sum to the total.
pub fn verify_passport_counts(
    max_vertices: usize,
    max_trees: u64,
) -> Result<VerificationReport, CensusError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (n, m) in dimension_pairs(max_vertices) {
        let mut by_passport: BTreeMap<Passport, u64> = BTreeMap::new();
        let total = for_each_tree(n, m, max_trees, |tree, _| {
            *by_passport.entry(tree.passport()).or_insert(0) += 1;
            ControlFlow::Continue(())
        })?;
        let mut sum = 0u64;
        for (passport, count) in &by_passport {
            checked += 1;
            sum += count;
            let formula = count_passport(n, m, passport)?;
            if formula != (*count).into() {
                failures.push(format!(
                    "n={n},m={m} passport {passport}: enumerated {count}, formula {formula}"
                ));
            }
        }
        if sum != total {
            failures.push(format!(
                "n={n},m={m}: passport counts sum to {sum}, total is {total}"
            ));
        }
    }
    Ok(VerificationReport {
        claim: "eq-2-passport-counts".into(),
        scope: format!("all passports with n+m <= {max_vertices}"),
        checked,
        failures,
    })
}

/// Checks that every white root vertex and root edge yields the same
/// invariant bit, and that `d + e_half` is even on every encoding.
pub fn verify_root_independence(
    max_vertices: usize,
    max_trees: u64,
) -> Result<VerificationReport, CensusError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (n, m) in even_dimension_pairs(max_vertices) {
        for_each_tree(n, m, max_trees, |tree, code| {
            checked += 1;
            let mut bits = std::collections::BTreeSet::new();
            for vertex in tree.white_vertices() {
                for &edge in tree.rotation(vertex) {
                    let rooted = encode(tree, EncodingRoot { vertex, edge })
                        .expect("white dart roots are valid");
                    match breakdown(&rooted) {
                        Ok(bd) if (bd.d + bd.e_half) % 2 == 0 => {
                            bits.insert(bd.i);
                        }
                        _ => {
                            failures.push(format!("{code} (half-parity at root {vertex},{edge})"));
                        }
                    }
                }
            }
            if bits.len() != 1 {
                failures.push(code.to_string());
            }
            ControlFlow::Continue(())
        })?;
    }
    Ok(VerificationReport {
        claim: "thm-3-1-2-root-independence".into(),
        scope: format!("all trees with even n+m <= {max_vertices}, all white roots and root edges"),
        checked,
        failures,
    })
}

/// Checks that every elementary movement flips the invariant. On the
/// two-vertex tree, where no genuine movement exists, the identity outcome
/// is required instead.
pub fn verify_parity_flip(
    max_vertices: usize,
    max_trees: u64,
) -> Result<VerificationReport, CensusError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (n, m) in even_dimension_pairs(max_vertices) {
        for_each_tree(n, m, max_trees, |tree, code| {
            let before = invariant(tree).expect("vertex count is even");
            for leaf in tree.leaves() {
                for direction in [Direction::Ccw, Direction::Cw] {
                    checked += 1;
                    let outcome =
                        elementary_move(tree, leaf, direction).expect("leaves of the tree move");
                    if tree.vertex_count() == 2 {
                        if !outcome.is_identity() || outcome.tree != *tree {
                            failures.push(code.to_string());
                        }
                        continue;
                    }
                    let after = invariant(&outcome.tree).expect("vertex count is even");
                    if outcome.bypassed_same_color != 1 || after != 1 - before {
                        failures.push(format!("{code} (leaf {leaf}, {direction})"));
                    }
                }
            }
            ControlFlow::Continue(())
        })?;
    }
    Ok(VerificationReport {
        claim: "thm-4-1-parity-flip".into(),
        scope: format!("all trees with even n+m <= {max_vertices}, every leaf, both directions"),
        checked,
        failures,
    })
}

/// Checks that transporting a leaf clockwise or counterclockwise to the same
/// final corner yields the same tree and the same movement parity (the two
/// step counts sum to the even orbit length), and that a full orbit returns
/// to the start.
pub fn verify_direction_coherence(
    max_vertices: usize,
    max_trees: u64,
) -> Result<VerificationReport, CensusError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (n, m) in even_dimension_pairs(max_vertices.min(6)).filter(|(n, m)| n + m >= 4) {
        for_each_tree(n, m, max_trees, |tree, code| {
            for leaf in tree.leaves() {
                checked += 1;
                let ccw = orbit(tree, leaf, Direction::Ccw).expect("leaf orbits exist");
                let cw = orbit(tree, leaf, Direction::Cw).expect("leaf orbits exist");
                let length = tree.edge_count() - 1;
                let mut ok = length % 2 == 0
                    && ccw.len() == length
                    && cw.len() == length
                    && ccw[length - 1] == *tree
                    && cw[length - 1] == *tree;
                if ok {
                    for steps in 1..length {
                        // ccw^k and cw^(L-k) land on the same corner; with L
                        // even their step parities agree as well.
                        if ccw[steps - 1] != cw[length - steps - 1]
                            || steps % 2 != (length - steps) % 2
                        {
                            ok = false;
                            break;
                        }
                    }
                }
                if !ok {
                    failures.push(format!("{code} (leaf {leaf})"));
                }
            }
            ControlFlow::Continue(())
        })?;
    }
    Ok(VerificationReport {
        claim: "rem-4-1-direction-coherence".into(),
        scope: format!(
            "all (tree, leaf) pairs with even n+m in {{4, 6}} and n+m <= {max_vertices}"
        ),
        checked,
        failures,
    })
}

/// Checks the automorphism-sum identity for every passport realised with
/// `n + m <= max_vertices`.
pub fn verify_goulden_jackson(
    max_vertices: usize,
    max_trees: u64,
) -> Result<VerificationReport, CensusError> {
    let mut checked = 0u64;
    let mut failures = Vec::new();
    for (n, m) in dimension_pairs(max_vertices) {
        let records = shapes(n, m, max_trees)?;
        let passports: std::collections::BTreeSet<Passport> =
            records.iter().map(|r| r.passport.clone()).collect();
        for passport in passports {
            checked += 1;
            let check = gj_from_shapes(&records, &passport);
            if !check.equal {
                failures.push(format!(
                    "n={n},m={m} passport {passport}: sum {}, closed form {}",
                    check.lhs, check.rhs
                ));
            }
        }
    }
    Ok(VerificationReport {
        claim: "goulden-jackson".into(),
        scope: format!("every passport realised with n+m <= {max_vertices}"),
        checked,
        failures,
    })
}

/// Runs the suites selected by `claim`; reports come back sorted by claim
/// name.
pub fn run(
    claim: Claim,
    max_vertices: usize,
    max_trees: u64,
) -> Result<Vec<VerificationReport>, CensusError> {
    let mut reports = Vec::new();
    match claim {
        Claim::Counting => {
            reports.push(verify_counting(max_vertices, max_trees)?);
            reports.push(verify_passport_counts(max_vertices, max_trees)?);
        }
        Claim::RootIndependence => {
            reports.push(verify_root_independence(max_vertices, max_trees)?);
        }
        Claim::ParityFlip => {
            reports.push(verify_parity_flip(max_vertices, max_trees)?);
            reports.push(verify_direction_coherence(max_vertices, max_trees)?);
        }
        Claim::GouldenJackson => {
            reports.push(verify_goulden_jackson(max_vertices, max_trees)?);
        }
        Claim::All => {
            reports.push(verify_counting(max_vertices, max_trees)?);
            reports.push(verify_passport_counts(max_vertices, max_trees)?);
            reports.push(verify_root_independence(max_vertices, max_trees)?);
            reports.push(verify_parity_flip(max_vertices, max_trees)?);
            reports.push(verify_direction_coherence(max_vertices, max_trees)?);
            reports.push(verify_goulden_jackson(max_vertices, max_trees)?);
        }
    }
    reports.sort_by(|a, b| a.claim.cmp(&b.claim));
    Ok(reports)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::DEFAULT_MAX_TREES;

    #[test]
    fn all_suites_pass_at_six_vertices() {
        let reports = run(Claim::All, 6, DEFAULT_MAX_TREES).unwrap();
        assert_eq!(reports.len(), 6);
        let names: Vec<_> = reports.iter().map(|r| r.claim.as_str()).collect();
        assert_eq!(
            names,
            vec![
                "eq-2-passport-counts",
                "goulden-jackson",
                "rem-4-1-direction-coherence",
                "thm-2-1-counting",
                "thm-3-1-2-root-independence",
                "thm-4-1-parity-flip",
            ]
        );
        for report in &reports {
            assert!(report.passed(), "{}: {:?}", report.claim, report.failures);
            assert!(report.checked > 0, "{} checked nothing", report.claim);
        }
    }
}
