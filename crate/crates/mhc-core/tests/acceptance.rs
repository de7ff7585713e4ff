//! End-to-end acceptance checks, one per criterion, each printing a single
//! summary line (run with `--nocapture --test-threads=1` to see them in
//! order). Lines report the honest outcome: a criterion whose literal
//! statement does not survive exact computation prints FAIL with the exact
//! relation that does hold; the test body then pins that computed truth so
//! regressions cannot hide behind the printed line.

use std::sync::Arc;
use std::time::Instant;

use mhc_core::cochain::{coboundary, hochschild_cohomology, table_len, Cochain};
use mhc_core::cocyclic::{
    classical_coboundary_matrix, is_cyclic, verify_cocyclic_identities,
    verify_xi_chain_map, xi_comparison_sign, xi_graded_identity_holds,
};
use mhc_core::crossed::{classify_grouplike, classify_mpi, CrossedAlgebra};
use mhc_core::group::characters;
use mhc_core::mha::{verify_structure, FunctionAlgebra};
use mhc_core::modpair::involutive_pairs;
use mhc_core::zline::{
    hh1_closed_form, hh1_z_dim, solve_hh1_recurrence, tau2_escape_check, ZFunction,
};
use mhc_core::{Character, CycloField, CycloScalar, GroupTable};

fn suite_groups() -> Vec<Arc<GroupTable>> {
    ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "D4", "Q8"]
        .iter()
        .map(|name| GroupTable::named(name).unwrap())
        .collect()
}

fn small_groups(max_order: usize) -> Vec<Arc<GroupTable>> {
    ["Z2", "Z3", "Z4", "Z2xZ2", "S3", "Z6"]
        .iter()
        .map(|name| GroupTable::named(name).unwrap())
        .filter(|g| g.order() <= max_order)
        .collect()
}

/// Tuple of a given degree from a flat index, most significant slot first.
/// Written locally so the acceptance checks do not share indexing code with
/// the library.
fn idx_to_tuple(order: usize, degree: usize, mut idx: usize) -> Vec<usize> {
    let mut t = vec![0usize; degree];
    for slot in (0..degree).rev() {
        t[slot] = idx % order;
        idx /= order;
    }
    t
}

#[test]
fn c01_axiom_suite() {
    let start = Instant::now();
    for group in suite_groups() {
        let ctx = FunctionAlgebra::new(&group);
        for check in verify_structure(&ctx) {
            assert!(
                check.pass,
                "group of order {}: check {} failed: {:?}",
                group.order(),
                check.name,
                check.detail
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "axiom suite took {elapsed:?}");
    println!(
        "criterion 01 axiom-suite: PASS (7 groups, 10 structural checks each, {:.2?})",
        elapsed
    );
}

#[test]
fn c02_coboundary_squares_to_zero() {
    let mut checked = 0usize;
    for group in small_groups(6) {
        let chars = characters(&group);
        for sigma in [&chars[0], &chars[1]] {
            for degree in 0..=3usize {
                for idx in 0..table_len(group.order(), degree).unwrap() {
                    let f = Cochain::indicator(&group, &idx_to_tuple(group.order(), degree, idx))
                        .unwrap();
                    let bb = coboundary(sigma, &coboundary(sigma, &f).unwrap()).unwrap();
                    assert!(bb.is_zero(), "b²  != 0 at degree {degree}");
                    checked += 1;
                }
            }
        }
    }
    println!(
        "criterion 02 coboundary-squares-to-zero: PASS ({checked} basis cochains, degrees 0..=3, orders up to 6)"
    );
}

#[test]
fn c03_cocyclic_identity_suite() {
    let mut reports = 0usize;
    for group in ["Z2", "Z3", "Z4", "Z2xZ2"] {
        let group = GroupTable::named(group).unwrap();
        let chars = characters(&group);
        assert!(chars.len() >= 2);
        for sigma in &chars[..2] {
            for degree in 0..=3usize {
                for report in verify_cocyclic_identities(sigma, degree).unwrap() {
                    assert!(
                        report.pass,
                        "{} failed at degree {degree}: {:?}",
                        report.identity, report.counterexample
                    );
                    reports += 1;
                }
            }
        }
    }
    println!(
        "criterion 03 cocyclic-identities: PASS ({reports} identity families over 4 groups × 2 twists × degrees 0..=3)"
    );
}

/// Coboundary matrix assembled directly from the coface definitions,
/// sharing no code with the library routines.
fn oracle_matrix(sigma: &Character, degree: usize) -> Vec<Vec<CycloScalar>> {
    let group = sigma.group().clone();
    let order = group.order();
    let field = CycloField::new(group.exponent());
    let rows = order.pow(degree as u32 + 1);
    let cols = order.pow(degree as u32);
    let mut m = vec![vec![field.zero(); cols]; rows];
    for (row, entry) in m.iter_mut().enumerate() {
        let r = idx_to_tuple(order, degree + 1, row);
        for i in 0..=degree + 1 {
            // Face i of the row tuple.
            let mut face = Vec::with_capacity(degree);
            let mut weight = field.one();
            if i == 0 {
                face.extend_from_slice(&r[1..]);
            } else if i == degree + 1 {
                face.extend_from_slice(&r[..degree]);
                weight = sigma.value(r[degree]).clone();
            } else {
                face.extend_from_slice(&r[..i - 1]);
                face.push(group.mul(r[i - 1], r[i]));
                face.extend_from_slice(&r[i + 1..]);
            }
            let col = face.iter().fold(0usize, |acc, &g| acc * order + g);
            let signed = if i % 2 == 0 { weight } else { -&weight };
            entry[col] = &entry[col] + &signed;
        }
    }
    m
}

/// Row reduction over the exact field, traversing columns from the right
/// and picking the last available pivot row — deliberately different
/// choices from the library's elimination.
#[allow(clippy::needless_range_loop)]
fn oracle_rank(mut rows: Vec<Vec<CycloScalar>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0usize;
    for col in (0..cols).rev() {
        let pivot = (rank..rows.len()).rfind(|&r| !rows[r][col].is_zero());
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inv();
        for r in 0..rows.len() {
            if r == rank || rows[r][col].is_zero() {
                continue;
            }
            let factor = &rows[r][col] * &inv;
            for c in 0..cols {
                let delta = &factor * &rows[rank][c];
                rows[r][c] = &rows[r][c] - &delta;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

#[test]
fn c04_hochschild_dimensions() {
    for name in ["Z2", "Z3", "Z4"] {
        let group = GroupTable::named(name).unwrap();
        let order = group.order();
        for sigma in characters(&group) {
            let mut oracle_ranks = Vec::new();
            for degree in 0..=2usize {
                oracle_ranks.push(oracle_rank(oracle_matrix(&sigma, degree)));
            }
            for degree in 0..=2usize {
                let r = hochschild_cohomology(&sigma, degree).unwrap();
                // Known closed form: invariants in degree zero, nothing above.
                let expected = if degree == 0 {
                    usize::from(sigma.is_trivial())
                } else {
                    0
                };
                assert_eq!(r.dim, expected, "{name} degree {degree}");
                // Independent oracle for the same ranks.
                let dim_kernel = order.pow(degree as u32) - oracle_ranks[degree];
                let dim_image_prev = if degree == 0 {
                    0
                } else {
                    oracle_ranks[degree - 1]
                };
                assert_eq!(r.dim_kernel, dim_kernel, "{name} kernel degree {degree}");
                assert_eq!(r.dim_image_prev, dim_image_prev, "{name} image degree {degree}");
                // Classical group-cohomology side, transported through the
                // argument-reversal isomorphism: the ranks agree degreewise.
                let classical = classical_coboundary_matrix(&sigma, degree).unwrap();
                assert_eq!(classical.rank(), oracle_ranks[degree], "{name} classical degree {degree}");
            }
        }
    }
    println!(
        "criterion 04 hochschild-dimensions: PASS (Z2, Z3, Z4, all twists, degrees 0..=2, independent elimination oracle and classical ranks agree)"
    );
}

#[test]
fn c05_xi_chain_map() {
    let mut literal_everywhere = true;
    for (gi, name) in ["Z2", "Z3", "Z4", "Z2xZ2"].iter().enumerate() {
        let group = GroupTable::named(name).unwrap();
        for (si, sigma) in characters(&group).iter().enumerate() {
            for degree in 0..=2usize {
                let seed = (gi * 1000 + si * 10 + degree) as u64;
                let literal = verify_xi_chain_map(sigma, degree, 200, seed).unwrap();
                literal_everywhere &= literal;
                // The exact law: the literal identity holds precisely in odd
                // degrees, and in degree zero with the trivial twist where
                // both sides vanish.
                let predicted = degree % 2 == 1 || (degree == 0 && sigma.is_trivial());
                assert_eq!(
                    literal, predicted,
                    "{name} twist {si} degree {degree}: literal check"
                );
                let sign = xi_comparison_sign(sigma, degree).unwrap();
                let expected_sign = if degree % 2 == 1 || (degree == 0 && sigma.is_trivial()) {
                    Some(1)
                } else {
                    Some(-1)
                };
                assert_eq!(sign, expected_sign, "{name} twist {si} degree {degree}: sign");
                assert!(
                    xi_graded_identity_holds(sigma, degree).unwrap(),
                    "{name} twist {si} degree {degree}: graded identity"
                );
            }
        }
    }
    assert!(
        !literal_everywhere,
        "the literal identity is known to fail in even degrees; a uniform pass means the check lost its teeth"
    );
    println!(
        "criterion 05 xi-chain-map: FAIL as stated (the unsigned transport identity fails in even degrees; the exact relation Xi∘b = (−1)^(n+1)·d∘Xi holds on full bases for every tested group, twist, and degree, and criterion 04 confirms the transported ranks agree)"
    );
}

#[test]
fn c06_integer_line_degree_one() {
    let field = CycloField::new(1);
    let lambda = field.from_integer(2);
    assert_eq!(hh1_z_dim(&lambda, 20).unwrap(), 0);
    // Explicit refit: every window point of the recurrence solution matches
    // the coboundary closed form.
    let c = field.one();
    let table = solve_hh1_recurrence(&lambda, &c, 20).unwrap();
    let closed = hh1_closed_form(&lambda, &c).unwrap();
    for (n, v) in &table {
        assert!(*v == closed.eval(*n, &field), "mismatch at {n}");
    }
    assert_eq!(hh1_z_dim(&field.one(), 20).unwrap(), 1);
    println!(
        "criterion 06 integer-line-degree-one: PASS (dimension 0 at base 2 with exact coboundary fit on [−20, 20]; dimension 1 at base 1)"
    );
}

#[test]
fn c07_escape_check() {
    let field = CycloField::new(1);
    let lambda = field.from_integer(2);
    let step = tau2_escape_check(&ZFunction::Step { threshold: 0 }, &lambda, 12).unwrap();
    assert!(step.escapes);
    assert!(step.witness_support.len() >= 8, "witness {:?}", step.witness_support);

    let mut map = std::collections::BTreeMap::new();
    map.insert(-1i64, field.from_integer(4));
    map.insert(2, field.from_integer(-1));
    let finite = tau2_escape_check(&ZFunction::FiniteSupport(map), &lambda, 12).unwrap();
    assert!(!finite.escapes);

    let geom = ZFunction::geom(&field.from_integer(3), &field.from_integer(5), &lambda).unwrap();
    let report = tau2_escape_check(&geom, &lambda, 12).unwrap();
    assert!(!report.escapes);
    assert_eq!(report.residual_size, 0);
    println!(
        "criterion 07 escape-check: PASS (step profile escapes with witness of size {}, finite-support and geometric profiles fit exactly)",
        step.witness_support.len()
    );
}

#[test]
fn c08_degree_zero_coboundaries_are_cyclic() {
    let mut checked = 0usize;
    for group in suite_groups() {
        for sigma in characters(&group) {
            for value in [1i64, -3] {
                let c = Cochain::constant(&group, sigma.field().from_integer(value));
                let bc = coboundary(&sigma, &c).unwrap();
                assert!(is_cyclic(&sigma, &bc));
                checked += 1;
            }
        }
    }
    println!(
        "criterion 08 degree-zero-coboundaries-cyclic: PASS ({checked} coboundaries across 7 groups and all twists)"
    );
}

#[test]
fn c09_involutive_pair_classification() {
    for group in suite_groups() {
        let computed = involutive_pairs(&group);
        let computed_set: Vec<(usize, Vec<u32>)> = computed
            .iter()
            .map(|p| (p.base_point(), p.sigma().exponents().to_vec()))
            .collect();
        // Independent characterization: the twisted antipode squares to the
        // identity and the twist normalizes iff the base point is central
        // and the character kills it.
        let mut oracle = Vec::new();
        for g in 0..group.order() {
            for sigma in characters(&group) {
                if group.is_central(g) && sigma.value(g).is_one() {
                    oracle.push((g, sigma.exponents().to_vec()));
                }
            }
        }
        let mut sorted = computed_set.clone();
        sorted.sort();
        oracle.sort();
        assert_eq!(sorted, oracle, "classification mismatch");
    }

    let s3 = GroupTable::named("S3").unwrap();
    let pairs = involutive_pairs(&s3);
    assert_eq!(pairs.len(), 2);
    for p in &pairs {
        assert_eq!(p.base_point(), s3.identity());
    }
    assert!(pairs.iter().any(|p| p.sigma().is_trivial()));
    assert!(pairs.iter().any(|p| !p.sigma().is_trivial()));

    for name in ["D4", "Q8"] {
        let group = GroupTable::named(name).unwrap();
        let pairs = involutive_pairs(&group);
        assert_eq!(pairs.len(), 8, "{name}");
        assert!(
            pairs.iter().any(|p| p.base_point() != group.identity()),
            "{name} must admit pairs at a central non-identity base point"
        );
        for p in &pairs {
            assert!(group.is_central(p.base_point()));
        }
    }
    println!(
        "criterion 09 involutive-pairs: PASS (agrees with the centrality oracle on 7 groups; S3 = {{identity}} × {{trivial, sign}}; D4 and Q8 extend to central non-identity base points)"
    );
}

#[test]
fn c10_crossed_classification() {
    for n in [2usize, 3] {
        let algebra = CrossedAlgebra::new(n).unwrap();
        // Group-like: the flip component is forced to vanish on the
        // character ansatz, exactly as claimed.
        for record in classify_grouplike(&algebra) {
            let expect = record.h_exponents.is_none() && record.f_exponents.is_some();
            assert_eq!(record.grouplike, expect, "N={n} {record:?}");
        }
        let records = classify_mpi(&algebra);
        // At the origin base point the admissible characters are exactly
        // the symmetric ones.
        for r in records.iter().filter(|r| r.base_point == 0) {
            assert_eq!(r.mpi, r.exponents.0 == r.exponents.1, "N={n} {r:?}");
        }
        // The finite model admits further pairs away from the origin.
        let off_origin: Vec<_> = records
            .iter()
            .filter(|r| r.mpi && r.base_point != 0)
            .collect();
        assert!(
            !off_origin.is_empty(),
            "N={n}: expected base points beyond the origin in the mod-N model"
        );
        let total = records.iter().filter(|r| r.mpi).count();
        let expected_total = if n == 2 { 8 } else { 10 };
        assert_eq!(total, expected_total, "N={n}");
        if n == 3 {
            // Away from the origin the compensating characters are the
            // asymmetric ones paired to the base point.
            for r in &off_origin {
                assert_ne!(r.exponents.0, r.exponents.1, "{r:?}");
            }
        }
    }
    println!(
        "criterion 10 crossed-classification: FAIL as stated (the flip component is forced to zero and the origin base point admits exactly the symmetric characters, as claimed; but the mod-N model also admits pairs at nonzero diagonal base points — 8 total at N=2, 10 at N=3 — so the origin-only classification does not hold verbatim)"
    );
}
