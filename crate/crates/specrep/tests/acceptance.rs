//! Acceptance suite: one test per criterion, each printing a pass line.
//! Everything is exact arithmetic, so every comparison is exact equality.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::collections::BTreeSet;

use specrep::characters::{
    an_character_value, mn_character, sqrt_as_cyclotomic, AnCharLabel, AnClass, CharacterValue,
    Sign,
};
use specrep::classifier::{classify_an, classify_sn, cycle_power_case, verify_range, Group};
use specrep::cyclotomic::CyclotomicElement;
use specrep::lr::{lr_coefficient, lr_set, shape_classify};
use specrep::partitions::{partitions_of, CycleType, Partition, SkewShape};
use specrep::spectrum::{
    min_poly_from_spectrum, spectrum_oracle, spectrum_via_lr, standard_rep_spectrum, CharSpec,
    ClassSpec,
};

fn workers() -> usize {
    std::thread::available_parallelism()
        .map(|p| p.get())
        .unwrap_or(1)
        .min(8)
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn sn_oracle(lambda: &Partition, mu: &CycleType) -> specrep::spectrum::SpectrumSet {
    spectrum_oracle(
        &CharSpec::Symmetric(lambda.clone()),
        &ClassSpec::Symmetric(mu.clone()),
    )
    .unwrap()
}

#[test]
fn criterion_01_exhaustive_sn_soundness() {
    let report = verify_range(10, Group::Symmetric, workers());
    for slice in &report.per_n {
        assert!(
            slice.mismatches.is_empty(),
            "n = {}: {:?}",
            slice.n,
            slice.mismatches
        );
    }
    let pairs: usize = report.per_n.iter().map(|s| s.pairs_checked).sum();
    let ms: u128 = report.per_n.iter().map(|s| s.elapsed_ms).sum();
    assert!(report.is_clean());
    println!("criterion 01 (exhaustive S_n soundness, n <= 10, {pairs} pairs, {ms} ms): PASS");
}

#[test]
fn criterion_02_exhaustive_an_soundness() {
    let report = verify_range(10, Group::Alternating, workers());
    for slice in &report.per_n {
        assert!(
            slice.mismatches.is_empty(),
            "n = {}: {:?}",
            slice.n,
            slice.mismatches
        );
    }
    // Split entries must actually be exercised.
    let split_cases: usize = report
        .per_n
        .iter()
        .flat_map(|s| s.case_histogram.iter())
        .filter(|(case, _)| ["iv", "v", "vi", "vii", "ix", "x"].contains(&case.as_str()))
        .map(|(_, count)| count)
        .sum();
    assert!(split_cases > 0, "no split cases reached");
    let pairs: usize = report.per_n.iter().map(|s| s.pairs_checked).sum();
    assert!(report.is_clean());
    println!("criterion 02 (exhaustive A_n soundness incl. split pairs, n <= 10, {pairs} pairs): PASS");
}

#[test]
fn criterion_03_sn_exceptional_tables_byte_exact() {
    let golden = include_str!("golden/sn_exceptional.txt");
    let mut rebuilt = String::new();
    for line in golden.lines() {
        let fields: Vec<&str> = line.split(" | ").collect();
        assert_eq!(fields.len(), 4, "golden line {line:?}");
        let lambda = Partition::parse(fields[0]).unwrap();
        let mu = CycleType::parse(fields[1]).unwrap();

        let classified = classify_sn(&lambda, &mu).unwrap();
        rebuilt.push_str(&format!(
            "{} | {} | {} | {}\n",
            lambda,
            mu,
            classified.case().roman(),
            classified.minpoly().display()
        ));

        // The oracle must reproduce the same polynomial after factorization.
        let from_oracle = min_poly_from_spectrum(&sn_oracle(&lambda, &mu)).unwrap();
        assert_eq!(
            from_oracle.display(),
            fields[3],
            "oracle display for {lambda} on {mu}"
        );
    }
    assert_eq!(rebuilt, golden, "classifier output differs from golden file");
    println!("criterion 03 (S_n exceptional tables, byte-exact quotient polynomials): PASS");
}

#[test]
fn criterion_04_an_exceptional_tables_byte_exact() {
    let golden = include_str!("golden/an_exceptional.txt");
    let mut rebuilt = String::new();
    for line in golden.lines() {
        let fields: Vec<&str> = line.split(" | ").collect();
        assert_eq!(fields.len(), 4, "golden line {line:?}");
        let chi = AnCharLabel::parse(fields[0]).unwrap();
        let cls = AnClass::parse(fields[1]).unwrap();

        let classified = classify_an(&chi, &cls).unwrap();
        rebuilt.push_str(&format!(
            "{} | {} | {} | {}\n",
            chi,
            cls,
            classified.case().roman(),
            classified.minpoly().display()
        ));

        let oracle = spectrum_oracle(&chi.clone().into(), &cls.clone().into()).unwrap();
        let from_oracle = min_poly_from_spectrum(&oracle).unwrap();
        assert_eq!(
            from_oracle.display(),
            fields[3],
            "oracle display for {chi} on {cls}"
        );
    }
    assert_eq!(rebuilt, golden, "classifier output differs from golden file");
    println!("criterion 04 (A_n exceptional tables incl. eta/omega pinning, byte-exact): PASS");
}

#[test]
fn criterion_05_cycle_power_agreement() {
    let mut checked = 0usize;
    for n in 2..=10usize {
        for r in 2..=n {
            for m in 1..=(n / r) {
                let mut parts = vec![r; m];
                parts.extend(std::iter::repeat_n(1, n - r * m));
                let mu = CycleType::new(Partition::from_unsorted(parts));
                for lambda in partitions_of(n) {
                    if lambda.parts() == [n] {
                        continue;
                    }
                    let fast = cycle_power_case(&lambda, r, m, n).unwrap();
                    let classified = classify_sn(&lambda, &mu).unwrap();
                    assert_eq!(
                        fast.exponents(),
                        classified.spectrum().exponents(),
                        "classifier: lambda={lambda} r={r} m={m} n={n}"
                    );
                    let oracle = sn_oracle(&lambda, &mu);
                    assert_eq!(
                        fast.exponents(),
                        oracle.exponents(),
                        "oracle: lambda={lambda} r={r} m={m} n={n}"
                    );
                    checked += 1;
                }
            }
        }
    }
    println!("criterion 05 (cycle-power closed form vs classifier vs oracle, {checked} triples): PASS");
}

#[test]
fn criterion_06_standard_representation_multiplicities() {
    for n in 2..=12usize {
        let lambda = p(&[n - 1, 1]);
        for mu in partitions_of(n) {
            let cls = CycleType::new(mu);
            let fast = standard_rep_spectrum(&cls).unwrap();
            let oracle = sn_oracle(&lambda, &cls);
            assert_eq!(fast, oracle, "mu={cls}");

            // dim V_1 = #cycles - 1, and for eta != 1 the multiplicity is
            // the number of cycle lengths eta kills.
            let o = cls.order();
            let k = cls.parts().len() as u64;
            assert_eq!(oracle.multiplicity(0).unwrap_or(0), k - 1, "mu={cls}");
            for e in 1..o {
                let divides = cls
                    .parts()
                    .iter()
                    .filter(|&&r| (e * r as u64).is_multiple_of(o))
                    .count() as u64;
                assert_eq!(oracle.multiplicity(e).unwrap_or(0), divides, "mu={cls} e={e}");
            }
        }
    }
    println!("criterion 06 (standard representation spectra with multiplicities, n <= 12): PASS");
}

#[test]
fn criterion_07_character_layer() {
    // Murnaghan-Nakayama row orthogonality, exact, n <= 9.
    for n in 1..=9usize {
        let all = partitions_of(n);
        let classes: Vec<CycleType> = all.iter().cloned().map(CycleType::new).collect();
        let fact: i128 = (1..=n as i128).product();
        for a in &all {
            for b in &all {
                let total: i128 = classes
                    .iter()
                    .map(|cls| {
                        cls.class_size() as i128
                            * mn_character(a, cls).unwrap() as i128
                            * mn_character(b, cls).unwrap() as i128
                    })
                    .sum();
                assert_eq!(total, if a == b { fact } else { 0 }, "n={n} a={a} b={b}");
            }
        }
    }

    // Split-value sum rule chi^+ + chi^- = eps on split classes, n <= 11.
    for n in 1..=11usize {
        for lambda in partitions_of(n) {
            if !lambda.is_self_conjugate() {
                continue;
            }
            let hooks = lambda.diagonal_hooks();
            let mu = CycleType::new(Partition::new(hooks.clone()).unwrap());
            let eps: i64 = if ((n - hooks.len()) / 2) % 2 == 0 { 1 } else { -1 };
            for cls_sign in [Sign::Plus, Sign::Minus] {
                let cls = AnClass::new(mu.clone(), Some(cls_sign)).unwrap();
                let plus = an_character_value(
                    &AnCharLabel::new(lambda.clone(), Some(Sign::Plus)).unwrap(),
                    &cls,
                )
                .unwrap();
                let minus = an_character_value(
                    &AnCharLabel::new(lambda.clone(), Some(Sign::Minus)).unwrap(),
                    &cls,
                )
                .unwrap();
                assert_eq!(plus.add(&minus), CharacterValue::integer(eps), "lambda={lambda}");
                assert_eq!(mn_character(&lambda, &mu).unwrap(), eps, "lambda={lambda}");
            }
        }
    }

    // Exact square roots in cyclotomic fields for |d| <= 30.
    for d in -30i64..=30 {
        if d == 0 {
            continue;
        }
        let (root, n) = sqrt_as_cyclotomic(d);
        assert_eq!(
            root.mul(&root),
            CyclotomicElement::from_integer(d),
            "sqrt({d}) at conductor {n}"
        );
    }
    println!("criterion 07 (character layer: orthogonality n <= 9, split sums n <= 11, sqrt |d| <= 30): PASS");
}

#[test]
fn criterion_08_lr_layer() {
    // Coefficient symmetry, n <= 8.
    for n in 1..=8usize {
        for lambda in partitions_of(n) {
            for m in 0..=n {
                for mu in partitions_of(m) {
                    for nu in partitions_of(n - m) {
                        assert_eq!(
                            lr_coefficient(&lambda, &mu, &nu),
                            lr_coefficient(&lambda, &nu, &mu),
                            "lambda={lambda} mu={mu} nu={nu}"
                        );
                    }
                }
            }
        }
    }

    // Branching Law recovery, n <= 10.
    let one = p(&[1]);
    for n in 2..=10usize {
        for lambda in partitions_of(n) {
            let corners = lambda.corners().unwrap();
            for nu in partitions_of(n - 1) {
                let is_corner_removal = corners
                    .iter()
                    .any(|&(row, _)| lambda.remove_corner(row).unwrap() == nu);
                let c = lr_coefficient(&lambda, &nu, &one);
                assert_eq!(c == 1, is_corner_removal, "lambda={lambda} nu={nu}");
                assert!(c <= 1);
            }
        }
    }

    // Unique LR content iff straight or rotated shape, |lambda| <= 8.
    for n in 1..=8usize {
        for lambda in partitions_of(n) {
            for m in 0..=n {
                for nu in partitions_of(m) {
                    if !nu.contained_in(&lambda) {
                        continue;
                    }
                    let shape = SkewShape::new(lambda.clone(), nu.clone()).unwrap();
                    let unique = lr_set(&shape).len() == 1;
                    assert_eq!(unique, shape_classify(&shape).is_some(), "shape {shape}");
                }
            }
        }
    }

    // Near-standard contents force company, skew sizes 4..8 (outer up to 12).
    for outer_n in 4..=12usize {
        for lambda in partitions_of(outer_n) {
            for m in 4..=8usize.min(outer_n) {
                for nu in partitions_of(outer_n - m) {
                    if !nu.contained_in(&lambda) {
                        continue;
                    }
                    let shape = SkewShape::new(lambda.clone(), nu.clone()).unwrap();
                    let contents = lr_set(&shape);
                    let near_standard = p(&[m - 1, 1]);
                    if !contents.contains(&near_standard) {
                        continue;
                    }
                    let classified = matches!(
                        shape_classify(&shape),
                        Some((alpha, _)) if alpha == near_standard
                    );
                    let alternative = [
                        Partition::new(vec![m]).unwrap(),
                        Partition::from_unsorted(vec![m - 2, 2]),
                        Partition::from_unsorted(vec![m - 2, 1, 1]),
                    ]
                    .into_iter()
                    .any(|w| contents.contains(&w));
                    assert!(
                        classified || alternative,
                        "shape {shape} has ({},1) alone",
                        m - 1
                    );
                }
            }
        }
    }

    // Restriction preserves dimension: sum of c * dim * dim over a split.
    for n in 2..=8usize {
        for lambda in partitions_of(n) {
            let dim = lambda.dimension();
            for m in 1..n {
                let mut total = 0u64;
                for mu in partitions_of(m) {
                    for nu in partitions_of(n - m) {
                        total += lr_coefficient(&lambda, &mu, &nu) as u64
                            * mu.dimension()
                            * nu.dimension();
                    }
                }
                assert_eq!(total, dim, "lambda={lambda} split at {m}");
            }
        }
    }
    println!("criterion 08 (LR layer: symmetry, branching, unique-content, near-standard, dimensions): PASS");
}

#[test]
fn criterion_09_path_triangle() {
    let mut checked = 0usize;
    for n in 2..=9usize {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let cls = CycleType::new(mu);
                let via = spectrum_via_lr(&lambda, &cls).unwrap();
                let oracle = sn_oracle(&lambda, &cls);
                assert!(
                    via.same_exponents(&oracle),
                    "lambda={lambda} mu={cls}: {via} vs {oracle}"
                );
                checked += 1;
            }
        }
    }
    println!("criterion 09 (LR-recursive path = oracle, n <= 9, {checked} pairs): PASS");
}

/// Spot-check of the large-conductor split path beyond the acceptance
/// range: every split character of A_12 on its diagonal-hook classes.
#[test]
fn split_characters_at_n_12() {
    for lambda in partitions_of(12) {
        if !lambda.is_self_conjugate() {
            continue;
        }
        let hooks = CycleType::new(Partition::new(lambda.diagonal_hooks()).unwrap());
        for chi_sign in [Sign::Plus, Sign::Minus] {
            let chi = AnCharLabel::new(lambda.clone(), Some(chi_sign)).unwrap();
            for cls_sign in [Sign::Plus, Sign::Minus] {
                let cls = AnClass::new(hooks.clone(), Some(cls_sign)).unwrap();
                let oracle = spectrum_oracle(&chi.clone().into(), &cls.clone().into()).unwrap();
                let total: u64 = oracle.multiplicities().unwrap().values().sum();
                assert_eq!(total, lambda.dimension() / 2, "chi={chi} cls={cls}");
                let classified = classify_an(&chi, &cls).unwrap();
                assert!(
                    classified.spectrum().same_exponents(&oracle),
                    "chi={chi} cls={cls}"
                );
            }
        }
    }
}

/// The full range the CLI sweeps cover; heavy, so opt-in:
/// `cargo test --test acceptance -- --ignored --nocapture`.
#[test]
#[ignore = "full-range sweep; run with --ignored"]
fn extended_full_range_n_13() {
    let s = verify_range(13, Group::Symmetric, workers());
    assert!(s.is_clean(), "{} S mismatches", s.total_mismatches);
    let a = verify_range(13, Group::Alternating, workers());
    assert!(a.is_clean(), "{} A mismatches", a.total_mismatches);
    println!("extended range (both groups, n <= 13): PASS");
}

#[test]
fn criterion_10_galois_stability_and_its_split_failure() {
    // Rational characters mean unit-stable exponent sets everywhere in S_n.
    for n in 2..=9usize {
        for lambda in partitions_of(n) {
            for mu in partitions_of(n) {
                let cls = CycleType::new(mu);
                let oracle = sn_oracle(&lambda, &cls);
                let minpoly = min_poly_from_spectrum(&oracle).unwrap();
                assert!(
                    minpoly.cyclotomic_factors().is_some(),
                    "unstable S_n spectrum for lambda={lambda} mu={cls}"
                );
            }
        }
    }

    // The split A_5 cases break stability: E = {0,1,4} is not closed under
    // multiplication by 2 mod 5.
    for (chi_sign, cls_sign) in [
        (Sign::Plus, Sign::Plus),
        (Sign::Plus, Sign::Minus),
        (Sign::Minus, Sign::Plus),
        (Sign::Minus, Sign::Minus),
    ] {
        let chi = AnCharLabel::new(p(&[3, 1, 1]), Some(chi_sign)).unwrap();
        let cls = AnClass::new(CycleType::new(p(&[5])), Some(cls_sign)).unwrap();
        let oracle = spectrum_oracle(&chi.into(), &cls.into()).unwrap();
        let minpoly = min_poly_from_spectrum(&oracle).unwrap();
        assert_eq!(minpoly.cyclotomic_factors(), None);
        let doubled: BTreeSet<u64> = oracle.exponents().iter().map(|&e| (2 * e) % 5).collect();
        assert_ne!(doubled, *oracle.exponents(), "unit action fixed the set");
    }
    println!("criterion 10 (Galois stability of S_n spectra n <= 9; split A_5 failure): PASS");
}
