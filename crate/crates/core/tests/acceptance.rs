//! Acceptance suite: one test per claim, each printing a single pass line
//! (run with `cargo test --test acceptance -- --nocapture` to see them).
//! Every bound and expected value is pinned here; a failure in any test is a
//! failed criterion.

use schmidt_lab::partition::partitions_of;
use schmidt_lab::qseries::identities::overpartition_product;
use schmidt_lab::qseries::Mono;
use schmidt_lab::schmidt::{
    self, diff_vector, fk_statistic, schmidt_weight, DiffVector, SchmidtSpec, WeightVector,
};
use schmidt_lab::stockhofe::{
    colored_to_schmidt, phi, phi_inverse, schmidt_to_colored, ColoredPart, ColoredPartition,
};
use schmidt_lab::verify::{self, ClaimId, VerifyOptions};
use schmidt_lab::{Modulus, Partition};
use std::collections::HashSet;
use std::time::Instant;

fn part(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn pass(n: u32, what: &str) {
    println!("[acceptance] criterion {n}: PASS - {what}");
}

const BIG_EXAMPLE: [u32; 26] = [
    11, 11, 11, 10, 10, 8, 8, 7, 7, 7, 7, 6, 6, 5, 5, 4, 4, 4, 4, 3, 3, 3, 2, 2, 2, 1,
];

#[test]
fn criterion_1_phi_worked_example() {
    let m = Modulus::new(5).unwrap();
    let input = part(&[26, 25, 22, 19, 15, 13, 11, 7, 5, 5, 3]);
    // warm up allocator and code paths before timing
    let _ = phi(&input, m).unwrap();
    let started = Instant::now();
    let (image, trace) = phi(&input, m).unwrap();
    let elapsed = started.elapsed();
    assert_eq!(image, part(&[41, 27, 24, 23, 21, 12, 3]));
    assert_eq!(trace.mu, part(&[30, 25, 5, 5]));
    assert_eq!(trace.lambda_v, part(&[21, 17, 14, 13, 11, 7, 3]));
    assert!(
        elapsed.as_micros() < 1000,
        "phi took {elapsed:?}, budget is 1 ms"
    );
    pass(1, "worked bijection example, exact trace, under 1 ms");
}

#[test]
fn criterion_2_colored_worked_example() {
    let spec = SchmidtSpec::new(5, vec![1, 2, 3]).unwrap();
    let lam = part(&BIG_EXAMPLE);
    let colored = schmidt_to_colored(&lam, &spec).unwrap();
    let want = ColoredPartition::from_sorted(vec![
        ColoredPart { size: 25, color: 1 },
        ColoredPart { size: 17, color: 2 },
        ColoredPart { size: 15, color: 4 },
        ColoredPart { size: 15, color: 3 },
        ColoredPart { size: 13, color: 1 },
        ColoredPart { size: 8, color: 2 },
        ColoredPart { size: 3, color: 3 },
    ]);
    assert_eq!(colored, want);
    assert_eq!(schmidt_weight(&lam, &spec), 96);
    assert_eq!(colored.weight(), 96);
    assert_eq!(
        diff_vector(&lam, Modulus::new(5).unwrap()),
        DiffVector(vec![2, 2, 2, 1])
    );
    assert_eq!(colored.color_multiplicities(4), vec![2, 2, 2, 1]);
    assert_eq!(colored_to_schmidt(&colored, &spec).unwrap(), lam);
    pass(2, "colored reduction of the 26-part example, weight 96, rho (2,2,2,1)");
}

#[test]
fn criterion_3_bijectivity_suite() {
    let started = Instant::now();
    for modulus in 2..=6u32 {
        let m = Modulus::new(modulus).unwrap();
        for n in 0..=25u32 {
            let mut images = HashSet::new();
            let mut regular = HashSet::new();
            for p in partitions_of(n) {
                if p.is_m_regular(m) {
                    regular.insert(p.clone());
                }
                if !p.is_m_flat(m) {
                    continue;
                }
                let (image, _) = phi(&p, m).unwrap();
                assert_eq!(image.weight(), p.weight(), "weight not preserved");
                assert!(image.is_m_regular(m), "image not regular");
                if p.is_m_regular(m) {
                    assert_eq!(image, p, "phi must fix flat-and-regular partitions");
                }
                assert!(images.insert(image.clone()), "phi not injective");
                assert_eq!(phi_inverse(&image, m).unwrap(), p, "round trip failed");
            }
            assert_eq!(images, regular, "m={modulus} n={n}: not onto");
        }
    }
    pass(
        3,
        &format!(
            "phi is a weight-preserving bijection flat/regular, m in 2..=6, n <= 25 ({:?})",
            started.elapsed()
        ),
    );
}

#[test]
fn criterion_4_main_theorem_exhaustive() {
    let started = Instant::now();
    let max_n = 15u64;
    let mut specs: Vec<SchmidtSpec> = Vec::new();
    for m in 2..=4u32 {
        // all S subsets of {1..m-1} containing 1
        let rest: Vec<u32> = (2..m).collect();
        for mask in 0..(1u32 << rest.len()) {
            let mut s = vec![1u32];
            for (bit, &r) in rest.iter().enumerate() {
                if mask & (1 << bit) != 0 {
                    s.push(r);
                }
            }
            specs.push(SchmidtSpec::new(m, s).unwrap());
        }
    }
    assert_eq!(specs.len(), 7);

    for spec in &specs {
        let schmidt_side = schmidt::schmidt_census(spec, max_n);
        let colored_side = schmidt::colored_census(spec, max_n);
        // identical bucket maps: every (n, rho) has equal counts
        for (key, &count) in &schmidt_side {
            assert_eq!(
                colored_side.get(key).copied().unwrap_or(0),
                count,
                "bucket {key:?} differs for m={} S={:?}",
                spec.m(),
                spec.counted_residues()
            );
        }
        for (key, &count) in &colored_side {
            assert_eq!(
                schmidt_side.get(key).copied().unwrap_or(0),
                count,
                "bucket {key:?} missing on the counted side"
            );
        }
        // and the bijection realizes the equality explicitly
        let weights = spec.indicator_weights();
        let mut seen = HashSet::new();
        schmidt::for_each_bounded(&weights, (spec.m() - 1) as usize, max_n, &mut |parts, acc| {
            let p = Partition::new(parts.to_vec()).unwrap();
            let image = schmidt_to_colored(&p, spec).unwrap();
            assert_eq!(image.weight(), acc, "colored size != Schmidt weight");
            assert_eq!(
                image.color_multiplicities(spec.color_count()),
                diff_vector(&p, spec.modulus()).0,
                "color multiplicities != difference vector"
            );
            image.check_palette(spec).unwrap();
            assert!(seen.insert(image.clone()), "colored image repeated");
            assert_eq!(colored_to_schmidt(&image, spec).unwrap(), p);
        });
    }
    pass(
        4,
        &format!(
            "counted census equals colored census for all m <= 4, S, rho, n <= 15 ({:?})",
            started.elapsed()
        ),
    );
}

#[test]
fn criterion_5_paper_example_with_witnesses() {
    let spec = SchmidtSpec::new(3, vec![1, 2]).unwrap();
    let f_witnesses: HashSet<Partition> = schmidt::schmidt_partitions(&spec, 7)
        .into_iter()
        .filter(|p| fk_statistic(p, 3) == 3)
        .collect();
    let f_expected: HashSet<Partition> = [
        part(&[5, 2, 2]),
        part(&[4, 3, 1]),
        part(&[4, 2, 2, 1]),
        part(&[3, 3, 1, 1]),
    ]
    .into_iter()
    .collect();
    assert_eq!(f_witnesses, f_expected);

    let p_witnesses: HashSet<Partition> = partitions_of(7).filter(|p| p.len() == 3).collect();
    let p_expected: HashSet<Partition> = [
        part(&[5, 1, 1]),
        part(&[4, 2, 1]),
        part(&[3, 3, 1]),
        part(&[3, 2, 2]),
    ]
    .into_iter()
    .collect();
    assert_eq!(p_witnesses, p_expected);

    assert_eq!(schmidt::count_f32(7, 3), 4);
    assert_eq!(schmidt::partitions_exact_parts(7, 3), 4);
    pass(5, "f_{3,2}(7,3) = p(7,3) = 4 with the exact witness sets");
}

#[test]
fn criterion_6_identity_suite() {
    let started = Instant::now();
    let opts = VerifyOptions {
        order: 30,
        cap_t: 30,
        cap_t1: 10,
        cap_t2: 10,
        ..VerifyOptions::default()
    };
    for id in [
        ClaimId::F32,
        ClaimId::F31,
        ClaimId::Genf,
        ClaimId::Firsti,
        ClaimId::TwoPhi1,
        ClaimId::Lemmab,
        ClaimId::SumA,
        ClaimId::Pascal,
        ClaimId::Vandermonde,
        ClaimId::QBinomTheorem,
    ] {
        for verdict in verify::run_claim(id, &opts) {
            assert!(verdict.verified(), "{verdict}");
        }
    }
    pass(
        6,
        &format!(
            "identity suite exact to q^30 (f31 caps 10,10; lemmas and classical checks) ({:?})",
            started.elapsed()
        ),
    );
}

#[test]
fn criterion_7_closed_forms_vs_recurrences() {
    let started = Instant::now();
    let opts = VerifyOptions::default();
    for id in [ClaimId::Pi3, ClaimId::Kappa, ClaimId::Genlemma] {
        for verdict in verify::run_claim(id, &opts) {
            assert!(verdict.verified(), "{verdict}");
        }
    }
    pass(
        7,
        &format!(
            "pi3 indices <= 15, kappa indices <= 17, genlemma k in 3..=5 indices <= 15 ({:?})",
            started.elapsed()
        ),
    );
}

#[test]
fn criterion_8_overpartition_corollary() {
    // parts repeating < 4, odd places counted: (m, S) = (4, {1,3})
    let spec = SchmidtSpec::new(4, vec![1, 3]).unwrap();
    let hist = schmidt::schmidt_weight_histogram(&spec, 25);
    let product = overpartition_product(25);
    for n in 0..=25u32 {
        assert_eq!(
            hist[n as usize] as i64,
            product.coeff(Mono::q(n)),
            "overpartition count differs at n={n}"
        );
    }
    assert_eq!(&hist[0..6], &[1, 2, 4, 8, 14, 24]);
    pass(8, "four-distinct odd-place counts match (-q;q)inf/(q;q)inf to n=25");
}

#[test]
fn criterion_9_weighted_and_hook_theorems() {
    let started = Instant::now();
    let w = WeightVector::new(vec![1, 2, 3, 2, 1]).unwrap();
    for n in 0..=25u64 {
        assert_eq!(
            schmidt::count_weighted(&w, 4, n).unwrap(),
            schmidt::mod9_class_count(n),
            "mod-9 equinumerosity fails at n={n}"
        );
    }
    for n in 1..=20u64 {
        assert!(
            schmidt::hook_multiset_check(n),
            "hook multiset equality fails at n={n}"
        );
    }
    pass(
        9,
        &format!(
            "mod-9 equinumerosity to n=25 and hook multisets to n=20 ({:?})",
            started.elapsed()
        ),
    );
}
