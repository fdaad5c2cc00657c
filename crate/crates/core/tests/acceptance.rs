use farep::facalc;
use farep::oracle::checks;
use farep::oracle::{nat_hom, ClaimReport, Descriptor, Route, TruncatedFunctor};
use farep::partitions::Partition;
use farep::verify;

fn hom_dim(from: &str, to: &str, trunc: usize) -> usize {
    let s = TruncatedFunctor::parse(from, trunc).unwrap();
    let t = TruncatedFunctor::parse(to, trunc).unwrap();
    nat_hom(&s, &t, Route::Presented).unwrap().dimension
}

fn summarize(number: usize, title: &str, reports: &[ClaimReport], extra: bool) -> bool {
    let failed: Vec<_> = reports.iter().filter(|r| !r.pass).collect();
    let pass = failed.is_empty() && extra && !reports.is_empty();
    println!(
        "criterion {number:>2} {}: {title} ({} claims, {} failed)",
        if pass { "PASS" } else { "FAIL" },
        reports.len(),
        failed.len()
    );
    for r in failed.iter().take(5) {
        println!("    {}", serde_json::to_string(r).unwrap());
    }
    pass
}

fn criterion_1() -> bool {
    let reports = verify::vanishing(4, 6).unwrap();
    summarize(1, "hom between tensor powers of the reduced functor vanishes below the diagonal", &reports, true)
}

fn criterion_2() -> bool {
    let reports: Vec<_> = verify::idempotent(6, 0, 0)
        .unwrap()
        .into_iter()
        .filter(|r| r.claim == "pi-idempotent")
        .collect();
    summarize(2, "the projector pi_n is idempotent for n <= 6", &reports, reports.len() == 7)
}

fn criterion_3() -> bool {
    let reports = verify::right_aug(4, 6).unwrap();
    summarize(3, "hom into P^FA_t counts surjections for n, t <= 4", &reports, true)
}

fn criterion_4() -> bool {
    let mut reports = Vec::new();
    for name in ["invert-triv", "w-relation", "h-relation", "hook-inversion"] {
        reports.extend(verify::groth_identity(name, 8, 12).unwrap());
    }
    // One identity for invert-triv plus k = 0..=8 for each of the other three.
    summarize(4, "Grothendieck group identities for k <= 8 at truncation 12", &reports, reports.len() == 1 + 3 * 9)
}

fn criterion_5() -> bool {
    let reports = verify::groth_identity("kfs", 0, 6).unwrap();
    summarize(5, "surjection bimodule from characters equals the convolved FA class", &reports, true)
}

fn criterion_6() -> bool {
    let reports = verify::hom_pfin(3, 4, 6).unwrap();
    let hand = hom_dim("proj-cover:1", "pfin:1", 6) == 1 && hom_dim("proj-cover:1", "pfin:2", 6) == 2;
    summarize(6, "hom from projective covers into P^FA_n matches the closed form", &reports, hand)
}

fn criterion_7() -> bool {
    let reports: Vec<_> = verify::hom_pbar(3, 6).unwrap().into_iter().filter(|r| r.claim == "hom-pbar-pbar").collect();
    let table = facalc::hom_pbar_pbar(3, 3).unwrap();
    let cancels = table.entry(2, 1).mults.is_empty() && table.entry(1, 0).mults.is_empty();
    let oracle = hom_dim("pbar:1", "pbar:2", 6) == 0 && hom_dim("pbar:0", "pbar:1", 6) == 0;
    summarize(7, "bimodule characters of hom between tensor powers match the closed form", &reports, cancels && oracle)
}

fn criterion_8() -> bool {
    let reports: Vec<_> = verify::simples(3, 6)
        .unwrap()
        .into_iter()
        .filter(|r| r.claim.starts_with("kfi-"))
        .collect();
    summarize(8, "composition factors of kFI(n, -) for n <= 3", &reports, true)
}

fn criterion_9() -> bool {
    let reports: Vec<_> = verify::schur(4, 6, 4)
        .unwrap()
        .into_iter()
        .filter(|r| r.claim == "schur-dimension")
        .collect();
    let lambda = Partition::new(vec![2, 1]).unwrap();
    let dims: Vec<u128> = facalc::decompose_schur_pfin(&lambda)
        .unwrap()
        .iter()
        .map(|p| p.dimension(3))
        .collect();
    let mut sorted = dims.clone();
    sorted.sort();
    let worked = facalc::schur_dimension(&lambda, 3) == 8 && sorted == vec![2, 3, 3];
    summarize(9, "Schur functors of P^FA split into the listed projectives", &reports, worked)
}

fn criterion_10() -> bool {
    let mut reports = vec![checks::verify_lambda_complex(5).unwrap()];
    reports.extend(verify::norm_map(3, 5).unwrap());
    summarize(10, "exterior power complex is exact and norm-map kernels have the expected size", &reports, true)
}

fn criterion_11() -> bool {
    let reports = verify::multiplicities(&["k", "pfin:1", "pfin:2", "kfi:2", "pbar:2"], 6).unwrap();
    let stable = [("k", "k"), ("pfin:1", "pfin:2"), ("pbar:2", "pbar:2")]
        .iter()
        .all(|(a, b)| {
            let (x, y) = checks::stabilization(&a.parse::<Descriptor>().unwrap(), &b.parse().unwrap(), 6).unwrap();
            x == y
        });
    summarize(11, "composition factors of sample modules agree between formula and solver", &reports, stable)
}

#[test]
fn criterion_01_tensor_power_homs_vanish_below_diagonal() {
    assert!(criterion_1());
}

#[test]
fn criterion_02_projector_is_idempotent() {
    assert!(criterion_2());
}

#[test]
fn criterion_03_homs_into_pfin_count_surjections() {
    assert!(criterion_3());
}

#[test]
fn criterion_04_grothendieck_identities() {
    assert!(criterion_4());
}

#[test]
fn criterion_05_surjection_class_from_characters() {
    assert!(criterion_5());
}

#[test]
fn criterion_06_projective_cover_homs_into_pfin() {
    assert!(criterion_6());
}

#[test]
fn criterion_07_tensor_power_hom_characters() {
    assert!(criterion_7());
}

#[test]
fn criterion_08_kfi_composition_factors() {
    assert!(criterion_8());
}

#[test]
fn criterion_09_schur_projective_summands() {
    assert!(criterion_9());
}

#[test]
fn criterion_10_exterior_complex_and_norm_map() {
    assert!(criterion_10());
}

#[test]
fn criterion_11_multiplicities_of_sample_modules() {
    assert!(criterion_11());
}
