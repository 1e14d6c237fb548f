use hopfcalc_core::constructions::{drinfeld_double, taft};
use hopfcalc_core::hopf::verify_axioms;
use hopfcalc_core::pipeline::run_verification;
use hopfcalc_core::report::CheckStatus;

#[test]
fn bench_double_taft3() {
    let t0 = std::time::Instant::now();
    let h = taft(3, 1).unwrap();
    let d = drinfeld_double(&h).unwrap();
    eprintln!("build double: {:?}, mult nnz = {}, comult nnz = {}", t0.elapsed(), d.mult().nnz(), d.comult().nnz());
    let t0 = std::time::Instant::now();
    let report = verify_axioms(&d);
    eprintln!("verify axioms: {:?}", t0.elapsed());
    assert!(report.all_passed(), "{:?}", report.failures().collect::<Vec<_>>());
    let t0 = std::time::Instant::now();
    let mut last = std::time::Instant::now();
    let outcome = run_verification(&d, |doc| {
        eprintln!("  stage -> {} checks, +{:?}", doc.checks.len(), last.elapsed());
        last = std::time::Instant::now();
    });
    eprintln!("full pipeline: {:?}", t0.elapsed());
    for e in &outcome.document.checks {
        eprintln!("  {:<28} {:?} {}", e.id, e.status, e.reason.clone().unwrap_or_default());
    }
    assert!(!outcome.failed);
    // Unimodular with non-unimodular dual, index 3.
    let integral = outcome.document.checks.iter().find(|e| e.id == "integral-pack").unwrap();
    assert!(integral.reason.as_deref().unwrap().contains("unimodular: true, dual unimodular: false"));
    let index = outcome.document.checks.iter().find(|e| e.id == "index").unwrap();
    assert!(index.reason.as_deref().unwrap().contains("index 3"));
    let l44 = outcome.document.checks.iter().find(|e| e.id == "lemma-4.4").unwrap();
    assert_eq!(l44.status, CheckStatus::Pass);
    let l53 = outcome.document.checks.iter().find(|e| e.id == "lemma-5.3").unwrap();
    assert_eq!(l53.status, CheckStatus::Pass);
}
