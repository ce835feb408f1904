use std::collections::HashMap;
use std::process::Command;

use ramanujan_verify::config::Suite;
use ramanujan_verify::report::emit_report_string;
use ramanujan_verify::suites::{checks_for, closed_form_table};
use ramanujan_verify::{run_closed_form_suite, OutputFormat, SuiteConfig, VerificationRecord};

fn verify(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_verify")).args(args).output().expect("run verify")
}

#[test]
fn exit_code_contract() {
    let ok = verify(&["--suite", "closed-forms"]);
    assert_eq!(ok.status.code(), Some(0), "{}", String::from_utf8_lossy(&ok.stderr));
    // The second displayed G identity fails, so this suite exits 1.
    let fail = verify(&["--suite", "g-identities", "--format", "csv"]);
    assert_eq!(fail.status.code(), Some(1));
    let text = String::from_utf8(fail.stdout).unwrap();
    assert!(text.starts_with("id,lhs,rhs,abs_residual,rel_residual,tol,status,runtime_ms\n"));
    assert!(text.contains("G-IDENTITY-2,"));
    assert!(text.contains("G-IDENTITY-2/RCSERIES,"));
}

#[test]
fn bad_arguments_exit_2() {
    assert_eq!(verify(&["--suite", "closed-forms", "--max-terms", "10"]).status.code(), Some(2));
    assert_eq!(verify(&["--suite", "closed-forms", "--tol", "0"]).status.code(), Some(2));
    assert_ne!(verify(&["--suite", "nonsense"]).status.code(), Some(0));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = std::env::temp_dir().join(format!("verify-config-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("verify.conf");
    std::fs::write(&path, "suite = closed-forms\nformat = csv\ntol = 1e-30\n").unwrap();
    let path = path.to_str().unwrap();

    // tol = 1e-30 from the file makes every quadrature check fail
    let strict = verify(&["--config", path]);
    assert_eq!(strict.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&strict.stdout).starts_with("id,"));

    let relaxed = verify(&["--config", path, "--tol", "1e-6", "--format", "json"]);
    assert_eq!(relaxed.status.code(), Some(0));
    let records: Vec<VerificationRecord> = serde_json::from_slice(&relaxed.stdout).unwrap();
    assert_eq!(records.len(), 16);
    assert!(records.iter().all(|r| r.tol == 1e-6));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn json_round_trip() {
    let records = run_closed_form_suite(&SuiteConfig::default());
    let text = emit_report_string(&records, OutputFormat::Json);
    let back: Vec<VerificationRecord> = serde_json::from_str(&text).unwrap();
    assert_eq!(back, records);
    let empty = emit_report_string(&[], OutputFormat::Json);
    assert_eq!(serde_json::from_str::<Vec<VerificationRecord>>(&empty).unwrap(), vec![]);
}

#[test]
fn coverage_audit() {
    let config = SuiteConfig::default();
    let mut owner: HashMap<String, Vec<Suite>> = HashMap::new();
    for suite in [Suite::ClosedForms, Suite::Theorems, Suite::GIdentities] {
        for check in checks_for(suite, &config) {
            owner.entry(check.id).or_default().push(suite);
        }
    }
    for (id, suites) in &owner {
        assert_eq!(suites.len(), 1, "{id} appears in {suites:?}");
    }
    let exactly_one = |id: &str, suite: Suite| {
        assert_eq!(owner.get(id).map(Vec::as_slice), Some(&[suite][..]), "{id}");
    };
    for cf in closed_form_table() {
        exactly_one(&format!("RC-{}-{}", cf.m, cf.n), Suite::ClosedForms);
        exactly_one(&format!("RCSERIES-{}-{}", cf.m, cf.n), Suite::Theorems);
    }
    for n in [1, 2, 4] {
        exactly_one(&format!("UPSILON-RECIP-A-{n}"), Suite::ClosedForms);
        exactly_one(&format!("UPSILON-RECIP-B-{n}"), Suite::ClosedForms);
    }
    for v in 1..=5 {
        for k in 0..=50 {
            exactly_one(&format!("TERM-V{v}-K{k:02}"), Suite::Theorems);
        }
        if v > 1 {
            for family in ["ICSTAR", "IC", "RC"] {
                exactly_one(&format!("VARIANTS-{family}-V{v}"), Suite::Theorems);
            }
        }
    }
    let grid = owner.keys().filter(|id| id.starts_with("ICGRID-")).count();
    assert_eq!(grid, 30);
    for id in ["ICSTAR-DELTA", "ICSTAR-BINOMIAL", "XI-EXP", "XI-WRIGHT", "XI-MITTAG-LEFFLER", "NABLA-0F0", "NABLA-1F0"]
    {
        exactly_one(id, Suite::Theorems);
    }
    for i in 1..=9 {
        exactly_one(&format!("G-IDENTITY-{i}"), Suite::GIdentities);
    }
    assert_eq!(checks_for(Suite::All, &config).len(), owner.len());
}
