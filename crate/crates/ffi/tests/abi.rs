use std::ffi::{CStr, CString};
use std::os::raw::c_char;
use std::ptr;

use qselect_ffi::*;

fn last_error() -> String {
    let p = qs_last_error_message();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn lottery(label: &str, outcomes: &[&str], p: &[f64], u: &[f64]) -> Result<*mut QsLottery, QsStatus> {
    let label = CString::new(label).unwrap();
    let names: Vec<CString> = outcomes.iter().map(|s| CString::new(*s).unwrap()).collect();
    let ptrs: Vec<*const c_char> = names.iter().map(|s| s.as_ptr()).collect();
    let mut out = ptr::null_mut();
    let status = unsafe { qs_lottery_new(label.as_ptr(), ptrs.as_ptr(), p.as_ptr(), u.as_ptr(), p.len(), &mut out) };
    if status == QsStatus::Ok {
        Ok(out)
    } else {
        assert!(out.is_null());
        Err(status)
    }
}

#[test]
fn criteria_agree_across_paths() {
    let a = lottery("a", &["hi", "lo"], &[0.4, 0.6], &[3.0, 1.0]).unwrap();
    let b = lottery("b", &["hi", "lo"], &[0.7, 0.3], &[3.0, 1.0]).unwrap();
    let mut theta = ptr::null_mut();
    unsafe {
        assert_eq!(qs_theta_uniform(4, 0.5, &mut theta), QsStatus::Ok);

        let mut classical = 0.0;
        assert_eq!(qs_criterion_classical(a, b, theta, &mut classical), QsStatus::Ok);
        let (mut ea, mut eb) = (0.0, 0.0);
        assert_eq!(qs_lottery_expected_utility(a, &mut ea), QsStatus::Ok);
        assert_eq!(qs_lottery_expected_utility(b, &mut eb), QsStatus::Ok);
        assert!((classical - 0.5 * (ea - eb)).abs() < 1e-12);

        let mut trace = 0.0;
        assert_eq!(
            qs_criterion_trace(a, b, theta, QsStateKind::Classical, &mut trace),
            QsStatus::Ok
        );
        assert!((trace - classical).abs() < 1e-9);

        let mut br = QsBreakdown::default();
        assert_eq!(qs_criterion_nonclassical(a, b, theta, &mut br), QsStatus::Ok);
        assert!((br.risk_a + br.risk_b + br.comparison - br.total).abs() < 1e-15);
        assert_eq!(
            qs_criterion_trace(a, b, theta, QsStateKind::Nonclassical, &mut trace),
            QsStatus::Ok
        );
        assert!((trace - br.total).abs() < 1e-9);

        qs_theta_free(theta);
        qs_lottery_free(a);
        qs_lottery_free(b);
    }
}

#[test]
fn lottery_from_json() {
    let json = CString::new(r#"{"label":"x","entries":[{"outcome":"w","p":1.0,"u":2.0}]}"#).unwrap();
    let mut lot = ptr::null_mut();
    unsafe {
        assert_eq!(qs_lottery_from_json(json.as_ptr(), &mut lot), QsStatus::Ok);
        assert_eq!(qs_lottery_len(lot), 1);
        qs_lottery_free(lot);
    }
    let json = CString::new(r#"{"label":"x","entries":[]}"#).unwrap();
    let status = unsafe { qs_lottery_from_json(json.as_ptr(), &mut lot) };
    assert_eq!(status, QsStatus::InvalidLottery);
}

#[test]
fn errors_set_status_and_message() {
    assert_eq!(
        lottery("bad", &["a", "b"], &[0.7, 0.7], &[1.0, 0.0]).unwrap_err(),
        QsStatus::InvalidLottery
    );
    assert!(last_error().contains("entries[].p"));

    let mut out = 0.0;
    assert_eq!(
        unsafe { qs_cash_equivalent(1.5, 0.0, 1.0, &mut out) },
        QsStatus::InvalidArgument
    );
    assert!(last_error().contains('p'));
    assert_eq!(out, 0.0);

    assert_eq!(
        unsafe { qs_criterion_classical(ptr::null(), ptr::null(), ptr::null(), &mut out) },
        QsStatus::NullPointer
    );

    let a = lottery("a", &["x", "y"], &[0.5, 0.5], &[1.0, 0.0]).unwrap();
    let b = lottery("b", &["x", "z"], &[0.5, 0.5], &[1.0, 0.0]).unwrap();
    let theta = qs_theta_new();
    assert_eq!(
        unsafe { qs_criterion_classical(a, b, theta, &mut out) },
        QsStatus::InvalidLottery
    );
    assert_eq!(unsafe { qs_theta_set(theta, 0, 1, 0.5) }, QsStatus::InvalidTheta);
    unsafe {
        qs_theta_free(theta);
        qs_lottery_free(a);
        qs_lottery_free(b);
        qs_lottery_free(ptr::null_mut());
    }
}

#[test]
fn weighting_and_scenarios() {
    assert!((qs_w_xi(1.0 / 3.0, 2f64.sqrt()) - 1.0 / 3.0).abs() < 1e-12);
    assert!((qs_goldstein_einhorn(0.3, 0.5, 0.5) - qs_w_xi(0.3, 2.0)).abs() < 1e-12);

    let p = [0.25, 0.25, 0.5];
    let mut s = [0.0; 3];
    assert_eq!(
        unsafe { qs_subjective_probs(p.as_ptr(), 3, s.as_mut_ptr()) },
        QsStatus::Ok
    );
    assert!((s.iter().sum::<f64>() - 1.0).abs() < 1e-12);

    let (mut s12, mut s43) = (0.0, 0.0);
    assert_eq!(
        unsafe { qs_machina(0.5, 0.5, 0.0, 101.0, &mut s12, &mut s43) },
        QsStatus::Ok
    );
    assert!((s43 - 1.0).abs() < 1e-12);

    let mut ce = 0.0;
    assert_eq!(unsafe { qs_cash_equivalent(0.5, 1.0, 1.0, &mut ce) }, QsStatus::Ok);
    assert!((ce - (1.0 - 0.5f64.sqrt()) / 2.0).abs() < 1e-12);

    let (mut wta, mut wtp) = (0.0, 0.0);
    assert_eq!(
        unsafe { qs_wta_wtp(0.5, 1.0, 0.1, 0.6, &mut wta, &mut wtp) },
        QsStatus::Ok
    );
    assert!(wta > wtp);

    let version = unsafe { CStr::from_ptr(qs_version()) };
    assert_eq!(version.to_str().unwrap(), env!("CARGO_PKG_VERSION"));
}

#[test]
fn region_map_handles() {
    let mut map = ptr::null_mut();
    let status = unsafe { qs_phase_diagram(QsDiagram::Machina, 101.0, 0.0, 1.0, 5, 0.0, 0.0, 1, 1e-12, &mut map) };
    assert_eq!(status, QsStatus::Ok);
    unsafe {
        assert_eq!(qs_region_map_rows(map), 1);
        assert_eq!(qs_region_map_cols(map), 5);
        let mut cell = std::mem::MaybeUninit::<QsRegionCell>::uninit();
        assert_eq!(qs_region_map_cell(map, 0, 0, cell.as_mut_ptr()), QsStatus::Ok);
        let cell = cell.assume_init();
        assert_eq!(cell.pattern, QsPattern::OneTwoThreeFour);
        assert_eq!(cell.x1, 0.0);
        qs_region_map_free(map);
    }
    let status = unsafe { qs_phase_diagram(QsDiagram::Ellsberg, 1.0, 0.0, 2.0, 5, 0.0, 1.0, 5, 1e-12, &mut map) };
    assert_eq!(status, QsStatus::InvalidArgument);
    assert!(last_error().contains("alpha"));
}
