use std::ffi::{c_char, CStr, CString};
use std::path::PathBuf;
use std::ptr;

use closure_ops::json::{
    self, ComplexityDoc, GeneratorsDoc, KrepsDoc, LabelingDoc, TopologyDoc, ValidationDoc,
};
use closure_ops_ffi::*;

fn data(name: &str) -> CString {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/data")
        .join(name);
    CString::new(std::fs::read_to_string(path).unwrap()).unwrap()
}

fn last_error() -> Option<String> {
    let p = co_last_error();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_str().unwrap().to_string())
}

/// Takes ownership of a library string.
fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let text = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_string();
    unsafe { co_string_free(s) };
    text
}

fn operator(name: &str) -> *mut CoOperator {
    let mut op = ptr::null_mut();
    assert_eq!(
        unsafe { co_operator_from_json(data(name).as_ptr(), &mut op) },
        CoStatus::Ok
    );
    assert!(!op.is_null());
    op
}

#[test]
fn operator_queries() {
    let op = operator("two_pairs_topology.json");
    let mut n = 0usize;
    let (mut mnwo, mut mnbc) = (0usize, 0usize);
    let mut closed = 0u32;
    unsafe {
        assert_eq!(co_operator_element_count(op, &mut n), CoStatus::Ok);
        assert_eq!(co_operator_mnwo(op, &mut mnwo), CoStatus::Ok);
        assert_eq!(co_operator_mnbc(op, &mut mnbc), CoStatus::Ok);
        assert_eq!(co_operator_apply(op, 0b101, &mut closed), CoStatus::Ok);
    }
    assert_eq!((n, mnwo, mnbc, closed), (3, 2, 4, 0b111));
    assert_eq!(
        unsafe { co_operator_apply(op, 0b1000, &mut closed) },
        CoStatus::InvalidInput
    );
    assert!(last_error().unwrap().contains("outside the ground set"));

    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { co_operator_complexity_json(op, &mut out) },
        CoStatus::Ok
    );
    assert!(last_error().is_none());
    let doc: ComplexityDoc = json::from_str(&take(out)).unwrap();
    assert_eq!((doc.mnwo, doc.mnbc, doc.width_s), (2, 4, 3));

    assert_eq!(
        unsafe { co_operator_topology_json(op, &mut out) },
        CoStatus::Ok
    );
    let doc: TopologyDoc = json::from_str(&take(out)).unwrap();
    assert_eq!(doc.closed_sets.len(), 7);

    assert_eq!(
        unsafe { co_operator_hasse(op, true, &mut out) },
        CoStatus::Ok
    );
    assert_eq!(take(out).matches("->").count(), 9);
    assert_eq!(
        unsafe { co_operator_mobius_json(op, &mut out) },
        CoStatus::Ok
    );
    assert!(take(out).contains("\"mu\""));
    unsafe { co_operator_free(op) };
}

#[test]
fn decompositions_and_labels_rebuild_the_operator() {
    let op = operator("two_pairs_topology.json");
    let mut out = ptr::null_mut();
    for kind in [CoDecomposition::WeakOrders, CoDecomposition::Binary] {
        assert_eq!(
            unsafe { co_operator_decompose_json(op, kind, &mut out) },
            CoStatus::Ok
        );
        let text = take(out);
        let doc: GeneratorsDoc = json::from_str(&text).unwrap();
        assert!(doc.verification.unwrap().pointwise_equal);
        let mut back = ptr::null_mut();
        let c = CString::new(text).unwrap();
        assert_eq!(
            unsafe { co_operator_from_generators_json(c.as_ptr(), &mut back) },
            CoStatus::Ok
        );
        let mut closed = 0;
        unsafe {
            co_operator_apply(back, 0b001, &mut closed);
            co_operator_free(back);
        }
        assert_eq!(closed, 0b001);
    }
    assert_eq!(
        unsafe { co_operator_labels_json(op, CoLabeling::Minimal, &mut out) },
        CoStatus::Ok
    );
    let doc: LabelingDoc = json::from_str(&take(out)).unwrap();
    assert_eq!(doc.labels.len(), 4);
    unsafe { co_operator_free(op) };

    let mut lab = ptr::null_mut();
    assert_eq!(
        unsafe { co_operator_from_labels_json(data("pets_labels.json").as_ptr(), &mut lab) },
        CoStatus::Ok
    );
    let mut mnbc = 0;
    unsafe {
        co_operator_mnbc(lab, &mut mnbc);
        co_operator_free(lab);
    }
    assert_eq!(mnbc, 6);
}

#[test]
fn failed_checks_still_produce_reports() {
    let mut out = ptr::null_mut();
    let status =
        unsafe { co_validate_table_json(data("not_a_closure_table.json").as_ptr(), &mut out) };
    assert_eq!(status, CoStatus::CheckFailed);
    assert!(last_error().is_some());
    let doc: ValidationDoc = json::from_str(&take(out)).unwrap();
    assert!(!doc.is_closure);

    // a non-closure table cannot become an operator
    let mut op = ptr::null_mut();
    let status =
        unsafe { co_operator_from_json(data("not_a_closure_table.json").as_ptr(), &mut op) };
    assert_eq!(status, CoStatus::CheckFailed);
    assert!(op.is_null());

    let bad = CString::new(
        r#"{"elements":["a","b","c"],"closed_sets":[[],["a","b"],["b","c"],["a","b","c"]]}"#,
    )
    .unwrap();
    assert_eq!(
        unsafe { co_operator_from_json(bad.as_ptr(), &mut op) },
        CoStatus::CheckFailed
    );
    assert!(last_error().unwrap().contains("intersection"));
}

#[test]
fn preferences() {
    let mut pref = ptr::null_mut();
    assert_eq!(
        unsafe { co_preference_from_json(data("bob_preference.json").as_ptr(), &mut pref) },
        CoStatus::Ok
    );
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { co_preference_kreps_json(pref, &mut out) },
        CoStatus::Ok
    );
    let doc: KrepsDoc = json::from_str(&take(out)).unwrap();
    assert_eq!(doc.state_count, 2);
    assert_eq!(
        unsafe { co_preference_additive_json(pref, ptr::null(), &mut out) },
        CoStatus::Ok
    );
    assert!(take(out).contains("\"exact\": true"));

    // Bob's utility is not constant on the trivial operator's classes
    let trivial =
        CString::new(r#"{"elements":["x","y","z"],"closed_sets":[[],["x","y","z"]]}"#).unwrap();
    let mut op = ptr::null_mut();
    unsafe { co_operator_from_json(trivial.as_ptr(), &mut op) };
    assert_eq!(
        unsafe { co_preference_additive_json(pref, op, &mut out) },
        CoStatus::CheckFailed
    );
    assert!(take(out).contains("respects"));
    unsafe {
        co_operator_free(op);
        co_preference_free(pref);
    }

    let mut bad = ptr::null_mut();
    assert_eq!(
        unsafe { co_preference_from_json(data("decreasing_preference.json").as_ptr(), &mut bad) },
        CoStatus::Ok
    );
    assert_eq!(
        unsafe { co_preference_kreps_json(bad, &mut out) },
        CoStatus::CheckFailed
    );
    assert!(take(out).contains("flexibility_holds"));
    unsafe { co_preference_free(bad) };
}

#[test]
fn bad_arguments() {
    let mut op = ptr::null_mut();
    let junk = CString::new("{ nope").unwrap();
    assert_eq!(
        unsafe { co_operator_from_json(junk.as_ptr(), &mut op) },
        CoStatus::InvalidInput
    );
    assert!(last_error().unwrap().starts_with("malformed document"));
    assert_eq!(
        unsafe { co_operator_from_json(ptr::null(), &mut op) },
        CoStatus::NullPointer
    );
    assert_eq!(
        unsafe { co_operator_from_json(junk.as_ptr(), ptr::null_mut()) },
        CoStatus::NullPointer
    );
    let mut n = 0;
    assert_eq!(
        unsafe { co_operator_mnwo(ptr::null(), &mut n) },
        CoStatus::NullPointer
    );
    let mut out = ptr::null_mut();
    assert_eq!(
        unsafe { co_operator_complexity_json(ptr::null(), &mut out) },
        CoStatus::NullPointer
    );
    assert!(out.is_null());
    unsafe {
        co_operator_free(ptr::null_mut());
        co_preference_free(ptr::null_mut());
        co_string_free(ptr::null_mut());
    }
    let v = unsafe { CStr::from_ptr(co_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
}
