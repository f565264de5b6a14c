use std::ffi::{c_char, CStr, CString};
use std::path::Path;
use std::process::Command;
use std::ptr;

use stingray_ffi::*;

fn take_string(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let out = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { stingray_string_free(s) };
    out
}

fn last_error() -> String {
    let p = stingray_last_error();
    assert!(!p.is_null());
    unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
}

fn field(p: u64, a: u32) -> *mut StingrayField {
    let mut f = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_field_new(p, a, &mut f) },
        StingrayStatus::Ok
    );
    f
}

fn matrix(f: *const StingrayField, d: usize, data: &[u64]) -> *mut StingrayMatrix {
    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_matrix_from_rows(f, d, data.as_ptr(), &mut m) },
        StingrayStatus::Ok
    );
    m
}

#[test]
fn field_handles() {
    let f = field(2, 3);
    assert_eq!(unsafe { stingray_field_order(f) }, 8);
    unsafe { stingray_field_free(f) };

    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_field_new(6, 1, &mut g) },
        StingrayStatus::InvalidArgument
    );
    assert!(g.is_null());
    assert!(last_error().contains("not prime"));
    assert_eq!(
        unsafe { stingray_field_new(2, 1, ptr::null_mut()) },
        StingrayStatus::NullPointer
    );
    // a successful call clears the error
    unsafe { stingray_field_free(field(3, 1)) };
    assert!(stingray_last_error().is_null());
    unsafe { stingray_field_free(ptr::null_mut()) };
}

#[test]
fn classify_companion_of_phi5() {
    let f = field(2, 1);
    // companion matrix of t^4 + t^3 + t^2 + t + 1 (rows act on the right)
    let m = matrix(f, 4, &[0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1]);
    let mut c = StingrayClassification {
        tag: StingrayTag::NotPpd,
        e: 0,
        t: 0,
        fixed_dim: 99,
        semisimple: false,
        ppd_order: false,
    };
    assert_eq!(
        unsafe { stingray_classify(m, 4, &mut c) },
        StingrayStatus::Ok
    );
    assert_eq!(c.tag, StingrayTag::Stingray);
    assert_eq!(c.e, 4);
    assert_eq!(c.fixed_dim, 0);
    assert!(c.semisimple && c.ppd_order);

    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_matrix_order(m, &mut s) },
        StingrayStatus::Ok
    );
    assert_eq!(take_string(s), "5");
    unsafe { stingray_matrix_free(m) };

    let id = matrix(f, 2, &[1, 0, 0, 1]);
    assert_eq!(
        unsafe { stingray_classify(id, 2, &mut c) },
        StingrayStatus::Ok
    );
    assert_eq!(c.tag, StingrayTag::NotPpd);
    unsafe { stingray_matrix_free(id) };

    let sing = matrix(f, 2, &[1, 1, 1, 1]);
    assert_eq!(
        unsafe { stingray_classify(sing, 1, &mut c) },
        StingrayStatus::Singular
    );
    unsafe { stingray_matrix_free(sing) };

    let mut bad = ptr::null_mut();
    let data = [0u64, 2, 1, 0];
    assert_eq!(
        unsafe { stingray_matrix_from_rows(f, 2, data.as_ptr(), &mut bad) },
        StingrayStatus::InvalidArgument
    );
    assert!(bad.is_null());
    unsafe { stingray_field_free(f) };
}

#[test]
fn ppd_strings() {
    let mut s = ptr::null_mut();
    assert_eq!(unsafe { stingray_ppd(2, 4, &mut s) }, StingrayStatus::Ok);
    assert_eq!(take_string(s), "5");
    assert_eq!(unsafe { stingray_ppd(2, 6, &mut s) }, StingrayStatus::Ok);
    assert_eq!(take_string(s), "");
    assert_eq!(unsafe { stingray_ppd(2, 64, &mut s) }, StingrayStatus::Ok);
    assert_eq!(take_string(s), "641 6700417");
    assert_eq!(
        unsafe { stingray_ppd(2, 512, &mut s) },
        StingrayStatus::TooLarge
    );
    assert_eq!(
        unsafe { stingray_ppd(6, 2, &mut s) },
        StingrayStatus::InvalidArgument
    );
}

const A7: &str = "MGRP v1
p 2
a 1
dim 6
ngens 2

0 1 0 0 0 0
0 0 1 0 0 0
0 0 0 1 0 0
0 0 0 0 1 0
0 0 0 0 0 1
1 1 1 1 1 1

0 0 1 0 0 0
1 0 0 0 0 0
0 1 0 0 0 0
0 0 0 1 0 0
0 0 0 0 1 0
0 0 0 0 0 1
# A7
";

#[test]
fn group_round_trip_and_order() {
    let text = CString::new(A7).unwrap();
    let mut g = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_group_parse_mgrp(text.as_ptr(), &mut g) },
        StingrayStatus::Ok
    );
    assert_eq!(unsafe { stingray_group_dim(g) }, 6);
    assert_eq!(unsafe { stingray_group_ngens(g) }, 2);

    let mut s = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_group_to_mgrp(g, &mut s) },
        StingrayStatus::Ok
    );
    assert_eq!(take_string(s), A7);

    assert_eq!(
        unsafe { stingray_group_order(g, 1, &mut s) },
        StingrayStatus::Ok
    );
    assert_eq!(take_string(s), "2520");

    let mut m = ptr::null_mut();
    assert_eq!(
        unsafe { stingray_group_generator(g, 0, &mut m) },
        StingrayStatus::Ok
    );
    assert_eq!(
        unsafe { stingray_matrix_order(m, &mut s) },
        StingrayStatus::Ok
    );
    assert_eq!(take_string(s), "7");
    unsafe { stingray_matrix_free(m) };
    assert_eq!(
        unsafe { stingray_group_generator(g, 2, &mut m) },
        StingrayStatus::InvalidArgument
    );
    unsafe { stingray_group_free(g) };

    let bad = CString::new("MGRP v2\n").unwrap();
    assert_eq!(
        unsafe { stingray_group_parse_mgrp(bad.as_ptr(), &mut g) },
        StingrayStatus::Parse
    );
    assert!(last_error().starts_with("line 1"));
    assert_eq!(
        unsafe { stingray_group_parse_mgrp(ptr::null(), &mut g) },
        StingrayStatus::NullPointer
    );
    assert_eq!(
        unsafe { stingray_group_order(ptr::null(), 1, &mut s) },
        StingrayStatus::NullPointer
    );
}

#[test]
fn errors_are_per_thread() {
    let mut f = ptr::null_mut();
    unsafe { stingray_field_new(4, 1, &mut f) };
    assert!(!stingray_last_error().is_null());
    std::thread::spawn(|| assert!(stingray_last_error().is_null()))
        .join()
        .unwrap();
}

#[test]
fn header_compiles_as_c() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("include");
    let header = dir.join("stingray.h");
    let text = std::fs::read_to_string(&header).unwrap();
    for name in [
        "stingray_field_new",
        "stingray_matrix_from_rows",
        "stingray_classify",
        "stingray_group_parse_mgrp",
        "stingray_group_order",
        "stingray_ppd",
        "stingray_last_error",
        "stingray_string_free",
    ] {
        assert!(text.contains(name), "{name} missing from header");
    }
    let tmp = tempfile::tempdir().unwrap();
    let src = tmp.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"stingray.h\"\n\
         int f(void) { StingrayField *x = 0; return stingray_field_new(2, 1, &x) == STINGRAY_STATUS_OK; }\n",
    )
    .unwrap();
    let Ok(out) = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(&dir)
        .arg(&src)
        .output()
    else {
        eprintln!("no C compiler; skipping syntax check");
        return;
    };
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
}
