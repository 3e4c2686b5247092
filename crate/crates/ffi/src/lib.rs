//! C ABI over the sdet core. Big integers cross the boundary as decimal
//! strings; group-ring elements are opaque handles. Every returned string
//! is owned by the caller and released with `sdet_string_free`; every
//! element handle with `sdet_element_free`.

use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::str::FromStr;

use num_bigint::BigInt;
use sdet::determinants::{regular_determinant, sd16_factored, GroupFamily, GroupSpec};
use sdet::group_ring::GroupRingElement;
use sdet::number_theory::classify;
use sdet::witness::witness;

/// Opaque group-ring element.
pub struct SdetElement(GroupRingElement);

/// Status code returned by every fallible entry point.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SdetStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Malformed element text, integer, or group name.
    Parse = 2,
    /// The operation does not apply to the named group.
    BadGroup = 3,
    /// Witness requested for a value proven unachievable.
    NotAchievable = 4,
    /// Achievability could not be decided (incomplete factorization).
    Unknown = 5,
    /// Invariant violation inside the library; should not happen.
    Internal = 6,
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, SdetStatus> {
    if p.is_null() {
        return Err(SdetStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| SdetStatus::Parse)
}

fn write_string(s: String, out: *mut *mut c_char) -> SdetStatus {
    match CString::new(s) {
        Ok(c) => {
            unsafe { *out = c.into_raw() };
            SdetStatus::Ok
        }
        Err(_) => SdetStatus::Internal,
    }
}

fn guarded(body: impl FnOnce() -> SdetStatus) -> SdetStatus {
    catch_unwind(AssertUnwindSafe(body)).unwrap_or(SdetStatus::Internal)
}

fn spec_by_name(name: &str) -> Option<GroupSpec> {
    match name {
        "sd16" => Some(GroupSpec::sd16()),
        "sd32" => Some(GroupSpec::sd32()),
        "m16" => Some(GroupSpec::m16()),
        "m32" => Some(GroupSpec::m32()),
        _ => None,
    }
}

/// Parse "a0,...,a_{h-1};b0,...,b_{h-1}" into an element of the 2^tower
/// tower (tower 4 gives the order-16 groups, tower 5 the order-32 ones).
#[no_mangle]
pub unsafe extern "C" fn sdet_element_parse(
    tower: u32,
    text: *const c_char,
    out: *mut *mut SdetElement,
) -> SdetStatus {
    guarded(|| {
        if out.is_null() {
            return SdetStatus::NullArgument;
        }
        let text = match read_str(text) {
            Ok(s) => s,
            Err(st) => return st,
        };
        match GroupRingElement::parse(tower, text) {
            Ok(e) => {
                *out = Box::into_raw(Box::new(SdetElement(e)));
                SdetStatus::Ok
            }
            Err(_) => SdetStatus::Parse,
        }
    })
}

#[no_mangle]
pub unsafe extern "C" fn sdet_element_free(element: *mut SdetElement) {
    if !element.is_null() {
        drop(Box::from_raw(element));
    }
}

#[no_mangle]
pub unsafe extern "C" fn sdet_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Canonical "a;b" text of an element.
#[no_mangle]
pub unsafe extern "C" fn sdet_element_to_string(
    element: *const SdetElement,
    out: *mut *mut c_char,
) -> SdetStatus {
    guarded(|| {
        if element.is_null() || out.is_null() {
            return SdetStatus::NullArgument;
        }
        write_string((*element).0.to_string(), out)
    })
}

/// Group determinant of `element` in the named group ("sd16", "sd32",
/// "m16", "m32") via the regular representation. The element's tower must
/// match the group order.
#[no_mangle]
pub unsafe extern "C" fn sdet_determinant(
    element: *const SdetElement,
    group: *const c_char,
    out: *mut *mut c_char,
) -> SdetStatus {
    guarded(|| {
        if element.is_null() || out.is_null() {
            return SdetStatus::NullArgument;
        }
        let name = match read_str(group) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let spec = match spec_by_name(name) {
            Some(s) => s,
            None => return SdetStatus::BadGroup,
        };
        debug_assert!(spec.family() != GroupFamily::Dihedral8);
        match regular_determinant(&(*element).0, spec) {
            Ok(d) => write_string(d.to_string(), out),
            Err(_) => SdetStatus::Parse,
        }
    })
}

/// SD16 determinant in factored form D = M * A2^2 * A3^2. The product is
/// re-checked against the regular-representation determinant before
/// anything is written; a mismatch reports `Internal`.
#[no_mangle]
pub unsafe extern "C" fn sdet_sd16_factored(
    element: *const SdetElement,
    out_d: *mut *mut c_char,
    out_m: *mut *mut c_char,
    out_a2: *mut *mut c_char,
    out_a3: *mut *mut c_char,
) -> SdetStatus {
    guarded(|| {
        if element.is_null()
            || out_d.is_null()
            || out_m.is_null()
            || out_a2.is_null()
            || out_a3.is_null()
        {
            return SdetStatus::NullArgument;
        }
        let fac = match sd16_factored(&(*element).0) {
            Ok(f) => f,
            Err(_) => return SdetStatus::Parse,
        };
        let oracle = match regular_determinant(&(*element).0, GroupSpec::sd16()) {
            Ok(d) => d,
            Err(_) => return SdetStatus::Parse,
        };
        if fac.product != oracle {
            return SdetStatus::Internal;
        }
        let st = write_string(fac.product.to_string(), out_d);
        if st != SdetStatus::Ok {
            return st;
        }
        let st = write_string(fac.m.to_string(), out_m);
        if st != SdetStatus::Ok {
            return st;
        }
        let st = write_string(fac.a2.to_string(), out_a2);
        if st != SdetStatus::Ok {
            return st;
        }
        write_string(fac.a3.to_string(), out_a3)
    })
}

/// Decide achievability of the decimal integer `n` as an SD16 determinant.
/// `out_achievable` receives 1 (achievable), 0 (not), or -1 (undecided);
/// `out_reason` a human-readable explanation.
#[no_mangle]
pub unsafe extern "C" fn sdet_classify(
    n: *const c_char,
    out_achievable: *mut c_int,
    out_reason: *mut *mut c_char,
) -> SdetStatus {
    guarded(|| {
        if out_achievable.is_null() || out_reason.is_null() {
            return SdetStatus::NullArgument;
        }
        let text = match read_str(n) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let value = match BigInt::from_str(text.trim()) {
            Ok(v) => v,
            Err(_) => return SdetStatus::Parse,
        };
        let verdict = classify(&value);
        *out_achievable = match verdict.achievable {
            Some(true) => 1,
            Some(false) => 0,
            None => -1,
        };
        write_string(verdict.reason.to_string(), out_reason)
    })
}

/// Construct an SD16 element whose determinant equals the decimal integer
/// `n`. The element is oracle-verified before it is returned. Unachievable
/// targets report `NotAchievable`; undecided ones `Unknown`.
#[no_mangle]
pub unsafe extern "C" fn sdet_witness(
    n: *const c_char,
    out: *mut *mut SdetElement,
) -> SdetStatus {
    guarded(|| {
        if out.is_null() {
            return SdetStatus::NullArgument;
        }
        let text = match read_str(n) {
            Ok(s) => s,
            Err(st) => return st,
        };
        let value = match BigInt::from_str(text.trim()) {
            Ok(v) => v,
            Err(_) => return SdetStatus::Parse,
        };
        match witness(&value) {
            Ok(w) => {
                *out = Box::into_raw(Box::new(SdetElement(w.element)));
                SdetStatus::Ok
            }
            Err(sdet::Error::NotAchievable(v)) => {
                if v.achievable.is_none() {
                    SdetStatus::Unknown
                } else {
                    SdetStatus::NotAchievable
                }
            }
            Err(sdet::Error::VerificationFailed { .. }) => SdetStatus::Internal,
            Err(_) => SdetStatus::Parse,
        }
    })
}
