//! C ABI over the eaqecc library. Codes are opaque heap handles, every
//! fallible call returns a status code, and the last error message is kept
//! per thread for retrieval with `eaqecc_last_error_message`.

use std::cell::RefCell;
use std::ffi::CStr;
use std::os::raw::c_char;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use eaqecc::code::AdditiveCode;
use eaqecc::field::Gf4Vector;
use eaqecc::params;
use eaqecc::perf::{self, Block};
use eaqecc::Error;

/// Status returned by every fallible function.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EaqeccStatus {
    Ok = 0,
    NullArgument = 1,
    ParseError = 2,
    InvalidArgument = 3,
    EnumerationCap = 4,
    NotSelfOrthogonal = 5,
    InternalError = 6,
}

/// Opaque handle to an additive GF(4) code.
pub struct EaqeccCode(AdditiveCode);

/// EA parameters [[n, k, d; c]] with l auxiliary qubits. `d` is -1 when the
/// distance enumeration was skipped.
#[repr(C)]
#[derive(Clone, Copy, Debug)]
pub struct EaqeccEaParams {
    pub n: usize,
    pub k: usize,
    pub c: usize,
    pub l: usize,
    pub d: i64,
    pub degenerate: bool,
}

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: EaqeccStatus, message: impl Into<String>) -> EaqeccStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = message.into());
    status
}

fn fail_with(err: &Error) -> EaqeccStatus {
    let status = match err {
        Error::Parse(_) | Error::LengthMismatch(..) => EaqeccStatus::ParseError,
        Error::EnumerationCap { .. } => EaqeccStatus::EnumerationCap,
        Error::NotSelfOrthogonal | Error::NotHermitianSelfOrthogonal => {
            EaqeccStatus::NotSelfOrthogonal
        }
        Error::InvalidArgument(_) => EaqeccStatus::InvalidArgument,
        _ => EaqeccStatus::InternalError,
    };
    fail(status, err.to_string())
}

fn guarded(f: impl FnOnce() -> EaqeccStatus) -> EaqeccStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(EaqeccStatus::InternalError, "internal panic"),
    }
}

/// Copies the last error message on this thread into `buf` (NUL-terminated,
/// truncated to `cap` bytes). Returns the full message length in bytes.
///
/// # Safety
/// `buf` must be valid for `cap` bytes, or null (then only the length is
/// returned).
#[no_mangle]
pub unsafe extern "C" fn eaqecc_last_error_message(buf: *mut c_char, cap: usize) -> usize {
    LAST_ERROR.with(|e| {
        let msg = e.borrow();
        if !buf.is_null() && cap > 0 {
            let n = msg.len().min(cap - 1);
            ptr::copy_nonoverlapping(msg.as_ptr(), buf.cast::<u8>(), n);
            *buf.add(n) = 0;
        }
        msg.len()
    })
}

/// Builds a code from `count` generator strings over the alphabet 0, 1, w, W
/// (one string per generator, all the same length).
///
/// # Safety
/// `generators` must point to `count` valid NUL-terminated strings and `out`
/// must be a valid pointer. On success `*out` owns the handle; release it
/// with `eaqecc_code_free`.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_parse(
    generators: *const *const c_char,
    count: usize,
    out: *mut *mut EaqeccCode,
) -> EaqeccStatus {
    if out.is_null() || (generators.is_null() && count > 0) {
        return fail(EaqeccStatus::NullArgument, "null argument");
    }
    let mut rows = Vec::with_capacity(count);
    for i in 0..count {
        let p = *generators.add(i);
        if p.is_null() {
            return fail(EaqeccStatus::NullArgument, format!("generator {i} is null"));
        }
        let Ok(s) = CStr::from_ptr(p).to_str() else {
            return fail(EaqeccStatus::ParseError, format!("generator {i} is not UTF-8"));
        };
        rows.push(s.to_string());
    }
    guarded(|| {
        let parsed: Result<Vec<Gf4Vector>, Error> =
            rows.iter().map(|s| Gf4Vector::parse(s)).collect();
        let parsed = match parsed {
            Ok(v) => v,
            Err(e) => return fail_with(&e),
        };
        let n = parsed.first().map_or(0, Gf4Vector::len);
        if n == 0 {
            return fail(EaqeccStatus::InvalidArgument, "need at least one nonempty generator");
        }
        match AdditiveCode::from_gf4_generators(n, &parsed) {
            Ok(code) => {
                *out = Box::into_raw(Box::new(EaqeccCode(code)));
                EaqeccStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}

/// Releases a handle returned by this library. Null is a no-op.
///
/// # Safety
/// `code` must be a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_free(code: *mut EaqeccCode) {
    if !code.is_null() {
        drop(Box::from_raw(code));
    }
}

/// Code length n (symbols per codeword). Zero for a null handle.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_length(code: *const EaqeccCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.len())
}

/// log2 of the code size (number of independent generators).
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_size_log2(code: *const EaqeccCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.size_log2())
}

/// Entanglement degree c: the number of hyperbolic pairs in a symplectic
/// Gram-Schmidt decomposition.
///
/// # Safety
/// `code` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_entanglement_degree(code: *const EaqeccCode) -> usize {
    code.as_ref().map_or(0, |c| c.0.entanglement_degree())
}

/// Trace dual as a fresh handle.
///
/// # Safety
/// `code` must be a live handle; `out` must be valid. `*out` must be freed
/// with `eaqecc_code_free`.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_trace_dual(
    code: *const EaqeccCode,
    out: *mut *mut EaqeccCode,
) -> EaqeccStatus {
    let (Some(code), false) = (code.as_ref(), out.is_null()) else {
        return fail(EaqeccStatus::NullArgument, "null argument");
    };
    guarded(|| {
        *out = Box::into_raw(Box::new(EaqeccCode(code.0.trace_dual())));
        EaqeccStatus::Ok
    })
}

/// True when the two codes are equal as sets.
///
/// # Safety
/// Both arguments must be live handles or null.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_equals(
    a: *const EaqeccCode,
    b: *const EaqeccCode,
) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Exact minimum symbol weight by enumeration, refusing above `cap`
/// codewords. `out_enumerated` (optional) receives the number of nonzero
/// codewords visited.
///
/// # Safety
/// `code` must be a live handle; `out_weight` must be valid;
/// `out_enumerated` must be valid or null.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_code_min_weight(
    code: *const EaqeccCode,
    cap: u64,
    out_weight: *mut usize,
    out_enumerated: *mut u64,
) -> EaqeccStatus {
    let (Some(code), false) = (code.as_ref(), out_weight.is_null()) else {
        return fail(EaqeccStatus::NullArgument, "null argument");
    };
    guarded(|| match code.0.min_weight(None, cap) {
        Ok(report) => {
            *out_weight = report.min_weight;
            if !out_enumerated.is_null() {
                *out_enumerated = report.enumerated;
            }
            EaqeccStatus::Ok
        }
        Err(e) => fail_with(&e),
    })
}

/// Derives [[n, k, d; c]] treating the code as an EA-stabilizer. With
/// `compute_distance` false the enumeration is skipped and `d` is -1.
///
/// # Safety
/// `code` must be a live handle; `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_ea_params(
    code: *const EaqeccCode,
    compute_distance: bool,
    cap: u64,
    out: *mut EaqeccEaParams,
) -> EaqeccStatus {
    let (Some(code), false) = (code.as_ref(), out.is_null()) else {
        return fail(EaqeccStatus::NullArgument, "null argument");
    };
    guarded(|| match params::eaqecc_params(&code.0, compute_distance, cap) {
        Ok(p) => {
            *out = EaqeccEaParams {
                n: p.n,
                k: p.k,
                c: p.c,
                l: p.l,
                d: p.d_ea.map_or(-1, |d| d as i64),
                degenerate: p.degenerate,
            };
            EaqeccStatus::Ok
        }
        Err(e) => fail_with(&e),
    })
}

/// Guaranteed protector length: the smallest m with a distance-3 protector
/// for c ebits, written as `*out_m` with its Hamming parameter `*out_s`.
///
/// # Safety
/// `out_s` and `out_m` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_protector_bound(
    c: usize,
    out_s: *mut usize,
    out_m: *mut usize,
) -> EaqeccStatus {
    if out_s.is_null() || out_m.is_null() {
        return fail(EaqeccStatus::NullArgument, "null argument");
    }
    guarded(|| match params::protector_bound(c) {
        Ok(b) => {
            *out_s = b.s;
            *out_m = b.m;
            EaqeccStatus::Ok
        }
        Err(e) => fail_with(&e),
    })
}

fn check_block(len: usize, dist: usize) -> Result<Block, EaqeccStatus> {
    if len == 0 || dist == 0 {
        return Err(fail(
            EaqeccStatus::InvalidArgument,
            "block length and distance must be positive",
        ));
    }
    Ok(Block::new(len, dist))
}

fn check_prob(p: f64) -> Result<(), EaqeccStatus> {
    if !(0.0..=1.0).contains(&p) {
        return Err(fail(
            EaqeccStatus::InvalidArgument,
            format!("probability out of range: {p}"),
        ));
    }
    Ok(())
}

/// P(C): probability that a length-n distance-d block corrects a
/// depolarizing channel with symbol error rate p.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_p_correct(
    block_len: usize,
    dist: usize,
    p: f64,
    out: *mut f64,
) -> EaqeccStatus {
    if out.is_null() {
        return fail(EaqeccStatus::NullArgument, "null argument");
    }
    guarded(|| {
        let block = match check_block(block_len, dist) {
            Ok(b) => b,
            Err(s) => return s,
        };
        if let Err(s) = check_prob(p) {
            return s;
        }
        *out = perf::p_correct(block.len, block.dist, p);
        EaqeccStatus::Ok
    })
}

/// P(D): success probability of the combination scheme, the EA block at
/// transmit rate `p_a` times the protector block at storage rate `p_b`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_p_combination(
    ea_len: usize,
    ea_dist: usize,
    b_len: usize,
    b_dist: usize,
    p_a: f64,
    p_b: f64,
    out: *mut f64,
) -> EaqeccStatus {
    if out.is_null() {
        return fail(EaqeccStatus::NullArgument, "null argument");
    }
    guarded(|| {
        let (ea, b) = match (check_block(ea_len, ea_dist), check_block(b_len, b_dist)) {
            (Ok(ea), Ok(b)) => (ea, b),
            (Err(s), _) | (_, Err(s)) => return s,
        };
        if let Err(s) = check_prob(p_a).and_then(|()| check_prob(p_b)) {
            return s;
        }
        *out = perf::p_combination(ea, b, p_a, p_b);
        EaqeccStatus::Ok
    })
}

/// Largest storage rate p_b in [0, min(p_a, 1/2)] at which the combination
/// still beats the reference block, by bisection to `tol`. `*out_found` is
/// false (and `*out_pb` untouched) when the combination loses even at
/// p_b = 0.
///
/// # Safety
/// `out_pb` and `out_found` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn eaqecc_max_pb(
    ea_len: usize,
    ea_dist: usize,
    b_len: usize,
    b_dist: usize,
    ref_len: usize,
    ref_dist: usize,
    p_a: f64,
    tol: f64,
    out_pb: *mut f64,
    out_found: *mut bool,
) -> EaqeccStatus {
    if out_pb.is_null() || out_found.is_null() {
        return fail(EaqeccStatus::NullArgument, "null argument");
    }
    guarded(|| {
        let blocks = (
            check_block(ea_len, ea_dist),
            check_block(b_len, b_dist),
            check_block(ref_len, ref_dist),
        );
        let (Ok(ea), Ok(b), Ok(reference)) = blocks else {
            return fail(
                EaqeccStatus::InvalidArgument,
                "block length and distance must be positive",
            );
        };
        if let Err(s) = check_prob(p_a) {
            return s;
        }
        match perf::max_pb(ea, b, reference, p_a, tol) {
            Ok(Some(pb)) => {
                *out_pb = pb;
                *out_found = true;
                EaqeccStatus::Ok
            }
            Ok(None) => {
                *out_found = false;
                EaqeccStatus::Ok
            }
            Err(e) => fail_with(&e),
        }
    })
}
