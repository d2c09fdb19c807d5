//! C ABI over `ntdice`.
//!
//! Objects cross the boundary as opaque handles created by `ntd_*_parse` or a
//! builder and released with the matching `ntd_*_free`. Every fallible call
//! returns an [`NtdStatus`]; on failure, [`ntd_last_error_message`] describes
//! the most recent error on the calling thread. Strings returned through out
//! parameters are owned by the caller and released with [`ntd_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

use ntdice::format::{parse_dice_set, parse_digraph, write_dice_set};
use ntdice::{
    build_cycle_set, build_strong_tournament_dice, build_tournament_dice, is_balanced,
    is_non_transitive, is_strong, is_strongly_connectable, realizes_by_name, victories, DiceSet,
    Digraph, Error, Tournament,
};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NtdStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Precondition = 3,
    CostGuard = 4,
    UnsupportedBase = 5,
    ConstructionInvariant = 6,
    Parse = 7,
    Internal = 8,
    InvalidUtf8 = 9,
    OutOfRange = 10,
}

/// Opaque dice set handle.
pub struct NtdDiceSet {
    inner: DiceSet,
}

/// Opaque digraph handle.
pub struct NtdDigraph {
    inner: Digraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn fail(status: NtdStatus, message: impl Into<String>) -> NtdStatus {
    let text = CString::new(message.into().replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(text));
    status
}

fn from_error(e: Error) -> NtdStatus {
    let status = match e {
        Error::InvalidInput(_) => NtdStatus::InvalidInput,
        Error::Precondition(_) => NtdStatus::Precondition,
        Error::CostGuard(_) => NtdStatus::CostGuard,
        Error::UnsupportedBase(_) => NtdStatus::UnsupportedBase,
        Error::ConstructionInvariant(_) => NtdStatus::ConstructionInvariant,
        Error::Parse { .. } => NtdStatus::Parse,
        Error::Internal(_) => NtdStatus::Internal,
    };
    fail(status, e.to_string())
}

unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, NtdStatus> {
    if text.is_null() {
        return Err(fail(NtdStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(NtdStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn handle<'a, T>(p: *const T) -> Result<&'a T, NtdStatus> {
    p.as_ref()
        .ok_or_else(|| fail(NtdStatus::NullPointer, "null handle"))
}

unsafe fn put<T>(out: *mut T, value: T) -> NtdStatus {
    if out.is_null() {
        return fail(NtdStatus::NullPointer, "null output pointer");
    }
    out.write(value);
    NtdStatus::Ok
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// Message for the last failed call on this thread, or NULL if none.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn ntd_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ntd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a `# dice-set v1` document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_parse(
    text: *const c_char,
    out: *mut *mut NtdDiceSet,
) -> NtdStatus {
    let text = try_status!(text_arg(text));
    let set = try_status!(parse_dice_set(text).map_err(from_error));
    put(out, Box::into_raw(Box::new(NtdDiceSet { inner: set })))
}

/// # Safety
/// `set` must be NULL or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_free(set: *mut NtdDiceSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Serializes a dice set in the `dice-set v1` format.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable. Free the result
/// with [`ntd_string_free`].
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_format(
    set: *const NtdDiceSet,
    out: *mut *mut c_char,
) -> NtdStatus {
    let set = try_status!(handle(set));
    let text = CString::new(write_dice_set(&set.inner)).expect("format has no nul bytes");
    put(out, text.into_raw())
}

/// Number of dice, or 0 for a NULL handle.
///
/// # Safety
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_len(set: *const NtdDiceSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.len())
}

/// Sides per die, or 0 for a NULL handle.
///
/// # Safety
/// `set` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_sides(set: *const NtdDiceSet) -> usize {
    set.as_ref().map_or(0, |s| s.inner.sides())
}

/// Copies the faces of die `die`, largest first, into `buf`.
///
/// # Safety
/// `set` must be a live handle; `buf` must hold `capacity` values.
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_faces(
    set: *const NtdDiceSet,
    die: usize,
    buf: *mut u64,
    capacity: usize,
) -> NtdStatus {
    let set = try_status!(handle(set));
    if die >= set.inner.len() {
        return fail(NtdStatus::OutOfRange, format!("die index {die} out of range"));
    }
    let faces = set.inner.die(die).faces();
    if capacity < faces.len() {
        return fail(
            NtdStatus::OutOfRange,
            format!("buffer holds {capacity} faces, need {}", faces.len()),
        );
    }
    if buf.is_null() {
        return fail(NtdStatus::NullPointer, "null face buffer");
    }
    ptr::copy_nonoverlapping(faces.as_ptr(), buf, faces.len());
    NtdStatus::Ok
}

/// Name of die `die`. Free the result with [`ntd_string_free`].
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_dice_set_die_name(
    set: *const NtdDiceSet,
    die: usize,
    out: *mut *mut c_char,
) -> NtdStatus {
    let set = try_status!(handle(set));
    if die >= set.inner.len() {
        return fail(NtdStatus::OutOfRange, format!("die index {die} out of range"));
    }
    let name = CString::new(set.inner.die(die).name()).expect("names have no nul bytes");
    put(out, name.into_raw())
}

/// Builds a balanced non-transitive set of `dice` dice with `sides` sides.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_build_cycle_set(
    dice: usize,
    sides: usize,
    out: *mut *mut NtdDiceSet,
) -> NtdStatus {
    let set = try_status!(build_cycle_set(dice, sides).map_err(from_error));
    put(out, Box::into_raw(Box::new(NtdDiceSet { inner: set })))
}

/// Number of face pairs on which die `i` beats die `j`.
///
/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_victories(
    set: *const NtdDiceSet,
    i: usize,
    j: usize,
    out: *mut u64,
) -> NtdStatus {
    let set = try_status!(handle(set));
    let n = set.inner.len();
    if i >= n || j >= n {
        return fail(NtdStatus::OutOfRange, format!("die index out of range 0..{n}"));
    }
    if i == j {
        return put(out, 0);
    }
    let v = try_status!(victories(set.inner.die(i), set.inner.die(j)).map_err(from_error));
    put(out, v)
}

/// # Safety
/// `set` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_is_non_transitive(set: *const NtdDiceSet, out: *mut bool) -> NtdStatus {
    let set = try_status!(handle(set));
    let v = try_status!(is_non_transitive(&set.inner).map_err(from_error));
    put(out, v)
}

/// Writes whether the cycle probabilities agree and, if so, their common
/// value as `numerator / denominator`.
///
/// # Safety
/// `set` must be a live handle; all out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_is_balanced(
    set: *const NtdDiceSet,
    balanced: *mut bool,
    numerator: *mut u64,
    denominator: *mut u64,
) -> NtdStatus {
    let set = try_status!(handle(set));
    if balanced.is_null() || numerator.is_null() || denominator.is_null() {
        return fail(NtdStatus::NullPointer, "null output pointer");
    }
    let value = try_status!(is_balanced(&set.inner).map_err(from_error));
    balanced.write(value.is_some());
    numerator.write(value.map_or(0, |p| p.numerator()));
    denominator.write(value.map_or(0, |p| p.denominator()));
    NtdStatus::Ok
}

/// Parses a `# digraph v1` document.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_digraph_parse(text: *const c_char, out: *mut *mut NtdDigraph) -> NtdStatus {
    let text = try_status!(text_arg(text));
    let g = try_status!(parse_digraph(text).map_err(from_error));
    put(out, Box::into_raw(Box::new(NtdDigraph { inner: g })))
}

/// # Safety
/// `g` must be NULL or a handle from this library that was not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ntd_digraph_free(g: *mut NtdDigraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_is_strongly_connectable(g: *const NtdDigraph, out: *mut bool) -> NtdStatus {
    let g = try_status!(handle(g));
    put(out, is_strongly_connectable(&g.inner))
}

/// Builds dice realizing a tournament; die names equal vertex names.
///
/// `chord_order` may be NULL; otherwise it is a comma-separated list of
/// `winner>loser` chords and the tournament must be strong.
///
/// # Safety
/// `g` must be a live handle, `chord_order` NULL or NUL-terminated, and
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_build_tournament_dice(
    g: *const NtdDigraph,
    chord_order: *const c_char,
    out: *mut *mut NtdDiceSet,
) -> NtdStatus {
    let g = try_status!(handle(g));
    let t = try_status!(Tournament::new(g.inner.clone()).map_err(from_error));
    let built = if chord_order.is_null() {
        try_status!(build_tournament_dice(&t).map_err(from_error))
    } else {
        let text = try_status!(text_arg(chord_order));
        if !is_strong(t.as_digraph()) {
            return fail(NtdStatus::Precondition, "chord order needs a strong tournament");
        }
        let mut order = Vec::new();
        for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item.split_once('>') {
                Some((w, l)) => order.push((w.trim().to_string(), l.trim().to_string())),
                None => return fail(NtdStatus::InvalidInput, format!("bad chord {item:?}")),
            }
        }
        try_status!(build_strong_tournament_dice(&t, Some(&order)).map_err(from_error))
    };
    if !built.report.realized() {
        return fail(NtdStatus::ConstructionInvariant, "built dice do not realize the tournament");
    }
    put(out, Box::into_raw(Box::new(NtdDiceSet { inner: built.dice })))
}

/// Whether every strictly winning pair of dice is an arc between the
/// vertices of the same names.
///
/// # Safety
/// `set` and `g` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ntd_realizes(
    set: *const NtdDiceSet,
    g: *const NtdDigraph,
    out: *mut bool,
) -> NtdStatus {
    let set = try_status!(handle(set));
    let g = try_status!(handle(g));
    let report = try_status!(realizes_by_name(&set.inner, &g.inner).map_err(from_error));
    put(out, report.realized())
}
