//! C interface to knotlab.
//!
//! Diagrams are opaque `KlDiagram` handles owned by the caller and released
//! with `kl_diagram_free`. Every fallible call returns a `KlStatus`; on
//! failure `kl_last_error` describes the problem for the calling thread.
//! Strings returned through `char **` are freed with `kl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use knotlab::branched::{build_bf, persistence_certificate, Verdict};
use knotlab::constructions::{
    paper_family, rational_knot, torus_2n, twist_knot, whitehead_double, ConstructionError, DoubleSpec,
};
use knotlab::diagram::DiagramError;
use knotlab::invariants::{invariant_tuple, InvariantError};
use knotlab::knotdb::{identify, KnotTable};
use knotlab::PlanarDiagram;

/// Opaque diagram handle.
pub struct KlDiagram(PlanarDiagram);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidDiagram = 4,
    NotAKnot = 5,
    Construction = 6,
    Inconsistent = 7,
    NotFound = 8,
    Ambiguous = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlVerdict {
    PersistentlyLaminar = 0,
    EssentialOnlyUnknown = 1,
    Fails = 2,
}

/// Numeric invariants; the Alexander polynomial is read with
/// `kl_alexander`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct KlInvariants {
    pub determinant: u64,
    pub signature: i64,
    pub genus_lower_bound: u32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

struct Fail(KlStatus, String);

impl From<DiagramError> for Fail {
    fn from(e: DiagramError) -> Self {
        let status = match e {
            DiagramError::Parse(_) | DiagramError::Arity(_) => KlStatus::Parse,
            DiagramError::NotAKnot(_) => KlStatus::NotAKnot,
            _ => KlStatus::InvalidDiagram,
        };
        Fail(status, e.to_string())
    }
}

impl From<InvariantError> for Fail {
    fn from(e: InvariantError) -> Self {
        match e {
            InvariantError::Diagram(d) => d.into(),
            other => Fail(KlStatus::Inconsistent, other.to_string()),
        }
    }
}

impl From<ConstructionError> for Fail {
    fn from(e: ConstructionError) -> Self {
        match e {
            ConstructionError::Diagram(d) => d.into(),
            other => Fail(KlStatus::Construction, other.to_string()),
        }
    }
}

/// Runs `f`, turning errors and panics into a status and a stored message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> KlStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KlStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            KlStatus::Panic
        }
    }
}

fn null(what: &str) -> Fail {
    Fail(KlStatus::NullPointer, format!("{what} is null"))
}

unsafe fn diagram<'a>(d: *const KlDiagram) -> Result<&'a PlanarDiagram, Fail> {
    d.as_ref().map(|d| &d.0).ok_or_else(|| null("diagram"))
}

unsafe fn emit(out: *mut *mut KlDiagram, pd: PlanarDiagram) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = Box::into_raw(Box::new(KlDiagram(pd)));
    Ok(())
}

unsafe fn emit_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = CString::new(s).map_err(|_| Fail(KlStatus::Inconsistent, "string has NUL".into()))?.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread, or NULL. Valid until
/// the next knotlab call on the same thread.
#[no_mangle]
pub extern "C" fn kl_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn kl_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must come from a knotlab function returning `char *` and not be
/// freed twice.
#[no_mangle]
pub unsafe extern "C" fn kl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses PD text into a new diagram.
///
/// # Safety
/// `pd` must be a NUL-terminated string and `out` a writable pointer.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_parse(pd: *const c_char, out: *mut *mut KlDiagram) -> KlStatus {
    guard(|| {
        if pd.is_null() {
            return Err(null("pd"));
        }
        let text = CStr::from_ptr(pd)
            .to_str()
            .map_err(|_| Fail(KlStatus::InvalidUtf8, "pd is not UTF-8".into()))?;
        emit(out, PlanarDiagram::parse_pd(text)?)
    })
}

/// # Safety
/// `d` must be NULL or a handle from this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_free(d: *mut KlDiagram) {
    if !d.is_null() {
        drop(Box::from_raw(d));
    }
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_crossing_count(d: *const KlDiagram, out: *mut usize) -> KlStatus {
    guard(|| {
        let pd = diagram(d)?;
        let out = out.as_mut().ok_or_else(|| null("output pointer"))?;
        *out = pd.crossing_count();
        Ok(())
    })
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_writhe(d: *const KlDiagram, out: *mut i32) -> KlStatus {
    guard(|| {
        let w = diagram(d)?.writhe()?;
        *out.as_mut().ok_or_else(|| null("output pointer"))? = w;
        Ok(())
    })
}

/// Whether the diagram passes every validation rule; the failed rules are
/// reported through `kl_last_error`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_validate(d: *const KlDiagram, out: *mut bool) -> KlStatus {
    guard(|| {
        let report = diagram(d)?.validate();
        *out.as_mut().ok_or_else(|| null("output pointer"))? = report.ok;
        if !report.ok {
            set_error(report.summary());
        }
        Ok(())
    })
}

/// Canonical PD text of the diagram.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_to_pd(d: *const KlDiagram, out: *mut *mut c_char) -> KlStatus {
    guard(|| emit_string(out, diagram(d)?.to_pd_string()))
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_diagram_mirror(d: *const KlDiagram, out: *mut *mut KlDiagram) -> KlStatus {
    guard(|| emit(out, diagram(d)?.mirror()?))
}

/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_invariants(d: *const KlDiagram, out: *mut KlInvariants) -> KlStatus {
    guard(|| {
        let t = invariant_tuple(diagram(d)?)?;
        *out.as_mut().ok_or_else(|| null("output pointer"))? = KlInvariants {
            determinant: t.determinant,
            signature: t.signature,
            genus_lower_bound: t.genus_lower_bound,
        };
        Ok(())
    })
}

/// Alexander polynomial as space-separated coefficients, constant term
/// first, e.g. `"1 -1 1"`.
///
/// # Safety
/// `d` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_alexander(d: *const KlDiagram, out: *mut *mut c_char) -> KlStatus {
    guard(|| emit_string(out, invariant_tuple(diagram(d)?)?.alexander.to_string()))
}

/// T(2, n) for odd `n`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_construct_torus(n: i64, out: *mut *mut KlDiagram) -> KlStatus {
    guard(|| emit(out, torus_2n(n)?))
}

/// Twist knot with `c` crossings.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_construct_twist(c: i64, out: *mut *mut KlDiagram) -> KlStatus {
    guard(|| emit(out, twist_knot(c)?))
}

/// 2-bridge knot from `len` continued-fraction entries.
///
/// # Safety
/// `cf` must point to `len` readable integers and `out` be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_construct_rational(cf: *const i64, len: usize, out: *mut *mut KlDiagram) -> KlStatus {
    guard(|| {
        if cf.is_null() && len > 0 {
            return Err(null("cf"));
        }
        let entries = if len == 0 { &[][..] } else { std::slice::from_raw_parts(cf, len) };
        emit(out, rational_knot(entries)?)
    })
}

/// Twisted double: `twists` half-twists beyond the blackboard framing and
/// a clasp of sign `clasp` (+1 or -1).
///
/// # Safety
/// `companion` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_construct_double(
    companion: *const KlDiagram,
    twists: i64,
    clasp: i8,
    out: *mut *mut KlDiagram,
) -> KlStatus {
    guard(|| {
        let spec = DoubleSpec {
            companion: diagram(companion)?.clone(),
            twists,
            clasp,
        };
        emit(out, whitehead_double(&spec)?)
    })
}

/// The `n`-th member of the doubled twist-knot family.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_paper_family(n: u32, out: *mut *mut KlDiagram) -> KlStatus {
    guard(|| emit(out, paper_family(n)?.diagram))
}

/// Name of the unique bundled-table knot matching `d`; `mirror` is set when
/// the match is the mirror image. Returns `KL_STATUS_NOT_FOUND` or
/// `KL_STATUS_AMBIGUOUS` otherwise.
///
/// # Safety
/// `d` must be a live handle; `name` and `mirror` writable.
#[no_mangle]
pub unsafe extern "C" fn kl_identify(d: *const KlDiagram, name: *mut *mut c_char, mirror: *mut bool) -> KlStatus {
    guard(|| {
        let r = identify(diagram(d)?, &KnotTable::bundled())?;
        if r.ambiguous {
            let names: Vec<&str> = r.matches.iter().map(|m| m.name.as_str()).collect();
            return Err(Fail(KlStatus::Ambiguous, format!("matches {}", names.join(", "))));
        }
        let m = r.matches.first().ok_or_else(|| Fail(KlStatus::NotFound, "no table entry matches".into()))?;
        let mirror = mirror.as_mut().ok_or_else(|| null("mirror"))?;
        *mirror = m.chirality == knotlab::knotdb::Chirality::Mirror;
        emit_string(name, m.name.clone())
    })
}

/// Verdict of the branched-surface certificate for a genus `genus`
/// Seifert surface.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kl_bf_verdict(genus: u32, certified: bool, out: *mut KlVerdict) -> KlStatus {
    guard(|| {
        let r = persistence_certificate(&build_bf(genus), certified)
            .map_err(|e| Fail(KlStatus::Inconsistent, e.to_string()))?;
        *out.as_mut().ok_or_else(|| null("output pointer"))? = match r.verdict {
            Verdict::PersistentlyLaminar => KlVerdict::PersistentlyLaminar,
            Verdict::EssentialOnlyUnknown => KlVerdict::EssentialOnlyUnknown,
            Verdict::Fails => KlVerdict::Fails,
        };
        Ok(())
    })
}
