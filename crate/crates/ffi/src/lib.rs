//! C interface to irrtop: opaque space handles, status codes and JSON
//! strings.
//!
//! Every pointer argument must be null or valid for the access made through
//! it; strings are NUL-terminated UTF-8. Strings returned through `char **`
//! are owned by the caller and released with `irrtop_string_free`.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use irrtop::catalog::{self, CatalogSpace};
use irrtop::convergence::{self as conv, NetJson};
use irrtop::si::{si_iterate, Stage};
use irrtop::theorem_lab as lab;
use irrtop::{check_properties, Error, FiniteSpace};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrrtopStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidJson = 3,
    UnknownSpace = 4,
    UnknownPoint = 5,
    InvalidSpace = 6,
    NotOpen = 7,
    InvalidNet = 8,
    UndecidableTail = 9,
    FuelExhausted = 10,
    OutOfRange = 11,
    BadQuery = 12,
    OracleMismatch = 13,
    WrongKind = 14,
    Internal = 15,
}

/// A finite space or a catalog space.
pub struct IrrtopSpace {
    inner: Inner,
}

enum Inner {
    Finite(FiniteSpace),
    Catalog(CatalogSpace),
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(IrrtopStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        use IrrtopStatus as S;
        let status = match &e {
            Error::Json(_) => S::InvalidJson,
            Error::UnknownSpace(_) => S::UnknownSpace,
            Error::UnknownPoint(_) => S::UnknownPoint,
            Error::NotT0(..)
            | Error::CarrierTooLarge(_)
            | Error::DuplicateLabel(_)
            | Error::InvalidPoset(_)
            | Error::EmptySet
            | Error::CarrierMismatch(..) => S::InvalidSpace,
            Error::NotOpen(_) | Error::NotClosed(_) => S::NotOpen,
            Error::NotCofinal(_) | Error::NotDirected | Error::InvalidNet(_) => S::InvalidNet,
            Error::UndecidableTail(_) => S::UndecidableTail,
            Error::FuelExhausted { .. } => S::FuelExhausted,
            Error::BudgetExceeded(_) | Error::TooLarge(_) => S::OutOfRange,
            Error::BadQuery(_) => S::BadQuery,
            Error::OracleMismatch(_) => S::OracleMismatch,
            Error::Io(_) => S::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(IrrtopStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, recording the message of any failure or panic.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IrrtopStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => IrrtopStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            IrrtopStatus::Internal
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(IrrtopStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn space<'a>(p: *const IrrtopSpace) -> Result<&'a IrrtopSpace, Failure> {
    p.as_ref().ok_or_else(|| null("space"))
}

unsafe fn put<T>(out: *mut T, v: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(v);
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    let c = CString::new(s).map_err(|e| Failure(IrrtopStatus::Internal, e.to_string()))?;
    put(out, c.into_raw(), "out")
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<String, Failure> {
    serde_json::to_string(v).map_err(|e| Failure::from(Error::Json(e)))
}

unsafe fn make_space(out: *mut *mut IrrtopSpace, inner: Inner) -> Result<(), Failure> {
    put(out, Box::into_raw(Box::new(IrrtopSpace { inner })), "out")
}

/// Builds a finite space from `{"points", "opens"}` or `{"points", "le"}`.
#[no_mangle]
pub unsafe extern "C" fn irrtop_space_from_json(json: *const c_char, out: *mut *mut IrrtopSpace) -> IrrtopStatus {
    guard(|| {
        let s = FiniteSpace::from_json_str(text(json, "json")?)?;
        make_space(out, Inner::Finite(s))
    })
}

/// Opens a catalog space: `cofinite-nat`, `omega-plus-one`, `poset-t` or
/// `rational-scott`.
#[no_mangle]
pub unsafe extern "C" fn irrtop_space_catalog(name: *const c_char, out: *mut *mut IrrtopSpace) -> IrrtopStatus {
    guard(|| {
        let c = catalog::catalog_get(text(name, "name")?)?;
        make_space(out, Inner::Catalog(c))
    })
}

#[no_mangle]
pub unsafe extern "C" fn irrtop_space_free(space: *mut IrrtopSpace) {
    if !space.is_null() {
        drop(Box::from_raw(space));
    }
}

/// Number of points of a finite space; `WrongKind` for catalog spaces.
#[no_mangle]
pub unsafe extern "C" fn irrtop_space_point_count(space: *const IrrtopSpace, out: *mut usize) -> IrrtopStatus {
    guard(|| match &self::space(space)?.inner {
        Inner::Finite(s) => put(out, s.len(), "out"),
        Inner::Catalog(c) => Err(Failure(IrrtopStatus::WrongKind, format!("{} is infinite", c.name()))),
    })
}

#[no_mangle]
pub unsafe extern "C" fn irrtop_way_below(
    space: *const IrrtopSpace,
    x: *const c_char,
    y: *const c_char,
    out: *mut bool,
) -> IrrtopStatus {
    guard(|| {
        let (x, y) = (text(x, "x")?, text(y, "y")?);
        let v = match &self::space(space)?.inner {
            Inner::Finite(s) => irrtop::irr::way_below_irr(s, s.index_of(x)?, s.index_of(y)?),
            Inner::Catalog(c) => catalog::catalog_way_below(c.name(), &c.parse_point(x)?, &c.parse_point(y)?),
        };
        put(out, v, "out")
    })
}

/// The property report as JSON.
#[no_mangle]
pub unsafe extern "C" fn irrtop_properties_json(space: *const IrrtopSpace, out: *mut *mut c_char) -> IrrtopStatus {
    guard(|| {
        let r = match &self::space(space)?.inner {
            Inner::Finite(s) => check_properties(s),
            Inner::Catalog(c) => catalog::catalog_properties(c.name()),
        };
        put_string(out, to_json(&r)?)
    })
}

/// The derived-space trace as JSON.
#[no_mangle]
pub unsafe extern "C" fn irrtop_derive_si_json(
    space: *const IrrtopSpace,
    fuel: usize,
    out: *mut *mut c_char,
) -> IrrtopStatus {
    guard(|| {
        let stage = match &self::space(space)?.inner {
            Inner::Finite(s) => Stage::Finite(s.clone()),
            Inner::Catalog(c) => Stage::Catalog(c.clone()),
        };
        put_string(out, to_json(&si_iterate(&stage, fuel)?.to_json())?)
    })
}

/// Topological and Irr-convergence of a net given as JSON to the point `to`.
#[no_mangle]
pub unsafe extern "C" fn irrtop_converge(
    space: *const IrrtopSpace,
    net_json: *const c_char,
    to: *const c_char,
    topological: *mut bool,
    irr: *mut bool,
) -> IrrtopStatus {
    guard(|| {
        let doc = NetJson::parse(text(net_json, "net_json")?)?;
        let to = text(to, "to")?;
        let (t, i) = match &self::space(space)?.inner {
            Inner::Finite(s) => {
                let y = s.index_of(to)?;
                let net = doc.to_finite(s)?;
                net.check_carrier(s.len())?;
                let c = conv::tail_class_of(&net);
                (conv::topological_converges(s, c, y), conv::irr_converges(s, c, y))
            }
            Inner::Catalog(c) => {
                let y = c.parse_point(to)?;
                let net = doc.to_catalog(c)?;
                (
                    conv::catalog_topological_converges(c, &net, &y)?,
                    conv::catalog_irr_converges(c, &net, &y)?,
                )
            }
        };
        put(topological, t, "topological")?;
        put(irr, i, "irr")
    })
}

/// The implication suite over spaces with at most `max_points` points, and
/// optionally the catalog, as JSON.
#[no_mangle]
pub unsafe extern "C" fn irrtop_suite_json(
    max_points: usize,
    include_catalog: bool,
    fuel: usize,
    out: *mut *mut c_char,
) -> IrrtopStatus {
    guard(|| {
        let mut r = lab::run_implication_suite(max_points)?;
        if include_catalog {
            let c = lab::catalog_suite(fuel.max(1));
            r.spaces_checked += c.spaces_checked;
            r.implications_checked += c.implications_checked;
            r.violations.extend(c.violations);
            r.passed = r.violations.is_empty();
        }
        put_string(out, to_json(&r)?)
    })
}

/// The first small space satisfying `query` as JSON, or `null`.
#[no_mangle]
pub unsafe extern "C" fn irrtop_counterexample_json(
    query: *const c_char,
    max_points: usize,
    out: *mut *mut c_char,
) -> IrrtopStatus {
    guard(|| {
        let found = lab::find_counterexample(text(query, "query")?, max_points)?;
        put_string(out, to_json(&found)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn irrtop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failure on this thread, or null. Valid until the
/// next failing call on the same thread.
#[no_mangle]
pub extern "C" fn irrtop_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn irrtop_status_name(status: IrrtopStatus) -> *const c_char {
    let s: &'static CStr = match status {
        IrrtopStatus::Ok => c"ok",
        IrrtopStatus::NullPointer => c"null pointer",
        IrrtopStatus::InvalidUtf8 => c"invalid UTF-8",
        IrrtopStatus::InvalidJson => c"invalid JSON",
        IrrtopStatus::UnknownSpace => c"unknown space",
        IrrtopStatus::UnknownPoint => c"unknown point",
        IrrtopStatus::InvalidSpace => c"invalid space",
        IrrtopStatus::NotOpen => c"not open",
        IrrtopStatus::InvalidNet => c"invalid net",
        IrrtopStatus::UndecidableTail => c"undecidable tail",
        IrrtopStatus::FuelExhausted => c"fuel exhausted",
        IrrtopStatus::OutOfRange => c"out of range",
        IrrtopStatus::BadQuery => c"bad query",
        IrrtopStatus::OracleMismatch => c"oracle mismatch",
        IrrtopStatus::WrongKind => c"wrong kind of space",
        IrrtopStatus::Internal => c"internal error",
    };
    s.as_ptr()
}
