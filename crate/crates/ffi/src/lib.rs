//! C ABI over `bpchi-core`.
//!
//! Objects are opaque heap handles released with the matching `_free`
//! function. Every call returns a [`BpchiStatus`]; on failure the message is
//! available from [`bpchi_last_error`] on the same thread. Strings handed out
//! by the library are NUL-terminated and released with [`bpchi_string_free`].
//! Vertex indices are 0-based.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use bpchi_core::algebra::peck_bound;
use bpchi_core::counterexample::{build_g, partition_g};
use bpchi_core::graph::verify_biclique_system;
use bpchi_core::io;
use bpchi_core::oracles::{chromatic_number, independence_number, SearchLimits};
use bpchi_core::{BicliqueSystem, Certificate, Error, Graph};

/// Result of every call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BpchiStatus {
    Ok = 0,
    InvalidInput = 1,
    ResourceLimit = 2,
    Parse = 3,
    WellDefinedness = 4,
    NullPointer = 5,
    Io = 6,
    Panic = 7,
}

/// Undirected simple graph.
pub struct BpchiGraph(Graph);

/// Biclique partition or t-cover of a host graph.
pub struct BpchiSystem(BicliqueSystem);

/// Outcome of a verification, with its JSON witness.
pub struct BpchiCertificate(Certificate);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(BpchiStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::InvalidInput(_) => BpchiStatus::InvalidInput,
            Error::ResourceLimit { .. } => BpchiStatus::ResourceLimit,
            Error::WellDefinedness { .. } => BpchiStatus::WellDefinedness,
            Error::Parse { .. } => BpchiStatus::Parse,
            Error::Io(_) => BpchiStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> BpchiStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            BpchiStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("panic inside bpchi");
            BpchiStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(BpchiStatus::NullPointer, format!("null pointer: {what}"))
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn store<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null("text"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Failure(BpchiStatus::InvalidInput, format!("text is not UTF-8: {e}")))
}

fn owned_string(s: String) -> Result<*mut c_char, Failure> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure(BpchiStatus::InvalidInput, "output contains NUL".into()))
}

/// Message of the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call on this thread.
#[no_mangle]
pub extern "C" fn bpchi_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Release a string returned by this library. Null is ignored.
#[no_mangle]
pub unsafe extern "C" fn bpchi_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Edgeless graph on `order` vertices.
#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_new(order: usize, out: *mut *mut BpchiGraph) -> BpchiStatus {
    guard(|| store(out, Box::into_raw(Box::new(BpchiGraph(Graph::empty(order)))), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_add_edge(g: *mut BpchiGraph, u: usize, v: usize) -> BpchiStatus {
    guard(|| {
        let g = g.as_mut().ok_or_else(|| null("graph"))?;
        Ok(g.0.add_edge(u, v)?)
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_has_edge(g: *const BpchiGraph, u: usize, v: usize, out: *mut bool) -> BpchiStatus {
    guard(|| {
        let g = borrow(g, "graph")?;
        if u >= g.0.order() || v >= g.0.order() {
            return Err(Failure(BpchiStatus::InvalidInput, format!("vertex out of range for order {}", g.0.order())));
        }
        store(out, g.0.has_edge(u, v), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_order(g: *const BpchiGraph, out: *mut usize) -> BpchiStatus {
    guard(|| store(out, borrow(g, "graph")?.0.order(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_edge_count(g: *const BpchiGraph, out: *mut usize) -> BpchiStatus {
    guard(|| store(out, borrow(g, "graph")?.0.edge_count(), "out"))
}

/// Parse DIMACS text (`p edge N M`, `e u v`, 1-based).
#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_from_dimacs(dimacs: *const c_char, out: *mut *mut BpchiGraph) -> BpchiStatus {
    guard(|| {
        let g = io::read_dimacs(text(dimacs)?)?;
        store(out, Box::into_raw(Box::new(BpchiGraph(g))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_to_dimacs(g: *const BpchiGraph, out: *mut *mut c_char) -> BpchiStatus {
    guard(|| {
        let s = owned_string(io::write_dimacs(&borrow(g, "graph")?.0))?;
        store(out, s, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_graph_free(g: *mut BpchiGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// The counterexample graph G(n) on n^7 vertices; fails with
/// `ResourceLimit` when n^7 exceeds `vertex_limit`.
#[no_mangle]
pub unsafe extern "C" fn bpchi_build_g(n: usize, vertex_limit: u64, out: *mut *mut BpchiGraph) -> BpchiStatus {
    guard(|| {
        let g = build_g(n, vertex_limit)?;
        store(out, Box::into_raw(Box::new(BpchiGraph(g))), "out")
    })
}

/// The explicit biclique partition of G(n).
#[no_mangle]
pub unsafe extern "C" fn bpchi_partition_g(n: usize, vertex_limit: u64, out: *mut *mut BpchiSystem) -> BpchiStatus {
    guard(|| {
        let p = partition_g(n, vertex_limit)?;
        store(out, Box::into_raw(Box::new(BpchiSystem(p))), "out")
    })
}

/// Parse the `p bicliques` text format.
#[no_mangle]
pub unsafe extern "C" fn bpchi_system_from_text(s: *const c_char, out: *mut *mut BpchiSystem) -> BpchiStatus {
    guard(|| {
        let sys = io::read_system(text(s)?)?;
        store(out, Box::into_raw(Box::new(BpchiSystem(sys))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_system_to_text(sys: *const BpchiSystem, out: *mut *mut c_char) -> BpchiStatus {
    guard(|| {
        let s = owned_string(io::write_system(&borrow(sys, "system")?.0))?;
        store(out, s, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_system_len(sys: *const BpchiSystem, out: *mut usize) -> BpchiStatus {
    guard(|| store(out, borrow(sys, "system")?.0.len(), "out"))
}

/// Multiplicity bound t of the system (1 for a partition).
#[no_mangle]
pub unsafe extern "C" fn bpchi_system_bound(sys: *const BpchiSystem, out: *mut usize) -> BpchiStatus {
    guard(|| store(out, borrow(sys, "system")?.0.bound(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_system_free(sys: *mut BpchiSystem) {
    if !sys.is_null() {
        drop(Box::from_raw(sys));
    }
}

/// Check that every edge of `g` lies in between 1 and t bicliques of `sys`
/// and no non-edge lies in any. A failed check is still `Ok`; read the
/// verdict from the certificate.
#[no_mangle]
pub unsafe extern "C" fn bpchi_verify(
    g: *const BpchiGraph,
    sys: *const BpchiSystem,
    out: *mut *mut BpchiCertificate,
) -> BpchiStatus {
    guard(|| {
        let cert = verify_biclique_system(&borrow(g, "graph")?.0, &borrow(sys, "system")?.0)?;
        store(out, Box::into_raw(Box::new(BpchiCertificate(cert))), "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_certificate_passed(cert: *const BpchiCertificate, out: *mut bool) -> BpchiStatus {
    guard(|| store(out, borrow(cert, "certificate")?.0.passed(), "out"))
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_certificate_to_json(cert: *const BpchiCertificate, out: *mut *mut c_char) -> BpchiStatus {
    guard(|| {
        let s = owned_string(borrow(cert, "certificate")?.0.to_json())?;
        store(out, s, "out")
    })
}

#[no_mangle]
pub unsafe extern "C" fn bpchi_certificate_free(cert: *mut BpchiCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

/// Exact independence number. `ResourceLimit` when the search needs more
/// than `node_budget` nodes.
#[no_mangle]
pub unsafe extern "C" fn bpchi_independence_number(g: *const BpchiGraph, node_budget: u64, out: *mut usize) -> BpchiStatus {
    guard(|| {
        let limits = SearchLimits::new(SearchLimits::INDEPENDENCE.max_order.max(borrow(g, "graph")?.0.order()), node_budget);
        let r = independence_number(&borrow(g, "graph")?.0, &limits)?;
        store(out, r.size, "out")
    })
}

/// Exact chromatic number, same budget rules.
#[no_mangle]
pub unsafe extern "C" fn bpchi_chromatic_number(g: *const BpchiGraph, node_budget: u64, out: *mut usize) -> BpchiStatus {
    guard(|| {
        let limits = SearchLimits::new(SearchLimits::CHROMATIC.max_order, node_budget);
        let c = chromatic_number(&borrow(g, "graph")?.0, &limits)?;
        store(out, c.colors, "out")
    })
}

/// `1 + sum_{s=1}^{t} 2^(s-1) C(d,s)`; `InvalidInput` if it does not fit
/// in 64 bits.
#[no_mangle]
pub unsafe extern "C" fn bpchi_peck_bound(d: u64, t: u64, out: *mut u64) -> BpchiStatus {
    guard(|| {
        let v = u64::try_from(peck_bound(d, t))
            .map_err(|_| Failure(BpchiStatus::InvalidInput, format!("peck_bound({d}, {t}) exceeds 64 bits")))?;
        store(out, v, "out")
    })
}
