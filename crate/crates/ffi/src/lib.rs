//! C ABI for `plane-forest`.
//!
//! Every function returns a [`PfStatus`]; results come back through out
//! pointers. Trees and catalogs are opaque heap handles released with their
//! `_free` function. Strings are copied into caller buffers: pass a null
//! buffer (or one that is too small) to learn the required size, including
//! the terminating NUL, through `needed`. The message for the last failure on
//! the calling thread is available from [`pf_last_error`].

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CStr};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use plane_forest::render::parse_any;
use plane_forest::{
    canonical_plane, count_flows, count_plane, count_rooted, enumerate_plane_center, flow_from_tree,
    validate_flow_graph, Centrality, EquivalenceMode, Error, FlowGraph, Limits, PlaneTree,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    MalformedCode = 3,
    LimitExceeded = 4,
    InvalidArgument = 5,
    BufferTooSmall = 6,
    IndexOutOfRange = 7,
    Overflow = 8,
    HasCycle = 9,
    Disconnected = 10,
    InvalidGraph = 11,
    Internal = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PfMode {
    Oriented = 0,
    Mirror = 1,
}

impl From<PfMode> for EquivalenceMode {
    fn from(m: PfMode) -> Self {
        match m {
            PfMode::Oriented => EquivalenceMode::Oriented,
            PfMode::Mirror => EquivalenceMode::Mirror,
        }
    }
}

/// Canonical plane tree.
pub struct PfPlaneTree(PlaneTree);

/// Sorted list of serialized plane trees.
pub struct PfCatalog(Vec<String>);

thread_local! {
    static LAST_ERROR: RefCell<String> = const { RefCell::new(String::new()) };
}

fn fail(status: PfStatus, message: impl Into<String>) -> PfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = message.into());
    status
}

fn from_error(e: Error) -> PfStatus {
    let status = match e {
        Error::MalformedCode { .. } | Error::MalformedPlaneTree(_) => PfStatus::MalformedCode,
        Error::LimitExceeded { .. } => PfStatus::LimitExceeded,
        Error::InvalidArgument(_) => PfStatus::InvalidArgument,
        Error::HasCycle { .. } => PfStatus::HasCycle,
        Error::Disconnected { .. } => PfStatus::Disconnected,
        Error::InvalidGraph(_) => PfStatus::InvalidGraph,
        Error::Inconsistent(_) => PfStatus::Internal,
    };
    fail(status, e.to_string())
}

/// Runs `body`, turning panics into `Internal` so none cross the boundary.
fn guard(body: impl FnOnce() -> Result<(), PfStatus>) -> PfStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => PfStatus::Ok,
        Ok(Err(status)) => status,
        Err(_) => fail(PfStatus::Internal, "panic inside plane-forest"),
    }
}

fn limits() -> Limits {
    Limits::from_env().unwrap_or_default()
}

unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, PfStatus> {
    if s.is_null() {
        return Err(fail(PfStatus::NullPointer, "string argument is null"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|_| fail(PfStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), PfStatus> {
    if out.is_null() {
        return Err(fail(PfStatus::NullPointer, "output pointer is null"));
    }
    out.write(value);
    Ok(())
}

/// Copies `s` with a trailing NUL; false if it does not fit.
unsafe fn copy_str(s: &str, buf: *mut c_char, cap: usize, needed: *mut usize) -> bool {
    let size = s.len() + 1;
    if !needed.is_null() {
        needed.write(size);
    }
    if buf.is_null() || cap < size {
        return false;
    }
    ptr::copy_nonoverlapping(s.as_ptr(), buf.cast::<u8>(), s.len());
    buf.add(s.len()).write(0);
    true
}

unsafe fn write_str(s: &str, buf: *mut c_char, cap: usize, needed: *mut usize) -> Result<(), PfStatus> {
    if copy_str(s, buf, cap, needed) {
        Ok(())
    } else {
        Err(fail(
            PfStatus::BufferTooSmall,
            format!("buffer of {cap} bytes, {} needed", s.len() + 1),
        ))
    }
}

unsafe fn tree_ref<'a>(tree: *const PfPlaneTree) -> Result<&'a PlaneTree, PfStatus> {
    tree.as_ref()
        .map(|t| &t.0)
        .ok_or_else(|| fail(PfStatus::NullPointer, "tree handle is null"))
}

/// Copies the last error message of this thread into `buf`. Never changes
/// the stored message, so a size query followed by a read sees the same text.
#[no_mangle]
pub unsafe extern "C" fn pf_last_error(buf: *mut c_char, cap: usize, needed: *mut usize) -> PfStatus {
    let msg = LAST_ERROR.with(|e| e.borrow().clone());
    if copy_str(&msg, buf, cap, needed) {
        PfStatus::Ok
    } else {
        PfStatus::BufferTooSmall
    }
}

/// Number of rooted plane trees with `edges` edges (Catalan number).
#[no_mangle]
pub unsafe extern "C" fn pf_count_rooted(edges: u32, out: *mut u64) -> PfStatus {
    guard(|| {
        let c = u64::try_from(count_rooted(edges as usize))
            .map_err(|_| fail(PfStatus::Overflow, format!("Catalan({edges}) does not fit in 64 bits")))?;
        write_out(out, c)
    })
}

/// Number of plane tree classes with `vertices` vertices.
#[no_mangle]
pub unsafe extern "C" fn pf_count_plane(vertices: u32, mode: PfMode, out: *mut u64) -> PfStatus {
    guard(|| {
        let n = count_plane(vertices as usize, mode.into(), &limits()).map_err(from_error)?;
        write_out(out, n as u64)
    })
}

/// Number of flow classes with one sink and `saddles` saddles on the sphere.
#[no_mangle]
pub unsafe extern "C" fn pf_count_flows(saddles: u32, mode: PfMode, out: *mut u64) -> PfStatus {
    guard(|| {
        let n = count_flows(saddles as usize, mode.into(), &limits()).map_err(from_error)?;
        write_out(out, n as u64)
    })
}

/// Canonicalizes a Dyck code (bare, or `U:`/`B:` tagged) into a new tree handle.
#[no_mangle]
pub unsafe extern "C" fn pf_plane_tree_from_code(
    code: *const c_char,
    mode: PfMode,
    out: *mut *mut PfPlaneTree,
) -> PfStatus {
    guard(|| {
        let code = read_str(code)?;
        let tree = parse_any(code).map_err(from_error)?;
        let handle = Box::new(PfPlaneTree(canonical_plane(&tree, mode.into())));
        write_out(out, Box::into_raw(handle))
    })
}

#[no_mangle]
pub unsafe extern "C" fn pf_plane_tree_free(tree: *mut PfPlaneTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// Writes the `U:<code>` / `B:<code>` line of `tree`.
#[no_mangle]
pub unsafe extern "C" fn pf_plane_tree_serialize(
    tree: *const PfPlaneTree,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> PfStatus {
    guard(|| write_str(&tree_ref(tree)?.to_string(), buf, cap, needed))
}

#[no_mangle]
pub unsafe extern "C" fn pf_plane_tree_vertex_count(tree: *const PfPlaneTree, out: *mut usize) -> PfStatus {
    guard(|| write_out(out, tree_ref(tree)?.vertex_count()))
}

#[no_mangle]
pub unsafe extern "C" fn pf_plane_tree_is_bicentral(tree: *const PfPlaneTree, out: *mut bool) -> PfStatus {
    guard(|| write_out(out, tree_ref(tree)?.centrality() == Centrality::Bicentral))
}

/// Same class (and same mode)?
#[no_mangle]
pub unsafe extern "C" fn pf_plane_tree_equal(
    a: *const PfPlaneTree,
    b: *const PfPlaneTree,
    out: *mut bool,
) -> PfStatus {
    guard(|| write_out(out, tree_ref(a)? == tree_ref(b)?))
}

/// Writes the flow record `sources=.. saddles=.. sinks=1 tree=..` for `tree`.
#[no_mangle]
pub unsafe extern "C" fn pf_flow_record(
    tree: *const PfPlaneTree,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> PfStatus {
    guard(|| write_str(&flow_from_tree(tree_ref(tree)?).to_string(), buf, cap, needed))
}

/// Validates a separatrix graph and returns its plane tree.
///
/// `edges` holds `edge_count` pairs of vertex ids, flattened. Edges around
/// each vertex are taken in list order.
#[no_mangle]
pub unsafe extern "C" fn pf_validate_flow_graph(
    vertices: usize,
    edges: *const u32,
    edge_count: usize,
    mode: PfMode,
    out: *mut *mut PfPlaneTree,
) -> PfStatus {
    guard(|| {
        let flat: &[u32] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(fail(PfStatus::NullPointer, "edge array is null"));
        } else {
            std::slice::from_raw_parts(edges, 2 * edge_count)
        };
        let pairs = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
        let flow = validate_flow_graph(&FlowGraph::new(vertices, pairs), mode.into()).map_err(from_error)?;
        write_out(out, Box::into_raw(Box::new(PfPlaneTree(flow.separatrices().clone()))))
    })
}

/// All plane tree classes with `vertices` vertices, sorted.
#[no_mangle]
pub unsafe extern "C" fn pf_catalog_new(vertices: u32, mode: PfMode, out: *mut *mut PfCatalog) -> PfStatus {
    guard(|| {
        let trees = enumerate_plane_center(vertices as usize, mode.into(), &limits()).map_err(from_error)?;
        let handle = Box::new(PfCatalog(trees.iter().map(ToString::to_string).collect()));
        write_out(out, Box::into_raw(handle))
    })
}

#[no_mangle]
pub unsafe extern "C" fn pf_catalog_len(catalog: *const PfCatalog, out: *mut usize) -> PfStatus {
    guard(|| {
        let c = catalog
            .as_ref()
            .ok_or_else(|| fail(PfStatus::NullPointer, "catalog handle is null"))?;
        write_out(out, c.0.len())
    })
}

/// Copies entry `index` of the catalog into `buf`.
#[no_mangle]
pub unsafe extern "C" fn pf_catalog_get(
    catalog: *const PfCatalog,
    index: usize,
    buf: *mut c_char,
    cap: usize,
    needed: *mut usize,
) -> PfStatus {
    guard(|| {
        let c = catalog
            .as_ref()
            .ok_or_else(|| fail(PfStatus::NullPointer, "catalog handle is null"))?;
        let entry = c.0.get(index).ok_or_else(|| {
            fail(
                PfStatus::IndexOutOfRange,
                format!("index {index} outside catalog of {}", c.0.len()),
            )
        })?;
        write_str(entry, buf, cap, needed)
    })
}

#[no_mangle]
pub unsafe extern "C" fn pf_catalog_free(catalog: *mut PfCatalog) {
    if !catalog.is_null() {
        drop(Box::from_raw(catalog));
    }
}
