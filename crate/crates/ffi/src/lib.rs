//! C ABI for `axicover`.
//!
//! Hypergraphs cross the boundary as opaque `AxHypergraph` handles; every
//! other structured value crosses as a JSON string in the formats used by the
//! command-line tool. Functions return an [`AxStatus`]; on failure the
//! message is available from [`ax_last_error_message`] on the same thread.
//! Strings returned through out-parameters are owned by the caller and must
//! be released with [`ax_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use axicover::projection::PlanarInstance;
use axicover::representation::fixed_labeling;
use axicover::{
    brute_force_max_independent_set, brute_force_max_matching, build_matching_instance, hypergraph_from_points,
    is_edge_separable, is_vertex_separable, parse_hypergraph, project_to_plane, recognize, verify_representation,
    Error, LabelingMode, PartitionedHypergraph, Recognition, Representation, SimpleGraph,
};

/// Result codes. Values 0 to 3 match the exit codes of the command-line tool.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AxStatus {
    Ok = 0,
    /// A negative decision: not representable, or verification failed.
    Rejected = 1,
    InvalidInput = 2,
    ResourceCap = 3,
    NullPointer = 4,
    Internal = 5,
}

/// Opaque hypergraph handle.
pub struct AxHypergraph {
    graph: PartitionedHypergraph,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("interior nulls removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(AxStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::SizeCap { .. } | Error::RetriesExhausted(_) => AxStatus::ResourceCap,
            _ => AxStatus::InvalidInput,
        };
        Failure(status, e.to_string())
    }
}

fn null(what: &str) -> Failure {
    Failure(AxStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<AxStatus, Failure>) -> AxStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, message))) => {
            set_error(&message);
            status
        }
        Err(_) => {
            set_error("internal panic");
            AxStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(AxStatus::InvalidInput, format!("{what} is not UTF-8")))
}

unsafe fn graph<'a>(h: *const AxHypergraph) -> Result<&'a PartitionedHypergraph, Failure> {
    h.as_ref().map(|h| &h.graph).ok_or_else(|| null("hypergraph handle"))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    let c = CString::new(s).map_err(|_| Failure(AxStatus::Internal, "output contains a null byte".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_value<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    *out = value;
    Ok(())
}

/// `d = 0` selects the document labeling's dimensions, else `(k, 1)`;
/// `ell = 0` with `d > 0` means `ell = 1`.
fn dims(g: &PartitionedHypergraph, d: usize, ell: usize) -> (usize, usize) {
    match (d, ell) {
        (0, _) => g.labeling().map(|l| (l.d(), l.ell())).unwrap_or((g.part_count(), 1)),
        (d, 0) => (d, 1),
        (d, ell) => (d, ell),
    }
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn ax_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn ax_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn ax_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses a hypergraph document into a new handle.
///
/// # Safety
/// `json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_hypergraph_parse(json: *const c_char, out: *mut *mut AxHypergraph) -> AxStatus {
    guard(|| {
        let text = read_str(json, "json")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let graph = parse_hypergraph(text)?;
        *out = Box::into_raw(Box::new(AxHypergraph { graph }));
        Ok(AxStatus::Ok)
    })
}

/// # Safety
/// `h` must be null or a handle from this library, freed at most once.
#[no_mangle]
pub unsafe extern "C" fn ax_hypergraph_free(h: *mut AxHypergraph) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle; each out pointer may be null to skip it.
#[no_mangle]
pub unsafe extern "C" fn ax_hypergraph_counts(
    h: *const AxHypergraph,
    parts: *mut usize,
    vertices: *mut usize,
    edges: *mut usize,
) -> AxStatus {
    guard(|| {
        let g = graph(h)?;
        for (out, value) in [(parts, g.part_count()), (vertices, g.vertex_count()), (edges, g.edge_count())] {
            if !out.is_null() {
                *out = value;
            }
        }
        Ok(AxStatus::Ok)
    })
}

/// Serializes the hypergraph document.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_hypergraph_to_json(h: *const AxHypergraph, out: *mut *mut c_char) -> AxStatus {
    guard(|| {
        write_string(out, graph(h)?.to_json())?;
        Ok(AxStatus::Ok)
    })
}

/// Decides representability. On `AX_STATUS_OK` `out` receives the
/// representation; on `AX_STATUS_REJECTED` it receives the witness.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_recognize(
    h: *const AxHypergraph,
    d: usize,
    ell: usize,
    enumerate: bool,
    out: *mut *mut c_char,
) -> AxStatus {
    guard(|| {
        let g = graph(h)?;
        let (d, ell) = dims(g, d, ell);
        let mode = if enumerate {
            LabelingMode::Enumerate
        } else {
            LabelingMode::Fixed
        };
        match recognize(g, d, ell, mode)? {
            Recognition::Represented(rep) => {
                write_string(out, rep.to_json(g))?;
                Ok(AxStatus::Ok)
            }
            Recognition::NotRepresentable { witness, .. } => {
                write_string(out, witness.to_json(g))?;
                Ok(AxStatus::Rejected)
            }
        }
    })
}

unsafe fn separability(
    h: *const AxHypergraph,
    d: usize,
    ell: usize,
    out: *mut bool,
    edges: bool,
) -> AxStatus {
    guard(|| {
        let g = graph(h)?;
        let (d, ell) = dims(g, d, ell);
        let labeling = fixed_labeling(g, d, ell)?;
        let verdict = if edges {
            is_edge_separable(g, &labeling)?
        } else {
            is_vertex_separable(g, &labeling)?
        };
        write_value(out, verdict.is_separable())?;
        Ok(AxStatus::Ok)
    })
}

/// Vertex separability under the fixed-mode labeling.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_is_vertex_separable(h: *const AxHypergraph, d: usize, ell: usize, out: *mut bool) -> AxStatus {
    separability(h, d, ell, out, false)
}

/// Edge separability under the fixed-mode labeling.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_is_edge_separable(h: *const AxHypergraph, d: usize, ell: usize, out: *mut bool) -> AxStatus {
    separability(h, d, ell, out, true)
}

/// Builds the incidence hypergraph of a point-set document. `out_rep` may be
/// null; otherwise it receives the point set's own representation.
///
/// # Safety
/// `points_json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_from_points(
    points_json: *const c_char,
    out: *mut *mut AxHypergraph,
    out_rep: *mut *mut c_char,
) -> AxStatus {
    guard(|| {
        let text = read_str(points_json, "points_json")?;
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let doc: axicover::representation::PointSetDoc =
            serde_json::from_str(text).map_err(|e| Failure::from(Error::from(e)))?;
        let fp = hypergraph_from_points(&doc.points, doc.ell)?;
        if !out_rep.is_null() {
            write_string(out_rep, fp.representation.to_json(&fp.graph))?;
        }
        *out = Box::into_raw(Box::new(AxHypergraph { graph: fp.graph }));
        Ok(AxStatus::Ok)
    })
}

/// Verifies a representation document. Returns `AX_STATUS_REJECTED` with
/// the violation as the last error message when it does not hold.
///
/// # Safety
/// `h` must be a live handle and `rep_json` a valid C string.
#[no_mangle]
pub unsafe extern "C" fn ax_verify(h: *const AxHypergraph, rep_json: *const c_char) -> AxStatus {
    guard(|| {
        let g = graph(h)?;
        let rep = Representation::from_json(read_str(rep_json, "rep_json")?, g)?;
        match verify_representation(g, &rep) {
            Ok(()) => Ok(AxStatus::Ok),
            Err(v) => Err(Failure(AxStatus::Rejected, v.to_string())),
        }
    })
}

/// Builds the matching instance of a simple-graph document.
///
/// # Safety
/// `graph_json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_reduce_is(graph_json: *const c_char, out: *mut *mut c_char) -> AxStatus {
    guard(|| {
        let g = SimpleGraph::from_json(read_str(graph_json, "graph_json")?)?;
        write_string(out, build_matching_instance(&g)?.to_json())?;
        Ok(AxStatus::Ok)
    })
}

/// Exact maximum matching of the hypergraph.
///
/// # Safety
/// `h` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_max_matching(h: *const AxHypergraph, out: *mut usize) -> AxStatus {
    guard(|| {
        let m = brute_force_max_matching(graph(h)?)?;
        write_value(out, m)?;
        Ok(AxStatus::Ok)
    })
}

/// Exact independence number of a simple-graph document.
///
/// # Safety
/// `graph_json` must be a valid C string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_max_independent_set(graph_json: *const c_char, out: *mut usize) -> AxStatus {
    guard(|| {
        let g = SimpleGraph::from_json(read_str(graph_json, "graph_json")?)?;
        write_value(out, brute_force_max_independent_set(&g)?)?;
        Ok(AxStatus::Ok)
    })
}

/// Projects a line representation of `h` to a planar instance. With a null
/// `rep_json` the representation is recognized with the fixed labeling.
///
/// # Safety
/// `h` must be a live handle, `rep_json` null or a valid C string, and `out`
/// a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn ax_project(
    h: *const AxHypergraph,
    rep_json: *const c_char,
    seed: u64,
    out: *mut *mut c_char,
) -> AxStatus {
    guard(|| {
        let g = graph(h)?;
        let rep = if rep_json.is_null() {
            let (d, ell) = dims(g, 0, 0);
            match recognize(g, d, ell, LabelingMode::Fixed)? {
                Recognition::Represented(rep) => rep,
                Recognition::NotRepresentable { .. } => {
                    return Err(Failure(AxStatus::Rejected, "hypergraph is not representable".into()))
                }
            }
        } else {
            Representation::from_json(read_str(rep_json, "rep_json")?, g)?
        };
        let inst: PlanarInstance = project_to_plane(&rep, seed)?.instance;
        write_string(out, inst.to_json())?;
        Ok(AxStatus::Ok)
    })
}
