//! C ABI over `koszul-core`.
//!
//! Every function returns a status code (`KZ_OK` on success) and writes its
//! result through an out-pointer. On failure a message is available from
//! `kz_last_error_message` until the next call on the same thread. Objects
//! returned through `**out` pointers are owned by the caller and released
//! with the matching `*_free` function. A field is given by its
//! characteristic: 0 for the rationals, otherwise a prime.

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use koszul_core::algebra::IncidenceAlgebra;
use koszul_core::builders::Fixture;
use koszul_core::error::Error;
use koszul_core::format::{parse_facet_list, PosetFile};
use koszul_core::homology::is_seq_cm;
use koszul_core::koszul::{
    is_koszul_ideal, is_koszul_ring, is_quadratic, tor_bar, tor_topological, MonomialRightIdeal,
    TorTable,
};
use koszul_core::linalg::Field;
use koszul_core::numerology::verify_koszul_identity;
use koszul_core::sr::{is_componentwise_linear, SquarefreeIdeal};

pub const KZ_OK: c_int = 0;
/// Independent computations disagreed.
pub const KZ_ERROR_INCONSISTENT: c_int = 1;
pub const KZ_ERROR_PARSE: c_int = 2;
pub const KZ_ERROR_AXIOM: c_int = 3;
pub const KZ_ERROR_PRECONDITION: c_int = 4;
pub const KZ_ERROR_NULL_ARGUMENT: c_int = 5;
pub const KZ_ERROR_PANIC: c_int = 6;

/// Module whose Tor is computed.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KzModule {
    KzModuleRing = 0,
    KzModuleIdeal = 1,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KzBackend {
    KzBackendTopological = 0,
    KzBackendBar = 1,
}

/// A poset with a validated interval relation and an optional ideal.
pub struct KzRelation {
    file: PosetFile,
    algebra: IncidenceAlgebra,
}

/// A computed Tor table.
pub struct KzTor {
    entries: Vec<KzTorEntry>,
}

/// One nonzero Tor dimension. Points are given by element indices of the
/// representatives of their point classes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KzTorEntry {
    pub source: usize,
    pub target: usize,
    pub homological_degree: usize,
    pub internal_degree: usize,
    pub dimension: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("interior nul removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(message));
}

fn code_of(e: &Error) -> c_int {
    match e {
        Error::Inconsistent(_) => KZ_ERROR_INCONSISTENT,
        Error::AxiomViolation(_) => KZ_ERROR_AXIOM,
        Error::Precondition(_) => KZ_ERROR_PRECONDITION,
        _ => KZ_ERROR_PARSE,
    }
}

enum Fail {
    Null(&'static str),
    Core(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Core(e)
    }
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> c_int {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => KZ_OK,
        Ok(Err(Fail::Null(name))) => {
            set_error(format!("argument '{name}' is null"));
            KZ_ERROR_NULL_ARGUMENT
        }
        Ok(Err(Fail::Core(e))) => {
            set_error(e.to_string());
            code_of(&e)
        }
        Err(payload) => {
            let text = payload
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {text}"));
            KZ_ERROR_PANIC
        }
    }
}

unsafe fn text<'a>(p: *const c_char, name: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(name));
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        Fail::Core(Error::Parse {
            line: 1,
            column: 1,
            message: format!("argument '{name}' is not valid UTF-8"),
        })
    })
}

unsafe fn out<'a, T>(p: *mut T, name: &'static str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or(Fail::Null(name))
}

unsafe fn rel<'a>(p: *const KzRelation) -> Result<&'a KzRelation, Fail> {
    p.as_ref().ok_or(Fail::Null("relation"))
}

fn field(characteristic: u64) -> Result<Field, Fail> {
    if characteristic == 0 {
        return Ok(Field::Rationals);
    }
    Ok(Field::prime(characteristic)?)
}

fn ideal(r: &KzRelation) -> Result<MonomialRightIdeal, Fail> {
    let gens = r
        .file
        .ideal_generators(&r.algebra)?
        .ok_or_else(|| Error::Precondition("the relation has no ideal".into()))?;
    Ok(MonomialRightIdeal::from_generators(&r.algebra, &gens)?)
}

fn relation_from(file: PosetFile) -> Result<Box<KzRelation>, Fail> {
    let algebra = file.algebra()?;
    Ok(Box::new(KzRelation { file, algebra }))
}

/// Message for the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn kz_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Parses a poset file and validates its interval relation.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kz_relation_parse(text: *const c_char, out: *mut *mut KzRelation) -> c_int {
    guard(|| {
        let text = self::text(text, "text")?;
        let slot = self::out(out, "out")?;
        *slot = Box::into_raw(relation_from(PosetFile::parse(text)?)?);
        Ok(())
    })
}

/// One of the built-in posets (`POSET8`, `N5`, `DIAMOND`, `DBLCHAIN`,
/// `QUADNK`) with the trivial relation.
///
/// # Safety
/// `name` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kz_relation_fixture(name: *const c_char, out: *mut *mut KzRelation) -> c_int {
    guard(|| {
        let name = text(name, "name")?;
        let slot = self::out(out, "out")?;
        let poset = Fixture::from_name(name)?.poset();
        *slot = Box::into_raw(relation_from(PosetFile::from_poset(poset))?);
        Ok(())
    })
}

/// # Safety
/// `relation` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kz_relation_free(relation: *mut KzRelation) {
    if !relation.is_null() {
        drop(Box::from_raw(relation));
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_relation_num_elements(relation: *const KzRelation, out: *mut usize) -> c_int {
    guard(|| {
        *self::out(out, "out")? = rel(relation)?.file.poset.len();
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_relation_num_classes(relation: *const KzRelation, out: *mut usize) -> c_int {
    guard(|| {
        *self::out(out, "out")? = rel(relation)?.algebra.num_classes();
        Ok(())
    })
}

/// Name of element `index` as a newly allocated string; release it with
/// `kz_string_free`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_relation_element_name(
    relation: *const KzRelation,
    index: usize,
    out: *mut *mut c_char,
) -> c_int {
    guard(|| {
        let r = rel(relation)?;
        let slot = self::out(out, "out")?;
        let names = r.file.poset.names();
        let name = names
            .get(index)
            .ok_or_else(|| Error::Precondition(format!("no element with index {index}")))?;
        *slot = CString::new(name.as_str()).expect("names contain no nul").into_raw();
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kz_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Koszulness of the associated graded ring, or with `use_ideal != 0` of the
/// relation's ideal. Writes 1 or 0.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_is_koszul(
    relation: *const KzRelation,
    characteristic: u64,
    use_ideal: c_int,
    out: *mut c_int,
) -> c_int {
    guard(|| {
        let r = rel(relation)?;
        let slot = self::out(out, "out")?;
        let k = field(characteristic)?;
        let verdict = if use_ideal != 0 {
            is_koszul_ideal(&r.algebra, &ideal(r)?, k)?
        } else {
            is_koszul_ring(&r.algebra, k)?
        };
        *slot = c_int::from(verdict.koszul);
        Ok(())
    })
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_is_quadratic(relation: *const KzRelation, out: *mut c_int) -> c_int {
    guard(|| {
        let r = rel(relation)?;
        let slot = self::out(out, "out")?;
        *slot = c_int::from(is_quadratic(&r.algebra)?.quadratic);
        Ok(())
    })
}

/// Whether `P(t)Q(-t)` is the identity matrix. Writes 1 or 0.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_koszul_identity_holds(
    relation: *const KzRelation,
    characteristic: u64,
    out: *mut c_int,
) -> c_int {
    guard(|| {
        let r = rel(relation)?;
        let slot = self::out(out, "out")?;
        *slot = c_int::from(verify_koszul_identity(&r.algebra, field(characteristic)?).0);
        Ok(())
    })
}

/// Computes a Tor table. The bar backend works in homological degrees up to
/// the number of elements.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_tor_compute(
    relation: *const KzRelation,
    characteristic: u64,
    module: KzModule,
    backend: KzBackend,
    out: *mut *mut KzTor,
) -> c_int {
    guard(|| {
        let r = rel(relation)?;
        let slot = self::out(out, "out")?;
        let k = field(characteristic)?;
        let j = match module {
            KzModule::KzModuleRing => None,
            KzModule::KzModuleIdeal => Some(ideal(r)?),
        };
        let table = match backend {
            KzBackend::KzBackendTopological => tor_topological(&r.algebra, j.as_ref(), k),
            KzBackend::KzBackendBar => tor_bar(&r.algebra, j.as_ref(), k, None)?,
        };
        *slot = Box::into_raw(Box::new(tor_entries(r, &table)));
        Ok(())
    })
}

fn tor_entries(r: &KzRelation, table: &TorTable) -> KzTor {
    let element = |class: usize| r.algebra.relation().class(class).representative.lo;
    KzTor {
        entries: table
            .entries()
            .iter()
            .map(|(&(s, t, i, j), &dim)| KzTorEntry {
                source: element(s),
                target: element(t),
                homological_degree: i,
                internal_degree: j,
                dimension: dim,
            })
            .collect(),
    }
}

/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_tor_len(tor: *const KzTor, out: *mut usize) -> c_int {
    guard(|| {
        let t = tor.as_ref().ok_or(Fail::Null("tor"))?;
        *self::out(out, "out")? = t.entries.len();
        Ok(())
    })
}

/// Entry `index` in (source, target, i, j) order.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_tor_entry(tor: *const KzTor, index: usize, out: *mut KzTorEntry) -> c_int {
    guard(|| {
        let t = tor.as_ref().ok_or(Fail::Null("tor"))?;
        let slot = self::out(out, "out")?;
        *slot = *t
            .entries
            .get(index)
            .ok_or_else(|| Error::Precondition(format!("no entry with index {index}")))?;
        Ok(())
    })
}

/// # Safety
/// `tor` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kz_tor_free(tor: *mut KzTor) {
    if !tor.is_null() {
        drop(Box::from_raw(tor));
    }
}

/// Sequential Cohen-Macaulayness of a complex in facet-list form
/// (`"1 2; 2 3"`). Writes 1 or 0.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_complex_is_seq_cm(facets: *const c_char, characteristic: u64, out: *mut c_int) -> c_int {
    guard(|| {
        let facets = text(facets, "facets")?;
        let slot = self::out(out, "out")?;
        let c = parse_facet_list(facets, None)?;
        *slot = c_int::from(is_seq_cm(&c, field(characteristic)?));
        Ok(())
    })
}

/// Componentwise linearity of the Stanley-Reisner ideal of the complex with
/// the given facets on vertices `1..=vertices`. Writes 1 or 0.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn kz_stanley_reisner_is_componentwise_linear(
    facets: *const c_char,
    vertices: usize,
    characteristic: u64,
    out: *mut c_int,
) -> c_int {
    guard(|| {
        let facets = text(facets, "facets")?;
        let slot = self::out(out, "out")?;
        let c = parse_facet_list(facets, Some(vertices))?;
        let v = is_componentwise_linear(&SquarefreeIdeal::of_complex(&c), field(characteristic)?)?;
        *slot = c_int::from(v.componentwise_linear);
        Ok(())
    })
}
