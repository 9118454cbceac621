//! C ABI for the coloured-poset homology library.
//!
//! Structured results travel through opaque handles released with the
//! matching `_free` function; strings returned through out-pointers are
//! released with [`phom_string_free`]. Fallible calls return a
//! [`PhomStatus`]; on anything but `OK` (and on `CHECK_FAILED`, where it
//! describes the failed property) a message is kept in thread-local storage
//! readable through [`phom_last_error`] until the next call on the same
//! thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::fmt::Write as _;
use std::panic::{catch_unwind, AssertUnwindSafe};

use poset_homology::chromatic::{self, UnitalAlgebra};
use poset_homology::complex::{cube_complex, poset_complex};
use poset_homology::coloured::boolean_split;
use poset_homology::format::{self, PosetFile};
use poset_homology::homology::HomologyResult;
use poset_homology::khovanov;
use poset_homology::random;
use poset_homology::ring::{Integers, PrimeField, Rationals, RingSpec};
use poset_homology::verify;

/// Outcome of a call through the C interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PhomStatus {
    /// The call succeeded; for verification runs, the property holds.
    Ok = 0,
    /// The computation ran to completion but the checked property fails.
    CheckFailed = 1,
    /// A required pointer argument was null.
    NullArgument = 2,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 3,
    /// The input failed to parse or validate.
    InvalidInput = 4,
    /// The computation itself failed.
    ComputeFailed = 5,
}

/// A parsed coloured-poset file: the integer matrix template, the ring
/// named in its header, and the Boolean rank when the carrier is a lattice.
pub struct PhomColouring {
    file: PosetFile,
}

/// A computed homology table, one group per degree starting at 0.
pub struct PhomHomology {
    result: HomologyResult,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl ToString) {
    let text = msg.to_string().replace('\0', " ");
    LAST_ERROR.with(|slot| {
        *slot.borrow_mut() = CString::new(text).expect("NUL bytes stripped");
    });
}

/// Message describing the most recent failure on this thread. Valid until
/// the next library call on the same thread; never free it.
#[no_mangle]
pub extern "C" fn phom_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// The library version as a static string; never free it.
#[no_mangle]
pub extern "C" fn phom_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

/// Release a string returned by this library. Null is ignored.
///
/// # Safety
///
/// `s` must have been returned by a function of this library and not freed
/// before.
#[no_mangle]
pub unsafe extern "C" fn phom_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Convert panics into a status so they never unwind across the boundary.
fn guarded(body: impl FnOnce() -> PhomStatus) -> PhomStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(status) => status,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "internal panic".into());
            set_error(msg);
            PhomStatus::ComputeFailed
        }
    }
}

unsafe fn text_arg<'a>(p: *const c_char) -> Result<&'a str, PhomStatus> {
    if p.is_null() {
        set_error("null string argument");
        return Err(PhomStatus::NullArgument);
    }
    CStr::from_ptr(p).to_str().map_err(|_| {
        set_error("string argument is not valid UTF-8");
        PhomStatus::InvalidUtf8
    })
}

unsafe fn handle_arg<'a, T>(p: *const T) -> Result<&'a T, PhomStatus> {
    if p.is_null() {
        set_error("null handle argument");
        return Err(PhomStatus::NullArgument);
    }
    Ok(&*p)
}

fn write_out<T>(out: *mut *mut T, value: T) -> PhomStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return PhomStatus::NullArgument;
    }
    unsafe { *out = Box::into_raw(Box::new(value)) };
    PhomStatus::Ok
}

fn write_string(out: *mut *mut c_char, text: String) -> PhomStatus {
    if out.is_null() {
        set_error("null out-pointer");
        return PhomStatus::NullArgument;
    }
    let c = CString::new(text.replace('\0', " ")).expect("NUL bytes stripped");
    unsafe { *out = c.into_raw() };
    PhomStatus::Ok
}

fn ring_arg(p: *const c_char, default: RingSpec) -> Result<RingSpec, PhomStatus> {
    if p.is_null() {
        return Ok(default);
    }
    let text = unsafe { text_arg(p)? };
    RingSpec::parse(text).map_err(|e| {
        set_error(e);
        PhomStatus::InvalidInput
    })
}

/// Parse the text of a coloured-poset file into a handle.
///
/// # Safety
///
/// `text` must be NUL-terminated; `out` must be a valid pointer. On `OK`
/// the handle must be released with [`phom_colouring_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_colouring_parse(
    text: *const c_char,
    out: *mut *mut PhomColouring,
) -> PhomStatus {
    guarded(|| {
        let text = match text_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        match format::parse_coloured(text) {
            Ok(file) => write_out(out, PhomColouring { file }),
            Err(e) => {
                set_error(e);
                PhomStatus::InvalidInput
            }
        }
    })
}

/// A seeded random colouring of the Boolean lattice of the given rank
/// (at most 6), with fiber ranks at most `max_fiber` (at least 1). The
/// instance is deterministic in the arguments.
///
/// # Safety
///
/// `out` must be a valid pointer; release the handle with
/// [`phom_colouring_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_colouring_random(
    seed: u64,
    rank: u32,
    max_fiber: usize,
    out: *mut *mut PhomColouring,
) -> PhomStatus {
    guarded(|| {
        if rank > 6 {
            set_error("rank capped at 6 (the lattice has 2^rank elements)");
            return PhomStatus::InvalidInput;
        }
        if max_fiber == 0 {
            set_error("max_fiber must be at least 1");
            return PhomStatus::InvalidInput;
        }
        let (_, data) = random::random_instance(seed, rank, max_fiber);
        let file = PosetFile {
            data,
            ring: RingSpec::Integers,
            boolean_rank: Some(rank),
        };
        write_out(out, PhomColouring { file })
    })
}

/// Render a colouring back to its text format.
///
/// # Safety
///
/// `c` must be a live colouring handle and `out` a valid pointer; release
/// the string with [`phom_string_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_colouring_write(
    c: *const PhomColouring,
    out: *mut *mut c_char,
) -> PhomStatus {
    guarded(|| {
        let c = match handle_arg(c) {
            Ok(c) => c,
            Err(status) => return status,
        };
        write_string(out, format::write_coloured(&c.file))
    })
}

/// Number of elements of the underlying poset; 0 for a null handle.
///
/// # Safety
///
/// `c` must be null or a live colouring handle.
#[no_mangle]
pub unsafe extern "C" fn phom_colouring_elements(c: *const PhomColouring) -> usize {
    match handle_arg(c) {
        Ok(c) => c.file.data.names.len(),
        Err(_) => 0,
    }
}

/// Whether the carrier was declared as a Boolean lattice.
///
/// # Safety
///
/// `c` must be null or a live colouring handle.
#[no_mangle]
pub unsafe extern "C" fn phom_colouring_is_boolean(c: *const PhomColouring) -> bool {
    matches!(handle_arg(c), Ok(c) if c.file.boolean_rank.is_some())
}

/// Release a colouring handle. Null is ignored.
///
/// # Safety
///
/// `c` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn phom_colouring_free(c: *mut PhomColouring) {
    if !c.is_null() {
        drop(Box::from_raw(c));
    }
}

fn chain_homology_over(file: &PosetFile, spec: &RingSpec) -> Result<HomologyResult, String> {
    let run = || -> Result<HomologyResult, Box<dyn std::error::Error>> {
        Ok(match spec {
            RingSpec::Integers => poset_complex(&file.data.over(&Integers)?)?.homology()?,
            RingSpec::Rationals => poset_complex(&file.data.over(&Rationals)?)?.homology()?,
            RingSpec::PrimeField(p) => {
                poset_complex(&file.data.over(&PrimeField::new(*p)?)?)?.homology()?
            }
        })
    };
    run().map_err(|e| e.to_string())
}

fn cube_homology_over(file: &PosetFile, spec: &RingSpec) -> Result<HomologyResult, String> {
    let rank = file
        .boolean_rank
        .ok_or("this computation needs a Boolean lattice file (header `boolean <rank> <ring>`)")?;
    let run = || -> Result<HomologyResult, Box<dyn std::error::Error>> {
        let lattice = poset_homology::boolean::BooleanLattice::new(rank)?;
        Ok(match spec {
            RingSpec::Integers => cube_complex(&lattice, &file.data.over(&Integers)?)?.homology()?,
            RingSpec::Rationals => {
                cube_complex(&lattice, &file.data.over(&Rationals)?)?.homology()?
            }
            RingSpec::PrimeField(p) => {
                cube_complex(&lattice, &file.data.over(&PrimeField::new(*p)?)?)?.homology()?
            }
        })
    };
    run().map_err(|e| e.to_string())
}

unsafe fn homology_entry(
    c: *const PhomColouring,
    ring: *const c_char,
    out: *mut *mut PhomHomology,
    compute: fn(&PosetFile, &RingSpec) -> Result<HomologyResult, String>,
) -> PhomStatus {
    let c = match handle_arg(c) {
        Ok(c) => c,
        Err(status) => return status,
    };
    let spec = match ring_arg(ring, c.file.ring.clone()) {
        Ok(s) => s,
        Err(status) => return status,
    };
    match compute(&c.file, &spec) {
        Ok(result) => write_out(out, PhomHomology { result }),
        Err(msg) => {
            set_error(msg);
            PhomStatus::InvalidInput
        }
    }
}

/// Homology of the chain complex of strictly increasing chains, over the
/// given ring (`"Z"`, `"Q"`, `"Fp:<prime>"`), or over the ring declared in
/// the file when `ring` is null.
///
/// # Safety
///
/// `c` must be a live colouring handle, `ring` null or NUL-terminated,
/// `out` valid; release the result with [`phom_homology_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_chain_homology(
    c: *const PhomColouring,
    ring: *const c_char,
    out: *mut *mut PhomHomology,
) -> PhomStatus {
    guarded(|| homology_entry(c, ring, out, chain_homology_over))
}

/// Homology of the cube complex. The colouring must carry a Boolean
/// lattice; the comparison map is a quasi-isomorphism, so the table equals
/// the one from [`phom_chain_homology`].
///
/// # Safety
///
/// Same contract as [`phom_chain_homology`].
#[no_mangle]
pub unsafe extern "C" fn phom_cube_homology(
    c: *const PhomColouring,
    ring: *const c_char,
    out: *mut *mut PhomHomology,
) -> PhomStatus {
    guarded(|| homology_entry(c, ring, out, cube_homology_over))
}

/// Number of degrees carried by the table (degrees 0 up to this minus one);
/// groups above are trivial.
///
/// # Safety
///
/// `h` must be null or a live homology handle.
#[no_mangle]
pub unsafe extern "C" fn phom_homology_degrees(h: *const PhomHomology) -> usize {
    match handle_arg(h) {
        Ok(h) => h.result.groups.len(),
        Err(_) => 0,
    }
}

/// Betti number (free rank) in one degree; 0 out of range.
///
/// # Safety
///
/// `h` must be null or a live homology handle.
#[no_mangle]
pub unsafe extern "C" fn phom_homology_betti(h: *const PhomHomology, degree: usize) -> usize {
    match handle_arg(h) {
        Ok(h) => h.result.group(degree as i64).betti,
        Err(_) => 0,
    }
}

/// Number of torsion invariant factors in one degree; 0 out of range.
///
/// # Safety
///
/// `h` must be null or a live homology handle.
#[no_mangle]
pub unsafe extern "C" fn phom_homology_torsion_count(
    h: *const PhomHomology,
    degree: usize,
) -> usize {
    match handle_arg(h) {
        Ok(h) => h.result.group(degree as i64).torsion.len(),
        Err(_) => 0,
    }
}

/// One torsion invariant factor as a decimal string (factors are ordered
/// and each divides the next).
///
/// # Safety
///
/// `h` must be a live homology handle and `out` valid; release the string
/// with [`phom_string_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_homology_torsion_factor(
    h: *const PhomHomology,
    degree: usize,
    index: usize,
    out: *mut *mut c_char,
) -> PhomStatus {
    guarded(|| {
        let h = match handle_arg(h) {
            Ok(h) => h,
            Err(status) => return status,
        };
        let group = h.result.group(degree as i64);
        match group.torsion.get(index) {
            Some(t) => write_string(out, t.to_string()),
            None => {
                set_error(format!(
                    "degree {degree} has {} torsion factors, index {index} out of range",
                    group.torsion.len()
                ));
                PhomStatus::InvalidInput
            }
        }
    })
}

/// The group in one degree in additive notation, e.g. `Z^2 + Z/2` or `0`.
///
/// # Safety
///
/// `h` must be a live homology handle and `out` valid; release the string
/// with [`phom_string_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_homology_group(
    h: *const PhomHomology,
    degree: usize,
    out: *mut *mut c_char,
) -> PhomStatus {
    guarded(|| {
        let h = match handle_arg(h) {
            Ok(h) => h,
            Err(status) => return status,
        };
        write_string(out, h.result.group(degree as i64).to_string())
    })
}

/// Release a homology handle. Null is ignored.
///
/// # Safety
///
/// `h` must be null or an unreleased handle from this library.
#[no_mangle]
pub unsafe extern "C" fn phom_homology_free(h: *mut PhomHomology) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Check that the cube and chain complexes of a Boolean colouring have the
/// same homology: over Z the tables are compared group by group, over Q,
/// F_2 and F_3 the comparison map is checked to induce isomorphisms.
/// Returns `OK`, `CHECK_FAILED`, or an error status.
///
/// # Safety
///
/// `c` must be a live colouring handle.
#[no_mangle]
pub unsafe extern "C" fn phom_verify_main(c: *const PhomColouring) -> PhomStatus {
    guarded(|| {
        let c = match handle_arg(c) {
            Ok(c) => c,
            Err(status) => return status,
        };
        let Some(rank) = c.file.boolean_rank else {
            set_error("this check needs a Boolean lattice file (header `boolean <rank> <ring>`)");
            return PhomStatus::InvalidInput;
        };
        let run = || -> Result<verify::MainReport, Box<dyn std::error::Error>> {
            let lattice = poset_homology::boolean::BooleanLattice::new(rank)?;
            Ok(verify::verify_main(&lattice, &c.file.data)?)
        };
        match run() {
            Ok(report) if report.ok => PhomStatus::Ok,
            Ok(report) => {
                let failed: Vec<String> = report
                    .rings
                    .iter()
                    .filter(|r| !r.ok)
                    .map(|r| r.ring.clone())
                    .collect();
                set_error(format!(
                    "cube and chain homology disagree over {}",
                    failed.join(", ")
                ));
                PhomStatus::CheckFailed
            }
            Err(e) => {
                set_error(e);
                PhomStatus::ComputeFailed
            }
        }
    })
}

/// Check exactness of the long sequences attached to splitting a Boolean
/// colouring at one atom: the chain-side gluing sequence (through the
/// degree-dropping retraction) and the cube-side subcomplex sequence.
/// Runs over Q when the file declares Z, otherwise over the declared field.
///
/// # Safety
///
/// `c` must be a live colouring handle.
#[no_mangle]
pub unsafe extern "C" fn phom_verify_les(c: *const PhomColouring, atom: usize) -> PhomStatus {
    guarded(|| {
        let c = match handle_arg(c) {
            Ok(c) => c,
            Err(status) => return status,
        };
        let Some(rank) = c.file.boolean_rank else {
            set_error("this check needs a Boolean lattice file (header `boolean <rank> <ring>`)");
            return PhomStatus::InvalidInput;
        };
        if atom as u64 >= rank as u64 {
            set_error(format!("atom {atom} out of range for rank {rank}"));
            return PhomStatus::InvalidInput;
        }
        fn les_ok<F: poset_homology::gauss::FieldRing>(
            rank: u32,
            file: &PosetFile,
            ring: &F,
            atom: usize,
        ) -> Result<bool, Box<dyn std::error::Error>> {
            let lattice = poset_homology::boolean::BooleanLattice::new(rank)?;
            let cp = file.data.over(ring)?;
            let parts = boolean_split(&lattice, &cp, atom)?;
            let chains = verify::verify_les(&parts.lower, &parts.upper, &parts.morphism)?;
            let cube = verify::verify_cube_les(&lattice, &cp, atom)?;
            Ok(chains.ok && cube.ok)
        }
        let outcome = match &c.file.ring {
            RingSpec::Integers | RingSpec::Rationals => les_ok(rank, &c.file, &Rationals, atom),
            RingSpec::PrimeField(p) => match PrimeField::new(*p) {
                Ok(f) => les_ok(rank, &c.file, &f, atom),
                Err(e) => Err(e.into()),
            },
        };
        match outcome {
            Ok(true) => PhomStatus::Ok,
            Ok(false) => {
                set_error(format!("exactness fails for the split at atom {atom}"));
                PhomStatus::CheckFailed
            }
            Err(e) => {
                set_error(e);
                PhomStatus::ComputeFailed
            }
        }
    })
}

/// Check the decomposition of the multi-sequence complex truncated at
/// `truncate`: the basis splits into strict chains and sequences with an
/// adjacent repeat, and the repeat part is contracted by the insertion
/// homotopy (so `id = h d + d h` below the truncation edge).
///
/// # Safety
///
/// `c` must be a live colouring handle.
#[no_mangle]
pub unsafe extern "C" fn phom_verify_homotopy(
    c: *const PhomColouring,
    truncate: usize,
) -> PhomStatus {
    guarded(|| {
        let c = match handle_arg(c) {
            Ok(c) => c,
            Err(status) => return status,
        };
        let run = || -> Result<verify::HomotopyReport, Box<dyn std::error::Error>> {
            Ok(match &c.file.ring {
                RingSpec::Integers => {
                    verify::verify_homotopy(&c.file.data.over(&Integers)?, truncate)?
                }
                RingSpec::Rationals => {
                    verify::verify_homotopy(&c.file.data.over(&Rationals)?, truncate)?
                }
                RingSpec::PrimeField(p) => {
                    verify::verify_homotopy(&c.file.data.over(&PrimeField::new(*p)?)?, truncate)?
                }
            })
        };
        match run() {
            Ok(report) if report.ok => PhomStatus::Ok,
            Ok(_) => {
                set_error("multi-sequence decomposition or homotopy identity fails");
                PhomStatus::CheckFailed
            }
            Err(e) => {
                set_error(e);
                PhomStatus::ComputeFailed
            }
        }
    })
}

/// Link homology of a PD-code text (`pd n+ <k> n- <m>` header, `X a b c d`
/// lines) over the given ring (null for Z). Writes a TSV table
/// `i	j	betti	torsion` and cross-checks the graded Euler characteristic
/// of the cube against the Kauffman state sum: `OK` when they agree,
/// `CHECK_FAILED` when not.
///
/// # Safety
///
/// `text` must be NUL-terminated, `ring` null or NUL-terminated, `out`
/// valid; release the string with [`phom_string_free`].
#[no_mangle]
pub unsafe extern "C" fn phom_khovanov_table(
    text: *const c_char,
    ring: *const c_char,
    out: *mut *mut c_char,
) -> PhomStatus {
    guarded(|| {
        let text = match text_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        let spec = match ring_arg(ring, RingSpec::Integers) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let run = || -> Result<(String, bool), Box<dyn std::error::Error>> {
            let d = format::parse_pd(text)?;
            let table = match &spec {
                RingSpec::Integers => khovanov::khovanov_table(&d, &Integers)?,
                RingSpec::Rationals => khovanov::khovanov_table(&d, &Rationals)?,
                RingSpec::PrimeField(p) => khovanov::khovanov_table(&d, &PrimeField::new(*p)?)?,
            };
            let (lattice, cp) = khovanov::khovanov_colouring(&d, &Integers)?;
            let cx = cube_complex(&lattice, &cp)?;
            let ok = khovanov::graded_euler_characteristic(&cx)? == khovanov::kauffman_state_sum(&d);

            let mut tsv = String::from("i\tj\tbetti\ttorsion\n");
            for ((i, j), g) in &table.entries {
                let torsion = if g.torsion.is_empty() {
                    "-".to_string()
                } else {
                    g.torsion
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                let _ = writeln!(tsv, "{i}\t{j}\t{}\t{torsion}", g.betti);
            }
            Ok((tsv, ok))
        };
        match run() {
            Ok((tsv, ok)) => {
                let status = write_string(out, tsv);
                if status != PhomStatus::Ok {
                    return status;
                }
                if ok {
                    PhomStatus::Ok
                } else {
                    set_error("graded Euler characteristic differs from the state sum");
                    PhomStatus::CheckFailed
                }
            }
            Err(e) => {
                set_error(e);
                PhomStatus::InvalidInput
            }
        }
    })
}

/// Graph homology of a graph text (`graph <vertices>` header, `e u v`
/// lines) with coefficients in the rank-`module_rank` truncated polynomial
/// algebra, over the given ring (null for Z). Writes the homology TSV and
/// cross-checks the signed Euler characteristic against the chromatic
/// polynomial at `module_rank`: `OK` on agreement, `CHECK_FAILED` when not.
///
/// # Safety
///
/// Same string contract as [`phom_khovanov_table`].
#[no_mangle]
pub unsafe extern "C" fn phom_chromatic_homology(
    text: *const c_char,
    module_rank: usize,
    ring: *const c_char,
    out: *mut *mut c_char,
) -> PhomStatus {
    guarded(|| {
        let text = match text_arg(text) {
            Ok(t) => t,
            Err(status) => return status,
        };
        if module_rank == 0 {
            set_error("module_rank must be at least 1");
            return PhomStatus::InvalidInput;
        }
        let spec = match ring_arg(ring, RingSpec::Integers) {
            Ok(s) => s,
            Err(status) => return status,
        };
        let run = || -> Result<(String, bool), Box<dyn std::error::Error>> {
            let g = format::parse_graph(text)?;
            let alg = UnitalAlgebra::truncated_polynomial(module_rank);
            fn homology_of<R: poset_homology::ring::Ring>(
                g: &chromatic::SimpleGraph,
                alg: &UnitalAlgebra,
                ring: &R,
            ) -> Result<(HomologyResult, i64), Box<dyn std::error::Error>> {
                let (lattice, cp) = chromatic::chromatic_colouring(g, alg, ring)?;
                let cx = cube_complex(&lattice, &cp)?;
                let top = cx.top() as i64;
                let euler: i64 = (0..=top)
                    .map(|k| {
                        let n = cx.rank(k) as i64;
                        if k % 2 == 0 {
                            n
                        } else {
                            -n
                        }
                    })
                    .sum();
                let signed = if top % 2 == 0 { euler } else { -euler };
                Ok((cx.homology()?, signed))
            }
            let (result, signed) = match &spec {
                RingSpec::Integers => homology_of(&g, &alg, &Integers)?,
                RingSpec::Rationals => homology_of(&g, &alg, &Rationals)?,
                RingSpec::PrimeField(p) => homology_of(&g, &alg, &PrimeField::new(*p)?)?,
            };
            let wanted = chromatic::evaluate_polynomial(
                &chromatic::chromatic_polynomial(&g),
                module_rank as i64,
            );
            let ok = signed.to_string() == wanted.to_string();

            let mut tsv = String::from("degree\tbetti\ttorsion\tgroup\n");
            for (n, grp) in result.groups.iter().enumerate() {
                let torsion = if grp.torsion.is_empty() {
                    "-".to_string()
                } else {
                    grp.torsion
                        .iter()
                        .map(|t| t.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                };
                let _ = writeln!(tsv, "{n}\t{}\t{torsion}\t{grp}", grp.betti);
            }
            Ok((tsv, ok))
        };
        match run() {
            Ok((tsv, ok)) => {
                let status = write_string(out, tsv);
                if status != PhomStatus::Ok {
                    return status;
                }
                if ok {
                    PhomStatus::Ok
                } else {
                    set_error("signed Euler characteristic differs from the chromatic polynomial");
                    PhomStatus::CheckFailed
                }
            }
            Err(e) => {
                set_error(e);
                PhomStatus::InvalidInput
            }
        }
    })
}
