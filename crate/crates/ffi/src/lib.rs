//! C interface to `hyperspec`.
//!
//! Every fallible call returns an [`HsStatus`] and writes its result through
//! an out-pointer. On failure a message for the calling thread is available
//! from [`hs_last_error_message`]. Handles are opaque and owned by the caller,
//! who releases them with the matching `*_free` function. Strings returned by
//! the library are released with [`hs_string_free`].
//!
//! Complex tables cross the boundary as separate real and imaginary arrays of
//! length `2^n`, indexed like the Rust tables.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use hyperspec::construct::{self, ParamSeq};
use hyperspec::format::{self, TableFile};
use hyperspec::spectrum::{self, FourierSpectrum, HypercubeFunction, TableLimit};
use hyperspec::verify::{self, Certificate};
use hyperspec::{Complex64, Error};

/// Table cap used by the command-line tool unless overridden.
pub const HS_DEFAULT_MAX_TABLE_N: u32 = 26;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HsStatus {
    Ok = 0,
    NullPointer = 1,
    /// The requested table exceeds the cap passed in `max_table_n`.
    ResourceLimit = 2,
    InvalidArgument = 3,
    ParseError = 4,
    /// A caller buffer is shorter than the table.
    BufferTooSmall = 5,
    /// A bug inside the library; the message has details.
    Internal = 6,
}

/// Parameter sequence `a_1..a_n`, each in `(0, 1]`.
pub struct HsParams(ParamSeq);

/// Complex-valued function on `{-1, 1}^n`.
pub struct HsFunction(HypercubeFunction);

/// Fourier-Walsh coefficients of a function.
pub struct HsSpectrum(FourierSpectrum);

/// Result of a certification run.
pub struct HsCertificate(Certificate);

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HsStats {
    pub l2_norm: f64,
    pub linf_norm: f64,
    pub influence: f64,
    pub entropy: f64,
    pub total_weight: f64,
}

/// Closed-form statistics of the unnormalized `P_n`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HsClosedForm {
    pub n: usize,
    pub log2_norm_sq: f64,
    pub l2_norm: f64,
    pub linf_lower: f64,
    pub linf_upper: f64,
    pub influence: f64,
    pub log2_influence: f64,
    pub entropy: f64,
    pub log2_entropy: f64,
    pub total_mass: f64,
}

/// Closed-form statistics of the unit-norm `P_n / ||P_n||_2`.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct HsNormalizedClosedForm {
    pub influence: f64,
    pub entropy: f64,
    pub entropy_lower_bound: f64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs removed");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(c));
}

/// Message for the most recent failure on this thread, or NULL if none.
///
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn hs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

struct Failure {
    status: HsStatus,
    message: String,
}

impl Failure {
    fn new(status: HsStatus, message: impl Into<String>) -> Self {
        Self {
            status,
            message: message.into(),
        }
    }

    fn null(what: &str) -> Self {
        Self::new(HsStatus::NullPointer, format!("`{what}` is NULL"))
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::ResourceLimit { .. } => HsStatus::ResourceLimit,
            Error::Parse { .. } => HsStatus::ParseError,
            _ => HsStatus::InvalidArgument,
        };
        Self::new(status, e.to_string())
    }
}

type FfiResult<T> = Result<T, Failure>;

fn guard(body: impl FnOnce() -> FfiResult<()>) -> HsStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => HsStatus::Ok,
        Ok(Err(f)) => {
            set_last_error(&f.message);
            f.status
        }
        Err(payload) => {
            let detail = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(&format!("internal error: {detail}"));
            HsStatus::Internal
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &str) -> FfiResult<&'a T> {
    p.as_ref().ok_or_else(|| Failure::null(what))
}

unsafe fn out_slot<'a, T>(p: *mut T, what: &str) -> FfiResult<&'a mut T> {
    p.as_mut().ok_or_else(|| Failure::null(what))
}

/// `len` doubles at `p`; NULL is accepted only for an empty slice.
unsafe fn doubles<'a>(p: *const f64, len: usize, what: &str) -> FfiResult<&'a [f64]> {
    if len == 0 {
        return Ok(&[]);
    }
    if p.is_null() {
        return Err(Failure::null(what));
    }
    Ok(std::slice::from_raw_parts(p, len))
}

fn limit(max_table_n: u32) -> TableLimit {
    TableLimit::new(max_table_n as usize)
}

fn put_handle<T>(out: &mut *mut T, value: T) {
    *out = Box::into_raw(Box::new(value));
}

fn to_c_string(s: String) -> FfiResult<*mut c_char> {
    CString::new(s)
        .map(CString::into_raw)
        .map_err(|_| Failure::new(HsStatus::Internal, "string contains NUL"))
}

/// Copies `rows` into `re` (and `im` unless NULL); both must hold `len` entries.
unsafe fn copy_rows(rows: &[Complex64], re: *mut f64, im: *mut f64, len: usize) -> FfiResult<()> {
    if len < rows.len() {
        return Err(Failure::new(
            HsStatus::BufferTooSmall,
            format!("buffer holds {len} entries, table has {}", rows.len()),
        ));
    }
    if re.is_null() {
        return Err(Failure::null("re"));
    }
    for (i, z) in rows.iter().enumerate() {
        *re.add(i) = z.re;
        if !im.is_null() {
            *im.add(i) = z.im;
        }
    }
    Ok(())
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn hs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

// ---- parameters ----

/// Parameter sequence from `len` values in `(0, 1]`.
///
/// # Safety
/// `a` must point to `len` doubles (it may be NULL when `len` is 0).
#[no_mangle]
pub unsafe extern "C" fn hs_params_new(
    a: *const f64,
    len: usize,
    out: *mut *mut HsParams,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let values = doubles(a, len, "a")?;
        put_handle(out, HsParams(ParamSeq::new(values.to_vec())?));
        Ok(())
    })
}

/// `a_i = 1/sqrt(n)` for `n >= 1`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_params_theorem(n: usize, out: *mut *mut HsParams) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(out, HsParams(construct::theorem_params(n)?));
        Ok(())
    })
}

/// `a_i = sqrt(a/n)` for `1 < a < n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_params_remark3(n: usize, a: f64, out: *mut *mut HsParams) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(out, HsParams(construct::remark3_params(n, a)?));
        Ok(())
    })
}

/// Number of parameters, or 0 for NULL.
///
/// # Safety
/// `params` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_params_len(params: *const HsParams) -> usize {
    params.as_ref().map_or(0, |p| p.0.len())
}

/// # Safety
/// `params` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_params_free(params: *mut HsParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

// ---- functions ----

/// Function of dimension `n` from `len = 2^n` values. `im` may be NULL for a
/// real function.
///
/// # Safety
/// `re` (and `im` unless NULL) must point to `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hs_function_from_values(
    n: usize,
    re: *const f64,
    im: *const f64,
    len: usize,
    out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let re = doubles(re, len, "re")?;
        let values: Vec<Complex64> = if im.is_null() {
            re.iter().map(|&x| Complex64::new(x, 0.0)).collect()
        } else {
            let im = doubles(im, len, "im")?;
            re.iter()
                .zip(im)
                .map(|(&x, &y)| Complex64::new(x, y))
                .collect()
        };
        put_handle(out, HsFunction(HypercubeFunction::new(n, values)?));
        Ok(())
    })
}

/// Dimension `n`, or 0 for NULL.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_function_n(f: *const HsFunction) -> usize {
    f.as_ref().map_or(0, |f| f.0.n())
}

/// Table length `2^n`, or 0 for NULL.
///
/// # Safety
/// `f` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_function_len(f: *const HsFunction) -> usize {
    f.as_ref().map_or(0, |f| f.0.len())
}

/// Copies the value table. `im` may be NULL to skip imaginary parts.
///
/// # Safety
/// `re` (and `im` unless NULL) must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hs_function_values(
    f: *const HsFunction,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> HsStatus {
    guard(|| copy_rows(borrow(f, "f")?.0.values(), re, im, len))
}

/// # Safety
/// `f` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_function_free(f: *mut HsFunction) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// Both recursion tables `P_n` and `Q_n`.
///
/// # Safety
/// Pointers must be valid; `params` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_build_pq(
    params: *const HsParams,
    max_table_n: u32,
    p_out: *mut *mut HsFunction,
    q_out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let p_out = out_slot(p_out, "p_out")?;
        let q_out = out_slot(q_out, "q_out")?;
        let pq = construct::build_pq(&borrow(params, "params")?.0, limit(max_table_n))?;
        put_handle(p_out, HsFunction(pq.p));
        put_handle(q_out, HsFunction(pq.q));
        Ok(())
    })
}

unsafe fn build_from_params(
    params: *const HsParams,
    out: *mut *mut HsFunction,
    build: impl FnOnce(&ParamSeq) -> hyperspec::Result<HypercubeFunction>,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(out, HsFunction(build(&borrow(params, "params")?.0)?));
        Ok(())
    })
}

/// Real unit-norm `P_n / ||P_n||_2`.
///
/// # Safety
/// Pointers must be valid; `params` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_normalized_real(
    params: *const HsParams,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    build_from_params(params, out, |p| {
        construct::normalized_real(p, limit(max_table_n))
    })
}

/// Modulus-one `(P_n + i Q_n) / (sqrt 2 ||P_n||_2)`.
///
/// # Safety
/// Pointers must be valid; `params` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_unimodular_complex(
    params: *const HsParams,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    build_from_params(params, out, |p| {
        construct::unimodular_complex(p, limit(max_table_n))
    })
}

/// Classical Rudin-Shapiro function `2^{-n/2} P_n` (all `a_i = 1`).
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_classical_normalized(
    n: usize,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(
            out,
            HsFunction(construct::classical_normalized(n, limit(max_table_n))?),
        );
        Ok(())
    })
}

/// `n^{-1/2} sum eps_i`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_normalized_sum(
    n: usize,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(
            out,
            HsFunction(construct::normalized_sum(n, limit(max_table_n))?),
        );
        Ok(())
    })
}

/// `n^{-1/2} sum eps_i` clamped to `[-c, c]`, divided by its L2 norm when
/// `normalize` is set.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_neeman_function(
    n: usize,
    c: f64,
    normalize: bool,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(
            out,
            HsFunction(construct::neeman_function(
                n,
                c,
                normalize,
                limit(max_table_n),
            )?),
        );
        Ok(())
    })
}

/// `(P_n(x), Q_n(x))` at the point whose bit `i-1` set means `eps_i = -1`,
/// without building a table. Needs `n <= 64`.
///
/// # Safety
/// Pointers must be valid; `params` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_evaluate_at(
    params: *const HsParams,
    x: u64,
    p: *mut f64,
    q: *mut f64,
) -> HsStatus {
    guard(|| {
        let p = out_slot(p, "p")?;
        let q = out_slot(q, "q")?;
        let (pv, qv) = construct::evaluate_at(&borrow(params, "params")?.0, x)?;
        *p = pv;
        *q = qv;
        Ok(())
    })
}

// ---- spectra ----

/// `f^(A) = 2^{-n} sum_x f(x) W_A(x)` for every subset mask `A`.
///
/// # Safety
/// Pointers must be valid; `f` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_walsh_transform(
    f: *const HsFunction,
    max_table_n: u32,
    out: *mut *mut HsSpectrum,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(
            out,
            HsSpectrum(spectrum::walsh_transform(
                &borrow(f, "f")?.0,
                limit(max_table_n),
            )?),
        );
        Ok(())
    })
}

/// Rebuilds the function from its coefficients.
///
/// # Safety
/// Pointers must be valid; `s` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_inverse_transform(
    s: *const HsSpectrum,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(
            out,
            HsFunction(spectrum::inverse_transform(
                &borrow(s, "s")?.0,
                limit(max_table_n),
            )?),
        );
        Ok(())
    })
}

/// Number of coefficients `2^n`, or 0 for NULL.
///
/// # Safety
/// `s` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_len(s: *const HsSpectrum) -> usize {
    s.as_ref().map_or(0, |s| s.0.coeffs().len())
}

/// Copies the coefficients. `im` may be NULL to skip imaginary parts.
///
/// # Safety
/// `re` (and `im` unless NULL) must have room for `len` doubles.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_coeffs(
    s: *const HsSpectrum,
    re: *mut f64,
    im: *mut f64,
    len: usize,
) -> HsStatus {
    guard(|| copy_rows(borrow(s, "s")?.0.coeffs(), re, im, len))
}

/// `sum_A |f^(A)|^2 |A|`.
///
/// # Safety
/// `s` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_influence(s: *const HsSpectrum, out: *mut f64) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = spectrum::influence(&borrow(s, "s")?.0);
        Ok(())
    })
}

/// Base-2 entropy of the squared coefficient magnitudes.
///
/// # Safety
/// `s` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_entropy(s: *const HsSpectrum, out: *mut f64) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = spectrum::entropy(&borrow(s, "s")?.0);
        Ok(())
    })
}

/// # Safety
/// `s` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_free(s: *mut HsSpectrum) {
    if !s.is_null() {
        drop(Box::from_raw(s));
    }
}

/// Norms, influence and entropy of `f` by brute force.
///
/// # Safety
/// `f` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_stats(
    f: *const HsFunction,
    max_table_n: u32,
    out: *mut HsStats,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let st = spectrum::stats(&borrow(f, "f")?.0, limit(max_table_n))?;
        *out = HsStats {
            l2_norm: st.l2_norm,
            linf_norm: st.linf_norm,
            influence: st.influence,
            entropy: st.entropy,
            total_weight: st.total_weight,
        };
        Ok(())
    })
}

/// Closed-form statistics of `P_n`; no table is built.
///
/// # Safety
/// `params` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_closed_form(
    params: *const HsParams,
    out: *mut HsClosedForm,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let cf = construct::closed_form(&borrow(params, "params")?.0);
        *out = HsClosedForm {
            n: cf.n,
            log2_norm_sq: cf.log2_norm_sq,
            l2_norm: cf.l2_norm,
            linf_lower: cf.linf_lower,
            linf_upper: cf.linf_upper,
            influence: cf.influence,
            log2_influence: cf.log2_influence,
            entropy: cf.entropy,
            log2_entropy: cf.log2_entropy,
            total_mass: cf.total_mass,
        };
        Ok(())
    })
}

/// Closed-form influence and entropy of `P_n / ||P_n||_2`.
///
/// # Safety
/// `params` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_normalized_closed_form(
    params: *const HsParams,
    out: *mut HsNormalizedClosedForm,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let nc = construct::normalized_closed_form(&borrow(params, "params")?.0);
        *out = HsNormalizedClosedForm {
            influence: nc.influence,
            entropy: nc.entropy,
            entropy_lower_bound: nc.entropy_lower_bound,
        };
        Ok(())
    })
}

// ---- certificates ----

unsafe fn certify(
    out: *mut *mut HsCertificate,
    run: impl FnOnce() -> hyperspec::Result<Certificate>,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        put_handle(out, HsCertificate(run()?));
        Ok(())
    })
}

/// Real unit-norm function with `I < 1` and `H > (n/(n+1)) log2 n`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_certify_theorem1(
    n: usize,
    max_table_n: u32,
    out: *mut *mut HsCertificate,
) -> HsStatus {
    certify(out, || verify::certify_theorem1(n, limit(max_table_n)))
}

/// Modulus-one function with the same bounds.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_certify_theorem2(
    n: usize,
    max_table_n: u32,
    out: *mut *mut HsCertificate,
) -> HsStatus {
    certify(out, || verify::certify_theorem2(n, limit(max_table_n)))
}

/// Modulus-one bounds from the closed form plus a sampled modulus check;
/// works beyond the table cap.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_certify_theorem2_sampled(
    n: usize,
    samples: usize,
    seed: u64,
    out: *mut *mut HsCertificate,
) -> HsStatus {
    certify(out, || verify::certify_theorem2_sampled(n, samples, seed))
}

/// `a/2 < I < a` and `H > (a/2)(log2 n - log2 a)`, brute-forced when `n`
/// fits the cap.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_certify_remark3(
    n: usize,
    a: f64,
    max_table_n: u32,
    out: *mut *mut HsCertificate,
) -> HsStatus {
    certify(out, || verify::certify_remark3(n, a, limit(max_table_n)))
}

/// Zero-mean lift `eps_{n+1} f` of the theorem-1 function.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_certify_remark2(
    n: usize,
    max_table_n: u32,
    out: *mut *mut HsCertificate,
) -> HsStatus {
    certify(out, || verify::certify_remark2(n, limit(max_table_n)))
}

/// Classical Rudin-Shapiro properties.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn hs_certify_classical_rs(
    n: usize,
    max_table_n: u32,
    out: *mut *mut HsCertificate,
) -> HsStatus {
    certify(out, || verify::certify_classical_rs(n, limit(max_table_n)))
}

/// True when every check passed; false for NULL.
///
/// # Safety
/// `cert` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_certificate_passed(cert: *const HsCertificate) -> bool {
    cert.as_ref().is_some_and(|c| c.0.overall)
}

/// Number of checks, or 0 for NULL.
///
/// # Safety
/// `cert` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hs_certificate_check_count(cert: *const HsCertificate) -> usize {
    cert.as_ref().map_or(0, |c| c.0.checks.len())
}

/// JSON rendering; free the result with [`hs_string_free`].
///
/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_certificate_to_json(
    cert: *const HsCertificate,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        let json = serde_json::to_string(&borrow(cert, "cert")?.0)
            .map_err(|e| Failure::new(HsStatus::Internal, e.to_string()))?;
        *out = to_c_string(json)?;
        Ok(())
    })
}

/// Key-value text rendering, one check per line; free with [`hs_string_free`].
///
/// # Safety
/// `cert` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_certificate_to_text(
    cert: *const HsCertificate,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = to_c_string(borrow(cert, "cert")?.0.to_text())?;
        Ok(())
    })
}

/// # Safety
/// `cert` must be NULL or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn hs_certificate_free(cert: *mut HsCertificate) {
    if !cert.is_null() {
        drop(Box::from_raw(cert));
    }
}

// ---- text files ----

/// Table file text (`n=<n> kind=<real|complex>` header, one row per point).
///
/// # Safety
/// `f` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_function_to_text(
    f: *const HsFunction,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = to_c_string(format::write_function(&borrow(f, "f")?.0))?;
        Ok(())
    })
}

/// Spectrum file text (`kind=spectrum`, two columns).
///
/// # Safety
/// `s` must be a live handle and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_spectrum_to_text(
    s: *const HsSpectrum,
    out: *mut *mut c_char,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        *out = to_c_string(format::write_spectrum(&borrow(s, "s")?.0))?;
        Ok(())
    })
}

/// Parses a `real` or `complex` table file.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` valid.
#[no_mangle]
pub unsafe extern "C" fn hs_function_from_text(
    text: *const c_char,
    max_table_n: u32,
    out: *mut *mut HsFunction,
) -> HsStatus {
    guard(|| {
        let out = out_slot(out, "out")?;
        if text.is_null() {
            return Err(Failure::null("text"));
        }
        let text = CStr::from_ptr(text)
            .to_str()
            .map_err(|_| Failure::new(HsStatus::ParseError, "text is not UTF-8"))?;
        match format::parse_table(text, limit(max_table_n))? {
            TableFile::Function { function, .. } => put_handle(out, HsFunction(function)),
            TableFile::Spectrum(_) => {
                return Err(Failure::new(
                    HsStatus::InvalidArgument,
                    "expected a function table, found a spectrum",
                ))
            }
        }
        Ok(())
    })
}
