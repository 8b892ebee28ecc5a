//! End-to-end detection: build the candidate, certify it lies in `h_{g,1}(k)`
//! and is `Sp`-maximal, contract, and compare with the projected seed.

use serde::Serialize;

use crate::combinatorics::{mult_sp_in_module, Partition, Source};
use crate::error::{Error, Result};
use crate::free_lie::{closed_form_phi_unchecked, is_in_h, phi_candidate_unchecked, Family};
use crate::rational::{to_pq, Coeff};
use crate::tensor::{cont_k, cyclic_project, CyclicVector, SparseTensor, SymplecticSpace};
use crate::watermark;
use crate::weights::{is_maximal, Mode, Weight};

pub const SCHEMA_VERSION: u32 = 1;

pub const DISCLAIMER: &str = "A detected component lies in the cokernel. \
The contraction c_k is not claimed to see the whole cokernel: in degree 6 its \
image misses part of the Sp-invariant subspace.";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Detected,
    NotDetected,
    Inconsistent,
}

/// Multiplicities of the family's `Sp` irreducible in `h_{g,1}(k)` and in
/// the cyclic quotient `C_{2g}(k)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UniquenessContext {
    pub mult_in_h: u64,
    pub mult_in_cyclic: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct DetectionReport {
    pub schema_version: u32,
    pub family: Family,
    pub k: usize,
    pub g: usize,
    pub in_h: bool,
    pub maximal: bool,
    /// `Sp` weight of the candidate, when maximal.
    pub weight: Option<Weight>,
    pub contraction_image: CyclicVector,
    /// `c` with `contraction_image = c · pr(seed)`, as `"p/q"`.
    pub scalar: Option<String>,
    pub verdict: Verdict,
    pub closed_form_agrees: bool,
    pub candidate_terms: usize,
    pub out_of_theorem_range: bool,
    pub uniqueness: Option<UniquenessContext>,
    pub disclaimer: &'static str,
}

impl DetectionReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// The highest weight as a partition, e.g. `[1,1,1,1,1]`.
    pub fn weight_partition(&self) -> Option<Partition> {
        self.weight.as_ref().and_then(Weight::to_partition)
    }
}

fn family_shape(family: Family, k: usize) -> Partition {
    match family {
        Family::Power => Partition::row(k),
        Family::Wedge => Partition::column(k),
    }
}

/// `(mult in h_{g,1}(k), mult in C_{2g}(k))` of `[k]` or `[1^k]`.
pub fn uniqueness_context(family: Family, k: usize, g: usize) -> Result<UniquenessContext> {
    let shape = family_shape(family, k);
    Ok(UniquenessContext {
        mult_in_h: mult_sp_in_module(&shape, Source::H, k, g)?,
        mult_in_cyclic: mult_sp_in_module(&shape, Source::Cyclic, k, g)?,
    })
}

/// Runs the pipeline inside the theorem range.
pub fn detect(family: Family, k: usize, g: usize) -> Result<DetectionReport> {
    family.check_range(k, g)?;
    run(family, k, g, false)
}

/// Runs the pipeline for any `k ≥ 1`, flagging reports outside the theorem range.
pub fn detect_forced(family: Family, k: usize, g: usize) -> Result<DetectionReport> {
    let out_of_range = family.check_range(k, g).is_err();
    run(family, k, g, out_of_range)
}

fn run(family: Family, k: usize, g: usize, out_of_theorem_range: bool) -> Result<DetectionReport> {
    let phi = phi_candidate_unchecked(family, k, g)?;
    assess(family, k, g, &phi, out_of_theorem_range)
}

/// Full report for a supplied candidate, including the cross-check against
/// the closed form and the multiplicity context.
pub fn assess(family: Family, k: usize, g: usize, phi: &SparseTensor, out_of_theorem_range: bool) -> Result<DetectionReport> {
    let closed = closed_form_phi_unchecked(family, k, g)?;
    let mut report = evaluate(family, k, g, phi)?;
    report.closed_form_agrees = *phi == closed;
    // Outside the theorem range the closed form is not expected to hold.
    if !report.closed_form_agrees && !out_of_theorem_range {
        report.verdict = Verdict::Inconsistent;
    }
    report.out_of_theorem_range = out_of_theorem_range;
    report.uniqueness = if g >= k + 2 { Some(uniqueness_context(family, k, g)?) } else { None };
    Ok(report)
}

/// Membership, maximality and contraction stages on a given candidate.
/// `closed_form_agrees` is left `true` and `uniqueness` empty.
pub fn evaluate(family: Family, k: usize, g: usize, phi: &SparseTensor) -> Result<DetectionReport> {
    if phi.degree() != k + 2 {
        return Err(Error::DegreeMismatch { expected: k + 2, found: phi.degree() });
    }
    let space = SymplecticSpace::new(g)?;
    let in_h = is_in_h(phi, k)?;
    watermark::check()?;
    let (maximal, weight) = match is_maximal(phi, Mode::Sp) {
        Ok(res) => res,
        Err(Error::ZeroTensor) => (false, None),
        Err(e) => return Err(e),
    };
    let contraction_image = cyclic_project(&cont_k(phi)?);
    watermark::check()?;
    let seed = cyclic_project(&family.seed(space, k)?);
    let scalar: Option<Coeff> = if contraction_image.is_zero() { None } else { contraction_image.ratio_to(&seed) };
    let verdict = if in_h && maximal && !contraction_image.is_zero() {
        Verdict::Detected
    } else {
        Verdict::NotDetected
    };
    Ok(DetectionReport {
        schema_version: SCHEMA_VERSION,
        family,
        k,
        g,
        in_h,
        maximal,
        weight,
        candidate_terms: phi.len(),
        contraction_image,
        scalar: scalar.as_ref().map(to_pq),
        verdict,
        closed_form_agrees: true,
        out_of_theorem_range: false,
        uniqueness: None,
        disclaimer: DISCLAIMER,
    })
}
