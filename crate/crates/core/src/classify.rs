//! Property classification and the surjunctivity verdict.
//!
//! For a nonzero integer Laurent polynomial `f` in `d` variables, the system
//! it defines (the shift-invariant subgroup of `T^(Z^d)` cut out by the
//! relation `sum_m f_m x(n+m) = 0`) is classified along six axes:
//!
//! 1. the dual module is cyclic, `R_d / f R_d` (recorded as a report note);
//! 2. the algebraic descending chain condition holds (always, for cyclic
//!    modules over the Noetherian ring `R_d`);
//! 3. topological entropy equals `|log M(f)|` (Mahler measure);
//! 4. mixing holds iff `f` is not a generalized cyclotomic polynomial,
//!    i.e. not of the form `±u^m · c(u^n)` with `c` cyclotomic and `n != 0`;
//! 5. expansivity holds iff the variety of `f` misses the unit torus;
//! 6. connectedness holds iff the variety is nonempty, which fails exactly
//!    for `f = ±k u^m` with `|k| >= 2`.
//!
//! The verdict then follows two routes: expansive systems are surjunctive
//! (Theorem 2 route), and connected mixing systems are surjunctive via the
//! chain condition and finite entropy (Theorem 3 route). Units `±u^m` give
//! the trivial system `X = {0}`. Everything else is reported Unknown with
//! the blocking facts listed.
//!
//! The implication chain `disconnected => expansive => mixing` is enforced:
//! a report violating it signals an internal bug, never a verdict.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::parse::format_poly;
use crate::torus::{
    self, EntropyMethod, EntropyResult, RootsOfUnityWitness, TorusCertificate, TorusStatus,
};
use crate::univariate::{self, cyclotomic, euler_phi, UnitCircleCertificate, UnivariateIntPoly};

/// Numeric knobs for [`analyze`].
#[derive(Clone, Debug)]
pub struct AnalyzeConfig {
    /// Certification grid per axis for d >= 2 expansivity.
    pub grid: u32,
    /// Outer quadrature grid for d >= 2 entropy.
    pub entropy_grid: u32,
    /// Entropy error target.
    pub tol: f64,
    /// Largest root-of-unity order searched for exact witnesses.
    pub max_rou_order: u32,
    /// Residual below which a refined grid point counts as a witness.
    pub witness_tol: f64,
}

impl Default for AnalyzeConfig {
    fn default() -> Self {
        AnalyzeConfig {
            grid: 64,
            entropy_grid: 256,
            tol: 1e-9,
            max_rou_order: 12,
            witness_tol: torus::DEFAULT_WITNESS_TOL,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Truth {
    True,
    False,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Certainty {
    /// Reproducible bit-identically from exact arithmetic.
    Exact,
    /// Backed by a sound numeric certificate (Lipschitz grid).
    CertifiedNumeric,
    /// Backed by a refined floating-point witness.
    NumericWitness,
}

/// Structured evidence attached to a property value.
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// Decided by inspecting the terms of `f`.
    Syntactic { note: String },
    /// Exact unit-circle root census of the based d = 1 polynomial.
    UnitCircle { certificate: UnitCircleCertificate },
    /// Exact vanishing at a tuple of roots of unity.
    ExactRootOfUnity { witness: RootsOfUnityWitness },
    /// Grid certificate or refined numeric witness on the torus.
    TorusGrid { certificate: TorusCertificate },
    /// Forced by an implication from another property.
    Implied { note: String },
    /// Explanation of an undecided value.
    Inconclusive { note: String },
}

/// A classified property: value, certainty grade, evidence.
/// `certainty` is absent when the value is unknown.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyValue {
    pub value: Truth,
    pub certainty: Option<Certainty>,
    pub evidence: Evidence,
}

impl PropertyValue {
    fn exact(value: Truth, evidence: Evidence) -> Self {
        PropertyValue {
            value,
            certainty: Some(Certainty::Exact),
            evidence,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Surjunctive,
    TriviallySurjunctive,
    Unknown,
}

/// Which sufficient condition closed the argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremRef {
    Theorem2,
    Theorem3,
}

/// One step of the verdict's reasoning chain.
#[derive(Clone, Debug, Serialize)]
pub struct ReasoningStep {
    pub property: String,
    pub value: String,
    pub anchor: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SurjunctivityVerdict {
    pub status: VerdictStatus,
    pub theorem: Option<TheoremRef>,
    pub reasoning: Vec<ReasoningStep>,
    /// Nonempty exactly when `status` is `Unknown`.
    pub blocking: Vec<String>,
}

/// Entropy block of the report. `error` bounds `|log_mahler - log M(f)|`.
#[derive(Clone, Debug, Serialize)]
pub struct EntropyReport {
    pub log_mahler: f64,
    pub h_top: f64,
    pub error: f64,
    pub method: EntropyMethod,
    pub grid_size: u32,
    pub perturbed_nodes: u32,
}

impl From<EntropyResult> for EntropyReport {
    fn from(e: EntropyResult) -> Self {
        EntropyReport {
            log_mahler: e.log_mahler,
            h_top: e.log_mahler.abs(),
            error: e.error_estimate,
            method: e.method,
            grid_size: e.grid_size,
            perturbed_nodes: e.perturbed_nodes,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyTriple {
    pub connected: PropertyValue,
    pub mixing: PropertyValue,
    pub expansive: PropertyValue,
}

/// The full classification of one polynomial.
#[derive(Clone, Debug, Serialize)]
pub struct PropertyReport {
    #[serde(serialize_with = "serialize_poly")]
    pub poly: LaurentPoly,
    pub dim: usize,
    pub properties: PropertyTriple,
    pub entropy: EntropyReport,
    pub is_unit: bool,
    pub is_generalized_cyclotomic: bool,
    pub adcc: PropertyValue,
    pub verdict: SurjunctivityVerdict,
    pub disclaimers: Vec<String>,
}

fn serialize_poly<S: Serializer>(poly: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_poly(poly))
}

impl PropertyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// Connectedness, decided syntactically: the only disconnected systems come
/// from a single term `±k u^m` with `|k| >= 2`. Units `±u^m` give the
/// one-point system, which is connected.
pub fn connectedness(f: &LaurentPoly) -> Result<PropertyValue> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if let Some((_, c)) = f.single_term() {
        if c.abs() > BigInt::from(1) {
            return Ok(PropertyValue::exact(
                Truth::False,
                Evidence::Syntactic {
                    note: format!(
                        "f = {} is a single term +-k*u^m with |k| = {} >= 2; the variety is \
                         empty and the system is the full shift on Z/{}Z",
                        format_poly(f),
                        c.abs(),
                        c.abs()
                    ),
                },
            ));
        }
        return Ok(PropertyValue::exact(
            Truth::True,
            Evidence::Syntactic {
                note: "f is a unit +-u^m: trivial system X = {0}".into(),
            },
        ));
    }
    Ok(PropertyValue::exact(
        Truth::True,
        Evidence::Syntactic {
            note: format!(
                "f has {} terms; the variety is empty only for single terms +-k*u^m with \
                 |k| >= 2, so V_C(f) is nonempty and X is connected",
                f.num_terms()
            ),
        },
    ))
}

/// Witness of the generalized-cyclotomic decomposition
/// `f = sign * u^base * Phi_n(u^(step * direction))`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralizedCyclotomicWitness {
    pub direction: Vec<i64>,
    pub step: u64,
    pub cyclotomic_index: u64,
    pub negated: bool,
}

/// Exact decision of the adopted definition: `f = ±u^m · c(u^n)` for a
/// cyclotomic `c` and `n != 0`. The support must lie on a lattice line; the
/// collapsed univariate polynomial is then tested, for every divisor `b` of
/// the gcd of its exponents, against `±Phi_N` for all `N` with
/// `phi(N) = deg/b` (finitely many, since `phi(N) >= sqrt(N/2)` bounds
/// `N <= 2 deg^2`).
pub fn generalized_cyclotomic_witness(
    f: &LaurentPoly,
) -> Result<Option<GeneralizedCyclotomicWitness>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (_, based) = f.translate_to_base()?;
    let collapse = match based.collapse_collinear() {
        Some(c) => c,
        None => return Ok(None),
    };
    let g = &collapse.poly;
    let deg = g.degree().expect("collapsed polynomial is nonzero");
    if deg == 0 {
        // single term: never of the form ±u^m Phi_n(u^k)
        return Ok(None);
    }
    let mut b0: u64 = 0;
    for (k, c) in g.coeffs().iter().enumerate() {
        if !c.is_zero() {
            b0 = num_integer::gcd(b0, k as u64);
        }
    }
    for b in univariate::divisors(b0) {
        let dhat = deg as u64 / b;
        let mut hat = Vec::with_capacity(dhat as usize + 1);
        for j in 0..=dhat {
            hat.push(g.coeffs()[(j * b) as usize].clone());
        }
        let hat = UnivariateIntPoly::from_coeffs(hat);
        let bound = 2 * dhat * dhat;
        for n in 1..=bound.max(2) {
            if euler_phi(n) != dhat {
                continue;
            }
            let phi = cyclotomic(n);
            if hat == phi {
                return Ok(Some(GeneralizedCyclotomicWitness {
                    direction: collapse.direction.exponents().to_vec(),
                    step: b,
                    cyclotomic_index: n,
                    negated: false,
                }));
            }
            if hat == phi.neg() {
                return Ok(Some(GeneralizedCyclotomicWitness {
                    direction: collapse.direction.exponents().to_vec(),
                    step: b,
                    cyclotomic_index: n,
                    negated: true,
                }));
            }
        }
    }
    Ok(None)
}

/// Boolean form of [`generalized_cyclotomic_witness`].
pub fn is_generalized_cyclotomic(f: &LaurentPoly) -> Result<bool> {
    Ok(generalized_cyclotomic_witness(f)?.is_some())
}

/// Mixing: exactly the negation of the generalized-cyclotomic test.
pub fn mixing(f: &LaurentPoly) -> Result<PropertyValue> {
    let witness = generalized_cyclotomic_witness(f)?;
    Ok(match witness {
        Some(w) => PropertyValue::exact(
            Truth::False,
            Evidence::Syntactic {
                note: format!(
                    "f = {}u^m * Phi_{}(u^({} * {:?})): a generalized cyclotomic polynomial, \
                     so the action is not mixing",
                    if w.negated { "-" } else { "" },
                    w.cyclotomic_index,
                    w.step,
                    w.direction
                ),
            },
        ),
        None => PropertyValue::exact(
            Truth::True,
            Evidence::Syntactic {
                note: "f is not a generalized cyclotomic polynomial (no decomposition \
                       +-u^m * Phi_n(u^k) exists), so the action is mixing"
                    .into(),
            },
        ),
    })
}

/// Expansivity: exact for d = 1 via the unit-circle root census of the based
/// polynomial; for d >= 2, an exact root-of-unity witness is sought first,
/// then the Lipschitz grid certificate.
pub fn expansivity(f: &LaurentPoly, config: &AnalyzeConfig) -> Result<PropertyValue> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.dim() == 1 {
        let (_, based) = f.translate_to_base()?;
        let cert = univariate::unit_circle_roots(&based.to_univariate()?)?;
        let value = if cert.count == 0 { Truth::True } else { Truth::False };
        return Ok(PropertyValue::exact(
            value,
            Evidence::UnitCircle { certificate: cert },
        ));
    }
    if let Some(witness) = torus::roots_of_unity_witness(f, config.max_rou_order)? {
        return Ok(PropertyValue::exact(
            Truth::False,
            Evidence::ExactRootOfUnity { witness },
        ));
    }
    let cert = torus::certify_no_torus_zero(f, config.grid, config.witness_tol)?;
    Ok(match cert.status {
        TorusStatus::CertifiedNoZero => PropertyValue {
            value: Truth::True,
            certainty: Some(Certainty::CertifiedNumeric),
            evidence: Evidence::TorusGrid { certificate: cert },
        },
        TorusStatus::WitnessFound => PropertyValue {
            value: Truth::False,
            certainty: Some(Certainty::NumericWitness),
            evidence: Evidence::TorusGrid { certificate: cert },
        },
        TorusStatus::Inconclusive => PropertyValue {
            value: Truth::Unknown,
            certainty: None,
            evidence: Evidence::TorusGrid { certificate: cert },
        },
    })
}

/// Topological entropy `|log M(f)|` via the Mahler measure.
pub fn entropy(f: &LaurentPoly, config: &AnalyzeConfig) -> Result<EntropyReport> {
    Ok(torus::mahler_multi(f, config.entropy_grid, config.tol)?.into())
}

fn adcc_property() -> PropertyValue {
    PropertyValue::exact(
        Truth::True,
        Evidence::Syntactic {
            note: "the dual module R_d/fR_d is cyclic over the Noetherian ring R_d, so \
                   descending chains of closed invariant subgroups stabilize"
                .into(),
        },
    )
}

fn step(property: &str, value: impl std::fmt::Display, anchor: &str) -> ReasoningStep {
    ReasoningStep {
        property: property.to_string(),
        value: value.to_string(),
        anchor: anchor.to_string(),
    }
}

fn truth_str(t: Truth) -> &'static str {
    match t {
        Truth::True => "true",
        Truth::False => "false",
        Truth::Unknown => "unknown",
    }
}

/// Combine the classified properties into the final verdict.
pub fn verdict(
    is_unit: bool,
    connected: &PropertyValue,
    mixing: &PropertyValue,
    expansive: &PropertyValue,
    is_gc: bool,
) -> SurjunctivityVerdict {
    if is_unit {
        return SurjunctivityVerdict {
            status: VerdictStatus::TriviallySurjunctive,
            theorem: None,
            reasoning: vec![step(
                "is_unit",
                "true",
                "f = +-u^m is a unit, so X = {0} and every self-map is trivially surjective",
            )],
            blocking: vec![],
        };
    }
    if expansive.value == Truth::True {
        let mut reasoning = vec![step(
            "expansive",
            "true",
            "expansive iff V_C(f) avoids the unit torus; expansive algebraic Z^d-actions \
             are surjunctive (Theorem 2 route: periodic points are dense in expansive \
             algebraic systems)",
        )];
        if connected.value == Truth::True {
            reasoning.push(step(
                "connected",
                "true",
                "the Theorem 1 route (connected + expansive) would additionally require \
                 finite topological dimension, which is not verified here; annotation only",
            ));
        }
        reasoning.push(step(
            "surjunctive",
            "true",
            "Theorem 2: expansivity suffices for surjunctivity",
        ));
        return SurjunctivityVerdict {
            status: VerdictStatus::Surjunctive,
            theorem: Some(TheoremRef::Theorem2),
            reasoning,
            blocking: vec![],
        };
    }
    if connected.value == Truth::True && mixing.value == Truth::True {
        let reasoning = vec![
            step(
                "connected",
                "true",
                "connected iff V_C(f) is nonempty (fails only for f = +-k*u^m, |k| >= 2)",
            ),
            step(
                "mixing",
                "true",
                "mixing iff f is not a generalized cyclotomic polynomial",
            ),
            step(
                "adcc",
                "true",
                "cyclic modules over the Noetherian ring R_d satisfy the algebraic \
                 descending chain condition",
            ),
            step(
                "finite_entropy",
                "true",
                "topological entropy equals |log M(f)|, finite for every nonzero f",
            ),
            step(
                "surjunctive",
                "true",
                "Theorem 3: connected + mixing + a.d.c.c. + finite entropy suffice for \
                 surjunctivity",
            ),
        ];
        return SurjunctivityVerdict {
            status: VerdictStatus::Surjunctive,
            theorem: Some(TheoremRef::Theorem3),
            reasoning,
            blocking: vec![],
        };
    }

    let mut blocking = Vec::new();
    if is_gc {
        blocking.push(
            "f is a generalized cyclotomic polynomial, so the action is not mixing".to_string(),
        );
    }
    if mixing.value == Truth::False && !is_gc {
        blocking.push("the action is not mixing".to_string());
    }
    match expansive.value {
        Truth::False => blocking.push(
            "the action is not expansive (the variety of f meets the unit torus)".to_string(),
        ),
        Truth::Unknown => blocking.push(
            "expansivity is undecided: the grid certification was inconclusive".to_string(),
        ),
        Truth::True => {}
    }
    if connected.value == Truth::False {
        blocking.push("X is disconnected".to_string());
    }
    if blocking.is_empty() {
        blocking.push("no sufficient condition applies".to_string());
    }
    let reasoning = vec![
        step(
            "connected",
            truth_str(connected.value),
            "connected iff V_C(f) is nonempty",
        ),
        step(
            "mixing",
            truth_str(mixing.value),
            "mixing iff f is not a generalized cyclotomic polynomial",
        ),
        step(
            "expansive",
            truth_str(expansive.value),
            "expansive iff V_C(f) avoids the unit torus",
        ),
    ];
    SurjunctivityVerdict {
        status: VerdictStatus::Unknown,
        theorem: None,
        reasoning,
        blocking,
    }
}

/// Classify `f` end to end.
///
/// Order of work: syntactic decisions first (connectedness, the
/// generalized-cyclotomic test); if `f` is disconnected, expansivity is set
/// exactly by the implication `disconnected => expansive` before any numeric
/// work; entropy last. The implication chain is re-checked on the way out and
/// a violation aborts with an internal-consistency error.
pub fn analyze(f: &LaurentPoly, config: &AnalyzeConfig) -> Result<PropertyReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let is_unit = f.is_unit_monomial();
    let connected = connectedness(f)?;
    let gc_witness = generalized_cyclotomic_witness(f)?;
    let is_gc = gc_witness.is_some();
    let mixing_value = mixing(f)?;

    let expansive = if connected.value == Truth::False {
        PropertyValue::exact(
            Truth::True,
            Evidence::Implied {
                note: "f = +-k*u^m with |k| >= 2 defines the full shift on the finite \
                       alphabet Z/kZ, which is expansive (disconnected => expansive)"
                    .into(),
            },
        )
    } else {
        expansivity(f, config)?
    };

    if expansive.value == Truth::True && mixing_value.value == Truth::False {
        return Err(Error::Inconsistency(
            "expansive = true but mixing = false: the implication chain \
             expansive => mixing is violated"
                .into(),
        ));
    }
    if connected.value == Truth::False && expansive.value != Truth::True {
        return Err(Error::Inconsistency(
            "disconnected but not expansive: the implication chain is violated".into(),
        ));
    }

    let entropy_report = entropy(f, config)?;
    let verdict = verdict(is_unit, &connected, &mixing_value, &expansive, is_gc);

    Ok(PropertyReport {
        poly: f.clone(),
        dim: f.dim(),
        properties: PropertyTriple {
            connected,
            mixing: mixing_value,
            expansive,
        },
        entropy: entropy_report,
        is_unit,
        is_generalized_cyclotomic: is_gc,
        adcc: adcc_property(),
        verdict,
        disclaimers: vec![
            "irreducibility of f is assumed, not verified; all properties refer to the \
             system defined by the cyclic module R_d/fR_d"
                .to_string(),
            "the mixing criterion is applied in its stated form for irreducible f; for \
             reducible f the verdict may be conservative"
                .to_string(),
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn poly(s: &str) -> LaurentPoly {
        parse_poly(s, None).unwrap()
    }

    fn analyze_default(s: &str) -> PropertyReport {
        analyze(&poly(s), &AnalyzeConfig::default()).unwrap()
    }

    #[test]
    fn connectedness_full_shift() {
        let v = connectedness(&poly("2*u1")).unwrap();
        assert_eq!(v.value, Truth::False);
        assert_eq!(v.certainty, Some(Certainty::Exact));
    }

    #[test]
    fn connectedness_ledrappier() {
        assert_eq!(connectedness(&poly("1+u1+u2")).unwrap().value, Truth::True);
    }

    #[test]
    fn connectedness_furstenberg() {
        assert_eq!(connectedness(&poly("3-2*u1")).unwrap().value, Truth::True);
    }

    #[test]
    fn gc_simple_cyclotomic() {
        // 1 + u1 = Phi_2(u1)
        let w = generalized_cyclotomic_witness(&poly("1+u1")).unwrap().unwrap();
        assert_eq!(w.cyclotomic_index, 2);
        assert_eq!(w.step, 1);
        assert!(!w.negated);
    }

    #[test]
    fn gc_skew_line() {
        // u1 + u2 = u2 * Phi_2(u1 u2^-1)
        let w = generalized_cyclotomic_witness(&poly("u1+u2")).unwrap().unwrap();
        assert_eq!(w.cyclotomic_index, 2);
        assert_eq!(w.direction, vec![1, -1]);
    }

    #[test]
    fn gc_rejects_non_monic() {
        // cyclotomics are monic with constant term +-1
        assert!(!is_generalized_cyclotomic(&poly("3-2*u1")).unwrap());
    }

    #[test]
    fn gc_detects_composition() {
        // 1 + u1^2 + u1^4 = Phi_3(u1^2)
        let w = generalized_cyclotomic_witness(&poly("1+u1^2+u1^4"))
            .unwrap()
            .unwrap();
        assert_eq!(w.cyclotomic_index, 3);
        assert_eq!(w.step, 2);
    }

    #[test]
    fn gc_negated() {
        let w = generalized_cyclotomic_witness(&poly("-1-u1")).unwrap().unwrap();
        assert!(w.negated);
        assert_eq!(w.cyclotomic_index, 2);
    }

    #[test]
    fn gc_phi_one() {
        // u1 - 1 = Phi_1(u1)
        let w = generalized_cyclotomic_witness(&poly("u1-1")).unwrap().unwrap();
        assert_eq!(w.cyclotomic_index, 1);
    }

    #[test]
    fn mixing_examples() {
        assert_eq!(mixing(&poly("1+u1+u2")).unwrap().value, Truth::True);
        assert_eq!(mixing(&poly("1+u1")).unwrap().value, Truth::False);
        assert_eq!(mixing(&poly("2*u1")).unwrap().value, Truth::True);
    }

    #[test]
    fn expansivity_furstenberg_exact() {
        let v = expansivity(&poly("3-2*u1"), &AnalyzeConfig::default()).unwrap();
        assert_eq!(v.value, Truth::True);
        assert_eq!(v.certainty, Some(Certainty::Exact));
    }

    #[test]
    fn expansivity_ledrappier_exact_witness() {
        let v = expansivity(&poly("1+u1+u2"), &AnalyzeConfig::default()).unwrap();
        assert_eq!(v.value, Truth::False);
        assert_eq!(v.certainty, Some(Certainty::Exact));
        match v.evidence {
            Evidence::ExactRootOfUnity { ref witness } => {
                assert!(
                    witness.angles == vec![(1, 3), (2, 3)]
                        || witness.angles == vec![(2, 3), (1, 3)]
                );
            }
            ref other => panic!("expected exact root-of-unity evidence, got {other:?}"),
        }
    }

    #[test]
    fn analyze_full_shift_chain() {
        let r = analyze_default("2*u1");
        assert_eq!(r.properties.connected.value, Truth::False);
        assert_eq!(r.properties.expansive.value, Truth::True);
        assert_eq!(r.properties.mixing.value, Truth::True);
        assert!((r.entropy.h_top - 2.0f64.ln()).abs() < 1e-12);
        assert_eq!(r.verdict.status, VerdictStatus::Surjunctive);
        assert_eq!(r.verdict.theorem, Some(TheoremRef::Theorem2));
    }

    #[test]
    fn analyze_ledrappier() {
        let r = analyze_default("1+u1+u2");
        assert_eq!(r.properties.connected.value, Truth::True);
        assert_eq!(r.properties.expansive.value, Truth::False);
        assert_eq!(r.properties.mixing.value, Truth::True);
        assert!((r.entropy.h_top - 0.3230659).abs() < 1e-4);
        assert_eq!(r.verdict.theorem, Some(TheoremRef::Theorem3));
    }

    #[test]
    fn analyze_unit_is_trivially_surjunctive() {
        let r = analyze_default("u1");
        assert!(r.is_unit);
        assert_eq!(r.verdict.status, VerdictStatus::TriviallySurjunctive);
        assert_eq!(r.verdict.theorem, None);
    }

    #[test]
    fn analyze_blocking_case() {
        let r = analyze_default("1+u1");
        assert!(r.is_generalized_cyclotomic);
        assert_eq!(r.properties.mixing.value, Truth::False);
        assert_eq!(r.properties.expansive.value, Truth::False);
        assert_eq!(r.verdict.status, VerdictStatus::Unknown);
        assert!(!r.verdict.blocking.is_empty());
    }

    #[test]
    fn analyze_rejects_zero() {
        let err = analyze(&LaurentPoly::zero(1), &AnalyzeConfig::default());
        assert!(matches!(err, Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn analyze_is_deterministic() {
        let a = analyze_default("1+u1+u2").to_json();
        let b = analyze_default("1+u1+u2").to_json();
        assert_eq!(a, b);
    }

    #[test]
    fn monomial_rescaling_invariance() {
        let base = analyze_default("1+u1+u2");
        for s in ["u1*u2^-2 + u1^2*u2^-2 + u1*u2^-1", "-1-u1-u2"] {
            let r = analyze_default(s);
            assert_eq!(r.properties.connected.value, base.properties.connected.value, "{s}");
            assert_eq!(r.properties.mixing.value, base.properties.mixing.value, "{s}");
            assert_eq!(r.properties.expansive.value, base.properties.expansive.value, "{s}");
            assert_eq!(r.is_unit, base.is_unit, "{s}");
            assert_eq!(r.is_generalized_cyclotomic, base.is_generalized_cyclotomic, "{s}");
            assert!(
                (r.entropy.h_top - base.entropy.h_top).abs()
                    <= r.entropy.error + base.entropy.error + 1e-9,
                "{s}"
            );
        }
    }

    #[test]
    fn gc_implies_zero_entropy() {
        for s in ["1+u1", "u1+u2", "1+u1^2+u1^4", "u1-1"] {
            let f = poly(s);
            assert!(is_generalized_cyclotomic(&f).unwrap(), "{s}");
            let e = torus::mahler_multi(&f, 64, 1e-3).unwrap();
            assert!(
                e.log_mahler.abs() <= e.error_estimate + 1e-6,
                "{s}: log M = {} +- {}",
                e.log_mahler,
                e.error_estimate
            );
        }
    }
}
