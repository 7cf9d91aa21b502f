//! Closed-form Seidel spectra of `D_m(G)`, `D_m*(G)` and their compositions, and
//! per-instance certificates for the equienergy criterion.
//!
//! If `S(G)` has eigenvalues `σ_1..σ_n` then
//!
//! * `D_m(G)` has `{mσ_i + (m-1)} ∪ {-1^(mn-n)}`,
//! * `D_m*(G)` has `{mσ_i - (m-1)} ∪ {1^(mn-n)}`,
//!
//! and when every `|σ_i| >= (m-1)/m` the two energies agree exactly when `G` has as many
//! positive as negative Seidel eigenvalues. The same holds one level up for
//! `D_m*(D_m(G))` and `D_m(D_m*(G))` with the bound `((m-1)/m)^2`.

use serde::{Deserialize, Serialize};

use crate::charpoly::{charpoly_exact, integer_root_multiplicity, IntPolynomial};
use crate::eigen::Spectrum;
use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::graph::{d_m_star_with_cap, d_m_with_cap, Graph};
use crate::graph6::graph_to_graph6;
use crate::spectral::{seidel_matrix, seidel_spectrum, Inertia};
use crate::tol::{DEFAULT_MAX_DIM, ENERGY_TOL, EXACT_MAX_ORDER, NUM_TOL, ZERO_TOL};

/// An integer eigenvalue block `value^multiplicity`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaddingBlock {
    pub value: i64,
    pub multiplicity: usize,
}

/// Predicted spectrum of a constructed graph: the images `scale·σ_i + shift` of the
/// Seidel eigenvalues of `G`, plus integer padding blocks.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClosedFormSpectrum {
    pub mapped: Vec<f64>,
    pub padding: Vec<PaddingBlock>,
    pub m: usize,
    pub order: usize,
    pub scale: i64,
    pub shift: i64,
}

#[derive(Clone, Copy)]
enum Blowup {
    /// `D_m`: `x -> m x + (m-1)`, padding `-1`.
    Plain,
    /// `D_m*`: `x -> m x - (m-1)`, padding `+1`.
    Star,
}

impl ClosedFormSpectrum {
    fn base(sigma: &Spectrum, n: usize, m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "m must be at least 2, got {m}"
            )));
        }
        if sigma.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: sigma.len(),
            });
        }
        Ok(Self {
            mapped: sigma.values.clone(),
            padding: Vec::new(),
            m,
            order: n,
            scale: 1,
            shift: 0,
        })
    }

    /// Spectrum of the blow-up of a graph whose spectrum is `self`.
    fn blow_up(self, kind: Blowup) -> Self {
        let m = self.m as i64;
        let (shift, pad) = match kind {
            Blowup::Plain => (m - 1, -1),
            Blowup::Star => (-(m - 1), 1),
        };
        let map = |x: f64| m as f64 * x + shift as f64;
        let mut padding: Vec<PaddingBlock> = self
            .padding
            .iter()
            .map(|b| PaddingBlock {
                value: m * b.value + shift,
                multiplicity: b.multiplicity,
            })
            .collect();
        padding.push(PaddingBlock {
            value: pad,
            multiplicity: self.m * self.order - self.order,
        });
        Self {
            mapped: self.mapped.into_iter().map(map).collect(),
            padding,
            m: self.m,
            order: self.m * self.order,
            scale: m * self.scale,
            shift: m * self.shift + shift,
        }
    }

    /// All predicted eigenvalues, sorted descending.
    pub fn values(&self) -> Vec<f64> {
        let mut v = self.mapped.clone();
        for b in &self.padding {
            v.extend(std::iter::repeat_n(b.value as f64, b.multiplicity));
        }
        v.sort_by(|a, b| b.total_cmp(a));
        v
    }

    pub fn to_spectrum(&self) -> Spectrum {
        Spectrum::from_values(self.values())
    }

    pub fn energy(&self) -> f64 {
        self.mapped.iter().map(|x| x.abs()).sum::<f64>()
            + self
                .padding
                .iter()
                .map(|b| b.value.unsigned_abs() as f64 * b.multiplicity as f64)
                .sum::<f64>()
    }

    pub fn len(&self) -> usize {
        self.mapped.len() + self.padding.iter().map(|b| b.multiplicity).sum::<usize>()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Distinct padding values with their summed multiplicities.
    pub fn padding_totals(&self) -> Vec<PaddingBlock> {
        let mut out: Vec<PaddingBlock> = Vec::new();
        for b in &self.padding {
            match out.iter_mut().find(|o| o.value == b.value) {
                Some(o) => o.multiplicity += b.multiplicity,
                None => out.push(*b),
            }
        }
        out
    }
}

/// Closed-form spectrum of `D_m(G)` from the Seidel spectrum of `G`.
pub fn lemma1_spectrum(sigma: &Spectrum, m: usize, n: usize) -> Result<ClosedFormSpectrum> {
    Ok(ClosedFormSpectrum::base(sigma, n, m)?.blow_up(Blowup::Plain))
}

/// Closed-form spectrum of `D_m*(G)`. The `+1` padding has multiplicity `mn - n`.
pub fn lemma2_spectrum(sigma: &Spectrum, m: usize, n: usize) -> Result<ClosedFormSpectrum> {
    Ok(ClosedFormSpectrum::base(sigma, n, m)?.blow_up(Blowup::Star))
}

/// Closed-form spectra of `(D_m*(D_m(G)), D_m(D_m*(G)))`.
pub fn theorem2_spectra(
    sigma: &Spectrum,
    m: usize,
    n: usize,
) -> Result<(ClosedFormSpectrum, ClosedFormSpectrum)> {
    let base = ClosedFormSpectrum::base(sigma, n, m)?;
    let left = base.clone().blow_up(Blowup::Plain).blow_up(Blowup::Star);
    let right = base.blow_up(Blowup::Star).blow_up(Blowup::Plain);
    Ok((left, right))
}

/// Returns `(equienergetic, |SE(g1) - SE(g2)|)`, with equality judged relative to
/// `max(1, SE(g1))`.
pub fn check_equienergetic(g1: &Graph, g2: &Graph, energy_tol: f64) -> Result<(bool, f64)> {
    let e1 = seidel_spectrum(g1)?.energy();
    let e2 = seidel_spectrum(g2)?.energy();
    let delta = (e1 - e2).abs();
    Ok((energies_match(e1, delta, energy_tol), delta))
}

fn energies_match(e1: f64, delta: f64, energy_tol: f64) -> bool {
    delta <= energy_tol * e1.max(1.0)
}

/// Same order and sorted Seidel spectra equal within `num_tol`.
pub fn check_cospectral(g1: &Graph, g2: &Graph, num_tol: f64) -> Result<bool> {
    if g1.n() != g2.n() {
        return Ok(false);
    }
    Ok(seidel_spectrum(g1)?.approx_eq(&seidel_spectrum(g2)?, num_tol))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub m: usize,
    pub power: u32,
    /// `((m-1)/m)^power`.
    pub bound: f64,
    pub min_abs_eigenvalue: f64,
    pub inertia: Inertia,
    pub balanced: bool,
    /// `min_abs_eigenvalue >= bound - zero_tol`.
    pub bound_met: bool,
    /// `balanced && bound_met`.
    pub satisfied: bool,
    /// `min_abs_eigenvalue` lies within `zero_tol` of the bound.
    pub boundary: bool,
    pub margin: f64,
}

impl HypothesisReport {
    fn from_spectrum(sigma: &Spectrum, m: usize, power: u32, zero_tol: f64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidParameter(format!(
                "m must be at least 2, got {m}"
            )));
        }
        if !(1..=2).contains(&power) {
            return Err(Error::InvalidParameter(format!(
                "power must be 1 or 2, got {power}"
            )));
        }
        let bound = ((m - 1) as f64 / m as f64).powi(power as i32);
        let min_abs_eigenvalue = sigma.min_abs();
        let inertia = Inertia::of_values(&sigma.values, zero_tol);
        let balanced = inertia.is_balanced();
        let bound_met = min_abs_eigenvalue >= bound - zero_tol;
        Ok(Self {
            m,
            power,
            bound,
            min_abs_eigenvalue,
            inertia,
            balanced,
            bound_met,
            satisfied: balanced && bound_met,
            boundary: (min_abs_eigenvalue - bound).abs() <= zero_tol,
            margin: min_abs_eigenvalue - bound,
        })
    }
}

/// Checks `|σ_i| >= ((m-1)/m)^power` for all Seidel eigenvalues and balanced inertia.
pub fn check_hypothesis(g: &Graph, m: usize, power: u32) -> Result<HypothesisReport> {
    HypothesisReport::from_spectrum(&seidel_spectrum(g)?, m, power, ZERO_TOL)
}

/// Outcome of a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Hypothesis satisfied and the two graphs are equienergetic.
    Equienergetic,
    /// Bound met with unbalanced inertia, and the energies differ.
    NotEquienergetic,
    /// Bound not met; energies are recorded without a prediction.
    NoClaim,
    /// A predicted identity failed; see `Certificate::violations`.
    Violation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub theorem: u8,
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub construction_a: String,
    pub construction_b: String,
    pub hypothesis: HypothesisReport,
    pub input_spectrum: Spectrum,
    pub spectrum_a: Spectrum,
    pub spectrum_b: Spectrum,
    pub closed_a: ClosedFormSpectrum,
    pub closed_b: ClosedFormSpectrum,
    pub energy_a: f64,
    pub energy_b: f64,
    pub energy_delta: f64,
    pub equienergetic: bool,
    pub cospectral: bool,
    pub closed_form_agrees: bool,
    /// Whether the exact characteristic polynomial check ran.
    pub exact_checked: bool,
    /// Padding multiplicities confirmed by exact polynomial division. False when the
    /// check did not run.
    pub exact_multiplicities_verified: bool,
    pub boundary: bool,
    /// Hypothesis satisfied but the two graphs turned out cospectral.
    pub noncospectral_counterexample: bool,
    pub verdict: Verdict,
    pub violations: Vec<String>,
}

impl Certificate {
    pub fn is_violation(&self) -> bool {
        self.verdict == Verdict::Violation
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let h = &self.hypothesis;
        writeln!(
            f,
            "theorem {}  G = {}  n = {}  m = {}",
            self.theorem, self.graph, self.n, self.m
        )?;
        writeln!(f, "Spec_s(G)        = {}", self.input_spectrum)?;
        writeln!(
            f,
            "hypothesis       : min|σ| = {} vs bound {} (margin {}), inertia {}, {}",
            fmt_num(h.min_abs_eigenvalue),
            fmt_num(h.bound),
            fmt_num(h.margin),
            h.inertia,
            if h.satisfied {
                "satisfied"
            } else if h.bound_met {
                "bound met, unbalanced"
            } else {
                "bound not met"
            }
        )?;
        for (name, numeric, closed, energy) in [
            (
                &self.construction_a,
                &self.spectrum_a,
                &self.closed_a,
                self.energy_a,
            ),
            (
                &self.construction_b,
                &self.spectrum_b,
                &self.closed_b,
                self.energy_b,
            ),
        ] {
            writeln!(f, "{name:<16} = {numeric}")?;
            writeln!(f, "{:<16} = {}", "  closed form", closed.to_spectrum())?;
            writeln!(f, "{:<16} = {}", "  energy", fmt_num(energy))?;
        }
        writeln!(f, "energy delta     = {}", fmt_num(self.energy_delta))?;
        writeln!(
            f,
            "equienergetic {}  cospectral {}  closed form agrees {}  exact {}",
            self.equienergetic,
            self.cospectral,
            self.closed_form_agrees,
            if self.exact_checked {
                if self.exact_multiplicities_verified {
                    "verified"
                } else {
                    "FAILED"
                }
            } else {
                "not run"
            }
        )?;
        if self.boundary {
            writeln!(f, "boundary: min|σ| within zero_tol of the bound")?;
        }
        write!(f, "verdict: {:?}", self.verdict)?;
        for v in &self.violations {
            write!(f, "\n  violation: {v}")?;
        }
        Ok(())
    }
}

/// Knobs for certification; `Default` uses the crate tolerances.
#[derive(Debug, Clone, PartialEq)]
pub struct CertifyOptions {
    pub max_dim: usize,
    pub exact_verify: bool,
    pub exact_max_order: usize,
    pub num_tol: f64,
    pub zero_tol: f64,
    pub energy_tol: f64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        Self {
            max_dim: DEFAULT_MAX_DIM,
            exact_verify: true,
            exact_max_order: EXACT_MAX_ORDER,
            num_tol: NUM_TOL,
            zero_tol: ZERO_TOL,
            energy_tol: ENERGY_TOL,
        }
    }
}

/// Certifies `D_m(G)` against `D_m*(G)` with default options.
pub fn certify_theorem1(g: &Graph, m: usize) -> Result<Certificate> {
    certify_theorem1_with(g, m, &CertifyOptions::default())
}

pub fn certify_theorem1_with(g: &Graph, m: usize, opts: &CertifyOptions) -> Result<Certificate> {
    let sigma = seidel_spectrum(g)?;
    certify_from_spectrum(g, sigma, m, 1, opts)
}

/// Certifies `D_m*(D_m(G))` against `D_m(D_m*(G))` with default options.
pub fn certify_theorem2(g: &Graph, m: usize) -> Result<Certificate> {
    certify_theorem2_with(g, m, &CertifyOptions::default())
}

pub fn certify_theorem2_with(g: &Graph, m: usize, opts: &CertifyOptions) -> Result<Certificate> {
    let sigma = seidel_spectrum(g)?;
    certify_from_spectrum(g, sigma, m, 2, opts)
}

/// Order of the graphs built for `theorem` from an `n`-vertex input, or `None` on overflow.
pub fn constructed_order(n: usize, m: usize, theorem: u8) -> Option<usize> {
    (0..theorem).try_fold(n, |acc, _| acc.checked_mul(m))
}

pub(crate) fn certify_from_spectrum(
    g: &Graph,
    sigma: Spectrum,
    m: usize,
    theorem: u8,
    opts: &CertifyOptions,
) -> Result<Certificate> {
    g.require_simple()?;
    let n = g.n();
    let hypothesis = HypothesisReport::from_spectrum(&sigma, m, u32::from(theorem), opts.zero_tol)?;
    let order = constructed_order(n, m, theorem).unwrap_or(usize::MAX);
    if order > opts.max_dim {
        return Err(Error::DimensionOverflow {
            requested: order,
            max: opts.max_dim,
        });
    }

    let cap = opts.max_dim;
    let (graph_a, graph_b, closed_a, closed_b, names) = match theorem {
        1 => (
            d_m_with_cap(g, m, cap)?,
            d_m_star_with_cap(g, m, cap)?,
            lemma1_spectrum(&sigma, m, n)?,
            lemma2_spectrum(&sigma, m, n)?,
            ("D_m(G)", "D_m*(G)"),
        ),
        2 => {
            let (left, right) = theorem2_spectra(&sigma, m, n)?;
            (
                d_m_star_with_cap(&d_m_with_cap(g, m, cap)?, m, cap)?,
                d_m_with_cap(&d_m_star_with_cap(g, m, cap)?, m, cap)?,
                left,
                right,
                ("D_m*(D_m(G))", "D_m(D_m*(G))"),
            )
        }
        other => {
            return Err(Error::InvalidParameter(format!(
                "theorem must be 1 or 2, got {other}"
            )))
        }
    };

    let spectrum_a = seidel_spectrum(&graph_a)?;
    let spectrum_b = seidel_spectrum(&graph_b)?;
    let energy_a = spectrum_a.energy();
    let energy_b = spectrum_b.energy();
    let energy_delta = (energy_a - energy_b).abs();
    let equienergetic = energies_match(energy_a, energy_delta, opts.energy_tol);
    let cospectral = spectrum_a.approx_eq(&spectrum_b, opts.num_tol);
    let agrees = |numeric: &Spectrum, closed: &ClosedFormSpectrum| {
        let predicted = Spectrum {
            values: closed.values(),
            groups: Vec::new(),
            near_degenerate: false,
        };
        numeric.approx_eq(&predicted, opts.num_tol)
    };
    let closed_form_agrees = agrees(&spectrum_a, &closed_a) && agrees(&spectrum_b, &closed_b);

    let mut violations = Vec::new();
    if !closed_form_agrees {
        violations.push("numeric spectra disagree with the closed forms".to_string());
    }

    let exact_checked = opts.exact_verify && order <= opts.exact_max_order;
    let mut exact_multiplicities_verified = false;
    if exact_checked {
        let base = charpoly_exact(&seidel_matrix(g)?);
        let ok_a = padding_multiplicities_hold(&graph_a, &closed_a, &base)?;
        let ok_b = padding_multiplicities_hold(&graph_b, &closed_b, &base)?;
        exact_multiplicities_verified = ok_a && ok_b;
        if !exact_multiplicities_verified {
            violations
                .push("exact padding multiplicities differ from the closed forms".to_string());
        }
    }

    let mut verdict = if hypothesis.satisfied {
        if !equienergetic {
            violations.push(format!(
                "hypothesis satisfied but energies differ by {energy_delta:e}"
            ));
        }
        Verdict::Equienergetic
    } else if hypothesis.bound_met {
        if equienergetic {
            violations.push("bound met with unbalanced inertia but energies agree".to_string());
        }
        Verdict::NotEquienergetic
    } else {
        Verdict::NoClaim
    };
    if !violations.is_empty() {
        verdict = Verdict::Violation;
    }

    Ok(Certificate {
        theorem,
        graph: graph_to_graph6(g)?,
        n,
        m,
        construction_a: names.0.to_string(),
        construction_b: names.1.to_string(),
        boundary: hypothesis.boundary,
        noncospectral_counterexample: hypothesis.satisfied && cospectral,
        hypothesis,
        input_spectrum: sigma,
        spectrum_a,
        spectrum_b,
        closed_a,
        closed_b,
        energy_a,
        energy_b,
        energy_delta,
        equienergetic,
        cospectral,
        closed_form_agrees,
        exact_checked,
        exact_multiplicities_verified,
        verdict,
        violations,
    })
}

/// Expected exact multiplicity of each padding value `r`: the padding blocks plus the
/// mapped eigenvalues landing on `r`, i.e. the multiplicity of `(r - shift) / scale` as a
/// root of the charpoly of `G` when that quotient is an integer.
fn padding_multiplicities_hold(
    constructed: &Graph,
    closed: &ClosedFormSpectrum,
    base_charpoly: &IntPolynomial,
) -> Result<bool> {
    let p = charpoly_exact(&seidel_matrix(constructed)?);
    Ok(closed.padding_totals().iter().all(|b| {
        let offset = b.value - closed.shift;
        let from_mapped = if offset % closed.scale == 0 {
            integer_root_multiplicity(base_charpoly, offset / closed.scale)
        } else {
            0
        };
        integer_root_multiplicity(&p, b.value) == b.multiplicity + from_mapped
    }))
}
