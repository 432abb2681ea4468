//! Verification predicates for the static ordering results: the
//! utilitarian-vs-Negishi price comparison and its benefit/cost form, the
//! differentiated price ordering, the aggregate abatement comparison, and
//! the bracketing of both uniform prices by the regions' preferred prices.
//!
//! Each result is a biconditional between a price ordering and a
//! discriminant built from marginal damages, cost curvatures and marginal
//! utilities. Strict inequalities cannot be certified at machine precision,
//! so instances whose discriminating quantities sit inside a relative tie
//! band are reported indeterminate rather than pass/fail.

use super::{solve_all_regimes, PriceSolution, RegimeSet, SolveError};
use crate::econ::EconomyStatic;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PropositionVerdict {
    Pass,
    Fail,
    Indeterminate,
}

use PropositionVerdict::{Fail, Indeterminate, Pass};

/// Outcome of evaluating all static propositions on one economy.
#[derive(Debug, Clone)]
pub struct StaticPropositionReport {
    pub regimes: RegimeSet,
    /// All six prices agree within `10 * tol`; every verdict is then
    /// indeterminate by construction.
    pub prices_coincide: bool,
    pub prop1: PropositionVerdict,
    pub corollary1: PropositionVerdict,
    pub lemma1: PropositionVerdict,
    pub prop2: PropositionVerdict,
    pub lemma2: PropositionVerdict,
    pub prop3: PropositionVerdict,
    /// Relative price gap `(tau_check - tau_tilde) / scale`.
    pub price_gap: f64,
    /// Relative discriminants of the three sign tests.
    pub disc_prop1: f64,
    pub disc_prop2: f64,
    pub disc_prop3: f64,
}

impl StaticPropositionReport {
    pub fn verdicts(&self) -> [(&'static str, PropositionVerdict); 6] {
        [
            ("prop1", self.prop1),
            ("corollary1", self.corollary1),
            ("lemma1", self.lemma1),
            ("prop2", self.prop2),
            ("lemma2", self.lemma2),
            ("prop3", self.prop3),
        ]
    }

    pub fn any_failure(&self) -> bool {
        self.verdicts().iter().any(|(_, v)| *v == Fail)
    }

    /// One diagnostics row: seed, the six prices, discriminants, verdicts.
    pub fn csv_row(&self, seed: u64) -> String {
        let r = &self.regimes;
        let v = |p: PropositionVerdict| match p {
            Pass => "pass",
            Fail => "fail",
            Indeterminate => "indeterminate",
        };
        format!(
            "{seed},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.12e},{:.6e},{:.6e},{:.6e},{},{},{},{},{},{},{}",
            r.negishi.tau(),
            r.utilitarian_uniform.tau(),
            r.utilitarian_differentiated.tau_north,
            r.utilitarian_differentiated.tau_south,
            r.preferred_north.tau(),
            r.preferred_south.tau(),
            self.disc_prop1,
            self.disc_prop2,
            self.disc_prop3,
            v(self.prop1),
            v(self.corollary1),
            v(self.lemma1),
            v(self.prop2),
            v(self.lemma2),
            v(self.prop3),
            self.prices_coincide,
        )
    }
}

pub fn diagnostics_csv_header() -> &'static str {
    "seed,tau_negishi,tau_util_uniform,tau_util_diff_north,tau_util_diff_south,\
     tau_preferred_north,tau_preferred_south,disc_prop1,disc_prop2,disc_prop3,\
     prop1,corollary1,lemma1,prop2,lemma2,prop3,coincide"
}

fn sign_match(lhs: f64, rhs: f64, band: f64) -> PropositionVerdict {
    if lhs.abs() < band || rhs.abs() < band {
        Indeterminate
    } else if lhs.signum() == rhs.signum() {
        Pass
    } else {
        Fail
    }
}

fn all_positive(gaps: &[f64], band: f64) -> PropositionVerdict {
    if gaps.iter().any(|g| g.abs() < band) {
        Indeterminate
    } else if gaps.iter().all(|g| *g > 0.0) {
        Pass
    } else {
        Fail
    }
}

/// Evaluates every proposition on one economy. `band` is the relative tie
/// band; `tol` the solver tolerance.
pub fn check_static_propositions(
    econ: &EconomyStatic,
    tol: f64,
    band: f64,
) -> Result<StaticPropositionReport, SolveError> {
    let regimes = solve_all_regimes(econ, tol)?;
    let RegimeSet {
        negishi,
        utilitarian_uniform: uni,
        utilitarian_differentiated: diff,
        preferred_north: pref_n,
        preferred_south: pref_s,
    } = &regimes;

    let prices = [
        negishi.tau(),
        uni.tau(),
        diff.tau_north,
        diff.tau_south,
        pref_n.tau(),
        pref_s.tau(),
    ];
    let tau_scale = prices.iter().fold(1e-300_f64, |m, p| m.max(p.abs()));
    let spread = prices.iter().fold(0.0_f64, |m, p| {
        m.max(prices.iter().fold(0.0_f64, |mm, q| mm.max((p - q).abs())))
    });
    let prices_coincide = spread <= 10.0 * tol * tau_scale.max(1.0);

    let price_gap = (uni.tau() - negishi.tau()) / tau_scale;

    let cpp_ratio_ns = econ.north.cost.curvature() / econ.south.cost.curvature();

    // Discriminant of the uniform comparison: marginal damage ratio against
    // cost curvature ratio, both at the utilitarian uniform solution.
    let d_slope_n = econ.north.damage.slope(uni.global_abatement());
    let d_slope_s = econ.south.damage.slope(uni.global_abatement());
    let disc_prop1 = (d_slope_s / d_slope_n) / cpp_ratio_ns - 1.0;
    let prop1 = sign_match(price_gap, disc_prop1, band);

    let corollary1 = corollary1_verdict(econ, uni, price_gap, band);
    let lemma1 = lemma1_verdict(negishi, diff, tau_scale, band);

    // Aggregate abatement comparison at the differentiated solution.
    let a_scale = diff
        .global_abatement()
        .max(negishi.global_abatement())
        .max(1e-300);
    let abatement_gap = (diff.global_abatement() - negishi.global_abatement()) / a_scale;
    let up_n = econ.utility.marginal_utility(diff.x_north);
    let up_s = econ.utility.marginal_utility(diff.x_south);
    let dd_n = econ.north.damage.slope(diff.global_abatement());
    let dd_s = econ.south.damage.slope(diff.global_abatement());
    let disc_prop2 = (up_s / up_n) * (dd_s / dd_n) / cpp_ratio_ns - 1.0;
    let prop2 = if diff.x_order_violated {
        Indeterminate
    } else {
        sign_match(abatement_gap, disc_prop2, band)
    };

    let lemma2 = lemma2_verdict(&regimes, tau_scale, band);

    let disc_prop3 = (pref_s.tau() - pref_n.tau()) / tau_scale;
    let prop3 = sign_match(price_gap, disc_prop3, band);

    Ok(StaticPropositionReport {
        prices_coincide,
        prop1,
        corollary1,
        lemma1,
        prop2,
        lemma2,
        prop3,
        price_gap,
        disc_prop1,
        disc_prop2,
        disc_prop3,
        regimes,
    })
}

/// Benefit/cost ratios of a marginal uniform price increase, evaluated at
/// the utilitarian uniform solution: the South's must exceed one and the
/// North's fall short of it exactly when the utilitarian price is higher.
fn corollary1_verdict(
    econ: &EconomyStatic,
    uni: &PriceSolution,
    price_gap: f64,
    band: f64,
) -> PropositionVerdict {
    let tau = uni.tau();
    let da_n = if tau > econ.north.cost.m {
        1.0 / econ.north.cost.curvature()
    } else {
        0.0
    };
    let da_s = if tau > econ.south.cost.m {
        1.0 / econ.south.cost.curvature()
    } else {
        0.0
    };
    let da = da_n + da_s;
    let a = uni.global_abatement();
    let cost_n = tau * da_n;
    let cost_s = tau * da_s;
    if cost_n <= 0.0 || cost_s <= 0.0 {
        return Indeterminate;
    }
    let ratio_n = -econ.north.damage.slope(a) * da / cost_n;
    let ratio_s = -econ.south.damage.slope(a) * da / cost_s;
    let t_n = ratio_n - 1.0;
    let t_s = ratio_s - 1.0;
    if price_gap.abs() < band || t_n.abs() < band || t_s.abs() < band {
        return Indeterminate;
    }
    let holds = if price_gap > 0.0 {
        t_s > 0.0 && t_n < 0.0
    } else {
        t_s < 0.0 && t_n > 0.0
    };
    if holds {
        Pass
    } else {
        Fail
    }
}

/// Differentiated price ordering `tau_hat_S < tau_tilde < tau_hat_N` with
/// the matching abatement ordering, under the maintained `x_N > x_S`.
fn lemma1_verdict(
    negishi: &PriceSolution,
    diff: &PriceSolution,
    tau_scale: f64,
    band: f64,
) -> PropositionVerdict {
    if diff.x_order_violated {
        return Indeterminate;
    }
    let a_scale = negishi
        .global_abatement()
        .max(diff.global_abatement())
        .max(1e-300);
    let gaps = [
        (negishi.tau() - diff.tau_south) / tau_scale,
        (diff.tau_north - negishi.tau()) / tau_scale,
        (negishi.abatement_south - diff.abatement_south) / a_scale,
        (diff.abatement_north - negishi.abatement_north) / a_scale,
    ];
    all_positive(&gaps, band)
}

/// Both uniform prices lie strictly between the two preferred prices,
/// unless everything coincides.
fn lemma2_verdict(regimes: &RegimeSet, tau_scale: f64, band: f64) -> PropositionVerdict {
    let lo = regimes
        .preferred_north
        .tau()
        .min(regimes.preferred_south.tau());
    let hi = regimes
        .preferred_north
        .tau()
        .max(regimes.preferred_south.tau());
    if (hi - lo) / tau_scale < band {
        return Indeterminate;
    }
    let mut verdict = Pass;
    for price in [regimes.negishi.tau(), regimes.utilitarian_uniform.tau()] {
        let d_lo = (price - lo) / tau_scale;
        let d_hi = (hi - price) / tau_scale;
        if d_lo < -band || d_hi < -band {
            return Fail;
        }
        if d_lo < band || d_hi < band {
            verdict = Indeterminate;
        }
    }
    verdict
}

/// Aggregated verdict counts across a sweep.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
}

impl VerdictCounts {
    fn add(&mut self, v: PropositionVerdict) {
        match v {
            Pass => self.pass += 1,
            Fail => self.fail += 1,
            Indeterminate => self.indeterminate += 1,
        }
    }
}

/// Summary of a randomized static proposition sweep. Solver failures are
/// tracked separately and never counted against a proposition.
#[derive(Debug, Clone, Default)]
pub struct StaticSweepSummary {
    pub instances: usize,
    pub solver_failures: usize,
    pub prop1: VerdictCounts,
    pub corollary1: VerdictCounts,
    pub lemma1: VerdictCounts,
    pub prop2: VerdictCounts,
    pub lemma2: VerdictCounts,
    pub prop3: VerdictCounts,
}

impl StaticSweepSummary {
    pub fn absorb(&mut self, report: &StaticPropositionReport) {
        self.instances += 1;
        self.prop1.add(report.prop1);
        self.corollary1.add(report.corollary1);
        self.lemma1.add(report.lemma1);
        self.prop2.add(report.prop2);
        self.lemma2.add(report.lemma2);
        self.prop3.add(report.prop3);
    }

    pub fn total_failures(&self) -> usize {
        self.prop1.fail
            + self.corollary1.fail
            + self.lemma1.fail
            + self.prop2.fail
            + self.lemma2.fail
            + self.prop3.fail
    }

    pub fn total_indeterminate(&self) -> usize {
        self.prop1.indeterminate
            + self.corollary1.indeterminate
            + self.lemma1.indeterminate
            + self.prop2.indeterminate
            + self.lemma2.indeterminate
            + self.prop3.indeterminate
    }

    pub fn total_checks(&self) -> usize {
        6 * self.instances
    }
}

/// A full randomized sweep: per-instance rows (in index order, so reports
/// are byte-stable under a fixed seed) plus the aggregate summary.
#[derive(Debug, Clone)]
pub struct StaticSweepOutcome {
    pub rows: Vec<(u64, Result<StaticPropositionReport, SolveError>)>,
    pub summary: StaticSweepSummary,
}

/// Samples `count` economies from per-instance seeds derived from
/// `base_seed` and evaluates every proposition on each. Instances run
/// concurrently; each owns its seeded generator.
pub fn run_static_props_sweep(
    count: usize,
    base_seed: u64,
    tol: f64,
    band: f64,
    sampler: &super::SamplerConfig,
) -> StaticSweepOutcome {
    let rows = crate::exec::map_indexed(count, |i| {
        let seed = super::instance_seed(base_seed, i as u64);
        let econ = super::sample_static_economy(seed, sampler, tol);
        (seed, check_static_propositions(&econ, tol, band))
    });
    let mut summary = StaticSweepSummary::default();
    for (_, row) in &rows {
        match row {
            Ok(report) => summary.absorb(report),
            Err(_) => summary.solver_failures += 1,
        }
    }
    StaticSweepOutcome { rows, summary }
}
