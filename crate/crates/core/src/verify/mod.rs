//! Verification suites: every structural identity of the library, re-checked
//! exactly and collected into a deterministic report.

mod algebra_suites;
mod displays;
pub mod random;
mod root_suites;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ring::CyclotomicCtx;

pub use displays::{cubic_display_n2, det3_display, general_cubic_display, quintic_display_n2};

/// Default feasibility budget: the largest admitted `n^{2m}`.
pub const DEFAULT_BUDGET: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Ring,
    Fr,
    Rform,
    Braided,
    Twist,
    Theorem,
    Examples,
    Counts,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Ring,
        Suite::Fr,
        Suite::Rform,
        Suite::Braided,
        Suite::Twist,
        Suite::Theorem,
        Suite::Examples,
        Suite::Counts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ring => "ring",
            Suite::Fr => "fr",
            Suite::Rform => "rform",
            Suite::Braided => "braided",
            Suite::Twist => "twist",
            Suite::Theorem => "theorem",
            Suite::Examples => "examples",
            Suite::Counts => "counts",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}; expected one of ring, fr, rform, braided, twist, theorem, examples, counts")))
    }
}

/// Parameter grid of one run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteParams {
    pub n: u8,
    /// Root of unity order; `theorem` and `counts` fall back to 3.
    pub ell: Option<u32>,
    /// Restricts `counts` to one `k`.
    pub k: Option<u8>,
    /// Degree cap for words of the FRT algebra.
    pub max_degree: usize,
    /// Largest exponent `N` in the power formulas.
    pub max_power: u32,
    /// Random cases per randomized check.
    pub samples: usize,
    pub seed: u64,
    /// Largest admitted `n^{2m}`.
    pub budget: u64,
    #[serde(skip)]
    pub workers: usize,
    /// Adds wall times, which makes reports differ between runs.
    #[serde(skip)]
    pub timing: bool,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            n: 2,
            ell: None,
            k: None,
            max_degree: 3,
            max_power: 5,
            samples: 16,
            seed: 0x5eed,
            budget: DEFAULT_BUDGET,
            workers: 0,
            timing: false,
        }
    }
}

impl SuiteParams {
    pub(crate) fn ell_or_default(&self) -> u32 {
        self.ell.unwrap_or(3)
    }

    /// Largest `(n, m)` of the `n^{2m}` expansions a suite performs.
    fn cost(&self, suite: Suite) -> u128 {
        let p = |base: u64, m: u64| (base as u128).saturating_pow(2 * m as u32);
        let n = self.n as u64;
        match suite {
            Suite::Ring | Suite::Counts => {
                let ell = self.ell_or_default() as u64;
                let k = self.k.map_or(n, |k| k as u64).max(1);
                (k as u128).saturating_pow(ell as u32 - 1)
            }
            Suite::Fr | Suite::Rform => p(n, self.max_degree as u64),
            Suite::Braided => p(n, 2).max(p(n, n.min(3))),
            Suite::Twist => p(n, self.max_power as u64)
                .max(p(n, self.max_degree as u64))
                .max(p(n, n)),
            Suite::Theorem => p(n, self.ell_or_default() as u64).max(p(n, n)),
            Suite::Examples => p(3, 3),
        }
    }

    fn validate(&self, suite: Suite) -> Result<()> {
        if self.n == 0 {
            return Err(Error::BadSize);
        }
        if let Some(ell) = self.ell {
            CyclotomicCtx::new(ell, 1)?;
        }
        if let Some(k) = self.k {
            if k == 0 {
                return Err(Error::InvalidArgument("k must be at least 1".into()));
            }
            if suite != Suite::Counts && k > self.n {
                return Err(Error::IndexOutOfRange(k, k, self.n));
            }
        }
        let cost = self.cost(suite);
        if cost > self.budget as u128 {
            return Err(Error::Infeasible(format!(
                "suite {suite} with n = {}, ell = {}, max degree {}, max power {} expands about {cost} legs per word, \
                 above the budget of {}; lower the parameters or raise the budget",
                self.n,
                self.ell_or_default(),
                self.max_degree,
                self.max_power,
                self.budget
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// What a passing check looks like.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Expect {
    /// Every residual vanishes.
    Zero,
    /// Some residual is nonzero: a known misprint or rejected convention is detected.
    Witness,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub key: String,
    pub status: Status,
    pub expect: Expect,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: Suite,
    pub params: SuiteParams,
    pub passed: bool,
    pub checks: Vec<CheckReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl SuiteReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let p = &self.params;
        let mut out = format!("suite {} (n = {}", self.suite, p.n);
        if let Some(ell) = p.ell {
            out.push_str(&format!(", ell = {ell}"));
        }
        if let Some(k) = p.k {
            out.push_str(&format!(", k = {k}"));
        }
        out.push_str(&format!(
            ", max degree {}, max power {}, samples {}, seed {})\n",
            p.max_degree, p.max_power, p.samples, p.seed
        ));
        for c in &self.checks {
            let status = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("{status} {} [{} case(s)", c.key, c.cases));
            if c.expect == Expect::Witness {
                out.push_str(", witness");
            }
            if let Some(ms) = c.wall_ms {
                out.push_str(&format!(", {ms} ms"));
            }
            out.push(']');
            if let Some(d) = &c.detail {
                out.push_str(": ");
                out.push_str(d);
            }
            out.push('\n');
        }
        let fails = self.failures().count();
        out.push_str(&format!(
            "{} of {} checks passed",
            self.checks.len() - fails,
            self.checks.len()
        ));
        if let Some(ms) = self.wall_ms {
            out.push_str(&format!(" in {ms} ms"));
        }
        out.push('\n');
        out
    }
}

/// Outcome of one check before timing is attached.
pub(crate) struct Verdict {
    pass: bool,
    cases: u64,
    detail: Option<String>,
}

const DETAIL_CAP: usize = 400;

fn clip(mut s: String) -> String {
    if s.len() > DETAIL_CAP {
        let mut cut = DETAIL_CAP;
        while !s.is_char_boundary(cut) {
            cut -= 1;
        }
        s.truncate(cut);
        s.push_str(" ...");
    }
    s
}

/// Accumulates cases of one check.
pub(crate) struct Tally {
    expect: Expect,
    cases: u64,
    hits: u64,
    first: Option<String>,
}

impl Tally {
    pub fn zero() -> Self {
        Tally {
            expect: Expect::Zero,
            cases: 0,
            hits: 0,
            first: None,
        }
    }

    pub fn witness() -> Self {
        Tally {
            expect: Expect::Witness,
            cases: 0,
            hits: 0,
            first: None,
        }
    }

    /// Records one case whose residual vanishes iff `vanishes`.
    pub fn case(&mut self, vanishes: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !vanishes {
            self.hits += 1;
            if self.first.is_none() {
                self.first = Some(clip(describe()));
            }
        }
    }

    pub fn finish(self) -> Verdict {
        match self.expect {
            Expect::Zero => Verdict {
                pass: self.hits == 0,
                cases: self.cases,
                detail: self
                    .first
                    .map(|f| format!("{} nonzero residual(s); first: {f}", self.hits)),
            },
            Expect::Witness => Verdict {
                pass: self.hits > 0,
                cases: self.cases,
                detail: Some(match self.first {
                    Some(f) => format!(
                        "{} of {} case(s) differ as expected; first: {f}",
                        self.hits, self.cases
                    ),
                    None => "every residual vanished; the witness was not observed".into(),
                }),
            },
        }
    }
}

type CheckFn = Box<dyn Fn(&SuiteParams) -> Result<Verdict> + Send + Sync>;

pub(crate) struct Check {
    key: String,
    expect: Expect,
    run: CheckFn,
}

impl Check {
    pub fn new(
        key: impl Into<String>,
        run: impl Fn(&SuiteParams) -> Result<Verdict> + Send + Sync + 'static,
    ) -> Self {
        Check {
            key: key.into(),
            expect: Expect::Zero,
            run: Box::new(run),
        }
    }

    pub fn witness(
        key: impl Into<String>,
        run: impl Fn(&SuiteParams) -> Result<Verdict> + Send + Sync + 'static,
    ) -> Self {
        Check {
            key: key.into(),
            expect: Expect::Witness,
            run: Box::new(run),
        }
    }
}

fn checks_for(suite: Suite, p: &SuiteParams) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::Ring => algebra_suites::ring(p),
        Suite::Fr => algebra_suites::fr(p),
        Suite::Rform => algebra_suites::rform(p),
        Suite::Braided => algebra_suites::braided(p),
        Suite::Twist => algebra_suites::twist(p),
        Suite::Theorem => root_suites::theorem(p)?,
        Suite::Examples => root_suites::examples(p),
        Suite::Counts => root_suites::counts(p)?,
    })
}

fn run_check(c: &Check, p: &SuiteParams) -> CheckReport {
    let start = Instant::now();
    let verdict = (c.run)(p).unwrap_or_else(|e| Verdict {
        pass: false,
        cases: 0,
        detail: Some(format!("error: {e}")),
    });
    CheckReport {
        key: c.key.clone(),
        status: if verdict.pass {
            Status::Pass
        } else {
            Status::Fail
        },
        expect: c.expect,
        cases: verdict.cases,
        detail: verdict.detail,
        wall_ms: p.timing.then(|| start.elapsed().as_millis() as u64),
    }
}

/// Runs every check of a suite, concurrently up to `params.workers`
/// (0 means one per core), and reports them sorted by key.
pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteReport> {
    params.validate(suite)?;
    let start = Instant::now();
    let checks = checks_for(suite, params)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(params.workers)
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start worker pool: {e}")))?;
    let mut reports: Vec<CheckReport> =
        pool.install(|| checks.par_iter().map(|c| run_check(c, params)).collect());
    reports.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(SuiteReport {
        suite,
        params: params.clone(),
        passed: reports.iter().all(|r| r.status == Status::Pass),
        checks: reports,
        wall_ms: params.timing.then(|| start.elapsed().as_millis() as u64),
    })
}
