//! Structured verdicts for the identity checkers.
//!
//! Each claim identifier expands to a grid of independent instances;
//! instances can be run in any order (or concurrently) and carry their own
//! parameters, so output stays deterministic when collected in grid order.

use crate::qseries::identities::{self, PolyMismatch, SeriesMismatch};
use crate::qseries::recurrences;
use crate::qseries::{Mono, QBinomialTable};
use crate::schmidt;
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

/// Status of a single verified claim instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Mismatch,
    Skipped,
}

/// First mismatching monomial, in the flat shape used by the JSON output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub q: i64,
    pub t: i64,
    pub t1: i64,
    pub t2: i64,
    pub lhs: i64,
    pub rhs: i64,
}

impl From<SeriesMismatch> for Discrepancy {
    fn from(d: SeriesMismatch) -> Self {
        Discrepancy {
            q: i64::from(d.mono.q_exp()),
            t: i64::from(d.mono.t_exp()),
            t1: i64::from(d.mono.t1_exp()),
            t2: i64::from(d.mono.t2_exp()),
            lhs: d.lhs,
            rhs: d.rhs,
        }
    }
}

impl From<PolyMismatch> for Discrepancy {
    fn from(d: PolyMismatch) -> Self {
        Discrepancy {
            q: d.q_exp,
            t: 0,
            t1: 0,
            t2: 0,
            lhs: d.lhs,
            rhs: d.rhs,
        }
    }
}

/// Outcome of one claim instance.
#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub claim: String,
    pub params: BTreeMap<String, i64>,
    pub status: Status,
    pub discrepancy: Option<Discrepancy>,
    pub ms: u64,
}

impl Verdict {
    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.claim)?;
        if !self.params.is_empty() {
            write!(f, "[")?;
            for (i, (k, v)) in self.params.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{k}={v}")?;
            }
            write!(f, "]")?;
        }
        match self.status {
            Status::Verified => write!(f, ": verified ({} ms)", self.ms),
            Status::Skipped => write!(f, ": skipped"),
            Status::Mismatch => {
                let d = self.discrepancy.expect("mismatch carries a discrepancy");
                write!(
                    f,
                    ": MISMATCH at q^{} t^{} t1^{} t2^{}: lhs {} != rhs {}",
                    d.q, d.t, d.t1, d.t2, d.lhs, d.rhs
                )
            }
        }
    }
}

/// Identifier of a verifiable claim family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimId {
    F32,
    F31,
    Genf,
    Firsti,
    TwoPhi1,
    Lemmab,
    SumA,
    Pascal,
    Vandermonde,
    QBinomTheorem,
    Pi3,
    Kappa,
    Genlemma,
}

impl ClaimId {
    pub const ALL: [ClaimId; 13] = [
        ClaimId::F32,
        ClaimId::F31,
        ClaimId::Genf,
        ClaimId::Firsti,
        ClaimId::TwoPhi1,
        ClaimId::Lemmab,
        ClaimId::SumA,
        ClaimId::Pascal,
        ClaimId::Vandermonde,
        ClaimId::QBinomTheorem,
        ClaimId::Pi3,
        ClaimId::Kappa,
        ClaimId::Genlemma,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClaimId::F32 => "f32",
            ClaimId::F31 => "f31",
            ClaimId::Genf => "genf",
            ClaimId::Firsti => "firsti",
            ClaimId::TwoPhi1 => "2phi1",
            ClaimId::Lemmab => "lemmab",
            ClaimId::SumA => "sumA",
            ClaimId::Pascal => "pascal",
            ClaimId::Vandermonde => "vandermonde",
            ClaimId::QBinomTheorem => "qbinom-theorem",
            ClaimId::Pi3 => "pi3",
            ClaimId::Kappa => "kappa",
            ClaimId::Genlemma => "genlemma",
        }
    }

    pub fn parse(s: &str) -> Option<ClaimId> {
        ClaimId::ALL.into_iter().find(|c| c.name() == s)
    }
}

/// Grid bounds and parameter overrides for [`instances`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    /// q-truncation order for series identities; also the counting bound for
    /// `firsti`.
    pub order: u32,
    /// Tracker cap for `t` (`f32`, `genf`).
    pub cap_t: u32,
    /// Tracker caps for `t1`, `t2` (`f31`).
    pub cap_t1: u32,
    pub cap_t2: u32,
    /// Restrict `genf`/`genlemma` to one `k`.
    pub k: Option<u32>,
    /// Restrict `firsti` to one `m` (and optionally one `i`).
    pub m: Option<u32>,
    pub i: Option<u32>,
    /// Restrict `2phi1` to one `M`.
    pub big_m: Option<u32>,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            order: 30,
            cap_t: 30,
            cap_t1: 10,
            cap_t2: 10,
            k: None,
            m: None,
            i: None,
            big_m: None,
        }
    }
}

/// One independently runnable claim instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Instance {
    F32 { order: u32, cap_t: u32 },
    F31 { order: u32, cap_t1: u32, cap_t2: u32 },
    Genf { k: u32, order: u32, cap_t: u32 },
    Firsti { m: u32, i: u32, order: u32 },
    TwoPhi1 { big_m: u32 },
    Lemmab { u1: u32, u2: u32, t: u32 },
    SumA { u1: u32, u2: u32, t: u32 },
    Pascal { max: u32 },
    Vandermonde { max: u32 },
    QBinomTheorem { max: u32 },
    Pi3 { index: u32 },
    Kappa { index: u32 },
    Genlemma { k: u32, index: u32 },
}

/// Expands a claim into its instance grid.
pub fn instances(id: ClaimId, opts: &VerifyOptions) -> Vec<Instance> {
    match id {
        ClaimId::F32 => vec![Instance::F32 {
            order: opts.order,
            cap_t: opts.cap_t,
        }],
        ClaimId::F31 => vec![Instance::F31 {
            order: opts.order,
            cap_t1: opts.cap_t1,
            cap_t2: opts.cap_t2,
        }],
        ClaimId::Genf => opts
            .k
            .map(|k| vec![k])
            .unwrap_or_else(|| (2..=5).collect())
            .into_iter()
            .map(|k| Instance::Genf {
                k,
                order: opts.order,
                cap_t: opts.cap_t,
            })
            .collect(),
        ClaimId::Firsti => {
            let ms: Vec<u32> = opts.m.map(|m| vec![m]).unwrap_or_else(|| (2..=5).collect());
            let mut grid = Vec::new();
            for m in ms {
                let is: Vec<u32> = opts.i.map(|i| vec![i]).unwrap_or_else(|| (1..m).collect());
                for i in is {
                    grid.push(Instance::Firsti {
                        m,
                        i,
                        order: opts.order,
                    });
                }
            }
            grid
        }
        ClaimId::TwoPhi1 => opts
            .big_m
            .map(|m| vec![m])
            .unwrap_or_else(|| (0..=12).collect())
            .into_iter()
            .map(|big_m| Instance::TwoPhi1 { big_m })
            .collect(),
        ClaimId::Lemmab => lemma_grid()
            .map(|(u1, u2, t)| Instance::Lemmab { u1, u2, t })
            .collect(),
        ClaimId::SumA => lemma_grid()
            .map(|(u1, u2, t)| Instance::SumA { u1, u2, t })
            .collect(),
        ClaimId::Pascal => vec![Instance::Pascal { max: 12 }],
        ClaimId::Vandermonde => vec![Instance::Vandermonde { max: 12 }],
        ClaimId::QBinomTheorem => vec![Instance::QBinomTheorem { max: 12 }],
        ClaimId::Pi3 => (0..=15).map(|index| Instance::Pi3 { index }).collect(),
        ClaimId::Kappa => (0..=17).map(|index| Instance::Kappa { index }).collect(),
        ClaimId::Genlemma => {
            let ks: Vec<u32> = opts.k.map(|k| vec![k]).unwrap_or_else(|| (3..=5).collect());
            let mut grid = Vec::new();
            for k in ks {
                for index in 0..=15 {
                    grid.push(Instance::Genlemma { k, index });
                }
            }
            grid
        }
    }
}

fn lemma_grid() -> impl Iterator<Item = (u32, u32, u32)> {
    (0..=5u32).flat_map(|u1| {
        (0..=5u32)
            .filter(move |&u2| u1 + u2 > 0)
            .flat_map(move |u2| (0..=u1 + u2).map(move |t| (u1, u2, t)))
    })
}

fn finish(
    claim: &str,
    params: &[(&str, i64)],
    started: Instant,
    discrepancy: Option<Discrepancy>,
) -> Verdict {
    Verdict {
        claim: claim.to_string(),
        params: params.iter().map(|&(k, v)| (k.to_string(), v)).collect(),
        status: if discrepancy.is_none() {
            Status::Verified
        } else {
            Status::Mismatch
        },
        discrepancy,
        ms: started.elapsed().as_millis() as u64,
    }
}

/// Runs one instance to a verdict.
pub fn run_instance(inst: Instance) -> Verdict {
    let started = Instant::now();
    match inst {
        Instance::F32 { order, cap_t } => finish(
            "f32",
            &[("order", order.into()), ("cap_t", cap_t.into())],
            started,
            identities::check_identity_f32(order, cap_t).map(Into::into),
        ),
        Instance::F31 {
            order,
            cap_t1,
            cap_t2,
        } => finish(
            "f31",
            &[
                ("order", order.into()),
                ("cap_t1", cap_t1.into()),
                ("cap_t2", cap_t2.into()),
            ],
            started,
            identities::check_identity_f31(order, cap_t1, cap_t2).map(Into::into),
        ),
        Instance::Genf { k, order, cap_t } => finish(
            "genf",
            &[
                ("k", k.into()),
                ("order", order.into()),
                ("cap_t", cap_t.into()),
            ],
            started,
            identities::check_identity_genf(k, order, cap_t).map(Into::into),
        ),
        Instance::Firsti { m, i, order } => check_firsti(m, i, order),
        Instance::TwoPhi1 { big_m } => finish(
            "2phi1",
            &[("M", big_m.into())],
            started,
            identities::check_lemma_2phi1(big_m).map(Into::into),
        ),
        Instance::Lemmab { u1, u2, t } => finish(
            "lemmab",
            &[("u1", u1.into()), ("u2", u2.into()), ("t", t.into())],
            started,
            identities::check_lemma_lemmab(u1, u2, t).map(Into::into),
        ),
        Instance::SumA { u1, u2, t } => finish(
            "sumA",
            &[("u1", u1.into()), ("u2", u2.into()), ("t", t.into())],
            started,
            identities::check_identity_sum_a(u1, u2, t).map(Into::into),
        ),
        Instance::Pascal { max } => {
            let mut table = QBinomialTable::new();
            let mut mismatch = None;
            'outer: for n in 1..=max {
                for k in 0..=n {
                    if let Some(d) = identities::q_pascal_holds(n, k, &mut table) {
                        mismatch = Some(d.into());
                        break 'outer;
                    }
                }
            }
            finish("pascal", &[("max", max.into())], started, mismatch)
        }
        Instance::Vandermonde { max } => {
            let mut table = QBinomialTable::new();
            let mut mismatch = None;
            'outer: for m in 0..=max {
                for n in 0..=max {
                    for k in 0..=max {
                        if let Some(d) = identities::q_vandermonde_holds(m, n, k, &mut table) {
                            mismatch = Some(d.into());
                            break 'outer;
                        }
                    }
                }
            }
            finish("vandermonde", &[("max", max.into())], started, mismatch)
        }
        Instance::QBinomTheorem { max } => {
            let mismatch = (0..=max)
                .find_map(identities::q_binomial_theorem_holds)
                .map(Into::into);
            finish("qbinom-theorem", &[("max", max.into())], started, mismatch)
        }
        Instance::Pi3 { index } => finish(
            "pi3",
            &[("index", index.into())],
            started,
            recurrences::pi3_closed(index)
                .first_difference(&recurrences::pi_poly(3, index))
                .map(|(mono, lhs, rhs)| Discrepancy::from(SeriesMismatch { mono, lhs, rhs })),
        ),
        Instance::Kappa { index } => finish(
            "kappa",
            &[("index", index.into())],
            started,
            recurrences::kappa_closed(index)
                .first_difference(&recurrences::kappa_poly(index))
                .map(|(mono, lhs, rhs)| Discrepancy::from(SeriesMismatch { mono, lhs, rhs })),
        ),
        Instance::Genlemma { k, index } => finish(
            "genlemma",
            &[("k", k.into()), ("index", index.into())],
            started,
            recurrences::genlemma_closed(k, index)
                .first_difference(&recurrences::pi_poly(k, index))
                .map(|(mono, lhs, rhs)| Discrepancy::from(SeriesMismatch { mono, lhs, rhs })),
        ),
    }
}

/// Runs the full instance grid of one claim, sequentially, in grid order.
pub fn run_claim(id: ClaimId, opts: &VerifyOptions) -> Vec<Verdict> {
    instances(id, opts).into_iter().map(run_instance).collect()
}

/// Counting-vs-product comparison for the initial-segment corollary: the
/// enumerated counts `R_{m,i}(n)` for `n <= order` against the coefficients
/// of `1/((q;q)_inf (q^i;q^i)_inf^{m-i-1})`.
pub fn check_firsti(m: u32, i: u32, order: u32) -> Verdict {
    let started = Instant::now();
    let params: &[(&str, i64)] = &[("m", m.into()), ("i", i.into()), ("order", order.into())];
    let counts = match schmidt::count_r_histogram(m, i, u64::from(order)) {
        Ok(c) => c,
        Err(_) => {
            let mut v = finish("firsti", params, started, None);
            v.status = Status::Skipped;
            return v;
        }
    };
    let product = identities::firsti_product(m, i, order);
    let mismatch = (0..=order).find_map(|n| {
        let lhs = counts[n as usize] as i64;
        let rhs = product.coeff(Mono::q(n));
        (lhs != rhs).then_some(Discrepancy {
            q: n.into(),
            t: 0,
            t1: 0,
            t2: 0,
            lhs,
            rhs,
        })
    });
    finish("firsti", params, started, mismatch)
}
