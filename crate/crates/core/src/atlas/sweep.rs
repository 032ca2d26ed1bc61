use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::enumerate_graphs;
use crate::error::{domain, Error, Result};
use crate::graphkit::tables::table;
use crate::graphkit::{graph6, isomorphic_up_to_complementation, Graph};
use crate::hypomorphy::{
    equal_up_to_complementation, evaluate_claim_clawfree, evaluate_prop_down, evaluate_prop_kaplus, k_hypomorphic_utc,
    theta, verify_corollary_corkk1, verify_theorem_k0mod4, verify_theorem_k1mod4, verify_theorem_principal, Check,
    KaplusMode,
};
use crate::CODE_VERSION;

/// Largest order swept without [`SweepOptions::allow_long`].
pub const DEFAULT_MAX_V: usize = 6;
/// Largest order swept at all.
pub const LONG_MAX_V: usize = 7;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SweepOptions {
    /// permit order-7 sweeps
    pub allow_long: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// k-hypomorphy up to complementation forces equality up to complementation
    S,
    /// ... forces isomorphy up to complementation
    R,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Member,
    NonMember,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AtlasRecord {
    pub v: usize,
    pub k: usize,
    pub relation: Relation,
    pub verdict: Verdict,
    /// `(g, g')` as graph6
    pub witness: Option<(String, String)>,
    /// pairs scanned, in sweep order, up to and including the witness
    pub pairs_examined: u64,
    /// omitted from reports that must be reproducible
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_seconds: Option<f64>,
    pub code_version: String,
}

impl AtlasRecord {
    /// The record without timing, for byte-for-byte comparison.
    pub fn without_timing(&self) -> AtlasRecord {
        AtlasRecord {
            wall_time_seconds: None,
            ..self.clone()
        }
    }

    /// Decodes the witness and checks it again: the hypothesis must hold and
    /// the conclusion fail. `Ok(true)` for records without a witness only when
    /// the verdict is not `NonMember`.
    pub fn verify_witness(&self) -> Result<bool> {
        let Some((a, b)) = &self.witness else {
            return Ok(self.verdict != Verdict::NonMember);
        };
        let (g, h) = (graph6::decode(a)?, graph6::decode(b)?);
        if g.order() != self.v || h.order() != self.v {
            return Ok(false);
        }
        Ok(k_hypomorphic_utc(&g, &h, self.k)?.holds && !conclusion(self.relation, &g, &h)?)
    }
}

fn conclusion(rel: Relation, g: &Graph, h: &Graph) -> Result<bool> {
    Ok(match rel {
        Relation::S => equal_up_to_complementation(g, h)?,
        Relation::R => isomorphic_up_to_complementation(g, h)?.holds(),
    })
}

fn check_v(v: usize, opts: SweepOptions) -> Result<()> {
    let max = if opts.allow_long { LONG_MAX_V } else { DEFAULT_MAX_V };
    if v > max {
        return Err(Error::OrderTooLarge { n: v, max });
    }
    if v == 0 {
        return Err(Error::InvalidOrder(0));
    }
    Ok(())
}

fn labelled_count(v: usize) -> u64 {
    1u64 << (v * (v - 1) / 2)
}

/// Decides whether `(v, k)` lies in the relation by scanning every pair.
/// The witness is the first violating pair in the order (catalogue index of
/// `g`, then code of `g'`), independent of the number of workers.
pub fn membership(relation: Relation, v: usize, k: usize, opts: SweepOptions) -> Result<AtlasRecord> {
    check_v(v, opts)?;
    if k == 0 || k > v {
        return domain(format!("subset size k={k} must lie in 1..={v}"));
    }
    let start = Instant::now();
    let catalog = enumerate_graphs(v)?;
    let per_g = labelled_count(v);
    let utc = table(v).expect("tables cover the sweep orders");
    let found = catalog
        .graphs
        .par_iter()
        .enumerate()
        .map(|(gi, g)| -> Result<Option<(usize, u64, Graph)>> {
            let g_class = utc.utc_class(g.pair_code() as u32);
            let g_bar = g.complement();
            for code in 0..per_g {
                let h = Graph::from_pair_code(v, code)?;
                // the conclusion is cheap; only pairs where it fails need the hypothesis
                let concl = match relation {
                    Relation::S => h == *g || h == g_bar,
                    Relation::R => utc.utc_class(code as u32) == g_class,
                };
                if !concl && k_hypomorphic_utc(g, &h, k)?.holds {
                    return Ok(Some((gi, code, h)));
                }
            }
            Ok(None)
        })
        .find_map_first(|r| match r {
            Ok(None) => None,
            other => Some(other),
        })
        .transpose()?
        .flatten();
    let (verdict, witness, pairs_examined) = match found {
        Some((gi, code, h)) => (
            Verdict::NonMember,
            Some((graph6::encode(&catalog.graphs[gi]), graph6::encode(&h))),
            gi as u64 * per_g + code + 1,
        ),
        None => (Verdict::Member, None, catalog.graphs.len() as u64 * per_g),
    };
    Ok(AtlasRecord {
        v,
        k,
        relation,
        verdict,
        witness,
        pairs_examined,
        wall_time_seconds: Some(start.elapsed().as_secs_f64()),
        code_version: CODE_VERSION.to_string(),
    })
}

pub fn s_membership(v: usize, k: usize) -> Result<AtlasRecord> {
    membership(Relation::S, v, k, SweepOptions::default())
}

pub fn r_membership(v: usize, k: usize) -> Result<AtlasRecord> {
    membership(Relation::R, v, k, SweepOptions::default())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TheoremId {
    K0mod4,
    K1mod4,
    Principal,
    Clawfree,
    Down,
    Corkk1,
    Kaplus,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::K0mod4,
        TheoremId::K1mod4,
        TheoremId::Principal,
        TheoremId::Clawfree,
        TheoremId::Down,
        TheoremId::Corkk1,
        TheoremId::Kaplus,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremId::K0mod4 => "k0mod4",
            TheoremId::K1mod4 => "k1mod4",
            TheoremId::Principal => "principal",
            TheoremId::Clawfree => "clawfree",
            TheoremId::Down => "down",
            TheoremId::Corkk1 => "corkk1",
            TheoremId::Kaplus => "kaplus",
        }
    }

    pub fn parse(s: &str) -> Result<TheoremId> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown theorem id {s:?}")))
    }

    /// Whether the statement takes a subset size.
    pub fn takes_k(self) -> bool {
        self != TheoremId::Clawfree
    }
}

/// Violations kept verbatim in a report; the count is always exact.
pub const MAX_LISTED_VIOLATIONS: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub g: String,
    pub g_prime: String,
    pub check: Check,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub theorem: TheoremId,
    pub v: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    /// "canonical x labelled" or "labelled x labelled"
    pub space: &'static str,
    pub pairs: u64,
    /// evaluations (one pair may be evaluated for several parameters)
    pub evaluations: u64,
    /// evaluations whose hypothesis, or first listed side for equivalences, held
    pub hypothesis_satisfied: u64,
    pub violation_count: u64,
    pub violations: Vec<Violation>,
    pub code_version: String,
}

#[derive(Default)]
struct Tally {
    pairs: u64,
    evaluations: u64,
    satisfied: u64,
    violation_count: u64,
    violations: Vec<Violation>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.pairs += other.pairs;
        self.evaluations += other.evaluations;
        self.satisfied += other.satisfied;
        self.violation_count += other.violation_count;
        for v in other.violations {
            if self.violations.len() < MAX_LISTED_VIOLATIONS {
                self.violations.push(v);
            }
        }
        self
    }
}

/// The checks run on one pair; each returns a `Check` whose `holds` is the verdict.
fn evaluations(theorem: TheoremId, g: &Graph, h: &Graph, k: usize) -> Result<Vec<Check>> {
    let v = g.order();
    Ok(match theorem {
        TheoremId::K0mod4 => vec![verify_theorem_k0mod4(g, h, k)?],
        TheoremId::K1mod4 => vec![verify_theorem_k1mod4(g, h, k)?],
        TheoremId::Principal => vec![verify_theorem_principal(g, h, k)?],
        TheoremId::Clawfree => vec![evaluate_claim_clawfree(g, h)?],
        TheoremId::Down => (1..=k.min(v - k))
            .map(|t| evaluate_prop_down(g, h, k, t))
            .collect::<Result<_>>()?,
        TheoremId::Corkk1 => (3..k)
            .map(|kp| verify_corollary_corkk1(g, h, k, kp))
            .collect::<Result<_>>()?,
        TheoremId::Kaplus => {
            let mut out = Vec::new();
            if 3 <= k && k + 3 <= v {
                out.push(evaluate_prop_kaplus(g, h, k, KaplusMode::H3)?);
            }
            if 4 <= k && k + 4 <= v {
                out.push(evaluate_prop_kaplus(g, h, k, KaplusMode::A0)?);
            }
            if out.is_empty() {
                return domain(format!("no mode of kaplus applies at v={v}, k={k}"));
            }
            out
        }
    })
}

fn satisfied(theorem: TheoremId, c: &Check) -> bool {
    match theorem {
        TheoremId::K0mod4 | TheoremId::K1mod4 | TheoremId::Principal => c.conditions.first().is_some_and(|x| x.value),
        _ => c.hypothesis,
    }
}

/// Runs one statement's checker over every pair of order `v`. The claw-free
/// statement ranges over all ordered labelled pairs; the others fix `g` to a
/// catalogue representative.
pub fn sweep_theorem(theorem: TheoremId, v: usize, k: Option<usize>, opts: SweepOptions) -> Result<SweepReport> {
    check_v(v, opts)?;
    let k_val = match (theorem.takes_k(), k) {
        (true, Some(k)) => k,
        (true, None) => return domain(format!("{} needs a subset size", theorem.name())),
        (false, _) => 0,
    };
    if theorem == TheoremId::Principal && v >= 4 && k_val > theta(v)? {
        return domain(format!("principal needs k <= theta(v) = {}", theta(v)?));
    }
    let per_g = labelled_count(v);
    let (gs, space): (Vec<Graph>, &'static str) = if theorem == TheoremId::Clawfree {
        let all = (0..per_g).map(|c| Graph::from_pair_code(v, c)).collect::<Result<_>>()?;
        (all, "labelled x labelled")
    } else {
        (enumerate_graphs(v)?.graphs.clone(), "canonical x labelled")
    };
    // surface precondition errors once, before the parallel part
    evaluations(theorem, &gs[0], &gs[0], k_val)?;
    let tally = gs
        .par_iter()
        .map(|g| -> Result<Tally> {
            let mut t = Tally::default();
            for code in 0..per_g {
                let h = Graph::from_pair_code(v, code)?;
                t.pairs += 1;
                for c in evaluations(theorem, g, &h, k_val)? {
                    t.evaluations += 1;
                    t.satisfied += u64::from(satisfied(theorem, &c));
                    if !c.holds {
                        t.violation_count += 1;
                        if t.violations.len() < MAX_LISTED_VIOLATIONS {
                            t.violations.push(Violation {
                                g: graph6::encode(g),
                                g_prime: graph6::encode(&h),
                                check: c,
                            });
                        }
                    }
                }
            }
            Ok(t)
        })
        .collect::<Result<Vec<Tally>>>()?
        .into_iter()
        .fold(Tally::default(), Tally::merge);
    Ok(SweepReport {
        theorem,
        v,
        k: theorem.takes_k().then_some(k_val),
        space,
        pairs: tally.pairs,
        evaluations: tally.evaluations,
        hypothesis_satisfied: tally.satisfied,
        violation_count: tally.violation_count,
        violations: tally.violations,
        code_version: CODE_VERSION.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_gate() {
        assert!(matches!(s_membership(7, 4), Err(Error::OrderTooLarge { n: 7, max: 6 })));
        assert!(s_membership(5, 0).is_err());
    }

    #[test]
    fn small_rows() {
        let r = s_membership(4, 4).unwrap();
        assert_eq!(r.verdict, Verdict::NonMember);
        assert!(r.verify_witness().unwrap());
        let r = r_membership(4, 3).unwrap();
        assert_eq!(r.verdict, Verdict::NonMember);
        assert!(r.verify_witness().unwrap());
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in TheoremId::ALL {
            assert_eq!(TheoremId::parse(t.name()).unwrap(), t);
            assert_eq!(serde_json::to_value(t).unwrap(), t.name());
        }
        assert!(TheoremId::parse("nope").is_err());
    }
}
