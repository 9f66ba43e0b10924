use std::fmt;
use std::time::{Duration, Instant};

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::cliques::{
    classify_k2_vertices, clique_graph, find_induced_octahedron, is_helly, iterate_clique_graph, CliqueGraphResult,
};
use crate::error::{Error, Result};
use crate::graph::{emit_graph6, Graph};
use crate::homology::{homotopy_signature_with_budget, HomotopySignature, DEFAULT_SIMPLEX_BUDGET};
use crate::reduce::{build_h_clique_level, build_h_invariance, low_degree_reduce, replay};

/// The per-graph checks. The first seven require a low degree input; the
/// last two apply to any connected graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// `K²(G)` is Helly.
    K2Helly,
    /// `K(G)` has no induced `O_3`.
    KgOctahedronFree,
    /// `Cl(G)`, `Cl(K(G))` and `Cl(K²(G))` have equal signatures.
    SignatureChain,
    /// The wedge reduction succeeds and its cycle rank equals `b_1(G)`.
    WedgeReduction,
    /// `b_0 = 1` and every Betti number past `b_1` vanishes.
    WedgeSignature,
    /// Both H-constructions validate and preserve signatures.
    HConstructions,
    /// Every necktie is `Q_T` of an internal triangle.
    NecktieShape,
    /// If some iterate `K^n(G)` is a single vertex, `Cl(G)` is acyclic.
    NullContractible,
    /// Helly `G` has Helly `K(G)` with the same signature.
    HellyPreservation,
}

impl Check {
    pub const LOW_DEGREE: [Check; 7] = [
        Check::K2Helly,
        Check::KgOctahedronFree,
        Check::SignatureChain,
        Check::WedgeReduction,
        Check::WedgeSignature,
        Check::HConstructions,
        Check::NecktieShape,
    ];

    pub const ALL: [Check; 9] = [
        Check::K2Helly,
        Check::KgOctahedronFree,
        Check::SignatureChain,
        Check::WedgeReduction,
        Check::WedgeSignature,
        Check::HConstructions,
        Check::NecktieShape,
        Check::NullContractible,
        Check::HellyPreservation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::K2Helly => "k2_helly",
            Check::KgOctahedronFree => "kg_o3_free",
            Check::SignatureChain => "signature_chain",
            Check::WedgeReduction => "wedge_reduction",
            Check::WedgeSignature => "wedge_signature",
            Check::HConstructions => "h_constructions",
            Check::NecktieShape => "necktie_shape",
            Check::NullContractible => "null_contractible",
            Check::HellyPreservation => "helly_preservation",
        }
    }

    pub fn from_name(name: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == name)
    }

    pub fn needs_low_degree(self) -> bool {
        Check::LOW_DEGREE.contains(&self)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    /// Always present on failure.
    pub witness: Option<String>,
    pub ms: u64,
}

/// One JSONL record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphReport {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    /// In the order the checks were requested.
    pub checks: Vec<(String, CheckResult)>,
}

impl GraphReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|(_, r)| r.pass)
    }

    pub fn result(&self, check: Check) -> Option<&CheckResult> {
        self.checks.iter().find(|(n, _)| n == check.name()).map(|(_, r)| r)
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

struct Checks<'a>(&'a [(String, CheckResult)]);

impl Serialize for Checks<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

impl Serialize for GraphReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(4))?;
        map.serialize_entry("graph6", &self.graph6)?;
        map.serialize_entry("n", &self.n)?;
        map.serialize_entry("m", &self.m)?;
        map.serialize_entry("checks", &Checks(&self.checks))?;
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    /// Checks that start after this much time on one graph are recorded as
    /// timeouts.
    pub time_budget: Duration,
    /// When false every `ms` field is 0, making reports byte-reproducible.
    pub record_timings: bool,
    /// Iteration limits for the null-graph check.
    pub null_steps: usize,
    pub null_max_vertices: usize,
    /// Simplex budget for every homology computation.
    pub simplex_budget: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            time_budget: Duration::from_secs(10),
            record_timings: true,
            null_steps: 6,
            null_max_vertices: 2000,
            simplex_budget: DEFAULT_SIMPLEX_BUDGET,
        }
    }
}

/// Lazily computed objects shared between checks.
struct Context<'a> {
    g: &'a Graph,
    budget: usize,
    kg: Option<CliqueGraphResult>,
    k2: Option<Graph>,
    sig_g: Option<HomotopySignature>,
    sig_kg: Option<HomotopySignature>,
}

impl<'a> Context<'a> {
    fn new(g: &'a Graph, budget: usize) -> Self {
        Self {
            g,
            budget,
            kg: None,
            k2: None,
            sig_g: None,
            sig_kg: None,
        }
    }

    fn kg(&mut self) -> Result<&CliqueGraphResult> {
        if self.kg.is_none() {
            self.kg = Some(clique_graph(self.g)?);
        }
        Ok(self.kg.as_ref().expect("just computed"))
    }

    fn k2(&mut self) -> Result<&Graph> {
        if self.k2.is_none() {
            let k2 = clique_graph(&self.kg()?.kg)?.kg;
            self.k2 = Some(k2);
        }
        Ok(self.k2.as_ref().expect("just computed"))
    }

    fn sig_g(&mut self) -> Result<HomotopySignature> {
        if self.sig_g.is_none() {
            self.sig_g = Some(homotopy_signature_with_budget(self.g, self.budget)?);
        }
        Ok(self.sig_g.clone().expect("just computed"))
    }

    fn sig_kg(&mut self) -> Result<HomotopySignature> {
        if self.sig_kg.is_none() {
            let budget = self.budget;
            let s = homotopy_signature_with_budget(&self.kg()?.kg, budget)?;
            self.sig_kg = Some(s);
        }
        Ok(self.sig_kg.clone().expect("just computed"))
    }
}

/// `Ok(None)` is a pass, `Ok(Some(w))` a failure with witness `w`.
type Outcome = Result<Option<String>>;

fn run_check(check: Check, cx: &mut Context<'_>, opts: &VerifyOptions) -> Outcome {
    match check {
        Check::K2Helly => {
            let k2 = cx.k2()?.clone();
            let r = is_helly(&k2)?;
            Ok(r.witness
                .map(|w| format!("necktie of K²(G) with members {}", w.members)))
        }
        Check::KgOctahedronFree => {
            let kg = &cx.kg()?.kg;
            Ok(find_induced_octahedron(kg).map(|o| format!("induced O_3 on K(G) vertices {o:?}")))
        }
        Check::SignatureChain => {
            let a = cx.sig_g()?;
            let b = cx.sig_kg()?;
            let c = homotopy_signature_with_budget(&cx.k2()?.clone(), cx.budget)?;
            Ok((a != b || b != c).then(|| format!("G: {a}; K(G): {b}; K²(G): {c}")))
        }
        Check::WedgeReduction => {
            let r = low_degree_reduce(cx.g)?;
            replay(&r.trace)?;
            let sig = cx.sig_g()?;
            Ok((r.wedge_count != sig.b1()).then(|| format!("wedge count {} but G has {sig}", r.wedge_count)))
        }
        Check::WedgeSignature => {
            let sig = cx.sig_g()?;
            Ok((!sig.is_wedge_of_circles()).then(|| format!("G has {sig}")))
        }
        Check::HConstructions => {
            let (h4, _) = build_h_invariance(cx.g)?;
            let sig_g = cx.sig_g()?;
            let sig_h4 = homotopy_signature_with_budget(&h4, cx.budget)?;
            if sig_h4 != sig_g {
                return Ok(Some(format!("G: {sig_g}; H from G: {sig_h4}")));
            }
            let h5 = build_h_clique_level(cx.g)?;
            let sig_kg = cx.sig_kg()?;
            let sig_h5 = homotopy_signature_with_budget(&h5.h, cx.budget)?;
            Ok((sig_h5 != sig_kg).then(|| format!("K(G): {sig_kg}; H from K(G): {sig_h5}")))
        }
        Check::NecktieShape => {
            classify_k2_vertices(cx.g)?;
            Ok(None)
        }
        Check::NullContractible => {
            let out = iterate_clique_graph(cx.g, opts.null_steps, opts.null_max_vertices.max(cx.g.n()))?;
            if !out.sizes.contains(&1) {
                return Ok(None);
            }
            let sig = cx.sig_g()?;
            Ok((!sig.is_acyclic()).then(|| format!("null graph with {sig}")))
        }
        Check::HellyPreservation => {
            if !is_helly(cx.g)?.helly {
                return Ok(None);
            }
            let kg = cx.kg()?.kg.clone();
            if let Some(w) = is_helly(&kg)?.witness {
                return Ok(Some(format!("G is Helly but K(G) has necktie {}", w.members)));
            }
            let (a, b) = (cx.sig_g()?, cx.sig_kg()?);
            Ok((a != b).then(|| format!("G: {a}; K(G): {b}")))
        }
    }
}

/// Runs the selected checks on one graph. Failures and errors from lower
/// layers become failed checks with witnesses; nothing is propagated.
pub fn verify_graph(g: &Graph, checks: &[Check], opts: &VerifyOptions) -> GraphReport {
    let start = Instant::now();
    let not_low = g.low_degree_violation();
    let mut cx = Context::new(g, opts.simplex_budget);
    let mut results = Vec::with_capacity(checks.len());
    for &check in checks {
        let t0 = Instant::now();
        let outcome: Outcome = if check.needs_low_degree() && not_low.is_some() {
            Ok(Some(format!(
                "precondition: not low degree ({})",
                not_low.as_deref().unwrap_or("")
            )))
        } else if g.n() == 0 {
            Err(Error::EmptyGraph)
        } else if start.elapsed() > opts.time_budget {
            Ok(Some(format!(
                "timeout: per-graph budget of {:?} exhausted",
                opts.time_budget
            )))
        } else {
            run_check(check, &mut cx, opts)
        };
        let witness = match outcome {
            Ok(w) => w,
            Err(e) => Some(format!("error: {e}")),
        };
        let ms = if opts.record_timings {
            t0.elapsed().as_millis() as u64
        } else {
            0
        };
        results.push((
            check.name().to_string(),
            CheckResult {
                pass: witness.is_none(),
                witness,
                ms,
            },
        ));
    }
    GraphReport {
        graph6: emit_graph6(g),
        n: g.n(),
        m: g.edge_count(),
        checks: results,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{gen_cycle, gen_octahedron, gen_sun3};
    use crate::homology::homotopy_signature;

    fn quiet() -> VerifyOptions {
        VerifyOptions {
            record_timings: false,
            ..VerifyOptions::default()
        }
    }

    #[test]
    fn sun_passes_everything() {
        let r = verify_graph(&gen_sun3(), &Check::ALL, &quiet());
        assert!(r.passed(), "{}", r.to_json_line());
        assert_eq!(r.checks.len(), Check::ALL.len());
        assert_eq!(homotopy_signature(&gen_sun3()).unwrap().betti, vec![1]);
    }

    #[test]
    fn c6_passes_everything() {
        let c6 = gen_cycle(6).unwrap();
        let r = verify_graph(&c6, &Check::ALL, &quiet());
        assert!(r.passed(), "{}", r.to_json_line());
        assert_eq!(homotopy_signature(&c6).unwrap().betti, vec![1, 1]);
    }

    #[test]
    fn octahedron_fails_precondition() {
        let r = verify_graph(&gen_octahedron(3).unwrap(), &Check::LOW_DEGREE, &quiet());
        assert!(!r.passed());
        for (_, res) in &r.checks {
            assert!(res.witness.as_deref().unwrap().contains("not low degree"));
        }
    }

    #[test]
    fn json_shape() {
        let r = verify_graph(
            &gen_cycle(4).unwrap(),
            &[Check::WedgeSignature, Check::K2Helly],
            &quiet(),
        );
        assert_eq!(
            r.to_json_line(),
            r#"{"graph6":"Cl","n":4,"m":4,"checks":{"wedge_signature":{"pass":true,"witness":null,"ms":0},"k2_helly":{"pass":true,"witness":null,"ms":0}}}"#
        );
    }

    #[test]
    fn check_names_round_trip() {
        for c in Check::ALL {
            assert_eq!(Check::from_name(c.name()), Some(c));
        }
        assert_eq!(Check::from_name("nope"), None);
    }
}
