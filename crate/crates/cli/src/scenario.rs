//! Scenario files: JSON documents naming models, encodings, one check
//! and a test plan. See `scenarios/README.md` for the format.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::Deserialize;
use simlab::constructions::{re_models, stripe_model, tri_models, OracleH};
use simlab::machines::tm::library as tm_library;
use simlab::machines::{compile_rec_to_cm, CmProgram, TmProgram};
use simlab::recdsl::{library, parse_term};
use simlab::simcheck::{permutation_family, stripe_family, EquivalenceMode, TestPlan};
use simlab::{
    compose_encodings, pullback, pushforward, Adapter, Domain, Encoding, FinitePermutation, Model, PartialMap, Value,
};

#[derive(Debug, thiserror::Error)]
pub enum ScenarioError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{path}:{line}:{column}: {msg}")]
    Parse { path: PathBuf, line: usize, column: usize, msg: String },

    #[error("{path}:{}: {context}: {msg}", .at.map(|(l, c)| format!("{l}:{c}")).unwrap_or_else(|| "?".into()))]
    Invalid { path: PathBuf, at: Option<(usize, usize)>, context: String, msg: String },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    name: String,
    #[serde(default)]
    description: Option<String>,
    #[serde(default)]
    models: Vec<RawModel>,
    #[serde(default)]
    encodings: Vec<RawEncoding>,
    check: RawCheck,
    #[serde(default)]
    plan: Option<RawPlan>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawModel {
    name: String,
    kind: String,
    // dsl-terms
    #[serde(default)]
    library: Option<String>,
    #[serde(default)]
    members: Vec<RawMember>,
    // tm-program
    #[serde(default)]
    adapter: Option<String>,
    // builtin-construction
    #[serde(default)]
    construction: Option<String>,
    #[serde(default)]
    base: Option<String>,
    #[serde(default)]
    d: Option<u64>,
    #[serde(default)]
    r: Option<u64>,
    #[serde(default)]
    part: Option<String>,
    #[serde(default)]
    i_max: Option<u64>,
    #[serde(default)]
    j_max: Option<u64>,
    #[serde(default)]
    k_max: Option<u64>,
    #[serde(default)]
    oracle: Option<RawOracle>,
    #[serde(default)]
    encoding: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMember {
    name: String,
    #[serde(default)]
    term: Option<String>,
    #[serde(default)]
    file: Option<String>,
    #[serde(default)]
    source: Option<String>,
    #[serde(default)]
    library: Option<String>,
    #[serde(default)]
    compile: Option<String>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOracle {
    kind: String,
    #[serde(default)]
    seed: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEncoding {
    name: String,
    scheme: String,
    #[serde(default)]
    d: Option<u64>,
    #[serde(default)]
    r: Option<u64>,
    #[serde(default)]
    domain: Option<String>,
    #[serde(default)]
    images: Option<Vec<u64>>,
    #[serde(default)]
    oracle: Option<RawOracle>,
    #[serde(default)]
    outer: Option<String>,
    #[serde(default)]
    inner: Option<String>,
    #[serde(default)]
    of: Option<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawCheck {
    kind: String,
    #[serde(default)]
    simulator: Option<String>,
    #[serde(default)]
    simulated: Option<String>,
    #[serde(default)]
    encoding: Option<String>,
    #[serde(default)]
    a: Option<String>,
    #[serde(default)]
    b: Option<String>,
    #[serde(default)]
    e_ab: Option<String>,
    #[serde(default)]
    e_ba: Option<String>,
    #[serde(default)]
    mode: Option<String>,
    #[serde(default)]
    model: Option<String>,
    #[serde(default)]
    family: Option<RawFamily>,
    #[serde(default)]
    prefix: Option<u64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFamily {
    #[serde(default)]
    stripes: Option<u64>,
    #[serde(default)]
    permutations: Option<usize>,
    #[serde(default)]
    encodings: Option<Vec<String>>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawInputs {
    Range(String),
    List(Vec<RawValue>),
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawValue {
    Number(u64),
    Text(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPlan {
    inputs: RawInputs,
    fuel: u64,
    #[serde(default)]
    enumeration_depth: Option<usize>,
    #[serde(default)]
    a_sample: Option<Vec<String>>,
    #[serde(default)]
    b_sample: Option<Vec<String>>,
    #[serde(default)]
    sample: Option<RawSample>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RawSample {
    pub count: usize,
    #[serde(default)]
    pub seed: u64,
}

/// The check a scenario asks for, with every reference resolved.
#[derive(Debug, Clone)]
pub enum Check {
    Simulation { simulator: Model, simulated: Model, encoding: Encoding },
    PullbackLaw { simulator: Model, simulated: Model, encoding: Encoding },
    Equivalence { a: Model, b: Model, e_ab: Encoding, e_ba: Encoding, mode: EquivalenceMode },
    Closure { model: Model },
    Probe { simulator: Model, simulated: Model, family: Vec<Encoding> },
    Narrowness { encoding: Encoding, prefix: u64 },
}

impl Check {
    pub fn kind(&self) -> &'static str {
        match self {
            Check::Simulation { .. } => "simulation",
            Check::PullbackLaw { .. } => "pullback-law",
            Check::Equivalence { .. } => "equivalence",
            Check::Closure { .. } => "closure",
            Check::Probe { .. } => "probe",
            Check::Narrowness { .. } => "narrowness",
        }
    }

    /// Domain the plan's inputs are drawn from.
    fn input_domain(&self) -> Option<Domain> {
        match self {
            Check::Simulation { simulated, .. }
            | Check::PullbackLaw { simulated, .. }
            | Check::Probe { simulated, .. } => Some(simulated.domain()),
            Check::Equivalence { b, .. } => Some(b.domain()),
            Check::Closure { model } => Some(model.domain()),
            Check::Narrowness { .. } => None,
        }
    }
}

/// A plan before its inputs are fixed; kept so command-line flags can
/// override parts of it.
#[derive(Debug, Clone)]
pub struct PlanSpec {
    pub domain: Domain,
    pub inputs: InputSpec,
    pub fuel: u64,
    pub enumeration_depth: Option<usize>,
    pub a_sample: Option<Vec<String>>,
    pub b_sample: Option<Vec<String>>,
    pub sample: Option<RawSample>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InputSpec {
    /// Canonical indices `lo..=hi` of the domain.
    Range(u64, u64),
    List(Vec<Value>),
}

impl InputSpec {
    /// `a..b` (exclusive) or `a..=b`.
    pub fn parse_range(text: &str) -> Result<InputSpec, String> {
        let text = text.trim();
        let (lo, hi, inclusive) = if let Some((a, b)) = text.split_once("..=") {
            (a, b, true)
        } else if let Some((a, b)) = text.split_once("..") {
            (a, b, false)
        } else {
            return Err(format!("`{text}` is not a range like 0..=64"));
        };
        let lo: u64 = lo.trim().parse().map_err(|_| format!("bad range start in `{text}`"))?;
        let hi: u64 = hi.trim().parse().map_err(|_| format!("bad range end in `{text}`"))?;
        let hi = if inclusive { hi } else { hi.checked_sub(1).ok_or_else(|| format!("empty range `{text}`"))? };
        if hi < lo {
            return Err(format!("empty range `{text}`"));
        }
        Ok(InputSpec::Range(lo, hi))
    }
}

impl PlanSpec {
    pub fn build(&self) -> simlab::Result<TestPlan> {
        let inputs = match &self.inputs {
            InputSpec::Range(lo, hi) => (*lo..=*hi).map(|k| self.domain.canonical(&k.into())).collect(),
            InputSpec::List(v) => v.clone(),
        };
        let mut plan = TestPlan::new(inputs, self.fuel)?;
        if let Some(d) = self.enumeration_depth {
            plan = plan.with_enumeration_depth(d);
        }
        if let Some(a) = &self.a_sample {
            plan = plan.with_a_sample(a.clone());
        }
        if let Some(b) = &self.b_sample {
            plan = plan.with_b_sample(b.clone());
        }
        if let Some(s) = self.sample {
            plan = plan.sampled(s.count, s.seed);
        }
        if plan.domain() != self.domain {
            return Err(simlab::Error::WrongDomain { expected: self.domain, found: plan.domain() });
        }
        Ok(plan)
    }
}

#[derive(Debug, Clone)]
pub struct Scenario {
    pub name: String,
    pub description: Option<String>,
    pub path: PathBuf,
    pub models: Vec<Model>,
    pub encodings: Vec<(String, Encoding)>,
    pub check: Check,
    pub plan: Option<PlanSpec>,
}

struct Loader<'a> {
    path: &'a Path,
    text: &'a str,
    dir: PathBuf,
    models: Vec<Model>,
    encodings: Vec<(String, Encoding)>,
}

/// Line and column (1-based) of the first occurrence of `"needle"`.
fn locate(text: &str, needle: &str) -> Option<(usize, usize)> {
    let quoted = format!("\"{needle}\"");
    let at = text.find(&quoted)?;
    let before = &text[..at];
    let line = before.matches('\n').count() + 1;
    let column = before.rsplit('\n').next().map_or(0, |l| l.chars().count()) + 1;
    Some((line, column))
}

impl Loader<'_> {
    fn invalid(&self, context: impl Into<String>, near: &str, msg: impl ToString) -> ScenarioError {
        ScenarioError::Invalid {
            path: self.path.to_path_buf(),
            at: locate(self.text, near),
            context: context.into(),
            msg: msg.to_string(),
        }
    }

    fn model(&self, context: &str, name: &str) -> Result<Model, ScenarioError> {
        self.models
            .iter()
            .find(|m| m.name() == name)
            .cloned()
            .ok_or_else(|| self.invalid(context, name, format!("unknown model `{name}`")))
    }

    fn encoding(&self, context: &str, name: &str) -> Result<Encoding, ScenarioError> {
        self.encodings
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, e)| e.clone())
            .ok_or_else(|| self.invalid(context, name, format!("unknown encoding `{name}`")))
    }

    fn need<'v, T>(&self, context: &str, near: &str, field: &str, v: &'v Option<T>) -> Result<&'v T, ScenarioError> {
        v.as_ref().ok_or_else(|| self.invalid(context, near, format!("missing field `{field}`")))
    }

    fn read_file(&self, context: &str, file: &str) -> Result<String, ScenarioError> {
        let p = self.dir.join(file);
        std::fs::read_to_string(&p).map_err(|e| self.invalid(context, file, format!("{}: {e}", p.display())))
    }

    fn oracle(&self, context: &str, raw: &RawOracle) -> Result<OracleH, ScenarioError> {
        match raw.kind.as_str() {
            "zeros" => Ok(OracleH::all_zeros()),
            "parity" => Ok(OracleH::parity()),
            "random" => Ok(OracleH::pseudorandom(raw.seed.unwrap_or(0))),
            other => Err(self.invalid(context, other, format!("unknown oracle `{other}` (zeros, parity, random)"))),
        }
    }

    fn build_model(&self, idx: usize, raw: &RawModel) -> Result<Model, ScenarioError> {
        let ctx = format!("models[{idx}] `{}`", raw.name);
        let core = |e: simlab::Error| self.invalid(&ctx, &raw.name, e);
        match raw.kind.as_str() {
            "dsl-terms" => {
                let mut members = Vec::new();
                match raw.library.as_deref() {
                    None => {}
                    Some("rec-suite") => {
                        for (n, t) in library::rec_suite() {
                            members.push(PartialMap::term(n, t).map_err(core)?);
                        }
                    }
                    Some(other) => {
                        return Err(self.invalid(&ctx, other, format!("unknown term library `{other}` (rec-suite)")))
                    }
                }
                for m in &raw.members {
                    let src = self.need(&ctx, &m.name, "term", &m.term)?;
                    let t = parse_term(src).map_err(|e| self.invalid(&ctx, src, e))?;
                    members.push(PartialMap::term(m.name.clone(), t).map_err(|e| self.invalid(&ctx, src, e))?);
                }
                Model::new(raw.name.clone(), Domain::Nat, members).map_err(core)
            }
            "tm-program" => {
                let adapter = match raw.adapter.as_deref() {
                    None | Some("native") => Adapter::Native,
                    Some("nat") => Adapter::NatViaBits,
                    Some(other) => {
                        return Err(self.invalid(&ctx, other, format!("unknown adapter `{other}` (native, nat)")))
                    }
                };
                let mut members = Vec::new();
                for m in &raw.members {
                    let program: TmProgram = match (&m.file, &m.source, &m.library) {
                        (Some(f), None, None) => {
                            self.read_file(&ctx, f)?.parse().map_err(|e| self.invalid(&ctx, f, format!("{f}: {e}")))?
                        }
                        (None, Some(s), None) => s.parse().map_err(|e| self.invalid(&ctx, &m.name, e))?,
                        (None, None, Some(l)) => match l.as_str() {
                            "binary_successor" => tm_library::binary_successor(),
                            "erase_all" => tm_library::erase_all(),
                            "identity" => tm_library::identity(),
                            other => return Err(self.invalid(&ctx, other, format!("unknown machine `{other}`"))),
                        },
                        _ => {
                            return Err(self.invalid(&ctx, &m.name, "give exactly one of `file`, `source`, `library`"))
                        }
                    };
                    members.push(PartialMap::tm(m.name.clone(), program, adapter));
                }
                let domain = if adapter == Adapter::Native { Domain::Bits } else { Domain::Nat };
                Model::new(raw.name.clone(), domain, members).map_err(core)
            }
            "cm-program" => {
                let mut members = Vec::new();
                for m in &raw.members {
                    let program: CmProgram = match (&m.file, &m.source, &m.compile) {
                        (Some(f), None, None) => {
                            self.read_file(&ctx, f)?.parse().map_err(|e| self.invalid(&ctx, f, format!("{f}: {e}")))?
                        }
                        (None, Some(s), None) => s.parse().map_err(|e| self.invalid(&ctx, &m.name, e))?,
                        (None, None, Some(t)) => {
                            let term = parse_term(t).map_err(|e| self.invalid(&ctx, t, e))?;
                            compile_rec_to_cm(&term).map_err(|e| self.invalid(&ctx, t, e))?
                        }
                        _ => {
                            return Err(self.invalid(&ctx, &m.name, "give exactly one of `file`, `source`, `compile`"))
                        }
                    };
                    members.push(PartialMap::cm(m.name.clone(), program).map_err(|e| self.invalid(&ctx, &m.name, e))?);
                }
                Model::new(raw.name.clone(), Domain::Nat, members).map_err(core)
            }
            "builtin-construction" => self.build_construction(&ctx, raw),
            other => Err(self.invalid(
                &ctx,
                other,
                format!("unknown model kind `{other}` (dsl-terms, tm-program, cm-program, builtin-construction)"),
            )),
        }
    }

    fn build_construction(&self, ctx: &str, raw: &RawModel) -> Result<Model, ScenarioError> {
        let construction = self.need(ctx, &raw.name, "construction", &raw.construction)?;
        let core = |e: simlab::Error| self.invalid(ctx, &raw.name, e);
        let part = raw.part.as_deref();
        let bad_part = |p: Option<&str>, allowed: &str| {
            self.invalid(ctx, p.unwrap_or(&raw.name), format!("`part` must be one of {allowed}"))
        };
        let model = match construction.as_str() {
            "stripe" => {
                let base = self.model(ctx, self.need(ctx, &raw.name, "base", &raw.base)?)?;
                let d = *self.need(ctx, &raw.name, "d", &raw.d)?;
                stripe_model(&base, d, raw.r.unwrap_or(0)).map_err(core)?
            }
            "tri" => {
                let (i, j, k) = (raw.i_max.unwrap_or(3), raw.j_max.unwrap_or(3), raw.k_max.unwrap_or(5));
                let (a, b) = tri_models(i, j, k).map_err(core)?;
                match part {
                    Some("A") => a,
                    Some("B") => b,
                    p => return Err(bad_part(p, "A, B")),
                }
            }
            "re" => {
                let oracle = self.oracle(ctx, self.need(ctx, &raw.name, "oracle", &raw.oracle)?)?;
                let (sim, simulated, _) = re_models(&oracle, raw.i_max.unwrap_or(8)).map_err(core)?;
                match part {
                    Some("simulator") => sim,
                    Some("simulated") => simulated,
                    p => return Err(bad_part(p, "simulator, simulated")),
                }
            }
            "godel" => {
                // the base model carried over to pure lists
                let base = self.model(ctx, self.need(ctx, &raw.name, "base", &raw.base)?)?;
                let e = Encoding::godel().inverse().map_err(core)?;
                base.map_members(raw.name.clone(), Domain::List, |f| pushforward(&e, f)).map_err(core)?
            }
            "pushforward" | "pullback" => {
                let base = self.model(ctx, self.need(ctx, &raw.name, "base", &raw.base)?)?;
                let e = self.encoding(ctx, self.need(ctx, &raw.name, "encoding", &raw.encoding)?)?;
                if construction == "pushforward" {
                    base.map_members(raw.name.clone(), e.target(), |f| pushforward(&e, f)).map_err(core)?
                } else {
                    base.map_members(raw.name.clone(), e.source(), |f| pullback(&e, f)).map_err(core)?
                }
            }
            other => {
                return Err(self.invalid(
                    ctx,
                    other,
                    format!("unknown construction `{other}` (stripe, tri, re, godel, pushforward, pullback)"),
                ))
            }
        };
        // constructions name their own models; the scenario's name wins
        let members = model.members().to_vec();
        let renamed = Model::new(raw.name.clone(), model.domain(), members).map_err(core)?;
        Ok(match construction.as_str() {
            "tri" => {
                let with_g = part == Some("A");
                renamed.with_enumerator(move |k| Some(simlab::constructions::tri::enumerate_member(k, with_g)))
            }
            _ => renamed,
        })
    }

    fn build_encoding(&self, idx: usize, raw: &RawEncoding) -> Result<Encoding, ScenarioError> {
        let ctx = format!("encodings[{idx}] `{}`", raw.name);
        let core = |e: simlab::Error| self.invalid(&ctx, &raw.name, e);
        Ok(match raw.scheme.as_str() {
            "identity" => {
                let d = raw.domain.as_deref().unwrap_or("nat");
                Encoding::identity(d.parse().map_err(|e| self.invalid(&ctx, d, e))?)
            }
            "stripe" => {
                Encoding::stripe(*self.need(&ctx, &raw.name, "d", &raw.d)?, raw.r.unwrap_or(0)).map_err(core)?
            }
            "tri-pi" => Encoding::tri_pi(),
            "tri-pi-inverse" => Encoding::tri_pi_inverse(),
            "bits" => Encoding::bits(),
            "bits-inverse" => Encoding::bits().inverse().map_err(core)?,
            "godel" => Encoding::godel(),
            "godel-inverse" => Encoding::godel().inverse().map_err(core)?,
            "table" => {
                let images = self.need(&ctx, &raw.name, "images", &raw.images)?;
                Encoding::table(FinitePermutation::from_images(images).map_err(core)?)
            }
            "rho" => Encoding::rho(self.oracle(&ctx, self.need(&ctx, &raw.name, "oracle", &raw.oracle)?)?),
            "compose" => {
                let outer = self.encoding(&ctx, self.need(&ctx, &raw.name, "outer", &raw.outer)?)?;
                let inner = self.encoding(&ctx, self.need(&ctx, &raw.name, "inner", &raw.inner)?)?;
                compose_encodings(&outer, &inner).map_err(core)?
            }
            "inverse" => self.encoding(&ctx, self.need(&ctx, &raw.name, "of", &raw.of)?)?.inverse().map_err(core)?,
            other => {
                return Err(self.invalid(
                    &ctx,
                    other,
                    format!(
                        "unknown scheme `{other}` (identity, stripe, tri-pi, tri-pi-inverse, bits, bits-inverse, \
                         godel, godel-inverse, table, rho, compose, inverse)"
                    ),
                ))
            }
        })
    }

    fn build_check(&self, raw: &RawCheck) -> Result<Check, ScenarioError> {
        let ctx = "check";
        let field = |name: &str, v: &Option<String>| -> Result<String, ScenarioError> {
            Ok(self.need(ctx, &raw.kind, name, v)?.clone())
        };
        Ok(match raw.kind.as_str() {
            "simulation" | "pullback-law" => {
                let simulator = self.model(ctx, &field("simulator", &raw.simulator)?)?;
                let simulated = self.model(ctx, &field("simulated", &raw.simulated)?)?;
                let encoding = self.encoding(ctx, &field("encoding", &raw.encoding)?)?;
                if raw.kind == "simulation" {
                    Check::Simulation { simulator, simulated, encoding }
                } else {
                    Check::PullbackLaw { simulator, simulated, encoding }
                }
            }
            "equivalence" => {
                let mode = match raw.mode.as_deref().unwrap_or("plain") {
                    "plain" => EquivalenceMode::Plain,
                    "strong" => EquivalenceMode::Strong,
                    "isomorphism" => EquivalenceMode::Isomorphism,
                    other => {
                        return Err(self.invalid(
                            ctx,
                            other,
                            format!("unknown mode `{other}` (plain, strong, isomorphism)"),
                        ))
                    }
                };
                Check::Equivalence {
                    a: self.model(ctx, &field("a", &raw.a)?)?,
                    b: self.model(ctx, &field("b", &raw.b)?)?,
                    e_ab: self.encoding(ctx, &field("e_ab", &raw.e_ab)?)?,
                    e_ba: self.encoding(ctx, &field("e_ba", &raw.e_ba)?)?,
                    mode,
                }
            }
            "closure" => Check::Closure { model: self.model(ctx, &field("model", &raw.model)?)? },
            "probe" => {
                let fam = self.need(ctx, &raw.kind, "family", &raw.family)?;
                let family = match (fam.stripes, fam.permutations, &fam.encodings) {
                    (Some(d), None, None) => stripe_family(d),
                    (None, Some(k), None) if k <= 8 => permutation_family(k),
                    (None, Some(_), None) => return Err(self.invalid(ctx, "permutations", "at most 8 points")),
                    (None, None, Some(names)) => {
                        names.iter().map(|n| self.encoding(ctx, n)).collect::<Result<Vec<_>, _>>()?
                    }
                    _ => {
                        return Err(self.invalid(
                            ctx,
                            "family",
                            "give exactly one of `stripes`, `permutations`, `encodings`",
                        ))
                    }
                };
                if family.is_empty() {
                    return Err(self.invalid(ctx, "family", "empty encoding family"));
                }
                Check::Probe {
                    simulator: self.model(ctx, &field("simulator", &raw.simulator)?)?,
                    simulated: self.model(ctx, &field("simulated", &raw.simulated)?)?,
                    family,
                }
            }
            "narrowness" => Check::Narrowness {
                encoding: self.encoding(ctx, &field("encoding", &raw.encoding)?)?,
                prefix: *self.need(ctx, &raw.kind, "prefix", &raw.prefix)?,
            },
            other => {
                return Err(self.invalid(
                    ctx,
                    other,
                    format!(
                        "unknown check `{other}` (simulation, equivalence, closure, pullback-law, probe, narrowness)"
                    ),
                ))
            }
        })
    }

    fn build_plan(&self, raw: &RawPlan, domain: Domain) -> Result<PlanSpec, ScenarioError> {
        let ctx = "plan";
        let inputs = match &raw.inputs {
            RawInputs::Range(r) => InputSpec::parse_range(r).map_err(|m| self.invalid(ctx, r, m))?,
            RawInputs::List(items) => {
                let mut vs = Vec::new();
                for item in items {
                    let text = match item {
                        RawValue::Number(n) => n.to_string(),
                        RawValue::Text(t) => t.clone(),
                    };
                    vs.push(Value::parse(domain, &text).map_err(|e| self.invalid(ctx, &text, e))?);
                }
                InputSpec::List(vs)
            }
        };
        let spec = PlanSpec {
            domain,
            inputs,
            fuel: raw.fuel,
            enumeration_depth: raw.enumeration_depth,
            a_sample: raw.a_sample.clone(),
            b_sample: raw.b_sample.clone(),
            sample: raw.sample,
        };
        spec.build().map_err(|e| self.invalid(ctx, "plan", e))?;
        Ok(spec)
    }
}

/// Parses and fully validates a scenario file.
pub fn load_scenario(path: &Path) -> Result<Scenario, ScenarioError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| ScenarioError::Io { path: path.to_path_buf(), source })?;
    parse_scenario(path, &text)
}

/// Like [`load_scenario`] with the text already in hand; relative program
/// files resolve against `path`'s directory.
pub fn parse_scenario(path: &Path, text: &str) -> Result<Scenario, ScenarioError> {
    let raw: RawScenario = serde_json::from_str(text).map_err(|e| ScenarioError::Parse {
        path: path.to_path_buf(),
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })?;
    let mut loader = Loader {
        path,
        text,
        dir: path.parent().map(Path::to_path_buf).unwrap_or_default(),
        models: Vec::new(),
        encodings: Vec::new(),
    };
    // encodings first so pushforward/pullback constructions can use them;
    // encodings never refer to models
    let mut seen = BTreeMap::new();
    for (i, raw_e) in raw.encodings.iter().enumerate() {
        if seen.insert(raw_e.name.clone(), ()).is_some() {
            return Err(loader.invalid(
                format!("encodings[{i}]"),
                &raw_e.name,
                format!("duplicate encoding `{}`", raw_e.name),
            ));
        }
        let e = loader.build_encoding(i, raw_e)?;
        loader.encodings.push((raw_e.name.clone(), e));
    }
    for (i, raw_m) in raw.models.iter().enumerate() {
        if loader.models.iter().any(|m| m.name() == raw_m.name) {
            return Err(loader.invalid(
                format!("models[{i}]"),
                &raw_m.name,
                format!("duplicate model `{}`", raw_m.name),
            ));
        }
        let m = loader.build_model(i, raw_m)?;
        loader.models.push(m);
    }
    let check = loader.build_check(&raw.check)?;
    let plan = match (check.input_domain(), &raw.plan) {
        (None, _) => None,
        (Some(d), Some(p)) => Some(loader.build_plan(p, d)?),
        (Some(_), None) => {
            return Err(loader.invalid("plan", "check", format!("a {} check needs a `plan`", check.kind())))
        }
    };
    Ok(Scenario {
        name: raw.name,
        description: raw.description,
        path: path.to_path_buf(),
        models: loader.models,
        encodings: loader.encodings,
        check,
        plan,
    })
}
