use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::map::PartialMap;
use crate::value::Domain;

type Enumerator = dyn Fn(usize) -> Option<PartialMap> + Send + Sync;

/// A finite, ordered sample of a model of computation, optionally backed
/// by an enumerator for the rest of the (usually infinite) set.
#[derive(Clone)]
pub struct Model {
    name: String,
    domain: Domain,
    members: Vec<PartialMap>,
    enumerator: Option<Arc<Enumerator>>,
}

impl fmt::Debug for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Model")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("members", &self.members.iter().map(PartialMap::name).collect::<Vec<_>>())
            .field("enumerated", &self.enumerator.is_some())
            .finish()
    }
}

impl Model {
    pub fn new(name: impl Into<String>, domain: Domain, members: Vec<PartialMap>) -> Result<Self> {
        let name = name.into();
        let mut seen = HashSet::new();
        for m in &members {
            if m.domain() != domain {
                return Err(Error::InvalidModel(format!(
                    "member `{}` of `{name}` lives on {}, the model on {domain}",
                    m.name(),
                    m.domain()
                )));
            }
            if !seen.insert(m.name()) {
                return Err(Error::InvalidModel(format!("`{name}` lists `{}` twice", m.name())));
            }
        }
        Ok(Model { name, domain, members, enumerator: None })
    }

    /// Attaches a rule producing the `k`-th member of the full model.
    /// Enumerated members must share the model's domain.
    pub fn with_enumerator(mut self, f: impl Fn(usize) -> Option<PartialMap> + Send + Sync + 'static) -> Self {
        self.enumerator = Some(Arc::new(f));
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn members(&self) -> &[PartialMap] {
        &self.members
    }

    pub fn member(&self, name: &str) -> Option<&PartialMap> {
        self.members.iter().find(|m| m.name() == name)
    }

    pub fn has_enumerator(&self) -> bool {
        self.enumerator.is_some()
    }

    /// Listed members, then the first `depth` enumerated members that are
    /// not already listed (by name).
    pub fn candidates(&self, depth: usize) -> Result<Vec<PartialMap>> {
        let mut out = self.members.clone();
        let Some(en) = &self.enumerator else { return Ok(out) };
        let mut seen: HashSet<String> = self.members.iter().map(|m| m.name().to_string()).collect();
        for k in 0..depth {
            let Some(m) = en(k) else { break };
            if m.domain() != self.domain {
                return Err(Error::InvalidModel(format!(
                    "enumerated member `{}` of `{}` lives on {}",
                    m.name(),
                    self.name,
                    m.domain()
                )));
            }
            if seen.insert(m.name().to_string()) {
                out.push(m);
            }
        }
        Ok(out)
    }

    /// Listed-member containment by name.
    pub fn is_subset_of(&self, other: &Model) -> bool {
        self.members.iter().all(|m| other.member(m.name()).is_some())
    }

    /// The sub-model keeping only the named members, in the given order.
    pub fn restricted(&self, names: &[String]) -> Result<Model> {
        let members = names
            .iter()
            .map(|n| {
                self.member(n)
                    .cloned()
                    .ok_or_else(|| Error::InvalidModel(format!("`{}` has no member `{n}`", self.name)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Model { members, ..self.clone() })
    }

    /// Applies `f` to every listed member (the enumerator is dropped).
    pub fn map_members(
        &self,
        name: impl Into<String>,
        domain: Domain,
        f: impl Fn(&PartialMap) -> Result<PartialMap>,
    ) -> Result<Model> {
        let members = self.members.iter().map(f).collect::<Result<Vec<_>>>()?;
        Model::new(name, domain, members)
    }
}
