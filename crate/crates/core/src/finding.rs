use std::fmt;

use serde::Serialize;

/// A law or clause that a checker can find violated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Law {
    IdentityEndpoints,
    CompositeEndpoints,
    LeftIdentity,
    RightIdentity,
    Associativity,
    FunctorEndpoints,
    FunctorIdentity,
    FunctorComposition,
    NatIsoComponent,
    NatIsoNaturality,
    PresheafIdentity,
    PresheafComposition,
    Naturality,
    ProjectionEndpoints,
    GenericTermTyping,
    FiberPullback,
    QEndpoints,
    QCommutes,
    QPullback,
    QIdentity,
    QComposition,
    Compatibility,
    FiberRepresentable,
    JPullbackEndpoints,
    JPullbackCommutes,
    JPullbackPullback,
    UniverseTotality,
}

impl Law {
    /// Stable human-readable name of the clause.
    pub fn clause(self) -> &'static str {
        match self {
            Law::IdentityEndpoints => "category: identity has matching endpoints",
            Law::CompositeEndpoints => "category: composite has matching endpoints",
            Law::LeftIdentity => "category: left identity",
            Law::RightIdentity => "category: right identity",
            Law::Associativity => "category: associativity",
            Law::FunctorEndpoints => "functor: preserves endpoints",
            Law::FunctorIdentity => "functor: preserves identities",
            Law::FunctorComposition => "functor: preserves composites",
            Law::NatIsoComponent => "natural isomorphism: component is invertible",
            Law::NatIsoNaturality => "natural isomorphism: naturality",
            Law::PresheafIdentity => "presheaf: identity acts trivially",
            Law::PresheafComposition => "presheaf: action is contravariantly functorial",
            Law::Naturality => "presheaf map: naturality",
            Law::ProjectionEndpoints => "object extension: projection runs from the extension to its context",
            Law::GenericTermTyping => "term structure: generic term lies over the reindexed type",
            Law::FiberPullback => "term structure: fiber square is a pullback",
            Law::QEndpoints => "q-morphism: endpoints",
            Law::QCommutes => "q-morphism: square commutes",
            Law::QPullback => "q-morphism: square is a pullback",
            Law::QIdentity => "q-morphism: identity law",
            Law::QComposition => "q-morphism: composition law",
            Law::Compatibility => "compatibility: generic terms reindex along q",
            Law::FiberRepresentable => "representable map: every fiber has a representation",
            Law::JPullbackEndpoints => "J-pullback: endpoints",
            Law::JPullbackCommutes => "J-pullback: square commutes",
            Law::JPullbackPullback => "J-pullback: square is a pullback",
            Law::UniverseTotality => "universe: one J-pullback for every (X, f)",
        }
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.clause())
    }
}

/// One violated law, where it failed, and the values that witness it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub law: Law,
    pub location: String,
    pub witness: String,
}

impl Finding {
    pub fn new(law: Law, location: impl Into<String>, witness: impl Into<String>) -> Self {
        Finding {
            law,
            location: location.into(),
            witness: witness.into(),
        }
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} fails at {}", self.law, self.location)?;
        if !self.witness.is_empty() {
            write!(f, " ({})", self.witness)?;
        }
        Ok(())
    }
}

/// Convenience for checkers: an empty list means valid.
pub fn has_law(findings: &[Finding], law: Law) -> bool {
    findings.iter().any(|f| f.law == law)
}
