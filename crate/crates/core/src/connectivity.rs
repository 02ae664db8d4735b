//! Connectivity vocabulary shared by the complex and p-adic classifiers.

use std::fmt;

/// The connectivity trichotomy, plus `Undetermined` for runs the exact
/// p-adic engine cannot decide within budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Connectivity {
    Connected,
    Disconnected,
    TotallyDisconnected,
    Undetermined,
}

impl fmt::Display for Connectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Connectivity::Connected => "connected",
            Connectivity::Disconnected => "disconnected",
            Connectivity::TotallyDisconnected => "totally-disconnected",
            Connectivity::Undetermined => "undetermined",
        };
        f.write_str(name)
    }
}

/// How a classification was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DecidedBy {
    /// A connectivity theorem applied without any orbit simulation.
    Theorem,
    /// Critical-orbit simulation reached a decisive outcome.
    Simulation,
    /// A "bounded" claim that only reflects the iteration budget.
    BudgetExhausted,
}

impl fmt::Display for DecidedBy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            DecidedBy::Theorem => "theorem",
            DecidedBy::Simulation => "simulation",
            DecidedBy::BudgetExhausted => "budget-exhausted",
        };
        f.write_str(name)
    }
}

/// Outcome of a connectivity classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectivityClass {
    pub connectivity: Connectivity,
    pub decided_by: DecidedBy,
    /// Escape index per critical orbit, in critical-point order; `None`
    /// means the orbit did not escape (within budget, or provably for
    /// the exact engine). Empty when a theorem decided without orbits.
    pub critical_escape_indices: Vec<Option<u32>>,
}

impl ConnectivityClass {
    /// The per-critical-point escaped flags.
    pub fn escaped_flags(&self) -> Vec<bool> {
        self.critical_escape_indices
            .iter()
            .map(Option::is_some)
            .collect()
    }
}

/// Maps per-critical-orbit escape flags onto the trichotomy: none
/// escaped means connected, all escaped totally disconnected, and a
/// proper mix disconnected. Independent of the ordering of the flags.
pub fn trichotomy(escaped: &[bool]) -> Connectivity {
    let escaped_count = escaped.iter().filter(|&&e| e).count();
    if escaped_count == 0 {
        Connectivity::Connected
    } else if escaped_count == escaped.len() {
        Connectivity::TotallyDisconnected
    } else {
        Connectivity::Disconnected
    }
}
