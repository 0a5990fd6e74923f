use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use ifmod_core::algebra::{AlgebraError, Carrier, FinModule, FiniteRing, ModuleTables, RingTables};
use ifmod_core::degree::{parse_unit, Rational};
use ifmod_core::theory::{Pairing, PrimeDefinition};

use crate::HarnessError;

/// Where a budget module comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleSource {
    /// `ℤ_{d₁} × … × ℤ_{dk}` over `ℤ_n`; `n = 0` means the lcm of the orders.
    Cyclic { orders: Vec<usize>, ring: usize },
    /// Arbitrary tables, validated before use.
    Custom { name: String, ring: RingTables, module: ModuleTables },
}

impl ModuleSource {
    pub fn build(&self) -> Result<Carrier, AlgebraError> {
        match self {
            ModuleSource::Cyclic { orders, ring } => {
                let n = if *ring == 0 { orders.iter().copied().fold(1, lcm).max(2) } else { *ring };
                let r = Arc::new(FiniteRing::cyclic(n)?);
                Ok(Carrier::module(FinModule::product(r, orders)?))
            }
            ModuleSource::Custom { name, ring, module } => {
                let r = Arc::new(FiniteRing::from_tables(ring.clone(), format!("{name}-ring"))?);
                Ok(Carrier::module(FinModule::from_tables(r, module.clone(), name.clone())?))
            }
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

impl FromStr for ModuleSource {
    type Err = String;

    /// `z4`, `z2xz2`, `z4@z12` (module `ℤ₄` over `ℤ₁₂`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || format!("bad module descriptor {s:?}; expected e.g. z4, z2xz2, z4@z12");
        let t = s.trim().to_ascii_lowercase();
        let (module, ring) = match t.split_once('@') {
            Some((m, r)) => (m.to_string(), r.strip_prefix('z').and_then(|n| n.parse().ok()).ok_or_else(bad)?),
            None => (t.clone(), 0),
        };
        let orders = module
            .split('x')
            .map(|part| part.trim().strip_prefix('z').and_then(|n| n.parse::<usize>().ok()).filter(|&n| n >= 1))
            .collect::<Option<Vec<_>>>()
            .ok_or_else(bad)?;
        Ok(ModuleSource::Cyclic { orders, ring })
    }
}

impl fmt::Display for ModuleSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModuleSource::Cyclic { orders, ring } => {
                let parts: Vec<String> = orders.iter().map(|d| format!("z{d}")).collect();
                f.write_str(&parts.join("x"))?;
                if *ring != 0 {
                    write!(f, "@z{ring}")?;
                }
                Ok(())
            }
            ModuleSource::Custom { name, .. } => write!(f, "custom:{name}"),
        }
    }
}

/// Everything that determines a suite run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceBudget {
    pub modules: Vec<ModuleSource>,
    pub grid: Vec<Rational>,
    pub max_exhaustive: usize,
    pub samples: usize,
    pub seed: u64,
    pub include_paper_examples: bool,
    pub pairing: Pairing,
    pub prime_definition: PrimeDefinition,
}

impl InstanceBudget {
    /// `ℤ₂, ℤ₄, ℤ₆, ℤ₂×ℤ₂` exhaustive over `{0, ½, 1}`, `ℤ₁₂` sampled.
    pub fn desk() -> Self {
        InstanceBudget {
            modules: ["z2", "z4", "z6", "z2xz2", "z12"].iter().map(|s| s.parse().expect("literal")).collect(),
            grid: parse_grid("0,1/2,1").expect("literal"),
            max_exhaustive: 6,
            samples: 500,
            seed: 42,
            include_paper_examples: true,
            pairing: Pairing::Joint,
            prime_definition: PrimeDefinition::WeaklyCompletelyPrime,
        }
    }

    /// No modules and no paper examples: every law is vacuous.
    pub fn empty() -> Self {
        InstanceBudget { modules: Vec::new(), include_paper_examples: false, ..Self::desk() }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        let zero = Rational::from_integer(0);
        let one = Rational::from_integer(1);
        if !self.grid.contains(&zero) || !self.grid.contains(&one) {
            return Err(HarnessError::Grid("grid must contain 0 and 1".into()));
        }
        Ok(())
    }

    pub fn grid_text(&self) -> String {
        self.grid.iter().map(|q| q.to_string()).collect::<Vec<_>>().join(",")
    }

    pub fn modules_text(&self) -> String {
        self.modules.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Comma-separated degrees, sorted and deduplicated.
pub fn parse_grid(text: &str) -> Result<Vec<Rational>, HarnessError> {
    let mut grid = text
        .split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| parse_unit(s).map_err(|e| HarnessError::Grid(e.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    grid.sort();
    grid.dedup();
    if grid.is_empty() {
        return Err(HarnessError::Grid("empty grid".into()));
    }
    Ok(grid)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn descriptors() {
        let m: ModuleSource = "z4@z12".parse().unwrap();
        assert_eq!(m, ModuleSource::Cyclic { orders: vec![4], ring: 12 });
        assert_eq!(m.to_string(), "z4@z12");
        assert_eq!(m.build().unwrap().len(), 4);
        let k: ModuleSource = "z2xz2".parse().unwrap();
        assert_eq!(k.build().unwrap().ring().len(), 2);
        assert!("q4".parse::<ModuleSource>().is_err());
        assert!("z3@z4".parse::<ModuleSource>().unwrap().build().is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(parse_grid("1, 0, 1/2, 0.5").unwrap().len(), 3);
        let mut b = InstanceBudget::desk();
        b.grid = parse_grid("0,1/2").unwrap();
        assert!(b.validate().is_err());
    }
}
