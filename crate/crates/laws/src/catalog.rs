use std::fmt;
use std::str::FromStr;

use serde::Serialize;

/// Identifier of one executable law.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum LawId {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
    P7,
    P8,
    P9,
    P10,
    P11,
    P12,
    P13,
    P14,
    P15,
    P16,
    P17,
    P18,
    P19,
    P20,
    P21,
    P22,
    P23,
    P24,
}

pub const CATALOG: [LawId; 24] = [
    LawId::P1,
    LawId::P2,
    LawId::P3,
    LawId::P4,
    LawId::P5,
    LawId::P6,
    LawId::P7,
    LawId::P8,
    LawId::P9,
    LawId::P10,
    LawId::P11,
    LawId::P12,
    LawId::P13,
    LawId::P14,
    LawId::P15,
    LawId::P16,
    LawId::P17,
    LawId::P18,
    LawId::P19,
    LawId::P20,
    LawId::P21,
    LawId::P22,
    LawId::P23,
    LawId::P24,
];

/// What a law quantifies over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Shape {
    /// One IF submodule `A`.
    Single,
    /// Two IF submodules of the same module.
    Pair,
    /// A crisp submodule `N`.
    Crisp,
    /// A hom `f: M → M'` with an IF submodule of `M`.
    HomSource,
    /// A hom `f: M → M'` with an IF submodule of `M'`.
    HomTarget,
    /// An IF submodule of a ring viewed as a module over itself.
    RingIdeal,
}

impl LawId {
    pub fn as_str(self) -> &'static str {
        match self {
            LawId::P1 => "L-P1",
            LawId::P2 => "L-P2",
            LawId::P3 => "L-P3",
            LawId::P4 => "L-P4",
            LawId::P5 => "L-P5",
            LawId::P6 => "L-P6",
            LawId::P7 => "L-P7",
            LawId::P8 => "L-P8",
            LawId::P9 => "L-P9",
            LawId::P10 => "L-P10",
            LawId::P11 => "L-P11",
            LawId::P12 => "L-P12",
            LawId::P13 => "L-P13",
            LawId::P14 => "L-P14",
            LawId::P15 => "L-P15",
            LawId::P16 => "L-P16",
            LawId::P17 => "L-P17",
            LawId::P18 => "L-P18",
            LawId::P19 => "L-P19",
            LawId::P20 => "L-P20",
            LawId::P21 => "L-P21",
            LawId::P22 => "L-P22",
            LawId::P23 => "L-P23",
            LawId::P24 => "L-P24",
        }
    }

    pub fn description(self) -> &'static str {
        match self {
            LawId::P1 => "radical of an IF submodule is an IF ideal",
            LawId::P2 => "radical is idempotent",
            LawId::P3 => "radical is monotone",
            LawId::P4 => "radical commutes with intersection",
            LawId::P5 => "radical of sum of radicals is below radical of sum",
            LawId::P6 => "radical of a characteristic function is the characteristic function of the crisp radical",
            LawId::P7 => "cuts commute with the radical",
            LawId::P8 => "residual is an IF ideal",
            LawId::P9 => "ideal radical of the residual equals the radical",
            LawId::P10 => "cuts commute with the residual",
            LawId::P11 => "residual grows along epimorphic images",
            LawId::P12 => "residual grows along preimages, equality for epimorphisms",
            LawId::P13 => "residual is idempotent, monotone, meets intersections, bounds sums",
            LawId::P14 => "characteristic function is primary iff the submodule is primary",
            LawId::P15 => "proper level cuts of a primary IF submodule are primary",
            LawId::P16 => "primary proper level cuts make an IF submodule primary",
            LawId::P17 => "support of a primary IF submodule is primary",
            LawId::P18 => "primary gives weakly primary residual and prime radical",
            LawId::P19 => "for IF ideals, primary iff weakly primary",
            LawId::P20 => "radical grows along epimorphic images, equality when constant on the kernel",
            LawId::P21 => "radical grows along preimages, equality for epimorphisms",
            LawId::P22 => "epimorphic image of a primary IF submodule constant on the kernel is primary",
            LawId::P23 => "preimage of a primary IF submodule is primary",
            LawId::P24 => "cycle-shortcut radical equals the brute-force radical",
        }
    }

    /// Laws whose confirmed counterexamples fail a suite run. The rest depend
    /// on a definition the theory leaves open and are report-only.
    pub fn must_pass(self) -> bool {
        !matches!(self, LawId::P18 | LawId::P19 | LawId::P22)
    }

    pub fn shape(self) -> Shape {
        match self {
            LawId::P3 | LawId::P4 | LawId::P5 | LawId::P13 => Shape::Pair,
            LawId::P6 | LawId::P14 => Shape::Crisp,
            LawId::P11 | LawId::P20 | LawId::P22 => Shape::HomSource,
            LawId::P12 | LawId::P21 | LawId::P23 => Shape::HomTarget,
            LawId::P19 => Shape::RingIdeal,
            _ => Shape::Single,
        }
    }

    /// Whether the outcome can depend on the pairing mode of the primary
    /// conditions.
    pub fn uses_pairing(self) -> bool {
        matches!(
            self,
            LawId::P14 | LawId::P15 | LawId::P16 | LawId::P17 | LawId::P18 | LawId::P19 | LawId::P22 | LawId::P23
        )
    }

    pub fn uses_prime_definition(self) -> bool {
        self == LawId::P18
    }
}

impl fmt::Display for LawId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LawId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        CATALOG
            .iter()
            .copied()
            .find(|l| l.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| format!("unknown law {s:?}; expected L-P1 .. L-P24"))
    }
}
