use std::fmt;

use super::{AlgebraError, Elem, Violation};

/// Raw Cayley tables for a candidate ring, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingTables {
    pub add: Vec<Vec<Elem>>,
    pub mul: Vec<Vec<Elem>>,
    pub zero: Elem,
    pub one: Elem,
}

impl RingTables {
    /// Modular tables for the integers mod `n`.
    pub fn cyclic(n: usize) -> Self {
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| (a * b) % n).collect()).collect();
        RingTables { add, mul, zero: 0, one: 1 % n.max(1) }
    }

    pub fn len(&self) -> usize {
        self.add.len()
    }

    pub fn is_empty(&self) -> bool {
        self.add.is_empty()
    }

    fn check_shape(&self) -> Result<(), Violation> {
        let k = self.len();
        if k == 0 {
            return Err(Violation::Shape("ring has no elements".into()));
        }
        for (name, table) in [("add", &self.add), ("mul", &self.mul)] {
            if table.len() != k || table.iter().any(|row| row.len() != k) {
                return Err(Violation::Shape(format!("{name} table is not {k}x{k}")));
            }
            if let Some(bad) = table.iter().flatten().find(|&&e| e >= k) {
                return Err(Violation::Shape(format!("{name} table entry {bad} out of range")));
            }
        }
        if self.zero >= k || self.one >= k {
            return Err(Violation::Shape("zero or one out of range".into()));
        }
        Ok(())
    }

    /// Exhaustively checks the commutative unital ring axioms. Returns the
    /// first violated axiom together with the offending tuple.
    pub fn validate(&self) -> Result<(), Violation> {
        self.check_shape()?;
        let k = self.len();
        let (add, mul) = (&self.add, &self.mul);
        if self.zero == self.one {
            return Err(Violation::ZeroEqualsOne);
        }
        check_abelian_group(add, self.zero)?;
        for a in 0..k {
            if mul[a][self.one] != a || mul[self.one][a] != a {
                return Err(Violation::MulIdentity { a });
            }
            for b in 0..k {
                if mul[a][b] != mul[b][a] {
                    return Err(Violation::MulCommutativity { a, b });
                }
            }
        }
        for a in 0..k {
            for b in 0..k {
                for c in 0..k {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Violation::MulAssociativity { a, b, c });
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(Violation::Distributivity { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn check_abelian_group(add: &[Vec<Elem>], zero: Elem) -> Result<(), Violation> {
    let k = add.len();
    for a in 0..k {
        if add[a][zero] != a || add[zero][a] != a {
            return Err(Violation::AddIdentity { a });
        }
        if !(0..k).any(|b| add[a][b] == zero) {
            return Err(Violation::AddInverse { a });
        }
        for b in 0..k {
            if add[a][b] != add[b][a] {
                return Err(Violation::AddCommutativity { a, b });
            }
        }
    }
    for a in 0..k {
        for b in 0..k {
            for c in 0..k {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return Err(Violation::AddAssociativity { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// A validated finite commutative ring with unity, stored as lookup tables.
#[derive(Clone, Debug)]
pub struct FiniteRing {
    tables: RingTables,
    neg: Vec<Elem>,
    cyclic_order: Option<usize>,
    name: String,
}

impl FiniteRing {
    pub fn from_tables(tables: RingTables, name: impl Into<String>) -> Result<Self, AlgebraError> {
        tables.validate().map_err(AlgebraError::InvalidRing)?;
        let neg = negation_table(&tables.add, tables.zero);
        Ok(FiniteRing { tables, neg, cyclic_order: None, name: name.into() })
    }

    /// The ring of integers modulo `n`, elements `0..n`.
    pub fn cyclic(n: usize) -> Result<Self, AlgebraError> {
        if n < 2 {
            return Err(AlgebraError::InvalidOrder(n));
        }
        let mut ring = Self::from_tables(RingTables::cyclic(n), format!("Z{n}"))?;
        ring.cyclic_order = Some(n);
        Ok(ring)
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.len()
    }

    pub fn zero(&self) -> Elem {
        self.tables.zero
    }

    pub fn one(&self) -> Elem {
        self.tables.one
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        self.tables.add[a][b]
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.tables.mul[a][b]
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        self.neg[a]
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    /// `Some(n)` when this ring was built as the integers mod `n`.
    pub fn cyclic_order(&self) -> Option<usize> {
        self.cyclic_order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tables(&self) -> &RingTables {
        &self.tables
    }

    /// The distinct positive powers `r, r², …, rᵏ` of `r`, stopping just
    /// before the first repeat. The last entry lies in the terminal cycle.
    pub fn distinct_powers(&self, r: Elem) -> Vec<Elem> {
        let mut seen = vec![false; self.len()];
        let mut powers = Vec::new();
        let mut p = r;
        while !seen[p] {
            seen[p] = true;
            powers.push(p);
            p = self.mul(p, r);
        }
        powers
    }

    pub fn label(&self, a: Elem) -> String {
        a.to_string()
    }
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.tables == other.tables
    }
}

impl Eq for FiniteRing {}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

pub(crate) fn negation_table(add: &[Vec<Elem>], zero: Elem) -> Vec<Elem> {
    (0..add.len()).map(|a| (0..add.len()).find(|&b| add[a][b] == zero).expect("validated group")).collect()
}
