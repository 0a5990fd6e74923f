use std::fmt;
use std::sync::Arc;

use super::ring::{check_abelian_group, negation_table};
use super::{AlgebraError, Elem, FiniteRing, Violation};

/// Raw tables for a candidate module over an already validated ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleTables {
    pub add: Vec<Vec<Elem>>,
    pub theta: Elem,
    /// `action[r][x]` is `r·x`.
    pub action: Vec<Vec<Elem>>,
    pub labels: Vec<String>,
}

impl ModuleTables {
    pub fn len(&self) -> usize {
        self.add.len()
    }

    pub fn is_empty(&self) -> bool {
        self.add.is_empty()
    }

    /// Exhaustive check of the unitary module axioms over `ring`.
    pub fn validate(&self, ring: &FiniteRing) -> Result<(), Violation> {
        let m = self.len();
        let k = ring.len();
        if m == 0 {
            return Err(Violation::Shape("module has no elements".into()));
        }
        if self.add.iter().any(|row| row.len() != m) || self.theta >= m {
            return Err(Violation::Shape(format!("add table is not {m}x{m}")));
        }
        if self.action.len() != k || self.action.iter().any(|row| row.len() != m) {
            return Err(Violation::Shape(format!("action table is not {k}x{m}")));
        }
        if self.labels.len() != m {
            return Err(Violation::Shape("label count differs from module size".into()));
        }
        let out_of_range = self.add.iter().chain(&self.action).flatten().any(|&e| e >= m);
        if out_of_range {
            return Err(Violation::Shape("table entry out of range".into()));
        }
        check_abelian_group(&self.add, self.theta)?;
        let (add, act) = (&self.add, &self.action);
        for x in 0..m {
            if act[ring.one()][x] != x {
                return Err(Violation::Unitary { x });
            }
        }
        for r in 0..k {
            for s in 0..k {
                for x in 0..m {
                    if act[ring.add(r, s)][x] != add[act[r][x]][act[s][x]] {
                        return Err(Violation::ScalarDistributivity { r, s, x });
                    }
                    if act[ring.mul(r, s)][x] != act[r][act[s][x]] {
                        return Err(Violation::ActionAssociativity { r, s, x });
                    }
                }
            }
            for x in 0..m {
                for y in 0..m {
                    if act[r][add[x][y]] != add[act[r][x]][act[r][y]] {
                        return Err(Violation::VectorDistributivity { r, x, y });
                    }
                }
            }
        }
        Ok(())
    }
}

/// A validated finite unitary module over a [`FiniteRing`].
#[derive(Clone, Debug)]
pub struct FinModule {
    ring: Arc<FiniteRing>,
    tables: ModuleTables,
    neg: Vec<Elem>,
    name: String,
}

impl FinModule {
    pub fn from_tables(
        ring: Arc<FiniteRing>,
        tables: ModuleTables,
        name: impl Into<String>,
    ) -> Result<Self, AlgebraError> {
        tables.validate(&ring).map_err(AlgebraError::InvalidModule)?;
        let neg = negation_table(&tables.add, tables.theta);
        Ok(FinModule { ring, tables, neg, name: name.into() })
    }

    /// `Z_{d1} × … × Z_{dk}` as a module over the cyclic ring `Z_n`, where
    /// every `di` must divide `n`. Elements are ordered in mixed radix with
    /// the last component varying fastest.
    pub fn product(ring: Arc<FiniteRing>, orders: &[usize]) -> Result<Self, AlgebraError> {
        let n = ring.cyclic_order().ok_or(AlgebraError::NotCyclicRing)?;
        if orders.is_empty() {
            return Err(AlgebraError::IncompatibleAction { order: 0, ring_order: n });
        }
        if let Some(&d) = orders.iter().find(|&&d| d == 0 || n % d != 0) {
            return Err(AlgebraError::IncompatibleAction { order: d, ring_order: n });
        }
        let size: usize = orders.iter().product();
        let decode = |mut id: usize| -> Vec<usize> {
            let mut digits = vec![0; orders.len()];
            for (slot, &d) in digits.iter_mut().zip(orders).rev() {
                *slot = id % d;
                id /= d;
            }
            digits
        };
        let encode = |digits: &[usize]| -> usize { digits.iter().zip(orders).fold(0, |acc, (&x, &d)| acc * d + x) };
        let coords: Vec<Vec<usize>> = (0..size).map(decode).collect();
        let add = (0..size)
            .map(|a| {
                (0..size)
                    .map(|b| {
                        let sum: Vec<usize> =
                            coords[a].iter().zip(&coords[b]).zip(orders).map(|((x, y), d)| (x + y) % d).collect();
                        encode(&sum)
                    })
                    .collect()
            })
            .collect();
        let action = (0..n)
            .map(|r| {
                (0..size)
                    .map(|x| {
                        let scaled: Vec<usize> = coords[x].iter().zip(orders).map(|(&c, &d)| (r % d) * c % d).collect();
                        encode(&scaled)
                    })
                    .collect()
            })
            .collect();
        let labels = coords
            .iter()
            .map(|c| match c.as_slice() {
                [single] => single.to_string(),
                many => {
                    let parts: Vec<String> = many.iter().map(|x| x.to_string()).collect();
                    format!("({})", parts.join(","))
                }
            })
            .collect();
        let name = product_name(orders, n);
        let tables = ModuleTables { add, theta: 0, action, labels };
        FinModule::from_tables(ring, tables, name)
    }

    /// The ring acting on itself by multiplication.
    pub fn regular(ring: Arc<FiniteRing>) -> Self {
        let k = ring.len();
        let tables = ModuleTables {
            add: ring.tables().add.clone(),
            theta: ring.zero(),
            action: ring.tables().mul.clone(),
            labels: (0..k).map(|a| ring.label(a)).collect(),
        };
        let name = ring.name().to_string();
        FinModule::from_tables(ring, tables, name).expect("ring axioms imply module axioms")
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn len(&self) -> usize {
        self.tables.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn theta(&self) -> Elem {
        self.tables.theta
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.tables.add[x][y]
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.neg[x]
    }

    #[inline]
    pub fn act(&self, r: Elem, x: Elem) -> Elem {
        self.tables.action[r][x]
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.tables.labels[x]
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn tables(&self) -> &ModuleTables {
        &self.tables
    }
}

fn product_name(orders: &[usize], ring_order: usize) -> String {
    let parts: Vec<String> = orders.iter().map(|d| format!("Z{d}")).collect();
    let body = parts.join("x");
    let lcm = orders.iter().fold(1, |acc, &d| lcm(acc, d));
    if lcm == ring_order {
        body
    } else {
        format!("{body}@Z{ring_order}")
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

impl PartialEq for FinModule {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.tables == other.tables
    }
}

impl Eq for FinModule {}

impl fmt::Display for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(n: usize) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::cyclic(n).unwrap())
    }

    #[test]
    fn z4_over_z12() {
        let m = FinModule::product(ring(12), &[4]).unwrap();
        assert_eq!(m.len(), 4);
        assert_eq!(m.act(7, 3), 1);
        assert_eq!(m.name(), "Z4@Z12");
    }

    #[test]
    fn z4_over_itself() {
        let m = FinModule::product(ring(4), &[4]).unwrap();
        assert_eq!(m.add(3, 3), 2);
        assert_eq!(m.act(2, 3), 2);
        assert_eq!(m.name(), "Z4");
    }

    #[test]
    fn incompatible_order() {
        let err = FinModule::product(ring(4), &[3]).unwrap_err();
        assert!(matches!(err, AlgebraError::IncompatibleAction { order: 3, ring_order: 4 }));
    }

    #[test]
    fn klein_four_labels() {
        let m = FinModule::product(ring(2), &[2, 2]).unwrap();
        let labels: Vec<&str> = (0..4).map(|x| m.label(x)).collect();
        assert_eq!(labels, ["(0,0)", "(0,1)", "(1,0)", "(1,1)"]);
        assert_eq!(m.add(1, 3), 2);
        assert_eq!(m.name(), "Z2xZ2");
    }

    #[test]
    fn non_unitary_action_rejected() {
        let r = ring(4);
        let m = FinModule::product(r.clone(), &[4]).unwrap();
        let mut t = m.tables().clone();
        t.action[1][1] = 3;
        let err = t.validate(&r).unwrap_err();
        assert!(matches!(err, Violation::Unitary { x: 1 }));
    }
}
