//! Finite multisets of irreducible labels.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::irrep::IrrepLabel;

/// A map from irreducible label to multiplicity.
///
/// A *genuine* decomposition has only positive multiplicities. A *virtual* one
/// may carry signed multiplicities while a formula is being assembled; call
/// [`Decomposition::into_genuine`] once all corrections have been applied.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Decomposition {
    terms: BTreeMap<IrrepLabel, i64>,
    is_virtual: bool,
}

impl Decomposition {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn new_virtual() -> Self {
        Self {
            terms: BTreeMap::new(),
            is_virtual: true,
        }
    }

    pub fn single(label: IrrepLabel) -> Self {
        let mut d = Self::new();
        d.add(label, 1);
        d
    }

    pub fn is_virtual(&self) -> bool {
        self.is_virtual
    }

    /// Adds `mult` copies of `label`.
    ///
    /// # Panics
    ///
    /// On a genuine decomposition, if the multiplicity would drop below zero.
    pub fn add(&mut self, label: IrrepLabel, mult: i64) {
        if mult == 0 {
            return;
        }
        let entry = self.terms.entry(label).or_insert(0);
        *entry += mult;
        let now = *entry;
        assert!(
            self.is_virtual || now >= 0,
            "negative multiplicity in genuine decomposition"
        );
        if now == 0 {
            self.terms.remove(&label);
        }
    }

    pub fn add_all<I: IntoIterator<Item = IrrepLabel>>(&mut self, labels: I) {
        for l in labels {
            self.add(l, 1);
        }
    }

    /// Adds `sign` times every term of `other`.
    pub fn add_scaled(&mut self, other: &Decomposition, sign: i64) {
        for (&l, &m) in &other.terms {
            self.add(l, sign * m);
        }
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn contains(&self, label: &IrrepLabel) -> bool {
        self.terms.contains_key(label)
    }

    /// Terms in label order.
    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, &i64)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Σ mult · dim`, signed for virtual decompositions.
    pub fn total_dimension(&self) -> i64 {
        self.terms
            .iter()
            .map(|(l, &m)| m * l.dimension() as i64)
            .sum()
    }

    pub fn max_multiplicity(&self) -> i64 {
        self.terms.values().copied().max().unwrap_or(0)
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.terms.values().all(|&m| m == 1)
    }

    /// Checks every multiplicity is nonnegative and clears the virtual flag.
    pub fn into_genuine(mut self) -> Result<Self> {
        if let Some((l, &m)) = self.terms.iter().find(|(_, &m)| m < 0) {
            return Err(Error::NegativeMultiplicity {
                label: l.to_string(),
                mult: m,
            });
        }
        self.is_virtual = false;
        Ok(self)
    }
}

impl FromIterator<(IrrepLabel, i64)> for Decomposition {
    fn from_iter<I: IntoIterator<Item = (IrrepLabel, i64)>>(iter: I) -> Self {
        let mut d = Self::new();
        for (l, m) in iter {
            d.add(l, m);
        }
        d
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (l, m) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *m == 1 {
                write!(f, "{l}")?;
            } else {
                write!(f, "{m}·{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_virtual {
            write!(f, "virtual ")?;
        }
        write!(f, "{{{self}}}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::irrep::parse_label;
    use crate::params::FieldParams;

    #[test]
    fn virtual_roundtrip() {
        let p = FieldParams::from_q(5).unwrap();
        let st = parse_label(&p, "st:0").unwrap();
        let one = parse_label(&p, "1d:0").unwrap();
        let mut d = Decomposition::new_virtual();
        d.add(st, -1);
        d.add(one, 1);
        assert_eq!(d.total_dimension(), -4);
        assert!(matches!(
            d.clone().into_genuine(),
            Err(Error::NegativeMultiplicity { mult: -1, .. })
        ));
        d.add(st, 2);
        let g = d.into_genuine().unwrap();
        assert!(!g.is_virtual());
        assert_eq!(g.total_dimension(), 6);
        assert_eq!(g.to_string(), "1d:0 + st:0");
    }

    #[test]
    fn zero_terms_vanish() {
        let p = FieldParams::from_q(3).unwrap();
        let st = parse_label(&p, "st:1").unwrap();
        let mut d = Decomposition::new_virtual();
        d.add(st, 1);
        d.add(st, -1);
        assert!(d.is_empty());
        assert_eq!(d.into_genuine().unwrap(), Decomposition::new());
    }
}
