use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};
use crate::subgroup::Subgroup;

/// Index of a left coset `xH`.
pub type Coset = usize;

/// The left cosets of `H` in `G`.
///
/// Cosets are numbered by increasing minimal element, and that numbering is
/// fixed for a given subgroup. The representative chosen for each coset is
/// the minimal element by default but can be swapped out without changing
/// the numbering, which is how representative independence is exercised.
#[derive(Debug, Clone)]
pub struct CosetSpace {
    subgroup: Arc<Subgroup>,
    reps: Vec<Element>,
    coset_of: Vec<Coset>,
    members: Vec<Vec<Element>>,
}

impl CosetSpace {
    pub fn new(subgroup: Subgroup) -> Self {
        Self::from_arc(Arc::new(subgroup))
    }

    pub fn from_arc(subgroup: Arc<Subgroup>) -> Self {
        let g = Arc::clone(subgroup.group());
        let mut coset_of = vec![usize::MAX; g.order()];
        let mut reps = Vec::with_capacity(subgroup.index());
        let mut members = Vec::with_capacity(subgroup.index());
        for x in g.elements() {
            if coset_of[x] != usize::MAX {
                continue;
            }
            let c = reps.len();
            let mut coset: Vec<Element> = subgroup.members().iter().map(|&h| g.mul(x, h)).collect();
            coset.sort_unstable();
            for &y in &coset {
                coset_of[y] = c;
            }
            reps.push(x);
            members.push(coset);
        }
        CosetSpace {
            subgroup,
            reps,
            coset_of,
            members,
        }
    }

    /// The same space with different coset representatives.
    pub fn with_representatives(&self, reps: Vec<Element>) -> Result<Self> {
        if reps.len() != self.count() {
            return Err(Error::LengthMismatch {
                expected: self.count(),
                got: reps.len(),
            });
        }
        for (c, &x) in reps.iter().enumerate() {
            if x >= self.group().order() || self.coset_of[x] != c {
                return Err(Error::BadRepresentative { element: x, coset: c });
            }
        }
        Ok(CosetSpace {
            reps,
            ..self.clone()
        })
    }

    /// The same space with a uniformly random representative per coset.
    pub fn with_random_representatives<R: Rng + ?Sized>(&self, rng: &mut R) -> Self {
        let reps = self
            .members
            .iter()
            .map(|m| *m.choose(rng).expect("cosets are nonempty"))
            .collect();
        CosetSpace {
            reps,
            ..self.clone()
        }
    }

    pub fn subgroup(&self) -> &Arc<Subgroup> {
        &self.subgroup
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.subgroup.group()
    }

    /// Number of cosets `k = |G|/|H|`.
    pub fn count(&self) -> usize {
        self.reps.len()
    }

    pub fn h_size(&self) -> usize {
        self.subgroup.size()
    }

    pub fn cosets(&self) -> std::ops::Range<Coset> {
        0..self.count()
    }

    #[inline]
    pub fn rep(&self, c: Coset) -> Element {
        self.reps[c]
    }

    pub fn reps(&self) -> &[Element] {
        &self.reps
    }

    /// The canonical projection `q`.
    #[inline]
    pub fn q(&self, x: Element) -> Coset {
        self.coset_of[x]
    }

    pub fn members(&self, c: Coset) -> &[Element] {
        &self.members[c]
    }

    /// Left action `x·(yH) = (xy)H`.
    #[inline]
    pub fn act(&self, x: Element, c: Coset) -> Coset {
        self.q(self.group().mul(x, self.reps[c]))
    }

    /// Canonical display name: the name of the coset's minimal element.
    pub fn coset_name(&self, c: Coset) -> &str {
        self.group().element_name(self.members[c][0])
    }

    /// The coset containing the named element.
    pub fn find(&self, name: &str) -> Result<Coset> {
        Ok(self.q(self.group().find(name)?))
    }

    /// True when both describe the same partition of the same group; the
    /// representatives may differ.
    pub fn same_space(&self, other: &CosetSpace) -> bool {
        std::ptr::eq(self, other)
            || (*self.group() == *other.group() && self.coset_of == other.coset_of)
    }

    pub fn is_normal(&self) -> bool {
        self.subgroup.is_normal()
    }
}
