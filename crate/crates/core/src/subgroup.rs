use std::collections::{BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// Largest group `all_subgroups` will enumerate by default.
pub const DEFAULT_ENUMERATION_BOUND: usize = 720;

#[derive(Debug, Clone)]
pub struct Subgroup {
    group: Arc<FiniteGroup>,
    members: Vec<Element>,
    contains: Vec<bool>,
    generators: Vec<Element>,
    normal: bool,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        *self.group == *other.group && self.members == other.members
    }
}

impl Subgroup {
    /// Validates an explicit member set.
    pub fn new(group: &Arc<FiniteGroup>, members: impl IntoIterator<Item = Element>) -> Result<Self> {
        let members: BTreeSet<Element> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptySubgroup);
        }
        if let Some(&bad) = members.iter().find(|&&a| a >= group.order()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        if !members.contains(&group.identity()) {
            return Err(Error::MissingIdentity);
        }
        for &a in &members {
            for &b in &members {
                let ab = group.mul(a, b);
                if !members.contains(&ab) {
                    return Err(Error::NotClosed {
                        a: group.element_name(a).to_string(),
                        b: group.element_name(b).to_string(),
                        product: group.element_name(ab).to_string(),
                    });
                }
            }
        }
        // Closure under multiplication implies closure under inversion in a finite group.
        Ok(Self::from_closed(group, members.into_iter().collect()))
    }

    /// The subgroup generated by `generators`.
    pub fn generated(group: &Arc<FiniteGroup>, generators: &[Element]) -> Result<Self> {
        if let Some(&bad) = generators.iter().find(|&&a| a >= group.order()) {
            return Err(Error::ElementOutOfRange(bad));
        }
        Ok(Self::from_closed(group, closure(group, generators)))
    }

    /// The subgroup generated by named elements, e.g. `["(0 1)"]` or `["2"]`.
    pub fn from_names<S: AsRef<str>>(group: &Arc<FiniteGroup>, names: &[S]) -> Result<Self> {
        let gens = names
            .iter()
            .map(|n| group.find(n.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Self::generated(group, &gens)
    }

    pub fn trivial(group: &Arc<FiniteGroup>) -> Self {
        Self::from_closed(group, vec![group.identity()])
    }

    pub fn whole(group: &Arc<FiniteGroup>) -> Self {
        Self::from_closed(group, group.elements().collect())
    }

    fn from_closed(group: &Arc<FiniteGroup>, members: Vec<Element>) -> Self {
        let mut contains = vec![false; group.order()];
        for &a in &members {
            contains[a] = true;
        }
        let generators = minimal_generators(group, &members);
        let normal = left_equals_right_cosets(group, &members);
        Subgroup {
            group: Arc::clone(group),
            members,
            contains,
            generators,
            normal,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    /// Sorted member indices.
    pub fn members(&self) -> &[Element] {
        &self.members
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn index(&self) -> usize {
        self.group.order() / self.members.len()
    }

    #[inline]
    pub fn contains(&self, a: Element) -> bool {
        self.contains[a]
    }

    /// A short generating set, greedily chosen in index order.
    pub fn generators(&self) -> &[Element] {
        &self.generators
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|&a| self.group.element_name(a).to_string())
            .collect()
    }

    /// `<g1, g2>` style label; `<e>` spelled with the identity's name.
    pub fn label(&self) -> String {
        let names = if self.generators.is_empty() {
            vec![self.group.element_name(self.group.identity()).to_string()]
        } else {
            self.generator_names()
        };
        format!("<{}>", names.join(", "))
    }

    pub fn is_normal(&self) -> bool {
        self.normal
    }
}

/// Orbit of the identity under right multiplication by the generators.
pub(crate) fn closure(group: &FiniteGroup, generators: &[Element]) -> Vec<Element> {
    let mut inside = vec![false; group.order()];
    inside[group.identity()] = true;
    let mut stack = vec![group.identity()];
    while let Some(a) = stack.pop() {
        for &g in generators {
            let b = group.mul(a, g);
            if !inside[b] {
                inside[b] = true;
                stack.push(b);
            }
        }
    }
    (0..group.order()).filter(|&a| inside[a]).collect()
}

fn minimal_generators(group: &FiniteGroup, members: &[Element]) -> Vec<Element> {
    let mut gens = Vec::new();
    let mut span = vec![false; group.order()];
    span[group.identity()] = true;
    for &a in members {
        if !span[a] {
            gens.push(a);
            for b in closure(group, &gens) {
                span[b] = true;
            }
        }
    }
    gens
}

/// Normality via `gH = Hg` for every `g`.
fn left_equals_right_cosets(group: &FiniteGroup, members: &[Element]) -> bool {
    group.elements().all(|g| {
        let mut left: Vec<Element> = members.iter().map(|&h| group.mul(g, h)).collect();
        let mut right: Vec<Element> = members.iter().map(|&h| group.mul(h, g)).collect();
        left.sort_unstable();
        right.sort_unstable();
        left == right
    })
}

/// Every subgroup of `group`, sorted by size then member list.
pub fn all_subgroups(group: &Arc<FiniteGroup>) -> Result<Vec<Subgroup>> {
    all_subgroups_bounded(group, DEFAULT_ENUMERATION_BOUND)
}

pub fn all_subgroups_bounded(group: &Arc<FiniteGroup>, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::GroupTooLarge { bound });
    }
    // Every subgroup is the join of the cyclic subgroups of its elements, so
    // repeatedly joining known subgroups with cyclic ones reaches all of them.
    let mut cyclic: Vec<Vec<Element>> = group.elements().map(|a| closure(group, &[a])).collect();
    cyclic.sort();
    cyclic.dedup();

    let mut known: HashSet<Vec<Element>> = cyclic.iter().cloned().collect();
    let mut frontier: Vec<Vec<Element>> = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for sub in &frontier {
            let gens = minimal_generators(group, sub);
            for cyc in &cyclic {
                if cyc.iter().all(|a| sub.binary_search(a).is_ok()) {
                    continue;
                }
                let mut joined = gens.clone();
                joined.extend(minimal_generators(group, cyc));
                let span = closure(group, &joined);
                if known.insert(span.clone()) {
                    next.push(span);
                }
            }
        }
        frontier = next;
    }

    let mut subs: Vec<Vec<Element>> = known.into_iter().collect();
    subs.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(subs
        .into_iter()
        .map(|m| Subgroup::from_closed(group, m))
        .collect())
}
