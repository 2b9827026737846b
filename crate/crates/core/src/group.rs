//! Finite groups stored as dense Cayley tables.
//!
//! Elements are indices `0..order`. Every constructor validates the group
//! axioms up front, so the rest of the crate can index the table without
//! further checks.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// Index of a group element.
pub type Element = usize;

/// Largest group `from_permutations` will close to by default.
pub const DEFAULT_CLOSURE_BOUND: usize = 5040;

/// A permutation of `0..degree`, stored as its image list.
pub type Permutation = Vec<usize>;

#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<Element>,
    identity: Element,
    inverse: Vec<Element>,
    names: Vec<String>,
    lookup: HashMap<String, Element>,
    perms: Option<Vec<Permutation>>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .finish()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.table == other.table
    }
}

impl FiniteGroup {
    /// Builds a group from its multiplication table, `table[a][b] = a*b`.
    ///
    /// Element names default to the decimal index.
    pub fn from_table(table: Vec<Vec<Element>>, names: Option<Vec<String>>) -> Result<Self> {
        let order = table.len();
        if order == 0 {
            return Err(Error::NotLatinSquare("empty table".into()));
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in table.iter().enumerate() {
            if entries.len() != order {
                return Err(Error::NotLatinSquare(format!(
                    "row {row} has {} entries, expected {order}",
                    entries.len()
                )));
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                flat.push(value);
            }
        }
        let names = match names {
            Some(names) if names.len() != order => {
                return Err(Error::LengthMismatch {
                    expected: order,
                    got: names.len(),
                })
            }
            Some(names) => names,
            None => (0..order).map(|a| a.to_string()).collect(),
        };
        Self::validated("G".into(), order, flat, names, None)
    }

    /// Closes `generators` under composition and returns the generated group.
    ///
    /// Elements are sorted lexicographically by image list, so the identity is
    /// always index 0 and the indexing does not depend on the generator order.
    /// Names are cycle notation.
    pub fn from_permutations(degree: usize, generators: &[Permutation]) -> Result<Self> {
        Self::from_permutations_bounded(degree, generators, DEFAULT_CLOSURE_BOUND)
    }

    pub fn from_permutations_bounded(
        degree: usize,
        generators: &[Permutation],
        bound: usize,
    ) -> Result<Self> {
        for gen in generators {
            check_permutation(degree, gen)?;
        }
        let identity: Permutation = (0..degree).collect();
        let mut seen: BTreeSet<Permutation> = BTreeSet::new();
        seen.insert(identity.clone());
        let mut frontier = vec![identity];
        while let Some(p) = frontier.pop() {
            for gen in generators {
                let next = compose(&p, gen);
                if seen.insert(next.clone()) {
                    if seen.len() > bound {
                        return Err(Error::GroupTooLarge { bound });
                    }
                    frontier.push(next);
                }
            }
        }
        let elements: Vec<Permutation> = seen.into_iter().collect();
        let index: HashMap<&Permutation, Element> =
            elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let order = elements.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &elements {
            for b in &elements {
                table.push(index[&compose(a, b)]);
            }
        }
        let names = elements.iter().map(|p| cycle_notation(p)).collect();
        Self::validated("G".into(), order, table, names, Some(elements))
    }

    fn validated(
        name: String,
        order: usize,
        table: Vec<Element>,
        names: Vec<String>,
        perms: Option<Vec<Permutation>>,
    ) -> Result<Self> {
        let at = |a: usize, b: usize| table[a * order + b];

        let mut seen = vec![usize::MAX; order];
        for a in 0..order {
            for b in 0..order {
                let v = at(a, b);
                if seen[v] == a {
                    return Err(Error::NotLatinSquare(format!(
                        "row {a} repeats value {v}"
                    )));
                }
                seen[v] = a;
            }
        }
        seen.fill(usize::MAX);
        for b in 0..order {
            for a in 0..order {
                let v = at(a, b);
                if seen[v] == b {
                    return Err(Error::NotLatinSquare(format!(
                        "column {b} repeats value {v}"
                    )));
                }
                seen[v] = b;
            }
        }

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| at(e, a) == a && at(a, e) == a))
            .ok_or(Error::NoIdentity)?;

        for a in 0..order {
            for b in 0..order {
                let ab = at(a, b);
                for c in 0..order {
                    if at(ab, c) != at(a, at(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }

        // Latin rows give a unique right inverse; associativity makes it two-sided.
        let inverse = (0..order)
            .map(|a| (0..order).find(|&b| at(a, b) == identity).unwrap())
            .collect();

        let lookup = names
            .iter()
            .enumerate()
            .map(|(i, n)| (normalize_name(n), i))
            .collect();

        Ok(FiniteGroup {
            name,
            order,
            table,
            identity,
            inverse,
            names,
            lookup,
            perms,
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> Element {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: Element) -> Element {
        self.inverse[a]
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    pub fn element_name(&self, a: Element) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// The Cayley table as nested rows.
    pub fn table(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(|r| r.to_vec()).collect()
    }

    pub fn permutation(&self, a: Element) -> Option<&[usize]> {
        self.perms.as_ref().map(|p| p[a].as_slice())
    }

    pub fn degree(&self) -> Option<usize> {
        self.perms.as_ref().map(|p| p[0].len())
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Resolves an element by display name. For permutation groups any cycle
    /// notation for the element is accepted, e.g. `(1 0)` for `(0 1)`.
    pub fn find(&self, name: &str) -> Result<Element> {
        let key = normalize_name(name);
        if let Some(&a) = self.lookup.get(&key) {
            return Ok(a);
        }
        if let Some(perms) = &self.perms {
            let degree = perms[0].len();
            if let Ok(p) = parse_cycles(degree, name) {
                if let Some(a) = perms.iter().position(|q| *q == p) {
                    return Ok(a);
                }
            }
        }
        Err(Error::UnknownElement(name.trim().to_string()))
    }
}

fn normalize_name(name: &str) -> String {
    name.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn check_permutation(degree: usize, p: &[usize]) -> Result<()> {
    let mut hit = vec![false; degree];
    let ok = p.len() == degree
        && p.iter().all(|&i| i < degree && !std::mem::replace(&mut hit[i], true));
    if ok {
        Ok(())
    } else {
        Err(Error::NotAPermutation {
            degree,
            perm: p.to_vec(),
        })
    }
}

/// `(a*b)(i) = a(b(i))`: apply `b` first.
pub fn compose(a: &[usize], b: &[usize]) -> Permutation {
    b.iter().map(|&i| a[i]).collect()
}

/// Cycle notation with each cycle led by its smallest point, fixed points
/// omitted and `()` for the identity.
pub fn cycle_notation(p: &[usize]) -> String {
    let mut visited = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if visited[start] || p[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !visited[i] {
            visited[i] = true;
            cycle.push(i.to_string());
            i = p[i];
        }
        out.push('(');
        out.push_str(&cycle.join(" "));
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Parses a product of cycles such as `(0 1)(2 3)` into a permutation of
/// `0..degree`. Cycles compose right to left.
pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
    let bad = || Error::Format(format!("bad cycle notation `{}`", text.trim()));
    let mut result: Permutation = (0..degree).collect();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(bad());
    }
    let mut cycles = Vec::new();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(bad)?;
        let close = inner.find(')').ok_or_else(bad)?;
        let points = inner[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        if points.iter().any(|&i| i >= degree) {
            return Err(bad());
        }
        let distinct: BTreeSet<_> = points.iter().collect();
        if distinct.len() != points.len() {
            return Err(bad());
        }
        cycles.push(points);
        rest = inner[close + 1..].trim_start();
    }
    for points in cycles.iter().rev() {
        let mut cycle: Permutation = (0..degree).collect();
        for (k, &i) in points.iter().enumerate() {
            cycle[i] = points[(k + 1) % points.len()];
        }
        result = compose(&cycle, &result);
    }
    Ok(result)
}
