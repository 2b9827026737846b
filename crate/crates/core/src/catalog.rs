//! Built-in groups and the subgroup pairs the verifier sweeps.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{all_subgroups, Subgroup};

/// Names accepted by [`group`], in listing order.
pub fn names() -> Vec<String> {
    let mut out: Vec<String> = (1..=12).map(|n| format!("Z{n}")).collect();
    out.extend((3..=6).map(|n| format!("D{n}")));
    out.extend(["S3", "S4", "A4", "Q8"].map(String::from));
    out
}

pub fn group(name: &str) -> Result<Arc<FiniteGroup>> {
    let unknown = || Error::UnknownGroup(name.to_string());
    let g = match name {
        "S3" => symmetric(3),
        "S4" => symmetric(4),
        "A4" => FiniteGroup::from_permutations(4, &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]])?,
        "Q8" => quaternion(),
        _ => {
            let (kind, n) = name.split_at(1);
            let n: usize = n.parse().map_err(|_| unknown())?;
            match kind {
                "Z" if (1..=12).contains(&n) => cyclic(n),
                "D" if (3..=6).contains(&n) => dihedral(n),
                _ => return Err(unknown()),
            }
        }
    };
    Ok(Arc::new(g.with_name(name)))
}

/// Integers mod `n` under addition; element `a` is named `a`.
pub fn cyclic(n: usize) -> FiniteGroup {
    let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
    FiniteGroup::from_table(table, None)
        .expect("cyclic table is a group")
        .with_name(format!("Z{n}"))
}

/// Symmetries of the regular `n`-gon acting on its vertices `0..n`.
pub fn dihedral(n: usize) -> FiniteGroup {
    let rotation = (0..n).map(|i| (i + 1) % n).collect();
    let reflection = (0..n).map(|i| (n - i) % n).collect();
    FiniteGroup::from_permutations(n, &[rotation, reflection])
        .expect("dihedral generators are permutations")
        .with_name(format!("D{n}"))
}

pub fn symmetric(d: usize) -> FiniteGroup {
    let mut gens = Vec::new();
    if d >= 2 {
        let mut t: Vec<usize> = (0..d).collect();
        t.swap(0, 1);
        gens.push(t);
        gens.push((0..d).map(|i| (i + 1) % d).collect());
    }
    FiniteGroup::from_permutations(d, &gens)
        .expect("symmetric generators are permutations")
        .with_name(format!("S{d}"))
}

/// Quaternion group with elements `1, -1, i, -i, j, -j, k, -k`.
pub fn quaternion() -> FiniteGroup {
    // Element 2u + s is (-1)^s times unit u, units ordered 1, i, j, k.
    // unit_mul[u][v] = (sign, unit) of u*v.
    const UNIT_MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    let table = (0..8)
        .map(|a| {
            (0..8)
                .map(|b| {
                    let (ua, sa) = (a / 2, a % 2);
                    let (ub, sb) = (b / 2, b % 2);
                    let (s, u) = UNIT_MUL[ua][ub];
                    2 * u + (s + sa + sb) % 2
                })
                .collect()
        })
        .collect();
    let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .map(String::from)
        .to_vec();
    FiniteGroup::from_table(table, Some(names))
        .expect("quaternion table is a group")
        .with_name("Q8")
}

/// A named `(G, H)` pair from the verification catalog.
#[derive(Debug, Clone)]
pub struct CatalogCase {
    pub group: String,
    pub generators: Vec<String>,
}

impl CatalogCase {
    fn new(group: &str, generators: &[&str]) -> Self {
        CatalogCase {
            group: group.to_string(),
            generators: generators.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn resolve(&self) -> Result<Subgroup> {
        let g = group(&self.group)?;
        Subgroup::from_names(&g, &self.generators)
    }
}

/// The sweep used by `verify --all`: every subgroup of each `Z_n` for
/// `n <= 12`, every subgroup of `S3`, the order-2 subgroups of `D4`, and a
/// hand-picked mix of normal and non-normal subgroups of `S4`, `Q8`, `A4`.
pub fn verification_cases() -> Vec<CatalogCase> {
    let mut cases = Vec::new();
    for n in 1..=12 {
        let name = format!("Z{n}");
        let g = group(&name).expect("catalog group");
        for h in all_subgroups(&g).expect("small group") {
            cases.push(CatalogCase {
                group: name.clone(),
                generators: h.generator_names(),
            });
        }
    }
    // D4 on the square's vertices: the centre <(0 2)(1 3)> and four reflections.
    for gens in ["(0 2)(1 3)", "(1 3)", "(0 2)", "(0 1)(2 3)", "(0 3)(1 2)"] {
        cases.push(CatalogCase::new("D4", &[gens]));
    }
    let s3 = group("S3").expect("catalog group");
    for h in all_subgroups(&s3).expect("small group") {
        cases.push(CatalogCase {
            group: "S3".into(),
            generators: h.generator_names(),
        });
    }
    cases.push(CatalogCase::new("S4", &["(0 1)(2 3)", "(0 2)(1 3)"]));
    cases.push(CatalogCase::new("S4", &["(0 1 2)", "(1 2 3)"]));
    cases.push(CatalogCase::new("S4", &["(0 1)"]));
    cases.push(CatalogCase::new("S4", &["(0 1)", "(0 1 2)"]));
    cases.push(CatalogCase::new("Q8", &["i"]));
    cases.push(CatalogCase::new("Q8", &["-1"]));
    cases.push(CatalogCase::new("A4", &["(0 1)(2 3)", "(0 2)(1 3)"]));
    cases.push(CatalogCase::new("A4", &["(0 1 2)"]));
    cases
}
