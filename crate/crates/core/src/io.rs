//! JSON file formats.
//!
//! Groups: `{"name", "order", "table"}` or `{"name", "degree", "generators"}`.
//! Measures and functions: `{"kind": "G"|"Q"|"fn", "entries": [{"at", "re", "im"}]}`,
//! unlisted points zero. Rho: `{"rho": [{"coset", "value"}]}`, unlisted cosets 1.

use std::path::Path;
use std::sync::Arc;

use num_complex::Complex64;
use serde::{Deserialize, Serialize, Serializer};

use crate::catalog;
use crate::coset::CosetSpace;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Permutation};
use crate::lebesgue::{QuotientFunction, RhoSystem};
use crate::measure::{MeasureG, MeasureQ, PointMasses, ZERO};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupFile {
    Table {
        name: String,
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Permutations {
        name: String,
        degree: usize,
        generators: Vec<Permutation>,
    },
}

impl GroupFile {
    pub fn build(self) -> Result<FiniteGroup> {
        match self {
            GroupFile::Table { name, order, table, names } => {
                if table.len() != order {
                    return Err(Error::LengthMismatch {
                        expected: order,
                        got: table.len(),
                    });
                }
                Ok(FiniteGroup::from_table(table, names)?.with_name(name))
            }
            GroupFile::Permutations { name, degree, generators } => {
                Ok(FiniteGroup::from_permutations(degree, &generators)?.with_name(name))
            }
        }
    }

    pub fn from_group(group: &FiniteGroup) -> Self {
        GroupFile::Table {
            name: group.name().to_string(),
            order: group.order(),
            table: group.table(),
            names: Some(group.names().to_vec()),
        }
    }
}

/// A catalog name, or else a path to a group file.
pub fn resolve_group(spec: &str) -> Result<Arc<FiniteGroup>> {
    match catalog::group(spec) {
        Ok(g) => Ok(g),
        Err(Error::UnknownGroup(_)) if Path::new(spec).is_file() => read_group(spec),
        Err(e) => Err(e),
    }
}

pub fn read_group(path: impl AsRef<Path>) -> Result<Arc<FiniteGroup>> {
    let text = std::fs::read_to_string(path)?;
    let file: GroupFile = serde_json::from_str(&text)?;
    Ok(Arc::new(file.build()?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    G,
    Q,
    #[serde(rename = "fn")]
    Fn,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Entry {
    pub at: String,
    pub re: f64,
    pub im: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MeasureFile {
    pub kind: Kind,
    pub entries: Vec<Entry>,
}

fn entries<'a>(names: impl Iterator<Item = &'a str>, values: &[Complex64]) -> Vec<Entry> {
    names
        .zip(values)
        .map(|(at, v)| Entry {
            at: at.to_string(),
            re: v.re,
            im: v.im,
        })
        .collect()
}

impl MeasureFile {
    pub fn of_g(m: &MeasureG) -> Self {
        let g = m.group();
        MeasureFile {
            kind: Kind::G,
            entries: entries(g.elements().map(|x| g.element_name(x)), m.weights()),
        }
    }

    pub fn of_q(m: &MeasureQ) -> Self {
        let s = m.space();
        MeasureFile {
            kind: Kind::Q,
            entries: entries(s.cosets().map(|c| s.coset_name(c)), m.weights()),
        }
    }

    pub fn of_fn(phi: &QuotientFunction) -> Self {
        let s = phi.space();
        MeasureFile {
            kind: Kind::Fn,
            entries: entries(s.cosets().map(|c| s.coset_name(c)), phi.values()),
        }
    }

    /// Dense values; `locate` maps a name to its index.
    fn dense(&self, len: usize, locate: impl Fn(&str) -> Result<usize>) -> Result<Vec<Complex64>> {
        let mut out = vec![ZERO; len];
        let mut seen = vec![false; len];
        for e in &self.entries {
            let i = locate(&e.at)?;
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::Format(format!("point {:?} listed twice", e.at)));
            }
            out[i] = Complex64::new(e.re, e.im);
        }
        Ok(out)
    }

    fn expect(&self, kind: Kind) -> Result<()> {
        if self.kind == kind {
            Ok(())
        } else {
            Err(Error::KindMismatch)
        }
    }

    pub fn into_g(self, group: &Arc<FiniteGroup>) -> Result<MeasureG> {
        self.expect(Kind::G)?;
        let w = self.dense(group.order(), |n| group.find(n))?;
        MeasureG::new(group, w)
    }

    pub fn into_q(self, space: &Arc<CosetSpace>) -> Result<MeasureQ> {
        self.expect(Kind::Q)?;
        let w = self.dense(space.count(), |n| space.find(n))?;
        MeasureQ::new(space, w)
    }

    pub fn into_fn(self, space: &Arc<CosetSpace>) -> Result<QuotientFunction> {
        self.expect(Kind::Fn)?;
        let w = self.dense(space.count(), |n| space.find(n))?;
        QuotientFunction::new(space, w)
    }
}

/// A measure or function read from a file, typed by its `kind`.
#[derive(Debug, Clone)]
pub enum Loaded {
    G(MeasureG),
    Q(MeasureQ),
    Fn(QuotientFunction),
}

impl Loaded {
    pub fn to_file(&self) -> MeasureFile {
        match self {
            Loaded::G(m) => MeasureFile::of_g(m),
            Loaded::Q(m) => MeasureFile::of_q(m),
            Loaded::Fn(f) => MeasureFile::of_fn(f),
        }
    }
}

pub fn parse_measure(text: &str, space: &Arc<CosetSpace>) -> Result<Loaded> {
    let file: MeasureFile = serde_json::from_str(text)?;
    Ok(match file.kind {
        Kind::G => Loaded::G(file.into_g(space.group())?),
        Kind::Q => Loaded::Q(file.into_q(space)?),
        Kind::Fn => Loaded::Fn(file.into_fn(space)?),
    })
}

pub fn read_measure(path: impl AsRef<Path>, space: &Arc<CosetSpace>) -> Result<Loaded> {
    parse_measure(&std::fs::read_to_string(path)?, space)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RhoEntry {
    pub coset: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RhoFile {
    pub rho: Vec<RhoEntry>,
}

impl RhoFile {
    pub fn of(sys: &RhoSystem) -> Self {
        let s = sys.space();
        RhoFile {
            rho: s
                .cosets()
                .map(|c| RhoEntry {
                    coset: s.coset_name(c).to_string(),
                    value: sys.rho_on_cosets()[c],
                })
                .collect(),
        }
    }

    pub fn into_system(self, space: &Arc<CosetSpace>) -> Result<RhoSystem> {
        let mut values = vec![1.0; space.count()];
        let mut seen = vec![false; space.count()];
        for e in self.rho {
            let c = space.find(&e.coset)?;
            if std::mem::replace(&mut seen[c], true) {
                return Err(Error::Format(format!("coset {:?} listed twice", e.coset)));
            }
            values[c] = e.value;
        }
        RhoSystem::new(space, values)
    }
}

pub fn parse_rho(text: &str, space: &Arc<CosetSpace>) -> Result<RhoSystem> {
    serde_json::from_str::<RhoFile>(text)?.into_system(space)
}

pub fn read_rho(path: impl AsRef<Path>, space: &Arc<CosetSpace>) -> Result<RhoSystem> {
    parse_rho(&std::fs::read_to_string(path)?, space)
}

impl Serialize for MeasureG {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MeasureFile::of_g(self).serialize(s)
    }
}

impl Serialize for MeasureQ {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MeasureFile::of_q(self).serialize(s)
    }
}

impl Serialize for QuotientFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MeasureFile::of_fn(self).serialize(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random;
    use crate::subgroup::Subgroup;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn s3_space() -> Arc<CosetSpace> {
        let g = catalog::group("S3").unwrap();
        Arc::new(CosetSpace::new(Subgroup::from_names(&g, &["(0 1)"]).unwrap()))
    }

    #[test]
    fn measure_round_trip() {
        let s = s3_space();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let nu = random::measure_q(&mut rng, &s);
        let text = serde_json::to_string(&nu).unwrap();
        let Loaded::Q(back) = parse_measure(&text, &s).unwrap() else { panic!("kind") };
        assert_eq!(back.weights(), nu.weights());

        let m = random::measure_g(&mut rng, s.group());
        let Loaded::G(back) = parse_measure(&serde_json::to_string(&m).unwrap(), &s).unwrap() else { panic!("kind") };
        assert_eq!(back.weights(), m.weights());

        let phi = random::function_q(&mut rng, &s);
        let Loaded::Fn(back) = parse_measure(&serde_json::to_string(&phi).unwrap(), &s).unwrap() else { panic!("kind") };
        assert_eq!(back.values(), phi.values());
    }

    #[test]
    fn sparse_entries_and_alternate_names() {
        let s = s3_space();
        // (0 1) lies in the identity coset.
        let text = r#"{"kind":"Q","entries":[{"at":"(1 0)","re":2.0,"im":-1.0}]}"#;
        let Loaded::Q(nu) = parse_measure(text, &s).unwrap() else { panic!("kind") };
        assert_eq!(nu.weights()[0], Complex64::new(2.0, -1.0));
        assert!(nu.weights()[1..].iter().all(|w| *w == ZERO));

        let dup = r#"{"kind":"Q","entries":[{"at":"()","re":1,"im":0},{"at":"(0 1)","re":1,"im":0}]}"#;
        assert!(matches!(parse_measure(dup, &s), Err(Error::Format(_))));
        let bad = r#"{"kind":"Q","entries":[{"at":"(0 7)","re":1,"im":0}]}"#;
        assert!(parse_measure(bad, &s).is_err());
        assert!(matches!(
            MeasureFile { kind: Kind::G, entries: vec![] }.into_q(&s),
            Err(Error::KindMismatch)
        ));
    }

    #[test]
    fn rho_files() {
        let s = s3_space();
        let sys = parse_rho(r#"{"rho":[{"coset":"(0 2)","value":3.0}]}"#, &s).unwrap();
        let c = s.find("(0 2)").unwrap();
        for d in s.cosets() {
            assert_eq!(sys.rho_on_cosets()[d], if d == c { 3.0 } else { 1.0 });
        }
        let text = serde_json::to_string(&RhoFile::of(&sys)).unwrap();
        assert_eq!(parse_rho(&text, &s).unwrap().rho_on_cosets(), sys.rho_on_cosets());
        assert!(matches!(
            parse_rho(r#"{"rho":[{"coset":"()","value":-1}]}"#, &s),
            Err(Error::NonPositiveRho { .. })
        ));
    }

    #[test]
    fn group_files() {
        let table = r#"{"name":"V","order":4,"table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]}"#;
        let g = serde_json::from_str::<GroupFile>(table).unwrap().build().unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.name(), "V");
        let perms = r#"{"name":"C5","degree":5,"generators":[[1,2,3,4,0]]}"#;
        let g = serde_json::from_str::<GroupFile>(perms).unwrap().build().unwrap();
        assert_eq!(g.order(), 5);
        assert!(g.find("(0 1 2 3 4)").is_ok());

        let q8 = catalog::group("Q8").unwrap();
        let text = serde_json::to_string(&GroupFile::from_group(&q8)).unwrap();
        let back = serde_json::from_str::<GroupFile>(&text).unwrap().build().unwrap();
        assert_eq!(back, *q8);
        assert_eq!(back.names(), q8.names());

        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("v.json");
        std::fs::write(&path, table).unwrap();
        assert_eq!(resolve_group(path.to_str().unwrap()).unwrap().order(), 4);
        assert!(matches!(resolve_group("nope"), Err(Error::UnknownGroup(_))));
    }
}
