//! The JSON audit document (format 1) and its conversion to core types.
//!
//! The grammar is documented in `docs/format.md`. Unknown fields are
//! rejected everywhere.

use mbaudit_core::{
    BundleDescriptor, ChainComplex, CriticalSubmanifold, Generator, IntegerMatrix, MorseBottData,
    MorseData, OrientationCharacter, Sign, SignTwist, SpaceDescriptor, Trajectory,
};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuditDocument {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    pub ambient: SpaceDoc,
    pub criticals: Vec<CriticalDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub morse: Option<MorseDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bundle: Option<BundleDoc>,
}

/// A catalog tag such as `"rp:5"`, or `{"explicit": {...}}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SpaceDoc {
    Tag(String),
    Explicit(ExplicitDoc),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitDoc {
    pub explicit: ComplexDoc,
}

/// `boundaries[k-1]` is `d_k` given as a list of rows.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDoc {
    pub ranks: Vec<usize>,
    pub boundaries: Vec<Vec<Vec<i64>>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CharacterDoc {
    Orientable,
    Twisted,
}

impl From<CharacterDoc> for OrientationCharacter {
    fn from(c: CharacterDoc) -> Self {
        match c {
            CharacterDoc::Orientable => OrientationCharacter::Trivial,
            CharacterDoc::Twisted => OrientationCharacter::CanonicalNontrivial,
        }
    }
}

impl From<OrientationCharacter> for CharacterDoc {
    fn from(c: OrientationCharacter) -> Self {
        match c {
            OrientationCharacter::Trivial => CharacterDoc::Orientable,
            OrientationCharacter::CanonicalNontrivial => CharacterDoc::Twisted,
        }
    }
}

impl CharacterDoc {
    pub fn parse(s: &str) -> Result<Self, CliError> {
        match s {
            "orientable" => Ok(Self::Orientable),
            "twisted" => Ok(Self::Twisted),
            _ => Err(CliError::parse(format!("character must be `orientable` or `twisted`, got `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CriticalDoc {
    pub space: SpaceDoc,
    pub index: usize,
    pub negative_character: CharacterDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorseDoc {
    pub generators: Vec<GeneratorDoc>,
    #[serde(default)]
    pub trajectories: Vec<TrajectoryDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub twists: Vec<TwistDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorDoc {
    pub label: String,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrajectoryDoc {
    pub label: String,
    pub from: String,
    pub to: String,
    pub sign: i64,
}

/// Named sign twist: the listed trajectories change sign, all others keep it.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistDoc {
    pub name: String,
    #[serde(default)]
    pub flip: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BundleDoc {
    pub base: SpaceDoc,
    pub rank: usize,
    pub character: CharacterDoc,
}

/// Core-level view of a parsed document.
#[derive(Clone, Debug, PartialEq)]
pub struct Audit {
    pub name: Option<String>,
    pub description: Option<String>,
    pub morse_bott: MorseBottData,
    pub morse: Option<MorseBlock>,
    pub bundle: Option<BundleDescriptor>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MorseBlock {
    pub data: MorseData,
    pub twists: Vec<(String, SignTwist)>,
}

impl MorseBlock {
    pub fn twist(&self, name: &str) -> Option<&SignTwist> {
        self.twists.iter().find(|(n, _)| n == name).map(|(_, t)| t)
    }
}

pub fn parse_document(text: &str) -> Result<AuditDocument, CliError> {
    let doc: AuditDocument =
        serde_json::from_str(text).map_err(|e| CliError::parse(format!("malformed document: {e}")))?;
    if doc.format != FORMAT_VERSION {
        return Err(CliError::parse(format!(
            "unsupported format {} (this build reads format {FORMAT_VERSION})",
            doc.format
        )));
    }
    Ok(doc)
}

pub fn parse_audit(text: &str) -> Result<Audit, CliError> {
    parse_document(text)?.to_audit()
}

impl SpaceDoc {
    pub fn to_space(&self) -> Result<SpaceDescriptor, CliError> {
        match self {
            SpaceDoc::Tag(tag) => Ok(tag.parse()?),
            SpaceDoc::Explicit(ExplicitDoc { explicit }) => {
                let ComplexDoc { ranks, boundaries } = explicit;
                if boundaries.len() + 1 != ranks.len() {
                    return Err(CliError::parse(format!(
                        "explicit complex with {} degrees needs {} boundaries",
                        ranks.len(),
                        ranks.len().saturating_sub(1)
                    )));
                }
                let mats = boundaries
                    .iter()
                    .enumerate()
                    .map(|(i, rows)| {
                        let k = i + 1;
                        if rows.len() != ranks[k - 1] {
                            return Err(CliError::parse(format!(
                                "d_{k} needs {} rows, got {}",
                                ranks[k - 1],
                                rows.len()
                            )));
                        }
                        IntegerMatrix::from_rows(ranks[k], rows.iter().map(|r| r.iter().copied()))
                            .ok_or_else(|| CliError::parse(format!("d_{k} rows must have {} entries", ranks[k])))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(SpaceDescriptor::Explicit(ChainComplex::new(ranks.clone(), mats)?))
            }
        }
    }

    pub fn from_space(s: &SpaceDescriptor) -> Result<Self, CliError> {
        let SpaceDescriptor::Explicit(c) = s else {
            return Ok(SpaceDoc::Tag(s.to_string()));
        };
        let boundaries = c
            .boundaries()
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|r| {
                        m.row(r)
                            .iter()
                            .map(|x| i64::try_from(x).map_err(|_| CliError::parse("entry exceeds 64 bits")))
                            .collect()
                    })
                    .collect()
            })
            .collect::<Result<_, _>>()?;
        Ok(SpaceDoc::Explicit(ExplicitDoc {
            explicit: ComplexDoc { ranks: c.ranks().to_vec(), boundaries },
        }))
    }
}

impl BundleDoc {
    pub fn to_bundle(&self) -> Result<BundleDescriptor, CliError> {
        Ok(BundleDescriptor::new(self.base.to_space()?, self.rank, self.character.into())?)
    }

    pub fn from_bundle(b: &BundleDescriptor) -> Result<Self, CliError> {
        Ok(Self { base: SpaceDoc::from_space(&b.base)?, rank: b.rank, character: b.character.into() })
    }
}

impl MorseDoc {
    pub fn to_block(&self) -> Result<MorseBlock, CliError> {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator { label: g.label.clone(), index: g.index })
            .collect();
        let trajectories = self
            .trajectories
            .iter()
            .map(|t| {
                let sign = Sign::from_i64(t.sign)
                    .ok_or_else(|| CliError::parse(format!("trajectory `{}` sign must be 1 or -1", t.label)))?;
                Ok(Trajectory { label: t.label.clone(), from: t.from.clone(), to: t.to.clone(), sign })
            })
            .collect::<Result<_, CliError>>()?;
        let data = MorseData::new(generators, trajectories)?;
        let mut twists: Vec<(String, SignTwist)> = Vec::new();
        for t in &self.twists {
            if twists.iter().any(|(n, _)| *n == t.name) {
                return Err(CliError::parse(format!("duplicate twist `{}`", t.name)));
            }
            twists.push((t.name.clone(), SignTwist::flipping(&data, &t.flip)?));
        }
        Ok(MorseBlock { data, twists })
    }

    pub fn from_block(b: &MorseBlock) -> Self {
        let trajectories = b.data.trajectories();
        Self {
            generators: b
                .data
                .generators()
                .iter()
                .map(|g| GeneratorDoc { label: g.label.clone(), index: g.index })
                .collect(),
            trajectories: trajectories
                .iter()
                .map(|t| TrajectoryDoc {
                    label: t.label.clone(),
                    from: t.from.clone(),
                    to: t.to.clone(),
                    sign: t.sign.as_i64(),
                })
                .collect(),
            twists: b
                .twists
                .iter()
                .map(|(name, tw)| TwistDoc {
                    name: name.clone(),
                    flip: trajectories
                        .iter()
                        .zip(tw.signs())
                        .filter(|(_, s)| **s == Sign::Minus)
                        .map(|(t, _)| t.label.clone())
                        .collect(),
                })
                .collect(),
        }
    }
}

impl AuditDocument {
    pub fn to_audit(&self) -> Result<Audit, CliError> {
        let criticals = self
            .criticals
            .iter()
            .map(|c| {
                Ok(CriticalSubmanifold {
                    space: c.space.to_space()?,
                    index: c.index,
                    negative_character: c.negative_character.into(),
                    value: c.value,
                })
            })
            .collect::<Result<_, CliError>>()?;
        let morse_bott = MorseBottData::new(self.ambient.to_space()?, criticals)?;
        Ok(Audit {
            name: self.name.clone(),
            description: self.description.clone(),
            morse_bott,
            morse: self.morse.as_ref().map(MorseDoc::to_block).transpose()?,
            bundle: self.bundle.as_ref().map(BundleDoc::to_bundle).transpose()?,
        })
    }

    pub fn from_audit(a: &Audit) -> Result<Self, CliError> {
        let d = &a.morse_bott;
        Ok(Self {
            format: FORMAT_VERSION,
            name: a.name.clone(),
            description: a.description.clone(),
            ambient: SpaceDoc::from_space(d.ambient())?,
            criticals: d
                .criticals()
                .iter()
                .map(|c| {
                    Ok(CriticalDoc {
                        space: SpaceDoc::from_space(&c.space)?,
                        index: c.index,
                        negative_character: c.negative_character.into(),
                        value: c.value,
                    })
                })
                .collect::<Result<_, CliError>>()?,
            morse: a.morse.as_ref().map(MorseDoc::from_block),
            bundle: a.bundle.as_ref().map(BundleDoc::from_bundle).transpose()?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document types always serialize")
    }
}

/// `base,rank,character`, e.g. `sphere:1,1,twisted`.
pub fn parse_bundle_spec(spec: &str) -> Result<BundleDescriptor, CliError> {
    let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
    let [base, rank, character] = parts[..] else {
        return Err(CliError::parse(format!("bundle spec must be `base,rank,character`, got `{spec}`")));
    };
    let rank = rank.parse().map_err(|_| CliError::parse(format!("bad rank `{rank}`")))?;
    let character = CharacterDoc::parse(character)?;
    Ok(BundleDescriptor::new(base.parse()?, rank, character.into())?)
}
