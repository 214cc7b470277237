use serde::{Deserialize, Serialize};

use super::{PermError, PermGroup, Permutation};

/// On-disk form of a raw permutation group:
/// `{"degree": d, "generators": [[images…], …], "name": "…"}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawGroupFile {
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl RawGroupFile {
    pub fn to_group(&self) -> Result<PermGroup, PermError> {
        let gens = self
            .generators
            .iter()
            .map(|g| {
                if g.len() != self.degree {
                    return Err(PermError::DegreeMismatch {
                        expected: self.degree,
                        found: g.len(),
                    });
                }
                Permutation::from_images(g.iter().copied())
            })
            .collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(self.degree, gens)
    }

    pub fn from_group(group: &PermGroup, name: Option<String>) -> Self {
        Self {
            degree: group.degree(),
            generators: group
                .generators()
                .iter()
                .map(|g| g.images().collect())
                .collect(),
            name,
        }
    }
}

/// Parses and checks a raw group document.
pub fn parse_group_file(text: &str) -> Result<(RawGroupFile, PermGroup), PermError> {
    let file: RawGroupFile =
        serde_json::from_str(text).map_err(|e| PermError::Malformed(e.to_string()))?;
    let group = file.to_group()?;
    Ok((file, group))
}
