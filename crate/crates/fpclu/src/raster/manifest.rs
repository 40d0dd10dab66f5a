//! Dataset manifest: CSV with header `image_id,path,label`, one row per
//! image. Label is one of the five class names or empty for unlabeled data.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use super::{ClassLabel, RasterError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub image_id: String,
    pub path: PathBuf,
    pub label: Option<ClassLabel>,
}

/// Ordered list of dataset images. Image ids are unique; relative paths
/// are resolved against the manifest file's directory on load.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DatasetManifest {
    pub entries: Vec<ManifestEntry>,
}

impl DatasetManifest {
    pub fn new(entries: Vec<ManifestEntry>) -> Result<Self, RasterError> {
        let mut seen = HashSet::new();
        for e in &entries {
            if !seen.insert(e.image_id.as_str()) {
                return Err(RasterError::DuplicateImageId(e.image_id.clone()));
            }
        }
        Ok(DatasetManifest { entries })
    }

    pub fn load(path: &Path) -> Result<Self, RasterError> {
        let text = fs::read_to_string(path)?;
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        let mut entries = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if idx == 0 {
                if line.trim() != "image_id,path,label" {
                    return Err(RasterError::MalformedManifest {
                        line: 1,
                        reason: format!("expected header `image_id,path,label`, got {line:?}"),
                    });
                }
                continue;
            }
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split(',').collect();
            if fields.len() != 3 {
                return Err(RasterError::MalformedManifest {
                    line: idx + 1,
                    reason: format!("expected 3 fields, got {}", fields.len()),
                });
            }
            let label = if fields[2].is_empty() {
                None
            } else {
                Some(ClassLabel::parse(fields[2]).ok_or_else(|| RasterError::MalformedManifest {
                    line: idx + 1,
                    reason: format!("unknown label {:?}", fields[2]),
                })?)
            };
            let raw = Path::new(fields[1]);
            let path = if raw.is_absolute() { raw.to_path_buf() } else { base.join(raw) };
            entries.push(ManifestEntry { image_id: fields[0].to_string(), path, label });
        }
        Self::new(entries)
    }

    /// Write the manifest. `paths` are emitted relative to the manifest's
    /// directory when possible so the file is position independent.
    pub fn save(&self, path: &Path) -> Result<(), RasterError> {
        let base = path.parent().unwrap_or_else(|| Path::new("."));
        let mut out = String::from("image_id,path,label\n");
        for e in &self.entries {
            let rel = e.path.strip_prefix(base).unwrap_or(&e.path);
            let rel = rel.to_string_lossy();
            for field in [e.image_id.as_str(), rel.as_ref()] {
                if field.contains(',') {
                    return Err(RasterError::CommaInField(field.to_string()));
                }
            }
            let label = e.label.map(|l| l.as_str()).unwrap_or("");
            out.push_str(&format!("{},{},{}\n", e.image_id, rel, label));
        }
        fs::write(path, out)?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    #[test]
    fn round_trip_with_relative_paths() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("manifest.csv");
        let manifest = DatasetManifest::new(vec![
            ManifestEntry {
                image_id: "a0".into(),
                path: dir.path().join("imgs/a0.pgm"),
                label: Some(ClassLabel::Arch),
            },
            ManifestEntry {
                image_id: "u1".into(),
                path: dir.path().join("imgs/u1.pgm"),
                label: None,
            },
        ])
        .unwrap();
        manifest.save(&path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.contains("a0,imgs/a0.pgm,arch"));
        assert!(text.contains("u1,imgs/u1.pgm,\n"));
        let loaded = DatasetManifest::load(&path).unwrap();
        assert_eq!(loaded, manifest);
    }

    #[test]
    fn duplicate_ids_rejected() {
        let entry = ManifestEntry {
            image_id: "dup".into(),
            path: PathBuf::from("x.pgm"),
            label: None,
        };
        let err = DatasetManifest::new(vec![entry.clone(), entry]).unwrap_err();
        assert!(matches!(err, RasterError::DuplicateImageId(_)));
    }

    #[test]
    fn bad_label_rejected() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("m.csv");
        fs::write(&path, "image_id,path,label\nx,y.pgm,spiral\n").unwrap();
        assert!(matches!(
            DatasetManifest::load(&path),
            Err(RasterError::MalformedManifest { line: 2, .. })
        ));
    }
}
