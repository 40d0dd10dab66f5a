//! Raster image carriers, PGM file I/O, dataset manifests, and the
//! synthetic fingerprint generator.

mod manifest;
mod pgm;
mod synth;

pub use manifest::{DatasetManifest, ManifestEntry};
pub use pgm::{load_gray_image, save_gray_image};
pub use synth::{synth_fingerprint, synth_fingerprint_with_truth, SynthTruth};

use thiserror::Error;

/// Errors from raster I/O and the synthetic generator.
#[derive(Debug, Error)]
pub enum RasterError {
    #[error("i/o failure: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed PGM header: {0}")]
    MalformedHeader(String),
    #[error("unsupported maxval {0} (must be 1..=255)")]
    UnsupportedMaxval(u32),
    #[error("pixel data truncated or out of range")]
    TruncatedData,
    #[error("image size {0} too small (minimum 128)")]
    SizeTooSmall(usize),
    #[error("malformed manifest row {line}: {reason}")]
    MalformedManifest { line: usize, reason: String },
    #[error("duplicate image id {0:?} in manifest")]
    DuplicateImageId(String),
    #[error("field {0:?} contains a comma; manifest fields are comma-free")]
    CommaInField(String),
}

/// 8-bit grayscale raster, row-major. `(x, y)` is column `x` of row `y`,
/// with row 0 at the top of the image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrayImage {
    width: usize,
    height: usize,
    pixels: Vec<u8>,
}

impl GrayImage {
    /// Build from row-major pixel data. Panics if `pixels.len() != width * height`
    /// or either dimension is zero.
    pub fn from_pixels(width: usize, height: usize, pixels: Vec<u8>) -> Self {
        assert!(width >= 1 && height >= 1, "image dimensions must be >= 1");
        assert_eq!(pixels.len(), width * height, "pixel buffer length mismatch");
        GrayImage { width, height, pixels }
    }

    /// All-zero image of the given dimensions.
    pub fn zeroed(width: usize, height: usize) -> Self {
        Self::from_pixels(width, height, vec![0; width * height])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn pixels(&self) -> &[u8] {
        &self.pixels
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> u8 {
        debug_assert!(x < self.width && y < self.height);
        self.pixels[y * self.width + x]
    }

    #[inline]
    pub fn set(&mut self, x: usize, y: usize, v: u8) {
        debug_assert!(x < self.width && y < self.height);
        self.pixels[y * self.width + x] = v;
    }
}

/// The five Galton-Henry fingerprint classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassLabel {
    Arch,
    TentedArch,
    LeftLoop,
    RightLoop,
    Whorl,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 5] = [
        ClassLabel::Arch,
        ClassLabel::TentedArch,
        ClassLabel::LeftLoop,
        ClassLabel::RightLoop,
        ClassLabel::Whorl,
    ];

    /// Stable index in enum order, used wherever classes index an array.
    pub fn index(self) -> usize {
        match self {
            ClassLabel::Arch => 0,
            ClassLabel::TentedArch => 1,
            ClassLabel::LeftLoop => 2,
            ClassLabel::RightLoop => 3,
            ClassLabel::Whorl => 4,
        }
    }

    /// Name used in manifest and metabase CSV label columns.
    pub fn as_str(self) -> &'static str {
        match self {
            ClassLabel::Arch => "arch",
            ClassLabel::TentedArch => "tented_arch",
            ClassLabel::LeftLoop => "left_loop",
            ClassLabel::RightLoop => "right_loop",
            ClassLabel::Whorl => "whorl",
        }
    }

    pub fn parse(s: &str) -> Option<ClassLabel> {
        match s {
            "arch" => Some(ClassLabel::Arch),
            "tented_arch" => Some(ClassLabel::TentedArch),
            "left_loop" => Some(ClassLabel::LeftLoop),
            "right_loop" => Some(ClassLabel::RightLoop),
            "whorl" => Some(ClassLabel::Whorl),
            _ => None,
        }
    }
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn label_names_round_trip() {
        for label in ClassLabel::ALL {
            assert_eq!(ClassLabel::parse(label.as_str()), Some(label));
        }
        assert_eq!(ClassLabel::parse("spiral"), None);
    }

    #[test]
    fn gray_image_indexing_is_row_major() {
        let img = GrayImage::from_pixels(3, 2, vec![1, 2, 3, 4, 5, 6]);
        assert_eq!(img.get(0, 0), 1);
        assert_eq!(img.get(2, 0), 3);
        assert_eq!(img.get(0, 1), 4);
        assert_eq!(img.get(2, 1), 6);
    }

    #[test]
    #[should_panic]
    fn gray_image_rejects_length_mismatch() {
        let _ = GrayImage::from_pixels(2, 2, vec![0; 3]);
    }
}
