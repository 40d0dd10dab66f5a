//! Netpbm PGM reader (binary P5 and ASCII P2) and binary P5 writer.
//! Maxval is capped at 255; comments (`# ...`) are allowed in headers.

use std::fs;
use std::io::Write;
use std::path::Path;

use super::{GrayImage, RasterError};

/// Load a PGM file (P5 or P2, maxval <= 255). Pixel values are preserved
/// exactly; no maxval rescaling is applied.
pub fn load_gray_image(path: &Path) -> Result<GrayImage, RasterError> {
    let bytes = fs::read(path)?;
    parse_pgm(&bytes)
}

/// Write `img` as binary P5 with maxval 255.
pub fn save_gray_image(img: &GrayImage, path: &Path) -> Result<(), RasterError> {
    let mut out = Vec::with_capacity(img.pixels().len() + 32);
    write!(out, "P5\n{} {}\n255\n", img.width(), img.height())?;
    out.extend_from_slice(img.pixels());
    fs::write(path, out)?;
    Ok(())
}

fn parse_pgm(bytes: &[u8]) -> Result<GrayImage, RasterError> {
    let magic = bytes.get(0..2).ok_or_else(|| bad_header("file shorter than magic"))?;
    let binary = match magic {
        b"P5" => true,
        b"P2" => false,
        other => {
            return Err(bad_header(&format!(
                "unrecognized magic {:?}",
                String::from_utf8_lossy(other)
            )))
        }
    };

    let mut pos = 2;
    let width = read_header_int(bytes, &mut pos)?;
    let height = read_header_int(bytes, &mut pos)?;
    let maxval = read_header_int(bytes, &mut pos)?;
    if width == 0 || height == 0 {
        return Err(bad_header("zero image dimension"));
    }
    if maxval == 0 || maxval > 255 {
        return Err(RasterError::UnsupportedMaxval(maxval as u32));
    }
    let n = width
        .checked_mul(height)
        .ok_or_else(|| bad_header("dimension overflow"))?;

    let pixels = if binary {
        // Exactly one whitespace byte separates the maxval from the raster.
        if pos >= bytes.len() || !bytes[pos].is_ascii_whitespace() {
            return Err(bad_header("missing whitespace before raster data"));
        }
        pos += 1;
        let data = &bytes[pos..];
        if data.len() < n {
            return Err(RasterError::TruncatedData);
        }
        let mut pixels = data[..n].to_vec();
        if maxval < 255 {
            for p in &mut pixels {
                if usize::from(*p) > maxval {
                    return Err(RasterError::TruncatedData);
                }
            }
        }
        pixels
    } else {
        let mut pixels = Vec::with_capacity(n);
        while pixels.len() < n {
            let v = match read_header_int(bytes, &mut pos) {
                Ok(v) => v,
                Err(_) => return Err(RasterError::TruncatedData),
            };
            if v > maxval {
                return Err(RasterError::TruncatedData);
            }
            pixels.push(v as u8);
        }
        pixels
    };

    Ok(GrayImage::from_pixels(width, height, pixels))
}

/// Read the next unsigned decimal in the header, skipping whitespace and
/// `#` comments that run to end of line.
fn read_header_int(bytes: &[u8], pos: &mut usize) -> Result<usize, RasterError> {
    loop {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
        if *pos < bytes.len() && bytes[*pos] == b'#' {
            while *pos < bytes.len() && bytes[*pos] != b'\n' {
                *pos += 1;
            }
            continue;
        }
        break;
    }
    let start = *pos;
    while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return Err(bad_header("expected unsigned integer"));
    }
    std::str::from_utf8(&bytes[start..*pos])
        .ok()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| bad_header("integer out of range"))
}

fn bad_header(reason: &str) -> RasterError {
    RasterError::MalformedHeader(reason.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;
    use tempfile::tempdir;

    fn parse(bytes: &[u8]) -> Result<GrayImage, RasterError> {
        parse_pgm(bytes)
    }

    #[test]
    fn ascii_minimal_file() {
        let img = parse(b"P2\n1 1\n255\n7").unwrap();
        assert_eq!((img.width(), img.height()), (1, 1));
        assert_eq!(img.pixels(), &[7]);
    }

    #[test]
    fn bad_magic_is_malformed_header() {
        assert!(matches!(parse(b"P9\n1 1\n255\n7"), Err(RasterError::MalformedHeader(_))));
    }

    #[test]
    fn maxval_above_255_rejected() {
        assert!(matches!(
            parse(b"P2\n1 1\n65535\n7"),
            Err(RasterError::UnsupportedMaxval(65535))
        ));
    }

    #[test]
    fn truncated_binary_data() {
        assert!(matches!(parse(b"P5\n2 2\n255\nab"), Err(RasterError::TruncatedData)));
    }

    #[test]
    fn header_comments_are_skipped() {
        let img = parse(b"P2\n# made by hand\n2 1\n# another\n255\n3 4").unwrap();
        assert_eq!(img.pixels(), &[3, 4]);
    }

    #[test]
    fn save_writes_header_plus_one_byte() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("one.pgm");
        let img = GrayImage::from_pixels(1, 1, vec![7]);
        save_gray_image(&img, &path).unwrap();
        let bytes = std::fs::read(&path).unwrap();
        assert_eq!(bytes, b"P5\n1 1\n255\n\x07");
    }

    #[test]
    fn round_trip_identity() {
        let dir = tempdir().unwrap();
        let path = dir.path().join("rt.pgm");
        let img = GrayImage::from_pixels(2, 2, vec![0, 255, 128, 1]);
        save_gray_image(&img, &path).unwrap();
        assert_eq!(load_gray_image(&path).unwrap(), img);
    }

    #[test]
    fn unwritable_path_is_io_failure() {
        let img = GrayImage::from_pixels(1, 1, vec![0]);
        let err = save_gray_image(&img, Path::new("/nonexistent-dir/x.pgm")).unwrap_err();
        assert!(matches!(err, RasterError::Io(_)));
    }
}
