//! Deterministic synthetic fingerprint generator.
//!
//! Each class is rendered as sinusoidal ridges `cos(2*pi*phase)` over a
//! class-template phase field with ridge wavelength in the 8-12 px band:
//!
//! * arch        — smooth stacked ridges over a gentle hill, no singular point;
//! * tented arch — offsets of a downward ray: nested hairpins, one core at the
//!   ray tip;
//! * left/right loop — the same ray field tilted +/-35 degrees;
//! * whorl       — offsets of a horizontal segment: nested stadium curves with
//!   one core at each segment end.
//!
//! The print sits inside an elliptical region on a flat background so the
//! segmentation stage has something to cut away. `SynthTruth` exposes the
//! generating field (singular points, orientation, phase gradient, ridge
//! support) so tests can check pipeline stages against ground truth.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use super::{ClassLabel, GrayImage, RasterError};

const MIN_SIZE: usize = 128;
const BASE: f64 = 120.0;
const AMP: f64 = 55.0;
const BACKGROUND: f64 = 205.0;
const NOISE_SIGMA: f64 = 14.0;
const RIDGE_SUPPORT_Q: f64 = 0.92;
const BLEND_START_Q: f64 = 0.94;

const ARCH_AMPLITUDE: f64 = 10.0;
const ARCH_SIGMA_U: f64 = 55.0;
const ARCH_SIGMA_W: f64 = 60.0;
const WHORL_HALF_LEN: f64 = 24.0;
const LOOP_TILT_DEG: f64 = 35.0;

#[derive(Debug, Clone, Copy)]
enum TemplateKind {
    /// Smooth hill field, no singular point.
    Arch,
    /// Offsets of the ray {u = 0, w >= 0}; one core at the tip.
    Ray,
    /// Offsets of the segment {|u| <= half_len, w = 0}; a core at each end.
    Segment { half_len: f64 },
}

/// Ground truth for a generated image: the class template's geometry and
/// field, queryable per pixel.
#[derive(Debug, Clone)]
pub struct SynthTruth {
    pub label: ClassLabel,
    pub size: usize,
    /// Print region center (image coordinates).
    pub center: (f64, f64),
    /// Ridge wavelength in pixels.
    pub wavelength: f64,
    /// Singular points of the generating orientation field (image coords).
    pub cores: Vec<(f64, f64)>,
    origin: (f64, f64),
    /// Template-to-image rotation (global jitter plus class axis tilt).
    alpha: f64,
    kind: TemplateKind,
    ellipse_radii: (f64, f64),
}

impl SynthTruth {
    /// Normalized elliptical radius of the print region; 1.0 on its boundary.
    pub fn region_q(&self, x: f64, y: f64) -> f64 {
        let dx = (x - self.center.0) / self.ellipse_radii.0;
        let dy = (y - self.center.1) / self.ellipse_radii.1;
        (dx * dx + dy * dy).sqrt()
    }

    /// Pixels carrying fully rendered ridge structure.
    pub fn ridge_support(&self, x: f64, y: f64) -> bool {
        self.region_q(x, y) <= RIDGE_SUPPORT_Q
    }

    fn to_template(&self, x: f64, y: f64) -> (f64, f64) {
        let dx = x - self.origin.0;
        let dy = y - self.origin.1;
        let (s, c) = self.alpha.sin_cos();
        (c * dx + s * dy, -s * dx + c * dy)
    }

    /// Phase gradient in cycles per pixel, in image coordinates (x right,
    /// y down). `None` outside the print region or at a singular point.
    pub fn phase_grad_image(&self, x: f64, y: f64) -> Option<(f64, f64)> {
        if self.region_q(x, y) > 0.98 {
            return None;
        }
        let (u, w) = self.to_template(x, y);
        let (gu, gw) = template_phase_grad(self.kind, u, w, self.wavelength)?;
        let (s, c) = self.alpha.sin_cos();
        Some((c * gu - s * gw, s * gu + c * gw))
    }

    /// Ridge orientation of the generating field, as a Cartesian (y-up)
    /// angle in [0, pi). `None` outside the print or at a singular point.
    pub fn orientation_at(&self, x: f64, y: f64) -> Option<f64> {
        let (gx, gy) = self.phase_grad_image(x, y)?;
        // Ridge tangent is perpendicular to the phase gradient; flip the
        // y component to express the angle in Cartesian orientation.
        let (tx, ty) = (-gy, gx);
        let mut theta = (-ty).atan2(tx);
        while theta < 0.0 {
            theta += std::f64::consts::PI;
        }
        while theta >= std::f64::consts::PI {
            theta -= std::f64::consts::PI;
        }
        Some(theta)
    }
}

/// Phase (in cycles) of the template field at template point (u, w).
fn template_phase(kind: TemplateKind, u: f64, w: f64, lambda: f64) -> f64 {
    match kind {
        TemplateKind::Arch => {
            let g = (-u * u / (2.0 * ARCH_SIGMA_U * ARCH_SIGMA_U)).exp();
            let a = if w < 0.0 {
                ARCH_AMPLITUDE * (-w * w / (2.0 * ARCH_SIGMA_W * ARCH_SIGMA_W)).exp()
            } else {
                ARCH_AMPLITUDE
            };
            (w + a * g) / lambda
        }
        TemplateKind::Ray => {
            let d = if w >= 0.0 { u.abs() } else { (u * u + w * w).sqrt() };
            d / lambda
        }
        TemplateKind::Segment { half_len } => {
            let du = (u.abs() - half_len).max(0.0);
            (du * du + w * w).sqrt() / lambda
        }
    }
}

/// Gradient of `template_phase` in template coordinates. `None` where the
/// distance degenerates (singular tips).
fn template_phase_grad(kind: TemplateKind, u: f64, w: f64, lambda: f64) -> Option<(f64, f64)> {
    match kind {
        TemplateKind::Arch => {
            let su2 = ARCH_SIGMA_U * ARCH_SIGMA_U;
            let g = (-u * u / (2.0 * su2)).exp();
            let (a, da_dw) = if w < 0.0 {
                let sw2 = ARCH_SIGMA_W * ARCH_SIGMA_W;
                let e = (-w * w / (2.0 * sw2)).exp();
                (ARCH_AMPLITUDE * e, -ARCH_AMPLITUDE * w / sw2 * e)
            } else {
                (ARCH_AMPLITUDE, 0.0)
            };
            let dpsi_du = a * g * (-u / su2);
            let dpsi_dw = 1.0 + da_dw * g;
            Some((dpsi_du / lambda, dpsi_dw / lambda))
        }
        TemplateKind::Ray => {
            if w >= 0.0 {
                // Beside the ray: distance is |u|. On the crest itself take
                // the +u branch so the value stays defined.
                let s = if u >= 0.0 { 1.0 } else { -1.0 };
                Some((s / lambda, 0.0))
            } else {
                let r = (u * u + w * w).sqrt();
                if r < 1e-9 {
                    return None;
                }
                Some((u / r / lambda, w / r / lambda))
            }
        }
        TemplateKind::Segment { half_len } => {
            if u.abs() <= half_len {
                let s = if w >= 0.0 { 1.0 } else { -1.0 };
                Some((0.0, s / lambda))
            } else {
                let du = u.abs() - half_len;
                let r = (du * du + w * w).sqrt();
                if r < 1e-9 {
                    return None;
                }
                let su = if u >= 0.0 { 1.0 } else { -1.0 };
                Some((su * du / r / lambda, w / r / lambda))
            }
        }
    }
}

/// Generate a synthetic fingerprint together with its ground truth.
/// Deterministic in `(label, rng_seed, size)`.
pub fn synth_fingerprint_with_truth(
    label: ClassLabel,
    rng_seed: u64,
    size: usize,
) -> Result<(GrayImage, SynthTruth), RasterError> {
    if size < MIN_SIZE {
        return Err(RasterError::SizeTooSmall(size));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed ^ (label.index() as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let s = size as f64;

    // Draw order is fixed; changing it would silently change every image.
    let jx: f64 = rng.gen_range(-6.0..6.0);
    let jy: f64 = rng.gen_range(-6.0..6.0);
    let rot: f64 = rng.gen_range(-4.0f64..4.0).to_radians();
    let lambda: f64 = match label {
        ClassLabel::Arch => rng.gen_range(10.5..11.5),
        _ => rng.gen_range(9.5..10.5),
    };

    let center = (s / 2.0 + jx, s / 2.0 + jy);
    let tilt = LOOP_TILT_DEG.to_radians();
    let (kind, beta, offset): (TemplateKind, f64, (f64, f64)) = match label {
        ClassLabel::Arch => (TemplateKind::Arch, 0.0, (0.0, 0.0)),
        ClassLabel::TentedArch => (TemplateKind::Ray, 0.0, (0.0, -0.08 * s)),
        ClassLabel::LeftLoop => (TemplateKind::Ray, tilt, (0.0, -0.08 * s)),
        ClassLabel::RightLoop => (TemplateKind::Ray, -tilt, (0.0, -0.08 * s)),
        ClassLabel::Whorl => (TemplateKind::Segment { half_len: WHORL_HALF_LEN }, 0.0, (-10.0, 0.0)),
    };
    let alpha = rot + beta;
    let (rs, rc) = rot.sin_cos();
    let origin = (
        center.0 + rc * offset.0 - rs * offset.1,
        center.1 + rs * offset.0 + rc * offset.1,
    );

    let (asin, acos) = alpha.sin_cos();
    let cores = match kind {
        TemplateKind::Arch => Vec::new(),
        TemplateKind::Ray => vec![origin],
        TemplateKind::Segment { half_len } => vec![
            (origin.0 - acos * half_len, origin.1 - asin * half_len),
            (origin.0 + acos * half_len, origin.1 + asin * half_len),
        ],
    };

    let truth = SynthTruth {
        label,
        size,
        center,
        wavelength: lambda,
        cores,
        origin,
        alpha,
        kind,
        ellipse_radii: (0.42 * s, 0.46 * s),
    };

    let normal = Normal::new(0.0, NOISE_SIGMA).expect("valid sigma");
    let mut pixels = Vec::with_capacity(size * size);
    for y in 0..size {
        for x in 0..size {
            // Noise is drawn for every pixel so the stream layout does not
            // depend on the mask geometry.
            let noise = normal.sample(&mut rng);
            let (xf, yf) = (x as f64, y as f64);
            let q = truth.region_q(xf, yf);
            let v = if q >= 1.0 {
                BACKGROUND
            } else {
                let (u, w) = truth.to_template(xf, yf);
                let phase = template_phase(kind, u, w, lambda);
                let ridge = BASE + AMP * (std::f64::consts::TAU * phase).cos() + noise;
                if q <= BLEND_START_Q {
                    ridge
                } else {
                    let t = (q - BLEND_START_Q) / (1.0 - BLEND_START_Q);
                    ridge * (1.0 - t) + BACKGROUND * t
                }
            };
            pixels.push(v.round().clamp(0.0, 255.0) as u8);
        }
    }

    Ok((GrayImage::from_pixels(size, size, pixels), truth))
}

/// Generate a synthetic fingerprint image. See [`synth_fingerprint_with_truth`].
pub fn synth_fingerprint(
    label: ClassLabel,
    rng_seed: u64,
    size: usize,
) -> Result<GrayImage, RasterError> {
    synth_fingerprint_with_truth(label, rng_seed, size).map(|(img, _)| img)
}
