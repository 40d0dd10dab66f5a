pub mod raster;

pub use raster::{ClassLabel, DatasetManifest, GrayImage};
