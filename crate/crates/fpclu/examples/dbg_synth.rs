// dump one synthetic image per class for visual inspection
use fpclu::raster::{save_gray_image, synth_fingerprint, ClassLabel};

fn main() {
    std::fs::create_dir_all("/tmp/synth").unwrap();
    for label in ClassLabel::ALL {
        let img = synth_fingerprint(label, 7, 256).unwrap();
        let path = format!("/tmp/synth/{label}.pgm");
        save_gray_image(&img, std::path::Path::new(&path)).unwrap();
        println!("wrote {path}");
    }
}
