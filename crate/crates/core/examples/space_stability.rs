//! Random elements of the spaces V^(0) and V^(1) pushed through the
//! operators; the images must land in the predicted spaces.

use dkcong::localize::engine::Engine;
use dkcong::localize::theorems::{property_suite, SampleConfig};

fn main() {
    let r = property_suite(&Engine::new(), &SampleConfig::default());
    let failed: Vec<_> = r.failures().map(|f| f.item_id.clone()).collect();
    println!("{} samples checked, failures: {failed:?}", r.findings.len());
}
