//! The theta-function identity suites as JSON lines.

use dkcong::theta::{verify_lemma_suite, verify_section_steps};

fn main() {
    let mut r = verify_lemma_suite(100);
    r.extend(verify_section_steps(100));
    print!("{}", r.to_json_lines());
}
