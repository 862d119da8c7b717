#![no_main]

use libfuzzer_sys::fuzz_target;
use matpoly::surface::Range;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(r) = Range::parse(text) {
        assert!(r.x.0 <= r.x.1 && r.y.0 <= r.y.1);
    }
});
