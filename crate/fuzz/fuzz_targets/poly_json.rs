#![no_main]

use libfuzzer_sys::fuzz_target;
use matpoly::BiPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = BiPoly::from_json(text) {
        let q = BiPoly::from_json(&p.to_json()).unwrap();
        assert_eq!(p, q);
    }
});
