#![no_main]

use libfuzzer_sys::fuzz_target;
use matpoly::BiPoly;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = BiPoly::parse(text, None) {
        let printed = p.to_text();
        let q = BiPoly::parse(&printed, Some(p.shape())).expect("printed text reparses");
        assert_eq!(p, q);
    }
});
