#![no_main]

use libfuzzer_sys::fuzz_target;
use matpoly::Rat;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = text.parse::<Rat>() {
        let again: Rat = q.to_string().parse().expect("canonical literal reparses");
        assert_eq!(q, again);
    }
});
