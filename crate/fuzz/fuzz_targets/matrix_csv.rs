#![no_main]

use libfuzzer_sys::fuzz_target;
use matpoly::formats::{parse_matrix_csv, write_matrix_csv};
use matpoly::{construct, to_matrix, ConstructionMethod};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(a) = parse_matrix_csv(text) else { return };
    let written = write_matrix_csv(&a);
    assert_eq!(parse_matrix_csv(&written).unwrap(), a);
    // interpolation cost grows quickly with size
    if a.rows() * a.cols() <= 36 {
        let p = construct(&a, ConstructionMethod::Lagrange);
        assert_eq!(to_matrix(&p), a);
    }
});
