#![no_main]

use std::str::FromStr;

use homring::codes::GeneratorMatrix;
use homring::LambdaRational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(matrix) = GeneratorMatrix::from_str(text) else { return };

    assert!(matrix.n() >= 2);
    for i in 0..matrix.row_count() {
        assert_eq!(matrix.row(i).len(), matrix.block_length());
        for &entry in matrix.row(i) {
            assert!(entry < matrix.n());
        }
    }

    let reparsed = GeneratorMatrix::from_str(&matrix.to_string()).expect("display output parses");
    assert_eq!(reparsed, matrix);

    // Enumerating a code is exponential in the row count; factoring a huge
    // modulus is slow too. Both are out of scope for a parser harness.
    if matrix.n() > 64 {
        return;
    }
    let mut messages: u64 = 1;
    for _ in 0..matrix.row_count() {
        messages = match messages.checked_mul(matrix.n()) {
            Some(m) if m <= 1 << 12 => m,
            _ => return,
        };
    }

    let distribution = matrix.weight_enumerator(&LambdaRational::one()).unwrap();
    assert!(distribution.total() >= 1);
    assert!(distribution.total() <= messages);
    assert_eq!(distribution.count_of(&LambdaRational::zero()), 1);
});
