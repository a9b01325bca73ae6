#![no_main]

use std::str::FromStr;

use homring::LambdaRational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(lambda) = LambdaRational::from_str(text) else { return };

    let reparsed = LambdaRational::from_str(&lambda.coefficient_string())
        .expect("coefficient string parses");
    assert_eq!(reparsed, lambda);

    let display = lambda.to_string();
    if lambda.is_zero() {
        assert_eq!(display, "0");
    } else {
        assert!(display.ends_with('λ'));
    }

    assert_eq!(lambda.is_negative(), lambda.coefficient_string().starts_with('-'));
});
