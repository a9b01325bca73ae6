#![no_main]

use std::str::FromStr;

use homring::ringspec::PirSpec;
use homring::LambdaRational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = PirSpec::from_str(text) else { return };

    let reparsed = PirSpec::from_str(&spec.to_string()).expect("display output parses");
    assert_eq!(reparsed, spec);

    // Grid walks on big specs are legitimate slow math, not parser bugs.
    if spec.grid_size() > 512 || spec.components().iter().any(|c| c.q() > 1 << 16) {
        return;
    }

    let lambda = LambdaRational::one();
    assert!(spec.weight(&spec.bottom(), &lambda).unwrap().is_zero());

    let mut seen = 0u128;
    for tuple in spec.tuples() {
        let complement = spec.complement(&tuple).unwrap();
        assert_eq!(spec.complement(&complement).unwrap(), tuple);
        spec.phi(&tuple).unwrap();
        spec.mobius(&tuple, &spec.bottom()).unwrap();
        spec.weight(&tuple, &lambda).unwrap();
        seen += 1;
    }
    assert_eq!(seen, spec.grid_size());
});
