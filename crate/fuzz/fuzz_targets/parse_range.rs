#![no_main]

use std::str::FromStr;

use homring_cli::range::RangeSpec;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(range) = RangeSpec::from_str(text) else { return };

    assert!(range.from <= range.to);
    assert!(!range.is_empty());
    assert!(range.len() >= 1);

    let reparsed = RangeSpec::from_str(&range.to_string()).expect("display output parses");
    assert_eq!(reparsed, range);

    let head: Vec<u64> = range.iter().take(2).collect();
    assert_eq!(head[0], range.from);
    assert_eq!(head.len() == 2, range.from < range.to);
});
