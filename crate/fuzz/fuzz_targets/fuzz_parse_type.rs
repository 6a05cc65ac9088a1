#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_walls::report::parse_type_spec;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(t) = parse_type_spec(s) {
        assert!(t.is_main());
        let canonical = format!("{},{},{},{}", t.p, t.q, t.a, t.b);
        assert_eq!(parse_type_spec(&canonical).unwrap(), t);
    }
});
