#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_walls::report::parse_window;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(w) = parse_window(s) {
        assert!(!w.is_empty(), "accepted windows are nonempty closed intervals");
        assert!(w.is_finite());
    }
});
