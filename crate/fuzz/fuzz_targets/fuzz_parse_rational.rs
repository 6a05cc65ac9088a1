#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_walls::rational::Rational;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = s.parse::<Rational>() {
        // Display output must be canonical and re-parseable.
        let back: Rational = r.to_string().parse().expect("display round-trips");
        assert_eq!(back, r);
    }
});
