#![no_main]

use libfuzzer_sys::fuzz_target;
use upq_walls::report::AnalysisReport;

fuzz_target!(|data: &[u8]| {
    if let Ok(report) = serde_json::from_slice::<AnalysisReport>(data) {
        // Accepted documents must survive a serialize/deserialize cycle.
        let json = serde_json::to_string(&report).expect("reports serialize");
        let back: AnalysisReport = serde_json::from_str(&json).expect("round-trips");
        assert_eq!(back, report);
    }
});
