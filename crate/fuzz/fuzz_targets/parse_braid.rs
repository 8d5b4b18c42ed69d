#![no_main]

use knotgeo::braid::parse_braid;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse_braid(text) {
        Ok(w) => {
            let again = parse_braid(&w.to_string()).expect("printed words parse");
            assert_eq!(again, w);
        }
        Err(e) => assert!(e.position <= text.len()),
    }
});
