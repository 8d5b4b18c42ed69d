#![no_main]

use knotgeo::twobridge::{fraction, parse_conway};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match parse_conway(text) {
        Ok(d) => {
            assert_eq!(parse_conway(&d.to_string()).expect("printed notation parses"), d);
            let _ = fraction(&d);
            if d.coeffs().iter().map(|&a| a as u64).sum::<u64>() <= 64 {
                let _ = d.diagram();
            }
        }
        Err(e) => assert!(e.position <= text.len()),
    }
});
