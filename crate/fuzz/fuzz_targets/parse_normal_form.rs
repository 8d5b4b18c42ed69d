#![no_main]

use knotgeo::garside3::left_canonical_form;
use knotgeo::GarsideNormalForm;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    match text.parse::<GarsideNormalForm>() {
        Ok(nf) => {
            let reparsed: GarsideNormalForm = nf.to_string().parse().expect("printed forms parse");
            assert_eq!(reparsed, nf);
            if nf.inf().abs() <= 64 && nf.canonical_length() <= 64 {
                assert_eq!(left_canonical_form(&nf.to_word()).unwrap(), nf);
            }
        }
        Err(e) => assert!(e.position <= text.len()),
    }
});
