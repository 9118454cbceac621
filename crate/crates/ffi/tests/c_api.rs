//! Exercise the C entry points from Rust: ownership transfer, error codes,
//! null handling, and a few frozen outputs.

use std::ffi::{c_char, CStr, CString};
use std::ptr;

use poset_homology_ffi::*;

fn cstr(text: &str) -> CString {
    CString::new(text).unwrap()
}

unsafe fn read_string(p: *mut c_char) -> String {
    assert!(!p.is_null());
    let s = CStr::from_ptr(p).to_str().unwrap().to_string();
    phom_string_free(p);
    s
}

unsafe fn last_error() -> String {
    CStr::from_ptr(phom_last_error()).to_str().unwrap().to_string()
}

/// A colouring of the square lattice doubling the coefficient along every
/// cover, written in the text format: H_0 and H_1 are both Z/2 over Z.
const DOUBLING_SQUARE: &str = "\
boolean 2 Z
elem 0 rank 1
elem a1 rank 1
elem a2 rank 1
elem a1a2 rank 1
cover 0 a1
map 2
cover 0 a2
map 2
cover a1 a1a2
map 2
cover a2 a1a2
map 2
";

#[test]
fn parse_homology_and_free() {
    unsafe {
        let text = cstr(DOUBLING_SQUARE);
        let mut colouring: *mut PhomColouring = ptr::null_mut();
        assert_eq!(phom_colouring_parse(text.as_ptr(), &mut colouring), PhomStatus::Ok);
        assert_eq!(phom_colouring_elements(colouring), 4);
        assert!(phom_colouring_is_boolean(colouring));

        let mut homology: *mut PhomHomology = ptr::null_mut();
        assert_eq!(
            phom_chain_homology(colouring, ptr::null(), &mut homology),
            PhomStatus::Ok
        );
        assert_eq!(phom_homology_degrees(homology), 3);
        assert_eq!(phom_homology_betti(homology, 0), 0);
        assert_eq!(phom_homology_torsion_count(homology, 0), 1);
        assert_eq!(phom_homology_torsion_count(homology, 1), 1);
        assert_eq!(phom_homology_torsion_count(homology, 2), 0);

        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(phom_homology_torsion_factor(homology, 1, 0, &mut s), PhomStatus::Ok);
        assert_eq!(read_string(s), "2");
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(phom_homology_group(homology, 1, &mut s), PhomStatus::Ok);
        assert_eq!(read_string(s), "Z/2");
        phom_homology_free(homology);

        // over Q the torsion disappears entirely
        let ring = cstr("Q");
        let mut homology: *mut PhomHomology = ptr::null_mut();
        assert_eq!(
            phom_chain_homology(colouring, ring.as_ptr(), &mut homology),
            PhomStatus::Ok
        );
        for n in 0..phom_homology_degrees(homology) {
            assert_eq!(phom_homology_betti(homology, n), 0);
            assert_eq!(phom_homology_torsion_count(homology, n), 0);
        }
        phom_homology_free(homology);

        // the cube complex computes the same table
        let mut homology: *mut PhomHomology = ptr::null_mut();
        assert_eq!(
            phom_cube_homology(colouring, ptr::null(), &mut homology),
            PhomStatus::Ok
        );
        let mut s: *mut c_char = ptr::null_mut();
        assert_eq!(phom_homology_group(homology, 0, &mut s), PhomStatus::Ok);
        assert_eq!(read_string(s), "Z/2");
        phom_homology_free(homology);

        phom_colouring_free(colouring);
    }
}

#[test]
fn null_and_error_handling() {
    unsafe {
        let mut colouring: *mut PhomColouring = ptr::null_mut();
        assert_eq!(
            phom_colouring_parse(ptr::null(), &mut colouring),
            PhomStatus::NullArgument
        );
        let bad = cstr("poset Z\nelem x rank 1\nelem y rank 1\n");
        assert_eq!(
            phom_colouring_parse(bad.as_ptr(), &mut colouring),
            PhomStatus::InvalidInput
        );
        assert!(!last_error().is_empty());

        // a colouring without a boolean header is rejected by cube calls
        let chain = cstr("poset Z\nelem x rank 1\nelem top rank 1\ncover x top\nmap 2\n");
        assert_eq!(phom_colouring_parse(chain.as_ptr(), &mut colouring), PhomStatus::Ok);
        assert!(!phom_colouring_is_boolean(colouring));
        let mut homology: *mut PhomHomology = ptr::null_mut();
        assert_eq!(
            phom_cube_homology(colouring, ptr::null(), &mut homology),
            PhomStatus::InvalidInput
        );
        assert!(last_error().contains("Boolean"));
        assert_eq!(phom_verify_main(colouring), PhomStatus::InvalidInput);

        // invalid ring strings are reported as such
        let mut homology: *mut PhomHomology = ptr::null_mut();
        let ring = cstr("F4:2");
        assert_eq!(
            phom_chain_homology(colouring, ring.as_ptr(), &mut homology),
            PhomStatus::InvalidInput
        );
        phom_colouring_free(colouring);

        // frees tolerate null
        phom_colouring_free(ptr::null_mut());
        phom_homology_free(ptr::null_mut());
        phom_string_free(ptr::null_mut());
        assert_eq!(phom_homology_betti(ptr::null(), 0), 0);
        assert_eq!(phom_homology_degrees(ptr::null()), 0);
        assert_eq!(phom_colouring_elements(ptr::null()), 0);
    }
}

#[test]
fn random_instances_verify_end_to_end() {
    unsafe {
        let mut colouring: *mut PhomColouring = ptr::null_mut();
        assert_eq!(phom_colouring_random(9, 2, 2, &mut colouring), PhomStatus::Ok);
        assert_eq!(phom_colouring_elements(colouring), 4);

        // deterministic: the same seed renders to the same text
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(phom_colouring_write(colouring, &mut text), PhomStatus::Ok);
        let first = read_string(text);
        let mut again: *mut PhomColouring = ptr::null_mut();
        assert_eq!(phom_colouring_random(9, 2, 2, &mut again), PhomStatus::Ok);
        let mut text: *mut c_char = ptr::null_mut();
        assert_eq!(phom_colouring_write(again, &mut text), PhomStatus::Ok);
        assert_eq!(read_string(text), first);
        phom_colouring_free(again);

        // and the round-tripped text parses back to a working instance
        let reparsed_text = cstr(&first);
        let mut reparsed: *mut PhomColouring = ptr::null_mut();
        assert_eq!(
            phom_colouring_parse(reparsed_text.as_ptr(), &mut reparsed),
            PhomStatus::Ok
        );

        assert_eq!(phom_verify_main(reparsed), PhomStatus::Ok);
        assert_eq!(phom_verify_les(reparsed, 0), PhomStatus::Ok);
        assert_eq!(phom_verify_les(reparsed, 1), PhomStatus::Ok);
        assert_eq!(phom_verify_les(reparsed, 5), PhomStatus::InvalidInput);
        assert_eq!(phom_verify_homotopy(reparsed, 4), PhomStatus::Ok);

        phom_colouring_free(reparsed);
        phom_colouring_free(colouring);

        assert_eq!(phom_colouring_random(1, 9, 2, &mut colouring), PhomStatus::InvalidInput);
    }
}

#[test]
fn link_and_graph_tables() {
    unsafe {
        // left-handed trefoil: frozen table rows over Z
        let pd = cstr("pd n+ 0 n- 3\nX 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n");
        let mut table: *mut c_char = ptr::null_mut();
        assert_eq!(
            phom_khovanov_table(pd.as_ptr(), ptr::null(), &mut table),
            PhomStatus::Ok
        );
        let table = read_string(table);
        assert!(table.contains("-3\t-9\t1\t-"));
        assert!(table.contains("-2\t-7\t0\t2"));
        assert!(table.contains("0\t-1\t1\t-"));

        // triangle graph with the rank-2 algebra: P(K3, 2) = 0
        let graph = cstr("graph 3\ne 0 1\ne 1 2\ne 0 2\n");
        let mut tsv: *mut c_char = ptr::null_mut();
        assert_eq!(
            phom_chromatic_homology(graph.as_ptr(), 2, ptr::null(), &mut tsv),
            PhomStatus::Ok
        );
        let tsv = read_string(tsv);
        assert!(tsv.starts_with("degree\tbetti\ttorsion\tgroup"));

        let version = CStr::from_ptr(phom_version()).to_str().unwrap();
        assert!(!version.is_empty());
    }
}
