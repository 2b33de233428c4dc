use std::sync::Arc;

use grouplcd::tables::parse_reference_tables;
use grouplcd::{
    emit_table, parse_table, BitMatrix, Format, GroupRingElement, GroupTable, RingElement, RingSpec,
};
use proptest::prelude::*;

const RINGS: [RingSpec; 4] = [
    RingSpec::F2,
    RingSpec::Rk(1),
    RingSpec::Rk(2),
    RingSpec::Rk(3),
];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn group_ids(s in "[cd]?[0-9]{0,4}(:(aibj|bjai|rev|x))?|\\PC{0,12}") {
        if let Ok(g) = GroupTable::parse(&s) {
            let again = GroupTable::parse(g.label()).unwrap();
            prop_assert_eq!(again.element_names(), g.element_names());
            for i in 0..g.order() {
                prop_assert_eq!(g.mul(i, g.inv(i)), g.identity());
            }
        }
    }

    #[test]
    fn ring_elements(s in "(1|u[0-4]{1,2}|0)(\\+(1|u[0-4]{1,3}|0)){0,4}|[01]{1,9}|\\PC{0,8}") {
        for spec in RINGS {
            if let Ok(e) = RingElement::parse(spec, &s) {
                prop_assert_eq!(RingElement::parse(spec, &e.to_string()).unwrap(), e);
            }
        }
    }

    #[test]
    fn group_ring_elements(
        id in "c[1-9]|d(2|4|6|8|10):(aibj|bjai|rev)",
        ring in 0usize..4,
        s in "[01]{1,24}|((e|1|a[0-9]?|b|a[0-9]?b|ba[0-9]?)\\+){0,3}(e|a|b)|(1|u1|0)(,(1|u1|u2|0)){0,9}|\\PC{0,10}",
    ) {
        let g = Arc::new(GroupTable::parse(&id).unwrap());
        if let Ok(v) = GroupRingElement::parse(g.clone(), RINGS[ring], &s) {
            prop_assert_eq!(GroupRingElement::from_v_bits(g, RINGS[ring], &v.v_bits()).unwrap(), v.clone());
            prop_assert_eq!(v.transpose_involution().transpose_involution(), v);
        }
    }

    #[test]
    fn bit_matrices(s in "([01]{0,70}[\\n;,]){0,6}[01]{0,70}|\\PC{0,20}") {
        if let Ok(m) = s.parse::<BitMatrix>() {
            prop_assert_eq!(m.to_string().parse::<BitMatrix>().unwrap(), m);
        }
    }

    #[test]
    fn tables_and_fixtures(s in "\\PC{0,200}") {
        for format in [Format::Json, Format::Csv] {
            if let Ok(t) = parse_table(&s, format) {
                prop_assert_eq!(parse_table(&emit_table(&t, format).unwrap(), format).unwrap(), t);
            }
        }
        let _ = parse_reference_tables(&s);
    }
}

#[test]
fn fuzz_corpus_seeds() {
    let root = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fuzz/corpus");
    for (dir, format) in [("table_json", Format::Json), ("table_csv", Format::Csv)] {
        for entry in std::fs::read_dir(format!("{root}/{dir}")).unwrap() {
            let text = std::fs::read_to_string(entry.unwrap().path()).unwrap();
            let t = parse_table(&text, format).unwrap();
            assert_eq!(emit_table(&t, format).unwrap(), text);
        }
    }
    for entry in std::fs::read_dir(format!("{root}/reference_tables")).unwrap() {
        assert!(
            parse_reference_tables(&std::fs::read_to_string(entry.unwrap().path()).unwrap())
                .is_ok()
        );
    }
}

#[test]
fn malformed_tables() {
    let good = "group,listing,ring,v_bits,n,k,d,lcd,reversible,basis_rows_hex\nc3,cyclic,f2,111,3,1,3,true,true,e\n";
    assert!(parse_table(good, Format::Csv).is_ok());
    for bad in [
        good.replace("c3,cyclic", "c3,rev"),
        good.replace(",e\n", ",f\n"),
        good.replace(",3,true", ",,true"),
        good.replace("group,", "grp,"),
        good.replace("111,3,1", "111,3,2"),
    ] {
        assert!(parse_table(&bad, Format::Csv).is_err(), "{bad}");
    }
    assert!(parse_table(r#"[{"group":"c3"}]"#, Format::Json).is_err());
    assert!(parse_table("| md |", Format::Markdown).is_err());
}
