use std::io::Cursor;

use kholes::io::*;
use kholes_core::generators::{gen_grid, gen_random};
use kholes_core::ordertype::{order_type_key, record_size};
use kholes_core::{Error, PointSet};

#[test]
fn text_round_trip() {
    let s = gen_random(12, 5, 400).unwrap();
    let text = format_points(&s, Some("random\nseed 5"));
    assert!(text.starts_with("# random\n# seed 5\n12\n"));
    let back = read_points(Cursor::new(text)).unwrap();
    assert_eq!(back, s);
    assert!(!back.collinear_allowed());
}

#[test]
fn big_coordinates_survive() {
    let text = "2\n123456789012345678901234567890 -5\n0 0\n";
    let s = read_points(Cursor::new(text)).unwrap();
    assert_eq!(s.point(0).x.to_string(), "123456789012345678901234567890");
}

#[test]
fn collinear_input_is_flagged() {
    let g = gen_grid(3).unwrap();
    let back = read_points(Cursor::new(format_points(&g, None))).unwrap();
    assert!(back.collinear_allowed());
    assert_eq!(back.points(), g.points());
}

#[test]
fn malformed_text() {
    let line = |t: &str| match read_points(Cursor::new(t.to_string())) {
        Err(IoError::Parse { line, .. }) => line,
        other => panic!("{other:?}"),
    };
    assert_eq!(line("# c\n3\n0 0\n1 x\n2 5\n"), 4);
    assert_eq!(line("2\n0 0\n"), 2);
    assert_eq!(line("2\n0 0\n1 1\n2 2\n"), 4);
    assert_eq!(line("two\n"), 1);
    assert!(matches!(read_points(Cursor::new("2\n0 0\n0 0\n")), Err(IoError::Core(Error::Duplicate(0, 1)))));
}

fn five_point_types() -> Vec<PointSet> {
    vec![
        PointSet::from_i64(&[(0, 0), (4, 0), (6, 3), (3, 6), (0, 4)]).unwrap(),
        PointSet::from_i64(&[(0, 0), (8, 0), (9, 5), (1, 7), (3, 2)]).unwrap(),
        PointSet::from_i64(&[(0, 0), (10, 1), (4, 9), (4, 3), (5, 4)]).unwrap(),
    ]
}

#[test]
fn database_round_trip_and_self_check() {
    let sets = five_point_types();
    let keys: std::collections::BTreeSet<_> = sets.iter().map(|s| order_type_key(s).unwrap()).collect();
    assert_eq!(keys.len(), 3);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("otypes05.b08");
    let mut bytes = vec![];
    write_order_type_db(&mut bytes, &sets).unwrap();
    assert_eq!(bytes.len(), 3 * record_size(5));
    std::fs::write(&path, &bytes).unwrap();
    let db = OrderTypeDb::open(&path, 5, true).unwrap();
    assert_eq!(db.records(), 3);
    let back: Vec<PointSet> = db.map(Result::unwrap).collect();
    assert_eq!(back, sets);

    // two records where three are expected
    std::fs::write(&path, &bytes[..2 * record_size(5)]).unwrap();
    match OrderTypeDb::open(&path, 5, true) {
        Err(IoError::Core(Error::Format { offset: 0, msg })) => assert!(msg.contains("3 order types"), "{msg}"),
        other => panic!("{:?}", other.err()),
    }
}

#[test]
fn truncated_database_reports_offset() {
    let mut bytes = vec![];
    write_order_type_db(&mut bytes, &five_point_types()).unwrap();
    let cut = bytes.len() - 3;
    match OrderTypeDb::new(Cursor::new(&bytes[..cut]), cut as u64, 5) {
        Err(IoError::Core(Error::Format { offset, .. })) => assert_eq!(offset, 2 * record_size(5) as u64),
        other => panic!("{:?}", other.err()),
    }
    // stream shorter than announced
    let mut db = OrderTypeDb::new(Cursor::new(&bytes[..record_size(5)]), bytes.len() as u64, 5).unwrap();
    assert!(db.next().unwrap().is_ok());
    match db.next().unwrap() {
        Err(IoError::Core(Error::Format { offset, .. })) => assert_eq!(offset, record_size(5) as u64),
        other => panic!("{other:?}"),
    }
    assert!(db.next().is_none());
}

#[test]
fn collinear_record_names_its_index() {
    let mut bytes = vec![];
    write_order_type_db(&mut bytes, &five_point_types()).unwrap();
    // third record: points 0, 1, 2 on the x axis
    let rs = record_size(5);
    bytes[2 * rs..2 * rs + 6].copy_from_slice(&[0, 0, 1, 0, 2, 0]);
    let out: Vec<_> = OrderTypeDb::new(Cursor::new(&bytes), bytes.len() as u64, 5).unwrap().collect();
    match &out[2] {
        Err(IoError::Core(Error::Format { offset, msg })) => {
            assert_eq!(*offset, 2 * rs as u64);
            assert!(msg.contains("record 2"));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn sixteen_bit_records() {
    let s = gen_random(9, 2, 60000).unwrap();
    let mut bytes = vec![];
    write_order_type_db(&mut bytes, [&s]).unwrap();
    assert_eq!(bytes.len(), 36);
    let back: Vec<_> = OrderTypeDb::new(Cursor::new(&bytes), 36, 9).unwrap().map(Result::unwrap).collect();
    assert_eq!(back, vec![s]);
}
