use serre_depth::graphs::Graph;
use serre_depth::io::{
    complex_from_json, complex_to_json, ideal_from_json, ideal_to_json, parse_ideal, read_complex,
    read_graph, read_ideal,
};
use serre_depth::verify::{run_check, VerifyConfig};
use serre_depth::{families, hochster, homology, Error, ExtInt, Field};

#[test]
fn complex_json_conventions() {
    assert!(read_complex(r#"{"n": 3, "facets": []}"#).unwrap().is_void());
    assert_eq!(
        read_complex(r#"{"n": 3, "facets": [[]]}"#)
            .unwrap()
            .facet_lists(),
        vec![Vec::<usize>::new()]
    );
    let c = families::ce2();
    assert_eq!(complex_from_json(&complex_to_json(&c)).unwrap(), c);
    assert!(matches!(
        read_complex(r#"{"n": 3, "facets": [[1,5]]}"#),
        Err(Error::VertexOutOfRange { .. })
    ));
}

#[test]
fn parse_errors_carry_positions() {
    match read_complex("{\"n\": 3,\n\"facets\": [[1,2]") {
        Err(Error::Parse(msg)) => assert!(msg.contains("line 2"), "{msg}"),
        other => panic!("{other:?}"),
    }
    match parse_ideal("x1*x2, x2^a", None) {
        Err(Error::Parse(msg)) => assert!(msg.contains("generator 2"), "{msg}"),
        other => panic!("{other:?}"),
    }
}

#[test]
fn ideal_syntax() {
    let i = parse_ideal("x1*x3, x2^2*x4", None).unwrap();
    assert_eq!(i.nvars(), 4);
    assert_eq!(i.to_string(), "x1*x3, x2^2*x4");
    assert!(parse_ideal("0", Some(3)).unwrap().is_zero());
    assert!(parse_ideal("", Some(3)).unwrap().is_zero());
    assert!(parse_ideal("1", Some(2)).unwrap().is_unit());
    assert!(parse_ideal("x4", Some(3)).is_err());
    assert!(parse_ideal("x0", None).is_err());
    assert_eq!(parse_ideal("x2", Some(5)).unwrap().nvars(), 5);
    // repeated factors multiply
    assert_eq!(
        parse_ideal("x1*x1", None).unwrap(),
        parse_ideal("x1^2", None).unwrap()
    );
}

#[test]
fn ideal_json() {
    let i = read_ideal(r#"{"n": 4, "gens": [[1,0,1,0],[0,1,0,1]]}"#, None).unwrap();
    assert_eq!(i, parse_ideal("x1*x3, x2*x4", None).unwrap());
    assert_eq!(ideal_from_json(&ideal_to_json(&i)).unwrap(), i);
    assert!(read_ideal(r#"{"n": 4, "gens": [[1,0,1]]}"#, None).is_err());
    assert!(read_ideal(r#"{"n": 4, "gens": []}"#, Some(3)).is_err());
}

#[test]
fn graph_json() {
    let g = read_graph(r#"{"n": 4, "edges": [[1,2],[3,4]]}"#).unwrap();
    assert_eq!(g, Graph::new(4, &[(1, 2), (3, 4)]).unwrap());
    assert_eq!(Graph::from_json(&g.to_json()).unwrap(), g);
    assert!(read_graph(r#"{"n": 2, "edges": [[1,3]]}"#).is_err());
}

#[test]
fn infinities_and_absent_entries_serialize() {
    assert_eq!(serde_json::to_string(&ExtInt::Inf).unwrap(), "\"inf\"");
    assert_eq!(serde_json::to_string(&ExtInt::NegInf).unwrap(), "\"-inf\"");
    assert_eq!(
        serde_json::from_str::<ExtInt>("\"-inf\"").unwrap(),
        ExtInt::NegInf
    );
    assert_eq!(
        serde_json::from_str::<ExtInt>("3").unwrap(),
        ExtInt::Finite(3)
    );
    let p = hochster::local_coh_dims(&families::two_k2(), Field::Rationals).unwrap();
    assert_eq!(
        serde_json::to_string(&p).unwrap(),
        r#"{"0":null,"1":0,"2":2}"#
    );
    let h = homology::reduced_homology(&families::hollow_triangle(), Field::Rationals).unwrap();
    let v: serde_json::Value = serde_json::to_value(&h).unwrap();
    assert_eq!(v["1"], 1);
}

#[test]
fn verification_is_reproducible() {
    let cfg = VerifyConfig::default();
    for name in [
        "07-h1-criterion",
        "09-polarization-shift",
        "12-cover-polarization",
    ] {
        let a = run_check(name, &cfg).unwrap();
        let b = run_check(name, &cfg).unwrap();
        assert_eq!((a.status, a.detail), (b.status, b.detail));
    }
}
