mod common;

use pictosem::lexicon_io::{load_lexicon, serialize_lexicon};
use pictosem::network_io::{network_json, parse_network_json, serialize_network, Format};
use pictosem_core::{analyze, validate_lexicon, AnalyzerConfig, Atom, SemanticNetwork, Utterance};

use common::resources;

fn analyze_ids(ids: &[&str]) -> SemanticNetwork {
    analyze(&resources().lexicon, &Utterance::from_ids(ids), &AnalyzerConfig::default()).unwrap()
}

#[test]
fn demo_lexicon_is_clean() {
    let res = resources();
    assert!(res.lexicon.symbols().len() >= 16);
    for id in ["i", "eat", "meat", "fork", "give", "cat", "daddy", "want", "sleep"] {
        assert!(res.lexicon.contains(id), "{id}");
    }
    let report = validate_lexicon(&res.lexicon);
    assert!(report.findings.is_empty(), "{:?}", report.findings);
}

#[test]
fn demo_features_and_frames() {
    let lex = resources().lexicon;
    let meat = lex.intrinsic_features("meat").unwrap();
    assert_eq!(meat.get("edible"), Some(&Atom::Int(1)));
    assert_eq!(meat.get("meat"), Some(&Atom::Int(1)));
    let labels = |id| lex.case_frame(id).unwrap().unwrap().labels().collect::<Vec<_>>();
    assert_eq!(labels("eat"), ["agent", "patient", "instrument"]);
    assert_eq!(labels("want"), ["agent", "theme"]);
    assert!(lex.case_frame("meat").unwrap().is_none());
}

#[test]
fn demo_lexicon_round_trips() {
    let lex = resources().lexicon;
    assert_eq!(load_lexicon(&serialize_lexicon(&lex)).unwrap(), lex);
}

#[test]
fn topic_and_unattached() {
    let net = analyze_ids(&["meat", "i", "eat"]);
    assert_eq!(net.topic().unwrap().symbol, "meat");
    assert!(net.unattached_vertices().is_empty());
    let net = analyze_ids(&["i", "eat", "meat", "table"]);
    let loose: Vec<_> = net.unattached_vertices().iter().map(|v| v.symbol.as_str()).collect();
    assert_eq!(loose, ["table"]);
}

#[test]
fn network_serializations() {
    let net = analyze_ids(&["i", "eat", "meat"]);
    assert_eq!(
        serialize_network(&net, Format::Json),
        r#"{"vertices":[{"pos":0,"symbol":"i"},{"pos":1,"symbol":"eat"},{"pos":2,"symbol":"meat"}],"arcs":[{"head":1,"case":"agent","dep":0,"value":0.8},{"head":1,"case":"patient","dep":2,"value":0.8}]}"#
    );
    let dot = serialize_network(&net, Format::GraphText);
    assert!(dot.starts_with("digraph network {"));
    assert_eq!(dot.matches("->").count(), 2);
    assert!(dot.contains("n1 -> n0 [label=\"agent 0.800\"];"));

    let empty = SemanticNetwork::new(vec![], vec![]).unwrap();
    assert_eq!(network_json(&empty), r#"{"vertices":[],"arcs":[]}"#);
    assert_eq!(serialize_network(&empty, Format::GraphText), "digraph network {\n}\n");
}

#[test]
fn network_json_round_trips() {
    let lex = resources().lexicon;
    for ids in [
        &["i", "eat", "meat"][..],
        &["fork", "i", "eat", "meat"],
        &["i", "want", "eat", "fish", "cake"],
        &["doll"],
    ] {
        let net = analyze_ids(ids);
        let text = network_json(&net);
        let back = parse_network_json(&text, &lex).unwrap();
        assert_eq!(back, net);
        assert_eq!(network_json(&back), text);
    }
}

#[test]
fn distinct_networks_serialize_differently() {
    let a = network_json(&analyze_ids(&["i", "eat", "meat"]));
    let b = network_json(&analyze_ids(&["meat", "i", "eat"]));
    assert_ne!(a, b);
}
