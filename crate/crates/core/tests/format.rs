use revnets::fixtures;
use revnets::format::{
    parse_document, parse_es, parse_net, serialize_es, serialize_net, Document, EsKind, ParseErrorKind,
};

#[test]
fn structures_round_trip_byte_exactly() {
    for (name, text) in fixtures::EVENT_STRUCTURES {
        let doc = parse_es(text).unwrap();
        assert_eq!(&serialize_es(&doc), text, "{name}");
    }
}

#[test]
fn nets_round_trip_byte_exactly() {
    for (name, text) in fixtures::NETS.iter().chain(fixtures::MUTATIONS) {
        let doc = parse_net(text).unwrap();
        assert_eq!(&serialize_net(&doc), text, "{name}");
    }
}

#[test]
fn documents_dispatch_on_kind() {
    let doc = parse_document("kind: rpes\nevents: a\nundoable: a\nrevcause: a a\n").unwrap();
    assert!(matches!(&doc, Document::Structure(d) if d.kind == EsKind::Rpes));
    assert_eq!(doc.kind(), "rpes");
    let doc = parse_document("# lead comment\nkind: cn\nplaces: p\ntransitions: t\narc: p t\nmarking: p\n").unwrap();
    assert!(matches!(doc, Document::Net(_)));
    assert_eq!(
        doc.to_text(),
        "kind: cn\nplaces: p\ntransitions: t\narc: p t\nmarking: p\n"
    );
    let err = parse_document("kind: mystery\n").unwrap_err();
    assert_eq!((err.kind, err.line, err.column), (ParseErrorKind::Syntax, 1, 7));
}

#[test]
fn canonical_output_is_sorted() {
    let text = "kind: ppes\nevents: d c b a\ncause: c d\ncause: a b\nconflict: d a\n";
    let doc = parse_es(text).unwrap();
    assert_eq!(
        serialize_es(&doc),
        "kind: ppes\nevents: a b c d\ncause: a b\ncause: c d\nconflict: a d\n"
    );
    let again = parse_es(&serialize_es(&doc)).unwrap();
    assert_eq!(again, doc);
}

#[test]
fn section_glued_to_value() {
    let doc = parse_es("kind:pes\nevents:a b\n").unwrap();
    assert_eq!(doc.core().events().len(), 2);
}

#[test]
fn structure_errors_are_located() {
    let cases: &[(&str, ParseErrorKind, usize, usize)] = &[
        ("events: a\n", ParseErrorKind::Syntax, 1, 1),
        ("kind: pes\nkind: pes\n", ParseErrorKind::Duplicate, 2, 1),
        ("kind: pes\nevents: a a\n", ParseErrorKind::Duplicate, 2, 11),
        ("kind: pes\nevents: a\ncause: a\n", ParseErrorKind::Syntax, 3, 1),
        ("kind: pes\nevents: a b\ncause: a b c\n", ParseErrorKind::Syntax, 3, 12),
        (
            "kind: rpes\nevents: a b\nrevcause: a b\n",
            ParseErrorKind::Undeclared,
            3,
            13,
        ),
        ("kind: pes\nevents: a-b\n", ParseErrorKind::Syntax, 2, 9),
        ("kind: pes\nevents: a\nbogus: a\n", ParseErrorKind::Syntax, 3, 1),
        ("kind: pes\nevents a\n", ParseErrorKind::Syntax, 2, 1),
        (
            "kind: ppes\nevents: a\nprevent: a a\n",
            ParseErrorKind::KindMismatch,
            3,
            1,
        ),
        ("", ParseErrorKind::Syntax, 1, 1),
    ];
    for (text, kind, line, column) in cases {
        let err = parse_es(text).unwrap_err();
        assert_eq!(
            (err.kind, err.line, err.column),
            (*kind, *line, *column),
            "{text:?}: {err}"
        );
    }
}

#[test]
fn net_errors_are_located() {
    let cases: &[(&str, ParseErrorKind, usize, usize)] = &[
        ("kind: pcn\nplaces: p\nplaces: p\n", ParseErrorKind::Duplicate, 3, 9),
        (
            "kind: pcn\nplaces: p\ntransitions: p\n",
            ParseErrorKind::Duplicate,
            3,
            14,
        ),
        (
            "kind: pcn\nplaces: p\ntransitions: t\narc: p u\n",
            ParseErrorKind::Undeclared,
            4,
            8,
        ),
        (
            "kind: pcn\nplaces: p\ntransitions: t\narc: p t\narc: p t\n",
            ParseErrorKind::Duplicate,
            5,
            6,
        ),
        (
            "kind: pcn\nplaces: p\ntransitions: t\narc: p t\ninhibit: t p\n",
            ParseErrorKind::Syntax,
            5,
            10,
        ),
        (
            "kind: pcn\nplaces: p\ntransitions: t\narc: p t\nmarking: t\n",
            ParseErrorKind::Syntax,
            5,
            10,
        ),
        (
            "kind: rcn\nplaces: p\ntransitions: t\narc: p t\nbackward: p\n",
            ParseErrorKind::KindMismatch,
            5,
            11,
        ),
        ("kind: pes\n", ParseErrorKind::Syntax, 1, 7),
    ];
    for (text, kind, line, column) in cases {
        let err = parse_net(text).unwrap_err();
        assert_eq!(
            (err.kind, err.line, err.column),
            (*kind, *line, *column),
            "{text:?}: {err}"
        );
    }
}

#[test]
fn error_display_carries_position() {
    let err = parse_net("kind: ipt\nplaces: p\narc: p q\n").unwrap_err();
    assert_eq!(err.to_string(), "3:8: undeclared name: `q` is not declared");
    assert_eq!(err.token, "q");
}

#[test]
fn multiset_markings_survive_round_trip() {
    let text = "kind: ipt\nplaces: p q\ntransitions: t\narc: p t\narc: t q\nmarking: p p\n";
    let doc = parse_net(text).unwrap();
    assert_eq!(doc.net.initial_marking().count("p"), 2);
    assert_eq!(serialize_net(&doc), text);
}
