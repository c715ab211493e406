use gray_unit_distance::embedding::{
    assemble, sweep, sweep_sequential, validate, ConstructionParams, Embedding, SweepSpec,
    SweepStatus, STAR_PERIOD,
};
use gray_unit_distance::io::{
    embedding_from_json, embedding_to_json, graph_from_json, graph_to_json, sweep_to_csv,
    write_atomic, FormatError, SWEEP_CSV_HEADER,
};
use gray_unit_distance::render::{to_svg, RenderStyle};
use gray_unit_distance::{gray_graph, Graph};

fn reference() -> Embedding {
    assemble(ConstructionParams::reference()).unwrap()
}

fn small_spec(steps_h: usize, steps_theta: usize) -> SweepSpec {
    SweepSpec {
        steps_h,
        steps_theta,
        ..SweepSpec::default()
    }
}

#[test]
fn embedding_round_trip_keeps_metrics() {
    let e = reference();
    let text = embedding_to_json(&e);
    let back = embedding_from_json(&text).unwrap();
    assert_eq!(back.graph(), e.graph());
    assert_eq!(back.colors(), e.colors());
    assert_eq!(back.params(), e.params());
    for (p, q) in e.coords().iter().zip(back.coords()) {
        assert_eq!(p, q, "17 significant digits round-trip exactly");
    }
    let a = validate(&e, 1e-9, 1e-6);
    let b = validate(&back, 1e-9, 1e-6);
    assert!((a.max_edge_length_error - b.max_edge_length_error).abs() <= 1e-12);
    assert!((a.min_vertex_separation - b.min_vertex_separation).abs() <= 1e-12);
    assert_eq!(a.coincident_pairs, b.coincident_pairs);
    assert_eq!(a.accidental_unit_pairs, b.accidental_unit_pairs);
    assert_eq!(a.symmetry_order, b.symmetry_order);
    assert_eq!(a.isomorphic_to_gray, b.isomorphic_to_gray);
    assert_eq!(embedding_to_json(&back), text);
}

#[test]
fn empty_embedding_round_trips() {
    let e = Embedding::new(Graph::empty(), vec![], vec![], None).unwrap();
    let back = embedding_from_json(&embedding_to_json(&e)).unwrap();
    assert_eq!(back.vertex_count(), 0);
    assert_eq!(back.graph().edge_count(), 0);
}

#[test]
fn truncated_document_reports_location() {
    let text = embedding_to_json(&reference());
    let cut = &text[..text.len() / 2];
    match embedding_from_json(cut) {
        Err(FormatError::Parse { line, column, .. }) => assert!(line >= 1 && column >= 1),
        other => panic!("expected parse error, got {other:?}"),
    }
    assert!(matches!(
        graph_from_json("{\"n\": 3, \"edges\": [[0,"),
        Err(FormatError::Parse { .. })
    ));
}

#[test]
fn graph_json_round_trip_and_key_order() {
    let g = gray_graph();
    let text = graph_to_json(&g);
    let e = text.find("\"edges\"").unwrap();
    let n = text.find("\"n\"").unwrap();
    let r = text.find("\"roles\"").unwrap();
    assert!(e < n && n < r);
    assert_eq!(graph_from_json(&text).unwrap(), g);
}

#[test]
fn sweep_csv_shape() {
    let map = sweep(&small_spec(4, 5));
    let csv = sweep_to_csv(&map);
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(lines[0], SWEEP_CSV_HEADER.join(","));
    assert_eq!(lines.len(), 1 + 20);
    assert!(!csv.contains('\r'));
    // h-major order
    let hs: Vec<f64> = lines[1..]
        .iter()
        .map(|l| l.split(',').next().unwrap().parse().unwrap())
        .collect();
    assert!(hs.windows(2).all(|w| w[0] <= w[1]));
    let empty = sweep_to_csv(&sweep(&small_spec(0, 0)));
    assert_eq!(empty.lines().count(), 1);
}

#[test]
fn full_sweep_vocabulary_and_validity() {
    let map = sweep(&SweepSpec::default());
    assert_eq!(map.points.len(), 1024);
    let csv = sweep_to_csv(&map);
    for line in csv.lines().skip(1) {
        let status = line.split(',').nth(2).unwrap();
        assert!(SweepStatus::parse(status).is_some(), "{status}");
    }
    for p in map.points.iter().filter(|p| p.status == SweepStatus::Valid) {
        let e = assemble(ConstructionParams::new(p.h, p.theta).unwrap()).unwrap();
        assert!(validate(&e, 1e-9, 1e-6).isomorphic_to_gray);
    }
}

#[test]
fn sequential_and_default_sweeps_agree() {
    let spec = small_spec(6, 6);
    assert_eq!(sweep(&spec), sweep_sequential(&spec));
}

#[test]
fn sweep_is_periodic_in_theta() {
    let a = sweep(&small_spec(8, 8));
    let shifted = SweepSpec {
        theta_range: (STAR_PERIOD, 2.0 * STAR_PERIOD),
        ..small_spec(8, 8)
    };
    let b = sweep(&shifted);
    let la: Vec<_> = a.points.iter().map(|p| p.status).collect();
    let lb: Vec<_> = b.points.iter().map(|p| p.status).collect();
    assert_eq!(la, lb);
}

#[test]
fn near_tangent_column() {
    let spec = SweepSpec {
        h_range: (0.99, 0.99),
        steps_h: 1,
        steps_theta: 64,
        ..SweepSpec::default()
    };
    let map = sweep(&spec);
    assert_eq!(map.points.len(), 64);
    for p in &map.points {
        assert!(p.min_separation.is_some());
        // the two unit circles about opposite hexagon vertices nearly touch,
        // so the solid vertices crowd together
        assert!(p.min_separation.unwrap() < 0.3, "{p:?}");
    }
    let out = sweep(&SweepSpec {
        h_range: (0.999, 1.2),
        steps_h: 3,
        steps_theta: 2,
        ..SweepSpec::default()
    });
    let statuses: Vec<_> = out.points.iter().map(|p| p.status).collect();
    assert_eq!(&statuses[2..], &[SweepStatus::NoIntersection; 4]);
}

#[test]
fn svg_is_well_formed() {
    let e = reference();
    for circles in [false, true] {
        let style = RenderStyle {
            circles,
            ..RenderStyle::default()
        };
        let svg = to_svg(&e, &style);
        let doc = roxmltree::Document::parse(&svg).expect("well-formed XML");
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        let lines = doc.descendants().filter(|n| n.has_tag_name("line")).count();
        assert_eq!(lines, 81);
        let incidence: Vec<_> = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("incidence"))
            .collect();
        assert_eq!(incidence.len(), if circles { 27 } else { 0 });
        if circles {
            let r0 = incidence[0].attribute("r").unwrap();
            assert!(incidence.iter().all(|c| c.attribute("r") == Some(r0)));
        }
        let hollow = doc
            .descendants()
            .filter(|n| n.attribute("class") == Some("vertex hollow"))
            .collect::<Vec<_>>();
        assert_eq!(hollow.len(), 27);
        assert!(hollow
            .iter()
            .all(|n| n.attribute("fill") == Some("#ffffff")));
        assert!(svg.is_ascii());
        assert_eq!(svg, to_svg(&e, &style));
    }
}

#[test]
fn rendering_does_not_touch_embedding() {
    let e = reference();
    let before = e.clone();
    let _ = to_svg(&e, &RenderStyle::default());
    assert_eq!(e, before);
}

#[test]
fn atomic_write_replaces_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    write_atomic(&path, b"first").unwrap();
    write_atomic(&path, b"second").unwrap();
    assert_eq!(std::fs::read(&path).unwrap(), b"second");
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}
