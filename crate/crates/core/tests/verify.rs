use lrdraw::drawing::{DrawingKind, GridDrawing, Point};
use lrdraw::outerplanar::OuterplanarGraph;
use lrdraw::star_weak::{bell_like_drawing, flat_drawing};
use lrdraw::tree::*;
use lrdraw::verify::*;

fn pts(v: &[(i64, i64)]) -> Vec<Point> {
    v.iter().map(|&(x, y)| Point::new(x, y)).collect()
}

fn drawing(kind: DrawingKind, v: &[(i64, i64)]) -> GridDrawing {
    GridDrawing::new(kind, pts(v))
}

fn has(r: &VerifyReport, prop: &str) -> bool {
    r.violations.iter().any(|v| v.property.contains(prop))
}

#[test]
fn lr_positive() {
    let t = parse_tree("((..)(..))").unwrap();
    // Left rule: left child down-left, right child below the left subtree.
    assert!(is_lr_drawing(&t, &drawing(DrawingKind::Lr, &[(1, 0), (0, -1), (1, -2)])).pass);
    // Right rule, mirrored.
    assert!(is_lr_drawing(&t, &drawing(DrawingKind::Lr, &[(0, 0), (0, -2), (1, -1)])).pass);
    let p = parse_tree("((..).)").unwrap();
    assert!(is_lr_drawing(&p, &drawing(DrawingKind::Lr, &[(0, 0), (0, -1)])).pass);
    assert!(is_lr_drawing(&p, &drawing(DrawingKind::Lr, &[(0, 0), (-1, -1)])).pass);
}

#[test]
fn lr_violations() {
    let t = parse_tree("((..)(..))").unwrap();
    let r = is_lr_drawing(&t, &drawing(DrawingKind::Lr, &[(0, 0), (-1, -1), (0, -1)]));
    assert!(!r.pass && has(&r, "one_node_per_row"));

    let p = parse_tree("((..).)").unwrap();
    let r = is_lr_drawing(&p, &drawing(DrawingKind::Lr, &[(0, 0), (-1, 1)]));
    assert!(!r.pass && has(&r, "upward"));

    let r = is_lr_drawing(&p, &drawing(DrawingKind::Lr, &[(0, 0), (-3, -1)]));
    assert!(!r.pass && has(&r, "lr_rule"));

    // Right child not directly below the left subtree.
    let r = is_lr_drawing(&t, &drawing(DrawingKind::Lr, &[(1, 0), (0, -1), (2, -2)]));
    assert!(!r.pass && has(&r, "lr_rule"));

    let r = is_lr_drawing(&t, &drawing(DrawingKind::Lr, &[(0, 0)]));
    assert!(!r.pass);
}

#[test]
fn planar_straightline_cases() {
    let p = pts(&[(0, 0), (2, 2), (0, 2), (2, 0)]);
    assert!(!is_planar_straightline(&p, &[(0, 1), (2, 3)]).pass);
    assert!(is_planar_straightline(&p, &[(0, 2), (1, 3)]).pass);
    // Shared endpoint is fine, overlap is not.
    let c = pts(&[(0, 0), (2, 0), (1, 0), (3, 0)]);
    assert!(is_planar_straightline(&c, &[(0, 2), (2, 3)]).pass);
    assert!(!is_planar_straightline(&c, &[(0, 1), (2, 3)]).pass);
    // An edge ending in the interior of another.
    let t = pts(&[(0, 0), (2, 0), (1, 0), (1, 3)]);
    assert!(!is_planar_straightline(&t, &[(0, 1), (2, 3)]).pass);
    let dup = pts(&[(0, 0), (0, 0)]);
    let r = is_planar_straightline(&dup, &[]);
    assert!(!r.pass && has(&r, "distinct_points"));
}

#[test]
fn star_positive() {
    for s in ["(..)", "((..)(..))", "((.(..))(..))", "(((..)(..))((..).))"] {
        let t = parse_tree(s).unwrap();
        for d in [bell_like_drawing(&t), flat_drawing(&t)] {
            assert!(is_star_shaped(&t, &d).pass, "{s}");
            assert!(is_star_shaped_with(&t, &d, StarOptions { exhaustive: true }).pass, "{s}");
        }
    }
}

#[test]
fn star_violations() {
    let t = parse_tree("((..)(..))").unwrap();

    let mut d = bell_like_drawing(&t);
    d.apexes = None;
    assert!(has(&is_star_shaped(&t, &d), "apexes_missing"));

    // Children swapped: apex edges cross.
    let mut d = drawing(DrawingKind::BellLike, &[(0, 0), (1, -1), (-1, -1)]);
    d.apexes = Some([Point::new(-2, 1), Point::new(2, 1)]);
    assert!(!is_star_shaped(&t, &d).pass);

    // Apexes in the wrong order.
    let mut d = flat_drawing(&t);
    let [a, b] = d.apexes.unwrap();
    d.apexes = Some([b, a]);
    let r = is_star_shaped(&t, &d);
    assert!(!r.pass && has(&r, "property4"), "{}", r.to_json());

    // Apex on a node.
    let mut d = flat_drawing(&t);
    d.apexes = Some([d.points[1], d.apexes.unwrap()[1]]);
    assert!(!is_star_shaped(&t, &d).pass);

    // Left-right polygon of the root is degenerate: a straight chain.
    let z = parse_tree("((.(..)).)").unwrap();
    let mut d = drawing(DrawingKind::BellLike, &[(0, 0), (-1, -1), (-2, -2)]);
    d.apexes = Some([Point::new(-5, 1), Point::new(3, 1)]);
    let r = is_star_shaped(&z, &d);
    assert!(!r.pass, "{}", r.to_json());
    assert!(!is_star_shaped_with(&z, &d, StarOptions { exhaustive: true }).pass);

    // Same tree, the chain bends the wrong way (clockwise polygon).
    let mut d = drawing(DrawingKind::BellLike, &[(0, 0), (-1, -2), (-1, -1)]);
    d.apexes = Some([Point::new(-5, 1), Point::new(3, 1)]);
    assert!(!is_star_shaped(&z, &d).pass);

    // Coincident nodes.
    let mut d = drawing(DrawingKind::BellLike, &[(0, 0), (-1, -1), (-1, -1)]);
    d.apexes = Some([Point::new(-5, 1), Point::new(3, 1)]);
    let r = is_star_shaped(&t, &d);
    assert!(!r.pass && has(&r, "property1"));
}

#[test]
fn bell_cases() {
    let t = complete_tree(3).unwrap();
    assert!(is_bell_like(&t, &bell_like_drawing(&t)).pass);
    let r = is_bell_like(&t, &flat_drawing(&t));
    assert!(!r.pass && has(&r, "bell_root_on_top"));

    let p = parse_tree("((..).)").unwrap();
    let r = is_bell_like(&p, &drawing(DrawingKind::BellLike, &[(0, 0), (-1, 1)]));
    assert!(has(&r, "bell_root_on_top"));

    // Root on top, but its right child hangs down-left, so an apex at the
    // top-right corner is collinear with that edge.
    let r1 = parse_tree("(.(..))").unwrap();
    let r = is_bell_like(&r1, &drawing(DrawingKind::BellLike, &[(0, 0), (-1, -1)]));
    assert!(has(&r, "bell_probe_property4"), "{}", r.to_json());
    assert!(is_bell_like(&r1, &drawing(DrawingKind::BellLike, &[(0, 0), (1, -1)])).pass);
}

#[test]
fn flat_cases() {
    let t = complete_tree(3).unwrap();
    assert!(is_flat(&t, &flat_drawing(&t)).pass);
    assert!(!is_flat(&t, &bell_like_drawing(&t)).pass);

    let r = parse_tree("(.(..))").unwrap();
    let v = is_flat(&r, &drawing(DrawingKind::Flat, &[(0, 0), (0, -1)]));
    assert!(has(&v, "flat_rightmost_up"));
    let v = is_flat(&r, &drawing(DrawingKind::Flat, &[(0, 0), (1, 1)]));
    assert!(has(&v, "flat_left_side"));
    assert!(is_flat(&r, &drawing(DrawingKind::Flat, &[(0, 0), (0, 1)])).pass);

    let l = parse_tree("((..).)").unwrap();
    let v = is_flat(&l, &drawing(DrawingKind::Flat, &[(0, 0), (0, 1)]));
    assert!(has(&v, "flat_leftmost_down"));
    assert!(is_flat(&l, &drawing(DrawingKind::Flat, &[(0, 0), (0, -1)])).pass);
}

#[test]
fn outerplanar_cases() {
    let sq = OuterplanarGraph::new(4, [(0, 2)]).unwrap();
    let ok = drawing(DrawingKind::Outerplanar, &[(0, 0), (0, 1), (1, 1), (1, 0)]);
    assert!(is_outerplanar_drawing(&sq, &ok).pass);
    // Either orientation of the outer cycle is accepted.
    let ccw = drawing(DrawingKind::Outerplanar, &[(0, 0), (1, 0), (1, 1), (0, 1)]);
    assert!(is_outerplanar_drawing(&sq, &ccw).pass);

    // Vertex 3 inside the triangle 0, 1, 2: planar, but not on the outer face.
    let dart = drawing(DrawingKind::Outerplanar, &[(0, 0), (4, 0), (2, 4), (2, 1)]);
    let r = is_outerplanar_drawing(&sq, &dart);
    assert!(!r.pass && has(&r, "outer_face"), "{}", r.to_json());

    // Bow tie: outer cycle crosses itself.
    let c4 = OuterplanarGraph::new(4, []).unwrap();
    let bow = drawing(DrawingKind::Outerplanar, &[(0, 0), (1, 1), (1, 0), (0, 1)]);
    assert!(has(&is_outerplanar_drawing(&c4, &bow), "planar"));

    // All on a line.
    let c3 = OuterplanarGraph::new(3, []).unwrap();
    let line = drawing(DrawingKind::Outerplanar, &[(0, 0), (1, 0), (2, 0)]);
    assert!(!is_outerplanar_drawing(&c3, &line).pass);

    let short = drawing(DrawingKind::Outerplanar, &[(0, 0), (1, 0)]);
    assert!(has(&is_outerplanar_drawing(&c3, &short), "vertex_set"));
}

#[test]
fn report_json_and_merge() {
    let mut r = VerifyReport::ok();
    assert!(r.pass);
    let p = parse_tree("((..).)").unwrap();
    r.merge(is_lr_drawing(&p, &drawing(DrawingKind::Lr, &[(0, 0), (-1, 1)])));
    assert!(!r.pass);
    let j: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
    assert_eq!(j["pass"], false);
    assert!(!j["violations"].as_array().unwrap().is_empty());
}

#[test]
fn closing_edge_examples() {
    let t = parse_tree("((.(..)).)").unwrap();
    let r = t.root();
    let x = t.right(t.left(r).unwrap()).unwrap();
    assert_eq!(closing_edges(&t), vec![(r, x)]);
    assert!(closing_edges(&complete_tree(2).unwrap()).is_empty());
}
