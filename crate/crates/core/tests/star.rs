use lrdraw::drawing::{DrawingKind, GridDrawing, Point};
use lrdraw::lr_opt::rep_sequence;
use lrdraw::star_strong::*;
use lrdraw::star_weak::{base_width, bell_like_drawing, flat_drawing};
use lrdraw::tree::*;
use lrdraw::verify::*;
use lrdraw::worst_case::lower_bound_tree;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use std::collections::BTreeSet;

fn check_bell(t: &Tree, d: &GridDrawing) {
    let mut r = is_star_shaped(t, d);
    r.merge(is_bell_like(t, d));
    assert!(r.pass, "{t}: {}", r.to_json());
}

fn check_flat(t: &Tree, d: &GridDrawing) {
    let mut r = is_star_shaped(t, d);
    r.merge(is_flat(t, d));
    assert!(r.pass, "{t}: {}", r.to_json());
}

fn check_weak(t: &Tree, exhaustive: bool) {
    let n = t.len() as i64;
    let w = base_width(t) as i64;
    assert_eq!(w, rep_sequence(t).min_width() as i64);
    let b = bell_like_drawing(t);
    let f = flat_drawing(t);
    check_bell(t, &b);
    check_flat(t, &f);
    assert!(b.width() <= 4 * w - 2, "{t}: bell width {} vs omega {w}", b.width());
    assert!(f.width() <= 4 * w, "{t}: flat width {} vs omega {w}", f.width());
    assert!(b.height() <= n && f.height() <= n);
    if exhaustive {
        let opts = StarOptions { exhaustive: true };
        assert!(is_star_shaped_with(t, &b, opts).pass, "{t}");
        assert!(is_star_shaped_with(t, &f, opts).pass, "{t}");
    }
}

#[test]
fn weak_examples() {
    let t = Tree::single();
    let b = bell_like_drawing(&t);
    assert_eq!(b.points, vec![Point::new(0, 0)]);
    assert_eq!(b.kind, DrawingKind::BellLike);
    let f = flat_drawing(&t);
    assert_eq!(f.kind, DrawingKind::Flat);
    let [p, q] = f.apexes.unwrap();
    assert!(p.x < 0 && q.x < 0 && p != q);
    check_weak(&t, true);

    let t3 = lower_bound_tree(3);
    check_weak(&t3, true);
    assert!(bell_like_drawing(&t3).width() <= 26);
    check_weak(&complete_tree(5).unwrap(), true);
    check_weak(&path_tree(&[Dir::Left, Dir::Right, Dir::Left, Dir::Left, Dir::Right]), true);
}

#[test]
fn weak_all_small_trees() {
    for n in 1..=10 {
        for t in all_trees(n) {
            check_weak(&t, n <= 7);
        }
    }
}

#[test]
fn weak_random_trees() {
    for seed in 0..600u64 {
        let n = 1 + (seed as usize * 7919) % 300;
        check_weak(&random_tree(n, seed).unwrap(), false);
    }
}

#[test]
fn choose_a_examples() {
    assert_eq!(choose_a(1), 1);
    assert_eq!(choose_a(2), 1);
    assert_eq!(choose_a(256), 16);
    assert_eq!(choose_a(1 << 18), 4096);
    for n in 1..5000 {
        let a = choose_a(n);
        assert!(a >= 1 && a <= n);
    }
}

#[test]
fn count_switches_examples() {
    use Dir::*;
    assert!(count_switches(&[]).is_empty());
    assert!(count_switches(&[Left, Left, Left]).is_empty());
    assert_eq!(count_switches(&[Left, Right, Left, Right]), vec![0, 1, 2]);
    assert_eq!(count_switches(&[Right, Right, Left, Left, Right]), vec![1, 3]);
}

#[test]
fn spine_examples() {
    // With A = n every child qualifies, so the spine is the heavy path.
    let t = parse_tree("(((..).)(..))").unwrap();
    let sd = spine(&t, t.root(), 1);
    assert_eq!(sd.spine, vec![t.root()]);
    let sd = spine(&t, t.root(), 4);
    assert_eq!(sd.spine.len(), 3);
    assert_eq!(sd.dirs, vec![Dir::Left, Dir::Left]);
    assert_eq!(sd.off[0], t.right(t.root()));

    // Ties go right.
    let c = complete_tree(3).unwrap();
    let sd = spine(&c, c.root(), 7);
    assert_eq!(sd.dirs, vec![Dir::Right, Dir::Right]);
    assert_eq!(sd.right_tail, vec![*sd.spine.last().unwrap()]);

    let p = path_tree(&[Dir::Left, Dir::Right, Dir::Right, Dir::Left]);
    let sd = spine(&p, p.root(), 5);
    assert_eq!(sd.spine.len(), 5);
    assert_eq!(sd.switches, vec![0, 2]);
}

fn check_spine(t: &Tree, v: usize, a: usize) -> Result<(), TestCaseError> {
    let size = t.subtree_sizes();
    let n = size[v];
    let need = n.saturating_sub(a);
    let sd = spine(t, v, a);
    let k = sd.spine.len();
    prop_assert_eq!(sd.spine[0], v);
    prop_assert_eq!(sd.dirs.len(), k - 1);
    for i in 0..k - 1 {
        prop_assert_eq!(t.child(sd.spine[i], sd.dirs[i]), Some(sd.spine[i + 1]));
        prop_assert_eq!(sd.off[i], t.child(sd.spine[i], sd.dirs[i].flip()));
        prop_assert!(sd.off[i].map_or(0, |c| size[c]) <= a);
    }
    let last = sd.spine[k - 1];
    prop_assert!(size[last] >= need);
    for c in [t.left(last), t.right(last)].into_iter().flatten() {
        prop_assert!(size[c] < need);
    }
    prop_assert_eq!(sd.tail_subtrees.len(), sd.right_tail.len());
    for (&u, &l) in sd.right_tail.iter().zip(&sd.tail_subtrees) {
        prop_assert_eq!(t.left(u), l);
        prop_assert!(l.map_or(0, |c| size[c]) < need.max(1));
    }
    prop_assert_eq!(sd.switches.clone(), count_switches(&sd.dirs));
    Ok(())
}

proptest! {
    #[test]
    fn spines_are_heavy_paths(n in 1usize..400, seed in any::<u64>(), frac in 0.0f64..1.0) {
        let t = random_tree(n, seed).unwrap();
        let a = ((n as f64 * frac) as usize).max(1);
        check_spine(&t, t.root(), a)?;
        check_spine(&t, t.root(), choose_a(n))?;
    }
}

/// Random-direction spine with small random subtrees hanging off the other
/// side and a random subtree as the right tail.
fn zigzag(n_spine: usize, seed: u64, off_max: usize, tail: usize) -> Tree {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut b = Builder::default();
    let root = b.push();
    let mut cur = root;
    for _ in 0..n_spine {
        let d = if rng.gen_bool(0.5) { Dir::Left } else { Dir::Right };
        let c = b.push();
        b.set_child(cur, d, c);
        let k = rng.gen_range(0..=off_max);
        if k > 0 {
            let s = random_tree(k, rng.gen()).unwrap();
            let r = b.graft(&s);
            b.set_child(cur, d.flip(), r);
        }
        cur = c;
    }
    if tail > 0 {
        let s = random_tree(tail, rng.gen()).unwrap();
        let r = b.graft(&s);
        b.set_child(cur, Dir::Right, r);
    }
    let t = b.finish(root);
    t.subtree(t.root()).0
}

fn check_strong(t: &Tree, thr: usize) -> Vec<&'static str> {
    let n = t.len() as i64;
    let f = strong_flat(t, thr);
    let b = strong_bell(t, thr);
    check_flat(t, &f.drawing);
    check_bell(t, &b.drawing);
    assert!(f.drawing.height() <= n && b.drawing.height() <= n);
    let mut cases = Vec::new();
    for row in f.trace.iter().chain(&b.trace) {
        assert!(row.ok(), "{t} thr {thr}: {row:?}");
        cases.push(row.case);
    }
    cases
}

#[test]
fn strong_zigzag_families_hit_every_case() {
    let mut seen = BTreeSet::new();
    for seed in 0..250u64 {
        let t = zigzag(10 + seed as usize % 60, seed, seed as usize % 4, (seed as usize % 7) * 3);
        let n = t.len();
        for thr in [choose_a(n), 2, 5, n / 4, n / 2] {
            seen.extend(check_strong(&t, thr));
        }
    }
    for case in [
        "weak_flat",
        "weak_bell",
        "flat_zigzag",
        "flat_many",
        "bell_few",
        "bell_many_gap",
        "bell_many_adjacent",
    ] {
        assert!(seen.contains(case), "{case} never used; saw {seen:?}");
    }
}

#[test]
fn strong_random_trees_meet_per_call_bounds() {
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 7919) % 500;
        let t = random_tree(n, seed).unwrap();
        check_strong(&t, choose_a(n));
    }
}

#[test]
fn strong_every_level_is_valid() {
    for seed in 0..60u64 {
        let t = zigzag(20 + seed as usize % 40, seed, 3, 6);
        let n = t.len();
        for kind in [StrongKind::Flat, StrongKind::Bell] {
            let res = strong_drawing(&t, kind, n / 3, true);
            assert_eq!(res.levels.len(), res.trace.len());
            for lvl in &res.levels {
                let d = &lvl.drawing;
                assert_eq!(d.points.len(), lvl.tree.len());
                assert!(d.height() <= lvl.tree.len() as i64);
                match d.kind {
                    DrawingKind::Flat => check_flat(&lvl.tree, d),
                    DrawingKind::BellLike => check_bell(&lvl.tree, d),
                    k => panic!("unexpected kind {k:?}"),
                }
            }
        }
    }
}

#[test]
fn strong_small_trees_use_the_weak_drawings() {
    for n in 1..=WEAK_FLOOR {
        let t = random_tree(n, n as u64).unwrap();
        assert_eq!(strong_flat_drawing(&t).points, flat_drawing(&t).points);
        assert_eq!(strong_bell_drawing(&t).points, bell_like_drawing(&t).points);
    }
}

#[test]
fn verifier_catches_swapped_points() {
    let mut caught = 0;
    let mut total = 0;
    for seed in 0..40u64 {
        let t = zigzag(30, seed, 1, 6);
        let n = t.len();
        let res = strong_bell(&t, n / 2);
        for i in 0..10 {
            let a = (seed as usize * 31 + i * 17) % n;
            let b = (a + 1 + i) % n;
            if a == b {
                continue;
            }
            let mut d = res.drawing.clone();
            d.points.swap(a, b);
            total += 1;
            let mut r = is_star_shaped(&t, &d);
            r.merge(is_bell_like(&t, &d));
            if !r.pass {
                caught += 1;
            }
        }
    }
    assert_eq!(caught, total);
}

#[test]
fn trace_csv_shape() {
    let t = random_tree(300, 9).unwrap();
    let res = strong_flat(&t, choose_a(300));
    let csv = trace_to_csv(&res.trace);
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,A,s,case,width,bound,height"));
    assert_eq!(lines.count(), res.trace.len());
    let top = res.trace.iter().find(|r| r.n == 300).unwrap();
    assert_eq!(top.width, res.drawing.width());
}

#[test]
fn growth_examples() {
    // 2^sqrt(20) * sqrt(10) at n = 1024
    let g = growth(1024);
    assert!((g - 20f64.sqrt().exp2() * 10f64.sqrt()).abs() < 1e-9);
    assert!(growth(1 << 16) > growth(1 << 14));
}
