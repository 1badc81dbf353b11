use crate::tree::{Builder, Dir, Tree};

/// sigma_l = sigma_{l-1}, l, sigma_{l-1}, with sigma_1 = [1].
pub fn ruler_sequence(level: u32) -> Vec<u32> {
    assert!(level >= 1, "ruler sequences start at level 1");
    let mut s = vec![1];
    for l in 2..=level {
        let prev = s.clone();
        s.push(l);
        s.extend(prev);
    }
    s
}

/// pi_l = pi_{l-1}, 2^l - 1, pi_{l-1}, with pi_1 = [1].
pub fn pi_sequence(level: u32) -> Vec<u64> {
    assert!(level >= 1, "pi sequences start at level 1");
    let mut s = vec![1u64];
    for l in 2..=level {
        let prev = s.clone();
        s.push((1u64 << l) - 1);
        s.extend(prev);
    }
    s
}

/// The tree T_h whose LR-drawings all have width at least 2^h - 1.
pub fn lower_bound_tree(h: u32) -> Tree {
    assert!(h >= 1, "T_h is defined for h >= 1");
    let mut family: Vec<Tree> = vec![Tree::single()];
    for level in 2..=h {
        let k = 1usize << (level - 1);
        let sigma = ruler_sequence(level - 1);
        let prev = &family[(level - 2) as usize];
        let mut b = Builder::default();
        let root = b.push();
        let mut u = root;
        for &s in sigma.iter().take(k - 1) {
            let sub = &family[(s - 1) as usize];
            let l = b.graft(sub);
            b.set_child(u, Dir::Left, l);
            let v = b.push();
            b.set_child(u, Dir::Right, v);
            let r = b.graft(sub);
            b.set_child(v, Dir::Right, r);
            let next = b.push();
            b.set_child(v, Dir::Left, next);
            u = next;
        }
        let l = b.graft(prev);
        let r = b.graft(prev);
        b.set_child(u, Dir::Left, l);
        b.set_child(u, Dir::Right, r);
        let t = b.finish(root);
        family.push(t.subtree(t.root()).0);
    }
    family.pop().expect("family is non-empty")
}

/// (3 + sqrt 5)^h as (a, b) meaning a + b*sqrt(5).
pub fn sqrt5_power(h: u32) -> (i128, i128) {
    let (mut a, mut b) = (1i128, 0i128);
    for _ in 0..h {
        // (a + b r)(3 + r) = 3a + 5b + (a + 3b) r
        let na = 3i128.checked_mul(a).and_then(|x| x.checked_add(5 * b)).expect("overflow");
        let nb = a.checked_add(3 * b).expect("overflow");
        a = na;
        b = nb;
    }
    (a, b)
}

/// |T_h| <= (3 + sqrt 5)^h, decided exactly.
pub fn node_count_bound_check(h: u32) -> bool {
    let n = lower_bound_tree(h).len() as i128;
    let (a, b) = sqrt5_power(h);
    n <= a || (n - a) * (n - a) <= 5 * b * b
}
