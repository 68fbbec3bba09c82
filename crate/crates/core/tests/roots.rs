use std::collections::HashSet;
use std::sync::Arc;

use hyperschubert::roots::*;

fn group(f: Family, r: usize) -> WeylGroup {
    let sys = RootSystem::new(CartanSpec::new(f, r).unwrap()).unwrap();
    WeylGroup::new(Arc::new(sys)).unwrap()
}

fn all_specs() -> Vec<(Family, usize)> {
    let mut v = vec![(Family::G2, 2)];
    for r in 1..=4 {
        v.push((Family::A, r));
    }
    for r in 2..=4 {
        v.push((Family::B, r));
        v.push((Family::C, r));
    }
    v.push((Family::D, 3));
    v.push((Family::D, 4));
    v
}

/// Closure of the generating matrices under multiplication, without reduced words.
fn brute_order(g: &WeylGroup) -> usize {
    let sys = g.system();
    let r = sys.rank();
    let gens: Vec<Vec<Vec<i32>>> = (0..r)
        .map(|i| (0..r).map(|j| sys.reflect_simple(i, &sys.simple(j))).collect())
        .collect();
    let apply = |m: &Vec<Vec<i32>>, g: &Vec<Vec<i32>>| -> Vec<Vec<i32>> {
        // compose: images of simple roots under m∘g
        g.iter()
            .map(|col| {
                let mut out = vec![0; r];
                for (k, &c) in col.iter().enumerate() {
                    for t in 0..r {
                        out[t] += c * m[k][t];
                    }
                }
                out
            })
            .collect()
    };
    let id: Vec<Vec<i32>> = (0..r).map(|j| sys.simple(j)).collect();
    let mut seen = HashSet::new();
    seen.insert(id.clone());
    let mut stack = vec![id];
    while let Some(m) = stack.pop() {
        for gm in &gens {
            let p = apply(&m, gm);
            if seen.insert(p.clone()) {
                stack.push(p);
            }
        }
    }
    seen.len()
}

fn product_formula(f: Family, r: usize) -> usize {
    let fact = |n: usize| (1..=n).product::<usize>();
    match f {
        Family::A => fact(r + 1),
        Family::B | Family::C => (1 << r) * fact(r),
        Family::D => (1 << (r - 1)) * fact(r),
        Family::G2 => 12,
    }
}

#[test]
fn group_orders_match_product_formula() {
    for (f, r) in all_specs() {
        let g = group(f, r);
        assert_eq!(g.size(), product_formula(f, r), "{f}{r}");
        assert_eq!(brute_order(&g), g.size(), "{f}{r}");
        assert_eq!(g.len(g.longest()), g.system().num_positive());
    }
}

#[test]
fn small_root_data() {
    let a2 = group(Family::A, 2);
    assert_eq!(a2.system().positive_roots(), &[vec![1, 0], vec![0, 1], vec![1, 1]]);
    assert_eq!(a2.act(a2.generator(0), &[0, 1]), vec![1, 1]);
    let c2 = group(Family::C, 2);
    assert_eq!(c2.size(), 8);
    assert_eq!(c2.system().num_positive(), 4);
    let c3 = group(Family::C, 3);
    assert_eq!(c3.size(), 48);
    assert_eq!(c3.len(c3.longest()), 9);
}

#[test]
fn length_changes_by_one() {
    for (f, r) in all_specs() {
        let g = group(f, r);
        for w in g.elements() {
            for i in 0..r {
                let d = g.len(g.mul_gen(w, i)) as i64 - g.len(w) as i64;
                assert!(d == 1 || d == -1);
            }
            assert_eq!(g.from_word(g.word(w)).unwrap(), w);
            assert_eq!(g.word(w).len(), g.len(w));
            assert_eq!(g.mul(w, g.inverse(w)), 0);
        }
    }
}

#[test]
fn longest_sends_positive_to_negative() {
    for (f, r) in all_specs() {
        let g = group(f, r);
        for a in g.system().positive_roots() {
            assert!(g.act(g.longest(), a).iter().all(|&x| x <= 0));
        }
        assert!(g.pos_pos_set(g.longest()).is_empty());
        assert_eq!(g.pos_pos_set(0).len(), g.system().num_positive());
    }
}

fn reduced_words(g: &WeylGroup, w: usize) -> Vec<Vec<usize>> {
    if w == 0 {
        return vec![vec![]];
    }
    let mut out = vec![];
    for i in 0..g.rank() {
        if g.is_right_descent(w, i) {
            for mut p in reduced_words(g, g.mul_gen(w, i)) {
                p.push(i);
                out.push(p);
            }
        }
    }
    out
}

fn subwords(word: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for &x in word {
        let mut more: Vec<Vec<usize>> = out.iter().map(|p| {
            let mut q = p.clone();
            q.push(x);
            q
        }).collect();
        out.append(&mut more);
    }
    out
}

#[test]
fn bruhat_matches_subword_definition() {
    for (f, r) in all_specs().into_iter().filter(|(_, r)| *r <= 3) {
        let g = group(f, r);
        for w in g.elements() {
            let mut below = HashSet::new();
            for word in reduced_words(&g, w) {
                for sub in subwords(&word) {
                    if g.is_reduced(&sub) {
                        below.insert(g.from_word(&sub).unwrap());
                    }
                }
            }
            for v in g.elements() {
                assert_eq!(g.bruhat_leq(v, w), below.contains(&v), "{f}{r}");
            }
        }
    }
}

#[test]
fn tableau_and_proctor_criteria_agree() {
    let a3 = group(Family::A, 3);
    for v in a3.elements() {
        for w in a3.elements() {
            assert_eq!(tableau_leq_a(&a3, v, w).unwrap(), a3.bruhat_leq(v, w));
        }
    }
    for r in [2, 3] {
        let c = group(Family::C, r);
        for v in c.elements() {
            for w in c.elements() {
                assert_eq!(proctor_leq(&c, v, w).unwrap(), c.bruhat_leq(v, w));
            }
        }
    }
}

#[test]
fn s3_bruhat_examples() {
    let g = group(Family::A, 2);
    let s1 = g.from_word(&[0]).unwrap();
    let s12 = g.from_word(&[0, 1]).unwrap();
    let s21 = g.from_word(&[1, 0]).unwrap();
    assert!(g.bruhat_leq(s1, s12));
    assert!(!g.bruhat_leq(s12, s21) && !g.bruhat_leq(s21, s12));
}

#[test]
fn reflections() {
    let g = group(Family::A, 2);
    assert_eq!(g.reflection(&[1, 1]).unwrap(), g.from_word(&[0, 1, 0]).unwrap());
    for (f, r) in all_specs() {
        let g = group(f, r);
        for i in 0..r {
            assert_eq!(g.reflection(&g.system().simple(i)).unwrap(), g.generator(i));
        }
        for b in g.system().positive_roots() {
            let s = g.reflection(b).unwrap();
            assert_eq!(g.mul(s, s), 0);
            let neg: Vec<i32> = b.iter().map(|x| -x).collect();
            assert_eq!(g.act(s, b), neg);
        }
    }
    let s1 = g.generator(0);
    assert_eq!(g.pos_pos_set(s1), vec![vec![0, 1], vec![1, 1]]);
}

#[test]
fn windows_round_trip() {
    for (f, r) in all_specs().into_iter().filter(|(f, _)| *f != Family::G2) {
        let g = group(f, r);
        for w in g.elements() {
            let win = window(&g, w).unwrap();
            assert_eq!(from_window(&g, &win).unwrap(), w);
            assert_eq!(parse_elem(&g, &render_elem(&g, w)).unwrap(), w);
        }
    }
    let a2 = group(Family::A, 2);
    // s1 s2 sends 1→2→3: one-line 231
    assert_eq!(render_elem(&a2, a2.from_word(&[0, 1]).unwrap()), "231");
    let c2 = group(Family::C, 2);
    assert_eq!(render_elem(&c2, c2.generator(0)), "-1 2");
    assert_eq!(render_elem(&c2, c2.generator(1)), "2 1");
    assert_eq!(parse_elem(&c2, "s1,s0,s1").unwrap(), c2.from_word(&[1, 0, 1]).unwrap());
    let ext = extended_window(&c2, c2.generator(0)).unwrap();
    assert_eq!(ext, vec![(-1, -2), (0, 1), (1, -1), (2, 2)]);
}

#[test]
fn pattern_avoidance() {
    let a3 = group(Family::A, 3);
    assert!(avoids_patterns_a(&a3, 0).unwrap());
    assert!(!avoids_patterns_a(&a3, parse_elem(&a3, "3412").unwrap()).unwrap());
    assert!(!avoids_patterns_a(&a3, parse_elem(&a3, "4231").unwrap()).unwrap());
    assert_eq!((0..24).filter(|&w| avoids_patterns_a(&a3, w).unwrap()).count(), 22);
}

#[test]
fn highest_coset_representatives() {
    let a2 = group(Family::A, 2);
    let w = highest_coset_rep(&a2, 2).unwrap();
    assert_eq!(render_elem(&a2, w), "312");
    assert_eq!(a2.len(w), 2);
    for n in 2..=5usize {
        let g = group(Family::A, n - 1);
        let big_n = n * (n - 1) / 2;
        for m in 2..=n as i32 {
            let w = highest_coset_rep(&g, m).unwrap();
            assert_eq!(g.len(w) as i32, big_n as i32 - m + 1);
            assert!(avoids_patterns_a(&g, g.inverse(w)).unwrap());
            for u in g.elements() {
                let last = *window(&g, u).unwrap().last().unwrap();
                assert_eq!(g.bruhat_leq(u, w), last >= m);
            }
        }
    }
    for n in 2..=4i32 {
        let g = group(Family::C, n as usize);
        let big_n = n * n;
        for m in (-(n - 1)..=n).filter(|&m| m != 0) {
            let w = highest_coset_rep(&g, m).unwrap();
            let expect = if m > 0 { big_n - (m + n - 1) } else { big_n - (m + n) };
            assert_eq!(g.len(w) as i32, expect, "C{n} m={m}");
        }
    }
    assert!(highest_coset_rep(&a2, 1).is_err());
}
