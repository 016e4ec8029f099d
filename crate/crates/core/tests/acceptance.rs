//! The acceptance gate: one test per criterion, each an exact identity
//! sweep at its pinned scale, printing one pass/fail line. Everything
//! here is structural equality; there are no tolerances.

use kgrass::ext_weyl::{
    infinite_partition_to_element, infinite_partition_word, kappa, partition_to_grassmannian,
    partition_word, AffineWord, ExtWeylElement,
};
use kgrass::partition::Partition;
use kgrass::root_data::{type_a_pgl, type_c_adjoint, FinitePerm};
use kgrass::verify::{om_pieri, run_suite, special_classes, Report, Scale};

fn gate(criterion: &str, r: &Report) {
    let status = if r.passed() { "PASS" } else { "FAIL" };
    println!("[{status}] {criterion}: {} cases, {} failures", r.cases, r.failures.len());
    assert!(r.passed(), "{criterion}: {:?}", r.failures);
}

#[test]
fn criterion_01_d_sum_identity() {
    // D_w = Σ_{v ≤ w} T_v for all w ∈ Ŵ⁰ with ℓ(w) ≤ 5, n = 3 and 4,
    // plus fundamental-twisted samples.
    let r = run_suite(
        "dsum",
        Scale {
            max_len: 5,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 1 (D-sum identity)", &r);
}

#[test]
fn criterion_02_special_class_oracles() {
    // g_{ρ_i} and g_{ρ'_i} equal the closed-form hook expansions at
    // cap 7 for n = 4, 5, all i, and the b = 0 values are h_i and
    // Σ_r C(i−1,r) e_{r+1}.
    let r = special_classes(Scale::default());
    gate("criterion 2 (special-class oracles)", &r);
}

#[test]
fn criterion_03_om_pieri() {
    // Both Ω-Pieri identities at cap 6 for n = 3, 4 (the column
    // product bounds are the corrected j-dependent ones).
    let r = om_pieri(Scale::default());
    gate("criterion 3 (Ω-Pieri)", &r);
}

#[test]
fn criterion_04_cross_representation_ring_check() {
    // g_u·g_v = Σ_w e_{uv}^w g_w with the structure constants computed
    // on the nil-Hecke side; n = 3, cap 8, ℓ(u)+ℓ(v) ≤ 5 over the
    // affine Grassmannian elements.
    let r = run_suite(
        "cross-rep",
        Scale {
            cap: 8,
            max_len: 5,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 4 (cross-representation ring check)", &r);
}

#[test]
fn criterion_05_k_rectangle_factorization() {
    // Function side for n = 3 (all |λ| ≤ 4, all i) and the n = 5,
    // λ = (3,1), i = 2 instance; nil-Hecke side factorizations and the
    // recorded PGL_3 worked example.
    let r = run_suite(
        "rectangle",
        Scale {
            max_size: 4,
            cap: 6,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 5 (k-rectangle factorization)", &r);
}

#[test]
fn criterion_06_involution() {
    let r = run_suite(
        "involution",
        Scale {
            cap: 8,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 6 (k-conjugation involution)", &r);
}

#[test]
fn criterion_07_hopf() {
    let r = run_suite(
        "hopf",
        Scale {
            cap: 8,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 7 (Hopf structure)", &r);
}

#[test]
fn criterion_08_centralizer() {
    let r = run_suite(
        "centralizer",
        Scale {
            cap: 7,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 8 (centralizer family)", &r);
}

#[test]
fn criterion_09_appendices() {
    // Molev Jacobi–Trudi (both determinants, |λ| ≤ 4, cap 6), the
    // k-small comparison at n = 4, and the reverse-plane-partition
    // oracle for ĝ_λ(y|0), |λ| ≤ 4.
    let r = run_suite(
        "jacobi-trudi",
        Scale {
            cap: 6,
            ..Scale::default()
        },
    )
    .unwrap();
    gate("criterion 9 (infinite-rank appendices)", &r);
}

#[test]
fn criterion_10_weyl_layer_golden_values() {
    let mut failures: Vec<String> = Vec::new();
    let mut cases = 0;

    // κ_2 in A_5 (PGL_6): word (4,3,5,4,0,5,1,0), byte-exact from the
    // rectangle bijection, and a reduced word of κ_2.
    {
        cases += 1;
        let d = type_a_pgl(6).unwrap();
        let word = partition_word(&Partition::rectangle(6, 2), 6);
        let recorded = vec![4usize, 3, 5, 4, 0, 5, 1, 0];
        let k2 = kappa(&d, 2).unwrap();
        let built = ExtWeylElement::from_word(
            &d,
            &AffineWord {
                class: 0,
                word: recorded.clone(),
            },
        );
        if word != recorded || built != k2 || k2.length() != recorded.len() {
            failures.push("κ_2 word in A_5".into());
        }
    }

    // κ_1, κ_2, κ_3 in adjoint C_3.
    {
        let d = type_c_adjoint(3).unwrap();
        let recorded: [(usize, &[usize]); 3] = [
            (1, &[1, 2, 3, 2, 1, 0]),
            (2, &[2, 3, 2, 1, 0, 2, 3, 2, 1, 0]),
            (3, &[0, 1, 0, 2, 1, 0]),
        ];
        for (i, word) in recorded {
            cases += 1;
            let k = kappa(&d, i).unwrap();
            let built = ExtWeylElement::from_word(
                &d,
                &AffineWord {
                    class: 0,
                    word: word.to_vec(),
                },
            );
            if built != k || k.length() != word.len() {
                failures.push(format!("κ_{i} word in C_3"));
            }
        }
    }

    // u_1,…,u_4 in PGL_5, with their maximal coset lengths i(n−i).
    {
        let d = type_a_pgl(5).unwrap();
        let words: [&[usize]; 4] = [
            &[1, 2, 3, 4],
            &[2, 3, 4, 1, 2, 3],
            &[3, 4, 2, 3, 1, 2],
            &[4, 3, 2, 1],
        ];
        for (idx, word) in words.iter().enumerate() {
            cases += 1;
            let i = idx + 1;
            let (_, u) = d.fundamental_element(i as i64);
            let built = word.iter().fold(FinitePerm::identity(5), |acc, &j| {
                acc.compose(&d.simple_reflection_perm(j))
            });
            let len = ExtWeylElement::from_perm(&d, u.clone()).length();
            if u != built || len != i * (5 - i) || len != word.len() {
                failures.push(format!("u_{i} in PGL_5"));
            }
        }
    }

    // w_λ in S_Z: the recorded word s_{−3}(s_{−1}s_{−2})(s_0s_{−1})(s_2s_1s_0)
    // is the canonical word of λ = (3,2,2,1) (the source text labels it
    // (4,2,2,1), whose canonical word carries one more letter).
    {
        cases += 1;
        let lam = Partition::new(vec![3, 2, 2, 1]);
        let recorded: Vec<i64> = vec![-3, -1, -2, 0, -1, 2, 1, 0];
        let w = infinite_partition_to_element(&lam);
        if infinite_partition_word(&lam) != recorded
            || w.length() as u32 != lam.size()
            || !w.is_zero_grassmannian()
        {
            failures.push("w_λ word in S_Z".into());
        }
        if infinite_partition_word(&Partition::new(vec![4, 2, 2, 1]))
            != vec![-3, -1, -2, 0, -1, 3, 2, 1, 0]
        {
            failures.push("w_{(4,2,2,1)} word in S_Z".into());
        }
    }

    // The PGL_3 element with word s_2 s_0 s_1 s_0 s_2 s_1 s_0: byte-
    // exact from the bijection at λ = (2,2,1,1,1) (the source labels it
    // (2,2,2,1)); Grassmannian of length 7.
    {
        cases += 1;
        let d = type_a_pgl(3).unwrap();
        let lam = Partition::new(vec![2, 2, 1, 1, 1]);
        let recorded = vec![2usize, 0, 1, 0, 2, 1, 0];
        let x = partition_to_grassmannian(&d, &lam).unwrap();
        let built = ExtWeylElement::from_word(
            &d,
            &AffineWord {
                class: 0,
                word: recorded.clone(),
            },
        );
        if partition_word(&lam, 3) != recorded || built != x || x.length() != 7 {
            failures.push("x word in PGL_3".into());
        }
    }

    let r = Report {
        suite: "golden-weyl".into(),
        cases,
        failures,
    };
    gate("criterion 10 (Weyl-layer golden values)", &r);
}
