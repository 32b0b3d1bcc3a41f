use std::fs;

use teh_net::cli::{run, EXIT_CHECK_FAILED, EXIT_DOMAIN, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};

fn tehnet(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tehnet").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn table_three_text() {
    let (code, out, _) = tehnet(&["table", "--id", "3", "--format", "text"]);
    assert_eq!(code, EXIT_OK);
    let expected = "\
failures  (4, 4, 8)  (4, 4, 16)  (4, 4, 32)  (4, 4, 64)
1              85.7        87.5        88.9          90
2              71.4          75        77.8          80
3              57.1        62.5        66.7          70
4              42.9          50        55.6          60
5              28.6        37.5        44.4          50
6              14.3          25        33.3          40
7                00        12.5        22.2          30
8                 —          00        11.1          20
9                 —           —          00          10
";
    assert_eq!(out, expected);
}

#[test]
fn metrics_csv_row() {
    let (code, out, _) = tehnet(&[
        "metrics", "--family", "teh", "--l", "16", "--m", "16", "--cube", "4", "--format", "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "family,l,m,N,nodes,degree,links,diameter,cost,convention\nteh,16,16,4,1024,6,3072,18,55296,exact\n");
}

#[test]
fn metrics_paper_convention() {
    let (_, out, _) = tehnet(&[
        "metrics",
        "--l",
        "16",
        "--m",
        "32",
        "--cube",
        "16",
        "--format",
        "csv",
        "--convention",
        "paper",
    ]);
    assert!(
        out.ends_with("teh,16,32,16,8192,8,32768,26,851968,paper\n"),
        "{out}"
    );
}

#[test]
fn metrics_json_flags_short_rings() {
    let (_, out, _) = tehnet(&[
        "metrics", "--l", "2", "--m", "2", "--cube", "8", "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["closed_form_exact"], false);
    assert_eq!(doc["links"], 112);
    assert_eq!(doc["simple_links"], 80);
}

#[test]
fn route_json() {
    let (code, out, _) = tehnet(&[
        "route", "--family", "teh", "--l", "2", "--m", "2", "--cube", "8", "--from", "0,0,0",
        "--to", "1,1,5", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["length"], 4);
    assert_eq!(
        doc["moves"],
        serde_json::json!(["ColPlus", "RowPlus", "CubeDim(0)", "CubeDim(2)"])
    );
    assert_eq!(doc["hops"][4], "1,1,5");
}

#[test]
fn route_text_shows_label_bits() {
    let (_, out, _) = tehnet(&[
        "route", "--l", "2", "--m", "2", "--cube", "8", "--from", "0,0,0", "--to", "1,1,5",
    ]);
    assert!(out.contains("1,1,5  k=5 (101)  CubeDim(2)"), "{out}");
}

#[test]
fn tables_one_and_two() {
    let (_, t1, _) = tehnet(&["table", "--id", "1", "--format", "csv"]);
    assert!(t1.contains("\n2048,11264,4096,7168,8192\n"));
    let (_, t2, _) = tehnet(&["table", "--id", "2", "--format", "csv"]);
    assert!(t2.contains("\n8192,692224,1474560,774144,851968\n"));
    let (_, t2exact, _) = tehnet(&[
        "table",
        "--id",
        "2",
        "--format",
        "csv",
        "--convention",
        "exact",
    ]);
    assert!(
        t2exact.contains("\n512,20736,24576,21760,20480\n"),
        "{t2exact}"
    );
}

#[test]
fn reliability_custom_specs() {
    let (code, out, _) = tehnet(&[
        "reliability",
        "--f-max",
        "2",
        "--spec",
        "4,4,16",
        "--format",
        "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "failures,\"(4, 4, 16)\"\n1,87.5\n2,75.0\n");
}

#[test]
fn simulate_endpoints() {
    let (_, out, _) = tehnet(&[
        "simulate", "--l", "4", "--m", "4", "--cube", "8", "--f", "7", "--trials", "100",
        "--format", "csv",
    ]);
    assert!(out.ends_with(",7,100,0,0.000000\n"), "{out}");
    let (_, out, _) = tehnet(&[
        "simulate", "--l", "4", "--m", "4", "--cube", "8", "--f", "0", "--trials", "100",
        "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(doc["estimate"], 1.0);
    assert_eq!(doc["target"], "2,2,7");
}

#[test]
fn export_formats() {
    let (_, csv, _) = tehnet(&[
        "export",
        "--family",
        "hypercube",
        "--cube",
        "2",
        "--format",
        "csv",
    ]);
    assert_eq!(csv, "src_index,dst_index,kind\n0,1,hypercube_dim_0\n");
    let (_, dot, _) = tehnet(&["export", "--family", "torus", "--l", "3", "--m", "3"]);
    assert!(dot.starts_with("graph teh {"));
    let (code, out, err) = tehnet(&[
        "export", "--family", "torus", "--l", "3", "--m", "3", "--format", "png",
    ]);
    assert_eq!((code, out.as_str()), (EXIT_DOMAIN, ""));
    assert!(err.contains("unsupported format"));
}

#[test]
fn scale_sequences() {
    let (_, out, _) = tehnet(&[
        "scale", "--l", "4", "--m", "4", "--cube", "16", "--mode", "torus", "--steps", "3",
        "--format", "csv",
    ]);
    assert_eq!(
        out,
        "step,l,m,N,nodes,degree,existing_nodes_reconfigured\n\
         0,4,4,16,256,8,false\n1,4,8,16,512,8,false\n2,8,8,16,1024,8,false\n3,8,16,16,2048,8,false\n"
    );
}

#[test]
fn exit_codes() {
    let (code, out, err) = tehnet(&["metrics", "--l", "4", "--m", "4", "--cube", "6"]);
    assert_eq!(code, EXIT_DOMAIN);
    assert!(out.is_empty());
    assert_eq!(err, "error: hypercube size 6 is not a power of two\n");

    let (code, _, err) = tehnet(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert_eq!(err.lines().count(), 1);

    let (code, _, _) = tehnet(&[
        "metrics",
        "--family",
        "hypercube",
        "--l",
        "3",
        "--cube",
        "8",
    ]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _, _) = tehnet(&[
        "metrics", "--l", "3", "--m", "3", "--cube", "8", "--format", "xml",
    ]);
    assert_eq!(code, EXIT_USAGE);

    let (code, out, _) = tehnet(&[
        "export",
        "--l",
        "64",
        "--m",
        "64",
        "--cube",
        "64",
        "--max-nodes",
        "1000",
    ]);
    assert_eq!((code, out.as_str()), (EXIT_RESOURCE, ""));

    let (code, _, _) = tehnet(&[
        "route", "--l", "2", "--m", "2", "--cube", "8", "--from", "0,0,0", "--to", "2,0,0",
    ]);
    assert_eq!(code, EXIT_DOMAIN);

    let (code, out, _) = tehnet(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("self-check"));
}

#[test]
fn output_is_deterministic() {
    let cases: &[&[&str]] = &[
        &["table", "--id", "2", "--format", "json"],
        &[
            "export", "--l", "3", "--m", "3", "--cube", "4", "--format", "json",
        ],
        &[
            "simulate", "--l", "4", "--m", "4", "--cube", "16", "--f", "4", "--trials", "200",
            "--seed", "42",
        ],
        &[
            "metrics", "--l", "5", "--m", "3", "--cube", "2", "--format", "json",
        ],
    ];
    for args in cases {
        assert_eq!(tehnet(args), tehnet(args), "{args:?}");
    }
}

#[test]
fn self_check_reports_groups() {
    let (code, out, _) = tehnet(&["self-check", "--max-nodes", "512"]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 7);
    for name in [
        "links-oracle",
        "diameter-oracle",
        "routing-oracle",
        "vertex-transitivity",
        "table-1",
        "table-3",
    ] {
        assert!(
            lines
                .iter()
                .any(|l| l.starts_with(&format!("PASS {name}:"))),
            "{name}: {out}"
        );
    }
    // The published cost table has two cells the square-torus convention does not reproduce.
    assert!(
        lines
            .iter()
            .any(|l| l.starts_with("FAIL table-2: 2 of 24 cells differ")),
        "{out}"
    );
    assert_eq!(code, EXIT_CHECK_FAILED);
}

#[test]
fn self_check_detects_corrupted_reference() {
    let dir = std::env::temp_dir().join(format!("tehnet-golden-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    let golden = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("golden");
    for name in ["table1.csv", "table2.csv", "table3.csv"] {
        fs::copy(golden.join(name), dir.join(name)).unwrap();
    }
    let t3 = fs::read_to_string(dir.join("table3.csv"))
        .unwrap()
        .replace("33.3", "33.4");
    fs::write(dir.join("table3.csv"), t3).unwrap();
    let (code, out, _) = tehnet(&[
        "self-check",
        "--max-nodes",
        "64",
        "--golden-dir",
        dir.to_str().unwrap(),
    ]);
    fs::remove_dir_all(&dir).unwrap();
    assert_eq!(code, EXIT_CHECK_FAILED);
    assert!(out.contains("FAIL table-3: 1 of 36 cells differ"), "{out}");
}
