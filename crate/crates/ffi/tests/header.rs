use std::path::PathBuf;
use std::process::Command;

fn header_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("include/plane_forest.h")
}

#[test]
fn declares_every_export() {
    let header = std::fs::read_to_string(header_path()).unwrap();
    for name in [
        "pf_last_error",
        "pf_count_rooted",
        "pf_count_plane",
        "pf_count_flows",
        "pf_plane_tree_from_code",
        "pf_plane_tree_free",
        "pf_plane_tree_serialize",
        "pf_plane_tree_vertex_count",
        "pf_plane_tree_is_bicentral",
        "pf_plane_tree_equal",
        "pf_flow_record",
        "pf_validate_flow_graph",
        "pf_catalog_new",
        "pf_catalog_len",
        "pf_catalog_get",
        "pf_catalog_free",
        "typedef struct PfPlaneTree PfPlaneTree;",
        "typedef struct PfCatalog PfCatalog;",
        "PF_STATUS_OK = 0",
        "PF_STATUS_INTERNAL = 12",
        "PF_MODE_MIRROR = 1",
    ] {
        assert!(header.contains(name), "header lacks {name}");
    }
}

/// Compiles a small C file against the header when a C compiler is around.
#[test]
fn header_compiles_as_c() {
    let Ok(cc) = Command::new("cc").arg("--version").output() else {
        eprintln!("no C compiler, skipping");
        return;
    };
    if !cc.status.success() {
        return;
    }
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("use.c");
    std::fs::write(
        &src,
        "#include \"plane_forest.h\"\n\
         int check(void) {\n\
           uint64_t n = 0;\n\
           PfPlaneTree *t = NULL;\n\
           PfStatus s = pf_count_rooted(4, &n);\n\
           s = pf_plane_tree_from_code(\"(())\", PF_MODE_ORIENTED, &t);\n\
           pf_plane_tree_free(t);\n\
           return s == PF_STATUS_OK && n == 14;\n\
         }\n",
    )
    .unwrap();
    let out = Command::new("cc")
        .args(["-std=c99", "-Wall", "-Werror", "-fsyntax-only", "-I"])
        .arg(header_path().parent().unwrap())
        .arg(&src)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}
