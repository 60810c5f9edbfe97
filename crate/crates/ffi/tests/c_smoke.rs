//! Compiles a small C program against the generated header and the static
//! library, then runs it.

use std::path::PathBuf;
use std::process::Command;

const PROGRAM: &str = r#"
#include <stdio.h>
#include <string.h>
#include "axicover.h"

int main(void) {
    const char *doc = "{\"k\":2,\"parts\":[[\"a\",\"b\"],[\"x\"]],\"edges\":[[\"a\",\"x\"],[\"b\",\"x\"]]}";
    AxHypergraph *h = NULL;
    if (ax_hypergraph_parse(doc, &h) != AX_STATUS_OK) return 10;
    size_t parts = 0, vertices = 0, edges = 0;
    ax_hypergraph_counts(h, &parts, &vertices, &edges);
    char *rep = NULL;
    AxStatus s = ax_recognize(h, 0, 0, false, &rep);
    if (s != AX_STATUS_OK) return 11;
    if (ax_verify(h, rep) != AX_STATUS_OK) return 12;
    printf("%zu %zu %zu %s\n", parts, vertices, edges, rep);
    ax_string_free(rep);
    ax_hypergraph_free(h);
    if (ax_hypergraph_parse("[", &h) != AX_STATUS_INVALID_INPUT) return 13;
    if (strstr(ax_last_error_message(), "malformed") == NULL) return 14;
    return 0;
}
"#;

/// A separate target directory, so the nested build does not wait on the
/// lock held by the `cargo test` that runs this file.
fn target_dir() -> PathBuf {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    std::env::var_os("CARGO_TARGET_DIR")
        .map(PathBuf::from)
        .unwrap_or_else(|| manifest.join("../../target"))
        .join("c-smoke")
}

#[test]
fn c_program_links_and_runs() {
    let manifest = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    let status = Command::new(env!("CARGO"))
        .args(["build", "--quiet", "-p", "axicover-ffi", "--lib", "--target-dir"])
        .arg(target_dir())
        .current_dir(&manifest)
        .status()
        .expect("cargo runs");
    assert!(status.success());
    let lib = target_dir().join("debug").join("libaxicover_ffi.a");
    assert!(lib.exists(), "missing {}", lib.display());

    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join("smoke.c");
    let exe = dir.path().join("smoke");
    std::fs::write(&src, PROGRAM).unwrap();
    let compiled = Command::new("cc")
        .arg(&src)
        .arg("-I")
        .arg(manifest.join("include"))
        .arg(&lib)
        .args(["-lpthread", "-ldl", "-lm", "-o"])
        .arg(&exe)
        .output()
        .expect("cc runs");
    assert!(compiled.status.success(), "{}", String::from_utf8_lossy(&compiled.stderr));

    let run = Command::new(&exe).output().unwrap();
    assert!(run.status.success(), "exit {:?}", run.status.code());
    let stdout = String::from_utf8(run.stdout).unwrap();
    assert!(stdout.starts_with("2 3 2 {\"d\":2,\"ell\":1,"), "{stdout}");
}
