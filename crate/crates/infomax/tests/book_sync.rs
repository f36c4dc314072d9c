//! Keeps the book's code snippets byte-identical to the crate's doc-tests.
//!
//! Every fenced `rust` block in a book chapter must appear verbatim as a
//! doc-test block in the module the chapter documents. Doc-tests run under
//! `cargo test`, so this guarantees each snippet in the book compiles and
//! passes exactly as printed.

use std::path::PathBuf;

/// (book chapter, source file whose `//!` doc-tests it mirrors)
const PAIRS: &[(&str, &str)] = &[
    ("introduction.md", "src/lib.rs"),
    ("probability.md", "src/prob.rs"),
    ("chase.md", "src/chase.rs"),
    ("meanfield.md", "src/meanfield.rs"),
    ("filtering.md", "src/filter.rs"),
    ("environments.md", "src/env.rs"),
    ("spiking.md", "src/spiking.rs"),
];

fn manifest_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

/// Fenced code blocks opened with exactly ```` ```rust ````.
fn rust_blocks_in_markdown(text: &str) -> Vec<String> {
    blocks(text, "```rust")
}

/// Fenced blocks inside the file's `//!` doc comments (rustdoc uses bare
/// ```` ``` ```` fences, implying Rust).
fn doc_test_blocks(source: &str) -> Vec<String> {
    let doc_text: String = source
        .lines()
        .filter_map(|l| {
            let l = l.trim_start();
            l.strip_prefix("//! ")
                .or_else(|| l.strip_prefix("//!"))
                .map(|s| format!("{s}\n"))
        })
        .collect();
    blocks(&doc_text, "```")
}

fn blocks(text: &str, open_fence: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut current: Option<String> = None;
    for line in text.lines() {
        match &mut current {
            None if line.trim() == open_fence => current = Some(String::new()),
            None => {}
            Some(buf) => {
                if line.trim() == "```" {
                    out.push(std::mem::take(buf));
                    current = None;
                } else {
                    buf.push_str(line);
                    buf.push('\n');
                }
            }
        }
    }
    out
}

#[test]
fn every_book_snippet_is_a_doc_test() {
    let root = manifest_dir();
    let book_src = root.join("../../book/src");
    for (chapter, source) in PAIRS {
        let chapter_text = std::fs::read_to_string(book_src.join(chapter))
            .unwrap_or_else(|e| panic!("read {chapter}: {e}"));
        let source_text = std::fs::read_to_string(root.join(source)).unwrap();
        let wanted = rust_blocks_in_markdown(&chapter_text);
        assert!(
            !wanted.is_empty(),
            "{chapter} contains no rust snippets to check"
        );
        let have = doc_test_blocks(&source_text);
        for block in &wanted {
            assert!(
                have.contains(block),
                "snippet in {chapter} is not byte-identical to any doc-test \
                 in {source}:\n{block}"
            );
        }
    }
}

#[test]
fn summary_lists_every_chapter() {
    let book_src = manifest_dir().join("../../book/src");
    let summary = std::fs::read_to_string(book_src.join("SUMMARY.md")).unwrap();
    for (chapter, _) in PAIRS {
        assert!(summary.contains(chapter), "SUMMARY.md missing {chapter}");
    }
    assert!(summary.contains("cli.md"));
}
