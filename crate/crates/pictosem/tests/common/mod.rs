#![allow(dead_code)]

use std::path::PathBuf;

use pictosem::corpus::load_corpus;
use pictosem::Resources;
use pictosem_core::GoldItem;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(name)
}

pub fn resources() -> Resources {
    Resources::load(&data("demo.lex"), &data("dict.json"), &data("templates.json"))
        .expect("bundled data loads")
}

pub fn corpus(name: &str) -> Vec<GoldItem> {
    load_corpus(&std::fs::read_to_string(data(name)).unwrap()).expect("bundled corpus loads")
}
