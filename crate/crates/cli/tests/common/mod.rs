//! Golden-file cases shared by the golden and acceptance test targets.

use std::path::{Path, PathBuf};
use std::process::Command;

/// Commands run from `tests/`; file arguments are relative to it.
pub const CASES: &[(&str, &[&str])] = &[
    ("slat_check_chain2", &["slat", "check", "../../core/corpus/chain2.slat"]),
    ("slat_check_bad_syntax", &["slat", "check", "golden/inputs/bad_syntax.slat"]),
    ("slat_check_not_assoc", &["slat", "check", "golden/inputs/not_assoc.slat"]),
    ("slat_check_missing", &["slat", "check", "golden/inputs/missing.slat"]),
    ("slat_order_boolean2", &["slat", "order", "../../core/corpus/boolean2.slat"]),
    ("slat_characters_chain2", &["slat", "characters", "../../core/corpus/chain2.slat"]),
    ("slat_characters_div12", &["slat", "characters", "../../core/corpus/div12.slat"]),
    ("slat_characters_size_limit", &["slat", "characters", "golden/inputs/chain21.slat"]),
    ("slat_dual_chain2", &["slat", "dual", "../../core/corpus/chain2.slat"]),
    ("slat_dual_boolean2_tsv", &["--format", "tsv", "slat", "dual", "../../core/corpus/boolean2.slat"]),
    ("slat_double_dual_div30", &["slat", "double-dual", "../../core/corpus/div30.slat"]),
    ("slat_double_dual_chain3_tsv", &["slat", "double-dual", "../../core/corpus/chain3.slat", "--format", "tsv"]),
    ("slat_ev_rank_boolean3", &["slat", "ev-rank", "../../core/corpus/boolean3.slat"]),
    ("balg_axioms_chain3", &["balg", "axioms", "../../core/corpus/chain3.slat"]),
    ("balg_axioms_div12_tsv", &["--format", "tsv", "balg", "axioms", "../../core/corpus/div12.slat"]),
    ("balg_quotient_chain3", &["balg", "quotient", "../../core/corpus/chain3.slat", "--glue", "n2=n3"]),
    ("balg_quotient_boolean2", &["balg", "quotient", "../../core/corpus/boolean2.slat", "--glue", "{1}={1,2}"]),
    ("balg_quotient_bad_glue", &["balg", "quotient", "../../core/corpus/chain3.slat", "--glue", "n1=n2,n3"]),
    ("balg_quotient_unknown_label", &["balg", "quotient", "../../core/corpus/chain3.slat", "--glue", "n1=n9"]),
    ("graded_verify_ut3", &["graded", "verify", "../../core/corpus/ut3.galg"]),
    ("graded_verify_bad_degree", &["graded", "verify", "golden/inputs/bad_degree.galg"]),
    (
        "graded_act_ut2_f1",
        &["graded", "act", "../../core/corpus/ut2.galg", "--char", "f1", "--element", "E11:1,E12:2,E22:3"],
    ),
    (
        "graded_act_ut2_f2_tsv",
        &[
            "graded",
            "act",
            "../../core/corpus/ut2.galg",
            "--char",
            "f2",
            "--element",
            "E11:1,E12:2,E22:3",
            "--format",
            "tsv",
        ],
    ),
    ("graded_act_bad_element", &["graded", "act", "../../core/corpus/ut2.galg", "--char", "f1", "--element", "E11:x"]),
    ("graded_act_missing_char", &["graded", "act", "../../core/corpus/ut2.galg", "--element", "E11:1"]),
    ("graded_module_algebra_ut3", &["graded", "module-algebra", "../../core/corpus/ut3.galg"]),
    ("graded_module_algebra_ut1", &["graded", "module-algebra", "../../core/corpus/ut1.galg"]),
    ("graded_action_table_ut2", &["graded", "action-table", "../../core/corpus/ut2.galg"]),
    ("graded_action_table_ut2_tsv", &["graded", "action-table", "../../core/corpus/ut2.galg", "--format", "tsv"]),
    ("graded_ut_size3", &["graded", "ut", "--size", "3"]),
    ("graded_ut_labels", &["graded", "ut", "--size", "2", "--labels", "2,7"]),
    ("graded_ut_bad_labels", &["graded", "ut", "--size", "2", "--labels", "7,2"]),
    ("nbar_is_char_threshold", &["nbar", "is-char", "--prefix", "1,1,1", "--tail", "0"]),
    ("nbar_is_char_top", &["nbar", "is-char", "--tail", "1"]),
    ("nbar_is_char_none", &["nbar", "is-char", "--prefix", "3,3,2", "--tail", "5"]),
    ("nbar_decompose_example", &["nbar", "decompose", "--prefix", "3,3,2", "--tail", "5"]),
    ("nbar_decompose_halves_tsv", &["nbar", "decompose", "--prefix", "-1/2,2,2,0", "--tail", "3/2", "--format", "tsv"]),
    ("nbar_decompose_bad_prefix", &["nbar", "decompose", "--prefix", "3,x", "--tail", "5"]),
    ("nbar_translate_basis", &["nbar", "translate-basis", "--prefix", "3,3,2", "--tail", "5"]),
    ("nbar_translate_basis_zero_tail", &["nbar", "translate-basis", "--prefix", "1,-2", "--tail", "0"]),
    ("nbar_det_generic", &["nbar", "det", "--row", "3,-1,2,1"]),
    ("nbar_det_degenerate", &["nbar", "det", "--row", "2,2,1"]),
    ("lp_mul_signs", &["lp", "mul", "(x2|1)", "(x1|1)", "--odd-letters", "1,2"]),
    ("lp_mul_odd_square", &["lp", "mul", "(x1|1)", "(x1|1)", "--odd-letters", "1"]),
    ("lp_mul_mixed", &["lp", "mul", "1/2*(x1|2) + 3", "(x2|1) - (x1|3)", "--odd-places", "2"]),
    ("lp_weight", &["lp", "weight", "(x1|1)*(x2|3) + 2 - (x2|2)"]),
    ("lp_act_z1", &["lp", "act", "(x1|1)*(x2|3) + (x1|1) - 3/2", "--z", "1"]),
    ("lp_act_neg_inf", &["lp", "act", "(x1|1) + 4", "--z", "-inf"]),
    ("lp_act_pos_inf_tsv", &["lp", "act", "(x1|1)*(x2|3) + 4", "--z", "+inf", "--format", "tsv"]),
    ("lp_act_missing_z", &["lp", "act", "(x1|1)"]),
    ("lp_embed", &["lp", "embed", "1,2,1", "2,2", "--odd-letters", "2"]),
    ("lp_parse_error", &["lp", "mul", "(x1|1)", "(x1 2)"]),
    ("unknown_flag", &["slat", "check", "--bogus", "../../core/corpus/chain2.slat"]),
];

pub fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

pub fn golden_path(name: &str) -> PathBuf {
    tests_dir().join("golden").join(format!("{name}.out"))
}

/// Stdout, then stderr and the exit status, as one transcript.
pub fn run_case(args: &[&str]) -> String {
    let out =
        Command::new(env!("CARGO_BIN_EXE_semidual")).args(args).current_dir(tests_dir()).output().expect("binary runs");
    let mut text = String::from_utf8(out.stdout).expect("utf-8 stdout");
    let stderr = String::from_utf8(out.stderr).expect("utf-8 stderr");
    if !stderr.is_empty() {
        text.push_str("--- stderr\n");
        text.push_str(&stderr);
    }
    text.push_str(&format!("--- exit {}\n", out.status.code().unwrap_or(-1)));
    text
}
