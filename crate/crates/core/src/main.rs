// Copyright 2026 grover-dfs Contributors
// SPDX-License-Identifier: Apache-2.0

fn main() {
    std::process::exit(grover_dfs::experiments::cli::run(std::env::args_os()));
}
