#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "crochet/catalog.hpp"
#include "crochet/verify.hpp"

namespace crochet::checks {

/// Default fixture directory, fixed at configure time.
std::filesystem::path default_fixture_dir();
std::filesystem::path default_expected_csv();

/// Worked-example trace (maps and graphs), the H13 build from the C4
/// hyperedge, and the decorated C4 + pendant graph.
std::vector<Check> fixtures(const std::filesystem::path& dir);

/// Cells of the catalog's table for j against the expected long CSV, plus
/// classes the catalog has but the CSV lacks.
Check table_matches(const Catalog& catalog, int j,
                    const std::map<std::tuple<int, int, int>, long>& expected);

/// Named cells that must hold regardless of the CSV.
Check cells_match(const Catalog& catalog, int j,
                  const std::vector<std::tuple<int, int, long>>& cells);

/// Every connected pattern with 1..k vertices built with per-step checks and
/// passed through verify_build. Detail names the first failure.
Check verify_all(int k);

/// order_invariance with `trials` orders for every connected pattern with
/// at most `max_order` vertices.
Check order_invariance_all(int max_order, int trials, std::uint64_t seed);

/// Branch and bound against brute force on `count` random graphs with at
/// most `max_n` vertices.
Check alpha_agreement(int count, int max_n, std::uint64_t seed);

/// graph6 encode/decode round trip on `count` random graphs.
Check graph6_round_trip(int count, std::uint64_t seed);

/// Criterion-4 rows from reference files j6.g6 and j7.g6 in `dir`.
Check reference_rows(const Catalog& catalog, const std::filesystem::path& dir);

/// "PASS name detail" / "FAIL name detail".
std::string line(const Check& c);

}  // namespace crochet::checks
