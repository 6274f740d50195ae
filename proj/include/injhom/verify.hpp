#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace injhom {

struct SuiteReport {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;

    auto ok() const -> bool { return failed == 0 && passed > 0; }
};

/// lemma-D, lemma-B, gadget-F, reductions, oracle-equivalence.
auto suite_names() -> std::vector<std::string>;

/// Runs one named property suite, writing a PASS/FAIL line per item to out.
/// Throws InvalidParameter for an unknown suite.
auto run_suite(const std::string & name, std::ostream & out) -> SuiteReport;

} // namespace injhom
