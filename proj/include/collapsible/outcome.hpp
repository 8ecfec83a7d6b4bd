#pragma once

#include <cstdint>
#include <string>

namespace collapsible {

/// Three-valued search result. Indeterminate means the budget ran out.
enum class Verdict { Yes, No, Indeterminate };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Yes:
        return "Yes";
    case Verdict::No:
        return "No";
    case Verdict::Indeterminate:
        break;
    }
    return "Indeterminate";
}

struct SearchStats {
    std::uint64_t nodes_expanded = 0;
    std::uint64_t memo_hits = 0;
};

/// Budget unit: expanded search nodes for exhaustive searches, restarts for greedy ones.
struct Budget {
    std::uint64_t nodes = 10'000'000;
    std::uint64_t restarts = 10'000;
};

} // namespace collapsible
