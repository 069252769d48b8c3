#pragma once

#include <string>
#include <vector>

#include "nakayama/report.hpp"

namespace testutil {

inline nakayama::KupischSeries ks(const std::string& text) {
    return nakayama::KupischSeries::parse(text);
}

/// Every admissible sequence of length n with entries <= max_loewy,
/// normalized or not, by plain odometer enumeration.
inline std::vector<nakayama::KupischSeries> all_admissible(int n, int max_loewy) {
    std::vector<nakayama::KupischSeries> out;
    std::vector<int> c(static_cast<std::size_t>(n), 1);
    for (;;) {
        if (nakayama::is_admissible(c)) out.emplace_back(c);
        int i = 0;
        while (i < n && c[static_cast<std::size_t>(i)] == max_loewy) {
            c[static_cast<std::size_t>(i)] = 1;
            ++i;
        }
        if (i == n) break;
        ++c[static_cast<std::size_t>(i)];
    }
    return out;
}

inline std::vector<nakayama::KupischSeries> all_admissible_upto(int n_max, int max_loewy) {
    std::vector<nakayama::KupischSeries> out;
    for (int n = 1; n <= n_max; ++n)
        for (auto& a : all_admissible(n, max_loewy)) out.push_back(std::move(a));
    return out;
}

inline std::vector<nakayama::KupischSeries> normalized_upto(int n_max, int max_loewy) {
    std::vector<nakayama::KupischSeries> out;
    for (int n = 1; n <= n_max; ++n)
        for (auto& a : nakayama::enumerate_normalized(n, max_loewy)) out.push_back(std::move(a));
    return out;
}

} // namespace testutil
