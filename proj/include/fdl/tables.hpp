#pragma once

#include <string>
#include <vector>

namespace fdl {

/// One reference row: a level-1 profile, or a level-2 sequence together with
/// the level-1 profile it lifts to, and the reported bound.
struct ReferenceRow {
    std::vector<int> sequence;
    int level;                    // 1 or 2
    std::vector<int> lifted;      // equals sequence when level == 1
    std::string reported_B;
};

struct ReferenceTable {
    int number;
    std::string title;
    int m;
    int k;
    std::vector<ReferenceRow> rows;
};

/// The four reference tables of representable bounds (M=16,k=6 and M=26,k=10).
const std::vector<ReferenceTable>& reference_tables();

}  // namespace fdl
