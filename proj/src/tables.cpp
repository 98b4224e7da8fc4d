#include "fdl/tables.hpp"

namespace fdl {

namespace {

ReferenceRow top(std::vector<int> profile, std::string b) {
    return ReferenceRow{profile, 1, profile, std::move(b)};
}

ReferenceRow lifted(std::vector<int> level_two, std::vector<int> profile, std::string b) {
    return ReferenceRow{std::move(level_two), 2, std::move(profile), std::move(b)};
}

}  // namespace

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables{
        {1,
         "adjacent gaps larger than one, level 1",
         16,
         6,
         {top({3, 3, 2, 1, 5, 2}, "3543"), top({3, 3, 2, 2, 4, 2}, "4327"), top({3, 3, 2, 3, 3, 2}, "4599"),
          top({3, 3, 2, 4, 2, 2}, "4359"), top({3, 3, 2, 5, 1, 2}, "3607")}},
        {2,
         "comparison rule A, level 1",
         16,
         6,
         {top({2, 3, 2, 3, 3, 3}, "4231"), top({3, 2, 2, 3, 3, 3}, "4395"), top({3, 2, 3, 2, 3, 3}, "4439"),
          top({3, 2, 3, 3, 2, 3}, "4455"), top({3, 2, 3, 3, 3, 2}, "4579"), top({3, 3, 2, 3, 3, 2}, "4599"),
          top({3, 3, 3, 2, 3, 2}, "4599")}},
        {3,
         "adjacent gaps larger than one, level 2",
         26,
         10,
         {lifted({1, 1, 5, 1, 1, 1}, {3, 3, 3, 2, 2, 2, 2, 3, 3, 3}, "1072727"),
          lifted({1, 1, 4, 2, 1, 1}, {3, 3, 3, 2, 2, 2, 3, 2, 3, 3}, "1084591"),
          lifted({1, 1, 3, 3, 1, 1}, {3, 3, 3, 2, 2, 3, 2, 2, 3, 3}, "1086295"),
          lifted({1, 1, 2, 4, 1, 1}, {3, 3, 3, 2, 3, 2, 2, 2, 3, 3}, "1084655"),
          lifted({1, 1, 1, 5, 1, 1}, {3, 3, 3, 3, 2, 2, 2, 2, 3, 3}, "1073111")}},
        {4,
         "comparison rule B, level 2",
         26,
         10,
         {lifted({2, 2, 2, 1, 2, 1}, {3, 2, 3, 2, 3, 2, 3, 3, 2, 3}, "1104735"),
          lifted({2, 2, 1, 2, 2, 1}, {3, 2, 3, 2, 3, 3, 2, 3, 2, 3}, "1104799"),
          lifted({2, 2, 1, 2, 1, 2}, {3, 2, 3, 2, 3, 3, 2, 3, 3, 2}, "1136415"),
          lifted({2, 1, 2, 2, 1, 2}, {3, 2, 3, 3, 2, 3, 2, 3, 3, 2}, "1136495"),
          lifted({1, 2, 2, 2, 1, 2}, {3, 3, 2, 3, 2, 3, 2, 3, 3, 2}, "1140511"),
          lifted({1, 2, 2, 1, 2, 2}, {3, 3, 2, 3, 2, 3, 3, 2, 3, 2}, "1141023"),
          lifted({1, 2, 1, 2, 2, 2}, {3, 3, 2, 3, 3, 2, 3, 2, 3, 2}, "1141023")}},
    };
    return tables;
}

}  // namespace fdl
